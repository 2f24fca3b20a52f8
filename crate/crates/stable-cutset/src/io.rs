//! Plain-text instance and set-system files.
//!
//! Graph instances use a DIMACS-style line format. Vertex ids are 1-based
//! in text and 0-based in memory; everything else is carried verbatim:
//!
//! ```text
//! c  free-form comment
//! p edge <n> <m>          header; m must match the number of e lines
//! e <u> <v>               an edge, 1-based endpoints
//! w <kind> <v1> <v2> ...  optional witness (kinds: vc tc cluster clique
//!                         cocluster linforest path ds)
//! cs <v...>               certificate cutset S (all three certificate
//! ca <v...>               lines appear together or not at all; cs may
//! cb <v...>               list no vertices)
//! t <rule> d <v...>       trace event: deletion, 1-based original ids
//! t <rule> yes|no         trace event: decision
//! r <v> <role>            role annotation; if present, every vertex has
//!                         exactly one (role tags as printed by Role)
//! ```
//!
//! Set systems use `p ss <n> <m>` with `s <e1> <e2> ...` member lines
//! (1-based elements, empty sets allowed), an optional budget `k <int>`,
//! and an optional coloring `col <c1> ... <cn>` with colors in `1..=k`.
//!
//! Emission is canonical — sections in the order above, edges sorted —
//! so `parse(emit(x)) == x` and reruns are byte-identical.

use thiserror::Error;

use crate::gadgets::Role;
use crate::graph::Graph;
use crate::set_system::{SetSystem, SetSystemError};
use crate::trace::{RuleId, RuleTrace, TraceEvent};
use crate::witness::{CutsetCertificate, Witness, WitnessKind};

/// Parse errors, with 1-based line numbers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: expected {expected}")]
    Malformed { line: usize, expected: &'static str },
    #[error("line {line}: vertex {id} out of range 1..={n}")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at vertex {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: unknown witness kind `{tag}`")]
    UnknownKind { line: usize, tag: String },
    #[error("line {line}: unknown rule `{tag}`")]
    UnknownRule { line: usize, tag: String },
    #[error("line {line}: unknown role `{tag}`")]
    UnknownRole { line: usize, tag: String },
    #[error("header declares {declared} edges but the file has {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("header declares {declared} sets but the file has {found}")]
    SetCountMismatch { declared: usize, found: usize },
    #[error("certificate needs all three of cs, ca, cb")]
    PartialCertificate,
    #[error("role lines must cover every vertex exactly once")]
    IncompleteRoles,
    #[error("invalid set system: {0}")]
    System(#[from] SetSystemError),
}

/// A parsed instance file: the graph plus whatever optional sections the
/// file carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub graph: Graph,
    pub witness: Option<Witness>,
    pub certificate: Option<CutsetCertificate>,
    pub trace: Option<RuleTrace>,
    pub roles: Option<Vec<Role>>,
}

impl InstanceFile {
    /// An instance with only the mandatory graph section.
    pub fn bare(graph: Graph) -> Self {
        InstanceFile {
            graph,
            witness: None,
            certificate: None,
            trace: None,
            roles: None,
        }
    }
}

/// Iterator over content lines: (1-based line number, tokens).
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") || line.starts_with("c\t") {
            return None;
        }
        Some((i + 1, line.split_whitespace().collect()))
    })
}

fn parse_num(token: &str, line: usize, expected: &'static str) -> Result<usize, IoError> {
    token
        .parse::<usize>()
        .map_err(|_| IoError::Malformed { line, expected })
}

/// Converts a 1-based vertex token to a 0-based id, range-checked.
fn parse_vertex(token: &str, line: usize, n: usize) -> Result<usize, IoError> {
    let id = parse_num(token, line, "a 1-based vertex id")?;
    if id == 0 || id > n {
        return Err(IoError::VertexOutOfRange { line, id, n });
    }
    Ok(id - 1)
}

fn parse_vertex_list(tokens: &[&str], line: usize, n: usize) -> Result<Vec<usize>, IoError> {
    tokens.iter().map(|t| parse_vertex(t, line, n)).collect()
}

/// Parses a full instance file.
pub fn parse_instance(text: &str) -> Result<InstanceFile, IoError> {
    let mut lines = content_lines(text);
    let (n, declared_m) = match lines.next() {
        Some((line, tokens)) => match tokens.as_slice() {
            ["p", "edge", n, m] => (
                parse_num(n, line, "a vertex count")?,
                parse_num(m, line, "an edge count")?,
            ),
            _ => {
                return Err(IoError::Malformed {
                    line,
                    expected: "header `p edge <n> <m>`",
                })
            }
        },
        None => {
            return Err(IoError::Malformed {
                line: 1,
                expected: "header `p edge <n> <m>`",
            })
        }
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut witness = None;
    let mut cert_s: Option<Vec<usize>> = None;
    let mut cert_a: Option<Vec<usize>> = None;
    let mut cert_b: Option<Vec<usize>> = None;
    let mut events: Vec<TraceEvent> = Vec::new();
    let mut has_trace = false;
    let mut roles: Vec<Option<Role>> = vec![None; n];
    let mut has_roles = false;
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["e", u, v] => {
                let u = parse_vertex(u, line, n)?;
                let v = parse_vertex(v, line, n)?;
                if u == v {
                    return Err(IoError::SelfLoop { line, id: u + 1 });
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(IoError::DuplicateEdge {
                        line,
                        u: key.0 + 1,
                        v: key.1 + 1,
                    });
                }
                edges.push(key);
            }
            ["w", kind, vs @ ..] => {
                let kind = WitnessKind::from_tag(kind).ok_or_else(|| IoError::UnknownKind {
                    line,
                    tag: kind.to_string(),
                })?;
                witness = Some(Witness::new(kind, parse_vertex_list(vs, line, n)?));
            }
            ["cs", vs @ ..] => cert_s = Some(parse_vertex_list(vs, line, n)?),
            ["ca", vs @ ..] => cert_a = Some(parse_vertex_list(vs, line, n)?),
            ["cb", vs @ ..] => cert_b = Some(parse_vertex_list(vs, line, n)?),
            ["t", rule, rest @ ..] => {
                let rule = RuleId::from_label(rule).ok_or_else(|| IoError::UnknownRule {
                    line,
                    tag: rule.to_string(),
                })?;
                has_trace = true;
                match rest {
                    ["yes"] => events.push(TraceEvent::decision(rule, true)),
                    ["no"] => events.push(TraceEvent::decision(rule, false)),
                    ["d", vs @ ..] if !vs.is_empty() => {
                        // Trace ids refer to the original graph and may
                        // exceed this file's n, so they are not
                        // range-checked against it.
                        let ids = vs
                            .iter()
                            .map(|t| parse_num(t, line, "a 1-based vertex id"))
                            .collect::<Result<Vec<_>, _>>()?;
                        if ids.iter().any(|&id| id == 0) {
                            return Err(IoError::Malformed {
                                line,
                                expected: "a 1-based vertex id",
                            });
                        }
                        events.push(TraceEvent::deletion(
                            rule,
                            ids.into_iter().map(|id| id - 1).collect(),
                        ));
                    }
                    _ => {
                        return Err(IoError::Malformed {
                            line,
                            expected: "`t <rule> d <v...>` or `t <rule> yes|no`",
                        })
                    }
                }
            }
            ["r", v, role] => {
                let v = parse_vertex(v, line, n)?;
                let role = Role::from_tag(role).ok_or_else(|| IoError::UnknownRole {
                    line,
                    tag: role.to_string(),
                })?;
                roles[v] = Some(role);
                has_roles = true;
            }
            _ => {
                return Err(IoError::Malformed {
                    line,
                    expected: "`e`, `w`, `cs`, `ca`, `cb`, `t`, or `r` line",
                })
            }
        }
    }
    if edges.len() != declared_m {
        return Err(IoError::EdgeCountMismatch {
            declared: declared_m,
            found: edges.len(),
        });
    }
    let graph = Graph::from_edges(n, &edges).expect("edges were validated during parsing");
    let certificate = match (cert_s, cert_a, cert_b) {
        (None, None, None) => None,
        (Some(s), Some(a), Some(b)) => Some(CutsetCertificate::new(s, a, b)),
        _ => return Err(IoError::PartialCertificate),
    };
    let roles = if has_roles {
        Some(
            roles
                .into_iter()
                .collect::<Option<Vec<Role>>>()
                .ok_or(IoError::IncompleteRoles)?,
        )
    } else {
        None
    };
    Ok(InstanceFile {
        graph,
        witness,
        certificate,
        trace: has_trace.then(|| RuleTrace { events }),
        roles,
    })
}

/// Parses just the graph and optional witness (the common CLI input).
pub fn parse_graph(text: &str) -> Result<(Graph, Option<Witness>), IoError> {
    let inst = parse_instance(text)?;
    Ok((inst.graph, inst.witness))
}

fn push_ids(out: &mut String, ids: &[usize]) {
    for &v in ids {
        out.push_str(&format!(" {}", v + 1));
    }
    out.push('\n');
}

/// Canonical text for an instance file.
pub fn emit_instance(inst: &InstanceFile) -> String {
    let g = &inst.graph;
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    if let Some(w) = &inst.witness {
        out.push_str(&format!("w {}", w.kind.tag()));
        push_ids(&mut out, w.vertices());
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    if let Some(cert) = &inst.certificate {
        out.push_str("cs");
        push_ids(&mut out, &cert.cutset);
        out.push_str("ca");
        push_ids(&mut out, &cert.side_a);
        out.push_str("cb");
        push_ids(&mut out, &cert.side_b);
    }
    if let Some(trace) = &inst.trace {
        out.push_str(&emit_trace(trace));
    }
    if let Some(roles) = &inst.roles {
        for (v, role) in roles.iter().enumerate() {
            out.push_str(&format!("r {} {}\n", v + 1, role));
        }
    }
    out
}

/// Canonical text for a graph with an optional witness.
pub fn emit_graph(g: &Graph, witness: Option<&Witness>) -> String {
    emit_instance(&InstanceFile {
        graph: g.clone(),
        witness: witness.cloned(),
        certificate: None,
        trace: None,
        roles: None,
    })
}

/// The trace section alone (also the payload of `--trace` files).
pub fn emit_trace(trace: &RuleTrace) -> String {
    let mut out = String::new();
    for event in &trace.events {
        match event.decision {
            Some(answer) => {
                out.push_str(&format!(
                    "t {} {}\n",
                    event.rule.label(),
                    if answer { "yes" } else { "no" }
                ));
            }
            None => {
                out.push_str(&format!("t {} d", event.rule.label()));
                push_ids(&mut out, &event.deleted);
            }
        }
    }
    out
}

/// Parses a set-system file.
pub fn parse_set_system(text: &str) -> Result<SetSystem, IoError> {
    let mut lines = content_lines(text);
    let (n, declared_m) = match lines.next() {
        Some((line, tokens)) => match tokens.as_slice() {
            ["p", "ss", n, m] => (
                parse_num(n, line, "an element count")?,
                parse_num(m, line, "a set count")?,
            ),
            _ => {
                return Err(IoError::Malformed {
                    line,
                    expected: "header `p ss <n> <m>`",
                })
            }
        },
        None => {
            return Err(IoError::Malformed {
                line: 1,
                expected: "header `p ss <n> <m>`",
            })
        }
    };
    let mut sets = Vec::new();
    let mut k = None;
    let mut coloring = None;
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["s", es @ ..] => sets.push(parse_vertex_list(es, line, n)?),
            ["k", val] => k = Some(parse_num(val, line, "a budget")?),
            ["col", cs @ ..] => {
                coloring = Some(
                    cs.iter()
                        .map(|t| parse_num(t, line, "a color"))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            _ => {
                return Err(IoError::Malformed {
                    line,
                    expected: "`s`, `k`, or `col` line",
                })
            }
        }
    }
    if sets.len() != declared_m {
        return Err(IoError::SetCountMismatch {
            declared: declared_m,
            found: sets.len(),
        });
    }
    Ok(SetSystem::new(n, sets, k, coloring)?)
}

/// Canonical text for a set system.
pub fn emit_set_system(sys: &SetSystem) -> String {
    let mut out = format!("p ss {} {}\n", sys.n, sys.m());
    for set in &sys.sets {
        out.push_str("s");
        push_ids(&mut out, set);
    }
    if let Some(k) = sys.k {
        out.push_str(&format!("k {k}\n"));
    }
    if let Some(coloring) = &sys.coloring {
        out.push_str("col");
        for &c in coloring {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}
