//! Witness-parameterized kernelization pipelines.
//!
//! Given a graph and a structural witness `X` (vertex cover, twin cover, or
//! a modulator to cluster, clique, or co-cluster graphs), the pipelines
//! shrink the instance to a provably bounded size while preserving the
//! yes/no answer. The witness-specific rules are *marking* rules: for every
//! small tuple over `X` they mark one vertex (or vertex group) realizing
//! the tuple's adjacency pattern, and anything that stays unmarked is
//! redundant — some marked representative takes over its role in any
//! solution.
//!
//! All tie-breaks are by lowest vertex id, so a pipeline run is a pure
//! function of its input; byte-identical reruns are part of the contract.
//!
//! Size guarantees at fixpoint, with `X'` the output witness (see
//! [`kernel_size_bound`]):
//!
//! * vertex cover: `|V| ≤ |X'|³ + |X'|`
//! * twin cover: `|V| ≤ |X'|³ + 2|X'|² + |X'|`
//! * cluster modulator: `|V| ≤ |X'| + 2|X'|·(|X'|³ + 3|X'|⁴)`
//! * clique modulator: `|V| ≤ 3|X'|`
//! * co-cluster modulator: `|V| ≤ |X'| + 2|X'|³` (join of ≥ 4 stable
//!   sets), `|V| ≤ |X'| + 3|X'|²` (2–3 stable sets), or the vertex-cover
//!   bound when `g − X` degenerates to a single stable set.

use thiserror::Error;

use crate::graph::Graph;
use crate::oracle::has_c_simple_cutset;
use crate::rules::{
    rr1_disconnected_or_cutvertex, rr2_clique, rr3_stable_neighborhood, rr4_simplicial,
    rr6_clique_module, RuleResult,
};
use crate::trace::{RuleId, RuleTrace, TraceEvent};
use crate::witness::{Witness, WitnessKind};

/// Errors from the witness-parameterized rules and pipelines.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    /// The witness does not certify its declared kind on this graph.
    #[error("witness of kind {kind} does not validate on this graph")]
    InvalidWitness { kind: WitnessKind },
    /// The rule is only defined for certain witness kinds.
    #[error("rule {rule} cannot use a witness of kind {kind}")]
    UnsupportedKind { rule: RuleId, kind: WitnessKind },
    /// Rule 8 requires every component of `g − X` to have at most two
    /// vertices (Rule 6 guarantees that in the twin-cover pipeline).
    #[error("component of g − X has {size} vertices, expected at most 2")]
    OversizedComponent { size: usize },
    /// Rules 9–11 need `g − X` to be a cluster graph.
    #[error("g − X is not a cluster graph")]
    NotClusterOutside,
    /// Rules 12–13 need `g − X` to be a join of enough stable sets.
    #[error("g − X is a join of {parts} stable sets, need at least {needed}")]
    TooFewParts { parts: usize, needed: usize },
    /// Only the five kernel kinds can be kernelized.
    #[error("no kernelization pipeline for witness kind {kind}")]
    UnsupportedPipeline { kind: WitnessKind },
}

/// One successful mark: the tuple over `X` (with repetition, in pattern
/// order) and the vertex group marked for it (in pattern order — for the
/// multi-vertex patterns of Rule 11 the i-th group member realizes the
/// i-th adjacency role).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkEntry {
    pub tuple: Vec<usize>,
    pub group: Vec<usize>,
}

/// Everything a marking pass marked, in tuple order. Tuples that no vertex
/// can serve are absent; one vertex may serve many tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MarkingLedger {
    pub entries: Vec<MarkEntry>,
}

impl MarkingLedger {
    /// All marked vertices, sorted and deduplicated.
    pub fn marked_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .entries
            .iter()
            .flat_map(|e| e.group.iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Calls `f` with every `arity`-tuple over `xs` (repetition allowed) in
/// lexicographic order.
fn for_each_tuple(xs: &[usize], arity: usize, mut f: impl FnMut(&[usize])) {
    if xs.is_empty() {
        return;
    }
    let mut idx = vec![0usize; arity];
    let mut tuple = vec![xs[0]; arity];
    loop {
        for (t, &i) in tuple.iter_mut().zip(&idx) {
            *t = xs[i];
        }
        f(&tuple);
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < xs.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Whether `v` is adjacent to every (distinct) vertex of `tuple`.
fn adjacent_to_all(g: &Graph, v: usize, tuple: &[usize]) -> bool {
    tuple.iter().all(|&x| g.has_edge(v, x))
}

/// Rule 7's marking pass: for each triple over `X`, mark the lowest-id
/// vertex of `eligible` adjacent to the whole triple.
pub fn mark_vc_tuples(g: &Graph, xs: &[usize], eligible: &[usize]) -> MarkingLedger {
    let mut ledger = MarkingLedger::default();
    for_each_tuple(xs, 3, |tuple| {
        if let Some(&v) = eligible.iter().find(|&&v| adjacent_to_all(g, v, tuple)) {
            ledger.entries.push(MarkEntry {
                tuple: tuple.to_vec(),
                group: vec![v],
            });
        }
    });
    ledger
}

/// Rule 8's marking pass: for each pair over `X`, mark the first size-2
/// component fully adjacent to both pair members.
pub fn mark_tc_pairs(g: &Graph, xs: &[usize], pairs: &[Vec<usize>]) -> MarkingLedger {
    let mut ledger = MarkingLedger::default();
    for_each_tuple(xs, 2, |tuple| {
        let hit = pairs
            .iter()
            .find(|pair| pair.iter().all(|&v| adjacent_to_all(g, v, tuple)));
        if let Some(pair) = hit {
            ledger.entries.push(MarkEntry {
                tuple: tuple.to_vec(),
                group: pair.clone(),
            });
        }
    });
    ledger
}

/// Rule 11's four marking passes over the clique components of `g − X`.
/// Pass one marks single vertices for triples; passes two to four mark
/// adjacent pairs, triangles, and 4-cliques for quadruples, with the
/// specific adjacency split described by the rule. Since the components
/// are cliques, "pairwise adjacent" is exactly "distinct vertices of one
/// component".
pub fn mark_cluster_groups(g: &Graph, xs: &[usize], comps: &[Vec<usize>]) -> MarkingLedger {
    let mut ledger = MarkingLedger::default();
    let outside: Vec<usize> = {
        let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    };
    let mut comp_of = vec![usize::MAX; g.n()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = i;
        }
    }

    // Pass 1: single vertex adjacent to a triple.
    for_each_tuple(xs, 3, |tuple| {
        if let Some(&v) = outside.iter().find(|&&v| adjacent_to_all(g, v, tuple)) {
            ledger.entries.push(MarkEntry {
                tuple: tuple.to_vec(),
                group: vec![v],
            });
        }
    });

    // Pass 2: adjacent pair (p, q): p sees x1,x2 and q sees x3,x4.
    for_each_tuple(xs, 4, |tuple| {
        let (m12, m34) = (&tuple[..2], &tuple[2..]);
        for &p in &outside {
            if !adjacent_to_all(g, p, m12) {
                continue;
            }
            let comp = &comps[comp_of[p]];
            if let Some(&q) = comp
                .iter()
                .find(|&&q| q != p && adjacent_to_all(g, q, m34))
            {
                ledger.entries.push(MarkEntry {
                    tuple: tuple.to_vec(),
                    group: vec![p, q],
                });
                return;
            }
        }
    });

    // Pass 3: triangle (p, q, r): p sees x1,x2; q sees x3; r sees x4.
    for_each_tuple(xs, 4, |tuple| {
        let m12 = &tuple[..2];
        let (x3, x4) = (tuple[2], tuple[3]);
        for &p in &outside {
            if !adjacent_to_all(g, p, m12) {
                continue;
            }
            let comp = &comps[comp_of[p]];
            for &q in comp.iter().filter(|&&q| q != p) {
                if !g.has_edge(q, x3) {
                    continue;
                }
                let r = comp
                    .iter()
                    .find(|&&r| r != p && r != q && g.has_edge(r, x4));
                if let Some(&r) = r {
                    ledger.entries.push(MarkEntry {
                        tuple: tuple.to_vec(),
                        group: vec![p, q, r],
                    });
                    return;
                }
            }
        }
    });

    // Pass 4: 4-clique (p, q, r, s), one adjacency role each.
    for_each_tuple(xs, 4, |tuple| {
        let (x1, x2, x3, x4) = (tuple[0], tuple[1], tuple[2], tuple[3]);
        for &p in &outside {
            if !g.has_edge(p, x1) {
                continue;
            }
            let comp = &comps[comp_of[p]];
            for &q in comp.iter().filter(|&&q| q != p && g.has_edge(q, x2)) {
                for &r in comp
                    .iter()
                    .filter(|&&r| r != p && r != q && g.has_edge(r, x3))
                {
                    let s = comp
                        .iter()
                        .find(|&&s| s != p && s != q && s != r && g.has_edge(s, x4));
                    if let Some(&s) = s {
                        ledger.entries.push(MarkEntry {
                            tuple: tuple.to_vec(),
                            group: vec![p, q, r, s],
                        });
                        return;
                    }
                }
            }
        }
    });

    ledger
}

/// Rule 12's marking pass: for each pair over `X`, mark the lowest-id
/// vertex of the oversized stable set `part` adjacent to both.
pub fn mark_cocluster_part(g: &Graph, xs: &[usize], part: &[usize]) -> MarkingLedger {
    let mut ledger = MarkingLedger::default();
    for_each_tuple(xs, 2, |tuple| {
        if let Some(&v) = part.iter().find(|&&v| adjacent_to_all(g, v, tuple)) {
            ledger.entries.push(MarkEntry {
                tuple: tuple.to_vec(),
                group: vec![v],
            });
        }
    });
    ledger
}

fn membership(n: usize, xs: &[usize]) -> Vec<bool> {
    let mut in_x = vec![false; n];
    for &v in xs {
        in_x[v] = true;
    }
    in_x
}

/// Isolated vertices of `g − X`, ascending: outside vertices with no
/// neighbor outside.
fn isolated_outside(g: &Graph, in_x: &[bool]) -> Vec<usize> {
    g.vertices()
        .filter(|&v| !in_x[v] && g.neighbors(v).iter().all(|&w| in_x[w]))
        .collect()
}

fn cubed(len: usize) -> u128 {
    let l = len as u128;
    l * l * l
}

fn squared(len: usize) -> u128 {
    let l = len as u128;
    l * l
}

fn rr7_core(g: &Graph, xs: &[usize]) -> RuleResult {
    let in_x = membership(g.n(), xs);
    let eligible = isolated_outside(g, &in_x);
    if eligible.len() as u128 <= cubed(xs.len()) {
        return RuleResult::NotApplicable;
    }
    let ledger = mark_vc_tuples(g, xs, &eligible);
    let marked = membership(g.n(), &ledger.marked_vertices());
    let deleted: Vec<usize> = eligible.into_iter().filter(|&v| !marked[v]).collect();
    debug_assert!(!deleted.is_empty());
    RuleResult::delete_set(g, deleted)
}

/// Rule 7: when `g − X` has more than `|X|³` isolated vertices, mark one
/// representative per triple over `X` and delete all unmarked isolated
/// vertices in one pass. Accepts vertex-cover witnesses (where every
/// outside vertex is isolated) and twin-cover witnesses (where the rule is
/// restricted to the isolated vertices).
pub fn rr7_vc_marking(g: &Graph, x: &Witness) -> Result<RuleResult, KernelError> {
    match x.kind {
        WitnessKind::VertexCover | WitnessKind::TwinCover => {}
        kind => {
            return Err(KernelError::UnsupportedKind {
                rule: RuleId::VcMarking,
                kind,
            })
        }
    }
    if !x.is_valid_for(g) {
        return Err(KernelError::InvalidWitness { kind: x.kind });
    }
    Ok(rr7_core(g, x.vertices()))
}

fn rr8_core(g: &Graph, xs: &[usize]) -> Result<RuleResult, KernelError> {
    let comps = g.components_avoiding(xs);
    if let Some(comp) = comps.iter().find(|c| c.len() > 2) {
        return Err(KernelError::OversizedComponent { size: comp.len() });
    }
    let pairs: Vec<Vec<usize>> = comps.into_iter().filter(|c| c.len() == 2).collect();
    if pairs.len() as u128 <= squared(xs.len()) {
        return Ok(RuleResult::NotApplicable);
    }
    let ledger = mark_tc_pairs(g, xs, &pairs);
    let marked = membership(g.n(), &ledger.marked_vertices());
    let unmarked = pairs
        .iter()
        .find(|pair| pair.iter().all(|&v| !marked[v]))
        .expect("below the threshold some pair stays unmarked");
    let cert = has_c_simple_cutset(g, unmarked).expect("a size-2 component is a clique");
    match cert {
        Some(_) => Ok(RuleResult::Decided(true)),
        None => Ok(RuleResult::delete_set(g, unmarked.clone())),
    }
}

/// Rule 8: when `g − X` (all components of size ≤ 2) has more than `|X|²`
/// two-vertex components, mark one per pair over `X`; the first unmarked
/// pair `C` either admits a `C`-simple cutset (YES) or can be deleted.
pub fn rr8_tc_pair_marking(g: &Graph, x: &Witness) -> Result<RuleResult, KernelError> {
    if x.kind != WitnessKind::TwinCover {
        return Err(KernelError::UnsupportedKind {
            rule: RuleId::TcPairMarking,
            kind: x.kind,
        });
    }
    if !x.is_valid_for(g) {
        return Err(KernelError::InvalidWitness { kind: x.kind });
    }
    rr8_core(g, x.vertices())
}

/// Shared entry check for the cluster rules: the witness must validate for
/// its own kind *and* `g − X` must be a cluster graph, returning its
/// components.
fn cluster_components(g: &Graph, x: &Witness) -> Result<Vec<Vec<usize>>, KernelError> {
    if !x.is_valid_for(g) {
        return Err(KernelError::InvalidWitness { kind: x.kind });
    }
    let comps = g.components_avoiding(x.vertices());
    if comps.iter().any(|comp| !g.is_clique(comp)) {
        return Err(KernelError::NotClusterOutside);
    }
    Ok(comps)
}

fn rr9_core(g: &Graph, comps: &[Vec<usize>]) -> RuleResult {
    for comp in comps {
        let found = has_c_simple_cutset(g, comp)
            .expect("cluster components are cliques")
            .is_some();
        if found {
            return RuleResult::Decided(true);
        }
    }
    RuleResult::NotApplicable
}

/// Rule 9: YES as soon as any clique component of `g − X` admits a
/// component-simple stable cutset.
pub fn rr9_simple_component(g: &Graph, x: &Witness) -> Result<RuleResult, KernelError> {
    let comps = cluster_components(g, x)?;
    Ok(rr9_core(g, &comps))
}

fn rr10_core(g: &Graph, xs: &[usize], comps: &[Vec<usize>]) -> RuleResult {
    let in_x = membership(g.n(), xs);
    let mut comp_of = vec![usize::MAX; g.n()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = i;
        }
    }
    // neighbors_in_comp[x][i] = |N(x) ∩ comps[i]| for x ∈ X.
    let mut neighbors_in_comp = vec![vec![0usize; comps.len()]; xs.len()];
    let mut x_index = vec![usize::MAX; g.n()];
    for (i, &x) in xs.iter().enumerate() {
        x_index[x] = i;
        for &w in g.neighbors(x) {
            if comp_of[w] != usize::MAX {
                neighbors_in_comp[i][comp_of[w]] += 1;
            }
        }
    }
    for v in g.vertices() {
        if in_x[v] {
            continue;
        }
        let eligible = g.neighbors(v).iter().all(|&x| {
            if !in_x[x] {
                return true;
            }
            // v is adjacent to x, so x has this many *other* neighbors in
            // v's component.
            neighbors_in_comp[x_index[x]][comp_of[v]] - 1 >= 2
        });
        if eligible {
            let (graph, _) = g.delete_vertices(&[v]);
            return RuleResult::Reduced {
                graph,
                deleted: vec![v],
            };
        }
    }
    RuleResult::NotApplicable
}

/// Rule 10: delete the lowest-id vertex `v` of a clique component `C` such
/// that each `X`-neighbor of `v` keeps at least two neighbors in
/// `C \ {v}`. At fixpoint every component has at most `2|X|` vertices.
pub fn rr10_shrink_clique_components(
    g: &Graph,
    x: &Witness,
) -> Result<RuleResult, KernelError> {
    let comps = cluster_components(g, x)?;
    Ok(rr10_core(g, x.vertices(), &comps))
}

fn rr11_core(g: &Graph, xs: &[usize], comps: &[Vec<usize>]) -> RuleResult {
    let threshold = cubed(xs.len()) + 3 * squared(xs.len()) * squared(xs.len());
    if comps.len() as u128 <= threshold {
        return RuleResult::NotApplicable;
    }
    let ledger = mark_cluster_groups(g, xs, comps);
    let marked = membership(g.n(), &ledger.marked_vertices());
    let comp = comps
        .iter()
        .find(|comp| comp.iter().all(|&v| !marked[v]))
        .expect("below the threshold some component stays fully unmarked");
    RuleResult::delete_set(g, comp.clone())
}

/// Rule 11: when `g − X` has more than `|X|³ + 3|X|⁴` components, run the
/// four marking passes and delete the first fully-unmarked component.
pub fn rr11_cluster_component_marking(
    g: &Graph,
    x: &Witness,
) -> Result<RuleResult, KernelError> {
    let comps = cluster_components(g, x)?;
    Ok(rr11_core(g, x.vertices(), &comps))
}

/// The stable sets whose join `g − X` is: connected components of the
/// complement of `g − X`, reported in `g`'s vertex ids, ordered by minimum
/// element.
fn cocluster_parts(g: &Graph, xs: &[usize]) -> Vec<Vec<usize>> {
    let in_x = membership(g.n(), xs);
    let keep: Vec<usize> = g.vertices().filter(|&v| !in_x[v]).collect();
    let (h, orig) = g.induced_subgraph(&keep);
    h.complement_components()
        .into_iter()
        .map(|part| part.into_iter().map(|v| orig[v]).collect())
        .collect()
}

fn rr12_core(g: &Graph, xs: &[usize], parts: &[Vec<usize>]) -> RuleResult {
    let cap = squared(xs.len());
    let Some(part) = parts.iter().find(|part| part.len() as u128 > cap) else {
        return RuleResult::NotApplicable;
    };
    let ledger = mark_cocluster_part(g, xs, part);
    let marked = membership(g.n(), &ledger.marked_vertices());
    let &v = part
        .iter()
        .find(|&&v| !marked[v])
        .expect("part larger than |X|² has an unmarked vertex");
    let (graph, _) = g.delete_vertices(&[v]);
    RuleResult::Reduced {
        graph,
        deleted: vec![v],
    }
}

/// Shared entry check for the co-cluster rules: witness kind, validity,
/// and the join decomposition with a minimum part count.
fn cocluster_entry(
    g: &Graph,
    x: &Witness,
    rule: RuleId,
    needed: usize,
) -> Result<Vec<Vec<usize>>, KernelError> {
    if x.kind != WitnessKind::ModCoCluster {
        return Err(KernelError::UnsupportedKind { rule, kind: x.kind });
    }
    if !x.is_valid_for(g) {
        return Err(KernelError::InvalidWitness { kind: x.kind });
    }
    let parts = cocluster_parts(g, x.vertices());
    if parts.len() < needed {
        return Err(KernelError::TooFewParts {
            parts: parts.len(),
            needed,
        });
    }
    Ok(parts)
}

/// Rule 12: in a join of ≥ 2 stable sets, take the first part larger than
/// `|X|²`, mark one representative per pair over `X`, and delete the
/// lowest-id unmarked vertex of that part.
pub fn rr12_cocluster_shrink_stable_set(
    g: &Graph,
    x: &Witness,
) -> Result<RuleResult, KernelError> {
    let parts = cocluster_entry(g, x, RuleId::CoclusterShrinkStableSet, 2)?;
    Ok(rr12_core(g, x.vertices(), &parts))
}

fn rr13_core(g: &Graph, xs: &[usize], parts: &[Vec<usize>]) -> RuleResult {
    let in_x = membership(g.n(), xs);
    let mut part_of = vec![usize::MAX; g.n()];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    // parts_touched[x] = number of distinct parts x is adjacent to.
    let mut x_index = vec![usize::MAX; g.n()];
    let mut parts_touched = vec![0usize; xs.len()];
    let mut seen = vec![usize::MAX; parts.len()];
    for (i, &x) in xs.iter().enumerate() {
        x_index[x] = i;
        for &w in g.neighbors(x) {
            let p = part_of[w];
            if p != usize::MAX && seen[p] != i {
                seen[p] = i;
                parts_touched[i] += 1;
            }
        }
    }
    for v in g.vertices() {
        if in_x[v] || part_of[v] == usize::MAX {
            continue;
        }
        let eligible = g
            .neighbors(v)
            .iter()
            .all(|&x| !in_x[x] || parts_touched[x_index[x]] >= 3);
        if eligible {
            let (graph, _) = g.delete_vertices(&[v]);
            return RuleResult::Reduced {
                graph,
                deleted: vec![v],
            };
        }
    }
    RuleResult::NotApplicable
}

/// Rule 13: in a join of ≥ 4 stable sets, delete the lowest-id outside
/// vertex all of whose `X`-neighbors are adjacent to at least three
/// distinct parts (vertices with no `X`-neighbor qualify vacuously).
pub fn rr13_cocluster_reduce_stable_sets(
    g: &Graph,
    x: &Witness,
) -> Result<RuleResult, KernelError> {
    let parts = cocluster_entry(g, x, RuleId::CoclusterReduceStableSets, 4)?;
    Ok(rr13_core(g, x.vertices(), &parts))
}

/// Result of running a kernelization pipeline to fixpoint.
#[derive(Debug, Clone)]
pub enum ReductionOutcome {
    /// A rule settled the instance.
    Decided { answer: bool, trace: RuleTrace },
    /// No rule applies anymore; the instance shrank to `graph` with the
    /// surviving witness, within the kind's size bound.
    Reduced {
        graph: Graph,
        witness: Witness,
        trace: RuleTrace,
    },
}

impl ReductionOutcome {
    /// The trace, regardless of how the run ended.
    pub fn trace(&self) -> &RuleTrace {
        match self {
            ReductionOutcome::Decided { trace, .. } => trace,
            ReductionOutcome::Reduced { trace, .. } => trace,
        }
    }
}

/// First applicable rule of the kind's schedule, with its result.
fn next_step(
    g: &Graph,
    xs: &[usize],
    kind: WitnessKind,
) -> Result<Option<(RuleId, RuleResult)>, KernelError> {
    macro_rules! try_rule {
        ($id:expr, $result:expr) => {
            match $result {
                RuleResult::NotApplicable => {}
                other => return Ok(Some(($id, other))),
            }
        };
    }
    try_rule!(
        RuleId::DisconnectedOrCutvertex,
        rr1_disconnected_or_cutvertex(g)
    );
    try_rule!(RuleId::Clique, rr2_clique(g));
    try_rule!(RuleId::StableNeighborhood, rr3_stable_neighborhood(g));
    match kind {
        WitnessKind::VertexCover => {
            try_rule!(RuleId::VcMarking, rr7_core(g, xs));
        }
        WitnessKind::TwinCover => {
            try_rule!(RuleId::CliqueModule, rr6_clique_module(g));
            try_rule!(RuleId::VcMarking, rr7_core(g, xs));
            try_rule!(RuleId::TcPairMarking, rr8_core(g, xs)?);
        }
        WitnessKind::ModCluster | WitnessKind::ModClique => {
            try_rule!(RuleId::Simplicial, rr4_simplicial(g));
            let comps = g.components_avoiding(xs);
            try_rule!(RuleId::SimpleComponent, rr9_core(g, &comps));
            try_rule!(RuleId::ShrinkCliqueComponents, rr10_core(g, xs, &comps));
            try_rule!(RuleId::ClusterComponentMarking, rr11_core(g, xs, &comps));
        }
        WitnessKind::ModCoCluster => {
            let parts = cocluster_parts(g, xs);
            if parts.len() <= 1 {
                // g − X degenerated to one stable set: X is now a vertex
                // cover and Rule 7 finishes the job.
                try_rule!(RuleId::VcMarking, rr7_core(g, xs));
            } else {
                try_rule!(RuleId::CoclusterShrinkStableSet, rr12_core(g, xs, &parts));
                if parts.len() >= 4 {
                    try_rule!(
                        RuleId::CoclusterReduceStableSets,
                        rr13_core(g, xs, &parts)
                    );
                }
            }
        }
        WitnessKind::ModLinearForest | WitnessKind::ModPath | WitnessKind::DominatingSet => {
            unreachable!("kernelize rejects these kinds on entry")
        }
    }
    Ok(None)
}

/// Runs the witness kind's reduction schedule to fixpoint, restarting from
/// Rule 1 after every change. Returns either a decision or an equivalent
/// reduced instance whose size respects the kind's bound; the trace logs
/// every step with deletions in input-graph ids.
pub fn kernelize(g0: &Graph, x0: &Witness) -> Result<ReductionOutcome, KernelError> {
    match x0.kind {
        WitnessKind::VertexCover
        | WitnessKind::TwinCover
        | WitnessKind::ModCluster
        | WitnessKind::ModClique
        | WitnessKind::ModCoCluster => {}
        kind => return Err(KernelError::UnsupportedPipeline { kind }),
    }
    if !x0.is_valid_for(g0) {
        return Err(KernelError::InvalidWitness { kind: x0.kind });
    }
    let mut g = g0.clone();
    let mut xs: Vec<usize> = x0.vertices().to_vec();
    // orig[current id] = id in g0, for trace bookkeeping.
    let mut orig: Vec<usize> = g0.vertices().collect();
    let mut trace = RuleTrace::new();
    while let Some((id, result)) = next_step(&g, &xs, x0.kind)? {
        match result {
            RuleResult::Decided(answer) => {
                trace.push(TraceEvent::decision(id, answer));
                return Ok(ReductionOutcome::Decided { answer, trace });
            }
            RuleResult::Reduced { graph, deleted } => {
                trace.push(TraceEvent::deletion(
                    id,
                    deleted.iter().map(|&v| orig[v]).collect(),
                ));
                let mut new_id = vec![usize::MAX; g.n()];
                let mut next = 0;
                let mut di = 0;
                for v in g.vertices() {
                    if di < deleted.len() && deleted[di] == v {
                        di += 1;
                    } else {
                        new_id[v] = next;
                        next += 1;
                    }
                }
                orig = g
                    .vertices()
                    .filter(|&v| new_id[v] != usize::MAX)
                    .map(|v| orig[v])
                    .collect();
                xs = xs
                    .iter()
                    .filter(|&&v| new_id[v] != usize::MAX)
                    .map(|&v| new_id[v])
                    .collect();
                g = graph;
            }
            RuleResult::NotApplicable => unreachable!("next_step filters these"),
        }
    }
    Ok(ReductionOutcome::Reduced {
        graph: g,
        witness: Witness::new(x0.kind, xs),
        trace,
    })
}

/// The vertex-count bound the kind's pipeline guarantees *for this reduced
/// instance* — for co-cluster witnesses the applicable regime depends on
/// how many stable sets `g − X` splits into. `None` for kinds without a
/// pipeline.
pub fn kernel_size_bound(g: &Graph, x: &Witness) -> Option<u128> {
    let k = x.size() as u128;
    match x.kind {
        WitnessKind::VertexCover => Some(k * k * k + k),
        WitnessKind::TwinCover => Some(k * k * k + 2 * k * k + k),
        WitnessKind::ModCluster => Some(k + 2 * k * (k * k * k + 3 * k * k * k * k)),
        WitnessKind::ModClique => Some(3 * k),
        WitnessKind::ModCoCluster => {
            let parts = cocluster_parts(g, x.vertices()).len();
            Some(match parts {
                0 | 1 => k * k * k + k,
                2 | 3 => k + 3 * k * k,
                _ => k + 2 * k * k * k,
            })
        }
        _ => None,
    }
}
