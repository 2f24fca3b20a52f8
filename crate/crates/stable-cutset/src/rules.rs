//! The six witness-free reduction rules and their fixpoint driver.
//!
//! Each rule inspects a graph and either decides the instance outright,
//! deletes vertices (returning the relabeled survivor graph), or reports
//! that it does not apply. The rules are safe — they preserve the yes/no
//! answer — *provided* the earlier rules do not apply, which is exactly how
//! [`run_generic_fixpoint`] schedules them: after every change it restarts
//! from Rule 1.
//!
//! Every rule is still callable on its own (it checks only its own
//! condition); the ordering preconditions matter only for safeness, and the
//! test suites exercise both views.
//!
//! Tie-breaking is deterministic throughout: the lowest-id vertex, the
//! lexicographically first pair, or the lexicographically smallest triplet.

use crate::graph::{articulation_points, find_clique_module_triplet, Graph};
use crate::trace::{RuleId, RuleTrace, TraceEvent};

/// Outcome of applying one reduction rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleResult {
    /// The rule settled the instance: `true` means a stable cutset exists.
    Decided(bool),
    /// The rule deleted `deleted` (ids of the input graph, sorted); `graph`
    /// is the densely relabeled remainder.
    Reduced { graph: Graph, deleted: Vec<usize> },
    /// The rule's condition does not hold.
    NotApplicable,
}

impl RuleResult {
    /// Helper for single-vertex deletions.
    fn delete_one(g: &Graph, v: usize) -> RuleResult {
        let (graph, _) = g.delete_vertices(&[v]);
        RuleResult::Reduced {
            graph,
            deleted: vec![v],
        }
    }

    /// Helper for deleting a sorted vertex set.
    pub(crate) fn delete_set(g: &Graph, deleted: Vec<usize>) -> RuleResult {
        debug_assert!(deleted.windows(2).all(|w| w[0] < w[1]));
        let (graph, _) = g.delete_vertices(&deleted);
        RuleResult::Reduced { graph, deleted }
    }
}

/// Rule 1: a disconnected graph has the empty stable cutset, and a graph
/// with a cut-vertex `v` has the stable cutset `{v}` — YES either way.
pub fn rr1_disconnected_or_cutvertex(g: &Graph) -> RuleResult {
    if !g.is_connected() || !articulation_points(g).is_empty() {
        RuleResult::Decided(true)
    } else {
        RuleResult::NotApplicable
    }
}

/// Rule 2: a complete graph (including `n ≤ 1`) has no stable cutset — NO.
pub fn rr2_clique(g: &Graph) -> RuleResult {
    // With no self-loops or parallel edges, "every degree is n−1" is
    // exactly "complete"; vacuously true for n ≤ 1.
    if g.vertices().all(|v| g.degree(v) + 1 == g.n()) {
        RuleResult::Decided(false)
    } else {
        RuleResult::NotApplicable
    }
}

/// Whether `N(v)` is a stable set, with a cheap path for small degrees.
fn neighborhood_is_stable(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    if nb.len() <= 16 {
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    return false;
                }
            }
        }
        true
    } else {
        g.is_stable_set(nb)
    }
}

/// Whether `N(v)` induces a clique, with a cheap path for small degrees.
fn neighborhood_is_clique(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    if nb.len() <= 16 {
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    return false;
                }
            }
        }
        true
    } else {
        g.is_clique(nb)
    }
}

/// Rule 3: if some vertex has a stable neighborhood, that neighborhood is a
/// stable cutset (or the graph was already degenerate) — YES.
pub fn rr3_stable_neighborhood(g: &Graph) -> RuleResult {
    if g.vertices().any(|v| neighborhood_is_stable(g, v)) {
        RuleResult::Decided(true)
    } else {
        RuleResult::NotApplicable
    }
}

/// Rule 4: delete the lowest-id simplicial vertex (one whose neighborhood
/// is a clique); the answer is unchanged.
pub fn rr4_simplicial(g: &Graph) -> RuleResult {
    match g.vertices().find(|&v| neighborhood_is_clique(g, v)) {
        Some(v) => RuleResult::delete_one(g, v),
        None => RuleResult::NotApplicable,
    }
}

/// Rule 5: for the lexicographically first ordered pair `(u, v)` with
/// `N(v) ⊆ N(u)` and `u ≠ v`, delete `v`.
pub fn rr5_comparable_neighborhood(g: &Graph) -> RuleResult {
    for u in g.vertices() {
        for v in g.vertices() {
            if u == v || g.degree(v) > g.degree(u) {
                continue;
            }
            let nu = g.neighbors(u);
            if g.neighbors(v).iter().all(|w| nu.binary_search(w).is_ok()) {
                return RuleResult::delete_one(g, v);
            }
        }
    }
    RuleResult::NotApplicable
}

/// Rule 6: a clique module with ≥ 3 vertices can lose one; delete the first
/// vertex of the lexicographically smallest clique-module triplet.
pub fn rr6_clique_module(g: &Graph) -> RuleResult {
    match find_clique_module_triplet(g) {
        Some((u, _, _)) => RuleResult::delete_one(g, u),
        None => RuleResult::NotApplicable,
    }
}

/// Result of running the generic rules to fixpoint.
#[derive(Debug, Clone)]
pub struct GenericFixpoint {
    /// Terminal answer, if some rule decided the instance.
    pub decision: Option<bool>,
    /// The graph at termination: the irreducible remainder, or the graph on
    /// which the deciding rule fired.
    pub graph: Graph,
    /// What happened, with deletions in original input-graph ids.
    pub trace: RuleTrace,
}

const GENERIC_RULES: [(RuleId, fn(&Graph) -> RuleResult); 6] = [
    (RuleId::DisconnectedOrCutvertex, rr1_disconnected_or_cutvertex),
    (RuleId::Clique, rr2_clique),
    (RuleId::StableNeighborhood, rr3_stable_neighborhood),
    (RuleId::Simplicial, rr4_simplicial),
    (RuleId::ComparableNeighborhood, rr5_comparable_neighborhood),
    (RuleId::CliqueModule, rr6_clique_module),
];

/// Applies Rules 1–6 in order, restarting from Rule 1 after every deletion,
/// until a rule decides the instance or none applies. The trace records
/// every event; deletions are translated back to the ids of the input
/// graph.
pub fn run_generic_fixpoint(g0: &Graph) -> GenericFixpoint {
    let mut g = g0.clone();
    // orig[current id] = id in g0.
    let mut orig: Vec<usize> = g0.vertices().collect();
    let mut trace = RuleTrace::new();
    'restart: loop {
        for (id, rule) in GENERIC_RULES {
            match rule(&g) {
                RuleResult::NotApplicable => continue,
                RuleResult::Decided(answer) => {
                    trace.push(TraceEvent::decision(id, answer));
                    return GenericFixpoint {
                        decision: Some(answer),
                        graph: g,
                        trace,
                    };
                }
                RuleResult::Reduced { graph, deleted } => {
                    trace.push(TraceEvent::deletion(
                        id,
                        deleted.iter().map(|&v| orig[v]).collect(),
                    ));
                    let mut drop = vec![false; g.n()];
                    for &v in &deleted {
                        drop[v] = true;
                    }
                    orig = orig
                        .iter()
                        .enumerate()
                        .filter(|&(v, _)| !drop[v])
                        .map(|(_, &o)| o)
                        .collect();
                    g = graph;
                    continue 'restart;
                }
            }
        }
        return GenericFixpoint {
            decision: None,
            graph: g,
            trace,
        };
    }
}
