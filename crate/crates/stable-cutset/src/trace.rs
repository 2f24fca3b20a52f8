//! Reduction traces: an auditable log of what the rule pipelines did.
//!
//! Every fixpoint driver appends one [`TraceEvent`] per rule application —
//! either a deletion (with the deleted vertices in *original* input-graph
//! ids) or a terminal decision. Because deletions are recorded against the
//! original labeling, a trace can be replayed on the input graph to
//! reproduce the output graph exactly; [`RuleTrace::replay`] does that and
//! the test suites use it as a consistency check on every kernelization.

use std::fmt;

use crate::graph::Graph;

/// Identifies one of the thirteen reduction rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleId {
    /// Rule 1: disconnected graph or cut-vertex → YES.
    DisconnectedOrCutvertex,
    /// Rule 2: the whole graph is a clique → NO.
    Clique,
    /// Rule 3: some vertex has a stable neighborhood → YES.
    StableNeighborhood,
    /// Rule 4: delete a simplicial vertex.
    Simplicial,
    /// Rule 5: delete `v` when `N(v) ⊆ N(u)` for some other `u`.
    ComparableNeighborhood,
    /// Rule 6: delete one vertex of a clique module of size ≥ 3.
    CliqueModule,
    /// Rule 7: marking over `X³`; delete unmarked isolated vertices of `g−X`.
    VcMarking,
    /// Rule 8: marking over `X²`; resolve one unmarked size-2 component.
    TcPairMarking,
    /// Rule 9: some component of `g−X` has a component-simple cutset → YES.
    SimpleComponent,
    /// Rule 10: shrink a clique component of `g−X` by one vertex.
    ShrinkCliqueComponents,
    /// Rule 11: four marking passes over `X³`/`X⁴`; delete an unmarked
    /// component.
    ClusterComponentMarking,
    /// Rule 12: marking over `X²`; shrink one oversized stable set of the
    /// join `g−X`.
    CoclusterShrinkStableSet,
    /// Rule 13: delete a vertex all of whose `X`-neighbors see ≥ 3 parts.
    CoclusterReduceStableSets,
}

impl RuleId {
    /// All rules in pipeline order.
    pub const ALL: [RuleId; 13] = [
        RuleId::DisconnectedOrCutvertex,
        RuleId::Clique,
        RuleId::StableNeighborhood,
        RuleId::Simplicial,
        RuleId::ComparableNeighborhood,
        RuleId::CliqueModule,
        RuleId::VcMarking,
        RuleId::TcPairMarking,
        RuleId::SimpleComponent,
        RuleId::ShrinkCliqueComponents,
        RuleId::ClusterComponentMarking,
        RuleId::CoclusterShrinkStableSet,
        RuleId::CoclusterReduceStableSets,
    ];

    /// The label used in trace files: `rr1` … `rr13`.
    pub fn label(self) -> &'static str {
        match self {
            RuleId::DisconnectedOrCutvertex => "rr1",
            RuleId::Clique => "rr2",
            RuleId::StableNeighborhood => "rr3",
            RuleId::Simplicial => "rr4",
            RuleId::ComparableNeighborhood => "rr5",
            RuleId::CliqueModule => "rr6",
            RuleId::VcMarking => "rr7",
            RuleId::TcPairMarking => "rr8",
            RuleId::SimpleComponent => "rr9",
            RuleId::ShrinkCliqueComponents => "rr10",
            RuleId::ClusterComponentMarking => "rr11",
            RuleId::CoclusterShrinkStableSet => "rr12",
            RuleId::CoclusterReduceStableSets => "rr13",
        }
    }

    /// Parses a label produced by [`RuleId::label`].
    pub fn from_label(label: &str) -> Option<Self> {
        RuleId::ALL.into_iter().find(|r| r.label() == label)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One step of a reduction run: a rule either deleted vertices or decided
/// the instance. Vertex ids refer to the original input graph of the run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub rule: RuleId,
    /// Deleted vertices in original ids, sorted; empty for decisions.
    pub deleted: Vec<usize>,
    /// Terminal answer, if this event decided the instance.
    pub decision: Option<bool>,
}

impl TraceEvent {
    pub fn deletion(rule: RuleId, mut deleted: Vec<usize>) -> Self {
        deleted.sort_unstable();
        TraceEvent {
            rule,
            deleted,
            decision: None,
        }
    }

    pub fn decision(rule: RuleId, answer: bool) -> Self {
        TraceEvent {
            rule,
            deleted: Vec::new(),
            decision: Some(answer),
        }
    }
}

/// The ordered log of a reduction run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleTrace {
    pub events: Vec<TraceEvent>,
}

impl RuleTrace {
    pub fn new() -> Self {
        RuleTrace::default()
    }

    pub fn push(&mut self, event: TraceEvent) {
        self.events.push(event);
    }

    /// All vertices deleted over the run, in original ids, sorted.
    pub fn deleted_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .events
            .iter()
            .flat_map(|e| e.deleted.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// The terminal decision, if the run ended with one.
    pub fn final_decision(&self) -> Option<bool> {
        self.events.last().and_then(|e| e.decision)
    }

    /// Replays the recorded deletions on `g0` and returns the surviving
    /// graph (densely relabeled, exactly as the pipelines produce it)
    /// together with the terminal decision, if any.
    ///
    /// Panics if the trace deletes a vertex twice or out of range — a
    /// malformed trace, not a recoverable condition.
    pub fn replay(&self, g0: &Graph) -> (Graph, Option<bool>) {
        let mut alive = vec![true; g0.n()];
        for event in &self.events {
            for &v in &event.deleted {
                assert!(v < g0.n(), "trace deletes out-of-range vertex {v}");
                assert!(alive[v], "trace deletes vertex {v} twice");
                alive[v] = false;
            }
        }
        let keep: Vec<usize> = g0.vertices().filter(|&v| alive[v]).collect();
        let (graph, _) = g0.induced_subgraph(&keep);
        (graph, self.final_decision())
    }
}
