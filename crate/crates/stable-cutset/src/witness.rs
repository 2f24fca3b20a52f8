//! Structural witnesses and stable-cutset certificates.
//!
//! A *witness* is a vertex set `X` together with the graph class its removal
//! is claimed to leave behind: deleting a vertex cover leaves a stable set,
//! deleting a twin cover leaves disjoint clique modules, and so on. The
//! kernelization pipelines take their parameter `|X|` from such a witness
//! and [`validate_witness`] is the gatekeeper every pipeline and parser
//! calls first.
//!
//! A [`CutsetCertificate`] is the checkable form of a YES answer: a
//! partition `V = S ∪ A ∪ B` with `S` stable, `A` and `B` nonempty, and no
//! edge between `A` and `B`. Such a partition exists exactly when `S` is a
//! stable cutset.

use std::fmt;

use crate::graph::{articulation_points, Graph};

/// The graph class that deleting a witness set is claimed to reach, or —
/// for [`WitnessKind::DominatingSet`] — a domination claim about the set
/// itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `g − X` has no edges.
    VertexCover,
    /// Every edge of `g − X` joins true twins of `g` (so the components of
    /// `g − X` are clique modules).
    TwinCover,
    /// Every component of `g − X` is a clique.
    ModCluster,
    /// `g − X` is a single clique (possibly empty).
    ModClique,
    /// `g − X` is a join of stable sets (complement of a cluster graph).
    ModCoCluster,
    /// `g − X` is a disjoint union of paths.
    ModLinearForest,
    /// `g − X` is a single path (possibly empty).
    ModPath,
    /// Every vertex of `g` is in `X` or adjacent to `X`.
    DominatingSet,
}

impl WitnessKind {
    /// All kinds, in the fixed order used by parsers and generators.
    pub const ALL: [WitnessKind; 8] = [
        WitnessKind::VertexCover,
        WitnessKind::TwinCover,
        WitnessKind::ModCluster,
        WitnessKind::ModClique,
        WitnessKind::ModCoCluster,
        WitnessKind::ModLinearForest,
        WitnessKind::ModPath,
        WitnessKind::DominatingSet,
    ];

    /// The short tag used in instance files and on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            WitnessKind::VertexCover => "vc",
            WitnessKind::TwinCover => "tc",
            WitnessKind::ModCluster => "cluster",
            WitnessKind::ModClique => "clique",
            WitnessKind::ModCoCluster => "cocluster",
            WitnessKind::ModLinearForest => "linforest",
            WitnessKind::ModPath => "path",
            WitnessKind::DominatingSet => "ds",
        }
    }

    /// Parses a tag produced by [`WitnessKind::tag`].
    pub fn from_tag(tag: &str) -> Option<Self> {
        WitnessKind::ALL.into_iter().find(|k| k.tag() == tag)
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A claimed structural witness: a vertex set plus the class it certifies.
/// Vertices are kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    vertices: Vec<usize>,
}

impl Witness {
    /// Builds a witness, sorting and deduplicating the vertex set.
    pub fn new(kind: WitnessKind, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Witness { kind, vertices }
    }

    /// The sorted witness vertices.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `|X|`, the parameter value the kernelizations are measured against.
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Whether the witness certifies its kind on `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        validate_witness(g, &self.vertices, self.kind)
    }
}

/// Whether `g − x` lies in the class named by `kind` (or, for
/// `DominatingSet`, whether `x` dominates `g`). `x` may be unsorted and may
/// contain duplicates; all entries must be vertices of `g`.
pub fn validate_witness(g: &Graph, x: &[usize], kind: WitnessKind) -> bool {
    assert!(
        x.iter().all(|&v| v < g.n()),
        "witness vertex out of range"
    );
    let mut in_x = vec![false; g.n()];
    for &v in x {
        in_x[v] = true;
    }
    match kind {
        WitnessKind::VertexCover => g
            .edges()
            .iter()
            .all(|&(u, v)| in_x[u] || in_x[v]),
        WitnessKind::TwinCover => g.edges().iter().all(|&(u, v)| {
            in_x[u] || in_x[v] || closed_neighborhoods_equal(g, u, v)
        }),
        WitnessKind::ModCluster => g
            .components_avoiding(x)
            .iter()
            .all(|comp| g.is_clique(comp)),
        WitnessKind::ModClique => {
            let comps = g.components_avoiding(x);
            comps.len() <= 1 && comps.iter().all(|comp| g.is_clique(comp))
        }
        WitnessKind::ModCoCluster => {
            let keep: Vec<usize> = g.vertices().filter(|&v| !in_x[v]).collect();
            let (h, _) = g.induced_subgraph(&keep);
            h.complement_components()
                .iter()
                .all(|part| h.is_stable_set(part))
        }
        WitnessKind::ModLinearForest => is_linear_forest_avoiding(g, &in_x),
        WitnessKind::ModPath => {
            is_linear_forest_avoiding(g, &in_x) && g.components_avoiding(x).len() <= 1
        }
        WitnessKind::DominatingSet => g
            .vertices()
            .all(|v| in_x[v] || g.neighbors(v).iter().any(|&w| in_x[w])),
    }
}

/// Whether `N[u] = N[v]` in `g`. Adjacent vertices satisfying this are true
/// twins.
fn closed_neighborhoods_equal(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu: Vec<usize> = g.neighbors(u).to_vec();
    nu.push(u);
    nu.sort_unstable();
    let mut nv: Vec<usize> = g.neighbors(v).to_vec();
    nv.push(v);
    nv.sort_unstable();
    nu == nv
}

/// Whether `g − x` (given as membership flags) is a disjoint union of
/// paths: maximum degree 2 and no cycles.
fn is_linear_forest_avoiding(g: &Graph, in_x: &[bool]) -> bool {
    let outside: Vec<usize> = g.vertices().filter(|&v| !in_x[v]).collect();
    let deg = |v: usize| g.neighbors(v).iter().filter(|&&w| !in_x[w]).count();
    if outside.iter().any(|&v| deg(v) > 2) {
        return false;
    }
    let x: Vec<usize> = g.vertices().filter(|&v| in_x[v]).collect();
    g.components_avoiding(&x).iter().all(|comp| {
        let internal_edges: usize = comp.iter().map(|&v| deg(v)).sum::<usize>() / 2;
        internal_edges == comp.len() - 1
    })
}

/// A checkable YES-certificate: `V = S ∪ A ∪ B` with `S` a stable set, `A`
/// and `B` nonempty, and no edge between `A` and `B`. Then `S` is a stable
/// cutset of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutsetCertificate {
    /// The stable cutset `S` (may be empty for disconnected graphs).
    pub cutset: Vec<usize>,
    /// One side `A` of the split, nonempty.
    pub side_a: Vec<usize>,
    /// The other side `B`, nonempty.
    pub side_b: Vec<usize>,
}

impl CutsetCertificate {
    /// Builds a certificate with all three parts sorted.
    pub fn new(mut cutset: Vec<usize>, mut side_a: Vec<usize>, mut side_b: Vec<usize>) -> Self {
        cutset.sort_unstable();
        side_a.sort_unstable();
        side_b.sort_unstable();
        CutsetCertificate {
            cutset,
            side_a,
            side_b,
        }
    }
}

/// Checks every certificate invariant against `g`: the three parts
/// partition `V(g)`, `S` is stable, `A` and `B` are nonempty, and no edge
/// joins `A` to `B`.
pub fn verify_certificate(g: &Graph, c: &CutsetCertificate) -> bool {
    const UNSEEN: u8 = 0;
    const IN_S: u8 = 1;
    const IN_A: u8 = 2;
    const IN_B: u8 = 3;
    let mut label = vec![UNSEEN; g.n()];
    let parts = [(&c.cutset, IN_S), (&c.side_a, IN_A), (&c.side_b, IN_B)];
    for (part, tag) in parts {
        for &v in part.iter() {
            if v >= g.n() || label[v] != UNSEEN {
                return false;
            }
            label[v] = tag;
        }
    }
    if label.iter().any(|&l| l == UNSEEN) {
        return false;
    }
    if c.side_a.is_empty() || c.side_b.is_empty() {
        return false;
    }
    g.edges().iter().all(|&(u, v)| {
        let pair = (label[u].min(label[v]), label[u].max(label[v]));
        pair != (IN_S, IN_S) && pair != (IN_A, IN_B)
    })
}

/// Whether `s` (a stable set) disconnects `g` — the defining property,
/// checked directly. Used as an independent cross-check on certificates.
pub fn is_stable_cutset(g: &Graph, s: &[usize]) -> bool {
    if !g.is_stable_set(s) {
        return false;
    }
    g.components_avoiding(s).len() >= 2
}

/// Convenience used by Rule 1: a graph has an "immediate" YES when it is
/// disconnected (the empty set is a cutset) or has a cut-vertex `v`
/// (`S = {v}` is a stable cutset).
pub fn has_trivial_cutset(g: &Graph) -> bool {
    !g.is_connected() || !articulation_points(g).is_empty()
}
