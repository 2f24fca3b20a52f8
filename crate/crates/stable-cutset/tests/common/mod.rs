//! Shared helpers for the integration suites: a brute-force stable-cutset
//! oracle that is independent of the library's searcher, seeded random
//! graph builders, and planted-witness instance families for the
//! kernelization pipelines.

// Each integration target compiles this module separately and uses a
// different slice of it.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stable_cutset::{Graph, Witness, WitnessKind};

/// Exhaustive ground truth: does `g` have a stable cutset? Tries all `2ⁿ`
/// candidate sets over bitmask adjacency, so it shares no code with the
/// library's backtracking searcher.
pub fn has_stable_cutset_naive(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 24, "naive oracle is exponential in n");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full: u32 = if n == 32 { !0 } else { (1u32 << n) - 1 };
    's: for s in 0..=full {
        let mut rest_of_s = s;
        while rest_of_s != 0 {
            let v = rest_of_s.trailing_zeros() as usize;
            rest_of_s &= rest_of_s - 1;
            if adj[v] & s != 0 {
                continue 's; // not stable
            }
        }
        let rest = full & !s;
        if rest == 0 {
            continue;
        }
        // Flood-fill one component of g − s and compare.
        let mut comp = 1u32 << rest.trailing_zeros();
        loop {
            let mut grown = comp;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= adj[v] & rest;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        if comp != rest {
            return true;
        }
    }
    false
}

/// Smallest stable cutset size, or `None` if the graph has none.
pub fn min_stable_cutset_size_naive(g: &Graph) -> Option<usize> {
    let n = g.n();
    assert!(n <= 20, "naive minimum search is exponential in n");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full: u32 = if n == 32 { !0 } else { (1u32 << n) - 1 };
    let mut best: Option<usize> = None;
    's: for s in 0..=full {
        let size = s.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let mut rest_of_s = s;
        while rest_of_s != 0 {
            let v = rest_of_s.trailing_zeros() as usize;
            rest_of_s &= rest_of_s - 1;
            if adj[v] & s != 0 {
                continue 's;
            }
        }
        let rest = full & !s;
        if rest == 0 {
            continue;
        }
        let mut comp = 1u32 << rest.trailing_zeros();
        loop {
            let mut grown = comp;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= adj[v] & rest;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        if comp != rest {
            best = Some(size);
        }
    }
    best
}

/// Erdős–Rényi graph on `n` vertices with edge probability `p`.
pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Relabels `g` by a random permutation, returning the new graph and the
/// mapping `old id -> new id`.
pub fn shuffle_labels(rng: &mut ChaCha8Rng, g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    // Fisher–Yates.
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u], perm[v]))
        .collect();
    (Graph::from_edges(n, &edges).unwrap(), perm)
}

/// Deterministic RNG for a test, offset so suites don't share streams.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Builds a graph from possibly repeated edge pairs.
pub fn graph_from(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let set: BTreeSet<(usize, usize)> = edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    let list: Vec<(usize, usize)> = set.into_iter().collect();
    Graph::from_edges(n, &list).unwrap()
}

// ---------------------------------------------------------------------------
// Planted instances that provably reach the marking rules.
//
// Random wiring almost always hands some vertex a stable neighborhood, so
// Rule 3 would decide such instances before any kernel rule ran. The
// builders below wire things so that every neighborhood contains an edge,
// nothing is simplicial, and no component has a simple cutset — forcing the
// pipelines into their marking rules and out the other side as kernels.
// ---------------------------------------------------------------------------

fn clique_edges(k: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b));
        }
    }
    edges
}

/// A uniformly chosen `size`-subset of `0..k`.
fn random_contacts(r: &mut ChaCha8Rng, k: usize, size: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..k).collect();
    for i in 0..size {
        let j = r.random_range(i..k);
        pool.swap(i, j);
    }
    pool.truncate(size);
    pool
}

/// `X = K_k`; every outside vertex is independent and wired to at least
/// two cover vertices, so its neighborhood contains a cover edge.
pub fn saturated_vc(r: &mut ChaCha8Rng, k: usize, outside: usize) -> (Graph, Witness) {
    let mut edges = clique_edges(k);
    for v in k..k + outside {
        let s = r.random_range(2..=k);
        for x in random_contacts(r, k, s) {
            edges.push((x, v));
        }
    }
    (
        graph_from(k + outside, edges),
        Witness::new(WitnessKind::VertexCover, (0..k).collect()),
    )
}

/// `X = K_k`; outside is singletons and twin pairs, each twin class wired
/// to one shared set of at least two cover vertices.
pub fn saturated_tc(r: &mut ChaCha8Rng, k: usize, outside: usize) -> (Graph, Witness) {
    let mut edges = clique_edges(k);
    let mut v = k;
    let end = k + outside;
    while v < end {
        let size = if v + 1 < end && r.random_bool(0.5) { 2 } else { 1 };
        if size == 2 {
            edges.push((v, v + 1));
        }
        let s = r.random_range(2..=k);
        for x in random_contacts(r, k, s) {
            for member in v..v + size {
                edges.push((x, member));
            }
        }
        v += size;
    }
    (
        graph_from(end, edges),
        Witness::new(WitnessKind::TwinCover, (0..k).collect()),
    )
}

/// `X = K_k`; components are K₄s whose first two members attach to one
/// modulator vertex and last two to another, so no candidate cutset of a
/// component is stable and no member is simplicial.
pub fn saturated_cluster(r: &mut ChaCha8Rng, k: usize, comps: usize) -> (Graph, Witness) {
    let mut edges = clique_edges(k);
    for c in 0..comps {
        let base = k + 4 * c;
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((base + a, base + b));
            }
        }
        let xi = r.random_range(0..k);
        let xj = (xi + 1 + r.random_range(0..k - 1)) % k;
        edges.extend([(xi, base), (xi, base + 1), (xj, base + 2), (xj, base + 3)]);
    }
    (
        graph_from(k + 4 * comps, edges),
        Witness::new(WitnessKind::ModCluster, (0..k).collect()),
    )
}

/// `X = K_k`; one K_c component where modulator vertex `t` misses exactly
/// member `t mod c`, so every neighborhood keeps a non-edge (needs c ≥ 5).
pub fn saturated_clique(k: usize, c: usize) -> (Graph, Witness) {
    let mut edges = clique_edges(k);
    for a in 0..c {
        for b in a + 1..c {
            edges.push((k + a, k + b));
        }
    }
    for t in 0..k {
        for m in 0..c {
            if m != t % c {
                edges.push((t, k + m));
            }
        }
    }
    (
        graph_from(k + c, edges),
        Witness::new(WitnessKind::ModClique, (0..k).collect()),
    )
}

/// An already-irreducible clique instance: a triangle outside, each
/// modulator vertex adjacent to two cyclically chosen members. Lands
/// inside the 3|X| bound with no rule applicable.
pub fn clique_terminal(k: usize) -> (Graph, Witness) {
    let mut edges = clique_edges(k);
    edges.extend([(k, k + 1), (k, k + 2), (k + 1, k + 2)]);
    for t in 0..k {
        edges.push((t, k + (t % 3)));
        edges.push((t, k + ((t + 1) % 3)));
    }
    (
        graph_from(k + 3, edges),
        Witness::new(WitnessKind::ModClique, (0..k).collect()),
    )
}

/// Complete multipartite outside. `paired = false`: four large parts, the
/// modulator adjacent to everything (Rule 13 grinds down to three parts).
/// `paired = true`: 2k parts with modulator vertex `i` wired to parts 2i
/// and 2i+1 only, which parks the output exactly on the ≥4-part bound.
pub fn saturated_cocluster(k: usize, outside: usize, paired: bool) -> (Graph, Witness) {
    let parts = if paired { 2 * k } else { 4 };
    let floor = if paired { 2 } else { k * k + 2 };
    let total = outside.max(parts * floor);
    let mut sizes = vec![floor; parts];
    for i in 0..total - parts * floor {
        sizes[i % parts] += 1;
    }
    let mut bounds = vec![k];
    for &s in &sizes {
        bounds.push(bounds.last().unwrap() + s);
    }
    let mut edges = clique_edges(k);
    for pi in 0..parts {
        for pj in pi + 1..parts {
            for a in bounds[pi]..bounds[pi + 1] {
                for b in bounds[pj]..bounds[pj + 1] {
                    edges.push((a, b));
                }
            }
        }
    }
    for x in 0..k {
        let wired: Vec<usize> = if paired {
            vec![2 * x, 2 * x + 1]
        } else {
            (0..4).collect()
        };
        for p in wired {
            for v in bounds[p]..bounds[p + 1] {
                edges.push((x, v));
            }
        }
    }
    (
        graph_from(k + total, edges),
        Witness::new(WitnessKind::ModCoCluster, (0..k).collect()),
    )
}

/// Full-scale single-clique instance that stays cheap: the modulator is
/// edgeless and each of its vertices hangs off one distinct clique member.
/// Every attachment point is a cut vertex, so the pipeline settles the
/// instance in one pass no matter how large the clique is.
pub fn sparse_full_clique(k: usize, c: usize) -> (Graph, Witness) {
    let c = c.max(k).max(2);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(c * (c - 1) / 2 + k);
    for a in k..k + c {
        for b in a + 1..k + c {
            edges.push((a, b));
        }
    }
    for x in 0..k {
        edges.push((x, k + x));
    }
    (
        graph_from(k + c, edges),
        Witness::new(WitnessKind::ModClique, (0..k).collect()),
    )
}

/// Full-scale complete-multipartite instance that stays cheap for the same
/// reason as [`sparse_full_clique`]: each modulator vertex hangs off a single
/// outside vertex, so a cut vertex settles the instance in one pass.
pub fn sparse_full_cocluster(k: usize, outside: usize) -> (Graph, Witness) {
    let outside = outside.max(k).max(8);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for a in 0..outside {
        for b in a + 1..outside {
            if a / 4 != b / 4 {
                edges.push((k + a, k + b));
            }
        }
    }
    for x in 0..k {
        edges.push((x, k + x));
    }
    (
        graph_from(k + outside, edges),
        Witness::new(WitnessKind::ModCoCluster, (0..k).collect()),
    )
}
