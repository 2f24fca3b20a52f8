//! Simple undirected graphs with dense, 0-based vertex ids.
//!
//! All structural queries used by the reduction rules live here: connected
//! components, articulation points, subset classification (stable set /
//! clique), twin classes, clique-module triplets, and the stable-set
//! decomposition of co-cluster graphs (connected components of the
//! complement).
//!
//! Every operation is deterministic: neighbor lists are kept sorted, all
//! returned vertex sets are sorted, and lists of sets are ordered by their
//! minimum element. Graphs are immutable after construction; "deleting"
//! vertices produces a new graph together with the mapping back to the old
//! ids.

use std::collections::HashMap;

use thiserror::Error;

/// Errors raised while building a [`Graph`] from an edge list.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// An endpoint is not in `0..n`.
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    /// Both endpoints of an edge coincide.
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
}

/// An undirected graph on vertices `0..n` stored as sorted adjacency lists.
///
/// Parallel edges are collapsed; self-loops are rejected. A graph with at
/// most one vertex counts as connected and as a clique (so the degenerate
/// cases of the reduction rules resolve the way the correctness proofs
/// expect).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, deduplicating repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`; requires `n ≥ 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("clique edges are valid")
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Iterator over all vertex ids.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// The sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Whether `u` and `v` are adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced by `keep` (sorted, duplicate-free, in range),
    /// relabeled to dense ids. Returns the subgraph together with the list
    /// `orig` where `orig[new_id] = old_id`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if new_id[w] != usize::MAX {
                    adj[i].push(new_id[w]);
                }
            }
            m += adj[i].len();
        }
        (Graph { adj, m: m / 2 }, keep.to_vec())
    }

    /// The graph obtained by deleting the (sorted, duplicate-free) vertex
    /// set `del`, relabeled to dense ids; returns the mapping `orig[new] =
    /// old` for the surviving vertices.
    pub fn delete_vertices(&self, del: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(del.windows(2).all(|w| w[0] < w[1]));
        let mut drop = vec![false; self.n()];
        for &v in del {
            drop[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components as sorted vertex sets, ordered by minimum
    /// element. The empty graph has no components.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// Connected components of `g − x`, reported in the *original* vertex
    /// ids (no relabeling). `x` need not be sorted.
    pub fn components_avoiding(&self, x: &[usize]) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.n()];
        for &v in x {
            visited[v] = true;
        }
        let mut comps = Vec::new();
        let mut queue = Vec::new();
        for start in self.vertices() {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            queue.clear();
            queue.push(start);
            let mut comp = vec![start];
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    if !visited[w] {
                        visited[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Whether the graph is connected; graphs on at most one vertex count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Sorted open neighborhood of a vertex set: `N(s) \ s`.
    pub fn set_neighborhood(&self, s: &[usize]) -> Vec<usize> {
        let mut in_s = vec![false; self.n()];
        for &v in s {
            in_s[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for &v in s {
            for &w in &self.adj[v] {
                if !in_s[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether `s` (duplicate-free) induces no edge.
    pub fn is_stable_set(&self, s: &[usize]) -> bool {
        if !s.is_sorted() {
            let mut sorted = s.to_vec();
            sorted.sort_unstable();
            return self.is_stable_set(&sorted);
        }
        // Sorted-merge intersection per member: allocation-free and exits
        // on the first edge found.
        s.iter().all(|&v| !sorted_intersect(&self.adj[v], s))
    }

    /// Whether `s` (duplicate-free) induces a complete graph. Sets of size
    /// at most one are cliques.
    pub fn is_clique(&self, s: &[usize]) -> bool {
        if s.len() <= 1 {
            return true;
        }
        if !s.is_sorted() {
            let mut sorted = s.to_vec();
            sorted.sort_unstable();
            return self.is_clique(&sorted);
        }
        // Each member must list every other member among its (sorted)
        // neighbors; the merge stops at the first missing one.
        s.iter().all(|&v| {
            let adj = &self.adj[v];
            let mut i = 0;
            for &w in s {
                if w == v {
                    continue;
                }
                while i < adj.len() && adj[i] < w {
                    i += 1;
                }
                if i == adj.len() || adj[i] != w {
                    return false;
                }
                i += 1;
            }
            true
        })
    }

    /// Sorted connected components of the *complement* graph, ordered by
    /// minimum element. For a co-cluster graph these are exactly the stable
    /// sets whose join the graph is.
    pub fn complement_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut unvisited: Vec<usize> = self.vertices().collect();
        let mut is_neighbor = vec![false; n];
        let mut comps = Vec::new();
        let mut queue = Vec::new();
        while let Some(start) = unvisited.first().copied() {
            unvisited.remove(0);
            queue.clear();
            queue.push(start);
            let mut comp = vec![start];
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    is_neighbor[w] = true;
                }
                // Complement-neighbors of v are the unvisited non-neighbors.
                let mut remaining = Vec::with_capacity(unvisited.len());
                for &w in &unvisited {
                    if is_neighbor[w] {
                        remaining.push(w);
                    } else {
                        comp.push(w);
                        queue.push(w);
                    }
                }
                unvisited = remaining;
                for &w in &self.adj[v] {
                    is_neighbor[w] = false;
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Vertices whose removal increases the number of connected components,
/// sorted ascending. Computed with an iterative lowpoint DFS so deep graphs
/// cannot overflow the call stack.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    // Explicit DFS stack: (vertex, parent, index into neighbor list).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut root_children = 0;
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    if v == root {
                        root_children += 1;
                    }
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (u, _, _)) = stack.last_mut() {
                    low[u] = low[u].min(low[v]);
                    if u != root && low[v] >= disc[u] {
                        is_cut[u] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    g.vertices().filter(|&v| is_cut[v]).collect()
}

/// How a vertex subset relates to the edges it induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetClass {
    /// No induced edge, and at least two vertices.
    Stable,
    /// All pairs adjacent, and at least two vertices.
    Clique,
    /// At most one vertex: stable and complete at the same time.
    Both,
    /// Some pair adjacent and some pair not.
    Neither,
}

/// Classifies `s ⊆ V(g)` as stable set, clique, both (when `|s| ≤ 1`), or
/// neither.
pub fn classify_subset(g: &Graph, s: &[usize]) -> SubsetClass {
    let stable = g.is_stable_set(s);
    let clique = g.is_clique(s);
    match (stable, clique) {
        (true, true) => SubsetClass::Both,
        (true, false) => SubsetClass::Stable,
        (false, true) => SubsetClass::Clique,
        (false, false) => SubsetClass::Neither,
    }
}

/// Partition of the vertices into maximal classes of mutual twins, where
/// `u` and `v` are twins when `N(u) = N(v)` (false twins) or `N[u] = N[v]`
/// (true twins). Classes are sorted, and listed by minimum element.
///
/// A class of size ≥ 2 is either entirely false twins (a stable set) or
/// entirely true twins (a clique): sharing open and closed neighborhoods
/// across one class at the same time is impossible, so grouping by the two
/// neighborhood keys independently yields the maximal classes.
pub fn twin_partition(g: &Graph) -> Vec<Vec<usize>> {
    let mut open: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for v in g.vertices() {
        open.entry(g.neighbors(v)).or_default().push(v);
    }
    let mut closed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in g.vertices() {
        let mut key = g.neighbors(v).to_vec();
        let pos = key.binary_search(&v).unwrap_err();
        key.insert(pos, v);
        closed.entry(key).or_default().push(v);
    }
    let mut assigned = vec![false; g.n()];
    let mut classes = Vec::new();
    for class in open.into_values().chain(closed.into_values()) {
        if class.len() >= 2 {
            for &v in &class {
                assigned[v] = true;
            }
            classes.push(class);
        }
    }
    for v in g.vertices() {
        if !assigned[v] {
            classes.push(vec![v]);
        }
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

/// Whether two sorted, duplicate-free lists share an element.
fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Whether `s` is a module of `g`: all members have the same neighborhood
/// outside `s`.
pub fn is_module(g: &Graph, s: &[usize]) -> bool {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    let outside = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !in_s[w])
            .collect()
    };
    match s.split_first() {
        None => true,
        Some((&first, rest)) => {
            let reference = outside(first);
            rest.iter().all(|&v| outside(v) == reference)
        }
    }
}

/// The lexicographically smallest triplet `(u, v, w)` that is both a clique
/// and a module of `g`, or `None` if every clique module has at most two
/// vertices.
///
/// A triple is a clique module exactly when its members share one closed
/// neighborhood: equality makes them pairwise adjacent and gives them
/// identical attachments outside the triple. Grouping by closed
/// neighborhood finds all candidates in one linear pass.
pub fn find_clique_module_triplet(g: &Graph) -> Option<(usize, usize, usize)> {
    let mut classes: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in g.vertices() {
        let mut closed = g.neighbors(v).to_vec();
        let pos = closed.partition_point(|&w| w < v);
        closed.insert(pos, v);
        classes.entry(closed).or_default().push(v);
    }
    classes
        .into_values()
        .filter(|members| members.len() >= 3)
        .min_by_key(|members| members[0])
        .map(|members| (members[0], members[1], members[2]))
}
