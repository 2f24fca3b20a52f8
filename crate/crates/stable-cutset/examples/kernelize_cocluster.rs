//! Kernelize instances whose witness `X` is a co-cluster modulator: `g − X`
//! is a complete multipartite graph. With at most one part the outside is
//! edgeless and the vertex-cover marking takes over; with four or more
//! parts the stable-set rules shrink oversized parts and drop vertices
//! whose modulator neighbors spread across three parts.
//!
//! Run with `cargo run --example kernelize_cocluster`.

use stable_cutset::{
    kernel_size_bound, kernelize, Graph, ReductionOutcome, Witness, WitnessKind,
};

/// `parts` parts of size `size` behind a clique modulator of size `k`,
/// with modulator vertex `i` wired to every vertex of parts `2i` and
/// `2i + 1` — each modulator neighborhood meets exactly two parts, which
/// keeps every rule quiet except the part-size one.
fn paired(k: usize, parts: usize, size: usize) -> (Graph, Witness) {
    assert!(parts >= 2 * k);
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b));
        }
    }
    let vertex = |p: usize, i: usize| k + p * size + i;
    for pa in 0..parts {
        for pb in pa + 1..parts {
            for a in 0..size {
                for b in 0..size {
                    edges.push((vertex(pa, a), vertex(pb, b)));
                }
            }
        }
    }
    for x in 0..k {
        for p in [2 * x, 2 * x + 1] {
            for i in 0..size {
                edges.push((x, vertex(p, i)));
            }
        }
    }
    let g = Graph::from_edges(k + parts * size, &edges).unwrap();
    (g, Witness::new(WitnessKind::ModCoCluster, (0..k).collect()))
}

fn describe(label: &str, g: &Graph, x: &Witness) {
    let parts = parts_of_complement(g, x);
    println!("{label}: n = {}, |X| = {}, {} parts", g.n(), x.size(), parts);
    match kernelize(g, x).expect("witness is valid") {
        ReductionOutcome::Decided { answer, trace } => println!(
            "  decided after {} rule firings: {}",
            trace.events.len(),
            if answer { "YES" } else { "NO" }
        ),
        ReductionOutcome::Reduced { graph, witness, trace } => println!(
            "  kernel with {} vertices ({} parts) after {} rule firings (bound {})",
            graph.n(),
            parts_of_complement(&graph, &witness),
            trace.events.len(),
            kernel_size_bound(&graph, &witness).expect("co-cluster modulators have a bound")
        ),
    }
}

/// Number of parts of the complete multipartite graph `g − X`.
fn parts_of_complement(g: &Graph, x: &Witness) -> usize {
    let (outside, _) = g.delete_vertices(x.vertices());
    outside.complement_components().len()
}

fn main() {
    // Oversized parts beyond |X|² shed their unmarked vertices one at a
    // time; every modulator neighborhood meeting only two parts keeps the
    // spread rule quiet, so the run parks exactly on the part-size bound.
    let (g, x) = paired(2, 4, 9);
    describe("paired wiring, oversized parts", &g, &x);

    // One part only: the outside is a stable set, so the pipeline falls
    // back to vertex-cover marking over the modulator triples.
    let k = 3;
    let outside = 100;
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for v in 0..outside {
        edges.push((k + v, v % k));
        edges.push((k + v, (v + 1) % k));
    }
    let g = Graph::from_edges(k + outside, &edges).unwrap();
    let x = Witness::new(WitnessKind::ModCoCluster, (0..k).collect());
    describe("single stable part", &g, &x);
}
