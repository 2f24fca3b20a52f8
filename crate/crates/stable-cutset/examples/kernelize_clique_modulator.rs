//! Kernelize instances whose witness `X` leaves a single clique behind:
//! any clique vertex whose modulator neighbors all keep two other
//! attachments in the clique is redundant, so oversized cliques melt down
//! to at most `3·|X|` vertices — or the whole instance gets decided on the
//! way.
//!
//! Run with `cargo run --example kernelize_clique_modulator`.

use stable_cutset::{
    kernel_size_bound, kernelize, Graph, ReductionOutcome, Witness, WitnessKind,
};

fn report(label: &str, g: &Graph, x: &Witness) {
    println!("{label}: n = {}, |X| = {}", g.n(), x.size());
    match kernelize(g, x).expect("witness is valid") {
        ReductionOutcome::Decided { answer, trace } => println!(
            "  decided after {} rule firings: {}",
            trace.events.len(),
            if answer { "YES" } else { "NO" }
        ),
        ReductionOutcome::Reduced { graph, witness, trace } => println!(
            "  kernel with {} vertices after {} rule firings (bound {})",
            graph.n(),
            trace.events.len(),
            kernel_size_bound(&graph, &witness).expect("clique modulators have a bound")
        ),
    }
}

/// A clique on `c` vertices behind a modulator clique of size `k`, with
/// modulator vertex `t` adjacent to every clique member except member `t`:
/// neighborhoods stay unstable, nothing is simplicial, and the shrink rule
/// has plenty to chew on.
fn near_complete(k: usize, c: usize) -> (Graph, Witness) {
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b));
        }
    }
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
    let g = Graph::from_edges(k + c, &edges).unwrap();
    (g, Witness::new(WitnessKind::ModClique, (0..k).collect()))
}

/// A triangle with each modulator vertex pinned to two of its corners, so
/// every corner keeps a modulator neighbor with too few spare attachments
/// and the shrink rule stays quiet: an irreducible kernel.
fn pinned_triangle(k: usize) -> (Graph, Witness) {
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b));
        }
    }
    edges.extend([(k, k + 1), (k, k + 2), (k + 1, k + 2)]);
    for t in 0..k {
        edges.push((t, k + t % 3));
        edges.push((t, k + (t + 1) % 3));
    }
    let g = Graph::from_edges(k + 3, &edges).unwrap();
    (g, Witness::new(WitnessKind::ModClique, (0..k).collect()))
}

fn main() {
    let (g, x) = near_complete(3, 40);
    report("40-clique, nearly fully wired", &g, &x);

    let (g, x) = pinned_triangle(3);
    report("pinned triangle", &g, &x);
}
