//! Kernelize instances whose witness is a twin cover `X`: every edge
//! outside `X` joins two true twins, so the outside splits into cliques of
//! mutual twins. Beyond `|X|²` twin pairs the pair rule either finds a
//! simple cutset (YES) or discards an unmarked pair per pass, landing
//! inside `|X|³ + 2|X|² + |X|` vertices.
//!
//! Run with `cargo run --example kernelize_twin_cover`.

use stable_cutset::{
    kernel_size_bound, kernelize, Graph, ReductionOutcome, Witness, WitnessKind,
};

fn main() {
    // X is the edge {0, 1}; outside are twin pairs, each pair wired to both
    // cover vertices so that no neighborhood is stable and no vertex is
    // simplicial.
    let k = 2;
    let pairs = 40;
    let mut edges = vec![(0, 1)];
    for p in 0..pairs {
        let a = k + 2 * p;
        let b = a + 1;
        edges.push((a, b));
        for x in 0..k {
            edges.push((x, a));
            edges.push((x, b));
        }
    }
    let g = Graph::from_edges(k + 2 * pairs, &edges).unwrap();
    let x = Witness::new(WitnessKind::TwinCover, vec![0, 1]);

    println!("twin-pair instance: n = {}, |X| = {k}, {pairs} pairs", g.n());
    match kernelize(&g, &x).expect("witness is valid") {
        ReductionOutcome::Decided { answer, trace } => println!(
            "decided after {} rule firings: {}",
            trace.events.len(),
            if answer { "YES" } else { "NO" }
        ),
        ReductionOutcome::Reduced { graph, witness, trace } => {
            println!(
                "kernel with {} vertices after {} rule firings (bound {})",
                graph.n(),
                trace.events.len(),
                kernel_size_bound(&graph, &witness).expect("twin cover has a bound")
            );
            let deletions: usize = trace
                .events
                .iter()
                .map(|e| e.deleted.len())
                .sum();
            println!("{deletions} vertices deleted across the run");
        }
    }
}
