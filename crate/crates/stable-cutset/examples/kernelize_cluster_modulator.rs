//! Kernelize instances whose witness `X` is a cluster modulator: `g − X` is
//! a disjoint union of cliques. Components that admit a simple cutset end
//! the run with YES; clique components shed vertices the modulator does not
//! pin down; and once the component count passes `|X|³ + 3|X|⁴`, whole
//! unmarked components disappear.
//!
//! Run with `cargo run --example kernelize_cluster_modulator`.

use stable_cutset::{
    kernel_size_bound, kernelize, Graph, ReductionOutcome, Witness, WitnessKind,
};

/// `comps` four-vertex cliques behind a two-vertex modulator edge, wired so
/// that neighborhoods stay unstable and no component is simple: members 0,1
/// of each clique attach to one modulator vertex, members 2,3 to the other.
fn saturated(k: usize, comps: usize) -> (Graph, Witness) {
    let mut edges = vec![(0, 1)];
    for c in 0..comps {
        let base = k + 4 * c;
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((base + a, base + b));
            }
        }
        let xi = c % k;
        let xj = (xi + 1) % k;
        edges.extend([
            (xi, base),
            (xi, base + 1),
            (xj, base + 2),
            (xj, base + 3),
        ]);
    }
    let g = Graph::from_edges(k + 4 * comps, &edges).unwrap();
    (g, Witness::new(WitnessKind::ModCluster, (0..k).collect()))
}

fn main() {
    let k = 2;
    // |X|³ + 3|X|⁴ = 56 for k = 2, so 90 components overshoot the marking
    // threshold and the pipeline deletes unmarked components until the
    // count is back at the bound.
    let (g, x) = saturated(k, 90);
    println!("cluster instance: n = {}, |X| = {k}, 90 four-cliques", g.n());
    match kernelize(&g, &x).expect("witness is valid") {
        ReductionOutcome::Decided { answer, trace } => println!(
            "decided after {} rule firings: {}",
            trace.events.len(),
            if answer { "YES" } else { "NO" }
        ),
        ReductionOutcome::Reduced { graph, witness, trace } => {
            let comps = graph.components_avoiding(witness.vertices()).len();
            println!(
                "kernel with {} vertices in {} components after {} rule firings (bound {})",
                graph.n(),
                comps,
                trace.events.len(),
                kernel_size_bound(&graph, &witness).expect("cluster modulators have a bound")
            );
        }
    }

    // A component whose attachment in X is a stable set yields a simple
    // cutset and an immediate YES. Two triangles behind two nonadjacent
    // modulator vertices, each wired into both triangles by an edge so no
    // neighborhood is stable and nothing is a cut vertex — the component
    // rule is the first that can act, and it decides.
    let g = Graph::from_edges(
        8,
        &[
            (2, 3), (2, 4), (3, 4),
            (5, 6), (5, 7), (6, 7),
            (0, 2), (0, 3), (1, 3), (1, 4),
            (0, 5), (0, 6), (1, 6), (1, 7),
        ],
    )
    .unwrap();
    let x = Witness::new(WitnessKind::ModCluster, vec![0, 1]);
    if let ReductionOutcome::Decided { answer: true, trace } =
        kernelize(&g, &x).expect("witness is valid")
    {
        let last = trace.events.last().expect("a decision leaves an event");
        println!(
            "triangles with a stable attachment pair: YES, decided by {}",
            last.rule.label()
        );
    }
}
