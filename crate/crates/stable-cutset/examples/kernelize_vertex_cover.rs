//! Kernelize instances whose witness is a vertex cover `X`: everything
//! outside `X` is stable, so once the outside outgrows `|X|³`, the marking
//! rule keeps one representative per modulator triple and deletes the rest
//! in bulk. The kernel never exceeds `|X|³ + |X|` vertices.
//!
//! Run with `cargo run --example kernelize_vertex_cover`.

use stable_cutset::{
    generate_planted, kernel_size_bound, kernelize, GeneratorConfig, Graph, ReductionOutcome,
    Witness, WitnessKind,
};

fn report(label: &str, g: &Graph, x: &Witness) {
    println!("{label}: n = {}, |X| = {}", g.n(), x.size());
    let outcome = kernelize(g, x).expect("witness is valid");
    let fired: Vec<&str> = outcome.trace().events.iter().map(|e| e.rule.label()).collect();
    match outcome {
        ReductionOutcome::Decided { answer, .. } => println!(
            "  decided by [{}]: {}",
            fired.join(", "),
            if answer { "YES" } else { "NO" }
        ),
        ReductionOutcome::Reduced { graph, witness, .. } => {
            let bound = kernel_size_bound(&graph, &witness).expect("vertex cover has a bound");
            println!(
                "  kernel with {} vertices via [{}] (bound {})",
                graph.n(),
                fired.join(", "),
                bound
            );
        }
    }
}

fn main() {
    // Random wiring nearly always hands some outside vertex a stable
    // neighborhood, so the pipeline usually decides random instances.
    let (g, x) = generate_planted(&GeneratorConfig {
        kind: WitnessKind::VertexCover,
        witness_size: 3,
        outside_size: 120,
        edge_probability: 0.5,
        seed: 1,
    });
    report("random planted instance", &g, &x);

    // To reach the marking rule the instance has to dodge the decision
    // rules: make X a clique and wire every outside vertex to at least
    // two cover vertices, so no neighborhood is stable.
    let k = 4;
    let outside = 400;
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b));
        }
    }
    for v in 0..outside {
        let a = v % k;
        edges.push((k + v, a));
        edges.push((k + v, (a + 1) % k));
        if v % 7 == 0 {
            edges.push((k + v, (a + 2) % k));
        }
    }
    let g = Graph::from_edges(k + outside, &edges).unwrap();
    let x = Witness::new(WitnessKind::VertexCover, (0..k).collect());
    report("saturated instance", &g, &x);
}
