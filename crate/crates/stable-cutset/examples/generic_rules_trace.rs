//! Run the six label-independent reduction rules to a fixpoint and narrate
//! every step: which rule fired, what it deleted (in the ids of the input
//! graph), or how it decided the instance. One graph per rule, each built
//! so that the earlier rules stay quiet.
//!
//! Run with `cargo run --example generic_rules_trace`.

use stable_cutset::{run_generic_fixpoint, Graph};

fn narrate(name: &str, g: &Graph) {
    println!("{name} (n = {}, m = {}):", g.n(), g.m());
    let fp = run_generic_fixpoint(g);
    for event in &fp.trace.events {
        match event.decision {
            Some(answer) => println!(
                "  {} decided: {}",
                event.rule.label(),
                if answer { "has a stable cutset" } else { "has none" }
            ),
            None => println!("  {} deleted {:?}", event.rule.label(), event.deleted),
        }
    }
    if fp.decision.is_none() {
        println!(
            "  irreducible remainder with {} vertices and {} edges",
            fp.graph.n(),
            fp.graph.m()
        );
    }
    println!();
}

fn main() {
    // Two triangles sharing a vertex: the shared vertex is a cut vertex,
    // which answers YES outright.
    let bowtie =
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
    narrate("bowtie (cut vertex)", &bowtie);

    narrate("complete graph on 6 vertices", &Graph::complete(6));

    // Vertex 4 sees exactly {0, 3}, which are nonadjacent: its stable
    // neighborhood separates it from the rest.
    let diamond_tail = Graph::from_edges(
        5,
        &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 4)],
    )
    .unwrap();
    narrate("diamond with a hooked tail (stable neighborhood)", &diamond_tail);

    // Two K4s sharing the edge {0, 1}: two-connected, incomplete, every
    // neighborhood has an edge — but the private K4 corners are simplicial
    // and melt away one by one until a clique remains.
    let shared_edge = Graph::from_edges(
        6,
        &[
            (0, 1),
            (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
            (0, 4), (0, 5), (1, 4), (1, 5), (4, 5),
        ],
    )
    .unwrap();
    narrate("two K4s sharing an edge (simplicial cascade)", &shared_edge);

    // A four-cycle joined completely to a triangle: opposite cycle corners
    // see exactly the same vertices, so one of them is redundant — and its
    // removal makes the rest simplicial.
    let mut edges = vec![(3, 4), (4, 5), (5, 6), (3, 6)];
    for t in 0..3 {
        for c in 3..7 {
            edges.push((t, c));
        }
    }
    edges.extend([(0, 1), (0, 2), (1, 2)]);
    let join = Graph::from_edges(7, &edges).unwrap();
    narrate("four-cycle joined to a triangle (comparable neighborhoods)", &join);

    // Three mutually adjacent vertices {0, 1, 2} seen identically by a
    // five-cycle: a clique module of size three, one member redundant. The
    // remainder is irreducible.
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for t in 0..3 {
        for c in 3..8 {
            edges.push((t, c));
        }
    }
    edges.extend([(3, 4), (4, 5), (5, 6), (6, 7), (3, 7)]);
    let module = Graph::from_edges(8, &edges).unwrap();
    narrate("clique triple over a five-cycle (clique module)", &module);
}
