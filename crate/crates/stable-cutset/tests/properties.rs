//! Randomized invariants over the whole API surface: the solver ignores
//! vertex labels, certificates always verify, text formats round-trip,
//! planted instances really carry their witnesses, and every reduction
//! pipeline preserves the answer it claims to preserve.

mod common;

use common::{has_stable_cutset_naive, min_stable_cutset_size_naive};
use proptest::prelude::*;
use stable_cutset::{
    emit_graph, emit_instance, emit_set_system, find_stable_cutset, generate_planted,
    kernel_size_bound, kernelize, min_stable_cutset, parse_graph, parse_instance,
    parse_set_system, run_generic_fixpoint, twin_partition, verify_certificate, GeneratorConfig,
    Graph, InstanceFile, ReductionOutcome, SetSystem, Witness, WitnessKind,
};

const KERNEL_KINDS: [WitnessKind; 5] = [
    WitnessKind::VertexCover,
    WitnessKind::TwinCover,
    WitnessKind::ModCluster,
    WitnessKind::ModClique,
    WitnessKind::ModCoCluster,
];

const ALL_KINDS: [WitnessKind; 8] = [
    WitnessKind::VertexCover,
    WitnessKind::TwinCover,
    WitnessKind::ModCluster,
    WitnessKind::ModClique,
    WitnessKind::ModCoCluster,
    WitnessKind::ModLinearForest,
    WitnessKind::ModPath,
    WitnessKind::DominatingSet,
];

/// A graph on `min_n..=max_n` vertices with every possible edge flipped on
/// independently.
fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |flips| {
                let mut edges = Vec::new();
                let mut idx = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if flips[idx] {
                            edges.push((a, b));
                        }
                        idx += 1;
                    }
                }
                Graph::from_edges(n, &edges).expect("in-range edges")
            },
        )
    })
}

/// A graph together with a permutation of its vertices.
fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(1, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| (perm[a], perm[b]))
        .collect();
    Graph::from_edges(g.n(), &edges).expect("permuted edges stay in range")
}

/// Configurations small enough for the brute-force oracle to double-check.
fn arb_planted() -> impl Strategy<Value = (Graph, Witness)> {
    (
        proptest::sample::select(&KERNEL_KINDS[..]),
        1usize..=3,
        0usize..=9,
        0.0f64..=1.0,
        any::<u64>(),
    )
        .prop_map(|(kind, witness_size, outside_size, edge_probability, seed)| {
            generate_planted(&GeneratorConfig {
                kind,
                witness_size,
                outside_size,
                edge_probability,
                seed,
            })
        })
}

proptest! {
    /// Relabeling the vertices never changes the answer.
    #[test]
    fn solver_ignores_vertex_labels((g, perm) in arb_graph_and_perm(7)) {
        let relabeled = relabel(&g, &perm);
        prop_assert_eq!(
            find_stable_cutset(&g).is_some(),
            find_stable_cutset(&relabeled).is_some()
        );
    }

    /// Whatever the searcher returns satisfies the certificate checker, and
    /// its yes/no verdict matches brute force.
    #[test]
    fn search_results_verify_and_match_brute_force(g in arb_graph(0, 7)) {
        let naive = has_stable_cutset_naive(&g);
        match find_stable_cutset(&g) {
            Some(cert) => {
                prop_assert!(naive, "searcher found a cutset brute force says cannot exist");
                prop_assert!(verify_certificate(&g, &cert));
            }
            None => prop_assert!(!naive, "searcher missed a cutset brute force found"),
        }
    }

    /// The size-capped search, run with the cap fully open, lands exactly on
    /// the brute-force minimum.
    #[test]
    fn min_search_finds_the_true_minimum(g in arb_graph(0, 7)) {
        match (min_stable_cutset(&g, g.n()), min_stable_cutset_size_naive(&g)) {
            (None, None) => {}
            (Some(cert), Some(best)) => {
                prop_assert!(verify_certificate(&g, &cert));
                prop_assert_eq!(cert.cutset.len(), best);
            }
            (got, want) => prop_assert!(
                false,
                "minimum search returned {:?}, brute force says {:?}",
                got.map(|c| c.cutset.len()),
                want
            ),
        }
    }

    /// Graph text round-trips with and without a witness line.
    #[test]
    fn graph_text_round_trips(
        g in arb_graph(1, 9),
        kind_idx in 0usize..ALL_KINDS.len(),
        picks in proptest::collection::vec(any::<bool>(), 9),
    ) {
        let vertices: Vec<usize> =
            (0..g.n()).filter(|&v| picks[v]).collect();
        let witness = if vertices.is_empty() {
            None
        } else {
            Some(Witness::new(ALL_KINDS[kind_idx], vertices))
        };
        let text = emit_graph(&g, witness.as_ref());
        let (back, back_witness) = parse_graph(&text).expect("emitted text parses");
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(&back_witness, &witness);
    }

    /// Set-system text round-trips, including budget and coloring lines.
    #[test]
    fn set_system_text_round_trips(
        n in 1usize..=6,
        raw_sets in proptest::collection::vec(
            proptest::collection::vec(0usize..6, 0..=4),
            0..=4
        ),
        k in proptest::option::of(1usize..=3),
        color_seed in proptest::collection::vec(1usize..=3, 6),
    ) {
        let sets: Vec<Vec<usize>> = raw_sets
            .into_iter()
            .map(|s| s.into_iter().map(|e| e % n).collect())
            .collect();
        let coloring = k.map(|k| {
            color_seed[..n].iter().map(|&c| 1 + (c - 1) % k).collect::<Vec<usize>>()
        });
        let sys = SetSystem::new(n, sets, k, coloring).expect("inputs are in range");
        let back = parse_set_system(&emit_set_system(&sys)).expect("emitted text parses");
        prop_assert_eq!(back, sys);
    }

    /// The twin partition agrees with the pairwise definition: two vertices
    /// share a class exactly when their open or closed neighborhoods match.
    #[test]
    fn twin_partition_matches_pairwise_definition(g in arb_graph(0, 8)) {
        let classes = twin_partition(&g);
        let mut class_of = vec![usize::MAX; g.n()];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                prop_assert_eq!(class_of[v], usize::MAX, "vertex listed twice");
                class_of[v] = i;
            }
        }
        prop_assert!(class_of.iter().all(|&c| c != usize::MAX), "vertex missing");
        let closed = |v: usize| {
            let mut s = g.neighbors(v).to_vec();
            s.insert(s.binary_search(&v).unwrap_err(), v);
            s
        };
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let twins =
                    g.neighbors(u) == g.neighbors(v) || closed(u) == closed(v);
                prop_assert_eq!(
                    class_of[u] == class_of[v],
                    twins,
                    "vertices {} and {} misclassified",
                    u,
                    v
                );
            }
        }
    }

    /// Planted instances really carry their witness, are deterministic in
    /// the seed, and survive the full instance-file round trip together
    /// with a certificate and a trace.
    #[test]
    fn planted_instances_are_valid_and_round_trip(
        (kind, witness_size, outside_size, edge_probability, seed) in (
            proptest::sample::select(&KERNEL_KINDS[..]),
            1usize..=3,
            0usize..=9,
            0.0f64..=1.0,
            any::<u64>(),
        )
    ) {
        let config = GeneratorConfig {
            kind,
            witness_size,
            outside_size,
            edge_probability,
            seed,
        };
        let (g, w) = generate_planted(&config);
        let again = generate_planted(&config);
        prop_assert_eq!(&again.0, &g, "same seed, different graph");
        prop_assert_eq!(&again.1, &w, "same seed, different witness");
        prop_assert!(w.is_valid_for(&g), "planted witness does not validate");

        let outcome = kernelize(&g, &w).expect("valid witness kernelizes");
        let certificate = find_stable_cutset(&g);
        // An empty trace emits as no trace section at all, so only attach
        // one when the pipeline actually did something.
        let trace = (!outcome.trace().events.is_empty()).then(|| outcome.trace().clone());
        let inst = InstanceFile {
            graph: g,
            witness: Some(w),
            certificate,
            trace,
            roles: None,
        };
        let back = parse_instance(&emit_instance(&inst)).expect("emitted text parses");
        prop_assert_eq!(back, inst);
    }

    /// The kernelization pipeline never changes the answer, and whatever it
    /// outputs respects its own published size bound.
    #[test]
    fn kernelize_preserves_answer_and_bound((g, w) in arb_planted()) {
        let answer = has_stable_cutset_naive(&g);
        match kernelize(&g, &w).expect("valid witness kernelizes") {
            ReductionOutcome::Decided { answer: got, .. } => {
                prop_assert_eq!(got, answer, "pipeline decided the wrong way");
            }
            ReductionOutcome::Reduced { graph, witness, .. } => {
                prop_assert_eq!(
                    has_stable_cutset_naive(&graph),
                    answer,
                    "pipeline changed the answer"
                );
                prop_assert!(witness.is_valid_for(&graph));
                let bound = kernel_size_bound(&graph, &witness)
                    .expect("kernel kinds have bounds");
                prop_assert!((graph.n() as u128) <= bound);
            }
        }
    }

    /// The label-independent rule loop preserves the answer whether or not
    /// it reaches a decision.
    #[test]
    fn generic_fixpoint_preserves_the_answer(g in arb_graph(0, 8)) {
        let answer = has_stable_cutset_naive(&g);
        let fp = run_generic_fixpoint(&g);
        match fp.decision {
            Some(got) => prop_assert_eq!(got, answer),
            None => prop_assert_eq!(has_stable_cutset_naive(&fp.graph), answer),
        }
    }

    /// `components_avoiding` really partitions the remaining vertices into
    /// connected pieces with no edges between them.
    #[test]
    fn components_avoiding_is_a_partition(
        g in arb_graph(0, 8),
        picks in proptest::collection::vec(any::<bool>(), 8),
    ) {
        let avoid: Vec<usize> = (0..g.n()).filter(|&v| picks[v]).collect();
        let comps = g.components_avoiding(&avoid);
        let mut comp_of = vec![usize::MAX; g.n()];
        for (i, comp) in comps.iter().enumerate() {
            prop_assert!(!comp.is_empty());
            for &v in comp {
                prop_assert!(!avoid.contains(&v), "avoided vertex reported");
                prop_assert_eq!(comp_of[v], usize::MAX, "vertex in two components");
                comp_of[v] = i;
            }
        }
        for v in 0..g.n() {
            prop_assert_eq!(
                comp_of[v] == usize::MAX,
                avoid.contains(&v),
                "vertex {} misplaced",
                v
            );
        }
        for (a, b) in g.edges() {
            if comp_of[a] != usize::MAX && comp_of[b] != usize::MAX {
                prop_assert_eq!(comp_of[a], comp_of[b], "edge crosses components");
            }
        }
        // Each piece is internally connected: grow from its first vertex.
        for comp in &comps {
            let mut seen = vec![comp[0]];
            let mut queue = vec![comp[0]];
            while let Some(v) = queue.pop() {
                for &u in g.neighbors(v) {
                    if comp.contains(&u) && !seen.contains(&u) {
                        seen.push(u);
                        queue.push(u);
                    }
                }
            }
            prop_assert_eq!(seen.len(), comp.len(), "component not connected");
        }
    }
}
