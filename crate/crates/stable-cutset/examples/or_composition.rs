//! OR-compose several graphs into one whose answer is the disjunction of
//! the members' answers. Cliques can never contribute a cutset and are
//! discarded up front; what remains is glued so that a stable cutset of any
//! member survives into the composite, and none can appear from the glue.
//!
//! Run with `cargo run --example or_composition`.

use stable_cutset::{find_stable_cutset, or_compose, GadgetSource, Graph};

fn answer(g: &Graph) -> bool {
    find_stable_cutset(g).is_some()
}

fn compose_and_report(label: &str, members: Vec<Graph>) {
    let expected = members.iter().any(answer);
    let (h, layout) = or_compose(&members).expect("members are non-empty");
    let kept = match &layout.source {
        GadgetSource::Composition(kept) => kept.len(),
        _ => unreachable!("compositions record their inputs"),
    };
    let got = answer(&h);
    println!(
        "{label}: {} members ({kept} kept), composite n = {}, OR of answers = {expected}, \
         composite answer = {got}",
        members.len(),
        h.n()
    );
    assert_eq!(got, expected);
}

fn main() {
    let yes = Graph::path(5);
    let no_clique = Graph::complete(6);
    let no_tripartite = Graph::from_edges(
        6,
        &[
            (0, 2), (0, 3), (0, 4), (0, 5),
            (1, 2), (1, 3), (1, 4), (1, 5),
            (2, 4), (2, 5), (3, 4), (3, 5),
        ],
    )
    .unwrap();

    compose_and_report(
        "one YES among NOs",
        vec![no_clique.clone(), yes.clone(), no_tripartite.clone()],
    );
    compose_and_report("all NO", vec![no_clique.clone(), no_tripartite.clone()]);
    compose_and_report("cliques only", vec![no_clique, Graph::complete(4)]);
    compose_and_report("two YES members", vec![yes, Graph::cycle(6)]);
}
