//! Decide a handful of small graphs and print the certificates: the cutset
//! `S`, the two separated sides, and whether the checker accepts them.
//!
//! Run with `cargo run --example solve_small_graphs`.

use stable_cutset::{find_stable_cutset, min_stable_cutset, verify_certificate, Graph};

fn show(name: &str, g: &Graph) {
    print!("{name} (n = {}, m = {}): ", g.n(), g.m());
    match find_stable_cutset(g) {
        Some(cert) => {
            println!(
                "YES  S = {:?}, A = {:?}, B = {:?}, checker says {}",
                cert.cutset,
                cert.side_a,
                cert.side_b,
                if verify_certificate(g, &cert) { "valid" } else { "INVALID" }
            );
            // A second search, capped at the certificate size, finds the
            // true minimum.
            let min = min_stable_cutset(g, cert.cutset.len()).expect("cap admits the cutset");
            println!("  minimum cutset has {} vertices: {:?}", min.cutset.len(), min.cutset);
        }
        None => println!("NO"),
    }
}

fn main() {
    show("path on 5 vertices", &Graph::path(5));
    show("cycle on 6 vertices", &Graph::cycle(6));
    // Odd cycles of length ≥ 5 still have one: any two non-adjacent
    // vertices disconnect the rest into two arcs.
    show("cycle on 5 vertices", &Graph::cycle(5));
    show("complete graph on 5 vertices", &Graph::complete(5));
    // Complete tripartite K2,2,2: every stable set lies inside one part,
    // and removing a part leaves the rest connected — a NO instance that
    // is not a clique.
    let tripartite = Graph::from_edges(
        6,
        &[
            (0, 2), (0, 3), (0, 4), (0, 5),
            (1, 2), (1, 3), (1, 4), (1, 5),
            (2, 4), (2, 5), (3, 4), (3, 5),
        ],
    )
    .unwrap();
    show("complete tripartite K2,2,2", &tripartite);
}
