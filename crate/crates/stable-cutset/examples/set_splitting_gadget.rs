//! Turn a set-splitting instance into a stable-cutset instance and watch
//! the answers line up: the constructed graph has a stable cutset exactly
//! when some 2-coloring of the ground set splits every member set. The
//! construction also hands back a linear-forest modulator, and a second
//! step joins the outside into a single path without changing the answer.
//!
//! Run with `cargo run --example set_splitting_gadget`.

use stable_cutset::{
    extend_to_single_path, find_stable_cutset, set_splitting_to_scs, solve_set_splitting,
    validate_witness, Role, SetSystem, WitnessKind,
};

fn main() {
    // Ground set {1..4} with sets {2, 3} and {1, 2, 4} (1-based), the
    // four-element system whose gadget is small enough to inspect.
    let sys = SetSystem::new(4, vec![vec![1, 2], vec![0, 1, 3]], None, None).unwrap();
    println!("set system: n = {}, {} sets", sys.n, sys.m());

    match solve_set_splitting(&sys).expect("system is well-formed") {
        Some(left) => println!("splittable, left class (0-based): {left:?}"),
        None => println!("not splittable"),
    }

    let (g, layout) = set_splitting_to_scs(&sys);
    println!("gadget graph: n = {}, m = {}", g.n(), g.m());
    let witness = layout.witness.clone().expect("construction carries its witness");
    println!(
        "modulator: {} vertices, linear forest: {}, dominating: {}",
        witness.size(),
        witness.is_valid_for(&g),
        validate_witness(&g, witness.vertices(), WitnessKind::DominatingSet)
    );
    println!(
        "hub s sits at vertex {:?}, element vertices come in mirrored pairs: {} + {}",
        layout.vertices_with_role(Role::S),
        layout.vertices_with_role(Role::ElemA(0)).len() * sys.n,
        layout.vertices_with_role(Role::ElemB(0)).len() * sys.n,
    );

    let gadget_answer = find_stable_cutset(&g).is_some();
    println!("gadget has a stable cutset: {gadget_answer}");

    let (ext, ext_layout) = extend_to_single_path(&g, &layout).expect("gadget extends");
    let ext_witness = ext_layout.witness.expect("extension keeps a witness");
    let outside = ext.components_avoiding(ext_witness.vertices());
    println!(
        "extension: n = {}, outside is {} component(s) of sizes {:?}, path modulator valid: {}",
        ext.n(),
        outside.len(),
        outside.iter().map(Vec::len).collect::<Vec<_>>(),
        ext_witness.is_valid_for(&ext)
    );
    println!(
        "extension has a stable cutset: {}",
        find_stable_cutset(&ext).is_some()
    );
}
