//! Walk a hitting-set instance through the reduction chain — hitting set to
//! multicolored hitting set, back again, and onward to set splitting —
//! checking the exact oracle at every stop.
//!
//! Run with `cargo run --example hitting_set_chain`.

use stable_cutset::{
    hs_to_mhs, mhs_to_hs, mhs_to_set_splitting, solve_hitting_set,
    solve_multicolored_hitting_set, solve_set_splitting, SetSystem,
};

fn main() {
    // Hit {1,2}, {2,3}, {3,4} with at most two elements (1-based).
    let hs = SetSystem::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]], Some(2), None).unwrap();
    let hs_answer = solve_hitting_set(&hs).expect("well-formed");
    println!(
        "hitting set (n = {}, {} sets, k = {:?}): {:?}",
        hs.n,
        hs.m(),
        hs.k,
        hs_answer
    );

    let mhs = hs_to_mhs(&hs).expect("budget present");
    println!(
        "→ multicolored: n = {} (≤ n·k = {}), colors 1..={}",
        mhs.n,
        hs.n * hs.k.unwrap(),
        mhs.k.unwrap()
    );
    let mhs_answer = solve_multicolored_hitting_set(&mhs).expect("well-formed");
    assert_eq!(mhs_answer.is_some(), hs_answer.is_some());
    println!("  answer preserved: {:?}", mhs_answer);

    let back = mhs_to_hs(&mhs).expect("coloring present");
    let back_answer = solve_hitting_set(&back).expect("well-formed");
    assert_eq!(back_answer.is_some(), mhs_answer.is_some());
    println!("→ back to plain hitting set: n = {}, answer preserved", back.n);

    let ss = mhs_to_set_splitting(&mhs).expect("coloring present");
    println!(
        "→ set splitting: n = {} (= n + 2 on non-degenerate inputs), {} sets",
        ss.n,
        ss.m()
    );
    let ss_answer = solve_set_splitting(&ss).expect("well-formed");
    assert_eq!(ss_answer.is_some(), mhs_answer.is_some());
    println!("  answer preserved: {}", ss_answer.is_some());
}
