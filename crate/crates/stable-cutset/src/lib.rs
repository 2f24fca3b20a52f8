//! A kernelization toolkit for the Stable Cutset problem.
//!
//! A *stable cutset* of a graph `G` is a stable (independent) set `S` whose
//! removal disconnects `G` — equivalently, a partition `V = S ∪ A ∪ B` with
//! `S` stable, `A` and `B` nonempty, and no edge between `A` and `B`.
//! Deciding whether one exists is NP-complete, but the problem admits small
//! kernels when a structural witness (vertex cover, twin cover, or a
//! modulator to a cluster, clique, or co-cluster graph) accompanies the
//! input.
//!
//! The crate provides:
//!
//! * [`graph`] — immutable graphs with the structural queries the rules
//!   need (components, articulation points, twins, clique modules, …);
//! * [`witness`] — structural witnesses and checkable YES-certificates;
//! * [`oracle`] — an exact backtracking solver plus brute-force solvers for
//!   Hitting Set, Multicolored Hitting Set, and Set Splitting, used as
//!   ground truth everywhere;
//! * [`rules`] — the six witness-free reduction rules and their fixpoint
//!   driver;
//! * [`kernelize`] — the five witness-parameterized kernelization
//!   pipelines with provable size bounds;
//! * [`gadgets`] — the reduction chain from Hitting Set through Set
//!   Splitting to Stable Cutset instances with linear-forest/path
//!   modulators, and an OR-composition of instances;
//! * [`io`] — plain-text instance files and set-system files;
//! * [`generate`] — seeded random instances with planted witnesses;
//! * [`trace`] — replayable logs of what the pipelines did.
//!
//! The `scs` binary exposes all of it as subcommands; the `examples/`
//! directory shows one end-to-end program per capability.

pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kernelize;
pub mod oracle;
pub mod rules;
pub mod set_system;
pub mod trace;
pub mod witness;

pub use gadgets::{
    extend_to_single_path, hs_to_mhs, mhs_to_hs, mhs_to_set_splitting, or_compose,
    set_splitting_to_scs, GadgetError, GadgetLayout, GadgetSource, Role,
};
pub use generate::{generate_planted, GeneratorConfig};
pub use graph::{
    articulation_points, classify_subset, find_clique_module_triplet, twin_partition, Graph,
    GraphError, SubsetClass,
};
pub use io::{
    emit_graph, emit_instance, emit_set_system, emit_trace, parse_graph, parse_instance,
    parse_set_system, InstanceFile, IoError,
};
pub use oracle::{
    find_stable_cutset, has_c_simple_cutset, min_stable_cutset, search_min_stable_cutset,
    search_stable_cutset, solve_hitting_set, solve_multicolored_hitting_set, solve_set_splitting,
    OracleError, SearchOptions, SearchOutcome, SearchStats,
};
pub use kernelize::{
    kernel_size_bound, kernelize, rr10_shrink_clique_components, rr11_cluster_component_marking,
    rr12_cocluster_shrink_stable_set, rr13_cocluster_reduce_stable_sets, rr7_vc_marking,
    rr8_tc_pair_marking, rr9_simple_component, KernelError, MarkEntry, MarkingLedger,
    ReductionOutcome,
};
pub use rules::{run_generic_fixpoint, GenericFixpoint, RuleResult};
pub use set_system::{SetSystem, SetSystemError};
pub use trace::{RuleId, RuleTrace, TraceEvent};
pub use witness::{
    validate_witness, verify_certificate, CutsetCertificate, Witness, WitnessKind,
};
