//! `scs` — the command-line front end for the stable-cutset toolkit.
//!
//! One instance per invocation, deterministic output: the first stdout
//! line of an answer-producing subcommand is `YES`, `NO`, or `REDUCED`,
//! followed by certificate lines (`S:`/`A:`/`B:`, 1-indexed) or the
//! reduced artifact in the same text format the parsers accept. Exit
//! status 0 on any successful run regardless of the answer, 2 on input
//! errors, 3 when a search budget is exhausted.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stable_cutset::io::{
    emit_graph, emit_instance, emit_set_system, emit_trace, parse_instance, parse_set_system,
    InstanceFile,
};
use stable_cutset::kernelize::{kernelize, ReductionOutcome};
use stable_cutset::oracle::{
    search_min_stable_cutset, search_stable_cutset, solve_hitting_set,
    solve_multicolored_hitting_set, solve_set_splitting, OracleError, SearchOptions,
};
use stable_cutset::trace::RuleTrace;
use stable_cutset::witness::{CutsetCertificate, Witness, WitnessKind};
use stable_cutset::{
    extend_to_single_path, hs_to_mhs, mhs_to_hs, mhs_to_set_splitting, or_compose,
    set_splitting_to_scs, generate_planted, GadgetLayout, GeneratorConfig, Graph,
};

#[derive(Parser)]
#[command(name = "scs", version, about = "Stable-cutset solving, kernelization, and reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the rule trace of a kernelization to this file.
    #[arg(long, global = true, value_name = "PATH")]
    trace: Option<PathBuf>,
    /// Suppress certificate and detail lines; print only the answer.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has a stable cutset.
    Solve {
        file: PathBuf,
        /// Only accept cutsets with at most this many vertices.
        #[arg(long, value_name = "K")]
        max_size: Option<usize>,
        /// Abort (status 3) after this many search nodes.
        #[arg(long, value_name = "N")]
        budget: Option<u64>,
    },
    /// Shrink the instance with the pipeline for its witness kind.
    Kernelize {
        #[arg(long, value_enum)]
        kind: KindArg,
        file: PathBuf,
        /// Witness vertices, 1-based, comma-separated; overrides the
        /// file's `w` line.
        #[arg(long, value_name = "V,V,...", value_delimiter = ',')]
        witness: Option<Vec<usize>>,
    },
    /// Check the witness and/or certificate sections of the file.
    Verify { file: PathBuf },
    /// Apply one step of the reduction chain to a set-system file.
    Reduce {
        step: ReduceStep,
        file: PathBuf,
        /// After ss2scs, join the per-set paths into one long path.
        #[arg(long)]
        single_path: bool,
    },
    /// OR-compose several instances: the result has a stable cutset iff
    /// some input does.
    Compose {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Generate a random instance with a planted witness.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        witness_size: usize,
        #[arg(long, default_value_t = 20)]
        outside_size: usize,
        /// Probability of each free edge.
        #[arg(long, default_value_t = 0.35)]
        edge_prob: f64,
    },
    /// Solve a set-system problem exactly.
    Oracle { problem: SetProblem, file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Vc,
    Tc,
    Cluster,
    Clique,
    Cocluster,
}

impl From<KindArg> for WitnessKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Vc => WitnessKind::VertexCover,
            KindArg::Tc => WitnessKind::TwinCover,
            KindArg::Cluster => WitnessKind::ModCluster,
            KindArg::Clique => WitnessKind::ModClique,
            KindArg::Cocluster => WitnessKind::ModCoCluster,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceStep {
    #[value(name = "hs2mhs")]
    HsToMhs,
    #[value(name = "mhs2hs")]
    MhsToHs,
    #[value(name = "mhs2ss")]
    MhsToSs,
    #[value(name = "ss2scs")]
    SsToScs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetProblem {
    Hs,
    Mhs,
    Ss,
}

/// A run that must stop: carries the exit status and a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Display) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn oracle_failure(err: OracleError) -> Failure {
    Failure {
        code: match err {
            OracleError::BudgetExceeded { .. } => 3,
            _ => 2,
        },
        message: err.to_string(),
    }
}

fn main() -> ExitCode {
    // Die silently on a closed pipe (`scs ... | head`) instead of panicking:
    // Rust's runtime masks SIGPIPE, turning writes to a closed consumer into
    // EPIPE panics inside the print macros.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            file,
            max_size,
            budget,
        } => solve(&file, max_size, budget, cli.quiet),
        Command::Kernelize {
            kind,
            file,
            witness,
        } => run_kernelize(kind.into(), &file, witness, cli.trace.as_deref()),
        Command::Verify { file } => verify(&file, cli.quiet),
        Command::Reduce {
            step,
            file,
            single_path,
        } => reduce(step, &file, single_path),
        Command::Compose { files } => compose(&files),
        Command::Gen {
            kind,
            seed,
            witness_size,
            outside_size,
            edge_prob,
        } => {
            let (g, w) = generate_planted(&GeneratorConfig {
                kind: kind.into(),
                witness_size,
                outside_size,
                edge_probability: edge_prob,
                seed,
            });
            print!("{}", emit_graph(&g, Some(&w)));
            Ok(())
        }
        Command::Oracle { problem, file } => oracle(problem, &file, cli.quiet),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<InstanceFile, Failure> {
    parse_instance(&read_file(path)?)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn id_line(label: &str, ids: &[usize]) -> String {
    let mut line = label.to_string();
    for &v in ids {
        line.push_str(&format!(" {}", v + 1));
    }
    line
}

fn print_certificate(cert: &CutsetCertificate) {
    println!("{}", id_line("S:", &cert.cutset));
    println!("{}", id_line("A:", &cert.side_a));
    println!("{}", id_line("B:", &cert.side_b));
}

fn solve(
    file: &Path,
    max_size: Option<usize>,
    budget: Option<u64>,
    quiet: bool,
) -> Result<(), Failure> {
    let inst = read_instance(file)?;
    let opts = SearchOptions {
        node_budget: budget,
    };
    let outcome = match max_size {
        Some(k) => search_min_stable_cutset(&inst.graph, k, &opts),
        None => search_stable_cutset(&inst.graph, &opts),
    }
    .map_err(oracle_failure)?;
    match outcome.certificate {
        Some(cert) => {
            println!("YES");
            if !quiet {
                print_certificate(&cert);
            }
        }
        None => println!("NO"),
    }
    Ok(())
}

fn write_trace(path: Option<&Path>, trace: &RuleTrace) -> Result<(), Failure> {
    if let Some(path) = path {
        std::fs::write(path, emit_trace(trace))
            .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run_kernelize(
    kind: WitnessKind,
    file: &Path,
    witness_flag: Option<Vec<usize>>,
    trace_path: Option<&Path>,
) -> Result<(), Failure> {
    let inst = read_instance(file)?;
    let witness = match witness_flag {
        Some(ids) => {
            let n = inst.graph.n();
            let mut zero_based = Vec::with_capacity(ids.len());
            for id in ids {
                if id == 0 || id > n {
                    return Err(input_error(format!(
                        "--witness vertex {id} out of range 1..={n}"
                    )));
                }
                zero_based.push(id - 1);
            }
            Witness::new(kind, zero_based)
        }
        None => match inst.witness {
            Some(w) if w.kind == kind => w,
            Some(w) => {
                return Err(input_error(format!(
                    "file witness has kind `{}` but --kind says `{}`",
                    w.kind.tag(),
                    kind.tag()
                )))
            }
            None => {
                return Err(input_error(
                    "no witness: add a `w` line to the file or pass --witness",
                ))
            }
        },
    };
    let outcome = kernelize(&inst.graph, &witness).map_err(input_error)?;
    write_trace(trace_path, outcome.trace())?;
    match outcome {
        ReductionOutcome::Decided { answer, .. } => {
            println!("{}", if answer { "YES" } else { "NO" });
        }
        ReductionOutcome::Reduced { graph, witness, .. } => {
            println!("REDUCED");
            print!("{}", emit_graph(&graph, Some(&witness)));
        }
    }
    Ok(())
}

fn verify(file: &Path, quiet: bool) -> Result<(), Failure> {
    let inst = read_instance(file)?;
    if inst.witness.is_none() && inst.certificate.is_none() {
        return Err(input_error(
            "nothing to verify: the file has neither a witness nor a certificate",
        ));
    }
    let mut all_valid = true;
    let mut details = Vec::new();
    if let Some(w) = &inst.witness {
        let ok = w.is_valid_for(&inst.graph);
        all_valid &= ok;
        details.push(format!(
            "witness {}: {}",
            w.kind.tag(),
            if ok { "valid" } else { "invalid" }
        ));
    }
    if let Some(cert) = &inst.certificate {
        let ok = stable_cutset::verify_certificate(&inst.graph, cert);
        all_valid &= ok;
        details.push(format!(
            "certificate: {}",
            if ok { "valid" } else { "invalid" }
        ));
    }
    println!("{}", if all_valid { "YES" } else { "NO" });
    if !quiet {
        for line in details {
            println!("{line}");
        }
    }
    Ok(())
}

fn emit_gadget(graph: Graph, layout: GadgetLayout) -> String {
    emit_instance(&InstanceFile {
        graph,
        witness: layout.witness,
        certificate: None,
        trace: None,
        roles: Some(layout.roles),
    })
}

fn reduce(step: ReduceStep, file: &Path, single_path: bool) -> Result<(), Failure> {
    if single_path && !matches!(step, ReduceStep::SsToScs) {
        return Err(input_error("--single-path only applies to ss2scs"));
    }
    let sys = parse_set_system(&read_file(file)?)
        .map_err(|e| input_error(format!("{}: {e}", file.display())))?;
    let body = match step {
        ReduceStep::HsToMhs => emit_set_system(&hs_to_mhs(&sys).map_err(input_error)?),
        ReduceStep::MhsToHs => emit_set_system(&mhs_to_hs(&sys).map_err(input_error)?),
        ReduceStep::MhsToSs => {
            emit_set_system(&mhs_to_set_splitting(&sys).map_err(input_error)?)
        }
        ReduceStep::SsToScs => {
            let (g, layout) = set_splitting_to_scs(&sys);
            if single_path {
                let (g, layout) = extend_to_single_path(&g, &layout).map_err(input_error)?;
                emit_gadget(g, layout)
            } else {
                emit_gadget(g, layout)
            }
        }
    };
    println!("REDUCED");
    print!("{body}");
    Ok(())
}

fn compose(files: &[PathBuf]) -> Result<(), Failure> {
    let mut graphs = Vec::with_capacity(files.len());
    for file in files {
        graphs.push(read_instance(file)?.graph);
    }
    let (g, layout) = or_compose(&graphs).map_err(input_error)?;
    println!("REDUCED");
    print!("{}", emit_gadget(g, layout));
    Ok(())
}

fn oracle(problem: SetProblem, file: &Path, quiet: bool) -> Result<(), Failure> {
    let sys = parse_set_system(&read_file(file)?)
        .map_err(|e| input_error(format!("{}: {e}", file.display())))?;
    let solution = match problem {
        SetProblem::Hs => solve_hitting_set(&sys),
        SetProblem::Mhs => solve_multicolored_hitting_set(&sys),
        SetProblem::Ss => solve_set_splitting(&sys),
    }
    .map_err(oracle_failure)?;
    match solution {
        Some(sol) => {
            println!("YES");
            if !quiet {
                match problem {
                    SetProblem::Hs | SetProblem::Mhs => println!("{}", id_line("H:", &sol)),
                    SetProblem::Ss => {
                        let rest: Vec<usize> =
                            (0..sys.n).filter(|v| !sol.contains(v)).collect();
                        println!("{}", id_line("L:", &sol));
                        println!("{}", id_line("R:", &rest));
                    }
                }
            }
        }
        None => println!("NO"),
    }
    Ok(())
}
