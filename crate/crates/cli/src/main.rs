//! `ecd`: entropic chaos degree experiments from the command line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ecd_core::channels::{baker_channel, BakerParams};
use ecd_core::chaos::{chaos_degree_multi_step, chaos_degree_one_step, evolve};
use ecd_core::experiments::{
    emit_csv, emit_svg, run_classical_sweep, run_quantum_sweep, run_theorem_suite_with,
    to_csv_string, ClassicalSweepConfig, ConfigFile, SweepConfig, SweepResult, TheoremOptions,
};
use ecd_core::quantum::{BlochVector, DensityMatrix};
use ecd_core::EcdError;

const EXIT_FAILURE: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_THEOREM: u8 = 4;

#[derive(Parser)]
#[command(name = "ecd", version, about = "Entropic chaos degree of qubit channels and classical maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the Baker channel's parameter a and record D(ρ⁽ⁿ⁾; Λ*_m).
    QuantumSweep(QuantumSweepArgs),
    /// Chaos degree of the Baker channel at a single a.
    QuantumPoint(QuantumPointArgs),
    /// Sweep a built-in classical map and record its classical chaos degree.
    ClassicalSweep(ClassicalSweepArgs),
    /// Run the seeded stability-property suite.
    VerifyTheorem(VerifyArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Write `a,D` rows here instead of stdout.
    #[arg(long)]
    out_csv: Option<PathBuf>,
    #[arg(long)]
    out_svg: Option<PathBuf>,
}

#[derive(Args)]
struct QuantumSweepArgs {
    /// Flat `key = value` config file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Reference scale: 740 points, n = 2000, m = 1000.
    #[arg(long)]
    full: bool,
    #[arg(long)]
    a_min: Option<f64>,
    #[arg(long)]
    a_max: Option<f64>,
    #[arg(long)]
    a_count: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Initial Bloch vector, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    x0: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct QuantumPointArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, default_value_t = 500)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    m: usize,
    #[arg(long, default_value = "0.3,0.3,0.3", allow_hyphen_values = true)]
    x0: String,
}

#[derive(Args)]
struct ClassicalSweepArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    /// One of: logistic, baker, tinkerbell.
    #[arg(long)]
    map: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    a_max: Option<f64>,
    #[arg(long)]
    a_count: Option<usize>,
    #[arg(long)]
    bins: Option<usize>,
    #[arg(long)]
    transient: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    x0: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    instances: usize,
    /// Contract the sampled unitaries by this factor (mutation check).
    #[arg(long, default_value_t = 0.0)]
    unitary_perturbation: f64,
}

fn exit_code(err: &EcdError) -> u8 {
    match err {
        EcdError::Config { .. } | EcdError::UnknownMap(_) | EcdError::InvalidParameter(_) => {
            EXIT_CONFIG
        }
        EcdError::Io(_) => EXIT_IO,
        _ => EXIT_FAILURE,
    }
}

fn load_config(path: Option<&Path>) -> Result<ConfigFile, EcdError> {
    match path {
        Some(p) => ConfigFile::read(p),
        None => Ok(ConfigFile::default()),
    }
}

/// `ECD_THREADS` (or the `threads` config key) caps the worker count;
/// 0 or unset lets rayon decide.
fn init_threads(file: &ConfigFile) -> Result<(), EcdError> {
    let from_file = file
        .entries
        .iter()
        .rev()
        .find(|(k, _)| k == "threads")
        .map(|(_, v)| v.clone());
    let raw = std::env::var("ECD_THREADS").ok().or(from_file);
    let threads = match raw {
        Some(v) => v.trim().parse::<usize>().map_err(|_| EcdError::Config {
            field: "threads".into(),
            message: format!("cannot parse `{v}`"),
        })?,
        None => 0,
    };
    // Fails only if a global pool already exists, which is harmless here.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

fn write_outputs(
    result: &SweepResult,
    csv: Option<&Path>,
    svg: Option<&Path>,
) -> Result<(), EcdError> {
    match csv {
        Some(path) => emit_csv(result, path)?,
        None => print!("{}", to_csv_string(result)),
    }
    if let Some(path) = svg {
        emit_svg(result, path)?;
    }
    Ok(())
}

fn quantum_sweep(args: QuantumSweepArgs) -> Result<(), EcdError> {
    let file = load_config(args.config.as_deref())?;
    init_threads(&file)?;
    let mut cfg = SweepConfig::default();
    cfg.apply_file(&file)?;
    if args.full {
        let full = SweepConfig::full_scale();
        cfg.a_count = full.a_count;
        cfg.steps = full.steps;
        cfg.horizon = full.horizon;
    }
    let overrides = [
        ("a-min", args.a_min.map(|v| v.to_string())),
        ("a-max", args.a_max.map(|v| v.to_string())),
        ("a-count", args.a_count.map(|v| v.to_string())),
        ("n", args.n.map(|v| v.to_string())),
        ("m", args.m.map(|v| v.to_string())),
        ("x0", args.x0),
        ("seed", args.seed.map(|v| v.to_string())),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            cfg.set(key, &v)?;
        }
    }
    if let Some(p) = args.output.out_csv {
        cfg.out_csv = Some(p);
    }
    if let Some(p) = args.output.out_svg {
        cfg.out_svg = Some(p);
    }

    let result = run_quantum_sweep(&cfg)?;
    write_outputs(&result, cfg.out_csv.as_deref(), cfg.out_svg.as_deref())?;
    eprintln!("{}", result.metadata.summary);
    match result.onset() {
        Some(a) => eprintln!("first a with D >= 1e-6: {a}"),
        None => eprintln!("D < 1e-6 on the whole grid"),
    }
    eprintln!(
        "degenerate-search rows: {}, wall time {:.2} s",
        result.degenerate_rows(),
        result.metadata.wall_time.as_secs_f64()
    );
    Ok(())
}

fn quantum_point(args: QuantumPointArgs) -> Result<(), EcdError> {
    let channel = baker_channel(BakerParams::new(args.a)?)?;
    let x0 = ecd_core::experiments::config::parse_vector("x0", &args.x0)?;
    let x0: [f64; 3] = x0.try_into().map_err(|_| EcdError::Config {
        field: "x0".into(),
        message: "expected three components".into(),
    })?;
    let initial = DensityMatrix::from_bloch(
        &BlochVector::from_array(x0).map_err(|e| EcdError::Config {
            field: "x0".into(),
            message: e.to_string(),
        })?,
    );
    let evolved = evolve(&channel, &initial, args.n)?;
    let one = chaos_degree_one_step(&channel, &initial, args.n)?;
    let multi = chaos_degree_multi_step(&channel, &initial, args.n, args.m)?;
    println!("a = {}, n = {}, m = {}", args.a, args.n, args.m);
    println!("evolved Bloch vector: {}", evolved.to_bloch());
    for (k, (comp, term)) in multi
        .decomposition
        .components
        .iter()
        .zip(multi.terms.iter())
        .enumerate()
    {
        println!(
            "  E_{}: weight {:.12}, state {}, mean image entropy {:.12}",
            k + 1,
            comp.weight,
            comp.state,
            term.entropy
        );
    }
    println!("decomposition: {:?}", multi.method);
    println!("D(F*)    = {:.12} nats", one.value);
    println!("D(Λ*_m)  = {:.12} nats", multi.value);
    Ok(())
}

fn classical_sweep(args: ClassicalSweepArgs) -> Result<(), EcdError> {
    let file = load_config(args.config.as_deref())?;
    init_threads(&file)?;
    let mut cfg = ClassicalSweepConfig::default();
    cfg.apply_file(&file)?;
    let overrides = [
        ("map", args.map),
        ("a-min", args.a_min.map(|v| v.to_string())),
        ("a-max", args.a_max.map(|v| v.to_string())),
        ("a-count", args.a_count.map(|v| v.to_string())),
        ("bins", args.bins.map(|v| v.to_string())),
        ("transient", args.transient.map(|v| v.to_string())),
        ("samples", args.samples.map(|v| v.to_string())),
        ("x0", args.x0),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            cfg.set(key, &v)?;
        }
    }
    if let Some(p) = args.output.out_csv {
        cfg.out_csv = Some(p);
    }
    if let Some(p) = args.output.out_svg {
        cfg.out_svg = Some(p);
    }
    let result = run_classical_sweep(&cfg)?;
    write_outputs(&result, cfg.out_csv.as_deref(), cfg.out_svg.as_deref())?;
    eprintln!(
        "{} (wall time {:.2} s)",
        result.metadata.summary,
        result.metadata.wall_time.as_secs_f64()
    );
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<bool, EcdError> {
    let opts = TheoremOptions {
        seed: args.seed,
        instances: args.instances,
        unitary_perturbation: args.unitary_perturbation,
    };
    let report = run_theorem_suite_with(&opts)?;
    println!("{report}");
    Ok(report.all_passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::QuantumSweep(a) => quantum_sweep(a).map(|_| true),
        Command::QuantumPoint(a) => quantum_point(a).map(|_| true),
        Command::ClassicalSweep(a) => classical_sweep(a).map(|_| true),
        Command::VerifyTheorem(a) => verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_THEOREM),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
