use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use hslearn_cli::bench::{run_bench, slope_summary, write_csv, AlgorithmChoice, BenchConfig};
use hslearn_cli::format::{read_halfspace_arg, TranscriptJson};
use hslearn_cli::generate::generate_target;
use hslearn_cli::run::{learn, Algorithm};
use hslearn_cli::verify::verify_lemmas;
use hslearn::automaton::{equivalent, Equivalence};

/// Exact learning of small-weight Boolean halfspaces from membership queries.
#[derive(Parser)]
#[command(name = "hslearn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Learn one target and print a JSON report.
    Learn(LearnArgs),
    /// Learn random targets over a range of dimensions and write CSV.
    Bench(BenchArgs),
    /// Check the combinatorial lemmas on random instances.
    VerifyLemmas(VerifyArgs),
    /// Decide whether two halfspaces are the same function.
    Equiv {
        /// Halfspace JSON file, or inline JSON.
        first: String,
        /// Halfspace JSON file, or inline JSON.
        second: String,
    },
}

#[derive(Args)]
struct LearnArgs {
    /// Target halfspace JSON file, or inline JSON.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    target: Option<String>,
    /// Draw a random target from --n, --t and --seed.
    #[arg(long, requires_all = ["n", "t"])]
    random: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Algorithm::Adaptive)]
    algorithm: Algorithm,
    /// Also write the query transcript as JSON.
    #[arg(long)]
    transcript: Option<PathBuf>,
    /// Report elapsed_ms as 0 for reproducible output.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    t: u32,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = AlgorithmChoice::Both)]
    algorithm: AlgorithmChoice,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write elapsed_ms as 0 for reproducible output.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 4)]
    t_max: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A usage problem, reported with exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    Usage(e.to_string()).into()
}

fn cmd_learn(args: LearnArgs) -> anyhow::Result<bool> {
    let target = match (&args.target, args.random) {
        (Some(spec), _) => {
            let json = read_halfspace_arg(spec).map_err(usage)?;
            if args.t.is_some_and(|t| t != json.t) {
                return Err(usage("--t disagrees with the target's \"t\""));
            }
            json.to_target().map_err(usage)?
        }
        (None, _) => {
            let (n, t) = (args.n.unwrap(), args.t.unwrap());
            if t == 0 {
                return Err(usage("--t must be positive"));
            }
            let g = generate_target(n, t, args.seed);
            if g.constant {
                eprintln!("warning: no non-constant target found; learning a constant");
            }
            g.halfspace
        }
    };
    let run = learn(&target, args.algorithm, !args.no_timing)?;
    if let Some(path) = &args.transcript {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        serde_json::to_writer_pretty(BufWriter::new(file), &TranscriptJson::new(target.dim(), &run.transcript))?;
    }
    println!("{}", serde_json::to_string_pretty(&run.report)?);
    Ok(run.report.correct)
}

fn cmd_bench(args: BenchArgs) -> anyhow::Result<bool> {
    let config = BenchConfig {
        n_min: args.n_min,
        n_max: args.n_max,
        t: args.t,
        trials: args.trials,
        seed: args.seed,
        algorithm: args.algorithm,
        timing: !args.no_timing,
    };
    if config.n_min > config.n_max || config.trials == 0 || config.t == 0 {
        return Err(usage("need n-min <= n-max, trials >= 1 and t >= 1"));
    }
    let records = run_bench(&config)?;
    let summary = slope_summary(&records, &config);
    match &args.out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_csv(&records, BufWriter::new(file))?;
            for line in &summary {
                println!("{line}");
            }
        }
        None => {
            write_csv(&records, io::stdout().lock())?;
            for line in &summary {
                eprintln!("{line}");
            }
        }
    }
    let wrong = records.iter().filter(|r| !r.correct).count();
    if wrong > 0 {
        eprintln!("{wrong} rows learned a non-equivalent hypothesis");
    }
    Ok(wrong == 0)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<bool> {
    if args.trials == 0 {
        eprintln!("warning: --trials 0 checks nothing but the fixed tightness instances");
    }
    if args.t_max < 1 {
        return Err(usage("--t-max must be at least 1"));
    }
    let reports = verify_lemmas(args.trials, args.t_max, args.seed);
    let mut out = io::stdout().lock();
    for r in &reports {
        writeln!(out, "{}", r.line())?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
    Ok(failed == 0)
}

fn cmd_equiv(first: &str, second: &str) -> anyhow::Result<bool> {
    let f = read_halfspace_arg(first).and_then(|j| j.to_halfspace()).map_err(usage)?;
    let g = read_halfspace_arg(second).and_then(|j| j.to_halfspace()).map_err(usage)?;
    if f.dim() != g.dim() {
        bail!(Usage(format!("dimensions differ: {} vs {}", f.dim(), g.dim())));
    }
    match equivalent(&f, &g)? {
        Equivalence::Equivalent => {
            println!("equivalent");
            Ok(true)
        }
        Equivalence::Witness(a) => {
            println!("{a}");
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Learn(args) => cmd_learn(args),
        Command::Bench(args) => cmd_bench(args),
        Command::VerifyLemmas(args) => cmd_verify(args),
        Command::Equiv { first, second } => cmd_equiv(&first, &second),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
