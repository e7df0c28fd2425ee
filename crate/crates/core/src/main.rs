use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use degtree::certify::{
    check_condition_alpha, check_condition_beta, enumerate_feasible_trees, Limits,
    DEFAULT_ENUM_LIMIT, DEFAULT_SUBSET_LIMIT,
};
use degtree::generate::{generate, EdgeSpec, GenParams};
use degtree::report::{to_dot, verify_result, ConditionsReport, ResultFile};
use degtree::scale::scale_weights;
use degtree::{solve, Instance};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_FEASIBLE: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

/// Degree-bounded minimum spanning trees with infeasibility certificates.
///
/// Exit codes: 0 feasible (or check passed), 2 infeasible, 1 malformed
/// input or error, 3 verification mismatch.
#[derive(Parser)]
#[command(name = "degtree", version)]
struct Cli {
    /// Largest |U| for exhaustive condition checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_LIMIT)]
    limit_subset: usize,
    /// Largest n for spanning-tree enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_LIMIT)]
    limit_enum: usize,
    /// Output format for solve and oracle results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimum-cost spanning tree within the bounds, or a certificate.
    Solve {
        instance: PathBuf,
        /// Re-verify the answer independently before printing it.
        #[arg(long)]
        certify: bool,
    },
    /// Evaluate both feasibility conditions exhaustively over subsets of U.
    CheckConditions { instance: PathBuf },
    /// Brute-force answer by enumerating all spanning trees.
    Oracle { instance: PathBuf },
    /// Re-check a result file against its instance.
    Verify { instance: PathBuf, result: PathBuf },
    /// Print a random instance.
    Gen(GenArgs),
    /// Convert decimal weights to integers by an exact factor.
    Scale {
        instance: PathBuf,
        #[arg(long)]
        factor: u64,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Exact edge count.
    #[arg(long, conflicts_with = "edge_prob")]
    m: Option<usize>,
    /// Independent probability per vertex pair.
    #[arg(long)]
    edge_prob: Option<f64>,
    #[arg(long, default_value_t = 0)]
    stable_size: usize,
    #[arg(long, default_value_t = 2)]
    alpha_max: u32,
    #[arg(long, default_value_t = 3)]
    beta_max: u32,
    /// Inclusive weight range, `LO..HI` or `LO,HI`.
    #[arg(long, default_value = "0..10", value_parser = parse_range, allow_hyphen_values = true)]
    weight_range: (i64, i64),
    #[arg(long)]
    seed: u64,
    /// Seed the graph with a random spanning tree.
    #[arg(long)]
    connected: bool,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .or_else(|| s.split_once(','))
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(lo)?, parse(hi)?))
}

/// Failure to produce any answer; reported as a malformed result.
struct Malformed(String);

impl<E: std::fmt::Display> From<E> for Malformed {
    fn from(e: E) -> Self {
        Malformed(e.to_string())
    }
}

/// Writes to stdout; a closed pipe is not an error worth a panic.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush());
}

fn read(path: &Path) -> Result<String, Malformed> {
    std::fs::read_to_string(path).map_err(|e| Malformed(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Malformed> {
    Ok(Instance::parse(&read(path)?)?)
}

fn exit_for(result: &ResultFile) -> u8 {
    match result {
        ResultFile::Feasible { .. } => EXIT_FEASIBLE,
        ResultFile::Infeasible { .. } => EXIT_INFEASIBLE,
        ResultFile::Malformed { .. } => EXIT_ERROR,
    }
}

fn emit(instance: &Instance, result: &ResultFile, format: Format) -> u8 {
    match format {
        Format::Json => out(&(result.to_json() + "\n")),
        Format::Dot => out(&to_dot(instance, result)),
    }
    exit_for(result)
}

fn malformed(reason: String) -> u8 {
    out(&(ResultFile::Malformed { reason }.to_json() + "\n"));
    EXIT_ERROR
}

fn cmd_solve(cli: &Cli, path: &Path, certify: bool) -> Result<u8, Malformed> {
    let instance = load(path)?;
    let outcome = solve(&instance)?;
    let result = ResultFile::from_outcome(&instance, &outcome);
    if certify {
        let report = verify_result(&instance, &result);
        if !report.passed {
            return Err(Malformed(format!(
                "self-check failed: {}",
                report.to_json()
            )));
        }
        if instance.bounds.constrained().len() <= cli.limit_subset {
            let exhaustive_feasible =
                check_condition_alpha(&instance.graph, &instance.bounds, cli.limit_subset)?
                    .is_none()
                    && check_condition_beta(&instance.graph, &instance.bounds, cli.limit_subset)?
                        .is_none();
            if exhaustive_feasible != outcome.is_feasible() {
                return Err(Malformed(
                    "self-check failed: exhaustive conditions disagree with the solver".into(),
                ));
            }
        }
    }
    Ok(emit(&instance, &result, cli.output))
}

fn cmd_check_conditions(cli: &Cli, path: &Path) -> Result<u8, Malformed> {
    let instance = load(path)?;
    let alpha = check_condition_alpha(&instance.graph, &instance.bounds, cli.limit_subset)?;
    let beta = check_condition_beta(&instance.graph, &instance.bounds, cli.limit_subset)?;
    let report = ConditionsReport::new(alpha.as_ref(), beta.as_ref());
    out(&(report.to_json() + "\n"));
    Ok(if alpha.is_none() && beta.is_none() {
        EXIT_FEASIBLE
    } else {
        EXIT_INFEASIBLE
    })
}

fn cmd_oracle(cli: &Cli, path: &Path) -> Result<u8, Malformed> {
    let instance = load(path)?;
    let limits = Limits {
        subset: cli.limit_subset,
        enumeration: cli.limit_enum,
    };
    let verdict = enumerate_feasible_trees(
        &instance.graph,
        &instance.bounds,
        Some(&instance.weights),
        limits,
    )?;
    let result = ResultFile::from_verdict(&instance, &verdict);
    Ok(emit(&instance, &result, cli.output))
}

fn cmd_verify(instance: &Path, result: &Path) -> Result<u8, Malformed> {
    let instance = load(instance)?;
    let text = read(result)?;
    let result: ResultFile =
        serde_json::from_str(&text).map_err(|e| Malformed(format!("result: {e}")))?;
    let report = verify_result(&instance, &result);
    out(&(report.to_json() + "\n"));
    Ok(if report.passed {
        EXIT_FEASIBLE
    } else {
        EXIT_MISMATCH
    })
}

fn cmd_gen(args: &GenArgs) -> anyhow::Result<()> {
    let edges = match (args.m, args.edge_prob) {
        (Some(m), None) => EdgeSpec::Count(m),
        (None, Some(q)) => EdgeSpec::Probability(q),
        (None, None) => bail!("one of --m or --edge-prob is required"),
        (Some(_), Some(_)) => unreachable!("clap rejects both"),
    };
    let params = GenParams {
        n: args.n,
        edges,
        stable_size: args.stable_size,
        alpha_max: args.alpha_max,
        beta_max: args.beta_max,
        weight_range: args.weight_range,
        seed: args.seed,
        connected: args.connected,
    };
    let generated = generate(&params)?;
    if generated.stable_size < args.stable_size {
        eprintln!(
            "note: stable set has {} vertices (requested {})",
            generated.stable_size, args.stable_size
        );
    }
    out(&(generated.instance.to_json() + "\n"));
    Ok(())
}

fn cmd_scale(path: &Path, factor: u64) -> anyhow::Result<()> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    let file = scale_weights(&text, factor)?;
    file.validate()
        .map_err(|e| anyhow!("scaled instance is invalid: {e}"))?;
    out(&(file.to_json() + "\n"));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let answered = match &cli.command {
        Command::Solve { instance, certify } => cmd_solve(&cli, instance, *certify),
        Command::CheckConditions { instance } => cmd_check_conditions(&cli, instance),
        Command::Oracle { instance } => cmd_oracle(&cli, instance),
        Command::Verify { instance, result } => cmd_verify(instance, result),
        Command::Gen(args) => {
            return match cmd_gen(args) {
                Ok(()) => ExitCode::from(EXIT_FEASIBLE),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_ERROR)
                }
            }
        }
        Command::Scale { instance, factor } => {
            return match cmd_scale(instance, *factor) {
                Ok(()) => ExitCode::from(EXIT_FEASIBLE),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(EXIT_ERROR)
                }
            }
        }
    };
    ExitCode::from(answered.unwrap_or_else(|Malformed(reason)| malformed(reason)))
}
