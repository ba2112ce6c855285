//! Command-line front end. The `cubicity` binary only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or format error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde_json::json;

use crate::bench::{bench_graph, run_bench, BenchConfig};
use crate::builder::{
    build_representation, estimate_failure_rate, BuildParams, DEFAULT_MAX_RETRIES,
};
use crate::dump::{read_dump, render_human, render_report_human, write_dump};
use crate::error::BuildError;
use crate::format::{parse_graph, serialize_graph};
use crate::graph::{gen_random_bipartite, BipartiteGraph};
use crate::probe::survival_frequencies;
use crate::verify::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "cubicity",
    version,
    about = "Unit-cube representations of bipartite graphs"
)]
pub struct Cli {
    /// Seed for every random choice; a random one is picked and logged if omitted.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random bipartite graph.
    Gen {
        n1: usize,
        n2: usize,
        p: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify a cube representation of a graph file.
    Build {
        input: PathBuf,
        /// Number of random dimensions (default ceil(3(D'+1) ln n2)).
        #[arg(long = "t")]
        t: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
        max_retries: u32,
        /// Where to write the representation dump.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Construct and verify on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Re-check a dump against a graph file.
    Verify { graph: PathBuf, dump: PathBuf },
    /// Survival frequency of every cross non-edge and the failure rate of single attempts.
    Probe {
        input: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 200)]
        failure_trials: usize,
        #[arg(long = "t")]
        t: Option<usize>,
    },
    /// Time the construction phase separately from verification.
    Bench {
        /// Benchmark this graph instead of generated ones.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2000)]
        n_min: usize,
        #[arg(long, default_value_t = 16000)]
        n_max: usize,
        #[arg(long, default_value_t = 4.0)]
        degree: f64,
        #[arg(long, default_value_t = 15)]
        reps: usize,
        #[arg(long, default_value_t = 1000)]
        verify_max_n: usize,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: OutputFormat,
}

/// Failure of a subcommand, already mapped to its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_graph(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn emit(w: &mut dyn Write, text: &str) -> Result<(), Failure> {
    w.write_all(text.as_bytes())
        .map_err(|e| usage(format!("write failed: {e}")))
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let seed = cli.seed.unwrap_or_else(|| rand::rng().random());
    let _ = writeln!(err, "seed: {seed}");
    let mut io = Io {
        out,
        err,
        format: cli.format,
    };
    match dispatch(cli.command, seed, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, seed: u64, io: &mut Io<'_>) -> Result<i32, Failure> {
    match cmd {
        Command::Gen { n1, n2, p, out } => cmd_gen(n1, n2, p, seed, out.as_deref(), io),
        Command::Build {
            input,
            t,
            max_retries,
            out,
            serial,
        } => {
            let params = BuildParams {
                t_override: t,
                master_seed: seed,
                max_retries,
                parallel: !serial,
            };
            cmd_build(&input, &params, out.as_deref(), io)
        }
        Command::Verify { graph, dump } => cmd_verify(&graph, &dump, io),
        Command::Probe {
            input,
            trials,
            failure_trials,
            t,
        } => cmd_probe(&input, trials, failure_trials, t, seed, io),
        Command::Bench {
            input,
            n_min,
            n_max,
            degree,
            reps,
            verify_max_n,
        } => {
            let cfg = BenchConfig {
                n_min,
                n_max,
                degree,
                reps,
                verify_max_n,
                seed,
            };
            cmd_bench(input.as_deref(), &cfg, io)
        }
    }
}

fn cmd_gen(
    n1: usize,
    n2: usize,
    p: f64,
    seed: u64,
    out: Option<&Path>,
    io: &mut Io<'_>,
) -> Result<i32, Failure> {
    let g = gen_random_bipartite(n1, n2, p, seed).map_err(|e| usage(e.to_string()))?;
    let text = serialize_graph(&g);
    match out {
        Some(path) => write_file(path, &text)?,
        None => emit(io.out, &text)?,
    }
    Ok(EXIT_OK)
}

fn cmd_build(
    input: &Path,
    params: &BuildParams,
    out: Option<&Path>,
    io: &mut Io<'_>,
) -> Result<i32, Failure> {
    let g = read_graph(input)?;
    let build = match build_representation(&g, params) {
        Ok(b) => b,
        Err(BuildError::ZeroDimensions { nonedges }) => {
            let pairs = nonedges
                .iter()
                .map(|(a, b)| format!("(a{a}, b{b})"))
                .collect::<Vec<_>>();
            return Err(Failure {
                code: EXIT_VERIFY_FAILED,
                message: format!("t = 0 leaves cross non-edge(s) {}", pairs.join(" ")),
            });
        }
        Err(BuildError::RetriesExhausted {
            attempts,
            violations,
        }) => {
            let mut msg = format!("verification failed after {attempts} attempt(s):");
            for v in &violations {
                write!(msg, "\n  {v}").unwrap();
            }
            return Err(Failure {
                code: EXIT_VERIFY_FAILED,
                message: msg,
            });
        }
        Err(e) => return Err(usage(e.to_string())),
    };

    let dump = write_dump(&build.representation, Some(&build.report));
    let timings = &build.report.timings;
    let timing_json = json!({
        "construction_ms": timings.construction.as_secs_f64() * 1e3,
        "verification_ms": timings.verification.as_secs_f64() * 1e3,
    });
    match (out, io.format) {
        (Some(path), OutputFormat::Machine) => {
            write_file(path, &dump)?;
            let line = json!({ "report": build.report, "timings": timing_json });
            emit(io.out, &format!("{line}\n"))?;
        }
        (Some(path), OutputFormat::Human) => {
            write_file(path, &dump)?;
            emit(io.out, &render_report_human(&build.report))?;
            emit(io.out, "verification: pass\n")?;
        }
        (None, OutputFormat::Machine) => {
            emit(io.out, &dump)?;
            emit(io.err, &format!("timings: {timing_json}\n"))?;
        }
        (None, OutputFormat::Human) => {
            emit(
                io.out,
                &render_human(&build.representation, Some(&build.report)),
            )?;
            emit(io.out, "verification: pass\n")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(graph: &Path, dump: &Path, io: &mut Io<'_>) -> Result<i32, Failure> {
    let g = read_graph(graph)?;
    let text = fs::read_to_string(dump).map_err(|e| io_failure(dump, e))?;
    let (rep, _) = read_dump(&text).map_err(|e| usage(format!("{}: {e}", dump.display())))?;
    let result = verify(&rep, &g).map_err(|e| usage(e.to_string()))?;
    match io.format {
        OutputFormat::Machine => {
            let line = json!({ "passed": result.passed(), "violations": result.violations });
            emit(io.out, &format!("{line}\n"))?;
        }
        OutputFormat::Human => {
            if result.passed() {
                emit(
                    io.out,
                    &format!(
                        "pass: k = {} represents the graph exactly\n",
                        rep.dimension()
                    ),
                )?;
            } else {
                let mut s = format!("fail: {} violation(s)\n", result.violations.len());
                for v in &result.violations {
                    writeln!(s, "  {v}").unwrap();
                }
                emit(io.out, &s)?;
            }
        }
    }
    Ok(if result.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_probe(
    input: &Path,
    trials: usize,
    failure_trials: usize,
    t: Option<usize>,
    seed: u64,
    io: &mut Io<'_>,
) -> Result<i32, Failure> {
    if trials == 0 || failure_trials == 0 {
        return Err(usage("trial counts must be at least 1"));
    }
    let g = read_graph(input)?;
    let table = survival_frequencies(&g, trials, seed);
    let params = BuildParams {
        t_override: t,
        ..BuildParams::with_seed(seed)
    };
    let failure =
        estimate_failure_rate(&g, &params, failure_trials).map_err(|e| usage(e.to_string()))?;
    let n2 = g.a_count().max(g.b_count());
    match io.format {
        OutputFormat::Machine => {
            let line = json!({
                "survival": table,
                "margin": table.margin(),
                "failure": {
                    "failures": failure.failures,
                    "trials": failure.trials,
                    "rate": failure.rate(),
                    "bound": 1.0 / n2 as f64,
                },
            });
            emit(io.out, &format!("{line}\n"))?;
        }
        OutputFormat::Human => {
            let mut s = String::new();
            writeln!(
                s,
                "permuted side {}, delta' = {}, bound D'/(D'+1) = {:.4}, 3 sigma = {:.4}, trials = {}",
                table.permuted,
                table.delta_prime,
                table.bound,
                table.margin(),
                trials
            )
            .unwrap();
            writeln!(
                s,
                "{:>6} {:>6} {:>10} {:>8}",
                "a", "b", "frequency", "exact"
            )
            .unwrap();
            for r in &table.rows {
                let exact = format!("{}/{}", r.exact.numer(), r.exact.denom());
                writeln!(
                    s,
                    "{:>6} {:>6} {:>10.4} {:>8}",
                    r.a, r.b, r.frequency, exact
                )
                .unwrap();
            }
            writeln!(
                s,
                "{} non-edge(s), {} above bound + 3 sigma",
                table.rows.len(),
                table.exceeding().count()
            )
            .unwrap();
            writeln!(
                s,
                "failure rate of single attempts: {}/{} = {:.4} (bound 1/n2 = {:.4})",
                failure.failures,
                failure.trials,
                failure.rate(),
                1.0 / n2 as f64
            )
            .unwrap();
            emit(io.out, &s)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bench(input: Option<&Path>, cfg: &BenchConfig, io: &mut Io<'_>) -> Result<i32, Failure> {
    let rows = match input {
        Some(path) => vec![bench_graph(&read_graph(path)?, cfg).map_err(|e| usage(e.to_string()))?],
        None => run_bench(cfg).map_err(|e| usage(e.to_string()))?,
    };
    match io.format {
        OutputFormat::Machine => {
            emit(io.out, &format!("{}\n", json!({ "rows": rows })))?;
        }
        OutputFormat::Human => {
            let mut s = format!(
                "{:>7} {:>8} {:>4} {:>5} {:>12} {:>14} {:>12} {:>12}\n",
                "n", "m", "D'", "t", "randunit_us", "construct_ms", "build_ms", "verify_ms"
            );
            let opt = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.3}"));
            for r in &rows {
                writeln!(
                    s,
                    "{:>7} {:>8} {:>4} {:>5} {:>12.2} {:>14.3} {:>12} {:>12}",
                    r.n,
                    r.m,
                    r.delta_prime,
                    r.t,
                    r.randunit_us,
                    r.construction_ms,
                    opt(r.build_construction_ms),
                    opt(r.build_verification_ms)
                )
                .unwrap();
            }
            emit(io.out, &s)?;
        }
    }
    Ok(EXIT_OK)
}
