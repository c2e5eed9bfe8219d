//! `dqeig` — dual quaternion Hermitian eigensolver command-line tool.

mod io;
mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dqeig::builtin::{dense6, dense6_initial, dense6_spectrum};
use dqeig::eigen::{
    all_eigenpairs, power_method, rqi, EigenPair, IterationSettings, IterationTrace,
    SpectrumSettings,
};
use dqeig::graphs::{gen_circle, gen_random, laplacian, shift, shifted_circle};
use dqeig::linalg::residual_2r;
use dqeig::random::{random_unit_vector, rng_from_seed, RNG_ALGORITHM};
use dqeig::{DQMatrix, DQVector};

use report::ReportRow;

/// Start vectors draw from a stream decorrelated from the instance
/// generator's stream, so a run's matrix and its start vector never share
/// random values even though both derive from the same `--seed`.
const INIT_STREAM: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Parser)]
#[command(
    name = "dqeig",
    version,
    about = "Dual quaternion Hermitian eigensolvers: Rayleigh quotient iteration and a power-method baseline"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all appreciable eigenvalues by deflated Rayleigh quotient iteration
    Eig(EigArgs),
    /// Run Rayleigh quotient iteration to a single eigenpair
    Rqi(SolveArgs),
    /// Run the power method to a single eigenpair
    Pm(SolveArgs),
    /// Compare RQI and the power method on generated circle Laplacians
    Bench(BenchArgs),
    /// Generate a visibility-graph Laplacian and write it as DQMAT
    Gen(GenArgs),
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Text,
}

#[derive(Args)]
struct InputArgs {
    /// DQMAT matrix file to read
    #[arg(long, value_name = "FILE", conflicts_with_all = ["example1", "circle"])]
    input: Option<PathBuf>,
    /// Use the bundled 6x6 demonstration matrix
    #[arg(long, conflicts_with = "circle")]
    example1: bool,
    /// Generate a circle-graph Laplacian of this size (shifted by --alpha)
    #[arg(long, value_name = "N")]
    circle: Option<usize>,
}

#[derive(Args)]
struct EigArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Residual tolerance for each eigenpair
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    /// Iteration cap per eigenpair
    #[arg(long, default_value_t = 15000)]
    max_iter: usize,
    /// Seed for generated instances and start vectors
    #[arg(long, env = "DQEIG_SEED", default_value_t = 0)]
    seed: u64,
    /// Diagonal shift applied when generating with --circle
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Deflation stop threshold on the remaining standard part
    /// (default: scales with matrix size and norm)
    #[arg(long)]
    gamma: Option<f64>,
    /// Report file (default: stdout)
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Residual tolerance
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    /// Iteration cap
    #[arg(long, default_value_t = 15000)]
    max_iter: usize,
    /// Seed for generated instances and random start vectors
    #[arg(long, env = "DQEIG_SEED", default_value_t = 0)]
    seed: u64,
    /// Diagonal shift applied when generating with --circle
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Start vector file (DQMAT n x 1); defaults to the bundled probe
    /// vector with --example1, else to a seeded random unit vector
    #[arg(long, value_name = "FILE")]
    init: Option<PathBuf>,
    /// Write the per-iteration trace as CSV to this file
    #[arg(long, value_name = "FILE")]
    trace: Option<PathBuf>,
    /// Write a gnuplot script plotting the trace (requires --trace)
    #[arg(long, value_name = "FILE", requires = "trace")]
    gnuplot_script: Option<PathBuf>,
    /// Report file (default: stdout)
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated circle sizes
    #[arg(long, value_delimiter = ',', default_values_t = [10usize, 20, 50])]
    sizes: Vec<usize>,
    /// Comma-separated seeds; each (size, seed) cell runs both methods
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 3])]
    seeds: Vec<u64>,
    /// Residual tolerance
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    /// Iteration cap
    #[arg(long, default_value_t = 15000)]
    max_iter: usize,
    /// Diagonal shift for the generated Laplacians
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Worker threads for sharding (size, seed) cells
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Report file (default: stdout)
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    /// Circle graph size
    #[arg(long, value_name = "N", conflicts_with = "random")]
    circle: Option<usize>,
    /// Random graph size (edges drawn independently with --prob)
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    /// Edge probability for --random
    #[arg(long, default_value_t = 0.5)]
    prob: f64,
    /// Diagonal shift; 0 writes the unshifted Laplacian
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, env = "DQEIG_SEED", default_value_t = 0)]
    seed: u64,
    /// Output file (default: stdout)
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eig(args) => cmd_eig(args),
        Command::Rqi(args) => cmd_solve(args, Method::Rqi),
        Command::Pm(args) => cmd_solve(args, Method::Pm),
        Command::Bench(args) => cmd_bench(args),
        Command::Gen(args) => cmd_gen(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

/// Where the matrix came from, for report rows and start-vector defaults.
struct Source {
    matrix: DQMatrix,
    /// Seed recorded in report rows; set when generation or random starts
    /// actually consume it.
    seed: Option<u64>,
    example1: bool,
}

fn load_matrix(input: &InputArgs, alpha: f64, seed: u64) -> Result<Source> {
    if let Some(path) = &input.input {
        return Ok(Source {
            matrix: io::read_dqmat(path)?,
            seed: None,
            example1: false,
        });
    }
    if input.example1 {
        return Ok(Source {
            matrix: dense6(),
            seed: None,
            example1: true,
        });
    }
    if let Some(n) = input.circle {
        let matrix = if alpha != 0.0 {
            shifted_circle(n, alpha, seed)
                .with_context(|| format!("generating a shifted circle Laplacian of size {n}"))?
                .0
        } else {
            let (g, q) = gen_circle(n, seed)?;
            laplacian(&g, &q)?
        };
        return Ok(Source {
            matrix,
            seed: Some(seed),
            example1: false,
        });
    }
    bail!("no input: pass --input FILE, --example1, or --circle N");
}

fn check_common(tol: f64, max_iter: usize) -> Result<()> {
    if !tol.is_finite() || tol <= 0.0 {
        bail!("--tol must be positive and finite, got {tol}");
    }
    if max_iter == 0 {
        bail!("--max-iter must be at least 1");
    }
    Ok(())
}

fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn render_report(rows: &[ReportRow], format: Format, example1: bool) -> String {
    match format {
        Format::Csv => report::render_csv(rows),
        Format::Text => {
            let reference = example1.then(dense6_spectrum);
            report::render_text(rows, reference.as_ref().map(|r| r.as_slice()))
        }
    }
}

fn cmd_eig(args: EigArgs) -> Result<i32> {
    check_common(args.tol, args.max_iter)?;
    if let Some(gamma) = args.gamma {
        if !gamma.is_finite() || gamma <= 0.0 {
            bail!("--gamma must be positive and finite, got {gamma}");
        }
    }
    let source = load_matrix(&args.input, args.alpha, args.seed)?;
    let a = &source.matrix;
    let settings = SpectrumSettings {
        inner: IterationSettings {
            eps: args.tol,
            max_iter: args.max_iter,
            ..IterationSettings::default()
        },
        gamma: args.gamma,
        seed: args.seed,
        ..SpectrumSettings::default()
    };
    let start = Instant::now();
    let result = all_eigenpairs(a, &settings)
        .context("eigendecomposition failed before exhausting the spectrum")?;
    let elapsed = start.elapsed().as_secs_f64();

    // Present eigenvalues in decreasing order; the decomposition is one
    // solver call, so each row carries its wall-clock time.
    let mut pairs = result.pairs;
    pairs.sort_by(|p, q| q.lambda.cmp_total(&p.lambda));
    let rows: Vec<ReportRow> = pairs
        .iter()
        .enumerate()
        .map(|(i, pair)| {
            Ok(ReportRow {
                method: "eig",
                n: a.rows(),
                seed: Some(args.seed),
                eigen_index: i + 1,
                lambda: pair.lambda,
                iterations: pair.iterations,
                cpu_seconds: elapsed,
                residual_2r: residual_2r(a, &pair.vector, &pair.lambda)?,
                converged: pair.converged,
            })
        })
        .collect::<Result<_>>()?;
    write_output(
        args.output.as_deref(),
        &render_report(&rows, args.format, source.example1),
    )?;
    Ok(0)
}

enum Method {
    Rqi,
    Pm,
}

impl Method {
    fn name(&self) -> &'static str {
        match self {
            Method::Rqi => "rqi",
            Method::Pm => "pm",
        }
    }

    fn run(
        &self,
        a: &DQMatrix,
        v0: &DQVector,
        settings: &IterationSettings,
    ) -> dqeig::Result<(EigenPair, IterationTrace)> {
        match self {
            Method::Rqi => rqi(a, v0, settings),
            Method::Pm => power_method(a, v0, settings),
        }
    }
}

fn cmd_solve(args: SolveArgs, method: Method) -> Result<i32> {
    check_common(args.tol, args.max_iter)?;
    let source = load_matrix(&args.input, args.alpha, args.seed)?;
    let a = &source.matrix;
    let (v0, seeded_start) = match (&args.init, source.example1) {
        (Some(path), _) => (io::read_dqvec(path)?, false),
        (None, true) => (dense6_initial(), false),
        (None, false) => (
            random_unit_vector(a.rows(), &mut rng_from_seed(args.seed ^ INIT_STREAM)),
            true,
        ),
    };
    let settings = IterationSettings {
        eps: args.tol,
        max_iter: args.max_iter,
        ..IterationSettings::default()
    };
    let start = Instant::now();
    let (pair, trace) = method.run(a, &v0, &settings)?;
    let elapsed = start.elapsed().as_secs_f64();

    if let Some(path) = &args.trace {
        std::fs::write(path, report::render_trace(&trace))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.gnuplot_script {
        let trace_path = args.trace.as_ref().expect("clap enforces --trace");
        std::fs::write(
            path,
            report::gnuplot_script(&trace_path.display().to_string()),
        )
        .with_context(|| format!("writing {}", path.display()))?;
    }

    let row = ReportRow {
        method: method.name(),
        n: a.rows(),
        seed: (source.seed.is_some() || seeded_start).then_some(args.seed),
        eigen_index: 1,
        lambda: pair.lambda,
        iterations: pair.iterations,
        cpu_seconds: elapsed,
        residual_2r: residual_2r(a, &pair.vector, &pair.lambda)?,
        converged: pair.converged,
    };
    write_output(
        args.output.as_deref(),
        &render_report(&[row], args.format, source.example1),
    )?;
    if pair.converged {
        Ok(0)
    } else {
        eprintln!(
            "{}: not converged after {} iterations (residual {:.3e})",
            method.name(),
            pair.iterations,
            pair.residual_2r
        );
        Ok(2)
    }
}

fn bench_cell(
    n: usize,
    seed: u64,
    alpha: f64,
    settings: &IterationSettings,
) -> Result<Vec<ReportRow>> {
    let (l, _) = shifted_circle(n, alpha, seed)
        .with_context(|| format!("generating the n={n} seed={seed} cell"))?;
    let v0 = random_unit_vector(n, &mut rng_from_seed(seed ^ INIT_STREAM));
    let mut rows = Vec::with_capacity(2);
    for method in [Method::Rqi, Method::Pm] {
        let start = Instant::now();
        let (pair, _) = method.run(&l, &v0, settings)?;
        let elapsed = start.elapsed().as_secs_f64();
        rows.push(ReportRow {
            method: method.name(),
            n,
            seed: Some(seed),
            eigen_index: 1,
            lambda: pair.lambda,
            iterations: pair.iterations,
            cpu_seconds: elapsed,
            residual_2r: residual_2r(&l, &pair.vector, &pair.lambda)?,
            converged: pair.converged,
        });
    }
    Ok(rows)
}

fn cmd_bench(args: BenchArgs) -> Result<i32> {
    check_common(args.tol, args.max_iter)?;
    if args.sizes.is_empty() || args.seeds.is_empty() {
        bail!("--sizes and --seeds must be non-empty");
    }
    if args.alpha == 0.0 {
        bail!("bench requires a nonzero --alpha (the unshifted Laplacian is singular)");
    }
    let settings = IterationSettings {
        eps: args.tol,
        max_iter: args.max_iter,
        ..IterationSettings::default()
    };
    // Cells in (n, seed) order; workers take every jobs-th cell and the
    // merge happens by cell index, so the report order and bytes do not
    // depend on --jobs.
    let cells: Vec<(usize, u64)> = args
        .sizes
        .iter()
        .flat_map(|&n| args.seeds.iter().map(move |&s| (n, s)))
        .collect();
    let jobs = args.jobs.max(1).min(cells.len());
    let mut slots: Vec<Option<Result<Vec<ReportRow>>>> = Vec::new();
    slots.resize_with(cells.len(), || None);
    if jobs <= 1 {
        for (slot, &(n, seed)) in slots.iter_mut().zip(&cells) {
            *slot = Some(bench_cell(n, seed, args.alpha, &settings));
        }
    } else {
        std::thread::scope(|scope| {
            let mut handles = Vec::with_capacity(jobs);
            for worker in 0..jobs {
                let cells = &cells;
                let settings = &settings;
                let alpha = args.alpha;
                handles.push(scope.spawn(move || {
                    let mut done = Vec::new();
                    let mut idx = worker;
                    while idx < cells.len() {
                        let (n, seed) = cells[idx];
                        done.push((idx, bench_cell(n, seed, alpha, settings)));
                        idx += jobs;
                    }
                    done
                }));
            }
            for handle in handles {
                for (idx, result) in handle.join().expect("bench worker panicked") {
                    slots[idx] = Some(result);
                }
            }
        });
    }
    let mut rows = Vec::with_capacity(2 * cells.len());
    for slot in slots {
        rows.extend(slot.expect("every cell was assigned to a worker")?);
    }
    write_output(
        args.output.as_deref(),
        &render_report(&rows, args.format, false),
    )?;
    Ok(0)
}

fn cmd_gen(args: GenArgs) -> Result<i32> {
    let (matrix, kind, n) = match (args.circle, args.random) {
        (Some(n), None) => {
            let matrix = if args.alpha != 0.0 {
                shifted_circle(n, args.alpha, args.seed)?.0
            } else {
                let (g, q) = gen_circle(n, args.seed)?;
                laplacian(&g, &q)?
            };
            (matrix, "circle", n)
        }
        (None, Some(n)) => {
            let (g, q) = gen_random(n, args.prob, args.seed)?;
            let l = laplacian(&g, &q)?;
            let matrix = if args.alpha != 0.0 {
                shift(&l, args.alpha)?
            } else {
                l
            };
            (matrix, "random", n)
        }
        _ => bail!("pass exactly one of --circle N or --random N"),
    };
    match &args.output {
        Some(path) => io::write_dqmat(path, &matrix)?,
        None => print!("{}", io::format_dqmat(&matrix)),
    }
    eprintln!(
        "generated {kind} Laplacian: n={n} alpha={} seed={} rng={RNG_ALGORITHM}",
        args.alpha, args.seed
    );
    Ok(0)
}
