//! `frechet`: compute, generate, dump, probe and bench.
//!
//! stdout carries only the result; diagnostics go to stderr. Exit codes:
//! 0 success, 1 usage error, 2 input parse/format error, 3 internal
//! invariant violation.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frechet_core::bench::{self, Algo, BenchConfig};
use frechet_core::generators::{perturbed_curve, random_long_edged_curve, rng_from_seed};
use frechet_core::matrices::{
    banded_matrix_dump_with_cap, euclidean_matrix_with_cap, frechet_matrix_with_cap,
    render_dp_matrix, DEFAULT_DUMP_CAP,
};
use frechet_core::*;

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(String),
    Invariant(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Invariant(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidBand(_) | Error::InvalidConfig(_) | Error::DumpTooLarge { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "frechet",
    version,
    about = "Adaptive discrete Fréchet distance"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the discrete Fréchet distance of two curves or of a cost matrix.
    Compute(ComputeArgs),
    /// Generate a long-edged curve or a perturbed copy of a curve.
    Gen(GenArgs),
    /// Print the Euclidean, Fréchet or banded matrix of an instance.
    Dump(DumpArgs),
    /// Print the smallest width whose pass at t = f is not breached.
    Probe(InputArgs),
    /// Benchmark classical against adaptive on generated instances (CSV).
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// First curve file.
    #[arg(long = "p", value_name = "FILE")]
    p: Option<PathBuf>,
    /// Second curve file.
    #[arg(long = "q", value_name = "FILE")]
    q: Option<PathBuf>,
    /// Explicit cost matrix file.
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Read `-` entries of the matrix file as inf.
    #[arg(long)]
    dash_as_inf: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Classical,
    Adaptive,
    Brute,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "adaptive")]
    algo: Engine,
    /// Print a one-line stats record to stderr.
    #[arg(long)]
    stats: bool,
    /// Also run the classical engine and fail with exit 3 on disagreement.
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    LongEdged,
    Perturbed,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    /// Number of points (long-edged).
    #[arg(short = 'n')]
    n: Option<usize>,
    #[arg(long, default_value_t = 10.0)]
    edge_length: f64,
    /// Curve to perturb (perturbed).
    #[arg(long, value_name = "FILE")]
    base: Option<PathBuf>,
    /// Largest integer offset per coordinate (perturbed).
    #[arg(long, default_value_t = 1)]
    perturb: u32,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpKind {
    Euclid,
    Frechet,
    Banded,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long, value_enum)]
    kind: DumpKind,
    #[command(flatten)]
    input: InputArgs,
    /// Band width (banded).
    #[arg(short = 'w')]
    width: Option<usize>,
    /// Threshold, a non-negative number or `inf` (banded).
    #[arg(short = 't')]
    threshold: Option<f64>,
    /// Let costs equal to the threshold pass (banded).
    #[arg(long)]
    inclusive: bool,
    /// Omit the `# n= m= w= t=` line of banded dumps.
    #[arg(long)]
    no_header: bool,
    #[arg(long, default_value_t = DEFAULT_DUMP_CAP)]
    max_cells: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance family; only `long-edged` exists.
    #[arg(long, default_value = "long-edged")]
    gen: String,
    /// Comma-separated curve sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 100.0)]
    edge_length: f64,
    #[arg(long, default_value_t = 10)]
    perturb: u32,
    #[arg(long, value_delimiter = ',', default_value = "classical,adaptive")]
    algos: Vec<String>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_curve(path: &Path) -> CliResult<Curve> {
    parse_curve(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

/// The instance named on the command line, owning whatever it parsed.
enum Instance {
    Curves(Curve, Curve),
    Matrix(CostMatrix),
}

impl Instance {
    fn load(args: &InputArgs) -> CliResult<Self> {
        match (&args.p, &args.q, &args.matrix) {
            (Some(p), Some(q), None) => Ok(Instance::Curves(read_curve(p)?, read_curve(q)?)),
            (None, None, Some(m)) => {
                let opts = MatrixParseOptions {
                    dash_as_inf: args.dash_as_inf,
                };
                let matrix = parse_matrix(&read(m)?, opts)
                    .map_err(|e| CliError::Input(format!("{}: {e}", m.display())))?;
                Ok(Instance::Matrix(matrix))
            }
            _ => Err(CliError::Usage(
                "give either --p FILE and --q FILE, or --matrix FILE".into(),
            )),
        }
    }

    fn with_source<T>(&self, f: impl FnOnce(&dyn CostSource) -> CliResult<T>) -> CliResult<T> {
        match self {
            Instance::Curves(p, q) => f(&CurvePair::new(p, q)?),
            Instance::Matrix(m) => f(m),
        }
    }
}

fn cmd_compute(args: &ComputeArgs) -> CliResult<()> {
    let instance = Instance::load(&args.input)?;
    instance.with_source(|c| {
        let start = Instant::now();
        let (value, stats) = match args.algo {
            Engine::Adaptive => {
                let out = adaptive_compute(c);
                let stats = format!(
                    "final_width={} iterations={} cells={} dist_evals={}",
                    out.final_width,
                    out.iterations.len(),
                    out.total_cells,
                    out.total_distance_evals
                );
                (out.value, stats)
            }
            Engine::Classical => {
                let cells = c.rows() * c.cols();
                (
                    classical_rolling(c)?,
                    format!("cells={cells} dist_evals={cells}"),
                )
            }
            Engine::Brute => (brute_force(c)?, String::new()),
        };
        let ns = start.elapsed().as_nanos();

        if args.verify {
            let reference = classical_rolling(c)?;
            if reference != value {
                return Err(CliError::Invariant(format!(
                    "verification failed: engine returned {value}, classical returned {reference}"
                )));
            }
        }
        if args.stats {
            let algo = match args.algo {
                Engine::Adaptive => "adaptive",
                Engine::Classical => "classical",
                Engine::Brute => "brute",
            };
            let sep = if stats.is_empty() { "" } else { " " };
            eprintln!(
                "algo={algo} n={} m={} value={value}{sep}{stats} ns={ns}",
                c.rows(),
                c.cols()
            );
        }
        emit(&format!("{value}\n"), None)
    })
}

fn cmd_gen(args: &GenArgs) -> CliResult<()> {
    let mut rng = rng_from_seed(args.seed);
    let curve = match args.kind {
        GenKind::LongEdged => {
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("long-edged generation needs -n".into()))?;
            random_long_edged_curve(n, args.edge_length, &mut rng)?
        }
        GenKind::Perturbed => {
            let base = args
                .base
                .as_ref()
                .ok_or_else(|| CliError::Usage("perturbed generation needs --base FILE".into()))?;
            let base = read_curve(base)?;
            perturbed_curve(&base, args.perturb, &mut rng)
                .map_err(|e| CliError::Usage(format!("--base: {e}")))?
        }
    };
    emit(&write_curve(&curve), args.out.as_deref())
}

fn cmd_dump(args: &DumpArgs) -> CliResult<()> {
    let instance = Instance::load(&args.input)?;
    let cap = args.max_cells;
    let text = match args.kind {
        DumpKind::Euclid => match &instance {
            Instance::Curves(p, q) => {
                matrices::render_cost_matrix(&euclidean_matrix_with_cap(p, q, cap)?)
            }
            Instance::Matrix(m) => {
                let cells = m.rows() * m.cols();
                if cells > cap {
                    return Err(Error::DumpTooLarge { cells, cap }.into());
                }
                matrices::render_cost_matrix(m)
            }
        },
        DumpKind::Frechet => {
            instance.with_source(|c| Ok(render_dp_matrix(&frechet_matrix_with_cap(c, cap)?)))?
        }
        DumpKind::Banded => {
            let (Some(w), Some(t)) = (args.width, args.threshold) else {
                return Err(CliError::Usage("banded dumps need -w and -t".into()));
            };
            let cutoff = if args.inclusive {
                Cutoff::Inclusive
            } else {
                Cutoff::Strict
            };
            let params = BandParams::new(w, t)?.with_cutoff(cutoff);
            instance.with_source(|c| {
                let dump = banded_matrix_dump_with_cap(c, &params, cap)?;
                Ok(render_annotated(&dump, !args.no_header))
            })?
        }
    };
    emit(&text, None)
}

fn cmd_probe(args: &InputArgs) -> CliResult<()> {
    let instance = Instance::load(args)?;
    let width = instance.with_source(|c| Ok(probe_min_unbreached_width(c)?))?;
    emit(&format!("{width}\n"), None)
}

fn cmd_bench(args: &BenchArgs) -> CliResult<()> {
    if args.gen != "long-edged" {
        return Err(CliError::Usage(format!(
            "unknown generator {:?}; expected long-edged",
            args.gen
        )));
    }
    let algos = args
        .algos
        .iter()
        .map(|a| a.parse::<Algo>())
        .collect::<Result<Vec<_>>>()?;
    let cfg = BenchConfig {
        sizes: args.sizes.clone(),
        trials: args.trials,
        seed: args.seed,
        edge_length: args.edge_length,
        perturb: args.perturb,
        algos,
    };
    let records = bench::run_bench(&cfg)?;
    for problem in bench::check_records(&records) {
        eprintln!("warning: {problem}");
    }
    let mut buf = Vec::new();
    bench::write_csv(&records, &mut buf).map_err(|e| CliError::Usage(e.to_string()))?;
    emit(&String::from_utf8_lossy(&buf), args.out.as_deref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Dump(a) => cmd_dump(a),
        Command::Probe(a) => cmd_probe(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("frechet: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
