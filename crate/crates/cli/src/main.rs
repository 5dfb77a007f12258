mod bench;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multipack::line::Radius;

#[derive(Parser)]
#[command(name = "multipack", version, about = "Maximum r-multipackings of point sets on the line and in the plane")]
struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true, env = "MULTIPACK_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a large (or maximum) r-multipacking and print it as JSON.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Radius: a positive integer or `full` (n - 1).
        #[arg(long, default_value = "full")]
        r: Radius,
        #[arg(long, value_enum, default_value_t = SolveMethod::Auto)]
        method: SolveMethod,
        /// Target size for `fpt`.
        #[arg(long)]
        k: Option<usize>,
        /// Node budget for `exact`.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check whether an index set is an r-multipacking.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// JSON array of indices, or a solve report.
        #[arg(long)]
        set: PathBuf,
        #[arg(long, default_value = "full")]
        r: Radius,
    },
    /// Write a named or random instance as CSV.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Dimension of `random` instances.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Coordinates drawn from [0, grid); defaults to max(10^6, n²).
        #[arg(long)]
        grid: Option<u64>,
        /// Emit the upper family without the factor 3 (fractional coordinates).
        #[arg(long)]
        unscaled: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the maximum degree of the r = 2 conflict graph; fails above 17.
    AuditDegree {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a seeded benchmark and write a CSV report.
    Bench {
        #[arg(long, value_enum)]
        family: BenchFamily,
        /// Instance sizes: `N`, or an inclusive range `A..B`.
        #[arg(long, default_value = "10..60")]
        n: String,
        /// Instances per size.
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Add a wall-clock column (makes the report non-reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Draw the points as SVG, highlighting an optional witness.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        set: Option<PathBuf>,
        /// Draw the circle through each point's second-nearest neighbor.
        #[arg(long)]
        circles: bool,
        #[arg(long, value_enum, default_value_t = Edges::None)]
        edges: Edges,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Auto,
    Greedy1d,
    Nng,
    Exact,
    Fpt,
    Greedy,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Lower1d,
    Upper1d,
    Pentagon,
    Square4,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamily {
    /// Random planar sets, exact vs greedy at r = 2.
    Random2d,
    /// Random sets on the line, greedy vs brute force at every r.
    Random1d,
    /// Random 6-point planar sets, multipacking number by brute force.
    Mmp2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Edges {
    None,
    Nng,
    Gp,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("warning: {e}");
        }
    }
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.code)
        }
    }
}
