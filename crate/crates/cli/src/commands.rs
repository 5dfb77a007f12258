use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use multipack::geometry::build_neighbor_prefix;
use multipack::instances::{pentagon_five, random_point_set_with, square_four, Uniqueness, SCAN_GRID};
use multipack::io::{parse_index_set, parse_points, points_to_csv, points_to_json};
use multipack::line::{greedy_max_r_multipacking_1d, lower_tight_example, upper_tight_example, Radius};
use multipack::multipacking::{bruteforce_max_r_multipacking, first_violation, DEFAULT_BRUTE_LIMIT};
use multipack::plane::{
    build_nng, conflict_graph, fpt_2_multipacking, greedy_2_multipacking, max_1_multipacking, max_2_multipacking_exact,
    max_degree_audit, ExactOptions,
};
use multipack::svg::{render, RenderOptions};
use multipack::{Dim, Error, Method, PointSet, SolveReport};
use serde::Serialize;

use crate::{Command, Edges, Family, Format, SolveMethod};

/// Full general position is checked up to this size; larger random sets only
/// guarantee unique first and second neighbors.
const FULL_CHECK_LIMIT: usize = 2000;

pub struct CliError {
    pub code: u8,
    kind: &'static str,
    message: String,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    message: &'a str,
}

impl CliError {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ErrorJson { error: self.kind, message: &self.message }).expect("plain strings")
    }

    fn io(path: &Path, e: std::io::Error) -> CliError {
        CliError { code: 2, kind: "io", message: format!("{}: {e}", path.display()) }
    }

    pub fn usage(message: impl Into<String>) -> CliError {
        CliError { code: 2, kind: "invalid_argument", message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let (code, kind) = match &e {
            Error::Parse(_) => (2, "parse"),
            Error::DimensionMismatch { .. } => (2, "dimension_mismatch"),
            Error::Duplicate { .. } => (2, "duplicate"),
            Error::GeneralPosition(_) => (2, "general_position"),
            Error::InvalidRadius { .. } => (2, "invalid_radius"),
            Error::IndexOutOfRange { .. } => (2, "index_out_of_range"),
            Error::InvalidArgument(_) => (2, "invalid_argument"),
            Error::RetriesExhausted { .. } => (2, "retries_exhausted"),
            Error::Incompatible(_) => (3, "incompatible"),
            Error::TooLarge { .. } => (3, "too_large"),
            Error::TooFewPoints { .. } => (3, "too_few_points"),
            Error::NotAForest(_) => (3, "not_a_forest"),
            Error::BudgetExceeded { .. } => (4, "budget_exceeded"),
        };
        CliError { code, kind, message: e.to_string() }
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Solve { input, r, method, k, budget, output } => solve(&input, r, method, k, budget, output),
        Command::Check { input, set, r } => check(&input, &set, r),
        Command::Gen { family, n, seed, dim, grid, unscaled, format, out } => {
            gen(family, n, seed, dim, grid, unscaled, format, out)
        }
        Command::AuditDegree { input } => audit(&input),
        Command::Bench { family, n, trials, seed, budget, timing, report } => {
            let sizes = parse_range(&n)?;
            let outcome = crate::bench::run(family, sizes, trials, seed, budget, timing)?;
            write_out(report.as_deref(), &outcome.csv)?;
            eprintln!("{}", outcome.summary);
            Ok(if outcome.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Render { input, set, circles, edges, out } => draw(&input, set.as_deref(), circles, edges, out),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn read_points(path: &Path) -> CliResult<PointSet> {
    Ok(parse_points(&read(path)?)?)
}

fn write_out(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_range(text: &str) -> CliResult<std::ops::RangeInclusive<usize>> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| CliError::usage(format!("bad size {s:?}")));
    let range = match text.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => num(text)?..=num(text)?,
    };
    if range.is_empty() {
        return Err(CliError::usage(format!("empty size range {text:?}")));
    }
    Ok(range)
}

fn pick_method(dim: Dim, r: usize, n: usize) -> CliResult<SolveMethod> {
    Ok(match (dim, r) {
        (Dim::Line, _) => SolveMethod::Greedy1d,
        (Dim::Plane, 1) => SolveMethod::Nng,
        (Dim::Plane, 2) => SolveMethod::Exact,
        _ if n <= DEFAULT_BRUTE_LIMIT => SolveMethod::Brute,
        _ => return Err(Error::TooLarge { n, limit: DEFAULT_BRUTE_LIMIT }.into()),
    })
}

fn require_r(method: &str, r: usize, want: usize) -> CliResult<()> {
    if r == want {
        Ok(())
    } else {
        Err(Error::Incompatible(format!("method {method} requires r = {want}, got r = {r}")).into())
    }
}

fn solve(
    input: &Path,
    radius: Radius,
    method: SolveMethod,
    k: Option<usize>,
    budget: u64,
    output: Option<PathBuf>,
) -> CliResult<ExitCode> {
    let points = read_points(input)?;
    let n = points.len();
    let r = radius.resolve(n);
    if !(n == 1 && r == 0) && (r == 0 || r >= n) {
        return Err(Error::InvalidRadius { r, n }.into());
    }
    let method = match method {
        SolveMethod::Auto => pick_method(points.dim(), r, n)?,
        m => m,
    };
    let mut found = true;
    let report = match method {
        SolveMethod::Auto => unreachable!("resolved above"),
        SolveMethod::Greedy1d => greedy_max_r_multipacking_1d(&points, radius)?,
        SolveMethod::Nng => {
            require_r("nng", r, 1)?;
            max_1_multipacking(&points)?
        }
        SolveMethod::Exact => {
            require_r("exact", r, 2)?;
            max_2_multipacking_exact(&points, &ExactOptions { node_budget: Some(budget), canonical: true })?
        }
        SolveMethod::Fpt => {
            require_r("fpt", r, 2)?;
            let k = k.ok_or_else(|| CliError::usage("method fpt needs --k"))?;
            let outcome = fpt_2_multipacking(&points, k)?;
            let stats = outcome.stats.clone();
            outcome.into_report(2).unwrap_or_else(|| {
                found = false;
                SolveReport::new(Vec::new(), 2, Method::Fpt, stats)
            })
        }
        SolveMethod::Greedy => {
            require_r("greedy", r, 2)?;
            greedy_2_multipacking(&points)?
        }
        SolveMethod::Brute => bruteforce_max_r_multipacking(&points, r, DEFAULT_BRUTE_LIMIT)?,
    };
    write_out(output.as_deref(), &format!("{}\n", report.to_json()))?;
    eprintln!(
        "{}: {} of {n} points, r = {} ({:.1?}, {} nodes)",
        report.method.name(),
        report.size,
        report.r,
        report.stats.elapsed,
        report.stats.nodes
    );
    if !found {
        eprintln!("no 2-multipacking of size {} exists", k.unwrap_or_default());
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn check(input: &Path, set: &Path, radius: Radius) -> CliResult<ExitCode> {
    let points = read_points(input)?;
    let members = parse_index_set(&read(set)?)?;
    let r = radius.resolve(points.len());
    let table = build_neighbor_prefix(&points, r.max(1))?;
    match first_violation(&table, &members, r)? {
        None => {
            eprintln!("valid {r}-multipacking of size {}", members.len());
            Ok(ExitCode::SUCCESS)
        }
        Some(v) => {
            println!("{}", serde_json::to_string(&v).expect("plain struct"));
            eprintln!("N_{}[{}] holds {} members, at most {} allowed", v.s, v.v, v.count, v.bound);
            Ok(ExitCode::from(1))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn gen(
    family: Family,
    n: Option<usize>,
    seed: u64,
    dim: usize,
    grid: Option<u64>,
    unscaled: bool,
    format: Format,
    out: Option<PathBuf>,
) -> CliResult<ExitCode> {
    let need_n = || n.ok_or_else(|| CliError::usage("this family needs --n"));
    let points = match family {
        Family::Lower1d => lower_tight_example(need_n()?)?,
        Family::Upper1d => upper_tight_example(need_n()?, unscaled)?,
        Family::Pentagon => pentagon_five(),
        Family::Square4 => square_four(),
        Family::Random => {
            let n = need_n()?;
            let dim = Dim::from_usize(dim)?;
            let grid = grid.unwrap_or_else(|| SCAN_GRID.max((n as u64).saturating_mul(n as u64)));
            let uniqueness = if n <= FULL_CHECK_LIMIT { Uniqueness::Full } else { Uniqueness::Prefix(2) };
            random_point_set_with(n, dim, seed, grid, uniqueness)?
        }
    };
    let text = match format {
        Format::Csv => points_to_csv(&points),
        Format::Json => points_to_json(&points),
    };
    write_out(out.as_deref(), &text)?;
    eprintln!("{} points in dimension {}", points.len(), points.dim().get());
    Ok(ExitCode::SUCCESS)
}

fn audit(input: &Path) -> CliResult<ExitCode> {
    let points = read_points(input)?;
    let audit = max_degree_audit(&points)?;
    println!("{}", serde_json::to_string(&audit).expect("plain struct"));
    eprintln!("max degree {} at point {}", audit.max_degree, audit.argmax);
    Ok(if audit.within_bound { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn draw(input: &Path, set: Option<&Path>, circles: bool, edges: Edges, out: Option<PathBuf>) -> CliResult<ExitCode> {
    let points = read_points(input)?;
    let witness = set.map(|p| read(p).and_then(|t| Ok(parse_index_set(&t)?))).transpose()?;
    if let Some(i) = witness.iter().flatten().find(|&&i| i >= points.len()) {
        return Err(Error::IndexOutOfRange { index: *i, n: points.len() }.into());
    }
    let graph = match edges {
        Edges::None => None,
        Edges::Nng => Some(build_nng(&points, &build_neighbor_prefix(&points, 1)?)?),
        Edges::Gp => Some(conflict_graph(&points)?),
    };
    let opts = RenderOptions { second_neighbor_circles: circles, ..RenderOptions::default() };
    write_out(out.as_deref(), &render(&points, witness.as_deref(), graph.as_ref(), &opts))?;
    Ok(ExitCode::SUCCESS)
}
