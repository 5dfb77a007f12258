use std::fmt::Write as _;
use std::ops::RangeInclusive;

use multipack::instances::{derive_seed, random_point_set, SCAN_GRID};
use multipack::line::{greedy_max_r_multipacking_1d, Radius};
use multipack::multipacking::{bruteforce_max_r_multipacking, multipacking_number, DEFAULT_BRUTE_LIMIT};
use multipack::plane::{conflict_graph, exact_max_is_with, greedy_independent_set, ExactOptions};
use multipack::{Dim, Error, Result};
use rayon::prelude::*;

use crate::commands::CliError;
use crate::BenchFamily;

pub struct Outcome {
    pub csv: String,
    pub summary: String,
    pub ok: bool,
}

struct Row {
    instance: String,
    method: &'static str,
    size: Option<usize>,
    optimum: Option<usize>,
    nodes: u64,
    wall_ms: f64,
}

impl Row {
    fn ratio(&self) -> Option<f64> {
        match (self.size, self.optimum) {
            (Some(s), Some(o)) if s > 0 => Some(o as f64 / s as f64),
            _ => None,
        }
    }
}

struct Task {
    name: String,
    n: usize,
    seed: u64,
}

pub fn run(
    family: BenchFamily,
    sizes: RangeInclusive<usize>,
    trials: usize,
    seed: u64,
    budget: u64,
    timing: bool,
) -> Result<Outcome, CliError> {
    let min_n = match family {
        BenchFamily::Random2d => 3,
        BenchFamily::Random1d | BenchFamily::Mmp2 => 2,
    };
    if *sizes.start() < min_n || trials == 0 {
        return Err(CliError::usage(format!("sizes must be at least {min_n} and trials at least 1")));
    }
    let tasks: Vec<Task> = sizes
        .flat_map(|n| (0..trials).map(move |t| (n, t)))
        .enumerate()
        .map(|(i, (n, t))| Task { name: format!("n{n}-t{t}"), n, seed: derive_seed(seed, i as u64) })
        .collect();
    let rows: Vec<Vec<Row>> = tasks
        .par_iter()
        .map(|task| match family {
            BenchFamily::Random2d => plane_rows(task, budget),
            BenchFamily::Random1d => line_rows(task),
            BenchFamily::Mmp2 => scan_rows(task),
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Row> = rows.into_iter().flatten().collect();

    let mut csv = String::from("instance,method,size,optimum,ratio,nodes");
    csv.push_str(if timing { ",wall_ms\n" } else { "\n" });
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for row in &rows {
        let ratio = row.ratio().map(|x| format!("{x:.4}")).unwrap_or_default();
        let _ =
            write!(csv, "{},{},{},{},{ratio},{}", row.instance, row.method, opt(row.size), opt(row.optimum), row.nodes);
        if timing {
            let _ = write!(csv, ",{:.3}", row.wall_ms);
        }
        csv.push('\n');
    }

    let (summary, ok) = match family {
        BenchFamily::Random2d => {
            let greedy: Vec<&Row> = rows.iter().filter(|r| r.method == "greedy").collect();
            let solved = greedy.iter().filter(|r| r.optimum.is_some()).count();
            let worst = greedy
                .iter()
                .filter_map(|r| r.ratio().map(|x| (x, &r.instance)))
                .fold(None, |w: Option<(f64, &String)>, c| if w.is_none_or(|w| c.0 > w.0) { Some(c) } else { w });
            let ok = worst.is_none_or(|(x, _)| x <= 4.0);
            let worst = worst.map_or("n/a".to_string(), |(x, name)| format!("{x:.4} ({name})"));
            (format!("random2d: {} instances, {solved} solved exactly, worst greedy ratio {worst}", tasks.len()), ok)
        }
        BenchFamily::Random1d => {
            let bad = rows.iter().filter(|r| r.size != r.optimum).count();
            (format!("random1d: {} greedy runs, {bad} below the optimum", rows.len()), bad == 0)
        }
        BenchFamily::Mmp2 => {
            let low = rows.iter().filter(|r| r.size.is_some_and(|s| s < 2)).count();
            let min = rows.iter().filter_map(|r| r.size).min().unwrap_or(0);
            (format!("mmp2: {} sets, smallest MP {min}, {low} with MP < 2", rows.len()), low == 0)
        }
    };
    Ok(Outcome { csv, summary, ok })
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

fn plane_rows(task: &Task, budget: u64) -> Result<Vec<Row>> {
    let points = random_point_set(task.n, Dim::Plane, task.seed, SCAN_GRID)?;
    let graph = conflict_graph(&points)?;
    let started = std::time::Instant::now();
    let exact = match exact_max_is_with(&graph, &ExactOptions { node_budget: Some(budget), canonical: false }) {
        Ok(rep) => Some(rep),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let exact_ms = ms(started.elapsed());
    let started = std::time::Instant::now();
    let greedy = greedy_independent_set(&graph);
    let greedy_ms = ms(started.elapsed());
    let optimum = exact.as_ref().map(|r| r.size);
    Ok(vec![
        Row {
            instance: task.name.clone(),
            method: "exact",
            size: optimum,
            optimum,
            nodes: exact.map_or(budget, |r| r.stats.nodes),
            wall_ms: exact_ms,
        },
        Row {
            instance: task.name.clone(),
            method: "greedy",
            size: Some(greedy.size),
            optimum,
            nodes: 0,
            wall_ms: greedy_ms,
        },
    ])
}

fn line_rows(task: &Task) -> Result<Vec<Row>> {
    let points = random_point_set(task.n, Dim::Line, task.seed, SCAN_GRID)?;
    (1..task.n)
        .map(|r| {
            let started = std::time::Instant::now();
            let greedy = greedy_max_r_multipacking_1d(&points, Radius::Fixed(r))?;
            let wall_ms = ms(started.elapsed());
            let brute = bruteforce_max_r_multipacking(&points, r, DEFAULT_BRUTE_LIMIT)?;
            Ok(Row {
                instance: format!("{}-r{r}", task.name),
                method: "greedy1d",
                size: Some(greedy.size),
                optimum: Some(brute.size),
                nodes: brute.stats.nodes,
                wall_ms,
            })
        })
        .collect()
}

fn scan_rows(task: &Task) -> Result<Vec<Row>> {
    let points = random_point_set(task.n, Dim::Plane, task.seed, SCAN_GRID)?;
    let started = std::time::Instant::now();
    let mp = multipacking_number(&points, DEFAULT_BRUTE_LIMIT)?;
    Ok(vec![Row {
        instance: task.name.clone(),
        method: "brute",
        size: Some(mp.size),
        optimum: Some(mp.size),
        nodes: mp.stats.nodes,
        wall_ms: ms(started.elapsed()),
    }])
}
