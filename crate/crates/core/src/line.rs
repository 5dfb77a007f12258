//! Points on a line: the exact greedy, the bounds `⌊n/3⌋ <= MP <= ⌊n/2⌋`, and
//! the two families on which those bounds are attained.

use crate::clock::Stopwatch;

use num_bigint::BigInt;
use serde::Serialize;

use crate::geometry::{build_neighbor_table, Coordinate, Dim, Point, PointSet};
use crate::multipacking::is_r_multipacking;
use crate::report::{Method, SolveReport, Stats};
use crate::{Error, Result};

/// Radius selector; `Full` is `n - 1`, the plain multipacking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Radius {
    Full,
    Fixed(usize),
}

impl Radius {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Radius::Full => n.saturating_sub(1),
            Radius::Fixed(r) => r,
        }
    }
}

impl std::str::FromStr for Radius {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Radius::Full),
            _ => s
                .parse()
                .map(Radius::Fixed)
                .map_err(|_| Error::Parse(format!("radius must be a positive integer or `full`, got {s:?}"))),
        }
    }
}

/// Maximum `r`-multipacking of a point set on the line.
///
/// Visits the points left to right and keeps each one whose addition leaves
/// the current set an `r`-multipacking. The input need not be sorted; the
/// witness is reported in the caller's index space. `O(n²r)`.
pub fn greedy_max_r_multipacking_1d(points: &PointSet, r: Radius) -> Result<SolveReport> {
    let started = Stopwatch::start();
    if points.dim() != Dim::Line {
        return Err(Error::Incompatible("the line greedy needs one-dimensional points".into()));
    }
    let n = points.len();
    if n == 1 {
        return Ok(SolveReport::new(vec![0], 0, Method::Greedy1d, Stats::default()));
    }
    let r = r.resolve(n);
    let table = build_neighbor_table(points)?;
    let mut stats = Stats::default();
    let mut chosen: Vec<usize> = Vec::new();
    for i in points.sorted_indices() {
        chosen.push(i);
        stats.checks += 1;
        if !is_r_multipacking(&table, &chosen, r)? {
            chosen.pop();
        }
    }
    stats.elapsed = started.elapsed();
    Ok(SolveReport::new(chosen, r, Method::Greedy1d, stats))
}

/// `{2, 4, 8, …, 2^n}`, whose multipacking number is `n/3` when `3 | n`.
pub fn lower_tight_example(n: usize) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::TooFewPoints { n, need: 1 });
    }
    PointSet::new((1..=n).map(|i| Point::line(Coordinate::integer(BigInt::from(1) << i))).collect())
}

/// `i`-th point (1-based) of the family attaining `⌊n/2⌋` for odd `n`:
/// `(4/3)(2^{i-1} - 1) - (i-1)/2` for odd `i`,
/// `(4/3)(2^i - 1) - i/2 - 2^{i-1} + 1` for even `i`.
pub fn upper_tight_point(i: usize) -> Coordinate {
    assert!(i >= 1, "points are numbered from 1");
    let pow = |e: usize| Coordinate::integer(BigInt::from(1) << e);
    let one = Coordinate::integer(1);
    let four_thirds = Coordinate::new(4, 3).expect("nonzero");
    if i % 2 == 1 {
        let head = &four_thirds * &(&pow(i - 1) - &one);
        &head - &Coordinate::new((i - 1) as i64, 2).expect("nonzero")
    } else {
        let head = &four_thirds * &(&pow(i) - &one);
        let tail = &Coordinate::new(i as i64, 2).expect("nonzero") + &pow(i - 1);
        &(&head - &tail) + &one
    }
}

/// The upper family `p_1 < … < p_n`, multiplied by 3 unless `unscaled`.
pub fn upper_tight_example(n: usize, unscaled: bool) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::TooFewPoints { n, need: 1 });
    }
    let factor = Coordinate::integer(if unscaled { 1 } else { 3 });
    PointSet::new((1..=n).map(|i| Point::line(&upper_tight_point(i) * &factor)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsCheck {
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    pub mp: usize,
    pub holds: bool,
}

/// Computes `MP` with the greedy and checks `⌊n/3⌋ <= MP <= ⌊n/2⌋`. A single
/// point fails the upper bound; the bounds are meant for `n >= 2`.
pub fn verify_1d_bounds(points: &PointSet) -> Result<BoundsCheck> {
    let n = points.len();
    let mp = greedy_max_r_multipacking_1d(points, Radius::Full)?.size;
    let (lower, upper) = (n / 3, n / 2);
    Ok(BoundsCheck { n, lower, upper, mp, holds: lower <= mp && mp <= upper })
}
