//! Point sets with exact rational coordinates and per-point neighbor orders.
//!
//! Every comparison of distances in this crate is exact. A [`PointSet`] caches
//! an integer image of its coordinates (all points scaled by the common
//! denominator), so squared distances are compared as `i128` when they fit
//! and as arbitrary-precision integers otherwise. Uniform scaling preserves
//! every neighbor order, so the integer image is all the solvers ever look at.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::par;
use crate::{Error, Result};

/// An exact rational coordinate, always held in reduced form with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coordinate(BigRational);

impl Coordinate {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Coordinate(BigRational::new(numer.into(), denom)))
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        Coordinate(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Coordinate(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Nearest `f64`, for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for Coordinate {
    fn from(value: BigRational) -> Self {
        Coordinate(value)
    }
}

impl From<i64> for Coordinate {
    fn from(value: i64) -> Self {
        Coordinate::integer(value)
    }
}

impl std::ops::Add<&Coordinate> for &Coordinate {
    type Output = Coordinate;
    fn add(self, rhs: &Coordinate) -> Coordinate {
        Coordinate(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub<&Coordinate> for &Coordinate {
    type Output = Coordinate;
    fn sub(self, rhs: &Coordinate) -> Coordinate {
        Coordinate(&self.0 - &rhs.0)
    }
}

impl std::ops::Mul<&Coordinate> for &Coordinate {
    type Output = Coordinate;
    fn mul(self, rhs: &Coordinate) -> Coordinate {
        Coordinate(&self.0 * &rhs.0)
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts integers, decimals with an optional exponent (`-3.25`, `1e-3`) and
/// fractions (`7/3`). Decimals are converted exactly.
impl FromStr for Coordinate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid coordinate {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            return Coordinate::new(n, d).map_err(|_| bad());
        }
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(at) => {
                let exp: i32 = s[at + 1..].parse().map_err(|_| bad())?;
                (&s[..at], exp)
            }
            None => (s, 0),
        };
        let (negative, body) = match mantissa.as_bytes().first() {
            Some(b'-') => (true, &mantissa[1..]),
            Some(b'+') => (false, &mantissa[1..]),
            _ => (false, mantissa),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut numer = BigInt::from_str(&digits).map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let scale = exponent - frac_part.len() as i32;
        let ten = BigInt::from(10u8);
        let value = if scale >= 0 {
            BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
        } else {
            BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
        };
        Ok(Coordinate(value))
    }
}

impl Serialize for Coordinate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coordinate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        let text = match &value {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(serde::de::Error::custom(format!("not a coordinate: {other}"))),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Ambient dimension of a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dim {
    Line,
    Plane,
}

impl Dim {
    pub fn get(self) -> usize {
        match self {
            Dim::Line => 1,
            Dim::Plane => 2,
        }
    }

    pub fn from_usize(d: usize) -> Result<Self> {
        match d {
            1 => Ok(Dim::Line),
            2 => Ok(Dim::Plane),
            _ => Err(Error::Parse(format!("unsupported dimension {d}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    coords: Vec<Coordinate>,
}

impl Point {
    pub fn line(x: impl Into<Coordinate>) -> Self {
        Point { coords: vec![x.into()] }
    }

    pub fn plane(x: impl Into<Coordinate>, y: impl Into<Coordinate>) -> Self {
        Point { coords: vec![x.into(), y.into()] }
    }

    pub fn from_coords(coords: Vec<Coordinate>) -> Result<Self> {
        Dim::from_usize(coords.len())?;
        Ok(Point { coords })
    }

    pub fn dim(&self) -> Dim {
        if self.coords.len() == 1 {
            Dim::Line
        } else {
            Dim::Plane
        }
    }

    pub fn coords(&self) -> &[Coordinate] {
        &self.coords
    }

    pub fn x(&self) -> &Coordinate {
        &self.coords[0]
    }

    /// Second coordinate; zero for points on the line.
    pub fn y(&self) -> Coordinate {
        self.coords.get(1).cloned().unwrap_or_else(Coordinate::zero)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Exact squared Euclidean distance.
pub fn squared_distance(a: &Point, b: &Point) -> Result<Coordinate> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim().get(), found: b.dim().get() });
    }
    let mut acc = Coordinate::zero();
    for (p, q) in a.coords.iter().zip(&b.coords) {
        let d = p - q;
        acc = &acc + &(&d * &d);
    }
    Ok(acc)
}

/// A squared distance on the integer image of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SqDist {
    Small(i128),
    Big(BigInt),
}

impl SqDist {
    fn to_big(&self) -> BigInt {
        match self {
            SqDist::Small(v) => BigInt::from(*v),
            SqDist::Big(v) => v.clone(),
        }
    }
}

impl Ord for SqDist {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (SqDist::Small(a), SqDist::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for SqDist {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Coordinates below 2^61 keep every squared distance of a planar set inside i128.
const SMALL_LIMIT: i64 = 1 << 61;

#[derive(Clone, Debug)]
enum Lattice {
    Small(Vec<[i64; 2]>),
    Big(Vec<[BigInt; 2]>),
}

impl Lattice {
    fn build(points: &[Point]) -> Lattice {
        let mut lcm = BigInt::one();
        for p in points {
            for c in &p.coords {
                lcm = lcm.lcm(c.denom());
            }
        }
        let scaled: Vec<[BigInt; 2]> = points
            .iter()
            .map(|p| {
                let img = |c: &Coordinate| c.numer() * (&lcm / c.denom());
                [img(&p.coords[0]), p.coords.get(1).map(img).unwrap_or_default()]
            })
            .collect();
        let small: Option<Vec<[i64; 2]>> = scaled
            .iter()
            .map(|[x, y]| {
                let x = x.to_i64().filter(|v| v.abs() < SMALL_LIMIT)?;
                let y = y.to_i64().filter(|v| v.abs() < SMALL_LIMIT)?;
                Some([x, y])
            })
            .collect();
        match small {
            Some(s) => Lattice::Small(s),
            None => Lattice::Big(scaled),
        }
    }

    fn sq_dist(&self, i: usize, j: usize) -> SqDist {
        match self {
            Lattice::Small(v) => SqDist::Small(small_sq(v[i], v[j])),
            Lattice::Big(v) => {
                let dx = &v[i][0] - &v[j][0];
                let dy = &v[i][1] - &v[j][1];
                SqDist::Big(&dx * &dx + &dy * &dy)
            }
        }
    }
}

#[inline]
fn small_sq(a: [i64; 2], b: [i64; 2]) -> i128 {
    let dx = (a[0] - b[0]) as i128;
    let dy = (a[1] - b[1]) as i128;
    dx * dx + dy * dy
}

/// An immutable, duplicate-free, ordered set of points of one dimension.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Point>,
    dim: Dim,
    lattice: Lattice,
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for PointSet {}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let first = points.first().ok_or(Error::TooFewPoints { n: 0, need: 1 })?;
        let dim = first.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim.get(), found: p.dim().get() });
        }
        let lattice = Lattice::build(&points);
        let mut by_position: Vec<usize> = (0..points.len()).collect();
        by_position.sort_by(|&a, &b| points[a].coords.cmp(&points[b].coords).then(a.cmp(&b)));
        for w in by_position.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(Error::Duplicate { first: w[0].min(w[1]), second: w[0].max(w[1]) });
            }
        }
        Ok(PointSet { points, dim, lattice })
    }

    pub fn from_line<I: IntoIterator<Item = i64>>(xs: I) -> Result<Self> {
        PointSet::new(xs.into_iter().map(Point::line).collect())
    }

    pub fn from_plane<I: IntoIterator<Item = (i64, i64)>>(xys: I) -> Result<Self> {
        PointSet::new(xys.into_iter().map(|(x, y)| Point::plane(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    /// Squared distance between points `i` and `j`, in the set's integer image.
    pub fn sq_dist(&self, i: usize, j: usize) -> SqDist {
        self.lattice.sq_dist(i, j)
    }

    /// The same points embedded in the plane with `y = 0`.
    pub fn to_plane(&self) -> PointSet {
        match self.dim {
            Dim::Plane => self.clone(),
            Dim::Line => {
                PointSet::new(self.points.iter().map(|p| Point::plane(p.x().clone(), Coordinate::zero())).collect())
                    .expect("embedding preserves distinctness")
            }
        }
    }

    /// Applies `p ↦ scale·p + shift` to every point.
    pub fn transformed(&self, scale: &Coordinate, shift: &[Coordinate]) -> Result<PointSet> {
        if !scale.is_positive() {
            return Err(Error::InvalidArgument("scale must be positive".into()));
        }
        if shift.len() != self.dim.get() {
            return Err(Error::DimensionMismatch { expected: self.dim.get(), found: shift.len() });
        }
        let points = self
            .points
            .iter()
            .map(|p| Point { coords: p.coords.iter().zip(shift).map(|(c, s)| &(c * scale) + s).collect() })
            .collect();
        PointSet::new(points)
    }

    /// Indices sorted by ascending coordinates (lexicographic in the plane).
    pub fn sorted_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.points[a].coords.cmp(&self.points[b].coords));
        idx
    }
}

/// `v` is equidistant from `a` and `b` (`a < b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tie {
    pub v: usize,
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for Tie {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "point {} is equidistant from points {} and {}", self.v, self.a, self.b)
    }
}

/// Per-point neighbor orders, possibly truncated to the first `depth`
/// neighbors of every point.
///
/// `order(v)[s - 1]` is the `s`-th nearest neighbor of `v`; the closed
/// neighborhood `N_s[v]` is `v` together with `order(v)[..s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborTable {
    depth: usize,
    order: Vec<Vec<usize>>,
}

impl NeighborTable {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Number of neighbors known for every point (`n - 1` for a full table).
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn is_full(&self) -> bool {
        self.depth + 1 == self.order.len().max(1)
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// The `s`-th nearest neighbor of `v`, `1 <= s <= depth`.
    pub fn neighbor(&self, v: usize, s: usize) -> usize {
        self.order[v][s - 1]
    }

    /// `N_s[v]` as a list starting with `v`.
    pub fn closed_neighborhood(&self, v: usize, s: usize) -> Vec<usize> {
        std::iter::once(v).chain(self.order[v][..s].iter().copied()).collect()
    }
}

fn first_tie(v: usize, sorted: &[(SqDist, usize)]) -> Option<Tie> {
    sorted.windows(2).find(|w| w[0].0 == w[1].0).map(|w| {
        let (a, b) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
        Tie { v, a, b }
    })
}

fn sorted_distances_from(points: &PointSet, v: usize) -> Vec<(SqDist, usize)> {
    let mut row: Vec<(SqDist, usize)> =
        (0..points.len()).filter(|&u| u != v).map(|u| (points.sq_dist(v, u), u)).collect();
    row.sort_unstable();
    row
}

/// Full neighbor table, sorting all other points for every source point.
pub fn build_neighbor_table(points: &PointSet) -> Result<NeighborTable> {
    let rows = par::map_range(points.len(), |v| {
        let row = sorted_distances_from(points, v);
        match first_tie(v, &row) {
            Some(t) => Err(t),
            None => Ok(row.into_iter().map(|(_, u)| u).collect::<Vec<_>>()),
        }
    });
    let mut order = Vec::with_capacity(rows.len());
    for row in rows {
        order.push(row.map_err(Error::GeneralPosition)?);
    }
    Ok(NeighborTable { depth: points.len().saturating_sub(1), order })
}

/// Neighbor table truncated to the first `depth` neighbors of each point.
///
/// Only requires the first `depth` neighbors to be unique: for every `v` the
/// `depth + 1` smallest distances from `v` must be pairwise distinct. Uses an
/// exact sweep over the points sorted by `x`, which is far cheaper than a full
/// table on large, spread-out inputs.
pub fn build_neighbor_prefix(points: &PointSet, depth: usize) -> Result<NeighborTable> {
    let n = points.len();
    if depth + 1 >= n {
        return build_neighbor_table(points);
    }
    let keep = depth + 1;
    let rows: Vec<std::result::Result<Vec<usize>, Tie>> = match &points.lattice {
        Lattice::Small(coords) => {
            let mut by_x: Vec<usize> = (0..n).collect();
            by_x.sort_unstable_by_key(|&i| (coords[i][0], coords[i][1]));
            let mut rank = vec![0usize; n];
            for (r, &i) in by_x.iter().enumerate() {
                rank[i] = r;
            }
            par::map_range(n, |v| {
                let best = sweep_nearest(coords, &by_x, rank[v], keep);
                check_prefix(v, &best, depth)
            })
        }
        Lattice::Big(_) => par::map_range(n, |v| {
            let mut row = sorted_distances_from(points, v);
            row.truncate(keep);
            check_prefix(v, &row, depth)
        }),
    };
    let mut order = Vec::with_capacity(n);
    for row in rows {
        order.push(row.map_err(Error::GeneralPosition)?);
    }
    Ok(NeighborTable { depth, order })
}

fn check_prefix<D: Ord + Clone>(v: usize, best: &[(D, usize)], depth: usize) -> std::result::Result<Vec<usize>, Tie> {
    if let Some(w) = best.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Tie { v, a: w[0].1.min(w[1].1), b: w[0].1.max(w[1].1) });
    }
    Ok(best.iter().take(depth).map(|&(_, u)| u).collect())
}

/// The `keep` nearest points to `by_x[pos]`, ascending by `(distance, index)`.
fn sweep_nearest(coords: &[[i64; 2]], by_x: &[usize], pos: usize, keep: usize) -> Vec<(SqDist, usize)> {
    let v = by_x[pos];
    let origin = coords[v];
    let mut best: Vec<(i128, usize)> = Vec::with_capacity(keep + 1);
    let offer = |u: usize, best: &mut Vec<(i128, usize)>| {
        let d = small_sq(origin, coords[u]);
        if best.len() == keep && (d, u) > best[keep - 1] {
            return;
        }
        let at = best.partition_point(|e| *e < (d, u));
        best.insert(at, (d, u));
        best.truncate(keep);
    };
    let done =
        |dx: i64, best: &Vec<(i128, usize)>| best.len() == keep && (dx as i128) * (dx as i128) > best[keep - 1].0;
    let (mut left, mut right) = (pos, pos + 1);
    let (mut left_open, mut right_open) = (pos > 0, right < by_x.len());
    while left_open || right_open {
        if right_open {
            let u = by_x[right];
            if done(coords[u][0] - origin[0], &best) {
                right_open = false;
            } else {
                offer(u, &mut best);
                right += 1;
                right_open = right < by_x.len();
            }
        }
        if left_open {
            let u = by_x[left - 1];
            if done(origin[0] - coords[u][0], &best) {
                left_open = false;
            } else {
                offer(u, &mut best);
                left -= 1;
                left_open = left > 0;
            }
        }
    }
    best.into_iter().map(|(d, u)| (SqDist::Small(d), u)).collect()
}

/// All triples `(v, a, b)` with `d(v, a) = d(v, b)`, sorted. Empty iff every
/// point has a unique `s`-th neighbor for every `s`.
pub fn assert_general_position(points: &PointSet) -> Vec<Tie> {
    let per_point = par::map_range(points.len(), |v| {
        let row = sorted_distances_from(points, v);
        let mut ties = Vec::new();
        let mut start = 0;
        while start < row.len() {
            let mut end = start + 1;
            while end < row.len() && row[end].0 == row[start].0 {
                end += 1;
            }
            for i in start..end {
                for j in i + 1..end {
                    let (a, b) = (row[i].1.min(row[j].1), row[i].1.max(row[j].1));
                    ties.push(Tie { v, a, b });
                }
            }
            start = end;
        }
        ties
    });
    let mut all: Vec<Tie> = per_point.into_iter().flatten().collect();
    all.sort_unstable();
    all
}

/// Pairs of distinct point pairs at equal distance. The stricter global
/// condition; most callers only need [`assert_general_position`].
pub fn global_distance_ties(points: &PointSet) -> Vec<((usize, usize), (usize, usize))> {
    let n = points.len();
    let mut pairs: Vec<(SqDist, (usize, usize))> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((points.sq_dist(i, j), (i, j)));
        }
    }
    pairs.sort_unstable();
    let mut ties = Vec::new();
    for w in pairs.windows(2) {
        if w[0].0 == w[1].0 {
            ties.push((w[0].1, w[1].1));
        }
    }
    ties
}

/// Denominator of every perturbation step, as a multiple of `epsilon`.
pub const PERTURB_STEPS: i64 = 1 << 16;
pub const PERTURB_ATTEMPTS: u64 = 64;

/// Moves each coordinate by a seed-derived offset `epsilon·k / 2^16` with
/// `|k| < 2^16`, retrying with a fresh stream until the result is in general
/// position.
pub fn perturb(points: &PointSet, epsilon: &Coordinate, seed: u64) -> Result<PointSet> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidArgument("epsilon must be positive".into()));
    }
    let step = &Coordinate::new(1, PERTURB_STEPS)? * epsilon;
    for attempt in 0..PERTURB_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);
        let moved: Vec<Point> = points
            .points()
            .iter()
            .map(|p| Point {
                coords: p
                    .coords
                    .iter()
                    .map(|c| {
                        let k = rng.gen_range(-(PERTURB_STEPS - 1)..PERTURB_STEPS);
                        c + &(&step * &Coordinate::integer(k))
                    })
                    .collect(),
            })
            .collect();
        if let Ok(candidate) = PointSet::new(moved) {
            if assert_general_position(&candidate).is_empty() {
                return Ok(candidate);
            }
        }
    }
    Err(Error::RetriesExhausted { attempts: PERTURB_ATTEMPTS })
}
