//! The r-multipacking validity check and the exhaustive oracle built on it.

use crate::clock::Stopwatch;

use serde::{Deserialize, Serialize};

use crate::geometry::{build_neighbor_table, NeighborTable, PointSet};
use crate::report::{Method, SolveReport, Stats};
use crate::{Error, Result};

/// Point count above which [`bruteforce_max_r_multipacking`] refuses to run
/// unless given a larger limit.
pub const DEFAULT_BRUTE_LIMIT: usize = 16;

/// Largest number of members `N_s[v]` may contain.
#[inline]
#[allow(clippy::manual_div_ceil)] // written as the floor of (s + 1) / 2 on purpose
pub fn bound(s: usize) -> usize {
    (s + 1) / 2
}

/// A set of point indices together with the radius it is claimed valid for.
///
/// Serializes as the witness format `{"r":R,"indices":[..],"size":K}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "WitnessJson", into = "WitnessJson")]
pub struct Multipacking {
    indices: Vec<usize>,
    r: usize,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    r: usize,
    indices: Vec<usize>,
    #[serde(default)]
    size: usize,
}

impl From<WitnessJson> for Multipacking {
    fn from(w: WitnessJson) -> Self {
        Multipacking::new(w.indices, w.r)
    }
}

impl From<Multipacking> for WitnessJson {
    fn from(m: Multipacking) -> Self {
        WitnessJson { r: m.r, size: m.indices.len(), indices: m.indices }
    }
}

impl Multipacking {
    pub fn new(mut indices: Vec<usize>, r: usize) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Multipacking { indices, r }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl From<&SolveReport> for Multipacking {
    fn from(report: &SolveReport) -> Self {
        Multipacking::new(report.indices.clone(), report.r)
    }
}

/// `N_s[v]` holds `count` members where at most `bound` are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub v: usize,
    pub s: usize,
    pub count: usize,
    pub bound: usize,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "N_{}[{}] contains {} members, bound {}", self.s, self.v, self.count, self.bound)
    }
}

fn validate_radius(table: &NeighborTable, r: usize) -> Result<()> {
    let n = table.len();
    if r == 0 || r >= n {
        return Err(Error::InvalidRadius { r, n });
    }
    if r > table.depth() {
        return Err(Error::InvalidArgument(format!(
            "neighbor table only covers {} neighbors, radius {r} requested",
            table.depth()
        )));
    }
    Ok(())
}

/// The first `(v, s)` in row-major order whose neighborhood is overfull, or
/// `None` when `members` is an `r`-multipacking. Costs `O(n·r)`.
pub fn first_violation(table: &NeighborTable, members: &[usize], r: usize) -> Result<Option<Violation>> {
    validate_radius(table, r)?;
    let n = table.len();
    let mut chosen = vec![false; n];
    for &i in members {
        *chosen.get_mut(i).ok_or(Error::IndexOutOfRange { index: i, n })? = true;
    }
    for v in 0..n {
        let mut count = usize::from(chosen[v]);
        for (s, &u) in table.order(v)[..r].iter().enumerate().map(|(k, u)| (k + 1, u)) {
            count += usize::from(chosen[u]);
            if count > bound(s) {
                return Ok(Some(Violation { v, s, count, bound: bound(s) }));
            }
        }
    }
    Ok(None)
}

pub fn is_r_multipacking(table: &NeighborTable, members: &[usize], r: usize) -> Result<bool> {
    Ok(first_violation(table, members, r)?.is_none())
}

/// Incremental membership counts used by the subset search: `counts[v][s]`
/// is `|N_s[v] ∩ M|` for `0 <= s <= r`.
struct Counter {
    r: usize,
    /// `position[v][u]`: where `u` sits in `v`'s sequence (`v` itself at 0).
    position: Vec<Vec<usize>>,
    counts: Vec<Vec<u16>>,
}

impl Counter {
    fn new(table: &NeighborTable, r: usize) -> Self {
        let n = table.len();
        let mut position = vec![vec![0; n]; n];
        for (v, row) in position.iter_mut().enumerate() {
            for (k, &u) in table.order(v).iter().enumerate() {
                row[u] = k + 1;
            }
        }
        Counter { r, position, counts: vec![vec![0; r + 1]; n] }
    }

    fn fits(&self, i: usize) -> bool {
        self.position.iter().zip(&self.counts).all(|(pos, counts)| {
            let p = pos[i];
            p > self.r || (p.max(1)..=self.r).all(|s| usize::from(counts[s]) < bound(s))
        })
    }

    fn apply(&mut self, i: usize, delta: i16) {
        for (pos, counts) in self.position.iter().zip(self.counts.iter_mut()) {
            let p = pos[i];
            if p <= self.r {
                for c in &mut counts[p..] {
                    *c = c.wrapping_add_signed(delta);
                }
            }
        }
    }
}

struct Search {
    counter: Counter,
    n: usize,
    current: Vec<usize>,
    best: Vec<usize>,
    stats: Stats,
}

impl Search {
    fn run(&mut self, next: usize) {
        self.stats.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if next == self.n || self.current.len() + (self.n - next) <= self.best.len() {
            return;
        }
        self.stats.checks += 1;
        if self.counter.fits(next) {
            self.counter.apply(next, 1);
            self.current.push(next);
            self.run(next + 1);
            self.current.pop();
            self.counter.apply(next, -1);
        }
        self.run(next + 1);
    }
}

/// Exact `MP_r` by depth-first subset search with hereditary pruning.
///
/// Subsets are explored including each index before excluding it and the
/// incumbent only changes on strict improvement, so the witness is the
/// lexicographically smallest maximum multipacking. A single point is a
/// multipacking by convention, whatever `r`.
pub fn bruteforce_max_r_multipacking(points: &PointSet, r: usize, limit: usize) -> Result<SolveReport> {
    let started = Stopwatch::start();
    let n = points.len();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 1 {
        return Ok(SolveReport::new(vec![0], 0, Method::Brute, Stats::default()));
    }
    let table = build_neighbor_table(points)?;
    bruteforce_with_table(&table, r).map(|mut report| {
        report.stats.elapsed = started.elapsed();
        report
    })
}

/// [`bruteforce_max_r_multipacking`] over a prebuilt full table.
pub fn bruteforce_with_table(table: &NeighborTable, r: usize) -> Result<SolveReport> {
    validate_radius(table, r)?;
    let n = table.len();
    let mut search = Search {
        counter: Counter::new(table, r),
        n,
        current: Vec::with_capacity(n),
        best: Vec::new(),
        stats: Stats::default(),
    };
    search.run(0);
    Ok(SolveReport::new(search.best, r, Method::Brute, search.stats))
}

/// `MP(P)`: the exhaustive optimum at the full radius `n - 1`.
pub fn multipacking_number(points: &PointSet, limit: usize) -> Result<SolveReport> {
    let r = points.len().saturating_sub(1);
    bruteforce_max_r_multipacking(points, r, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_neighbor_table;

    fn line(xs: &[i64]) -> (PointSet, NeighborTable) {
        let p = PointSet::from_line(xs.iter().copied()).unwrap();
        let t = build_neighbor_table(&p).unwrap();
        (p, t)
    }

    #[test]
    fn checker_examples() {
        let (_, t) = line(&[2, 4, 8, 16]);
        assert!(is_r_multipacking(&t, &[0, 3], 3).unwrap());
        assert_eq!(first_violation(&t, &[0, 1], 1).unwrap(), Some(Violation { v: 0, s: 1, count: 2, bound: 1 }));
        for r in 1..=3 {
            assert!(is_r_multipacking(&t, &[], r).unwrap());
            for v in 0..4 {
                assert!(is_r_multipacking(&t, &[v], r).unwrap());
            }
        }
    }

    #[test]
    fn checker_errors() {
        let (_, t) = line(&[2, 4, 8, 16]);
        assert_eq!(first_violation(&t, &[], 0), Err(Error::InvalidRadius { r: 0, n: 4 }));
        assert_eq!(first_violation(&t, &[], 4), Err(Error::InvalidRadius { r: 4, n: 4 }));
        assert_eq!(first_violation(&t, &[7], 1), Err(Error::IndexOutOfRange { index: 7, n: 4 }));
    }

    #[test]
    fn oracle_examples() {
        let (p, _) = line(&[2, 4, 8, 16, 32, 64]);
        let rep = bruteforce_max_r_multipacking(&p, 5, DEFAULT_BRUTE_LIMIT).unwrap();
        assert_eq!((rep.size, rep.indices.as_slice()), (2, &[0, 3][..]));

        let (p, _) = line(&[0, 2, 3, 11, 18]);
        let rep = bruteforce_max_r_multipacking(&p, 4, DEFAULT_BRUTE_LIMIT).unwrap();
        assert_eq!((rep.size, rep.indices.as_slice()), (2, &[0, 3][..]));

        let (p, _) = line(&[2, 4, 8, 16]);
        assert_eq!(multipacking_number(&p, DEFAULT_BRUTE_LIMIT).unwrap().size, 2);
    }

    #[test]
    fn singleton_convention() {
        let p = PointSet::from_line([42]).unwrap();
        let rep = multipacking_number(&p, DEFAULT_BRUTE_LIMIT).unwrap();
        assert_eq!((rep.size, rep.indices), (1, vec![0]));
    }

    #[test]
    fn three_points_have_multipacking_number_one() {
        let p = PointSet::from_plane([(0, 0), (5, 1), (2, 9)]).unwrap();
        assert_eq!(multipacking_number(&p, DEFAULT_BRUTE_LIMIT).unwrap().size, 1);
    }

    #[test]
    fn oracle_refuses_large_inputs() {
        let p = PointSet::from_line((0..20).map(|i| 1i64 << i)).unwrap();
        assert_eq!(multipacking_number(&p, DEFAULT_BRUTE_LIMIT).unwrap_err(), Error::TooLarge { n: 20, limit: 16 });
    }

    #[test]
    fn witness_json() {
        let m = Multipacking::new(vec![5, 1], 3);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"r":3,"indices":[1,5],"size":2}"#);
        assert_eq!(serde_json::from_str::<Multipacking>(&s).unwrap(), m);
        let v = Violation { v: 0, s: 1, count: 2, bound: 1 };
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"v":0,"s":1,"count":2,"bound":1}"#);
    }
}
