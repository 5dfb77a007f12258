//! Named extremal instances, seeded random instances and the small-set scan.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geometry::{assert_general_position, build_neighbor_prefix, Dim, Point, PointSet};
use crate::io::parse_points_csv;
use crate::multipacking::{multipacking_number, DEFAULT_BRUTE_LIMIT};
use crate::par;
use crate::{Error, Result};

pub const PENTAGON_CSV: &str = include_str!("../data/v1/pentagon.csv");
pub const SQUARE_CSV: &str = include_str!("../data/v1/square4.csv");

/// `{n_1(v), n_2(v)}` is the pair of cyclic neighbors of `v` for every `v`.
pub fn has_cyclic_neighbor_property(points: &PointSet) -> bool {
    let n = points.len();
    let Ok(table) = build_neighbor_prefix(points, 2) else {
        return false;
    };
    (0..n).all(|i| {
        let mut got = [table.neighbor(i, 1), table.neighbor(i, 2)];
        let mut want = [(i + n - 1) % n, (i + 1) % n];
        got.sort_unstable();
        want.sort_unstable();
        got == want
    })
}

/// Irregular convex pentagon in which every vertex's two nearest points are
/// its two neighbors along the boundary. Its multipacking number is 1.
pub fn pentagon_five() -> PointSet {
    let p = parse_points_csv(PENTAGON_CSV).expect("pentagon fixture parses");
    assert!(assert_general_position(&p).is_empty(), "pentagon fixture in general position");
    assert!(has_cyclic_neighbor_property(&p), "pentagon fixture has cyclic nearest neighbors");
    p
}

/// Slightly skewed square with multipacking number 1: each corner's two
/// nearest points are the adjacent corners.
pub fn square_four() -> PointSet {
    let p = parse_points_csv(SQUARE_CSV).expect("square fixture parses");
    assert!(assert_general_position(&p).is_empty(), "square fixture in general position");
    assert!(has_cyclic_neighbor_property(&p), "square fixture has adjacent nearest neighbors");
    p
}

/// Which neighbor ranks must be tie-free in a random instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    /// Every neighbor of every point is unique (full general position).
    Full,
    /// Only the first `d` neighbors of each point must be unique. Checked by
    /// a sweep, so usable for tens of thousands of points.
    Prefix(usize),
}

const RESAMPLE_ROUNDS: u64 = 1000;

/// `n` distinct points with integer coordinates uniform on `[0, grid)^dim`,
/// in full general position. Deterministic in `seed` on every platform.
pub fn random_point_set(n: usize, dim: Dim, seed: u64, grid: u64) -> Result<PointSet> {
    random_point_set_with(n, dim, seed, grid, Uniqueness::Full)
}

pub fn random_point_set_with(n: usize, dim: Dim, seed: u64, grid: u64, uniqueness: Uniqueness) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::TooFewPoints { n, need: 1 });
    }
    if (grid as u128) < (n as u128) * (n as u128) || grid > i64::MAX as u64 {
        return Err(Error::InvalidArgument(format!("grid {grid} must lie in [n², 2^63) for n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<i64> { (0..dim.get()).map(|_| rng.gen_range(0..grid as i64)).collect() };
    let mut coords: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut used = std::collections::HashSet::with_capacity(n);
    while coords.len() < n {
        let c = draw(&mut rng);
        if used.insert(c.clone()) {
            coords.push(c);
        }
    }
    for _ in 0..RESAMPLE_ROUNDS {
        let points = PointSet::new(coords.iter().map(|c| to_point(c)).collect())?;
        let offenders: Vec<usize> = match uniqueness {
            Uniqueness::Full => assert_general_position(&points).iter().map(|t| t.b).collect(),
            Uniqueness::Prefix(depth) => match build_neighbor_prefix(&points, depth) {
                Ok(_) => Vec::new(),
                Err(Error::GeneralPosition(t)) => vec![t.b],
                Err(e) => return Err(e),
            },
        };
        if offenders.is_empty() {
            return Ok(points);
        }
        let mut offenders = offenders;
        offenders.sort_unstable();
        offenders.dedup();
        for i in offenders {
            loop {
                let c = draw(&mut rng);
                if used.insert(c.clone()) {
                    used.remove(&coords[i]);
                    coords[i] = c;
                    break;
                }
            }
        }
    }
    Err(Error::RetriesExhausted { attempts: RESAMPLE_ROUNDS })
}

fn to_point(c: &[i64]) -> Point {
    match c {
        [x] => Point::line(*x),
        [x, y] => Point::plane(*x, *y),
        _ => unreachable!("dimension is 1 or 2"),
    }
}

/// Seed of the `index`-th instance in a seeded family.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Grid used by the small-set scans.
pub const SCAN_GRID: u64 = 1_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub points_per_set: usize,
    pub checked: usize,
    /// Smallest multipacking number seen.
    pub min_mp: usize,
    /// Instances whose multipacking number is below the threshold.
    #[serde(skip)]
    pub counterexamples: Vec<PointSet>,
    pub counterexample_count: usize,
}

/// Computes the multipacking number of every instance and collects those
/// below `threshold`.
pub fn scan_instances(instances: &[PointSet], threshold: usize) -> Result<ScanReport> {
    let mps =
        par::map_range(instances.len(), |i| multipacking_number(&instances[i], DEFAULT_BRUTE_LIMIT).map(|r| r.size));
    let mut min_mp = usize::MAX;
    let mut counterexamples = Vec::new();
    for (inst, mp) in instances.iter().zip(mps) {
        let mp = mp?;
        min_mp = min_mp.min(mp);
        if mp < threshold {
            counterexamples.push(inst.clone());
        }
    }
    Ok(ScanReport {
        points_per_set: instances.first().map_or(0, PointSet::len),
        checked: instances.len(),
        min_mp,
        counterexample_count: counterexamples.len(),
        counterexamples,
    })
}

/// `trials` random planar sets of `points_per_set` points, scanned against
/// `threshold`.
pub fn mp_scan(points_per_set: usize, trials: usize, seed: u64, threshold: usize) -> Result<ScanReport> {
    let instances = par::map_range(trials, |t| {
        random_point_set(points_per_set, Dim::Plane, derive_seed(seed, t as u64), SCAN_GRID)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    scan_instances(&instances, threshold)
}

/// Random 6-point sets must all have multipacking number at least 2.
pub fn mmp2_scan(trials: usize, seed: u64) -> Result<ScanReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    mp_scan(6, trials, seed, 2)
}
