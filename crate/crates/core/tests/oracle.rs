//! Cross-checks against a deliberately naive reference: integer points,
//! neighborhoods rebuilt from scratch for every query, subsets enumerated by
//! bitmask, and validity tested straight from the definition.

#![allow(clippy::manual_div_ceil)]

use multipack::geometry::{build_neighbor_table, Dim};
use multipack::instances::{derive_seed, random_point_set};
use multipack::line::{greedy_max_r_multipacking_1d, Radius};
use multipack::multipacking::{bruteforce_max_r_multipacking, is_r_multipacking, DEFAULT_BRUTE_LIMIT};
use multipack::plane::{greedy_2_multipacking, max_1_multipacking, max_2_multipacking_exact, ExactOptions};
use multipack::PointSet;

struct Naive {
    xy: Vec<(i128, i128)>,
}

impl Naive {
    fn from(points: &PointSet) -> Naive {
        let as_int = |c: &multipack::Coordinate| -> i128 {
            assert_eq!(c.denom(), &1.into());
            c.numer().to_string().parse().unwrap()
        };
        Naive { xy: points.points().iter().map(|p| (as_int(p.x()), as_int(&p.y()))).collect() }
    }

    fn n(&self) -> usize {
        self.xy.len()
    }

    /// `v` followed by its `s` nearest points.
    fn ball(&self, v: usize, s: usize) -> Vec<usize> {
        let (x, y) = self.xy[v];
        let mut others: Vec<(i128, usize)> = (0..self.n())
            .filter(|&u| u != v)
            .map(|u| ((self.xy[u].0 - x).pow(2) + (self.xy[u].1 - y).pow(2), u))
            .collect();
        others.sort();
        std::iter::once(v).chain(others[..s].iter().map(|&(_, u)| u)).collect()
    }

    fn valid(&self, mask: u32, r: usize) -> bool {
        (0..self.n())
            .all(|v| (1..=r).all(|s| self.ball(v, s).iter().filter(|&&u| mask >> u & 1 == 1).count() <= (s + 1) / 2))
    }

    fn best(&self, r: usize) -> usize {
        (0u32..1 << self.n()).filter(|&m| self.valid(m, r)).map(u32::count_ones).max().unwrap() as usize
    }
}

fn instances(dim: Dim, count: u64, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<PointSet> {
    let span = (sizes.end() - sizes.start() + 1) as u64;
    (0..count)
        .map(|t| {
            let s = derive_seed(seed, t);
            let n = sizes.start() + (s % span) as usize;
            random_point_set(n, dim, s, 10_000).unwrap()
        })
        .collect()
}

#[test]
fn brute_force_matches_definition() {
    for dim in [Dim::Line, Dim::Plane] {
        for p in instances(dim, 25, 2..=8, 11) {
            let naive = Naive::from(&p);
            for r in 1..p.len() {
                let rep = bruteforce_max_r_multipacking(&p, r, DEFAULT_BRUTE_LIMIT).unwrap();
                assert_eq!(rep.size, naive.best(r), "{p:?} r={r}");
                let mask = rep.indices.iter().fold(0u32, |m, &i| m | 1 << i);
                assert!(naive.valid(mask, r));
            }
        }
    }
}

#[test]
fn checker_matches_definition_on_every_subset() {
    for p in instances(Dim::Plane, 10, 3..=7, 12) {
        let naive = Naive::from(&p);
        let table = build_neighbor_table(&p).unwrap();
        for r in 1..p.len() {
            for mask in 0u32..1 << p.len() {
                let set: Vec<usize> = (0..p.len()).filter(|i| mask >> i & 1 == 1).collect();
                assert_eq!(is_r_multipacking(&table, &set, r).unwrap(), naive.valid(mask, r));
            }
        }
    }
}

#[test]
fn line_greedy_matches_definition() {
    for p in instances(Dim::Line, 40, 2..=9, 13) {
        let naive = Naive::from(&p);
        for r in 1..p.len() {
            assert_eq!(greedy_max_r_multipacking_1d(&p, Radius::Fixed(r)).unwrap().size, naive.best(r));
        }
    }
}

#[test]
fn planar_solvers_match_definition() {
    for p in instances(Dim::Plane, 40, 3..=9, 14) {
        let naive = Naive::from(&p);
        assert_eq!(max_1_multipacking(&p).unwrap().size, naive.best(1));
        let exact = max_2_multipacking_exact(&p, &ExactOptions::default()).unwrap();
        assert_eq!(exact.size, naive.best(2));
        let greedy = greedy_2_multipacking(&p).unwrap();
        let mask = greedy.indices.iter().fold(0u32, |m, &i| m | 1 << i);
        assert!(naive.valid(mask, 2) && greedy.size <= exact.size);
    }
}
