//! Solvers for small radii in the plane.
//!
//! For `r = 1` a set is valid iff it is independent in the nearest-neighbor
//! graph, which is a forest, so the optimum is a tree DP. For `r = 2` a set is
//! valid iff it is independent in the conflict graph `G_P`, which joins every
//! point and its two nearest neighbors into a triangle. `G_P` has maximum
//! degree at most 17; the branching solver's running time rests on it.

mod bitset;
mod exact;
mod forest;
mod fpt;
mod greedy;

use crate::clock::Stopwatch;
use std::fmt::Write as _;

use serde::Serialize;

use crate::geometry::{build_neighbor_prefix, NeighborTable, PointSet};
use crate::report::{Method, SolveReport, Stats};
use crate::{Error, Result};

pub use exact::{exact_max_is, exact_max_is_with, ExactOptions};
pub use forest::forest_max_independent_set;
pub use fpt::{fpt_independent_set, fpt_independent_set_with, FptOutcome};
pub use greedy::greedy_independent_set;

pub(crate) use bitset::VertexSet;

/// Degree bound of the conflict graph.
pub const GP_MAX_DEGREE: usize = 17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphKind {
    /// Nearest-neighbor graph.
    Nng,
    /// Conflict graph for radius 2.
    Gp,
    /// Anything else (tests, fixtures).
    Plain,
}

impl GraphKind {
    /// Radius whose multipackings are this graph's independent sets.
    pub fn radius(self) -> usize {
        match self {
            GraphKind::Nng => 1,
            GraphKind::Gp | GraphKind::Plain => 2,
        }
    }
}

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    kind: GraphKind,
    adjacency: Vec<Vec<usize>>,
}

impl ConflictGraph {
    /// Builds the graph from an edge list, dropping self-loops and duplicates.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, kind: GraphKind) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        ConflictGraph { kind, adjacency }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// Maximum degree and the smallest vertex attaining it.
    pub fn max_degree(&self) -> (usize, usize) {
        self.adjacency.iter().enumerate().map(|(v, l)| (l.len(), v)).fold((0, 0), |best, (d, v)| {
            if d > best.0 {
                (d, v)
            } else {
                best
            }
        })
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let members: std::collections::HashSet<usize> = set.iter().copied().collect();
        set.iter().all(|&v| self.adjacency[v].iter().all(|u| !members.contains(u)))
    }

    /// One `u v` line per edge, sorted.
    pub fn edge_list_text(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").expect("writing to a string");
        }
        out
    }

    pub fn parse_edge_list(n: usize, text: &str, kind: GraphKind) -> Result<Self> {
        let mut edges = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace().map(str::parse::<usize>);
            match (fields.next(), fields.next(), fields.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) if u < n && v < n => edges.push((u, v)),
                _ => return Err(Error::Parse(format!("line {}: bad edge {line:?}", line_no + 1))),
            }
        }
        Ok(ConflictGraph::from_edges(n, edges, kind))
    }

    pub(crate) fn neighbor_sets(&self) -> Vec<VertexSet> {
        let n = self.len();
        self.adjacency.iter().map(|l| VertexSet::from_iter(n, l.iter().copied())).collect()
    }
}

fn require_depth(table: &NeighborTable, depth: usize) -> Result<()> {
    if table.depth() < depth {
        return Err(Error::InvalidArgument(format!("neighbor table depth {} < {depth}", table.depth())));
    }
    Ok(())
}

/// Nearest-neighbor graph: an edge from every point to its nearest neighbor.
/// Mutual pairs collapse into one edge; the result is checked to be a forest.
pub fn build_nng(points: &PointSet, table: &NeighborTable) -> Result<ConflictGraph> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints { n, need: 2 });
    }
    require_depth(table, 1)?;
    let graph = ConflictGraph::from_edges(n, (0..n).map(|v| (v, table.neighbor(v, 1))), GraphKind::Nng);
    forest::check_forest(&graph)?;
    Ok(graph)
}

/// Conflict graph `G_P`: for every `v` with nearest neighbors `u1`, `u2`, the
/// triangle `v u1 u2`.
pub fn build_gp(points: &PointSet, table: &NeighborTable) -> Result<ConflictGraph> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewPoints { n, need: 3 });
    }
    require_depth(table, 2)?;
    let edges = (0..n).flat_map(|v| {
        let (u1, u2) = (table.neighbor(v, 1), table.neighbor(v, 2));
        [(v, u1), (v, u2), (u1, u2)]
    });
    Ok(ConflictGraph::from_edges(n, edges, GraphKind::Gp))
}

/// Maximum 1-multipacking via the nearest-neighbor forest.
pub fn max_1_multipacking(points: &PointSet) -> Result<SolveReport> {
    let started = Stopwatch::start();
    if points.len() == 1 {
        return Ok(SolveReport::new(vec![0], 0, Method::Nng, Stats::default()));
    }
    let table = build_neighbor_prefix(points, 1)?;
    let graph = build_nng(points, &table)?;
    let witness = forest_max_independent_set(&graph)?;
    let stats = Stats { elapsed: started.elapsed(), ..Stats::default() };
    Ok(SolveReport::new(witness, 1, Method::Nng, stats))
}

/// Conflict graph of `points`, requiring only unique first and second neighbors.
pub fn conflict_graph(points: &PointSet) -> Result<ConflictGraph> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewPoints { n, need: 3 });
    }
    build_gp(points, &build_neighbor_prefix(points, 2)?)
}

/// Maximum 2-multipacking by branch and bound on `G_P`.
pub fn max_2_multipacking_exact(points: &PointSet, options: &ExactOptions) -> Result<SolveReport> {
    let started = Stopwatch::start();
    let graph = conflict_graph(points)?;
    let mut report = exact_max_is_with(&graph, options)?;
    report.stats.elapsed = started.elapsed();
    Ok(report)
}

/// A 2-multipacking of exactly `k` points, if one exists.
pub fn fpt_2_multipacking(points: &PointSet, k: usize) -> Result<FptOutcome> {
    let started = Stopwatch::start();
    let graph = conflict_graph(points)?;
    let mut outcome = fpt_independent_set(&graph, k)?;
    outcome.stats.elapsed = started.elapsed();
    Ok(outcome)
}

/// Minimum-degree greedy plus swap local search on `G_P`.
pub fn greedy_2_multipacking(points: &PointSet) -> Result<SolveReport> {
    let started = Stopwatch::start();
    let graph = conflict_graph(points)?;
    let mut report = greedy_independent_set(&graph);
    report.stats.elapsed = started.elapsed();
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    pub max_degree: usize,
    pub argmax: usize,
    pub within_bound: bool,
}

/// Maximum degree of `G_P`, compared against 17.
pub fn max_degree_audit(points: &PointSet) -> Result<DegreeAudit> {
    let (max_degree, argmax) = conflict_graph(points)?.max_degree();
    Ok(DegreeAudit { max_degree, argmax, within_bound: max_degree <= GP_MAX_DEGREE })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_neighbor_table;
    use crate::multipacking::is_r_multipacking;

    fn collinear() -> PointSet {
        PointSet::from_plane([(0, 0), (1, 0), (3, 0), (7, 0)]).unwrap()
    }

    #[test]
    fn nng_examples() {
        let p = collinear();
        let g = build_nng(&p, &build_neighbor_table(&p).unwrap()).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);

        let p = PointSet::from_plane([(0, 0), (5, 5)]).unwrap();
        let g = build_nng(&p, &build_neighbor_table(&p).unwrap()).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);

        let p = PointSet::from_plane([(0, 0), (1, 0), (100, 0), (100, 2)]).unwrap();
        let g = build_nng(&p, &build_neighbor_table(&p).unwrap()).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn gp_examples() {
        let p = collinear();
        let g = build_gp(&p, &build_neighbor_table(&p).unwrap()).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);

        let p = PointSet::from_plane([(0, 0), (4, 1), (1, 6)]).unwrap();
        let g = build_gp(&p, &build_neighbor_table(&p).unwrap()).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);

        let p = PointSet::from_plane([(0, 0), (4, 1)]).unwrap();
        assert!(matches!(conflict_graph(&p), Err(Error::TooFewPoints { .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = conflict_graph(&collinear()).unwrap();
        let text = g.edge_list_text();
        assert_eq!(text, "0 1\n0 2\n1 2\n1 3\n2 3\n");
        assert_eq!(ConflictGraph::parse_edge_list(4, &text, GraphKind::Gp).unwrap(), g);
        assert!(ConflictGraph::parse_edge_list(4, "0 9\n", GraphKind::Gp).is_err());
    }

    #[test]
    fn one_multipacking_examples() {
        let rep = max_1_multipacking(&collinear()).unwrap();
        assert_eq!(rep.size, 2);
        let p = PointSet::from_plane([(0, 0), (5, 5)]).unwrap();
        assert_eq!(max_1_multipacking(&p).unwrap().size, 1);
    }

    #[test]
    fn two_multipacking_on_collinear_points() {
        let p = collinear();
        let rep = max_2_multipacking_exact(&p, &ExactOptions::default()).unwrap();
        assert_eq!(rep.indices, vec![0, 3]);
        let table = build_neighbor_table(&p).unwrap();
        assert!(is_r_multipacking(&table, &rep.indices, 2).unwrap());

        let fpt = fpt_2_multipacking(&p, 2).unwrap();
        assert_eq!(fpt.witness.as_ref().map(Vec::len), Some(2));
        assert!(fpt_2_multipacking(&p, 3).unwrap().witness.is_none());

        assert_eq!(greedy_2_multipacking(&p).unwrap().size, 2);
    }

    #[test]
    fn three_points() {
        let p = PointSet::from_plane([(0, 0), (4, 1), (1, 6)]).unwrap();
        assert_eq!(max_2_multipacking_exact(&p, &ExactOptions::default()).unwrap().size, 1);
        let audit = max_degree_audit(&p).unwrap();
        assert_eq!((audit.max_degree, audit.within_bound), (2, true));
    }
}
