use super::{ConflictGraph, VertexSet};
use crate::report::{Method, SolveReport, Stats};

struct Solution<'a> {
    graph: &'a ConflictGraph,
    chosen: VertexSet,
    /// Chosen neighbors of every vertex.
    blockers: Vec<usize>,
}

impl Solution<'_> {
    fn add(&mut self, v: usize) {
        self.chosen.insert(v);
        for &u in self.graph.neighbors(v) {
            self.blockers[u] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        self.chosen.remove(v);
        for &u in self.graph.neighbors(v) {
            self.blockers[u] -= 1;
        }
    }

    fn fill_free(&mut self) {
        for v in 0..self.graph.len() {
            if !self.chosen.contains(v) && self.blockers[v] == 0 {
                self.add(v);
            }
        }
    }

    /// First `(x, u, w)` in index order where `u`, `w` are non-adjacent and
    /// blocked only by the chosen vertex `x`.
    fn find_swap(&self) -> Option<(usize, usize, usize)> {
        for x in self.chosen.iter() {
            let only_x: Vec<usize> =
                self.graph.neighbors(x).iter().copied().filter(|&u| self.blockers[u] == 1).collect();
            for (i, &u) in only_x.iter().enumerate() {
                if let Some(&w) = only_x[i + 1..].iter().find(|&&w| !self.graph.has_edge(u, w)) {
                    return Some((x, u, w));
                }
            }
        }
        None
    }
}

/// Minimum-degree greedy followed by 1-out/2-in swaps until none applies.
///
/// The greedy result is maximal, so it holds at least `n / (Δ + 1)` vertices;
/// every swap adds one more.
pub fn greedy_independent_set(graph: &ConflictGraph) -> SolveReport {
    let n = graph.len();
    let mut alive = VertexSet::full(n);
    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut sol = Solution { graph, chosen: VertexSet::empty(n), blockers: vec![0; n] };
    while let Some(v) = alive.iter().min_by_key(|&v| (degree[v], v)) {
        sol.add(v);
        let mut gone = vec![v];
        gone.extend(graph.neighbors(v).iter().copied().filter(|&u| alive.contains(u)));
        for &g in &gone {
            alive.remove(g);
        }
        for &g in &gone {
            for &u in graph.neighbors(g) {
                if alive.contains(u) {
                    degree[u] -= 1;
                }
            }
        }
    }
    let mut stats = Stats::default();
    while let Some((x, u, w)) = sol.find_swap() {
        sol.remove(x);
        sol.add(u);
        sol.add(w);
        sol.fill_free();
        stats.swaps += 1;
    }
    SolveReport::new(sol.chosen.iter().collect(), graph.kind().radius(), Method::Greedy, stats)
}
