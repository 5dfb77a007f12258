//! Independent set of a given size by closed-neighborhood branching.
//!
//! Any maximal independent set meets `N[v]` for every vertex `v`, so an
//! independent set of size `k` exists iff for some `u ∈ N[v]` the graph minus
//! `N[u]` has one of size `k - 1`. With maximum degree `Δ` the tree has at most
//! `(Δ+1)^k` leaves.

use super::exact::BranchAndBound;
use super::{ConflictGraph, VertexSet};
use crate::report::{Method, SolveReport, Stats};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FptOutcome {
    pub k: usize,
    /// `k` pairwise non-adjacent vertices, sorted, or `None` if none exist.
    pub witness: Option<Vec<usize>>,
    /// `nodes` counts branching nodes: calls with `k >= 1` that fan out.
    pub stats: Stats,
}

impl FptOutcome {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }

    pub fn into_report(self, r: usize) -> Option<SolveReport> {
        let stats = self.stats;
        self.witness.map(|w| SolveReport::new(w, r, Method::Fpt, stats))
    }
}

struct Brancher<'a> {
    adj: &'a [VertexSet],
    bound: Option<BranchAndBound<'a>>,
    nodes: u64,
}

impl Brancher<'_> {
    fn branch(&mut self, cand: &VertexSet, k: usize) -> Option<Vec<usize>> {
        if k == 0 {
            return Some(Vec::new());
        }
        if cand.count() < k {
            return None;
        }
        if let Some(bnb) = &self.bound {
            if bnb.clique_cover_bound(cand) < k {
                return None;
            }
        }
        self.nodes += 1;
        let v = cand.iter().map(|v| (self.adj[v].count_and(cand), v)).min().map(|(_, v)| v).expect("cand is non-empty");
        let mut closed = self.adj[v].and(cand);
        closed.insert(v);
        for u in closed.iter() {
            let mut removed = self.adj[u].clone();
            removed.insert(u);
            if let Some(mut rest) = self.branch(&cand.and_not(&removed), k - 1) {
                rest.push(u);
                return Some(rest);
            }
        }
        None
    }
}

/// Searches for an independent set of exactly `k` vertices, pruning with the
/// clique-cover bound.
pub fn fpt_independent_set(graph: &ConflictGraph, k: usize) -> Result<FptOutcome> {
    fpt_independent_set_with(graph, k, true)
}

/// As [`fpt_independent_set`]; `prune = false` runs the bare branching.
pub fn fpt_independent_set_with(graph: &ConflictGraph, k: usize, prune: bool) -> Result<FptOutcome> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let adj = graph.neighbor_sets();
    let mut brancher = Brancher { adj: &adj, bound: prune.then(|| BranchAndBound::new(&adj, None)), nodes: 0 };
    let witness = brancher.branch(&VertexSet::full(graph.len()), k).map(|mut w| {
        w.sort_unstable();
        w
    });
    Ok(FptOutcome { k, witness, stats: Stats { nodes: brancher.nodes, ..Stats::default() } })
}
