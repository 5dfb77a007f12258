//! Exact maximum independent set by branch and bound.
//!
//! Each node splits the candidate set into connected components and solves
//! them separately, takes a simplicial vertex outright when one exists, and
//! otherwise branches on a vertex of maximum degree (in, then out). A greedy
//! clique cover bounds every node from above.

use super::{ConflictGraph, VertexSet};
use crate::report::{Method, SolveReport, Stats};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct ExactOptions {
    /// Abort after this many search nodes.
    pub node_budget: Option<u64>,
    /// Re-derive the lexicographically smallest maximum set after the search.
    pub canonical: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { node_budget: Some(50_000_000), canonical: true }
    }
}

pub(super) struct BranchAndBound<'a> {
    adj: &'a [VertexSet],
    n: usize,
    pub nodes: u64,
    budget: Option<u64>,
}

impl<'a> BranchAndBound<'a> {
    pub fn new(adj: &'a [VertexSet], budget: Option<u64>) -> Self {
        BranchAndBound { adj, n: adj.len(), nodes: 0, budget }
    }

    fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Number of cliques in a greedy cover of `cand`; bounds `α(cand)`.
    pub fn clique_cover_bound(&self, cand: &VertexSet) -> usize {
        // Common neighborhood of each clique built so far.
        let mut commons: Vec<VertexSet> = Vec::new();
        for v in cand.iter() {
            match commons.iter_mut().find(|c| c.contains(v)) {
                Some(common) => common.and_assign(&self.adj[v]),
                None => commons.push(self.adj[v].and(cand)),
            }
        }
        commons.len()
    }

    fn components(&self, cand: &VertexSet) -> Vec<VertexSet> {
        let mut rest = cand.clone();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut frontier = vec![start];
            comp.insert(start);
            rest.remove(start);
            while let Some(v) = frontier.pop() {
                for u in self.adj[v].and(&rest).iter() {
                    rest.remove(u);
                    comp.insert(u);
                    frontier.push(u);
                }
            }
            out.push(comp);
        }
        out
    }

    fn simplicial(&self, cand: &VertexSet) -> Option<usize> {
        cand.iter().find(|&v| {
            let nb = self.adj[v].and(cand);
            let clique = nb.iter().all(|u| {
                let mut others = nb.clone();
                others.remove(u);
                others.is_subset(&self.adj[u])
            });
            clique
        })
    }

    /// A maximum independent set of `cand` when `α(cand) >= need`, else `None`.
    pub fn solve(&mut self, cand: &VertexSet, need: usize) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if let Some(budget) = self.budget {
            if self.nodes > budget {
                return Err(Error::BudgetExceeded { budget });
            }
        }
        let size = cand.count();
        if size < need {
            return Ok(None);
        }
        if size == 0 {
            return Ok(Some(Vec::new()));
        }

        let comps = self.components(cand);
        if comps.len() > 1 {
            let bounds: Vec<usize> = comps.iter().map(|c| self.clique_cover_bound(c)).collect();
            let mut slack: usize = bounds.iter().sum();
            if slack < need {
                return Ok(None);
            }
            let mut total = Vec::new();
            for (comp, ub) in comps.iter().zip(&bounds) {
                slack -= ub;
                let comp_need = need.saturating_sub(total.len() + slack);
                match self.solve(comp, comp_need)? {
                    Some(part) => total.extend(part),
                    None => return Ok(None),
                }
            }
            return Ok((total.len() >= need).then_some(total));
        }

        if self.clique_cover_bound(cand) < need {
            return Ok(None);
        }
        if let Some(v) = self.simplicial(cand) {
            let rest = cand.and_not(&self.closed(v));
            return Ok(self.solve(&rest, need.saturating_sub(1))?.map(|mut s| {
                s.push(v);
                s
            }));
        }

        let v = cand
            .iter()
            .map(|v| (self.adj[v].count_and(cand), v))
            .fold((0, usize::MAX), |best, (d, v)| if d > best.0 { (d, v) } else { best })
            .1;
        let mut best = None;
        let mut need = need;
        let with_v = cand.and_not(&self.closed(v));
        if let Some(mut s) = self.solve(&with_v, need.saturating_sub(1))? {
            s.push(v);
            need = s.len() + 1;
            best = Some(s);
        }
        let mut without_v = cand.clone();
        without_v.remove(v);
        if let Some(s) = self.solve(&without_v, need)? {
            best = Some(s);
        }
        Ok(best)
    }

    /// The lexicographically smallest independent set of size `alpha`,
    /// fixing vertices in increasing order.
    pub fn canonical(&mut self, alpha: usize) -> Result<Vec<usize>> {
        let mut avail = VertexSet::full(self.n);
        let mut chosen = Vec::with_capacity(alpha);
        let mut need = alpha;
        for v in 0..self.n {
            if need == 0 {
                break;
            }
            if !avail.contains(v) {
                continue;
            }
            let rest = avail.and_not(&self.closed(v));
            if self.solve(&rest, need - 1)?.is_some() {
                chosen.push(v);
                avail = rest;
                need -= 1;
            } else {
                avail.remove(v);
            }
        }
        Ok(chosen)
    }
}

/// Exact maximum independent set with default options.
pub fn exact_max_is(graph: &ConflictGraph) -> Result<SolveReport> {
    exact_max_is_with(graph, &ExactOptions::default())
}

pub fn exact_max_is_with(graph: &ConflictGraph, options: &ExactOptions) -> Result<SolveReport> {
    let adj = graph.neighbor_sets();
    let mut bnb = BranchAndBound::new(&adj, options.node_budget);
    let all = VertexSet::full(graph.len());
    let best = bnb.solve(&all, 0)?.expect("need 0 always succeeds");
    let witness = if options.canonical { bnb.canonical(best.len())? } else { best };
    let stats = Stats { nodes: bnb.nodes, ..Stats::default() };
    Ok(SolveReport::new(witness, graph.kind().radius(), Method::Exact, stats))
}
