use super::ConflictGraph;
use crate::{Error, Result};

/// Visits every component from its smallest vertex. Returns the preorder and
/// parent links, or the vertex that closes a cycle.
fn traverse(graph: &ConflictGraph) -> Result<(Vec<usize>, Vec<Option<usize>>)> {
    let n = graph.len();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        stack.push(root);
        while let Some(v) = stack.pop() {
            order.push(v);
            for &u in graph.neighbors(v).iter().rev() {
                if Some(u) == parent[v] {
                    continue;
                }
                if seen[u] {
                    return Err(Error::NotAForest(u));
                }
                seen[u] = true;
                parent[u] = Some(v);
                stack.push(u);
            }
        }
    }
    Ok((order, parent))
}

pub(super) fn check_forest(graph: &ConflictGraph) -> Result<()> {
    traverse(graph).map(|_| ())
}

/// Maximum independent set of a forest by the two-state tree DP.
///
/// Each component is rooted at its smallest vertex. When including and
/// excluding a vertex tie, it is excluded.
pub fn forest_max_independent_set(graph: &ConflictGraph) -> Result<Vec<usize>> {
    let (order, parent) = traverse(graph)?;
    let n = graph.len();
    let mut with = vec![1usize; n];
    let mut without = vec![0usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            with[p] += without[v];
            without[p] += with[v].max(without[v]);
        }
    }
    let mut take = vec![false; n];
    for &v in &order {
        take[v] = match parent[v] {
            Some(p) if take[p] => false,
            _ => with[v] > without[v],
        };
    }
    Ok((0..n).filter(|&v| take[v]).collect())
}
