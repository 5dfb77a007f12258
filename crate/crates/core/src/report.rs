use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Left-to-right greedy on the line.
    Greedy1d,
    /// Independent set of the nearest-neighbor forest.
    Nng,
    /// Branch and bound on the conflict graph.
    Exact,
    /// Closed-neighborhood branching for a fixed target size.
    Fpt,
    /// Minimum-degree greedy with swap local search.
    Greedy,
    /// Exhaustive subset search.
    Brute,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Greedy1d => "greedy1d",
            Method::Nng => "nng",
            Method::Exact => "exact",
            Method::Fpt => "fpt",
            Method::Greedy => "greedy",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Search nodes explored (branch and bound, branching, subset search).
    pub nodes: u64,
    /// Calls to the multipacking checker.
    pub checks: u64,
    /// Improving swaps applied by local search.
    pub swaps: u64,
    /// Wall time; not serialized, so reports stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Output of every solver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub size: usize,
    pub indices: Vec<usize>,
    pub r: usize,
    pub method: Method,
    pub stats: Stats,
}

impl SolveReport {
    pub fn new(mut indices: Vec<usize>, r: usize, method: Method, stats: Stats) -> Self {
        indices.sort_unstable();
        indices.dedup();
        SolveReport { size: indices.len(), indices, r, method, stats }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
