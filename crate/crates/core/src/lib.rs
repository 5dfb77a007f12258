//! Maximum r-multipackings of finite point sets under Euclidean distance.
//!
//! A set `M` of points is an *r-multipacking* of `P` when, for every point
//! `v` and every `1 <= s <= r`, the closed neighborhood `N_s[v]` (`v` plus its
//! `s` nearest points) contains at most `⌊(s+1)/2⌋` members of `M`.
//!
//! * [`geometry`]: exact point sets, neighbor tables, general-position audits.
//! * [`multipacking`]: the validity checker and an exhaustive oracle.
//! * [`line`]: the exact left-to-right greedy for points on a line.
//! * [`plane`]: nearest-neighbor forests for `r = 1`, the conflict graph and
//!   its exact, parameterized and greedy independent-set solvers for `r = 2`.
//! * [`instances`]: extremal fixtures, random instances and scans.
//! * [`svg`]: deterministic drawings of point sets and witnesses.

mod clock;
mod error;
mod par;

pub mod geometry;
pub mod instances;
pub mod io;
pub mod line;
pub mod multipacking;
pub mod plane;
pub mod report;
pub mod svg;

pub use error::{Error, Result};
pub use geometry::{Coordinate, Dim, NeighborTable, Point, PointSet, Tie};
pub use multipacking::{Multipacking, Violation};
pub use report::{Method, SolveReport, Stats};
