//! Exact computation of the largest k-general d-position set.
//!
//! Two independent searches are provided: [`solve_bruteforce`], a plain
//! include-first walk over feasible sets that re-checks the full predicate,
//! and [`solve_exact`], a bitset branch-and-bound with incremental
//! feasibility, forward checking, a geodesic-cover bound and optional warm
//! starts from the known constructions.

mod bnb;
mod bounds;
mod bruteforce;
mod lattice;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::types::{PositionParams, VertexSet};

pub use bnb::{solve_exact, warm_start_set, MAX_EXACT_VERTICES};
pub use bounds::{induced_part_values, lower_bound_disjoint_parts, upper_bound_isometric_cover};
pub use bruteforce::{solve_bruteforce, solve_bruteforce_with_cutoff, DEFAULT_BRUTE_CUTOFF};
pub use lattice::{lattice_table, lattice_table_with, LatticeTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    BranchAndBound,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::BranchAndBound => "branch_and_bound",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "branch_and_bound" | "bnb" | "exact" => Ok(Method::BranchAndBound),
            other => Err(Error::InvalidParams(format!("unknown method `{other}`"))),
        }
    }
}

/// An optimum together with how it was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub nodes_explored: u64,
    pub k: usize,
    pub requested_d: u32,
    pub effective_d: u32,
}

/// Limits and switches for [`solve_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Worker threads; 0 and 1 both mean a single-threaded search.
    pub workers: usize,
    pub warm_start: bool,
    /// Re-run the whole predicate on every extension instead of the
    /// incremental check. Slow; for debugging.
    pub full_check: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { node_budget: None, time_budget: None, workers: 1, warm_start: true, full_check: false }
    }
}

/// Picks a method by graph size: brute force up to 16 vertices.
pub fn default_method(g: &Graph) -> Method {
    if g.n() <= 16 {
        Method::Brute
    } else {
        Method::BranchAndBound
    }
}

pub fn solve(g: &Graph, p: PositionParams, method: Method, opts: &SearchOptions) -> Result<SolveResult> {
    match method {
        Method::Brute => solve_bruteforce_with_cutoff(g, p, DEFAULT_BRUTE_CUTOFF.max(g.n())),
        Method::BranchAndBound => solve_exact(g, p, opts),
    }
}
