//! Exact computation and verification of k-general d-position sets.
//!
//! A vertex set `S` of a graph is in *k-general d-position* when no geodesic
//! of length at most `d` contains `k` or more vertices of `S`. This crate
//! provides the predicate, exact solvers, closed forms for paths, cycles and
//! prisms, the extremal constructions, and supporting geodesic utilities.

pub mod distance;
pub mod error;
pub mod export;
pub mod families;
pub mod formulas;
pub mod geodesy;
pub mod graph;
pub mod monotone;
pub mod position;
pub mod solver;
pub mod spectrum;
pub mod types;

pub use distance::{diameter, distance_matrix, DistMatrix};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use position::{check_structure_general_d_position, find_violation, is_kgdp, PositionChecker, Violation};
pub use solver::{solve_bruteforce, solve_exact, Method, SearchOptions, SolveResult};
pub use types::{PositionParams, VertexSet};
