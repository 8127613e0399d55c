use crate::distance::DistMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::position::PositionChecker;
use crate::types::{PositionParams, VertexSet};

use super::{Method, SolveResult};

pub const DEFAULT_BRUTE_CUTOFF: usize = 20;

/// Exhaustive search with the default vertex cutoff.
pub fn solve_bruteforce(g: &Graph, p: PositionParams) -> Result<SolveResult> {
    solve_bruteforce_with_cutoff(g, p, DEFAULT_BRUTE_CUTOFF)
}

/// Exhaustive include-first walk over feasible sets. Infeasible sets are
/// never extended, and a branch is dropped once even taking every remaining
/// vertex cannot beat the incumbent.
pub fn solve_bruteforce_with_cutoff(g: &Graph, p: PositionParams, cutoff: usize) -> Result<SolveResult> {
    let n = g.n();
    if n > cutoff {
        return Err(Error::CutoffExceeded { n, cutoff });
    }
    let dm = DistMatrix::new(g);
    let mut walk = Walk {
        n,
        checker: PositionChecker::new(g, &dm, p),
        current: Vec::with_capacity(n),
        best: Vec::new(),
        nodes: 0,
    };
    walk.visit(0);
    let effective_d = walk.checker.effective_d();
    Ok(SolveResult {
        value: walk.best.len(),
        witness: VertexSet::from(walk.best),
        method: Method::Brute,
        nodes_explored: walk.nodes,
        k: p.k(),
        requested_d: p.d(),
        effective_d,
    })
}

struct Walk<'g> {
    n: usize,
    checker: PositionChecker<'g>,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl Walk<'_> {
    fn visit(&mut self, next: usize) {
        self.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best.clone_from(&self.current);
        }
        if next == self.n || self.current.len() + (self.n - next) <= self.best.len() {
            return;
        }
        self.current.push(next);
        if self.checker.is_valid(&self.current).expect("labels in range") {
            self.visit(next + 1);
        }
        self.current.pop();
        self.visit(next + 1);
    }
}
