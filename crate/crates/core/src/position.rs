//! The k-general d-position predicate.
//!
//! A set `S` fails the predicate exactly when some geodesic of length at most
//! `d` carries `k` or more vertices of `S`. Trimming such a geodesic to its
//! first and last marked vertex keeps it short and keeps the count, so only
//! geodesics whose endpoints are both in `S` need to be examined. For each
//! source `a ∈ S` one layered DP over the BFS order from `a` gives, for every
//! `y` within distance `d`, the largest number of marked vertices on an
//! `a`-`y` geodesic.

use serde::Serialize;

use crate::distance::DistMatrix;
use crate::error::{Error, Result};
use crate::geodesy::{are_parallel, set_distance, GeodesicWitness};
use crate::graph::Graph;
use crate::types::{PositionParams, VertexSet};

/// A short geodesic carrying at least `k` vertices of the set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub witness: GeodesicWitness,
}

/// Reusable scratch space for repeated predicate evaluations on one graph.
pub struct PositionChecker<'g> {
    g: &'g Graph,
    dm: &'g DistMatrix,
    k: usize,
    d: u32,
    marked: Vec<bool>,
    value: Vec<usize>,
    back: Vec<usize>,
}

impl<'g> PositionChecker<'g> {
    /// `d` is clamped to the diameter of `g`.
    pub fn new(g: &'g Graph, dm: &'g DistMatrix, p: PositionParams) -> Self {
        let n = g.n();
        PositionChecker {
            g,
            dm,
            k: p.k(),
            d: p.effective_d(dm.diameter()),
            marked: vec![false; n],
            value: vec![0; n],
            back: vec![usize::MAX; n],
        }
    }

    pub fn effective_d(&self) -> u32 {
        self.d
    }

    /// Layered DP from `a`; returns the first vertex whose best geodesic from
    /// `a` carries `k` marked vertices.
    fn scan(&mut self, a: usize, track: bool) -> Option<usize> {
        let (g, dm, d, k) = (self.g, self.dm, self.d, self.k);
        for &y in dm.bfs_order(a) {
            let dy = dm.get(a, y).unwrap();
            if dy > d {
                break;
            }
            let mut best = 0;
            let mut from = usize::MAX;
            if dy > 0 {
                for &x in g.neighbors(y) {
                    if dm.get(a, x) == Some(dy - 1) && self.value[x] > best {
                        best = self.value[x];
                        from = x;
                    }
                }
            }
            if track {
                if from == usize::MAX && dy > 0 {
                    // unmarked prefix: any predecessor will do
                    from = g
                        .neighbors(y)
                        .iter()
                        .copied()
                        .find(|&x| dm.get(a, x) == Some(dy - 1))
                        .unwrap();
                }
                self.back[y] = from;
            }
            self.value[y] = best + usize::from(self.marked[y]);
            if self.value[y] >= k {
                return Some(y);
            }
        }
        None
    }

    fn load(&mut self, s: &[usize]) -> Result<()> {
        let n = self.g.n();
        self.marked.iter_mut().for_each(|m| *m = false);
        for &v in s {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            self.marked[v] = true;
        }
        Ok(())
    }

    pub fn is_valid(&mut self, s: &[usize]) -> Result<bool> {
        self.load(s)?;
        if s.len() < self.k {
            return Ok(true);
        }
        Ok(s.iter().all(|&a| self.scan(a, false).is_none()))
    }

    pub fn violation(&mut self, s: &[usize]) -> Result<Option<Violation>> {
        self.load(s)?;
        if s.len() < self.k {
            return Ok(None);
        }
        for &a in s {
            if let Some(y) = self.scan(a, true) {
                let mut path = vec![y];
                while let Some(&x) = path.last() {
                    if x == a {
                        break;
                    }
                    path.push(self.back[x]);
                }
                path.reverse();
                let witness = GeodesicWitness {
                    endpoints: (a, y),
                    length: (path.len() - 1) as u32,
                    count_in_s: path.iter().filter(|&&v| self.marked[v]).count(),
                    vertices: path,
                };
                return Ok(Some(Violation { witness }));
            }
        }
        Ok(None)
    }
}

/// Whether `s` is a k-general d-position set of `g` (with `d` clamped to
/// the diameter).
pub fn is_kgdp(g: &Graph, dm: &DistMatrix, s: &VertexSet, p: PositionParams) -> Result<bool> {
    PositionChecker::new(g, dm, p).is_valid(s.as_slice())
}

/// A geodesic of length at most `d` with `k` vertices of `s`, if any exists.
pub fn find_violation(
    g: &Graph,
    dm: &DistMatrix,
    s: &VertexSet,
    p: PositionParams,
) -> Result<Option<Violation>> {
    PositionChecker::new(g, dm, p).violation(s.as_slice())
}

/// Decides general d-position (`k = 3`) through the clique characterization:
/// `G[S]` is a disjoint union of cliques, non-parallel cliques are at
/// distance at least `d`, and any three cliques with additive distances have
/// outer distance above `d`. Requires a connected graph and `d >= 2`; `d` is
/// clamped to the diameter like the predicate.
pub fn check_structure_general_d_position(
    g: &Graph,
    dm: &DistMatrix,
    s: &VertexSet,
    d: u32,
) -> Result<bool> {
    if d < 2 {
        return Err(Error::InvalidParams("the clique characterization needs d >= 2".into()));
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let inside = s.indicator(g.n())?;
    let d = d.min(dm.diameter().max(1));

    // components of G[S], each of which has to be complete
    let mut comp = vec![usize::MAX; g.n()];
    let mut cliques: Vec<VertexSet> = Vec::new();
    for start in s.iter() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = cliques.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &y in g.neighbors(x) {
                if inside[y] && comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                }
            }
            i += 1;
        }
        let clique: VertexSet = members.into_iter().collect();
        let complete = clique
            .iter()
            .all(|x| clique.iter().all(|y| x == y || g.has_edge(x, y)));
        if !complete {
            return Ok(false);
        }
        cliques.push(clique);
    }

    let m = cliques.len();
    let mut dist = vec![vec![0u32; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let dij = set_distance(dm, &cliques[i], &cliques[j]).expect("connected graph");
            dist[i][j] = dij;
            dist[j][i] = dij;
            if !are_parallel(dm, &cliques[i], &cliques[j])? && dij < d {
                return Ok(false);
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                if i == j || j == l || i == l {
                    continue;
                }
                if dist[i][j] + dist[j][l] == dist[i][l] && dist[i][l] <= d {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
