//! Shortest-path DAGs between vertex pairs and the subgraph relations built
//! on top of them (isometric, convex, parallel).
//!
//! The DAG from `u` to `v` contains exactly the vertices `x` with
//! `d(u,x) + d(x,v) = d(u,v)` and the edges that advance one BFS layer from
//! `u`. Every `u`-`v` path in it is a geodesic and vice versa, so extremal
//! questions about geodesics reduce to longest-path DP over the layers.

use serde::Serialize;

use crate::distance::DistMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::types::VertexSet;

/// Default cap for [`enumerate_geodesics`].
pub const DEFAULT_GEODESIC_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct GeodesicDag {
    source: usize,
    sink: usize,
    /// `layers[i]` holds the DAG vertices at distance `i` from the source.
    layers: Vec<Vec<usize>>,
    /// Predecessors inside the DAG, indexed by vertex label.
    preds: Vec<Vec<usize>>,
    member: Vec<bool>,
}

impl GeodesicDag {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn length(&self) -> u32 {
        (self.layers.len() - 1) as u32
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers.iter().flatten().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn predecessors(&self, x: usize) -> &[usize] {
        &self.preds[x]
    }

    /// DAG edges `(x, y)` with `y` one layer further from the source.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .flat_map(|y| self.preds[y].iter().map(move |&x| (x, y)))
            .collect()
    }
}

/// One explicit geodesic with its endpoints and marked-vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodesicWitness {
    pub endpoints: (usize, usize),
    pub vertices: Vec<usize>,
    pub length: u32,
    pub count_in_s: usize,
}

impl GeodesicWitness {
    fn from_path(vertices: Vec<usize>) -> Self {
        GeodesicWitness {
            endpoints: (vertices[0], *vertices.last().expect("nonempty path")),
            length: (vertices.len() - 1) as u32,
            vertices,
            count_in_s: 0,
        }
    }

    /// Recounts `count_in_s` against `s`.
    pub fn with_marks(mut self, s: &VertexSet) -> Self {
        self.count_in_s = self.vertices.iter().filter(|&&v| s.contains(v)).count();
        self
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

pub fn geodesic_dag(g: &Graph, dm: &DistMatrix, u: usize, v: usize) -> Result<GeodesicDag> {
    let n = g.n();
    check_vertex(u, n)?;
    check_vertex(v, n)?;
    let len = dm.get(u, v).ok_or(Error::Unreachable(u, v))? as usize;
    let mut layers = vec![Vec::new(); len + 1];
    let mut member = vec![false; n];
    for &x in dm.bfs_order(u) {
        if dm.between(u, x, v) {
            layers[dm.get(u, x).unwrap() as usize].push(x);
            member[x] = true;
        }
    }
    let mut preds = vec![Vec::new(); n];
    for (i, layer) in layers.iter().enumerate().skip(1) {
        for &y in layer {
            preds[y] = g
                .neighbors(y)
                .iter()
                .copied()
                .filter(|&x| member[x] && dm.get(u, x) == Some(i as u32 - 1))
                .collect();
        }
    }
    Ok(GeodesicDag { source: u, sink: v, layers, preds, member })
}

/// Longest-path DP over the DAG layers with weight 1 on members of `marked`.
/// Returns the best count and one geodesic achieving it.
pub fn best_marked_geodesic(dag: &GeodesicDag, marked: &[bool]) -> (usize, Vec<usize>) {
    let n = dag.member.len();
    let mut value = vec![0usize; n];
    let mut back = vec![usize::MAX; n];
    for layer in &dag.layers {
        for &y in layer {
            let (best, from) = dag.preds[y]
                .iter()
                .map(|&x| (value[x], x))
                .max_by_key(|&(val, x)| (val, std::cmp::Reverse(x)))
                .unwrap_or((0, usize::MAX));
            value[y] = best + usize::from(marked[y]);
            back[y] = from;
        }
    }
    let mut path = vec![dag.sink];
    while let Some(&x) = path.last() {
        match back[x] {
            usize::MAX => break,
            p => path.push(p),
        }
    }
    path.reverse();
    (value[dag.sink], path)
}

/// Maximum of `|S ∩ V(g)|` over all geodesics `g` of the DAG.
pub fn max_marked_on_geodesic(dag: &GeodesicDag, s: &VertexSet) -> usize {
    let n = dag.member.len();
    let mut marked = vec![false; n];
    for v in s.iter().filter(|&v| v < n) {
        marked[v] = true;
    }
    best_marked_geodesic(dag, &marked).0
}

/// Every `u`-`v` geodesic in DFS order (smaller labels first), or an error
/// once more than `limit` exist.
pub fn enumerate_geodesics(
    g: &Graph,
    dm: &DistMatrix,
    u: usize,
    v: usize,
    limit: usize,
) -> Result<Vec<GeodesicWitness>> {
    let dag = geodesic_dag(g, dm, u, v)?;
    let mut members: Vec<usize> = dag.vertices().collect();
    members.sort_unstable();
    let mut succ = vec![Vec::new(); g.n()];
    for &y in &members {
        for &x in dag.predecessors(y) {
            succ[x].push(y);
        }
    }
    let mut out = Vec::new();
    // (vertex, index of the next successor to try)
    let mut stack = vec![(u, 0usize)];
    while let Some(&(x, next)) = stack.last() {
        if x == v {
            if out.len() == limit {
                return Err(Error::GeodesicLimit { u, v, limit });
            }
            out.push(GeodesicWitness::from_path(stack.iter().map(|&(y, _)| y).collect()));
            stack.pop();
        } else if let Some(&y) = succ[x].get(next) {
            if let Some(top) = stack.last_mut() {
                top.1 += 1;
            }
            stack.push((y, 0));
        } else {
            stack.pop();
        }
    }
    Ok(out)
}

/// Whether the subgraph induced on `x` preserves all pairwise distances.
pub fn is_isometric_subgraph(g: &Graph, dm: &DistMatrix, x: &VertexSet) -> Result<bool> {
    if x.is_empty() {
        return Ok(true);
    }
    let (h, map) = g.induced_subgraph(x.as_slice())?;
    let hd = DistMatrix::new(&h);
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if hd.get(i, j) != dm.get(map[i], map[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `x` contains every vertex of every geodesic between its members.
pub fn is_convex_subgraph(g: &Graph, dm: &DistMatrix, x: &VertexSet) -> Result<bool> {
    let inside = x.indicator(g.n())?;
    let members = x.as_slice();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if dm.get(u, v).is_none() {
                continue;
            }
            if (0..g.n()).any(|w| !inside[w] && dm.between(u, w, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `min d(a, b)` over `a ∈ x1`, `b ∈ x2`, or `None` when no pair is connected.
pub fn set_distance(dm: &DistMatrix, x1: &VertexSet, x2: &VertexSet) -> Option<u32> {
    x1.iter().flat_map(|a| x2.iter().filter_map(move |b| dm.get(a, b))).min()
}

/// Whether every cross distance between `x1` and `x2` equals the set distance.
pub fn are_parallel(dm: &DistMatrix, x1: &VertexSet, x2: &VertexSet) -> Result<bool> {
    if x1.is_empty() || x2.is_empty() || !x1.is_disjoint(x2) {
        return Err(Error::BadParallelSides);
    }
    for v in x1.iter().chain(x2.iter()) {
        check_vertex(v, dm.n())?;
    }
    let first = dm.get(x1.as_slice()[0], x2.as_slice()[0]);
    Ok(x1.iter().all(|a| x2.iter().all(|b| dm.get(a, b) == first)))
}
