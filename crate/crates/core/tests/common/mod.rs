#![allow(dead_code)]

use gpkd_core::geodesy::enumerate_geodesics;
use gpkd_core::{DistMatrix, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Published values for `P_14`: row `d - 1`, nontrivial prefix for
/// `k = 2, 3, ...`; the remaining entries up to `k = 15` are 14.
pub const PATH_14: [&[usize]; 13] = [
    &[7],
    &[5, 10],
    &[4, 8, 11],
    &[3, 6, 9, 12],
    &[3, 6, 8, 10, 12],
    &[2, 4, 6, 8, 10, 12],
    &[2, 4, 6, 8, 10, 12, 13],
    &[2, 4, 6, 8, 10, 11, 12, 13],
    &[2, 4, 6, 8, 9, 10, 11, 12, 13],
    &[2, 4, 6, 7, 8, 9, 10, 11, 12, 13],
    &[2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13],
    &[2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13],
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13],
];

/// Published values for `C_14`, `d = 1..=7`, `k = 2..=9`.
pub const CYCLE_14: [[usize; 8]; 7] = [
    [7, 14, 14, 14, 14, 14, 14, 14],
    [4, 9, 14, 14, 14, 14, 14, 14],
    [3, 7, 10, 14, 14, 14, 14, 14],
    [2, 5, 8, 11, 14, 14, 14, 14],
    [2, 4, 7, 9, 11, 14, 14, 14],
    [2, 4, 6, 8, 10, 12, 14, 14],
    [1, 3, 5, 7, 8, 10, 12, 14],
];

/// Full `P_14` table, `[d - 1][k - 2]` for `k <= 15`.
pub fn path_14_table() -> Vec<Vec<usize>> {
    PATH_14.iter().map(|row| (2..=15).map(|k| row.get(k - 2).copied().unwrap_or(14)).collect()).collect()
}

pub fn cycle_14_table() -> Vec<Vec<usize>> {
    CYCLE_14.iter().map(|row| row.to_vec()).collect()
}

/// Random spanning tree plus independent extra edges, with shuffled labels.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, extra: f64) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((labels[i], labels[j]));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(extra) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Every connected labeled graph on `n` vertices.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
        .filter(|g| DistMatrix::new(g).is_connected())
        .collect()
}

pub fn subset(mask: u64) -> VertexSet {
    VertexSet::from_mask(mask)
}

/// Every geodesic of length at most `d` between reachable pairs, by
/// explicit enumeration.
pub fn short_geodesics(g: &Graph, dm: &DistMatrix, d: u32) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u..g.n() {
            if dm.within(u, v, d).is_some() {
                out.extend(enumerate_geodesics(g, dm, u, v, 1_000_000).unwrap().into_iter().map(|w| w.vertices));
            }
        }
    }
    out
}

/// The predicate straight from the definition, over enumerated geodesics.
pub fn naive_is_kgdp(geodesics: &[Vec<usize>], s: &VertexSet, k: usize) -> bool {
    geodesics.iter().all(|p| p.iter().filter(|&&v| s.contains(v)).count() < k)
}
