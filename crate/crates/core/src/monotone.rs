//! Monotone point sequences in the plane and monotone-geodesic labelings of
//! grid graphs.
//!
//! A finite point set is monotone when, sorted by first coordinate, its second
//! coordinates are entirely nondecreasing or entirely nonincreasing. Ties in
//! either coordinate are allowed.

use crate::distance::DistMatrix;
use crate::error::{Error, Result};
use crate::geodesy::{best_marked_geodesic, geodesic_dag};
use crate::graph::{Family, Graph};

type Point = (i64, i64);

/// Longest nondecreasing subsequence of `ys`, as positions into `ys`.
fn longest_nondecreasing(ys: &[i64]) -> Vec<usize> {
    // tails[len - 1] = position ending the best chain of that length
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; ys.len()];
    for (i, &y) in ys.iter().enumerate() {
        let slot = tails.partition_point(|&t| ys[t] <= y);
        if slot > 0 {
            prev[i] = tails[slot - 1];
        }
        if slot == tails.len() {
            tails.push(i);
        } else {
            tails[slot] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied().unwrap_or(usize::MAX);
    while cur != usize::MAX {
        out.push(cur);
        cur = prev[cur];
    }
    out.reverse();
    out
}

/// A longest monotone subset of `points`, returned as indices into `points`
/// in ascending first-coordinate order. Increasing wins ties.
pub fn longest_monotone_subsequence(points: &[Point]) -> Vec<usize> {
    let mut up: Vec<usize> = (0..points.len()).collect();
    up.sort_by_key(|&i| (points[i].0, points[i].1, i));
    let ys: Vec<i64> = up.iter().map(|&i| points[i].1).collect();
    let inc: Vec<usize> = longest_nondecreasing(&ys).into_iter().map(|p| up[p]).collect();

    let mut down: Vec<usize> = (0..points.len()).collect();
    down.sort_by_key(|&i| (points[i].0, -points[i].1, i));
    let neg: Vec<i64> = down.iter().map(|&i| -points[i].1).collect();
    let dec: Vec<usize> = longest_nondecreasing(&neg).into_iter().map(|p| down[p]).collect();

    if dec.len() > inc.len() {
        dec
    } else {
        inc
    }
}

/// Natural planar labels `(row, col)` of a grid-family graph (paths count as
/// one-column grids).
pub fn grid_labels(g: &Graph) -> Result<Vec<Point>> {
    let family = g.family_tag().ok_or(Error::NotGrid)?;
    if !matches!(family, Family::Grid { .. } | Family::Path { .. }) {
        return Err(Error::NotGrid);
    }
    Ok((0..g.n())
        .map(|v| {
            let (r, c) = family.grid_coords(v).expect("grid family");
            (r as i64, c as i64)
        })
        .collect())
}

/// Whether the vertices in `tuple` all lie on one geodesic of `g`.
pub fn on_common_geodesic(g: &Graph, dm: &DistMatrix, tuple: &[usize]) -> bool {
    // fast path: the given order is already additive
    let additive = tuple.windows(2).try_fold(0u32, |acc, w| dm.get(w[0], w[1]).map(|d| acc + d));
    if let (Some(total), Some(&first), Some(&last)) = (additive, tuple.first(), tuple.last()) {
        if dm.get(first, last) == Some(total) {
            return true;
        }
    }
    let mut marked = vec![false; g.n()];
    for &v in tuple {
        marked[v] = true;
    }
    // a covering geodesic can be trimmed to two members of the tuple
    for (i, &a) in tuple.iter().enumerate() {
        for &b in &tuple[i + 1..] {
            if let Ok(dag) = geodesic_dag(g, dm, a, b) {
                if best_marked_geodesic(&dag, &marked).0 == tuple.len() {
                    return true;
                }
            }
        }
    }
    false
}

/// Whether every monotone `k`-set of vertices (under `labels`) lies on a
/// common geodesic of `g`.
pub fn check_k_monotone_geodesic_labeling(g: &Graph, labels: &[Point], k: usize) -> Result<bool> {
    if labels.len() != g.n() {
        return Err(Error::InvalidParams("one label per vertex required".into()));
    }
    if k < 2 {
        return Err(Error::InvalidParams("k must be at least 2".into()));
    }
    let dm = DistMatrix::new(g);
    let mut ok = true;
    for descending in [false, true] {
        let key = |v: usize| {
            let (x, y) = labels[v];
            if descending {
                (x, -y)
            } else {
                (x, y)
            }
        };
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| key(v));
        let mut chain = Vec::with_capacity(k);
        extend_chains(&order, &key, 0, k, &mut chain, &mut |tuple| {
            if !on_common_geodesic(g, &dm, tuple) {
                ok = false;
            }
            ok
        });
        if !ok {
            break;
        }
    }
    Ok(ok)
}

/// Depth-first enumeration of all `k`-chains in `order` with nondecreasing
/// second key. `visit` returns false to stop.
fn extend_chains(
    order: &[usize],
    key: &dyn Fn(usize) -> Point,
    from: usize,
    k: usize,
    chain: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if chain.len() == k {
        return visit(chain);
    }
    for pos in from..order.len() {
        let v = order[pos];
        if chain.last().is_some_and(|&last| key(last).1 > key(v).1) {
            continue;
        }
        chain.push(v);
        let keep_going = extend_chains(order, key, pos + 1, k, chain, visit);
        chain.pop();
        if !keep_going {
            return false;
        }
    }
    true
}
