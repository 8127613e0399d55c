//! Bounds from vertex covers and separated packings of isometric subgraphs.

use crate::distance::DistMatrix;
use crate::error::{Error, Result};
use crate::geodesy::{is_isometric_subgraph, set_distance};
use crate::graph::Graph;
use crate::types::{PositionParams, VertexSet};

use super::{solve_exact, SearchOptions};

fn check_counts(parts: &[VertexSet], values: &[usize]) -> Result<()> {
    if parts.len() != values.len() {
        return Err(Error::PartValueCount { expected: parts.len(), got: values.len() });
    }
    Ok(())
}

fn check_isometric(g: &Graph, dm: &DistMatrix, parts: &[VertexSet]) -> Result<()> {
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() || !is_isometric_subgraph(g, dm, part)? {
            return Err(Error::NotIsometric(i));
        }
    }
    Ok(())
}

/// Exact values of the subgraphs induced on each part.
pub fn induced_part_values(
    g: &Graph,
    parts: &[VertexSet],
    p: PositionParams,
    opts: &SearchOptions,
) -> Result<Vec<usize>> {
    parts
        .iter()
        .map(|part| {
            let (h, _) = g.induced_subgraph(part.as_slice())?;
            Ok(solve_exact(&h, p, opts)?.value)
        })
        .collect()
}

/// Upper bound from isometric subgraphs covering every vertex: the sum of
/// their values. `part_values[i]` must be the exact value of part `i`.
pub fn upper_bound_isometric_cover(
    g: &Graph,
    dm: &DistMatrix,
    cover: &[VertexSet],
    part_values: &[usize],
) -> Result<usize> {
    check_counts(cover, part_values)?;
    check_isometric(g, dm, cover)?;
    let mut seen = vec![false; g.n()];
    for v in cover.iter().flat_map(|part| part.iter()) {
        seen[v] = true;
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::IncompleteCover(v));
    }
    Ok(part_values.iter().sum())
}

/// Lower bound from pairwise disjoint isometric subgraphs that are far
/// apart: the union of optimal sets of the parts is feasible in `g`.
///
/// Parts must be at distance at least `d` (effective). For `k = 2` they
/// must be strictly farther than `d`, since one short geodesic joining two
/// parts already carries two vertices.
pub fn lower_bound_disjoint_parts(
    g: &Graph,
    dm: &DistMatrix,
    parts: &[VertexSet],
    p: PositionParams,
    part_values: &[usize],
) -> Result<usize> {
    check_counts(parts, part_values)?;
    check_isometric(g, dm, parts)?;
    let d = p.effective_d(dm.diameter());
    let required = if p.k() == 2 { d + 1 } else { d };
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !parts[i].is_disjoint(&parts[j]) {
                return Err(Error::Overlap(i, j));
            }
            let dist = set_distance(dm, &parts[i], &parts[j]);
            // parts in different components never share a geodesic
            if dist.is_some_and(|x| x < required) {
                return Err(Error::TooClose { i, j, dist, required });
            }
        }
    }
    Ok(part_values.iter().sum())
}
