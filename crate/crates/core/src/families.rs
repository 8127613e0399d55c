//! Extremal vertex-set constructions for paths, cycles and grids.
//!
//! All sets use the crate's 0-based labels: path vertex `i` (1-based) is
//! `i - 1`, and prism vertex `(i, j)` of `P_n □ P_2` (1-based column `i`,
//! row `j`) is `(i - 1) * 2 + (j - 1)`.

use log::warn;

use crate::error::{Error, Result};
use crate::types::VertexSet;

/// `{ ⌊(n·i + r) / m⌋ : 0 <= i < m }`, the canonical maximally even
/// `m`-subset of `C_n` rotated by `r`.
pub fn j_set(n: usize, m: usize, r: usize) -> Result<VertexSet> {
    if m == 0 || m > n || r >= n {
        return Err(Error::InvalidParams(format!(
            "j_set needs 1 <= m <= n and 0 <= r < n (n={n}, m={m}, r={r})"
        )));
    }
    Ok((0..m).map(|i| (n * i + r) / m).collect())
}

/// Blocks of `k - 1` consecutive path vertices every `d + 1` vertices,
/// restricted to `P_n`.
pub fn path_block_set(k: usize, d: usize, n: usize) -> Result<VertexSet> {
    if k < 2 || k - 1 > d {
        return Err(Error::InvalidParams(format!("path blocks need 2 <= k <= d + 1 (k={k}, d={d})")));
    }
    Ok((0..n).filter(|v| v % (d + 1) < k - 1).collect())
}

fn prism_vertex(column: usize, row: usize) -> usize {
    (column - 1) * 2 + (row - 1)
}

/// Zig-zag blocks of `2k - 3` columns starting every `d` columns. In block
/// `s`, the `j`-th column of the block (1-based) holds the vertex in row 2
/// when `j + s` is even and in row 1 otherwise, so consecutive blocks start
/// on opposite rows.
pub fn thin_grid_a(k: usize, d: usize, n: usize) -> Result<VertexSet> {
    if k < 2 || d + 3 < 2 * k {
        return Err(Error::InvalidParams(format!("A construction needs k >= 2, d >= 2k - 3 (k={k}, d={d})")));
    }
    let width = 2 * k - 3;
    let mut out = VertexSet::new();
    for s in 0..=n / d {
        for i in d * s + 1..=(d * s + width).min(n) {
            let row = if (i - d * s + s).is_multiple_of(2) { 2 } else { 1 };
            out.insert(prism_vertex(i, row));
        }
    }
    Ok(out)
}

/// Full-height blocks of `k - 2` columns starting every `d` columns. Empty
/// for `k = 2`.
pub fn thin_grid_b(k: usize, d: usize, n: usize) -> Result<VertexSet> {
    if k < 2 || d + 2 < k || d == 0 {
        return Err(Error::InvalidParams(format!("B construction needs k >= 2, d >= max(1, k - 2) (k={k}, d={d})")));
    }
    if k == 2 {
        warn!("B construction with k = 2 has empty blocks");
        return Ok(VertexSet::new());
    }
    let mut out = VertexSet::new();
    for s in 0..=n / d {
        for i in d * s + 1..=(d * s + k - 2).min(n) {
            out.insert(prism_vertex(i, 1));
            out.insert(prism_vertex(i, 2));
        }
    }
    Ok(out)
}

/// Grid points within L1 distance `r` of `center` whose distance has the
/// parity of `r`, as labels of the `rows x cols` grid (`row * cols + col`).
pub fn diamond_set(r: usize, center: (usize, usize), rows: usize, cols: usize) -> Result<VertexSet> {
    let (cr, cc) = center;
    if cr < r || cc < r || cr + r >= rows || cc + r >= cols {
        return Err(Error::InvalidParams(format!(
            "diamond of radius {r} around {center:?} leaves the {rows}x{cols} grid"
        )));
    }
    let mut out = VertexSet::new();
    for row in cr - r..=cr + r {
        for col in cc - r..=cc + r {
            let dist = row.abs_diff(cr) + col.abs_diff(cc);
            if dist <= r && dist % 2 == r % 2 {
                out.insert(row * cols + col);
            }
        }
    }
    Ok(out)
}

/// Center used for the `(k - 1)^2` construction in `P_{2k-3} □ P_{2k-3}`.
pub fn diamond_center(k: usize) -> (usize, usize) {
    let c = (2 * k - 3).div_ceil(2) - 1;
    (c, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_sets() {
        assert_eq!(j_set(16, 5, 0).unwrap().as_slice(), &[0, 3, 6, 9, 12]);
        assert_eq!(j_set(9, 9, 0).unwrap(), (0..9).collect());
        assert_eq!(j_set(8, 4, 0).unwrap().as_slice(), &[0, 2, 4, 6]);
        assert_eq!(j_set(16, 5, 3).unwrap().as_slice(), &[0, 3, 7, 10, 13]);
        assert!(j_set(5, 6, 0).is_err());
        assert!(j_set(5, 0, 0).is_err());
        assert!(j_set(5, 2, 5).is_err());
    }

    #[test]
    fn path_blocks() {
        assert_eq!(path_block_set(3, 2, 14).unwrap().len(), 10);
        let alt = path_block_set(2, 1, 14).unwrap();
        assert_eq!(alt.as_slice(), &[0, 2, 4, 6, 8, 10, 12]);
        assert_eq!(path_block_set(4, 5, 2).unwrap().as_slice(), &[0, 1]);
        assert!(path_block_set(5, 3, 10).is_err());
        for n in 1..40 {
            for k in 2..8 {
                for d in k - 1..12 {
                    let len = path_block_set(k, d, n).unwrap().len();
                    assert_eq!(len, (k - 1) * (n / (d + 1)) + (n % (d + 1)).min(k - 1));
                }
            }
        }
    }

    #[test]
    fn thin_grid_a_pattern() {
        let a = thin_grid_a(5, 9, 22).unwrap();
        assert_eq!(a.len(), 18);
        // first block, columns 1..=7: rows 1,2,1,2,...
        let first: Vec<_> = a.iter().filter(|&v| v < 14).collect();
        assert_eq!(first, vec![0, 3, 4, 7, 8, 11, 12]);
        // second block starts on row 2: column 10 is labels 18, 19
        assert!(a.contains(19) && !a.contains(18));
        // k = 2: one vertex per block of d columns, alternating rows
        assert_eq!(thin_grid_a(2, 1, 5).unwrap().as_slice(), &[0, 3, 4, 7, 8]);
        assert_eq!(thin_grid_a(2, 3, 7).unwrap().len(), 3);
        assert_eq!(thin_grid_a(4, 8, 3).unwrap().len(), 3);
        assert!(thin_grid_a(4, 4, 10).is_err());
        for n in 1..30 {
            for k in 2..7 {
                for d in 2 * k - 3..12 {
                    let len = thin_grid_a(k, d, n).unwrap().len();
                    assert_eq!(len, (2 * k - 3) * (n / d) + (n % d).min(2 * k - 3));
                }
            }
        }
    }

    #[test]
    fn thin_grid_b_pattern() {
        assert_eq!(thin_grid_b(5, 9, 22).unwrap().len(), 18);
        let b = thin_grid_b(3, 2, 7).unwrap();
        assert_eq!(b.as_slice(), &[0, 1, 4, 5, 8, 9, 12, 13]);
        assert_eq!(thin_grid_b(5, 9, 4).unwrap().len(), 6);
        assert!(thin_grid_b(2, 4, 6).unwrap().is_empty());
        assert!(thin_grid_b(6, 3, 6).is_err());
        for n in 1..30 {
            for k in 3..8 {
                for d in (k - 2).max(1)..12 {
                    let len = thin_grid_b(k, d, n).unwrap().len();
                    assert_eq!(len, 2 * (k - 2) * (n / d) + 2 * (n % d).min(k - 2));
                }
            }
        }
    }

    #[test]
    fn diamonds() {
        assert_eq!(diamond_set(1, (1, 1), 3, 3).unwrap().as_slice(), &[1, 3, 5, 7]);
        assert_eq!(diamond_set(0, (2, 3), 4, 5).unwrap().as_slice(), &[13]);
        assert_eq!(diamond_set(2, (2, 2), 5, 5).unwrap().len(), 9);
        assert!(diamond_set(2, (1, 2), 5, 5).is_err());
        assert_eq!(diamond_center(3), (1, 1));
        assert_eq!(diamond_center(4), (2, 2));
        assert_eq!(diamond_center(2), (0, 0));
    }
}
