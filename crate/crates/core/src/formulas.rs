//! Closed-form values of the largest k-general d-position set for paths,
//! cycles and prisms `P_n □ P_2`.

use std::fmt;

use log::debug;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{thin_grid_a, thin_grid_b};
use crate::types::PositionParams;

/// Largest k-general d-position set of the path `P_n`.
pub fn gp_path(n: usize, p: PositionParams) -> usize {
    let (k, d) = (p.k(), p.d() as usize);
    if p.is_trivial() {
        return n;
    }
    (k - 1) * (n / (d + 1)) + (n % (d + 1)).min(k - 1)
}

/// Largest k-general d-position set of the cycle `C_n`.
///
/// Outside the trivial regime `d <= k - 2` only `d <= n / 2` is answered;
/// larger `d` is reported as a domain error.
pub fn gp_cycle(n: usize, p: PositionParams) -> Result<usize> {
    let (k, d) = (p.k(), p.d() as usize);
    if n < 3 {
        return Err(Error::Domain(format!("cycles need at least 3 vertices (n={n})")));
    }
    if p.is_trivial() {
        return Ok(n);
    }
    if d > n / 2 {
        return Err(Error::Domain(format!(
            "cycle formula covers d <= n/2 = {} (n={n}, k={k}, d={d})",
            n / 2
        )));
    }
    Ok((k - 1) * n / (d + 1))
}

/// Which branch of the prism formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PrismCase {
    /// `d <= k - 2`: every vertex.
    Trivial,
    /// `k = 2`.
    Independent,
    /// `k = 3`, `n <= d`.
    GeneralShort,
    /// `k = 3`, `d = 2`, `n >= 3`.
    GeneralD2,
    /// `k = 3`, `d >= 3`, `n > d`.
    General,
    /// `k >= 4`, `n <= d`.
    Short,
    /// `k >= 4`, `n > d`, `d < 2k - 3`.
    NarrowWindow,
    /// Small remainder, zig-zag blocks win.
    SmallRemainderZigzag,
    /// Small remainder, full-height blocks win.
    SmallRemainderFull,
    /// Middle remainder, zig-zag blocks win.
    MidRemainderZigzag,
    /// Middle remainder, full-height blocks win.
    MidRemainderFull,
    /// Remainder of at least `2k - 3`.
    LargeRemainder,
}

impl fmt::Display for PrismCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            PrismCase::Trivial => "trivial",
            PrismCase::Independent => "k=2",
            PrismCase::GeneralShort => "k=3 short",
            PrismCase::GeneralD2 => "k=3 d=2",
            PrismCase::General => "k=3 d>=3",
            PrismCase::Short => "k>=4 short",
            PrismCase::NarrowWindow => "k>=4 narrow window",
            PrismCase::SmallRemainderZigzag => "small remainder, zig-zag",
            PrismCase::SmallRemainderFull => "small remainder, full-height",
            PrismCase::MidRemainderZigzag => "middle remainder, zig-zag",
            PrismCase::MidRemainderFull => "middle remainder, full-height",
            PrismCase::LargeRemainder => "large remainder",
        };
        f.write_str(label)
    }
}

/// The applicable prism case together with its value.
pub fn gp_prism_case(n: usize, p: PositionParams) -> (PrismCase, usize) {
    let (k, d) = (p.k(), p.d() as usize);
    if p.is_trivial() {
        return (PrismCase::Trivial, 2 * n);
    }
    let (q, r) = (n / d, n % d);
    match k {
        2 => (PrismCase::Independent, n.div_ceil(d)),
        3 if n <= d => (PrismCase::GeneralShort, if n == 1 { 2 } else { n.min(3) }),
        3 if d == 2 => (PrismCase::GeneralD2, 2 * (n / 2) + 2 * (n % 2).min(1)),
        3 => (PrismCase::General, 3 * q + r.min(3)),
        _ if n <= d => {
            let v = if n <= 2 * k - 4 { 2 * n.min(k - 2) } else { 2 * k - 3 };
            (PrismCase::Short, v)
        }
        _ if d < 2 * k - 3 => (PrismCase::NarrowWindow, (2 * k - 4) * q + 2 * r.min(k - 2)),
        _ if r <= k - 2 => {
            if r <= q {
                (PrismCase::SmallRemainderZigzag, (2 * k - 3) * q + r)
            } else {
                (PrismCase::SmallRemainderFull, (2 * k - 4) * q + 2 * r)
            }
        }
        _ if r < 2 * k - 3 => {
            if 2 * k - 4 - r <= q {
                (PrismCase::MidRemainderZigzag, (2 * k - 3) * q + r)
            } else {
                (PrismCase::MidRemainderFull, (2 * k - 4) * (q + 1))
            }
        }
        _ => (PrismCase::LargeRemainder, (2 * k - 3) * (q + 1)),
    }
}

/// Largest k-general d-position set of the prism `P_n □ P_2`.
pub fn gp_prism(n: usize, p: PositionParams) -> usize {
    let (case, value) = gp_prism_case(n, p);
    debug!("prism n={n} k={} d={}: case {case} -> {value}", p.k(), p.d());
    value
}

/// The prism value for `k >= 4`, `d >= k - 1` as the size of the better of
/// the two block constructions.
pub fn gp_prism_via_constructions(n: usize, p: PositionParams) -> Result<usize> {
    let (k, d) = (p.k(), p.d() as usize);
    if k < 4 || d + 1 < k || n == 0 {
        return Err(Error::Domain(format!(
            "construction form needs k >= 4, d >= k - 1, n >= 1 (n={n}, k={k}, d={d})"
        )));
    }
    let a = || thin_grid_a(k, d, n).map(|s| s.len());
    let b = || thin_grid_b(k, d, n).map(|s| s.len());
    if n <= d {
        if n < 2 * k - 3 {
            b()
        } else {
            a()
        }
    } else if d < 2 * k - 3 {
        b()
    } else {
        Ok(a()?.max(b()?))
    }
}
