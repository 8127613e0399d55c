use std::fmt::Write as _;

use serde::Serialize;

use crate::distance::DistMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::types::PositionParams;

use super::{default_method, solve, SearchOptions};

/// Values for `k = 2..=k_max` (columns) and `d = 1..=diameter` (rows).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeTable {
    pub k_max: usize,
    pub diameter: u32,
    /// `values[d - 1][k - 2]`.
    pub values: Vec<Vec<usize>>,
}

impl LatticeTable {
    pub fn get(&self, k: usize, d: u32) -> Option<usize> {
        self.values.get((d as usize).checked_sub(1)?)?.get(k.checked_sub(2)?).copied()
    }

    /// Header `d,2,3,...,k_max`, then one line per `d`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d");
        for k in 2..=self.k_max {
            write!(out, ",{k}").unwrap();
        }
        out.push('\n');
        for (i, row) in self.values.iter().enumerate() {
            write!(out, "{}", i + 1).unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Values must not grow with `d` nor shrink with `k`.
    pub fn check_monotone(&self) -> Result<()> {
        for (i, row) in self.values.iter().enumerate() {
            let d = i as u32 + 1;
            for (j, &v) in row.iter().enumerate() {
                let k = j + 2;
                let k_ok = j == 0 || row[j - 1] <= v;
                let d_ok = i == 0 || self.values[i - 1][j] >= v;
                if !k_ok || !d_ok {
                    return Err(Error::Monotonicity { k, d });
                }
            }
        }
        Ok(())
    }
}

/// Builds the table with an arbitrary evaluator, then checks monotonicity.
pub fn lattice_table_with(
    g: &Graph,
    k_max: usize,
    mut value: impl FnMut(PositionParams) -> Result<usize>,
) -> Result<LatticeTable> {
    if k_max < 2 {
        return Err(Error::InvalidParams(format!("k_max must be at least 2, got {k_max}")));
    }
    let diameter = DistMatrix::new(g).diameter().max(1);
    let values = (1..=diameter)
        .map(|d| (2..=k_max).map(|k| value(PositionParams::new(k, d)?)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let table = LatticeTable { k_max, diameter, values };
    table.check_monotone()?;
    Ok(table)
}

/// Solver-backed table using the size-based default method.
pub fn lattice_table(g: &Graph, k_max: usize, opts: &SearchOptions) -> Result<LatticeTable> {
    let method = default_method(g);
    lattice_table_with(g, k_max, |p| Ok(solve(g, p, method, opts)?.value))
}
