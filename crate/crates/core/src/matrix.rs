//! Coxeter matrices and the symmetric bilinear form they induce.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Symmetric matrix `(m_ij)` of a Coxeter presentation. `None` encodes `∞`.
///
/// Indices passed to [`CoxeterMatrix::get`] are 0-based; everywhere else in the
/// public API generators carry their 1-based diagram labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Option<u32>>,
}

/// JSON form: `{"rank": n, "m": [[...]]}` with `0` standing for `∞`.
#[derive(Debug, Serialize, Deserialize)]
struct MatrixFile {
    rank: usize,
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    /// Validates and builds a matrix from rows, `None` meaning `∞`.
    pub fn new(rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidMatrix(format!("row {} has {} entries, expected {rank}", i + 1, row.len())));
            }
            entries.extend_from_slice(row);
        }
        let m = Self { rank, entries };
        for i in 0..rank {
            if m.get(i, i) != Some(1) {
                return Err(Error::InvalidMatrix(format!("diagonal entry m[{0}][{0}] must be 1", i + 1)));
            }
            for j in 0..rank {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({}, {})", i + 1, j + 1)));
                }
                if i != j && matches!(m.get(i, j), Some(v) if v < 2) {
                    return Err(Error::InvalidMatrix(format!(
                        "off-diagonal entry at ({}, {}) must be at least 2",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(m)
    }

    /// Matrix with every off-diagonal entry equal to 2, then `edges` applied
    /// (1-based labels).
    pub(crate) fn from_edges(rank: usize, edges: &[(usize, usize, Option<u32>)]) -> Self {
        let mut entries = vec![Some(2); rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = Some(1);
        }
        for &(a, b, m) in edges {
            entries[(a - 1) * rank + (b - 1)] = m;
            entries[(b - 1) * rank + (a - 1)] = m;
        }
        Self { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `m_ij` for 0-based `i`, `j`.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i * self.rank + j]
    }

    /// Block-diagonal matrix of the factors, off-block entries 2.
    pub fn block_diagonal(factors: &[CoxeterMatrix]) -> Self {
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut entries = vec![Some(2); rank * rank];
        let mut offset = 0;
        for f in factors {
            for i in 0..f.rank {
                for j in 0..f.rank {
                    entries[(offset + i) * rank + offset + j] = f.get(i, j);
                }
            }
            offset += f.rank;
        }
        for i in 0..rank {
            entries[i * rank + i] = Some(1);
        }
        Self { rank, entries }
    }

    /// Restriction to the generators in `subset` (0-based), in the given order.
    pub fn submatrix(&self, subset: &[usize]) -> Self {
        let rank = subset.len();
        let mut entries = Vec::with_capacity(rank * rank);
        for &i in subset {
            for &j in subset {
                entries.push(self.get(i, j));
            }
        }
        Self { rank, entries }
    }

    /// Gram matrix `⟨α_r, α_s⟩ = −cos(π/m_rs)`, `−1` for `∞`, row-major.
    pub fn bilinear_form(&self) -> Vec<f64> {
        let mut b = vec![0.0; self.rank * self.rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                b[i * self.rank + j] = match self.get(i, j) {
                    None => -1.0,
                    Some(m) => -cos_pi_over(m),
                };
            }
        }
        b
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: MatrixFile = serde_json::from_str(text)?;
        if file.m.len() != file.rank {
            return Err(Error::InvalidMatrix(format!("declared rank {} but {} rows given", file.rank, file.m.len())));
        }
        let rows = file
            .m
            .into_iter()
            .map(|row| row.into_iter().map(|v| if v == 0 { None } else { Some(v) }).collect())
            .collect();
        Self::new(rows)
    }

    pub fn to_json(&self) -> String {
        let m = (0..self.rank).map(|i| (0..self.rank).map(|j| self.get(i, j).unwrap_or(0)).collect()).collect();
        serde_json::to_string(&MatrixFile { rank: self.rank, m }).expect("matrix serializes")
    }
}

/// `cos(π/m)` with the common small values pinned exactly.
fn cos_pi_over(m: u32) -> f64 {
    match m {
        1 => -1.0,
        2 => 0.0,
        3 => 0.5,
        4 => std::f64::consts::FRAC_1_SQRT_2,
        6 => 3f64.sqrt() / 2.0,
        _ => (PI / m as f64).cos(),
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank {
            let row: Vec<String> =
                (0..self.rank).map(|j| self.get(i, j).map_or_else(|| "∞".to_string(), |v| v.to_string())).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
