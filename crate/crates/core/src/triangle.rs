//! A triangular table of exact integers indexed by (n, k), with explicit
//! per-row column bounds. Lookups outside the domain are errors, not zeros —
//! a silent zero here would hide exactly the off-by-one bugs this library
//! exists to rule out.

use num_bigint::BigInt;
use serde_json::json;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRow {
    pub k_min: usize,
    pub values: Vec<BigInt>,
}

impl TriangleRow {
    pub fn k_max(&self) -> usize {
        self.k_min + self.values.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    n_min: usize,
    rows: Vec<TriangleRow>,
}

impl Triangle {
    /// `rows[i]` holds row `n_min + i`. Every row must be nonempty.
    pub fn from_rows(n_min: usize, rows: Vec<TriangleRow>) -> Result<Triangle> {
        if rows.is_empty() {
            return Err(Error::Domain("triangle must have at least one row".into()));
        }
        if rows.iter().any(|r| r.values.is_empty()) {
            return Err(Error::Domain("triangle rows must be nonempty".into()));
        }
        Ok(Triangle { n_min, rows })
    }

    pub fn n_min(&self) -> usize {
        self.n_min
    }

    pub fn n_max(&self) -> usize {
        self.n_min + self.rows.len() - 1
    }

    pub fn contains(&self, n: usize, k: usize) -> bool {
        n >= self.n_min
            && n <= self.n_max()
            && {
                let row = &self.rows[n - self.n_min];
                k >= row.k_min && k <= row.k_max()
            }
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&BigInt> {
        if !self.contains(n, k) {
            return Err(Error::Domain(format!(
                "entry ({n}, {k}) lies outside the table domain (rows {}..={})",
                self.n_min,
                self.n_max()
            )));
        }
        let row = &self.rows[n - self.n_min];
        Ok(&row.values[k - row.k_min])
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &TriangleRow)> {
        self.rows.iter().enumerate().map(|(i, r)| (self.n_min + i, r))
    }

    /// CSV with a `n,<k_lo>,...,<k_hi>` header; cells outside a row's
    /// k-domain are left empty rather than written as zeros.
    pub fn to_csv(&self) -> String {
        let k_lo = self.rows.iter().map(|r| r.k_min).min().unwrap();
        let k_hi = self.rows.iter().map(|r| r.k_max()).max().unwrap();
        let mut out = String::from("n");
        for k in k_lo..=k_hi {
            out.push(',');
            out.push_str(&k.to_string());
        }
        out.push('\n');
        for (n, row) in self.rows() {
            out.push_str(&n.to_string());
            for k in k_lo..=k_hi {
                out.push(',');
                if k >= row.k_min && k <= row.k_max() {
                    out.push_str(&row.values[k - row.k_min].to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    /// Compact JSON; values are decimal strings so arbitrary-precision
    /// entries survive any consumer bit-exactly.
    pub fn to_json(&self) -> String {
        let rows: Vec<_> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "k_min": r.k_min,
                    "values": r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "n_min": self.n_min, "rows": rows }).to_string()
    }
}
