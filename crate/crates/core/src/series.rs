//! Truncated formal power series with exact integer coefficients, plus the
//! Riordan-array machinery that turns a pair (d(x), h(x)) into a triangle
//! whose (n, k) entry is [x^n] d·h^k.
//!
//! A series carries its truncation order explicitly: `coeff[i]` is the
//! coefficient of x^i for 0 ≤ i ≤ order. Binary operations on mismatched
//! truncations keep the smaller order — coefficients beyond it would be
//! unreliable for products anyway.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::triangle::{Triangle, TriangleRow};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// Build from coefficients c_0..c_N (truncation order N = len − 1).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<IntSeries> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a series needs at least the x^0 coefficient".into()));
        }
        Ok(IntSeries { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<IntSeries> {
        IntSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant series c + 0x + ... up to `order`.
    pub fn constant(c: i64, order: usize) -> IntSeries {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::from(c);
        IntSeries { coeffs }
    }

    /// 1/(1−x) = 1 + x + x² + ... up to `order`.
    pub fn geometric(order: usize) -> IntSeries {
        IntSeries { coeffs: vec![BigInt::from(1); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &IntSeries) -> IntSeries {
        let n = self.order().min(other.order());
        IntSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let term = &self.coeffs[i] * &other.coeffs[j];
                coeffs[i + j] += term;
            }
        }
        IntSeries { coeffs }
    }

    /// Multiply by x^j, keeping the truncation order.
    pub fn shift(&self, j: usize) -> IntSeries {
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        if j <= n {
            coeffs[j..].clone_from_slice(&self.coeffs[..=n - j]);
        }
        IntSeries { coeffs }
    }
}

/// Which geometric factor to divide out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeomDenom {
    /// Divide by (1 − x): running prefix sums.
    OneMinusX,
    /// Divide by (1 + x): c_n = a_n − c_{n−1}.
    OnePlusX,
}

/// Exact division by (1 ± x) — the only denominators the triangles need.
pub fn divide_geometric(a: &IntSeries, denom: GeomDenom) -> IntSeries {
    let mut coeffs = Vec::with_capacity(a.order() + 1);
    let mut prev = BigInt::zero();
    for c in &a.coeffs {
        let next = match denom {
            GeomDenom::OneMinusX => c + &prev,
            GeomDenom::OnePlusX => c - &prev,
        };
        coeffs.push(next.clone());
        prev = next;
    }
    IntSeries { coeffs }
}

/// The Motzkin number series M(x) = 1 + x + 2x² + 4x³ + 9x⁴ + ... via
/// m_{n+1} = m_n + Σ_{i=0}^{n−1} m_i · m_{n−1−i}.
pub fn motzkin_series(order: usize) -> IntSeries {
    let mut m: Vec<BigInt> = Vec::with_capacity(order + 1);
    m.push(BigInt::from(1));
    for n in 0..order {
        let mut next = m[n].clone();
        for i in 0..n {
            next += &m[i] * &m[n - 1 - i];
        }
        m.push(next);
    }
    IntSeries { coeffs: m }
}

/// The triangle with entry (n, k) = [x^n] d(x)·h(x)^k for 0 ≤ k ≤ n ≤ n_max.
/// Requires h(0) = 0 (otherwise columns would not stabilize) and both series
/// truncated at order ≥ n_max. Powers of h are built incrementally.
pub fn riordan_triangle(d: &IntSeries, h: &IntSeries, n_max: usize) -> Result<Triangle> {
    if !h.coeff(0).is_zero() {
        return Err(Error::Domain(
            "riordan triangle needs h(0) = 0; the multiplier series must have no constant term"
                .into(),
        ));
    }
    if d.order() < n_max || h.order() < n_max {
        return Err(Error::Domain(format!(
            "riordan triangle to n_max = {n_max} needs both series truncated at order >= {n_max}"
        )));
    }
    let mut column = d.clone(); // d·h^k for the current k
    let mut entries: Vec<Vec<BigInt>> = vec![Vec::new(); n_max + 1]; // entries[n][k]
    for k in 0..=n_max {
        for (n, row) in entries.iter_mut().enumerate().take(n_max + 1).skip(k) {
            row.push(column.coeff(n).clone());
        }
        if k < n_max {
            column = column.mul(h);
        }
    }
    Triangle::from_rows(
        0,
        entries.into_iter().map(|values| TriangleRow { k_min: 0, values }).collect(),
    )
}

/// Prefix-count triangle from generating functions: column k of the triangle
/// (M(x), x·M(x)) is x^k · M(x)^{k+1}, whose x^n coefficient must equal the
/// recurrence value MP(n, k). Returned for 0 ≤ k ≤ n ≤ n_max.
pub fn mp_gf_triangle(n_max: usize) -> Result<Triangle> {
    let m = motzkin_series(n_max);
    riordan_triangle(&m, &m.shift(1), n_max)
}
