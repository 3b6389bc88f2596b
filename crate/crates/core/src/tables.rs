//! One entry point for building each counting triangle by any of its
//! independent routes. The routes share no code on purpose: agreement
//! between them is the library's main correctness evidence, and the CLI
//! exposes them side by side so the comparison can be re-run at will.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::formulas::{hm_formula, pm_formula, s_formula, sign_pow};
use crate::humps::{hm_table, pm_table};
use crate::path::{all_words, classify};
use crate::series::{
    divide_geometric, motzkin_series, mp_gf_triangle, riordan_triangle, GeomDenom, IntSeries,
};
use crate::tableaux::s_count;
use crate::triangle::{Triangle, TriangleRow};

/// Which triangle to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// HM(n,k): (Motzkin path, hump of height k) pairs; rows 2..=n_max, k >= 1.
    Hm,
    /// PM(n,k): (Motzkin path, peak of height k) pairs; same domain as Hm.
    Pm,
    /// S(n,k): standard hook tableaux of order n with row difference k;
    /// rows 0..=n_max, 0 <= k <= n.
    S,
    /// MP(n,k): Motzkin prefixes of order n ending at height k;
    /// rows 0..=n_max, 0 <= k <= n.
    Mp,
}

pub const ALL_KINDS: [TriangleKind; 4] =
    [TriangleKind::Hm, TriangleKind::Pm, TriangleKind::S, TriangleKind::Mp];

impl TriangleKind {
    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::Hm => "hm",
            TriangleKind::Pm => "pm",
            TriangleKind::S => "s",
            TriangleKind::Mp => "mp",
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TriangleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<TriangleKind> {
        ALL_KINDS.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            Error::Domain(format!("unknown triangle kind \"{s}\"; expected hm, pm, s, or mp"))
        })
    }
}

/// How to compute the entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Brute-force enumeration of the counted objects (bounded by the cap).
    Enumeration,
    /// Closed-form summation formulas.
    Formula,
    /// Coefficient extraction from generating functions.
    Series,
}

pub const ALL_BACKENDS: [Backend; 3] = [Backend::Enumeration, Backend::Formula, Backend::Series];

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Enumeration => "enum",
            Backend::Formula => "formula",
            Backend::Series => "series",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Backend> {
        ALL_BACKENDS.into_iter().find(|b| b.name() == s).ok_or_else(|| {
            Error::Domain(format!(
                "unknown backend \"{s}\"; expected enum, formula, or series"
            ))
        })
    }
}

/// The backends that can build `kind` (peaks have no generating function
/// here, and prefixes no closed form).
pub fn backends_for(kind: TriangleKind) -> &'static [Backend] {
    match kind {
        TriangleKind::Hm | TriangleKind::S => &ALL_BACKENDS,
        TriangleKind::Pm => &[Backend::Enumeration, Backend::Formula],
        TriangleKind::Mp => &[Backend::Enumeration, Backend::Series],
    }
}

fn build_rows(
    n_min: usize,
    n_max: usize,
    k_min: usize,
    k_max: impl Fn(usize) -> usize,
    entry: impl Fn(usize, usize) -> Result<BigInt>,
) -> Result<Triangle> {
    let mut rows = Vec::with_capacity(n_max - n_min + 1);
    for n in n_min..=n_max {
        let values = (k_min..=k_max(n)).map(|k| entry(n, k)).collect::<Result<Vec<_>>>()?;
        rows.push(TriangleRow { k_min, values });
    }
    Triangle::from_rows(n_min, rows)
}

fn check_hump_rows(kind: TriangleKind, n_max: usize) -> Result<()> {
    if n_max < 2 {
        return Err(Error::Domain(format!(
            "{kind} rows start at n = 2; got n_max = {n_max}"
        )));
    }
    Ok(())
}

fn mp_enumeration(n_max: usize, cap: usize) -> Result<Triangle> {
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut tally = vec![BigInt::from(0); n + 1];
        for w in all_words(n, cap)? {
            let c = classify(&w);
            if c.motzkin_prefix {
                tally[c.end_height as usize] += 1;
            }
        }
        rows.push(TriangleRow { k_min: 0, values: tally });
    }
    Triangle::from_rows(0, rows)
}

/// Build the `kind` triangle with `backend` up to row `n_max`. All backends
/// of a kind produce identical triangles (same rows, same column bounds), so
/// their serializations can be compared byte for byte. `cap` only restrains
/// the enumeration backend.
pub fn build_triangle(
    kind: TriangleKind,
    backend: Backend,
    n_max: usize,
    cap: usize,
) -> Result<Triangle> {
    if !backends_for(kind).contains(&backend) {
        return Err(Error::Domain(format!(
            "triangle kind \"{kind}\" has no \"{backend}\" backend"
        )));
    }
    match (kind, backend) {
        (TriangleKind::Hm, Backend::Enumeration) => hm_table(n_max, cap),
        (TriangleKind::Hm, Backend::Formula) => {
            check_hump_rows(kind, n_max)?;
            build_rows(2, n_max, 1, |n| n / 2, |n, k| hm_formula(n as i64, k as i64))
        }
        (TriangleKind::Hm, Backend::Series) => {
            check_hump_rows(kind, n_max)?;
            let m = motzkin_series(n_max);
            let h = m.mul(&m).shift(2);
            let rio = riordan_triangle(&IntSeries::geometric(n_max), &h, n_max)?;
            build_rows(2, n_max, 1, |n| n / 2, |n, k| rio.get(n, k).cloned())
        }
        (TriangleKind::Pm, Backend::Enumeration) => pm_table(n_max, cap),
        (TriangleKind::Pm, Backend::Formula) => {
            check_hump_rows(kind, n_max)?;
            build_rows(2, n_max, 1, |n| n / 2, |n, k| pm_formula(n as i64, k as i64))
        }
        (TriangleKind::S, Backend::Enumeration) => {
            build_rows(0, n_max, 0, |n| n, |n, k| s_count(n, k, cap))
        }
        (TriangleKind::S, Backend::Formula) => build_rows(0, n_max, 0, |n| n, |n, k| {
            // The summation formula covers k <= n-2; the two rightmost
            // columns are forced: no hook shape of order n has row
            // difference n-1, and the single-row shape gives exactly one
            // tableau with difference n.
            if k == n {
                Ok(BigInt::from(1))
            } else if k + 1 == n {
                Ok(BigInt::from(0))
            } else {
                s_formula(n as i64, k as i64)
            }
        }),
        (TriangleKind::S, Backend::Series) => {
            let m = motzkin_series(n_max);
            let xm = m.shift(1);
            let d = divide_geometric(&xm, GeomDenom::OnePlusX);
            let rio = riordan_triangle(&d, &xm, n_max)?;
            // The array carries the shifted counts S(n,k) + (-1)^(n+k+1);
            // undo the shift entrywise.
            build_rows(0, n_max, 0, |n| n, |n, k| {
                Ok(rio.get(n, k)? + sign_pow((n + k) as i64))
            })
        }
        (TriangleKind::Mp, Backend::Enumeration) => mp_enumeration(n_max, cap),
        (TriangleKind::Mp, Backend::Series) => mp_gf_triangle(n_max),
        (TriangleKind::Pm, Backend::Series) | (TriangleKind::Mp, Backend::Formula) => {
            unreachable!("rejected by backends_for")
        }
    }
}
