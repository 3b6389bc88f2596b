//! Exhaustive cross-checks of the counting identities the library rests on.
//! Every identity is checked on its full domain up to a bound, one side
//! computed by brute-force enumeration wherever possible, and a failing case
//! is reported with both sides so it can be re-checked by hand.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::formulas::{hm_formula, pm_formula, s_formula, sign_pow};
use crate::humps::{hm_table, pm_table, sm_count};
use crate::path::{all_words, classify, mp_count};
use crate::series::{
    divide_geometric, motzkin_series, mp_gf_triangle, riordan_triangle, GeomDenom, IntSeries,
};
use crate::tableaux::s_count;
use crate::triangle::Triangle;

/// The identities the `verify` entry point can check. Each one names what it
/// relates; `description()` states the claim precisely.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// 2·HM(n) + 1 = SM(n): humps over all paths vs. free-path totals.
    HumpTotal,
    /// Σ_k S(n,k) − 1 = HM(n): hook tableaux vs. humps.
    TableauTotal,
    /// HM(n,k) = SM(n,k): humps of height k vs. free paths dipping to −k.
    DipCount,
    /// HM(n,k) = Σ_{m<n} MP(m,2k−1): humps vs. shorter odd-height prefixes.
    PrefixSum,
    /// MP(n,2k) = HM(n,k) + HM(n,k+1): even-height prefixes split by humps.
    PrefixSplit,
    /// S'(n+1,k) + S'(n,k) = MP(n,k) for the shifted tableau counts.
    TableauRecurrence,
    /// S(n+1,2k−1) + S(n,2k−1) = HM(n+1,k) − HM(n,k).
    HumpDifference,
    /// The hump triangle is the Riordan array (1/(1−x), x²M²).
    RiordanHump,
    /// The shifted tableau triangle is the Riordan array (xM/(1+x), xM).
    RiordanTableau,
    /// The hump and peak closed forms agree with enumeration.
    HumpFormula,
    /// The tableau closed form agrees with enumeration.
    TableauFormula,
    /// [x^n] x^k·M(x)^{k+1} = MP(n,k).
    PrefixGf,
}

pub const ALL_IDENTITIES: [Identity; 12] = [
    Identity::HumpTotal,
    Identity::TableauTotal,
    Identity::DipCount,
    Identity::PrefixSum,
    Identity::PrefixSplit,
    Identity::TableauRecurrence,
    Identity::HumpDifference,
    Identity::RiordanHump,
    Identity::RiordanTableau,
    Identity::HumpFormula,
    Identity::TableauFormula,
    Identity::PrefixGf,
];

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::HumpTotal => "hump-total",
            Identity::TableauTotal => "tableau-total",
            Identity::DipCount => "dip-count",
            Identity::PrefixSum => "prefix-sum",
            Identity::PrefixSplit => "prefix-split",
            Identity::TableauRecurrence => "tableau-recurrence",
            Identity::HumpDifference => "hump-difference",
            Identity::RiordanHump => "riordan-hump",
            Identity::RiordanTableau => "riordan-tableau",
            Identity::HumpFormula => "hump-formula",
            Identity::TableauFormula => "tableau-formula",
            Identity::PrefixGf => "prefix-gf",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Identity::HumpTotal => {
                "twice the number of (path, hump) pairs of order n, plus one, \
                 equals the number of free paths of order n ending at height 0"
            }
            Identity::TableauTotal => {
                "the number of standard hook tableaux of order n, summed over \
                 all row differences, exceeds the (path, hump) pair count by one"
            }
            Identity::DipCount => {
                "(path, hump) pairs with hump height k match free paths ending \
                 at 0 with minimum exactly -k and last non-flat step U"
            }
            Identity::PrefixSum => {
                "(path, hump) pairs of height k match prefixes of all shorter \
                 orders ending at height 2k-1"
            }
            Identity::PrefixSplit => {
                "prefixes of order n ending at height 2k split into hump pairs \
                 of heights k and k+1"
            }
            Identity::TableauRecurrence => {
                "shifted tableau counts S'(n,k) = S(n,k) + (-1)^(n+k+1) \
                 satisfy S'(n+1,k) + S'(n,k) = MP(n,k)"
            }
            Identity::HumpDifference => {
                "S(n+1,2k-1) + S(n,2k-1) equals the consecutive-order \
                 difference HM(n+1,k) - HM(n,k) of the hump triangle"
            }
            Identity::RiordanHump => {
                "the hump triangle HM(n,k) matches the Riordan array \
                 (1/(1-x), x^2 M^2(x)) in columns k >= 1"
            }
            Identity::RiordanTableau => {
                "the shifted tableau triangle matches the Riordan array \
                 (x M(x)/(1+x), x M(x))"
            }
            Identity::HumpFormula => {
                "the hump and peak closed forms reproduce the enumerated \
                 HM(n,k) and PM(n,k) tables"
            }
            Identity::TableauFormula => {
                "the tableau closed form reproduces the enumerated S(n,k) \
                 counts for row differences k <= n-2"
            }
            Identity::PrefixGf => {
                "the coefficient of x^n in x^k M(x)^(k+1) equals the prefix \
                 count MP(n,k)"
            }
        }
    }

    /// Bound giving a thorough check in well under a minute.
    pub fn default_n_max(self) -> usize {
        match self {
            Identity::TableauTotal | Identity::TableauFormula => 10,
            Identity::HumpDifference => 11,
            Identity::PrefixGf => 14,
            _ => 12,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        ALL_IDENTITIES
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = ALL_IDENTITIES.iter().map(|id| id.name()).collect();
                Error::Domain(format!(
                    "unknown identity \"{s}\"; expected one of: {}",
                    names.join(", ")
                ))
            })
    }
}

/// A failing case, with both sides of the identity for independent re-checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity over its whole domain up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: Identity,
    pub range: String,
    pub cases: u64,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({}; {} cases)",
            if self.pass { "pass" } else { "FAIL" },
            self.identity.name(),
            self.range,
            self.cases
        )?;
        if let Some(ce) = &self.counterexample {
            write!(f, "\n  counterexample at {}: lhs = {}, rhs = {}", ce.inputs, ce.lhs, ce.rhs)?;
        }
        Ok(())
    }
}

struct Checker {
    cases: u64,
    counterexample: Option<Counterexample>,
}

impl Checker {
    fn new() -> Checker {
        Checker { cases: 0, counterexample: None }
    }

    fn check(&mut self, inputs: impl FnOnce() -> String, lhs: &BigInt, rhs: &BigInt) {
        self.cases += 1;
        if self.counterexample.is_none() && lhs != rhs {
            self.counterexample = Some(Counterexample {
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn report(self, identity: Identity, range: String) -> VerificationReport {
        VerificationReport {
            identity,
            range,
            cases: self.cases,
            pass: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

fn triangle_at(t: &Triangle, n: usize, k: usize) -> BigInt {
    if t.contains(n, k) {
        t.get(n, k).expect("contained entry").clone()
    } else {
        BigInt::from(0)
    }
}

fn row_sum(t: &Triangle, n: usize) -> BigInt {
    t.rows()
        .find(|(m, _)| *m == n)
        .map(|(_, row)| row.values.iter().sum())
        .unwrap_or_else(|| BigInt::from(0))
}

fn s_total(n: usize, cap: usize) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for k in 0..=n {
        total += s_count(n, k, cap)?;
    }
    Ok(total)
}

/// Check `identity` exhaustively on its domain up to `n_max`. `cap` bounds
/// the enumeration sizes the check is allowed to use.
pub fn verify(identity: Identity, n_max: usize, cap: usize) -> Result<VerificationReport> {
    let mut c = Checker::new();
    let range = match identity {
        Identity::HumpTotal => {
            let hm = hm_table(n_max, cap)?;
            for n in 2..=n_max {
                let lhs = 2 * row_sum(&hm, n) + 1;
                let rhs = sm_count(n, cap)?;
                c.check(|| format!("n = {n}"), &lhs, &rhs);
            }
            format!("2 <= n <= {n_max}")
        }
        Identity::TableauTotal => {
            let hm = hm_table(n_max, cap)?;
            for n in 2..=n_max {
                let lhs = s_total(n, cap)? - 1;
                let rhs = row_sum(&hm, n);
                c.check(|| format!("n = {n}"), &lhs, &rhs);
            }
            format!("2 <= n <= {n_max}")
        }
        Identity::DipCount => {
            let hm = hm_table(n_max, cap)?;
            for n in 2..=n_max {
                let mut dips = vec![BigInt::from(0); n / 2];
                for w in all_words(n, cap)? {
                    let cl = classify(&w);
                    if cl.free_motzkin && cl.star_u && cl.min_height < 0 {
                        dips[(-cl.min_height) as usize - 1] += 1;
                    }
                }
                for k in 1..=n / 2 {
                    let lhs = triangle_at(&hm, n, k);
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &dips[k - 1]);
                }
            }
            format!("2 <= n <= {n_max}, 1 <= k <= n/2")
        }
        Identity::PrefixSum => {
            let hm = hm_table(n_max, cap)?;
            for n in 2..=n_max {
                for k in 1..=n / 2 {
                    let lhs = triangle_at(&hm, n, k);
                    let mut rhs = BigInt::from(0);
                    for m in (2 * k - 1)..n {
                        rhs += mp_count(m as i64, 2 * k as i64 - 1)?;
                    }
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &rhs);
                }
            }
            format!("2 <= n <= {n_max}, 1 <= k <= n/2")
        }
        Identity::PrefixSplit => {
            let hm = hm_table(n_max, cap)?;
            for n in 2..=n_max {
                for k in 1..=n / 2 {
                    let lhs = mp_count(n as i64, 2 * k as i64)?;
                    let rhs = triangle_at(&hm, n, k) + triangle_at(&hm, n, k + 1);
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &rhs);
                }
            }
            format!("2 <= n <= {n_max}, 1 <= k <= n/2")
        }
        Identity::TableauRecurrence => {
            for n in 1..=n_max {
                for k in 0..n {
                    let shifted = |m: usize| -> Result<BigInt> {
                        Ok(s_count(m, k, cap)? + sign_pow((m + k + 1) as i64))
                    };
                    let lhs = shifted(n + 1)? + shifted(n)?;
                    let rhs = mp_count(n as i64, k as i64)?;
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &rhs);
                }
            }
            format!("1 <= n <= {n_max}, 0 <= k < n (tableaux read at order n+1)")
        }
        Identity::HumpDifference => {
            let hm = hm_table(n_max + 1, cap)?;
            for n in 2..=n_max {
                for k in 1..=n / 2 {
                    let lhs = s_count(n + 1, 2 * k - 1, cap)? + s_count(n, 2 * k - 1, cap)?;
                    let rhs = triangle_at(&hm, n + 1, k) - triangle_at(&hm, n, k);
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &rhs);
                }
            }
            format!("2 <= n <= {n_max}, 1 <= k <= n/2 (hump table read at order n+1)")
        }
        Identity::RiordanHump => {
            let hm = hm_table(n_max, cap)?;
            let m = motzkin_series(n_max);
            let h = m.mul(&m).shift(2);
            let rio = riordan_triangle(&IntSeries::geometric(n_max), &h, n_max)?;
            for n in 2..=n_max {
                for k in 1..=n {
                    let lhs = triangle_at(&rio, n, k);
                    let rhs = triangle_at(&hm, n, k);
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &rhs);
                }
            }
            format!("2 <= n <= {n_max}, 1 <= k <= n")
        }
        Identity::RiordanTableau => {
            let m = motzkin_series(n_max);
            let xm = m.shift(1);
            let d = divide_geometric(&xm, GeomDenom::OnePlusX);
            let rio = riordan_triangle(&d, &xm, n_max)?;
            for n in 0..=n_max {
                for k in 0..=n {
                    let lhs = triangle_at(&rio, n, k);
                    let rhs = s_count(n, k, cap)? + sign_pow((n + k + 1) as i64);
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &rhs);
                }
            }
            format!("0 <= k <= n <= {n_max}")
        }
        Identity::HumpFormula => {
            let hm = hm_table(n_max, cap)?;
            let pm = pm_table(n_max, cap)?;
            for n in 2..=n_max {
                for k in 1..=n / 2 {
                    let lhs = hm_formula(n as i64, k as i64)?;
                    c.check(|| format!("humps, n = {n}, k = {k}"), &lhs, &triangle_at(&hm, n, k));
                    let lhs = pm_formula(n as i64, k as i64)?;
                    c.check(|| format!("peaks, n = {n}, k = {k}"), &lhs, &triangle_at(&pm, n, k));
                }
            }
            format!("2 <= n <= {n_max}, 1 <= k <= n/2, humps and peaks")
        }
        Identity::TableauFormula => {
            for n in 2..=n_max {
                for k in 0..=n - 2 {
                    let lhs = s_formula(n as i64, k as i64)?;
                    let rhs = s_count(n, k, cap)?;
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &rhs);
                }
            }
            format!("2 <= n <= {n_max}, 0 <= k <= n-2")
        }
        Identity::PrefixGf => {
            let gf = mp_gf_triangle(n_max)?;
            for n in 0..=n_max {
                for k in 0..=n {
                    let lhs = triangle_at(&gf, n, k);
                    let rhs = mp_count(n as i64, k as i64)?;
                    c.check(|| format!("n = {n}, k = {k}"), &lhs, &rhs);
                }
            }
            format!("0 <= k <= n <= {n_max}")
        }
    };
    Ok(c.report(identity, range))
}
