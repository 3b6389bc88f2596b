//! Closed-form counts. Every formula here is a finite sum of products of
//! binomials with one division per summand; the division is performed last
//! and asserted exact, because each summand is itself a cardinality (a
//! ballot-style Dyck-prefix count times a flat-insertion binomial). A nonzero
//! remainder therefore means a transcription bug, and is reported as
//! `Integrality` instead of being rounded away.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Generalized binomial coefficient via the falling factorial:
/// C(a, b) = a(a−1)⋯(a−b+1)/b!, so C(a, b) = 0 for b < 0 or 0 ≤ a < b, and
/// C(a, 0) = 1 for every a — including negative a, which the tableau formula
/// touches at its domain edge (its summands count flat insertions into Dyck
/// prefixes, and the degenerate prefix contributes C(a, 0) = 1 there).
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || (a >= 0 && b > a) {
        return BigInt::zero();
    }
    let b = if a >= 0 { b.min(a - b) } else { b };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

fn exact_div(num: BigInt, den: i64, context: &str) -> Result<BigInt> {
    let den = BigInt::from(den);
    let (q, r) = (&num / &den, &num % &den);
    if !r.is_zero() {
        return Err(Error::Integrality(format!(
            "{context}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

/// Dyck prefixes from the origin to (2n − m, m) that end with an up step:
/// (m/n)·C(2n − m − 1, n − 1). This ballot count is the integral core of the
/// hump and tableau formulas.
pub fn dyck_prefix_end_u(n: i64, m: i64) -> Result<BigInt> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::Domain(format!(
            "dyck_prefix_end_u needs 1 <= m <= n; got (n, m) = ({n}, {m})"
        )));
    }
    exact_div(m * binom(2 * n - m - 1, n - 1), n, "dyck_prefix_end_u")
}

fn hump_sum(n: i64, k: i64, insertion_top: i64, context: &str) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for j in 0..=(n - 2 * k) {
        if (j - n) % 2 != 0 {
            continue; // parity filter: skip, never divide
        }
        let num = 4 * k * binom(insertion_top, j) * binom(n - j - 1, (n - j) / 2 + k - 1);
        total += exact_div(num, n - j + 2 * k, context)?;
    }
    Ok(total)
}

/// HM(n, k) in closed form, for n ≥ 2 and 1 ≤ k ≤ ⌊n/2⌋:
///   Σ_{j ≡ n (mod 2), 0 ≤ j ≤ n−2k}  (4k / (n−j+2k)) · C(n, j) · C(n−j−1, (n−j)/2 + k − 1).
/// Each summand counts the order-n prefixes to height 2k ending in U with j
/// flats (Dyck-prefix ballot count × flat insertions).
pub fn hm_formula(n: i64, k: i64) -> Result<BigInt> {
    check_hump_domain("hm_formula", n, k)?;
    hump_sum(n, k, n, "hm_formula")
}

/// PM(n, k), same sum as `hm_formula` with insertion factor C(n−1, j):
/// peak images must not end with a flat, losing one insertion slot.
pub fn pm_formula(n: i64, k: i64) -> Result<BigInt> {
    check_hump_domain("pm_formula", n, k)?;
    hump_sum(n, k, n - 1, "pm_formula")
}

fn check_hump_domain(what: &str, n: i64, k: i64) -> Result<()> {
    if n < 2 || k < 1 || 2 * k > n {
        return Err(Error::Domain(format!(
            "{what} needs n >= 2 and 1 <= k <= n/2; got (n, k) = ({n}, {k})"
        )));
    }
    Ok(())
}

/// Number of standard hook tableaux of order n with row difference k, for
/// 0 ≤ k ≤ n − 2:
///   (−1)^{n+k} + Σ_i Σ_j ((2k+2) / (n+k+1−2i−j)) · C(n−2i−2, j) · C(n−2i−j−1, (n+k−j−1)/2 − i)
/// over 0 ≤ i ≤ ⌊(n−k−1)/2⌋ and 0 ≤ j ≤ n−k−1−2i with j ≡ n+k−1 (mod 2).
pub fn s_formula(n: i64, k: i64) -> Result<BigInt> {
    if k < 0 || k > n - 2 {
        return Err(Error::Domain(format!(
            "s_formula needs 0 <= k <= n-2; got (n, k) = ({n}, {k})"
        )));
    }
    let mut total = if (n + k) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    for i in 0..=((n - k - 1) / 2) {
        for j in 0..=(n - k - 1 - 2 * i) {
            if (j - (n + k - 1)) % 2 != 0 {
                continue;
            }
            let num = (2 * k + 2)
                * binom(n - 2 * i - 2, j)
                * binom(n - 2 * i - j - 1, (n + k - j - 1) / 2 - i);
            total += exact_div(num, n + k + 1 - 2 * i - j, "s_formula")?;
        }
    }
    Ok(total)
}

/// Total hump count over all Motzkin paths of order n ≥ 1:
/// half of Σ_{j ≥ 1} C(n, j)·C(n−j, j), i.e. (central trinomial − 1)/2.
pub fn hm_total_formula(n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Domain(format!("hm_total_formula needs n >= 1; got {n}")));
    }
    let mut sum = BigInt::zero();
    let mut j = 1;
    while 2 * j <= n {
        sum += binom(n, j) * binom(n - j, j);
        j += 1;
    }
    exact_div(sum, 2, "hm_total_formula")
}

/// Standard fillings of classical hooks (shapes (a, 1^b)) of order n: 2^{n−1}.
pub fn s11(n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Domain(format!("s11 needs n >= 1; got {n}")));
    }
    Ok(BigInt::one() << (n as usize - 1))
}

/// Parity of (−1)^e as a BigInt sign helper for table builders.
pub fn sign_pow(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{all_words, classify, Step, DEFAULT_ENUM_CAP};

    #[test]
    fn binom_convention() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(0, 0), BigInt::from(1));
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(-1, 0), BigInt::from(1), "empty falling factorial");
        assert_eq!(binom(-1, 1), BigInt::from(-1));
        assert_eq!(binom(-2, 3), BigInt::from(-4));
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn hump_formula_values() {
        assert_eq!(hm_formula(4, 1).unwrap(), BigInt::from(8));
        assert_eq!(hm_formula(9, 2).unwrap(), BigInt::from(588));
        assert_eq!(hm_formula(9, 3).unwrap(), BigInt::from(138));
        assert_eq!(hm_formula(6, 3).unwrap(), BigInt::from(1));
        assert_eq!(pm_formula(2, 1).unwrap(), BigInt::from(1));
        assert_eq!(pm_formula(3, 1).unwrap(), BigInt::from(2));
        assert_eq!(pm_formula(4, 2).unwrap(), BigInt::from(1));
        assert!(hm_formula(4, 3).is_err());
        assert!(hm_formula(1, 1).is_err());
        assert!(pm_formula(4, 0).is_err());
    }

    #[test]
    fn tableau_formula_values() {
        assert_eq!(s_formula(2, 0).unwrap(), BigInt::from(1));
        assert_eq!(s_formula(3, 1).unwrap(), BigInt::from(2));
        assert_eq!(s_formula(8, 4).unwrap(), BigInt::from(55));
        assert!(s_formula(4, 3).is_err(), "k = n-1 is outside the formula's domain");
        assert!(s_formula(4, -1).is_err());
    }

    #[test]
    fn totals_and_hooks() {
        assert_eq!(hm_total_formula(2).unwrap(), BigInt::from(1));
        assert_eq!(hm_total_formula(4).unwrap(), BigInt::from(9));
        assert_eq!(hm_total_formula(10).unwrap(), BigInt::from(4476));
        assert!(hm_total_formula(0).is_err());
        assert_eq!(s11(1).unwrap(), BigInt::from(1));
        assert_eq!(s11(4).unwrap(), BigInt::from(8));
        assert_eq!(s11(6).unwrap(), BigInt::from(32));
    }

    #[test]
    fn ballot_count_matches_enumeration() {
        assert_eq!(dyck_prefix_end_u(1, 1).unwrap(), BigInt::from(1));
        assert_eq!(dyck_prefix_end_u(2, 2).unwrap(), BigInt::from(1));
        assert_eq!(dyck_prefix_end_u(3, 1).unwrap(), BigInt::from(2));
        assert!(dyck_prefix_end_u(3, 0).is_err());
        assert!(dyck_prefix_end_u(2, 3).is_err());

        for n in 1..=6i64 {
            for m in 1..=n {
                let len = (2 * n - m) as usize;
                let brute = all_words(len, DEFAULT_ENUM_CAP)
                    .unwrap()
                    .filter(|w| {
                        let c = classify(w);
                        c.dyck_prefix
                            && c.end_height == m
                            && w.steps().last() == Some(&Step::Up)
                    })
                    .count();
                assert_eq!(
                    dyck_prefix_end_u(n, m).unwrap(),
                    BigInt::from(brute),
                    "(n, m) = ({n}, {m})"
                );
            }
        }
    }
}
