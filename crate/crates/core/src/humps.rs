//! Humps and peaks, tallied by brute force.
//!
//! A *hump* is a factor `U F^r D` (r ≥ 0); a *peak* is a hump with r = 0.
//! Its height is the y-coordinate reached by the up step. `hm_table(n, k)`
//! counts pairs (Motzkin path of order n, hump of height k) — the pair count,
//! not the number of paths containing one. Everything here enumerates words
//! exhaustively; the closed forms and generating functions elsewhere are
//! checked against these tallies.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::path::{all_words, classify, PathWord, Step};
use crate::triangle::{Triangle, TriangleRow};

/// One hump occurrence inside a fixed word: the up step sits at `up_index`,
/// followed by `flat_run` flats and one down step; `height` is the level the
/// up step reaches. `flat_run == 0` exactly when the hump is a peak.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HumpOccurrence {
    pub up_index: usize,
    pub flat_run: usize,
    pub height: i64,
}

impl HumpOccurrence {
    pub fn is_peak(&self) -> bool {
        self.flat_run == 0
    }

    /// Index one past the closing down step.
    pub fn end_index(&self) -> usize {
        self.up_index + self.flat_run + 2
    }
}

/// All humps of `w`, left to right. Works on any word; height is relative to
/// the word's own start.
pub fn find_humps(w: &PathWord) -> Vec<HumpOccurrence> {
    let steps = w.steps();
    let profile = w.height_profile();
    let mut humps = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        if *s != Step::Up {
            continue;
        }
        let mut j = i + 1;
        while j < steps.len() && steps[j] == Step::Flat {
            j += 1;
        }
        if j < steps.len() && steps[j] == Step::Down {
            humps.push(HumpOccurrence {
                up_index: i,
                flat_run: j - i - 1,
                height: profile[i + 1],
            });
        }
    }
    humps
}

fn hump_triangle(n_max: usize, cap: usize, peaks_only: bool) -> Result<Triangle> {
    if n_max < 2 {
        return Err(Error::Domain(format!(
            "hump tables start at n = 2; got n_max = {n_max}"
        )));
    }
    let mut rows = Vec::with_capacity(n_max - 1);
    for n in 2..=n_max {
        let mut tally = vec![BigInt::from(0); n / 2]; // k = 1 ..= n/2
        for w in all_words(n, cap)? {
            if !classify(&w).motzkin_path {
                continue;
            }
            for h in find_humps(&w) {
                if peaks_only && !h.is_peak() {
                    continue;
                }
                tally[h.height as usize - 1] += 1;
            }
        }
        rows.push(TriangleRow { k_min: 1, values: tally });
    }
    Triangle::from_rows(2, rows)
}

/// Hump pair counts HM(n, k) for 2 ≤ n ≤ n_max, 1 ≤ k ≤ ⌊n/2⌋, by enumeration.
pub fn hm_table(n_max: usize, cap: usize) -> Result<Triangle> {
    hump_triangle(n_max, cap, false)
}

/// Peak pair counts PM(n, k) on the same domain as `hm_table`.
pub fn pm_table(n_max: usize, cap: usize) -> Result<Triangle> {
    hump_triangle(n_max, cap, true)
}

/// Number of free words of order n ending at height 0 (the central trinomial
/// coefficient), by enumeration.
pub fn sm_count(n: usize, cap: usize) -> Result<BigInt> {
    let mut count = BigInt::from(0);
    for w in all_words(n, cap)? {
        if w.end_height() == 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of free words of order n ending at height 0 whose minimum height is
/// exactly -k and whose last non-flat step is U.
pub fn sm_k_count(n: usize, k: usize, cap: usize) -> Result<BigInt> {
    if n < 2 || k < 1 {
        return Err(Error::Domain(format!(
            "sm_k_count needs n >= 2 and k >= 1; got ({n}, {k})"
        )));
    }
    let mut count = BigInt::from(0);
    for w in all_words(n, cap)? {
        let c = classify(&w);
        if c.free_motzkin && c.star_u && c.min_height == -(k as i64) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{parse_path, DEFAULT_ENUM_CAP};

    fn w(s: &str) -> PathWord {
        parse_path(s).unwrap()
    }

    #[test]
    fn humps_of_sample_words() {
        assert_eq!(
            find_humps(&w("UFUFFDDUD")),
            vec![
                HumpOccurrence { up_index: 2, flat_run: 2, height: 2 },
                HumpOccurrence { up_index: 7, flat_run: 0, height: 1 },
            ]
        );
        assert_eq!(find_humps(&w("FFFF")), vec![]);
        assert_eq!(
            find_humps(&w("UUDD")),
            vec![HumpOccurrence { up_index: 1, flat_run: 0, height: 2 }]
        );
        assert!(find_humps(&w("UUDD"))[0].is_peak());
        assert!(!find_humps(&w("UFD"))[0].is_peak());
    }

    #[test]
    fn hump_table_small_entries() {
        let hm = hm_table(6, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(hm.get(2, 1).unwrap(), &BigInt::from(1));
        assert_eq!(hm.get(4, 1).unwrap(), &BigInt::from(8));
        assert_eq!(hm.get(4, 2).unwrap(), &BigInt::from(1));
        assert_eq!(hm.get(6, 3).unwrap(), &BigInt::from(1));
        assert!(hm.get(4, 0).is_err(), "k = 0 is never in a hump table's domain");
        assert!(hm.get(4, 3).is_err());
        assert!(hm_table(1, DEFAULT_ENUM_CAP).is_err());
    }

    #[test]
    fn peak_table_small_entries() {
        let pm = pm_table(4, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(pm.get(2, 1).unwrap(), &BigInt::from(1));
        assert_eq!(pm.get(3, 1).unwrap(), &BigInt::from(2));
        assert_eq!(pm.get(4, 2).unwrap(), &BigInt::from(1));
    }

    #[test]
    fn peaks_never_exceed_humps() {
        let n_max = 9;
        let hm = hm_table(n_max, DEFAULT_ENUM_CAP).unwrap();
        let pm = pm_table(n_max, DEFAULT_ENUM_CAP).unwrap();
        for n in 2..=n_max {
            for k in 1..=n / 2 {
                // Equality holds exactly when no height-k hump of order n has flats.
                let flat_hump_exists = all_words(n, DEFAULT_ENUM_CAP)
                    .unwrap()
                    .filter(|w| classify(w).motzkin_path)
                    .flat_map(|w| find_humps(&w))
                    .any(|h| h.height == k as i64 && h.flat_run > 0);
                let hm_v = hm.get(n, k).unwrap();
                let pm_v = pm.get(n, k).unwrap();
                assert!(pm_v <= hm_v);
                assert_eq!(pm_v == hm_v, !flat_hump_exists, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn free_word_counts() {
        assert_eq!(sm_count(0, DEFAULT_ENUM_CAP).unwrap(), BigInt::from(1));
        assert_eq!(sm_count(2, DEFAULT_ENUM_CAP).unwrap(), BigInt::from(3));
        assert_eq!(sm_count(4, DEFAULT_ENUM_CAP).unwrap(), BigInt::from(19));

        assert_eq!(sm_k_count(2, 1, DEFAULT_ENUM_CAP).unwrap(), BigInt::from(1)); // DU
        assert_eq!(sm_k_count(4, 1, DEFAULT_ENUM_CAP).unwrap(), BigInt::from(8));
        assert_eq!(sm_k_count(4, 2, DEFAULT_ENUM_CAP).unwrap(), BigInt::from(1)); // DDUU
        assert!(sm_k_count(1, 1, DEFAULT_ENUM_CAP).is_err());
        assert!(sm_k_count(4, 0, DEFAULT_ENUM_CAP).is_err());
        assert!(matches!(
            sm_count(99, DEFAULT_ENUM_CAP),
            Err(Error::SizeLimit { n: 99, cap: 16 })
        ));
    }
}
