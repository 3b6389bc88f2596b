//! End-to-end acceptance checks. Each test certifies one headline claim and
//! prints a single `PASS n/8 ...` line (visible with `--nocapture`); a
//! failure panics with the offending case.

// Orders are written as explicit loop indices (`for n in ...`) throughout so
// the code reads like the statements being certified.
#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};

use motzkin_humps::bijections::{
    cap_phi_forward, cap_phi_inverse, f_forward, f_inverse, move_flat, move_flat_inverse,
    phi_forward, phi_inverse, psi_forward, psi_inverse, psi_star_forward, psi_star_inverse,
    rho1_forward, rho1_inverse, rho2_forward, rho2_inverse, varphi_forward, varphi_inverse,
    weight, HumpedPath,
};
use motzkin_humps::formulas::{
    dyck_prefix_end_u, hm_formula, hm_total_formula, pm_formula, s_formula, sign_pow,
};
use motzkin_humps::humps::find_humps;
use motzkin_humps::path::all_words;
use motzkin_humps::tables::{build_triangle, Backend, TriangleKind, ALL_BACKENDS};
use motzkin_humps::tableaux::{enumerate_syt, s_count, HookTableau};
use motzkin_humps::verify::{verify, Identity};
use motzkin_humps::{classify, PathClass, PathWord, Step, DEFAULT_ENUM_CAP};
use num_bigint::BigInt;

const CAP: usize = DEFAULT_ENUM_CAP;

/// Every word of order `n` together with its classification.
fn classified_words(n: usize) -> Vec<(PathWord, PathClass)> {
    all_words(n, CAP)
        .unwrap()
        .map(|w| {
            let c = classify(&w);
            (w, c)
        })
        .collect()
}

fn select<F: Fn(&PathClass) -> bool>(ws: &[(PathWord, PathClass)], pred: F) -> BTreeSet<String> {
    ws.iter().filter(|(_, c)| pred(c)).map(|(w, _)| w.to_string()).collect()
}

/// All (Motzkin path, marked hump) pairs of order `n`.
fn humped_pairs(n: usize) -> Vec<HumpedPath> {
    let mut pairs = Vec::new();
    for (w, c) in classified_words(n) {
        if !c.motzkin_path {
            continue;
        }
        for h in find_humps(&w) {
            pairs.push(HumpedPath::new(w.clone(), h.up_index).unwrap());
        }
    }
    pairs
}

fn pair_key(hp: &HumpedPath) -> (String, usize) {
    (hp.path().to_string(), hp.hump().up_index)
}

fn triangle_csv(kind: TriangleKind, backend: Backend, n_max: usize) -> String {
    build_triangle(kind, backend, n_max, CAP)
        .unwrap_or_else(|e| panic!("build_triangle({kind}, {backend}, {n_max}): {e}"))
        .to_csv()
}

#[test]
fn hump_triangle_matches_published_rows_on_all_backends() {
    let started = Instant::now();
    let want = include_str!("fixtures/hm_n10.csv");
    for backend in ALL_BACKENDS {
        assert_eq!(triangle_csv(TriangleKind::Hm, backend, 10), want, "backend {backend}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}, budget 10s");
    println!(
        "PASS 1/8: hump triangle rows 2..=10 identical across enumeration, \
         formula, and series backends ({elapsed:?})"
    );
}

#[test]
fn tableau_triangle_matches_published_rows_on_all_backends() {
    let started = Instant::now();
    let want = include_str!("fixtures/s_n8.csv");
    for backend in ALL_BACKENDS {
        assert_eq!(triangle_csv(TriangleKind::S, backend, 8), want, "backend {backend}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}, budget 10s");
    println!(
        "PASS 2/8: tableau triangle rows 0..=8 identical across enumeration, \
         formula, and series backends ({elapsed:?})"
    );
}

#[test]
fn counting_identity_suite_is_exhaustively_true() {
    let started = Instant::now();
    let suite = [
        (Identity::HumpTotal, 12),
        (Identity::TableauTotal, 12),
        (Identity::DipCount, 12),
        (Identity::PrefixSum, 12),
        (Identity::PrefixSplit, 12),
        (Identity::TableauRecurrence, 12),
        (Identity::HumpDifference, 11),
    ];
    let mut cases = 0;
    for (identity, n_max) in suite {
        let report = verify(identity, n_max, CAP).unwrap();
        assert!(report.pass, "{report}");
        cases += report.cases;
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}, budget 120s");
    println!(
        "PASS 3/8: all seven counting identities hold exhaustively \
         ({cases} cases, {elapsed:?})"
    );
}

struct Certification {
    maps_checked: usize,
    cases: usize,
}

/// Certify `forward` as a bijection `domain -> codomain`: forward images are
/// distinct, land in `codomain`, cover it entirely, and both composites are
/// the identity (compared through `domain_key` on the domain side).
fn certify_bijection<D, C, K>(
    label: &str,
    domain: &[D],
    codomain: &BTreeSet<C>,
    forward: impl Fn(&D) -> C,
    backward: impl Fn(&C) -> D,
    domain_key: impl Fn(&D) -> K,
) -> usize
where
    C: Ord + std::fmt::Debug + Clone,
    K: Eq + std::fmt::Debug,
{
    let mut image = BTreeSet::new();
    for x in domain {
        let y = forward(x);
        assert!(
            codomain.contains(&y),
            "{label}: image {y:?} of {:?} is outside the codomain",
            domain_key(x)
        );
        assert!(image.insert(y.clone()), "{label}: duplicate image {y:?}");
        assert_eq!(
            domain_key(&backward(&y)),
            domain_key(x),
            "{label}: inverse(forward) is not the identity at {:?}",
            domain_key(x)
        );
    }
    assert_eq!(image, *codomain, "{label}: forward image differs from the codomain");
    for y in codomain {
        let again = forward(&backward(y));
        assert_eq!(again, *y, "{label}: forward(inverse) is not the identity at {y:?}");
    }
    domain.len()
}

#[test]
fn bijections_are_certified_on_their_full_domains() {
    let started = Instant::now();
    let n_top = 10;
    let words: Vec<Vec<(PathWord, PathClass)>> =
        (0..=n_top + 1).map(classified_words).collect();
    let mut cert = Certification { maps_checked: 0, cases: 0 };

    // psi and psi-star share the marked-hump domain, split by hump height.
    for n in 0..=n_top {
        let pairs = humped_pairs(n);
        let mut covered = 0;
        for k in 1..=n / 2 {
            let at_height: Vec<HumpedPath> = pairs
                .iter()
                .filter(|hp| hp.hump().height == k as i64)
                .cloned()
                .collect();
            covered += at_height.len();
            let prefixes_2k = select(&words[n], |c| {
                c.motzkin_prefix && c.star_u && c.end_height == 2 * k as i64
            });
            certify_bijection(
                "psi",
                &at_height,
                &prefixes_2k,
                |hp| {
                    let image = psi_forward(hp);
                    let ends_in_up = *image.steps().last().unwrap() == Step::Up;
                    assert_eq!(
                        ends_in_up,
                        hp.hump().is_peak(),
                        "psi peak refinement failed at {:?}",
                        pair_key(hp)
                    );
                    image.to_string()
                },
                |s| {
                    let hp = psi_inverse(&motzkin_humps::parse_path(s).unwrap()).unwrap();
                    assert_eq!(hp.hump().height, k as i64, "psi height refinement at {s}");
                    hp
                },
                pair_key,
            );
            let free_min_k = select(&words[n], |c| {
                c.free_motzkin && c.star_u && c.min_height == -(k as i64)
            });
            certify_bijection(
                "psi-star",
                &at_height,
                &free_min_k,
                |hp| psi_star_forward(hp).to_string(),
                |s| {
                    let hp = psi_star_inverse(&motzkin_humps::parse_path(s).unwrap()).unwrap();
                    assert_eq!(hp.hump().height, k as i64, "psi-star height refinement at {s}");
                    hp
                },
                pair_key,
            );
            cert.cases += 2 * at_height.len();
        }
        // The height classes partition the marked pairs.
        assert_eq!(covered, pairs.len(), "hump heights outside 1..={} at order {n}", n / 2);
    }
    cert.maps_checked += 2;

    // rho1: *U prefixes to height 2k become arbitrary shorter prefixes to
    // height 2k-1; the inverse needs the original order back.
    for n in 1..=n_top {
        for k in 1..=n / 2 {
            let domain: Vec<PathWord> = words[n]
                .iter()
                .filter(|(_, c)| c.motzkin_prefix && c.star_u && c.end_height == 2 * k as i64)
                .map(|(w, _)| w.clone())
                .collect();
            let mut codomain = BTreeSet::new();
            for shorter in (2 * k - 1)..n {
                codomain.extend(select(&words[shorter], |c| {
                    c.motzkin_prefix && c.end_height == 2 * k as i64 - 1
                }));
            }
            cert.cases += certify_bijection(
                "rho1",
                &domain,
                &codomain,
                |w| rho1_forward(w).unwrap().to_string(),
                |s| rho1_inverse(&motzkin_humps::parse_path(s).unwrap(), n).unwrap(),
                |w| w.to_string(),
            );
        }
    }
    cert.maps_checked += 1;

    // rho2: prefixes to height 2k map onto the union of the *U classes at
    // heights 2k and 2k+2; the inverse needs k back.
    for n in 2..=n_top {
        for k in 1..=n / 2 {
            let domain: Vec<PathWord> = words[n]
                .iter()
                .filter(|(_, c)| c.motzkin_prefix && c.end_height == 2 * k as i64)
                .map(|(w, _)| w.clone())
                .collect();
            let codomain: BTreeSet<String> = select(&words[n], |c| {
                c.motzkin_prefix
                    && c.star_u
                    && (c.end_height == 2 * k as i64 || c.end_height == 2 * k as i64 + 2)
            });
            cert.cases += certify_bijection(
                "rho2",
                &domain,
                &codomain,
                |w| rho2_forward(w).unwrap().to_string(),
                |s| rho2_inverse(&motzkin_humps::parse_path(s).unwrap(), k).unwrap(),
                |w| w.to_string(),
            );
        }
    }
    cert.maps_checked += 1;

    // phi: hook tableaux with row difference k read off as D* prefixes to
    // height k, one height class at a time.
    for n in 2..=n_top {
        for k in 0..=n - 2 {
            let domain = enumerate_syt(n, k, CAP).unwrap();
            let codomain =
                select(&words[n], |c| c.motzkin_prefix && c.d_star && c.end_height == k as i64);
            cert.cases += certify_bijection(
                "phi",
                &domain,
                &codomain,
                |t| phi_forward(t).unwrap().to_string(),
                |s| phi_inverse(&motzkin_humps::parse_path(s).unwrap()).unwrap(),
                |t| t.to_json(),
            );
        }
    }
    cert.maps_checked += 1;

    // varphi: the union of all D* prefix classes maps onto the union of the
    // *U classes at positive even heights. Odd input height k lands at k+1;
    // even k stays at k or moves to k+2.
    for n in 2..=n_top {
        let domain: Vec<PathWord> = words[n]
            .iter()
            .filter(|(_, c)| c.motzkin_prefix && c.d_star)
            .map(|(w, _)| w.clone())
            .collect();
        let codomain = select(&words[n], |c| {
            c.motzkin_prefix && c.star_u && c.end_height > 0 && c.end_height % 2 == 0
        });
        cert.cases += certify_bijection(
            "varphi",
            &domain,
            &codomain,
            |w| {
                let image = varphi_forward(w).unwrap();
                let (k, out) = (w.end_height(), image.end_height());
                if k % 2 == 1 {
                    assert_eq!(out, k + 1, "varphi height rule at {w}");
                } else {
                    assert!(out == k || out == k + 2, "varphi height rule at {w}");
                }
                image.to_string()
            },
            |s| varphi_inverse(&motzkin_humps::parse_path(s).unwrap()).unwrap(),
            |w| w.to_string(),
        );
    }
    cert.maps_checked += 1;

    // cap-phi: marked pairs of order n correspond to the hook tableaux of
    // order n whose row difference is at most n-2.
    for n in 0..=n_top {
        let pairs = humped_pairs(n);
        let mut codomain: BTreeSet<HookTableau> = BTreeSet::new();
        if n >= 2 {
            for k in 0..=n - 2 {
                codomain.extend(enumerate_syt(n, k, CAP).unwrap());
            }
        }
        cert.cases += certify_bijection(
            "cap-phi",
            &pairs,
            &codomain,
            |hp| {
                let t = cap_phi_forward(hp).unwrap();
                assert!(t.validate().is_ok(), "cap-phi produced an invalid tableau");
                t
            },
            |t| cap_phi_inverse(t).unwrap(),
            pair_key,
        );
    }
    cert.maps_checked += 1;

    // f: prefixes to height k of order n map onto the D* prefixes to height
    // k of orders n and n+1; the inverse needs n back.
    for n in 1..=n_top {
        let mut d_star_above: BTreeMap<i64, BTreeSet<String>> = BTreeMap::new();
        for (w, c) in &words[n + 1] {
            if c.motzkin_prefix && c.d_star {
                d_star_above.entry(c.end_height).or_default().insert(w.to_string());
            }
        }
        for k in 0..n {
            let domain: Vec<PathWord> = words[n]
                .iter()
                .filter(|(_, c)| c.motzkin_prefix && c.end_height == k as i64)
                .map(|(w, _)| w.clone())
                .collect();
            let mut codomain =
                select(&words[n], |c| c.motzkin_prefix && c.d_star && c.end_height == k as i64);
            codomain.extend(d_star_above.get(&(k as i64)).cloned().unwrap_or_default());
            cert.cases += certify_bijection(
                "f",
                &domain,
                &codomain,
                |w| f_forward(w).unwrap().to_string(),
                |s| f_inverse(&motzkin_humps::parse_path(s).unwrap(), n).unwrap(),
                |w| w.to_string(),
            );
        }
    }
    cert.maps_checked += 1;

    assert_eq!(cert.maps_checked, 8);
    println!(
        "PASS 4/8: psi, psi-star, rho1, rho2, phi, varphi, cap-phi, and f are \
         bijections onto their stated codomains for orders <= {n_top} \
         ({} roundtrips, {:?})",
        cert.cases,
        started.elapsed()
    );
}

#[test]
fn cli_reproduces_the_walkthrough_figures_byte_for_byte() {
    let bin = env!("CARGO_BIN_EXE_motzkin-humps");
    let check = |args: &[&str], want: &[u8]| {
        let out = Command::new(bin).args(args).output().unwrap();
        assert!(
            out.status.success(),
            "motzkin-humps {args:?} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(out.stderr.is_empty(), "unexpected diagnostics for {args:?}");
        assert_eq!(
            out.stdout,
            want,
            "stdout mismatch for {args:?}: got {:?}",
            String::from_utf8_lossy(&out.stdout)
        );
    };
    check(
        &["bijection", "psi", "--input", "UFUFFDDUD@2"],
        include_bytes!("fixtures/psi_figure.txt"),
    );
    check(
        &["bijection", "varphi", "--inverse", "--input", "UFUUDUUFF"],
        include_bytes!("fixtures/varphi_inverse_figure.txt"),
    );
    check(
        &["bijection", "phi", "--inverse", "--input", "UUDUUDUDF"],
        include_bytes!("fixtures/phi_inverse_figure.json"),
    );
    check(
        &["bijection", "cap-phi", "--input", "UFUFFDDUD@2"],
        include_bytes!("fixtures/cap_phi_figure.json"),
    );
    println!(
        "PASS 5/8: the CLI reproduces the psi, varphi-inverse, phi-inverse, \
         and cap-phi walkthrough figures byte for byte"
    );
}

#[test]
fn signed_weights_telescope_to_the_shifted_tableau_counts() {
    let started = Instant::now();
    let mut identity_cases = 0;
    let mut roundtrips = 0;
    for n in 0..=12usize {
        let words = classified_words(n);
        for k in 0..=n {
            let class: Vec<&PathWord> = words
                .iter()
                .filter(|(_, c)| c.motzkin_prefix && c.star_u && c.end_height == k as i64 + 1)
                .map(|(w, _)| w)
                .collect();
            let signed_sum: BigInt =
                class.iter().map(|w| BigInt::from(weight(w).unwrap())).sum();
            let shifted =
                s_count(n, k, CAP).unwrap() + sign_pow(n as i64 + k as i64 + 1);
            assert_eq!(signed_sum, shifted, "signed sum at (n, k) = ({n}, {k})");
            identity_cases += 1;

            // move-flat pairs off the weight -1 words against the weight +1
            // words that start with a flat, leaving the flat-free surplus.
            let negatives: Vec<PathWord> = class
                .iter()
                .filter(|w| weight(w).unwrap() == -1)
                .map(|w| (*w).clone())
                .collect();
            let positives_with_flat: BTreeSet<String> = class
                .iter()
                .filter(|w| {
                    weight(w).unwrap() == 1 && w.steps().first() == Some(&Step::Flat)
                })
                .map(|w| w.to_string())
                .collect();
            roundtrips += certify_bijection(
                "move-flat",
                &negatives,
                &positives_with_flat,
                |w| move_flat(w).unwrap().to_string(),
                |s| move_flat_inverse(&motzkin_humps::parse_path(s).unwrap()).unwrap(),
                |w| w.to_string(),
            );
        }
    }
    println!(
        "PASS 6/8: signed weights over *U prefixes reproduce the shifted \
         tableau counts for orders <= 12 ({identity_cases} sums, \
         {roundtrips} move-flat roundtrips, {:?})",
        started.elapsed()
    );
}

#[test]
fn every_formula_division_is_exact_up_to_order_forty() {
    let mut evaluated = 0usize;
    for n in 2..=40i64 {
        for k in 1..=n / 2 {
            hm_formula(n, k).unwrap();
            pm_formula(n, k).unwrap();
            evaluated += 2;
        }
        for k in 0..=n - 2 {
            s_formula(n, k).unwrap();
            evaluated += 1;
        }
    }
    for n in 1..=40i64 {
        hm_total_formula(n).unwrap();
        evaluated += 1;
        for m in 1..=n {
            dyck_prefix_end_u(n, m).unwrap();
            evaluated += 1;
        }
    }
    println!(
        "PASS 7/8: all {evaluated} closed-form evaluations up to order 40 \
         divide exactly (no integrality failures)"
    );
}

#[test]
fn prefix_generating_function_coefficients_match_the_recurrence() {
    let report = verify(Identity::PrefixGf, 14, CAP).unwrap();
    assert!(report.pass, "{report}");
    println!(
        "PASS 8/8: series coefficients of the prefix generating functions \
         match the recurrence for orders <= 14 ({} cases)",
        report.cases
    );
}
