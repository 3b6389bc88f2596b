//! The bijections connecting hump-marked Motzkin paths, Motzkin prefixes,
//! free paths, and hook tableaux. Each map comes in a forward and an inverse
//! flavor, validates its full domain eagerly (`NotInDomain` otherwise), and
//! has a `_traced` variant that also reports how the input decomposes into
//! the named segments the rewrite rule acts on.
//!
//! Writing M = M₁ U F^r D M₂ for a path with a marked hump U F^r D:
//!
//! * `psi`:       M₁ U F^r D M₂  ↦  M₁ U rc(M₂) U F^r   (prefix to height 2k, ends-in-U
//!   exactly for peaks; rc = reverse complement)
//! * `psi_star`:  M₁ U F^r D M₂  ↦  M₂ D M₁ U F^r       (free path with minimum −k)
//! * `rho1`:      strips the final U and trailing flats from an even-height
//!   `*U` prefix; the inverse appends U F^{n−m−1} to reach a requested order n
//! * `rho2`:      raises the last non-flat step of an even-height prefix from
//!   D to U (identity if it already is U)
//! * `phi`:       hook tableau ↦ word with U at row-1 entries, D at row-2
//!   entries, F at tail entries
//! * `varphi`:    `D*` prefix of height k ↦ `*U` prefix of even height,
//!   by a three-way case split on k's parity and the last non-flat step
//! * `cap_phi`:   the composition φ⁻¹ ∘ φ̄⁻¹ ∘ ψ, sending a marked hump of
//!   height k to a tableau with row difference 2k − 1 or 2k − 2
//! * `f_step`:    prefix ↦ `D*` prefix of the same height, growing the word
//!   by one step unless it already is `D*`
//! * `move_flat`: sends a weight −1 prefix (odd number of trailing flats) to
//!   a weight +1 prefix starting with a flat, by moving the last flat first

use serde::Serialize;

use crate::error::{Error, Result};
use crate::humps::{find_humps, HumpOccurrence};
use crate::path::{classify, reverse_complement, PathWord, Step};
use crate::tableaux::HookTableau;

/// A Motzkin path together with one of its humps. Construction checks both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HumpedPath {
    path: PathWord,
    hump: HumpOccurrence,
}

impl HumpedPath {
    pub fn new(path: PathWord, up_index: usize) -> Result<HumpedPath> {
        if !classify(&path).motzkin_path {
            return Err(Error::NotInDomain(format!(
                "\"{path}\" is not a Motzkin path (must stay >= 0 and end at height 0)"
            )));
        }
        match find_humps(&path).into_iter().find(|h| h.up_index == up_index) {
            Some(hump) => Ok(HumpedPath { path, hump }),
            None => Err(Error::NotInDomain(format!(
                "no hump starts at index {up_index} of \"{path}\""
            ))),
        }
    }

    pub fn path(&self) -> &PathWord {
        &self.path
    }

    pub fn hump(&self) -> HumpOccurrence {
        self.hump
    }
}

/// A contiguous piece of a word, named after its role in a rewrite rule.
/// `range` is a half-open index interval into the decomposed word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub name: &'static str,
    pub range: (usize, usize),
    pub text: String,
}

/// How an input decomposes into the segments a map manipulates.
/// Concatenating the segments in order reproduces the decomposed word.
/// Derived data: excluded from any equality notion of the maps themselves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub segments: Vec<Segment>,
}

impl Decomposition {
    fn of(w: &PathWord, parts: &[(&'static str, usize, usize)]) -> Decomposition {
        let segments = parts
            .iter()
            .map(|&(name, lo, hi)| Segment {
                name,
                range: (lo, hi),
                text: w.steps()[lo..hi].iter().map(|s| s.to_char()).collect(),
            })
            .collect();
        Decomposition { segments }
    }
}

fn flats(r: usize) -> Vec<Step> {
    vec![Step::Flat; r]
}

fn not_in_domain(msg: String) -> Error {
    Error::NotInDomain(msg)
}

// ---------------------------------------------------------------------------
// psi: marked hump of height k  ->  prefix ending at height 2k, last non-flat U

pub fn psi_forward(hp: &HumpedPath) -> PathWord {
    psi_forward_traced(hp).0
}

pub fn psi_forward_traced(hp: &HumpedPath) -> (PathWord, Decomposition) {
    let steps = hp.path.steps();
    let h = hp.hump;
    let (i, r) = (h.up_index, h.flat_run);
    let m1 = &steps[..i];
    let m2 = &steps[h.end_index()..];
    let rc_m2 = reverse_complement(&PathWord::new(m2.to_vec()));
    let out = PathWord::concat(&[m1, &[Step::Up], rc_m2.steps(), &[Step::Up], &flats(r)]);
    let d = Decomposition::of(
        &hp.path,
        &[("M1", 0, i), ("P", i, h.end_index()), ("M2", h.end_index(), steps.len())],
    );
    (out, d)
}

pub fn psi_inverse(w: &PathWord) -> Result<HumpedPath> {
    Ok(psi_inverse_traced(w)?.0)
}

pub fn psi_inverse_traced(w: &PathWord) -> Result<(HumpedPath, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix {
        return Err(not_in_domain(format!("\"{w}\" dips below the x-axis")));
    }
    if !c.star_u {
        return Err(not_in_domain(format!("last non-flat step of \"{w}\" must be U")));
    }
    if c.end_height < 2 || c.end_height % 2 != 0 {
        return Err(not_in_domain(format!(
            "\"{w}\" ends at height {}; a positive even height is required",
            c.end_height
        )));
    }
    let k = c.end_height / 2;
    let n = w.len();
    let steps = w.steps();
    let r = w.trailing_flats();
    let p_u = n - 1 - r;
    let profile = w.height_profile();
    // The path climbs from 0 to 2k, so height k-1 is visited; after its last
    // visit the next step can only be U (F would revisit k-1 immediately, D
    // would force a later crossing).
    let t = profile.iter().rposition(|&y| y == k - 1).expect("k-1 is visited");
    debug_assert_eq!(steps[t], Step::Up);
    let m1 = &steps[..t];
    let m2 = &steps[t + 1..p_u];
    let rc_m2 = reverse_complement(&PathWord::new(m2.to_vec()));
    let path = PathWord::concat(&[m1, &[Step::Up], &flats(r), &[Step::Down], rc_m2.steps()]);
    let hp = HumpedPath::new(path, t)?;
    let d = Decomposition::of(
        w,
        &[
            ("M1", 0, t),
            ("U", t, t + 1),
            ("M2", t + 1, p_u),
            ("U", p_u, p_u + 1),
            ("F^r", p_u + 1, n),
        ],
    );
    Ok((hp, d))
}

// ---------------------------------------------------------------------------
// psi_star: marked hump of height k -> free path with minimum exactly -k

pub fn psi_star_forward(hp: &HumpedPath) -> PathWord {
    psi_star_forward_traced(hp).0
}

pub fn psi_star_forward_traced(hp: &HumpedPath) -> (PathWord, Decomposition) {
    let steps = hp.path.steps();
    let h = hp.hump;
    let (i, r) = (h.up_index, h.flat_run);
    let m1 = &steps[..i];
    let m2 = &steps[h.end_index()..];
    let out = PathWord::concat(&[m2, &[Step::Down], m1, &[Step::Up], &flats(r)]);
    let d = Decomposition::of(
        &hp.path,
        &[("M1", 0, i), ("P", i, h.end_index()), ("M2", h.end_index(), steps.len())],
    );
    (out, d)
}

pub fn psi_star_inverse(w: &PathWord) -> Result<HumpedPath> {
    Ok(psi_star_inverse_traced(w)?.0)
}

pub fn psi_star_inverse_traced(w: &PathWord) -> Result<(HumpedPath, Decomposition)> {
    let c = classify(w);
    if !c.free_motzkin {
        return Err(not_in_domain(format!("\"{w}\" must end at height 0")));
    }
    if !c.star_u {
        return Err(not_in_domain(format!("last non-flat step of \"{w}\" must be U")));
    }
    if c.min_height >= 0 {
        return Err(not_in_domain(format!("\"{w}\" must dip below the x-axis")));
    }
    let n = w.len();
    let steps = w.steps();
    let r = w.trailing_flats();
    let p_u = n - 1 - r;
    let profile = w.height_profile();
    // The inserted D is the step into the FIRST attainment of the minimum:
    // the segment before it stays strictly above -k, while the rest may
    // revisit -k. (The last attainment does not determine the split.)
    let t = profile.iter().position(|&y| y == c.min_height).expect("minimum is attained");
    debug_assert!(t >= 1 && steps[t - 1] == Step::Down);
    let m2 = &steps[..t - 1];
    let m1 = &steps[t..p_u];
    let path = PathWord::concat(&[m1, &[Step::Up], &flats(r), &[Step::Down], m2]);
    let hp = HumpedPath::new(path, m1.len())?;
    let d = Decomposition::of(
        w,
        &[
            ("M2", 0, t - 1),
            ("D", t - 1, t),
            ("M1", t, p_u),
            ("U", p_u, p_u + 1),
            ("F^r", p_u + 1, n),
        ],
    );
    Ok((hp, d))
}

// ---------------------------------------------------------------------------
// rho1: drop the final U and trailing flats / re-append them to order n

pub fn rho1_forward(w: &PathWord) -> Result<PathWord> {
    Ok(rho1_forward_traced(w)?.0)
}

pub fn rho1_forward_traced(w: &PathWord) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix || !c.star_u || c.end_height < 2 || c.end_height % 2 != 0 {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix ending at a positive even height with last non-flat step U"
        )));
    }
    let n = w.len();
    let p_u = n - 1 - w.trailing_flats();
    let out = PathWord::new(w.steps()[..p_u].to_vec());
    let d = Decomposition::of(w, &[("M1", 0, p_u), ("U", p_u, p_u + 1), ("F^r", p_u + 1, n)]);
    Ok((out, d))
}

pub fn rho1_inverse(w: &PathWord, n: usize) -> Result<PathWord> {
    Ok(rho1_inverse_traced(w, n)?.0)
}

pub fn rho1_inverse_traced(w: &PathWord, n: usize) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix || c.end_height % 2 == 0 {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix ending at an odd height"
        )));
    }
    let m = w.len();
    if n <= m {
        return Err(not_in_domain(format!(
            "target order {n} must exceed the input order {m}"
        )));
    }
    let out = PathWord::concat(&[w.steps(), &[Step::Up], &flats(n - m - 1)]);
    let d = Decomposition::of(w, &[("M1", 0, m)]);
    Ok((out, d))
}

// ---------------------------------------------------------------------------
// rho2: raise the last non-flat step to U (identity when it already is)

pub fn rho2_forward(w: &PathWord) -> Result<PathWord> {
    Ok(rho2_forward_traced(w)?.0)
}

pub fn rho2_forward_traced(w: &PathWord) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix || c.end_height < 2 || c.end_height % 2 != 0 {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix ending at a positive even height"
        )));
    }
    if c.star_u {
        return Ok((w.clone(), Decomposition::of(w, &[("M", 0, w.len())])));
    }
    let q = w.last_nonflat().expect("end height >= 2 forces a non-flat step");
    debug_assert_eq!(w.steps()[q], Step::Down);
    let mut steps = w.steps().to_vec();
    steps[q] = Step::Up;
    let d = Decomposition::of(w, &[("head", 0, q), ("D", q, q + 1), ("F^r", q + 1, w.len())]);
    Ok((PathWord::new(steps), d))
}

pub fn rho2_inverse(w: &PathWord, k: usize) -> Result<PathWord> {
    Ok(rho2_inverse_traced(w, k)?.0)
}

pub fn rho2_inverse_traced(w: &PathWord, k: usize) -> Result<(PathWord, Decomposition)> {
    if k < 1 {
        return Err(not_in_domain("rho2 needs k >= 1".into()));
    }
    let c = classify(w);
    if !c.motzkin_prefix || !c.star_u {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix whose last non-flat step is U"
        )));
    }
    let e = c.end_height;
    if e == 2 * k as i64 {
        return Ok((w.clone(), Decomposition::of(w, &[("M", 0, w.len())])));
    }
    if e != 2 * k as i64 + 2 {
        return Err(not_in_domain(format!(
            "\"{w}\" ends at height {e}; expected {} or {} for k = {k}",
            2 * k,
            2 * k + 2
        )));
    }
    let p_u = w.last_nonflat().expect("star_u guarantees a non-flat step");
    let mut steps = w.steps().to_vec();
    steps[p_u] = Step::Down;
    let d = Decomposition::of(w, &[("head", 0, p_u), ("U", p_u, p_u + 1), ("F^r", p_u + 1, w.len())]);
    Ok((PathWord::new(steps), d))
}

// ---------------------------------------------------------------------------
// phi: hook tableau <-> D* prefix (U on row 1, D on row 2, F on the tail)

pub fn phi_forward(t: &HookTableau) -> Result<PathWord> {
    Ok(phi_forward_traced(t)?.0)
}

pub fn phi_forward_traced(t: &HookTableau) -> Result<(PathWord, Decomposition)> {
    if let Err(v) = t.validate() {
        return Err(not_in_domain(format!("invalid tableau: {v}")));
    }
    let n = t.order();
    let k = t.shape().row_difference();
    if (k as i64) > (n as i64) - 2 {
        return Err(not_in_domain(format!(
            "row difference {k} exceeds n-2 = {}; such shapes have no D* image",
            n as i64 - 2
        )));
    }
    let mut steps = vec![Step::Flat; n];
    let mut names = vec!["column"; n];
    for &e in &t.row1 {
        steps[e as usize - 1] = Step::Up;
        names[e as usize - 1] = "row1";
    }
    for &e in &t.row2 {
        steps[e as usize - 1] = Step::Down;
        names[e as usize - 1] = "row2";
    }
    let out = PathWord::new(steps);
    // A tableau has no sub-word ranges; describe the encoded word letterwise.
    let parts: Vec<(&'static str, usize, usize)> =
        names.iter().enumerate().map(|(i, &name)| (name, i, i + 1)).collect();
    let d = Decomposition::of(&out, &parts);
    Ok((out, d))
}

pub fn phi_inverse(w: &PathWord) -> Result<HookTableau> {
    Ok(phi_inverse_traced(w)?.0)
}

pub fn phi_inverse_traced(w: &PathWord) -> Result<(HookTableau, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix {
        return Err(not_in_domain(format!("\"{w}\" dips below the x-axis")));
    }
    if !c.d_star {
        return Err(not_in_domain(format!(
            "first non-up step of \"{w}\" must be D (and must exist)"
        )));
    }
    let mut row1 = Vec::new();
    let mut row2 = Vec::new();
    let mut column = Vec::new();
    let mut parts: Vec<(&'static str, usize, usize)> = Vec::with_capacity(w.len());
    for (i, s) in w.steps().iter().enumerate() {
        let (bucket, name): (&mut Vec<u32>, _) = match s {
            Step::Up => (&mut row1, "row1"),
            Step::Down => (&mut row2, "row2"),
            Step::Flat => (&mut column, "column"),
        };
        bucket.push(i as u32 + 1);
        parts.push((name, i, i + 1));
    }
    let t = HookTableau::new(row1, row2, column)?;
    let d = Decomposition::of(w, &parts);
    Ok((t, d))
}

// ---------------------------------------------------------------------------
// varphi: D* prefix of height k <-> *U prefix of positive even height

pub fn varphi_forward(w: &PathWord) -> Result<PathWord> {
    Ok(varphi_forward_traced(w)?.0)
}

pub fn varphi_forward_traced(w: &PathWord) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix || !c.d_star {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix whose first non-up step is D"
        )));
    }
    let n = w.len();
    let steps = w.steps();
    let k = c.end_height;
    let r1 = w.leading_ups(); // >= 1, and steps[r1] == D
    if k % 2 != 0 {
        // U^r D M1  ->  U^{r-1} F M1 U
        let m1 = &steps[r1 + 1..];
        let out = PathWord::concat(&[&vec![Step::Up; r1 - 1], &[Step::Flat], m1, &[Step::Up]]);
        let d = Decomposition::of(w, &[("U^r", 0, r1), ("D", r1, r1 + 1), ("M1", r1 + 1, n)]);
        return Ok((out, d));
    }
    if c.star_u {
        return Ok((w.clone(), Decomposition::of(w, &[("M", 0, n)])));
    }
    let q = w.last_nonflat().expect("a D* word contains a D");
    debug_assert_eq!(steps[q], Step::Down);
    if q == r1 {
        // U^{r1} D F^{r2}  ->  U^{r1+1} F^{r2}
        let r2 = n - r1 - 1;
        let out = PathWord::concat(&[&vec![Step::Up; r1 + 1], &flats(r2)]);
        let d = Decomposition::of(w, &[("U^r1", 0, r1), ("D", r1, r1 + 1), ("F^r2", r1 + 1, n)]);
        return Ok((out, d));
    }
    // U^{r1} D M1 D F^{r2}  ->  U^{r1-1} F M1 U F^{r2+1}
    let m1 = &steps[r1 + 1..q];
    let r2 = n - 1 - q;
    let out = PathWord::concat(&[
        &vec![Step::Up; r1 - 1],
        &[Step::Flat],
        m1,
        &[Step::Up],
        &flats(r2 + 1),
    ]);
    let d = Decomposition::of(
        w,
        &[
            ("U^r1", 0, r1),
            ("D", r1, r1 + 1),
            ("M1", r1 + 1, q),
            ("D", q, q + 1),
            ("F^r2", q + 1, n),
        ],
    );
    Ok((out, d))
}

pub fn varphi_inverse(w: &PathWord) -> Result<PathWord> {
    Ok(varphi_inverse_traced(w)?.0)
}

pub fn varphi_inverse_traced(w: &PathWord) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix || !c.star_u || c.end_height < 2 || c.end_height % 2 != 0 {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix ending at a positive even height with last non-flat step U"
        )));
    }
    let n = w.len();
    let steps = w.steps();
    if c.d_star {
        return Ok((w.clone(), Decomposition::of(w, &[("M", 0, n)])));
    }
    let r1 = w.leading_ups();
    if steps[r1..].iter().all(|s| *s == Step::Flat) {
        // U^{2k} F^{n-2k}  ->  U^{2k-1} D F^{n-2k}
        debug_assert_eq!(r1 as i64, c.end_height);
        let out = PathWord::concat(&[&vec![Step::Up; r1 - 1], &[Step::Down], &steps[r1..]]);
        let d = Decomposition::of(w, &[("U^2k", 0, r1), ("F^r", r1, n)]);
        return Ok((out, d));
    }
    debug_assert_eq!(steps[r1], Step::Flat); // not D (word is not D*)
    let r2 = w.trailing_flats();
    let p_u = n - 1 - r2;
    let m1 = &steps[r1 + 1..p_u];
    let out = if r2 == 0 {
        // U^r F M1 U  ->  U^{r+1} D M1
        PathWord::concat(&[&vec![Step::Up; r1 + 1], &[Step::Down], m1])
    } else {
        // U^{r1} F M1 U F^{r2}  ->  U^{r1+1} D M1 D F^{r2-1}
        PathWord::concat(&[
            &vec![Step::Up; r1 + 1],
            &[Step::Down],
            m1,
            &[Step::Down],
            &flats(r2 - 1),
        ])
    };
    let d = Decomposition::of(
        w,
        &[
            ("U^r1", 0, r1),
            ("F", r1, r1 + 1),
            ("M1", r1 + 1, p_u),
            ("U", p_u, p_u + 1),
            ("F^r2", p_u + 1, n),
        ],
    );
    Ok((out, d))
}

// ---------------------------------------------------------------------------
// cap_phi: marked hump -> hook tableau, via psi then the two inverses

pub fn cap_phi_forward(hp: &HumpedPath) -> Result<HookTableau> {
    Ok(cap_phi_forward_traced(hp)?.0)
}

pub fn cap_phi_forward_traced(hp: &HumpedPath) -> Result<(HookTableau, Decomposition)> {
    let (prefix, d) = psi_forward_traced(hp);
    let dstar = varphi_inverse(&prefix)?;
    let tableau = phi_inverse(&dstar)?;
    Ok((tableau, d))
}

pub fn cap_phi_inverse(t: &HookTableau) -> Result<HumpedPath> {
    Ok(cap_phi_inverse_traced(t)?.0)
}

pub fn cap_phi_inverse_traced(t: &HookTableau) -> Result<(HumpedPath, Decomposition)> {
    let (dstar, d) = phi_forward_traced(t)?;
    let prefix = varphi_forward(&dstar)?;
    let hp = psi_inverse(&prefix)?;
    Ok((hp, d))
}

// ---------------------------------------------------------------------------
// f_step: prefix of height k -> D* prefix of height k (word grows unless D*)

pub fn f_forward(w: &PathWord) -> Result<PathWord> {
    Ok(f_forward_traced(w)?.0)
}

pub fn f_forward_traced(w: &PathWord) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix {
        return Err(not_in_domain(format!("\"{w}\" dips below the x-axis")));
    }
    let n = w.len();
    if w.first_nonup().is_none() {
        return Err(not_in_domain(format!(
            "\"{w}\" is all up steps; the order must exceed the end height"
        )));
    }
    if c.d_star {
        return Ok((w.clone(), Decomposition::of(w, &[("M", 0, n)])));
    }
    // U^r F M1  ->  U^{r+1} D M1
    let r = w.leading_ups();
    debug_assert_eq!(w.steps()[r], Step::Flat);
    let m1 = &w.steps()[r + 1..];
    let out = PathWord::concat(&[&vec![Step::Up; r + 1], &[Step::Down], m1]);
    let d = Decomposition::of(w, &[("U^r", 0, r), ("F", r, r + 1), ("M1", r + 1, n)]);
    Ok((out, d))
}

pub fn f_inverse(w: &PathWord, n: usize) -> Result<PathWord> {
    Ok(f_inverse_traced(w, n)?.0)
}

pub fn f_inverse_traced(w: &PathWord, n: usize) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix || !c.d_star {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix whose first non-up step is D"
        )));
    }
    let m = w.len();
    if m == n {
        return Ok((w.clone(), Decomposition::of(w, &[("M", 0, m)])));
    }
    if m != n + 1 {
        return Err(not_in_domain(format!(
            "input order {m} must be n = {n} or n + 1 = {}",
            n + 1
        )));
    }
    // U^{r+1} D M1  ->  U^r F M1
    let r1 = w.leading_ups();
    let m1 = &w.steps()[r1 + 1..];
    let out = PathWord::concat(&[&vec![Step::Up; r1 - 1], &[Step::Flat], m1]);
    let d = Decomposition::of(w, &[("U^{r+1}", 0, r1), ("D", r1, r1 + 1), ("M1", r1 + 1, m)]);
    Ok((out, d))
}

// ---------------------------------------------------------------------------
// weight and move_flat: the sign-reversing involution behind the signed sums

/// (−1)^r where r is the number of flat steps strictly after the last up
/// step. Defined for any word containing an up step.
pub fn weight(w: &PathWord) -> Result<i32> {
    let last_u = w
        .steps()
        .iter()
        .rposition(|s| *s == Step::Up)
        .ok_or_else(|| not_in_domain(format!("\"{w}\" has no up step, so no weight")))?;
    let r = w.steps()[last_u + 1..].iter().filter(|s| **s == Step::Flat).count();
    Ok(if r % 2 == 0 { 1 } else { -1 })
}

/// Move the last flat step to the front. Domain: `*U` prefixes of weight −1
/// (an odd number of trailing flats, so the last step is flat). The image has
/// weight +1 and starts with F.
pub fn move_flat(w: &PathWord) -> Result<PathWord> {
    Ok(move_flat_traced(w)?.0)
}

pub fn move_flat_traced(w: &PathWord) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix || !c.star_u {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix whose last non-flat step is U"
        )));
    }
    if w.trailing_flats().is_multiple_of(2) {
        return Err(not_in_domain(format!(
            "\"{w}\" has weight +1; move_flat needs weight -1"
        )));
    }
    let n = w.len();
    let out = PathWord::concat(&[&[Step::Flat], &w.steps()[..n - 1]]);
    let d = Decomposition::of(w, &[("body", 0, n - 1), ("F", n - 1, n)]);
    Ok((out, d))
}

/// Undo `move_flat`: strip the leading flat and append it.
pub fn move_flat_inverse(w: &PathWord) -> Result<PathWord> {
    Ok(move_flat_inverse_traced(w)?.0)
}

pub fn move_flat_inverse_traced(w: &PathWord) -> Result<(PathWord, Decomposition)> {
    let c = classify(w);
    if !c.motzkin_prefix || !c.star_u {
        return Err(not_in_domain(format!(
            "\"{w}\" must be a prefix whose last non-flat step is U"
        )));
    }
    if !w.trailing_flats().is_multiple_of(2) {
        return Err(not_in_domain(format!(
            "\"{w}\" has weight -1; the inverse needs weight +1"
        )));
    }
    if w.steps().first() != Some(&Step::Flat) {
        return Err(not_in_domain(format!("\"{w}\" must start with a flat step")));
    }
    let n = w.len();
    let out = PathWord::concat(&[&w.steps()[1..], &[Step::Flat]]);
    let d = Decomposition::of(w, &[("F", 0, 1), ("body", 1, n)]);
    Ok((out, d))
}
