//! Lattice-path words over the step alphabet U = (1,1), D = (1,-1), F = (1,0).
//!
//! A word is classified by where it is allowed to travel: a *Motzkin prefix*
//! never dips below the x-axis, a *Motzkin path* additionally returns to
//! height 0, a *free* path may dip but ends at 0, and a *Dyck prefix* is a
//! flat-free Motzkin prefix. Two marker classes matter for the bijections:
//! `*U` (the last non-flat step is U) and `D*` (the first non-up step is D).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Default cap on the order accepted by the exhaustive enumerators
/// (3^16 ≈ 43M words is the largest sweep that stays comfortable on a desktop).
pub const DEFAULT_ENUM_CAP: usize = 16;

/// A single step. The declaration order fixes the enumeration order U < D < F.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
    Flat,
}

impl Step {
    pub fn rise(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Flat => 0,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Flat => 'F',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::Up),
            'D' => Some(Step::Down),
            'F' => Some(Step::Flat),
            _ => None,
        }
    }

    /// The step the reverse-complement applies at this position: U and D swap.
    pub fn complement(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
            Step::Flat => Step::Flat,
        }
    }
}

/// A dense word of steps. Heights are computed on demand, never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PathWord(Vec<Step>);

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Self {
        PathWord(steps)
    }

    pub fn empty() -> Self {
        PathWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Heights visited, including both endpoints: length `len() + 1`, starts at 0.
    pub fn height_profile(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.len() + 1);
        let mut y = 0;
        h.push(y);
        for s in &self.0 {
            y += s.rise();
            h.push(y);
        }
        h
    }

    pub fn end_height(&self) -> i64 {
        self.0.iter().map(|s| s.rise()).sum()
    }

    pub fn min_height(&self) -> i64 {
        let mut y = 0;
        let mut min = 0;
        for s in &self.0 {
            y += s.rise();
            min = min.min(y);
        }
        min
    }

    /// Index of the last non-flat step, if any.
    pub fn last_nonflat(&self) -> Option<usize> {
        self.0.iter().rposition(|s| *s != Step::Flat)
    }

    /// Index of the first non-up step, if any.
    pub fn first_nonup(&self) -> Option<usize> {
        self.0.iter().position(|s| *s != Step::Up)
    }

    /// Number of trailing flat steps.
    pub fn trailing_flats(&self) -> usize {
        self.len() - self.0.iter().rposition(|s| *s != Step::Flat).map_or(0, |i| i + 1)
    }

    /// Length of the initial run of up steps.
    pub fn leading_ups(&self) -> usize {
        self.0.iter().position(|s| *s != Step::Up).unwrap_or(self.len())
    }

    /// Concatenate pieces into a new word.
    pub fn concat(parts: &[&[Step]]) -> PathWord {
        let mut v = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            v.extend_from_slice(p);
        }
        PathWord(v)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

// Debug shows the word itself; a step list would just be noise in test output.
impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_path(s)
    }
}

/// Parse a word from its `U`/`D`/`F` spelling. The empty string is the order-0 word.
pub fn parse_path(s: &str) -> Result<PathWord> {
    let mut steps = Vec::with_capacity(s.len());
    for (index, c) in s.chars().enumerate() {
        match Step::from_char(c) {
            Some(step) => steps.push(step),
            None => return Err(Error::InvalidCharacter { found: c, index }),
        }
    }
    Ok(PathWord(steps))
}

/// Membership flags plus the two heights every classification needs.
///
/// The flags are not independent:
/// `motzkin_path ⟺ motzkin_prefix ∧ end_height == 0`,
/// `dyck_prefix ⟺ motzkin_prefix ∧ no flat step`, and
/// `free_motzkin ⟺ end_height == 0`.
/// `star_u`/`d_star` require the witnessing step to exist, so the all-flat
/// word is in neither and `U^n` is not in `D*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathClass {
    pub motzkin_path: bool,
    pub motzkin_prefix: bool,
    pub free_motzkin: bool,
    pub dyck_prefix: bool,
    pub star_u: bool,
    pub d_star: bool,
    pub end_height: i64,
    pub min_height: i64,
}

pub fn classify(w: &PathWord) -> PathClass {
    let end_height = w.end_height();
    let min_height = w.min_height();
    let prefix = min_height >= 0;
    let has_flat = w.steps().contains(&Step::Flat);
    PathClass {
        motzkin_path: prefix && end_height == 0,
        motzkin_prefix: prefix,
        free_motzkin: end_height == 0,
        dyck_prefix: prefix && !has_flat,
        star_u: w.last_nonflat().is_some_and(|i| w.steps()[i] == Step::Up),
        d_star: w.first_nonup().is_some_and(|i| w.steps()[i] == Step::Down),
        end_height,
        min_height,
    }
}

/// Read the word right to left and swap U ↔ D. An involution; sends a path
/// from height a to height b onto one from -b to -a (relative to its start).
pub fn reverse_complement(w: &PathWord) -> PathWord {
    PathWord(w.steps().iter().rev().map(|s| s.complement()).collect())
}

/// A class filter for the enumerator: every listed flag must hold, and the
/// optional height constraints must match exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassFlag {
    MotzkinPath,
    MotzkinPrefix,
    FreeMotzkin,
    DyckPrefix,
    StarU,
    DStar,
}

impl PathClass {
    pub fn has(&self, flag: ClassFlag) -> bool {
        match flag {
            ClassFlag::MotzkinPath => self.motzkin_path,
            ClassFlag::MotzkinPrefix => self.motzkin_prefix,
            ClassFlag::FreeMotzkin => self.free_motzkin,
            ClassFlag::DyckPrefix => self.dyck_prefix,
            ClassFlag::StarU => self.star_u,
            ClassFlag::DStar => self.d_star,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ClassPredicate {
    pub flags: Vec<ClassFlag>,
    pub end_height: Option<i64>,
    pub min_height: Option<i64>,
}

impl ClassPredicate {
    pub fn any() -> Self {
        ClassPredicate::default()
    }

    pub fn flag(flag: ClassFlag) -> Self {
        ClassPredicate { flags: vec![flag], ..Default::default() }
    }

    pub fn and(mut self, flag: ClassFlag) -> Self {
        self.flags.push(flag);
        self
    }

    pub fn with_end_height(mut self, h: i64) -> Self {
        self.end_height = Some(h);
        self
    }

    pub fn with_min_height(mut self, h: i64) -> Self {
        self.min_height = Some(h);
        self
    }

    pub fn matches(&self, class: &PathClass) -> bool {
        self.flags.iter().all(|f| class.has(*f))
            && self.end_height.is_none_or(|h| class.end_height == h)
            && self.min_height.is_none_or(|h| class.min_height == h)
    }
}

/// All 3^n words of order n in lexicographic order (U < D < F).
#[derive(Debug)]
pub struct WordIter {
    state: Option<Vec<Step>>,
}

impl Iterator for WordIter {
    type Item = PathWord;

    fn next(&mut self) -> Option<PathWord> {
        let cur = self.state.as_mut()?;
        let word = PathWord(cur.clone());
        // Odometer advance in U < D < F order.
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            match cur[i] {
                Step::Up => {
                    cur[i] = Step::Down;
                    break;
                }
                Step::Down => {
                    cur[i] = Step::Flat;
                    break;
                }
                Step::Flat => {
                    cur[i] = Step::Up; // carry
                }
            }
        }
        Some(word)
    }
}

/// Every word of order `n`, in lexicographic order. Errors with `SizeLimit`
/// beyond `cap`; 3^n grows too fast for silent acceptance.
pub fn all_words(n: usize, cap: usize) -> Result<WordIter> {
    if n > cap {
        return Err(Error::SizeLimit { n, cap });
    }
    Ok(WordIter { state: Some(vec![Step::Up; n]) })
}

/// The words of order `n` that satisfy `pred`, in lexicographic order.
pub fn enumerate_paths(
    n: usize,
    pred: ClassPredicate,
    cap: usize,
) -> Result<impl Iterator<Item = PathWord>> {
    let words = all_words(n, cap)?;
    Ok(words.filter(move |w| pred.matches(&classify(w))))
}

/// Number of Motzkin prefixes of order `n` ending at height `k`, by the
/// three-term recurrence
/// `MP(n,k) = MP(n-1,k-1) + MP(n-1,k) + MP(n-1,k+1)`, `MP(0,0) = 1`,
/// with out-of-range terms zero. `MP(n,0)` is the n-th Motzkin number.
pub fn mp_count(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 || k < 0 {
        return Err(Error::NegativeIndex(format!("mp_count({n}, {k})")));
    }
    let (n, k) = (n as usize, k as usize);
    if k > n {
        return Ok(BigInt::zero());
    }
    let mut row: Vec<BigInt> = vec![BigInt::from(1)];
    for m in 1..=n {
        let mut next: Vec<BigInt> = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut v = BigInt::zero();
            if j >= 1 {
                v += &row[j - 1];
            }
            if j < row.len() {
                v += &row[j];
            }
            if j + 1 < row.len() {
                v += &row[j + 1];
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row[k].clone())
}
