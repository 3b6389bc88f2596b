//! Standard Young tableaux whose shape is a two-row hook (λ₁, λ₂, 1^m):
//! at most two proper rows plus a single-column tail hanging under the first
//! column. `s_count(n, k)` counts those of order n with row difference
//! λ₁ − λ₂ = k.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape (λ₁, λ₂, 1^tail). Valid iff λ₁ ≥ λ₂ and (tail > 0 ⟹ λ₂ ≥ 1):
/// the tail hangs below the second row's first cell, so it needs one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HookShape {
    pub lambda1: usize,
    pub lambda2: usize,
    pub tail: usize,
}

impl HookShape {
    pub fn new(lambda1: usize, lambda2: usize, tail: usize) -> Result<HookShape> {
        let shape = HookShape { lambda1, lambda2, tail };
        match shape.check() {
            Ok(()) => Ok(shape),
            Err(v) => Err(Error::NotInDomain(v.constraint)),
        }
    }

    fn check(&self) -> std::result::Result<(), Violation> {
        if self.lambda1 < self.lambda2 {
            return Err(Violation::new(format!(
                "shape rows must be weakly decreasing: lambda1 = {} < lambda2 = {}",
                self.lambda1, self.lambda2
            )));
        }
        if self.tail > 0 && self.lambda2 == 0 {
            return Err(Violation::new(format!(
                "a column tail of length {} requires lambda2 >= 1",
                self.tail
            )));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.lambda1 + self.lambda2 + self.tail
    }

    /// Row-length difference λ₁ − λ₂, the statistic the tables are indexed by.
    pub fn row_difference(&self) -> usize {
        self.lambda1 - self.lambda2
    }
}

/// The first constraint a filling violates, as a value — callers that probe
/// candidate fillings want a report, not an error path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: String,
}

impl Violation {
    fn new(constraint: String) -> Violation {
        Violation { constraint }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.constraint)
    }
}

/// A filling of a hook shape. `new` and `from_json` run the full
/// standardness check; `validate` reports the first violated constraint
/// for fillings built by hand.
///
/// Serialized form (the CLI interchange format) is
/// `{"row1": [...], "row2": [...], "column": [...]}` where `column` lists the
/// tail cells below row 2, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HookTableau {
    pub row1: Vec<u32>,
    pub row2: Vec<u32>,
    pub column: Vec<u32>,
}

impl HookTableau {
    pub fn new(row1: Vec<u32>, row2: Vec<u32>, column: Vec<u32>) -> Result<HookTableau> {
        let t = HookTableau { row1, row2, column };
        match t.validate() {
            Ok(()) => Ok(t),
            Err(v) => Err(Error::NotInDomain(v.constraint)),
        }
    }

    pub fn shape(&self) -> HookShape {
        HookShape {
            lambda1: self.row1.len(),
            lambda2: self.row2.len(),
            tail: self.column.len(),
        }
    }

    pub fn order(&self) -> usize {
        self.row1.len() + self.row2.len() + self.column.len()
    }

    /// Check shape validity and standardness, reporting the first violated
    /// constraint: shape, then "entries are a permutation of 1..n", then row
    /// and column monotonicity, then the cross-row/column comparisons.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        self.shape().check()?;

        let n = self.order();
        let mut seen = vec![false; n + 1];
        for &e in self.row1.iter().chain(&self.row2).chain(&self.column) {
            if e < 1 || e as usize > n || seen[e as usize] {
                return Err(Violation::new(format!(
                    "entries must form a permutation of 1..={n}; problem at entry {e}"
                )));
            }
            seen[e as usize] = true;
        }

        for (name, row) in [("row1", &self.row1), ("row2", &self.row2), ("column", &self.column)] {
            for pair in row.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(Violation::new(format!(
                        "{name} must increase strictly: {} >= {}",
                        pair[0], pair[1]
                    )));
                }
            }
        }

        for j in 0..self.row2.len() {
            if self.row1[j] >= self.row2[j] {
                return Err(Violation::new(format!(
                    "column order violated: row1[{j}] = {} >= row2[{j}] = {}",
                    self.row1[j], self.row2[j]
                )));
            }
        }
        if let Some(&top) = self.column.first() {
            if self.row2[0] >= top {
                return Err(Violation::new(format!(
                    "column order violated: row2[0] = {} >= column[0] = {top}",
                    self.row2[0]
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<HookTableau> {
        let raw: HookTableau = serde_json::from_str(s)
            .map_err(|e| Error::NotInDomain(format!("bad tableau JSON: {e}")))?;
        HookTableau::new(raw.row1, raw.row2, raw.column)
    }

    /// Plain-text rendering: left-justified rows, then the tail cells one per line.
    pub fn render_text(&self) -> String {
        let mut lines = Vec::new();
        let join = |r: &[u32]| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
        if !self.row1.is_empty() {
            lines.push(join(&self.row1));
        }
        if !self.row2.is_empty() {
            lines.push(join(&self.row2));
        }
        for &e in &self.column {
            lines.push(e.to_string());
        }
        lines.join("\n")
    }
}

/// The shapes of order n with row difference k, smallest λ₂ first.
fn shapes(n: usize, k: usize) -> Vec<HookShape> {
    let mut out = Vec::new();
    if k == n {
        // Single row; the only shape with lambda2 = 0.
        out.push(HookShape { lambda1: n, lambda2: 0, tail: 0 });
        return out;
    }
    if k > n {
        return out;
    }
    let mut l2 = 1;
    while 2 * l2 + k <= n {
        out.push(HookShape { lambda1: l2 + k, lambda2: l2, tail: n - k - 2 * l2 });
        l2 += 1;
    }
    out
}

/// All standard fillings of hook shapes of order n with row difference k,
/// ordered lexicographically by (shape, row1, row2).
pub fn enumerate_syt(n: usize, k: usize, cap: usize) -> Result<Vec<HookTableau>> {
    if k > n {
        return Err(Error::Domain(format!("row difference k = {k} exceeds order n = {n}")));
    }
    if n > cap {
        return Err(Error::SizeLimit { n, cap });
    }
    let mut out = Vec::new();
    for shape in shapes(n, k) {
        fill(&shape, n, &mut out);
    }
    Ok(out)
}

/// Backtracking fill: place 1..n in order; each goes to the next free cell of
/// row 1, row 2, or the tail. Trying row1 → row2 → column yields fillings in
/// lexicographic (row1, row2) order. A row-2 cell needs the row-1 cell above
/// it; a tail cell needs row2[0] (the cell it hangs under).
fn fill(shape: &HookShape, n: usize, out: &mut Vec<HookTableau>) {
    let mut row1 = Vec::with_capacity(shape.lambda1);
    let mut row2 = Vec::with_capacity(shape.lambda2);
    let mut column = Vec::with_capacity(shape.tail);
    fn recurse(
        entry: u32,
        n: usize,
        shape: &HookShape,
        row1: &mut Vec<u32>,
        row2: &mut Vec<u32>,
        column: &mut Vec<u32>,
        out: &mut Vec<HookTableau>,
    ) {
        if entry as usize > n {
            out.push(HookTableau { row1: row1.clone(), row2: row2.clone(), column: column.clone() });
            return;
        }
        if row1.len() < shape.lambda1 {
            row1.push(entry);
            recurse(entry + 1, n, shape, row1, row2, column, out);
            row1.pop();
        }
        if row2.len() < shape.lambda2 && row2.len() < row1.len() {
            row2.push(entry);
            recurse(entry + 1, n, shape, row1, row2, column, out);
            row2.pop();
        }
        if column.len() < shape.tail && !row2.is_empty() {
            column.push(entry);
            recurse(entry + 1, n, shape, row1, row2, column, out);
            column.pop();
        }
    }
    recurse(1, n, shape, &mut row1, &mut row2, &mut column, out);
}

/// Number of standard hook tableaux of order n with row difference k.
pub fn s_count(n: usize, k: usize, cap: usize) -> Result<BigInt> {
    Ok(BigInt::from(enumerate_syt(n, k, cap)?.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::DEFAULT_ENUM_CAP;

    #[test]
    fn shape_constraints() {
        assert!(HookShape::new(3, 1, 2).is_ok());
        assert!(HookShape::new(2, 2, 0).is_ok());
        assert!(HookShape::new(1, 2, 0).is_err());
        assert!(HookShape::new(3, 0, 1).is_err(), "tail without a second row");
        assert_eq!(HookShape::new(3, 1, 2).unwrap().order(), 6);
    }

    #[test]
    fn validate_reports_first_violation() {
        let ok = HookTableau::new(vec![1, 2, 4, 5, 7], vec![3, 6, 8], vec![9]);
        assert!(ok.is_ok());

        let t = HookTableau { row1: vec![2, 3], row2: vec![1], column: vec![] };
        let v = t.validate().unwrap_err();
        assert!(v.constraint.contains("row1[0] = 2 >= row2[0] = 1"), "{v}");

        let t = HookTableau { row1: vec![1, 3], row2: vec![2], column: vec![2] };
        assert!(t.validate().unwrap_err().constraint.contains("permutation"));

        let t = HookTableau { row1: vec![1, 4], row2: vec![2], column: vec![3] };
        assert!(t.validate().is_ok());

        let t = HookTableau { row1: vec![1, 2], row2: vec![3], column: vec![] };
        assert!(t.validate().is_ok());

        // Empty tableau is the unique filling of the empty shape.
        assert!(HookTableau::new(vec![], vec![], vec![]).is_ok());
    }

    #[test]
    fn json_and_text_rendering() {
        let t = HookTableau::new(vec![1, 2, 4, 5, 7], vec![3, 6, 8], vec![9]).unwrap();
        let js = t.to_json();
        assert_eq!(js, r#"{"row1":[1,2,4,5,7],"row2":[3,6,8],"column":[9]}"#);
        assert_eq!(HookTableau::from_json(&js).unwrap(), t);
        assert!(HookTableau::from_json(r#"{"row1":[2,3],"row2":[1],"column":[]}"#).is_err());
        assert_eq!(t.render_text(), "1 2 4 5 7\n3 6 8\n9");
    }

    #[test]
    fn enumeration_small_cases() {
        let ts = enumerate_syt(3, 1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(
            ts,
            vec![
                HookTableau { row1: vec![1, 2], row2: vec![3], column: vec![] },
                HookTableau { row1: vec![1, 3], row2: vec![2], column: vec![] },
            ]
        );
        assert!(enumerate_syt(2, 1, DEFAULT_ENUM_CAP).unwrap().is_empty());
        assert_eq!(enumerate_syt(3, 3, DEFAULT_ENUM_CAP).unwrap().len(), 1);
        assert_eq!(
            enumerate_syt(0, 0, DEFAULT_ENUM_CAP).unwrap(),
            vec![HookTableau { row1: vec![], row2: vec![], column: vec![] }]
        );
        assert!(enumerate_syt(3, 4, DEFAULT_ENUM_CAP).is_err());
    }

    #[test]
    fn counts_match_known_values() {
        let c = |n, k| s_count(n, k, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(c(8, 0), BigInt::from(91));
        assert_eq!(c(5, 1), BigInt::from(9));
        assert_eq!(c(4, 4), BigInt::from(1));
        assert_eq!(c(2, 1), BigInt::from(0), "k = n-1 is always empty");
        assert_eq!(c(3, 3), BigInt::from(1));
        assert_eq!(c(0, 0), BigInt::from(1));
    }

    #[test]
    fn single_column_restriction_counts_compositions() {
        // Tableaux with lambda2 <= 1 are classical hooks (a, 1^b); there are
        // 2^(n-1) standard fillings of order n in total across all shapes.
        for n in 1..=8usize {
            let mut total = BigInt::from(0);
            for k in 0..=n {
                for t in enumerate_syt(n, k, DEFAULT_ENUM_CAP).unwrap() {
                    if t.shape().lambda2 <= 1 {
                        total += 1;
                    }
                }
            }
            assert_eq!(total, BigInt::from(1) << (n - 1), "order {n}");
        }
    }
}
