//! Gelfand-Tsetlin patterns, their bijection with tableaux, and the
//! piecewise-linear form of the Bender-Knuth involutions.

use crate::algebra::ExtInt;

use super::ssyt::{Tableau, ValidationError};

/// A triangular array `A_{ij}` (`1 <= i <= j <= n`) of nonnegative integers
/// with `A_{i,j+1} >= A_{ij} >= A_{i+1,j+1}`. Row `j` of the pattern is the
/// shape of the subtableau on letters `1..=j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GTPattern {
    n: usize,
    /// `rows[j-1] = [A_{1j}, ..., A_{jj}]`.
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, ValidationError> {
        let n = rows.len();
        if n == 0 {
            return Err(ValidationError("a pattern needs at least one row".into()));
        }
        for (jx, row) in rows.iter().enumerate() {
            if row.len() != jx + 1 {
                return Err(ValidationError(format!(
                    "pattern row {} must have {} entries, found {}",
                    jx + 1,
                    jx + 1,
                    row.len()
                )));
            }
            if row.iter().any(|&v| v < 0) {
                return Err(ValidationError(format!("negative entry in pattern row {}", jx + 1)));
            }
        }
        let p = GTPattern { n, rows };
        for j in 1..n {
            for i in 1..=j {
                if !(p.a(i, j + 1) >= p.a(i, j) && p.a(i, j) >= p.a(i + 1, j + 1)) {
                    return Err(ValidationError(format!(
                        "interlacing fails at A_{{{i},{j}}}"
                    )));
                }
            }
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The entry `A_{ij}`, 1-based, for `1 <= i <= j <= n`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        assert!(1 <= i && i <= j && j <= self.n, "A_{{{i},{j}}} out of range");
        self.rows[j - 1][i - 1]
    }

    /// Pattern rows, `rows[j-1] = [A_{1j}, ..., A_{jj}]`.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The tableau whose row `i` contains `A_{ij} - A_{i,j-1}` copies of
    /// each letter `j` (with `A_{i,i-1} = 0`).
    pub fn to_tableau(&self) -> Tableau {
        let n = self.n;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for i in 1..=n {
            let mut row = Vec::new();
            for j in i..=n {
                let prev = if j == i { 0 } else { self.a(i, j - 1) };
                let count = self.a(i, j) - prev;
                for _ in 0..count {
                    row.push(j as u8);
                }
            }
            if row.is_empty() {
                break;
            }
            rows.push(row);
        }
        Tableau::new(n, rows).expect("a Gelfand-Tsetlin pattern encodes an SSYT")
    }

    /// The pattern of a tableau: `A_{ij}` counts the letters `<= j` in row
    /// `i`.
    pub fn from_tableau(t: &Tableau) -> GTPattern {
        let n = t.n();
        let mut rows = Vec::with_capacity(n);
        for j in 1..=n {
            let mut row = Vec::with_capacity(j);
            for i in 1..=j {
                let count = match t.rows().get(i - 1) {
                    None => 0,
                    Some(r) => r.iter().filter(|&&v| (v as usize) <= j).count() as i64,
                };
                row.push(count);
            }
            rows.push(row);
        }
        GTPattern::new(rows).expect("an SSYT encodes a Gelfand-Tsetlin pattern")
    }

    /// Entry lookup with the boundary conventions `A_{0,j} = +infinity` and
    /// `A_{i,i-1} = 0`.
    fn ext(&self, i: usize, j: usize) -> ExtInt {
        if i == 0 {
            return ExtInt::PosInf;
        }
        if j + 1 == i {
            return ExtInt::Fin(0);
        }
        ExtInt::Fin(self.a(i, j))
    }

    /// The piecewise-linear Bender-Knuth involution: only row `r` changes,
    /// by `A'_{ir} = min(A_{i-1,r-1}, A_{i,r+1}) + max(A_{i,r-1}, A_{i+1,r+1}) - A_{ir}`.
    pub fn bk_piecewise_linear(&self, r: usize) -> GTPattern {
        assert!((1..self.n).contains(&r), "index {r} outside 1..={}", self.n - 1);
        let mut rows = self.rows.clone();
        for i in 1..=r {
            let low = self.ext(i - 1, r - 1).min(self.ext(i, r + 1));
            let high = self.ext(i, r - 1).max(self.ext(i + 1, r + 1));
            let v = (low + high - ExtInt::Fin(self.a(i, r))).expect_finite();
            rows[r - 1][i - 1] = v;
        }
        GTPattern::new(rows).expect("piecewise-linear Bender-Knuth preserves interlacing")
    }

    /// All patterns with `n` rows and entries at most `max_entry`.
    pub fn enumerate(n: usize, max_entry: i64) -> Vec<GTPattern> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<i64>> = Vec::new();
        extend(n, max_entry, &mut rows, &mut out);
        return out;

        fn extend(n: usize, max: i64, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GTPattern>) {
            if rows.len() == n {
                out.push(GTPattern { n, rows: rows.clone() });
                return;
            }
            let j = rows.len(); // building row j+1 with j+1 entries
            let mut row = vec![0i64; j + 1];
            fill(n, max, rows, &mut row, 0, out);

            fn fill(
                n: usize,
                max: i64,
                rows: &mut Vec<Vec<i64>>,
                row: &mut Vec<i64>,
                i: usize,
                out: &mut Vec<GTPattern>,
            ) {
                let j = rows.len();
                if i == row.len() {
                    rows.push(row.clone());
                    extend(n, max, rows, out);
                    rows.pop();
                    return;
                }
                // A_{i+1, j+1} ranges over [A_{i+1,j} (or 0), A_{i,j} (or max)]
                let lo = if i < j { rows[j - 1][i] } else { 0 };
                let hi = if i == 0 { max } else { rows[j - 1][i - 1] };
                for v in lo..=hi {
                    row[i] = v;
                    fill(n, max, rows, row, i + 1, out);
                }
            }
        }
    }
}
