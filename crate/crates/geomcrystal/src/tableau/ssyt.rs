//! Tableaux, reading words, and the bracketing crystal operators.

use std::fmt;

use thiserror::Error;

/// A malformed combinatorial object (tableau, pattern, or rectangle).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{0}")]
pub struct ValidationError(pub String);

/// Raising (`e_i`) or lowering (`f_i`) direction of a crystal operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// A semistandard Young tableau over the alphabet `1..=n`: rows weakly
/// increase left to right, columns strictly increase top to bottom, row
/// lengths weakly decrease, and there are at most `n` rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(n: usize, rows: Vec<Vec<u8>>) -> Result<Self, ValidationError> {
        if n == 0 || n > u8::MAX as usize {
            return Err(ValidationError(format!("alphabet size {n} out of range")));
        }
        if rows.len() > n {
            return Err(ValidationError(format!(
                "{} rows exceed the alphabet size {n}",
                rows.len()
            )));
        }
        if rows.iter().any(Vec::is_empty) {
            return Err(ValidationError("empty row".into()));
        }
        for w in rows.windows(2) {
            if w[1].len() > w[0].len() {
                return Err(ValidationError("row lengths must weakly decrease".into()));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > n {
                    return Err(ValidationError(format!(
                        "entry {v} at row {}, column {} outside 1..={n}",
                        i + 1,
                        j + 1
                    )));
                }
                if j > 0 && row[j - 1] > v {
                    return Err(ValidationError(format!("row {} is not weakly increasing", i + 1)));
                }
                if i > 0 && rows[i - 1][j] >= v {
                    return Err(ValidationError(format!(
                        "column {} is not strictly increasing",
                        j + 1
                    )));
                }
            }
        }
        Ok(Tableau { n, rows })
    }

    /// The empty tableau (no boxes) over the alphabet `1..=n`.
    pub fn empty(n: usize) -> Self {
        Tableau { n, rows: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `Some((k, l))` if the shape is a `k x l` rectangle with `k >= 1`.
    pub fn rectangular_shape(&self) -> Option<(usize, usize)> {
        let k = self.rows.len();
        if k == 0 {
            return None;
        }
        let l = self.rows[0].len();
        self.rows.iter().all(|r| r.len() == l).then_some((k, l))
    }

    /// The content vector: entry `i-1` counts the letters `i`.
    pub fn content(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.n];
        for row in &self.rows {
            for &v in row {
                c[v as usize - 1] += 1;
            }
        }
        c
    }

    /// The row reading word: rows concatenated starting with the bottom row.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Cell coordinates `(row, col)` (0-based) parallel to
    /// [`Tableau::reading_word`].
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for i in (0..self.rows.len()).rev() {
            for j in 0..self.rows[i].len() {
                cells.push((i, j));
            }
        }
        cells
    }

    /// The bracketing statistics `(eps_i, phi_i)` for `1 <= i <= n-1`,
    /// computed on the reading word.
    pub fn crystal_stats(&self, i: usize) -> (i64, i64) {
        assert!((1..self.n).contains(&i), "index {i} outside 1..={}", self.n - 1);
        let b = bracket(&self.reading_word(), i as u8);
        (b.eps, b.phi)
    }

    /// Apply `e_i` (raise) or `f_i` (lower) for `1 <= i <= n-1`; `None` when
    /// the operator is undefined (the bracketing has no unmatched letter to
    /// change).
    pub fn crystal_op(&self, i: usize, dir: Direction) -> Option<Tableau> {
        assert!((1..self.n).contains(&i), "index {i} outside 1..={}", self.n - 1);
        let word = self.reading_word();
        let b = bracket(&word, i as u8);
        let (pos, new_value) = match dir {
            Direction::Raise => (b.raise_pos?, i as u8),
            Direction::Lower => (b.lower_pos?, i as u8 + 1),
        };
        let (r, c) = self.reading_cells()[pos];
        let mut rows = self.rows.clone();
        rows[r][c] = new_value;
        Some(Tableau { n: self.n, rows })
    }

    /// All SSYT of the given shape over `1..=n`.
    pub fn enumerate(n: usize, shape: &[usize]) -> Vec<Tableau> {
        assert!(shape.windows(2).all(|w| w[1] <= w[0]), "shape must weakly decrease");
        assert!(!shape.contains(&0), "shape parts must be positive");
        let mut out = Vec::new();
        if shape.len() > n {
            return out;
        }
        let mut rows: Vec<Vec<u8>> = shape.iter().map(|&l| vec![0; l]).collect();
        fill(n, shape, &mut rows, 0, 0, &mut out);
        return out;

        fn fill(
            n: usize,
            shape: &[usize],
            rows: &mut Vec<Vec<u8>>,
            i: usize,
            j: usize,
            out: &mut Vec<Tableau>,
        ) {
            if i == shape.len() {
                out.push(Tableau { n, rows: rows.clone() });
                return;
            }
            let (ni, nj) = if j + 1 == shape[i] { (i + 1, 0) } else { (i, j + 1) };
            let lo = {
                let left = if j > 0 { rows[i][j - 1] } else { 1 };
                let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
                left.max(above)
            };
            for v in lo..=n as u8 {
                rows[i][j] = v;
                fill(n, shape, rows, ni, nj, out);
            }
            rows[i][j] = 0;
        }
    }

    /// Parse the text format: one row per line, comma-separated entries.
    /// Blank input is the empty tableau.
    pub fn parse(n: usize, text: &str) -> Result<Self, ValidationError> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u8>()
                        .map_err(|_| ValidationError(format!("bad entry `{}`", tok.trim())))
                })
                .collect::<Result<Vec<u8>, _>>()?;
            rows.push(row);
        }
        Tableau::new(n, rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            write!(f, "{}", line.join(","))?;
        }
        Ok(())
    }
}

/// Result of the bracketing algorithm on a word for the letter pair
/// `(i, i+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracketing {
    /// Number of unmatched `i+1` letters.
    pub eps: i64,
    /// Number of unmatched `i` letters.
    pub phi: i64,
    /// Word position of the leftmost unmatched `i+1` (the letter `e_i`
    /// changes to `i`).
    pub raise_pos: Option<usize>,
    /// Word position of the rightmost unmatched `i` (the letter `f_i`
    /// changes to `i+1`).
    pub lower_pos: Option<usize>,
}

/// Run the bracketing algorithm: ignore letters other than `i` and `i+1`,
/// repeatedly cross out adjacent pairs `(i+1, i)`, and report the survivors
/// `i^phi (i+1)^eps`.
pub fn bracket(word: &[u8], i: u8) -> Bracketing {
    let mut unmatched_hi: Vec<usize> = Vec::new();
    let mut unmatched_lo: Vec<usize> = Vec::new();
    for (pos, &v) in word.iter().enumerate() {
        if v == i + 1 {
            unmatched_hi.push(pos);
        } else if v == i {
            if unmatched_hi.pop().is_none() {
                unmatched_lo.push(pos);
            }
        }
    }
    Bracketing {
        eps: unmatched_hi.len() as i64,
        phi: unmatched_lo.len() as i64,
        raise_pos: unmatched_hi.first().copied(),
        lower_pos: unmatched_lo.last().copied(),
    }
}
