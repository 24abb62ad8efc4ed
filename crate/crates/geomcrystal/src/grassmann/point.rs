//! Exact points of the Grassmannian Gr(k,n) as row spans of full-rank
//! n×k matrices, with Plücker coordinates labeled by sets (reduced mod n)
//! or by signed ordered lists.

use crate::algebra::Field;
use std::cell::RefCell;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("matrix does not have full rank k")]
    NotFullRank,
    #[error("the deformation parameter t must be nonzero")]
    ZeroParameter,
    #[error("undefined point: Plücker coordinate {plucker} vanishes")]
    UndefinedPoint { plucker: String },
    #[error("rational map undefined: {0} vanishes at this point")]
    Degenerate(String),
}

/// A Plücker coordinate label: either a set of integers (reduced mod n,
/// order irrelevant, wrong-size sets give value 0) or an ordered list whose
/// value is signed by the sorting permutation (repeats give 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PluckerIndex {
    Set(Vec<i64>),
    Ordered(Vec<i64>),
}

impl PluckerIndex {
    pub fn set(elems: impl IntoIterator<Item = i64>) -> Self {
        PluckerIndex::Set(elems.into_iter().collect())
    }

    pub fn ordered(elems: impl IntoIterator<Item = i64>) -> Self {
        PluckerIndex::Ordered(elems.into_iter().collect())
    }
}

/// The integer interval `[a, b]` (empty when `a > b`).
pub fn interval(a: i64, b: i64) -> Vec<i64> {
    (a..=b).collect()
}

/// Reduce an integer to its residue in `[1, n]`.
pub fn residue_in_1n(x: i64, n: i64) -> i64 {
    let r = x.rem_euclid(n);
    if r == 0 {
        n
    } else {
        r
    }
}

/// Human-readable label for a set-valued Plücker index, used in errors.
pub fn set_label(n: usize, elems: &[i64]) -> String {
    let mut v: Vec<i64> = elems.iter().map(|&x| residue_in_1n(x, n as i64)).collect();
    v.sort_unstable();
    v.dedup();
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("P{{{}}}", inner.join(","))
}

/// A point of Gr(k,n): the row span of a full-rank n×k matrix over an
/// exact field. Maximal minors are memoized per point.
#[derive(Debug)]
pub struct GrassmannPoint<F: Field> {
    n: usize,
    k: usize,
    rows: Vec<Vec<F>>,
    minors: RefCell<HashMap<Vec<u8>, F>>,
}

impl<F: Field> Clone for GrassmannPoint<F> {
    fn clone(&self) -> Self {
        GrassmannPoint {
            n: self.n,
            k: self.k,
            rows: self.rows.clone(),
            minors: RefCell::new(self.minors.borrow().clone()),
        }
    }
}

impl<F: Field> PartialEq for GrassmannPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.rows == other.rows
    }
}

impl<F: Field> GrassmannPoint<F> {
    /// Build a point from the rows of an n×k matrix, checking full rank.
    pub fn new(n: usize, k: usize, rows: Vec<Vec<F>>) -> Result<Self, GrassmannError> {
        if n == 0 || k == 0 || k > n {
            return Err(GrassmannError::BadDimensions(format!(
                "need 1 <= k <= n, got n={n}, k={k}"
            )));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != k) {
            return Err(GrassmannError::BadDimensions(format!(
                "expected an {n}x{k} matrix"
            )));
        }
        if rank_gauss(rows.clone()) != k {
            return Err(GrassmannError::NotFullRank);
        }
        Ok(Self::from_rows_unchecked(n, k, rows))
    }

    /// Internal constructor for results of rank-preserving row operations.
    pub(crate) fn from_rows_unchecked(n: usize, k: usize, rows: Vec<Vec<F>>) -> Self {
        GrassmannPoint {
            n,
            k,
            rows,
            minors: RefCell::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// The Plücker coordinate for an arbitrary index.
    pub fn plucker(&self, idx: &PluckerIndex) -> F {
        match idx {
            PluckerIndex::Set(elems) => self.plucker_set(elems.iter().copied()),
            PluckerIndex::Ordered(elems) => self.plucker_ordered(elems),
        }
    }

    /// Set-form Plücker coordinate: reduce mod n, drop repeats (a repeat
    /// shrinks the set), and return 0 unless exactly k rows remain.
    pub fn plucker_set(&self, elems: impl IntoIterator<Item = i64>) -> F {
        let n = self.n as i64;
        let mut v: Vec<u8> = elems
            .into_iter()
            .map(|x| residue_in_1n(x, n) as u8)
            .collect();
        v.sort_unstable();
        v.dedup();
        if v.len() != self.k {
            return F::zero();
        }
        self.minor_sorted(&v)
    }

    /// Ordered-form Plücker coordinate: the determinant whose j-th row is
    /// the listed row of the matrix; repeats give 0 and transpositions flip
    /// the sign.
    pub fn plucker_ordered(&self, elems: &[i64]) -> F {
        if elems.len() != self.k {
            return F::zero();
        }
        let n = self.n as i64;
        let list: Vec<u8> = elems.iter().map(|&x| residue_in_1n(x, n) as u8).collect();
        // Sign of the sorting permutation; repeats mean a repeated row.
        let mut inversions = 0usize;
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                if list[i] == list[j] {
                    return F::zero();
                }
                if list[i] > list[j] {
                    inversions += 1;
                }
            }
        }
        let mut sorted = list;
        sorted.sort_unstable();
        let value = self.minor_sorted(&sorted);
        if inversions % 2 == 1 {
            -value
        } else {
            value
        }
    }

    fn minor_sorted(&self, rows_1based: &[u8]) -> F {
        if let Some(v) = self.minors.borrow().get(rows_1based) {
            return v.clone();
        }
        let sub: Vec<Vec<F>> = rows_1based
            .iter()
            .map(|&r| self.rows[r as usize - 1].clone())
            .collect();
        let value = det_gauss(sub);
        self.minors
            .borrow_mut()
            .insert(rows_1based.to_vec(), value.clone());
        value
    }

    /// All set-form Plücker coordinates, keyed by sorted row sets.
    pub fn all_pluckers(&self) -> Vec<(Vec<u8>, F)> {
        let mut out = Vec::new();
        let mut subset: Vec<u8> = (1..=self.k as u8).collect();
        loop {
            out.push((subset.clone(), self.minor_sorted(&subset)));
            // next k-subset of [1, n] in lexicographic order
            let mut i = self.k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if subset[i] < (self.n - self.k + 1 + i) as u8 {
                    subset[i] += 1;
                    for j in i + 1..self.k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Projective equality: identical vanishing patterns and equal ratios
    /// against a fixed nonzero reference coordinate (which implies equality
    /// of all pairwise cross-ratios).
    pub fn projectively_equal(&self, other: &Self) -> bool {
        if self.n != other.n || self.k != other.k {
            return false;
        }
        let mine = self.all_pluckers();
        let theirs = other.all_pluckers();
        let anchor = mine.iter().position(|(_, v)| !v.is_zero());
        let Some(a) = anchor else {
            return false; // unreachable for full-rank points
        };
        if theirs[a].1.is_zero() {
            return false;
        }
        let (pa, qa) = (&mine[a].1, &theirs[a].1);
        mine.iter().zip(theirs.iter()).all(|((_, p), (_, q))| {
            p.clone() * qa.clone() == q.clone() * pa.clone()
        })
    }

    /// Replace row `target` by `row_target + a * row_source` (1-based).
    /// This is a rank-preserving row operation.
    pub(crate) fn add_row_multiple(&self, target: usize, source: usize, a: &F) -> Self {
        assert!(target != source && 1 <= target && target <= self.n && 1 <= source && source <= self.n);
        let mut rows = self.rows.clone();
        for c in 0..self.k {
            let add = a.clone() * self.rows[source - 1][c].clone();
            rows[target - 1][c] = rows[target - 1][c].clone() + add;
        }
        Self::from_rows_unchecked(self.n, self.k, rows)
    }

    /// Check one Grassmann-Plücker relation: the alternating sum over
    /// deletions of the (k+1)-list paired with insertions into the
    /// (k-1)-list vanishes.
    pub fn grassmann_plucker_check(&self, i_list: &[i64], j_list: &[i64]) -> bool {
        assert_eq!(i_list.len(), self.k + 1, "first list must have k+1 entries");
        assert_eq!(j_list.len(), self.k.saturating_sub(1), "second list must have k-1 entries");
        let mut acc = F::zero();
        for r in 0..=self.k {
            let mut left: Vec<i64> = i_list.to_vec();
            let ir = left.remove(r);
            let mut right: Vec<i64> = Vec::with_capacity(self.k);
            right.push(ir);
            right.extend_from_slice(j_list);
            let term = self.plucker_ordered(&left) * self.plucker_ordered(&right);
            // (-1)^r with r starting at 1 in the usual indexing; here r is
            // 0-based so the parity flips.
            if r % 2 == 0 {
                acc = acc - term;
            } else {
                acc = acc + term;
            }
        }
        acc.is_zero()
    }

    /// Check the three-term Plücker relation for a (k-2)-set I and
    /// a <= b <= c <= d.
    pub fn three_term_check(&self, i_set: &[i64], a: i64, b: i64, c: i64, d: i64) -> bool {
        assert!(a <= b && b <= c && c <= d);
        let with = |x: i64, y: i64| -> F {
            let mut s = i_set.to_vec();
            s.push(x);
            s.push(y);
            self.plucker_set(s)
        };
        let lhs = with(a, b) * with(c, d) + with(a, d) * with(b, c);
        let rhs = with(a, c) * with(b, d);
        lhs == rhs
    }
}

/// Determinant of a square matrix over a field by Gaussian elimination
/// with column pivoting.
pub(crate) fn det_gauss<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut flipped = false;
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return F::zero();
        };
        if p != col {
            m.swap(p, col);
            flipped = !flipped;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / pivot.clone();
            for c in col..n {
                let sub = factor.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - sub;
            }
        }
    }
    if flipped {
        -det
    } else {
        det
    }
}

/// Rank of a rectangular matrix over a field.
pub(crate) fn rank_gauss<F: Field>(mut m: Vec<Vec<F>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / pivot.clone();
            for c in col..cols {
                let sub = factor.clone() * m[rank][c].clone();
                m[r][c] = m[r][c].clone() - sub;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
