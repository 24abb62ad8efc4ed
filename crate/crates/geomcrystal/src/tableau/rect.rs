//! Rectangle coordinates on k-row rectangular tableaux and their rotation
//! and reflection symmetries.

use super::gt::GTPattern;
use super::ssyt::{Tableau, ValidationError};

/// Which rectangle symmetry to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryKind {
    /// 180-degree rotation with entry complement `v -> n-v+1`; stays in the
    /// same chart.
    Rot,
    /// Column complement with reversed column order; lands in the
    /// complementary chart (`k -> n-k`).
    Refl,
}

/// Integer coordinates `(B_{ij}, L)` on k-row rectangular tableaux, indexed
/// by `R_k = {(i,j) : 1 <= i <= k, i <= j <= i+n-k-1}`. Padding the array
/// with `L` above-right of the band and `0` below it yields the associated
/// Gelfand-Tsetlin pattern; `L` is the number of columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KRectangle {
    n: usize,
    k: usize,
    /// Entries in row-major order over `R_k`.
    b: Vec<i64>,
    l: i64,
}

impl KRectangle {
    pub fn new(n: usize, k: usize, b: Vec<i64>, l: i64) -> Result<Self, ValidationError> {
        if !(1..n).contains(&k) {
            return Err(ValidationError(format!("k={k} outside 1..={}", n.saturating_sub(1))));
        }
        if b.len() != k * (n - k) {
            return Err(ValidationError(format!(
                "expected {} entries for the {k}-row chart, found {}",
                k * (n - k),
                b.len()
            )));
        }
        if l < 0 {
            return Err(ValidationError(format!("column count L={l} is negative")));
        }
        let r = KRectangle { n, k, b, l };
        r.to_gt()?;
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The number of columns of the underlying tableau.
    pub fn l(&self) -> i64 {
        self.l
    }

    /// Entries in row-major order over `R_k`.
    pub fn entries(&self) -> &[i64] {
        &self.b
    }

    fn index(&self, i: usize, j: usize) -> usize {
        assert!(
            1 <= i && i <= self.k && i <= j && j <= i + self.n - self.k - 1,
            "({i},{j}) outside the index set of the {}-row chart",
            self.k
        );
        (i - 1) * (self.n - self.k) + (j - i)
    }

    /// The coordinate `B_{ij}` for `(i,j)` in `R_k`.
    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.b[self.index(i, j)]
    }

    /// The padded array value `A_{ij}` for any `1 <= i <= j <= n`.
    pub fn padded(&self, i: usize, j: usize) -> i64 {
        assert!(1 <= i && i <= j && j <= self.n, "A_{{{i},{j}}} out of range");
        if i > self.k {
            0
        } else if j > i + self.n - self.k - 1 {
            self.l
        } else {
            self.b(i, j)
        }
    }

    /// The associated Gelfand-Tsetlin pattern; errors when the coordinates
    /// violate interlacing.
    pub fn to_gt(&self) -> Result<GTPattern, ValidationError> {
        let rows = (1..=self.n)
            .map(|j| (1..=j).map(|i| self.padded(i, j)).collect())
            .collect();
        GTPattern::new(rows)
    }

    /// Read rectangle coordinates off a pattern that is padded in the
    /// `k`-row band form.
    pub fn from_gt(p: &GTPattern, k: usize) -> Result<Self, ValidationError> {
        let n = p.n();
        if !(1..n).contains(&k) {
            return Err(ValidationError(format!("k={k} outside 1..={}", n.saturating_sub(1))));
        }
        let l = p.a(1, n - k + 1);
        let mut b = Vec::with_capacity(k * (n - k));
        for i in 1..=k {
            for j in i..=i + n - k - 1 {
                b.push(p.a(i, j));
            }
        }
        let r = KRectangle::new(n, k, b, l)?;
        if &r.to_gt().expect("just validated") != p {
            return Err(ValidationError(format!(
                "pattern is not padded in the {k}-row band form"
            )));
        }
        Ok(r)
    }

    /// The row count `b_{ij} = B_{ij} - B_{i,j-1}`: the number of letters
    /// `j` in row `i` of the tableau. Defined for `1 <= i <= k`,
    /// `i <= j <= i+n-k`, with `B_{i,i-1} = 0` and `B_{i,i+n-k} = L`.
    pub fn row_count(&self, i: usize, j: usize) -> i64 {
        assert!(
            1 <= i && i <= self.k && i <= j && j <= i + self.n - self.k,
            "row count index ({i},{j}) out of range"
        );
        let cur = if j == i + self.n - self.k { self.l } else { self.b(i, j) };
        let prev = if j == i { 0 } else { self.b(i, j - 1) };
        cur - prev
    }

    /// The rectangular tableau with these coordinates.
    pub fn to_tableau(&self) -> Tableau {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for i in 1..=self.k {
            let mut row = Vec::new();
            for j in i..=i + self.n - self.k {
                for _ in 0..self.row_count(i, j) {
                    row.push(j as u8);
                }
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
        Tableau::new(self.n, rows).expect("rectangle coordinates encode an SSYT")
    }

    /// Coordinates of a `k`-row rectangular tableau (the empty tableau is
    /// the all-zero point with `L = 0`).
    pub fn from_tableau(t: &Tableau, k: usize) -> Result<Self, ValidationError> {
        let n = t.n();
        if t.is_empty() {
            return KRectangle::new(n, k, vec![0; k * (n - k)], 0);
        }
        match t.rectangular_shape() {
            Some((rows, _)) if rows == k => Self::from_gt(&GTPattern::from_tableau(t), k),
            Some((rows, _)) => Err(ValidationError(format!(
                "tableau has {rows} rows, expected {k}"
            ))),
            None => Err(ValidationError("tableau is not rectangular".into())),
        }
    }

    /// Rotation (`B'_{ij} = L - B_{k-i+1,n-j}`, staying in the `k`-row
    /// chart) or reflection (`B''_{ij} = L - B_{j-i+1,j}`, landing in the
    /// `(n-k)`-row chart).
    pub fn rect_symmetry(&self, kind: SymmetryKind) -> KRectangle {
        let (n, k, l) = (self.n, self.k, self.l);
        match kind {
            SymmetryKind::Rot => {
                let mut b = Vec::with_capacity(k * (n - k));
                for i in 1..=k {
                    for j in i..=i + n - k - 1 {
                        b.push(l - self.b(k - i + 1, n - j));
                    }
                }
                KRectangle::new(n, k, b, l).expect("rotation preserves interlacing")
            }
            SymmetryKind::Refl => {
                let kk = n - k;
                let mut b = Vec::with_capacity(kk * k);
                for i in 1..=kk {
                    for j in i..=i + n - kk - 1 {
                        b.push(l - self.b(j - i + 1, j));
                    }
                }
                KRectangle::new(n, kk, b, l).expect("reflection preserves interlacing")
            }
        }
    }
}

/// All points of the `k`-row chart with exactly `l` columns.
pub fn all_rectangles(n: usize, k: usize, l: i64) -> Vec<KRectangle> {
    assert!((1..n).contains(&k), "k={k} outside 1..={}", n - 1);
    assert!(l >= 0);
    let width = n - k;
    let mut b = vec![0i64; k * width];
    let mut out = Vec::new();
    dfs(n, k, l, &mut b, 1, 1, &mut out);
    return out;

    fn dfs(n: usize, k: usize, l: i64, b: &mut Vec<i64>, i: usize, j: usize, out: &mut Vec<KRectangle>) {
        if i > k {
            out.push(KRectangle::new(n, k, b.clone(), l).expect("bounds enforce interlacing"));
            return;
        }
        let width = n - k;
        let (ni, nj) = if j == i + width - 1 { (i + 1, i + 1) } else { (i, j + 1) };
        let idx = (i - 1) * width + (j - i);
        let lo = if j > i { b[idx - 1] } else { 0 };
        let hi = if i >= 2 { b[idx - width] } else { l };
        for v in lo..=hi {
            b[idx] = v;
            dfs(n, k, l, b, ni, nj, out);
        }
        b[idx] = 0;
    }
}

/// Rotate a rectangular tableau 180 degrees and replace each entry `v` by
/// `n - v + 1`.
pub fn rotate_tableau(t: &Tableau) -> Tableau {
    assert!(
        t.is_empty() || t.rectangular_shape().is_some(),
        "rotation acts on rectangular tableaux"
    );
    let n = t.n() as u8;
    let rows: Vec<Vec<u8>> = t
        .rows()
        .iter()
        .rev()
        .map(|row| row.iter().rev().map(|&v| n - v + 1).collect())
        .collect();
    Tableau::new(t.n(), rows).expect("rotating a rectangle yields an SSYT")
}

/// Replace each column of a rectangular tableau by its complement in
/// `[1,n]` (in increasing order), then reverse the order of the columns.
pub fn reflect_tableau(t: &Tableau) -> Tableau {
    assert!(
        t.is_empty() || t.rectangular_shape().is_some(),
        "reflection acts on rectangular tableaux"
    );
    let n = t.n();
    let Some((k, l)) = t.rectangular_shape() else {
        return Tableau::empty(n);
    };
    let mut rows: Vec<Vec<u8>> = vec![Vec::with_capacity(l); n - k];
    for c in (0..l).rev() {
        let column: Vec<u8> = (0..k).map(|r| t.rows()[r][c]).collect();
        let mut complement: Vec<u8> =
            (1..=n as u8).filter(|v| !column.contains(v)).collect();
        complement.sort_unstable();
        for (r, v) in complement.into_iter().enumerate() {
            rows[r].push(v);
        }
    }
    Tableau::new(n, rows).expect("column complement of a rectangle is an SSYT")
}
