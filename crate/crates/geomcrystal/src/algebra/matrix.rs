//! Dense matrices over exact coefficient rings.

use std::ops::{Mul, Sub};

use num::{One, Zero};

use super::laurent::LaurentPoly;
use super::rat::Rat;

/// Dense `rows x cols` matrix over an exact ring, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix with rational entries.
pub type QMatrix = Matrix<Rat>;

/// Matrix whose entries are Laurent polynomials in one indeterminate.
pub type LaurentMatrix = Matrix<LaurentPoly>;

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| f(v)).collect(),
        }
    }

    /// The submatrix on the given row and column indices, in the given
    /// order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for l in 0..self.cols {
                acc = acc + self.get(i, l) * other.get(l, j);
            }
            acc
        })
    }
}

impl<T: Clone + Zero + Mul<Output = T>> Matrix<T> {
    /// Matrix product using owned arithmetic only, for element types without
    /// by-reference operator impls.
    pub fn mul_ring(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for l in 0..self.cols {
                acc = acc + self.get(i, l).clone() * other.get(l, j).clone();
            }
            acc
        })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + Sub<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    /// Determinant by Laplace expansion with shared minors (dynamic
    /// programming over column subsets). Works over any commutative ring;
    /// intended for the small matrices that arise here.
    pub fn det_cofactor(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a nonsquare matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        assert!(n <= 16, "cofactor determinant limited to small matrices");
        let mut dp: Vec<Option<T>> = vec![None; 1 << n];
        dp[0] = Some(T::one());
        for mask in 1usize..(1 << n) {
            let r = mask.count_ones() as usize - 1;
            let mut acc = T::zero();
            let mut pos = 0usize;
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    let minor = dp[mask ^ (1 << j)].clone().expect("smaller mask filled");
                    let term = self.get(r, j) * &minor;
                    acc = if (r + pos) % 2 == 0 { acc + term } else { acc - term };
                    pos += 1;
                }
            }
            dp[mask] = Some(acc);
        }
        dp[(1 << n) - 1].take().expect("full mask filled")
    }
}

impl QMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
                .collect(),
        )
    }

    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a nonsquare matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !m.get(r, col).is_zero()) {
                Some(r) => r,
                None => return Rat::zero(),
            };
            if pivot_row != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(col, j, b);
                    m.set(pivot_row, j, a);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= pivot.clone();
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &pivot;
                for j in col..n {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Reduced row echelon form; returns the reduced matrix and the pivot
    /// column indices.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = match (row..m.rows).find(|&r| !m.get(r, col).is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot_row != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(row, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let pivot = m.get(row, col).clone();
            for j in 0..m.cols {
                let v = m.get(row, j) / &pivot;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(r, j) - &(&factor * m.get(row, j));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A matrix whose columns form a basis of the kernel (null space);
    /// it has `cols x (cols - rank)` shape.
    pub fn null_space(&self) -> QMatrix {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        Matrix::from_fn(self.cols, free.len(), |i, j| {
            let f = free[j];
            if i == f {
                Rat::one()
            } else if let Some(r) = pivots.iter().position(|&p| p == i) {
                -rref.get(r, f).clone()
            } else {
                Rat::zero()
            }
        })
    }
}

impl LaurentMatrix {
    /// Evaluate every entry at the given point of the coefficient field.
    pub fn eval_at(&self, point: &Rat) -> QMatrix {
        self.map(|p| p.eval(point))
    }

    /// Multiply every entry by `p`.
    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        self.map(|q| q * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    #[test]
    fn product_and_identity() {
        let a = QMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let id = QMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
        let b = QMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, QMatrix::from_i64_rows(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn determinant_gauss_and_cofactor_agree() {
        let m = QMatrix::from_i64_rows(&[&[2, -1, 3], &[0, 4, 1], &[5, 2, -2]]);
        assert_eq!(m.det(), m.det_cofactor());
        assert_eq!(m.det(), rat_int(-85));
        let singular = QMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det(), rat_int(0));
        assert_eq!(singular.det_cofactor(), rat_int(0));
    }

    #[test]
    fn rank_and_null_space() {
        let m = QMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ker = m.null_space();
        assert_eq!(ker.cols(), 2);
        let prod = m.mul(&ker);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                assert_eq!(prod.get(i, j), &rat_int(0));
            }
        }
    }

    #[test]
    fn submatrix_minor() {
        let m = QMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let s = m.submatrix(&[0, 2], &[1, 2]);
        assert_eq!(s, QMatrix::from_i64_rows(&[&[2, 3], &[8, 10]]));
        assert_eq!(s.det(), rat_int(-4));
    }

    #[test]
    fn laurent_matrix_determinant() {
        let lam = LaurentPoly::var();
        let one = LaurentPoly::from_int(1);
        let m = LaurentMatrix::from_rows(vec![
            vec![one.clone(), lam.clone()],
            vec![LaurentPoly::monomial(-1, rat_int(1)), one.clone()],
        ]);
        assert!(m.det_cofactor().is_zero());
        let m2 = LaurentMatrix::from_rows(vec![
            vec![one.clone(), lam.clone()],
            vec![LaurentPoly::zero(), &one + &lam],
        ]);
        assert_eq!(m2.det_cofactor(), &one + &lam);
        assert_eq!(m2.eval_at(&rat_int(3)).det(), rat_int(4));
    }

    #[test]
    fn rational_entries_round_trip() {
        let m = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
        assert_eq!(m.det(), rat(1, 10) - rat(1, 12));
        assert_eq!(m.transpose().det(), m.det());
    }
}
