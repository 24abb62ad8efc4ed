//! The geometric Schuetzenberger involution and the duality map between
//! complementary Grassmannians, realized through the folded matrix map:
//! the involution is projection of the flipped matrix, and duality
//! composes the orthogonal complement, row reversal, and the involution.
//! Includes the Pluecker-coordinate transformation laws, the twisted
//! inverse comparison, and the rational closed forms on charts.

use super::folded::{lower_crystal_act, lower_eps, lower_phi, FoldedMatrix};
use super::gmap::{beta, g_matrix, pi_k};
use crate::algebra::{LaurentPoly, Matrix, QMatrix, Rat};
use crate::grassmann::{
    interval, residue_in_1n, CrystalPoint, GrassmannError, GrassmannPoint, ShiftDir,
};
use crate::gt_param::{theta, theta_inverse, BasicSubset, RationalRectangle};
use itertools::Itertools;
use num::{One, Zero};

/// The geometric Schuetzenberger involution: project the anti-diagonal
/// flip of the matrix map back to the Grassmannian.
pub fn schuetzenberger_s(p: &CrystalPoint<Rat>) -> Result<CrystalPoint<Rat>, GrassmannError> {
    let flipped = g_matrix(p)?.fl();
    pi_k(&flipped, p.k(), p.t())
}

/// Reverse the rows of a point's matrix: multiplication by the
/// order-reversing permutation. Sends the Pluecker coordinate indexed by J
/// to the one indexed by the reversed set, up to one global sign.
pub fn reverse_rows(m: &GrassmannPoint<Rat>) -> GrassmannPoint<Rat> {
    let n = m.n();
    let k = m.k();
    let rows: Vec<Vec<Rat>> = (0..n).map(|i| m.rows()[n - 1 - i].clone()).collect();
    GrassmannPoint::from_rows_unchecked(n, k, rows)
}

/// The orthogonal complement of a point with respect to the alternating
/// form pairing the standard basis vectors with signs (-1)^(i+1). The
/// Pluecker coordinate of the complement at a subset equals the original
/// coordinate at the complementary subset, projectively.
pub fn orthogonal_complement(m: &GrassmannPoint<Rat>) -> GrassmannPoint<Rat> {
    let n = m.n();
    let k = m.k();
    let constraints = QMatrix::from_fn(k, n, |c, r| {
        let v = m.rows()[r][c].clone();
        if r % 2 == 0 {
            v
        } else {
            -v
        }
    });
    let kernel = constraints.null_space();
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n - k).map(|j| kernel.get(i, j).clone()).collect())
        .collect();
    GrassmannPoint::from_rows_unchecked(n, n - k, rows)
}

/// The duality map to the complementary Grassmannian: the involution
/// applied to the row-reversed orthogonal complement.
pub fn duality_d(p: &CrystalPoint<Rat>) -> Result<CrystalPoint<Rat>, GrassmannError> {
    let mu = reverse_rows(&orthogonal_complement(p.matrix()));
    let q = CrystalPoint::new(mu, p.t().clone())?;
    schuetzenberger_s(&q)
}

/// Check that the involution squares to the identity.
pub fn s_is_involution(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let twice = schuetzenberger_s(&schuetzenberger_s(p)?)?;
    Ok(twice.projectively_equal(p))
}

/// Check that the involution conjugates the forward cyclic shift into the
/// inverse one.
pub fn s_conjugates_shift(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let lhs = schuetzenberger_s(&p.cyclic_shift(ShiftDir::Forward))?;
    let rhs = schuetzenberger_s(p)?.cyclic_shift(ShiftDir::Inverse);
    Ok(lhs.projectively_equal(&rhs))
}

/// Check that the involution swaps the structure functions at residues i
/// and n-i.
pub fn s_swaps_structure_functions(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let n = p.n();
    let sp = schuetzenberger_s(p)?;
    for i in 0..n {
        let opp = (n - i) % n;
        if sp.phi(i)? != p.eps(opp)? || sp.eps(i)? != p.phi(opp)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check that the involution intertwines the crystal action at residue i
/// with the inverted-parameter action at residue n-i.
pub fn s_reverses_action(p: &CrystalPoint<Rat>, c: &Rat) -> Result<bool, GrassmannError> {
    let n = p.n();
    let sp = schuetzenberger_s(p)?;
    let c_inv = Rat::one() / c.clone();
    for i in 0..n {
        let opp = (n - i) % n;
        let lhs = schuetzenberger_s(&p.apply_ei(i, c)?)?;
        let rhs = sp.apply_ei(opp, &c_inv)?;
        if !lhs.projectively_equal(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check that the matrix map of the involuted point is exactly the
/// anti-diagonal flip of the original matrix map.
pub fn g_of_s_is_flip(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let lhs = g_matrix(&schuetzenberger_s(p)?)?;
    let rhs = g_matrix(p)?.fl();
    Ok(lhs == rhs)
}

/// Check that every Pluecker coordinate of the involuted point is the
/// corresponding maximal minor of the matrix map: rows n-k+1..n against
/// the index-reversed column set.
pub fn s_plucker_minors(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let n = p.n();
    let k = p.k();
    let a = g_matrix(p)?;
    let sp = schuetzenberger_s(p)?;
    let m_prime = sp.matrix();
    let tail = m_prime.plucker_set(interval(n as i64 - k as i64 + 1, n as i64));
    if tail.is_zero() {
        return Ok(false);
    }
    let rows0: Vec<usize> = (n - k..n).collect();
    for j_set in (1..=n as i64).combinations(k) {
        let lhs = m_prime.plucker_set(j_set.iter().copied()) / tail.clone();
        let mut cols0: Vec<usize> = j_set.iter().map(|&i| n - i as usize).collect();
        cols0.sort_unstable();
        let minor = a.matrix().submatrix(&rows0, &cols0).det_cofactor();
        if minor != LaurentPoly::constant(lhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check the transformation law of the basic Pluecker coordinates under
/// the involution: each becomes a power of t times a basic Pluecker ratio
/// of the original point at flipped indices.
pub fn s_basic_pluckers(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let n = p.n();
    let k = p.k();
    let (n_i, k_i) = (n as i64, k as i64);
    let m = p.matrix();
    let sp = schuetzenberger_s(p)?;
    let m_prime = sp.matrix();
    let tail = m_prime.plucker_set(interval(n_i - k_i + 1, n_i));
    if tail.is_zero() {
        return Ok(false);
    }
    for basic in BasicSubset::all(n, k) {
        let (i, j) = (basic.i() as i64, basic.j() as i64);
        let lhs = m_prime.plucker_set(basic.elements()) / tail.clone();
        let flipped = BasicSubset::new(
            n,
            k,
            (n_i - k_i - i + 2) as usize,
            (n_i - j) as usize,
        )
        .expect("the index flip preserves the basic range");
        let num = m.plucker_set(flipped.elements());
        let den = m.plucker_set(interval(n_i - j - k_i + 1, n_i - j));
        let power = j.min(n_i - k_i) - i + 1;
        let rhs = p.t().pow(power as i32) * num / den;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check the cyclic-interval specialization of the basic transformation
/// law, which shows the involution preserves the open cell.
pub fn s_cyclic_pluckers(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let n = p.n() as i64;
    let k = p.k() as i64;
    let m = p.matrix();
    let sp = schuetzenberger_s(p)?;
    let m_prime = sp.matrix();
    let tail = m_prime.plucker_set(interval(n - k + 1, n));
    if tail.is_zero() {
        return Ok(false);
    }
    for i in 1..=n {
        let lhs = m_prime.plucker_set(interval(i, i + k - 1)) / tail.clone();
        let power = interval(i, i + k - 1)
            .into_iter()
            .filter(|&x| residue_in_1n(x, n) <= n - k)
            .count();
        let num = m.plucker_set(interval(n - k + 1, n));
        let den = m.plucker_set(interval(n - i - 2 * k + 2, n - i - k + 1));
        let rhs = p.t().pow(power as i32) * num / den;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check that the Pluecker coordinates of the orthogonal complement are
/// the complementary coordinates of the point, up to one global scalar.
pub fn complement_swaps_pluckers(m: &GrassmannPoint<Rat>) -> bool {
    let n = m.n();
    let k = m.k();
    let perp = orthogonal_complement(m);
    let mut ratio: Option<Rat> = None;
    for j_set in (1..=n as i64).combinations(k) {
        let lhs = m.plucker_set(j_set.iter().copied());
        let comp: Vec<i64> = (1..=n as i64).filter(|x| !j_set.contains(x)).collect();
        let rhs = perp.plucker_set(comp);
        if lhs.is_zero() != rhs.is_zero() {
            return false;
        }
        if lhs.is_zero() {
            continue;
        }
        let r = lhs / rhs;
        match &ratio {
            None => ratio = Some(r),
            Some(prev) => {
                if *prev != r {
                    return false;
                }
            }
        }
    }
    ratio.is_some()
}

/// Check that row reversal sends the coordinate at J to the coordinate at
/// the index-reversed set, up to one global scalar.
pub fn reverse_rows_swaps_pluckers(m: &GrassmannPoint<Rat>) -> bool {
    let n = m.n();
    let k = m.k();
    let rev = reverse_rows(m);
    let mut ratio: Option<Rat> = None;
    for j_set in (1..=n as i64).combinations(k) {
        let lhs = rev.plucker_set(j_set.iter().copied());
        let rhs = m.plucker_set(j_set.iter().map(|&i| n as i64 - i + 1));
        if lhs.is_zero() != rhs.is_zero() {
            return false;
        }
        if lhs.is_zero() {
            continue;
        }
        let r = lhs / rhs;
        match &ratio {
            None => ratio = Some(r),
            Some(prev) => {
                if *prev != r {
                    return false;
                }
            }
        }
    }
    ratio.is_some()
}

/// Check that duality squares to the identity through the complementary
/// Grassmannian.
pub fn d_is_involution(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let twice = duality_d(&duality_d(p)?)?;
    Ok(twice.projectively_equal(p))
}

/// Check that duality commutes with the Schuetzenberger involution.
pub fn d_commutes_with_s(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let lhs = schuetzenberger_s(&duality_d(p)?)?;
    let rhs = duality_d(&schuetzenberger_s(p)?)?;
    Ok(lhs.projectively_equal(&rhs))
}

/// Check that duality commutes with the forward cyclic shift.
pub fn d_commutes_with_shift(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let lhs = duality_d(p)?.cyclic_shift(ShiftDir::Forward);
    let rhs = duality_d(&p.cyclic_shift(ShiftDir::Forward))?;
    Ok(lhs.projectively_equal(&rhs))
}

/// Check that duality swaps the two structure functions at every residue.
pub fn d_swaps_structure_functions(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let n = p.n();
    let dp = duality_d(p)?;
    for i in 0..n {
        if dp.phi(i)? != p.eps(i)? || dp.eps(i)? != p.phi(i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check that duality intertwines the crystal action with the
/// inverted-parameter action at the same residue.
pub fn d_reverses_action(p: &CrystalPoint<Rat>, c: &Rat) -> Result<bool, GrassmannError> {
    let n = p.n();
    let dp = duality_d(p)?;
    let c_inv = Rat::one() / c.clone();
    for i in 0..n {
        let lhs = dp.apply_ei(i, c)?;
        let rhs = duality_d(&p.apply_ei(i, &c_inv)?)?;
        if !lhs.projectively_equal(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check that the matrix map of the dual point, scaled by the duality
/// scalar to the power n-k-1, is exactly the twisted inverse of the
/// matrix map of the point.
pub fn d_compares_twisted_inverse(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let n = p.n();
    let k = p.k();
    let a = g_matrix(p)?;
    let b = g_matrix(&duality_d(p)?)?;
    let scale = beta(n, k, p.t()).pow((n - k - 1) as u32);
    let lhs = FoldedMatrix::new(b.matrix().scale_poly(&scale));
    Ok(lhs == a.inv_twist())
}

/// Check the entry-level formula for the twisted inverse of the matrix
/// map: the same Pluecker ratios as the companion map, without the
/// alternating signs, with a plain loop-parameter twist, and scaled by
/// the duality scalar to the power n-k-1.
pub fn twisted_inverse_entries(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let m = p.matrix();
    let n = p.n();
    let n_i = n as i64;
    let k = p.k() as i64;
    let t = p.t().clone();
    let inv = g_matrix(p)?.inv_twist();
    let scale = beta(n, p.k(), p.t()).pow((n - p.k() - 1) as u32);
    for i in 1..=n {
        for j in 1..=n {
            let (ii, jj) = (i as i64, j as i64);
            let window: Vec<i64> = interval(ii - k, ii)
                .into_iter()
                .map(|x| residue_in_1n(x, n_i))
                .collect();
            let base = if !window.contains(&jj) {
                LaurentPoly::zero()
            } else {
                let sub: Vec<i64> = window.iter().copied().filter(|&x| x != jj).collect();
                let num = m.plucker_set(sub);
                let den = m.plucker_set(interval(ii - k + 1, ii));
                let ratio = num / den;
                if ratio.is_zero() {
                    LaurentPoly::zero()
                } else if ii > k {
                    LaurentPoly::constant(ratio)
                } else if ii >= jj {
                    LaurentPoly::constant(ratio * t.clone())
                } else {
                    LaurentPoly::monomial(1, ratio)
                }
            };
            if inv.entry(i, j) != &(&base * &scale) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check the rational closed form of the involution on a chart: the new
/// coordinate at (i, j) is t over the old coordinate at (rows-i+1, n-j).
pub fn s_chart_closed_form(rect: &RationalRectangle<Rat>) -> Result<bool, GrassmannError> {
    let p = theta(rect)?;
    let back = theta_inverse(&schuetzenberger_s(&p)?)?;
    let m = rect.rows();
    let n = rect.n();
    let t = rect.t().clone();
    for (i, j) in rect.index_pairs() {
        let expect = t.clone() / rect.entry(m - i + 1, n - j).clone();
        if back.entry(i, j) != &expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check the rational closed form of duality on a chart: the new
/// coordinate at (i, j) is t over the old coordinate at (j-i+1, j).
pub fn d_chart_closed_form(rect: &RationalRectangle<Rat>) -> Result<bool, GrassmannError> {
    let p = theta(rect)?;
    let back = theta_inverse(&duality_d(&p)?)?;
    if back.rows() != rect.width() {
        return Ok(false);
    }
    let t = rect.t().clone();
    for (i, j) in back.index_pairs() {
        let expect = t.clone() / rect.entry(j - i + 1, j).clone();
        if back.entry(i, j) != &expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Invert a rational matrix by reducing the augmented system, or return
/// `None` if it is singular.
pub fn q_inverse(x: &QMatrix) -> Option<QMatrix> {
    let n = x.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            x.get(i, j).clone()
        } else if j == n + i {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let (reduced, pivots) = aug.rref();
    if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(e, &c)| e != c) {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
}

/// The minor of a rational matrix over 1-based row and column index sets.
pub fn q_minor(x: &QMatrix, rows: &[usize], cols: &[usize]) -> Rat {
    let r0: Vec<usize> = rows.iter().map(|&r| r - 1).collect();
    let c0: Vec<usize> = cols.iter().map(|&c| c - 1).collect();
    x.submatrix(&r0, &c0).det()
}

/// Check the complementary-minor identity relating a matrix and its
/// sign-twisted inverse: the (I, J) minor of the twisted inverse equals
/// the complementary (J-bar, I-bar) minor of the matrix over its
/// determinant.
pub fn jacobi_complementary_minors(x: &QMatrix, rows: &[usize], cols: &[usize]) -> Option<bool> {
    let n = x.rows();
    let inv = q_inverse(x)?;
    let twisted = Matrix::from_fn(n, n, |i, j| {
        let v = inv.get(i, j).clone();
        if (i + j) % 2 == 1 {
            -v
        } else {
            v
        }
    });
    let comp = |s: &[usize]| -> Vec<usize> { (1..=n).filter(|i| !s.contains(i)).collect() };
    let lhs = q_minor(&twisted, rows, cols);
    let rhs = q_minor(x, &comp(cols), &comp(rows)) / x.clone().det();
    Some(lhs == rhs)
}
