//! The unipotent-crystal matrix map: sending a Grassmannian crystal point
//! to a folded loop-group matrix whose entries are Pluecker-coordinate
//! ratios, together with its left inverse (the projection back to the
//! Grassmannian), the companion matrix map `h` with `h * g` a scalar, and
//! the point-level generator action that `g` intertwines.

use super::folded::{lower_crystal_act, FoldedMatrix};
use crate::algebra::{LaurentPoly, Rat};
use crate::grassmann::{
    interval, residue_in_1n, set_label, CrystalPoint, GrassmannError, GrassmannPoint, ShiftDir,
};
use num::{One, Zero};

/// The scalar `t + (-1)^k * lambda`: the value of `h * g` and the
/// determinant base of `g` on the rank-k family.
pub fn beta_zero(k: usize, t: &Rat) -> LaurentPoly {
    let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
    &LaurentPoly::constant(t.clone()) + &LaurentPoly::monomial(1, sign)
}

/// The scalar `t + (-1)^(k+n) * lambda` appearing in the duality
/// comparison. It differs from `beta_zero` exactly when n is odd.
pub fn beta(n: usize, k: usize, t: &Rat) -> LaurentPoly {
    beta_zero(k + n, t)
}

/// Require every cyclic-interval Pluecker coordinate of the point to be
/// nonzero; these are the denominators of the matrix map.
pub fn require_cyclic_pluckers(m: &GrassmannPoint<Rat>) -> Result<(), GrassmannError> {
    let n = m.n() as i64;
    let k = m.k() as i64;
    for j in 1..=n {
        if m.plucker_set(interval(j, j + k - 1)).is_zero() {
            return Err(GrassmannError::UndefinedPoint {
                plucker: set_label(m.n(), &interval(j, j + k - 1)),
            });
        }
    }
    Ok(())
}

/// The matrix map `g`: entry (i, j) is the Pluecker ratio
/// `P_{[j-k+1, j-1] + {i}} / P_{[j-k, j-1]}` times a coefficient that is
/// 1 in the first k columns, `t` on and below the diagonal afterwards,
/// and `lambda` above it. Defined exactly where all cyclic Pluecker
/// coordinates are nonzero.
pub fn g_matrix(p: &CrystalPoint<Rat>) -> Result<FoldedMatrix, GrassmannError> {
    let m = p.matrix();
    require_cyclic_pluckers(m)?;
    let n = m.n();
    let k = m.k() as i64;
    let t = p.t().clone();
    Ok(FoldedMatrix::from_fn(n, |i, j| {
        let (ii, jj) = (i as i64, j as i64);
        let den = m.plucker_set(interval(jj - k, jj - 1));
        let mut idx = interval(jj - k + 1, jj - 1);
        idx.push(ii);
        let num = m.plucker_set(idx);
        if num.is_zero() {
            return LaurentPoly::zero();
        }
        let ratio = num / den;
        if jj <= k {
            LaurentPoly::constant(ratio)
        } else if ii >= jj {
            LaurentPoly::constant(ratio * t.clone())
        } else {
            LaurentPoly::monomial(1, ratio)
        }
    }))
}

/// The companion matrix map `h`: entry (i, j) is
/// `(-1)^(i+j) * P_{[i-k, i] - {j}} / P_{[i-k+1, i]}` (zero when the
/// residue of j does not lie in the cyclic window `[i-k, i]`) times a
/// coefficient that is 1 below the first k rows, `t` on and below the
/// diagonal inside them, and `(-1)^n * lambda` above it.
pub fn h_matrix(p: &CrystalPoint<Rat>) -> Result<FoldedMatrix, GrassmannError> {
    let m = p.matrix();
    require_cyclic_pluckers(m)?;
    let n = m.n();
    let n_i = n as i64;
    let k = m.k() as i64;
    let t = p.t().clone();
    let lam_sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
    Ok(FoldedMatrix::from_fn(n, |i, j| {
        let (ii, jj) = (i as i64, j as i64);
        let window: Vec<i64> = interval(ii - k, ii)
            .into_iter()
            .map(|x| residue_in_1n(x, n_i))
            .collect();
        if !window.contains(&jj) {
            return LaurentPoly::zero();
        }
        let sub: Vec<i64> = window.iter().copied().filter(|&x| x != jj).collect();
        let num = m.plucker_set(sub);
        if num.is_zero() {
            return LaurentPoly::zero();
        }
        let den = m.plucker_set(interval(ii - k + 1, ii));
        let mut ratio = num / den;
        if (i + j) % 2 == 1 {
            ratio = -ratio;
        }
        if ii > k {
            LaurentPoly::constant(ratio)
        } else if ii >= jj {
            LaurentPoly::constant(ratio * t.clone())
        } else {
            LaurentPoly::monomial(1, ratio * lam_sign.clone())
        }
    }))
}

/// Project a folded matrix back to the Grassmannian: evaluate the loop
/// parameter at `(-1)^(k-1) t` and take the span of the first k columns.
pub fn pi_k(a: &FoldedMatrix, k: usize, t: &Rat) -> Result<CrystalPoint<Rat>, GrassmannError> {
    let n = a.n();
    let value = if (k + 1) % 2 == 0 { t.clone() } else { -t.clone() };
    let spec = a.specialize(&value);
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..k).map(|j| spec.get(i, j).clone()).collect())
        .collect();
    let m = GrassmannPoint::new(n, k, rows)?;
    CrystalPoint::new(m, t.clone())
}

/// The generator action on crystal points: add `a` times row i+1 to row
/// i, where the affine residue 0 wraps to add `a * (-1)^(k-1) / t` times
/// row 1 to row n.
pub fn u_action_point(i: usize, a: &Rat, p: &CrystalPoint<Rat>) -> CrystalPoint<Rat> {
    let n = p.n();
    let k = p.k();
    if a.is_zero() {
        return p.clone();
    }
    let r = i % n;
    let moved = if r == 0 {
        let twist = if (k + 1) % 2 == 0 { Rat::one() } else { -Rat::one() };
        let coeff = a.clone() * twist / p.t().clone();
        p.matrix().add_row_multiple(n, 1, &coeff)
    } else {
        p.matrix().add_row_multiple(r, r + 1, a)
    };
    CrystalPoint::new(moved, p.t().clone()).expect("row operations keep the parameter")
}

/// Check that the first k columns of `g` coincide, entry by entry, with
/// the pivot-normalized diagonal form of the point's matrix.
pub fn g_first_block_matches_diagonal_form(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let a = g_matrix(p)?;
    let d = crate::gt_param::diagonal_form(p.matrix())?;
    let n = p.n();
    let k = p.k();
    for i in 1..=n {
        for j in 1..=k {
            if a.entry(i, j) != &LaurentPoly::constant(d.get(i - 1, j - 1).clone()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check that evaluating `g` at the distinguished parameter value drops
/// its rank to exactly k: every column lands in the span of the first k.
pub fn g_specialized_rank(p: &CrystalPoint<Rat>) -> Result<usize, GrassmannError> {
    let a = g_matrix(p)?;
    let k = p.k();
    let value = if (k + 1) % 2 == 0 {
        p.t().clone()
    } else {
        -p.t().clone()
    };
    Ok(a.specialize(&value).rank())
}

/// Check the determinant identity `det g = (t + (-1)^k lambda)^(n-k)` as
/// an exact Laurent-polynomial identity.
pub fn g_det_matches(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let a = g_matrix(p)?;
    let expect = beta_zero(p.k(), p.t()).pow((p.n() - p.k()) as u32);
    Ok(a.det() == expect)
}

/// Check that projecting `g` back to the Grassmannian returns the point.
pub fn pi_g_is_identity(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let a = g_matrix(p)?;
    let back = pi_k(&a, p.k(), p.t())?;
    Ok(back.projectively_equal(p))
}

/// Check the intertwining identity of the matrix map: applying a
/// generator to the point and then `g` equals applying the pseudo-action
/// of the same generator to `g` of the point.
pub fn g_intertwines_generator(
    p: &CrystalPoint<Rat>,
    i: usize,
    a: &Rat,
) -> Result<bool, GrassmannError> {
    let lhs = g_matrix(&u_action_point(i, a, p))?;
    let rhs = super::folded::lower_act(i, a, &g_matrix(p)?)?;
    Ok(lhs == rhs)
}

/// Check that the matrix map transports the cyclic shift of crystal
/// points to the diagonal shift of folded matrices.
pub fn g_transports_shift(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let lhs = g_matrix(&p.cyclic_shift(ShiftDir::Forward))?;
    let rhs = g_matrix(p)?.sh();
    Ok(lhs == rhs)
}

/// Check that the structure functions and the crystal action computed
/// from the folded matrix agree with the ones defined directly on the
/// Grassmannian point, for every residue.
pub fn g_induces_crystal(p: &CrystalPoint<Rat>, c: &Rat) -> Result<bool, GrassmannError> {
    let a = g_matrix(p)?;
    let n = p.n();
    if super::folded::lower_gamma(&a) != p.gamma()? {
        return Ok(false);
    }
    for i in 0..n {
        if super::folded::lower_phi(i, &a)? != p.phi(i)? {
            return Ok(false);
        }
        if super::folded::lower_eps(i, &a)? != p.eps(i)? {
            return Ok(false);
        }
        let via_point = g_matrix(&p.apply_ei(i, c)?)?;
        let via_matrix = lower_crystal_act(i, c, &a)?;
        if via_point != via_matrix {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check that the shifted character of `g` computes the decoration.
pub fn chi_computes_decoration(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let a = g_matrix(p)?;
    let l = p.n() - p.k();
    if !a.is_shifted_unipotent(l) {
        return Ok(false);
    }
    Ok(a.chi(l) == p.decoration()?)
}

/// Check `h * g = (t + (-1)^k lambda) * Id` and that the adjugate of `g`
/// is `(t + (-1)^k lambda)^(n-k-1) * h`.
pub fn h_is_scaled_inverse(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let a = g_matrix(p)?;
    let h = h_matrix(p)?;
    let n = p.n();
    let b0 = beta_zero(p.k(), p.t());
    let prod = h.mul(&a);
    for i in 1..=n {
        for j in 1..=n {
            let expect = if i == j { b0.clone() } else { LaurentPoly::zero() };
            if prod.entry(i, j) != &expect {
                return Ok(false);
            }
        }
    }
    let power = (n - p.k()) as u32;
    if power == 0 {
        return Ok(true);
    }
    let scale = b0.pow(power - 1);
    let scaled_h = FoldedMatrix::new(h.matrix().scale_poly(&scale));
    Ok(a.adjugate() == scaled_h)
}

/// Check that `h` transports the cyclic shift the same way `g` does.
pub fn h_transports_shift(p: &CrystalPoint<Rat>) -> Result<bool, GrassmannError> {
    let lhs = h_matrix(&p.cyclic_shift(ShiftDir::Forward))?;
    let rhs = h_matrix(p)?.sh();
    Ok(lhs == rhs)
}

/// Check the shift transport of the point-level generator action:
/// applying a generator after the forward cyclic shift and then undoing
/// the shift equals applying the previous generator directly.
pub fn u_action_shift_transport(p: &CrystalPoint<Rat>, i: usize, a: &Rat) -> bool {
    let n = p.n();
    let via_shift = u_action_point(i, a, &p.cyclic_shift(ShiftDir::Forward)).cyclic_shift(ShiftDir::Inverse);
    let direct = u_action_point((i + n - 1) % n, a, p);
    via_shift.projectively_equal(&direct)
}

/// Check that `g` of a chart-parametrized point, evaluated at loop
/// parameter zero, recovers the full Chevalley-generator product matrix
/// of the chart exactly.
pub fn g_at_zero_matches_chart(
    rect: &crate::gt_param::RationalRectangle<Rat>,
) -> Result<bool, GrassmannError> {
    let p = crate::gt_param::theta(rect)?;
    let a = g_matrix(&p)?;
    let at0 = match a.at_zero() {
        Some(m) => m,
        None => return Ok(false),
    };
    Ok(at0 == crate::gt_param::phi_matrix(rect))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};
    use crate::grassmann::{sample_c, sample_generic_point, sample_point};
    use crate::gt_param::sample_rectangle;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn pins_point(n: usize, k: usize, seed: u64) -> CrystalPoint<Rat> {
        let mut rng = StdRng::seed_from_u64(seed);
        sample_generic_point(n, k, &mut rng)
    }

    /// All (n, k) pairs with 1 <= k < n exercised in the unit tests.
    fn small_cases() -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for n in 2..=5 {
            for k in 1..n {
                v.push((n, k));
            }
        }
        v
    }

    #[test]
    fn the_rank_two_matrix_map_display_is_reproduced() {
        // Pin every entry of g for a 5-choose-2 point against the
        // displayed Pluecker-ratio table.
        let p = pins_point(5, 2, 42);
        let m = p.matrix();
        let t = p.t().clone();
        let a = g_matrix(&p).unwrap();
        let pl = |s: &[i64]| m.plucker_set(s.to_vec());
        let c = |r: Rat| LaurentPoly::constant(r);
        let lam = |r: Rat| LaurentPoly::monomial(1, r);
        let tt = |r: Rat| LaurentPoly::constant(r * t.clone());
        let zero = LaurentPoly::zero();
        // Row 1: P15/P45, 0, lambda, lambda*P13/P23, lambda*P14/P34
        assert_eq!(a.entry(1, 1), &c(pl(&[1, 5]) / pl(&[4, 5])));
        assert_eq!(a.entry(1, 2), &zero);
        assert_eq!(a.entry(1, 3), &lam(Rat::one()));
        assert_eq!(a.entry(1, 4), &lam(pl(&[1, 3]) / pl(&[2, 3])));
        assert_eq!(a.entry(1, 5), &lam(pl(&[1, 4]) / pl(&[3, 4])));
        // Row 2: P25/P45, P12/P15, 0, lambda, lambda*P24/P34
        assert_eq!(a.entry(2, 1), &c(pl(&[2, 5]) / pl(&[4, 5])));
        assert_eq!(a.entry(2, 2), &c(pl(&[1, 2]) / pl(&[1, 5])));
        assert_eq!(a.entry(2, 3), &zero);
        assert_eq!(a.entry(2, 4), &lam(Rat::one()));
        assert_eq!(a.entry(2, 5), &lam(pl(&[2, 4]) / pl(&[3, 4])));
        // Row 3: P35/P45, P13/P15, t*P23/P12, 0, lambda
        assert_eq!(a.entry(3, 1), &c(pl(&[3, 5]) / pl(&[4, 5])));
        assert_eq!(a.entry(3, 2), &c(pl(&[1, 3]) / pl(&[1, 5])));
        assert_eq!(a.entry(3, 3), &tt(pl(&[2, 3]) / pl(&[1, 2])));
        assert_eq!(a.entry(3, 4), &zero);
        assert_eq!(a.entry(3, 5), &lam(Rat::one()));
        // Row 4: 1, P14/P15, t*P24/P12, t*P34/P23, 0
        assert_eq!(a.entry(4, 1), &c(Rat::one()));
        assert_eq!(a.entry(4, 2), &c(pl(&[1, 4]) / pl(&[1, 5])));
        assert_eq!(a.entry(4, 3), &tt(pl(&[2, 4]) / pl(&[1, 2])));
        assert_eq!(a.entry(4, 4), &tt(pl(&[3, 4]) / pl(&[2, 3])));
        assert_eq!(a.entry(4, 5), &zero);
        // Row 5: 0, 1, t*P25/P12, t*P35/P23, t*P45/P34
        assert_eq!(a.entry(5, 1), &zero);
        assert_eq!(a.entry(5, 2), &c(Rat::one()));
        assert_eq!(a.entry(5, 3), &tt(pl(&[2, 5]) / pl(&[1, 2])));
        assert_eq!(a.entry(5, 4), &tt(pl(&[3, 5]) / pl(&[2, 3])));
        assert_eq!(a.entry(5, 5), &tt(pl(&[4, 5]) / pl(&[3, 4])));
    }

    #[test]
    fn the_rank_three_matrix_map_display_is_reproduced() {
        // The 4-choose-3 display: an almost lower-triangular matrix.
        let p = pins_point(4, 3, 43);
        let m = p.matrix();
        let t = p.t().clone();
        let a = g_matrix(&p).unwrap();
        let pl = |s: &[i64]| m.plucker_set(s.to_vec());
        let c = |r: Rat| LaurentPoly::constant(r);
        let zero = LaurentPoly::zero();
        assert_eq!(a.entry(1, 1), &c(pl(&[1, 3, 4]) / pl(&[2, 3, 4])));
        assert_eq!(a.entry(1, 2), &zero);
        assert_eq!(a.entry(1, 3), &zero);
        assert_eq!(a.entry(1, 4), &LaurentPoly::monomial(1, Rat::one()));
        assert_eq!(a.entry(2, 1), &c(Rat::one()));
        assert_eq!(a.entry(2, 2), &c(pl(&[1, 2, 4]) / pl(&[1, 3, 4])));
        assert_eq!(a.entry(2, 3), &zero);
        assert_eq!(a.entry(2, 4), &zero);
        assert_eq!(a.entry(3, 1), &zero);
        assert_eq!(a.entry(3, 2), &c(Rat::one()));
        assert_eq!(a.entry(3, 3), &c(pl(&[1, 2, 3]) / pl(&[1, 2, 4])));
        assert_eq!(a.entry(3, 4), &zero);
        assert_eq!(a.entry(4, 1), &zero);
        assert_eq!(a.entry(4, 2), &zero);
        assert_eq!(a.entry(4, 3), &c(Rat::one()));
        assert_eq!(
            a.entry(4, 4),
            &LaurentPoly::constant(t.clone() * pl(&[2, 3, 4]) / pl(&[1, 2, 3]))
        );
    }

    #[test]
    fn the_companion_map_display_is_reproduced() {
        // The 5-choose-3 display of h, with its alternating signs and
        // (-1)^n lambda twist (n odd here, so the twist is -lambda).
        let p = pins_point(5, 3, 44);
        let m = p.matrix();
        let t = p.t().clone();
        let b = h_matrix(&p).unwrap();
        let pl = |s: &[i64]| m.plucker_set(s.to_vec());
        let c = |r: Rat| LaurentPoly::constant(r);
        let tt = |r: Rat| LaurentPoly::constant(r * t.clone());
        let nl = |r: Rat| LaurentPoly::monomial(1, -r);
        let zero = LaurentPoly::zero();
        // Row 1: t*P345/P145, 0, -lambda, lambda*P135/P145, -lambda*P134/P145
        assert_eq!(b.entry(1, 1), &tt(pl(&[3, 4, 5]) / pl(&[1, 4, 5])));
        assert_eq!(b.entry(1, 2), &zero);
        assert_eq!(b.entry(1, 3), &nl(Rat::one()));
        assert_eq!(b.entry(1, 4), &nl(-(pl(&[1, 3, 5]) / pl(&[1, 4, 5]))));
        assert_eq!(b.entry(1, 5), &nl(pl(&[1, 3, 4]) / pl(&[1, 4, 5])));
        // Row 2: -t*P245/P125, t*P145/P125, 0, -lambda, lambda*P124/P125
        assert_eq!(b.entry(2, 1), &tt(-(pl(&[2, 4, 5]) / pl(&[1, 2, 5]))));
        assert_eq!(b.entry(2, 2), &tt(pl(&[1, 4, 5]) / pl(&[1, 2, 5])));
        assert_eq!(b.entry(2, 3), &zero);
        assert_eq!(b.entry(2, 4), &nl(Rat::one()));
        assert_eq!(b.entry(2, 5), &nl(-(pl(&[1, 2, 4]) / pl(&[1, 2, 5]))));
        // Row 3: t*P235/P123, -t*P135/P123, t*P125/P123, 0, -lambda
        assert_eq!(b.entry(3, 1), &tt(pl(&[2, 3, 5]) / pl(&[1, 2, 3])));
        assert_eq!(b.entry(3, 2), &tt(-(pl(&[1, 3, 5]) / pl(&[1, 2, 3]))));
        assert_eq!(b.entry(3, 3), &tt(pl(&[1, 2, 5]) / pl(&[1, 2, 3])));
        assert_eq!(b.entry(3, 4), &zero);
        assert_eq!(b.entry(3, 5), &nl(Rat::one()));
        // Row 4: -1, P134/P234, -P124/P234, P123/P234, 0
        assert_eq!(b.entry(4, 1), &c(-Rat::one()));
        assert_eq!(b.entry(4, 2), &c(pl(&[1, 3, 4]) / pl(&[2, 3, 4])));
        assert_eq!(b.entry(4, 3), &c(-(pl(&[1, 2, 4]) / pl(&[2, 3, 4]))));
        assert_eq!(b.entry(4, 4), &c(pl(&[1, 2, 3]) / pl(&[2, 3, 4])));
        assert_eq!(b.entry(4, 5), &zero);
        // Row 5: 0, -1, P245/P345, -P235/P345, P234/P345
        assert_eq!(b.entry(5, 1), &zero);
        assert_eq!(b.entry(5, 2), &c(-Rat::one()));
        assert_eq!(b.entry(5, 3), &c(pl(&[2, 4, 5]) / pl(&[3, 4, 5])));
        assert_eq!(b.entry(5, 4), &c(-(pl(&[2, 3, 5]) / pl(&[3, 4, 5]))));
        assert_eq!(b.entry(5, 5), &c(pl(&[2, 3, 4]) / pl(&[3, 4, 5])));
    }

    #[test]
    fn the_matrix_map_lands_in_the_lower_subgroup_with_shifted_unipotent_profile() {
        let mut rng = StdRng::seed_from_u64(2001);
        for &(n, k) in &small_cases() {
            let p = sample_point(n, k, &mut rng);
            let a = g_matrix(&p).unwrap();
            assert!(a.is_lower(), "n={n} k={k}: g lands in the lower subgroup");
            assert!(
                a.is_shifted_unipotent(n - k),
                "n={n} k={k}: g is (n-k)-shifted unipotent"
            );
        }
    }

    #[test]
    fn the_first_block_determinant_rank_and_projection_identities_hold() {
        let mut rng = StdRng::seed_from_u64(2002);
        for &(n, k) in &small_cases() {
            for _ in 0..3 {
                let p = sample_point(n, k, &mut rng);
                assert!(g_first_block_matches_diagonal_form(&p).unwrap(), "n={n} k={k}");
                assert!(g_det_matches(&p).unwrap(), "n={n} k={k}");
                assert_eq!(g_specialized_rank(&p).unwrap(), k, "n={n} k={k}");
                assert!(pi_g_is_identity(&p).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn determinant_pins_for_the_two_displayed_cases() {
        // 5-choose-2: det g = (t + lambda)^3; 4-choose-3: det g = t - lambda.
        let p = pins_point(5, 2, 45);
        let t = p.t().clone();
        let expect = (&LaurentPoly::constant(t.clone()) + &LaurentPoly::var()).pow(3);
        assert_eq!(g_matrix(&p).unwrap().det(), expect);
        let q = pins_point(4, 3, 46);
        let t = q.t().clone();
        let expect = &LaurentPoly::constant(t.clone()) - &LaurentPoly::var();
        assert_eq!(g_matrix(&q).unwrap().det(), expect);
    }

    #[test]
    fn the_matrix_map_intertwines_every_generator() {
        let mut rng = StdRng::seed_from_u64(2003);
        for &(n, k) in &small_cases() {
            let p = sample_generic_point(n, k, &mut rng);
            for i in 0..n {
                let a = rat(2, 3);
                assert!(
                    g_intertwines_generator(&p, i, &a).unwrap(),
                    "n={n} k={k} residue {i}"
                );
                assert!(u_action_shift_transport(&p, i, &a), "n={n} k={k} residue {i}");
            }
            assert!(g_transports_shift(&p).unwrap(), "n={n} k={k}");
            assert!(h_transports_shift(&p).unwrap(), "n={n} k={k}");
        }
    }

    #[test]
    fn the_induced_structure_functions_and_action_match_the_point_level_ones() {
        let mut rng = StdRng::seed_from_u64(2004);
        for &(n, k) in &small_cases() {
            let p = sample_generic_point(n, k, &mut rng);
            let c = sample_c(&mut rng);
            assert!(g_induces_crystal(&p, &c).unwrap(), "n={n} k={k} c={c}");
        }
    }

    #[test]
    fn the_shifted_character_computes_the_decoration() {
        let mut rng = StdRng::seed_from_u64(2005);
        for &(n, k) in &small_cases() {
            let p = sample_generic_point(n, k, &mut rng);
            assert!(chi_computes_decoration(&p).unwrap(), "n={n} k={k}");
        }
        // Pin the displayed decoration of the 5-choose-2 case as a sum of
        // five Pluecker ratios.
        let p = pins_point(5, 2, 47);
        let m = p.matrix();
        let t = p.t().clone();
        let pl = |s: &[i64]| m.plucker_set(s.to_vec());
        let expect = pl(&[3, 5]) / pl(&[4, 5])
            + pl(&[1, 4]) / pl(&[1, 5])
            + t * pl(&[2, 5]) / pl(&[1, 2])
            + pl(&[1, 3]) / pl(&[2, 3])
            + pl(&[2, 4]) / pl(&[3, 4]);
        assert_eq!(g_matrix(&p).unwrap().chi(3), expect);
        assert_eq!(p.decoration().unwrap(), expect);
    }

    #[test]
    fn the_companion_map_is_the_scaled_inverse() {
        let mut rng = StdRng::seed_from_u64(2006);
        for &(n, k) in &small_cases() {
            let p = sample_point(n, k, &mut rng);
            assert!(h_is_scaled_inverse(&p).unwrap(), "n={n} k={k}");
        }
    }

    #[test]
    fn evaluating_at_loop_parameter_zero_recovers_the_chart_matrix() {
        let mut rng = StdRng::seed_from_u64(2007);
        for &(n, k) in &small_cases() {
            for _ in 0..3 {
                let rect = sample_rectangle(n, n - k, &mut rng);
                assert!(g_at_zero_matches_chart(&rect).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn undefined_points_are_reported_by_their_vanishing_coordinate() {
        // A 4-choose-2 point with P{1,2} = 0: rows 1 and 2 proportional.
        let m = GrassmannPoint::new(
            4,
            2,
            vec![
                vec![rat_int(1), rat_int(2)],
                vec![rat_int(2), rat_int(4)],
                vec![rat_int(0), rat_int(1)],
                vec![rat_int(1), rat_int(0)],
            ],
        )
        .unwrap();
        let p = CrystalPoint::new(m, rat_int(1)).unwrap();
        match g_matrix(&p) {
            Err(GrassmannError::UndefinedPoint { plucker }) => {
                assert_eq!(plucker, "P{1,2}");
            }
            other => panic!("expected an undefined-point error, got {other:?}"),
        }
    }

    #[test]
    fn beta_constants_differ_exactly_for_odd_n() {
        let t = rat(3, 2);
        assert_eq!(beta(4, 2, &t), beta_zero(2, &t));
        assert_ne!(beta(5, 2, &t), beta_zero(2, &t));
        // beta_zero(k) alternates with k.
        assert_eq!(
            beta_zero(2, &t),
            &LaurentPoly::constant(t.clone()) + &LaurentPoly::var()
        );
        assert_eq!(
            beta_zero(3, &t),
            &LaurentPoly::constant(t.clone()) - &LaurentPoly::var()
        );
    }
}
