//! Birational Bender-Knuth involutions on the rational chart, their
//! min-plus counterparts on rectangle coordinates, and the resulting
//! birational/piecewise-linear promotion maps.
//!
//! The involution `sigma_r` only changes the chart entries `X_{ir}` in
//! column `r`, replacing each by `f_{ir} g_{ir} / X_{ir}` where `f` picks up
//! the neighbours above-left and right and `g` the neighbours left and
//! below-right (missing neighbours degenerate to `t` respectively `1`).
//! Promotion is the composition `sigma_1 ∘ ... ∘ sigma_{n-1}` (rightmost
//! factor applied first), and it intertwines the cyclic shift on the
//! Grassmannian side. Substituting `min` for addition, `+` for
//! multiplication, and `-` for division gives the piecewise-linear
//! involutions that realise tableau Bender-Knuth moves on rectangle
//! coordinates.

use super::chart::RationalRectangle;
use crate::algebra::Field;
use crate::grassmann::GrassmannError;
use crate::tableau::KRectangle;

/// Rows `i` with `(i, r)` in the index set of a chart with `rows` rows of
/// width `width`.
fn rows_meeting_column(rows: usize, width: usize, r: usize) -> std::ops::RangeInclusive<usize> {
    let lo = if r > width { r - width + 1 } else { 1 };
    lo..=rows.min(r)
}

/// The birational Bender-Knuth involution `sigma_r` on the chart,
/// `1 <= r <= n-1`. Only column `r` changes: `X'_{ir} = f_{ir} g_{ir} / X_{ir}`
/// with
///
/// ```text
/// f_{ir} = X_{i-1,r-1} + X_{i,r+1}   (t when row 1 has no right neighbour,
///                                     dropping whichever neighbour is absent)
/// g_{ir} = X_{i,r-1} X_{i+1,r+1} / (X_{i,r-1} + X_{i+1,r+1})
///                                    (1 when the bottom row has no left
///                                     neighbour, dropping absent neighbours)
/// ```
///
/// Errors when a denominator or a new entry vanishes; on charts with all
/// entries positive the map is total.
pub fn geometric_bk<F: Field>(
    rect: &RationalRectangle<F>,
    r: usize,
) -> Result<RationalRectangle<F>, GrassmannError> {
    let m = rect.rows();
    let w = rect.width();
    let n = rect.n();
    assert!(1 <= r && r < n, "involution index {r} outside 1..={}", n - 1);
    let mut out = rect.clone();
    for i in rows_meeting_column(m, w, r) {
        let f = if i != 1 && r != i + w - 1 {
            rect.entry(i - 1, r - 1).clone() + rect.entry(i, r + 1).clone()
        } else if i != 1 {
            rect.entry(i - 1, r - 1).clone()
        } else if r != w {
            rect.entry(1, r + 1).clone()
        } else {
            rect.t().clone()
        };
        let g = if i != m && r != i {
            let left = rect.entry(i, r - 1).clone();
            let below = rect.entry(i + 1, r + 1).clone();
            let sum = left.clone() + below.clone();
            if sum.is_zero() {
                return Err(GrassmannError::Degenerate(format!(
                    "X{}_{} + X{}_{}",
                    i,
                    r - 1,
                    i + 1,
                    r + 1
                )));
            }
            left * below / sum
        } else if i != m {
            rect.entry(i + 1, r + 1).clone()
        } else if r != m {
            rect.entry(i, r - 1).clone()
        } else {
            F::one()
        };
        if f.is_zero() {
            return Err(GrassmannError::Degenerate(format!(
                "X{}_{} + X{}_{}",
                i - 1,
                r - 1,
                i,
                r + 1
            )));
        }
        out.set_entry(i, r, f * g / rect.entry(i, r).clone());
    }
    Ok(out)
}

/// Birational promotion on the chart: `sigma_{n-1}` first, then down to
/// `sigma_1`.
pub fn geometric_pr<F: Field>(
    rect: &RationalRectangle<F>,
) -> Result<RationalRectangle<F>, GrassmannError> {
    let mut cur = rect.clone();
    for r in (1..rect.n()).rev() {
        cur = geometric_bk(&cur, r)?;
    }
    Ok(cur)
}

/// The inverse of [`geometric_pr`]: `sigma_1` first, up to `sigma_{n-1}`.
pub fn geometric_pr_inverse<F: Field>(
    rect: &RationalRectangle<F>,
) -> Result<RationalRectangle<F>, GrassmannError> {
    let mut cur = rect.clone();
    for r in 1..rect.n() {
        cur = geometric_bk(&cur, r)?;
    }
    Ok(cur)
}

fn value_index(n: usize, k: usize, i: usize, j: usize) -> usize {
    (i - 1) * (n - k) + (j - i)
}

/// The piecewise-linear Bender-Knuth involution on raw rectangle
/// coordinates: `vals` holds `B_{ij}` row-major over the `k`-row index set,
/// `l` is the column bound, and only column `r` changes:
/// `B'_{ir} = f_{ir} + g_{ir} - B_{ir}` with
///
/// ```text
/// f_{ir} = min(B_{i-1,r-1}, B_{i,r+1})   (L for the missing right neighbour
///                                         in row 1, dropping absent terms)
/// g_{ir} = max(B_{i,r-1}, B_{i+1,r+1})   (0 for the missing left neighbour
///                                         in the bottom row)
/// ```
///
/// Defined on every integer point, not just on valid rectangles.
pub fn tropical_bk_values(n: usize, k: usize, vals: &[i64], l: i64, r: usize) -> Vec<i64> {
    assert!(1 <= k && k < n, "rows {k} outside 1..={}", n - 1);
    assert_eq!(vals.len(), k * (n - k), "expected {} coordinates", k * (n - k));
    assert!(1 <= r && r < n, "involution index {r} outside 1..={}", n - 1);
    let w = n - k;
    let at = |i: usize, j: usize| vals[value_index(n, k, i, j)];
    let mut out = vals.to_vec();
    for i in rows_meeting_column(k, w, r) {
        let f = if i != 1 && r != i + w - 1 {
            at(i - 1, r - 1).min(at(i, r + 1))
        } else if i != 1 {
            at(i - 1, r - 1)
        } else if r != w {
            at(1, r + 1)
        } else {
            l
        };
        let g = if i != k && r != i {
            at(i, r - 1).max(at(i + 1, r + 1))
        } else if i != k {
            at(i + 1, r + 1)
        } else if r != k {
            at(i, r - 1)
        } else {
            0
        };
        out[value_index(n, k, i, r)] = f + g - at(i, r);
    }
    out
}

/// The piecewise-linear Bender-Knuth involution on a rectangle; realises
/// the tableau-side involution `sigma_r` in coordinates.
pub fn tropical_bk(rect: &KRectangle, r: usize) -> KRectangle {
    let vals = tropical_bk_values(rect.n(), rect.k(), rect.entries(), rect.l(), r);
    KRectangle::new(rect.n(), rect.k(), vals, rect.l())
        .expect("piecewise-linear Bender-Knuth preserves rectangles")
}

/// Piecewise-linear promotion on raw coordinates: `sigma_{n-1}` first, then
/// down to `sigma_1`. Defined on every integer point.
pub fn tropical_pr_values(n: usize, k: usize, vals: &[i64], l: i64) -> Vec<i64> {
    let mut cur = vals.to_vec();
    for r in (1..n).rev() {
        cur = tropical_bk_values(n, k, &cur, l, r);
    }
    cur
}

/// Inverse piecewise-linear promotion on raw coordinates: `sigma_1` first.
pub fn tropical_pr_inverse_values(n: usize, k: usize, vals: &[i64], l: i64) -> Vec<i64> {
    let mut cur = vals.to_vec();
    for r in 1..n {
        cur = tropical_bk_values(n, k, &cur, l, r);
    }
    cur
}

/// Piecewise-linear promotion on a rectangle; realises tableau promotion in
/// coordinates.
pub fn tropical_pr(rect: &KRectangle) -> KRectangle {
    let vals = tropical_pr_values(rect.n(), rect.k(), rect.entries(), rect.l());
    KRectangle::new(rect.n(), rect.k(), vals, rect.l())
        .expect("piecewise-linear promotion preserves rectangles")
}

/// Inverse piecewise-linear promotion on a rectangle.
pub fn tropical_pr_inverse(rect: &KRectangle) -> KRectangle {
    let vals = tropical_pr_inverse_values(rect.n(), rect.k(), rect.entries(), rect.l());
    KRectangle::new(rect.n(), rect.k(), vals, rect.l())
        .expect("inverse piecewise-linear promotion preserves rectangles")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt_param::{sample_rectangle, theta, theta_inverse};
    use crate::grassmann::ShiftDir;
    use crate::tableau::all_rectangles;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn each_birational_involution_squares_to_the_identity() {
        let mut rng = StdRng::seed_from_u64(41);
        for n in 2..=6usize {
            for m in 1..n {
                for _ in 0..3 {
                    let rect = sample_rectangle(n, m, &mut rng);
                    for r in 1..n {
                        let once = geometric_bk(&rect, r).unwrap();
                        let twice = geometric_bk(&once, r).unwrap();
                        assert_eq!(twice, rect, "sigma_{r} squared at n={n}, rows={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn distant_birational_involutions_commute() {
        let mut rng = StdRng::seed_from_u64(42);
        for n in 4..=6usize {
            for m in 1..n {
                let rect = sample_rectangle(n, m, &mut rng);
                for a in 1..n {
                    for b in a + 2..n {
                        let ab = geometric_bk(&geometric_bk(&rect, b).unwrap(), a).unwrap();
                        let ba = geometric_bk(&geometric_bk(&rect, a).unwrap(), b).unwrap();
                        assert_eq!(ab, ba, "sigma_{a} sigma_{b} at n={n}, rows={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn the_piecewise_linear_involution_is_an_involution_on_arbitrary_points() {
        let mut rng = StdRng::seed_from_u64(43);
        for n in 2..=6usize {
            for k in 1..n {
                for _ in 0..5 {
                    let vals: Vec<i64> =
                        (0..k * (n - k)).map(|_| rng.random_range(-6..=6)).collect();
                    let l = rng.random_range(-3..=6);
                    for r in 1..n {
                        let once = tropical_bk_values(n, k, &vals, l, r);
                        let twice = tropical_bk_values(n, k, &once, l, r);
                        assert_eq!(twice, vals);
                    }
                }
            }
        }
    }

    #[test]
    fn the_piecewise_linear_involution_matches_the_tableau_involution() {
        for n in 2..=4usize {
            for k in 1..n {
                for l in 0..=3i64 {
                    for rect in all_rectangles(n, k, l) {
                        let tab = rect.to_tableau();
                        for r in 1..n {
                            let coordinate_side = tropical_bk(&rect, r);
                            let tableau_side =
                                KRectangle::from_tableau(&tab.bender_knuth(r), k).unwrap();
                            assert_eq!(coordinate_side, tableau_side);

                            let lattice = rect.to_gt().unwrap().bk_piecewise_linear(r);
                            assert_eq!(coordinate_side, KRectangle::from_gt(&lattice, k).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn piecewise_linear_promotion_matches_tableau_promotion() {
        for n in 2..=4usize {
            for k in 1..n {
                for l in 0..=3i64 {
                    for rect in all_rectangles(n, k, l) {
                        let promoted = tropical_pr(&rect);
                        let via_tableau =
                            KRectangle::from_tableau(&rect.to_tableau().promote(), k).unwrap();
                        assert_eq!(promoted, via_tableau);
                        assert_eq!(tropical_pr_inverse(&promoted), rect);

                        let mut around = rect.clone();
                        for _ in 0..n {
                            around = tropical_pr(&around);
                        }
                        assert_eq!(around, rect, "promotion to the n-th power");
                    }
                }
            }
        }
    }

    #[test]
    fn the_worked_promotion_example_in_coordinates() {
        let rect = KRectangle::new(4, 2, vec![2, 5, 1, 3], 6).unwrap();
        let promoted = tropical_pr(&rect);
        assert_eq!(promoted.entries(), &[3, 4, 1, 3]);
        assert_eq!(promoted.l(), 6);
        assert_eq!(tropical_pr_inverse(&promoted), rect);
    }

    #[test]
    fn birational_promotion_intertwines_the_cyclic_shift() {
        let mut rng = StdRng::seed_from_u64(44);
        for n in 2..=6usize {
            for m in 1..n {
                for _ in 0..3 {
                    let rect = sample_rectangle(n, m, &mut rng);
                    let lhs = geometric_pr(&rect).unwrap();
                    let shifted = theta(&rect).unwrap().cyclic_shift(ShiftDir::Forward);
                    let rhs = theta_inverse(&shifted).unwrap();
                    assert_eq!(lhs, rhs, "promotion vs shift at n={n}, rows={m}");
                }
            }
        }
    }

    #[test]
    fn birational_promotion_to_the_nth_power_is_the_identity_on_the_chart() {
        let mut rng = StdRng::seed_from_u64(45);
        for (n, m) in [(3usize, 1usize), (4, 2), (5, 2), (5, 3)] {
            let rect = sample_rectangle(n, m, &mut rng);
            let mut cur = rect.clone();
            for _ in 0..n {
                cur = geometric_pr(&cur).unwrap();
            }
            assert_eq!(cur, rect);
        }
    }

    #[test]
    fn inverse_birational_promotion_undoes_promotion() {
        let mut rng = StdRng::seed_from_u64(46);
        for n in 2..=5usize {
            for m in 1..n {
                let rect = sample_rectangle(n, m, &mut rng);
                let there = geometric_pr(&rect).unwrap();
                assert_eq!(geometric_pr_inverse(&there).unwrap(), rect);
            }
        }
    }
}
