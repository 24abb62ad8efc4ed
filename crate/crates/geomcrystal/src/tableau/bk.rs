//! Bender-Knuth involutions, promotion, evacuation, and the affine
//! crystal operators on rectangular tableaux.

use super::ssyt::{Direction, Tableau};

impl Tableau {
    /// The Bender-Knuth involution `sigma_r`: in each row, the letters `r`
    /// not directly above an `r+1` and the letters `r+1` not directly below
    /// an `r` form a consecutive block `r^a (r+1)^b`, which is replaced by
    /// `r^b (r+1)^a`.
    pub fn bender_knuth(&self, r: usize) -> Tableau {
        assert!((1..self.n()).contains(&r), "index {r} outside 1..={}", self.n() - 1);
        let lo = r as u8;
        let hi = lo + 1;
        let mut rows: Vec<Vec<u8>> = self.rows().to_vec();
        for i in 0..rows.len() {
            let mut free = Vec::new();
            let mut free_lo = 0usize;
            for j in 0..rows[i].len() {
                let v = rows[i][j];
                if v == lo {
                    let covered = i + 1 < rows.len()
                        && j < rows[i + 1].len()
                        && rows[i + 1][j] == hi;
                    if !covered {
                        free.push(j);
                        free_lo += 1;
                    }
                } else if v == hi {
                    let supported = i > 0 && rows[i - 1][j] == lo;
                    if !supported {
                        free.push(j);
                    }
                }
            }
            debug_assert!(
                free.windows(2).all(|w| w[1] == w[0] + 1),
                "free letters form a consecutive block"
            );
            let free_hi = free.len() - free_lo;
            for (pos, &j) in free.iter().enumerate() {
                rows[i][j] = if pos < free_hi { lo } else { hi };
            }
        }
        Tableau::new(self.n(), rows).expect("Bender-Knuth preserves semistandardness")
    }

    /// Promotion: apply `sigma_{n-1}` first, then down to `sigma_1`.
    pub fn promote(&self) -> Tableau {
        let mut t = self.clone();
        for r in (1..self.n()).rev() {
            t = t.bender_knuth(r);
        }
        t
    }

    /// The inverse of [`Tableau::promote`]: apply `sigma_1` first, up to
    /// `sigma_{n-1}`.
    pub fn promote_inverse(&self) -> Tableau {
        let mut t = self.clone();
        for r in 1..self.n() {
            t = t.bender_knuth(r);
        }
        t
    }

    /// Evacuation (the Schuetzenberger involution): the chain
    /// `sigma_1 ... sigma_{n-1}` applied innermost-first, then
    /// `sigma_2 ... sigma_{n-1}`, and so on up to `sigma_{n-1}` alone.
    pub fn evacuate(&self) -> Tableau {
        let n = self.n();
        let mut t = self.clone();
        for start in 1..n {
            for r in (start..n).rev() {
                t = t.bender_knuth(r);
            }
        }
        t
    }
}

/// The affine statistics `(eps_0, phi_0)` of a rectangular tableau, defined
/// through promotion: `eps_0 = eps_1 o pr` and `phi_0 = phi_1 o pr`.
pub fn affine_stats(t: &Tableau) -> (i64, i64) {
    assert!(
        t.is_empty() || t.rectangular_shape().is_some(),
        "affine operators act on rectangular tableaux"
    );
    if t.n() < 2 {
        return (0, 0);
    }
    t.promote().crystal_stats(1)
}

/// The affine operator `e_0` (raise) or `f_0` (lower) on a rectangular
/// tableau: conjugate `e_1`/`f_1` by promotion. `None` when undefined.
pub fn affine_op(t: &Tableau, dir: Direction) -> Option<Tableau> {
    assert!(
        t.is_empty() || t.rectangular_shape().is_some(),
        "affine operators act on rectangular tableaux"
    );
    if t.n() < 2 {
        return None;
    }
    let moved = t.promote().crystal_op(1, dir)?;
    Some(moved.promote_inverse())
}

/// `(eps_i, phi_i)` for any residue `i` mod `n` (index 0 is the affine one).
pub fn crystal_stats_mod_n(t: &Tableau, i: usize) -> (i64, i64) {
    let i = i % t.n();
    if i == 0 {
        affine_stats(t)
    } else {
        t.crystal_stats(i)
    }
}

/// `e_i`/`f_i` for any residue `i` mod `n` (index 0 is the affine one).
pub fn crystal_op_mod_n(t: &Tableau, i: usize, dir: Direction) -> Option<Tableau> {
    let i = i % t.n();
    if i == 0 {
        affine_op(t, dir)
    } else {
        t.crystal_op(i, dir)
    }
}
