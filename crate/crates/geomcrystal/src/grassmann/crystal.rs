//! The affine geometric crystal on Gr(k,n) x C^*: the weight map, the
//! structure functions, the unipotent crystal actions, the decoration, and
//! the twisted cyclic shift.

use super::point::{interval, set_label, GrassmannError, GrassmannPoint};
use crate::algebra::{rat, rat_int, Field, Rat};
use num::Zero;
use rand::Rng;

/// Direction for the twisted cyclic shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftDir {
    Forward,
    Inverse,
}

/// All structure data of a point at once, indexed by residue (position i
/// holds the residue-i function, with residue 0 the affine one; `gamma`
/// holds the n weight components in natural order).
#[derive(Clone, Debug, PartialEq)]
pub struct GeomMaps<F: Field> {
    pub gamma: Vec<F>,
    pub phi: Vec<F>,
    pub eps: Vec<F>,
    pub f: F,
}

/// A point of the decorated geometric crystal: a Grassmannian point
/// together with a nonzero deformation parameter t.
#[derive(Clone, Debug, PartialEq)]
pub struct CrystalPoint<F: Field> {
    m: GrassmannPoint<F>,
    t: F,
}

impl<F: Field> CrystalPoint<F> {
    pub fn new(m: GrassmannPoint<F>, t: F) -> Result<Self, GrassmannError> {
        if t.is_zero() {
            return Err(GrassmannError::ZeroParameter);
        }
        if m.k() >= m.n() {
            return Err(GrassmannError::BadDimensions(format!(
                "crystal charts need 1 <= k <= n-1, got n={}, k={}",
                m.n(),
                m.k()
            )));
        }
        Ok(CrystalPoint { m, t })
    }

    pub fn matrix(&self) -> &GrassmannPoint<F> {
        &self.m
    }

    pub fn t(&self) -> &F {
        &self.t
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn k(&self) -> usize {
        self.m.k()
    }

    /// `(-1)^{k-1}` as a field element.
    fn twist_sign(&self) -> F {
        if self.k() % 2 == 1 {
            F::one()
        } else {
            -F::one()
        }
    }

    fn nonzero_ratio(&self, num: F, den: F, den_elems: &[i64]) -> Result<F, GrassmannError> {
        if den.is_zero() {
            return Err(GrassmannError::UndefinedPoint {
                plucker: set_label(self.n(), den_elems),
            });
        }
        Ok(num / den)
    }

    /// The weight map: component i is the cyclic Plücker ratio at i,
    /// multiplied by t for i > k.
    pub fn gamma(&self) -> Result<Vec<F>, GrassmannError> {
        let (n, k) = (self.n() as i64, self.k() as i64);
        let mut out = Vec::with_capacity(n as usize);
        for i in 1..=n {
            let num = self.m.plucker_set(interval(i - k + 1, i));
            let den_elems = interval(i - k, i - 1);
            let den = self.m.plucker_set(den_elems.clone());
            let mut g = self.nonzero_ratio(num, den, &den_elems)?;
            if i > k {
                g = self.t.clone() * g;
            }
            out.push(g);
        }
        Ok(out)
    }

    /// The structure function paired with the lowering direction at
    /// residue i (0 is the affine residue).
    pub fn phi(&self, i: usize) -> Result<F, GrassmannError> {
        let n = self.n();
        assert!(i < n, "residue out of range");
        let (i, k) = (i as i64, self.k() as i64);
        let mut num_elems = interval(i - k + 1, i - 1);
        num_elems.push(i + 1);
        let num = self.m.plucker_set(num_elems);
        let den_elems = interval(i - k + 1, i);
        let den = self.m.plucker_set(den_elems.clone());
        let mut v = self.nonzero_ratio(num, den, &den_elems)?;
        if i == 0 {
            v = v / self.t.clone();
        }
        Ok(v)
    }

    /// The structure function paired with the raising direction at
    /// residue i.
    pub fn eps(&self, i: usize) -> Result<F, GrassmannError> {
        let n = self.n();
        assert!(i < n, "residue out of range");
        let (i, k) = (i as i64, self.k() as i64);
        let mut num1_elems = interval(i - k + 1, i - 1);
        num1_elems.push(i + 1);
        let num = self.m.plucker_set(num1_elems) * self.m.plucker_set(interval(i - k + 1, i));
        let den1_elems = interval(i - k, i - 1);
        let den2_elems = interval(i - k + 2, i + 1);
        let den1 = self.m.plucker_set(den1_elems.clone());
        if den1.is_zero() {
            return Err(GrassmannError::UndefinedPoint {
                plucker: set_label(n, &den1_elems),
            });
        }
        let den2 = self.m.plucker_set(den2_elems.clone());
        if den2.is_zero() {
            return Err(GrassmannError::UndefinedPoint {
                plucker: set_label(n, &den2_elems),
            });
        }
        let mut v = num / (den1 * den2);
        if i == k {
            v = v / self.t.clone();
        }
        Ok(v)
    }

    /// The decoration: a sum of n Plücker ratios, with the term at
    /// residue k carrying a factor of t.
    pub fn decoration(&self) -> Result<F, GrassmannError> {
        let (n, k) = (self.n() as i64, self.k() as i64);
        let mut acc = F::zero();
        for i in 1..=n {
            let mut num_elems = vec![i - k];
            num_elems.extend(interval(i - k + 2, i));
            let num = self.m.plucker_set(num_elems);
            let den_elems = interval(i - k + 1, i);
            let den = self.m.plucker_set(den_elems.clone());
            let mut term = self.nonzero_ratio(num, den, &den_elems)?;
            if i == k {
                term = self.t.clone() * term;
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// All structure data at once.
    pub fn geom_maps(&self) -> Result<GeomMaps<F>, GrassmannError> {
        let n = self.n();
        let gamma = self.gamma()?;
        let mut phi = Vec::with_capacity(n);
        let mut eps = Vec::with_capacity(n);
        for i in 0..n {
            phi.push(self.phi(i)?);
            eps.push(self.eps(i)?);
        }
        let f = self.decoration()?;
        Ok(GeomMaps { gamma, phi, eps, f })
    }

    /// The crystal action at residue i with parameter c: left-multiply by
    /// the unipotent with entry (c-1)/phi_i in position (i, i+1), twisted
    /// by (-1)^{k-1}/t in the affine position (n, 1).
    pub fn apply_ei(&self, i: usize, c: &F) -> Result<CrystalPoint<F>, GrassmannError> {
        let n = self.n();
        assert!(i < n, "residue out of range");
        assert!(!c.is_zero(), "the action parameter c must be nonzero");
        if c.is_one() {
            // The action is unital: parameter 1 fixes every point, even
            // where the structure functions are undefined.
            return Ok(self.clone());
        }
        let phi = self.phi(i)?;
        if phi.is_zero() {
            let (ii, k) = (i as i64, self.k() as i64);
            let mut num_elems = interval(ii - k + 1, ii - 1);
            num_elems.push(ii + 1);
            return Err(GrassmannError::UndefinedPoint {
                plucker: set_label(n, &num_elems),
            });
        }
        let mut a = (c.clone() - F::one()) / phi;
        if a.is_zero() {
            return Ok(self.clone());
        }
        let m = if i == 0 {
            a = a * self.twist_sign() / self.t.clone();
            self.m.add_row_multiple(n, 1, &a)
        } else {
            self.m.add_row_multiple(i, i + 1, &a)
        };
        Ok(CrystalPoint { m, t: self.t.clone() })
    }

    /// The twisted cyclic shift: rows move down by one (mod n) and the row
    /// wrapping around is scaled by (-1)^{k-1} t (forward) or its inverse
    /// (inverse direction).
    pub fn cyclic_shift(&self, dir: ShiftDir) -> CrystalPoint<F> {
        let n = self.n();
        let k = self.k();
        let rows = self.m.rows();
        let scale = self.twist_sign() * self.t.clone();
        let new_rows: Vec<Vec<F>> = match dir {
            ShiftDir::Forward => {
                let mut v = Vec::with_capacity(n);
                v.push(rows[n - 1].iter().map(|x| scale.clone() * x.clone()).collect());
                v.extend(rows[..n - 1].iter().cloned());
                v
            }
            ShiftDir::Inverse => {
                let inv = F::one() / scale;
                let mut v: Vec<Vec<F>> = rows[1..].to_vec();
                v.push(rows[0].iter().map(|x| inv.clone() * x.clone()).collect());
                v
            }
        };
        CrystalPoint {
            m: GrassmannPoint::from_rows_unchecked(n, k, new_rows),
            t: self.t.clone(),
        }
    }

    /// Shift a residue index by one step (mod n), used when transporting
    /// operators along the cyclic shift.
    pub fn residue_sub_one(i: usize, n: usize) -> usize {
        (i + n - 1) % n
    }

    /// Projective equality of crystal points: equal parameters and
    /// projectively equal Grassmannian points.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.t == other.t && self.m.projectively_equal(&other.m)
    }
}

/// Sample a random crystal point of the (k,n) chart with matrix entries
/// uniform in {1,...,9} and positive rational t, resampled until every
/// cyclic interval Plücker coordinate is nonzero.
pub fn sample_point<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> CrystalPoint<Rat> {
    loop {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..k).map(|_| rat_int(rng.random_range(1..=9))).collect())
            .collect();
        let Ok(m) = GrassmannPoint::new(n, k, rows) else {
            continue;
        };
        let cyclic_ok = (1..=n as i64)
            .all(|i| !m.plucker_set(interval(i - k as i64 + 1, i)).is_zero());
        if !cyclic_ok {
            continue;
        }
        let t = rat(rng.random_range(1..=9), rng.random_range(1..=9));
        return CrystalPoint::new(m, t).expect("validated above");
    }
}

/// Sample a crystal point at which every structure function is defined and
/// nonzero, so all crystal actions can be applied.
pub fn sample_generic_point<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> CrystalPoint<Rat> {
    loop {
        let p = sample_point(n, k, rng);
        if let Ok(maps) = p.geom_maps() {
            if maps.phi.iter().all(|v| !v.is_zero()) && maps.eps.iter().all(|v| !v.is_zero()) {
                return p;
            }
        }
    }
}

/// Sample an action parameter from {1/3, 1/2, 1, 2, 3, 5}; includes 1 to
/// hit the unital case.
pub fn sample_c<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    let choices = [rat(1, 3), rat(1, 2), rat_int(1), rat_int(2), rat_int(3), rat_int(5)];
    choices[rng.random_range(0..choices.len())].clone()
}
