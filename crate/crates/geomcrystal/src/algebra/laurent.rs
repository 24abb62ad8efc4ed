//! Laurent polynomials in one indeterminate with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::rat::{rat_int, Rat};

/// A Laurent polynomial `sum c_e * x^e` with `c_e` rational and finitely
/// many nonzero terms. Exponents may be negative.
///
/// Coefficients are stored sparsely by exponent and zero coefficients are
/// never stored, so structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    /// The constant `c`.
    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    /// The constant integer `n`.
    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// The monomial `c * x^exp`.
    pub fn monomial(exp: i64, c: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// The indeterminate `x`.
    pub fn var() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `x^exp`.
    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterate over `(exponent, coefficient)` pairs in increasing exponent
    /// order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Lowest exponent with nonzero coefficient, or `None` for zero.
    pub fn val(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient, or `None` for zero.
    pub fn deg(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Raise to a nonnegative integer power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at `x = point`. Panics if the polynomial has a negative
    /// exponent and `point == 0`.
    pub fn eval(&self, point: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                num::pow::pow(point.clone(), e as usize)
            } else {
                assert!(!point.is_zero(), "negative exponent evaluated at 0");
                num::pow::pow(point.clone(), (-e) as usize).recip()
            };
            acc += c * p;
        }
        acc
    }

    /// True if every coefficient is positive.
    pub fn all_coeffs_positive(&self) -> bool {
        self.coeffs.values().all(|c| c.is_positive())
    }

    fn insert_term(coeffs: &mut BTreeMap<i64, Rat>, e: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        match coeffs.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(Rat::one())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in rhs.terms() {
            LaurentPoly::insert_term(&mut coeffs, e, c.clone());
        }
        LaurentPoly { coeffs }
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in rhs.terms() {
            LaurentPoly::insert_term(&mut coeffs, e, -c.clone());
        }
        LaurentPoly { coeffs }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = BTreeMap::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                LaurentPoly::insert_term(&mut coeffs, e1 + e2, c1 * c2);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                first = false;
            } else if c.is_positive() {
                write!(f, " + ")?;
            } else {
                write!(f, " - ")?;
            }
            let mag = if first || c.is_positive() { c.clone() } else { -c.clone() };
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if mag.is_one() => write!(f, "x^{e}")?,
                _ => write!(f, "{mag}*x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x() -> LaurentPoly {
        LaurentPoly::var()
    }

    #[test]
    fn difference_of_squares() {
        let one = LaurentPoly::one();
        let p = &(&one + &x()) * &(&one - &x());
        let mut expected = LaurentPoly::one();
        expected = &expected - &x().pow(2);
        assert_eq!(p, expected);
    }

    #[test]
    fn val_and_deg_track_support() {
        let p = &LaurentPoly::monomial(-2, rat_int(3)) + &LaurentPoly::monomial(5, rat(1, 2));
        assert_eq!(p.val(), Some(-2));
        assert_eq!(p.deg(), Some(5));
        assert_eq!(p.coeff(-2), rat_int(3));
        assert_eq!(p.coeff(0), rat_int(0));
        assert_eq!(LaurentPoly::zero().val(), None);
    }

    #[test]
    fn cancellation_removes_entries() {
        let p = &x() - &x();
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn eval_handles_negative_exponents() {
        let p = &LaurentPoly::monomial(-1, rat_int(1)) + &LaurentPoly::monomial(2, rat_int(3));
        assert_eq!(p.eval(&rat_int(2)), rat(1, 2) + rat_int(12));
    }

    #[test]
    fn shift_multiplies_by_monomial() {
        let p = &LaurentPoly::one() + &x();
        assert_eq!(p.shift(-1), &LaurentPoly::monomial(-1, rat_int(1)) + &LaurentPoly::one());
    }
}
