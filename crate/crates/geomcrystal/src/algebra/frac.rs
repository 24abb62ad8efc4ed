//! The fraction field of Laurent polynomials in one variable: exact
//! arithmetic on ratios, with equality decided by cross-multiplication.

use super::field::Field;
use super::laurent::LaurentPoly;
use super::rat::Rat;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A ratio of Laurent polynomials. The denominator is never zero; both
/// sides are normalized by a common monomial shift so the denominator has
/// valuation 0 (and the numerator's valuation is the fraction's valuation).
/// No polynomial gcd is taken; equality cross-multiplies.
#[derive(Clone, Debug)]
pub struct LaurentFrac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFrac {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        LaurentFrac { num, den }.normalize()
    }

    /// The monomial `c * eps^exp`.
    pub fn monomial(exp: i64, c: Rat) -> Self {
        LaurentFrac {
            num: LaurentPoly::monomial(exp, c),
            den: LaurentPoly::one(),
        }
    }

    /// A constant rational.
    pub fn constant(c: Rat) -> Self {
        LaurentFrac {
            num: LaurentPoly::constant(c),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        LaurentFrac { num: p, den: LaurentPoly::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// The order of vanishing at eps = 0 (lowest exponent), or `None` for
    /// the zero fraction.
    pub fn valuation(&self) -> Option<i64> {
        Some(self.num.val()? - self.den.val().expect("denominator nonzero"))
    }

    fn normalize(mut self) -> Self {
        let vd = self.den.val().expect("denominator nonzero");
        if vd != 0 {
            self.num = self.num.shift(-vd);
            self.den = self.den.shift(-vd);
        }
        self
    }
}

impl PartialEq for LaurentFrac {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for LaurentFrac {}

impl Add for LaurentFrac {
    type Output = LaurentFrac;
    fn add(self, other: Self) -> Self {
        LaurentFrac {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
        .normalize()
    }
}

impl Sub for LaurentFrac {
    type Output = LaurentFrac;
    fn sub(self, other: Self) -> Self {
        LaurentFrac {
            num: &(&self.num * &other.den) - &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
        .normalize()
    }
}

impl Mul for LaurentFrac {
    type Output = LaurentFrac;
    fn mul(self, other: Self) -> Self {
        LaurentFrac {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
        .normalize()
    }
}

impl Div for LaurentFrac {
    type Output = LaurentFrac;
    fn div(self, other: Self) -> Self {
        assert!(!other.num.is_zero(), "division by zero fraction");
        LaurentFrac {
            num: &self.num * &other.den,
            den: &self.den * &other.num,
        }
        .normalize()
    }
}

impl Neg for LaurentFrac {
    type Output = LaurentFrac;
    fn neg(self) -> Self {
        LaurentFrac { num: -self.num, den: self.den }
    }
}

impl Zero for LaurentFrac {
    fn zero() -> Self {
        LaurentFrac::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for LaurentFrac {
    fn one() -> Self {
        LaurentFrac::from_poly(LaurentPoly::one())
    }
}

impl Field for LaurentFrac {
    fn from_int(n: i64) -> Self {
        LaurentFrac::constant(Rat::from_integer(n.into()))
    }
}

impl fmt::Display for LaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
