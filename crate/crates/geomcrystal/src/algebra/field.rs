//! A minimal field abstraction: exactly the operations the geometric layer
//! needs, implemented by `Rat` and by `LaurentFrac`.

use num::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact field arithmetic with owned operations.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// The integer `n` as a field element.
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::one() / self.clone()
    }
}

impl Field for crate::algebra::Rat {
    fn from_int(n: i64) -> Self {
        crate::algebra::rat_int(n)
    }
}
