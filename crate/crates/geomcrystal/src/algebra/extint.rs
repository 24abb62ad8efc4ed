//! Integers extended with a dedicated top element.

use std::cmp::Ordering;
use std::ops::{Add, Sub};

/// An integer together with a top element `+infinity`.
///
/// Used for boundary conventions in piecewise-linear formulas, where a
/// missing entry acts as an identity for `min`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtInt {
    Fin(i64),
    PosInf,
}

impl ExtInt {
    /// The finite value, or `None` for `PosInf`.
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(v) => Some(v),
            ExtInt::PosInf => None,
        }
    }

    /// The finite value; panics on `PosInf`.
    pub fn expect_finite(self) -> i64 {
        self.finite().expect("expected a finite extended integer")
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Fin(v)
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::PosInf, ExtInt::PosInf) => Ordering::Equal,
            (ExtInt::PosInf, ExtInt::Fin(_)) => Ordering::Greater,
            (ExtInt::Fin(_), ExtInt::PosInf) => Ordering::Less,
            (ExtInt::Fin(a), ExtInt::Fin(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => ExtInt::Fin(a + b),
            _ => ExtInt::PosInf,
        }
    }
}

impl Sub for ExtInt {
    type Output = ExtInt;
    fn sub(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => ExtInt::Fin(a - b),
            (ExtInt::PosInf, ExtInt::Fin(_)) => ExtInt::PosInf,
            _ => panic!("cannot subtract +infinity"),
        }
    }
}
