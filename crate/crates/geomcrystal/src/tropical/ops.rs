//! The piecewise-linear crystal on integer chart points, obtained by
//! tropicalizing the symbolic chart maps.
//!
//! Raising and lowering at residue `i` conjugate the residue-1 action by
//! promotion; whether the combinatorial operator is defined is decided by
//! the sign of the tropicalized decoration after the move.

use super::symbolic::{build_symbolic, MapId, SymbolicMap};
use crate::tableau::KRectangle;

/// All tropicalized maps of one chart configuration, built once and
/// evaluated at many integer points.
pub struct TropicalCrystal {
    n: usize,
    rows: usize,
    promotion: SymbolicMap,
    promotion_inverse: SymbolicMap,
    raise_first: SymbolicMap,
    weight: SymbolicMap,
    phi: Vec<SymbolicMap>,
    eps: Vec<SymbolicMap>,
    decoration: SymbolicMap,
    rotation: SymbolicMap,
    reflection: SymbolicMap,
}

impl TropicalCrystal {
    /// Build every symbolic map for the `rows`-row chart of rank `n`.
    pub fn new(n: usize, rows: usize) -> Self {
        TropicalCrystal {
            n,
            rows,
            promotion: build_symbolic(n, rows, MapId::Promotion),
            promotion_inverse: build_symbolic(n, rows, MapId::PromotionInverse),
            raise_first: build_symbolic(n, rows, MapId::RaiseFirst),
            weight: build_symbolic(n, rows, MapId::Weight),
            phi: (0..n).map(|i| build_symbolic(n, rows, MapId::StructurePhi(i))).collect(),
            eps: (0..n).map(|i| build_symbolic(n, rows, MapId::StructureEps(i))).collect(),
            decoration: build_symbolic(n, rows, MapId::Decoration),
            rotation: build_symbolic(n, rows, MapId::Rotation),
            reflection: build_symbolic(n, rows, MapId::Reflection),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows of the chart (and of the tableaux it encodes).
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Direct access to a built symbolic map.
    pub fn map(&self, id: MapId) -> &SymbolicMap {
        match id {
            MapId::Promotion => &self.promotion,
            MapId::PromotionInverse => &self.promotion_inverse,
            MapId::RaiseFirst => &self.raise_first,
            MapId::Weight => &self.weight,
            MapId::StructurePhi(i) => &self.phi[i],
            MapId::StructureEps(i) => &self.eps[i],
            MapId::Decoration => &self.decoration,
            MapId::Rotation => &self.rotation,
            MapId::Reflection => &self.reflection,
        }
    }

    fn unwrap_apply(&self, map: &SymbolicMap, vals: &[i64], l: i64, c: Option<i64>) -> Vec<i64> {
        map.trop_apply(vals, l, c).expect("all chart variables are bound")
    }

    /// Tropicalized promotion.
    pub fn promote(&self, vals: &[i64], l: i64) -> Vec<i64> {
        self.unwrap_apply(&self.promotion, vals, l, None)
    }

    /// Tropicalized inverse promotion.
    pub fn promote_inverse(&self, vals: &[i64], l: i64) -> Vec<i64> {
        self.unwrap_apply(&self.promotion_inverse, vals, l, None)
    }

    /// The tropicalized action at residue `i` with integer step `m`:
    /// conjugate the residue-1 step by promotion.
    pub fn act(&self, i: usize, m: i64, vals: &[i64], l: i64) -> Vec<i64> {
        let i = i % self.n;
        let back = (i + self.n - 1) % self.n;
        let mut cur = vals.to_vec();
        for _ in 0..back {
            cur = self.promote_inverse(&cur, l);
        }
        cur = self.unwrap_apply(&self.raise_first, &cur, l, Some(m));
        for _ in 0..back {
            cur = self.promote(&cur, l);
        }
        cur
    }

    /// The tropicalized weight: one integer per letter `1..=n`.
    pub fn weight(&self, vals: &[i64], l: i64) -> Vec<i64> {
        self.unwrap_apply(&self.weight, vals, l, None)
    }

    /// The tropicalized structure function paired with lowering.
    pub fn phi(&self, i: usize, vals: &[i64], l: i64) -> i64 {
        self.unwrap_apply(&self.phi[i % self.n], vals, l, None)[0]
    }

    /// The tropicalized structure function paired with raising.
    pub fn eps(&self, i: usize, vals: &[i64], l: i64) -> i64 {
        self.unwrap_apply(&self.eps[i % self.n], vals, l, None)[0]
    }

    /// The tropicalized decoration.
    pub fn decoration(&self, vals: &[i64], l: i64) -> i64 {
        self.unwrap_apply(&self.decoration, vals, l, None)[0]
    }

    /// The rectangle criterion: an integer point is a rectangle coordinate
    /// array exactly when the tropicalized decoration is nonnegative.
    pub fn is_rectangle(&self, vals: &[i64], l: i64) -> bool {
        self.decoration(vals, l) >= 0
    }

    /// Tropicalized rotation (same chart).
    pub fn rotate(&self, vals: &[i64], l: i64) -> Vec<i64> {
        self.unwrap_apply(&self.rotation, vals, l, None)
    }

    /// Tropicalized reflection (complementary chart).
    pub fn reflect(&self, vals: &[i64], l: i64) -> Vec<i64> {
        self.unwrap_apply(&self.reflection, vals, l, None)
    }

    /// The combinatorial raising operator at residue `i`: step `+1`,
    /// defined exactly when the decoration stays nonnegative.
    pub fn raise(&self, i: usize, vals: &[i64], l: i64) -> Option<Vec<i64>> {
        let moved = self.act(i, 1, vals, l);
        (self.decoration(&moved, l) >= 0).then_some(moved)
    }

    /// The combinatorial lowering operator at residue `i`: step `-1`,
    /// defined exactly when the decoration stays nonnegative.
    pub fn lower(&self, i: usize, vals: &[i64], l: i64) -> Option<Vec<i64>> {
        let moved = self.act(i, -1, vals, l);
        (self.decoration(&moved, l) >= 0).then_some(moved)
    }

    /// [`TropicalCrystal::raise`] on a rectangle, staying in rectangles.
    pub fn raise_rectangle(&self, rect: &KRectangle, i: usize) -> Option<KRectangle> {
        assert_eq!((rect.n(), rect.k()), (self.n, self.rows));
        let moved = self.raise(i, rect.entries(), rect.l())?;
        Some(
            KRectangle::new(self.n, self.rows, moved, rect.l())
                .expect("a nonnegative decoration certifies a rectangle"),
        )
    }

    /// [`TropicalCrystal::lower`] on a rectangle, staying in rectangles.
    pub fn lower_rectangle(&self, rect: &KRectangle, i: usize) -> Option<KRectangle> {
        assert_eq!((rect.n(), rect.k()), (self.n, self.rows));
        let moved = self.lower(i, rect.entries(), rect.l())?;
        Some(
            KRectangle::new(self.n, self.rows, moved, rect.l())
                .expect("a nonnegative decoration certifies a rectangle"),
        )
    }
}
