//! Subtraction-free symbolic forms of the chart-conjugated crystal maps.
//!
//! Every map of the geometric crystal, read through the rational chart,
//! is a tuple of subtraction-free rational expressions in the chart
//! variables `X_{ij}` and `t` (plus the action parameter `c` for the
//! first raising operator). This module assembles those expressions on a
//! hash-consed DAG: Plücker coordinates are expanded as tableau sums and
//! target coordinates are formed as ratios of basic Plücker coordinates,
//! so each output is subtraction-free by construction and can be
//! evaluated exactly over the positive rationals or in the min-plus
//! semifield.

use std::collections::HashMap;

use crate::algebra::{EvalError, ExprArena, ExprId, Rat};
use crate::gt_param::{basic_elements, chart_t_var, chart_var, plucker_expr, RationalRectangle};
use crate::grassmann::{interval, residue_in_1n};

/// The variable name for the action parameter of the raising operator.
pub fn action_var() -> &'static str {
    "c"
}

/// Which chart-conjugated map to build symbolically.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapId {
    /// Promotion: the chart form of the twisted cyclic shift.
    Promotion,
    /// Inverse promotion.
    PromotionInverse,
    /// The weight map: `n` scalar outputs.
    Weight,
    /// The structure function paired with lowering at the given residue.
    StructurePhi(usize),
    /// The structure function paired with raising at the given residue.
    StructureEps(usize),
    /// The decoration function: one scalar output.
    Decoration,
    /// The raising action at residue 1 with parameter `c`: it scales
    /// `X_11` by `c` and fixes every other coordinate.
    RaiseFirst,
    /// The rotation symmetry, staying in the same chart.
    Rotation,
    /// The reflection symmetry, landing in the complementary chart.
    Reflection,
}

impl MapId {
    pub fn name(&self) -> String {
        match self {
            MapId::Promotion => "PR".into(),
            MapId::PromotionInverse => "PRinv".into(),
            MapId::Weight => "gamma".into(),
            MapId::StructurePhi(i) => format!("phi_{i}"),
            MapId::StructureEps(i) => format!("eps_{i}"),
            MapId::Decoration => "f".into(),
            MapId::RaiseFirst => "e1".into(),
            MapId::Rotation => "S".into(),
            MapId::Reflection => "D".into(),
        }
    }
}

/// A crystal map conjugated into the chart: a named tuple of
/// subtraction-free expressions over the input chart's variables.
pub struct SymbolicMap {
    name: String,
    n: usize,
    input_rows: usize,
    /// `Some(rows)` when the outputs are the coordinates of a chart;
    /// `None` for scalar-valued maps.
    output_rows: Option<usize>,
    arena: ExprArena,
    outputs: Vec<(String, ExprId)>,
}

/// The index pairs of the `rows`-row chart for rank `n`, row-major.
fn chart_pairs(n: usize, rows: usize) -> Vec<(usize, usize)> {
    let w = n - rows;
    let mut out = Vec::with_capacity(rows * w);
    for i in 1..=rows {
        for j in i..=i + w - 1 {
            out.push((i, j));
        }
    }
    out
}

/// Expand the Plücker coordinate with the given integer labels (reduced
/// mod `n` into `[1, n]`) as a tableau sum over the chart with subspace
/// dimension `w = n - rows`.
fn plucker_set_expr(
    arena: &mut ExprArena,
    n: usize,
    w: usize,
    elems: impl IntoIterator<Item = i64>,
) -> ExprId {
    let mut set: Vec<i64> = elems.into_iter().map(|e| residue_in_1n(e, n as i64)).collect();
    set.sort_unstable();
    set.dedup();
    assert_eq!(set.len(), w, "Plücker label must consist of {w} distinct residues");
    plucker_expr(arena, n, w, &set)
}

/// Build the symbolic form of `id` on the `rows`-row chart for rank `n`.
pub fn build_symbolic(n: usize, rows: usize, id: MapId) -> SymbolicMap {
    assert!(rows >= 1 && rows < n, "chart needs 1 <= rows < n");
    let w = n - rows;
    let mut arena = ExprArena::new();
    let t = arena.var(chart_t_var());
    let mut outputs: Vec<(String, ExprId)> = Vec::new();
    let mut output_rows = Some(rows);

    match id {
        MapId::Promotion => {
            // Basic Plücker coordinates transform by shifting every label
            // down by one; labels containing 1 pick up a factor of t.
            for (i, j) in chart_pairs(n, rows) {
                let num_set = basic_elements(n, w, i, j);
                let den_set = basic_elements(n, w, i + 1, j);
                let mut num = plucker_set_expr(&mut arena, n, w, num_set.iter().map(|e| e - 1));
                let mut den = plucker_set_expr(&mut arena, n, w, den_set.iter().map(|e| e - 1));
                if num_set.contains(&1) {
                    num = arena.mul(t, num);
                }
                if den_set.contains(&1) {
                    den = arena.mul(t, den);
                }
                outputs.push((chart_var(i, j), arena.div(num, den)));
            }
        }
        MapId::PromotionInverse => {
            // Labels shift up by one; labels containing n contribute a
            // factor 1/t.
            for (i, j) in chart_pairs(n, rows) {
                let num_set = basic_elements(n, w, i, j);
                let den_set = basic_elements(n, w, i + 1, j);
                let mut num = plucker_set_expr(&mut arena, n, w, num_set.iter().map(|e| e + 1));
                let mut den = plucker_set_expr(&mut arena, n, w, den_set.iter().map(|e| e + 1));
                if den_set.contains(&(n as i64)) {
                    num = arena.mul(t, num);
                }
                if num_set.contains(&(n as i64)) {
                    den = arena.mul(t, den);
                }
                outputs.push((chart_var(i, j), arena.div(num, den)));
            }
        }
        MapId::Weight => {
            output_rows = None;
            let wi = w as i64;
            for v in 1..=n as i64 {
                let mut num = plucker_set_expr(&mut arena, n, w, interval(v - wi + 1, v));
                let den = plucker_set_expr(&mut arena, n, w, interval(v - wi, v - 1));
                if v > wi {
                    num = arena.mul(t, num);
                }
                outputs.push((format!("gamma_{v}"), arena.div(num, den)));
            }
        }
        MapId::StructurePhi(i) => {
            assert!(i < n, "residue out of range");
            output_rows = None;
            let (ii, wi) = (i as i64, w as i64);
            let mut num_elems = interval(ii - wi + 1, ii - 1);
            num_elems.push(ii + 1);
            let num = plucker_set_expr(&mut arena, n, w, num_elems);
            let mut den = plucker_set_expr(&mut arena, n, w, interval(ii - wi + 1, ii));
            if i == 0 {
                den = arena.mul(t, den);
            }
            outputs.push((format!("phi_{i}"), arena.div(num, den)));
        }
        MapId::StructureEps(i) => {
            assert!(i < n, "residue out of range");
            output_rows = None;
            let (ii, wi) = (i as i64, w as i64);
            let mut num1_elems = interval(ii - wi + 1, ii - 1);
            num1_elems.push(ii + 1);
            let num1 = plucker_set_expr(&mut arena, n, w, num1_elems);
            let num2 = plucker_set_expr(&mut arena, n, w, interval(ii - wi + 1, ii));
            let den1 = plucker_set_expr(&mut arena, n, w, interval(ii - wi, ii - 1));
            let den2 = plucker_set_expr(&mut arena, n, w, interval(ii - wi + 2, ii + 1));
            let num = arena.mul(num1, num2);
            let mut den = arena.mul(den1, den2);
            if i == w {
                den = arena.mul(t, den);
            }
            outputs.push((format!("eps_{i}"), arena.div(num, den)));
        }
        MapId::Decoration => {
            output_rows = None;
            let wi = w as i64;
            let mut terms = Vec::with_capacity(n);
            for v in 1..=n as i64 {
                let mut num_elems = vec![v - wi];
                num_elems.extend(interval(v - wi + 2, v));
                let mut num = plucker_set_expr(&mut arena, n, w, num_elems);
                let den = plucker_set_expr(&mut arena, n, w, interval(v - wi + 1, v));
                if v == wi {
                    num = arena.mul(t, num);
                }
                terms.push(arena.div(num, den));
            }
            let f = arena.add_many(&terms);
            outputs.push(("f".into(), f));
        }
        MapId::RaiseFirst => {
            let c = arena.var(action_var());
            for (i, j) in chart_pairs(n, rows) {
                let x = arena.var(&chart_var(i, j));
                let expr = if (i, j) == (1, 1) { arena.mul(c, x) } else { x };
                outputs.push((chart_var(i, j), expr));
            }
        }
        MapId::Rotation => {
            for (i, j) in chart_pairs(n, rows) {
                let x = arena.var(&chart_var(rows - i + 1, n - j));
                outputs.push((chart_var(i, j), arena.div(t, x)));
            }
        }
        MapId::Reflection => {
            output_rows = Some(w);
            for (i, j) in chart_pairs(n, w) {
                let x = arena.var(&chart_var(j - i + 1, j));
                outputs.push((chart_var(i, j), arena.div(t, x)));
            }
        }
    }

    SymbolicMap { name: id.name(), n, input_rows: rows, output_rows, arena, outputs }
}

impl SymbolicMap {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows of the input chart.
    pub fn input_rows(&self) -> usize {
        self.input_rows
    }

    /// Number of rows of the output chart, or `None` for scalar outputs.
    pub fn output_rows(&self) -> Option<usize> {
        self.output_rows
    }

    pub fn outputs(&self) -> &[(String, ExprId)] {
        &self.outputs
    }

    pub fn arena(&self) -> &ExprArena {
        &self.arena
    }

    fn trop_env(&self, vals: &[i64], l: i64, c: Option<i64>) -> HashMap<String, i64> {
        let pairs = chart_pairs(self.n, self.input_rows);
        assert_eq!(vals.len(), pairs.len(), "wrong number of chart coordinates");
        let mut env: HashMap<String, i64> =
            pairs.iter().zip(vals).map(|(&(i, j), &v)| (chart_var(i, j), v)).collect();
        env.insert(chart_t_var().to_string(), l);
        if let Some(c) = c {
            env.insert(action_var().to_string(), c);
        }
        env
    }

    /// Evaluate every output in the min-plus semifield at the integer
    /// chart point `(vals, l)`, with the action parameter bound to `c`
    /// when present.
    pub fn trop_apply(&self, vals: &[i64], l: i64, c: Option<i64>) -> Result<Vec<i64>, EvalError> {
        let env = self.trop_env(vals, l, c);
        let roots: Vec<ExprId> = self.outputs.iter().map(|&(_, e)| e).collect();
        self.arena.eval_tropical_many(&roots, &env)
    }

    /// Evaluate every output over the positive rationals at a chart point.
    pub fn rational_apply(
        &self,
        rect: &RationalRectangle<Rat>,
        c: Option<&Rat>,
    ) -> Result<Vec<Rat>, EvalError> {
        assert_eq!(rect.n(), self.n);
        assert_eq!(rect.rows(), self.input_rows);
        let mut env = rect.env();
        if let Some(c) = c {
            env.insert(action_var().to_string(), c.clone());
        }
        let roots: Vec<ExprId> = self.outputs.iter().map(|&(_, e)| e).collect();
        self.arena.eval_rational_many(&roots, &env)
    }

    /// Evaluate every output by the Laurent-valuation oracle (an
    /// independent check of [`SymbolicMap::trop_apply`]).
    pub fn valuation_apply(
        &self,
        vals: &[i64],
        l: i64,
        c: Option<i64>,
    ) -> Result<Vec<i64>, EvalError> {
        let env = self.trop_env(vals, l, c);
        self.outputs.iter().map(|&(_, e)| self.arena.valuation_probe(e, &env)).collect()
    }

    /// Functional composition `self ∘ inner` at the DAG level: every input
    /// variable of `self` is replaced by the matching output expression of
    /// `inner`. The composed map keeps `inner`'s input chart.
    pub fn compose(&self, inner: &SymbolicMap) -> SymbolicMap {
        assert_eq!(self.n, inner.n, "charts must share the rank");
        assert_eq!(
            Some(self.input_rows),
            inner.output_rows,
            "inner map must produce the outer map's input chart"
        );
        let mut arena = inner.arena.clone();
        let bindings: HashMap<String, ExprId> = inner.outputs.iter().cloned().collect();
        let outputs: Vec<(String, ExprId)> = self
            .outputs
            .iter()
            .map(|(label, e)| (label.clone(), arena.import(&self.arena, *e, &bindings)))
            .collect();
        SymbolicMap {
            name: format!("{}∘{}", self.name, inner.name),
            n: self.n,
            input_rows: inner.input_rows,
            output_rows: self.output_rows,
            arena,
            outputs,
        }
    }
}

/// The closed positive form of the chart-conjugated decoration: the sum of
/// the bottom-left corner, the deformed top-right ratio, all consecutive
/// ratios within rows, and all down-right ratios between rows.
pub fn decoration_closed_expr(arena: &mut ExprArena, n: usize, rows: usize) -> ExprId {
    let w = n - rows;
    let t = arena.var(chart_t_var());
    let mut terms = Vec::new();
    let corner = arena.var(&chart_var(rows, rows));
    terms.push(corner);
    let top_right = arena.var(&chart_var(1, w));
    terms.push(arena.div(t, top_right));
    for (i, j) in chart_pairs(n, rows) {
        if j > i {
            let num = arena.var(&chart_var(i, j));
            let den = arena.var(&chart_var(i, j - 1));
            terms.push(arena.div(num, den));
        }
        if i < rows && j + 1 <= (i + 1) + w - 1 {
            let num = arena.var(&chart_var(i, j));
            let den = arena.var(&chart_var(i + 1, j + 1));
            terms.push(arena.div(num, den));
        }
    }
    arena.add_many(&terms)
}

/// The min-plus value of the closed decoration form at an integer chart
/// point: the least slack among the four families of rectangle
/// inequalities. Nonnegative exactly on rectangle coordinate arrays.
pub fn rectangle_excess(n: usize, rows: usize, vals: &[i64], l: i64) -> i64 {
    let w = n - rows;
    assert_eq!(vals.len(), rows * w, "wrong number of chart coordinates");
    let at = |i: usize, j: usize| vals[(i - 1) * w + (j - i)];
    let mut excess = at(rows, rows).min(l - at(1, w));
    for (i, j) in chart_pairs(n, rows) {
        if j > i {
            excess = excess.min(at(i, j) - at(i, j - 1));
        }
        if i < rows && j + 1 <= (i + 1) + w - 1 {
            excess = excess.min(at(i, j) - at(i + 1, j + 1));
        }
    }
    excess
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;
    use crate::gt_param::{geometric_pr, geometric_pr_inverse, sample_rectangle, theta};
    use crate::grassmann::ShiftDir;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_vals(rng: &mut StdRng, len: usize) -> Vec<i64> {
        (0..len).map(|_| rng.random_range(-5..=5)).collect()
    }

    #[test]
    fn symbolic_promotion_matches_the_birational_involution_chain() {
        let mut rng = StdRng::seed_from_u64(51);
        for n in 2..=6usize {
            for rows in 1..n {
                let pr = build_symbolic(n, rows, MapId::Promotion);
                let pr_inv = build_symbolic(n, rows, MapId::PromotionInverse);
                for _ in 0..2 {
                    let rect = sample_rectangle(n, rows, &mut rng);
                    let by_involutions = geometric_pr(&rect).unwrap();
                    let by_pluckers = pr.rational_apply(&rect, None).unwrap();
                    assert_eq!(by_pluckers, by_involutions.entries(), "n={n}, rows={rows}");
                    let back = pr_inv.rational_apply(&by_involutions, None).unwrap();
                    assert_eq!(back, rect.entries(), "inverse, n={n}, rows={rows}");
                    let inv_direct = geometric_pr_inverse(&rect).unwrap();
                    let inv_pluckers = pr_inv.rational_apply(&rect, None).unwrap();
                    assert_eq!(inv_pluckers, inv_direct.entries());
                }
            }
        }
    }

    #[test]
    fn symbolic_scalar_maps_match_the_matrix_level_structure_functions() {
        let mut rng = StdRng::seed_from_u64(52);
        for n in 2..=6usize {
            for rows in 1..n {
                let rect = sample_rectangle(n, rows, &mut rng);
                let point = theta(&rect).unwrap();
                let weight = build_symbolic(n, rows, MapId::Weight);
                let gammas = weight.rational_apply(&rect, None).unwrap();
                assert_eq!(gammas, point.gamma().unwrap(), "weight at n={n}, rows={rows}");
                for i in 0..n {
                    let phi = build_symbolic(n, rows, MapId::StructurePhi(i));
                    assert_eq!(
                        phi.rational_apply(&rect, None).unwrap(),
                        vec![point.phi(i).unwrap()],
                        "phi_{i} at n={n}, rows={rows}"
                    );
                    let eps = build_symbolic(n, rows, MapId::StructureEps(i));
                    assert_eq!(
                        eps.rational_apply(&rect, None).unwrap(),
                        vec![point.eps(i).unwrap()],
                        "eps_{i} at n={n}, rows={rows}"
                    );
                }
                let f = build_symbolic(n, rows, MapId::Decoration);
                assert_eq!(
                    f.rational_apply(&rect, None).unwrap(),
                    vec![point.decoration().unwrap()],
                    "decoration at n={n}, rows={rows}"
                );
            }
        }
    }

    #[test]
    fn the_closed_decoration_form_matches_the_plucker_level_sum() {
        let mut rng = StdRng::seed_from_u64(53);
        for n in 2..=6usize {
            for rows in 1..n {
                let f = build_symbolic(n, rows, MapId::Decoration);
                let mut arena = ExprArena::new();
                let closed = decoration_closed_expr(&mut arena, n, rows);
                for _ in 0..3 {
                    let rect = sample_rectangle(n, rows, &mut rng);
                    let plucker_level = f.rational_apply(&rect, None).unwrap();
                    let closed_value = arena.eval_rational(closed, &rect.env()).unwrap();
                    assert_eq!(plucker_level, vec![closed_value], "n={n}, rows={rows}");

                    let vals = random_vals(&mut rng, rows * (n - rows));
                    let l = rng.random_range(-3..=6);
                    let trop_plucker = f.trop_apply(&vals, l, None).unwrap();
                    assert_eq!(
                        trop_plucker,
                        vec![rectangle_excess(n, rows, &vals, l)],
                        "tropical closed form at n={n}, rows={rows}"
                    );
                }
            }
        }
    }

    #[test]
    fn raising_at_the_first_residue_scales_one_coordinate() {
        let map = build_symbolic(4, 2, MapId::RaiseFirst);
        let mut rng = StdRng::seed_from_u64(54);
        let rect = sample_rectangle(4, 2, &mut rng);
        let c = rat_int(7);
        let out = map.rational_apply(&rect, Some(&c)).unwrap();
        assert_eq!(out[0], c * rect.entry(1, 1).clone());
        assert_eq!(&out[1..], &rect.entries()[1..]);

        let trop = map.trop_apply(&[2, 5, 1, 3], 6, Some(1)).unwrap();
        assert_eq!(trop, vec![3, 5, 1, 3]);
    }

    #[test]
    fn symmetry_maps_land_in_the_right_charts() {
        let rot = build_symbolic(5, 2, MapId::Rotation);
        assert_eq!(rot.output_rows(), Some(2));
        let refl = build_symbolic(5, 2, MapId::Reflection);
        assert_eq!(refl.output_rows(), Some(3));
        assert_eq!(refl.outputs().len(), 6);
        // Rotation twice is the identity.
        let composed = rot.compose(&rot);
        let mut rng = StdRng::seed_from_u64(55);
        let rect = sample_rectangle(5, 2, &mut rng);
        let out = composed.rational_apply(&rect, None).unwrap();
        assert_eq!(out, rect.entries());
        // Reflection twice is the identity across the chart swap.
        let refl_back = build_symbolic(5, 3, MapId::Reflection);
        let both = refl_back.compose(&refl);
        let back = both.rational_apply(&rect, None).unwrap();
        assert_eq!(back, rect.entries());
    }

    #[test]
    fn promotion_intertwines_the_shift_through_the_symbolic_form() {
        let mut rng = StdRng::seed_from_u64(56);
        let rect = sample_rectangle(5, 3, &mut rng);
        let pr = build_symbolic(5, 3, MapId::Promotion);
        let out = pr.rational_apply(&rect, None).unwrap();
        let point = theta(&rect).unwrap().cyclic_shift(ShiftDir::Forward);
        let expected = crate::gt_param::theta_inverse(&point).unwrap();
        assert_eq!(out, expected.entries());
    }

    #[test]
    fn tropical_evaluation_agrees_with_the_valuation_oracle() {
        let mut rng = StdRng::seed_from_u64(57);
        for (n, rows) in [(3usize, 1usize), (4, 2), (5, 2), (5, 3)] {
            let maps = vec![
                build_symbolic(n, rows, MapId::Promotion),
                build_symbolic(n, rows, MapId::PromotionInverse),
                build_symbolic(n, rows, MapId::Weight),
                build_symbolic(n, rows, MapId::StructurePhi(1 % n)),
                build_symbolic(n, rows, MapId::StructureEps(0)),
                build_symbolic(n, rows, MapId::Decoration),
                build_symbolic(n, rows, MapId::RaiseFirst),
                build_symbolic(n, rows, MapId::Rotation),
                build_symbolic(n, rows, MapId::Reflection),
            ];
            for map in &maps {
                for _ in 0..5 {
                    let vals = random_vals(&mut rng, rows * (n - rows));
                    let l = rng.random_range(-4..=7);
                    let c = rng.random_range(-2..=2);
                    let fast = map.trop_apply(&vals, l, Some(c)).unwrap();
                    let probe = map.valuation_apply(&vals, l, Some(c)).unwrap();
                    assert_eq!(fast, probe, "map {} at n={n}, rows={rows}", map.name());
                }
            }
        }
    }

    #[test]
    fn composition_at_the_dag_level_matches_pointwise_composition() {
        let mut rng = StdRng::seed_from_u64(58);
        let pr = build_symbolic(4, 2, MapId::Promotion);
        let pr_inv = build_symbolic(4, 2, MapId::PromotionInverse);
        let round = pr_inv.compose(&pr);
        let rect = sample_rectangle(4, 2, &mut rng);
        assert_eq!(round.rational_apply(&rect, None).unwrap(), rect.entries());
        let vals = random_vals(&mut rng, 4);
        let l = rng.random_range(-3..=6);
        assert_eq!(round.trop_apply(&vals, l, None).unwrap(), vals);
    }
}
