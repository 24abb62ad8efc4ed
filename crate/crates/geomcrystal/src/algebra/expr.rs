//! Subtraction-free expression DAGs with rational, tropical, and
//! valuation-probe evaluation.

use std::collections::HashMap;
use std::fmt::Write as _;

use num::{One, Signed};
use thiserror::Error;

use super::laurent::LaurentPoly;
use super::rat::Rat;

/// Identifier of a variable in an [`ExprArena`]'s registry.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct VarId(u32);

/// Identifier of a node in an [`ExprArena`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ExprId(u32);

/// A node of a subtraction-free expression DAG. There is no subtraction
/// variant: every expression is a ratio of polynomials with positive
/// integer coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Node {
    Var(VarId),
    /// A positive integer constant (at least 1).
    Const(u64),
    Add(ExprId, ExprId),
    Mul(ExprId, ExprId),
    Div(ExprId, ExprId),
}

/// Element of the min-plus semifield of integers: `a (+) b = min(a,b)`,
/// `a (*) b = a + b`, division is subtraction, and the multiplicative
/// identity is 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TropValue(pub i64);

impl TropValue {
    pub fn one() -> Self {
        TropValue(0)
    }
    /// Tropical addition: minimum.
    pub fn add(self, o: Self) -> Self {
        TropValue(self.0.min(o.0))
    }
    /// Tropical multiplication: integer addition.
    pub fn mul(self, o: Self) -> Self {
        TropValue(self.0 + o.0)
    }
    /// Tropical division: integer subtraction.
    pub fn div(self, o: Self) -> Self {
        TropValue(self.0 - o.0)
    }
}

/// Evaluation failure for a subtraction-free expression.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable `{0}` has no binding")]
    MissingBinding(String),
    #[error("variable `{0}` is bound to a nonpositive value")]
    NonpositiveBinding(String),
}

/// Arena of hash-consed subtraction-free expressions.
///
/// Structurally identical subexpressions are interned to a single node, so
/// formulas assembled from many repeated pieces (sums of tableau weights,
/// ratios of shared minors) stay compact, and every evaluation visits each
/// shared node exactly once.
#[derive(Default, Clone)]
pub struct ExprArena {
    nodes: Vec<Node>,
    interned: HashMap<Node, ExprId>,
    var_names: Vec<String>,
    var_ids: HashMap<String, VarId>,
}

impl ExprArena {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of distinct nodes in the arena.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: ExprId) -> Node {
        self.nodes[id.0 as usize]
    }

    /// Register (or look up) a variable by name.
    pub fn var_id(&mut self, name: &str) -> VarId {
        if let Some(&id) = self.var_ids.get(name) {
            return id;
        }
        let id = VarId(self.var_names.len() as u32);
        self.var_names.push(name.to_string());
        self.var_ids.insert(name.to_string(), id);
        id
    }

    pub fn var_name(&self, id: VarId) -> &str {
        &self.var_names[id.0 as usize]
    }

    /// All registered variable names, in registration order.
    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    fn intern(&mut self, node: Node) -> ExprId {
        if let Some(&id) = self.interned.get(&node) {
            return id;
        }
        let id = ExprId(self.nodes.len() as u32);
        self.nodes.push(node);
        self.interned.insert(node, id);
        id
    }

    /// The expression consisting of the variable `name`.
    pub fn var(&mut self, name: &str) -> ExprId {
        let v = self.var_id(name);
        self.intern(Node::Var(v))
    }

    /// A positive integer constant. Panics if `m == 0`.
    pub fn constant(&mut self, m: u64) -> ExprId {
        assert!(m >= 1, "constants must be positive integers");
        self.intern(Node::Const(m))
    }

    pub fn add(&mut self, l: ExprId, r: ExprId) -> ExprId {
        self.intern(Node::Add(l, r))
    }

    pub fn mul(&mut self, l: ExprId, r: ExprId) -> ExprId {
        self.intern(Node::Mul(l, r))
    }

    pub fn div(&mut self, l: ExprId, r: ExprId) -> ExprId {
        self.intern(Node::Div(l, r))
    }

    /// Left-nested sum of one or more terms. Panics on an empty slice: the
    /// subtraction-free world has no zero.
    pub fn add_many(&mut self, terms: &[ExprId]) -> ExprId {
        let (&first, rest) = terms.split_first().expect("empty sum has no subtraction-free value");
        rest.iter().fold(first, |acc, &t| self.add(acc, t))
    }

    /// Left-nested product; the empty product is the constant 1.
    pub fn mul_many(&mut self, factors: &[ExprId]) -> ExprId {
        match factors.split_first() {
            None => self.constant(1),
            Some((&first, rest)) => rest.iter().fold(first, |acc, &f| self.mul(acc, f)),
        }
    }

    /// `e` raised to a nonnegative power (power 0 is the constant 1).
    pub fn pow(&mut self, e: ExprId, n: u32) -> ExprId {
        match n {
            0 => self.constant(1),
            _ => {
                let mut acc = e;
                for _ in 1..n {
                    acc = self.mul(acc, e);
                }
                acc
            }
        }
    }

    /// Indices (ascending, hence topologically sorted: interning creates
    /// children before parents) of the nodes reachable from `roots`.
    fn reachable(&self, roots: &[ExprId]) -> Vec<u32> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack: Vec<u32> = roots.iter().map(|r| r.0).collect();
        while let Some(ix) = stack.pop() {
            if seen[ix as usize] {
                continue;
            }
            seen[ix as usize] = true;
            match self.nodes[ix as usize] {
                Node::Var(_) | Node::Const(_) => {}
                Node::Add(l, r) | Node::Mul(l, r) | Node::Div(l, r) => {
                    stack.push(l.0);
                    stack.push(r.0);
                }
            }
        }
        (0..self.nodes.len() as u32).filter(|&i| seen[i as usize]).collect()
    }

    fn eval_generic<V: Clone>(
        &self,
        root: ExprId,
        leaf_var: &mut dyn FnMut(&str) -> Result<V, EvalError>,
        leaf_const: &mut dyn FnMut(u64) -> V,
        combine: &mut dyn FnMut(Node, V, V) -> V,
    ) -> Result<V, EvalError> {
        self.eval_generic_many(&[root], leaf_var, leaf_const, combine)
            .map(|mut vs| vs.pop().expect("one root, one value"))
    }

    /// Evaluate several roots in a single pass over the shared DAG: each
    /// reachable node is visited exactly once no matter how many roots use
    /// it.
    fn eval_generic_many<V: Clone>(
        &self,
        roots: &[ExprId],
        leaf_var: &mut dyn FnMut(&str) -> Result<V, EvalError>,
        leaf_const: &mut dyn FnMut(u64) -> V,
        combine: &mut dyn FnMut(Node, V, V) -> V,
    ) -> Result<Vec<V>, EvalError> {
        let order = self.reachable(roots);
        let mut values: Vec<Option<V>> = vec![None; self.nodes.len()];
        for ix in order {
            let node = self.nodes[ix as usize];
            let value = match node {
                Node::Var(v) => leaf_var(self.var_name(v))?,
                Node::Const(m) => leaf_const(m),
                Node::Add(l, r) | Node::Mul(l, r) | Node::Div(l, r) => {
                    let lv = values[l.0 as usize].clone().expect("child evaluated first");
                    let rv = values[r.0 as usize].clone().expect("child evaluated first");
                    combine(node, lv, rv)
                }
            };
            values[ix as usize] = Some(value);
        }
        Ok(roots
            .iter()
            .map(|r| values[r.0 as usize].clone().expect("root evaluated"))
            .collect())
    }

    /// Copy the expression rooted at `root` in `src` into this arena,
    /// replacing each named variable that has a binding by its bound
    /// expression (an id in this arena); unbound variables are re-created by
    /// name. This is functional composition at the DAG level.
    pub fn import(
        &mut self,
        src: &ExprArena,
        root: ExprId,
        bindings: &HashMap<String, ExprId>,
    ) -> ExprId {
        let order = src.reachable(&[root]);
        let mut mapped: HashMap<u32, ExprId> = HashMap::with_capacity(order.len());
        for ix in order {
            let new_id = match src.nodes[ix as usize] {
                Node::Var(v) => match bindings.get(src.var_name(v)) {
                    Some(&bound) => bound,
                    None => self.var(src.var_name(v)),
                },
                Node::Const(m) => self.constant(m),
                Node::Add(l, r) => {
                    let (l, r) = (mapped[&l.0], mapped[&r.0]);
                    self.add(l, r)
                }
                Node::Mul(l, r) => {
                    let (l, r) = (mapped[&l.0], mapped[&r.0]);
                    self.mul(l, r)
                }
                Node::Div(l, r) => {
                    let (l, r) = (mapped[&l.0], mapped[&r.0]);
                    self.div(l, r)
                }
            };
            mapped.insert(ix, new_id);
        }
        mapped[&root.0]
    }

    /// Rebuild the expression at `root` with each named variable replaced by
    /// its bound expression; variables without a binding stay themselves.
    /// New nodes are interned into this arena, so composing maps keeps
    /// sharing.
    pub fn substitute(&mut self, root: ExprId, bindings: &HashMap<String, ExprId>) -> ExprId {
        let order = self.reachable(&[root]);
        let mut mapped: HashMap<u32, ExprId> = HashMap::with_capacity(order.len());
        for ix in order {
            let node = self.nodes[ix as usize];
            let new_id = match node {
                Node::Var(v) => match bindings.get(self.var_name(v)) {
                    Some(&bound) => bound,
                    None => ExprId(ix),
                },
                Node::Const(_) => ExprId(ix),
                Node::Add(l, r) => {
                    let (l, r) = (mapped[&l.0], mapped[&r.0]);
                    self.add(l, r)
                }
                Node::Mul(l, r) => {
                    let (l, r) = (mapped[&l.0], mapped[&r.0]);
                    self.mul(l, r)
                }
                Node::Div(l, r) => {
                    let (l, r) = (mapped[&l.0], mapped[&r.0]);
                    self.div(l, r)
                }
            };
            mapped.insert(ix, new_id);
        }
        mapped[&root.0]
    }

    /// Evaluate over the positive rationals. Every variable must be bound to
    /// a strictly positive rational; the result is strictly positive.
    pub fn eval_rational(&self, root: ExprId, env: &HashMap<String, Rat>) -> Result<Rat, EvalError> {
        self.eval_generic(
            root,
            &mut |name| match env.get(name) {
                None => Err(EvalError::MissingBinding(name.to_string())),
                Some(v) if !v.is_positive() => Err(EvalError::NonpositiveBinding(name.to_string())),
                Some(v) => Ok(v.clone()),
            },
            &mut |m| Rat::from_integer(m.into()),
            &mut |node, l, r| match node {
                Node::Add(_, _) => l + r,
                Node::Mul(_, _) => l * r,
                Node::Div(_, _) => l / r,
                _ => unreachable!(),
            },
        )
    }

    /// [`ExprArena::eval_rational`] for several roots in one pass over the
    /// shared DAG.
    pub fn eval_rational_many(
        &self,
        roots: &[ExprId],
        env: &HashMap<String, Rat>,
    ) -> Result<Vec<Rat>, EvalError> {
        self.eval_generic_many(
            roots,
            &mut |name| match env.get(name) {
                None => Err(EvalError::MissingBinding(name.to_string())),
                Some(v) if !v.is_positive() => Err(EvalError::NonpositiveBinding(name.to_string())),
                Some(v) => Ok(v.clone()),
            },
            &mut |m| Rat::from_integer(m.into()),
            &mut |node, l, r| match node {
                Node::Add(_, _) => l + r,
                Node::Mul(_, _) => l * r,
                Node::Div(_, _) => l / r,
                _ => unreachable!(),
            },
        )
    }

    /// [`ExprArena::eval_tropical`] for several roots in one pass over the
    /// shared DAG.
    pub fn eval_tropical_many(
        &self,
        roots: &[ExprId],
        env: &HashMap<String, i64>,
    ) -> Result<Vec<i64>, EvalError> {
        self.eval_generic_many(
            roots,
            &mut |name| {
                env.get(name)
                    .map(|&v| TropValue(v))
                    .ok_or_else(|| EvalError::MissingBinding(name.to_string()))
            },
            &mut |_| TropValue::one(),
            &mut |node, l: TropValue, r: TropValue| match node {
                Node::Add(_, _) => l.add(r),
                Node::Mul(_, _) => l.mul(r),
                Node::Div(_, _) => l.div(r),
                _ => unreachable!(),
            },
        )
        .map(|vs| vs.into_iter().map(|v| v.0).collect())
    }

    /// Evaluate in the min-plus semifield: addition is `min`, multiplication
    /// is `+`, division is `-`, and every positive constant maps to 0.
    pub fn eval_tropical(&self, root: ExprId, env: &HashMap<String, i64>) -> Result<i64, EvalError> {
        self.eval_generic(
            root,
            &mut |name| {
                env.get(name)
                    .map(|&v| TropValue(v))
                    .ok_or_else(|| EvalError::MissingBinding(name.to_string()))
            },
            &mut |_| TropValue::one(),
            &mut |node, l: TropValue, r: TropValue| match node {
                Node::Add(_, _) => l.add(r),
                Node::Mul(_, _) => l.mul(r),
                Node::Div(_, _) => l.div(r),
                _ => unreachable!(),
            },
        )
        .map(|v| v.0)
    }

    /// Independent oracle for [`ExprArena::eval_tropical`]: substitute the
    /// Laurent monomial `eps^{a_i}` for the variable `x_i`, evaluate exactly
    /// in the fraction field of Laurent polynomials in `eps`, and return the
    /// lowest exponent of the result. Because the expression is
    /// subtraction-free, all coefficients stay positive and the lowest terms
    /// can never cancel, so this equals the tropical value.
    pub fn valuation_probe(&self, root: ExprId, env: &HashMap<String, i64>) -> Result<i64, EvalError> {
        let result = self.eval_generic(
            root,
            &mut |name| {
                env.get(name)
                    .map(|&a| LaurentFrac::monomial(a))
                    .ok_or_else(|| EvalError::MissingBinding(name.to_string()))
            },
            &mut |m| LaurentFrac::constant(m),
            &mut |node, l: LaurentFrac, r: LaurentFrac| match node {
                Node::Add(_, _) => l.add(&r),
                Node::Mul(_, _) => l.mul(&r),
                Node::Div(_, _) => l.div(&r),
                _ => unreachable!(),
            },
        )?;
        Ok(result.valuation())
    }

    /// Render the expression rooted at `id` as fully parenthesized infix
    /// text. Shared nodes are expanded in place, so this is for small
    /// formulas and diagnostics.
    pub fn render(&self, id: ExprId) -> String {
        let mut out = String::new();
        self.render_into(id, &mut out);
        out
    }

    fn render_into(&self, id: ExprId, out: &mut String) {
        match self.node(id) {
            Node::Var(v) => out.push_str(self.var_name(v)),
            Node::Const(m) => {
                let _ = write!(out, "{m}");
            }
            Node::Add(l, r) => {
                out.push('(');
                self.render_into(l, out);
                out.push_str(" + ");
                self.render_into(r, out);
                out.push(')');
            }
            Node::Mul(l, r) => {
                out.push('(');
                self.render_into(l, out);
                out.push_str(" * ");
                self.render_into(r, out);
                out.push(')');
            }
            Node::Div(l, r) => {
                out.push('(');
                self.render_into(l, out);
                out.push_str(" / ");
                self.render_into(r, out);
                out.push(')');
            }
        }
    }
}

/// A ratio of Laurent polynomials in the probe variable, kept with both
/// sides having positive coefficients. Each side is normalized by a
/// monomial shift so supports stay near 0.
#[derive(Clone, Debug)]
struct LaurentFrac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFrac {
    fn monomial(exp: i64) -> Self {
        LaurentFrac {
            num: LaurentPoly::monomial(exp, Rat::one()),
            den: LaurentPoly::one(),
        }
    }

    fn constant(m: u64) -> Self {
        LaurentFrac {
            num: LaurentPoly::constant(Rat::from_integer(m.into())),
            den: LaurentPoly::one(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        LaurentFrac {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
        .reduce_shift()
    }

    fn mul(&self, other: &Self) -> Self {
        LaurentFrac {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
        .reduce_shift()
    }

    fn div(&self, other: &Self) -> Self {
        LaurentFrac {
            num: &self.num * &other.den,
            den: &self.den * &other.num,
        }
        .reduce_shift()
    }

    /// Shift numerator and denominator by a common monomial so the smaller
    /// valuation becomes 0; the valuation difference is unchanged.
    fn reduce_shift(mut self) -> Self {
        let vn = self.num.val().expect("numerator is never zero");
        let vd = self.den.val().expect("denominator is never zero");
        let s = vn.min(vd);
        if s != 0 {
            self.num = self.num.shift(-s);
            self.den = self.den.shift(-s);
        }
        self
    }

    fn valuation(&self) -> i64 {
        self.num.val().expect("numerator is never zero")
            - self.den.val().expect("denominator is never zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    fn env_rat(pairs: &[(&str, Rat)]) -> HashMap<String, Rat> {
        pairs.iter().map(|(n, v)| (n.to_string(), v.clone())).collect()
    }

    fn env_int(pairs: &[(&str, i64)]) -> HashMap<String, i64> {
        pairs.iter().map(|(n, v)| (n.to_string(), *v)).collect()
    }

    #[test]
    fn hash_consing_shares_nodes() {
        let mut a = ExprArena::new();
        let x = a.var("x");
        let y = a.var("y");
        let s1 = a.add(x, y);
        let s2 = a.add(x, y);
        assert_eq!(s1, s2);
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn eval_rational_ratio() {
        let mut a = ExprArena::new();
        let x1 = a.var("x1");
        let x2 = a.var("x2");
        let x3 = a.var("x3");
        let s = a.add(x1, x2);
        let e = a.div(s, x3);
        let env = env_rat(&[("x1", rat_int(1)), ("x2", rat_int(2)), ("x3", rat_int(4))]);
        assert_eq!(a.eval_rational(e, &env).unwrap(), rat(3, 4));
    }

    #[test]
    fn eval_rational_cubic_ratio_at_ones() {
        let mut a = ExprArena::new();
        let z1 = a.var("z1");
        let z2 = a.var("z2");
        let c1 = a.pow(z1, 3);
        let c2 = a.pow(z2, 3);
        let num = a.add(c1, c2);
        let den = a.add(z1, z2);
        let e = a.div(num, den);
        let env = env_rat(&[("z1", rat_int(1)), ("z2", rat_int(1))]);
        assert_eq!(a.eval_rational(e, &env).unwrap(), rat_int(1));
    }

    #[test]
    fn eval_rational_identity() {
        let mut a = ExprArena::new();
        let x1 = a.var("x1");
        let env = env_rat(&[("x1", rat(7, 3))]);
        assert_eq!(a.eval_rational(x1, &env).unwrap(), rat(7, 3));
    }

    #[test]
    fn eval_rational_errors() {
        let mut a = ExprArena::new();
        let x = a.var("x");
        let y = a.var("y");
        let e = a.add(x, y);
        let env = env_rat(&[("x", rat_int(1))]);
        assert_eq!(a.eval_rational(e, &env), Err(EvalError::MissingBinding("y".into())));
        let env = env_rat(&[("x", rat_int(1)), ("y", rat_int(0))]);
        assert_eq!(a.eval_rational(e, &env), Err(EvalError::NonpositiveBinding("y".into())));
        let env = env_rat(&[("x", rat_int(-2)), ("y", rat_int(1))]);
        assert_eq!(a.eval_rational(e, &env), Err(EvalError::NonpositiveBinding("x".into())));
    }

    /// `(z1^2 z2 + z3) / (z2^5 + 8 z1 z3)`, with an optional `+ 4` in the
    /// denominator.
    fn ratio_expr(a: &mut ExprArena, with_const: bool) -> ExprId {
        let z1 = a.var("z1");
        let z2 = a.var("z2");
        let z3 = a.var("z3");
        let z1sq = a.pow(z1, 2);
        let t1 = a.mul(z1sq, z2);
        let num = a.add(t1, z3);
        let z2p5 = a.pow(z2, 5);
        let eight = a.constant(8);
        let t2a = a.mul(eight, z1);
        let t2 = a.mul(t2a, z3);
        let mut den = a.add(z2p5, t2);
        if with_const {
            let four = a.constant(4);
            den = a.add(den, four);
        }
        a.div(num, den)
    }

    #[test]
    fn eval_tropical_examples() {
        let mut a = ExprArena::new();
        let e = ratio_expr(&mut a, false);
        assert_eq!(a.eval_tropical(e, &env_int(&[("z1", 0), ("z2", 0), ("z3", 0)])).unwrap(), 0);
        assert_eq!(a.eval_tropical(e, &env_int(&[("z1", 1), ("z2", 1), ("z3", 1)])).unwrap(), -1);

        let mut b = ExprArena::new();
        let x1 = b.var("x1");
        let x2 = b.var("x2");
        let x3 = b.var("x3");
        let s = b.add(x1, x2);
        let q = b.div(s, x3);
        assert_eq!(b.eval_tropical(q, &env_int(&[("x1", 1), ("x2", 2), ("x3", 4)])).unwrap(), -3);
    }

    #[test]
    fn constants_tropicalize_to_zero() {
        let mut a = ExprArena::new();
        let e = ratio_expr(&mut a, true);
        let env = env_int(&[("z1", 1), ("z2", 1), ("z3", 1)]);
        // min(3, 1) - min(5, 2, 0) = 1
        assert_eq!(a.eval_tropical(e, &env).unwrap(), 1);
        assert_eq!(a.valuation_probe(e, &env).unwrap(), 1);
    }

    #[test]
    fn valuation_probe_examples() {
        let mut a = ExprArena::new();
        let x1 = a.var("x1");
        let x2 = a.var("x2");
        let p = a.mul(x1, x2);
        let s = a.add(x1, x2);
        let env = env_int(&[("x1", 2), ("x2", 3)]);
        assert_eq!(a.valuation_probe(p, &env).unwrap(), 5);
        assert_eq!(a.valuation_probe(s, &env).unwrap(), 2);
    }

    #[test]
    fn probe_matches_tropical_on_nested_ratio() {
        let mut a = ExprArena::new();
        let e = ratio_expr(&mut a, false);
        for env in [
            env_int(&[("z1", -2), ("z2", 5), ("z3", 1)]),
            env_int(&[("z1", 3), ("z2", -1), ("z3", -4)]),
            env_int(&[("z1", 0), ("z2", 2), ("z3", -7)]),
        ] {
            assert_eq!(a.valuation_probe(e, &env).unwrap(), a.eval_tropical(e, &env).unwrap());
        }
    }

    #[test]
    fn render_is_parenthesized_infix() {
        let mut a = ExprArena::new();
        let x = a.var("x");
        let two = a.constant(2);
        let s = a.add(x, two);
        let e = a.div(s, x);
        assert_eq!(a.render(e), "((x + 2) / x)");
    }
}
