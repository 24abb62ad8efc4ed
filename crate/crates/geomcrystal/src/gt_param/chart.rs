//! Rational rectangle charts: the positive coordinates that parametrize the
//! geometric crystal.
//!
//! A chart with `m` rows for ambient rank `n` stores nonzero field values
//! `X_{ij}` on the index set `R_m = {(i,j) : 1 <= i <= m, i <= j <= i+n-m-1}`
//! (each row has `n-m` entries) together with a nonzero scalar `t`. The
//! derived ratios `x_{ij} = X_{ij}/X_{i,j-1}` use the boundary conventions
//! `X_{i,i-1} = 1` and `X_{i,i+n-m} = t`, so each row contributes `n-m+1`
//! ratios whose product telescopes to `t`.

use rand::Rng;

use crate::algebra::{rat, rat_int, Field, Rat};
use crate::grassmann::GrassmannError;

/// A rational rectangle: the chart of the Gelfand-Tsetlin parametrization.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalRectangle<F: Field> {
    n: usize,
    m: usize,
    entries: Vec<F>,
    t: F,
}

impl<F: Field> RationalRectangle<F> {
    /// Build a chart with `m` rows from row-major entries over `R_m`.
    pub fn new(n: usize, m: usize, entries: Vec<F>, t: F) -> Result<Self, GrassmannError> {
        if m == 0 || m >= n {
            return Err(GrassmannError::BadDimensions(format!(
                "chart needs 1 <= rows < n, got rows={m}, n={n}"
            )));
        }
        if entries.len() != m * (n - m) {
            return Err(GrassmannError::BadDimensions(format!(
                "chart with {m} rows for n={n} needs {} entries, got {}",
                m * (n - m),
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.is_zero()) {
            return Err(GrassmannError::ZeroParameter);
        }
        if t.is_zero() {
            return Err(GrassmannError::ZeroParameter);
        }
        Ok(RationalRectangle { n, m, entries, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows of the triangular array.
    pub fn rows(&self) -> usize {
        self.m
    }

    /// Entries per row; also the dimension of the subspace this chart
    /// parametrizes.
    pub fn width(&self) -> usize {
        self.n - self.m
    }

    pub fn t(&self) -> &F {
        &self.t
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    fn index(&self, i: usize, j: usize) -> usize {
        assert!(
            1 <= i && i <= self.m && i <= j && j <= i + self.width() - 1,
            "({i},{j}) outside the chart index set"
        );
        (i - 1) * self.width() + (j - i)
    }

    /// The coordinate `X_{ij}` for `(i,j)` in `R_m`.
    pub fn entry(&self, i: usize, j: usize) -> &F {
        &self.entries[self.index(i, j)]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: F) {
        assert!(!v.is_zero(), "chart entries must be nonzero");
        let ix = self.index(i, j);
        self.entries[ix] = v;
    }

    /// The extended coordinate with the boundary conventions
    /// `X_{i,i-1} = 1` and `X_{i,i+width} = t`.
    pub fn extended(&self, i: usize, j: usize) -> F {
        assert!(1 <= i && i <= self.m, "row {i} outside the chart");
        if j + 1 == i {
            F::one()
        } else if j == i + self.width() {
            self.t.clone()
        } else {
            self.entry(i, j).clone()
        }
    }

    /// The ratio `x_{ij} = X_{ij}/X_{i,j-1}` for `i <= j <= i+width`.
    pub fn x(&self, i: usize, j: usize) -> F {
        assert!(i <= j && j <= i + self.width(), "x_({i},{j}) undefined");
        self.extended(i, j) / self.extended(i, j - 1)
    }

    /// All index pairs `(i,j)` of `R_m` in row-major order.
    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m * self.width());
        for i in 1..=self.m {
            for j in i..=(i + self.width() - 1) {
                out.push((i, j));
            }
        }
        out
    }
}

impl RationalRectangle<Rat> {
    /// Binding of the canonical variable names (`X{i}_{j}` and `t`) to this
    /// chart's values, for evaluating symbolic expressions.
    pub fn env(&self) -> std::collections::HashMap<String, Rat> {
        let mut env = std::collections::HashMap::new();
        for (i, j) in self.index_pairs() {
            env.insert(chart_var(i, j), self.entry(i, j).clone());
        }
        env.insert(chart_t_var().to_string(), self.t.clone());
        env
    }
}

/// Canonical variable name for the chart coordinate `X_{ij}` in symbolic
/// expressions.
pub fn chart_var(i: usize, j: usize) -> String {
    format!("X{i}_{j}")
}

/// Canonical variable name for the chart scalar `t`.
pub fn chart_t_var() -> &'static str {
    "t"
}

/// Sample a chart with small positive integer entries and a small positive
/// rational `t`.
pub fn sample_rectangle<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> RationalRectangle<Rat> {
    let entries = (0..m * (n - m)).map(|_| rat_int(rng.random_range(1..=9))).collect();
    let t = rat(rng.random_range(1..=9), rng.random_range(1..=9));
    RationalRectangle::new(n, m, entries, t).expect("positive sample is a valid chart")
}
