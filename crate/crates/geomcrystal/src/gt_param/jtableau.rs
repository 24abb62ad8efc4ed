//! Tableau expansion of Pluecker coordinates on the chart: shifted
//! staircase diagrams cut down by an index subset, their fillings, and the
//! positive combinatorial formula expressing each Pluecker coordinate of a
//! parametrized point as a weighted sum over those fillings.

use crate::algebra::{ExprArena, ExprId, Field};

use super::chart::{chart_t_var, chart_var, RationalRectangle};

/// A filling of the cut staircase diagram attached to an index subset `J`
/// of size `k`: column `b` (1-based) has `b - max(0, j_b - (n-k))` boxes,
/// rows weakly increase, columns strictly increase, and the diagonal box of
/// column `b` (when present) is pinned to `j_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JTableau {
    n: usize,
    k: usize,
    j_set: Vec<i64>,
    columns: Vec<Vec<usize>>,
}

impl JTableau {
    /// Column lengths of the cut diagram for the given subset.
    pub fn column_lengths(n: usize, k: usize, j_set: &[i64]) -> Vec<usize> {
        assert_eq!(j_set.len(), k, "subset size must be k");
        let m = (n - k) as i64;
        j_set
            .iter()
            .enumerate()
            .map(|(r0, &jr)| {
                let r = r0 as i64 + 1;
                (r - (jr - m).max(0)) as usize
            })
            .collect()
    }

    /// All valid fillings for the given subset, in lexicographic order of
    /// their column entries.
    pub fn enumerate(n: usize, k: usize, j_set: &[i64]) -> Vec<JTableau> {
        assert!(1 <= k && k < n, "need 1 <= k < n");
        assert_eq!(j_set.len(), k, "subset size must be k");
        assert!(
            j_set.windows(2).all(|w| w[0] < w[1]),
            "subset must be strictly increasing"
        );
        assert!(
            j_set.iter().all(|&j| 1 <= j && j <= n as i64),
            "subset elements must lie in [1, n]"
        );
        let m = n - k;
        let lengths = Self::column_lengths(n, k, j_set);
        let mut out = Vec::new();
        let mut columns: Vec<Vec<usize>> = Vec::with_capacity(k);
        Self::build_columns(n, k, j_set, m, &lengths, &mut columns, &mut out);
        out
    }

    fn build_columns(
        n: usize,
        k: usize,
        j_set: &[i64],
        m: usize,
        lengths: &[usize],
        columns: &mut Vec<Vec<usize>>,
        out: &mut Vec<JTableau>,
    ) {
        let b = columns.len();
        if b == k {
            out.push(JTableau {
                n,
                k,
                j_set: j_set.to_vec(),
                columns: columns.clone(),
            });
            return;
        }
        // The diagonal box (b+1, b+1) exists exactly when the column is
        // full height, and it is pinned to j_{b+1}.
        let pin_last = (lengths[b] == b + 1).then(|| j_set[b] as usize);
        let mut fillings = Vec::new();
        let prev: Vec<usize> = if b == 0 { Vec::new() } else { columns[b - 1].clone() };
        let mut current = Vec::new();
        Self::extend_column(m, lengths[b], pin_last, &prev, &mut current, &mut fillings);
        for filling in fillings {
            columns.push(filling);
            Self::build_columns(n, k, j_set, m, lengths, columns, out);
            columns.pop();
        }
    }

    fn extend_column(
        m: usize,
        len: usize,
        pin_last: Option<usize>,
        prev: &[usize],
        current: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == len {
            if let Some(p) = pin_last {
                if current.last() != Some(&p) {
                    return;
                }
            }
            found.push(current.clone());
            return;
        }
        let a = current.len();
        let mut lo = current.last().map_or(1, |&x| x + 1);
        if a < prev.len() {
            lo = lo.max(prev[a]);
        }
        for v in lo..=m {
            current.push(v);
            Self::extend_column(m, len, pin_last, prev, current, found);
            current.pop();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn j_set(&self) -> &[i64] {
        &self.j_set
    }

    /// Column entries, top to bottom, one vector per column.
    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// All boxes as (row, column, value) with 1-based row and column.
    pub fn boxes(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (b0, col) in self.columns.iter().enumerate() {
            for (a0, &v) in col.iter().enumerate() {
                out.push((a0 + 1, b0 + 1, v));
            }
        }
        out
    }

    /// The weight: the product over boxes (a,b) of `z(v, v + b - a)` where
    /// `v` is the box value. The empty filling has weight 1.
    pub fn weight_with<F: Field>(&self, mut z: impl FnMut(usize, usize) -> F) -> F {
        let mut acc = F::one();
        for (a, b, v) in self.boxes() {
            acc = acc * z(v, v + b - a);
        }
        acc
    }

    /// The multiset of weight-factor subscripts `(v, v + b - a)`, sorted.
    pub fn weight_indices(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.boxes().iter().map(|&(a, b, v)| (v, v + b - a)).collect();
        out.sort_unstable();
        out
    }
}

/// A Pluecker coordinate of the parametrized point, computed as the sum of
/// tableau weights in the chart's boundary ratios.
pub fn plucker_via_jtableaux<F: Field>(rect: &RationalRectangle<F>, j_set: &[i64]) -> F {
    let n = rect.n();
    let k = rect.width();
    let mut acc = F::zero();
    for t in JTableau::enumerate(n, k, j_set) {
        acc = acc + t.weight_with(|i, j| rect.x(i, j));
    }
    acc
}

/// The subtraction-free expression for the boundary ratio `x_{ij}` of an
/// `(n-k)`-row chart: `X_{ij}/X_{i,j-1}` with `X_{i,i-1} = 1` and
/// `X_{i,i+k} = t`.
pub fn x_ratio_expr(arena: &mut ExprArena, n: usize, k: usize, i: usize, j: usize) -> ExprId {
    let m = n - k;
    assert!(1 <= i && i <= m && i <= j && j <= i + k, "ratio index out of range");
    let num = if j == i + k {
        arena.var(chart_t_var())
    } else {
        arena.var(&chart_var(i, j))
    };
    if j == i {
        return num;
    }
    let den = arena.var(&chart_var(i, j - 1));
    arena.div(num, den)
}

/// The subtraction-free expression for a Pluecker coordinate of the
/// parametrized point, as the tableau-weight sum in the chart variables.
pub fn plucker_expr(arena: &mut ExprArena, n: usize, k: usize, j_set: &[i64]) -> ExprId {
    let terms: Vec<ExprId> = JTableau::enumerate(n, k, j_set)
        .iter()
        .map(|t| {
            let factors: Vec<ExprId> = t
                .boxes()
                .iter()
                .map(|&(a, b, v)| x_ratio_expr(arena, n, k, v, v + b - a))
                .collect();
            arena.mul_many(&factors)
        })
        .collect();
    arena.add_many(&terms)
}
