//! Planar networks: directed acyclic edge-weighted graphs with ordered
//! sources and sinks, their path-weight transfer matrices, vertex-disjoint
//! path families (the path-family expansion of minors), gluing, the
//! specific network whose matrix realizes the chart parametrization, and a
//! DOT renderer.

use std::collections::HashMap;

use crate::algebra::{Field, Matrix};

use super::chart::RationalRectangle;

/// A weighted directed edge between vertex ids; `label` is the symbolic
/// name shown in rendered output (weight-1 structural edges carry none).
#[derive(Clone, Debug)]
pub struct NetEdge<F> {
    pub from: usize,
    pub to: usize,
    pub weight: F,
    pub label: Option<String>,
}

/// A finite directed acyclic edge-weighted graph with ordered source and
/// sink vertices. Positions follow the matrix-index drawing convention:
/// `(row, col)` with rows increasing downward.
#[derive(Clone, Debug)]
pub struct PlanarNetwork<F: Field> {
    positions: Vec<(i64, i64)>,
    edges: Vec<NetEdge<F>>,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    out_adj: Vec<Vec<usize>>,
}

impl<F: Field> PlanarNetwork<F> {
    pub fn new(
        positions: Vec<(i64, i64)>,
        edges: Vec<NetEdge<F>>,
        sources: Vec<usize>,
        sinks: Vec<usize>,
    ) -> Self {
        let nv = positions.len();
        assert!(
            edges.iter().all(|e| e.from < nv && e.to < nv),
            "edge endpoint out of range"
        );
        assert!(
            edges.iter().all(|e| !e.weight.is_zero()),
            "edge weights must be nonzero"
        );
        assert!(
            sources.iter().chain(sinks.iter()).all(|&v| v < nv),
            "source or sink out of range"
        );
        let mut out_adj = vec![Vec::new(); nv];
        for (idx, e) in edges.iter().enumerate() {
            out_adj[e.from].push(idx);
        }
        let net = PlanarNetwork { positions, edges, sources, sinks, out_adj };
        assert!(net.topo_order().is_some(), "network must be acyclic");
        net
    }

    pub fn num_vertices(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[(i64, i64)] {
        &self.positions
    }

    pub fn edges(&self) -> &[NetEdge<F>] {
        &self.edges
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    /// Topological order of the vertices, or `None` if there is a cycle.
    fn topo_order(&self) -> Option<Vec<usize>> {
        let nv = self.num_vertices();
        let mut indeg = vec![0usize; nv];
        for e in &self.edges {
            indeg[e.to] += 1;
        }
        let mut queue: Vec<usize> = (0..nv).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(nv);
        while let Some(v) = queue.pop() {
            order.push(v);
            for &eidx in &self.out_adj[v] {
                let w = self.edges[eidx].to;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        (order.len() == nv).then_some(order)
    }

    /// The transfer matrix: entry `(i, j)` is the sum of path weights from
    /// source `i` to sink `j` (a source that is a sink contributes the
    /// empty path of weight 1).
    pub fn matrix(&self) -> Matrix<F> {
        let order = self.topo_order().expect("validated acyclic");
        let mut result = Matrix::zeros(self.sources.len(), self.sinks.len());
        for (si, &src) in self.sources.iter().enumerate() {
            let mut f = vec![F::zero(); self.num_vertices()];
            f[src] = F::one();
            for &v in &order {
                if f[v].is_zero() {
                    continue;
                }
                for &eidx in &self.out_adj[v] {
                    let e = &self.edges[eidx];
                    let add = f[v].clone() * e.weight.clone();
                    f[e.to] = f[e.to].clone() + add;
                }
            }
            for (ti, &snk) in self.sinks.iter().enumerate() {
                result.set(si, ti, f[snk].clone());
            }
        }
        result
    }

    /// All directed paths from one vertex to another, as (vertex list,
    /// weight) pairs. The single-vertex path has weight 1.
    fn paths_between(&self, from: usize, to: usize) -> Vec<(Vec<usize>, F)> {
        let mut out = Vec::new();
        let mut trail = vec![from];
        self.dfs_paths(from, to, &mut trail, F::one(), &mut out);
        out
    }

    fn dfs_paths(
        &self,
        at: usize,
        to: usize,
        trail: &mut Vec<usize>,
        weight: F,
        out: &mut Vec<(Vec<usize>, F)>,
    ) {
        if at == to {
            out.push((trail.clone(), weight.clone()));
            // fall through: paths may continue and return only in cyclic
            // graphs, which are excluded, so we can stop here.
            return;
        }
        for &eidx in &self.out_adj[at] {
            let e = &self.edges[eidx];
            trail.push(e.to);
            self.dfs_paths(e.to, to, trail, weight.clone() * e.weight.clone(), out);
            trail.pop();
        }
    }

    /// All vertex-disjoint path families connecting the chosen sources to
    /// the chosen sinks (positions into the source/sink lists). Each family
    /// is returned as the connection permutation (family member `r` runs to
    /// `cols[perm[r]]`) together with the product of its path weights.
    pub fn vertex_disjoint_families(
        &self,
        rows: &[usize],
        cols: &[usize],
    ) -> Vec<(Vec<usize>, F)> {
        assert_eq!(rows.len(), cols.len(), "minor needs |rows| = |cols|");
        let paths: Vec<Vec<Vec<(Vec<usize>, F)>>> = rows
            .iter()
            .map(|&r| {
                cols.iter()
                    .map(|&c| self.paths_between(self.sources[r], self.sinks[c]))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut used_cols = vec![false; cols.len()];
        let mut used_vertices = vec![false; self.num_vertices()];
        let mut perm = Vec::new();
        self.family_search(
            &paths,
            0,
            &mut used_cols,
            &mut used_vertices,
            &mut perm,
            F::one(),
            &mut out,
        );
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn family_search(
        &self,
        paths: &[Vec<Vec<(Vec<usize>, F)>>],
        depth: usize,
        used_cols: &mut Vec<bool>,
        used_vertices: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        weight: F,
        out: &mut Vec<(Vec<usize>, F)>,
    ) {
        if depth == paths.len() {
            out.push((perm.clone(), weight));
            return;
        }
        for ci in 0..used_cols.len() {
            if used_cols[ci] {
                continue;
            }
            'next_path: for (verts, w) in &paths[depth][ci] {
                for &v in verts {
                    if used_vertices[v] {
                        continue 'next_path;
                    }
                }
                for &v in verts {
                    used_vertices[v] = true;
                }
                used_cols[ci] = true;
                perm.push(ci);
                self.family_search(
                    paths,
                    depth + 1,
                    used_cols,
                    used_vertices,
                    perm,
                    weight.clone() * w.clone(),
                    out,
                );
                perm.pop();
                used_cols[ci] = false;
                for &v in verts {
                    used_vertices[v] = false;
                }
            }
        }
    }

    /// The minor of the transfer matrix on the chosen sources and sinks,
    /// computed on the path side: the signed sum over vertex-disjoint
    /// path families.
    pub fn lindstrom_minor(&self, rows: &[usize], cols: &[usize]) -> F {
        let mut acc = F::zero();
        for (perm, weight) in self.vertex_disjoint_families(rows, cols) {
            let mut inversions = 0usize;
            for a in 0..perm.len() {
                for b in a + 1..perm.len() {
                    if perm[a] > perm[b] {
                        inversions += 1;
                    }
                }
            }
            if inversions % 2 == 0 {
                acc = acc + weight;
            } else {
                acc = acc - weight;
            }
        }
        acc
    }

    /// Glue another network onto this one by identifying this network's
    /// sinks with the other's sources (in order). The transfer matrix of
    /// the result is the product `self.matrix() * other.matrix()`.
    pub fn glue(&self, other: &Self) -> Self {
        assert_eq!(
            self.sinks.len(),
            other.sources.len(),
            "gluing identifies sinks with sources one for one"
        );
        let mut positions = self.positions.clone();
        // Translate the other network so its first source lands on our
        // first sink (cosmetic only; the matrix does not depend on it).
        let delta = if let (Some(&snk), Some(&src)) = (self.sinks.first(), other.sources.first()) {
            let (sr, sc) = self.positions[snk];
            let (or, oc) = other.positions[src];
            (sr - or, sc - oc)
        } else {
            (0, 0)
        };
        let mut remap: Vec<Option<usize>> = vec![None; other.num_vertices()];
        for (j, &src) in other.sources.iter().enumerate() {
            remap[src] = Some(self.sinks[j]);
        }
        for v in 0..other.num_vertices() {
            if remap[v].is_none() {
                let (r, c) = other.positions[v];
                positions.push((r + delta.0, c + delta.1));
                remap[v] = Some(positions.len() - 1);
            }
        }
        let mut edges = self.edges.clone();
        for e in &other.edges {
            edges.push(NetEdge {
                from: remap[e.from].expect("remapped"),
                to: remap[e.to].expect("remapped"),
                weight: e.weight.clone(),
                label: e.label.clone(),
            });
        }
        let sinks = other.sinks.iter().map(|&s| remap[s].expect("remapped")).collect();
        PlanarNetwork::new(positions, edges, self.sources.clone(), sinks)
    }

    /// Render as a DOT digraph. Sources are labeled `1..n` and sinks
    /// `1'..s'` as in hand-drawn figures; unlabeled edges have weight 1.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph {name} {{\n"));
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=point, width=0.08];\n");
        let vname = |v: usize| {
            let (r, c) = self.positions[v];
            format!("v{r}_{c}")
        };
        for v in 0..self.num_vertices() {
            let mut attrs: Vec<String> = Vec::new();
            if let Some(i) = self.sources.iter().position(|&s| s == v) {
                attrs.push(format!("xlabel=\"{}\"", i + 1));
            }
            if let Some(j) = self.sinks.iter().position(|&s| s == v) {
                attrs.push(format!("xlabel=\"{}'\"", j + 1));
            }
            if attrs.is_empty() {
                out.push_str(&format!("  {};\n", vname(v)));
            } else {
                attrs.push("shape=circle".to_string());
                attrs.push("width=0.12".to_string());
                out.push_str(&format!("  {} [{}];\n", vname(v), attrs.join(", ")));
            }
        }
        for e in &self.edges {
            match &e.label {
                Some(l) => out.push_str(&format!(
                    "  {} -> {} [label=\"{}\"];\n",
                    vname(e.from),
                    vname(e.to),
                    l
                )),
                None => out.push_str(&format!("  {} -> {};\n", vname(e.from), vname(e.to))),
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The one-band network of an interval factor `M_{[a,b]}(c_a, ..., c_b)`:
/// `n` sources below, `n` sinks above; source `x` connects straight up to
/// sink `x` with weight `c_a` at `x = a`, `c_x/c_{x-1}` for `a < x <= b`,
/// and 1 outside the interval, plus a weight-1 edge from source `x` to
/// sink `x - 1` for `a < x <= b`.
pub fn interval_network<F: Field>(n: usize, a: usize, b: usize, args: &[F]) -> PlanarNetwork<F> {
    assert!(1 <= a && a <= b && b <= n, "interval out of range");
    assert_eq!(args.len(), b - a + 1, "one argument per interval index");
    // Vertex ids: sources are 0..n at row 1, sinks are n..2n at row 0.
    let mut positions: Vec<(i64, i64)> = (1..=n as i64).map(|x| (1, x)).collect();
    positions.extend((1..=n as i64).map(|x| (0, x)));
    let mut edges = Vec::new();
    for x in 1..=n {
        let weight = if x < a || x > b {
            F::one()
        } else if x == a {
            args[0].clone()
        } else {
            args[x - a].clone() / args[x - a - 1].clone()
        };
        edges.push(NetEdge { from: x - 1, to: n + x - 1, weight, label: None });
        if x > a && x <= b {
            edges.push(NetEdge {
                from: x - 1,
                to: n + x - 2,
                weight: F::one(),
                label: None,
            });
        }
    }
    let sources = (0..n).collect();
    let sinks = (n..2 * n).collect();
    PlanarNetwork::new(positions, edges, sources, sinks)
}

/// The chart network: vertices `(i,j)` for `i` in `[0, rows]`, `j` in
/// `[0, width]` except `(0,0)`; sinks at `(0,j)`; source `r` at `(r, 0)`
/// for `r <= rows` and at `(rows, r - rows)` beyond; weight-1 edges going
/// up and weighted edges `x_{i,i+j}` going up-right. Its transfer matrix
/// is exactly the first `width` columns of the chart's generator product.
pub fn chart_network<F: Field>(rect: &RationalRectangle<F>) -> PlanarNetwork<F> {
    let m = rect.rows();
    let w = rect.width();
    let mut positions = Vec::new();
    let mut at = HashMap::new();
    for i in 0..=m as i64 {
        for j in 0..=w as i64 {
            if (i, j) == (0, 0) {
                continue;
            }
            at.insert((i, j), positions.len());
            positions.push((i, j));
        }
    }
    let mut edges = Vec::new();
    for i in 1..=m {
        for j in 1..=w {
            edges.push(NetEdge {
                from: at[&(i as i64, j as i64)],
                to: at[&(i as i64 - 1, j as i64)],
                weight: F::one(),
                label: None,
            });
        }
        for j in 0..w {
            edges.push(NetEdge {
                from: at[&(i as i64, j as i64)],
                to: at[&(i as i64 - 1, j as i64 + 1)],
                weight: rect.x(i, i + j),
                label: Some(format!("x_{}{}", i, i + j)),
            });
        }
    }
    let sources = (1..=rect.n())
        .map(|r| if r <= m { at[&(r as i64, 0)] } else { at[&(m as i64, (r - m) as i64)] })
        .collect();
    let sinks = (1..=w).map(|j| at[&(0, j as i64)]).collect();
    PlanarNetwork::new(positions, edges, sources, sinks)
}
