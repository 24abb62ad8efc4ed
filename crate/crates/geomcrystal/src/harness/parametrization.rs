//! Chart-parametrization suite: positive minor formulas over shifted
//! tableaux, birational roundtrips, planar-network transfer matrices,
//! and the monomial coordinates at basic subsets.

use itertools::Itertools;
use rand_chacha::ChaCha12Rng;
use serde_json::json;

use super::config::{Suite, VerifyConfig};
use super::report::{run_check, sampled, CheckRecord};
use crate::algebra::{rat_int, Rat};
use crate::grassmann::sample_point;
use crate::gt_param::{
    basic_elements, chart_network, phi_matrix, plucker_via_jtableaux, sample_rectangle, theta,
    theta_inverse, BasicSubset, RationalRectangle,
};
use crate::loop_group::q_minor;

const SUITE: Suite = Suite::Parametrization;

pub(crate) fn run(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let trials = cfg.trials;
    for (n, k) in cfg.cases(SUITE) {
        let params = json!({"k": k, "n": n, "trials": trials});
        run_check(
            &mut out,
            cfg,
            SUITE,
            "minor-positive-formula",
            "parametrization/shifted-tableau-minors",
            params.clone(),
            |rng| minor_positive_formula(n, k, trials, rng),
        );
        run_check(
            &mut out,
            cfg,
            SUITE,
            "birational-roundtrip",
            "parametrization/birational-roundtrip",
            params.clone(),
            |rng| birational_roundtrip(n, k, trials, rng),
        );
        run_check(
            &mut out,
            cfg,
            SUITE,
            "network-transfer-matrix",
            "parametrization/network-transfer",
            params.clone(),
            |rng| network_transfer(n, k, trials, rng),
        );
        run_check(
            &mut out,
            cfg,
            SUITE,
            "basic-monomial-coordinates",
            "parametrization/basic-monomials",
            params,
            |rng| basic_monomials(n, k, trials, rng),
        );
    }
    run_check(
        &mut out,
        cfg,
        SUITE,
        "worked-network-minor",
        "worked/network-minor",
        json!({"k": 3, "n": 5}),
        |_| worked_network_minor(),
    );
    out
}

/// Every size-k minor of the parametrized point equals the positive sum
/// over shifted-tableau fillings.
fn minor_positive_formula(
    n: usize,
    k: usize,
    trials: usize,
    rng: &mut ChaCha12Rng,
) -> Result<(), String> {
    let m = n - k;
    let subsets: Vec<Vec<i64>> = (1..=n as i64).combinations(k).collect();
    for _ in 0..trials {
        let rect = sample_rectangle(n, m, rng);
        let p = theta(&rect).map_err(|e| format!("parametrization failed: {e}"))?;
        for j_set in &subsets {
            let formula = plucker_via_jtableaux(&rect, j_set);
            let minor = p.matrix().plucker_set(j_set.iter().copied());
            if formula != minor {
                return Err(format!(
                    "tableau-sum formula disagrees with the minor at n={n} k={k} J={j_set:?}: \
                     formula {formula}, minor {minor}"
                ));
            }
        }
    }
    Ok(())
}

/// The chart map and its inverse are mutually inverse: exactly on charts,
/// projectively on points.
fn birational_roundtrip(
    n: usize,
    k: usize,
    trials: usize,
    rng: &mut ChaCha12Rng,
) -> Result<(), String> {
    let m = n - k;
    for _ in 0..trials {
        let rect = sample_rectangle(n, m, rng);
        let p = theta(&rect).map_err(|e| format!("parametrization failed: {e}"))?;
        let back = theta_inverse(&p).map_err(|e| format!("inverse failed on the image: {e}"))?;
        if back != rect {
            return Err(format!("chart roundtrip moved the chart at n={n} k={k}"));
        }
    }
    sampled(rng, trials, |rng| {
        let p = sample_point(n, k, rng);
        let Ok(rect) = theta_inverse(&p) else { return Ok(false) };
        let q = theta(&rect).map_err(|e| format!("parametrization failed: {e}"))?;
        if !q.projectively_equal(&p) || q.t() != p.t() {
            return Err(format!("point roundtrip moved the point at n={n} k={k}"));
        }
        Ok(true)
    })
}

/// The chart's planar network has the documented size and its transfer
/// matrix is the first k columns of the generator product; vertex-disjoint
/// path sums agree with algebraic minors.
fn network_transfer(
    n: usize,
    k: usize,
    trials: usize,
    rng: &mut ChaCha12Rng,
) -> Result<(), String> {
    use rand::Rng;
    let m = n - k;
    for _ in 0..trials {
        let rect = sample_rectangle(n, m, rng);
        let net = chart_network(&rect);
        if net.edges().len() != 2 * k * m {
            return Err(format!(
                "network has {} edges, expected {} at n={n} k={k}",
                net.edges().len(),
                2 * k * m
            ));
        }
        if net.sources().len() != n || net.sinks().len() != k {
            return Err(format!("network has the wrong boundary at n={n} k={k}"));
        }
        let transfer = net.matrix();
        let product = phi_matrix(&rect);
        for r in 0..n {
            for c in 0..k {
                if transfer.get(r, c) != product.get(r, c) {
                    return Err(format!(
                        "transfer matrix entry ({r},{c}) disagrees with the generator product \
                         at n={n} k={k}"
                    ));
                }
            }
        }
        // Path-family sums match algebraic minors for a few random shapes.
        for _ in 0..3 {
            let size = rng.random_range(1..=k);
            let rows: Vec<usize> = sorted_subset(rng, n, size);
            let cols: Vec<usize> = sorted_subset(rng, k, size);
            let path_sum = net.lindstrom_minor(&rows, &cols);
            let rows1: Vec<usize> = rows.iter().map(|&r| r + 1).collect();
            let cols1: Vec<usize> = cols.iter().map(|&c| c + 1).collect();
            let minor = q_minor(&transfer, &rows1, &cols1);
            if path_sum != minor {
                return Err(format!(
                    "path-family sum disagrees with the minor at n={n} k={k} rows={rows:?} \
                     cols={cols:?}"
                ));
            }
        }
    }
    Ok(())
}

fn sorted_subset(rng: &mut ChaCha12Rng, universe: usize, size: usize) -> Vec<usize> {
    use rand::Rng;
    let mut all: Vec<usize> = (0..universe).collect();
    while all.len() > size {
        let ix = rng.random_range(0..all.len());
        all.remove(ix);
    }
    all
}

/// The minor at each basic subset is the monomial given by a single column
/// product of chart entries.
fn basic_monomials(n: usize, k: usize, trials: usize, rng: &mut ChaCha12Rng) -> Result<(), String> {
    let m = n - k;
    for _ in 0..trials {
        let rect = sample_rectangle(n, m, rng);
        let p = theta(&rect).map_err(|e| format!("parametrization failed: {e}"))?;
        for b in BasicSubset::all(n, k) {
            let (i, j) = (b.i(), b.j());
            let mut expected = rat_int(1);
            for a in i..=j.min(m) {
                expected = expected * rect.entry(a, j).clone();
            }
            let elems = basic_elements(n, k, i, j);
            if p.matrix().plucker_set(elems.iter().copied()) != expected {
                return Err(format!(
                    "basic minor at ({i},{j}) is not the column monomial at n={n} k={k}"
                ));
            }
        }
    }
    Ok(())
}

/// The pinned 5-source, 3-sink network: its displayed transfer matrix, and
/// the (rows {3,4}, columns {2,3}) minor as the three-family path sum
/// x12*x13 + x12*x24 + x23*x24 — certified as a polynomial identity by
/// evaluating on a full grid (each ratio has degree at most 2, so three
/// values per variable decide it).
fn worked_network_minor() -> Result<(), String> {
    for assignment in std::iter::repeat(1..=3i64).take(6).multi_cartesian_product() {
        let x = |slot: usize| rat_int(assignment[slot]);
        // Ratio slots: 0..2 are row 1 at columns 1..3; 3..5 are row 2 at
        // columns 2..4. Chart entries are the cumulative column products.
        let entries = vec![
            x(0),
            x(0) * x(1),
            x(0) * x(1) * x(2),
            x(3),
            x(3) * x(4),
            x(3) * x(4) * x(5),
        ];
        let rect = RationalRectangle::<Rat>::new(5, 2, entries, rat_int(1))
            .map_err(|e| format!("grid chart rejected: {e}"))?;
        let (x11, x12, x13) = (rect.x(1, 1), rect.x(1, 2), rect.x(1, 3));
        let (x22, x23, x24) = (rect.x(2, 2), rect.x(2, 3), rect.x(2, 4));
        let hit = x11 == x(0)
            && x12 == x(1)
            && x13 == x(2)
            && x22 == x(3)
            && x23 == x(4)
            && x24 == x(5);
        if !hit {
            return Err("cumulative products failed to hit the ratio grid".into());
        }
        let net = chart_network(&rect);
        let zero = rat_int(0);
        let one = rat_int(1);
        let expected_matrix = [
            [x11.clone(), zero.clone(), zero.clone()],
            [x22.clone(), x12.clone() * x22.clone(), zero.clone()],
            [one.clone(), x12.clone() + x23.clone(), x13.clone() * x23.clone()],
            [zero.clone(), one.clone(), x13.clone() + x24.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        let transfer = net.matrix();
        for (r, row) in expected_matrix.iter().enumerate() {
            for (c, want) in row.iter().enumerate() {
                if transfer.get(r, c) != want {
                    return Err(format!(
                        "displayed transfer entry ({r},{c}) disagrees at grid point \
                         {assignment:?}"
                    ));
                }
            }
        }
        let minor = net.lindstrom_minor(&[2, 3], &[1, 2]);
        let want = x12.clone() * x13 + x12 * x24.clone() + x23 * x24;
        if minor != want {
            return Err(format!("three-family minor disagrees at grid point {assignment:?}"));
        }
        if q_minor(&transfer, &[3, 4], &[2, 3]) != want {
            return Err(format!("algebraic minor disagrees at grid point {assignment:?}"));
        }
    }
    Ok(())
}
