//! Geometric-crystal suite: structure-function relations, action laws,
//! decoration cocycle, and cyclic-shift behaviour at random exact points.

use rand_chacha::ChaCha12Rng;
use serde_json::json;

use super::config::{Suite, VerifyConfig};
use super::report::{run_check, sampled, CheckRecord};
use crate::algebra::{rat_int, Rat};
use crate::grassmann::{sample_c, sample_generic_point, sample_point, CrystalPoint, ShiftDir};

const SUITE: Suite = Suite::Geometric;

pub(crate) fn run(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let trials = cfg.trials;
    for (n, k) in cfg.cases(SUITE) {
        let params = json!({"k": k, "n": n, "trials": trials});
        let checks: [(&str, &str, fn(usize, usize, usize, &mut ChaCha12Rng) -> Result<(), String>);
            8] = [
            ("structure-ratio", "geometric-crystal/structure-ratio", structure_ratio),
            ("action-scaling", "geometric-crystal/action-scaling", action_scaling),
            ("one-parameter-action", "geometric-crystal/one-parameter-action", one_parameter),
            ("decoration-cocycle", "geometric-crystal/decoration-cocycle", decoration_cocycle),
            ("shift-conjugation", "promotion/shift-conjugation", shift_conjugation),
            ("shift-minor-translation", "promotion/minor-translation", shift_minor_translation),
            ("shift-full-cycle", "promotion/order-n-projective", shift_full_cycle),
            ("serre-relations", "geometric-crystal/serre-relations", serre_relations),
        ];
        for (check_id, anchor, body) in checks {
            run_check(&mut out, cfg, SUITE, check_id, anchor, params.clone(), |rng| {
                body(n, k, trials, rng)
            });
        }
    }
    out
}

/// The simple-root character at residue i: the ratio of the weight
/// components at positions i and i+1 (mod n, with position 0 meaning n).
fn alpha(gamma: &[Rat], i: usize) -> Rat {
    let n = gamma.len();
    let at = |j: usize| gamma[(j + n - 1) % n].clone();
    at(i) / at(i + 1)
}

fn fmt_err(e: impl std::fmt::Display, what: &str) -> String {
    format!("{what}: {e}")
}

/// eps_i = phi_i * alpha_i(gamma) at every residue.
fn structure_ratio(n: usize, k: usize, trials: usize, rng: &mut ChaCha12Rng) -> Result<(), String> {
    for trial in 0..trials {
        let p = sample_generic_point(n, k, rng);
        let maps = p.geom_maps().map_err(|e| fmt_err(e, "structure maps"))?;
        for i in 0..n {
            if maps.eps[i] != maps.phi[i].clone() * alpha(&maps.gamma, i) {
                return Err(format!(
                    "eps != phi * alpha at n={n} k={k} i={i} trial={trial}: point {:?}",
                    p.matrix().rows()
                ));
            }
        }
    }
    Ok(())
}

/// Applying the action at residue i scales the weight components at i and
/// i+1 by c and 1/c, divides phi_i by c, and multiplies eps_i by c.
fn action_scaling(n: usize, k: usize, trials: usize, rng: &mut ChaCha12Rng) -> Result<(), String> {
    sampled(rng, trials, |rng| {
        let p = sample_generic_point(n, k, rng);
        let c = sample_c(rng);
        for i in 0..n {
            let Ok(q) = p.apply_ei(i, &c) else { return Ok(false) };
            let g0 = p.gamma().map_err(|e| fmt_err(e, "weight"))?;
            let g1 = q.gamma().map_err(|e| fmt_err(e, "acted weight"))?;
            for j in 1..=n {
                let mut expected = g0[j - 1].clone();
                if j % n == i % n {
                    expected = expected * c.clone();
                }
                if j % n == (i + 1) % n {
                    expected = expected / c.clone();
                }
                if g1[j - 1] != expected {
                    return Err(format!("weight scaling broken at n={n} k={k} i={i} j={j} c={c}"));
                }
            }
            let (Ok(phi0), Ok(eps0), Ok(phi1), Ok(eps1)) =
                (p.phi(i), p.eps(i), q.phi(i), q.eps(i))
            else {
                return Ok(false);
            };
            if phi1 != phi0 / c.clone() || eps1 != eps0 * c.clone() {
                return Err(format!(
                    "structure functions scale wrongly at n={n} k={k} i={i} c={c}"
                ));
            }
        }
        Ok(true)
    })
}

/// The action at a residue is a one-parameter group: unital and
/// multiplicative in the parameter.
fn one_parameter(n: usize, k: usize, trials: usize, rng: &mut ChaCha12Rng) -> Result<(), String> {
    sampled(rng, trials, |rng| {
        let p = sample_generic_point(n, k, rng);
        let c1 = sample_c(rng);
        let c2 = sample_c(rng);
        for i in 0..n {
            let unital = p.apply_ei(i, &rat_int(1)).map_err(|e| fmt_err(e, "unital action"))?;
            if unital != p {
                return Err(format!("action at parameter 1 moved the point, n={n} k={k} i={i}"));
            }
            let (Ok(two_step), Ok(one_step)) = (
                p.apply_ei(i, &c2).and_then(|q| q.apply_ei(i, &c1)),
                p.apply_ei(i, &(c1.clone() * c2.clone())),
            ) else {
                return Ok(false);
            };
            if two_step != one_step {
                return Err(format!(
                    "action is not multiplicative at n={n} k={k} i={i} c1={c1} c2={c2}"
                ));
            }
        }
        Ok(true)
    })
}

/// The decoration changes by (c-1)/phi_i + (1/c-1)/eps_i under the action.
fn decoration_cocycle(
    n: usize,
    k: usize,
    trials: usize,
    rng: &mut ChaCha12Rng,
) -> Result<(), String> {
    sampled(rng, trials, |rng| {
        let p = sample_generic_point(n, k, rng);
        let c = sample_c(rng);
        let f0 = p.decoration().map_err(|e| fmt_err(e, "decoration"))?;
        for i in 0..n {
            let Ok(q) = p.apply_ei(i, &c) else { return Ok(false) };
            let Ok(f1) = q.decoration() else { return Ok(false) };
            let phi = p.phi(i).map_err(|e| fmt_err(e, "phi"))?;
            let eps = p.eps(i).map_err(|e| fmt_err(e, "eps"))?;
            let expected = f0.clone()
                + (c.clone() - rat_int(1)) / phi
                + (rat_int(1) / c.clone() - rat_int(1)) / eps;
            if f1 != expected {
                return Err(format!("decoration cocycle broken at n={n} k={k} i={i} c={c}"));
            }
        }
        Ok(true)
    })
}

/// The cyclic shift rotates the weight, preserves the decoration, shifts
/// the structure functions by one residue, and conjugates the action.
fn shift_conjugation(
    n: usize,
    k: usize,
    trials: usize,
    rng: &mut ChaCha12Rng,
) -> Result<(), String> {
    sampled(rng, trials, |rng| {
        let p = sample_generic_point(n, k, rng);
        let s = p.cyclic_shift(ShiftDir::Forward);
        if s.cyclic_shift(ShiftDir::Inverse) != p {
            return Err(format!("inverse shift failed to undo the shift at n={n} k={k}"));
        }
        let g = p.gamma().map_err(|e| fmt_err(e, "weight"))?;
        let gs = s.gamma().map_err(|e| fmt_err(e, "shifted weight"))?;
        let mut rotated = g.clone();
        rotated.rotate_right(1);
        if gs != rotated {
            return Err(format!("shift failed to rotate the weight at n={n} k={k}"));
        }
        let (Ok(f0), Ok(f1)) = (p.decoration(), s.decoration()) else { return Ok(false) };
        if f0 != f1 {
            return Err(format!("shift changed the decoration at n={n} k={k}"));
        }
        let c = sample_c(rng);
        for i in 0..n {
            let prev = CrystalPoint::<Rat>::residue_sub_one(i, n);
            if let (Ok(a), Ok(b)) = (s.phi(i), p.phi(prev)) {
                if a != b {
                    return Err(format!("phi failed to shift residues at n={n} k={k} i={i}"));
                }
            }
            if let (Ok(a), Ok(b)) = (s.eps(i), p.eps(prev)) {
                if a != b {
                    return Err(format!("eps failed to shift residues at n={n} k={k} i={i}"));
                }
            }
            let via_shift = s.apply_ei(i, &c).map(|q| q.cyclic_shift(ShiftDir::Inverse));
            let direct = p.apply_ei(prev, &c);
            let (Ok(a), Ok(b)) = (via_shift, direct) else { return Ok(false) };
            if !a.projectively_equal(&b) {
                return Err(format!("shift failed to conjugate the action at n={n} k={k} i={i}"));
            }
        }
        Ok(true)
    })
}

/// Every minor of the shifted point is the translated minor of the
/// original, with one factor t exactly when the subset wraps.
fn shift_minor_translation(
    n: usize,
    k: usize,
    trials: usize,
    rng: &mut ChaCha12Rng,
) -> Result<(), String> {
    for _ in 0..trials {
        let p = sample_point(n, k, rng);
        let s = p.cyclic_shift(ShiftDir::Forward);
        let t = p.t().clone();
        for (subset, value) in s.matrix().all_pluckers() {
            let shifted: Vec<i64> = subset.iter().map(|&x| x as i64 - 1).collect();
            let mut expected = p.matrix().plucker_set(shifted);
            if subset.contains(&1) {
                expected = t.clone() * expected;
            }
            if value != expected {
                return Err(format!(
                    "shifted minor at {subset:?} disagrees with translation at n={n} k={k}"
                ));
            }
        }
    }
    Ok(())
}

/// n shifts scale every minor by t^k, so the full cycle is projectively
/// the identity.
fn shift_full_cycle(
    n: usize,
    k: usize,
    trials: usize,
    rng: &mut ChaCha12Rng,
) -> Result<(), String> {
    for _ in 0..trials {
        let p = sample_point(n, k, rng);
        let mut q = p.clone();
        for _ in 0..n {
            q = q.cyclic_shift(ShiftDir::Forward);
        }
        let tk = p.t().pow(k as i32);
        for ((s0, v0), (s1, v1)) in
            p.matrix().all_pluckers().iter().zip(q.matrix().all_pluckers())
        {
            if s0 != &s1 || v1 != tk.clone() * v0.clone() {
                return Err(format!(
                    "full cycle failed to scale minor {s0:?} by t^{k} at n={n} k={k}"
                ));
            }
        }
        if !p.projectively_equal(&q) {
            return Err(format!("full cycle moved the projective point at n={n} k={k}"));
        }
        if q.t() != p.t() {
            return Err(format!("full cycle changed the scalar at n={n} k={k}"));
        }
    }
    Ok(())
}

/// Actions at distant residues commute; adjacent residues satisfy the
/// braid-type relation (projectively).
fn serre_relations(n: usize, k: usize, trials: usize, rng: &mut ChaCha12Rng) -> Result<(), String> {
    if n < 3 {
        // Rank 2 has no distant pairs and no braid triple: nothing to relate.
        return Ok(());
    }
    sampled(rng, trials, |rng| {
        let p = sample_generic_point(n, k, rng);
        let c1 = sample_c(rng);
        let c2 = sample_c(rng);
        let mut compared = false;
        for i in 0..n {
            for j in 0..n {
                let diff = (i as i64 - j as i64).rem_euclid(n as i64);
                let circ_dist = diff.min(n as i64 - diff);
                if circ_dist > 1 {
                    let a = p.apply_ei(j, &c2).and_then(|q| q.apply_ei(i, &c1));
                    let b = p.apply_ei(i, &c1).and_then(|q| q.apply_ei(j, &c2));
                    if let (Ok(a), Ok(b)) = (a, b) {
                        compared = true;
                        if !a.projectively_equal(&b) {
                            return Err(format!(
                                "distant actions fail to commute at n={n} k={k} i={i} j={j}"
                            ));
                        }
                    }
                } else if circ_dist == 1 && n >= 3 {
                    let c12 = c1.clone() * c2.clone();
                    let lhs = p
                        .apply_ei(i, &c2)
                        .and_then(|q| q.apply_ei(j, &c12))
                        .and_then(|q| q.apply_ei(i, &c1));
                    let rhs = p
                        .apply_ei(j, &c1)
                        .and_then(|q| q.apply_ei(i, &c12))
                        .and_then(|q| q.apply_ei(j, &c2));
                    if let (Ok(a), Ok(b)) = (lhs, rhs) {
                        compared = true;
                        if !a.projectively_equal(&b) {
                            return Err(format!(
                                "braid relation fails at n={n} k={k} i={i} j={j}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(compared)
    })
}
