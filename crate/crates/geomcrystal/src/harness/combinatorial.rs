//! Tableau-level suite: promotion order, crystal-operator axioms,
//! evacuation as rotation, and the pinned worked examples.

use serde_json::json;

use super::config::{Suite, VerifyConfig};
use super::report::{run_check, CheckRecord};
use crate::tableau::{
    all_rectangles, crystal_op_mod_n, crystal_stats_mod_n, rotate_tableau, Direction, KRectangle,
    SymmetryKind, Tableau,
};

const SUITE: Suite = Suite::Combinatorial;

pub(crate) fn run(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for (n, k) in cfg.cases(SUITE) {
        let params = json!({"L_max": cfg.l_max, "k": k, "n": n});
        run_check(&mut out, cfg, SUITE, "promotion-order", "promotion/order-n", params.clone(), |_| {
            promotion_order(n, k, cfg.l_max)
        });
        run_check(
            &mut out,
            cfg,
            SUITE,
            "classical-crystal-axioms",
            "tableau-crystal/classical-axioms",
            params.clone(),
            |_| classical_axioms(n, k, cfg.l_max),
        );
        run_check(
            &mut out,
            cfg,
            SUITE,
            "affine-crystal-axioms",
            "tableau-crystal/affine-axioms",
            params.clone(),
            |_| affine_axioms(n, k, cfg.l_max),
        );
        run_check(
            &mut out,
            cfg,
            SUITE,
            "evacuation-is-rotation",
            "symmetry/evacuation-is-rotation",
            params,
            |_| evacuation_is_rotation(n, k, cfg.l_max),
        );
    }
    worked_examples(cfg, &mut out);
    out
}

fn tableaux(n: usize, k: usize, l: i64) -> Vec<Tableau> {
    all_rectangles(n, k, l).into_iter().map(|r| r.to_tableau()).collect()
}

/// Promotion has order n on rectangular tableaux, and inverse promotion
/// undoes one step.
fn promotion_order(n: usize, k: usize, l_max: i64) -> Result<(), String> {
    for l in 0..=l_max {
        for t0 in tableaux(n, k, l) {
            let mut t = t0.clone();
            for _ in 0..n {
                t = t.promote();
            }
            if t != t0 {
                return Err(format!("promotion^{n} moved n={n} k={k} L={l} tableau\n{t0}"));
            }
            if t0.promote().promote_inverse() != t0 {
                return Err(format!(
                    "inverse promotion failed to undo promotion at n={n} k={k} L={l} tableau\n{t0}"
                ));
            }
        }
    }
    Ok(())
}

/// The classical operator axioms on every element: nonnegative statistics
/// whose difference is the content difference, raising/lowering defined
/// exactly when the statistic is positive, mutual inversion, statistics
/// stepping by one, and the statistic equaling the maximal iteration count.
fn classical_axioms(n: usize, k: usize, l_max: i64) -> Result<(), String> {
    for l in 0..=l_max {
        for t in tableaux(n, k, l) {
            let content = t.content();
            for i in 1..n {
                let (eps, phi) = t.crystal_stats(i);
                let whos = || format!("n={n} k={k} L={l} i={i} tableau\n{t}");
                if eps < 0 || phi < 0 {
                    return Err(format!("negative statistics ({eps},{phi}) at {}", whos()));
                }
                if phi - eps != content[i - 1] - content[i] {
                    return Err(format!(
                        "phi-eps = {} but content difference = {} at {}",
                        phi - eps,
                        content[i - 1] - content[i],
                        whos()
                    ));
                }
                let up = t.crystal_op(i, Direction::Raise);
                if up.is_some() != (eps > 0) {
                    return Err(format!("raising defined != (eps>0) at {}", whos()));
                }
                if let Some(u) = &up {
                    if u.crystal_op(i, Direction::Lower).as_ref() != Some(&t) {
                        return Err(format!("lowering failed to undo raising at {}", whos()));
                    }
                    if u.crystal_stats(i) != (eps - 1, phi + 1) {
                        return Err(format!("statistics did not step by one at {}", whos()));
                    }
                    let uc = u.content();
                    if uc[i - 1] != content[i - 1] + 1 || uc[i] != content[i] - 1 {
                        return Err(format!("raising changed the wrong letters at {}", whos()));
                    }
                }
                let down = t.crystal_op(i, Direction::Lower);
                if down.is_some() != (phi > 0) {
                    return Err(format!("lowering defined != (phi>0) at {}", whos()));
                }
                if let Some(d) = &down {
                    if d.crystal_op(i, Direction::Raise).as_ref() != Some(&t) {
                        return Err(format!("raising failed to undo lowering at {}", whos()));
                    }
                }
                // eps is exactly the number of times raising applies.
                let mut m = 0i64;
                let mut cur = t.clone();
                while let Some(u) = cur.crystal_op(i, Direction::Raise) {
                    cur = u;
                    m += 1;
                    if m > eps {
                        break;
                    }
                }
                if m != eps {
                    return Err(format!("raising applied {m} times but eps={eps} at {}", whos()));
                }
            }
        }
    }
    Ok(())
}

/// The affine-residue operators obey the same partial-inverse and
/// definedness axioms, and raising at residue 0 turns a lowest letter 1
/// into the highest letter n.
fn affine_axioms(n: usize, k: usize, l_max: i64) -> Result<(), String> {
    for l in 0..=l_max {
        for t in tableaux(n, k, l) {
            let (eps, phi) = crystal_stats_mod_n(&t, 0);
            let whos = || format!("n={n} k={k} L={l} tableau\n{t}");
            if eps < 0 || phi < 0 {
                return Err(format!("negative affine statistics at {}", whos()));
            }
            let up = crystal_op_mod_n(&t, 0, Direction::Raise);
            if up.is_some() != (eps > 0) {
                return Err(format!("affine raising defined != (eps>0) at {}", whos()));
            }
            if let Some(u) = &up {
                if crystal_op_mod_n(u, 0, Direction::Lower).as_ref() != Some(&t) {
                    return Err(format!("affine lowering failed to undo raising at {}", whos()));
                }
                let (c0, c1) = (t.content(), u.content());
                if c1[0] != c0[0] - 1 || c1[n - 1] != c0[n - 1] + 1 {
                    return Err(format!("affine raising changed the wrong letters at {}", whos()));
                }
            }
            let down = crystal_op_mod_n(&t, 0, Direction::Lower);
            if down.is_some() != (phi > 0) {
                return Err(format!("affine lowering defined != (phi>0) at {}", whos()));
            }
            if let Some(d) = &down {
                if crystal_op_mod_n(d, 0, Direction::Raise).as_ref() != Some(&t) {
                    return Err(format!("affine raising failed to undo lowering at {}", whos()));
                }
            }
        }
    }
    Ok(())
}

/// Evacuation equals 180-degree rotation on rectangular tableaux, and both
/// are involutions.
fn evacuation_is_rotation(n: usize, k: usize, l_max: i64) -> Result<(), String> {
    for l in 0..=l_max {
        for rect in all_rectangles(n, k, l) {
            let t = rect.to_tableau();
            let ev = t.evacuate();
            let rot = rotate_tableau(&t);
            if ev != rot {
                return Err(format!(
                    "evacuation and rotation disagree at n={n} k={k} L={l}:\n{ev}\nvs\n{rot}"
                ));
            }
            if ev.evacuate() != t {
                return Err(format!("evacuation is not an involution at n={n} k={k} L={l}"));
            }
            if rect.rect_symmetry(SymmetryKind::Rot).to_tableau() != rot {
                return Err(format!(
                    "coordinate-level rotation disagrees with tableau rotation at n={n} k={k} L={l}"
                ));
            }
        }
    }
    Ok(())
}

fn t(n: usize, rows: &[&[u8]]) -> Tableau {
    Tableau::new(n, rows.iter().map(|r| r.to_vec()).collect()).expect("pinned tableau is valid")
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

/// The four pinned worked examples, reproduced byte-exactly.
fn worked_examples(cfg: &VerifyConfig, out: &mut Vec<CheckRecord>) {
    run_check(
        out,
        cfg,
        SUITE,
        "worked-classical-action",
        "worked/classical-action",
        json!({"n": 3}),
        |_| {
            let tab = t(3, &[&[1, 1, 1, 2, 2, 2, 3, 3, 3], &[2, 3, 3, 3]]);
            expect_eq(tab.crystal_stats(2), (3, 1), "statistics at letter pair (2,3)")?;
            expect_eq(
                tab.crystal_op(2, Direction::Raise),
                Some(t(3, &[&[1, 1, 1, 2, 2, 2, 2, 3, 3], &[2, 3, 3, 3]])),
                "raising at 2",
            )?;
            expect_eq(
                tab.crystal_op(2, Direction::Lower),
                Some(t(3, &[&[1, 1, 1, 2, 2, 2, 3, 3, 3], &[3, 3, 3, 3]])),
                "lowering at 2",
            )
        },
    );
    run_check(
        out,
        cfg,
        SUITE,
        "worked-toggle-promotion",
        "worked/toggle-promotion",
        json!({"n": 3}),
        |_| {
            let tab = t(3, &[&[1, 1, 1, 2, 2, 2, 3, 3, 3], &[2, 3, 3, 3]]);
            expect_eq(
                tab.bender_knuth(2),
                t(3, &[&[1, 1, 1, 2, 2, 2, 2, 3, 3], &[2, 2, 3, 3]]),
                "toggle at row 2",
            )?;
            let pr = tab.promote();
            expect_eq(
                pr.clone(),
                t(3, &[&[1, 1, 1, 1, 1, 1, 2, 3, 3], &[2, 2, 3, 3]]),
                "promotion display",
            )?;
            expect_eq(pr, tab.bender_knuth(2).bender_knuth(1), "promotion as toggle product")?;
            let back = tab.bender_knuth(2).bender_knuth(2);
            expect_eq(back, tab, "toggle involution")
        },
    );
    run_check(
        out,
        cfg,
        SUITE,
        "worked-two-row-promotion",
        "worked/two-row-promotion",
        json!({"n": 4}),
        |_| {
            let tab = t(4, &[&[1, 1, 2, 2, 2, 3], &[2, 3, 3, 4, 4, 4]]);
            let expected = t(4, &[&[1, 1, 1, 2, 3, 3], &[2, 3, 3, 4, 4, 4]]);
            expect_eq(tab.promote(), expected, "two-row promotion display")?;
            let r = KRectangle::from_tableau(&tab, 2).map_err(|e| e.to_string())?;
            expect_eq(r.entries().to_vec(), vec![2, 5, 1, 3], "rectangle coordinates")?;
            expect_eq(r.l(), 6, "rectangle column count")
        },
    );
    run_check(
        out,
        cfg,
        SUITE,
        "worked-column-complement",
        "worked/column-complement",
        json!({"k": 4, "n": 7}),
        |_| {
            let b = KRectangle::from_tableau(&t(7, &[&[1], &[3], &[4], &[6]]), 4)
                .map_err(|e| e.to_string())?;
            let v = b.rect_symmetry(SymmetryKind::Refl);
            expect_eq(v.k(), 3, "complement row count")?;
            expect_eq(v.to_tableau(), t(7, &[&[2], &[5], &[7]]), "complemented column")
        },
    );
}
