//! Acceptance checks, one line per criterion. Exits nonzero when any fails.

mod common;

use std::time::{Duration, Instant};

use common::{bounded_sum_vectors, macaulay_functions, odometer};
use postulation::binomial::{macaulay_expand, upper};
use postulation::character::{
    biliaison, curve_invariants, gamma_from_h, gamma_from_resolution, h_from_gamma,
    hypersurface_char, is_positive_character, resolution_char, s0_in_codim, s1_general, Character,
    CurveInvariants,
};
use postulation::codim3::{check_prop36_bounds, decompose_codim3, s1_via_cor37};
use postulation::enumerate::{dg_from_components, enumerate_acm_curves, DgTable, REFERENCE_PAIRS};
use postulation::growth::{decompose, is_macaulay, Decomposition, MacaulayFn};
use postulation::intfun::IntFun;
use postulation::lex::lex_oracle;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ch(values: &[i64]) -> Character {
    Character::from_values(values.to_vec()).unwrap()
}

fn expansion_exactness() -> Outcome {
    let terms = macaulay_expand(25, 3).map_err(|e| e.to_string())?;
    if terms.terms() != [(6, 3), (3, 2), (2, 1)] {
        return Err(format!("expansion of 25 in degree 3 is {terms}"));
    }
    let value = upper(25, 3).map_err(|e| e.to_string())?;
    if value != 41 {
        return Err(format!(
            "expansion {terms} ok, but upper(25,3) = {value}, expected 41"
        ));
    }
    Ok(format!("25 = {terms}, upper = {value}"))
}

fn degree_ten_table(table: &DgTable, elapsed: Duration) -> Outcome {
    if elapsed >= Duration::from_secs(10) {
        return Err(format!("enumeration took {elapsed:?}"));
    }
    let missing = table.missing_reference();
    if !missing.is_empty() {
        return Err(format!("missing reference pairs {missing:?}"));
    }
    let json = table.to_json();
    let listed: Vec<(i64, i64)> = json["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["d"].as_i64().unwrap(), p["g"].as_i64().unwrap()))
        .collect();
    if listed != REFERENCE_PAIRS {
        return Err(format!("main section lists {listed:?}"));
    }
    let beyond = table.beyond_reference();
    for entry in &beyond {
        for w in &entry.witnesses {
            let gamma = w.recompose();
            let h = h_from_gamma(&gamma).map_err(|e| e.to_string())?;
            let lex = lex_oracle(&h).map_err(|e| e.to_string())?;
            let valid = w.validate().is_ok()
                && decompose_codim3(&gamma).as_ref() == Ok(w)
                && check_prop36_bounds(&gamma, w);
            if !(is_macaulay(&h) && lex && valid) {
                return Err(format!(
                    "witness {gamma} of ({}, {}) fails validation",
                    entry.d, entry.g
                ));
            }
        }
    }
    let extra: Vec<String> = beyond
        .iter()
        .map(|e| format!("({}, {})", e.d, e.g))
        .collect();
    Ok(format!(
        "27 reference pairs present, extra {} validated, {elapsed:.2?}",
        extra.join(" ")
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for h1 in 0..=3 {
        for tail in odometer(4, 0, 12) {
            let mut values = vec![1, h1];
            values.extend(tail);
            let h = IntFun::from_values(values);
            let lex = lex_oracle(&h).map_err(|e| format!("{h}: {e}"))?;
            if lex != is_macaulay(&h) {
                return Err(format!("disagreement on {h}: lex {lex}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} functions, zero disagreements"))
}

/// True when replacing one part breaks validation or recomposition.
fn perturbation_breaks(dec: &Decomposition, h: &IntFun, idx: usize, n: i64, delta: i64) -> bool {
    let part = dec.parts()[idx].function();
    let changed = part + &IntFun::new(n, vec![delta]);
    let Ok(changed) = MacaulayFn::new(changed) else {
        return true;
    };
    let mut parts = dec.parts().to_vec();
    parts[idx] = changed;
    let broken = Decomposition::from_parts(dec.type_a(), parts);
    broken.validate().is_err() || &broken.recompose() != h
}

fn decomposition_soundness() -> Outcome {
    let all = macaulay_functions(3, 12);
    for h in &all {
        let m = MacaulayFn::new(h.clone()).map_err(|e| e.to_string())?;
        let dec = decompose(&m).map_err(|e| format!("{h}: {e}"))?;
        dec.validate().map_err(|e| format!("{h}: {e}"))?;
        if &dec.recompose() != h {
            return Err(format!("{h} recomposes to {}", dec.recompose()));
        }
        if m.s0().map_err(|e| e.to_string())? != dec.r() + 1 {
            return Err(format!("{h}: s0 != r + 1"));
        }
        for (idx, part) in dec.parts().iter().enumerate() {
            for n in 0..=part.sup() + 1 {
                for delta in [-1, 1] {
                    if !perturbation_breaks(&dec, h, idx, n, delta) {
                        return Err(format!(
                            "{h}: part {idx} perturbed by {delta} at {n} survives"
                        ));
                    }
                }
            }
        }
    }
    Ok(format!("{} type 3 functions", all.len()))
}

fn named_invariants() -> Outcome {
    let cases = [
        (vec![-1, -2, -1, 4], (8, 4)),
        (vec![-1, -2, -2, 5], (9, 5)),
        (vec![-1, -2, -3, 6], (10, 6)),
    ];
    for (values, (d, g)) in cases {
        let got = curve_invariants(&ch(&values)).map_err(|e| e.to_string())?;
        if got != (CurveInvariants { d, g }) {
            return Err(format!("{values:?} gives {got}"));
        }
    }
    Ok("(8,4) (9,5) (10,6)".into())
}

fn component_bookkeeping(table: &DgTable) -> Outcome {
    let mut count = 0;
    for entry in table.entries() {
        for w in &entry.witnesses {
            let direct = curve_invariants(&w.recompose()).map_err(|e| e.to_string())?;
            let parts = dg_from_components(w).map_err(|e| e.to_string())?;
            if direct != parts
                || direct
                    != (CurveInvariants {
                        d: entry.d,
                        g: entry.g,
                    })
            {
                return Err(format!("{}: {direct} vs {parts}", w.recompose()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} witnesses"))
}

fn random_character(rng: &mut StdRng) -> Character {
    let len = rng.gen_range(1..=8);
    let mut values: Vec<i64> = (0..len).map(|_| rng.gen_range(-6..=6)).collect();
    values.push(-values.iter().sum::<i64>());
    let offset = rng.gen_range(-2..=3);
    Character::new(IntFun::new(offset, values)).unwrap()
}

fn conversions_and_biliaison() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let h = IntFun::from_values(
            (0..rng.gen_range(1..=9))
                .map(|_| rng.gen_range(0..=12))
                .collect::<Vec<_>>(),
        );
        let from_h = gamma_from_h(&h);
        if h_from_gamma(&from_h).as_ref() != Ok(&h) {
            return Err(format!("h -> gamma -> h fails on {h}"));
        }
        let back = h_from_gamma(&from_h).map(|h| gamma_from_h(&h));
        if back.as_ref() != Ok(&from_h) {
            return Err(format!("gamma -> h -> gamma fails on {from_h}"));
        }
        let gamma = random_character(&mut rng);
        let codim = rng.gen_range(2..=5);
        let r = resolution_char(&gamma, codim).map_err(|e| e.to_string())?;
        if gamma_from_resolution(&r, codim).as_ref() != Ok(&gamma) {
            return Err(format!(
                "resolution roundtrip fails on {gamma} in codim {codim}"
            ));
        }
        let y = random_character(&mut rng);
        let back = biliaison(&biliaison(&gamma, &y, 1), &y, -1);
        if back != gamma {
            return Err(format!("biliaison up and down moves {gamma} to {back}"));
        }
    }
    for s in 1..=6 {
        let y = hypersurface_char(s).map_err(|e| e.to_string())?;
        for x in [ch(&[-1, 1]), ch(&[-1, -1, 2]), ch(&[-1, 0, 0, 1])] {
            let jump = biliaison(&x, &y, 1).function() - &x.function().shift(-1);
            if jump != IntFun::new(0, vec![-1]) + IntFun::new(s, vec![1]) {
                return Err(format!("jump for s = {s} on {x} is {jump}"));
            }
        }
    }
    Ok("1000 random characters, jump pattern for s = 1..6".into())
}

fn s1_consistency(table: &DgTable) -> Outcome {
    let mut count = 0;
    for entry in table.entries() {
        for w in &entry.witnesses {
            let gamma = w.recompose();
            let s0 = s0_in_codim(&gamma, 3).map_err(|e| e.to_string())?;
            let scan = s1_general(&gamma, 3).map_err(|e| e.to_string())?;
            if s1_via_cor37(w, s0) != scan {
                return Err(format!(
                    "{gamma}: last part gives {}, scan gives {scan}",
                    s1_via_cor37(w, s0)
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} characters"))
}

fn positivity_agrees(gamma: &Character) -> std::result::Result<(), String> {
    let positive = is_positive_character(gamma) && gamma.s0() >= 2;
    let type_two = h_from_gamma(gamma).is_ok_and(|h| is_macaulay(&h) && h.at(1) == 2);
    if positive == type_two {
        Ok(())
    } else {
        Err(format!("{gamma}: positive {positive}, type 2 {type_two}"))
    }
}

fn positivity_equivalence() -> Outcome {
    let mut count = 0;
    // Nonnegative h with h(0) = 1 and total at most 10.
    for tail in bounded_sum_vectors(10, 9) {
        let mut values = vec![1];
        values.extend(tail);
        positivity_agrees(&gamma_from_h(&IntFun::from_values(values)))?;
        count += 1;
    }
    // Every character supported in [0, 4] with entries in [-10, 10].
    for head in odometer(4, -10, 10) {
        let last = -head.iter().sum::<i64>();
        if !(-10..=10).contains(&last) {
            continue;
        }
        let mut values = head;
        values.push(last);
        let gamma = Character::from_values(values).unwrap();
        if gamma.degree() <= 10 {
            positivity_agrees(&gamma)?;
            count += 1;
        }
    }
    Ok(format!("{count} characters, zero disagreements"))
}

fn main() {
    let started = Instant::now();
    let table = enumerate_acm_curves(10, true);
    let elapsed = started.elapsed();

    let table_outcome = |f: &dyn Fn(&DgTable) -> Outcome| match &table {
        Ok(t) => f(t),
        Err(e) => Err(format!("enumeration failed: {e}")),
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("expansion exactness", expansion_exactness()),
        (
            "degree <= 10 (d, g) table",
            table_outcome(&|t| degree_ten_table(t, elapsed)),
        ),
        ("growth bound vs lex segments", oracle_equivalence()),
        ("decomposition soundness", decomposition_soundness()),
        ("named character invariants", named_invariants()),
        (
            "component invariants vs direct",
            table_outcome(&component_bookkeeping),
        ),
        ("conversions and biliaison", conversions_and_biliaison()),
        ("s1 from last part vs scan", table_outcome(&s1_consistency)),
        ("positivity vs type 2 growth", positivity_equivalence()),
    ];

    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("[PASS] {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} passed, {failed} failed in {:.2?}",
        results.len() - failed,
        started.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
