//! One line per acceptance criterion, then a single assertion over all of
//! them. Run with `--nocapture` to see the report.

mod common;

use std::time::Instant;

use common::{bytes_to_word, closed_form_mismatches, involutive_cyclic_form, naive_order, FINITE_ROWS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_core::cli::{cmd_classify, cmd_sweep, sweep_grid, Invariants, RunConfig};
use toric_core::cosets::{group_order, normal_closure, todd_coxeter, CayleyTable, EnumOptions};
use toric_core::coxeter::CoxeterSystem;
use toric_core::garside::{bezout_pair, gnf, gnf_equal, meridian, relator_insertion_trials, sigma, NormalForm};
use toric_core::maps::{
    build_phi, central_element, check_hom, exact_sequence, finite_toric, phi_psi_fixes, toric_presentation,
};
use toric_core::presentations::{build, Family, FamilyParams, Presentation};
use toric_core::reps::{build_preset, unfaithfulness_witness, QrPreset};
use toric_core::schreier::derive_toric;
use toric_core::words::{Letter, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pres(family: Family, params: &[u32]) -> Presentation {
    build(&FamilyParams::new(family, params).unwrap()).unwrap()
}

fn cayley(p: &Presentation) -> CayleyTable {
    CayleyTable::from_presentation(p, EnumOptions::default()).unwrap()
}

// Orders first produced by the naive enumerator in tests/common.
const ORDERS: [usize; 10] = [48, 240, 24, 96, 600, 360, 6, 10, 14, 18];

fn finiteness_table() -> Outcome {
    for ((k, n, m), expected) in FINITE_ROWS.into_iter().zip(ORDERS) {
        let p = toric_presentation(k, n, m).unwrap();
        let got = group_order(&p, EnumOptions::default());
        let oracle = naive_order(&p, 100_000);
        ensure(got == Some(expected) && oracle == Some(expected), || {
            format!("({k},{n},{m}): enumeration {got:?}, oracle {oracle:?}, frozen {expected}")
        })?;
    }
    for (k, n, m) in [(6, 2, 3), (2, 3, 7), (3, 4, 5)] {
        let t = todd_coxeter(
            &toric_presentation(k, n, m).unwrap(),
            &[],
            EnumOptions::bounded(100_000),
        )
        .unwrap();
        ensure(!t.is_complete(), || format!("({k},{n},{m}) did not overflow at 10^5"))?;
    }
    Ok("10 finite rows match the oracle; 3 infinite cases overflow at 10^5".into())
}

fn index_law() -> Outcome {
    for (a, b, c) in [(2, 3, 3), (2, 3, 4), (2, 3, 5)] {
        let nc = normal_closure(
            &pres(Family::JParent, &[a, b, c]),
            &[Word::gen(0)],
            EnumOptions::default(),
            32,
        )
        .map_err(|e| e.to_string())?;
        ensure(nc.table.rows() == (b * c) as usize, || {
            format!("({a},{b},{c}): index {} != {}", nc.table.rows(), b * c)
        })?;
    }
    Ok("indices 9, 12, 15".into())
}

fn rs_round_trip() -> Outcome {
    for (k, n, m) in FINITE_ROWS {
        let d = derive_toric(k, n, m, EnumOptions::default(), 100_000).map_err(|e| e.to_string())?;
        let p = &d.simplified.presentation;
        let order = group_order(p, EnumOptions::default());
        let expected = group_order(&toric_presentation(k, n, m).unwrap(), EnumOptions::default());
        ensure(p.gen_count() == n as usize && order == expected, || {
            format!(
                "({k},{n},{m}): {} generators, order {order:?} vs {expected:?}",
                p.gen_count()
            )
        })?;
    }
    let golden = include_str!("golden/toric_2_3_4.txt");
    let d = derive_toric(2, 3, 4, EnumOptions::default(), 100_000).unwrap();
    ensure(d.simplified.presentation.serialize() == golden, || {
        "golden file differs".into()
    })?;
    let forms = |p: &Presentation| {
        let mut v: Vec<Vec<usize>> = p.relators.iter().map(involutive_cyclic_form).collect();
        v.sort();
        v
    };
    ensure(
        forms(&d.simplified.presentation) == forms(&toric_presentation(2, 3, 4).unwrap()),
        || "(2,3,4) relators differ from the toric presentation after relabeling".into(),
    )?;
    Ok("all finite rows; (2,3,4) golden matches".into())
}

fn closed_forms() -> Outcome {
    let mut total = 0;
    for (k, n, m) in [(2, 3, 4), (3, 2, 3), (2, 3, 5)] {
        let (checked, mismatches) = closed_form_mismatches(k, n, m);
        ensure(mismatches == 0, || format!("({k},{n},{m}): {mismatches} mismatches"))?;
        total += checked;
    }
    Ok(format!("{total} generators, 0 mismatches"))
}

fn reflection_classes() -> Outcome {
    for (k, n, m) in FINITE_ROWS {
        let ct = cayley(&toric_presentation(k, n, m).unwrap());
        let count = ct.reflection_class_count(&(0..n as usize).collect::<Vec<_>>());
        ensure(count == (k - 1) as usize, || format!("({k},{n},{m}): {count} classes"))?;
    }
    let parent = cayley(&pres(Family::JParent, &[2, 3, 3]));
    let count = parent.reflection_class_count(&[0, 1, 2]);
    ensure(count == 5, || format!("J(2,3,3) parent: {count} classes"))?;
    Ok("k-1 for every finite row; 5 for the (2,3,3) parent".into())
}

fn coxeter_equivalence() -> Outcome {
    for (k, n, m) in [(3, 2, 3), (2, 2, 5)] {
        let sys = CoxeterSystem::triangle(k, n, m).unwrap();
        let ct = cayley(&pres(Family::CoxeterTriangle, &[k, n, m]));
        let nfs: Vec<Word> = (0..ct.order()).map(|g| sys.nf(ct.representative(g)).unwrap()).collect();
        for a in 0..ct.order() {
            for b in 0..ct.order() {
                ensure((nfs[a] == nfs[b]) == (a == b), || {
                    format!("({k},{n},{m}): pair {a},{b}")
                })?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (k, n, m) in [(4, 2, 3), (2, 3, 5)] {
        let sys = CoxeterSystem::triangle(k, n, m).unwrap();
        let ct = cayley(&pres(Family::CoxeterTriangle, &[k, n, m]));
        for _ in 0..10_000 {
            let u = Word::product_of((0..rng.gen_range(0..12)).map(|_| rng.gen_range(0..3)));
            let v = if rng.gen_bool(0.5) {
                ct.representative(ct.element(&u)).clone()
            } else {
                Word::product_of((0..rng.gen_range(0..12)).map(|_| rng.gen_range(0..3)))
            };
            let same = ct.element(&u) == ct.element(&v);
            ensure(sys.equal(&u, &v).unwrap() == same, || {
                format!("({k},{n},{m}): {u:?} vs {v:?}")
            })?;
        }
    }
    for (k, n, m) in [
        (3, 2, 3),
        (2, 2, 5),
        (4, 2, 3),
        (2, 3, 5),
        (2, 3, 7),
        (6, 2, 3),
        (3, 4, 5),
    ] {
        let sys = CoxeterSystem::triangle(k, n, m).unwrap();
        let order = sys.element_order(&Word::product_of([0, 2]), 50).unwrap();
        ensure(order == Some(m as usize), || {
            format!("({k},{n},{m}): order of r1 r3 is {order:?}")
        })?;
    }
    Ok("all pairs for (3,2,3), (2,2,5); 10^4 random pairs each for (4,2,3), (2,3,5); r1 r3 has order m".into())
}

fn homomorphisms() -> Outcome {
    let sweep = FINITE_ROWS.into_iter().chain([(6, 2, 3), (2, 3, 7), (4, 2, 5)]);
    let mut count = 0;
    for (k, n, m) in sweep {
        let phi = build_phi(k, n, m).unwrap();
        let v = check_hom(&phi).map_err(|e| e.to_string())?;
        ensure(v.passed, || format!("({k},{n},{m}): {:?}", v.failing))?;
        let c = phi.apply(&central_element(n, m).unwrap()).unwrap();
        ensure(phi.target.is_identity(&c).unwrap(), || {
            format!("({k},{n},{m}): phi(c) != 1")
        })?;
        ensure(phi_psi_fixes(k, n, m).unwrap() == [true, true], || {
            format!("({k},{n},{m}): phi psi")
        })?;
        count += 1;
    }
    // |W+| in the order G4, G8, G12, G16, G20, G22, I2(m)
    let table2 = [
        ((3, 2, 3), 12),
        ((4, 2, 3), 24),
        ((2, 3, 4), 24),
        ((5, 2, 3), 60),
        ((3, 2, 5), 60),
        ((2, 3, 5), 60),
    ];
    let dihedral = [3, 5, 7, 9].map(|m| ((2, 2, m), 2 * m as usize));
    for ((k, n, m), w_plus) in table2.into_iter().chain(dihedral) {
        let r = exact_sequence(k, n, m, EnumOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.holds() && r.w_plus_order == w_plus, || {
            format!("({k},{n},{m}): {r:?}")
        })?;
        ensure(finite_toric(k, n, m).unwrap().w_plus_order == w_plus as u64, || {
            format!("({k},{n},{m}) row")
        })?;
    }
    Ok(format!(
        "phi checked on {count} triples; exact sequence on 10 finite rows"
    ))
}

fn representations() -> Outcome {
    for (a, b, c) in [(2, 3, 3), (2, 3, 4), (2, 3, 5), (6, 2, 3), (2, 3, 7), (3, 4, 5)] {
        for preset in [QrPreset::Canonical, QrPreset::Alternate] {
            let rep = build_preset(a, b, c, preset).map_err(|e| e.to_string())?;
            let r = rep.verify_relations().map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("({a},{b},{c}) {preset}: {r:?}"))?;
        }
    }
    let w = unfaithfulness_witness().map_err(|e| e.to_string())?;
    ensure(
        w.rho_x1x2_cubed_identity.len() == 2 && w.rho_x1x2_cubed_identity.iter().all(|p| p.1),
        || format!("rho((x1 x2)^3): {:?}", w.rho_x1x2_cubed_identity),
    )?;
    ensure(w.order_x1x2_in_w323 == 6, || format!("order {}", w.order_x1x2_in_w323))?;
    ensure(w.rho_stu_is_minus_identity, || format!("rho(stu) = {}", w.rho_stu))?;
    ensure(
        w.commuting == [("zero".to_string(), true), ("unit".to_string(), false)],
        || format!("commuting: {:?}", w.commuting),
    )?;
    Ok("relations exact; (x1 x2)^3 -> Id under both presets, order 6 in W(3,2,3), rho(stu) = -Id".into())
}

fn garside() -> Outcome {
    for (n, m) in [(2, 3), (3, 4), (2, 5), (3, 5)] {
        let r = relator_insertion_trials(n, m, 1000, 0).map_err(|e| e.to_string())?;
        ensure(r.changes == 0, || format!("({n},{m}): {} changes", r.changes))?;
        let delta = NormalForm {
            infimum: 1,
            factors: vec![],
        };
        ensure(
            gnf(n, m, &Word::gen_pow(0, n as i64)).unwrap() == delta
                && gnf(n, m, &Word::gen_pow(1, m as i64)).unwrap() == delta,
            || format!("({n},{m}): gnf of x^n or y^m"),
        )?;
        let d = Word::gen_pow(0, n as i64);
        for g in [Word::gen(0), Word::gen(1)] {
            ensure(gnf_equal(n, m, &d.concat(&g), &g.concat(&d)).unwrap(), || {
                format!("({n},{m}): centrality")
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut violations = 0;
    for (k, n, m) in FINITE_ROWS {
        let ct = cayley(&toric_presentation(k, n, m).unwrap());
        let s = sigma(n, m).unwrap();
        for _ in 0..200 {
            let u: Vec<u8> = (0..rng.gen_range(0..12)).map(|_| rng.gen_range(0..2)).collect();
            let v: Vec<u8> = (0..rng.gen_range(0..12)).map(|_| rng.gen_range(0..2)).collect();
            let (u, mut v) = (bytes_to_word(&u), bytes_to_word(&v));
            if rng.gen_bool(0.5) {
                // same element of G(n, m), spelled differently
                v = u
                    .concat(&Word::gen_pow(0, n as i64))
                    .concat(&Word::gen_pow(1, -(m as i64)));
            }
            if gnf_equal(n, m, &u, &v).unwrap()
                && ct.element(&s.apply(&u).unwrap()) != ct.element(&s.apply(&v).unwrap())
            {
                violations += 1;
            }
        }
        let (a, b) = bezout_pair(n, m).unwrap();
        let image = ct.element(&s.apply(&meridian(n, m, a, b).unwrap()).unwrap());
        let classes = ct.conjugacy_classes();
        let x1 = ct.element(&Word::from(vec![Letter::new(0, false)]));
        ensure(
            classes[image] == classes[x1] || classes[image] == classes[ct.inverse(x1)],
            || format!("({k},{n},{m}): meridian not conjugate to x1^(+-1)"),
        )?;
    }
    ensure(violations == 0, || format!("{violations} quotient violations"))?;
    Ok("4000 trials, 0 changes; quotients and meridians consistent".into())
}

fn classification() -> Outcome {
    // each row is a cmd_classify report; the sweep runs them in parallel
    let env = cmd_sweep(6, 7, &RunConfig::default()).map_err(|e| e.to_string())?;
    let rows = env.result["rows"].as_array().ok_or("no rows")?;
    let grid = sweep_grid(6, 7);
    ensure(rows.len() == grid.len(), || {
        format!("{} rows for {} triples", rows.len(), grid.len())
    })?;
    let mut seen: std::collections::HashMap<Invariants, (u32, u32, u32)> = Default::default();
    for ((k, n, m), row) in grid.into_iter().zip(rows) {
        ensure(row["k"] == k && row["n"] == n && row["m"] == m, || {
            format!("row order at ({k},{n},{m})")
        })?;
        let inv: Invariants = serde_json::from_value(row["invariants"].clone()).map_err(|e| e.to_string())?;
        ensure(inv.k == k, || format!("({k},{n},{m}): extracted k = {}", inv.k))?;
        if let Some(prev) = seen.insert(inv, (k, n, m)) {
            return Err(format!("{prev:?} and ({k},{n},{m}) share invariants"));
        }
    }
    let single = cmd_classify(6, 2, 3, &RunConfig::default()).map_err(|e| e.to_string())?;
    ensure(
        single.result["invariants"]["parabolic_orders"] == serde_json::json!([2, 3, 6]),
        || format!("(6,2,3): {}", single.result["invariants"]),
    )?;
    Ok(format!("{} triples, all invariant tuples distinct", rows.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("finiteness table", finiteness_table),
        ("index law", index_law),
        ("RS round trip", rs_round_trip),
        ("closed forms", closed_forms),
        ("reflection classes", reflection_classes),
        ("coxeter oracle equivalence", coxeter_equivalence),
        ("homomorphisms", homomorphisms),
        ("representation", representations),
        ("garside", garside),
        ("classification invariants", classification),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
