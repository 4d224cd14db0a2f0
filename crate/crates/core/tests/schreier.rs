mod common;

use common::{closed_form_mismatches, involutive_cyclic_form, naive_order, FINITE_ROWS};
use proptest::prelude::*;
use toric_core::cosets::{group_order, CayleyTable, EnumOptions};
use toric_core::maps::toric_presentation;
use toric_core::presentations::Presentation;
use toric_core::schreier::{
    derive_toric, rewrite_in_subgroup, toric_elimination, RelationEquivalence, ToricDerivation,
};
use toric_core::words::{Alphabet, GenMap, Letter, Word};

fn derive(k: u32, n: u32, m: u32) -> ToricDerivation {
    derive_toric(k, n, m, EnumOptions::default(), 100_000).unwrap()
}

#[test]
fn simplified_presentation_has_same_order() {
    for (k, n, m) in FINITE_ROWS {
        let d = derive(k, n, m);
        let p = &d.simplified.presentation;
        assert_eq!(d.index(), (n * m) as usize);
        assert_eq!(p.gen_count(), n as usize, "({k},{n},{m})");
        let expected = group_order(&toric_presentation(k, n, m).unwrap(), EnumOptions::default());
        assert_eq!(group_order(p, EnumOptions::default()), expected, "({k},{n},{m})");
        assert_eq!(naive_order(p, 100_000), expected);
    }
}

#[test]
fn golden_two_three_four() {
    let golden = include_str!("golden/toric_2_3_4.txt");
    let d = derive(2, 3, 4);
    assert_eq!(d.simplified.presentation.serialize(), golden);

    // Relabeling: the x_i are involutions, so drop inverse signs and compare
    // cyclic words up to rotation and reversal.
    let derived = Presentation::parse(golden).unwrap();
    let toric = toric_presentation(2, 3, 4).unwrap();
    let forms = |p: &Presentation| {
        let mut v: Vec<Vec<usize>> = p.relators.iter().map(involutive_cyclic_form).collect();
        v.sort();
        v
    };
    assert_eq!(forms(&derived), forms(&toric));
}

#[test]
fn transversal_is_u_t_grid() {
    let d = derive(2, 3, 4);
    assert!(d.transversal.is_schreier(&d.table));
    let a = &d.parent.alphabet;
    let mut reps: Vec<String> = d.transversal.reps.iter().map(|w| a.render(w)).collect();
    reps.sort();
    let mut expected = Vec::new();
    for i in 0..4 {
        for j in 0..3 {
            let w = Word::gen_pow(2, i).concat(&Word::gen_pow(1, j));
            expected.push(a.render(&w));
        }
    }
    expected.sort();
    assert_eq!(reps, expected);
}

#[test]
fn closed_forms_agree_with_rewriting() {
    for (k, n, m) in [(2, 3, 4), (3, 2, 3), (2, 3, 5)] {
        let (checked, mismatches) = closed_form_mismatches(k, n, m);
        assert_eq!(mismatches, 0, "({k},{n},{m})");
        assert_eq!(checked, (m * (2 * n - 1)) as usize);
    }
}

#[test]
fn elimination_values_agree_with_rewriting() {
    for (k, n, m) in [(2, 3, 4), (3, 2, 3), (2, 3, 5), (4, 2, 3)] {
        let d = derive(k, n, m);
        let parent =
            CayleyTable::new(toric_core::cosets::todd_coxeter(&d.parent, &[], EnumOptions::default()).unwrap())
                .unwrap();
        let el = toric_elimination(&d.rs, &d.table, &d.transversal, n as usize, m as usize).unwrap();
        let s_values: Vec<Word> = (0..n as usize)
            .map(|j| {
                d.rs.generators[d.rs.index_of(&format!("s_0_{j}")).unwrap()]
                    .value
                    .clone()
            })
            .collect();
        let to_parent = GenMap::new(
            Alphabet::numbered("s", 0, n as usize),
            d.parent.alphabet.clone(),
            s_values,
        )
        .unwrap();
        for (g, v) in el.values.iter().enumerate() {
            let lhs = parent.element(&to_parent.apply(v).unwrap());
            assert_eq!(
                lhs,
                parent.element(&d.rs.generators[g].value),
                "{}",
                d.rs.generators[g].name
            );
        }
        assert_eq!(el.residual.len(), n as usize);
        for r in &el.residual {
            assert_eq!(parent.element(&to_parent.apply(r).unwrap()), parent.identity());
        }
    }
}

#[test]
fn chain_and_conjugation_relations_are_equivalent() {
    for (n, m) in [(2, 3), (3, 4), (3, 5), (2, 7), (4, 5), (5, 7)] {
        let eq = RelationEquivalence::new(n, m);
        assert_eq!(eq.verify().unwrap(), 2 * n - 1, "({n},{m})");
    }
}

static DERIVED: std::sync::LazyLock<(ToricDerivation, CayleyTable)> = std::sync::LazyLock::new(|| {
    let d = derive(3, 2, 3);
    let t =
        CayleyTable::new(toric_core::cosets::todd_coxeter(&d.parent, &[], EnumOptions::default()).unwrap()).unwrap();
    (d, t)
});

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rewriting_preserves_elements(v in prop::collection::vec((0usize..3, any::<bool>()), 0..20)) {
        let (d, parent) = &*DERIVED;
        let w: Word = v.into_iter().map(|(g, i)| Letter::new(g, i)).collect();
        let coset = d.table.act(0, &w);
        let h = w.concat(&d.transversal.reps[coset].inverse());
        let rewritten = rewrite_in_subgroup(&d.rs, &d.table, &h).expect("h lies in the subgroup");
        let values: Vec<Word> = d.rs.generators.iter().map(|g| g.value.clone()).collect();
        let back = GenMap::new(d.rs.presentation.alphabet.clone(), d.parent.alphabet.clone(), values).unwrap();
        prop_assert_eq!(parent.element(&back.apply(&rewritten).unwrap()), parent.element(&h));
    }
}
