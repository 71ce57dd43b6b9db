mod common;

use common::{oracle_count, small_library};
use knotcolor::coloring::{
    color_backtrack, color_braid, color_brute, count_pinned, decode_model, encode_cnf, sat_decide,
    Budget, Mode, SatResult,
};
use knotcolor::fixtures::fixtures;
use knotcolor::knotio::{braid_to_diagram, BraidWord};
use knotcolor::{check_coloring, colorable, count_colorings, dihedral};
use proptest::prelude::*;

#[test]
fn engines_match_the_oracle_on_fixtures() {
    let library = small_library(6);
    let budget = Budget::default();
    for f in fixtures()
        .iter()
        .filter(|f| f.diagram.crossing_count() <= 8)
    {
        for q in &library {
            let k = &f.diagram;
            let expected = oracle_count(k, &q.table());
            let ctx = format!("{} / {}", f.name, q.label());
            assert_eq!(
                color_brute(k, q, Mode::Count, &budget).unwrap().count(),
                Some(expected),
                "{ctx}"
            );
            assert_eq!(
                color_backtrack(k, q, Mode::Count, &budget).unwrap().count(),
                Some(expected),
                "{ctx}"
            );
            assert_eq!(count_colorings(k, q), expected, "{ctx}");
            assert_eq!(colorable(k, q), expected > 0, "{ctx}");
            if let Some(b) = &f.braid {
                assert_eq!(
                    color_braid(b, q, Mode::Count, &budget).unwrap().count(),
                    Some(expected),
                    "{ctx}"
                );
            }
        }
    }
}

#[test]
fn sat_models_decode_to_colorings() {
    let library = small_library(6);
    for f in fixtures().iter().filter(|f| f.diagram.crossing_count() > 0) {
        for q in &library {
            let inst = encode_cnf(&f.diagram, q, false, true).unwrap();
            if let SatResult::Sat(model) = sat_decide(&inst) {
                let c = decode_model(&model, f.diagram.arc_count(), q.size());
                assert!(c.is_nontrivial());
                assert_eq!(
                    check_coloring(&f.diagram, q, &c),
                    Ok(()),
                    "{} / {}",
                    f.name,
                    q.label()
                );
            }
        }
    }
}

#[test]
fn pinned_count_times_size() {
    let trefoil = knotcolor::fixtures::fixture("trefoil-gauss")
        .unwrap()
        .diagram;
    let d3 = dihedral(3).unwrap();
    assert_eq!(
        count_pinned(&trefoil, &d3, &Budget::default()).unwrap() * 3,
        6
    );
}

fn knot_braids() -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let letter = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
            (Just(n), prop::collection::vec(letter, 1..=7))
        })
        .prop_filter_map("closure must be a knot", |(n, letters)| {
            BraidWord::new(n, letters).ok().filter(|b| b.is_knot())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_braids_all_engines_agree(b in knot_braids(), qi in 0usize..4) {
        let quandles = [dihedral(3).unwrap(), dihedral(5).unwrap(), knotcolor::affine(5, 2).unwrap(), knotcolor::quandle::trivial(3).unwrap()];
        let q = &quandles[qi];
        let k = braid_to_diagram(&b).unwrap();
        let budget = Budget::default();
        let expected = oracle_count(&k, &q.table());
        prop_assert_eq!(color_brute(&k, q, Mode::Count, &budget).unwrap().count(), Some(expected));
        prop_assert_eq!(color_backtrack(&k, q, Mode::Count, &budget).unwrap().count(), Some(expected));
        prop_assert_eq!(color_braid(&b, q, Mode::Count, &budget).unwrap().count(), Some(expected));
        prop_assert_eq!(count_colorings(&k, q), expected);
        prop_assert_eq!(colorable(&k, q), expected > 0);
        prop_assert_eq!(color_brute(&k, q, Mode::Decide, &budget).unwrap().is_colorable(), expected > 0);
        prop_assert_eq!(color_braid(&b, q, Mode::Decide, &budget).unwrap().is_colorable(), expected > 0);
    }
}
