mod common;

use common::{oracle_count, small_library};
use knotcolor::fixtures::{fixtures, presentations};
use knotcolor::knotio::{braid_to_diagram, parse_braid, BraidWord};
use knotcolor::{alexander_polynomial, count_colorings, dihedral};
use proptest::prelude::*;

#[test]
fn counts_agree_across_presentations() {
    let library = small_library(6);
    for knot_type in ["0_1", "3_1", "4_1", "5_1"] {
        let group = presentations(knot_type);
        assert!(group.len() >= 2);
        for q in &library {
            let counts: Vec<u64> = group
                .iter()
                .map(|f| count_colorings(&f.diagram, q))
                .collect();
            assert!(
                counts.windows(2).all(|w| w[0] == w[1]),
                "{knot_type} / {}: {counts:?}",
                q.label()
            );
        }
    }
}

#[test]
fn alexander_agrees_across_presentations() {
    let all = fixtures();
    for f in &all {
        for g in all.iter().filter(|g| g.knot_type == f.knot_type) {
            assert_eq!(
                alexander_polynomial(&f.diagram),
                alexander_polynomial(&g.diagram),
                "{} vs {}",
                f.name,
                g.name
            );
        }
    }
}

#[test]
fn distinct_types_have_distinct_invariants() {
    let reps = [
        "unknot",
        "trefoil-gauss",
        "figure-eight-braid",
        "torus-2-5",
        "three-twist",
        "stevedore",
        "knot-6-2",
        "knot-6-3",
        "torus-2-7",
        "torus-3-4",
    ];
    let polys: Vec<_> = reps
        .iter()
        .map(|n| alexander_polynomial(&knotcolor::fixtures::fixture(n).unwrap().diagram))
        .collect();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            assert_ne!(polys[i], polys[j], "{} vs {}", reps[i], reps[j]);
        }
    }
}

fn moved(b: &BraidWord, moves: &[(u8, usize)]) -> BraidWord {
    let mut b = b.clone();
    for &(kind, arg) in moves {
        b = match kind % 4 {
            0 => b
                .insert_r2(1 + arg % (b.strands() - 1), arg % (b.len() + 1))
                .unwrap(),
            1 => b.rotate(arg),
            2 if b.strands() < 5 => b.markov_stabilize(),
            _ => b.mirror().mirror(),
        };
    }
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn braid_moves_preserve_invariants(
        start in prop::sample::select(vec!["2: 1 1 1", "3: 1 -2 1 -2", "2: 1 1 1 1 1", "3: 1 2"]),
        moves in prop::collection::vec((any::<u8>(), 0usize..16), 0..4),
    ) {
        let b = parse_braid(start).unwrap();
        let m = moved(&b, &moves);
        let (k, km) = (braid_to_diagram(&b).unwrap(), braid_to_diagram(&m).unwrap());
        prop_assert_eq!(alexander_polynomial(&k), alexander_polynomial(&km));
        for n in [3usize, 5] {
            let d = dihedral(n).unwrap();
            prop_assert_eq!(count_colorings(&k, &d), count_colorings(&km, &d));
        }
    }

}

#[test]
fn involutory_counts_ignore_signs() {
    for f in fixtures() {
        let flipped = f.diagram.flip_signs();
        for n in [3usize, 5, 7] {
            let table = common::dihedral_table(n);
            assert_eq!(
                oracle_count(&f.diagram, &table),
                oracle_count(&flipped, &table),
                "{}",
                f.name
            );
            let d = dihedral(n).unwrap();
            assert_eq!(
                count_colorings(&f.diagram, &d),
                count_colorings(&flipped, &d),
                "{}",
                f.name
            );
        }
    }
}
