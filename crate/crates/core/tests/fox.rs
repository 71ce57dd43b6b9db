mod common;

use common::{dihedral_table, oracle_count};
use knotcolor::fixtures::fixtures;
use knotcolor::knotio::{braid_to_diagram, torus_braid};
use knotcolor::{colorable, count_colorings, dihedral, fox_colorable, fox_count, knot_determinant};

#[test]
fn fox_counts_match_the_oracle() {
    for f in fixtures()
        .iter()
        .filter(|f| f.diagram.crossing_count() <= 7)
    {
        for n in 2..=7usize {
            let expected = oracle_count(&f.diagram, &dihedral_table(n));
            assert_eq!(
                fox_count(&f.diagram, n as u64),
                expected as u128,
                "{} mod {n}",
                f.name
            );
        }
    }
}

#[test]
fn fox_counts_match_the_engines() {
    for f in fixtures() {
        for n in 2..=9usize {
            let d = dihedral(n).unwrap();
            assert_eq!(
                fox_count(&f.diagram, n as u64),
                count_colorings(&f.diagram, &d) as u128,
                "{} mod {n}",
                f.name
            );
        }
    }
}

#[test]
fn fox_colorability_is_divisibility_of_the_determinant() {
    for f in fixtures() {
        let det = knot_determinant(&f.diagram);
        for p in [3u64, 5, 7, 11, 13] {
            let divides = det.is_multiple_of(p as u128);
            assert_eq!(fox_colorable(&f.diagram, p), divides, "{} p={p}", f.name);
            assert_eq!(
                colorable(&f.diagram, &dihedral(p as usize).unwrap()),
                divides,
                "{} p={p}",
                f.name
            );
        }
    }
}

#[test]
fn crt_consistency() {
    for f in fixtures() {
        for (m, n) in [(2u64, 3u64), (3, 5), (4, 3), (5, 7), (3, 8)] {
            let total = |k: u64| fox_count(&f.diagram, k) + k as u128;
            assert_eq!(total(m * n), total(m) * total(n), "{} {m}x{n}", f.name);
        }
    }
}

#[test]
fn dihedral_witness_when_the_determinant_has_an_odd_prime_factor() {
    for f in fixtures() {
        let det = knot_determinant(&f.diagram);
        if let Some(p) = (3..=det as usize)
            .step_by(2)
            .find(|p| det.is_multiple_of(*p as u128) && (2..*p).all(|d| p % d != 0))
        {
            assert!(
                colorable(&f.diagram, &dihedral(p).unwrap()),
                "{} p={p}",
                f.name
            );
        }
    }
}

#[test]
fn two_strand_torus_knots() {
    for n in [3usize, 5, 7, 9] {
        let k = braid_to_diagram(&torus_braid(2, n).unwrap()).unwrap();
        assert_eq!(knot_determinant(&k), n as u128);
        assert_eq!(fox_count(&k, n as u64), (n * n - n) as u128);
    }
}
