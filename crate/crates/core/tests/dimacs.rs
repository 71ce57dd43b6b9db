use knotcolor::coloring::{emit_dimacs, encode_cnf, parse_dimacs};
use knotcolor::dihedral;
use knotcolor::fixtures::fixture;

const GOLDEN: &str = include_str!("golden/trefoil_dihedral3.cnf");

#[test]
fn trefoil_encoding_matches_golden_file() {
    let k = fixture("trefoil-gauss").unwrap().diagram;
    let d3 = dihedral(3).unwrap();
    let text = emit_dimacs(&encode_cnf(&k, &d3, true, true).unwrap());
    assert_eq!(text, GOLDEN);
    assert_eq!(text, emit_dimacs(&encode_cnf(&k, &d3, true, true).unwrap()));
}

#[test]
fn braid_trefoil_encodes_identically() {
    let gauss = fixture("trefoil-gauss").unwrap().diagram;
    let braid = fixture("trefoil-braid").unwrap().diagram;
    let d3 = dihedral(3).unwrap();
    assert_eq!(
        emit_dimacs(&encode_cnf(&braid, &d3, true, true).unwrap()),
        emit_dimacs(&encode_cnf(&gauss, &d3, true, true).unwrap())
    );
}

#[test]
fn clause_group_toggles() {
    let k = fixture("trefoil-gauss").unwrap().diagram;
    let d3 = dihedral(3).unwrap();
    let header = |sb, nt| {
        emit_dimacs(&encode_cnf(&k, &d3, sb, nt).unwrap())
            .lines()
            .next()
            .unwrap()
            .to_string()
    };
    assert_eq!(header(true, true), "p cnf 9 43");
    assert_eq!(header(false, true), "p cnf 9 42");
    assert_eq!(header(true, false), "p cnf 9 40");
    assert_eq!(header(false, false), "p cnf 9 39");
}

#[test]
fn golden_file_round_trips() {
    let inst = parse_dimacs(GOLDEN).unwrap();
    assert_eq!(inst.num_vars(), 9);
    assert_eq!(inst.clauses().len(), 43);
    assert_eq!(emit_dimacs(&inst), GOLDEN);
}
