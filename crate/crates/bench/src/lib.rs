//! Shared workloads for the criterion benchmarks.

use knotcolor::knotio::{braid_to_diagram, torus_braid, BraidWord};
use knotcolor::quandle::{conjugation, Group};
use knotcolor::{dihedral, KnotDiagram, Quandle};

pub struct Workload {
    pub name: String,
    pub braid: BraidWord,
    pub diagram: KnotDiagram,
}

/// The two-strand torus knots `T(2, n)`.
pub fn torus_family(ns: &[usize]) -> Vec<Workload> {
    ns.iter()
        .map(|&n| {
            let braid = torus_braid(2, n).expect("n >= 1");
            let diagram = braid_to_diagram(&braid).expect("odd n closes to a knot");
            Workload {
                name: format!("T(2,{n})"),
                braid,
                diagram,
            }
        })
        .collect()
}

/// An affine quandle and a non-affine one of comparable size.
pub fn quandle_pair() -> (Quandle, Quandle) {
    let s4 = Group::symmetric(4);
    let transpositions = s4
        .conjugacy_classes()
        .into_iter()
        .find(|c| c.len() == 6)
        .expect("S4 has a class of size 6");
    (
        dihedral(7).expect("valid size"),
        conjugation(&s4, transpositions[0]).expect("valid class"),
    )
}
