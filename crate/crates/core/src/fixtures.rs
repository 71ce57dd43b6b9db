//! A small table of named knot diagrams: several presentations of the
//! unknot, trefoil and figure-eight, plus torus and twist knots up to
//! eight crossings.

use crate::knotio::{
    braid_to_diagram, parse_braid, parse_dt, parse_gauss, torus_braid, BraidWord, KnotDiagram,
};

#[derive(Debug, Clone)]
pub struct Fixture {
    /// Unique name of this presentation.
    pub name: &'static str,
    /// Rolfsen name of the knot type (`0_1` for the unknot).
    pub knot_type: &'static str,
    pub diagram: KnotDiagram,
    /// The braid word, for presentations given as braid closures.
    pub braid: Option<BraidWord>,
}

impl Fixture {
    pub fn is_unknot(&self) -> bool {
        self.knot_type == "0_1"
    }
}

enum Source {
    Gauss(&'static str),
    Braid(&'static str),
    Dt(&'static str),
    Torus(usize, usize),
    Derived(&'static str, fn(&BraidWord) -> BraidWord),
}

const TABLE: &[(&str, &str, Source)] = &[
    ("unknot", "0_1", Source::Gauss("UNKNOT")),
    ("unknot-kink-positive", "0_1", Source::Gauss("O1+ U1+")),
    ("unknot-kink-negative", "0_1", Source::Gauss("O1- U1-")),
    ("unknot-braid-2", "0_1", Source::Braid("2: 1")),
    ("unknot-braid-3", "0_1", Source::Braid("3: 1 2")),
    ("unknot-braid-3-mixed", "0_1", Source::Braid("3: 1 -2")),
    ("unknot-braid-3-r2", "0_1", Source::Braid("3: 1 2 -2 2")),
    ("unknot-braid-4", "0_1", Source::Braid("4: 1 2 3")),
    (
        "unknot-braid-4-r2",
        "0_1",
        Source::Braid("4: 2 1 -1 1 3 -3 3"),
    ),
    (
        "trefoil-gauss",
        "3_1",
        Source::Gauss("O1+ U2+ O3+ U1+ O2+ U3+"),
    ),
    ("trefoil-braid", "3_1", Source::Braid("2: 1 1 1")),
    ("trefoil-r2", "3_1", Source::Derived("2: 1 1 1", r2_front)),
    ("trefoil-markov", "3_1", Source::Derived("2: 1 1 1", markov)),
    ("trefoil-conjugated", "3_1", Source::Braid("3: 1 2 1 1")),
    ("trefoil-dt", "3_1", Source::Dt("4 6 2")),
    ("trefoil-mirror", "3_1", Source::Braid("2: -1 -1 -1")),
    ("figure-eight-braid", "4_1", Source::Braid("3: 1 -2 1 -2")),
    ("figure-eight-dt", "4_1", Source::Dt("4 6 8 2")),
    (
        "figure-eight-r2",
        "4_1",
        Source::Derived("3: 1 -2 1 -2", r2_front),
    ),
    (
        "figure-eight-markov",
        "4_1",
        Source::Derived("3: 1 -2 1 -2", markov),
    ),
    ("figure-eight-mirror", "4_1", Source::Braid("3: -1 2 -1 2")),
    ("torus-2-5", "5_1", Source::Torus(2, 5)),
    ("cinquefoil-dt", "5_1", Source::Dt("6 8 10 2 4")),
    ("three-twist", "5_2", Source::Dt("4 8 10 2 6")),
    ("stevedore", "6_1", Source::Dt("4 8 12 10 2 6")),
    ("knot-6-2", "6_2", Source::Dt("4 8 10 12 2 6")),
    ("knot-6-3", "6_3", Source::Dt("4 8 10 2 12 6")),
    ("torus-2-7", "7_1", Source::Torus(2, 7)),
    ("torus-3-4", "8_19", Source::Torus(3, 4)),
];

fn r2_front(b: &BraidWord) -> BraidWord {
    b.insert_r2(b.strands() - 1, 1).expect("valid R2 insertion")
}

fn markov(b: &BraidWord) -> BraidWord {
    b.markov_stabilize()
}

fn build(name: &'static str, knot_type: &'static str, source: &Source) -> Fixture {
    let from_braid = |b: BraidWord| Fixture {
        name,
        knot_type,
        diagram: braid_to_diagram(&b).expect("fixture braid closes to a knot"),
        braid: Some(b),
    };
    let plain = |diagram: KnotDiagram| Fixture {
        name,
        knot_type,
        diagram,
        braid: None,
    };
    let fixture = match *source {
        Source::Gauss(g) => plain(parse_gauss(g).expect("fixture Gauss code")),
        Source::Dt(d) => plain(parse_dt(d).expect("fixture DT code")),
        Source::Braid(b) => from_braid(parse_braid(b).expect("fixture braid")),
        Source::Torus(p, q) => from_braid(torus_braid(p, q).expect("fixture torus knot")),
        Source::Derived(b, f) => from_braid(f(&parse_braid(b).expect("fixture braid"))),
    };
    Fixture {
        diagram: fixture.diagram.with_name(name),
        ..fixture
    }
}

/// Every fixture, in table order.
pub fn fixtures() -> Vec<Fixture> {
    TABLE.iter().map(|(n, t, s)| build(n, t, s)).collect()
}

pub fn fixture(name: &str) -> Option<Fixture> {
    TABLE
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(n, t, s)| build(n, t, s))
}

/// Fixtures of one knot type.
pub fn presentations(knot_type: &str) -> Vec<Fixture> {
    TABLE
        .iter()
        .filter(|(_, t, _)| *t == knot_type)
        .map(|(n, t, s)| build(n, t, s))
        .collect()
}
