//! Quandle colorings of knot diagrams.
//!
//! Knots come in as signed Gauss codes, braid words, torus-knot parameters
//! or DT codes ([`knotio`]) and are colored by finite quandles
//! ([`quandle`]). Colorings are decided and counted by four interchangeable
//! engines ([`coloring`]), cross-checked against Fox colorings and the
//! Alexander polynomial ([`alexander`]), and assembled into knottedness
//! certificates and knot-distinguishing witnesses ([`recognize`]).

pub mod alexander;
pub mod coloring;
pub mod fixtures;
pub mod knotio;
pub mod quandle;
pub mod recognize;

pub use alexander::{
    alexander_matrix, alexander_polynomial, alexander_trivial, fox_colorable, fox_count,
    knot_determinant, AlexanderMatrix, IntPolynomial,
};
pub use coloring::{
    check_coloring, colorable, count_colorings, count_colorings_with_budget, encode_cnf,
    find_coloring, Answer, Budget, Coloring, ColoringError, Mode,
};
pub use knotio::{
    braid_to_diagram, parse_braid, parse_dt, parse_gauss, torus_braid, BraidWord, Crossing,
    KnotDiagram, KnotError, Sign,
};
pub use quandle::{
    affine, conjugation, dihedral, verify_axioms, Congruence, Group, Library, Quandle,
    QuandleError, QuandleRecord,
};
pub use recognize::{
    affine_prefilter, certify_knotted, distinguish, verify_certificate, CertifyOutcome,
    DistinctionWitness, DistinguishOptions, DistinguishOutcome, KnottednessCertificate,
};
