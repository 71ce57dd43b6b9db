//! Knottedness certificates by library search, knot distinction by
//! coloring invariants, and the Alexander prefilter on affine quandles.

mod certificate;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alexander::{alexander_polynomial, alexander_trivial, IntPolynomial};
use crate::coloring::{
    count_colorings_with_budget, find_coloring, Budget, BudgetLimit, Coloring, ColoringError,
};
use crate::knotio::KnotDiagram;
use crate::quandle::{Library, Quandle};

pub use certificate::{
    verify_certificate, CertificateViolation, KnottednessCertificate, CONVENTION_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("the quandle library is empty")]
    EmptyLibrary,
}

/// What happened with one library quandle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum QuandleStatus {
    Colorable,
    NotColorable,
    Budget { limit: BudgetLimit },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleOutcome {
    pub index: usize,
    pub quandle: String,
    pub size: usize,
    #[serde(flatten)]
    pub status: QuandleStatus,
}

/// Inconclusive certification: no quandle in the library colors the
/// diagram within budget. This is not a claim that the diagram is trivial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustionReport {
    pub outcomes: Vec<QuandleOutcome>,
}

impl ExhaustionReport {
    pub fn budget_hits(&self) -> usize {
        self.outcomes
            .iter()
            .filter(|o| matches!(o.status, QuandleStatus::Budget { .. }))
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum CertifyOutcome {
    Certified(KnottednessCertificate),
    Exhausted(ExhaustionReport),
}

impl CertifyOutcome {
    pub fn certificate(&self) -> Option<&KnottednessCertificate> {
        match self {
            CertifyOutcome::Certified(c) => Some(c),
            CertifyOutcome::Exhausted(_) => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.certificate().is_some()
    }
}

fn try_quandle(
    knot: &KnotDiagram,
    index: usize,
    q: &Quandle,
    budget: &Budget,
) -> (QuandleOutcome, Option<Coloring>) {
    let (status, coloring) = match find_coloring(knot, q, budget) {
        Ok(Some(c)) => (QuandleStatus::Colorable, Some(c)),
        Ok(None) => (QuandleStatus::NotColorable, None),
        Err(ColoringError::BudgetExceeded(limit)) => (QuandleStatus::Budget { limit }, None),
        Err(e) => unreachable!("coloring a valid diagram: {e}"),
    };
    let outcome = QuandleOutcome {
        index,
        quandle: q.label(),
        size: q.size(),
        status,
    };
    (outcome, coloring)
}

fn certificate_for(
    knot: &KnotDiagram,
    index: usize,
    q: &Quandle,
    coloring: Coloring,
) -> KnottednessCertificate {
    let cert = KnottednessCertificate {
        convention: CONVENTION_VERSION.to_string(),
        knot: knot.clone(),
        quandle: q.record(),
        library_index: index,
        coloring,
    };
    assert_eq!(
        verify_certificate(&cert),
        Ok(()),
        "engine produced a bad certificate"
    );
    cert
}

/// Scans `library` in order for a quandle with a nontrivial coloring of
/// `knot`; `budget` applies to each quandle separately.
pub fn certify_knotted(
    knot: &KnotDiagram,
    library: &Library,
    budget: &Budget,
) -> Result<CertifyOutcome, RecognizeError> {
    if library.is_empty() {
        return Err(RecognizeError::EmptyLibrary);
    }
    let mut outcomes = Vec::new();
    for (index, q) in library.iter().enumerate() {
        let (outcome, coloring) = try_quandle(knot, index, q, budget);
        if let Some(c) = coloring {
            return Ok(CertifyOutcome::Certified(certificate_for(
                knot, index, q, c,
            )));
        }
        outcomes.push(outcome);
    }
    Ok(CertifyOutcome::Exhausted(ExhaustionReport { outcomes }))
}

/// As [`certify_knotted`], trying quandles on the rayon pool. The result is
/// identical: the certificate uses the least-index colorable quandle, and an
/// exhaustion report lists every quandle in order.
pub fn certify_knotted_parallel(
    knot: &KnotDiagram,
    library: &Library,
    budget: &Budget,
) -> Result<CertifyOutcome, RecognizeError> {
    if library.is_empty() {
        return Err(RecognizeError::EmptyLibrary);
    }
    let results: Vec<(QuandleOutcome, Option<Coloring>)> = library
        .as_slice()
        .par_iter()
        .enumerate()
        .map(|(index, q)| try_quandle(knot, index, q, budget))
        .collect();
    if let Some((outcome, coloring)) = results.iter().find(|(_, c)| c.is_some()) {
        let index = outcome.index;
        let q = library.get(index).expect("index from the library");
        let cert = certificate_for(knot, index, q, coloring.clone().unwrap());
        return Ok(CertifyOutcome::Certified(cert));
    }
    Ok(CertifyOutcome::Exhausted(ExhaustionReport {
        outcomes: results.into_iter().map(|(o, _)| o).collect(),
    }))
}

/// Drops affine quandles when `knot` has trivial Alexander polynomial: no
/// affine quandle colors such a knot nontrivially.
pub fn affine_prefilter(knot: &KnotDiagram, library: &Library) -> Library {
    if alexander_trivial(knot) {
        library.filtered(|q| !q.is_affine())
    } else {
        library.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistinguishOptions {
    /// Compare Alexander polynomials before trying quandles.
    pub alexander: bool,
    /// Compare coloring counts when colorability agrees.
    pub count: bool,
    /// Applied to each decision and each count separately.
    pub budget: Budget,
}

impl Default for DistinguishOptions {
    fn default() -> Self {
        DistinguishOptions {
            alexander: true,
            count: true,
            budget: Budget::default(),
        }
    }
}

/// Evidence that two diagrams represent different knots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DistinctionWitness {
    AlexanderMismatch {
        first: IntPolynomial,
        second: IntPolynomial,
    },
    /// Only one of the knots is colorable; reported when counting is off.
    ColorabilityMismatch {
        index: usize,
        quandle: String,
        first: bool,
        second: bool,
    },
    ColorCountMismatch {
        index: usize,
        quandle: String,
        first: u64,
        second: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleComparison {
    pub index: usize,
    pub quandle: String,
    pub colorable: Option<bool>,
    pub count: Option<u64>,
    pub budget: Option<BudgetLimit>,
}

/// Both knots agree on every quandle the budget allowed (and on the
/// Alexander polynomial when it was compared); they may still be different
/// knots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndistinguishableReport {
    /// Alexander polynomials of the two knots.
    pub alexander: (IntPolynomial, IntPolynomial),
    pub compared: Vec<QuandleComparison>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum DistinguishOutcome {
    Distinguished(DistinctionWitness),
    Indistinguishable(IndistinguishableReport),
}

impl DistinguishOutcome {
    pub fn witness(&self) -> Option<&DistinctionWitness> {
        match self {
            DistinguishOutcome::Distinguished(w) => Some(w),
            DistinguishOutcome::Indistinguishable(_) => None,
        }
    }
}

/// Compares Alexander polynomials (unless `options.alexander` is off), then, quandle by quandle in library
/// order, colorability and (with `options.count`) coloring counts.
pub fn distinguish(
    first: &KnotDiagram,
    second: &KnotDiagram,
    library: &Library,
    options: &DistinguishOptions,
) -> DistinguishOutcome {
    let a1 = alexander_polynomial(first);
    let a2 = alexander_polynomial(second);
    if options.alexander && a1 != a2 {
        return DistinguishOutcome::Distinguished(DistinctionWitness::AlexanderMismatch {
            first: a1,
            second: a2,
        });
    }
    let budget = &options.budget;
    let mut compared = Vec::new();
    for (index, q) in library.iter().enumerate() {
        let mut row = QuandleComparison {
            index,
            quandle: q.label(),
            colorable: None,
            count: None,
            budget: None,
        };
        let decided = find_coloring(first, q, budget)
            .and_then(|c1| Ok((c1.is_some(), find_coloring(second, q, budget)?.is_some())));
        let (c1, c2) = match decided {
            Ok(pair) => pair,
            Err(ColoringError::BudgetExceeded(limit)) => {
                row.budget = Some(limit);
                compared.push(row);
                continue;
            }
            Err(e) => unreachable!("coloring a valid diagram: {e}"),
        };
        if c1 != c2 && !options.count {
            return DistinguishOutcome::Distinguished(DistinctionWitness::ColorabilityMismatch {
                index,
                quandle: q.label(),
                first: c1,
                second: c2,
            });
        }
        row.colorable = Some(c1);
        if options.count {
            let counted = count_colorings_with_budget(first, q, budget)
                .and_then(|n1| Ok((n1, count_colorings_with_budget(second, q, budget)?)));
            match counted {
                Ok((n1, n2)) if n1 != n2 => {
                    return DistinguishOutcome::Distinguished(
                        DistinctionWitness::ColorCountMismatch {
                            index,
                            quandle: q.label(),
                            first: n1,
                            second: n2,
                        },
                    )
                }
                Ok((n1, _)) => row.count = Some(n1),
                Err(ColoringError::BudgetExceeded(limit)) => row.budget = Some(limit),
                Err(e) => unreachable!("coloring a valid diagram: {e}"),
            }
        }
        compared.push(row);
    }
    DistinguishOutcome::Indistinguishable(IndistinguishableReport {
        alexander: (a1, a2),
        compared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::quandle::dihedral;

    fn lib(ns: &[usize]) -> Library {
        Library::from_quandles(ns.iter().map(|&n| dihedral(n).unwrap()))
    }

    #[test]
    fn trefoil_certificate() {
        let k = fixture("trefoil-gauss").unwrap().diagram;
        let out = certify_knotted(&k, &lib(&[3]), &Budget::default()).unwrap();
        let cert = out.certificate().unwrap();
        assert_eq!(verify_certificate(cert), Ok(()));
        assert_eq!(cert.quandle.name, "dihedral(3)");
        let back = KnottednessCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(&back, cert);
    }

    #[test]
    fn figure_eight_needs_five() {
        let k = fixture("figure-eight-braid").unwrap().diagram;
        let out = certify_knotted(&k, &lib(&[3]), &Budget::default()).unwrap();
        assert!(!out.is_certified());
        let out = certify_knotted(&k, &lib(&[3, 5]), &Budget::default()).unwrap();
        assert_eq!(out.certificate().unwrap().quandle.name, "dihedral(5)");
        assert_eq!(out.certificate().unwrap().library_index, 1);
        assert_eq!(
            certify_knotted_parallel(&k, &lib(&[3, 5, 7]), &Budget::default()).unwrap(),
            certify_knotted(&k, &lib(&[3, 5, 7]), &Budget::default()).unwrap()
        );
    }

    #[test]
    fn unknot_exhausts() {
        let k = KnotDiagram::unknot();
        let CertifyOutcome::Exhausted(report) =
            certify_knotted(&k, &lib(&[3, 5]), &Budget::default()).unwrap()
        else {
            panic!("unknot certified");
        };
        assert_eq!(report.outcomes.len(), 2);
        assert!(report
            .outcomes
            .iter()
            .all(|o| o.status == QuandleStatus::NotColorable));
        assert_eq!(
            certify_knotted(&k, &Library::default(), &Budget::default()),
            Err(RecognizeError::EmptyLibrary)
        );
    }

    #[test]
    fn perturbed_certificates_fail() {
        let k = fixture("trefoil-gauss").unwrap().diagram;
        let out = certify_knotted(&k, &lib(&[3]), &Budget::default()).unwrap();
        let mut cert = out.certificate().unwrap().clone();
        let mut colors = cert.coloring.colors().to_vec();
        colors[0] = colors[0] % 3 + 1;
        cert.coloring = Coloring::new(colors);
        assert!(matches!(
            verify_certificate(&cert),
            Err(CertificateViolation::Crossing { .. })
        ));
        cert.coloring = Coloring::new(vec![2, 2, 2]);
        assert_eq!(
            verify_certificate(&cert),
            Err(CertificateViolation::Trivial)
        );
        cert.convention = "other".into();
        assert!(matches!(
            verify_certificate(&cert),
            Err(CertificateViolation::Convention(_))
        ));
    }

    #[test]
    fn distinguishing() {
        let trefoil = fixture("trefoil-gauss").unwrap().diagram;
        let fig8 = fixture("figure-eight-braid").unwrap().diagram;
        let unknot = KnotDiagram::unknot();
        let opts = DistinguishOptions::default();
        assert!(matches!(
            distinguish(&trefoil, &unknot, &lib(&[3]), &opts),
            DistinguishOutcome::Distinguished(DistinctionWitness::AlexanderMismatch { .. })
        ));
        let mirror = fixture("figure-eight-mirror").unwrap().diagram;
        assert!(matches!(
            distinguish(&fig8, &mirror, &lib(&[3, 5]), &opts),
            DistinguishOutcome::Indistinguishable(_)
        ));
        let colors_only = DistinguishOptions {
            alexander: false,
            ..opts
        };
        assert!(matches!(
            distinguish(&fig8, &unknot, &lib(&[3]), &colors_only),
            DistinguishOutcome::Indistinguishable(_)
        ));
        assert_eq!(
            distinguish(&fig8, &unknot, &lib(&[3, 5]), &colors_only).witness(),
            Some(&DistinctionWitness::ColorCountMismatch {
                index: 1,
                quandle: "dihedral(5)".into(),
                first: 20,
                second: 0
            })
        );
        let decide_only = DistinguishOptions {
            count: false,
            ..colors_only
        };
        assert!(matches!(
            distinguish(&fig8, &unknot, &lib(&[3, 5]), &decide_only).witness(),
            Some(DistinctionWitness::ColorabilityMismatch {
                first: true,
                second: false,
                ..
            })
        ));
        let same = distinguish(&trefoil, &trefoil, &lib(&[3, 5]), &opts);
        let DistinguishOutcome::Indistinguishable(report) = same else {
            panic!("a knot was distinguished from itself");
        };
        assert_eq!(report.compared[0].count, Some(6));
        assert_eq!(report.compared[1].count, Some(0));
    }

    #[test]
    fn prefilter() {
        let library = lib(&[3, 5, 7]);
        assert!(affine_prefilter(&KnotDiagram::unknot(), &library).is_empty());
        let trefoil = fixture("trefoil-gauss").unwrap().diagram;
        assert_eq!(affine_prefilter(&trefoil, &library).len(), 3);
    }
}
