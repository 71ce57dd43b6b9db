use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::knotio::KnotDiagram;
use crate::quandle::{QuandleError, QuandleRecord};

/// Version tag of the coloring convention recorded in certificates: arcs
/// and colors are 1-based and the crossing rule is
/// `color(target) = color(over) * color(source)` with `(source, target)`
/// as returned by `Crossing::directed`.
pub const CONVENTION_VERSION: &str = "knotcolor-coloring/1";

/// Evidence that a diagram is knotted: a quandle and a nontrivial coloring
/// by it. Self-contained, so it can be re-checked without this library.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnottednessCertificate {
    pub convention: String,
    pub knot: KnotDiagram,
    pub quandle: QuandleRecord,
    /// Position of the quandle in the library that was scanned.
    pub library_index: usize,
    pub coloring: Coloring,
}

impl KnottednessCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// The first reason a certificate fails to check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateViolation {
    #[error("unknown convention `{0}`")]
    Convention(String),
    #[error("the table is not a quandle: {0}")]
    NotAQuandle(QuandleError),
    #[error("coloring covers {found} arcs, diagram has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("arc {arc} has color {color} outside 1..={size}")]
    ColorOutOfRange {
        arc: usize,
        color: usize,
        size: usize,
    },
    #[error("crossing {crossing}: over * source = {expected}, target has {found}")]
    Crossing {
        crossing: usize,
        expected: usize,
        found: usize,
    },
    #[error("the coloring uses a single color")]
    Trivial,
}

/// Re-checks a certificate from scratch: the quandle axioms on the inline
/// table, the crossing rule at every crossing and the use of at least two
/// colors.
pub fn verify_certificate(cert: &KnottednessCertificate) -> Result<(), CertificateViolation> {
    if cert.convention != CONVENTION_VERSION {
        return Err(CertificateViolation::Convention(cert.convention.clone()));
    }
    cert.quandle
        .verify()
        .map_err(CertificateViolation::NotAQuandle)?;
    let table = &cert.quandle.table;
    let size = table.len();
    let colors = cert.coloring.colors();
    if colors.len() != cert.knot.arc_count() {
        return Err(CertificateViolation::WrongLength {
            expected: cert.knot.arc_count(),
            found: colors.len(),
        });
    }
    if let Some((i, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > size) {
        return Err(CertificateViolation::ColorOutOfRange {
            arc: i + 1,
            color: c,
            size,
        });
    }
    for (i, x) in cert.knot.crossings().iter().enumerate() {
        let (source, target) = x.directed();
        let over = colors[x.over - 1];
        let expected = table[over - 1][colors[source - 1] - 1];
        let found = colors[target - 1];
        if expected != found {
            return Err(CertificateViolation::Crossing {
                crossing: i + 1,
                expected,
                found,
            });
        }
    }
    if colors.iter().all(|&c| c == colors[0]) {
        return Err(CertificateViolation::Trivial);
    }
    Ok(())
}
