//! Knot presentations: signed Gauss codes, braid words, torus knots and DT
//! codes, all converted into the crossing-list [`KnotDiagram`].

mod braid;
mod diagram;
mod dt;
mod gauss;

use std::io::Read;

use thiserror::Error;

pub use braid::{braid_to_diagram, parse_braid, torus_braid, BraidWord};
pub use diagram::{Crossing, KnotDiagram, Sign};
pub use dt::{dt_to_gauss, parse_dt, realize_signs, MAX_DT_CROSSINGS};
pub use gauss::{parse_gauss, GaussCode, GaussToken};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("empty knot description (use UNKNOT for the crossingless diagram)")]
    Empty,
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("crossing label {label} appears {count} times, expected 2")]
    LabelMultiplicity { label: usize, count: usize },
    #[error("crossing label {label} missing: labels must be exactly 1..={crossings}")]
    LabelRange { label: usize, crossings: usize },
    #[error("crossing {0} must be passed once over and once under")]
    OverUnderMismatch(usize),
    #[error("crossing {0} carries different signs on its two passes")]
    SignMismatch(usize),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("braid letter 0 is not a generator")]
    ZeroLetter,
    #[error("generator {letter} out of range for {strands} strands")]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("position {pos} out of range for a word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("braid closure has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("torus braid needs p >= 2 strands (got p = {p}, q = {q})")]
    TorusParameters { p: usize, q: usize },
    #[error("DT entry {0} is odd")]
    OddDtEntry(i64),
    #[error("DT entry {0} repeated")]
    RepeatedDtEntry(i64),
    #[error("DT entry {entry} outside 2..={max}")]
    DtEntryOutOfRange { entry: i64, max: usize },
    #[error("DT code is not realizable by a planar diagram")]
    NotRealizable,
    #[error("{crossings} crossings exceed the DT decoding limit of {max}")]
    TooManyCrossings { crossings: usize, max: usize },
}

/// A fixture row that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRejection {
    pub row: usize,
    pub name: String,
    pub reason: String,
}

/// Reads a `name,dt_code` CSV (KnotInfo-style export). Rows that fail to
/// decode are skipped and reported.
pub fn load_dt_fixtures<R: Read>(
    reader: R,
) -> Result<(Vec<KnotDiagram>, Vec<FixtureRejection>), csv::Error> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    let name_col = headers.iter().position(|h| h == "name").unwrap_or(0);
    let code_col = headers.iter().position(|h| h == "dt_code").unwrap_or(1);

    let mut knots = Vec::new();
    let mut rejected = Vec::new();
    for (idx, record) in rdr.records().enumerate() {
        let record = record?;
        let name = record.get(name_col).unwrap_or("").to_string();
        let code = record.get(code_col).unwrap_or("");
        match parse_dt(code) {
            Ok(d) => knots.push(d.with_name(name)),
            Err(e) => rejected.push(FixtureRejection {
                row: idx + 1,
                name,
                reason: e.to_string(),
            }),
        }
    }
    Ok((knots, rejected))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_csv_skips_bad_rows() {
        let data = "name,dt_code\n3_1,\"[4, 6, 2]\"\nbad,3 5\n4_1,4 6 8 2\n";
        let (knots, rejected) = load_dt_fixtures(data.as_bytes()).unwrap();
        assert_eq!(knots.len(), 2);
        assert_eq!(knots[0].name(), Some("3_1"));
        assert_eq!(knots[1].crossing_count(), 4);
        assert_eq!(rejected.len(), 1);
        assert_eq!(rejected[0].row, 2);
        assert_eq!(rejected[0].name, "bad");
    }
}
