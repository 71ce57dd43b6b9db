use std::fmt;
use std::str::FromStr;

use super::diagram::{Crossing, KnotDiagram, Sign};
use super::KnotError;

/// One pass through a crossing in a signed Gauss code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussToken {
    pub crossing: usize,
    pub over: bool,
    pub sign: Sign,
}

impl fmt::Display for GaussToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.over { 'O' } else { 'U' };
        write!(f, "{kind}{}{}", self.crossing, self.sign.symbol())
    }
}

impl FromStr for GaussToken {
    type Err = KnotError;

    fn from_str(tok: &str) -> Result<Self, Self::Err> {
        let bad = || KnotError::InvalidToken(tok.to_string());
        let mut chars = tok.chars();
        let over = match chars.next() {
            Some('O') | Some('o') => true,
            Some('U') | Some('u') => false,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let sign_char = rest.chars().last().ok_or_else(bad)?;
        let sign = match sign_char {
            '+' => Sign::Positive,
            '-' | '\u{2212}' => Sign::Negative,
            _ => return Err(bad()),
        };
        let digits = &rest[..rest.len() - sign_char.len_utf8()];
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let crossing: usize = digits.parse().map_err(|_| bad())?;
        if crossing == 0 {
            return Err(KnotError::LabelRange {
                label: 0,
                crossings: 0,
            });
        }
        Ok(GaussToken {
            crossing,
            over,
            sign,
        })
    }
}

/// A validated signed Gauss code: every label `1..=m` occurs once over and
/// once under, with equal signs on both passes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussCode {
    tokens: Vec<GaussToken>,
}

impl GaussCode {
    pub fn new(tokens: Vec<GaussToken>) -> Result<Self, KnotError> {
        let m = tokens.iter().map(|t| t.crossing).max().unwrap_or(0);
        let mut seen: Vec<Vec<&GaussToken>> = vec![Vec::new(); m + 1];
        for t in &tokens {
            seen[t.crossing].push(t);
        }
        for (label, occ) in seen.iter().enumerate().skip(1) {
            if !occ.is_empty() && occ.len() != 2 {
                return Err(KnotError::LabelMultiplicity {
                    label,
                    count: occ.len(),
                });
            }
        }
        let distinct = seen.iter().skip(1).filter(|o| !o.is_empty()).count();
        if distinct != m {
            let missing = (1..=m).find(|&l| seen[l].is_empty()).unwrap_or(m);
            return Err(KnotError::LabelRange {
                label: missing,
                crossings: distinct,
            });
        }
        for (label, occ) in seen.iter().enumerate().skip(1) {
            if occ[0].over == occ[1].over {
                return Err(KnotError::OverUnderMismatch(label));
            }
            if occ[0].sign != occ[1].sign {
                return Err(KnotError::SignMismatch(label));
            }
        }
        Ok(GaussCode { tokens })
    }

    pub fn tokens(&self) -> &[GaussToken] {
        &self.tokens
    }

    pub fn crossing_count(&self) -> usize {
        self.tokens.len() / 2
    }

    /// Builds the crossing list. Arcs are the runs of tokens strictly between
    /// consecutive under-passes; arc `j` starts right after the `j`-th
    /// under-token in reading order.
    pub fn to_diagram(&self) -> KnotDiagram {
        let m = self.crossing_count();
        if m == 0 {
            return KnotDiagram::unknot();
        }
        let len = self.tokens.len();
        let first_under = self
            .tokens
            .iter()
            .position(|t| !t.over)
            .expect("validated code has under-tokens");

        let mut over = vec![0usize; m + 1];
        let mut under_in = vec![0usize; m + 1];
        let mut under_out = vec![0usize; m + 1];
        let mut sign = vec![Sign::Positive; m + 1];

        let mut arc = 1;
        for step in 1..=len {
            let t = &self.tokens[(first_under + step) % len];
            if t.over {
                over[t.crossing] = arc;
            } else {
                let next = if arc == m { 1 } else { arc + 1 };
                under_in[t.crossing] = arc;
                under_out[t.crossing] = next;
                sign[t.crossing] = t.sign;
                arc = next;
            }
        }

        let crossings = (1..=m)
            .map(|k| Crossing {
                over: over[k],
                under_in: under_in[k],
                under_out: under_out[k],
                sign: sign[k],
            })
            .collect();
        KnotDiagram::new(crossings, m).expect("arc construction preserves incidence invariant")
    }
}

impl FromStr for GaussCode {
    type Err = KnotError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        if trimmed.eq_ignore_ascii_case("UNKNOT") {
            return Ok(GaussCode { tokens: Vec::new() });
        }
        if trimmed.is_empty() {
            return Err(KnotError::Empty);
        }
        let tokens = trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<GaussToken>, _>>()?;
        GaussCode::new(tokens)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return f.write_str("UNKNOT");
        }
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Parses a signed Gauss code such as `O1+ U2+ O3+ U1+ O2+ U3+`.
///
/// The literal `UNKNOT` yields the crossingless diagram.
pub fn parse_gauss(text: &str) -> Result<KnotDiagram, KnotError> {
    Ok(text.parse::<GaussCode>()?.to_diagram())
}
