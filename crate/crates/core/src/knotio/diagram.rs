use std::fmt;

use serde::{Deserialize, Serialize};

use super::KnotError;

/// Handedness of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub(crate) fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.as_i8()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(format!("crossing sign must be +1 or -1, got {other}")),
        }
    }
}

/// One crossing of an oriented diagram. Arc ids are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: Sign,
}

impl Crossing {
    /// The under-arcs as `(source, target)` so that the coloring rule at this
    /// crossing reads `f(target) = f(over) * f(source)`.
    ///
    /// Positive crossings map the entering under-arc to the leaving one,
    /// negative crossings the other way round.
    #[inline]
    pub fn directed(&self) -> (usize, usize) {
        match self.sign {
            Sign::Positive => (self.under_in, self.under_out),
            Sign::Negative => (self.under_out, self.under_in),
        }
    }
}

#[derive(Deserialize)]
struct RawDiagram {
    crossings: Vec<Crossing>,
    arc_count: usize,
    #[serde(default)]
    name: Option<String>,
}

impl TryFrom<RawDiagram> for KnotDiagram {
    type Error = KnotError;

    fn try_from(raw: RawDiagram) -> Result<Self, Self::Error> {
        let mut d = KnotDiagram::new(raw.crossings, raw.arc_count)?;
        d.name = raw.name;
        Ok(d)
    }
}

/// An oriented knot diagram as a list of crossings over numbered arcs.
///
/// Invariants (checked by [`KnotDiagram::new`]): a diagram with `m >= 1`
/// crossings has exactly `m` arcs numbered `1..=m`, and every arc is the
/// entering under-arc of exactly one crossing and the leaving under-arc of
/// exactly one crossing. The round unknot has no crossings and one arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct KnotDiagram {
    crossings: Vec<Crossing>,
    arc_count: usize,
    name: Option<String>,
}

impl KnotDiagram {
    pub fn new(crossings: Vec<Crossing>, arc_count: usize) -> Result<Self, KnotError> {
        let m = crossings.len();
        if m == 0 {
            if arc_count != 1 {
                return Err(KnotError::InvalidDiagram(format!(
                    "a diagram without crossings has exactly one arc, got {arc_count}"
                )));
            }
            return Ok(Self::unknot());
        }
        if arc_count != m {
            return Err(KnotError::InvalidDiagram(format!(
                "{m} crossings require {m} arcs, got {arc_count}"
            )));
        }
        let mut entering = vec![0usize; m + 1];
        let mut leaving = vec![0usize; m + 1];
        for (idx, c) in crossings.iter().enumerate() {
            for arc in [c.over, c.under_in, c.under_out] {
                if arc == 0 || arc > m {
                    return Err(KnotError::InvalidDiagram(format!(
                        "crossing {} references arc {arc} outside 1..={m}",
                        idx + 1
                    )));
                }
            }
            entering[c.under_in] += 1;
            leaving[c.under_out] += 1;
        }
        for arc in 1..=m {
            if entering[arc] != 1 || leaving[arc] != 1 {
                return Err(KnotError::InvalidDiagram(format!(
                    "arc {arc} must end at exactly one under-passage and start at exactly one \
                     (ends {}, starts {})",
                    entering[arc], leaving[arc]
                )));
            }
        }
        Ok(KnotDiagram {
            crossings,
            arc_count,
            name: None,
        })
    }

    /// The round unknot: no crossings, one arc.
    pub fn unknot() -> Self {
        KnotDiagram {
            crossings: Vec::new(),
            arc_count: 1,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// The same projection with every crossing sign reversed.
    pub fn flip_signs(&self) -> KnotDiagram {
        KnotDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing {
                    sign: c.sign.flip(),
                    ..*c
                })
                .collect(),
            arc_count: self.arc_count,
            name: self.name.clone(),
        }
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            write!(f, "{name} ")?;
        }
        write!(
            f,
            "({} crossings, {} arcs)",
            self.crossings.len(),
            self.arc_count
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(over: usize, under_in: usize, under_out: usize) -> Crossing {
        Crossing {
            over,
            under_in,
            under_out,
            sign: Sign::Positive,
        }
    }

    #[test]
    fn rejects_arc_used_twice_as_entering() {
        let err = KnotDiagram::new(vec![c(1, 1, 2), c(2, 1, 1)], 2).unwrap_err();
        assert!(matches!(err, KnotError::InvalidDiagram(_)));
    }

    #[test]
    fn zero_crossings_needs_one_arc() {
        assert!(KnotDiagram::new(vec![], 1).is_ok());
        assert!(KnotDiagram::new(vec![], 2).is_err());
    }

    #[test]
    fn serde_validates_on_load() {
        let bad = r#"{"crossings":[{"over":1,"under_in":1,"under_out":1,"sign":2}],"arc_count":1}"#;
        assert!(serde_json::from_str::<KnotDiagram>(bad).is_err());
        let good =
            r#"{"crossings":[{"over":1,"under_in":1,"under_out":1,"sign":-1}],"arc_count":1}"#;
        let d: KnotDiagram = serde_json::from_str(good).unwrap();
        assert_eq!(d.crossings()[0].sign, Sign::Negative);
    }

    #[test]
    fn directed_follows_sign() {
        let mut x = c(3, 1, 2);
        assert_eq!(x.directed(), (1, 2));
        x.sign = Sign::Negative;
        assert_eq!(x.directed(), (2, 1));
    }
}
