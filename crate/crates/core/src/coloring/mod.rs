//! Deciding and counting nontrivial quandle colorings.
//!
//! Every engine uses the same rule: at a crossing with directed under-arcs
//! `(source, target)` (see [`Crossing::directed`]) a coloring `f` must satisfy
//! `f(target) = f(over) * f(source)`. A coloring is trivial when it uses a
//! single color; all counts here are of nontrivial colorings.
//!
//! [`Crossing::directed`]: crate::knotio::Crossing::directed

mod backtrack;
mod braid;
mod brute;
mod cnf;
mod external;
mod sat;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::knotio::{KnotDiagram, KnotError};
use crate::quandle::Quandle;

pub use backtrack::{color_backtrack, count_pinned, search as backtrack_search, SearchResult};
pub use braid::color_braid;
pub use brute::color_brute;
pub use cnf::{decode_model, emit_dimacs, encode_cnf, parse_dimacs, var_index, CnfInstance};
pub use external::external_decide;
pub use sat::{sat_decide, sat_decide_with_budget, SatResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(BudgetLimit),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error("the CNF encoding needs a quandle with at least 2 elements")]
    QuandleTooSmall,
    #[error("invalid CNF: {0}")]
    InvalidCnf(String),
    #[error("external solver: {0}")]
    External(String),
}

/// Which budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BudgetLimit {
    Assignments {
        #[serde(with = "wide_number")]
        needed: u128,
        #[serde(with = "wide_number")]
        limit: u128,
    },
    Nodes(u64),
    Time(Duration),
}

/// `u128` as a JSON number when it fits in `u64`, else as a decimal string.
mod wide_number {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &u128, s: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(*n) {
            Ok(small) => s.serialize_u64(small),
            Err(_) => s.serialize_str(&n.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Number(u64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Number(n) => Ok(n as u128),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

impl std::fmt::Display for BudgetLimit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BudgetLimit::Assignments { needed, limit } => {
                write!(f, "{needed} assignments over the limit of {limit}")
            }
            BudgetLimit::Nodes(n) => write!(f, "more than {n} search nodes"),
            BudgetLimit::Time(t) => write!(f, "time limit of {:.3}s", t.as_secs_f64()),
        }
    }
}

/// Search limits. The defaults allow 10^8 brute-force assignments and no
/// node or time limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_assignments: u128,
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_assignments: 100_000_000,
            max_nodes: None,
            time_limit: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_assignments: u128::MAX,
            max_nodes: None,
            time_limit: None,
        }
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock {
            deadline: self.time_limit.map(|t| (Instant::now() + t, t)),
            max_nodes: self.max_nodes,
            nodes: 0,
        }
    }

    pub(crate) fn check_assignments(&self, base: usize, exp: usize) -> Result<(), ColoringError> {
        let needed = (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
        if needed > self.max_assignments {
            return Err(ColoringError::BudgetExceeded(BudgetLimit::Assignments {
                needed,
                limit: self.max_assignments,
            }));
        }
        Ok(())
    }
}

/// Node counter and deadline for one engine invocation.
pub(crate) struct Clock {
    deadline: Option<(Instant, Duration)>,
    max_nodes: Option<u64>,
    nodes: u64,
}

impl Clock {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), ColoringError> {
        self.nodes += 1;
        if let Some(max) = self.max_nodes {
            if self.nodes > max {
                return Err(ColoringError::BudgetExceeded(BudgetLimit::Nodes(max)));
            }
        }
        if self.nodes & 0xfff == 0 {
            if let Some((deadline, limit)) = self.deadline {
                if Instant::now() > deadline {
                    return Err(ColoringError::BudgetExceeded(BudgetLimit::Time(limit)));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Decide,
    Count,
}

/// Engine output: existence in decide mode, the number of nontrivial
/// colorings in count mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Colorable(bool),
    Count(u64),
}

impl Answer {
    pub fn is_colorable(&self) -> bool {
        match *self {
            Answer::Colorable(b) => b,
            Answer::Count(n) => n > 0,
        }
    }

    pub fn count(&self) -> Option<u64> {
        match *self {
            Answer::Count(n) => Some(n),
            Answer::Colorable(_) => None,
        }
    }
}

/// An assignment of colors (1-based) to arcs (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    /// `colors[i]` is the color of arc `i + 1`.
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub(crate) fn from_zero_based(colors: &[u16]) -> Self {
        Coloring {
            colors: colors.iter().map(|&c| c as usize + 1).collect(),
        }
    }

    pub fn color(&self, arc: usize) -> usize {
        self.colors[arc - 1]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn arc_count(&self) -> usize {
        self.colors.len()
    }

    pub fn is_nontrivial(&self) -> bool {
        self.colors.iter().any(|&c| c != self.colors[0])
    }

    /// Composes with a map on colors (`map[c-1]` is the image of `c`), for
    /// example a factor projection or a subquandle embedding.
    pub fn map_colors(&self, map: &[usize]) -> Coloring {
        Coloring {
            colors: self.colors.iter().map(|&c| map[c - 1]).collect(),
        }
    }
}

/// Why an assignment is not a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum ColoringViolation {
    #[error("assignment covers {found} arcs, diagram has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("arc {arc} has color {color} outside the quandle")]
    ColorOutOfRange { arc: usize, color: usize },
    #[error("crossing {crossing}: over * source = {expected}, target has {found}")]
    Crossing {
        crossing: usize,
        expected: usize,
        found: usize,
    },
}

/// Checks the crossing rule at every crossing. Does not require the
/// coloring to be nontrivial.
pub fn check_coloring(
    knot: &KnotDiagram,
    q: &Quandle,
    coloring: &Coloring,
) -> Result<(), ColoringViolation> {
    if coloring.arc_count() != knot.arc_count() {
        return Err(ColoringViolation::WrongLength {
            expected: knot.arc_count(),
            found: coloring.arc_count(),
        });
    }
    for (i, &c) in coloring.colors().iter().enumerate() {
        if c == 0 || c > q.size() {
            return Err(ColoringViolation::ColorOutOfRange {
                arc: i + 1,
                color: c,
            });
        }
    }
    for (i, x) in knot.crossings().iter().enumerate() {
        let (source, target) = x.directed();
        let expected = q.op(coloring.color(x.over), coloring.color(source));
        if expected != coloring.color(target) {
            return Err(ColoringViolation::Crossing {
                crossing: i + 1,
                expected,
                found: coloring.color(target),
            });
        }
    }
    Ok(())
}

/// Crossings as 0-based `(over, source, target)` triples.
pub(crate) fn directed_triples(knot: &KnotDiagram) -> Vec<(usize, usize, usize)> {
    knot.crossings()
        .iter()
        .map(|x| {
            let (s, t) = x.directed();
            (x.over - 1, s - 1, t - 1)
        })
        .collect()
}

fn can_color_nontrivially(knot: &KnotDiagram, q: &Quandle) -> bool {
    knot.crossing_count() > 0 && q.size() >= 2
}

/// Finds a nontrivial coloring with the embedded SAT solver. For connected
/// quandles arc 1 is pinned to color 1.
pub fn find_coloring(
    knot: &KnotDiagram,
    q: &Quandle,
    budget: &Budget,
) -> Result<Option<Coloring>, ColoringError> {
    if !can_color_nontrivially(knot, q) {
        return Ok(None);
    }
    let instance = encode_cnf(knot, q, q.is_connected(), true)?;
    match sat_decide_with_budget(&instance, budget)? {
        SatResult::Unsat => Ok(None),
        SatResult::Sat(model) => {
            let coloring = decode_model(&model, knot.arc_count(), q.size());
            debug_assert!(check_coloring(knot, q, &coloring).is_ok());
            debug_assert!(coloring.is_nontrivial());
            Ok(Some(coloring))
        }
    }
}

/// Is there a nontrivial `q`-coloring of `knot`?
pub fn colorable(knot: &KnotDiagram, q: &Quandle) -> bool {
    find_coloring(knot, q, &Budget::unlimited())
        .expect("unlimited budget")
        .is_some()
}

/// The number of nontrivial colorings, `col_Q(K)`.
///
/// Connected quandles are homogeneous, so the count is `q` times the count
/// with arc 1 pinned to color 1; other quandles are enumerated in full.
pub fn count_colorings(knot: &KnotDiagram, q: &Quandle) -> u64 {
    count_colorings_with_budget(knot, q, &Budget::unlimited()).expect("unlimited budget")
}

pub fn count_colorings_with_budget(
    knot: &KnotDiagram,
    q: &Quandle,
    budget: &Budget,
) -> Result<u64, ColoringError> {
    if !can_color_nontrivially(knot, q) {
        return Ok(0);
    }
    if q.is_connected() {
        Ok(count_pinned(knot, q, budget)? * q.size() as u64)
    } else {
        Ok(backtrack_search(knot, q, None, Mode::Count, budget)?.count)
    }
}
