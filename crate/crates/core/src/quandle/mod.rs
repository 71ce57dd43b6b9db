//! Finite quandles as Cayley tables.
//!
//! Elements are 1-based in every public signature (`op`, `left_divide`,
//! tables, witnesses), matching the arc/color numbering used by the CNF
//! encoder. Engines use the crate-internal 0-based accessors.

mod congruence;
mod construct;
mod iso;
mod library;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use congruence::{
    congruences, congruences_with_limit, factor, principal_congruence, subquandle_generated,
    Congruence, Factor, Subquandle, DEFAULT_CONGRUENCE_SIZE_LIMIT,
};
pub use construct::{affine, conjugation, dihedral, trivial, Group};
pub use iso::{canonical_table, find_isomorphism, CANONICAL_FORM_MAX_SIZE};
pub use library::{
    library_generate, library_load, library_parse, GenerationSpec, Library, LibraryError,
    LibraryRejection,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("entry {a}*{b} = {value} outside 1..={size}")]
    EntryOutOfRange {
        a: usize,
        b: usize,
        value: usize,
        size: usize,
    },
    #[error("table of size {size} exceeds the supported maximum {max}")]
    TooLarge { size: usize, max: usize },
    #[error("not idempotent: {0}*{0} != {0}")]
    NotIdempotent(usize),
    #[error("no unique left division: {0}*{1} = {0}*{2}")]
    NotLeftInvertible(usize, usize, usize),
    #[error("not left distributive at ({0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),
    #[error("affine(n, t) needs gcd(t, n) = 1 (n = {n}, t = {t})")]
    NotAutomorphism { n: u64, t: u64 },
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("element {element} outside 1..={size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("partition is not compatible with the operation at ({a}, {b}) ~ ({a2}, {b2})")]
    NotACongruence {
        a: usize,
        b: usize,
        a2: usize,
        b2: usize,
    },
    #[error("congruence enumeration limited to size {max}, quandle has {size}")]
    CongruenceLimit { size: usize, max: usize },
}

/// Largest supported quandle (table entries are stored as `u16`).
pub const MAX_QUANDLE_SIZE: usize = u16::MAX as usize;

#[derive(Debug, Clone, Default)]
struct Tags {
    affine: bool,
    connected: bool,
    involutory: bool,
    simple: OnceLock<bool>,
}

/// A finite quandle with verified axioms and a precomputed left-division
/// table.
#[derive(Debug, Clone)]
pub struct Quandle {
    size: usize,
    table: Vec<u16>,
    division: Vec<u16>,
    name: Option<String>,
    tags: Tags,
}

impl PartialEq for Quandle {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.table == other.table
    }
}

impl Eq for Quandle {}

/// Checks idempotence, unique left division and left self-distributivity of
/// a 1-based table, reporting the first violation found in that order.
pub fn verify_axioms(table: &[Vec<usize>]) -> Result<Quandle, QuandleError> {
    let size = table.len();
    if size == 0 {
        return Err(QuandleError::Empty);
    }
    if size > MAX_QUANDLE_SIZE {
        return Err(QuandleError::TooLarge {
            size,
            max: MAX_QUANDLE_SIZE,
        });
    }
    let mut flat = Vec::with_capacity(size * size);
    for (a, row) in table.iter().enumerate() {
        if row.len() != size {
            return Err(QuandleError::NotSquare {
                row: a + 1,
                len: row.len(),
                size,
            });
        }
        for (b, &v) in row.iter().enumerate() {
            if v == 0 || v > size {
                return Err(QuandleError::EntryOutOfRange {
                    a: a + 1,
                    b: b + 1,
                    value: v,
                    size,
                });
            }
            flat.push((v - 1) as u16);
        }
    }
    Quandle::from_flat(size, flat)
}

impl Quandle {
    /// Builds from a 0-based row-major table, verifying all axioms.
    pub(crate) fn from_flat(size: usize, table: Vec<u16>) -> Result<Quandle, QuandleError> {
        debug_assert_eq!(table.len(), size * size);
        let at = |a: usize, b: usize| table[a * size + b] as usize;

        for a in 0..size {
            if at(a, a) != a {
                return Err(QuandleError::NotIdempotent(a + 1));
            }
        }
        let mut division = vec![0u16; size * size];
        for a in 0..size {
            let mut first_hit = vec![usize::MAX; size];
            for b in 0..size {
                let v = at(a, b);
                if first_hit[v] != usize::MAX {
                    return Err(QuandleError::NotLeftInvertible(
                        a + 1,
                        first_hit[v] + 1,
                        b + 1,
                    ));
                }
                first_hit[v] = b;
                division[a * size + v] = b as u16;
            }
        }
        for a in 0..size {
            for b in 0..size {
                let ab = at(a, b);
                for c in 0..size {
                    if at(a, at(b, c)) != at(ab, at(a, c)) {
                        return Err(QuandleError::NotDistributive(a + 1, b + 1, c + 1));
                    }
                }
            }
        }

        let mut q = Quandle {
            size,
            table,
            division,
            name: None,
            tags: Tags::default(),
        };
        q.tags.involutory = (0..size).all(|a| (0..size).all(|b| q.op0(a, q.op0(a, b)) == b));
        q.tags.connected = q.orbit_of_first() == size;
        Ok(q)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub(crate) fn with_affine_tag(mut self) -> Self {
        self.tags.affine = true;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name or a placeholder built from the size.
    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("quandle[{}]", self.size))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `a * b` for 1-based elements.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op0(a - 1, b - 1) + 1
    }

    /// The unique `c` with `a * c = b` (1-based).
    pub fn left_divide(&self, a: usize, b: usize) -> usize {
        self.div0(a - 1, b - 1) + 1
    }

    #[inline]
    pub(crate) fn op0(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    #[inline]
    pub(crate) fn div0(&self, a: usize, b: usize) -> usize {
        self.division[a * self.size + b] as usize
    }

    pub(crate) fn flat_table(&self) -> &[u16] {
        &self.table
    }

    /// The table as 1-based rows: `rows[a-1][b-1] = a * b`.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(|row| row.iter().map(|&v| v as usize + 1).collect())
            .collect()
    }

    /// Constructed as an affine quandle over `Z_n`.
    pub fn is_affine(&self) -> bool {
        self.tags.affine
    }

    /// `a * (a * b) = b` everywhere.
    pub fn is_involutory(&self) -> bool {
        self.tags.involutory
    }

    /// The left translations act transitively.
    pub fn is_connected(&self) -> bool {
        self.tags.connected
    }

    /// `a * b = b` everywhere.
    pub fn is_trivial(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.op0(a, b) == b))
    }

    /// At least two elements and no congruences besides the diagonal and the
    /// total relation. The 2-element trivial quandle passes this test; it has
    /// no nontrivial knot colorings.
    pub fn is_simple(&self) -> bool {
        *self
            .tags
            .simple
            .get_or_init(|| congruence::every_principal_is_total(self))
    }

    fn orbit_of_first(&self) -> usize {
        let mut seen = vec![false; self.size];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for a in 0..self.size {
                for y in [self.op0(a, x), self.div0(a, x)] {
                    if !seen[y] {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    pub fn record(&self) -> QuandleRecord {
        QuandleRecord {
            name: self.label(),
            size: self.size,
            table: self.table(),
        }
    }
}

impl fmt::Display for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "quandle {} {}",
            self.label().replace(' ', "_"),
            self.size
        )?;
        for row in self.table.chunks(self.size) {
            let line: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Serializable inline form of a quandle: name, size and 1-based rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleRecord {
    pub name: String,
    pub size: usize,
    pub table: Vec<Vec<usize>>,
}

impl QuandleRecord {
    pub fn verify(&self) -> Result<Quandle, QuandleError> {
        if self.table.len() != self.size {
            return Err(QuandleError::NotSquare {
                row: self.table.len(),
                len: self.table.len(),
                size: self.size,
            });
        }
        Ok(verify_axioms(&self.table)?.with_name(self.name.clone()))
    }
}
