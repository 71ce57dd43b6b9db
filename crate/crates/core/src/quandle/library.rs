use std::collections::HashMap;
use std::fs;
use std::path::Path;

use thiserror::Error;

use super::construct::{affine, conjugation, dihedral, Group};
use super::iso::canonical_table;
use super::{verify_axioms, Quandle, QuandleError};

#[derive(Debug, Error)]
pub enum LibraryError {
    #[error("cannot read library: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// A record that parsed but failed the quandle axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LibraryRejection {
    pub record: usize,
    pub name: String,
    pub error: QuandleError,
}

/// Verified quandles in a stable order: by size, then by canonical table
/// (exact isomorph rejection up to size 8, plain table comparison above).
#[derive(Debug, Clone, Default)]
pub struct Library {
    quandles: Vec<Quandle>,
}

impl Library {
    /// Deduplicates (first occurrence wins) and sorts.
    pub fn from_quandles(quandles: impl IntoIterator<Item = Quandle>) -> Library {
        let mut keyed: Vec<((usize, Vec<u16>), Quandle)> = Vec::new();
        let mut seen: HashMap<(usize, Vec<u16>), ()> = HashMap::new();
        for q in quandles {
            let key = (q.size(), canonical_table(&q));
            if seen.insert(key.clone(), ()).is_none() {
                keyed.push((key, q));
            }
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        Library {
            quandles: keyed.into_iter().map(|(_, q)| q).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.quandles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quandles.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Quandle> {
        self.quandles.get(index)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Quandle> {
        self.quandles.iter()
    }

    pub fn as_slice(&self) -> &[Quandle] {
        &self.quandles
    }

    /// Keeps quandles matching `keep`, preserving order.
    pub fn filtered(&self, keep: impl Fn(&Quandle) -> bool) -> Library {
        Library {
            quandles: self.quandles.iter().filter(|q| keep(q)).cloned().collect(),
        }
    }

    /// The library text format.
    pub fn to_text(&self) -> String {
        self.quandles
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl<'a> IntoIterator for &'a Library {
    type Item = &'a Quandle;
    type IntoIter = std::slice::Iter<'a, Quandle>;

    fn into_iter(self) -> Self::IntoIter {
        self.quandles.iter()
    }
}

/// Parses the library text format:
///
/// ```text
/// # comment
/// quandle dihedral(3) 3
/// 1 3 2
/// 3 2 1
/// 2 1 3
/// ```
///
/// Records are separated by blank lines. Records failing the axioms are
/// skipped and reported; structural errors abort.
pub fn library_parse(text: &str) -> Result<(Library, Vec<LibraryRejection>), LibraryError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    let mut record = 0;
    while let Some((line, header)) = lines.next() {
        record += 1;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "quandle" {
            return Err(LibraryError::Malformed {
                line,
                message: format!("expected `quandle <name> <size>`, got `{header}`"),
            });
        }
        let name = parts[1].to_string();
        let size: usize = parts[2].parse().map_err(|_| LibraryError::Malformed {
            line,
            message: format!("invalid size `{}`", parts[2]),
        })?;
        if size == 0 {
            return Err(LibraryError::Malformed {
                line,
                message: "size must be positive".into(),
            });
        }
        let mut rows = Vec::with_capacity(size);
        for _ in 0..size {
            let (row_line, row) = lines.next().ok_or_else(|| LibraryError::Malformed {
                line,
                message: format!("record `{name}` ends before {size} rows"),
            })?;
            let values = row
                .split_whitespace()
                .map(|v| v.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| LibraryError::Malformed {
                    line: row_line,
                    message: format!("non-integer entry in `{row}`"),
                })?;
            if values.len() != size {
                return Err(LibraryError::Malformed {
                    line: row_line,
                    message: format!("expected {size} entries, got {}", values.len()),
                });
            }
            rows.push(values);
        }
        match verify_axioms(&rows) {
            Ok(q) => accepted.push(q.with_name(name)),
            Err(error) => rejected.push(LibraryRejection {
                record,
                name,
                error,
            }),
        }
    }
    Ok((Library::from_quandles(accepted), rejected))
}

pub fn library_load(
    path: impl AsRef<Path>,
) -> Result<(Library, Vec<LibraryRejection>), LibraryError> {
    library_parse(&fs::read_to_string(path)?)
}

/// Families to generate.
#[derive(Debug, Clone, Default)]
pub struct GenerationSpec {
    /// `dihedral(p)` for odd primes `p <= bound`.
    pub dihedral_primes_up_to: Option<usize>,
    /// Connected `affine(n, t)` for `2 <= n <= bound`.
    pub connected_affine_up_to: Option<usize>,
    /// Conjugation quandles on every conjugacy class with at least two
    /// elements of each group.
    pub conjugation_groups: Vec<Group>,
}

impl GenerationSpec {
    pub fn dihedral_primes(bound: usize) -> Self {
        GenerationSpec {
            dihedral_primes_up_to: Some(bound),
            ..Default::default()
        }
    }

    /// Odd-prime dihedral quandles up to 13, connected affine quandles over
    /// `Z_n` for `n <= 13`, and the conjugation quandles of `S3` and `S4`.
    pub fn standard() -> Self {
        GenerationSpec {
            dihedral_primes_up_to: Some(13),
            connected_affine_up_to: Some(13),
            conjugation_groups: vec![Group::symmetric(3), Group::symmetric(4)],
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn library_generate(spec: &GenerationSpec) -> Library {
    let mut out = Vec::new();
    if let Some(bound) = spec.dihedral_primes_up_to {
        for p in (3..=bound).filter(|&p| is_prime(p)) {
            out.push(dihedral(p).expect("valid size"));
        }
    }
    if let Some(bound) = spec.connected_affine_up_to {
        for n in 2..=bound {
            for t in 1..n {
                if gcd(t, n) == 1 && gcd((n + 1 - t) % n, n) == 1 {
                    out.push(affine(n, t).expect("t is a unit"));
                }
            }
        }
    }
    for g in &spec.conjugation_groups {
        for class in g.conjugacy_classes() {
            if class.len() >= 2 {
                out.push(conjugation(g, class[0]).expect("valid representative"));
            }
        }
    }
    Library::from_quandles(out)
}
