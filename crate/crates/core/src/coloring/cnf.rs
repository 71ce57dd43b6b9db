use std::fmt::Write as _;

use super::{directed_triples, Coloring, ColoringError};
use crate::knotio::KnotDiagram;
use crate::quandle::Quandle;

/// A CNF formula in DIMACS conventions: variables `1..=num_vars`, literal
/// `v` or `-v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfInstance {
    /// Rejects empty clauses and out-of-range literals.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self, ColoringError> {
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(ColoringError::InvalidCnf(format!(
                    "clause {} is empty",
                    i + 1
                )));
            }
            if let Some(&lit) = clause
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars)
            {
                return Err(ColoringError::InvalidCnf(format!(
                    "literal {lit} in clause {} out of range",
                    i + 1
                )));
            }
        }
        Ok(CnfInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Does `model` (indexed by variable - 1) satisfy every clause?
    pub fn is_satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| model[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }
}

/// Variable for "arc `arc` has color `color`" (both 1-based) with `q`
/// colors: `(arc - 1) * q + color`.
#[inline]
pub fn var_index(arc: usize, color: usize, q: usize) -> i32 {
    ((arc - 1) * q + color) as i32
}

/// Encodes nontrivial colorability of `knot` by `q` as CNF. Clause groups,
/// in order:
///
/// 1. per arc: one at-least-one clause, then pairwise at-most-one clauses;
/// 2. if `nontrivial`: for each color, "not every arc has this color";
/// 3. per crossing, per color pair `(c, d)` row-major:
///    `-v(over, c) | -v(source, d) | v(target, c * d)`;
/// 4. if `symmetry_break`: the unit clause `v(1, 1)`.
///
/// Pinning arc 1 is only sound for connected quandles.
pub fn encode_cnf(
    knot: &KnotDiagram,
    q: &Quandle,
    symmetry_break: bool,
    nontrivial: bool,
) -> Result<CnfInstance, ColoringError> {
    let size = q.size();
    if size < 2 {
        return Err(ColoringError::QuandleTooSmall);
    }
    let arcs = knot.arc_count();
    let v = |arc: usize, color: usize| var_index(arc, color, size);
    let mut clauses = Vec::new();

    for arc in 1..=arcs {
        clauses.push((1..=size).map(|c| v(arc, c)).collect());
        for c in 1..=size {
            for d in c + 1..=size {
                clauses.push(vec![-v(arc, c), -v(arc, d)]);
            }
        }
    }
    if nontrivial {
        for c in 1..=size {
            clauses.push((1..=arcs).map(|arc| -v(arc, c)).collect());
        }
    }
    for (o, s, t) in directed_triples(knot) {
        for c in 1..=size {
            for d in 1..=size {
                clauses.push(vec![-v(o + 1, c), -v(s + 1, d), v(t + 1, q.op(c, d))]);
            }
        }
    }
    if symmetry_break {
        clauses.push(vec![v(1, 1)]);
    }
    CnfInstance::new(arcs * size, clauses)
}

/// Reads the coloring off a model of an [`encode_cnf`] instance.
pub fn decode_model(model: &[bool], arcs: usize, q: usize) -> Coloring {
    let colors = (1..=arcs)
        .map(|arc| {
            (1..=q)
                .find(|&c| model[var_index(arc, c, q) as usize - 1])
                .expect("at-least-one clause satisfied")
        })
        .collect();
    Coloring::new(colors)
}

/// DIMACS text: `p cnf <vars> <clauses>` then one `0`-terminated clause per
/// line, in encoding order.
pub fn emit_dimacs(instance: &CnfInstance) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "p cnf {} {}",
        instance.num_vars,
        instance.clauses.len()
    )
    .unwrap();
    for clause in &instance.clauses {
        for lit in clause {
            write!(out, "{lit} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS CNF (comment lines start with `c`).
pub fn parse_dimacs(text: &str) -> Result<CnfInstance, ColoringError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(ColoringError::InvalidCnf(format!("bad header `{line}`")));
            }
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| ColoringError::InvalidCnf(format!("bad header `{line}`")))
            };
            header = Some((parse(parts[2])?, parse(parts[3])?));
            continue;
        }
        if header.is_none() {
            return Err(ColoringError::InvalidCnf("clause before header".into()));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| ColoringError::InvalidCnf(format!("bad literal `{tok}`")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let (vars, count) = header.ok_or_else(|| ColoringError::InvalidCnf("missing header".into()))?;
    if count != clauses.len() {
        return Err(ColoringError::InvalidCnf(format!(
            "header announces {count} clauses, found {}",
            clauses.len()
        )));
    }
    CnfInstance::new(vars, clauses)
}
