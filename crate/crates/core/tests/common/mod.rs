#![allow(dead_code)]

use knotcolor::knotio::{KnotDiagram, Sign};
use knotcolor::quandle::{library_generate, GenerationSpec, Library};

/// Counts nontrivial colorings by enumerating every assignment. Reads the
/// crossing rule straight from the crossing fields: the under-arc entering a
/// positive crossing is the source, for a negative crossing the exiting one.
pub fn oracle_count(knot: &KnotDiagram, table: &[Vec<usize>]) -> u64 {
    let q = table.len();
    let arcs = knot.arc_count();
    if knot.crossings().is_empty() {
        return 0;
    }
    let rules: Vec<(usize, usize, usize)> = knot
        .crossings()
        .iter()
        .map(|x| match x.sign {
            Sign::Positive => (x.over - 1, x.under_in - 1, x.under_out - 1),
            Sign::Negative => (x.over - 1, x.under_out - 1, x.under_in - 1),
        })
        .collect();
    let mut f = vec![0usize; arcs];
    let mut count = 0;
    loop {
        if rules.iter().all(|&(o, s, t)| table[f[o]][f[s]] - 1 == f[t])
            && f.iter().any(|&c| c != f[0])
        {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == arcs {
                return count;
            }
            f[i] += 1;
            if f[i] < q {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// `a * b = 2a - b mod n`, 1-based.
pub fn dihedral_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|a| (0..n).map(|b| (2 * a + n - b) % n + 1).collect())
        .collect()
}

pub fn standard_library() -> Library {
    library_generate(&GenerationSpec::standard())
}

pub fn small_library(max_size: usize) -> Library {
    standard_library().filtered(|q| q.size() <= max_size)
}
