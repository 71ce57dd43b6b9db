//! Fox colorings by modular linear algebra, the Alexander matrix and
//! polynomial, and the knot determinant.

mod fox;
mod polynomial;

use serde::{Deserialize, Serialize};

use crate::knotio::KnotDiagram;
use polynomial::{wide_div_exact, wide_mul, wide_sub, wide_trim, Wide};

pub use fox::{fox_colorable, fox_count};
pub use polynomial::IntPolynomial;

/// Rows indexed by crossings, columns by arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderMatrix {
    rows: Vec<Vec<IntPolynomial>>,
}

impl AlexanderMatrix {
    pub fn rows(&self) -> &[Vec<IntPolynomial>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry at 1-based `(crossing, arc)`.
    pub fn get(&self, crossing: usize, arc: usize) -> &IntPolynomial {
        &self.rows[crossing - 1][arc - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// For each crossing with directed under-arcs `(source, target)`: `1 - t` in
/// the over column, `t` in the source column and `-1` in the target column,
/// summed where columns coincide. Empty for a 0-crossing diagram.
pub fn alexander_matrix(knot: &KnotDiagram) -> AlexanderMatrix {
    let arcs = if knot.crossing_count() == 0 {
        0
    } else {
        knot.arc_count()
    };
    let rows = knot
        .crossings()
        .iter()
        .map(|x| {
            let (source, target) = x.directed();
            let mut row = vec![IntPolynomial::zero(); arcs];
            let mut place = |col: usize, p: IntPolynomial| {
                row[col - 1] = row[col - 1].add(&p);
            };
            place(x.over, IntPolynomial::one_minus_t());
            place(source, IntPolynomial::t());
            place(target, IntPolynomial::constant(-1));
            row
        })
        .collect();
    AlexanderMatrix { rows }
}

/// Fraction-free (Bareiss) determinant with row pivoting over `Z[t]`.
fn bareiss_determinant(mut m: Vec<Vec<Wide>>) -> Wide {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut negate = false;
    let mut prev: Wide = vec![1];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&i| !m[i][k].is_empty()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = wide_sub(&wide_mul(&m[k][k], &m[i][j]), &wide_mul(&m[i][k], &m[k][j]));
                m[i][j] = wide_div_exact(&num, &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        wide_trim(det.into_iter().map(|c| -c).collect())
    } else {
        det
    }
}

/// The normalized Alexander polynomial: the determinant of the matrix with
/// its last row and column removed, up to `±t^k`. `Δ(unknot) = 1`.
pub fn alexander_polynomial(knot: &KnotDiagram) -> IntPolynomial {
    let matrix = alexander_matrix(knot);
    let n = matrix.size();
    if n <= 1 {
        return IntPolynomial::one();
    }
    let minor: Vec<Vec<Wide>> = matrix.rows[..n - 1]
        .iter()
        .map(|row| {
            row[..n - 1]
                .iter()
                .map(|p| p.coefficients().iter().map(|&c| c as i128).collect())
                .collect()
        })
        .collect();
    let det = bareiss_determinant(minor);
    let coefficients = det
        .into_iter()
        .map(|c| i64::try_from(c).expect("Alexander coefficient exceeds i64"))
        .collect();
    IntPolynomial::new(coefficients).normalized()
}

/// `|Δ(-1)|`.
pub fn knot_determinant(knot: &KnotDiagram) -> u128 {
    alexander_polynomial(knot).evaluate(-1).unsigned_abs()
}

/// Is the normalized Alexander polynomial equal to 1?
pub fn alexander_trivial(knot: &KnotDiagram) -> bool {
    alexander_polynomial(knot) == IntPolynomial::one()
}
