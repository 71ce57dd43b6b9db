use std::fmt;

use serde::{Deserialize, Serialize};

/// An integer polynomial in `t`, coefficients lowest degree first, with no
/// trailing zero coefficients (the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coefficients: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// `1 - t`, `t` and `-1`: the Alexander matrix entries.
    pub fn one_minus_t() -> Self {
        IntPolynomial::new(vec![1, -1])
    }

    pub fn t() -> Self {
        IntPolynomial::new(vec![0, 1])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn evaluate(&self, t: i128) -> i128 {
        self.coefficients
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * t + c as i128)
    }

    /// Divides out the largest power of `t` and fixes the sign so the
    /// constant term is positive. Identifies `p` with `±t^k p`.
    pub fn normalized(&self) -> IntPolynomial {
        let shift = self.coefficients.iter().take_while(|&&c| c == 0).count();
        let mut coefficients = self.coefficients[shift..].to_vec();
        if coefficients.first().is_some_and(|&c| c < 0) {
            coefficients.iter_mut().for_each(|c| *c = -*c);
        }
        IntPolynomial { coefficients }
    }

    /// Reverses the coefficient list: `t^deg p(1/t)`.
    pub fn reciprocal(&self) -> IntPolynomial {
        let mut coefficients = self.coefficients.clone();
        coefficients.reverse();
        IntPolynomial { coefficients }.normalized()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coefficients.len().max(other.coefficients.len());
        IntPolynomial::new(
            (0..n)
                .map(|i| {
                    self.coefficients.get(i).copied().unwrap_or(0)
                        + other.coefficients.get(i).copied().unwrap_or(0)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coefficients: Vec<i64>) -> Self {
        IntPolynomial::new(coefficients)
    }
}

/// `1 - 3*t + t^2`; the zero polynomial prints as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (i, magnitude) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => {}
                (_, m) => write!(f, "{m}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Dense polynomial over `i128` used during elimination.
pub(crate) type Wide = Vec<i128>;

pub(crate) fn wide_trim(mut p: Wide) -> Wide {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub(crate) fn wide_mul(a: &[i128], b: &[i128]) -> Wide {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j]
                .checked_add(x.checked_mul(y).expect("coefficient overflow"))
                .expect("coefficient overflow");
        }
    }
    wide_trim(out)
}

pub(crate) fn wide_sub(a: &[i128], b: &[i128]) -> Wide {
    let n = a.len().max(b.len());
    wide_trim(
        (0..n)
            .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
            .collect(),
    )
}

/// Exact division `a / b` in `Z[t]`; panics if `b` does not divide `a`.
pub(crate) fn wide_div_exact(a: &[i128], b: &[i128]) -> Wide {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    assert!(rem.len() > db, "inexact polynomial division");
    let lead = *b.last().unwrap();
    let mut quotient = vec![0i128; rem.len() - db];
    for k in (0..quotient.len()).rev() {
        let c = rem[k + db];
        assert!(c % lead == 0, "inexact polynomial division");
        let q = c / lead;
        quotient[k] = q;
        if q != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[k + j] -= q * bj;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
    wide_trim(quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::new(vec![1, -3, 1]).to_string(),
            "1 - 3*t + t^2"
        );
        assert_eq!(IntPolynomial::new(vec![-2, 0, 5]).to_string(), "-2 + 5*t^2");
        assert_eq!(IntPolynomial::new(vec![0, -1]).to_string(), "-t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::one().to_string(), "1");
    }

    #[test]
    fn normalization() {
        let p = IntPolynomial::new(vec![0, 0, -1, 1, -1]);
        assert_eq!(p.normalized(), IntPolynomial::new(vec![1, -1, 1]));
        assert_eq!(IntPolynomial::new(vec![0, 0, 0]), IntPolynomial::zero());
        assert_eq!(
            IntPolynomial::new(vec![2, -3]).reciprocal(),
            IntPolynomial::new(vec![3, -2])
        );
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::new(vec![1, 1]);
        let b = IntPolynomial::new(vec![1, -1]);
        assert_eq!(a.mul(&b), IntPolynomial::new(vec![1, 0, -1]));
        assert_eq!(a.add(&b), IntPolynomial::constant(2));
        assert_eq!(IntPolynomial::new(vec![1, -1, 1]).evaluate(-1), 3);
        let prod = wide_mul(&[1, -1, 1], &[2, 3]);
        assert_eq!(wide_div_exact(&prod, &[2, 3]), vec![1, -1, 1]);
        assert_eq!(wide_sub(&[1, 2], &[1, 2]), Vec::<i128>::new());
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        wide_div_exact(&[1, 0, 1], &[1, 1]);
    }
}
