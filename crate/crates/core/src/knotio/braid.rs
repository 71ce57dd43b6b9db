use std::fmt;
use std::str::FromStr;

use super::diagram::{KnotDiagram, Sign};
use super::gauss::{GaussCode, GaussToken};
use super::KnotError;

/// A braid word on `strands` strands. Letter `k` stands for the generator
/// `sigma_|k|` with the sign of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, KnotError> {
        if strands == 0 {
            return Err(KnotError::NoStrands);
        }
        for &l in &letters {
            if l == 0 {
                return Err(KnotError::ZeroLetter);
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(KnotError::GeneratorOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Where each starting position (0-based) ends up after the whole word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in at.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        at
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    pub(crate) fn require_knot(&self) -> Result<(), KnotError> {
        match self.components() {
            1 => Ok(()),
            components => Err(KnotError::NotAKnot { components }),
        }
    }

    /// Splices `sigma_i sigma_i^-1` in front of letter `pos`.
    pub fn insert_r2(&self, i: usize, pos: usize) -> Result<BraidWord, KnotError> {
        if i == 0 || i >= self.strands {
            return Err(KnotError::GeneratorOutOfRange {
                letter: i as i32,
                strands: self.strands,
            });
        }
        if pos > self.letters.len() {
            return Err(KnotError::PositionOutOfRange {
                pos,
                len: self.letters.len(),
            });
        }
        let mut letters = self.letters.clone();
        letters.splice(pos..pos, [i as i32, -(i as i32)]);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Adds a strand and appends `sigma_n` where `n` is the old strand count.
    pub fn markov_stabilize(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(self.strands as i32);
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Conjugation by moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// Signed Gauss code of the closure, read along the strand that starts
    /// at the top of position 1. Crossing `t` is the `t`-th letter.
    ///
    /// For `sigma_i` the strand moving from position `i` to `i+1` passes
    /// over; for `sigma_i^-1` the strand moving from `i+1` to `i` does.
    pub fn to_gauss(&self) -> Result<GaussCode, KnotError> {
        self.require_knot()?;
        let mut tokens = Vec::with_capacity(2 * self.letters.len());
        let mut pos = 0usize;
        loop {
            for (t, &l) in self.letters.iter().enumerate() {
                let i = l.unsigned_abs() as usize - 1;
                if pos != i && pos != i + 1 {
                    continue;
                }
                let sign = if l > 0 {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                let moving_right = pos == i;
                let over = moving_right == (l > 0);
                tokens.push(GaussToken {
                    crossing: t + 1,
                    over,
                    sign,
                });
                pos = if moving_right { i + 1 } else { i };
            }
            if pos == 0 {
                break;
            }
        }
        GaussCode::new(tokens)
    }
}

impl FromStr for BraidWord {
    type Err = KnotError;

    /// `<n>: <w1> <w2> ...`, for example `2: 1 1 1`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| KnotError::InvalidToken(text.trim().to_string()))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| KnotError::InvalidToken(head.trim().to_string()))?;
        let letters = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i32>()
                    .map_err(|_| KnotError::InvalidToken(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

pub fn parse_braid(text: &str) -> Result<BraidWord, KnotError> {
    text.parse()
}

/// `(sigma_1 sigma_2 ... sigma_{p-1})^q` on `p` strands.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord, KnotError> {
    if p < 2 {
        return Err(KnotError::TorusParameters { p, q });
    }
    let letters = (0..q).flat_map(|_| 1..p as i32).collect();
    BraidWord::new(p, letters)
}

/// Diagram of the braid closure; the closure must be a knot.
pub fn braid_to_diagram(b: &BraidWord) -> Result<KnotDiagram, KnotError> {
    Ok(b.to_gauss()?.to_diagram())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let b = parse_braid("2: 1 1 1").unwrap();
        assert_eq!(b.strands(), 2);
        assert_eq!(b.letters(), &[1, 1, 1]);
        assert!(b.is_knot());

        let b = parse_braid("3: 1 2 1 2").unwrap();
        // (1 2)(2 3)(1 2)(2 3) is a 3-cycle
        assert_eq!(b.components(), 1);

        assert!(matches!(
            parse_braid("2: 3"),
            Err(KnotError::GeneratorOutOfRange {
                letter: 3,
                strands: 2
            })
        ));
        assert!(matches!(parse_braid("2: 0"), Err(KnotError::ZeroLetter)));
        assert!(matches!(
            parse_braid("2: x"),
            Err(KnotError::InvalidToken(_))
        ));
        assert!(matches!(
            parse_braid("2 1 1"),
            Err(KnotError::InvalidToken(_))
        ));
        assert!(matches!(parse_braid("0:"), Err(KnotError::NoStrands)));
        assert_eq!(parse_braid("1:").unwrap().len(), 0);
    }

    #[test]
    fn torus_words() {
        assert_eq!(torus_braid(2, 3).unwrap().to_string(), "2: 1 1 1");
        assert_eq!(
            torus_braid(3, 4).unwrap().letters(),
            &[1, 2, 1, 2, 1, 2, 1, 2]
        );
        let t = torus_braid(2, 11).unwrap();
        assert_eq!(t.letters(), &[1; 11]);
        assert!(torus_braid(1, 3).is_err());
    }

    #[test]
    fn trefoil_closure_matches_gauss_code() {
        let code = torus_braid(2, 3).unwrap().to_gauss().unwrap();
        assert_eq!(code.to_string(), "O1+ U2+ O3+ U1+ O2+ U3+");
    }

    #[test]
    fn closure_errors_and_unknot() {
        assert!(matches!(
            braid_to_diagram(&parse_braid("3: 1").unwrap()),
            Err(KnotError::NotAKnot { components: 2 })
        ));
        let d = braid_to_diagram(&parse_braid("1:").unwrap()).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.arc_count(), 1);
    }

    #[test]
    fn moves() {
        let b = parse_braid("2: 1 1 1").unwrap();
        assert_eq!(b.insert_r2(1, 0).unwrap().to_string(), "2: 1 -1 1 1 1");
        assert!(matches!(
            b.insert_r2(1, 4),
            Err(KnotError::PositionOutOfRange { pos: 4, len: 3 })
        ));
        assert!(b.insert_r2(2, 0).is_err());
        assert_eq!(b.markov_stabilize().to_string(), "3: 1 1 1 2");
        assert_eq!(
            parse_braid("1:").unwrap().markov_stabilize().to_string(),
            "2: 1"
        );
    }

    #[test]
    fn torus_2q_diagram_sizes() {
        for q in (3..=15).step_by(2) {
            let d = braid_to_diagram(&torus_braid(2, q).unwrap()).unwrap();
            assert_eq!(d.crossing_count(), q);
            assert_eq!(d.arc_count(), q);
        }
    }
}
