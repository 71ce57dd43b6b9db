//! Dowker–Thistlethwaite codes.
//!
//! A DT code only records which passes meet at each crossing and which of
//! them is the over-pass. Crossing signs depend on how the curve sits in the
//! plane, so decoding searches for a planar rotation system of the
//! projection and reads the handedness off it. Codes whose projection has no
//! planar embedding are rejected.

use super::diagram::{KnotDiagram, Sign};
use super::gauss::{GaussCode, GaussToken};
use super::KnotError;

/// Largest code accepted by the embedding search (2^(n-1) rotation systems).
pub const MAX_DT_CROSSINGS: usize = 22;

/// Parses a DT code such as `4 6 2`. Brackets and commas are ignored, so
/// KnotInfo-style `[4, 6, 2]` also works. A positive entry marks the even
/// pass as the under-pass; a negative entry makes it the over-pass.
pub fn parse_dt(text: &str) -> Result<KnotDiagram, KnotError> {
    let cleaned: String = text
        .chars()
        .map(|c| {
            if matches!(c, '[' | ']' | '(' | ')' | ',') {
                ' '
            } else {
                c
            }
        })
        .collect();
    let entries = cleaned
        .split_whitespace()
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| KnotError::InvalidToken(s.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    dt_to_gauss(&entries).map(|g| g.to_diagram())
}

pub fn dt_to_gauss(entries: &[i64]) -> Result<GaussCode, KnotError> {
    let n = entries.len();
    if n == 0 {
        return GaussCode::new(Vec::new());
    }
    if n > MAX_DT_CROSSINGS {
        return Err(KnotError::TooManyCrossings {
            crossings: n,
            max: MAX_DT_CROSSINGS,
        });
    }
    let passes = 2 * n;
    let mut crossing_of = vec![usize::MAX; passes];
    let mut over = vec![false; passes];
    for (i, &e) in entries.iter().enumerate() {
        if e % 2 != 0 {
            return Err(KnotError::OddDtEntry(e));
        }
        let even = e.unsigned_abs() as usize;
        if even == 0 || even > passes {
            return Err(KnotError::DtEntryOutOfRange {
                entry: e,
                max: passes,
            });
        }
        if crossing_of[even - 1] != usize::MAX {
            return Err(KnotError::RepeatedDtEntry(e));
        }
        let odd = 2 * i;
        crossing_of[odd] = i;
        crossing_of[even - 1] = i;
        if e > 0 {
            over[odd] = true;
        } else {
            over[even - 1] = true;
        }
    }
    let signs = realize_signs(&crossing_of, &over).ok_or(KnotError::NotRealizable)?;
    let tokens = (0..passes)
        .map(|p| GaussToken {
            crossing: crossing_of[p] + 1,
            over: over[p],
            sign: signs[crossing_of[p]],
        })
        .collect();
    GaussCode::new(tokens)
}

/// Finds crossing signs for a closed curve given as the sequence of crossings
/// met (`word[p]`, 0-based crossing ids, each appearing twice) and the
/// over/under flag of every pass. Returns `None` when no planar embedding
/// exists.
///
/// Half-edges: pass `p` owns `out(p) = 2p` and `in(p) = 2p + 1`; the edge
/// leaving pass `p` joins `out(p)` to `in(p + 1)`. At a crossing with passes
/// `a < b` the counter-clockwise rotation is either
/// `[out a, out b, in a, in b]` (bit 0) or `[out a, in b, in a, out b]`
/// (bit 1). The first crossing's bit is fixed to 0, which picks one of the
/// two mirror-image embeddings.
pub fn realize_signs(word: &[usize], over: &[bool]) -> Option<Vec<Sign>> {
    let len = word.len();
    let n = len / 2;
    if n == 0 {
        return Some(Vec::new());
    }
    let mut first = vec![usize::MAX; n];
    let mut second = vec![usize::MAX; n];
    for (p, &c) in word.iter().enumerate() {
        if first[c] == usize::MAX {
            first[c] = p;
        } else {
            second[c] = p;
        }
    }
    let out = |p: usize| 2 * p;
    let inn = |p: usize| 2 * p + 1;
    let partner = |h: usize| -> usize {
        let p = h / 2;
        if h.is_multiple_of(2) {
            inn((p + 1) % len)
        } else {
            out((p + len - 1) % len)
        }
    };
    let half_edges = 2 * len;
    let mut next_ccw = vec![0usize; half_edges];
    let mut seen = vec![0u32; half_edges];
    let mut stamp = 0u32;

    for mask in 0u64..(1u64 << (n - 1)) {
        for c in 0..n {
            let (a, b) = (first[c], second[c]);
            let bit = c > 0 && (mask >> (c - 1)) & 1 == 1;
            let rot = if bit {
                [out(a), inn(b), inn(a), out(b)]
            } else {
                [out(a), out(b), inn(a), inn(b)]
            };
            for k in 0..4 {
                next_ccw[rot[k]] = rot[(k + 1) % 4];
            }
        }
        stamp += 1;
        let mut faces = 0;
        for start in 0..half_edges {
            if seen[start] == stamp {
                continue;
            }
            faces += 1;
            let mut h = start;
            while seen[h] != stamp {
                seen[h] = stamp;
                h = next_ccw[partner(h)];
            }
        }
        if faces == n + 2 {
            let signs = (0..n)
                .map(|c| {
                    let bit = c > 0 && (mask >> (c - 1)) & 1 == 1;
                    // The under-strand leaves to the left of the over-strand.
                    let left = if over[first[c]] { !bit } else { bit };
                    if left {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    }
                })
                .collect();
            return Some(signs);
        }
    }
    None
}
