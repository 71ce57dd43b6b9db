use super::{Answer, Budget, ColoringError, Mode};
use crate::knotio::BraidWord;
use crate::quandle::Quandle;

/// Colors a braid closure by choosing the `n` top colors and pushing them
/// through the word:
///
/// * `sigma_i`: `(c_i, c_{i+1}) -> (c_i * c_{i+1}, c_i)`
/// * `sigma_i^-1`: `(c_i, c_{i+1}) -> (c_{i+1}, c_{i+1} \ c_i)`
///
/// A start tuple is a coloring when the bottom tuple equals it; it is
/// nontrivial when some arc along the way carries a second color.
pub fn color_braid(
    braid: &BraidWord,
    q: &Quandle,
    mode: Mode,
    budget: &Budget,
) -> Result<Answer, ColoringError> {
    braid.require_knot()?;
    let n = braid.strands();
    let size = q.size();
    budget.check_assignments(size, n)?;
    let letters: Vec<(usize, bool)> = braid
        .letters()
        .iter()
        .map(|&l| (l.unsigned_abs() as usize - 1, l > 0))
        .collect();
    let mut clock = budget.clock();
    let mut start = vec![0usize; n];
    let mut state = vec![0usize; n];
    let mut count = 0u64;
    loop {
        clock.tick()?;
        state.copy_from_slice(&start);
        let c0 = start[0];
        let mut nontrivial = start.iter().any(|&c| c != c0);
        for &(i, positive) in &letters {
            let (a, b) = (state[i], state[i + 1]);
            if positive {
                state[i] = q.op0(a, b);
                state[i + 1] = a;
            } else {
                state[i] = b;
                state[i + 1] = q.div0(b, a);
            }
            nontrivial |= state[i] != c0 || state[i + 1] != c0;
        }
        if nontrivial && state == start {
            count += 1;
            if mode == Mode::Decide {
                return Ok(Answer::Colorable(true));
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(match mode {
                    Mode::Decide => Answer::Colorable(false),
                    Mode::Count => Answer::Count(count),
                });
            }
            start[i] += 1;
            if start[i] < size {
                break;
            }
            start[i] = 0;
            i += 1;
        }
    }
}
