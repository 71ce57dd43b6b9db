use super::{directed_triples, Answer, Budget, ColoringError, Mode};
use crate::knotio::KnotDiagram;
use crate::quandle::Quandle;

/// Exhaustive scan of all `q^arcs` assignments. This is the reference
/// oracle for the other engines.
pub fn color_brute(
    knot: &KnotDiagram,
    q: &Quandle,
    mode: Mode,
    budget: &Budget,
) -> Result<Answer, ColoringError> {
    let arcs = knot.arc_count();
    let size = q.size();
    budget.check_assignments(size, arcs)?;
    let crossings = directed_triples(knot);
    let mut clock = budget.clock();
    let mut colors = vec![0usize; arcs];
    let mut count = 0u64;
    loop {
        clock.tick()?;
        let valid = crossings
            .iter()
            .all(|&(o, s, t)| q.op0(colors[o], colors[s]) == colors[t]);
        if valid && colors.iter().any(|&c| c != colors[0]) {
            count += 1;
            if mode == Mode::Decide {
                return Ok(Answer::Colorable(true));
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == arcs {
                return Ok(match mode {
                    Mode::Decide => Answer::Colorable(false),
                    Mode::Count => Answer::Count(count),
                });
            }
            colors[i] += 1;
            if colors[i] < size {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotio::{parse_gauss, KnotDiagram};
    use crate::quandle::dihedral;

    #[test]
    fn trefoil_tricolorings() {
        let k = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let d3 = dihedral(3).unwrap();
        let b = Budget::default();
        assert_eq!(
            color_brute(&k, &d3, Mode::Count, &b).unwrap(),
            Answer::Count(6)
        );
        assert_eq!(
            color_brute(&k, &d3, Mode::Decide, &b).unwrap(),
            Answer::Colorable(true)
        );
    }

    #[test]
    fn unknot_has_none() {
        let d5 = dihedral(5).unwrap();
        let b = Budget::default();
        assert_eq!(
            color_brute(&KnotDiagram::unknot(), &d5, Mode::Count, &b).unwrap(),
            Answer::Count(0)
        );
    }
}
