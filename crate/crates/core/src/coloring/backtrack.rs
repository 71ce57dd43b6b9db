use super::{directed_triples, Answer, Budget, Clock, Coloring, ColoringError, Mode};
use crate::knotio::KnotDiagram;
use crate::quandle::Quandle;

const UNSET: u16 = u16::MAX;

/// Result of a propagating search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Nontrivial solutions found (all of them in count mode, at most one in
    /// decide mode).
    pub count: u64,
    pub witness: Option<Coloring>,
}

struct Search<'a> {
    q: &'a Quandle,
    crossings: Vec<(usize, usize, usize)>,
    incident: Vec<Vec<usize>>,
    order: Vec<usize>,
    colors: Vec<u16>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    mode: Mode,
    count: u64,
    witness: Option<Coloring>,
    clock: Clock,
}

impl Search<'_> {
    fn assign(&mut self, arc: usize, c: usize) -> bool {
        let cur = self.colors[arc];
        if cur != UNSET {
            return cur as usize == c;
        }
        self.colors[arc] = c as u16;
        self.trail.push(arc);
        self.queue.push(arc);
        true
    }

    /// Forces colors through crossings: over and source fix the target,
    /// over and target fix the source by left division.
    fn propagate(&mut self) -> bool {
        while let Some(arc) = self.queue.pop() {
            for idx in 0..self.incident[arc].len() {
                let (o, s, t) = self.crossings[self.incident[arc][idx]];
                let (co, cs, ct) = (self.colors[o], self.colors[s], self.colors[t]);
                if co == UNSET {
                    continue;
                }
                let ok = if cs != UNSET {
                    self.assign(t, self.q.op0(co as usize, cs as usize))
                } else if ct != UNSET {
                    self.assign(s, self.q.div0(co as usize, ct as usize))
                } else {
                    true
                };
                if !ok {
                    self.queue.clear();
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for &arc in &self.trail[mark..] {
            self.colors[arc] = UNSET;
        }
        self.trail.truncate(mark);
    }

    /// Returns `Ok(true)` to stop the search.
    fn run(&mut self, depth: usize) -> Result<bool, ColoringError> {
        let Some(pos) = (depth..self.order.len()).find(|&i| self.colors[self.order[i]] == UNSET)
        else {
            let first = self.colors[0];
            if self.colors.iter().any(|&c| c != first) {
                self.count += 1;
                if self.mode == Mode::Decide {
                    self.witness = Some(Coloring::from_zero_based(&self.colors));
                    return Ok(true);
                }
            }
            return Ok(false);
        };
        let arc = self.order[pos];
        for c in 0..self.q.size() {
            self.clock.tick()?;
            let mark = self.trail.len();
            if self.assign(arc, c) && self.propagate() && self.run(pos + 1)? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

/// Static branching order: start at arc 1, then prefer arcs that sit over a
/// crossing with a known under-arc, since fixing them forces the other
/// under-arc.
fn branching_order(arcs: usize, crossings: &[(usize, usize, usize)]) -> Vec<usize> {
    let mut known = vec![false; arcs];
    let mut order = Vec::with_capacity(arcs);
    let mut next = Some(0);
    while let Some(arc) = next {
        order.push(arc);
        known[arc] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &(o, s, t) in crossings {
                if known[o] && known[s] != known[t] {
                    known[s] = true;
                    known[t] = true;
                    changed = true;
                }
            }
        }
        next = crossings
            .iter()
            .find(|&&(o, s, t)| !known[o] && (known[s] || known[t]))
            .map(|&(o, _, _)| o)
            .or_else(|| (0..arcs).find(|&a| !known[a]));
    }
    // arcs fixed by propagation are still listed so every arc gets a value
    for a in 0..arcs {
        if !order.contains(&a) {
            order.push(a);
        }
    }
    order
}

/// Propagating backtracking search with an optional pinned `(arc, color)`
/// (1-based).
pub fn search(
    knot: &KnotDiagram,
    q: &Quandle,
    pin: Option<(usize, usize)>,
    mode: Mode,
    budget: &Budget,
) -> Result<SearchResult, ColoringError> {
    let arcs = knot.arc_count();
    let crossings = directed_triples(knot);
    let mut incident = vec![Vec::new(); arcs];
    for (i, &(o, s, t)) in crossings.iter().enumerate() {
        for a in [o, s, t] {
            if !incident[a].contains(&i) {
                incident[a].push(i);
            }
        }
    }
    let order = branching_order(arcs, &crossings);
    let mut st = Search {
        q,
        crossings,
        incident,
        order,
        colors: vec![UNSET; arcs],
        trail: Vec::new(),
        queue: Vec::new(),
        mode,
        count: 0,
        witness: None,
        clock: budget.clock(),
    };
    if let Some((arc, color)) = pin {
        if !(st.assign(arc - 1, color - 1) && st.propagate()) {
            return Ok(SearchResult {
                count: 0,
                witness: None,
            });
        }
    }
    st.run(0)?;
    Ok(SearchResult {
        count: st.count,
        witness: st.witness,
    })
}

pub fn color_backtrack(
    knot: &KnotDiagram,
    q: &Quandle,
    mode: Mode,
    budget: &Budget,
) -> Result<Answer, ColoringError> {
    let r = search(knot, q, None, mode, budget)?;
    Ok(match mode {
        Mode::Decide => Answer::Colorable(r.count > 0),
        Mode::Count => Answer::Count(r.count),
    })
}

/// Nontrivial colorings with arc 1 colored 1.
pub fn count_pinned(
    knot: &KnotDiagram,
    q: &Quandle,
    budget: &Budget,
) -> Result<u64, ColoringError> {
    Ok(search(knot, q, Some((1, 1)), Mode::Count, budget)?.count)
}
