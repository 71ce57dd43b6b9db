//! A small DPLL solver: two watched literals, unit propagation to fixpoint,
//! branching on the lowest unassigned variable (true first) and
//! chronological backtracking. Deterministic for a given instance.

use super::{Budget, CnfInstance, ColoringError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    /// `model[v - 1]` is the value of variable `v`.
    Sat(Vec<bool>),
    Unsat,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Sat(_))
    }
}

pub fn sat_decide(instance: &CnfInstance) -> SatResult {
    sat_decide_with_budget(instance, &Budget::unlimited()).expect("unlimited budget")
}

/// As [`sat_decide`], counting one node per decision and per propagated
/// literal against `budget`.
pub fn sat_decide_with_budget(
    instance: &CnfInstance,
    budget: &Budget,
) -> Result<SatResult, ColoringError> {
    let mut solver = match Solver::new(instance) {
        Some(s) => s,
        None => return Ok(SatResult::Unsat),
    };
    let result = solver.solve(budget)?;
    if let SatResult::Sat(model) = &result {
        assert!(
            instance.is_satisfied_by(model),
            "solver produced a non-model"
        );
    }
    Ok(result)
}

// Literal encoding: variable v (0-based) true is 2v, false is 2v + 1.
type Lit = usize;

fn encode(lit: i32) -> Lit {
    let v = lit.unsigned_abs() as usize - 1;
    2 * v + usize::from(lit < 0)
}

const UNASSIGNED: u8 = 2;

struct Solver {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<usize>>,
    values: Vec<u8>,
    trail: Vec<Lit>,
    head: usize,
    units: Vec<Lit>,
}

struct Decision {
    trail_pos: usize,
    lit: Lit,
    flipped: bool,
}

impl Solver {
    /// `None` if the normalized instance already contains an empty clause.
    fn new(instance: &CnfInstance) -> Option<Solver> {
        let num_vars = instance.num_vars();
        let mut clauses = Vec::new();
        let mut units = Vec::new();
        for raw in instance.clauses() {
            let mut clause: Vec<Lit> = raw.iter().map(|&l| encode(l)).collect();
            clause.sort_unstable();
            clause.dedup();
            if clause.windows(2).any(|w| w[0] ^ 1 == w[1]) {
                continue;
            }
            match clause.len() {
                0 => return None,
                1 => units.push(clause[0]),
                _ => clauses.push(clause),
            }
        }
        let mut watches = vec![Vec::new(); 2 * num_vars];
        for (i, c) in clauses.iter().enumerate() {
            watches[c[0]].push(i);
            watches[c[1]].push(i);
        }
        Some(Solver {
            num_vars,
            clauses,
            watches,
            values: vec![UNASSIGNED; num_vars],
            trail: Vec::new(),
            head: 0,
            units,
        })
    }

    #[inline]
    fn value(&self, lit: Lit) -> u8 {
        match self.values[lit >> 1] {
            UNASSIGNED => UNASSIGNED,
            v => v ^ (lit as u8 & 1),
        }
    }

    fn assign(&mut self, lit: Lit) {
        self.values[lit >> 1] = 1 ^ (lit as u8 & 1);
        self.trail.push(lit);
    }

    /// Returns false on conflict.
    fn propagate(&mut self, clock: &mut super::Clock) -> Result<bool, ColoringError> {
        while self.head < self.trail.len() {
            let lit = self.trail[self.head];
            self.head += 1;
            clock.tick()?;
            let falsified = lit ^ 1;
            let mut watching = std::mem::take(&mut self.watches[falsified]);
            let mut i = 0;
            let mut conflict = false;
            while i < watching.len() {
                let ci = watching[i];
                let clause = &mut self.clauses[ci];
                if clause[0] == falsified {
                    clause.swap(0, 1);
                }
                let other = clause[0];
                if self.values[other >> 1] != UNASSIGNED
                    && self.values[other >> 1] ^ (other as u8 & 1) == 1
                {
                    i += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..clause.len() {
                    let cand = clause[k];
                    let v = self.values[cand >> 1];
                    if v == UNASSIGNED || v ^ (cand as u8 & 1) == 1 {
                        clause.swap(1, k);
                        self.watches[cand].push(ci);
                        watching.swap_remove(i);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                match self.value(other) {
                    UNASSIGNED => {
                        self.assign(other);
                        i += 1;
                    }
                    _ => {
                        conflict = true;
                        break;
                    }
                }
            }
            self.watches[falsified] = watching;
            if conflict {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn backtrack_to(&mut self, pos: usize) {
        for &lit in &self.trail[pos..] {
            self.values[lit >> 1] = UNASSIGNED;
        }
        self.trail.truncate(pos);
        self.head = pos;
    }

    fn solve(&mut self, budget: &Budget) -> Result<SatResult, ColoringError> {
        let mut clock = budget.clock();
        for lit in std::mem::take(&mut self.units) {
            match self.value(lit) {
                UNASSIGNED => self.assign(lit),
                1 => {}
                _ => return Ok(SatResult::Unsat),
            }
        }
        let mut decisions: Vec<Decision> = Vec::new();
        let mut next_var = 0;
        loop {
            if self.propagate(&mut clock)? {
                while next_var < self.num_vars && self.values[next_var] != UNASSIGNED {
                    next_var += 1;
                }
                if next_var == self.num_vars {
                    let model = self.values.iter().map(|&v| v == 1).collect();
                    return Ok(SatResult::Sat(model));
                }
                let lit = 2 * next_var;
                decisions.push(Decision {
                    trail_pos: self.trail.len(),
                    lit,
                    flipped: false,
                });
                self.assign(lit);
            } else {
                loop {
                    let Some(d) = decisions.pop() else {
                        return Ok(SatResult::Unsat);
                    };
                    self.backtrack_to(d.trail_pos);
                    next_var = d.lit >> 1;
                    if !d.flipped {
                        let lit = d.lit ^ 1;
                        decisions.push(Decision {
                            trail_pos: d.trail_pos,
                            lit,
                            flipped: true,
                        });
                        self.assign(lit);
                        break;
                    }
                }
            }
        }
    }
}
