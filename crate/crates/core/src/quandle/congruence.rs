use std::collections::HashSet;

use super::{Quandle, QuandleError};

/// Default size guard for full congruence enumeration.
pub const DEFAULT_CONGRUENCE_SIZE_LIMIT: usize = 64;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn from_labels(labels: &[usize]) -> Self {
        UnionFind {
            parent: labels.to_vec(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    /// Merges so that the least element stays the root.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|x| self.find(x)).collect()
    }
}

/// An operation-compatible equivalence on a quandle, stored canonically:
/// every element maps to the least element of its block (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    labels: Vec<usize>,
}

impl Congruence {
    fn from_zero_based(labels: Vec<usize>) -> Self {
        Congruence {
            labels: labels.into_iter().map(|l| l + 1).collect(),
        }
    }

    pub fn diagonal(size: usize) -> Self {
        Congruence {
            labels: (1..=size).collect(),
        }
    }

    pub fn total(size: usize) -> Self {
        Congruence {
            labels: vec![1; size],
        }
    }

    /// Builds from any block labelling (`labels[x-1]` is an arbitrary block
    /// id of element `x`) and checks compatibility with `q`.
    pub fn from_blocks(q: &Quandle, labels: &[usize]) -> Result<Self, QuandleError> {
        if labels.len() != q.size() {
            return Err(QuandleError::ElementOutOfRange {
                element: labels.len(),
                size: q.size(),
            });
        }
        let mut uf = UnionFind::new(q.size());
        for x in 0..labels.len() {
            if let Some(y) = (0..x).find(|&y| labels[y] == labels[x]) {
                uf.union(x, y);
            }
        }
        let c = Congruence::from_zero_based(uf.labels());
        c.check_compatible(q)?;
        Ok(c)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Least element of the block containing `x` (1-based).
    pub fn representative(&self, x: usize) -> usize {
        self.labels[x - 1]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.labels[a - 1] == self.labels[b - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|(i, &l)| l == i + 1)
            .count()
    }

    /// Blocks as sorted 1-based lists, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; self.labels.len() + 1];
        for (i, &l) in self.labels.iter().enumerate() {
            if index[l] == usize::MAX {
                index[l] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[l]].push(i + 1);
        }
        blocks
    }

    pub fn is_total(&self) -> bool {
        self.labels.iter().all(|&l| l == 1)
    }

    pub fn is_diagonal(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l == i + 1)
    }

    /// Exhaustive check: `a ~ a'` and `b ~ b'` imply `a*b ~ a'*b'`.
    pub fn check_compatible(&self, q: &Quandle) -> Result<(), QuandleError> {
        let n = q.size();
        let lab = |x: usize| self.labels[x];
        for a in 0..n {
            for a2 in 0..n {
                if lab(a) != lab(a2) {
                    continue;
                }
                for b in 0..n {
                    for b2 in 0..n {
                        if lab(b) == lab(b2) && lab(q.op0(a, b)) != lab(q.op0(a2, b2)) {
                            return Err(QuandleError::NotACongruence {
                                a: a + 1,
                                b: b + 1,
                                a2: a2 + 1,
                                b2: b2 + 1,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Closes `uf` under left and right translations, starting from the pairs
/// in `pending` (already merged).
fn close(q: &Quandle, uf: &mut UnionFind, mut pending: Vec<(usize, usize)>) {
    let n = q.size();
    while let Some((x, y)) = pending.pop() {
        for z in 0..n {
            for (a, b) in [(q.op0(z, x), q.op0(z, y)), (q.op0(x, z), q.op0(y, z))] {
                if uf.union(a, b) {
                    pending.push((a, b));
                }
            }
        }
    }
}

fn principal0(q: &Quandle, a: usize, b: usize) -> Congruence {
    let mut uf = UnionFind::new(q.size());
    let pending = if uf.union(a, b) {
        vec![(a, b)]
    } else {
        Vec::new()
    };
    close(q, &mut uf, pending);
    Congruence::from_zero_based(uf.labels())
}

/// The least congruence relating `a` and `b` (1-based).
pub fn principal_congruence(q: &Quandle, a: usize, b: usize) -> Congruence {
    principal0(q, a - 1, b - 1)
}

pub(super) fn every_principal_is_total(q: &Quandle) -> bool {
    let n = q.size();
    n >= 2 && (0..n).all(|a| (a + 1..n).all(|b| principal0(q, a, b).is_total()))
}

/// All congruences of `q`, sorted. Refuses quandles larger than
/// [`DEFAULT_CONGRUENCE_SIZE_LIMIT`].
pub fn congruences(q: &Quandle) -> Result<Vec<Congruence>, QuandleError> {
    congruences_with_limit(q, DEFAULT_CONGRUENCE_SIZE_LIMIT)
}

/// All congruences as joins of principal congruences.
pub fn congruences_with_limit(
    q: &Quandle,
    max_size: usize,
) -> Result<Vec<Congruence>, QuandleError> {
    let n = q.size();
    if n > max_size {
        return Err(QuandleError::CongruenceLimit {
            size: n,
            max: max_size,
        });
    }
    let mut principals: Vec<Congruence> = Vec::new();
    let mut seen: HashSet<Congruence> = HashSet::new();
    for a in 0..n {
        for b in a + 1..n {
            let c = principal0(q, a, b);
            if seen.insert(c.clone()) {
                principals.push(c);
            }
        }
    }
    let diagonal = Congruence::diagonal(n);
    seen.insert(diagonal.clone());
    let mut queue: Vec<Congruence> = principals.clone();
    queue.push(diagonal);
    while let Some(theta) = queue.pop() {
        for p in &principals {
            let mut uf =
                UnionFind::from_labels(&theta.labels.iter().map(|l| l - 1).collect::<Vec<_>>());
            for (x, &l) in p.labels.iter().enumerate() {
                uf.union(x, l - 1);
            }
            let joined = Congruence::from_zero_based(uf.labels());
            if seen.insert(joined.clone()) {
                queue.push(joined);
            }
        }
    }
    let mut all: Vec<Congruence> = seen.into_iter().collect();
    all.sort();
    Ok(all)
}

/// A generated subquandle together with its embedding into the parent.
#[derive(Debug, Clone)]
pub struct Subquandle {
    pub quandle: Quandle,
    /// `embedding[i-1]` is the parent element playing the role of `i`.
    pub embedding: Vec<usize>,
}

/// Closure of `generators` (1-based, nonempty) under `*` and left division,
/// re-indexed in increasing parent order.
pub fn subquandle_generated(q: &Quandle, generators: &[usize]) -> Result<Subquandle, QuandleError> {
    let n = q.size();
    if generators.is_empty() {
        return Err(QuandleError::Empty);
    }
    let mut member = vec![false; n];
    let mut elems = Vec::new();
    for &g in generators {
        if g == 0 || g > n {
            return Err(QuandleError::ElementOutOfRange {
                element: g,
                size: n,
            });
        }
        if !member[g - 1] {
            member[g - 1] = true;
            elems.push(g - 1);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = elems.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                for c in [q.op0(a, b), q.div0(a, b)] {
                    if !member[c] {
                        member[c] = true;
                        elems.push(c);
                        changed = true;
                    }
                }
            }
        }
    }
    elems.sort_unstable();
    let mut index = vec![usize::MAX; n];
    for (i, &e) in elems.iter().enumerate() {
        index[e] = i;
    }
    let k = elems.len();
    let table = elems
        .iter()
        .flat_map(|&a| elems.iter().map(move |&b| (a, b)))
        .map(|(a, b)| index[q.op0(a, b)] as u16)
        .collect();
    let mut sub = Quandle::from_flat(k, table)?;
    if let Some(name) = q.name() {
        sub = sub.with_name(format!("sub({name})"));
    }
    Ok(Subquandle {
        quandle: sub,
        embedding: elems.into_iter().map(|e| e + 1).collect(),
    })
}

/// A factor quandle with its projection.
#[derive(Debug, Clone)]
pub struct Factor {
    pub quandle: Quandle,
    /// `projection[x-1]` is the block (1-based, ordered by least element)
    /// containing `x`.
    pub projection: Vec<usize>,
}

/// The quotient `q / theta`. The projection is checked to be a homomorphism.
pub fn factor(q: &Quandle, theta: &Congruence) -> Result<Factor, QuandleError> {
    if theta.size() != q.size() {
        return Err(QuandleError::ElementOutOfRange {
            element: theta.size(),
            size: q.size(),
        });
    }
    theta.check_compatible(q)?;
    let n = q.size();
    let mut block_of_rep = vec![usize::MAX; n + 1];
    let mut reps = Vec::new();
    for (i, &l) in theta.labels().iter().enumerate() {
        if l == i + 1 {
            block_of_rep[l] = reps.len();
            reps.push(i);
        }
    }
    let projection: Vec<usize> = theta.labels().iter().map(|&l| block_of_rep[l]).collect();
    let k = reps.len();
    let table = reps
        .iter()
        .flat_map(|&a| reps.iter().map(move |&b| (a, b)))
        .map(|(a, b)| projection[q.op0(a, b)] as u16)
        .collect();
    let mut quotient = Quandle::from_flat(k, table)?;
    if let Some(name) = q.name() {
        quotient = quotient.with_name(format!("{name}/~"));
    }
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                projection[q.op0(a, b)],
                quotient.op0(projection[a], projection[b]),
                "projection must be a homomorphism"
            );
        }
    }
    Ok(Factor {
        quandle: quotient,
        projection: projection.into_iter().map(|p| p + 1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{dihedral, find_isomorphism, trivial};

    #[test]
    fn dihedral_primes_are_simple() {
        for p in [3, 5, 7] {
            assert!(dihedral(p).unwrap().is_simple(), "dihedral({p})");
        }
    }

    #[test]
    fn dihedral_nine_mod_three() {
        let d9 = dihedral(9).unwrap();
        assert!(!d9.is_simple());
        // element r+1 encodes residue r; blocks are residues mod 3
        let labels: Vec<usize> = (0..9).map(|r| r % 3).collect();
        let theta = Congruence::from_blocks(&d9, &labels).unwrap();
        assert_eq!(theta.block_count(), 3);
        assert!(congruences(&d9).unwrap().contains(&theta));
        let f = factor(&d9, &theta).unwrap();
        assert!(find_isomorphism(&f.quandle, &dihedral(3).unwrap()).is_some());
    }

    #[test]
    fn one_element_has_single_congruence() {
        let q = trivial(1).unwrap();
        let all = congruences(&q).unwrap();
        assert_eq!(all, vec![Congruence::diagonal(1)]);
        assert_eq!(all[0], Congruence::total(1));
    }

    #[test]
    fn trivial_quandle_congruences_are_all_partitions() {
        // Bell numbers 1, 2, 5, 15, 52
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)] {
            assert_eq!(congruences(&trivial(n).unwrap()).unwrap().len(), bell);
        }
        assert!(trivial(2).unwrap().is_simple());
        assert!(!trivial(3).unwrap().is_simple());
    }

    #[test]
    fn incompatible_partition_rejected() {
        let d3 = dihedral(3).unwrap();
        assert!(matches!(
            Congruence::from_blocks(&d3, &[0, 0, 1]),
            Err(QuandleError::NotACongruence { .. })
        ));
    }

    #[test]
    fn subquandles() {
        let d5 = dihedral(5).unwrap();
        let s = subquandle_generated(&d5, &[1]).unwrap();
        assert_eq!(s.quandle.size(), 1);
        assert_eq!(s.embedding, vec![1]);

        let d3 = dihedral(3).unwrap();
        let s = subquandle_generated(&d3, &[1, 2]).unwrap();
        assert_eq!(s.quandle.table(), d3.table());

        // residues {0, 3, 6} of dihedral(9) close up to a copy of dihedral(3)
        let d9 = dihedral(9).unwrap();
        let s = subquandle_generated(&d9, &[1, 4]).unwrap();
        assert_eq!(s.embedding, vec![1, 4, 7]);
        assert!(subquandle_generated(&d9, &[]).is_err());
        assert!(subquandle_generated(&d9, &[10]).is_err());
    }

    #[test]
    fn size_guard() {
        let q = dihedral(9).unwrap();
        assert!(matches!(
            congruences_with_limit(&q, 8),
            Err(QuandleError::CongruenceLimit { size: 9, max: 8 })
        ));
    }
}
