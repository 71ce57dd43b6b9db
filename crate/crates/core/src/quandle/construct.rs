use super::{Quandle, QuandleError, MAX_QUANDLE_SIZE};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_size(n: usize) -> Result<(), QuandleError> {
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    if n > MAX_QUANDLE_SIZE {
        return Err(QuandleError::TooLarge {
            size: n,
            max: MAX_QUANDLE_SIZE,
        });
    }
    Ok(())
}

/// The dihedral (Fox) quandle on `Z_n`: `a * b = 2a - b mod n`. Residue `r`
/// is element `r + 1`.
pub fn dihedral(n: usize) -> Result<Quandle, QuandleError> {
    check_size(n)?;
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((2 * a + n - b) % n) as u16))
        .collect();
    Ok(Quandle::from_flat(n, table)?
        .with_affine_tag()
        .with_name(format!("dihedral({n})")))
}

/// The affine quandle on `Z_n` with automorphism `x -> t x`:
/// `a * b = (1 - t) a + t b mod n`.
pub fn affine(n: usize, t: usize) -> Result<Quandle, QuandleError> {
    check_size(n)?;
    let (nn, tt) = (n as u64, (t % n) as u64);
    if gcd(tt, nn) != 1 {
        return Err(QuandleError::NotAutomorphism { n: nn, t: t as u64 });
    }
    let one_minus_t = (1 + nn - tt) % nn;
    let table = (0..nn)
        .flat_map(|a| (0..nn).map(move |b| ((one_minus_t * a + tt * b) % nn) as u16))
        .collect();
    Ok(Quandle::from_flat(n, table)?
        .with_affine_tag()
        .with_name(format!("affine({n},{t})")))
}

/// The trivial quandle `a * b = b` on `n` elements.
pub fn trivial(n: usize) -> Result<Quandle, QuandleError> {
    check_size(n)?;
    let table = (0..n).flat_map(|_| (0..n).map(|b| b as u16)).collect();
    Ok(Quandle::from_flat(n, table)?.with_name(format!("trivial({n})")))
}

/// A finite group given by a verified Cayley table (0-based internally).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    name: String,
    labels: Vec<String>,
}

impl Group {
    /// Verifies closure, associativity, identity and inverses of a 1-based
    /// Cayley table.
    pub fn from_table(name: &str, rows: &[Vec<usize>]) -> Result<Group, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::InvalidGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuandleError::InvalidGroup(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for &v in row {
                if v == 0 || v > n {
                    return Err(QuandleError::InvalidGroup(format!(
                        "entry {v} outside 1..={n}"
                    )));
                }
                table.push(v - 1);
            }
        }
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Group::from_flat(name, n, table, labels)
    }

    fn from_flat(
        name: &str,
        n: usize,
        table: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Group, QuandleError> {
        let m = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(QuandleError::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| QuandleError::InvalidGroup("no identity element".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| m(a, b) == identity && m(b, a) == identity)
                    .ok_or_else(|| {
                        QuandleError::InvalidGroup(format!("element {} has no inverse", a + 1))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Group {
            order: n,
            table,
            identity,
            inverse,
            name: name.to_string(),
            labels,
        })
    }

    /// The symmetric group on `k` letters; elements are the permutations in
    /// lexicographic order of their one-line notation.
    pub fn symmetric(k: usize) -> Group {
        assert!(
            (1..=6).contains(&k),
            "symmetric groups supported for 1..=6 letters"
        );
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            perms.push(current.clone());
            // next lexicographic permutation
            let Some(i) = (0..k.saturating_sub(1))
                .rev()
                .find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let n = perms.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                // (a b)(x) = a(b(x))
                let prod: Vec<usize> = (0..k).map(|x| perms[a][perms[b][x]]).collect();
                table[a * n + b] = index(&prod);
            }
        }
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Group::from_flat(&format!("S{k}"), n, table, labels).expect("symmetric group table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// 1-based identity element.
    pub fn identity(&self) -> usize {
        self.identity + 1
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    /// 1-based conjugacy class of `rep`, sorted.
    pub fn conjugacy_class(&self, rep: usize) -> Result<Vec<usize>, QuandleError> {
        if rep == 0 || rep > self.order {
            return Err(QuandleError::ElementOutOfRange {
                element: rep,
                size: self.order,
            });
        }
        let mut class: Vec<usize> = (0..self.order)
            .map(|g| self.conjugate(g, rep - 1) + 1)
            .collect();
        class.sort_unstable();
        class.dedup();
        Ok(class)
    }

    /// All conjugacy classes as sorted 1-based element lists, ordered by
    /// their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 1..=self.order {
            if seen[x - 1] {
                continue;
            }
            let class = self.conjugacy_class(x).expect("in range");
            for &y in &class {
                seen[y - 1] = true;
            }
            classes.push(class);
        }
        classes
    }

    fn label(&self, x: usize) -> &str {
        &self.labels[x - 1]
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// The conjugation quandle on the class of `rep` (1-based group element):
/// `a * b = a b a^-1`. Quandle elements follow the sorted class order.
pub fn conjugation(group: &Group, rep: usize) -> Result<Quandle, QuandleError> {
    let class = group.conjugacy_class(rep)?;
    let n = class.len();
    let position = |g: usize| {
        class
            .binary_search(&(g + 1))
            .expect("class closed under conjugation")
    };
    let mut table = Vec::with_capacity(n * n);
    for &a in &class {
        for &b in &class {
            table.push(position(group.conjugate(a - 1, b - 1)) as u16);
        }
    }
    Ok(Quandle::from_flat(n, table)?.with_name(format!(
        "conj({},{})",
        group.name(),
        group.label(rep)
    )))
}
