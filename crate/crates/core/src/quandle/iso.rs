use super::Quandle;

/// Quandles up to this size get an exact canonical form.
pub const CANONICAL_FORM_MAX_SIZE: usize = 8;

/// Searches for an isomorphism `f: a -> b`; returns `f` as a 1-based map.
pub fn find_isomorphism(a: &Quandle, b: &Quandle) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() || a.is_connected() != b.is_connected() {
        return None;
    }
    let fixed = |q: &Quandle, x: usize| (0..q.size()).filter(|&y| q.op0(x, y) == y).count();
    let sig_a: Vec<usize> = (0..n).map(|x| fixed(a, x)).collect();
    let sig_b: Vec<usize> = (0..n).map(|x| fixed(b, x)).collect();

    fn extend(
        k: usize,
        a: &Quandle,
        b: &Quandle,
        sig: (&[usize], &[usize]),
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let n = a.size();
        if k == n {
            return true;
        }
        for img in 0..n {
            if used[img] || sig.0[k] != sig.1[img] {
                continue;
            }
            map.push(img);
            let consistent = (0..=k).all(|x| {
                [(x, k), (k, x)].iter().all(|&(p, r)| {
                    let prod = a.op0(p, r);
                    prod > k || map[prod] == b.op0(map[p], map[r])
                })
            });
            if consistent {
                used[img] = true;
                if extend(k + 1, a, b, sig, map, used) {
                    return true;
                }
                used[img] = false;
            }
            map.pop();
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, a, b, (&sig_a, &sig_b), &mut map, &mut used)
        .then(|| map.into_iter().map(|x| x + 1).collect())
}

/// Lexicographically least 0-based table over all relabelings when the
/// quandle has at most [`CANONICAL_FORM_MAX_SIZE`] elements; the table as
/// given otherwise.
pub fn canonical_table(q: &Quandle) -> Vec<u16> {
    let n = q.size();
    if n > CANONICAL_FORM_MAX_SIZE {
        return q.flat_table().to_vec();
    }
    let mut best = q.flat_table().to_vec();
    // sigma: new label -> old element; pi: old element -> new label
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut pi = vec![0usize; n];
    let mut counters = vec![0usize; n];

    let consider = |sigma: &[usize], pi: &mut [usize], best: &mut Vec<u16>| {
        for (new, &old) in sigma.iter().enumerate() {
            pi[old] = new;
        }
        let mut candidate = Vec::new();
        let mut smaller = false;
        for i in 0..n {
            for j in 0..n {
                let v = pi[q.op0(sigma[i], sigma[j])] as u16;
                let idx = i * n + j;
                if !smaller {
                    if v > best[idx] {
                        return;
                    }
                    if v < best[idx] {
                        smaller = true;
                    }
                }
                candidate.push(v);
            }
        }
        if smaller {
            *best = candidate;
        }
    };

    // Heap's algorithm
    consider(&sigma, &mut pi, &mut best);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                sigma.swap(0, i);
            } else {
                sigma.swap(counters[i], i);
            }
            consider(&sigma, &mut pi, &mut best);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    best
}
