use crate::knotio::KnotDiagram;

/// Prime factorization of `n` as `(p, e)` pairs, `p` ascending.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Fox equations `2 x_over - x_source - x_target = 0`, one row per
/// crossing, columns indexed by 0-based arcs.
pub(crate) fn fox_rows(knot: &KnotDiagram) -> Vec<Vec<i64>> {
    knot.crossings()
        .iter()
        .map(|x| {
            let mut row = vec![0i64; knot.arc_count()];
            row[x.over - 1] += 2;
            row[x.under_in - 1] -= 1;
            row[x.under_out - 1] -= 1;
            row
        })
        .collect()
}

fn valuation(mut x: u128, p: u128, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    while v < cap && x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

fn inverse_mod(a: u128, m: u128) -> u128 {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "not a unit");
    s0.rem_euclid(m as i128) as u128
}

/// `log_p` of the number of solutions of `A x = 0` over `Z / p^e`.
///
/// Row and column operations over the local ring bring `A` to diagonal form
/// `diag(p^v_1 u_1, ...)`, pivoting each time on an entry of minimal
/// valuation; the diagonal entry `p^v u` contributes `p^min(v, e)`
/// solutions and each column without a pivot contributes `p^e`.
pub(crate) fn solution_exponent(rows: &[Vec<i64>], cols: usize, p: u64, e: u32) -> u32 {
    let p = p as u128;
    let modulus = p.pow(e);
    let mut a: Vec<Vec<u128>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| (x as i128).rem_euclid(modulus as i128) as u128)
                .collect()
        })
        .collect();
    let mut exponent = 0;
    let mut pivots = 0;
    let n_rows = a.len();
    for k in 0..n_rows.min(cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, &x) in row.iter().enumerate().skip(k) {
                let v = valuation(x, p, e);
                if v < e && best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, i, j));
                }
            }
            if best.is_some_and(|(bv, _, _)| bv == 0) {
                break;
            }
        }
        let Some((v, pi, pj)) = best else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        let pv = p.pow(v);
        let unit_inv = inverse_mod(a[k][k] / pv % modulus, modulus);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut().filter(|r| r[k] != 0) {
            let factor = row[k] / pv * unit_inv % modulus;
            for (x, &y) in row[k..cols].iter_mut().zip(&pivot_row[k..cols]) {
                *x = (*x + modulus - factor * y % modulus) % modulus;
            }
        }
        // column operations leave the pivot alone in its row
        a[k][k + 1..cols].fill(0);
        exponent += v;
        pivots += 1;
    }
    exponent + e * (cols - pivots) as u32
}

/// Total number of solutions (constant ones included) mod `n`.
pub(crate) fn fox_total(knot: &KnotDiagram, n: u64) -> u128 {
    let rows = fox_rows(knot);
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p as u128).pow(solution_exponent(&rows, knot.arc_count(), p, e)))
        .product()
}

/// The number of nontrivial Fox `n`-colorings: solutions of the Fox system
/// mod `n` minus the `n` constant ones. Zero for `n < 2`.
pub fn fox_count(knot: &KnotDiagram, n: u64) -> u128 {
    if n < 2 {
        return 0;
    }
    fox_total(knot, n) - n as u128
}

pub fn fox_colorable(knot: &KnotDiagram, n: u64) -> bool {
    fox_count(knot, n) > 0
}
