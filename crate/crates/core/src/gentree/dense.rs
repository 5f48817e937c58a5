//! Dense per-class tables. Each level costs `O(n^2)` big-integer additions
//! (a few classes need `O(n)` multiplications on top).

use num_bigint::BigUint;
use num_traits::Zero;

use super::ClassId;
use crate::combinat::catalan;

type Row = Vec<BigUint>;
type Grid = Vec<Row>;

fn zeros(n: usize) -> Row {
    vec![BigUint::zero(); n]
}

fn grid(rows: usize, cols: usize) -> Grid {
    vec![zeros(cols); rows]
}

fn sum(v: &[BigUint]) -> BigUint {
    v.iter().sum()
}

/// `out[i] = v[i] + v[i+1] + ...`, with one trailing zero.
fn suffix_sums(v: &[BigUint]) -> Row {
    let mut out = zeros(v.len() + 1);
    for i in (0..v.len()).rev() {
        out[i] = &out[i + 1] + &v[i];
    }
    out
}

/// `I_0 .. I_{n_max}` for `class`.
pub fn count_class(class: ClassId, n_max: usize) -> Vec<BigUint> {
    use ClassId::*;
    match class {
        C1176 | C1253 | C1016 => right_family(class, n_max),
        C830 => count_830(n_max),
        C2106 => count_2106(n_max),
        C663A => count_663a(n_max),
        C1420 => count_1420(n_max),
        C1833A | C733 => count_1833a_733(class, n_max),
        C214 => count_214(n_max),
        C1509 => count_1509(n_max),
        C1953A => count_1953a(n_max),
        C759 | C247 => count_commit(class, n_max),
    }
}

fn right_family(class: ClassId, n_max: usize) -> Vec<BigUint> {
    let width = n_max + 2;
    let mut a = zeros(width);
    a[0] = BigUint::from(1u32);
    let (mut b, mut c, mut d, mut e) = (zeros(width), zeros(width), zeros(width), zeros(width));
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let (mut a2, mut b2, mut c2, mut d2, mut e2) = (zeros(width), zeros(width), zeros(width), zeros(width), zeros(width));
        let mut prefix = BigUint::zero();
        for i in 0..=n {
            prefix += &a[i];
            a2[i] += &prefix;
            if i < n {
                b2[i] += &prefix * BigUint::from(n - i);
            }
        }
        let above = suffix_sums(&a[..=n]);
        for i in 0..n {
            e2[i] += &above[i + 1];
        }
        for k in 0..=n {
            b2[k] += &b[k];
        }
        match class {
            ClassId::C1176 => {
                let above_d = suffix_sums(&d[..=n]);
                let above_e = suffix_sums(&e[..=n]);
                for k in 0..=n {
                    c2[k] += &b[k];
                    d2[k] += &c[k] + &d[k];
                    e2[k] += &above_d[k + 1] + &above_e[k + 1];
                }
            }
            ClassId::C1253 => {
                for k in 0..=n {
                    c2[k] += &b[k] + &c[k];
                    d2[k] += &c[k] + (&d[k] << 1u32);
                    e2[k] += &e[k];
                }
            }
            ClassId::C1016 => {
                for k in 0..=n {
                    c2[k] += &b[k];
                    d2[k] += &c[k] + &d[k];
                }
            }
            _ => unreachable!(),
        }
        (a, b, c, d, e) = (a2, b2, c2, d2, e2);
        out.push(sum(&a) + sum(&d) + sum(&e));
    }
    out
}

fn count_830(n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let mut s = grid(w, w);
    let mut t = grid(w, w);
    s[0][0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut s2 = grid(w, w);
        let mut t2 = grid(w, w);
        for h in 0..=n {
            let mut row = BigUint::zero();
            let mut ps = BigUint::zero();
            let mut pt = BigUint::zero();
            for k in 0..=n {
                let both = &s[h][k] + &t[h][k];
                row += &both;
                s2[h][k] += both;
                // t-children (h, i): from s with k < i, from t with k <= i.
                pt += &t[h][k];
                if k < h {
                    t2[h][k] += &ps + &pt;
                }
                ps += &s[h][k];
            }
            for r in &mut s2[h + 1..=n] {
                r[h] += &row;
            }
        }
        (s, t) = (s2, t2);
        out.push(s.iter().map(|r| sum(r)).sum::<BigUint>() + t.iter().map(|r| sum(r)).sum::<BigUint>());
    }
    out
}

fn count_2106(n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let mut p = grid(w, w);
    let mut q = grid(w, w);
    p[0][0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut p2 = grid(w, w);
        let mut q2 = grid(w, w);
        // p-children move along the diagonal d = h - k.
        for d in 0..=n {
            let mut run_p = BigUint::zero();
            // (i, i-d)_p collects p at (h, h-d) with h <= i and q at
            // (h, h-d+1) with h <= i-1.
            let mut run_q = if d >= 1 { q[d - 1][0].clone() } else { BigUint::zero() };
            for i in d..=n {
                run_p += &p[i][i - d];
                p2[i][i - d] += &run_p + &run_q;
                run_q += &q[i][i - d + 1];
            }
        }
        for h in 0..=n {
            let above_p = suffix_sums(&p[h][..=n + 1]);
            let above_q = suffix_sums(&q[h][..=n + 1]);
            for i in 0..=n {
                q2[h][i] += &above_p[i + 1] + &above_q[i + 1];
            }
        }
        (p, q) = (p2, q2);
        out.push(p.iter().map(|r| sum(r)).sum::<BigUint>() + q.iter().map(|r| sum(r)).sum::<BigUint>());
    }
    out
}

fn count_663a(n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let mut a = zeros(w);
    let mut b = zeros(w);
    a[0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut a2 = zeros(w);
        let mut b2 = zeros(w);
        let above = suffix_sums(&a[..=n]);
        for k in 1..=n + 1 {
            a2[k] += &above[k - 1];
        }
        for m in 1..n {
            b2[m] += &above[m + 1];
        }
        for p in 0..=n {
            a2[p + 1] += &b[p];
            b2[p + 1] += &b[p];
        }
        (a, b) = (a2, b2);
        out.push(sum(&a));
    }
    out
}

fn count_1420(n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let mut a = zeros(w);
    let mut b = zeros(w);
    a[0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut a2 = zeros(w);
        let mut b2 = zeros(w);
        let both: Row = (0..=n).map(|p| &a[p] + &b[p]).collect();
        let above = suffix_sums(&both);
        for q in 1..=n + 1 {
            a2[q] += &above[q - 1];
            if q < n {
                b2[q] += &above[q + 1];
            }
        }
        for p in 0..=n {
            b2[p + 1] += &b[p];
        }
        (a, b) = (a2, b2);
        out.push(sum(&a) + sum(&b));
    }
    out
}

/// `SW(m) = sum_{p >= m} W(p)` for row weights `W`, padded with zeros.
fn weight_suffix(w: &[BigUint], len: usize) -> Row {
    let mut out = suffix_sums(w);
    out.resize(len.max(out.len()), BigUint::zero());
    out
}

fn count_1833a_733(class: ClassId, n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let mut c = grid(w, w);
    c[0][0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut c2 = grid(w, w);
        let weights: Row = (0..=n)
            .map(|p| if class == ClassId::C733 { c[p][0].clone() } else { sum(&c[p]) })
            .collect();
        let sw = weight_suffix(&weights, 2 * w);
        for p in 0..=n {
            for s in 0..w {
                if c[p][s].is_zero() {
                    continue;
                }
                c2[p + 1][s] += &c[p][s];
                if s > 0 {
                    let v = c[p][s].clone();
                    c2[p + 1][0] += v;
                }
            }
        }
        for q in 1..=n {
            for k in 0..=n - q {
                c2[q][k] += &sw[q + k];
            }
        }
        c = c2;
        out.push(match class {
            ClassId::C733 => c.iter().map(|r| r[0].clone()).sum(),
            _ => c.iter().map(|r| sum(r)).sum(),
        });
    }
    out
}

fn grow_decrement(c: &Grid, c2: &mut Grid, n: usize) {
    for p in 0..=n {
        for s in 0..c[p].len() {
            if c[p][s].is_zero() {
                continue;
            }
            c2[p + 1][s] += &c[p][s];
            if s > 0 {
                c2[p + 1][s - 1] += &c[p][s];
            }
        }
    }
}

fn count_214(n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let mut c = grid(w, w);
    c[0][0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut c2 = grid(w, w);
        grow_decrement(&c, &mut c2, n);
        // Target (q, m) receives c[q+m][0] (first family) and c[q+m+1][0]
        // (second family, requires q >= 1).
        for q in 1..=n {
            for m in 0..=n - q {
                c2[q][m] += &c[q + m][0];
                if q + m < n {
                    c2[q][m] += &c[q + m + 1][0];
                }
            }
        }
        c = c2;
        out.push((0..=2.min(n + 1)).map(|p| c[p][0].clone()).sum());
    }
    out
}

fn count_1509(n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let mut c = grid(w, w);
    c[0][0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut c2 = grid(w, w);
        grow_decrement(&c, &mut c2, n);
        let weights: Row = (0..=n).map(|p| &c[p][0] + &c[p][1]).collect();
        let sw = weight_suffix(&weights, 2 * w);
        for q in 1..=n {
            c2[q][0] += &sw[q];
            for j in 1..=n - q {
                c2[q][j] += &sw[q + j];
            }
        }
        c = c2;
        out.push(c.iter().map(|r| &r[0] + &r[1]).sum());
    }
    out
}

fn count_1953a(n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let mut c = grid(w, w);
    c[0][0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut c2 = grid(w, w);
        for p in 0..=n {
            let above = suffix_sums(&c[p]);
            for t in 0..w {
                c2[p + 1][t] += &above[t];
            }
        }
        let weights: Row = (0..=n).map(|p| sum(&c[p])).collect();
        let sw = weight_suffix(&weights, 2 * w);
        for q in 1..=n {
            for k in 0..=n - q {
                c2[q][k] += &sw[q + k];
            }
        }
        c = c2;
        out.push(c.iter().map(|r| sum(r)).sum());
    }
    out
}

fn count_commit(class: ClassId, n_max: usize) -> Vec<BigUint> {
    let w = n_max + 2;
    let cat: Row = (0..w as u64).map(catalan).collect();
    let mut c = grid(w, w);
    c[0][0] = BigUint::from(1u32);
    let mut out = vec![BigUint::from(1u32)];
    for n in 0..n_max {
        let mut c2 = grid(w, w);
        grow_decrement(&c, &mut c2, n);
        let v: Row = (0..w + 1).map(|p| if p >= 1 && p <= n { c[p][0].clone() } else { BigUint::zero() }).collect();
        match class {
            ClassId::C759 => {
                // T(q,b) = sum_l v(q+l) binom(l,b), built from q = n down.
                let mut t_next = zeros(w + 1);
                for q in (1..=n).rev() {
                    let mut t = zeros(w + 1);
                    t[0] = &t_next[0] + &v[q];
                    for b in 1..=n - q {
                        t[b] = &t_next[b] + &t_next[b - 1];
                    }
                    for b in 0..=n - q {
                        if !t[b].is_zero() {
                            c2[q][b] += &t[b] * &cat[b];
                        }
                    }
                    t_next = t;
                }
            }
            ClassId::C247 => {
                // U(s,m) = sum_j v(s+j) binom(m,j); target (q,b) takes U(q+b, b+1) C_b.
                let mut u: Grid = vec![v.clone()];
                for m in 1..=n + 1 {
                    let prev = &u[m - 1];
                    let row: Row = (0..w + 1)
                        .map(|s| if s + 1 < prev.len() { &prev[s] + &prev[s + 1] } else { prev[s].clone() })
                        .collect();
                    u.push(row);
                }
                for q in 1..=n {
                    for b in 0..=n - q {
                        let val = &u[b + 1][q + b];
                        if !val.is_zero() {
                            c2[q][b] += val * &cat[b];
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
        c = c2;
        out.push(match class {
            ClassId::C247 => (0..=2.min(n + 1)).map(|p| c[p][0].clone()).sum(),
            _ => c.iter().map(|r| r[0].clone()).sum(),
        });
    }
    out
}
