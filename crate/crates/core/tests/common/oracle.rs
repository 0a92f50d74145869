//! Independent reference arithmetic, written without the library's kernels.

use sdcodes::{BitVector, Ring};

/// Product in `F4[u]/(u²)` with bits `(1, u, ω, uω)`, done by hand:
/// `(x0 + x1 u)(y0 + y1 u) = x0 y0 + (x0 y1 + x1 y0) u` over `F4 = F2(ω)`.
pub fn mul_bits(a: u8, b: u8) -> u8 {
    let f4 = |x: u8| (x & 1, (x >> 2) & 1);
    let f4_mul =
        |(a, b): (u8, u8), (c, d): (u8, u8)| ((a & c) ^ (b & d), (a & d) ^ (b & c) ^ (b & d));
    let f4_add = |(a, b): (u8, u8), (c, d): (u8, u8)| (a ^ c, b ^ d);
    let (x0, x1) = (f4(a), f4(a >> 1));
    let (y0, y1) = (f4(b), f4(b >> 1));
    let z0 = f4_mul(x0, y0);
    let z1 = f4_add(f4_mul(x0, y1), f4_mul(x1, y0));
    z0.0 | (z1.0 << 1) | (z0.1 << 2) | (z1.1 << 3)
}

pub type Dense<R> = Vec<Vec<R>>;

pub fn circ<R: Ring>(r: &[R]) -> Dense<R> {
    lambda_circ(r, R::one())
}

/// Entry `(i, j)` is `r[j - i]`, times `λ` when the index wrapped.
pub fn lambda_circ<R: Ring>(r: &[R], lambda: R) -> Dense<R> {
    let n = r.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = r[(j + n - i) % n];
                    if j < i {
                        x * lambda
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect()
}

pub fn back_diag<R: Ring>(n: usize) -> Dense<R> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i + j == n - 1 { R::one() } else { R::zero() })
                .collect()
        })
        .collect()
}

pub fn identity<R: Ring>(n: usize) -> Dense<R> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { R::one() } else { R::zero() })
                .collect()
        })
        .collect()
}

pub fn mul<R: Ring>(a: &Dense<R>, b: &Dense<R>) -> Dense<R> {
    let m = b[0].len();
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(R::zero(), |acc, (&x, brow)| acc + x * brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn add<R: Ring>(a: &Dense<R>, b: &Dense<R>) -> Dense<R> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(&p, &q)| p + q).collect())
        .collect()
}

pub fn transpose<R: Ring>(a: &Dense<R>) -> Dense<R> {
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn is_zero<R: Ring>(a: &Dense<R>) -> bool {
    a.iter().flatten().all(|x| x.is_zero())
}

/// `[a, b; c, d]`.
pub fn block<R: Ring>(a: &Dense<R>, b: &Dense<R>, c: &Dense<R>, d: &Dense<R>) -> Dense<R> {
    let top = a
        .iter()
        .zip(b)
        .map(|(x, y)| [x.clone(), y.clone()].concat());
    let bottom = c
        .iter()
        .zip(d)
        .map(|(x, y)| [x.clone(), y.clone()].concat());
    top.chain(bottom).collect()
}

pub fn inner<R: Ring>(a: &[R], b: &[R]) -> R {
    a.iter().zip(b).fold(R::zero(), |acc, (&x, &y)| acc + x * y)
}

/// `G·Gᵀ == 0` row by row.
pub fn self_orthogonal<R: Ring>(rows: &[Vec<R>]) -> bool {
    rows.iter()
        .all(|a| rows.iter().all(|b| inner(a, b).is_zero()))
}

/// Every codeword of the binary span of `rows`, as sorted bit strings.
pub fn span(rows: &[BitVector]) -> Vec<String> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut out: Vec<String> = (0u64..1 << rows.len())
        .map(|m| {
            let mut w = BitVector::zeros(n);
            for (i, r) in rows.iter().enumerate() {
                if (m >> i) & 1 == 1 {
                    w.xor_assign(r);
                }
            }
            w.to_string()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Krawtchouk polynomial `K_j(i)` for length `n`.
pub fn krawtchouk(n: usize, j: usize, i: usize) -> i128 {
    let (n, j, i) = (n as i64, j as i64, i as i64);
    (0..=j)
        .map(|s| {
            let t = binom(i, s) * binom(n - i, j - s);
            if s % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}
