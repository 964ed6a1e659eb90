//! Exact rank computation for small dense integer matrices (boundary
//! matrices of simplicial complexes; entries are -1, 0, 1).
//!
//! Over the rationals we run fraction-free (Bareiss) elimination in `i128`
//! with overflow checks, redoing the whole computation in arbitrary
//! precision on overflow — intermediate values are bounded by minors of the
//! input, which can exceed machine range on large matrices. Over a prime
//! field we eliminate directly in `u64`.
//!
//! Pivot choice is "first nonzero" (row-major) with row/column swaps, so
//! results and control flow are deterministic.

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over the field of rational numbers.
pub fn rank_over_q(rows: usize, cols: usize, entries: &[i8]) -> usize {
    debug_assert_eq!(entries.len(), rows * cols);
    match rank_bareiss_i128(rows, cols, entries) {
        Some(r) => r,
        None => rank_bareiss_bigint(rows, cols, entries),
    }
}

/// Rank over the prime field `F_p`. Requires `p` prime and `p < 2^31`.
pub fn rank_mod_p(rows: usize, cols: usize, entries: &[i8], p: u64) -> usize {
    debug_assert_eq!(entries.len(), rows * cols);
    debug_assert!(p >= 2 && p < (1 << 31));
    let reduce = |x: i8| -> u64 {
        let r = (x as i64).rem_euclid(p as i64);
        r as u64
    };
    let mut m: Vec<u64> = entries.iter().map(|&x| reduce(x)).collect();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&i| m[i * cols + col] != 0) else {
            continue;
        };
        if pivot_row != row {
            for j in 0..cols {
                m.swap(row * cols + j, pivot_row * cols + j);
            }
        }
        let inv = mod_pow(m[row * cols + col], p - 2, p);
        for i in row + 1..rows {
            let factor = m[i * cols + col];
            if factor == 0 {
                continue;
            }
            let scale = mul_mod(factor, inv, p);
            for j in col..cols {
                let sub = mul_mod(scale, m[row * cols + j], p);
                let cur = m[i * cols + j];
                m[i * cols + j] = (cur + p - sub) % p;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Bareiss elimination in `i128`; `None` signals overflow.
fn rank_bareiss_i128(rows: usize, cols: usize, entries: &[i8]) -> Option<usize> {
    let mut m: Vec<i128> = entries.iter().map(|&x| x as i128).collect();
    let steps = rows.min(cols);
    let mut prev: i128 = 1;
    let mut rank = 0usize;
    for k in 0..steps {
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if m[i * cols + j] != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break; // remaining submatrix is zero
        };
        if pi != k {
            for j in 0..cols {
                m.swap(k * cols + j, pi * cols + j);
            }
        }
        if pj != k {
            for i in 0..rows {
                m.swap(i * cols + k, i * cols + pj);
            }
        }
        let piv = m[k * cols + k];
        for i in k + 1..rows {
            let head = m[i * cols + k];
            for j in k + 1..cols {
                let a = piv.checked_mul(m[i * cols + j])?;
                let b = head.checked_mul(m[k * cols + j])?;
                let num = a.checked_sub(b)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                m[i * cols + j] = num / prev;
            }
            m[i * cols + k] = 0;
        }
        prev = piv;
        rank += 1;
    }
    Some(rank)
}

/// Same elimination with arbitrary-precision integers.
fn rank_bareiss_bigint(rows: usize, cols: usize, entries: &[i8]) -> usize {
    let mut m: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let steps = rows.min(cols);
    let mut prev = BigInt::from(1);
    let mut rank = 0usize;
    for k in 0..steps {
        let mut pivot = None;
        'search: for i in k..rows {
            for j in k..cols {
                if !m[i * cols + j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        if pi != k {
            for j in 0..cols {
                m.swap(k * cols + j, pi * cols + j);
            }
        }
        if pj != k {
            for i in 0..rows {
                m.swap(i * cols + k, i * cols + pj);
            }
        }
        let piv = m[k * cols + k].clone();
        for i in k + 1..rows {
            let head = m[i * cols + k].clone();
            for j in k + 1..cols {
                let num = &piv * &m[i * cols + j] - &head * &m[k * cols + j];
                m[i * cols + j] = num / &prev;
            }
            m[i * cols + k] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
    }
    rank
}
