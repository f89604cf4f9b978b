//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::homology::Field;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }
}

pub fn rank(m: &IntMatrix, field: Field) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match field {
        Field::Rationals => rank_rational(m),
        Field::Prime(p) => rank_mod_p(m, p),
    }
}

/// Fraction-free (Bareiss) elimination. Runs in `i128` and restarts with
/// big integers if an intermediate minor overflows.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let small: Vec<i128> = m.entries.iter().map(|&v| i128::from(v)).collect();
    match bareiss_i128(small, m.rows, m.cols) {
        Some(r) => r,
        None => bareiss_big(m),
    }
}

fn bareiss_i128(mut a: Vec<i128>, rows: usize, cols: usize) -> Option<usize> {
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let p = a[rank * cols + col];
        for i in rank + 1..rows {
            let f = a[i * cols + col];
            for j in col + 1..cols {
                let lhs = p.checked_mul(a[i * cols + j])?;
                let rhs = f.checked_mul(a[rank * cols + j])?;
                a[i * cols + j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i * cols + col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<BigInt> = m.entries.iter().map(|&v| BigInt::from(v)).collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let p = a[rank * cols + col].clone();
        for i in rank + 1..rows {
            let f = a[i * cols + col].clone();
            for j in col + 1..cols {
                let v = (&p * &a[i * cols + j] - &f * &a[rank * cols + j]) / &prev;
                a[i * cols + j] = v;
            }
            a[i * cols + col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let pp = i128::from(p);
    let mut a: Vec<u64> = m
        .entries
        .iter()
        .map(|&v| (i128::from(v).rem_euclid(pp)) as u64)
        .collect();
    let mul = |x: u64, y: u64| ((u128::from(x) * u128::from(y)) % u128::from(p)) as u64;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = pow_mod(a[rank * cols + col], p - 2, p);
        for i in rank + 1..rows {
            let f = mul(a[i * cols + col], inv);
            if f == 0 {
                continue;
            }
            for j in col..cols {
                let sub = mul(f, a[rank * cols + j]);
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((u128::from(acc) * u128::from(base)) % u128::from(p)) as u64;
        }
        base = ((u128::from(base) * u128::from(base)) % u128::from(p)) as u64;
        exp >>= 1;
    }
    acc
}
