//! Rank and nullity over prime fields `F_p`, by reduction of rational matrices.

use crate::error::{Error, Result};

use super::Mat;

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce(m: &Mat, p: u64) -> Result<Vec<Vec<u64>>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.mod_prime(p).ok_or(Error::NotReducibleModP(p))).collect())
        .collect()
}

/// Rank of `m` reduced modulo `p`.
pub fn rank(m: &Mat, p: u64) -> Result<usize> {
    let mut a = reduce(m, p)?;
    let (rows, cols) = m.shape();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(piv, r);
        let iv = inv(a[r][c], p);
        for x in a[r][c..].iter_mut() {
            *x = mul(*x, iv, p);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in c..cols {
                row[j] = (row[j] + p - mul(f, pivot_row[j], p)) % p;
            }
        }
        r += 1;
    }
    Ok(r)
}

pub fn nullity(m: &Mat, p: u64) -> Result<usize> {
    Ok(m.cols() - rank(m, p)?)
}
