//! Determinant-sign kernels.
//!
//! Fast paths run on machine integers with a static overflow budget:
//! homogeneous entries are capped at 2^30 (see `SMALL_LIMIT`), so a 3x3
//! determinant stays below 2^93 and a 4x4 cofactor expansion below 2^125,
//! both inside i128. Anything larger, or any oversized entry, falls back
//! to exact big-integer elimination.

use super::HomRow;
use num::{BigInt, One, Signed, Zero};

#[inline]
fn sgn(v: i128) -> i8 {
    if v > 0 {
        1
    } else if v < 0 {
        -1
    } else {
        0
    }
}

#[inline]
fn det3(m: [[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

#[inline]
fn det4(m: [[i128; 4]; 4]) -> i128 {
    let mut acc = 0i128;
    let mut sign = 1i128;
    for col in 0..4 {
        let mut minor = [[0i128; 3]; 3];
        for r in 1..4 {
            let mut cc = 0;
            for c in 0..4 {
                if c != col {
                    minor[r - 1][cc] = m[r][c];
                    cc += 1;
                }
            }
        }
        acc += sign * m[0][col] * det3(minor);
        sign = -sign;
    }
    acc
}

/// Orientation of three homogeneous rows (ambient dimension 2).
pub(crate) fn sign3(a: &HomRow, b: &HomRow, c: &HomRow) -> i8 {
    if let (Some(ra), Some(rb), Some(rc)) = (&a.small, &b.small, &c.small) {
        if ra[2] == 1 && rb[2] == 1 && rc[2] == 1 {
            let v = (rb[0] - ra[0]) as i128 * (rc[1] - ra[1]) as i128
                - (rb[1] - ra[1]) as i128 * (rc[0] - ra[0]) as i128;
            return sgn(v);
        }
        let m = [
            [ra[0] as i128, ra[1] as i128, ra[2] as i128],
            [rb[0] as i128, rb[1] as i128, rb[2] as i128],
            [rc[0] as i128, rc[1] as i128, rc[2] as i128],
        ];
        return sgn(det3(m));
    }
    sign_big(&[&a.big, &b.big, &c.big])
}

/// Orientation of four homogeneous rows (ambient dimension 3).
pub(crate) fn sign4(a: &HomRow, b: &HomRow, c: &HomRow, d: &HomRow) -> i8 {
    if let (Some(ra), Some(rb), Some(rc), Some(rd)) = (&a.small, &b.small, &c.small, &d.small) {
        if ra[3] == 1 && rb[3] == 1 && rc[3] == 1 && rd[3] == 1 {
            let m = [
                [
                    (rb[0] - ra[0]) as i128,
                    (rb[1] - ra[1]) as i128,
                    (rb[2] - ra[2]) as i128,
                ],
                [
                    (rc[0] - ra[0]) as i128,
                    (rc[1] - ra[1]) as i128,
                    (rc[2] - ra[2]) as i128,
                ],
                [
                    (rd[0] - ra[0]) as i128,
                    (rd[1] - ra[1]) as i128,
                    (rd[2] - ra[2]) as i128,
                ],
            ];
            return sgn(det3(m));
        }
        let rows = [ra, rb, rc, rd];
        let mut m = [[0i128; 4]; 4];
        for (i, r) in rows.iter().enumerate() {
            for j in 0..4 {
                m[i][j] = r[j] as i128;
            }
        }
        return sgn(det4(m));
    }
    sign_big(&[&a.big, &b.big, &c.big, &d.big])
}

/// Orientation for any ambient dimension (rows of length d+1).
pub(crate) fn sign_general(rows: &[&HomRow]) -> i8 {
    match rows {
        [a, b, c] => sign3(a, b, c),
        [a, b, c, d] => sign4(a, b, c, d),
        _ => {
            let big: Vec<&Vec<BigInt>> = rows.iter().map(|r| &r.big).collect();
            sign_big(&big)
        }
    }
}

/// Sign of an exact big-integer determinant (Bareiss fraction-free elimination).
fn sign_big(rows: &[&Vec<BigInt>]) -> i8 {
    det_big(rows).signum().to_i8()
}

trait SignumToI8 {
    fn to_i8(&self) -> i8;
}

impl SignumToI8 for BigInt {
    fn to_i8(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// Exact determinant value of a square big-integer matrix.
pub(crate) fn det_big(rows: &[&Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| (*r).clone()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = match (k..n).find(|&r| !m[r][k].is_zero()) {
            Some(p) => p,
            None => return BigInt::zero(),
        };
        if pivot != k {
            m.swap(pivot, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
