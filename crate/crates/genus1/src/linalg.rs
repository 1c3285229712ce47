//! Exact linear algebra over the rationals and integers.
//!
//! Everything in this crate is exact: rational matrices use
//! [`num_rational::BigRational`], integer normal forms use
//! [`num_bigint::BigInt`]. No floating point appears anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Shorthand for the exact rational scalar type used throughout the crate.
pub type Q = BigRational;

/// Builds a rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Builds a rational `n / d` (panics if `d == 0`).
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Converts an integer vector to a rational vector.
pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Determinant of a square rational matrix by fraction-free-ish Gaussian
/// elimination (exact; pivoting only for nonzero pivots).
pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut result = Q::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return Q::zero(),
        };
        if pivot != col {
            a.swap(pivot, col);
            result = -result;
        }
        let p = a[col][col].clone();
        result *= p.clone();
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &p;
            for k in col..n {
                let sub = &factor * &a[col][k];
                a[row][k] -= sub;
            }
        }
    }
    result
}

/// Solves the square system `a x = b` exactly.
///
/// Returns `None` if `a` is singular (no attempt is made to find a
/// particular solution of an underdetermined system; callers in this crate
/// only need the nonsingular case).
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        let p = m[col][col].clone();
        for k in col..=n {
            m[col][k] = &m[col][k] / &p;
        }
        for row in 0..n {
            if row == col || m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone();
            for k in col..=n {
                let sub = &factor * &m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Expresses `x` in the basis given by the rows of `basis` (a square,
/// invertible matrix). Returns the coordinate vector.
pub fn coords_in_basis(basis: &[Vec<Q>], x: &[Q]) -> Option<Vec<Q>> {
    // x = c . basis  <=>  basis^T c = x
    let n = basis.len();
    let mut at = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            at[j][i] = basis[i][j].clone();
        }
    }
    solve(&at, x)
}

/// Elementary divisors (Smith normal form diagonal) of an integer matrix.
///
/// Returns the nonzero divisors `d_1 | d_2 | ... | d_r`, all positive.
pub fn elementary_divisors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut divisors = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // Find the nonzero entry of smallest absolute value in the
        // remaining block and move it to the pivot position.
        let mut best: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in left..cols {
                if !a[i][j].is_zero()
                    && best
                        .map(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let (bi, bj) = match best {
            Some(p) => p,
            None => break,
        };
        a.swap(top, bi);
        for row in a.iter_mut() {
            row.swap(left, bj);
        }
        // Reduce the pivot row and column; repeat until clean.
        loop {
            let mut dirty = false;
            let p = a[top][left].clone();
            for i in top + 1..rows {
                if a[i][left].is_zero() {
                    continue;
                }
                let f = floor_div(&a[i][left], &p);
                for j in left..cols {
                    let sub = &f * &a[top][j];
                    a[i][j] -= sub;
                }
                if !a[i][left].is_zero() {
                    // Remainder smaller than pivot: swap up and restart.
                    a.swap(top, i);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            let p = a[top][left].clone();
            for j in left + 1..cols {
                if a[top][j].is_zero() {
                    continue;
                }
                let f = floor_div(&a[top][j], &p);
                for i in top..rows {
                    let sub = &f * &a[i][left];
                    a[i][j] -= sub;
                }
                if !a[top][j].is_zero() {
                    for i in top..rows {
                        let tmp = a[i][left].clone();
                        a[i][left] = a[i][j].clone();
                        a[i][j] = tmp;
                    }
                    dirty = true;
                    break;
                }
            }
            if !dirty {
                break;
            }
        }
        divisors.push(a[top][left].abs());
        top += 1;
        left += 1;
    }
    // Fix up divisibility chain d_1 | d_2 | ...
    let mut changed = true;
    while changed {
        changed = false;
        for i in 1..divisors.len() {
            if (&divisors[i] % &divisors[i - 1]) != BigInt::zero() {
                let g = num_integer::Integer::gcd(&divisors[i - 1], &divisors[i]);
                let l = (&divisors[i - 1] * &divisors[i]) / &g;
                divisors[i - 1] = g;
                divisors[i] = l;
                changed = true;
            }
        }
    }
    divisors
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`
/// over the integers. Returns a full-row-rank basis (rows).
pub fn hnf_row_basis(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if m.is_empty() {
        return vec![];
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut row = 0usize;
    for col in 0..cols {
        // Euclid on the column below `row`.
        loop {
            let mut best: Option<usize> = None;
            for i in row..a.len() {
                if !a[i][col].is_zero()
                    && best.map(|b| a[i][col].abs() < a[b][col].abs()).unwrap_or(true)
                {
                    best = Some(i);
                }
            }
            let b = match best {
                Some(b) => b,
                None => break,
            };
            a.swap(row, b);
            let mut any = false;
            let p = a[row][col].clone();
            for i in row + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let f = floor_div(&a[i][col], &p);
                for j in 0..cols {
                    let sub = &f * &a[row][j];
                    a[i][j] -= sub;
                }
                if !a[i][col].is_zero() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if row < a.len() && !a[row][col].is_zero() {
            if a[row][col].is_negative() {
                for j in 0..cols {
                    a[row][j] = -a[row][j].clone();
                }
            }
            // Reduce earlier rows above the pivot.
            let p = a[row][col].clone();
            for i in 0..row {
                if a[i][col].is_zero() {
                    continue;
                }
                let f = floor_div(&a[i][col], &p);
                for j in 0..cols {
                    let sub = &f * &a[row][j];
                    a[i][j] -= sub;
                }
            }
            row += 1;
        }
    }
    a.truncate(row);
    a
}

/// Multiplies a rational matrix by a rational column vector.
pub fn mat_vec(m: &[Vec<Q>], x: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Multiplies two rational matrices.
pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let mut out = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                let add = &a[i][l] * &b[l][j];
                out[i][j] += add;
            }
        }
    }
    out
}

/// Identity matrix of size `n`.
pub fn identity(n: usize) -> Vec<Vec<Q>> {
    let mut m = vec![vec![Q::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}
