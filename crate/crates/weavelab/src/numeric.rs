//! Small dense linear-algebra helpers shared by the spanning-tree and
//! angle-structure code. Everything here works on `Vec<Vec<f64>>` row-major
//! matrices; the systems involved are reduced Laplacians and angle-structure
//! constraint matrices, a few hundred rows at most.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// LU factorization with partial pivoting, in place. Returns
/// `(log|det|, sign)` or `None` when a pivot collapses to zero.
pub fn lu_logdet(mut a: Vec<Vec<f64>>) -> Option<(f64, f64)> {
    let n = a.len();
    if n == 0 {
        return Some((0.0, 1.0));
    }
    let mut logdet = 0.0;
    let mut sign = 1.0;
    for k in 0..n {
        let mut piv = k;
        let mut best = a[k][k].abs();
        for (r, row) in a.iter().enumerate().skip(k + 1) {
            if row[k].abs() > best {
                best = row[k].abs();
                piv = r;
            }
        }
        if best == 0.0 {
            return None;
        }
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        let pivot = a[k][k];
        logdet += pivot.abs().ln();
        if pivot < 0.0 {
            sign = -sign;
        }
        for i in k + 1..n {
            let factor = a[i][k] / pivot;
            if factor == 0.0 {
                continue;
            }
            a[i][k] = 0.0;
            for j in k + 1..n {
                let akj = a[k][j];
                a[i][j] -= factor * akj;
            }
        }
    }
    Some((logdet, sign))
}

/// Reduced row echelon form with partial pivoting. Returns the pivot
/// columns; `a` (and the optional right-hand side) are modified in place.
/// Entries below `tol` relative to the largest entry are treated as zero.
fn rref(a: &mut [Vec<f64>], rhs: Option<&mut Vec<f64>>, tol: f64) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, &x| m.max(x.abs()))
        .max(1.0);
    let cut = tol * scale;
    let mut rhs = rhs;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let mut piv = row;
        let mut best = a[row][col].abs();
        for r in row + 1..rows {
            if a[r][col].abs() > best {
                best = a[r][col].abs();
                piv = r;
            }
        }
        if best <= cut {
            continue;
        }
        a.swap(row, piv);
        if let Some(b) = rhs.as_deref_mut() {
            b.swap(row, piv);
        }
        let p = a[row][col];
        for x in a[row].iter_mut() {
            *x /= p;
        }
        if let Some(b) = rhs.as_deref_mut() {
            b[row] /= p;
        }
        for r in 0..rows {
            if r == row {
                continue;
            }
            let f = a[r][col];
            if f == 0.0 {
                continue;
            }
            for c in 0..cols {
                let v = a[row][c];
                a[r][c] -= f * v;
            }
            if let Some(b) = rhs.as_deref_mut() {
                let v = b[row];
                b[r] -= f * v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of the nullspace of `a` (columns = variables). Basis vectors are
/// orthonormalized with modified Gram-Schmidt, applied twice.
pub fn nullspace(a: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    if a.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let pivots = rref(&mut m, None, tol);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![0.0; cols];
        v[f] = 1.0;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][f];
        }
        basis.push(v);
    }
    orthonormalize(&mut basis);
    orthonormalize(&mut basis);
    basis
}

fn orthonormalize(basis: &mut Vec<Vec<f64>>) {
    let mut kept: Vec<Vec<f64>> = Vec::with_capacity(basis.len());
    for mut v in basis.drain(..) {
        for u in &kept {
            let d = dot(&v, u);
            for (x, y) in v.iter_mut().zip(u) {
                *x -= d * y;
            }
        }
        let n = dot(&v, &v).sqrt();
        if n > 1e-12 {
            for x in v.iter_mut() {
                *x /= n;
            }
            kept.push(v);
        }
    }
    *basis = kept;
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// One particular solution of `a x = b`, free variables set to zero.
/// Returns `None` when the system is inconsistent.
pub fn solve_particular(a: &[Vec<f64>], b: &[f64], tol: f64) -> Option<Vec<f64>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut rhs = b.to_vec();
    let pivots = rref(&mut m, Some(&mut rhs), tol);
    let scale = b.iter().fold(1.0f64, |s, &x| s.max(x.abs()));
    for (r, row) in m.iter().enumerate() {
        let all_zero = row.iter().all(|&x| x.abs() <= tol * 10.0);
        if all_zero && rhs[r].abs() > tol * 100.0 * scale {
            return None;
        }
    }
    let mut x = vec![0.0; cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rhs[r];
    }
    Some(x)
}

/// Solves `a x = b` for symmetric positive definite `a` via Cholesky.
/// Returns `None` when `a` is not numerically positive definite.
pub fn cholesky_solve(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                if s <= 0.0 {
                    return None;
                }
                l[i][j] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    // forward then back substitution
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i][k] * y[k];
        }
        y[i] = s / l[i][i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[k][i] * x[k];
        }
        x[i] = s / l[i][i];
    }
    Some(x)
}

/// Natural log of a nonnegative big integer, accurate to a few ulps.
/// `ln(0)` is `-inf`.
pub fn big_ln(x: &BigInt) -> f64 {
    assert!(!x.is_negative(), "big_ln of negative value");
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}
