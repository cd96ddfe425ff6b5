//! Characteristic polynomials and similarity invariants of GF(2) matrices.
//!
//! `char_poly` runs fraction-free (Bareiss) elimination on `xI + M` over
//! `GF(2)[x]`; every division is exact. `invariant_factors` computes the
//! Smith normal form of `xI + M` over `GF(2)[x]`, yielding the divisibility
//! chain
//! h_1 | h_2 | ... whose product is the characteristic polynomial. The two
//! routes are independent and cross-checked in tests.

use crate::error::{input_err, Result};
use crate::matrix::BitMatrix;
use crate::poly::F2Polynomial;

fn char_matrix(m: &BitMatrix) -> Vec<Vec<F2Polynomial>> {
    let n = m.rows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = if m.get(i, j) {
                        F2Polynomial::one()
                    } else {
                        F2Polynomial::zero()
                    };
                    if i == j {
                        p = p.add(&F2Polynomial::x());
                    }
                    p
                })
                .collect()
        })
        .collect()
}

/// `det(xI + M)` over GF(2), exact.
pub fn char_poly(m: &BitMatrix) -> Result<F2Polynomial> {
    if m.rows() != m.cols() {
        return input_err("char_poly requires a square matrix");
    }
    let n = m.rows();
    if n == 0 {
        return Ok(F2Polynomial::one());
    }
    let mut a = char_matrix(m);
    let mut prev_pivot = F2Polynomial::one();
    for k in 0..n - 1 {
        // Pivoting: any nonzero entry in the trailing submatrix will do;
        // prefer low degree to keep intermediate degrees down.
        let mut best: Option<(usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].degree() < a[bi][bj].degree())
                {
                    best = Some((i, j));
                }
            }
        }
        // det(xI+M) is monic of degree n, never zero, so a pivot exists.
        let (pi, pj) = best.ok_or_else(|| {
            crate::error::Error::Internal("char matrix cannot be singular".into())
        })?;
        a.swap(k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).add(&a[i][k].mul(&a[k][j]));
                let (q, r) = t.divmod(&prev_pivot);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
        }
        for i in k + 1..n {
            a[i][k] = F2Polynomial::zero();
        }
        prev_pivot = a[k][k].clone();
    }
    Ok(a[n - 1][n - 1].clone())
}

/// Nontrivial similarity invariants of `m`: the diagonal of the Smith normal
/// form of `xI + m` over `GF(2)[x]`, with unit entries dropped.
pub fn invariant_factors(m: &BitMatrix) -> Result<Vec<F2Polynomial>> {
    if m.rows() != m.cols() {
        return input_err("invariant_factors requires a square matrix");
    }
    let n = m.rows();
    let mut a = char_matrix(m);
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            // Bring a minimal-degree nonzero entry to (k, k).
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].degree() < a[bi][bj].degree())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // Entire trailing block is zero; xI+M is nonsingular so this
                // cannot happen before k == n.
                return Err(crate::error::Error::Internal(
                    "Smith reduction of xI + M ran out of pivots".into(),
                ));
            };
            a.swap(k, pi);
            if pj != k {
                for row in a.iter_mut() {
                    row.swap(k, pj);
                }
            }
            let pivot = a[k][k].clone();
            // Clear column k below the pivot.
            let mut dirty = false;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, _) = a[i][k].divmod(&pivot);
                for j in k..n {
                    let sub = q.mul(&a[k][j]);
                    a[i][j] = a[i][j].add(&sub);
                }
                if !a[i][k].is_zero() {
                    dirty = true;
                }
            }
            // Clear row k right of the pivot.
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, _) = a[k][j].divmod(&pivot);
                for i in k..n {
                    let sub = q.mul(&a[i][k]);
                    a[i][j] = a[i][j].add(&sub);
                }
                if !a[k][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide every remaining entry for the divisibility
            // chain; if not, fold the offending row in and redo.
            let mut offender = None;
            'scan: for i in k + 1..n {
                for j in k + 1..n {
                    if !pivot.divides(&a[i][j]) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in k..n {
                        let add = a[i][j].clone();
                        a[k][j] = a[k][j].add(&add);
                    }
                }
                None => {
                    diag.push(pivot);
                    break;
                }
            }
        }
    }
    Ok(diag.into_iter().filter(|p| !p.is_one()).collect())
}
