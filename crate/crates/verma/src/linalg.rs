//! Exact row reduction over the rationals.

use liealg::Q;
use num_traits::{One, Zero};

/// Reduced row echelon form in place; returns pivot columns. Zero rows are dropped.
pub fn rref(rows: &mut Vec<Vec<Q>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &f * &pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right kernel, in reduced form: each vector has leading coefficient 1.
pub fn nullspace(mut rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let pivots = rref(&mut rows, ncols);
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[f] = Q::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(v);
    }
    rref(&mut basis, ncols);
    basis
}
