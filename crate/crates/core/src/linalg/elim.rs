//! Exact Gaussian elimination over the rationals.
//!
//! Row vectors are reduced to reduced row echelon form. Narrow systems
//! (fewer than [`DENSE_CUTOFF`] columns) are eliminated densely; wider
//! ones keep rows sparse and reduce them one at a time against the
//! pivots found so far.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::linalg::sparse::{axpy, scale_vec, SparseMatrix, SparseVec};
use crate::linalg::Rational;

pub const DENSE_CUTOFF: usize = 64;

/// Pivot column and its fully reduced row (leading coefficient 1), sorted by column.
pub type Rref = Vec<(usize, SparseVec)>;

pub fn rref(rows: Vec<SparseVec>, ncols: usize) -> Rref {
    if ncols < DENSE_CUTOFF {
        dense_rref(rows, ncols)
    } else {
        sparse_rref(rows)
    }
}

fn reduce_against(mut row: SparseVec, pivots: &BTreeMap<usize, SparseVec>, start: usize) -> SparseVec {
    let mut pos = start;
    while pos < row.len() {
        let c = row[pos].0;
        match pivots.get(&c) {
            Some(p) => {
                let a = -row[pos].1.clone();
                // pivot rows only touch columns >= c, so entries before pos are stable
                row = axpy(&row, &a, p);
            }
            None => pos += 1,
        }
    }
    row
}

fn sparse_rref(rows: Vec<SparseVec>) -> Rref {
    let mut pivots: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for row in rows {
        let row = reduce_against(row, &pivots, 0);
        if let Some((c, lead)) = row.first() {
            let c = *c;
            let inv = lead.recip();
            pivots.insert(c, scale_vec(&row, &inv));
        }
    }
    // back substitution, largest pivot first
    let cols: Vec<usize> = pivots.keys().rev().copied().collect();
    for c in cols {
        let row = pivots.remove(&c).expect("pivot present");
        let row = reduce_against(row, &pivots, 1);
        pivots.insert(c, row);
    }
    pivots.into_iter().collect()
}

fn dense_rref(rows: Vec<SparseVec>, ncols: usize) -> Rref {
    let mut m: Vec<Vec<Rational>> = rows
        .into_iter()
        .map(|r| {
            let mut d = vec![Rational::zero(); ncols];
            for (i, v) in r {
                d[i] = v;
            }
            d
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut top = 0;
    for c in 0..ncols {
        if top == m.len() {
            break;
        }
        let Some(p) = (top..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(top, p);
        let inv = m[top][c].recip();
        for v in m[top].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[top].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == top || row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &(&a * y);
                }
            }
        }
        pivot_cols.push(c);
        top += 1;
    }
    pivot_cols
        .into_iter()
        .zip(m)
        .map(|(c, row)| {
            let sparse = row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
            (c, sparse)
        })
        .collect()
}

pub fn rank(m: &SparseMatrix) -> usize {
    if m.ncols() <= m.nrows() {
        // columns as vectors of length nrows
        rref(m.columns().to_vec(), m.nrows()).len()
    } else {
        rref(m.transpose().columns().to_vec(), m.ncols()).len()
    }
}

pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let n = m.ncols();
    let reduced = rref(m.transpose().columns().to_vec(), n);
    let pivot_cols: Vec<usize> = reduced.iter().map(|(c, _)| *c).collect();
    let mut is_pivot = vec![false; n];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (c, row) in &reduced {
            if let Ok(k) = row.binary_search_by_key(&free, |e| e.0) {
                v[*c] = -row[k].1.clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &SparseMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, Error> {
    if b.len() != m.nrows() {
        return Err(Error::Dimension(format!("right-hand side has length {}, matrix has {} rows", b.len(), m.nrows())));
    }
    let n = m.ncols();
    let mut rows = m.transpose().columns().to_vec();
    for (row, bi) in rows.iter_mut().zip(b) {
        if !bi.is_zero() {
            row.push((n, bi.clone()));
        }
    }
    let reduced = rref(rows, n + 1);
    if reduced.iter().any(|(c, _)| *c == n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (c, row) in &reduced {
        if let Some((last, v)) = row.last() {
            if *last == n {
                x[*c] = v.clone();
            }
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        SparseMatrix::from_dense(&rows)
    }

    #[test]
    fn identity_rank() {
        for n in [0, 1, 5, 70] {
            assert_eq!(SparseMatrix::identity(n).rank(), n);
        }
    }

    #[test]
    fn zero_kernel_is_everything() {
        let z = SparseMatrix::zeros(3, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 4);
    }

    #[test]
    fn singular_two_by_two() {
        // by hand: rows (1,2),(2,4) reduce to (1,2),(0,0); b=(1,2) consistent, b=(1,3) not
        let m = dense(&[&[1, 2], &[2, 4]]);
        let x = m.solve(&[q(1), q(2)]).unwrap().expect("consistent");
        assert_eq!(x, vec![q(1), q(0)]);
        assert!(m.solve(&[q(1), q(3)]).unwrap().is_none());
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![q(-2), q(1)]]);
    }

    #[test]
    fn sparse_and_dense_paths_agree() {
        // a 3x70 matrix exercises the sparse path; its 70x3 transpose the dense one
        let mut trip = Vec::new();
        for j in 0..70usize {
            trip.push((j % 3, j, q((j as i64 % 5) - 2)));
            if j % 7 == 0 {
                trip.push(((j + 1) % 3, j, q(1)));
            }
        }
        let m = SparseMatrix::from_triplets(3, 70, trip).unwrap();
        assert_eq!(m.rank(), m.transpose().rank());
        let k = m.kernel_basis();
        assert_eq!(k.len() + m.rank(), 70);
        for v in &k {
            let sv: SparseVec = v.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            assert!(m.apply(&sv).is_empty());
        }
    }
}
