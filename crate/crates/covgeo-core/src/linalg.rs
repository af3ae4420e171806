//! Exact Gaussian elimination over the rationals: rank, determinant,
//! square solves and independent-row selection. No pivot heuristics are
//! needed since the arithmetic is exact; the first nonzero entry wins.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::rational::Rational;

/// Row-reduces `m` in place, returning the pivot (row, col) pairs.
fn eliminate(m: &mut [Vec<Rational>]) -> Vec<(usize, usize)> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, below) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in below {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot_row[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &factor * p;
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let mut m = matrix.to_vec();
    eliminate(&mut m).len()
}

/// Determinant of a square matrix.
pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Rational::from_integer(1.into());
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != r {
            m.swap(r, p);
            det = -det;
        }
        det *= &m[r][c];
        let (top, below) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in below {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot_row[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &factor * p;
            }
        }
        r += 1;
    }
    det
}

/// Solves the square system `a x = b`. `None` when `a` is singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut m);
    if pivots.len() != n || pivots.iter().any(|&(_, c)| c >= n) {
        return None;
    }
    let mut x = alloc::vec![Rational::zero(); n];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = m[r][n].clone();
        for j in (c + 1)..n {
            acc -= &m[r][j] * &x[j];
        }
        x[c] = acc / &m[r][c];
    }
    Some(x)
}

/// Indices of a maximal linearly independent subset of rows, in order.
pub fn independent_rows(matrix: &[Vec<Rational>]) -> Vec<usize> {
    let cols = if matrix.is_empty() { 0 } else { matrix[0].len() };
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        basis.push(row.clone());
        if rank(&basis) == basis.len() {
            chosen.push(i);
            if chosen.len() == cols {
                break;
            }
        } else {
            basis.pop();
        }
    }
    chosen
}
