//! Double description method for pointed polyhedral cones.
//!
//! Given integer constraint rows A, computes the extreme rays of
//! `{ z : A z >= 0 }` by incremental insertion with the combinatorial
//! adjacency test. Rays are kept as primitive integer vectors so all
//! comparisons are exact and canonical.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bitset::BitSet;
use crate::linalg;
use crate::rational::{primitive_of_integers, Rational};

#[derive(Debug, Clone)]
struct Ray {
    coords: Vec<BigInt>,
    /// Inserted rows satisfied with equality.
    zero: BitSet,
}

fn dot(row: &[BigInt], v: &[BigInt]) -> BigInt {
    row.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Extreme rays of the cone `{ z in R^dim : row . z >= 0 for all rows }`.
///
/// Requires a pointed cone, i.e. the rows must have full column rank;
/// returns `None` otherwise. The output is lexicographically sorted and
/// each ray is a primitive integer vector. An empty output means the cone
/// is `{0}`.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], dim: usize) -> Option<Vec<Vec<BigInt>>> {
    debug_assert!(rows.iter().all(|r| r.len() == dim));
    let rational_rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let basis = linalg::independent_rows(&rational_rows);
    if basis.len() < dim {
        return None;
    }

    // Initial simplicial cone from the basis rows: ray k solves
    // basis_row_i . ray_k = delta_ik, so its zero set is exact by construction.
    let basis_matrix: Vec<Vec<Rational>> = basis.iter().map(|&i| rational_rows[i].clone()).collect();
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut rhs = alloc::vec![Rational::zero(); dim];
        rhs[k] = Rational::from_integer(1.into());
        let sol = linalg::solve(&basis_matrix, &rhs).expect("basis rows are independent");
        let coords = crate::rational::primitive_integer_vector(&sol).expect("unit solve is nonzero");
        let mut zero = BitSet::new(rows.len());
        for (j, &row_idx) in basis.iter().enumerate() {
            if j != k {
                zero.insert(row_idx);
            }
        }
        rays.push(Ray { coords, zero });
    }

    let mut inserted: Vec<usize> = basis.clone();
    for idx in 0..rows.len() {
        if basis.contains(&idx) {
            continue;
        }
        insert_row(&mut rays, rows, &inserted, idx);
        inserted.push(idx);
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.coords).collect();
    out.sort();
    Some(out)
}

fn insert_row(rays: &mut Vec<Ray>, rows: &[Vec<BigInt>], inserted: &[usize], idx: usize) {
    let row = &rows[idx];
    let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
    if values.iter().all(|v| !v.is_negative()) {
        for (ray, v) in rays.iter_mut().zip(&values) {
            if v.is_zero() {
                ray.zero.insert(idx);
            }
        }
        return;
    }

    let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
    let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
    let dim = row.len();

    let mut fresh: Vec<Ray> = Vec::new();
    for &p in &pos {
        for &m in &neg {
            let common = rays[p].zero.intersection(&rays[m].zero);
            if common.count() + 2 < dim {
                continue;
            }
            let adjacent = rays
                .iter()
                .enumerate()
                .all(|(i, r)| i == p || i == m || !common.is_subset_of(&r.zero));
            if !adjacent {
                continue;
            }
            // row.w = 0 by construction; both coefficients are positive.
            let coords: Vec<BigInt> = rays[m]
                .coords
                .iter()
                .zip(&rays[p].coords)
                .map(|(mc, pc)| &values[p] * mc - &values[m] * pc)
                .collect();
            let coords = primitive_of_integers(coords);
            // For every inserted row r both parents are feasible, so
            // r.w = (row.p)(r.m) + (-row.m)(r.p) is a sum of nonnegative
            // terms: it vanishes exactly when r is tight on both parents.
            let mut zero = common.clone();
            zero.insert(idx);
            debug_assert!(
                inserted.len() > 64
                    || inserted
                        .iter()
                        .chain(core::iter::once(&idx))
                        .all(|&j| dot(&rows[j], &coords).is_zero() == zero.contains(j))
            );
            fresh.push(Ray { coords, zero });
        }
    }

    let mut kept: Vec<Ray> = Vec::with_capacity(pos.len() + fresh.len());
    for (i, ray) in rays.drain(..).enumerate() {
        if values[i].is_negative() {
            continue;
        }
        let mut ray = ray;
        if values[i].is_zero() {
            ray.zero.insert(idx);
        }
        kept.push(ray);
    }
    kept.extend(fresh);
    *rays = kept;
}
