//! Shared test oracles, deliberately independent of the library's
//! polyhedral kernels: membership by Fourier-Motzkin feasibility and
//! polygon area by the shoelace formula.
#![allow(dead_code)] // not every test binary uses every oracle

use covgeo_core::rational::{rat, Rational};
use covgeo_core::Point;
use num_traits::{Signed, Zero};

/// Decides `p ∈ conv(S) + C` by eliminating the barycentric coordinates
/// from `μ >= 0, Σμ = 1, Σ μ_i s_i <= p` with Fourier-Motzkin. Exact and
/// entirely facet-free.
pub fn membership_oracle(generators: &[Point], p: &Point) -> bool {
    let k = generators.len();
    let n = p.dim();
    // constraints in the form coeffs . μ <= rhs
    let mut cons: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for i in 0..k {
        let mut c = vec![rat(0); k];
        c[i] = rat(-1);
        cons.push((c, rat(0)));
    }
    cons.push((vec![rat(1); k], rat(1)));
    cons.push((vec![rat(-1); k], rat(-1)));
    for j in 0..n {
        let coeffs: Vec<Rational> = generators.iter().map(|s| s.coords()[j].clone()).collect();
        cons.push((coeffs, p.coords()[j].clone()));
    }
    fourier_motzkin_feasible(cons, k)
}

fn fourier_motzkin_feasible(mut cons: Vec<(Vec<Rational>, Rational)>, vars: usize) -> bool {
    for v in (0..vars).rev() {
        let mut pos: Vec<(Vec<Rational>, Rational)> = Vec::new();
        let mut neg: Vec<(Vec<Rational>, Rational)> = Vec::new();
        let mut next: Vec<(Vec<Rational>, Rational)> = Vec::new();
        for (c, b) in cons {
            if c[v].is_positive() {
                pos.push((c, b));
            } else if c[v].is_negative() {
                neg.push((c, b));
            } else {
                next.push((c, b));
            }
        }
        for (cp, bp) in &pos {
            for (cn, bn) in &neg {
                // multiply the positive row by -cn[v] > 0 and the negative
                // row by cp[v] > 0; the v coefficient cancels exactly.
                let fp = -cn[v].clone();
                let fn_ = cp[v].clone();
                let coeffs: Vec<Rational> = cp
                    .iter()
                    .zip(cn)
                    .map(|(a, b)| &fp * a + &fn_ * b)
                    .collect();
                debug_assert!(coeffs[v].is_zero());
                next.push((coeffs, &fp * bp + &fn_ * bn));
            }
        }
        cons = next;
    }
    cons.iter().all(|(c, b)| {
        debug_assert!(c.iter().all(Zero::is_zero));
        !b.is_negative()
    })
}

/// Signed-area shoelace formula for an ordered simple polygon.
pub fn shoelace(polygon: &[(Rational, Rational)]) -> Rational {
    let k = polygon.len();
    let mut acc = rat(0);
    for i in 0..k {
        let (x1, y1) = &polygon[i];
        let (x2, y2) = &polygon[(i + 1) % k];
        acc += x1 * y2 - x2 * y1;
    }
    acc.abs() / rat(2)
}

#[allow(dead_code)]
pub fn lattice_point(coords: &[i64]) -> Point {
    Point::from_integers(coords)
}
