//! Exact covolumes and mixed covolumes.
//!
//! The covolume of a cofinite region is the volume of its complement in the
//! orthant, computed inside an exact bounding box derived from the facet
//! data. The mixed covolume is the polarization of the covolume — the unique
//! symmetric multilinear form agreeing with it on the diagonal — computed by
//! the alternating-sign inclusion-exclusion identity and cross-checked by an
//! independent route that interpolates the covolume polynomial
//! `P(λ) = Covol(λ_1 Γ_1 + ... + λ_n Γ_n)` on an integer grid and reads off
//! the coefficient of `λ_1 ... λ_n / n!`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{polytope_volume, vertex_enumeration, HalfSpace};
use crate::rational::{binomial, factorial, Rational};
use crate::region::Region;

/// How a mixed covolume value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedMethod {
    /// Alternating-sign polarization over sums of argument subsets.
    Polarization,
    /// Interpolation of the covolume polynomial on an integer grid.
    Interpolation,
}

/// Mixed covolume value with an audit trail.
///
/// For the polarization route the terms are `(multiplicity vector β,
/// Covol(Σ β_i Γ_i))` over the distinct arguments; for the interpolation
/// route they are `(exponent α, coefficient of λ^α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedCovolReport {
    pub value: Rational,
    pub method: MixedMethod,
    pub terms: Vec<(Vec<u32>, Rational)>,
}

/// Smallest box size `M` such that `C \ Γ ⊆ [0, M]^n`, from the facet data:
/// the maximum of `offset / min(normal)` over facets. Zero for the full cone.
pub fn complement_box_bound(region: &Region) -> Result<Rational> {
    if !region.is_cofinite() {
        return Err(Error::NotCofinite);
    }
    let mut bound = Rational::zero();
    for facet in region.facets() {
        let min_entry = facet
            .normal()
            .iter()
            .min()
            .expect("facet normals are nonempty")
            .clone();
        debug_assert!(min_entry.is_positive());
        let candidate = facet.offset() / Rational::from_integer(min_entry);
        if candidate > bound {
            bound = candidate;
        }
    }
    Ok(bound)
}

/// Exact `Vol(C \ Γ)`.
pub fn covolume(region: &Region) -> Result<Rational> {
    let bound = complement_box_bound(region)?;
    if bound.is_zero() {
        return Ok(Rational::zero());
    }
    covolume_with_box(region, &bound)
}

/// Covolume computed against an explicit box `[0, box_size]^n`; the result
/// is independent of the box as long as it dominates
/// [`complement_box_bound`] (exercised by tests).
pub fn covolume_with_box(region: &Region, box_size: &Rational) -> Result<Rational> {
    if !region.is_cofinite() {
        return Err(Error::NotCofinite);
    }
    let n = region.dim();
    let mut halfspaces: Vec<HalfSpace> = region.facets().to_vec();
    for i in 0..n {
        let mut low = alloc::vec![Rational::zero(); n];
        low[i] = Rational::one();
        halfspaces.push(HalfSpace::new(&low, Rational::zero()).expect("axis normal"));
        let mut high = alloc::vec![Rational::zero(); n];
        high[i] = -Rational::one();
        halfspaces.push(HalfSpace::new(&high, -box_size.clone()).expect("axis normal"));
    }
    let vertices = vertex_enumeration(&halfspaces, n)?;
    let inside = polytope_volume(&vertices)?;
    let mut box_volume = Rational::one();
    for _ in 0..n {
        box_volume *= box_size;
    }
    Ok(box_volume - inside.value)
}

fn check_family(regions: &[Region]) -> Result<usize> {
    let Some(first) = regions.first() else {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: 0,
        });
    };
    let n = first.dim();
    if regions.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: regions.len(),
        });
    }
    for r in regions {
        if r.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.dim(),
            });
        }
        if !r.is_cofinite() {
            return Err(Error::NotCofinite);
        }
    }
    Ok(n)
}

/// Mixed covolume `Covol(Γ_1, ..., Γ_n)` by the alternating polarization
/// identity, grouping repeated arguments so each distinct Minkowski sum is
/// evaluated once:
///
/// ```text
/// Covol(Γ_1,...,Γ_n) = 1/n! Σ_{∅≠J⊆{1..n}} (-1)^{n-|J|} Covol(Σ_{i∈J} Γ_i)
/// ```
pub fn mixed_covolume(regions: &[Region]) -> Result<MixedCovolReport> {
    let n = check_family(regions)?;

    // Group equal arguments with multiplicities, keeping first-seen order.
    let mut classes: Vec<(&Region, u32)> = Vec::new();
    for r in regions {
        match classes.iter_mut().find(|(c, _)| *c == r) {
            Some((_, m)) => *m += 1,
            None => classes.push((r, 1)),
        }
    }
    let bounds: Vec<u32> = classes.iter().map(|&(_, m)| m).collect();

    let mut acc = Rational::zero();
    let mut terms = Vec::new();
    for beta in multi_indices_bounded(&bounds) {
        let weight: u32 = beta.iter().sum();
        if weight == 0 {
            continue;
        }
        let mut coeff = BigInt::one();
        for (b, &(_, m)) in beta.iter().zip(&classes) {
            coeff *= binomial(m, *b);
        }
        if (n - weight as usize) % 2 == 1 {
            coeff = -coeff;
        }

        let mut sum = Region::full_cone(n);
        for (b, &(r, _)) in beta.iter().zip(&classes) {
            if *b > 0 {
                let scaled = r.scale(&Rational::from_integer(BigInt::from(*b)))?;
                sum = sum.minkowski_sum(&scaled)?;
            }
        }
        let cov = covolume(&sum)?;
        acc += Rational::from_integer(coeff) * &cov;
        terms.push((beta, cov));
    }

    Ok(MixedCovolReport {
        value: acc / factorial(n),
        method: MixedMethod::Polarization,
        terms,
    })
}

/// Independent route: `P(λ) = Covol(λ_1 Γ_1 + ... + λ_n Γ_n)` is a
/// homogeneous polynomial of degree n. Its coefficients are determined
/// exactly on the simplex lattice `{λ ∈ Z^n_{≥0} : Σλ = n}`, verified with
/// zero residual on held-out points `1 + e_i`, and the mixed covolume is the
/// coefficient of `λ_1 ⋯ λ_n` divided by `n!`.
pub fn mixed_covolume_interpolated(regions: &[Region]) -> Result<MixedCovolReport> {
    let n = check_family(regions)?;

    let exponents = multi_indices_of_degree(n, n as u32);
    let grid = &exponents; // the simplex lattice is unisolvent for degree n

    let mut matrix: Vec<Vec<Rational>> = Vec::with_capacity(grid.len());
    let mut rhs: Vec<Rational> = Vec::with_capacity(grid.len());
    for lambda in grid {
        matrix.push(
            exponents
                .iter()
                .map(|alpha| monomial_value(lambda, alpha))
                .collect(),
        );
        rhs.push(covolume(&scaled_sum(regions, lambda)?)?);
    }
    let coeffs =
        crate::linalg::solve(&matrix, &rhs).ok_or(Error::SingularInterpolationSystem)?;

    // Held-out residuals: zero residual here is what certifies the
    // homogeneous-polynomial claim (and with it the sign convention of the
    // polarization route).
    for i in 0..n {
        let mut lambda = alloc::vec![1u32; n];
        lambda[i] += 1;
        let predicted: Rational = exponents
            .iter()
            .zip(&coeffs)
            .map(|(alpha, c)| c * monomial_value(&lambda, alpha))
            .sum();
        if predicted != covolume(&scaled_sum(regions, &lambda)?)? {
            return Err(Error::SingularInterpolationSystem);
        }
    }

    let diagonal = alloc::vec![1u32; n];
    let value = exponents
        .iter()
        .zip(&coeffs)
        .find(|(alpha, _)| **alpha == diagonal)
        .map(|(_, c)| c.clone())
        .expect("multilinear exponent present")
        / factorial(n);

    Ok(MixedCovolReport {
        value,
        method: MixedMethod::Interpolation,
        terms: exponents.into_iter().zip(coeffs).collect(),
    })
}

/// `Covol_k(Γ) = Covol(Γ, ..., Γ, Δ, ..., Δ)` with k copies of Γ.
pub fn covol_k(region: &Region, k: usize) -> Result<Rational> {
    let n = region.dim();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let mut family = Vec::with_capacity(n);
    for _ in 0..k {
        family.push(region.clone());
    }
    for _ in k..n {
        family.push(Region::simplex(n));
    }
    Ok(mixed_covolume(&family)?.value)
}

fn scaled_sum(regions: &[Region], lambda: &[u32]) -> Result<Region> {
    let n = regions[0].dim();
    let mut sum = Region::full_cone(n);
    for (r, &l) in regions.iter().zip(lambda) {
        if l > 0 {
            sum = sum.minkowski_sum(&r.scale(&Rational::from_integer(BigInt::from(l)))?)?;
        }
    }
    Ok(sum)
}

fn monomial_value(lambda: &[u32], alpha: &[u32]) -> Rational {
    let mut acc = BigInt::one();
    for (&l, &a) in lambda.iter().zip(alpha) {
        acc *= BigInt::from(l).pow(a);
    }
    Rational::from_integer(acc)
}

/// All β with 0 <= β_i <= bounds[i], in lexicographic order.
fn multi_indices_bounded(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = alloc::vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for prefix in out {
            for v in 0..=b {
                let mut item = prefix.clone();
                item.push(v);
                next.push(item);
            }
        }
        out = next;
    }
    out
}

/// All α ∈ Z^vars_{>=0} with |α| = degree, in lexicographic order.
fn multi_indices_of_degree(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    if vars == 1 {
        return alloc::vec![alloc::vec![degree]];
    }
    let mut out = Vec::new();
    for first in 0..=degree {
        for rest in multi_indices_of_degree(vars - 1, degree - first) {
            let mut item = Vec::with_capacity(vars);
            item.push(first);
            item.extend(rest);
            out.push(item);
        }
    }
    out
}
