//! m-primary monomial ideals as minimal antichains of exponent vectors:
//! staircase membership, products and powers, exact colength by lattice
//! enumeration, Newton polyhedra, and multiplicities as `n!` times
//! covolumes of the Newton polyhedra with the colength count as an
//! independent Hilbert-Samuel oracle.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::covolume::{covolume, mixed_covolume};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::rational::{factorial, Rational};
use crate::region::Region;

/// Monomial ideal given by its minimal generators (a pairwise incomparable
/// set of exponent vectors, sorted lexicographically). The unit ideal is
/// represented by the single generator `0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Vec<u64>>,
}

fn dominates(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Keeps only the minimal elements under componentwise order, sorted and
/// deduplicated.
fn minimal_antichain(mut gens: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .map(|g| !gens.iter().any(|h| h != g && dominates(g, h)))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

impl MonomialIdeal {
    pub fn new(dim: usize, gens: Vec<Vec<u64>>) -> Result<MonomialIdeal> {
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        for g in &gens {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                });
            }
        }
        Ok(MonomialIdeal {
            dim,
            gens: minimal_antichain(gens),
        })
    }

    /// The maximal ideal `(z_1, ..., z_n)`.
    pub fn maximal(dim: usize) -> MonomialIdeal {
        let gens = (0..dim)
            .map(|i| {
                let mut g = alloc::vec![0u64; dim];
                g[i] = 1;
                g
            })
            .collect();
        MonomialIdeal::new(dim, gens).expect("dim >= 1 gives nonempty generators")
    }

    /// The unit ideal (contains 1).
    pub fn unit(dim: usize) -> MonomialIdeal {
        MonomialIdeal::new(dim, alloc::vec![alloc::vec![0u64; dim]]).expect("one generator")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].iter().all(|&c| c == 0)
    }

    /// Monomial membership: some generator divides the exponent vector.
    pub fn contains_exponent(&self, v: &[u64]) -> bool {
        self.gens.iter().any(|g| dominates(v, g))
    }

    /// Ideal containment `self ⊆ other` by staircase containment of the
    /// generators.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains_exponent(g))
    }

    /// m-primary: a pure power of every variable among the generators
    /// (a generator supported on that axis alone).
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|i| self.pure_power_exponent(i).is_some())
    }

    /// Smallest exponent `e` with `z_i^e` in the ideal, read off the
    /// generators supported on axis i alone.
    fn pure_power_exponent(&self, i: usize) -> Option<u64> {
        self.gens
            .iter()
            .filter(|g| g.iter().enumerate().all(|(j, &c)| j == i || c == 0))
            .map(|g| g[i])
            .min()
    }

    /// Newton polyhedron `conv(generators) + C`; cofinite iff the ideal is
    /// m-primary.
    pub fn newton_polyhedron(&self) -> Region {
        let points = self
            .gens
            .iter()
            .map(|g| {
                Point::new(
                    g.iter()
                        .map(|&c| Rational::from_integer(BigInt::from(c)))
                        .collect(),
                )
            })
            .collect();
        Region::from_generators(points).expect("ideal generators are nonempty and nonnegative")
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        MonomialIdeal::new(self.dim, sums)
    }

    pub fn power(&self, m: u32) -> Result<MonomialIdeal> {
        if m == 0 {
            return Err(Error::NonpositiveM);
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Exact count of monomials outside the ideal, enumerated within the box
    /// given by the per-axis pure-power generators (finite by m-primality).
    pub fn colength(&self) -> Result<u64> {
        let bounds: Vec<u64> = (0..self.dim)
            .map(|i| self.pure_power_exponent(i).ok_or(Error::NotMPrimary))
            .collect::<Result<_>>()?;
        let mut count = 0u64;
        let mut v = alloc::vec![0u64; self.dim];
        'outer: loop {
            if !self.contains_exponent(&v) {
                count += 1;
            }
            // mixed-radix increment over the box
            for i in (0..self.dim).rev() {
                v[i] += 1;
                if v[i] < bounds[i] {
                    continue 'outer;
                }
                v[i] = 0;
            }
            break;
        }
        Ok(count)
    }
}

/// Hilbert-Samuel multiplicity `e(I) = n! Covol(N(I))`.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<Rational> {
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    Ok(factorial(ideal.dim()) * covolume(&ideal.newton_polyhedron())?)
}

/// Mixed multiplicity `e(I_1, ..., I_n) = n! Covol(N(I_1), ..., N(I_n))`.
pub fn mixed_multiplicity(ideals: &[MonomialIdeal]) -> Result<Rational> {
    let Some(first) = ideals.first() else {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: 0,
        });
    };
    let n = first.dim();
    if ideals.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: ideals.len(),
        });
    }
    for ideal in ideals {
        if !ideal.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
    }
    // compute each distinct Newton polyhedron once; repeated ideals are the
    // common case in the Covol_k-style families
    let mut distinct: Vec<(&MonomialIdeal, Region)> = Vec::new();
    let polyhedra: Vec<Region> = ideals
        .iter()
        .map(|ideal| {
            if let Some((_, region)) = distinct.iter().find(|(i, _)| *i == ideal) {
                region.clone()
            } else {
                let region = ideal.newton_polyhedron();
                distinct.push((ideal, region.clone()));
                region
            }
        })
        .collect();
    Ok(factorial(n) * mixed_covolume(&polyhedra)?.value)
}

/// One row of the brute-force multiplicity oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSamuelRow {
    pub m: u32,
    /// `n! * colength(I^m) / m^n`
    pub normalized: Rational,
    /// `normalized - e(I)`, always nonnegative and shrinking like C/m.
    pub deviation: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSamuelReport {
    /// The exact limit candidate `n! Covol(N(I))`.
    pub limit: Rational,
    pub rows: Vec<HilbertSamuelRow>,
}

/// Independent Hilbert-Samuel oracle: the normalized colengths
/// `n! colength(I^m) / m^n` for `m = 1..=m_max`, which converge to the
/// multiplicity from above.
pub fn hilbert_samuel_oracle(ideal: &MonomialIdeal, m_max: u32) -> Result<HilbertSamuelReport> {
    if m_max == 0 {
        return Err(Error::NonpositiveM);
    }
    let limit = multiplicity(ideal)?;
    let n = ideal.dim();
    let nf = factorial(n);
    let mut rows = Vec::with_capacity(m_max as usize);
    let mut power = MonomialIdeal::unit(ideal.dim());
    for m in 1..=m_max {
        power = power.product(ideal)?;
        let colength = power.colength()?;
        let mut m_pow = Rational::from_integer(1.into());
        for _ in 0..n {
            m_pow *= Rational::from_integer(BigInt::from(m));
        }
        let normalized = &nf * Rational::from_integer(BigInt::from(colength)) / m_pow;
        let deviation = &normalized - &limit;
        rows.push(HilbertSamuelRow {
            m,
            normalized,
            deviation,
        });
    }
    Ok(HilbertSamuelReport { limit, rows })
}
