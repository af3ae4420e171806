//! Orthant-convex regions `Γ = conv(S) + C` with `C` the closed nonnegative
//! orthant: canonical generator sets, Minkowski calculus, membership and
//! interior tests, cofiniteness, truncation and support values.
//!
//! A region is canonical when its generator set is exactly the vertex set of
//! `conv(S) + C`, sorted lexicographically; two regions are equal iff their
//! canonical generator sets are equal. Facets beyond the orthant are cached
//! at construction, so values are immutable and freely shareable.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{facets_of_generated_region, HalfSpace, Point};
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct Region {
    dim: usize,
    generators: Vec<Point>,
    facets: Vec<HalfSpace>,
    cofinite: bool,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.generators == other.generators
    }
}

impl Eq for Region {}

impl PartialOrd for Region {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Region {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.dim, &self.generators).cmp(&(other.dim, &other.generators))
    }
}

impl core::hash::Hash for Region {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.generators.hash(state);
    }
}

impl Region {
    /// Canonicalizes a generating set: duplicates and non-vertex generators
    /// are dropped, facets are computed and cached. The vertex set is read
    /// back from the facet description through a second (small) double
    /// description run, so large redundant generator sets stay cheap.
    pub fn from_generators(points: Vec<Point>) -> Result<Region> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyGeneratorSet);
        };
        let dim = first.dim();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if !p.is_nonnegative() {
                return Err(Error::NegativeCoordinate);
            }
        }

        let facets = facets_of_generated_region(&points, dim)?;
        let generators = crate::geometry::vertices_of_orthant_region(&facets, dim);
        debug_assert!(!generators.is_empty());
        // every vertex of conv(S) + C is one of the input points
        debug_assert!(generators.iter().all(|v| points.contains(v)));

        let cofinite = facets
            .iter()
            .all(|h| h.normal().iter().all(BigInt::is_positive));
        Ok(Region {
            dim,
            generators,
            facets,
            cofinite,
        })
    }

    /// The full cone `C` itself (generated by the origin).
    pub fn full_cone(dim: usize) -> Region {
        Region::from_generators(alloc::vec![Point::zero(dim)]).expect("origin generates C")
    }

    /// The simplex region `Δ = {x >= 0 : x_1 + ... + x_n >= 1}`.
    pub fn simplex(dim: usize) -> Region {
        let gens = (0..dim)
            .map(|i| Point::axis(dim, i, Rational::from_integer(1.into())))
            .collect();
        Region::from_generators(gens).expect("axis points generate the simplex region")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical generator set: the vertices of the region, sorted.
    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// Facets beyond the orthant constraints, sorted; all offsets are
    /// strictly positive.
    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// True iff the complement `C \ Γ` has finite volume. For finitely
    /// generated regions this happens exactly when every facet normal is
    /// componentwise strictly positive (a facet with a zero normal entry
    /// leaves an unbounded slab of infinite volume in the complement, and
    /// conversely strictly positive normals bound the complement).
    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    fn check_dim(&self, p: &Point) -> Result<()> {
        if p.dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            })
        }
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        self.check_dim(p)?;
        Ok(p.is_nonnegative() && self.facets.iter().all(|h| h.satisfied_by(p)))
    }

    /// Interior membership in the ambient space: all facet inequalities
    /// strict and all coordinates strictly positive.
    pub fn interior_contains(&self, p: &Point) -> Result<bool> {
        self.check_dim(p)?;
        Ok(p.is_strictly_positive() && self.facets.iter().all(|h| h.strictly_satisfied_by(p)))
    }

    /// True iff `other ⊆ self`; it suffices to test the generators since
    /// the region is closed under adding nonnegative vectors.
    pub fn contains_region(&self, other: &Region) -> Result<bool> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn minkowski_sum(&self, other: &Region) -> Result<Region> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                sums.push(a.add(b));
            }
        }
        Region::from_generators(sums)
    }

    /// `λ Γ`; `λ = 0` degenerates to the full cone. Facets rescale in place,
    /// so no re-canonicalization is needed.
    pub fn scale(&self, factor: &Rational) -> Result<Region> {
        if factor.is_negative() {
            return Err(Error::NegativeScalar);
        }
        if factor.is_zero() {
            return Ok(Region::full_cone(self.dim));
        }
        Ok(Region {
            dim: self.dim,
            generators: self.generators.iter().map(|g| g.scale(factor)).collect(),
            facets: self.facets.iter().map(|h| h.scale_offset(factor)).collect(),
            cofinite: self.cofinite,
        })
    }

    /// Region generated by the generators plus `N e_1, ..., N e_n`; always
    /// cofinite, contains the original region, and equals it for cofinite
    /// regions once `N` is large enough.
    pub fn truncate(&self, level: &Rational) -> Result<Region> {
        if !level.is_positive() {
            return Err(Error::NonpositiveN);
        }
        let mut gens = self.generators.clone();
        for i in 0..self.dim {
            gens.push(Point::axis(self.dim, i, level.clone()));
        }
        Region::from_generators(gens)
    }

    /// Support value `sup { <s, t> : s in Γ }` for componentwise nonpositive
    /// `t`; the supremum is attained on the generators since recession
    /// directions only decrease the pairing.
    pub fn support_value(&self, t: &Point) -> Result<Rational> {
        self.check_dim(t)?;
        if !t.is_nonpositive() {
            return Err(Error::PositiveDirection);
        }
        Ok(self
            .generators
            .iter()
            .map(|g| g.dot(t))
            .max()
            .expect("canonical regions have generators"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn region(rows: &[&[i64]]) -> Region {
        Region::from_generators(rows.iter().map(|r| Point::from_integers(r)).collect()).unwrap()
    }

    fn p(coords: &[i64]) -> Point {
        Point::from_integers(coords)
    }

    #[test]
    fn canonicalization_drops_non_vertices() {
        let a = region(&[&[2, 0], &[0, 3], &[2, 1]]);
        assert_eq!(a.generators(), &[p(&[0, 3]), p(&[2, 0])]);
        assert_eq!(a, region(&[&[2, 0], &[0, 3]]));
    }

    #[test]
    fn origin_generates_the_full_cone() {
        let c = region(&[&[0, 0]]);
        assert!(c.facets().is_empty());
        assert!(c.is_cofinite());
        assert_eq!(c, Region::full_cone(2));
    }

    #[test]
    fn simplex_region_is_canonical() {
        let delta = Region::simplex(2);
        assert_eq!(delta, region(&[&[1, 0], &[0, 1]]));
        assert_eq!(delta.facets().len(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Region::from_generators(alloc::vec![]),
            Err(Error::EmptyGeneratorSet)
        );
        assert_eq!(
            Region::from_generators(alloc::vec![Point::new(alloc::vec![rat(-1), rat(0)])]),
            Err(Error::NegativeCoordinate)
        );
        assert_eq!(
            Region::from_generators(alloc::vec![p(&[1, 0]), p(&[1, 0, 0])]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn minkowski_sum_canonicalizes() {
        let delta = Region::simplex(2);
        assert_eq!(delta.minkowski_sum(&delta).unwrap(), region(&[&[2, 0], &[0, 2]]));

        // (1,3) = midpoint-ish of (2,1) and (0,4)+(0,?) drops out as non-vertex.
        let a = region(&[&[2, 0], &[0, 3]]);
        let sum = a.minkowski_sum(&delta).unwrap();
        assert_eq!(sum.generators(), &[p(&[0, 4]), p(&[2, 1]), p(&[3, 0])]);

        // The full cone is the identity element.
        assert_eq!(a.minkowski_sum(&Region::full_cone(2)).unwrap(), a);
    }

    #[test]
    fn scaling() {
        let delta = Region::simplex(2);
        assert_eq!(delta.scale(&rat(2)).unwrap(), region(&[&[2, 0], &[0, 2]]));
        let a = region(&[&[2, 0], &[0, 3]]);
        assert_eq!(a.scale(&rat(1)).unwrap(), a);
        assert_eq!(a.scale(&rat(0)).unwrap(), Region::full_cone(2));
        assert_eq!(a.scale(&rat(-1)), Err(Error::NegativeScalar));
    }

    #[test]
    fn membership_and_interior() {
        let a = region(&[&[2, 0], &[0, 3]]);
        assert!(!a.contains(&p(&[1, 1])).unwrap()); // 3+2 = 5 < 6
        assert!(a.interior_contains(&p(&[2, 1])).unwrap()); // 8 > 6
        let delta = Region::simplex(2);
        assert!(delta.contains(&p(&[1, 0])).unwrap());
        assert!(!delta.interior_contains(&p(&[1, 0])).unwrap());
    }

    #[test]
    fn cofiniteness() {
        assert!(!region(&[&[1, 1]]).is_cofinite());
        assert!(region(&[&[2, 0], &[0, 3]]).is_cofinite());
        assert!(Region::full_cone(2).is_cofinite());
    }

    #[test]
    fn truncation() {
        let a = region(&[&[1, 1]]);
        let t = a.truncate(&rat(5)).unwrap();
        assert_eq!(t.generators(), &[p(&[0, 5]), p(&[1, 1]), p(&[5, 0])]);
        assert!(t.is_cofinite());
        assert!(t.contains_region(&a).unwrap());

        let delta = Region::simplex(2);
        assert_eq!(delta.truncate(&rat(1)).unwrap(), delta);

        let b = region(&[&[2, 0], &[0, 3]]);
        assert_eq!(b.truncate(&rat(10)).unwrap(), b);
        assert_eq!(b.truncate(&rat(0)), Err(Error::NonpositiveN));
    }

    #[test]
    fn support_values() {
        let delta = Region::simplex(2);
        let t = Point::new(alloc::vec![rat(-1), rat(-1)]);
        assert_eq!(delta.support_value(&t).unwrap(), rat(-1));

        let a = region(&[&[2, 0], &[0, 3]]);
        assert_eq!(a.support_value(&t).unwrap(), rat(-2));

        assert_eq!(Region::full_cone(2).support_value(&t).unwrap(), rat(0));
        assert_eq!(
            a.support_value(&p(&[1, -1])),
            Err(Error::PositiveDirection)
        );
    }

    #[test]
    fn rational_generators_are_fine() {
        let a = Region::from_generators(alloc::vec![
            Point::new(alloc::vec![ratio(1, 2), rat(0)]),
            Point::new(alloc::vec![rat(0), ratio(3, 2)]),
        ])
        .unwrap();
        assert!(a.is_cofinite());
        assert_eq!(a.facets().len(), 1);
    }
}
