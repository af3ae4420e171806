//! Exact polyhedral primitives: facet enumeration of `conv(S) + C` where
//! `C` is the nonnegative orthant, vertex enumeration of bounded
//! H-polytopes, and exact volume by recursive triangulation. Everything
//! runs over arbitrary-precision rationals; there is no floating point
//! anywhere in this module.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dd;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{primitive_integer_vector, primitive_of_integers, Rational};

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| crate::rational::rat(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Point::new(alloc::vec![Rational::zero(); dim])
    }

    /// i-th standard basis vector scaled by `c`.
    pub fn axis(dim: usize, i: usize, c: Rational) -> Self {
        let mut coords = alloc::vec![Rational::zero(); dim];
        coords[i] = c;
        Point::new(coords)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dot(&self, other: &Point) -> Rational {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: &Rational) -> Point {
        Point::new(self.coords.iter().map(|c| c * factor).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.coords.iter().all(|c| c.is_positive())
    }

    pub fn is_nonpositive(&self) -> bool {
        self.coords.iter().all(|c| !c.is_positive())
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &Point) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b)
    }
}

/// Closed half-space `{ x : normal . x >= offset }`, with the normal stored
/// as a primitive integer vector so equal facets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    normal: Vec<BigInt>,
    offset: Rational,
}

impl HalfSpace {
    /// Canonicalizes the normal to a primitive integer vector, rescaling the
    /// offset to keep the same half-space.
    pub fn new(normal: &[Rational], offset: Rational) -> Option<Self> {
        let primitive = primitive_integer_vector(normal)?;
        // normal = t * primitive with t > 0; offset rescales by the same t.
        let i = normal.iter().position(|c| !c.is_zero())?;
        let t = &normal[i] / Rational::from_integer(primitive[i].clone());
        debug_assert!(t.is_positive());
        Some(HalfSpace {
            normal: primitive,
            offset: offset / t,
        })
    }

    pub fn from_integers(normal: &[i64], offset: i64) -> Self {
        let normal: Vec<Rational> = normal.iter().map(|&c| crate::rational::rat(c)).collect();
        HalfSpace::new(&normal, crate::rational::rat(offset)).expect("nonzero normal")
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn eval(&self, p: &Point) -> Rational {
        let dot: Rational = self
            .normal
            .iter()
            .zip(p.coords())
            .map(|(n, c)| Rational::from_integer(n.clone()) * c)
            .sum();
        dot - &self.offset
    }

    pub fn satisfied_by(&self, p: &Point) -> bool {
        !self.eval(p).is_negative()
    }

    pub fn strictly_satisfied_by(&self, p: &Point) -> bool {
        self.eval(p).is_positive()
    }

    /// Scales the half-space `{normal . x >= offset}` to `{normal . x >= t*offset}`,
    /// which is the facet of the region scaled by `t`.
    pub fn scale_offset(&self, t: &Rational) -> HalfSpace {
        HalfSpace {
            normal: self.normal.clone(),
            offset: &self.offset * t,
        }
    }
}

fn check_dims<'a, I: Iterator<Item = &'a Point>>(mut points: I, dim: usize) -> Result<()> {
    points.try_for_each(|p| {
        if p.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            })
        }
    })
}

/// Lifts a point to the primitive integer vector on the ray of `(1, p)`.
fn lift_point(p: &Point) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(p.dim() + 1);
    v.push(Rational::one());
    v.extend(p.coords().iter().cloned());
    primitive_integer_vector(&v).expect("lifted point is nonzero")
}

/// H-representation of `conv(generators) + C` beyond the orthant constraints.
///
/// The returned half-spaces together with `x_i >= 0` cut out the region
/// exactly. Orthant facets are omitted: every returned facet has a
/// componentwise nonnegative normal and strictly positive offset, and none
/// is redundant.
pub fn facets_of_generated_region(generators: &[Point], dim: usize) -> Result<Vec<HalfSpace>> {
    if generators.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    check_dims(generators.iter(), dim)?;
    debug_assert!(generators.iter().all(Point::is_nonnegative));

    // Valid inequalities u.x >= b on the region correspond to rays (-b, u)
    // of the dual cone of the homogenization; its constraint rows are the
    // lifted generators plus the recession directions (0, e_i).
    let mut rows: Vec<Vec<BigInt>> = generators.iter().map(lift_point).collect();
    rows.sort();
    rows.dedup();
    for i in 0..dim {
        let mut row = alloc::vec![BigInt::zero(); dim + 1];
        row[i + 1] = BigInt::one();
        rows.push(row);
    }

    let rays = dd::extreme_rays(&rows, dim + 1).expect("dual cone is pointed");
    let mut facets = Vec::new();
    for ray in rays {
        let tail = &ray[1..];
        if tail.iter().all(Zero::is_zero) {
            // Trivial inequality 0.x >= -1.
            continue;
        }
        if ray[0].is_zero() {
            // Offset-zero facets of a generated region are orthant facets,
            // which stay implicit.
            debug_assert_eq!(tail.iter().filter(|c| !c.is_zero()).count(), 1);
            continue;
        }
        debug_assert!(ray[0].is_negative());
        debug_assert!(tail.iter().all(|c| !c.is_negative()));
        let normal = primitive_of_integers(tail.to_vec());
        let i = normal.iter().position(|c| !c.is_zero()).expect("nonzero");
        let scale = Rational::new(tail[i].clone(), normal[i].clone());
        let offset = Rational::from_integer(-ray[0].clone()) / scale;
        facets.push(HalfSpace { normal, offset });
    }
    facets.sort();
    Ok(facets)
}

/// Vertices of the bounded polytope `{ x : h.normal . x >= h.offset }`.
///
/// Unboundedness is detected first through the recession cone
/// `{ x : normal . x >= 0 }`; emptiness through the homogenization having
/// no rays.
pub fn vertex_enumeration(halfspaces: &[HalfSpace], dim: usize) -> Result<Vec<Point>> {
    for h in halfspaces {
        if h.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: h.dim(),
            });
        }
    }

    let normals: Vec<Vec<Rational>> = halfspaces
        .iter()
        .map(|h| {
            h.normal
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect()
        })
        .collect();
    if linalg::rank(&normals) < dim {
        // The recession cone contains a line.
        return Err(Error::UnboundedPolytope);
    }
    let recession_rows: Vec<Vec<BigInt>> = halfspaces.iter().map(|h| h.normal.clone()).collect();
    let recession = dd::extreme_rays(&recession_rows, dim).expect("full rank");
    if !recession.is_empty() {
        return Err(Error::UnboundedPolytope);
    }

    // Homogenize: rows (-b, a) plus x0 >= 0.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(halfspaces.len() + 1);
    for h in halfspaces {
        let mut v = Vec::with_capacity(dim + 1);
        v.push(-h.offset.clone());
        v.extend(h.normal.iter().map(|c| Rational::from_integer(c.clone())));
        match primitive_integer_vector(&v) {
            Some(row) => rows.push(row),
            // 0.x >= 0 is vacuous (a zero normal cannot occur: HalfSpace
            // construction rejects it).
            None => unreachable!("half-space normals are nonzero"),
        }
    }
    let mut x0 = alloc::vec![BigInt::zero(); dim + 1];
    x0[0] = BigInt::one();
    rows.push(x0);

    let rays = dd::extreme_rays(&rows, dim + 1).expect("bounded implies pointed");
    let mut vertices = Vec::new();
    for ray in rays {
        debug_assert!(ray[0].is_positive(), "recession ray after boundedness check");
        let denom = Rational::from_integer(ray[0].clone());
        vertices.push(Point::new(
            ray[1..]
                .iter()
                .map(|c| Rational::from_integer(c.clone()) / &denom)
                .collect(),
        ));
    }
    if vertices.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    vertices.sort();
    Ok(vertices)
}

/// Vertices of the (generally unbounded) region `{x >= 0} ∩ halfspaces`
/// whose recession cone is the orthant, read off the homogenization cone:
/// its extreme rays are `(1, v)` for the vertices `v` plus the recession
/// rays `(0, e_i)`. The cone is pointed because the recession cone is.
pub(crate) fn vertices_of_orthant_region(facets: &[HalfSpace], dim: usize) -> Vec<Point> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(facets.len() + dim + 1);
    for h in facets {
        let mut v = Vec::with_capacity(dim + 1);
        v.push(-h.offset.clone());
        v.extend(h.normal.iter().map(|c| Rational::from_integer(c.clone())));
        rows.push(primitive_integer_vector(&v).expect("facet normals are nonzero"));
    }
    for i in 0..=dim {
        let mut row = alloc::vec![BigInt::zero(); dim + 1];
        row[i] = BigInt::one();
        rows.push(row);
    }
    let rays = dd::extreme_rays(&rows, dim + 1).expect("pointed homogenization");
    let mut vertices = Vec::new();
    for ray in rays {
        if ray[0].is_zero() {
            continue; // recession direction
        }
        debug_assert!(ray[0].is_positive());
        let denom = Rational::from_integer(ray[0].clone());
        vertices.push(Point::new(
            ray[1..]
                .iter()
                .map(|c| Rational::from_integer(c.clone()) / &denom)
                .collect(),
        ));
    }
    vertices.sort();
    vertices
}

/// Exact volume of `conv(vertices)` with a degeneracy flag instead of an
/// error when the affine hull is lower-dimensional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeVolume {
    pub value: Rational,
    pub degenerate: bool,
}

/// Exact n-dimensional volume of the convex hull of the input points,
/// by a simplicial fan from the lexicographically smallest vertex over
/// recursively triangulated facets.
pub fn polytope_volume(vertices: &[Point]) -> Result<PolytopeVolume> {
    let Some(first) = vertices.first() else {
        return Ok(PolytopeVolume {
            value: Rational::zero(),
            degenerate: true,
        });
    };
    let dim = first.dim();
    check_dims(vertices.iter(), dim)?;

    let mut points: Vec<Point> = vertices.to_vec();
    points.sort();
    points.dedup();

    if affine_rank(&points) < dim {
        return Ok(PolytopeVolume {
            value: Rational::zero(),
            degenerate: true,
        });
    }

    let simplices = triangulate_hull(&points, dim);
    let mut total = Rational::zero();
    for simplex in simplices {
        let apex = &points[simplex[0]];
        let edges: Vec<Vec<Rational>> = simplex[1..]
            .iter()
            .map(|&i| {
                points[i]
                    .coords()
                    .iter()
                    .zip(apex.coords())
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        total += linalg::determinant(&edges).abs();
    }
    Ok(PolytopeVolume {
        value: total / crate::rational::factorial(dim),
        degenerate: false,
    })
}

fn affine_rank(points: &[Point]) -> usize {
    let base = &points[0];
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(base.coords())
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    linalg::rank(&diffs)
}

/// Facets (normal, offset) of the convex hull of full-dimensional `points`,
/// as extreme rays of the dual of the lifted cone.
fn hull_facets(points: &[Point], dim: usize) -> Vec<(Vec<BigInt>, Rational)> {
    let rows: Vec<Vec<BigInt>> = points.iter().map(lift_point).collect();
    let rays = dd::extreme_rays(&rows, dim + 1).expect("full-dimensional hull");
    let mut facets = Vec::new();
    for ray in rays {
        let tail = &ray[1..];
        if tail.iter().all(Zero::is_zero) {
            continue;
        }
        facets.push((
            tail.to_vec(),
            Rational::from_integer(-ray[0].clone()),
        ));
    }
    facets
}

/// Triangulates the convex hull of full-dimensional `points` into simplices
/// of point indices. Interior and facet-interior points are tolerated.
fn triangulate_hull(points: &[Point], dim: usize) -> Vec<Vec<usize>> {
    if dim == 1 {
        let mut min = 0;
        let mut max = 0;
        for (i, p) in points.iter().enumerate() {
            if p < &points[min] {
                min = i;
            }
            if p > &points[max] {
                max = i;
            }
        }
        return alloc::vec![alloc::vec![min, max]];
    }

    let apex = points
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
        .expect("nonempty");

    let mut simplices = Vec::new();
    for (normal, offset) in hull_facets(points, dim) {
        let value = |p: &Point| -> Rational {
            normal
                .iter()
                .zip(p.coords())
                .map(|(n, c)| Rational::from_integer(n.clone()) * c)
                .sum()
        };
        if value(&points[apex]) == offset {
            continue;
        }
        let incident: Vec<usize> = (0..points.len())
            .filter(|&i| value(&points[i]) == offset)
            .collect();
        // Project along a coordinate the normal pays attention to; this is
        // injective on the facet hyperplane.
        let drop = normal
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero facet normal");
        let projected: Vec<Point> = incident
            .iter()
            .map(|&i| {
                Point::new(
                    points[i]
                        .coords()
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != drop)
                        .map(|(_, c)| c.clone())
                        .collect(),
                )
            })
            .collect();
        for local in triangulate_hull(&projected, dim - 1) {
            let mut simplex = Vec::with_capacity(dim + 1);
            simplex.push(apex);
            simplex.extend(local.into_iter().map(|j| incident[j]));
            simplices.push(simplex);
        }
    }
    simplices
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter().map(|r| Point::from_integers(r)).collect()
    }

    #[test]
    fn simplex_region_facet() {
        // conv{(1,0),(0,1)} + C is cut out by x1 + x2 >= 1 beside the orthant.
        let facets = facets_of_generated_region(&pts(&[&[1, 0], &[0, 1]]), 2).unwrap();
        assert_eq!(facets, alloc::vec![HalfSpace::from_integers(&[1, 1], 1)]);
    }

    #[test]
    fn slanted_region_facet() {
        let facets = facets_of_generated_region(&pts(&[&[2, 0], &[0, 3]]), 2).unwrap();
        assert_eq!(facets, alloc::vec![HalfSpace::from_integers(&[3, 2], 6)]);
    }

    #[test]
    fn interior_generator_induces_no_facet() {
        // (2,1) satisfies 3*2 + 2*1 = 8 > 6 so it is interior to the region.
        let facets = facets_of_generated_region(&pts(&[&[2, 0], &[2, 1], &[0, 3]]), 2).unwrap();
        assert_eq!(facets, alloc::vec![HalfSpace::from_integers(&[3, 2], 6)]);
        assert!(facets[0].strictly_satisfied_by(&Point::from_integers(&[2, 1])));
    }

    #[test]
    fn full_cone_has_no_extra_facets() {
        let facets = facets_of_generated_region(&pts(&[&[0, 0, 0]]), 3).unwrap();
        assert!(facets.is_empty());
    }

    #[test]
    fn axis_generator_region() {
        // conv{(1,1)} + C needs x1 >= 1 and x2 >= 1.
        let facets = facets_of_generated_region(&pts(&[&[1, 1]]), 2).unwrap();
        assert_eq!(
            facets,
            alloc::vec![
                HalfSpace::from_integers(&[0, 1], 1),
                HalfSpace::from_integers(&[1, 0], 1),
            ]
        );
    }

    #[test]
    fn unit_square_vertices() {
        let hs = alloc::vec![
            HalfSpace::from_integers(&[1, 0], 0),
            HalfSpace::from_integers(&[0, 1], 0),
            HalfSpace::from_integers(&[-1, 0], -1),
            HalfSpace::from_integers(&[0, -1], -1),
        ];
        let v = vertex_enumeration(&hs, 2).unwrap();
        assert_eq!(v, pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
    }

    #[test]
    fn triangle_vertices() {
        let hs = alloc::vec![
            HalfSpace::from_integers(&[1, 0], 0),
            HalfSpace::from_integers(&[0, 1], 0),
            HalfSpace::from_integers(&[-3, -2], -6),
        ];
        let v = vertex_enumeration(&hs, 2).unwrap();
        assert_eq!(v, pts(&[&[0, 0], &[0, 3], &[2, 0]]));
    }

    #[test]
    fn region_clipped_to_box() {
        // facets of conv{(2,0),(0,3)}+C intersected with [0,4]^2.
        let hs = alloc::vec![
            HalfSpace::from_integers(&[3, 2], 6),
            HalfSpace::from_integers(&[1, 0], 0),
            HalfSpace::from_integers(&[0, 1], 0),
            HalfSpace::from_integers(&[-1, 0], -4),
            HalfSpace::from_integers(&[0, -1], -4),
        ];
        let v = vertex_enumeration(&hs, 2).unwrap();
        assert_eq!(v, pts(&[&[0, 3], &[0, 4], &[2, 0], &[4, 0], &[4, 4]]));
    }

    #[test]
    fn unbounded_and_empty_are_detected() {
        let unbounded = alloc::vec![
            HalfSpace::from_integers(&[1, 0], 0),
            HalfSpace::from_integers(&[0, 1], 0),
        ];
        assert_eq!(
            vertex_enumeration(&unbounded, 2),
            Err(Error::UnboundedPolytope)
        );
        let empty = alloc::vec![
            HalfSpace::from_integers(&[1, 0], 1),
            HalfSpace::from_integers(&[-1, 0], 0),
            HalfSpace::from_integers(&[0, 1], 0),
            HalfSpace::from_integers(&[0, -1], 0),
        ];
        assert_eq!(vertex_enumeration(&empty, 2), Err(Error::EmptyPolytope));
    }

    #[test]
    fn unit_cube_volume() {
        let cube = pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        let vol = polytope_volume(&cube).unwrap();
        assert!(!vol.degenerate);
        assert_eq!(vol.value, rat(1));
    }

    #[test]
    fn corner_simplex_volume() {
        let vol = polytope_volume(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(vol.value, ratio(1, 2));
        assert!(!vol.degenerate);
    }

    #[test]
    fn quadrilateral_volume_matches_shoelace() {
        // Shoelace on the convex cycle (0,0),(2,0),(3,2),(1,3) gives 11/2.
        let vol = polytope_volume(&pts(&[&[0, 0], &[2, 0], &[3, 2], &[1, 3]])).unwrap();
        assert_eq!(vol.value, ratio(11, 2));
    }

    #[test]
    fn hull_volume_drops_non_vertex_input() {
        // (2,1) lies inside conv{(0,0),(3,0),(0,4)}; the hull is the triangle.
        let vol = polytope_volume(&pts(&[&[0, 0], &[3, 0], &[2, 1], &[0, 4]])).unwrap();
        assert_eq!(vol.value, rat(6));
    }

    #[test]
    fn degenerate_input_flags_zero_volume() {
        let vol = polytope_volume(&pts(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap();
        assert!(vol.degenerate);
        assert_eq!(vol.value, rat(0));
        assert!(polytope_volume(&[]).unwrap().degenerate);
    }

    #[test]
    fn volume_ignores_interior_points() {
        let square = pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]]);
        assert_eq!(polytope_volume(&square).unwrap().value, rat(4));
    }
}
