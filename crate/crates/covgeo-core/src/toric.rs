//! Piecewise-log-linear toric plurisubharmonic functions.
//!
//! An expression tree over log-monomial leaves `c + <a, log|z|>` (slope
//! `a >= 0`, offset `c <= 0`) closed under finite max and nonnegative
//! weighted sums models a toric psh function near the origin of the unit
//! polydisk. Its indicator diagram — the closed convex region in the
//! nonnegative orthant whose support function on the nonpositive orthant is
//! the homogenization of the tree — carries all the singularity data:
//! higher Lelong numbers are `n! Covol_k` of the diagram, mixed
//! Monge-Ampère masses are `n!` times mixed covolumes of the diagrams, and
//! Kiselman numbers are support values in disguise. Offsets never affect
//! the diagram; they only matter to pointwise evaluation.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::covolume::{covol_k, mixed_covolume};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::rational::{factorial, Rational};
use crate::region::Region;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ToricPsh {
    /// `c + <slope, t>` with slope componentwise >= 0 and offset c <= 0.
    Mono { slope: Point, offset: Rational },
    /// Pointwise maximum of the children.
    Max(Vec<ToricPsh>),
    /// Nonnegative weighted sum of the children.
    Sum(Vec<(Rational, ToricPsh)>),
}

impl ToricPsh {
    /// Leaf with zero offset.
    pub fn monomial(slope: Point) -> ToricPsh {
        ToricPsh::Mono {
            slope,
            offset: Rational::zero(),
        }
    }

    /// The standard `log|z|` model: max of the coordinate log-monomials.
    /// Its indicator diagram is the simplex region.
    pub fn log_abs(dim: usize) -> ToricPsh {
        ToricPsh::Max(
            (0..dim)
                .map(|i| ToricPsh::monomial(Point::axis(dim, i, Rational::from_integer(1.into()))))
                .collect(),
        )
    }

    /// Ambient dimension, read off the leftmost leaf.
    pub fn dim(&self) -> usize {
        match self {
            ToricPsh::Mono { slope, .. } => slope.dim(),
            ToricPsh::Max(children) => children.first().map_or(0, ToricPsh::dim),
            ToricPsh::Sum(children) => children.first().map_or(0, |(_, c)| c.dim()),
        }
    }

    fn validate(&self, dim: usize) -> Result<()> {
        match self {
            ToricPsh::Mono { slope, offset } => {
                if slope.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: slope.dim(),
                    });
                }
                if !slope.is_nonnegative() {
                    return Err(Error::MalformedExpression("negative slope"));
                }
                if offset.is_positive() {
                    return Err(Error::MalformedExpression("positive offset"));
                }
                Ok(())
            }
            ToricPsh::Max(children) => {
                if children.is_empty() {
                    return Err(Error::MalformedExpression("empty max node"));
                }
                children.iter().try_for_each(|c| c.validate(dim))
            }
            ToricPsh::Sum(children) => {
                if children.is_empty() {
                    return Err(Error::MalformedExpression("empty sum node"));
                }
                children.iter().try_for_each(|(w, c)| {
                    if w.is_negative() {
                        Err(Error::MalformedExpression("negative weight"))
                    } else {
                        c.validate(dim)
                    }
                })
            }
        }
    }

    /// Indicator diagram: leaf slopes generate, max takes the generated
    /// region of the union, weighted sums become Minkowski sums of scaled
    /// diagrams. Offsets are discarded — the diagram is the homogenization.
    pub fn indicator_diagram(&self) -> Result<Region> {
        let dim = self.dim();
        if dim == 0 {
            return Err(Error::MalformedExpression("empty expression"));
        }
        self.validate(dim)?;
        self.diagram_inner(dim)
    }

    fn diagram_inner(&self, dim: usize) -> Result<Region> {
        match self {
            ToricPsh::Mono { slope, .. } => Region::from_generators(alloc::vec![slope.clone()]),
            ToricPsh::Max(children) => {
                let mut gens = Vec::new();
                for child in children {
                    gens.extend_from_slice(child.diagram_inner(dim)?.generators());
                }
                Region::from_generators(gens)
            }
            ToricPsh::Sum(children) => {
                let mut acc = Region::full_cone(dim);
                for (weight, child) in children {
                    acc = acc.minkowski_sum(&child.diagram_inner(dim)?.scale(weight)?)?;
                }
                Ok(acc)
            }
        }
    }

    /// Exact evaluation of the convex image at `t` componentwise <= 0
    /// (`t = log r` for moduli `r` inside the unit polydisk).
    pub fn evaluate_at_t(&self, t: &Point) -> Result<Rational> {
        let dim = self.dim();
        if t.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: t.dim(),
            });
        }
        if !t.is_nonpositive() {
            return Err(Error::DomainViolation);
        }
        self.validate(dim)?;
        Ok(self.eval_inner(t))
    }

    fn eval_inner(&self, t: &Point) -> Rational {
        match self {
            ToricPsh::Mono { slope, offset } => offset + slope.dot(t),
            ToricPsh::Max(children) => children
                .iter()
                .map(|c| c.eval_inner(t))
                .max()
                .expect("validated max is nonempty"),
            ToricPsh::Sum(children) => children
                .iter()
                .map(|(w, c)| w * c.eval_inner(t))
                .sum(),
        }
    }

    /// The substitution `z_i -> z_i^m` scaled by `1/m`: slopes are fixed and
    /// offsets shrink to `c/m`, so the indicator diagram is invariant.
    pub fn m_transform(&self, m: u32) -> Result<ToricPsh> {
        if m == 0 {
            return Err(Error::NonpositiveM);
        }
        let factor = Rational::new(1.into(), m.into());
        Ok(self.map_offsets(&factor))
    }

    fn map_offsets(&self, factor: &Rational) -> ToricPsh {
        match self {
            ToricPsh::Mono { slope, offset } => ToricPsh::Mono {
                slope: slope.clone(),
                offset: offset * factor,
            },
            ToricPsh::Max(children) => {
                ToricPsh::Max(children.iter().map(|c| c.map_offsets(factor)).collect())
            }
            ToricPsh::Sum(children) => ToricPsh::Sum(
                children
                    .iter()
                    .map(|(w, c)| (w.clone(), c.map_offsets(factor)))
                    .collect(),
            ),
        }
    }
}

/// Realizes a region as the indicator expression generated by its canonical
/// generators: a max of offset-free log-monomials with the same diagram.
pub fn indicator_expression(region: &Region) -> ToricPsh {
    ToricPsh::Max(
        region
            .generators()
            .iter()
            .map(|g| ToricPsh::monomial(g.clone()))
            .collect(),
    )
}

/// k-th Lelong number at the origin: `n! Covol_k(Γ_φ)`. Requires a cofinite
/// diagram; an infinite covolume means the mass is not finite.
pub fn lelong_number(phi: &ToricPsh, k: usize) -> Result<Rational> {
    let diagram = phi.indicator_diagram()?;
    if !diagram.is_cofinite() {
        return Err(Error::NotCofinite);
    }
    Ok(factorial(diagram.dim()) * covol_k(&diagram, k)?)
}

/// Mixed Monge-Ampère mass at the origin of n toric functions:
/// `n! Covol(Γ_1, ..., Γ_n)`.
pub fn mixed_ma_mass(phis: &[ToricPsh]) -> Result<Rational> {
    let diagrams: Vec<Region> = phis
        .iter()
        .map(ToricPsh::indicator_diagram)
        .collect::<Result<_>>()?;
    let report = mixed_covolume(&diagrams)?;
    Ok(factorial(diagrams.len()) * report.value)
}

/// Kiselman number in a strictly positive direction `a`: the negated
/// homogenized value `-Ψ̂_φ(-a)`, i.e. the minimum of `<s, a>` over the
/// canonical generators of the diagram.
pub fn kiselman_number(phi: &ToricPsh, direction: &Point) -> Result<Rational> {
    if !direction.is_strictly_positive() {
        return Err(Error::NonpositiveDirection);
    }
    let diagram = phi.indicator_diagram()?;
    if direction.dim() != diagram.dim() {
        return Err(Error::DimensionMismatch {
            expected: diagram.dim(),
            found: direction.dim(),
        });
    }
    Ok(diagram
        .generators()
        .iter()
        .map(|g| g.dot(direction))
        .min()
        .expect("canonical regions have generators"))
}
