//! Reversed Alexandrov-Fenchel inequality family: exact checkers over
//! covolumes, a certified-decimal Brunn-Minkowski checker, the
//! `ℓ_n >= ℓ_1^n` check for toric expressions, and a deterministic fuzzer
//! that stresses all of them on random regions, Newton polyhedra of random
//! m-primary ideals, and diagrams of random toric expressions.
//!
//! Each fuzz iteration derives its RNG stream from `(seed, index)`, so
//! results are identical no matter how iterations are scheduled.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covolume::{covolume, mixed_covolume};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::ideal::{mixed_multiplicity, MonomialIdeal};
use crate::rational::{nth_root_bounds, Rational};
use crate::region::Region;
use crate::toric::{lelong_number, ToricPsh};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum InequalityName {
    Af,
    FirstMinkowski,
    SecondMinkowski,
    BrunnMinkowski,
    EllPower,
}

impl InequalityName {
    pub fn as_str(self) -> &'static str {
        match self {
            InequalityName::Af => "af",
            InequalityName::FirstMinkowski => "first_minkowski",
            InequalityName::SecondMinkowski => "second_minkowski",
            InequalityName::BrunnMinkowski => "brunn_minkowski",
            InequalityName::EllPower => "ell_power",
        }
    }

    pub const ALL: [InequalityName; 5] = [
        InequalityName::Af,
        InequalityName::FirstMinkowski,
        InequalityName::SecondMinkowski,
        InequalityName::BrunnMinkowski,
        InequalityName::EllPower,
    ];
}

/// The inputs that produced a verdict, kept verbatim so any verdict can be
/// reproduced bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Regions(Vec<Region>),
    Ideals(Vec<MonomialIdeal>),
    Expr(ToricPsh),
}

/// Outcome of one inequality check, oriented so that `holds <=> lhs >= rhs`.
/// For the Brunn-Minkowski checker the sides are certified decimal bounds
/// (lhs from below, rhs from above) and `margin` is the conservative lower
/// bound `lhs - rhs`; `equality` marks margins inside the certification band.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityVerdict {
    pub name: InequalityName,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    pub equality: bool,
    pub margin: Rational,
    pub witness: Witness,
}

fn exact_verdict(
    name: InequalityName,
    lhs: Rational,
    rhs: Rational,
    witness: Witness,
) -> InequalityVerdict {
    let margin = &lhs - &rhs;
    InequalityVerdict {
        name,
        holds: !margin.is_negative(),
        equality: margin.is_zero(),
        lhs,
        rhs,
        margin,
        witness,
    }
}

fn check_pair_dims(regions: &[Region]) -> Result<usize> {
    let Some(first) = regions.first() else {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: 0,
        });
    };
    let n = first.dim();
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

/// Reversed Alexandrov-Fenchel:
/// `Covol(Γ1,Γ1,Γ3..) Covol(Γ2,Γ2,Γ3..) >= Covol(Γ1,Γ2,Γ3..)^2`, exact.
pub fn check_af(regions: &[Region]) -> Result<InequalityVerdict> {
    let n = check_pair_dims(regions)?;
    if n < 2 || regions.len() != n {
        return Err(Error::ArityMismatch {
            expected: n.max(2),
            found: regions.len(),
        });
    }
    let tail = &regions[2..];
    let family = |a: &Region, b: &Region| -> Vec<Region> {
        let mut f = alloc::vec![a.clone(), b.clone()];
        f.extend_from_slice(tail);
        f
    };
    let w11 = mixed_covolume(&family(&regions[0], &regions[0]))?.value;
    let w22 = mixed_covolume(&family(&regions[1], &regions[1]))?.value;
    let w12 = mixed_covolume(&family(&regions[0], &regions[1]))?.value;
    Ok(exact_verdict(
        InequalityName::Af,
        w11 * w22,
        &w12 * &w12,
        Witness::Regions(regions.to_vec()),
    ))
}

/// Reversed first Minkowski inequality in power-cleared form:
/// `Covol(Γ1, Γ2, ..., Γ2)^n <= Covol(Γ1) Covol(Γ2)^(n-1)`, exact.
pub fn check_first_minkowski(a: &Region, b: &Region) -> Result<InequalityVerdict> {
    let regions = [a.clone(), b.clone()];
    let n = check_pair_dims(&regions)?;
    let mut family = alloc::vec![a.clone()];
    family.extend(core::iter::repeat_n(b.clone(), n - 1));
    let w = mixed_covolume(&family)?.value;
    let mut rhs = Rational::one();
    for _ in 0..n {
        rhs *= &w;
    }
    let mut lhs = covolume(a)?;
    let cov_b = covolume(b)?;
    for _ in 0..n - 1 {
        lhs *= &cov_b;
    }
    Ok(exact_verdict(
        InequalityName::FirstMinkowski,
        lhs,
        rhs,
        Witness::Regions(regions.to_vec()),
    ))
}

/// Reversed second Minkowski inequality — the Alexandrov-Fenchel
/// specialization with every tail slot equal to Γ2:
/// `Covol(Γ1,Γ2,...,Γ2)^2 <= Covol(Γ1,Γ1,Γ2,...,Γ2) Covol(Γ2)`, exact.
pub fn check_second_minkowski(a: &Region, b: &Region) -> Result<InequalityVerdict> {
    let regions = [a.clone(), b.clone()];
    let n = check_pair_dims(&regions)?;
    if n < 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: n,
        });
    }
    let mut family_ab = alloc::vec![a.clone()];
    family_ab.extend(core::iter::repeat_n(b.clone(), n - 1));
    let w_ab = mixed_covolume(&family_ab)?.value;
    let mut family_aab = alloc::vec![a.clone(), a.clone()];
    family_aab.extend(core::iter::repeat_n(b.clone(), n - 2));
    let w_aab = mixed_covolume(&family_aab)?.value;
    Ok(exact_verdict(
        InequalityName::SecondMinkowski,
        w_aab * covolume(b)?,
        &w_ab * &w_ab,
        Witness::Regions(regions.to_vec()),
    ))
}

/// Digits carried by the certified n-th roots.
const ROOT_DIGITS: u32 = 64;

/// Reversed Brunn-Minkowski:
/// `Covol(Γ1+Γ2)^(1/n) <= Covol(Γ1)^(1/n) + Covol(Γ2)^(1/n)`, decided with
/// 64-digit directed-rounding root bounds. Margins inside the 10^-30 band
/// are flagged as equality (homothets achieve exact equality).
pub fn check_brunn_minkowski(a: &Region, b: &Region) -> Result<InequalityVerdict> {
    let regions = [a.clone(), b.clone()];
    let n = check_pair_dims(&regions)? as u32;
    let (a_lo, a_hi) = nth_root_bounds(&covolume(a)?, n, ROOT_DIGITS);
    let (b_lo, b_hi) = nth_root_bounds(&covolume(b)?, n, ROOT_DIGITS);
    let sum = a.minkowski_sum(b)?;
    let (s_lo, s_hi) = nth_root_bounds(&covolume(&sum)?, n, ROOT_DIGITS);

    let band = Rational::new(1.into(), BigInt::from(10u32).pow(30));
    let margin_lo = &a_lo + &b_lo - &s_hi;
    let margin_hi = &a_hi + &b_hi - &s_lo;
    let (holds, equality) = if margin_lo > band {
        (true, false)
    } else if margin_hi < -&band {
        (false, false)
    } else {
        (true, true)
    };
    Ok(InequalityVerdict {
        name: InequalityName::BrunnMinkowski,
        lhs: a_lo + b_lo,
        rhs: s_hi,
        holds,
        equality,
        margin: margin_lo,
        witness: Witness::Regions(regions.to_vec()),
    })
}

/// `ℓ_n(φ) >= ℓ_1(φ)^n`, exact on the diagram.
pub fn check_ell_power(phi: &ToricPsh) -> Result<InequalityVerdict> {
    let n = phi.indicator_diagram()?.dim();
    let ell_n = lelong_number(phi, n)?;
    let ell_1 = lelong_number(phi, 1)?;
    let mut rhs = Rational::one();
    for _ in 0..n {
        rhs *= &ell_1;
    }
    Ok(exact_verdict(
        InequalityName::EllPower,
        ell_n,
        rhs,
        Witness::Expr(phi.clone()),
    ))
}

/// Configuration for the deterministic fuzzer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    pub dim: usize,
    pub count: u64,
    pub seed: u64,
    /// Extra generators beyond the structural axis anchors.
    pub max_generators: usize,
    /// Coordinates are sampled in `0..=coordinate_bound`.
    pub coordinate_bound: u64,
}

impl FuzzConfig {
    fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::InvalidConfig("dimension must be at least 2"));
        }
        if self.coordinate_bound < 1 {
            return Err(Error::InvalidConfig("coordinate bound must be at least 1"));
        }
        Ok(())
    }
}

/// Per-inequality tallies.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckCounts {
    pub checked: u64,
    pub holds: u64,
    pub equalities: u64,
    pub violations: u64,
}

/// Aggregated fuzz outcome. Any violation carries its full witness verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    /// Tallies indexed in `InequalityName::ALL` order.
    pub counts: [CheckCounts; 5],
    /// Mixed multiplicities of random m-primary ideals must be integers.
    pub integrality_checked: u64,
    pub integrality_failures: u64,
    pub violations: Vec<InequalityVerdict>,
}

impl FuzzSummary {
    fn empty(config: FuzzConfig) -> FuzzSummary {
        FuzzSummary {
            config,
            counts: Default::default(),
            integrality_checked: 0,
            integrality_failures: 0,
            violations: Vec::new(),
        }
    }

    pub fn counts_for(&self, name: InequalityName) -> &CheckCounts {
        let idx = InequalityName::ALL
            .iter()
            .position(|&n| n == name)
            .expect("name in ALL");
        &self.counts[idx]
    }

    pub fn total_violations(&self) -> u64 {
        self.counts.iter().map(|c| c.violations).sum::<u64>() + self.integrality_failures
    }

    fn record(&mut self, verdict: InequalityVerdict) {
        let idx = InequalityName::ALL
            .iter()
            .position(|&n| n == verdict.name)
            .expect("name in ALL");
        let counts = &mut self.counts[idx];
        counts.checked += 1;
        if verdict.holds {
            counts.holds += 1;
            if verdict.equality {
                counts.equalities += 1;
            }
        } else {
            counts.violations += 1;
            self.violations.push(verdict);
        }
    }

    /// Folds another summary in; order-independent on disjoint iterations.
    pub fn absorb(&mut self, other: FuzzSummary) {
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts) {
            mine.checked += theirs.checked;
            mine.holds += theirs.holds;
            mine.equalities += theirs.equalities;
            mine.violations += theirs.violations;
        }
        self.integrality_checked += other.integrality_checked;
        self.integrality_failures += other.integrality_failures;
        self.violations.extend(other.violations);
    }
}

/// Random cofinite region: one axis anchor per coordinate (which forces a
/// bounded complement) plus up to `extra` free lattice points.
pub fn random_region<R: Rng>(rng: &mut R, dim: usize, extra: usize, bound: u64) -> Region {
    let mut gens = Vec::with_capacity(dim + extra);
    for i in 0..dim {
        let c = rng.gen_range(1..=bound);
        gens.push(Point::axis(dim, i, Rational::from_integer(c.into())));
    }
    for _ in 0..extra {
        let coords = (0..dim)
            .map(|_| Rational::from_integer(rng.gen_range(0..=bound).into()))
            .collect();
        gens.push(Point::new(coords));
    }
    Region::from_generators(gens).expect("anchored lattice generators are valid")
}

/// Random m-primary monomial ideal: a pure power per axis plus up to
/// `extra` free exponent vectors.
pub fn random_ideal<R: Rng>(rng: &mut R, dim: usize, extra: usize, bound: u64) -> MonomialIdeal {
    let mut gens = Vec::with_capacity(dim + extra);
    for i in 0..dim {
        let mut g = alloc::vec![0u64; dim];
        g[i] = rng.gen_range(1..=bound);
        gens.push(g);
    }
    for _ in 0..extra {
        gens.push((0..dim).map(|_| rng.gen_range(0..=bound)).collect());
    }
    MonomialIdeal::new(dim, gens).expect("nonempty generators")
}

/// Random piecewise-log-linear expression of small depth; slopes and offsets
/// are small rationals, not necessarily cofinite on its own.
fn random_expr<R: Rng>(rng: &mut R, dim: usize, bound: u64, depth: u32) -> ToricPsh {
    if depth == 0 || rng.gen_bool(0.4) {
        let slope = Point::new(
            (0..dim)
                .map(|_| Rational::from_integer(rng.gen_range(0..=bound).into()))
                .collect(),
        );
        let offset = -Rational::new(rng.gen_range(0..=2).into(), rng.gen_range(1..=2).into());
        return ToricPsh::Mono { slope, offset };
    }
    let arity = rng.gen_range(2..=3);
    if rng.gen_bool(0.5) {
        ToricPsh::Max((0..arity).map(|_| random_expr(rng, dim, bound, depth - 1)).collect())
    } else {
        ToricPsh::Sum(
            (0..arity)
                .map(|_| {
                    let weight = Rational::new(
                        rng.gen_range(1..=2).into(),
                        rng.gen_range(1..=2).into(),
                    );
                    (weight, random_expr(rng, dim, bound, depth - 1))
                })
                .collect(),
        )
    }
}

/// Random toric expression with a cofinite diagram: a random tree joined by
/// max with one axis log-monomial per coordinate, slopes at least
/// `anchor_min`.
pub fn random_cofinite_expr<R: Rng>(
    rng: &mut R,
    dim: usize,
    bound: u64,
    anchor_min: u64,
) -> ToricPsh {
    let hi = bound.max(anchor_min);
    let mut children = alloc::vec![random_expr(rng, dim, bound, 2)];
    for i in 0..dim {
        let c = rng.gen_range(anchor_min..=hi);
        children.push(ToricPsh::monomial(Point::axis(
            dim,
            i,
            Rational::from_integer(c.into()),
        )));
    }
    ToricPsh::Max(children)
}

/// One deterministic fuzz iteration; the RNG stream depends only on
/// `(config.seed, index)`.
pub fn fuzz_iteration(config: &FuzzConfig, index: u64) -> Result<FuzzSummary> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index);
    let n = config.dim;
    let bound = config.coordinate_bound;
    let extra = config.max_generators;
    let mut summary = FuzzSummary::empty(config.clone());

    // Cofinite regions.
    let regions: Vec<Region> = (0..n).map(|_| random_region(&mut rng, n, extra, bound)).collect();
    summary.record(check_af(&regions)?);
    summary.record(check_first_minkowski(&regions[0], &regions[1])?);
    summary.record(check_second_minkowski(&regions[0], &regions[1])?);
    summary.record(check_brunn_minkowski(&regions[0], &regions[1])?);

    // Newton polyhedra of m-primary ideals, plus integrality of their mixed
    // multiplicity.
    let ideals: Vec<MonomialIdeal> =
        (0..n).map(|_| random_ideal(&mut rng, n, extra, bound)).collect();
    let polyhedra: Vec<Region> = ideals.iter().map(MonomialIdeal::newton_polyhedron).collect();
    summary.record(check_af(&polyhedra)?);
    let mixed = mixed_multiplicity(&ideals)?;
    summary.integrality_checked += 1;
    if !mixed.is_integer() {
        summary.integrality_failures += 1;
    }

    // Diagrams of toric expressions.
    let exprs: Vec<ToricPsh> =
        (0..n).map(|_| random_cofinite_expr(&mut rng, n, bound, 1)).collect();
    let diagrams: Vec<Region> = exprs
        .iter()
        .map(|e| e.indicator_diagram())
        .collect::<Result<_>>()?;
    summary.record(check_af(&diagrams)?);
    summary.record(check_ell_power(&exprs[0])?);

    Ok(summary)
}

/// Runs `count` iterations sequentially. Violations are collected into the
/// summary with their witnesses; callers decide how loudly to fail.
pub fn fuzz(config: &FuzzConfig) -> Result<FuzzSummary> {
    config.validate()?;
    let mut summary = FuzzSummary::empty(config.clone());
    for index in 0..config.count {
        summary.absorb(fuzz_iteration(config, index)?);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn region(rows: &[&[i64]]) -> Region {
        Region::from_generators(rows.iter().map(|r| Point::from_integers(r)).collect()).unwrap()
    }

    fn running_pair() -> (Region, Region) {
        (region(&[&[2, 0], &[0, 3]]), Region::simplex(2))
    }

    #[test]
    fn af_on_the_running_pair() {
        let (a, delta) = running_pair();
        let v = check_af(&[a.clone(), delta]).unwrap();
        assert_eq!(v.lhs, ratio(3, 2)); // 3 * 1/2
        assert_eq!(v.rhs, rat(1)); // 1^2
        assert!(v.holds && !v.equality);
    }

    #[test]
    fn af_equality_cases() {
        let (a, _) = running_pair();
        let v = check_af(&[a.clone(), a.clone()]).unwrap();
        assert!(v.holds && v.equality);

        // a full cone among the arguments zeroes both sides
        let c = Region::full_cone(2);
        let v = check_af(&[a.clone(), c]).unwrap();
        assert!(v.equality);
        assert_eq!(v.lhs, rat(0));
    }

    #[test]
    fn af_arity_errors() {
        let (a, _) = running_pair();
        assert!(matches!(
            check_af(&[a.clone()]),
            Err(Error::ArityMismatch { .. })
        ));
        assert_eq!(
            check_af(&[a.clone(), region(&[&[1, 1]])]),
            Err(Error::NotCofinite)
        );
    }

    #[test]
    fn first_minkowski_running_pair() {
        let (a, delta) = running_pair();
        let v = check_first_minkowski(&a, &delta).unwrap();
        // Covol(A)Covol(Δ) = 3/2 >= Covol(A,Δ)^2 = 1
        assert_eq!(v.lhs, ratio(3, 2));
        assert_eq!(v.rhs, rat(1));
        assert!(v.holds);
        let v = check_first_minkowski(&a, &a).unwrap();
        assert!(v.equality);
    }

    #[test]
    fn second_minkowski_matches_af_specialization() {
        let (a, delta) = running_pair();
        let v2 = check_second_minkowski(&a, &delta).unwrap();
        let vaf = check_af(&[a, delta]).unwrap();
        assert_eq!(v2.lhs, vaf.lhs);
        assert_eq!(v2.rhs, vaf.rhs);
    }

    #[test]
    fn brunn_minkowski_running_pair() {
        let (a, delta) = running_pair();
        // sqrt(11/2) ~ 2.345 <= sqrt(3) + sqrt(1/2) ~ 2.439
        let v = check_brunn_minkowski(&a, &delta).unwrap();
        assert!(v.holds && !v.equality);
        assert!(v.margin > rat(0));
    }

    #[test]
    fn brunn_minkowski_homothety_is_equality() {
        let (a, _) = running_pair();
        let b = a.scale(&ratio(3, 2)).unwrap();
        let v = check_brunn_minkowski(&a, &b).unwrap();
        assert!(v.holds && v.equality);
    }

    #[test]
    fn ell_power_cases() {
        let phi = ToricPsh::Max(alloc::vec![
            ToricPsh::monomial(Point::from_integers(&[2, 0])),
            ToricPsh::monomial(Point::from_integers(&[0, 3])),
        ]);
        let v = check_ell_power(&phi).unwrap();
        assert_eq!(v.lhs, rat(6));
        assert_eq!(v.rhs, rat(4));
        assert!(v.holds);

        let v = check_ell_power(&ToricPsh::log_abs(2)).unwrap();
        assert!(v.equality); // 1 >= 1

        let v = check_ell_power(&ToricPsh::monomial(Point::zero(2))).unwrap();
        assert!(v.equality); // 0 >= 0
    }

    #[test]
    fn fuzz_smoke() {
        let config = FuzzConfig {
            dim: 2,
            count: 8,
            seed: 42,
            max_generators: 3,
            coordinate_bound: 5,
        };
        let summary = fuzz(&config).unwrap();
        assert_eq!(summary.total_violations(), 0);
        assert_eq!(summary.counts_for(InequalityName::Af).checked, 24);
        assert_eq!(summary.counts_for(InequalityName::EllPower).checked, 8);
        assert_eq!(summary.integrality_checked, 8);
        assert_eq!(summary.integrality_failures, 0);
    }

    #[test]
    fn fuzz_is_deterministic_and_order_independent() {
        let config = FuzzConfig {
            dim: 2,
            count: 4,
            seed: 7,
            max_generators: 2,
            coordinate_bound: 4,
        };
        let sequential = fuzz(&config).unwrap();
        let mut reordered = FuzzSummary::empty(config.clone());
        for index in [2u64, 0, 3, 1] {
            reordered.absorb(fuzz_iteration(&config, index).unwrap());
        }
        assert_eq!(sequential.counts, reordered.counts);
        assert_eq!(sequential.integrality_checked, reordered.integrality_checked);
    }

    #[test]
    fn fuzz_empty_and_invalid_configs() {
        let config = FuzzConfig {
            dim: 2,
            count: 0,
            seed: 1,
            max_generators: 2,
            coordinate_bound: 3,
        };
        let summary = fuzz(&config).unwrap();
        assert_eq!(summary.counts_for(InequalityName::Af).checked, 0);

        let bad = FuzzConfig {
            dim: 1,
            ..config
        };
        assert!(matches!(fuzz(&bad), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn verdict_scale_invariance() {
        let (a, delta) = running_pair();
        let lambda = ratio(5, 3);
        let scaled = [
            a.scale(&lambda).unwrap(),
            delta.scale(&lambda).unwrap(),
        ];
        let v1 = check_af(&[a, delta]).unwrap();
        let v2 = check_af(&scaled).unwrap();
        assert_eq!(v1.holds, v2.holds);
        assert_eq!(v1.equality, v2.equality);
    }
}
