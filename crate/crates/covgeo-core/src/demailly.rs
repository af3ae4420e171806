//! Multiplier ideals of toric functions and their approximation sequence.
//!
//! For a toric function with cofinite indicator diagram Γ, the multiplier
//! ideal at level m is the monomial ideal of lattice points `a >= 0` with
//! `a + 1` interior to `mΓ`. The minimal generators are extracted by a
//! staircase walk over a finite box derived from the complement bound of
//! `mΓ`: any candidate with a coordinate beyond the box is interior by that
//! coordinate alone and hence never minimal. The normalized `Covol_k` of the
//! Newton polyhedra of these ideals approximates the Lelong numbers of the
//! function from below, which is what the convergence report tabulates.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::covolume::{complement_box_bound, covol_k};
use crate::error::{Error, Result};
use crate::ideal::{mixed_multiplicity, MonomialIdeal};
use crate::rational::{ceil_to_int, factorial, Rational};
use crate::region::Region;
use crate::toric::{lelong_number, ToricPsh};

/// Strict facet test `normal . x > offset` on integer points, with an i128
/// fast path for the staircase walk and an exact big-integer fallback.
enum FacetTest {
    Small { normal: Vec<i128>, rhs: i128 },
    Big { normal: Vec<BigInt>, rhs: BigInt },
}

impl FacetTest {
    fn new(normal: &[BigInt], offset: &Rational) -> FacetTest {
        // normal . x > p/q  <=>  (q * normal) . x > p  with q > 0
        let scaled: Vec<BigInt> = normal.iter().map(|c| c * offset.denom()).collect();
        let rhs = offset.numer().clone();
        let fits = |x: &BigInt| x.to_i128().is_some_and(|v| v.abs() < (1i128 << 80));
        if scaled.iter().all(fits) && fits(&rhs) {
            FacetTest::Small {
                normal: scaled.iter().map(|c| c.to_i128().unwrap()).collect(),
                rhs: rhs.to_i128().unwrap(),
            }
        } else {
            FacetTest::Big {
                normal: scaled,
                rhs,
            }
        }
    }

    fn strict(&self, x: &[u64]) -> bool {
        match self {
            FacetTest::Small { normal, rhs } => {
                let dot: i128 = normal.iter().zip(x).map(|(n, &c)| n * c as i128).sum();
                dot > *rhs
            }
            FacetTest::Big { normal, rhs } => {
                let dot: BigInt = normal.iter().zip(x).map(|(n, &c)| n * BigInt::from(c)).sum();
                dot > *rhs
            }
        }
    }
}

/// Multiplier ideal extracted directly from an indicator diagram. Depends
/// only on the diagram, so two expressions with equal diagrams yield
/// identical ideals by construction.
pub fn multiplier_ideal_of_diagram(diagram: &Region, m: u32) -> Result<MonomialIdeal> {
    if m == 0 {
        return Err(Error::NonpositiveM);
    }
    if !diagram.is_cofinite() {
        return Err(Error::NotCofinite);
    }
    let n = diagram.dim();
    let scaled = diagram.scale(&Rational::from_integer(BigInt::from(m)))?;
    let bound = complement_box_bound(&scaled)?;
    let box_top = ceil_to_int(&bound)
        .to_u64()
        .expect("complement bound fits u64 at desk scale")
        + 1;

    let tests: Vec<FacetTest> = scaled
        .facets()
        .iter()
        .map(|h| FacetTest::new(h.normal(), h.offset()))
        .collect();
    // a + 1 is strictly positive, so interior membership is exactly the
    // strict facet tests.
    let shifted = |a: &[u64]| -> Vec<u64> { a.iter().map(|&c| c + 1).collect() };
    let in_set = |a: &[u64]| tests.iter().all(|t| t.strict(&shifted(a)));

    if n == 1 {
        let v = lowest_member(|last| in_set(&[last]), box_top);
        return MonomialIdeal::new(1, alloc::vec![alloc::vec![v]]);
    }

    // Staircase walk: for every prefix in [0, box_top]^(n-1), the minimal
    // feasible last coordinate; a point is a minimal generator iff it is
    // minimal along every axis, checked against already-visited neighbors.
    let width = box_top + 1;
    let prefix_count = width.pow((n - 1) as u32);
    let mut table: Vec<u64> = Vec::with_capacity(prefix_count as usize);
    let mut gens: Vec<Vec<u64>> = Vec::new();
    let mut prefix = alloc::vec![0u64; n - 1];
    let mut strides = alloc::vec![1u64; n - 1];
    for j in (0..n - 1).rev() {
        if j + 1 < n - 1 {
            strides[j] = strides[j + 1] * width;
        }
    }
    for idx in 0..prefix_count {
        let v = lowest_member(
            |last| {
                let mut point = prefix.clone();
                point.push(last);
                in_set(&point)
            },
            box_top,
        );
        table.push(v);
        let minimal = (0..n - 1).all(|j| {
            prefix[j] == 0 || v < table[(idx - strides[j]) as usize]
        });
        if minimal {
            let mut g = prefix.clone();
            g.push(v);
            gens.push(g);
        }
        // mixed-radix increment, last prefix axis fastest
        for j in (0..n - 1).rev() {
            prefix[j] += 1;
            if prefix[j] < width {
                break;
            }
            prefix[j] = 0;
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Binary search for the least `last` in `[0, top]` satisfying the monotone
/// predicate; the top of the box always satisfies it.
fn lowest_member(feasible: impl Fn(u64) -> bool, top: u64) -> u64 {
    debug_assert!(feasible(top), "box top must be interior");
    let (mut lo, mut hi) = (0u64, top);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Multiplier ideal `J(m φ)` of a toric expression.
pub fn multiplier_ideal(phi: &ToricPsh, m: u32) -> Result<MonomialIdeal> {
    multiplier_ideal_of_diagram(&phi.indicator_diagram()?, m)
}

fn m_power(m: u32, k: usize) -> Rational {
    let mut acc = BigInt::from(1);
    for _ in 0..k {
        acc *= BigInt::from(m);
    }
    Rational::from_integer(acc)
}

fn lelong_of_ideal(ideal: &MonomialIdeal, newton: &Region, k: usize, m: u32) -> Result<Rational> {
    let n = ideal.dim();
    let value = factorial(n) * covol_k(newton, k)? / m_power(m, k);

    // Same number through the mixed-multiplicity route; the two are asserted
    // equal on every call.
    let mut family = Vec::with_capacity(n);
    for _ in 0..k {
        family.push(ideal.clone());
    }
    for _ in k..n {
        family.push(MonomialIdeal::maximal(n));
    }
    let via_multiplicity = mixed_multiplicity(&family)? / m_power(m, k);
    assert_eq!(
        value, via_multiplicity,
        "covolume and mixed-multiplicity routes disagree"
    );
    Ok(value)
}

/// k-th Lelong number of the m-th approximant:
/// `(n!/m^k) Covol_k(N(J(m φ)))`, equivalently `(1/m^k)` times the mixed
/// multiplicity of k copies of `J(m φ)` against the maximal ideal.
pub fn demailly_lelong(phi: &ToricPsh, k: usize, m: u32) -> Result<Rational> {
    let diagram = phi.indicator_diagram()?;
    let n = diagram.dim();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let ideal = multiplier_ideal_of_diagram(&diagram, m)?;
    let newton = ideal.newton_polyhedron();
    lelong_of_ideal(&ideal, &newton, k, m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemaillyRow {
    pub m: u32,
    /// Number of minimal generators of `J(m φ)`.
    pub ideal_size: usize,
    /// `ℓ_k` of the m-th approximant; never exceeds the target.
    pub value: Rational,
    /// `target - value`, always nonnegative.
    pub deficit: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemaillyReport {
    pub k: usize,
    /// `ℓ_k` of the function itself.
    pub target: Rational,
    pub rows: Vec<DemaillyRow>,
    /// Deficit at the largest m within tolerance.
    pub verdict: bool,
}

/// Convergence verdict thresholds: the report converges when the final
/// deficit is at most `relative * target` or at most `absolute`, compared
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemaillyTolerance {
    pub relative: Rational,
    pub absolute: Rational,
}

impl Default for DemaillyTolerance {
    fn default() -> Self {
        DemaillyTolerance {
            relative: Rational::new(1.into(), 100.into()),
            absolute: Rational::new(1.into(), 100.into()),
        }
    }
}

pub fn demailly_report(phi: &ToricPsh, k: usize, m_list: &[u32]) -> Result<DemaillyReport> {
    demailly_report_with_tolerance(phi, k, m_list, &DemaillyTolerance::default())
}

/// Tabulates the approximant Lelong numbers against the target, checking the
/// outer approximation `(1/m) N(J(m φ)) ⊇ Γ_φ` at every level (hence value
/// <= target row by row).
pub fn demailly_report_with_tolerance(
    phi: &ToricPsh,
    k: usize,
    m_list: &[u32],
    tolerance: &DemaillyTolerance,
) -> Result<DemaillyReport> {
    if m_list.is_empty() || m_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidConfig("m list must be nonempty and increasing"));
    }
    let diagram = phi.indicator_diagram()?;
    let n = diagram.dim();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let target = lelong_number(phi, k)?;

    let mut rows = Vec::with_capacity(m_list.len());
    for &m in m_list {
        let ideal = multiplier_ideal_of_diagram(&diagram, m)?;
        let newton = ideal.newton_polyhedron();
        for g in diagram.generators() {
            let scaled = g.scale(&Rational::from_integer(BigInt::from(m)));
            assert!(
                newton.contains(&scaled)?,
                "outer approximation violated at m = {m}"
            );
        }
        let value = lelong_of_ideal(&ideal, &newton, k, m)?;
        let deficit = &target - &value;
        assert!(!deficit.is_negative(), "approximant exceeded the target");
        rows.push(DemaillyRow {
            m,
            ideal_size: ideal.generators().len(),
            value,
            deficit,
        });
    }

    let last = &rows.last().expect("nonempty m list").deficit;
    let verdict =
        *last <= &tolerance.relative * &target || *last <= tolerance.absolute;
    Ok(DemaillyReport {
        k,
        target,
        rows,
        verdict,
    })
}

/// Subadditivity of multiplier ideals on the staircase:
/// `J((m1+m2) φ) ⊆ J(m1 φ) · J(m2 φ)`. Expected true; false is a finding,
/// not an error.
pub fn subadditivity_check(phi: &ToricPsh, m1: u32, m2: u32) -> Result<bool> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::NonpositiveM);
    }
    let diagram = phi.indicator_diagram()?;
    let joint = multiplier_ideal_of_diagram(&diagram, m1 + m2)?;
    let product = multiplier_ideal_of_diagram(&diagram, m1)?
        .product(&multiplier_ideal_of_diagram(&diagram, m2)?)?;
    Ok(joint.is_subideal_of(&product))
}
