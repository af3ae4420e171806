//! Diagram morphism laws, the Kiselman/Lelong consistency check, ideal
//! algebra against Newton polyhedra, and the Hilbert-Samuel oracle trend.

mod common;

use covgeo_core::covolume::covolume;
use covgeo_core::ideal::{
    hilbert_samuel_oracle, mixed_multiplicity, multiplicity, MonomialIdeal,
};
use covgeo_core::inequality::{random_ideal, random_region};
use covgeo_core::rational::{rat, ratio, Rational};
use covgeo_core::toric::{
    indicator_expression, kiselman_number, lelong_number, mixed_ma_mass, ToricPsh,
};
use covgeo_core::{Point, Region};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_cofinite_expr<R: Rng>(rng: &mut R, dim: usize) -> ToricPsh {
    covgeo_core::inequality::random_cofinite_expr(rng, dim, 5, 1)
}

#[test]
fn diagram_morphism_laws() {
    let mut rng = rng(31);
    for _ in 0..25 {
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let phi = random_cofinite_expr(&mut rng, n);
        let psi = random_cofinite_expr(&mut rng, n);
        let d_phi = phi.indicator_diagram().unwrap();
        let d_psi = psi.indicator_diagram().unwrap();

        let max = ToricPsh::Max(vec![phi.clone(), psi.clone()]);
        let mut union = d_phi.generators().to_vec();
        union.extend_from_slice(d_psi.generators());
        assert_eq!(
            max.indicator_diagram().unwrap(),
            Region::from_generators(union).unwrap()
        );

        let sum = ToricPsh::Sum(vec![(rat(1), phi.clone()), (rat(1), psi.clone())]);
        assert_eq!(
            sum.indicator_diagram().unwrap(),
            d_phi.minkowski_sum(&d_psi).unwrap()
        );

        let lambda = ratio(rng.gen_range(1..=5), rng.gen_range(1..=2));
        let scaled = ToricPsh::Sum(vec![(lambda.clone(), phi.clone())]);
        assert_eq!(
            scaled.indicator_diagram().unwrap(),
            d_phi.scale(&lambda).unwrap()
        );
    }
}

#[test]
fn kiselman_at_ones_is_the_lelong_number() {
    let mut rng = rng(32);
    for trial in 0..110 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let phi = random_cofinite_expr(&mut rng, n);
        let ones = Point::new(vec![rat(1); n]);
        assert_eq!(
            kiselman_number(&phi, &ones).unwrap(),
            lelong_number(&phi, 1).unwrap(),
            "ℓ1 must equal the Kiselman number in direction (1,...,1)"
        );
    }
}

#[test]
fn singularity_monotonicity() {
    let mut rng = rng(33);
    for _ in 0..20 {
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let phi = random_cofinite_expr(&mut rng, n);
        let d_phi = phi.indicator_diagram().unwrap();

        // 2Γ ⊆ Γ for these upward-closed regions: a smaller diagram means a
        // more singular function, so the Lelong numbers grow.
        let smaller = d_phi.scale(&rat(2)).unwrap();
        let psi = indicator_expression(&smaller);
        assert!(d_phi.contains_region(&smaller).unwrap());
        for k in 1..=n {
            assert!(
                lelong_number(&psi, k).unwrap() >= lelong_number(&phi, k).unwrap(),
                "smaller diagram must not have smaller Lelong numbers"
            );
        }

        // enlarging the diagram with an extra generator goes the other way
        let mut gens = d_phi.generators().to_vec();
        gens.push(Point::new(
            (0..n).map(|_| ratio(rng.gen_range(0..=3), 2)).collect(),
        ));
        let bigger = Region::from_generators(gens).unwrap();
        let chi = indicator_expression(&bigger);
        assert!(bigger.contains_region(&d_phi).unwrap());
        for k in 1..=n {
            assert!(lelong_number(&chi, k).unwrap() <= lelong_number(&phi, k).unwrap());
        }
    }
}

#[test]
fn m_transform_preserves_diagram_and_numbers() {
    let mut rng = rng(34);
    for _ in 0..20 {
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let phi = random_cofinite_expr(&mut rng, n);
        let m = rng.gen_range(2..=9);
        let phi_m = phi.m_transform(m).unwrap();
        assert_eq!(
            phi.indicator_diagram().unwrap(),
            phi_m.indicator_diagram().unwrap()
        );
        for k in 1..=n {
            assert_eq!(
                lelong_number(&phi, k).unwrap(),
                lelong_number(&phi_m, k).unwrap()
            );
        }
    }
}

#[test]
fn lelong_numbers_are_nonnegative_rationals() {
    let mut rng = rng(35);
    for _ in 0..20 {
        let n = 2;
        let phi = random_cofinite_expr(&mut rng, n);
        for k in 1..=n {
            assert!(lelong_number(&phi, k).unwrap() >= rat(0));
        }
    }
    // rational (non-integer) values do occur: the half-scaled simplex
    // diagram has ℓ_k = (1/2)^k
    let phi = ToricPsh::Sum(vec![(ratio(1, 2), ToricPsh::log_abs(2))]);
    assert_eq!(lelong_number(&phi, 1).unwrap(), ratio(1, 2));
    assert_eq!(lelong_number(&phi, 2).unwrap(), ratio(1, 4));
}

#[test]
fn mass_diagonal_is_the_top_lelong_number() {
    let mut rng = rng(36);
    for _ in 0..10 {
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let phi = random_cofinite_expr(&mut rng, n);
        let family: Vec<ToricPsh> = vec![phi.clone(); n];
        assert_eq!(
            mixed_ma_mass(&family).unwrap(),
            lelong_number(&phi, n).unwrap()
        );
    }
}

#[test]
fn newton_polyhedron_of_product_is_minkowski_sum() {
    let mut rng = rng(37);
    for _ in 0..25 {
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let i = random_ideal(&mut rng, n, 3, 6);
        let j = random_ideal(&mut rng, n, 3, 6);
        assert_eq!(
            i.product(&j).unwrap().newton_polyhedron(),
            i.newton_polyhedron().minkowski_sum(&j.newton_polyhedron()).unwrap()
        );
    }
}

#[test]
fn mixed_multiplicity_matches_polarization_over_products() {
    let mut rng = rng(38);
    for _ in 0..12 {
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let ideals: Vec<MonomialIdeal> = (0..n).map(|_| random_ideal(&mut rng, n, 2, 5)).collect();
        // polarization of e over ideal products, using N(I·J) = N(I) + N(J):
        // n! Covol of the polyhedra equals the alternating sum of e(Π_{i∈S} I_i)
        let mixed = mixed_multiplicity(&ideals).unwrap();
        let mut acc = rat(0);
        for mask in 1u32..(1 << n) {
            let mut product: Option<MonomialIdeal> = None;
            for (i, ideal) in ideals.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    product = Some(match product {
                        None => ideal.clone(),
                        Some(p) => p.product(ideal).unwrap(),
                    });
                }
            }
            let e = multiplicity(&product.unwrap()).unwrap();
            let sign = if (n - mask.count_ones() as usize) % 2 == 0 {
                rat(1)
            } else {
                rat(-1)
            };
            acc += sign * e;
        }
        assert_eq!(mixed, acc / covgeo_core::rational::factorial(n));
        assert!(mixed.is_integer(), "mixed multiplicities of monomial ideals are integers");
    }
}

#[test]
fn multiplicity_of_powers_scales() {
    let mut rng = rng(39);
    for _ in 0..15 {
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let i = random_ideal(&mut rng, n, 2, 5);
        let m = rng.gen_range(2..=4u32);
        let mut m_pow = rat(1);
        for _ in 0..n {
            m_pow *= rat(m as i64);
        }
        assert_eq!(
            multiplicity(&i.power(m).unwrap()).unwrap(),
            m_pow * multiplicity(&i).unwrap()
        );
    }
}

#[test]
fn staircase_containment_reverses_multiplicities() {
    let mut rng = rng(40);
    for _ in 0..15 {
        let n = 2;
        let i = random_ideal(&mut rng, n, 3, 6);
        // J ⊇ I by adding a generator
        let mut gens = i.generators().to_vec();
        gens.push((0..n).map(|_| rng.gen_range(0..=6)).collect());
        let j = MonomialIdeal::new(n, gens).unwrap();
        assert!(i.is_subideal_of(&j));
        assert!(multiplicity(&i).unwrap() >= multiplicity(&j).unwrap());
    }
}

#[test]
fn hilbert_samuel_oracle_trend() {
    let mut rng = rng(41);
    for trial in 0..8 {
        let (n, m_max) = if trial % 2 == 0 { (2, 16) } else { (3, 8) };
        let ideal = random_ideal(&mut rng, n, 2, 4);
        let report = hilbert_samuel_oracle(&ideal, m_max).unwrap();
        assert!(report.limit.is_integer());
        let dev = |m: u32| -> &Rational {
            &report.rows[(m - 1) as usize].deviation
        };
        let mut m = 1;
        while 2 * m <= m_max {
            assert!(
                dev(2 * m) <= dev(m),
                "deviation must not grow when m doubles"
            );
            m *= 2;
        }
        // fitted C over the first half bounds the final deviation by C/m
        let fitted = (1..=m_max / 2)
            .map(|m| dev(m) * rat(m as i64))
            .max()
            .unwrap();
        assert!(dev(m_max) * rat(m_max as i64) <= fitted.max(rat(0)));
    }
}

#[test]
fn newton_polyhedron_covolume_drives_multiplicity() {
    // worked values: e((z1^2, z2^3)) = 6, e(maximal^2) = 4 at n=2,
    // e((z1, z2, z3^2)) = 2 at n=3
    let i = MonomialIdeal::new(2, vec![vec![2, 0], vec![0, 3]]).unwrap();
    assert_eq!(multiplicity(&i).unwrap(), rat(6));
    assert_eq!(covolume(&i.newton_polyhedron()).unwrap(), rat(3));
    let m2 = MonomialIdeal::maximal(2).power(2).unwrap();
    assert_eq!(multiplicity(&m2).unwrap(), rat(4));
    let j = MonomialIdeal::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap();
    assert_eq!(multiplicity(&j).unwrap(), rat(2));
}

#[test]
fn region_randomizer_always_produces_cofinite_canonical_regions() {
    let mut rng = rng(42);
    for _ in 0..30 {
        let n = rng.gen_range(2..=3);
        let r = random_region(&mut rng, n, 4, 6);
        assert!(r.is_cofinite());
        assert_eq!(r, Region::from_generators(r.generators().to_vec()).unwrap());
    }
}
