//! Exact scalar arithmetic. Every quantity in this crate is a `Rational`;
//! nothing is ever rounded.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (enforced by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// n! as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Clears denominators and divides out the content, mapping a nonzero
/// rational vector to the unique primitive integer vector on the same ray.
/// Returns `None` for the zero vector.
pub fn primitive_integer_vector(v: &[Rational]) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    Some(primitive_of_integers(ints))
}

/// Divides an integer vector by the gcd of its entries (sign preserved).
pub fn primitive_of_integers(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut ints {
            *x /= &g;
        }
    }
    ints
}

/// Floor of a nonnegative rational as a big integer.
pub fn floor_to_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Ceiling of a rational as a big integer.
pub fn ceil_to_int(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Directed-rounding bounds `lo <= x^(1/n) <= hi` with `hi - lo <= 2/10^digits`,
/// for `x >= 0`. Exact integer arithmetic throughout.
pub fn nth_root_bounds(x: &Rational, n: u32, digits: u32) -> (Rational, Rational) {
    assert!(!x.is_negative(), "nth_root_bounds needs x >= 0");
    assert!(n >= 1);
    let scale = BigInt::from(10u32).pow(digits);
    let scale_n = scale.pow(n);
    let scaled = x * Rational::from_integer(scale_n);
    let lo_int = floor_to_int(&scaled).nth_root(n);
    let hi_int = ceil_to_int(&scaled).nth_root(n) + BigInt::one();
    (
        Rational::new(lo_int, scale.clone()),
        Rational::new(hi_int, scale),
    )
}
