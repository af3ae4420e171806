//! Deterministic text rendering. Every number is printed exactly (integer
//! or `p/q`) next to a 15-digit decimal derived from the same rational; the
//! decimal is never computed independently.

use covgeo_core::demailly::DemaillyReport;
use covgeo_core::inequality::{FuzzSummary, InequalityName, InequalityVerdict};
use covgeo_core::rational::Rational;
use covgeo_core::{HalfSpace, Point, Region};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub const DECIMAL_DIGITS: u32 = 15;

/// Exact form: plain integer when the denominator is 1, `p/q` otherwise.
pub fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal with `DECIMAL_DIGITS` digits after the point, rounded half away
/// from zero; derived from the exact value.
pub fn decimal_string(r: &Rational) -> String {
    let scale = BigInt::from(10u32).pow(DECIMAL_DIGITS);
    let magnitude = r.abs();
    // round(|r| * scale) = floor((2 * numer * scale + denom) / (2 * denom))
    let scaled = (magnitude.numer() * &scale * 2u32 + magnitude.denom())
        / (magnitude.denom() * 2u32);
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if r.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    format!(
        "{sign}{int_part}.{frac:0>width$}",
        frac = frac_part.to_string(),
        width = DECIMAL_DIGITS as usize
    )
}

/// `p/q (decimal)` pair.
pub fn value_string(r: &Rational) -> String {
    format!("{} ({})", rational_string(r), decimal_string(r))
}

pub fn point_string(p: &Point) -> String {
    let coords: Vec<String> = p.coords().iter().map(rational_string).collect();
    format!("({})", coords.join(","))
}

/// Facet as an inequality over x1..xn, e.g. `3*x1 + 2*x2 >= 6`.
pub fn facet_string(h: &HalfSpace) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, c) in h.normal().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let var = format!("x{}", i + 1);
        if c == &BigInt::from(1) {
            terms.push(var);
        } else {
            terms.push(format!("{c}*{var}"));
        }
    }
    format!(
        "{} >= {}",
        terms.join(" + "),
        rational_string(h.offset())
    )
}

pub fn region_block(label: Option<&str>, region: &Region, covolume: Option<&Rational>) -> String {
    let mut out = String::new();
    if let Some(label) = label {
        out.push_str(&format!("label: {label}\n"));
    }
    out.push_str(&format!("dim: {}\n", region.dim()));
    let gens: Vec<String> = region.generators().iter().map(point_string).collect();
    out.push_str(&format!("generators: [{}]\n", gens.join(", ")));
    if region.facets().is_empty() {
        out.push_str("facets: none beyond the orthant\n");
    } else {
        out.push_str("facets:\n");
        for facet in region.facets() {
            out.push_str(&format!("  {}\n", facet_string(facet)));
        }
    }
    out.push_str(&format!("cofinite: {}\n", region.is_cofinite()));
    match covolume {
        Some(value) => out.push_str(&format!("covolume: {}\n", value_string(value))),
        None => out.push_str("covolume: infinite (region is not cofinite)\n"),
    }
    out
}

pub fn demailly_table(report: &DemaillyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("k: {}\n", report.k));
    out.push_str(&format!("target: {}\n", value_string(&report.target)));
    out.push_str("m, ideal_size, value, value_decimal, deficit\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{}, {}, {}, {}, {}\n",
            row.m,
            row.ideal_size,
            rational_string(&row.value),
            decimal_string(&row.value),
            rational_string(&row.deficit),
        ));
    }
    out.push_str(&format!("converged: {}\n", report.verdict));
    out
}

/// CSV rows for downstream plotting: m, exact value, 15-digit decimal,
/// exact deficit.
pub fn demailly_csv(report: &DemaillyReport) -> String {
    let mut out = String::from("m,value,value_decimal,deficit\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.m,
            rational_string(&row.value),
            decimal_string(&row.value),
            rational_string(&row.deficit),
        ));
    }
    out
}

pub fn verdict_block(v: &InequalityVerdict) -> String {
    let mut out = String::new();
    out.push_str(&format!("inequality: {}\n", v.name.as_str()));
    out.push_str(&format!("lhs: {}\n", value_string(&v.lhs)));
    out.push_str(&format!("rhs: {}\n", value_string(&v.rhs)));
    out.push_str(&format!("margin: {}\n", value_string(&v.margin)));
    out.push_str(&format!("holds: {}\n", v.holds));
    out.push_str(&format!("equality: {}\n", v.equality));
    out
}

pub fn fuzz_table(summary: &FuzzSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "fuzz: n={} count={} seed={} max_generators={} coordinate_bound={}\n",
        summary.config.dim,
        summary.config.count,
        summary.config.seed,
        summary.config.max_generators,
        summary.config.coordinate_bound,
    ));
    out.push_str("check, checked, holds, equalities, violations\n");
    for name in InequalityName::ALL {
        let c = summary.counts_for(name);
        out.push_str(&format!(
            "{}, {}, {}, {}, {}\n",
            name.as_str(),
            c.checked,
            c.holds,
            c.equalities,
            c.violations
        ));
    }
    out.push_str(&format!(
        "integrality, {}, {}, -, {}\n",
        summary.integrality_checked,
        summary.integrality_checked - summary.integrality_failures,
        summary.integrality_failures
    ));
    out.push_str(&format!("total violations: {}\n", summary.total_violations()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use covgeo_core::rational::{rat, ratio};

    #[test]
    fn exact_strings() {
        assert_eq!(rational_string(&rat(7)), "7");
        assert_eq!(rational_string(&ratio(11, 2)), "11/2");
        assert_eq!(rational_string(&ratio(-3, 4)), "-3/4");
    }

    #[test]
    fn decimal_strings_round_half_away() {
        assert_eq!(decimal_string(&ratio(1, 2)), "0.500000000000000");
        assert_eq!(decimal_string(&rat(3)), "3.000000000000000");
        assert_eq!(decimal_string(&ratio(-11, 4)), "-2.750000000000000");
        assert_eq!(decimal_string(&ratio(1, 3)), "0.333333333333333");
        assert_eq!(decimal_string(&ratio(2, 3)), "0.666666666666667");
    }

    #[test]
    fn facet_rendering() {
        let h = HalfSpace::from_integers(&[3, 2], 6);
        assert_eq!(facet_string(&h), "3*x1 + 2*x2 >= 6");
        let h = HalfSpace::from_integers(&[0, 1], 1);
        assert_eq!(facet_string(&h), "x2 >= 1");
    }

    #[test]
    fn region_block_smoke() {
        let region = Region::from_generators(vec![
            Point::from_integers(&[2, 0]),
            Point::from_integers(&[0, 3]),
        ])
        .unwrap();
        let cov = covgeo_core::covolume::covolume(&region).unwrap();
        let block = region_block(Some("A"), &region, Some(&cov));
        assert!(block.contains("label: A"));
        assert!(block.contains("3*x1 + 2*x2 >= 6"));
        assert!(block.contains("covolume: 3 (3.000000000000000)"));
    }
}
