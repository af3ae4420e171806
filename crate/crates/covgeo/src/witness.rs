//! Witness and summary serialization. A violation witness carries the full
//! inputs in the same literal formats the CLI accepts, so a reported
//! violation can be replayed bit-exactly with `covgeo check`.

use covgeo_core::inequality::{FuzzSummary, InequalityName, InequalityVerdict, Witness};
use serde_json::{json, Value};

use crate::document::{ideal_literal, psh_literal, region_literal};
use crate::render::rational_string;

pub fn witness_value(witness: &Witness) -> Value {
    match witness {
        Witness::Regions(regions) => json!({
            "kind": "regions",
            "inputs": regions.iter().map(region_literal).collect::<Vec<_>>(),
        }),
        Witness::Ideals(ideals) => json!({
            "kind": "ideals",
            "inputs": ideals.iter().map(ideal_literal).collect::<Vec<_>>(),
        }),
        Witness::Expr(expr) => json!({
            "kind": "psh",
            "inputs": [psh_literal(expr)],
        }),
    }
}

pub fn verdict_value(v: &InequalityVerdict) -> Value {
    json!({
        "inequality": v.name.as_str(),
        "lhs": rational_string(&v.lhs),
        "rhs": rational_string(&v.rhs),
        "margin": rational_string(&v.margin),
        "holds": v.holds,
        "equality": v.equality,
        "witness": witness_value(&v.witness),
    })
}

pub fn summary_value(summary: &FuzzSummary) -> Value {
    let mut checks = serde_json::Map::new();
    for name in InequalityName::ALL {
        let c = summary.counts_for(name);
        checks.insert(
            name.as_str().to_owned(),
            json!({
                "checked": c.checked,
                "holds": c.holds,
                "equalities": c.equalities,
                "violations": c.violations,
            }),
        );
    }
    json!({
        "config": {
            "n": summary.config.dim,
            "count": summary.config.count,
            "seed": summary.config.seed,
            "max_generators": summary.config.max_generators,
            "coordinate_bound": summary.config.coordinate_bound,
        },
        "checks": Value::Object(checks),
        "integrality": {
            "checked": summary.integrality_checked,
            "failures": summary.integrality_failures,
        },
        "violations": summary.violations.iter().map(verdict_value).collect::<Vec<_>>(),
    })
}
