//! JSON input documents. A document carries a dimension and exactly one of
//! a region (generator lists), a monomial ideal (integer exponent lists) or
//! a piecewise-log-linear toric expression, plus an optional label:
//!
//! ```json
//! {"dim": 2, "generators": [["2","0"],["0","3"]]}
//! {"dim": 2, "ideal": [[2,0],[0,3]]}
//! {"dim": 2, "psh": {"max":[{"mono":{"a":["2","0"],"c":"0"}},
//!                           {"mono":{"a":["0","3"],"c":"0"}}]}}
//! ```
//!
//! Rationals are integer or `"p/q"` strings; `sum` nodes carry
//! `[weight, child]` pairs.

use std::str::FromStr;

use covgeo_core::rational::Rational;
use covgeo_core::{MonomialIdeal, Point, Region, ToricPsh};
use serde_json::Value;

use crate::{CliError, CliResult};

#[derive(Debug, Clone)]
pub enum Payload {
    Region(Region),
    Ideal(MonomialIdeal),
    Psh(ToricPsh),
}

#[derive(Debug, Clone)]
pub struct InputDocument {
    pub dim: usize,
    pub label: Option<String>,
    pub payload: Payload,
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

pub fn parse_rational(value: &Value) -> CliResult<Rational> {
    match value {
        Value::String(s) => {
            Rational::from_str(s.trim()).map_err(|e| parse_err(format!("bad rational {s:?}: {e}")))
        }
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| parse_err(format!("non-integer number {n}")))?;
            Ok(Rational::from_integer(i.into()))
        }
        other => Err(parse_err(format!("expected rational, got {other}"))),
    }
}

fn parse_point(value: &Value, dim: usize) -> CliResult<Point> {
    let list = value
        .as_array()
        .ok_or_else(|| parse_err("coordinate list must be an array"))?;
    if list.len() != dim {
        return Err(parse_err(format!(
            "coordinate list has {} entries, expected {dim}",
            list.len()
        )));
    }
    Ok(Point::new(
        list.iter().map(parse_rational).collect::<CliResult<_>>()?,
    ))
}

fn parse_psh(value: &Value, dim: usize) -> CliResult<ToricPsh> {
    let obj = value
        .as_object()
        .ok_or_else(|| parse_err("psh node must be an object"))?;
    if obj.len() != 1 {
        return Err(parse_err("psh node must have exactly one of mono/max/sum"));
    }
    let (kind, body) = obj.iter().next().expect("len checked");
    match kind.as_str() {
        "mono" => {
            let slope = body
                .get("a")
                .ok_or_else(|| parse_err("mono node needs a slope \"a\""))?;
            let offset = match body.get("c") {
                Some(c) => parse_rational(c)?,
                None => Rational::from_integer(0.into()),
            };
            Ok(ToricPsh::Mono {
                slope: parse_point(slope, dim)?,
                offset,
            })
        }
        "max" => {
            let children = body
                .as_array()
                .ok_or_else(|| parse_err("max node carries an array of children"))?;
            Ok(ToricPsh::Max(
                children
                    .iter()
                    .map(|c| parse_psh(c, dim))
                    .collect::<CliResult<_>>()?,
            ))
        }
        "sum" => {
            let children = body
                .as_array()
                .ok_or_else(|| parse_err("sum node carries an array of [weight, child] pairs"))?;
            let mut pairs = Vec::with_capacity(children.len());
            for entry in children {
                let pair = entry
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| parse_err("sum entries are [weight, child] pairs"))?;
                pairs.push((parse_rational(&pair[0])?, parse_psh(&pair[1], dim)?));
            }
            Ok(ToricPsh::Sum(pairs))
        }
        other => Err(parse_err(format!("unknown psh node kind {other:?}"))),
    }
}

pub fn parse_document(text: &str) -> CliResult<InputDocument> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| parse_err("document must be a JSON object"))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("document needs a positive integer \"dim\""))? as usize;
    if dim == 0 {
        return Err(parse_err("dim must be at least 1"));
    }
    let label = obj
        .get("label")
        .map(|l| {
            l.as_str()
                .map(str::to_owned)
                .ok_or_else(|| parse_err("label must be a string"))
        })
        .transpose()?;

    let payloads = ["generators", "ideal", "psh"]
        .iter()
        .filter(|k| obj.contains_key(**k))
        .count();
    if payloads != 1 {
        return Err(parse_err(
            "document must carry exactly one of generators / ideal / psh",
        ));
    }

    let payload = if let Some(gens) = obj.get("generators") {
        let list = gens
            .as_array()
            .ok_or_else(|| parse_err("generators must be an array"))?;
        let points = list
            .iter()
            .map(|g| parse_point(g, dim))
            .collect::<CliResult<Vec<_>>>()?;
        Payload::Region(Region::from_generators(points)?)
    } else if let Some(ideal) = obj.get("ideal") {
        let list = ideal
            .as_array()
            .ok_or_else(|| parse_err("ideal must be an array of exponent lists"))?;
        let mut gens = Vec::with_capacity(list.len());
        for row in list {
            let exps = row
                .as_array()
                .ok_or_else(|| parse_err("exponent list must be an array"))?;
            if exps.len() != dim {
                return Err(parse_err(format!(
                    "exponent list has {} entries, expected {dim}",
                    exps.len()
                )));
            }
            gens.push(
                exps.iter()
                    .map(|e| {
                        e.as_u64()
                            .ok_or_else(|| parse_err(format!("exponent {e} must be a nonnegative integer")))
                    })
                    .collect::<CliResult<Vec<u64>>>()?,
            );
        }
        Payload::Ideal(MonomialIdeal::new(dim, gens)?)
    } else {
        let psh = obj.get("psh").expect("payload count checked");
        Payload::Psh(parse_psh(psh, dim)?)
    };

    Ok(InputDocument { dim, label, payload })
}

pub fn read_document(path: &std::path::Path) -> CliResult<InputDocument> {
    parse_document(&std::fs::read_to_string(path)?)
}

/// Serializes back to the input literal formats (used by witness files).
pub fn rational_literal(r: &Rational) -> Value {
    Value::String(crate::render::rational_string(r))
}

pub fn region_literal(region: &Region) -> Value {
    serde_json::json!({
        "dim": region.dim(),
        "generators": region
            .generators()
            .iter()
            .map(|g| Value::Array(g.coords().iter().map(rational_literal).collect()))
            .collect::<Vec<_>>(),
    })
}

pub fn ideal_literal(ideal: &MonomialIdeal) -> Value {
    serde_json::json!({
        "dim": ideal.dim(),
        "ideal": ideal.generators(),
    })
}

pub fn psh_node_literal(expr: &ToricPsh) -> Value {
    match expr {
        ToricPsh::Mono { slope, offset } => serde_json::json!({
            "mono": {
                "a": slope.coords().iter().map(rational_literal).collect::<Vec<_>>(),
                "c": rational_literal(offset),
            }
        }),
        ToricPsh::Max(children) => serde_json::json!({
            "max": children.iter().map(psh_node_literal).collect::<Vec<_>>(),
        }),
        ToricPsh::Sum(children) => serde_json::json!({
            "sum": children
                .iter()
                .map(|(w, c)| Value::Array(vec![rational_literal(w), psh_node_literal(c)]))
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn psh_literal(expr: &ToricPsh) -> Value {
    serde_json::json!({
        "dim": expr.dim(),
        "psh": psh_node_literal(expr),
    })
}
