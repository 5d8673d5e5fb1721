//! Problem files in, result documents out.
//!
//! Problem file (JSON):
//!
//! ```text
//! {"kind": "explicit",   "d": 2, "points": [[0, 0], [-3, 2]]}
//! {"kind": "knapsack01", "d": 3, "P": [[...]], "W": [[...]], "c": [...], "translate": [4, 4, 4]}
//! {"kind": "ideal",      "d": 3, "generators": [[1, 1, 0], [0, 1, 1]]}
//! ```
//!
//! Numbers are JSON integers, JSON decimals, or strings holding an integer,
//! a decimal or `"p/q"`. Infinities are not allowed in problem files.
//!
//! In result documents integers are JSON numbers, other rationals are strings
//! (exact decimal when terminating, `"p/q"` otherwise) and infinities are the
//! strings `"inf"` / `"-inf"`.

use std::collections::BTreeSet;

use monocone::tropical::{format_rational, parse_rational};
use monocone::{ExtendedScalar, Outcome, Rational};
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

use crate::CliError;

/// A parsed problem file.
#[derive(Debug, Clone, PartialEq)]
pub enum ProblemDocument {
    Explicit {
        d: usize,
        points: Vec<Outcome>,
    },
    Knapsack01 {
        d: usize,
        objectives: Vec<Vec<Rational>>,
        weights: Vec<Vec<Rational>>,
        capacity: Vec<Rational>,
        translate: Option<Vec<Rational>>,
    },
    Ideal {
        d: usize,
        generators: Vec<Vec<u64>>,
    },
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value, CliError> {
    obj.get(name).ok_or_else(|| input(format!("missing field {name:?}")))
}

fn literal(v: &Value, at: &str) -> Result<Rational, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(input(format!("{at}: expected a number, found {other}"))),
    };
    parse_rational(&text).map_err(|_| input(format!("{at}: {text:?} is not an exact finite number")))
}

fn vector(v: &Value, at: &str) -> Result<Vec<Rational>, CliError> {
    let items = v.as_array().ok_or_else(|| input(format!("{at}: expected an array")))?;
    items
        .iter()
        .enumerate()
        .map(|(k, x)| literal(x, &format!("{at}[{k}]")))
        .collect()
}

fn matrix(v: &Value, at: &str) -> Result<Vec<Vec<Rational>>, CliError> {
    let rows = v.as_array().ok_or_else(|| input(format!("{at}: expected an array of arrays")))?;
    rows.iter()
        .enumerate()
        .map(|(k, row)| vector(row, &format!("{at}[{k}]")))
        .collect()
}

fn check_width(rows: &[Vec<Rational>], width: usize, at: &str) -> Result<(), CliError> {
    match rows.iter().position(|r| r.len() != width) {
        Some(k) => Err(input(format!(
            "{at}[{k}] has {} entries, expected {width}",
            rows[k].len()
        ))),
        None => Ok(()),
    }
}

impl ProblemDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let root: Value = serde_json::from_str(text).map_err(|e| input(format!("invalid JSON: {e}")))?;
        let obj = root.as_object().ok_or_else(|| input("problem file must be a JSON object"))?;
        let kind = field(obj, "kind")?
            .as_str()
            .ok_or_else(|| input("\"kind\" must be a string"))?;
        let d = field(obj, "d")?
            .as_u64()
            .filter(|&d| d >= 1)
            .ok_or_else(|| input("\"d\" must be a positive integer"))? as usize;

        match kind {
            "explicit" => {
                let points = matrix(field(obj, "points")?, "points")?;
                check_width(&points, d, "points")?;
                Ok(ProblemDocument::Explicit { d, points })
            }
            "knapsack01" => {
                let objectives = matrix(field(obj, "P")?, "P")?;
                if objectives.len() != d {
                    return Err(input(format!("P has {} rows, expected d = {d}", objectives.len())));
                }
                let items = objectives[0].len();
                check_width(&objectives, items, "P")?;
                let weights = matrix(field(obj, "W")?, "W")?;
                check_width(&weights, items, "W")?;
                let capacity = vector(field(obj, "c")?, "c")?;
                if capacity.len() != weights.len() {
                    return Err(input(format!(
                        "c has {} entries but W has {} rows",
                        capacity.len(),
                        weights.len()
                    )));
                }
                let translate = match obj.get("translate") {
                    None | Some(Value::Null) => None,
                    Some(v) => {
                        let t = vector(v, "translate")?;
                        if t.len() != d {
                            return Err(input(format!("translate has {} entries, expected {d}", t.len())));
                        }
                        Some(t)
                    }
                };
                Ok(ProblemDocument::Knapsack01 {
                    d,
                    objectives,
                    weights,
                    capacity,
                    translate,
                })
            }
            "ideal" => {
                let rows = matrix(field(obj, "generators")?, "generators")?;
                check_width(&rows, d, "generators")?;
                let generators = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|v| {
                                v.is_integer()
                                    .then(|| v.to_integer().to_u64())
                                    .flatten()
                                    .ok_or_else(|| input(format!("exponent {v} is not a nonnegative integer")))
                            })
                            .collect()
                    })
                    .collect::<Result<_, _>>()?;
                Ok(ProblemDocument::Ideal { d, generators })
            }
            other => Err(input(format!("unknown problem kind {other:?}"))),
        }
    }
}

pub fn scalar_value(s: &ExtendedScalar) -> Value {
    match s {
        ExtendedScalar::Finite(r) => rational_value(r),
        ExtendedScalar::PlusInf => Value::from("inf"),
        ExtendedScalar::MinusInf => Value::from("-inf"),
    }
}

pub fn rational_value(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(v) = r.to_integer().to_i64() {
            return Value::from(v);
        }
    }
    Value::from(format_rational(r))
}

pub fn scalar_from_value(v: &Value) -> Result<ExtendedScalar, CliError> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string())
            .map(ExtendedScalar::Finite)
            .map_err(|e| input(e.to_string())),
        Value::String(s) => s.parse().map_err(|_| input(format!("bad value {s:?}"))),
        other => Err(input(format!("expected a number or string, found {other}"))),
    }
}

/// What `solve` prints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultDocument {
    pub nondominated: BTreeSet<Outcome>,
    pub local_upper_bounds: BTreeSet<Vec<ExtendedScalar>>,
    pub n: u64,
    pub m: u64,
    pub scalarizations: u64,
    pub upper_bound_u: u64,
    pub translate: Option<Vec<Rational>>,
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

/// One vector per line, keys in a fixed order.
fn render_rows(rows: &[Value]) -> String {
    if rows.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = rows.iter().map(|r| format!("    {}", compact(r))).collect();
    format!("[\n{}\n  ]", body.join(",\n"))
}

pub fn outcome_value(z: &[Rational]) -> Value {
    Value::Array(z.iter().map(rational_value).collect())
}

pub fn apex_value(a: &[ExtendedScalar]) -> Value {
    Value::Array(a.iter().map(scalar_value).collect())
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        let nd: Vec<Value> = self.nondominated.iter().map(|z| outcome_value(z)).collect();
        let lub: Vec<Value> = self.local_upper_bounds.iter().map(|a| apex_value(a)).collect();
        let calls_match = self.scalarizations == self.n + self.m;
        let stats = format!(
            "{{\"n\": {}, \"m\": {}, \"scalarizations\": {}, \"upper_bound_U\": {}, \"calls_match\": {}}}",
            self.n, self.m, self.scalarizations, self.upper_bound_u, calls_match
        );
        let translate = match &self.translate {
            Some(t) => compact(&outcome_value(t)),
            None => "null".into(),
        };
        format!(
            "{{\n  \"nondominated\": {},\n  \"local_upper_bounds\": {},\n  \"stats\": {},\n  \"translate\": {}\n}}\n",
            render_rows(&nd),
            render_rows(&lub),
            stats,
            translate
        )
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let join = |v: Vec<String>| v.join("\t");
        for z in &self.nondominated {
            out += &format!("nondominated\t{}\n", join(z.iter().map(format_rational).collect()));
        }
        for a in &self.local_upper_bounds {
            out += &format!("local_upper_bound\t{}\n", join(a.iter().map(ToString::to_string).collect()));
        }
        out += &format!("stat\tn\t{}\n", self.n);
        out += &format!("stat\tm\t{}\n", self.m);
        out += &format!("stat\tscalarizations\t{}\n", self.scalarizations);
        out += &format!("stat\tupper_bound_U\t{}\n", self.upper_bound_u);
        out
    }

    /// Reads a JSON result document back.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let root: Value = serde_json::from_str(text).map_err(|e| input(format!("invalid JSON: {e}")))?;
        let obj = root.as_object().ok_or_else(|| input("result document must be a JSON object"))?;
        let rows = |name: &str| -> Result<Vec<Vec<ExtendedScalar>>, CliError> {
            field(obj, name)?
                .as_array()
                .ok_or_else(|| input(format!("{name} must be an array")))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| input(format!("{name} rows must be arrays")))?
                        .iter()
                        .map(scalar_from_value)
                        .collect()
                })
                .collect()
        };
        let nondominated = rows("nondominated")?
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| c.as_finite().cloned().ok_or_else(|| input("nondominated points must be finite")))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let local_upper_bounds = rows("local_upper_bounds")?.into_iter().collect();
        let stats = field(obj, "stats")?
            .as_object()
            .ok_or_else(|| input("stats must be an object"))?;
        let count = |name: &str| -> Result<u64, CliError> {
            field(stats, name)?
                .as_u64()
                .ok_or_else(|| input(format!("stats.{name} must be a nonnegative integer")))
        };
        let translate = match obj.get("translate") {
            None | Some(Value::Null) => None,
            Some(v) => Some(vector(v, "translate")?),
        };
        Ok(ResultDocument {
            nondominated,
            local_upper_bounds,
            n: count("n")?,
            m: count("m")?,
            scalarizations: count("scalarizations")?,
            upper_bound_u: count("upper_bound_U")?,
            translate,
        })
    }
}
