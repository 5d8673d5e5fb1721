//! Subcommands of the `monocone` binary.

pub mod document;

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use monocone::bounds::upper_bound;
use monocone::cone::irreducible_components;
use monocone::pareto::{run_report, solve_with, QueueDiscipline, SolveOptions};
use monocone::scalarization::{ExplicitSetOracle, Knapsack01Oracle, ProblemOracle};
use monocone::verify::{compare_answers, cross_check, OutcomeCloud, Verdict};
use monocone::{Error, ExtendedScalar, Rational};
use serde_json::Value;
use thiserror::Error;

use document::{apex_value, outcome_value, ProblemDocument, ResultDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Solver(#[from] Error),
}

impl CliError {
    /// 2 for input errors, 3 when the iteration cap is hit.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(Error::IterationCap { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Clone, Default)]
pub struct SolveFlags {
    pub format: Format,
    pub max_iter: Option<u64>,
    pub queue: QueueDiscipline,
    pub no_translate: bool,
}

pub fn read_problem(path: &Path) -> Result<ProblemDocument, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    ProblemDocument::parse(&text)
}

/// A materialized oracle for explicit and knapsack problems, plus the
/// translation that was applied to the outcomes.
pub fn build_oracle(
    doc: &ProblemDocument,
    apply_translation: bool,
) -> Result<(ExplicitSetOracle, Option<Vec<Rational>>), CliError> {
    match doc {
        ProblemDocument::Explicit { d, points } => Ok((ExplicitSetOracle::new(*d, points.clone())?, None)),
        ProblemDocument::Knapsack01 {
            objectives,
            weights,
            capacity,
            translate,
            ..
        } => {
            let translate = translate.clone().filter(|_| apply_translation);
            let oracle = Knapsack01Oracle::new(objectives, weights, capacity, translate.as_deref())?;
            Ok((oracle.outcome_set().clone(), translate))
        }
        ProblemDocument::Ideal { .. } => Err(CliError::Input(
            "ideal problems are handled by the `dual` subcommand".into(),
        )),
    }
}

pub struct SolveOutput {
    pub document: ResultDocument,
    pub report: String,
}

pub fn cmd_solve(path: &Path, flags: &SolveFlags) -> Result<SolveOutput, CliError> {
    let doc = read_problem(path)?;
    let (oracle, translate) = build_oracle(&doc, !flags.no_translate)?;
    let options = SolveOptions {
        queue: flags.queue,
        max_iter: flags.max_iter,
    };
    let sol = solve_with(&oracle, &options, &mut ())?;
    let report = run_report(&sol.stats).to_string();
    let document = ResultDocument {
        n: sol.stats.n as u64,
        m: sol.stats.m as u64,
        scalarizations: sol.stats.scalarization_calls,
        upper_bound_u: sol.stats.upper_bound,
        nondominated: sol.nondominated,
        local_upper_bounds: sol.local_upper_bounds,
        translate,
    };
    Ok(SolveOutput { document, report })
}

pub fn render(doc: &ResultDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Tsv => doc.to_tsv(),
    }
}

/// Checks a problem against the brute-force references, either by solving it
/// or, with `expected`, by checking a stored result document.
pub fn cmd_verify(path: &Path, expected: Option<&Path>) -> Result<Verdict, CliError> {
    let doc = read_problem(path)?;
    let (oracle, _) = build_oracle(&doc, true)?;
    let cloud = OutcomeCloud::new(oracle.dim(), oracle.points().to_vec())?;
    match expected {
        None => Ok(cross_check(&cloud)?),
        Some(fixture) => {
            let text = fs::read_to_string(fixture)
                .map_err(|e| CliError::Input(format!("{}: {e}", fixture.display())))?;
            let claimed = ResultDocument::parse(&text)?;
            Ok(compare_answers(
                &cloud,
                &claimed.nondominated,
                &claimed.local_upper_bounds,
                claimed.scalarizations,
            )?)
        }
    }
}

pub fn verdict_json(v: &Verdict) -> String {
    let rows = |items: &[Vec<ExtendedScalar>]| Value::Array(items.iter().map(|a| apex_value(a)).collect());
    let points = |items: &[Vec<Rational>]| Value::Array(items.iter().map(|z| outcome_value(z)).collect());
    let mut obj = serde_json::Map::new();
    obj.insert("pass".into(), Value::from(v.pass));
    obj.insert("scalarizations".into(), Value::from(v.scalarizations));
    obj.insert("expected_scalarizations".into(), Value::from(v.expected_scalarizations));
    obj.insert("nondominated_missing".into(), points(&v.nondominated_missing));
    obj.insert("nondominated_extra".into(), points(&v.nondominated_extra));
    obj.insert("apices_missing".into(), rows(&v.apices_missing));
    obj.insert("apices_extra".into(), rows(&v.apices_extra));
    serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values always serialize") + "\n"
}

pub fn cmd_dual(path: &Path) -> Result<BTreeSet<Vec<ExtendedScalar>>, CliError> {
    match read_problem(path)? {
        ProblemDocument::Ideal { generators, .. } => {
            if generators.is_empty() {
                return Err(CliError::Input("zero ideal has no irreducible decomposition here".into()));
            }
            Ok(irreducible_components(&generators)?.into_iter().collect())
        }
        _ => Err(CliError::Input("`dual` expects a problem of kind \"ideal\"".into())),
    }
}

pub fn components_json(components: &BTreeSet<Vec<ExtendedScalar>>) -> String {
    if components.is_empty() {
        return "[]\n".into();
    }
    let lines: Vec<String> = components
        .iter()
        .map(|a| format!("  {}", serde_json::to_string(&apex_value(a)).expect("JSON values always serialize")))
        .collect();
    format!("[\n{}\n]\n", lines.join(",\n"))
}

pub fn components_tsv(components: &BTreeSet<Vec<ExtendedScalar>>) -> String {
    components
        .iter()
        .map(|a| a.iter().map(ToString::to_string).collect::<Vec<_>>().join("\t") + "\n")
        .collect()
}

/// `U(n + d, d)`.
pub fn cmd_bound(n: u64, d: u64) -> String {
    upper_bound(n + d, d).to_string()
}
