//! Command-line front end: request/report types, dispatch, and deterministic
//! rendering. All structured output carries `"schema": 1`.

use serde_json::{json, Value};

use crate::braidcompile::{eval_class, parse_braid};
use crate::error::{Error, Result};
use crate::laurent::PolyElement;
use crate::macdonald::mac_poly;
use crate::pairing::pair;
use crate::parse::{parse_composition, parse_poly};
use crate::qreduce::{oracle_reduce, Reducer};
use crate::verify::run_suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subcommand {
    NormalForm,
    Reduce,
    Pair,
    Macdonald,
    Verify,
}

/// A validated invocation. `kappa` is required everywhere; `bound` enables
/// the oracle cross-check in `reduce`; `degree` and `suite` steer `verify`.
#[derive(Debug, Clone)]
pub struct CliRequest {
    pub subcommand: Subcommand,
    pub kappa: usize,
    pub expressions: Vec<String>,
    pub json: bool,
    pub bound: Option<i64>,
    pub degree: i64,
    pub suite: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliStatus {
    Ok,
    Fail,
    Error,
}

#[derive(Debug, Clone)]
pub struct CliReport {
    pub status: CliStatus,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl CliReport {
    fn ok(payload: Value) -> Self {
        Self {
            status: CliStatus::Ok,
            payload,
            diagnostics: Vec::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Self {
            status: CliStatus::Error,
            payload: Value::Null,
            diagnostics: vec![e.to_string()],
        }
    }
}

pub fn exit_code(report: &CliReport) -> i32 {
    match report.status {
        CliStatus::Ok => 0,
        CliStatus::Fail => 1,
        CliStatus::Error => 2,
    }
}

fn poly_terms_json(p: &PolyElement) -> Value {
    let mut terms = Vec::new();
    for (e, q) in p.iter().collect::<Vec<_>>().into_iter().rev() {
        terms.push(json!({
            "exponents": e.entries(),
            "coeff": q.to_string(),
        }));
    }
    Value::Array(terms)
}

fn run_normal_form(req: &CliRequest) -> Result<CliReport> {
    if req.expressions.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "normal-form needs at least one braid word".into(),
        });
    }
    let mut results = Vec::new();
    for text in &req.expressions {
        let word = parse_braid(text, req.kappa)?;
        let nf = eval_class(&word)?;
        let mut degrees = serde_json::Map::new();
        for (d, part) in &nf.degree_components {
            degrees.insert(d.to_string(), Value::String(part.to_string()));
        }
        results.push(json!({
            "input": text,
            "normal_form": nf.element.to_string(),
            "terms": poly_terms_json(&nf.element),
            "degree_components": Value::Object(degrees),
        }));
    }
    Ok(CliReport::ok(json!({
        "schema": 1,
        "kappa": req.kappa,
        "results": results,
    })))
}

fn run_reduce(req: &CliRequest) -> Result<CliReport> {
    if req.expressions.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "reduce needs at least one expression".into(),
        });
    }
    let reducer = Reducer::new(req.kappa);
    let mut results = Vec::new();
    let mut mismatches = Vec::new();
    for text in &req.expressions {
        let f = parse_poly(text, req.kappa)?;
        let value = reducer.reduce_class(&f)?;
        let mut monomials = Vec::new();
        for (e, _) in f.iter().collect::<Vec<_>>().into_iter().rev() {
            let r = reducer.reduce_monomial(e)?;
            let trace: Vec<String> = r.trace.iter().map(|t| t.to_string()).collect();
            monomials.push(json!({
                "exponents": e.entries(),
                "lambda": r.lambda.to_string(),
                "trace": trace,
            }));
        }
        let mut entry = json!({
            "input": text,
            "value": value.to_string(),
            "monomials": monomials,
        });
        if let Some(bound) = req.bound {
            let oracle = oracle_reduce(&f, bound)?;
            let agrees = oracle == value;
            if !agrees {
                mismatches.push(format!("oracle disagrees on '{text}': {oracle} vs {value}"));
            }
            entry["oracle"] = json!({
                "bound": bound,
                "value": oracle.to_string(),
                "agrees": agrees,
            });
        }
        results.push(entry);
    }
    let mut report = CliReport::ok(json!({
        "schema": 1,
        "kappa": req.kappa,
        "results": results,
    }));
    if !mismatches.is_empty() {
        report.status = CliStatus::Fail;
        report.diagnostics = mismatches;
    }
    Ok(report)
}

fn run_pair(req: &CliRequest) -> Result<CliReport> {
    if req.expressions.len() != 2 {
        return Err(Error::Parse {
            position: 0,
            message: format!(
                "pair needs exactly two expressions, got {}",
                req.expressions.len()
            ),
        });
    }
    let f = parse_poly(&req.expressions[0], req.kappa)?;
    let g = parse_poly(&req.expressions[1], req.kappa)?;
    let reducer = Reducer::new(req.kappa);
    let v = pair(&reducer, &f, &g)?;
    Ok(CliReport::ok(json!({
        "schema": 1,
        "kappa": req.kappa,
        "lhs": req.expressions[0],
        "rhs": req.expressions[1],
        "value": v.value.to_string(),
    })))
}

fn run_macdonald(req: &CliRequest) -> Result<CliReport> {
    if req.expressions.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "macdonald needs at least one composition".into(),
        });
    }
    let mut results = Vec::new();
    for text in &req.expressions {
        let comp = parse_composition(text, req.kappa)?;
        let data = mac_poly(&comp)?;
        let eigen: Vec<String> = data.eigenvalues.iter().map(|y| y.to_string()).collect();
        results.push(json!({
            "composition": comp.entries(),
            "polynomial": data.polynomial.to_string(),
            "terms": poly_terms_json(&data.polynomial),
            "eigenvalues": eigen,
        }));
    }
    Ok(CliReport::ok(json!({
        "schema": 1,
        "kappa": req.kappa,
        "results": results,
    })))
}

fn run_verify(req: &CliRequest) -> Result<CliReport> {
    let outcomes = run_suite(&req.suite, req.kappa, req.degree)?;
    let mut results = Vec::new();
    let mut failed = 0usize;
    for o in &outcomes {
        if !o.passed {
            failed += 1;
        }
        results.push(json!({
            "name": o.name,
            "passed": o.passed,
            "checks": o.checks,
            "failures": o.failures,
        }));
    }
    let status = if failed == 0 {
        CliStatus::Ok
    } else {
        CliStatus::Fail
    };
    Ok(CliReport {
        status,
        payload: json!({
            "schema": 1,
            "kappa": req.kappa,
            "suite": req.suite,
            "degree": req.degree,
            "passed": outcomes.len() - failed,
            "failed": failed,
            "results": results,
        }),
        diagnostics: Vec::new(),
    })
}

/// Dispatch a request. Errors become `status = Error` reports with the
/// message in `diagnostics`.
pub fn run(req: &CliRequest) -> CliReport {
    if req.kappa == 0 {
        return CliReport::error(&Error::Parse {
            position: 0,
            message: "kappa must be at least 1".into(),
        });
    }
    let result = match req.subcommand {
        Subcommand::NormalForm => run_normal_form(req),
        Subcommand::Reduce => run_reduce(req),
        Subcommand::Pair => run_pair(req),
        Subcommand::Macdonald => run_macdonald(req),
        Subcommand::Verify => run_verify(req),
    };
    match result {
        Ok(report) => report,
        Err(e) => CliReport::error(&e),
    }
}

/// The exact stdout text for a report (empty for hard errors, whose
/// diagnostics go to stderr).
pub fn render(req: &CliRequest, report: &CliReport) -> String {
    if report.status == CliStatus::Error {
        return String::new();
    }
    if req.json {
        let mut s = serde_json::to_string_pretty(&report.payload).expect("payload serializes");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    match req.subcommand {
        Subcommand::NormalForm => {
            for r in report.payload["results"].as_array().unwrap() {
                out.push_str(r["normal_form"].as_str().unwrap());
                out.push('\n');
            }
        }
        Subcommand::Reduce => {
            for r in report.payload["results"].as_array().unwrap() {
                out.push_str(r["value"].as_str().unwrap());
                out.push('\n');
                if let Some(oracle) = r.get("oracle") {
                    let agrees = oracle["agrees"].as_bool().unwrap();
                    out.push_str(if agrees {
                        "oracle: agrees\n"
                    } else {
                        "oracle: DISAGREES\n"
                    });
                }
            }
        }
        Subcommand::Pair => {
            out.push_str(report.payload["value"].as_str().unwrap());
            out.push('\n');
        }
        Subcommand::Macdonald => {
            for r in report.payload["results"].as_array().unwrap() {
                let comp: Vec<String> = r["composition"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.to_string())
                    .collect();
                out.push_str(&format!(
                    "E({}) = {}\n",
                    comp.join(","),
                    r["polynomial"].as_str().unwrap()
                ));
                let eigen: Vec<String> = r["eigenvalues"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_str().unwrap().to_string())
                    .collect();
                out.push_str(&format!("y-eigenvalues: [{}]\n", eigen.join(", ")));
            }
        }
        Subcommand::Verify => {
            for r in report.payload["results"].as_array().unwrap() {
                let name = r["name"].as_str().unwrap();
                let checks = r["checks"].as_u64().unwrap();
                if r["passed"].as_bool().unwrap() {
                    out.push_str(&format!("ok   {name} ({checks} checks)\n"));
                } else {
                    let first = r["failures"]
                        .as_array()
                        .unwrap()
                        .first()
                        .and_then(|v| v.as_str())
                        .unwrap_or("");
                    out.push_str(&format!("FAIL {name} ({checks} checks): {first}\n"));
                }
            }
            out.push_str(&format!(
                "summary: {} passed, {} failed\n",
                report.payload["passed"], report.payload["failed"]
            ));
        }
    }
    out
}
