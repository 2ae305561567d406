//! Instance files and JSON encodings of verdicts, pieces and reports.

use serde_json::{json, Map, Value};

use crate::csw::{CswVerdict, SignPattern};
use crate::error::{Error, Result};
use crate::harness::{TheoremReport, Violation};
use crate::ratcore::{format_rational, parse_rational};
use crate::representatives::MatrixTuple;
use crate::solver::{EhlcpInstance, SolutionPiece, SolutionTuple};
use crate::verdict::{PropertyVerdict, Witness};
use crate::{RatMatrix, RatVector, Rational};

/// The on-disk instance format.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceDocument {
    pub n: usize,
    pub k: usize,
    pub c: Vec<RatMatrix>,
    pub d: Vec<RatVector>,
    pub q: RatVector,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn scalar(v: &Value, at: &str) -> Result<Rational> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        _ => Err(parse_err(format!("{at}: expected a number or a rational string"))),
    }
    .map_err(|e| parse_err(format!("{at}: {e}")))
}

fn array<'a>(v: &'a Value, at: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{at}: expected an array")))
}

fn vector(v: &Value, n: usize, at: &str) -> Result<RatVector> {
    let items = array(v, at)?;
    if items.len() != n {
        return Err(Error::Dimension(format!("{at}: expected {n} entries, got {}", items.len())));
    }
    items.iter().enumerate().map(|(i, x)| scalar(x, &format!("{at}[{i}]"))).collect()
}

fn matrix(v: &Value, n: usize, at: &str) -> Result<RatMatrix> {
    let rows = array(v, at)?;
    if rows.len() != n {
        return Err(Error::Dimension(format!("{at}: expected {n} rows, got {}", rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector(r, n, &format!("{at}[{i}]")).map(RatVector::into_entries))
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

fn count(doc: &Value, key: &str) -> Result<usize> {
    doc.get(key)
        .and_then(Value::as_u64)
        .filter(|&v| v >= 1)
        .map(|v| v as usize)
        .ok_or_else(|| parse_err(format!("`{key}` must be a positive integer")))
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vector_json(v: &RatVector) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn matrix_json(m: &RatMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(rational_json).collect())).collect())
}

pub fn tuple_json(t: &MatrixTuple) -> Value {
    Value::Array(t.mats().iter().map(matrix_json).collect())
}

impl InstanceDocument {
    pub fn from_json(doc: &Value) -> Result<Self> {
        if !doc.is_object() {
            return Err(parse_err("instance file must hold a JSON object"));
        }
        let n = count(doc, "n")?;
        let k = count(doc, "k")?;
        let cs = array(doc.get("C").ok_or_else(|| parse_err("missing `C`"))?, "C")?;
        if cs.len() != k + 1 {
            return Err(Error::Dimension(format!("C: expected {} matrices for k = {k}, got {}", k + 1, cs.len())));
        }
        let c = cs.iter().enumerate().map(|(i, m)| matrix(m, n, &format!("C[{i}]"))).collect::<Result<Vec<_>>>()?;
        let d = match doc.get("d") {
            None | Some(Value::Null) => Vec::new(),
            Some(v) => array(v, "d")?
                .iter()
                .enumerate()
                .map(|(j, x)| vector(x, n, &format!("d[{j}]")))
                .collect::<Result<Vec<_>>>()?,
        };
        if d.len() != k - 1 {
            return Err(Error::Dimension(format!("d: expected {} vectors for k = {k}, got {}", k - 1, d.len())));
        }
        let q = vector(doc.get("q").ok_or_else(|| parse_err("missing `q`"))?, n, "q")?;
        if !d.iter().all(|v| v.is_positive()) {
            return Err(Error::Invalid("d must be strictly positive".into()));
        }
        Ok(InstanceDocument { n, k, c, d, q })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
        Self::from_json(&v)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "C": Value::Array(self.c.iter().map(matrix_json).collect()),
            "d": Value::Array(self.d.iter().map(vector_json).collect()),
            "q": vector_json(&self.q),
        })
    }

    pub fn from_instance(inst: &EhlcpInstance) -> Self {
        InstanceDocument {
            n: inst.n(),
            k: inst.k(),
            c: inst.tuple().mats().to_vec(),
            d: inst.d().to_vec(),
            q: inst.q().clone(),
        }
    }

    pub fn to_instance(&self) -> Result<EhlcpInstance> {
        EhlcpInstance::new(MatrixTuple::new(self.c.clone())?, self.d.clone(), self.q.clone())
    }
}

fn pattern_json(p: &SignPattern) -> Value {
    json!(p.row_strings())
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Selector { selector, det } => {
            json!({"kind": "selector", "selector": selector.choice(), "det": rational_json(det)})
        }
        Witness::OppositeSigns { first, first_det, second, second_det } => json!({
            "kind": "opposite_signs",
            "first": first.choice(),
            "first_det": rational_json(first_det),
            "second": second.choice(),
            "second_det": rational_json(second_det),
        }),
        Witness::Entry { row, col, value } => {
            json!({"kind": "entry", "row": row, "col": col, "value": rational_json(value)})
        }
        Witness::InverseEntry { row, col, value } => {
            json!({"kind": "inverse_entry", "row": row, "col": col, "value": rational_json(value)})
        }
        Witness::Singular => json!({"kind": "singular"}),
        Witness::PrincipalMinor { index_set, value } => {
            json!({"kind": "principal_minor", "index_set": index_set, "value": rational_json(value)})
        }
        Witness::Vectors { pattern, xs } => json!({
            "kind": "vectors",
            "pattern": pattern_json(pattern),
            "xs": Value::Array(xs.iter().map(vector_json).collect()),
        }),
    }
}

/// `subject` names what the property was evaluated on, e.g. `tuple` or `C1`.
pub fn verdict_json(v: &PropertyVerdict, subject: &str, decided_by: Option<&str>) -> Value {
    let mut m = Map::new();
    m.insert("property".into(), json!(v.property_name));
    m.insert("subject".into(), json!(subject));
    m.insert("holds".into(), json!(v.holds));
    m.insert("certificate".into(), json!(v.certificate));
    m.insert("witness".into(), v.witness.as_ref().map_or(Value::Null, witness_json));
    if !v.all_violations.is_empty() {
        m.insert("all_violations".into(), Value::Array(v.all_violations.iter().map(witness_json).collect()));
    }
    if let Some(d) = decided_by {
        m.insert("decided_by".into(), json!(d));
    }
    Value::Object(m)
}

pub fn csw_verdict_json(v: &CswVerdict, name: &str, subject: &str) -> Value {
    verdict_json(&v.clone().into_property(name), subject, Some(v.decided_by.as_str()))
}

pub fn solution_json(x: &SolutionTuple) -> Value {
    Value::Array(x.xs.iter().map(vector_json).collect())
}

pub fn piece_json(p: &SolutionPiece) -> Value {
    json!({
        "pattern": p.pattern.row_strings(),
        "point": solution_json(&p.point),
        "piece_dimension": p.piece_dimension,
        "kernel_basis": Value::Array(p.kernel_basis.iter().map(solution_json).collect()),
        "branch_kernel_dimension": p.branch_kernel_dimension,
    })
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "case": v.case,
        "tuple_seed": v.tuple_seed,
        "instance_seed": v.instance_seed,
        "tuple": tuple_json(&v.tuple),
        "instance": v.instance.as_ref().map(|i| InstanceDocument::from_instance(i).to_json()),
        "detail": v.detail,
    })
}

pub fn theorem_report_json(r: &TheoremReport) -> Value {
    json!({
        "theorem_id": r.theorem_id,
        "trials": r.trials,
        "golden_cases": r.golden_cases,
        "exercised": r.exercised,
        "passed": r.passed,
        "violations": Value::Array(r.violations.iter().map(violation_json).collect()),
    })
}
