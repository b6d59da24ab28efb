//! JSON metric report.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "tool": "fstar",
//!   "version": "0.1.0",
//!   "provenance": { "input": "scores.csv", "threshold": 0.5, "grid": null, "beta": null },
//!   "matrix": { "tp": 8, "fp": 3, "fn": 1, "tn": 5, "n": 17 },
//!   "metrics": { "f": 0.8, "f_prime": 2.0, "precision": "NA" },
//!   "na_reasons": { "precision": "empty denominator: precision" }
//! }
//! ```
//!
//! Keys are always emitted in the order above; `metrics` keeps the order in
//! which the metrics were requested. A metric value is a JSON number, the
//! string `"inf"`, or the string `"NA"`; every `"NA"` has an entry in
//! `na_reasons`.

use std::path::Path;

use serde_json::{json, Map, Value};

use super::{INF_CELL, NA_CELL};
use crate::confusion::ConfusionMatrix;
use crate::error::{Error, Result};
use crate::metrics::MetricValue;

pub const REPORT_SCHEMA_VERSION: u64 = 1;

const TOOL: &str = "fstar";

#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub version: String,
    pub input: Option<String>,
    pub threshold: Option<f64>,
    pub grid: Option<String>,
    pub beta: Option<f64>,
    pub matrix: ConfusionMatrix,
    pub metrics: Vec<(String, MetricValue)>,
}

impl ReportDocument {
    pub fn new(matrix: ConfusionMatrix) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            input: None,
            threshold: None,
            grid: None,
            beta: None,
            matrix,
            metrics: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, value: MetricValue) {
        self.metrics.push((name.into(), value));
    }

    pub fn get(&self, name: &str) -> Option<&MetricValue> {
        self.metrics.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn to_json_value(&self) -> Value {
        let mut metrics = Map::new();
        let mut reasons = Map::new();
        for (name, value) in &self.metrics {
            let cell = match value {
                MetricValue::Defined(x) => json!(x),
                MetricValue::PositiveInfinite => json!(INF_CELL),
                MetricValue::Undefined(reason) => {
                    reasons.insert(name.clone(), json!(reason));
                    json!(NA_CELL)
                }
            };
            metrics.insert(name.clone(), cell);
        }
        let m = &self.matrix;
        json!({
            "schema": REPORT_SCHEMA_VERSION,
            "tool": TOOL,
            "version": self.version,
            "provenance": {
                "input": self.input,
                "threshold": self.threshold,
                "grid": self.grid,
                "beta": self.beta,
            },
            "matrix": {
                "tp": m.tp(),
                "fp": m.fp(),
                "fn": m.fn_(),
                "tn": m.tn(),
                "n": m.n(),
            },
            "metrics": metrics,
            "na_reasons": reasons,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value())
            .expect("report values are always serializable");
        s.push('\n');
        s
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::validation("report", what.to_string());
        if v["schema"].as_u64() != Some(REPORT_SCHEMA_VERSION) {
            return Err(bad("unsupported schema version"));
        }
        let count = |k: &str| {
            v["matrix"][k]
                .as_u64()
                .ok_or_else(|| bad(&format!("matrix.{k} is not a count")))
        };
        let matrix =
            ConfusionMatrix::from_counts(count("tp")?, count("fp")?, count("fn")?, count("tn")?)?;
        if count("n")? != matrix.n() {
            return Err(bad("matrix.n does not equal the sum of the counts"));
        }
        let prov = &v["provenance"];
        let opt_f64 = |k: &str| match &prov[k] {
            Value::Null => Ok(None),
            x => x
                .as_f64()
                .map(Some)
                .ok_or_else(|| bad(&format!("provenance.{k} is not a number"))),
        };
        let opt_str = |k: &str| match &prov[k] {
            Value::Null => Ok(None),
            x => x
                .as_str()
                .map(|s| Some(s.to_string()))
                .ok_or_else(|| bad(&format!("provenance.{k} is not a string"))),
        };
        let entries = v["metrics"]
            .as_object()
            .ok_or_else(|| bad("metrics is not an object"))?;
        let reasons = v["na_reasons"]
            .as_object()
            .ok_or_else(|| bad("na_reasons is not an object"))?;
        let mut metrics = Vec::with_capacity(entries.len());
        for (name, cell) in entries {
            let value = match cell {
                Value::Number(n) => {
                    MetricValue::Defined(n.as_f64().ok_or_else(|| bad("metric is not a double"))?)
                }
                Value::String(s) if s == INF_CELL => MetricValue::PositiveInfinite,
                Value::String(s) if s == NA_CELL => {
                    let reason = reasons
                        .get(name)
                        .and_then(Value::as_str)
                        .ok_or_else(|| bad(&format!("no reason recorded for {name}")))?;
                    MetricValue::undefined(reason.to_string())
                }
                _ => return Err(bad(&format!("metric {name} has an invalid value"))),
            };
            metrics.push((name.clone(), value));
        }
        Ok(Self {
            version: v["version"].as_str().unwrap_or_default().to_string(),
            input: opt_str("input")?,
            threshold: opt_f64("threshold")?,
            grid: opt_str("grid")?,
            beta: opt_f64("beta")?,
            matrix,
            metrics,
        })
    }

    pub fn write_report_json(&self, path: impl AsRef<Path>) -> Result<()> {
        super::write_file(path.as_ref(), self.to_json_string().as_bytes())
    }
}

pub fn write_report_json(doc: &ReportDocument, path: impl AsRef<Path>) -> Result<()> {
    doc.write_report_json(path)
}
