use std::collections::HashMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use fstar_core::io::{self, ReportDocument};
use fstar_core::metrics::{transform_f_to_fstar, transform_fstar_to_f};
use fstar_core::ranking::auc;
use fstar_core::sweep::{best_threshold, find_crossings, sweep as run_sweep};
use fstar_core::synth::generate_scores;
use fstar_core::{
    BetaShape, BetaWeight, ConfusionMatrix, Error, GeneratorSpec, Metric, MetricCurve,
    ThresholdGrid,
};
use serde_json::json;

use crate::output;
use crate::{EvalArgs, FigureArgs, MatrixArgs, ReportFlags, SweepArgs, SynthArgs, TransformArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Runtime(e.to_string())
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn runtime(e: Error) -> CliError {
    CliError::Runtime(e.to_string())
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Runtime(format!("{}: {e}", path.display()))
}

/// Metrics requested for a panel: the point metrics, whether `auc` was
/// asked for, and the β weight.
struct PanelRequest {
    metrics: Vec<Metric>,
    with_auc: bool,
    beta: Option<BetaWeight>,
}

impl PanelRequest {
    fn weight(&self) -> BetaWeight {
        self.beta.unwrap_or_default()
    }
}

fn parse_beta(beta: Option<f64>) -> CliResult<Option<BetaWeight>> {
    beta.map(BetaWeight::new).transpose().map_err(usage)
}

/// `--beta` appends the weighted variants that were not asked for explicitly.
fn with_weighted(mut metrics: Vec<Metric>, beta: Option<BetaWeight>) -> Vec<Metric> {
    if beta.is_some() {
        for m in Metric::WEIGHTED {
            if !metrics.contains(&m) {
                metrics.push(m);
            }
        }
    }
    metrics
}

fn parse_panel(list: &str, beta: Option<f64>, allow_auc: bool) -> CliResult<PanelRequest> {
    let beta = parse_beta(beta)?;
    let mut with_auc = false;
    let mut metrics = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if allow_auc && name == "auc" {
            with_auc = true;
            continue;
        }
        let metric: Metric = name.parse().map_err(|e: Error| match e {
            Error::UnknownMetric { name, valid } if allow_auc => CliError::Usage(format!(
                "unknown metric `{name}`; valid metrics: {valid}, auc"
            )),
            other => usage(other),
        })?;
        if !metrics.contains(&metric) {
            metrics.push(metric);
        }
    }
    Ok(PanelRequest {
        metrics: with_weighted(metrics, beta),
        with_auc,
        beta,
    })
}

fn build_report(m: ConfusionMatrix, req: &PanelRequest) -> ReportDocument {
    let mut doc = ReportDocument::new(m);
    doc.beta = req.beta.map(BetaWeight::get);
    for metric in &req.metrics {
        doc.push(metric.name(), metric.evaluate(&m, req.weight()));
    }
    doc
}

fn emit_report(doc: &ReportDocument, flags: &ReportFlags) -> CliResult {
    if let Some(path) = &flags.out {
        doc.write_report_json(path).map_err(runtime)?;
    }
    let text = if flags.json {
        doc.to_json_string()
    } else {
        output::report_table(doc)
    };
    print_stdout(&text)
}

fn print_stdout(text: &str) -> CliResult {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::Runtime(format!("stdout: {e}")))
}

pub fn eval(a: &EvalArgs) -> CliResult {
    let req = parse_panel(&a.metrics, a.report.beta, true)?;
    if !a.threshold.is_finite() {
        return Err(CliError::Usage(format!(
            "invalid threshold: {} is not finite",
            a.threshold
        )));
    }
    let records = io::read_scores_csv(&a.scores).map_err(runtime)?;
    let m = ConfusionMatrix::from_scored(&records, a.threshold).map_err(runtime)?;
    let mut doc = build_report(m, &req);
    doc.input = Some(a.scores.display().to_string());
    doc.threshold = Some(a.threshold);
    if req.with_auc {
        doc.push("auc", auc(&records));
    }
    emit_report(&doc, &a.report)
}

pub fn matrix(a: &MatrixArgs) -> CliResult {
    let m = ConfusionMatrix::from_signed_counts(a.tp, a.fp, a.fn_, a.tn).map_err(usage)?;
    let req = match &a.metrics {
        Some(list) => parse_panel(list, a.report.beta, false)?,
        None => {
            let beta = parse_beta(a.report.beta)?;
            PanelRequest {
                metrics: with_weighted(Metric::PANEL.to_vec(), beta),
                with_auc: false,
                beta,
            }
        }
    };
    emit_report(&build_report(m, &req), &a.report)
}

/// Classifier names from file stems, falling back to the full path when
/// two stems collide.
fn classifier_names(inputs: &[PathBuf]) -> Vec<String> {
    let stems: Vec<String> = inputs
        .iter()
        .map(|p| {
            p.file_stem().map_or_else(
                || p.display().to_string(),
                |s| s.to_string_lossy().into_owned(),
            )
        })
        .collect();
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for s in &stems {
        *seen.entry(s).or_default() += 1;
    }
    stems
        .iter()
        .zip(inputs)
        .map(|(s, p)| {
            if seen[s.as_str()] > 1 {
                p.display().to_string()
            } else {
                s.clone()
            }
        })
        .collect()
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    path.with_file_name(format!("{stem}.{suffix}"))
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

pub fn sweep(a: &SweepArgs) -> CliResult {
    let grid: ThresholdGrid = a.grid.parse().map_err(usage)?;
    let beta = parse_beta(a.beta)?;
    let metrics = with_weighted(Metric::parse_list(&a.metrics).map_err(usage)?, beta);
    let weight = beta.unwrap_or_default();
    let names = classifier_names(&a.inputs);

    let mut sets: Vec<(String, Vec<MetricCurve>)> = Vec::with_capacity(a.inputs.len());
    for (path, name) in a.inputs.iter().zip(&names) {
        let records = io::read_scores_csv(path).map_err(runtime)?;
        let curves = run_sweep(&records, &grid, &metrics, weight)
            .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?;
        sets.push((name.clone(), curves));
    }

    let mut summary = String::new();
    for (name, curves) in &sets {
        if curves.is_empty() {
            continue;
        }
        let target = if sets.len() == 1 {
            a.csv.clone()
        } else {
            with_suffix(&a.csv, &format!("{}.csv", sanitize(name)))
        };
        io::write_curves_csv(curves, &target).map_err(runtime)?;
        summary.push_str(&format!(
            "{name}: {} points -> {}\n",
            grid.points().len(),
            target.display()
        ));
        for c in curves {
            if let Ok((t, v)) = best_threshold(c) {
                summary.push_str(&format!("  best {} at t={t}: {v}\n", c.metric));
            }
        }
    }

    if let Some(svg) = &a.svg {
        io::render_sweep_svg(&sets, svg).map_err(runtime)?;
    }

    if sets.len() >= 2 {
        let mut pairs = Vec::new();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                for (ca, cb) in sets[i].1.iter().zip(&sets[j].1) {
                    let crossings = find_crossings(ca, cb).map_err(runtime)?;
                    let brackets: Vec<[f64; 2]> = crossings
                        .brackets
                        .iter()
                        .map(|&(lo, hi)| [lo, hi])
                        .collect();
                    summary.push_str(&format!(
                        "{} vs {} [{}]: {} crossing(s){}\n",
                        sets[i].0,
                        sets[j].0,
                        ca.metric,
                        brackets.len(),
                        brackets
                            .iter()
                            .map(|[lo, hi]| format!(" ({lo}, {hi})"))
                            .collect::<String>()
                    ));
                    pairs.push(json!({
                        "a": sets[i].0,
                        "b": sets[j].0,
                        "metric": ca.metric.name(),
                        "brackets": brackets,
                    }));
                }
            }
        }
        let report = json!({ "grid": grid.to_string(), "pairs": pairs });
        let path = a
            .crossings
            .clone()
            .unwrap_or_else(|| with_suffix(&a.csv, "crossings.json"));
        let mut text = serde_json::to_string_pretty(&report).expect("crossing report serializes");
        text.push('\n');
        std::fs::write(&path, text).map_err(|e| io_err(&path, e))?;
        summary.push_str(&format!("crossings -> {}\n", path.display()));
    }
    print_stdout(&summary)
}

pub fn transform(a: &TransformArgs) -> CliResult {
    let value = match (a.f, a.fstar) {
        (Some(f), None) => transform_f_to_fstar(f),
        (None, Some(s)) => transform_fstar_to_f(s),
        _ => unreachable!("clap enforces exactly one of --f / --fstar"),
    }
    .map_err(usage)?;
    print_stdout(&format!("{value}\n"))
}

pub fn synth(a: &SynthArgs) -> CliResult {
    let spec = GeneratorSpec {
        n0: a.n0,
        n1: a.n1,
        class0: BetaShape::new(a.alpha0, a.beta0).map_err(usage)?,
        class1: BetaShape::new(a.alpha1, a.beta1).map_err(usage)?,
        seed: a.seed,
    };
    let records = generate_scores(&spec).map_err(runtime)?;
    match &a.out {
        Some(path) => io::write_scores_csv(&records, path).map_err(runtime),
        None => {
            let mut buf = Vec::new();
            io::write_scores_to(&mut buf, &records)
                .map_err(|e| CliError::Runtime(format!("stdout: {e}")))?;
            print_stdout(&String::from_utf8(buf).expect("scores are ASCII"))
        }
    }
}

pub fn figure(a: &FigureArgs) -> CliResult {
    io::render_transform_svg(&a.out).map_err(runtime)
}
