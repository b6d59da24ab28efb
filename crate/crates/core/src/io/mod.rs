//! File formats: scores and curve tables, JSON reports, SVG figures.

mod curves;
mod report;
mod scores;
mod svg;

use std::fs;
use std::path::Path;

pub use curves::{read_curves_csv, write_curves_csv, write_curves_to};
pub use report::{write_report_json, ReportDocument, REPORT_SCHEMA_VERSION};
pub use scores::{read_scores, read_scores_csv, write_scores_csv, write_scores_to};
pub use svg::{
    render_sweep_svg, render_transform_svg, sweep_svg, transform_svg, NamedCurves, PlotFrame,
    TRANSFORM_FRAME, TRANSFORM_SAMPLES,
};

use crate::error::{Error, Result};
use crate::metrics::MetricValue;

/// Cell text for a positive-infinite value.
pub const INF_CELL: &str = "inf";
/// Cell text for an undefined value.
pub const NA_CELL: &str = "NA";

/// Render `v` with 17 significant digits, enough to round-trip any double.
///
/// Positional notation is used for decimal exponents in `[-20, 20]`,
/// scientific notation outside that range.
pub fn format_sig17(v: f64) -> String {
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("`e` format always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if !(-20..=20).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else {
        let int_len = exp as usize + 1;
        if int_len >= digits.len() {
            format!("{}{}", digits, "0".repeat(int_len - digits.len()))
        } else {
            format!("{}.{}", &digits[..int_len], &digits[int_len..])
        }
    };
    format!("{sign}{body}")
}

/// Table cell for a metric value: 17-digit decimal, `inf`, or `NA`.
pub fn format_value_cell(v: &MetricValue) -> String {
    match v {
        MetricValue::Defined(x) => format_sig17(*x),
        MetricValue::PositiveInfinite => INF_CELL.to_string(),
        MetricValue::Undefined(_) => NA_CELL.to_string(),
    }
}

/// Inverse of [`format_value_cell`]. Undefined cells come back with the
/// reason `"NA"` since tables do not carry reasons.
pub fn parse_value_cell(cell: &str) -> Option<MetricValue> {
    match cell {
        INF_CELL => Some(MetricValue::PositiveInfinite),
        NA_CELL => Some(MetricValue::undefined(NA_CELL)),
        other => other
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .map(MetricValue::Defined),
    }
}

pub(crate) fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}
