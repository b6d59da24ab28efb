//! Long-format curve table: `t,metric,value`, one row per grid point per
//! metric. Rows follow the curve order given, thresholds ascending within
//! each metric.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use super::{format_value_cell, parse_value_cell};
use crate::error::{Error, Result};
use crate::metrics::Metric;
use crate::sweep::{CurvePoint, MetricCurve};

pub fn write_curves_to<W: Write>(mut w: W, curves: &[MetricCurve]) -> Result<()> {
    let Some(first) = curves.first() else {
        return Err(Error::validation("curves", "nothing to write"));
    };
    let grid: Vec<u64> = first.thresholds().map(f64::to_bits).collect();
    if curves
        .iter()
        .any(|c| !c.thresholds().map(f64::to_bits).eq(grid.iter().copied()))
    {
        return Err(Error::validation("curves", "curves are on different grids"));
    }
    let io = |e| Error::io("<curves>", e);
    writeln!(w, "t,metric,value").map_err(io)?;
    for c in curves {
        for p in &c.points {
            writeln!(w, "{},{},{}", p.t, c.metric, format_value_cell(&p.value)).map_err(io)?;
        }
    }
    w.flush().map_err(io)
}

pub fn write_curves_csv(curves: &[MetricCurve], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut buf = Vec::new();
    write_curves_to(&mut buf, curves)?;
    super::write_file(path, &buf)
}

/// Read a table written by [`write_curves_csv`]. Curves come back in order
/// of first appearance.
pub fn read_curves_csv(path: impl AsRef<Path>) -> Result<Vec<MetricCurve>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let parse_err = |line: u64, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut rdr = csv::Reader::from_reader(file);
    let headers = rdr.headers().map_err(|e| parse_err(1, e.to_string()))?;
    if headers.iter().collect::<Vec<_>>() != ["t", "metric", "value"] {
        return Err(parse_err(1, "expected header `t,metric,value`".to_string()));
    }
    let mut curves: Vec<MetricCurve> = Vec::new();
    for row in rdr.records() {
        let row =
            row.map_err(|e| parse_err(e.position().map_or(0, |p| p.line()), e.to_string()))?;
        let line = row.position().map_or(0, |p| p.line());
        let t: f64 = row[0]
            .parse()
            .map_err(|_| parse_err(line, format!("bad threshold `{}`", &row[0])))?;
        let metric: Metric = row[1]
            .parse()
            .map_err(|e: Error| parse_err(line, e.to_string()))?;
        let value = parse_value_cell(&row[2])
            .ok_or_else(|| parse_err(line, format!("bad value `{}`", &row[2])))?;
        let point = CurvePoint { t, value };
        match curves.iter_mut().find(|c| c.metric == metric) {
            Some(c) => c.points.push(point),
            None => curves.push(MetricCurve {
                metric,
                points: vec![point],
            }),
        }
    }
    Ok(curves)
}
