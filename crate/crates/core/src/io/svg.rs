//! Standalone SVG figures. Output is a pure function of the input, with no
//! external references (fonts, stylesheets, images), so the bytes can be
//! diffed in tests.

use std::fmt::Write as _;
use std::path::Path;

use super::format_sig17;
use crate::error::{Error, Result};
use crate::metrics::{transform_f_to_fstar, Metric};
use crate::sweep::MetricCurve;

/// Samples on `[0, 1]` for the transform curve (step 1e-3).
pub const TRANSFORM_SAMPLES: usize = 1001;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Linear map between data coordinates and a pixel rectangle. Pixel `y`
/// grows downwards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotFrame {
    pub left: f64,
    pub top: f64,
    pub width: f64,
    pub height: f64,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
}

impl PlotFrame {
    pub fn to_px(&self, x: f64, y: f64) -> (f64, f64) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            self.left + (x - x0) / (x1 - x0) * self.width,
            self.top + self.height - (y - y0) / (y1 - y0) * self.height,
        )
    }

    pub fn from_px(&self, px: f64, py: f64) -> (f64, f64) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            x0 + (px - self.left) / self.width * (x1 - x0),
            y0 + (self.top + self.height - py) / self.height * (y1 - y0),
        )
    }

    fn bottom(&self) -> f64 {
        self.top + self.height
    }
}

/// Plot area of the F-to-F* figure.
pub const TRANSFORM_FRAME: PlotFrame = PlotFrame {
    left: 60.0,
    top: 20.0,
    width: 400.0,
    height: 400.0,
    x_range: (0.0, 1.0),
    y_range: (0.0, 1.0),
};

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Pixel coordinate text: four decimals, trailing zeros dropped.
fn px(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn open_svg(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#,
        w = px(width),
        h = px(height)
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
        px(width),
        px(height)
    );
}

/// Frame border, ticks every 0.2 (or five even steps) and tick labels.
fn draw_axes(out: &mut String, frame: &PlotFrame, x_label: &str, y_label: &str) {
    let _ = writeln!(
        out,
        r#"<rect class="frame" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        px(frame.left),
        px(frame.top),
        px(frame.width),
        px(frame.height)
    );
    for i in 0..=5 {
        let f = i as f64 / 5.0;
        let xv = frame.x_range.0 + f * (frame.x_range.1 - frame.x_range.0);
        let yv = frame.y_range.0 + f * (frame.y_range.1 - frame.y_range.0);
        let (x, _) = frame.to_px(xv, frame.y_range.0);
        let (_, y) = frame.to_px(frame.x_range.0, yv);
        let _ = writeln!(
            out,
            r#"<line x1="{x}" y1="{b}" x2="{x}" y2="{b5}" stroke="black"/><text x="{x}" y="{bt}" text-anchor="middle">{xv}</text>"#,
            x = px(x),
            b = px(frame.bottom()),
            b5 = px(frame.bottom() + 5.0),
            bt = px(frame.bottom() + 18.0),
            xv = tick_label(xv),
        );
        let _ = writeln!(
            out,
            r#"<line x1="{l5}" y1="{y}" x2="{l}" y2="{y}" stroke="black"/><text x="{lt}" y="{yt}" text-anchor="end">{yv}</text>"#,
            l = px(frame.left),
            l5 = px(frame.left - 5.0),
            lt = px(frame.left - 8.0),
            y = px(y),
            yt = px(y + 4.0),
            yv = tick_label(yv),
        );
    }
    let _ = writeln!(
        out,
        r#"<text class="x-label" x="{}" y="{}" text-anchor="middle">{}</text>"#,
        px(frame.left + frame.width / 2.0),
        px(frame.bottom() + 36.0),
        escape(x_label)
    );
    let cy = frame.top + frame.height / 2.0;
    let _ = writeln!(
        out,
        r#"<text class="y-label" x="{x}" y="{y}" text-anchor="middle" transform="rotate(-90 {x} {y})">{}</text>"#,
        escape(y_label),
        x = px(frame.left - 42.0),
        y = px(cy),
    );
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// The F-to-F* figure: `f / (2 - f)` sampled every 1e-3 on `[0, 1]`, with
/// the identity line for comparison.
pub fn transform_svg() -> String {
    let frame = TRANSFORM_FRAME;
    let mut out = String::new();
    open_svg(&mut out, 480.0, 480.0);
    draw_axes(&mut out, &frame, "F", "F*");
    let (ax, ay) = frame.to_px(0.0, 0.0);
    let (bx, by) = frame.to_px(1.0, 1.0);
    let _ = writeln!(
        out,
        r##"<line class="identity" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888888" stroke-dasharray="4 4"/>"##,
        px(ax),
        px(ay),
        px(bx),
        px(by)
    );
    let mut d = String::new();
    for i in 0..TRANSFORM_SAMPLES {
        let f = i as f64 / (TRANSFORM_SAMPLES - 1) as f64;
        let s = transform_f_to_fstar(f).expect("sample lies in [0, 1]");
        let (x, y) = frame.to_px(f, s);
        let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, px(x), px(y));
    }
    let _ = writeln!(
        out,
        r##"<path class="transform" d="{d}" fill="none" stroke="#1f77b4" stroke-width="2"/>"##
    );
    out.push_str("</svg>\n");
    out
}

pub fn render_transform_svg(path: impl AsRef<Path>) -> Result<()> {
    super::write_file(path.as_ref(), transform_svg().as_bytes())
}

/// A classifier name and its curves.
pub type NamedCurves = (String, Vec<MetricCurve>);

const PANEL_WIDTH: f64 = 400.0;
const PANEL_HEIGHT: f64 = 260.0;
const PANEL_GAP: f64 = 80.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_TOP: f64 = 40.0;
const LEGEND_WIDTH: f64 = 180.0;

/// One panel per metric (in order of first appearance), one series per
/// classifier. Undefined and infinite points split a series into several
/// polylines. Each polyline carries its exact `(t, value)` pairs in a
/// `data-points` attribute using the same 17-digit rendering as the
/// curves table.
pub fn sweep_svg(curve_sets: &[NamedCurves]) -> Result<String> {
    let all: Vec<&MetricCurve> = curve_sets.iter().flat_map(|(_, cs)| cs.iter()).collect();
    let Some(first) = all.first() else {
        return Err(Error::validation("curves", "nothing to plot"));
    };
    let grid: Vec<u64> = first.thresholds().map(f64::to_bits).collect();
    if all
        .iter()
        .any(|c| !c.thresholds().map(f64::to_bits).eq(grid.iter().copied()))
    {
        return Err(Error::validation("curves", "curves are on different grids"));
    }
    let mut metrics: Vec<Metric> = Vec::new();
    for c in &all {
        if !metrics.contains(&c.metric) {
            metrics.push(c.metric);
        }
    }
    let t_lo = first.points.first().map_or(0.0, |p| p.t).min(0.0);
    let t_hi = first.points.last().map_or(1.0, |p| p.t).max(1.0);

    let width = MARGIN_LEFT + PANEL_WIDTH + 30.0 + LEGEND_WIDTH;
    let height = MARGIN_TOP + metrics.len() as f64 * (PANEL_HEIGHT + PANEL_GAP);
    let mut out = String::new();
    open_svg(&mut out, width, height);

    for (k, metric) in metrics.iter().enumerate() {
        let curves: Vec<(usize, &str, &MetricCurve)> = curve_sets
            .iter()
            .enumerate()
            .filter_map(|(i, (name, cs))| {
                cs.iter()
                    .find(|c| c.metric == *metric)
                    .map(|c| (i, name.as_str(), c))
            })
            .collect();
        let finite = curves
            .iter()
            .flat_map(|(_, _, c)| c.points.iter().filter_map(|p| p.value.value()));
        let (lo, hi) = finite.fold((0.0f64, 1.0f64), |(lo, hi), v| (lo.min(v), hi.max(v)));
        let frame = PlotFrame {
            left: MARGIN_LEFT,
            top: MARGIN_TOP + k as f64 * (PANEL_HEIGHT + PANEL_GAP),
            width: PANEL_WIDTH,
            height: PANEL_HEIGHT,
            x_range: (t_lo, t_hi),
            y_range: (lo, hi),
        };
        let _ = writeln!(out, r#"<g class="panel" data-metric="{metric}">"#);
        let _ = writeln!(
            out,
            r#"<text class="title" x="{}" y="{}" text-anchor="middle" font-size="14">{metric}</text>"#,
            px(frame.left + frame.width / 2.0),
            px(frame.top - 10.0)
        );
        draw_axes(&mut out, &frame, "threshold t", metric.name());
        for (i, name, curve) in &curves {
            let color = PALETTE[i % PALETTE.len()];
            let _ = writeln!(out, r#"<g class="series" data-name="{}">"#, escape(name));
            for run in curve
                .points
                .split(|p| !p.value.is_defined())
                .filter(|run| !run.is_empty())
            {
                let mut coords = String::new();
                let mut data = String::new();
                for (j, p) in run.iter().enumerate() {
                    let v = p.value.value().expect("runs hold defined points only");
                    let (x, y) = frame.to_px(p.t, v);
                    let sep = if j == 0 { "" } else { " " };
                    let _ = write!(coords, "{sep}{},{}", px(x), px(y));
                    let _ = write!(data, "{sep}{},{}", p.t, format_sig17(v));
                }
                let _ = writeln!(
                    out,
                    r#"<polyline points="{coords}" data-points="{data}" fill="none" stroke="{color}" stroke-width="1.5"/>"#
                );
            }
            out.push_str("</g>\n");
        }
        out.push_str("</g>\n");
    }

    let lx = MARGIN_LEFT + PANEL_WIDTH + 30.0;
    out.push_str("<g class=\"legend\">\n");
    for (i, (name, _)) in curve_sets.iter().enumerate() {
        let y = MARGIN_TOP + 10.0 + i as f64 * 20.0;
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="{}" stroke-width="3"/><text x="{}" y="{}">{}</text>"#,
            px(lx),
            px(lx + 20.0),
            PALETTE[i % PALETTE.len()],
            px(lx + 26.0),
            px(y + 4.0),
            escape(name),
            y = px(y),
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

pub fn render_sweep_svg(curve_sets: &[NamedCurves], path: impl AsRef<Path>) -> Result<()> {
    let svg = sweep_svg(curve_sets)?;
    super::write_file(path.as_ref(), svg.as_bytes())
}
