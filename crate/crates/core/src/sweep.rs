//! Threshold sweeps and crossing detection between two classifiers' curves.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::confusion::{predicts_positive, ClassLabel, ConfusionMatrix, ScoredRecord};
use crate::error::{Error, Result};
use crate::metrics::{BetaWeight, Metric, MetricValue};

/// Largest number of points a grid may expand to.
pub const MAX_GRID_POINTS: usize = 10_000_000;

/// Inclusive, evenly spaced thresholds `start, start+step, ...` with `stop`
/// always included as the final point.
///
/// Interior points are snapped to 12 decimal places so that a grid such as
/// `0:1:0.01` contains exactly the doubles nearest 0.07, 0.29 and so on,
/// rather than accumulated products like `0.07000000000000001`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdGrid {
    start: f64,
    stop: f64,
    step: f64,
}

impl ThresholdGrid {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(Error::validation(
                "grid",
                "start, stop and step must be finite",
            ));
        }
        if start >= stop {
            return Err(Error::validation(
                "grid",
                format!("start {start} must be below stop {stop}"),
            ));
        }
        if step <= 0.0 {
            return Err(Error::validation(
                "grid",
                format!("step {step} must be positive"),
            ));
        }
        if (stop - start) / step > MAX_GRID_POINTS as f64 {
            return Err(Error::validation(
                "grid",
                format!("more than {MAX_GRID_POINTS} points"),
            ));
        }
        Ok(Self { start, stop, step })
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn stop(&self) -> f64 {
        self.stop
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn points(&self) -> Vec<f64> {
        let steps = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        let snap = self.step >= 1e-9 && self.start.abs().max(self.stop.abs()) < 1e3;
        let mut out: Vec<f64> = Vec::with_capacity(steps + 2);
        for i in 0..=steps {
            let raw = self.start + i as f64 * self.step;
            let t = if snap && i > 0 {
                (raw * 1e12).round() / 1e12
            } else {
                raw
            };
            if t >= self.stop {
                break;
            }
            if out.last().is_none_or(|&prev| t > prev) {
                out.push(t);
            }
        }
        out.push(self.stop);
        out
    }
}

impl Default for ThresholdGrid {
    fn default() -> Self {
        Self {
            start: 0.0,
            stop: 1.0,
            step: 0.01,
        }
    }
}

impl fmt::Display for ThresholdGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

/// Parses `start:stop:step`.
impl FromStr for ThresholdGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let [start, stop, step] = parts.as_slice() else {
            return Err(Error::validation(
                "grid",
                format!("`{s}` is not start:stop:step"),
            ));
        };
        let num = |name: &str, v: &str| {
            v.parse::<f64>()
                .map_err(|_| Error::validation("grid", format!("{name} `{v}` is not a number")))
        };
        Self::new(num("start", start)?, num("stop", stop)?, num("step", step)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub t: f64,
    pub value: MetricValue,
}

/// One metric evaluated at every point of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricCurve {
    pub metric: Metric,
    pub points: Vec<CurvePoint>,
}

impl MetricCurve {
    pub fn thresholds(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.t)
    }

    fn same_grid(&self, other: &MetricCurve) -> bool {
        self.points.len() == other.points.len()
            && self
                .thresholds()
                .zip(other.thresholds())
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

/// Class-wise sorted scores; answers "how many scores exceed `t`" by binary
/// search so a sweep costs O(n log n + g log n) instead of O(n g).
struct ThresholdTally {
    zeros: Vec<f64>,
    ones: Vec<f64>,
}

impl ThresholdTally {
    fn new(records: &[ScoredRecord]) -> Self {
        let (mut zeros, mut ones) = (Vec::new(), Vec::new());
        for r in records {
            match r.label() {
                ClassLabel::Zero => zeros.push(r.score()),
                ClassLabel::One => ones.push(r.score()),
            }
        }
        zeros.sort_by(f64::total_cmp);
        ones.sort_by(f64::total_cmp);
        Self { zeros, ones }
    }

    fn above(sorted: &[f64], t: f64) -> u64 {
        (sorted.len() - sorted.partition_point(|&s| !predicts_positive(s, t))) as u64
    }

    fn matrix(&self, t: f64) -> ConfusionMatrix {
        let tp = Self::above(&self.ones, t);
        let fp = Self::above(&self.zeros, t);
        let fn_ = self.ones.len() as u64 - tp;
        let tn = self.zeros.len() as u64 - fp;
        ConfusionMatrix::from_counts(tp, fp, fn_, tn).expect("record counts fit in u64")
    }
}

/// Evaluate each requested metric at every grid point.
///
/// The confusion matrix at `t` is identical to
/// [`ConfusionMatrix::from_scored`]`(records, t)`.
pub fn sweep(
    records: &[ScoredRecord],
    grid: &ThresholdGrid,
    metrics: &[Metric],
    beta: BetaWeight,
) -> Result<Vec<MetricCurve>> {
    if records.is_empty() {
        return Err(Error::validation(
            "records",
            "sweep needs at least one record",
        ));
    }
    let tally = ThresholdTally::new(records);
    let matrices: Vec<(f64, ConfusionMatrix)> = grid
        .points()
        .into_iter()
        .map(|t| (t, tally.matrix(t)))
        .collect();
    Ok(metrics
        .iter()
        .map(|&metric| MetricCurve {
            metric,
            points: matrices
                .iter()
                .map(|(t, m)| CurvePoint {
                    t: *t,
                    value: metric.evaluate(m, beta),
                })
                .collect(),
        })
        .collect())
}

/// Same as [`sweep`] but resolving metric names first.
pub fn sweep_named(
    records: &[ScoredRecord],
    grid: &ThresholdGrid,
    metric_names: &[&str],
    beta: BetaWeight,
) -> Result<Vec<MetricCurve>> {
    let metrics = metric_names
        .iter()
        .map(|n| n.parse())
        .collect::<Result<Vec<Metric>>>()?;
    sweep(records, grid, &metrics, beta)
}

/// Grid brackets `(t_i, t_{i+1})` across which the sign of `a - b` flips.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CrossingSet {
    pub brackets: Vec<(f64, f64)>,
}

impl CrossingSet {
    pub fn is_empty(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn len(&self) -> usize {
        self.brackets.len()
    }
}

/// Find every adjacent grid pair at which `a - b` turns from strictly
/// positive to strictly negative or back.
///
/// Points where the difference is exactly zero, or where either value is
/// not a finite real, carry no sign; the comparison is against the last
/// point that did. The reported bracket is the grid pair ending at the
/// point where the new sign is first observed.
pub fn find_crossings(a: &MetricCurve, b: &MetricCurve) -> Result<CrossingSet> {
    if a.metric != b.metric {
        return Err(Error::validation(
            "curves",
            format!("metric mismatch: {} vs {}", a.metric, b.metric),
        ));
    }
    if !a.same_grid(b) {
        return Err(Error::validation("curves", "curves are on different grids"));
    }
    let mut brackets = Vec::new();
    let mut last_sign: Option<Ordering> = None;
    for (i, (pa, pb)) in a.points.iter().zip(&b.points).enumerate() {
        let (Some(va), Some(vb)) = (pa.value.value(), pb.value.value()) else {
            continue;
        };
        let sign = match va.partial_cmp(&vb) {
            Some(Ordering::Equal) | None => continue,
            Some(s) => s,
        };
        if last_sign.is_some_and(|prev| prev != sign) {
            brackets.push((a.points[i - 1].t, pa.t));
        }
        last_sign = Some(sign);
    }
    Ok(CrossingSet { brackets })
}

/// Grid point with the largest value; ties go to the smallest threshold.
/// `PositiveInfinite` outranks every finite value and undefined points are
/// ignored.
pub fn best_threshold(c: &MetricCurve) -> Result<(f64, MetricValue)> {
    let rank = |v: &MetricValue| match v {
        MetricValue::Defined(x) => Some(*x),
        MetricValue::PositiveInfinite => Some(f64::INFINITY),
        MetricValue::Undefined(_) => None,
    };
    let mut best: Option<(&CurvePoint, f64)> = None;
    for p in &c.points {
        if let Some(x) = rank(&p.value) {
            if best.is_none_or(|(_, bx)| x > bx) {
                best = Some((p, x));
            }
        }
    }
    best.map(|(p, _)| (p.t, p.value.clone()))
        .ok_or(Error::CurveUndefined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rec(score: f64, label: u8) -> ScoredRecord {
        ScoredRecord::new(score, ClassLabel::try_from(label).unwrap()).unwrap()
    }

    fn fixture() -> Vec<ScoredRecord> {
        vec![rec(0.9, 1), rec(0.2, 0), rec(0.6, 0), rec(0.7, 1)]
    }

    fn curve(metric: Metric, pts: &[(f64, Option<f64>)]) -> MetricCurve {
        MetricCurve {
            metric,
            points: pts
                .iter()
                .map(|&(t, v)| CurvePoint {
                    t,
                    value: v.map_or(MetricValue::undefined("test"), MetricValue::Defined),
                })
                .collect(),
        }
    }

    #[test]
    fn default_grid_has_101_points() {
        let pts = ThresholdGrid::default().points();
        assert_eq!(pts.len(), 101);
        assert_eq!(pts[0], 0.0);
        assert_eq!(pts[7], 0.07);
        assert_eq!(pts[29], 0.29);
        assert_eq!(pts[100], 1.0);
    }

    #[test]
    fn grid_includes_stop_when_step_overshoots() {
        let g = ThresholdGrid::new(0.0, 1.0, 0.3).unwrap();
        assert_eq!(g.points(), vec![0.0, 0.3, 0.6, 0.9, 1.0]);
        let g = ThresholdGrid::new(0.0, 1.0, 0.5).unwrap();
        assert_eq!(g.points(), vec![0.0, 0.5, 1.0]);
        let g = ThresholdGrid::new(0.0, 1.0, 5.0).unwrap();
        assert_eq!(g.points(), vec![0.0, 1.0]);
    }

    #[test]
    fn grid_parse_and_validation() {
        let g: ThresholdGrid = "0:1:0.01".parse().unwrap();
        assert_eq!(g, ThresholdGrid::default());
        assert_eq!(g.to_string(), "0:1:0.01");
        assert!("0.5:0.1:0.01".parse::<ThresholdGrid>().is_err());
        assert!("0:1:0".parse::<ThresholdGrid>().is_err());
        assert!("0:1:-0.1".parse::<ThresholdGrid>().is_err());
        assert!("0:1".parse::<ThresholdGrid>().is_err());
        assert!("a:1:0.1".parse::<ThresholdGrid>().is_err());
        assert!("0:1:1e-12".parse::<ThresholdGrid>().is_err());
    }

    #[test]
    fn hand_sweep_of_fixture() {
        let g = ThresholdGrid::new(0.0, 1.0, 0.5).unwrap();
        let curves = sweep(&fixture(), &g, &[Metric::FStar], BetaWeight::ONE).unwrap();
        let vals: Vec<f64> = curves[0]
            .points
            .iter()
            .map(|p| p.value.value().unwrap())
            .collect();
        assert_eq!(vals, vec![0.5, 2.0 / 3.0, 0.0]);
    }

    #[test]
    fn empty_metric_set_gives_no_curves() {
        let g = ThresholdGrid::default();
        assert!(sweep(&fixture(), &g, &[], BetaWeight::ONE)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn sweep_rejects_empty_records_and_unknown_names() {
        let g = ThresholdGrid::default();
        assert!(sweep(&[], &g, &[Metric::F], BetaWeight::ONE).is_err());
        let err = sweep_named(&fixture(), &g, &["f", "f2"], BetaWeight::ONE).unwrap_err();
        assert!(matches!(err, Error::UnknownMetric { .. }));
    }

    #[test]
    fn curves_keep_request_order() {
        let g = ThresholdGrid::default();
        let c = sweep_named(&fixture(), &g, &["mcc", "f", "f_star"], BetaWeight::ONE).unwrap();
        let order: Vec<Metric> = c.iter().map(|c| c.metric).collect();
        assert_eq!(order, vec![Metric::Mcc, Metric::F, Metric::FStar]);
    }

    #[test]
    fn crossing_hand_example() {
        let a = curve(
            Metric::F,
            &[(0.1, Some(0.2)), (0.2, Some(0.5)), (0.3, Some(0.7))],
        );
        let b = curve(
            Metric::F,
            &[(0.1, Some(0.3)), (0.2, Some(0.4)), (0.3, Some(0.6))],
        );
        assert_eq!(find_crossings(&a, &b).unwrap().brackets, vec![(0.1, 0.2)]);
        assert!(find_crossings(&a, &a).unwrap().is_empty());
        let above = curve(
            Metric::F,
            &[(0.1, Some(0.9)), (0.2, Some(0.9)), (0.3, Some(0.9))],
        );
        assert!(find_crossings(&above, &b).unwrap().is_empty());
    }

    #[test]
    fn touch_without_cross_is_not_a_crossing() {
        let a = curve(
            Metric::F,
            &[(0.1, Some(0.5)), (0.2, Some(0.4)), (0.3, Some(0.5))],
        );
        let b = curve(
            Metric::F,
            &[(0.1, Some(0.4)), (0.2, Some(0.4)), (0.3, Some(0.4))],
        );
        assert!(find_crossings(&a, &b).unwrap().is_empty());
    }

    #[test]
    fn cross_through_zero_and_undefined_points() {
        let a = curve(
            Metric::F,
            &[
                (0.1, Some(0.5)),
                (0.2, Some(0.4)),
                (0.3, None),
                (0.4, Some(0.1)),
            ],
        );
        let b = curve(
            Metric::F,
            &[
                (0.1, Some(0.4)),
                (0.2, Some(0.4)),
                (0.3, Some(0.3)),
                (0.4, Some(0.2)),
            ],
        );
        assert_eq!(find_crossings(&a, &b).unwrap().brackets, vec![(0.3, 0.4)]);
    }

    #[test]
    fn crossing_rejects_mismatched_curves() {
        let a = curve(Metric::F, &[(0.1, Some(0.5)), (0.2, Some(0.4))]);
        let b = curve(Metric::F, &[(0.1, Some(0.5)), (0.25, Some(0.4))]);
        let c = curve(Metric::FStar, &[(0.1, Some(0.5)), (0.2, Some(0.4))]);
        assert!(find_crossings(&a, &b).is_err());
        assert!(find_crossings(&a, &c).is_err());
    }

    #[test]
    fn best_threshold_examples() {
        let c = curve(
            Metric::F,
            &[(0.1, Some(0.4)), (0.2, Some(0.9)), (0.3, Some(0.9))],
        );
        assert_eq!(
            best_threshold(&c).unwrap(),
            (0.2, MetricValue::Defined(0.9))
        );
        let one = curve(Metric::F, &[(0.4, Some(0.1))]);
        assert_eq!(
            best_threshold(&one).unwrap(),
            (0.4, MetricValue::Defined(0.1))
        );
        let none = curve(Metric::F, &[(0.1, None), (0.2, None)]);
        assert!(matches!(best_threshold(&none), Err(Error::CurveUndefined)));
    }

    #[test]
    fn best_threshold_prefers_infinite() {
        let mut c = curve(
            Metric::FPrime,
            &[(0.1, Some(3.0)), (0.2, None), (0.3, Some(9.0))],
        );
        c.points[1].value = MetricValue::PositiveInfinite;
        assert_eq!(
            best_threshold(&c).unwrap(),
            (0.2, MetricValue::PositiveInfinite)
        );
    }

    fn records() -> impl Strategy<Value = Vec<ScoredRecord>> {
        prop::collection::vec((0u32..=20, 0u8..2), 1..80).prop_map(|v| {
            v.into_iter()
                .map(|(s, l)| rec(f64::from(s) / 20.0, l))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn tally_matches_from_scored(recs in records()) {
            let tally = ThresholdTally::new(&recs);
            for t in ThresholdGrid::new(-0.05, 1.05, 0.025).unwrap().points() {
                prop_assert_eq!(tally.matrix(t), ConfusionMatrix::from_scored(&recs, t).unwrap());
            }
        }

        #[test]
        fn sweep_is_deterministic(recs in records()) {
            let g = ThresholdGrid::default();
            let a = sweep(&recs, &g, &Metric::ALL, BetaWeight::ONE).unwrap();
            let b = sweep(&recs, &g, &Metric::ALL, BetaWeight::ONE).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn grid_points_strictly_increase(start in -5.0f64..5.0, len in 1e-3f64..10.0, step in 1e-3f64..2.0) {
            let g = ThresholdGrid::new(start, start + len, step).unwrap();
            let pts = g.points();
            prop_assert!(pts.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(*pts.last().unwrap(), start + len);
        }
    }
}
