//! Single-threshold measures computed from a [`ConfusionMatrix`].
//!
//! Every ratio that can hit 0/0 returns [`MetricValue::Undefined`] with a
//! short machine-readable reason instead of a conventional 0 or 1. `F'`
//! is an unbounded ratio and reports [`MetricValue::PositiveInfinite`]
//! when nothing is misclassified.
//!
//! Counts are converted to `f64` only at the final division. Sums and
//! products stay in integer arithmetic so that algebraically equal ratios
//! produce bit-identical doubles; this is what makes `F` and `F*` order
//! the same matrices identically.

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use crate::confusion::ConfusionMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum MetricValue {
    /// A finite real.
    Defined(f64),
    PositiveInfinite,
    Undefined(Cow<'static, str>),
}

impl MetricValue {
    pub fn undefined(reason: impl Into<Cow<'static, str>>) -> Self {
        MetricValue::Undefined(reason.into())
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            MetricValue::Defined(v) => Some(*v),
            _ => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, MetricValue::Defined(_))
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            MetricValue::Undefined(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for MetricValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricValue::Defined(v) => write!(f, "{v}"),
            MetricValue::PositiveInfinite => f.write_str("inf"),
            MetricValue::Undefined(_) => f.write_str("NA"),
        }
    }
}

/// `num / den` for exact integer operands, or `Undefined(reason)` on 0/0.
fn ratio(num: u128, den: u128, reason: &'static str) -> MetricValue {
    if den == 0 {
        MetricValue::undefined(reason)
    } else {
        MetricValue::Defined(num as f64 / den as f64)
    }
}

/// Relative weight of recall against precision in the weighted measures.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BetaWeight(f64);

impl BetaWeight {
    pub const ONE: BetaWeight = BetaWeight(1.0);

    pub fn new(beta: f64) -> Result<Self> {
        if beta.is_finite() && beta > 0.0 {
            Ok(Self(beta))
        } else {
            Err(Error::validation(
                "beta",
                format!("{beta} is not a positive finite number"),
            ))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    fn squared(self) -> f64 {
        self.0 * self.0
    }
}

impl Default for BetaWeight {
    fn default() -> Self {
        Self::ONE
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProportionPanel {
    pub precision: MetricValue,
    pub recall: MetricValue,
    pub specificity: MetricValue,
    pub npv: MetricValue,
}

pub fn precision(m: &ConfusionMatrix) -> MetricValue {
    ratio(
        m.tp().into(),
        m.predicted_positives().into(),
        "empty denominator: precision",
    )
}

pub fn recall(m: &ConfusionMatrix) -> MetricValue {
    ratio(
        m.tp().into(),
        m.actual_positives().into(),
        "empty denominator: recall",
    )
}

pub fn specificity(m: &ConfusionMatrix) -> MetricValue {
    ratio(
        m.tn().into(),
        m.actual_negatives().into(),
        "empty denominator: specificity",
    )
}

pub fn npv(m: &ConfusionMatrix) -> MetricValue {
    ratio(
        m.tn().into(),
        m.predicted_negatives().into(),
        "empty denominator: npv",
    )
}

pub fn proportions(m: &ConfusionMatrix) -> ProportionPanel {
    ProportionPanel {
        precision: precision(m),
        recall: recall(m),
        specificity: specificity(m),
        npv: npv(m),
    }
}

/// The F-measure in count form, `2TP / (FN + FP + 2TP)`.
pub fn f_measure(m: &ConfusionMatrix) -> MetricValue {
    let tp = u128::from(m.tp());
    ratio(
        2 * tp,
        2 * tp + u128::from(m.misclassified()),
        "no relevant objects",
    )
}

/// Weighted harmonic mean `(1+β²)PR / (β²P + R)` of precision and recall.
///
/// With `β = 1` this is bit-for-bit [`f_from_precision_recall`].
pub fn f_beta(p: f64, r: f64, w: BetaWeight) -> Result<MetricValue> {
    check_unit("precision", p)?;
    check_unit("recall", r)?;
    let b2 = w.squared();
    let den = b2 * p + r;
    if den == 0.0 {
        return Ok(MetricValue::undefined("precision and recall both zero"));
    }
    Ok(MetricValue::Defined((1.0 + b2) * p * r / den))
}

/// Harmonic mean `2PR / (P + R)`.
pub fn f_from_precision_recall(p: f64, r: f64) -> Result<MetricValue> {
    check_unit("precision", p)?;
    check_unit("recall", r)?;
    let den = p + r;
    if den == 0.0 {
        return Ok(MetricValue::undefined("precision and recall both zero"));
    }
    Ok(MetricValue::Defined(2.0 * p * r / den))
}

/// Correctly classified class-1 objects per misclassified object, `TP / (FN + FP)`.
pub fn f_prime(m: &ConfusionMatrix) -> MetricValue {
    if m.relevant() == 0 {
        return MetricValue::undefined("no relevant objects");
    }
    if m.misclassified() == 0 {
        return MetricValue::PositiveInfinite;
    }
    ratio(
        m.tp().into(),
        m.misclassified().into(),
        "no relevant objects",
    )
}

/// Share of relevant classifications that are correct, `TP / (FN + FP + TP)`.
///
/// Equal to `F / (2 - F)`, to `TP / (n - TN)`, to `PR / (P + R - PR)`, and
/// to the Jaccard coefficient of the predicted-positive and
/// actual-positive sets.
pub fn f_star(m: &ConfusionMatrix) -> MetricValue {
    ratio(
        m.tp().into(),
        m.relevant().into(),
        "no relevant classifications",
    )
}

fn check_unit(field: &str, v: f64) -> Result<()> {
    if (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::validation(field, format!("{v} is outside [0, 1]")))
    }
}

/// Maps an F value onto F* = `f / (2 - f)`, evaluated as `1 / (2/f - 1)`.
pub fn transform_f_to_fstar(f: f64) -> Result<f64> {
    check_unit("f", f)?;
    if f == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (2.0 / f - 1.0))
}

/// Inverse of [`transform_f_to_fstar`]: `2s / (1 + s)`.
pub fn transform_fstar_to_f(s: f64) -> Result<f64> {
    check_unit("f_star", s)?;
    Ok(2.0 * s / (1.0 + s))
}

/// Weighted count form shared by the β-variants: returns
/// `((1+β²)TP, β²FN + FP)`, the numerator and the weighted error mass of `F_β`.
fn weighted_parts(m: &ConfusionMatrix, w: BetaWeight) -> (f64, f64) {
    let b2 = w.squared();
    let tp = m.tp() as f64;
    let fn_ = m.fn_() as f64;
    let fp = m.fp() as f64;
    ((1.0 + b2) * tp, b2 * fn_ + fp)
}

/// `F_β` from counts: `(1+β²)TP / ((1+β²)TP + β²FN + FP)`.
pub fn f_beta_counts(m: &ConfusionMatrix, w: BetaWeight) -> MetricValue {
    if m.relevant() == 0 {
        return MetricValue::undefined("no relevant objects");
    }
    let (a, c) = weighted_parts(m, w);
    MetricValue::Defined(a / (a + c))
}

/// `F*_β = F_β / (2 - F_β)`, evaluated as `(1+β²)TP / ((1+β²)TP + 2β²FN + 2FP)`.
pub fn f_star_beta(m: &ConfusionMatrix, w: BetaWeight) -> MetricValue {
    if m.relevant() == 0 {
        return MetricValue::undefined("no relevant classifications");
    }
    let (a, c) = weighted_parts(m, w);
    MetricValue::Defined(a / (a + 2.0 * c))
}

/// `F'_β = F_β / (2(1 - F_β))`, evaluated as `(1+β²)TP / (2(β²FN + FP))`.
pub fn f_prime_beta(m: &ConfusionMatrix, w: BetaWeight) -> MetricValue {
    if m.relevant() == 0 {
        return MetricValue::undefined("no relevant objects");
    }
    if m.misclassified() == 0 {
        return MetricValue::PositiveInfinite;
    }
    let (a, c) = weighted_parts(m, w);
    MetricValue::Defined(a / (2.0 * c))
}

pub fn misclassification_rate(m: &ConfusionMatrix) -> MetricValue {
    ratio(m.misclassified().into(), m.n().into(), "empty test set")
}

/// Cohen's kappa, `(p_o - p_e) / (1 - p_e)` with chance agreement from the
/// marginal products. Evaluated in the equivalent integer form
/// `2(TP·TN - FN·FP) / ((TP+FP)(FP+TN) + (TP+FN)(FN+TN))`.
pub fn cohen_kappa(m: &ConfusionMatrix) -> MetricValue {
    if m.n() == 0 {
        return MetricValue::undefined("empty test set");
    }
    let (tp, fp, fn_, tn) = wide(m);
    let den = (tp + fp) * (fp + tn) + (tp + fn_) * (fn_ + tn);
    if den == 0 {
        return MetricValue::undefined("chance agreement is 1");
    }
    let num = 2 * (tp as i128 * tn as i128 - fn_ as i128 * fp as i128);
    MetricValue::Defined((num as f64 / den as f64).clamp(-1.0, 1.0))
}

/// Youden's J, sensitivity + specificity - 1.
pub fn youden_index(m: &ConfusionMatrix) -> MetricValue {
    match (recall(m), specificity(m)) {
        (MetricValue::Defined(r), MetricValue::Defined(s)) => MetricValue::Defined(r + s - 1.0),
        (MetricValue::Undefined(why), _) | (_, MetricValue::Undefined(why)) => {
            MetricValue::Undefined(why)
        }
        _ => unreachable!("proportions are never infinite"),
    }
}

/// Matthews correlation coefficient.
pub fn matthews_coefficient(m: &ConfusionMatrix) -> MetricValue {
    let (tp, fp, fn_, tn) = wide(m);
    let marginals = [tp + fp, tp + fn_, tn + fp, tn + fn_];
    if marginals.contains(&0) {
        return MetricValue::undefined("empty marginal");
    }
    let num = tp as i128 * tn as i128 - fp as i128 * fn_ as i128;
    // Split the root so the product of four marginals cannot overflow f64.
    let den = ((marginals[0] * marginals[1]) as f64).sqrt()
        * ((marginals[2] * marginals[3]) as f64).sqrt();
    MetricValue::Defined((num as f64 / den).clamp(-1.0, 1.0))
}

fn wide(m: &ConfusionMatrix) -> (u128, u128, u128, u128) {
    (m.tp().into(), m.fp().into(), m.fn_().into(), m.tn().into())
}

/// Registry of every measure that can be evaluated on a single matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    Precision,
    Recall,
    Specificity,
    Npv,
    F,
    FPrime,
    FStar,
    FBeta,
    FPrimeBeta,
    FStarBeta,
    MisclassificationRate,
    Kappa,
    Youden,
    Mcc,
}

impl Metric {
    pub const ALL: [Metric; 14] = [
        Metric::Precision,
        Metric::Recall,
        Metric::Specificity,
        Metric::Npv,
        Metric::F,
        Metric::FPrime,
        Metric::FStar,
        Metric::FBeta,
        Metric::FPrimeBeta,
        Metric::FStarBeta,
        Metric::MisclassificationRate,
        Metric::Kappa,
        Metric::Youden,
        Metric::Mcc,
    ];

    /// The unweighted panel (everything except the β-variants).
    pub const PANEL: [Metric; 11] = [
        Metric::Precision,
        Metric::Recall,
        Metric::Specificity,
        Metric::Npv,
        Metric::F,
        Metric::FPrime,
        Metric::FStar,
        Metric::MisclassificationRate,
        Metric::Kappa,
        Metric::Youden,
        Metric::Mcc,
    ];

    pub const WEIGHTED: [Metric; 3] = [Metric::FBeta, Metric::FStarBeta, Metric::FPrimeBeta];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Precision => "precision",
            Metric::Recall => "recall",
            Metric::Specificity => "specificity",
            Metric::Npv => "npv",
            Metric::F => "f",
            Metric::FPrime => "f_prime",
            Metric::FStar => "f_star",
            Metric::FBeta => "f_beta",
            Metric::FPrimeBeta => "f_prime_beta",
            Metric::FStarBeta => "f_star_beta",
            Metric::MisclassificationRate => "misclassification_rate",
            Metric::Kappa => "kappa",
            Metric::Youden => "youden",
            Metric::Mcc => "mcc",
        }
    }

    pub fn valid_names() -> String {
        Metric::ALL.map(Metric::name).join(", ")
    }

    pub fn evaluate(self, m: &ConfusionMatrix, w: BetaWeight) -> MetricValue {
        match self {
            Metric::Precision => precision(m),
            Metric::Recall => recall(m),
            Metric::Specificity => specificity(m),
            Metric::Npv => npv(m),
            Metric::F => f_measure(m),
            Metric::FPrime => f_prime(m),
            Metric::FStar => f_star(m),
            Metric::FBeta => f_beta_counts(m, w),
            Metric::FPrimeBeta => f_prime_beta(m, w),
            Metric::FStarBeta => f_star_beta(m, w),
            Metric::MisclassificationRate => misclassification_rate(m),
            Metric::Kappa => cohen_kappa(m),
            Metric::Youden => youden_index(m),
            Metric::Mcc => matthews_coefficient(m),
        }
    }

    /// Parse a comma-separated list, keeping request order and dropping repeats.
    pub fn parse_list(list: &str) -> Result<Vec<Metric>> {
        let mut out = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let metric: Metric = name.parse()?;
            if !out.contains(&metric) {
                out.push(metric);
            }
        }
        Ok(out)
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMetric {
                name: s.to_string(),
                valid: Metric::valid_names(),
            })
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn cm(tp: u64, fp: u64, fn_: u64, tn: u64) -> ConfusionMatrix {
        ConfusionMatrix::from_counts(tp, fp, fn_, tn).unwrap()
    }

    fn m1() -> ConfusionMatrix {
        cm(8, 3, 1, 5)
    }

    fn v(x: MetricValue) -> f64 {
        x.value()
            .unwrap_or_else(|| panic!("expected defined, got {x:?}"))
    }

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() <= TOL, "{a} vs {b}");
    }

    #[test]
    fn proportions_on_m1() {
        let p = proportions(&m1());
        close(v(p.precision), 8.0 / 11.0);
        close(v(p.recall), 8.0 / 9.0);
        close(v(p.specificity), 0.625);
        close(v(p.npv), 5.0 / 6.0);
    }

    #[test]
    fn proportions_without_positive_predictions() {
        let p = proportions(&cm(0, 0, 3, 7));
        assert_eq!(p.precision.reason(), Some("empty denominator: precision"));
        close(v(p.recall), 0.0);
        close(v(p.specificity), 1.0);
        close(v(p.npv), 0.7);
    }

    #[test]
    fn proportions_perfect() {
        let p = proportions(&cm(4, 0, 0, 9));
        for x in [p.precision, p.recall, p.specificity, p.npv] {
            assert_eq!(x, MetricValue::Defined(1.0));
        }
    }

    #[test]
    fn f_measure_examples() {
        assert_eq!(f_measure(&m1()), MetricValue::Defined(0.8));
        assert_eq!(f_measure(&cm(3, 0, 0, 2)), MetricValue::Defined(1.0));
        assert_eq!(f_measure(&cm(0, 2, 1, 2)), MetricValue::Defined(0.0));
        assert!(!f_measure(&cm(0, 0, 0, 5)).is_defined());
    }

    #[test]
    fn f_measure_matches_precision_recall_form() {
        let p = v(precision(&m1()));
        let r = v(recall(&m1()));
        close(v(f_from_precision_recall(p, r).unwrap()), 0.8);
    }

    #[test]
    fn f_beta_examples() {
        let two = BetaWeight::new(2.0).unwrap();
        close(v(f_beta(0.5, 1.0, two).unwrap()), 2.5 / 3.0);
        for b in [0.3, 1.0, 2.0, 7.5] {
            let w = BetaWeight::new(b).unwrap();
            close(v(f_beta(0.37, 0.37, w).unwrap()), 0.37);
        }
        let rounded = v(f_beta(0.727273, 0.888889, BetaWeight::ONE).unwrap());
        assert!((rounded - 0.8).abs() < 1e-6, "{rounded}");
        let p = 8.0 / 11.0;
        let r = 8.0 / 9.0;
        close(v(f_beta(p, r, BetaWeight::ONE).unwrap()), 0.8);
    }

    #[test]
    fn f_beta_rejects_out_of_range() {
        assert!(f_beta(1.2, 0.5, BetaWeight::ONE).is_err());
        assert!(f_beta(0.5, -0.1, BetaWeight::ONE).is_err());
        assert!(f_beta(0.0, 0.0, BetaWeight::ONE)
            .unwrap()
            .reason()
            .is_some());
    }

    #[test]
    fn beta_weight_must_be_positive() {
        assert!(BetaWeight::new(0.0).is_err());
        assert!(BetaWeight::new(-1.0).is_err());
        assert!(BetaWeight::new(f64::NAN).is_err());
    }

    #[test]
    fn f_prime_examples() {
        assert_eq!(f_prime(&m1()), MetricValue::Defined(2.0));
        assert_eq!(f_prime(&cm(5, 0, 0, 1)), MetricValue::PositiveInfinite);
        assert_eq!(f_prime(&cm(0, 1, 2, 0)), MetricValue::Defined(0.0));
        assert_eq!(
            f_prime(&cm(0, 0, 0, 4)).reason(),
            Some("no relevant objects")
        );
    }

    #[test]
    fn f_star_examples() {
        let s = v(f_star(&m1()));
        close(s, 2.0 / 3.0);
        close(s, 0.8 / 1.2);
        close(s, 8.0 / (17.0 - 5.0));
        assert_eq!(f_star(&cm(6, 0, 0, 2)), MetricValue::Defined(1.0));
        assert_eq!(f_star(&cm(0, 3, 1, 2)), MetricValue::Defined(0.0));
        assert_eq!(
            f_star(&cm(0, 0, 0, 2)).reason(),
            Some("no relevant classifications")
        );
    }

    #[test]
    fn transform_examples() {
        assert_eq!(transform_f_to_fstar(0.0).unwrap(), 0.0);
        assert_eq!(transform_f_to_fstar(1.0).unwrap(), 1.0);
        close(transform_f_to_fstar(0.5).unwrap(), 1.0 / 3.0);
        close(transform_f_to_fstar(0.8).unwrap(), 2.0 / 3.0);
        close(transform_fstar_to_f(1.0 / 3.0).unwrap(), 0.5);
        assert_eq!(transform_fstar_to_f(0.0).unwrap(), 0.0);
        assert_eq!(transform_fstar_to_f(1.0).unwrap(), 1.0);
        let rt = transform_f_to_fstar(transform_fstar_to_f(0.42).unwrap()).unwrap();
        close(rt, 0.42);
        assert!(transform_f_to_fstar(1.5).is_err());
        assert!(transform_f_to_fstar(-0.1).is_err());
        assert!(transform_fstar_to_f(f64::NAN).is_err());
    }

    #[test]
    fn weighted_examples() {
        let two = BetaWeight::new(2.0).unwrap();
        let m = cm(5, 5, 0, 0);
        close(v(f_beta_counts(&m, two)), 5.0 / 6.0);
        close(v(f_star_beta(&m, two)), 5.0 / 7.0);
        close(v(f_prime_beta(&m, two)), 2.5);
        close(v(f_star_beta(&m1(), BetaWeight::ONE)), 2.0 / 3.0);
        close(v(f_prime_beta(&m1(), BetaWeight::ONE)), 2.0);
        let perfect = cm(3, 0, 0, 3);
        assert_eq!(f_star_beta(&perfect, two), MetricValue::Defined(1.0));
        assert_eq!(f_prime_beta(&perfect, two), MetricValue::PositiveInfinite);
    }

    #[test]
    fn weighted_count_form_agrees_with_transform_route() {
        for (tp, fp, fn_) in [(5, 5, 0), (8, 3, 1), (1, 9, 4), (0, 2, 2), (13, 1, 7)] {
            let m = cm(tp, fp, fn_, 11);
            for b in [0.25, 0.5, 1.0, 2.0, 3.0] {
                let w = BetaWeight::new(b).unwrap();
                let fb = v(f_beta_counts(&m, w));
                close(v(f_star_beta(&m, w)), fb / (2.0 - fb));
                close(v(f_prime_beta(&m, w)), fb / (2.0 * (1.0 - fb)));
            }
        }
    }

    #[test]
    fn misclassification_examples() {
        close(v(misclassification_rate(&m1())), 4.0 / 17.0);
        assert_eq!(
            misclassification_rate(&cm(2, 0, 0, 2)),
            MetricValue::Defined(0.0)
        );
        assert_eq!(
            misclassification_rate(&cm(0, 2, 3, 0)),
            MetricValue::Defined(1.0)
        );
        assert!(!misclassification_rate(&cm(0, 0, 0, 0)).is_defined());
    }

    /// Textbook p_o / p_e route, kept independent of the integer form.
    fn kappa_oracle(m: &ConfusionMatrix) -> f64 {
        let n = m.n() as f64;
        let po = (m.tp() + m.tn()) as f64 / n;
        let pe = (m.predicted_positives() as f64 * m.actual_positives() as f64
            + m.predicted_negatives() as f64 * m.actual_negatives() as f64)
            / (n * n);
        (po - pe) / (1.0 - pe)
    }

    #[test]
    fn kappa_examples() {
        close(v(cohen_kappa(&m1())), 37.0 / 71.0);
        close(v(cohen_kappa(&cm(40, 10, 10, 40))), 0.6);
        assert_eq!(cohen_kappa(&cm(3, 0, 0, 4)), MetricValue::Defined(1.0));
        assert!(!cohen_kappa(&cm(0, 0, 0, 0)).is_defined());
        assert_eq!(
            cohen_kappa(&cm(5, 0, 0, 0)).reason(),
            Some("chance agreement is 1")
        );
    }

    #[test]
    fn kappa_matches_oracle() {
        for (tp, fp, fn_, tn) in [(8, 3, 1, 5), (1, 2, 3, 4), (50, 7, 0, 1), (0, 9, 9, 0)] {
            let m = cm(tp, fp, fn_, tn);
            assert!((v(cohen_kappa(&m)) - kappa_oracle(&m)).abs() < 1e-12);
        }
    }

    #[test]
    fn youden_examples() {
        close(v(youden_index(&m1())), 37.0 / 72.0);
        assert_eq!(youden_index(&cm(4, 0, 0, 4)), MetricValue::Defined(1.0));
        close(v(youden_index(&cm(5, 5, 5, 5))), 0.0);
        assert!(!youden_index(&cm(0, 0, 0, 3)).is_defined());
    }

    #[test]
    fn mcc_examples() {
        close(v(matthews_coefficient(&m1())), 37.0 / 4752f64.sqrt());
        assert_eq!(
            matthews_coefficient(&cm(4, 0, 0, 6)),
            MetricValue::Defined(1.0)
        );
        assert_eq!(
            matthews_coefficient(&cm(5, 5, 5, 5)),
            MetricValue::Defined(0.0)
        );
        assert!(!matthews_coefficient(&cm(5, 5, 0, 0)).is_defined());
    }

    #[test]
    fn tn_insensitivity() {
        for tn in [0, 1, 17, 10_000] {
            let m = cm(8, 3, 1, tn);
            assert_eq!(f_measure(&m), f_measure(&m1()));
            assert_eq!(f_prime(&m), f_prime(&m1()));
            assert_eq!(f_star(&m), f_star(&m1()));
        }
    }

    #[test]
    fn metric_names_round_trip() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
        let err = "f2".parse::<Metric>().unwrap_err().to_string();
        assert!(err.contains("f_star") && err.contains("mcc"), "{err}");
        assert_eq!(
            Metric::parse_list("f, f_star,f").unwrap(),
            vec![Metric::F, Metric::FStar]
        );
        assert!(Metric::parse_list("").unwrap().is_empty());
    }
}
