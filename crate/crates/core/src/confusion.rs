//! The 2x2 confusion matrix and the records it is tallied from.
//!
//! Layout follows the usual binary table: rows are the predicted class,
//! columns the true class.
//!
//! |             | true 0 | true 1 |
//! |-------------|--------|--------|
//! | predicted 0 | TN     | FN     |
//! | predicted 1 | FP     | TP     |

use std::fmt;

use crate::error::{Error, Result};

/// An object is assigned to class 1 only when its score is strictly greater
/// than the threshold; a score equal to the threshold predicts class 0.
pub const THRESHOLD_IS_STRICT: bool = true;

/// Predicted class for `score` under threshold `t`.
#[inline]
pub fn predicts_positive(score: f64, t: f64) -> bool {
    if THRESHOLD_IS_STRICT {
        score > t
    } else {
        score >= t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Zero,
    One,
}

impl ClassLabel {
    pub fn as_u8(self) -> u8 {
        match self {
            ClassLabel::Zero => 0,
            ClassLabel::One => 1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            ClassLabel::Zero => ClassLabel::One,
            ClassLabel::One => ClassLabel::Zero,
        }
    }
}

impl TryFrom<u8> for ClassLabel {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(ClassLabel::Zero),
            1 => Ok(ClassLabel::One),
            other => Err(Error::validation("label", format!("{other} is not 0 or 1"))),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// One test-set object: a real-valued score and its true class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoredRecord {
    score: f64,
    label: ClassLabel,
}

impl ScoredRecord {
    /// Fails if `score` is NaN or infinite.
    pub fn new(score: f64, label: ClassLabel) -> Result<Self> {
        if !score.is_finite() {
            return Err(Error::validation("score", format!("{score} is not finite")));
        }
        Ok(Self { score, label })
    }

    pub fn score(&self) -> f64 {
        self.score
    }

    pub fn label(&self) -> ClassLabel {
        self.label
    }

    pub fn with_label(self, label: ClassLabel) -> Self {
        Self { label, ..self }
    }
}

/// Counts of a thresholded binary classification.
///
/// Counts are exact `u64`; the total is checked for overflow at
/// construction so `n()` never wraps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ConfusionMatrix {
    tp: u64,
    fp: u64,
    fn_: u64,
    tn: u64,
}

impl ConfusionMatrix {
    pub fn from_counts(tp: u64, fp: u64, fn_: u64, tn: u64) -> Result<Self> {
        [tp, fp, fn_, tn]
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or_else(|| Error::validation("counts", "total count overflows u64"))?;
        Ok(Self { tp, fp, fn_, tn })
    }

    /// Validating constructor for counts that arrive as signed integers,
    /// e.g. from user input. The error names the first negative field.
    pub fn from_signed_counts(tp: i64, fp: i64, fn_: i64, tn: i64) -> Result<Self> {
        let check = |name: &str, v: i64| {
            u64::try_from(v).map_err(|_| Error::validation(name, format!("{v} is negative")))
        };
        Self::from_counts(
            check("tp", tp)?,
            check("fp", fp)?,
            check("fn", fn_)?,
            check("tn", tn)?,
        )
    }

    /// Tally `records` against threshold `t`.
    pub fn from_scored(records: &[ScoredRecord], t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::validation("threshold", format!("{t} is not finite")));
        }
        let mut m = Self::default();
        for r in records {
            match (predicts_positive(r.score, t), r.label) {
                (true, ClassLabel::One) => m.tp += 1,
                (true, ClassLabel::Zero) => m.fp += 1,
                (false, ClassLabel::One) => m.fn_ += 1,
                (false, ClassLabel::Zero) => m.tn += 1,
            }
        }
        Ok(m)
    }

    /// Relabel class 0 as class 1 and vice versa.
    pub fn swap_classes(self) -> Self {
        Self {
            tp: self.tn,
            fp: self.fn_,
            fn_: self.fp,
            tn: self.tp,
        }
    }

    pub fn tp(&self) -> u64 {
        self.tp
    }

    pub fn fp(&self) -> u64 {
        self.fp
    }

    pub fn fn_(&self) -> u64 {
        self.fn_
    }

    pub fn tn(&self) -> u64 {
        self.tn
    }

    pub fn n(&self) -> u64 {
        self.tp + self.fp + self.fn_ + self.tn
    }

    /// Objects that are truly class 1, predicted class 1, or both.
    pub fn relevant(&self) -> u64 {
        self.tp + self.fp + self.fn_
    }

    pub fn misclassified(&self) -> u64 {
        self.fp + self.fn_
    }

    pub fn actual_positives(&self) -> u64 {
        self.tp + self.fn_
    }

    pub fn actual_negatives(&self) -> u64 {
        self.tn + self.fp
    }

    pub fn predicted_positives(&self) -> u64 {
        self.tp + self.fp
    }

    pub fn predicted_negatives(&self) -> u64 {
        self.tn + self.fn_
    }
}

impl fmt::Display for ConfusionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tp={} fp={} fn={} tn={} (n={})",
            self.tp,
            self.fp,
            self.fn_,
            self.tn,
            self.n()
        )
    }
}
