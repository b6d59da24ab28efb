//! Binary classification evaluation centred on the F-measure.
//!
//! Besides the usual confusion-matrix measures this crate provides two
//! monotone transforms of `F`:
//!
//! * `F' = F / (2(1 - F)) = TP / (FN + FP)`, the number of correctly
//!   classified class-1 objects per misclassified object;
//! * `F* = F / (2 - F) = TP / (FN + FP + TP)`, the proportion of relevant
//!   classifications (truly class 1, predicted class 1, or both) that are
//!   correct. This is the Jaccard coefficient of the two positive sets.
//!
//! Because `F*` is strictly increasing in `F`, any ranking of classifiers,
//! argmax over thresholds, or crossing point between two threshold curves
//! is the same under either measure. [`sweep`] makes that checkable on
//! threshold grids.

pub mod confusion;
pub mod error;
pub mod io;
pub mod metrics;
pub mod ranking;
pub mod sweep;
pub mod synth;

pub use confusion::{ClassLabel, ConfusionMatrix, ScoredRecord};
pub use error::{Error, Result};
pub use metrics::{BetaWeight, Metric, MetricValue, ProportionPanel};
pub use sweep::{CrossingSet, CurvePoint, MetricCurve, ThresholdGrid};
pub use synth::{BetaShape, GeneratorSpec};
