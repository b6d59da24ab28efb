//! Threshold-free AUC.

use crate::confusion::{ClassLabel, ScoredRecord};
use crate::metrics::MetricValue;

/// Probability that a random class-0 score is below a random class-1
/// score, ties credited one half.
///
/// Computed from midranks (the Mann-Whitney U statistic) in O(n log n).
/// Ranks are kept doubled so every intermediate is an exact integer and
/// the only rounding is the final division.
pub fn auc(records: &[ScoredRecord]) -> MetricValue {
    let n1 = records
        .iter()
        .filter(|r| r.label() == ClassLabel::One)
        .count() as u128;
    let n0 = records.len() as u128 - n1;
    if n0 == 0 || n1 == 0 {
        return MetricValue::undefined("one class absent");
    }

    let mut sorted: Vec<&ScoredRecord> = records.iter().collect();
    sorted.sort_by(|a, b| a.score().total_cmp(&b.score()));

    // Sum over class-1 records of 2 * midrank (1-based).
    let mut rank_sum2: u128 = 0;
    let mut start = 0;
    while start < sorted.len() {
        let score = sorted[start].score();
        let mut end = start;
        let mut ones = 0u128;
        while end < sorted.len() && sorted[end].score() == score {
            if sorted[end].label() == ClassLabel::One {
                ones += 1;
            }
            end += 1;
        }
        // Positions start+1 ..= end share the midrank (start + 1 + end) / 2.
        rank_sum2 += ones * (start as u128 + 1 + end as u128);
        start = end;
    }

    let u2 = rank_sum2 - n1 * (n1 + 1);
    MetricValue::Defined(u2 as f64 / (2 * n0 * n1) as f64)
}
