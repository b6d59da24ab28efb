//! Human-readable tables.

use std::io::IsTerminal;

use fstar_core::io::ReportDocument;
use fstar_core::MetricValue;

fn styled() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

fn bold(s: &str, on: bool) -> String {
    if on {
        format!("\x1b[1m{s}\x1b[0m")
    } else {
        s.to_string()
    }
}

pub fn value_text(v: &MetricValue) -> String {
    match v {
        MetricValue::Defined(x) => format!("{x}"),
        MetricValue::PositiveInfinite => "inf".to_string(),
        MetricValue::Undefined(reason) => format!("NA ({reason})"),
    }
}

pub fn report_table(doc: &ReportDocument) -> String {
    let on = styled();
    let m = &doc.matrix;
    let mut out = format!(
        "tp={} fp={} fn={} tn={} n={}\n",
        m.tp(),
        m.fp(),
        m.fn_(),
        m.tn(),
        m.n()
    );
    let width = doc.metrics.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    for (name, value) in &doc.metrics {
        let padded = format!("{name:<width$}");
        out.push_str(&format!("{}  {}\n", bold(&padded, on), value_text(value)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fstar_core::ConfusionMatrix;

    #[test]
    fn table_lists_values_and_reasons() {
        let mut doc = ReportDocument::new(ConfusionMatrix::default());
        doc.push("f", MetricValue::undefined("no relevant objects"));
        doc.push("f_prime", MetricValue::PositiveInfinite);
        doc.push("precision", MetricValue::Defined(0.5));
        let text = report_table(&doc);
        assert!(text.contains("NA (no relevant objects)"));
        assert!(text.contains("inf"));
        assert!(text.contains("0.5"));
    }
}
