use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::confusion::{ClassLabel, ScoredRecord};
use crate::error::{Error, Result};

/// Read a `score,label` table. Columns are located by header name, so
/// extra columns in any position are ignored.
pub fn read_scores_csv(path: impl AsRef<Path>) -> Result<Vec<ScoredRecord>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_scores(file, path)
}

/// Like [`read_scores_csv`] for any reader; `path` is only used in errors.
pub fn read_scores<R: Read>(mut reader: R, path: &Path) -> Result<Vec<ScoredRecord>> {
    let mut text = Vec::new();
    reader
        .read_to_end(&mut text)
        .map_err(|e| Error::io(path, e))?;
    let line_at = |byte: u64| {
        let mut at = byte as usize;
        while text.get(at).is_some_and(|b| matches!(b, b'\r' | b'\n')) {
            at += 1;
        }
        1 + text[..at].iter().filter(|&&b| b == b'\n').count() as u64
    };
    let parse_err = |line: u64, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(text.as_slice());
    let headers = rdr
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    let column = |name: &str| headers.iter().position(|h| h.trim() == name);
    let (Some(score_col), Some(label_col)) = (column("score"), column("label")) else {
        return Err(parse_err(
            1,
            "missing header: expected columns `score` and `label`".to_string(),
        ));
    };

    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| line_at(p.byte()));
            parse_err(line, e.to_string())
        })?;
        let line = row.position().map_or(0, |p| line_at(p.byte()));
        if row.len() == 1 && row[0].trim().is_empty() {
            continue;
        }
        let score_text = row.get(score_col).map(str::trim).unwrap_or("");
        let label_text = row.get(label_col).map(str::trim).unwrap_or("");
        let score: f64 = score_text
            .parse()
            .map_err(|_| parse_err(line, format!("bad score `{score_text}`")))?;
        let label = match label_text {
            "0" => ClassLabel::Zero,
            "1" => ClassLabel::One,
            other => {
                return Err(parse_err(
                    line,
                    format!("bad label `{other}` (expected 0 or 1)"),
                ))
            }
        };
        let record = ScoredRecord::new(score, label)
            .map_err(|_| parse_err(line, format!("score `{score_text}` is not finite")))?;
        out.push(record);
    }
    Ok(out)
}

pub fn write_scores_to<W: Write>(mut w: W, records: &[ScoredRecord]) -> std::io::Result<()> {
    writeln!(w, "score,label")?;
    for r in records {
        writeln!(w, "{},{}", r.score(), r.label())?;
    }
    w.flush()
}

/// Write records as `score,label` with shortest round-trip decimal scores.
pub fn write_scores_csv(records: &[ScoredRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut buf = Vec::new();
    write_scores_to(&mut buf, records).map_err(|e| Error::io(path, e))?;
    super::write_file(path, &buf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read(text: &str) -> Result<Vec<ScoredRecord>> {
        read_scores(text.as_bytes(), Path::new("mem.csv"))
    }

    fn line_of(err: Error) -> u64 {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn reads_two_records() {
        let recs = read("score,label\n0.9,1\n0.2,0\n").unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].score(), 0.9);
        assert_eq!(recs[1].label(), ClassLabel::Zero);
    }

    #[test]
    fn bad_label_names_its_line() {
        let err = read("score,label\n0.9,1\n0.4,2\n").unwrap_err();
        assert_eq!(line_of(err), 3);
    }

    #[test]
    fn crlf_matches_lf() {
        let lf = read("score,label\n0.9,1\n0.2,0\n").unwrap();
        let crlf = read("score,label\r\n0.9,1\r\n0.2,0\r\n").unwrap();
        let no_trailing = read("score,label\n0.9,1\n0.2,0").unwrap();
        assert_eq!(lf, crlf);
        assert_eq!(lf, no_trailing);
    }

    #[test]
    fn missing_header_is_line_one() {
        assert_eq!(line_of(read("0.9,1\n0.2,0\n").unwrap_err()), 1);
        assert_eq!(line_of(read("").unwrap_err()), 1);
    }

    #[test]
    fn non_finite_and_garbage_scores_rejected() {
        assert_eq!(line_of(read("score,label\nNaN,1\n").unwrap_err()), 2);
        assert_eq!(line_of(read("score,label\n0.1,0\ninf,1\n").unwrap_err()), 3);
        assert_eq!(line_of(read("score,label\nabc,1\n").unwrap_err()), 2);
    }

    #[test]
    fn extra_columns_ignored() {
        let recs = read("id,label,score,note\na,1,0.75,x\nb,0,0.25,y\n").unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].score(), 0.75);
        assert_eq!(recs[0].label(), ClassLabel::One);
    }

    #[test]
    fn header_only_is_empty() {
        assert!(read("score,label\n").unwrap().is_empty());
    }

    #[test]
    fn write_then_read() {
        let recs = read("score,label\n0.1,0\n0.30000000000000004,1\n").unwrap();
        let mut buf = Vec::new();
        write_scores_to(&mut buf, &recs).unwrap();
        assert_eq!(
            String::from_utf8(buf.clone()).unwrap(),
            "score,label\n0.1,0\n0.30000000000000004,1\n"
        );
        assert_eq!(read(std::str::from_utf8(&buf).unwrap()).unwrap(), recs);
    }
}
