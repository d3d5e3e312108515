//! Report records and output formats.
//!
//! JSON records follow a fixed schema:
//! `{"identity": str, "instance": str, "n": int, "lhs": int, "rhs": int,
//!   "ok": bool, "elapsed_ms": float}`,
//! with `"lower_ok"`/`"upper_ok"` added by inequality identities and
//! `elapsed_ms` omitted under `--no-timing`.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use menonforge_core::IdentityReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Markdown,
}

/// One flattened verification record, ready for any output format.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub identity: String,
    pub instance: String,
    pub n: u64,
    pub lhs: u128,
    pub rhs: u128,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Record {
    pub fn from_report(report: &IdentityReport, timing: bool) -> Record {
        Record {
            identity: report.identity.token().to_string(),
            instance: report.instance.clone(),
            n: report.n,
            lhs: report.lhs,
            rhs: report.rhs,
            ok: report.ok,
            lower_ok: report.lower_ok,
            upper_ok: report.upper_ok,
            elapsed_ms: timing.then_some(report.elapsed.as_secs_f64() * 1e3),
        }
    }

    /// Deterministic emission order, independent of how the sweep ran.
    pub fn sort_key(&self) -> (String, u64, String) {
        (self.identity.clone(), self.n, self.instance.clone())
    }
}

/// Write all records to `out` in the chosen format.
pub fn emit(out: &mut dyn Write, format: Format, records: &[Record], timing: bool) -> std::io::Result<()> {
    match format {
        Format::Plain => {
            for r in records {
                writeln!(out, "{}", plain_line(r))?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            let mut header = vec!["identity", "instance", "n", "lhs", "rhs", "ok", "lower_ok", "upper_ok"];
            if timing {
                header.push("elapsed_ms");
            }
            writer.write_record(&header)?;
            for r in records {
                let mut row = vec![
                    r.identity.clone(),
                    r.instance.clone(),
                    r.n.to_string(),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.ok.to_string(),
                    r.lower_ok.map(|b| b.to_string()).unwrap_or_default(),
                    r.upper_ok.map(|b| b.to_string()).unwrap_or_default(),
                ];
                if timing {
                    row.push(r.elapsed_ms.map(format_ms).unwrap_or_default());
                }
                writer.write_record(&row)?;
            }
            writer.flush()?;
        }
        Format::Markdown => {
            let mut header = vec!["identity", "instance", "n", "lhs", "rhs", "ok", "lower_ok", "upper_ok"];
            if timing {
                header.push("elapsed_ms");
            }
            writeln!(out, "| {} |", header.join(" | "))?;
            writeln!(out, "|{}|", header.iter().map(|_| " --- ").collect::<Vec<_>>().join("|"))?;
            for r in records {
                let mut row = vec![
                    r.identity.clone(),
                    r.instance.clone(),
                    r.n.to_string(),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.ok.to_string(),
                    r.lower_ok.map(|b| b.to_string()).unwrap_or_default(),
                    r.upper_ok.map(|b| b.to_string()).unwrap_or_default(),
                ];
                if timing {
                    row.push(r.elapsed_ms.map(format_ms).unwrap_or_default());
                }
                writeln!(out, "| {} |", row.join(" | "))?;
            }
        }
    }
    Ok(())
}

fn plain_line(r: &Record) -> String {
    let mut line = format!(
        "{} {} {} n={} lhs={} rhs={}",
        if r.ok { "ok  " } else { "FAIL" },
        r.identity,
        r.instance,
        r.n,
        r.lhs,
        r.rhs
    );
    if let (Some(lower), Some(upper)) = (r.lower_ok, r.upper_ok) {
        line.push_str(&format!(" lower_ok={lower} upper_ok={upper}"));
    }
    if let Some(ms) = r.elapsed_ms {
        line.push_str(&format!(" elapsed_ms={}", format_ms(ms)));
    }
    line
}

fn format_ms(ms: f64) -> String {
    format!("{ms:.3}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(ok: bool, bounds: bool, timing: bool) -> Record {
        Record {
            identity: "menon".into(),
            instance: "6".into(),
            n: 6,
            lhs: 8,
            rhs: 8,
            ok,
            lower_ok: bounds.then_some(true),
            upper_ok: bounds.then_some(ok),
            elapsed_ms: timing.then_some(0.1234),
        }
    }

    fn render(format: Format, records: &[Record], timing: bool) -> String {
        let mut buf = Vec::new();
        emit(&mut buf, format, records, timing).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_schema_fields() {
        let text = render(Format::Json, &[sample(true, false, true)], true);
        let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        let obj = value.as_object().unwrap();
        assert_eq!(obj["identity"], "menon");
        assert_eq!(obj["n"], 6);
        assert!(obj["elapsed_ms"].is_f64());
        assert!(!obj.contains_key("lower_ok"));

        let text = render(Format::Json, &[sample(false, true, false)], false);
        let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        let obj = value.as_object().unwrap();
        assert_eq!(obj["lower_ok"], true);
        assert_eq!(obj["upper_ok"], false);
        assert!(!obj.contains_key("elapsed_ms"));
    }

    #[test]
    fn csv_column_count_tracks_timing_flag() {
        let with = render(Format::Csv, &[sample(true, false, true)], true);
        assert_eq!(with.lines().next().unwrap().split(',').count(), 9);
        let without = render(Format::Csv, &[sample(true, false, false)], false);
        assert_eq!(without.lines().next().unwrap().split(',').count(), 8);
    }

    #[test]
    fn plain_marks_failures() {
        let text = render(Format::Plain, &[sample(false, true, false)], false);
        assert!(text.starts_with("FAIL"));
        assert!(text.contains("upper_ok=false"));
    }

    #[test]
    fn markdown_has_separator_row() {
        let text = render(Format::Markdown, &[sample(true, false, false)], false);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].contains("---"));
    }
}
