//! Versioned report of a harness run and its JSON, CSV and text renderings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::{CheckResult, Status};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub refuted: usize,
    pub error: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(checks: &[CheckResult]) -> Self {
        let mut s = Summary::default();
        for c in checks {
            match c.status {
                Status::Verified => s.verified += 1,
                Status::Refuted => s.refuted += 1,
                Status::Error => s.error += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub started_at: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

/// Current UTC time as `YYYY-MM-DDTHH:MM:SSZ`.
pub fn now_iso8601() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

impl Report {
    pub fn new(started_at: String, checks: Vec<CheckResult>) -> Self {
        let summary = Summary::of(&checks);
        Report { version: REPORT_VERSION, started_at, checks, summary }
    }

    /// 2 if any check errored, else 1 if any was refuted, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.error > 0 {
            2
        } else if self.summary.refuted > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::InvalidArgument(format!("json: {e}")))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("json: {e}")))
    }

    /// Columns `id,status,bounds,elapsed_ms,witness`; bounds as `k=v;k=v`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
        w.write_record(["id", "status", "bounds", "elapsed_ms", "witness"]).map_err(err)?;
        for c in &self.checks {
            w.write_record([
                c.id.as_str(),
                c.status.as_str(),
                &render_bounds(c),
                &c.elapsed_ms.to_string(),
                c.witness.as_deref().unwrap_or(""),
            ])
            .map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(format!("csv: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<8} {:<9} {:>7} ms  {}\n",
                c.id,
                c.status.as_str(),
                c.elapsed_ms,
                render_bounds(c)
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("         witness: {w}\n"));
            }
            if !c.notes.is_empty() {
                out.push_str(&format!("         notes: {}\n", c.notes));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "verified {}, refuted {}, error {}, skipped {}\n",
            s.verified, s.refuted, s.error, s.skipped
        ));
        out
    }
}

fn render_bounds(c: &CheckResult) -> String {
    c.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let checks = vec![
            CheckResult {
                id: "C2.1".into(),
                status: Status::Verified,
                bounds: [("max_n".to_string(), 16)].into(),
                elapsed_ms: 12,
                witness: None,
                notes: String::new(),
            },
            CheckResult {
                id: "P2.2".into(),
                status: Status::Refuted,
                bounds: [("max_n".to_string(), 30)].into(),
                elapsed_ms: 3,
                witness: Some("n=2, \"quoted\"".into()),
                notes: "n".into(),
            },
        ];
        Report::new("2026-01-01T00:00:00Z".into(), checks)
    }

    #[test]
    fn summary_and_exit_code() {
        let r = sample();
        assert_eq!(r.summary, Summary { verified: 1, refuted: 1, error: 0, skipped: 0 });
        assert_eq!(r.exit_code(), 1);
        assert_eq!(Report::new(String::new(), vec![]).exit_code(), 0);
    }

    #[test]
    fn json_round_trip_and_field_names() {
        let r = sample();
        let s = r.to_json().unwrap();
        assert_eq!(Report::from_json(&s).unwrap(), r);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["checks"][0]["status"], "verified");
        assert_eq!(v["checks"][0]["bounds"]["max_n"], 16);
        assert!(v["checks"][0]["witness"].is_null());
        assert_eq!(v["summary"]["refuted"], 1);
    }

    #[test]
    fn csv_columns() {
        let csv = sample().to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("id,status,bounds,elapsed_ms,witness"));
        assert_eq!(lines.next(), Some("C2.1,verified,max_n=16,12,"));
        assert_eq!(lines.next(), Some("P2.2,refuted,max_n=30,3,\"n=2, \"\"quoted\"\"\""));
    }

    #[test]
    fn timestamp_shape() {
        let t = now_iso8601();
        assert_eq!(t.len(), 20);
        assert!(t.ends_with('Z'));
    }
}
