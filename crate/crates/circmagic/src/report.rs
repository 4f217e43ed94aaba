//! Self-describing JSON-line records emitted by the command layer.
//!
//! Every record carries the schema version, the record kind, the tool
//! version, an echo of the input and the elapsed wall time, so a stream of
//! reports from different subcommands can be consumed without out-of-band
//! context.

use serde::Serialize;
use serde_json::Value;
use std::time::Duration;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Admissible,
    Classify,
    Label,
    Verify,
    Search,
    Enumerate,
    Scan,
    Selftest,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub kind: ReportKind,
    pub version: String,
    pub input: String,
    pub elapsed_ms: u64,
    pub payload: Value,
}

impl Report {
    pub fn new(kind: ReportKind, input: impl Into<String>, payload: Value, elapsed: Duration) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            kind,
            version: env!("CARGO_PKG_VERSION").to_string(),
            input: input.into(),
            elapsed_ms: elapsed.as_millis() as u64,
            payload,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn reports_are_self_describing_json_lines()  {
        let r = Report::new(
            ReportKind::Admissible,
            "24:1,2,3",
            json!({"n": 24}),
            Duration::from_millis(7),
        );
        let line = r.to_json_line();
        assert!(!line.contains('\n'));
        let v: Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["kind"], "admissible");
        assert_eq!(v["input"], "24:1,2,3");
        assert_eq!(v["payload"]["n"], 24);
        assert!(v["version"].is_string());
    }
}
