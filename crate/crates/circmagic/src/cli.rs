//! The command layer behind the `circmagic` binary: parse inputs, drive
//! the library, and emit [`Report`](crate::report::Report) records.
//!
//! Every command returns its reports together with the process exit code:
//! 0 for success/yes, 1 for no/failure, 3 for unknown/budget; usage and
//! domain errors surface as `Err` and exit with 2. Labelings are always
//! re-verified in-process before they are emitted.

use crate::circulant::{enumerate_sets, parse_connection_set};
use crate::families::{
    decide, enumerate_families, parse_family, recognize, DmVerdict, NoReason, YesEvidence,
};
use crate::labelings::{label_connection_set, label_family, verify_set, Labeling};
use crate::oracle::{
    exhaustive_scan, search_labeling_with, SearchBudget, SearchOutcome,
};
use crate::report::{Report, ReportKind};
use crate::selftest::run_selftest;
use crate::spectra::{admissible_set, candidate_filter, TypeTag};
use crate::{Error, Result};
use serde_json::{json, Value};
use std::path::Path;
use std::time::Instant;

/// Reports plus the process exit code.
pub struct CmdOutput {
    pub reports: Vec<Report>,
    pub exit: i32,
}

impl CmdOutput {
    fn one(report: Report, exit: i32) -> CmdOutput {
        CmdOutput {
            reports: vec![report],
            exit,
        }
    }
}

/// Exit code for an error escaping a command: budget stops map to 3,
/// definitive non-existence to 1, everything else is a usage/domain error.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted(_) => 3,
        Error::NotDistanceMagic(_) => 1,
        _ => 2,
    }
}

fn verdict_payload(verdict: &DmVerdict) -> Value {
    match verdict {
        DmVerdict::Yes(YesEvidence::Family { family, multiplier }) => json!({
            "verdict": "yes",
            "family": family.to_string(),
            "multiplier": multiplier,
            "defining_set": family.connection_set().to_string(),
        }),
        DmVerdict::Yes(YesEvidence::Labeling(l)) => json!({
            "verdict": "yes",
            "labeling": l.values(),
        }),
        DmVerdict::No(reason) => json!({
            "verdict": "no",
            "reason": no_reason_code(reason),
        }),
        DmVerdict::Unknown(report) => json!({
            "verdict": "unknown",
            "nodes": report.nodes,
            "depth_reached": report.depth_reached,
        }),
    }
}

fn no_reason_code(reason: &NoReason) -> String {
    match reason {
        NoReason::EmptyKernel => "empty-kernel".to_string(),
        NoReason::CommonDivisor(d) => format!("common-divisor:{d}"),
        NoReason::TheoremType1 => "theorem-type1".to_string(),
        NoReason::TheoremType2 => "theorem-type2".to_string(),
        NoReason::Type3Necessary(which) => format!("type3-necessary:{which:?}"),
        NoReason::SearchExhausted => "search-exhausted".to_string(),
    }
}

/// `admissible "n:a,b,c"`: the admissible characters with tags and
/// witnesses.
pub fn cmd_admissible(input: &str) -> Result<CmdOutput> {
    let t0 = Instant::now();
    let s = parse_connection_set(input)?;
    let adm = admissible_set(&s);
    let payload = json!({
        "n": s.order(),
        "set": s.to_string(),
        "connected": s.is_connected(),
        "admissible": adm,
    });
    Ok(CmdOutput::one(
        Report::new(ReportKind::Admissible, input, payload, t0.elapsed()),
        0,
    ))
}

/// `decide "n:a,b,c"`: exit 0 = yes, 1 = no, 3 = unknown.
pub fn cmd_decide(input: &str, budget: &SearchBudget) -> Result<CmdOutput> {
    let t0 = Instant::now();
    let s = parse_connection_set(input)?;
    let verdict = decide(&s, budget)?;
    let mut payload = verdict_payload(&verdict);
    payload["set"] = Value::String(s.to_string());
    let exit = match &verdict {
        DmVerdict::Yes(_) => 0,
        DmVerdict::No(_) => 1,
        DmVerdict::Unknown(_) => 3,
    };
    Ok(CmdOutput::one(
        Report::new(ReportKind::Classify, input, payload, t0.elapsed()),
        exit,
    ))
}

/// `recognize "n:a,b,c"`: the first matching family with its multiplier.
pub fn cmd_recognize(input: &str) -> Result<CmdOutput> {
    let t0 = Instant::now();
    let s = parse_connection_set(input)?;
    let (payload, exit) = match recognize(&s) {
        Some((family, q)) => (
            json!({
                "set": s.to_string(),
                "family": family.to_string(),
                "multiplier": q,
                "defining_set": family.connection_set().to_string(),
            }),
            0,
        ),
        None => (json!({ "set": s.to_string(), "family": Value::Null }), 1),
    };
    Ok(CmdOutput::one(
        Report::new(ReportKind::Classify, input, payload, t0.elapsed()),
        exit,
    ))
}

/// `label "T1b[5,7,11]"` or `label "n:a,b,c"`: construct a labeling, by
/// the family's labeler when available and search otherwise, re-verify,
/// and optionally write it to a file (JSON array, or CSV with `csv`).
pub fn cmd_label(
    spec: &str,
    budget: &SearchBudget,
    out: Option<&Path>,
    csv: bool,
) -> Result<CmdOutput> {
    let t0 = Instant::now();
    let (set, labeling, family_info) = if spec.contains(':') {
        let s = parse_connection_set(spec)?;
        let (l, fam) = label_connection_set(&s, budget)?;
        (s, l, fam)
    } else {
        let f = parse_family(spec)?;
        let l = label_family(&f, budget)?;
        (f.connection_set(), l, Some((f, 1)))
    };
    let kappa = verify_set(&set, &labeling)?.ok_or_else(|| {
        Error::NotDistanceMagic(format!("internal: labeler output failed verification on {set}"))
    })?;
    if let Some(path) = out {
        let text = if csv || path.extension().is_some_and(|e| e == "csv") {
            labeling.to_csv_string()
        } else {
            labeling.to_json_string()
        };
        std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display())))?;
    }
    let payload = json!({
        "set": set.to_string(),
        "n": set.order(),
        "kappa": kappa,
        "family": family_info.map(|(f, _)| f.to_string()),
        "multiplier": family_info.map(|(_, q)| q),
        "source": if family_info.is_some() { "construction" } else { "search" },
        "labeling": labeling.values(),
    });
    Ok(CmdOutput::one(
        Report::new(ReportKind::Label, spec, payload, t0.elapsed()),
        0,
    ))
}

/// `verify "n:a,b,c" --labeling file`: exit 0 when magic, 1 otherwise.
pub fn cmd_verify(input: &str, labeling_path: &Path) -> Result<CmdOutput> {
    let t0 = Instant::now();
    let s = parse_connection_set(input)?;
    let text = std::fs::read_to_string(labeling_path)
        .map_err(|e| Error::Parse(format!("reading {}: {e}", labeling_path.display())))?;
    let labeling = parse_labeling_text(&text)?;
    let kappa = verify_set(&s, &labeling)?;
    let payload = json!({
        "set": s.to_string(),
        "n": s.order(),
        "magic": kappa.is_some(),
        "kappa": kappa,
    });
    let exit = i32::from(kappa.is_none());
    Ok(CmdOutput::one(
        Report::new(ReportKind::Verify, input, payload, t0.elapsed()),
        exit,
    ))
}

/// Accept a labeling as a JSON array or two-column CSV, by sniffing.
pub fn parse_labeling_text(text: &str) -> Result<Labeling> {
    if text.trim_start().starts_with('[') {
        Labeling::from_json_str(text)
    } else {
        Labeling::from_csv_str(text)
    }
}

/// `search "n:a,b,c"`: exit 0 found, 1 exhausted, 3 budget.
pub fn cmd_search(input: &str, budget: &SearchBudget, symmetry: bool) -> Result<CmdOutput> {
    let t0 = Instant::now();
    let s = parse_connection_set(input)?;
    let outcome = search_labeling_with(&s, budget, symmetry)?;
    let (payload, exit) = match &outcome {
        SearchOutcome::Found(l) => {
            let kappa = verify_set(&s, l)?;
            (
                json!({
                    "set": s.to_string(),
                    "outcome": "found",
                    "kappa": kappa,
                    "labeling": l.values(),
                }),
                0,
            )
        }
        SearchOutcome::Exhausted => (
            json!({ "set": s.to_string(), "outcome": "exhausted" }),
            1,
        ),
        SearchOutcome::BudgetExceeded {
            nodes,
            depth_reached,
        } => (
            json!({
                "set": s.to_string(),
                "outcome": "budget-exceeded",
                "nodes": nodes,
                "depth_reached": depth_reached,
            }),
            3,
        ),
    };
    Ok(CmdOutput::one(
        Report::new(ReportKind::Search, input, payload, t0.elapsed()),
        exit,
    ))
}

/// `enumerate --n N [--families]`: the connected classes of order `N` up
/// to multiplier equivalence (with prefilter outcome and tag profile), or
/// the family instances of that order.
pub fn cmd_enumerate(n: i64, families: bool) -> Result<CmdOutput> {
    let t0 = Instant::now();
    let payload = if families {
        let fams: Vec<Value> = enumerate_families(n)
            .into_iter()
            .map(|f| {
                json!({
                    "family": f.to_string(),
                    "set": f.connection_set().to_string(),
                })
            })
            .collect();
        json!({ "n": n, "families": fams })
    } else {
        if n < 7 {
            return Err(Error::Precondition(format!("order must be >= 7, got {n}")));
        }
        let classes: Vec<Value> = enumerate_sets(n)
            .iter()
            .map(|s| {
                let adm = admissible_set(s);
                let mut types: Vec<&str> = Vec::new();
                for (tag, name) in [(TypeTag::T1, "T1"), (TypeTag::T2, "T2"), (TypeTag::T3, "T3")]
                {
                    if adm.iter().any(|c| c.has(tag)) {
                        types.push(name);
                    }
                }
                json!({
                    "set": s.to_string(),
                    "filter": candidate_filter(s).expect("enumerated sets are connected"),
                    "admissible_count": adm.len(),
                    "types_present": types,
                })
            })
            .collect();
        json!({ "n": n, "classes": classes })
    };
    Ok(CmdOutput::one(
        Report::new(ReportKind::Enumerate, n.to_string(), payload, t0.elapsed()),
        0,
    ))
}

/// `scan --nmax N`: one report per `(order, class)` comparing the
/// decision procedure against independent search.
pub fn cmd_scan(n_max: i64, budget: &SearchBudget, jobs: usize) -> Result<CmdOutput> {
    let t0 = Instant::now();
    let records = exhaustive_scan(n_max, budget, jobs)?;
    let elapsed = t0.elapsed();
    let reports = records
        .into_iter()
        .map(|r| {
            let input = r.set.clone();
            Report::new(
                ReportKind::Scan,
                input,
                serde_json::to_value(&r).expect("record serializes"),
                elapsed,
            )
        })
        .collect();
    Ok(CmdOutput { reports, exit: 0 })
}

/// `selftest`: run the built-in fixture suite; exit 0 iff everything
/// passes.
pub fn cmd_selftest() -> Result<CmdOutput> {
    let t0 = Instant::now();
    let fixtures = run_selftest();
    let failed: Vec<&crate::selftest::Fixture> = fixtures.iter().filter(|f| !f.passed).collect();
    let payload = json!({
        "passed": fixtures.len() - failed.len(),
        "failed": failed.len(),
        "failures": failed,
        "fixtures": fixtures,
    });
    let exit = i32::from(!failed.is_empty());
    Ok(CmdOutput::one(
        Report::new(ReportKind::Selftest, "selftest", payload, t0.elapsed()),
        exit,
    ))
}

/// A compact human-readable rendering of a report, for `--format table`.
pub fn render_table(report: &Report) -> String {
    let p = &report.payload;
    let mut out = String::new();
    match report.kind {
        ReportKind::Admissible => {
            out.push_str(&format!(
                "admissible characters of {}\n",
                p["set"].as_str().unwrap_or("?")
            ));
            out.push_str("    j  types        witness (s1,s2,s3)\n");
            if let Some(list) = p["admissible"].as_array() {
                for ch in list {
                    let types: Vec<String> = ch["types"]
                        .as_array()
                        .map(|a| a.iter().map(|t| t.as_str().unwrap_or("?").to_string()).collect())
                        .unwrap_or_default();
                    let wit = &ch["witnesses"][0]["assignment"];
                    out.push_str(&format!(
                        "{:>5}  {:<11}  {}\n",
                        ch["j"].as_i64().unwrap_or(-1),
                        types.join("+"),
                        wit
                    ));
                }
                if list.is_empty() {
                    out.push_str("  (empty)\n");
                }
            }
        }
        ReportKind::Classify | ReportKind::Verify | ReportKind::Search => {
            for key in ["set", "verdict", "reason", "family", "multiplier", "outcome", "magic", "kappa", "nodes"] {
                if !p[key].is_null() {
                    out.push_str(&format!("{key:>12}: {}\n", p[key]));
                }
            }
        }
        ReportKind::Label => {
            for key in ["set", "n", "kappa", "family", "source"] {
                if !p[key].is_null() {
                    out.push_str(&format!("{key:>12}: {}\n", p[key]));
                }
            }
            out.push_str(&format!("{:>12}: {}\n", "labeling", p["labeling"]));
        }
        ReportKind::Enumerate => {
            if let Some(classes) = p["classes"].as_array() {
                out.push_str(&format!("order {}: {} classes\n", p["n"], classes.len()));
                for c in classes {
                    out.push_str(&format!(
                        "  {:<16} filter={:<24} types={}\n",
                        c["set"].as_str().unwrap_or("?"),
                        c["filter"].to_string(),
                        c["types_present"]
                    ));
                }
            }
            if let Some(fams) = p["families"].as_array() {
                out.push_str(&format!("order {}: {} family instances\n", p["n"], fams.len()));
                for f in fams {
                    out.push_str(&format!(
                        "  {:<16} {}\n",
                        f["family"].as_str().unwrap_or("?"),
                        f["set"].as_str().unwrap_or("?")
                    ));
                }
            }
        }
        ReportKind::Scan => {
            out.push_str(&format!(
                "{:<16} filter={:<22} decide={:<8} search={:<10} agree={}\n",
                p["set"].as_str().unwrap_or("?"),
                p["filter"].to_string(),
                p["verdict"].as_str().unwrap_or("?"),
                p["search"].as_str().unwrap_or("?"),
                p["agree"]
            ));
        }
        ReportKind::Selftest => {
            out.push_str(&format!(
                "selftest: {} passed, {} failed\n",
                p["passed"], p["failed"]
            ));
            if let Some(failures) = p["failures"].as_array() {
                for f in failures {
                    out.push_str(&format!(
                        "  FAIL {}: {}\n",
                        f["name"].as_str().unwrap_or("?"),
                        f["detail"].as_str().unwrap_or("")
                    ));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_command_payload() {
        let out = cmd_admissible("24:1,2,3").unwrap();
        assert_eq!(out.exit, 0);
        let p = &out.reports[0].payload;
        let js: Vec<i64> = p["admissible"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["j"].as_i64().unwrap())
            .collect();
        assert_eq!(js, vec![3, 8, 9, 15, 16, 21]);
        // unnormalized input is echoed in canonical form
        let out = cmd_admissible("1540:2,385,1388").unwrap();
        assert_eq!(out.reports[0].payload["set"], "1540:2,152,385");
    }

    #[test]
    fn decide_exit_codes() {
        let budget = SearchBudget::nodes(1_000_000);
        assert_eq!(cmd_decide("1540:2,152,385", &budget).unwrap().exit, 0);
        assert_eq!(cmd_decide("7:1,2,3", &budget).unwrap().exit, 1);
        // a tiny budget on a mixed-profile graph gives unknown
        let tiny = SearchBudget::nodes(2);
        assert_eq!(cmd_decide("24:1,2,3", &tiny).unwrap().exit, 3);
        assert!(cmd_decide("junk", &budget).is_err());
    }

    #[test]
    fn label_and_verify_round_trip_through_files() {
        let budget = SearchBudget::nodes(1_000_000);
        let dir = std::env::temp_dir().join("circmagic-cli-test");
        std::fs::create_dir_all(&dir).unwrap();

        let json_path = dir.join("t2.json");
        let out = cmd_label("T2[5,7]", &budget, Some(&json_path), false).unwrap();
        assert_eq!(out.exit, 0);
        assert_eq!(out.reports[0].payload["kappa"], 318);
        let out = cmd_verify("105:1,6,34", &json_path).unwrap();
        assert_eq!(out.exit, 0);
        assert_eq!(out.reports[0].payload["kappa"], 318);

        let csv_path = dir.join("t2.csv");
        cmd_label("T2[5,7]", &budget, Some(&csv_path), true).unwrap();
        let out = cmd_verify("105:1,6,34", &csv_path).unwrap();
        assert_eq!(out.exit, 0);

        // the same labels are not magic for a different set
        let out = cmd_verify("105:1,2,34", &json_path).unwrap();
        assert_eq!(out.exit, 1);
    }

    #[test]
    fn search_command_exit_codes() {
        let budget = SearchBudget::nodes(1_000_000);
        assert_eq!(cmd_search("12:1,3,5", &budget, true).unwrap().exit, 0);
        assert_eq!(cmd_search("7:1,2,3", &budget, true).unwrap().exit, 1);
        assert_eq!(
            cmd_search("24:1,2,3", &SearchBudget::nodes(2), true)
                .unwrap()
                .exit,
            3
        );
    }

    #[test]
    fn enumerate_command() {
        let out = cmd_enumerate(24, false).unwrap();
        let classes = out.reports[0].payload["classes"].as_array().unwrap().len();
        assert!(classes >= 5);
        let out = cmd_enumerate(1540, true).unwrap();
        assert_eq!(out.reports[0].payload["families"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn scan_emits_one_report_per_class() {
        let out = cmd_scan(10, &SearchBudget::nodes(100_000), 1).unwrap();
        assert!(!out.reports.is_empty());
        for r in &out.reports {
            assert_ne!(r.payload["agree"], serde_json::json!(false));
        }
    }

    #[test]
    fn table_rendering_smoke() {
        let out = cmd_admissible("24:1,2,3").unwrap();
        let table = render_table(&out.reports[0]);
        assert!(table.contains("T1"));
        let out = cmd_enumerate(12, true).unwrap();
        assert!(render_table(&out.reports[0]).contains("Ml[3]"));
    }
}
