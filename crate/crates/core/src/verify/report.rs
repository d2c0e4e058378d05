use std::fmt::Write as _;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use super::{CheckSpec, VerifyError};

/// Parameter list: ordered `(key, value)` pairs, serialized as `[key, value]`.
pub type Params = Vec<(String, i64)>;

/// A point where the two sides of a check disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u64,
    pub params: Params,
    pub lhs: i128,
    pub rhs: i128,
}

/// At most this many counterexamples are kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub spec: CheckSpec,
    pub paper_ref: &'static str,
    pub tested: u64,
    pub skipped: u64,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    name: &'a str,
    paper_ref: &'a str,
    n_max: u64,
    params: &'a Params,
    tested: u64,
    skipped: u64,
    passed: bool,
    counterexamples: &'a [Counterexample],
}

impl CheckReport {
    pub fn name(&self) -> &str {
        &self.spec.name
    }

    /// One JSON object, fields in a fixed order, no trailing newline.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonReport {
            name: &self.spec.name,
            paper_ref: self.paper_ref,
            n_max: self.spec.n_max,
            params: &self.spec.params,
            tested: self.tested,
            skipped: self.skipped,
            passed: self.passed,
            counterexamples: &self.counterexamples,
        })
        .expect("report serializes")
    }
}

/// Accumulates comparisons for one check.
#[derive(Debug, Default)]
pub(crate) struct Sweep {
    tested: u64,
    skipped: u64,
    counterexamples: Vec<Counterexample>,
}

impl Sweep {
    /// Compares `lhs` with `rhs`; a missing side means the point lies beyond
    /// the available series and is counted as skipped.
    pub(crate) fn compare(
        &mut self,
        n: u64,
        params: &[(&str, i64)],
        lhs: Option<i128>,
        rhs: Option<i128>,
    ) {
        let (Some(lhs), Some(rhs)) = (lhs, rhs) else {
            self.skipped += 1;
            return;
        };
        self.tested += 1;
        if lhs != rhs && self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                n,
                params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
                lhs,
                rhs,
            });
        }
    }

    pub(crate) fn finish(
        self,
        spec: &CheckSpec,
        paper_ref: &'static str,
    ) -> Result<CheckReport, VerifyError> {
        if self.tested == 0 {
            return Err(VerifyError::EmptyRange(spec.name.clone()));
        }
        Ok(CheckReport {
            spec: spec.clone(),
            paper_ref,
            tested: self.tested,
            skipped: self.skipped,
            passed: self.counterexamples.is_empty(),
            counterexamples: self.counterexamples,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(VerifyError::Config(format!("unknown format {other:?}"))),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn params_text(params: &[(String, i64)]) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders reports; JSON is one object per line.
pub fn render(reports: &[CheckReport], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            for r in reports {
                out.push_str(&r.to_json());
                out.push('\n');
            }
        }
        OutputFormat::Csv => {
            out.push_str("name,paper_ref,n_max,params,tested,skipped,passed,counterexamples\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    csv_field(r.name()),
                    csv_field(r.paper_ref),
                    r.spec.n_max,
                    csv_field(&params_text(&r.spec.params)),
                    r.tested,
                    r.skipped,
                    r.passed,
                    r.counterexamples.len()
                );
            }
        }
        OutputFormat::Text => {
            for r in reports {
                let _ = writeln!(
                    out,
                    "{} {:<24} tested={} skipped={} n_max={} {} [{}]",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name(),
                    r.tested,
                    r.skipped,
                    r.spec.n_max,
                    params_text(&r.spec.params),
                    r.paper_ref
                );
                for c in &r.counterexamples {
                    let _ = writeln!(
                        out,
                        "    n={} {} lhs={} rhs={}",
                        c.n,
                        params_text(&c.params),
                        c.lhs,
                        c.rhs
                    );
                }
            }
        }
    }
    out
}

pub fn write_reports<W: Write>(
    reports: &[CheckReport],
    format: OutputFormat,
    mut w: W,
) -> io::Result<()> {
    w.write_all(render(reports, format).as_bytes())
}
