//! Report envelope and bit-stable emission.
//!
//! Floats are printed with 17 significant digits (`{:.16e}`), which
//! round-trips every f64 exactly; JSON keys follow struct declaration
//! order. Identical config and seed therefore produce byte-identical
//! output.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// One named check with its measured value and the tolerance it was held to.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub value: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "report-only")]
    ReportOnly,
}

impl Check {
    /// Pass iff value ≤ tolerance.
    pub fn bounded(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            status: if value <= tolerance && value.is_finite() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            value,
            tolerance,
        }
    }

    /// Pass iff value ≥ threshold (for demonstrations that a residual is
    /// genuinely large); the threshold is recorded in `tolerance`.
    pub fn exceeds(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            status: if value >= threshold && value.is_finite() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            value,
            tolerance: threshold,
        }
    }

    /// Emitted value with no pass/fail semantics; tolerance recorded as 0.
    pub fn report_only(name: impl Into<String>, value: f64) -> Self {
        Self {
            name: name.into(),
            status: CheckStatus::ReportOnly,
            value,
            tolerance: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

/// The envelope every command emits.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEnvelope<C, P> {
    pub tool_version: String,
    pub config: C,
    pub results: P,
    pub checks: Vec<Check>,
}

impl<C, P> ReportEnvelope<C, P> {
    pub fn new(config: C, results: P, checks: Vec<Check>) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            results,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// 17 significant digits, enough to reconstruct the exact f64.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize any payload as deterministic JSON with a trailing newline.
pub fn emit_json<T: Serialize>(value: &T, writer: &mut dyn Write) -> Result<()> {
    let mut ser = serde_json::Serializer::with_formatter(&mut *writer, SciFormatter);
    value
        .serialize(&mut ser)
        .map_err(|e| crate::Error::Domain(format!("serialization failed: {e}")))?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    emit_json(value, &mut buf)?;
    Ok(buf)
}

/// CSV with a fixed header; every float cell uses [`fmt_float`].
pub fn emit_csv(
    header: &str,
    rows: impl IntoIterator<Item = Vec<String>>,
    writer: &mut dyn Write,
) -> Result<()> {
    writeln!(writer, "{header}")?;
    for row in rows {
        writeln!(writer, "{}", row.join(","))?;
    }
    Ok(())
}

/// The universal check-list CSV used by commands without a tabular payload.
pub fn checks_csv(checks: &[Check], writer: &mut dyn Write) -> Result<()> {
    let rows = checks.iter().map(|c| {
        vec![
            c.name.clone(),
            match c.status {
                CheckStatus::Pass => "pass".to_string(),
                CheckStatus::Fail => "fail".to_string(),
                CheckStatus::ReportOnly => "report-only".to_string(),
            },
            fmt_float(c.value),
            fmt_float(c.tolerance),
        ]
    });
    emit_csv("name,status,value,tolerance", rows, writer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for &x in &[
            0.6,
            1.0 / 3.0,
            6.02e23,
            -1.25e-300,
            0.4509031,
            17.008934173580788,
        ] {
            let s = fmt_float(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }

    #[test]
    fn json_is_deterministic_and_parseable() {
        #[derive(Serialize)]
        struct Payload {
            a: f64,
            b: Vec<f64>,
            c: u32,
        }
        let p = Payload {
            a: 0.1 + 0.2,
            b: vec![1.0, 2.5e-10],
            c: 7,
        };
        let one = json_bytes(&p).unwrap();
        let two = json_bytes(&p).unwrap();
        assert_eq!(one, two);
        let parsed: serde_json::Value = serde_json::from_slice(&one).unwrap();
        assert_eq!(parsed["c"], 7);
        assert!((parsed["a"].as_f64().unwrap() - (0.1 + 0.2)).abs() == 0.0);
    }

    #[test]
    fn envelope_round_trips_losslessly() {
        #[derive(Debug, Serialize, Deserialize, PartialEq)]
        struct Cfg {
            n: u32,
            step: f64,
        }
        let env = ReportEnvelope::new(
            Cfg { n: 3, step: 5e-4 },
            vec![1.0f64 / 7.0],
            vec![
                Check::bounded("alpha", 1e-12, 1e-10),
                Check::report_only("beta", 0.25),
            ],
        );
        let bytes = json_bytes(&env).unwrap();
        let back: ReportEnvelope<Cfg, Vec<f64>> = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(back.config, env.config);
        assert_eq!(back.results, env.results);
        assert_eq!(back.checks.len(), 2);
        assert_eq!(back.checks[0].value, 1e-12);
        assert!(back.all_passed());
    }

    #[test]
    fn check_constructors() {
        assert!(Check::bounded("x", 0.5, 1.0).passed());
        assert!(!Check::bounded("x", 2.0, 1.0).passed());
        assert!(!Check::bounded("x", f64::NAN, 1.0).passed());
        assert!(Check::exceeds("x", 0.5, 0.01).passed());
        assert!(!Check::exceeds("x", 0.001, 0.01).passed());
        assert!(Check::report_only("x", f64::MAX).passed());
    }

    #[test]
    fn csv_shape() {
        let checks = vec![Check::bounded("a", 1.0, 2.0)];
        let mut buf = Vec::new();
        checks_csv(&checks, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "name,status,value,tolerance");
        assert!(lines.next().unwrap().starts_with("a,pass,1.0000000000000000e0"));
    }
}
