//! Output rows and formatting. JSON keys are emitted in fixed order and all
//! counts are decimal strings, so identical invocations are byte-identical.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use twocolor::franklin::{FranklinCase, FranklinOutcome, PentagonalSign};
use twocolor::qseries::TruncatedSeries;
use twocolor::verify::VerificationReport;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

type OutResult = Result<(), String>;

fn emit(out: &mut impl Write, s: String) -> OutResult {
    writeln!(out, "{s}").map_err(|e| e.to_string())
}

fn json_line<T: Serialize>(value: &T, out: &mut impl Write) -> OutResult {
    emit(out, serde_json::to_string(value).map_err(|e| e.to_string())?)
}

fn csv_unsupported() -> OutResult {
    Err("csv output is not supported for this subcommand".into())
}

fn join(parts: &[u64]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
pub struct CountOut {
    pub n: u64,
    #[serde(rename = "E")]
    pub e: String,
    #[serde(rename = "E0")]
    pub e0: String,
    #[serde(rename = "E1")]
    pub e1: String,
    #[serde(rename = "E2")]
    pub e2: String,
    #[serde(rename = "E3")]
    pub e3: String,
    pub po: String,
}

impl CountOut {
    pub fn write(&self, format: Format, out: &mut impl Write) -> OutResult {
        match format {
            Format::Text => emit(
                out,
                format!(
                    "E={} E0={} E1={} E2={} E3={} po={}",
                    self.e, self.e0, self.e1, self.e2, self.e3, self.po
                ),
            ),
            Format::Json => json_line(self, out),
            Format::Csv => {
                emit(out, "n,E,E0,E1,E2,E3,po".into())?;
                emit(
                    out,
                    format!(
                        "{},{},{},{},{},{},{}",
                        self.n, self.e, self.e0, self.e1, self.e2, self.e3, self.po
                    ),
                )
            }
        }
    }
}

#[derive(Serialize)]
pub struct BipartitionOut {
    pub c: u64,
    pub d: u64,
    pub t: u64,
    pub rows: Vec<u64>,
    pub residual: Vec<u64>,
}

impl BipartitionOut {
    pub fn write(&self, format: Format, out: &mut impl Write) -> OutResult {
        match format {
            Format::Text => emit(
                out,
                format!(
                    "c={} d={} t={} rows={} residual={}",
                    self.c,
                    self.d,
                    self.t,
                    join(&self.rows),
                    join(&self.residual)
                ),
            ),
            Format::Json => json_line(self, out),
            Format::Csv => csv_unsupported(),
        }
    }
}

#[derive(Serialize)]
pub struct InvertOut {
    pub c: u64,
    pub residual: Vec<u64>,
    pub l: Vec<u64>,
    pub r: Vec<u64>,
}

impl InvertOut {
    pub fn write(&self, format: Format, out: &mut impl Write) -> OutResult {
        match format {
            Format::Text => emit(
                out,
                format!(
                    "c={} residual={} L={} R={}",
                    self.c,
                    join(&self.residual),
                    join(&self.l),
                    join(&self.r)
                ),
            ),
            Format::Json => json_line(self, out),
            Format::Csv => csv_unsupported(),
        }
    }
}

#[derive(Serialize)]
pub struct FixedOut {
    pub m: u64,
    pub sign: PentagonalSign,
    pub circle_sum: u64,
    pub staircase: Vec<u64>,
}

#[derive(Serialize)]
pub struct FranklinOut {
    pub input: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<FranklinCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed: Option<FixedOut>,
}

impl FranklinOut {
    pub fn write(&self, format: Format, out: &mut impl Write) -> OutResult {
        match format {
            Format::Text => match (&self.case, &self.image, &self.fixed) {
                (Some(case), Some(image), _) => {
                    emit(out, format!("case={case} image={}", join(image)))
                }
                (_, _, Some(fixed)) => emit(
                    out,
                    format!(
                        "fixed m={} sign={} circle_sum={} staircase={}",
                        fixed.m,
                        fixed.sign,
                        fixed.circle_sum,
                        join(&fixed.staircase)
                    ),
                ),
                _ => unreachable!("either a move or a fixed point"),
            },
            Format::Json => json_line(self, out),
            Format::Csv => csv_unsupported(),
        }
    }
}

#[derive(Serialize)]
pub struct OrbitOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<FranklinCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed: Option<FixedOut>,
}

impl OrbitOut {
    /// The 2-cycle `{input, image}` for a move, or the fixed-point
    /// certificate.
    pub fn from_outcome(row: &FranklinOut, outcome: &FranklinOutcome) -> Self {
        match outcome {
            FranklinOutcome::Moved { case, image } => OrbitOut {
                orbit: Some(vec![
                    row.input.clone(),
                    image.to_even().parts().to_vec(),
                ]),
                case: Some(*case),
                fixed: None,
            },
            FranklinOutcome::Fixed { .. } => OrbitOut {
                orbit: None,
                case: None,
                fixed: row.fixed.as_ref().map(|f| FixedOut {
                    m: f.m,
                    sign: f.sign,
                    circle_sum: f.circle_sum,
                    staircase: f.staircase.clone(),
                }),
            },
        }
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> OutResult {
        match format {
            Format::Text => match (&self.orbit, &self.case, &self.fixed) {
                (Some(orbit), Some(case), _) => emit(
                    out,
                    format!("orbit={} <-> {} case={case}", join(&orbit[0]), join(&orbit[1])),
                ),
                (_, _, Some(fixed)) => emit(
                    out,
                    format!(
                        "fixed m={} sign={} circle_sum={} staircase={}",
                        fixed.m,
                        fixed.sign,
                        fixed.circle_sum,
                        join(&fixed.staircase)
                    ),
                ),
                _ => unreachable!("either a 2-cycle or a fixed point"),
            },
            Format::Json => json_line(self, out),
            Format::Csv => csv_unsupported(),
        }
    }
}

pub fn write_series(
    series: &TruncatedSeries,
    format: Format,
    out: &mut impl Write,
) -> OutResult {
    match format {
        Format::Text => {
            for (n, coeff) in series.coeffs().iter().enumerate() {
                emit(out, format!("{n} {coeff}"))?;
            }
            Ok(())
        }
        Format::Csv => {
            emit(out, "n,coeff".into())?;
            for (n, coeff) in series.coeffs().iter().enumerate() {
                emit(out, format!("{n},{coeff}"))?;
            }
            Ok(())
        }
        Format::Json => {
            let strings: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            json_line(&strings, out)
        }
    }
}

pub fn write_report(
    report: &VerificationReport,
    format: Format,
    out: &mut impl Write,
) -> OutResult {
    match format {
        Format::Text => write!(out, "{report}").map_err(|e| e.to_string()),
        Format::Json => json_line(report, out),
        Format::Csv => {
            emit(out, "theorem_id,method,range_lo,range_hi,status,failures".into())?;
            emit(
                out,
                format!(
                    "{},{},{},{},{},{}",
                    report.theorem_id,
                    report.method,
                    report.range.0,
                    report.range.1,
                    if report.passed() { "pass" } else { "fail" },
                    report.failures.len()
                ),
            )
        }
    }
}
