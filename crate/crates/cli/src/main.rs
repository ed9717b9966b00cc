//! `twocolor`: counting, enumeration, series coefficients, involution and
//! bijection demos, and identity verification, with machine-readable output.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
//! error. Results go to stdout, diagnostics to stderr.

mod output;
mod ptable;

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use twocolor::bipartition::{build_system, diagram_to_residual, residual_to_system, Orientation};
use twocolor::colored::{counts, enumerate_e};
use twocolor::franklin::{franklin_step, halve_even, FranklinOutcome};
use twocolor::overpartition::{count_odd_overpartitions, enumerate_odd_overpartitions};
use twocolor::partition::{Partition, StrictPartition};
use twocolor::qseries::{
    e_series, overline_po_series, signed_difference_series, SignWeight, TruncatedSeries,
};
use twocolor::verify::{
    cross_check, verify_bijection, verify_franklin, verify_theorem_e, verify_theorem_q, Method,
    VerificationReport,
};

use output::{BipartitionOut, CountOut, FixedOut, Format, FranklinOut, InvertOut, OrbitOut};

/// Largest weight accepted by enumeration-backed commands.
const ENUMERATION_CAP: u64 = 60;
/// Largest truncation order accepted by series-backed commands.
const SERIES_CAP: u64 = 10_000;
/// Caps and defaults for the verification sweeps.
const CROSSCHECK_CAP: u64 = 40;
const FRANKLIN_CAP: u64 = 60;
const BIJECTION_D_CAP: u64 = 30;
const BIJECTION_C_MAX: u64 = 5;
const DEFAULT_ENUMERATION_SWEEP: u64 = 60;
const DEFAULT_SERIES_SWEEP: u64 = 2000;
const DEFAULT_FRANKLIN_SWEEP: u64 = 40;
const DEFAULT_BIJECTION_D: u64 = 25;
const DEFAULT_CROSSCHECK: u64 = 40;

#[derive(Parser)]
#[command(
    name = "twocolor",
    version,
    about = "Exact counting and verification for two-colored partitions and odd overpartitions"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// p(n) table cache file (overrides the TWOCOLOR_CACHE_DIR directory)
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker threads for verification sweeps (default: all processors)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print E(n), the four class counts, and po(n)
    Count {
        #[arg(long)]
        n: u64,
    },
    /// List partitions, one JSON array per line
    Enumerate {
        #[arg(value_enum)]
        kind: EnumerateKind,
        #[arg(long)]
        n: u64,
    },
    /// Print series coefficients for 0..=max-n
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(long = "max-n", default_value_t = DEFAULT_SERIES_SWEEP)]
        max_n: u64,
    },
    /// Apply the involution to a partition of distinct even parts
    Franklin {
        /// Comma-separated even parts, decreasing, e.g. 10,8,4,2
        #[arg(long)]
        even: String,
        /// Print the full 2-cycle or fixed-point certificate
        #[arg(long)]
        orbit: bool,
    },
    /// Concatenation diagram of a bi-partition system, or its inverse
    Bipartition {
        /// Blue odd parts, comma-separated, decreasing
        #[arg(long)]
        beta: Option<String>,
        /// Green odd parts, comma-separated, decreasing
        #[arg(long)]
        alpha: Option<String>,
        /// Rebuild the system from a difference C and residual partition MU
        /// (comma-separated; pass "" for the empty partition)
        #[arg(long, num_args = 2, value_names = ["C", "MU"], conflicts_with_all = ["beta", "alpha"])]
        invert: Option<Vec<String>>,
    },
    /// Run an identity verification sweep
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Sweep bound; defaults depend on target and method
        #[arg(long = "max-n")]
        max_n: Option<u64>,
        #[arg(long, value_enum, default_value_t = MethodArg::Enumeration)]
        method: MethodArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    #[value(name = "E")]
    E,
    #[value(name = "po")]
    Po,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    #[value(name = "E")]
    E,
    #[value(name = "po")]
    Po,
    #[value(name = "e0-e1")]
    E0MinusE1,
    #[value(name = "e2-e3")]
    E2MinusE3,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    #[value(name = "thmE")]
    ThmE,
    #[value(name = "thmQ")]
    ThmQ,
    #[value(name = "franklin")]
    Franklin,
    #[value(name = "bijection")]
    Bijection,
    #[value(name = "crosscheck")]
    CrossCheck,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum MethodArg {
    Enumeration,
    Series,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Enumeration => Method::Enumeration,
            MethodArg::Series => Method::Series,
            MethodArg::Both => Method::Both,
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    let line = e
                        .to_string()
                        .lines()
                        .find(|l| !l.trim().is_empty())
                        .unwrap_or("invalid arguments")
                        .to_string();
                    eprintln!("{line}");
                    2
                }
            };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32, String> {
    let jobs = cli.jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    if jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Count { n } => {
            require_at_most(n, ENUMERATION_CAP, "--n")?;
            let c = counts(n);
            let po = count_odd_overpartitions(n);
            let row = CountOut {
                n,
                e: c.e.to_string(),
                e0: c.e0.to_string(),
                e1: c.e1.to_string(),
                e2: c.e2.to_string(),
                e3: c.e3.to_string(),
                po: po.to_string(),
            };
            row.write(cli.format, &mut out)?;
            0
        }
        Command::Enumerate { kind, n } => {
            require_at_most(n, ENUMERATION_CAP, "--n")?;
            match kind {
                EnumerateKind::E => {
                    for p in enumerate_e(n) {
                        writeln!(out, "{}", to_json(&p)?).map_err(io_msg)?;
                    }
                }
                EnumerateKind::Po => {
                    for p in enumerate_odd_overpartitions(n) {
                        writeln!(out, "{}", to_json(&p)?).map_err(io_msg)?;
                    }
                }
            }
            0
        }
        Command::Series { kind, max_n } => {
            require_at_most(max_n, SERIES_CAP, "--max-n")?;
            let order = max_n as usize;
            let series: TruncatedSeries = match kind {
                SeriesKind::E => e_series(order),
                SeriesKind::Po => overline_po_series(order),
                SeriesKind::E0MinusE1 => signed_difference_series(SignWeight::EvenParts, order),
                SeriesKind::E2MinusE3 => signed_difference_series(SignWeight::AllParts, order),
            };
            output::write_series(&series, cli.format, &mut out)?;
            0
        }
        Command::Franklin { even, orbit } => {
            let evens = parse_strict(&even, "--even")?;
            let mu = halve_even(&evens).map_err(|e| e.to_string())?;
            if mu.is_empty() {
                return Err("--even needs at least one part".into());
            }
            let outcome = franklin_step(&mu).map_err(|e| e.to_string())?;
            let row = match &outcome {
                FranklinOutcome::Moved { case, image } => FranklinOut {
                    input: evens.parts().to_vec(),
                    case: Some(*case),
                    image: Some(image.to_even().parts().to_vec()),
                    fixed: None,
                },
                FranklinOutcome::Fixed { m, sign } => FranklinOut {
                    input: evens.parts().to_vec(),
                    case: None,
                    image: None,
                    fixed: Some(FixedOut {
                        m: *m,
                        sign: *sign,
                        circle_sum: mu.circle_sum(),
                        staircase: mu.parts().to_vec(),
                    }),
                },
            };
            if orbit {
                OrbitOut::from_outcome(&row, &outcome).write(cli.format, &mut out)?;
            } else {
                row.write(cli.format, &mut out)?;
            }
            0
        }
        Command::Bipartition {
            beta,
            alpha,
            invert,
        } => {
            if let Some(invert) = invert {
                let c: u64 = invert[0]
                    .parse()
                    .map_err(|_| format!("bad difference {:?}", invert[0]))?;
                let mu_parts = parse_parts(&invert[1], "MU")?;
                let mu = Partition::new(mu_parts).map_err(|e| format!("MU: {e}"))?;
                let sys = residual_to_system(c, &mu, Orientation::Normal);
                let row = InvertOut {
                    c,
                    residual: mu.parts().to_vec(),
                    l: sys.l().parts().to_vec(),
                    r: sys.r().parts().to_vec(),
                };
                row.write(cli.format, &mut out)?;
            } else {
                let beta = parse_strict(beta.as_deref().unwrap_or(""), "--beta")?;
                let alpha = parse_strict(alpha.as_deref().unwrap_or(""), "--alpha")?;
                let sys = build_system(&beta, &alpha).map_err(|e| e.to_string())?;
                let (d, t) = sys.d_and_t();
                let diagram = sys.to_diagram();
                let (_, residual) = diagram_to_residual(&diagram).map_err(|e| e.to_string())?;
                let row = BipartitionOut {
                    c: sys.c(),
                    d,
                    t,
                    rows: diagram.rows.clone(),
                    residual: residual.parts().to_vec(),
                };
                row.write(cli.format, &mut out)?;
            }
            0
        }
        Command::Verify {
            target,
            max_n,
            method,
        } => {
            let report = run_verify(target, max_n, method, jobs, cli.cache.as_deref())?;
            output::write_report(&report, cli.format, &mut out)?;
            if report.passed() {
                0
            } else {
                1
            }
        }
    };
    out.flush().map_err(io_msg)?;
    Ok(code)
}

fn run_verify(
    target: VerifyTarget,
    max_n: Option<u64>,
    method: MethodArg,
    jobs: usize,
    cache: Option<&std::path::Path>,
) -> Result<VerificationReport, String> {
    let default_sweep = if method == MethodArg::Series {
        DEFAULT_SERIES_SWEEP
    } else {
        DEFAULT_ENUMERATION_SWEEP
    };
    Ok(match target {
        VerifyTarget::ThmE | VerifyTarget::ThmQ => {
            let n_max = max_n.unwrap_or(default_sweep);
            if n_max < 1 {
                return Err("--max-n must be at least 1".into());
            }
            if method != MethodArg::Series {
                require_at_most(n_max, ENUMERATION_CAP, "--max-n (enumeration)")?;
            } else {
                require_at_most(n_max, SERIES_CAP, "--max-n")?;
            }
            match target {
                VerifyTarget::ThmE => verify_theorem_e(n_max, method.into(), jobs),
                _ => verify_theorem_q(n_max, method.into(), jobs),
            }
        }
        VerifyTarget::Franklin => {
            let s_max = max_n.unwrap_or(DEFAULT_FRANKLIN_SWEEP);
            require_at_most(s_max, FRANKLIN_CAP, "--max-n")?;
            verify_franklin(s_max, jobs)
        }
        VerifyTarget::Bijection => {
            let d_max = max_n.unwrap_or(DEFAULT_BIJECTION_D);
            require_at_most(d_max, BIJECTION_D_CAP, "--max-n")?;
            let table = ptable::load_or_build(cache, d_max)?;
            verify_bijection(BIJECTION_C_MAX, d_max, jobs, &table)
        }
        VerifyTarget::CrossCheck => {
            let n_max = max_n.unwrap_or(DEFAULT_CROSSCHECK);
            require_at_most(n_max, CROSSCHECK_CAP, "--max-n")?;
            cross_check(n_max, jobs)
        }
    })
}

fn require_at_most(value: u64, cap: u64, what: &str) -> Result<(), String> {
    if value > cap {
        Err(format!("{what} must be at most {cap} (got {value})"))
    } else {
        Ok(())
    }
}

fn parse_parts(s: &str, what: &str) -> Result<Vec<u64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| format!("{what}: bad part {tok:?}"))
        })
        .collect()
}

fn parse_strict(s: &str, what: &str) -> Result<StrictPartition, String> {
    StrictPartition::new(parse_parts(s, what)?).map_err(|e| format!("{what}: {e}"))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn io_msg(e: std::io::Error) -> String {
    e.to_string()
}
