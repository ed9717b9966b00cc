//! Identity-level verification sweeps.
//!
//! Every sweep returns a [`VerificationReport`]; a report never throws on a
//! mismatch, it records `(n, expected, actual)` triples with exact decimal
//! values. The count identities are checked by two independent routes:
//! exhaustive enumeration at desk scale and series coefficients over the full
//! range.
//!
//! Sweeps start at `n = 1`: at `n = 0` the half-count formulas are not
//! integral (`po(0) = 1`), so weight zero is exercised by unit tests, not
//! asserted here.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::bipartition::{
    count_systems_bruteforce, diagram_to_residual, enumerate_systems_by_weight,
    residual_to_system,
};
use crate::colored::counts;
use crate::franklin::{classify_staircase, franklin_step, FranklinOutcome, HalvedEvenPartition};
use crate::is_square;
use crate::overpartition::count_odd_overpartitions;
use crate::partition::{
    enumerate_partitions, enumerate_strict_partitions, p_table, CountTable, ParityFilter,
};
use crate::qseries::{e_series, overline_po_series, signed_difference_series, SignWeight};

/// How a sweep computes its counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Enumeration,
    Series,
    Both,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Enumeration => "enumeration",
            Method::Series => "series",
            Method::Both => "both",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One recorded mismatch, with exact decimal values.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub n: u64,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification sweep. `status` is `Pass` exactly when
/// `failures` is empty; the elapsed time is excluded from JSON so identical
/// runs serialize identically.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub method: Method,
    pub range: (u64, u64),
    pub status: Status,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn finish(
        theorem_id: &str,
        method: Method,
        range: (u64, u64),
        failures: Vec<Failure>,
        started: Instant,
    ) -> Self {
        VerificationReport {
            theorem_id: theorem_id.to_string(),
            method,
            range,
            status: if failures.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            failures,
            elapsed: started.elapsed(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{:<10} method={:<11} range={}..={} status={} elapsed={:.3}s",
            self.theorem_id,
            self.method.to_string(),
            self.range.0,
            self.range.1,
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            self.elapsed.as_secs_f64(),
        )?;
        for fail in &self.failures {
            writeln!(
                f,
                "  n={}: expected {}, got {}",
                fail.n, fail.expected, fail.actual
            )?;
        }
        Ok(())
    }
}

/// Runs `check` for every `n` in `lo..=hi` on up to `jobs` worker threads
/// and returns all failures ordered by `n`. Each `n` is an independent task;
/// with `jobs <= 1` everything runs inline.
fn sweep<F>(lo: u64, hi: u64, jobs: usize, check: F) -> Vec<Failure>
where
    F: Fn(u64) -> Vec<Failure> + Sync,
{
    if hi < lo {
        return Vec::new();
    }
    let jobs = jobs.clamp(1, (hi - lo + 1) as usize);
    if jobs == 1 {
        return (lo..=hi).flat_map(check).collect();
    }
    let mut buckets: Vec<Vec<Failure>> = Vec::with_capacity(jobs);
    std::thread::scope(|scope| {
        let check = &check;
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                scope.spawn(move || {
                    let mut acc = Vec::new();
                    let mut n = lo + w as u64;
                    while n <= hi {
                        acc.extend(check(n));
                        n += jobs as u64;
                    }
                    acc
                })
            })
            .collect();
        for h in handles {
            buckets.push(h.join().expect("sweep worker panicked"));
        }
    });
    let mut all: Vec<Failure> = buckets.into_iter().flatten().collect();
    all.sort_by_key(|f| f.n);
    all
}

fn mismatch(failures: &mut Vec<Failure>, n: u64, label: &str, expected: &BigInt, actual: &BigInt) {
    if expected != actual {
        failures.push(Failure {
            n,
            expected: format!("{label} = {expected}"),
            actual: format!("{label} = {actual}"),
        });
    }
}

/// The square correction at `n`: 2 if `n` is a perfect square, else 0.
fn square_term(n: u64) -> BigInt {
    if is_square(n) {
        BigInt::from(2)
    } else {
        BigInt::from(0)
    }
}

fn parity_sign(n: u64) -> BigInt {
    if n % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// Checks the five count identities at `n` given
/// `(E, E0, E1, E2, E3, po)`; `route` tags the failure messages.
#[allow(clippy::too_many_arguments)]
fn check_e_identities(
    failures: &mut Vec<Failure>,
    route: &str,
    n: u64,
    e: &BigInt,
    e0: &BigInt,
    e1: &BigInt,
    e2: &BigInt,
    e3: &BigInt,
    po: &BigInt,
) {
    let sq = square_term(n);
    let signed_sq = &sq * parity_sign(n);
    mismatch(failures, n, &format!("[{route}] E({n})"), po, e);
    mismatch(
        failures,
        n,
        &format!("[{route}] 2*E0({n})"),
        &(po + &sq),
        &(e0 * 2),
    );
    mismatch(
        failures,
        n,
        &format!("[{route}] 2*E1({n})"),
        &(po - &sq),
        &(e1 * 2),
    );
    mismatch(
        failures,
        n,
        &format!("[{route}] 2*E2({n})"),
        &(po + &signed_sq),
        &(e2 * 2),
    );
    mismatch(
        failures,
        n,
        &format!("[{route}] 2*E3({n})"),
        &(po - &signed_sq),
        &(e3 * 2),
    );
}

/// Verifies `E(n) = po(n)` and the four half-count formulas with their
/// square corrections, for `1 <= n <= n_max`.
pub fn verify_theorem_e(n_max: u64, method: Method, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    if matches!(method, Method::Enumeration | Method::Both) {
        failures.extend(sweep(1, n_max, jobs, |n| {
            let mut fails = Vec::new();
            let c = counts(n);
            let po = BigInt::from(count_odd_overpartitions(n));
            check_e_identities(
                &mut fails,
                "enumeration",
                n,
                &BigInt::from(c.e),
                &BigInt::from(c.e0),
                &BigInt::from(c.e1),
                &BigInt::from(c.e2),
                &BigInt::from(c.e3),
                &po,
            );
            fails
        }));
    }
    if matches!(method, Method::Series | Method::Both) {
        let order = n_max as usize;
        let po = overline_po_series(order);
        let e = e_series(order);
        let da = signed_difference_series(SignWeight::EvenParts, order);
        let db = signed_difference_series(SignWeight::AllParts, order);
        for n in 1..=order {
            // 2*E0 = E + (E0-E1), and so on: the series route reaches the
            // individual class counts through the signed differences.
            let e0x2 = e.coeff(n) + da.coeff(n);
            let e1x2 = e.coeff(n) - da.coeff(n);
            let e2x2 = e.coeff(n) + db.coeff(n);
            let e3x2 = e.coeff(n) - db.coeff(n);
            let sq = square_term(n as u64);
            let signed_sq = &sq * parity_sign(n as u64);
            let mut fails = Vec::new();
            mismatch(
                &mut fails,
                n as u64,
                &format!("[series] E({n})"),
                po.coeff(n),
                e.coeff(n),
            );
            mismatch(
                &mut fails,
                n as u64,
                &format!("[series] 2*E0({n})"),
                &(po.coeff(n) + &sq),
                &e0x2,
            );
            mismatch(
                &mut fails,
                n as u64,
                &format!("[series] 2*E1({n})"),
                &(po.coeff(n) - &sq),
                &e1x2,
            );
            mismatch(
                &mut fails,
                n as u64,
                &format!("[series] 2*E2({n})"),
                &(po.coeff(n) + &signed_sq),
                &e2x2,
            );
            mismatch(
                &mut fails,
                n as u64,
                &format!("[series] 2*E3({n})"),
                &(po.coeff(n) - &signed_sq),
                &e3x2,
            );
            failures.extend(fails);
        }
    }
    VerificationReport::finish("thmE", method, (1, n_max), failures, started)
}

/// Verifies the signed difference identities
/// `E0(n)-E1(n) = 2*[n square]` and `E2(n)-E3(n) = 2*(-1)^n*[n square]`
/// for `1 <= n <= n_max`.
pub fn verify_theorem_q(n_max: u64, method: Method, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    if matches!(method, Method::Enumeration | Method::Both) {
        failures.extend(sweep(1, n_max, jobs, |n| {
            let mut fails = Vec::new();
            let c = counts(n);
            let da = BigInt::from(c.e0) - BigInt::from(c.e1);
            let db = BigInt::from(c.e2) - BigInt::from(c.e3);
            let sq = square_term(n);
            mismatch(
                &mut fails,
                n,
                &format!("[enumeration] E0({n})-E1({n})"),
                &sq,
                &da,
            );
            mismatch(
                &mut fails,
                n,
                &format!("[enumeration] E2({n})-E3({n})"),
                &(&sq * parity_sign(n)),
                &db,
            );
            fails
        }));
    }
    if matches!(method, Method::Series | Method::Both) {
        let order = n_max as usize;
        let da = signed_difference_series(SignWeight::EvenParts, order);
        let db = signed_difference_series(SignWeight::AllParts, order);
        for n in 1..=order {
            let sq = square_term(n as u64);
            mismatch(
                &mut failures,
                n as u64,
                &format!("[series] E0({n})-E1({n})"),
                &sq,
                da.coeff(n),
            );
            mismatch(
                &mut failures,
                n as u64,
                &format!("[series] E2({n})-E3({n})"),
                &(&sq * parity_sign(n as u64)),
                db.coeff(n),
            );
        }
    }
    VerificationReport::finish("thmQ", method, (1, n_max), failures, started)
}

/// Exercises the involution over every strict partition with circle sum up
/// to `circle_sum_max`: the involution property, weight preservation, the
/// part-count parity flip, and fixed points exactly at the pentagonal
/// staircases.
pub fn verify_franklin(circle_sum_max: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let failures = sweep(1, circle_sum_max, jobs, |total| {
        let mut fails = Vec::new();
        let mut fixed_found: Vec<(u64, crate::franklin::PentagonalSign)> = Vec::new();
        for mu in enumerate_strict_partitions(total, ParityFilter::Any) {
            let mu = HalvedEvenPartition::new(mu);
            let outcome = franklin_step(&mu).expect("nonempty by construction");
            match outcome {
                FranklinOutcome::Moved { image, .. } => {
                    if image.circle_sum() != mu.circle_sum() {
                        fails.push(Failure {
                            n: total,
                            expected: format!("circle sum {}", mu.circle_sum()),
                            actual: format!(
                                "circle sum {} after moving {:?}",
                                image.circle_sum(),
                                mu.parts()
                            ),
                        });
                    }
                    if image.len().abs_diff(mu.len()) != 1 {
                        fails.push(Failure {
                            n: total,
                            expected: "part count changed by 1".into(),
                            actual: format!(
                                "{} -> {} parts at {:?}",
                                mu.len(),
                                image.len(),
                                mu.parts()
                            ),
                        });
                    }
                    match franklin_step(&image) {
                        Ok(FranklinOutcome::Moved { image: back, .. }) if back == mu => {}
                        other => fails.push(Failure {
                            n: total,
                            expected: format!("involution back to {:?}", mu.parts()),
                            actual: format!("{other:?}"),
                        }),
                    }
                    if classify_staircase(&mu).is_some() {
                        fails.push(Failure {
                            n: total,
                            expected: format!("{:?} moves", mu.parts()),
                            actual: "classified as a staircase".into(),
                        });
                    }
                }
                FranklinOutcome::Fixed { m, sign } => {
                    if classify_staircase(&mu) != Some((m, sign)) {
                        fails.push(Failure {
                            n: total,
                            expected: format!("fixed point {:?} is a staircase", mu.parts()),
                            actual: format!("classify_staircase disagrees with ({m}, {sign:?})"),
                        });
                    }
                    fixed_found.push((m, sign));
                }
            }
        }
        // the fixed set at this circle sum must be exactly the pentagonal
        // staircases, one per (m, sign)
        let mut expected_fixed = Vec::new();
        for m in 1.. {
            let g_minus = m * (3 * m - 1) / 2;
            if g_minus > total {
                break;
            }
            if g_minus == total {
                expected_fixed.push((m, crate::franklin::PentagonalSign::Minus));
            }
            if m * (3 * m + 1) / 2 == total {
                expected_fixed.push((m, crate::franklin::PentagonalSign::Plus));
            }
        }
        fixed_found.sort_by_key(|&(m, s)| (m, s as u8));
        expected_fixed.sort_by_key(|&(m, s)| (m, s as u8));
        if fixed_found != expected_fixed {
            fails.push(Failure {
                n: total,
                expected: format!("fixed set {expected_fixed:?}"),
                actual: format!("fixed set {fixed_found:?}"),
            });
        }
        fails
    });
    VerificationReport::finish(
        "franklin",
        Method::Enumeration,
        (1, circle_sum_max),
        failures,
        started,
    )
}

/// Roundtrip sweep caps; these match the property grids the library is
/// validated on.
const ROUNDTRIP_WEIGHT_MAX: u64 = 40;
const ROUNDTRIP_RESIDUAL_MAX: u64 = 20;

/// Checks the count law `#systems(c, d) = p(d - c(c+1)/2)` over the full
/// `(c, d)` grid, plus both bijection roundtrips. `table` supplies the
/// reference values of `p`; a table that does not cover `d_max` is replaced
/// by a freshly built one.
pub fn verify_bijection(
    c_max: u64,
    d_max: u64,
    jobs: usize,
    table: &CountTable,
) -> VerificationReport {
    let started = Instant::now();
    let rebuilt;
    let table = if table.n_max() < d_max {
        rebuilt = p_table(d_max);
        &rebuilt
    } else {
        table
    };
    let mut failures = Vec::new();

    for c in 0..=c_max {
        failures.extend(sweep(0, d_max, jobs, |d| {
            let mut fails = Vec::new();
            let got = BigInt::from(count_systems_bruteforce(c, d));
            let triangle = c * (c + 1) / 2;
            let expected = BigInt::from(
                table
                    .get(d as i64 - triangle as i64)
                    .expect("d <= table size"),
            );
            mismatch(
                &mut fails,
                d,
                &format!("[count] systems(c={c}, d={d})"),
                &expected,
                &got,
            );
            fails
        }));
    }

    // roundtrip A: system -> diagram -> residual -> system
    failures.extend(sweep(0, ROUNDTRIP_WEIGHT_MAX, jobs, |n| {
        let mut fails = Vec::new();
        for sys in enumerate_systems_by_weight(n) {
            match diagram_to_residual(&sys.to_diagram()) {
                Ok((c, mu)) => {
                    let back = residual_to_system(c, &mu, sys.orientation());
                    if back != sys {
                        fails.push(Failure {
                            n,
                            expected: format!("roundtrip back to L={} R={}", sys.l(), sys.r()),
                            actual: format!("L={} R={}", back.l(), back.r()),
                        });
                    }
                }
                Err(e) => fails.push(Failure {
                    n,
                    expected: "a well-formed diagram".into(),
                    actual: format!("{e} for L={} R={}", sys.l(), sys.r()),
                }),
            }
        }
        fails
    }));

    // roundtrip B: (c, mu) -> system -> diagram -> (c, mu)
    for c in 0..=c_max {
        failures.extend(sweep(0, ROUNDTRIP_RESIDUAL_MAX, jobs, |w| {
            let mut fails = Vec::new();
            for mu in enumerate_partitions(w) {
                let sys = residual_to_system(c, &mu, crate::bipartition::Orientation::Normal);
                match diagram_to_residual(&sys.to_diagram()) {
                    Ok((c2, mu2)) if c2 == c && mu2 == mu => {}
                    other => fails.push(Failure {
                        n: w,
                        expected: format!("(c={c}, mu={mu})"),
                        actual: format!("{other:?}"),
                    }),
                }
            }
            fails
        }));
    }

    VerificationReport::finish(
        "bijection",
        Method::Enumeration,
        (0, d_max),
        failures,
        started,
    )
}

/// Confirms that every series coefficient equals its enumeration
/// counterpart for `0 <= n <= n_max`.
pub fn cross_check(n_max: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let order = n_max as usize;
    let po = overline_po_series(order);
    let e = e_series(order);
    let da = signed_difference_series(SignWeight::EvenParts, order);
    let db = signed_difference_series(SignWeight::AllParts, order);
    let failures = sweep(0, n_max, jobs, |n| {
        let mut fails = Vec::new();
        let c = counts(n);
        let e_enum = BigInt::from(c.e);
        let da_enum = BigInt::from(c.e0) - BigInt::from(c.e1);
        let db_enum = BigInt::from(c.e2) - BigInt::from(c.e3);
        let po_enum = BigInt::from(count_odd_overpartitions(n));
        let i = n as usize;
        mismatch(&mut fails, n, &format!("E({n})"), &e_enum, e.coeff(i));
        mismatch(&mut fails, n, &format!("po({n})"), &po_enum, po.coeff(i));
        mismatch(
            &mut fails,
            n,
            &format!("E0({n})-E1({n})"),
            &da_enum,
            da.coeff(i),
        );
        mismatch(
            &mut fails,
            n,
            &format!("E2({n})-E3({n})"),
            &db_enum,
            db.coeff(i),
        );
        fails
    });
    VerificationReport::finish("crosscheck", Method::Both, (0, n_max), failures, started)
}
