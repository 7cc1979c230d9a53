//! End-to-end verification sweep.
//!
//! Each check yields a [`CheckRecord`]. Records are produced in a fixed
//! order and their content depends only on the options, never on the number
//! of workers; only `runtime_ms` varies between runs.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::charsums::{
    additive_char_sum, gauss_quadratic, gauss_quadratic_direct, kloosterman_bound_scan,
    kloosterman_counts, kloosterman_weight_bridge, power_sum_sides, EisensteinInt,
};
use crate::codes::{
    closed_form_distribution, construct_family, dual, hamming_weight, intersection_dimension,
    trace_codeword, verify_bch_bound, weight_distribution_exhaustive, weight_distribution_trace,
    Family, TraceParams, WeightDistribution, DEFAULT_MAX_DIMENSION,
};
use crate::cosets::{claimed_attainment, coset, delta_formula, top_acl_oracle, MAX_SCAN_DEGREE};
use crate::field::{Elem, Field};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported for information; never affects the overall status.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub claim: String,
    pub params: Value,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    fn new(records: Vec<CheckRecord>) -> Self {
        let pass = records.iter().all(|r| r.status != Status::Fail);
        VerificationReport { pass, records }
    }

    /// The report with every runtime zeroed, for content comparison.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.records.iter_mut().for_each(|c| c.runtime_ms = 0);
        r
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    /// 0 when every check passed, 4 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            4
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    /// Absolute coset leader formulas against the oracle.
    Leaders,
    /// Family construction, LCD, weight distributions, BCH bound.
    Codes,
    /// The four published weight enumerators.
    Examples,
    /// Character sums: Gauss, power-sum identity, Kloosterman.
    Sums,
}

impl Scope {
    fn includes(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scope> {
        match s.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(Scope::All),
            "leaders" => Ok(Scope::Leaders),
            "codes" => Ok(Scope::Codes),
            "examples" => Ok(Scope::Examples),
            "sums" => Ok(Scope::Sums),
            other => Err(Error::Parse(format!(
                "unknown scope {other:?}, expected all, leaders, codes, examples or sums"
            ))),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scope::All => "all",
            Scope::Leaders => "leaders",
            Scope::Codes => "codes",
            Scope::Examples => "examples",
            Scope::Sums => "sums",
        };
        f.write_str(s)
    }
}

/// Largest `max_m` accepted without `force`.
pub const DEFAULT_MAX_M: u32 = 10;
/// Code checks stop here unless forced.
pub const CODES_MAX_M: u32 = 6;
/// Kloosterman scans stop here unless forced.
pub const SCAN_MAX_M: u32 = 5;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub scope: Scope,
    pub max_m: u32,
    pub force: bool,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            scope: Scope::All,
            max_m: DEFAULT_MAX_M,
            force: false,
            workers: 0,
        }
    }
}

struct Outcome {
    status: Status,
    expected: String,
    actual: String,
}

fn compare(expected: impl ToString, actual: impl ToString) -> Outcome {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    let status = if expected == actual { Status::Pass } else { Status::Fail };
    Outcome { status, expected, actual }
}

fn info(expected: impl ToString, actual: impl ToString) -> Outcome {
    Outcome {
        status: Status::Info,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

#[derive(Default)]
struct Sweep {
    records: Vec<CheckRecord>,
}

impl Sweep {
    fn check(&mut self, id: String, claim: &str, params: Value, f: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let out = f().unwrap_or_else(|e| Outcome {
            status: Status::Fail,
            expected: "no error".into(),
            actual: e.to_string(),
        });
        self.records.push(CheckRecord {
            id,
            claim: claim.into(),
            params,
            expected: out.expected,
            actual: out.actual,
            status: out.status,
            runtime_ms: start.elapsed().as_millis() as u64,
        });
    }
}

/// Runs the sweep for `opts`.
///
/// Errors only on option-level capacity problems; failing checks are
/// reported as records.
pub fn run(opts: &VerifyOptions) -> Result<VerificationReport> {
    if opts.max_m > DEFAULT_MAX_M && !opts.force {
        return Err(Error::Capacity(format!(
            "max m {} exceeds {DEFAULT_MAX_M} without force",
            opts.max_m
        )));
    }
    if opts.max_m < 1 {
        return Err(Error::Usage("max m must be at least 1".into()));
    }
    let mut sweep = Sweep::default();
    if opts.scope.includes(Scope::Leaders) {
        leaders(&mut sweep, opts)?;
    }
    if opts.scope.includes(Scope::Codes) {
        codes(&mut sweep, opts);
    }
    if opts.scope.includes(Scope::Examples) {
        examples(&mut sweep, opts);
    }
    if opts.scope.includes(Scope::Sums) {
        sums(&mut sweep, opts);
    }
    Ok(VerificationReport::new(sweep.records))
}

fn leaders(sweep: &mut Sweep, opts: &VerifyOptions) -> Result<()> {
    if opts.max_m > MAX_SCAN_DEGREE {
        return Err(Error::Capacity(format!(
            "the leader oracle scans at most m = {MAX_SCAN_DEGREE}"
        )));
    }
    for m in 2..=opts.max_m {
        let oracle = top_acl_oracle(m, 3)?;
        for rank in 1..=3u32 {
            let Ok(delta) = delta_formula(m, rank) else { continue };
            let claim = claimed_attainment(m, rank)?;
            let got = oracle.get(rank as usize - 1);
            sweep.check(
                format!("leaders/rank{rank}/m{m}"),
                "closed form of the ranked absolute coset leader and the cosets attaining it",
                json!({ "m": m, "rank": rank }),
                || {
                    let actual = match got {
                        None => "missing".to_string(),
                        Some(r) => {
                            let sizes: Vec<u32> = r.cosets.iter().map(|c| c.size).collect();
                            let uniform = sizes.iter().all(|&s| s == sizes[0]);
                            format!(
                                "acl {} attained by {} coset(s) of size {}",
                                r.acl,
                                sizes.len(),
                                if uniform { sizes[0].to_string() } else { format!("{sizes:?}") }
                            )
                        }
                    };
                    let expected =
                        format!("acl {delta} attained by {} coset(s) of size {}", claim.1, claim.0);
                    Ok(compare(expected, actual))
                },
            );
        }
    }
    // the printed listing of the coset attaining the third leader at m = 4
    sweep.check(
        "leaders/listing/m4".into(),
        "listing of the coset attaining the third largest leader at m = 4",
        json!({ "m": 4, "printed": [16, 32, 32, 48] }),
        || {
            let c = coset(16, 80);
            Ok(info(
                "{16, 32, 32, 48}",
                format!(
                    "{{{}}}",
                    c.elements.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")
                ),
            ))
        },
    );
    Ok(())
}

/// Every available distribution of a family member, in method order
/// exhaustive, trace, closed.
fn distributions(
    family: Family,
    field: &Field,
    dimension: u32,
    opts: &VerifyOptions,
) -> Result<Vec<(&'static str, WeightDistribution)>> {
    let m = field.degree();
    let mut out = Vec::new();
    if dimension <= DEFAULT_MAX_DIMENSION || opts.force {
        let code = construct_family(family, m, field)?;
        out.push(("exhaustive", weight_distribution_exhaustive(&code, u32::MAX, opts.workers)?));
    }
    let trace_cheap = match family {
        Family::D => false,
        Family::E | Family::G => 2 * m <= 12 || opts.force,
        _ => true,
    };
    if trace_cheap {
        out.push(("trace", weight_distribution_trace(family, field, opts.workers)?));
    }
    match closed_form_distribution(family, m) {
        Ok(wd) => out.push(("closed", wd)),
        Err(Error::Unsupported(_)) => {}
        Err(e) => return Err(e),
    }
    Ok(out)
}

fn codes(sweep: &mut Sweep, opts: &VerifyOptions) {
    let top = if opts.force { opts.max_m } else { opts.max_m.min(CODES_MAX_M) };
    for family in Family::ALL {
        let smallest = family.smallest_m();
        for m in (1..=top).filter(|&m| family.is_admissible(m)) {
            let Ok(field) = Field::new(m) else { continue };
            let params = json!({ "family": family.to_string(), "m": m });
            let mut built = None;
            sweep.check(
                format!("codes/{family}/m{m}/construct"),
                "defining set yields the stated dimension",
                params.clone(),
                || {
                    let code = construct_family(family, m, &field)?;
                    let out = compare(family.expected_dimension(m), code.dimension);
                    built = Some(code);
                    Ok(out)
                },
            );
            let Some(code) = built else { continue };

            if m == smallest {
                sweep.check(
                    format!("codes/{family}/m{m}/lcd"),
                    "self-reciprocal generator, trivial hull and negation-closed defining set agree",
                    params.clone(),
                    || {
                        let a = code.generator.is_self_reciprocal()?;
                        let b = intersection_dimension(&code, &dual(&code))? == 0;
                        let c = code.defining_set_negation_closed();
                        let actual = format!("reciprocal {a}, hull {b}, negation {c}");
                        let expected = if family.claims_lcd() {
                            "reciprocal true, hull true, negation true".to_string()
                        } else if a == b && b == c {
                            actual.clone()
                        } else {
                            format!("reciprocal {a}, hull {a}, negation {a}")
                        };
                        Ok(compare(expected, actual))
                    },
                );
            }

            let mut first = None;
            sweep.check(
                format!("codes/{family}/m{m}/weights"),
                "weight distributions agree across enumeration methods",
                params.clone(),
                || {
                    let all = distributions(family, &field, code.dimension, opts)?;
                    for (_, wd) in &all {
                        wd.check_sane(code.dimension)?;
                    }
                    let (_, reference) = all.first().ok_or_else(|| {
                        Error::Capacity("no enumeration method within budget".into())
                    })?;
                    let actual = all
                        .iter()
                        .map(|(name, wd)| format!("{name}: {wd}"))
                        .collect::<Vec<_>>()
                        .join("; ");
                    let expected = all
                        .iter()
                        .map(|(name, _)| format!("{name}: {reference}"))
                        .collect::<Vec<_>>()
                        .join("; ");
                    first = Some(reference.clone());
                    Ok(compare(expected, actual))
                },
            );

            if let Some(wd) = first {
                sweep.check(
                    format!("codes/{family}/m{m}/bch"),
                    "minimum distance is at least the consecutive-root bound",
                    params.clone(),
                    || {
                        let r = verify_bch_bound(&code, &wd);
                        let d = r.min_distance.map_or("none".into(), |d| d.to_string());
                        Ok(Outcome {
                            status: if r.pass { Status::Pass } else { Status::Fail },
                            expected: format!("d >= {}", r.bound),
                            actual: format!("d = {d}"),
                        })
                    },
                );
                if family == Family::A {
                    sweep.check(
                        format!("codes/A/m{m}/one-weight"),
                        "every nonzero codeword has weight 2·3^(m-1)",
                        params.clone(),
                        || {
                            let w = 2 * crate::pow3(m - 1);
                            let weights: Vec<String> =
                                wd.iter().filter(|&(w, _)| w > 0).map(|(w, _)| w.to_string()).collect();
                            Ok(compare(format!("[{w}]"), format!("[{}]", weights.join(", "))))
                        },
                    );
                }
            }
        }
    }

    for m in [2u32, 6] {
        sweep.check(
            format!("codes/F/m{m}/parity"),
            "tabulated family F distribution at an even m that is 2 mod 4",
            json!({ "family": "F", "m": m }),
            || {
                let field = Field::new(m)?;
                let code = construct_family(Family::F, m, &field)?;
                let computed = weight_distribution_exhaustive(&code, DEFAULT_MAX_DIMENSION, opts.workers)?;
                let table = closed_form_distribution(Family::F, m)?;
                let verdict = if computed == table { "matches" } else { "differs" };
                Ok(info(table, format!("{computed} ({verdict})")))
            },
        );
    }
}

fn examples(sweep: &mut Sweep, opts: &VerifyOptions) {
    let cases: [(Family, u32, &str); 4] = [
        (Family::A, 5, "1+242z^162"),
        (Family::B, 6, "1+364z^468+364z^504"),
        (Family::C, 6, "1+364z^468+728z^476+728z^494+364z^504+2z^728"),
        (Family::F, 4, "1+12z^40+8z^60+6z^80"),
    ];
    for (i, (family, m, expected)) in cases.into_iter().enumerate() {
        sweep.check(
            format!("examples/{}", i + 1),
            "published weight enumerator",
            json!({ "family": family.to_string(), "m": m }),
            || {
                let field = Field::new(m)?;
                let code = construct_family(family, m, &field)?;
                let wd = weight_distribution_exhaustive(&code, DEFAULT_MAX_DIMENSION, opts.workers)?;
                Ok(compare(expected, wd))
            },
        );
    }
}

fn sums(sweep: &mut Sweep, opts: &VerifyOptions) {
    let scan_top = if opts.force { opts.max_m } else { opts.max_m.min(SCAN_MAX_M) };
    for m in (1..=scan_top.max(1)).filter(|m| m % 2 == 1) {
        sweep.check(
            format!("sums/kloosterman-bound/m{m}"),
            "max K(a,b) <= (3^m + 2·3^(m-1) - 1)/4",
            json!({ "m": m }),
            || {
                let field = Field::new(m)?;
                let r = kloosterman_bound_scan(&field, opts.force, opts.workers)?;
                let expected = format!("max <= {}", r.bound);
                let actual = format!("max = {} at {:?}", r.max, r.argmax);
                // at m = 1 the bound is below the true maximum
                Ok(Outcome {
                    status: match (r.pass, m) {
                        (_, 1) => Status::Info,
                        (true, _) => Status::Pass,
                        (false, _) => Status::Fail,
                    },
                    expected,
                    actual,
                })
            },
        );
    }

    if opts.max_m >= 3 {
        sweep.check(
            "sums/bridge/m3".into(),
            "W(c(a,b)) = 2n/3 - 2K(a,b)/3 for every nonzero pair, and the induced distribution matches enumeration",
            json!({ "m": 3 }),
            || {
                let field = Field::new(3)?;
                let mut mismatches = 0u32;
                let mut wd = WeightDistribution::new();
                wd.add(0, 1);
                for a in field.elements() {
                    for b in field.elements() {
                        if a.is_zero() && b.is_zero() {
                            continue;
                        }
                        let bridge = kloosterman_weight_bridge(&field, a, b)?;
                        let direct = hamming_weight(&trace_codeword(Family::E, &field, TraceParams { a, b })?);
                        mismatches += u32::from(bridge != direct);
                        wd.add(bridge, 1);
                    }
                }
                let code = construct_family(Family::E, 3, &field)?;
                let ex = weight_distribution_exhaustive(&code, DEFAULT_MAX_DIMENSION, opts.workers)?;
                Ok(compare(
                    format!("0 mismatches; {ex}"),
                    format!("{mismatches} mismatches; {wd}"),
                ))
            },
        );
        sweep.check(
            "sums/kloosterman-symmetry/m3".into(),
            "K(a,b) = K(b,a) and K(a,b) is rational for every pair",
            json!({ "m": 3 }),
            || {
                let field = Field::new(3)?;
                let (mut asym, mut imag) = (0u32, 0u32);
                for a in field.elements() {
                    for b in field.elements() {
                        let k = kloosterman_counts(&field, a, b).to_eisenstein();
                        let t = kloosterman_counts(&field, b, a).to_eisenstein();
                        asym += u32::from(k != t);
                        imag += u32::from(!k.is_real());
                    }
                }
                Ok(compare(
                    "0 asymmetric, 0 non-real",
                    format!("{asym} asymmetric, {imag} non-real"),
                ))
            },
        );
    }

    for s in 1..=6u32 {
        sweep.check(
            format!("sums/gauss/s{s}"),
            "quadratic Gauss sum closed form equals direct summation",
            json!({ "s": s }),
            || {
                let field = Field::new(s)?;
                Ok(compare(gauss_quadratic(s)?, gauss_quadratic_direct(&field)))
            },
        );
    }

    for (m, limit) in [(2u32, usize::MAX), (4, 100)] {
        sweep.check(
            format!("sums/power-sum/m{m}"),
            "sum of χ(a x^2 + b) equals χ(b) η(a) G(η, χ)",
            json!({ "m": m, "exponent": 2, "pairs": if limit == usize::MAX { Value::from("all") } else { Value::from(limit) } }),
            || {
                let field = Field::new(m)?;
                let pairs: Vec<(Elem, Elem)> = field
                    .nonzero()
                    .flat_map(|a| field.elements().map(move |b| (a, b)))
                    .take(limit)
                    .collect();
                let mut bad = 0usize;
                for &(a, b) in &pairs {
                    bad += usize::from(!power_sum_sides(&field, a, b, 2)?.holds());
                }
                Ok(compare(
                    format!("{} of {} hold", pairs.len(), pairs.len()),
                    format!("{} of {} hold", pairs.len() - bad, pairs.len()),
                ))
            },
        );
    }

    for m in 1..=opts.max_m.min(4) {
        sweep.check(
            format!("sums/orthogonality/m{m}"),
            "sum of χ(a x) over the field vanishes for every nonzero a",
            json!({ "m": m }),
            || {
                let field = Field::new(m)?;
                let bad = field
                    .nonzero()
                    .filter(|&a| additive_char_sum(&field, field.elements(), |x| field.mul(a, x)) != EisensteinInt::ZERO)
                    .count();
                Ok(compare("0 nonvanishing", format!("{bad} nonvanishing")))
            },
        );
    }
}
