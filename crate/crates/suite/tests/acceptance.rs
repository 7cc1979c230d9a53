//! Acceptance criteria, one test per criterion.
//!
//! Each test writes a single `criterion <id>: PASS|FAIL ...` line straight to
//! stdout (bypassing libtest capture) and then asserts.

use std::io::Write;
use std::time::{Duration, Instant};

use bch3::charsums::{
    additive_char_sum, gauss_quadratic, gauss_quadratic_direct, kloosterman_bound_scan,
    kloosterman_counts, kloosterman_weight_bridge, power_sum_identity_check, EisensteinInt,
};
use bch3::codes::{
    closed_form_distribution, construct_family, dual, hamming_weight, intersection_dimension, is_lcd,
    trace_codeword, verify_bch_bound, weight_distribution_exhaustive, weight_distribution_trace, Family,
    TraceParams, WeightDistribution,
};
use bch3::cosets::{claimed_attainment, delta_formula, top_acl_oracle};
use bch3::field::{Elem, Field};
use bch3::verify::{self, Scope, Status, VerifyOptions};

const WORKERS: usize = 4;

fn report(id: &str, failures: &[String], elapsed: Duration, budget: Duration) {
    let in_time = elapsed <= budget;
    let pass = failures.is_empty() && in_time;
    let mut detail = failures.join("; ");
    if !in_time {
        if !detail.is_empty() {
            detail.push_str("; ");
        }
        detail.push_str(&format!("over budget {budget:?}"));
    }
    let line = format!(
        "criterion {id}: {} ({elapsed:.2?}){}{}\n",
        if pass { "PASS" } else { "FAIL" },
        if detail.is_empty() { "" } else { " " },
        detail
    );
    std::io::stdout().write_all(line.as_bytes()).unwrap();
    assert!(pass, "{}", line.trim_end());
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn criterion_1_examples() {
    let start = Instant::now();
    let cases = [
        (Family::A, 5, "1+242z^162"),
        (Family::B, 6, "1+364z^468+364z^504"),
        (Family::C, 6, "1+364z^468+728z^476+728z^494+364z^504+2z^728"),
        (Family::F, 4, "1+12z^40+8z^60+6z^80"),
    ];
    let mut failures = Vec::new();
    for (family, m, expected) in cases {
        let field = Field::new(m).unwrap();
        let code = construct_family(family, m, &field).unwrap();
        let wd = weight_distribution_exhaustive(&code, 16, WORKERS).unwrap();
        if wd.to_string() != expected {
            failures.push(format!("{family} m={m}: {wd} != {expected}"));
        }
    }
    report("1", &failures, start.elapsed(), secs(5));
}

#[test]
fn criterion_2_leader_formulas() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for m in 2..=10 {
        let oracle = top_acl_oracle(m, 3).unwrap();
        for rank in 1..=3u32 {
            let Ok(delta) = delta_formula(m, rank) else { continue };
            let (size, count) = claimed_attainment(m, rank).unwrap();
            let got = &oracle[rank as usize - 1];
            checked += 1;
            let sizes_ok = got.cosets.len() == count && got.cosets.iter().all(|c| c.size == size);
            if got.acl as u64 != delta || !sizes_ok {
                failures.push(format!("m={m} rank={rank}: oracle {got:?}, claim {delta} x{count} size {size}"));
            }
        }
    }
    assert_eq!(checked, 22, "admissible (m, rank) pairs for m in 2..=10");
    report("2", &failures, start.elapsed(), secs(30));
}

fn three_way(family: Family, m: u32) -> Result<WeightDistribution, String> {
    let field = Field::new(m).unwrap();
    let code = construct_family(family, m, &field).map_err(|e| e.to_string())?;
    let ex = weight_distribution_exhaustive(&code, 16, WORKERS).map_err(|e| e.to_string())?;
    ex.check_sane(code.dimension).map_err(|e| e.to_string())?;
    if family != Family::D {
        let tr = weight_distribution_trace(family, &field, WORKERS).map_err(|e| e.to_string())?;
        if tr != ex {
            return Err(format!("{family} m={m}: trace {tr} != exhaustive {ex}"));
        }
    }
    if !matches!(family, Family::E | Family::G) {
        let cl = closed_form_distribution(family, m).map_err(|e| e.to_string())?;
        if cl != ex {
            return Err(format!("{family} m={m}: closed {cl} != exhaustive {ex}"));
        }
    }
    Ok(ex)
}

const CATALOG: &[(Family, u32)] = &[
    (Family::A, 3),
    (Family::A, 5),
    (Family::B, 6),
    (Family::C, 6),
    (Family::D, 2),
    (Family::D, 3),
    (Family::D, 4),
    (Family::D, 5),
    (Family::D, 6),
    (Family::F, 2),
    (Family::F, 4),
    (Family::F, 6),
    (Family::E, 3),
    (Family::E, 5),
    (Family::G, 6),
];

#[test]
fn criterion_3_three_way_agreement() {
    let start = Instant::now();
    let failures: Vec<String> = CATALOG
        .iter()
        .filter_map(|&(f, m)| three_way(f, m).err())
        .collect();
    report("3", &failures, start.elapsed(), secs(120));
}

#[test]
fn criterion_4_lcd_equivalence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for family in Family::ALL {
        let m = family.smallest_m();
        let field = Field::new(m).unwrap();
        let code = construct_family(family, m, &field).unwrap();
        let a = code.generator.is_self_reciprocal().unwrap();
        let b = intersection_dimension(&code, &dual(&code)).unwrap() == 0;
        let c = code.defining_set_negation_closed();
        if !(a == b && b == c && c == is_lcd(&code)) {
            failures.push(format!("{family} m={m}: reciprocal {a}, hull {b}, negation {c}"));
        }
        if family.claims_lcd() && !a {
            failures.push(format!("{family} m={m} is not LCD"));
        }
    }
    report("4", &failures, start.elapsed(), secs(5));
}

#[test]
fn criterion_5_bch_bound() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for family in Family::ALL {
        for m in (1..=6).filter(|&m| family.is_admissible(m)) {
            let field = Field::new(m).unwrap();
            let code = construct_family(family, m, &field).unwrap();
            if code.dimension > 16 {
                continue;
            }
            let wd = weight_distribution_exhaustive(&code, 16, WORKERS).unwrap();
            let r = verify_bch_bound(&code, &wd);
            if !r.pass {
                failures.push(format!("{family} m={m}: d = {:?} < {}", r.min_distance, r.bound));
            }
        }
    }
    report("5", &failures, start.elapsed(), secs(120));
}

#[test]
fn criterion_6a_kloosterman_bridge() {
    let start = Instant::now();
    let field = Field::new(3).unwrap();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for a in field.elements() {
        for b in field.elements() {
            if a.is_zero() && b.is_zero() {
                continue;
            }
            pairs += 1;
            let bridge = kloosterman_weight_bridge(&field, a, b).unwrap();
            let direct = hamming_weight(&trace_codeword(Family::E, &field, TraceParams { a, b }).unwrap());
            if bridge != direct {
                failures.push(format!("({}, {}): bridge {bridge}, weight {direct}", a.value(), b.value()));
            }
        }
    }
    assert_eq!(pairs, 728);
    report("6a", &failures, start.elapsed(), secs(60));
}

#[test]
fn criterion_6b_kloosterman_bound() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for m in [1, 3, 5] {
        let r = kloosterman_bound_scan(&Field::new(m).unwrap(), false, WORKERS).unwrap();
        if !r.pass {
            failures.push(format!("m={m}: max K = {} at {:?} exceeds bound {}", r.max, r.argmax, r.bound));
        }
    }
    report("6b", &failures, start.elapsed(), secs(60));
}

#[test]
fn criterion_6c_kloosterman_symmetry_and_reality() {
    let start = Instant::now();
    let field = Field::new(3).unwrap();
    let mut failures = Vec::new();
    for a in field.elements() {
        for b in field.elements() {
            let k = kloosterman_counts(&field, a, b).to_eisenstein();
            if !k.is_real() {
                failures.push(format!("K({}, {}) = {k} is not real", a.value(), b.value()));
            }
            if k != kloosterman_counts(&field, b, a).to_eisenstein() {
                failures.push(format!("K({}, {}) is not symmetric", a.value(), b.value()));
            }
        }
    }
    report("6c", &failures, start.elapsed(), secs(60));
}

#[test]
fn criterion_7_character_sums() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for s in [2, 4, 6] {
        let closed = gauss_quadratic(s).unwrap();
        let direct = gauss_quadratic_direct(&Field::new(s).unwrap());
        if closed != direct {
            failures.push(format!("gauss s={s}: {closed} != {direct}"));
        }
    }
    let gf9 = Field::new(2).unwrap();
    for a in gf9.nonzero() {
        for b in gf9.elements() {
            if !power_sum_identity_check(&gf9, a, b, 2).unwrap() {
                failures.push(format!("GF(9) ({}, {})", a.value(), b.value()));
            }
        }
    }
    let gf81 = Field::new(4).unwrap();
    let first: Vec<(Elem, Elem)> = gf81
        .nonzero()
        .flat_map(|a| gf81.elements().map(move |b| (a, b)))
        .take(100)
        .collect();
    assert_eq!(first.len(), 100);
    for (a, b) in first {
        if !power_sum_identity_check(&gf81, a, b, 2).unwrap() {
            failures.push(format!("GF(81) ({}, {})", a.value(), b.value()));
        }
    }
    for m in 1..=4 {
        let f = Field::new(m).unwrap();
        for a in f.nonzero() {
            if additive_char_sum(&f, f.elements(), |x| f.mul(a, x)) != EisensteinInt::ZERO {
                failures.push(format!("orthogonality m={m} a={}", a.value()));
            }
        }
    }
    report("7", &failures, start.elapsed(), secs(10));
}

#[test]
fn criterion_8_open_question_records() {
    let start = Instant::now();
    let opts = VerifyOptions { scope: Scope::All, max_m: 6, force: false, workers: WORKERS };
    let report_ = verify::run(&opts).unwrap();
    let mut failures = Vec::new();
    for id in ["leaders/listing/m4", "codes/F/m2/parity", "codes/F/m6/parity"] {
        match report_.records.iter().find(|r| r.id == id) {
            None => failures.push(format!("{id} missing")),
            Some(r) if r.status != Status::Info => failures.push(format!("{id} is {:?}", r.status)),
            Some(r) if r.expected.is_empty() || r.actual.is_empty() => failures.push(format!("{id} is empty")),
            Some(_) => {}
        }
    }
    if !report_.pass {
        let ids: Vec<&str> = report_.failures().map(|r| r.id.as_str()).collect();
        failures.push(format!("report failed: {ids:?}"));
    }
    report("8", &failures, start.elapsed(), secs(120));
}
