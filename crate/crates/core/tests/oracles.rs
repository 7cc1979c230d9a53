//! Library results against values from `data/oracle.py`, an independent
//! implementation over a different primitive modulus.

use std::collections::BTreeMap;

use bch3::charsums::{gauss_quadratic, gauss_quadratic_direct, kloosterman, EisensteinInt};
use bch3::codes::{
    construct_family, weight_distribution_exhaustive, weight_distribution_trace, Family,
    WeightDistribution,
};
use bch3::field::Field;
use serde_json::Value;

fn oracle() -> Value {
    serde_json::from_str(include_str!("data/oracle.json")).unwrap()
}

fn table(v: &Value) -> BTreeMap<i64, u64> {
    v.as_object()
        .unwrap()
        .iter()
        .map(|(k, c)| (k.parse().unwrap(), c.as_u64().unwrap()))
        .collect()
}

fn distribution(v: &Value) -> WeightDistribution {
    table(v).into_iter().map(|(w, c)| (w as u32, c)).collect()
}

#[test]
fn family_e_and_g_distributions() {
    let o = oracle();
    for (family, m, key) in [(Family::E, 3, "E3"), (Family::E, 5, "E5"), (Family::G, 6, "G6")] {
        let field = Field::new(m).unwrap();
        let expected = distribution(&o[key]);
        let code = construct_family(family, m, &field).unwrap();
        assert_eq!(weight_distribution_exhaustive(&code, 16, 0).unwrap(), expected, "{key} exhaustive");
        assert_eq!(weight_distribution_trace(family, &field, 0).unwrap(), expected, "{key} trace");
    }
}

#[test]
fn kloosterman_spectra() {
    let o = oracle();
    for (m, key) in [(1, "K1"), (3, "K3"), (5, "K5")] {
        let field = Field::new(m).unwrap();
        let mut got = BTreeMap::new();
        for a in field.elements() {
            for b in field.elements() {
                *got.entry(kloosterman(&field, a, b)).or_insert(0u64) += 1;
            }
        }
        assert_eq!(got, table(&o[key]), "{key}");
    }
}

#[test]
fn gauss_sums() {
    let o = oracle();
    for s in 1..=6u32 {
        let pair = &o["gauss"][s.to_string()];
        let expected = EisensteinInt::new(pair[0].as_i64().unwrap(), pair[1].as_i64().unwrap());
        assert_eq!(gauss_quadratic(s).unwrap(), expected, "s = {s}");
        assert_eq!(gauss_quadratic_direct(&Field::new(s).unwrap()), expected, "s = {s}");
    }
}
