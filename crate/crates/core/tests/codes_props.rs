use bch3::codes::{
    code_from_defining_set, construct_family, coset_closure, delsarte_codeword, dual, hamming_weight,
    intersection_dimension, is_lcd, trace_codeword, weight_distribution_exhaustive, Family, TraceParams,
};
use bch3::cosets::AclTable;
use bch3::field::{Elem, Field};
use bch3::polyring::{generator_from_defining_set, Poly3};
use proptest::prelude::*;

/// Defining sets from a bitmask over the coset list of `m`.
fn coset_union(m: u32, mask: u64) -> Vec<i64> {
    let t = AclTable::new(m).unwrap();
    let leaders = t
        .cosets()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
        .map(|(_, c)| c.leader as i64);
    coset_closure(leaders, t.modulus()).into_iter().map(i64::from).collect()
}

#[test]
fn generators_multiply_over_disjoint_unions() {
    let f = Field::new(3).unwrap();
    let t = AclTable::new(3).unwrap();
    let leaders: Vec<i64> = t.cosets().iter().map(|c| c.leader as i64).collect();
    for (i, &a) in leaders.iter().enumerate() {
        for &b in &leaders[i + 1..] {
            let za = coset_closure([a], 26);
            let zb = coset_closure([b], 26);
            let zab = coset_closure([a, b], 26);
            let ga = generator_from_defining_set(&f, &za).unwrap();
            let gb = generator_from_defining_set(&f, &zb).unwrap();
            assert_eq!(generator_from_defining_set(&f, &zab).unwrap(), &ga * &gb);
        }
    }
}

#[test]
fn generator_times_parity_check_is_x_n_minus_one() {
    for m in 1..=4 {
        let f = Field::new(m).unwrap();
        let n = f.group_order() as usize;
        for mask in [0u64, 1, 0b1010, 0b0111, u64::MAX] {
            let code = code_from_defining_set(&f, &coset_union(m, mask)).unwrap();
            assert_eq!(&code.generator * &code.parity_check, Poly3::x_pow_minus_one(n));
            assert_eq!(code.generator.degree(), Some(code.defining_set.len()));
            assert_eq!(code.dimension as usize, n - code.defining_set.len());
        }
    }
}

#[test]
fn self_reciprocity_matches_negation_closure() {
    for m in 1..=6 {
        let f = Field::new(m).unwrap();
        let count = AclTable::new(m).unwrap().cosets().len() as u32;
        let masks: Vec<u64> = if count <= 8 {
            (0..1u64 << count).collect()
        } else {
            (0..64).map(|i| 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(i + 1)).collect()
        };
        for mask in masks {
            let code = code_from_defining_set(&f, &coset_union(m, mask)).unwrap();
            let reciprocal = code.generator.is_self_reciprocal().unwrap();
            assert_eq!(reciprocal, code.defining_set_negation_closed(), "m = {m}, mask = {mask:#x}");
            assert_eq!(reciprocal, is_lcd(&code));
            assert_eq!(reciprocal, intersection_dimension(&code, &dual(&code)).unwrap() == 0);
        }
    }
}

#[test]
fn dual_is_an_involution() {
    for m in 1..=4 {
        let f = Field::new(m).unwrap();
        for mask in [0u64, 3, 0b10110, u64::MAX] {
            let code = code_from_defining_set(&f, &coset_union(m, mask)).unwrap();
            let back = dual(&dual(&code));
            assert_eq!(back.generator, code.generator);
            assert_eq!(back.defining_set, code.defining_set);
            assert_eq!(back.dimension, code.dimension);
        }
    }
}

#[test]
fn family_codewords_lie_in_their_codes() {
    for (family, m) in [(Family::A, 3), (Family::A, 5), (Family::E, 3), (Family::F, 2), (Family::F, 4)] {
        let f = Field::new(m).unwrap();
        let code = construct_family(family, m, &f).unwrap();
        let b_range: Vec<Elem> = match family {
            Family::F => vec![Elem::ZERO, f.alpha_pow(f.group_order() as i64 / 8), Elem::ONE],
            _ => f.elements().step_by(5).collect(),
        };
        let a_range: Vec<Elem> = match family {
            Family::F => (0..3).map(|c| f.from_f3(c)).collect(),
            _ => f.elements().step_by(7).collect(),
        };
        for &a in &a_range {
            for &b in &b_range {
                let c = delsarte_codeword(family, &f, TraceParams { a, b }).unwrap();
                assert!(code.contains(&c).unwrap(), "{family} m = {m}");
            }
        }
    }
}

#[test]
fn family_g_delsarte_codewords_lie_in_the_code() {
    let f = Field::new(6).unwrap();
    let code = construct_family(Family::G, 6, &f).unwrap();
    for (a, b) in [(1i64, 0i64), (0, 1), (5, 17), (100, 333), (727, 2)] {
        let params = TraceParams { a: f.alpha_pow(a), b: f.alpha_pow(b) };
        let c = delsarte_codeword(Family::G, &f, params).unwrap();
        assert!(code.contains(&c).unwrap());
        // the evaluation form over x has the same weight
        let t = trace_codeword(Family::G, &f, params).unwrap();
        assert_eq!(hamming_weight(&c), hamming_weight(&t));
    }
}

#[test]
fn workers_do_not_change_distributions() {
    let f = Field::new(5).unwrap();
    let code = construct_family(Family::E, 5, &f).unwrap();
    let one = weight_distribution_exhaustive(&code, 16, 1).unwrap();
    for w in [2, 3, 7] {
        assert_eq!(weight_distribution_exhaustive(&code, 16, w).unwrap(), one);
    }
}

fn poly() -> impl Strategy<Value = Poly3> {
    proptest::collection::vec(0u8..3, 0..24).prop_map(Poly3::from_coeffs)
}

proptest! {
    #[test]
    fn division_identity(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(g.is_monic());
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
        let l = a.lcm(&b);
        prop_assert_eq!(l.degree().unwrap() + g.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
    }

    #[test]
    fn reciprocal_is_an_involution_up_to_scaling(a in poly()) {
        prop_assume!(!a.is_zero() && a.coeff(0) != 0);
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(r.reciprocal().unwrap().monic(), a.monic());
    }

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
    }
}
