//! Trace descriptions of the family codewords.
//!
//! | family | codeword | parameters |
//! |--------|----------|------------|
//! | A | `(Tr(a·α^{δ₂ i}))_i` | `a ∈ GF(3^m)` |
//! | B | `(Tr(a·α^{δ₃ i}))_i` | `a ∈ GF(3^m)` |
//! | C | `(a(-1)^i + Tr(b·α^{δ₃ i}))_i` | `a ∈ F₃, b ∈ GF(3^m)` |
//! | E | `(Tr(a x + b x^{-1}))_{x ∈ GF(3^m)*}` | `a, b ∈ GF(3^m)` |
//! | F | `(a(-1)^i + Tr_{9/3}(b ζ₄^i))_i`, `ζ₄ = α^{δ₂}` | `a ∈ F₃, b ∈ GF(9)` |
//! | G | `(Tr(a x² + b x^{-2}))_{x ∈ GF(3^m)*}` | `a, b ∈ GF(3^m)` |
//!
//! Each description is a sum of at most two components that are linear in
//! their own parameter, so every component is tabulated once per parameter
//! value and a codeword costs one bit-sliced addition.

use rayon::prelude::*;

use crate::codes::{Family, WeightDistribution};
use crate::cosets::delta_formula;
use crate::field::{Elem, Field};
use crate::trit::TritVec;
use crate::{with_workers, Error, Result};

/// Parameter tuple of a trace-form codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceParams {
    pub a: Elem,
    /// Unused by the one-parameter families A and B.
    pub b: Elem,
}

/// One linear piece of a codeword: parameter values and their vectors.
struct Component {
    params: Vec<Elem>,
    vectors: Vec<TritVec>,
}

fn delta(m: u32, rank: u32) -> i64 {
    delta_formula(m, rank).expect("admissibility checked") as i64
}

/// Elements of the subfield GF(9) inside GF(3^m), m even.
fn gf9_elements(field: &Field) -> Vec<Elem> {
    let step = (field.group_order() / 8) as i64;
    std::iter::once(Elem::ZERO)
        .chain((0..8).map(|k| field.alpha_pow(k * step)))
        .collect()
}

/// `Tr_{9/3}(y) = y + y³` for `y` in the GF(9) subfield.
fn trace_9_3(field: &Field, y: Elem) -> u8 {
    field
        .add(y, field.frobenius(y))
        .as_f3()
        .expect("relative trace of a GF(9) element lies in F3")
}

/// Symbols `Tr(p · α^{e·i})` for `i < n`.
fn power_trace(field: &Field, p: Elem, e: i64) -> Vec<u8> {
    let n = field.group_order() as i64;
    match field.log(p) {
        None => vec![0; n as usize],
        Some(l) => (0..n)
            .map(|i| field.trace(field.alpha_pow(l as i64 + e * i)))
            .collect(),
    }
}

fn alternating(field: &Field, a: u8) -> Vec<u8> {
    (0..field.group_order())
        .map(|i| if i % 2 == 0 { a % 3 } else { (3 - a % 3) % 3 })
        .collect()
}

fn f3_params() -> Vec<Elem> {
    vec![Elem::ZERO, Elem::ONE, Elem(2)]
}

fn component(params: Vec<Elem>, sym: impl Fn(Elem) -> Vec<u8> + Sync) -> Component {
    let vectors = params
        .par_iter()
        .map(|&p| TritVec::from_symbols(&sym(p)))
        .collect();
    Component { params, vectors }
}

fn components(family: Family, field: &Field) -> Result<Vec<Component>> {
    let m = field.degree();
    family.check_admissible(m)?;
    let all: Vec<Elem> = field.elements().collect();
    Ok(match family {
        Family::A => vec![component(all, |a| power_trace(field, a, delta(m, 2)))],
        Family::B => vec![component(all, |a| power_trace(field, a, delta(m, 3)))],
        Family::C => vec![
            component(f3_params(), |a| alternating(field, a.value() as u8)),
            component(all, |b| power_trace(field, b, delta(m, 3))),
        ],
        Family::D => {
            return Err(Error::Unsupported(
                "family D has no trace description beyond scalar multiples".into(),
            ))
        }
        Family::E => vec![
            component(all.clone(), |a| power_trace(field, a, 1)),
            component(all, |b| power_trace(field, b, -1)),
        ],
        Family::F => {
            let zeta = field.alpha_pow(delta(m, 2));
            vec![
                component(f3_params(), |a| alternating(field, a.value() as u8)),
                component(gf9_elements(field), |b| {
                    (0..field.group_order() as i64)
                        .map(|i| trace_9_3(field, field.mul(b, field.pow(zeta, i).expect("nonzero"))))
                        .collect()
                }),
            ]
        }
        Family::G => vec![
            component(all.clone(), |a| power_trace(field, a, 2)),
            component(all, |b| power_trace(field, b, -2)),
        ],
    })
}

/// The trace-form codeword for one parameter tuple, coordinates in the
/// order of the table above.
pub fn trace_codeword(family: Family, field: &Field, params: TraceParams) -> Result<Vec<u8>> {
    let comps = components_for(family, field, params)?;
    let mut out = vec![0u8; field.group_order() as usize];
    for sym in comps {
        for (o, s) in out.iter_mut().zip(sym) {
            *o = (*o + s) % 3;
        }
    }
    Ok(out)
}

fn components_for(family: Family, field: &Field, p: TraceParams) -> Result<Vec<Vec<u8>>> {
    let m = field.degree();
    family.check_admissible(m)?;
    let f3 = |e: Elem| {
        e.as_f3()
            .ok_or_else(|| Error::Domain(format!("parameter {e} must lie in F3")))
    };
    Ok(match family {
        Family::A => vec![power_trace(field, p.a, delta(m, 2))],
        Family::B => vec![power_trace(field, p.a, delta(m, 3))],
        Family::C => vec![alternating(field, f3(p.a)?), power_trace(field, p.b, delta(m, 3))],
        Family::D => vec![alternating(field, f3(p.a)?)],
        Family::E => vec![power_trace(field, p.a, 1), power_trace(field, p.b, -1)],
        Family::F => {
            if !field.in_subfield(p.b, 2) {
                return Err(Error::Domain(format!("parameter {} must lie in GF(9)", p.b)));
            }
            let zeta = field.alpha_pow(delta(m, 2));
            vec![
                alternating(field, f3(p.a)?),
                (0..field.group_order() as i64)
                    .map(|i| trace_9_3(field, field.mul(p.b, field.pow(zeta, i).expect("nonzero"))))
                    .collect(),
            ]
        }
        Family::G => vec![power_trace(field, p.a, 2), power_trace(field, p.b, -2)],
    })
}

/// The codeword indexed cyclically, `c_i` at position `i`, so that it can be
/// tested for membership in the polynomial code.
///
/// For A, B, C, D, F this equals [`trace_codeword`]. For E and G the
/// evaluation points `x` are replaced by `β^i` with `β = α^{δ₂}` (E,
/// primitive) or `β = α^{δ₃}` (G, semi-primitive): `Tr(a β^i + b β^{-i})`.
pub fn delsarte_codeword(family: Family, field: &Field, params: TraceParams) -> Result<Vec<u8>> {
    let m = field.degree();
    let beta = match family {
        Family::E => {
            family.check_admissible(m)?;
            delta(m, 2)
        }
        Family::G => {
            family.check_admissible(m)?;
            delta(m, 3)
        }
        _ => return trace_codeword(family, field, params),
    };
    let a = power_trace(field, params.a, beta);
    let b = power_trace(field, params.b, -beta);
    Ok(a.iter().zip(&b).map(|(x, y)| (x + y) % 3).collect())
}

/// Weight distribution over the whole parameter space of the trace form.
///
/// Parameter tuples, not distinct codewords, are counted; when the trace map
/// is injective the two agree.
pub fn weight_distribution_trace(family: Family, field: &Field, workers: usize) -> Result<WeightDistribution> {
    let comps = with_workers(workers, || components(family, field))??;
    let n = field.group_order() as usize;
    let hist = match comps.as_slice() {
        [single] => {
            let mut hist = vec![0u64; n + 1];
            for v in &single.vectors {
                hist[v.weight() as usize] += 1;
            }
            hist
        }
        [first, second] => with_workers(workers, || {
            first
                .vectors
                .par_iter()
                .map(|u| {
                    let mut hist = vec![0u64; n + 1];
                    for v in &second.vectors {
                        hist[u.weight_of_sum(v) as usize] += 1;
                    }
                    hist
                })
                .reduce(
                    || vec![0u64; n + 1],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        })?,
        _ => unreachable!("at most two components"),
    };
    debug_assert!(comps.iter().all(|c| c.params.len() == c.vectors.len()));
    Ok(WeightDistribution::from_histogram(&hist))
}
