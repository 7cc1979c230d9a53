//! Cyclic codes of length `n = 3^m - 1` over F₃.
//!
//! A code is fixed by its defining set `Z` (a union of cyclotomic cosets);
//! its generator is `∏_{i∈Z} (x - α^i)` and its dimension `n - |Z|`.
//! [`Family`] builds the seven named families; weight distributions come
//! from three independent routes: exhaustive enumeration of `u(x)·g(x)`
//! ([`weight_distribution_exhaustive`]), the trace description of the
//! codewords ([`weight_distribution_trace`]) and closed forms
//! ([`closed_form_distribution`]).

mod closed;
mod enumerate;
mod family;
mod trace;
mod weights;

use serde::Serialize;

use crate::cosets::{self, canonical};
use crate::field::Field;
use crate::polyring::{generator_from_defining_set, Poly3};
use crate::{Error, Result};

pub use closed::closed_form_distribution;
pub use enumerate::{weight_distribution_exhaustive, DEFAULT_MAX_DIMENSION};
pub use family::{construct_family, Family};
pub use trace::{delsarte_codeword, trace_codeword, weight_distribution_trace, TraceParams};
pub use weights::WeightDistribution;

/// A cyclic code together with the data it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicCode {
    pub m: u32,
    pub n: u32,
    /// Sorted residues in `[0, n)`.
    pub defining_set: Vec<u32>,
    pub generator: Poly3,
    /// `(x^n - 1) / generator`.
    pub parity_check: Poly3,
    pub dimension: u32,
    pub designed_distance: Option<u32>,
    pub family: Option<Family>,
}

impl CyclicCode {
    /// Whether the defining set satisfies `Z = -Z mod n`.
    pub fn defining_set_negation_closed(&self) -> bool {
        let mut member = vec![false; self.n as usize];
        for &k in &self.defining_set {
            member[k as usize] = true;
        }
        self.defining_set
            .iter()
            .all(|&k| member[((self.n - k) % self.n) as usize])
    }

    /// Whether `symbols` (coordinate `i` = coefficient of `x^i`) is a codeword.
    pub fn contains(&self, symbols: &[u8]) -> Result<bool> {
        if symbols.len() != self.n as usize {
            return Err(Error::Usage(format!(
                "word of length {} for a code of length {}",
                symbols.len(),
                self.n
            )));
        }
        Ok(Poly3::from_coeffs(symbols.to_vec())
            .rem(&self.generator)?
            .is_zero())
    }
}

/// Union of the cosets of the given (possibly negative) indices.
pub fn coset_closure(indices: impl IntoIterator<Item = i64>, n: u32) -> Vec<u32> {
    let mut member = vec![false; n as usize];
    for s in indices {
        let s = canonical(s, n);
        if member[s as usize] {
            continue;
        }
        for k in cosets::coset(s as i64, n).elements {
            member[k as usize] = true;
        }
    }
    member
        .iter()
        .enumerate()
        .filter_map(|(k, &b)| b.then_some(k as u32))
        .collect()
}

/// Builds the cyclic code with defining set `z`. Indices are reduced mod n;
/// the reduced set must already be a union of cosets.
pub fn code_from_defining_set(field: &Field, z: &[i64]) -> Result<CyclicCode> {
    let n = field.group_order();
    let mut set: Vec<u32> = z.iter().map(|&s| canonical(s, n)).collect();
    set.sort_unstable();
    set.dedup();
    let generator = generator_from_defining_set(field, &set)?;
    let (parity_check, r) = Poly3::x_pow_minus_one(n as usize).divmod(&generator)?;
    debug_assert!(r.is_zero());
    let dimension = n - generator.degree().expect("generator is nonzero") as u32;
    debug_assert_eq!(dimension as usize, n as usize - set.len());
    Ok(CyclicCode {
        m: field.degree(),
        n,
        defining_set: set,
        generator,
        parity_check,
        dimension,
        designed_distance: None,
        family: None,
    })
}

/// LCD test through the self-reciprocity of the generator.
pub fn is_lcd(code: &CyclicCode) -> bool {
    code.generator
        .is_self_reciprocal()
        .expect("a divisor of x^n - 1 has nonzero constant term")
}

/// The Euclidean dual: generator `ĥ`, defining set `{n - i : i ∉ Z}`.
pub fn dual(code: &CyclicCode) -> CyclicCode {
    let n = code.n;
    let generator = code
        .parity_check
        .reciprocal()
        .expect("a divisor of x^n - 1 has nonzero constant term")
        .monic();
    let parity_check = Poly3::x_pow_minus_one(n as usize)
        .divmod(&generator)
        .expect("nonzero divisor")
        .0;
    let mut member = vec![false; n as usize];
    for &k in &code.defining_set {
        member[k as usize] = true;
    }
    let mut defining_set: Vec<u32> = (0..n)
        .filter(|&i| !member[i as usize])
        .map(|i| (n - i) % n)
        .collect();
    defining_set.sort_unstable();
    CyclicCode {
        m: code.m,
        n,
        defining_set,
        dimension: n - code.dimension,
        generator,
        parity_check,
        designed_distance: None,
        family: None,
    }
}

/// `dim(C₁ ∩ C₂) = n - deg lcm(g₁, g₂)`.
pub fn intersection_dimension(c1: &CyclicCode, c2: &CyclicCode) -> Result<u32> {
    if c1.n != c2.n {
        return Err(Error::Usage(format!(
            "lengths differ: {} vs {}",
            c1.n, c2.n
        )));
    }
    let l = c1.generator.lcm(&c2.generator);
    Ok(c1.n - l.degree().expect("lcm of nonzero polynomials") as u32)
}

/// Minimum distance against the consecutive-roots lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BchBoundReport {
    /// Longest cyclic run of consecutive residues inside the defining set.
    pub longest_run: u32,
    /// `longest_run + 1`.
    pub bound: u32,
    pub min_distance: Option<u32>,
    pub pass: bool,
}

/// Longest cyclic run of consecutive residues in a sorted defining set.
pub fn longest_consecutive_run(defining_set: &[u32], n: u32) -> u32 {
    if defining_set.len() == n as usize {
        return n;
    }
    let mut member = vec![false; n as usize];
    for &k in defining_set {
        member[k as usize] = true;
    }
    let start = member.iter().position(|&b| !b).expect("not full");
    let (mut best, mut run) = (0, 0);
    for off in 1..=n as usize {
        if member[(start + off) % n as usize] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

pub fn verify_bch_bound(code: &CyclicCode, wd: &WeightDistribution) -> BchBoundReport {
    let longest_run = longest_consecutive_run(&code.defining_set, code.n);
    let bound = longest_run + 1;
    let min_distance = wd.min_distance();
    BchBoundReport {
        longest_run,
        bound,
        min_distance,
        // the zero code satisfies every bound vacuously
        pass: min_distance.map_or(true, |d| d >= bound),
    }
}

/// Hamming weight of a symbol slice.
pub fn hamming_weight(symbols: &[u8]) -> u32 {
    symbols.iter().filter(|&&s| s % 3 != 0).count() as u32
}
