//! Exact character sums over GF(3^m) in the Eisenstein integers Z[ω].
//!
//! The canonical additive character is `χ(x) = ω^{Tr(x)}` with ω a primitive
//! cube root of unity, so every additive sum is `N₀ + N₁ω + N₂ω²` for the
//! counts `Nᵢ` of trace value `i`. Quadratic characters contribute signs
//! only. No floating point is involved anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;
use serde::Serialize;

use crate::field::{gcd, Elem, Field};
use crate::{pow3, with_workers, Error, Result};

/// `a + b·ω` with `ω² = -1 - ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub const ZERO: EisensteinInt = EisensteinInt { a: 0, b: 0 };
    pub const ONE: EisensteinInt = EisensteinInt { a: 1, b: 0 };
    pub const OMEGA: EisensteinInt = EisensteinInt { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        EisensteinInt { a, b }
    }

    pub const fn integer(a: i64) -> Self {
        EisensteinInt { a, b: 0 }
    }

    /// `ω^t` for `t` taken mod 3.
    pub fn omega_pow(t: i64) -> Self {
        match t.rem_euclid(3) {
            0 => EisensteinInt::ONE,
            1 => EisensteinInt::OMEGA,
            _ => EisensteinInt::new(-1, -1),
        }
    }

    /// Complex conjugate: `ω ↦ ω² = -1 - ω`.
    pub fn conj(self) -> Self {
        EisensteinInt::new(self.a - self.b, -self.b)
    }

    pub fn is_real(self) -> bool {
        self.b == 0
    }

    /// `|z|² = a² - ab + b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    /// Scales by an integer.
    pub fn scale(self, k: i64) -> Self {
        EisensteinInt::new(self.a * k, self.b * k)
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        EisensteinInt::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        EisensteinInt::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinInt::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = -1 - ω
        let bd = self.b * o.b;
        EisensteinInt::new(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}ω"),
            (a, b) if b < 0 => write!(f, "{a} - {}ω", -b),
            (a, b) => write!(f, "{a} + {b}ω"),
        }
    }
}

/// How often each trace value occurs over a summation domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct TraceCounts(pub [u64; 3]);

impl TraceCounts {
    pub fn record(&mut self, t: u8) {
        self.0[(t % 3) as usize] += 1;
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `N₀ + N₁ω + N₂ω² = (N₀ - N₂) + (N₁ - N₂)ω`.
    pub fn to_eisenstein(&self) -> EisensteinInt {
        let [n0, n1, n2] = self.0.map(|c| c as i64);
        EisensteinInt::new(n0 - n2, n1 - n2)
    }
}

impl Add for TraceCounts {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        TraceCounts([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

/// `Σ_{x ∈ domain} χ(f(x))`.
pub fn additive_char_sum(
    field: &Field,
    domain: impl IntoIterator<Item = Elem>,
    f: impl Fn(Elem) -> Elem,
) -> EisensteinInt {
    let mut counts = TraceCounts::default();
    for x in domain {
        counts.record(field.trace(f(x)));
    }
    counts.to_eisenstein()
}

/// Closed form of the quadratic Gauss sum `G(η, χ)` over GF(3^s):
/// `(-1)^{s-1} (√-1)^s 3^{s/2}` since `3 ≡ 3 mod 4`.
///
/// For even s this is the rational integer `(-1)^{s-1} (-1)^{s/2} 3^{s/2}`.
/// For odd s it is `±√-1·√3·3^{(s-1)/2}`, which lies in Z[ω] through
/// `√-1·√3 = ω - ω² = 1 + 2ω`.
pub fn gauss_quadratic(s: u32) -> Result<EisensteinInt> {
    if s == 0 {
        return Err(Error::Domain("extension degree s must be positive".into()));
    }
    let sign_outer = if (s - 1) % 2 == 0 { 1 } else { -1 };
    if s % 2 == 0 {
        let i_pow = if (s / 2) % 2 == 0 { 1 } else { -1 };
        Ok(EisensteinInt::integer(sign_outer * i_pow * pow3(s / 2) as i64))
    } else {
        // (√-1)^s = (-1)^{(s-1)/2} √-1
        let i_pow = if ((s - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let i_sqrt3 = EisensteinInt::new(1, 2);
        Ok(i_sqrt3.scale(sign_outer * i_pow * pow3((s - 1) / 2) as i64))
    }
}

/// `G(η, χ) = Σ_{x ≠ 0} η(x) χ(x)` by direct summation.
pub fn gauss_quadratic_direct(field: &Field) -> EisensteinInt {
    let mut squares = TraceCounts::default();
    let mut others = TraceCounts::default();
    for x in field.nonzero() {
        if field.is_square(x).expect("nonzero") {
            squares.record(field.trace(x));
        } else {
            others.record(field.trace(x));
        }
    }
    squares.to_eisenstein() - others.to_eisenstein()
}

/// Both sides of the power-sum identity for `d = gcd(e, 3^m - 1) = 2`:
/// `Σ_{x} χ(a x^e + b) = χ(b) η(a) G(η, χ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PowerSumSides {
    pub direct: EisensteinInt,
    pub closed: EisensteinInt,
}

impl PowerSumSides {
    pub fn holds(&self) -> bool {
        self.direct == self.closed
    }
}

pub fn power_sum_sides(field: &Field, a: Elem, b: Elem, exponent: u64) -> Result<PowerSumSides> {
    let n = field.group_order();
    let d = gcd(n, (exponent % n as u64) as u32);
    // exponent ≡ 0 mod n gives d = n, not 2
    if d != 2 || exponent == 0 {
        return Err(Error::Unsupported(format!(
            "gcd({exponent}, {n}) = {d}; only d = 2 (the quadratic character) is implemented"
        )));
    }
    if a.is_zero() {
        return Err(Error::Domain("a must be nonzero".into()));
    }
    let direct = additive_char_sum(field, field.elements(), |x| {
        let xe = field.pow(x, exponent as i64).expect("nonnegative exponent");
        field.add(field.mul(a, xe), b)
    });
    let chi_b = EisensteinInt::omega_pow(field.trace(b) as i64);
    let eta_a = field.quadratic_character(a) as i64;
    let g = gauss_quadratic(field.degree())?;
    Ok(PowerSumSides {
        direct,
        closed: (chi_b * g).scale(eta_a),
    })
}

/// Whether the d = 2 power-sum identity holds for `(a, b, e)`.
pub fn power_sum_identity_check(field: &Field, a: Elem, b: Elem, exponent: u64) -> Result<bool> {
    Ok(power_sum_sides(field, a, b, exponent)?.holds())
}

/// Trace counts of `a x + b x^{-1}` over nonzero `x`. Uses linearity of the
/// trace: `Tr(ax + b/x) = Tr(ax) + Tr(b/x)`.
pub fn kloosterman_counts(field: &Field, a: Elem, b: Elem) -> TraceCounts {
    let n = field.group_order() as i64;
    let tr = field.trace_table();
    let la = field.log(a).map(|l| l as i64);
    let lb = field.log(b).map(|l| l as i64);
    let mut counts = TraceCounts::default();
    for j in 0..n {
        let ta = la.map_or(0, |l| tr[field.alpha_pow(l + j).value() as usize]);
        let tb = lb.map_or(0, |l| tr[field.alpha_pow(l - j).value() as usize]);
        counts.record((ta + tb) % 3);
    }
    counts
}

/// The Kloosterman sum `K_m(a, b) = Σ_{x ≠ 0} χ(a x + b x^{-1})`.
///
/// The sum is invariant under `x ↦ -x`, which conjugates every term, so it
/// is a rational integer.
///
/// # Panics
///
/// If the computed sum has a nonzero ω-component.
pub fn kloosterman(field: &Field, a: Elem, b: Elem) -> i64 {
    let z = kloosterman_counts(field, a, b).to_eisenstein();
    assert!(z.is_real(), "Kloosterman sum {z} is not rational");
    z.a
}

/// `W_H(c(a, b)) = 2n/3 - (2/3) K_m(a, b)` for the odd-m LCD family.
pub fn kloosterman_weight_bridge(field: &Field, a: Elem, b: Elem) -> Result<u32> {
    let m = field.degree();
    if m % 2 == 0 {
        return Err(Error::Domain(format!("the weight bridge needs odd m, got {m}")));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::Domain("(a, b) must not both be zero".into()));
    }
    let n = field.group_order() as i64;
    let num = 2 * n - 2 * kloosterman(field, a, b);
    assert!(num % 3 == 0, "2n - 2K = {num} is not divisible by 3");
    Ok((num / 3) as u32)
}

/// Maximum of `K_m(a, b)` over `(a, b) ≠ (0, 0)` against
/// `(3^m + 2·3^{m-1} - 1)/4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KloostermanBoundReport {
    pub m: u32,
    pub max: i64,
    /// A pair (packed values) attaining the maximum, smallest first.
    pub argmax: (u32, u32),
    pub bound: i64,
    pub pass: bool,
    /// `bound - max`.
    pub gap: i64,
}

/// Largest m scanned without `force`.
pub const KLOOSTERMAN_SCAN_MAX_DEGREE: u32 = 5;

pub fn kloosterman_bound(m: u32) -> Result<i64> {
    if m % 2 == 0 {
        return Err(Error::Domain(format!("the Kloosterman bound needs odd m, got {m}")));
    }
    Ok(((pow3(m) + 2 * pow3(m - 1) - 1) / 4) as i64)
}

/// Scans all `3^{2m} - 1` pairs; the grid is split by `a` across workers.
pub fn kloosterman_bound_scan(field: &Field, force: bool, workers: usize) -> Result<KloostermanBoundReport> {
    let m = field.degree();
    let bound = kloosterman_bound(m)?;
    if m > KLOOSTERMAN_SCAN_MAX_DEGREE && !force {
        return Err(Error::Capacity(format!(
            "scanning 3^{} pairs at m = {m} needs force",
            2 * m
        )));
    }
    let size = field.size();
    let best = with_workers(workers, || {
        (0..size)
            .into_par_iter()
            .map(|a| {
                let mut best: Option<(i64, u32, u32)> = None;
                for b in 0..size {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let k = kloosterman(field, Elem(a), Elem(b));
                    if best.map_or(true, |(bk, _, _)| k > bk) {
                        best = Some((k, a, b));
                    }
                }
                best
            })
            .reduce(
                || None,
                |x, y| match (x, y) {
                    (Some(p), Some(q)) => Some(if q.0 > p.0 || (q.0 == p.0 && (q.1, q.2) < (p.1, p.2)) { q } else { p }),
                    (p, None) => p,
                    (None, q) => q,
                },
            )
    })?
    .expect("at least one pair");
    Ok(KloostermanBoundReport {
        m,
        max: best.0,
        argmax: (best.1, best.2),
        bound,
        pass: best.0 <= bound,
        gap: bound - best.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eisenstein_arithmetic() {
        let w = EisensteinInt::OMEGA;
        assert_eq!(w * w, EisensteinInt::new(-1, -1));
        assert_eq!(w * w * w, EisensteinInt::ONE);
        assert_eq!(w + w * w, EisensteinInt::integer(-1));
        assert_eq!(w.conj(), w * w);
        assert_eq!(EisensteinInt::new(1, 2).norm(), 3);
        // (1 + 2ω)² = -3
        assert_eq!(EisensteinInt::new(1, 2) * EisensteinInt::new(1, 2), EisensteinInt::integer(-3));
    }

    #[test]
    fn orthogonality_edges() {
        let f = Field::new(3).unwrap();
        assert_eq!(additive_char_sum(&f, f.elements(), |x| x), EisensteinInt::ZERO);
        assert_eq!(additive_char_sum(&f, f.elements(), |_| Elem::ZERO), EisensteinInt::integer(27));
        let g9 = Field::new(2).unwrap();
        assert_eq!(
            additive_char_sum(&g9, g9.elements(), |x| g9.mul(x, x)),
            EisensteinInt::integer(3)
        );
    }

    #[test]
    fn gauss_closed_forms() {
        assert_eq!(gauss_quadratic(2).unwrap(), EisensteinInt::integer(3));
        assert_eq!(gauss_quadratic(4).unwrap(), EisensteinInt::integer(-9));
        assert_eq!(gauss_quadratic(6).unwrap(), EisensteinInt::integer(27));
        // over F3: η(1)ω + η(2)ω² = ω - ω² = 1 + 2ω
        assert_eq!(gauss_quadratic(1).unwrap(), EisensteinInt::new(1, 2));
        assert!(gauss_quadratic(0).is_err());
    }

    #[test]
    fn power_sum_examples() {
        let f = Field::new(2).unwrap();
        let s = power_sum_sides(&f, Elem::ONE, Elem::ZERO, 2).unwrap();
        assert_eq!((s.direct, s.closed), (EisensteinInt::integer(3), EisensteinInt::integer(3)));
        let s = power_sum_sides(&f, f.alpha(), Elem::ZERO, 2).unwrap();
        assert_eq!((s.direct, s.closed), (EisensteinInt::integer(-3), EisensteinInt::integer(-3)));
        let f4 = Field::new(4).unwrap();
        assert!(power_sum_identity_check(&f4, Elem::ONE, f4.alpha(), 2).unwrap());
        assert!(matches!(power_sum_sides(&f, Elem::ONE, Elem::ZERO, 4), Err(Error::Unsupported(_))));
        assert!(matches!(power_sum_sides(&f, Elem::ZERO, Elem::ZERO, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn kloosterman_edges() {
        let f1 = Field::new(1).unwrap();
        assert_eq!(kloosterman(&f1, Elem::ONE, Elem::ONE), -1);
        for m in 1..=4 {
            let f = Field::new(m).unwrap();
            assert_eq!(kloosterman(&f, Elem::ZERO, Elem::ZERO), f.group_order() as i64);
            assert_eq!(kloosterman(&f, f.alpha(), Elem::ZERO), -1);
        }
    }

    #[test]
    fn bridge_single_pair() {
        let f = Field::new(3).unwrap();
        assert_eq!(kloosterman_weight_bridge(&f, Elem::ONE, Elem::ZERO).unwrap(), 18);
        assert!(kloosterman_weight_bridge(&f, Elem::ZERO, Elem::ZERO).is_err());
        let f4 = Field::new(4).unwrap();
        assert!(kloosterman_weight_bridge(&f4, Elem::ONE, Elem::ZERO).is_err());
    }

    #[test]
    fn bound_values() {
        assert_eq!(kloosterman_bound(1).unwrap(), 1);
        assert_eq!(kloosterman_bound(3).unwrap(), 11);
        assert_eq!(kloosterman_bound(5).unwrap(), 101);
        assert!(kloosterman_bound(4).is_err());
        let f7 = Field::new(7).unwrap();
        assert!(matches!(kloosterman_bound_scan(&f7, false, 1), Err(Error::Capacity(_))));
    }
}
