//! Arithmetic in GF(3^m).
//!
//! Elements are packed base-3 integers: `Σ cᵢ·3^i` stands for `Σ cᵢ·α^i`
//! where α is a root of the context's modulus. Addition is digitwise mod 3;
//! multiplication, inversion and powers go through log/antilog tables built
//! once per [`Field`].
//!
//! The modulus defaults to the first primitive monic polynomial of degree
//! `m` when non-leading coefficients are scanned in ascending packed order.
//! Weight distributions and coset structure do not depend on that choice,
//! generator polynomial coefficients do; [`Field::with_modulus`] accepts any
//! primitive modulus for cross-checking against other tools.

use std::fmt;

use serde::Serialize;

use crate::polyring::Poly3;
use crate::{pow3, Error, Result};

/// Largest supported extension degree (3^16 ≈ 43M table entries).
pub const MAX_DEGREE: u32 = 16;

/// A packed element of GF(3^m).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Packed base-3 value.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `Some(c)` when the element lies in the prime field F₃.
    pub fn as_f3(self) -> Option<u8> {
        (self.0 < 3).then_some(self.0 as u8)
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elem({})", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const NO_LOG: u32 = u32::MAX;

/// GF(3^m) with its log/antilog and trace tables. Immutable once built.
#[derive(Clone)]
pub struct Field {
    m: u32,
    size: u32,
    n: u32,
    modulus: Poly3,
    /// `3^i` for `i < m`.
    place: Vec<u32>,
    /// Packed value of `-c·(modulus - x^m)` for c = 0, 1, 2.
    fold: [u32; 3],
    log: Vec<u32>,
    exp: Vec<u32>,
    trace: Vec<u8>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

fn check_degree(m: u32) -> Result<()> {
    if m == 0 || m > MAX_DEGREE {
        return Err(Error::Capacity(format!(
            "extension degree m = {m} outside 1..={MAX_DEGREE}"
        )));
    }
    Ok(())
}

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= v {
        if v % p == 0 {
            out.push(p);
            while v % p == 0 {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// `a·b mod f` on digit vectors of length `m`, `f` monic of degree `m`.
fn mulmod(a: &[u8], b: &[u8], f: &Poly3) -> Vec<u8> {
    let m = a.len();
    let mut r = vec![0u32; 2 * m - 1];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] += (x * y) as u32;
        }
    }
    let mut r: Vec<u8> = r.into_iter().map(|c| (c % 3) as u8).collect();
    for top in (m..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for k in 0..=m {
            let idx = top - m + k;
            r[idx] = (r[idx] + 3 - c * f.coeff(k) % 3) % 3;
        }
    }
    r.truncate(m);
    r
}

fn powmod(base: &[u8], mut e: u64, f: &Poly3) -> Vec<u8> {
    let m = base.len();
    let mut acc = vec![0u8; m];
    acc[0] = 1;
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, f);
        }
        b = mulmod(&b, &b, f);
        e >>= 1;
    }
    acc
}

/// Whether the root of a monic degree-`m` polynomial has multiplicative
/// order exactly `3^m - 1`. An element of that order exists in
/// F₃[x]/(f) only when the quotient is a field, so this also certifies
/// irreducibility.
fn is_primitive(f: &Poly3) -> bool {
    let Some(m) = f.degree() else { return false };
    if m == 0 || !f.is_monic() || f.coeff(0) == 0 {
        return false;
    }
    let n = pow3(m as u32) - 1;
    // x reduced mod f
    let x = if m == 1 {
        vec![(3 - f.coeff(0)) % 3]
    } else {
        let mut v = vec![0u8; m];
        v[1] = 1;
        v
    };
    let mut one = vec![0u8; m];
    one[0] = 1;
    if powmod(&x, n, f) != one {
        return false;
    }
    prime_factors(n)
        .into_iter()
        .all(|p| powmod(&x, n / p, f) != one)
}

impl Field {
    /// Builds GF(3^m) over the first primitive modulus in scan order.
    pub fn new(m: u32) -> Result<Field> {
        check_degree(m)?;
        let size = pow3(m);
        for enc in 0..size {
            let mut coeffs: Vec<u8> = (0..m).map(|i| (enc / pow3(i) % 3) as u8).collect();
            coeffs.push(1);
            let f = Poly3::from_coeffs(coeffs);
            if is_primitive(&f) {
                return Ok(Field::build(m, f));
            }
        }
        unreachable!("a primitive polynomial of every degree exists")
    }

    /// Builds GF(3^m) over a caller-supplied modulus, which must be monic and
    /// primitive.
    pub fn with_modulus(modulus: Poly3) -> Result<Field> {
        let m = modulus
            .degree()
            .ok_or_else(|| Error::Domain("modulus is the zero polynomial".into()))?
            as u32;
        check_degree(m)?;
        if !modulus.is_monic() {
            return Err(Error::Domain(format!("modulus {modulus} is not monic")));
        }
        if !is_primitive(&modulus) {
            return Err(Error::Domain(format!("modulus {modulus} is not primitive")));
        }
        Ok(Field::build(m, modulus))
    }

    fn build(m: u32, modulus: Poly3) -> Field {
        let size = pow3(m) as u32;
        let n = size - 1;
        let place: Vec<u32> = (0..m).map(|i| pow3(i) as u32).collect();
        let mut fold = [0u32; 3];
        for c in 1..3u8 {
            fold[c as usize] = (0..m as usize)
                .map(|i| ((3 - c * modulus.coeff(i) % 3) % 3) as u32 * place[i])
                .sum();
        }
        let mut field = Field {
            m,
            size,
            n,
            modulus,
            place,
            fold,
            log: vec![NO_LOG; size as usize],
            exp: Vec::with_capacity(n as usize),
            trace: Vec::new(),
        };
        let mut v = 1u32;
        for k in 0..n {
            debug_assert_eq!(field.log[v as usize], NO_LOG, "modulus is primitive");
            field.log[v as usize] = k;
            field.exp.push(v);
            v = field.times_alpha(v);
        }
        debug_assert_eq!(v, 1);
        field.trace = field.build_trace();
        field
    }

    /// Multiplies a packed value by α through a digit shift and one fold.
    fn times_alpha(&self, v: u32) -> u32 {
        let high = self.place[self.m as usize - 1];
        let top = v / high;
        let shifted = (v % high) * 3;
        self.add_raw(shifted, self.fold[top as usize])
    }

    fn build_trace(&self) -> Vec<u8> {
        // absolute trace of the basis α^i from the Frobenius sum, then extend
        // linearly: tr(v) = tr(v mod 3^(m-1)) + top·tr(α^(m-1))
        let basis: Vec<u8> = (0..self.m)
            .map(|i| {
                let x = Elem(self.place[i as usize]);
                self.frobenius_trace(x)
            })
            .collect();
        let mut tr = vec![0u8; self.size as usize];
        for i in 0..self.m as usize {
            let p = self.place[i] as usize;
            for top in 1..3usize {
                for low in 0..p {
                    tr[top * p + low] = ((top as u8 * basis[i]) + tr[low]) % 3;
                }
            }
        }
        tr
    }

    fn frobenius_trace(&self, x: Elem) -> u8 {
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..self.m {
            acc = self.add(acc, y);
            y = self.frobenius(y);
        }
        acc.as_f3().expect("absolute trace lies in F3")
    }

    /// Extension degree m.
    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements, 3^m.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Order of the multiplicative group, n = 3^m - 1.
    pub fn group_order(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> &Poly3 {
        &self.modulus
    }

    /// Validates a packed value against this context.
    pub fn elem(&self, v: u32) -> Result<Elem> {
        if v >= self.size {
            return Err(Error::Usage(format!(
                "value {v} is not an element of GF(3^{})",
                self.m
            )));
        }
        Ok(Elem(v))
    }

    /// Embeds an F₃ constant.
    pub fn from_f3(&self, c: u8) -> Elem {
        Elem((c % 3) as u32)
    }

    /// The primitive element α (the class of `x`).
    pub fn alpha(&self) -> Elem {
        self.alpha_pow(1)
    }

    /// `α^k`, with `k` taken modulo n.
    pub fn alpha_pow(&self, k: i64) -> Elem {
        Elem(self.exp[k.rem_euclid(self.n as i64) as usize])
    }

    /// Discrete logarithm base α; `None` for zero.
    pub fn log(&self, x: Elem) -> Option<u32> {
        let l = self.log[x.0 as usize];
        (l != NO_LOG).then_some(l)
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size).map(Elem)
    }

    /// Nonzero elements in packed order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> {
        (1..self.size).map(Elem)
    }

    #[inline]
    fn add_raw(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a | b != 0 {
            out += ((a % 3 + b % 3) % 3) * place;
            a /= 3;
            b /= 3;
            place *= 3;
        }
        out
    }

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.add_raw(x.0, y.0))
    }

    pub fn neg(&self, x: Elem) -> Elem {
        // negation swaps digits 1 and 2
        let (mut a, mut out, mut place) = (x.0, 0, 1);
        while a != 0 {
            out += ((3 - a % 3) % 3) * place;
            a /= 3;
            place *= 3;
        }
        Elem(out)
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    /// Scales by an F₃ constant.
    pub fn scale(&self, c: u8, x: Elem) -> Elem {
        match c % 3 {
            0 => Elem::ZERO,
            1 => x,
            _ => self.neg(x),
        }
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.0 == 0 || y.0 == 0 {
            return Elem::ZERO;
        }
        let s = self.log[x.0 as usize] as u64 + self.log[y.0 as usize] as u64;
        Elem(self.exp[(s % self.n as u64) as usize])
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        let l = self
            .log(x)
            .ok_or_else(|| Error::Domain("zero has no multiplicative inverse".into()))?;
        Ok(Elem(self.exp[((self.n - l) % self.n) as usize]))
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` for any integer exponent; negative exponents need `x ≠ 0`.
    pub fn pow(&self, x: Elem, e: i64) -> Result<Elem> {
        match self.log(x) {
            Some(l) => {
                let k = (l as i128 * e as i128).rem_euclid(self.n as i128);
                Ok(Elem(self.exp[k as usize]))
            }
            None if e > 0 => Ok(Elem::ZERO),
            None if e == 0 => Ok(Elem::ONE),
            None => Err(Error::Domain("zero raised to a negative power".into())),
        }
    }

    /// `x^3`.
    pub fn frobenius(&self, x: Elem) -> Elem {
        self.pow(x, 3).expect("positive exponent")
    }

    /// Absolute trace `Tr_{3^m/3}(x) = Σ x^{3^i}`, from the precomputed table.
    #[inline]
    pub fn trace(&self, x: Elem) -> u8 {
        self.trace[x.0 as usize]
    }

    /// The whole trace table indexed by packed value.
    pub fn trace_table(&self) -> &[u8] {
        &self.trace
    }

    /// Relative trace `Tr_{3^m/3^d}(x) = Σ_{i<m/d} x^{3^{d·i}}`.
    pub fn subfield_trace(&self, x: Elem, d: u32) -> Result<Elem> {
        if d == 0 || self.m % d != 0 {
            return Err(Error::Usage(format!(
                "{d} does not divide the extension degree {}",
                self.m
            )));
        }
        let step = pow3(d) as i64;
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..self.m / d {
            acc = self.add(acc, y);
            y = self.pow(y, step)?;
        }
        Ok(acc)
    }

    /// Whether `x` lies in the subfield GF(3^d), i.e. `x^{3^d} = x`.
    pub fn in_subfield(&self, x: Elem, d: u32) -> bool {
        self.pow(x, pow3(d) as i64).map(|y| y == x).unwrap_or(false)
    }

    /// Quadratic residuosity: true iff `log x` is even.
    pub fn is_square(&self, x: Elem) -> Result<bool> {
        let l = self
            .log(x)
            .ok_or_else(|| Error::Domain("squareness of zero is undefined".into()))?;
        Ok(l % 2 == 0)
    }

    /// Quadratic character η: +1 on squares, -1 on non-squares, 0 at zero.
    pub fn quadratic_character(&self, x: Elem) -> i8 {
        match self.log(x) {
            None => 0,
            Some(l) if l % 2 == 0 => 1,
            Some(_) => -1,
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: Elem) -> Result<u32> {
        let l = self
            .log(x)
            .ok_or_else(|| Error::Domain("zero has no multiplicative order".into()))?;
        Ok(self.n / gcd(self.n, l))
    }

    /// The polynomial over F₃ that the packed value encodes.
    pub fn to_poly(&self, x: Elem) -> Poly3 {
        Poly3::from_coeffs((0..self.m).map(|i| self.digit(x, i)).collect())
    }

    pub fn digit(&self, x: Elem, i: u32) -> u8 {
        (x.0 / self.place[i as usize] % 3) as u8
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
