//! Dense polynomials over F₃.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so the zero polynomial is the empty vector and `degree = len - 1`.

mod minimal;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use minimal::{generator_from_defining_set, minimal_polynomial};

/// Inverse in F₃ (only 1 and 2 are invertible, and both are self-inverse).
#[inline]
pub(crate) fn f3_inv(c: u8) -> u8 {
    debug_assert!(c == 1 || c == 2);
    c
}

/// A polynomial over F₃ in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Poly3 {
    coeffs: Vec<u8>,
}

impl TryFrom<Vec<u8>> for Poly3 {
    type Error = Error;

    fn try_from(coeffs: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c > 2) {
            return Err(Error::Parse(format!("coefficient {bad} is not in F3")));
        }
        Ok(Poly3::from_coeffs(coeffs))
    }
}

impl From<Poly3> for Vec<u8> {
    fn from(p: Poly3) -> Vec<u8> {
        p.coeffs
    }
}

impl Poly3 {
    pub fn zero() -> Self {
        Poly3 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly3 { coeffs: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly3 { coeffs: vec![0, 1] }
    }

    /// `c·x^k`.
    pub fn monomial(k: usize, c: u8) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c % 3;
        Poly3::from_coeffs(coeffs)
    }

    /// `x^n - 1`, the modulus of the cyclic-code quotient ring.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = 2;
        coeffs[n] = 1;
        Poly3 { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, reducing each mod 3.
    pub fn from_coeffs(mut coeffs: Vec<u8>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= 3;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly3 { coeffs }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn scale(&self, c: u8) -> Self {
        Poly3::from_coeffs(self.coeffs.iter().map(|&a| a * (c % 3)).collect())
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            0 | 1 => self.clone(),
            c => self.scale(f3_inv(c)),
        }
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly3) -> Result<(Poly3, Poly3)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Domain("division by the zero polynomial".into()));
        };
        let lead_inv = f3_inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly3::zero(), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let q = c * lead_inv % 3;
            quot[top - dd] = q;
            let shift = top - dd;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                if d != 0 {
                    // subtract q·d, i.e. add (3 - q·d mod 3)
                    rem[shift + i] = (rem[shift + i] + 3 - q * d % 3) % 3;
                }
            }
        }
        rem.truncate(dd);
        Ok((Poly3::from_coeffs(quot), Poly3::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly3) -> Result<Poly3> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly3) -> Poly3 {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly3) -> Poly3 {
        if self.is_zero() || other.is_zero() {
            return Poly3::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.divmod(&g).expect("gcd is nonzero");
        (&q * other).monic()
    }

    /// `a₀⁻¹ · x^t · f(1/x)`, whose roots are the inverses of the roots of `f`.
    pub fn reciprocal(&self) -> Result<Poly3> {
        let a0 = self.coeff(0);
        if a0 == 0 {
            return Err(Error::Domain(
                "reciprocal needs a nonzero constant term".into(),
            ));
        }
        let inv = f3_inv(a0);
        Ok(Poly3::from_coeffs(
            self.coeffs.iter().rev().map(|&c| c * inv).collect(),
        ))
    }

    /// Whether `f` equals its reciprocal. For a cyclic code's generator this
    /// is exactly the LCD criterion.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == *self)
    }

    /// Evaluates at an F₃ point.
    pub fn eval_f3(&self, x: u8) -> u8 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| (acc * x as u32 + c as u32) % 3) as u8
    }
}

impl Add for &Poly3 {
    type Output = Poly3;

    fn add(self, rhs: &Poly3) -> Poly3 {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly3::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly3 {
    type Output = Poly3;

    fn neg(self) -> Poly3 {
        self.scale(2)
    }
}

impl Sub for &Poly3 {
    type Output = Poly3;

    fn sub(self, rhs: &Poly3) -> Poly3 {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly3::from_coeffs(
            (0..len)
                .map(|i| self.coeff(i) + 3 - rhs.coeff(i))
                .collect(),
        )
    }
}

impl Mul for &Poly3 {
    type Output = Poly3;

    fn mul(self, rhs: &Poly3) -> Poly3 {
        if self.is_zero() || rhs.is_zero() {
            return Poly3::zero();
        }
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += (a * b) as u32;
            }
        }
        Poly3::from_coeffs(out.into_iter().map(|c| (c % 3) as u8).collect())
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly3({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u8]) -> Poly3 {
        Poly3::from_coeffs(c.to_vec())
    }

    #[test]
    fn product_of_conjugate_linears() {
        // (x+1)(x+2) = x^2 + 3x + 2 = x^2 + 2
        assert_eq!(&p(&[1, 1]) * &p(&[2, 1]), p(&[2, 0, 1]));
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let x2m1 = p(&[2, 0, 1]);
        assert_eq!(x2m1.gcd(&p(&[1, 1])), p(&[1, 1]));
        assert_eq!(p(&[2, 2]).gcd(&Poly3::zero()), p(&[1, 1]));
    }

    #[test]
    fn divmod_identity_and_zero_divisor() {
        let a = p(&[1, 2, 0, 1, 1, 2]);
        let b = p(&[2, 0, 2]);
        let (q, r) = a.divmod(&b).unwrap();
        assert!(r.degree().map_or(true, |d| d < 2));
        assert_eq!(&(&q * &b) + &r, a);
        assert!(matches!(a.divmod(&Poly3::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[1, 1]).reciprocal().unwrap(), p(&[1, 1]));
        let f = p(&[1, 2, 0, 1]); // x^3 + 2x + 1
        assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
        assert!(p(&[0, 1]).reciprocal().is_err());
        assert!(p(&[1, 1]).is_self_reciprocal().unwrap());
        assert!(!f.is_self_reciprocal().unwrap());
        // x^n - 1 is self-reciprocal up to sign, hence exactly after a0^-1 scaling
        assert!(Poly3::x_pow_minus_one(8).is_self_reciprocal().unwrap());
    }

    #[test]
    fn lcm_degree() {
        let a = &p(&[1, 1]) * &p(&[1, 0, 1]);
        let b = &p(&[1, 1]) * &p(&[2, 1]);
        assert_eq!(a.lcm(&b).degree(), Some(4));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 1, 1]).to_string(), "x^2 + x + 2");
        assert_eq!(p(&[0, 2]).to_string(), "2x");
        assert_eq!(Poly3::zero().to_string(), "0");
    }

    #[test]
    fn serde_rejects_non_ternary() {
        let ok: Poly3 = serde_json::from_str("[2,1,1,0]").unwrap();
        assert_eq!(ok, p(&[2, 1, 1]));
        assert!(serde_json::from_str::<Poly3>("[3]").is_err());
        assert_eq!(serde_json::to_string(&ok).unwrap(), "[2,1,1]");
    }
}
