//! Text parsers for the command-line inputs.
//!
//! Lists are separated by commas, whitespace, or both. Parsers never panic;
//! malformed input yields [`Error::Parse`].

use crate::polyring::Poly3;
use crate::{Error, Result};

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
}

/// Coefficients over F₃, lowest degree first, e.g. `"2,1,1"`.
pub fn coefficients(s: &str) -> Result<Vec<u8>> {
    let out: Vec<u8> = tokens(s)
        .map(|t| match t {
            "0" => Ok(0),
            "1" => Ok(1),
            "2" => Ok(2),
            _ => Err(Error::Parse(format!("coefficient {t:?} is not 0, 1 or 2"))),
        })
        .collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::Parse("empty coefficient list".into()));
    }
    Ok(out)
}

/// A monic modulus given as coefficients, lowest degree first.
pub fn modulus(s: &str) -> Result<Poly3> {
    let p = Poly3::from_coeffs(coefficients(s)?);
    match p.degree() {
        Some(d) if d >= 1 => Ok(p),
        _ => Err(Error::Parse(format!("modulus {s:?} must have positive degree"))),
    }
}

/// Signed integer residues, e.g. `"1, -1, 13"`. An empty list is allowed.
pub fn residues(s: &str) -> Result<Vec<i64>> {
    tokens(s)
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("residue {t:?} is not an integer")))
        })
        .collect()
}
