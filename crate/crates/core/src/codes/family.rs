use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codes::{code_from_defining_set, coset_closure, CyclicCode};
use crate::cosets::{cosets_by_signed_leader, delta_formula};
use crate::field::{Field, MAX_DEGREE};
use crate::{Error, Result};

/// The seven code families, tagged A through G.
///
/// | tag | defining set `Z` | admissible m | dimension |
/// |-----|------------------|--------------|-----------|
/// | A | `∪_{-δ₂<s≤δ₁} C_s` | odd, ≥ 3 | m |
/// | B | `∪_{-δ₃<s≤δ₁} C_s` | ≡ 2 mod 4, ≥ 6 | m |
/// | C | `∪_{-δ₃<s<δ₁} C_s` | ≡ 2 mod 4, ≥ 6 | m + 1 |
/// | D | `∪_{\|s\|<δ₁} C_s` | ≥ 1 | 1 |
/// | E | `∪_{\|s\|<δ₂} C_s ∪ C_{δ₁}` | odd, ≥ 3 | 2m |
/// | F | `∪_{\|s\|<δ₂} C_s` | even, ≥ 2 | 3 |
/// | G | `∪_{\|s\|<δ₃} C_s ∪ C_{δ₁} ∪ C_{δ₂}` | ≡ 2 mod 4, ≥ 6 | 2m |
///
/// D, E, F and G are LCD.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    /// Checks the family's constraint on m.
    pub fn check_admissible(self, m: u32) -> Result<()> {
        let (ok, rule) = match self {
            Family::A | Family::E => (m % 2 == 1 && m >= 3, "m odd and m >= 3"),
            Family::B | Family::C | Family::G => (m % 4 == 2 && m >= 6, "m = 2 mod 4 and m >= 6"),
            Family::D => (m >= 1, "m >= 1"),
            Family::F => (m % 2 == 0 && m >= 2, "m even and m >= 2"),
        };
        if !ok {
            return Err(Error::Domain(format!(
                "family {self} needs {rule}, got m = {m}"
            )));
        }
        if m > MAX_DEGREE {
            return Err(Error::Capacity(format!("m = {m} exceeds {MAX_DEGREE}")));
        }
        Ok(())
    }

    pub fn is_admissible(self, m: u32) -> bool {
        self.check_admissible(m).is_ok()
    }

    /// Smallest admissible m.
    pub fn smallest_m(self) -> u32 {
        (1..=MAX_DEGREE).find(|&m| self.is_admissible(m)).expect("every family has some m")
    }

    /// The dimension the family's theorem claims.
    pub fn expected_dimension(self, m: u32) -> u32 {
        match self {
            Family::A | Family::B => m,
            Family::C => m + 1,
            Family::D => 1,
            Family::E | Family::G => 2 * m,
            Family::F => 3,
        }
    }

    /// Designed distance carried in the family's BCH name.
    pub fn designed_distance(self, m: u32) -> Result<u32> {
        self.check_admissible(m)?;
        let d = |r| delta_formula(m, r).map(|v| v as u32);
        Ok(match self {
            Family::A => d(1)? + d(2)? + 1,
            Family::B => d(1)? + d(3)? + 1,
            Family::C => d(1)? + d(3)?,
            Family::D => 2 * d(1)?,
            Family::E | Family::F => 2 * d(2)?,
            Family::G => 2 * d(3)?,
        })
    }

    /// Whether the family is claimed to be LCD.
    pub fn claims_lcd(self) -> bool {
        matches!(self, Family::D | Family::E | Family::F | Family::G)
    }

    /// The defining set, as a sorted union of cosets.
    ///
    /// For A, B and C a coset `C_s` belongs to the set when its signed leader
    /// (see [`signed_leader`](crate::cosets::signed_leader)) lies in the range.
    /// Taken over members instead, the range would meet every coset.
    pub fn defining_set(self, m: u32) -> Result<Vec<u32>> {
        self.check_admissible(m)?;
        let n = (crate::pow3(m) - 1) as u32;
        let d = |r| delta_formula(m, r).map(|v| v as i64);
        let d1 = d(1)?;
        let indices: Vec<i64> = match self {
            // one-sided ranges select cosets by signed leader, not by members
            Family::A => {
                let d2 = d(2)?;
                return Ok(cosets_by_signed_leader(n, |s| -d2 < s && s <= d1));
            }
            Family::B => {
                let d3 = d(3)?;
                return Ok(cosets_by_signed_leader(n, |s| -d3 < s && s <= d1));
            }
            Family::C => {
                let d3 = d(3)?;
                return Ok(cosets_by_signed_leader(n, |s| -d3 < s && s < d1));
            }
            Family::D => (-d1 + 1..d1).collect(),
            Family::E => {
                let d2 = d(2)?;
                (-d2 + 1..d2).chain([d1]).collect()
            }
            Family::F => {
                let d2 = d(2)?;
                (-d2 + 1..d2).collect()
            }
            Family::G => {
                let d3 = d(3)?;
                (-d3 + 1..d3).chain([d1, d(2)?]).collect()
            }
        };
        Ok(coset_closure(indices, n))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family {other:?}, expected A..G"))),
        }
    }
}

/// Builds a family member and checks the dimension against the claim.
pub fn construct_family(family: Family, m: u32, field: &Field) -> Result<CyclicCode> {
    if field.degree() != m {
        return Err(Error::Usage(format!(
            "field has degree {}, family requested at m = {m}",
            field.degree()
        )));
    }
    let z: Vec<i64> = family.defining_set(m)?.into_iter().map(i64::from).collect();
    let mut code = code_from_defining_set(field, &z)?;
    let expected = family.expected_dimension(m);
    if code.dimension != expected {
        return Err(Error::Verification(format!(
            "family {family} at m = {m} has dimension {}, expected {expected}",
            code.dimension
        )));
    }
    code.designed_distance = Some(family.designed_distance(m)?);
    code.family = Some(family);
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility() {
        assert!(Family::A.is_admissible(5));
        assert!(!Family::A.is_admissible(1));
        assert!(!Family::A.is_admissible(4));
        assert!(Family::B.is_admissible(6) && Family::B.is_admissible(10));
        assert!(!Family::B.is_admissible(2) && !Family::B.is_admissible(8));
        assert!(Family::D.is_admissible(1));
        assert!(Family::F.is_admissible(2) && Family::F.is_admissible(4));
        assert!(matches!(Family::G.check_admissible(4), Err(Error::Domain(_))));
        let smallest: Vec<u32> = Family::ALL.iter().map(|f| f.smallest_m()).collect();
        assert_eq!(smallest, vec![3, 6, 6, 1, 3, 2, 6]);
    }

    #[test]
    fn parse_and_display() {
        for f in Family::ALL {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!("e".parse::<Family>().unwrap(), Family::E);
        assert!("H".parse::<Family>().is_err());
    }

    #[test]
    fn defining_set_sizes() {
        assert_eq!(Family::D.defining_set(3).unwrap().len(), 25);
        assert_eq!(Family::E.defining_set(3).unwrap().len(), 20);
        assert_eq!(Family::F.defining_set(2).unwrap(), vec![0, 1, 3, 5, 7]);
        // everything except C_{-5} = {7, 11, 21}
        let a3 = Family::A.defining_set(3).unwrap();
        assert_eq!(a3.len(), 23);
        assert!(!a3.contains(&21) && a3.contains(&5));
    }

    #[test]
    fn designed_distances() {
        assert_eq!(Family::E.designed_distance(3).unwrap(), 10);
        assert_eq!(Family::D.designed_distance(3).unwrap(), 26);
        assert_eq!(Family::G.designed_distance(6).unwrap(), 284);
    }
}
