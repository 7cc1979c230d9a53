use crate::codes::{Family, WeightDistribution};
use crate::{pow3, Error, Result};

/// The closed-form weight distribution of a family, where one is known.
///
/// - A: one weight `2·3^{m-1}`, `n` times.
/// - B: `(2/3)(3^m ∓ 3^{m/2})`, `n/2` times each.
/// - C: B's weights, plus `(2·3^m ± 3^{m/2})/3 - 1`, `n` times each, plus
///   weight `n` twice.
/// - D: weight `n` twice.
/// - F: `n/2` ×12, `3n/4` ×8, `n` ×6.
///
/// E and G have none: their weights are governed by Kloosterman-type sums.
pub fn closed_form_distribution(family: Family, m: u32) -> Result<WeightDistribution> {
    family.check_admissible(m)?;
    let q = pow3(m);
    let n = q - 1;
    let w = |x: u64| x as u32;
    let mut wd = WeightDistribution::new();
    wd.add(0, 1);
    match family {
        Family::A => wd.add(w(2 * pow3(m - 1)), n),
        Family::B | Family::C => {
            let r = pow3(m / 2);
            wd.add(w(2 * (q - r) / 3), n / 2);
            wd.add(w(2 * (q + r) / 3), n / 2);
            if family == Family::C {
                wd.add(w((2 * q + r) / 3 - 1), n);
                wd.add(w((2 * q - r) / 3 - 1), n);
                wd.add(w(n), 2);
            }
        }
        Family::D => wd.add(w(n), 2),
        Family::F => {
            wd.add(w(n / 2), 12);
            wd.add(w(3 * n / 4), 8);
            wd.add(w(n), 6);
        }
        Family::E | Family::G => {
            return Err(Error::Unsupported(format!(
                "family {family} has no closed-form weight distribution"
            )))
        }
    }
    Ok(wd)
}
