use crate::cosets;
use crate::field::{Elem, Field};
use crate::polyring::Poly3;
use crate::{Error, Result};

/// Expands `∏ (x - α^k)` over `exponents` in GF(3^m)[x] and pulls the result
/// back to F₃[x], failing if any coefficient leaves the prime field.
fn expand_roots(field: &Field, roots: impl Iterator<Item = Elem>) -> Result<Poly3> {
    let mut acc: Vec<Elem> = vec![Elem::ONE];
    for r in roots {
        let neg_r = field.neg(r);
        let mut next = vec![Elem::ZERO; acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, neg_r));
        }
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            c.as_f3().ok_or_else(|| {
                Error::Verification(format!("coefficient {c} of a root product is not in F3"))
            })
        })
        .collect::<Result<Vec<u8>>>()?;
    Ok(Poly3::from_coeffs(coeffs))
}

/// Minimal polynomial over F₃ of a field element.
///
/// Expands the product over the conjugates `x^{3^i}`, i.e. over the
/// cyclotomic coset of `log x`; zero maps to `x`.
pub fn minimal_polynomial(field: &Field, x: Elem) -> Poly3 {
    let Some(l) = field.log(x) else {
        return Poly3::x();
    };
    let c = cosets::coset(l as i64, field.group_order());
    expand_roots(field, c.elements.iter().map(|&k| field.alpha_pow(k as i64)))
        .expect("conjugate products lie in F3[x]")
}

/// Checks that `z` is a union of cyclotomic cosets mod `n` and returns a
/// membership bitmap.
pub(crate) fn closure_bitmap(z: &[u32], n: u32) -> Result<Vec<bool>> {
    let mut member = vec![false; n as usize];
    for &k in z {
        if k >= n {
            return Err(Error::Usage(format!("residue {k} is not reduced mod {n}")));
        }
        member[k as usize] = true;
    }
    for &k in z {
        let next = (k as u64 * 3 % n as u64) as usize;
        if !member[next] {
            return Err(Error::Usage(format!(
                "defining set is not closed under multiplication by 3 mod {n}: \
                 {k} present but {next} missing"
            )));
        }
    }
    Ok(member)
}

/// Product over the cosets selected by `member` of their minimal polynomials.
fn product_of_cosets(field: &Field, member: &[bool], want: bool) -> Poly3 {
    let n = field.group_order();
    let mut seen = vec![false; n as usize];
    let mut acc = Poly3::one();
    for s in 0..n {
        if seen[s as usize] || member[s as usize] != want {
            continue;
        }
        let c = cosets::coset(s as i64, n);
        for &k in &c.elements {
            seen[k as usize] = true;
        }
        let mp = minimal_polynomial(field, field.alpha_pow(s as i64));
        acc = &acc * &mp;
    }
    acc
}

/// `g(x) = ∏_{i∈Z} (x - α^i)` for a coset-closed defining set `Z`.
///
/// When `Z` covers more than half of `Z_n` the complementary product `h` is
/// built instead and `g = (x^n - 1) / h`, which keeps large defining sets
/// cheap.
pub fn generator_from_defining_set(field: &Field, z: &[u32]) -> Result<Poly3> {
    let n = field.group_order();
    let member = closure_bitmap(z, n)?;
    let size = member.iter().filter(|&&b| b).count();
    if 2 * size <= n as usize {
        return Ok(product_of_cosets(field, &member, true));
    }
    let h = product_of_cosets(field, &member, false);
    let (g, r) = Poly3::x_pow_minus_one(n as usize).divmod(&h)?;
    debug_assert!(r.is_zero());
    Ok(g)
}
