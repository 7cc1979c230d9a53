//! 3-cyclotomic cosets modulo `n = 3^m - 1` and absolute coset leaders.
//!
//! The absolute coset leader of `C_s` is `min{k, n-k : k ∈ C_s}`. The three
//! largest values have closed forms ([`delta_formula`]); [`top_acl_oracle`]
//! recomputes them by a full scan that never consults those formulas.

use rayon::prelude::*;
use serde::Serialize;

use crate::{pow3, Error, Result};

/// Largest m accepted by the full-scan routines.
pub const MAX_SCAN_DEGREE: u32 = 12;

/// A cyclotomic coset: the orbit of a residue under `·3 mod n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coset {
    /// Sorted residues.
    pub elements: Vec<u32>,
    /// Smallest element.
    pub leader: u32,
    /// Absolute coset leader.
    pub acl: u32,
}

impl Coset {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, k: u32) -> bool {
        self.elements.binary_search(&k).is_ok()
    }
}

/// Reduces a possibly negative index into `[0, n)`.
pub fn canonical(s: i64, n: u32) -> u32 {
    s.rem_euclid(n as i64) as u32
}

fn orbit(s: u32, n: u32) -> Vec<u32> {
    let mut out = vec![s];
    let mut k = (s as u64 * 3 % n as u64) as u32;
    while k != s {
        out.push(k);
        k = (k as u64 * 3 % n as u64) as u32;
    }
    out
}

/// The coset of `s` modulo `n`; `s` is reduced into `[0, n)` first.
///
/// # Panics
///
/// If `n` is zero or divisible by 3 (the orbit would not close).
pub fn coset(s: i64, n: u32) -> Coset {
    assert!(n > 0 && n % 3 != 0, "modulus {n} must be positive and prime to 3");
    let mut elements = orbit(canonical(s, n), n);
    elements.sort_unstable();
    let leader = elements[0];
    let acl = elements.iter().map(|&k| k.min(n - k)).min().unwrap_or(0);
    Coset {
        elements,
        leader,
        acl,
    }
}

/// `min{k, n-k}` over the orbit of `s`.
pub fn absolute_coset_leader(s: i64, n: u32) -> u32 {
    coset(s, n).acl
}

/// The absolute leader of `C_s` with a sign: `+acl` when `acl ∈ C_s`,
/// otherwise `-acl` (then `n - acl ∈ C_s`).
pub fn signed_leader(s: i64, n: u32) -> i64 {
    let c = coset(s, n);
    if c.contains(c.acl) {
        c.acl as i64
    } else {
        -(c.acl as i64)
    }
}

/// Sorted union of the cosets whose signed leader satisfies `keep`.
pub fn cosets_by_signed_leader(n: u32, keep: impl Fn(i64) -> bool) -> Vec<u32> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let orb = orbit(s, n);
        orb.iter().for_each(|&k| seen[k as usize] = true);
        let acl = orb.iter().map(|&k| k.min(n - k)).min().unwrap_or(0);
        let signed = if orb.contains(&acl) { acl as i64 } else { -(acl as i64) };
        if keep(signed) {
            out.extend(orb);
        }
    }
    out.sort_unstable();
    out
}

/// 3-adic digits `(i₀, …, i_{m-1})`, least significant first.
pub fn ternary_expansion(i: u64, m: u32) -> Vec<u8> {
    (0..m).map(|t| (i / pow3(t) % 3) as u8).collect()
}

fn check_scan(m: u32) -> Result<u32> {
    if m == 0 || m > MAX_SCAN_DEGREE {
        return Err(Error::Capacity(format!(
            "coset scan needs 1 <= m <= {MAX_SCAN_DEGREE}, got {m}"
        )));
    }
    Ok((pow3(m) - 1) as u32)
}

/// Leader, absolute leader and size of one coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CosetSummary {
    pub leader: u32,
    pub acl: u32,
    pub size: u32,
}

/// All cosets modulo `3^m - 1`, with a residue → coset index.
#[derive(Debug, Clone)]
pub struct AclTable {
    m: u32,
    n: u32,
    cosets: Vec<CosetSummary>,
    index: Vec<u32>,
}

impl AclTable {
    pub fn new(m: u32) -> Result<AclTable> {
        let n = check_scan(m)?;
        Ok(AclTable::build(m, n))
    }

    /// Builds without the scan bound; used by code construction up to
    /// [`crate::field::MAX_DEGREE`].
    pub(crate) fn build(m: u32, n: u32) -> AclTable {
        let mut index = vec![u32::MAX; n as usize];
        let mut cosets = Vec::new();
        for s in 0..n {
            if index[s as usize] != u32::MAX {
                continue;
            }
            let id = cosets.len() as u32;
            let orb = orbit(s, n);
            let acl = orb.iter().map(|&k| k.min(n - k)).min().unwrap_or(0);
            for &k in &orb {
                index[k as usize] = id;
            }
            cosets.push(CosetSummary {
                leader: s,
                acl,
                size: orb.len() as u32,
            });
        }
        AclTable {
            m,
            n,
            cosets,
            index,
        }
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// Cosets in order of their leaders.
    pub fn cosets(&self) -> &[CosetSummary] {
        &self.cosets
    }

    /// The coset containing residue `k`.
    pub fn coset_of(&self, k: u32) -> &CosetSummary {
        &self.cosets[self.index[k as usize] as usize]
    }

    /// Distinct absolute leaders, largest first.
    pub fn ranked_acls(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.cosets.iter().map(|c| c.acl).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.dedup();
        v
    }
}

/// The closed-form `δ_rank` for `rank ∈ {1, 2, 3}`.
pub fn delta_formula(m: u32, rank: u32) -> Result<u64> {
    let unsupported = |why: &str| Err(Error::Domain(format!("no closed form for rank {rank} at m = {m}: {why}")));
    if m == 0 {
        return unsupported("m must be positive");
    }
    match rank {
        1 => Ok((pow3(m) - 1) / 2),
        2 if m % 2 == 0 => Ok((pow3(m) - 1) / 4),
        2 if m >= 3 => Ok((pow3(m - 1) - 1) / 4 + pow3(m - 2)),
        2 => unsupported("the odd-m second leader needs m >= 3"),
        3 if m % 4 == 0 => Ok((pow3(m) - 1) / 5),
        3 if m % 4 == 2 && m >= 6 => Ok((pow3(m - 6) - 1) / 5
            + pow3(m - 6)
            + 2 * pow3(m - 5)
            + 2 * pow3(m - 3)
            + pow3(m - 2)),
        3 if m % 4 == 2 => unsupported("the m = 2 mod 4 third leader needs m >= 6"),
        3 => unsupported("the third largest leader has no formula for odd m"),
        _ => unsupported("rank must be 1, 2 or 3"),
    }
}

/// One rank of the oracle: an absolute-leader value and every coset that
/// attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AclRank {
    pub acl: u32,
    pub cosets: Vec<CosetSummary>,
}

/// The `count` largest distinct absolute leaders modulo `3^m - 1`, by full
/// scan. Residues are split into fixed chunks processed in parallel; the
/// merged result is sorted, so it does not depend on scheduling.
pub fn top_acl_oracle(m: u32, count: usize) -> Result<Vec<AclRank>> {
    let n = check_scan(m)?;
    const CHUNK: u32 = 4096;
    let chunks: Vec<u32> = (0..n).step_by(CHUNK as usize).collect();
    let mut found: Vec<CosetSummary> = chunks
        .par_iter()
        .flat_map_iter(|&start| {
            let end = (start + CHUNK).min(n);
            (start..end).filter_map(move |s| {
                // s leads its coset iff no orbit element is smaller
                let orb = orbit(s, n);
                if orb.iter().any(|&k| k < s) {
                    return None;
                }
                let acl = orb.iter().map(|&k| k.min(n - k)).min().unwrap_or(0);
                Some(CosetSummary {
                    leader: s,
                    acl,
                    size: orb.len() as u32,
                })
            })
        })
        .collect();
    found.sort_unstable_by(|a, b| b.acl.cmp(&a.acl).then(a.leader.cmp(&b.leader)));
    let mut ranks: Vec<AclRank> = Vec::new();
    for c in found {
        if let Some(r) = ranks.last_mut().filter(|r| r.acl == c.acl) {
            r.cosets.push(c);
        } else if ranks.len() == count {
            break;
        } else {
            ranks.push(AclRank {
                acl: c.acl,
                cosets: vec![c],
            });
        }
    }
    Ok(ranks)
}

/// Coset size the theorems claim for `δ_rank`, together with how many
/// distinct cosets attain it.
pub fn claimed_attainment(m: u32, rank: u32) -> Result<(u32, usize)> {
    delta_formula(m, rank)?;
    Ok(match rank {
        1 => (1, 1),
        2 if m % 2 == 1 => (m, 2),
        2 => (2, 1),
        3 if m % 4 == 0 => (4, 1),
        _ => (m, 2),
    })
}
