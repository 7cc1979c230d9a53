//! Exhaustive weight enumeration of `{u(x)·g(x) : deg u < k}`.
//!
//! Rows `x^j·g(x)` and their negatives are precomputed in bit-sliced form.
//! Messages are walked depth-first, one digit per level, so each codeword
//! costs a single vector addition. The top digits fix a prefix per task;
//! tasks fill private histograms that are summed at the end, which makes the
//! result independent of the worker count.

use rayon::prelude::*;

use crate::codes::{CyclicCode, WeightDistribution};
use crate::trit::{add_planes, weight_of, weight_of_sum, TritVec};
use crate::{with_workers, Error, Result};

/// Default enumeration budget: 3^16 ≈ 43M codewords.
pub const DEFAULT_MAX_DIMENSION: u32 = 16;

/// Digits fixed per task prefix.
const SPLIT_DIGITS: usize = 4;

struct Row {
    pos: Vec<u64>,
    neg: Vec<u64>,
}

/// A vector stored as `[hi planes.., lo planes..]`.
fn split(v: &[u64], words: usize) -> (&[u64], &[u64]) {
    v.split_at(words)
}

fn flat(t: &TritVec) -> Vec<u64> {
    let (h, l) = t.planes();
    h.iter().chain(l).copied().collect()
}

fn add_into(dst: &mut [u64], a: &[u64], b: &[u64], words: usize) {
    dst.copy_from_slice(a);
    let (dh, dl) = dst.split_at_mut(words);
    let (bh, bl) = split(b, words);
    add_planes(dh, dl, bh, bl);
}

fn descend(rows: &[Row], digits: usize, cur: &[u64], scratch: &mut [Vec<u64>], words: usize, hist: &mut [u64]) {
    let (ch, cl) = split(cur, words);
    match digits {
        0 => hist[weight_of(ch, cl) as usize] += 1,
        1 => {
            let r = &rows[0];
            hist[weight_of(ch, cl) as usize] += 1;
            let (ph, pl) = split(&r.pos, words);
            hist[weight_of_sum(ch, cl, ph, pl) as usize] += 1;
            let (nh, nl) = split(&r.neg, words);
            hist[weight_of_sum(ch, cl, nh, nl) as usize] += 1;
        }
        _ => {
            let row = &rows[digits - 1];
            descend(rows, digits - 1, cur, scratch, words, hist);
            let (lower, this) = scratch.split_at_mut(digits - 1);
            let next = &mut this[0];
            add_into(next, cur, &row.pos, words);
            descend(rows, digits - 1, next, lower, words, hist);
            add_into(next, cur, &row.neg, words);
            descend(rows, digits - 1, next, lower, words, hist);
        }
    }
}

/// Weight distribution by enumerating all `3^k` codewords.
///
/// `max_dimension` bounds `k`; `workers = 0` uses the global thread count.
pub fn weight_distribution_exhaustive(
    code: &CyclicCode,
    max_dimension: u32,
    workers: usize,
) -> Result<WeightDistribution> {
    let k = code.dimension as usize;
    if code.dimension > max_dimension {
        return Err(Error::Capacity(format!(
            "dimension {k} exceeds the enumeration budget {max_dimension}; \
             use the trace enumerator or raise the budget"
        )));
    }
    let n = code.n as usize;
    let g = code.generator.coeffs();
    let rows: Vec<Row> = (0..k)
        .map(|j| {
            let mut sym = vec![0u8; n];
            sym[j..j + g.len()].copy_from_slice(g);
            let t = TritVec::from_symbols(&sym);
            Row {
                pos: flat(&t),
                neg: flat(&t.negated()),
            }
        })
        .collect();
    let words = n.div_ceil(64);
    let top = k.min(SPLIT_DIGITS);
    let low = k - top;
    let prefixes = 3usize.pow(top as u32);

    let run = |p: usize| -> Vec<u64> {
        let mut cur = vec![0u64; 2 * words];
        let mut digit = p;
        for j in low..k {
            match digit % 3 {
                1 => {
                    let (ch, cl) = cur.split_at_mut(words);
                    let (rh, rl) = split(&rows[j].pos, words);
                    add_planes(ch, cl, rh, rl);
                }
                2 => {
                    let (ch, cl) = cur.split_at_mut(words);
                    let (rh, rl) = split(&rows[j].neg, words);
                    add_planes(ch, cl, rh, rl);
                }
                _ => {}
            }
            digit /= 3;
        }
        let mut scratch = vec![vec![0u64; 2 * words]; low.max(1)];
        let mut hist = vec![0u64; n + 1];
        descend(&rows[..low], low, &cur, &mut scratch, words, &mut hist);
        hist
    };

    let hist = with_workers(workers, || {
        (0..prefixes)
            .into_par_iter()
            .map(run)
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    })?;
    Ok(WeightDistribution::from_histogram(&hist))
}
