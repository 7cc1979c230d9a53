//! Bit-sliced vectors over F₃.
//!
//! Symbol `i` is stored as bit `i` of two planes: `0 = (hi 0, lo 0)`,
//! `1 = (0, 1)`, `2 = (1, 0)`. Addition of 64 symbols costs six word
//! operations, negation swaps the planes, and the Hamming weight is
//! `popcount(hi | lo)`.

/// A fixed-length vector over F₃ in bit-sliced form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TritVec {
    len: usize,
    hi: Vec<u64>,
    lo: Vec<u64>,
}

#[inline(always)]
fn add_word(ah: u64, al: u64, bh: u64, bl: u64) -> (u64, u64) {
    let t = (al | bh) ^ (ah | bl);
    ((al | bl) ^ t, (ah | bh) ^ t)
}

/// Adds `b` into `a` word by word; the four slices must have equal length.
#[inline]
pub(crate) fn add_planes(ah: &mut [u64], al: &mut [u64], bh: &[u64], bl: &[u64]) {
    for i in 0..ah.len() {
        let (h, l) = add_word(ah[i], al[i], bh[i], bl[i]);
        ah[i] = h;
        al[i] = l;
    }
}

/// Hamming weight of `a + b` without materializing the sum.
#[inline]
pub(crate) fn weight_of_sum(ah: &[u64], al: &[u64], bh: &[u64], bl: &[u64]) -> u32 {
    let mut w = 0;
    for i in 0..ah.len() {
        let (h, l) = add_word(ah[i], al[i], bh[i], bl[i]);
        w += (h | l).count_ones();
    }
    w
}

#[inline]
pub(crate) fn weight_of(h: &[u64], l: &[u64]) -> u32 {
    h.iter().zip(l).map(|(a, b)| (a | b).count_ones()).sum()
}

impl TritVec {
    pub fn zeros(len: usize) -> Self {
        let words = len.div_ceil(64);
        TritVec {
            len,
            hi: vec![0; words],
            lo: vec![0; words],
        }
    }

    /// Builds from symbols; each is reduced mod 3.
    pub fn from_symbols(symbols: &[u8]) -> Self {
        let mut v = TritVec::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u8 {
        let (w, b) = (i / 64, i % 64);
        (((self.hi[w] >> b) & 1) << 1) as u8 | ((self.lo[w] >> b) & 1) as u8
    }

    pub fn set(&mut self, i: usize, s: u8) {
        assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        let mask = 1u64 << b;
        self.hi[w] &= !mask;
        self.lo[w] &= !mask;
        match s % 3 {
            1 => self.lo[w] |= mask,
            2 => self.hi[w] |= mask,
            _ => {}
        }
    }

    pub fn to_symbols(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn weight(&self) -> u32 {
        weight_of(&self.hi, &self.lo)
    }

    pub fn add_assign(&mut self, other: &TritVec) {
        assert_eq!(self.len, other.len);
        add_planes(&mut self.hi, &mut self.lo, &other.hi, &other.lo);
    }

    pub fn negated(&self) -> TritVec {
        TritVec {
            len: self.len,
            hi: self.lo.clone(),
            lo: self.hi.clone(),
        }
    }

    pub fn weight_of_sum(&self, other: &TritVec) -> u32 {
        assert_eq!(self.len, other.len);
        weight_of_sum(&self.hi, &self.lo, &other.hi, &other.lo)
    }

    pub(crate) fn planes(&self) -> (&[u64], &[u64]) {
        (&self.hi, &self.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn addition_table() {
        for a in 0..3u8 {
            for b in 0..3u8 {
                let mut x = TritVec::from_symbols(&[a]);
                x.add_assign(&TritVec::from_symbols(&[b]));
                assert_eq!(x.get(0), (a + b) % 3, "{a} + {b}");
            }
        }
    }

    proptest! {
        #[test]
        fn matches_scalar_arithmetic(
            pair in (1usize..200).prop_flat_map(|n| (
                proptest::collection::vec(0u8..3, n),
                proptest::collection::vec(0u8..3, n),
            ))
        ) {
            let (a, b) = pair;
            let sum: Vec<u8> = a.iter().zip(&b).map(|(x, y)| (x + y) % 3).collect();
            let va = TritVec::from_symbols(&a);
            let vb = TritVec::from_symbols(&b);
            let mut s = va.clone();
            s.add_assign(&vb);
            prop_assert_eq!(s.to_symbols(), sum.clone());
            let w = sum.iter().filter(|&&x| x != 0).count() as u32;
            prop_assert_eq!(s.weight(), w);
            prop_assert_eq!(va.weight_of_sum(&vb), w);
            let neg: Vec<u8> = a.iter().map(|x| (3 - x) % 3).collect();
            prop_assert_eq!(va.negated().to_symbols(), neg);
        }
    }
}
