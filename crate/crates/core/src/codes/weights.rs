use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Number of codewords of each Hamming weight, zero counts omitted.
///
/// Serializes as a JSON object keyed by the weight in ascending numeric
/// order, e.g. `{"0":1,"162":242}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightDistribution(BTreeMap<u32, u64>);

impl WeightDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// From a dense histogram indexed by weight.
    pub fn from_histogram(hist: &[u64]) -> Self {
        WeightDistribution(
            hist.iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(w, &c)| (w as u32, c))
                .collect(),
        )
    }

    pub fn add(&mut self, weight: u32, count: u64) {
        if count > 0 {
            *self.0.entry(weight).or_insert(0) += count;
        }
    }

    pub fn count(&self, weight: u32) -> u64 {
        self.0.get(&weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.0.iter().map(|(&w, &c)| (w, c))
    }

    /// Total number of codewords, `Σ A_w`.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Smallest positive weight present.
    pub fn min_distance(&self) -> Option<u32> {
        self.0.keys().copied().find(|&w| w > 0)
    }

    /// Number of distinct nonzero weights.
    pub fn nonzero_weight_count(&self) -> usize {
        self.0.keys().filter(|&&w| w > 0).count()
    }

    /// Checks `A₀ = 1` and `Σ A_w = 3^k`.
    pub fn check_sane(&self, dimension: u32) -> Result<()> {
        if self.count(0) != 1 {
            return Err(Error::Verification(format!(
                "A_0 = {}, expected 1",
                self.count(0)
            )));
        }
        let expect = 3u64.checked_pow(dimension);
        if expect != Some(self.total()) {
            return Err(Error::Verification(format!(
                "sum of A_w is {}, expected 3^{dimension}",
                self.total()
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("map of integers serializes")
    }

    /// Parses the object form; zero counts are dropped.
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: BTreeMap<u32, u64> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(raw.into_iter().collect())
    }

    /// `weight,count` rows with a header, ascending weight, LF endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (w, c) in self.iter() {
            out.push_str(&format!("{w},{c}\n"));
        }
        out
    }
}

impl FromIterator<(u32, u64)> for WeightDistribution {
    fn from_iter<I: IntoIterator<Item = (u32, u64)>>(iter: I) -> Self {
        let mut wd = WeightDistribution::new();
        for (w, c) in iter {
            wd.add(w, c);
        }
        wd
    }
}

/// Weight enumerator notation, `1+242z^162`.
impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.iter() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match w {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}z^{w}")?,
            }
        }
        Ok(())
    }
}
