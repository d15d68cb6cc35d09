//! Monte Carlo and exhaustive discrepancy studies.

use num_rational::BigRational;
use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::matchings::CrossCounts;
use crate::generators::{interval_discrepancy, random_matching, seeded_rng, vdc_permutation};
use crate::graph::OrderedGraph;
use crate::rational;

/// Upper limit on `n * trials` for [`mc_jumbled`].
pub const MC_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JumbledReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Interval length; `0` would never occur, `> n/2` makes the test vacuous.
    pub threshold: usize,
    pub successes: usize,
    pub fraction: f64,
    /// Wilson 95% interval for the success probability.
    pub wilson_low: f64,
    pub wilson_high: f64,
}

/// `⌈4√(n log n)⌉`, rounded up to even.
pub fn jumbled_threshold(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    let t = (4.0 * ((n as f64) * (n as f64).log2()).sqrt()).ceil() as usize;
    t + t % 2
}

/// Does every pair of disjoint intervals of length `t` carry an edge?
/// Longer intervals contain such a pair, so length exactly `t` suffices.
pub fn long_intervals_joined(m: &OrderedGraph, t: usize) -> bool {
    let n = m.n();
    if t == 0 || 2 * t > n {
        return true;
    }
    let cross = CrossCounts::new(m);
    (1..=n + 1 - 2 * t).all(|a| (a + t..=n + 1 - t).all(|b| cross.between(a, a + t - 1, b, b + t - 1) > 0))
}

pub fn wilson_interval(successes: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let (k, n) = (successes as f64, trials as f64);
    let p = k / n;
    let denom = 1.0 + z * z / n;
    let center = (p + z * z / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Fraction of uniform random perfect matchings on `[n]` in which any two
/// disjoint intervals of length at least [`jumbled_threshold`] are joined.
/// Trial `k` uses the `k`-th output of a ChaCha8 stream seeded with `seed`.
pub fn mc_jumbled(n: usize, trials: usize, seed: u64) -> Result<JumbledReport> {
    if n % 2 != 0 {
        return Err(Error::Invalid(format!("n must be even, got {n}")));
    }
    let work = (n as u64).saturating_mul(trials as u64);
    if work > MC_BUDGET {
        return Err(Error::LimitExceeded { what: "n * trials", value: work as usize, limit: MC_BUDGET as usize });
    }
    let threshold = jumbled_threshold(n);
    let mut seeds = seeded_rng(seed);
    let mut successes = 0;
    for _ in 0..trials {
        let m = random_matching(n, seeds.next_u64())?;
        if long_intervals_joined(&m, threshold) {
            successes += 1;
        }
    }
    let (wilson_low, wilson_high) = wilson_interval(successes, trials);
    Ok(JumbledReport {
        n,
        trials,
        seed,
        threshold,
        successes,
        fraction: if trials == 0 { 1.0 } else { successes as f64 / trials as f64 },
        wilson_low,
        wilson_high,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyRow {
    pub h: u32,
    pub n: usize,
    #[serde(with = "rational::serde_str")]
    pub discrepancy: BigRational,
    /// `discrepancy / log n`, i.e. `discrepancy / h`.
    #[serde(with = "rational::serde_str")]
    pub ratio: BigRational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub rows: Vec<DiscrepancyRow>,
    /// Largest ratio over the rows.
    #[serde(with = "rational::serde_str")]
    pub c_hat: BigRational,
    /// Whether the discrepancy never decreased with `h`. Reported only.
    pub monotone: bool,
}

/// Exact interval discrepancy of the bit-reversal permutation for each `h`.
pub fn mc_discrepancy(hs: std::ops::RangeInclusive<u32>) -> Result<DiscrepancyReport> {
    let mut rows = Vec::new();
    for h in hs {
        let p = vdc_permutation(h)?;
        let discrepancy = interval_discrepancy(&p)?;
        let ratio = &discrepancy / rational::int(h as usize);
        rows.push(DiscrepancyRow { h, n: p.n(), discrepancy, ratio });
    }
    if rows.is_empty() {
        return Err(Error::Invalid("empty range of h".into()));
    }
    let c_hat = rows.iter().map(|r| r.ratio.clone()).max().expect("nonempty");
    let monotone = rows.windows(2).all(|w| w[0].discrepancy <= w[1].discrepancy);
    Ok(DiscrepancyReport { rows, c_hat, monotone })
}
