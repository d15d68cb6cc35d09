//! Exhaustive enumeration of colorings, independent of the pruned search.

use crate::containment::PatternPlan;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// Largest number of colorings the oracle enumerates.
pub const ORACLE_LIMIT: u64 = 1 << 24;

/// True when every `q`-coloring of `[n]` contains `targets[c]` in color `c`
/// for some `c` (`q = targets.len()`).
pub fn brute_force_oracle(targets: &[OrderedGraph], n: usize) -> Result<bool> {
    let q = targets.len();
    if q < 2 || q > 255 {
        return Err(Error::Invalid(format!("need 2 to 255 targets, got {q}")));
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let total = (q as u128).checked_pow(pairs.len() as u32).unwrap_or(u128::MAX);
    if total > ORACLE_LIMIT as u128 || n >= 64 {
        return Err(Error::LimitExceeded {
            what: "colorings to enumerate",
            value: total.min(usize::MAX as u128) as usize,
            limit: ORACLE_LIMIT as usize,
        });
    }
    let plans: Vec<PatternPlan> = targets.iter().map(PatternPlan::new).collect();
    let mut digits = vec![0usize; pairs.len()];
    let mut masks = vec![vec![0u64; n + 1]; q];
    for _ in 0..total {
        for m in masks.iter_mut() {
            m.iter_mut().for_each(|x| *x = 0);
        }
        for (&(i, j), &c) in pairs.iter().zip(&digits) {
            masks[c][i] |= 1 << j;
            masks[c][j] |= 1 << i;
        }
        let hit = plans.iter().enumerate().any(|(c, p)| p.contained_in_masks(&masks[c], n));
        if !hit {
            return Ok(false);
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    Ok(true)
}
