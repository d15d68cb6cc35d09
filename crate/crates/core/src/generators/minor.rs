use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

const MINOR_SEARCH_CAP: u128 = 50_000_000;

/// Interval-minor test between two bipartite ordered graphs.
///
/// `h` has all edges between `[h_split]` and the rest; `b` has all edges
/// between `[b_split]` and the rest. `h` is an interval minor of `b` when
/// `[b_split]` and `[b_split+1, |b|]` can be cut into `h_split` and
/// `|h| - h_split` consecutive intervals such that every edge `(i, j)` of `h`
/// has at least one edge of `b` between the `i`-th and `j`-th intervals.
/// Exhaustive over cut positions.
pub fn is_interval_minor(h: &OrderedGraph, h_split: usize, b: &OrderedGraph, b_split: usize) -> Result<bool> {
    let (k, l) = (h_split, h.n() - h_split);
    let (big_n, big_m) = (b_split, b.n() - b_split);
    if h.edges().iter().any(|&(i, j)| !(i <= k && j > k)) {
        return Err(Error::Invalid("pattern has an edge inside one side".into()));
    }
    if b.edges().iter().any(|&(i, j)| !(i <= big_n && j > big_n)) {
        return Err(Error::Invalid("host has an edge inside one side".into()));
    }
    if k == 0 || l == 0 {
        return Ok(k <= big_n && l <= big_m);
    }
    if k > big_n || l > big_m {
        return Ok(false);
    }
    let work = binomial(big_n - 1, k - 1) * binomial(big_m - 1, l - 1);
    if work > MINOR_SEARCH_CAP {
        return Err(Error::LimitExceeded {
            what: "interval partitions to test",
            value: work.min(usize::MAX as u128) as usize,
            limit: MINOR_SEARCH_CAP as usize,
        });
    }
    let left_cuts = compositions(big_n, k);
    let right_cuts = compositions(big_m, l);
    for lc in &left_cuts {
        for rc in &right_cuts {
            let block = |v: usize| -> usize {
                if v <= big_n {
                    lc.iter().position(|&end| v <= end).unwrap() + 1
                } else {
                    k + rc.iter().position(|&end| v - big_n <= end).unwrap() + 1
                }
            };
            let mut seen = std::collections::HashSet::new();
            for &(u, v) in b.edges() {
                seen.insert((block(u), block(v)));
            }
            if h.edges().iter().all(|e| seen.contains(e)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Right endpoints of every split of `[total]` into `parts` nonempty intervals.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for end in start..=total - (parts - 1) {
            cur.push(end);
            rec(end + 1, total, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, total, parts, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::j_k;

    #[test]
    fn j_k_minors() {
        assert!(is_interval_minor(&j_k(2), 2, &j_k(3), 3).unwrap());
        assert!(!is_interval_minor(&j_k(3), 3, &j_k(2), 2).unwrap());
        // A crossing-free "staircase" matching cannot host J_2.
        let stair = OrderedGraph::new(8, [(1, 5), (2, 6), (3, 7), (4, 8)]).unwrap();
        assert!(!is_interval_minor(&j_k(2), 2, &stair, 4).unwrap());
        // The reversed matching has an edge between any two prefix/suffix blocks.
        let rev = OrderedGraph::new(8, [(1, 8), (2, 7), (3, 6), (4, 5)]).unwrap();
        assert!(!is_interval_minor(&j_k(2), 2, &rev, 4).unwrap());
    }

    #[test]
    fn block_matching_contains_j_k() {
        // Each of 2 left blocks of size 2 joined to each of 2 right blocks.
        let m = OrderedGraph::new(8, [(1, 5), (2, 7), (3, 6), (4, 8)]).unwrap();
        assert!(is_interval_minor(&j_k(2), 2, &m, 4).unwrap());
    }
}
