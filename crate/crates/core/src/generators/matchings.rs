use rand::seq::SliceRandom;

use super::{permutation::vdc_permutation, seeded_rng};
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// Uniform perfect matching on `[n]`: shuffle `1..=n` (Fisher–Yates on the
/// seeded ChaCha8 stream) and pair consecutive entries.
pub fn random_matching(n: usize, seed: u64) -> Result<OrderedGraph> {
    if n % 2 != 0 {
        return Err(Error::Invalid(format!("a perfect matching needs even n, got {n}")));
    }
    let mut rng = seeded_rng(seed);
    let mut verts: Vec<usize> = (1..=n).collect();
    verts.shuffle(&mut rng);
    OrderedGraph::from_unordered(n, verts.chunks(2).map(|p| (p[0], p[1])))
}

/// Matching on `2 * 2^h` vertices joining `i` to `2^h + π(i)` for the
/// bit-reversal permutation `π`.
pub fn vdc_matching(h: u32) -> Result<OrderedGraph> {
    let pi = vdc_permutation(h)?;
    let n = pi.n();
    OrderedGraph::new(2 * n, (1..=n).map(|i| (i, n + pi.apply(i))))
}

/// Perfect matching on `t^2` vertices in which every two of the `t`
/// consecutive blocks of length `t` are joined by a matching edge.
///
/// Block pairs are served in lexicographic order, each taking the lowest
/// unmatched vertex of both blocks; the single leftover vertex of every block
/// is then paired with the next leftover.
pub fn jumbled_matching(t: usize) -> Result<OrderedGraph> {
    if t < 2 || t % 2 != 0 {
        return Err(Error::Invalid(format!("jumbled matching needs even t >= 2, got {t}")));
    }
    let n = t * t;
    let mut next_free: Vec<usize> = (0..t).map(|b| b * t + 1).collect();
    let mut edges = Vec::with_capacity(n / 2);
    for i in 0..t {
        for j in i + 1..t {
            if next_free[i] > (i + 1) * t || next_free[j] > (j + 1) * t {
                return Err(Error::Invalid(format!("block pair ({i},{j}) ran out of vertices")));
            }
            edges.push((next_free[i], next_free[j]));
            next_free[i] += 1;
            next_free[j] += 1;
        }
    }
    let leftovers: Vec<usize> = (0..t)
        .flat_map(|b| next_free[b]..=(b + 1) * t)
        .collect();
    edges.extend(leftovers.chunks(2).map(|p| (p[0], p[1])));
    OrderedGraph::new(n, edges)
}

/// Both jumbledness conditions, by exhaustive enumeration of disjoint
/// interval pairs:
/// * intervals of length at least `2√n` are always joined by an edge;
/// * intervals of length at most `2√n` are joined by at most 9 edges.
pub fn is_jumbled(m: &OrderedGraph) -> Result<bool> {
    if !m.is_perfect_matching() {
        return Err(Error::Invalid("is_jumbled expects a perfect matching".into()));
    }
    let n = m.n();
    let cross = CrossCounts::new(m);
    // len >= 2√n  <=>  len^2 >= 4n
    let long = (0..=n).find(|&l| l * l >= 4 * n).unwrap_or(n + 1);
    let short = (0..=n).rev().find(|&l| l * l <= 4 * n).unwrap_or(0);
    for a1 in 1..=n {
        for a2 in a1..=n {
            let la = a2 - a1 + 1;
            for b1 in a2 + 1..=n {
                for b2 in b1..=n {
                    let lb = b2 - b1 + 1;
                    let e = cross.between(a1, a2, b1, b2);
                    if la >= long && lb >= long && e == 0 {
                        return Ok(false);
                    }
                    if la <= short && lb <= short && e > 9 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// 2D prefix counts of edges `(i, j)`, `i < j`.
pub(crate) struct CrossCounts {
    n: usize,
    table: Vec<u32>,
}

impl CrossCounts {
    pub(crate) fn new(g: &OrderedGraph) -> Self {
        let n = g.n();
        let w = n + 1;
        let mut table = vec![0u32; w * w];
        for &(i, j) in g.edges() {
            table[i * w + j] += 1;
        }
        for x in 1..=n {
            for y in 1..=n {
                table[x * w + y] += table[(x - 1) * w + y] + table[x * w + y - 1]
                    - table[(x - 1) * w + y - 1];
            }
        }
        CrossCounts { n, table }
    }

    /// Edges with left end in `[a1, a2]` and right end in `[b1, b2]`, `a2 < b1`.
    pub(crate) fn between(&self, a1: usize, a2: usize, b1: usize, b2: usize) -> u32 {
        let w = self.n + 1;
        let t = |x: usize, y: usize| self.table[x * w + y];
        t(a2, b2) + t(a1 - 1, b1 - 1) - t(a1 - 1, b2) - t(a2, b1 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::interval_chromatic;

    #[test]
    fn random_matching_basics() {
        assert_eq!(random_matching(2, 99).unwrap().edges(), &[(1, 2)]);
        assert!(random_matching(5, 1).is_err());
        let a = random_matching(10, 42).unwrap();
        assert_eq!(a, random_matching(10, 42).unwrap());
        assert!(a.is_perfect_matching());
    }

    #[test]
    fn vdc_matching_examples() {
        assert_eq!(vdc_matching(1).unwrap().edges(), &[(1, 3), (2, 4)]);
        for h in 1..=6 {
            let m = vdc_matching(h).unwrap();
            assert!(m.is_perfect_matching());
            assert_eq!(interval_chromatic(&m), 2);
            let n = 1 << h;
            assert!(m.edges().iter().all(|&(i, j)| i <= n && j > n));
        }
    }

    #[test]
    fn jumbled_t2_by_hand() {
        assert_eq!(jumbled_matching(2).unwrap().edges(), &[(1, 3), (2, 4)]);
        assert!(jumbled_matching(3).is_err());
        assert!(jumbled_matching(0).is_err());
    }

    #[test]
    fn nested_matching_is_not_jumbled() {
        let n = 36;
        let m = OrderedGraph::new(n, (1..=n / 2).map(|i| (i, n + 1 - i))).unwrap();
        assert!(!is_jumbled(&m).unwrap());
        assert!(is_jumbled(&OrderedGraph::new(4, [(1, 3), (2, 4)]).unwrap()).unwrap());
        assert!(is_jumbled(&OrderedGraph::new(4, [(1, 3)]).unwrap()).is_err());
    }
}
