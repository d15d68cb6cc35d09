//! Blue trivially ordered complete multipartite graph inside ordered sets
//! whose pairwise non-edge density is tiny.

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::generators::complete_multipartite_trivial;
use crate::graph::OrderedGraph;

use super::{cross_edges, to_bits};

/// Embeds `K_{n, ..., n}` (`chi = sets.len()` parts) into `host` with part
/// `i` inside `sets[i]`.
///
/// Requires `|W_i| >= 4 chi n`, `W_1 < W_2 < ...`, and non-edge density at
/// most `1 / (8 chi^2 n)` between any two sets. Vertices with many
/// non-neighbors in another set are discarded first; the rest are used
/// greedily, lowest label first.
pub fn embed_multipartite_dense(host: &OrderedGraph, sets: &[Vec<usize>], n: usize) -> Result<Embedding> {
    let chi = sets.len();
    if chi == 0 || n == 0 {
        return Err(Error::Invalid("need at least one set and a positive part size".into()));
    }
    let big_n = host.n();
    for (i, w) in sets.iter().enumerate() {
        if w.windows(2).any(|p| p[0] >= p[1]) || w.first().is_some_and(|&v| v == 0) || w.last().is_some_and(|&v| v > big_n) {
            return Err(Error::Invalid(format!("set {} is not an increasing subset of 1..={big_n}", i + 1)));
        }
        if w.len() < 4 * chi * n {
            return Err(Error::Precondition(format!(
                "size condition fails for set {}: {} < {}",
                i + 1,
                w.len(),
                4 * chi * n
            )));
        }
    }
    for i in 1..chi {
        if sets[i - 1].last() >= sets[i].first() {
            return Err(Error::Precondition(format!("order condition fails for sets ({}, {})", i, i + 1)));
        }
    }
    let bits: Vec<_> = sets.iter().map(|w| to_bits(big_n, w)).collect();
    for i in 0..chi {
        for j in i + 1..chi {
            let (a, b) = (sets[i].len(), sets[j].len());
            let non = a * b - cross_edges(host, &sets[i], &bits[j]);
            // non / (a b) <= 1 / (8 chi^2 n)
            if (non as u128) * (8 * chi * chi * n) as u128 > (a as u128) * (b as u128) {
                return Err(Error::Precondition(format!(
                    "density condition fails for sets ({}, {}): {non} non-edges out of {}",
                    i + 1,
                    j + 1,
                    a * b
                )));
            }
        }
    }
    // Drop vertices with at least |W_j| / (4 chi n) non-neighbors in some W_j.
    let pruned: Vec<Vec<usize>> = (0..chi)
        .map(|i| {
            sets[i]
                .iter()
                .copied()
                .filter(|&v| {
                    (0..chi).filter(|&j| j != i).all(|j| {
                        let non = sets[j].len() - host.neighbors(v).intersection_count(&bits[j]);
                        non * 4 * chi * n < sets[j].len()
                    })
                })
                .collect()
        })
        .collect();
    let mut used = vec![false; big_n + 1];
    let mut parts: Vec<Vec<usize>> = vec![Vec::with_capacity(n); chi];
    for p in 0..chi {
        for _ in 0..n {
            let w = pruned[p]
                .iter()
                .copied()
                .find(|&w| !used[w] && parts[..p].iter().flatten().all(|&u| host.has_edge(u, w)))
                .ok_or_else(|| Error::Invalid(format!("greedy step ran out of candidates in part {}", p + 1)))?;
            used[w] = true;
            parts[p].push(w);
        }
    }
    let e = Embedding::new(parts.into_iter().flatten().collect());
    e.verify(host, &complete_multipartite_trivial(&vec![n; chi]))?;
    Ok(e)
}
