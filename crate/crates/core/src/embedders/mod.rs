//! Constructive upper-bound procedures.
//!
//! Each procedure takes a coloring (or a host graph) and returns a witness
//! for one side: a red copy, a blue copy, or an ordered family of vertex sets
//! with low red density between them. Every witness is re-verified before it
//! is handed back.

mod dense;
mod lexprod;
mod multipartite;
mod path_clique;
mod sparse;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::coloring::EdgeColoring;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::rational::{self, density, int};
use crate::{BLUE, RED};

pub use dense::embed_multipartite_dense;
pub use lexprod::{bandwidth_embed, lex_product_embed, LexProductEmbedder};
pub use multipartite::{match_vs_multipartite, match_vs_multipartite_traced, MultipartiteEmbedder};
pub use path_clique::{
    erdos_szekeres_sequence_witness, path_or_clique, path_vs_clique, MonotoneSubsequence, PathEmbedder,
    PathOrClique, SingleVertex,
};
pub use sparse::{
    degree_split, greedy_embed_or_sparse, greedy_size_bound, sparse_subset, sparse_subset_with_cap, Split,
    SparseSubset, DEFAULT_SAMPLE_CAP,
};

/// Ordered sets `W_1 < W_2 < ...` with red density at most `threshold`
/// between any two of them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SparseWitness {
    pub sets: Vec<Vec<usize>>,
    #[serde(with = "rational::serde_str")]
    pub threshold: BigRational,
    #[serde(with = "rational::serde_str")]
    pub size_bound: BigRational,
}

impl SparseWitness {
    /// Checks ordering, sizes and pairwise densities against `host` exactly.
    pub fn verify(&self, host: &OrderedGraph) -> Result<()> {
        let n = host.n();
        let mut prev_max = 0;
        for (k, w) in self.sets.iter().enumerate() {
            if w.is_empty() {
                return Err(Error::Invalid(format!("set {} is empty", k + 1)));
            }
            if w.windows(2).any(|p| p[0] >= p[1]) || w[0] < 1 || w[w.len() - 1] > n {
                return Err(Error::Invalid(format!("set {} is not an increasing subset of 1..={n}", k + 1)));
            }
            if w[0] <= prev_max {
                return Err(Error::Invalid(format!("set {} does not follow set {k}", k + 1)));
            }
            prev_max = w[w.len() - 1];
            if int(w.len()) < self.size_bound {
                return Err(Error::Invalid(format!(
                    "set {} has {} vertices, below the bound {}",
                    k + 1,
                    w.len(),
                    rational::to_string(&self.size_bound)
                )));
            }
        }
        let bits: Vec<BitSet> = self.sets.iter().map(|w| to_bits(n, w)).collect();
        for i in 0..self.sets.len() {
            for j in i + 1..self.sets.len() {
                let e = cross_edges(host, &self.sets[i], &bits[j]);
                let dens = density(e, self.sets[i].len(), self.sets[j].len());
                if dens > self.threshold {
                    return Err(Error::Invalid(format!(
                        "density {} between sets {} and {} exceeds {}",
                        rational::to_string(&dens),
                        i + 1,
                        j + 1,
                        rational::to_string(&self.threshold)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Output of an embedder.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Red(Embedding),
    Blue(Embedding),
    Sparse(SparseWitness),
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Red(_) => "red",
            Witness::Blue(_) => "blue",
            Witness::Sparse(_) => "sparse",
        }
    }

    /// Re-checks the witness: red copies of `red`, blue copies of `blue`,
    /// sparse families against the red class of `c`.
    pub fn verify(&self, c: &EdgeColoring, red: &OrderedGraph, blue: &OrderedGraph) -> Result<()> {
        match self {
            Witness::Red(e) => e.verify_colored(c, RED, red),
            Witness::Blue(e) => e.verify_colored(c, BLUE, blue),
            Witness::Sparse(s) => s.verify(&c.class_graph(RED)?),
        }
    }

    /// Renames host vertices through the 1-indexed lookup `outer`.
    pub fn through(&self, outer: &[usize]) -> Witness {
        match self {
            Witness::Red(e) => Witness::Red(e.through(outer)),
            Witness::Blue(e) => Witness::Blue(e.through(outer)),
            Witness::Sparse(s) => Witness::Sparse(SparseWitness {
                sets: s.sets.iter().map(|w| w.iter().map(|&v| outer[v - 1]).collect()).collect(),
                threshold: s.threshold.clone(),
                size_bound: s.size_bound.clone(),
            }),
        }
    }
}

/// A procedure guaranteed to find a red copy of `red_target()` or a blue copy
/// of `blue_target()` in any two-coloring on at least `threshold()` vertices.
pub trait Embedder {
    fn red_target(&self) -> &OrderedGraph;
    fn blue_target(&self) -> &OrderedGraph;
    fn threshold(&self) -> usize;
    /// Works on the first `threshold()` vertices of `c`.
    fn embed(&self, c: &EdgeColoring) -> Result<Witness>;
}

pub(crate) fn check_two_coloring(c: &EdgeColoring, need: usize) -> Result<()> {
    if c.q() != 2 {
        return Err(Error::Invalid(format!("expected a two-coloring, got q = {}", c.q())));
    }
    if c.n() < need {
        return Err(Error::Precondition(format!("need at least {need} vertices, coloring has {}", c.n())));
    }
    Ok(())
}

pub(crate) fn to_bits(n: usize, vs: &[usize]) -> BitSet {
    let mut b = BitSet::new(n + 1);
    for &v in vs {
        b.insert(v);
    }
    b
}

pub(crate) fn cross_edges(host: &OrderedGraph, a: &[usize], b: &BitSet) -> usize {
    a.iter().map(|&v| host.neighbors(v).intersection_count(b)).sum()
}
