use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// Strictly increasing map from pattern vertices `1..=k` into host vertices.
///
/// `image[i - 1]` is the host vertex assigned to pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub image: Vec<usize>,
}

impl Embedding {
    pub fn new(image: Vec<usize>) -> Self {
        Embedding { image }
    }

    pub fn pattern_n(&self) -> usize {
        self.image.len()
    }

    /// Host vertex of pattern vertex `v` (1-indexed).
    pub fn at(&self, v: usize) -> usize {
        self.image[v - 1]
    }

    fn check_shape(&self, pattern: &OrderedGraph, host_n: usize) -> Result<()> {
        if self.image.len() != pattern.n() {
            return Err(Error::Invalid(format!(
                "embedding has {} vertices, pattern has {}",
                self.image.len(),
                pattern.n()
            )));
        }
        if let Some(w) = self.image.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!(
                "embedding is not increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        if let Some(&v) = self.image.iter().find(|&&v| v < 1 || v > host_n) {
            return Err(Error::Invalid(format!("image vertex {v} outside 1..={host_n}")));
        }
        Ok(())
    }

    /// Checks that every pattern edge lands on a host edge.
    pub fn verify(&self, host: &OrderedGraph, pattern: &OrderedGraph) -> Result<()> {
        self.check_shape(pattern, host.n())?;
        for &(i, j) in pattern.edges() {
            if !host.has_edge(self.at(i), self.at(j)) {
                return Err(Error::Invalid(format!(
                    "pattern edge ({i},{j}) maps to non-edge ({},{})",
                    self.at(i),
                    self.at(j)
                )));
            }
        }
        Ok(())
    }

    /// Checks that every pattern edge lands on a pair of the given color.
    pub fn verify_colored(&self, c: &EdgeColoring, color: u8, pattern: &OrderedGraph) -> Result<()> {
        c.check_color(color)?;
        self.check_shape(pattern, c.n())?;
        for &(i, j) in pattern.edges() {
            let got = c.color(self.at(i), self.at(j));
            if got != color {
                return Err(Error::Invalid(format!(
                    "pattern edge ({i},{j}) maps to ({},{}) of color {got}, expected {color}",
                    self.at(i),
                    self.at(j)
                )));
            }
        }
        Ok(())
    }

    /// `outer ∘ self`: reinterprets host vertices through `outer` (1-indexed lookup).
    pub fn through(&self, outer: &[usize]) -> Embedding {
        Embedding::new(self.image.iter().map(|&v| outer[v - 1]).collect())
    }
}
