//! Red matching versus blue trivially ordered complete multipartite graph.
//!
//! Split the host into one interval per matching vertex and look for a red
//! edge between the two intervals of every matching edge. If some pair of
//! intervals is entirely blue, recurse into both with half as many parts and
//! glue the two blue multipartite graphs along the blue bipartite graph.

use crate::coloring::EdgeColoring;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::generators::complete_multipartite_trivial;
use crate::graph::OrderedGraph;
use crate::RED;

use super::{check_two_coloring, Embedder, Witness};

#[derive(Clone, Debug)]
pub struct MultipartiteEmbedder {
    m: OrderedGraph,
    chi: usize,
    part: usize,
    /// `ceil(log2 chi)`.
    levels: u32,
    blue: OrderedGraph,
    threshold: usize,
}

impl MultipartiteEmbedder {
    pub fn new(m: &OrderedGraph, chi: usize, part: usize) -> Result<Self> {
        if !m.is_matching() || m.n() == 0 {
            return Err(Error::Invalid("red target must be a matching on at least one vertex".into()));
        }
        if chi == 0 || part == 0 {
            return Err(Error::Invalid("part count and part size must be positive".into()));
        }
        let levels = chi.next_power_of_two().trailing_zeros();
        let threshold = m
            .n()
            .checked_pow(levels)
            .and_then(|x| x.checked_mul(part))
            .ok_or_else(|| Error::Invalid("threshold overflows".into()))?;
        Ok(MultipartiteEmbedder {
            m: m.clone(),
            chi,
            part,
            levels,
            blue: complete_multipartite_trivial(&vec![part; chi]),
            threshold,
        })
    }

    /// Like [`Embedder::embed`], also returning the number of vertex pairs
    /// inspected at each recursion depth.
    pub fn embed_traced(&self, c: &EdgeColoring) -> Result<(Witness, Vec<usize>)> {
        check_two_coloring(c, self.threshold)?;
        let verts: Vec<usize> = (1..=self.threshold).collect();
        let mut trace = vec![0; self.levels as usize + 1];
        let w = match self.search(c, self.levels, &verts, 0, &mut trace) {
            Found::Red(image) => Witness::Red(Embedding::new(image)),
            Found::Blue(parts) => {
                Witness::Blue(Embedding::new(parts.into_iter().take(self.chi).flatten().collect()))
            }
        };
        w.verify(c, &self.m, &self.blue)?;
        Ok((w, trace))
    }

    fn search(&self, c: &EdgeColoring, level: u32, verts: &[usize], depth: usize, trace: &mut [usize]) -> Found {
        if level == 0 {
            return Found::Blue(vec![verts[..self.part].to_vec()]);
        }
        let n = self.m.n();
        let len = verts.len() / n;
        let interval = |i: usize| &verts[(i - 1) * len..i * len];
        let mut image: Vec<usize> = (1..=n).map(|i| interval(i)[0]).collect();
        for &(a, b) in self.m.edges() {
            let mut hit = None;
            'scan: for &x in interval(a) {
                for &y in interval(b) {
                    trace[depth] += 1;
                    if c.color(x, y) == RED {
                        hit = Some((x, y));
                        break 'scan;
                    }
                }
            }
            match hit {
                Some((x, y)) => {
                    image[a - 1] = x;
                    image[b - 1] = y;
                }
                None => {
                    let left = self.search(c, level - 1, interval(a), depth + 1, trace);
                    let Found::Blue(mut parts) = left else { return left };
                    let right = self.search(c, level - 1, interval(b), depth + 1, trace);
                    let Found::Blue(more) = right else { return right };
                    parts.extend(more);
                    return Found::Blue(parts);
                }
            }
        }
        Found::Red(image)
    }
}

enum Found {
    Red(Vec<usize>),
    Blue(Vec<Vec<usize>>),
}

impl Embedder for MultipartiteEmbedder {
    fn red_target(&self) -> &OrderedGraph {
        &self.m
    }

    fn blue_target(&self) -> &OrderedGraph {
        &self.blue
    }

    fn threshold(&self) -> usize {
        self.threshold
    }

    fn embed(&self, c: &EdgeColoring) -> Result<Witness> {
        self.embed_traced(c).map(|(w, _)| w)
    }
}

/// Red `m` or blue trivially ordered `K_{part, ..., part}` with `chi` parts,
/// at `N >= n^ceil(log chi) * part`.
pub fn match_vs_multipartite(c: &EdgeColoring, m: &OrderedGraph, chi: usize, part: usize) -> Result<Witness> {
    MultipartiteEmbedder::new(m, chi, part)?.embed(c)
}

pub fn match_vs_multipartite_traced(
    c: &EdgeColoring,
    m: &OrderedGraph,
    chi: usize,
    part: usize,
) -> Result<(Witness, Vec<usize>)> {
    MultipartiteEmbedder::new(m, chi, part)?.embed_traced(c)
}
