//! Red matching versus blue lexicographic product, via the reduced coloring
//! on blocks.

use crate::coloring::EdgeColoring;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::generators::{lex_product, path_power};
use crate::graph::OrderedGraph;
use crate::{BLUE, RED};

use super::{check_two_coloring, Embedder, MultipartiteEmbedder, PathEmbedder, Witness};

/// Red `m` or blue `g · h`, from embedders for `(m, g)` and `(m, h)`.
///
/// The first `R_G * R_H` vertices are cut into `R_H` blocks of `R_G`
/// vertices. Two blocks are red in the reduced coloring if any edge between
/// them is red. A red `m` in the reduced coloring lifts edge by edge (matching
/// edges use disjoint blocks); a blue `h` gives blocks that are pairwise
/// completely blue, and `g_emb` inside each of them finishes the job.
pub struct LexProductEmbedder<'a> {
    m: OrderedGraph,
    g_emb: &'a dyn Embedder,
    h_emb: &'a dyn Embedder,
    blue: OrderedGraph,
}

impl<'a> LexProductEmbedder<'a> {
    pub fn new(m: &OrderedGraph, g_emb: &'a dyn Embedder, h_emb: &'a dyn Embedder) -> Result<Self> {
        if !m.is_matching() {
            return Err(Error::Invalid("red target must be a matching".into()));
        }
        if g_emb.red_target() != m || h_emb.red_target() != m {
            return Err(Error::Invalid("sub-embedders must target the same red matching".into()));
        }
        g_emb
            .threshold()
            .checked_mul(h_emb.threshold())
            .ok_or_else(|| Error::Invalid("threshold overflows".into()))?;
        Ok(LexProductEmbedder {
            m: m.clone(),
            g_emb,
            h_emb,
            blue: lex_product(g_emb.blue_target(), h_emb.blue_target()),
        })
    }

    fn block(&self, b: usize) -> Vec<usize> {
        let rg = self.g_emb.threshold();
        ((b - 1) * rg + 1..=b * rg).collect()
    }
}

fn contract(who: &str, w: &Witness, c: &EdgeColoring, e: &dyn Embedder) -> Result<()> {
    if let Witness::Sparse(_) = w {
        return Err(Error::Invalid(format!("{who} embedder returned a sparse witness")));
    }
    w.verify(c, e.red_target(), e.blue_target())
        .map_err(|err| Error::Invalid(format!("{who} embedder broke its contract: {err}")))
}

impl Embedder for LexProductEmbedder<'_> {
    fn red_target(&self) -> &OrderedGraph {
        &self.m
    }

    fn blue_target(&self) -> &OrderedGraph {
        &self.blue
    }

    fn threshold(&self) -> usize {
        self.g_emb.threshold() * self.h_emb.threshold()
    }

    fn embed(&self, c: &EdgeColoring) -> Result<Witness> {
        check_two_coloring(c, self.threshold())?;
        let rh = self.h_emb.threshold();
        let blocks: Vec<Vec<usize>> = (1..=rh).map(|b| self.block(b)).collect();
        let first_red = |a: usize, b: usize| -> Option<(usize, usize)> {
            blocks[a - 1]
                .iter()
                .flat_map(|&x| blocks[b - 1].iter().map(move |&y| (x, y)))
                .find(|&(x, y)| c.color(x, y) == RED)
        };
        let reduced = EdgeColoring::from_fn(rh, 2, |a, b| if first_red(a, b).is_some() { RED } else { BLUE })?;
        let top = self.h_emb.embed(&reduced)?;
        contract("outer", &top, &reduced, self.h_emb)?;
        let out = match top {
            Witness::Red(e) => {
                let mut image: Vec<usize> = e.image.iter().map(|&b| blocks[b - 1][0]).collect();
                for &(u, v) in self.m.edges() {
                    let (x, y) = first_red(e.at(u), e.at(v)).expect("reduced red edge has a red edge");
                    image[u - 1] = x;
                    image[v - 1] = y;
                }
                Witness::Red(Embedding::new(image))
            }
            Witness::Blue(e) => {
                let mut image = Vec::new();
                let mut red = None;
                for &b in &e.image {
                    let local = c.restrict(&blocks[b - 1]);
                    let w = self.g_emb.embed(&local)?;
                    contract("inner", &w, &local, self.g_emb)?;
                    match w.through(&blocks[b - 1]) {
                        Witness::Blue(g) => image.extend(g.image),
                        red_copy => {
                            red = Some(red_copy);
                            break;
                        }
                    }
                }
                red.unwrap_or(Witness::Blue(Embedding::new(image)))
            }
            Witness::Sparse(_) => unreachable!(),
        };
        out.verify(c, &self.m, &self.blue)?;
        Ok(out)
    }
}

pub fn lex_product_embed(
    c: &EdgeColoring,
    m: &OrderedGraph,
    g_emb: &dyn Embedder,
    h_emb: &dyn Embedder,
) -> Result<Witness> {
    LexProductEmbedder::new(m, g_emb, h_emb)?.embed(c)
}

/// Red `m` or blue `P_n^k` (`n = |m|`), at `N >= n^(ceil(log k) + 2)`.
///
/// Runs the product embedder for `K_k · P_n` with the multipartite embedder
/// for `K_k` and the labeling embedder for `P_n`, then keeps the first `n`
/// vertices of the blue product.
pub fn bandwidth_embed(c: &EdgeColoring, m: &OrderedGraph, k: usize) -> Result<Witness> {
    let n = m.n();
    if k == 0 || n == 0 {
        return Err(Error::Invalid("need k >= 1 and a nonempty matching".into()));
    }
    let levels = k.next_power_of_two().trailing_zeros() + 2;
    let need = n
        .checked_pow(levels)
        .ok_or_else(|| Error::Invalid("size bound overflows".into()))?;
    check_two_coloring(c, need)?;
    let g_emb = MultipartiteEmbedder::new(m, k, 1)?;
    let h_emb = PathEmbedder::new(m.clone(), n)?;
    let w = lex_product_embed(c, m, &g_emb, &h_emb)?;
    let w = match w {
        Witness::Blue(e) => Witness::Blue(Embedding::new(e.image[..n].to_vec())),
        other => other,
    };
    w.verify(c, m, &path_power(n, k))?;
    Ok(w)
}
