//! The labeling argument: label each vertex by the longest monotone path in
//! one color ending there. A long label gives the path; otherwise some label
//! class is large, and equal labels force the other color on every pair.

use crate::coloring::EdgeColoring;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::generators::{complete, monotone_path};
use crate::graph::OrderedGraph;
use crate::stats::monotone_path_labels;
use crate::{BLUE, RED};

use super::{check_two_coloring, Embedder, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathOrClique {
    /// Vertices of a monotone path in the path color.
    Path(Vec<usize>),
    /// Vertices of a clique in the other color.
    Clique(Vec<usize>),
}

/// Monotone path on `path_len` vertices in `path_color`, or a clique on
/// `clique_size` vertices in the other color. Needs
/// `N >= (path_len - 1)(clique_size - 1) + 1`.
pub fn path_or_clique(c: &EdgeColoring, path_color: u8, path_len: usize, clique_size: usize) -> Result<PathOrClique> {
    if path_len == 0 || clique_size == 0 {
        return Err(Error::Invalid("path and clique sizes must be positive".into()));
    }
    let need = (path_len - 1) * (clique_size - 1) + 1;
    check_two_coloring(c, need)?;
    c.check_color(path_color)?;
    let label = monotone_path_labels(c, path_color);
    if let Some(end) = (1..=c.n()).find(|&v| label[v - 1] >= path_len) {
        let mut path = vec![end];
        let mut v = end;
        for want in (1..path_len).rev() {
            v = (1..v)
                .rev()
                .find(|&u| label[u - 1] >= want && c.color(u, v) == path_color)
                .expect("a longer label has a predecessor one shorter");
            path.push(v);
        }
        path.reverse();
        return Ok(PathOrClique::Path(path));
    }
    for l in 1..path_len {
        let class: Vec<usize> = (1..=c.n()).filter(|&v| label[v - 1] == l).collect();
        if class.len() >= clique_size {
            return Ok(PathOrClique::Clique(class[..clique_size].to_vec()));
        }
    }
    unreachable!("pigeonhole over {} labels", path_len - 1)
}

/// Red monotone `P_m` or blue `K_n`.
pub fn path_vs_clique(c: &EdgeColoring, m: usize, n: usize) -> Result<Witness> {
    let w = match path_or_clique(c, RED, m, n)? {
        PathOrClique::Path(p) => Witness::Red(Embedding::new(p)),
        PathOrClique::Clique(k) => Witness::Blue(Embedding::new(k)),
    };
    w.verify(c, &monotone_path(m), &complete(n))?;
    Ok(w)
}

/// Red copy of any graph `red` on `k` vertices or blue monotone `P_n`, at
/// `(n - 1)(k - 1) + 1` vertices (a red `K_k` contains `red`).
#[derive(Clone, Debug)]
pub struct PathEmbedder {
    red: OrderedGraph,
    blue: OrderedGraph,
}

impl PathEmbedder {
    pub fn new(red: OrderedGraph, n: usize) -> Result<Self> {
        if red.n() == 0 || n == 0 {
            return Err(Error::Invalid("targets must have at least one vertex".into()));
        }
        Ok(PathEmbedder { red, blue: monotone_path(n) })
    }
}

impl Embedder for PathEmbedder {
    fn red_target(&self) -> &OrderedGraph {
        &self.red
    }

    fn blue_target(&self) -> &OrderedGraph {
        &self.blue
    }

    fn threshold(&self) -> usize {
        (self.blue.n() - 1) * (self.red.n() - 1) + 1
    }

    fn embed(&self, c: &EdgeColoring) -> Result<Witness> {
        check_two_coloring(c, self.threshold())?;
        let head: Vec<usize> = (1..=self.threshold()).collect();
        let local = c.restrict(&head);
        let w = match path_or_clique(&local, BLUE, self.blue.n(), self.red.n())? {
            PathOrClique::Path(p) => Witness::Blue(Embedding::new(p)),
            PathOrClique::Clique(k) => Witness::Red(Embedding::new(k)),
        };
        w.verify(c, &self.red, &self.blue)?;
        Ok(w)
    }
}

/// Blue `K_1`: any single vertex.
#[derive(Clone, Debug)]
pub struct SingleVertex {
    red: OrderedGraph,
    blue: OrderedGraph,
}

impl SingleVertex {
    pub fn new(red: OrderedGraph) -> Self {
        SingleVertex { red, blue: OrderedGraph::empty(1) }
    }
}

impl Embedder for SingleVertex {
    fn red_target(&self) -> &OrderedGraph {
        &self.red
    }

    fn blue_target(&self) -> &OrderedGraph {
        &self.blue
    }

    fn threshold(&self) -> usize {
        1
    }

    fn embed(&self, c: &EdgeColoring) -> Result<Witness> {
        check_two_coloring(c, 1)?;
        Ok(Witness::Blue(Embedding::new(vec![1])))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneSubsequence {
    pub increasing: bool,
    /// 1-indexed positions in the input.
    pub positions: Vec<usize>,
}

/// Increasing or decreasing subsequence of length `n` in a sequence of at
/// least `(n - 1)^2 + 1` distinct numbers.
pub fn erdos_szekeres_sequence_witness(xs: &[i64], n: usize) -> Result<MonotoneSubsequence> {
    if n == 0 {
        return Err(Error::Invalid("length must be positive".into()));
    }
    let need = (n - 1) * (n - 1) + 1;
    if xs.len() < need {
        return Err(Error::Precondition(format!("need at least {need} numbers, got {}", xs.len())));
    }
    let mut sorted = xs.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Invalid("numbers must be distinct".into()));
    }
    let c = EdgeColoring::from_fn(xs.len(), 2, |i, j| if xs[i - 1] < xs[j - 1] { RED } else { BLUE })?;
    let out = match path_vs_clique(&c, n, n)? {
        Witness::Red(e) => MonotoneSubsequence { increasing: true, positions: e.image },
        Witness::Blue(e) => MonotoneSubsequence { increasing: false, positions: e.image },
        Witness::Sparse(_) => unreachable!(),
    };
    let ok = out.positions.windows(2).all(|w| (xs[w[0] - 1] < xs[w[1] - 1]) == out.increasing);
    assert!(ok, "labeling argument returned a non-monotone subsequence");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::seeded_rng;
    use rand::seq::SliceRandom;
    use rand::Rng;

    #[test]
    fn constant_colorings() {
        let red = EdgeColoring::constant(5, 2, RED);
        assert_eq!(path_vs_clique(&red, 3, 3).unwrap(), Witness::Red(Embedding::new(vec![1, 2, 3])));
        let blue = EdgeColoring::constant(5, 2, BLUE);
        assert_eq!(path_vs_clique(&blue, 3, 3).unwrap(), Witness::Blue(Embedding::new(vec![1, 2, 3])));
        assert!(path_vs_clique(&EdgeColoring::constant(4, 2, RED), 3, 3).is_err());
    }

    #[test]
    fn random_colorings_always_resolve() {
        let mut rng = seeded_rng(11);
        for m in 2..=5 {
            for n in 2..=5 {
                let big_n = (m - 1) * (n - 1) + 1;
                for _ in 0..200 {
                    let c = EdgeColoring::from_fn(big_n, 2, |_, _| rng.gen_range(0..2)).unwrap();
                    path_vs_clique(&c, m, n).unwrap();
                    let pe = PathEmbedder::new(complete(m), n).unwrap();
                    pe.embed(&c).unwrap();
                }
            }
        }
    }

    #[test]
    fn sequences() {
        let inc = erdos_szekeres_sequence_witness(&[1, 2, 3, 4, 5], 3).unwrap();
        assert_eq!(inc, MonotoneSubsequence { increasing: true, positions: vec![1, 2, 3] });
        assert!(erdos_szekeres_sequence_witness(&[2, 1, 4, 3], 3).is_err());
        assert!(erdos_szekeres_sequence_witness(&[1, 1, 2, 3, 4], 3).is_err());
        let mut rng = seeded_rng(5);
        let mut xs: Vec<i64> = (0..10).collect();
        for _ in 0..500 {
            xs.shuffle(&mut rng);
            let w = erdos_szekeres_sequence_witness(&xs, 4).unwrap();
            assert_eq!(w.positions.len(), 4);
        }
    }
}
