//! Edge colorings of the complete graph on `{1..N}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// A total map from pairs `1 <= i < j <= N` to colors `0..q`.
///
/// Colors are stored in row-major upper-triangular order:
/// `(1,2), (1,3), ..., (1,N), (2,3), ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    q: u8,
    colors: Vec<u8>,
}

/// Serialized form: `{"N": <int>, "q": <int>, "colors": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    #[serde(rename = "N")]
    pub n: usize,
    pub q: u8,
    pub colors: Vec<u8>,
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `(i, j)`, `i < j`, in row-major upper-triangular order.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_at(n: usize, mut idx: usize) -> (usize, usize) {
    for i in 1..n {
        let row = n - i;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
    }
    panic!("pair index out of range")
}

impl EdgeColoring {
    pub fn new(n: usize, q: u8, colors: Vec<u8>) -> Result<Self> {
        if q < 2 {
            return Err(Error::Invalid(format!("a coloring needs q >= 2, got {q}")));
        }
        if colors.len() != pair_count(n) {
            return Err(Error::Invalid(format!(
                "{} colors given for {} pairs",
                colors.len(),
                pair_count(n)
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= q) {
            return Err(Error::InvalidColor {
                color: c as usize,
                q: q as usize,
            });
        }
        Ok(EdgeColoring { n, q, colors })
    }

    pub fn constant(n: usize, q: u8, color: u8) -> Self {
        assert!(color < q && q >= 2);
        EdgeColoring {
            n,
            q,
            colors: vec![color; pair_count(n)],
        }
    }

    /// Colors each pair with `f(i, j)`.
    pub fn from_fn(n: usize, q: u8, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let mut colors = Vec::with_capacity(pair_count(n));
        for i in 1..=n {
            for j in i + 1..=n {
                colors.push(f(i, j));
            }
        }
        EdgeColoring::new(n, q, colors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Color of the pair `{i, j}` in either orientation.
    #[inline]
    pub fn color(&self, i: usize, j: usize) -> u8 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.colors[pair_index(self.n, a, b)]
    }

    pub fn set(&mut self, i: usize, j: usize, color: u8) {
        assert!(color < self.q);
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let idx = pair_index(self.n, a, b);
        self.colors[idx] = color;
    }

    pub fn check_color(&self, color: u8) -> Result<()> {
        if color >= self.q {
            return Err(Error::InvalidColor {
                color: color as usize,
                q: self.q as usize,
            });
        }
        Ok(())
    }

    /// The graph of all pairs with the given color.
    pub fn class_graph(&self, color: u8) -> Result<OrderedGraph> {
        self.check_color(color)?;
        let mut edges = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.color(i, j) == color {
                    edges.push((i, j));
                }
            }
        }
        OrderedGraph::new(self.n, edges)
    }

    /// Coloring induced on the sorted vertex list, relabelled `1..=len`.
    pub fn restrict(&self, vertices: &[usize]) -> EdgeColoring {
        let k = vertices.len();
        let mut colors = Vec::with_capacity(pair_count(k));
        for a in 0..k {
            for b in a + 1..k {
                colors.push(self.color(vertices[a], vertices[b]));
            }
        }
        EdgeColoring {
            n: k,
            q: self.q,
            colors,
        }
    }

    /// Swaps colors by `perm[c]`.
    pub fn recolor(&self, perm: &[u8]) -> EdgeColoring {
        EdgeColoring {
            n: self.n,
            q: self.q,
            colors: self.colors.iter().map(|&c| perm[c as usize]).collect(),
        }
    }

    pub fn to_file(&self) -> ColoringFile {
        ColoringFile {
            n: self.n,
            q: self.q,
            colors: self.colors.clone(),
        }
    }

    pub fn from_file(f: &ColoringFile) -> Result<Self> {
        EdgeColoring::new(f.n, f.q, f.colors.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("coloring serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: ColoringFile = serde_json::from_str(s)?;
        EdgeColoring::from_file(&f)
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = ColoringFile::deserialize(d)?;
        EdgeColoring::from_file(&f).map_err(serde::de::Error::custom)
    }
}
