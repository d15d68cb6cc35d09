//! Ordered graphs on `{1..n}`.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A graph whose vertex labels `1..=n` carry order.
///
/// Edges are stored as sorted pairs `(i, j)` with `i < j`, together with a
/// bitset adjacency row per vertex indexed by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<BitSet>,
}

/// Serialized form: `{"n": <int>, "edges": [[i,j],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Checks the edge list invariants and reports the first violation.
pub fn validate(n: usize, edges: &[(usize, usize)]) -> Result<()> {
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    for &(i, j) in edges {
        if i < 1 || j < 1 || i > n || j > n {
            return Err(Error::OutOfRange(i, j, n));
        }
        if i == j {
            return Err(Error::Loop(i));
        }
        if i > j {
            return Err(Error::NotIncreasing(i, j));
        }
        if !seen.insert((i, j)) {
            return Err(Error::DuplicateEdge(i, j));
        }
    }
    Ok(())
}

impl OrderedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges: Vec<_> = edges.into_iter().collect();
        validate(n, &edges)?;
        edges.sort_unstable();
        let mut adj = vec![BitSet::new(n + 1); n + 1];
        for &(i, j) in &edges {
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(OrderedGraph { n, edges, adj })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        OrderedGraph {
            n,
            edges: Vec::new(),
            adj: vec![BitSet::new(n + 1); n + 1],
        }
    }

    /// Builds from pairs given in either orientation, dropping duplicates.
    pub fn from_unordered(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges: Vec<_> = pairs
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        OrderedGraph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i <= self.n && self.adj[i].contains(j)
    }

    /// Neighbor set of `v` as a bitset indexed by label.
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbors of `v` with smaller label.
    pub fn back_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().take_while(move |&u| u < v)
    }

    pub fn is_matching(&self) -> bool {
        (1..=self.n).all(|v| self.degree(v) <= 1)
    }

    pub fn is_perfect_matching(&self) -> bool {
        (1..=self.n).all(|v| self.degree(v) == 1)
    }

    /// Same edges, one vertex per label and an edge set that is a subset of `other`'s.
    pub fn is_subgraph_of(&self, other: &OrderedGraph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(i, j)| other.has_edge(i, j))
    }

    /// Subgraph induced on `vertices` (sorted), relabelled `1..=len`.
    pub fn induced(&self, vertices: &[usize]) -> OrderedGraph {
        let mut edges = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        OrderedGraph::new(vertices.len(), edges).expect("induced subgraph is well formed")
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            n: self.n,
            edges: self.edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }

    pub fn from_file(f: &GraphFile) -> Result<Self> {
        let edges: Vec<_> = f.edges.iter().map(|e| (e[0], e[1])).collect();
        OrderedGraph::new(f.n, edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: GraphFile = serde_json::from_str(s)?;
        OrderedGraph::from_file(&f)
    }
}

impl Serialize for OrderedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrderedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = GraphFile::deserialize(d)?;
        OrderedGraph::from_file(&f).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_reports_first_violation() {
        assert!(validate(3, &[(1, 2)]).is_ok());
        assert_eq!(validate(3, &[(2, 2)]), Err(Error::Loop(2)));
        assert_eq!(validate(3, &[(1, 4)]), Err(Error::OutOfRange(1, 4, 3)));
        assert_eq!(validate(3, &[(3, 1)]), Err(Error::NotIncreasing(3, 1)));
        assert_eq!(
            validate(3, &[(1, 2), (2, 3), (1, 2)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert_eq!(validate(3, &[(0, 2)]), Err(Error::OutOfRange(0, 2, 3)));
    }

    #[test]
    fn json_is_sorted_and_compact() {
        let g = OrderedGraph::new(4, [(2, 3), (1, 4), (1, 2)]).unwrap();
        assert_eq!(g.to_json(), r#"{"n":4,"edges":[[1,2],[1,4],[2,3]]}"#);
        assert_eq!(OrderedGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(OrderedGraph::from_json(r#"{"n":3,"edges":[[1,4]]}"#).is_err());
    }

    #[test]
    fn induced_relabels() {
        let g = OrderedGraph::new(5, [(1, 3), (3, 5), (2, 4)]).unwrap();
        let h = g.induced(&[1, 3, 5]);
        assert_eq!(h.edges(), &[(1, 2), (2, 3)]);
    }
}
