use crate::graph::OrderedGraph;

/// Monotone path `1 - 2 - ... - n`.
pub fn monotone_path(n: usize) -> OrderedGraph {
    path_power(n, 1)
}

/// `k`-th power of the monotone path: `i ~ j` iff `0 < j - i <= k`.
pub fn path_power(n: usize, k: usize) -> OrderedGraph {
    let edges = (1..=n).flat_map(|i| (i + 1..=n.min(i + k)).map(move |j| (i, j)));
    OrderedGraph::new(n, edges).expect("path power is well formed")
}

pub fn complete(n: usize) -> OrderedGraph {
    path_power(n, n)
}

/// Complete multipartite graph whose parts are consecutive intervals of the
/// given sizes.
pub fn complete_multipartite_trivial(parts: &[usize]) -> OrderedGraph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n + 1);
    part_of.push(usize::MAX);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let edges = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| part_of[i] != part_of[j]);
    OrderedGraph::new(n, edges).expect("multipartite graph is well formed")
}

/// `J_k`: all `k^2` pairs between `{1..k}` and `{k+1..2k}`.
pub fn j_k(k: usize) -> OrderedGraph {
    complete_multipartite_trivial(&[k, k])
}

/// Ordered lexicographic product `g · h`: `|h|` consecutive copies of `g`,
/// copies `a < b` completely joined iff `(a, b)` is an edge of `h`.
///
/// Vertex `x` of copy `a` gets label `(a - 1) * |g| + x`.
pub fn lex_product(g: &OrderedGraph, h: &OrderedGraph) -> OrderedGraph {
    let gn = g.n();
    let label = |a: usize, x: usize| (a - 1) * gn + x;
    let mut edges = Vec::new();
    for a in 1..=h.n() {
        for &(x, y) in g.edges() {
            edges.push((label(a, x), label(a, y)));
        }
    }
    for &(a, b) in h.edges() {
        for x in 1..=gn {
            for y in 1..=gn {
                edges.push((label(a, x), label(b, y)));
            }
        }
    }
    OrderedGraph::new(gn * h.n(), edges).expect("lexicographic product is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(monotone_path(3).edges(), &[(1, 2), (2, 3)]);
        assert_eq!(
            path_power(4, 2).edges(),
            &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
        );
        assert_eq!(complete_multipartite_trivial(&[1, 1, 1]), complete(3));
        assert_eq!(j_k(1).edges(), &[(1, 2)]);
        assert_eq!(j_k(2).edges(), &[(1, 3), (1, 4), (2, 3), (2, 4)]);
        assert_eq!(j_k(3).edge_count(), 9);
        assert_eq!(complete_multipartite_trivial(&[2, 1]).edges(), &[(1, 3), (2, 3)]);
    }

    #[test]
    fn path_power_sits_in_clique_times_path() {
        let (n, k) = (5, 2);
        let prod = lex_product(&complete(k), &monotone_path(n));
        let pk = path_power(n * k, k);
        assert!(pk.is_subgraph_of(&prod));
    }
}
