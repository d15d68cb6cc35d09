//! Order-sensitive graph parameters.

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

pub const DEFAULT_COVER_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub degeneracy: usize,
    pub degenerate_ordering: Vec<usize>,
    pub interval_chromatic: usize,
    pub bandwidth: usize,
    /// `None` when the graph is above the cover-number size limit.
    pub cover_number: Option<usize>,
}

impl GraphStats {
    pub fn of(g: &OrderedGraph) -> GraphStats {
        let (degeneracy, degenerate_ordering) = degeneracy(g);
        GraphStats {
            n: g.n(),
            edges: g.edge_count(),
            max_degree: g.max_degree(),
            degeneracy,
            degenerate_ordering,
            interval_chromatic: interval_chromatic(g),
            bandwidth: bandwidth(g),
            cover_number: cover_number(g).ok(),
        }
    }
}

/// Minimum number of consecutive intervals with no edge inside any of them.
///
/// Left-to-right sweep: the current interval is closed exactly when the next
/// vertex has a neighbor inside it.
pub fn interval_chromatic(g: &OrderedGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut count = 1;
    let mut start = 1;
    for v in 2..=g.n() {
        if g.back_neighbors(v).any(|u| u >= start) {
            count += 1;
            start = v;
        }
    }
    count
}

/// Degeneracy and an ordering in which every vertex has at most `d` earlier
/// neighbors. Vertices are removed by minimum remaining degree, ties to the
/// smallest label; the ordering is the reverse removal order.
pub fn degeneracy(g: &OrderedGraph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { g.degree(v) }).collect();
    let mut alive = vec![true; n + 1];
    let mut removal = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a live vertex remains");
        d = d.max(deg[v]);
        alive[v] = false;
        removal.push(v);
        for u in g.neighbors(v).iter() {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    removal.reverse();
    (d, removal)
}

/// Largest `j - i` over edges; zero for an edgeless graph.
pub fn bandwidth(g: &OrderedGraph) -> usize {
    g.edges().iter().map(|&(i, j)| j - i).max().unwrap_or(0)
}

pub fn cover_number(g: &OrderedGraph) -> Result<usize> {
    cover_number_with_limit(g, DEFAULT_COVER_LIMIT)
}

/// Exact vertex cover number by branching on an uncovered edge.
pub fn cover_number_with_limit(g: &OrderedGraph, limit: usize) -> Result<usize> {
    if g.n() > limit {
        return Err(Error::LimitExceeded {
            what: "vertex count for cover number",
            value: g.n(),
            limit,
        });
    }
    let mut in_cover = vec![false; g.n() + 1];
    let mut best = greedy_cover_size(g);
    branch_cover(g, &mut in_cover, 0, &mut best);
    Ok(best)
}

fn greedy_cover_size(g: &OrderedGraph) -> usize {
    // Both endpoints of a maximal matching.
    let mut used = vec![false; g.n() + 1];
    let mut size = 0;
    for &(i, j) in g.edges() {
        if !used[i] && !used[j] {
            used[i] = true;
            used[j] = true;
            size += 2;
        }
    }
    size
}

/// Size of a greedy maximal matching among edges not yet covered.
fn uncovered_matching_bound(g: &OrderedGraph, in_cover: &[bool]) -> usize {
    let mut used = vec![false; g.n() + 1];
    let mut m = 0;
    for &(i, j) in g.edges() {
        if !in_cover[i] && !in_cover[j] && !used[i] && !used[j] {
            used[i] = true;
            used[j] = true;
            m += 1;
        }
    }
    m
}

fn branch_cover(g: &OrderedGraph, in_cover: &mut [bool], size: usize, best: &mut usize) {
    if size + uncovered_matching_bound(g, in_cover) >= *best {
        return;
    }
    let Some(&(i, j)) = g.edges().iter().find(|&&(i, j)| !in_cover[i] && !in_cover[j]) else {
        *best = size;
        return;
    };
    for v in [i, j] {
        in_cover[v] = true;
        branch_cover(g, in_cover, size + 1, best);
        in_cover[v] = false;
    }
}

/// Vertex count of the longest monotone path in one color class.
pub fn longest_monotone_path(c: &EdgeColoring, color: u8) -> Result<usize> {
    c.check_color(color)?;
    Ok(monotone_path_labels(c, color).into_iter().max().unwrap_or(0))
}

/// `labels[v - 1]` is the vertex count of the longest monotone path in
/// `color` ending at `v`.
pub fn monotone_path_labels(c: &EdgeColoring, color: u8) -> Vec<usize> {
    let n = c.n();
    let mut label = vec![1usize; n];
    for j in 2..=n {
        for i in 1..j {
            if c.color(i, j) == color && label[i - 1] + 1 > label[j - 1] {
                label[j - 1] = label[i - 1] + 1;
            }
        }
    }
    label
}
