//! Ordered subgraph containment.
//!
//! Backtracking over pattern vertices in label order. Vertex `p` may only map
//! into the window after the image of `p - 1` that still leaves room for the
//! remaining pattern vertices, intersected with the host neighborhoods of the
//! already-placed neighbors of `p`. Host vertices whose forward or backward
//! degree is too small for `p` are skipped.

use crate::bitset::BitSet;
use crate::coloring::EdgeColoring;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

pub const DEFAULT_PATTERN_CAP: usize = 16;

pub fn find_ordered_copy(host: &OrderedGraph, pattern: &OrderedGraph) -> Result<Option<Embedding>> {
    find_ordered_copy_capped(host, pattern, DEFAULT_PATTERN_CAP)
}

pub fn find_ordered_copy_capped(
    host: &OrderedGraph,
    pattern: &OrderedGraph,
    cap: usize,
) -> Result<Option<Embedding>> {
    check_cap(pattern, cap)?;
    let found = if host.n() < 64 {
        let masks = host_masks(host);
        PatternPlan::new(pattern).find_in_masks(&masks, host.n())
    } else {
        BigSearch::new(host, pattern).run()
    };
    if let Some(e) = &found {
        e.verify(host, pattern)?;
    }
    Ok(found)
}

/// Copy of `pattern` inside the color class `color` of `c`.
pub fn find_monochromatic_copy(
    c: &EdgeColoring,
    color: u8,
    pattern: &OrderedGraph,
) -> Result<Option<Embedding>> {
    c.check_color(color)?;
    check_cap(pattern, DEFAULT_PATTERN_CAP)?;
    let found = if c.n() < 64 {
        let masks = color_masks(c, color);
        PatternPlan::new(pattern).find_in_masks(&masks, c.n())
    } else {
        let host = c.class_graph(color)?;
        BigSearch::new(&host, pattern).run()
    };
    if let Some(e) = &found {
        e.verify_colored(c, color, pattern)?;
    }
    Ok(found)
}

fn check_cap(pattern: &OrderedGraph, cap: usize) -> Result<()> {
    if pattern.n() > cap {
        return Err(Error::LimitExceeded {
            what: "pattern size",
            value: pattern.n(),
            limit: cap,
        });
    }
    Ok(())
}

/// Adjacency rows as `u64` masks, bit `v` for label `v`. Requires `n < 64`.
pub fn host_masks(host: &OrderedGraph) -> Vec<u64> {
    assert!(host.n() < 64);
    let mut m = vec![0u64; host.n() + 1];
    for &(i, j) in host.edges() {
        m[i] |= 1 << j;
        m[j] |= 1 << i;
    }
    m
}

/// Color-class adjacency masks of a coloring with `N < 64`.
pub fn color_masks(c: &EdgeColoring, color: u8) -> Vec<u64> {
    assert!(c.n() < 64);
    let n = c.n();
    let mut m = vec![0u64; n + 1];
    let mut k = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if c.colors()[k] == color {
                m[i] |= 1 << j;
                m[j] |= 1 << i;
            }
            k += 1;
        }
    }
    m
}

/// Precomputed pattern data for the small-host search.
#[derive(Clone, Debug)]
pub struct PatternPlan {
    n: usize,
    back: Vec<Vec<usize>>,
    fdeg: Vec<u32>,
    bdeg: Vec<u32>,
}

impl PatternPlan {
    pub fn new(pattern: &OrderedGraph) -> Self {
        let n = pattern.n();
        let mut back = vec![Vec::new(); n + 1];
        let mut fdeg = vec![0; n + 1];
        let mut bdeg = vec![0; n + 1];
        for &(i, j) in pattern.edges() {
            back[j].push(i);
            fdeg[i] += 1;
            bdeg[j] += 1;
        }
        PatternPlan { n, back, fdeg, bdeg }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Searches a host given by label-indexed adjacency masks (`host_n < 64`).
    pub fn find_in_masks(&self, adj: &[u64], host_n: usize) -> Option<Embedding> {
        if self.n == 0 {
            return Some(Embedding::new(Vec::new()));
        }
        if self.n > host_n {
            return None;
        }
        let mut image = vec![0usize; self.n + 1];
        self.extend(adj, host_n, 1, &mut image)
            .then(|| Embedding::new(image[1..].to_vec()))
    }

    pub fn contained_in_masks(&self, adj: &[u64], host_n: usize) -> bool {
        if self.n == 0 {
            return true;
        }
        if self.n > host_n {
            return false;
        }
        let mut image = vec![0usize; self.n + 1];
        self.extend(adj, host_n, 1, &mut image)
    }

    fn extend(&self, adj: &[u64], host_n: usize, p: usize, image: &mut [usize]) -> bool {
        if p > self.n {
            return true;
        }
        let lo = image[p - 1] + 1;
        let hi = host_n - (self.n - p);
        if lo > hi {
            return false;
        }
        // bits lo..=hi
        let mut cand = (u64::MAX >> (63 - hi)) & (u64::MAX << lo);
        for &q in &self.back[p] {
            cand &= adj[image[q]];
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let row = adj[v];
            let fwd = (row >> v >> 1).count_ones();
            let bwd = (row & ((1u64 << v) - 1)).count_ones();
            if fwd < self.fdeg[p] || bwd < self.bdeg[p] {
                continue;
            }
            image[p] = v;
            if self.extend(adj, host_n, p + 1, image) {
                return true;
            }
        }
        false
    }
}

struct BigSearch<'a> {
    host: &'a OrderedGraph,
    n: usize,
    back: Vec<Vec<usize>>,
    fdeg: Vec<usize>,
    bdeg: Vec<usize>,
    host_fdeg: Vec<usize>,
    host_bdeg: Vec<usize>,
    scratch: Vec<BitSet>,
}

impl<'a> BigSearch<'a> {
    fn new(host: &'a OrderedGraph, pattern: &OrderedGraph) -> Self {
        let n = pattern.n();
        let mut back = vec![Vec::new(); n + 1];
        let mut fdeg = vec![0; n + 1];
        let mut bdeg = vec![0; n + 1];
        for &(i, j) in pattern.edges() {
            back[j].push(i);
            fdeg[i] += 1;
            bdeg[j] += 1;
        }
        let mut host_fdeg = vec![0; host.n() + 1];
        let mut host_bdeg = vec![0; host.n() + 1];
        for &(i, j) in host.edges() {
            host_fdeg[i] += 1;
            host_bdeg[j] += 1;
        }
        BigSearch {
            host,
            n,
            back,
            fdeg,
            bdeg,
            host_fdeg,
            host_bdeg,
            scratch: vec![BitSet::new(host.n() + 1); n + 1],
        }
    }

    fn run(mut self) -> Option<Embedding> {
        if self.n == 0 {
            return Some(Embedding::new(Vec::new()));
        }
        if self.n > self.host.n() {
            return None;
        }
        let mut image = vec![0usize; self.n + 1];
        self.extend(1, &mut image)
            .then(|| Embedding::new(image[1..].to_vec()))
    }

    fn extend(&mut self, p: usize, image: &mut [usize]) -> bool {
        if p > self.n {
            return true;
        }
        let big_n = self.host.n();
        let lo = image[p - 1] + 1;
        let hi = big_n - (self.n - p);
        if lo > hi {
            return false;
        }
        let mut cand = std::mem::replace(&mut self.scratch[p], BitSet::new(0));
        cand.clear();
        cand.insert_range(lo, hi + 1);
        for &q in &self.back[p] {
            cand.intersect_with(self.host.neighbors(image[q]));
        }
        let mut next = cand.next_from(lo);
        let mut found = false;
        while let Some(v) = next {
            if self.host_fdeg[v] >= self.fdeg[p] && self.host_bdeg[v] >= self.bdeg[p] {
                image[p] = v;
                if self.extend(p + 1, image) {
                    found = true;
                    break;
                }
            }
            next = cand.next_from(v + 1);
        }
        self.scratch[p] = cand;
        found
    }
}
