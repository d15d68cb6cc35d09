//! Greedy embedding of a degenerate graph, or an ordered family of large
//! vertex sets with low density between every two of them.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;

use crate::containment::find_ordered_copy;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::generators::seeded_rng;
use crate::graph::OrderedGraph;
use crate::rational::{self, int, pow};
use crate::stats::degeneracy;

use super::{cross_edges, to_bits, SparseWitness, Witness};

pub const DEFAULT_SAMPLE_CAP: usize = 1000;

/// Outcome of one greedy pass.
#[derive(Clone, Debug, PartialEq)]
pub enum Split {
    Embedded(Embedding),
    /// Every vertex of `low` has fewer than `c * |other|` neighbors in
    /// `other`. The two sets lie in distinct intervals, in either order.
    Sparse { low: Vec<usize>, other: Vec<usize> },
}

/// Parameters of `h` the greedy procedure needs.
struct Shape<'a> {
    h: &'a OrderedGraph,
    /// Degenerate ordering: `order[t]` is the label of `v_{t+1}`.
    order: Vec<usize>,
    /// `pos[label]` is the index `t` with `order[t] == label`.
    pos: Vec<usize>,
}

impl<'a> Shape<'a> {
    fn new(h: &'a OrderedGraph) -> Self {
        let (_, order) = degeneracy(h);
        let mut pos = vec![0; h.n() + 1];
        for (t, &v) in order.iter().enumerate() {
            pos[v] = t;
        }
        Shape { h, order, pos }
    }
}

fn ceil_times(c: &BigRational, len: usize) -> usize {
    let x = c * int(len);
    x.ceil().to_integer().to_usize().expect("fits")
}

/// The base step: embed `h` into `host[verts]` greedily along a degenerate
/// ordering, each vertex into the interval at its own label, keeping for
/// every later neighbor the candidates adjacent to everything placed so far.
/// When no candidate keeps all those sets at a `c` fraction, the candidate
/// set and the worst later set form a one-sided sparse pair.
fn greedy(host: &OrderedGraph, verts: &[usize], shape: &Shape<'_>, c: &BigRational) -> Result<Split> {
    let h = shape.h;
    let n = h.n();
    let (base, rem) = verts.len().div_rem(&n);
    let mut starts = Vec::with_capacity(n + 1);
    let mut at = 0;
    for p in 0..n {
        starts.push(at);
        at += base + usize::from(p < rem);
    }
    starts.push(at);
    // cand[t] = V_{t, current}; indexed by degenerate position.
    let mut cand: Vec<Vec<usize>> = shape
        .order
        .iter()
        .map(|&label| verts[starts[label - 1]..starts[label]].to_vec())
        .collect();
    let mut image = vec![0usize; n + 1];
    for t in 0..n {
        let later: Vec<usize> = h
            .neighbors(shape.order[t])
            .iter()
            .map(|u| shape.pos[u])
            .filter(|&i| i > t)
            .collect();
        let bits: Vec<_> = later.iter().map(|&i| to_bits(host.n(), &cand[i])).collect();
        let need: Vec<usize> = later.iter().map(|&i| ceil_times(c, cand[i].len())).collect();
        let good = cand[t].iter().copied().find(|&w| {
            (0..later.len()).all(|k| host.neighbors(w).intersection_count(&bits[k]) >= need[k])
        });
        match good {
            Some(w) => {
                image[shape.order[t]] = w;
                for &i in &later {
                    cand[i].retain(|&x| host.has_edge(w, x));
                }
            }
            None if later.is_empty() => {
                return Err(Error::Precondition(format!(
                    "no candidates left for vertex {} of h: the host is too small",
                    shape.order[t]
                )));
            }
            None => {
                let mut best: Option<(usize, Vec<usize>)> = None;
                for (k, &i) in later.iter().enumerate() {
                    let bad: Vec<usize> = cand[t]
                        .iter()
                        .copied()
                        .filter(|&w| host.neighbors(w).intersection_count(&bits[k]) < need[k])
                        .collect();
                    if best.as_ref().is_none_or(|(_, b)| bad.len() > b.len()) {
                        best = Some((i, bad));
                    }
                }
                let (i, low) = best.expect("at least one later neighbor");
                return Ok(Split::Sparse { low, other: cand[i].clone() });
            }
        }
    }
    Ok(Split::Embedded(Embedding::new(image[1..].to_vec())))
}

/// The one-sided split on `host[verts]` with threshold `c` (one greedy pass).
pub fn degree_split(host: &OrderedGraph, verts: &[usize], h: &OrderedGraph, c: &BigRational) -> Result<Split> {
    if h.n() == 0 {
        return Err(Error::Invalid("h needs at least one vertex".into()));
    }
    greedy(host, verts, &Shape::new(h), c)
}

enum Outcome {
    Embedded(Embedding),
    Sets(Vec<Vec<usize>>),
}

fn recurse(host: &OrderedGraph, verts: &[usize], shape: &Shape<'_>, c: &BigRational, s: u32) -> Result<Outcome> {
    // Deeper levels split with c / 2^s so the later halves can be cleaned.
    let cs = if s == 1 { c.clone() } else { c / pow(&int(2), s) };
    let split = greedy(host, verts, shape, &cs)?;
    let (low, other) = match split {
        Split::Embedded(e) => return Ok(Outcome::Embedded(e)),
        Split::Sparse { low, other } => (low, other),
    };
    let low_first = low.first() < other.first();
    if s == 1 {
        let sets = if low_first { vec![low, other] } else { vec![other, low] };
        return Ok(Outcome::Sets(sets));
    }
    let first = match recurse(host, &low, shape, c, s - 1)? {
        Outcome::Embedded(e) => return Ok(Outcome::Embedded(e)),
        Outcome::Sets(sets) => sets,
    };
    let mut keep = other;
    for w in &first {
        let bits = to_bits(host.n(), w);
        let need = ceil_times(c, w.len());
        keep.retain(|&x| host.neighbors(x).intersection_count(&bits) < need);
    }
    let second = match recurse(host, &keep, shape, c, s - 1)? {
        Outcome::Embedded(e) => return Ok(Outcome::Embedded(e)),
        Outcome::Sets(sets) => sets,
    };
    Ok(Outcome::Sets(if low_first {
        first.into_iter().chain(second).collect()
    } else {
        second.into_iter().chain(first).collect()
    }))
}

/// `c^(sd) N / (2^(sd+1) Δ n)^s`, the guaranteed size of each set.
pub fn greedy_size_bound(h: &OrderedGraph, c: &BigRational, s: u32, big_n: usize) -> BigRational {
    let (d, _) = degeneracy(h);
    let delta = h.max_degree();
    let sd = s * d as u32;
    let den = pow(&(pow(&int(2), sd + 1) * int(delta) * int(h.n())), s);
    if den.is_zero() {
        return int(big_n);
    }
    pow(c, sd) * int(big_n) / den
}

/// `(2 Δ n (2^s / c)^d)^s`.
fn size_requirement(h: &OrderedGraph, c: &BigRational, s: u32) -> BigRational {
    let (d, _) = degeneracy(h);
    let inner = int(2) * int(h.max_degree()) * int(h.n()) * pow(&(pow(&int(2), s) / c), d as u32);
    pow(&inner, s)
}

fn check_threshold(c: &BigRational) -> Result<()> {
    if !rational::in_open_unit(c) {
        return Err(Error::Invalid(format!("threshold {} is not in (0, 1)", rational::to_string(c))));
    }
    Ok(())
}

/// Ordered copy of `h` in `host_red`, or `2^s` ordered sets with pairwise
/// density at most `c`. Requires `N >= (2 Δ n (2^s / c)^d)^s` (and `N >= n`).
pub fn greedy_embed_or_sparse(host_red: &OrderedGraph, h: &OrderedGraph, c: &BigRational, s: u32) -> Result<Witness> {
    check_threshold(c)?;
    if s == 0 || s > 16 {
        return Err(Error::Invalid(format!("depth must be in 1..=16, got {s}")));
    }
    if h.n() == 0 {
        return Err(Error::Invalid("h needs at least one vertex".into()));
    }
    let big_n = host_red.n();
    let req = size_requirement(h, c, s);
    if int(big_n) < req || big_n < h.n() {
        return Err(Error::Precondition(format!(
            "host has {big_n} vertices, the split needs at least {}",
            rational::to_string(&req.ceil().max(int(h.n())))
        )));
    }
    let verts: Vec<usize> = (1..=big_n).collect();
    let w = match recurse(host_red, &verts, &Shape::new(h), c, s)? {
        Outcome::Embedded(e) => {
            e.verify(host_red, h)?;
            Witness::Red(e)
        }
        Outcome::Sets(sets) => {
            let sw = SparseWitness { sets, threshold: c.clone(), size_bound: greedy_size_bound(h, c, s, big_n) };
            sw.verify(host_red)?;
            Witness::Sparse(sw)
        }
    };
    Ok(w)
}

/// A vertex subset with low internal edge density.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseSubset {
    pub vertices: Vec<usize>,
    pub density: BigRational,
    /// Number of sets the greedy split produced (`2^s`).
    pub sets: usize,
    /// Common size of the subsampled sets.
    pub per_set: usize,
    /// Subsampling rounds used.
    pub samples: usize,
    /// Whether `N` meets `(n^2 c^(-7d))^(4 log(1/c))`; the construction runs
    /// either way and the returned density is always checked.
    pub size_requirement_met: bool,
}

pub fn sparse_subset(host: &OrderedGraph, h: &OrderedGraph, c: &BigRational, seed: u64) -> Result<SparseSubset> {
    sparse_subset_with_cap(host, h, c, seed, DEFAULT_SAMPLE_CAP)
}

/// Subset of a host with no ordered copy of `h` with edge density at most
/// `c` (`0 < c < 1/2`): run the greedy split with `c / 2` and `s = ceil(log(2/c))`,
/// then subsample every set down to the smallest size until the total cross
/// edge count is at most `(c/2) C(t,2) N'^2`.
pub fn sparse_subset_with_cap(
    host: &OrderedGraph,
    h: &OrderedGraph,
    c: &BigRational,
    seed: u64,
    max_samples: usize,
) -> Result<SparseSubset> {
    check_threshold(c)?;
    if *c >= rational::ratio(1, 2) {
        return Err(Error::Invalid("threshold must be below 1/2".into()));
    }
    if h.n() == 0 {
        return Err(Error::Invalid("h needs at least one vertex".into()));
    }
    if let Some(e) = find_ordered_copy(host, h)? {
        return Err(Error::Precondition(format!("host contains h at {:?}", e.image)));
    }
    let two_over_c = int(2) / c;
    let mut s = 0u32;
    while pow(&int(2), s) < two_over_c {
        s += 1;
    }
    let half = c / int(2);
    let verts: Vec<usize> = (1..=host.n()).collect();
    let sets = match recurse(host, &verts, &Shape::new(h), &half, s)? {
        Outcome::Sets(sets) => sets,
        Outcome::Embedded(e) => unreachable!("host has no copy of h, yet greedy found {e:?}"),
    };
    let t = sets.len();
    let per_set = sets.iter().map(Vec::len).min().unwrap_or(0);
    if per_set == 0 {
        return Err(Error::Precondition("a set came out empty: the host is too small".into()));
    }
    let budget = &half * int(t * (t - 1) / 2) * int(per_set * per_set);
    let mut rng = seeded_rng(seed);
    for round in 1..=max_samples {
        let picked: Vec<Vec<usize>> = sets
            .iter()
            .map(|w| {
                let mut p: Vec<usize> = w.choose_multiple(&mut rng, per_set).copied().collect();
                p.sort_unstable();
                p
            })
            .collect();
        let bits: Vec<_> = picked.iter().map(|w| to_bits(host.n(), w)).collect();
        let mut cross = 0;
        for i in 0..t {
            for j in i + 1..t {
                cross += cross_edges(host, &picked[i], &bits[j]);
            }
        }
        if int(cross) > budget {
            continue;
        }
        let vertices: Vec<usize> = picked.into_iter().flatten().collect();
        let all = to_bits(host.n(), &vertices);
        let inside = cross_edges(host, &vertices, &all) / 2;
        let k = vertices.len();
        let density = rational::density(inside, k * (k - 1) / 2, 1);
        if density > *c {
            return Err(Error::Invalid(format!(
                "subset density {} exceeds {}",
                rational::to_string(&density),
                rational::to_string(c)
            )));
        }
        let (d, _) = degeneracy(h);
        let cf = rational::to_f64(c);
        let n = h.n() as f64;
        let log_req = 4.0 * (1.0 / cf).log2() * (n * n * cf.powf(-7.0 * d as f64)).log2();
        return Ok(SparseSubset {
            vertices,
            density,
            sets: t,
            per_set,
            samples: round,
            size_requirement_met: (host.n() as f64).log2() >= log_req,
        });
    }
    Err(Error::NoConvergence(format!("no good subsample in {max_samples} rounds")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, monotone_path, seeded_rng};
    use crate::rational::ratio;
    use rand::Rng;

    #[test]
    fn complete_host_embeds() {
        let host = complete(60);
        let h = monotone_path(3);
        let w = greedy_embed_or_sparse(&host, &h, &ratio(1, 2), 1).unwrap();
        assert_eq!(w, Witness::Red(Embedding::new(vec![1, 21, 41])));
    }

    #[test]
    fn empty_host_is_sparse() {
        let host = OrderedGraph::empty(60);
        let h = monotone_path(3);
        match greedy_embed_or_sparse(&host, &h, &ratio(1, 2), 1).unwrap() {
            Witness::Sparse(sw) => {
                assert_eq!(sw.sets.len(), 2);
                sw.verify(&host).unwrap();
            }
            other => panic!("expected sparse, got {other:?}"),
        }
        assert!(greedy_embed_or_sparse(&OrderedGraph::empty(47), &h, &ratio(1, 2), 1).is_err());
    }

    #[test]
    fn strengthened_split() {
        let mut rng = seeded_rng(4);
        let h = complete(3);
        let c = ratio(1, 3);
        for _ in 0..50 {
            let n = 80;
            let edges: Vec<_> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .filter(|_| rng.gen_bool(0.3))
                .collect();
            let host = OrderedGraph::new(n, edges).unwrap();
            let verts: Vec<usize> = (1..=n).collect();
            if let Split::Sparse { low, other } = degree_split(&host, &verts, &h, &c).unwrap() {
                assert!(!low.is_empty());
                let bits = to_bits(n, &other);
                for &v in &low {
                    assert!(int(host.neighbors(v).intersection_count(&bits)) < &c * int(other.len()));
                }
                let e = cross_edges(&host, &low, &bits);
                assert!(rational::density(e, low.len(), other.len()) <= c);
                assert!(low.last() < other.first() || other.last() < low.first());
            }
        }
    }

    #[test]
    fn depth_two() {
        let h = OrderedGraph::new(2, [(1, 2)]).unwrap();
        let host = OrderedGraph::empty(460);
        match greedy_embed_or_sparse(&host, &h, &ratio(3, 4), 2).unwrap() {
            Witness::Sparse(sw) => assert_eq!(sw.sets.len(), 4),
            other => panic!("expected sparse, got {other:?}"),
        }
    }

    #[test]
    fn sparse_subsets() {
        let c = ratio(2, 5);
        let h = OrderedGraph::new(2, [(1, 2)]).unwrap();
        let empty = OrderedGraph::empty(40);
        let sub = sparse_subset(&empty, &h, &c, 1).unwrap();
        assert!(sub.density.is_zero());
        assert!(!sub.vertices.is_empty());

        // Disjoint interval triangles avoid K_4.
        let n = 300;
        let tri: Vec<_> = (0..n / 3)
            .flat_map(|b| {
                let a = 3 * b + 1;
                [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
            })
            .collect();
        let host = OrderedGraph::new(n, tri).unwrap();
        let sub = sparse_subset(&host, &complete(4), &c, 2).unwrap();
        assert!(sub.density <= c);
        assert!(sparse_subset(&complete(10), &complete(3), &c, 0).is_err());
    }
}
