use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

pub const DEFAULT_S_FAMILY_CAP: usize = 6;

/// A 3-uniform hypergraph on `{1..n}` with strictly increasing triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TripleFile", into = "TripleFile")]
pub struct TripleSystem {
    n: usize,
    triples: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct TripleFile {
    n: usize,
    triples: Vec<[usize; 3]>,
}

impl TryFrom<TripleFile> for TripleSystem {
    type Error = Error;
    fn try_from(f: TripleFile) -> Result<Self> {
        TripleSystem::new(f.n, f.triples)
    }
}

impl From<TripleSystem> for TripleFile {
    fn from(t: TripleSystem) -> Self {
        TripleFile {
            n: t.n,
            triples: t.triples,
        }
    }
}

impl TripleSystem {
    pub fn new(n: usize, triples: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        let mut triples: Vec<_> = triples.into_iter().collect();
        for t in &triples {
            if !(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= n) {
                return Err(Error::Invalid(format!("triple {t:?} is not increasing inside 1..={n}")));
            }
        }
        triples.sort_unstable();
        if let Some(w) = triples.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("triple {:?} appears twice", w[0])));
        }
        Ok(TripleSystem { n, triples })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: [usize; 3]) -> bool {
        self.triples.binary_search(&t).is_ok()
    }

    /// Copy with one triple removed.
    pub fn without(&self, t: [usize; 3]) -> TripleSystem {
        TripleSystem {
            n: self.n,
            triples: self.triples.iter().copied().filter(|&x| x != t).collect(),
        }
    }
}

pub fn complete_triple_system(n: usize) -> TripleSystem {
    let triples = (1..=n).flat_map(|i| {
        (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| [i, j, k]))
    });
    TripleSystem::new(n, triples).expect("complete system is well formed")
}

/// Tight path `{i, i+1, i+2}` for `1 <= i <= n - 2`.
pub fn tight_path_3(n: usize) -> TripleSystem {
    TripleSystem::new(n, (1..=n.saturating_sub(2)).map(|i| [i, i + 1, i + 2]))
        .expect("tight path is well formed")
}

/// `T(H)` on `n + 1` vertices: `{i, j, k}` for every edge `(i, j)` of `h`
/// and every `k > j`.
pub fn t_hypergraph(h: &OrderedGraph) -> TripleSystem {
    let n = h.n();
    let triples = h
        .edges()
        .iter()
        .flat_map(|&(i, j)| (j + 1..=n + 1).map(move |k| [i, j, k]));
    TripleSystem::new(n + 1, triples).expect("T(H) is well formed")
}

pub fn s_family(hs: &TripleSystem) -> Result<Vec<OrderedGraph>> {
    s_family_capped(hs, DEFAULT_S_FAMILY_CAP)
}

/// All ordered graphs `H` on `[n]` whose `T(H)` contains a copy of `hs`
/// (`n + 1` vertices).
///
/// Containment is subhypergraph containment up to relabelling: some
/// bijection of the `n + 1` vertices maps every triple of `hs` to a triple of
/// `T(H)`. Graphs are returned in increasing order of their edge bitmask
/// (pair `(i,j)` in row-major position `k` contributes bit `k`).
pub fn s_family_capped(hs: &TripleSystem, cap: usize) -> Result<Vec<OrderedGraph>> {
    if hs.n() == 0 {
        return Err(Error::Invalid("S-family needs a system on at least one vertex".into()));
    }
    let n = hs.n() - 1;
    if n > cap {
        return Err(Error::LimitExceeded {
            what: "graph order for S-family enumeration",
            value: n,
            limit: cap,
        });
    }
    let v = n + 1;
    let index = TripleIndex::new(v);
    // Every relabelled image of hs as a triple bitmask.
    let mut images = HashSet::new();
    let mut perm: Vec<usize> = (1..=v).collect();
    for_each_permutation(&mut perm, 0, &mut |p| {
        let mask = hs.triples().iter().fold(0u64, |m, t| {
            let mut u = [p[t[0] - 1], p[t[1] - 1], p[t[2] - 1]];
            u.sort_unstable();
            m | (1 << index.of(u))
        });
        images.insert(mask);
    });
    let mut images: Vec<u64> = images.into_iter().collect();
    images.sort_unstable();

    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..(1 << pairs.len()) {
        let mut tmask = 0u64;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                for l in j + 1..=v {
                    tmask |= 1 << index.of([i, j, l]);
                }
            }
        }
        if images.iter().any(|&m| m & !tmask == 0) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, &e)| e);
            out.push(OrderedGraph::new(n, edges)?);
        }
    }
    Ok(out)
}

fn for_each_permutation(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        for_each_permutation(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Lexicographic rank of triples of `[v]`, `v <= 7` so that masks fit a `u64`.
struct TripleIndex {
    v: usize,
    rank: Vec<usize>,
}

impl TripleIndex {
    fn new(v: usize) -> Self {
        assert!(v <= 8, "triple masks need at most 8 vertices");
        let mut rank = vec![usize::MAX; (v + 1).pow(3)];
        let mut r = 0;
        for i in 1..=v {
            for j in i + 1..=v {
                for k in j + 1..=v {
                    rank[(i * (v + 1) + j) * (v + 1) + k] = r;
                    r += 1;
                }
            }
        }
        TripleIndex { v, rank }
    }

    fn of(&self, t: [usize; 3]) -> usize {
        let w = self.v + 1;
        self.rank[(t[0] * w + t[1]) * w + t[2]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    #[test]
    fn tight_paths() {
        assert_eq!(tight_path_3(3).len(), 1);
        assert_eq!(tight_path_3(4).len(), 2);
        assert_eq!(tight_path_3(5).triples(), &[[1, 2, 3], [2, 3, 4], [3, 4, 5]]);
    }

    #[test]
    fn t_hypergraph_examples() {
        let e = OrderedGraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(t_hypergraph(&e).triples(), &[[1, 2, 3]]);
        let p = OrderedGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(t_hypergraph(&p).triples(), &[[1, 2, 3], [1, 2, 4], [2, 3, 4]]);
        for n in 2..6 {
            assert_eq!(t_hypergraph(&complete(n)), complete_triple_system(n + 1));
        }
    }

    #[test]
    fn s_family_of_complete_system() {
        let fam = s_family(&complete_triple_system(4)).unwrap();
        assert_eq!(fam, vec![complete(3)]);
    }

    #[test]
    fn s_family_of_empty_system() {
        let empty = TripleSystem::new(3, []).unwrap();
        assert_eq!(s_family(&empty).unwrap().len(), 2);
        assert!(s_family(&TripleSystem::new(8, []).unwrap()).is_err());
    }

    #[test]
    fn rejects_bad_triples() {
        assert!(TripleSystem::new(3, [[1, 3, 2]]).is_err());
        assert!(TripleSystem::new(3, [[1, 2, 4]]).is_err());
        assert!(TripleSystem::new(3, [[1, 2, 3], [1, 2, 3]]).is_err());
    }
}
