//! Explicit lower-bound colorings and orderings.

use rand::Rng;

use crate::coloring::EdgeColoring;
use crate::containment::find_monochromatic_copy;
use crate::error::{Error, Result};
use crate::generators::{complete, seeded_rng};
use crate::graph::OrderedGraph;
use crate::RED;

/// Largest vertex count any construction here will build.
pub const DEFAULT_VERTEX_CAP: usize = 4096;

fn check_size(what: &'static str, n: usize) -> Result<()> {
    if n > DEFAULT_VERTEX_CAP {
        return Err(Error::LimitExceeded {
            what,
            value: n,
            limit: DEFAULT_VERTEX_CAP,
        });
    }
    Ok(())
}

/// Coloring of `(n-1)^q` vertices with no monochromatic monotone `P_n`.
///
/// Vertices are the tuples of `[n-1]^q` in lexicographic order; a pair gets
/// the index of the first coordinate where its tuples differ.
pub fn es_path_coloring(n: usize, q: u8) -> Result<EdgeColoring> {
    if n < 2 || q < 2 {
        return Err(Error::Invalid(format!("need n >= 2 and q >= 2, got n={n}, q={q}")));
    }
    let base = n - 1;
    let size = (0..q).try_fold(1usize, |acc, _| acc.checked_mul(base));
    let size = match size {
        Some(v) => v,
        None => usize::MAX,
    };
    check_size("es_path_coloring vertices", size)?;
    let digits = |v: usize| -> Vec<usize> {
        let mut d = vec![0; q as usize];
        let mut v = v;
        for slot in d.iter_mut().rev() {
            *slot = v % base;
            v /= base;
        }
        d
    };
    let tuples: Vec<Vec<usize>> = (0..size).map(digits).collect();
    EdgeColoring::from_fn(size, q, |i, j| {
        let (a, b) = (&tuples[i - 1], &tuples[j - 1]);
        a.iter().zip(b).position(|(x, y)| x != y).expect("distinct tuples") as u8
    })
}

/// What to put inside the blocks of a blow-up.
#[derive(Clone, Copy, Debug)]
pub enum Inner<'a> {
    Coloring(&'a EdgeColoring),
    Constant(u8),
}

/// Replace every vertex of `base` by an interval of `s` vertices.
///
/// Vertex `x` of block `b` is `(b - 1) * s + x`. Pairs across blocks take the
/// base color of the two blocks; pairs inside a block take `inner`.
pub fn blowup_coloring(base: &EdgeColoring, s: usize, inner: Inner<'_>) -> Result<EdgeColoring> {
    if s == 0 {
        return Err(Error::Invalid("block size must be positive".into()));
    }
    match inner {
        Inner::Coloring(c) => {
            if c.n() != s {
                return Err(Error::Invalid(format!("inner coloring has {} vertices, block size is {s}", c.n())));
            }
            if c.q() != base.q() {
                return Err(Error::Invalid(format!("inner uses {} colors, base uses {}", c.q(), base.q())));
            }
        }
        Inner::Constant(color) => base.check_color(color)?,
    }
    let n = base
        .n()
        .checked_mul(s)
        .ok_or_else(|| Error::Invalid("blow-up size overflows".into()))?;
    check_size("blow-up vertices", n)?;
    let block = |v: usize| (v - 1) / s + 1;
    let offset = |v: usize| (v - 1) % s + 1;
    EdgeColoring::from_fn(n, base.q(), |i, j| {
        let (a, b) = (block(i), block(j));
        if a != b {
            base.color(a, b)
        } else {
            match inner {
                Inner::Coloring(c) => c.color(offset(i), offset(j)),
                Inner::Constant(color) => color,
            }
        }
    })
}

/// Monochromatic copy of `K_k` in any color, if one exists.
fn mono_clique(c: &EdgeColoring, k: usize) -> Result<Option<(u8, Vec<usize>)>> {
    if k > c.n() {
        return Ok(None);
    }
    let kk = complete(k);
    for color in 0..c.q() {
        if let Some(e) = find_monochromatic_copy(c, color, &kk)? {
            return Ok(Some((color, e.image)));
        }
    }
    Ok(None)
}

/// Iterated self-blow-up: `G_0` is a single vertex and `G_i` is `s` copies of
/// `G_{i-1}` joined by the colors of `base`.
///
/// `base` must have no monochromatic `K_k` with `k = clique_order`; this is
/// checked rather than assumed.
pub fn recursive_matching_lb(base: &EdgeColoring, depth: u32, clique_order: usize) -> Result<EdgeColoring> {
    if let Some((color, clique)) = mono_clique(base, clique_order)? {
        return Err(Error::Precondition(format!(
            "base has a monochromatic K_{clique_order} in color {color} at {clique:?}"
        )));
    }
    let total = (base.n() as u128).checked_pow(depth).unwrap_or(u128::MAX);
    check_size("recursive blow-up vertices", total.min(usize::MAX as u128) as usize)?;
    let mut g = EdgeColoring::constant(1, base.q(), 0);
    for _ in 0..depth {
        g = blowup_coloring(base, g.n(), Inner::Coloring(&g))?;
    }
    Ok(g)
}

/// Random blow-up: colors `χ(i, j)` for `1 <= i <= j <= t` (loops included)
/// are fair coins; pairs between blocks `a < b` get `χ(a, b)` and pairs
/// inside block `a` get `χ(a, a)`.
///
/// Returns the coloring and whether neither color contains an ordered copy of `m`.
pub fn random_blowup_lb(m: &OrderedGraph, s: usize, t: usize, seed: u64) -> Result<(EdgeColoring, bool)> {
    if !m.is_matching() {
        return Err(Error::Invalid("target must be a matching".into()));
    }
    if s == 0 || t == 0 {
        return Err(Error::Invalid("s and t must be positive".into()));
    }
    let n = s.checked_mul(t).unwrap_or(usize::MAX);
    check_size("random blow-up vertices", n)?;
    let mut rng = seeded_rng(seed);
    let mut chi = vec![vec![0u8; t + 1]; t + 1];
    for i in 1..=t {
        for j in i..=t {
            let c = rng.gen_range(0..2u8);
            chi[i][j] = c;
            chi[j][i] = c;
        }
    }
    let block = |v: usize| (v - 1) / s + 1;
    let psi = EdgeColoring::from_fn(n, 2, |i, j| chi[block(i)][block(j)])?;
    let mut verified = true;
    for color in 0..2 {
        if find_monochromatic_copy(&psi, color, m)?.is_some() {
            verified = false;
            break;
        }
    }
    Ok((psi, verified))
}

/// Position (1-indexed) of every vertex of `g` in the spread ordering.
///
/// With `s = floor(n / t)`, vertex `i` of `h` sits at `1 + (i - 1) s`; the
/// other vertices fill the free positions, lowest label first.
pub fn spread_positions(n: usize, t: usize, h_embedding: &[usize]) -> Result<Vec<usize>> {
    if t == 0 || t > n || h_embedding.len() != t {
        return Err(Error::Invalid(format!(
            "need 1 <= t <= n with one image per h vertex (n={n}, t={t}, images={})",
            h_embedding.len()
        )));
    }
    let s = n / t;
    let mut pos = vec![0usize; n + 1];
    let mut taken = vec![false; n + 1];
    for (i, &v) in h_embedding.iter().enumerate() {
        if v == 0 || v > n || pos[v] != 0 {
            return Err(Error::Invalid(format!("embedding image {v} is out of range or repeated")));
        }
        pos[v] = 1 + i * s;
        taken[pos[v]] = true;
    }
    let mut free = (1..=n).filter(|&p| !taken[p]);
    for v in 1..=n {
        if pos[v] == 0 {
            pos[v] = free.next().expect("as many free slots as unplaced vertices");
        }
    }
    Ok(pos[1..].to_vec())
}

/// Orders the unordered graph `g` (vertices `1..=n`) so that `h`, embedded
/// via `h_embedding`, is spread out with gaps `floor(n / t)`.
pub fn spread_ordering(
    n: usize,
    g_edges: &[(usize, usize)],
    h: &OrderedGraph,
    h_embedding: &[usize],
) -> Result<OrderedGraph> {
    let g = OrderedGraph::from_unordered(n, g_edges.iter().copied())?;
    let pos = spread_positions(n, h.n(), h_embedding)?;
    for &(i, j) in h.edges() {
        if !g.has_edge(h_embedding[i - 1], h_embedding[j - 1]) {
            return Err(Error::Invalid(format!(
                "h edge ({i},{j}) maps to non-edge {{{}, {}}}",
                h_embedding[i - 1],
                h_embedding[j - 1]
            )));
        }
    }
    let out = OrderedGraph::from_unordered(n, g.edges().iter().map(|&(a, b)| (pos[a - 1], pos[b - 1])))?;
    debug_assert!((1..=h.n()).all(|i| (i + 1..=h.n()).all(|j| {
        let s = n / h.n();
        !h.has_edge(i, j) || out.has_edge(1 + (i - 1) * s, 1 + (j - 1) * s)
    })));
    Ok(out)
}

/// Blow-up of a coloring avoiding monochromatic `h` by blocks of size `s`,
/// color 0 inside blocks.
pub fn product_lb_coloring(avoiding: &EdgeColoring, h: &OrderedGraph, s: usize) -> Result<EdgeColoring> {
    for color in 0..avoiding.q() {
        if let Some(e) = find_monochromatic_copy(avoiding, color, h)? {
            return Err(Error::Precondition(format!(
                "input coloring has a copy of h in color {color} at {:?}",
                e.image
            )));
        }
    }
    blowup_coloring(avoiding, s, Inner::Constant(0))
}

/// Blow-up of a two-coloring with all edges inside blocks red.
pub fn offdiagonal_assembly(c1: &EdgeColoring, block: usize) -> Result<EdgeColoring> {
    if c1.q() != 2 {
        return Err(Error::Invalid("off-diagonal assembly needs a two-coloring".into()));
    }
    blowup_coloring(c1, block, Inner::Constant(RED))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{jumbled_matching, monotone_path};
    use crate::stats::longest_monotone_path;
    use crate::BLUE;

    fn c5() -> EdgeColoring {
        EdgeColoring::from_fn(5, 2, |i, j| if j - i == 1 || (i, j) == (1, 5) { RED } else { BLUE }).unwrap()
    }

    #[test]
    fn es_examples() {
        let c = es_path_coloring(3, 2).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(longest_monotone_path(&c, 0).unwrap(), 2);
        assert_eq!(longest_monotone_path(&c, 1).unwrap(), 2);
        assert_eq!(es_path_coloring(2, 2).unwrap().n(), 1);
        let c = es_path_coloring(4, 2).unwrap();
        assert_eq!(c.n(), 9);
        for color in 0..2 {
            assert!(find_monochromatic_copy(&c, color, &monotone_path(4)).unwrap().is_none());
        }
        assert!(es_path_coloring(1, 2).is_err());
    }

    #[test]
    fn blowup_examples() {
        let base = EdgeColoring::constant(2, 2, RED);
        let b = blowup_coloring(&base, 2, Inner::Constant(BLUE)).unwrap();
        assert_eq!(b.colors(), &[BLUE, RED, RED, RED, RED, BLUE]);

        let es = es_path_coloring(3, 2).unwrap();
        let b = blowup_coloring(&es, 3, Inner::Constant(RED)).unwrap();
        assert_eq!(b.n(), 12);
        assert!(find_monochromatic_copy(&b, BLUE, &monotone_path(3)).unwrap().is_none());
        let reps: Vec<usize> = (0..4).map(|k| 1 + 3 * k).collect();
        assert_eq!(b.restrict(&reps), es);

        let wrong = EdgeColoring::constant(3, 2, RED);
        assert!(blowup_coloring(&base, 2, Inner::Coloring(&wrong)).is_err());
    }

    #[test]
    fn recursive_examples() {
        let base = c5();
        assert_eq!(recursive_matching_lb(&base, 1, 3).unwrap(), base);
        let g2 = recursive_matching_lb(&base, 2, 3).unwrap();
        assert_eq!(g2.n(), 25);
        assert_eq!(g2, blowup_coloring(&base, 5, Inner::Coloring(&base)).unwrap());
        // No mono triangle with its vertices in three blocks, or inside one block.
        let block = |v: usize| (v - 1) / 5;
        for a in 1..=25 {
            for b in a + 1..=25 {
                for c in b + 1..=25 {
                    let col = g2.color(a, b);
                    if col != g2.color(a, c) || col != g2.color(b, c) {
                        continue;
                    }
                    let (x, y, z) = (block(a), block(b), block(c));
                    assert!(!(x != y && y != z && x != z), "cross-block triangle {a},{b},{c}");
                    assert!(!(x == y && y == z), "in-block triangle {a},{b},{c}");
                }
            }
        }
        // The base itself already has the crossing blue pair {1,3},{2,4}.
        let jm = jumbled_matching(2).unwrap();
        assert!(find_monochromatic_copy(&g2, BLUE, &jm).unwrap().is_some());
        assert!(recursive_matching_lb(&EdgeColoring::constant(3, 2, RED), 2, 3).is_err());
    }

    #[test]
    fn random_blowup() {
        let m = OrderedGraph::new(4, [(1, 3), (2, 4)]).unwrap();
        let (c, ok) = random_blowup_lb(&m, 3, 1, 1).unwrap();
        assert!(ok);
        assert_eq!(c.n(), 3);
        let a = random_blowup_lb(&m, 2, 4, 9).unwrap();
        assert_eq!(a, random_blowup_lb(&m, 2, 4, 9).unwrap());
        assert!(random_blowup_lb(&complete(3), 2, 2, 0).is_err());
    }

    #[test]
    fn spread_examples() {
        let p = monotone_path(4);
        let same = spread_ordering(4, p.edges(), &p, &[1, 2, 3, 4]).unwrap();
        assert_eq!(same, p);
        let e = OrderedGraph::new(2, [(1, 2)]).unwrap();
        let g = [(2, 5), (1, 2), (3, 6)];
        let out = spread_ordering(6, &g, &e, &[2, 5]).unwrap();
        assert_eq!(spread_positions(6, 2, &[2, 5]).unwrap()[1], 1);
        assert_eq!(spread_positions(6, 2, &[2, 5]).unwrap()[4], 4);
        assert!(out.has_edge(1, 4));
        assert!(spread_ordering(6, &g, &e, &[1, 3]).is_err());
    }

    #[test]
    fn product_and_assembly() {
        let es = es_path_coloring(3, 2).unwrap();
        let p3 = monotone_path(3);
        assert_eq!(product_lb_coloring(&es, &p3, 1).unwrap(), es);
        let c = product_lb_coloring(&es, &p3, 2).unwrap();
        assert_eq!(c.n(), 8);
        // P_3 spread to positions 1, 3, 5 of a 6-vertex ordering.
        let spread = OrderedGraph::new(6, [(1, 3), (3, 5)]).unwrap();
        for color in 0..2 {
            assert!(find_monochromatic_copy(&c, color, &spread).unwrap().is_none());
        }
        assert!(product_lb_coloring(&EdgeColoring::constant(3, 2, RED), &p3, 2).is_err());

        let all_red = offdiagonal_assembly(&EdgeColoring::constant(3, 2, RED), 2).unwrap();
        assert_eq!(all_red, EdgeColoring::constant(6, 2, RED));
    }
}
