//! Triple colorings: cap/cup colorings of point sets, monochromatic tight
//! paths, the Erdős–Rado extraction and a small exact Ramsey search.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::generators::TripleSystem;
use crate::rational;
use crate::{BLUE, RED};

/// Colors of all triples of `{1..n}`, stored in lexicographic triple order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleColoring {
    n: usize,
    q: u8,
    colors: Vec<u8>,
    /// `offset[i * (n + 1) + j]` is the rank of `(i, j, j + 1)`.
    offset: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleColoringFile {
    #[serde(rename = "N")]
    pub n: usize,
    pub q: u8,
    pub colors: Vec<u8>,
}

pub fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

fn offsets(n: usize) -> Vec<usize> {
    let mut off = vec![0; (n + 1) * (n + 1)];
    let mut r = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            off[i * (n + 1) + j] = r;
            r += n - j;
        }
    }
    off
}

impl TripleColoring {
    pub fn new(n: usize, q: u8, colors: Vec<u8>) -> Result<Self> {
        if q < 2 {
            return Err(Error::Invalid(format!("need at least two colors, got {q}")));
        }
        if colors.len() != triple_count(n) {
            return Err(Error::Invalid(format!(
                "{} colors given, {} triples on {n} vertices",
                colors.len(),
                triple_count(n)
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= q) {
            return Err(Error::InvalidColor { color: c as usize, q: q as usize });
        }
        Ok(TripleColoring { n, q, colors, offset: offsets(n) })
    }

    pub fn constant(n: usize, q: u8, color: u8) -> Self {
        TripleColoring::new(n, q, vec![color; triple_count(n)]).expect("valid constant coloring")
    }

    pub fn from_fn(n: usize, q: u8, mut f: impl FnMut(usize, usize, usize) -> u8) -> Result<Self> {
        let mut colors = Vec::with_capacity(triple_count(n));
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    colors.push(f(i, j, k));
                }
            }
        }
        TripleColoring::new(n, q, colors)
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

    /// Rank of the triple in lexicographic order; arguments in any order.
    pub fn index(&self, a: usize, b: usize, c: usize) -> usize {
        let mut t = [a, b, c];
        t.sort_unstable();
        assert!(t[0] >= 1 && t[0] < t[1] && t[1] < t[2] && t[2] <= self.n, "bad triple {t:?}");
        self.offset[t[0] * (self.n + 1) + t[1]] + (t[2] - t[1] - 1)
    }

    pub fn color(&self, a: usize, b: usize, c: usize) -> u8 {
        self.colors[self.index(a, b, c)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, color: u8) {
        assert!(color < self.q);
        let i = self.index(a, b, c);
        self.colors[i] = color;
    }

    pub fn to_file(&self) -> TripleColoringFile {
        TripleColoringFile { n: self.n, q: self.q, colors: self.colors.clone() }
    }

    pub fn from_file(f: TripleColoringFile) -> Result<Self> {
        TripleColoring::new(f.n, f.q, f.colors)
    }
}

impl Serialize for TripleColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TripleColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        TripleColoring::from_file(TripleColoringFile::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "rational::serde_str")]
    pub x: BigRational,
    #[serde(with = "rational::serde_str")]
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point { x: rational::ratio(x, 1), y: rational::ratio(y, 1) }
    }
}

/// Parses lines `x,y` with rational coordinates; blank lines and `#`
/// comments are skipped.
pub fn parse_points_csv(text: &str) -> Result<Vec<Point>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (x, y) = l
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected `x,y`, got {l:?}")))?;
            Ok(Point::new(rational::parse(x)?, rational::parse(y)?))
        })
        .collect()
}

/// Red for cups (counter-clockwise, convex from below), blue for caps.
pub fn capcup_coloring(points: &[Point]) -> Result<TripleColoring> {
    for (k, w) in points.windows(2).enumerate() {
        if w[0].x >= w[1].x {
            return Err(Error::Invalid(format!(
                "x-coordinates must increase strictly (points {} and {})",
                k + 1,
                k + 2
            )));
        }
    }
    let n = points.len();
    let mut colors = Vec::with_capacity(triple_count(n));
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (&points[i], &points[j], &points[k]);
                let cross = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
                if cross.is_zero() {
                    return Err(Error::Invalid(format!("points {}, {}, {} are collinear", i + 1, j + 1, k + 1)));
                }
                colors.push(if cross.is_positive() { RED } else { BLUE });
            }
        }
    }
    TripleColoring::new(n, 2, colors)
}

/// Monochromatic tight path on `len` vertices: a color and the increasing
/// vertex sequence. Dynamic program over the last two vertices.
pub fn find_monochromatic_tight_path(c: &TripleColoring, len: usize) -> Option<(u8, Embedding)> {
    let n = c.n();
    if len > n {
        return None;
    }
    if len < 3 {
        return Some((0, Embedding::new((1..=len).collect())));
    }
    for color in 0..c.q() {
        // best[a][b]: vertices on the longest path ending in a < b.
        let mut best = vec![vec![2usize; n + 1]; n + 1];
        let mut prev = vec![vec![0usize; n + 1]; n + 1];
        for b in 1..=n {
            for a in 1..b {
                for x in 1..a {
                    if c.color(x, a, b) == color && best[x][a] + 1 > best[a][b] {
                        best[a][b] = best[x][a] + 1;
                        prev[a][b] = x;
                    }
                }
                if best[a][b] >= len {
                    let mut path = vec![b, a];
                    let (mut u, mut v) = (a, b);
                    while path.len() < len {
                        let x = prev[u][v];
                        path.push(x);
                        v = u;
                        u = x;
                    }
                    path.reverse();
                    return Some((color, Embedding::new(path)));
                }
            }
        }
    }
    None
}

/// Result of the Erdős–Rado extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErdosRado {
    /// `v_1 < ... < v_{t+1}`.
    pub vertices: Vec<usize>,
    /// `χ(i, j)` on `[t]`.
    pub chi: EdgeColoring,
    /// `|V_ℓ|` for `ℓ = 1..t`.
    pub sizes: Vec<usize>,
}

/// Vertices `v_1 < ... < v_{t+1}` and a pair coloring `χ` on `[t]` such that
/// every triple `{v_i, v_j, w}` with `w` a later sequence vertex has color
/// `χ(i, j)`. Needs `N >= 2^C(t,2) + 1`. Majority halving, ties to red.
pub fn erdos_rado_step(c: &TripleColoring, t: usize) -> Result<ErdosRado> {
    if c.q() != 2 {
        return Err(Error::Invalid("the extraction needs a two-coloring".into()));
    }
    if t == 0 {
        return Err(Error::Invalid("t must be positive".into()));
    }
    let exp = t * (t - 1) / 2;
    if exp >= 63 || c.n() < (1usize << exp) + 1 {
        return Err(Error::Precondition(format!("need N >= 2^{exp} + 1 vertices, have {}", c.n())));
    }
    let mut v = vec![1usize];
    let mut rest: Vec<usize> = (2..=c.n()).collect();
    let mut chi = EdgeColoring::constant(t, 2, RED);
    let mut sizes = vec![rest.len()];
    for l in 1..t {
        let next = rest[0];
        v.push(next);
        let mut cur: Vec<usize> = rest[1..].to_vec();
        for j in 1..=l {
            let (red, blue): (Vec<usize>, Vec<usize>) =
                cur.iter().partition(|&&w| c.color(v[j - 1], next, w) == RED);
            if 2 * red.len() >= cur.len() {
                cur = red;
                chi.set(j, l + 1, RED);
            } else {
                cur = blue;
                chi.set(j, l + 1, BLUE);
            }
        }
        rest = cur;
        let floor = 1usize << (exp - (l + 1) * l / 2);
        assert!(rest.len() >= floor, "size ledger broken: |V_{}| = {} < {floor}", l + 1, rest.len());
        sizes.push(rest.len());
    }
    v.push(rest[0]);
    Ok(ErdosRado { vertices: v, chi, sizes })
}

/// Checks the extraction property exhaustively; returns the first violation.
pub fn check_erdos_rado(c: &TripleColoring, out: &ErdosRado) -> Result<()> {
    let v = &out.vertices;
    let t = out.chi.n();
    if v.len() != t + 1 || v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Invalid("vertex sequence has the wrong shape".into()));
    }
    for i in 1..=t {
        for j in i + 1..=t {
            for k in j + 1..=t + 1 {
                if c.color(v[i - 1], v[j - 1], v[k - 1]) != out.chi.color(i, j) {
                    return Err(Error::Invalid(format!("triple of positions ({i},{j},{k}) breaks χ({i},{j})")));
                }
            }
        }
    }
    Ok(())
}

pub const DEFAULT_RAMSEY3_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ramsey3 {
    /// Every coloring contains a monochromatic target.
    Unavoidable,
    Avoidable(TripleColoring),
}

/// Ordered copy of `pattern` (increasing injection) with all triples in `color`.
pub fn find_monochromatic_triple_copy(c: &TripleColoring, color: u8, pattern: &TripleSystem) -> Option<Embedding> {
    let mut image = Vec::with_capacity(pattern.n());
    let ok = |image: &[usize]| {
        pattern.triples().iter().all(|t| {
            t[2] > image.len() || c.color(image[t[0] - 1], image[t[1] - 1], image[t[2] - 1]) == color
        })
    };
    fn rec(
        image: &mut Vec<usize>,
        p: usize,
        n: usize,
        ok: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if image.len() == p {
            return true;
        }
        let lo = image.last().map_or(1, |&x| x + 1);
        let hi = n + image.len() + 1 - p;
        for v in lo..=hi {
            image.push(v);
            if ok(image) && rec(image, p, n, ok) {
                return true;
            }
            image.pop();
        }
        false
    }
    if pattern.n() > c.n() {
        return None;
    }
    rec(&mut image, pattern.n(), c.n(), &ok).then(|| Embedding::new(image))
}

pub fn ramsey3_decide(targets: &[TripleSystem], n: usize) -> Result<Ramsey3> {
    ramsey3_decide_capped(targets, n, DEFAULT_RAMSEY3_CAP)
}

/// Exact decision: is every coloring of the triples of `[n]` forced to
/// contain `targets[k]` in color `k` for some `k`?
///
/// Triples are assigned in colex order (by largest vertex, then
/// lexicographically), so a new triple closes every copy whose largest
/// assigned triple it is; each assignment checks only copies through it.
pub fn ramsey3_decide_capped(targets: &[TripleSystem], n: usize, cap: usize) -> Result<Ramsey3> {
    let q = targets.len();
    if !(2..=255).contains(&q) {
        return Err(Error::Invalid("need between 2 and 255 targets".into()));
    }
    if n > cap {
        return Err(Error::LimitExceeded { what: "3-uniform search vertices", value: n, limit: cap });
    }
    if targets.iter().any(|t| t.is_empty() && t.n() <= n) {
        return Ok(Ramsey3::Unavoidable);
    }
    let mut order = Vec::new();
    for k in 3..=n {
        for i in 1..k {
            for j in i + 1..k {
                order.push([i, j, k]);
            }
        }
    }
    let diagonal = targets.windows(2).all(|w| w[0] == w[1]);
    let mut search = Search3 {
        n,
        targets,
        state: vec![u8::MAX; triple_count(n)],
        offset: offsets(n),
        order,
    };
    match search.run(0, diagonal) {
        Some(colors) => {
            let c = TripleColoring::new(n, q as u8, colors)?;
            for (k, t) in targets.iter().enumerate() {
                if let Some(e) = find_monochromatic_triple_copy(&c, k as u8, t) {
                    return Err(Error::Invalid(format!("search returned a coloring with a copy at {:?}", e.image)));
                }
            }
            Ok(Ramsey3::Avoidable(c))
        }
        None => Ok(Ramsey3::Unavoidable),
    }
}

struct Search3<'a> {
    n: usize,
    targets: &'a [TripleSystem],
    state: Vec<u8>,
    offset: Vec<usize>,
    order: Vec<[usize; 3]>,
}

impl Search3<'_> {
    fn rank(&self, t: [usize; 3]) -> usize {
        let mut t = t;
        t.sort_unstable();
        self.offset[t[0] * (self.n + 1) + t[1]] + (t[2] - t[1] - 1)
    }

    fn run(&mut self, pos: usize, fix_first: bool) -> Option<Vec<u8>> {
        if pos == self.order.len() {
            return Some(self.state.clone());
        }
        let t = self.order[pos];
        let r = self.rank(t);
        let colors = if fix_first && pos == 0 { 1 } else { self.targets.len() };
        for color in 0..colors as u8 {
            self.state[r] = color;
            if !self.closes_copy(t, color) {
                if let Some(found) = self.run(pos + 1, fix_first) {
                    return Some(found);
                }
            }
        }
        self.state[r] = u8::MAX;
        None
    }

    /// Does the assigned triple `t` complete a copy of the target for `color`?
    fn closes_copy(&self, t: [usize; 3], color: u8) -> bool {
        let pattern = &self.targets[color as usize];
        let p = pattern.n();
        if p > self.n {
            return false;
        }
        pattern.triples().iter().any(|pt| {
            let mut image = vec![0usize; p];
            image[pt[0] - 1] = t[0];
            image[pt[1] - 1] = t[1];
            image[pt[2] - 1] = t[2];
            self.fill(pattern, color, &mut image, 0)
        })
    }

    fn fill(&self, pattern: &TripleSystem, color: u8, image: &mut [usize], v: usize) -> bool {
        let p = image.len();
        if v == p {
            return pattern.triples().iter().all(|pt| {
                let r = self.rank([image[pt[0] - 1], image[pt[1] - 1], image[pt[2] - 1]]);
                self.state[r] == color
            });
        }
        if image[v] != 0 {
            let lo_ok = v == 0 || image[v - 1] < image[v];
            return lo_ok && self.fill(pattern, color, image, v + 1);
        }
        let lo = if v == 0 { 1 } else { image[v - 1] + 1 };
        // The next fixed vertex bounds this one from above.
        let (next_fixed, gap) = match (v + 1..p).find(|&u| image[u] != 0) {
            Some(u) => (image[u], u - v),
            None => (self.n + 1, p - v),
        };
        if next_fixed < gap {
            return false;
        }
        for x in lo..=next_fixed - gap {
            image[v] = x;
            if self.fill(pattern, color, image, v + 1) {
                image[v] = 0;
                return true;
            }
        }
        image[v] = 0;
        false
    }
}
