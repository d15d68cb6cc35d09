//! Moser–Tardos resampling for two-colorings with no blue triangle, no red
//! copy of a given family and no red clique of a given order.
//!
//! Family members are fixed labeled graphs: member `F` on `[m']`, `m' <= m`,
//! is violated when every edge of `F` is red at its own labels. Events are
//! checked in a fixed order (blue triangles lexicographically, then family
//! members, then the first red `K_k` found by clique search) and the lowest
//! violated one has exactly its edges redrawn.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::containment::find_monochromatic_copy;
use crate::error::{Error, Result};
use crate::generators::{complete, seeded_rng};
use crate::graph::OrderedGraph;
use crate::{BLUE, RED};

pub const DEFAULT_RESAMPLE_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadEventFamily {
    pub m: usize,
    pub blue_triangle: bool,
    pub red_family: Vec<OrderedGraph>,
    pub red_clique_order: usize,
    /// Probability of blue as `(numerator, denominator)`.
    pub p_blue: (u64, u64),
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub blue_triangle: u64,
    pub red_family: u64,
    pub red_clique: u64,
}

impl ClassCounts {
    pub fn total(&self) -> u64 {
        self.blue_triangle + self.red_family + self.red_clique
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LllOutcome {
    pub coloring: EdgeColoring,
    pub resamples: u64,
    pub per_class: ClassCounts,
}

impl BadEventFamily {
    fn check(&self) -> Result<()> {
        let (num, den) = self.p_blue;
        if den == 0 || num > den {
            return Err(Error::Invalid(format!("p_blue = {num}/{den} is not a probability")));
        }
        if self.red_clique_order < 2 {
            return Err(Error::Invalid("red clique order must be at least 2".into()));
        }
        if let Some(f) = self.red_family.iter().find(|f| f.n() > self.m) {
            return Err(Error::Invalid(format!("family member on {} vertices exceeds m = {}", f.n(), self.m)));
        }
        if self.red_clique_order <= self.m && self.red_clique_order > crate::containment::DEFAULT_PATTERN_CAP {
            return Err(Error::LimitExceeded {
                what: "red clique order",
                value: self.red_clique_order,
                limit: crate::containment::DEFAULT_PATTERN_CAP,
            });
        }
        Ok(())
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> u8 {
        let (num, den) = self.p_blue;
        if rng.gen_range(0..den) < num {
            BLUE
        } else {
            RED
        }
    }

    /// Edges of the lowest violated event, and its class.
    fn violated(&self, c: &EdgeColoring, clique: &OrderedGraph) -> Result<Option<(usize, Vec<(usize, usize)>)>> {
        let m = self.m;
        if self.blue_triangle {
            for a in 1..=m {
                for b in a + 1..=m {
                    if c.color(a, b) != BLUE {
                        continue;
                    }
                    for d in b + 1..=m {
                        if c.color(a, d) == BLUE && c.color(b, d) == BLUE {
                            return Ok(Some((0, vec![(a, b), (a, d), (b, d)])));
                        }
                    }
                }
            }
        }
        for f in &self.red_family {
            if f.edge_count() > 0 && f.edges().iter().all(|&(i, j)| c.color(i, j) == RED) {
                return Ok(Some((1, f.edges().to_vec())));
            }
        }
        if self.red_clique_order <= m {
            if let Some(e) = find_monochromatic_copy(c, RED, clique)? {
                let v = &e.image;
                let edges = (0..v.len())
                    .flat_map(|i| (i + 1..v.len()).map(move |j| (v[i], v[j])))
                    .collect();
                return Ok(Some((2, edges)));
            }
        }
        Ok(None)
    }
}

pub fn moser_tardos_coloring(spec: &BadEventFamily) -> Result<LllOutcome> {
    moser_tardos_coloring_capped(spec, DEFAULT_RESAMPLE_CAP)
}

pub fn moser_tardos_coloring_capped(spec: &BadEventFamily, max_resamples: u64) -> Result<LllOutcome> {
    spec.check()?;
    let m = spec.m;
    let mut rng = seeded_rng(spec.seed);
    let mut c = EdgeColoring::constant(m, 2, RED);
    for i in 1..=m {
        for j in i + 1..=m {
            c.set(i, j, spec.draw(&mut rng));
        }
    }
    let clique = complete(spec.red_clique_order.min(m.max(1)));
    let mut counts = ClassCounts::default();
    while let Some((class, edges)) = spec.violated(&c, &clique)? {
        if counts.total() >= max_resamples {
            return Err(Error::NoConvergence(format!(
                "{max_resamples} resamples without success (blue triangle {}, red family {}, red clique {})",
                counts.blue_triangle, counts.red_family, counts.red_clique
            )));
        }
        match class {
            0 => counts.blue_triangle += 1,
            1 => counts.red_family += 1,
            _ => counts.red_clique += 1,
        }
        for (i, j) in edges {
            c.set(i, j, spec.draw(&mut rng));
        }
    }
    verify_lll(spec, &c)?;
    Ok(LllOutcome { coloring: c, resamples: counts.total(), per_class: counts })
}

/// The three scans, independent of the resampling loop.
pub fn verify_lll(spec: &BadEventFamily, c: &EdgeColoring) -> Result<()> {
    if c.n() != spec.m || c.q() != 2 {
        return Err(Error::Invalid("coloring does not match the event family".into()));
    }
    if spec.blue_triangle {
        if let Some(e) = find_monochromatic_copy(c, BLUE, &complete(3))? {
            return Err(Error::Invalid(format!("blue triangle at {:?}", e.image)));
        }
    }
    for (k, f) in spec.red_family.iter().enumerate() {
        if f.edge_count() > 0 && f.edges().iter().all(|&(i, j)| c.color(i, j) == RED) {
            return Err(Error::Invalid(format!("family member {} is entirely red", k + 1)));
        }
    }
    if spec.red_clique_order <= spec.m {
        if let Some(e) = find_monochromatic_copy(c, RED, &complete(spec.red_clique_order))? {
            return Err(Error::Invalid(format!("red K_{} at {:?}", spec.red_clique_order, e.image)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: usize, k: usize, p: (u64, u64), seed: u64) -> BadEventFamily {
        BadEventFamily {
            m,
            blue_triangle: true,
            red_family: vec![OrderedGraph::new(4, [(1, 3), (2, 4)]).unwrap()],
            red_clique_order: k,
            p_blue: p,
            seed,
        }
    }

    #[test]
    fn trivial_all_red() {
        let s = BadEventFamily {
            m: 5,
            blue_triangle: true,
            red_family: vec![],
            red_clique_order: 6,
            p_blue: (0, 1),
            seed: 0,
        };
        let out = moser_tardos_coloring(&s).unwrap();
        assert_eq!(out.resamples, 0);
        assert_eq!(out.coloring, EdgeColoring::constant(5, 2, RED));
    }

    #[test]
    fn crossing_matching_example() {
        let s = spec(12, 6, (1, 4), 3);
        let out = moser_tardos_coloring(&s).unwrap();
        verify_lll(&s, &out.coloring).unwrap();
        assert_eq!(out, moser_tardos_coloring(&s).unwrap());
        assert_eq!(out.resamples, out.per_class.total());
    }

    #[test]
    fn all_blue_never_converges() {
        let s = spec(4, 6, (1, 1), 0);
        match moser_tardos_coloring_capped(&s, 1000) {
            Err(Error::NoConvergence(msg)) => assert!(msg.contains("blue triangle 1000"), "{msg}"),
            other => panic!("expected no convergence, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(moser_tardos_coloring(&spec(12, 1, (1, 4), 0)).is_err());
        assert!(moser_tardos_coloring(&spec(12, 6, (5, 4), 0)).is_err());
        assert!(moser_tardos_coloring(&spec(3, 6, (1, 4), 0)).is_err());
    }
}
