//! Exact ordered Ramsey computations with certificates.
//!
//! [`decide`] colors the edges of `[N]` one at a time and backtracks as soon
//! as some color class completes its target. Avoidable verdicts carry a
//! witness coloring; unavoidable verdicts are records of a closed search.
//! [`brute_force_oracle`] enumerates colorings outright and is kept separate
//! from the search for cross-checking; [`sat_export`] writes DIMACS for
//! external solvers.

mod oracle;
mod sat;
mod search;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coloring::{pair_count, pair_index, EdgeColoring};
use crate::containment::find_monochromatic_copy;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

pub use oracle::{brute_force_oracle, ORACLE_LIMIT};
pub use sat::{import_assignment, sat_cnf, sat_export, Cnf};

use search::{edge_order, Searcher, Target};

pub const DEFAULT_CAP_EDGES: usize = 200;
pub const THREADS_ENV: &str = "ORDRAMSEY_THREADS";

/// Targets per color and a host size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyQuery {
    pub targets: Vec<OrderedGraph>,
    #[serde(rename = "N")]
    pub n: usize,
}

impl RamseyQuery {
    pub fn new(targets: Vec<OrderedGraph>, n: usize) -> Result<Self> {
        let q = RamseyQuery { targets, n };
        q.check()?;
        Ok(q)
    }

    pub fn diagonal(target: OrderedGraph, q: usize, n: usize) -> Result<Self> {
        RamseyQuery::new(vec![target; q], n)
    }

    pub fn q(&self) -> u8 {
        self.targets.len() as u8
    }

    fn check(&self) -> Result<()> {
        if !(2..=255).contains(&self.targets.len()) {
            return Err(Error::Invalid(format!("need 2 to 255 targets, got {}", self.targets.len())));
        }
        if let Some(t) = self.targets.iter().find(|t| t.n() > crate::containment::DEFAULT_PATTERN_CAP) {
            return Err(Error::LimitExceeded {
                what: "target size",
                value: t.n(),
                limit: crate::containment::DEFAULT_PATTERN_CAP,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Avoidable,
    Unavoidable,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub query: RamseyQuery,
    pub verdict: Verdict,
    pub witness: Option<EdgeColoring>,
    pub stats: SearchStats,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// `(1,2), (1,3), ..., (1,N), (2,3), ...`
    Lexicographic,
    /// All edges into vertex `j` before any edge into `j + 1`.
    #[default]
    VertexIncremental,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CheckMode {
    /// Only look for copies through the edge just colored.
    #[default]
    Incremental,
    /// Search the whole color class after every assignment.
    FullRescan,
}

#[derive(Clone, Debug)]
pub struct DecideOptions {
    pub threads: usize,
    pub cap_edges: usize,
    pub order: EdgeOrder,
    pub check: CheckMode,
    /// Edges fixed before the tree is split between workers.
    pub split_depth: usize,
    /// Force edges whose other colors would complete a target.
    pub propagate: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            threads: default_threads(),
            cap_edges: DEFAULT_CAP_EDGES,
            order: EdgeOrder::default(),
            check: CheckMode::default(),
            split_depth: 12,
            propagate: true,
        }
    }
}

impl DecideOptions {
    pub fn sequential() -> Self {
        DecideOptions { threads: 1, ..DecideOptions::default() }
    }
}

/// Worker count from `ORDRAMSEY_THREADS`, else the available parallelism.
pub fn default_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&t: &usize| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn decide(query: &RamseyQuery) -> Result<Certificate> {
    decide_with(query, &DecideOptions::default())
}

pub fn decide_with(query: &RamseyQuery, opts: &DecideOptions) -> Result<Certificate> {
    query.check()?;
    let n = query.n;
    let edges = pair_count(n);
    if edges > opts.cap_edges || n >= 63 {
        return Err(Error::LimitExceeded {
            what: "edge variables for the built-in search (use sat export for larger N)",
            value: edges,
            limit: opts.cap_edges,
        });
    }
    let start = Instant::now();
    let q = query.q();
    // An edgeless target that fits is present in every coloring.
    if query.targets.iter().any(|t| t.edge_count() == 0 && t.n() <= n) {
        return Ok(Certificate {
            query: query.clone(),
            verdict: Verdict::Unavoidable,
            witness: None,
            stats: SearchStats { wall_ms: start.elapsed().as_millis() as u64, ..SearchStats::default() },
        });
    }
    let targets: Vec<Target> = query.targets.iter().map(Target::new).collect();
    let order = edge_order(n, opts.order);
    let searcher = Searcher {
        n,
        targets: &targets,
        order: &order,
        mode: opts.check,
        fix_first: query.targets.windows(2).all(|w| w[0] == w[1]),
        propagate: opts.propagate,
    };
    let outcome = if opts.threads <= 1 || order.len() <= opts.split_depth {
        searcher.run_sequential()
    } else {
        searcher.run_parallel(opts.threads, opts.split_depth)
    };
    let witness = match outcome.colors {
        Some(cs) => {
            let mut colors = vec![0u8; edges];
            for (&(i, j), c) in order.iter().zip(cs) {
                colors[pair_index(n, i, j)] = c;
            }
            let w = EdgeColoring::new(n, q, colors)?;
            check_witness(query, &w).map_err(|e| Error::Invalid(format!("search produced a bad witness: {e}")))?;
            Some(w)
        }
        None => None,
    };
    Ok(Certificate {
        query: query.clone(),
        verdict: if witness.is_some() { Verdict::Avoidable } else { Verdict::Unavoidable },
        witness,
        stats: SearchStats {
            nodes: outcome.nodes,
            prunes: outcome.prunes,
            wall_ms: start.elapsed().as_millis() as u64,
        },
    })
}

/// Fails with the first monochromatic target copy in `w`.
fn check_witness(query: &RamseyQuery, w: &EdgeColoring) -> Result<()> {
    if w.n() != query.n {
        return Err(Error::Invalid(format!("witness has N = {}, query has N = {}", w.n(), query.n)));
    }
    if w.q() != query.q() {
        return Err(Error::Invalid(format!("witness uses {} colors, query has {}", w.q(), query.q())));
    }
    for (c, t) in query.targets.iter().enumerate() {
        if let Some(e) = find_monochromatic_copy(w, c as u8, t)? {
            return Err(Error::Invalid(format!("color {c} contains its target at {:?}", e.image)));
        }
    }
    Ok(())
}

/// Smallest unavoidable `N`, or a bracket when the cap stops the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyNumber {
    pub value: Option<usize>,
    /// `r >= lower`: a witness exists at `lower - 1`.
    pub lower: usize,
    /// `r <= upper` when known.
    pub upper: Option<usize>,
    /// The avoidable certificate at `value - 1` (if any) and the unavoidable
    /// one at `value`.
    pub certificates: Vec<Certificate>,
}

pub fn ramsey_number(targets: &[OrderedGraph], start_n: usize) -> Result<RamseyNumber> {
    ramsey_number_with(targets, start_n, &DecideOptions::default())
}

pub fn ramsey_number_with(targets: &[OrderedGraph], start_n: usize, opts: &DecideOptions) -> Result<RamseyNumber> {
    let mut n = start_n.max(1);
    let first = decide_with(&RamseyQuery::new(targets.to_vec(), n)?, opts)?;
    if first.verdict == Verdict::Unavoidable {
        // Walk down to the last avoidable size.
        let mut upper = first;
        while n > 1 {
            let cert = decide_with(&RamseyQuery::new(targets.to_vec(), n - 1)?, opts)?;
            if cert.verdict == Verdict::Avoidable {
                return Ok(RamseyNumber { value: Some(n), lower: n, upper: Some(n), certificates: vec![cert, upper] });
            }
            upper = cert;
            n -= 1;
        }
        return Ok(RamseyNumber { value: Some(1), lower: 1, upper: Some(1), certificates: vec![upper] });
    }
    let mut below = first;
    loop {
        let query = RamseyQuery::new(targets.to_vec(), n + 1)?;
        match decide_with(&query, opts) {
            Ok(cert) if cert.verdict == Verdict::Unavoidable => {
                return Ok(RamseyNumber {
                    value: Some(n + 1),
                    lower: n + 1,
                    upper: Some(n + 1),
                    certificates: vec![below, cert],
                });
            }
            Ok(cert) => {
                below = cert;
                n += 1;
            }
            Err(Error::LimitExceeded { .. }) => {
                return Ok(RamseyNumber { value: None, lower: n + 1, upper: None, certificates: vec![below] });
            }
            Err(e) => return Err(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    /// Re-checked from scratch.
    Valid,
    /// Unavoidable and beyond brute-force range: accepted on the search's word.
    SearchTrusted,
    Invalid(String),
}

pub fn verify_certificate(cert_path: &std::path::Path) -> Result<Verification> {
    let text = std::fs::read_to_string(cert_path)?;
    let cert = Certificate::from_json(&text)?;
    verify_certificate_value(&cert)
}

pub fn verify_certificate_value(cert: &Certificate) -> Result<Verification> {
    let query = &cert.query;
    if let Err(e) = query.check() {
        return Ok(Verification::Invalid(e.to_string()));
    }
    match (cert.verdict, &cert.witness) {
        (Verdict::Avoidable, None) => Ok(Verification::Invalid("avoidable certificate without a witness".into())),
        (Verdict::Unavoidable, Some(_)) => Ok(Verification::Invalid("unavoidable certificate with a witness".into())),
        (Verdict::Avoidable, Some(w)) => Ok(match check_witness(query, w) {
            Ok(()) => Verification::Valid,
            Err(e) => Verification::Invalid(e.to_string()),
        }),
        (Verdict::Unavoidable, None) => match brute_force_oracle(&query.targets, query.n) {
            Ok(true) => Ok(Verification::Valid),
            Ok(false) => Ok(Verification::Invalid("an avoiding coloring exists".into())),
            Err(Error::LimitExceeded { .. }) => Ok(Verification::SearchTrusted),
            Err(e) => Err(e),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, monotone_path};

    fn q(targets: Vec<OrderedGraph>, n: usize) -> RamseyQuery {
        RamseyQuery::new(targets, n).unwrap()
    }

    #[test]
    fn small_verdicts() {
        let k2 = complete(2);
        assert_eq!(decide(&q(vec![k2.clone(), k2], 2)).unwrap().verdict, Verdict::Unavoidable);
        let (p3, k3) = (monotone_path(3), complete(3));
        let c = decide(&q(vec![p3.clone(), k3.clone()], 4)).unwrap();
        assert_eq!(c.verdict, Verdict::Avoidable);
        assert_eq!(verify_certificate_value(&c).unwrap(), Verification::Valid);
        assert_eq!(decide(&q(vec![p3, k3], 5)).unwrap().verdict, Verdict::Unavoidable);
    }

    #[test]
    fn modes_and_threads_agree() {
        let p3 = monotone_path(3);
        for n in 3..=6 {
            let query = q(vec![p3.clone(), complete(3)], n);
            let base = decide_with(&query, &DecideOptions::sequential()).unwrap();
            for order in [EdgeOrder::Lexicographic, EdgeOrder::VertexIncremental] {
                for check in [CheckMode::Incremental, CheckMode::FullRescan] {
                    for (threads, propagate) in [(1, true), (1, false), (3, true), (3, false)] {
                        let opts =
                            DecideOptions { threads, order, check, split_depth: 4, propagate, ..DecideOptions::default() };
                        let c = decide_with(&query, &opts).unwrap();
                        assert_eq!(c.verdict, base.verdict);
                        if order == EdgeOrder::VertexIncremental {
                            assert_eq!(c.witness, base.witness);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn edgeless_and_oversized_targets() {
        let e3 = OrderedGraph::empty(3);
        assert_eq!(decide(&q(vec![e3.clone(), complete(2)], 3)).unwrap().verdict, Verdict::Unavoidable);
        assert_eq!(decide(&q(vec![e3, complete(2)], 2)).unwrap().verdict, Verdict::Avoidable);
        assert_eq!(decide(&q(vec![complete(5), complete(5)], 4)).unwrap().verdict, Verdict::Avoidable);
        assert!(decide(&q(vec![complete(2), complete(2)], 21)).is_err());
    }

    #[test]
    fn small_ramsey_numbers() {
        let r = ramsey_number(&[monotone_path(3), monotone_path(3)], 2).unwrap();
        assert_eq!(r.value, Some(5));
        assert_eq!(r.certificates.len(), 2);
        assert_eq!(r.certificates[0].verdict, Verdict::Avoidable);
        let r = ramsey_number(&[complete(3), complete(3)], 8).unwrap();
        assert_eq!(r.value, Some(6));
        assert_eq!(ramsey_number(&[complete(2), complete(2)], 1).unwrap().value, Some(2));
    }

    #[test]
    fn certificate_checks() {
        let p3 = monotone_path(3);
        let mut c = decide(&q(vec![p3.clone(), p3.clone()], 4)).unwrap();
        let json = c.to_json();
        assert!(json.contains("\"verdict\": \"avoidable\""));
        assert_eq!(Certificate::from_json(&json).unwrap(), c);
        let mut w = c.witness.clone().unwrap();
        w.set(1, 2, 0);
        w.set(2, 3, 0);
        c.witness = Some(w);
        assert!(matches!(verify_certificate_value(&c).unwrap(), Verification::Invalid(_)));
        let mut bad_n = decide(&q(vec![p3.clone(), p3.clone()], 4)).unwrap();
        bad_n.query.n = 3;
        assert!(matches!(verify_certificate_value(&bad_n).unwrap(), Verification::Invalid(_)));
        let un = decide(&q(vec![p3.clone(), p3], 5)).unwrap();
        assert_eq!(verify_certificate_value(&un).unwrap(), Verification::Valid);
    }
}
