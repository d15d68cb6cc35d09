//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Stretch items are reported but never fail the run. Criterion 9 is
//! reported as it comes out; its parameters admit no valid coloring
//! (R(3,6) = 18 <= 20), so it is listed as a known failure and does not fail
//! the run either. Every other failure exits non-zero.

use std::time::{Duration, Instant};

use ordramsey::constructions::{es_path_coloring, offdiagonal_assembly};
use ordramsey::containment::find_monochromatic_copy;
use ordramsey::embedders::{
    bandwidth_embed, greedy_embed_or_sparse, greedy_size_bound, lex_product_embed, match_vs_multipartite, Embedder,
    LexProductEmbedder, MultipartiteEmbedder, PathEmbedder, Witness,
};
use ordramsey::experiments::{mc_discrepancy, mc_jumbled};
use ordramsey::generators::{
    complete, complete_multipartite_trivial, complete_triple_system, is_jumbled, jumbled_matching, monotone_path,
    path_power, random_matching, s_family, seeded_rng, tight_path_3,
};
use ordramsey::hypergraph::{check_erdos_rado, erdos_rado_step, ramsey3_decide, Ramsey3, TripleColoring};
use ordramsey::lll::{moser_tardos_coloring, verify_lll, BadEventFamily};
use ordramsey::rational::{self, density, int, ratio};
use ordramsey::solver::{
    brute_force_oracle, decide_with, import_assignment, ramsey_number, sat_cnf, verify_certificate_value,
    DecideOptions, RamseyQuery, Verdict, Verification,
};
use ordramsey::stats::longest_monotone_path;
use ordramsey::{EdgeColoring, OrderedGraph};
use rand::Rng;

type Check = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    gating: bool,
    run: fn() -> Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// r_< with both certificates checked.
fn checked_r(targets: &[OrderedGraph], expect: usize) -> Result<(), String> {
    let r = ramsey_number(targets, 2).map_err(e2s)?;
    ensure(r.value == Some(expect), || format!("expected {expect}, got {:?}", r.value))?;
    for cert in &r.certificates {
        let v = verify_certificate_value(cert).map_err(e2s)?;
        ensure(matches!(v, Verification::Valid | Verification::SearchTrusted), || {
            format!("certificate at N={} did not verify: {v:?}", cert.query.n)
        })?;
    }
    let avoid = r.certificates.iter().find(|c| c.verdict == Verdict::Avoidable);
    ensure(expect == 1 || avoid.is_some_and(|c| c.query.n == expect - 1), || "no witness at N-1".into())
}

fn c1() -> Check {
    let mut vals = Vec::new();
    for n in 2..=4 {
        let p = monotone_path(n);
        let expect = (n - 1) * (n - 1) + 1;
        checked_r(&[p.clone(), p], expect).map_err(|e| format!("P_{n}: {e}"))?;
        vals.push(format!("r(P_{n})={expect}"));
    }
    Ok(vals.join(", "))
}

fn sat_model(q: &RamseyQuery) -> Result<Option<EdgeColoring>, String> {
    use varisat::{ExtendFormula, Lit, Solver};
    let cnf = sat_cnf(q).map_err(e2s)?;
    let mut s = Solver::new();
    for cl in &cnf.clauses {
        let lits: Vec<Lit> = cl.iter().map(|&l| Lit::from_dimacs(l as isize)).collect();
        s.add_clause(&lits);
    }
    if !s.solve().map_err(e2s)? {
        return Ok(None);
    }
    let text: String = s.model().unwrap().iter().map(|l| format!("{} ", l.to_dimacs())).collect();
    import_assignment(&text, q.n).map(Some).map_err(e2s)
}

fn c1_stretch() -> Check {
    let p = monotone_path(5);
    let q16 = RamseyQuery::new(vec![p.clone(), p.clone()], 16).map_err(e2s)?;
    let w = sat_model(&q16)?.ok_or("N=16 reported unsatisfiable")?;
    for color in 0..2 {
        ensure(find_monochromatic_copy(&w, color, &p).map_err(e2s)?.is_none(), || {
            format!("imported N=16 model has a color-{color} P_5")
        })?;
    }
    let q17 = RamseyQuery::new(vec![p.clone(), p], 17).map_err(e2s)?;
    ensure(sat_model(&q17)?.is_none(), || "N=17 is satisfiable".into())?;
    Ok("r(P_5)=17 via CNF export (N=16 model re-verified, N=17 unsatisfiable)".into())
}

fn c2() -> Check {
    for m in 2..=4 {
        for n in 2..=4 {
            let expect = (m - 1) * (n - 1) + 1;
            checked_r(&[monotone_path(m), complete(n)], expect).map_err(|e| format!("(P_{m}, K_{n}): {e}"))?;
        }
    }
    Ok("all 9 pairs match (m-1)(n-1)+1".into())
}

fn c3() -> Check {
    checked_r(&[complete(3), complete(3)], 6)?;
    Ok("r(K_3)=6".into())
}

fn c4() -> Check {
    let mut checked = 0;
    for (q, max_n) in [(2u8, 8usize), (3, 4)] {
        for n in 2..=max_n {
            let c = es_path_coloring(n, q).map_err(e2s)?;
            ensure(c.n() == (n - 1).pow(q as u32), || format!("n={n} q={q}: wrong size {}", c.n()))?;
            for color in 0..q {
                let l = longest_monotone_path(&c, color).map_err(e2s)?;
                ensure(l < n, || format!("n={n} q={q}: color {color} has a monotone path on {l} vertices"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} colorings P_n-free in every color"))
}

fn all_patterns(max_n: usize) -> Vec<OrderedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            out.push(OrderedGraph::new(n, edges).unwrap());
        }
    }
    out
}

fn c5() -> Check {
    let pats = all_patterns(4);
    let opts = DecideOptions::sequential();
    let mut queries = 0;
    for a in &pats {
        for b in &pats {
            for n in 1..=6 {
                let q = RamseyQuery::new(vec![a.clone(), b.clone()], n).map_err(e2s)?;
                let cert = decide_with(&q, &opts).map_err(e2s)?;
                let oracle = brute_force_oracle(&q.targets, n).map_err(e2s)?;
                ensure((cert.verdict == Verdict::Unavoidable) == oracle, || {
                    format!("disagreement on {:?} / {:?} at N={n}", a.edges(), b.edges())
                })?;
                queries += 1;
            }
        }
    }
    Ok(format!("{} patterns, {queries} queries, 0 disagreements", pats.len()))
}

fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> OrderedGraph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    OrderedGraph::new(n, edges).unwrap()
}

fn c6() -> Check {
    let crossing = OrderedGraph::new(4, [(1, 3), (2, 4)]).unwrap();
    // (pattern, c, s, minimum N from (2Δn(2^s/c)^d)^s)
    let configs = [
        (complete(2), ratio(1, 2), 1u32, 16usize),
        (monotone_path(3), ratio(1, 2), 1, 48),
        (crossing, ratio(1, 2), 1, 32),
        (complete(2), ratio(1, 4), 1, 32),
        (complete(2), ratio(1, 2), 2, 1024),
    ];
    let mut rng = seeded_rng(2024);
    let (mut red, mut sparse) = (0, 0);
    for k in 0..500 {
        // the s = 2 configuration is much larger; give it one instance in 25
        let (h, c, s, min_n) = if k % 25 == 24 { &configs[4] } else { &configs[k % 4] };
        let n = min_n + rng.gen_range(0..16);
        let p = rng.gen_range(0.0..1.0f64).powi(3);
        let host = random_graph(n, p, &mut rng);
        let w = greedy_embed_or_sparse(&host, h, c, *s).map_err(|e| format!("instance {k}: {e}"))?;
        match w {
            Witness::Red(e) => {
                e.verify(&host, h).map_err(|e| format!("instance {k}: {e}"))?;
                red += 1;
            }
            Witness::Sparse(sw) => {
                let bound = greedy_size_bound(h, c, *s, n);
                ensure(sw.sets.len() == 1 << s, || format!("instance {k}: {} sets", sw.sets.len()))?;
                for (a, wa) in sw.sets.iter().enumerate() {
                    ensure(int(wa.len()) >= bound, || format!("instance {k}: set {a} below the size bound"))?;
                    for wb in &sw.sets[a + 1..] {
                        ensure(wa.last() < wb.first(), || format!("instance {k}: sets out of order"))?;
                        let cross = wa.iter().map(|&x| wb.iter().filter(|&&y| host.has_edge(x, y)).count()).sum();
                        ensure(density(cross, wa.len(), wb.len()) <= *c, || format!("instance {k}: dense pair"))?;
                    }
                }
                sparse += 1;
            }
            Witness::Blue(_) => return Err(format!("instance {k}: unexpected blue witness")),
        }
    }
    Ok(format!("500 instances: {red} embeddings, {sparse} sparse families, all re-verified"))
}

fn random_coloring(n: usize, rng: &mut impl Rng) -> EdgeColoring {
    let p_red = rng.gen_range(0.0..1.0f64);
    EdgeColoring::from_fn(n, 2, |_, _| u8::from(!rng.gen_bool(p_red))).unwrap()
}

fn c7() -> Check {
    let mut rng = seeded_rng(77);
    let mut tallies = Vec::new();
    // matching vs K_{2,2,2}
    let mut red = 0;
    for k in 0..1000 {
        let m = random_matching(4, k).map_err(e2s)?;
        let emb = MultipartiteEmbedder::new(&m, 3, 2).map_err(e2s)?;
        let c = random_coloring(emb.threshold(), &mut rng);
        let w = match_vs_multipartite(&c, &m, 3, 2).map_err(e2s)?;
        w.verify(&c, &m, &complete_multipartite_trivial(&[2, 2, 2])).map_err(|e| format!("multipartite {k}: {e}"))?;
        red += usize::from(w.kind() == "red");
    }
    tallies.push(format!("multipartite {red} red/{} blue", 1000 - red));
    // matching vs K_2 · P_3 through the product embedder
    let mut red = 0;
    for k in 0..1000 {
        let m = random_matching(4, 1000 + k).map_err(e2s)?;
        let g = MultipartiteEmbedder::new(&m, 2, 1).map_err(e2s)?;
        let h = PathEmbedder::new(m.clone(), 3).map_err(e2s)?;
        let lex = LexProductEmbedder::new(&m, &g, &h).map_err(e2s)?;
        let c = random_coloring(lex.threshold(), &mut rng);
        let w = lex_product_embed(&c, &m, &g, &h).map_err(e2s)?;
        w.verify(&c, &m, lex.blue_target()).map_err(|e| format!("lex product {k}: {e}"))?;
        red += usize::from(w.kind() == "red");
    }
    tallies.push(format!("lex product {red} red/{} blue", 1000 - red));
    // matching vs P_4^2 at 4^3
    let mut red = 0;
    for k in 0..1000 {
        let m = random_matching(4, 2000 + k).map_err(e2s)?;
        let c = random_coloring(64, &mut rng);
        let w = bandwidth_embed(&c, &m, 2).map_err(e2s)?;
        w.verify(&c, &m, &path_power(4, 2)).map_err(|e| format!("bandwidth {k}: {e}"))?;
        red += usize::from(w.kind() == "red");
    }
    tallies.push(format!("bandwidth {red} red/{} blue", 1000 - red));
    Ok(tallies.join("; "))
}

fn c8() -> Check {
    let mut rng = seeded_rng(8);
    for t in [3usize, 4] {
        let n = (1 << (t * (t - 1) / 2)) + 1;
        for k in 0..100 {
            let c = TripleColoring::from_fn(n, 2, |_, _, _| rng.gen_range(0..2)).map_err(e2s)?;
            let er = erdos_rado_step(&c, t).map_err(|e| format!("t={t} run {k}: {e}"))?;
            check_erdos_rado(&c, &er).map_err(|e| format!("t={t} run {k}: {e}"))?;
        }
    }
    Ok("t=3 (N=9) and t=4 (N=65), 100 colorings each".into())
}

fn lll_spec(m: usize, seed: u64) -> BadEventFamily {
    BadEventFamily {
        m,
        blue_triangle: true,
        red_family: vec![
            OrderedGraph::new(4, [(1, 3), (2, 4)]).unwrap(),
            OrderedGraph::new(4, [(1, 2), (3, 4)]).unwrap(),
        ],
        red_clique_order: 6,
        p_blue: (1, 4),
        seed,
    }
}

/// Assembly check shared by the criterion and its feasible variant.
fn assemble(spec: &BadEventFamily) -> Result<usize, String> {
    let out = moser_tardos_coloring(spec).map_err(|e| format!("seed {}: {e}", spec.seed))?;
    verify_lll(spec, &out.coloring).map_err(|e| format!("seed {}: {e}", spec.seed))?;
    let big = offdiagonal_assembly(&out.coloring, 4).map_err(e2s)?;
    ensure(find_monochromatic_copy(&big, 1, &complete(3)).map_err(e2s)?.is_none(), || {
        format!("seed {}: blue triangle after assembly", spec.seed)
    })?;
    // Family events are fixed-label: they carry over through the block
    // representatives, which must reproduce c1 exactly.
    let reps: Vec<usize> = (0..spec.m).map(|b| 4 * b + 1).collect();
    ensure(big.restrict(&reps) == out.coloring, || format!("seed {}: representatives differ from c1", spec.seed))?;
    verify_lll(&BadEventFamily { red_clique_order: spec.m + 1, ..spec.clone() }, &big.restrict(&reps))
        .map_err(|e| format!("seed {}: {e}", spec.seed))?;
    Ok(big.n())
}

fn c9() -> Check {
    for seed in 0..10 {
        assemble(&lll_spec(20, seed))?;
    }
    Ok("10 seeds converged and passed all scans".into())
}

fn c9_feasible() -> Check {
    let mut sizes = 0;
    for seed in 0..10 {
        sizes = assemble(&lll_spec(12, seed))?;
    }
    Ok(format!("m=12 (below R(3,6)=18): 10 seeds converged, assembled N={sizes} passes the scans"))
}

fn c10() -> Check {
    for t in [2, 4, 6, 8, 10] {
        let m = jumbled_matching(t).map_err(e2s)?;
        ensure(is_jumbled(&m).map_err(e2s)?, || format!("jumbled_matching({t}) is not jumbled"))?;
    }
    let r = mc_jumbled(1024, 500, 7).map_err(e2s)?;
    ensure(r.fraction >= 0.95, || format!("fraction {} below 0.95", r.fraction))?;
    Ok(format!(
        "t=2..10 jumbled; n=1024, 500 trials: fraction {:.3} (Wilson 95% [{:.3}, {:.3}])",
        r.fraction, r.wilson_low, r.wilson_high
    ))
}

fn c11() -> Check {
    let r = mc_discrepancy(2..=7).map_err(e2s)?;
    let at4 = r.rows.iter().find(|row| row.h == 4).unwrap().ratio.clone();
    ensure(r.c_hat <= int(2) * &at4, || format!("max ratio {} above twice {}", rational::to_string(&r.c_hat), rational::to_string(&at4)))?;
    Ok(format!(
        "C_hat = {} (ratio at h=4: {})",
        rational::to_string(&r.c_hat),
        rational::to_string(&at4)
    ))
}

fn c12() -> Check {
    let k4 = complete_triple_system(4);
    let fam = s_family(&k4).map_err(e2s)?;
    ensure(fam == vec![complete(3)], || format!("K_4^(3): got {fam:?}"))?;
    let minus = k4.without([2, 3, 4]);
    let mut got: Vec<Vec<(usize, usize)>> = s_family(&minus).map_err(e2s)?.iter().map(|g| g.edges().to_vec()).collect();
    got.sort();
    let want = vec![vec![(1, 2), (1, 3)], vec![(1, 2), (1, 3), (2, 3)], vec![(1, 2), (2, 3)]];
    ensure(got == want, || format!("K_4^(3) minus 234: got {got:?}"))?;
    Ok("K_4^(3) -> {K_3}; K_4^(3) minus {2,3,4} -> the three listed graphs".into())
}

fn c13() -> Check {
    let p = tight_path_3(4);
    let six = ramsey3_decide(&[p.clone(), p.clone()], 6).map_err(e2s)?;
    ensure(matches!(six, Ramsey3::Avoidable(_)), || "N=6 unavoidable".into())?;
    let seven = ramsey3_decide(&[p.clone(), p], 7).map_err(e2s)?;
    ensure(seven == Ramsey3::Unavoidable, || "N=7 avoidable".into())?;
    Ok("avoidable at 6, unavoidable at 7".into())
}

fn main() {
    let mins = |m: u64| Some(Duration::from_secs(60 * m));
    let criteria = [
        Criterion { id: "1", title: "r_<(P_n) = (n-1)^2+1, n = 2..4", limit: mins(5), gating: true, run: c1 },
        Criterion { id: "1s", title: "stretch: r_<(P_5) = 17 via SAT", limit: None, gating: false, run: c1_stretch },
        Criterion { id: "2", title: "r_<(P_m, K_n) = (m-1)(n-1)+1", limit: mins(10), gating: true, run: c2 },
        Criterion { id: "3", title: "r_<(K_3) = 6", limit: mins(1), gating: true, run: c3 },
        Criterion { id: "4", title: "es_path_coloring is P_n-free", limit: mins(1), gating: true, run: c4 },
        Criterion { id: "5", title: "decide agrees with the oracle", limit: mins(30), gating: true, run: c5 },
        Criterion { id: "6", title: "greedy embed-or-sparse postconditions", limit: None, gating: true, run: c6 },
        Criterion { id: "7", title: "matching embedders at the guaranteed N", limit: mins(10), gating: true, run: c7 },
        Criterion { id: "8", title: "Erdős–Rado extraction", limit: mins(1), gating: true, run: c8 },
        Criterion { id: "9", title: "LLL pipeline, m = 20, k = 6", limit: None, gating: false, run: c9 },
        Criterion { id: "9v", title: "LLL pipeline, feasible m = 12", limit: None, gating: false, run: c9_feasible },
        Criterion { id: "10", title: "jumbled matchings", limit: None, gating: true, run: c10 },
        Criterion { id: "11", title: "bit-reversal discrepancy ratio", limit: None, gating: true, run: c11 },
        Criterion { id: "12", title: "S_H worked examples", limit: None, gating: true, run: c12 },
        Criterion { id: "13", title: "stretch: r_<(P^(3)_4) = 7", limit: None, gating: false, run: c13 },
    ];
    let mut gating_failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let over = c.limit.is_some_and(|l| took > l);
        let (word, detail) = match (&result, over) {
            (Ok(msg), false) => ("PASS", msg.clone()),
            (Ok(msg), true) => ("FAIL", format!("{msg}; over the time limit")),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        let note = match (c.id, word) {
            ("9", "FAIL") => " [known: no such coloring exists since R(3,6) = 18]",
            (_, "FAIL") if !c.gating => " [non-gating]",
            _ => "",
        };
        println!("criterion {:>2} {word}: {} — {detail} ({:.2?}){note}", c.id, c.title, took);
        if word == "FAIL" && c.gating {
            gating_failures += 1;
        }
    }
    if gating_failures > 0 {
        println!("{gating_failures} gating criteria failed");
        std::process::exit(1);
    }
    println!("all gating criteria passed");
}
