//! DIMACS CNF export of two-color avoidance.
//!
//! Variable `k + 1` is the pair with row-major index `k`; true means color 0.
//! For every target and every increasing injection of its vertices there is
//! one clause forbidding all mapped pairs from having the target's color.
//! The formula is satisfiable exactly when an avoiding coloring exists.

use std::fmt::Write as _;
use std::path::Path;

use crate::coloring::{pair_at, pair_count, pair_index, EdgeColoring};
use crate::error::{Error, Result};

use super::RamseyQuery;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub vars: usize,
    pub clauses: Vec<Vec<i64>>,
    pub comments: Vec<String>,
}

impl Cnf {
    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        for c in &self.comments {
            writeln!(s, "c {c}").expect("write to string");
        }
        writeln!(s, "p cnf {} {}", self.vars, self.clauses.len()).expect("write to string");
        for cl in &self.clauses {
            for lit in cl {
                write!(s, "{lit} ").expect("write to string");
            }
            s.push_str("0\n");
        }
        s
    }
}

fn injections(p: usize, n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(cur: &mut Vec<usize>, p: usize, n: usize, f: &mut impl FnMut(&[usize])) {
        if cur.len() == p {
            f(cur);
            return;
        }
        let lo = cur.last().map_or(1, |&x| x + 1);
        for v in lo..=n + cur.len() + 1 - p {
            cur.push(v);
            rec(cur, p, n, f);
            cur.pop();
        }
    }
    if p <= n {
        rec(&mut Vec::with_capacity(p), p, n, f);
    }
}

pub fn sat_cnf(query: &RamseyQuery) -> Result<Cnf> {
    if query.targets.len() != 2 {
        return Err(Error::Invalid("CNF export supports two colors only".into()));
    }
    let n = query.n;
    let vars = pair_count(n);
    let mut comments = vec![
        "ordered Ramsey avoidance".to_string(),
        format!("N {n}"),
        "variable k is true when its pair has color 0".to_string(),
    ];
    for (c, t) in query.targets.iter().enumerate() {
        comments.push(format!("target {c}: {}", t.to_json()));
    }
    for k in 0..vars {
        let (i, j) = pair_at(n, k);
        comments.push(format!("var {} = ({i},{j})", k + 1));
    }
    let mut clauses = Vec::new();
    for (c, t) in query.targets.iter().enumerate() {
        injections(t.n(), n, &mut |phi| {
            let clause = t
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let var = pair_index(n, phi[a - 1], phi[b - 1]) as i64 + 1;
                    if c == 0 {
                        -var
                    } else {
                        var
                    }
                })
                .collect();
            clauses.push(clause);
        });
    }
    Ok(Cnf { vars, clauses, comments })
}

pub fn sat_export(query: &RamseyQuery, path: &Path) -> Result<()> {
    let cnf = sat_cnf(query)?;
    std::fs::write(path, cnf.to_dimacs())?;
    Ok(())
}

/// Reads a solver assignment (`v` lines or bare literals, `0` ignored) into
/// a coloring of `[n]`. Every variable must be assigned.
pub fn import_assignment(text: &str, n: usize) -> Result<EdgeColoring> {
    let vars = pair_count(n);
    let mut colors: Vec<Option<u8>> = vec![None; vars];
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('s') {
            continue;
        }
        let body = line.strip_prefix('v').unwrap_or(line);
        for tok in body.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > vars {
                return Err(Error::Parse(format!("variable {var} out of range 1..={vars}")));
            }
            colors[var - 1] = Some(if lit > 0 { 0 } else { 1 });
        }
    }
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(k, c)| c.ok_or_else(|| Error::Parse(format!("variable {} unassigned", k + 1))))
        .collect::<Result<Vec<u8>>>()?;
    EdgeColoring::new(n, 2, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, monotone_path};

    #[test]
    fn tiny_formulas() {
        let q = RamseyQuery::new(vec![complete(2), complete(2)], 2).unwrap();
        let cnf = sat_cnf(&q).unwrap();
        assert_eq!(cnf.vars, 1);
        assert_eq!(cnf.clauses, vec![vec![-1], vec![1]]);
        let text = cnf.to_dimacs();
        assert!(text.contains("p cnf 1 2\n-1 0\n1 0\n"));

        let q = RamseyQuery::new(vec![monotone_path(3), monotone_path(3)], 5).unwrap();
        let cnf = sat_cnf(&q).unwrap();
        assert_eq!((cnf.vars, cnf.clauses.len()), (10, 20));
    }

    #[test]
    fn assignments() {
        let c = import_assignment("s SATISFIABLE\nv 1 -2\nv 3 0\n", 3).unwrap();
        assert_eq!(c.colors(), &[0, 1, 0]);
        assert!(import_assignment("v 1 2 0", 3).is_err());
        assert!(import_assignment("v 1 2 x 0", 3).is_err());
    }
}
