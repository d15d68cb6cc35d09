//! Backtracking over edge colors with per-color copy detection.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::containment::PatternPlan;
use crate::graph::OrderedGraph;

use super::{CheckMode, EdgeOrder};

/// A target prepared for the mask-based checks.
pub(crate) struct Target {
    p: usize,
    edges: Vec<(usize, usize)>,
    /// `nbrs[v]`: pattern neighbors of `v`.
    nbrs: Vec<Vec<usize>>,
    plan: PatternPlan,
}

impl Target {
    pub(crate) fn new(g: &OrderedGraph) -> Self {
        let p = g.n();
        let mut nbrs = vec![Vec::new(); p + 1];
        for &(a, b) in g.edges() {
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        Target { p, edges: g.edges().to_vec(), nbrs, plan: PatternPlan::new(g) }
    }

    /// Is there a copy in `adj` that maps some pattern edge onto `(i, j)`?
    fn copy_through(&self, adj: &[u64], n: usize, i: usize, j: usize) -> bool {
        let p = self.p;
        let mut phi = vec![0usize; p + 1];
        for &(a, b) in &self.edges {
            if i < a || j - i < b - a || n - j < p - b {
                continue;
            }
            phi[a] = i;
            phi[b] = j;
            if self.extend(adj, n, &mut phi, 1) {
                return true;
            }
            phi[a] = 0;
            phi[b] = 0;
        }
        false
    }

    fn extend(&self, adj: &[u64], n: usize, phi: &mut [usize], v: usize) -> bool {
        let p = self.p;
        if v > p {
            return true;
        }
        if phi[v] != 0 {
            return self.extend(adj, n, phi, v + 1);
        }
        let lo = phi[v - 1] + 1;
        let hi = match (v + 1..=p).find(|&u| phi[u] != 0) {
            Some(u) => phi[u] - (u - v),
            None => n - (p - v),
        };
        if lo > hi {
            return false;
        }
        let mut cand = (u64::MAX >> (63 - hi)) & (u64::MAX << lo);
        for &u in &self.nbrs[v] {
            if phi[u] != 0 {
                cand &= adj[phi[u]];
            }
        }
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            phi[v] = x;
            if self.extend(adj, n, phi, v + 1) {
                return true;
            }
        }
        phi[v] = 0;
        false
    }
}

pub(crate) fn edge_order(n: usize, order: EdgeOrder) -> Vec<(usize, usize)> {
    match order {
        EdgeOrder::Lexicographic => (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect(),
        EdgeOrder::VertexIncremental => (2..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect(),
    }
}

pub(crate) struct Searcher<'a> {
    pub n: usize,
    pub targets: &'a [Target],
    pub order: &'a [(usize, usize)],
    pub mode: CheckMode,
    pub fix_first: bool,
    pub propagate: bool,
}

struct State {
    masks: Vec<Vec<u64>>,
    /// Indexed by search position.
    colors: Vec<Option<u8>>,
    /// Assigned positions, most recent last.
    trail: Vec<usize>,
    nodes: u64,
    prunes: u64,
}

#[derive(Default)]
pub(crate) struct Outcome {
    /// Colors in search order, if an avoiding coloring exists.
    pub colors: Option<Vec<u8>>,
    pub nodes: u64,
    pub prunes: u64,
}

impl<'a> Searcher<'a> {
    fn fresh(&self) -> State {
        State {
            masks: vec![vec![0u64; self.n + 1]; self.targets.len()],
            colors: vec![None; self.order.len()],
            trail: Vec::with_capacity(self.order.len()),
            nodes: 0,
            prunes: 0,
        }
    }

    fn choices(&self, pos: usize) -> u8 {
        if self.fix_first && pos == 0 {
            1
        } else {
            self.targets.len() as u8
        }
    }

    fn set_bit(st: &mut State, c: usize, (i, j): (usize, usize)) {
        st.masks[c][i] |= 1 << j;
        st.masks[c][j] |= 1 << i;
    }

    fn clear_bit(st: &mut State, c: usize, (i, j): (usize, usize)) {
        st.masks[c][i] &= !(1 << j);
        st.masks[c][j] &= !(1 << i);
    }

    /// Would color `c` on `pos` (already set in the masks) complete target `c`?
    fn completes(&self, st: &State, pos: usize, c: usize) -> bool {
        let (i, j) = self.order[pos];
        let t = &self.targets[c];
        match self.mode {
            CheckMode::Incremental => t.copy_through(&st.masks[c], self.n, i, j),
            CheckMode::FullRescan => t.plan.contained_in_masks(&st.masks[c], self.n),
        }
    }

    /// Assigns `color` at `pos`; false if that completes a target copy.
    fn assign(&self, st: &mut State, pos: usize, color: u8) -> bool {
        let c = color as usize;
        Self::set_bit(st, c, self.order[pos]);
        st.colors[pos] = Some(color);
        st.trail.push(pos);
        st.nodes += 1;
        let hit = self.completes(st, pos, c);
        if hit {
            st.prunes += 1;
        }
        !hit
    }

    fn undo_to(&self, st: &mut State, mark: usize) {
        while st.trail.len() > mark {
            let pos = st.trail.pop().expect("nonempty trail");
            let c = st.colors[pos].take().expect("assigned") as usize;
            Self::clear_bit(st, c, self.order[pos]);
        }
    }

    /// Forces every unassigned edge with a single safe color, to a fixpoint.
    /// False if some edge has no safe color left.
    fn propagate(&self, st: &mut State) -> bool {
        if !self.propagate {
            return true;
        }
        let q = self.targets.len();
        loop {
            let mut changed = false;
            for pos in 0..self.order.len() {
                if st.colors[pos].is_some() {
                    continue;
                }
                let mut safe = None;
                let mut count = 0;
                for c in 0..q {
                    Self::set_bit(st, c, self.order[pos]);
                    let bad = self.completes(st, pos, c);
                    Self::clear_bit(st, c, self.order[pos]);
                    if !bad {
                        count += 1;
                        safe = Some(c as u8);
                        if count > 1 {
                            break;
                        }
                    }
                }
                match (count, safe) {
                    (0, _) => {
                        st.prunes += 1;
                        return false;
                    }
                    (1, Some(c)) => {
                        self.assign(st, pos, c);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn dfs(&self, st: &mut State, from: usize, abort: &dyn Fn() -> bool) -> bool {
        let Some(pos) = (from..self.order.len()).find(|&p| st.colors[p].is_none()) else {
            return true;
        };
        if abort() {
            return false;
        }
        for color in 0..self.choices(pos) {
            let mark = st.trail.len();
            if self.assign(st, pos, color) && self.propagate(st) && self.dfs(st, pos + 1, abort) {
                return true;
            }
            self.undo_to(st, mark);
        }
        false
    }

    fn finish(st: &State) -> Vec<u8> {
        st.colors.iter().map(|c| c.expect("complete assignment")).collect()
    }

    pub(crate) fn run_sequential(&self) -> Outcome {
        let mut st = self.fresh();
        let found = self.propagate(&mut st) && self.dfs(&mut st, 0, &|| false);
        Outcome { colors: found.then(|| Self::finish(&st)), nodes: st.nodes, prunes: st.prunes }
    }

    /// All surviving assignments with the first `depth` positions decided,
    /// in search order.
    fn frontier(&self, depth: usize, st: &mut State, from: usize, out: &mut Vec<Vec<Option<u8>>>) {
        let Some(pos) = (from..depth).find(|&p| st.colors[p].is_none()) else {
            out.push(st.colors.clone());
            return;
        };
        for color in 0..self.choices(pos) {
            let mark = st.trail.len();
            if self.assign(st, pos, color) && self.propagate(st) {
                self.frontier(depth, st, pos + 1, out);
            }
            self.undo_to(st, mark);
        }
    }

    /// Splits the tree after `depth` edges and searches the pieces on
    /// `threads` workers. The lowest-index piece with a solution wins, so the
    /// witness is the one the sequential search would find.
    pub(crate) fn run_parallel(&self, threads: usize, depth: usize) -> Outcome {
        let depth = depth.min(self.order.len());
        let mut st = self.fresh();
        let mut pieces = Vec::new();
        if self.propagate(&mut st) {
            self.frontier(depth, &mut st, 0, &mut pieces);
        }
        let nodes = AtomicU64::new(st.nodes);
        let prunes = AtomicU64::new(st.prunes);
        let next = AtomicUsize::new(0);
        let best = AtomicUsize::new(usize::MAX);
        let found: Mutex<Option<(usize, Vec<u8>)>> = Mutex::new(None);
        std::thread::scope(|s| {
            for _ in 0..threads.max(1) {
                s.spawn(|| loop {
                    let idx = next.fetch_add(1, Ordering::SeqCst);
                    if idx >= pieces.len() || idx > best.load(Ordering::SeqCst) {
                        break;
                    }
                    let mut st = self.fresh();
                    for (pos, c) in pieces[idx].iter().enumerate() {
                        if let Some(c) = *c {
                            Self::set_bit(&mut st, c as usize, self.order[pos]);
                            st.colors[pos] = Some(c);
                            st.trail.push(pos);
                        }
                    }
                    let abort = || best.load(Ordering::Relaxed) < idx;
                    let hit = self.dfs(&mut st, depth, &abort);
                    nodes.fetch_add(st.nodes, Ordering::Relaxed);
                    prunes.fetch_add(st.prunes, Ordering::Relaxed);
                    if hit {
                        best.fetch_min(idx, Ordering::SeqCst);
                        let mut f = found.lock().expect("no poisoned workers");
                        if f.as_ref().is_none_or(|(k, _)| idx < *k) {
                            *f = Some((idx, Self::finish(&st)));
                        }
                    }
                });
            }
        });
        Outcome {
            colors: found.into_inner().expect("no poisoned workers").map(|(_, c)| c),
            nodes: nodes.into_inner(),
            prunes: prunes.into_inner(),
        }
    }
}
