//! Bitset branch-and-bound.
//!
//! Vertices are branched in ascending order, include before exclude, so a
//! single-threaded run meets optimum sets in lexicographic order and returns
//! the least one. Candidates that cannot join the current set are dropped as
//! soon as the set grows, which keeps every node of the tree feasible.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use log::{debug, warn};

use crate::distance::DistMatrix;
use crate::error::{Error, Result};
use crate::families::{diamond_set, j_set, path_block_set, thin_grid_a, thin_grid_b};
use crate::graph::{Family, Graph};
use crate::position::{is_kgdp, PositionChecker};
use crate::types::{PositionParams, VertexSet};

use super::{Method, SearchOptions, SolveResult};

/// Largest graph the bitset search accepts.
pub const MAX_EXACT_VERTICES: usize = 64;

const FLUSH_EVERY: u64 = 256;

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// Immutable search data shared by all workers.
struct Context {
    n: usize,
    k: usize,
    d: u32,
    dist: Vec<u32>,
    /// Per source, the vertices within distance `d` in BFS order.
    ball: Vec<Vec<usize>>,
    /// `preds[a][y]`: neighbours of `y` one step closer to `a`.
    preds: Vec<Vec<Vec<usize>>>,
    /// Partitions of the vertex set into pieces of short geodesics.
    covers: Vec<Vec<u64>>,
}

impl Context {
    fn new(g: &Graph, dm: &DistMatrix, k: usize, d: u32) -> Self {
        let n = g.n();
        let dist: Vec<u32> = (0..n * n).map(|i| dm.get(i / n, i % n).unwrap_or(u32::MAX)).collect();
        let mut ball = Vec::with_capacity(n);
        let mut preds = Vec::with_capacity(n);
        for a in 0..n {
            let order: Vec<usize> = dm.bfs_order(a).iter().copied().filter(|&y| dist[a * n + y] <= d).collect();
            let mut p = vec![Vec::new(); n];
            for &y in &order {
                let dy = dist[a * n + y];
                p[y] = g.neighbors(y).iter().copied().filter(|&x| dy > 0 && dist[a * n + x] == dy - 1).collect();
            }
            ball.push(order);
            preds.push(p);
        }
        let mut ctx = Context { n, k, d, dist, ball, preds, covers: Vec::new() };
        let ascending: Vec<usize> = (0..n).collect();
        let descending: Vec<usize> = (0..n).rev().collect();
        ctx.covers = vec![ctx.greedy_cover(&ascending), ctx.greedy_cover(&descending)];
        ctx
    }

    fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Repeatedly takes the short geodesic through the most uncovered
    /// vertices; each piece can hold at most `k - 1` vertices of a feasible
    /// set.
    fn greedy_cover(&self, sources: &[usize]) -> Vec<u64> {
        let mut uncovered = self.full_mask();
        let mut value = vec![0u32; self.n];
        let mut back = vec![usize::MAX; self.n];
        let mut parts = Vec::new();
        while uncovered != 0 {
            let mut best = (0, 0u64);
            for &a in sources {
                for &y in &self.ball[a] {
                    let mut top = 0;
                    back[y] = usize::MAX;
                    for &x in &self.preds[a][y] {
                        if value[x] > top || back[y] == usize::MAX {
                            top = top.max(value[x]);
                            back[y] = x;
                        }
                    }
                    value[y] = top + (uncovered >> y & 1) as u32;
                    if value[y] > best.0 {
                        let mut piece = 0u64;
                        let mut cur = y;
                        while cur != usize::MAX {
                            piece |= 1 << cur;
                            cur = if cur == a { usize::MAX } else { back[cur] };
                        }
                        best = (value[y], piece & uncovered);
                    }
                }
            }
            parts.push(best.1);
            uncovered &= !best.1;
        }
        parts
    }

    fn bound(&self, size: usize, set: u64, cand: u64) -> usize {
        self.covers
            .iter()
            .map(|cover| {
                cover.iter().fold(size, |total, &part| {
                    let room = (self.k - 1).saturating_sub((set & part).count_ones() as usize);
                    total + room.min((cand & part).count_ones() as usize)
                })
            })
            .min()
            .unwrap_or(size + cand.count_ones() as usize)
    }

    /// Whether the feasible set `s` (bits `set`) stays feasible with `w`
    /// added. A new violation must pass through `w`; trimmed to its marked
    /// ends it either starts at `w` or has `w` inside a geodesic between two
    /// members.
    fn fits(&self, s: &[usize], set: u64, w: usize, value: &mut [u32]) -> bool {
        if s.len() + 1 < self.k {
            return true;
        }
        let marked = set | 1 << w;
        for &y in &self.ball[w] {
            let top = self.preds[w][y].iter().map(|&x| value[x]).max().unwrap_or(0);
            value[y] = top + (marked >> y & 1) as u32;
        }
        let k = self.k as u32;
        let near: Vec<usize> = s.iter().copied().filter(|&a| self.dist(w, a) <= self.d).collect();
        if near.iter().any(|&a| value[a] >= k) {
            return false;
        }
        for (i, &a) in near.iter().enumerate() {
            for &b in &near[i + 1..] {
                if value[a] + value[b] > k {
                    let through = self.dist(a, w) + self.dist(w, b);
                    if through <= self.d && through == self.dist(a, b) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

struct Shared {
    best: AtomicUsize,
    witness: Mutex<Option<Vec<usize>>>,
    nodes: AtomicU64,
    stop: AtomicBool,
}

struct Worker<'a> {
    ctx: &'a Context,
    shared: &'a Shared,
    opts: &'a SearchOptions,
    start: Instant,
    checker: Option<PositionChecker<'a>>,
    scratch: Vec<u32>,
    pending: u64,
}

impl<'a> Worker<'a> {
    fn new(
        ctx: &'a Context,
        shared: &'a Shared,
        opts: &'a SearchOptions,
        start: Instant,
        full: Option<PositionChecker<'a>>,
    ) -> Self {
        Worker { ctx, shared, opts, start, checker: full, scratch: vec![0; ctx.n], pending: 0 }
    }

    /// Counts a node; false once the search must stop.
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending < FLUSH_EVERY && self.opts.node_budget.is_none() && self.opts.time_budget.is_none() {
            return true;
        }
        self.flush();
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        let total = self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        let over_nodes = self.opts.node_budget.is_some_and(|b| total > b);
        let over_time = self.opts.time_budget.is_some_and(|t| self.start.elapsed() > t);
        if over_nodes || over_time {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
    }

    fn record(&self, s: &[usize]) {
        let mut witness = self.shared.witness.lock().expect("witness lock");
        if witness.as_ref().is_none_or(|w| s.len() > w.len()) && s.len() > self.shared.best.load(Ordering::Relaxed) {
            *witness = Some(s.to_vec());
            self.shared.best.fetch_max(s.len(), Ordering::Relaxed);
        }
    }

    fn extendable(&mut self, s: &mut Vec<usize>, set: u64, cand: u64) -> u64 {
        let mut keep = 0;
        for w in bits(cand) {
            let ok = match self.checker.as_mut() {
                Some(checker) => {
                    s.push(w);
                    let mut sorted = s.clone();
                    sorted.sort_unstable();
                    s.pop();
                    checker.is_valid(&sorted).expect("labels in range")
                }
                None => self.ctx.fits(s, set, w, &mut self.scratch),
            };
            if ok {
                keep |= 1 << w;
            }
        }
        keep
    }

    /// Depth-first search below the node `(s, cand)`; false when stopped.
    fn search(&mut self, s: &mut Vec<usize>, set: u64, cand: u64) -> bool {
        if !self.tick() {
            return false;
        }
        if s.len() > self.shared.best.load(Ordering::Relaxed) {
            self.record(s);
        }
        if cand == 0 || self.ctx.bound(s.len(), set, cand) <= self.shared.best.load(Ordering::Relaxed) {
            return true;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & (cand - 1);
        s.push(v);
        let next = self.extendable(s, set | 1 << v, rest);
        let go_on = self.search(s, set | 1 << v, next);
        s.pop();
        go_on && self.search(s, set, rest)
    }

    /// Expands the top `depth` levels into independent subtrees, in
    /// search order.
    fn split(&mut self, s: &mut Vec<usize>, set: u64, cand: u64, depth: u32, out: &mut Vec<(Vec<usize>, u64, u64)>) {
        if depth == 0 || cand == 0 {
            out.push((s.clone(), set, cand));
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & (cand - 1);
        s.push(v);
        let next = self.extendable(s, set | 1 << v, rest);
        self.split(s, set | 1 << v, next, depth - 1, out);
        s.pop();
        self.split(s, set, rest, depth - 1, out);
    }
}

/// The largest verified construction known for the graph's family, if any.
pub fn warm_start_set(g: &Graph, dm: &DistMatrix, p: PositionParams) -> Option<VertexSet> {
    let k = p.k();
    let d = p.effective_d(dm.diameter());
    let du = d as usize;
    let mut candidates: Vec<VertexSet> = Vec::new();
    if d as usize + 2 <= k {
        candidates.push((0..g.n()).collect());
    }
    match g.family_tag() {
        Some(Family::Path { n }) => candidates.extend(path_block_set(k, du, n).ok()),
        Some(Family::Cycle { n }) if du <= n / 2 => {
            let m = (k - 1) * n / (du + 1);
            if m >= 1 {
                candidates.extend(j_set(n, m.min(n), 0).ok());
            }
        }
        Some(Family::Complete { .. }) => candidates.push(VertexSet::from([0])),
        Some(Family::Grid { rows, cols }) => {
            if cols == 2 {
                candidates.extend(thin_grid_a(k, du, rows).ok());
                candidates.extend(thin_grid_b(k, du, rows).ok());
            }
            let r = k - 2;
            candidates.extend(diamond_set(r, (r, r), rows, cols).ok());
        }
        _ => {}
    }
    let mut best: Option<VertexSet> = None;
    for set in candidates {
        match is_kgdp(g, dm, &set, p) {
            Ok(true) => {
                if best.as_ref().is_none_or(|b| set.len() > b.len()) {
                    best = Some(set);
                }
            }
            _ => warn!("construction {set} is not valid for k={k}, d={d}; ignored"),
        }
    }
    best
}

/// Exact optimum by branch-and-bound. Supports up to
/// [`MAX_EXACT_VERTICES`] vertices.
pub fn solve_exact(g: &Graph, p: PositionParams, opts: &SearchOptions) -> Result<SolveResult> {
    let n = g.n();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::InvalidParams(format!(
            "branch-and-bound handles at most {MAX_EXACT_VERTICES} vertices, got {n}"
        )));
    }
    let dm = DistMatrix::new(g);
    let effective_d = p.effective_d(dm.diameter());
    let ctx = Context::new(g, &dm, p.k(), effective_d);
    let seed = if opts.warm_start { warm_start_set(g, &dm, p) } else { None };
    let seed_len = seed.as_ref().map_or(0, |s| s.len());
    if let Some(s) = &seed {
        debug!("warm start with {} vertices: {s}", s.len());
    }
    let shared = Shared {
        best: AtomicUsize::new(seed_len.saturating_sub(1)),
        witness: Mutex::new(None),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
    };
    let start = Instant::now();
    let checker = || opts.full_check.then(|| PositionChecker::new(g, &dm, p));
    let workers = opts.workers.max(1);
    let root = ctx.full_mask();

    let finished = if workers == 1 {
        let mut w = Worker::new(&ctx, &shared, opts, start, checker());
        let done = w.search(&mut Vec::new(), 0, root);
        w.flush();
        done
    } else {
        let mut tasks = Vec::new();
        let depth = (usize::BITS - (workers * 8).leading_zeros()).min(n as u32);
        Worker::new(&ctx, &shared, opts, start, checker()).split(&mut Vec::new(), 0, root, depth, &mut tasks);
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    let (ctx, shared, tasks, next) = (&ctx, &shared, &tasks, &next);
                    let full = checker();
                    scope.spawn(move || {
                        let mut w = Worker::new(ctx, shared, opts, start, full);
                        let mut ok = true;
                        while ok {
                            let i = next.fetch_add(1, Ordering::Relaxed);
                            let Some((s, set, cand)) = tasks.get(i) else { break };
                            ok = w.search(&mut s.clone(), *set, *cand);
                        }
                        w.flush();
                        ok
                    })
                })
                .collect();
            // join every worker before deciding
            let finished: Vec<bool> = handles.into_iter().map(|h| h.join().expect("worker panicked")).collect();
            finished.into_iter().all(|done| done)
        })
    };

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let witness = shared.witness.into_inner().expect("witness lock").map(VertexSet::from);
    let witness = witness.or(seed).unwrap_or_default();
    if !finished {
        return Err(Error::BudgetExhausted { nodes, best: witness.len() });
    }
    debug!("branch-and-bound: value {} after {nodes} nodes", witness.len());
    Ok(SolveResult {
        value: witness.len(),
        witness,
        method: Method::BranchAndBound,
        nodes_explored: nodes,
        k: p.k(),
        requested_d: p.d(),
        effective_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_bruteforce;

    fn params(k: usize, d: u32) -> PositionParams {
        PositionParams::new(k, d).unwrap()
    }

    #[test]
    fn examples() {
        let g = Graph::from_descriptor("grid:3x3").unwrap();
        assert_eq!(solve_exact(&g, params(3, 4), &SearchOptions::default()).unwrap().value, 4);
        let g = Graph::from_descriptor("prism:12").unwrap();
        assert_eq!(solve_exact(&g, params(4, 5), &SearchOptions::default()).unwrap().value, 12);
        let g = Graph::from_descriptor("cycle:16").unwrap();
        assert_eq!(solve_exact(&g, params(3, 5), &SearchOptions::default()).unwrap().value, 5);
    }

    #[test]
    fn agrees_with_brute_force_and_modes() {
        let descriptors = ["path:9", "cycle:10", "grid:3x4", "prism:6", "cylinder:3x4", "torus:3x3", "complete:5"];
        for desc in descriptors {
            let g = Graph::from_descriptor(desc).unwrap();
            for k in 2..=5 {
                for d in 1..=5 {
                    let p = params(k, d);
                    let brute = solve_bruteforce(&g, p).unwrap();
                    let cold = SearchOptions { warm_start: false, ..SearchOptions::default() };
                    let full = SearchOptions { full_check: true, ..SearchOptions::default() };
                    let par = SearchOptions { workers: 3, ..SearchOptions::default() };
                    for opts in [SearchOptions::default(), cold, full, par] {
                        let r = solve_exact(&g, p, &opts).unwrap();
                        assert_eq!(r.value, brute.value, "{desc} k={k} d={d} {opts:?}");
                        if opts.workers <= 1 {
                            assert_eq!(r.witness, brute.witness, "{desc} k={k} d={d} {opts:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn budgets() {
        let g = Graph::from_descriptor("grid:4x4").unwrap();
        let opts = SearchOptions { node_budget: Some(10), warm_start: false, ..SearchOptions::default() };
        assert!(matches!(solve_exact(&g, params(3, 6), &opts), Err(Error::BudgetExhausted { .. })));
        let opts = SearchOptions { time_budget: Some(std::time::Duration::ZERO), ..SearchOptions::default() };
        assert!(matches!(solve_exact(&Graph::from_descriptor("grid:5x5").unwrap(), params(4, 8), &opts), Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn warm_starts_are_valid() {
        for desc in ["path:14", "cycle:14", "prism:9", "grid:5x5", "complete:4"] {
            let g = Graph::from_descriptor(desc).unwrap();
            let dm = DistMatrix::new(&g);
            for k in 2..6 {
                for d in 1..8 {
                    if let Some(s) = warm_start_set(&g, &dm, params(k, d)) {
                        assert!(is_kgdp(&g, &dm, &s, params(k, d)).unwrap());
                    }
                }
            }
        }
    }
}
