//! Exact search over edge colorings of `K_n`.
//!
//! Colorings are enumerated as restricted-growth strings over the lex edge
//! order, so each partition of `E(K_n)` into color classes is visited once.
//! Edges are colored in order; after edge `t` every copy whose largest edge
//! is `t` is fully colored and gets evaluated. A good copy closes the branch,
//! since coloring more edges cannot change it.
//!
//! Within a branch the used colors are tried in increasing order and the
//! fresh color last, so leaves appear in lex order and the first leaf with a
//! given color count is the lex-least one.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{edge_count, EdgeColoring};
use crate::embeddings::{enumerate_copies, find_good_copy, CopyIndex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::predicates::PhiKind;

/// Node and wall-clock limits for one search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    max_nodes: u64,
    max_time: Duration,
}

impl Budget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Result<Self> {
        if max_nodes == 0 || max_time.is_zero() {
            return Err(Error::Domain("budget limits must be positive".into()));
        }
        Ok(Budget { max_nodes, max_time })
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn max_time(&self) -> Duration {
        self.max_time
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(60),
        }
    }
}

/// What the search is after.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Goal {
    /// Every achievable color count.
    AllCounts,
    /// Only the largest achievable color count.
    MaxOnly,
    /// A single avoiding coloring with exactly this many colors.
    Exactly(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Search-tree nodes, one per edge assignment tried.
    pub nodes: u64,
    /// Branches closed by a fully colored good copy.
    pub prunes: u64,
    /// Branches closed by the color-count bound.
    pub bound_cuts: u64,
    pub elapsed_ms: u64,
}

impl SearchStats {
    fn absorb(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.prunes += o.prunes;
        self.bound_cuts += o.bound_cuts;
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub kind: PhiKind,
    pub n: usize,
    /// `1 + max(achievable)`, or 1 when nothing avoids. Only a lower bound
    /// unless `exhausted` holds.
    pub phi: usize,
    /// Color counts of avoiding colorings seen. Complete only for
    /// [`Goal::AllCounts`] with `exhausted`.
    pub achievable: BTreeSet<usize>,
    /// Lex-least avoiding restricted-growth coloring with `max(achievable)`
    /// colors.
    pub witness: Option<EdgeColoring>,
    pub stats: SearchStats,
    /// The search ran to completion within its budget.
    pub exhausted: bool,
}

impl SearchOutcome {
    pub fn max_achievable(&self) -> Option<usize> {
        self.achievable.iter().next_back().copied()
    }

    /// Counts below the maximum that are missing from the achievable set.
    pub fn gaps(&self) -> Vec<usize> {
        match self.max_achievable() {
            Some(max) => (1..max).filter(|m| !self.achievable.contains(m)).collect(),
            None => Vec::new(),
        }
    }
}

/// Answer to a single "exactly m colors" question.
#[derive(Clone, Debug)]
pub struct Decision {
    pub witness: Option<EdgeColoring>,
    pub exhausted: bool,
    pub stats: SearchStats,
}

/// Worker count and budget for a search.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub budget: Budget,
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Budget::default(),
            threads: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }
}

/// Is there an avoiding coloring of `K_n` with exactly `m` colors?
pub fn avoidable(g: &Graph, n: usize, m: usize, kind: PhiKind, budget: Budget) -> Result<Decision> {
    let idx = enumerate_copies(g, n)?;
    decide_with_index(&idx, m, kind, &SearchConfig::default().with_budget(budget))
}

pub fn decide_with_index(idx: &CopyIndex, m: usize, kind: PhiKind, cfg: &SearchConfig) -> Result<Decision> {
    let e = edge_count(idx.host_order());
    if m == 0 || m > e {
        return Err(Error::Domain(format!("color count must lie in 1..={e}, got {m}")));
    }
    let out = run(idx, kind, Goal::Exactly(m), cfg)?;
    Ok(Decision {
        witness: out.witness,
        exhausted: out.exhausted,
        stats: out.stats,
    })
}

/// Full achievable set and `phi` for `(g, n, kind)`, single-threaded.
pub fn phi_exact(g: &Graph, n: usize, kind: PhiKind, budget: Budget) -> Result<SearchOutcome> {
    let idx = enumerate_copies(g, n)?;
    run(&idx, kind, Goal::AllCounts, &SearchConfig::default().with_budget(budget))
}

/// Searches with an explicit goal and configuration.
pub fn search(idx: &CopyIndex, kind: PhiKind, goal: Goal, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if let Goal::Exactly(m) = goal {
        let e = edge_count(idx.host_order());
        if m == 0 || m > e {
            return Err(Error::Domain(format!("color count must lie in 1..={e}, got {m}")));
        }
    }
    run(idx, kind, goal, cfg)
}

/// True when `coloring` contains no `kind`-good copy of `g`, certifying
/// `phi >= color_count + 1`.
pub fn verify_lower_bound(coloring: &EdgeColoring, g: &Graph, kind: PhiKind) -> Result<bool> {
    let idx = enumerate_copies(g, coloring.n())?;
    Ok(find_good_copy(coloring, &idx, kind)?.is_none())
}

/// Shape of a color class that lies entirely at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassShape {
    SingleEdge,
    Star,
}

/// Colors whose whole class is incident with `v`.
pub fn critical_colors(coloring: &EdgeColoring, v: usize) -> Result<Vec<(u32, ClassShape)>> {
    let n = coloring.n();
    if v >= n {
        return Err(Error::Domain(format!("vertex {v} not in K_{n}")));
    }
    let pairs = crate::coloring::edge_pairs(n);
    Ok(coloring
        .classes()
        .into_iter()
        .filter(|(_, edges)| edges.iter().all(|&e| pairs[e].0 == v || pairs[e].1 == v))
        .map(|(c, edges)| {
            let shape = if edges.len() == 1 {
                ClassShape::SingleEdge
            } else {
                ClassShape::Star
            };
            (c, shape)
        })
        .collect())
}

// ---------------------------------------------------------------------------
// engine

struct Shared<'a> {
    idx: &'a CopyIndex,
    kind: PhiKind,
    goal: Goal,
    edges: usize,
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
    /// Best count seen by any worker, for the max-only bound.
    best: AtomicUsize,
    /// Lowest task index that found an exact-goal witness.
    first_hit: AtomicUsize,
}

impl Shared<'_> {
    fn stopped(&self, task: usize) -> bool {
        self.out_of_budget.load(Ordering::Relaxed)
            || (matches!(self.goal, Goal::Exactly(_)) && self.first_hit.load(Ordering::Relaxed) < task)
    }
}

#[derive(Default)]
struct TaskResult {
    achievable: BTreeSet<usize>,
    best: Option<(usize, Vec<u32>)>,
    stats: SearchStats,
}

struct Worker<'s, 'a> {
    sh: &'s Shared<'a>,
    task: usize,
    colors: Vec<u32>,
    scratch: Vec<u32>,
    pending_nodes: u64,
    halted: bool,
    res: TaskResult,
}

const FLUSH_EVERY: u64 = 1 << 12;

impl<'s, 'a> Worker<'s, 'a> {
    fn new(sh: &'s Shared<'a>, task: usize) -> Self {
        Worker {
            sh,
            task,
            colors: vec![0; sh.edges],
            scratch: Vec::with_capacity(sh.idx.pattern().size()),
            pending_nodes: 0,
            halted: false,
            res: TaskResult::default(),
        }
    }

    /// Counts a node and, every few thousand, refreshes the budget check.
    #[inline]
    fn tick(&mut self) -> bool {
        self.res.stats.nodes += 1;
        self.pending_nodes += 1;
        if self.pending_nodes >= FLUSH_EVERY {
            self.flush();
        }
        !self.halted
    }

    fn flush(&mut self) {
        let total = self.sh.nodes.fetch_add(self.pending_nodes, Ordering::Relaxed) + self.pending_nodes;
        self.pending_nodes = 0;
        if total > self.sh.budget.max_nodes() || self.sh.start.elapsed() > self.sh.budget.max_time() {
            self.sh.out_of_budget.store(true, Ordering::Relaxed);
        }
        if self.sh.stopped(self.task) {
            self.halted = true;
        }
    }

    /// Whether some copy completed by edge `t` is good.
    #[inline]
    fn closes_good_copy(&mut self, t: usize) -> bool {
        let copies = self.sh.idx.copies();
        for &ci in self.sh.idx.completing_at(t) {
            if copies[ci as usize].is_good(&self.colors, self.sh.kind, &mut self.scratch) {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self, used: usize) {
        if matches!(self.sh.goal, Goal::Exactly(m) if m != used) {
            return;
        }
        self.res.achievable.insert(used);
        let better = match &self.res.best {
            None => true,
            Some((m, _)) => used > *m,
        };
        match self.sh.goal {
            Goal::Exactly(_) => {
                if self.res.best.is_none() {
                    self.res.best = Some((used, self.colors.clone()));
                }
                self.sh.first_hit.fetch_min(self.task, Ordering::Relaxed);
                self.halted = true;
            }
            _ => {
                if better {
                    self.res.best = Some((used, self.colors.clone()));
                    self.sh.best.fetch_max(used, Ordering::Relaxed);
                }
            }
        }
    }

    fn dfs(&mut self, t: usize, used: usize) {
        if t == self.sh.edges {
            self.leaf(used);
            return;
        }
        let remaining = self.sh.edges - t;
        match self.sh.goal {
            Goal::MaxOnly => {
                if used + remaining < self.sh.best.load(Ordering::Relaxed) {
                    self.res.stats.bound_cuts += 1;
                    return;
                }
            }
            Goal::Exactly(m) => {
                if used > m || used + remaining < m {
                    self.res.stats.bound_cuts += 1;
                    return;
                }
            }
            Goal::AllCounts => {}
        }
        let fresh_allowed = match self.sh.goal {
            Goal::Exactly(m) => used < m,
            _ => true,
        };
        let top = if fresh_allowed { used } else { used - 1 };
        for c in 0..=top {
            if !self.tick() {
                return;
            }
            self.colors[t] = c as u32;
            if self.closes_good_copy(t) {
                self.res.stats.prunes += 1;
                continue;
            }
            self.dfs(t + 1, used.max(c + 1));
            if self.halted {
                return;
            }
        }
    }
}

/// Restricted-growth prefixes of length `depth` with no good copy inside,
/// in lex order, each with its color count.
fn prefixes(sh: &Shared<'_>, depth: usize) -> Vec<(Vec<u32>, usize)> {
    let mut out = Vec::new();
    let mut w = Worker::new(sh, 0);
    fn rec(w: &mut Worker<'_, '_>, t: usize, used: usize, depth: usize, out: &mut Vec<(Vec<u32>, usize)>) {
        if t == depth {
            out.push((w.colors[..depth].to_vec(), used));
            return;
        }
        for c in 0..=used {
            w.colors[t] = c as u32;
            if !w.closes_good_copy(t) {
                rec(w, t + 1, used.max(c + 1), depth, out);
            }
        }
    }
    rec(&mut w, 0, 0, depth, &mut out);
    out
}

fn split_depth(edges: usize, threads: usize) -> usize {
    if threads <= 1 {
        return 0;
    }
    // Bell numbers grow fast; aim for a few dozen tasks per worker.
    let target = 32 * threads as u64;
    let mut bell: Vec<u64> = vec![1];
    let mut row = vec![1u64];
    for d in 1..=edges {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
        bell.push(row[0]);
        if row[0] >= target {
            return d.min(edges.saturating_sub(1));
        }
    }
    edges.saturating_sub(1)
}

fn run(idx: &CopyIndex, kind: PhiKind, goal: Goal, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let edges = edge_count(idx.host_order());
    let sh = Shared {
        idx,
        kind,
        goal,
        edges,
        budget: cfg.budget,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        out_of_budget: AtomicBool::new(false),
        best: AtomicUsize::new(0),
        first_hit: AtomicUsize::new(usize::MAX),
    };

    let depth = split_depth(edges, cfg.threads);
    let tasks = prefixes(&sh, depth);
    let results: Vec<Mutex<Option<TaskResult>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);

    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= tasks.len() {
            break;
        }
        let (prefix, used) = &tasks[i];
        let mut w = Worker::new(&sh, i);
        if !sh.stopped(i) {
            w.colors[..depth].copy_from_slice(prefix);
            w.dfs(depth, *used);
        }
        w.flush();
        *results[i].lock().unwrap() = Some(w.res);
    };
    if cfg.threads <= 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..cfg.threads {
                s.spawn(work);
            }
        });
    }

    let mut achievable = BTreeSet::new();
    let mut stats = SearchStats::default();
    let mut best: Option<(usize, Vec<u32>)> = None;
    for r in results {
        let r = r.into_inner().unwrap().unwrap_or_default();
        achievable.extend(r.achievable.iter().copied());
        stats.absorb(&r.stats);
        if let Some((m, colors)) = r.best {
            // tasks are in lex order, so only a strictly larger count replaces
            let take = match (&best, goal) {
                (None, _) => true,
                (Some(_), Goal::Exactly(_)) => false,
                (Some((bm, _)), _) => m > *bm,
            };
            if take {
                best = Some((m, colors));
            }
        }
    }
    stats.elapsed_ms = sh.start.elapsed().as_millis() as u64;
    let exhausted = !sh.out_of_budget.load(Ordering::Relaxed);

    let witness = match best {
        Some((_, colors)) => {
            let w = EdgeColoring::new(idx.host_order(), colors)?;
            if find_good_copy(&w, idx, kind)?.is_some() {
                return Err(Error::WitnessRejected("search produced a coloring with a good copy".into()));
            }
            Some(w)
        }
        None => None,
    };
    let phi = achievable.iter().next_back().map_or(1, |m| m + 1);
    Ok(SearchOutcome {
        kind,
        n: idx.host_order(),
        phi,
        achievable,
        witness,
        stats,
        exhausted,
    })
}
