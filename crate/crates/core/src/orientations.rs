//! Odd-majority orientations (OMO) and odd-even orderings (OEO).
//!
//! A permutation lists the vertices by position. Every edge points from the
//! later endpoint to the earlier one, so a vertex's out-degree is its number
//! of earlier neighbors, its backward count.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the exact solver accepts.
pub const EXACT_ORDER_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderingKind {
    /// Every backward count is 0 or odd.
    Omo,
    /// Every backward count is 0 or odd, or even with no later neighbor.
    Oeo,
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderingKind::Omo => "omo",
            OrderingKind::Oeo => "oeo",
        })
    }
}

impl FromStr for OrderingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "omo" => Ok(OrderingKind::Omo),
            "oeo" => Ok(OrderingKind::Oeo),
            _ => Err(Error::Parse(format!("unknown ordering kind `{s}` (expected omo|oeo)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexStatus {
    Zero,
    Odd,
    /// Even backward count and no later neighbor.
    EvenClosed,
    /// Even positive backward count with a later neighbor.
    Violating,
}

/// How a permutation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Forest,
    Bipartite,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingResult {
    pub kind: OrderingKind,
    /// `perm[i]` is the vertex in position `i`.
    pub perm: Vec<usize>,
    /// Backward count of each vertex, indexed by vertex.
    pub backward: Vec<usize>,
    pub status: Vec<VertexStatus>,
    pub method: Method,
}

fn check_perm(g: &Graph, perm: &[usize]) -> Result<Vec<usize>> {
    let n = g.order();
    if perm.len() != n {
        return Err(Error::NotPermutation(format!("length {} for {n} vertices", perm.len())));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in perm.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::NotPermutation(format!("entry {v} out of range or repeated")));
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// Backward counts and per-vertex status of a permutation.
pub fn analyze(g: &Graph, perm: &[usize]) -> Result<(Vec<usize>, Vec<VertexStatus>)> {
    let pos = check_perm(g, perm)?;
    let mut backward = vec![0; g.order()];
    for &(a, b) in g.edges() {
        if pos[a] < pos[b] {
            backward[b] += 1;
        } else {
            backward[a] += 1;
        }
    }
    let status = (0..g.order())
        .map(|v| {
            let b = backward[v];
            if b == 0 {
                VertexStatus::Zero
            } else if b % 2 == 1 {
                VertexStatus::Odd
            } else if b == g.degree(v) {
                VertexStatus::EvenClosed
            } else {
                VertexStatus::Violating
            }
        })
        .collect();
    Ok((backward, status))
}

pub fn verify(g: &Graph, perm: &[usize], kind: OrderingKind) -> Result<bool> {
    let (_, status) = analyze(g, perm)?;
    Ok(status.iter().all(|s| match kind {
        OrderingKind::Omo => matches!(s, VertexStatus::Zero | VertexStatus::Odd),
        OrderingKind::Oeo => *s != VertexStatus::Violating,
    }))
}

fn result(g: &Graph, perm: Vec<usize>, kind: OrderingKind, method: Method) -> Result<OrderingResult> {
    let (backward, status) = analyze(g, &perm)?;
    Ok(OrderingResult {
        kind,
        perm,
        backward,
        status,
        method,
    })
}

/// Leaf-peeling order for a forest: edgeless leftovers first, then the peeled
/// leaves in reverse. Each peeled leaf has exactly one earlier neighbor.
pub fn forest_omo(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_forest() {
        return None;
    }
    let n = g.order();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut peeled = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] || deg[v] != 1 {
            continue;
        }
        alive[v] = false;
        peeled.push(v);
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    perm.extend(peeled.into_iter().rev());
    Some(perm)
}

/// For a bipartite graph, one side first then the other. For OEO any side
/// works. For OMO the side listed first must, in every component, hold all
/// vertices of positive even degree; `None` when some component has them on
/// both sides.
pub fn bipartite_order(g: &Graph, kind: OrderingKind) -> Option<Vec<usize>> {
    let side = g.bipartition()?;
    let mut first = vec![false; g.order()];
    for comp in g.components() {
        let even_side: Vec<bool> = comp
            .iter()
            .filter(|&&v| g.degree(v) > 0 && g.degree(v) % 2 == 0)
            .map(|&v| side[v])
            .collect();
        let lead = match kind {
            OrderingKind::Oeo => false,
            OrderingKind::Omo => match even_side.first() {
                None => false,
                Some(&s) => {
                    if even_side.iter().any(|&x| x != s) {
                        return None;
                    }
                    s
                }
            },
        };
        for &v in &comp {
            first[v] = side[v] == lead;
        }
    }
    let mut perm: Vec<usize> = (0..g.order()).filter(|&v| first[v]).collect();
    perm.extend((0..g.order()).filter(|&v| !first[v]));
    Some(perm)
}

/// The constructive paths only: forests for OMO, bipartite graphs for both.
pub fn constructive(g: &Graph, kind: OrderingKind) -> Option<OrderingResult> {
    let attempt = match kind {
        OrderingKind::Omo => forest_omo(g)
            .map(|p| (p, Method::Forest))
            .or_else(|| bipartite_order(g, kind).map(|p| (p, Method::Bipartite))),
        OrderingKind::Oeo => bipartite_order(g, kind).map(|p| (p, Method::Bipartite)),
    };
    let (perm, method) = attempt?;
    let r = result(g, perm, kind, method).ok()?;
    debug_assert!(verify(g, &r.perm, kind).unwrap());
    Some(r)
}

/// Whether `v` may come right after the vertex set `placed`.
#[inline]
fn may_follow(g: &Graph, placed: u32, v: usize, kind: OrderingKind) -> bool {
    let nb = g.neighbor_mask(v) as u32;
    let b = (nb & placed).count_ones();
    b == 0 || b % 2 == 1 || (kind == OrderingKind::Oeo && nb & !placed == 0)
}

fn exact_cap(g: &Graph) -> Result<()> {
    if g.order() > EXACT_ORDER_CAP {
        return Err(Error::OrderCap {
            order: g.order(),
            cap: EXACT_ORDER_CAP,
        });
    }
    Ok(())
}

/// Number of valid permutations, by dynamic programming over placed sets.
pub fn count(g: &Graph, kind: OrderingKind) -> Result<u64> {
    exact_cap(g)?;
    Ok(ways_table(g, kind)[0])
}

/// `ways[S]`: number of ways to complete a prefix whose vertex set is `S`.
fn ways_table(g: &Graph, kind: OrderingKind) -> Vec<u64> {
    let n = g.order();
    let full = (1u32 << n) - 1;
    let mut ways = vec![0u64; 1 << n];
    ways[full as usize] = 1;
    for s in (0..full).rev() {
        let mut total = 0u64;
        let mut free = full & !s;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            if may_follow(g, s, v, kind) {
                total += ways[(s | 1 << v) as usize];
            }
        }
        ways[s as usize] = total;
    }
    ways
}

/// Lex-least valid permutation, or `None` when there is none.
pub fn solve_exact(g: &Graph, kind: OrderingKind) -> Result<Option<OrderingResult>> {
    exact_cap(g)?;
    let n = g.order();
    let full = (1u32 << n) - 1;
    // completable[S]: some valid completion exists from prefix set S
    let mut completable = vec![false; 1 << n];
    completable[full as usize] = true;
    for s in (0..full).rev() {
        let mut free = full & !s;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            if may_follow(g, s, v, kind) && completable[(s | 1 << v) as usize] {
                completable[s as usize] = true;
                break;
            }
        }
    }
    if !completable[0] {
        return Ok(None);
    }
    let mut perm = Vec::with_capacity(n);
    let mut s = 0u32;
    while s != full {
        let v = (0..n)
            .find(|&v| s >> v & 1 == 0 && may_follow(g, s, v, kind) && completable[(s | 1 << v) as usize])
            .expect("completable prefix extends");
        perm.push(v);
        s |= 1 << v;
    }
    Ok(Some(result(g, perm, kind, Method::Exact)?))
}

/// Constructive path when one applies, else the exact solver.
pub fn solve(g: &Graph, kind: OrderingKind) -> Result<Option<OrderingResult>> {
    if let Some(r) = constructive(g, kind) {
        return Ok(Some(r));
    }
    solve_exact(g, kind)
}

/// Outcome of scanning bipartite graphs whose even-degree vertices form an
/// independent set.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BipartiteOmoReport {
    pub max_order: usize,
    /// Labelled graphs scanned (no isolated vertices, fixed bipartition).
    pub scanned: u64,
    /// Of those, how many have an independent even-degree set.
    pub hypothesis_holds: u64,
    pub with_omo: u64,
    /// Graphs meeting the hypothesis with no OMO, one per isomorphism class,
    /// as edge-list strings.
    pub counterexamples: Vec<String>,
}

/// Scans all bipartite graphs on up to `max_order` vertices without isolated
/// vertices. The even-degree set is independent when no edge joins two
/// even-degree vertices.
pub fn experiment_omo_bipartite(max_order: usize) -> Result<BipartiteOmoReport> {
    if !(2..=10).contains(&max_order) {
        return Err(Error::Domain(format!("experiment order must lie in 2..=10, got {max_order}")));
    }
    let mut report = BipartiteOmoReport {
        max_order,
        ..Default::default()
    };
    let mut seen_forms = std::collections::HashSet::new();
    for order in 2..=max_order {
        for a in 1..=order / 2 {
            let pairs: Vec<(usize, usize)> = (0..a).flat_map(|i| (a..order).map(move |j| (i, j))).collect();
            for mask in 1u64..(1 << pairs.len()) {
                let edges = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]);
                let g = Graph::new(order, edges)?;
                if !g.isolated_vertices().is_empty() {
                    continue;
                }
                report.scanned += 1;
                let even = |v: usize| g.degree(v) % 2 == 0;
                if g.edges().iter().any(|&(x, y)| even(x) && even(y)) {
                    continue;
                }
                report.hypothesis_holds += 1;
                if solve(&g, OrderingKind::Omo)?.is_some() {
                    report.with_omo += 1;
                } else {
                    let form = g.canonical_edges();
                    if seen_forms.insert(form) {
                        report.counterexamples.push(g.to_edge_list_string());
                    }
                }
            }
        }
    }
    Ok(report)
}
