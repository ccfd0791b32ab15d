//! Copies of a pattern inside `K_n`, and the canonical-clique finder.
//!
//! A copy is identified by its edge set. Since patterns have no isolated
//! vertices, two embeddings with the same edge set also share the vertex set,
//! so distinct labelled copies are first computed once on `0..p` and then
//! transported onto every `p`-subset of the host.

use std::collections::HashSet;

use crate::coloring::{edge_count, edge_index, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::predicates::{satisfies, ColoredCopy, PhiKind};

/// Upper limit on the number of copies an index may hold.
pub const MAX_COPIES: u64 = 20_000_000;

/// Upper limit on `p!` when listing the labelled copies on `0..p`.
const MAX_LABELLINGS: u64 = 40_000_000;

/// One copy of the pattern in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Copy {
    /// Host vertices in increasing order; local vertex `i` is `vertices[i]`.
    pub vertices: Vec<usize>,
    /// Host edge indices, increasing.
    pub edges: Vec<usize>,
    /// Local endpoints aligned with `edges`.
    pub local: Vec<(u8, u8)>,
}

impl Copy {
    pub fn colored(&self, coloring: &EdgeColoring) -> ColoredCopy {
        let colors = self.edges.iter().map(|&e| coloring.colors()[e]).collect();
        ColoredCopy::from_parts(coloring.n(), self.vertices.clone(), self.local.clone(), colors)
            .expect("index copies are well formed")
    }

    /// Evaluates `kind` on this copy under `coloring`, using `scratch` for the
    /// gathered colors.
    #[inline]
    pub fn is_good(&self, colors: &[u32], kind: PhiKind, scratch: &mut Vec<u32>) -> bool {
        scratch.clear();
        scratch.extend(self.edges.iter().map(|&e| colors[e]));
        satisfies(kind, self.vertices.len(), &self.local, scratch)
    }
}

/// Every copy of a pattern in `K_n` plus lookup tables for the search.
#[derive(Clone, Debug)]
pub struct CopyIndex {
    pattern: Graph,
    host_order: usize,
    copies: Vec<Copy>,
    by_edge: Vec<Vec<u32>>,
    completes_at: Vec<Vec<u32>>,
}

impl CopyIndex {
    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn copies(&self) -> &[Copy] {
        &self.copies
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    /// Copies that use host edge `e`.
    pub fn containing(&self, e: usize) -> &[u32] {
        &self.by_edge[e]
    }

    /// Copies whose largest edge index is `e`; these become fully colored
    /// exactly when edge `e` is.
    pub fn completing_at(&self, e: usize) -> &[u32] {
        &self.completes_at[e]
    }

    /// Initial uncolored-edge countdown of every copy.
    pub fn countdown_seed(&self) -> usize {
        self.pattern.size()
    }
}

/// Lists all copies of `g` in `K_n`, sorted by edge-index tuple.
pub fn enumerate_copies(g: &Graph, n: usize) -> Result<CopyIndex> {
    let p = g.order();
    if p > n {
        return Err(Error::PatternTooLarge { pattern: p, host: n });
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let labelled = labelled_copies(g)?;
    let subsets = binomial(n as u64, p as u64);
    let total = subsets.saturating_mul(labelled.len() as u64);
    if total > MAX_COPIES {
        return Err(Error::CopyUniverseTooLarge(MAX_COPIES));
    }

    let mut copies = Vec::with_capacity(total as usize);
    let mut subset: Vec<usize> = (0..p).collect();
    loop {
        for local in &labelled {
            let edges = local
                .iter()
                .map(|&(a, b)| edge_index(n, subset[a as usize], subset[b as usize]))
                .collect();
            copies.push(Copy {
                vertices: subset.clone(),
                edges,
                local: local.clone(),
            });
        }
        if !next_subset(&mut subset, n) {
            break;
        }
    }
    copies.sort_unstable_by(|a, b| a.edges.cmp(&b.edges));

    let e_total = edge_count(n);
    let mut by_edge = vec![Vec::new(); e_total];
    let mut completes_at = vec![Vec::new(); e_total];
    for (ci, copy) in copies.iter().enumerate() {
        for &e in &copy.edges {
            by_edge[e].push(ci as u32);
        }
        completes_at[*copy.edges.last().expect("pattern has edges")].push(ci as u32);
    }
    Ok(CopyIndex {
        pattern: g.clone(),
        host_order: n,
        copies,
        by_edge,
        completes_at,
    })
}

/// Distinct edge sets of `g` relabelled by every permutation of `0..p`, each
/// as a sorted list of pairs.
fn labelled_copies(g: &Graph) -> Result<Vec<Vec<(u8, u8)>>> {
    let p = g.order();
    if factorial(p as u64) > MAX_LABELLINGS {
        return Err(Error::CopyUniverseTooLarge(MAX_LABELLINGS));
    }
    let mut seen: HashSet<Vec<(u8, u8)>> = HashSet::new();
    let mut perm: Vec<usize> = (0..p).collect();
    loop {
        let mut edges: Vec<(u8, u8)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a] as u8, perm[b] as u8);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        seen.insert(edges);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Advances a sorted `k`-subset of `0..n` to the next one in lex order.
pub(crate) fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

fn factorial(n: u64) -> u64 {
    (1..=n).fold(1u64, |a, b| a.saturating_mul(b))
}

/// First copy (in index order) that satisfies `kind` under `coloring`.
pub fn find_good_copy(coloring: &EdgeColoring, index: &CopyIndex, kind: PhiKind) -> Result<Option<ColoredCopy>> {
    if coloring.n() != index.host_order {
        return Err(Error::Domain(format!(
            "coloring is on K_{} but the index was built for K_{}",
            coloring.n(),
            index.host_order
        )));
    }
    let mut scratch = Vec::with_capacity(index.pattern.size());
    Ok(index
        .copies
        .iter()
        .find(|c| c.is_good(coloring.colors(), kind, &mut scratch))
        .map(|c| c.colored(coloring)))
}

/// How a canonical clique is colored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueTag {
    Monochromatic,
    Rainbow,
    Lex,
}

/// The first `k`-subset in lex order whose induced coloring is monochromatic,
/// rainbow, or LEX under some vertex ordering. For `k = 2` every pair is
/// reported as monochromatic.
pub fn find_canonical_clique(coloring: &EdgeColoring, k: usize) -> Result<Option<(Vec<usize>, CliqueTag)>> {
    let n = coloring.n();
    if k < 2 || k > n {
        return Err(Error::Domain(format!("clique order must lie in 2..={n}, got {k}")));
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if let Some(tag) = classify_clique(coloring, &subset) {
            return Ok(Some((subset, tag)));
        }
        if !next_subset(&mut subset, n) {
            return Ok(None);
        }
    }
}

fn classify_clique(coloring: &EdgeColoring, s: &[usize]) -> Option<CliqueTag> {
    let mut colors = Vec::with_capacity(s.len() * s.len() / 2);
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            colors.push(coloring.color(a, b));
        }
    }
    let first = colors[0];
    if colors.iter().all(|&c| c == first) {
        return Some(CliqueTag::Monochromatic);
    }
    let mut sorted = colors.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() == colors.len() {
        return Some(CliqueTag::Rainbow);
    }
    is_lex(coloring, s).then_some(CliqueTag::Lex)
}

/// LEX means the vertices can be ordered so that each vertex's backward star
/// is monochromatic with a color used nowhere else. The last vertex of such an
/// order is forced, so peeling greedily decides it.
fn is_lex(coloring: &EdgeColoring, s: &[usize]) -> bool {
    let mut rest: Vec<usize> = s.to_vec();
    while rest.len() > 2 {
        let found = rest.iter().position(|&w| {
            let others: Vec<usize> = rest.iter().copied().filter(|&x| x != w).collect();
            let c = coloring.color(w, others[0]);
            others.iter().all(|&x| coloring.color(w, x) == c)
                && others
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| others[i + 1..].iter().all(|&b| coloring.color(a, b) != c))
        });
        match found {
            Some(i) => {
                rest.remove(i);
            }
            None => return false,
        }
    }
    true
}
