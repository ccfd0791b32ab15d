//! Small simple graphs, the named-graph catalog, and Turán numbers.
//!
//! Vertices are `0..order`. Edges are stored as pairs `(i, j)` with `i < j`
//! in lexicographic order, so two graphs with the same edge set compare equal.
//! Adjacency is kept as one `u64` bitmask per vertex, which is why hosts are
//! capped at 64 vertices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest pattern graph accepted by the catalog and the search layer.
pub const MAX_PATTERN_ORDER: usize = 16;
/// Largest host order representable by the bitmask adjacency.
pub const MAX_HOST_ORDER: usize = 64;

/// A small simple undirected graph.
#[derive(Clone, Debug)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation and in any order; loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGraph("order must be at least 1".into()));
        }
        if order > MAX_HOST_ORDER {
            return Err(Error::ParameterOverflow(format!(
                "order {order} exceeds the cap {MAX_HOST_ORDER}"
            )));
        }
        let mut adj = vec![0u64; order];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a >= order || b >= order {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{order}"
                )));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if adj[i] >> j & 1 == 1 {
                return Err(Error::InvalidGraph(format!("duplicate edge ({i},{j})")));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            list.push((i, j));
        }
        list.sort_unstable();
        Ok(Graph {
            order,
            edges: list,
            adj,
            name: None,
        })
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        Graph::new(order, [])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The catalog name if present, otherwise the explicit `g:` form.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.to_edge_list_string(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && b < self.order && self.adj[a] >> b & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.order).filter(move |&u| mask >> u & 1 == 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Number of vertices incident with at least one edge.
    pub fn non_isolated_count(&self) -> usize {
        (0..self.order).filter(|&v| self.adj[v] != 0).count()
    }

    /// A new graph with the extra edge `ab`.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        Graph::new(self.order, self.edges.iter().copied().chain([(a, b)]))
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let shift = self.order;
        Graph::new(
            self.order + other.order,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift))),
        )
    }

    /// Connected components as vertex lists, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push((0..self.order).filter(|&v| comp >> v & 1 == 1).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// A graph is a forest iff |E| = |V| - #components.
    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order
    }

    /// A proper 2-colouring (`true` = second class), or `None` for non-bipartite
    /// graphs. Each component's smallest vertex is placed in the first class.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order];
        for s in 0..self.order {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for u in self.neighbors(v) {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            stack.push(u);
                        }
                        Some(su) if su == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// Brute-force test for a (not necessarily induced) 4-cycle.
    pub fn is_c4_free(&self) -> bool {
        // a C4 exists iff two vertices share two common neighbours
        for a in 0..self.order {
            for b in a + 1..self.order {
                if (self.adj[a] & self.adj[b]).count_ones() >= 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Lex-least sorted edge list over all relabellings. Isomorphic graphs
    /// give equal results. Runs through every permutation, so keep it to
    /// small orders.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut perm: Vec<usize> = (0..self.order).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        loop {
            let mut e: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            e.sort_unstable();
            if best.as_ref().map_or(true, |b| e < *b) {
                best = Some(e);
            }
            if !crate::embeddings::next_permutation(&mut perm) {
                break;
            }
        }
        best.unwrap_or_default()
    }

    /// Explicit `g:<order>:<a>-<b>,...` form, parseable by [`parse_graph`].
    pub fn to_edge_list_string(&self) -> String {
        let body: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        format!("g:{}:{}", self.order, body.join(","))
    }
}

/// Per-vertex degree parities of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityProfile {
    /// `true` where the degree is odd.
    pub odd: Vec<bool>,
    pub is_odd_graph: bool,
    pub is_even_graph: bool,
}

/// Odd graph: every degree odd. Even graph: every degree even, isolated
/// vertices included (degree 0).
pub fn degree_parity_profile(g: &Graph) -> ParityProfile {
    let odd: Vec<bool> = (0..g.order()).map(|v| g.degree(v) % 2 == 1).collect();
    let is_odd_graph = odd.iter().all(|&o| o);
    let is_even_graph = odd.iter().all(|&o| !o);
    ParityProfile {
        odd,
        is_odd_graph,
        is_even_graph,
    }
}

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Turán number ex(n, K_k): edges of the balanced complete (k-1)-partite graph.
pub fn turan_ex(n: usize, k: usize) -> Result<u64> {
    if k < 3 {
        return Err(Error::Domain(format!("turan_ex needs clique order k >= 3, got {k}")));
    }
    if n == 0 {
        return Err(Error::Domain("turan_ex needs n >= 1".into()));
    }
    let parts = (k - 1) as u64;
    let n = n as u64;
    let (q, r) = (n / parts, n % parts);
    let inside = r * binom2(q + 1) + (parts - r) * binom2(q);
    Ok(binom2(n) - inside)
}

/// Named graph families. Each documents its vertex labelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogId {
    /// `P_k`: path `0-1-...-(k-1)`.
    Path(usize),
    /// `C_k`: cycle `0-1-...-(k-1)-0`.
    Cycle(usize),
    /// `K_k`.
    Complete(usize),
    /// `K_{p,q}`: parts `0..p` and `p..p+q`.
    CompleteBipartite(usize, usize),
    /// `K_{1,r}`: centre 0, leaves `1..=r`.
    Star(usize),
    /// `K_4 - e`: `K_4` without the edge `2-3`; vertices 0 and 1 have degree 3.
    Diamond,
    /// `K_3^+`: triangle `0-1-2` with the pendant edge `0-3`.
    Paw,
    /// `K_{1,k}^+`: star with centre 0 and leaves `1..=k`, plus the pendant edge `1-(k+1)`.
    Broom(usize),
    /// `tK_2`: edges `(2i, 2i+1)`.
    Matching(usize),
    /// Vertex-disjoint union, members laid out in consecutive vertex blocks.
    Union(Vec<(usize, CatalogId)>),
    /// Corona: every vertex `i` of the base gains the leaf `base_order + i`.
    Corona(Box<CatalogId>),
}

impl CatalogId {
    /// Expands the id into its graph.
    pub fn build(&self) -> Result<Graph> {
        let g = self.build_unnamed()?;
        if g.order() > MAX_PATTERN_ORDER {
            return Err(Error::ParameterOverflow(format!(
                "{self} has {} vertices, above the pattern cap {MAX_PATTERN_ORDER}",
                g.order()
            )));
        }
        Ok(g.with_name(self.to_string()))
    }

    fn build_unnamed(&self) -> Result<Graph> {
        use CatalogId::*;
        let cap = |k: usize, what: &str| -> Result<()> {
            if k > MAX_PATTERN_ORDER {
                Err(Error::ParameterOverflow(format!(
                    "{what} parameter {k} exceeds the pattern cap {MAX_PATTERN_ORDER}"
                )))
            } else {
                Ok(())
            }
        };
        let low = |k: usize, min: usize, what: &str| -> Result<()> {
            if k < min {
                Err(Error::Domain(format!("{what} needs parameter >= {min}, got {k}")))
            } else {
                Ok(())
            }
        };
        match self {
            Path(k) => {
                low(*k, 2, "P_k")?;
                cap(*k, "P_k")?;
                Graph::new(*k, (1..*k).map(|i| (i - 1, i)))
            }
            Cycle(k) => {
                low(*k, 3, "C_k")?;
                cap(*k, "C_k")?;
                Graph::new(*k, (0..*k).map(|i| (i, (i + 1) % k)))
            }
            Complete(k) => {
                low(*k, 2, "K_k")?;
                cap(*k, "K_k")?;
                Graph::new(*k, (0..*k).flat_map(|i| (i + 1..*k).map(move |j| (i, j))))
            }
            CompleteBipartite(p, q) => {
                low(*p, 1, "K_{p,q}")?;
                low(*q, 1, "K_{p,q}")?;
                cap(p + q, "K_{p,q}")?;
                let (p, q) = (*p, *q);
                Graph::new(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))
            }
            Star(r) => {
                low(*r, 1, "K_{1,r}")?;
                cap(r + 1, "K_{1,r}")?;
                Graph::new(r + 1, (1..=*r).map(|i| (0, i)))
            }
            Diamond => Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            Paw => Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
            Broom(k) => {
                low(*k, 2, "K_{1,k}^+")?;
                cap(k + 2, "K_{1,k}^+")?;
                Graph::new(k + 2, (1..=*k).map(|i| (0, i)).chain([(1, k + 1)]))
            }
            Matching(t) => {
                low(*t, 1, "tK_2")?;
                cap(2 * t, "tK_2")?;
                Graph::new(2 * t, (0..*t).map(|i| (2 * i, 2 * i + 1)))
            }
            Union(parts) => {
                if parts.is_empty() {
                    return Err(Error::Domain("union needs at least one member".into()));
                }
                let mut acc: Option<Graph> = None;
                let mut total = 0usize;
                for (mult, id) in parts {
                    low(*mult, 1, "union multiplicity")?;
                    let g = id.build_unnamed()?;
                    for _ in 0..*mult {
                        total += g.order();
                        cap(total, "union order")?;
                        acc = Some(match acc {
                            None => g.clone(),
                            Some(a) => a.disjoint_union(&g)?,
                        });
                    }
                }
                Ok(acc.expect("non-empty union"))
            }
            Corona(base) => {
                let h = base.build_unnamed()?;
                let m = h.order();
                cap(2 * m, "corona order")?;
                Graph::new(
                    2 * m,
                    h.edges().iter().copied().chain((0..m).map(|i| (i, m + i))),
                )
            }
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CatalogId::*;
        match self {
            Path(k) => write!(f, "P{k}"),
            Cycle(k) => write!(f, "C{k}"),
            Complete(k) => write!(f, "K{k}"),
            CompleteBipartite(p, q) => write!(f, "K{p},{q}"),
            Star(r) => write!(f, "K1,{r}"),
            Diamond => write!(f, "K4-e"),
            Paw => write!(f, "paw"),
            Broom(k) => write!(f, "K1,{k}+"),
            Matching(1) => write!(f, "P2"),
            Matching(t) => write!(f, "{t}P2"),
            Union(parts) if parts.len() == 1 => {
                let (m, id) = &parts[0];
                if *m == 1 {
                    write!(f, "{id}")
                } else {
                    write!(f, "{m}{id}")
                }
            }
            Union(parts) => {
                write!(f, "union:")?;
                for (i, (m, id)) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    if *m > 1 {
                        write!(f, "{m}")?;
                    }
                    write!(f, "{id}")?;
                }
                Ok(())
            }
            Corona(base) => write!(f, "corona:{base}"),
        }
    }
}

fn parse_usize(s: &str, ctx: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected a number in `{ctx}`, found `{s}`")))
}

/// Parses one catalog term, possibly with a leading multiplicity (`2P3`).
fn parse_term(s: &str) -> Result<(usize, CatalogId)> {
    let digits = s.chars().take_while(|c| c.is_ascii_digit()).count();
    let (mult, rest) = if digits > 0 {
        (parse_usize(&s[..digits], s)?, &s[digits..])
    } else {
        (1, s)
    };
    if mult == 0 {
        return Err(Error::Parse(format!("zero multiplicity in `{s}`")));
    }
    Ok((mult, parse_family(rest)?))
}

fn parse_family(s: &str) -> Result<CatalogId> {
    use CatalogId::*;
    let lower = s.to_ascii_lowercase();
    match lower.as_str() {
        "k4-e" | "diamond" => return Ok(Diamond),
        "paw" | "k3+" => return Ok(Paw),
        _ => {}
    }
    if let Some(base) = lower.strip_prefix("corona:") {
        let (m, id) = parse_term(base)?;
        let id = if m == 1 { id } else { Union(vec![(m, id)]) };
        return Ok(Corona(Box::new(id)));
    }
    let mut chars = s.chars();
    let head = chars.next().ok_or_else(|| Error::Parse("empty graph name".into()))?;
    let body = chars.as_str();
    match head.to_ascii_uppercase() {
        'P' => Ok(Path(parse_usize(body, s)?)),
        'C' => Ok(Cycle(parse_usize(body, s)?)),
        'K' => {
            if let Some((p, q)) = body.split_once(',') {
                let p = parse_usize(p, s)?;
                if let Some(k) = q.strip_suffix('+') {
                    if p != 1 {
                        return Err(Error::UnknownFamily(s.to_string()));
                    }
                    return Ok(Broom(parse_usize(k, s)?));
                }
                let q = parse_usize(q, s)?;
                if p == 1 {
                    Ok(Star(q))
                } else {
                    Ok(CompleteBipartite(p, q))
                }
            } else {
                Ok(Complete(parse_usize(body, s)?))
            }
        }
        _ => Err(Error::UnknownFamily(s.to_string())),
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("union:") {
            let parts = rest
                .split('+')
                .filter(|p| !p.is_empty())
                .map(parse_term)
                .collect::<Result<Vec<_>>>()?;
            return Ok(CatalogId::Union(parts));
        }
        let (mult, id) = parse_term(s)?;
        Ok(match (mult, id) {
            (1, id) => id,
            (t, CatalogId::Path(2)) | (t, CatalogId::Complete(2)) => CatalogId::Matching(t),
            (t, id) => CatalogId::Union(vec![(t, id)]),
        })
    }
}

/// Parses the textual graph grammar: a catalog name (`P4`, `K1,3+`, `paw`,
/// `union:P3+2P2`, `corona:C4`) or an explicit edge list `g:<order>:<edges>`
/// where each edge is either two base-36 digits (`01`) or `a-b`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("g:") {
        let (order, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected g:<order>:<edges>, got `{text}`")))?;
        let order = parse_usize(order, text)?;
        let mut edges = Vec::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let pair = if let Some((a, b)) = tok.split_once('-') {
                (parse_usize(a, tok)?, parse_usize(b, tok)?)
            } else {
                let digits: Vec<u32> = tok
                    .chars()
                    .map(|c| c.to_digit(36))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse(format!("bad edge token `{tok}`")))?;
                if digits.len() != 2 {
                    return Err(Error::Parse(format!(
                        "edge token `{tok}` must be two digits or `a-b`"
                    )));
                }
                (digits[0] as usize, digits[1] as usize)
            };
            edges.push(pair);
        }
        return Graph::new(order, edges);
    }
    text.parse::<CatalogId>()?.build()
}
