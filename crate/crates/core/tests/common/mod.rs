//! Slow reference implementations used as oracles by the integration tests.
//! Nothing here calls into the code under test except for graph parsing and
//! plain data types.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use antiramsey::{Graph, PhiKind};

/// Parity class of one color class, read off its degree map.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Parity {
    Odd,
    Even,
    Mixed,
}

fn class_degrees(edges: &[(usize, usize)], colors: &[u32]) -> BTreeMap<u32, BTreeMap<usize, usize>> {
    let mut out: BTreeMap<u32, BTreeMap<usize, usize>> = BTreeMap::new();
    for (&(a, b), &c) in edges.iter().zip(colors) {
        *out.entry(c).or_default().entry(a).or_default() += 1;
        *out.entry(c).or_default().entry(b).or_default() += 1;
    }
    out
}

fn parity(degs: &BTreeMap<usize, usize>) -> Parity {
    let odd = degs.values().any(|d| d % 2 == 1);
    let even = degs.values().any(|d| d % 2 == 0);
    match (odd, even) {
        (true, false) => Parity::Odd,
        (false, true) => Parity::Even,
        _ => Parity::Mixed,
    }
}

/// Color multiplicities at each vertex.
fn at_vertex(edges: &[(usize, usize)], colors: &[u32]) -> BTreeMap<usize, BTreeMap<u32, usize>> {
    let mut out: BTreeMap<usize, BTreeMap<u32, usize>> = BTreeMap::new();
    for (&(a, b), &c) in edges.iter().zip(colors) {
        *out.entry(a).or_default().entry(c).or_default() += 1;
        *out.entry(b).or_default().entry(c).or_default() += 1;
    }
    out
}

/// Whether a colored copy (edges with colors) is good, straight from the
/// definitions.
pub fn naive_good(kind: PhiKind, edges: &[(usize, usize)], colors: &[u32]) -> bool {
    let classes = class_degrees(edges, colors);
    let local = at_vertex(edges, colors);
    match kind {
        PhiKind::Ar => colors.iter().collect::<BTreeSet<_>>().len() == colors.len(),
        PhiKind::Lr => classes.values().all(|d| d.values().all(|&x| x == 1)),
        PhiKind::Sod => classes.values().all(|d| parity(d) == Parity::Odd),
        PhiKind::Od => local.values().all(|m| m.values().any(|x| x % 2 == 1)),
        PhiKind::Cf => local.values().all(|m| m.values().any(|&x| x == 1)),
        PhiKind::Sp => {
            let ps: Vec<Parity> = classes.values().map(parity).collect();
            ps.iter().all(|&p| p == Parity::Odd) || ps.iter().all(|&p| p == Parity::Even)
        }
        PhiKind::Cp => classes.values().all(|d| parity(d) != Parity::Mixed),
        PhiKind::Lp => local.values().all(|m| {
            let odd = m.values().any(|x| x % 2 == 1);
            let even = m.values().any(|x| x % 2 == 0);
            !(odd && even)
        }),
    }
}

/// All restricted-growth strings of length `len`.
pub fn rgs(len: usize) -> Vec<Vec<u32>> {
    fn rec(cur: &mut Vec<u32>, max: u32, len: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur.push(c);
            rec(cur, max.max(c), len, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur = vec![0];
    rec(&mut cur, 0, len, &mut out);
    out
}

pub fn lex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            v.push((a, b));
        }
    }
    v
}

/// Every injective map of `0..k` into `0..n`.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, k: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, k, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], k, &mut out);
    out
}

/// Does the coloring `colors` of `K_n` (lex pair order) contain a good copy?
pub fn naive_has_good_copy(g: &Graph, n: usize, colors: &[u32], kind: PhiKind, maps: &[Vec<usize>]) -> bool {
    let pairs = lex_pairs(n);
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    maps.iter().any(|f| {
        let host: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (f[a], f[b])).collect();
        let cols: Vec<u32> = host.iter().map(|&(a, b)| colors[index(a, b)]).collect();
        naive_good(kind, &host, &cols)
    })
}

/// Color counts `m` for which some coloring of `K_n` avoids good copies,
/// by trying every restricted-growth coloring without any pruning.
pub fn naive_achievable(g: &Graph, n: usize, kind: PhiKind) -> BTreeSet<usize> {
    let maps = injections(g.order(), n);
    let mut out = BTreeSet::new();
    for colors in rgs(n * (n - 1) / 2) {
        let m = *colors.iter().max().unwrap() as usize + 1;
        if !naive_has_good_copy(g, n, &colors, kind, &maps) {
            out.insert(m);
        }
    }
    out
}

/// Brute-force ordering search over all permutations. `oeo` relaxes the
/// rule for vertices without later neighbors.
pub fn brute_ordering(g: &Graph, oeo: bool) -> Option<Vec<usize>> {
    let n = g.order();
    let maps = injections(n, n);
    maps.into_iter().find(|perm| ordering_ok(g, perm, oeo))
}

pub fn ordering_ok(g: &Graph, perm: &[usize], oeo: bool) -> bool {
    let n = g.order();
    let mut pos = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    (0..n).all(|v| {
        let back = g.neighbors(v).filter(|&u| pos[u] < pos[v]).count();
        let forward = g.neighbors(v).filter(|&u| pos[u] > pos[v]).count();
        back == 0 || back % 2 == 1 || (oeo && forward == 0)
    })
}

/// Trees on `n` vertices, one per isomorphism class, grown leaf by leaf and
/// deduplicated by a rooted-at-center encoding.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level: Vec<Vec<(usize, usize)>> = vec![vec![]];
    let mut order = 1;
    while order < n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..order {
                let mut e = t.clone();
                e.push((v, order));
                let code = tree_code(order + 1, &e);
                if seen.insert(code) {
                    next.push(e);
                }
            }
        }
        level = next;
        order += 1;
    }
    level.into_iter().map(|e| Graph::new(n, e).unwrap()).collect()
}

fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // centers by repeated leaf stripping
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut removed = vec![false; n];
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            for &u in &adj[v] {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    fn enc(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| enc(u, v, adj)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    centers.iter().map(|&c| enc(c, usize::MAX, &adj)).min().unwrap()
}

/// Connected bipartite graphs on `a + b` vertices with sides `0..a` and
/// `a..a+b`, every edge subset of `K_{a,b}` (labelled, not deduplicated).
pub fn connected_bipartite(a: usize, b: usize) -> Vec<Graph> {
    let cross: Vec<(usize, usize)> = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << cross.len()) {
        let edges: Vec<(usize, usize)> = (0..cross.len()).filter(|i| mask >> i & 1 == 1).map(|i| cross[i]).collect();
        let g = Graph::new(a + b, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Largest edge count of a `K_k`-free graph on `n` vertices, by exhaustive
/// branch and bound over edge subsets.
pub fn brute_turan(n: usize, k: usize) -> usize {
    let pairs = lex_pairs(n);
    let mut adj = vec![0u64; n];
    let mut best = 0;
    fn has_clique_with(adj: &[u64], a: usize, b: usize, k: usize) -> bool {
        // a K_k through the edge ab: a K_{k-2} inside their common neighborhood
        fn clique_in(adj: &[u64], cand: u64, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                if clique_in(adj, c & adj[v], need - 1) {
                    return true;
                }
            }
            false
        }
        clique_in(adj, adj[a] & adj[b], k - 2)
    }
    fn rec(i: usize, count: usize, pairs: &[(usize, usize)], adj: &mut [u64], k: usize, best: &mut usize) {
        if count + (pairs.len() - i) <= *best {
            return;
        }
        if i == pairs.len() {
            *best = count;
            return;
        }
        let (a, b) = pairs[i];
        if !has_clique_with(adj, a, b, k) {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            rec(i + 1, count + 1, pairs, adj, k, best);
            adj[a] &= !(1 << b);
            adj[b] &= !(1 << a);
        }
        rec(i + 1, count, pairs, adj, k, best);
    }
    rec(0, 0, &pairs, &mut adj, k, &mut best);
    best
}

/// Every graph with `1..=max_edges` edges and no isolated vertices, one per
/// isomorphism class. The canonical form tries every edge order and
/// orientation and relabels vertices by first appearance, which is cheap
/// for a handful of edges.
pub fn small_graphs(max_edges: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    let mut level: Vec<Vec<(usize, usize)>> = vec![vec![(0, 1)]];
    for size in 1..=max_edges {
        if size > 1 {
            let mut seen = BTreeSet::new();
            let mut next = Vec::new();
            for g in &level {
                let v = g.iter().map(|&(a, b)| a.max(b)).max().unwrap() + 1;
                let mut cands = Vec::new();
                for a in 0..v {
                    for b in a + 1..v {
                        if !g.contains(&(a, b)) {
                            cands.push((a, b));
                        }
                    }
                    cands.push((a, v));
                }
                cands.push((v, v + 1));
                for e in cands {
                    let mut h = g.clone();
                    h.push(e);
                    let code = edge_code(&h);
                    if seen.insert(code.clone()) {
                        next.push(code);
                    }
                }
            }
            level = next;
        }
        for e in &level {
            let order = e.iter().map(|&(a, b)| a.max(b)).max().unwrap() + 1;
            all.push(Graph::new(order, e.clone()).unwrap());
        }
    }
    all
}

fn edge_code(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let m = edges.len();
    let mut idx: Vec<usize> = (0..m).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        for flips in 0u32..(1 << m) {
            let mut label: BTreeMap<usize, usize> = BTreeMap::new();
            let mut code = Vec::with_capacity(m);
            for (pos, &i) in idx.iter().enumerate() {
                let (mut a, mut b) = edges[i];
                if flips >> pos & 1 == 1 {
                    std::mem::swap(&mut a, &mut b);
                }
                let next = label.len();
                let la = *label.entry(a).or_insert(next);
                let next = label.len();
                let lb = *label.entry(b).or_insert(next);
                code.push((la.min(lb), la.max(lb)));
            }
            code.sort_unstable();
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        if !next_perm(&mut idx) {
            break;
        }
    }
    best.unwrap()
}

fn next_perm(a: &mut [usize]) -> bool {
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
