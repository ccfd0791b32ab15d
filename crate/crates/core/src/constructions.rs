//! Lower-bound coloring patterns.
//!
//! Host vertices are `v_0 .. v_{n-1}`. Every generator returns its coloring in
//! restricted-growth form.

use std::fmt;

use crate::coloring::{edge_count, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, turan_ex, Graph, MAX_HOST_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    Monochromatic(usize),
    Rainbow(usize),
    /// Edge `v_i v_j`, `i < j`, gets color `j`.
    Lex(usize),
    /// `Klex(n, 1, h)`.
    Klek(usize, usize),
    /// `(n, k, h)`: the first `h` vertices form a rainbow clique; for each
    /// later `v_j` the edges to `v_0 .. v_{k-2}` get private colors and the
    /// remaining backward edges share one color.
    Klex(usize, usize, usize),
    /// `(n, k)`: every edge meeting the first `k` vertices is distinct, the
    /// rest monochromatic.
    Krs(usize, usize),
    /// `(n, k, t, h)`: rainbow on edges meeting the first `k` vertices,
    /// `Klex(n-k, t, h)` on the others.
    SplitLex(usize, usize, usize, usize),
    /// `(n, k)`: `n = qk + r`; a block of `r` vertices then `q` blocks of
    /// `k`, each block a rainbow clique with its own colors, all cross edges
    /// one further color.
    Clique(usize, usize),
    /// `(n, k)`: balanced contiguous `k`-partition, larger parts first;
    /// distinct colors across parts, LEX inside each part.
    RainbowMultipartite(usize, usize),
    /// `(n, k, t, h)`: as above with `Klex(|A_i|, t, h)` inside each part.
    RainbowMultipartiteLex(usize, usize, usize, usize),
    /// `(n, s)`: rainbow clique on the first `s - 1` vertices, everything
    /// else one color.
    RainbowKpMonoRest(usize, usize),
    /// Rainbow star at `v_{n-1}` plus LEX on the other vertices.
    LexPlusRainbowStar(usize),
    /// Recursive: a coloring of the first `n - 2` vertices, then `x = v_{n-2}`
    /// and `y = v_{n-1}` with three new colors on `xy`, the `x` star and the
    /// `y` star. Bases: one edge for `n = 2`, rainbow triangle for `n = 3`.
    PairGrowth(usize),
    /// `v_0` and `v_1` joined by color 4, `v_0` to the rest color 1, `v_1`
    /// to the rest color 2, the rest monochromatic in color 3.
    CpK4eFourColoring(usize),
    /// Odd `n`: `(n-1)/2` Hamiltonian cycles, one per color.
    HamiltonianDecomposition(usize),
    /// `(n, r)` with `n = 2r - 3`: two circulant `(r-2)`-regular classes.
    TwoRegularSplit(usize, usize),
    /// `H` on the first `|H|` vertices rainbow, all other edges one color.
    C4FreeRainbowPlusMono(usize, Graph),
}

use PatternSpec::*;

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

impl PatternSpec {
    pub fn n(&self) -> usize {
        match *self {
            Monochromatic(n)
            | Rainbow(n)
            | Lex(n)
            | Klek(n, _)
            | Klex(n, _, _)
            | Krs(n, _)
            | SplitLex(n, _, _, _)
            | Clique(n, _)
            | RainbowMultipartite(n, _)
            | RainbowMultipartiteLex(n, _, _, _)
            | RainbowKpMonoRest(n, _)
            | LexPlusRainbowStar(n)
            | PairGrowth(n)
            | CpK4eFourColoring(n)
            | HamiltonianDecomposition(n)
            | TwoRegularSplit(n, _)
            | C4FreeRainbowPlusMono(n, _) => n,
        }
    }

    /// Whether `claimed_colors` is a closed form rather than a count of the
    /// generated coloring.
    pub fn has_closed_form(&self) -> bool {
        !matches!(self, RainbowMultipartiteLex(..))
    }

    /// Checks parameter domains.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if !(2..=MAX_HOST_ORDER).contains(&n) {
            return Err(domain(format!("host order must lie in 2..={MAX_HOST_ORDER}, got {n}")));
        }
        match self {
            Monochromatic(_) | Rainbow(_) | Lex(_) | PairGrowth(_) => Ok(()),
            Klek(n, h) => klex_domain(*n, 1, *h),
            Klex(n, k, h) => klex_domain(*n, *k, *h),
            Krs(n, k) => {
                if *k >= 1 && k + 2 <= *n {
                    Ok(())
                } else {
                    Err(domain(format!("krs needs 1 <= k <= n-2, got k={k}, n={n}")))
                }
            }
            SplitLex(n, k, t, h) => {
                if *k == 0 || k + 2 > *n {
                    return Err(domain(format!("splitlex needs 1 <= k <= n-2, got k={k}, n={n}")));
                }
                klex_domain(n - k, *t, *h)
            }
            Clique(n, k) => {
                if *k >= 2 && k + 1 <= *n {
                    Ok(())
                } else {
                    Err(domain(format!("clique needs k >= 2 and n >= k+1, got k={k}, n={n}")))
                }
            }
            RainbowMultipartite(n, k) => {
                if *k >= 2 && k <= n {
                    Ok(())
                } else {
                    Err(domain(format!("rmulti needs 2 <= k <= n, got k={k}, n={n}")))
                }
            }
            RainbowMultipartiteLex(n, k, t, h) => {
                if *k < 2 || k > n {
                    return Err(domain(format!("rmultilex needs 2 <= k <= n, got k={k}, n={n}")));
                }
                klex_domain(n / k, *t, *h)
            }
            RainbowKpMonoRest(n, s) => {
                if *s >= 2 && s <= n {
                    Ok(())
                } else {
                    Err(domain(format!("rainbow-kp-mono needs 2 <= s <= n, got s={s}, n={n}")))
                }
            }
            LexPlusRainbowStar(n) => {
                if *n >= 3 {
                    Ok(())
                } else {
                    Err(domain("lexstar needs n >= 3"))
                }
            }
            CpK4eFourColoring(n) => {
                if *n >= 4 {
                    Ok(())
                } else {
                    Err(domain("cp-k4e needs n >= 4"))
                }
            }
            HamiltonianDecomposition(n) => {
                if *n >= 3 && n % 2 == 1 {
                    Ok(())
                } else {
                    Err(domain(format!("hamdec needs odd n >= 3, got {n}")))
                }
            }
            TwoRegularSplit(n, r) => {
                if *r < 4 || r % 2 == 1 {
                    return Err(domain(format!(
                        "tworeg needs even r >= 4 (an (r-2)-regular graph on 2r-3 vertices needs r-2 even), got r={r}"
                    )));
                }
                if *n != 2 * r - 3 {
                    return Err(domain(format!("tworeg needs n = 2r-3 = {}, got {n}", 2 * r - 3)));
                }
                Ok(())
            }
            C4FreeRainbowPlusMono(n, h) => {
                if h.order() > *n {
                    return Err(Error::PatternTooLarge {
                        pattern: h.order(),
                        host: *n,
                    });
                }
                if !h.is_c4_free() {
                    return Err(domain(format!("graph {} contains a C4", h.label())));
                }
                Ok(())
            }
        }
    }
}

fn klex_domain(n: usize, k: usize, h: usize) -> Result<()> {
    if k >= 1 && h >= k + 1 && h <= n {
        Ok(())
    } else {
        Err(domain(format!("klex needs k >= 1 and k+1 <= h <= n, got k={k}, h={h}, n={n}")))
    }
}

/// Raw (not yet canonical) color assignment for `Klex(n, k, h)` on the given
/// vertex block, with colors offset by `base`. Returns the next free color.
fn paint_klex(colors: &mut [Vec<u32>], verts: &[usize], k: usize, h: usize, mut base: u32) -> u32 {
    for j in 0..verts.len() {
        if j < h {
            for i in 0..j {
                set(colors, verts[i], verts[j], base);
                base += 1;
            }
        } else {
            for i in 0..j {
                if i + 1 < k {
                    set(colors, verts[i], verts[j], base);
                    base += 1;
                }
            }
            for i in (k - 1)..j {
                set(colors, verts[i], verts[j], base);
            }
            base += 1;
        }
    }
    base
}

fn paint_lex(colors: &mut [Vec<u32>], verts: &[usize], mut base: u32) -> u32 {
    for j in 1..verts.len() {
        for i in 0..j {
            set(colors, verts[i], verts[j], base);
        }
        base += 1;
    }
    base
}

fn set(colors: &mut [Vec<u32>], a: usize, b: usize, c: u32) {
    colors[a][b] = c;
    colors[b][a] = c;
}

/// Colors `K_n` per `spec`.
pub fn generate(spec: &PatternSpec) -> Result<EdgeColoring> {
    spec.validate()?;
    let n = spec.n();
    let mut m = vec![vec![u32::MAX; n]; n];
    let all: Vec<usize> = (0..n).collect();
    match spec {
        Monochromatic(_) => fill_unset(&mut m, 0),
        Rainbow(_) => {
            let mut c = 0;
            for j in 0..n {
                for i in 0..j {
                    set(&mut m, i, j, c);
                    c += 1;
                }
            }
        }
        Lex(_) => {
            paint_lex(&mut m, &all, 0);
        }
        Klek(_, h) => {
            paint_klex(&mut m, &all, 1, *h, 0);
        }
        Klex(_, k, h) => {
            paint_klex(&mut m, &all, *k, *h, 0);
        }
        Krs(_, k) => {
            let next = paint_rainbow_block(&mut m, *k, 0);
            fill_unset(&mut m, next);
        }
        SplitLex(_, k, t, h) => {
            let next = paint_rainbow_block(&mut m, *k, 0);
            paint_klex(&mut m, &all[*k..], *t, *h, next);
        }
        Clique(_, k) => {
            let r = n % k;
            let mut next = 0;
            let mut start = 0;
            let mut sizes = vec![r];
            sizes.extend(std::iter::repeat(*k).take(n / k));
            for size in sizes {
                for j in start..start + size {
                    for i in start..j {
                        set(&mut m, i, j, next);
                        next += 1;
                    }
                }
                start += size;
            }
            fill_unset(&mut m, next);
        }
        RainbowMultipartite(_, k) | RainbowMultipartiteLex(_, k, _, _) => {
            let parts = balanced_parts(n, *k);
            let mut next = 0;
            for part in &parts {
                next = match spec {
                    RainbowMultipartiteLex(_, _, t, h) => paint_klex(&mut m, part, *t, *h, next),
                    _ => paint_lex(&mut m, part, next),
                };
            }
            for j in 0..n {
                for i in 0..j {
                    if m[i][j] == u32::MAX {
                        set(&mut m, i, j, next);
                        next += 1;
                    }
                }
            }
        }
        RainbowKpMonoRest(_, s) => {
            let mut next = 0;
            for j in 0..s - 1 {
                for i in 0..j {
                    set(&mut m, i, j, next);
                    next += 1;
                }
            }
            fill_unset(&mut m, next);
        }
        LexPlusRainbowStar(_) => {
            let next = paint_lex(&mut m, &all[..n - 1], 0);
            for i in 0..n - 1 {
                set(&mut m, i, n - 1, next + i as u32);
            }
        }
        PairGrowth(_) => paint_pair_growth(&mut m, n),
        CpK4eFourColoring(_) => {
            fill_unset(&mut m, 2);
            for v in 2..n {
                set(&mut m, 0, v, 0);
                set(&mut m, 1, v, 1);
            }
            set(&mut m, 0, 1, 3);
        }
        HamiltonianDecomposition(_) => {
            let half = (n - 1) / 2;
            let ring = n - 1;
            let inf = n - 1;
            for c in 0..half {
                let mut path = Vec::with_capacity(ring);
                path.push(c);
                for s in 1..=half {
                    path.push((c + s) % ring);
                    if path.len() < ring {
                        path.push((c + ring - s) % ring);
                    }
                }
                for w in path.windows(2) {
                    set(&mut m, w[0], w[1], c as u32);
                }
                set(&mut m, inf, path[0], c as u32);
                set(&mut m, inf, *path.last().unwrap(), c as u32);
            }
        }
        TwoRegularSplit(_, r) => {
            let low = (r - 2) / 2;
            for j in 0..n {
                for i in 0..j {
                    let d = (j - i).min(n - (j - i));
                    set(&mut m, i, j, if d <= low { 0 } else { 1 });
                }
            }
        }
        C4FreeRainbowPlusMono(_, h) => {
            for (c, &(a, b)) in h.edges().iter().enumerate() {
                set(&mut m, a, b, c as u32);
            }
            fill_unset(&mut m, h.size() as u32);
        }
    }
    let coloring = EdgeColoring::from_fn(n, |i, j| m[i][j])?;
    debug_assert!(coloring.colors().iter().all(|&c| c != u32::MAX));
    Ok(coloring.canonicalize())
}

/// Distinct colors on all edges meeting the first `k` vertices.
fn paint_rainbow_block(m: &mut [Vec<u32>], k: usize, mut next: u32) -> u32 {
    let n = m.len();
    for i in 0..k {
        for j in i + 1..n {
            set(m, i, j, next);
            next += 1;
        }
    }
    next
}

fn fill_unset(m: &mut [Vec<u32>], c: u32) {
    let n = m.len();
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] == u32::MAX {
                set(m, i, j, c);
            }
        }
    }
}

fn paint_pair_growth(m: &mut [Vec<u32>], n: usize) {
    let mut next = match n % 2 {
        0 => {
            set(m, 0, 1, 0);
            1
        }
        _ => {
            set(m, 0, 1, 0);
            set(m, 0, 2, 1);
            set(m, 1, 2, 2);
            3
        }
    };
    let mut z = 2 + n % 2;
    while z < n {
        let (x, y) = (z, z + 1);
        set(m, x, y, next);
        for v in 0..z {
            set(m, x, v, next + 1);
            set(m, y, v, next + 2);
        }
        next += 3;
        z += 2;
    }
}

/// Balanced contiguous `k`-partition of `0..n`, larger parts first.
pub fn balanced_parts(n: usize, k: usize) -> Vec<Vec<usize>> {
    let (q, r) = (n / k, n % k);
    let mut out = Vec::with_capacity(k);
    let mut start = 0;
    for i in 0..k {
        let size = q + usize::from(i < r);
        out.push((start..start + size).collect());
        start += size;
    }
    out
}

/// Number of colors the pattern is known to use.
pub fn claimed_colors(spec: &PatternSpec) -> Result<usize> {
    spec.validate()?;
    let n = spec.n();
    Ok(match spec {
        Monochromatic(_) => 1,
        Rainbow(_) => edge_count(n),
        Lex(_) => n - 1,
        Klek(_, h) => klex_count(n, 1, *h),
        Klex(_, k, h) => klex_count(n, *k, *h),
        Krs(_, k) => k * (n - k) + binom2(*k) + 1,
        SplitLex(_, k, t, h) => k * (n - k) + binom2(*k) + (n - k - h) * t + binom2(*h),
        Clique(_, k) => {
            let r = n % k;
            (n - r) * (k - 1) / 2 + binom2(r) + 1
        }
        RainbowMultipartite(_, k) => n - k + turan_ex(n, k + 1)? as usize,
        RainbowMultipartiteLex(..) => generate(spec)?.color_count(),
        RainbowKpMonoRest(_, s) => binom2(s - 1) + 1,
        LexPlusRainbowStar(_) => 2 * n - 3,
        PairGrowth(_) => (3 * n - 3) / 2,
        CpK4eFourColoring(_) => 4,
        HamiltonianDecomposition(_) => (n - 1) / 2,
        TwoRegularSplit(..) => 2,
        C4FreeRainbowPlusMono(_, h) => h.size() + usize::from(h.size() < edge_count(n)),
    })
}

fn klex_count(n: usize, k: usize, h: usize) -> usize {
    (n - h) * k + binom2(h)
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monochromatic(_) => write!(f, "mono"),
            Rainbow(_) => write!(f, "rainbow"),
            Lex(_) => write!(f, "lex"),
            Klek(_, h) => write!(f, "klek:{h}"),
            Klex(_, k, h) => write!(f, "klex:{k},{h}"),
            Krs(_, k) => write!(f, "krs:{k}"),
            SplitLex(_, k, t, h) => write!(f, "splitlex:{k},{t},{h}"),
            Clique(_, k) => write!(f, "clique:{k}"),
            RainbowMultipartite(_, k) => write!(f, "rmulti:{k}"),
            RainbowMultipartiteLex(_, k, t, h) => write!(f, "rmultilex:{k},{t},{h}"),
            RainbowKpMonoRest(_, s) => write!(f, "rainbow-kp-mono:{s}"),
            LexPlusRainbowStar(_) => write!(f, "lexstar"),
            PairGrowth(_) => write!(f, "pairgrowth"),
            CpK4eFourColoring(_) => write!(f, "cp-k4e"),
            HamiltonianDecomposition(_) => write!(f, "hamdec"),
            TwoRegularSplit(_, r) => write!(f, "tworeg:{r}"),
            C4FreeRainbowPlusMono(_, h) => write!(f, "c4free:{}", h.to_edge_list_string()),
        }
    }
}

/// Parses the pattern grammar (`lex`, `klex:2,3`, `krs:1`, ...) for host
/// order `n`.
pub fn parse_pattern(text: &str, n: usize) -> Result<PatternSpec> {
    let text = text.trim();
    let (head, args) = match text.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (text, None),
    };
    let head = head.to_ascii_lowercase();
    if head == "c4free" {
        let g = parse_graph(args.ok_or_else(|| Error::Parse("c4free needs a graph".into()))?)?;
        let spec = C4FreeRainbowPlusMono(n, g);
        spec.validate()?;
        return Ok(spec);
    }
    let nums: Vec<usize> = match args {
        None => Vec::new(),
        Some(a) => a
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad pattern parameter `{x}` in `{text}`")))
            })
            .collect::<Result<_>>()?,
    };
    let arity = |want: usize| -> Result<()> {
        if nums.len() == want {
            Ok(())
        } else {
            Err(Error::Parse(format!("`{head}` takes {want} parameter(s), got {}", nums.len())))
        }
    };
    let spec = match head.as_str() {
        "mono" => arity(0).map(|_| Monochromatic(n)),
        "rainbow" => arity(0).map(|_| Rainbow(n)),
        "lex" => arity(0).map(|_| Lex(n)),
        "klek" => arity(1).map(|_| Klek(n, nums[0])),
        "klex" => arity(2).map(|_| Klex(n, nums[0], nums[1])),
        "krs" => arity(1).map(|_| Krs(n, nums[0])),
        "splitlex" => arity(3).map(|_| SplitLex(n, nums[0], nums[1], nums[2])),
        "clique" => arity(1).map(|_| Clique(n, nums[0])),
        "rmulti" => arity(1).map(|_| RainbowMultipartite(n, nums[0])),
        "rmultilex" => arity(3).map(|_| RainbowMultipartiteLex(n, nums[0], nums[1], nums[2])),
        "rainbow-kp-mono" => arity(1).map(|_| RainbowKpMonoRest(n, nums[0])),
        "lexstar" => arity(0).map(|_| LexPlusRainbowStar(n)),
        "pairgrowth" => arity(0).map(|_| PairGrowth(n)),
        "cp-k4e" => arity(0).map(|_| CpK4eFourColoring(n)),
        "hamdec" => arity(0).map(|_| HamiltonianDecomposition(n)),
        "tworeg" => arity(1).map(|_| TwoRegularSplit(n, nums[0])),
        _ => Err(Error::UnknownFamily(text.to_string())),
    }?;
    spec.validate()?;
    Ok(spec)
}
