//! Known values and bounds, the implication DAG between the eight kinds, and
//! consistency checks against computed numbers.
//!
//! The shipped table lives in `data/registry.json`. Each record holds pieces
//! valid on a range of `n`; values are formula trees over `n` (and `k` for
//! pattern families such as stars).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{parse_graph, turan_ex, Graph};
use crate::predicates::PhiKind;

/// Integer formula over `n` and an optional family parameter `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Expr {
    Const { value: i64 },
    N,
    K,
    Add { args: Vec<Expr> },
    Sub { a: Box<Expr>, b: Box<Expr> },
    Mul { args: Vec<Expr> },
    FloorDiv { a: Box<Expr>, b: Box<Expr> },
    CeilDiv { a: Box<Expr>, b: Box<Expr> },
    /// `a choose 2`.
    Binom2 { a: Box<Expr> },
    /// `ex(n, K_k)`.
    Turan { n: Box<Expr>, k: Box<Expr> },
    CeilSqrt { a: Box<Expr> },
    Mod { a: Box<Expr>, b: Box<Expr> },
}

impl Expr {
    pub fn eval(&self, n: i64, k: Option<i64>) -> Result<i64> {
        use Expr::*;
        let bad = |m: &str| Error::Registry(m.to_string());
        Ok(match self {
            Const { value } => *value,
            N => n,
            K => k.ok_or_else(|| bad("formula uses k but the pattern has no family parameter"))?,
            Add { args } => args.iter().map(|e| e.eval(n, k)).sum::<Result<i64>>()?,
            Mul { args } => args.iter().map(|e| e.eval(n, k)).product::<Result<i64>>()?,
            Sub { a, b } => a.eval(n, k)? - b.eval(n, k)?,
            FloorDiv { a, b } => {
                let d = b.eval(n, k)?;
                if d == 0 {
                    return Err(bad("division by zero"));
                }
                a.eval(n, k)?.div_euclid(d)
            }
            CeilDiv { a, b } => {
                let d = b.eval(n, k)?;
                if d == 0 {
                    return Err(bad("division by zero"));
                }
                -(-a.eval(n, k)?).div_euclid(d)
            }
            Mod { a, b } => {
                let d = b.eval(n, k)?;
                if d == 0 {
                    return Err(bad("division by zero"));
                }
                a.eval(n, k)?.rem_euclid(d)
            }
            Binom2 { a } => {
                let x = a.eval(n, k)?;
                x * (x - 1) / 2
            }
            Turan { n: nn, k: kk } => {
                let (a, b) = (nn.eval(n, k)?, kk.eval(n, k)?);
                if a < 1 || b < 3 {
                    return Err(bad("turan needs n >= 1 and k >= 3"));
                }
                turan_ex(a as usize, b as usize)? as i64
            }
            CeilSqrt { a } => {
                let x = a.eval(n, k)?;
                if x < 0 {
                    return Err(bad("square root of a negative number"));
                }
                let mut r = (x as f64).sqrt() as i64;
                while r * r < x {
                    r += 1;
                }
                while r > 0 && (r - 1) * (r - 1) >= x {
                    r -= 1;
                }
                r
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Validity {
    /// Holds for every `n` in the piece's range.
    Exact,
    /// Holds for large `n`; the threshold is not known.
    Asymptotic,
    /// Only lower and/or upper bounds are known.
    Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Value {
    Exact { expr: Expr },
    Bounds { lo: Option<Expr>, hi: Option<Expr> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub n_min: Expr,
    #[serde(default)]
    pub n_max: Option<Expr>,
    pub validity: Validity,
    pub value: Value,
    /// The value may fail for very small `n`.
    #[serde(default)]
    pub small_n_caveat: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub kind: PhiKind,
    /// Catalog name, or `K1,k` for the star family.
    pub pattern: String,
    pub pieces: Vec<Piece>,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Known {
    Exact {
        value: i64,
        validity: Validity,
        small_n_caveat: bool,
        source: String,
    },
    Bounds {
        lo: Option<i64>,
        hi: Option<i64>,
        small_n_caveat: bool,
        source: String,
    },
    Unknown,
}

impl Known {
    pub fn exact_value(&self) -> Option<i64> {
        match self {
            Known::Exact { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// Whether `v` is consistent with this entry.
    pub fn admits(&self, v: i64) -> bool {
        match self {
            Known::Exact { value, .. } => *value == v,
            Known::Bounds { lo, hi, .. } => lo.map_or(true, |l| v >= l) && hi.map_or(true, |h| v <= h),
            Known::Unknown => true,
        }
    }
}

const STAR_FAMILY: &str = "K1,k";

/// Which stored pattern a query graph corresponds to.
#[derive(Clone, Debug)]
enum Key {
    Graph(Vec<(usize, usize)>, usize, usize),
    Star,
}

#[derive(Clone, Debug)]
pub struct Registry {
    records: Vec<Record>,
    keys: Vec<Key>,
}

static BUILTIN: OnceLock<Registry> = OnceLock::new();

impl Registry {
    /// The table shipped with the crate.
    pub fn builtin() -> &'static Registry {
        BUILTIN.get_or_init(|| {
            Registry::from_json_str(include_str!("../data/registry.json")).expect("shipped registry is valid")
        })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Registry> {
        Registry::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn from_json_str(text: &str) -> Result<Registry> {
        let records: Vec<Record> = serde_json::from_str(text)?;
        Registry::new(records)
    }

    pub fn new(records: Vec<Record>) -> Result<Registry> {
        let mut keys = Vec::with_capacity(records.len());
        for r in &records {
            if r.pieces.is_empty() {
                return Err(Error::Registry(format!("{} {} has no pieces", r.kind, r.pattern)));
            }
            let key = if r.pattern == STAR_FAMILY {
                Key::Star
            } else {
                let g = parse_graph(&r.pattern)
                    .map_err(|e| Error::Registry(format!("record pattern `{}`: {e}", r.pattern)))?;
                Key::Graph(g.canonical_edges(), g.order(), g.size())
            };
            keys.push(key);
        }
        Ok(Registry { records, keys })
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    /// What is known about `kind` for `pattern` in `K_n`.
    pub fn known(&self, kind: PhiKind, pattern: &str, n: usize) -> Result<Known> {
        let g = parse_graph(pattern)?;
        self.known_for_graph(kind, &g, n)
    }

    pub fn known_for_graph(&self, kind: PhiKind, g: &Graph, n: usize) -> Result<Known> {
        // canonical forms are factorial in the order; only build one if a
        // stored pattern has the same shape
        let canon = self
            .keys
            .iter()
            .any(|k| matches!(k, Key::Graph(_, o, s) if *o == g.order() && *s == g.size()))
            .then(|| g.canonical_edges());
        let star = star_leaves(g);
        let n = n as i64;

        // concrete records first; the star family only if none applies
        for pass in 0..2 {
            let mut best: Option<(u8, Known)> = None;
            for (r, key) in self.records.iter().zip(&self.keys) {
                if r.kind != kind {
                    continue;
                }
                let k = match (pass, key) {
                    (0, Key::Graph(e, order, _)) if Some(e) == canon.as_ref() && *order == g.order() => None,
                    (1, Key::Star) => match star {
                        Some(k) => Some(k as i64),
                        None => continue,
                    },
                    _ => continue,
                };
                for piece in &r.pieces {
                    if piece.n_min.eval(n, k)? > n {
                        continue;
                    }
                    if let Some(max) = &piece.n_max {
                        if max.eval(n, k)? < n {
                            continue;
                        }
                    }
                    let (rank, known) = match &piece.value {
                        Value::Exact { expr } => (
                            if piece.validity == Validity::Exact { 0 } else { 1 },
                            Known::Exact {
                                value: expr.eval(n, k)?,
                                validity: piece.validity,
                                small_n_caveat: piece.small_n_caveat,
                                source: r.source.clone(),
                            },
                        ),
                        Value::Bounds { lo, hi } => (
                            2,
                            Known::Bounds {
                                lo: lo.as_ref().map(|e| e.eval(n, k)).transpose()?,
                                hi: hi.as_ref().map(|e| e.eval(n, k)).transpose()?,
                                small_n_caveat: piece.small_n_caveat,
                                source: r.source.clone(),
                            },
                        ),
                    };
                    best = Some(match best {
                        None => (rank, known),
                        Some((br, bk)) if rank < br => {
                            let _ = bk;
                            (rank, known)
                        }
                        Some((2, bk)) if rank == 2 => (2, intersect(bk, known)),
                        Some(other) => other,
                    });
                }
            }
            if let Some((_, k)) = best {
                return Ok(k);
            }
        }
        Ok(Known::Unknown)
    }
}

fn intersect(a: Known, b: Known) -> Known {
    match (a, b) {
        (
            Known::Bounds {
                lo: l1,
                hi: h1,
                small_n_caveat: c1,
                source,
            },
            Known::Bounds {
                lo: l2,
                hi: h2,
                small_n_caveat: c2,
                ..
            },
        ) => Known::Bounds {
            lo: l1.max(l2),
            hi: match (h1, h2) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            },
            small_n_caveat: c1 || c2,
            source,
        },
        (a, _) => a,
    }
}

/// Number of leaves if `g` is a star `K_{1,k}` with `k >= 3`.
fn star_leaves(g: &Graph) -> Option<usize> {
    let k = g.size();
    if k < 3 || g.order() != k + 1 {
        return None;
    }
    let degs = g.degrees();
    (degs.iter().filter(|&&d| d == k).count() == 1 && degs.iter().filter(|&&d| d == 1).count() == k).then_some(k)
}

/// Linear upper bound on the conflict-free number of a graph with `p`
/// non-isolated vertices: `(p-2)n - floor(p^2/2) + p + 1`.
pub fn cf_upper_bound(p: usize, n: usize) -> Result<i64> {
    if p < 2 || n < p {
        return Err(Error::Domain(format!("need n >= p >= 2, got p={p}, n={n}")));
    }
    let (p, n) = (p as i64, n as i64);
    Ok((p - 2) * n - p * p / 2 + p + 1)
}

/// `A -> B` means every `A`-good copy is `B`-good, so `phi_A >= phi_B`.
pub struct HierarchyDag;

impl HierarchyDag {
    pub const EDGES: [(PhiKind, PhiKind); 8] = [
        (PhiKind::Ar, PhiKind::Lr),
        (PhiKind::Lr, PhiKind::Sod),
        (PhiKind::Lr, PhiKind::Cf),
        (PhiKind::Sod, PhiKind::Sp),
        (PhiKind::Sod, PhiKind::Od),
        (PhiKind::Cf, PhiKind::Od),
        (PhiKind::Sp, PhiKind::Cp),
        (PhiKind::Sp, PhiKind::Lp),
    ];

    /// All pairs `(A, B)`, `A != B`, with a directed path from `A` to `B`.
    pub fn closure() -> Vec<(PhiKind, PhiKind)> {
        let mut out = Vec::new();
        for a in PhiKind::ALL {
            let mut stack = vec![a];
            let mut seen = vec![a];
            while let Some(x) = stack.pop() {
                for &(f, t) in &Self::EDGES {
                    if f == x && !seen.contains(&t) {
                        seen.push(t);
                        stack.push(t);
                        out.push((a, t));
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn implies(a: PhiKind, b: PhiKind) -> bool {
        a == b || Self::closure().contains(&(a, b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub stronger: PhiKind,
    pub weaker: PhiKind,
    pub stronger_value: i64,
    pub weaker_value: i64,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}->{}: {} = {} < {} = {}",
            self.stronger.function_name(),
            self.weaker.function_name(),
            self.stronger.function_name(),
            self.stronger_value,
            self.weaker_value,
            self.weaker.function_name()
        )
    }
}

/// Pairs of the implication closure where the stronger kind has the smaller
/// value. Kinds missing from `values` are skipped.
pub fn check_hierarchy(values: &BTreeMap<PhiKind, i64>) -> Vec<Violation> {
    HierarchyDag::closure()
        .into_iter()
        .filter_map(|(a, b)| {
            let (&va, &vb) = (values.get(&a)?, values.get(&b)?);
            (va < vb).then_some(Violation {
                stronger: a,
                weaker: b,
                stronger_value: va,
                weaker_value: vb,
            })
        })
        .collect()
}
