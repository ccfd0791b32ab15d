//! The eight coloring conditions on a colored copy of a pattern.
//!
//! A color class inside a copy is the subgraph formed by the copy's edges of
//! that color. Parity of a class is judged on the vertices it touches only.
//! Vertex-wise conditions (OD, CF, LP) range over the copy's vertices, all of
//! which are incident with at least one copy edge.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::{edge_index, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_PATTERN_ORDER};

/// Which coloring condition a copy must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhiKind {
    /// Rainbow: all edges distinct colors.
    Ar,
    /// Local rainbow: the induced coloring is proper.
    Lr,
    /// Strong odd: every class is an odd graph.
    Sod,
    /// Odd: every vertex sees some color an odd number of times.
    Od,
    /// Conflict-free: every vertex sees some color exactly once.
    Cf,
    /// Strong parity: all classes odd graphs, or all classes even graphs.
    Sp,
    /// Class parity: each class is an odd graph or an even graph.
    Cp,
    /// Local parity: at each vertex the incident class sizes share one parity.
    Lp,
}

impl PhiKind {
    pub const ALL: [PhiKind; 8] = [
        PhiKind::Ar,
        PhiKind::Lr,
        PhiKind::Sod,
        PhiKind::Od,
        PhiKind::Cf,
        PhiKind::Sp,
        PhiKind::Cp,
        PhiKind::Lp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PhiKind::Ar => "ar",
            PhiKind::Lr => "lr",
            PhiKind::Sod => "sod",
            PhiKind::Od => "od",
            PhiKind::Cf => "cf",
            PhiKind::Sp => "sp",
            PhiKind::Cp => "cp",
            PhiKind::Lp => "lp",
        }
    }

    /// Function name as usually written, e.g. `Sod`.
    pub fn function_name(self) -> &'static str {
        match self {
            PhiKind::Ar => "Ar",
            PhiKind::Lr => "Lr",
            PhiKind::Sod => "Sod",
            PhiKind::Od => "Od",
            PhiKind::Cf => "Cf",
            PhiKind::Sp => "Sp",
            PhiKind::Cp => "Cp",
            PhiKind::Lp => "Lp",
        }
    }
}

impl fmt::Display for PhiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PhiKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PhiKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown kind `{s}` (expected ar|lr|sod|od|cf|sp|cp|lp)")))
    }
}

/// Largest number of distinct colors a pattern copy can carry.
const MAX_COPY_EDGES: usize = MAX_PATTERN_ORDER * (MAX_PATTERN_ORDER - 1) / 2;

/// Evaluates `kind` on a copy given in local form: vertices `0..order`,
/// `edges[i]` colored `colors[i]`. This is the hot path of the search.
pub fn satisfies(kind: PhiKind, order: usize, edges: &[(u8, u8)], colors: &[u32]) -> bool {
    debug_assert_eq!(edges.len(), colors.len());
    debug_assert!(order <= MAX_PATTERN_ORDER);
    // local color ids in order of first appearance
    let mut palette = [0u32; MAX_COPY_EDGES];
    let mut local = [0u8; MAX_COPY_EDGES];
    let mut k = 0usize;
    for (i, &c) in colors.iter().enumerate() {
        let id = match palette[..k].iter().position(|&p| p == c) {
            Some(id) => id,
            None => {
                palette[k] = c;
                k += 1;
                k - 1
            }
        };
        local[i] = id as u8;
    }
    if kind == PhiKind::Ar {
        return k == edges.len();
    }

    let mut deg = [0u8; MAX_PATTERN_ORDER * MAX_COPY_EDGES];
    for (i, &(a, b)) in edges.iter().enumerate() {
        let c = local[i] as usize;
        deg[a as usize * k + c] += 1;
        deg[b as usize * k + c] += 1;
    }
    let row = |v: usize| &deg[v * k..(v + 1) * k];

    match kind {
        PhiKind::Ar => unreachable!(),
        PhiKind::Lr => (0..order).all(|v| row(v).iter().all(|&d| d <= 1)),
        PhiKind::Sod => (0..order).all(|v| row(v).iter().all(|&d| d == 0 || d % 2 == 1)),
        PhiKind::Od => (0..order).all(|v| {
            let r = row(v);
            r.iter().all(|&d| d == 0) || r.iter().any(|&d| d % 2 == 1)
        }),
        PhiKind::Cf => (0..order).all(|v| {
            let r = row(v);
            r.iter().all(|&d| d == 0) || r.iter().any(|&d| d == 1)
        }),
        PhiKind::Sp => {
            let any_odd = (0..order).any(|v| row(v).iter().any(|&d| d % 2 == 1));
            let any_even = (0..order).any(|v| row(v).iter().any(|&d| d > 0 && d % 2 == 0));
            !(any_odd && any_even)
        }
        PhiKind::Cp => (0..k).all(|c| {
            let odd = (0..order).any(|v| deg[v * k + c] % 2 == 1);
            let even = (0..order).any(|v| {
                let d = deg[v * k + c];
                d > 0 && d % 2 == 0
            });
            !(odd && even)
        }),
        PhiKind::Lp => (0..order).all(|v| {
            let r = row(v);
            let odd = r.iter().any(|&d| d % 2 == 1);
            let even = r.iter().any(|&d| d > 0 && d % 2 == 0);
            !(odd && even)
        }),
    }
}

/// A pattern copy inside a colored `K_n`, with its colors attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredCopy {
    host_order: usize,
    /// Host vertex of each local copy vertex.
    vertices: Vec<usize>,
    /// Local endpoints of each copy edge.
    local_edges: Vec<(u8, u8)>,
    /// Host edge index of each copy edge.
    host_edges: Vec<usize>,
    colors: Vec<u32>,
}

impl ColoredCopy {
    /// Places `pattern` into the colored host with pattern vertex `i` mapped to
    /// `vertices[i]`.
    pub fn embed(coloring: &EdgeColoring, pattern: &Graph, vertices: &[usize]) -> Result<Self> {
        if vertices.len() != pattern.order() {
            return Err(Error::MalformedCopy(format!(
                "{} host vertices for a pattern of order {}",
                vertices.len(),
                pattern.order()
            )));
        }
        let local: Vec<(u8, u8)> = pattern.edges().iter().map(|&(a, b)| (a as u8, b as u8)).collect();
        let colors = pattern
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (vertices[a], vertices[b]);
                if x >= coloring.n() || y >= coloring.n() {
                    Err(Error::MalformedCopy(format!("edge ({x},{y}) not in K_{}", coloring.n())))
                } else if x == y {
                    Err(Error::MalformedCopy(format!("vertex {x} used twice")))
                } else {
                    Ok(coloring.color(x, y))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ColoredCopy::from_parts(coloring.n(), vertices.to_vec(), local, colors)
    }

    /// Assembles a copy from raw parts, checking consistency.
    pub fn from_parts(
        host_order: usize,
        vertices: Vec<usize>,
        local_edges: Vec<(u8, u8)>,
        colors: Vec<u32>,
    ) -> Result<Self> {
        if vertices.len() > MAX_PATTERN_ORDER {
            return Err(Error::MalformedCopy(format!(
                "copy has {} vertices, above the pattern cap",
                vertices.len()
            )));
        }
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= host_order {
                return Err(Error::MalformedCopy(format!("vertex {v} not in K_{host_order}")));
            }
            if seen >> v & 1 == 1 {
                return Err(Error::MalformedCopy(format!("vertex {v} used twice")));
            }
            seen |= 1 << v;
        }
        if colors.len() != local_edges.len() {
            return Err(Error::MalformedCopy(format!(
                "{} colors for {} edges",
                colors.len(),
                local_edges.len()
            )));
        }
        let p = vertices.len();
        let mut host_edges = Vec::with_capacity(local_edges.len());
        let mut touched = vec![false; p];
        for &(a, b) in &local_edges {
            let (a, b) = (a as usize, b as usize);
            if a >= p || b >= p || a == b {
                return Err(Error::MalformedCopy(format!("local edge ({a},{b}) invalid")));
            }
            touched[a] = true;
            touched[b] = true;
            host_edges.push(edge_index(host_order, vertices[a], vertices[b]));
        }
        let mut sorted = host_edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedCopy("repeated edge".into()));
        }
        if let Some(v) = touched.iter().position(|t| !t) {
            return Err(Error::MalformedCopy(format!("copy vertex {v} has no edge")));
        }
        Ok(ColoredCopy {
            host_order,
            vertices,
            local_edges,
            host_edges,
            colors,
        })
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn host_edges(&self) -> &[usize] {
        &self.host_edges
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Multiset of colors at local vertex `v`, as `(color, multiplicity)`
    /// sorted by color.
    pub fn incident_multiset(&self, v: usize) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for (i, &(a, b)) in self.local_edges.iter().enumerate() {
            if a as usize == v || b as usize == v {
                let c = self.colors[i];
                match out.iter_mut().find(|(x, _)| *x == c) {
                    Some(entry) => entry.1 += 1,
                    None => out.push((c, 1)),
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Whether the copy's induced coloring meets `kind`.
pub fn check(copy: &ColoredCopy, kind: PhiKind) -> bool {
    satisfies(kind, copy.vertices.len(), &copy.local_edges, &copy.colors)
}

/// Degree parity of one color class on the vertices it touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassParity {
    Odd,
    Even,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClass {
    pub color: u32,
    /// Host-vertex pairs of the class edges.
    pub edges: Vec<(usize, usize)>,
    pub parity: ClassParity,
}

/// Splits the copy's edges by color, ascending color id.
pub fn class_decomposition(copy: &ColoredCopy) -> Vec<ColorClass> {
    let mut colors: Vec<u32> = copy.colors.clone();
    colors.sort_unstable();
    colors.dedup();
    colors
        .into_iter()
        .map(|color| {
            let mut deg = vec![0usize; copy.vertices.len()];
            let mut edges = Vec::new();
            for (i, &(a, b)) in copy.local_edges.iter().enumerate() {
                if copy.colors[i] == color {
                    deg[a as usize] += 1;
                    deg[b as usize] += 1;
                    let (x, y) = (copy.vertices[a as usize], copy.vertices[b as usize]);
                    edges.push((x.min(y), x.max(y)));
                }
            }
            edges.sort_unstable();
            let odd = deg.iter().any(|d| d % 2 == 1);
            let even = deg.iter().any(|&d| d > 0 && d % 2 == 0);
            let parity = match (odd, even) {
                (true, false) => ClassParity::Odd,
                (false, true) => ClassParity::Even,
                _ => ClassParity::Mixed,
            };
            ColorClass { color, edges, parity }
        })
        .collect()
}
