//! Edge colorings of the complete graph `K_n`.
//!
//! Edges are indexed in lexicographic pair order: `(0,1), (0,2), ..., (0,n-1),
//! (1,2), ...`. A coloring is a plain vector of color ids over that order.

use crate::error::{Error, Result};
use crate::graph::MAX_HOST_ORDER;

/// Number of edges of `K_n`.
pub const fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Index of the edge `{i, j}` of `K_n` in lexicographic pair order.
#[inline]
pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(j < n && i != j);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs of `K_n` in lexicographic order.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// A total edge coloring of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    colors: Vec<u32>,
    color_count: usize,
}

impl EdgeColoring {
    pub fn new(n: usize, colors: Vec<u32>) -> Result<Self> {
        if !(2..=MAX_HOST_ORDER).contains(&n) {
            return Err(Error::Domain(format!(
                "host order must lie in 2..={MAX_HOST_ORDER}, got {n}"
            )));
        }
        if colors.len() != edge_count(n) {
            return Err(Error::Domain(format!(
                "K_{n} has {} edges but {} colors were given",
                edge_count(n),
                colors.len()
            )));
        }
        let color_count = count_distinct(&colors);
        Ok(EdgeColoring {
            n,
            colors,
            color_count,
        })
    }

    /// Colors each pair `(i, j)`, `i < j`, with `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        let colors = edge_pairs(n).into_iter().map(|(i, j)| f(i, j)).collect();
        EdgeColoring::new(n, colors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    #[inline]
    pub fn color(&self, i: usize, j: usize) -> u32 {
        self.colors[edge_index(self.n, i, j)]
    }

    /// Relabels colors into restricted-growth form: first occurrences in
    /// increasing edge order receive `0, 1, 2, ...`.
    pub fn canonicalize(&self) -> EdgeColoring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len() as u32;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        EdgeColoring {
            n: self.n,
            colors,
            color_count: self.color_count,
        }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 0u32;
        for &c in &self.colors {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }

    /// The coloring induced on `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Result<EdgeColoring> {
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.n || seen >> v & 1 == 1 {
                return Err(Error::Domain(format!(
                    "restriction vertices must be distinct and below {}",
                    self.n
                )));
            }
            seen |= 1 << v;
        }
        EdgeColoring::from_fn(vertices.len(), |a, b| self.color(vertices[a], vertices[b]))
    }

    /// Color classes as lists of edge indices, keyed by color id ascending.
    pub fn classes(&self) -> Vec<(u32, Vec<usize>)> {
        let mut map: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
        for (e, &c) in self.colors.iter().enumerate() {
            map.entry(c).or_default().push(e);
        }
        map.into_iter().collect()
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_matches_enumeration() {
        for n in 2..12 {
            for (idx, (i, j)) in edge_pairs(n).into_iter().enumerate() {
                assert_eq!(edge_index(n, i, j), idx);
                assert_eq!(edge_index(n, j, i), idx);
            }
        }
    }

    #[test]
    fn canonical_form_is_restricted_growth() {
        let c = EdgeColoring::new(4, vec![7, 7, 3, 9, 3, 7]).unwrap();
        assert_eq!(c.color_count(), 3);
        let k = c.canonicalize();
        assert_eq!(k.colors(), &[0, 0, 1, 2, 1, 0]);
        assert!(k.is_canonical());
        assert!(!c.is_canonical());
    }

    #[test]
    fn restriction_relabels() {
        let c = EdgeColoring::from_fn(5, |i, j| (i * 10 + j) as u32).unwrap();
        let r = c.restrict(&[4, 1, 3]).unwrap();
        assert_eq!(r.color(0, 1), 14);
        assert_eq!(r.color(1, 2), 13);
        assert!(c.restrict(&[1, 1]).is_err());
    }

    #[test]
    fn wrong_length_rejected() {
        assert!(EdgeColoring::new(4, vec![0; 5]).is_err());
        assert!(EdgeColoring::new(1, vec![]).is_err());
    }
}
