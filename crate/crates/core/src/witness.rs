//! Witness colorings on disk.
//!
//! ```json
//! { "n": 5, "edge_order": "lex-pairs", "colors": [0, 1, ...], "kind": "od",
//!   "pattern": "C4", "m": 5, "verified": true }
//! ```
//!
//! `colors[i]` is the color of the `i`-th pair `(a, b)`, `a < b`, in
//! lexicographic order. Loading always re-runs the full scan; the stored
//! `verified` flag is never trusted.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::parse_graph;
use crate::predicates::PhiKind;
use crate::search::{verify_lower_bound, SearchOutcome};

pub const EDGE_ORDER: &str = "lex-pairs";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    pub edge_order: String,
    pub colors: Vec<u32>,
    pub kind: PhiKind,
    pub pattern: String,
    pub m: usize,
    pub verified: bool,
}

impl Witness {
    /// Builds a witness from a coloring and runs the full scan on it.
    pub fn new(coloring: &EdgeColoring, pattern: &str, kind: PhiKind) -> Result<Witness> {
        let g = parse_graph(pattern)?;
        let verified = verify_lower_bound(coloring, &g, kind)?;
        Ok(Witness {
            n: coloring.n(),
            edge_order: EDGE_ORDER.to_string(),
            colors: coloring.colors().to_vec(),
            kind,
            pattern: pattern.to_string(),
            m: coloring.color_count(),
            verified,
        })
    }

    pub fn from_outcome(outcome: &SearchOutcome, pattern: &str) -> Result<Witness> {
        let w = outcome.witness.as_ref().ok_or(Error::NoWitness)?;
        Witness::new(w, pattern, outcome.kind)
    }

    pub fn coloring(&self) -> Result<EdgeColoring> {
        EdgeColoring::new(self.n, self.colors.clone())
    }

    /// Re-verifies from scratch. Errors unless the document is well formed,
    /// `m` matches the coloring, and no good copy exists.
    pub fn check(&self) -> Result<EdgeColoring> {
        let reject = |m: String| Error::WitnessRejected(m);
        if self.edge_order != EDGE_ORDER {
            return Err(reject(format!("unsupported edge order `{}`", self.edge_order)));
        }
        let coloring = self.coloring().map_err(|e| reject(e.to_string()))?;
        if coloring.color_count() != self.m {
            return Err(reject(format!(
                "claims {} colors but uses {}",
                self.m,
                coloring.color_count()
            )));
        }
        let g = parse_graph(&self.pattern)?;
        if !verify_lower_bound(&coloring, &g, self.kind)? {
            return Err(reject(format!(
                "contains a {}-good copy of {}",
                self.kind, self.pattern
            )));
        }
        Ok(coloring)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Witness> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Writes the outcome's witness to `path`.
pub fn emit_witness(outcome: &SearchOutcome, pattern: &str, path: impl AsRef<Path>) -> Result<Witness> {
    let w = Witness::from_outcome(outcome, pattern)?;
    std::fs::write(path, w.to_json() + "\n")?;
    Ok(w)
}

/// Reads a witness file and verifies it.
pub fn load_witness(path: impl AsRef<Path>) -> Result<(Witness, EdgeColoring)> {
    let w = Witness::from_json(&std::fs::read_to_string(path)?)?;
    let c = w.check()?;
    Ok((w, c))
}
