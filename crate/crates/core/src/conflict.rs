//! Crossing relation between arcs and the conflict graph.
//!
//! Two spans conflict when they properly interleave,
//! `a.lo < b.lo < a.hi < b.hi` (or symmetrically). Spans that share an
//! endpoint, are nested, disjoint or equal never conflict.

use std::cmp::Ordering;

use crate::arcset::ArcSet;
use crate::digraph::{Arc, Digraph, Span};
use crate::error::{Error, Result};

pub fn edges_conflict(a: Span, b: Span) -> bool {
    (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi)
}

/// Lexicographic span order: by end, then by beginning.
pub fn lex_compare(a: Span, b: Span) -> Ordering {
    a.hi.cmp(&b.hi).then(a.lo.cmp(&b.lo))
}

/// Canonical arc order: [`lex_compare`] on spans, ties (antiparallel arcs)
/// broken by tail.
pub fn arc_order(a: &Arc, b: &Arc) -> Ordering {
    lex_compare(a.span(), b.span()).then(a.tail.cmp(&b.tail))
}

/// 1-based rank of span `e` among the spans of `g`'s arcs, counting
/// `|{hi < e.hi}| + |{hi = e.hi, lo <= e.lo}|`. Antiparallel arcs share a
/// span and are counted once each, so `e` maps to the larger of their two
/// indices.
pub fn edge_index_k(g: &Digraph, e: Span) -> Result<usize> {
    let spans = || g.arcs().iter().map(Arc::span);
    if !spans().any(|s| s == e) {
        return Err(Error::SpanNotFound {
            lo: e.lo.get(),
            hi: e.hi.get(),
        });
    }
    let before = spans().filter(|s| s.hi < e.hi).count();
    let same_end = spans().filter(|s| s.hi == e.hi && s.lo <= e.lo).count();
    Ok(before + same_end)
}

/// Conflict graph `H`: one vertex per arc of `G` (canonical order), one edge
/// per conflicting pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    arcs: Vec<Arc>,
    adjacency: Vec<bool>,
    neighbours: Vec<ArcSet>,
}

impl ConflictGraph {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in index order (0-based here; the K-index is `i + 1`).
    pub fn ordered_arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Entry `A(H)[i][j]` (0-based).
    pub fn conflicts(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.arcs.len() + j]
    }

    /// Arcs conflicting with arc `i`.
    pub fn neighbours(&self, i: usize) -> &ArcSet {
        &self.neighbours[i]
    }

    /// `A(H)` as a 0/1 matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let m = self.arcs.len();
        (0..m)
            .map(|i| (0..m).map(|j| self.conflicts(i, j) as u8).collect())
            .collect()
    }

    /// Conflicting pairs `(i, j)`, `i < j`, in row-major order.
    pub fn conflict_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.arcs.len();
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .filter(|&(i, j)| self.conflicts(i, j))
            .collect()
    }

    /// `E^k`: the arcs with K-index at most `k`.
    pub fn edge_prefix(&self, k: usize) -> Result<ArcSet> {
        if k > self.arcs.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: self.arcs.len(),
            });
        }
        Ok(ArcSet::prefix(self.arcs.len(), k))
    }

    /// Whether no two arcs of `set` conflict.
    pub fn is_independent(&self, set: &ArcSet) -> bool {
        set.iter()
            .all(|i| self.neighbours[i].intersection(set).is_empty())
    }
}

pub fn build_conflict_graph(g: &Digraph) -> ConflictGraph {
    let arcs = g.arcs().to_vec();
    let m = arcs.len();
    let mut adjacency = vec![false; m * m];
    let mut neighbours = vec![ArcSet::empty(m); m];
    for i in 0..m {
        for j in 0..m {
            if edges_conflict(arcs[i].span(), arcs[j].span()) {
                adjacency[i * m + j] = true;
                neighbours[i].insert(j);
            }
        }
    }
    ConflictGraph {
        arcs,
        adjacency,
        neighbours,
    }
}
