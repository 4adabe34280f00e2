//! Exponential-time reference implementations.
//!
//! Nothing here reuses the counting, growth or incremental enumeration
//! code; only the digraph representation and the crossing predicate are
//! shared.

use crate::arcset::ArcSet;
use crate::conflict::{edges_conflict, ConflictGraph};
use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};

/// Size bounds beyond which the oracles refuse to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    /// Capped at 64 by the bitmask representation.
    pub max_arcs: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 10,
            max_arcs: 20,
        }
    }
}

/// All spanning out-arborescences of `g` rooted at `r`: every choice of one
/// entering arc per non-root vertex that leads back to `r` without cycles.
pub fn brute_force_arborescences(
    g: &Digraph,
    r: VertexId,
    limits: OracleLimits,
) -> Result<Vec<ArcSet>> {
    let verts: Vec<VertexId> = g.vertices().collect();
    if verts.len() > limits.max_vertices {
        return Err(Error::OracleBound {
            what: "vertex count",
            size: verts.len(),
            bound: limits.max_vertices,
        });
    }
    if !g.contains_vertex(r) {
        return Err(Error::VertexOutOfRange {
            vertex: r.get(),
            n: g.n(),
        });
    }
    let others: Vec<VertexId> = verts.iter().copied().filter(|&v| v != r).collect();
    let choices: Vec<Vec<usize>> = others.iter().map(|&v| g.in_arcs(v).collect()).collect();
    if choices.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut pick = vec![0usize; others.len()];
    let mut parent = vec![None; g.n()];
    loop {
        for (k, &v) in others.iter().enumerate() {
            parent[v.index()] = Some(g.arcs()[choices[k][pick[k]]].tail);
        }
        let reaches_root = others.iter().all(|&v| {
            let mut cur = v;
            for _ in 0..others.len() {
                match parent[cur.index()] {
                    Some(p) if p == r => return true,
                    Some(p) => cur = p,
                    None => return false,
                }
            }
            false
        });
        if reaches_root {
            out.push(ArcSet::from_indices(
                g.arc_count(),
                (0..others.len()).map(|k| choices[k][pick[k]]),
            ));
        }
        // odometer
        let mut k = 0;
        loop {
            if k == pick.len() {
                out.sort();
                return Ok(out);
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// [`brute_force_arborescences`] restricted to trees without crossing arcs.
pub fn brute_force_projective_arborescences(
    g: &Digraph,
    r: VertexId,
    limits: OracleLimits,
) -> Result<Vec<ArcSet>> {
    let all = brute_force_arborescences(g, r, limits)?;
    Ok(all
        .into_iter()
        .filter(|t| {
            let spans: Vec<_> = g.arcs_of(t).map(|a| a.span()).collect();
            spans
                .iter()
                .enumerate()
                .all(|(i, &a)| spans[i + 1..].iter().all(|&b| !edges_conflict(a, b)))
        })
        .collect())
}

/// All maximal independent sets of the conflict graph, by Bron–Kerbosch
/// with pivoting on its complement. Crossings are recomputed from the arc
/// spans.
pub fn brute_force_maximal_independent_sets(
    cg: &ConflictGraph,
    limits: OracleLimits,
) -> Result<Vec<ArcSet>> {
    let arcs = cg.ordered_arcs();
    let m = arcs.len();
    let bound = limits.max_arcs.min(64);
    if m > bound {
        return Err(Error::OracleBound {
            what: "arc count",
            size: m,
            bound,
        });
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    // compatible[i]: arcs that may share an independent set with i
    let compatible: Vec<u64> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && !edges_conflict(arcs[i].span(), arcs[j].span()))
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(&compatible, 0, all, 0, &mut out);
    let mut sets: Vec<ArcSet> = out
        .into_iter()
        .map(|mask| ArcSet::from_indices(m, (0..m).filter(|&i| mask >> i & 1 == 1)))
        .collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}
