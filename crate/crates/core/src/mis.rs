//! Incremental enumeration of maximal non-crossing arc sets.
//!
//! Arcs are added one at a time in K-index order. `L_k` holds every maximal
//! independent set of the conflict graph restricted to the first `k` arcs;
//! `L_{k+1}` is derived from `L_k` alone:
//!
//! * a member that already contains an arc conflicting with the new arc
//!   stays maximal and is carried over unchanged;
//! * a member `F` whose compatible part `F ∩ B` dominates every compatible
//!   arc it lacks yields `(F ∩ B) ∪ {new arc}`, where `B` is the set of
//!   earlier arcs not conflicting with the new one.
//!
//! The final level is the set of all maximal projective subgraphs.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::arcset::ArcSet;
use crate::conflict::{build_conflict_graph, ConflictGraph};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// `B^{k+1}`: arcs among the first `k` that do not conflict with the arc of
/// 0-based index `k`.
pub fn compatible_prefix(cg: &ConflictGraph, k: usize) -> Result<ArcSet> {
    let m = cg.arc_count();
    if k >= m {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: m.saturating_sub(1),
        });
    }
    Ok(ArcSet::from_indices(
        m,
        (0..k).filter(|&j| !cg.conflicts(k, j)),
    ))
}

/// All maximal non-crossing subsets of the first `k` arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSets {
    k: usize,
    sets: Vec<ArcSet>,
}

impl LevelSets {
    /// `L_0 = {∅}`.
    pub fn empty(cg: &ConflictGraph) -> Self {
        LevelSets {
            k: 0,
            sets: vec![ArcSet::empty(cg.arc_count())],
        }
    }

    /// `L_1 = {{e_1}}`; `None` when the graph has no arcs.
    pub fn first(cg: &ConflictGraph) -> Option<Self> {
        (cg.arc_count() > 0).then(|| LevelSets {
            k: 1,
            sets: vec![ArcSet::from_indices(cg.arc_count(), [0])],
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Members in lexicographic order.
    pub fn sets(&self) -> &[ArcSet] {
        &self.sets
    }

    pub fn into_sets(self) -> Vec<ArcSet> {
        self.sets
    }
}

fn dominates(cg: &ConflictGraph, kept: &ArcSet, missing: &ArcSet) -> bool {
    missing
        .iter()
        .all(|l| !cg.neighbours(l).intersection(kept).is_empty())
}

/// Builds `L_{k+1}` from `L_k`.
pub fn extend_level(cg: &ConflictGraph, level: &LevelSets) -> Result<LevelSets> {
    let k = level.k;
    let b = compatible_prefix(cg, k)?;
    let candidates: Vec<ArcSet> = level
        .sets
        .par_iter()
        .flat_map_iter(|f| {
            let mut out = Vec::with_capacity(2);
            if !f.is_subset(&b) {
                out.push(f.clone());
            }
            let kept = f.intersection(&b);
            if dominates(cg, &kept, &b.difference(f)) {
                let mut grown = kept;
                grown.insert(k);
                out.push(grown);
            }
            out
        })
        .collect();
    let sets: BTreeSet<ArcSet> = candidates.into_iter().collect();
    let next = LevelSets {
        k: k + 1,
        sets: sets.into_iter().collect(),
    };
    #[cfg(any(test, debug_assertions))]
    if !next
        .sets
        .iter()
        .all(|f| is_maximal_noncrossing(cg, f, k + 1))
    {
        return Err(Error::NotMaximal { level: k + 1 });
    }
    Ok(next)
}

/// Whether `f` is independent in `H` and every other arc among the first
/// `k` conflicts with some member of `f`.
pub fn is_maximal_noncrossing(cg: &ConflictGraph, f: &ArcSet, k: usize) -> bool {
    let prefix = ArcSet::prefix(cg.arc_count(), k);
    f.is_subset(&prefix) && cg.is_independent(f) && dominates(cg, f, &prefix.difference(f))
}

/// All maximal non-crossing arc sets, aborting once any level holds more
/// than `limit` sets.
pub fn maximal_noncrossing_sets(cg: &ConflictGraph, limit: Option<usize>) -> Result<Vec<ArcSet>> {
    let Some(mut level) = LevelSets::first(cg) else {
        return Ok(Vec::new());
    };
    while level.k < cg.arc_count() {
        level = extend_level(cg, &level)?;
        if let Some(limit) = limit.filter(|&l| level.sets.len() > l) {
            return Err(Error::LimitExceeded(limit));
        }
    }
    Ok(level.sets)
}

/// Arc sets of every maximal projective spanning subgraph of `g`.
pub fn enumerate_maximal_projective_subgraphs(g: &Digraph) -> Result<Vec<ArcSet>> {
    maximal_noncrossing_sets(&build_conflict_graph(g), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{parse_arc_list, Arc};

    const PAPER: &str = "n 6\n2 3\n2 6\n3 6\n4 1\n4 2\n5 2\n5 4\n";

    fn spans(g: &Digraph, set: &ArcSet) -> Vec<String> {
        g.arcs_of(set).map(|a| a.span().to_string()).collect()
    }

    fn set_of(g: &Digraph, arcs: &[(usize, usize)]) -> ArcSet {
        let arcs: Vec<Arc> = arcs.iter().map(|&(t, h)| Arc::new(t, h).unwrap()).collect();
        g.arc_set(&arcs).unwrap()
    }

    #[test]
    fn compatible_prefix_examples() {
        let g = parse_arc_list(PAPER).unwrap();
        let cg = build_conflict_graph(&g);
        // {1,4} has index 2
        assert_eq!(spans(&g, &compatible_prefix(&cg, 1).unwrap()), ["{2,3}"]);
        // {3,6} has index 7
        assert_eq!(
            spans(&g, &compatible_prefix(&cg, 6).unwrap()),
            ["{2,3}", "{4,5}", "{2,6}"]
        );
        assert!(compatible_prefix(&cg, 0).unwrap().is_empty());
        assert!(compatible_prefix(&cg, 7).is_err());
    }

    #[test]
    fn first_level_from_empty() {
        let cg = build_conflict_graph(&parse_arc_list(PAPER).unwrap());
        let l1 = extend_level(&cg, &LevelSets::empty(&cg)).unwrap();
        assert_eq!(l1, LevelSets::first(&cg).unwrap());
    }

    #[test]
    fn paper_final_level() {
        let g = parse_arc_list(PAPER).unwrap();
        let sets = enumerate_maximal_projective_subgraphs(&g).unwrap();
        let got: Vec<Vec<String>> = sets.iter().map(|s| spans(&g, s)).collect();
        assert_eq!(
            got,
            vec![
                vec!["{2,3}", "{1,4}", "{2,4}", "{4,5}"],
                vec!["{2,3}", "{2,4}", "{2,5}", "{4,5}", "{2,6}"],
                vec!["{2,3}", "{4,5}", "{2,6}", "{3,6}"],
            ]
        );
    }

    #[test]
    fn conflict_free_levels_are_prefixes() {
        let cg = build_conflict_graph(&parse_arc_list("n 3\n1 2\n2 3").unwrap());
        let mut level = LevelSets::first(&cg).unwrap();
        while level.k() < cg.arc_count() {
            level = extend_level(&cg, &level).unwrap();
            assert_eq!(level.sets(), [cg.edge_prefix(level.k()).unwrap()]);
        }
        assert!(extend_level(&cg, &level).is_err());
    }

    #[test]
    fn two_crossing_arcs() {
        let g = parse_arc_list("n 4\n1 3\n2 4").unwrap();
        let sets = enumerate_maximal_projective_subgraphs(&g).unwrap();
        let got: Vec<Vec<String>> = sets.iter().map(|s| spans(&g, s)).collect();
        assert_eq!(got, vec![vec!["{1,3}"], vec!["{2,4}"]]);
    }

    #[test]
    fn no_arcs() {
        let g = Digraph::empty(3);
        assert!(enumerate_maximal_projective_subgraphs(&g)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn maximality_check() {
        let g = parse_arc_list(PAPER).unwrap();
        let cg = build_conflict_graph(&g);
        assert!(is_maximal_noncrossing(
            &cg,
            &set_of(&g, &[(2, 3), (4, 1), (4, 2), (5, 4)]),
            7
        ));
        assert!(!is_maximal_noncrossing(&cg, &set_of(&g, &[(2, 3)]), 7));
        assert!(is_maximal_noncrossing(&cg, &ArcSet::empty(7), 0));
        // independent but conflicting pair
        assert!(!is_maximal_noncrossing(
            &cg,
            &set_of(&g, &[(4, 1), (5, 2)]),
            7
        ));
    }

    #[test]
    fn limit_guard() {
        let g = parse_arc_list(PAPER).unwrap();
        let cg = build_conflict_graph(&g);
        assert_eq!(
            maximal_noncrossing_sets(&cg, Some(2)),
            Err(Error::LimitExceeded(2))
        );
        assert_eq!(maximal_noncrossing_sets(&cg, Some(3)).unwrap().len(), 3);
    }
}
