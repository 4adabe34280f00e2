//! Layer-by-layer growth of rooted projective pre-trees.
//!
//! A pre-tree of generation `k` is a rooted tree whose deepest vertices
//! (the frontier) sit at depth `k`. Generation `k + 1` is obtained by
//! attaching a non-empty set of new vertices to the frontier with arcs that
//! neither cross each other nor cross the tree. Vertices above the frontier
//! never receive children again, so every rooted tree has exactly one
//! growth history.
//!
//! A candidate is kept only if it can still be completed: the vertices
//! outside the tree, together with a synthetic source `v*` wired to every
//! vertex the frontier can reach in one arc, must admit a `v*`-rooted
//! arborescence. This is decided with the matrix-tree determinant. The test
//! ignores future crossings, so it never discards a completable pre-tree;
//! projectivity of the output is enforced by the crossing checks at each
//! attachment step.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arcset::ArcSet;
use crate::conflict::edges_conflict;
use crate::count::{count_arborescences, has_arborescence};
use crate::digraph::{Arc, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::mis::maximal_noncrossing_sets;
use crate::Count;

/// A rooted tree grown from `root`, with the depth of each covered vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PreTree {
    root: VertexId,
    arcs: ArcSet,
    depth: Vec<Option<usize>>,
    generation: usize,
}

impl PreTree {
    fn seed(g: &Digraph, root: VertexId) -> Self {
        let mut depth = vec![None; g.n()];
        depth[root.index()] = Some(0);
        PreTree {
            root,
            arcs: ArcSet::empty(g.arc_count()),
            depth,
            generation: 0,
        }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Tree arcs, indexed over the owning graph.
    pub fn arcs(&self) -> &ArcSet {
        &self.arcs
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn depth(&self, v: VertexId) -> Option<usize> {
        self.depth.get(v.index()).copied().flatten()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.depth(v).is_some()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.depth.len())
            .filter(|&i| self.depth[i].is_some())
            .map(VertexId::from_index)
    }

    pub fn size(&self) -> usize {
        self.depth.iter().filter(|d| d.is_some()).count()
    }

    /// Tree vertices at maximal depth.
    pub fn frontier(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.depth.len())
            .filter(|&i| self.depth[i] == Some(self.generation))
            .map(VertexId::from_index)
    }

    pub fn is_spanning(&self, g: &Digraph) -> bool {
        self.size() == g.vertex_count()
    }

    /// Tree arcs sorted by `(head, tail)`.
    pub fn canonical_arcs(&self, g: &Digraph) -> Vec<Arc> {
        let mut arcs: Vec<Arc> = g.arcs_of(&self.arcs).collect();
        arcs.sort_by_key(|a| (a.head, a.tail));
        arcs
    }

    fn extended(&self, g: &Digraph, extension: &ArcSet) -> PreTree {
        let mut next = self.clone();
        next.generation += 1;
        for a in g.arcs_of(extension) {
            next.depth[a.head.index()] = Some(next.generation);
        }
        next.arcs = next.arcs.union(extension);
        next
    }

    /// Same tree with arcs re-indexed over `target`, which must contain them.
    fn rebased(&self, from: &Digraph, target: &Digraph) -> Result<PreTree> {
        Ok(PreTree {
            arcs: target.arc_set(&from.arcs_of(&self.arcs).collect::<Vec<_>>())?,
            ..self.clone()
        })
    }
}

/// How [`enumerate_projective_arborescences`] explores the search space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Grow directly on the input graph with crossing checks.
    #[default]
    Direct,
    /// Grow separately on every maximal projective subgraph and merge.
    ViaSubgraphs,
}

/// `T(0, r)`: the bare root if `g` has an `r`-rooted arborescence.
pub fn init_generation(g: &Digraph, r: VertexId) -> Result<Vec<PreTree>> {
    Ok(if has_arborescence(g, r)? {
        vec![PreTree::seed(g, r)]
    } else {
        Vec::new()
    })
}

/// Every admissible way to attach new vertices to the frontier of `t`.
///
/// An extension is a set of arcs from frontier vertices to vertices outside
/// `t`, with distinct heads, pairwise non-crossing and crossing no tree
/// arc. Only non-empty extensions are returned, except that a spanning tree
/// yields the single empty extension. Output is in lexicographic order.
pub fn frontier_extensions(g: &Digraph, t: &PreTree) -> Vec<ArcSet> {
    if t.is_spanning(g) {
        return vec![ArcSet::empty(g.arc_count())];
    }
    let tree_spans: Vec<_> = g.arcs_of(&t.arcs).map(|a| a.span()).collect();
    let usable: Vec<usize> = g
        .arcs()
        .iter()
        .enumerate()
        .filter(|(_, a)| t.depth(a.tail) == Some(t.generation) && !t.contains(a.head))
        .filter(|(_, a)| tree_spans.iter().all(|&s| !edges_conflict(s, a.span())))
        .map(|(i, _)| i)
        .collect();

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut heads = vec![false; g.n()];
    collect_extensions(g, &usable, 0, &mut chosen, &mut heads, &mut out);
    out.sort();
    out
}

fn collect_extensions(
    g: &Digraph,
    usable: &[usize],
    at: usize,
    chosen: &mut Vec<usize>,
    heads: &mut [bool],
    out: &mut Vec<ArcSet>,
) {
    if at == usable.len() {
        if !chosen.is_empty() {
            out.push(ArcSet::from_indices(g.arc_count(), chosen.iter().copied()));
        }
        return;
    }
    let i = usable[at];
    let arc = g.arcs()[i];
    let fits = !heads[arc.head.index()]
        && chosen
            .iter()
            .all(|&j| !edges_conflict(g.arcs()[j].span(), arc.span()));
    if fits {
        chosen.push(i);
        heads[arc.head.index()] = true;
        collect_extensions(g, usable, at + 1, chosen, heads, out);
        heads[arc.head.index()] = false;
        chosen.pop();
    }
    collect_extensions(g, usable, at + 1, chosen, heads, out);
}

/// The residual graph `G(t')`: `g` induced on the vertices outside the tree,
/// plus a source `v*` with an arc to every outside vertex that some frontier
/// vertex reaches directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionGraph {
    pub base: Digraph,
    /// Always labelled `n + 1`.
    pub star_vertex: VertexId,
    pub star_arcs: Vec<Arc>,
}

impl ExtensionGraph {
    /// Heads of the star arcs, ascending.
    pub fn attachment_points(&self) -> Vec<VertexId> {
        self.star_arcs.iter().map(|a| a.head).collect()
    }

    /// The whole graph, over labels `1..=n+1`.
    pub fn to_digraph(&self) -> Digraph {
        let n = self.base.n() + 1;
        let mut present = vec![false; n];
        for v in self.base.vertices() {
            present[v.index()] = true;
        }
        present[self.star_vertex.index()] = true;
        let arcs = self
            .base
            .arcs()
            .iter()
            .chain(&self.star_arcs)
            .copied()
            .collect();
        Digraph::from_parts(n, present, arcs)
    }
}

pub fn build_extension_graph(g: &Digraph, t: &PreTree) -> Result<ExtensionGraph> {
    if t.is_spanning(g) {
        return Err(Error::AlreadySpanning);
    }
    let base = g.induced_subgraph(g.vertices().filter(|&v| !t.contains(v)))?;
    let star_vertex = VertexId::from_index(g.n());
    let mut reached = vec![false; g.n()];
    for a in g.arcs() {
        if t.depth(a.tail) == Some(t.generation) && !t.contains(a.head) {
            reached[a.head.index()] = true;
        }
    }
    let star_arcs = (0..g.n())
        .filter(|&i| reached[i])
        .map(|i| Arc {
            tail: star_vertex,
            head: VertexId::from_index(i),
        })
        .collect();
    Ok(ExtensionGraph {
        base,
        star_vertex,
        star_arcs,
    })
}

/// `NST(v*)`: number of `v*`-rooted arborescences of `G(t')`, i.e. of ways
/// to complete `t` hanging everything else below its frontier. `None` when
/// `t` already spans.
pub fn completion_count(g: &Digraph, t: &PreTree) -> Option<Count> {
    let ext = build_extension_graph(g, t).ok()?;
    Some(count_arborescences(&ext.to_digraph(), ext.star_vertex).expect("star vertex is present"))
}

/// Whether `t` can be completed to a spanning arborescence of `g` by
/// growing only below its frontier.
pub fn is_extendable(g: &Digraph, t: &PreTree) -> bool {
    match build_extension_graph(g, t) {
        Err(_) => true,
        Ok(ext) => {
            has_arborescence(&ext.to_digraph(), ext.star_vertex).expect("star vertex is present")
        }
    }
}

/// One growth step.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Step {
    /// Extendable, non-spanning pre-trees of the next generation.
    pub growing: Vec<PreTree>,
    /// Pre-trees that became spanning.
    pub complete: Vec<PreTree>,
    /// Candidates discarded by the extendability test.
    pub rejected: Vec<PreTree>,
}

/// Derives generation `k + 1` from pre-trees of generation `k`. Trees with
/// no admissible extension are dropped.
pub fn next_generation(g: &Digraph, trees: &[PreTree]) -> Result<Step> {
    if let Some(first) = trees.first() {
        if let Some(t) = trees.iter().find(|t| t.generation != first.generation) {
            return Err(Error::MixedGenerations(first.generation, t.generation));
        }
    }
    let parts: Vec<Step> = trees
        .par_iter()
        .map(|t| {
            let mut step = Step::default();
            if t.is_spanning(g) {
                return step;
            }
            for ext in frontier_extensions(g, t) {
                let next = t.extended(g, &ext);
                if next.is_spanning(g) {
                    step.complete.push(next);
                } else if is_extendable(g, &next) {
                    step.growing.push(next);
                } else {
                    step.rejected.push(next);
                }
            }
            step
        })
        .collect();
    let mut step = Step::default();
    for p in parts {
        step.growing.extend(p.growing);
        step.complete.extend(p.complete);
        step.rejected.extend(p.rejected);
    }
    Ok(step)
}

/// Options for [`enumerate_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GrowthOptions {
    pub strategy: Strategy,
    /// Abort once more trees than this are found or held in a generation.
    pub limit: Option<usize>,
    /// Record pruned candidates in [`GrowthReport::rejected`].
    pub keep_rejected: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrowthReport {
    /// Spanning projective arborescences, ordered by their `(head, tail)`
    /// arc lists.
    pub trees: Vec<PreTree>,
    /// Pre-trees discarded by the extendability test, over the input graph.
    pub rejected: Vec<PreTree>,
}

fn check_limit(limit: Option<usize>, size: usize) -> Result<()> {
    match limit {
        Some(l) if size > l => Err(Error::LimitExceeded(l)),
        _ => Ok(()),
    }
}

fn grow(g: &Digraph, r: VertexId, opts: &GrowthOptions) -> Result<GrowthReport> {
    let mut report = GrowthReport::default();
    let mut current = Vec::new();
    for t in init_generation(g, r)? {
        if t.is_spanning(g) {
            report.trees.push(t);
        } else {
            current.push(t);
        }
    }
    while !current.is_empty() {
        let step = next_generation(g, &current)?;
        report.trees.extend(step.complete);
        if opts.keep_rejected {
            report.rejected.extend(step.rejected);
        }
        check_limit(opts.limit, report.trees.len())?;
        check_limit(opts.limit, step.growing.len())?;
        current = step.growing;
    }
    Ok(report)
}

/// Enumerates every projective spanning arborescence of `g` rooted at `r`.
pub fn enumerate_with(g: &Digraph, r: VertexId, opts: &GrowthOptions) -> Result<GrowthReport> {
    if r.get() > g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: r.get(),
            n: g.n(),
        });
    }
    let mut report = match opts.strategy {
        Strategy::Direct => grow(g, r, opts)?,
        Strategy::ViaSubgraphs => {
            let cg = crate::conflict::build_conflict_graph(g);
            let subgraphs = if g.arc_count() == 0 {
                vec![ArcSet::empty(0)]
            } else {
                maximal_noncrossing_sets(&cg, opts.limit)?
            };
            let parts: Vec<GrowthReport> = subgraphs
                .par_iter()
                .map(|set| {
                    let sub = g.subgraph_with_arcs(set)?;
                    let part = grow(&sub, r, opts)?;
                    Ok(GrowthReport {
                        trees: rebase_all(&sub, g, part.trees)?,
                        rejected: rebase_all(&sub, g, part.rejected)?,
                    })
                })
                .collect::<Result<_>>()?;
            let mut unique = BTreeMap::new();
            let mut rejected = Vec::new();
            for part in parts {
                for t in part.trees {
                    unique
                        .entry(
                            t.canonical_arcs(g)
                                .iter()
                                .map(|a| (a.head, a.tail))
                                .collect::<Vec<_>>(),
                        )
                        .or_insert(t);
                }
                rejected.extend(part.rejected);
            }
            check_limit(opts.limit, unique.len())?;
            GrowthReport {
                trees: unique.into_values().collect(),
                rejected,
            }
        }
    };
    report.trees.sort_by_cached_key(|t| {
        t.canonical_arcs(g)
            .iter()
            .map(|a| (a.head, a.tail))
            .collect::<Vec<_>>()
    });
    Ok(report)
}

fn rebase_all(from: &Digraph, to: &Digraph, trees: Vec<PreTree>) -> Result<Vec<PreTree>> {
    trees.iter().map(|t| t.rebased(from, to)).collect()
}

pub fn enumerate_projective_arborescences(
    g: &Digraph,
    r: VertexId,
    strategy: Strategy,
) -> Result<Vec<PreTree>> {
    let opts = GrowthOptions {
        strategy,
        ..Default::default()
    };
    Ok(enumerate_with(g, r, &opts)?.trees)
}
