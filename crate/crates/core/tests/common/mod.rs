#![allow(dead_code)]

use projtree::digraph::parse_arc_list;
use projtree::{ArcSet, Digraph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PAPER: &str = "n 6\n2 3\n2 6\n3 6\n4 1\n4 2\n5 2\n5 4\n";
pub const PAPER_MATRIX: &str = "\
0 0 0 0 0 0
0 0 1 0 0 1
0 0 0 0 0 1
1 1 0 0 0 0
0 1 0 1 0 0
0 0 0 0 0 0
";

pub fn paper() -> Digraph {
    parse_arc_list(PAPER).unwrap()
}

pub fn v(i: usize) -> VertexId {
    VertexId::new(i).unwrap()
}

/// Random digraph on `n` vertices, each ordered pair present with
/// probability `density`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let mut arcs = Vec::new();
    for t in 1..=n {
        for h in 1..=n {
            if t != h && rng.gen_bool(density) {
                arcs.push((t, h));
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// `count` graphs cycling through `n` in `sizes` and densities 0.0..=1.0 in
/// steps of 0.1, from a fixed seed.
pub fn corpus(count: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Digraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = sizes.collect();
    (0..count)
        .map(|i| {
            let n = sizes[i % sizes.len()];
            let density = ((i / sizes.len()) % 11) as f64 / 10.0;
            random_digraph(&mut rng, n, density)
        })
        .collect()
}

/// All tournaments on `n` vertices (one orientation per unordered pair).
pub fn tournaments(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let arcs =
                pairs
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (a, b) } else { (b, a) });
            Digraph::new(n, arcs).unwrap()
        })
        .collect()
}

/// Determinant by Leibniz expansion over all permutations.
pub fn leibniz_determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i64;
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<i64>], total: &mut i64) {
    if k == perm.len() {
        let mut inversions = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let product: i64 = (0..perm.len()).map(|i| m[i][perm[i]]).product();
        *total += if inversions % 2 == 0 {
            product
        } else {
            -product
        };
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

/// Depth of each vertex in the tree given by `arcs` (all arcs away from
/// `root`), indexed by 0-based position.
pub fn depths(g: &Digraph, root: VertexId, arcs: &ArcSet) -> Vec<Option<usize>> {
    let mut parent = vec![None; g.n()];
    for a in g.arcs_of(arcs) {
        parent[a.head.index()] = Some(a.tail);
    }
    (0..g.n())
        .map(|i| {
            let mut cur = VertexId::new(i + 1).unwrap();
            let mut d = 0;
            while cur != root {
                cur = parent[cur.index()]?;
                d += 1;
                if d > g.n() {
                    return None;
                }
            }
            Some(d)
        })
        .collect()
}

/// Arcs of a spanning tree whose heads lie at depth at most `generation`.
pub fn truncate(g: &Digraph, root: VertexId, tree: &ArcSet, generation: usize) -> ArcSet {
    let d = depths(g, root, tree);
    ArcSet::from_indices(
        g.arc_count(),
        tree.iter()
            .filter(|&i| d[g.arcs()[i].head.index()].is_some_and(|x| x <= generation)),
    )
}

/// Checks an arc set is a spanning out-arborescence rooted at `root`
/// without crossing arcs.
pub fn is_projective_arborescence(g: &Digraph, root: VertexId, tree: &ArcSet) -> bool {
    let n = g.vertex_count();
    if tree.count() + 1 != n {
        return false;
    }
    let mut indeg = vec![0; g.n()];
    for a in g.arcs_of(tree) {
        indeg[a.head.index()] += 1;
    }
    if indeg[root.index()] != 0 || g.vertices().any(|u| u != root && indeg[u.index()] != 1) {
        return false;
    }
    let d = depths(g, root, tree);
    if g.vertices().any(|u| d[u.index()].is_none()) {
        return false;
    }
    let spans: Vec<_> = g.arcs_of(tree).map(|a| a.span()).collect();
    spans.iter().enumerate().all(|(i, &a)| {
        spans[i + 1..]
            .iter()
            .all(|&b| !projtree::edges_conflict(a, b))
    })
}
