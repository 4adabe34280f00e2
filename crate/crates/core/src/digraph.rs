//! Simple loop-free digraphs over linearly ordered vertices.
//!
//! Vertices carry 1-based labels. A digraph may cover only part of its
//! label range (see [`Digraph::induced_subgraph`]); labels are never
//! renumbered because crossing is defined on the original positions.

use std::cmp::Ordering;
use std::fmt::{self, Write};

use crate::arcset::ArcSet;
use crate::conflict;
use crate::error::{Error, Result};

/// 1-based vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    /// `None` for label 0.
    pub fn new(label: usize) -> Option<Self> {
        (label > 0).then_some(VertexId(label))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// 0-based position.
    pub fn index(self) -> usize {
        self.0 - 1
    }

    pub(crate) fn from_index(i: usize) -> Self {
        VertexId(i + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Undirected extent `{lo, hi}` of an arc on the vertex line, `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    pub lo: VertexId,
    pub hi: VertexId,
}

impl Span {
    /// Span of two distinct vertices, in either order.
    pub fn new(a: VertexId, b: VertexId) -> Option<Self> {
        match a.cmp(&b) {
            Ordering::Less => Some(Span { lo: a, hi: b }),
            Ordering::Greater => Some(Span { lo: b, hi: a }),
            Ordering::Equal => None,
        }
    }

    pub fn from_labels(a: usize, b: usize) -> Option<Self> {
        Span::new(VertexId::new(a)?, VertexId::new(b)?)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    /// `None` for loops and zero labels.
    pub fn new(tail: usize, head: usize) -> Option<Self> {
        let (tail, head) = (VertexId::new(tail)?, VertexId::new(head)?);
        (tail != head).then_some(Arc { tail, head })
    }

    pub fn span(&self) -> Span {
        Span::new(self.tail, self.head).expect("arcs are loop-free")
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.tail, self.head)
    }
}

/// A simple digraph without loops.
///
/// Arcs are kept in canonical lexicographic order: by span end, then span
/// beginning, then tail. Arc indices used by [`ArcSet`] refer to this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    present: Vec<bool>,
    arcs: Vec<Arc>,
    adjacency: Vec<bool>,
    root: Option<VertexId>,
}

impl Digraph {
    /// Digraph on all labels `1..=n` with the given `(tail, head)` pairs.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(n);
        for (tail, head) in arcs {
            for v in [tail, head] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if tail == head {
                return Err(Error::Loop(tail));
            }
            if g.has_arc(tail, head) {
                return Err(Error::DuplicateArc { tail, head });
            }
            g.push_arc(Arc::new(tail, head).unwrap());
        }
        g.canonicalize();
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            present: vec![true; n],
            arcs: Vec::new(),
            adjacency: vec![false; n * n],
            root: None,
        }
    }

    fn push_arc(&mut self, arc: Arc) {
        self.adjacency[arc.tail.index() * self.n + arc.head.index()] = true;
        self.arcs.push(arc);
    }

    fn canonicalize(&mut self) {
        self.arcs.sort_by(conflict::arc_order);
    }

    pub fn with_root(mut self, root: VertexId) -> Result<Self> {
        self.check_vertex(root.get())?;
        self.root = Some(root);
        Ok(self)
    }

    /// Size of the label range.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices actually present.
    pub fn vertex_count(&self) -> usize {
        self.present.iter().filter(|&&p| p).count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n)
            .filter(|&i| self.present[i])
            .map(VertexId::from_index)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.n && self.present[v.index()]
    }

    pub fn root(&self) -> Option<VertexId> {
        self.root
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        (1..=self.n).contains(&tail)
            && (1..=self.n).contains(&head)
            && self.adjacency[(tail - 1) * self.n + head - 1]
    }

    /// Canonical 0-based index of `arc`.
    pub fn arc_index(&self, arc: &Arc) -> Option<usize> {
        self.arcs
            .binary_search_by(|a| conflict::arc_order(a, arc))
            .ok()
    }

    /// Indices of arcs leaving `v`.
    pub fn out_arcs(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        (0..self.arcs.len()).filter(move |&i| self.arcs[i].tail == v)
    }

    /// Indices of arcs entering `v`.
    pub fn in_arcs(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        (0..self.arcs.len()).filter(move |&i| self.arcs[i].head == v)
    }

    /// The 0/1 adjacency matrix over the full label range.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.adjacency[i * self.n + j] as u8)
                    .collect()
            })
            .collect()
    }

    /// Arc set of `arcs`, failing on any arc absent from the graph.
    pub fn arc_set<'a, I>(&self, arcs: I) -> Result<ArcSet>
    where
        I: IntoIterator<Item = &'a Arc>,
    {
        let mut set = ArcSet::empty(self.arc_count());
        for a in arcs {
            let i = self.arc_index(a).ok_or(Error::ArcNotInGraph {
                tail: a.tail.get(),
                head: a.head.get(),
            })?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Arcs of `set` in canonical order.
    pub fn arcs_of<'a>(&'a self, set: &'a ArcSet) -> impl Iterator<Item = Arc> + 'a {
        set.iter().map(|i| self.arcs[i])
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else if !self.present[v - 1] {
            Err(Error::MissingVertex(v))
        } else {
            Ok(())
        }
    }

    /// Subgraph induced by `keep`, preserving labels.
    pub fn induced_subgraph<I>(&self, keep: I) -> Result<Digraph>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut present = vec![false; self.n];
        for v in keep {
            if v.get() > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v.get(),
                    n: self.n,
                });
            }
            present[v.index()] = self.present[v.index()];
        }
        let mut g = Digraph {
            n: self.n,
            present,
            arcs: Vec::new(),
            adjacency: vec![false; self.n * self.n],
            root: self.root.filter(|r| self.present[r.index()]),
        };
        for &a in &self.arcs {
            if g.present[a.tail.index()] && g.present[a.head.index()] {
                g.push_arc(a);
            }
        }
        if g.root.is_some_and(|r| !g.present[r.index()]) {
            g.root = None;
        }
        Ok(g)
    }

    /// Spanning subgraph with exactly the arcs in `arcs`.
    pub fn subgraph_with_arcs(&self, arcs: &ArcSet) -> Result<Digraph> {
        if arcs.universe() != self.arc_count() {
            return Err(Error::ArcSetLength {
                expected: self.arc_count(),
                found: arcs.universe(),
            });
        }
        let mut g = Digraph {
            arcs: Vec::with_capacity(arcs.count()),
            adjacency: vec![false; self.n * self.n],
            ..self.clone()
        };
        for a in self.arcs_of(arcs) {
            g.push_arc(a);
        }
        Ok(g)
    }

    /// Like [`Digraph::new`] but over a partial vertex set and with extra
    /// labels; used for extension graphs.
    pub(crate) fn from_parts(n: usize, present: Vec<bool>, arcs: Vec<Arc>) -> Digraph {
        let mut g = Digraph {
            n,
            present,
            arcs: Vec::with_capacity(arcs.len()),
            adjacency: vec![false; n * n],
            root: None,
        };
        for a in arcs {
            g.push_arc(a);
        }
        g.canonicalize();
        g
    }

    /// Serializes to the arc-list text format. Absent vertices are not
    /// representable and are dropped.
    pub fn to_arc_list(&self) -> String {
        let mut out = format!("n {}", self.n);
        if let Some(r) = self.root {
            write!(out, " root {r}").unwrap();
        }
        out.push('\n');
        for a in &self.arcs {
            writeln!(out, "{a}").unwrap();
        }
        out
    }

    /// DOT rendering with vertices in label order and arcs in canonical
    /// order. Arcs in `highlight` are drawn bold red.
    pub fn to_dot(&self, highlight: Option<&ArcSet>) -> String {
        let mut out = String::from("digraph G {\n");
        for v in self.vertices() {
            writeln!(out, "  {v};").unwrap();
        }
        for (i, a) in self.arcs.iter().enumerate() {
            if highlight.is_some_and(|h| h.contains(i)) {
                writeln!(out, "  {} -> {} [color=red, penwidth=2];", a.tail, a.head).unwrap();
            } else {
                writeln!(out, "  {} -> {};", a.tail, a.head).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_natural(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_error(line, format!("expected a natural number, found {tok:?}")))
}

/// Parses the arc-list format: a header `n <count> [root <r>]`, then one
/// `<tail> <head>` pair per line. Blank lines and lines starting with `#`
/// are ignored.
pub fn parse_arc_list(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (n, root) = match toks.as_slice() {
        ["n", count] => (parse_natural(hline, count)?, None),
        ["n", count, "root", r] => (parse_natural(hline, count)?, Some(parse_natural(hline, r)?)),
        _ => {
            return Err(parse_error(
                hline,
                "expected header \"n <count> [root <r>]\"",
            ))
        }
    };
    let mut g = Digraph::empty(n);
    if let Some(r) = root {
        if r == 0 || r > n {
            return Err(parse_error(hline, format!("root {r} out of range 1..={n}")));
        }
        g.root = VertexId::new(r);
    }
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [t, h] = toks.as_slice() else {
            return Err(parse_error(line, "expected \"<tail> <head>\""));
        };
        let (tail, head) = (parse_natural(line, t)?, parse_natural(line, h)?);
        for v in [tail, head] {
            if v == 0 || v > n {
                return Err(parse_error(
                    line,
                    format!("vertex {v} out of range 1..={n}"),
                ));
            }
        }
        if tail == head {
            return Err(parse_error(line, format!("loop arc {tail} -> {head}")));
        }
        if g.has_arc(tail, head) {
            return Err(parse_error(line, format!("duplicate arc {tail} -> {head}")));
        }
        g.push_arc(Arc::new(tail, head).unwrap());
    }
    g.canonicalize();
    Ok(g)
}

/// Parses a square 0/1 adjacency matrix, one row per line. Row `i`,
/// column `j` set means arc `i -> j`.
pub fn parse_adjacency_matrix(text: &str) -> Result<Digraph> {
    let rows: Vec<(usize, Vec<&str>)> = content_lines(text)
        .map(|(line, l)| (line, l.split_whitespace().collect()))
        .collect();
    let n = rows.len();
    let mut g = Digraph::empty(n);
    for (i, (line, row)) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(parse_error(
                *line,
                format!(
                    "matrix is not square: row has {} entries, expected {n}",
                    row.len()
                ),
            ));
        }
        for (j, tok) in row.iter().enumerate() {
            match *tok {
                "0" => {}
                "1" if i == j => {
                    return Err(parse_error(
                        *line,
                        format!("nonzero diagonal entry at ({}, {})", i + 1, j + 1),
                    ))
                }
                "1" => g.push_arc(Arc::new(i + 1, j + 1).unwrap()),
                other => {
                    return Err(parse_error(*line, format!("entry {other:?} is not 0 or 1")));
                }
            }
        }
    }
    g.canonicalize();
    Ok(g)
}
