//! Arborescence counting with the directed matrix-tree theorem.
//!
//! The number of spanning out-arborescences rooted at `r` equals the
//! `(r, r)` principal minor of the in-degree Laplacian `Λ_in − A`. Minors
//! are evaluated by fraction-free (Bareiss) elimination over any
//! [`ExactScalar`].

use num_bigint::BigInt;
use num_traits::Signed;

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::scalar::ExactScalar;
use crate::Count;

/// `Λ_in − A` over the vertices present in a digraph, listed in label order.
#[derive(Clone, Debug, PartialEq)]
pub struct InDegreeLaplacian<T> {
    labels: Vec<VertexId>,
    entries: Vec<T>,
}

impl<T: ExactScalar> InDegreeLaplacian<T> {
    pub fn new(g: &Digraph) -> Self {
        let labels: Vec<VertexId> = g.vertices().collect();
        let m = labels.len();
        let mut position = vec![usize::MAX; g.n()];
        for (i, v) in labels.iter().enumerate() {
            position[v.index()] = i;
        }
        let mut entries = vec![T::zero(); m * m];
        for a in g.arcs() {
            let (t, h) = (position[a.tail.index()], position[a.head.index()]);
            entries[t * m + h] = -T::one();
            entries[h * m + h] = entries[h * m + h].clone() + T::one();
        }
        InDegreeLaplacian { labels, entries }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    /// Entry at 0-based positions.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim() + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries
            .chunks(self.dim().max(1))
            .take(self.dim())
            .map(<[T]>::to_vec)
            .collect()
    }

    /// Determinant with the row and column of `r` removed.
    pub fn principal_minor(&self, r: VertexId) -> Result<T> {
        let skip = self
            .labels
            .iter()
            .position(|&v| v == r)
            .ok_or(Error::MissingVertex(r.get()))?;
        let m = self.dim();
        let minor: Vec<Vec<T>> = (0..m)
            .filter(|&i| i != skip)
            .map(|i| {
                (0..m)
                    .filter(|&j| j != skip)
                    .map(|j| self.get(i, j).clone())
                    .collect()
            })
            .collect();
        determinant(minor)
    }
}

/// Determinant by Bareiss elimination with row pivoting. Every division is
/// exact over an integral domain; failed checked operations surface as
/// [`Error::Overflow`].
pub fn determinant<T: ExactScalar>(mut a: Vec<Vec<T>>) -> Result<T> {
    let m = a.len();
    if m == 0 {
        return Ok(T::one());
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..m - 1 {
        let Some(p) = (k..m).find(|&i| !a[i][k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let lhs = a[i][j].checked_mul(&a[k][k]).ok_or(Error::Overflow)?;
                let rhs = a[i][k].checked_mul(&a[k][j]).ok_or(Error::Overflow)?;
                let num = lhs.checked_sub(&rhs).ok_or(Error::Overflow)?;
                a[i][j] = num.checked_div(&prev).ok_or(Error::Overflow)?;
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    Ok(if negate { -det } else { det })
}

pub fn in_degree_laplacian(g: &Digraph) -> InDegreeLaplacian<BigInt> {
    InDegreeLaplacian::new(g)
}

fn check_root(g: &Digraph, r: VertexId) -> Result<()> {
    if r.get() > g.n() {
        Err(Error::VertexOutOfRange {
            vertex: r.get(),
            n: g.n(),
        })
    } else if !g.contains_vertex(r) {
        Err(Error::MissingVertex(r.get()))
    } else {
        Ok(())
    }
}

/// Arborescence count evaluated in the scalar ring `T`.
pub fn count_arborescences_in<T: ExactScalar>(g: &Digraph, r: VertexId) -> Result<T> {
    check_root(g, r)?;
    InDegreeLaplacian::<T>::new(g).principal_minor(r)
}

/// Number of spanning out-arborescences of `g` rooted at `r`.
pub fn count_arborescences(g: &Digraph, r: VertexId) -> Result<Count> {
    let det: BigInt = count_arborescences_in(g, r)?;
    debug_assert!(!det.is_negative());
    Ok(det.magnitude().clone())
}

/// Whether `g` has at least one spanning arborescence rooted at `r`. A
/// single vertex has exactly one (empty) arborescence.
pub fn has_arborescence(g: &Digraph, r: VertexId) -> Result<bool> {
    match count_arborescences_in::<i64>(g, r) {
        Ok(c) => Ok(c > 0),
        Err(Error::Overflow) => Ok(count_arborescences_in::<BigInt>(g, r)?.is_positive()),
        Err(e) => Err(e),
    }
}
