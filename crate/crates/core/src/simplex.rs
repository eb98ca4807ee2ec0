use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A simplex stored as its strictly increasing vertex list.
///
/// Ordering is lexicographic on the vertex list, which is the order used for
/// every deterministic tie-break in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Duplicates are rejected.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptySimplex);
        }
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Simplex(v))
    }

    /// Caller guarantees `v` is nonempty and strictly increasing.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True when every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// Vertices common to both simplices, in increasing order.
    pub fn common_vertices(&self, other: &Simplex) -> Vec<Vertex> {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// The common face of two simplices, if they share any vertex.
    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let common = self.common_vertices(other);
        (!common.is_empty()).then_some(Simplex(common))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: Vec<Vertex> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    /// All faces of dimension `k`, in lexicographic order.
    pub fn faces_of_dim(&self, k: usize) -> Vec<Simplex> {
        if k >= self.0.len() {
            return Vec::new();
        }
        self.0
            .iter()
            .copied()
            .combinations(k + 1)
            .map(Simplex)
            .collect()
    }

    /// Every nonempty face, the simplex itself included.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).flat_map(move |k| self.faces_of_dim(k))
    }

    /// Faces of dimension lower than the simplex itself.
    pub fn proper_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len() - 1).flat_map(move |k| self.faces_of_dim(k))
    }

    /// Applies a vertex relabelling; the result is re-sorted.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Simplex {
        let mut v: Vec<Vertex> = self.0.iter().map(|&x| f(x)).collect();
        v.sort_unstable();
        Simplex(v)
    }
}

impl TryFrom<Vec<Vertex>> for Simplex {
    type Error = Error;

    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<Vertex> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand used heavily in tests and fixtures. Panics on invalid input.
#[macro_export]
macro_rules! sx {
    ($($v:expr),+ $(,)?) => {
        $crate::Simplex::new([$($v as u32),+]).expect("valid simplex literal")
    };
}
