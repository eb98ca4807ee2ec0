//! Pure simplicial complexes stored by their facets, with every face
//! materialized at construction time.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};

/// Size limits applied when building a complex.
///
/// The face index is built eagerly, so the cost grows like `facets * 2^(n+1)`.
/// The defaults are generous for hand-sized inputs and can be raised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_dimension: usize,
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dimension: 10,
            max_vertices: 64,
        }
    }
}

/// The JSON interchange form `{"n": <int>, "facets": [[v, ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetList {
    pub n: usize,
    pub facets: Vec<Vec<Vertex>>,
}

/// An immutable pure n-dimensional simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureComplex {
    n: usize,
    facets: Vec<Simplex>,
    // faces[k] holds every k-simplex of the complex.
    faces: Vec<BTreeSet<Simplex>>,
}

/// Builds the complex generated by `facets` under the default [`Limits`].
pub fn build_complex(facets: impl IntoIterator<Item = Simplex>) -> Result<PureComplex> {
    build_complex_with(facets, &Limits::default())
}

pub fn build_complex_with(
    facets: impl IntoIterator<Item = Simplex>,
    limits: &Limits,
) -> Result<PureComplex> {
    let facets: BTreeSet<Simplex> = facets.into_iter().collect();
    let first = facets.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    if let Some(other) = facets.iter().find(|f| f.dim() != n) {
        return Err(Error::MixedDimension {
            first: n,
            other: other.dim(),
        });
    }
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if n > limits.max_dimension {
        return Err(Error::TooLarge(format!(
            "dimension {n} exceeds {}",
            limits.max_dimension
        )));
    }
    let mut faces = vec![BTreeSet::new(); n + 1];
    for f in &facets {
        for face in f.faces() {
            faces[face.dim()].insert(face);
        }
    }
    if faces[0].len() > limits.max_vertices {
        return Err(Error::TooLarge(format!(
            "{} vertices exceed {}",
            faces[0].len(),
            limits.max_vertices
        )));
    }
    Ok(PureComplex {
        n,
        facets: facets.into_iter().collect(),
        faces,
    })
}

impl PureComplex {
    pub fn from_facet_list(list: &FacetList) -> Result<Self> {
        let facets = list
            .facets
            .iter()
            .map(|f| Simplex::new(f.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        let k = build_complex(facets)?;
        if k.n != list.n {
            return Err(Error::DeclaredDimension {
                declared: list.n,
                actual: k.n,
            });
        }
        Ok(k)
    }

    pub fn to_facet_list(&self) -> FacetList {
        FacetList {
            n: self.n,
            facets: self.facets.iter().map(|f| f.vertices().to_vec()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.faces[0].iter().map(|s| s.vertices()[0])
    }

    pub fn vertex_count(&self) -> usize {
        self.faces[0].len()
    }

    /// All k-simplices, or an empty set when `k > n`.
    pub fn faces_of_dim(&self, k: usize) -> &BTreeSet<Simplex> {
        static EMPTY: BTreeSet<Simplex> = BTreeSet::new();
        self.faces.get(k).unwrap_or(&EMPTY)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces_of_dim(s.dim()).contains(s)
    }

    pub fn is_facet(&self, s: &Simplex) -> bool {
        s.dim() == self.n && self.faces[self.n].contains(s)
    }

    pub fn facet_position(&self, s: &Simplex) -> Option<usize> {
        self.facets.binary_search(s).ok()
    }

    pub fn facets_containing<'a>(&'a self, s: &'a Simplex) -> impl Iterator<Item = &'a Simplex> {
        self.facets.iter().filter(move |f| s.is_face_of(f))
    }

    /// The common (n-1)-face of two distinct facets, if they have one.
    pub fn shared_ridge(&self, a: &Simplex, b: &Simplex) -> Option<Simplex> {
        if a == b {
            return None;
        }
        let common = a.common_vertices(b);
        (common.len() == self.n).then(|| Simplex::from_sorted(common))
    }

    /// Facets sharing an (n-1)-face with the facet at index `i`, as indices.
    pub fn ridge_neighbours(&self, i: usize) -> Vec<usize> {
        let f = &self.facets[i];
        (0..self.facets.len())
            .filter(|&j| j != i && f.common_vertices(&self.facets[j]).len() == self.n)
            .collect()
    }
}

/// All faces of the given simplices.
pub fn closure<'a>(simplices: impl IntoIterator<Item = &'a Simplex>) -> BTreeSet<Simplex> {
    simplices.into_iter().flat_map(|s| s.faces()).collect()
}

/// Proper faces of the facet `f` that also lie in some other facet of `k`.
pub fn attachment(f: &Simplex, k: &PureComplex) -> Result<BTreeSet<Simplex>> {
    if !k.is_facet(f) {
        return Err(Error::NotAFacet(f.clone()));
    }
    Ok(attachment_among(f, k.facets().iter().filter(|g| *g != f)))
}

/// Attachment of `f` against an arbitrary collection of other facets.
pub(crate) fn attachment_among<'a>(
    f: &Simplex,
    others: impl IntoIterator<Item = &'a Simplex>,
) -> BTreeSet<Simplex> {
    let mut out = BTreeSet::new();
    for g in others {
        if let Some(common) = f.intersection(g) {
            out.extend(common.faces());
        }
    }
    out
}

/// Dimension of a finite set of simplices, `None` when empty.
pub fn set_dimension(simplices: &BTreeSet<Simplex>) -> Option<usize> {
    simplices.iter().map(Simplex::dim).max()
}

/// True when `simplices` has dimension `m` and contains every (m+1)-subset of
/// its vertex set.
pub fn is_m_complete_set(simplices: &BTreeSet<Simplex>, m: usize) -> bool {
    if set_dimension(simplices) != Some(m) {
        return false;
    }
    let verts: BTreeSet<Vertex> = simplices
        .iter()
        .flat_map(|s| s.vertices().iter().copied())
        .collect();
    if verts.len() < m + 1 {
        return false;
    }
    let all = Simplex::from_sorted(verts.into_iter().collect());
    all.faces_of_dim(m).iter().all(|s| simplices.contains(s))
}

/// True when `simplices` is exactly the closure of one simplex on `vertices`
/// vertices (a complete complex).
pub fn is_complete_on(simplices: &BTreeSet<Simplex>, vertices: usize) -> bool {
    match simplices.iter().max_by_key(|s| s.len()) {
        Some(top) if top.len() == vertices => {
            simplices.len() == (1usize << vertices) - 1
                && top.faces().all(|s| simplices.contains(&s))
        }
        _ => false,
    }
}

pub fn is_m_complete(k: &PureComplex, m: usize) -> bool {
    if k.dim() != m {
        return false;
    }
    let all = Simplex::from_sorted(k.vertices().collect());
    all.faces_of_dim(m).iter().all(|s| k.contains(s))
}

/// Number of k-simplices.
pub fn alpha(k: &PureComplex, dim: usize) -> Result<usize> {
    if dim > k.dim() {
        return Err(Error::DimensionOutOfRange { k: dim, n: k.dim() });
    }
    Ok(k.faces_of_dim(dim).len())
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Number of k-simplices of a simplicial tree of dimension `n` on `p` vertices:
/// `(p - n) C(n, k) + C(n, k + 1)`.
pub fn tree_count_formula(p: i64, n: i64, k: i64) -> i64 {
    (p - n) * binomial(n, k) + binomial(n, k + 1)
}

/// Count condition for (m, n)-trees, computed exactly:
/// `((p-m-1)/(n-m)) C(n+1, k+1) - ((p-n-1)/(n-m)) C(m+1, k+1)`.
///
/// The value may be non-integral; callers decide what that means.
///
/// Panics if `n <= m`.
pub fn dewdney_count_formula(p: i64, m: i64, n: i64, k: i64) -> Ratio<i64> {
    assert!(n > m, "dewdney_count_formula needs n > m");
    let d = n - m;
    Ratio::new(p - m - 1, d) * binomial(n + 1, k + 1)
        - Ratio::new(p - n - 1, d) * binomial(m + 1, k + 1)
}

/// Every simplex of dimension at most `dim`.
pub fn k_skeleton(k: &PureComplex, dim: usize) -> Result<BTreeSet<Simplex>> {
    if dim > k.dim() {
        return Err(Error::DimensionOutOfRange { k: dim, n: k.dim() });
    }
    Ok((0..=dim)
        .flat_map(|d| k.faces_of_dim(d).iter().cloned())
        .collect())
}

/// m-simplices contained in at least two facets.
pub fn joint_simplices(k: &PureComplex, m: usize) -> Result<BTreeSet<Simplex>> {
    if m >= k.dim() {
        return Err(Error::DimensionOutOfRange {
            k: m,
            n: k.dim() - 1,
        });
    }
    let mut seen: BTreeMap<Simplex, usize> = BTreeMap::new();
    for f in k.facets() {
        for face in f.faces_of_dim(m) {
            *seen.entry(face).or_default() += 1;
        }
    }
    Ok(seen
        .into_iter()
        .filter(|(_, c)| *c >= 2)
        .map(|(s, _)| s)
        .collect())
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    vertices: BTreeSet<Vertex>,
    adjacency: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    /// Edge endpoints are added to the vertex set automatically.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut g = Graph::default();
        for v in vertices {
            g.vertices.insert(v);
        }
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.vertices.insert(a);
            g.vertices.insert(b);
            g.adjacency.entry(a).or_default().insert(b);
            g.adjacency.entry(b).or_default().insert(a);
        }
        Ok(g)
    }

    /// The 1-skeleton of a simplex set, read as a graph.
    pub fn from_simplices<'a>(simplices: impl IntoIterator<Item = &'a Simplex>) -> Self {
        let mut verts = Vec::new();
        let mut edges = Vec::new();
        for s in simplices {
            match s.vertices() {
                [v] => verts.push(*v),
                [a, b] => edges.push((*a, *b)),
                _ => {}
            }
        }
        Graph::new(verts, edges).expect("simplex edges have distinct endpoints")
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&a, ns)| ns.range(a + 1..).map(move |&b| (a, b)))
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency.get(&a).is_some_and(|ns| ns.contains(&b))
    }

    fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }
}

/// Every vertex subset forming a clique in `g`, as simplices.
pub fn clique_complex(g: &Graph) -> BTreeSet<Simplex> {
    let mut out = BTreeSet::new();
    // Grow each clique only by vertices larger than its current maximum.
    let mut stack: Vec<(Vec<Vertex>, Vec<Vertex>)> = g
        .vertices()
        .iter()
        .map(|&v| (vec![v], g.neighbours(v).filter(|&w| w > v).collect()))
        .collect();
    while let Some((clique, candidates)) = stack.pop() {
        for (i, &w) in candidates.iter().enumerate() {
            let mut next = clique.clone();
            next.push(w);
            let rest = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&x| g.has_edge(w, x))
                .collect();
            stack.push((next, rest));
        }
        out.insert(Simplex::from_sorted(clique));
    }
    out
}
