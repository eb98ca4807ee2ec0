//! Walks, paths and reduced paths through a pure complex, plus connectivity,
//! components and (n-1)-orderings.
//!
//! An [`AltSequence`] alternates m-simplices and facets:
//! `σ_1, η_1, σ_2, ..., σ_r, η_r, σ_{r+1}`. Indices below are 0-based, so
//! `sigma(i)` sits between `eta(i-1)` and `eta(i)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::complex::{attachment_among, is_complete_on, set_dimension, PureComplex};
use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// Alternating sequence of m-simplices and facets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AltSequence {
    pub m: usize,
    pub items: Vec<Simplex>,
}

impl AltSequence {
    /// Checks the alternating shape only; membership in a complex is checked
    /// by the validators.
    pub fn new(m: usize, items: Vec<Simplex>) -> Result<Self> {
        let seq = AltSequence { m, items };
        seq.check_shape()?;
        Ok(seq)
    }

    /// Builds `σ_1, η_1, ..., η_r, σ_{r+1}` from its two interleaved lists.
    pub fn interleave(m: usize, sigmas: Vec<Simplex>, etas: Vec<Simplex>) -> Result<Self> {
        if sigmas.len() != etas.len() + 1 {
            return Err(Error::MalformedSequence(format!(
                "{} m-simplices for {} facets",
                sigmas.len(),
                etas.len()
            )));
        }
        let mut items = Vec::with_capacity(sigmas.len() + etas.len());
        let mut etas = etas.into_iter();
        for s in sigmas {
            items.push(s);
            if let Some(e) = etas.next() {
                items.push(e);
            }
        }
        AltSequence::new(m, items)
    }

    fn check_shape(&self) -> Result<()> {
        if self.items.len() < 3 || self.items.len().is_multiple_of(2) {
            return Err(Error::MalformedSequence(format!(
                "expected an odd number of items, at least 3, got {}",
                self.items.len()
            )));
        }
        if let Some(s) = self.sigmas().find(|s| s.dim() != self.m) {
            return Err(Error::MalformedSequence(format!(
                "{s} does not have dimension {}",
                self.m
            )));
        }
        let n = self.items[1].dim();
        if n <= self.m {
            return Err(Error::MalformedSequence(format!(
                "facet dimension {n} must exceed {}",
                self.m
            )));
        }
        if let Some(e) = self.etas().find(|e| e.dim() != n) {
            return Err(Error::MalformedSequence(format!(
                "{e} does not have dimension {n}"
            )));
        }
        Ok(())
    }

    /// Shape check plus membership of every item in `k`.
    pub fn check_against(&self, k: &PureComplex) -> Result<()> {
        self.check_shape()?;
        if let Some(e) = self.etas().find(|e| e.dim() != k.dim()) {
            return Err(Error::MalformedSequence(format!(
                "{e} is not {}-dimensional",
                k.dim()
            )));
        }
        if let Some(s) = self.items.iter().find(|s| !k.contains(s)) {
            return Err(Error::ForeignSimplex(s.clone()));
        }
        Ok(())
    }

    /// The length r (number of facets).
    pub fn len(&self) -> usize {
        self.items.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn sigma(&self, i: usize) -> &Simplex {
        &self.items[2 * i]
    }

    pub fn eta(&self, i: usize) -> &Simplex {
        &self.items[2 * i + 1]
    }

    pub fn sigmas(&self) -> impl Iterator<Item = &Simplex> {
        self.items.iter().step_by(2)
    }

    pub fn etas(&self) -> impl Iterator<Item = &Simplex> {
        self.items.iter().skip(1).step_by(2)
    }

    pub fn first(&self) -> &Simplex {
        &self.items[0]
    }

    pub fn last(&self) -> &Simplex {
        self.items.last().expect("nonempty sequence")
    }

    /// Facets of the sequence as a set; its closure is the simplicial path.
    pub fn facet_set(&self) -> BTreeSet<Simplex> {
        self.etas().cloned().collect()
    }
}

/// A reduced path together with the (n-1)-simplices joining consecutive facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedWitness {
    pub base: AltSequence,
    pub connectors: Vec<Simplex>,
}

/// Facet orderings in which each facet meets the earlier ones in an
/// (n-1)-dimensional attachment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ordering {
    pub facets: Vec<Simplex>,
    pub complete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathRelation {
    XDependsOnY,
    YDependsOnX,
    /// Both closures coincide, so each sequence depends on the other.
    Equal,
    Independent,
}

fn walk_conditions(seq: &AltSequence) -> bool {
    (0..seq.len()).all(|i| {
        let (a, b, eta) = (seq.sigma(i), seq.sigma(i + 1), seq.eta(i));
        a != b && a.is_face_of(eta) && b.is_face_of(eta)
    })
}

fn all_distinct(items: &[Simplex]) -> bool {
    let set: BTreeSet<&Simplex> = items.iter().collect();
    set.len() == items.len()
}

pub fn validate_walk(seq: &AltSequence, k: &PureComplex) -> Result<bool> {
    seq.check_against(k)?;
    Ok(walk_conditions(seq))
}

pub fn validate_path(seq: &AltSequence, k: &PureComplex) -> Result<bool> {
    Ok(validate_walk(seq, k)? && all_distinct(&seq.items))
}

/// The (n-1)-simplices `σ'_z` joining consecutive facets and containing the
/// interior `σ_z`, when they exist and are pairwise distinct.
///
/// Two distinct facets share at most one (n-1)-face, so each connector is
/// forced and no search is needed.
pub(crate) fn connectors(seq: &AltSequence, k: &PureComplex) -> Option<Vec<Simplex>> {
    let mut out = Vec::with_capacity(seq.len().saturating_sub(1));
    for z in 1..seq.len() {
        let ridge = k.shared_ridge(seq.eta(z - 1), seq.eta(z))?;
        if !seq.sigma(z).is_face_of(&ridge) || out.contains(&ridge) {
            return None;
        }
        out.push(ridge);
    }
    Some(out)
}

/// Returns the connector witness when `seq` is a reduced (m,n)-path sequence,
/// `None` otherwise (including malformed or foreign input).
pub fn validate_reduced_path(seq: &AltSequence, k: &PureComplex) -> Option<ReducedWitness> {
    if !validate_path(seq, k).ok()? {
        return None;
    }
    let r = seq.len();
    let start_ok = (1..r).all(|t| !seq.first().is_face_of(seq.eta(t)));
    let end_ok = (0..r - 1).all(|t| !seq.last().is_face_of(seq.eta(t)));
    if !(start_ok && end_ok) {
        return None;
    }
    Some(ReducedWitness {
        base: seq.clone(),
        connectors: connectors(seq, k)?,
    })
}

/// Shortens an (n-1,n)-walk between distinct (n-1)-simplices to a reduced
/// path with the same endpoints by repeatedly cutting out repeated
/// simplices and early re-entries of the endpoints.
pub fn reduce_walk(seq: &AltSequence, k: &PureComplex) -> Result<AltSequence> {
    if seq.m + 1 != k.dim() {
        return Err(Error::DimensionMismatch(seq.m, k.dim()));
    }
    if !validate_walk(seq, k)? {
        return Err(Error::NotAWalk);
    }
    if seq.first() == seq.last() {
        return Err(Error::SameEndpoints);
    }
    let mut items = seq.items.clone();
    while let Some(next) = shortcut(&items) {
        items = next;
    }
    let out = AltSequence { m: seq.m, items };
    debug_assert!(validate_reduced_path(&out, k).is_some());
    Ok(out)
}

/// One shortening step, or `None` once the walk is a reduced path.
pub(crate) fn shortcut(items: &[Simplex]) -> Option<Vec<Simplex>> {
    let r = items.len() / 2;
    let sigma = |i: usize| &items[2 * i];
    let eta = |i: usize| &items[2 * i + 1];
    // A repeated m-simplex: splice from its first to its last occurrence.
    for p in 0..=r {
        if let Some(q) = (p + 1..=r).rev().find(|&q| sigma(q) == sigma(p)) {
            return Some([&items[..2 * p], &items[2 * q..]].concat());
        }
    }
    // A repeated facet: keep the first occurrence, continue after the last.
    for x in 0..r {
        if let Some(y) = (x + 1..r).rev().find(|&y| eta(y) == eta(x)) {
            return Some([&items[..=2 * x + 1], &items[2 * y + 2..]].concat());
        }
    }
    let first = sigma(0);
    if let Some(s) = (1..r).rev().find(|&s| first.is_face_of(eta(s))) {
        return Some([std::slice::from_ref(first), &items[2 * s + 1..]].concat());
    }
    let last = sigma(r);
    if let Some(s) = (0..r - 1).find(|&s| last.is_face_of(eta(s))) {
        return Some([&items[..=2 * s + 1], std::slice::from_ref(last)].concat());
    }
    None
}

fn check_endpoints(k: &PureComplex, a: &Simplex, b: &Simplex) -> Result<usize> {
    for s in [a, b] {
        if !k.contains(s) {
            return Err(Error::ForeignSimplex(s.clone()));
        }
    }
    if a.dim() != b.dim() || a.dim() >= k.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    if a == b {
        return Err(Error::SameEndpoints);
    }
    Ok(a.dim())
}

/// A shortest (m,n)-path from `a` to `b`, found breadth-first over the
/// incidence structure of m-simplices and facets. Ties resolve to the
/// lexicographically smallest facet, then m-simplex.
pub fn find_path(k: &PureComplex, a: &Simplex, b: &Simplex) -> Result<Option<AltSequence>> {
    let m = check_endpoints(k, a, b)?;
    // parent[σ] = (facet, previous σ)
    let mut parent: BTreeMap<Simplex, (usize, Simplex)> = BTreeMap::new();
    let mut facet_seen = vec![false; k.facets().len()];
    let mut queue = VecDeque::from([a.clone()]);
    let mut seen: BTreeSet<Simplex> = BTreeSet::from([a.clone()]);
    'bfs: while let Some(cur) = queue.pop_front() {
        for (fi, f) in k.facets().iter().enumerate() {
            if facet_seen[fi] || !cur.is_face_of(f) {
                continue;
            }
            facet_seen[fi] = true;
            for s in f.faces_of_dim(m) {
                if seen.insert(s.clone()) {
                    parent.insert(s.clone(), (fi, cur.clone()));
                    if &s == b {
                        break 'bfs;
                    }
                    queue.push_back(s);
                }
            }
        }
    }
    if !parent.contains_key(b) {
        return Ok(None);
    }
    let mut rev = vec![b.clone()];
    let mut cur = b.clone();
    while &cur != a {
        let (fi, prev) = parent[&cur].clone();
        rev.push(k.facets()[fi].clone());
        rev.push(prev.clone());
        cur = prev;
    }
    rev.reverse();
    Ok(Some(AltSequence { m, items: rev }))
}

/// Chooses pairwise distinct m-faces, one inside each simplex of `sets`,
/// avoiding `forbidden`. Lexicographically least assignment first, with
/// backtracking.
pub(crate) fn distinct_faces(
    sets: &[Simplex],
    m: usize,
    forbidden: &[&Simplex],
) -> Option<Vec<Simplex>> {
    fn go(sets: &[Simplex], m: usize, forbidden: &[&Simplex], chosen: &mut Vec<Simplex>) -> bool {
        let Some(next) = sets.get(chosen.len()) else {
            return true;
        };
        for face in next.faces_of_dim(m) {
            if forbidden.contains(&&face) || chosen.contains(&face) {
                continue;
            }
            chosen.push(face);
            if go(sets, m, forbidden, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(sets.len());
    go(sets, m, forbidden, &mut chosen).then_some(chosen)
}

/// A reduced (m,n)-path between two m-simplices of `k`.
///
/// For `m = n-1` this reduces a breadth-first path. For lower `m` both
/// endpoints are lifted to (n-1)-simplices, joined by a reduced
/// (n-1,n)-path, trimmed to the last facet holding `a` and the first later
/// facet holding `b`, and the joining (n-1)-simplices are projected to
/// distinct m-faces. Every lift pair is tried and the shortest result kept.
pub fn find_reduced_path(k: &PureComplex, a: &Simplex, b: &Simplex) -> Result<AltSequence> {
    let m = check_endpoints(k, a, b)?;
    let n = k.dim();
    if m + 1 == n {
        let walk = find_path(k, a, b)?.ok_or(Error::NotConnectedPair)?;
        return reduce_walk(&walk, k);
    }
    let ridges = k.faces_of_dim(n - 1);
    let lifts_a: Vec<&Simplex> = ridges.iter().filter(|r| a.is_face_of(r)).collect();
    let lifts_b: Vec<&Simplex> = ridges.iter().filter(|r| b.is_face_of(r)).collect();
    let mut best: Option<AltSequence> = None;
    for la in &lifts_a {
        for lb in &lifts_b {
            if la == lb {
                continue;
            }
            let Some(walk) = find_path(k, la, lb)? else {
                continue;
            };
            let top = reduce_walk(&walk, k)?;
            let Some(candidate) = project_reduced(&top, a, b) else {
                continue;
            };
            if best.as_ref().is_none_or(|cur| candidate.len() < cur.len()) {
                best = Some(candidate);
            }
        }
    }
    let out = best.ok_or(Error::NotConnectedPair)?;
    debug_assert!(validate_reduced_path(&out, k).is_some());
    Ok(out)
}

/// Trims a reduced (n-1,n)-path and projects it to a reduced (m,n)-path
/// between `a` and `b`.
fn project_reduced(top: &AltSequence, a: &Simplex, b: &Simplex) -> Option<AltSequence> {
    let r = top.len();
    let p = (0..r).rev().find(|&q| a.is_face_of(top.eta(q)))?;
    let x = (p..r).find(|&y| b.is_face_of(top.eta(y)))?;
    let joins: Vec<Simplex> = (p + 1..=x).map(|i| top.sigma(i).clone()).collect();
    let taus = distinct_faces(&joins, a.dim(), &[a, b])?;
    let sigmas = std::iter::once(a.clone())
        .chain(taus)
        .chain(std::iter::once(b.clone()))
        .collect();
    let etas = (p..=x).map(|i| top.eta(i).clone()).collect();
    AltSequence::interleave(a.dim(), sigmas, etas).ok()
}

/// Union-find over facets joined by shared (n-1)-faces.
fn facet_classes(k: &PureComplex) -> Vec<usize> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let t = k.facets().len();
    let mut parent: Vec<usize> = (0..t).collect();
    for i in 0..t {
        for j in k.ridge_neighbours(i) {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    (0..t).map(|i| find(&mut parent, i)).collect()
}

/// True when every pair of (n-1)-simplices is joined by an (n-1,n)-path.
pub fn is_connected(k: &PureComplex) -> bool {
    facet_classes(k).iter().all(|&c| c == 0)
}

/// Facets grouped into the components of `k`. Facets within a class are
/// sorted, and classes are sorted by their facet lists.
pub fn components(k: &PureComplex) -> Vec<Vec<Simplex>> {
    let mut groups: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
    for (f, c) in k.facets().iter().zip(facet_classes(k)) {
        groups.entry(c).or_default().push(f.clone());
    }
    let mut out: Vec<Vec<Simplex>> = groups.into_values().collect();
    out.sort();
    out
}

/// Attachment of `eta` against already placed facets, classified as
/// (has dimension n-1, is complete on n vertices).
pub(crate) fn attachment_kind(eta: &Simplex, placed: &[&Simplex], n: usize) -> (bool, bool) {
    let att = attachment_among(eta, placed.iter().copied());
    let top = set_dimension(&att) == Some(n - 1);
    (top, top && is_complete_on(&att, n))
}

/// Greedy (n-1)-ordering: start from the least facet and keep appending the
/// least unused facet whose attachment is (n-1)-dimensional. Returns `None`
/// exactly when `k` is disconnected.
pub fn find_ordering(k: &PureComplex) -> Option<Ordering> {
    let n = k.dim();
    let facets = k.facets();
    let mut used = vec![false; facets.len()];
    let mut order: Vec<&Simplex> = vec![&facets[0]];
    used[0] = true;
    let mut complete = true;
    while order.len() < facets.len() {
        let next = (0..facets.len()).find_map(|i| {
            if used[i] {
                return None;
            }
            let (top, full) = attachment_kind(&facets[i], &order, n);
            top.then_some((i, full))
        });
        let (i, full) = next?;
        used[i] = true;
        complete &= full;
        order.push(&facets[i]);
    }
    Some(Ordering {
        facets: order.into_iter().cloned().collect(),
        complete,
    })
}

/// Classifies two reduced path sequences between the same endpoints by
/// containment of their simplicial paths.
pub fn compare_paths(x: &AltSequence, y: &AltSequence, k: &PureComplex) -> Result<PathRelation> {
    if x.first() != y.first() || x.last() != y.last() || x.m != y.m {
        return Err(Error::EndpointMismatch);
    }
    if validate_reduced_path(x, k).is_none() || validate_reduced_path(y, k).is_none() {
        return Err(Error::NotReduced);
    }
    // Closures of facet sets nest exactly when the facet sets do, since all
    // members are facets of the same dimension.
    let (fx, fy) = (x.facet_set(), y.facet_set());
    Ok(match (fx.is_subset(&fy), fy.is_subset(&fx)) {
        (true, true) => PathRelation::Equal,
        (true, false) => PathRelation::XDependsOnY,
        (false, true) => PathRelation::YDependsOnX,
        (false, false) => PathRelation::Independent,
    })
}
