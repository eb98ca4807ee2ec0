//! Circuits and simplicial cycles.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::{joint_simplices, PureComplex};
use crate::error::{Error, Result};
use crate::paths::{
    connectors, distinct_faces, is_connected, shortcut, validate_walk, AltSequence,
};
use crate::simplex::Simplex;

/// A closed sequence `σ_1, η_1, ..., η_r, σ_1` with its joining
/// (n-1)-simplices. Serializes as the sequence plus a `connectors` array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    #[serde(flatten)]
    pub seq: AltSequence,
    pub connectors: Vec<Simplex>,
}

fn circuit_conditions(seq: &AltSequence) -> bool {
    let r = seq.len();
    if seq.first() != seq.last() {
        return false;
    }
    let sigmas: BTreeSet<&Simplex> = seq.sigmas().take(r).collect();
    let etas: BTreeSet<&Simplex> = seq.etas().collect();
    sigmas.len() == r && etas.len() == r
}

/// True when `seq` is a closed walk whose m-simplices (up to the repeated
/// endpoint) and facets are pairwise distinct.
pub fn validate_circuit(seq: &AltSequence, k: &PureComplex) -> Result<bool> {
    Ok(validate_walk(seq, k)? && circuit_conditions(seq))
}

/// Connector witness when `seq` is an (m,n)-simplicial cycle sequence.
pub fn validate_cycle(seq: &AltSequence, k: &PureComplex) -> Option<CycleWitness> {
    if !validate_circuit(seq, k).ok()? {
        return None;
    }
    let r = seq.len();
    if r < 3 {
        return None;
    }
    if (1..r - 1).any(|t| seq.first().is_face_of(seq.eta(t))) {
        return None;
    }
    Some(CycleWitness {
        seq: seq.clone(),
        connectors: connectors(seq, k)?,
    })
}

/// Some (m,n)-circuit sequence of `k`, found depth-first over the incidence
/// structure of m-simplices and facets.
pub fn find_circuit(k: &PureComplex, m: usize) -> Option<AltSequence> {
    struct Search<'a> {
        k: &'a PureComplex,
        m: usize,
        sigmas: Vec<Simplex>,
        etas: Vec<usize>,
    }
    impl Search<'_> {
        fn extend(&mut self) -> bool {
            let cur = self.sigmas.last().expect("started").clone();
            for (fi, f) in self.k.facets().iter().enumerate() {
                if self.etas.contains(&fi) || !cur.is_face_of(f) {
                    continue;
                }
                self.etas.push(fi);
                if self.sigmas.len() >= 2 && self.sigmas[0].is_face_of(f) {
                    let start = self.sigmas[0].clone();
                    self.sigmas.push(start);
                    return true;
                }
                for s in f.faces_of_dim(self.m) {
                    if self.sigmas.contains(&s) {
                        continue;
                    }
                    self.sigmas.push(s);
                    if self.extend() {
                        return true;
                    }
                    self.sigmas.pop();
                }
                self.etas.pop();
            }
            false
        }
    }
    if m >= k.dim() {
        return None;
    }
    for start in k.faces_of_dim(m) {
        let mut search = Search {
            k,
            m,
            sigmas: vec![start.clone()],
            etas: Vec::new(),
        };
        if search.extend() {
            let etas = search.etas.iter().map(|&i| k.facets()[i].clone()).collect();
            return AltSequence::interleave(m, search.sigmas, etas).ok();
        }
    }
    None
}

/// Searches for an (m,n)-simplicial cycle sequence.
///
/// Runs over every sequence of at least three distinct facets in which
/// neighbours share an (n-1)-face, looking for an m-simplex in the first and
/// last facet that misses some facet in between. From such a sequence the
/// cycle is built explicitly: cut to the stretch that leaves and re-enters
/// the base simplex, reduce the joining (n-1,n)-walk, then project its
/// joining (n-1)-simplices to distinct m-faces.
pub fn find_cycle(k: &PureComplex, m: usize) -> Option<CycleWitness> {
    if m >= k.dim() {
        return None;
    }
    let adjacency: Vec<Vec<usize>> = (0..k.facets().len())
        .map(|i| k.ridge_neighbours(i))
        .collect();
    let mut trail = Vec::new();
    for start in 0..k.facets().len() {
        trail.push(start);
        if let Some(w) = search_from(k, m, &adjacency, &mut trail) {
            return Some(w);
        }
        trail.pop();
    }
    None
}

fn search_from(
    k: &PureComplex,
    m: usize,
    adjacency: &[Vec<usize>],
    trail: &mut Vec<usize>,
) -> Option<CycleWitness> {
    if trail.len() >= 3 {
        let etas: Vec<&Simplex> = trail.iter().map(|&i| &k.facets()[i]).collect();
        if let Some(w) = cycle_from_facets(k, m, &etas) {
            return Some(w);
        }
    }
    let last = *trail.last().expect("nonempty trail");
    for &next in &adjacency[last] {
        if trail.contains(&next) {
            continue;
        }
        trail.push(next);
        if let Some(w) = search_from(k, m, adjacency, trail) {
            return Some(w);
        }
        trail.pop();
    }
    None
}

/// Tries every qualifying base m-simplex for a fixed facet sequence.
fn cycle_from_facets(k: &PureComplex, m: usize, etas: &[&Simplex]) -> Option<CycleWitness> {
    let r = etas.len();
    let shared = etas[0].intersection(etas[r - 1])?;
    for base in shared.faces_of_dim(m) {
        if etas[1..r - 1].iter().all(|e| base.is_face_of(e)) {
            continue;
        }
        if let Some(w) = build_cycle(k, &base, etas) {
            return Some(w);
        }
    }
    None
}

fn build_cycle(k: &PureComplex, base: &Simplex, etas: &[&Simplex]) -> Option<CycleWitness> {
    let r = etas.len();
    // First facet after the start that misses the base, then the first one
    // after it that contains the base again.
    let p = (1..r - 1).find(|&q| !base.is_face_of(etas[q]))?;
    let back = (p + 1..r).find(|&l| base.is_face_of(etas[l]))?;
    let mut items = Vec::with_capacity(2 * (back - p) + 1);
    for i in p..back {
        items.push(k.shared_ridge(etas[i - 1], etas[i])?);
        items.push(etas[i].clone());
    }
    items.push(k.shared_ridge(etas[back - 1], etas[back])?);
    let joined = reduce_items(items)?;
    let ridges: Vec<Simplex> = joined.iter().step_by(2).cloned().collect();
    let inner: Vec<Simplex> = joined.iter().skip(1).step_by(2).cloned().collect();
    let taus = distinct_faces(&ridges, base.dim(), &[base])?;

    let mut sigmas = Vec::with_capacity(taus.len() + 2);
    sigmas.push(base.clone());
    sigmas.extend(taus);
    sigmas.push(base.clone());
    let mut facets = Vec::with_capacity(inner.len() + 2);
    facets.push(etas[p - 1].clone());
    facets.extend(inner);
    facets.push(etas[back].clone());
    let seq = AltSequence::interleave(base.dim(), sigmas, facets).ok()?;
    validate_cycle(&seq, k)
}

/// Shortens an alternating list of (n-1)-simplices and facets, where
/// neighbouring (n-1)-simplices may coincide, to a reduced path.
fn reduce_items(mut items: Vec<Simplex>) -> Option<Vec<Simplex>> {
    if items.first() == items.last() {
        return None;
    }
    while let Some(next) = shortcut(&items) {
        items = next;
    }
    Some(items)
}

/// True when no (m,n)-simplicial cycle exists for any `0 <= m < n`.
pub fn is_acyclic(k: &PureComplex) -> bool {
    (0..k.dim()).all(|m| find_cycle(k, m).is_none())
}

/// A joint m-simplex (m <= n-2) lying in no joint (n-1)-simplex. On a
/// connected complex its existence forces a cycle.
pub fn joint_cyclicity_premise(k: &PureComplex) -> Result<Option<(usize, Simplex)>> {
    if !is_connected(k) {
        return Err(Error::NotConnected);
    }
    let n = k.dim();
    if n < 2 {
        return Ok(None);
    }
    let joint_ridges = joint_simplices(k, n - 1)?;
    for m in 0..=n - 2 {
        for s in joint_simplices(k, m)? {
            if !joint_ridges.iter().any(|r| s.is_face_of(r)) {
                return Ok(Some((m, s)));
            }
        }
    }
    Ok(None)
}
