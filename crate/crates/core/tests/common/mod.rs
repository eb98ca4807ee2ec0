#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use simtree::paths::AltSequence;
use simtree::{build_complex, PureComplex, Simplex};

pub fn complex(facets: &[&[u32]]) -> PureComplex {
    build_complex(
        facets
            .iter()
            .map(|f| Simplex::new(f.iter().copied()).unwrap()),
    )
    .unwrap()
}

/// Smallest sorted facet list over every bijection onto `1..=p`.
pub fn brute_canonical(k: &PureComplex) -> Vec<Vec<u32>> {
    let verts: Vec<u32> = k.vertices().collect();
    let p = verts.len();
    (1..=p as u32)
        .permutations(p)
        .map(|perm| {
            k.facets()
                .iter()
                .map(|f| {
                    f.vertices()
                        .iter()
                        .map(|v| perm[verts.binary_search(v).unwrap()])
                        .sorted()
                        .collect::<Vec<_>>()
                })
                .sorted()
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}

/// Calls `visit` on every closed sequence `σ_1, η_1, ..., η_r, σ_1` with
/// distinct facets, `lo <= r <= facets`, and each σ an m-face of its two
/// neighbouring facets. Stops when `visit` returns true.
pub fn closed_sequences(
    k: &PureComplex,
    m: usize,
    lo: usize,
    mut visit: impl FnMut(&AltSequence) -> bool,
) -> bool {
    let facets = k.facets();
    for r in lo..=facets.len() {
        for order in (0..facets.len()).permutations(r) {
            let etas: Vec<&Simplex> = order.iter().map(|&i| &facets[i]).collect();
            let choices: Vec<Vec<Simplex>> = (0..r)
                .map(|i| {
                    let prev = etas[(i + r - 1) % r];
                    prev.faces_of_dim(m)
                        .into_iter()
                        .filter(|s| s.is_face_of(etas[i]))
                        .collect()
                })
                .collect();
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            for sigmas in choices.into_iter().multi_cartesian_product() {
                let mut items = Vec::with_capacity(2 * r + 1);
                for i in 0..r {
                    items.push(sigmas[i].clone());
                    items.push(etas[i].clone());
                }
                items.push(sigmas[0].clone());
                if visit(&AltSequence::new(m, items).unwrap()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Every face of every facet, by brute force.
pub fn all_faces(k: &PureComplex) -> BTreeSet<Simplex> {
    k.facets()
        .iter()
        .flat_map(|f| f.faces().collect::<Vec<_>>())
        .collect()
}
