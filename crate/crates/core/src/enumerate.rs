//! Exhaustive generation of small pure complexes and the conjecture harness
//! that runs over them.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::certify_by_definition;
use crate::complex::{
    alpha, build_complex, dewdney_count_formula, tree_count_formula, FacetList, PureComplex,
};
use crate::cycles::{find_circuit, find_cycle};
use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};

/// Labelings compared by [`canonical_form`] before it gives up.
pub const DEFAULT_PERMUTATION_BUDGET: u64 = 1_000_000;

/// Bounds of an exhaustive enumeration. Complexes with between
/// `min_facets` and `max_facets` facets on at most `max_vertices` vertices
/// are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpace {
    pub n: usize,
    pub min_facets: usize,
    pub max_facets: usize,
    pub max_vertices: usize,
    pub up_to_iso: bool,
}

impl EnumSpace {
    /// Up to `max_facets` facets, counted up to isomorphism.
    pub fn new(n: usize, max_facets: usize, max_vertices: usize) -> Self {
        EnumSpace {
            n,
            min_facets: 1,
            max_facets,
            max_vertices,
            up_to_iso: true,
        }
    }

    /// Exactly `facets` facets.
    pub fn exactly(n: usize, facets: usize, max_vertices: usize) -> Self {
        EnumSpace {
            min_facets: facets,
            ..Self::new(n, facets, max_vertices)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.max_facets == 0 || self.min_facets == 0 || self.min_facets > self.max_facets {
            return Err(Error::InvalidSpace(format!(
                "need 1 <= min_facets <= max_facets, got {}..={}",
                self.min_facets, self.max_facets
            )));
        }
        if self.max_vertices < self.n + 1 {
            return Err(Error::InvalidSpace(format!(
                "max_vertices {} is below n+1 = {}",
                self.max_vertices,
                self.n + 1
            )));
        }
        Ok(())
    }
}

/// Canonical facet list of `k`: vertices relabeled to `1..=p`, facets sorted.
/// Isomorphic complexes get identical forms.
pub fn canonical_form(k: &PureComplex) -> Result<Vec<Vec<Vertex>>> {
    let facets: Vec<Vec<Vertex>> = k.facets().iter().map(|f| f.vertices().to_vec()).collect();
    canonical_facets(&facets, DEFAULT_PERMUTATION_BUDGET)
}

/// Canonical form of a raw facet list.
///
/// Colour refinement on the vertex-facet incidence splits the vertices into
/// classes no isomorphism can mix. While some class has several members,
/// each member in turn is given its own colour and the refinement repeated.
/// Every discrete colouring reached labels the vertices by colour rank, and
/// the smallest resulting sorted facet list is the form. `budget` caps the
/// number of discrete colourings visited.
pub fn canonical_facets(facets: &[Vec<Vertex>], budget: u64) -> Result<Vec<Vec<Vertex>>> {
    let verts: Vec<Vertex> = facets.iter().flatten().copied().sorted().dedup().collect();
    let index = |v: Vertex| verts.binary_search(&v).expect("vertex of a facet");
    let incidence: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| f.iter().map(|&v| index(v)).collect())
        .collect();
    let mut containing = vec![Vec::new(); verts.len()];
    for (fi, f) in incidence.iter().enumerate() {
        for &v in f {
            containing[v].push(fi);
        }
    }
    let mut search = Search {
        incidence: &incidence,
        containing: &containing,
        best: None,
        leaves: 0,
        budget,
    };
    search.descend(vec![0; verts.len()])?;
    Ok(search.best.unwrap_or_default())
}

struct Search<'a> {
    incidence: &'a [Vec<usize>],
    containing: &'a [Vec<usize>],
    best: Option<Vec<Vec<Vertex>>>,
    leaves: u64,
    budget: u64,
}

impl Search<'_> {
    /// Refines `colour` to a stable colouring whose ranks respect the
    /// input order. Returns the number of classes.
    fn refine(&self, colour: &mut Vec<usize>) -> usize {
        let mut classes = colour.iter().sorted().dedup().count();
        loop {
            let signatures: Vec<(usize, Vec<Vec<usize>>)> = (0..colour.len())
                .map(|v| {
                    let around = self.containing[v]
                        .iter()
                        .map(|&fi| {
                            self.incidence[fi]
                                .iter()
                                .filter(|&&u| u != v)
                                .map(|&u| colour[u])
                                .sorted()
                                .collect::<Vec<_>>()
                        })
                        .sorted()
                        .collect();
                    (colour[v], around)
                })
                .collect();
            let ranks: Vec<&(usize, Vec<Vec<usize>>)> =
                signatures.iter().sorted().dedup().collect();
            *colour = signatures
                .iter()
                .map(|s| ranks.binary_search(&s).expect("own signature"))
                .collect();
            if ranks.len() == classes {
                return classes;
            }
            classes = ranks.len();
        }
    }

    fn descend(&mut self, mut colour: Vec<usize>) -> Result<()> {
        let classes = self.refine(&mut colour);
        if classes == colour.len() {
            self.leaves += 1;
            if self.leaves > self.budget {
                return Err(Error::TooLarge(format!(
                    "more than {} labelings to compare",
                    self.budget
                )));
            }
            let form: Vec<Vec<Vertex>> = self
                .incidence
                .iter()
                .map(|f| {
                    f.iter()
                        .map(|&v| colour[v] as Vertex + 1)
                        .sorted()
                        .collect()
                })
                .sorted()
                .collect();
            if self.best.as_ref().is_none_or(|b| form < *b) {
                self.best = Some(form);
            }
            return Ok(());
        }
        let target = (0..classes)
            .find(|&c| colour.iter().filter(|&&x| x == c).count() > 1)
            .expect("a class with several members");
        let members: Vec<usize> = (0..colour.len()).filter(|&v| colour[v] == target).collect();
        for &v in &members {
            let split = colour
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + usize::from(c == target && u != v))
                .collect();
            self.descend(split)?;
        }
        Ok(())
    }
}

fn complex_of(form: &[Vec<Vertex>]) -> PureComplex {
    build_complex(
        form.iter()
            .map(|f| Simplex::new(f.iter().copied()).expect("enumerated facet")),
    )
    .expect("enumerated complex")
}

/// One-facet extensions of a canonical form on `1..=p`: the new facet takes
/// `j` fresh labels `p+1..=p+j` and `n+1-j` existing ones.
fn augment(form: &[Vec<Vertex>], n: usize, max_vertices: usize) -> Vec<Vec<Vec<Vertex>>> {
    let p = form.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut out = Vec::new();
    for fresh in 0..=(n + 1) {
        if p + fresh > max_vertices || n + 1 - fresh > p {
            continue;
        }
        let new_labels = (p + 1..=p + fresh).map(|v| v as Vertex);
        for old in (1..=p as Vertex).combinations(n + 1 - fresh) {
            let facet: Vec<Vertex> = old.into_iter().chain(new_labels.clone()).collect();
            if form.contains(&facet) {
                continue;
            }
            let mut next = form.to_vec();
            next.push(facet);
            out.push(next);
        }
    }
    out
}

/// Every pure n-complex within `space`, in a deterministic order: by facet
/// count, then by facet list. With `up_to_iso` each isomorphism class
/// appears once, in canonical form. Without it, every facet set over labels
/// `1..=max_vertices` whose vertices are exactly `1..=p` for some `p`.
pub fn enumerate(space: &EnumSpace) -> Result<Vec<PureComplex>> {
    space.validate()?;
    let forms = if space.up_to_iso {
        enumerate_iso(space)?
    } else {
        enumerate_labelled(space)
    };
    Ok(forms.iter().map(|f| complex_of(f)).collect())
}

fn enumerate_iso(space: &EnumSpace) -> Result<Vec<Vec<Vec<Vertex>>>> {
    let n = space.n;
    let mut level: BTreeSet<Vec<Vec<Vertex>>> = BTreeSet::new();
    level.insert(vec![(1..=(n + 1) as Vertex).collect()]);
    let mut out = Vec::new();
    for t in 1..=space.max_facets {
        if t >= space.min_facets {
            out.extend(level.iter().cloned());
        }
        if t == space.max_facets {
            break;
        }
        let next: Vec<Vec<Vec<Vec<Vertex>>>> = level
            .par_iter()
            .map(|form| {
                augment(form, n, space.max_vertices)
                    .iter()
                    .map(|f| canonical_facets(f, DEFAULT_PERMUTATION_BUDGET))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        level = next.into_iter().flatten().collect();
    }
    Ok(out)
}

fn enumerate_labelled(space: &EnumSpace) -> Vec<Vec<Vec<Vertex>>> {
    let all: Vec<Vec<Vertex>> = (1..=space.max_vertices as Vertex)
        .combinations(space.n + 1)
        .collect();
    let mut out = Vec::new();
    for t in space.min_facets..=space.max_facets {
        for pick in all.iter().combinations(t) {
            let used: BTreeSet<Vertex> = pick.iter().copied().flatten().copied().collect();
            let gap_free = used.iter().copied().eq(1..=used.len() as Vertex);
            if gap_free {
                out.push(pick.into_iter().cloned().collect());
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Conjecture {
    /// No (n-1,n)-circuits and the Dewdney count for some `1 <= k <= n-1`.
    C1,
    /// No (n-1,n)-circuits and the Dewdney count for every `1 <= k <= n-1`.
    C2,
    /// Cycle-free for some m, the tree count for some `1 <= k <= n-1`, and
    /// `α_n = p - n`.
    NewConj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Consistent,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureVerdict {
    pub conjecture: Conjecture,
    pub complex: FacetList,
    pub premises_hold: bool,
    pub is_tree: bool,
    pub status: Status,
}

fn dewdney_matches(k: &PureComplex, dim: usize) -> bool {
    let (p, n) = (k.vertex_count() as i64, k.dim() as i64);
    let actual = alpha(k, dim).expect("dim in range") as i64;
    dewdney_count_formula(p, n - 1, n, dim as i64) == Ratio::from_integer(actual)
}

fn tree_count_matches(k: &PureComplex, dim: usize) -> bool {
    let (p, n) = (k.vertex_count() as i64, k.dim() as i64);
    alpha(k, dim).expect("dim in range") as i64 == tree_count_formula(p, n, dim as i64)
}

/// The premises of `which` for `k`, with m fixed to n-1 for the Dewdney
/// conjectures.
pub fn premises_hold(k: &PureComplex, which: Conjecture) -> bool {
    let n = k.dim();
    match which {
        Conjecture::C1 => (1..n).any(|d| dewdney_matches(k, d)) && find_circuit(k, n - 1).is_none(),
        Conjecture::C2 => {
            n >= 2 && (1..n).all(|d| dewdney_matches(k, d)) && find_circuit(k, n - 1).is_none()
        }
        Conjecture::NewConj => {
            k.facets().len() as i64 == k.vertex_count() as i64 - n as i64
                && (1..n).any(|d| tree_count_matches(k, d))
                && (0..n).any(|m| find_cycle(k, m).is_none())
        }
    }
}

/// Tests the "if" direction of `which` on `k`: a counterexample satisfies
/// the premises without being a tree.
pub fn test_conjecture(k: &PureComplex, which: Conjecture) -> Result<ConjectureVerdict> {
    let premises_hold = premises_hold(k, which);
    let is_tree = certify_by_definition(k);
    let form = canonical_form(k)?;
    Ok(ConjectureVerdict {
        conjecture: which,
        complex: FacetList {
            n: k.dim(),
            facets: form,
        },
        premises_hold,
        is_tree,
        status: if premises_hold && !is_tree {
            Status::Counterexample
        } else {
            Status::Consistent
        },
    })
}

/// Verdicts for every complex of `space`, sorted by canonical form.
/// Complexes are checked in parallel.
pub fn evaluate_space(space: &EnumSpace, which: Conjecture) -> Result<Vec<ConjectureVerdict>> {
    let complexes = enumerate(space)?;
    let mut verdicts = complexes
        .par_iter()
        .map(|k| test_conjecture(k, which))
        .collect::<Result<Vec<_>>>()?;
    verdicts.sort_by(|a, b| a.complex.facets.cmp(&b.complex.facets));
    Ok(verdicts)
}

pub fn search_counterexamples(
    space: &EnumSpace,
    which: Conjecture,
) -> Result<Vec<ConjectureVerdict>> {
    Ok(evaluate_space(space, which)?
        .into_iter()
        .filter(|v| v.status == Status::Counterexample)
        .collect())
}

/// Verdicts whose premises hold, kept for audit whatever the tree check
/// said.
pub fn near_misses(verdicts: &[ConjectureVerdict]) -> Vec<&ConjectureVerdict> {
    verdicts.iter().filter(|v| v.premises_hold).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sx;

    #[test]
    fn single_facet_form() {
        let k = build_complex([sx![5, 9, 7]]).unwrap();
        assert_eq!(canonical_form(&k).unwrap(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn scrambled_copies_share_a_form() {
        let a = fixtures::tree_b();
        let b = build_complex([sx![40, 7, 3], sx![7, 3, 11], sx![7, 11, 2]]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(
            canonical_form(&a).unwrap(),
            canonical_form(&fixtures::counterexample_a()).unwrap()
        );
    }

    #[test]
    fn budget_is_enforced() {
        let facets: Vec<Vec<u32>> = (0..6)
            .map(|i| vec![3 * i + 1, 3 * i + 2, 3 * i + 3])
            .collect();
        assert!(matches!(
            canonical_facets(&facets, 1000),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(&EnumSpace::exactly(2, 1, 3)).unwrap().len(), 1);
        assert_eq!(enumerate(&EnumSpace::exactly(2, 2, 6)).unwrap().len(), 3);
        assert_eq!(enumerate(&EnumSpace::exactly(1, 3, 6)).unwrap().len(), 5);
        assert_eq!(enumerate(&EnumSpace::new(2, 2, 6)).unwrap().len(), 4);
        assert_eq!(enumerate(&EnumSpace::exactly(2, 2, 4)).unwrap().len(), 1);
    }

    #[test]
    fn invalid_spaces() {
        assert!(enumerate(&EnumSpace::new(2, 0, 6)).is_err());
        assert!(enumerate(&EnumSpace::new(2, 2, 2)).is_err());
        assert_eq!(
            enumerate(&EnumSpace::new(0, 2, 2)),
            Err(Error::ZeroDimension)
        );
    }

    #[test]
    fn fixture_verdicts() {
        let v = test_conjecture(&fixtures::counterexample_a(), Conjecture::C1).unwrap();
        assert_eq!(v.status, Status::Counterexample);
        let v = test_conjecture(&fixtures::counterexample_a(), Conjecture::C2).unwrap();
        assert_eq!(v.status, Status::Counterexample);
        let v = test_conjecture(&fixtures::tree_a(), Conjecture::NewConj).unwrap();
        assert!(v.premises_hold && v.is_tree && v.status == Status::Consistent);
        let v = test_conjecture(&fixtures::counterexample_b(), Conjecture::NewConj).unwrap();
        assert!(!v.premises_hold && v.status == Status::Consistent);
    }

    #[test]
    fn small_searches() {
        let hits = search_counterexamples(&EnumSpace::new(2, 3, 9), Conjecture::C1).unwrap();
        let ce_a = canonical_form(&fixtures::counterexample_a()).unwrap();
        assert!(hits.iter().any(|v| v.complex.facets == ce_a));
        assert!(
            search_counterexamples(&EnumSpace::new(2, 2, 6), Conjecture::C1)
                .unwrap()
                .is_empty()
        );
    }
}
