//! Five independent tree certificates and the count lemmas that tie them
//! together.

use std::collections::{BTreeMap, HashSet};
use std::ops::ControlFlow;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::{alpha, binomial, joint_simplices, tree_count_formula, PureComplex};
use crate::cycles::{find_cycle, is_acyclic, CycleWitness};
use crate::error::{Error, Result};
use crate::paths::{attachment_kind, components, is_connected, AltSequence, Ordering};
use crate::simplex::Simplex;

/// Connected and acyclic.
pub fn certify_by_definition(k: &PureComplex) -> bool {
    is_connected(k) && is_acyclic(k)
}

/// An (n-1)-complete ordering, searched with full backtracking over start
/// facet and extension order. Dead sets of placed facets are memoized,
/// since whether a prefix extends depends only on which facets it holds.
pub fn certify_by_complete_ordering(k: &PureComplex) -> Option<Ordering> {
    let facets = k.facets();
    let n = k.dim();
    let mut dead: HashSet<Vec<bool>> = HashSet::new();

    fn extend<'a>(
        facets: &'a [Simplex],
        n: usize,
        order: &mut Vec<&'a Simplex>,
        used: &mut Vec<bool>,
        dead: &mut HashSet<Vec<bool>>,
    ) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        if dead.contains(used) {
            return false;
        }
        for i in 0..facets.len() {
            if used[i] || !attachment_kind(&facets[i], order, n).1 {
                continue;
            }
            used[i] = true;
            order.push(&facets[i]);
            if extend(facets, n, order, used, dead) {
                return true;
            }
            order.pop();
            used[i] = false;
        }
        dead.insert(used.clone());
        false
    }

    for start in 0..facets.len() {
        let mut used = vec![false; facets.len()];
        used[start] = true;
        let mut order = vec![&facets[start]];
        if extend(facets, n, &mut order, &mut used, &mut dead) {
            return Some(Ordering {
                facets: order.into_iter().cloned().collect(),
                complete: true,
            });
        }
    }
    None
}

/// Connected, and `α_k` matches the tree count for `p = α_0` vertices.
pub fn certify_by_count(k: &PureComplex, dim: usize) -> Result<bool> {
    if dim == 0 || dim > k.dim() {
        return Err(Error::DimensionOutOfRange { k: dim, n: k.dim() });
    }
    let p = k.vertex_count() as i64;
    let expected = tree_count_formula(p, k.dim() as i64, dim as i64);
    Ok(is_connected(k) && alpha(k, dim)? as i64 == expected)
}

/// Cycle-free for some m, with `α_{n-1} = (p-n)n + 1` and `α_n = p-n`.
pub fn certify_by_acyclic_counts(k: &PureComplex) -> bool {
    let (p, n) = (k.vertex_count() as i64, k.dim() as i64);
    let ridges = k.faces_of_dim(k.dim() - 1).len() as i64;
    let facets = k.facets().len() as i64;
    ridges == (p - n) * n + 1 && facets == p - n && (0..k.dim()).any(|m| find_cycle(k, m).is_none())
}

/// Visits every reduced (m,n)-path sequence from `a` to `b`.
///
/// Paths never repeat a facet, so the search is finite. Branches are cut as
/// soon as they re-enter `a`, reuse a joining (n-1)-simplex, or pass through
/// a facet holding `b` without stopping there.
pub fn for_each_reduced_path<B>(
    k: &PureComplex,
    a: &Simplex,
    b: &Simplex,
    mut visit: impl FnMut(&AltSequence) -> ControlFlow<B>,
) -> Option<B> {
    struct State<'a> {
        k: &'a PureComplex,
        a: &'a Simplex,
        b: &'a Simplex,
        sigmas: Vec<Simplex>,
        etas: Vec<usize>,
        ridges: Vec<Simplex>,
    }

    fn step<B>(
        st: &mut State<'_>,
        visit: &mut impl FnMut(&AltSequence) -> ControlFlow<B>,
    ) -> Option<B> {
        let facets = st.k.facets();
        let last = &facets[*st.etas.last().expect("started")];
        if st.b.is_face_of(last) {
            let mut sigmas = st.sigmas.clone();
            sigmas.push(st.b.clone());
            let etas = st.etas.iter().map(|&i| facets[i].clone()).collect();
            let seq = AltSequence::interleave(st.a.dim(), sigmas, etas).expect("well formed");
            return visit(&seq).break_value();
        }
        for (j, next) in facets.iter().enumerate() {
            if st.etas.contains(&j) || st.a.is_face_of(next) {
                continue;
            }
            let Some(ridge) = st.k.shared_ridge(last, next) else {
                continue;
            };
            if st.ridges.contains(&ridge) {
                continue;
            }
            for s in ridge.faces_of_dim(st.a.dim()) {
                if &s == st.b || st.sigmas.contains(&s) {
                    continue;
                }
                st.sigmas.push(s);
                st.etas.push(j);
                st.ridges.push(ridge.clone());
                let out = step(st, visit);
                st.ridges.pop();
                st.etas.pop();
                st.sigmas.pop();
                if out.is_some() {
                    return out;
                }
            }
        }
        None
    }

    for (i, f) in k.facets().iter().enumerate() {
        if !a.is_face_of(f) {
            continue;
        }
        let mut st = State {
            k,
            a,
            b,
            sigmas: vec![a.clone()],
            etas: vec![i],
            ridges: Vec::new(),
        };
        if let Some(out) = step(&mut st, &mut visit) {
            return Some(out);
        }
    }
    None
}

/// Outcome of the unique-path characterisation, condition by condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquePathsReport {
    pub connected: bool,
    /// Exactly one reduced (n-1,n)-path between any two (n-1)-simplices.
    pub top_paths_unique: bool,
    /// For m <= n-2, one simplicial path between m-simplices that share no
    /// joint (n-1)-simplex.
    pub lower_paths_unique: bool,
    /// No (m,n)-cycle for m <= n-2.
    pub lower_acyclic: bool,
    pub duplicate_paths: Option<Vec<AltSequence>>,
    pub cycle: Option<CycleWitness>,
}

impl UniquePathsReport {
    pub fn verdict(&self) -> bool {
        self.connected && self.top_paths_unique && self.lower_paths_unique && self.lower_acyclic
    }
}

pub fn unique_paths_report(k: &PureComplex) -> UniquePathsReport {
    let n = k.dim();
    let mut report = UniquePathsReport {
        connected: is_connected(k),
        top_paths_unique: true,
        lower_paths_unique: true,
        lower_acyclic: true,
        duplicate_paths: None,
        cycle: None,
    };
    if !report.connected {
        report.top_paths_unique = false;
        report.lower_paths_unique = false;
        report.lower_acyclic = (0..n.saturating_sub(1)).all(|m| find_cycle(k, m).is_none());
        return report;
    }

    for (a, b) in k.faces_of_dim(n - 1).iter().tuple_combinations() {
        let mut found: Vec<AltSequence> = Vec::new();
        for_each_reduced_path(k, a, b, |p| {
            found.push(p.clone());
            if found.len() > 1 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.len() != 1 {
            report.top_paths_unique = false;
            if found.len() > 1 {
                report.duplicate_paths = Some(found);
            }
            break;
        }
    }

    if n >= 2 {
        let joint_ridges = joint_simplices(k, n - 1).expect("n-1 is in range");
        'lower: for m in 0..=n - 2 {
            for (a, b) in k.faces_of_dim(m).iter().tuple_combinations() {
                let ab = a.union(b);
                if joint_ridges.iter().any(|r| ab.is_face_of(r)) {
                    continue;
                }
                let mut first: Option<AltSequence> = None;
                let second = for_each_reduced_path(k, a, b, |p| match &first {
                    None => {
                        first = Some(p.clone());
                        ControlFlow::Continue(())
                    }
                    Some(f) if f.facet_set() == p.facet_set() => ControlFlow::Continue(()),
                    Some(_) => ControlFlow::Break(p.clone()),
                });
                if first.is_none() || second.is_some() {
                    report.lower_paths_unique = false;
                    if report.duplicate_paths.is_none() {
                        report.duplicate_paths =
                            first.into_iter().chain(second).collect::<Vec<_>>().into();
                    }
                    break 'lower;
                }
            }
        }
        for m in 0..=n - 2 {
            if let Some(c) = find_cycle(k, m) {
                report.lower_acyclic = false;
                report.cycle = Some(c);
                break;
            }
        }
    }
    report
}

/// Connected, unique reduced paths at both levels, and no low-dimensional
/// cycles.
pub fn certify_by_unique_paths(k: &PureComplex) -> bool {
    unique_paths_report(k).verdict()
}

/// Vertex sets `W` with `k+1 <= |W| <= n+1` whose (k+1)-subsets are all
/// simplices of `k` (a k-complete subcomplex) but which lie in no facet.
/// Reported as `(k, W)`.
pub fn complete_subcomplex_violations(complex: &PureComplex) -> Vec<(usize, Simplex)> {
    let n = complex.dim();
    let verts: Vec<u32> = complex.vertices().collect();
    let mut out = Vec::new();
    for size in 2..=(n + 1).min(verts.len()) {
        for w in verts.iter().copied().combinations(size) {
            let w = Simplex::new(w).expect("distinct vertices");
            if complex.facets().iter().any(|f| w.is_face_of(f)) {
                continue;
            }
            for k in 1..size {
                if w.faces_of_dim(k).iter().all(|s| complex.contains(s)) {
                    out.push((k, w.clone()));
                }
            }
        }
    }
    out
}

/// Every complete subcomplex of a tree sits inside a single facet.
pub fn check_complete_subcomplex_containment(k: &PureComplex) -> Result<bool> {
    if !certify_by_definition(k) {
        return Err(Error::NotATree);
    }
    Ok(complete_subcomplex_violations(k).is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub premise: bool,
    pub conclusion: bool,
    /// The inequality holds with equality.
    pub tight: bool,
    /// `premise => conclusion`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str, k: Option<usize>) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name && c.k == k)
    }
}

/// Evaluates the ridge-count bounds and the lower count bound:
///
/// - `acyclic_lower`: no (n-1,n)-cycle implies `α_{n-1} >= n α_n + 1`;
/// - `connected_upper`: connected implies `α_{n-1} <= n α_n + 1`;
/// - `connected_count_lower` (per k in 1..n): connected implies
///   `α_k >= (p-n) C(n,k) + C(n,k+1)`.
pub fn count_bounds(k: &PureComplex) -> BoundsReport {
    let n = k.dim();
    let p = k.vertex_count() as i64;
    let ridges = k.faces_of_dim(n - 1).len() as i64;
    let top = k.facets().len() as i64;
    let target = n as i64 * top + 1;
    let connected = is_connected(k);
    let top_acyclic = find_cycle(k, n - 1).is_none();

    let check = |name: &str, kk, premise: bool, conclusion: bool, tight: bool| BoundCheck {
        name: name.to_string(),
        k: kk,
        premise,
        conclusion,
        tight,
        holds: !premise || conclusion,
    };
    let mut checks = vec![
        check(
            "acyclic_lower",
            None,
            top_acyclic,
            ridges >= target,
            ridges == target,
        ),
        check(
            "connected_upper",
            None,
            connected,
            ridges <= target,
            ridges == target,
        ),
    ];
    for dim in 1..n {
        let actual = k.faces_of_dim(dim).len() as i64;
        let bound =
            (p - n as i64) * binomial(n as i64, dim as i64) + binomial(n as i64, dim as i64 + 1);
        checks.push(check(
            "connected_count_lower",
            Some(dim),
            connected,
            actual >= bound,
            actual == bound,
        ));
    }
    BoundsReport { checks }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub cycle: Option<CycleWitness>,
    pub duplicate_paths: Option<Vec<AltSequence>>,
    /// Component facet classes, present when the complex is disconnected.
    pub components: Option<Vec<Vec<Simplex>>>,
}

/// Verdicts of the five tree certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub by_definition: bool,
    pub by_complete_ordering: bool,
    pub ordering: Option<Ordering>,
    /// Per-k verdicts; the certificate passes when any k does.
    pub by_count: BTreeMap<usize, bool>,
    pub by_acyclic_counts: bool,
    pub by_unique_paths: bool,
    pub unique_paths: UniquePathsReport,
    pub agree: bool,
    pub witnesses: Witnesses,
}

impl CertReport {
    pub fn by_count_any(&self) -> bool {
        self.by_count.values().any(|&v| v)
    }

    pub fn verdicts(&self) -> [bool; 5] {
        [
            self.by_definition,
            self.by_complete_ordering,
            self.by_count_any(),
            self.by_acyclic_counts,
            self.by_unique_paths,
        ]
    }

    /// The common verdict, if all certificates agree.
    pub fn is_tree(&self) -> Option<bool> {
        self.agree.then_some(self.by_definition)
    }
}

/// Runs all five certificates and collects witnesses.
pub fn certify(k: &PureComplex) -> CertReport {
    let ((by_definition, ordering), (unique_paths, by_acyclic_counts)) = rayon::join(
        || (certify_by_definition(k), certify_by_complete_ordering(k)),
        || (unique_paths_report(k), certify_by_acyclic_counts(k)),
    );
    let by_count: BTreeMap<usize, bool> = (1..=k.dim())
        .map(|d| (d, certify_by_count(k, d).expect("d in range")))
        .collect();
    let by_unique_paths = unique_paths.verdict();
    let mut report = CertReport {
        by_definition,
        by_complete_ordering: ordering.is_some(),
        ordering,
        by_count,
        by_acyclic_counts,
        by_unique_paths,
        agree: false,
        witnesses: Witnesses {
            cycle: (0..k.dim()).find_map(|m| find_cycle(k, m)),
            duplicate_paths: unique_paths.duplicate_paths.clone(),
            components: None,
        },
        unique_paths,
    };
    if !is_connected(k) {
        report.witnesses.components = Some(components(k));
    }
    let v = report.verdicts();
    report.agree = v.iter().all(|&x| x == v[0]);
    report
}
