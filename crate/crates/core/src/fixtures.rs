//! Small named complexes used throughout the tests and by `simtree fixtures`.

use crate::complex::{build_complex, PureComplex};
use crate::simplex::Simplex;

fn from_triples(facets: &[[u32; 3]]) -> PureComplex {
    build_complex(
        facets
            .iter()
            .map(|f| Simplex::new(*f).expect("fixture simplex")),
    )
    .expect("fixture complex")
}

/// Three components: a two-triangle strip, a lone triangle hanging off
/// vertex 4, and a three-triangle fan around the edge {8,9}.
pub fn fig1() -> PureComplex {
    from_triples(&[
        [1, 2, 3],
        [2, 3, 4],
        [4, 5, 6],
        [7, 8, 9],
        [8, 9, 10],
        [7, 8, 10],
    ])
}

/// Connected, with a ring of four triangles around vertex 1 and four
/// pendant triangles; has a (0,2)-cycle but no (1,2)-cycle.
pub fn fig9() -> PureComplex {
    from_triples(&[
        [1, 2, 3],
        [2, 3, 4],
        [3, 4, 5],
        [1, 4, 5],
        [1, 2, 6],
        [1, 3, 7],
        [1, 4, 9],
        [1, 5, 8],
    ])
}

/// A strip of four triangles: six vertices, nine edges.
pub fn tree_a() -> PureComplex {
    from_triples(&[[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 6]])
}

/// Three triangles glued along {2,3} and {2,4}: five vertices, seven edges.
pub fn tree_b() -> PureComplex {
    from_triples(&[[1, 2, 3], [2, 3, 4], [2, 4, 5]])
}

/// Three triangles meeting pairwise in single vertices: six vertices, nine
/// edges, no shared edge, disconnected.
pub fn counterexample_a() -> PureComplex {
    from_triples(&[[1, 2, 3], [3, 4, 5], [1, 5, 6]])
}

/// Two edge-glued pairs of triangles: six vertices, four triangles, ten
/// edges, acyclic but disconnected.
pub fn counterexample_b() -> PureComplex {
    from_triples(&[[1, 2, 3], [2, 3, 4], [4, 5, 6], [1, 5, 6]])
}

/// `(file stem, complex)` for every built-in fixture.
pub fn all() -> Vec<(&'static str, PureComplex)> {
    vec![
        ("fig1", fig1()),
        ("fig9", fig9()),
        ("fig2a", tree_a()),
        ("fig2b", tree_b()),
        ("fig3a", counterexample_a()),
        ("fig3b", counterexample_b()),
    ]
}
