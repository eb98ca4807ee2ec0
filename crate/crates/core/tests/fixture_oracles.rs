//! The built-in fixtures must show every property they stand for.

use simtree::complex::{alpha, dewdney_count_formula, tree_count_formula};
use simtree::cycles::{find_circuit, find_cycle, is_acyclic};
use simtree::fixtures;
use simtree::paths::{components, is_connected};

#[test]
fn fig1_counts_and_components() {
    let k = fixtures::fig1();
    let counts: Vec<usize> = (0..=2).map(|d| alpha(&k, d).unwrap()).collect();
    assert_eq!(counts, [10, 14, 6]);
    assert_eq!(components(&k).len(), 3);
    assert!(find_cycle(&k, 1).is_some());
}

#[test]
fn fig9_shape() {
    let k = fixtures::fig9();
    assert!(is_connected(&k));
    assert!(find_cycle(&k, 0).is_some());
    assert!(find_cycle(&k, 1).is_none());
    assert_eq!(k.facets().len(), 8);
}

#[test]
fn trees_are_connected_and_acyclic() {
    for k in [fixtures::tree_a(), fixtures::tree_b()] {
        assert!(is_connected(&k) && is_acyclic(&k));
        let p = k.vertex_count() as i64;
        for d in 1..=2 {
            assert_eq!(
                alpha(&k, d).unwrap() as i64,
                tree_count_formula(p, 2, d as i64)
            );
        }
    }
}

#[test]
fn first_counterexample_properties() {
    let k = fixtures::counterexample_a();
    assert_eq!(k.vertex_count(), 6);
    assert_eq!(alpha(&k, 1).unwrap(), 9);
    assert!(find_circuit(&k, 1).is_none());
    assert_eq!(dewdney_count_formula(6, 1, 2, 1), 9.into());
    assert!(!is_connected(&k));
}

#[test]
fn second_counterexample_properties() {
    let k = fixtures::counterexample_b();
    assert_eq!(k.vertex_count(), 6);
    assert_eq!(k.facets().len(), 4);
    assert_eq!(alpha(&k, 1).unwrap(), 10);
    assert!(is_acyclic(&k));
    assert!(!is_connected(&k));
}
