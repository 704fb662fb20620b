mod common;

use common::{brute_set_cover, brute_two_colorable, hypergraphs, set_systems};
use dominion::error::DomError;
use dominion::exact::{solve, Value};
use dominion::feasibility::ParameterId;
use dominion::reductions::{hypergraph_to_split, set_cover_to_split, Hypergraph, SetCoverInstance};

#[test]
fn enumerations_have_expected_sizes() {
    let counts: Vec<usize> = (1..=3).map(|s| set_systems(s, 4).len()).collect();
    assert_eq!(counts, vec![1, 4, 24]);
    assert_eq!(hypergraphs(2, 4).len(), 8);
    assert_eq!(hypergraphs(3, 4).len(), 1 + 7 + 21 + 35 + 35);
}

#[test]
fn brute_force_oracles() {
    assert_eq!(brute_set_cover(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]), Some(2));
    assert_eq!(brute_set_cover(2, &[vec![0]]), None);
    assert!(!brute_two_colorable(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]));
    assert!(brute_two_colorable(4, &[vec![0, 1], vec![1, 2], vec![2, 3]]));
}

#[test]
fn all_small_instances_match_oracles() {
    let (checks, bad) = common::criteria::reductions(5, 4, 5, 4);
    assert!(checks > 30_000, "{checks}");
    assert!(bad.is_empty(), "{} failures, first: {}", bad.len(), bad[0]);
}

#[test]
fn triangle_hypergraph_is_infinite() {
    let h = Hypergraph { vertices: 3, edges: vec![vec![0, 1], vec![1, 2], vec![0, 2]] };
    let g = hypergraph_to_split(&h).unwrap();
    assert_eq!(solve(ParameterId::RainbowTX2, &g.graph, None).unwrap().value, Value::Infinite);
    let bad = Hypergraph { vertices: 2, edges: vec![vec![0, 2]] };
    assert!(matches!(hypergraph_to_split(&bad), Err(DomError::InvalidInstance(_))));
}

#[test]
fn invalid_set_systems_are_rejected() {
    let j = SetCoverInstance { ground: 2, sets: vec![vec![0]] };
    assert!(matches!(set_cover_to_split(&j), Err(DomError::InvalidInstance(_))));
}
