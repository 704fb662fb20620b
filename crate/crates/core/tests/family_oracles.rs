mod common;

use dominion::families::{generate, FamilyId};

#[test]
fn known_cells_match_solver() {
    let (checked, bad) = common::criteria::family_oracles();
    assert!(bad.is_empty(), "{bad:?}");
    assert!(checked >= 100, "{checked}");
}

#[test]
fn degree_structure() {
    for n in 3..=5 {
        let f4 = generate(FamilyId::F4, n).unwrap();
        assert_eq!((0..f4.n()).filter(|&v| f4.degree(v) == 2 * n).count(), 1);
        let q = generate(FamilyId::Q, n).unwrap();
        assert_eq!((0..q.n()).filter(|&v| q.degree(v) == n).count(), 2);
        let star = generate(FamilyId::Star, n).unwrap();
        assert_eq!((star.n(), star.max_degree()), (n + 1, n));
    }
    for k in 1..=3 {
        let c4 = generate(FamilyId::KC4, k).unwrap();
        assert_eq!((c4.n(), c4.m(), c4.components().len()), (4 * k, 4 * k, k));
    }
}
