use dominion::audit::{entry, no_bound_evidence, sharpness_assignments, sharpness_check, BoundKind};

#[test]
fn every_bound_is_attained() {
    let mut n = 0;
    for s in sharpness_assignments() {
        if entry(s.row, s.col).kind == BoundKind::NoBound {
            continue;
        }
        for size in s.sizes() {
            let r = sharpness_check(&s, size).unwrap();
            assert!(r.pass, "{r:?}");
            n += 1;
        }
    }
    assert!(n >= 103);
}

#[test]
fn missing_bounds_have_growing_witnesses() {
    let mut n = 0;
    for s in sharpness_assignments() {
        if entry(s.row, s.col).kind != BoundKind::NoBound {
            continue;
        }
        let r = no_bound_evidence(&s).unwrap();
        assert!(r.pass, "{r:?}");
        n += 1;
    }
    assert_eq!(n, 53);
}
