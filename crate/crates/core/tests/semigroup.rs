use proptest::prelude::*;
use superpoint_core::{
    act, act_at, classes_equal, endo_compose, normalize_class, reconstruct_pt_n, retract, Error,
    FiniteRangeEndo, SuperDomainSpec,
};
use superpoint_testkit::Gen;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn action_law(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(g.range(0, 2), g.range(0, 2));
        let r = g.range(0, 4);
        let c = g.class(d, r, 3);
        let gg = { let (s, j) = (g.range(0, 4), g.range(0, 4)); g.endo(s, j, 2) };
        let hh = { let (s, j) = (g.range(0, 4), g.range(0, 4)); g.endo(s, j, 2) };
        prop_assert_eq!(act(&endo_compose(&gg, &hh), &c), act(&gg, &act(&hh, &c)));
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let mut e = || { let (s, j) = (g.range(0, 4), g.range(0, 4)); g.endo(s, j, 2) };
        let (a, b, c) = (e(), e(), e());
        let lhs = endo_compose(&endo_compose(&a, &b), &c);
        let rhs = endo_compose(&a, &endo_compose(&b, &c));
        prop_assert_eq!(lhs.images(), rhs.images());
    }

    #[test]
    fn retraction_fixes_low_rank(seed in any::<u64>(), n in 0usize..=5) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(g.range(0, 2), g.range(0, 2));
        let c = g.class(d, n, 3);
        prop_assert!(c.rank() <= n);
        prop_assert_eq!(retract(n, &c), c.clone());
        let samples: Vec<_> = (0..4).map(|_| { let q = g.range(0, 6); g.class(d, q, 3) }).collect();
        prop_assert!(reconstruct_pt_n(d, n, &samples).unwrap().is_clean());
    }

    #[test]
    fn padding_does_not_matter(seed in any::<u64>(), pad in 0usize..=3) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(g.range(0, 2), g.range(0, 2));
        let r = g.range(0, 4);
        let c = g.class(d, r, 3);
        let e = { let (s, j) = (g.range(0, 4), g.range(0, 4)); g.endo(s, j, 2) };
        let j = e.range_rank() + pad;
        prop_assert_eq!(act_at(&e, &c, j).unwrap(), act(&e, &c));
    }

    #[test]
    fn class_of_included_point_is_unchanged(seed in any::<u64>(), q in 0usize..=4, extra in 0usize..=3) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(g.range(0, 2), g.range(0, 2));
        let kappa = g.point(d, q, 3);
        let a = normalize_class(&kappa, d).unwrap();
        let b = normalize_class(&kappa.include(q + extra).unwrap(), d).unwrap();
        prop_assert!(classes_equal(&a, &b).unwrap());
    }
}

#[test]
fn act_below_range_is_rejected() {
    let mut g = Gen::new(7);
    let d = SuperDomainSpec::new(1, 1);
    let c = g.class(d, 2, 2);
    let e = g.endo(2, 3, 2);
    assert!(matches!(act_at(&e, &c, 2), Err(Error::RankMismatch { .. })));
    let other = g.class(SuperDomainSpec::new(2, 1), 1, 2);
    assert!(matches!(classes_equal(&c, &other), Err(Error::DomainMismatch(..))));
    assert_eq!(FiniteRangeEndo::projection(3).support(), 3);
}
