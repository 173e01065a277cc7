use proptest::prelude::*;
use superpoint_core::{GrassmannElement, Level, Parity, RankChange, Scalar};
use superpoint_testkit::{oracle_mul, Gen};

fn parity_bit(a: &GrassmannElement) -> u8 {
    match a.parity() {
        Parity::Even => 0,
        Parity::Odd => 1,
        Parity::Mixed => panic!("not homogeneous"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_matches_bubble_sort(seed in any::<u64>(), q in 0usize..=7) {
        let mut g = Gen::new(seed);
        let a = g.element(q, 6);
        let b = g.element(q, 6);
        prop_assert_eq!(a.mul(&b).unwrap(), oracle_mul(&a, &b));
    }

    #[test]
    fn graded_commutativity(seed in any::<u64>(), q in 1usize..=6) {
        let mut g = Gen::new(seed);
        let (pa, pb) = (g.coin(), g.coin());
        let a = g.homogeneous(q, pa, 5);
        let b = g.homogeneous(q, pb, 5);
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        let expected = if pa && pb { ba.neg() } else { ba };
        prop_assert_eq!(ab, expected);
    }

    #[test]
    fn associativity_and_distributivity(seed in any::<u64>(), q in 0usize..=6) {
        let mut g = Gen::new(seed);
        let a = g.element(q, 4);
        let b = g.element(q, 4);
        let c = g.element(q, 4);
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn parity_adds_and_body_multiplies(seed in any::<u64>(), q in 1usize..=6) {
        let mut g = Gen::new(seed);
        let (pa, pb) = (g.coin(), g.coin());
        let a = g.homogeneous(q, pa, 5);
        let b = g.homogeneous(q, pb, 5);
        let ab = a.mul(&b).unwrap();
        if !ab.is_zero() {
            prop_assert_eq!(parity_bit(&ab), parity_bit(&a) ^ parity_bit(&b));
        }
        prop_assert_eq!(ab.body(), a.body() * b.body());
    }

    #[test]
    fn parity_decomposition_recombines(seed in any::<u64>(), q in 0usize..=6) {
        let mut g = Gen::new(seed);
        let a = g.element(q, 8);
        let (even, odd, _) = a.parity_decompose();
        prop_assert_eq!(even.add(&odd).unwrap(), a);
        prop_assert!(even.parity() != Parity::Odd);
        prop_assert!(odd.is_zero() || odd.parity() == Parity::Odd);
    }

    #[test]
    fn filtration_is_multiplicative(seed in any::<u64>(), q in 0usize..=6) {
        let mut g = Gen::new(seed);
        let a = g.element(q, 4).soul();
        let b = g.element(q, 4);
        prop_assert!(a.mul(&b).unwrap().filtration_level() >= a.filtration_level() + b.filtration_level());
    }

    #[test]
    fn inverse_iff_body_nonzero(seed in any::<u64>(), q in 0usize..=6) {
        let mut g = Gen::new(seed);
        let a = g.element(q, 6);
        match a.invert() {
            Ok(inv) => {
                prop_assert!(!a.body().is_zero());
                prop_assert_eq!(a.mul(&inv).unwrap(), GrassmannElement::one(q));
                prop_assert_eq!(inv.mul(&a).unwrap(), GrassmannElement::one(q));
            }
            Err(_) => prop_assert!(a.body().is_zero()),
        }
    }

    #[test]
    fn soul_is_nilpotent(seed in any::<u64>(), q in 0usize..=6) {
        let mut g = Gen::new(seed);
        let s = g.element(q, 6).soul();
        prop_assert!(s.pow(q as u32 + 1).is_zero());
        prop_assert!(s.filtration_level() >= Level::Finite(1));
    }

    #[test]
    fn project_after_include_is_identity(seed in any::<u64>(), q in 0usize..=5, extra in 0usize..=3) {
        let mut g = Gen::new(seed);
        let a = g.element(q, 6);
        let big = a.change_rank(q + extra, RankChange::Include).unwrap();
        prop_assert_eq!(big.change_rank(q, RankChange::Project).unwrap(), a.clone());
        // projection is an algebra map
        let b = g.element(q + extra, 6);
        let c = g.element(q + extra, 6);
        prop_assert_eq!(
            b.mul(&c).unwrap().project(q),
            b.project(q).mul(&c.project(q)).unwrap()
        );
    }

    #[test]
    fn scaling_is_linear(seed in any::<u64>(), q in 0usize..=5) {
        let mut g = Gen::new(seed);
        let a = g.element(q, 5);
        let b = g.element(q, 5);
        let s = g.scalar();
        prop_assert_eq!(a.mul(&b).unwrap().scale(&s), a.scale(&s).mul(&b).unwrap());
        prop_assert_eq!(a.scale(&Scalar::zero()), GrassmannElement::zero(q));
    }
}
