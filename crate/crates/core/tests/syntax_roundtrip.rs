use proptest::prelude::*;
use superpoint_core::syntax::{
    parse_element, parse_endo, parse_form, parse_hom, parse_point, parse_superfunction, print_element,
    print_form, print_hom, print_point, print_superfunction,
};
use superpoint_core::SuperDomainSpec;
use superpoint_testkit::Gen;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn elements(seed in any::<u64>(), q in 0usize..=8) {
        let mut g = Gen::new(seed);
        let a = g.element(q, 6);
        let text = print_element(&a);
        prop_assert_eq!(parse_element(&text, q).unwrap(), a.clone());
        prop_assert_eq!(a.to_string(), text);
    }

    #[test]
    fn superfunctions(seed in any::<u64>(), m in 0usize..=3, n in 0usize..=3) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(m, n);
        let f = g.superfunction(d, 3, 5);
        prop_assert_eq!(parse_superfunction(&print_superfunction(&f), d).unwrap(), f);
    }

    #[test]
    fn forms(seed in any::<u64>(), m in 0usize..=3, n in 0usize..=3) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(m, n);
        let w = g.form(m, n, 5, 4, 5);
        prop_assert_eq!(parse_form(&print_form(&w), d).unwrap(), w);
    }

    #[test]
    fn homs_endos_points(seed in any::<u64>(), q in 0usize..=4, p in 0usize..=4) {
        let mut g = Gen::new(seed);
        let phi = g.hom(q, p, 3);
        prop_assert_eq!(parse_hom(&print_hom(&phi), q, p).unwrap(), phi);
        let e = g.endo(q, p, 3);
        let back = parse_endo(&e.to_string(), p).unwrap();
        prop_assert_eq!(back.images(), e.images());
        let d = SuperDomainSpec::new(g.range(0, 2), g.range(0, 2));
        let kappa = g.point(d, q, 3);
        prop_assert_eq!(parse_point(&print_point(&kappa), d, q).unwrap(), kappa);
    }
}
