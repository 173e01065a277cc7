use proptest::prelude::*;
use superpoint_core::{
    body_of_point, embed_point, eval_superfunction, induced_point_map, points_dim, Error, FibreLine,
    GradedHom, Scalar, SuperDomainSpec,
};
use superpoint_testkit::{oracle_eval, Gen};

fn binomial_free_dim(m: usize, n: usize, q: usize) -> u128 {
    // count monomials of each coordinate's allowed parity in ∧(q)
    let mut even = 0u128;
    let mut odd = 0u128;
    for bits in 0u64..(1u64 << q) {
        if bits.count_ones() % 2 == 0 {
            even += 1;
        } else {
            odd += 1;
        }
    }
    m as u128 * even + n as u128 * odd
}

#[test]
fn points_dim_counts_monomials() {
    for m in 0..=3 {
        for n in 0..=3 {
            for q in 0..=8 {
                assert_eq!(points_dim(SuperDomainSpec::new(m, n), q), binomial_free_dim(m, n, q));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn evaluation_matches_expansion(seed in any::<u64>(), m in 0usize..=2, n in 0usize..=3, q in 0usize..=4) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(m, n);
        let f = g.superfunction(d, 2, 4);
        let kappa = g.point(d, q, 3);
        prop_assert_eq!(eval_superfunction(&f, &kappa).unwrap(), oracle_eval(&f, &kappa));
    }

    #[test]
    fn evaluation_is_an_algebra_map(seed in any::<u64>(), m in 0usize..=2, n in 0usize..=3, q in 0usize..=4) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(m, n);
        let f = g.superfunction(d, 2, 3);
        let h = g.superfunction(d, 2, 3);
        let kappa = g.point(d, q, 3);
        prop_assert_eq!(
            eval_superfunction(&f.mul(&h).unwrap(), &kappa).unwrap(),
            eval_superfunction(&f, &kappa).unwrap().mul(&eval_superfunction(&h, &kappa).unwrap()).unwrap()
        );
    }

    #[test]
    fn functoriality(seed in any::<u64>(), q in 0usize..=4, p in 0usize..=4, r in 0usize..=4) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(g.range(0, 2), g.range(0, 3));
        let kappa = g.point(d, q, 3);
        let phi = g.hom(q, p, 2);
        let psi = g.hom(p, r, 2);
        let lhs = induced_point_map(&psi.compose(&phi).unwrap(), &kappa).unwrap();
        let rhs = induced_point_map(&psi, &induced_point_map(&phi, &kappa).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(induced_point_map(&GradedHom::identity(q), &kappa).unwrap(), kappa);
    }

    #[test]
    fn naturality_square(seed in any::<u64>(), q in 0usize..=4, p in 0usize..=4) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(g.range(0, 2), g.range(0, 3));
        let f = g.superfunction(d, 2, 3);
        let kappa = g.point(d, q, 3);
        let phi = g.hom(q, p, 2);
        prop_assert_eq!(
            eval_superfunction(&f, &induced_point_map(&phi, &kappa).unwrap()).unwrap(),
            phi.apply(&eval_superfunction(&f, &kappa).unwrap()).unwrap()
        );
    }

    #[test]
    fn body_retracts_embedding(seed in any::<u64>(), q in 0usize..=5) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(g.range(0, 3), g.range(0, 3));
        let x0 = g.point(d, 0, 2);
        prop_assert_eq!(body_of_point(&embed_point(&x0, q).unwrap()), x0);
        let kappa = g.point(d, q, 3);
        prop_assert_eq!(body_of_point(&kappa), body_of_point(&body_of_point(&kappa)));
    }

    #[test]
    fn fibre_line_over_a_body(seed in any::<u64>(), q in 1usize..=4) {
        let mut g = Gen::new(seed);
        let d = SuperDomainSpec::new(g.range(0, 2), g.range(1, 2));
        let kappa = g.point(d, q, 3);
        match FibreLine::new(&kappa) {
            Ok(line) => {
                let a = line.point(&Scalar::from_int(1)).unwrap();
                let b = line.point(&Scalar::from_int(2)).unwrap();
                prop_assert_ne!(&a, &b);
                prop_assert_eq!(body_of_point(&a), body_of_point(&b));
                prop_assert_eq!(body_of_point(&a), body_of_point(&kappa));
            }
            Err(e) => {
                prop_assert_eq!(e, Error::NoOddSector);
                prop_assert!(kappa.odds().iter().all(|c| c.is_zero()));
            }
        }
    }
}
