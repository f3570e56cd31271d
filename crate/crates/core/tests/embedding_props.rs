mod support;

use std::sync::Arc;

use orbigroupoid::{
    check_local_injectivity, embedding_to_immersion, general_pipeline, induced_functor, is_orbifold_embedding, isomorphic_over,
    local_model_at, random, roundtrip_check, Condition,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdict_implications(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = Arc::new(random::groupoid(&mut rng, 4, 24));
        let f = random::functor_into(&mut rng, &g, 4);
        let v = is_orbifold_embedding(&f).unwrap();
        prop_assert_eq!(v.verdict, v.checks.iter().all(|c| c.pass));
        prop_assert_eq!(v.verdict, v.failed().is_empty());
        if v.verdict {
            prop_assert!(check_local_injectivity(&f));
            prop_assert!(f.is_essentially_injective());
        }
        prop_assert_eq!(v.check(Condition::EssentialInjectivity).pass, f.is_essentially_injective());
    }

    #[test]
    fn fiber_coset_duality(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let grp = random::group(&mut rng, 8);
        let m = random::gset(&mut rng, &grp, 8);
        let (_, _, f) = induced_functor(&random::strong_map(&mut rng, &m, 8));
        let v = is_orbifold_embedding(&f).unwrap();
        prop_assert!(v.verdict);
        for lm in &v.local_models {
            prop_assert_eq!(lm.fiber.len() * lm.image_subgroup.len(), lm.isotropy_order);
        }
    }

    #[test]
    fn verdict_ignores_basepoint(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = Arc::new(random::groupoid(&mut rng, 4, 24));
        let f = random::functor_into(&mut rng, &g, 4);
        for x in g.objects() {
            let fiber: Vec<usize> = f.domain.objects().filter(|&y| f.phi0[y] == x).collect();
            let reports: Vec<_> = fiber.iter().map(|&y| local_model_at(&f, x, y).unwrap()).collect();
            for r in &reports {
                prop_assert_eq!(r.transitive(), reports[0].transitive());
                prop_assert_eq!(r.isotropy_injective, reports[0].isotropy_injective);
                if r.transitive() {
                    prop_assert_eq!(r.model_isomorphic, reports[0].model_isomorphic);
                }
            }
        }
    }

    #[test]
    fn embeddings_give_strong_immersions(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let grp = random::group(&mut rng, 8);
        let m = random::gset(&mut rng, &grp, 6);
        let iota = random::strong_map(&mut rng, &m, 6);
        let (_, target, f) = induced_functor(&iota);
        let im = embedding_to_immersion(&f, &target).unwrap();
        prop_assert!(im.iota.is_strong());
        prop_assert!(im.witness.validate().is_valid());
        prop_assert!(im.witness.is_morita());
        // N recovers the original strong map
        prop_assert!(isomorphic_over(&im.iota, &iota).is_some());
        prop_assert!(roundtrip_check(&f, &target).unwrap().pass());
    }

    #[test]
    fn pipeline_matches_direct_construction(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let grp = random::group(&mut rng, 6);
        let m = random::gset(&mut rng, &grp, 4);
        let iota = random::strong_map(&mut rng, &m, 4);
        let (_, target, f) = induced_functor(&iota);
        let cover = random::equivalence_onto(&mut rng, &target.groupoid, 4);
        let p = general_pipeline(&f, &cover, &cover, &target).unwrap();
        prop_assert!(p.pr1_equivalence);
        prop_assert!(p.immersion.strong && p.immersion.witness_biprincipal);
        prop_assert!(isomorphic_over(&p.immersion.iota, &iota).is_some());
    }
}
