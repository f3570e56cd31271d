mod support;

use std::sync::Arc;

use orbigroupoid::{bibundles_isomorphic, compose, from_functor, from_functor_ps, random, strictify, Bibundle, GroupoidMorphism};
use proptest::prelude::*;

fn chain(seed: u64) -> (GroupoidMorphism, GroupoidMorphism, GroupoidMorphism) {
    let mut rng = support::rng(seed);
    let d = Arc::new(random::groupoid(&mut rng, 3, 12));
    let f3 = random::functor_into(&mut rng, &d, 3);
    let f2 = random::functor_into(&mut rng, &f3.domain, 2);
    let f1 = random::functor_into(&mut rng, &f2.domain, 2);
    (f1, f2, f3)
}

fn iso(p: &Bibundle, q: &Bibundle) -> bool {
    bibundles_isomorphic(p, q).unwrap().is_some()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn functor_bundles_are_left_principal(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = Arc::new(random::groupoid(&mut rng, 4, 24));
        let f = random::functor_into(&mut rng, &g, 4);
        let r = from_functor(&f);
        prop_assert!(r.validate().is_valid());
        prop_assert!(r.is_left_principal());
        prop_assert_eq!(r.is_right_principal(), f.is_equivalence());
        let e = random::equivalence_onto(&mut rng, &g, 4);
        prop_assert!(from_functor(&e).is_right_principal());
    }

    #[test]
    fn inverse_of_functor_bundle(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = Arc::new(random::groupoid(&mut rng, 4, 24));
        let e = random::equivalence_onto(&mut rng, &g, 4);
        let r = from_functor(&e);
        prop_assert!(r.inverse().validate().is_valid());
        prop_assert!(iso(&r.inverse(), &from_functor_ps(&e)));
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let (f1, f2, f3) = chain(seed);
        let (r1, r2, r3) = (from_functor(&f1), from_functor(&f2), from_functor(&f3));
        let left = compose(&compose(&r3, &r2).unwrap(), &r1).unwrap();
        let right = compose(&r3, &compose(&r2, &r1).unwrap()).unwrap();
        prop_assert!(left.validate().is_valid());
        prop_assert!(iso(&left, &right));
    }

    #[test]
    fn functor_bundles_compose(seed in any::<u64>()) {
        let (f1, f2, _) = chain(seed);
        let composite = from_functor(&f2.after(&f1).unwrap());
        let composed = compose(&from_functor(&f2), &from_functor(&f1)).unwrap();
        prop_assert!(iso(&composite, &composed));
    }

    #[test]
    fn strictification_recovers_functor_bundle(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = Arc::new(random::groupoid(&mut rng, 4, 24));
        let f = random::functor_into(&mut rng, &g, 4);
        let s = strictify(&from_functor(&f)).unwrap();
        prop_assert!(s.functor.validate_functor().is_valid());
        prop_assert!(iso(&from_functor(&s.functor), &from_functor(&f)));
    }
}
