mod support;

use orbigroupoid::{
    build_sheeted_extension, check_sheet_criterion, diagonal_embedding, immersion_to_embedding, is_orbifold_embedding, random,
    translation_groupoid, Error,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn translation_groupoids_validate(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = random::group(&mut rng, 8);
        let m = random::gset(&mut rng, &g, 8);
        let tg = translation_groupoid(&m);
        prop_assert!(tg.groupoid.validate().is_valid());
        for x in m.points() {
            prop_assert_eq!(m.orbit(x).len() * m.stabilizer(x).len(), g.order());
            prop_assert_eq!(tg.groupoid.isotropy(x).order(), m.stabilizer(x).len());
        }
    }

    #[test]
    fn sheet_criterion_decides_strongness(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = random::group(&mut rng, 8);
        let m = random::gset(&mut rng, &g, 8);
        let n = random::subset(&mut rng, m.point_count());
        let ext = build_sheeted_extension(&m, &n).unwrap();
        // oracle: N ∩ g·N = N^g for every g, computed directly
        let direct = g.elements().all(|e| {
            let moved: Vec<usize> = n.iter().map(|&x| m.act(e, x)).collect();
            let meet: Vec<usize> = n.iter().copied().filter(|x| moved.contains(x)).collect();
            let fixed: Vec<usize> = n.iter().copied().filter(|&x| m.act(e, x) == x).collect();
            meet == fixed
        });
        prop_assert_eq!(ext.is_strong(), check_sheet_criterion(&m, &n).unwrap());
        prop_assert_eq!(ext.is_strong(), direct);
    }

    #[test]
    fn strong_maps_are_injective_on_orbits(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = random::group(&mut rng, 8);
        let m = random::gset(&mut rng, &g, 8);
        let iota = random::strong_map(&mut rng, &m, 8);
        prop_assert!(iota.is_strong());
        prop_assert!(iota.induced_quotient_map().injective);
    }

    #[test]
    fn strong_maps_induce_embeddings(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = random::group(&mut rng, 8);
        let m = random::gset(&mut rng, &g, 8);
        let iota = random::strong_map(&mut rng, &m, 8);
        let e = immersion_to_embedding(&iota).unwrap();
        prop_assert!(e.verdict.verdict);
    }

    #[test]
    fn weak_maps_are_rejected_with_their_fiber(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = random::group(&mut rng, 8);
        let m = random::gset(&mut rng, &g, 6);
        let n = random::subset(&mut rng, m.point_count());
        let ext = build_sheeted_extension(&m, &n).unwrap();
        match immersion_to_embedding(&ext) {
            Ok(e) => prop_assert!(ext.is_strong() && e.verdict.verdict),
            Err(Error::NotStrong { point, fiber }) => {
                prop_assert!(!ext.is_strong());
                let p = m.point(&point).unwrap();
                let fiber: Vec<usize> = fiber.iter().map(|l| ext.source.point(l).unwrap()).collect();
                prop_assert_eq!(&fiber, &ext.fiber(p));
                let reach: Vec<usize> = m.stabilizer(p).iter().map(|&e| ext.source.act(e, fiber[0])).collect();
                prop_assert!(fiber.iter().any(|x| !reach.contains(x)));
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn diagonals_embed(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = random::group(&mut rng, 8);
        let m = random::gset(&mut rng, &g, 6);
        let d = diagonal_embedding(&m);
        prop_assert!(is_orbifold_embedding(&d.morphism).unwrap().verdict);
    }
}
