mod support;

use std::sync::Arc;

use orbigroupoid::{
    are_morita_equivalent, fibered_product, morita_bibundle, random, skeleton, verify_pullback_equivalence, FiniteGroupoid,
};
use proptest::prelude::*;

fn pool(seed: u64, size: usize) -> Vec<Arc<FiniteGroupoid>> {
    let mut rng = support::rng(seed);
    let mut out = Vec::new();
    while out.len() < size {
        let g = Arc::new(random::groupoid(&mut rng, 3, 12));
        if out.len() % 2 == 1 {
            // a Morita-equivalent relabelling of the previous entry
            let prev: &Arc<FiniteGroupoid> = out.last().unwrap();
            let e = random::equivalence_onto(&mut rng, prev, 3);
            if e.domain.arrow_count() <= 16 {
                out.push(e.domain);
                continue;
            }
        }
        out.push(g);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pullback_along_equivalence_is_equivalence(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = Arc::new(random::groupoid(&mut rng, 4, 24));
        let f = random::functor_into(&mut rng, &g, 3);
        let e = random::equivalence_onto(&mut rng, &g, 3);
        prop_assert!(verify_pullback_equivalence(&f, &e).unwrap());
    }

    #[test]
    fn equivalences_preserve_skeletons(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = Arc::new(random::groupoid(&mut rng, 5, 30));
        let e = random::equivalence_onto(&mut rng, &g, 5);
        prop_assert!(skeleton(&e.domain).morita_match(&skeleton(&g)).is_some());
        let f = random::functor_into(&mut rng, &g, 4);
        if f.is_equivalence() {
            prop_assert!(skeleton(&f.domain).morita_match(&skeleton(&g)).is_some());
        }
    }

    #[test]
    fn fibered_product_counts(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let g = Arc::new(random::groupoid(&mut rng, 4, 24));
        let f = random::functor_into(&mut rng, &g, 3);
        let k = random::functor_into(&mut rng, &g, 3);
        let p = fibered_product(&f, &k).unwrap();
        let (h, kk) = (&*f.domain, &*k.domain);
        let objects: usize = h.objects()
            .flat_map(|y| kk.objects().map(move |z| (y, z)))
            .map(|(y, z)| g.hom_set(f.phi0[y], k.phi0[z]).len())
            .sum();
        // arrows (h, a, k) with a any arrow from φ0(src h) to ψ0(src k)
        let arrows: usize = h.arrows()
            .flat_map(|a| kk.arrows().map(move |b| (a, b)))
            .map(|(a, b)| g.hom_set(f.phi0[h.src(a)], k.phi0[kk.src(b)]).len())
            .sum();
        prop_assert_eq!(p.groupoid.object_count(), objects);
        prop_assert_eq!(p.groupoid.arrow_count(), arrows);
        prop_assert!(p.groupoid.validate().is_valid());
        prop_assert!(p.transformation_is_natural(&f, &k));
    }

    #[test]
    fn morita_is_an_equivalence_relation(seed in any::<u64>()) {
        let pool = pool(seed, 5);
        let m: Vec<Vec<bool>> = pool.iter().map(|a| pool.iter().map(|b| are_morita_equivalent(a, b).0).collect()).collect();
        for i in 0..pool.len() {
            prop_assert!(m[i][i]);
            for j in 0..pool.len() {
                prop_assert_eq!(m[i][j], m[j][i]);
                for k in 0..pool.len() {
                    prop_assert!(!(m[i][j] && m[j][k]) || m[i][k]);
                }
            }
        }
    }

    #[test]
    fn morita_agrees_with_exhaustive_search(seed in any::<u64>()) {
        let pool = pool(seed, 4);
        for a in &pool {
            for b in &pool {
                let (decided, zigzag) = are_morita_equivalent(a, b);
                prop_assert_eq!(decided, support::exists_equivalence(a, b));
                if let Some(z) = zigzag {
                    prop_assert!(z.left.is_equivalence() && z.right.is_equivalence());
                }
            }
        }
    }

    #[test]
    fn morita_bibundle_exists_iff_equivalent(seed in any::<u64>()) {
        let pool = pool(seed, 4);
        for a in &pool {
            for b in &pool {
                let b12 = morita_bibundle(a, b).unwrap();
                prop_assert_eq!(b12.is_some(), are_morita_equivalent(a, b).0);
                if let Some(bb) = b12 {
                    prop_assert!(bb.validate().is_valid() && bb.is_morita());
                }
            }
        }
    }
}
