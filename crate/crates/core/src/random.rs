//! Seeded generators for small groups, actions, groupoids and functors.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::action::{EquivariantMap, GSet};
use crate::group::FiniteGroup;
use crate::groupoid::{FiniteGroupoid, ObjectId};
use crate::morphism::{object_pullback, GroupoidMorphism};
use crate::presentation::Presentation;

/// Every group of order at most 8, up to isomorphism.
pub fn catalog() -> Vec<FiniteGroup> {
    let z2 = FiniteGroup::cyclic(2);
    let mut groups: Vec<FiniteGroup> = (1..=8).map(FiniteGroup::cyclic).collect();
    groups.push(z2.product(&z2));
    groups.push(FiniteGroup::symmetric(3));
    groups.push(FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).expect("dihedral"));
    groups.push(
        Presentation::parse(&["i", "j"], &["i^4 = 1", "i^2 = j^2", "j i j^-1 = i^-1"])
            .and_then(|p| p.enumerate())
            .expect("quaternion"),
    );
    groups.push(z2.product(&FiniteGroup::cyclic(4)));
    groups.push(z2.product(&z2).product(&z2));
    groups
}

pub fn group<R: Rng>(rng: &mut R, max_order: usize) -> FiniteGroup {
    let pool: Vec<FiniteGroup> = catalog().into_iter().filter(|g| g.order() <= max_order.max(1)).collect();
    pool.choose(rng).expect("trivial group qualifies").clone()
}

pub fn cyclic_group<R: Rng>(rng: &mut R, max_order: usize) -> FiniteGroup {
    FiniteGroup::cyclic(rng.gen_range(1..=max_order.max(1)))
}

fn random_subgroup<R: Rng>(rng: &mut R, g: &FiniteGroup, inside: Option<&[usize]>) -> Vec<usize> {
    let subgroups: Vec<Vec<usize>> = g
        .subgroups()
        .into_iter()
        .filter(|k| inside.is_none_or(|s| k.iter().all(|e| s.contains(e))))
        .collect();
    subgroups.choose(rng).expect("trivial subgroup qualifies").clone()
}

/// A disjoint union of coset spaces with at most `max_points` points
/// (at least one orbit). Points are labelled `p0, p1, …`.
pub fn gset<R: Rng>(rng: &mut R, g: &FiniteGroup, max_points: usize) -> GSet {
    let mut orbits: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut total = 0;
    for _ in 0..8 {
        let k = random_subgroup(rng, g, None);
        let index = g.order() / k.len();
        if total + index > max_points.max(1) {
            continue;
        }
        orbits.push(g.left_cosets(&k));
        total += index;
        if rng.gen_bool(0.4) {
            break;
        }
    }
    if orbits.is_empty() {
        orbits.push(g.left_cosets(&g.elements().collect::<Vec<_>>()));
        total = 1;
    }
    let mut act = vec![Vec::with_capacity(total); g.order()];
    let mut offset = 0;
    for cosets in &orbits {
        let which = g.coset_indices(cosets);
        for e in g.elements() {
            act[e].extend(cosets.iter().map(|c| offset + which[g.mul(e, c[0])]));
        }
        offset += cosets.len();
    }
    GSet::new(g.clone(), (0..total).map(|i| format!("p{i}")).collect(), act).expect("coset actions")
}

/// A non-empty subset of `0..n`.
pub fn subset<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

/// A strong map into `target`: at most one orbit `G/K` over each target
/// orbit `G/G_p`, with `K ≤ G_p`. The source has at least one point.
pub fn strong_map<R: Rng>(rng: &mut R, target: &GSet, max_points: usize) -> EquivariantMap {
    let g = target.group();
    let mut reps: Vec<usize> = target.orbits().iter().map(|o| o[0]).collect();
    reps.shuffle(rng);
    let mut pieces: Vec<(Vec<Vec<usize>>, usize)> = Vec::new();
    let mut total = 0;
    for (i, &p) in reps.iter().enumerate() {
        let stab = target.stabilizer(p);
        let k = random_subgroup(rng, g, Some(&stab));
        let cosets = g.left_cosets(&k);
        if total + cosets.len() > max_points.max(1) || (i > 0 && rng.gen_bool(0.3)) {
            if i == 0 {
                let full = g.left_cosets(&stab);
                total += full.len();
                pieces.push((full, p));
            }
            continue;
        }
        total += cosets.len();
        pieces.push((cosets, p));
    }
    let mut act = vec![Vec::with_capacity(total); g.order()];
    let mut map = Vec::with_capacity(total);
    let mut offset = 0;
    for (cosets, p) in &pieces {
        let which = g.coset_indices(cosets);
        for e in g.elements() {
            act[e].extend(cosets.iter().map(|c| offset + which[g.mul(e, c[0])]));
        }
        map.extend(cosets.iter().map(|c| target.act(c[0], *p)));
        offset += cosets.len();
    }
    let source = GSet::new(g.clone(), (0..total).map(|i| format!("n{i}")).collect(), act).expect("coset actions");
    EquivariantMap::new(source, target.clone(), map).expect("equivariant by construction")
}

/// A connected groupoid `pair(k) × B(K)` with objects `{prefix}0, …`.
fn connected(k: usize, group: &FiniteGroup, prefix: &str) -> FiniteGroupoid {
    let n = group.order();
    let objects: Vec<String> = (0..k).map(|i| format!("{prefix}{i}")).collect();
    let index = |i: usize, e: usize, j: usize| (i * n + e) * k + j;
    let mut arrows = Vec::with_capacity(k * k * n);
    for i in 0..k {
        for e in 0..n {
            for j in 0..k {
                arrows.push((format!("{}:{}>{}", group.label(e), objects[i], objects[j]), i, j));
            }
        }
    }
    let unit = (0..k).map(|i| index(i, group.identity(), i)).collect();
    let inv = (0..k * k * n)
        .map(|a| {
            let (i, e, j) = (a / (n * k), (a / k) % n, a % k);
            index(j, group.inv(e), i)
        })
        .collect();
    FiniteGroupoid::from_parts(objects, arrows, unit, inv, |second, first| {
        let (i, e1) = (first / (n * k), (first / k) % n);
        let (e2, j) = ((second / k) % n, second % k);
        Some(index(i, group.mul(e2, e1), j))
    })
    .expect("connected groupoid tables")
}

/// A groupoid with at most `max_objects` objects and `max_arrows` arrows,
/// built from connected components with isotropy from the catalog.
pub fn groupoid<R: Rng>(rng: &mut R, max_objects: usize, max_arrows: usize) -> FiniteGroupoid {
    let groups = catalog();
    let mut result: Option<FiniteGroupoid> = None;
    let (mut objects, mut arrows) = (0, 0);
    for c in 0..max_objects.max(1) {
        let room = max_objects.max(1) - objects;
        if room == 0 {
            break;
        }
        let k = rng.gen_range(1..=room);
        let fits: Vec<&FiniteGroup> = groups.iter().filter(|g| arrows + k * k * g.order() <= max_arrows.max(1)).collect();
        let Some(group) = fits.choose(rng) else {
            if result.is_some() {
                break;
            }
            continue;
        };
        let part = connected(k, group, &format!("c{c}o"));
        objects += k;
        arrows += part.arrow_count();
        result = Some(match result {
            None => part,
            Some(g) => g.disjoint_union(&part, ("", "")),
        });
        if rng.gen_bool(0.4) {
            break;
        }
    }
    result.unwrap_or_else(|| FiniteGroupoid::discrete(&["c0o0"]))
}

/// A functor into `g`: a random wide subgroupoid of the pullback of `g` to
/// at most `max_objects` new objects.
pub fn functor_into<R: Rng>(rng: &mut R, g: &Arc<FiniteGroupoid>, max_objects: usize) -> GroupoidMorphism {
    let n = rng.gen_range(1..=max_objects.max(1));
    let over: Vec<ObjectId> = (0..n).map(|_| rng.gen_range(0..g.object_count())).collect();
    let pullback = object_pullback(g, (0..n).map(|i| format!("y{i}")).collect(), over.clone()).expect("valid objects");
    let p = &*pullback.domain;
    let density = rng.gen_range(0.0..0.5);
    let generators: Vec<usize> = p.arrows().filter(|_| rng.gen_bool(density)).collect();
    let (sub, ambient) = p.generated_subgroupoid(&generators);
    let phi1 = ambient.iter().map(|&a| pullback.phi1[a]).collect();
    GroupoidMorphism::new(Arc::new(sub), g.clone(), over, phi1).expect("composite of functors")
}

/// An equivalence onto `g` with at most `max(max_objects, #orbits)` objects.
pub fn equivalence_onto<R: Rng>(rng: &mut R, g: &Arc<FiniteGroupoid>, max_objects: usize) -> GroupoidMorphism {
    let mut over: Vec<ObjectId> = g.orbits().iter().map(|o| *o.choose(rng).expect("non-empty orbit")).collect();
    while over.len() < max_objects && rng.gen_bool(0.5) {
        over.push(rng.gen_range(0..g.object_count()));
    }
    over.shuffle(rng);
    let labels = (0..over.len()).map(|i| format!("z{i}")).collect();
    object_pullback(g, labels, over).expect("valid objects")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn catalog_is_small_and_distinct() {
        let c = catalog();
        assert_eq!(c.len(), 14);
        for (i, a) in c.iter().enumerate() {
            assert!(a.order() <= 8);
            for b in &c[i + 1..] {
                assert!(!a.is_isomorphic(b));
            }
        }
    }

    #[test]
    fn generated_objects_are_valid() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let g = groupoid(&mut rng, 6, 36);
            assert!(g.object_count() <= 6 && g.arrow_count() <= 36);
            assert!(g.validate().is_valid());
            let g = Arc::new(g);
            let f = functor_into(&mut rng, &g, 4);
            assert!(f.domain.validate().is_valid());
            assert!(f.validate_functor().is_valid());
            assert!(equivalence_onto(&mut rng, &g, 4).is_equivalence());
            let grp = group(&mut rng, 8);
            let m = gset(&mut rng, &grp, 8);
            assert!(m.point_count() <= 8);
            let s = strong_map(&mut rng, &m, 8);
            assert!(s.is_strong());
        }
    }
}
