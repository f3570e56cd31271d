//! Independent oracles shared by the integration suites. They only use the
//! raw structure maps of a groupoid (src, tgt, unit, compose).

#![allow(dead_code)]

use orbigroupoid::FiniteGroupoid;
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Connected components by union-find over arrows.
pub fn components(g: &FiniteGroupoid) -> Vec<usize> {
    let mut parent: Vec<usize> = g.objects().collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in g.arrows() {
        let (s, t) = (find(&mut parent, g.src(a)), find(&mut parent, g.tgt(a)));
        parent[s] = t;
    }
    (0..g.object_count()).map(|x| find(&mut parent, x)).collect()
}

fn hom(g: &FiniteGroupoid, x: usize, y: usize) -> Vec<usize> {
    g.arrows().filter(|&a| g.src(a) == x && g.tgt(a) == y).collect()
}

/// Whether some functor `a → b` is essentially surjective and fully
/// faithful, by enumerating object maps and backtracking over arrow images.
pub fn exists_equivalence(a: &FiniteGroupoid, b: &FiniteGroupoid) -> bool {
    if a.object_count() == 0 || b.object_count() == 0 {
        return a.object_count() == b.object_count();
    }
    let (ca, cb) = (components(a), components(b));
    let mut cb_reps: Vec<usize> = cb.clone();
    cb_reps.sort_unstable();
    cb_reps.dedup();
    let n = a.object_count();
    let mut phi0 = vec![0; n];
    loop {
        let mut hit: Vec<usize> = phi0.iter().map(|&y| cb[y]).collect();
        hit.sort_unstable();
        hit.dedup();
        // objects in one component must land in one component
        let coherent = (0..n).all(|x| (0..n).all(|y| ca[x] != ca[y] || cb[phi0[x]] == cb[phi0[y]]));
        let sizes_match = (0..n)
            .all(|x| (0..n).all(|y| hom(a, x, y).len() == hom(b, phi0[x], phi0[y]).len()));
        if hit == cb_reps && coherent && sizes_match && extend_arrows(a, b, &phi0) {
            return true;
        }
        // next object map
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            phi0[i] += 1;
            if phi0[i] < b.object_count() {
                break;
            }
            phi0[i] = 0;
            i += 1;
        }
    }
}

fn extend_arrows(a: &FiniteGroupoid, b: &FiniteGroupoid, phi0: &[usize]) -> bool {
    let order: Vec<usize> = a.arrows().collect();
    let mut phi1 = vec![usize::MAX; a.arrow_count()];
    search(a, b, phi0, &order, 0, &mut phi1)
}

fn consistent(a: &FiniteGroupoid, b: &FiniteGroupoid, phi1: &[usize], x: usize) -> bool {
    for y in a.arrows().filter(|&y| phi1[y] != usize::MAX) {
        // injective on hom-sets
        if y != x && a.src(y) == a.src(x) && a.tgt(y) == a.tgt(x) && phi1[y] == phi1[x] {
            return false;
        }
        for (second, first) in [(x, y), (y, x)] {
            if let Some(c) = a.compose(second, first) {
                if phi1[c] != usize::MAX && b.compose(phi1[second], phi1[first]) != Some(phi1[c]) {
                    return false;
                }
            }
        }
    }
    true
}

fn search(a: &FiniteGroupoid, b: &FiniteGroupoid, phi0: &[usize], order: &[usize], i: usize, phi1: &mut Vec<usize>) -> bool {
    if i == order.len() {
        return true;
    }
    let x = order[i];
    let candidates: Vec<usize> = if a.unit(a.src(x)) == x {
        vec![b.unit(phi0[a.src(x)])]
    } else {
        hom(b, phi0[a.src(x)], phi0[a.tgt(x)])
    };
    for c in candidates {
        phi1[x] = c;
        if consistent(a, b, phi1, x) && search(a, b, phi0, order, i + 1, phi1) {
            return true;
        }
    }
    phi1[x] = usize::MAX;
    false
}
