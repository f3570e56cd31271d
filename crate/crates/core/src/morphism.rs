//! Functors between finite groupoids: equivalences, fibered products and
//! the Morita decision procedure.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groupoid::{ArrowId, FiniteGroupoid, ObjectId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidMorphism {
    pub domain: Arc<FiniteGroupoid>,
    pub codomain: Arc<FiniteGroupoid>,
    pub phi0: Vec<ObjectId>,
    pub phi1: Vec<ArrowId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorViolation {
    Source { arrow: String },
    Target { arrow: String },
    Unit { object: String },
    Composition { second: String, first: String },
}

impl fmt::Display for FunctorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorViolation::Source { arrow } => write!(f, "source of φ1({arrow}) ≠ φ0(s({arrow}))"),
            FunctorViolation::Target { arrow } => write!(f, "target of φ1({arrow}) ≠ φ0(t({arrow}))"),
            FunctorViolation::Unit { object } => write!(f, "φ1(u({object})) ≠ u(φ0({object}))"),
            FunctorViolation::Composition { second, first } => {
                write!(f, "φ1({second}∘{first}) ≠ φ1({second})∘φ1({first})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FunctorReport {
    pub violations: Vec<FunctorViolation>,
}

impl FunctorReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GroupoidMorphism {
    /// Checks that both maps are total and land in the codomain.
    pub fn new(
        domain: Arc<FiniteGroupoid>,
        codomain: Arc<FiniteGroupoid>,
        phi0: Vec<ObjectId>,
        phi1: Vec<ArrowId>,
    ) -> Result<Self> {
        if phi0.len() != domain.object_count() {
            return Err(Error::Malformed(format!(
                "object map has {} entries for {} objects",
                phi0.len(),
                domain.object_count()
            )));
        }
        if phi1.len() != domain.arrow_count() {
            return Err(Error::Malformed(format!(
                "arrow map has {} entries for {} arrows",
                phi1.len(),
                domain.arrow_count()
            )));
        }
        if let Some(&x) = phi0.iter().find(|&&x| x >= codomain.object_count()) {
            return Err(Error::UnknownObject(format!("codomain object index {x}")));
        }
        if let Some(&a) = phi1.iter().find(|&&a| a >= codomain.arrow_count()) {
            return Err(Error::UnknownArrow(format!("codomain arrow index {a}")));
        }
        Ok(Self { domain, codomain, phi0, phi1 })
    }

    /// Builds the maps from label pairs; every domain identifier must appear.
    pub fn from_labels(
        domain: Arc<FiniteGroupoid>,
        codomain: Arc<FiniteGroupoid>,
        objects: &[(String, String)],
        arrows: &[(String, String)],
    ) -> Result<Self> {
        let mut phi0 = vec![usize::MAX; domain.object_count()];
        for (x, y) in objects {
            phi0[domain.object(x)?] = codomain.object(y)?;
        }
        if let Some(x) = phi0.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Malformed(format!("object {} has no image", domain.object_label(x))));
        }
        let mut phi1 = vec![usize::MAX; domain.arrow_count()];
        for (a, b) in arrows {
            phi1[domain.arrow(a)?] = codomain.arrow(b)?;
        }
        if let Some(a) = phi1.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Malformed(format!("arrow {} has no image", domain.arrow_label(a))));
        }
        Self::new(domain, codomain, phi0, phi1)
    }

    pub fn identity(g: Arc<FiniteGroupoid>) -> Self {
        let phi0 = g.objects().collect();
        let phi1 = g.arrows().collect();
        Self { domain: g.clone(), codomain: g, phi0, phi1 }
    }

    /// B(G) → B(K) induced by a group homomorphism given on element indices.
    pub fn from_group_hom(g: &FiniteGroup, k: &FiniteGroup, hom: Vec<usize>) -> Result<Self> {
        Self::new(
            Arc::new(FiniteGroupoid::from_group(g)),
            Arc::new(FiniteGroupoid::from_group(k)),
            vec![0],
            hom,
        )
    }

    pub fn validate_functor(&self) -> FunctorReport {
        let (d, c) = (&*self.domain, &*self.codomain);
        let mut violations = Vec::new();
        for a in d.arrows() {
            if c.src(self.phi1[a]) != self.phi0[d.src(a)] {
                violations.push(FunctorViolation::Source { arrow: d.arrow_label(a).into() });
            }
            if c.tgt(self.phi1[a]) != self.phi0[d.tgt(a)] {
                violations.push(FunctorViolation::Target { arrow: d.arrow_label(a).into() });
            }
        }
        for x in d.objects() {
            if self.phi1[d.unit(x)] != c.unit(self.phi0[x]) {
                violations.push(FunctorViolation::Unit { object: d.object_label(x).into() });
            }
        }
        for g1 in d.arrows() {
            for &g2 in d.outgoing(d.tgt(g1)) {
                let lhs = d.compose(g2, g1).map(|h| self.phi1[h]);
                let rhs = c.compose(self.phi1[g2], self.phi1[g1]);
                if rhs.is_none() || lhs != rhs {
                    violations.push(FunctorViolation::Composition {
                        second: d.arrow_label(g2).into(),
                        first: d.arrow_label(g1).into(),
                    });
                }
            }
        }
        FunctorReport { violations }
    }

    /// For each domain orbit, the codomain orbit it lands in.
    pub fn orbit_map(&self) -> Vec<usize> {
        let cod_index = self.codomain.orbit_index();
        self.domain.orbits().iter().map(|orbit| cod_index[self.phi0[orbit[0]]]).collect()
    }

    pub fn is_essentially_surjective(&self) -> bool {
        let cod_index = self.codomain.orbit_index();
        let mut hit = vec![false; self.codomain.orbits().len()];
        for &y in &self.phi0 {
            hit[cod_index[y]] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// φ1 restricts to a bijection on every hom-set.
    pub fn is_fully_faithful(&self) -> bool {
        self.first_hom_failure().is_none()
    }

    /// The first pair of domain objects whose hom-set map is not bijective.
    pub fn first_hom_failure(&self) -> Option<(ObjectId, ObjectId)> {
        let (d, c) = (&*self.domain, &*self.codomain);
        for y in d.objects() {
            let mut by_target: HashMap<ObjectId, Vec<ArrowId>> = HashMap::new();
            for &a in d.outgoing(y) {
                by_target.entry(d.tgt(a)).or_default().push(self.phi1[a]);
            }
            let mut cod_counts: HashMap<ObjectId, usize> = HashMap::new();
            for &b in c.outgoing(self.phi0[y]) {
                *cod_counts.entry(c.tgt(b)).or_default() += 1;
            }
            for y2 in d.objects() {
                let images = by_target.remove(&y2).unwrap_or_default();
                let expected = cod_counts.get(&self.phi0[y2]).copied().unwrap_or(0);
                let mut distinct = images.clone();
                distinct.sort_unstable();
                distinct.dedup();
                if distinct.len() != images.len() || images.len() != expected {
                    return Some((y, y2));
                }
            }
        }
        None
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_essentially_surjective() && self.is_fully_faithful()
    }

    /// The induced map on orbit spaces is injective.
    pub fn is_essentially_injective(&self) -> bool {
        self.orbit_collision().is_none()
    }

    /// Two distinct domain orbits (by least object) with the same image orbit.
    pub fn orbit_collision(&self) -> Option<(ObjectId, ObjectId)> {
        let orbits = self.domain.orbits();
        let map = self.orbit_map();
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for (i, &target) in map.iter().enumerate() {
            if let Some(&j) = seen.get(&target) {
                return Some((orbits[j][0], orbits[i][0]));
            }
            seen.insert(target, i);
        }
        None
    }

    /// `self` after `first`, i.e. `self ∘ first`.
    pub fn after(&self, first: &GroupoidMorphism) -> Result<GroupoidMorphism> {
        if !same_groupoid(&first.codomain, &self.domain) {
            return Err(Error::Mismatch("codomain of the first functor is not the domain of the second".into()));
        }
        Ok(GroupoidMorphism {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            phi0: first.phi0.iter().map(|&x| self.phi0[x]).collect(),
            phi1: first.phi1.iter().map(|&a| self.phi1[a]).collect(),
        })
    }

    /// Whether φ1 is injective on every isotropy group of the domain.
    pub fn is_injective_on_isotropy(&self) -> bool {
        self.domain.objects().all(|y| {
            let mut images: Vec<ArrowId> = self.domain.hom_set(y, y).iter().map(|&a| self.phi1[a]).collect();
            let n = images.len();
            images.sort_unstable();
            images.dedup();
            images.len() == n
        })
    }
}

pub(crate) fn same_groupoid(a: &Arc<FiniteGroupoid>, b: &Arc<FiniteGroupoid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `H ×_G K` with its projections and the component `(y,a,z) ↦ a` of the
/// natural transformation `φ∘pr1 ⇒ ψ∘pr2`.
#[derive(Debug, Clone)]
pub struct FiberedProduct {
    pub groupoid: Arc<FiniteGroupoid>,
    pub pr1: GroupoidMorphism,
    pub pr2: GroupoidMorphism,
    /// `(y, a, z)` for every object.
    pub object_triples: Vec<(ObjectId, ArrowId, ObjectId)>,
    /// `(h, a, k)` for every arrow, `a` being the source component.
    pub arrow_triples: Vec<(ArrowId, ArrowId, ArrowId)>,
    /// Base-groupoid arrow `a: φ0(y) → ψ0(z)` for every object.
    pub transformation: Vec<ArrowId>,
}

impl FiberedProduct {
    /// Checks `ψ1(k)∘a = a'∘φ1(h)` for every arrow `(h,a,k): (y,a,z) → (y',a',z')`.
    pub fn transformation_is_natural(&self, f: &GroupoidMorphism, g: &GroupoidMorphism) -> bool {
        let p = &*self.groupoid;
        let base = &*f.codomain;
        p.arrows().all(|arr| {
            let (h, _, k) = self.arrow_triples[arr];
            let a = self.transformation[p.src(arr)];
            let a2 = self.transformation[p.tgt(arr)];
            base.compose(g.phi1[k], a) == base.compose(a2, f.phi1[h])
        })
    }
}

/// The weak fibered product of `f: H → G` and `g: K → G`.
pub fn fibered_product(f: &GroupoidMorphism, g: &GroupoidMorphism) -> Result<FiberedProduct> {
    if !same_groupoid(&f.codomain, &g.codomain) {
        return Err(Error::Mismatch("fibered product needs a common codomain".into()));
    }
    let (h, k, base) = (&*f.domain, &*g.domain, &*f.codomain);
    let mut over: Vec<Vec<ObjectId>> = vec![Vec::new(); base.object_count()];
    for z in k.objects() {
        over[g.phi0[z]].push(z);
    }

    let mut object_triples = Vec::new();
    let mut object_id = HashMap::new();
    for y in h.objects() {
        for &a in base.outgoing(f.phi0[y]) {
            for &z in &over[base.tgt(a)] {
                object_id.insert((y, a, z), object_triples.len());
                object_triples.push((y, a, z));
            }
        }
    }

    let mut arrow_triples = Vec::new();
    let mut arrow_id = HashMap::new();
    let mut endpoints = Vec::new();
    for (src, &(y, a, z)) in object_triples.iter().enumerate() {
        for &hh in h.outgoing(y) {
            for &kk in k.outgoing(z) {
                let back = base.inv(f.phi1[hh]);
                let a2 = base
                    .compose(a, back)
                    .and_then(|x| base.compose(g.phi1[kk], x))
                    .ok_or_else(|| Error::Precondition("functors do not respect endpoints".into()))?;
                let tgt = *object_id
                    .get(&(h.tgt(hh), a2, k.tgt(kk)))
                    .ok_or_else(|| Error::Precondition("functors do not respect endpoints".into()))?;
                arrow_id.insert((hh, a, kk), arrow_triples.len());
                arrow_triples.push((hh, a, kk));
                endpoints.push((src, tgt));
            }
        }
    }

    let obj_label = |&(y, a, z): &(usize, usize, usize)| {
        format!("({},{},{})", h.object_label(y), base.arrow_label(a), k.object_label(z))
    };
    let objects: Vec<String> = object_triples.iter().map(obj_label).collect();
    let arrows = arrow_triples
        .iter()
        .zip(&endpoints)
        .map(|(&(hh, a, kk), &(s, t))| {
            (format!("({},{},{})", h.arrow_label(hh), base.arrow_label(a), k.arrow_label(kk)), s, t)
        })
        .collect();
    let unit = object_triples.iter().map(|&(y, a, z)| arrow_id[&(h.unit(y), a, k.unit(z))]).collect();
    let inv = arrow_triples
        .iter()
        .zip(&endpoints)
        .map(|(&(hh, _, kk), &(_, t))| {
            let a2 = object_triples[t].1;
            arrow_id[&(h.inv(hh), a2, k.inv(kk))]
        })
        .collect();
    let groupoid = FiniteGroupoid::from_parts(objects, arrows, unit, inv, |second, first| {
        let (h2, _, k2) = arrow_triples[second];
        let (h1, a1, k1) = arrow_triples[first];
        let hc = h.compose(h2, h1)?;
        let kc = k.compose(k2, k1)?;
        arrow_id.get(&(hc, a1, kc)).copied()
    })?;
    let groupoid = Arc::new(groupoid);
    let pr1 = GroupoidMorphism {
        domain: groupoid.clone(),
        codomain: f.domain.clone(),
        phi0: object_triples.iter().map(|t| t.0).collect(),
        phi1: arrow_triples.iter().map(|t| t.0).collect(),
    };
    let pr2 = GroupoidMorphism {
        domain: groupoid.clone(),
        codomain: g.domain.clone(),
        phi0: object_triples.iter().map(|t| t.2).collect(),
        phi1: arrow_triples.iter().map(|t| t.2).collect(),
    };
    let transformation = object_triples.iter().map(|t| t.1).collect();
    Ok(FiberedProduct { groupoid, pr1, pr2, object_triples, arrow_triples, transformation })
}

/// Whether the first projection of `f ×_G g` is an equivalence, given that
/// `g` is one.
pub fn verify_pullback_equivalence(f: &GroupoidMorphism, g: &GroupoidMorphism) -> Result<bool> {
    if !g.is_equivalence() {
        return Err(Error::Precondition("the second functor is not an equivalence".into()));
    }
    Ok(fibered_product(f, g)?.pr1.is_equivalence())
}

/// The groupoid with objects `labels`, lying over `over` in `g`, and one
/// arrow `(u,a,v)` for every `a: over[u] → over[v]`. Returns the projection
/// onto `g`, which is fully faithful and an equivalence when `over` meets
/// every orbit.
pub fn object_pullback(g: &Arc<FiniteGroupoid>, labels: Vec<String>, over: Vec<ObjectId>) -> Result<GroupoidMorphism> {
    if labels.len() != over.len() {
        return Err(Error::Malformed("one base object per label is required".into()));
    }
    if let Some(&x) = over.iter().find(|&&x| x >= g.object_count()) {
        return Err(Error::UnknownObject(format!("object index {x}")));
    }
    let mut triples = Vec::new();
    let mut index = HashMap::new();
    for (u, &x) in over.iter().enumerate() {
        for &a in g.outgoing(x) {
            for (v, _) in over.iter().enumerate().filter(|&(_, &y)| y == g.tgt(a)) {
                index.insert((u, a, v), triples.len());
                triples.push((u, a, v));
            }
        }
    }
    let arrows = triples
        .iter()
        .map(|&(u, a, v)| (format!("({},{},{})", labels[u], g.arrow_label(a), labels[v]), u, v))
        .collect();
    let unit = over.iter().enumerate().map(|(u, &x)| index[&(u, g.unit(x), u)]).collect();
    let inv = triples.iter().map(|&(u, a, v)| index[&(v, g.inv(a), u)]).collect();
    let domain = FiniteGroupoid::from_parts(labels, arrows, unit, inv, |second, first| {
        let (_, b, w) = triples[second];
        let (u, a, _) = triples[first];
        index.get(&(u, g.compose(b, a)?, w)).copied()
    })?;
    let phi1 = triples.iter().map(|t| t.1).collect();
    GroupoidMorphism::new(Arc::new(domain), g.clone(), over, phi1)
}

/// Orbits with their sizes and isotropy groups.
#[derive(Debug, Clone)]
pub struct Skeleton {
    /// `(orbit size, isotropy of a representative, representative)`.
    pub classes: Vec<(usize, FiniteGroup, ObjectId)>,
}

impl Skeleton {
    /// Matches classes by isotropy isomorphism type, ignoring orbit sizes.
    /// Returns, for each class of `self`, the matching class of `other`.
    pub fn morita_match(&self, other: &Skeleton) -> Option<Vec<usize>> {
        if self.classes.len() != other.classes.len() {
            return None;
        }
        let mut used = vec![false; other.classes.len()];
        let mut matching = Vec::with_capacity(self.classes.len());
        for (_, group, _) in &self.classes {
            // isomorphism is an equivalence relation, so greedy matching is complete
            let j = other
                .classes
                .iter()
                .enumerate()
                .position(|(j, (_, g2, _))| !used[j] && group.is_isomorphic(g2))?;
            used[j] = true;
            matching.push(j);
        }
        Some(matching)
    }

    /// Same classes including orbit sizes.
    pub fn strictly_equal(&self, other: &Skeleton) -> bool {
        if self.classes.len() != other.classes.len() {
            return false;
        }
        let mut used = vec![false; other.classes.len()];
        self.classes.iter().all(|(n, g, _)| {
            let found = other
                .classes
                .iter()
                .enumerate()
                .position(|(j, (n2, g2, _))| !used[j] && n == n2 && g.is_isomorphic(g2));
            found.map(|j| used[j] = true).is_some()
        })
    }
}

pub fn skeleton(g: &FiniteGroupoid) -> Skeleton {
    let classes = g
        .orbit_space()
        .into_iter()
        .map(|c| (c.objects.len(), c.isotropy, c.objects[0]))
        .collect();
    Skeleton { classes }
}

/// Two equivalences out of a common groupoid.
#[derive(Debug, Clone)]
pub struct Zigzag {
    pub middle: Arc<FiniteGroupoid>,
    pub left: GroupoidMorphism,
    pub right: GroupoidMorphism,
}

/// Decides Morita equivalence by comparing skeletons. On success the
/// witness has as middle the full subgroupoid of `g1` on one object per
/// orbit; the right leg uses group isomorphisms between isotropy groups.
pub fn are_morita_equivalent(g1: &Arc<FiniteGroupoid>, g2: &Arc<FiniteGroupoid>) -> (bool, Option<Zigzag>) {
    let (s1, s2) = (skeleton(g1), skeleton(g2));
    let Some(matching) = s1.morita_match(&s2) else {
        return (false, None);
    };
    let reps: Vec<ObjectId> = s1.classes.iter().map(|c| c.2).collect();
    let (middle, ambient) = g1.full_subgroupoid(&reps);
    let middle = Arc::new(middle);
    let left = GroupoidMorphism {
        domain: middle.clone(),
        codomain: g1.clone(),
        phi0: reps.clone(),
        phi1: ambient.clone(),
    };
    let mut phi0 = Vec::with_capacity(reps.len());
    let mut phi1 = vec![0; middle.arrow_count()];
    for (i, &x) in reps.iter().enumerate() {
        let y = s2.classes[matching[i]].2;
        phi0.push(y);
        let iso1 = g1.isotropy(x);
        let iso2 = g2.isotropy(y);
        let map = iso1.group.isomorphism_to(&iso2.group).expect("matched isotropy groups are isomorphic");
        for a in middle.hom_set(i, i) {
            let pos = iso1.position(ambient[a]).expect("loop at representative");
            phi1[a] = iso2.elements[map[pos]];
        }
    }
    let right = GroupoidMorphism { domain: middle.clone(), codomain: g2.clone(), phi0, phi1 };
    (true, Some(Zigzag { middle, left, right }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroupoid) -> Arc<FiniteGroupoid> {
        Arc::new(g)
    }

    fn reduction() -> GroupoidMorphism {
        let hom = (0..6).map(|i| i % 3).collect();
        GroupoidMorphism::from_group_hom(&FiniteGroup::cyclic(6), &FiniteGroup::cyclic(3), hom).unwrap()
    }

    fn point_into_pair() -> GroupoidMorphism {
        let pt = arc(FiniteGroupoid::discrete(&["x"]));
        let pair = arc(FiniteGroupoid::pair(&["x", "y"]));
        GroupoidMorphism::new(pt, pair, vec![0], vec![0]).unwrap()
    }

    #[test]
    fn identity_is_a_valid_equivalence() {
        let id = GroupoidMorphism::identity(arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(3))));
        assert!(id.validate_functor().is_valid());
        assert!(id.is_equivalence());
        assert!(id.is_essentially_injective());
    }

    #[test]
    fn reduction_is_a_functor_but_not_an_equivalence() {
        let f = reduction();
        assert!(f.validate_functor().is_valid());
        assert!(f.is_essentially_surjective());
        assert!(!f.is_fully_faithful());
        assert!(!f.is_equivalence());
    }

    #[test]
    fn non_homomorphism_is_reported() {
        let b = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(3)));
        let f = GroupoidMorphism::new(b.clone(), b, vec![0], vec![0, 1, 1]).unwrap();
        let report = f.validate_functor();
        assert!(report.violations.iter().any(|v| matches!(v, FunctorViolation::Composition { .. })));
    }

    #[test]
    fn out_of_range_image_is_rejected() {
        let b = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(3)));
        assert!(GroupoidMorphism::new(b.clone(), b, vec![0], vec![0, 1, 7]).is_err());
    }

    #[test]
    fn point_into_pair_is_an_equivalence() {
        let f = point_into_pair();
        assert!(f.is_essentially_surjective());
        assert!(f.is_fully_faithful());
    }

    #[test]
    fn component_inclusion_is_not_essentially_surjective() {
        let b = FiniteGroupoid::from_group(&FiniteGroup::cyclic(2));
        let u = arc(b.disjoint_union(&b, ("l.", "r.")));
        let f = GroupoidMorphism::new(arc(b), u, vec![0], vec![0, 1]).unwrap();
        assert!(!f.is_essentially_surjective());
    }

    #[test]
    fn collapse_is_not_fully_faithful() {
        let b = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(2)));
        let f = GroupoidMorphism::new(b.clone(), b, vec![0], vec![0, 0]).unwrap();
        assert!(f.validate_functor().is_valid());
        assert!(!f.is_fully_faithful());
    }

    #[test]
    fn subgroup_inclusion_is_essentially_injective() {
        let f = GroupoidMorphism::from_group_hom(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4), vec![0, 2]).unwrap();
        assert!(f.validate_functor().is_valid());
        assert!(f.is_essentially_injective());
    }

    #[test]
    fn point_fibered_with_point_over_bz2() {
        let pt = arc(FiniteGroupoid::discrete(&["p"]));
        let b = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(2)));
        let f = GroupoidMorphism::new(pt, b, vec![0], vec![0]).unwrap();
        let p = fibered_product(&f, &f).unwrap();
        assert_eq!(p.groupoid.object_count(), 2);
        assert_eq!(p.groupoid.arrow_count(), 2);
        assert!(p.groupoid.validate().is_valid());
        assert!(p.transformation_is_natural(&f, &f));
    }

    #[test]
    fn fibered_product_along_identity() {
        let f = reduction();
        let id = GroupoidMorphism::identity(f.codomain.clone());
        let p = fibered_product(&f, &id).unwrap();
        assert!(p.groupoid.validate().is_valid());
        assert!(p.pr1.validate_functor().is_valid());
        assert!(p.pr2.validate_functor().is_valid());
        assert!(p.pr1.is_equivalence());
        assert!(p.transformation_is_natural(&f, &id));
    }

    #[test]
    fn empty_factor_gives_empty_product() {
        let b = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(2)));
        let empty = GroupoidMorphism::new(arc(FiniteGroupoid::empty()), b.clone(), vec![], vec![]).unwrap();
        let p = fibered_product(&GroupoidMorphism::identity(b), &empty).unwrap();
        assert_eq!(p.groupoid.object_count(), 0);
    }

    #[test]
    fn mismatched_codomains() {
        let f = reduction();
        assert!(matches!(fibered_product(&f, &point_into_pair()), Err(Error::Mismatch(_))));
    }

    #[test]
    fn pullback_precondition() {
        let f = reduction();
        assert!(matches!(verify_pullback_equivalence(&f, &f), Err(Error::Precondition(_))));
        let g = point_into_pair();
        let any = GroupoidMorphism::new(
            arc(FiniteGroupoid::discrete(&["a", "b"])),
            g.codomain.clone(),
            vec![1, 1],
            vec![3, 3],
        )
        .unwrap();
        assert!(verify_pullback_equivalence(&any, &g).unwrap());
    }

    #[test]
    fn object_pullback_is_an_equivalence() {
        let b = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(3)));
        let p = object_pullback(&b, vec!["p".into(), "q".into()], vec![0, 0]).unwrap();
        assert!(p.domain.validate().is_valid());
        assert_eq!(p.domain.arrow_count(), 12);
        assert!(p.validate_functor().is_valid());
        assert!(p.is_equivalence());
    }

    #[test]
    fn skeleton_examples() {
        let s = skeleton(&FiniteGroupoid::from_group(&FiniteGroup::symmetric(3)));
        assert_eq!(s.classes.len(), 1);
        assert_eq!(s.classes[0].1.order(), 6);
    }

    #[test]
    fn morita_pair_vs_point() {
        let pair = arc(FiniteGroupoid::pair(&["x", "y"]));
        let pt = arc(FiniteGroupoid::discrete(&["p"]));
        let (ok, w) = are_morita_equivalent(&pair, &pt);
        assert!(ok);
        let w = w.unwrap();
        assert!(w.left.is_equivalence() && w.right.is_equivalence());
        assert!(w.left.validate_functor().is_valid() && w.right.validate_functor().is_valid());
    }

    #[test]
    fn morita_z4_vs_klein() {
        let z4 = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(4)));
        let v = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2))));
        assert!(!are_morita_equivalent(&z4, &v).0);
    }
}
