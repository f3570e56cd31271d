//! Finite groups acting on finite sets, translation groupoids, equivariant
//! maps and the sheet constructions built from a subset of a G-set.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{label_index, FiniteGroup};
use crate::groupoid::{ArrowId, FiniteGroupoid, ObjectId};
use crate::morphism::GroupoidMorphism;

/// A finite left G-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    group: FiniteGroup,
    points: Vec<String>,
    /// `act[g][x] = g·x`
    act: Vec<Vec<usize>>,
    index: HashMap<String, usize>,
}

impl GSet {
    /// Checks that `act` is a left action.
    pub fn new(group: FiniteGroup, points: Vec<String>, act: Vec<Vec<usize>>) -> Result<Self> {
        let n = points.len();
        let index = label_index(&points)?;
        if act.len() != group.order() || act.iter().any(|row| row.len() != n) {
            return Err(Error::Malformed(format!("action table must be {}×{n}", group.order())));
        }
        if act.iter().flatten().any(|&y| y >= n) {
            return Err(Error::UnknownPoint("action image out of range".into()));
        }
        if act[group.identity()].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::Malformed("identity does not act trivially".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                if let Some(x) = (0..n).find(|&x| act[g][act[h][x]] != act[gh][x]) {
                    return Err(Error::Malformed(format!(
                        "{}·({}·{}) ≠ ({}{})·{}",
                        group.label(g),
                        group.label(h),
                        points[x],
                        group.label(g),
                        group.label(h),
                        points[x]
                    )));
                }
            }
        }
        Ok(Self { group, points, act, index })
    }

    /// Action given as, per group element label, the images of all points.
    pub fn from_labels(group: FiniteGroup, points: Vec<String>, act: &HashMap<String, Vec<String>>) -> Result<Self> {
        let index = label_index(&points)?;
        let mut table = vec![Vec::new(); group.order()];
        for (g, images) in act {
            let gi = group.element(g)?;
            table[gi] = images
                .iter()
                .map(|p| index.get(p).copied().ok_or_else(|| Error::UnknownPoint(p.clone())))
                .collect::<Result<_>>()?;
        }
        if let Some(g) = table.iter().position(|row| row.is_empty() && !points.is_empty()) {
            return Err(Error::Malformed(format!("no action given for {}", group.label(g))));
        }
        Self::new(group, points, table)
    }

    /// Trivial action on the given points.
    pub fn trivial(group: FiniteGroup, points: &[&str]) -> Self {
        let act = vec![(0..points.len()).collect(); group.order()];
        Self::new(group, points.iter().map(|p| p.to_string()).collect(), act).expect("trivial action")
    }

    /// Left multiplication on `G/K`. Points are labelled by `label(rep)`,
    /// where `rep` is the least element of the coset.
    pub fn cosets_labelled(group: &FiniteGroup, subgroup: &[usize], label: impl Fn(&str) -> String) -> Result<Self> {
        if !group.is_subgroup(subgroup) {
            return Err(Error::NotAGroup("not a subgroup".into()));
        }
        let cosets = group.left_cosets(subgroup);
        let which = group.coset_indices(&cosets);
        let points = cosets.iter().map(|c| label(group.label(c[0]))).collect();
        let act = group.elements().map(|g| cosets.iter().map(|c| which[group.mul(g, c[0])]).collect()).collect();
        Self::new(group.clone(), points, act)
    }

    /// `G/K` with points labelled `[rep]`.
    pub fn cosets(group: &FiniteGroup, subgroup: &[usize]) -> Result<Self> {
        Self::cosets_labelled(group, subgroup, |r| format!("[{r}]"))
    }

    /// The regular action of `G` on itself.
    pub fn regular(group: &FiniteGroup) -> Self {
        let act = group.elements().map(|g| group.elements().map(|h| group.mul(g, h)).collect()).collect();
        Self::new(group.clone(), group.labels().to_vec(), act).expect("regular action")
    }

    /// Disjoint union over the same group; labels must not clash.
    pub fn union(&self, other: &GSet) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::Mismatch("G-sets over different groups".into()));
        }
        let n = self.points.len();
        let points = self.points.iter().chain(&other.points).cloned().collect();
        let act = self
            .act
            .iter()
            .zip(&other.act)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|y| y + n)).collect())
            .collect();
        Self::new(self.group.clone(), points, act)
    }

    /// `self × other` as a `(G×H)`-set; points are labelled `(x,y)`.
    pub fn external_product(&self, other: &GSet) -> Self {
        let group = self.group.product(&other.group);
        let m = other.points.len();
        let points = self
            .points
            .iter()
            .flat_map(|x| other.points.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let act = group
            .elements()
            .map(|gh| {
                let (g, h) = (gh / other.group.order(), gh % other.group.order());
                (0..self.points.len() * m).map(|p| self.act[g][p / m] * m + other.act[h][p % m]).collect()
            })
            .collect();
        Self::new(group, points, act).expect("product action")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.points.len()
    }

    pub fn point_label(&self, x: usize) -> &str {
        &self.points[x]
    }

    pub fn point_labels(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.act[g][x]
    }

    /// Images of every point under `g`.
    pub fn permutation(&self, g: usize) -> &[usize] {
        &self.act[g]
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut o: Vec<usize> = self.group.elements().map(|g| self.act[g][x]).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    /// Orbits, each ascending, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.point_count()];
        let mut out = Vec::new();
        for x in self.points() {
            if !done[x] {
                let o = self.orbit(x);
                for &y in &o {
                    done[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn orbit_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.point_count()];
        for (i, o) in self.orbits().iter().enumerate() {
            for &x in o {
                idx[x] = i;
            }
        }
        idx
    }

    /// Elements fixing `x`, ascending.
    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        self.group.elements().filter(|&g| self.act[g][x] == x).collect()
    }

    /// The stabilizer of the labelled point as a group.
    pub fn stabilizer_group(&self, label: &str) -> Result<FiniteGroup> {
        let x = self.point(label)?;
        self.group.subgroup(&self.stabilizer(x))
    }

    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        self.points().filter(|&x| self.act[g][x] == x).collect()
    }

    /// Fixed points of the labelled element.
    pub fn fixed_points_of(&self, label: &str) -> Result<Vec<usize>> {
        Ok(self.fixed_points(self.group.element(label)?))
    }

    /// `g·n`, ascending.
    pub fn translate(&self, g: usize, n: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = n.iter().map(|&x| self.act[g][x]).collect();
        out.sort_unstable();
        out
    }

    /// `{g : g·n = n}`.
    pub fn setwise_stabilizer(&self, n: &[usize]) -> Vec<usize> {
        let n = normalize(n);
        self.group.elements().filter(|&g| self.translate(g, &n) == n).collect()
    }

    /// Every stabilizer is finite, so every finite action is locally free.
    pub fn is_locally_free(&self) -> bool {
        true
    }

    /// Every point has trivial stabilizer.
    pub fn is_free(&self) -> bool {
        self.points().all(|x| self.stabilizer(x).len() == 1)
    }

    /// Point indices for the given labels, sorted and deduplicated.
    pub fn subset(&self, labels: &[&str]) -> Result<Vec<usize>> {
        let ids = labels.iter().map(|l| self.point(l)).collect::<Result<Vec<_>>>()?;
        Ok(normalize(&ids))
    }

    fn check_subset(&self, n: &[usize]) -> Result<Vec<usize>> {
        if let Some(&x) = n.iter().find(|&&x| x >= self.point_count()) {
            return Err(Error::UnknownPoint(format!("point index {x}")));
        }
        Ok(normalize(n))
    }
}

fn normalize(n: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = n.iter().copied().collect();
    set.into_iter().collect()
}

/// `ι: N → M` commuting with the actions of a common group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantMap {
    pub source: GSet,
    pub target: GSet,
    pub map: Vec<usize>,
}

impl EquivariantMap {
    pub fn new(source: GSet, target: GSet, map: Vec<usize>) -> Result<Self> {
        if source.group != target.group {
            return Err(Error::Mismatch("equivariant map between different groups".into()));
        }
        if map.len() != source.point_count() || map.iter().any(|&p| p >= target.point_count()) {
            return Err(Error::Malformed("point map is not total into the target".into()));
        }
        for g in source.group.elements() {
            if let Some(x) = source.points().find(|&x| map[source.act(g, x)] != target.act(g, map[x])) {
                return Err(Error::Malformed(format!(
                    "not equivariant at ({}, {})",
                    source.group.label(g),
                    source.point_label(x)
                )));
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(a: &GSet) -> Self {
        Self { source: a.clone(), target: a.clone(), map: a.points().collect() }
    }

    pub fn fiber(&self, p: usize) -> Vec<usize> {
        self.source.points().filter(|&x| self.map[x] == p).collect()
    }

    /// The first target point whose stabilizer does not act transitively on
    /// its fiber, together with that fiber.
    pub fn strongness_failure(&self) -> Option<(usize, Vec<usize>)> {
        for p in self.target.points() {
            let fiber = self.fiber(p);
            let Some(&x0) = fiber.first() else { continue };
            let reached: BTreeSet<usize> =
                self.target.stabilizer(p).into_iter().map(|g| self.source.act(g, x0)).collect();
            if reached.len() != fiber.len() {
                return Some((p, fiber));
            }
        }
        None
    }

    /// The stabilizer of every target point acts transitively on its fiber.
    pub fn is_strong(&self) -> bool {
        self.strongness_failure().is_none()
    }

    /// The induced map on orbit sets.
    pub fn induced_quotient_map(&self) -> QuotientMap {
        let target_index = self.target.orbit_index();
        let map: Vec<usize> = self.source.orbits().iter().map(|o| target_index[self.map[o[0]]]).collect();
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        let injective = distinct.len() == map.len();
        QuotientMap { map, injective }
    }
}

/// An equivariant bijection `α` between the sources of two maps into the
/// same G-set with `b.map ∘ α = a.map`.
pub fn isomorphic_over(a: &EquivariantMap, b: &EquivariantMap) -> Option<Vec<usize>> {
    if a.target != b.target || a.source.point_count() != b.source.point_count() {
        return None;
    }
    let mut alpha = vec![usize::MAX; a.source.point_count()];
    let mut used = vec![false; b.source.point_count()];
    over_search(a, b, &a.source.orbits(), 0, &mut alpha, &mut used).then_some(alpha)
}

fn over_search(
    a: &EquivariantMap,
    b: &EquivariantMap,
    orbits: &[Vec<usize>],
    next: usize,
    alpha: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(orbit) = orbits.get(next) else {
        return true;
    };
    let x = orbit[0];
    let g = a.source.group();
    for y in b.source.points() {
        if used[y] || b.map[y] != a.map[x] {
            continue;
        }
        let mut assigned = Vec::new();
        let mut ok = true;
        for e in g.elements() {
            let (gx, gy) = (a.source.act(e, x), b.source.act(e, y));
            if alpha[gx] == usize::MAX {
                if used[gy] || b.map[gy] != a.map[gx] {
                    ok = false;
                    break;
                }
                alpha[gx] = gy;
                used[gy] = true;
                assigned.push(gx);
            } else if alpha[gx] != gy {
                ok = false;
                break;
            }
        }
        if ok && over_search(a, b, orbits, next + 1, alpha, used) {
            return true;
        }
        for z in assigned {
            used[alpha[z]] = false;
            alpha[z] = usize::MAX;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    /// Source orbit index ↦ target orbit index.
    pub map: Vec<usize>,
    pub injective: bool,
}

/// `G × N → M`, `(h,x) ↦ h·x`, with `G` acting on the first factor.
pub fn build_sheeted_extension(a: &GSet, n: &[usize]) -> Result<EquivariantMap> {
    let n = a.check_subset(n)?;
    let g = a.group();
    let k = n.len();
    let points = g
        .elements()
        .flat_map(|h| n.iter().map(move |&x| (h, x)))
        .map(|(h, x)| format!("({},{})", g.label(h), a.point_label(x)))
        .collect();
    let act = g.elements().map(|e| (0..g.order() * k).map(|p| g.mul(e, p / k) * k + p % k).collect()).collect();
    let total = GSet::new(g.clone(), points, act)?;
    let map = (0..g.order() * k).map(|p| a.act(p / k, n[p % k])).collect();
    EquivariantMap::new(total, a.clone(), map)
}

/// `n ∩ g·n = n^g` for every `g`.
pub fn check_sheet_criterion(a: &GSet, n: &[usize]) -> Result<bool> {
    let n = a.check_subset(n)?;
    let member: BTreeSet<usize> = n.iter().copied().collect();
    Ok(a.group().elements().all(|g| {
        let moved: BTreeSet<usize> = a.translate(g, &n).into_iter().filter(|x| member.contains(x)).collect();
        let fixed: BTreeSet<usize> = n.iter().copied().filter(|&x| a.act(g, x) == x).collect();
        moved == fixed
    }))
}

#[derive(Debug, Clone)]
pub struct CosetExtension {
    pub map: EquivariantMap,
    /// Setwise stabilizer of the subset.
    pub stabilizer: Vec<usize>,
    pub sheets: usize,
}

/// `⋃_{α ∈ G/G_N} (α·n) × {α}` over `M`, one sheet per coset of the setwise
/// stabilizer. Points are labelled `(x,[rep])`.
pub fn build_coset_extension(a: &GSet, n: &[usize]) -> Result<CosetExtension> {
    let n = a.check_subset(n)?;
    let g = a.group();
    let stabilizer = a.setwise_stabilizer(&n);
    let cosets = g.left_cosets(&stabilizer);
    let which = g.coset_indices(&cosets);
    let mut labels = Vec::new();
    let mut pairs = Vec::new();
    for (ci, coset) in cosets.iter().enumerate() {
        for x in a.translate(coset[0], &n) {
            labels.push(format!("({},[{}])", a.point_label(x), g.label(coset[0])));
            pairs.push((x, ci));
        }
    }
    let position: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let act = g
        .elements()
        .map(|e| pairs.iter().map(|&(x, ci)| position[&(a.act(e, x), which[g.mul(e, cosets[ci][0])])]).collect())
        .collect();
    let total = GSet::new(g.clone(), labels, act)?;
    let map = pairs.iter().map(|p| p.0).collect();
    let sheets = cosets.len();
    Ok(CosetExtension { map: EquivariantMap::new(total, a.clone(), map)?, stabilizer, sheets })
}

/// `G ⋉ M`, with arrow `(g,x)` stored at index `g·|M| + x`.
#[derive(Debug, Clone)]
pub struct TranslationGroupoid {
    pub gset: GSet,
    pub groupoid: Arc<FiniteGroupoid>,
}

impl TranslationGroupoid {
    pub fn arrow(&self, g: usize, x: usize) -> ArrowId {
        g * self.gset.point_count() + x
    }

    /// `(g, x)` for an arrow index.
    pub fn decode(&self, a: ArrowId) -> (usize, ObjectId) {
        let n = self.gset.point_count();
        (a / n, a % n)
    }
}

pub fn translation_groupoid(a: &GSet) -> TranslationGroupoid {
    let n = a.point_count();
    let g = a.group();
    let arrows = g
        .elements()
        .flat_map(|e| a.points().map(move |x| (e, x)))
        .map(|(e, x)| (format!("({},{})", g.label(e), a.point_label(x)), x, a.act(e, x)))
        .collect();
    let unit = a.points().map(|x| g.identity() * n + x).collect();
    let inv = (0..g.order() * n).map(|arr| g.inv(arr / n) * n + a.act(arr / n, arr % n)).collect();
    let groupoid = FiniteGroupoid::from_parts(a.point_labels().to_vec(), arrows, unit, inv, |g2, g1| {
        Some(g.mul(g2 / n, g1 / n) * n + g1 % n)
    })
    .expect("translation groupoid tables are well formed");
    TranslationGroupoid { gset: a.clone(), groupoid: Arc::new(groupoid) }
}

/// The functor `G ⋉ N → G ⋉ M` induced by an equivariant map.
pub fn induced_functor(f: &EquivariantMap) -> (TranslationGroupoid, TranslationGroupoid, GroupoidMorphism) {
    let (src, tgt) = (translation_groupoid(&f.source), translation_groupoid(&f.target));
    let n = f.source.point_count();
    let phi1 = (0..src.groupoid.arrow_count()).map(|a| tgt.arrow(a / n, f.map[a % n])).collect();
    let morphism = GroupoidMorphism {
        domain: src.groupoid.clone(),
        codomain: tgt.groupoid.clone(),
        phi0: f.map.clone(),
        phi1,
    };
    (src, tgt, morphism)
}

/// The diagonal of `G ⋉ M` inside `(G×G) ⋉ (M×M)`.
#[derive(Debug, Clone)]
pub struct Diagonal {
    /// `(G×G)` acting on triples `(x, g, g·x)`.
    pub domain: TranslationGroupoid,
    pub target: TranslationGroupoid,
    pub morphism: GroupoidMorphism,
}

/// Builds `Δ = (G×G) ⋉ {(x, g, g·x)}` with `(h,k)·(x,g,gx) = (hx, kgh⁻¹, kgx)`
/// and its functor `(x,g,gx) ↦ (x,gx)` into the product.
pub fn diagonal_embedding(a: &GSet) -> Diagonal {
    let g = a.group();
    let n = a.point_count();
    let product = a.external_product(a);
    let gg = product.group().clone();
    let triples: Vec<(usize, usize)> = a.points().flat_map(|x| g.elements().map(move |e| (x, e))).collect();
    let position: HashMap<(usize, usize), usize> = triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let labels = triples
        .iter()
        .map(|&(x, e)| format!("({},{},{})", a.point_label(x), g.label(e), a.point_label(a.act(e, x))))
        .collect();
    let act = gg
        .elements()
        .map(|hk| {
            let (h, k) = (hk / g.order(), hk % g.order());
            triples
                .iter()
                .map(|&(x, e)| position[&(a.act(h, x), g.mul(g.mul(k, e), g.inv(h)))])
                .collect()
        })
        .collect();
    let delta = GSet::new(gg, labels, act).expect("diagonal action");
    let domain = translation_groupoid(&delta);
    let target = translation_groupoid(&product);
    let phi0: Vec<usize> = triples.iter().map(|&(x, e)| x * n + a.act(e, x)).collect();
    let m = triples.len();
    let phi1 = (0..domain.groupoid.arrow_count()).map(|arr| target.arrow(arr / m, phi0[arr % m])).collect();
    let morphism = GroupoidMorphism {
        domain: domain.groupoid.clone(),
        codomain: target.groupoid.clone(),
        phi0,
        phi1,
    };
    Diagonal { domain, target, morphism }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> GSet {
        GSet::new(FiniteGroup::cyclic(2), vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn s3_on_letters() -> GSet {
        let s3 = FiniteGroup::symmetric(3);
        let act = s3
            .labels()
            .iter()
            .map(|l| l.bytes().map(|b| (b - b'1') as usize).collect())
            .collect();
        GSet::new(s3, vec!["1".into(), "2".into(), "3".into()], act).unwrap()
    }

    fn s3_cosets() -> GSet {
        let s3 = FiniteGroup::symmetric(3);
        let h = s3.generated_subgroup(&[s3.element("213").unwrap()]);
        GSet::cosets(&s3, &h).unwrap()
    }

    #[test]
    fn rejects_non_actions() {
        let bad = GSet::new(FiniteGroup::cyclic(3), vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1, 0], vec![1, 0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn swap_translation_groupoid() {
        let t = translation_groupoid(&swap());
        let g = &t.groupoid;
        assert!(g.validate().is_valid());
        assert_eq!((g.object_count(), g.arrow_count()), (2, 4));
        assert!(g.is_connected());
        assert_eq!(g.isotropy(0).order(), 1);
        assert_eq!(g.orbit(0), vec![0, 1]);
    }

    #[test]
    fn trivial_action_orbit_space() {
        let t = translation_groupoid(&GSet::trivial(FiniteGroup::cyclic(2), &["a", "b"]));
        let classes = t.groupoid.orbit_space();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.isotropy.order() == 2));
        assert_eq!(t.groupoid.orbit(0), vec![0]);
    }

    #[test]
    fn point_with_trivial_action_gives_bg() {
        let t = translation_groupoid(&GSet::trivial(FiniteGroup::symmetric(3), &["pt"]));
        assert_eq!(t.groupoid.isotropy(0).order(), 6);
    }

    #[test]
    fn empty_gset_gives_empty_groupoid() {
        let t = translation_groupoid(&GSet::trivial(FiniteGroup::cyclic(2), &[]));
        assert_eq!(t.groupoid.object_count(), 0);
    }

    #[test]
    fn s3_coset_stabilizer_and_orbit() {
        let a = s3_cosets();
        assert_eq!(a.point_labels(), &["[123]", "[132]", "[231]"]);
        let stab = a.stabilizer_group("[123]").unwrap();
        assert_eq!(stab.labels(), &["123", "213"]);
        assert_eq!(translation_groupoid(&a).groupoid.orbit(0).len(), 3);
    }

    #[test]
    fn fixed_points_of_a_transposition() {
        let a = s3_on_letters();
        assert_eq!(a.fixed_points_of("213").unwrap(), vec![2]);
        assert_eq!(a.fixed_points_of("123").unwrap().len(), 3);
        assert!(swap().fixed_points(1).is_empty());
    }

    #[test]
    fn strongness_examples() {
        assert!(EquivariantMap::identity(&swap()).is_strong());
        let z2 = FiniteGroup::cyclic(2);
        let cover = EquivariantMap::new(GSet::trivial(z2.clone(), &["p", "q"]), GSet::trivial(z2, &["m"]), vec![0, 0])
            .unwrap();
        assert!(!cover.is_strong());
        assert_eq!(cover.strongness_failure(), Some((0, vec![0, 1])));
        let q = cover.induced_quotient_map();
        assert_eq!(q.map, vec![0, 0]);
        assert!(!q.injective);

        let s3 = FiniteGroup::symmetric(3);
        let to_pt = EquivariantMap::new(s3_cosets(), GSet::trivial(s3, &["pt"]), vec![0; 3]).unwrap();
        assert!(to_pt.is_strong());
        assert!(to_pt.induced_quotient_map().injective);
    }

    #[test]
    fn sheeted_extension_of_a_free_orbit_point() {
        let z3 = FiniteGroup::cyclic(3);
        let a = GSet::regular(&z3);
        let ext = build_sheeted_extension(&a, &[0]).unwrap();
        assert_eq!(ext.source.point_count(), 3);
        assert!(ext.is_strong());
        assert!(check_sheet_criterion(&a, &[0]).unwrap());
    }

    #[test]
    fn sheeted_extension_over_a_fixed_point() {
        let a = GSet::trivial(FiniteGroup::cyclic(2), &["m"]);
        let ext = build_sheeted_extension(&a, &[0]).unwrap();
        assert_eq!(ext.source.point_count(), 2);
        assert!(ext.is_strong());
        assert!(check_sheet_criterion(&a, &[0]).unwrap());
        let empty = build_sheeted_extension(&a, &[]).unwrap();
        assert_eq!(empty.source.point_count(), 0);
        assert!(empty.is_strong());
    }

    #[test]
    fn sheet_criterion_examples() {
        let a = s3_on_letters();
        assert!(check_sheet_criterion(&a, &[2]).unwrap());
        let triv = GSet::trivial(FiniteGroup::cyclic(2), &["a", "b"]);
        assert!(check_sheet_criterion(&triv, &[0, 1]).unwrap());
        let abc = GSet::new(
            FiniteGroup::cyclic(2),
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1, 2], vec![1, 0, 2]],
        )
        .unwrap();
        assert!(!check_sheet_criterion(&abc, &[0, 1]).unwrap());
        assert!(!build_sheeted_extension(&abc, &[0, 1]).unwrap().is_strong());
        assert!(build_sheeted_extension(&abc, &[7]).is_err());
    }

    #[test]
    fn coset_extension_of_the_diagonal() {
        let m = swap();
        let mm = m.external_product(&m);
        let diag = mm.subset(&["(a,a)", "(b,b)"]).unwrap();
        let ext = build_coset_extension(&mm, &diag).unwrap();
        assert_eq!(ext.stabilizer.len(), 2);
        assert_eq!(ext.sheets, 2);
        assert_eq!(ext.map.source.point_count(), 4);
    }

    #[test]
    fn coset_extension_of_invariant_subset_has_one_sheet() {
        let m = swap();
        let ext = build_coset_extension(&m, &[0, 1]).unwrap();
        assert_eq!(ext.sheets, 1);
        assert_eq!(ext.map.source.point_count(), 2);
    }

    #[test]
    fn coset_extension_of_free_point() {
        let a = GSet::regular(&FiniteGroup::cyclic(3));
        let ext = build_coset_extension(&a, &[0]).unwrap();
        assert_eq!(ext.stabilizer, vec![0]);
        assert_eq!(ext.sheets, 3);
    }

    #[test]
    fn diagonal_of_the_swap() {
        let d = diagonal_embedding(&swap());
        let g = &d.domain.groupoid;
        assert!(g.validate().is_valid());
        assert_eq!(g.object_count(), 4);
        assert!(g.is_connected());
        assert_eq!(g.isotropy(0).order(), 1);
        assert!(d.target.groupoid.is_connected());
        assert_eq!(d.target.groupoid.isotropy(0).order(), 1);
        assert!(d.morphism.validate_functor().is_valid());
    }

    #[test]
    fn diagonal_of_a_point_is_bg() {
        let d = diagonal_embedding(&GSet::trivial(FiniteGroup::cyclic(3), &["pt"]));
        let g = &d.domain.groupoid;
        assert_eq!(g.orbits().len(), 1);
        assert_eq!(g.isotropy(0).order(), 3);
        assert!(d.morphism.is_injective_on_isotropy());
    }

    #[test]
    fn sheeted_and_coset_extensions_of_a_free_point_agree() {
        let a = GSet::regular(&FiniteGroup::cyclic(3));
        let sheeted = build_sheeted_extension(&a, &[0]).unwrap();
        let coset = build_coset_extension(&a, &[0]).unwrap().map;
        assert!(isomorphic_over(&sheeted, &coset).is_some());
        let other = build_sheeted_extension(&a, &[0, 1]).unwrap();
        assert!(isomorphic_over(&sheeted, &other).is_none());
    }

    #[test]
    fn induced_functor_is_valid() {
        let s3 = FiniteGroup::symmetric(3);
        let to_pt = EquivariantMap::new(s3_cosets(), GSet::trivial(s3, &["pt"]), vec![0; 3]).unwrap();
        let (_, _, f) = induced_functor(&to_pt);
        assert!(f.validate_functor().is_valid());
    }
}
