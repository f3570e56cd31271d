//! Finite groupoids with explicit structure maps.
//!
//! Objects and arrows are dense indices with string labels. Composition
//! follows `compose(g2, g1)` = "g1 then g2", defined iff `tgt(g1) = src(g2)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{label_index, FiniteGroup};

pub type ObjectId = usize;
pub type ArrowId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    arrows: Vec<String>,
    src: Vec<ObjectId>,
    tgt: Vec<ObjectId>,
    unit: Vec<ArrowId>,
    inv: Vec<ArrowId>,
    /// Arrows leaving each object, ascending.
    outgoing: Vec<Vec<ArrowId>>,
    /// Position of each arrow inside `outgoing[src]`.
    out_pos: Vec<usize>,
    /// `comp[g1][out_pos[g2]] = compose(g2, g1)`.
    comp: Vec<Vec<ArrowId>>,
    object_index: HashMap<String, ObjectId>,
    arrow_index: HashMap<String, ArrowId>,
}

/// A single failed groupoid axiom, naming the offending identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnitEndpoints { object: String },
    LeftUnit { arrow: String },
    RightUnit { arrow: String },
    Inverse { arrow: String },
    CompositeEndpoints { second: String, first: String },
    Associativity { third: String, second: String, first: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnitEndpoints { object } => write!(f, "unit of {object} is not a loop at {object}"),
            Violation::LeftUnit { arrow } => write!(f, "u(t({arrow}))∘{arrow} ≠ {arrow}"),
            Violation::RightUnit { arrow } => write!(f, "{arrow}∘u(s({arrow})) ≠ {arrow}"),
            Violation::Inverse { arrow } => write!(f, "inverse law fails for {arrow}"),
            Violation::CompositeEndpoints { second, first } => {
                write!(f, "{second}∘{first} has wrong endpoints")
            }
            Violation::Associativity { third, second, first } => {
                write!(f, "({third}∘{second})∘{first} ≠ {third}∘({second}∘{first})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The loops at one object, with the induced group law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyGroup {
    pub base: ObjectId,
    /// Ascending arrow ids; element `i` of `group` is `elements[i]`.
    pub elements: Vec<ArrowId>,
    pub group: FiniteGroup,
}

impl IsotropyGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Position of `arrow` within `elements`.
    pub fn position(&self, arrow: ArrowId) -> Option<usize> {
        self.elements.binary_search(&arrow).ok()
    }
}

/// One orbit of objects together with a representative's isotropy.
#[derive(Debug, Clone)]
pub struct OrbitClass {
    pub objects: Vec<ObjectId>,
    pub isotropy: FiniteGroup,
}

impl FiniteGroupoid {
    /// Builds a groupoid from its structure maps. `compose(g2, g1)` is
    /// queried for every pair with `tgt(g1) = src(g2)` and must return an
    /// arrow. Only structural well-formedness is checked here; the axioms are
    /// checked by [`validate`](Self::validate).
    pub fn from_parts(
        objects: Vec<String>,
        arrows: Vec<(String, ObjectId, ObjectId)>,
        unit: Vec<ArrowId>,
        inv: Vec<ArrowId>,
        mut compose: impl FnMut(ArrowId, ArrowId) -> Option<ArrowId>,
    ) -> Result<Self> {
        let n_obj = objects.len();
        let n_arr = arrows.len();
        let object_index = label_index(&objects)?;
        let mut labels = Vec::with_capacity(n_arr);
        let mut src = Vec::with_capacity(n_arr);
        let mut tgt = Vec::with_capacity(n_arr);
        for (label, s, t) in arrows {
            if s >= n_obj || t >= n_obj {
                return Err(Error::UnknownObject(format!("endpoint of arrow {label}")));
            }
            labels.push(label);
            src.push(s);
            tgt.push(t);
        }
        let arrow_index = label_index(&labels)?;
        if unit.len() != n_obj {
            return Err(Error::Malformed(format!("{} unit entries for {n_obj} objects", unit.len())));
        }
        if inv.len() != n_arr {
            return Err(Error::Malformed(format!("{} inverse entries for {n_arr} arrows", inv.len())));
        }
        if let Some(&bad) = unit.iter().chain(&inv).find(|&&a| a >= n_arr) {
            return Err(Error::UnknownArrow(format!("arrow index {bad}")));
        }
        let mut outgoing = vec![Vec::new(); n_obj];
        let mut out_pos = vec![0; n_arr];
        for a in 0..n_arr {
            out_pos[a] = outgoing[src[a]].len();
            outgoing[src[a]].push(a);
        }
        let mut comp = Vec::with_capacity(n_arr);
        for g1 in 0..n_arr {
            let row = outgoing[tgt[g1]]
                .iter()
                .map(|&g2| match compose(g2, g1) {
                    Some(c) if c < n_arr => Ok(c),
                    Some(c) => Err(Error::UnknownArrow(format!("arrow index {c}"))),
                    None => Err(Error::Malformed(format!(
                        "missing composite {}∘{}",
                        labels[g2], labels[g1]
                    ))),
                })
                .collect::<Result<Vec<_>>>()?;
            comp.push(row);
        }
        Ok(Self {
            objects,
            arrows: labels,
            src,
            tgt,
            unit,
            inv,
            outgoing,
            out_pos,
            comp,
            object_index,
            arrow_index,
        })
    }

    /// Builds a groupoid from labelled tables. `composition` lists
    /// `(second, first, result)` triples; every composable pair must appear
    /// exactly once and no other pair may appear.
    pub fn from_labels(
        objects: Vec<String>,
        arrows: Vec<(String, String, String)>,
        units: &[(String, String)],
        inverses: &[(String, String)],
        composition: &[(String, String, String)],
    ) -> Result<Self> {
        let object_index = label_index(&objects)?;
        let obj = |l: &str| object_index.get(l).copied().ok_or_else(|| Error::UnknownObject(l.to_string()));
        let arrow_labels: Vec<String> = arrows.iter().map(|a| a.0.clone()).collect();
        let arrow_index = label_index(&arrow_labels)?;
        let arr = |l: &str| arrow_index.get(l).copied().ok_or_else(|| Error::UnknownArrow(l.to_string()));
        let mut triples = Vec::with_capacity(arrows.len());
        for (label, s, t) in &arrows {
            triples.push((label.clone(), obj(s)?, obj(t)?));
        }

        let mut unit = vec![usize::MAX; objects.len()];
        for (o, a) in units {
            let (o, a) = (obj(o)?, arr(a)?);
            if unit[o] != usize::MAX {
                return Err(Error::DuplicateIdentifier(format!("unit of {}", objects[o])));
            }
            unit[o] = a;
        }
        if let Some(o) = unit.iter().position(|&u| u == usize::MAX) {
            return Err(Error::Malformed(format!("no unit for object {}", objects[o])));
        }
        let mut inv = vec![usize::MAX; arrows.len()];
        for (a, b) in inverses {
            let (a, b) = (arr(a)?, arr(b)?);
            if inv[a] != usize::MAX {
                return Err(Error::DuplicateIdentifier(format!("inverse of {}", arrow_labels[a])));
            }
            inv[a] = b;
        }
        if let Some(a) = inv.iter().position(|&i| i == usize::MAX) {
            return Err(Error::Malformed(format!("no inverse for arrow {}", arrow_labels[a])));
        }
        let mut table: HashMap<(ArrowId, ArrowId), ArrowId> = HashMap::with_capacity(composition.len());
        for (g2, g1, r) in composition {
            let (a2, a1, ar) = (arr(g2)?, arr(g1)?, arr(r)?);
            if triples[a1].2 != triples[a2].1 {
                return Err(Error::Malformed(format!("{g2}∘{g1} is not composable")));
            }
            if table.insert((a2, a1), ar).is_some() {
                return Err(Error::DuplicateIdentifier(format!("composite {g2}∘{g1}")));
            }
        }
        Self::from_parts(objects, triples, unit, inv, |g2, g1| table.get(&(g2, g1)).copied())
    }

    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), Vec::new(), Vec::new(), Vec::new(), |_, _| None).unwrap()
    }

    /// B(G): one object `*`, arrows labelled by the group elements.
    pub fn from_group(group: &FiniteGroup) -> Self {
        let arrows = group.labels().iter().map(|l| (l.clone(), 0, 0)).collect();
        let inv = group.elements().map(|a| group.inv(a)).collect();
        Self::from_parts(vec!["*".into()], arrows, vec![group.identity()], inv, |g2, g1| {
            Some(group.mul(g2, g1))
        })
        .expect("group tables are well formed")
    }

    /// Pair groupoid: exactly one arrow `x->y` between any two objects.
    pub fn pair(objects: &[&str]) -> Self {
        let n = objects.len();
        let arrows = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| (format!("{}->{}", objects[x], objects[y]), x, y))
            .collect();
        let unit = (0..n).map(|x| x * n + x).collect();
        let inv = (0..n * n).map(|a| (a % n) * n + a / n).collect();
        Self::from_parts(objects.iter().map(|s| s.to_string()).collect(), arrows, unit, inv, |g2, g1| {
            Some((g1 / n) * n + g2 % n)
        })
        .expect("pair tables are well formed")
    }

    /// Only identity arrows, labelled `1_x`.
    pub fn discrete(objects: &[&str]) -> Self {
        let arrows = objects.iter().enumerate().map(|(i, o)| (format!("1_{o}"), i, i)).collect();
        let ids: Vec<usize> = (0..objects.len()).collect();
        Self::from_parts(objects.iter().map(|s| s.to_string()).collect(), arrows, ids.clone(), ids, |g2, _| {
            Some(g2)
        })
        .expect("discrete tables are well formed")
    }

    /// Disjoint union; labels are prefixed by `prefixes` to stay unique.
    pub fn disjoint_union(&self, other: &FiniteGroupoid, prefixes: (&str, &str)) -> Self {
        let (no, na) = (self.object_count(), self.arrow_count());
        let objects = self
            .objects
            .iter()
            .map(|o| format!("{}{o}", prefixes.0))
            .chain(other.objects.iter().map(|o| format!("{}{o}", prefixes.1)))
            .collect();
        let arrows = (0..na)
            .map(|a| (format!("{}{}", prefixes.0, self.arrows[a]), self.src[a], self.tgt[a]))
            .chain((0..other.arrow_count()).map(|a| {
                (format!("{}{}", prefixes.1, other.arrows[a]), other.src[a] + no, other.tgt[a] + no)
            }))
            .collect();
        let unit = self.unit.iter().copied().chain(other.unit.iter().map(|u| u + na)).collect();
        let inv = self.inv.iter().copied().chain(other.inv.iter().map(|i| i + na)).collect();
        Self::from_parts(objects, arrows, unit, inv, |g2, g1| {
            if g1 < na {
                self.compose(g2, g1)
            } else {
                other.compose(g2 - na, g1 - na).map(|c| c + na)
            }
        })
        .expect("union of well-formed groupoids")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjectId> {
        0..self.objects.len()
    }

    pub fn arrows(&self) -> std::ops::Range<ArrowId> {
        0..self.arrows.len()
    }

    pub fn object_label(&self, x: ObjectId) -> &str {
        &self.objects[x]
    }

    pub fn arrow_label(&self, a: ArrowId) -> &str {
        &self.arrows[a]
    }

    pub fn object_labels(&self) -> &[String] {
        &self.objects
    }

    pub fn arrow_labels(&self) -> &[String] {
        &self.arrows
    }

    pub fn object(&self, label: &str) -> Result<ObjectId> {
        self.object_index.get(label).copied().ok_or_else(|| Error::UnknownObject(label.to_string()))
    }

    pub fn arrow(&self, label: &str) -> Result<ArrowId> {
        self.arrow_index.get(label).copied().ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    pub fn src(&self, a: ArrowId) -> ObjectId {
        self.src[a]
    }

    pub fn tgt(&self, a: ArrowId) -> ObjectId {
        self.tgt[a]
    }

    pub fn unit(&self, x: ObjectId) -> ArrowId {
        self.unit[x]
    }

    pub fn inv(&self, a: ArrowId) -> ArrowId {
        self.inv[a]
    }

    /// `g2 ∘ g1`, or `None` when `tgt(g1) ≠ src(g2)`.
    pub fn compose(&self, g2: ArrowId, g1: ArrowId) -> Option<ArrowId> {
        (self.src[g2] == self.tgt[g1]).then(|| self.comp[g1][self.out_pos[g2]])
    }

    /// Composite of a path given first-to-last.
    pub fn compose_path(&self, path: &[ArrowId]) -> Option<ArrowId> {
        let (&first, rest) = path.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.compose(g, acc))
    }

    pub fn outgoing(&self, x: ObjectId) -> &[ArrowId] {
        &self.outgoing[x]
    }

    pub fn is_loop(&self, a: ArrowId) -> bool {
        self.src[a] == self.tgt[a]
    }

    /// Every violated axiom. Inverse failures are reported once per arrow.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for x in self.objects() {
            let u = self.unit[x];
            if self.src[u] != x || self.tgt[u] != x {
                violations.push(Violation::UnitEndpoints { object: self.objects[x].clone() });
            }
        }
        for a in self.arrows() {
            let label = || self.arrows[a].clone();
            if self.compose(self.unit[self.tgt[a]], a) != Some(a) {
                violations.push(Violation::LeftUnit { arrow: label() });
            }
            if self.compose(a, self.unit[self.src[a]]) != Some(a) {
                violations.push(Violation::RightUnit { arrow: label() });
            }
            let i = self.inv[a];
            let left_ok = self.compose(i, a) == Some(self.unit[self.src[a]]);
            let right_ok = self.compose(a, i) == Some(self.unit[self.tgt[a]]);
            if !left_ok || !right_ok {
                violations.push(Violation::Inverse { arrow: label() });
            }
        }
        for g1 in self.arrows() {
            for &g2 in &self.outgoing[self.tgt[g1]] {
                let c = self.comp[g1][self.out_pos[g2]];
                if self.src[c] != self.src[g1] || self.tgt[c] != self.tgt[g2] {
                    violations.push(Violation::CompositeEndpoints {
                        second: self.arrows[g2].clone(),
                        first: self.arrows[g1].clone(),
                    });
                }
            }
        }
        for g1 in self.arrows() {
            for &g2 in &self.outgoing[self.tgt[g1]] {
                let c21 = self.comp[g1][self.out_pos[g2]];
                for &g3 in &self.outgoing[self.tgt[g2]] {
                    let c32 = self.comp[g2][self.out_pos[g3]];
                    let lhs = self.compose(c32, g1);
                    let rhs = self.compose(g3, c21);
                    if lhs.is_none() || lhs != rhs {
                        violations.push(Violation::Associativity {
                            third: self.arrows[g3].clone(),
                            second: self.arrows[g2].clone(),
                            first: self.arrows[g1].clone(),
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Arrows from `x` to `y`, ascending.
    pub fn hom_set(&self, x: ObjectId, y: ObjectId) -> Vec<ArrowId> {
        self.outgoing[x].iter().copied().filter(|&a| self.tgt[a] == y).collect()
    }

    pub fn isotropy(&self, x: ObjectId) -> IsotropyGroup {
        let elements = self.hom_set(x, x);
        let pos: HashMap<ArrowId, usize> = elements.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let k = elements.len();
        let mut table = vec![0; k * k];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                table[i * k + j] = self.compose(a, b).and_then(|c| pos.get(&c).copied()).unwrap_or(0);
            }
        }
        let labels = elements.iter().map(|&a| self.arrows[a].clone()).collect();
        let identity = pos.get(&self.unit[x]).copied().unwrap_or(0);
        IsotropyGroup { base: x, elements, group: FiniteGroup::from_raw(labels, table, identity) }
    }

    /// Isotropy of the object with the given label.
    pub fn isotropy_of(&self, label: &str) -> Result<IsotropyGroup> {
        Ok(self.isotropy(self.object(label)?))
    }

    /// Objects reachable from `x`, ascending.
    pub fn orbit(&self, x: ObjectId) -> Vec<ObjectId> {
        let mut seen = vec![false; self.object_count()];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for &a in &self.outgoing[y] {
                let z = self.tgt[a];
                if !seen[z] {
                    seen[z] = true;
                    queue.push_back(z);
                }
            }
        }
        (0..self.object_count()).filter(|&i| seen[i]).collect()
    }

    /// All orbits, each ascending, ordered by their least object.
    pub fn orbits(&self) -> Vec<Vec<ObjectId>> {
        let mut done = vec![false; self.object_count()];
        let mut out = Vec::new();
        for x in self.objects() {
            if !done[x] {
                let orbit = self.orbit(x);
                for &y in &orbit {
                    done[y] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// For each object, the index of its orbit in [`orbits`](Self::orbits).
    pub fn orbit_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.object_count()];
        for (i, orbit) in self.orbits().iter().enumerate() {
            for &x in orbit {
                idx[x] = i;
            }
        }
        idx
    }

    /// The coarse space: orbits tagged with the isotropy of their least object.
    pub fn orbit_space(&self) -> Vec<OrbitClass> {
        self.orbits()
            .into_iter()
            .map(|objects| {
                let isotropy = self.isotropy(objects[0]).group;
                OrbitClass { objects, isotropy }
            })
            .collect()
    }

    /// Whether the groupoid has a single orbit (the empty groupoid does not).
    pub fn is_connected(&self) -> bool {
        self.object_count() > 0 && self.orbit(0).len() == self.object_count()
    }

    /// The full subgroupoid on `objects` (kept in the given order), and the
    /// ambient id of each of its arrows.
    pub fn full_subgroupoid(&self, objects: &[ObjectId]) -> (FiniteGroupoid, Vec<ArrowId>) {
        let mut local = vec![usize::MAX; self.object_count()];
        for (i, &x) in objects.iter().enumerate() {
            local[x] = i;
        }
        let mut ambient = Vec::new();
        let mut arrow_local = HashMap::new();
        for &x in objects {
            for &a in &self.outgoing[x] {
                if local[self.tgt[a]] != usize::MAX {
                    arrow_local.insert(a, ambient.len());
                    ambient.push(a);
                }
            }
        }
        let arrows = ambient.iter().map(|&a| (self.arrows[a].clone(), local[self.src[a]], local[self.tgt[a]])).collect();
        let unit = objects.iter().map(|&x| arrow_local[&self.unit[x]]).collect();
        let inv = ambient.iter().map(|&a| arrow_local[&self.inv[a]]).collect();
        let labels = objects.iter().map(|&x| self.objects[x].clone()).collect();
        let sub = Self::from_parts(labels, arrows, unit, inv, |g2, g1| {
            self.compose(ambient[g2], ambient[g1]).and_then(|c| arrow_local.get(&c).copied())
        })
        .expect("full subgroupoid of a valid groupoid");
        (sub, ambient)
    }

    /// The wide subgroupoid generated by `generators`, and the ambient id of
    /// each of its arrows.
    pub fn generated_subgroupoid(&self, generators: &[ArrowId]) -> (FiniteGroupoid, Vec<ArrowId>) {
        let mut member = vec![false; self.arrow_count()];
        let mut ambient: Vec<ArrowId> = Vec::new();
        let push = |a: ArrowId, member: &mut Vec<bool>, ambient: &mut Vec<ArrowId>| {
            if !std::mem::replace(&mut member[a], true) {
                ambient.push(a);
            }
        };
        for &u in &self.unit {
            push(u, &mut member, &mut ambient);
        }
        for &g in generators {
            push(g, &mut member, &mut ambient);
            push(self.inv[g], &mut member, &mut ambient);
        }
        let mut i = 0;
        while i < ambient.len() {
            let a = ambient[i];
            let mut j = 0;
            while j < ambient.len() {
                let b = ambient[j];
                for c in [self.compose(b, a), self.compose(a, b)].into_iter().flatten() {
                    push(c, &mut member, &mut ambient);
                }
                j += 1;
            }
            i += 1;
        }
        ambient.sort_unstable();
        let local: HashMap<ArrowId, usize> = ambient.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let arrows = ambient.iter().map(|&a| (self.arrows[a].clone(), self.src[a], self.tgt[a])).collect();
        let unit = self.unit.iter().map(|u| local[u]).collect();
        let inv = ambient.iter().map(|&a| local[&self.inv[a]]).collect();
        let sub = Self::from_parts(self.objects.clone(), arrows, unit, inv, |g2, g1| {
            self.compose(ambient[g2], ambient[g1]).and_then(|c| local.get(&c).copied())
        })
        .expect("closed under composition");
        (sub, ambient)
    }

    /// Whether every isotropy group is abelian.
    pub fn is_abelian(&self) -> bool {
        self.objects().all(|x| {
            let loops = self.hom_set(x, x);
            loops.iter().all(|&a| loops.iter().all(|&b| self.compose(a, b) == self.compose(b, a)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bz3() -> FiniteGroupoid {
        FiniteGroupoid::from_group(&FiniteGroup::cyclic(3))
    }

    #[test]
    fn terminal_groupoid_is_valid() {
        let g = FiniteGroupoid::discrete(&["pt"]);
        assert!(g.validate().is_valid());
        assert_eq!(g.arrow_count(), 1);
    }

    #[test]
    fn group_as_groupoid() {
        let g = bz3();
        assert!(g.validate().is_valid());
        assert_eq!(g.isotropy(0).order(), 3);
        assert_eq!(g.hom_set(0, 0).len(), 3);
    }

    #[test]
    fn corrupted_inverse_reports_only_the_inverse_law() {
        let good = bz3();
        let objects = good.object_labels().to_vec();
        let arrows = good.arrows().map(|a| (good.arrow_label(a).to_string(), 0, 0)).collect();
        let mut inv: Vec<usize> = good.arrows().map(|a| good.inv(a)).collect();
        inv[1] = 1;
        let bad = FiniteGroupoid::from_parts(objects, arrows, vec![0], inv, |g2, g1| good.compose(g2, g1)).unwrap();
        assert_eq!(bad.validate().violations, vec![Violation::Inverse { arrow: "1".into() }]);
    }

    #[test]
    fn pair_groupoid() {
        let g = FiniteGroupoid::pair(&["x", "y"]);
        assert!(g.validate().is_valid());
        assert_eq!(g.hom_set(0, 1).len(), 1);
        assert_eq!(g.isotropy(0).order(), 1);
        assert_eq!(g.orbit(0), vec![0, 1]);
    }

    #[test]
    fn disjoint_union_has_no_cross_arrows() {
        let b = FiniteGroupoid::from_group(&FiniteGroup::cyclic(2));
        let u = b.disjoint_union(&b, ("l.", "r."));
        assert!(u.validate().is_valid());
        assert!(u.hom_set(0, 1).is_empty());
        assert_eq!(u.orbits().len(), 2);
    }

    #[test]
    fn empty_groupoid() {
        let g = FiniteGroupoid::empty();
        assert!(g.validate().is_valid());
        assert!(g.orbit_space().is_empty());
        assert!(!g.is_connected());
    }

    #[test]
    fn from_labels_rejects_dangling_target() {
        let err = FiniteGroupoid::from_labels(
            vec!["x".into()],
            vec![("1".into(), "x".into(), "y".into())],
            &[("x".into(), "1".into())],
            &[("1".into(), "1".into())],
            &[("1".into(), "1".into(), "1".into())],
        )
        .unwrap_err();
        assert_eq!(err, Error::UnknownObject("y".into()));
    }

    #[test]
    fn from_labels_rejects_missing_composite() {
        let err = FiniteGroupoid::from_labels(
            vec!["x".into()],
            vec![("1".into(), "x".into(), "x".into())],
            &[("x".into(), "1".into())],
            &[("1".into(), "1".into())],
            &[],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn full_subgroupoid_of_pair() {
        let g = FiniteGroupoid::pair(&["x", "y", "z"]);
        let (sub, ambient) = g.full_subgroupoid(&[2, 0]);
        assert!(sub.validate().is_valid());
        assert_eq!(sub.arrow_count(), 4);
        assert_eq!(sub.object_label(0), "z");
        assert_eq!(ambient.len(), 4);
    }
}
