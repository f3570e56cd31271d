//! Finite groups given by explicit multiplication tables.
//!
//! Elements are addressed by dense indices `0..order()`; every element also
//! carries a string label that is unique within the group.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    /// Row-major `order × order` table, `table[a * n + b] = a·b`.
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    index: HashMap<String, usize>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table and checks the group axioms.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NotAGroup("a group needs at least one element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Malformed(format!("multiplication table must be {n}×{n}")));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(bad) = flat.iter().find(|&&v| v >= n) {
            return Err(Error::Malformed(format!("table entry {bad} out of range")));
        }
        let index = label_index(&labels)?;
        let mul = |a: usize, b: usize| flat[a * n + b];

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", labels[a])))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails on ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(Self { labels, table: flat, identity, inverse, index })
    }

    /// Trusted constructor for tables produced by this crate.
    pub(crate) fn from_raw(labels: Vec<String>, table: Vec<usize>, identity: usize) -> Self {
        let n = labels.len();
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == identity {
                    inverse[a] = b;
                    break;
                }
            }
        }
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Self { labels, table, identity, inverse, index }
    }

    /// ℤ/n with elements labelled `"0"`, …, `"n-1"`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        Self::from_raw(labels, table, 0)
    }

    pub fn trivial() -> Self {
        Self::from_raw(vec!["e".into()], vec![0], 0)
    }

    /// The group generated by permutations of `0..degree`, given in one-line
    /// notation. Elements are labelled by their one-line notation on
    /// `1..=degree` and sorted lexicographically, so the identity comes first.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::Malformed(format!("{g:?} is not a permutation of degree {degree}")));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
        elements.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = compose_perm(g, &p);
                if elements.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let elements: Vec<Vec<usize>> = elements.into_iter().collect();
        let position: HashMap<&Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut table = vec![0; n * n];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                table[a * n + b] = position[&compose_perm(pa, pb)];
            }
        }
        let labels = elements
            .iter()
            .map(|p| {
                if degree <= 9 {
                    p.iter().map(|i| char::from(b'1' + *i as u8)).collect()
                } else {
                    let parts: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
                    format!("[{}]", parts.join(" "))
                }
            })
            .collect();
        Ok(Self::from_raw(labels, table, 0))
    }

    /// Symmetric group on `degree` letters.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut swap: Vec<usize> = (0..degree).collect();
            swap.swap(0, 1);
            let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
            gens.push(swap);
            gens.push(cycle);
        }
        Self::from_permutations(degree.max(1), &gens).expect("valid generators")
    }

    /// Direct product; elements are labelled `(g,h)`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let labels = (0..n)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", self.labels[a], other.labels[b]))
            .collect();
        let mut table = vec![0; n * m * n * m];
        for a in 0..n * m {
            for b in 0..n * m {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                table[a * n * m + b] = self.mul(a1, b1) * m + other.mul(a2, b2);
            }
        }
        FiniteGroup::from_raw(labels, table, self.identity * m + other.identity)
    }

    /// Index of `(a, b)` in [`FiniteGroup::product`].
    pub fn product_index(&self, other: &FiniteGroup, a: usize, b: usize) -> usize {
        a * other.order() + b
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// `a·b·a⁻¹`
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted closure of `generators` under multiplication.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// Whether `elements` is a subgroup (contains the identity, closed under
    /// multiplication and inversion).
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &e in elements {
            if e >= self.order() {
                return false;
            }
            member[e] = true;
        }
        member[self.identity]
            && elements.iter().all(|&a| member[self.inv(a)] && elements.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// The subgroup on `elements` as a group in its own right, keeping labels.
    /// Element `i` of the result is `elements[i]` after sorting.
    pub fn subgroup(&self, elements: &[usize]) -> Result<FiniteGroup> {
        if !self.is_subgroup(elements) {
            return Err(Error::NotAGroup("elements are not closed under the group law".into()));
        }
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let k = elems.len();
        let mut table = vec![0; k * k];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * k + j] = pos[&self.mul(a, b)];
            }
        }
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        Ok(FiniteGroup::from_raw(labels, table, pos[&self.identity]))
    }

    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        let member: BTreeSet<usize> = subgroup.iter().copied().collect();
        self.elements().all(|g| subgroup.iter().all(|&h| member.contains(&self.conjugate(g, h))))
    }

    /// Left cosets `gH`, each sorted, ordered by their minimal element.
    /// The minimal element serves as the canonical representative.
    pub fn left_cosets(&self, subgroup: &[usize]) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut cosets = Vec::new();
        for g in self.elements() {
            if assigned[g] {
                continue;
            }
            let mut coset: Vec<usize> = subgroup.iter().map(|&h| self.mul(g, h)).collect();
            coset.sort_unstable();
            coset.dedup();
            for &x in &coset {
                assigned[x] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// For each element, the index of its left coset in [`left_cosets`](Self::left_cosets).
    pub fn coset_indices(&self, cosets: &[Vec<usize>]) -> Vec<usize> {
        let mut which = vec![usize::MAX; self.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                which[x] = i;
            }
        }
        which
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        self.elements().filter(|&g| self.mul(g, a) == self.mul(a, g)).collect()
    }

    /// Conjugacy classes, each sorted, ordered by minimal element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.order()];
        let mut classes = Vec::new();
        for a in self.elements() {
            if done[a] {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|g| self.conjugate(g, a)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                done[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Subgroups generated by at most two elements, plus the whole group.
    /// For groups of order below 16 this is every subgroup.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        for a in self.elements() {
            for b in a..self.order() {
                found.insert(self.generated_subgroup(&[a, b]));
            }
        }
        found.insert(self.elements().collect());
        found.into_iter().collect()
    }

    /// A small generating set, preferring elements of large order.
    pub fn generators(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = self.elements().collect();
        candidates.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in candidates {
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated_subgroup(&gens);
            }
            if span.len() == self.order() {
                break;
            }
        }
        gens
    }

    /// Brute-force isomorphism search by generator images. Returns the image
    /// of every element of `self` in `other`.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != other.order() || self.is_abelian() != other.is_abelian() {
            return None;
        }
        let order_profile = |g: &FiniteGroup| {
            let mut v: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
            v.sort_unstable();
            v
        };
        if order_profile(self) != order_profile(other) {
            return None;
        }
        let gens = self.generators();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let k = self.element_order(g);
                other.elements().filter(|&b| other.element_order(b) == k).collect()
            })
            .collect();
        let mut images = vec![0; gens.len()];
        self.search_generator_images(other, &gens, &candidates, &mut images, 0)
    }

    fn search_generator_images(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        depth: usize,
    ) -> Option<Vec<usize>> {
        if depth == gens.len() {
            return self.extend_homomorphism(other, gens, images).filter(|map| {
                let mut hit = vec![false; other.order()];
                map.iter().all(|&b| !std::mem::replace(&mut hit[b], true))
            });
        }
        for &c in &candidates[depth] {
            images[depth] = c;
            if let Some(found) = self.search_generator_images(other, gens, candidates, images, depth + 1) {
                return Some(found);
            }
        }
        None
    }

    /// Extends generator images to a map on all elements and checks it is a
    /// homomorphism.
    fn extend_homomorphism(&self, other: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order()];
        map[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let fy = other.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        let hom = self
            .elements()
            .all(|a| self.elements().all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])));
        hom.then_some(map)
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

/// One-line composition `(p ∘ q)(i) = p(q(i))`.
fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

pub(crate) fn label_index(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateIdentifier(l.clone()));
        }
    }
    Ok(index)
}
