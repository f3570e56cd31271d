//! Bibundles between finite groupoids.
//!
//! A bibundle from `𝓖` (the domain) to `𝓗` (the codomain) is a finite set
//! `R` with anchors `rho: R → G0` and `r_anchor: R → H0`, a left `𝓗`-action
//! along `r_anchor` and a right `𝓖`-action along `rho`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::label_index;
use crate::groupoid::{ArrowId, FiniteGroupoid, ObjectId};
use crate::morphism::{are_morita_equivalent, same_groupoid, GroupoidMorphism};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bibundle {
    /// Acts on the right.
    pub domain: Arc<FiniteGroupoid>,
    /// Acts on the left.
    pub codomain: Arc<FiniteGroupoid>,
    pub total: Vec<String>,
    pub rho: Vec<ObjectId>,
    pub r_anchor: Vec<ObjectId>,
    /// `(h, x) ↦ h·x`, for `src(h) = r_anchor(x)`.
    pub left: HashMap<(ArrowId, usize), usize>,
    /// `(x, g) ↦ x·g`, for `rho(x) = tgt(g)`.
    pub right: HashMap<(usize, ArrowId), usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BibundleViolation {
    MissingLeft { arrow: String, element: String },
    MissingRight { element: String, arrow: String },
    SpuriousLeft { arrow: String, element: String },
    SpuriousRight { element: String, arrow: String },
    LeftAnchor { arrow: String, element: String },
    LeftInvariance { arrow: String, element: String },
    RightAnchor { element: String, arrow: String },
    RightInvariance { element: String, arrow: String },
    LeftUnit { element: String },
    RightUnit { element: String },
    LeftAssociativity { second: String, first: String, element: String },
    RightAssociativity { element: String, first: String, second: String },
    Commutation { arrow: String, element: String, domain_arrow: String },
}

impl fmt::Display for BibundleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BibundleViolation::*;
        match self {
            MissingLeft { arrow, element } => write!(f, "{arrow}·{element} is undefined"),
            MissingRight { element, arrow } => write!(f, "{element}·{arrow} is undefined"),
            SpuriousLeft { arrow, element } => write!(f, "{arrow}·{element} is given but not composable"),
            SpuriousRight { element, arrow } => write!(f, "{element}·{arrow} is given but not composable"),
            LeftAnchor { arrow, element } => write!(f, "anchor of {arrow}·{element} is not the target of {arrow}"),
            LeftInvariance { arrow, element } => write!(f, "left action by {arrow} moves {element} off its fiber"),
            RightAnchor { element, arrow } => write!(f, "anchor of {element}·{arrow} is not the source of {arrow}"),
            RightInvariance { element, arrow } => write!(f, "right action by {arrow} moves {element} off its fiber"),
            LeftUnit { element } => write!(f, "left unit does not fix {element}"),
            RightUnit { element } => write!(f, "right unit does not fix {element}"),
            LeftAssociativity { second, first, element } => {
                write!(f, "({second}∘{first})·{element} ≠ {second}·({first}·{element})")
            }
            RightAssociativity { element, first, second } => {
                write!(f, "{element}·({first}∘{second}) ≠ ({element}·{first})·{second}")
            }
            Commutation { arrow, element, domain_arrow } => {
                write!(f, "{arrow}·({element}·{domain_arrow}) ≠ ({arrow}·{element})·{domain_arrow}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BibundleReport {
    pub violations: Vec<BibundleViolation>,
}

impl BibundleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Bibundle {
    /// Checks that anchors and action entries are in range and labels unique.
    pub fn new(
        domain: Arc<FiniteGroupoid>,
        codomain: Arc<FiniteGroupoid>,
        total: Vec<String>,
        rho: Vec<ObjectId>,
        r_anchor: Vec<ObjectId>,
        left: HashMap<(ArrowId, usize), usize>,
        right: HashMap<(usize, ArrowId), usize>,
    ) -> Result<Self> {
        let n = total.len();
        label_index(&total)?;
        if rho.len() != n || r_anchor.len() != n {
            return Err(Error::Malformed("anchor maps must cover the total set".into()));
        }
        if rho.iter().any(|&x| x >= domain.object_count()) || r_anchor.iter().any(|&y| y >= codomain.object_count()) {
            return Err(Error::UnknownObject("anchor image out of range".into()));
        }
        let left_ok = left.iter().all(|(&(h, x), &y)| h < codomain.arrow_count() && x < n && y < n);
        let right_ok = right.iter().all(|(&(x, g), &y)| g < domain.arrow_count() && x < n && y < n);
        if !left_ok || !right_ok {
            return Err(Error::Malformed("action entry out of range".into()));
        }
        Ok(Self { domain, codomain, total, rho, r_anchor, left, right })
    }

    pub fn len(&self) -> usize {
        self.total.len()
    }

    pub fn is_empty(&self) -> bool {
        self.total.is_empty()
    }

    pub fn left_act(&self, h: ArrowId, x: usize) -> Option<usize> {
        self.left.get(&(h, x)).copied()
    }

    pub fn right_act(&self, x: usize, g: ArrowId) -> Option<usize> {
        self.right.get(&(x, g)).copied()
    }

    pub fn validate(&self) -> BibundleReport {
        use BibundleViolation::*;
        let (gd, hd) = (&*self.domain, &*self.codomain);
        let el = |x: usize| self.total[x].clone();
        let ha = |h: ArrowId| hd.arrow_label(h).to_string();
        let ga = |g: ArrowId| gd.arrow_label(g).to_string();
        let mut v = Vec::new();

        for (h, x) in sorted_keys(&self.left) {
            if hd.src(h) != self.r_anchor[x] {
                v.push(SpuriousLeft { arrow: ha(h), element: el(x) });
            }
        }
        for (x, g) in sorted_keys(&self.right) {
            if gd.tgt(g) != self.rho[x] {
                v.push(SpuriousRight { element: el(x), arrow: ga(g) });
            }
        }
        for x in 0..self.len() {
            for &h in hd.outgoing(self.r_anchor[x]) {
                match self.left_act(h, x) {
                    None => v.push(MissingLeft { arrow: ha(h), element: el(x) }),
                    Some(y) => {
                        if self.r_anchor[y] != hd.tgt(h) {
                            v.push(LeftAnchor { arrow: ha(h), element: el(x) });
                        }
                        if self.rho[y] != self.rho[x] {
                            v.push(LeftInvariance { arrow: ha(h), element: el(x) });
                        }
                    }
                }
            }
            for g in gd.arrows().filter(|&g| gd.tgt(g) == self.rho[x]) {
                match self.right_act(x, g) {
                    None => v.push(MissingRight { element: el(x), arrow: ga(g) }),
                    Some(y) => {
                        if self.rho[y] != gd.src(g) {
                            v.push(RightAnchor { element: el(x), arrow: ga(g) });
                        }
                        if self.r_anchor[y] != self.r_anchor[x] {
                            v.push(RightInvariance { element: el(x), arrow: ga(g) });
                        }
                    }
                }
            }
        }
        if !v.is_empty() {
            // the remaining laws presuppose well-typed actions
            return BibundleReport { violations: v };
        }
        for x in 0..self.len() {
            if self.left_act(hd.unit(self.r_anchor[x]), x) != Some(x) {
                v.push(LeftUnit { element: el(x) });
            }
            if self.right_act(x, gd.unit(self.rho[x])) != Some(x) {
                v.push(RightUnit { element: el(x) });
            }
            for &h1 in hd.outgoing(self.r_anchor[x]) {
                let y = self.left[&(h1, x)];
                for &h2 in hd.outgoing(hd.tgt(h1)) {
                    let lhs = hd.compose(h2, h1).and_then(|c| self.left_act(c, x));
                    if lhs != self.left_act(h2, y) {
                        v.push(LeftAssociativity { second: ha(h2), first: ha(h1), element: el(x) });
                    }
                }
            }
            for g1 in gd.arrows().filter(|&g| gd.tgt(g) == self.rho[x]) {
                let y = self.right[&(x, g1)];
                for g2 in gd.arrows().filter(|&g| gd.tgt(g) == gd.src(g1)) {
                    let lhs = gd.compose(g1, g2).and_then(|c| self.right_act(x, c));
                    if lhs != self.right_act(y, g2) {
                        v.push(RightAssociativity { element: el(x), first: ga(g1), second: ga(g2) });
                    }
                }
                for &h in hd.outgoing(self.r_anchor[x]) {
                    let lhs = self.left_act(h, y);
                    let rhs = self.left_act(h, x).and_then(|hx| self.right_act(hx, g1));
                    if lhs != rhs {
                        v.push(Commutation { arrow: ha(h), element: el(x), domain_arrow: ga(g1) });
                    }
                }
            }
        }
        BibundleReport { violations: v }
    }

    /// `rho` is onto and `(x, h) ↦ (x, h·x)` is a bijection onto pairs with
    /// equal `rho`.
    pub fn is_left_principal(&self) -> bool {
        let hd = &*self.codomain;
        let mut hit = vec![false; self.domain.object_count()];
        for &g in &self.rho {
            hit[g] = true;
        }
        if hit.contains(&false) {
            return false;
        }
        let fibers = fibers(&self.rho, self.domain.object_count());
        (0..self.len()).all(|x| {
            let mut images: Vec<usize> = hd.outgoing(self.r_anchor[x]).iter().filter_map(|&h| self.left_act(h, x)).collect();
            let count = hd.outgoing(self.r_anchor[x]).len();
            images.sort_unstable();
            let distinct = images.windows(2).all(|w| w[0] != w[1]);
            distinct && images.len() == count && images == fibers[self.rho[x]]
        })
    }

    /// The mirror of [`is_left_principal`](Self::is_left_principal) for the
    /// right action over `r_anchor`.
    pub fn is_right_principal(&self) -> bool {
        let gd = &*self.domain;
        let mut hit = vec![false; self.codomain.object_count()];
        for &h in &self.r_anchor {
            hit[h] = true;
        }
        if hit.contains(&false) {
            return false;
        }
        let fibers = fibers(&self.r_anchor, self.codomain.object_count());
        let mut incoming: Vec<Vec<ArrowId>> = vec![Vec::new(); gd.object_count()];
        for g in gd.arrows() {
            incoming[gd.tgt(g)].push(g);
        }
        (0..self.len()).all(|x| {
            let arrows = &incoming[self.rho[x]];
            let mut images: Vec<usize> = arrows.iter().filter_map(|&g| self.right_act(x, g)).collect();
            images.sort_unstable();
            let distinct = images.windows(2).all(|w| w[0] != w[1]);
            distinct && images.len() == arrows.len() && images == fibers[self.r_anchor[x]]
        })
    }

    pub fn is_morita(&self) -> bool {
        self.is_left_principal() && self.is_right_principal()
    }

    /// The same bibundle read from `𝓗` to `𝓖`: `g·x := x·g⁻¹`, `x·h := h⁻¹·x`.
    pub fn inverse(&self) -> Bibundle {
        let (gd, hd) = (&*self.domain, &*self.codomain);
        let left = self.right.iter().map(|(&(x, g), &y)| ((gd.inv(g), x), y)).collect();
        let right = self.left.iter().map(|(&(h, x), &y)| ((x, hd.inv(h)), y)).collect();
        Bibundle {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            total: self.total.clone(),
            rho: self.r_anchor.clone(),
            r_anchor: self.rho.clone(),
            left,
            right,
        }
    }
}

fn sorted_keys<K: Ord + Copy, V>(m: &HashMap<K, V>) -> Vec<K> {
    let mut keys: Vec<K> = m.keys().copied().collect();
    keys.sort_unstable();
    keys
}

fn fibers(anchor: &[usize], base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); base];
    for (x, &b) in anchor.iter().enumerate() {
        out[b].push(x);
    }
    out
}

/// `R_f = {(h, x) : src(h) = f0(x)}` with `rho = x` and `r_anchor = tgt(h)`.
/// The codomain acts by post-composition, the domain by pre-composition
/// through `f1`.
pub fn from_functor(f: &GroupoidMorphism) -> Bibundle {
    let (gd, hd) = (&*f.domain, &*f.codomain);
    let mut pairs = Vec::new();
    for x in gd.objects() {
        for &h in hd.outgoing(f.phi0[x]) {
            pairs.push((h, x));
        }
    }
    let index: HashMap<(ArrowId, ObjectId), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let total = pairs.iter().map(|&(h, x)| format!("({},{})", hd.arrow_label(h), gd.object_label(x))).collect();
    let mut left = HashMap::new();
    let mut right = HashMap::new();
    for (i, &(h, x)) in pairs.iter().enumerate() {
        for &h2 in hd.outgoing(hd.tgt(h)) {
            let c = hd.compose(h2, h).expect("composable");
            left.insert((h2, i), index[&(c, x)]);
        }
        for g in gd.arrows().filter(|&g| gd.tgt(g) == x) {
            let c = hd.compose(h, f.phi1[g]).expect("functor respects endpoints");
            right.insert((i, g), index[&(c, gd.src(g))]);
        }
    }
    Bibundle {
        domain: f.domain.clone(),
        codomain: f.codomain.clone(),
        total,
        rho: pairs.iter().map(|p| p.1).collect(),
        r_anchor: pairs.iter().map(|&(h, _)| hd.tgt(h)).collect(),
        left,
        right,
    }
}

/// The alternative convention `{(x, h) : tgt(h) = f0(x)}`, a bibundle from
/// the codomain of `f` to its domain. The domain acts on the left through
/// `f1`, the codomain on the right by pre-composition.
pub fn from_functor_ps(f: &GroupoidMorphism) -> Bibundle {
    let (gd, hd) = (&*f.domain, &*f.codomain);
    let mut pairs = Vec::new();
    for x in gd.objects() {
        for h in hd.arrows().filter(|&h| hd.tgt(h) == f.phi0[x]) {
            pairs.push((x, h));
        }
    }
    let index: HashMap<(ObjectId, ArrowId), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let total = pairs.iter().map(|&(x, h)| format!("({},{})", gd.object_label(x), hd.arrow_label(h))).collect();
    let mut left = HashMap::new();
    let mut right = HashMap::new();
    for (i, &(x, h)) in pairs.iter().enumerate() {
        for &g in gd.outgoing(x) {
            let c = hd.compose(f.phi1[g], h).expect("functor respects endpoints");
            left.insert((g, i), index[&(gd.tgt(g), c)]);
        }
        for h2 in hd.arrows().filter(|&h2| hd.tgt(h2) == hd.src(h)) {
            let c = hd.compose(h, h2).expect("composable");
            right.insert((i, h2), index[&(x, c)]);
        }
    }
    Bibundle {
        domain: f.codomain.clone(),
        codomain: f.domain.clone(),
        total,
        rho: pairs.iter().map(|&(_, h)| hd.src(h)).collect(),
        r_anchor: pairs.iter().map(|p| p.0).collect(),
        left,
        right,
    }
}

/// `Q ∘ R = (Q ×_{H0} R) / 𝓗` for `R: 𝓖 → 𝓗` and `Q: 𝓗 → 𝓚`, where `𝓗`
/// acts by `h·(q, r) = (q·h, h⁻¹·r)`. Classes are named `[q,r]` after their
/// least pair.
pub fn compose(q: &Bibundle, r: &Bibundle) -> Result<Bibundle> {
    if !same_groupoid(&q.domain, &r.codomain) {
        return Err(Error::Mismatch("middle groupoids differ".into()));
    }
    if !r.is_left_principal() {
        return Err(Error::Precondition("the first bibundle is not left principal".into()));
    }
    let hd = &*r.codomain;
    let pairs: Vec<(usize, usize)> = (0..q.len())
        .flat_map(|qi| (0..r.len()).filter(move |&ri| q.rho[qi] == r.r_anchor[ri]).map(move |ri| (qi, ri)))
        .collect();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    // classes of the diagonal action; pairs are enumerated in order, so the
    // first member seen is the least
    let mut class = vec![usize::MAX; pairs.len()];
    let mut reps = Vec::new();
    for start in 0..pairs.len() {
        if class[start] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(start);
        let (qi, ri) = pairs[start];
        for &h in hd.outgoing(r.r_anchor[ri]) {
            // h: r_anchor(r) → ·, so h⁻¹ ends at rho(q) and acts on q from the right
            let h_inv = hd.inv(h);
            let q2 = q.right_act(qi, h_inv).ok_or_else(|| Error::Precondition("right action undefined".into()))?;
            let r2 = r.left_act(h, ri).ok_or_else(|| Error::Precondition("left action undefined".into()))?;
            let member = *index.get(&(q2, r2)).ok_or_else(|| Error::Internal("orbit leaves the fiber product".into()))?;
            if class[member] != usize::MAX && class[member] != c {
                return Err(Error::Internal("diagonal action orbits overlap".into()));
            }
            class[member] = c;
        }
    }

    let total = reps
        .iter()
        .map(|&p| {
            let (qi, ri) = pairs[p];
            format!("[{},{}]", q.total[qi], r.total[ri])
        })
        .collect();
    let rho = reps.iter().map(|&p| r.rho[pairs[p].1]).collect();
    let r_anchor = reps.iter().map(|&p| q.r_anchor[pairs[p].0]).collect();
    let (kd, gd) = (&*q.codomain, &*r.domain);
    let mut left = HashMap::new();
    let mut right = HashMap::new();
    for (p, &(qi, ri)) in pairs.iter().enumerate() {
        let c = class[p];
        for &k in kd.outgoing(q.r_anchor[qi]) {
            let moved = class[index[&(q.left[&(k, qi)], ri)]];
            if *left.entry((k, c)).or_insert(moved) != moved {
                return Err(Error::Internal("left action is not well defined on classes".into()));
            }
        }
        for g in gd.arrows().filter(|&g| gd.tgt(g) == r.rho[ri]) {
            let moved = class[index[&(qi, r.right[&(ri, g)])]];
            if *right.entry((c, g)).or_insert(moved) != moved {
                return Err(Error::Internal("right action is not well defined on classes".into()));
            }
        }
    }
    Ok(Bibundle { domain: r.domain.clone(), codomain: q.codomain.clone(), total, rho, r_anchor, left, right })
}

/// An anchor-preserving bijection commuting with both actions, as the image
/// of every element of `p`.
pub fn bibundles_isomorphic(p: &Bibundle, q: &Bibundle) -> Result<Option<Vec<usize>>> {
    if !same_groupoid(&p.domain, &q.domain) || !same_groupoid(&p.codomain, &q.codomain) {
        return Err(Error::Mismatch("bibundles have different endpoints".into()));
    }
    if p.len() != q.len() {
        return Ok(None);
    }
    let mut assignment = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    Ok(iso_search(p, q, &mut assignment, &mut used).then_some(assignment))
}

fn iso_search(p: &Bibundle, q: &Bibundle, assignment: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let Some(x) = assignment.iter().position(|&a| a == usize::MAX) else {
        return true;
    };
    for y in 0..q.len() {
        if used[y] || p.rho[x] != q.rho[y] || p.r_anchor[x] != q.r_anchor[y] {
            continue;
        }
        let mut trail = Vec::new();
        if propagate(p, q, x, y, assignment, used, &mut trail) && iso_search(p, q, assignment, used) {
            return true;
        }
        for z in trail {
            used[assignment[z]] = false;
            assignment[z] = usize::MAX;
        }
    }
    false
}

/// Extends `x ↦ y` along both actions; records every new assignment.
fn propagate(
    p: &Bibundle,
    q: &Bibundle,
    x: usize,
    y: usize,
    assignment: &mut [usize],
    used: &mut [bool],
    trail: &mut Vec<usize>,
) -> bool {
    let mut queue = VecDeque::from([(x, y)]);
    while let Some((a, b)) = queue.pop_front() {
        if assignment[a] != usize::MAX {
            if assignment[a] != b {
                return false;
            }
            continue;
        }
        if used[b] || p.rho[a] != q.rho[b] || p.r_anchor[a] != q.r_anchor[b] {
            return false;
        }
        assignment[a] = b;
        used[b] = true;
        trail.push(a);
        for &h in p.codomain.outgoing(p.r_anchor[a]) {
            match (p.left_act(h, a), q.left_act(h, b)) {
                (Some(a2), Some(b2)) => queue.push_back((a2, b2)),
                (None, None) => {}
                _ => return false,
            }
        }
        for g in p.domain.arrows().filter(|&g| p.domain.tgt(g) == p.rho[a]) {
            match (p.right_act(a, g), q.right_act(b, g)) {
                (Some(a2), Some(b2)) => queue.push_back((a2, b2)),
                (None, None) => {}
                _ => return false,
            }
        }
    }
    true
}

/// A strict replacement of a bibundle whose `rho` has a section: the cover
/// is the identity of the domain and `R_functor ≅ b`.
#[derive(Debug, Clone)]
pub struct Strictification {
    pub cover: GroupoidMorphism,
    pub functor: GroupoidMorphism,
    /// The chosen section of `rho`.
    pub section: Vec<usize>,
}

/// With a section `σ` of `rho`, `f0(x) = r_anchor(σx)` and `f1(g)` is the
/// unique `h` with `h·σ(src g) = σ(tgt g)·g`.
pub fn strictify(b: &Bibundle) -> Result<Strictification> {
    let (gd, hd) = (&*b.domain, &*b.codomain);
    let mut section = vec![usize::MAX; gd.object_count()];
    for (x, &g0) in b.rho.iter().enumerate().rev() {
        section[g0] = x;
    }
    if let Some(missing) = section.iter().position(|&s| s == usize::MAX) {
        return Err(Error::NoGlobalSection(format!("nothing lies over {}", gd.object_label(missing))));
    }
    if !b.is_left_principal() {
        return Err(Error::Precondition("bibundle is not left principal".into()));
    }
    let phi0: Vec<ObjectId> = section.iter().map(|&s| b.r_anchor[s]).collect();
    let mut phi1 = Vec::with_capacity(gd.arrow_count());
    for g in gd.arrows() {
        let target = b.right[&(section[gd.tgt(g)], g)];
        let from = section[gd.src(g)];
        let h = hd
            .outgoing(b.r_anchor[from])
            .iter()
            .copied()
            .find(|&h| b.left_act(h, from) == Some(target))
            .ok_or_else(|| Error::Internal("left principality gave no connecting arrow".into()))?;
        phi1.push(h);
    }
    let functor = GroupoidMorphism::new(b.domain.clone(), b.codomain.clone(), phi0, phi1)?;
    Ok(Strictification { cover: GroupoidMorphism::identity(b.domain.clone()), functor, section })
}

/// A biprincipal bibundle from `g1` to `g2`, built from the zigzag witness
/// of [`are_morita_equivalent`].
pub fn morita_bibundle(g1: &Arc<FiniteGroupoid>, g2: &Arc<FiniteGroupoid>) -> Result<Option<Bibundle>> {
    let (ok, zigzag) = are_morita_equivalent(g1, g2);
    let Some(z) = zigzag.filter(|_| ok) else {
        return Ok(None);
    };
    let back = from_functor(&z.left).inverse();
    Ok(Some(compose(&from_functor(&z.right), &back)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn arc(g: FiniteGroupoid) -> Arc<FiniteGroupoid> {
        Arc::new(g)
    }

    fn pt_into_bz2() -> GroupoidMorphism {
        let pt = arc(FiniteGroupoid::discrete(&["p"]));
        let b = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(2)));
        GroupoidMorphism::new(pt, b, vec![0], vec![0]).unwrap()
    }

    fn point_into_pair() -> GroupoidMorphism {
        let pt = arc(FiniteGroupoid::discrete(&["x"]));
        let pair = arc(FiniteGroupoid::pair(&["x", "y"]));
        GroupoidMorphism::new(pt, pair, vec![0], vec![0]).unwrap()
    }

    fn reduction() -> GroupoidMorphism {
        let hom = (0..6).map(|i| i % 3).collect();
        GroupoidMorphism::from_group_hom(&FiniteGroup::cyclic(6), &FiniteGroup::cyclic(3), hom).unwrap()
    }

    #[test]
    fn identity_bundle_is_biprincipal() {
        let b = from_functor(&GroupoidMorphism::identity(arc(FiniteGroupoid::from_group(&FiniteGroup::symmetric(3)))));
        assert!(b.validate().is_valid());
        assert!(b.is_morita());
    }

    #[test]
    fn point_into_bz2_is_left_principal_only() {
        let b = from_functor(&pt_into_bz2());
        assert_eq!(b.len(), 2);
        assert!(b.validate().is_valid());
        assert!(b.is_left_principal());
        assert!(!b.is_right_principal());
    }

    #[test]
    fn equivalence_gives_biprincipal_bundle() {
        let b = from_functor(&point_into_pair());
        assert!(b.validate().is_valid());
        assert!(b.is_morita());
        let r = from_functor(&reduction());
        assert!(r.is_left_principal());
        assert!(!r.is_right_principal());
    }

    #[test]
    fn corrupted_action_breaks_commutation() {
        let mut b = from_functor(&reduction());
        // swap two images of the left action of the generator
        let x = 0;
        let h = 1;
        let y = b.left[&(h, x)];
        let other = (0..b.len()).find(|&z| z != y && z != x).unwrap();
        b.left.insert((h, x), other);
        let report = b.validate();
        assert!(!report.is_valid());
    }

    #[test]
    fn empty_bundle_is_valid() {
        let e = arc(FiniteGroupoid::empty());
        let b = Bibundle::new(e.clone(), e, vec![], vec![], vec![], HashMap::new(), HashMap::new()).unwrap();
        assert!(b.validate().is_valid());
        assert!(b.is_morita());
    }

    #[test]
    fn identity_composes_with_itself() {
        let id = from_functor(&GroupoidMorphism::identity(arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(3)))));
        let c = compose(&id, &id).unwrap();
        assert!(c.validate().is_valid());
        assert!(bibundles_isomorphic(&c, &id).unwrap().is_some());
    }

    #[test]
    fn relabelled_bundle_is_isomorphic() {
        let b = from_functor(&reduction());
        let n = b.len();
        let perm: Vec<usize> = (0..n).map(|i| (i + 5) % n).collect();
        let mut total = vec![String::new(); n];
        let mut rho = vec![0; n];
        let mut r_anchor = vec![0; n];
        for i in 0..n {
            total[perm[i]] = format!("r{i}");
            rho[perm[i]] = b.rho[i];
            r_anchor[perm[i]] = b.r_anchor[i];
        }
        let left = b.left.iter().map(|(&(h, x), &y)| ((h, perm[x]), perm[y])).collect();
        let right = b.right.iter().map(|(&(x, g), &y)| ((perm[x], g), perm[y])).collect();
        let c = Bibundle::new(b.domain.clone(), b.codomain.clone(), total, rho, r_anchor, left, right).unwrap();
        let alpha = bibundles_isomorphic(&b, &c).unwrap().unwrap();
        for (&(h, x), &y) in &b.left {
            assert_eq!(c.left[&(h, alpha[x])], alpha[y]);
        }
        for (&(x, g), &y) in &b.right {
            assert_eq!(c.right[&(alpha[x], g)], alpha[y]);
        }
        assert!((0..n).all(|x| b.rho[x] == c.rho[alpha[x]] && b.r_anchor[x] == c.r_anchor[alpha[x]]));
    }

    #[test]
    fn principal_and_non_principal_are_not_isomorphic() {
        let f = pt_into_bz2();
        let b = from_functor(&f);
        // same total set and anchors, trivial left action
        let left = b.left.keys().map(|&(h, x)| ((h, x), x)).collect();
        let c = Bibundle::new(b.domain.clone(), b.codomain.clone(), b.total.clone(), b.rho.clone(), b.r_anchor.clone(), left, b.right.clone()).unwrap();
        assert!(!c.is_left_principal());
        assert_eq!(bibundles_isomorphic(&b, &c).unwrap(), None);
    }

    #[test]
    fn ps_convention_is_the_inverse() {
        let f = reduction();
        let ps = from_functor_ps(&f);
        assert!(ps.validate().is_valid());
        assert!(bibundles_isomorphic(&ps, &from_functor(&f).inverse()).unwrap().is_some());
    }

    #[test]
    fn strictify_recovers_the_functor() {
        let f = point_into_pair();
        let b = from_functor(&f);
        let s = strictify(&b).unwrap();
        assert!(s.functor.validate_functor().is_valid());
        assert!(bibundles_isomorphic(&from_functor(&s.functor), &b).unwrap().is_some());
    }

    #[test]
    fn strictify_needs_a_section() {
        let pair = arc(FiniteGroupoid::pair(&["x", "y"]));
        let pt = arc(FiniteGroupoid::discrete(&["p"]));
        let lonely = Bibundle::new(
            pair.clone(),
            pt.clone(),
            vec!["r".into()],
            vec![0],
            vec![0],
            HashMap::from([((0, 0), 0)]),
            HashMap::from([((0, 0), 0)]),
        )
        .unwrap();
        assert!(matches!(strictify(&lonely), Err(Error::NoGlobalSection(_))));
    }

    #[test]
    fn morita_bibundle_between_pair_and_point() {
        let pair = arc(FiniteGroupoid::pair(&["x", "y"]));
        let pt = arc(FiniteGroupoid::discrete(&["p"]));
        let b = morita_bibundle(&pair, &pt).unwrap().unwrap();
        assert!(b.validate().is_valid());
        assert!(b.is_morita());
        let z4 = arc(FiniteGroupoid::from_group(&FiniteGroup::cyclic(4)));
        assert!(morita_bibundle(&z4, &pt).unwrap().is_none());
    }
}
