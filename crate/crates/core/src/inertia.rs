//! Loop spaces and inertia groupoids.
//!
//! An inertia object is a loop `a: x → x` of the base and keeps the loop's
//! label, so sectors read as `(g,x)` when the base is a translation groupoid.
//! An inertia arrow `(h,a)` goes from `a` to `h a h⁻¹`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::embedding::{is_orbifold_embedding, EmbeddingVerdict};
use crate::error::{Error, Result};
use crate::groupoid::{ArrowId, FiniteGroupoid, ObjectId};
use crate::morphism::{same_groupoid, GroupoidMorphism};

/// The loops of a groupoid, each anchored at its base object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSpace {
    pub loops: Vec<ArrowId>,
    pub anchor: Vec<ObjectId>,
}

pub fn loop_space(g: &FiniteGroupoid) -> LoopSpace {
    let loops: Vec<ArrowId> = g.arrows().filter(|&a| g.is_loop(a)).collect();
    let anchor = loops.iter().map(|&a| g.src(a)).collect();
    LoopSpace { loops, anchor }
}

#[derive(Debug, Clone)]
pub struct InertiaGroupoid {
    pub base: Arc<FiniteGroupoid>,
    /// Base arrow of each inertia object.
    pub loops: Vec<ArrowId>,
    /// `(h, loop)` for each inertia arrow, with `loop` an inertia object.
    pub pairs: Vec<(ArrowId, ObjectId)>,
    pub groupoid: Arc<FiniteGroupoid>,
    object_of: HashMap<ArrowId, ObjectId>,
    arrow_of: HashMap<(ArrowId, ObjectId), ArrowId>,
}

impl InertiaGroupoid {
    /// Inertia object of a base loop.
    pub fn object_of(&self, loop_arrow: ArrowId) -> Option<ObjectId> {
        self.object_of.get(&loop_arrow).copied()
    }

    /// Inertia arrow `(h, a)` with `a` an inertia object based at `src h`.
    pub fn arrow_of(&self, h: ArrowId, a: ObjectId) -> Option<ArrowId> {
        self.arrow_of.get(&(h, a)).copied()
    }
}

pub fn inertia(base: &Arc<FiniteGroupoid>) -> InertiaGroupoid {
    let g = &**base;
    let LoopSpace { loops, anchor } = loop_space(g);
    let object_of: HashMap<ArrowId, ObjectId> = loops.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let mut at: Vec<Vec<ObjectId>> = vec![Vec::new(); g.object_count()];
    for (i, &x) in anchor.iter().enumerate() {
        at[x].push(i);
    }
    let conj = |h: ArrowId, a: ArrowId| {
        let ha = g.compose(h, a).expect("h starts at the loop's base");
        g.compose(ha, g.inv(h)).expect("composable")
    };

    let mut pairs = Vec::new();
    let mut arrow_of = HashMap::new();
    for h in g.arrows() {
        for &i in &at[g.src(h)] {
            arrow_of.insert((h, i), pairs.len());
            pairs.push((h, i));
        }
    }
    let arrows: Vec<(String, ObjectId, ObjectId)> = pairs
        .iter()
        .map(|&(h, i)| {
            let target = object_of[&conj(h, loops[i])];
            (format!("({},{})", g.arrow_label(h), g.arrow_label(loops[i])), i, target)
        })
        .collect();
    let unit = (0..loops.len()).map(|i| arrow_of[&(g.unit(anchor[i]), i)]).collect();
    let inv = pairs
        .iter()
        .map(|&(h, i)| arrow_of[&(g.inv(h), object_of[&conj(h, loops[i])])])
        .collect();
    let objects = loops.iter().map(|&a| g.arrow_label(a).to_string()).collect();
    let groupoid = FiniteGroupoid::from_parts(objects, arrows, unit, inv, |second, first| {
        let (h2, _) = pairs[second];
        let (h1, i1) = pairs[first];
        arrow_of.get(&(g.compose(h2, h1)?, i1)).copied()
    })
    .expect("inertia tables are well formed");
    InertiaGroupoid { base: base.clone(), loops, pairs, groupoid: Arc::new(groupoid), object_of, arrow_of }
}

/// `Λφ` between the inertia groupoids of the domain and codomain of `f`.
pub fn induced_inertia_morphism(
    f: &GroupoidMorphism,
    source: &InertiaGroupoid,
    target: &InertiaGroupoid,
) -> Result<GroupoidMorphism> {
    if !same_groupoid(&source.base, &f.domain) {
        return Err(Error::Mismatch("source inertia is not over the domain".into()));
    }
    if !same_groupoid(&target.base, &f.codomain) {
        return Err(Error::Mismatch("target inertia is not over the codomain".into()));
    }
    if let Some(v) = f.validate_functor().violations.first() {
        return Err(Error::Precondition(format!("not a functor: {v}")));
    }
    let phi0 = source.loops.iter().map(|&a| target.object_of[&f.phi1[a]]).collect::<Vec<_>>();
    let phi1 = source.pairs.iter().map(|&(h, i)| target.arrow_of[&(f.phi1[h], phi0[i])]).collect();
    GroupoidMorphism::new(source.groupoid.clone(), target.groupoid.clone(), phi0, phi1)
}

/// Every isotropy group is abelian.
pub fn is_abelian(g: &FiniteGroupoid) -> bool {
    g.is_abelian()
}

#[derive(Debug, Clone)]
pub struct InertiaEmbeddingReport {
    pub source: InertiaGroupoid,
    pub target: InertiaGroupoid,
    pub morphism: GroupoidMorphism,
    pub verdict: EmbeddingVerdict,
    /// Two inertia objects over the same loop with no arrow between them.
    pub unconnected: Option<(String, String)>,
    pub codomain_abelian: bool,
    /// Only the isotropy groups at objects in the image are abelian.
    pub image_isotropy_abelian: bool,
}

/// Runs the embedding check on `Λf` for an embedding `f`.
pub fn check_inertia_embedding(f: &GroupoidMorphism) -> Result<InertiaEmbeddingReport> {
    if !is_orbifold_embedding(f)?.verdict {
        return Err(Error::Precondition("the functor is not an embedding".into()));
    }
    let source = inertia(&f.domain);
    let target = inertia(&f.codomain);
    let morphism = induced_inertia_morphism(f, &source, &target)?;
    let verdict = is_orbifold_embedding(&morphism)?;

    let d = &*source.groupoid;
    let orbit = d.orbit_index();
    let mut seen_over: HashMap<ObjectId, ObjectId> = HashMap::new();
    let mut unconnected = None;
    for y in d.objects() {
        let x = morphism.phi0[y];
        match seen_over.get(&x) {
            Some(&z) if orbit[z] != orbit[y] => {
                unconnected = Some((d.object_label(z).to_string(), d.object_label(y).to_string()));
                break;
            }
            Some(_) => {}
            None => {
                seen_over.insert(x, y);
            }
        }
    }

    let c = &*f.codomain;
    let codomain_abelian = c.is_abelian();
    let mut image: Vec<ObjectId> = f.phi0.clone();
    image.sort_unstable();
    image.dedup();
    let image_isotropy_abelian = image.iter().all(|&x| c.isotropy(x).group.is_abelian());
    Ok(InertiaEmbeddingReport {
        source,
        target,
        morphism,
        verdict,
        unconnected,
        codomain_abelian,
        image_isotropy_abelian,
    })
}
