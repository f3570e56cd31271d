//! The embedding predicate for functors between finite groupoids and the
//! two constructions relating embeddings into translation groupoids with
//! strong equivariant maps.
//!
//! At finite scale the chart around an object `x` is `x` itself with its
//! isotropy group `G_x`, and the slice around a fiber point `y` is `{y}`.
//! The local model over `x` is then `G_x ⋉ (G_x / φ1(H_y))`.

use std::collections::HashMap;
use std::fmt;

use crate::action::{induced_functor, EquivariantMap, GSet, TranslationGroupoid};
use crate::bibundle::Bibundle;
use crate::error::{Error, Result};
use crate::groupoid::{ArrowId, ObjectId};
use crate::morphism::{are_morita_equivalent, fibered_product, same_groupoid, FiberedProduct, GroupoidMorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    EssentialInjectivity,
    FiberTransitivity,
    IsotropyInjectivity,
    LocalModel,
}

impl Condition {
    pub const ALL: [Condition; 4] = [
        Condition::EssentialInjectivity,
        Condition::FiberTransitivity,
        Condition::IsotropyInjectivity,
        Condition::LocalModel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::EssentialInjectivity => "essential-injectivity",
            Condition::FiberTransitivity => "fiber-transitivity",
            Condition::IsotropyInjectivity => "isotropy-injectivity",
            Condition::LocalModel => "local-model",
        }
    }
}

/// Counterexample data, by identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two domain orbits land in one codomain orbit.
    OrbitCollision { first: String, second: String, domain_orbits: usize, image_orbits: usize },
    /// A fiber point not reachable from the basepoint inside the fiber.
    Unreachable { image: String, basepoint: String, unreachable: String },
    /// Two fiber points giving the same coset of `φ1(H_y)` in `G_x`.
    CosetCollision { image: String, first: String, second: String, coset: Vec<String> },
    /// Two arrows with equal endpoints and equal image.
    HomCollision { from: String, to: String, first: String, second: String, image: String },
    /// The fiber is smaller than the coset space.
    CosetCount { image: String, fiber: usize, cosets: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::OrbitCollision { first, second, domain_orbits, image_orbits } => write!(
                f,
                "orbits of {first} and {second} have the same image ({domain_orbits} orbits → {image_orbits} orbits)"
            ),
            Witness::Unreachable { image, basepoint, unreachable } => {
                write!(f, "over {image}: no arrow from {basepoint} to {unreachable}")
            }
            Witness::CosetCollision { image, first, second, coset } => {
                write!(f, "over {image}: {first} and {second} both give the coset {{{}}}", coset.join(", "))
            }
            Witness::HomCollision { from, to, first, second, image } => {
                write!(f, "{first} and {second} in hom({from}, {to}) both map to {image}")
            }
            Witness::CosetCount { image, fiber, cosets } => {
                write!(f, "over {image}: {fiber} fiber point(s) vs {cosets} coset(s)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub condition: Condition,
    pub pass: bool,
    pub witness: Option<Witness>,
}

/// What the local analysis found over one image object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalModelReport {
    pub image: String,
    pub basepoint: String,
    pub fiber: Vec<String>,
    pub isotropy_order: usize,
    /// `φ1(H_y)` as codomain arrow labels.
    pub image_subgroup: Vec<String>,
    pub coset_count: usize,
    pub connected: bool,
    pub coset_injective: bool,
    pub coset_surjective: bool,
    pub isotropy_injective: bool,
    pub subgroup_normal: bool,
    /// Result of the exhaustive isomorphism search against the model
    /// groupoid; `None` where it was not run.
    pub model_isomorphic: Option<bool>,
    /// Cosets hit by each fiber point, in fiber order; `None` if unreachable.
    pub coset_of: Vec<Option<usize>>,
}

impl LocalModelReport {
    pub fn transitive(&self) -> bool {
        self.connected && self.coset_injective
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingVerdict {
    pub verdict: bool,
    pub checks: Vec<CheckResult>,
    pub local_models: Vec<LocalModelReport>,
}

impl EmbeddingVerdict {
    pub fn check(&self, condition: Condition) -> &CheckResult {
        self.checks.iter().find(|c| c.condition == condition).expect("every condition is checked")
    }

    pub fn failed(&self) -> Vec<Condition> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.condition).collect()
    }
}

/// Decides whether `f` is an embedding. All four conditions are evaluated;
/// the local-model condition is only evaluated over objects where the fiber
/// is transitive and `φ1` is injective on isotropy.
pub fn is_orbifold_embedding(f: &GroupoidMorphism) -> Result<EmbeddingVerdict> {
    let report = f.validate_functor();
    if let Some(v) = report.violations.first() {
        return Err(Error::Precondition(format!("not a functor: {v}")));
    }
    let (d, c) = (&*f.domain, &*f.codomain);

    let essential = match f.orbit_collision() {
        None => CheckResult { condition: Condition::EssentialInjectivity, pass: true, witness: None },
        Some((a, b)) => {
            let mut images = f.orbit_map();
            let domain_orbits = images.len();
            images.sort_unstable();
            images.dedup();
            CheckResult {
                condition: Condition::EssentialInjectivity,
                pass: false,
                witness: Some(Witness::OrbitCollision {
                    first: d.object_label(a).into(),
                    second: d.object_label(b).into(),
                    domain_orbits,
                    image_orbits: images.len(),
                }),
            }
        }
    };

    let isotropy = CheckResult {
        condition: Condition::IsotropyInjectivity,
        pass: true,
        witness: None,
    };
    let isotropy = match hom_collision(f) {
        None => isotropy,
        Some(w) => CheckResult { pass: false, witness: Some(w), ..isotropy },
    };

    let mut fibers: Vec<Vec<ObjectId>> = vec![Vec::new(); c.object_count()];
    for y in d.objects() {
        fibers[f.phi0[y]].push(y);
    }
    let mut local_models = Vec::new();
    let mut transitivity = CheckResult { condition: Condition::FiberTransitivity, pass: true, witness: None };
    let mut model = CheckResult { condition: Condition::LocalModel, pass: true, witness: None };
    for x in c.objects().filter(|&x| !fibers[x].is_empty()) {
        let basepoint = *fibers[x].iter().min_by_key(|&&y| d.object_label(y)).expect("non-empty fiber");
        let report = local_model_at(f, x, basepoint)?;
        if transitivity.pass && !report.transitive() {
            transitivity.pass = false;
            transitivity.witness = Some(transitivity_witness(f, &fibers[x], basepoint, &report));
        }
        if model.pass && report.model_isomorphic == Some(false) {
            model.pass = false;
            model.witness = Some(Witness::CosetCount {
                image: report.image.clone(),
                fiber: report.fiber.len(),
                cosets: report.coset_count,
            });
        }
        local_models.push(report);
    }
    let checks = vec![essential, transitivity, isotropy, model];
    let verdict = checks.iter().all(|c| c.pass);
    Ok(EmbeddingVerdict { verdict, checks, local_models })
}

/// Two arrows with the same endpoints and the same image, searching loops
/// first and then hom-sets inside a fiber.
fn hom_collision(f: &GroupoidMorphism) -> Option<Witness> {
    let (d, c) = (&*f.domain, &*f.codomain);
    let mut pairs: Vec<(ObjectId, ObjectId)> = d.objects().map(|y| (y, y)).collect();
    for y in d.objects() {
        for y2 in d.objects().filter(|&y2| y2 != y && f.phi0[y2] == f.phi0[y]) {
            pairs.push((y, y2));
        }
    }
    for (y, y2) in pairs {
        let mut seen: HashMap<ArrowId, ArrowId> = HashMap::new();
        for a in d.hom_set(y, y2) {
            if let Some(&b) = seen.get(&f.phi1[a]) {
                return Some(Witness::HomCollision {
                    from: d.object_label(y).into(),
                    to: d.object_label(y2).into(),
                    first: d.arrow_label(b).into(),
                    second: d.arrow_label(a).into(),
                    image: c.arrow_label(f.phi1[a]).into(),
                });
            }
            seen.insert(f.phi1[a], a);
        }
    }
    None
}

fn transitivity_witness(f: &GroupoidMorphism, fiber: &[ObjectId], basepoint: ObjectId, r: &LocalModelReport) -> Witness {
    let d = &*f.domain;
    if let Some(i) = r.coset_of.iter().position(|c| c.is_none()) {
        return Witness::Unreachable {
            image: r.image.clone(),
            basepoint: d.object_label(basepoint).into(),
            unreachable: d.object_label(fiber[i]).into(),
        };
    }
    let mut first_with: HashMap<usize, usize> = HashMap::new();
    for (i, c) in r.coset_of.iter().enumerate() {
        let c = c.expect("connected fiber");
        if let Some(&j) = first_with.get(&c) {
            let iso = f.codomain.isotropy(f.phi0[basepoint]);
            let k: Vec<usize> =
                r.image_subgroup.iter().map(|l| iso.position(f.codomain.arrow(l).unwrap()).unwrap()).collect();
            let cosets = iso.group.left_cosets(&k);
            let coset = cosets[c].iter().map(|&p| f.codomain.arrow_label(iso.elements[p]).to_string()).collect();
            return Witness::CosetCollision {
                image: r.image.clone(),
                first: d.object_label(fiber[j]).into(),
                second: d.object_label(fiber[i]).into(),
                coset,
            };
        }
        first_with.insert(c, i);
    }
    unreachable!("transitivity failed without a witness")
}

/// The local analysis over image object `x` with basepoint `y ∈ φ0⁻¹(x)`.
pub fn local_model_at(f: &GroupoidMorphism, x: ObjectId, y: ObjectId) -> Result<LocalModelReport> {
    let (d, c) = (&*f.domain, &*f.codomain);
    if f.phi0[y] != x {
        return Err(Error::Precondition(format!(
            "{} does not lie over {}",
            d.object_label(y),
            c.object_label(x)
        )));
    }
    let fiber: Vec<ObjectId> = d.objects().filter(|&z| f.phi0[z] == x).collect();
    let iso = c.isotropy(x);
    let gx = &iso.group;
    let mut k: Vec<usize> = d.hom_set(y, y).iter().map(|&h| iso.position(f.phi1[h]).expect("loop maps to loop")).collect();
    k.sort_unstable();
    k.dedup();
    let cosets = gx.left_cosets(&k);
    let which = gx.coset_indices(&cosets);

    let coset_of: Vec<Option<usize>> = fiber
        .iter()
        .map(|&z| d.hom_set(y, z).first().map(|&h| which[iso.position(f.phi1[h]).expect("fiber arrow maps to loop")]))
        .collect();
    let connected = coset_of.iter().all(Option::is_some);
    let mut hit: Vec<usize> = coset_of.iter().flatten().copied().collect();
    let reached = hit.len();
    hit.sort_unstable();
    hit.dedup();
    let coset_injective = hit.len() == reached;
    let coset_surjective = hit.len() == cosets.len();
    let isotropy_injective = fiber.iter().all(|&z| {
        let loops = d.hom_set(z, z);
        let mut images: Vec<ArrowId> = loops.iter().map(|&h| f.phi1[h]).collect();
        images.sort_unstable();
        images.dedup();
        images.len() == loops.len()
    });

    let model_isomorphic = if connected && coset_injective && isotropy_injective {
        let found = model_isomorphism(f, &fiber, &iso.elements, gx, &cosets, &which).is_some();
        if found != coset_surjective {
            return Err(Error::Internal(format!(
                "over {}: isomorphism search says {found}, coset test says {coset_surjective}",
                c.object_label(x)
            )));
        }
        Some(found)
    } else {
        None
    };

    Ok(LocalModelReport {
        image: c.object_label(x).into(),
        basepoint: d.object_label(y).into(),
        fiber: fiber.iter().map(|&z| d.object_label(z).to_string()).collect(),
        isotropy_order: gx.order(),
        image_subgroup: k.iter().map(|&p| c.arrow_label(iso.elements[p]).to_string()).collect(),
        coset_count: cosets.len(),
        connected,
        coset_injective,
        coset_surjective,
        isotropy_injective,
        subgroup_normal: gx.is_normal(&k),
        model_isomorphic,
        coset_of,
    })
}

/// Exhaustive search for an isomorphism from the restriction of the domain
/// to `fiber` onto `G_x ⋉ (G_x/K)` lying over the inclusion of `G_x`. The
/// arrow part is forced to `h ↦ (φ1(h), Φ0(src h))`, so the search runs
/// over object bijections `Φ0`.
fn model_isomorphism(
    f: &GroupoidMorphism,
    fiber: &[ObjectId],
    loops: &[ArrowId],
    gx: &crate::group::FiniteGroup,
    cosets: &[Vec<usize>],
    which: &[usize],
) -> Option<Vec<usize>> {
    let d = &*f.domain;
    if fiber.len() != cosets.len() {
        return None;
    }
    let local: HashMap<ObjectId, usize> = fiber.iter().enumerate().map(|(i, &z)| (z, i)).collect();
    let position: HashMap<ArrowId, usize> = loops.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    // arrows of the restriction as (source, target, element of G_x)
    let mut arrows = Vec::new();
    for &z in fiber {
        for &h in d.outgoing(z) {
            if let Some(&t) = local.get(&d.tgt(h)) {
                arrows.push((local[&z], t, position[&f.phi1[h]]));
            }
        }
    }
    if arrows.len() != gx.order() * cosets.len() {
        return None;
    }
    let act = |g: usize, c: usize| which[gx.mul(g, cosets[c][0])];
    let mut assignment = vec![usize::MAX; fiber.len()];
    let mut used = vec![false; cosets.len()];

    fn search(
        i: usize,
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        arrows: &[(usize, usize, usize)],
        act: &dyn Fn(usize, usize) -> usize,
    ) -> bool {
        if i == assignment.len() {
            return true;
        }
        for c in 0..used.len() {
            if used[c] {
                continue;
            }
            assignment[i] = c;
            let consistent = arrows.iter().all(|&(s, t, g)| {
                assignment[s] == usize::MAX || assignment[t] == usize::MAX || act(g, assignment[s]) == assignment[t]
            });
            if consistent {
                used[c] = true;
                if search(i + 1, assignment, used, arrows, act) {
                    return true;
                }
                used[c] = false;
            }
            assignment[i] = usize::MAX;
        }
        false
    }

    if !search(0, &mut assignment, &mut used, &arrows, &act) {
        return None;
    }
    let mut images: Vec<(usize, usize)> = arrows.iter().map(|&(s, _, g)| (g, assignment[s])).collect();
    images.sort_unstable();
    images.dedup();
    (images.len() == arrows.len()).then_some(assignment)
}

/// `φ1` is injective on every isotropy group of the domain.
pub fn check_local_injectivity(f: &GroupoidMorphism) -> bool {
    f.is_injective_on_isotropy()
}

/// The strong equivariant map built from a functor into a translation
/// groupoid, with the bibundle exhibiting `[N/G]` as Morita equivalent to the
/// domain.
#[derive(Debug, Clone)]
pub struct Immersion {
    /// `R_φ = {(g, φ0 y, y)}`, stored as `(g, y)`.
    pub total: Vec<(usize, ObjectId)>,
    /// The `N`-point of each element of `R_φ`.
    pub class: Vec<usize>,
    pub n: GSet,
    pub iota: EquivariantMap,
    /// From the domain of the functor (right action) to `[N/G]` (left action).
    pub witness: Bibundle,
    pub n_groupoid: TranslationGroupoid,
    pub strong: bool,
    pub witness_biprincipal: bool,
}

/// Builds `R_φ = (G × M) ×_{s,M,φ0} H0` for `f: 𝓗 → G ⋉ M`, its quotient
/// `N` by the right `𝓗`-action and the induced `ι: N → M`. Needs only that
/// the right action is free.
pub fn immersion_from_functor(f: &GroupoidMorphism, target: &TranslationGroupoid) -> Result<Immersion> {
    if !same_groupoid(&f.codomain, &target.groupoid) {
        return Err(Error::Mismatch("functor does not land in the given translation groupoid".into()));
    }
    let report = f.validate_functor();
    if let Some(v) = report.violations.first() {
        return Err(Error::Precondition(format!("not a functor: {v}")));
    }
    let h = &*f.domain;
    let m = &target.gset;
    let g = m.group();
    let n_obj = h.object_count();
    let total: Vec<(usize, ObjectId)> = g.elements().flat_map(|e| h.objects().map(move |y| (e, y))).collect();
    let index = |e: usize, y: ObjectId| e * n_obj + y;
    let group_part: Vec<usize> = h.arrows().map(|a| target.decode(f.phi1[a]).0).collect();
    let mut incoming: Vec<Vec<ArrowId>> = vec![Vec::new(); n_obj];
    for a in h.arrows() {
        incoming[h.tgt(a)].push(a);
    }
    let right = |e: usize, a: ArrowId| (g.mul(e, group_part[a]), h.src(a));

    // freeness: only units fix an element
    for y in h.objects() {
        for &a in &incoming[y] {
            if h.src(a) == y && a != h.unit(y) && group_part[a] == g.identity() {
                return Err(Error::NotFree(format!(
                    "{} fixes every element over {}",
                    h.arrow_label(a),
                    h.object_label(y)
                )));
            }
        }
    }

    let mut class = vec![usize::MAX; total.len()];
    let mut reps = Vec::new();
    for (r, &(e, y)) in total.iter().enumerate() {
        if class[r] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(r);
        for &a in &incoming[y] {
            let (e2, y2) = right(e, a);
            class[index(e2, y2)] = c;
        }
    }
    let labels: Vec<String> = reps
        .iter()
        .map(|&r| {
            let (e, y) = total[r];
            format!("[{},{}]", g.label(e), h.object_label(y))
        })
        .collect();
    let act: Vec<Vec<usize>> = g
        .elements()
        .map(|e| reps.iter().map(|&r| class[index(g.mul(e, total[r].0), total[r].1)]).collect())
        .collect();
    let n = GSet::new(g.clone(), labels, act)?;

    let tilde: Vec<usize> = total.iter().map(|&(e, y)| m.act(e, f.phi0[y])).collect();
    let mut iota_map = vec![usize::MAX; reps.len()];
    for (r, &c) in class.iter().enumerate() {
        if iota_map[c] == usize::MAX {
            iota_map[c] = tilde[r];
        } else if iota_map[c] != tilde[r] {
            return Err(Error::Internal("ι̃ is not constant on right orbits".into()));
        }
    }
    let iota = EquivariantMap::new(n.clone(), m.clone(), iota_map)?;
    let n_groupoid = crate::action::translation_groupoid(&n);

    let mut left_act = HashMap::new();
    let mut right_act = HashMap::new();
    for (r, &(e, y)) in total.iter().enumerate() {
        for e2 in g.elements() {
            left_act.insert((n_groupoid.arrow(e2, class[r]), r), index(g.mul(e2, e), y));
        }
        for &a in &incoming[y] {
            let (e3, y3) = right(e, a);
            right_act.insert((r, a), index(e3, y3));
        }
    }
    let witness = Bibundle::new(
        f.domain.clone(),
        n_groupoid.groupoid.clone(),
        total
            .iter()
            .map(|&(e, y)| format!("({},{},{})", g.label(e), m.point_label(f.phi0[y]), h.object_label(y)))
            .collect(),
        total.iter().map(|p| p.1).collect(),
        class.clone(),
        left_act,
        right_act,
    )?;
    let strong = iota.is_strong();
    let witness_biprincipal = witness.is_morita();
    Ok(Immersion { total, class, n, iota, witness, n_groupoid, strong, witness_biprincipal })
}

/// [`immersion_from_functor`] for a functor that is an embedding.
pub fn embedding_to_immersion(f: &GroupoidMorphism, target: &TranslationGroupoid) -> Result<Immersion> {
    if !is_orbifold_embedding(f)?.verdict {
        return Err(Error::Precondition("the functor is not an embedding".into()));
    }
    immersion_from_functor(f, target)
}

#[derive(Debug, Clone)]
pub struct InducedEmbedding {
    pub source: TranslationGroupoid,
    pub target: TranslationGroupoid,
    pub morphism: GroupoidMorphism,
    pub verdict: EmbeddingVerdict,
}

/// `G ⋉ N → G ⋉ M` induced by a strong map, with its embedding verdict.
pub fn immersion_to_embedding(iota: &EquivariantMap) -> Result<InducedEmbedding> {
    if let Some((p, fiber)) = iota.strongness_failure() {
        return Err(Error::NotStrong {
            point: iota.target.point_label(p).into(),
            fiber: fiber.iter().map(|&x| iota.source.point_label(x).to_string()).collect(),
        });
    }
    let (source, target, morphism) = induced_functor(iota);
    let verdict = is_orbifold_embedding(&morphism)?;
    Ok(InducedEmbedding { source, target, morphism, verdict })
}

#[derive(Debug, Clone)]
pub struct RoundtripReport {
    pub immersion: Immersion,
    pub embedding: InducedEmbedding,
    /// `[N/G]` and the original domain have matching skeletons.
    pub morita: bool,
    pub witness_biprincipal: bool,
    /// `|ι| ∘ |witness| = |f|` on orbit spaces.
    pub orbit_maps_agree: bool,
}

impl RoundtripReport {
    pub fn pass(&self) -> bool {
        self.morita && self.witness_biprincipal && self.orbit_maps_agree && self.embedding.verdict.verdict
    }
}

/// Embedding → strong immersion → embedding, compared with the start.
pub fn roundtrip_check(f: &GroupoidMorphism, target: &TranslationGroupoid) -> Result<RoundtripReport> {
    let immersion = embedding_to_immersion(f, target)?;
    let embedding = immersion_to_embedding(&immersion.iota)?;
    let morita = are_morita_equivalent(&embedding.source.groupoid, &f.domain).0;
    let witness_biprincipal = immersion.witness.is_morita();

    let h = &*f.domain;
    let m_index = target.groupoid.orbit_index();
    let direct = f.orbit_map();
    let n_obj = h.object_count();
    let e = target.gset.group().identity();
    let orbit_maps_agree = h.orbits().iter().zip(&direct).all(|(orbit, &expected)| {
        let y = orbit[0];
        let n_point = immersion.class[e * n_obj + y];
        m_index[immersion.iota.map[n_point]] == expected
    });
    Ok(RoundtripReport { immersion, embedding, morita, witness_biprincipal, orbit_maps_agree })
}

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub pullback: FiberedProduct,
    pub pr1_equivalence: bool,
    /// `σ ∘ pr2`.
    pub phi_tilde: GroupoidMorphism,
    pub immersion: Immersion,
}

/// For `f: 𝓗 → 𝓖` and equivalences `ψ: 𝓖′ → 𝓖`, `σ: 𝓖′ → G ⋉ M`, pulls `f`
/// back along `ψ` and builds the immersion for `σ ∘ pr2`.
pub fn general_pipeline(
    f: &GroupoidMorphism,
    psi: &GroupoidMorphism,
    sigma: &GroupoidMorphism,
    target: &TranslationGroupoid,
) -> Result<PipelineReport> {
    if !psi.is_equivalence() {
        return Err(Error::Precondition("ψ is not an equivalence".into()));
    }
    if !sigma.is_equivalence() {
        return Err(Error::Precondition("σ is not an equivalence".into()));
    }
    if !same_groupoid(&psi.domain, &sigma.domain) {
        return Err(Error::Mismatch("ψ and σ must share their domain".into()));
    }
    if !is_orbifold_embedding(f)?.verdict {
        return Err(Error::Precondition("f is not an embedding".into()));
    }
    let pullback = fibered_product(f, psi)?;
    let pr1_equivalence = pullback.pr1.is_equivalence();
    let phi_tilde = sigma.after(&pullback.pr2)?;
    let immersion = immersion_from_functor(&phi_tilde, target)?;
    Ok(PipelineReport { pullback, pr1_equivalence, phi_tilde, immersion })
}
