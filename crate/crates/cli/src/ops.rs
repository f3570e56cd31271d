//! The operations behind each verb.

use std::time::Instant;

use orbigroupoid::{
    are_morita_equivalent, check_inertia_embedding, embedding_to_immersion, fibered_product, general_pipeline, immersion_to_embedding,
    inertia, is_orbifold_embedding, roundtrip_check, skeleton, EmbeddingVerdict, Error as CoreError, FiniteGroupoid, GroupoidMorphism,
    Immersion, LocalModelReport, TranslationGroupoid,
};
use serde_json::{json, Value};

use crate::document::{
    bibundle_value, map_value, morphism_value, tagged, CliError, Document, Groupoid, Kind, Morphism, Resolver, Result,
};
use crate::properties;
use crate::report::{Check, Report};

pub const OPERATIONS: [&str; 14] = [
    "validate",
    "orbit-space",
    "isotropy",
    "inertia",
    "inertia-embedding",
    "check-equivalence",
    "check-morita",
    "fiber-product",
    "check-embedding",
    "embed-to-immersion",
    "immerse-to-embedding",
    "roundtrip",
    "general-pipeline",
    "properties",
];

#[derive(Debug, Clone)]
pub struct Options {
    pub object: Option<String>,
    pub seed: u64,
    pub cases: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { object: None, seed: 0, cases: 64 }
    }
}

/// Runs `operation` on `inputs` and stamps the elapsed time.
pub fn execute(operation: &str, inputs: &[Value], resolver: &Resolver, options: &Options) -> Result<Report> {
    let start = Instant::now();
    let mut report = dispatch(operation, inputs, resolver, options)?;
    report.timings.total_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(report)
}

/// Runs a task document: its inputs are resolved relative to `resolver`.
pub fn run_task(task: &Value, resolver: &Resolver, options: &Options) -> Result<Report> {
    let doc = resolver.task(task)?;
    if doc.operation == "run" {
        return Err(CliError::Schema("a task cannot run another task".into()));
    }
    let options = Options { object: doc.object.clone().or_else(|| options.object.clone()), ..options.clone() };
    execute(&doc.operation, &doc.inputs, resolver, &options)
}

fn dispatch(operation: &str, inputs: &[Value], r: &Resolver, options: &Options) -> Result<Report> {
    let arity = match operation {
        "check-morita" | "fiber-product" => 2,
        "general-pipeline" => 3,
        "properties" => 0,
        _ if OPERATIONS.contains(&operation) => 1,
        other => return Err(CliError::Schema(format!("unknown operation {other:?}"))),
    };
    if inputs.len() != arity {
        return Err(CliError::Schema(format!("{operation} takes {arity} input(s), got {}", inputs.len())));
    }
    match operation {
        "validate" => validate(&inputs[0], r),
        "orbit-space" => orbit_space(&groupoid_input(r, &inputs[0])?),
        "isotropy" => isotropy(&groupoid_input(r, &inputs[0])?, options.object.as_deref()),
        "inertia" => inertia_report(&groupoid_input(r, &inputs[0])?),
        "inertia-embedding" => inertia_embedding(&r.morphism(&inputs[0])?),
        "check-equivalence" => check_equivalence(&r.morphism(&inputs[0])?),
        "check-morita" => check_morita(&groupoid_input(r, &inputs[0])?, &groupoid_input(r, &inputs[1])?),
        "fiber-product" => fiber_product(&r.morphism(&inputs[0])?, &r.morphism(&inputs[1])?),
        "check-embedding" => check_embedding(&r.morphism(&inputs[0])?),
        "embed-to-immersion" => embed_to_immersion(&r.morphism(&inputs[0])?),
        "immerse-to-embedding" => immerse_to_embedding(&r.equivariant_map(&inputs[0])?),
        "roundtrip" => roundtrip(&r.morphism(&inputs[0])?),
        "general-pipeline" => pipeline(&r.morphism(&inputs[0])?, &r.morphism(&inputs[1])?, &r.morphism(&inputs[2])?),
        "properties" => Ok(properties::run(options.seed, options.cases)),
        _ => unreachable!("arity table covers every operation"),
    }
}

/// A groupoid document, or a G-set taken as its translation groupoid.
fn groupoid_input(r: &Resolver, value: &Value) -> Result<Groupoid> {
    match r.kind_of(value)? {
        Kind::GSet => Ok(Groupoid::from_translation(orbigroupoid::translation_groupoid(&r.gset(value)?))),
        _ => r.groupoid(value),
    }
}

fn translation_codomain<'a>(m: &'a Morphism, role: &str) -> Result<&'a TranslationGroupoid> {
    m.codomain
        .translation
        .as_ref()
        .ok_or_else(|| CliError::Precondition(format!("the codomain of {role} must be given as a translation groupoid")))
}

fn require_functor(f: &GroupoidMorphism, role: &str) -> Result<()> {
    for g in [&f.domain, &f.codomain] {
        if let Some(v) = g.validate().violations.first() {
            return Err(CliError::Precondition(format!("{role}: a groupoid fails its axioms: {v}")));
        }
    }
    match f.validate_functor().violations.first() {
        Some(v) => Err(CliError::Precondition(format!("{role} is not a functor: {v}"))),
        None => Ok(()),
    }
}

fn labels(g: &FiniteGroupoid, objects: &[usize]) -> Vec<String> {
    objects.iter().map(|&x| g.object_label(x).to_string()).collect()
}

fn validate(value: &Value, r: &Resolver) -> Result<Report> {
    let kind = r.kind_of(value)?;
    let doc = match r.document(value) {
        Ok(doc) => doc,
        Err(CliError::Invalid(message)) => {
            let check = Check::new("structure", false, Some(json!({ "text": message })));
            return Ok(Report::new("validate", Some(false)).with_checks(vec![check]).with_details(json!({ "kind": kind.name() })));
        }
        Err(e) => return Err(e),
    };
    let mut checks = vec![Check::new("structure", true, None)];
    let axioms = |name: &str, g: &FiniteGroupoid| {
        let v = g.validate().violations;
        let witness = (!v.is_empty()).then(|| json!({ "text": v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ") }));
        Check::new(name, v.is_empty(), witness)
    };
    let details = match &doc {
        Document::Group(g) => json!({ "kind": "group", "order": g.order(), "abelian": g.is_abelian() }),
        Document::GSet(m) => json!({ "kind": "gset", "group_order": m.group().order(), "points": m.point_count(), "orbits": m.orbits().len() }),
        Document::Groupoid(g) => {
            checks.push(axioms("groupoid-axioms", &g.groupoid));
            json!({ "kind": "groupoid", "objects": g.groupoid.object_count(), "arrows": g.groupoid.arrow_count() })
        }
        Document::Morphism(m) => {
            checks.push(axioms("domain-axioms", &m.morphism.domain));
            checks.push(axioms("codomain-axioms", &m.morphism.codomain));
            let v = m.morphism.validate_functor().violations;
            let witness = v.first().map(|x| json!({ "text": x.to_string() }));
            checks.push(Check::new("functor-laws", v.is_empty(), witness));
            json!({ "kind": "morphism", "domain_objects": m.morphism.domain.object_count(), "codomain_objects": m.morphism.codomain.object_count() })
        }
        Document::EquivariantMap(f) => json!({ "kind": "equivariant-map", "points": f.source.point_count(), "strong": f.is_strong() }),
        Document::Bibundle(b) => {
            checks.push(axioms("domain-axioms", &b.domain));
            checks.push(axioms("codomain-axioms", &b.codomain));
            let v = b.validate().violations;
            let witness = v.first().map(|x| json!({ "text": x.to_string() }));
            checks.push(Check::new("bibundle-laws", v.is_empty(), witness));
            json!({ "kind": "bibundle", "points": b.len() })
        }
        Document::Task(t) => {
            let known = OPERATIONS.contains(&t.operation.as_str());
            let witness = (!known).then(|| json!({ "text": format!("unknown operation {:?}", t.operation) }));
            checks.push(Check::new("operation", known, witness));
            json!({ "kind": "task", "operation": t.operation })
        }
    };
    let verdict = checks.iter().all(|c| c.pass);
    Ok(Report::new("validate", Some(verdict)).with_checks(checks).with_details(details))
}

fn orbit_space(g: &Groupoid) -> Result<Report> {
    let g = &*g.groupoid;
    let orbits: Vec<Value> = g
        .orbit_space()
        .iter()
        .map(|c| json!({ "objects": labels(g, &c.objects), "isotropy_order": c.isotropy.order(), "isotropy_abelian": c.isotropy.is_abelian() }))
        .collect();
    Ok(Report::new("orbit-space", None).with_details(json!({ "orbit_count": orbits.len(), "orbits": orbits })))
}

fn isotropy(g: &Groupoid, object: Option<&str>) -> Result<Report> {
    let object = object.ok_or_else(|| CliError::Schema("isotropy needs an object".into()))?;
    let iso = g.groupoid.isotropy_of(object)?;
    let elements: Vec<&str> = iso.elements.iter().map(|&a| g.groupoid.arrow_label(a)).collect();
    let details = json!({
        "object": object,
        "order": iso.order(),
        "elements": elements,
        "abelian": iso.group.is_abelian(),
        "conjugacy_classes": iso.group.conjugacy_classes().len(),
    });
    Ok(Report::new("isotropy", None).with_details(details))
}

fn inertia_report(g: &Groupoid) -> Result<Report> {
    let lambda = inertia(&g.groupoid);
    let l = &*lambda.groupoid;
    let orbits: Vec<Value> = l
        .orbit_space()
        .iter()
        .map(|c| json!({ "loops": labels(l, &c.objects), "isotropy_order": c.isotropy.order() }))
        .collect();
    let details = json!({
        "objects": l.object_count(),
        "arrows": l.arrow_count(),
        "orbit_count": orbits.len(),
        "orbits": orbits,
    });
    Ok(Report::new("inertia", None).with_details(details))
}

fn verdict_details(v: &EmbeddingVerdict) -> Value {
    json!({ "local_models": v.local_models.iter().map(local_model_value).collect::<Vec<_>>() })
}

fn local_model_value(m: &LocalModelReport) -> Value {
    json!({
        "image": m.image,
        "basepoint": m.basepoint,
        "fiber": m.fiber,
        "fiber_size": m.fiber.len(),
        "isotropy_order": m.isotropy_order,
        "image_subgroup": m.image_subgroup,
        "coset_count": m.coset_count,
        "connected": m.connected,
        "coset_injective": m.coset_injective,
        "coset_surjective": m.coset_surjective,
        "isotropy_injective": m.isotropy_injective,
        "subgroup_normal": m.subgroup_normal,
        "model_isomorphic": m.model_isomorphic,
    })
}

fn check_embedding(m: &Morphism) -> Result<Report> {
    require_functor(&m.morphism, "the morphism")?;
    let v = is_orbifold_embedding(&m.morphism)?;
    Ok(Report::new("check-embedding", Some(v.verdict))
        .with_checks(v.checks.iter().map(Check::from).collect())
        .with_details(verdict_details(&v)))
}

fn inertia_embedding(m: &Morphism) -> Result<Report> {
    require_functor(&m.morphism, "the morphism")?;
    let r = check_inertia_embedding(&m.morphism)?;
    let mut checks: Vec<Check> = r.verdict.checks.iter().map(Check::from).collect();
    let unconnected = r.unconnected.as_ref().map(|(a, b)| {
        json!({ "kind": "unconnected-loops", "first": a, "second": b, "text": format!("loops {a} and {b} have the same image but lie in different orbits") })
    });
    checks.push(Check::new("loops-connected", unconnected.is_none(), unconnected));
    let details = json!({
        "source_objects": r.source.groupoid.object_count(),
        "target_objects": r.target.groupoid.object_count(),
        "codomain_abelian": r.codomain_abelian,
        "image_isotropy_abelian": r.image_isotropy_abelian,
        "local_models": r.verdict.local_models.iter().map(local_model_value).collect::<Vec<_>>(),
    });
    Ok(Report::new("inertia-embedding", Some(r.verdict.verdict)).with_checks(checks).with_details(details))
}

fn check_equivalence(m: &Morphism) -> Result<Report> {
    let f = &m.morphism;
    require_functor(f, "the morphism")?;
    let (d, c) = (&*f.domain, &*f.codomain);
    let hit = f.orbit_map();
    let orbits = c.orbits();
    let missed = (0..orbits.len()).find(|o| !hit.contains(o));
    let es = Check::new(
        "essentially-surjective",
        missed.is_none(),
        missed.map(|o| {
            let x = c.object_label(orbits[o][0]);
            json!({ "kind": "missed-orbit", "object": x, "text": format!("no object maps into the orbit of {x}") })
        }),
    );
    let failure = f.first_hom_failure();
    let ff = Check::new(
        "fully-faithful",
        failure.is_none(),
        failure.map(|(x, y)| {
            let (x, y) = (d.object_label(x), d.object_label(y));
            json!({ "kind": "hom-mismatch", "from": x, "to": y, "text": format!("hom({x}, {y}) is not mapped bijectively") })
        }),
    );
    let verdict = es.pass && ff.pass;
    Ok(Report::new("check-equivalence", Some(verdict)).with_checks(vec![es, ff]))
}

fn skeleton_value(g: &FiniteGroupoid) -> Value {
    let s = skeleton(g);
    s.classes
        .iter()
        .map(|(size, iso, rep)| json!({ "representative": g.object_label(*rep), "orbit_size": size, "isotropy_order": iso.order() }))
        .collect()
}

fn check_morita(a: &Groupoid, b: &Groupoid) -> Result<Report> {
    let (verdict, zigzag) = are_morita_equivalent(&a.groupoid, &b.groupoid);
    let mut details = json!({ "first": skeleton_value(&a.groupoid), "second": skeleton_value(&b.groupoid) });
    if let Some(z) = zigzag {
        let pairs: Vec<[&str; 2]> = z
            .middle
            .objects()
            .map(|i| [a.groupoid.object_label(z.left.phi0[i]), b.groupoid.object_label(z.right.phi0[i])])
            .collect();
        details["matching"] = json!(pairs);
    }
    let check = Check::new("skeletons-match", verdict, None);
    Ok(Report::new("check-morita", Some(verdict)).with_checks(vec![check]).with_details(details))
}

fn fiber_product(f: &Morphism, g: &Morphism) -> Result<Report> {
    require_functor(&f.morphism, "the first morphism")?;
    require_functor(&g.morphism, "the second morphism")?;
    let p = fibered_product(&f.morphism, &g.morphism)?;
    let details = json!({
        "objects": p.groupoid.object_count(),
        "arrows": p.groupoid.arrow_count(),
        "pr1_equivalence": p.pr1.is_equivalence(),
        "pr2_equivalence": p.pr2.is_equivalence(),
        "transformation_natural": p.transformation_is_natural(&f.morphism, &g.morphism),
        "groupoid": tagged(Kind::Groupoid, crate::document::groupoid_value(&Groupoid::plain(p.groupoid.clone()))),
    });
    Ok(Report::new("fiber-product", None).with_details(details))
}

fn immersion_details(i: &Immersion) -> Value {
    json!({
        "strong": i.strong,
        "witness_biprincipal": i.witness_biprincipal,
        "total_points": i.total.len(),
        "quotient_points": i.n.point_count(),
        "immersion": tagged(Kind::EquivariantMap, map_value(&i.iota)),
        "witness": tagged(Kind::Bibundle, bibundle_value(&i.witness)),
    })
}

fn not_free_report(task: &str, e: CoreError) -> Result<Report> {
    match e {
        CoreError::NotFree(message) => {
            let check = Check::new("free-action", false, Some(json!({ "kind": "not-free", "text": message })));
            Ok(Report::new(task, Some(false)).with_checks(vec![check]))
        }
        other => Err(other.into()),
    }
}

fn embed_to_immersion(m: &Morphism) -> Result<Report> {
    require_functor(&m.morphism, "the morphism")?;
    let target = translation_codomain(m, "the morphism")?;
    let i = match embedding_to_immersion(&m.morphism, target) {
        Ok(i) => i,
        Err(e) => return not_free_report("embed-to-immersion", e),
    };
    let checks = vec![Check::new("strong", i.strong, None), Check::new("witness-biprincipal", i.witness_biprincipal, None)];
    Ok(Report::new("embed-to-immersion", Some(i.strong && i.witness_biprincipal))
        .with_checks(checks)
        .with_details(immersion_details(&i)))
}

fn immerse_to_embedding(iota: &orbigroupoid::EquivariantMap) -> Result<Report> {
    let e = match immersion_to_embedding(iota) {
        Ok(e) => e,
        Err(CoreError::NotStrong { point, fiber }) => {
            let text = format!("the fiber over {point} is {{{}}}, which is not a single orbit of the stabilizer", fiber.join(", "));
            let witness = json!({ "kind": "not-strong", "point": point, "fiber": fiber, "text": text });
            return Ok(Report::new("immerse-to-embedding", Some(false)).with_checks(vec![Check::new("strong", false, Some(witness))]));
        }
        Err(e) => return Err(e.into()),
    };
    let mut checks = vec![Check::new("strong", true, None)];
    checks.extend(e.verdict.checks.iter().map(Check::from));
    let morphism = Morphism {
        morphism: e.morphism.clone(),
        domain: Groupoid::from_translation(e.source.clone()),
        codomain: Groupoid::from_translation(e.target.clone()),
    };
    let mut details = verdict_details(&e.verdict);
    details["morphism"] = tagged(Kind::Morphism, morphism_value(&morphism));
    Ok(Report::new("immerse-to-embedding", Some(e.verdict.verdict)).with_checks(checks).with_details(details))
}

fn roundtrip(m: &Morphism) -> Result<Report> {
    require_functor(&m.morphism, "the morphism")?;
    let target = translation_codomain(m, "the morphism")?;
    let r = match roundtrip_check(&m.morphism, target) {
        Ok(r) => r,
        Err(e) => return not_free_report("roundtrip", e),
    };
    let checks = vec![
        Check::new("strong", r.immersion.strong, None),
        Check::new("morita", r.morita, None),
        Check::new("witness-biprincipal", r.witness_biprincipal, None),
        Check::new("orbit-maps-agree", r.orbit_maps_agree, None),
        Check::new("induced-embedding", r.embedding.verdict.verdict, None),
    ];
    let details = json!({
        "quotient_points": r.immersion.n.point_count(),
        "induced_objects": r.embedding.morphism.domain.object_count(),
    });
    Ok(Report::new("roundtrip", Some(r.pass())).with_checks(checks).with_details(details))
}

fn pipeline(f: &Morphism, psi: &Morphism, sigma: &Morphism) -> Result<Report> {
    require_functor(&f.morphism, "f")?;
    require_functor(&psi.morphism, "ψ")?;
    require_functor(&sigma.morphism, "σ")?;
    let target = translation_codomain(sigma, "σ")?;
    let p = match general_pipeline(&f.morphism, &psi.morphism, &sigma.morphism, target) {
        Ok(p) => p,
        Err(e) => return not_free_report("general-pipeline", e),
    };
    let checks = vec![
        Check::new("pr1-equivalence", p.pr1_equivalence, None),
        Check::new("strong", p.immersion.strong, None),
        Check::new("witness-biprincipal", p.immersion.witness_biprincipal, None),
    ];
    let verdict = checks.iter().all(|c| c.pass);
    let mut details = immersion_details(&p.immersion);
    details["pullback_objects"] = json!(p.pullback.groupoid.object_count());
    Ok(Report::new("general-pipeline", Some(verdict)).with_checks(checks).with_details(details))
}

/// Error payload printed for exit code 2.
pub fn error_value(e: &CliError) -> Value {
    let kind = match e {
        CliError::Syntax { .. } => "syntax",
        CliError::Unresolved(_) => "unresolved-reference",
        CliError::Schema(_) => "schema",
        CliError::Invalid(_) => "invalid",
        CliError::Precondition(_) => "precondition",
        CliError::Io { .. } => "io",
        CliError::Internal(_) => "internal",
    };
    let mut v = json!({ "error": kind, "message": e.to_string() });
    if let CliError::Syntax { line, column, .. } = e {
        v["line"] = json!(line);
        v["column"] = json!(column);
    }
    v
}
