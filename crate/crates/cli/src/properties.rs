//! Seeded randomized checks, run in parallel. `THREADS` caps the pool size.

use std::sync::Arc;

use orbigroupoid::{
    are_morita_equivalent, check_inertia_embedding, fibered_product, immersion_to_embedding, random, roundtrip_check,
};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::json;

use crate::report::{Check, Report};

type Property = fn(&mut StdRng) -> Result<(), String>;

const PROPERTIES: [(&str, Property); 4] = [
    ("strong-maps-give-embeddings", strong_maps_give_embeddings),
    ("equivalences-are-morita", equivalences_are_morita),
    ("pullback-along-equivalence", pullback_along_equivalence),
    ("abelian-inertia-embeds", abelian_inertia_embeds),
];

/// A strong map induces an embedding, and the embedding survives the
/// round trip through its immersion.
fn strong_maps_give_embeddings(rng: &mut StdRng) -> Result<(), String> {
    let g = random::group(rng, 8);
    let m = random::gset(rng, &g, 6);
    let iota = random::strong_map(rng, &m, 8);
    let e = immersion_to_embedding(&iota).map_err(|e| e.to_string())?;
    if !e.verdict.verdict {
        return Err(format!("induced functor fails {:?}", e.verdict.failed()));
    }
    let r = roundtrip_check(&e.morphism, &e.target).map_err(|e| e.to_string())?;
    r.pass().then_some(()).ok_or_else(|| "round trip does not close".to_string())
}

fn equivalences_are_morita(rng: &mut StdRng) -> Result<(), String> {
    let g = Arc::new(random::groupoid(rng, 5, 40));
    let e = random::equivalence_onto(rng, &g, 5);
    if !e.is_equivalence() {
        return Err("generated equivalence is not one".into());
    }
    let (morita, _) = are_morita_equivalent(&e.domain, &g);
    morita.then_some(()).ok_or_else(|| "equivalent groupoids have different skeletons".to_string())
}

fn pullback_along_equivalence(rng: &mut StdRng) -> Result<(), String> {
    let g = Arc::new(random::groupoid(rng, 4, 32));
    let f = random::functor_into(rng, &g, 3);
    let psi = random::equivalence_onto(rng, &g, 4);
    let p = fibered_product(&f, &psi).map_err(|e| e.to_string())?;
    if !p.transformation_is_natural(&f, &psi) {
        return Err("pullback square does not commute up to the transformation".into());
    }
    p.pr1.is_equivalence().then_some(()).ok_or_else(|| "first projection is not an equivalence".to_string())
}

fn abelian_inertia_embeds(rng: &mut StdRng) -> Result<(), String> {
    let g = random::cyclic_group(rng, 8);
    let m = random::gset(rng, &g, 6);
    let iota = random::strong_map(rng, &m, 6);
    let e = immersion_to_embedding(&iota).map_err(|e| e.to_string())?;
    let r = check_inertia_embedding(&e.morphism).map_err(|e| e.to_string())?;
    r.verdict.verdict.then_some(()).ok_or_else(|| format!("inertia functor fails {:?}", r.verdict.failed()))
}

fn pool() -> rayon::ThreadPool {
    let threads = std::env::var("THREADS").ok().and_then(|t| t.parse().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}

/// Runs every property on `cases` instances; case `i` uses seed `seed + i`.
pub fn run(seed: u64, cases: usize) -> Report {
    let checks: Vec<Check> = pool().install(|| {
        PROPERTIES
            .iter()
            .map(|&(name, property)| {
                let failure = (0..cases as u64)
                    .into_par_iter()
                    .filter_map(|i| {
                        let case_seed = seed.wrapping_add(i);
                        property(&mut StdRng::seed_from_u64(case_seed)).err().map(|e| (case_seed, e))
                    })
                    .min_by_key(|(s, _)| *s);
                let witness = failure.map(|(s, e)| json!({ "kind": "failing-case", "seed": s, "text": format!("seed {s}: {e}") }));
                Check::new(name, witness.is_none(), witness)
            })
            .collect()
    });
    let verdict = checks.iter().all(|c| c.pass);
    Report::new("properties", Some(verdict)).with_checks(checks).with_details(json!({ "seed": seed, "cases": cases }))
}
