//! Seeded instances shared by the benchmarks.

use std::sync::Arc;

use orbigroupoid::{immersion_to_embedding, random, FiniteGroupoid, GroupoidMorphism, InducedEmbedding};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Embeddings induced by random strong maps, for groups of order at most 8.
pub fn random_embeddings(seed: u64, count: usize) -> Vec<InducedEmbedding> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g = random::group(&mut rng, 8);
            let m = random::gset(&mut rng, &g, 6);
            let iota = random::strong_map(&mut rng, &m, 8);
            immersion_to_embedding(&iota).expect("strong by construction")
        })
        .collect()
}

/// Pairs `(G, equivalence onto G)` for the Morita comparison.
pub fn random_equivalences(seed: u64, count: usize) -> Vec<(Arc<FiniteGroupoid>, GroupoidMorphism)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g = Arc::new(random::groupoid(&mut rng, 6, 48));
            let e = random::equivalence_onto(&mut rng, &g, 6);
            (g, e)
        })
        .collect()
}
