//! Finite groupoids, group actions, inertia, bibundles and orbifold-style
//! embeddings, all on finite models.

pub mod action;
pub mod bibundle;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod groupoid;
pub mod inertia;
pub mod morphism;
pub mod presentation;
pub mod random;

pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use groupoid::{ArrowId, FiniteGroupoid, IsotropyGroup, ObjectId, OrbitClass, ValidationReport, Violation};
pub use presentation::Presentation;
pub use morphism::{
    are_morita_equivalent, fibered_product, object_pullback, skeleton, verify_pullback_equivalence, FiberedProduct, FunctorReport,
    FunctorViolation, GroupoidMorphism, Skeleton, Zigzag,
};
pub use action::{
    build_coset_extension, build_sheeted_extension, check_sheet_criterion, diagonal_embedding, induced_functor, isomorphic_over,
    translation_groupoid, CosetExtension, Diagonal, EquivariantMap, GSet, QuotientMap, TranslationGroupoid,
};
pub use bibundle::{
    bibundles_isomorphic, compose, from_functor, from_functor_ps, morita_bibundle, strictify, Bibundle,
    BibundleReport, BibundleViolation, Strictification,
};
pub use embedding::{
    check_local_injectivity, embedding_to_immersion, general_pipeline, immersion_from_functor, immersion_to_embedding,
    is_orbifold_embedding, local_model_at, roundtrip_check, CheckResult, Condition, EmbeddingVerdict, Immersion,
    InducedEmbedding, LocalModelReport, PipelineReport, RoundtripReport, Witness,
};
pub use inertia::{
    check_inertia_embedding, induced_inertia_morphism, inertia, loop_space, InertiaEmbeddingReport, InertiaGroupoid, LoopSpace,
};
