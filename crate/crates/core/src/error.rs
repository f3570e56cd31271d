use thiserror::Error;

/// Errors raised by the groupoid kernel.
///
/// Axiom violations of well-formed tables are not errors; they are reported
/// through the various `validate*` functions instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("unknown group element {0:?}")]
    UnknownElement(String),
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("duplicate identifier {0:?}")]
    DuplicateIdentifier(String),
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("groupoids do not match: {0}")]
    Mismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("equivariant map is not strong: fiber over {point:?} is {fiber:?}")]
    NotStrong { point: String, fiber: Vec<String> },
    #[error("right action is not free: {0}")]
    NotFree(String),
    #[error("anchor map has no global section: {0}")]
    NoGlobalSection(String),
    #[error("presentation: {0}")]
    Presentation(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
