use thiserror::Error;

use crate::monoid::ElementId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("table is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NonAssociative { x: usize, y: usize, z: usize },
    #[error("bad identity: {0}")]
    BadIdentity(String),
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("transformations act on different domains ({expected} vs {found})")]
    DomainMismatch { expected: usize, found: usize },
    #[error("{what} exceeds size limit {limit}")]
    SizeLimitExceeded { what: &'static str, limit: usize },
    #[error("element {0} is not idempotent")]
    NotIdempotent(ElementId),
    #[error("predicate {name} has the wrong kind (expected {expected})")]
    WrongPredicateKind { name: String, expected: &'static str },
    #[error("pair ({0}, {0}) does not generate a non-trivial congruence")]
    SamePair(usize),
    #[error("partition is not compatible with multiplication: {0}")]
    IncompatiblePartition(String),
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("pseudovariety {0} is not flagged Fitting")]
    NotFitting(String),
    #[error("J-class {0} is not regular")]
    NotRegular(usize),
    #[error("element {0} lies strictly above or beside the J-class")]
    NotInDomain(ElementId),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("bad composition: {0}")]
    BadComposition(String),
    #[error("arrows {0} and {1} are not coterminal")]
    NotCoterminal(usize, usize),
    #[error("morphism is not a quotient morphism: {0}")]
    NotQuotient(String),
    #[error("morphism is injective (trivial congruence)")]
    Injective,
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("unknown builtin {0:?}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Stable machine-readable code, used by the command line frontend.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonAssociative { .. } => "NonAssociative",
            Error::BadIdentity(_) => "BadIdentity",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::MalformedTable(_) => "MalformedTable",
            Error::DomainMismatch { .. } => "DomainMismatch",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::NotIdempotent(_) => "NotIdempotent",
            Error::WrongPredicateKind { .. } => "WrongPredicateKind",
            Error::SamePair(_) => "SamePair",
            Error::IncompatiblePartition(_) => "IncompatiblePartition",
            Error::NotSurjective => "NotSurjective",
            Error::NotFitting(_) => "NotFitting",
            Error::NotRegular(_) => "NotRegular",
            Error::NotInDomain(_) => "NotInDomain",
            Error::NotNormal => "NotNormal",
            Error::NotAGroup(_) => "NotAGroup",
            Error::BadComposition(_) => "BadComposition",
            Error::NotCoterminal(..) => "NotCoterminal",
            Error::NotQuotient(_) => "NotQuotient",
            Error::Injective => "Injective",
            Error::NotAMorphism(_) => "NotAMorphism",
            Error::UnknownPredicate(_) => "UnknownPredicate",
            Error::UnknownName(_) => "UnknownName",
            Error::Parse(_) => "ParseError",
            Error::InvariantViolation(_) => "InvariantViolation",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
