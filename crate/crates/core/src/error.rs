use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table has wrong shape: expected {expected}, found {found}")]
    BadShape { expected: String, found: String },

    #[error("entry ({row}, {col}) = {value} is out of range [0, {bound})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        bound: usize,
    },

    #[error("multiplication is not associative: ({s}*{t})*{u} != {s}*({t}*{u})")]
    NotAssociative { s: usize, t: usize, u: usize },

    #[error("table has no two-sided identity")]
    NoIdentity,

    #[error("carrier must be non-empty")]
    EmptyCarrier,

    #[error("identity does not act trivially on element {a}")]
    IdentityAxiomFails { a: usize },

    #[error("action is not compatible with multiplication: {a}.({s}{t}) != ({a}.{s}).{t}")]
    AssociativityAxiomFails { a: usize, s: usize, t: usize },

    #[error("map is not equivariant: f({a}.{s}) != f({a}).{s}")]
    NotEquivariant { a: usize, s: usize },

    #[error("acts are over different monoids")]
    MonoidMismatch,

    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),

    #[error("subset is not closed under the action: {b}.{s} = {image} escapes it")]
    NotASubact { b: usize, s: usize, image: usize },

    #[error("partition is not a congruence: {a} ~ {b} but {a}.{s} !~ {b}.{s}")]
    NotACongruence { a: usize, b: usize, s: usize },

    #[error("congruences belong to carriers of different size ({0} vs {1})")]
    ParentMismatch(usize, usize),

    #[error("carrier of size {size} exceeds the enumeration cap {cap}")]
    CarrierTooLarge { size: usize, cap: usize },

    #[error("product size {size} exceeds the cap {cap}")]
    SizeOverflow { size: usize, cap: usize },

    #[error("size {size} is beyond the exhaustive range (max {max})")]
    SizeTooLarge { size: usize, max: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("act refers to undefined monoid {0:?}")]
    UnknownMonoidReference(String),

    #[error("name {0:?} is defined twice")]
    DuplicateName(String),

    #[error("no act or monoid named {0:?}")]
    UnknownName(String),

    #[error("invalid definition of {name:?}: {source}")]
    InvalidDefinition {
        name: String,
        #[source]
        source: Box<Error>,
    },

    #[error("witness cannot be rebuilt: {0}")]
    InvalidWitness(String),

    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CarrierTooLarge { .. }
            | Error::SizeOverflow { .. }
            | Error::SizeTooLarge { .. }
            | Error::SearchBudgetExceeded { .. } => 3,
            Error::InvalidDefinition { source, .. } => source.exit_code(),
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
