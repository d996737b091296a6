use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator systems differ: {0} vs {1}")]
    SystemMismatch(String, String),

    #[error("no image given for generator {0}")]
    MissingImage(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("series variables differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),

    #[error("constant term is not a unit")]
    NonUnitConstantTerm,

    #[error("division is not exact: {0}")]
    DivisionNotExact(String),

    #[error("substituted series must have zero constant term")]
    NonzeroConstantSubstitution,

    #[error("series is not reversible: {0}")]
    NotReversible(String),

    #[error("coefficients unknown: {0}")]
    UnknownCoefficients(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inconsistent system: {0}")]
    InconsistentSystem(String),

    #[error("basis change matrix is singular at weight {0}")]
    SingularBasis(u32),

    #[error("denominators did not clear: {0}")]
    DenominatorNotCleared(String),

    #[error("root value is not nilpotent")]
    NonNilpotentRoot,

    #[error("embedded data corrupted: {0}")]
    DataCorruption(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
