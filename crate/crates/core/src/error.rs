use thiserror::Error;

use crate::certify::Certificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operands live in different variable registries")]
    RegistryMismatch,

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable `{0}` has no value at the evaluation point")]
    UnboundVariable(String),

    #[error("polynomial is constant in `{0}`")]
    DegreeZero(String),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("computed eigenspace for eigenvalue {eigenvalue} differs from the span of the named generators")]
    EigenbasisMismatch { eigenvalue: String },

    #[error("identity `{name}` failed, residual {residual}")]
    IdentityFailed { name: String, residual: String },

    #[error("could not exclude a common zero of the restricted forms")]
    BasePointNotExcluded,

    #[error("elimination left a nonzero remainder in row `{row}`: {remainder}")]
    NonzeroRemainder { row: String, remainder: String },

    #[error("9x9 determinant is not plus or minus det M")]
    BlockDeterminantMismatch,

    #[error("relation kernel has dimension {dim}, expected 1")]
    KernelNotUnique { dim: usize },

    #[error("no witness triple found in {attempts} attempts")]
    WitnessNotFound {
        attempts: usize,
        certificate: Box<Certificate>,
    },

    #[error("certificate carries no witness triple")]
    MissingWitness,

    #[error("certificate field `{field}` records {recorded}, recomputation gives {recomputed}")]
    Mismatch {
        field: String,
        recorded: String,
        recomputed: String,
    },

    #[error("serialization: {0}")]
    Serialization(#[from] serde_json::Error),
}
