use thiserror::Error;

use crate::script::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("colon by zero ideal")]
    ColonByZero,
    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("ideal is not supported only at the origin: variable `{variable}` {reason}")]
    NotOriginPrimary { variable: String, reason: String },
    #[error("containment fails: generator {witness} of the inner ideal is not in the outer ideal")]
    NotContained { witness: String },
    #[error("postulation not reached within n <= {nmax}; colengths {sequence:?}")]
    PostulationNotReached { nmax: usize, sequence: Vec<u64> },
    #[error("type via socle requires Cohen-Macaulay: defect is {defect}")]
    NotCohenMacaulay { defect: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("no origin-primary parameter ideal after {attempts} attempts")]
    SamplingFailed { attempts: usize },
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(String),
}
