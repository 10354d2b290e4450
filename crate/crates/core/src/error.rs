use thiserror::Error;

use crate::nodes::PpsnCertificate;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("variable x{index} is out of range for dimension {n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no leading form")]
    ZeroPolynomial,

    #[error("invalid degree profile: {0}")]
    InvalidProfile(String),

    #[error("dimension cross-check failed at degree {m}: series gives {series}, backward difference gives {difference}")]
    CrossCheck { m: i64, series: u64, difference: u64 },

    #[error("leading forms are not independent at infinity: degree {degree} elementary items have rank {rank}, expected {expected}")]
    RankDeficient { degree: u32, rank: usize, expected: u64 },

    #[error("leading forms have a common zero at infinity")]
    NotSufficientAtInfinity,

    #[error("expected {expected} nodes, found {found}")]
    NodeCountMismatch { expected: u64, found: usize },

    #[error("node {point} ({coords}) is off the manifold: polynomial {polynomial} evaluates to {residual}")]
    OffManifold {
        point: usize,
        coords: String,
        polynomial: usize,
        residual: String,
    },

    #[error("nodes {first} and {second} coincide")]
    DuplicateNode { first: usize, second: usize },

    #[error("linear forms {choice:?} have no unique common solution")]
    SingularSelection { choice: Vec<usize> },

    #[error("factor choices {first:?} and {second:?} meet at the same point")]
    CoincidentPoints { first: Vec<usize>, second: Vec<usize> },

    #[error("factor {factor} of hypersurface {hypersurface} is not an affine-linear form")]
    NotLinear { hypersurface: usize, factor: usize },

    #[error("node set is not properly posed at degree {}", .0.degree)]
    Improper(Box<PpsnCertificate>),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("no decomposition with the required degree bounds exists")]
    NoDecomposition,

    #[error("configuration error: {0}")]
    Configuration(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the command line front end.
    ///
    /// 1 means a well-posedness or theorem-hypothesis failure, 2 means the
    /// input could not be understood.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::VariableOutOfRange { .. }
            | Error::DimensionMismatch { .. }
            | Error::InvalidProfile(_)
            | Error::NotLinear { .. }
            | Error::Io(_) => 2,
            _ => 1,
        }
    }
}
