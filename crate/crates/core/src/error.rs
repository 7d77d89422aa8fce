use thiserror::Error;

use crate::algebra::linalg::SolveError;
use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotPartition(Vec<u32>),

    #[error("parts {0:?} are not strictly decreasing")]
    NotStrict(Vec<u32>),

    #[error("{what} is not contained in {region}")]
    Containment { what: String, region: String },

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("expected a class of degree {expected}, got degree {got}")]
    WrongDegree { expected: u32, got: u32 },

    #[error("generator {0} is not allowed here")]
    ForeignGenerator(String),

    #[error("both bundles use the {0} generator family")]
    FamilyClash(String),

    #[error("polynomial mixes generator families")]
    MixedFamilies,

    #[error("substitution for {generator} is not homogeneous of degree {degree}")]
    DegreeViolation { generator: String, degree: u32 },

    #[error("polynomial is not expressible by Schur classes with at most {0} rows")]
    Inexpressible(usize),

    #[error("exact solve produced a non-integral coefficient {0}")]
    NonIntegral(String),

    #[error("work bound exceeded: {0}")]
    WorkBound(String),

    #[error("product of two basis classes {0} and {1} is not defined here")]
    BasisProduct(String, String),

    #[error(transparent)]
    Solve(#[from] SolveError),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
