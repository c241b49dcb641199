use thiserror::Error;

use crate::linalg::IntVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension {dim} exceeds the supported bound {max}")]
    DimensionBound { dim: usize, max: usize },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("fan hypothesis not satisfied: {0}")]
    Precondition(String),

    #[error("sum of collection {collection:?} is not located in any cone of the fan")]
    NotLocated { collection: Vec<usize> },

    #[error("primitive relation for {collection:?} has non-integral coefficients")]
    Integrality { collection: Vec<usize> },

    #[error("property (*) criteria disagree: relation criterion {relations}, boundary criterion {boundary}")]
    CriteriaDisagreement { relations: bool, boundary: bool },

    #[error("weight vector is not strictly inside the secondary cone of the maximal triangulation")]
    NotInterior,

    #[error("lower hull cell {cell:?} is not a simplex")]
    NonSimplicialCell { cell: Vec<usize> },

    #[error("{0} is not a relation of the point configuration")]
    NotARelation(IntVector),

    #[error("exponent {0} does not fit in a machine word")]
    ExponentOverflow(IntVector),

    #[error("binomial is zero")]
    ZeroBinomial,

    #[error("Groebner completion exceeded the degree cap {cap}")]
    DegreeCapExceeded { cap: u32 },

    #[error("monomial reduction exceeded {0} steps")]
    ReductionGuard(usize),

    #[error("candidate basis failed the S-pair check")]
    VerificationFailed,

    #[error("invalid cone tau: {0}")]
    TauInvalid(String),

    #[error("primitive relation {0} has a negative coordinate in the series basis")]
    BasisNotInDualCone(IntVector),

    #[error("coordinate a[{0}] is zero")]
    ZeroCoordinate(usize),

    #[error("coefficients outside the convergence regime: |a0| = {a0} <= sum |ai| = {rest}")]
    ConvergenceRegime { a0: f64, rest: f64 },

    #[error("near-zero denominator |f| = {value:e} at grid point {point:?}")]
    NearZeroDenominator { value: f64, point: Vec<usize> },
}
