use thiserror::Error;

/// Errors raised anywhere in the exact pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division: nonzero remainder")]
    InexactDivision,
    #[error("leading coefficient of p(s,k) depends on k: {0}")]
    KDependentLeading(String),
    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),
    #[error("line component degenerate to whole plane (l(k) is identically zero)")]
    DegenerateLine,
    #[error("Bezoutian size {size} is smaller than the input degree {degree}")]
    SizeTooSmall { size: usize, degree: usize },
    #[error("both polynomials are zero")]
    BothZero,
    #[error("constant polynomial where a nonconstant one is required")]
    ConstantPolynomial,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("factorization mismatch: {0}")]
    FactorizationMismatch(String),
    #[error("curve pencil is not affine in k")]
    NonAffinePencil,
    #[error("seed point ({0}, {1}) is not stable")]
    SeedNotStable(String, String),
    #[error("invalid box: {0}")]
    InvalidBox(String),
    #[error("invalid grid resolution {0} (need at least 2)")]
    InvalidResolution(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that stem from an invalid or degenerate problem
    /// instance rather than from I/O or a bug.
    pub fn is_degenerate_instance(&self) -> bool {
        matches!(
            self,
            Error::KDependentLeading(_) | Error::DegenerateInstance(_) | Error::DegenerateLine
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
