use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient {name} is not finite ({value})")]
    NonFinite { name: &'static str, value: f64 },

    #[error("leading coefficient is zero")]
    ZeroLeading,

    #[error("no triangle: a^2 - 3b = {value} is not positive, or the cubic lacks three real roots")]
    NoTriangle { value: f64 },

    #[error("no tetrahedron: 3a^2 - 8b = {value} is not positive")]
    NoTetrahedron { value: f64 },

    #[error("arccos argument {value} lies outside [-1, 1] beyond tolerance")]
    OutOfRange { value: f64 },

    #[error("Sturm constant {name} = {value} is within tolerance of zero")]
    AmbiguousSign { name: &'static str, value: f64 },

    #[error("Sturm sign pattern {pattern} cannot occur")]
    ImpossibleSignPattern { pattern: String },

    #[error("quartic does not have four real roots in the triangle band: {reason}")]
    NotFourReal { reason: String },

    #[error("the discriminant of the free-term polynomial vanishes within tolerance ({value})")]
    DegenerateAtBoundary { value: f64 },

    #[error("unachievable target: {reason}")]
    Unachievable { reason: String },

    #[error("synthesized quartic classified as {got}, expected {expected}")]
    RoundTripMismatch { expected: String, got: String },

    #[error(transparent)]
    Oracle(#[from] crate::oracle::OracleError),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
