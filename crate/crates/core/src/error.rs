use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of zero forms")]
    GcdOfZeroForms,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("resultant of degree-0 forms")]
    DegreeZero,
    #[error("non-scalar coefficient where a scalar was required")]
    NotScalar,
    #[error("degenerate Cayley form")]
    DegenerateCayleyForm,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("not a function of u\u{2227}v")]
    NotDecomposable,
    #[error("parametrization has base locus")]
    BaseLocus,
    #[error("covectors dependent")]
    DependentCovectors,
    #[error("invalid curve map: {0}")]
    InvalidCurve(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0}")]
    Attachment(String),
    #[error("sampling failed: {0}")]
    Sampling(String),
    #[error("parametrization is not in the good locus: {0}")]
    NotInU(String),
    #[error("both biforms are zero")]
    BothZero,
    #[error("{0}")]
    Parse(String),
}
