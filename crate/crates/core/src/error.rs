use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial takes negative values")]
    NotNonNegative,
    #[error("no decomposition into rational quadratics exists (exact mode)")]
    ExactModeIrrationalSplit,
    #[error("root is irrational (exact mode)")]
    ExactModeIrrationalRoot,
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("primal part is zero; the action is undefined")]
    ZeroPrimal,
    #[error("degenerate axis")]
    DegenerateAxis,
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("quadratic is reducible over the reals")]
    ReducibleInput,

    #[error("not a motion polynomial: C * conj(C) is not real")]
    NotMotionPolynomial,
    #[error("t - h is not a factor")]
    NotAFactor,
    #[error("leading coefficient of the linear remainder is not invertible")]
    NonInvertibleLeadingCoefficient,
    #[error("generic factorization fails: {0}")]
    NonGeneric(String),
    #[error("factorization product does not reproduce the input")]
    ProductMismatch,

    #[error("malformed quadratic translational motion polynomial: {0}")]
    MalformedTranslational(String),
    #[error("motion is not a circular translation")]
    NotCircular,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("no factorization exists: {0}")]
    NoFactorization(String),

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("parameter is a pole of the motion")]
    PoleAtParameter,
    #[error("vertical Darboux motion admits no factorization")]
    VerticalInput,
    #[error("the two factorizations of P coincide")]
    DegenerateP,

    #[error("dangling link: {0}")]
    DanglingLink(String),
    #[error("chains do not describe the same motion")]
    NotSameMotion,
    #[error("joint is singular at this parameter")]
    SingularParameter,
}
