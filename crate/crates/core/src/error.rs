//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot parse `{0}` as a rational number")]
    RationalParse(String),
    #[error("denominator polynomial is zero")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole: substituted denominator is identically zero")]
    PoleAtSubstitution,
    #[error("evaluation hits a pole of the rational function")]
    PoleAtValue,
    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series has zero constant term and no reciprocal")]
    SingularSeries,
    #[error("supplied square-root branch does not square to the constant term")]
    BranchMismatch,
    #[error("series composition needs an inner series with zero constant term")]
    CompositionDomain,
}

/// Errors raised while solving the functional equation order by order.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("truncation order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("fixed c must lie strictly between 0 and 1, got {0}")]
    FixedCOutOfRange(String),
    #[error("solver degeneracy: the linear coefficient of a_{order} vanishes identically")]
    Degenerate { order: usize },
    #[error("order-{order} residual is not affine in the unknown coefficient")]
    NonlinearResidual { order: usize },
    #[error("residual through order {order} did not stay solved while extending the table")]
    ResidualRegression { order: usize },
    #[error("solved odd coefficient a_{order} is nonzero, breaking the evenness consequence")]
    OddCoefficientNonzero { order: usize },
    #[error("table was solved only through order {max}, order {requested} is unavailable")]
    OrderOutOfRange { requested: usize, max: usize },
    #[error("operation requires a symbolic coefficient table")]
    SymbolicTableRequired,
    #[error("table is fixed at c = {fixed}, cannot evaluate at c = {requested}")]
    FixedCMismatch { fixed: String, requested: String },
}

/// Errors raised by the symmetry checker.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("internal consistency: direct reflection test and z-analyticity test disagree at n = {n}")]
    InconsistentChecks { n: usize },
}

/// Errors raised by exact root counting.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SturmError {
    #[error("root counting needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("interval endpoints are not ordered")]
    EmptyInterval,
    #[error("bracketed root count did not stabilize")]
    StabilizationFailed,
}

/// Errors raised while assembling the refutation verdict.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RefutationError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Sturm(#[from] SturmError),
}

/// Errors raised by the planar-map engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("map parameter c must lie strictly between 0 and 1, got {0}")]
    ParameterOutOfRange(f64),
    #[error("operation is undefined at c = 1/2")]
    HalfParameter,
    #[error("point ({x}, {y}) is the puncture of the map domain")]
    AtPuncture { x: f64, y: f64 },
    #[error("point ({x}, {y}) lies on or outside the unit circle bounding the map domain")]
    OutsideDisk { x: f64, y: f64 },
    #[error("|y| = {y} is not below min(c, 1-c) = {bound}")]
    AxisRangeExceeded { y: f64, bound: f64 },
    #[error("multiplier denominator c^2 - y^2 vanishes")]
    MultiplierSingular,
    #[error("|x| = {x} exceeds the trust radius {radius}")]
    TrustRegionExceeded { x: f64, radius: f64 },
    #[error("finite-difference derivative at the axis is not diagonal within tolerance")]
    DerivativeCheckFailed,
    #[error("fiber search failed: {reason}")]
    FiberBracket { reason: String },
}
