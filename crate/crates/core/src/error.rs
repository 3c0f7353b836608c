//! Error type shared by every module.

use thiserror::Error;

use crate::family::FamilyId;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// ν ∈ {−1/2, −1, −3/2, …}: the denominator `2ν+n+1` vanishes at index `n`.
    #[error("excluded order nu = {nu}: denominator (n+1)(2nu+n+1) vanishes at n = {n}")]
    ExcludedOrder { nu: String, n: u64 },
    #[error("order nu = {nu} makes 4nu^2-1 vanish, which family {family} divides by")]
    HalfIntegerOrder { nu: String, family: FamilyId },
    #[error("family {family} requires parameter {param}")]
    MissingParam { param: &'static str, family: FamilyId },
    #[error("exact mode requires rational parameters; {param} is not a Gaussian rational")]
    NotExact { param: &'static str },
    #[error("precision must be at least {min} bits, got {got}")]
    InvalidPrecision { got: usize, min: usize },
    #[error("recurrence for {family} starts at n = {min_n}, requested n = {n}")]
    IndexTooSmall { family: FamilyId, n: i64, min_n: i64 },
    #[error("parity calibration failed for {family}: {detail}")]
    CalibrationFailed { family: FamilyId, detail: String },
    #[error("series exponential needs a zero constant term")]
    NonzeroConstantTerm,
    #[error("series too short: need {needed} coefficients, got {got}")]
    LengthMismatch { needed: usize, got: usize },
    #[error("division by zero in {context}")]
    DivisionByZero { context: String },
    #[error("z lies on the branch cut of z^nu (nu = {nu})")]
    BranchCut { nu: String },
    #[error("|z| = {abs_z} is outside the evaluation disc of radius {radius} for {family}")]
    OutsideDisc { family: FamilyId, abs_z: f64, radius: f64 },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
