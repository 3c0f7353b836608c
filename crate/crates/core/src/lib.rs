//! Maclaurin coefficient recurrences for products h(z)·J_ν(z) and h(z)·I_ν(z).
//!
//! Every family stores the normalized coefficients u_n of
//! h(z)·B_ν(z) = z^ν / (2^ν Γ(ν+1)) · Σ u_n z^n (two-sequence families carry an
//! extra 1/2, or 1/(2i), in the prefactor; see [`Normalization`]).

pub mod analysis;
pub mod error;
pub mod family;
pub mod format;
pub mod oracle;
pub mod params;
pub mod recurrence;
pub mod scalar;
pub mod sequence;
pub mod verify;

pub use analysis::{bench, direct_value, evaluate, BenchResult, EvalResult};
pub use error::{Error, Result};
pub use family::{BesselKind, FamilyId, HKind, Parity};
pub use params::{default_test_points, Params};
pub use scalar::{BigComplex, ExactComplex, GaussRat, Mode, Scalar, DEFAULT_PRECISION};
pub use sequence::{CoefficientSequence, Normalization, Source};
pub use recurrence::{calibrate_parity, generate, Correction, ParityCalibration, RecurrenceSpec};
pub use verify::{Reconciliation, Status, VerificationReport};
