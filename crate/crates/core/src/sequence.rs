//! Coefficient sequences and their normalization.

use serde::{Deserialize, Serialize};

use crate::family::{FamilyId, HKind, Parity};
use crate::params::Params;
use crate::scalar::{GaussRat, Scalar};

/// The prefactor that turns stored coefficients into series values.
///
/// `h(z)·B_ν(z) = prefactor · Σ u_n z^{n+ν}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `1 / (2^ν Γ(ν+1))`.
    Standard,
    /// `1 / (2^{ν+1} Γ(ν+1))`: the sum or difference of two exponential sequences.
    Half,
    /// `1 / (2^{ν+1} i Γ(ν+1))`: the difference of two sequences for sin(pz).
    HalfOverI,
}

impl Normalization {
    pub fn for_family(family: FamilyId) -> Self {
        match family.h {
            HKind::SinViaExp => Normalization::HalfOverI,
            HKind::SinhViaExp | HKind::CoshViaExp | HKind::CosViaExp => Normalization::Half,
            _ => Normalization::Standard,
        }
    }

    /// The factor relating stored coefficients to the product's normalized
    /// coefficients: stored = factor · (coefficients of h·B in standard form).
    pub fn stored_factor(self) -> GaussRat {
        match self {
            Normalization::Standard => GaussRat::one(),
            Normalization::Half => GaussRat::from_int(2),
            Normalization::HalfOverI => GaussRat::new(GaussRat::zero().re, GaussRat::from_int(2).re),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Normalization::Standard => "standard",
            Normalization::Half => "half",
            Normalization::HalfOverI => "half_over_i",
        }
    }
}

/// How a sequence was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// The (reconciled) printed recurrence.
    Recurrence,
    /// The series oracle, because the printed recurrence could not be reconciled.
    OracleFallback,
    /// The series oracle, by request.
    Oracle,
}

/// Coefficients `u_0..=u_N` of one family at one parameter point.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientSequence {
    pub family: FamilyId,
    pub params: Params,
    pub coeffs: Vec<Scalar>,
    pub parity: Parity,
    pub normalization: Normalization,
    pub source: Source,
}

impl CoefficientSequence {
    pub fn new(family: FamilyId, params: Params, coeffs: Vec<Scalar>, source: Source) -> Self {
        Self {
            family,
            params,
            coeffs,
            parity: family.parity(),
            normalization: Normalization::for_family(family),
            source,
        }
    }

    /// The highest index N.
    pub fn max_index(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The first `m + 1` coefficients as a sequence of its own.
    pub fn prefix(&self, m: usize) -> Self {
        Self { coeffs: self.coeffs[..=m.min(self.max_index())].to_vec(), ..self.clone() }
    }

    /// True when every coefficient the parity forces to zero is exactly zero.
    pub fn parity_holds(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(n, c)| !self.parity.forces_zero(n) || c.is_zero())
    }

    /// Whether the sequence came from the series oracle instead of a recurrence.
    pub fn used_fallback(&self) -> bool {
        self.source == Source::OracleFallback
    }
}
