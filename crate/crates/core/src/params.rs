//! Family parameters ν, p, θ and their validation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::scalar::{exact_real, parse_gauss, GaussRat, Mode, Scalar, MIN_PRECISION};

/// The complex parameters of a family, all held in one arithmetic mode.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    /// Bessel order ν.
    pub nu: Scalar,
    /// Factor parameter p.
    pub p: Scalar,
    /// θ, used only by the power family.
    pub theta: Option<Scalar>,
    pub mode: Mode,
}

impl Params {
    /// Builds parameters in `mode`, converting every value to it.
    ///
    /// Exact mode rejects π-carrying inputs; float mode needs at least 53 bits.
    pub fn new(nu: Scalar, p: Scalar, theta: Option<Scalar>, mode: Mode) -> Result<Self> {
        if let Mode::Float { precision_bits } = mode {
            if precision_bits < MIN_PRECISION {
                return Err(Error::InvalidPrecision { got: precision_bits, min: MIN_PRECISION });
            }
        }
        let convert = |s: Scalar, param: &'static str| -> Result<Scalar> {
            if mode.is_exact() && s.to_gauss().is_none() {
                return Err(Error::NotExact { param });
            }
            Ok(s.to_mode(mode))
        };
        Ok(Self {
            nu: convert(nu, "nu")?,
            p: convert(p, "p")?,
            theta: theta.map(|t| convert(t, "theta")).transpose()?,
            mode,
        })
    }

    /// Exact parameters from Gaussian rationals.
    pub fn exact(nu: GaussRat, p: GaussRat, theta: Option<GaussRat>) -> Self {
        Self { nu: nu.into(), p: p.into(), theta: theta.map(Into::into), mode: Mode::Exact }
    }

    /// Parses literals in the `re[+im i]` syntax (see [`parse_gauss`]).
    pub fn parse(nu: &str, p: &str, theta: Option<&str>, mode: Mode) -> Result<Self> {
        let g = |s: &str| parse_gauss(s).map(Scalar::gauss);
        Self::new(g(nu)?, g(p)?, theta.map(g).transpose()?, mode)
    }

    /// The same values in another mode (floats become their exact binary value).
    pub fn to_mode(&self, mode: Mode) -> Self {
        Self {
            nu: self.nu.to_mode(mode),
            p: self.p.to_mode(mode),
            theta: self.theta.as_ref().map(|t| t.to_mode(mode)),
            mode,
        }
    }

    /// θ, or zero when absent.
    pub fn theta_or_zero(&self) -> Scalar {
        self.theta.clone().unwrap_or_else(|| Scalar::zero(self.mode))
    }

    pub fn with_p(&self, p: Scalar) -> Self {
        Self { p: p.to_mode(self.mode), ..self.clone() }
    }

    pub fn with_theta(&self, theta: Scalar) -> Self {
        Self { theta: Some(theta.to_mode(self.mode)), ..self.clone() }
    }

    /// Checks the family's hypotheses and returns the parameters unchanged.
    pub fn validate(&self, family: FamilyId) -> Result<Params> {
        if let Some(m) = excluded_index(&self.nu) {
            return Err(Error::ExcludedOrder { nu: self.nu.to_string(), n: m });
        }
        if family.h.excludes_half_integer() {
            if let Some(nu) = exact_real(&self.nu) {
                if nu.abs() == BigRational::new(1.into(), 2.into()) {
                    return Err(Error::HalfIntegerOrder { nu: self.nu.to_string(), family });
                }
            }
        }
        if family.h.uses_theta() && self.theta.is_none() {
            return Err(Error::MissingParam { param: "theta", family });
        }
        Ok(self.clone())
    }
}

/// For ν = −m/2 with m ≥ 1, the index n = m − 1 at which 2ν + n + 1 = 0.
fn excluded_index(nu: &Scalar) -> Option<u64> {
    let nu = exact_real(nu)?;
    let twice = nu * BigRational::from_integer(BigInt::from(2));
    if !twice.is_integer() || !twice.is_negative() || twice.is_zero() {
        return None;
    }
    (-twice.to_integer() - BigInt::from(1)).to_u64()
}

/// The default exact test points (ν, p, θ) used by verification.
///
/// Parameters avoid integer and half-integer ν so that sign errors cannot hide
/// behind accidental symmetry; the last point has complex ν.
pub fn default_test_points() -> Vec<Params> {
    [
        ("1/3", "2", "1/2"),
        ("3/7", "1/2+1/3i", "1/3"),
        ("5/3", "-3/5", "1/4"),
        ("1/3+1/5i", "3/4-1/2i", "-2/3"),
    ]
    .into_iter()
    .map(|(nu, p, theta)| Params::parse(nu, p, Some(theta), Mode::Exact).expect("valid literal"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{BesselKind, HKind};

    fn fam(h: HKind) -> FamilyId {
        FamilyId::new(h, BesselKind::J)
    }

    #[test]
    fn nu_minus_one_excluded_at_n_1() {
        let p = Params::parse("-1", "1", None, Mode::Exact).unwrap();
        assert!(matches!(p.validate(fam(HKind::Exp)), Err(Error::ExcludedOrder { n: 1, .. })));
        let p = Params::parse("-5/2", "1", None, Mode::Exact).unwrap();
        assert!(matches!(p.validate(fam(HKind::Exp)), Err(Error::ExcludedOrder { n: 4, .. })));
    }

    #[test]
    fn half_integer_only_for_quartic_denominator_families() {
        let p = Params::parse("1/2", "1", None, Mode::Exact).unwrap();
        assert!(matches!(p.validate(fam(HKind::Sin)), Err(Error::HalfIntegerOrder { .. })));
        assert!(p.validate(fam(HKind::Exp)).is_ok());
        assert!(p.validate(fam(HKind::SinViaExp)).is_ok());
        let p = Params::parse("-1/2", "1", None, Mode::Exact).unwrap();
        assert!(matches!(p.validate(fam(HKind::Arccos)), Err(Error::ExcludedOrder { n: 0, .. })));
    }

    #[test]
    fn float_mode_detects_excluded_order() {
        let p = Params::parse("-1.5", "1", None, Mode::float(128)).unwrap();
        assert!(matches!(p.validate(fam(HKind::Exp)), Err(Error::ExcludedOrder { n: 2, .. })));
    }

    #[test]
    fn power_needs_theta() {
        let p = Params::parse("1/3", "2", None, Mode::Exact).unwrap();
        assert!(matches!(p.validate(fam(HKind::Power)), Err(Error::MissingParam { .. })));
        assert!(p.with_theta(Scalar::int(0)).validate(fam(HKind::Power)).is_ok());
    }

    #[test]
    fn complex_and_positive_orders_pass() {
        for nu in ["0", "1/3+1/5i", "-3/7", "7", "-1/2+1/100i"] {
            let p = Params::parse(nu, "1", Some("1"), Mode::Exact).unwrap();
            for f in FamilyId::all() {
                assert!(p.validate(f).is_ok(), "{nu} {f}");
            }
        }
    }

    #[test]
    fn low_precision_rejected() {
        assert!(matches!(
            Params::parse("1", "1", None, Mode::Float { precision_bits: 32 }),
            Err(Error::InvalidPrecision { .. })
        ));
    }

    #[test]
    fn default_points_valid_everywhere() {
        for p in default_test_points() {
            for f in FamilyId::all() {
                p.validate(f).unwrap();
            }
        }
    }
}
