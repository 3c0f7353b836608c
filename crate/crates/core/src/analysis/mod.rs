//! Evaluation of truncated expansions, an independent direct evaluator, and
//! the recurrence-versus-convolution benchmark.

mod bench;
mod gamma;

pub use bench::{bench, fit_exponent, BenchResult, BENCH_SIZE_RANGE};
pub use gamma::gamma;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{BesselKind, FamilyId, HKind};
use crate::params::Params;
use crate::scalar::{exact_real, float_to_f64, BigComplex, Scalar, DEFAULT_PRECISION};
use crate::sequence::{CoefficientSequence, Normalization};

/// Guard bits carried by every evaluation before the final rounding.
const GUARD_BITS: usize = 64;

/// A truncated expansion evaluated at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalResult {
    pub z: Scalar,
    pub value: Scalar,
    /// N: the last included index.
    pub truncation_index: usize,
    /// `|u_N z^N|`, a heuristic size of the neglected tail (prefactor excluded).
    pub tail_estimate: f64,
}

/// Radius of convergence of the Maclaurin series of h, or `None` when h is entire.
pub fn convergence_radius(family: FamilyId, params: &Params) -> Option<f64> {
    let inv = |s: &Scalar| {
        let a = s.abs_f64();
        if a == 0.0 { f64::INFINITY } else { 1.0 / a }
    };
    match family.h {
        HKind::Power => Some(inv(&params.theta_or_zero())),
        HKind::Arcsin | HKind::Arccos => Some(inv(&params.p)),
        HKind::ExpArctan => Some(1.0),
        _ => None,
    }
}

/// The disc in which a 60-term expansion is expected to reach 128-bit-class accuracy.
///
/// `|z| ≤ 1` for entire factors; half the convergence radius for the power
/// factor; a quarter of it for the arcsine, arccosine and arctangent factors,
/// whose coefficients decay only geometrically.
pub fn safe_radius(family: FamilyId, params: &Params) -> f64 {
    match (family.h, convergence_radius(family, params)) {
        (_, None) => 1.0,
        (HKind::Power, Some(r)) => (r / 2.0).min(1.0),
        (_, Some(r)) => (r / 4.0).min(1.0),
    }
}

fn precision_of(params: &Params) -> usize {
    params.mode.precision().unwrap_or(DEFAULT_PRECISION)
}

/// Checks the disc and branch-cut preconditions shared by both evaluators.
fn check_point(family: FamilyId, params: &Params, z: &BigComplex) -> Result<()> {
    let abs_z = float_to_f64(&z.abs());
    if let Some(radius) = convergence_radius(family, params) {
        if abs_z >= radius {
            return Err(Error::OutsideDisc { family, abs_z, radius });
        }
    }
    if z.is_real() && z.re().is_negative() && nonneg_integer(&params.nu).is_none() {
        return Err(Error::BranchCut { nu: params.nu.to_string() });
    }
    Ok(())
}

fn nonneg_integer(nu: &Scalar) -> Option<u32> {
    let r = exact_real(nu)?;
    (r.is_integer() && !r.is_negative()).then(|| r.to_integer().to_u32()).flatten()
}

/// `(z/2)^ν / Γ(ν+1)` on the principal branch.
fn bessel_prefactor(nu: &Scalar, z: &BigComplex, wp: usize) -> Result<BigComplex> {
    let half_z = z.mul(&BigComplex::from_f64(0.5, 0.0, wp));
    if let Some(k) = nonneg_integer(nu) {
        let mut fact = BigComplex::from_i64(1, wp);
        for j in 2..=k as i64 {
            fact = fact.mul(&BigComplex::from_i64(j, wp));
        }
        let pow = Scalar::Float(half_z).powi(k).to_float(wp);
        return Ok(pow.checked_div(&fact).expect("nonzero factorial"));
    }
    let nu_f = nu.to_float(wp);
    if z.is_zero() {
        return if float_to_f64(nu_f.re()) > 0.0 {
            Ok(BigComplex::zero(wp))
        } else {
            Err(Error::DivisionByZero { context: format!("z^nu at z = 0 with nu = {nu}") })
        };
    }
    let one = BigComplex::from_i64(1, wp);
    let g = gamma(&nu_f.add(&one), wp).ok_or_else(|| Error::DivisionByZero { context: format!("Gamma(nu+1) at nu = {nu}") })?;
    let pow = nu_f.mul(&half_z.ln()).exp();
    Ok(pow.checked_div(&g).expect("Gamma has no zeros"))
}

/// Evaluates `prefactor · Σ_{n≤N} u_n z^n` by Horner's rule.
///
/// The prefactor is `z^ν / (2^ν Γ(ν+1))`, times 1/2 or 1/(2i) for the
/// two-sequence normalizations. Float sequences evaluate at their own
/// precision; exact ones at the default precision.
pub fn evaluate(seq: &CoefficientSequence, z: &Scalar) -> Result<EvalResult> {
    let prec = precision_of(&seq.params);
    evaluate_at(seq, z, prec)
}

/// [`evaluate`] at an explicit output precision.
pub fn evaluate_at(seq: &CoefficientSequence, z: &Scalar, prec: usize) -> Result<EvalResult> {
    let wp = prec + GUARD_BITS;
    let zf = z.to_float(wp);
    check_point(seq.family, &seq.params, &zf)?;
    let n = seq.max_index();
    let mut acc = BigComplex::zero(wp);
    for c in seq.coeffs.iter().rev() {
        acc = acc.mul(&zf).add(&c.to_float(wp));
    }
    let last = seq.coeffs.last().map(|c| c.to_float(wp)).unwrap_or_else(|| BigComplex::zero(wp));
    let tail = last.mul(&Scalar::Float(zf.clone()).powi(n as u32).to_float(wp));
    let mut value = acc.mul(&bessel_prefactor(&seq.params.nu, &zf, wp)?);
    value = match seq.normalization {
        Normalization::Standard => value,
        Normalization::Half => value.mul(&BigComplex::from_f64(0.5, 0.0, wp)),
        Normalization::HalfOverI => value.mul(&BigComplex::from_f64(0.0, -0.5, wp)),
    };
    Ok(EvalResult {
        z: z.clone(),
        value: Scalar::Float(value.with_precision(prec)),
        truncation_index: n,
        tail_estimate: float_to_f64(&tail.abs()),
    })
}

/// h(z) from its closed form on principal branches.
fn h_value(h: HKind, params: &Params, z: &BigComplex, wp: usize) -> BigComplex {
    let p = params.p.to_float(wp);
    let pz = p.mul(z);
    let one = BigComplex::from_i64(1, wp);
    match h {
        HKind::Exp => pz.exp(),
        HKind::Sin | HKind::SinViaExp => pz.sin(),
        HKind::Cos | HKind::CosViaExp => pz.cos(),
        HKind::Sinh | HKind::SinhViaExp => pz.sinh(),
        HKind::Cosh | HKind::CoshViaExp => pz.cosh(),
        HKind::Power => {
            let base = one.sub(&params.theta_or_zero().to_float(wp).mul(z));
            if base.is_zero() { BigComplex::zero(wp) } else { p.mul(&base.ln()).exp() }
        }
        HKind::ExpArctan => p.mul(&z.atan()).neg().exp(),
        HKind::Arcsin => pz.asin(),
        HKind::Arccos => BigComplex::pi(wp).mul(&BigComplex::from_f64(0.5, 0.0, wp)).sub(&pz.asin()),
    }
}

/// `J_ν(z)` or `I_ν(z)` by direct summation of
/// `(z/2)^ν Σ_{k<terms} (∓z²/4)^k / (k! Γ(ν+k+1))`.
fn bessel_value(kind: BesselKind, nu: &Scalar, z: &BigComplex, terms: usize, wp: usize) -> Result<BigComplex> {
    let nu_f = nu.to_float(wp);
    let q = z.mul(z).mul(&BigComplex::from_f64(0.25, 0.0, wp));
    let q = if kind == BesselKind::J { q.neg() } else { q };
    let mut term = BigComplex::from_i64(1, wp);
    let mut sum = BigComplex::zero(wp);
    for k in 0..terms as i64 {
        if k > 0 {
            // term_k / term_{k−1} = q / (k (ν + k))
            let den = nu_f.add(&BigComplex::from_i64(k, wp)).mul(&BigComplex::from_i64(k, wp));
            term = term.mul(&q).checked_div(&den).ok_or_else(|| Error::DivisionByZero { context: "nu + k".into() })?;
        }
        sum = sum.add(&term);
    }
    Ok(sum.mul(&bessel_prefactor(nu, z, wp)?))
}

/// h(z)·B_ν(z) computed without any coefficient recurrence or convolution:
/// h from its closed form and the Bessel function by direct summation of
/// `terms` terms of its defining series.
pub fn direct_value(family: FamilyId, params: &Params, z: &Scalar, terms: usize) -> Result<Scalar> {
    let params = params.validate(family)?;
    let prec = precision_of(&params);
    let wp = prec + GUARD_BITS;
    let zf = z.to_float(wp);
    check_point(family, &params, &zf)?;
    let h = h_value(family.h, &params, &zf, wp);
    let b = bessel_value(family.bessel, &params.nu, &zf, terms, wp)?;
    Ok(Scalar::Float(h.mul(&b).with_precision(prec)))
}

/// Residual of an evaluation against [`direct_value`]: `|a − b| / max(1, |b|)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub direct_value: String,
    pub abs_diff: f64,
    pub rel_err: f64,
}

/// Compares an evaluation against the direct evaluator at `terms` Bessel terms.
pub fn residual(seq: &CoefficientSequence, eval: &EvalResult, terms: usize) -> Result<Residual> {
    let direct = direct_value(seq.family, &seq.params, &eval.z, terms)?;
    let prec = direct.mode().precision().unwrap_or(DEFAULT_PRECISION);
    let diff = eval.value.to_float(prec).sub(&direct.to_float(prec));
    let abs_diff = float_to_f64(&diff.abs());
    let scale = direct.abs_f64().max(1.0);
    Ok(Residual { direct_value: direct.to_string(), abs_diff, rel_err: abs_diff / scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::generate;
    use crate::scalar::{parse_gauss, Mode};

    fn fam(s: &str) -> FamilyId {
        s.parse().unwrap()
    }

    fn params(nu: &str, p: &str, theta: Option<&str>) -> Params {
        Params::parse(nu, p, theta, Mode::float(128)).unwrap()
    }

    fn z(s: &str) -> Scalar {
        Scalar::gauss(parse_gauss(s).unwrap()).to_mode(Mode::float(128))
    }

    #[test]
    fn exp_j_at_origin_is_one() {
        let seq = generate(fam("exp-J"), &params("0", "0", None), 10).unwrap();
        let r = evaluate(&seq, &z("0")).unwrap();
        assert_eq!(r.value.to_f64_pair(), (1.0, 0.0));
        assert_eq!(direct_value(fam("exp-J"), &params("0", "0", None), &z("0"), 5).unwrap().to_f64_pair(), (1.0, 0.0));
        assert_eq!(direct_value(fam("cos-J"), &params("0", "1", None), &z("0"), 5).unwrap().to_f64_pair(), (1.0, 0.0));
    }

    #[test]
    fn positive_order_vanishes_at_origin() {
        let seq = generate(fam("sinh-I"), &params("3/7", "2", None), 10).unwrap();
        assert!(evaluate(&seq, &z("0")).unwrap().value.is_zero());
    }

    #[test]
    fn exp_j_matches_direct_value() {
        let p = params("0", "1", None);
        let seq = generate(fam("exp-J"), &p, 40).unwrap();
        let e = evaluate(&seq, &z("1/2")).unwrap();
        let r = residual(&seq, &e, 80).unwrap();
        assert!(r.rel_err < 1e-20, "{r:?}");
        // e^{1/2} J_0(1/2), independent double-precision reference.
        let (re, _) = e.value.to_f64_pair();
        assert!((re - 1.6487212707001282 * 0.938469807240813).abs() < 1e-14);
    }

    #[test]
    fn power_j_reference_point() {
        let p = params("1/3", "2", Some("1/2"));
        let seq = generate(fam("power-J"), &p, 60).unwrap();
        let e = evaluate(&seq, &z("1/4")).unwrap();
        let r = residual(&seq, &e, 80).unwrap();
        assert!(r.rel_err < 1e-20, "{r:?}");
    }

    #[test]
    fn two_sequence_normalization() {
        let p = params("1/3", "3/4-1/2i", None);
        for f in ["sin_via_exp-J", "cosh_via_exp-I", "sin-J", "cos_via_exp-I"] {
            let seq = generate(fam(f), &p, 60).unwrap();
            let e = evaluate(&seq, &z("1/3+1/2i")).unwrap();
            let r = residual(&seq, &e, 80).unwrap();
            assert!(r.rel_err < 1e-20, "{f}: {r:?}");
        }
    }

    #[test]
    fn preconditions() {
        let p = params("1/3", "2", Some("1/2"));
        let seq = generate(fam("power-J"), &p, 10).unwrap();
        assert!(matches!(evaluate(&seq, &z("2")), Err(Error::OutsideDisc { .. })));
        assert!(matches!(evaluate(&seq, &z("-1/4")), Err(Error::BranchCut { .. })));
        let seq = generate(fam("exp-J"), &params("2", "1", None), 10).unwrap();
        assert!(evaluate(&seq, &z("-1/4")).is_ok());
    }

    #[test]
    fn radii() {
        let p = params("1/3", "2", Some("-1/4"));
        assert_eq!(convergence_radius(fam("power-I"), &p), Some(4.0));
        assert_eq!(safe_radius(fam("power-I"), &p), 1.0);
        assert_eq!(safe_radius(fam("arcsin-J"), &p), 0.125);
        assert_eq!(safe_radius(fam("exp_arctan-J"), &p), 0.25);
        assert_eq!(safe_radius(fam("cosh-J"), &p), 1.0);
    }

    #[test]
    fn tail_estimate_is_last_term() {
        let seq = generate(fam("exp-I"), &params("0", "1", None), 8).unwrap();
        let e = evaluate(&seq, &z("1/2")).unwrap();
        let want = seq.coeffs[8].abs_f64() * 0.5f64.powi(8);
        assert!((e.tail_estimate - want).abs() <= 1e-15 * want);
    }
}
