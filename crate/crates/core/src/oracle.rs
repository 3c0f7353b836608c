//! Independent series oracle: Maclaurin coefficients by direct Cauchy product.
//!
//! The oracle never consults a recurrence. Each family's coefficients are the
//! product of the Taylor series of h with the normalized Bessel core
//! `Σ c_{2k} z^{2k}`, where `c_0 = 1` and `c_{2k+2} = ∓c_{2k}/(4(k+1)(ν+k+1))`
//! (− for J, + for I). Cost is Θ(N²) scalar multiplications.

use crate::error::{Error, Result};
use crate::family::{BesselKind, FamilyId, HKind};
use crate::params::Params;
use crate::scalar::{GaussRat, Mode, Scalar};
use crate::sequence::{CoefficientSequence, Normalization, Source};

/// A truncated power series `Σ a_n z^n`, `n = 0..len`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    pub coeffs: Vec<Scalar>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Self { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Termwise scaling.
    pub fn scale(&self, c: &Scalar) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Termwise sum; the shorter series is padded with zeros.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        let get = |s: &Self, k: usize| s.coeffs.get(k).cloned();
        let coeffs = (0..n)
            .map(|k| match (get(self, k), get(other, k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => unreachable!(),
            })
            .collect();
        Self { coeffs }
    }
}

/// Normalized core `c_0..c_N` of `B_ν(z) = z^ν/(2^ν Γ(ν+1)) Σ c_n z^n`.
pub fn bessel_core(kind: BesselKind, nu: &Scalar, n_max: usize, mode: Mode) -> Result<PowerSeries> {
    let nu = nu.to_mode(mode);
    let zero = Scalar::zero(mode);
    let mut c = Vec::with_capacity(n_max + 1);
    let mut prev = Scalar::one(mode);
    for n in 0..=n_max {
        if n % 2 == 1 {
            c.push(zero.clone());
            continue;
        }
        if n > 0 {
            let k = (n / 2) as i64;
            // c_{2k} = ∓c_{2k−2} / (4k(ν+k))
            let den = (&nu + k) * (4 * k);
            let num = &prev * kind.core_sign();
            prev = num.checked_div(&den).ok_or_else(|| Error::DivisionByZero {
                context: format!("Bessel core at index {n}"),
            })?;
        }
        c.push(prev.clone());
    }
    Ok(PowerSeries::new(c))
}

/// Taylor coefficients `a_0..a_N` of h(z) at the given parameters.
///
/// For the two-sequence kinds this is the series of the function they
/// represent (sinh, cosh, sin, cos of pz).
pub fn h_series(h: HKind, params: &Params, n_max: usize) -> Result<PowerSeries> {
    let mode = params.mode;
    let p = &params.p;
    let zero = Scalar::zero(mode);
    // t_n = p^n / n!
    let exp_terms = || {
        let mut t = Vec::with_capacity(n_max + 1);
        let mut cur = Scalar::one(mode);
        for n in 0..=n_max {
            if n > 0 {
                cur = &(&cur * p) / &Scalar::int(n as i64).to_mode(mode);
            }
            t.push(cur.clone());
        }
        t
    };
    // Keeps the terms of one parity, with alternating signs when `alternate`.
    let trig = |odd: bool, alternate: bool| {
        let coeffs = exp_terms()
            .into_iter()
            .enumerate()
            .map(|(n, t)| {
                if (n % 2 == 1) != odd {
                    zero.clone()
                } else if alternate && (n / 2) % 2 == 1 {
                    -t
                } else {
                    t
                }
            })
            .collect();
        PowerSeries::new(coeffs)
    };
    Ok(match h {
        HKind::Exp => PowerSeries::new(exp_terms()),
        HKind::Sin | HKind::SinViaExp => trig(true, true),
        HKind::Cos | HKind::CosViaExp => trig(false, true),
        HKind::Sinh | HKind::SinhViaExp => trig(true, false),
        HKind::Cosh | HKind::CoshViaExp => trig(false, false),
        HKind::Power => {
            // (1 − θz)^p = Σ C(p, n) (−θ)^n z^n with the descending binomial.
            let theta = params.theta.as_ref().ok_or(Error::MissingParam { param: "theta", family: FamilyId::new(h, BesselKind::J) })?;
            let minus_theta = -theta;
            let mut coeffs = Vec::with_capacity(n_max + 1);
            let mut cur = Scalar::one(mode);
            for n in 0..=n_max {
                if n > 0 {
                    let k = (n - 1) as i64;
                    cur = &(&(&cur * &(p - k)) * &minus_theta) / &Scalar::int(n as i64).to_mode(mode);
                }
                coeffs.push(cur.clone());
            }
            PowerSeries::new(coeffs)
        }
        HKind::Arcsin => arcsin_series(p, n_max, mode),
        HKind::Arccos => {
            let mut s = arcsin_series(p, n_max, mode).scale(&Scalar::int(-1).to_mode(mode));
            let half_pi = Scalar::pi_times(GaussRat::ratio(1, 2), mode);
            s.coeffs[0] = &s.coeffs[0] + &half_pi;
            s
        }
        HKind::ExpArctan => {
            // e^{−p arctan z}; arctan z = Σ (−1)^k z^{2k+1}/(2k+1).
            let coeffs = (0..=n_max)
                .map(|n| {
                    if n % 2 == 0 {
                        zero.clone()
                    } else {
                        let sign = if (n / 2) % 2 == 0 { -1 } else { 1 };
                        &(p * sign) / &Scalar::int(n as i64).to_mode(mode)
                    }
                })
                .collect();
            series_exp(&PowerSeries::new(coeffs))?
        }
    })
}

/// arcsin(pz) = Σ_k (2k)!/(4^k (k!)² (2k+1)) (pz)^{2k+1}.
fn arcsin_series(p: &Scalar, n_max: usize, mode: Mode) -> PowerSeries {
    let zero = Scalar::zero(mode);
    let p2 = p * p;
    let mut coeffs = vec![zero; n_max + 1];
    // a_k p^{2k+1} with a_k = (2k)!/(4^k k!²), a_k = a_{k−1}(2k−1)/(2k).
    let mut a = p.clone();
    for k in 0.. {
        let n = 2 * k + 1;
        if n > n_max {
            break;
        }
        if k > 0 {
            let kk = k as i64;
            a = &(&(&a * &p2) * (2 * kk - 1)) / &Scalar::int(2 * kk).to_mode(mode);
        }
        coeffs[n] = &a / &Scalar::int(n as i64).to_mode(mode);
    }
    PowerSeries::new(coeffs)
}

/// `exp(g(z))` for a series with `g(0) = 0`, via `n e_n = Σ_{k=1}^{n} k g_k e_{n−k}`.
pub fn series_exp(g: &PowerSeries) -> Result<PowerSeries> {
    let Some(g0) = g.coeffs.first() else {
        return Ok(PowerSeries::new(Vec::new()));
    };
    if !g0.is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mode = g0.mode();
    let mut e = vec![Scalar::one(mode)];
    for n in 1..g.len() {
        let mut acc = Scalar::zero(mode);
        for k in 1..=n {
            if g.coeffs[k].is_zero() || e[n - k].is_zero() {
                continue;
            }
            acc = acc + &(&g.coeffs[k] * k as i64) * &e[n - k];
        }
        e.push(&acc / &Scalar::int(n as i64).to_mode(mode));
    }
    Ok(PowerSeries::new(e))
}

/// First `n_max + 1` coefficients of the product `a · b`.
pub fn cauchy_product(a: &PowerSeries, b: &PowerSeries, n_max: usize) -> Result<PowerSeries> {
    cauchy_product_counted(a, b, n_max).map(|(s, _)| s)
}

/// Like [`cauchy_product`], also returning the number of scalar
/// multiplications performed (products with an exact zero factor are skipped).
pub fn cauchy_product_counted(a: &PowerSeries, b: &PowerSeries, n_max: usize) -> Result<(PowerSeries, u64)> {
    let needed = n_max + 1;
    let got = a.len().min(b.len());
    if got < needed {
        return Err(Error::LengthMismatch { needed, got });
    }
    let mode = a.coeffs[0].mode();
    let mut count = 0u64;
    let mut out = Vec::with_capacity(needed);
    for n in 0..needed {
        let mut acc = Scalar::zero(mode);
        for k in 0..=n {
            let (x, y) = (&a.coeffs[k], &b.coeffs[n - k]);
            if x.is_zero() || y.is_zero() {
                continue;
            }
            acc = acc + x * y;
            count += 1;
        }
        out.push(acc);
    }
    Ok((PowerSeries::new(out), count))
}

/// Oracle coefficients `u_0..=u_N` of a family, in the family's stored form.
///
/// Two-sequence families store `u_n ± v_n`, which is twice (or 2i times) the
/// product coefficient; see [`Normalization`].
pub fn oracle_coeffs(family: FamilyId, params: &Params, n_max: usize) -> Result<CoefficientSequence> {
    let params = params.validate(family)?;
    let (series, _) = oracle_counted(family, &params, n_max)?;
    Ok(CoefficientSequence::new(family, params, series.coeffs, Source::Oracle))
}

/// The oracle with its multiplication count.
pub(crate) fn oracle_counted(family: FamilyId, params: &Params, n_max: usize) -> Result<(PowerSeries, u64)> {
    let mode = params.mode;
    let h = h_series(family.h, params, n_max)?;
    let core = bessel_core(family.bessel, &params.nu, n_max, mode)?;
    let (prod, count) = cauchy_product_counted(&h, &core, n_max)?;
    let factor = Normalization::for_family(family).stored_factor();
    if factor == GaussRat::one() {
        return Ok((prod, count));
    }
    Ok((prod.scale(&Scalar::gauss(factor).to_mode(mode)), count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(nu: &str, p: &str) -> Params {
        Params::parse(nu, p, Some("1/2"), Mode::Exact).unwrap()
    }

    #[test]
    fn core_matches_closed_form() {
        // c_{2k} = (∓1/4)^k / (k! (ν+1)_k); at ν = 0 for J: 1, −1/4, 1/64, −1/2304.
        let c = bessel_core(BesselKind::J, &Scalar::int(0), 6, Mode::Exact).unwrap();
        let want = [Scalar::int(1), Scalar::int(0), Scalar::ratio(-1, 4), Scalar::int(0), Scalar::ratio(1, 64), Scalar::int(0), Scalar::ratio(-1, 2304)];
        assert_eq!(c.coeffs, want);
        let c = bessel_core(BesselKind::I, &Scalar::int(0), 4, Mode::Exact).unwrap();
        assert_eq!(c.coeffs[4], Scalar::ratio(1, 64));
    }

    #[test]
    fn exp_series() {
        let s = h_series(HKind::Exp, &exact("0", "2"), 4).unwrap();
        assert_eq!(s.coeffs, [1, 2, 2].map(Scalar::int).into_iter().chain([Scalar::ratio(4, 3), Scalar::ratio(2, 3)]).collect::<Vec<_>>());
    }

    #[test]
    fn trig_series_signs() {
        let s = h_series(HKind::Sin, &exact("0", "1"), 5).unwrap();
        assert_eq!(s.coeffs[3], Scalar::ratio(-1, 6));
        assert_eq!(s.coeffs[5], Scalar::ratio(1, 120));
        let c = h_series(HKind::Cos, &exact("0", "1"), 4).unwrap();
        assert_eq!(c.coeffs[2], Scalar::ratio(-1, 2));
        let sh = h_series(HKind::Sinh, &exact("0", "1"), 3).unwrap();
        assert_eq!(sh.coeffs[3], Scalar::ratio(1, 6));
    }

    #[test]
    fn arcsin_and_arccos() {
        let s = h_series(HKind::Arcsin, &exact("0", "1"), 5).unwrap();
        assert_eq!(s.coeffs[3], Scalar::ratio(1, 6));
        assert_eq!(s.coeffs[5], Scalar::ratio(3, 40));
        let c = h_series(HKind::Arccos, &exact("0", "1"), 3).unwrap();
        assert_eq!(c.coeffs[0], Scalar::pi_times(GaussRat::ratio(1, 2), Mode::Exact));
        assert_eq!(c.coeffs[1], Scalar::int(-1));
    }

    #[test]
    fn power_series_binomial() {
        // (1 − z/2)^3 = 1 − 3z/2 + 3z²/4 − z³/8.
        let s = h_series(HKind::Power, &exact("0", "3"), 4).unwrap();
        let want = vec![Scalar::int(1), Scalar::ratio(-3, 2), Scalar::ratio(3, 4), Scalar::ratio(-1, 8), Scalar::int(0)];
        assert_eq!(s.coeffs, want);
    }

    #[test]
    fn exp_arctan_series() {
        // e^{−arctan z} = 1 − z + z²/2 + z³/6 − 7z⁴/24 + …
        let s = h_series(HKind::ExpArctan, &exact("0", "1"), 4).unwrap();
        let want = vec![Scalar::int(1), Scalar::int(-1), Scalar::ratio(1, 2), Scalar::ratio(1, 6), Scalar::ratio(-7, 24)];
        assert_eq!(s.coeffs, want);
    }

    #[test]
    fn series_exp_rejects_constant_term() {
        let g = PowerSeries::new(vec![Scalar::int(1), Scalar::int(1)]);
        assert_eq!(series_exp(&g), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn cauchy_length_check() {
        let a = PowerSeries::new(vec![Scalar::int(1); 3]);
        assert!(matches!(cauchy_product(&a, &a, 5), Err(Error::LengthMismatch { needed: 6, got: 3 })));
    }

    #[test]
    fn two_sequence_forms() {
        let params = exact("1/3", "2");
        let j = |h| FamilyId::new(h, BesselKind::J);
        let sinh = oracle_coeffs(j(HKind::Sinh), &params, 6).unwrap();
        let via = oracle_coeffs(j(HKind::SinhViaExp), &params, 6).unwrap();
        for (a, b) in sinh.coeffs.iter().zip(&via.coeffs) {
            assert_eq!(&(a * 2), b);
        }
        let sin = oracle_coeffs(j(HKind::Sin), &params, 6).unwrap();
        let via = oracle_coeffs(j(HKind::SinViaExp), &params, 6).unwrap();
        for (a, b) in sin.coeffs.iter().zip(&via.coeffs) {
            assert_eq!(&(a * 2).mul_i(), b);
        }
    }

    #[test]
    fn operation_count_is_quadratic() {
        let params = Params::parse("1/3", "2", None, Mode::Exact).unwrap();
        let f = FamilyId::new(HKind::Exp, BesselKind::J);
        let (_, c1) = oracle_counted(f, &params, 40).unwrap();
        let (_, c2) = oracle_counted(f, &params, 80).unwrap();
        let ratio = c2 as f64 / c1 as f64;
        assert!((3.5..4.5).contains(&ratio), "{ratio}");
    }
}
