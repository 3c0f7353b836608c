//! Arbitrary-precision complex floats built on `astro-float` reals.
//!
//! Precision is always a whole number of 64-bit words. Conversions to and from
//! rationals are exact (float → rational) or correctly rounded to nearest-even
//! (rational → float), which is what makes decimal serialization bit-exact.

use std::cell::RefCell;
use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::exact::GaussRat;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BITS: usize = 64;

/// Rounds a requested precision up to whole 64-bit words.
pub fn normalize_precision(bits: usize) -> usize {
    bits.max(1).div_ceil(WORD_BITS) * WORD_BITS
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("allocating constants cache"));
}

pub(crate) fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// π rounded to `prec` bits.
pub fn pi(prec: usize) -> BigFloat {
    with_consts(|cc| cc.pi(prec, RM))
}

/// Exact value of a finite float as a rational.
///
/// # Panics
/// On NaN or infinity.
pub fn float_to_rational(x: &BigFloat) -> BigRational {
    let (words, _, sign, e, _) = x.as_raw_parts().expect("finite float");
    if x.is_zero() {
        return BigRational::zero();
    }
    let digits: Vec<u32> = words.iter().flat_map(|w| [*w as u32, (*w >> 32) as u32]).collect();
    let m = BigInt::from_biguint(
        if sign == Sign::Neg { BigSign::Minus } else { BigSign::Plus },
        BigUint::new(digits),
    );
    let shift = e as i64 - (words.len() * WORD_BITS) as i64;
    if shift >= 0 {
        BigRational::from_integer(m << shift as usize)
    } else {
        BigRational::new(m, BigInt::one() << (-shift) as usize)
    }
}

/// `r` rounded to nearest-even at `prec` bits.
pub fn rational_to_float(r: &BigRational, prec: usize) -> BigFloat {
    let prec = normalize_precision(prec);
    if r.is_zero() {
        return BigFloat::new(prec);
    }
    let num = r.numer().abs();
    let den = r.denom().clone();
    // Scale so the integer quotient carries at least prec + 2 bits.
    let k = prec as i64 + 2 + den.bits() as i64 - num.bits() as i64;
    let (q, rem) = if k >= 0 {
        (num << k as usize).div_rem(&den)
    } else {
        num.div_rem(&(den << (-k) as usize))
    };
    let excess = q.bits() as usize - prec;
    let low_mask = (BigInt::one() << excess) - 1;
    let low = &q & &low_mask;
    let mut m = q >> excess;
    let half = BigInt::one() << (excess - 1);
    let round_up = match low.cmp(&half) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => !rem.is_zero() || m.is_odd(),
    };
    let mut scale = excess as i64 - k;
    if round_up {
        m += 1;
        if m.bits() as usize > prec {
            m >>= 1;
            scale += 1;
        }
    }
    let (_, digits) = m.to_u64_digits();
    let mut words: Vec<Word> = digits;
    words.resize(prec / WORD_BITS, 0);
    let sign = if r.is_negative() { Sign::Neg } else { Sign::Pos };
    let e = scale + prec as i64;
    BigFloat::from_words(&words, sign, e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

/// Nearest `f64` (truncated mantissa; adequate for error metrics and display).
pub fn float_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let top = *words.last().unwrap_or(&0) as f64;
    let mut v = top;
    let mut exp = e as i64 - WORD_BITS as i64;
    while exp > 0 {
        let step = exp.min(512);
        v *= 2f64.powi(step as i32);
        exp -= step;
        if v.is_infinite() {
            break;
        }
    }
    while exp < 0 {
        let step = (-exp).min(512);
        v /= 2f64.powi(step as i32);
        exp += step;
        if v == 0.0 {
            break;
        }
    }
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

/// Number of significant decimal digits that round-trip `prec` bits.
pub fn decimal_digits(prec: usize) -> usize {
    (prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1
}

/// Correctly rounded scientific decimal (`d.ddde±x`, trailing zeros trimmed).
///
/// Uses enough digits that [`rational_to_float`] of the printed value recovers
/// `x` exactly at the same precision.
pub fn format_decimal(x: &BigFloat, prec: usize) -> String {
    let r = float_to_rational(x);
    format_rational_decimal(&r, decimal_digits(normalize_precision(prec)))
}

pub(crate) fn format_rational_decimal(r: &BigRational, digits: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let est = (a.numer().bits() as f64 - a.denom().bits() as f64) * std::f64::consts::LOG10_2;
    let mut q10 = est.floor() as i64 - digits as i64 + 1;
    let lo = BigInt::from(10u32).pow(digits as u32 - 1);
    let hi = &lo * 10;
    let n = loop {
        let scaled = if q10 >= 0 {
            &a / BigRational::from_integer(BigInt::from(10u32).pow(q10 as u32))
        } else {
            &a * BigRational::from_integer(BigInt::from(10u32).pow((-q10) as u32))
        };
        let n = round_half_even(&scaled);
        if n >= hi {
            q10 += 1;
        } else if n < lo {
            q10 -= 1;
        } else {
            break n;
        }
    };
    let s = n.to_string();
    let (head, tail) = s.split_at(1);
    let tail = tail.trim_end_matches('0');
    let exp = q10 + digits as i64 - 1;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(head);
    if !tail.is_empty() {
        out.push('.');
        out.push_str(tail);
    }
    if exp != 0 {
        out.push_str(&format!("e{exp}"));
    }
    out
}

fn round_half_even(r: &BigRational) -> BigInt {
    let (q, rem) = r.numer().div_rem(r.denom());
    let twice: BigInt = rem.abs() * 2;
    match twice.cmp(r.denom()) {
        Ordering::Less => q,
        Ordering::Greater => q + r.numer().signum(),
        Ordering::Equal if q.is_even() => q,
        Ordering::Equal => q + r.numer().signum(),
    }
}

/// A complex number with `astro-float` components at a fixed precision.
#[derive(Clone, Debug)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    prec: usize,
}

impl PartialEq for BigComplex {
    /// Value equality of both components (precision is not compared).
    fn eq(&self, other: &Self) -> bool {
        self.re.cmp(&other.re) == Some(0) && self.im.cmp(&other.im) == Some(0)
    }
}

impl BigComplex {
    pub fn zero(prec: usize) -> Self {
        let prec = normalize_precision(prec);
        Self { re: BigFloat::new(prec), im: BigFloat::new(prec), prec }
    }

    pub fn from_parts(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        Self { re, im, prec: normalize_precision(prec) }
    }

    pub fn from_real(re: BigFloat, prec: usize) -> Self {
        let prec = normalize_precision(prec);
        Self { re, im: BigFloat::new(prec), prec }
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        let prec = normalize_precision(prec);
        Self::from_real(BigFloat::from_i64(v, prec), prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        let prec = normalize_precision(prec);
        Self { re: BigFloat::from_f64(re, prec), im: BigFloat::from_f64(im, prec), prec }
    }

    pub fn from_gauss(g: &GaussRat, prec: usize) -> Self {
        let prec = normalize_precision(prec);
        let conv = |r: &BigRational| match (r.is_integer(), r.numer().to_i64()) {
            (true, Some(v)) => BigFloat::from_i64(v, prec),
            _ => rational_to_float(r, prec),
        };
        Self { re: conv(&g.re), im: conv(&g.im), prec }
    }

    /// Exact rational value of both components.
    pub fn to_gauss(&self) -> GaussRat {
        GaussRat::new(float_to_rational(&self.re), float_to_rational(&self.im))
    }

    pub fn pi(prec: usize) -> Self {
        let prec = normalize_precision(prec);
        Self::from_real(pi(prec), prec)
    }

    pub fn i(prec: usize) -> Self {
        let prec = normalize_precision(prec);
        Self { re: BigFloat::new(prec), im: BigFloat::from_i64(1, prec), prec }
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.im.is_nan() || self.re.is_inf() || self.im.is_inf())
    }

    /// Re-rounds both components to `prec` bits.
    pub fn with_precision(&self, prec: usize) -> Self {
        let prec = normalize_precision(prec);
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        re.set_precision(prec, RM).expect("precision change");
        im.set_precision(prec, RM).expect("precision change");
        Self { re, im, prec }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (float_to_f64(&self.re), float_to_f64(&self.im))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.prec.max(rhs.prec);
        let im = if self.im.is_zero() && rhs.im.is_zero() {
            BigFloat::new(p)
        } else {
            self.im.add(&rhs.im, p, RM)
        };
        Self { re: self.re.add(&rhs.re, p, RM), im, prec: p }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.prec.max(rhs.prec);
        let im = if self.im.is_zero() && rhs.im.is_zero() {
            BigFloat::new(p)
        } else {
            self.im.sub(&rhs.im, p, RM)
        };
        Self { re: self.re.sub(&rhs.re, p, RM), im, prec: p }
    }

    pub fn neg(&self) -> Self {
        Self { re: self.re.neg(), im: self.im.neg(), prec: self.prec }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: self.im.neg(), prec: self.prec }
    }

    /// Product; zero imaginary parts are short-circuited (the common real case).
    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.prec.max(rhs.prec);
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Self { re: self.re.mul(&rhs.re, p, RM), im: BigFloat::new(p), prec: p },
            (true, false) => Self { re: self.re.mul(&rhs.re, p, RM), im: self.re.mul(&rhs.im, p, RM), prec: p },
            (false, true) => Self { re: self.re.mul(&rhs.re, p, RM), im: self.im.mul(&rhs.re, p, RM), prec: p },
            (false, false) => {
                let re = self.re.mul(&rhs.re, p, RM).sub(&self.im.mul(&rhs.im, p, RM), p, RM);
                let im = self.re.mul(&rhs.im, p, RM).add(&self.im.mul(&rhs.re, p, RM), p, RM);
                Self { re, im, prec: p }
            }
        }
    }

    pub fn mul_real(&self, k: &BigFloat) -> Self {
        let p = self.prec;
        Self { re: self.re.mul(k, p, RM), im: self.im.mul(k, p, RM), prec: p }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Self { re: self.im.neg(), im: self.re.clone(), prec: self.prec }
    }

    /// Quotient, or `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let p = self.prec.max(rhs.prec);
        if rhs.im.is_zero() {
            return Some(Self { re: self.re.div(&rhs.re, p, RM), im: self.im.div(&rhs.re, p, RM), prec: p });
        }
        // Smith's algorithm avoids overflow in the squared modulus.
        let (c, d) = (&rhs.re, &rhs.im);
        // `BigFloat::abs_cmp` compares signed values, so compare moduli explicitly.
        if c.abs().cmp(&d.abs()).unwrap_or(0) >= 0 {
            let r = d.div(c, p, RM);
            let den = c.add(&d.mul(&r, p, RM), p, RM);
            let re = self.re.add(&self.im.mul(&r, p, RM), p, RM).div(&den, p, RM);
            let im = self.im.sub(&self.re.mul(&r, p, RM), p, RM).div(&den, p, RM);
            Some(Self { re, im, prec: p })
        } else {
            let r = c.div(d, p, RM);
            let den = c.mul(&r, p, RM).add(d, p, RM);
            let re = self.re.mul(&r, p, RM).add(&self.im, p, RM).div(&den, p, RM);
            let im = self.im.mul(&r, p, RM).sub(&self.re, p, RM).div(&den, p, RM);
            Some(Self { re, im, prec: p })
        }
    }

    /// Whether `|self − reference| ≤ 2^{-bits}·|reference|`, up to a factor of two.
    ///
    /// Compares binary exponents, so it works far outside the `f64` range.
    pub fn agrees_to(&self, reference: &Self, bits: usize) -> bool {
        let diff = self.sub(reference);
        if diff.is_zero() {
            return true;
        }
        match (diff.abs().exponent(), reference.abs().exponent()) {
            (Some(d), Some(r)) => (d as i64) <= r as i64 - bits as i64,
            _ => false,
        }
    }

    /// Modulus.
    pub fn abs(&self) -> BigFloat {
        let p = self.prec;
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.re.mul(&self.re, p + 64, RM).add(&self.im.mul(&self.im, p + 64, RM), p + 64, RM).sqrt(p, RM)
    }

    /// Principal argument in (−π, π].
    pub fn arg(&self) -> BigFloat {
        let p = self.prec;
        let (x, y) = (&self.re, &self.im);
        if x.is_zero() {
            if y.is_zero() {
                return BigFloat::new(p);
            }
            let half_pi = pi(p).div(&BigFloat::from_i64(2, p), p, RM);
            return if y.is_negative() { half_pi.neg() } else { half_pi };
        }
        let base = with_consts(|cc| y.div(x, p + 64, RM).atan(p + 64, RM, cc));
        let out = if x.is_positive() {
            base
        } else if y.is_negative() {
            base.sub(&pi(p + 64), p + 64, RM)
        } else {
            base.add(&pi(p + 64), p + 64, RM)
        };
        let mut out = out;
        out.set_precision(p, RM).expect("precision change");
        out
    }

    pub fn exp(&self) -> Self {
        let p = self.prec;
        let (m, s, c) = with_consts(|cc| {
            let m = self.re.exp(p, RM, cc);
            if self.im.is_zero() {
                return (m, BigFloat::new(p), BigFloat::from_i64(1, p));
            }
            (m, self.im.sin(p, RM, cc), self.im.cos(p, RM, cc))
        });
        Self { re: m.mul(&c, p, RM), im: m.mul(&s, p, RM), prec: p }
    }

    /// Principal logarithm.
    ///
    /// # Panics
    /// At zero.
    pub fn ln(&self) -> Self {
        assert!(!self.is_zero(), "logarithm of zero");
        let p = self.prec;
        let r = self.abs();
        let re = with_consts(|cc| r.ln(p, RM, cc));
        Self { re, im: self.arg(), prec: p }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec;
        if self.is_zero() {
            return Self::zero(p);
        }
        let two = BigFloat::from_i64(2, p);
        if self.im.is_zero() {
            return if self.re.is_negative() {
                Self { re: BigFloat::new(p), im: self.re.abs().sqrt(p, RM), prec: p }
            } else {
                Self { re: self.re.sqrt(p, RM), im: BigFloat::new(p), prec: p }
            };
        }
        let r = self.abs();
        if !self.re.is_negative() {
            let t = r.add(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
            let im = self.im.div(&t.mul(&two, p, RM), p, RM);
            Self { re: t, im, prec: p }
        } else {
            let t = r.sub(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
            let re = self.im.abs().div(&t.mul(&two, p, RM), p, RM);
            let im = if self.im.is_negative() { t.neg() } else { t };
            Self { re, im, prec: p }
        }
    }

    /// Principal power `self^w = exp(w ln self)`; `0^w = 0` for `Re w > 0`.
    pub fn pow(&self, w: &Self) -> Self {
        if self.is_zero() {
            return Self::zero(self.prec);
        }
        w.mul(&self.ln()).exp()
    }

    pub fn sin(&self) -> Self {
        let p = self.prec;
        with_consts(|cc| {
            let (s, c) = (self.re.sin(p, RM, cc), self.re.cos(p, RM, cc));
            if self.im.is_zero() {
                return Self { re: s, im: BigFloat::new(p), prec: p };
            }
            let (ch, sh) = (self.im.cosh(p, RM, cc), self.im.sinh(p, RM, cc));
            Self { re: s.mul(&ch, p, RM), im: c.mul(&sh, p, RM), prec: p }
        })
    }

    pub fn cos(&self) -> Self {
        let p = self.prec;
        with_consts(|cc| {
            let (s, c) = (self.re.sin(p, RM, cc), self.re.cos(p, RM, cc));
            if self.im.is_zero() {
                return Self { re: c, im: BigFloat::new(p), prec: p };
            }
            let (ch, sh) = (self.im.cosh(p, RM, cc), self.im.sinh(p, RM, cc));
            Self { re: c.mul(&ch, p, RM), im: s.mul(&sh, p, RM).neg(), prec: p }
        })
    }

    /// `sinh z = −i sin(iz)`.
    pub fn sinh(&self) -> Self {
        self.mul_i().sin().mul_i().neg()
    }

    /// `cosh z = cos(iz)`.
    pub fn cosh(&self) -> Self {
        self.mul_i().cos()
    }

    /// `arctan z = (i/2)(ln(1 − iz) − ln(1 + iz))`.
    pub fn atan(&self) -> Self {
        let p = self.prec;
        if self.im.is_zero() {
            let re = with_consts(|cc| self.re.atan(p, RM, cc));
            return Self::from_real(re, p);
        }
        let one = Self::from_i64(1, p);
        let iz = self.mul_i();
        let d = one.sub(&iz).ln().sub(&one.add(&iz).ln());
        d.mul_i().mul_real(&BigFloat::from_f64(0.5, p))
    }

    /// `arcsin z = −i ln(iz + √(1 − z²))`.
    pub fn asin(&self) -> Self {
        let p = self.prec;
        let one = Self::from_i64(1, p);
        let root = one.sub(&self.mul(self)).sqrt();
        self.mul_i().add(&root).ln().mul_i().neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_by_imaginary_and_mixed_signs() {
        let one = BigComplex::from_i64(1, 64);
        for (re, im) in [(0.0, -1.0), (0.0, 2.0), (-3.0, 0.5), (0.5, -4.0)] {
            let d = BigComplex::from_f64(re, im, 64);
            let q = one.checked_div(&d).unwrap();
            assert!(q.is_finite(), "1/({re}{im:+}i)");
            let back = q.mul(&d).to_f64_pair();
            assert!((back.0 - 1.0).abs() < 1e-15 && back.1.abs() < 1e-15, "{back:?}");
        }
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn dyadic_rationals_convert_exactly() {
        for (n, d) in [(1, 2), (-3, 8), (5, 1), (1, 1 << 40), (123_456_789, 1 << 20)] {
            let x = rational_to_float(&rat(n, d), 128);
            assert_eq!(float_to_rational(&x), rat(n, d));
        }
    }

    #[test]
    fn one_third_rounds_to_nearest() {
        let x = rational_to_float(&rat(1, 3), 64);
        let back = float_to_rational(&x);
        let err = (back - rat(1, 3)).abs();
        // Half an ulp of a 64-bit mantissa in [1/4, 1/2).
        assert!(err <= BigRational::new(1.into(), BigInt::one() << 66));
    }

    #[test]
    fn ties_round_to_even() {
        // 2^64 + 1 needs 65 bits: exactly halfway, rounds down to the even 2^64.
        let v = BigRational::from_integer((BigInt::one() << 64) + 1);
        assert_eq!(float_to_rational(&rational_to_float(&v, 64)), BigRational::from_integer(BigInt::one() << 64));
        // 2^64 + 3 is halfway between 2^64 + 2 and 2^64 + 4; the even mantissa is 2^64 + 4.
        let v = BigRational::from_integer((BigInt::one() << 64) + 3);
        assert_eq!(float_to_rational(&rational_to_float(&v, 64)), BigRational::from_integer((BigInt::one() << 64) + 4));
    }

    #[test]
    fn decimal_formatting_is_correctly_rounded() {
        assert_eq!(format_rational_decimal(&rat(1, 3), 5), "3.3333e-1");
        assert_eq!(format_rational_decimal(&rat(-2, 3), 5), "-6.6667e-1");
        assert_eq!(format_rational_decimal(&rat(1, 8), 5), "1.25e-1");
        assert_eq!(format_rational_decimal(&rat(99999, 1), 3), "1e5");
        assert_eq!(format_rational_decimal(&rat(25, 1000), 1), "2e-2");
    }

    #[test]
    fn elementary_functions_match_f64() {
        let z = BigComplex::from_f64(0.3, -0.4, 128);
        let cases: [(&str, BigComplex, (f64, f64)); 6] = [
            ("exp", z.exp(), (1.2433022950695027, -0.5256597791969788)),
            ("ln", z.ln(), (-std::f64::consts::LN_2, -0.9272952180016123)),
            ("sqrt", z.sqrt(), (0.6324555320336759, -0.31622776601683794)),
            ("sin", z.sin(), (0.31947873074156474, -0.3924066848326388)),
            ("atan", z.atan(), (0.3373704711117763, -0.37908687234202215)),
            ("asin", z.asin(), (0.28062956229180586, -0.4051123371780309)),
        ];
        for (name, got, (re, im)) in cases {
            let (gr, gi) = got.to_f64_pair();
            assert!((gr - re).abs() < 1e-14 && (gi - im).abs() < 1e-14, "{name}: {gr} {gi}");
        }
    }

    #[test]
    fn sqrt_of_negative_real_is_positive_imaginary() {
        let (re, im) = BigComplex::from_f64(-4.0, 0.0, 128).sqrt().to_f64_pair();
        assert_eq!((re, im), (0.0, 2.0));
    }

    #[test]
    fn division_round_trips() {
        let a = BigComplex::from_f64(1.5, -2.25, 128);
        let b = BigComplex::from_f64(-0.75, 3.0, 128);
        let (re, im) = a.mul(&b).checked_div(&b).unwrap().sub(&a).to_f64_pair();
        assert!(re.abs() < 1e-35 && im.abs() < 1e-35);
        assert!(a.checked_div(&BigComplex::zero(128)).is_none());
    }
}
