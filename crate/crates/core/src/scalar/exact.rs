//! Exact scalars: Gaussian rationals, optionally carrying a rational multiple of π.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num/den` as a real Gaussian rational.
    ///
    /// # Panics
    /// If `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Quotient, or `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if rhs.is_real() {
            return Some(Self { re: &self.re / &rhs.re, im: &self.im / &rhs.re });
        }
        let d = rhs.norm_sqr();
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &d;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &d;
        Some(Self { re, im })
    }

    /// Integer power (negative exponents invert).
    ///
    /// # Panics
    /// On a negative power of zero.
    pub fn powi(&self, e: i32) -> Self {
        let mut base = if e < 0 {
            Self::one().checked_div(self).expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        if self.is_real() && rhs.is_real() {
            return GaussRat::real(&self.re * &rhs.re);
        }
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats as `re`, `re+imi`, `re-imi` or `imi`, with rational components (`3/7`).
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let im = if self.im.abs().is_one() {
            if self.im.is_negative() { "-".to_string() } else { String::new() }
        } else {
            fmt_rational(&self.im)
        };
        if self.re.is_zero() {
            return write!(f, "{im}i");
        }
        let sign = if self.im.is_negative() { "" } else { "+" };
        write!(f, "{}{sign}{im}i", fmt_rational(&self.re))
    }
}

/// An element of ℚ(i) + ℚ(i)·π: `rat + pi·π`.
///
/// Products of two π-carrying values would leave the representable set and are
/// treated as invariant violations; no coefficient pipeline produces them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactComplex {
    pub rat: GaussRat,
    pub pi: GaussRat,
}

impl ExactComplex {
    pub fn rational(rat: GaussRat) -> Self {
        Self { rat, pi: GaussRat::zero() }
    }

    pub fn pi_multiple(pi: GaussRat) -> Self {
        Self { rat: GaussRat::zero(), pi }
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.pi.is_zero()
    }

    pub fn has_pi(&self) -> bool {
        !self.pi.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { rat: self.rat.conj(), pi: self.pi.conj() }
    }

    /// Quotient, or `None` for division by zero.
    ///
    /// # Panics
    /// If the divisor carries π and the quotient is not a Gaussian rational.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if !rhs.has_pi() {
            return Some(Self {
                rat: self.rat.checked_div(&rhs.rat)?,
                pi: self.pi.checked_div(&rhs.rat)?,
            });
        }
        assert!(
            rhs.rat.is_zero() && self.rat.is_zero(),
            "quotient of π-carrying values is outside Q(i) + Q(i)π"
        );
        Some(Self::rational(self.pi.checked_div(&rhs.pi)?))
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { rat: &self.rat + &rhs.rat, pi: &self.pi + &rhs.pi }
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex { rat: &self.rat - &rhs.rat, pi: &self.pi - &rhs.pi }
    }
}

impl Mul for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        match (self.has_pi(), rhs.has_pi()) {
            (false, false) => ExactComplex::rational(&self.rat * &rhs.rat),
            (false, true) => ExactComplex { rat: &self.rat * &rhs.rat, pi: &self.rat * &rhs.pi },
            (true, false) => ExactComplex { rat: &self.rat * &rhs.rat, pi: &self.pi * &rhs.rat },
            (true, true) => panic!("product of two π-carrying values is outside Q(i) + Q(i)π"),
        }
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex { rat: -&self.rat, pi: -&self.pi }
    }
}

/// Formats as the rational part, `(c)·π`, or `a + (c)·π`.
impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.pi.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "({})·π", self.pi),
            (false, false) => write!(f, "{} + ({})·π", self.rat, self.pi),
        }
    }
}
