//! The scalar domain: exact Gaussian rationals (with a π-part) or big complex floats.
//!
//! Arithmetic between an exact and a float operand promotes the exact one to
//! the float's precision, so exact integer constants can be mixed freely into
//! float computations.

mod exact;
mod float;
mod text;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use exact::{ExactComplex, GaussRat};
pub use float::{
    decimal_digits, float_to_f64, float_to_rational, format_decimal, normalize_precision, pi, rational_to_float,
    BigComplex,
};
pub use text::{parse_gauss, parse_rational};

#[allow(unused_imports)]
pub(crate) use float::{with_consts, RM};

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Default float precision in bits.
pub const DEFAULT_PRECISION: usize = 128;

/// Smallest accepted float precision in bits.
pub const MIN_PRECISION: usize = 53;

/// Arithmetic mode of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    /// Float mode; the precision is stored rounded up to whole 64-bit words.
    Float { precision_bits: usize },
}

impl Mode {
    pub fn float(precision_bits: usize) -> Self {
        Mode::Float { precision_bits: normalize_precision(precision_bits) }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Mode::Exact)
    }

    /// Float precision, or `None` in exact mode.
    pub fn precision(self) -> Option<usize> {
        match self {
            Mode::Exact => None,
            Mode::Float { precision_bits } => Some(precision_bits),
        }
    }
}

impl Default for Mode {
    fn default() -> Self {
        Mode::float(DEFAULT_PRECISION)
    }
}

/// A complex number in exact or float representation.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(ExactComplex),
    Float(BigComplex),
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Exact(ExactComplex::rational(GaussRat::from_int(v)))
    }

    /// `num/den`, exact.
    ///
    /// # Panics
    /// If `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(ExactComplex::rational(GaussRat::ratio(num, den)))
    }

    pub fn gauss(g: GaussRat) -> Self {
        Scalar::Exact(ExactComplex::rational(g))
    }

    pub fn i() -> Self {
        Scalar::gauss(GaussRat::i())
    }

    /// `c·π` in the given mode (symbolic in exact mode).
    pub fn pi_times(c: GaussRat, mode: Mode) -> Self {
        let exact = Scalar::Exact(ExactComplex::pi_multiple(c));
        exact.to_mode(mode)
    }

    pub fn zero(mode: Mode) -> Self {
        Scalar::int(0).to_mode(mode)
    }

    pub fn one(mode: Mode) -> Self {
        Scalar::int(1).to_mode(mode)
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(f) => Mode::Float { precision_bits: f.precision() },
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(e) => e.is_zero(),
            Scalar::Float(f) => f.is_zero(),
        }
    }

    pub fn as_exact(&self) -> Option<&ExactComplex> {
        match self {
            Scalar::Exact(e) => Some(e),
            Scalar::Float(_) => None,
        }
    }

    pub fn as_float(&self) -> Option<&BigComplex> {
        match self {
            Scalar::Float(f) => Some(f),
            Scalar::Exact(_) => None,
        }
    }

    /// The Gaussian-rational value, if the scalar carries no π-part.
    ///
    /// Floats are converted exactly (every binary float is rational).
    pub fn to_gauss(&self) -> Option<GaussRat> {
        match self {
            Scalar::Exact(e) if !e.has_pi() => Some(e.rat.clone()),
            Scalar::Exact(_) => None,
            Scalar::Float(f) => Some(f.to_gauss()),
        }
    }

    /// Float value at `prec` bits (π-parts evaluated at that precision).
    pub fn to_float(&self, prec: usize) -> BigComplex {
        match self {
            Scalar::Float(f) if f.precision() == normalize_precision(prec) => f.clone(),
            Scalar::Float(f) => f.with_precision(prec),
            Scalar::Exact(e) => {
                let rat = BigComplex::from_gauss(&e.rat, prec);
                if e.pi.is_zero() {
                    rat
                } else {
                    rat.add(&BigComplex::from_gauss(&e.pi, prec).mul(&BigComplex::pi(prec)))
                }
            }
        }
    }

    /// Converts to `mode`. Floats become exact by taking their exact binary value.
    pub fn to_mode(&self, mode: Mode) -> Scalar {
        match (mode, self) {
            (Mode::Exact, Scalar::Exact(_)) => self.clone(),
            (Mode::Exact, Scalar::Float(f)) => Scalar::gauss(f.to_gauss()),
            (Mode::Float { precision_bits }, _) => Scalar::Float(self.to_float(precision_bits)),
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact(e) => Scalar::Exact(e.conj()),
            Scalar::Float(f) => Scalar::Float(f.conj()),
        }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Scalar {
        match self {
            Scalar::Exact(e) => Scalar::Exact(&ExactComplex::rational(GaussRat::i()) * e),
            Scalar::Float(f) => Scalar::Float(f.mul_i()),
        }
    }

    /// Quotient, or `None` when the divisor is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.checked_div(b).map(Scalar::Exact),
            _ => {
                let p = promote_precision(self, rhs);
                self.to_float(p).checked_div(&rhs.to_float(p)).map(Scalar::Float)
            }
        }
    }

    /// Non-negative integer power.
    pub fn powi(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one(self.mode());
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Approximate `(re, im)` as `f64`.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        match self {
            Scalar::Float(f) => f.to_f64_pair(),
            Scalar::Exact(e) => {
                let pi = std::f64::consts::PI;
                let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
                (f(&e.rat.re) + pi * f(&e.pi.re), f(&e.rat.im) + pi * f(&e.pi.im))
            }
        }
    }

    /// Approximate modulus.
    pub fn abs_f64(&self) -> f64 {
        match self {
            Scalar::Float(f) => float_to_f64(&f.abs()),
            Scalar::Exact(_) => {
                let (re, im) = self.to_f64_pair();
                re.hypot(im)
            }
        }
    }
}

/// `|a − b| / max(1, |b|)`; exactly 0 for identical exact values.
pub fn rel_err(a: &Scalar, b: &Scalar) -> f64 {
    if let (Scalar::Exact(x), Scalar::Exact(y)) = (a, b) {
        if x == y {
            return 0.0;
        }
        let p = 256;
        return rel_err(&Scalar::Float(a.to_float(p)), &Scalar::Float(b.to_float(p)));
    }
    let p = promote_precision(a, b);
    let (fa, fb) = (a.to_float(p), b.to_float(p));
    let diff = float_to_f64(&fa.sub(&fb).abs());
    let scale = float_to_f64(&fb.abs()).max(1.0);
    diff / scale
}

fn promote_precision(a: &Scalar, b: &Scalar) -> usize {
    match (a, b) {
        (Scalar::Float(x), Scalar::Float(y)) => x.precision().max(y.precision()),
        (Scalar::Float(x), _) | (_, Scalar::Float(x)) => x.precision(),
        _ => DEFAULT_PRECISION,
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<GaussRat> for Scalar {
    fn from(g: GaussRat) -> Self {
        Scalar::gauss(g)
    }
}

impl From<BigComplex> for Scalar {
    fn from(f: BigComplex) -> Self {
        Scalar::Float(f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $exact:expr, $float:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact($exact(a, b)),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float($float(a, b)),
                    (Scalar::Float(a), Scalar::Exact(_)) => {
                        Scalar::Float($float(a, &rhs.to_float(a.precision())))
                    }
                    (Scalar::Exact(_), Scalar::Float(b)) => {
                        Scalar::Float($float(&self.to_float(b.precision()), b))
                    }
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
        impl $trait<i64> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: i64) -> Scalar {
                self.$method(&Scalar::int(rhs))
            }
        }
        impl $trait<i64> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: i64) -> Scalar {
                (&self).$method(&Scalar::int(rhs))
            }
        }
    };
}

binop!(Add, add, |a: &ExactComplex, b| a + b, |a: &BigComplex, b| a.add(b));
binop!(Sub, sub, |a: &ExactComplex, b| a - b, |a: &BigComplex, b| a.sub(b));
binop!(Mul, mul, |a: &ExactComplex, b| a * b, |a: &BigComplex, b| a.mul(b));

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// # Panics
    /// On division by zero; use [`Scalar::checked_div`] where that can occur.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Div<i64> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: i64) -> Scalar {
        self / &Scalar::int(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(e) => Scalar::Exact(-e),
            Scalar::Float(f) => Scalar::Float(f.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Exact values print symbolically (`-1/4`, `(-1/16)·π`); floats print as
/// round-trip decimals (`1.5e-3`, `2.5-1e-2i`).
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(e) => write!(f, "{e}"),
            Scalar::Float(c) => {
                let re = format_decimal(c.re(), c.precision());
                if c.im().is_zero() {
                    return f.write_str(&re);
                }
                let im = format_decimal(c.im(), c.precision());
                if c.re().is_zero() {
                    return write!(f, "{im}i");
                }
                let sign = if im.starts_with('-') { "" } else { "+" };
                write!(f, "{re}{sign}{im}i")
            }
        }
    }
}

/// `true` when the scalar is exactly representable with no π-part and is real.
pub(crate) fn exact_real(s: &Scalar) -> Option<BigRational> {
    match s {
        Scalar::Exact(e) if !e.has_pi() && e.rat.im.is_zero() => Some(e.rat.re.clone()),
        Scalar::Float(f) if f.im().is_zero() => Some(float_to_rational(f.re())),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_arithmetic_promotes_to_float() {
        let x = Scalar::Float(BigComplex::from_f64(0.5, 0.0, 128));
        let y = &x + &Scalar::ratio(1, 4);
        assert_eq!(y.mode(), Mode::float(128));
        assert_eq!(y.to_f64_pair(), (0.75, 0.0));
        let z = &Scalar::int(3) * &x;
        assert_eq!(z.to_f64_pair(), (1.5, 0.0));
    }

    #[test]
    fn exact_arithmetic_is_exact() {
        let a = Scalar::ratio(1, 3);
        let b = Scalar::gauss(parse_gauss("1/2+1/3i").unwrap());
        let c = &(&a * &b) / &b;
        assert_eq!(c, a);
        assert_eq!(Scalar::i().powi(2), Scalar::int(-1));
        assert!(Scalar::int(1).checked_div(&Scalar::int(0)).is_none());
    }

    #[test]
    fn pi_times_in_float_mode() {
        let v = Scalar::pi_times(GaussRat::ratio(1, 2), Mode::float(128));
        let (re, _) = v.to_f64_pair();
        assert!((re - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn float_display_round_trips_through_parsing() {
        let x = Scalar::Float(BigComplex::from_gauss(&parse_gauss("1/3-2/7i").unwrap(), 128));
        let back = Scalar::gauss(parse_gauss(&x.to_string()).unwrap()).to_mode(Mode::float(128));
        assert_eq!(back, x);
    }

    #[test]
    fn rel_err_scale() {
        let a = Scalar::ratio(1, 1000);
        assert_eq!(rel_err(&a, &a), 0.0);
        let e = rel_err(&Scalar::int(101), &Scalar::int(100));
        assert!((e - 0.01).abs() < 1e-15);
        let e = rel_err(&Scalar::ratio(1, 1000), &Scalar::int(0));
        assert!((e - 0.001).abs() < 1e-15);
    }

    #[test]
    fn float_to_exact_is_exact_binary_value() {
        let x = Scalar::Float(BigComplex::from_f64(0.1, 0.0, 64));
        let e = x.to_mode(Mode::Exact);
        assert_eq!(e.to_mode(Mode::float(64)), x);
        assert_ne!(e, Scalar::ratio(1, 10));
    }
}
