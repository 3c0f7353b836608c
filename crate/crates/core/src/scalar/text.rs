//! Parsing of scalar literals: `re[+im i]` with decimal or rational components.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::exact::GaussRat;
use crate::error::Error;

/// Parses a real literal: integer, decimal (`-1.25e-3`) or ratio (`3/7`, `-1.5/4`).
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let den = parse_decimal(den)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(parse_decimal(num)? / den);
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("invalid number `{s}`"));
    let t = s.trim();
    let (neg, t) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(k) => (&t[..k], t[k + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10u32);
    let mut r = if scale >= 0 {
        BigRational::from_integer(digits * ten.pow(scale as u32))
    } else {
        BigRational::new(digits, ten.pow(scale.unsigned_abs()))
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

/// Parses a complex literal such as `0.5`, `3/7`, `1/2+1/3i`, `-3/5-2i`, `2i` or `-i`.
pub fn parse_gauss(s: &str) -> Result<GaussRat, Error> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(GaussRat::real(parse_rational(&t)?));
    };
    // Split at the last sign that is neither leading nor an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E' | b'/'));
    let (re, im) = match split {
        Some(k) => (parse_rational(&body[..k])?, &body[k..]),
        None => (BigRational::zero(), body),
    };
    let im = match im {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        other => parse_rational(other)?,
    };
    Ok(GaussRat::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn real_forms() {
        assert_eq!(parse_rational("3/7").unwrap(), r(3, 7));
        assert_eq!(parse_rational("-0.25").unwrap(), r(-1, 4));
        assert_eq!(parse_rational("1.5e-2").unwrap(), r(3, 200));
        assert_eq!(parse_rational("2E3").unwrap(), r(2000, 1));
        assert_eq!(parse_rational(".5").unwrap(), r(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn complex_forms() {
        assert_eq!(parse_gauss("1/2+1/3i").unwrap(), GaussRat::new(r(1, 2), r(1, 3)));
        assert_eq!(parse_gauss("-3/5-2i").unwrap(), GaussRat::new(r(-3, 5), r(-2, 1)));
        assert_eq!(parse_gauss("2i").unwrap(), GaussRat::new(r(0, 1), r(2, 1)));
        assert_eq!(parse_gauss("-i").unwrap(), GaussRat::new(r(0, 1), r(-1, 1)));
        assert_eq!(parse_gauss("1e-2+1e-3i").unwrap(), GaussRat::new(r(1, 100), r(1, 1000)));
        assert_eq!(parse_gauss("1.5e+2 - 0.5 i").unwrap(), GaussRat::new(r(150, 1), r(-1, 2)));
        assert_eq!(parse_gauss("-7").unwrap(), GaussRat::from_int(-7));
        assert!(parse_gauss("1+").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["1/2+1/3i", "-3/5", "-2/9i", "3/7-i", "0"] {
            assert_eq!(parse_gauss(s).unwrap().to_string(), s);
        }
    }
}
