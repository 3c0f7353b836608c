//! Stable JSON and CSV encodings of coefficient sequences.
//!
//! JSON: `{family, params: {nu, p, theta}, precision_bits, exact, N, coefficients}`
//! plus the informational `normalization` and `source`. A float complex is
//! `{re, im}` with correctly rounded decimal strings that parse back to the same
//! bits; an exact one is `{re_num, re_den, im_num, im_den}` with integer
//! strings and an optional `pi_multiple` object of the same shape.
//! CSV: an `index,value` header, then one row per coefficient in display form
//! (`-1/4`, `1/2+1/3i`, `(-1/16)·π`, `1.5e-3-2i`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::params::Params;
use crate::scalar::{format_decimal, parse_gauss, parse_rational, rational_to_float, BigComplex, ExactComplex, GaussRat, Mode, Scalar};
use crate::sequence::{CoefficientSequence, Source};

fn err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn gauss_fields(g: &GaussRat) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("re_num".into(), Value::String(g.re.numer().to_string()));
    m.insert("re_den".into(), Value::String(g.re.denom().to_string()));
    m.insert("im_num".into(), Value::String(g.im.numer().to_string()));
    m.insert("im_den".into(), Value::String(g.im.denom().to_string()));
    m
}

/// Encodes one complex number.
pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Float(f) => json!({
            "re": format_decimal(f.re(), f.precision()),
            "im": format_decimal(f.im(), f.precision()),
        }),
        Scalar::Exact(e) => {
            let mut m = gauss_fields(&e.rat);
            if e.has_pi() {
                m.insert("pi_multiple".into(), Value::Object(gauss_fields(&e.pi)));
            }
            Value::Object(m)
        }
    }
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v.get(key).and_then(Value::as_str).ok_or_else(|| err(format!("missing string field `{key}`")))
}

fn int_field(v: &Value, key: &str) -> Result<BigInt> {
    str_field(v, key)?.parse().map_err(|_| err(format!("field `{key}` is not an integer")))
}

fn ratio(v: &Value, num: &str, den: &str) -> Result<BigRational> {
    let d = int_field(v, den)?;
    if d.is_zero() {
        return Err(err(format!("zero denominator in `{den}`")));
    }
    Ok(BigRational::new(int_field(v, num)?, d))
}

fn gauss_from_json(v: &Value) -> Result<GaussRat> {
    Ok(GaussRat::new(ratio(v, "re_num", "re_den")?, ratio(v, "im_num", "im_den")?))
}

/// Decodes one complex number in `mode`.
pub fn scalar_from_json(v: &Value, mode: Mode) -> Result<Scalar> {
    match mode {
        Mode::Float { precision_bits } => {
            let re = parse_rational(str_field(v, "re")?)?;
            let im = parse_rational(str_field(v, "im")?)?;
            let c = BigComplex::from_parts(rational_to_float(&re, precision_bits), rational_to_float(&im, precision_bits), precision_bits);
            Ok(Scalar::Float(c))
        }
        Mode::Exact => {
            let rat = gauss_from_json(v)?;
            let pi = match v.get("pi_multiple") {
                None | Some(Value::Null) => GaussRat::zero(),
                Some(p) => gauss_from_json(p)?,
            };
            Ok(Scalar::Exact(ExactComplex { rat, pi }))
        }
    }
}

/// The JSON document for a sequence.
pub fn to_json(seq: &CoefficientSequence) -> Value {
    let params = &seq.params;
    json!({
        "family": seq.family.to_string(),
        "params": {
            "nu": scalar_to_json(&params.nu),
            "p": scalar_to_json(&params.p),
            "theta": params.theta.as_ref().map(scalar_to_json),
        },
        "precision_bits": params.mode.precision(),
        "exact": params.mode.is_exact(),
        "N": seq.max_index(),
        "normalization": seq.normalization.name(),
        "source": serde_json::to_value(seq.source).expect("plain enum"),
        "coefficients": seq.coeffs.iter().map(scalar_to_json).collect::<Vec<_>>(),
    })
}

/// Pretty-printed JSON.
pub fn to_json_string(seq: &CoefficientSequence) -> String {
    serde_json::to_string_pretty(&to_json(seq)).expect("serializable")
}

/// Parses a JSON document back into a sequence.
pub fn from_json(v: &Value) -> Result<CoefficientSequence> {
    let family: FamilyId = str_field(v, "family")?.parse()?;
    let exact = v.get("exact").and_then(Value::as_bool).ok_or_else(|| err("missing boolean field `exact`"))?;
    let mode = if exact {
        Mode::Exact
    } else {
        let bits = v.get("precision_bits").and_then(Value::as_u64).ok_or_else(|| err("missing `precision_bits`"))?;
        Mode::float(bits as usize)
    };
    let params = v.get("params").ok_or_else(|| err("missing `params`"))?;
    let field = |k: &str| params.get(k).ok_or_else(|| err(format!("missing params.{k}")));
    let theta = match params.get("theta") {
        None | Some(Value::Null) => None,
        Some(t) => Some(scalar_from_json(t, mode)?),
    };
    let params = Params::new(scalar_from_json(field("nu")?, mode)?, scalar_from_json(field("p")?, mode)?, theta, mode)?;
    let coeffs = v
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| err("missing array `coefficients`"))?
        .iter()
        .map(|c| scalar_from_json(c, mode))
        .collect::<Result<Vec<_>>>()?;
    if let Some(n) = v.get("N").and_then(Value::as_u64) {
        if coeffs.len() as u64 != n + 1 {
            return Err(err(format!("N = {n} but {} coefficients", coeffs.len())));
        }
    }
    let source = match v.get("source") {
        Some(s) => serde_json::from_value(s.clone()).map_err(|e| err(e.to_string()))?,
        None => Source::Recurrence,
    };
    Ok(CoefficientSequence::new(family, params, coeffs, source))
}

pub fn from_json_str(s: &str) -> Result<CoefficientSequence> {
    from_json(&serde_json::from_str(s).map_err(|e| err(e.to_string()))?)
}

/// `index,value` rows after a header line.
pub fn to_csv(seq: &CoefficientSequence) -> String {
    let mut out = String::from("index,value\n");
    for (n, c) in seq.coeffs.iter().enumerate() {
        out.push_str(&format!("{n},{c}\n"));
    }
    out
}

/// Parses a value in display form: a complex literal, `(c)·π`, or `a + (c)·π`.
pub fn parse_scalar_text(s: &str, mode: Mode) -> Result<Scalar> {
    let s = s.trim();
    let exact = if let Some(body) = s.strip_suffix(")·π") {
        let (rat, pi) = match body.rsplit_once(" + (") {
            Some((a, c)) => (parse_gauss(a)?, c),
            None => (GaussRat::zero(), body.strip_prefix('(').ok_or_else(|| err(format!("bad value `{s}`")))?),
        };
        ExactComplex { rat, pi: parse_gauss(pi)? }
    } else {
        ExactComplex::rational(parse_gauss(s)?)
    };
    Ok(Scalar::Exact(exact).to_mode(mode))
}

/// Parses CSV produced by [`to_csv`] into the coefficient list.
pub fn parse_csv(text: &str, mode: Mode) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
        if k == 0 && line.trim() == "index,value" {
            continue;
        }
        let (idx, val) = line.split_once(',').ok_or_else(|| err(format!("bad row `{line}`")))?;
        let idx: usize = idx.trim().parse().map_err(|_| err(format!("bad index in `{line}`")))?;
        if idx != out.len() {
            return Err(err(format!("expected index {}, got {idx}", out.len())));
        }
        out.push(parse_scalar_text(val, mode)?);
    }
    Ok(out)
}
