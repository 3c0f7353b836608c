//! Printed recurrences: transcribed seeds and β tables, the forward runner,
//! and parity-offset calibration.
//!
//! Every family's printed recurrence is kept verbatim; [`generate`] applies the
//! correction established by reconciliation (see [`crate::verify`]), or falls
//! back to the series oracle when the printed form cannot be reconciled.

pub(crate) mod expr;
pub(crate) mod tables;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{FamilyId, Parity};
use crate::oracle::oracle_coeffs;
use crate::params::Params;
use crate::scalar::{Mode, Scalar};
use crate::sequence::{CoefficientSequence, Source};
use expr::{Bindings, Compiled};
use tables::{Linear, Table};

/// A minimal change to a printed recurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Correction {
    /// The recurrence exactly as printed.
    AsPrinted,
    /// Parity families: on the compacted sequence `w_k = u_{2k+r}`, the β
    /// argument is `2(k + offset)` instead of the printed `k`.
    IndexOffset {
        #[serde(with = "rational_string")]
        offset: BigRational,
    },
    /// The whole term β_i changes sign.
    SignFlip { term: usize },
    /// Term β_i multiplies `u_{n−i−lag}` instead of `u_{n−i}` (zero below index 0).
    LagShift { term: usize, lag: i64 },
}

impl fmt::Display for Correction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Correction::AsPrinted => write!(f, "as_printed"),
            Correction::IndexOffset { offset } => write!(f, "index_offset({offset})"),
            Correction::SignFlip { term } => write!(f, "sign_flip({term})"),
            Correction::LagShift { term, lag } => write!(f, "lag_shift({term}, {lag:+})"),
        }
    }
}

mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        crate::scalar::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Candidate offsets tried for the parity families.
pub fn parity_offset_candidates() -> Vec<BigRational> {
    [(0, 1), (1, 2), (1, 1), (-1, 2), (-1, 1)]
        .into_iter()
        .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
        .collect()
}

/// The printed recurrence of one family, with parameters substituted.
#[derive(Clone, Debug)]
pub struct RecurrenceSpec {
    pub family: FamilyId,
    /// Number of β terms (per sequence for two-sequence families).
    pub depth: usize,
    /// Printed seeds at full indices `u_0, u_1, …` (combined for two-sequence families).
    pub seeds: Vec<Scalar>,
    /// First printed `n` at which the recurrence applies.
    pub min_n: i64,
    /// β argument offset of the shipped form (parity families; zero elsewhere).
    pub index_offset: BigRational,
    shape: Shape,
    mode: Mode,
}

#[derive(Clone, Debug)]
struct Seq {
    seeds: Vec<Scalar>,
    betas: Vec<Compiled>,
}

#[derive(Clone, Debug)]
enum Shape {
    Linear(Seq),
    Parity { seq: Seq, residue: usize },
    Pair { u: Seq, v: Seq, sign: i64 },
}

fn compile_linear(l: &Linear, b: &Bindings) -> Result<Seq> {
    let compile = |s: &str| {
        let e = expr::parse(s).map_err(|e| Error::Format(format!("transcription error in `{s}`: {e}")))?;
        Compiled::compile(&e, b)
    };
    let seeds = l.seeds.iter().map(|s| compile(s)?.eval(&Scalar::zero(b.mode))).collect::<Result<Vec<_>>>()?;
    let betas = l.betas.iter().map(|s| compile(s)).collect::<Result<Vec<_>>>()?;
    Ok(Seq { seeds, betas })
}

impl RecurrenceSpec {
    /// Substitutes validated parameters into the family's printed table.
    pub fn new(family: FamilyId, params: &Params) -> Result<Self> {
        let mut spec = Self::build(family, params)?;
        if let Some(Correction::IndexOffset { offset }) = shipped_correction(family) {
            spec.index_offset = offset;
        }
        Ok(spec)
    }

    /// Like [`RecurrenceSpec::new`] without consulting the shipped correction.
    pub(crate) fn build(family: FamilyId, params: &Params) -> Result<Self> {
        let params = params.validate(family)?;
        let theta = params.theta_or_zero();
        let b = Bindings { nu: &params.nu, p: &params.p, theta: &theta, mode: params.mode };
        let shape = match tables::table(family) {
            Table::Linear(l) => Shape::Linear(compile_linear(&l, &b)?),
            Table::Parity(l) => {
                let residue = if family.parity() == Parity::EvenZero { 1 } else { 0 };
                Shape::Parity { seq: compile_linear(&l, &b)?, residue }
            }
            Table::Pair { u, v, sign } => Shape::Pair { u: compile_linear(&u, &b)?, v: compile_linear(&v, &b)?, sign },
        };
        let (depth, seeds, min_n) = match &shape {
            Shape::Linear(s) => (s.betas.len(), s.seeds.clone(), s.seeds.len() as i64 - 1),
            Shape::Parity { seq, .. } => (seq.betas.len(), seq.seeds.clone(), 2),
            Shape::Pair { u, v, sign } => {
                let seeds = u.seeds.iter().zip(&v.seeds).map(|(a, b)| a + &(b * *sign)).collect();
                (u.betas.len(), seeds, u.seeds.len() as i64 - 1)
            }
        };
        Ok(Self { family, depth, seeds, min_n, index_offset: BigRational::zero(), shape, mode: params.mode })
    }

    /// The printed β values at `n` (u-terms then v-terms for two-sequence families).
    pub fn betas(&self, n: i64) -> Result<Vec<Scalar>> {
        if n < self.min_n {
            return Err(Error::IndexTooSmall { family: self.family, n, min_n: self.min_n });
        }
        let arg = Scalar::int(n).to_mode(self.mode);
        let eval = |s: &Seq| s.betas.iter().map(|b| b.eval(&arg)).collect::<Result<Vec<_>>>();
        match &self.shape {
            Shape::Linear(s) | Shape::Parity { seq: s, .. } => eval(s),
            Shape::Pair { u, v, .. } => Ok([eval(u)?, eval(v)?].concat()),
        }
    }

    /// Number of addressable β terms (both sequences for two-sequence families).
    pub fn term_count(&self) -> usize {
        match &self.shape {
            Shape::Pair { u, v, .. } => u.betas.len() + v.betas.len(),
            _ => self.depth,
        }
    }

    pub fn is_parity(&self) -> bool {
        matches!(self.shape, Shape::Parity { .. })
    }

    /// Coefficients `u_0..=u_N` under the given correction.
    pub fn run(&self, n_max: usize, correction: &Correction) -> Result<Vec<Scalar>> {
        let mode = self.mode;
        let mut out = match &self.shape {
            Shape::Linear(s) => run_seq(s, n_max + 1, correction, self.family, mode, Ok)?,
            Shape::Pair { u, v, sign } => {
                let split = |c: &Correction, first: bool| -> Correction {
                    let d = u.betas.len();
                    match c {
                        Correction::SignFlip { term } if (*term < d) == first => {
                            Correction::SignFlip { term: if first { *term } else { term - d } }
                        }
                        Correction::LagShift { term, lag } if (*term < d) == first => {
                            Correction::LagShift { term: if first { *term } else { term - d }, lag: *lag }
                        }
                        Correction::IndexOffset { offset } => Correction::IndexOffset { offset: offset.clone() },
                        _ => Correction::AsPrinted,
                    }
                };
                let arg = |n: i64| Ok(n);
                let us = run_seq(u, n_max + 1, &split(correction, true), self.family, mode, arg)?;
                let vs = run_seq(v, n_max + 1, &split(correction, false), self.family, mode, arg)?;
                us.iter().zip(&vs).map(|(a, b)| a + &(b * *sign)).collect()
            }
            Shape::Parity { seq, residue } => {
                let r = *residue;
                if n_max < r {
                    return Ok(self.seeds[..=n_max].to_vec());
                }
                let compact = Seq {
                    seeds: seq.seeds.iter().skip(r).step_by(2).cloned().collect(),
                    betas: seq.betas.clone(),
                };
                let count = (n_max - r) / 2 + 1;
                let arg: Box<dyn Fn(i64) -> Result<i64>> = match correction {
                    Correction::IndexOffset { offset } => {
                        let twice = offset * BigRational::from_integer(2.into());
                        let shift = twice
                            .to_integer()
                            .to_i64()
                            .filter(|_| twice.is_integer())
                            .ok_or_else(|| Error::CalibrationFailed {
                                family: self.family,
                                detail: format!("offset {offset} is not a half-integer"),
                            })?;
                        Box::new(move |k| Ok(2 * k + shift))
                    }
                    _ => Box::new(Ok),
                };
                let w = run_seq(&compact, count, correction, self.family, mode, arg)?;
                let zero = Scalar::zero(mode);
                (0..=n_max).map(|n| if n % 2 == r { w[(n - r) / 2].clone() } else { zero.clone() }).collect()
            }
        };
        // Two-sequence combinations vanish structurally on one parity class;
        // make that exact in float mode too.
        let parity = self.family.parity();
        for (n, c) in out.iter_mut().enumerate() {
            if parity.forces_zero(n) && !c.is_zero() && !c.is_exact() {
                *c = Scalar::zero(mode);
            }
        }
        Ok(out)
    }
}

/// Runs `x_{n+1} = Σ_i ±β_i(arg(n)) x_{n−i−lag_i}` from the seeds to `count` values.
fn run_seq(
    s: &Seq,
    count: usize,
    correction: &Correction,
    family: FamilyId,
    mode: Mode,
    arg: impl Fn(i64) -> Result<i64>,
) -> Result<Vec<Scalar>> {
    let d = s.betas.len();
    let mut signs = vec![1i64; d];
    let mut lags: Vec<i64> = (0..d as i64).collect();
    match correction {
        Correction::SignFlip { term } if *term < d => signs[*term] = -1,
        Correction::LagShift { term, lag } if *term < d => lags[*term] += lag,
        _ => {}
    }
    if lags.iter().any(|&l| l < 0) {
        return Err(Error::CalibrationFailed { family, detail: format!("{correction} reads before the current term") });
    }
    let mut x: Vec<Scalar> = s.seeds.iter().take(count).cloned().collect();
    let zero = Scalar::zero(mode);
    while x.len() < count {
        let n = x.len() as i64 - 1;
        let a = Scalar::int(arg(n)?).to_mode(mode);
        let mut acc = zero.clone();
        for i in 0..d {
            let idx = n - lags[i];
            if idx < 0 {
                continue;
            }
            let prev = &x[idx as usize];
            if prev.is_zero() {
                continue;
            }
            let beta = s.betas[i].eval(&a)?;
            let term = &beta * prev;
            acc = if signs[i] < 0 { acc - term } else { acc + term };
        }
        x.push(acc);
    }
    Ok(x)
}

/// The printed seeds of a family at full indices.
pub fn seeds(family: FamilyId, params: &Params) -> Result<Vec<Scalar>> {
    Ok(RecurrenceSpec::build(family, params)?.seeds)
}

/// The printed β values at `n`, exactly as transcribed.
pub fn betas(family: FamilyId, params: &Params, n: i64) -> Result<Vec<Scalar>> {
    RecurrenceSpec::build(family, params)?.betas(n)
}

/// The shipped correction for a family, or `None` when it is unresolved.
///
/// Established once per family by exact reconciliation at the default test
/// points and cached.
pub fn shipped_correction(family: FamilyId) -> Option<Correction> {
    static CACHE: OnceLock<Vec<OnceLock<Option<Correction>>>> = OnceLock::new();
    let cells = CACHE.get_or_init(|| FamilyId::all().iter().map(|_| OnceLock::new()).collect());
    let idx = FamilyId::all().iter().position(|f| *f == family).expect("known family");
    cells[idx].get_or_init(|| crate::verify::reconcile_default(family).status.correction()).clone()
}

/// Coefficients `u_0..=u_N` from the family's shipped recurrence.
///
/// Families whose printed recurrence could not be reconciled are generated by
/// the series oracle and flagged with [`Source::OracleFallback`].
///
/// Float mode runs the recurrence with guard bits, doubling them until two
/// consecutive runs agree to the target precision at every index: several
/// printed recurrences are forward-unstable (the wanted solution is the
/// minimal one) and lose hundreds of bits within a few dozen steps. If
/// [`MAX_GUARD_BITS`] is not enough, the oracle serves the request instead.
pub fn generate(family: FamilyId, params: &Params, n_max: usize) -> Result<CoefficientSequence> {
    let params = params.validate(family)?;
    let fallback = |params: Params| -> Result<CoefficientSequence> {
        let seq = oracle_coeffs(family, &params, n_max)?;
        Ok(CoefficientSequence { source: Source::OracleFallback, ..seq })
    };
    let Some(correction) = shipped_correction(family) else {
        return fallback(params);
    };
    let Mode::Float { precision_bits: prec } = params.mode else {
        let coeffs = RecurrenceSpec::build(family, &params)?.run(n_max, &correction)?;
        return Ok(CoefficientSequence::new(family, params, coeffs, Source::Recurrence));
    };
    let run_at = |guard: usize| RecurrenceSpec::build(family, &params.to_mode(Mode::float(prec + guard)))?.run(n_max, &correction);
    let mut guard = 64;
    let mut prev = run_at(guard)?;
    while guard < MAX_GUARD_BITS {
        guard *= 2;
        let next = run_at(guard)?;
        let settled = prev.iter().zip(&next).all(|(a, b)| match (a, b) {
            (Scalar::Float(a), Scalar::Float(b)) => a.agrees_to(b, prec + 1),
            _ => a == b,
        });
        if settled {
            let coeffs = next.iter().map(|c| c.to_mode(params.mode)).collect();
            return Ok(CoefficientSequence::new(family, params, coeffs, Source::Recurrence));
        }
        prev = next;
    }
    fallback(params)
}

/// Largest guard precision float generation tries before using the oracle.
pub const MAX_GUARD_BITS: usize = 4096;

/// Result of [`calibrate_parity`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParityCalibration {
    pub family: FamilyId,
    #[serde(with = "rational_string")]
    pub offset: BigRational,
    pub verified_to: usize,
}

/// Highest index checked by calibration.
pub const CALIBRATION_INDEX: usize = 40;

/// Finds the unique β-argument offset for a parity family by exact comparison
/// with the oracle through [`CALIBRATION_INDEX`].
///
/// Float parameters are replaced by their exact binary values.
pub fn calibrate_parity(family: FamilyId, params: &Params) -> Result<ParityCalibration> {
    if !family.h.is_parity_recurrence() {
        return Err(Error::CalibrationFailed { family, detail: "not a parity family".into() });
    }
    let params = params.to_mode(Mode::Exact).validate(family)?;
    let spec = RecurrenceSpec::build(family, &params)?;
    let oracle = oracle_coeffs(family, &params, CALIBRATION_INDEX)?.coeffs;
    let survivors: Vec<BigRational> = parity_offset_candidates()
        .into_iter()
        .filter(|o| {
            spec.run(CALIBRATION_INDEX, &Correction::IndexOffset { offset: o.clone() })
                .map(|c| c == oracle)
                .unwrap_or(false)
        })
        .collect();
    match survivors.as_slice() {
        [o] => Ok(ParityCalibration { family, offset: o.clone(), verified_to: CALIBRATION_INDEX }),
        [] => Err(Error::CalibrationFailed { family, detail: "no candidate offset reproduces the oracle".into() }),
        many => Err(Error::CalibrationFailed {
            family,
            detail: format!("{} candidate offsets survive; indexing is ambiguous", many.len()),
        }),
    }
}
