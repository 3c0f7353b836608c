//! Wall-clock comparison of recurrence generation and oracle convolution.

use std::ops::RangeInclusive;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::oracle::oracle_coeffs;
use crate::params::Params;
use crate::recurrence::{generate, shipped_correction};

/// Accepted benchmark sizes.
pub const BENCH_SIZE_RANGE: RangeInclusive<usize> = 256..=65536;

/// Timings per size and the fitted log-log slopes `(recurrence, convolution)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchResult {
    pub family: FamilyId,
    pub precision_bits: Option<usize>,
    pub sizes: Vec<usize>,
    pub recurrence_ns: Vec<u64>,
    pub convolution_ns: Vec<u64>,
    pub fitted_exponents: (f64, f64),
}

impl BenchResult {
    /// Convolution time over recurrence time at the largest size.
    pub fn speedup_at_largest(&self) -> f64 {
        match (self.convolution_ns.last(), self.recurrence_ns.last()) {
            (Some(&c), Some(&r)) if r > 0 => c as f64 / r as f64,
            _ => f64::NAN,
        }
    }
}

/// Least-squares slope of `ln t` against `ln n`.
pub fn fit_exponent(sizes: &[usize], ns: &[u64]) -> f64 {
    let pts: Vec<(f64, f64)> = sizes.iter().zip(ns).map(|(&n, &t)| ((n as f64).ln(), (t.max(1) as f64).ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

fn time_ns<T>(f: impl FnOnce() -> T) -> (u64, T) {
    let start = Instant::now();
    let out = f();
    (start.elapsed().as_nanos() as u64, out)
}

/// Times `generate` and `oracle_coeffs` for each size (coefficients `0..=N-1`).
///
/// The recurrence takes the best of three runs; the quadratic convolution runs
/// once per size. Sizes must be strictly increasing, at least four, and inside
/// [`BENCH_SIZE_RANGE`].
pub fn bench(family: FamilyId, params: &Params, sizes: &[usize]) -> Result<BenchResult> {
    if sizes.len() < 4 || sizes.windows(2).any(|w| w[0] >= w[1]) || sizes.iter().any(|n| !BENCH_SIZE_RANGE.contains(n)) {
        return Err(Error::InvalidArgument(format!(
            "bench sizes must be >= 4 strictly increasing values in [{}, {}], got {sizes:?}",
            BENCH_SIZE_RANGE.start(),
            BENCH_SIZE_RANGE.end()
        )));
    }
    let params = params.validate(family)?;
    // Reconciliation is a one-time cost that must not be charged to the first size.
    let _ = shipped_correction(family);
    let mut recurrence_ns = Vec::with_capacity(sizes.len());
    let mut convolution_ns = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let mut best = u64::MAX;
        for _ in 0..3 {
            let (t, seq) = time_ns(|| generate(family, &params, n - 1));
            seq?;
            best = best.min(t);
        }
        recurrence_ns.push(best);
        let (t, seq) = time_ns(|| oracle_coeffs(family, &params, n - 1));
        seq?;
        convolution_ns.push(t);
    }
    let fitted_exponents = (fit_exponent(sizes, &recurrence_ns), fit_exponent(sizes, &convolution_ns));
    Ok(BenchResult {
        family,
        precision_bits: params.mode.precision(),
        sizes: sizes.to_vec(),
        recurrence_ns,
        convolution_ns,
        fitted_exponents,
    })
}
