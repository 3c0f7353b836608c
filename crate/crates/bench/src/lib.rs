//! Benchmark fixtures shared by the criterion harness.

use besselprod::{FamilyId, Mode, Params};

/// Working precision of every benchmark, in bits.
pub const PRECISION: usize = 128;

/// Families benchmarked: plain, two-sequence, power and arctangent recurrences.
///
/// The sin/cos/sinh/cosh recurrences are forward-unstable in float mode and
/// switch to the oracle beyond a few hundred terms, so they are not timed here.
pub const FAMILIES: [&str; 4] = ["exp-J", "cosh_via_exp-I", "power-I", "exp_arctan-J"];

/// Sizes N for recurrence generation.
pub const RECURRENCE_SIZES: [usize; 5] = [1024, 2048, 4096, 8192, 16384];

/// Sizes N for the quadratic convolution (kept small so a run stays short).
pub const CONVOLUTION_SIZES: [usize; 3] = [256, 512, 1024];

pub fn family(name: &str) -> FamilyId {
    name.parse().expect("benchmark family")
}

/// Fixed float parameters: ν = 1/3, p = 1/2, θ = 1/3 where used.
pub fn params(family: FamilyId) -> Params {
    let theta = family.h.uses_theta().then_some("1/3");
    Params::parse("1/3", "1/2", theta, Mode::float(PRECISION)).expect("benchmark parameters")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        for name in FAMILIES {
            let f = family(name);
            assert!(params(f).validate(f).is_ok());
        }
        assert!(RECURRENCE_SIZES.windows(2).all(|w| w[0] < w[1]));
    }
}
