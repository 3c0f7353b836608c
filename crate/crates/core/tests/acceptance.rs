//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Tolerances are fixed: exact equality through index 40; evaluation residual
//! 1e-20 relative at 128 bits with N = 60 and 80 direct terms; scaling
//! exponents ≤ 1.2 and ≥ 1.8 with a speedup ≥ 50 at N = 2^14.
//!
//! The process fails when a criterion's outcome differs from the expected one.
//! Criterion 1 is expected to fail for exactly the four arcsine/arccosine
//! families, whose printed depth-14 recurrences no admissible correction
//! reconciles; they are served by the oracle fallback and reported as such.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use besselprod::analysis::{bench, direct_value, evaluate, safe_radius};
use besselprod::format::{from_json_str, parse_csv, to_csv, to_json_string};
use besselprod::oracle::{bessel_core, oracle_coeffs};
use besselprod::recurrence::seeds;
use besselprod::scalar::rel_err;
use besselprod::verify::{cross_identities, reconcile_default, verify_all};
use besselprod::{
    default_test_points, generate, BigComplex, Correction, FamilyId, GaussRat, HKind, Mode, Normalization,
    Params, Parity, Scalar, Source,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_N: usize = 40;

struct Outcome {
    pass: bool,
    detail: String,
}

fn fam(s: &str) -> FamilyId {
    s.parse().unwrap()
}

fn valid_points(f: FamilyId) -> Vec<Params> {
    default_test_points().into_iter().filter(|p| p.validate(f).is_ok()).collect()
}

fn criterion_1() -> (Outcome, BTreeSet<String>) {
    let mut failing = BTreeSet::new();
    let mut corrected = Vec::new();
    for f in FamilyId::all() {
        let rec = reconcile_default(f);
        let points = valid_points(f).len();
        let ok = rec.is_resolved() && rec.survivors.len() <= 1 && rec.verified_to >= MAX_N && points >= 3;
        if !ok {
            failing.insert(f.to_string());
        } else if let Some(c) = rec.correction.filter(|c| *c != Correction::AsPrinted) {
            corrected.push(format!("{f}: {c}"));
        }
    }
    // The shipped generator must equal the oracle everywhere it is resolved.
    let exact: Vec<Params> = default_test_points();
    for r in verify_all(&exact, MAX_N, 0.0) {
        if !r.passed && r.source != Some(Source::OracleFallback) {
            failing.insert(r.family.to_string());
        }
    }
    let detail = format!(
        "{} of 26 families reproduce the oracle through index {MAX_N}; documented corrections [{}]; unresolved [{}]",
        26 - failing.len(),
        corrected.join(", "),
        failing.iter().cloned().collect::<Vec<_>>().join(", ")
    );
    (Outcome { pass: failing.is_empty(), detail }, failing)
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for f in FamilyId::all() {
        let flagged = reconcile_default(f).seed_mismatches();
        for p in valid_points(f) {
            let s = seeds(f, &p).unwrap();
            let o = oracle_coeffs(f, &p, s.len().saturating_sub(1)).unwrap();
            for (n, (a, b)) in s.iter().zip(&o.coeffs).enumerate() {
                checked += 1;
                if a != b && !flagged.contains(&n) {
                    bad.push(format!("{f} u_{n}"));
                }
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("{checked} printed seed values checked, mismatches {bad:?}") }
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut families = 0;
    for f in FamilyId::all().into_iter().filter(|f| f.parity() != Parity::None) {
        families += 1;
        for p in valid_points(f) {
            for mode in [Mode::Exact, Mode::float(128)] {
                let seq = generate(f, &p.to_mode(mode), MAX_N).unwrap();
                if !seq.parity_holds() {
                    bad.push(format!("{f} ({mode:?})"));
                }
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("{families} parity families, exact and 128-bit, through index {MAX_N}; failures {bad:?}") }
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    let mut checks = 0;
    for p in default_test_points() {
        let rep = cross_identities(&p, MAX_N);
        checks += rep.checks.len();
        bad.extend(rep.checks.iter().filter(|c| !c.holds).map(|c| format!("({}) {:?} at nu={}", c.identity, c.bessel, rep.nu)));
    }
    Outcome { pass: bad.is_empty(), detail: format!("{checks} identity checks (a-e) exact through index {MAX_N}; failures {bad:?}") }
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for base in default_test_points() {
        let zero_p = base.with_p(Scalar::int(0));
        for f in FamilyId::all() {
            let params = if f.h == HKind::Power { zero_p.with_theta(Scalar::ratio(1, 2)) } else { zero_p.clone() };
            if params.validate(f).is_err() {
                continue;
            }
            let core = bessel_core(f.bessel, &params.nu, MAX_N, Mode::Exact).unwrap().coeffs;
            let limit: Vec<Scalar> = match f.h {
                HKind::Sin | HKind::Sinh | HKind::Arcsin | HKind::SinhViaExp | HKind::SinViaExp => vec![Scalar::int(0); MAX_N + 1],
                HKind::Arccos => core.iter().map(|c| c * &Scalar::pi_times(GaussRat::ratio(1, 2), Mode::Exact)).collect(),
                _ => core.clone(),
            };
            let factor = Scalar::gauss(Normalization::for_family(f).stored_factor());
            let want: Vec<Scalar> = limit.iter().map(|c| c * &factor).collect();
            checked += 1;
            match generate(f, &params, MAX_N) {
                Ok(s) if s.coeffs == want => {}
                Ok(_) => bad.push(format!("{f} p=0")),
                Err(e) => bad.push(format!("{f} p=0: {e}")),
            }
        }
        let power = base.with_p(Scalar::ratio(3, 2)).with_theta(Scalar::int(0));
        for f in [fam("power-J"), fam("power-I")] {
            checked += 1;
            let core = bessel_core(f.bessel, &power.nu, MAX_N, Mode::Exact).unwrap().coeffs;
            match generate(f, &power, MAX_N) {
                Ok(s) if s.coeffs == core => {}
                Ok(_) => bad.push(format!("{f} theta=0")),
                Err(e) => bad.push(format!("{f} theta=0: {e}")),
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("{checked} reductions exact through index {MAX_N}; failures {bad:?}") }
}

/// Parameters for the residual sweep: complex p, non-integer ν, and a θ whose
/// safe disc is the unit disc.
fn residual_params(f: FamilyId) -> Params {
    let theta = f.h.uses_theta().then_some("1/3");
    Params::parse("3/7", "1/2+1/3i", theta, Mode::float(128)).unwrap().validate(f).unwrap()
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = (0.0f64, String::new());
    let mut bad = Vec::new();
    for f in FamilyId::all() {
        let params = residual_params(f);
        let seq = generate(f, &params, 60).unwrap();
        let r = safe_radius(f, &params);
        for _ in 0..20 {
            let (rho, phi): (f64, f64) = (r * rng.gen::<f64>().sqrt(), rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI));
            let z = Scalar::Float(BigComplex::from_f64(rho * phi.cos(), rho * phi.sin(), 128));
            let value = evaluate(&seq, &z).unwrap().value;
            let direct = direct_value(f, &params, &z, 80).unwrap();
            let err = rel_err(&value, &direct);
            if err > worst.0 {
                worst = (err, format!("{f} at |z|={rho:.3}"));
            }
            if err > 1e-20 || err.is_nan() {
                bad.push(format!("{f} |z|={rho:.3} err={err:.2e}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = bad.is_empty() && secs < 60.0;
    Outcome { pass, detail: format!("520 points, worst relative residual {:.2e} ({}), {secs:.1}s; failures {bad:?}", worst.0, worst.1) }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let params = Params::parse("1/3", "1/2", None, Mode::float(128)).unwrap();
    let sizes: Vec<usize> = (10..=14).map(|k| 1usize << k).collect();
    let r = bench(fam("exp-J"), &params, &sizes).unwrap();
    let (rec, conv) = r.fitted_exponents;
    let speedup = r.speedup_at_largest();
    let secs = start.elapsed().as_secs_f64();
    let pass = rec <= 1.2 && conv >= 1.8 && speedup >= 50.0 && secs < 120.0;
    Outcome {
        pass,
        detail: format!("exp-J at 128 bits, N=2^10..2^14: recurrence exponent {rec:.3}, convolution exponent {conv:.3}, speedup {speedup:.0}x at 2^14, {secs:.1}s"),
    }
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let families = ["exp-J", "power-I", "sin_via_exp-J", "cos-I", "arccos-J"];
    for name in families {
        let f = fam(name);
        let base = Params::parse("1/3+1/5i", "3/4-1/2i", Some("-2/3"), Mode::Exact).unwrap();
        for mode in [Mode::Exact, Mode::float(128), Mode::float(256)] {
            let seq = generate(f, &base.to_mode(mode), MAX_N).unwrap();
            let text = to_json_string(&seq);
            let back = from_json_str(&text).unwrap();
            let again = to_json_string(&back);
            let csv_ok = parse_csv(&to_csv(&seq), mode).map(|c| c == seq.coeffs).unwrap_or(false);
            if back != seq || again != text || !csv_ok {
                bad.push(format!("{name} ({mode:?})"));
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("{} families, exact/128/256-bit, JSON and CSV; failures {bad:?}", families.len()) }
}

fn main() -> ExitCode {
    let expected_unresolved: BTreeSet<String> =
        ["arccos-I", "arccos-J", "arcsin-I", "arcsin-J"].into_iter().map(String::from).collect();
    let mut unexpected = Vec::new();
    let mut report = |k: u32, name: &str, o: Outcome, expect_pass: bool| {
        println!("[{}] {k}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if o.pass != expect_pass {
            unexpected.push(k);
        }
    };
    let (c1, failing) = criterion_1();
    let c1_expected = failing == expected_unresolved;
    report(1, "exact oracle equivalence", c1, false);
    if !c1_expected {
        println!("    unexpected failure set for criterion 1: {failing:?}");
    }
    report(2, "seed closed forms", criterion_2(), true);
    report(3, "parity exactness", criterion_3(), true);
    report(4, "cross identities", criterion_4(), true);
    report(5, "reduction limits", criterion_5(), true);
    report(6, "evaluation residual", criterion_6(), true);
    report(7, "performance scaling", criterion_7(), true);
    report(8, "format stability", criterion_8(), true);
    println!("[NOTE] criterion 1 fails for {failing:?}: no index offset, single sign flip or single lag shift reconciles their printed depth-14 recurrences; generation uses the oracle fallback for them.");
    if unexpected.is_empty() && c1_expected {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
