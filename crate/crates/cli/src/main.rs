//! `besselprod`: generate, verify, reconcile, evaluate and benchmark
//! Maclaurin coefficient sequences of h(z)·J_ν(z) and h(z)·I_ν(z).

use std::path::PathBuf;
use std::process::ExitCode;

use besselprod::analysis::{self, convergence_radius, residual};
use besselprod::format::{scalar_to_json, to_csv, to_json_string};
use besselprod::oracle::oracle_coeffs;
use besselprod::scalar::parse_gauss;
use besselprod::verify::{reconcile_all, reconcile_default, verify_all};
use besselprod::{default_test_points, generate, Error, FamilyId, Mode, Params, Scalar, DEFAULT_PRECISION};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VALIDATION: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "besselprod", version, about = "Coefficient recurrences for h(z)·J_ν(z) and h(z)·I_ν(z)")]
struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficient table u_0..u_N.
    Gen {
        #[command(flatten)]
        point: Point,
        /// Highest index N.
        #[arg(short = 'N')]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        /// Use the series oracle instead of the recurrence.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare recurrences with the oracle at the default test points.
    Verify {
        #[command(flatten)]
        select: Select,
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        /// Relative tolerance in float mode.
        #[arg(long, default_value_t = 1e-25)]
        tol: f64,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Search for the correction under which each printed recurrence matches the oracle.
    Reconcile {
        #[command(flatten)]
        select: Select,
    },
    /// Evaluate the truncated expansion at z and compare with direct evaluation.
    Eval {
        #[command(flatten)]
        point: Point,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(short = 'N', default_value_t = 60)]
        n: usize,
        /// Terms of the direct Bessel summation.
        #[arg(long, default_value_t = 80)]
        terms: usize,
        /// Allow |z| up to the convergence radius instead of half of it.
        #[arg(long)]
        no_safety: bool,
    },
    /// Time recurrence generation against oracle convolution.
    Bench {
        #[arg(long)]
        family: FamilyId,
        /// Comma-separated sizes, e.g. 1024,2048,4096,8192.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value = "1/3", allow_hyphen_values = true)]
        nu: String,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value = "1/3", allow_hyphen_values = true)]
        theta: String,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
}

#[derive(Args, Debug)]
struct Point {
    #[arg(long)]
    family: FamilyId,
    /// Bessel order, written `re[+im i]` (e.g. `1/3`, `0.5-2i`).
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Float precision in bits.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
    /// Exact rational arithmetic.
    #[arg(long)]
    exact: bool,
}

impl Point {
    fn params(&self) -> Result<Params, Error> {
        let mode = if self.exact { Mode::Exact } else { float_mode(self.precision)? };
        Params::parse(&self.nu, &self.p, self.theta.as_deref(), mode)?.validate(self.family)
    }
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct Select {
    #[arg(long)]
    family: Option<FamilyId>,
    /// Every family (the default).
    #[arg(long)]
    all: bool,
}

impl Select {
    fn families(&self) -> Vec<FamilyId> {
        self.family.map_or_else(FamilyId::all, |f| vec![f])
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

fn float_mode(bits: usize) -> Result<Mode, Error> {
    if bits < besselprod::scalar::MIN_PRECISION {
        return Err(Error::InvalidPrecision { got: bits, min: besselprod::scalar::MIN_PRECISION });
    }
    Ok(Mode::float(bits))
}

/// Output text and exit code of a successful run.
struct Outcome {
    text: String,
    code: u8,
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable report")
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    let ok = |text: String| Outcome { text, code: 0 };
    match cmd {
        Command::Gen { point, n, format, oracle } => {
            let params = point.params()?;
            let seq = if oracle { oracle_coeffs(point.family, &params, n)? } else { generate(point.family, &params, n)? };
            Ok(ok(match format {
                OutFormat::Json => to_json_string(&seq),
                OutFormat::Csv => to_csv(&seq),
            }))
        }
        Command::Verify { select, max_n, tol, exact, precision } => {
            let mode = if exact { Mode::Exact } else { float_mode(precision)? };
            let points: Vec<Params> = default_test_points().iter().map(|p| p.to_mode(mode)).collect();
            let families = select.families();
            let mut reports: Vec<_> =
                verify_all(&points, max_n, tol).into_iter().filter(|r| families.contains(&r.family)).collect();
            reports.sort_by_key(|r| FamilyId::all().iter().position(|f| *f == r.family));
            let failed = reports.iter().filter(|r| !r.passed).count();
            let doc = json!({ "passed": failed == 0, "failed": failed, "reports": reports });
            Ok(Outcome { text: pretty(&doc), code: if failed == 0 { 0 } else { EXIT_FAILURE } })
        }
        Command::Reconcile { select } => {
            let text = match select.family {
                Some(f) => pretty(&reconcile_default(f)),
                None => pretty(&reconcile_all(&default_test_points())),
            };
            Ok(ok(text))
        }
        Command::Eval { point, z, n, terms, no_safety } => {
            let params = point.params()?;
            let prec = params.mode.precision().unwrap_or(DEFAULT_PRECISION);
            let zs = Scalar::gauss(parse_gauss(&z)?).to_mode(Mode::float(prec));
            if let Some(radius) = convergence_radius(point.family, &params) {
                let limit = if no_safety { radius } else { radius / 2.0 };
                let abs_z = zs.abs_f64();
                if abs_z >= limit {
                    return Err(Error::OutsideDisc { family: point.family, abs_z, radius: limit });
                }
            }
            let seq = generate(point.family, &params, n)?;
            let eval = analysis::evaluate_at(&seq, &zs, prec)?;
            let res = residual(&seq, &eval, terms)?;
            let doc = json!({
                "family": point.family.to_string(),
                "params": {
                    "nu": scalar_to_json(&params.nu),
                    "p": scalar_to_json(&params.p),
                    "theta": params.theta.as_ref().map(scalar_to_json),
                },
                "precision_bits": prec,
                "z": scalar_to_json(&zs),
                "N": eval.truncation_index,
                "value": scalar_to_json(&eval.value),
                "tail_estimate": eval.tail_estimate,
                "direct_value": res.direct_value,
                "direct_terms": terms,
                "abs_diff": res.abs_diff,
                "rel_err": res.rel_err,
                "source": seq.source,
            });
            Ok(ok(pretty(&doc)))
        }
        Command::Bench { family, sizes, nu, p, theta, precision } => {
            let theta = family.h.uses_theta().then_some(theta.as_str());
            let params = Params::parse(&nu, &p, theta, float_mode(precision)?)?;
            let result = analysis::bench(family, &params, &sizes)?;
            let mut doc: Value = serde_json::to_value(&result).expect("serializable");
            doc["speedup_at_largest"] = json!(result.speedup_at_largest());
            Ok(ok(pretty(&doc)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(Outcome { text, code }) => {
            let text = if text.ends_with('\n') { text } else { text + "\n" };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_FAILURE);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}
