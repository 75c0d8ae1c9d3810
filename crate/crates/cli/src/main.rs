//! `rho`: exact rho invariants, signatures and Maslov indices from the command line.
//!
//! Exit codes: 0 on success, 2 when the input violates a precondition,
//! 1 when a crosscheck finds a violated identity.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use rho_core::exactnum::gcd;
use rho_core::io::{canonical_json, parse_framing, parse_rep, parse_seifert, LagrangianFile};
use rho_core::lens::{rho_lens_with, LensSpace, Method};
use rho_core::link::common_denominator;
use rho_core::par::{with_jobs, Execution};
use rho_core::signatures::{
    levine_tristram, multivariable_signature, torus_knot_seifert, validate_torus_seifert, CComplexData,
};
use rho_core::surgery::{
    applicable_reports, rho_of_yl, rhs_casson_gordon, rhs_cf, rhs_integer_surgery, rhs_knot_rational,
    rhs_rational_surgery, rhs_seifert_surgery, torus_knot_crosscheck_with, CfSumMode, SurgeryReport,
};
use rho_core::verify::{self, CrosscheckConfig};
use rho_core::{hermitian, ColoredLink, Rational, RationalAngle, SeifertMatrix, SignatureSource};

#[derive(Parser)]
#[command(name = "rho", version, about = "Exact rho invariants, link signatures and Maslov indices")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Print canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Render non-integral rationals as 12-digit decimals.
    #[arg(long, global = true)]
    approx: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// JSON file with defaults for the flags above; flags given on the command line win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct Config {
    json: Option<bool>,
    approx: Option<bool>,
    seed: Option<u64>,
    jobs: Option<usize>,
}

struct Settings {
    json: bool,
    approx: bool,
    seed: u64,
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// ρ of the lens space L(p, q) at the character e^{2πiχ}.
    LensRho {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Sawtooth)]
        method: MethodArg,
    },
    /// Maslov triple index of three Lagrangians.
    Maslov {
        #[arg(long)]
        file: PathBuf,
    },
    /// Levine–Tristram signature of a Seifert matrix.
    LtSignature {
        #[arg(long)]
        seifert: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Multivariable signature of a C-complex.
    CcSignature {
        #[arg(long)]
        ccomplex: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
    },
    /// Seifert matrix of the torus knot T(r, s).
    TorusSeifert {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
    },
    /// ρ of the manifold obtained by surgery on a colored link.
    SurgeryRho {
        #[arg(long)]
        link: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        framing: String,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        /// Signature source: {"seifert": ...}, {"ccomplex": ...} or {"table": [...]}.
        #[arg(long)]
        sigma: PathBuf,
        #[arg(long, value_enum, default_value_t = TheoremArg::Auto)]
        theorem: TheoremArg,
        /// Pairs entering the last sum of the max-colored formula.
        #[arg(long, value_enum, default_value_t = CfSumArg::Full)]
        cf_sum: CfSumArg,
    },
    /// ρ of the manifold Y_L built from the plumbing graph of a colored link.
    YlRho {
        #[arg(long)]
        link: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long)]
        sigma: PathBuf,
    },
    /// Runs every identity check and exits 1 if any fails.
    Crosscheck {
        #[arg(long, default_value_t = 50)]
        max_p: i64,
    },
    /// Tabulates values over a parameter range.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
}

#[derive(Subcommand)]
enum SweepKind {
    /// ρ(L(p, q), χ) for 1 ≤ p ≤ max-p, 0 < q < p coprime, all characters.
    Lens {
        #[arg(long, default_value_t = 12)]
        max_p: i64,
    },
    /// σ(θ) for every θ with denominator at most max-den.
    Lt {
        #[arg(long)]
        seifert: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_den: i64,
    },
    /// The torus-knot surgery comparison for coprime 2 ≤ r < s ≤ max-s.
    Torus {
        #[arg(long, default_value_t = 5)]
        max_s: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Sawtooth,
    Floor,
    Lattice,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Auto,
    CimasoniFlorens,
    IntegerSurgery,
    SeifertSurgery,
    RationalSurgery,
    KnotRationalSurgery,
    CassonGordon,
}

#[derive(Clone, Copy, ValueEnum)]
enum CfSumArg {
    Full,
    UpperTriangle,
    Diagonal,
}

impl From<CfSumArg> for CfSumMode {
    fn from(a: CfSumArg) -> Self {
        match a {
            CfSumArg::Full => CfSumMode::Full,
            CfSumArg::UpperTriangle => CfSumMode::UpperTriangle,
            CfSumArg::Diagonal => CfSumMode::Diagonal,
        }
    }
}

enum Failure {
    /// Exit code 2.
    Input(String),
    /// Exit code 1; the report is still printed.
    Violation(Output),
}

impl From<rho_core::Error> for Failure {
    fn from(e: rho_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    value: Value,
    /// Rows and columns for a text table; the JSON form is `value`.
    table: Option<(Vec<Value>, &'static [&'static str])>,
}

impl Output {
    fn value(value: Value) -> Self {
        Output { value, table: None }
    }

    fn with_table(value: Value, rows: Vec<Value>, columns: &'static [&'static str]) -> Self {
        Output { value, table: Some((rows, columns)) }
    }
}

type Outcome = Result<Output, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match settings(&cli.global) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let outcome = with_jobs(settings.jobs, || run(&cli.command, &settings));
    match outcome {
        Ok(out) => {
            emit(out, &settings);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(out)) => {
            emit(out, &settings);
            eprintln!("error: identity check failed");
            ExitCode::from(1)
        }
    }
}

fn settings(global: &Global) -> Result<Settings, String> {
    let config: Config = match &global.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => Config::default(),
    };
    Ok(Settings {
        json: global.json || config.json.unwrap_or(false),
        approx: global.approx || config.approx.unwrap_or(false),
        seed: global.seed.or(config.seed).unwrap_or(CrosscheckConfig::default().seed),
        jobs: global.jobs.or(config.jobs),
    })
}

fn emit(out: Output, settings: &Settings) {
    if settings.json {
        println!("{}", canonical_json(&output::finalize(out.value, settings.approx)));
        return;
    }
    match out.table {
        Some((rows, columns)) => {
            let rows: Vec<Value> = rows.into_iter().map(|r| output::finalize(r, settings.approx)).collect();
            print!("{}", output::table(&rows, columns));
        }
        None => print!("{}", output::text(&output::finalize(out.value, settings.approx))),
    }
}

fn run(command: &Command, settings: &Settings) -> Outcome {
    match command {
        Command::LensRho { p, q, chi, method } => lens_rho(*p, *q, chi, *method),
        Command::Maslov { file } => maslov(file),
        Command::LtSignature { seifert, theta } => {
            let a = read_seifert(seifert)?;
            let theta = parse_angle(theta)?;
            let sigma = levine_tristram(&a, &theta)?;
            Ok(Output::value(json!({ "theta": theta.to_string(), "sigma": sigma })))
        }
        Command::CcSignature { ccomplex, omega } => {
            let c: CComplexData = read_input(ccomplex)?;
            let omega = parse_rep(omega)?;
            let sigma = multivariable_signature(&c, &omega)?;
            Ok(Output::value(json!({ "omega": output::angle_list(omega.angles()), "sigma": sigma })))
        }
        Command::TorusSeifert { r, s } => {
            let a = torus_knot_seifert(*r, *s)?;
            let validated = validate_torus_seifert(&a, *r, *s);
            let value = json!({ "r": r, "s": s, "matrix": a, "alexander_validated": validated });
            if !validated {
                return Err(Failure::Violation(Output::value(value)));
            }
            Ok(Output::value(value))
        }
        Command::SurgeryRho { link, framing, omega, sigma, theorem, cf_sum } => {
            surgery_rho(link, framing, omega, sigma, *theorem, (*cf_sum).into())
        }
        Command::YlRho { link, omega, sigma } => {
            let link: ColoredLink = read_input(link)?;
            let omega = parse_rep(omega)?;
            let sigma: SignatureSource = read_input(sigma)?;
            let report = rho_of_yl(&link, &omega, &sigma)?;
            Ok(Output::value(serde_json::to_value(report).expect("reports serialize")))
        }
        Command::Crosscheck { max_p } => crosscheck(*max_p, settings.seed),
        Command::Sweep { kind } => sweep(kind),
    }
}

fn read_input<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let raw: Value =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_value(output::normalize_input(raw))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_seifert(path: &Path) -> Result<SeifertMatrix, Failure> {
    let raw: Value = read_input(path)?;
    let normalized = output::normalize_input(raw);
    Ok(parse_seifert(&normalized.to_string())?)
}

fn parse_angle(text: &str) -> Result<RationalAngle, Failure> {
    Ok(RationalAngle::new(text.parse::<Rational>()?))
}

fn lens_rho(p: i64, q: i64, chi: &str, method: MethodArg) -> Outcome {
    let space = LensSpace::new(p, q)?;
    let chi = parse_angle(chi)?;
    if !space.admits(&chi) {
        return Err(Failure::Input(format!("character θ={chi} is not a {}-th root of unity", p.abs())));
    }
    let single = |m: Method| -> Result<String, Failure> { Ok(rho_lens_with(m, p, q, &chi)?.to_string()) };
    let base = json!({ "p": p, "q": q, "chi": chi.to_string() });
    let mut value = base;
    let obj = value.as_object_mut().expect("object literal");
    match method {
        MethodArg::All => {
            let values = [Method::Sawtooth, Method::Floor, Method::Lattice]
                .into_iter()
                .map(single)
                .collect::<Result<Vec<_>, _>>()?;
            let agreement = values.windows(2).all(|w| w[0] == w[1]);
            obj.insert("sawtooth".into(), json!(values[0]));
            obj.insert("floor".into(), json!(values[1]));
            obj.insert("lattice".into(), json!(values[2]));
            obj.insert("agreement".into(), json!(agreement));
            if !agreement {
                return Err(Failure::Violation(Output::value(value)));
            }
        }
        one => {
            let (m, name) = match one {
                MethodArg::Sawtooth => (Method::Sawtooth, "sawtooth"),
                MethodArg::Floor => (Method::Floor, "floor"),
                _ => (Method::Lattice, "lattice"),
            };
            obj.insert("method".into(), json!(name));
            obj.insert("rho".into(), json!(single(m)?));
        }
    }
    Ok(Output::value(value))
}

fn maslov(file: &Path) -> Outcome {
    let f: LagrangianFile = read_input(file)?;
    if f.lagrangians.len() != 3 {
        return Err(Failure::Input(format!("expected 3 Lagrangians, found {}", f.lagrangians.len())));
    }
    let (space, ls) = f.build()?;
    let form = hermitian::triple_form(&space, &ls[0], &ls[1], &ls[2])?;
    Ok(Output::value(json!({
        "dimension": space.dim(),
        "form": form.entries(),
        "tau": form.signature(),
    })))
}

fn evaluate(
    theorem: TheoremArg,
    link: &ColoredLink,
    framing: &rho_core::Framing,
    omega: &rho_core::ColoredRep,
    sigma: &SignatureSource,
    cf_sum: CfSumMode,
) -> Result<SurgeryReport, Failure> {
    let knot_only = |name: &str| -> Result<(), Failure> {
        if link.components() == 1 {
            Ok(())
        } else {
            Err(Failure::Input(format!("{name} applies to knots, but the link has {} components", link.components())))
        }
    };
    Ok(match theorem {
        TheoremArg::Auto => unreachable!("handled by the caller"),
        TheoremArg::IntegerSurgery => rhs_integer_surgery(link, omega, framing, sigma)?,
        TheoremArg::SeifertSurgery => rhs_seifert_surgery(link, omega, sigma)?,
        TheoremArg::RationalSurgery => rhs_rational_surgery(link, omega, framing, sigma)?,
        TheoremArg::CimasoniFlorens => {
            if omega.len() != link.colors() {
                return Err(rho_core::Error::DimensionMismatch { expected: link.colors(), found: omega.len() }.into());
            }
            let q = common_denominator(omega);
            let nvec: Vec<i64> = (0..link.components())
                .map(|i| {
                    (omega.meridian_angle(link, i).theta() * Rational::from(q)).to_i64().expect("q clears denominators")
                })
                .collect();
            rhs_cf(link, q, &nvec, framing, sigma, cf_sum)?
        }
        TheoremArg::KnotRationalSurgery => {
            knot_only("knot_rational_surgery")?;
            let SignatureSource::Seifert(a) = sigma else {
                return Err(Failure::Input("knot_rational_surgery needs a Seifert matrix signature source".into()));
            };
            let (p, q) = framing.pair(0);
            rhs_knot_rational(a, omega.angle(0), p, q)?
        }
        TheoremArg::CassonGordon => {
            knot_only("casson_gordon")?;
            if !framing.is_integral() {
                return Err(rho_core::Error::NonIntegerFraming { index: 1 }.into());
            }
            rhs_casson_gordon(sigma, framing.pair(0).0, omega.angle(0))?
        }
    })
}

fn surgery_rho(
    link: &Path,
    framing: &str,
    omega: &str,
    sigma: &Path,
    theorem: TheoremArg,
    cf_sum: CfSumMode,
) -> Outcome {
    let link: ColoredLink = read_input(link)?;
    let framing = parse_framing(framing)?;
    let omega = parse_rep(omega)?;
    let sigma: SignatureSource = read_input(sigma)?;
    if theorem != TheoremArg::Auto {
        let report = evaluate(theorem, &link, &framing, &omega, &sigma, cf_sum)?;
        if !report.hypotheses_hold() {
            return Err(Failure::Input(format!(
                "hypotheses of {} not satisfied: {}",
                report.theorem_used.name(),
                report.failed_hypotheses().join(", ")
            )));
        }
        return Ok(Output::value(serde_json::to_value(report).expect("reports serialize")));
    }
    let reports = applicable_reports(&link, &omega, &framing, &sigma)?;
    let Some(first) = reports.first() else {
        return Err(Failure::Input(
            "no surgery formula applies to this link, framing and character (see --theorem for the failed hypotheses)"
                .into(),
        ));
    };
    let consistent = reports.iter().all(|r| r.value == first.value);
    let value = json!({
        "value": first.value,
        "theorem_used": first.theorem_used,
        "consistent": consistent,
        "reports": reports,
    });
    if !consistent {
        return Err(Failure::Violation(Output::value(value)));
    }
    Ok(Output::value(value))
}

fn crosscheck(max_p: i64, seed: u64) -> Outcome {
    if max_p < 1 {
        return Err(Failure::Input(format!("--max-p must be positive (got {max_p})")));
    }
    let cfg = CrosscheckConfig { max_p, seed, exec: Execution::default(), ..CrosscheckConfig::default() };
    let results = verify::run_all(&cfg);
    let passed = results.iter().all(|r| r.passed);
    let rows: Vec<Value> = results
        .iter()
        .map(|r| json!({ "check": r.name, "status": if r.passed { "PASS" } else { "FAIL" }, "cases": r.cases, "detail": r.detail }))
        .collect();
    let out = Output::with_table(
        json!({ "seed": seed, "passed": passed, "checks": results }),
        rows,
        &["status", "check", "cases", "detail"],
    );
    if passed {
        Ok(out)
    } else {
        Err(Failure::Violation(out))
    }
}

fn sweep(kind: &SweepKind) -> Outcome {
    let exec = Execution::default();
    let (rows, columns): (Vec<Value>, &'static [&'static str]) = match kind {
        SweepKind::Lens { max_p } => {
            let mut items = Vec::new();
            for p in 1..=*max_p {
                for q in (1..p.max(2)).filter(|&q| gcd(p, q) == 1) {
                    items.extend((0..p).map(|m| (p, q, m)));
                }
            }
            let rows = exec.map(&items, |&(p, q, m)| -> Result<Value, rho_core::Error> {
                let chi = RationalAngle::frac(m, p);
                let rho = rho_lens_with(Method::Sawtooth, p, q, &chi)?;
                Ok(json!({ "p": p, "q": q, "chi": chi.to_string(), "rho": rho }))
            });
            (rows.into_iter().collect::<Result<_, _>>()?, &["p", "q", "chi", "rho"])
        }
        SweepKind::Lt { seifert, max_den } => {
            let a = read_seifert(seifert)?;
            let mut angles = Vec::new();
            for d in 2..=*max_den {
                angles.extend((1..d).filter(|&m| gcd(m, d) == 1).map(|m| RationalAngle::frac(m, d)));
            }
            angles.sort_by(|x, y| x.theta().cmp(y.theta()));
            let rows = exec.map(&angles, |w| -> Result<Value, rho_core::Error> {
                Ok(json!({ "theta": w.to_string(), "sigma": levine_tristram(&a, w)? }))
            });
            (rows.into_iter().collect::<Result<_, _>>()?, &["theta", "sigma"])
        }
        SweepKind::Torus { max_s } => {
            let mut items = Vec::new();
            for s in 3..=*max_s {
                for r in (2..s).filter(|&r| gcd(r, s) == 1) {
                    let a = torus_knot_seifert(r, s)?;
                    items.extend((1..r * s - 1).map(|k| (a.clone(), r, s, k)));
                }
            }
            let rows = exec.map(&items, |(a, r, s, k)| torus_knot_crosscheck_with(a, *r, *s, *k));
            let rows = rows
                .into_iter()
                .map(|r| r.map(|x| serde_json::to_value(x).expect("reports serialize")))
                .collect::<Result<_, _>>()?;
            (rows, &["r", "s", "k", "sigma", "lens", "surgery", "abs_equal", "epsilon"])
        }
    };
    Ok(Output::with_table(Value::Array(rows.clone()), rows, columns))
}
