//! Command-line front-end for `ellgen`: argument parsing, dispatch, and
//! deterministic JSON rendering.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use ellgen::algebra::json::qseries_to_json;
use ellgen::algebra::render_rational;
use ellgen::cancellation::{solve_cancellation, ChernRootSeries};
use ellgen::induction::{averaged_elliptic_genera, averaged_witten_genus, TracedSeries};
use ellgen::lambda_ring::{is_integral_series, BundleExpr};
use ellgen::lefschetz::{
    lefschetz_twisted_with, p_series, Operator, Options, SignConvention, Twist, WeightVector,
};
use ellgen::modforms::{modform_qexp, verify_modform_transforms, ModForm, ModFormSeries};
use ellgen::theta::{theta_qexp, verify_theta_transforms, ThetaKind};
use ellgen::Error;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for a domain error; stdout carries `{"error", "message"}`.
pub const EXIT_DOMAIN: i32 = 2;
/// Exit status for a malformed command line.
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug, Clone)]
#[command(name = "ellgen", version, about = "Exact Witten and elliptic genera of SL(2,R) x_{S^1} CP^{2l-1}")]
pub struct RunConfig {
    #[command(subcommand)]
    pub verb: Verb,

    /// Truncation order N in whole powers of q.
    #[arg(long, global = true, default_value_t = 10)]
    pub order: u32,

    /// Tolerance for numerical checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Pretty-print with this many spaces; compact when absent.
    #[arg(long, global = true)]
    pub json_indent: Option<usize>,

    /// Drop the orientation signs at the fixed points.
    #[arg(long, global = true)]
    pub unsigned: bool,

    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct WeightsArg {
    /// Distinct integers a_1,…,a_{2l} with even sum.
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Averaged Witten genus.
    WittenGenus(WeightsArg),
    /// Averaged elliptic genera phi1 and phi2.
    EllipticGenera(WeightsArg),
    /// Equivariant index series of a twisted operator on CP^{2l-1}.
    Lefschetz {
        #[command(flatten)]
        weights: WeightsArg,
        #[arg(long, default_value = "dirac")]
        operator: String,
        #[arg(long, default_value = "theta")]
        twist: String,
    },
    /// The fixed-point series P of the induced Witten genus.
    PSeries(WeightsArg),
    /// Jacobi theta functions.
    #[command(subcommand)]
    Theta(ThetaCmd),
    /// Level-2 modular forms.
    #[command(subcommand)]
    Modforms(ModformsCmd),
    /// Bundle expressions in the representation ring.
    #[command(subcommand)]
    Bundle(BundleCmd),
    /// Solve the L-hat / A-hat cancellation identity in dimension 4k.
    Cancellation {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ThetaCmd {
    /// Check the eight transformation laws at one point.
    Check {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        v: Complex64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        tau: Complex64,
    },
    /// Formal q-expansion of one theta function.
    Expand {
        #[arg(long, default_value = "theta")]
        kind: String,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ModformsCmd {
    /// q-expansions; all four forms unless one is named.
    Expand {
        #[arg(long)]
        name: Option<String>,
    },
    /// Check the level-2 transformation laws at one point.
    Check {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        tau: Complex64,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum BundleCmd {
    /// Expand an S-expression such as `(theta1 (tilde (sum (rep 2) (rep -2))))`.
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
}

/// Parses `RE,IM` (or a bare real number).
pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| format!("bad number {p:?}: {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected RE,IM, got {s:?}")),
    }
}

/// The exit status and the document to emit.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: i32,
    pub document: String,
}

/// Why a configuration could not be run.
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn render(v: &Value, indent: Option<usize>) -> String {
    let mut out = match indent {
        None => serde_json::to_string(v).expect("serializable"),
        Some(n) => {
            let pad = vec![b' '; n];
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut buf = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            serde::Serialize::serialize(v, &mut ser).expect("serializable");
            String::from_utf8(buf).expect("utf-8")
        }
    };
    out.push('\n');
    out
}

fn weights(arg: &WeightsArg) -> Run<WeightVector> {
    Ok(arg.weights.parse::<WeightVector>()?)
}

fn traced_json(s: &TracedSeries) -> Value {
    json!({
        "kind": s.source.to_string(),
        "series": qseries_to_json(&s.series),
        "identically_zero": s.is_zero(),
    })
}

fn modform_json(m: &ModFormSeries) -> Value {
    json!({
        "name": m.name.name(),
        "weight": m.weight,
        "group": serde_json::to_value(m.group).expect("serializable"),
        "series": qseries_to_json(&m.series),
    })
}

fn chern_json(c: &ChernRootSeries) -> Value {
    let mut map = Map::new();
    for (p, x) in c.terms() {
        let key = if p.is_empty() {
            "1".to_string()
        } else {
            p.iter().map(|r| format!("p{r}")).collect::<Vec<_>>().join("*")
        };
        map.insert(key, Value::String(render_rational(x)));
    }
    Value::Object(map)
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn dispatch(cfg: &RunConfig) -> Run<Value> {
    if cfg.order == 0 {
        return Err(Failure::Usage("--order must be at least 1".into()));
    }
    if !(cfg.tol > 0.0) {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    let n = cfg.order;
    let signs = if cfg.unsigned {
        SignConvention::Unsigned
    } else {
        SignConvention::Signed
    };
    Ok(match &cfg.verb {
        Verb::WittenGenus(w) => {
            let w = weights(w)?;
            let mut v = traced_json(&averaged_witten_genus(&w, n)?);
            v["weights"] = json!(w.weights());
            v
        }
        Verb::EllipticGenera(w) => {
            let w = weights(w)?;
            let (phi1, phi2) = averaged_elliptic_genera(&w, n)?;
            json!({
                "weights": w.weights(),
                "phi1": qseries_to_json(&phi1.series),
                "phi2": qseries_to_json(&phi2.series),
                "identically_zero": phi1.is_zero() && phi2.is_zero(),
            })
        }
        Verb::Lefschetz { weights: w, operator, twist } => {
            let w = weights(w)?;
            let op: Operator = operator.parse()?;
            let tw: Twist = twist.parse()?;
            let opts = Options { signs, ..Options::default() };
            let s = lefschetz_twisted_with(&w, op, tw, n, opts)?;
            json!({
                "weights": w.weights(),
                "operator": serde_json::to_value(op).expect("serializable"),
                "twist": serde_json::to_value(tw).expect("serializable"),
                "signed": !cfg.unsigned,
                "series": qseries_to_json(&s.series),
                "lambda_independent": s.is_lambda_independent(),
            })
        }
        Verb::PSeries(w) => {
            let w = weights(w)?;
            let s = p_series(&w, n)?;
            json!({
                "weights": w.weights(),
                "kind": s.kind.to_string(),
                "series": qseries_to_json(&s.series),
            })
        }
        Verb::Theta(ThetaCmd::Check { v, tau }) => {
            let report = verify_theta_transforms(*v, *tau, n, cfg.tol)?;
            let mut out = serde_json::to_value(report).expect("serializable");
            out["v"] = complex_json(*v);
            out["tau"] = complex_json(*tau);
            out["order"] = json!(n);
            out
        }
        Verb::Theta(ThetaCmd::Expand { kind }) => {
            let kind: ThetaKind = kind.parse()?;
            let e = theta_qexp(kind, n, 2 * n as i64 + 2);
            json!({
                "kind": kind.name(),
                "q_shift": format!("{}/{}", e.q_shift.0, e.q_shift.1),
                "prefactor": serde_json::to_value(e.prefactor).expect("serializable"),
                "series": qseries_to_json(&e.series),
            })
        }
        Verb::Modforms(ModformsCmd::Expand { name }) => match name {
            Some(name) => modform_json(&modform_qexp(name.parse::<ModForm>()?, n)),
            None => {
                let mut map = Map::new();
                for m in ModForm::ALL {
                    map.insert(m.name().to_string(), modform_json(&modform_qexp(m, n)));
                }
                Value::Object(map)
            }
        },
        Verb::Modforms(ModformsCmd::Check { tau }) => {
            let report = verify_modform_transforms(*tau, n, cfg.tol)?;
            let mut out = serde_json::to_value(report).expect("serializable");
            out["tau"] = complex_json(*tau);
            out["order"] = json!(n);
            out
        }
        Verb::Bundle(BundleCmd::Expand { expr }) => {
            let e = BundleExpr::parse(expr)?;
            let s = e.eval(n)?;
            json!({
                "expr": expr,
                "series": qseries_to_json(&s),
                "integral": is_integral_series(&s),
            })
        }
        Verb::Cancellation { k } => {
            let r = solve_cancellation(*k, n)?;
            json!({
                "k": r.k,
                "order": r.q_order,
                "h": r.h.iter().map(chern_json).collect::<Vec<_>>(),
                "coefficients": r.coefficients.iter().map(render_rational).collect::<Vec<_>>(),
                "exponents": r.exponents,
                "schedule": {
                    "3k-6b": r.graded_schedule,
                    "3k-6[k/2]": r.uniform_schedule,
                },
                "residual": chern_json(&r.residual),
                "residual_zero": r.residual.terms().next().is_none(),
                "p1_relation_holds": r.p1_residual.is_zero(),
            })
        }
    })
}

fn error_json(code: &str, message: &str) -> Value {
    json!({"error": code, "message": message})
}

/// Runs one parsed invocation. Output is a pure function of `cfg`.
pub fn run(cfg: &RunConfig) -> Outcome {
    match dispatch(cfg) {
        Ok(v) => Outcome {
            status: EXIT_OK,
            document: render(&v, cfg.json_indent),
        },
        Err(Failure::Domain(e)) => Outcome {
            status: EXIT_DOMAIN,
            document: render(&error_json(e.code(), &e.to_string()), cfg.json_indent),
        },
        Err(Failure::Usage(m)) => Outcome {
            status: EXIT_USAGE,
            document: render(&error_json("UsageError", &m), cfg.json_indent),
        },
    }
}

/// Parses `args` (including the program name) and runs it.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) if !e.use_stderr() => Outcome {
            status: EXIT_OK,
            document: e.to_string(),
        },
        Err(e) => Outcome {
            status: EXIT_USAGE,
            document: e.to_string(),
        },
    }
}
