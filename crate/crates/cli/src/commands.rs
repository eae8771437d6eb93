//! Argument parsing, dispatch and report documents.
//!
//! Every command produces one JSON report whose first two fields are
//! `command` and `verdict`. Constructions report `"ok"`; decisions report
//! `"true"`/`"false"`; law checks report `"pass"`/`"fail"`/`"vacuous"`;
//! errors report `"error"` with a `kind` and a message.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use markov_core::diagram::{ChainCategory, ChainDiagram, DiagramMorphism, NaturalSampler};
use markov_core::finprob::{
    as_deterministic, as_equal, bayes_invert, ci_gen, ci_markov, ci_proc, ci_state, conditional,
    conditional_product, disintegrate, disintegration_holds, randomness_pushback, support, Stoch,
    TripleSplit, DEFAULT_PUSHBACK_BOUND,
};
use markov_core::gauss::{g_conditional, g_marginalize, g_pushback, Gauss, GaussMorphism, GaussSampler, DEFAULT_CUTOFF, DEFAULT_TOL};
use markov_core::matcat::{project, Bool, FinSet, Fuzzy, Kernel, KernelSampler, MatCat, Prob, Semiring, Signed};
use markov_core::stats::{
    check_bahadur, check_basu, is_ancillary, is_complete, is_sufficient, minimal_sufficient, statistic_leq,
    Completeness, StatModel, Statistic, DEFAULT_PARTITION_BOUND,
};
use markov_core::{
    check_causality_instance, check_comonoid_laws, check_deterministic, check_positivity_instance, LawReport,
    MarkovCategory, Verdict,
};
use serde_json::{json, Map, Value};

use crate::error::{CliError, EXIT_FAIL, EXIT_PASS, EXIT_PRECONDITION, EXIT_USAGE};
use crate::format::{canonical, gauss_value, kernel_value, parse_kernel, parse_morphism, AnyKernel, Morphism, ObjectSpec};
use crate::witness;

#[derive(Debug, Parser)]
#[command(name = "markov", version, about = "Exact Markov-kernel constructions, law checks and statistics decisions")]
struct Cli {
    /// Seed for commands that sample.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Componentwise tolerance for Gaussian files.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sequential composite: F runs first, then G.
    Compose { f: PathBuf, g: PathBuf },
    /// Parallel composite F ⊗ G.
    Tensor { f: PathBuf, g: PathBuf },
    /// Keeps the listed output factors (kernels) or coordinates (Gaussian).
    Marginal {
        f: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0.., required = true)]
        keep: Vec<usize>,
    },
    /// Conditional on the first `split` output factors or coordinates.
    Condition {
        f: PathBuf,
        #[arg(long, default_value_t = 1)]
        split: usize,
    },
    /// Support of a probability kernel with its inclusion.
    Support { p: PathBuf },
    /// Moves the randomness of F into a state on function tables.
    Pushback {
        f: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PUSHBACK_BOUND)]
        bound: u128,
    },
    /// Disintegrates P : A → X along F : X → Y.
    Disintegrate { p: PathBuf, f: PathBuf },
    /// Bayesian inverse of F with respect to the prior PSI.
    BayesInvert { psi: PathBuf, f: PathBuf },
    /// Conditional product of two states sharing `shared` factors.
    CondProduct {
        psi: PathBuf,
        phi: PathBuf,
        #[arg(long, default_value_t = 1)]
        shared: usize,
    },
    /// Decision procedures and single-instance law checks.
    #[command(subcommand)]
    Check(Check),
    /// Sufficiency of the statistic S for MODEL.
    Suff { model: PathBuf, s: PathBuf },
    /// Completeness of a kernel Θ → V.
    Complete { f: PathBuf },
    /// Ancillarity of the statistic A for MODEL.
    Ancillary { model: PathBuf, a: PathBuf },
    /// Basu's theorem at one instance.
    Basu { model: PathBuf, s: PathBuf, a: PathBuf },
    /// Whether T ≤ S, that is T is almost surely a function of S.
    Leq { model: PathBuf, s: PathBuf, t: PathBuf },
    /// The minimal sufficient statistic of MODEL.
    Minstat { model: PathBuf },
    /// Bahadur's theorem at one instance, by exhaustive partition search.
    Bahadur {
        model: PathBuf,
        s: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PARTITION_BOUND)]
        bound: usize,
    },
    /// Seeded comonoid-law check on a backend (requires --seed).
    Laws {
        backend: Backend,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Determinism (commutes with copy).
    Det { f: PathBuf },
    /// F and G agree almost surely with respect to P.
    Aseq { p: PathBuf, f: PathBuf, g: PathBuf },
    /// F is almost surely deterministic with respect to P.
    Asdet { p: PathBuf, f: PathBuf },
    /// X ⊥ Y | W for a state on X ⊗ W ⊗ Y.
    CiState {
        psi: PathBuf,
        #[arg(long, value_parser = parse_triple, default_value = "1,2")]
        split: TripleSplit,
    },
    /// X ⊥ Y ‖ A for a kernel A → X ⊗ Y.
    CiProc {
        f: PathBuf,
        #[arg(long, default_value_t = 1)]
        split: usize,
    },
    /// X ⊥ Y | W ‖ A for a kernel A → X ⊗ W ⊗ Y.
    CiGen {
        f: PathBuf,
        #[arg(long, value_parser = parse_triple, default_value = "1,2")]
        split: TripleSplit,
    },
    /// A ⊥ Y | X for a kernel A → X ⊗ Y.
    CiMarkov {
        f: PathBuf,
        #[arg(long, default_value_t = 1)]
        split: usize,
    },
    /// Positivity at F : X → Y, G : Y → Z.
    Positivity { f: PathBuf, g: PathBuf },
    /// Causality at F : A → X, G : X → Y, H1, H2 : Y → Z.
    Causality { f: PathBuf, g: PathBuf, h1: PathBuf, h2: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Finstoch,
    FinstochPm,
    FinsetMulti,
    Fuzzy,
    Gauss,
    Chain,
}

fn parse_triple(text: &str) -> Result<TripleSplit, String> {
    let parts: Vec<&str> = text.split(',').collect();
    match parts.as_slice() {
        [x, w] => {
            let x_end = x.trim().parse().map_err(|e| format!("{e}"))?;
            let w_end = w.trim().parse().map_err(|e| format!("{e}"))?;
            Ok(TripleSplit::new(x_end, w_end))
        }
        _ => Err("expected X_END,W_END".into()),
    }
}

/// The result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    /// The report, absent for help and version output.
    pub report: Option<Value>,
    /// Text for standard output: the canonical report or help text.
    pub document: String,
    /// Whether the report went to `--out` instead of standard output.
    pub written: bool,
}

/// Parses `argv` (program name first), runs the command and renders the
/// report.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                code: EXIT_PASS,
                report: None,
                document: e.render().to_string(),
                written: false,
            };
        }
        Err(e) => {
            let report = error_report(None, "usage", e.render().to_string().trim_end());
            return finish(EXIT_USAGE, report, None);
        }
    };
    let name = cli.command.name();
    let (code, report) = match execute(&cli) {
        Ok(done) => done,
        Err(e) => (e.exit_code(), error_report(Some(&name), e.kind(), &e.to_string())),
    };
    finish(code, report, cli.out.as_deref())
}

fn finish(code: i32, report: Value, out: Option<&Path>) -> Outcome {
    let document = canonical(&report);
    match out {
        None => Outcome { code, report: Some(report), document, written: false },
        Some(path) => match std::fs::write(path, &document) {
            Ok(()) => Outcome { code, report: Some(report), document, written: true },
            Err(e) => {
                let message = format!("cannot write {}: {e}", path.display());
                let report = error_report(report.get("command").and_then(Value::as_str), "io", &message);
                let document = canonical(&report);
                Outcome { code: EXIT_USAGE, report: Some(report), document, written: false }
            }
        },
    }
}

fn error_report(command: Option<&str>, kind: &str, message: &str) -> Value {
    json!({"command": command, "verdict": "error", "error": {"kind": kind, "message": message}})
}

impl Command {
    fn name(&self) -> String {
        let name = match self {
            Command::Compose { .. } => "compose",
            Command::Tensor { .. } => "tensor",
            Command::Marginal { .. } => "marginal",
            Command::Condition { .. } => "condition",
            Command::Support { .. } => "support",
            Command::Pushback { .. } => "pushback",
            Command::Disintegrate { .. } => "disintegrate",
            Command::BayesInvert { .. } => "bayes-invert",
            Command::CondProduct { .. } => "cond-product",
            Command::Check(check) => return format!("check {}", check.name()),
            Command::Suff { .. } => "suff",
            Command::Complete { .. } => "complete",
            Command::Ancillary { .. } => "ancillary",
            Command::Basu { .. } => "basu",
            Command::Leq { .. } => "leq",
            Command::Minstat { .. } => "minstat",
            Command::Bahadur { .. } => "bahadur",
            Command::Laws { .. } => "laws",
        };
        name.to_string()
    }
}

impl Check {
    fn name(&self) -> &'static str {
        match self {
            Check::Det { .. } => "det",
            Check::Aseq { .. } => "aseq",
            Check::Asdet { .. } => "asdet",
            Check::CiState { .. } => "ci-state",
            Check::CiProc { .. } => "ci-proc",
            Check::CiGen { .. } => "ci-gen",
            Check::CiMarkov { .. } => "ci-markov",
            Check::Positivity { .. } => "positivity",
            Check::Causality { .. } => "causality",
        }
    }
}

type Done = (i32, Value);

/// `{"command", "verdict", ..fields}`.
fn report(command: &str, verdict: &str, fields: Value) -> Value {
    let mut map = Map::new();
    map.insert("command".into(), command.into());
    map.insert("verdict".into(), verdict.into());
    if let Value::Object(fields) = fields {
        map.extend(fields);
    }
    Value::Object(map)
}

fn construction(command: &str, fields: Value) -> Result<Done, CliError> {
    Ok((EXIT_PASS, report(command, "ok", fields)))
}

/// `"true"` with `holds`, otherwise `"false"` with `refutation`.
fn decision(command: &str, holds: Option<Value>, refutation: impl FnOnce() -> Option<Value>) -> Result<Done, CliError> {
    Ok(match holds {
        Some(fields) => (EXIT_PASS, report(command, "true", fields)),
        None => (EXIT_FAIL, report(command, "false", json!({ "witness": refutation() }))),
    })
}

fn law<M>(command: &str, r: LawReport<M>, encode: impl Fn(&M) -> Value) -> Result<Done, CliError> {
    let (code, verdict) = match r.verdict {
        Verdict::Pass => (EXIT_PASS, "pass"),
        Verdict::Fail => (EXIT_FAIL, "fail"),
        Verdict::Vacuous => (EXIT_PRECONDITION, "vacuous"),
    };
    let counterexample = r.counterexample.map(|cx| {
        json!({
            "inputs": cx.inputs.iter().map(&encode).collect::<Vec<_>>(),
            "lhs": encode(&cx.lhs),
            "rhs": encode(&cx.rhs),
        })
    });
    let fields = json!({"law": r.law, "note": r.note, "counterexample": counterexample});
    Ok((code, report(command, verdict, fields)))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path, tol: f64) -> Result<Morphism, CliError> {
    parse_morphism(&read(path)?, tol)
}

fn load_stoch(path: &Path) -> Result<Stoch, CliError> {
    parse_kernel::<Prob>(&read(path)?)
}

fn load_model(path: &Path) -> Result<StatModel, CliError> {
    Ok(StatModel::new(load_stoch(path)?))
}

fn load_statistic(path: &Path) -> Result<Statistic, CliError> {
    Ok(Statistic::new(load_stoch(path)?)?)
}

/// Morphisms loaded from files that must share one backend.
enum Family {
    Prob(Vec<Kernel<Prob>>),
    Signed(Vec<Kernel<Signed>>),
    Bool(Vec<Kernel<Bool>>),
    Fuzzy(Vec<Kernel<Fuzzy>>),
    Gauss(Vec<GaussMorphism>),
}

fn uniform<T>(ms: Vec<Morphism>, pick: impl Fn(Morphism) -> Option<T>) -> Result<Vec<T>, CliError> {
    ms.into_iter().map(pick).collect::<Option<Vec<T>>>().ok_or_else(|| {
        CliError::Library(markov_core::Error::TypeMismatch("all inputs must share one backend".into()))
    })
}

fn family(paths: &[&Path], tol: f64) -> Result<Family, CliError> {
    let ms = paths.iter().map(|p| load(p, tol)).collect::<Result<Vec<_>, _>>()?;
    Ok(match &ms[0] {
        Morphism::Matrix(AnyKernel::Prob(_)) => Family::Prob(uniform(ms, |m| match m {
            Morphism::Matrix(AnyKernel::Prob(k)) => Some(k),
            _ => None,
        })?),
        Morphism::Matrix(AnyKernel::Signed(_)) => Family::Signed(uniform(ms, |m| match m {
            Morphism::Matrix(AnyKernel::Signed(k)) => Some(k),
            _ => None,
        })?),
        Morphism::Matrix(AnyKernel::Bool(_)) => Family::Bool(uniform(ms, |m| match m {
            Morphism::Matrix(AnyKernel::Bool(k)) => Some(k),
            _ => None,
        })?),
        Morphism::Matrix(AnyKernel::Fuzzy(_)) => Family::Fuzzy(uniform(ms, |m| match m {
            Morphism::Matrix(AnyKernel::Fuzzy(k)) => Some(k),
            _ => None,
        })?),
        Morphism::Gauss(_) => Family::Gauss(uniform(ms, |m| match m {
            Morphism::Gauss(g) => Some(g),
            _ => None,
        })?),
    })
}

/// Runs `$body` with `$cat` bound to the backend of `$family`, `$xs` to its
/// morphisms and `$enc` to their file encoder.
macro_rules! on_backend {
    ($family:expr, $tol:expr, |$cat:ident, $xs:ident, $enc:ident| $body:expr) => {
        match $family {
            Family::Prob($xs) => {
                let $cat = MatCat::<Prob>::new();
                let $enc = kernel_value::<Prob>;
                $body
            }
            Family::Signed($xs) => {
                let $cat = MatCat::<Signed>::new();
                let $enc = kernel_value::<Signed>;
                $body
            }
            Family::Bool($xs) => {
                let $cat = MatCat::<Bool>::new();
                let $enc = kernel_value::<Bool>;
                $body
            }
            Family::Fuzzy($xs) => {
                let $cat = MatCat::<Fuzzy>::new();
                let $enc = kernel_value::<Fuzzy>;
                $body
            }
            Family::Gauss($xs) => {
                let $cat = Gauss::new($tol);
                let $enc = gauss_value;
                $body
            }
        }
    };
}

fn unsupported(what: &str) -> CliError {
    CliError::Library(markov_core::Error::TypeMismatch(format!("{what} needs a rational-nonneg kernel or a Gaussian file")))
}

fn execute(cli: &Cli) -> Result<Done, CliError> {
    let tol = cli.tol;
    match &cli.command {
        Command::Compose { f, g } => on_backend!(family(&[f, g], tol)?, tol, |cat, xs, enc| {
            construction("compose", json!({ "result": enc(&cat.compose(&xs[1], &xs[0])?) }))
        }),
        Command::Tensor { f, g } => on_backend!(family(&[f, g], tol)?, tol, |cat, xs, enc| {
            construction("tensor", json!({ "result": enc(&cat.tensor(&xs[0], &xs[1])?) }))
        }),
        Command::Marginal { f, keep } => {
            let result = match load(f, tol)? {
                Morphism::Gauss(g) => gauss_value(&g_marginalize(&g, keep)?),
                Morphism::Matrix(AnyKernel::Prob(k)) => kernel_value(&project(&k, keep)?),
                Morphism::Matrix(AnyKernel::Signed(k)) => kernel_value(&project(&k, keep)?),
                Morphism::Matrix(AnyKernel::Bool(k)) => kernel_value(&project(&k, keep)?),
                Morphism::Matrix(AnyKernel::Fuzzy(k)) => kernel_value(&project(&k, keep)?),
            };
            construction("marginal", json!({ "result": result }))
        }
        Command::Condition { f, split } => {
            let result = match load(f, tol)? {
                Morphism::Gauss(g) => gauss_value(&g_conditional(&g, *split, DEFAULT_CUTOFF)?),
                Morphism::Matrix(AnyKernel::Prob(k)) => kernel_value(&conditional(&k, *split)?),
                Morphism::Matrix(_) => return Err(unsupported("conditioning")),
            };
            construction("condition", json!({ "result": result }))
        }
        Command::Support { p } => {
            let s = support(&load_stoch(p)?);
            construction(
                "support",
                json!({"indices": s.indices, "labels": s.labels, "inclusion": kernel_value(&s.inclusion)}),
            )
        }
        Command::Pushback { f, bound } => match load(f, tol)? {
            Morphism::Gauss(g) => {
                let pb = g_pushback(&g);
                construction(
                    "pushback",
                    json!({
                        "noise": gauss_value(&pb.noise),
                        "addition": gauss_value(&pb.addition),
                        "linear": gauss_value(&pb.linear),
                    }),
                )
            }
            Morphism::Matrix(AnyKernel::Prob(k)) => {
                let pb = randomness_pushback(&k, *bound)?;
                construction(
                    "pushback",
                    json!({
                        "noise": ObjectSpec::from_finset(&pb.noise),
                        "psi": kernel_value(&pb.psi),
                        "g": kernel_value(&pb.g),
                    }),
                )
            }
            Morphism::Matrix(_) => Err(unsupported("pushback")),
        },
        Command::Disintegrate { p, f } => {
            let (p, f) = (load_stoch(p)?, load_stoch(f)?);
            let s = disintegrate(&p, &f)?;
            let holds = disintegration_holds(&p, &f, &s)?;
            construction("disintegrate", json!({"result": kernel_value(&s), "holds": holds}))
        }
        Command::BayesInvert { psi, f } => {
            let inverse = bayes_invert(&load_stoch(psi)?, &load_stoch(f)?)?;
            construction("bayes-invert", json!({ "result": kernel_value(&inverse) }))
        }
        Command::CondProduct { psi, phi, shared } => {
            let product = conditional_product(&load_stoch(psi)?, &load_stoch(phi)?, *shared)?;
            construction("cond-product", json!({ "result": kernel_value(&product) }))
        }
        Command::Check(check) => execute_check(check, tol),
        Command::Suff { model, s } => {
            let (model, s) = (load_model(model)?, load_statistic(s)?);
            let holds = match is_sufficient(&model, &s)? {
                Some(w) => {
                    let fn_ = w.fisher_neyman(&model, &s)?;
                    Some(json!({
                        "alpha": kernel_value(&w.alpha),
                        "pushforward": kernel_value(&model.push(&s)?),
                        "factorization": {
                            "h": fn_.h.iter().map(ToString::to_string).collect::<Vec<_>>(),
                            "g": kernel_value(&fn_.g),
                        },
                    }))
                }
                None => None,
            };
            decision("suff", holds, || witness::sufficiency_violation(&model, &s))
        }
        Command::Complete { f } => {
            let f = load_stoch(f)?;
            Ok(match is_complete(&f)? {
                Completeness::Complete => (EXIT_PASS, report("complete", "true", json!({}))),
                Completeness::Incomplete(cx) => {
                    let fields = json!({
                        "certificate": {
                            "beta": cx.beta.iter().map(ToString::to_string).collect::<Vec<_>>(),
                            "epsilon": cx.epsilon.to_string(),
                            "g": kernel_value(&cx.g),
                            "h": kernel_value(&cx.h),
                        }
                    });
                    (EXIT_FAIL, report("complete", "false", fields))
                }
            })
        }
        Command::Ancillary { model, a } => {
            let (model, a) = (load_model(model)?, load_statistic(a)?);
            let distribution = kernel_value(&model.push(&a)?);
            let holds = is_ancillary(&model, &a)?.then(|| json!({ "distribution": distribution }));
            decision("ancillary", holds, || witness::ancillarity_violation(&model, &a))
        }
        Command::Basu { model, s, a } => {
            let (model, s, a) = (load_model(model)?, load_statistic(s)?, load_statistic(a)?);
            law("basu", check_basu(&model, &s, &a)?, kernel_value::<Prob>)
        }
        Command::Leq { model, s, t } => {
            let (model, s, t) = (load_model(model)?, load_statistic(s)?, load_statistic(t)?);
            let holds = statistic_leq(&model, &s, &t)?.map(|w| json!({ "c": kernel_value(&w.c) }));
            decision("leq", holds, || witness::leq_violation(&model, &s, &t))
        }
        Command::Minstat { model } => {
            let m = minimal_sufficient(&load_model(model)?);
            construction("minstat", json!({"result": kernel_value(m.kernel()), "images": m.images()}))
        }
        Command::Bahadur { model, s, bound } => {
            let (model, s) = (load_model(model)?, load_statistic(s)?);
            law("bahadur", check_bahadur(&model, &s, *bound)?, kernel_value::<Prob>)
        }
        Command::Laws { backend, samples, max_size } => {
            let seed = cli.seed.ok_or_else(|| CliError::Usage("laws needs --seed".into()))?;
            laws(*backend, *samples, *max_size, seed, tol)
        }
    }
}

fn execute_check(check: &Check, tol: f64) -> Result<Done, CliError> {
    let name = format!("check {}", check.name());
    match check {
        Check::Det { f } => on_backend!(family(&[f], tol)?, tol, |cat, xs, enc| {
            law(&name, check_deterministic(&cat, &xs[0]), enc)
        }),
        Check::Aseq { p, f, g } => {
            let (p, f, g) = (load_stoch(p)?, load_stoch(f)?, load_stoch(g)?);
            let holds = as_equal(&p, &f, &g)?.then(|| json!({}));
            decision(&name, holds, || witness::as_equal_violation(&p, &f, &g))
        }
        Check::Asdet { p, f } => {
            let (p, f) = (load_stoch(p)?, load_stoch(f)?);
            let holds = as_deterministic(&p, &f)?.then(|| json!({}));
            decision(&name, holds, || witness::as_deterministic_violation(&p, &f))
        }
        Check::CiState { psi, split } => {
            let psi = load_stoch(psi)?;
            let holds = ci_state(&psi, *split)?.into_witness().map(|w| {
                json!({"phi": kernel_value(&w.phi), "f": kernel_value(&w.f), "g": kernel_value(&w.g)})
            });
            decision(&name, holds, || witness::ci_violation(&psi, *split))
        }
        Check::CiProc { f, split } => {
            let f = load_stoch(f)?;
            let holds = ci_proc(&f, *split)?
                .into_witness()
                .map(|w| json!({"g": kernel_value(&w.g), "h": kernel_value(&w.h)}));
            decision(&name, holds, || witness::ci_violation(&f, TripleSplit::new(*split, *split)))
        }
        Check::CiGen { f, split } => {
            let f = load_stoch(f)?;
            let holds = ci_gen(&f, *split)?.into_witness().map(|w| {
                json!({"g": kernel_value(&w.g), "h": kernel_value(&w.h), "k": kernel_value(&w.k)})
            });
            decision(&name, holds, || witness::ci_violation(&f, *split))
        }
        Check::CiMarkov { f, split } => {
            let f = load_stoch(f)?;
            let holds = ci_markov(&f, *split)?
                .into_witness()
                .map(|w| json!({"g": kernel_value(&w.g), "h": kernel_value(&w.h)}));
            decision(&name, holds, || witness::markov_violation(&f, *split))
        }
        Check::Positivity { f, g } => on_backend!(family(&[f, g], tol)?, tol, |cat, xs, enc| {
            law(&name, check_positivity_instance(&cat, &xs[0], &xs[1])?, enc)
        }),
        Check::Causality { f, g, h1, h2 } => on_backend!(family(&[f, g, h1, h2], tol)?, tol, |cat, xs, enc| {
            law(&name, check_causality_instance(&cat, &xs[0], &xs[1], &xs[2], &xs[3])?, enc)
        }),
    }
}

fn diagram_value(f: &DiagramMorphism) -> Value {
    json!({
        "start": f.source().start(),
        "components": f.components().iter().map(kernel_value::<Prob>).collect::<Vec<_>>(),
    })
}

fn matrix_laws<S: Semiring>(samples: usize, max_size: usize, seed: u64) -> Result<Done, CliError> {
    let objects: Vec<FinSet> = (1..=max_size).map(FinSet::range).collect();
    let r = check_comonoid_laws(&MatCat::<S>::new(), &objects, &KernelSampler::default(), samples, seed)?;
    law("laws", r, kernel_value::<S>)
}

fn laws(backend: Backend, samples: usize, max_size: usize, seed: u64, tol: f64) -> Result<Done, CliError> {
    match backend {
        Backend::Finstoch => matrix_laws::<Prob>(samples, max_size, seed),
        Backend::FinstochPm => matrix_laws::<Signed>(samples, max_size, seed),
        Backend::FinsetMulti => matrix_laws::<Bool>(samples, max_size, seed),
        Backend::Fuzzy => matrix_laws::<Fuzzy>(samples, max_size, seed),
        Backend::Gauss => {
            let objects: Vec<usize> = (1..=max_size).collect();
            let r = check_comonoid_laws(&Gauss::new(tol), &objects, &GaussSampler::default(), samples, seed)?;
            law("laws", r, gauss_value)
        }
        Backend::Chain => {
            let cat = ChainCategory::new(0, 3);
            let objects = vec![
                ChainDiagram::sequences(&FinSet::of(&["H", "T"]), 0, 2)?,
                ChainDiagram::constant(0, 3, &FinSet::range(max_size.clamp(1, 3))),
            ];
            let r = check_comonoid_laws(&cat, &objects, &NaturalSampler::default(), samples, seed)?;
            law("laws", r, diagram_value)
        }
    }
}
