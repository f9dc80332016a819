//! Command-line front end: parses arguments, runs one computation and renders JSON.

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use qwonder::expr::{parse_presentation, Context, ContextKind, Expr, Value, CONTEXT_NAMES};
use qwonder::lattice::Weight;
use qwonder::ncalg::{algebras, dimension_of_graded_piece, localize_and_degree_zero, veronese, Presentation};
use qwonder::poisson::{bracket_for, semiclassical_check};
use qwonder::projcat::{is_torsion, GradedModulePresentation, ModuleJson};
use qwonder::qgroups::{pw_components, pw_degree, MatrixCoefficient};
use qwonder::reesgr::{gr_to_p1p1, phi, rees_to_vinberg_presentation, vinberg_to_matq};
use qwonder::scalars::parse_rational;
use qwonder::Error;

pub mod output;
pub mod suites;

use output::{element_json, evaluated, tensor_json, value_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qwonder", version, about = "Exact computations in quantum coordinate rings of SL2 and their degenerations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Algebra context used when a subcommand is not given one positionally.
    #[arg(long, global = true)]
    pub context: Option<String>,
    /// File with a presentation in the declarative text format; used as the context.
    #[arg(long, global = true, value_name = "FILE")]
    pub presentation: Option<std::path::PathBuf>,
    /// Also report coefficients evaluated at this rational value of q.
    #[arg(long = "q-eval", global = true, value_name = "RATIONAL")]
    pub q_eval: Option<String>,
    /// Word-length horizon for graded-piece and torsion computations.
    #[arg(long, global = true, default_value_t = 12)]
    pub horizon: usize,
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Indented JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of an expression: nf [CONTEXT] EXPR
    Nf {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Product of two expressions: mul [CONTEXT] X Y
    Mul {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
    },
    /// Peter-Weyl components and level of an element of O_q(SL2): pw [CONTEXT] EXPR
    Pw {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Product in the Rees (Vinberg) algebra, with its image in O_q(Mat2): rees-mul [CONTEXT] X Y
    ReesMul {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
    },
    /// Product in an associated graded algebra: gr-mul [CONTEXT] X Y
    GrMul {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
    },
    /// The map Phi on a matrix coefficient: phi [CONTEXT] c[n;i,j]
    Phi {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Poisson bracket of two classical elements, or the semiclassical limit of a commutator
    Poisson {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
    },
    /// Torsion certificate for a module: a JSON module file or one of augmentation, free, z2
    Torsion {
        module: String,
        /// Degree above which the vanishing band starts.
        #[arg(long, default_value_t = 0)]
        band_base: i64,
    },
    /// Dimension of a graded piece or filtration level: dims [CONTEXT] N
    Dims {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Veronese subalgebra dimensions and bases up to degree N: veronese [CONTEXT] N
    Veronese {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Run verification suites: verify all | verify SUITE...
    Verify {
        /// `all`, or names from: confluence centrality pw-dims vinberg-matq gr-p1p1 semiclassical
        /// hopf phi-multiplicative torsion classical veronese irreps
        #[arg(required = true)]
        suites: Vec<String>,
    },
}

/// Result of one invocation: exit code plus the text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Engine(Error),
    Usage(String),
    Verify(Json),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(Failure::Usage(msg.into()))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let render = |j: &Json| {
        let mut s = if cli.global.pretty {
            serde_json::to_string_pretty(j)
        } else {
            serde_json::to_string(j)
        }
        .expect("JSON output");
        s.push('\n');
        s
    };
    match dispatch(&cli) {
        Ok(j) => Outcome { code: EXIT_OK, stdout: render(&j), stderr: String::new() },
        Err(Failure::Verify(j)) => Outcome { code: EXIT_VERIFY, stdout: render(&j), stderr: String::new() },
        Err(Failure::Usage(m)) => Outcome { code: EXIT_USER, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Engine(e)) => {
            let code = if e.is_internal() { EXIT_INTERNAL } else { EXIT_USER };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

/// Splits `[CONTEXT] rest...` using `arity` trailing operands.
fn split_context(g: &Global, args: &[String], arity: usize, default: &str) -> Run<(Context, Vec<String>)> {
    let (name, rest) = if args.len() > arity {
        (Some(args[0].clone()), args[1..].to_vec())
    } else {
        (g.context.clone(), args.to_vec())
    };
    let ctx = match (name, &g.presentation) {
        (Some(n), _) => Context::named(&n)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            Context::from_presentation(Arc::new(parse_presentation(&text)?))
        }
        (None, None) => Context::named(default)?,
    };
    Ok((ctx, rest))
}

fn with_q_eval(g: &Global, mut j: Json, v: &Value) -> Run<Json> {
    if let Some(text) = &g.q_eval {
        let at = parse_rational(text).ok_or_else(|| Failure::Usage(format!("`{text}` is not a rational number")))?;
        j["at_q"] = json!({ "q": at.to_string(), "terms": evaluated(v, &at)? });
    }
    Ok(j)
}

fn alg(v: Value, what: &str) -> Run<qwonder::ncalg::AlgebraElement> {
    match v {
        Value::Alg(x) => Ok(x),
        other => usage(format!("{what}: expected an algebra element, got {other}")),
    }
}

fn dispatch(cli: &Cli) -> Run<Json> {
    let g = &cli.global;
    match &cli.command {
        Command::Nf { args } => {
            let (ctx, rest) = split_context(g, args, 1, "sl2")?;
            let v = ctx.eval_str(&rest[0])?;
            with_q_eval(g, value_json(&v, ctx.name()), &v)
        }
        Command::Mul { args } => {
            let (ctx, rest) = split_context(g, args, 2, "sl2")?;
            let v = ctx.multiply(&ctx.eval_str(&rest[0])?, &ctx.eval_str(&rest[1])?)?;
            with_q_eval(g, value_json(&v, ctx.name()), &v)
        }
        Command::Pw { args } => {
            let (ctx, rest) = split_context(g, args, 1, "sl2")?;
            require(&ctx, &["sl2", "sl2-cl"])?;
            let x = alg(ctx.eval_str(&rest[0])?, "pw")?;
            let components: Vec<Json> = pw_components(&x)?
                .iter()
                .map(|(n, f)| json!({ "level": n, "element": element_json(f, ctx.name()) }))
                .collect();
            Ok(json!({
                "context": ctx.name(),
                "input": element_json(&x, ctx.name()),
                "degree": pw_degree(&x),
                "components": components,
            }))
        }
        Command::ReesMul { args } => {
            let (ctx, rest) = split_context(g, args, 2, "vinberg")?;
            require(&ctx, &["vinberg", "vinberg-cl"])?;
            let v = ctx.multiply(&ctx.eval_str(&rest[0])?, &ctx.eval_str(&rest[1])?)?;
            let Value::Rees(r) = &v else {
                return usage("rees-mul expects Rees algebra elements");
            };
            let mat_name = if ctx.name() == "vinberg" { "mat2" } else { "mat2-cl" };
            let mut j = value_json(&v, ctx.name());
            j["matq"] = element_json(&vinberg_to_matq(r)?, mat_name);
            with_q_eval(g, j, &v)
        }
        Command::GrMul { args } => {
            let (ctx, rest) = split_context(g, args, 2, "gr0")?;
            require(&ctx, &["gr0", "gr0-cl", "grD", "grD-cl"])?;
            let v = ctx.multiply(&ctx.eval_str(&rest[0])?, &ctx.eval_str(&rest[1])?)?;
            let Value::Gr(x) = &v else {
                return usage("gr-mul expects associated graded elements");
            };
            let mut j = value_json(&v, ctx.name());
            if x.subset().is_empty() {
                let target = if ctx.name() == "gr0" { "p1p1" } else { "p1p1-cl" };
                j["p1p1"] = element_json(&gr_to_p1p1(x)?, target);
            }
            with_q_eval(g, j, &v)
        }
        Command::Phi { args } => {
            let (ctx, rest) = split_context(g, args, 1, "gr0")?;
            let ContextKind::Graded(subset, base) = ctx.kind() else {
                return usage(format!("phi needs one of gr0, gr0-cl, grD, grD-cl, not `{}`", ctx.name()));
            };
            let Expr::Coeff(n, i, j) = ctx.parse(&rest[0])? else {
                return usage("phi takes a single matrix coefficient c[n;i,j]");
            };
            let t = phi(subset, MatrixCoefficient::new(n, i, j)?, base)?;
            let v = Value::Tensor(t.clone());
            with_q_eval(g, tensor_json(&t, base.name()), &v)
        }
        Command::Poisson { args } => poisson(g, args),
        Command::Torsion { module, band_base } => torsion(g, module, *band_base),
        Command::Dims { args } => dims(g, args),
        Command::Veronese { args } => {
            let (ctx, rest) = split_context(g, args, 1, "vinberg")?;
            let n: usize = rest[0].parse().map_err(|_| Failure::Usage(format!("`{}` is not a degree", rest[0])))?;
            let (p, lambda) = graded_presentation(&ctx)?;
            let levels = veronese(&p, &lambda, n)?;
            Ok(json!({ "context": ctx.name(), "lambda": lambda.coords(), "levels": levels }))
        }
        Command::Verify { suites: names } => {
            let known = suites::suite_names();
            let selected: Vec<&str> = if names.iter().any(|n| n == "all") {
                known.clone()
            } else {
                let mut out = Vec::new();
                for n in names {
                    match known.iter().find(|k| *k == n) {
                        Some(k) => out.push(*k),
                        None => return usage(format!("unknown suite `{n}`; known: all, {}", known.join(", "))),
                    }
                }
                out
            };
            let reports = suites::run_suites(&selected);
            let passed = reports.iter().all(|r| r.passed);
            let j = json!({ "passed": passed, "suites": reports });
            if passed {
                Ok(j)
            } else {
                Err(Failure::Verify(j))
            }
        }
    }
}

fn require(ctx: &Context, allowed: &[&str]) -> Run<()> {
    if allowed.contains(&ctx.name()) {
        Ok(())
    } else {
        usage(format!("context `{}` not supported here; use one of {}", ctx.name(), allowed.join(", ")))
    }
}

/// The graded presentation behind a context, with its default Veronese character.
fn graded_presentation(ctx: &Context) -> Run<(Arc<Presentation>, Weight)> {
    let p = match ctx.name() {
        "vinberg" => algebras::vinberg(),
        "vinberg-cl" => algebras::vinberg_classical(),
        _ => match ctx.kind() {
            ContextKind::Algebra(p) if p.grading().is_some() => p.clone(),
            _ => return usage(format!("context `{}` has no grading", ctx.name())),
        },
    };
    let rank = p.grading().expect("graded")[0].rank();
    Ok((p, Weight::new(vec![1; rank])))
}

fn poisson(g: &Global, args: &[String]) -> Run<Json> {
    let (ctx, rest) = split_context(g, args, 2, "sl2-cl")?;
    let x = ctx.eval_str(&rest[0])?;
    let y = ctx.eval_str(&rest[1])?;
    match (ctx.kind(), x, y) {
        (ContextKind::Algebra(p), Value::Alg(x), Value::Alg(y)) if algebras::is_classical(p) => {
            let b = bracket_for(p)?.bracket(&x, &y)?;
            Ok(json!({ "context": ctx.name(), "bracket": element_json(&b, ctx.name()) }))
        }
        (ContextKind::Algebra(_), Value::Alg(x), Value::Alg(y)) => {
            let r = semiclassical_check(&x, &y)?;
            let cl = r.limit.presentation().name().to_string();
            Ok(json!({
                "context": ctx.name(),
                "commutator": element_json(&r.commutator, ctx.name()),
                "semiclassical_limit": element_json(&r.limit, &cl),
                "bracket": element_json(&r.bracket, &cl),
                "passed": r.passed,
            }))
        }
        (ContextKind::Rees(base), Value::Rees(x), Value::Rees(y)) if algebras::is_classical(base) => {
            let b = bracket_for(base)?.rees_bracket(&x, &y)?;
            let v = Value::Rees(b);
            Ok(json!({ "context": ctx.name(), "bracket": value_json(&v, ctx.name()) }))
        }
        (ContextKind::Rees(_), Value::Rees(x), Value::Rees(y)) => {
            let r = semiclassical_check(&rees_to_vinberg_presentation(&x)?, &rees_to_vinberg_presentation(&y)?)?;
            Ok(json!({
                "context": ctx.name(),
                "commutator": element_json(&r.commutator, "vinberg"),
                "semiclassical_limit": element_json(&r.limit, "vinberg-cl"),
                "bracket": element_json(&r.bracket, "vinberg-cl"),
                "passed": r.passed,
            }))
        }
        (ContextKind::Localized(l), Value::Loc(x), Value::Loc(y)) if algebras::is_classical(l.base()) => {
            let b = bracket_for(l.base())?.localized_bracket(&x, &y)?;
            let v = Value::Loc(b);
            Ok(json!({ "context": ctx.name(), "bracket": value_json(&v, ctx.name()) }))
        }
        _ => usage(format!(
            "no Poisson bracket in `{}`; use sl2-cl, mat2-cl, vinberg-cl, gl2-cl or a quantum matrix context",
            ctx.name()
        )),
    }
}

fn torsion(g: &Global, module: &str, band_base: i64) -> Run<Json> {
    let m = match suites::reference_modules()?.into_iter().find(|(n, _)| *n == module) {
        Some((_, m)) => m,
        None => {
            let text = std::fs::read_to_string(module)
                .map_err(|e| Failure::Usage(format!("`{module}` is neither a built-in module nor a readable file: {e}")))?;
            let json: ModuleJson =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad module file: {e}")))?;
            let ctx = Context::named(&json.algebra)
                .or_else(|_| match json.algebra.as_str() {
                    "vinberg-presentation" => Ok(Context::from_presentation(algebras::vinberg())),
                    _ => Err(Error::UnknownSymbol(json.algebra.clone())),
                })?;
            let (p, _) = graded_presentation(&ctx)?;
            let pctx = Context::from_presentation(p.clone());
            GradedModulePresentation::from_json(p, &json, |s| match pctx.eval_str(s)? {
                Value::Alg(x) => Ok(x),
                other => Err(Error::Type(format!("{other} is not an algebra element"))),
            })?
        }
    };
    let cert = is_torsion(&m, &Weight::scalar(band_base), g.horizon)?;
    let mut pieces = Vec::new();
    let rank = m.generators().first().map(|x| x.degree.rank()).unwrap_or(1);
    for n in 0..=4i64 {
        let piece = m.graded_piece(&Weight::new(vec![n; rank]), g.horizon)?;
        pieces.push(json!({ "degree": piece.degree.coords(), "dimension": piece.dimension }));
    }
    Ok(json!({ "module": module, "certificate": cert, "pieces": pieces }))
}

fn dims(g: &Global, args: &[String]) -> Run<Json> {
    let (ctx, rest) = split_context(g, args, 1, "sl2")?;
    let n: usize = rest[0]
        .parse()
        .map_err(|_| Failure::Usage(format!("`{}` is not a degree", rest[0])))?;
    let level = |p: &Presentation, n: usize| suites::pw_level_dim_by_words(p, n);
    let (dimension, meaning) = match (ctx.name(), ctx.kind()) {
        (_, ContextKind::Algebra(p)) if algebras::is_sl2_type(p) => (level(p, n), "filtration level <= n"),
        (_, ContextKind::Rees(base)) => (level(base, n), "Rees degree n"),
        (_, ContextKind::Graded(s, base)) if s.is_empty() => {
            let below = if n >= 2 { level(base, n - 2) } else { 0 };
            (level(base, n) - below, "graded piece of degree n")
        }
        (_, ContextKind::Graded(..)) => {
            return usage("graded pieces of gr for the full root subset are infinite-dimensional")
        }
        (_, ContextKind::Localized(l)) => {
            let d = localize_and_degree_zero(l, n)?;
            return Ok(json!({ "context": ctx.name(), "horizon": n, "degree_zero": d }));
        }
        (_, ContextKind::Algebra(p)) if p.grading().is_some() => {
            let rank = p.grading().expect("graded")[0].rank();
            let lambda = Weight::new(vec![n as i64; rank]);
            let horizon = g.horizon.max(n * rank);
            (dimension_of_graded_piece(p, &lambda, horizon)?, "graded piece of degree n")
        }
        _ => return usage(format!("context `{}` has no dimension function", ctx.name())),
    };
    Ok(json!({ "context": ctx.name(), "n": n, "dimension": dimension, "meaning": meaning }))
}

/// Names accepted by `--context` and positional context arguments.
pub fn context_names() -> &'static [&'static str] {
    &CONTEXT_NAMES
}
