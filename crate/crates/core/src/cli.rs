//! The `onsager` command line.
//!
//! Output is plain text by default. With `ONSAGER_OUTPUT=records` every
//! line becomes a tab-separated list of `key=value` fields. Exit codes:
//! 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::closed_ideals::{self, general_membership, ReciprocalIdeal, Verdict};
use crate::elduque::{self, enumerate_ideals, quotient_b, residual_name, z_closure};
use crate::expr::{evaluate, ExprError, Realization, Value};
use crate::lie::{jacobi_defect, LieAlgebra};
use crate::loop_algebra::{to_loop, try_from_loop, FixedLoopElement};
use crate::onsager::OnsagerElement;
use crate::poly::Polynomial;
use crate::scalar::Rational;
use crate::suites::{verify_dg, verify_loop, verify_onsager, verify_tetra, SuiteReport};
use crate::tetrahedron::{phi_inverse, phi_inverse_v, phi_v, to_v};

/// Sample values at which the `η` family is tested by `ideal classify`.
pub const ETA_SAMPLES: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (1, 2), (-3, 1), (5, 7)];

#[derive(Parser, Debug)]
#[command(name = "onsager", version, about = "Exact computations in the Onsager algebra and its realizations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression, typically a bracket such as "[A_1, A_0]".
    Bracket {
        expr: String,
        #[arg(long)]
        realization: Option<Target>,
    },
    /// Evaluate the Jacobi sum of three elements; fails unless it is zero.
    Jacobi { e1: String, e2: String, e3: String },
    /// Move an element to another realization.
    Convert {
        #[arg(long)]
        to: Target,
        #[arg(long)]
        realization: Option<Target>,
        expr: String,
    },
    /// Run a relation-checking suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Ideal queries.
    #[command(subcommand)]
    Ideal(IdealCommand),
    /// Derived and lower central series of B = O / O t(t-1).
    SeriesB,
}

#[derive(Subcommand, Debug)]
pub enum IdealCommand {
    /// Membership of an element in I_P.
    Contains {
        #[command(flatten)]
        p: PolyArg,
        expr: String,
    },
    /// Whether I_P is closed.
    Closed {
        #[command(flatten)]
        p: PolyArg,
    },
    /// Every ideal with J = q k[t] and whether it is closed.
    Classify {
        #[arg(long)]
        q: String,
    },
}

#[derive(Args, Debug)]
pub struct PolyArg {
    #[arg(long)]
    pub p: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Onsager,
    Loop,
    V,
    Tetra,
}

impl From<Target> for Realization {
    fn from(t: Target) -> Self {
        match t {
            Target::Onsager => Realization::Onsager,
            Target::Loop => Realization::Loop,
            Target::V => Realization::V,
            Target::Tetra => Realization::ThreePoint,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Onsager,
    Loop,
    Tetra,
    Dg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Records,
}

impl OutputFormat {
    /// Reads `ONSAGER_OUTPUT`; unset means text.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var("ONSAGER_OUTPUT").as_deref() {
            Err(_) | Ok("text") | Ok("") => Ok(OutputFormat::Text),
            Ok("records") => Ok(OutputFormat::Records),
            Ok(other) => Err(format!("ONSAGER_OUTPUT must be text or records, not {other:?}")),
        }
    }
}

/// One output line with its text and record forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub text: String,
    pub fields: Vec<(&'static str, String)>,
}

impl Line {
    fn new(text: impl Into<String>, fields: Vec<(&'static str, String)>) -> Self {
        Line { text: text.into(), fields }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Records => self
                .fields
                .iter()
                .map(|(k, v)| format!("{k}={}", v.replace(['\t', '\n'], " ")))
                .collect::<Vec<_>>()
                .join("\t"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub lines: Vec<Line>,
    /// `false` turns into exit code 1.
    pub ok: bool,
}

impl Outcome {
    fn ok(lines: Vec<Line>) -> Self {
        Outcome { lines, ok: true }
    }
}

/// A usage or input error (exit code 2).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

impl From<ExprError> for InputError {
    fn from(e: ExprError) -> Self {
        InputError(e.to_string())
    }
}

fn input_err(e: impl std::fmt::Display) -> InputError {
    InputError(e.to_string())
}

fn realization_name(v: &Value) -> &'static str {
    v.realization().map_or("scalar", |r| r.name())
}

/// Evaluates `src`, letting a bare `0` stand for the zero of `hint`.
fn element(src: &str, hint: Option<Target>) -> Result<Value, InputError> {
    let v = evaluate(src)?;
    match (&v, hint) {
        (Value::Scalar(q), Some(t)) if q == &Rational::from(0) => Ok(Value::zero_of(t.into())),
        (Value::Scalar(_) | Value::Ring(_), Some(_)) => {
            Err(InputError("--realization only applies to the scalar 0".into()))
        }
        (_, Some(t)) if v.realization() != Some(t.into()) => Err(InputError(format!(
            "expression is a {} element, not {}",
            realization_name(&v),
            Realization::from(t)
        ))),
        _ => Ok(v),
    }
}

/// Parses a polynomial in `t`.
pub fn parse_polynomial(src: &str) -> Result<Polynomial<Rational>, InputError> {
    let v = evaluate(src).map_err(|e| InputError(format!("malformed polynomial {src:?}: {e}")))?;
    v.to_polynomial().ok_or_else(|| InputError(format!("malformed polynomial {src:?}: not a polynomial in t")))
}

fn to_onsager(v: &Value) -> Result<OnsagerElement, InputError> {
    match v {
        Value::Onsager(x) => Ok(x.clone()),
        Value::Loop(x) => try_from_loop(x).map_err(input_err),
        Value::ThreePoint(x) => phi_inverse(x).map_err(input_err),
        Value::V(x) => phi_inverse_v(x).map_err(input_err),
        _ => Err(InputError("a scalar is not an algebra element".into())),
    }
}

/// Moves an element into the realization `to`.
pub fn convert(v: &Value, to: Realization) -> Result<Value, InputError> {
    if v.realization() == Some(to) {
        return Ok(v.clone());
    }
    if let (Value::ThreePoint(x), Realization::V) = (v, to) {
        return to_v(x).map(Value::V).map_err(input_err);
    }
    let o = to_onsager(v)?;
    Ok(match to {
        Realization::Onsager => Value::Onsager(o),
        Realization::Loop => Value::Loop(to_loop(&o).into_loop()),
        Realization::V => Value::V(phi_v(&o)),
        Realization::ThreePoint => Value::ThreePoint(crate::tetrahedron::phi(&o)),
    })
}

fn jacobi_of(a: &Value, b: &Value, c: &Value) -> Result<Value, InputError> {
    fn j<L: LieAlgebra>(x: &L, y: &L, z: &L) -> L {
        jacobi_defect(x, y, z)
    }
    Ok(match (a, b, c) {
        (Value::Onsager(x), Value::Onsager(y), Value::Onsager(z)) => Value::Onsager(j(x, y, z)),
        (Value::Loop(x), Value::Loop(y), Value::Loop(z)) => Value::Loop(j(x, y, z)),
        (Value::ThreePoint(x), Value::ThreePoint(y), Value::ThreePoint(z)) => Value::ThreePoint(j(x, y, z)),
        (Value::V(x), Value::V(y), Value::V(z)) => Value::V(j(x, y, z)),
        _ => {
            return Err(InputError(format!(
                "jacobi needs three elements of one realization, got {}, {}, {}",
                realization_name(a),
                realization_name(b),
                realization_name(c)
            )))
        }
    })
}

fn suite_lines(rep: &SuiteReport) -> Outcome {
    let mut lines = vec![Line::new(
        rep.to_string(),
        vec![
            ("suite", rep.name.to_string()),
            ("checks", rep.checks.to_string()),
            ("failed", rep.failures.len().to_string()),
        ],
    )];
    for f in &rep.failures {
        lines.push(Line::new(format!("  FAIL {f}"), vec![("suite", rep.name.to_string()), ("failure", f.clone())]));
    }
    Outcome { lines, ok: rep.passed() }
}

fn verdict_lines(p: &Polynomial<Rational>, v: &Verdict) -> Vec<Line> {
    let mut lines =
        vec![Line::new(format!("member: {}", v.member), vec![("p", p.to_string()), ("member", v.member.to_string())])];
    for f in &v.failures {
        lines.push(Line::new(
            format!("witness: {f}"),
            vec![("component", f.component.to_string()), ("divisor", f.divisor.clone()), ("value", f.value.clone())],
        ));
    }
    lines
}

fn monic(p: Polynomial<Rational>) -> Result<Polynomial<Rational>, InputError> {
    p.monic().map_err(|_| InputError("the zero polynomial does not define an ideal".into()))
}

fn ideal_contains(p_src: &str, src: &str) -> Result<Outcome, InputError> {
    let p = monic(parse_polynomial(p_src)?)?;
    let loop_el = match evaluate(src)? {
        Value::Onsager(x) => to_loop(&x).into_loop(),
        Value::Loop(x) => x,
        other => {
            return Err(InputError(format!(
                "ideal membership takes onsager or loop elements, got {}",
                realization_name(&other)
            )))
        }
    };
    let verdict = match (ReciprocalIdeal::new(p.clone()), FixedLoopElement::new(loop_el.clone())) {
        (Ok(ideal), Ok(x)) => closed_ideals::membership(&ideal, &x),
        _ => general_membership(&p, &loop_el).map_err(input_err)?,
    };
    Ok(Outcome::ok(verdict_lines(&p, &verdict)))
}

fn ideal_closed(p_src: &str) -> Result<Outcome, InputError> {
    let p = monic(parse_polynomial(p_src)?)?;
    let ideal = ReciprocalIdeal::new(p.clone()).map_err(input_err)?;
    let closed = closed_ideals::is_closed(&ideal);
    Ok(Outcome::ok(vec![Line::new(
        format!("closed: {closed}"),
        vec![("p", p.to_string()), ("closed", closed.to_string())],
    )]))
}

/// One line per canonical flag spec, then one for the `η` family.
pub fn classify(q: &Polynomial<Rational>) -> Result<Vec<Line>, InputError> {
    let en = enumerate_ideals(q).map_err(input_err)?;
    let mut lines = Vec::new();
    for spec in &en.flag_specs {
        let elduque::SpecKind::Flags(flags) = &spec.kind else { unreachable!() };
        let closed = elduque::is_closed(spec);
        let family = spec.closed_family();
        let (text, extra) = if closed {
            let fam = family.unwrap_or("?");
            (format!("flags {flags}: closed, family ({fam})"), ("family", fam.to_string()))
        } else {
            let added = z_closure(spec).added_names().join(", ");
            (format!("flags {flags}: not closed, Z(I) adds {added}"), ("z_adds", added))
        };
        lines.push(Line::new(
            text,
            vec![("q", q.to_string()), ("flags", flags.to_string()), ("closed", closed.to_string()), extra],
        ));
    }
    let samples: Vec<Rational> = ETA_SAMPLES.iter().map(|&(n, d)| Rational::new(n, d).unwrap()).collect();
    let mut closed_at = Vec::new();
    for eta in &samples {
        if elduque::is_closed(&en.eta_family.instance(eta.clone()).map_err(input_err)?) {
            closed_at.push(eta.to_string());
        }
    }
    let shown = samples.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
    let text = if closed_at.is_empty() {
        format!("eta family: not closed at eta = {shown}")
    } else {
        format!("eta family: closed at eta = {}", closed_at.join(", "))
    };
    lines.push(Line::new(
        text,
        vec![("q", q.to_string()), ("eta_samples", shown), ("closed_at", closed_at.join(","))],
    ));
    Ok(lines)
}

fn span_names(s: &crate::linalg::Subspace<Rational>) -> String {
    let names: Vec<String> = s.basis().iter().map(|v| residual_name(v)).collect();
    format!("span{{{}}}", names.join(", "))
}

/// The `series-b` report.
pub fn series_b() -> Vec<Line> {
    let b = quotient_b();
    let derived = b.derived_series();
    let lower = b.lower_central_series();
    let dims = |s: &[crate::linalg::Subspace<Rational>]| {
        s.iter().map(|x| x.dim().to_string()).collect::<Vec<_>>().join(", ")
    };
    let solvable = derived.last().is_some_and(|s| s.dim() == 0);
    let last = lower.last().expect("nonempty");
    let nilpotent = last.dim() == 0;
    vec![
        Line::new(format!("derived series dims: {}", dims(&derived)), vec![("series", "derived".into()), ("dims", dims(&derived))]),
        Line::new(
            format!("lower central series dims: {} (stable)", dims(&lower)),
            vec![("series", "lower_central".into()), ("dims", dims(&lower))],
        ),
        Line::new(format!("stable term: {}", span_names(last)), vec![("stable_term", span_names(last))]),
        Line::new(
            format!("solvable: {solvable}, nilpotent: {nilpotent}"),
            vec![("solvable", solvable.to_string()), ("nilpotent", nilpotent.to_string())],
        ),
    ]
}

/// Runs a parsed command.
pub fn execute(cmd: &Command) -> Result<Outcome, InputError> {
    match cmd {
        Command::Bracket { expr, realization } => {
            let v = element(expr, *realization)?;
            Ok(Outcome::ok(vec![Line::new(
                v.to_string(),
                vec![("realization", realization_name(&v).into()), ("value", v.to_string())],
            )]))
        }
        Command::Jacobi { e1, e2, e3 } => {
            let (a, b, c) = (element(e1, None)?, element(e2, None)?, element(e3, None)?);
            let d = jacobi_of(&a, &b, &c)?;
            let zero = d == Value::zero_of(d.realization().expect("element"));
            Ok(Outcome {
                lines: vec![Line::new(
                    format!("jacobi: {d}"),
                    vec![("realization", realization_name(&d).into()), ("jacobi", d.to_string()), ("zero", zero.to_string())],
                )],
                ok: zero,
            })
        }
        Command::Convert { to, realization, expr } => {
            let v = element(expr, *realization)?;
            let out = convert(&v, (*to).into())?;
            Ok(Outcome::ok(vec![Line::new(
                out.to_string(),
                vec![("from", realization_name(&v).into()), ("to", realization_name(&out).into()), ("value", out.to_string())],
            )]))
        }
        Command::Verify { suite, window } => {
            if window.is_some_and(|w| w < 0) {
                return Err(InputError("--window must be non-negative".into()));
            }
            let rep = match suite {
                Suite::Onsager => verify_onsager(window.unwrap_or(6)),
                Suite::Loop => verify_loop(window.unwrap_or(8)),
                Suite::Tetra => verify_tetra(),
                Suite::Dg => verify_dg(window.unwrap_or(6)),
            };
            Ok(suite_lines(&rep))
        }
        Command::Ideal(IdealCommand::Contains { p, expr }) => ideal_contains(&p.p, expr),
        Command::Ideal(IdealCommand::Closed { p }) => ideal_closed(&p.p),
        Command::Ideal(IdealCommand::Classify { q }) => {
            let q = monic(parse_polynomial(q)?)?;
            Ok(Outcome::ok(classify(&q)?))
        }
        Command::SeriesB => Ok(Outcome::ok(series_b())),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, format: OutputFormat, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            for line in &outcome.lines {
                let _ = writeln!(out, "{}", line.render(format));
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_text(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("onsager").chain(args.iter().copied()), OutputFormat::Text, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn goldens() {
        assert_eq!(run_text(&["bracket", "[A_1, A_0]"]), (0, "2*G_1\n".into(), String::new()));
        assert_eq!(run_text(&["ideal", "closed", "--p", "(t-1)^2*(t+1)^2"]).1, "closed: true\n");
        assert_eq!(run_text(&["convert", "--to", "loop", "A_0"]).1, "e + f\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_text(&["bracket", "[A_1, b_0]"]).0, 2);
        assert_eq!(run_text(&["frobnicate"]).0, 2);
        assert_eq!(run_text(&["jacobi", "A_0", "A_1", "G_2"]).0, 0);
        assert_eq!(run_text(&["ideal", "closed", "--p", "t^2 + t"]).0, 2);
        assert_eq!(run_text(&["convert", "--to", "onsager", "e"]).0, 2);
    }

    #[test]
    fn conversions() {
        assert_eq!(run_text(&["convert", "--to", "v", "G_1"]).1, "4*v_0\n");
        assert_eq!(run_text(&["convert", "--to", "onsager", "4*u_1"]).1, "A_0 + A_1\n");
        assert_eq!(run_text(&["convert", "--to", "onsager", "e + f"]).1, "A_0\n");
        assert_eq!(run_text(&["bracket", "--realization", "loop", "0"]).1, "0\n");
    }

    #[test]
    fn membership_witness() {
        let (code, out, _) = run_text(&["ideal", "contains", "--p", "t^2+3*t+1", "A_0"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("member: false\nwitness: "), "{out}");
        let (_, out, _) = run_text(&["ideal", "contains", "--p", "t - 1", "A_1 - A_0"]);
        assert_eq!(out, "member: true\n");
    }
}
