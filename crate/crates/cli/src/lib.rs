//! The `boole` command line.
//!
//! [`run`] is a pure function from argv and stdin to stdout, stderr and an
//! exit code, so the binary is a thin wrapper and tests can call it directly.
//!
//! Exit codes: 0 for success (`holds`, `equal`), 1 for a semantic negative
//! (`not-equal`, `fails`, undefined, not interpretable), 2 for usage and parse
//! errors.

pub mod assign;
pub mod wire;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use boole_core::development::{self, Sigma};
use boole_core::models::{self, format_subset, PartialValue};
use boole_core::poly::{Polynomial, VarName, DEFAULT_MAX_VARS};
use boole_core::r01::{check_r01_with_cap, HornSentence, Verdict};
use boole_core::term::{self, Term};
use boole_core::theorems::{self, SolveStatus};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    JsonLines,
}

#[derive(Debug, Parser)]
#[command(
    name = "boole",
    version,
    about = "Boole's algebra of logic over multilinear integer polynomials"
)]
struct Cli {
    /// Cap on variables for commands that enumerate 2^n points.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VARS)]
    max_vars: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical polynomial of a term.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the complete development, one `σ coefficient` line per point.
    Develop {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Compare two terms by their complete developments.
    Equal {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Reduce equations `e1 = 0, …, ek = 0` to one.
    Reduce {
        #[arg(required = true, allow_hyphen_values = true)]
        equations: Vec<String>,
    },
    /// Eliminate variables from an equation.
    Eliminate {
        #[arg(allow_hyphen_values = true)]
        equation: String,
        #[arg(long, value_delimiter = ',', required = true)]
        elim: Vec<String>,
    },
    /// Solve an equation for one or more unknowns, in the order given.
    Solve {
        #[arg(allow_hyphen_values = true)]
        equation: String,
        #[arg(long = "for", value_delimiter = ',', required = true)]
        unknowns: Vec<String>,
    },
    /// Report total interpretability, idempotence, and the interpretable core.
    Interpretable {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Translate a totally interpretable term to a set expression.
    Setexpr {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decide Horn sentences `e1=0 & e2=0 -> e0=0` (or bare `s = t`) by the Rule of 0 and 1.
    ///
    /// The sentence is given inline, or one per line via --file or stdin.
    R01 {
        #[arg(allow_hyphen_values = true)]
        sentence: Option<String>,
        #[arg(long, conflicts_with = "sentence")]
        file: Option<PathBuf>,
    },
    /// Evaluate a term under class or multiset assignments.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(
            long,
            conflicts_with = "multisets",
            required_unless_present = "multisets"
        )]
        classes: Option<String>,
        #[arg(long)]
        multisets: Option<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type CmdResult = Result<i32, Usage>;

struct Ctx<'a> {
    format: OutputFormat,
    cap: usize,
    out: String,
    err: String,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn json(&mut self, v: serde_json::Value) {
        let _ = writeln!(self.out, "{v}");
    }

    fn text(&self) -> bool {
        self.format == OutputFormat::Text
    }

    fn poly(&mut self, p: &Polynomial) {
        if self.text() {
            self.line(p.to_string());
        } else {
            self.json(json!({ "polynomial": wire::to_wire(p) }));
        }
    }
}

pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    stderr: text,
                    code,
                    ..Outcome::default()
                }
            };
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        cap: cli.max_vars,
        out: String::new(),
        err: String::new(),
        stdin,
    };
    if cli.max_vars > DEFAULT_MAX_VARS {
        let _ = writeln!(
            ctx.err,
            "note: --max-vars {} allows enumerations of up to 2^{} points",
            cli.max_vars, cli.max_vars
        );
    }
    let code = match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            2
        }
    };
    Outcome {
        stdout: ctx.out,
        stderr: ctx.err,
        code,
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx<'_>) -> CmdResult {
    match cmd {
        Command::Normalize { expr } => normalize(&expr, ctx),
        Command::Develop { expr, vars } => develop(&expr, vars, ctx),
        Command::Equal { left, right, vars } => equal(&left, &right, vars, ctx),
        Command::Reduce { equations } => reduce(&equations, ctx),
        Command::Eliminate { equation, elim } => eliminate(&equation, &elim, ctx),
        Command::Solve { equation, unknowns } => solve(&equation, &unknowns, ctx),
        Command::Interpretable { expr } => interpretable(&expr, ctx),
        Command::Setexpr { expr } => setexpr(&expr, ctx),
        Command::R01 { sentence, file } => r01(sentence, file, ctx),
        Command::Eval {
            expr,
            classes,
            multisets,
        } => eval(&expr, classes, multisets, ctx),
    }
}

fn parse_poly(expr: &str) -> Result<Polynomial, Usage> {
    Ok(term::term_to_poly(&term::parse(expr)?))
}

/// `s = t` as `s - t`; a bare term as itself.
fn parse_equation_poly(text: &str) -> Result<Polynomial, Usage> {
    let (l, r) = term::parse_equation(text)?;
    Ok(term::term_to_poly(&l) - term::term_to_poly(&r))
}

fn var_list(names: &[String]) -> Result<Vec<VarName>, Usage> {
    Ok(names
        .iter()
        .map(|s| VarName::new(s.trim()))
        .collect::<Result<Vec<_>, _>>()?)
}

fn sigma_text(s: Sigma) -> String {
    if s.is_empty() {
        "ε".to_string()
    } else {
        s.to_string()
    }
}

fn normalize(expr: &str, ctx: &mut Ctx<'_>) -> CmdResult {
    let p = parse_poly(expr)?;
    ctx.poly(&p);
    Ok(0)
}

fn develop(expr: &str, vars: Option<Vec<String>>, ctx: &mut Ctx<'_>) -> CmdResult {
    let p = parse_poly(expr)?;
    let vars = match vars {
        Some(v) => var_list(&v)?,
        None => p.variables().into_iter().collect(),
    };
    let table = development::develop_with_cap(&p, &vars, ctx.cap)?;
    let values = table.constants().expect("complete development");
    for (s, c) in Sigma::all(table.vars().len()).zip(values) {
        if ctx.text() {
            ctx.line(format!("{} {c}", sigma_text(s)));
        } else {
            ctx.json(json!({ "sigma": s.to_string(), "coefficient": c.to_string() }));
        }
    }
    Ok(0)
}

fn equal(left: &str, right: &str, vars: Option<Vec<String>>, ctx: &mut Ctx<'_>) -> CmdResult {
    let (p, q) = (parse_poly(left)?, parse_poly(right)?);
    let vars = match vars {
        Some(v) => var_list(&v)?,
        None => p.variables().union(&q.variables()).cloned().collect(),
    };
    let diff = development::first_difference(&p, &q, &vars, ctx.cap)?;
    match diff {
        None => {
            if ctx.text() {
                ctx.line("equal");
            } else {
                ctx.json(json!({ "equal": true }));
            }
            Ok(0)
        }
        Some((s, a, b)) => {
            if ctx.text() {
                ctx.line(format!("not-equal at σ={}", sigma_text(s)));
            } else {
                ctx.json(json!({
                    "equal": false,
                    "sigma": s.to_string(),
                    "left": a.to_string(),
                    "right": b.to_string(),
                }));
            }
            Ok(1)
        }
    }
}

fn reduce(equations: &[String], ctx: &mut Ctx<'_>) -> CmdResult {
    let lhs = equations
        .iter()
        .map(|e| parse_equation_poly(e))
        .collect::<Result<Vec<_>, _>>()?;
    let r = theorems::reduce(&lhs)?;
    ctx.poly(&r);
    Ok(0)
}

fn eliminate(equation: &str, elim: &[String], ctx: &mut Ctx<'_>) -> CmdResult {
    let p = parse_equation_poly(equation)?;
    let e = theorems::eliminate_with_cap(&p, &var_list(elim)?, ctx.cap)?;
    ctx.poly(&e);
    Ok(0)
}

fn solve(equation: &str, unknowns: &[String], ctx: &mut Ctx<'_>) -> CmdResult {
    let unknowns = var_list(unknowns)?;
    let mut current = parse_equation_poly(equation)?;
    let mut taken = current.variables();
    taken.extend(unknowns.iter().cloned());
    let mut lines = Vec::new();
    for y in &unknowns {
        let param = theorems::fresh_parameter(&taken);
        taken.insert(param.clone());
        let s = theorems::solve_with_parameter(&current, y, param, ctx.cap)?;
        if s.status == SolveStatus::Vacuous {
            let _ = writeln!(
                ctx.err,
                "warning: {y} does not occur in the equation; solution is vacuous"
            );
        }
        if ctx.text() {
            lines.push(format!(
                "{y} = {} + {}*({})",
                s.particular, s.parameter, s.freedom
            ));
        } else {
            ctx.json(json!({
                "unknown": y.as_str(),
                "condition": wire::to_wire(&s.condition),
                "particular": wire::to_wire(&s.particular),
                "freedom": wire::to_wire(&s.freedom),
                "parameter": s.parameter.as_str(),
                "status": match s.status {
                    SolveStatus::Solved => "solved",
                    SolveStatus::Vacuous => "vacuous",
                },
            }));
        }
        current = s.condition;
    }
    if ctx.text() {
        ctx.line(format!("condition: {current}"));
        for l in lines {
            ctx.line(l);
        }
    }
    Ok(0)
}

fn interpretable(expr: &str, ctx: &mut Ctx<'_>) -> CmdResult {
    let t = term::parse(expr)?;
    let p = term::term_to_poly(&t);
    let total = term::is_totally_interpretable(&t);
    let idempotent = p.is_idempotent();
    let vars: Vec<VarName> = p.variables().into_iter().collect();
    let core = development::interpretable_core_with_cap(&p, &vars, ctx.cap)?;
    let yes = |b: bool| if b { "yes" } else { "no" };
    if ctx.text() {
        ctx.line(format!("totally-interpretable: {}", yes(total)));
        ctx.line(format!("idempotent: {}", yes(idempotent)));
        ctx.line(format!("core: {core}"));
    } else {
        ctx.json(json!({
            "totally_interpretable": total,
            "idempotent": idempotent,
            "core": wire::to_wire(&core),
        }));
    }
    Ok(0)
}

fn setexpr(expr: &str, ctx: &mut Ctx<'_>) -> CmdResult {
    let t = term::parse(expr)?;
    match term::to_set_expression(&t) {
        Ok(s) => {
            if ctx.text() {
                ctx.line(s.to_string());
            } else {
                ctx.json(json!({ "set": s.to_string() }));
            }
            Ok(0)
        }
        Err(e) => {
            if ctx.text() {
                ctx.line(e.to_string());
            } else {
                ctx.json(json!({ "error": e.to_string() }));
            }
            Ok(1)
        }
    }
}

fn sentence(line: &str) -> Result<HornSentence, Usage> {
    let (ants, (cl, cr)) = term::parse_sentence(line)?;
    let p = |t: &Term| term::term_to_poly(t);
    Ok(HornSentence::from_equations(
        ants.iter().map(|(l, r)| (p(l), p(r))).collect(),
        (p(&cl), p(&cr)),
    ))
}

fn r01(inline: Option<String>, file: Option<PathBuf>, ctx: &mut Ctx<'_>) -> CmdResult {
    let text = match (inline, file) {
        (Some(s), _) => s,
        (None, Some(path)) => {
            std::fs::read_to_string(&path).map_err(|e| Usage(format!("{}: {e}", path.display())))?
        }
        (None, None) => {
            let mut s = String::new();
            ctx.stdin.read_to_string(&mut s)?;
            s
        }
    };
    let mut code = 0;
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let h = sentence(line).map_err(|Usage(m)| Usage(format!("line {}: {m}", n + 1)))?;
        match check_r01_with_cap(&h, ctx.cap)? {
            Verdict::Holds => {
                if ctx.text() {
                    ctx.line("holds");
                } else {
                    ctx.json(json!({ "verdict": "holds" }));
                }
            }
            Verdict::Fails(w) => {
                code = 1;
                if ctx.text() {
                    ctx.line(format!("fails at {w}"));
                } else {
                    let witness: serde_json::Map<String, serde_json::Value> = w
                        .vars
                        .iter()
                        .zip(w.sigma.bits())
                        .map(|(v, b)| (v.as_str().to_string(), json!(u8::from(b))))
                        .collect();
                    ctx.json(json!({
                        "verdict": "fails",
                        "witness": witness,
                        "antecedent_values": w.antecedent_values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "consequent_value": w.consequent_value.to_string(),
                    }));
                }
            }
        }
    }
    Ok(code)
}

fn eval(
    expr: &str,
    classes: Option<String>,
    multisets: Option<String>,
    ctx: &mut Ctx<'_>,
) -> CmdResult {
    let t = term::parse(expr)?;
    if let Some(text) = classes {
        let a = assign::parse_classes(&text)?;
        match models::eval_partial(&t, &a)? {
            PartialValue::Defined(s) => {
                if ctx.text() {
                    ctx.line(format_subset(s));
                } else {
                    let elems: Vec<u32> = (0..32).filter(|i| s >> i & 1 == 1).collect();
                    ctx.json(json!({ "defined": true, "subset": elems }));
                }
                Ok(0)
            }
            PartialValue::Undefined(u) => {
                if ctx.text() {
                    ctx.line(format!("undefined: {u}"));
                } else {
                    ctx.json(json!({ "defined": false, "reason": u.to_string() }));
                }
                Ok(1)
            }
        }
    } else {
        let text = multisets.expect("clap requires one assignment");
        let m = assign::parse_multisets(&text)?;
        let v = models::eval_multiset(&t, &m)?;
        if ctx.text() {
            ctx.line(v.to_string());
        } else {
            let vals: Vec<String> = v.values().iter().map(|x| x.to_string()).collect();
            ctx.json(json!({ "multiset": vals }));
        }
        Ok(0)
    }
}
