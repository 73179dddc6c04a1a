//! `bscurve`: blow-spherical classification of complex plane curves.

mod report;

use std::fs;
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use bscurve::bstree::{self, canonical_code, canonical_form, parse_branch_list, BranchList};
use bscurve::normalform::{self, NormalFormData};
use bscurve::{invariants, BsTree, Error, Poly};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "bscurve", version, about = "Blow-spherical invariants of complex algebraic plane curves")]
struct Cli {
    /// Abort with exit code 4 after this many milliseconds.
    #[arg(long, global = true)]
    timeout_ms: Option<u64>,
    /// Variable names of polynomial inputs, in `x,y` order.
    #[arg(long, global = true, default_value = "x,y")]
    vars: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    Infinity,
    Global,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(clap::Args)]
struct Input {
    /// Polynomial defining the curve.
    #[arg(short = 'f', long = "poly", conflicts_with = "branches")]
    poly: Option<String>,
    /// Branch-list JSON document instead of a polynomial.
    #[arg(long)]
    branches: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the tree at infinity or the global tree.
    Tree {
        #[arg(long, value_enum, default_value = "infinity")]
        flavor: Scope,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        input: Input,
    },
    /// Decide blow-spherical equivalence. Inputs starting with `@` name
    /// branch-list files.
    Equiv {
        #[arg(long, value_enum, default_value = "infinity")]
        scope: Scope,
        a: String,
        b: String,
    },
    /// JSON report of local and global invariants.
    Invariants {
        #[arg(short = 'f', long = "poly")]
        poly: String,
        /// `x,y` for one point, `infinity`, or `all`.
        #[arg(long, default_value = "all")]
        at: String,
    },
    /// Normal forms at infinity.
    NormalForm {
        #[command(subcommand)]
        op: NfOp,
    },
    /// Degree of the curve.
    Degree {
        #[arg(short = 'f', long = "poly")]
        poly: String,
    },
    /// Whether the curve is Lipschitz normally embedded.
    Lne {
        #[arg(short = 'f', long = "poly")]
        poly: String,
    },
    /// Classify every line of a file (one polynomial per line).
    Batch {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        file: String,
    },
}

#[derive(Subcommand)]
enum NfOp {
    Extract {
        #[arg(short = 'f', long = "poly")]
        poly: String,
    },
    Realize {
        #[arg(long)]
        data: String,
    },
}

/// Output of a run: text for stdout, warnings for stderr, exit code.
struct Outcome {
    out: String,
    warnings: Vec<String>,
    code: u8,
}

struct Failure {
    err: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSquarefree => 3,
            Error::NotAbsolutelyIrreducible(_) | Error::Disconnected | Error::NonIsolated => 4,
            Error::InvalidNormalForm(_) => 5,
            _ => 2,
        };
        Failure { err: e.to_string(), code }
    }
}

type Run = Result<Outcome, Failure>;

fn fail(code: u8, err: impl Into<String>) -> Failure {
    Failure { err: err.into(), code }
}

/// Parsing context: variable names and accumulated warnings.
struct Ctx {
    vars: Vec<String>,
    warnings: Vec<String>,
}

impl Ctx {
    /// Parses a curve and replaces it by its squarefree part, warning if
    /// that changes it.
    fn curve(&mut self, text: &str) -> Result<Poly, Failure> {
        let names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let f = Poly::parse(text, &names)?;
        let f = Poly::from_terms(&["x", "y"], f.terms().map(|(e, c)| (e.to_vec(), c.clone())));
        if f.is_zero() {
            return Err(Error::ZeroPolynomial.into());
        }
        if f.is_constant() {
            return Err(Error::ConstantPolynomial.into());
        }
        if !f.is_squarefree()? {
            let g = f.squarefree_part()?;
            self.warnings.push(format!("`{text}` is not squarefree; using its squarefree part `{g}`"));
            return Ok(g);
        }
        Ok(f)
    }

    fn finish(self, out: String, code: u8) -> Run {
        // a non-squarefree input is reported even when the computation succeeds
        let code = if self.warnings.is_empty() { code } else { 3 };
        Ok(Outcome { out, warnings: self.warnings, code })
    }
}

enum Curve {
    Poly(Poly),
    Branches(BranchList),
}

fn load_branches(path: &str) -> Result<BranchList, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail(2, format!("cannot read `{path}`: {e}")))?;
    Ok(parse_branch_list(&text)?)
}

fn tree_of(c: &Curve, scope: Scope) -> Result<BsTree, Failure> {
    let t = match (c, scope) {
        (Curve::Poly(f), Scope::Infinity) => bstree::build_infinity_tree(f)?,
        (Curve::Poly(f), Scope::Global) => bstree::build_global_tree(f)?,
        (Curve::Branches(b), Scope::Infinity) => b.infinity_tree(),
        (Curve::Branches(b), Scope::Global) => b.global_tree()?,
    };
    Ok(t)
}

fn parse_point(s: &str) -> Result<(bscurve::AlgebraicNumber, bscurve::AlgebraicNumber), Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || fail(2, format!("`{s}` is not a point `x,y` with rational coordinates"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let x = bscurve::arith::parse_rat(parts[0]).ok_or_else(bad)?;
    let y = bscurve::arith::parse_rat(parts[1]).ok_or_else(bad)?;
    Ok((bscurve::AlgebraicNumber::from_rat(x), bscurve::AlgebraicNumber::from_rat(y)))
}

fn run(cmd: Cmd, vars: Vec<String>) -> Run {
    let mut ctx = Ctx { vars, warnings: Vec::new() };
    match cmd {
        Cmd::Tree { flavor, format, input } => {
            let curve = match (input.poly, input.branches) {
                (Some(p), None) => Curve::Poly(ctx.curve(&p)?),
                (None, Some(b)) => Curve::Branches(load_branches(&b)?),
                _ => return Err(fail(2, "give exactly one of -f/--poly and --branches")),
            };
            let t = canonical_form(&tree_of(&curve, flavor)?)?;
            let out = match format {
                Format::Json => t.to_json() + "\n",
                Format::Dot => t.to_dot(),
            };
            ctx.finish(out, 0)
        }
        Cmd::Equiv { scope, a, b } => {
            let mut load = |s: &str| -> Result<Curve, Failure> {
                match s.strip_prefix('@') {
                    Some(path) => Ok(Curve::Branches(load_branches(path)?)),
                    None => Ok(Curve::Poly(ctx.curve(s)?)),
                }
            };
            let (ca, cb) = (load(&a)?, load(&b)?);
            let code_a = canonical_code(&tree_of(&ca, scope)?)?;
            let code_b = canonical_code(&tree_of(&cb, scope)?)?;
            let same = code_a == code_b;
            let verdict = if same { "equivalent" } else { "not-equivalent" };
            ctx.finish(format!("{verdict}\n{code_a}\n{code_b}\n"), if same { 0 } else { 1 })
        }
        Cmd::Invariants { poly, at } => {
            let f = ctx.curve(&poly)?;
            let r = match at.as_str() {
                "all" => report::full(&f)?,
                "infinity" => report::at_infinity(&f)?,
                p => {
                    let (x, y) = parse_point(p)?;
                    report::at_point(&f, &x, &y)?
                }
            };
            ctx.finish(serde_json::to_string_pretty(&r).unwrap() + "\n", 0)
        }
        Cmd::NormalForm { op: NfOp::Extract { poly } } => {
            let f = ctx.curve(&poly)?;
            let a = normalform::extract(&f)?;
            let x = normalform::realize(&a)?;
            ctx.finish(format!("{}\n{x}\n", a.to_json()), 0)
        }
        Cmd::NormalForm { op: NfOp::Realize { data } } => {
            let a = NormalFormData::from_json(&data)?;
            ctx.finish(format!("{}\n", normalform::realize(&a)?), 0)
        }
        Cmd::Degree { poly } => {
            let f = ctx.curve(&poly)?;
            ctx.finish(format!("{}\n", invariants::degree(&f)?), 0)
        }
        Cmd::Lne { poly } => {
            let f = ctx.curve(&poly)?;
            ctx.finish(format!("{}\n", invariants::is_lne(&f)?), 0)
        }
        Cmd::Batch { jobs, file } => batch(&ctx.vars, jobs, &file),
    }
}

/// One JSON line per input line, in input order.
fn batch(vars: &[String], jobs: usize, file: &str) -> Run {
    let text = fs::read_to_string(file).map_err(|e| fail(2, format!("cannot read `{file}`: {e}")))?;
    let lines: Vec<(usize, &str)> =
        text.lines().enumerate().map(|(i, l)| (i, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#')).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| fail(4, e.to_string()))?;
    let results: Vec<(serde_json::Value, u8)> = pool.install(|| {
        lines
            .par_iter()
            .map(|&(i, l)| {
                let mut ctx = Ctx { vars: vars.to_vec(), warnings: Vec::new() };
                let res = (|| -> Result<serde_json::Value, Failure> {
                    let f = ctx.curve(l)?;
                    let inf = canonical_code(&bstree::build_infinity_tree(&f)?)?;
                    let global = match bstree::build_global_tree(&f) {
                        Ok(t) => json!(canonical_code(&t)?),
                        Err(e) => json!({ "error": e.to_string() }),
                    };
                    Ok(json!({
                        "degree": invariants::degree(&f)?,
                        "normal_form": normalform::extract(&f)?.groups,
                        "infinity_code": inf,
                        "global_code": global,
                    }))
                })();
                let code = if ctx.warnings.is_empty() { 0 } else { 3 };
                match res {
                    Ok(mut v) => {
                        v["line"] = json!(i + 1);
                        v["input"] = json!(l);
                        (v, code)
                    }
                    Err(e) => (json!({ "line": i + 1, "input": l, "error": e.err, "exit": e.code }), e.code),
                }
            })
            .collect()
    });
    let code = results.iter().map(|r| r.1).max().unwrap_or(0);
    let out: String = results.iter().map(|r| r.0.to_string() + "\n").collect();
    Ok(Outcome { out, warnings: Vec::new(), code })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let vars: Vec<String> = cli.vars.split(',').map(|s| s.trim().to_string()).collect();
    if vars.len() != 2 || vars.iter().any(String::is_empty) || vars[0] == vars[1] {
        eprintln!("error: --vars needs two distinct names");
        return ExitCode::from(2);
    }
    let (tx, rx) = mpsc::channel();
    let cmd = cli.cmd;
    // large stacks for deep expansions
    thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(move || {
            let _ = tx.send(run(cmd, vars));
        })
        .expect("spawn worker");
    let res = match cli.timeout_ms {
        Some(ms) => match rx.recv_timeout(Duration::from_millis(ms)) {
            Ok(r) => r,
            Err(_) => Err(fail(4, format!("timed out after {ms} ms"))),
        },
        None => rx.recv().unwrap_or_else(|_| Err(fail(4, "computation aborted"))),
    };
    match res {
        Ok(o) => {
            for w in &o.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", o.out);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.err);
            ExitCode::from(e.code)
        }
    }
}
