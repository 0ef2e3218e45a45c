//! Command-line front-end: expression parsing, subcommand dispatch and
//! canonical JSON output.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 on domain errors
//! reported by the library (for instance a constant `f`). Errors are printed
//! to standard error as `{"error": {"code": ..., "message": ...}}`.

pub mod parse;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pillai_core::factor::factor;
use pillai_core::function_field::{height, places_with_valuations, Height};
use pillai_core::pillai::{
    admissible_tuples, bound_b, certify, certify_general, check_f, grid_search, remark2_family,
    solution_instance, solve_equal_squares, AdmissibleTuple, PillaiSolution, Remark2Kind,
    ScaledPower, Verdict,
};
use pillai_core::unit_equation::verify_bm;
use pillai_core::BigRat;
use serde_json::{json, Value};

use crate::parse::{parse_grid, parse_poly, parse_ratfn, parse_rational, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "pillai",
    version,
    about = "Exact tools for the polynomial Pillai equation p^n - q^m = f"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Height of a rational function and its places with valuations
    Height { ratfn: String },
    /// Bound on max{n, m, deg p, deg q}
    Bound { f: String },
    /// Tuples (n, m, deg p, deg q) passing the necessary conditions
    Tuples { f: String },
    /// Factor a polynomial over the rationals
    Factor { f: String },
    /// Check p^n - q^m = f exactly
    Certify {
        f: String,
        #[command(flatten)]
        sol: SolutionArgs,
    },
    /// Check a*p^n + b*q^m = f exactly
    CertifyGeneral {
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        sol: SolutionArgs,
    },
    /// All n = m = 2 solution families with rational p - q and p + q
    Solve2 { f: String },
    /// Generate a member of one of the explicit parametric families
    Family {
        kind: FamilyKind,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Evaluate the Brownawell-Masser inequality on the unit equation of a solution
    Bm {
        f: String,
        #[command(flatten)]
        sol: SolutionArgs,
    },
    /// Brute-force test oracle: try every q with coefficients from a rational
    /// grid. Not a solver over the complex numbers.
    Search {
        f: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        dp: u32,
        #[arg(long)]
        dq: u32,
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyKind {
    #[value(name = "monomial_k")]
    MonomialK,
    #[value(name = "linear_bx")]
    LinearBx,
    #[value(name = "affine_sr")]
    AffineSr,
    #[value(name = "shifted_affine")]
    ShiftedAffine,
    #[value(name = "cubic")]
    Cubic,
}

/// `p` is given either as a plain polynomial (`--p`) or as a scaled power
/// (`--p-scale s --p-base h`, meaning `p^n = s·h^n`); likewise for `q`.
#[derive(Debug, Args)]
struct SolutionArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["p_scale", "p_base"])]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "p_base")]
    p_scale: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "p_scale")]
    p_base: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["q_scale", "q_base"])]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "q_base")]
    q_scale: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "q_scale")]
    q_base: Option<String>,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Parse(ParseError),
    Domain(pillai_core::Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<pillai_core::Error> for Failure {
    fn from(e: pillai_core::Error) -> Self {
        Failure::Domain(e)
    }
}

fn error_json(code: &str, message: &str) -> String {
    json!({"error": {"code": code, "message": message}}).to_string() + "\n"
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: error_json("usage", e.to_string().trim_end()),
                },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => Outcome {
            code: 0,
            stdout: v.to_string() + "\n",
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: error_json("usage", &msg),
        },
        Err(Failure::Parse(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: error_json("parse_error", &e.to_string()),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: error_json(e.code(), &e.to_string()),
        },
    }
}

fn power_json(sp: &ScaledPower) -> Value {
    json!({
        "exponent": sp.exponent(),
        "scale": sp.scale().to_string(),
        "base": sp.base().to_string(),
    })
}

fn solution_json(sol: &PillaiSolution) -> Value {
    let t = sol.tuple();
    let mut v = json!({
        "n": t.n,
        "m": t.m,
        "left": power_json(&sol.left),
        "right": power_json(&sol.right),
    });
    if let Some(p) = sol.left.rational_root() {
        v["p"] = json!(p.to_string());
    }
    if let Some(q) = sol.right.rational_root() {
        v["q"] = json!(q.to_string());
    }
    v
}

fn verdict_json(v: Verdict) -> Value {
    match v.reason() {
        None => json!({"valid": true}),
        Some(r) => json!({"valid": false, "reason": r.code()}),
    }
}

fn side(
    exponent: u32,
    plain: &Option<String>,
    scale: &Option<String>,
    base: &Option<String>,
    name: &str,
) -> Result<ScaledPower, Failure> {
    match (plain, scale, base) {
        (Some(p), None, None) => Ok(ScaledPower::from_poly(&parse_poly(p)?, exponent)?),
        (None, Some(s), Some(b)) => Ok(ScaledPower::new(
            exponent,
            parse_rational(s)?,
            parse_poly(b)?,
        )?),
        _ => Err(Failure::Usage(format!(
            "give either --{name} or both --{name}-scale and --{name}-base"
        ))),
    }
}

impl SolutionArgs {
    fn solution(&self) -> Result<PillaiSolution, Failure> {
        Ok(PillaiSolution::new(
            side(self.n, &self.p, &self.p_scale, &self.p_base, "p")?,
            side(self.m, &self.q, &self.q_scale, &self.q_base, "q")?,
        ))
    }
}

fn need(v: &Option<String>, flag: &str, kind: &str) -> Result<BigRat, Failure> {
    match v {
        Some(s) => Ok(parse_rational(s)?),
        None => Err(Failure::Usage(format!("{kind} needs --{flag}"))),
    }
}

fn dispatch(cmd: Command) -> Result<Value, Failure> {
    match cmd {
        Command::Height { ratfn } => {
            let f = parse_ratfn(&ratfn)?;
            let h = match height(&f) {
                Height::Finite(h) => json!(h),
                Height::Infinite => json!("inf"),
            };
            let places: Vec<Value> = if f.is_zero() {
                Vec::new()
            } else {
                places_with_valuations(&f)?
                    .into_iter()
                    .map(|(v, e)| {
                        json!({"place": v.to_string(), "weight": v.complex_weight(), "valuation": e})
                    })
                    .collect()
            };
            Ok(json!({"height": h, "places": places}))
        }
        Command::Bound { f } => {
            let f = parse_poly(&f)?;
            let b = bound_b(&f)?;
            Ok(json!({"deg_f": f.deg(), "B": b}))
        }
        Command::Tuples { f } => {
            let f = parse_poly(&f)?;
            let tuples: Vec<[u32; 4]> = admissible_tuples(&f)?
                .iter()
                .map(|t| [t.n, t.m, t.dp, t.dq])
                .collect();
            Ok(json!({"necessary_conditions_only": true, "tuples": tuples}))
        }
        Command::Factor { f } => {
            let f = parse_poly(&f)?;
            let fac = factor(&f)?;
            let factors: Vec<Value> = fac
                .factors
                .iter()
                .map(|(g, e)| json!([g.to_string(), e]))
                .collect();
            Ok(json!({"unit": fac.unit.to_string(), "factors": factors}))
        }
        Command::Certify { f, sol } => {
            let f = parse_poly(&f)?;
            check_f(&f)?;
            Ok(verdict_json(certify(&f, &sol.solution()?)?))
        }
        Command::CertifyGeneral { f, a, b, sol } => {
            let f = parse_poly(&f)?;
            let a = parse_poly(&a)?;
            let b = parse_poly(&b)?;
            check_f(&f)?;
            Ok(verdict_json(certify_general(&a, &b, &f, &sol.solution()?)?))
        }
        Command::Solve2 { f } => {
            let f = parse_poly(&f)?;
            let families: Vec<Value> = solve_equal_squares(&f)?
                .iter()
                .map(|fam| {
                    let (g, h) = fam.split();
                    json!({
                        "split": [g.to_string(), h.to_string()],
                        "p_of_t": fam.p_of_t(),
                        "q_of_t": fam.q_of_t(),
                    })
                })
                .collect();
            Ok(json!({
                "families": families,
                "sign_symmetry": "reversing a split maps (p, q) to (p, -q); each unordered split is listed once",
                "scope": "only splits defined over the rationals are listed",
            }))
        }
        Command::Family {
            kind,
            a,
            k,
            b,
            s,
            r,
            ell,
            u,
            t,
        } => {
            let a = parse_rational(&a)?;
            let kind = match kind {
                FamilyKind::MonomialK => Remark2Kind::MonomialK {
                    k: k.ok_or_else(|| Failure::Usage("monomial_k needs --k".into()))?,
                    b: need(&b, "b", "monomial_k")?,
                },
                FamilyKind::LinearBx => Remark2Kind::LinearBx {
                    b: need(&b, "b", "linear_bx")?,
                },
                FamilyKind::AffineSr => Remark2Kind::AffineSr {
                    s: need(&s, "s", "affine_sr")?,
                    r: need(&r, "r", "affine_sr")?,
                },
                FamilyKind::ShiftedAffine => Remark2Kind::ShiftedAffine {
                    s: need(&s, "s", "shifted_affine")?,
                    r: need(&r, "r", "shifted_affine")?,
                    ell: ell.ok_or_else(|| Failure::Usage("shifted_affine needs --ell".into()))?,
                },
                FamilyKind::Cubic => Remark2Kind::Cubic {
                    u: need(&u, "u", "cubic")?,
                    t: need(&t, "t", "cubic")?,
                    s: need(&s, "s", "cubic")?,
                },
            };
            let (f, sol) = remark2_family(&kind, &a)?;
            let certified = certify(&f, &sol)?.is_valid();
            Ok(json!({
                "kind": kind.name(),
                "a": a.to_string(),
                "f": f.to_string(),
                "solution": solution_json(&sol),
                "certified": certified,
            }))
        }
        Command::Bm { f, sol } => {
            let f = parse_poly(&f)?;
            check_f(&f)?;
            let sol = sol.solution()?;
            let report = verify_bm(&solution_instance(&f, &sol)?);
            Ok(json!({
                "max_height": report.max_height,
                "s_size": report.s_size,
                "bound": report.bound,
                "holds": report.holds,
                "subsum_ok": report.subsum_ok,
            }))
        }
        Command::Search {
            f,
            n,
            m,
            dp,
            dq,
            grid,
        } => {
            let f = parse_poly(&f)?;
            let grid = parse_grid(&grid)?;
            let tuple = AdmissibleTuple::new(n, m, dp, dq);
            let sols: Vec<Value> = grid_search(&f, &tuple, &grid)?
                .iter()
                .map(solution_json)
                .collect();
            Ok(json!({"solutions": sols}))
        }
    }
}
