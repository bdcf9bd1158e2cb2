//! Command-line front end.
//!
//! [`run`] parses arguments and returns the exit code with the text meant
//! for stdout and stderr, so the whole interface is testable in-process.
//! Exit codes: 0 success, 2 invalid arguments, 3 internal consistency failure.
//!
//! JSON output writes big integers as decimal strings and uses zero-based
//! positions (`"indexing": "zero-based"`), except matrix triplets, which
//! keep the one-based row and column numbers of the matrix definitions.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::decomp_matrices::{build_direct, build_recursive, prime_power_exponent, IntMatrix, MatrixKind};
use crate::error::Error;
use crate::padic::Prime;
use crate::selftest::{self, Level};
use crate::series::{chi_series, d_series};
use crate::sl2::{lucas_weights, sl2_simple_char, sl2_weyl_factors};
use crate::sp_characters::{
    asymptotic_constant, decompose_simple, decompose_weyl, dim_simple, weyl_dim, CharacterVector, DimMethod,
    DimensionReport,
};
use crate::symmetric_group::{james_factors, simple_dim_two_row, simple_in_specht_basis, specht_dim};
use crate::weyl_simplicity::{is_simple_weyl, premet_suprunenko_conditions, simplicity_census};

/// What a finished invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

const EXIT_USAGE: i32 = 2;
const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "spchar", version, about = "Characters of fundamental-weight modules for Sp(2m) in characteristic p")]
struct Cli {
    /// Write the payload to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let p: u64 = s.parse().map_err(|e| format!("{s:?} is not a nonnegative integer: {e}"))?;
    Prime::new(p).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of L(ω_r) and Δ(ω_r)
    Dims {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        m: u64,
        /// A single r; all 0 ≤ r ≤ m when omitted
        #[arg(long)]
        r: Option<u64>,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "json")]
        format: DimsFormat,
    },
    /// ch L(ω_r) in the Weyl basis, or ch Δ(ω_r) in the simple basis
    Char {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
        #[arg(long, value_enum, default_value = "weyl")]
        basis: BasisArg,
    },
    /// The matrices A(n), B(n) or their product
    Matrix {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "A", ignore_case = true)]
        which: WhichMatrix,
        #[arg(long, value_enum, default_value = "direct")]
        construction: Construction,
        #[arg(long, value_enum, default_value = "grid")]
        format: MatrixFormat,
    },
    /// Simplicity of Δ(ω_r) for each r, or the census of I_p(m+1)
    SimpleWeyl {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        census: bool,
    },
    /// Two-row Specht and simple modules of S_n
    Specht {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: Option<u64>,
    },
    /// SL(2): Weyl module factors, simple characters and weights
    #[command(group(ArgGroup::new("view").args(["factors", "char", "weights"])))]
    Sl2 {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        factors: bool,
        #[arg(long)]
        char: bool,
        #[arg(long)]
        weights: bool,
    },
    /// Coefficients of χ_d or D_d
    Series {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "chi")]
        which: SeriesArg,
    },
    /// The constant c and growth base of dim L_{d+n}(ω_n)
    Asymptotic {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 256)]
        precision: usize,
    },
    /// Run the built-in cross-checks
    Selftest {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MethodArg {
    Theorem,
    Series,
    Binomial,
    Trig,
    All,
}

impl From<MethodArg> for DimMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Theorem => DimMethod::Theorem,
            MethodArg::Series => DimMethod::Series,
            MethodArg::Binomial => DimMethod::Binomial,
            MethodArg::Trig => DimMethod::Trig,
            MethodArg::All => DimMethod::All,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DimsFormat {
    Json,
    Csv,
    Table,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum BasisArg {
    Weyl,
    Simple,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum WhichMatrix {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    Product,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    Direct,
    Recursive,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Csv,
    Triplets,
    Grid,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SeriesArg {
    Chi,
    Dd,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

/// A payload plus an optional consistency complaint.
struct Payload {
    text: String,
    failure: Option<String>,
}

impl Payload {
    fn ok(text: String) -> Self {
        Payload { text, failure: None }
    }

    fn json(v: &Value) -> Self {
        Payload::ok(pretty(v))
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let payload = match execute(cli.command) {
        Ok(p) => p,
        Err(e) => {
            let code = if e.is_consistency_failure() { EXIT_INCONSISTENT } else { EXIT_USAGE };
            return Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    };
    let (code, stderr) = match payload.failure {
        Some(msg) => (EXIT_INCONSISTENT, format!("consistency failure: {msg}\n")),
        None => (0, String::new()),
    };
    match cli.out {
        Some(path) => match std::fs::write(&path, &payload.text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr },
            Err(e) => Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code, stdout: payload.text, stderr },
    }
}

fn execute(command: Command) -> Result<Payload, Error> {
    match command {
        Command::Dims { p, m, r, method, format } => dims(p, m, r, method.into(), format),
        Command::Char { p, m, r, basis } => {
            let v = match basis {
                BasisArg::Weyl => decompose_simple(r, m, p)?,
                BasisArg::Simple => decompose_weyl(r, m, p)?,
            };
            Ok(Payload::json(&char_json(p, m, r, &v)))
        }
        Command::Matrix { p, n, which, construction, format } => matrix(p, n, which, construction, format),
        Command::SimpleWeyl { p, m, census } => simple_weyl(p, m, census),
        Command::Specht { p, n, r } => specht(p, n, r),
        Command::Sl2 { p, r, factors, char, weights } => Ok(sl2(p, r, factors, char, weights)),
        Command::Series { p, d, order, which } => {
            let (name, s) = match which {
                SeriesArg::Chi => ("chi", chi_series(d, p, order)?),
                SeriesArg::Dd => ("dd", d_series(d, p, order)?),
            };
            let coeffs: Vec<String> = s.to_integers()?.iter().map(|c| c.to_string()).collect();
            Ok(Payload::json(&json!({
                "indexing": "zero-based",
                "p": p.get(),
                "d": d,
                "order": order,
                "which": name,
                "coefficients": coeffs,
            })))
        }
        Command::Asymptotic { p, d, precision } => {
            let ac = asymptotic_constant(d, p, precision)?;
            let digits = (ac.bits as f64 * std::f64::consts::LOG10_2) as usize - 3;
            let (c, base, pole) = ac.decimals(digits);
            Ok(Payload::json(&json!({
                "p": p.get(),
                "d": d,
                "k": ac.k,
                "period": ac.period,
                "precision_bits": ac.bits,
                "c": c,
                "growth_base": base,
                "smallest_pole": pole,
            })))
        }
        Command::Selftest { level } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let checks = selftest::run(level);
            let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
            let text = pretty(&json!({ "level": level, "checks": checks }));
            Ok(Payload {
                text,
                failure: (!failed.is_empty()).then(|| format!("failed checks: {}", failed.join(", "))),
            })
        }
    }
}

fn dims(p: Prime, m: u64, r: Option<u64>, method: DimMethod, format: DimsFormat) -> Result<Payload, Error> {
    let rs: Vec<u64> = match r {
        Some(r) => vec![r],
        None if format == DimsFormat::Table => (1..=m).collect(),
        None => (0..=m).collect(),
    };
    let mut reports: Vec<(DimensionReport, String)> = Vec::with_capacity(rs.len());
    for &r in &rs {
        let rep = dim_simple(r, m, p, method)?;
        let weyl = weyl_dim(r, m)?.to_string();
        reports.push((rep, weyl));
    }
    let disagree: Vec<String> = reports.iter().filter(|(d, _)| !d.agree).map(|(d, _)| d.r.to_string()).collect();
    let failure = (!disagree.is_empty()).then(|| format!("methods disagree at r = {}", disagree.join(", ")));
    let text = match format {
        DimsFormat::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|(d, w)| {
                    let mut row = serde_json::to_value(d).expect("report serializes");
                    row["dim_simple"] = json!(d.value().to_string());
                    row["dim_weyl"] = json!(w);
                    row
                })
                .collect();
            pretty(&json!({
                "indexing": "zero-based",
                "p": p.get(),
                "m": m,
                "method": method.name(),
                "rows": rows,
            }))
        }
        DimsFormat::Csv => {
            let mut s = String::from("r,dim_simple,dim_weyl,agree\n");
            for (d, w) in &reports {
                writeln!(s, "{},{},{},{}", d.r, d.value(), w, d.agree).expect("write to String");
            }
            s
        }
        DimsFormat::Table => {
            let header: Vec<String> = reports.iter().map(|(d, _)| d.r.to_string()).collect();
            let simple: Vec<String> = reports.iter().map(|(d, _)| d.value().to_string()).collect();
            let weyl: Vec<String> = reports.iter().map(|(_, w)| w.clone()).collect();
            let width = simple.iter().chain(&weyl).map(String::len).max().unwrap_or(1);
            let line = |label: &str, cells: &[String]| {
                let mut s = format!("{label:<11}");
                for c in cells {
                    write!(s, " {c:>width$}").expect("write to String");
                }
                s.push('\n');
                s
            };
            let mut s = format!("# p = {}, m = {m}, method = {}; r is the 1-based label of ω_r\n", p, method.name());
            s += &line("r", &header);
            s += &line("dim L(ω_r)", &simple);
            s += &line("dim Δ(ω_r)", &weyl);
            s
        }
    };
    Ok(Payload { text, failure })
}

fn char_json(p: Prime, m: u64, r: u64, v: &CharacterVector) -> Value {
    json!({
        "p": p.get(),
        "m": m,
        "r": r,
        "basis": v.basis,
        "+": v.positive(),
        "-": v.negative(),
    })
}

fn matrix(
    p: Prime,
    n: usize,
    which: WhichMatrix,
    construction: Construction,
    format: MatrixFormat,
) -> Result<Payload, Error> {
    let build = |kind: MatrixKind| -> Result<IntMatrix, Error> {
        match construction {
            Construction::Direct => Ok(build_direct(n, p, kind)?.matrix),
            Construction::Recursive => {
                let e = prime_power_exponent(n, p)
                    .filter(|&e| e >= 1)
                    .ok_or(Error::BadSize { size: n, p: p.get(), form: "p^k with k ≥ 1" })?;
                Ok(build_recursive(e, p, kind)?.matrix)
            }
        }
    };
    let (name, m) = match which {
        WhichMatrix::A => ("A", build(MatrixKind::A)?),
        WhichMatrix::B => ("B", build(MatrixKind::B)?),
        WhichMatrix::Product => ("product", &build(MatrixKind::A)? * &build(MatrixKind::B)?),
    };
    let failure = match which {
        WhichMatrix::Product => m
            .identity_defect()
            .map(|(i, j, v)| format!("A(n)B(n) has entry {v} at ({}, {})", i + 1, j + 1)),
        _ => None,
    };
    let text = match format {
        MatrixFormat::Csv => m.to_csv(),
        MatrixFormat::Grid => m.to_grid(),
        MatrixFormat::Triplets => {
            let entries: Vec<Value> = m.triplets().into_iter().map(|(i, j, v)| json!([i, j, v])).collect();
            pretty(&json!({
                "indexing": "one-based",
                "p": p.get(),
                "n": n,
                "which": name,
                "entries": entries,
            }))
        }
    };
    Ok(Payload { text, failure })
}

fn simple_weyl(p: Prime, m: u64, census: bool) -> Result<Payload, Error> {
    if census {
        let rep = simplicity_census(m + 1, p)?;
        let failure = (!rep.consistent()).then(|| format!("census of I_{p}({}) is inconsistent", m + 1));
        let text = pretty(&serde_json::to_value(&rep).expect("report serializes"));
        return Ok(Payload { text, failure });
    }
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for r in 1..=m {
        let w = is_simple_weyl(r, m, p)?;
        let (c1, c2) = premet_suprunenko_conditions(r, m, p)?;
        if (c1, c2) != (w.simple, w.simple) {
            bad.push(r.to_string());
        }
        rows.push(json!({
            "r": r,
            "simple": w.simple,
            "f": w.f,
            "r_f": w.r_f,
            "bound": w.bound,
            "valuation_condition": c1,
            "binomial_condition": c2,
        }));
    }
    let failure = (!bad.is_empty()).then(|| format!("criteria disagree at r = {}", bad.join(", ")));
    Ok(Payload { text: pretty(&json!({ "p": p.get(), "m": m, "rows": rows })), failure })
}

fn specht(p: Prime, n: u64, r: Option<u64>) -> Result<Payload, Error> {
    let rs: Vec<u64> = match r {
        Some(r) => vec![r],
        None => (0..=n / 2).collect(),
    };
    let mut rows = Vec::new();
    for r in rs {
        let factors = james_factors(n, r, p)?;
        let (expansion, dim) = match simple_in_specht_basis(n, r, p) {
            Ok(v) => {
                let terms: Vec<Value> = v.iter().map(|(i, c)| json!([i, c])).collect();
                (Value::Array(terms), json!(simple_dim_two_row(n, r, p)?.to_string()))
            }
            Err(Error::NotALabel(..)) => (Value::Null, Value::Null),
            Err(e) => return Err(e),
        };
        rows.push(json!({
            "r": r,
            "partition": [n - r, r],
            "james_factors": factors,
            "dim_specht": specht_dim(n, r).to_string(),
            "simple_in_specht_basis": expansion,
            "dim_simple": dim,
        }));
    }
    Ok(Payload::json(&json!({ "p": p.get(), "n": n, "rows": rows })))
}

fn sl2(p: Prime, r: u64, factors: bool, char: bool, weights: bool) -> Payload {
    let all = !(factors || char || weights);
    let mut out = json!({ "p": p.get(), "r": r });
    let mut failure = None;
    if all || factors {
        out["factors"] = json!(sl2_weyl_factors(r, p));
    }
    let ch = sl2_simple_char(r, p);
    if all || char {
        out["char"] = json!({ "+": ch.plus, "-": ch.minus });
    }
    if all || weights {
        let mults = ch.weight_multiplicities();
        let lucas = lucas_weights(r, p);
        if mults != lucas {
            failure = Some(format!("weights of L({r}ρ) do not follow the Lucas criterion"));
        }
        out["weights"] = json!({
            "indexing": "zero-based",
            "multiplicities": mults,
            "lucas": lucas,
        });
    }
    Payload { text: pretty(&out), failure }
}
