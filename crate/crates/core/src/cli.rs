//! Command-line front end.
//!
//! Every subcommand runs one library operation and prints either a short
//! human-readable report or, with `--json`, one JSON document holding the
//! command, its echoed inputs and the result (or the error).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Map, Number, Value};

use crate::chern::{
    c1_nonneg_check, c2_upper_bound, chern_from_hp, chi12_bound, decompose_p3_rank2, hp_from_chern,
    ChernData, ChernError,
};
use crate::gotzmann::{
    gotzmann_hilbert_values, gotzmann_number, gotzmann_rep, GotzmannError, GotzmannRep,
};
use crate::macaulay::{macaulay_rep, macaulay_transform, MacaulayError};
use crate::monomial::{
    check_gotzmann_regularity, hf_enumerate, hilbert_polynomial, lexify, MonomialError,
    MonomialModule,
};
use crate::polyint::{PolyError, Rational, RationalPoly};
use crate::quotdim::{
    balanced_exponents, expected_dim, gotzmann_number_p1, grassmannian_pair, hom_mod_aut_dim,
    min_aut_dim, quot_embedding, QuotError, SplittingType,
};

/// Representations longer than this are reported by their runs only.
const EXPLICIT_REP_LIMIT: usize = 4096;

#[derive(Debug, Parser)]
#[command(name = "gotzmann", version, about = "Exact Gotzmann/Macaulay calculus")]
pub struct Cli {
    /// Emit one JSON document instead of a text report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Macaulay representations of integers.
    #[command(subcommand)]
    Macaulay(MacaulayCmd),
    /// Gotzmann representations of Hilbert polynomials.
    #[command(subcommand)]
    Gotzmann(GotzmannCmd),
    /// Hilbert polynomial or function of a monomial quotient module.
    Hilbert(HilbertArgs),
    /// Componentwise lexsegment module with the same Hilbert function.
    Lexify { module: PathBuf },
    /// Compare the saturated-lex regularity of a module with its Gotzmann number.
    Regcheck { module: PathBuf },
    /// Quot scheme dimension counts.
    #[command(subcommand)]
    Quot(QuotCmd),
    /// Chern classes of rank-2 sheaves on P3.
    #[command(subcommand)]
    Chern(ChernCmd),
}

#[derive(Debug, Subcommand)]
pub enum MacaulayCmd {
    /// The D-th Macaulay representation of A.
    Rep { a: u64, d: i64 },
    /// A^<D>.
    Transform { a: u64, d: i64 },
}

#[derive(Debug, Subcommand)]
pub enum GotzmannCmd {
    /// Gotzmann representation of POLY (constant-first coefficients, e.g. "2,3").
    Rep {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Gotzmann number of POLY.
    Number {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Hilbert function built from the truncated representation.
    Hf {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        upto: u64,
    },
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    pub module: PathBuf,
    /// Print the Hilbert polynomial (default).
    #[arg(long, conflicts_with = "function")]
    pub polynomial: bool,
    /// Print H(d) for D0 <= d <= D1.
    #[arg(long, num_args = 2, value_names = ["D0", "D1"], allow_hyphen_values = true)]
    pub function: Option<Vec<i64>>,
}

#[derive(Debug, Subcommand)]
pub enum QuotCmd {
    /// Quotients of O^r on P1 with P(d) = K(d+1) + M.
    P1 {
        k: u64,
        m: u64,
        #[arg(long)]
        rank: Option<u64>,
    },
    /// Grassmannian embedding of Quot_P(O^R) on P^N.
    Embed {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        n: u32,
        r: u64,
        /// Use degree E instead of the Gotzmann number.
        #[arg(long)]
        level: Option<u64>,
    },
    /// Minimal automorphism dimension over splitting types.
    Lemma { m_count: u64, n_sum: u64 },
}

#[derive(Debug, Subcommand)]
pub enum ChernCmd {
    /// Chern classes and bounds from a rank-2 Hilbert polynomial on P3.
    FromHp {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Hilbert polynomial from Chern classes.
    #[command(allow_negative_numbers = true)]
    ToHp { c1: i64, c2: i64, c3: i64 },
    /// The c2 bounds for a given c1.
    #[command(allow_negative_numbers = true)]
    Bounds { c1: i64 },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
    #[error(transparent)]
    Gotzmann(#[from] GotzmannError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Quot(#[from] QuotError),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Poly(PolyError::Parse { .. }) => "ParseError",
            CliError::Poly(PolyError::DuplicateAbscissa(_)) => "DuplicateAbscissa",
            CliError::Macaulay(MacaulayError::InvalidIndex(_)) => "InvalidIndex",
            CliError::Macaulay(MacaulayError::Overflow) => "Overflow",
            CliError::Macaulay(MacaulayError::VacuousRange) => "VacuousRange",
            CliError::Gotzmann(e) => e.kind(),
            CliError::Monomial(MonomialError::Gotzmann(e)) => e.kind(),
            CliError::Monomial(e) => match e {
                MonomialError::VariableCount { .. } => "VariableCount",
                MonomialError::NoVariables => "NoVariables",
                MonomialError::PositiveTwist(_) => "PositiveTwist",
                MonomialError::Parse { .. } => "ParseError",
                MonomialError::TooManyGenerators { .. } => "TooManyGenerators",
                MonomialError::NotStronglyStable => "NotStronglyStable",
                MonomialError::Precondition(_) => "Precondition",
                MonomialError::PersistenceCounterexample { .. } => "PersistenceCounterexample",
                MonomialError::Overflow | MonomialError::Macaulay(MacaulayError::Overflow) => {
                    "Overflow"
                }
                MonomialError::Macaulay(_) => "MacaulayError",
                MonomialError::Gotzmann(_) => unreachable!(),
            },
            CliError::Quot(e) => e.kind(),
            CliError::Chern(e) => e.kind(),
            CliError::Io { .. } => "Io",
        }
    }
}

struct Report {
    command: &'static str,
    input: Value,
    outcome: Result<Value, CliError>,
}

fn big(n: &BigUint) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal digits"))
}

fn rational(q: &Rational) -> Value {
    if q.is_integer() {
        Value::Number(Number::from_str(&q.to_integer().to_string()).expect("decimal digits"))
    } else {
        Value::String(q.to_string())
    }
}

fn poly_value(p: &RationalPoly) -> Value {
    json!({ "coeffs": p.to_string(), "pretty": p.pretty() })
}

fn parse_poly(s: &str) -> Result<RationalPoly, CliError> {
    Ok(s.parse()?)
}

fn read_module(path: &Path) -> Result<MonomialModule, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(MonomialModule::from_json(&text)?)
}

fn rep_value(rep: &GotzmannRep) -> Value {
    let runs: Vec<Value> = rep
        .runs()
        .iter()
        .map(|r| json!([r.value, big(&r.count)]))
        .collect();
    let explicit = rep
        .to_vec()
        .filter(|v| v.len() <= EXPLICIT_REP_LIMIT)
        .map_or(Value::Null, |v| json!(v));
    json!({ "number": big(&rep.len()), "runs": runs, "rep": explicit })
}

fn macaulay_cmd(cmd: &MacaulayCmd) -> Report {
    match *cmd {
        MacaulayCmd::Rep { a, d } => Report {
            command: "macaulay rep",
            input: json!({ "a": a, "d": d }),
            outcome: macaulay_rep(a, d).map_err(Into::into).map(|r| {
                let terms: Vec<Value> = r.terms().map(|(k, j)| json!([k, j])).collect();
                json!({ "terms": terms })
            }),
        },
        MacaulayCmd::Transform { a, d } => Report {
            command: "macaulay transform",
            input: json!({ "a": a, "d": d }),
            outcome: macaulay_transform(a, d)
                .map_err(Into::into)
                .map(|v| json!({ "value": v })),
        },
    }
}

fn gotzmann_cmd(cmd: &GotzmannCmd) -> Report {
    match cmd {
        GotzmannCmd::Rep { poly } => Report {
            command: "gotzmann rep",
            input: json!({ "poly": poly }),
            outcome: (|| {
                let rep = gotzmann_rep(&parse_poly(poly)?)?;
                Ok(rep_value(&rep))
            })(),
        },
        GotzmannCmd::Number { poly } => Report {
            command: "gotzmann number",
            input: json!({ "poly": poly }),
            outcome: (|| Ok(json!({ "number": big(&gotzmann_number(&parse_poly(poly)?)?) })))(),
        },
        GotzmannCmd::Hf { poly, upto } => Report {
            command: "gotzmann hf",
            input: json!({ "poly": poly, "upto": upto }),
            outcome: (|| {
                let rep = gotzmann_rep(&parse_poly(poly)?)?;
                Ok(json!({ "values": gotzmann_hilbert_values(&rep, *upto)? }))
            })(),
        },
    }
}

fn hilbert_cmd(args: &HilbertArgs) -> Report {
    let path = args.module.display().to_string();
    match &args.function {
        Some(range) => {
            let (d0, d1) = (range[0], range[1]);
            Report {
                command: "hilbert function",
                input: json!({ "module": path, "from": d0, "to": d1 }),
                outcome: read_module(&args.module).map(|m| {
                    let values: Vec<u64> = (d0..=d1).map(|d| hf_enumerate(&m, d)).collect();
                    json!({ "values": values })
                }),
            }
        }
        None => Report {
            command: "hilbert polynomial",
            input: json!({ "module": path }),
            outcome: (|| {
                Ok(
                    json!({ "polynomial": poly_value(&hilbert_polynomial(&read_module(&args.module)?)?) }),
                )
            })(),
        },
    }
}

fn module_cmd(command: &'static str, path: &Path) -> Report {
    let input = json!({ "module": path.display().to_string() });
    let outcome = (|| {
        let m = read_module(path)?;
        match command {
            "lexify" => Ok(
                json!({ "module": serde_json::to_value(lexify(&m)?.to_doc()).expect("serializable") }),
            ),
            _ => {
                let r = check_gotzmann_regularity(&m)?;
                Ok(json!({ "s": big(&r.s), "reg_proxy": r.reg_proxy, "ok": r.ok }))
            }
        }
    })();
    Report {
        command,
        input,
        outcome,
    }
}

fn quot_cmd(cmd: &QuotCmd) -> Report {
    match *cmd {
        QuotCmd::P1 { k, m, rank } => Report {
            command: "quot p1",
            input: json!({ "k": k, "m": m, "rank": rank }),
            outcome: (|| {
                let s = gotzmann_number_p1(k, m)?;
                let poly = RationalPoly::from_ints(&[(k + m) as i64, k as i64]);
                let mut out = Map::new();
                out.insert("polynomial".into(), poly_value(&poly));
                out.insert("s".into(), json!(s));
                if let Some(r) = rank {
                    let e = quot_embedding(&poly, 1, r)?;
                    let dim = expected_dim(r as i64, k as i64, m as i64)?;
                    let aut = min_aut_dim(r - k, m)?;
                    let balanced = SplittingType::from_exponents(&balanced_exponents(r - k, m));
                    out.insert(
                        "embedding".into(),
                        serde_json::to_value(e).expect("serializable"),
                    );
                    out.insert("expected_dim".into(), json!(dim));
                    out.insert("balanced_splitting".into(), json!(balanced.twists()));
                    out.insert(
                        "hom_mod_aut_dim".into(),
                        json!(hom_mod_aut_dim(&balanced, r)),
                    );
                    out.insert("min_aut_dim".into(), json!(aut.min));
                }
                Ok(Value::Object(out))
            })(),
        },
        QuotCmd::Embed {
            ref poly,
            n,
            r,
            level,
        } => Report {
            command: "quot embed",
            input: json!({ "poly": poly, "n": n, "r": r, "level": level }),
            outcome: (|| {
                let p = parse_poly(poly)?;
                match level {
                    None => {
                        Ok(serde_json::to_value(quot_embedding(&p, n, r)?).expect("serializable"))
                    }
                    Some(e) => {
                        let (g0, g1) = grassmannian_pair(&p, n, r, e)?;
                        Ok(json!({ "level": e, "ambient": g0, "next": g1 }))
                    }
                }
            })(),
        },
        QuotCmd::Lemma { m_count, n_sum } => Report {
            command: "quot lemma",
            input: json!({ "m_count": m_count, "n_sum": n_sum }),
            outcome: min_aut_dim(m_count, n_sum)
                .map(|r| serde_json::to_value(r).expect("serializable"))
                .map_err(Into::into),
        },
    }
}

fn bounds_value(c1: i64, c2: Option<i64>) -> Value {
    let upper = c2_upper_bound(c1).ok();
    let chi12 = chi12_bound(c1).ok();
    let mut out = Map::new();
    out.insert("c2_upper_bound".into(), json!(upper));
    out.insert(
        "chi12_bound".into(),
        chi12.as_ref().map_or(Value::Null, rational),
    );
    if let Some(c2) = c2 {
        out.insert("bound_ok".into(), json!(upper.map(|u| c2 <= u)));
        out.insert(
            "chi12_ok".into(),
            json!(chi12.map(|b| Rational::from_integer(c2.into()) <= b)),
        );
    }
    Value::Object(out)
}

fn chern_cmd(cmd: &ChernCmd) -> Report {
    match *cmd {
        ChernCmd::FromHp { ref poly } => Report {
            command: "chern from-hp",
            input: json!({ "poly": poly }),
            outcome: (|| {
                let p = parse_poly(poly)?;
                let c = chern_from_hp(&p)?;
                let d = decompose_p3_rank2(&p)?;
                let c1_check = c1_nonneg_check(&p, 2, 3)?;
                let Value::Object(mut out) = bounds_value(c.c1, Some(c.c2)) else {
                    unreachable!()
                };
                out.insert("c1".into(), json!(c.c1));
                out.insert("c2".into(), json!(c.c2));
                out.insert("c3".into(), json!(c.c3));
                out.insert("c1_nonneg".into(), json!(c1_check.ok));
                out.insert("linear_coeff".into(), json!(d.linear_coeff));
                out.insert("constant_residual".into(), rational(&d.constant_residual));
                Ok(Value::Object(out))
            })(),
        },
        ChernCmd::ToHp { c1, c2, c3 } => Report {
            command: "chern to-hp",
            input: json!({ "c1": c1, "c2": c2, "c3": c3 }),
            outcome: Ok(
                json!({ "polynomial": poly_value(&hp_from_chern(ChernData::new(c1, c2, c3))) }),
            ),
        },
        ChernCmd::Bounds { c1 } => Report {
            command: "chern bounds",
            input: json!({ "c1": c1 }),
            outcome: Ok(bounds_value(c1, None)),
        },
    }
}

fn dispatch(command: &Command) -> Report {
    match command {
        Command::Macaulay(c) => macaulay_cmd(c),
        Command::Gotzmann(c) => gotzmann_cmd(c),
        Command::Hilbert(a) => hilbert_cmd(a),
        Command::Lexify { module } => module_cmd("lexify", module),
        Command::Regcheck { module } => module_cmd("regcheck", module),
        Command::Quot(c) => quot_cmd(c),
        Command::Chern(c) => chern_cmd(c),
    }
}

fn text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Object(o) if o.contains_key("pretty") => text(&o["pretty"]),
        other => other.to_string(),
    }
}

fn write_human(out: &mut dyn Write, result: &Value) -> std::io::Result<()> {
    match result {
        Value::Object(fields) => {
            for (key, value) in fields {
                writeln!(out, "{key}: {}", text(value))?;
            }
            Ok(())
        }
        other => writeln!(out, "{}", text(other)),
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status: 0 on success, 1 on a library error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let report = dispatch(&cli.command);
    let status = match &report.outcome {
        Ok(_) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.kind());
            1
        }
    };
    let written = if cli.json {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(report.command));
        doc.insert("input".into(), report.input);
        match report.outcome {
            Ok(result) => doc.insert("result".into(), result),
            Err(e) => doc.insert(
                "error".into(),
                json!({ "kind": e.kind(), "message": e.to_string() }),
            ),
        };
        let text = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
        writeln!(out, "{text}")
    } else {
        match &report.outcome {
            Ok(result) => write_human(out, result),
            Err(_) => Ok(()),
        }
    };
    if written.is_err() {
        return 1;
    }
    status
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gotzmann").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn invoke_json(args: &[&str]) -> (i32, Value) {
        let mut all = vec!["--json"];
        all.extend_from_slice(args);
        let (code, out, _) = invoke(&all);
        (code, serde_json::from_str(&out).unwrap())
    }

    #[test]
    fn macaulay_commands() {
        let (code, v) = invoke_json(&["macaulay", "rep", "11", "3"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["terms"], json!([[5, 3], [2, 2]]));
        let (_, v) = invoke_json(&["macaulay", "transform", "11", "3"]);
        assert_eq!(v["result"]["value"], json!(16));
        let (code, v) = invoke_json(&["macaulay", "transform", "11", "0"]);
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], "InvalidIndex");
    }

    #[test]
    fn gotzmann_commands() {
        let (code, out, _) = invoke(&["gotzmann", "number", "2,3"]);
        assert_eq!((code, out.as_str()), (0, "number: 5\n"));
        let (_, v) = invoke_json(&["gotzmann", "rep", "2,3"]);
        assert_eq!(v["result"]["rep"], json!([1, 1, 1, 0, 0]));
        assert_eq!(v["result"]["runs"], json!([[1, 3], [0, 2]]));
        let (_, v) = invoke_json(&["gotzmann", "hf", "2,3", "--upto", "6"]);
        assert_eq!(v["result"]["values"], json!([1, 3, 6, 10, 14, 17, 20]));
        let (code, _, err) = invoke(&["gotzmann", "rep", "0,1"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: NoGotzmannRepresentation"));
        let (code, _, err) = invoke(&["gotzmann", "rep", "-1,1/2"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: NotIntegerValued"), "{err}");
        let (code, _, err) = invoke(&["gotzmann", "rep", "x"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: ParseError"));
    }

    #[test]
    fn huge_numbers_are_exact() {
        // binom(d + 11, 10)
        let p = crate::polyint::binom_poly(11, 10).to_string();
        let (code, out, _) = invoke(&["--json", "gotzmann", "number", &p]);
        assert_eq!(code, 0);
        let expected = gotzmann_number(&p.parse().unwrap()).unwrap().to_string();
        assert!(out.contains(&format!("\"number\": {expected}")));
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", out);
    }

    #[test]
    fn quot_commands() {
        let (_, v) = invoke_json(&["quot", "embed", "2,2", "1", "3"]);
        assert_eq!(
            v["result"],
            json!({ "s": 3, "ambient_s": { "dim": 12, "codim": 8 }, "ambient_s1": { "dim": 15, "codim": 10 } })
        );
        let (_, v) = invoke_json(&["quot", "embed", "2,2", "1", "3", "--level", "0"]);
        assert_eq!(v["result"]["ambient"], json!({ "dim": 3, "codim": 2 }));
        assert_eq!(v["result"]["next"]["codim"], json!(4));
        let (_, v) = invoke_json(&["quot", "p1", "2", "0", "--rank", "3"]);
        assert_eq!(v["result"]["s"], json!(3));
        assert_eq!(v["result"]["expected_dim"], json!(2));
        assert_eq!(v["result"]["hom_mod_aut_dim"], json!(2));
        let (_, v) = invoke_json(&["quot", "lemma", "2", "3"]);
        assert_eq!(
            v["result"],
            json!({ "min": 4, "argmin": [0, 1, 1], "unique": true })
        );
    }

    #[test]
    fn chern_commands() {
        let (_, v) = invoke_json(&["chern", "from-hp", "4,11/3,4,1/3"]);
        let r = &v["result"];
        assert_eq!(
            (&r["c1"], &r["c2"], &r["c3"]),
            (&json!(4), &json!(16), &json!(64))
        );
        assert_eq!(r["bound_ok"], json!(true));
        assert_eq!(r["chi12_ok"], json!(false));
        assert_eq!(r["chi12_bound"], json!("33/4"));
        let (_, v) = invoke_json(&["chern", "to-hp", "4", "16", "64"]);
        assert_eq!(v["result"]["polynomial"]["coeffs"], json!("4,11/3,4,1/3"));
        let (_, v) = invoke_json(&["chern", "to-hp", "-1", "0", "0"]);
        assert_eq!(v["input"]["c1"], json!(-1));
        let (_, v) = invoke_json(&["chern", "bounds", "3"]);
        assert_eq!(
            v["result"],
            json!({ "c2_upper_bound": 20, "chi12_bound": null })
        );
        let (code, v) = invoke_json(&["chern", "from-hp", "0,0,0,1"]);
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], "WrongShape");
    }

    #[test]
    fn module_commands() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        std::fs::write(
            &path,
            r#"{"vars": 3, "components": [{"twist": 0, "gens": ["x1^2", "x2^2"]}]}"#,
        )
        .unwrap();
        let file = path.to_str().unwrap();
        let (_, v) = invoke_json(&["hilbert", file]);
        assert_eq!(v["result"]["polynomial"]["coeffs"], json!("4"));
        let (_, v) = invoke_json(&["hilbert", file, "--function", "0", "3"]);
        assert_eq!(v["result"]["values"], json!([1, 3, 4, 4]));
        let (code, v) = invoke_json(&["lexify", file]);
        assert_eq!(code, 0);
        let lex = MonomialModule::from_json(&v["result"]["module"].to_string()).unwrap();
        assert_eq!(hf_enumerate(&lex, 5), 4);
        let (_, v) = invoke_json(&["regcheck", file]);
        assert_eq!(v["result"]["ok"], json!(true));
        let (code, _, err) = invoke(&["regcheck", "/nonexistent/m.json"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: Io"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(invoke(&[]).0, 2);
        assert_eq!(invoke(&["macaulay", "rep", "x", "3"]).0, 2);
        assert_eq!(invoke(&["frobnicate"]).0, 2);
        assert_eq!(invoke(&["--help"]).0, 0);
    }
}
