use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cubeforge_core::cfinite::{certify_zero, RationalGF, Verdict};
use cubeforge_core::concoct::{find_form, implicitize, twist_no_solution, ConcoctError, FormTarget};
use cubeforge_core::cubic::WeightedQuadruple;
use cubeforge_core::forge::{certify_theorem, forge, render, CubicTheorem, ForgeError, ForgeOptions, TextFormat};
use cubeforge_core::forge::format_series_poly;
use cubeforge_core::kernel::MultiPoly;
use cubeforge_core::quadform::{certify_orbit, sol_quad, OrbitKind, QuadForm, QuadFormError, SolQuadOptions};
use num_bigint::BigInt;
use serde_json::Value;

use crate::json::{
    form_from_json, form_to_json, int_value, orbit_from_json, orbit_to_json, theorem_from_json, theorem_to_json,
    value_int, FormatError,
};
use crate::parse::{parse_gf, parse_matrix, parse_poly};

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_RESULT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cubeforge", version, about = "Discover and certify C-finite solutions of cubic Diophantine equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DataFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Constant,
    Alternating,
    None,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Produce certified theorems a*A^3 + a*B^3 + b*C^3 = c.
    Forge {
        #[arg(long, allow_negative_numbers = true)]
        a: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        b: BigInt,
        #[arg(long, default_value_t = 12)]
        search_bound: u32,
        #[arg(long, default_value_t = 4)]
        guess_order: usize,
        #[arg(long, default_value_t = 30)]
        target_cap: u64,
        #[arg(long, default_value_t = 10)]
        max_theorems: usize,
        /// Box half-width for the quadratic solver.
        #[arg(long, default_value_t = 2000)]
        pell_bound: u64,
        /// JSON array of extra seed quadruples, e.g. [[9,10,12,1]].
        #[arg(long)]
        seed_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find a Pell-like orbit of a binary quadratic form in m, n.
    Pell {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value_t = 4)]
        guess_order: usize,
        #[arg(long, default_value_t = 2000)]
        bound: u64,
        #[arg(long, default_value_t = 30)]
        target_cap: u64,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
    },
    /// Eliminate m, n from x = P(m,n), y = Q(m,n), z = R(m,n).
    Eliminate {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Substitute (x,y,z) <- M(x,y,z) into a ternary polynomial.
    Twist {
        /// Rows separated by ';', entries by ','.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value = "x^3 + y^3 + z^3", allow_hyphen_values = true)]
        base: String,
    },
    /// Find a homogeneous form constant along C-finite sequences.
    Findform {
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum)]
        target: Target,
        /// Generating function "num;den", ascending coefficients; repeat per sequence.
        #[arg(long = "gf", required = true, allow_hyphen_values = true)]
        gfs: Vec<String>,
        #[arg(long, value_enum, default_value_t = DataFormat::Json)]
        format: DataFormat,
    },
    /// Re-certify a theorem (or orbit, or form) JSON document.
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
}

/// A failure with its exit status; the message goes to the error stream.
struct Failure {
    code: i32,
    message: String,
}

fn input(msg: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INPUT, message: format!("error: {msg}") }
}

fn no_result(msg: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_NO_RESULT, message: format!("no result: {msg}") }
}

fn internal(msg: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INTERNAL, message: format!("internal error: {msg}") }
}

type Outcome = Result<(), Failure>;

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };
    let result = match cli.command {
        Command::Forge { a, b, search_bound, guess_order, target_cap, max_theorems, pell_bound, seed_file, format } => {
            let opts = ForgeOptions { search_bound, guess_order, target_cap, max_theorems, pell_bound, extra_seeds: Vec::new() };
            cmd_forge(&a, &b, opts, seed_file, format, out, err)
        }
        Command::Pell { form, guess_order, bound, target_cap, format } => {
            let opts = SolQuadOptions { guess_order, bound, target_cap, ..SolQuadOptions::default() };
            cmd_pell(&form, &opts, format, out)
        }
        Command::Eliminate { x, y, z } => cmd_eliminate(&x, &y, &z, out),
        Command::Twist { matrix, base } => cmd_twist(&matrix, &base, out),
        Command::Findform { degree, target, gfs, format } => cmd_findform(degree, target, &gfs, format, out),
        Command::Verify { file } => cmd_verify(&file, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes()).map_err(|e| internal(format!("writing output: {e}")))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn read_seeds(path: &PathBuf, a: &BigInt, b: &BigInt) -> Result<Vec<WeightedQuadruple>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let list = match &v {
        Value::Array(l) => l,
        Value::Object(o) => o.get("seeds").and_then(Value::as_array).ok_or_else(|| input("seed file needs a `seeds` array"))?,
        _ => return Err(input("seed file must be an array of quadruples")),
    };
    list.iter()
        .map(|q| {
            let coords: Vec<BigInt> = q
                .as_array()
                .ok_or_else(|| input(format!("seed {q} is not an array")))?
                .iter()
                .map(value_int)
                .collect::<Result<_, FormatError>>()
                .map_err(input)?;
            let coords: [BigInt; 4] = coords.try_into().map_err(|_| input(format!("seed {q} needs four entries")))?;
            WeightedQuadruple::new(a.clone(), b.clone(), coords).map_err(|e| input(format!("seed {q}: {e}")))
        })
        .collect()
}

fn cmd_forge(
    a: &BigInt,
    b: &BigInt,
    mut opts: ForgeOptions,
    seed_file: Option<PathBuf>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    if let Some(path) = seed_file {
        opts.extra_seeds = read_seeds(&path, a, b)?;
    }
    let report = match forge(a, b, &opts) {
        Ok(r) => r,
        Err(ForgeError::EmptySeedSet) => return Err(no_result("EmptySeedSet: no nontrivial seed quadruple within the search bound")),
        Err(e) => return Err(input(e)),
    };
    for thm in &report.theorems {
        match certify_theorem(thm) {
            Ok(c) if c.is_certified() => {}
            _ => return Err(internal("emitted theorem failed re-certification")),
        }
    }
    if report.theorems.is_empty() {
        for d in &report.diagnostics {
            let _ = writeln!(err, "{d}");
        }
        return Err(no_result("NoTheorem: no pipeline branch produced a certified theorem"));
    }
    let text = match format {
        Format::Json => pretty(&Value::Array(report.theorems.iter().map(theorem_to_json).collect())),
        Format::Text | Format::Latex => {
            let style = if matches!(format, Format::Text) { TextFormat::Text } else { TextFormat::Latex };
            report.theorems.iter().map(|t| render(t, style)).collect::<Vec<_>>().join("\n")
        }
    };
    write_out(out, &text)
}

fn cmd_pell(form: &str, opts: &SolQuadOptions, format: DataFormat, out: &mut dyn Write) -> Outcome {
    let poly = parse_poly(form, &["m", "n"]).map_err(input)?;
    let q = QuadForm::from_poly(&poly).map_err(input)?;
    let orbit = match sol_quad(&q, opts) {
        Ok(o) => o,
        Err(e @ (QuadFormError::NoOrbitFound | QuadFormError::DefiniteForm)) => return Err(no_result(e)),
        Err(e) => return Err(input(e)),
    };
    let pairs = orbit.pairs(5);
    let text = match format {
        DataFormat::Json => {
            let mut v = orbit_to_json(&orbit);
            let list: Vec<Value> = pairs.iter().map(|(m, n)| Value::Array(vec![int_value(m), int_value(n)])).collect();
            v.as_object_mut().unwrap().insert("first_pairs".into(), Value::Array(list));
            pretty(&v)
        }
        DataFormat::Text => {
            let rhs = match orbit.kind {
                OrbitKind::Constant => format!("{}", orbit.target),
                OrbitKind::Alternating => format!("{}*(-1)^i", orbit.target),
            };
            let shown: Vec<String> = pairs.iter().map(|(m, n)| format!("({m}, {n})")).collect();
            format!(
                "Q(m, n) = {}\nQ(m_i, n_i) = {}\nm: {}\nn: {}\nfirst pairs: {}\n",
                poly,
                rhs,
                fmt_gf(&orbit.gf_m),
                fmt_gf(&orbit.gf_n),
                shown.join(", ")
            )
        }
    };
    write_out(out, &text)
}

fn fmt_gf(g: &RationalGF) -> String {
    format!("({})/({})", format_series_poly(g.num(), false), format_series_poly(g.den(), false))
}

fn cmd_eliminate(x: &str, y: &str, z: &str, out: &mut dyn Write) -> Outcome {
    let mn = ["m", "n"];
    let p = parse_poly(x, &mn).map_err(|e| input(format!("--x: {e}")))?;
    let q = parse_poly(y, &mn).map_err(|e| input(format!("--y: {e}")))?;
    let r = parse_poly(z, &mn).map_err(|e| input(format!("--z: {e}")))?;
    match implicitize(&p, &q, &r) {
        Ok(s) => write_out(out, &format!("{s}\n")),
        Err(ConcoctError::EliminationCollapse) => Err(no_result(ConcoctError::EliminationCollapse)),
        Err(e) => Err(input(e)),
    }
}

fn cmd_twist(matrix: &str, base: &str, out: &mut dyn Write) -> Outcome {
    let m = parse_matrix(matrix).map_err(|e| input(format!("--matrix: {e}")))?;
    let f = parse_poly(base, &["x", "y", "z"]).map_err(|e| input(format!("--base: {e}")))?;
    let g = twist_no_solution(&f, &m).map_err(input)?;
    write_out(out, &format!("{g}\n"))
}

fn cmd_findform(degree: u32, target: Target, gfs: &[String], format: DataFormat, out: &mut dyn Write) -> Outcome {
    let gfs: Vec<RationalGF> = gfs
        .iter()
        .map(|s| parse_gf(s).map_err(|e| input(format!("--gf {s}: {e}"))))
        .collect::<Result<_, _>>()?;
    let target = match target {
        Target::Constant => FormTarget::Constant,
        Target::Alternating => FormTarget::Alternating,
        Target::None => FormTarget::None,
    };
    let r = match find_form(&gfs, degree, target) {
        Ok(r) => r,
        Err(e @ (ConcoctError::NoForm | ConcoctError::NoTargetedForm(_))) => return Err(no_result(e)),
        Err(ConcoctError::CertificationFailed) => return Err(internal(ConcoctError::CertificationFailed)),
        Err(e) => return Err(input(e)),
    };
    let text = match format {
        DataFormat::Json => pretty(&form_to_json(&r, &gfs)),
        DataFormat::Text => {
            let rhs = match r.target {
                FormTarget::Alternating => format!("{}*(-1)^n", r.c),
                _ => format!("{}", r.c),
            };
            format!("{} = {}\n", r.form, rhs)
        }
    };
    write_out(out, &text)
}

fn verdict_line(bound: usize, verdict: &Verdict) -> (bool, String) {
    match verdict {
        Verdict::Certified => (true, format!("certified, depth {bound}")),
        Verdict::Refuted { witness } => (false, format!("refuted at n = {witness}")),
    }
}

fn verify_theorem(v: &Value) -> Result<(bool, String), Failure> {
    let thm: CubicTheorem = theorem_from_json(v).map_err(input)?;
    let cert = certify_theorem(&thm).map_err(input)?;
    Ok(verdict_line(cert.bound, &cert.verdict))
}

fn verify_document(v: &Value) -> Result<(bool, String), Failure> {
    let obj = v.as_object().ok_or_else(|| input("expected a JSON object or array"))?;
    if obj.contains_key("gfs") && obj.contains_key("rhs_kind") {
        verify_theorem(v)
    } else if obj.contains_key("gf_m") {
        let o = orbit_from_json(v).map_err(input)?;
        let cert = certify_orbit(&o.form, &o.gf_m, &o.gf_n, &o.target, o.kind).map_err(input)?;
        Ok(verdict_line(cert.bound, &cert.verdict))
    } else if obj.contains_key("coeffs") {
        let doc = form_from_json(v).map_err(input)?;
        let vars: Vec<String> = doc.result.form.vars().to_vec();
        if doc.gfs.len() != vars.len() {
            return Err(input("form document needs one generating function per variable"));
        }
        let sign_vars: Vec<String> = vars.iter().cloned().chain(["s".to_owned()]).collect();
        let lifted = doc.result.form.embed(&sign_vars).map_err(input)?;
        let rhs = match doc.result.target {
            FormTarget::Alternating => {
                MultiPoly::var(&sign_vars, "s").unwrap().scale(&doc.result.c)
            }
            _ => MultiPoly::constant(&sign_vars, doc.result.c.clone()),
        };
        let bindings: Vec<(&str, &RationalGF)> = vars.iter().map(String::as_str).zip(&doc.gfs).collect();
        let cert = certify_zero(&(lifted - rhs), &bindings, Some("s")).map_err(input)?;
        Ok(verdict_line(cert.bound, &cert.verdict))
    } else {
        Err(input("unrecognized document: expected a theorem, orbit or form"))
    }
}

fn cmd_verify(file: &PathBuf, out: &mut dyn Write) -> Outcome {
    let text = std::fs::read_to_string(file).map_err(|e| input(format!("{}: {e}", file.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", file.display())))?;
    let docs: Vec<&Value> = match &v {
        Value::Array(items) if items.is_empty() => return Err(input("empty document list")),
        Value::Array(items) => items.iter().collect(),
        other => vec![other],
    };
    let mut all_ok = true;
    let mut lines = String::new();
    for d in docs {
        let (ok, line) = verify_document(d)?;
        all_ok &= ok;
        lines.push_str(&line);
        lines.push('\n');
    }
    write_out(out, &lines)?;
    if all_ok {
        Ok(())
    } else {
        Err(no_result("at least one document was refuted"))
    }
}
