//! Command-line front end. All state comes from flags; output for fixed
//! arguments is byte-identical unless `--timings` is given.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie_modules::Family;
use crate::partition::Partition;
use crate::plethysm::{pleth_series, Series};
use crate::symfunc::{e_of, h_of, s_of, to_schur, SymFunc};
use crate::verify::{
    catalog, lifting_check, scan_positivity, verify, Params, PositivityReport, ScanFamily,
    DEFAULT_BUDGET,
};

#[derive(Parser, Debug)]
#[command(
    name = "higher-lie",
    version,
    about = "Exact symmetric functions, plethysm and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand the degree-n member of a family.
    Expand(ExpandArgs),
    /// Shorthand for `expand --basis schur`.
    Schur(ExpandArgs),
    /// Evaluate outer[inner] for a family series inner.
    Pleth(PlethArgs),
    /// Check a catalog identity.
    Verify(VerifyArgs),
    /// Scan a family for Schur positivity.
    Scan(ScanArgs),
    /// Scan p_1 Lie^(q)_{n-1} - Lie^(q)_n for positivity.
    Lift(LiftArgs),
    /// List the identity catalog.
    List(ListArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    P,
    Schur,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Default)]
struct ParamArgs {
    /// Prime set, e.g. "2,3" or "bar:2".
    #[arg(long = "S")]
    s: Option<String>,
    /// Integer set: "1,3", "all", "le(k)", "div(k)", "mod1(k)", "pow(k)".
    #[arg(long = "T")]
    t: Option<String>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    /// ψ descriptor: mu, phi, prime_set(2), set_T(1,3), foulkes(r).
    #[arg(long)]
    psi: Option<String>,
}

impl ParamArgs {
    fn to_params(&self) -> Result<Params> {
        let mut p = Params::default();
        if let Some(s) = &self.s {
            p.set("S", s)?;
        }
        if let Some(t) = &self.t {
            p.set("T", t)?;
        }
        p.q = self.q;
        p.k = self.k;
        p.r = self.r;
        if let Some(psi) = &self.psi {
            p.set("psi", psi)?;
        }
        Ok(p)
    }
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "p")]
    basis: Basis,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Debug)]
struct PlethArgs {
    /// Outer function: h<r>, e<r>, p<k>, s[λ], H, E, or a family name.
    #[arg(long)]
    outer: String,
    /// Inner family.
    #[arg(long)]
    family: String,
    #[arg(long = "max-degree")]
    max_degree: usize,
    /// Print only this degree.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "p")]
    basis: Basis,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    id: String,
    #[arg(long = "max-degree")]
    max_degree: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Include wall-clock times (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    family: String,
    /// Single degree.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    n: Option<usize>,
    #[arg(long = "n-min")]
    n_min: Option<usize>,
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Debug)]
struct LiftArgs {
    #[arg(long)]
    q: u64,
    #[arg(long = "n-max", default_value_t = 18)]
    n_max: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Parallel width; defaults to the number of CPUs.
    #[arg(long)]
    jobs: Option<usize>,
    /// Exit with status 1 on any negative verdict.
    #[arg(long = "expect-positive")]
    expect_positive: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct ListArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Runs the command line `args` (including the program name). Returns the
/// process exit code: 0 success, 1 failed check, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Expand(a) => expand(a, out),
        Command::Schur(mut a) => {
            a.basis = Basis::Schur;
            expand(a, out)
        }
        Command::Pleth(a) => pleth(a, out),
        Command::Verify(a) => run_verify(a, out),
        Command::Scan(a) => run_scan(a, out),
        Command::Lift(a) => run_lift(a, out),
        Command::List(a) => list(a, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::InvalidParams(format!("cannot write output: {e}")))
}

/// Resolves a family name, taking `r`, `S` or `T` from flags when the name
/// does not carry them.
fn resolve_family(name: &str, params: &ParamArgs) -> Result<Family> {
    let with = |suffix: Option<&String>| match suffix {
        Some(v) => format!("{name}:{v}"),
        None => name.to_string(),
    };
    let descriptor = match name {
        "foulkes" => with(params.r.map(|r| r.to_string()).as_ref()),
        "lieS" | "lieSbar" => with(params.s.as_ref()),
        "fT" | "gT" => with(params.t.as_ref()),
        _ => name.to_string(),
    };
    descriptor.parse()
}

fn symfunc_text(f: &SymFunc, basis: Basis) -> String {
    match basis {
        Basis::P => f.to_string(),
        Basis::Schur => to_schur(f).to_string(),
    }
}

fn symfunc_json(f: &SymFunc, basis: Basis) -> serde_json::Value {
    let json = match basis {
        Basis::P => f.to_json(),
        Basis::Schur => to_schur(f).to_json(),
    };
    serde_json::to_value(json).expect("serialisable")
}

fn expand(a: ExpandArgs, out: &mut dyn Write) -> Result<i32> {
    if a.n == 0 {
        return Err(Error::NonPositive(0));
    }
    if a.n > DEFAULT_BUDGET {
        return Err(Error::Budget {
            requested: a.n,
            budget: DEFAULT_BUDGET,
        });
    }
    let family = resolve_family(&a.family, &a.params)?;
    let f = family.component(a.n);
    match a.format {
        Format::Text => emit(out, &format!("{}\n", symfunc_text(&f, a.basis)))?,
        Format::Json => {
            #[derive(Serialize)]
            struct Expansion {
                family: String,
                n: usize,
                value: serde_json::Value,
            }
            let e = Expansion {
                family: family.to_string(),
                n: a.n,
                value: symfunc_json(&f, a.basis),
            };
            emit(
                out,
                &format!("{}\n", serde_json::to_string(&e).expect("serialisable")),
            )?;
        }
    }
    Ok(0)
}

fn parse_outer(spec: &str, params: &ParamArgs, n: usize) -> Result<Series> {
    let bad = || Error::InvalidParams(format!("unknown outer function '{spec}'"));
    let index = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
    let one = |f: SymFunc| Series::from_symfunc(&f, n);
    if spec == "H" {
        return Ok(Series::from_fn(n, h_of).with_constant(num::One::one()));
    }
    if spec == "E" {
        return Ok(Series::from_fn(n, e_of).with_constant(num::One::one()));
    }
    if spec.starts_with("s[") {
        let lambda: Partition = spec[1..].parse()?;
        return Ok(one(s_of(&lambda)));
    }
    if let Some(rest) = spec
        .strip_prefix('h')
        .filter(|r| r.chars().all(|c| c.is_ascii_digit()) && !r.is_empty())
    {
        return Ok(one(h_of(index(rest)?)));
    }
    if let Some(rest) = spec
        .strip_prefix('e')
        .filter(|r| r.chars().all(|c| c.is_ascii_digit()) && !r.is_empty())
    {
        return Ok(one(e_of(index(rest)?)));
    }
    if let Some(rest) = spec
        .strip_prefix('p')
        .filter(|r| r.chars().all(|c| c.is_ascii_digit()) && !r.is_empty())
    {
        let k = index(rest)?;
        if k == 0 {
            return Err(bad());
        }
        return Ok(one(SymFunc::p(Partition::new(vec![k as u32]))));
    }
    Ok(resolve_family(spec, params)?.series(n))
}

fn pleth(a: PlethArgs, out: &mut dyn Write) -> Result<i32> {
    let n = a.max_degree;
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    if n > DEFAULT_BUDGET {
        return Err(Error::Budget {
            requested: n,
            budget: DEFAULT_BUDGET,
        });
    }
    let outer = parse_outer(&a.outer, &a.params, n)?;
    let inner = resolve_family(&a.family, &a.params)?.series(n);
    let result = pleth_series(&outer, &inner)?;
    let degrees: Vec<usize> = match a.n {
        Some(d) if d > n => {
            return Err(Error::Truncation { have: n, need: d });
        }
        Some(d) => vec![d],
        None => (0..=n).collect(),
    };
    match a.format {
        Format::Text => {
            let mut text = String::new();
            for d in degrees {
                text.push_str(&format!(
                    "deg {d}: {}\n",
                    symfunc_text(&result.component(d), a.basis)
                ));
            }
            emit(out, &text)?;
        }
        Format::Json => {
            let comps: Vec<serde_json::Value> = degrees
                .into_iter()
                .map(|d| {
                    serde_json::json!({"degree": d, "value": symfunc_json(&result.component(d), a.basis)})
                })
                .collect();
            let doc = serde_json::json!({"outer": a.outer, "inner": a.family, "N": n, "components": comps});
            emit(out, &format!("{doc}\n"))?;
        }
    }
    Ok(0)
}

fn run_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut params = a.params.to_params()?;
    params.n = a.n;
    params.n_max = a.n_max;
    let mut report = verify(&a.id, &params, a.max_degree)?;
    if !a.timings {
        report.elapsed_ms = None;
    }
    match a.format {
        Format::Text => emit(out, &report.to_text())?,
        Format::Json => emit(out, &format!("{}\n", report.to_json()))?,
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn with_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidParams("--jobs must be at least 1".into())),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::InvalidParams(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn finish_scan(mut report: PositivityReport, run: &RunArgs, out: &mut dyn Write) -> Result<i32> {
    if !run.timings {
        report.strip_timings();
    }
    match run.format {
        Format::Text => emit(out, &report.to_text())?,
        Format::Json => emit(out, &format!("{}\n", report.to_json()))?,
    }
    Ok(if run.expect_positive && !report.all_positive() {
        1
    } else {
        0
    })
}

fn run_scan(a: ScanArgs, out: &mut dyn Write) -> Result<i32> {
    let params = a.params.to_params()?;
    let family = match ScanFamily::parse(&a.family, &params) {
        Ok(f) => f,
        Err(Error::UnknownFamily(_)) => ScanFamily::Named(resolve_family(&a.family, &a.params)?),
        Err(e) => return Err(e),
    };
    let (lo, hi) = match (a.n, a.n_min, a.n_max) {
        (Some(n), _, _) => (n, n),
        (None, lo, Some(hi)) => (lo.unwrap_or(1), hi),
        _ => return Err(Error::InvalidParams("give --n or --n-max".into())),
    };
    let report = with_pool(a.run.jobs, || scan_positivity(&family, lo, hi, a.budget))??;
    finish_scan(report, &a.run, out)
}

fn run_lift(a: LiftArgs, out: &mut dyn Write) -> Result<i32> {
    let report = with_pool(a.run.jobs, || lifting_check(a.q, a.n_max, a.budget))??;
    finish_scan(report, &a.run, out)
}

fn list(a: ListArgs, out: &mut dyn Write) -> Result<i32> {
    match a.format {
        Format::Text => {
            let mut text = String::new();
            for def in catalog() {
                let params: Vec<String> = def
                    .params
                    .iter()
                    .map(|p| match p.default {
                        Some(d) => format!("{}={d}", p.name),
                        None => format!("[{}]", p.name),
                    })
                    .collect();
                text.push_str(&format!(
                    "{:<16} N={:<3} {:<18} {}\n",
                    def.id,
                    def.default_n,
                    params.join(" "),
                    def.statement
                ));
            }
            emit(out, &text)?;
        }
        Format::Json => {
            let entries: Vec<serde_json::Value> = catalog()
                .iter()
                .map(|def| {
                    let params: Vec<serde_json::Value> = def
                        .params
                        .iter()
                        .map(|p| serde_json::json!({"name": p.name, "default": p.default}))
                        .collect();
                    serde_json::json!({
                        "id": def.id,
                        "params": params,
                        "default_N": def.default_n,
                        "statement": def.statement,
                    })
                })
                .collect();
            emit(out, &format!("{}\n", serde_json::Value::Array(entries)))?;
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["higher-lie"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn expand_lie_four_in_schur() {
        let (code, out, _) = call(&[
            "expand", "--family", "lie", "--n", "4", "--basis", "schur", "--format", "text",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "s[3,1] + s[2,1,1]\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["expand", "--family", "nope", "--n", "3"]).0, 2);
        assert_eq!(
            call(&["scan", "--family", "fT", "--T", "le(", "--n", "3"]).0,
            2
        );
        assert_eq!(
            call(&["scan", "--family", "powk", "--k", "3", "--n", "40"]).0,
            2
        );
        assert_eq!(call(&["frobnicate"]).0, 2);
    }
}
