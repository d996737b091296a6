//! The `m0n` command line: argument parsing, dispatch and exit codes.
//!
//! Everything is routed through [`run`], which writes to caller-supplied
//! streams so the binary and the tests share one code path.

pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use m0n_core::algebra::Poly;
use m0n_core::basis::to_projective_basis;
use m0n_core::fgl::{additive_law, derive_bundle, log_series, multiplicative_law, universal_law, FormalGroupLaw};
use m0n_core::geom::{
    blowup_point_class, milnor_class, projective_bundle_over_pm, projective_space_class, specializations,
    three_root_series,
};
use m0n_core::moduli::{
    build_tables, cache_summary, generating_function, ktheory_twisted_closed_form, ktheory_twisted_recursion,
    load_cache, parse_exponents, save_cache, shared_engine, IntersectionKey, IntersectionTable, Theory,
};
use m0n_core::verify::{run_criterion, Check, CRITERIA};
use m0n_core::Error;

use render::{Format, Rendered};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "m0n", version, about = "Cobordism-valued psi-class intersections on M0,n")]
struct Cli {
    /// Persistent intersection cache (JSON). Entries are recomputed before use.
    #[arg(long, global = true, env = "M0N_CACHE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integrate a psi monomial over M0,n.
    Intersect(IntersectArgs),
    /// The class of M0,n or of an explicit variety.
    Class(ClassArgs),
    /// Every non-vanishing intersection up to a given n, one table per |d|.
    Tables(TablesArgs),
    /// Print one of the formal group law series.
    Series(SeriesArgs),
    /// Run the self-check suite.
    Verify(VerifyArgs),
    /// Summarize the cache file.
    CacheInfo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoryArg {
    Universal,
    Chow,
    Ktheory,
    KtheoryTwisted,
}

impl TheoryArg {
    fn name(self) -> &'static str {
        match self {
            TheoryArg::Universal => "universal",
            TheoryArg::Chow => "chow",
            TheoryArg::Ktheory => "ktheory",
            TheoryArg::KtheoryTwisted => "ktheory-twisted",
        }
    }

    /// The engine theory; the twisted variant runs on its own recursion.
    fn theory(self) -> Option<Theory> {
        match self {
            TheoryArg::Universal => Some(Theory::Universal),
            TheoryArg::Chow => Some(Theory::Chow),
            TheoryArg::Ktheory => Some(Theory::KTheory),
            TheoryArg::KtheoryTwisted => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    U,
    P,
}

#[derive(Args, Debug)]
struct IntersectArgs {
    /// Number of markings.
    #[arg(long)]
    n: u32,
    /// Exponents of psi_1, psi_2, ...; missing entries are zero.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    d: String,
    #[arg(long, value_enum, default_value = "universal")]
    theory: TheoryArg,
    #[arg(long, value_enum, default_value = "u")]
    basis: BasisArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Space {
    M0n,
    Proj,
    Milnor,
    BlowupPoint,
    ProjBundle,
}

impl Space {
    fn name(self) -> &'static str {
        match self {
            Space::M0n => "m0n",
            Space::Proj => "proj",
            Space::Milnor => "milnor",
            Space::BlowupPoint => "blowup-point",
            Space::ProjBundle => "proj-bundle",
        }
    }
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[arg(long, value_enum, default_value = "m0n")]
    space: Space,
    /// Markings (m0n), or the second degree of a Milnor hypersurface.
    #[arg(long)]
    n: Option<u32>,
    /// Dimension of the projective space involved.
    #[arg(long)]
    m: Option<u32>,
    /// Line-bundle twists for proj-bundle, e.g. `1,0`.
    #[arg(long)]
    twists: Option<String>,
    #[arg(long, value_enum, default_value = "universal")]
    theory: TheoryArg,
    #[arg(long, value_enum, default_value = "u")]
    basis: BasisArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[arg(long, default_value_t = 8)]
    max_n: u32,
    #[arg(long, value_enum, default_value = "universal")]
    theory: TheoryArg,
    #[arg(long, value_enum, default_value = "u")]
    basis: BasisArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    /// F(x, y).
    Law,
    /// The formal inverse chi(x).
    Inverse,
    /// q(x, y) with F = x + y - xy q.
    Q,
    /// phi(x) = q(x, chi(x)).
    Phi,
    /// x / chi(x).
    XOverInverse,
    /// phi(F(x, y)).
    PhiOfLaw,
    /// The two-variable series feeding the boundary terms.
    B,
    /// The rational logarithm.
    Log,
    /// The class of the hypersurface of a three-root bundle.
    ThreeRoot,
    /// The expanded generating polynomial of all intersections on M0,n.
    Generating,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    name: SeriesName,
    #[arg(long, value_enum, default_value = "universal")]
    theory: TheoryArg,
    /// Truncation order (total degree kept).
    #[arg(long)]
    order: Option<u32>,
    /// Markings, for the generating polynomial.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run a single criterion (1-10).
    #[arg(long)]
    criterion: Option<u8>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Why a command stopped.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Invalid(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Verification(_) => EXIT_VERIFY,
            Failure::Core(e) => match e {
                Error::InvalidInput(_) | Error::Parse(_) | Error::NotHomogeneous => EXIT_INVALID,
                Error::UnknownCoefficients(_) => EXIT_UNKNOWN,
                _ => EXIT_VERIFY,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Invalid(m) => format!("invalid input: {m}"),
            Failure::Verification(m) => format!("verification failed: {m}"),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_INVALID;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    let cache = cli.cache.as_deref();
    let result = match cli.command {
        Command::Intersect(a) => with_cache(cache, err, |out_err| intersect(a, out, out_err)),
        Command::Class(a) => with_cache(cache, err, |out_err| class(a, out, out_err)),
        Command::Tables(a) => with_cache(cache, err, |out_err| tables(a, out, out_err)),
        Command::Series(a) => series(a, out),
        Command::Verify(a) => verify(a, out),
        Command::CacheInfo => cache_info(cache, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Invalid(format!("cannot write output: {e}")))
}

fn engines() -> [&'static m0n_core::moduli::IntersectionEngine; 3] {
    Theory::ALL.map(shared_engine)
}

/// Loads the cache before `f` and writes it back after a success.
fn with_cache(cache: Option<&Path>, err: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> Outcome) -> Outcome {
    if let Some(path) = cache {
        let report = load_cache(path, &engines());
        for w in &report.warnings {
            let _ = writeln!(err, "warning: {w}");
        }
    }
    f(err)?;
    if let Some(path) = cache {
        if let Err(e) = save_cache(path, &engines()) {
            let _ = writeln!(err, "warning: {e}");
        }
    }
    Ok(())
}

/// The twisted K-theory value, computed by recursion and confirmed by the
/// closed form.
fn twisted(n: u32, d: &[u32]) -> std::result::Result<Poly, Failure> {
    let key = IntersectionKey::new(n, d, Theory::KTheory)?;
    let by_recursion = ktheory_twisted_recursion(n, key.d())?;
    let closed = ktheory_twisted_closed_form(n, key.d())?;
    if by_recursion != closed {
        return Err(Failure::Verification(format!(
            "{key}: recursion gives {by_recursion}, closed form gives {closed}"
        )));
    }
    Ok(by_recursion)
}

fn intersection(n: u32, d: &[u32], theory: TheoryArg) -> std::result::Result<Poly, Failure> {
    match theory.theory() {
        Some(t) => Ok(shared_engine(t).evaluate(&IntersectionKey::new(n, d, t)?)?),
        None => twisted(n, d),
    }
}

fn in_basis(value: Poly, basis: BasisArg, theory: TheoryArg) -> std::result::Result<Rendered, Failure> {
    match basis {
        BasisArg::U => Ok(Rendered::U(value)),
        BasisArg::P if theory == TheoryArg::Universal => Ok(Rendered::P(to_projective_basis(&value)?)),
        BasisArg::P => Err(Failure::Invalid(format!("the p basis applies to universal values, not {}", theory.name()))),
    }
}

fn single_value(
    out: &mut dyn Write,
    format: Format,
    header: serde_json::Value,
    tsv: &[(&str, String)],
    v: &Rendered,
) -> Outcome {
    let text = match format {
        Format::Text => format!("{}\n", v.text()),
        Format::Latex => format!("{}\n", v.latex()),
        Format::Json => {
            let mut doc = header;
            doc["value"] = v.json();
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
        Format::Tsv => {
            let names: Vec<&str> = tsv.iter().map(|(k, _)| *k).chain(["value"]).collect();
            let values: Vec<String> = tsv.iter().map(|(_, v)| v.clone()).chain([v.text()]).collect();
            format!("{}\n{}\n", names.join("\t"), values.join("\t"))
        }
    };
    emit(out, &text)
}

fn join(d: &[u32]) -> String {
    d.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn intersect(a: IntersectArgs, out: &mut dyn Write, _err: &mut dyn Write) -> Outcome {
    let d = parse_exponents(&a.d)?;
    let value = intersection(a.n, &d, a.theory)?;
    let v = in_basis(value, a.basis, a.theory)?;
    let key_d = IntersectionKey::new(a.n, &d, Theory::Universal)?.d().to_vec();
    let basis = if a.basis == BasisArg::U { "u" } else { "p" };
    let header = json!({ "n": a.n, "d": key_d, "theory": a.theory.name(), "basis": basis });
    let tsv = [("n", a.n.to_string()), ("d", join(&key_d)), ("theory", a.theory.name().to_string())];
    single_value(out, a.format, header, &tsv, &v)
}

fn require(v: Option<u32>, flag: &str, space: Space) -> std::result::Result<u32, Failure> {
    v.ok_or_else(|| Failure::Invalid(format!("--space {} needs --{flag}", space.name())))
}

fn class(a: ClassArgs, out: &mut dyn Write, _err: &mut dyn Write) -> Outcome {
    let mut header = json!({ "space": a.space.name(), "theory": a.theory.name() });
    let mut tsv = vec![("space", a.space.name().to_string())];
    let value = if a.space == Space::M0n {
        let n = require(a.n, "n", a.space)?;
        header["n"] = json!(n);
        tsv.push(("n", n.to_string()));
        intersection(n, &[], a.theory)?
    } else {
        let m = require(a.m, "m", a.space)?;
        header["m"] = json!(m);
        tsv.push(("m", m.to_string()));
        let class = match a.space {
            Space::Proj => projective_space_class(m)?,
            Space::BlowupPoint => blowup_point_class(m)?,
            Space::Milnor => {
                let n = require(a.n, "n", a.space)?;
                header["n"] = json!(n);
                tsv.push(("n", n.to_string()));
                milnor_class(m, n)?
            }
            Space::ProjBundle => {
                let text =
                    a.twists.as_deref().ok_or_else(|| Failure::Invalid("--space proj-bundle needs --twists".into()))?;
                let twists = parse_exponents(text)?;
                header["twists"] = json!(twists);
                tsv.push(("twists", join(&twists)));
                projective_bundle_over_pm(m, &twists)?
            }
            Space::M0n => unreachable!("handled above"),
        };
        match a.theory {
            TheoryArg::Universal => class,
            TheoryArg::Chow => specializations(&class)?.0,
            TheoryArg::Ktheory => specializations(&class)?.1,
            TheoryArg::KtheoryTwisted => {
                return Err(Failure::Invalid("ktheory-twisted only applies to --space m0n".into()));
            }
        }
    };
    tsv.push(("theory", a.theory.name().to_string()));
    header["basis"] = json!(if a.basis == BasisArg::U { "u" } else { "p" });
    let v = in_basis(value, a.basis, a.theory)?;
    single_value(out, a.format, header, &tsv, &v)
}

fn tables(a: TablesArgs, out: &mut dyn Write, _err: &mut dyn Write) -> Outcome {
    let raw: Vec<IntersectionTable> = match a.theory.theory() {
        Some(t) => build_tables(shared_engine(t), a.max_n)?,
        None => {
            // Same layout as the engine tables, filled from the twisted recursion.
            let mut tables = build_tables(shared_engine(Theory::Chow), a.max_n)?;
            for t in &mut tables {
                for (n, row) in &mut t.rows {
                    for (cell, d) in row.iter_mut().zip(&t.columns) {
                        *cell = twisted(*n, d)?;
                    }
                }
            }
            tables
        }
    };
    let mut rendered = Vec::with_capacity(raw.len());
    for t in raw {
        let rows = t
            .rows
            .iter()
            .map(|(_, row)| row.iter().map(|v| in_basis(v.clone(), a.basis, a.theory)).collect())
            .collect::<std::result::Result<Vec<Vec<_>>, _>>()?;
        rendered.push((t, rows));
    }
    let text = match a.format {
        Format::Text => render::tables_text(&rendered),
        Format::Latex => render::tables_latex(&rendered),
        Format::Tsv => render::tables_tsv(a.theory.name(), &rendered),
        Format::Json => {
            format!(
                "{}\n",
                serde_json::to_string_pretty(&render::tables_json(a.theory.name(), &rendered)).expect("json")
            )
        }
    };
    emit(out, &text)
}

fn law_for(theory: TheoryArg, order: u32) -> std::result::Result<FormalGroupLaw, Failure> {
    match theory {
        TheoryArg::Universal => Ok(universal_law(order)?),
        TheoryArg::Chow => Ok(additive_law(order)),
        TheoryArg::Ktheory => Ok(multiplicative_law(order)),
        TheoryArg::KtheoryTwisted => Err(Failure::Invalid("ktheory-twisted has no law of its own; use ktheory".into())),
    }
}

fn series(a: SeriesArgs, out: &mut dyn Write) -> Outcome {
    if matches!(a.format, Format::Tsv | Format::Latex) {
        return Err(Failure::Invalid("series support --format text or json".into()));
    }
    let json_out = a.format == Format::Json;
    let header = json!({ "name": format!("{:?}", a.name).to_lowercase(), "theory": a.theory.name() });
    let finish = |mut doc: serde_json::Value, value: serde_json::Value, text: String, out: &mut dyn Write| {
        if json_out {
            doc["value"] = value;
            emit(out, &format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")))
        } else {
            emit(out, &format!("{text}\n"))
        }
    };
    match a.name {
        SeriesName::Generating => {
            let n = a.n.ok_or_else(|| Failure::Invalid("--name generating needs --n".into()))?;
            let twisted = match a.theory {
                TheoryArg::Chow => false,
                TheoryArg::KtheoryTwisted => true,
                t => {
                    return Err(Failure::Invalid(format!(
                        "generating polynomials exist for chow and ktheory-twisted, not {}",
                        t.name()
                    )))
                }
            };
            let text = generating_function(n, twisted)?;
            let mut doc = header;
            doc["n"] = json!(n);
            finish(doc, json!(text), text, out)
        }
        SeriesName::ThreeRoot => {
            if a.theory != TheoryArg::Universal {
                return Err(Failure::Invalid("the three-root series is universal only".into()));
            }
            let s = three_root_series()?;
            finish(header, s.to_json(), s.to_string(), out)
        }
        name => {
            let order = a.order.unwrap_or(7);
            let law = law_for(a.theory, order)?;
            if name == SeriesName::Log {
                let s = log_series(&law)?;
                return finish(header, s.to_json(), s.to_string(), out);
            }
            if name == SeriesName::Law {
                let s = law.series();
                return finish(header, s.to_json(), s.to_string(), out);
            }
            let b = derive_bundle(&law)?;
            let s = match name {
                SeriesName::Inverse => b.chi,
                SeriesName::Q => b.q,
                SeriesName::Phi => b.phi,
                SeriesName::XOverInverse => b.c_series,
                SeriesName::B => b.b_series,
                SeriesName::PhiOfLaw => b.phi.compose(&[("x", b.law.series())])?,
                _ => unreachable!("handled above"),
            };
            finish(header, s.to_json(), s.to_string(), out)
        }
    }
}

fn check_json(c: &Check) -> serde_json::Value {
    json!({
        "criterion": c.criterion,
        "name": c.name,
        "passed": c.passed(),
        "compared": c.compared,
        "failures": c.failures,
    })
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    let which: Vec<u8> = match a.criterion {
        Some(k) if (1..=CRITERIA.len() as u8).contains(&k) => vec![k],
        Some(k) => return Err(Failure::Invalid(format!("criteria are numbered 1-{}, got {k}", CRITERIA.len()))),
        None => (1..=CRITERIA.len() as u8).collect(),
    };
    let checks: Vec<Check> = which.into_iter().map(run_criterion).collect();
    let passed = checks.iter().filter(|c| c.passed()).count();
    let text = match a.format {
        Format::Json => {
            let doc = json!({ "checks": checks.iter().map(check_json).collect::<Vec<_>>(), "passed": passed, "total": checks.len() });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
        Format::Text => {
            let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
            s.push_str(&format!("{passed}/{} criteria passed\n", checks.len()));
            s
        }
        _ => return Err(Failure::Invalid("verify supports --format text or json".into())),
    };
    emit(out, &text)?;
    if passed == checks.len() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} of {} criteria failed", checks.len() - passed, checks.len())))
    }
}

fn cache_info(cache: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let path = cache.ok_or_else(|| Failure::Invalid("no cache configured; pass --cache or set M0N_CACHE".into()))?;
    if !path.exists() {
        return emit(out, &format!("cache: {}\nno cache file yet\n", path.display()));
    }
    let summary = cache_summary(path)?;
    let total: usize = summary.iter().map(|(_, k)| k).sum();
    let mut text = format!("cache: {}\nentries: {total}\n", path.display());
    for (theory, count) in summary {
        text.push_str(&format!("  {theory}: {count}\n"));
    }
    emit(out, &text)
}
