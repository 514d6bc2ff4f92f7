//! The `ricci` command line: generate graphs, tabulate edge curvature,
//! reconstruct idleness functions and run verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on
//! usage, input or computation errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::curvature::{curvature_profile, idleness_function, kappa_alpha, EdgeCurvatureRecord};
use crate::error::Error;
use crate::families::{read_graph, write_edge_list, write_graph6, FamilySpec, GraphFormat};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::verify::{check_rf72, run_suite, SuiteOptions, VerificationReport, SUITES};

#[derive(Debug, Parser)]
#[command(name = "ricci", version, about = "Exact discrete Ricci curvature of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a named family
    Gen(GenArgs),
    /// Curvature of every edge
    Curvature(CurvatureArgs),
    /// Breakpoints of the idleness function of one edge
    Idleness(IdlenessArgs),
    /// Run verification suites
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Star,
    CompleteBipartite,
    Hypercube,
    CocktailParty,
    NearCocktail,
    Petersen,
    Dodecahedral,
    Icosidodecahedron,
    Bi,
    Torus,
    TwistedTorus,
    Klein,
    Prism,
    RandomRegular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFileFormat {
    Graph6,
    Edgelist,
}

impl From<GraphFileFormat> for GraphFormat {
    fn from(f: GraphFileFormat) -> Self {
        match f {
            GraphFileFormat::Graph6 => GraphFormat::Graph6,
            GraphFileFormat::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Dimension, half the order of a cocktail party graph, or the degree
    /// of a random regular graph
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFileFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file, or `-` for standard input
    pub input: PathBuf,
    /// Skip detection from the extension and contents
    #[arg(long, value_enum)]
    pub input_format: Option<GraphFileFormat>,
}

#[derive(Debug, Args)]
pub struct CurvatureArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated idleness values, e.g. `0,1/3,0.5`
    #[arg(long, value_delimiter = ',')]
    pub alpha: Vec<Rational>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: TableFormat,
    /// Add approximate decimal columns
    #[arg(long)]
    pub decimals: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IdlenessArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// The edge as `u,v`
    #[arg(long, value_parser = parse_edge)]
    pub edge: (usize, usize),
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name or `all`
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 6)]
    pub nmax: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 13)]
    pub trials: usize,
    /// A 5-regular graph expected to be flat with curvature -1/5 without idleness
    #[arg(long)]
    pub rf72: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s.split_once(',').ok_or("expected u,v")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(u)?, parse(v)?))
}

/// Failure of a subcommand, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

/// Parses `args` and runs the subcommand; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    configure_threads();
    let outcome = match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Curvature(a) => cmd_curvature(&a),
        Command::Idleness(a) => cmd_idleness(&a),
        Command::Verify(a) => cmd_verify(&a),
    };
    match outcome {
        Ok(()) => 0,
        Err(CliError::Verification) => 1,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

/// Caps the worker pool at `RICCI_THREADS` when set.
fn configure_threads() {
    if let Some(n) = std::env::var("RICCI_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn need(value: Option<usize>, flag: &str, family: Family) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for {family:?}")))
}

pub fn family_spec(a: &GenArgs) -> CliResult<FamilySpec> {
    use Family::*;
    let f = a.family;
    let n = || need(a.n, "n", f);
    let m = || need(a.m, "m", f);
    let k = || need(a.k, "k", f);
    Ok(match f {
        Complete => FamilySpec::Complete(n()?),
        Cycle => FamilySpec::Cycle(n()?),
        Path => FamilySpec::Path(n()?),
        Star => FamilySpec::Star(n()?),
        CompleteBipartite => FamilySpec::CompleteBipartite(n()?, m()?),
        Hypercube => FamilySpec::Hypercube(a.k.or(a.n).ok_or_else(|| {
            CliError::Usage("--k is required for Hypercube".into())
        })?),
        CocktailParty => FamilySpec::CocktailParty(k()?),
        NearCocktail => FamilySpec::NearCocktail(n()?),
        Petersen => FamilySpec::Petersen,
        Dodecahedral => FamilySpec::Dodecahedral,
        Icosidodecahedron => FamilySpec::Icosidodecahedron,
        Bi => FamilySpec::BiAntiprism(n()?),
        Torus => FamilySpec::TorusGrid(n()?, m()?),
        TwistedTorus => FamilySpec::TwistedTorus(n()?, m()?, need(a.l, "l", f)?),
        Klein => FamilySpec::KleinBottle(n()?, m()?),
        Prism => FamilySpec::Prism(a.m.or(a.n).ok_or_else(|| {
            CliError::Usage("--m is required for Prism".into())
        })?),
        RandomRegular => FamilySpec::RandomRegular { n: n()?, d: k()?, seed: a.seed },
    })
}

pub fn cmd_gen(a: &GenArgs) -> CliResult {
    let g = family_spec(a)?.build()?;
    let text = match a.format {
        GraphFileFormat::Graph6 => write_graph6(&g)? + "\n",
        GraphFileFormat::Edgelist => write_edge_list(&g),
    };
    emit(a.out.as_deref(), &text)
}

/// Reads a graph; the format comes from the flag, then the extension,
/// then the contents.
pub fn load_graph(a: &InputArgs) -> CliResult<Graph> {
    let text = if a.input.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(&a.input)
            .map_err(|e| CliError::Usage(format!("{}: {e}", a.input.display())))?
    };
    let by_extension = match a.input.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => Some(GraphFormat::Graph6),
        Some("edges" | "edgelist" | "el") => Some(GraphFormat::EdgeList),
        _ => None,
    };
    let format = a.input_format.map(GraphFormat::from).or(by_extension);
    Ok(read_graph(&text, format)?)
}

#[derive(Serialize)]
struct AlphaValue {
    alpha: Rational,
    value: Rational,
}

#[derive(Serialize)]
struct CurvatureRow<'a> {
    #[serde(flatten)]
    record: &'a EdgeCurvatureRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa_alpha: Option<Vec<AlphaValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa0_decimal: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(rename = "kappaLLY_decimal")]
    kappa_lly_decimal: Option<f64>,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

pub fn cmd_curvature(a: &CurvatureArgs) -> CliResult {
    let g = load_graph(&a.input)?;
    for alpha in &a.alpha {
        if alpha.is_negative() || *alpha > Rational::one() {
            return Err(Error::IdlenessOutOfRange(alpha.to_string()).into());
        }
    }
    let profile = curvature_profile(&g)?;
    if profile.edgeless {
        eprintln!("warning: graph has no edges");
    }
    let mut rows = Vec::with_capacity(profile.records.len());
    for rec in &profile.records {
        let kappa_alpha = if a.alpha.is_empty() {
            None
        } else {
            let values = a
                .alpha
                .iter()
                .map(|al| {
                    Ok(AlphaValue { alpha: al.clone(), value: kappa_alpha(&g, rec.u, rec.v, al)? })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Some(values)
        };
        rows.push(CurvatureRow {
            record: rec,
            kappa_alpha,
            kappa0_decimal: a.decimals.then(|| rec.kappa0.to_f64()),
            kappa_lly_decimal: a.decimals.then(|| rec.kappa_lly.to_f64()),
        });
    }
    let text = match a.format {
        TableFormat::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        TableFormat::Csv => curvature_csv(&rows, &a.alpha, a.decimals),
    };
    emit(a.out.as_deref(), &text)
}

fn curvature_csv(rows: &[CurvatureRow], alphas: &[Rational], decimals: bool) -> String {
    let mut out = String::from("u,v,du,dv,nxy,kappa0,kappaLLY,gap_c,supsup,bone_idle");
    for al in alphas {
        write!(out, ",kappa_alpha({al})").unwrap();
    }
    if decimals {
        out.push_str(",kappa0_decimal,kappaLLY_decimal");
    }
    out.push('\n');
    for row in rows {
        let r = row.record;
        write!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.u, r.v, r.du, r.dv, r.nxy, r.kappa0, r.kappa_lly, opt(&r.gap_c), opt(&r.supsup), r.bone_idle
        )
        .unwrap();
        for v in row.kappa_alpha.iter().flatten() {
            write!(out, ",{}", v.value).unwrap();
        }
        if decimals {
            write!(out, ",{},{}", r.kappa0.to_f64(), r.kappa_lly.to_f64()).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Decimal rendering with at most six places and no trailing zeros.
fn short_decimal(r: &Rational) -> String {
    let s = format!("{:.6}", r.to_f64());
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.to_string() }
}

#[derive(Serialize)]
struct IdlenessReport {
    edge: (usize, usize),
    breakpoints: Vec<AlphaValue>,
    slopes: Vec<Rational>,
}

pub fn cmd_idleness(a: &IdlenessArgs) -> CliResult {
    let g = load_graph(&a.input)?;
    let (u, v) = a.edge;
    let f = idleness_function(&g, u, v)?;
    let text = match a.format {
        TableFormat::Csv => {
            let mut out = String::from("alpha,value,alpha_decimal,value_decimal\n");
            for (al, val) in f.breakpoints() {
                writeln!(out, "{al},{val},{},{}", short_decimal(al), short_decimal(val)).unwrap();
            }
            out
        }
        TableFormat::Json => {
            let report = IdlenessReport {
                edge: (u, v),
                breakpoints: f
                    .breakpoints()
                    .iter()
                    .map(|(al, val)| AlphaValue { alpha: al.clone(), value: val.clone() })
                    .collect(),
                slopes: f.slopes(),
            };
            serde_json::to_string_pretty(&report).expect("serializable") + "\n"
        }
    };
    emit(a.out.as_deref(), &text)
}

pub fn cmd_verify(a: &VerifyArgs) -> CliResult {
    if a.suite != "all" && !SUITES.contains(&a.suite.as_str()) {
        return Err(CliError::Usage(format!(
            "unknown suite {:?}; expected one of {} or all",
            a.suite,
            SUITES.join(", ")
        )));
    }
    let opts = SuiteOptions { n_max: a.nmax, seed: a.seed, trials: a.trials };
    let mut reports: Vec<VerificationReport> = run_suite(&a.suite, &opts)?;
    if let Some(path) = &a.rf72 {
        let g = load_graph(&InputArgs { input: path.clone(), input_format: None })?;
        reports.push(check_rf72(&g));
    }
    for r in &reports {
        eprint!("{r}");
    }
    let json = serde_json::to_string_pretty(&reports).expect("serializable") + "\n";
    emit(a.out.as_deref(), &json)?;
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}
