//! The `infconv` command line.
//!
//! Exit codes: `0` success, `1` computation error, `2` configuration error,
//! `3` when `verify` finds an inequality violated beyond tolerance.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{sample, FunctionSpec, SpecTemplate};
use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::gls::{
    fundamental_function, gls_norm, Factorization, GeneratingFunction, GlsNorm, PSampling, Spacing,
};
use crate::grid::{GridFunction, GridSpec, DEFAULT_NODE_CAP};
use crate::harness::{
    randomized_upper_bound, scan_ratio, verify_theorem_2_1, verify_theorem_4_1, GlsBoundReport,
    ScanReport, SharpnessReport, DEFAULT_SEED,
};
use crate::infconv::{infconv_convex_fast_1d, infconv_direct, infconv_fold, infconv_separable, ConvexSequence, Engine};
use crate::norms::{lp_norm, subgaussian_fit, PExponent, TailReport};
use crate::report::{to_json, write_grid_csv, Document};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

/// Environment variable overriding the grid node cap.
pub const NODE_CAP_ENV: &str = "INFCONV_NODE_CAP";

#[derive(Debug, Parser)]
#[command(name = "infconv", version, about = "Infimal convolution, Lebesgue and Grand Lebesgue norms, sharp-bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Infimal convolution of sampled catalog functions.
    Conv(ConvArgs),
    /// Lebesgue norms and tail fit of one catalog function.
    Norm(NormArgs),
    /// Grand Lebesgue Space norm of one catalog function.
    Glsnorm(GlsNormArgs),
    /// Fundamental function of a generating function.
    Fundamental(FundamentalArgs),
    /// Check the Lebesgue (2.1) or GLS (4.1) bound.
    Verify(VerifyArgs),
    /// Scan a one-parameter family for the largest norm ratio.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum EngineArg {
    Brute,
    Separable,
    Direct,
    Convex1d,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
enum Theorem {
    #[value(name = "2.1")]
    #[serde(rename = "2.1")]
    Lebesgue,
    #[value(name = "4.1")]
    #[serde(rename = "4.1")]
    Gls,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FactorArg {
    Trivial,
    Given,
}

#[derive(Debug, Args, Serialize)]
struct GridArgs {
    /// Dimension (1 to 3).
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Half-width L of the box [-L, L]^d.
    #[arg(long = "L", default_value_t = 6.0)]
    #[serde(rename = "L")]
    half_width: f64,
    /// Odd number of nodes per axis.
    #[arg(long, default_value_t = 257)]
    n: usize,
}

#[derive(Debug, Args, Serialize)]
struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed recorded in the report and used by randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args, Serialize)]
struct SamplingArgs {
    /// Smallest sampled exponent (default: left end of the domain of psi).
    #[arg(long)]
    p_min: Option<f64>,
    /// Largest sampled exponent (default: min(b, 256)).
    #[arg(long)]
    p_max: Option<f64>,
    #[arg(long, default_value_t = 33)]
    p_count: usize,
    #[arg(long, default_value = "log")]
    spacing: String,
}

#[derive(Debug, Args, Serialize)]
struct ConvArgs {
    /// Catalog function, e.g. `gaussian`, `quadratic:c=1`; repeat for each operand.
    #[arg(long = "spec", required = true)]
    specs: Vec<String>,
    #[command(flatten)]
    #[serde(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = EngineArg::Brute)]
    engine: EngineArg,
    #[command(flatten)]
    #[serde(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
struct NormArgs {
    #[arg(long)]
    spec: String,
    #[command(flatten)]
    #[serde(flatten)]
    grid: GridArgs,
    /// Exponent(s); `inf` for the supremum norm.
    #[arg(long = "p", default_values_t = vec!["2".to_string()])]
    ps: Vec<String>,
    /// Tail exponent s for the fit T(u) <= exp(-C u^s).
    #[arg(long)]
    tail_s: Option<f64>,
    /// Tail thresholds u >= 1, ascending.
    #[arg(long = "u")]
    us: Vec<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
struct GlsNormArgs {
    #[arg(long)]
    spec: String,
    /// Generating function, e.g. `power:s=2`, `degenerate:r=3`.
    #[arg(long)]
    psi: String,
    #[command(flatten)]
    #[serde(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    #[serde(flatten)]
    sampling: SamplingArgs,
    #[command(flatten)]
    #[serde(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
struct FundamentalArgs {
    #[arg(long)]
    psi: String,
    #[arg(long = "delta", required = true)]
    deltas: Vec<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    /// Operand(s); a single spec is repeated m times.
    #[arg(long = "spec")]
    specs: Vec<String>,
    /// Number of operands (repeatable with --random).
    #[arg(long = "m")]
    ms: Vec<usize>,
    /// Exponent(s) for the Lebesgue bound.
    #[arg(long = "p")]
    ps: Vec<f64>,
    /// Run this many randomized catalog selections instead of fixed specs (Lebesgue bound only).
    #[arg(long)]
    random: Option<usize>,
    #[arg(long)]
    psi: Option<String>,
    #[arg(long, value_enum, default_value_t = FactorArg::Trivial)]
    factor: FactorArg,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    zeta: Option<String>,
    #[command(flatten)]
    #[serde(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    #[serde(flatten)]
    sampling: SamplingArgs,
    #[arg(long, value_enum, default_value_t = EngineArg::Brute)]
    engine: EngineArg,
    /// Self-test fixture: multiply every checked left-hand side by this factor.
    #[arg(long, hide = true)]
    inject_violation: Option<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args, Serialize)]
struct ScanArgs {
    /// Catalog template with one `?`, e.g. `trunc-quadratic:c=?,R=3`.
    #[arg(long)]
    family: String,
    #[arg(long = "param", required = true)]
    params: Vec<f64>,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    #[command(flatten)]
    #[serde(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = EngineArg::Brute)]
    engine: EngineArg,
    #[command(flatten)]
    #[serde(flatten)]
    output: OutputArgs,
}

/// Failure split by exit code.
enum Failure {
    Config(Error),
    Compute(Error),
    Io(io::Error),
}

type Outcome<T> = std::result::Result<T, Failure>;

fn cfg<T>(r: Result<T>) -> Outcome<T> {
    r.map_err(Failure::Config)
}

fn compute<T>(r: Result<T>) -> Outcome<T> {
    r.map_err(Failure::Compute)
}

fn node_cap() -> Result<usize> {
    match std::env::var(NODE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{NODE_CAP_ENV}={v:?} is not a node count"))),
        Err(_) => Ok(DEFAULT_NODE_CAP),
    }
}

impl GridArgs {
    fn build(&self) -> Result<GridSpec> {
        GridSpec::with_cap(self.d, self.half_width, self.n, node_cap()?)
    }
}

impl SamplingArgs {
    fn build(&self, gf: &GeneratingFunction) -> Result<PSampling> {
        let spacing: Spacing = self.spacing.parse()?;
        let default = PSampling::for_psi(gf, self.p_count, spacing)?;
        if self.p_min.is_none() && self.p_max.is_none() {
            return Ok(default);
        }
        PSampling::new(
            self.p_min.unwrap_or(default.p_min),
            self.p_max.unwrap_or(default.p_max),
            self.p_count,
            spacing,
        )
    }
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Brute | EngineArg::Convex1d => Engine::BruteForce,
            EngineArg::Separable => Engine::Separable,
            EngineArg::Direct => Engine::Direct,
        }
    }
}

fn parse_specs(texts: &[String]) -> Result<Vec<FunctionSpec>> {
    texts.iter().map(|t| t.parse()).collect()
}

struct Sink<'a> {
    out: &'a mut dyn Write,
    path: Option<PathBuf>,
}

impl Sink<'_> {
    fn emit(&mut self, text: &str) -> Outcome<()> {
        match &self.path {
            Some(p) => {
                let mut f = File::create(p).map_err(Failure::Io)?;
                f.write_all(text.as_bytes()).map_err(Failure::Io)
            }
            None => self.out.write_all(text.as_bytes()).map_err(Failure::Io),
        }
    }
}

fn document<C: Serialize, R: Serialize>(command: &str, config: &C, reports: &[R], seed: u64) -> Outcome<String> {
    compute(to_json(&Document {
        command,
        config,
        reports,
        tool_version: env!("CARGO_PKG_VERSION"),
        seed,
    }))
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Outcome<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::Compute(Error::InvalidArgument(format!("csv: {e}")));
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(&row).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn num(v: f64) -> String {
    if v.is_infinite() && v > 0.0 {
        "inf".into()
    } else {
        v.to_string()
    }
}

#[derive(Serialize)]
struct ConvReport {
    specs: Vec<FunctionSpec>,
    engine: EngineArg,
    grid: GridSpec,
    samples: Vec<ExtReal>,
}

fn run_conv(a: &ConvArgs, sink: &mut Sink) -> Outcome<i32> {
    let grid = cfg(a.grid.build())?;
    let specs = cfg(parse_specs(&a.specs))?;
    let fs = cfg(specs.iter().map(|s| sample(s, &grid)).collect::<Result<Vec<_>>>())?;
    let g: GridFunction = match a.engine {
        EngineArg::Brute => compute(infconv_fold(&fs))?,
        EngineArg::Separable => compute(infconv_separable(&specs, &grid))?,
        EngineArg::Direct if fs.len() == 1 => fs[0].clone(),
        EngineArg::Direct => compute(infconv_direct(&fs))?,
        EngineArg::Convex1d => {
            let seqs = compute(fs.iter().map(ConvexSequence::from_grid_function).collect::<Result<Vec<_>>>())?;
            let folded = compute(
                seqs[1..]
                    .iter()
                    .try_fold(seqs[0].clone(), |acc, s| infconv_convex_fast_1d(&acc, s)),
            )?;
            folded.to_grid_function()
        }
    };
    let text = match a.output.format {
        Format::Csv => {
            let mut buf = Vec::new();
            compute(write_grid_csv(&g, &mut buf))?;
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
        Format::Json => {
            let report = ConvReport {
                specs,
                engine: a.engine,
                grid,
                samples: (0..grid.len()).map(|i| g.get(i)).collect(),
            };
            document("conv", a, &[report], a.output.seed)?
        }
    };
    sink.emit(&text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct NormReport {
    spec: FunctionSpec,
    grid: GridSpec,
    p: PExponent,
    norm: ExtReal,
}

#[derive(Serialize)]
#[serde(untagged)]
enum NormItem {
    Norm(NormReport),
    Tail(TailReport),
}

fn run_norm(a: &NormArgs, sink: &mut Sink) -> Outcome<i32> {
    let grid = cfg(a.grid.build())?;
    let spec: FunctionSpec = cfg(a.spec.parse())?;
    let ps = cfg(a.ps.iter().map(|p| p.parse()).collect::<Result<Vec<PExponent>>>())?;
    if a.tail_s.is_some() && a.us.is_empty() {
        return Err(Failure::Config(Error::InvalidArgument("--tail-s needs at least one --u".into())));
    }
    let f = cfg(sample(&spec, &grid))?;
    let mut items: Vec<NormItem> = ps
        .iter()
        .map(|&p| NormItem::Norm(NormReport { spec, grid, p, norm: lp_norm(&f, p) }))
        .collect();
    if let Some(s) = a.tail_s {
        items.push(NormItem::Tail(compute(subgaussian_fit(&f, s, &a.us))?));
    }
    let text = match a.output.format {
        Format::Json => document("norm", a, &items, a.output.seed)?,
        Format::Csv => csv_text(
            &["p", "norm"],
            items.iter().filter_map(|i| match i {
                NormItem::Norm(r) => Some(vec![r.p.to_string(), r.norm.to_string()]),
                NormItem::Tail(_) => None,
            }),
        )?,
    };
    sink.emit(&text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GlsNormReport {
    spec: FunctionSpec,
    psi: GeneratingFunction,
    sampling: PSampling,
    #[serde(flatten)]
    norm: GlsNorm,
}

fn run_glsnorm(a: &GlsNormArgs, sink: &mut Sink) -> Outcome<i32> {
    let grid = cfg(a.grid.build())?;
    let spec: FunctionSpec = cfg(a.spec.parse())?;
    let psi: GeneratingFunction = cfg(a.psi.parse())?;
    let sampling = cfg(a.sampling.build(&psi))?;
    let f = cfg(sample(&spec, &grid))?;
    let norm = compute(gls_norm(&f, &psi, &sampling))?;
    let text = match a.output.format {
        Format::Json => document("glsnorm", a, &[GlsNormReport { spec, psi, sampling, norm }], a.output.seed)?,
        Format::Csv => csv_text(
            &["p", "ratio"],
            norm.p_values
                .iter()
                .zip(&norm.ratios)
                .map(|(p, r)| vec![p.to_string(), r.to_string()]),
        )?,
    };
    sink.emit(&text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct FundamentalReport {
    psi: GeneratingFunction,
    delta: f64,
    value: f64,
}

fn run_fundamental(a: &FundamentalArgs, sink: &mut Sink) -> Outcome<i32> {
    let psi: GeneratingFunction = cfg(a.psi.parse())?;
    if let Some(d) = a.deltas.iter().find(|d| !(d.is_finite() && **d >= 0.0)) {
        return Err(Failure::Config(Error::InvalidArgument(format!("delta = {d} must be >= 0"))));
    }
    let reports = a
        .deltas
        .iter()
        .map(|&delta| {
            Ok(FundamentalReport { psi: psi.clone(), delta, value: fundamental_function(&psi, delta)? })
        })
        .collect::<Result<Vec<_>>>();
    let reports = compute(reports)?;
    let text = match a.output.format {
        Format::Json => document("fundamental", a, &reports, a.output.seed)?,
        Format::Csv => csv_text(
            &["delta", "phi"],
            reports.iter().map(|r| vec![r.delta.to_string(), r.value.to_string()]),
        )?,
    };
    sink.emit(&text)?;
    Ok(EXIT_OK)
}

fn inject_sharpness(r: &mut SharpnessReport, factor: f64) {
    r.lhs *= factor;
    r.ratio *= factor;
    r.rel_gap = (r.bound - r.ratio) / r.bound;
    r.upper_bound_holds = r.ratio <= r.bound * (1.0 + r.tolerance);
    r.satisfied = r.upper_bound_holds && r.surrogate_matches.unwrap_or(true);
}

fn inject_gls(r: &mut GlsBoundReport, factor: f64) {
    r.lhs *= factor;
    r.satisfied = r.lhs <= r.rhs * (1.0 + r.tolerance);
    r.margin = if r.rhs > 0.0 { (r.rhs - r.lhs) / r.rhs } else { 0.0 };
    for c in &mut r.chain {
        c.lhs *= factor;
        c.holds = c.lhs <= c.rhs * (1.0 + r.tolerance);
    }
    r.chain_holds = r.chain.iter().all(|c| c.holds);
}

fn run_verify(a: &VerifyArgs, sink: &mut Sink) -> Outcome<i32> {
    let grid = cfg(a.grid.build())?;
    let specs = cfg(parse_specs(&a.specs))?;
    let engine = Engine::from(a.engine);
    if a.engine == EngineArg::Convex1d {
        return Err(Failure::Config(Error::InvalidArgument("verify supports brute, separable and direct engines".into())));
    }
    let ms = if a.ms.is_empty() { vec![2] } else { a.ms.clone() };
    if ms.contains(&0) {
        return Err(Failure::Config(Error::InvalidArgument("m must be positive".into())));
    }
    let seed = a.output.seed;
    match a.theorem {
        Theorem::Lebesgue => {
            let ps_raw = if a.ps.is_empty() { vec![2.0] } else { a.ps.clone() };
            let ps = cfg(ps_raw.iter().map(|&p| PExponent::finite(p)).collect::<Result<Vec<_>>>())?;
            let mut reports: Vec<SharpnessReport> = Vec::new();
            if let Some(cases) = a.random {
                let sweep = compute(randomized_upper_bound(cases, seed, &grid, &ms, &ps_raw))?;
                reports = sweep.reports;
            } else {
                if specs.is_empty() {
                    return Err(Failure::Config(Error::InvalidArgument("--spec is required".into())));
                }
                for &m in &ms {
                    for &p in &ps {
                        let r = if specs.len() == 1 {
                            verify_theorem_2_1(m, p, &specs[0], &grid, engine)
                        } else {
                            crate::harness::empirical_k(&specs, p, &grid, engine)
                        };
                        reports.push(compute(r)?);
                    }
                    if specs.len() > 1 {
                        break;
                    }
                }
            }
            if let Some(f) = a.inject_violation {
                reports.iter_mut().for_each(|r| inject_sharpness(r, f));
            }
            let violated = reports.iter().any(|r| !r.satisfied);
            let text = match a.output.format {
                Format::Json => document("verify", a, &reports, seed)?,
                Format::Csv => csv_text(
                    &["d", "m", "p", "ratio", "bound", "rel_gap", "surrogate_ratio", "tolerance", "satisfied"],
                    reports.iter().map(|r| {
                        vec![
                            r.d.to_string(),
                            r.m.to_string(),
                            r.p.to_string(),
                            num(r.ratio),
                            num(r.bound),
                            num(r.rel_gap),
                            r.surrogate_ratio.map(num).unwrap_or_default(),
                            num(r.tolerance),
                            r.satisfied.to_string(),
                        ]
                    }),
                )?,
            };
            sink.emit(&text)?;
            Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
        }
        Theorem::Gls => {
            let psi_text = a
                .psi
                .as_ref()
                .ok_or_else(|| Failure::Config(Error::InvalidArgument("--psi is required for 4.1".into())))?;
            let psi: GeneratingFunction = cfg(psi_text.parse())?;
            let factorization = match a.factor {
                FactorArg::Trivial => Factorization::Trivial,
                FactorArg::Given => {
                    let (Some(nu), Some(zeta)) = (&a.nu, &a.zeta) else {
                        return Err(Failure::Config(Error::InvalidArgument(
                            "--factor given needs --nu and --zeta".into(),
                        )));
                    };
                    Factorization::Given { nu: cfg(nu.parse())?, zeta: cfg(zeta.parse())? }
                }
            };
            let sampling = cfg(a.sampling.build(&psi))?;
            if specs.is_empty() {
                return Err(Failure::Config(Error::InvalidArgument("--spec is required".into())));
            }
            let mut reports = Vec::new();
            for &m in &ms {
                let ops = if specs.len() == 1 { vec![specs[0]; m] } else { specs.clone() };
                reports.push(compute(verify_theorem_4_1(&ops, &psi, &factorization, &grid, &sampling, engine))?);
                if specs.len() > 1 {
                    break;
                }
            }
            if let Some(f) = a.inject_violation {
                reports.iter_mut().for_each(|r| inject_gls(r, f));
            }
            let violated = reports.iter().any(|r| !r.satisfied || !r.chain_holds);
            let text = match a.output.format {
                Format::Json => document("verify", a, &reports, seed)?,
                Format::Csv => csv_text(
                    &["m", "p", "lhs", "rhs", "holds"],
                    reports.iter().flat_map(|r| {
                        r.chain.iter().map(move |c| {
                            vec![r.m.to_string(), c.p.to_string(), num(c.lhs), num(c.rhs), c.holds.to_string()]
                        })
                    }),
                )?,
            };
            sink.emit(&text)?;
            Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
        }
    }
}

fn run_scan(a: &ScanArgs, sink: &mut Sink) -> Outcome<i32> {
    let grid = cfg(a.grid.build())?;
    let family: SpecTemplate = cfg(a.family.parse())?;
    let p = cfg(PExponent::finite(a.p))?;
    if a.m == 0 {
        return Err(Failure::Config(Error::InvalidArgument("m must be positive".into())));
    }
    let report: ScanReport = scan_ratio(&family, &a.params, a.m, p, &grid, a.engine.into());
    let text = match a.output.format {
        Format::Json => document("scan", a, std::slice::from_ref(&report), a.output.seed)?,
        Format::Csv => csv_text(
            &["param", "ratio", "bound", "error"],
            report.entries.iter().map(|e| match &e.report {
                Some(r) => vec![e.param.to_string(), num(r.ratio), num(r.bound), String::new()],
                None => vec![e.param.to_string(), String::new(), String::new(), e.error.clone().unwrap_or_default()],
            }),
        )?,
    };
    sink.emit(&text)?;
    Ok(EXIT_OK)
}

/// Runs the CLI with explicit output streams and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let path = match &cli.command {
        Command::Conv(a) => a.output.out.clone(),
        Command::Norm(a) => a.output.out.clone(),
        Command::Glsnorm(a) => a.output.out.clone(),
        Command::Fundamental(a) => a.output.out.clone(),
        Command::Verify(a) => a.output.out.clone(),
        Command::Scan(a) => a.output.out.clone(),
    };
    let mut sink = Sink { out, path };
    let result = match &cli.command {
        Command::Conv(a) => run_conv(a, &mut sink),
        Command::Norm(a) => run_norm(a, &mut sink),
        Command::Glsnorm(a) => run_glsnorm(a, &mut sink),
        Command::Fundamental(a) => run_fundamental(a, &mut sink),
        Command::Verify(a) => run_verify(a, &mut sink),
        Command::Scan(a) => run_scan(a, &mut sink),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Config(e)) => {
            let _ = writeln!(err, "infconv: configuration error: {e}");
            EXIT_CONFIG
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "infconv: {e}");
            EXIT_COMPUTE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "infconv: i/o error: {e}");
            EXIT_COMPUTE
        }
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
