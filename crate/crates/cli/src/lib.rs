//! Argument parsing and subcommand dispatch for the `apring` binary. Every
//! subcommand prints a JSON [`ResultEnvelope`] on success; failures map to
//! exit codes through [`CliError::exit_code`].

pub mod envelope;
pub mod error;
pub mod input;

use apring_core::apmin::{self, dependent_claim_probes, running_min_series, KroneckerQuery};
use apring_core::curves::{emit_csv, emit_svg, sample_curve};
use apring_core::partition::{self, MethodChoice, WeightSet};
use apring_core::poly::{classify_independence, TrigPolynomial};
use apring_core::{presets, series};
use clap::builder::PossibleValuesParser;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

pub use envelope::ResultEnvelope;
pub use error::CliError;

/// Environment variable that fixes the worker thread count.
pub const THREADS_ENV: &str = "APRING_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "apring",
    version,
    about = "Inner and outer radii of trigonometric polynomials"
)]
pub struct Cli {
    /// Report elapsed_ms as 0 so that repeated runs are byte-identical
    #[arg(long, global = true)]
    pub deterministic: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimize |Σ ±w_k| over sign choices
    Partition(PartitionArgs),
    /// Radii formulas, independence class and a windowed scan of |f|
    Analyze(AnalyzeArgs),
    /// Write the parametric trace of f as SVG or CSV
    Curve(CurveArgs),
    /// Partition minima of truncated coefficient series
    Converge(ConvergeArgs),
    /// Search τ with |λ_k τ − θ_k| < δ (mod 2π) for all k
    Kronecker(KroneckerArgs),
    /// Compare the partition formula with observed minima for dependent frequencies
    Probe(ProbeArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Mim,
    Dp,
    Kk,
    Closed,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    /// Inline list `5,5,6,7,9` or a CSV file
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    /// Integer multiplier making the weights integral (dp only)
    #[arg(long)]
    pub scale: Option<u64>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["spec", "example"])))]
pub struct AnalyzeArgs {
    /// Polynomial spec as a JSON file or inline JSON
    #[arg(long)]
    pub spec: Option<String>,
    /// Built-in example polynomial
    #[arg(long, value_parser = PossibleValuesParser::new(presets::EXAMPLE_IDS))]
    pub example: Option<String>,
    /// Parameter of examples 2.16 and 3.9
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub a: f64,
    /// Scan window [0, T]
    #[arg(long, default_value_t = 100.0)]
    pub window: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    /// Polish grid extrema with Newton / golden-section steps
    #[arg(long)]
    pub refine: bool,
    /// Increasing windows T1,T2,... for a running minimum
    #[arg(long)]
    pub schedule: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Svg,
    Csv,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["figure", "spec"])))]
pub struct CurveArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub figure: Option<u8>,
    /// Polynomial spec as a JSON file or inline JSON
    #[arg(long)]
    pub spec: Option<String>,
    #[arg(long)]
    pub tmax: Option<f64>,
    #[arg(long)]
    pub tstep: Option<f64>,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: FormatArg,
    /// Output file; without it the curve goes to stdout and no envelope is printed
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0.01)]
    pub stroke_width: f64,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    /// geometric:a,r | powerlaw:p,scale | explicit:<list or csv file>
    #[arg(long)]
    pub series: String,
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,
}

#[derive(Debug, Args)]
pub struct KroneckerArgs {
    /// JSON list of numbers or frequency objects, e.g. `[1, {"kind":"sqrt","radicand":2}]`
    #[arg(long)]
    pub freqs: String,
    /// Comma-separated angles; `pi` expressions allowed
    #[arg(long, allow_hyphen_values = true)]
    pub targets: String,
    #[arg(long)]
    pub delta: f64,
    /// Search τ in [0, T]
    #[arg(long, default_value_t = 1e4)]
    pub window: f64,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, default_value = "1e2,1e3,1e4,1e5")]
    pub schedule: String,
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

fn describe(f: &TrigPolynomial) -> Value {
    f.terms()
        .iter()
        .zip(f.frequency_values())
        .map(|(t, lambda)| {
            json!({
                "modulus": t.modulus(),
                "phase": t.phase(),
                "frequency": t.frequency().to_string(),
                "lambda": lambda,
            })
        })
        .collect()
}

fn polynomial_source(
    spec: Option<&str>,
    example: Option<&str>,
    a: f64,
) -> Result<(TrigPolynomial, Value), CliError> {
    match (spec, example) {
        (Some(arg), _) => {
            let spec = input::load_spec(arg)?;
            Ok((spec.to_polynomial()?, json!({ "spec": spec })))
        }
        (None, Some(id)) => {
            let f = presets::example(id, a)
                .ok_or_else(|| CliError::Usage(format!("unknown example {id:?}")))??;
            Ok((f, json!({ "example": id, "a": a })))
        }
        (None, None) => Err(CliError::Usage(
            "either --spec or --example is required".into(),
        )),
    }
}

fn cmd_partition(args: &PartitionArgs) -> Result<(Value, Value), CliError> {
    let tokens = input::number_tokens(&args.weights)?;
    let weights = WeightSet::from_decimals(&tokens)?;
    if args.scale.is_some() && !matches!(args.method, MethodArg::Dp) {
        return Err(CliError::Usage(
            "--scale only applies to --method dp".into(),
        ));
    }
    let choice = match args.method {
        MethodArg::Auto => MethodChoice::Auto,
        MethodArg::Brute => MethodChoice::BruteForce,
        MethodArg::Mim => MethodChoice::MeetInMiddle,
        MethodArg::Dp => MethodChoice::IntegerDp {
            scale: args.scale.unwrap_or(1),
        },
        MethodArg::Kk => MethodChoice::KarmarkarKarp,
        MethodArg::Closed => MethodChoice::ClosedForm,
    };
    let result = partition::solve(&weights, choice)?;
    let inputs = json!({
        "weights": weights.weights(),
        "method": args.method.to_possible_value().map(|v| v.get_name().to_string()),
        "scale": args.scale,
    });
    let outputs = json!({
        "m": result.m,
        "signs": result.signs,
        "method": result.method,
        "n": weights.len(),
        "total": weights.total(),
    });
    Ok((inputs, outputs))
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<(Value, Value), CliError> {
    let (f, mut inputs) = polynomial_source(args.spec.as_deref(), args.example.as_deref(), args.a)?;
    let schedule = args
        .schedule
        .as_deref()
        .map(input::parse_numbers)
        .transpose()?;
    inputs["window"] = json!(args.window);
    inputs["step"] = json!(args.step);
    inputs["refine"] = json!(args.refine);
    inputs["schedule"] = json!(schedule);

    let formulas = apmin::radii_formulas(&f)?;
    let scan = apmin::scan_extrema(&f, 0.0, args.window, args.step, args.refine)?;
    let running = schedule
        .map(|s| running_min_series(&f, &s, args.step))
        .transpose()?;
    let independence = classify_independence(&f.frequencies())?;
    let outputs = json!({
        "polynomial": describe(&f),
        "independence": independence,
        "formulas": { "M": formulas.big_m, "m": formulas.small_m, "signs": formulas.signs },
        "scan": scan,
        "schedule": running,
    });
    Ok((inputs, outputs))
}

/// What a subcommand hands back for printing.
enum Outcome {
    Envelope(Value, Value),
    /// Curve data destined for stdout, printed without an envelope.
    Raw(Vec<u8>),
}

fn cmd_curve(args: &CurveArgs) -> Result<Outcome, CliError> {
    let (f, t_max, step, mut inputs) = match (args.figure, &args.spec) {
        (Some(n), _) => {
            let preset =
                presets::figure(n).ok_or_else(|| CliError::Usage(format!("no figure {n}")))?;
            let t_max = args.tmax.unwrap_or(preset.t_max);
            let step = args.tstep.unwrap_or(preset.step);
            (preset.poly, t_max, step, json!({ "figure": n }))
        }
        (None, Some(arg)) => {
            let (Some(t_max), Some(step)) = (args.tmax, args.tstep) else {
                return Err(CliError::Usage("--spec needs --tmax and --tstep".into()));
            };
            let spec = input::load_spec(arg)?;
            (spec.to_polynomial()?, t_max, step, json!({ "spec": spec }))
        }
        (None, None) => {
            return Err(CliError::Usage(
                "either --figure or --spec is required".into(),
            ))
        }
    };
    let samples = sample_curve(&f, t_max, step)?;
    let mut bytes = Vec::new();
    match args.format {
        FormatArg::Svg => emit_svg(&samples, &mut bytes, args.stroke_width)?,
        FormatArg::Csv => emit_csv(&samples, &mut bytes)?,
    }
    let format = if args.format == FormatArg::Svg {
        "svg"
    } else {
        "csv"
    };
    let Some(path) = &args.out else {
        return Ok(Outcome::Raw(bytes));
    };
    std::fs::write(path, &bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    inputs["tmax"] = json!(t_max);
    inputs["tstep"] = json!(step);
    inputs["format"] = json!(format);
    inputs["out"] = json!(path.display().to_string());
    inputs["stroke_width"] = json!(args.stroke_width);
    let outputs = json!({
        "samples": samples.rows.len(),
        "path": path.display().to_string(),
        "format": format,
        "bytes": bytes.len(),
        "radius": samples.radius(),
    });
    Ok(Outcome::Envelope(inputs, outputs))
}

fn cmd_converge(args: &ConvergeArgs) -> Result<(Value, Value), CliError> {
    let s = input::parse_series(&args.series)?;
    let rows = series::mn_sequence(&s, args.nmax)?;
    let inputs = json!({ "series": args.series, "nmax": args.nmax });
    let outputs = json!({
        "table": series::rows_to_csv(&rows),
        "rows": rows,
        "cauchy_check": series::cauchy_check(&rows, &s),
    });
    Ok((inputs, outputs))
}

fn cmd_kronecker(args: &KroneckerArgs) -> Result<(Value, Value), CliError> {
    let freqs = input::parse_frequency_list(&args.freqs)?;
    let targets = input::parse_angles(&args.targets)?;
    let labels: Vec<String> = freqs.iter().map(ToString::to_string).collect();
    let query = KroneckerQuery::new(freqs, targets.clone(), args.delta, args.window)?;
    let hit = apmin::kronecker_search(&query);
    let inputs = json!({
        "freqs": labels,
        "targets": targets,
        "delta": args.delta,
        "window": args.window,
    });
    let outputs = json!({
        "found": hit.is_some(),
        "tau": hit.as_ref().map(|h| h.tau),
        "distances": hit.as_ref().map(|h| h.distances.clone()),
        "max_distance": hit.as_ref().map(|h| h.max_distance),
        // recomputed from τ alone, independently of the search
        "verified": hit.as_ref().map(|h| query.is_satisfied(h.tau)),
        "grid_step": query.grid_step(),
    });
    Ok((inputs, outputs))
}

fn cmd_probe(args: &ProbeArgs) -> Result<(Value, Value), CliError> {
    let schedule = input::parse_numbers(&args.schedule)?;
    let probes = dependent_claim_probes(&schedule, args.step)?;
    let inputs = json!({ "schedule": schedule, "step": args.step });
    let outputs = json!({
        "contradicted": probes.iter().any(|p| p.status == apmin::CONTRADICTED),
        "probes": to_value(&probes),
    });
    Ok((inputs, outputs))
}

/// Worker count from [`THREADS_ENV`], or `None` for the rayon default.
pub fn configured_threads() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {text:?}"
            ))),
        },
        Err(e) => Err(CliError::Usage(format!("{THREADS_ENV}: {e}"))),
    }
}

/// Runs one parsed command, writing its envelope (or curve data) to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let start = Instant::now();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = configured_threads()? {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;

    let envelope = |r: Result<(Value, Value), CliError>| r.map(|(i, o)| Outcome::Envelope(i, o));
    let (name, result) = pool.install(|| match &cli.command {
        Command::Partition(a) => ("partition", envelope(cmd_partition(a))),
        Command::Analyze(a) => ("analyze", envelope(cmd_analyze(a))),
        Command::Curve(a) => ("curve", cmd_curve(a)),
        Command::Converge(a) => ("converge", envelope(cmd_converge(a))),
        Command::Kronecker(a) => ("kronecker", envelope(cmd_kronecker(a))),
        Command::Probe(a) => ("probe", envelope(cmd_probe(a))),
    });
    let write = |out: &mut dyn Write, bytes: &[u8]| {
        out.write_all(bytes)
            .and_then(|_| out.flush())
            .map_err(|e| CliError::Io(e.to_string()))
    };
    let (inputs, outputs) = match result? {
        Outcome::Envelope(i, o) => (i, o),
        Outcome::Raw(bytes) => return write(out, &bytes),
    };
    let elapsed_ms = if cli.deterministic {
        0.0
    } else {
        start.elapsed().as_secs_f64() * 1e3
    };
    let envelope = ResultEnvelope {
        command: name.to_string(),
        inputs,
        outputs,
        tool_version: envelope::TOOL_VERSION.to_string(),
        elapsed_ms,
    };
    write(out, envelope.to_json().as_bytes())
}
