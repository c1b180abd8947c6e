//! Batch front end: `entropy`, `validate`, `oracle`, `sweep`.
//!
//! Exit codes: 0 success, 1 failed property or oracle residual, 2 invalid
//! config or input, 3 route disagreement beyond the configured tolerance.

pub mod config;
pub mod output;
pub mod validate;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::charges::TimeZeroCharge;
use crate::entropy::{entropy_closed_form, entropy_momentum, EntropyReport, Route};
use crate::error::{Error, Result};
use crate::fock::{coherent_araki_entropy, DEFAULT_CUTOFF};
use crate::modular::{paired_entropy_closed_form, paired_vector, subspace_from_modular_data, vector_entropy};
use crate::momentum::MomentumGrid;

use config::{recentered, Scenario, ScenarioConfig, SweepParameter};
use output::{report_row, write_csv, write_json, REPORT_COLUMNS};
use validate::{run_suite, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

/// Largest pairwise residual accepted by `oracle`.
pub const ORACLE_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(name = "wedge-entropy", version, about = "Relative entropy of coherent states on the Rindler wedge")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy reports per route and wedge offset (JSON + CSV).
    Entropy(RunArgs),
    /// Property suite on the configured charge.
    Validate(ValidateArgs),
    /// Vector entropy vs truncated-Fock Araki entropy vs closed form.
    Oracle(OracleArgs),
    /// Entropy along a swept parameter (CSV).
    Sweep(RunArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Multiplies the momentum cutoff by s and the node count by s².
    #[arg(long, default_value_t = 1.0)]
    pub grid_scale: f64,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Seed for the random standard subspaces.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub lambda: f64,
    /// Complex amplitude, e.g. `1`, `0+2i`, `-0.5+0.3i`.
    #[arg(long, default_value = "1", value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: Complex64,
    #[arg(long, default_value_t = DEFAULT_CUTOFF)]
    pub cutoff: usize,
    /// Optional directory for `oracle.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    s.parse::<Complex64>().map_err(|e| format!("not a complex number: {s} ({e:?})"))
}

/// Parses arguments and runs; returns the process exit code.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Entropy(a) => cmd_entropy(&a),
        Command::Validate(a) => cmd_validate(&a),
        Command::Oracle(a) => cmd_oracle(&a),
        Command::Sweep(a) => cmd_sweep(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::Csv(_) => EXIT_FAILED,
                _ => EXIT_INVALID,
            }
        }
    }
}

fn load(args: &RunArgs) -> Result<Scenario> {
    ScenarioConfig::from_path(&args.config)?.validate(args.grid_scale)
}

fn output_path(dir: &Path, name: Option<&str>, default: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    Ok(dir.join(name.unwrap_or(default)))
}

fn reports_for(
    charge: &TimeZeroCharge,
    mass: f64,
    grid: Option<&MomentumGrid>,
    routes: &[Route],
    offset: f64,
) -> Result<Vec<EntropyReport>> {
    routes
        .iter()
        .map(|route| match (route, grid) {
            (Route::ClosedForm, _) => entropy_closed_form(charge, mass, offset),
            (Route::Momentum, Some(g)) => entropy_momentum(charge, g, offset),
            (Route::Momentum, None) => Err(Error::Config("the momentum route needs a grid".into())),
        })
        .collect()
}

#[derive(Serialize)]
struct EntropyOutput<'a> {
    schema: u32,
    dimension: usize,
    mass: f64,
    grid_scale: f64,
    reports: &'a [EntropyReport],
}

/// Offsets where both routes ran and disagree beyond `tolerance`.
fn disagreements(reports: &[EntropyReport], tolerance: f64) -> Vec<(f64, f64, f64)> {
    let mut out = Vec::new();
    for cf in reports.iter().filter(|r| r.route == Route::ClosedForm) {
        for mom in reports.iter().filter(|r| r.route == Route::Momentum && r.offset == cf.offset) {
            if (cf.total - mom.total).abs() > tolerance * cf.total.abs() {
                out.push((cf.offset, cf.total, mom.total));
            }
        }
    }
    out
}

pub fn cmd_entropy(args: &RunArgs) -> Result<i32> {
    let s = load(args)?;
    let cfg = &s.config;
    let per_offset = cfg
        .offsets
        .par_iter()
        .map(|&a| reports_for(&s.charge, cfg.mass, s.grid.as_ref(), &cfg.routes, a))
        .collect::<Result<Vec<_>>>()?;
    let reports: Vec<EntropyReport> = per_offset.into_iter().flatten().collect();

    let json = output_path(&args.out, cfg.output.json.as_deref(), "entropy.json")?;
    let csv = output_path(&args.out, cfg.output.csv.as_deref(), "entropy.csv")?;
    let doc = EntropyOutput {
        schema: config::SCHEMA_VERSION,
        dimension: cfg.dimension,
        mass: cfg.mass,
        grid_scale: s.grid_scale,
        reports: &reports,
    };
    write_json(&json, &doc)?;
    write_csv(&csv, &REPORT_COLUMNS, &reports.iter().map(report_row).collect::<Vec<_>>())?;

    for r in &reports {
        println!(
            "offset={} route={} total={:.10} error_estimate={:.3e}",
            r.offset,
            r.route.as_str(),
            r.total,
            r.error_estimate
        );
    }
    let bad = disagreements(&reports, cfg.tolerance);
    for (a, cf, mom) in &bad {
        eprintln!(
            "route disagreement at offset {a}: closed form {cf:.10}, momentum {mom:.10}, relative {:.3e} > {}",
            (cf - mom).abs() / cf.abs(),
            cfg.tolerance
        );
    }
    Ok(if bad.is_empty() { EXIT_OK } else { EXIT_DISAGREEMENT })
}

pub fn cmd_validate(args: &ValidateArgs) -> Result<i32> {
    let s = load(&args.run)?;
    let results = run_suite(&s, args.seed)?;
    let path = output_path(&args.run.out, None, "validate.json")?;
    write_json(&path, &results)?;
    let mut failed = false;
    for r in &results {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => {
                failed = true;
                "FAIL"
            }
            Status::Skipped => "SKIP",
        };
        match (r.residual, r.threshold) {
            (Some(res), Some(t)) => println!("{tag} {} residual={res:.3e} threshold={t:.1e} ({})", r.name, r.detail),
            _ => println!("{tag} {} ({})", r.name, r.detail),
        }
    }
    Ok(if failed { EXIT_FAILED } else { EXIT_OK })
}

#[derive(Serialize)]
struct OracleOutput {
    lambda: f64,
    z_re: f64,
    z_im: f64,
    cutoff: usize,
    vector_entropy: f64,
    araki_fock: f64,
    closed_form: f64,
    residual_vector_araki: f64,
    residual_vector_closed: f64,
    residual_araki_closed: f64,
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<i32> {
    let (lambda, z) = (args.lambda, args.z);
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::InvalidArgument(format!("lambda must lie in (0, 1), got {lambda}")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument("z must be finite".into()));
    }
    let k = subspace_from_modular_data(&[lambda])?;
    let h = paired_vector(&[lambda], &[z])?;
    let vector = vector_entropy(&k, &h)?;
    let closed = paired_entropy_closed_form(lambda, z);
    println!("vector_entropy = {vector:.12}");
    println!("closed_form    = {closed:.12}");
    let araki = coherent_araki_entropy(lambda, z, args.cutoff)?;
    println!("araki_fock     = {araki:.12}");
    let out = OracleOutput {
        lambda,
        z_re: z.re,
        z_im: z.im,
        cutoff: args.cutoff,
        vector_entropy: vector,
        araki_fock: araki,
        closed_form: closed,
        residual_vector_araki: (vector - araki).abs(),
        residual_vector_closed: (vector - closed).abs(),
        residual_araki_closed: (araki - closed).abs(),
    };
    println!("residual vector-araki = {:.3e}", out.residual_vector_araki);
    println!("residual vector-closed = {:.3e}", out.residual_vector_closed);
    println!("residual araki-closed = {:.3e}", out.residual_araki_closed);
    if let Some(dir) = &args.out {
        write_json(&output_path(dir, None, "oracle.json")?, &out)?;
    }
    let worst = out.residual_vector_araki.max(out.residual_vector_closed).max(out.residual_araki_closed);
    Ok(if worst < ORACLE_TOLERANCE { EXIT_OK } else { EXIT_FAILED })
}

pub const SWEEP_COLUMNS: [&str; 9] =
    ["parameter", "value", "offset", "route", "field_term", "momentum_bulk", "boundary_term", "total", "error_estimate"];

pub fn cmd_sweep(args: &RunArgs) -> Result<i32> {
    let s = load(args)?;
    let cfg = &s.config;
    let sweep = cfg.sweep.as_ref().ok_or_else(|| Error::Config("sweep needs a \"sweep\" section".into()))?;
    let points = sweep
        .values
        .par_iter()
        .map(|&v| {
            let (charge, mass, grid) = match sweep.parameter {
                SweepParameter::CenterX1 => (recentered(&s.charge, v), cfg.mass, s.grid),
                SweepParameter::Mass => (s.charge.clone(), v, s.grid_for_mass(v)?),
            };
            let mut reports = Vec::new();
            for &a in &cfg.offsets {
                reports.extend(reports_for(&charge, mass, grid.as_ref(), &cfg.routes, a)?);
            }
            Ok((v, reports))
        })
        .collect::<Result<Vec<_>>>()?;

    let name = sweep.parameter.as_str();
    let mut rows = Vec::new();
    for (v, reports) in &points {
        for r in reports {
            let mut row = vec![name.to_string(), output::csv_number(*v)];
            row.extend(report_row(r));
            rows.push(row);
        }
    }
    let csv = output_path(&args.out, cfg.output.csv.as_deref(), "sweep.csv")?;
    write_csv(&csv, &SWEEP_COLUMNS, &rows)?;
    if let Some(json) = cfg.output.json.as_deref() {
        #[derive(Serialize)]
        struct Point<'a> {
            value: f64,
            reports: &'a [EntropyReport],
        }
        let doc: Vec<Point> = points.iter().map(|(v, r)| Point { value: *v, reports: r }).collect();
        write_json(&output_path(&args.out, Some(json), "")?, &doc)?;
    }
    println!("{} rows written to {}", rows.len(), csv.display());
    Ok(EXIT_OK)
}
