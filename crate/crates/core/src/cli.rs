//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing claim, 2 on
//! usage, solver or I/O errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bicentric::{poncelet_solve, tangency_residual, BicentricPair, CirclePair};
use crate::derived::{
    bicentric_from_confocal, confocal_ellipses_from_bicentric, confocal_hyperbolas_from_bicentric,
    ConfocalImage, ConfocalPair,
};
use crate::error::{Error, Result};
use crate::invariants::{sweep, verify, Family, Measurement, VerifyConfig};
use crate::io::{
    to_csv, to_json, Command, Format, PairRecord, PolygonRecord, RunConfig, RunDocument,
    DEFAULT_RHO, DEFAULT_SAMPLES, DEFAULT_TOL,
};
use crate::svg::{render, DEFAULT_FAMILIES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "poncelet",
    version,
    about = "Bicentric Poncelet families and their invariants"
)]
struct Cli {
    /// Verification tolerance.
    #[arg(long, global = true, env = "PONCELET_TOL", default_value_t = DEFAULT_TOL)]
    tol: f64,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Number of vertices.
    #[arg(long)]
    n: u32,
    /// Winding number.
    #[arg(long, default_value_t = 1)]
    tau: u32,
    /// Outer radius.
    #[arg(long = "R")]
    outer_radius: f64,
    /// Distance between the centres.
    #[arg(long)]
    d: f64,
    /// Polarity and inversion radius.
    #[arg(long, default_value_t = DEFAULT_RHO)]
    rho: f64,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Solve for the inner radius closing an (N, tau) family.
    Solve {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Measure a family over one period of the parameter.
    Sweep {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "bicentric")]
        family: Family,
        #[arg(long = "measurement", value_enum, num_args = 1.., default_values = ["perimeter", "sum_of_cosines"])]
        measurements: Vec<Measurement>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Convert between a circle pair and its confocal conic pair.
    Convert(ConvertArgs),
    /// Draw the families at one parameter value as SVG.
    Render {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        u: f64,
        #[arg(long, value_enum, value_delimiter = ',')]
        families: Vec<Family>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the verification suite and print one verdict per claim.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Only families with this many vertices.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_RHO)]
        rho: f64,
    },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("circles").args(["outer_radius", "r", "d"]).multiple(true))]
#[command(group = clap::ArgGroup::new("conics").args(["a", "b", "a_prime", "b_prime"]).multiple(true).conflicts_with("circles"))]
struct ConvertArgs {
    #[arg(long = "R", requires_all = ["r", "d"])]
    outer_radius: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    d: Option<f64>,
    #[arg(long, requires_all = ["b", "a_prime", "b_prime"])]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    a_prime: Option<f64>,
    #[arg(long)]
    b_prime: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_RHO)]
    rho: f64,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Output of `solve`.
#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub pair: PairRecord,
    pub k: f64,
    #[serde(rename = "K")]
    pub quarter_period: f64,
    pub sigma: f64,
    pub l1: [f64; 2],
    pub l2: [f64; 2],
    /// Largest `|p_{j+N}(u) − p_j(u)| / R` on the probe grid.
    pub closure_residual: f64,
    pub tangency_residual: f64,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum Converted {
    FromCircles {
        ellipses: ConfocalPair,
        hyperbolas: Option<ConfocalPair>,
    },
    FromConics(ConfocalImage),
}

fn config_for(command: Command, tol: f64, pair: &PairArgs) -> RunConfig {
    RunConfig {
        n: pair.n,
        tau: pair.tau,
        outer_radius: pair.outer_radius,
        d: pair.d,
        rho: pair.rho,
        tol,
        ..RunConfig::new(command)
    }
}

fn solve_pair(cfg: &RunConfig) -> Result<BicentricPair> {
    poncelet_solve(cfg.outer_radius, cfg.d, cfg.n, cfg.tau)
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn cmd_solve(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let pair = solve_pair(cfg)?;
    let mut closure: f64 = 0.0;
    let mut tangency: f64 = 0.0;
    for i in 0..16 {
        let u = 4.0 * pair.quarter_period() * i as f64 / 16.0;
        for j in 0..pair.n() as isize {
            let gap = pair
                .vertex(u, j + pair.n() as isize)?
                .dist(pair.vertex(u, j)?);
            closure = closure.max(gap / pair.outer_radius());
        }
        tangency = tangency.max(tangency_residual(pair.circles(), &pair.vertices(u)?));
    }
    let report = SolveReport {
        pair: (&pair).into(),
        k: pair.k(),
        quarter_period: pair.quarter_period(),
        sigma: pair.sigma(),
        l1: [pair.l1().x, pair.l1().y],
        l2: [pair.l2().x, pair.l2().y],
        closure_residual: closure,
        tangency_residual: tangency,
    };
    emit(&(to_json(&report)? + "\n"), cfg.output_path.as_ref(), out)?;
    Ok(EXIT_OK)
}

pub fn cmd_sweep(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let pair = solve_pair(cfg)?;
    let family = *cfg
        .families
        .first()
        .ok_or_else(|| Error::Usage("sweep needs a family".into()))?;
    let reports = sweep(family, &pair, cfg.rho, &cfg.measurements, cfg.samples)?;
    let text = match cfg.format {
        Format::Csv => to_csv(&reports)?,
        Format::Json => {
            let polygons = [0.0]
                .iter()
                .filter_map(|&u| {
                    crate::invariants::family_polygon(family, &pair, u, cfg.rho)
                        .ok()
                        .map(|p| PolygonRecord::new(u, &p))
                })
                .collect();
            let doc = RunDocument {
                family,
                pair: (&pair).into(),
                rho: cfg.rho,
                polygons,
                reports,
            };
            to_json(&doc)? + "\n"
        }
        Format::Svg => return Err(Error::Usage("sweep writes json or csv".into())),
    };
    emit(&text, cfg.output_path.as_ref(), out)?;
    Ok(EXIT_OK)
}

pub fn cmd_render(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let pair = solve_pair(cfg)?;
    let families = if cfg.families.is_empty() {
        DEFAULT_FAMILIES.to_vec()
    } else {
        cfg.families.clone()
    };
    let svg = render(&pair, cfg.u, cfg.rho, &families)?;
    emit(&svg, cfg.output_path.as_ref(), out)?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(cfg: &RunConfig, only_n: Option<u32>, out: &mut dyn Write) -> Result<i32> {
    let verdicts = verify(&VerifyConfig {
        tol: cfg.tol,
        samples: cfg.samples,
        rho: cfg.rho,
        n: only_n,
    })?;
    for v in &verdicts {
        let relation = if v.witness { ">" } else { "<" };
        writeln!(
            out,
            "{:<4} {:<32} {:.3e} {relation} {:.1e}",
            if v.holds { "ok" } else { "FAIL" },
            v.claim,
            v.spread_rel,
            v.tolerance
        )?;
    }
    match verdicts.iter().find(|v| !v.holds) {
        Some(v) => {
            writeln!(out, "first failing claim: {}", v.claim)?;
            Ok(EXIT_VERIFY_FAILED)
        }
        None => {
            writeln!(out, "{} claims verified", verdicts.len())?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_convert(args: &ConvertArgs, out: &mut dyn Write) -> Result<i32> {
    let converted = match (
        args.outer_radius,
        args.r,
        args.d,
        args.a,
        args.b,
        args.a_prime,
        args.b_prime,
    ) {
        (Some(big_r), Some(r), Some(d), ..) => {
            let circles = CirclePair::new(big_r, r, d)?;
            Converted::FromCircles {
                ellipses: confocal_ellipses_from_bicentric(circles, args.rho)?,
                hyperbolas: confocal_hyperbolas_from_bicentric(circles, args.rho).ok(),
            }
        }
        (.., Some(a), Some(b), Some(ap), Some(bp)) => {
            Converted::FromConics(bicentric_from_confocal(a, b, ap, bp, args.rho)?)
        }
        _ => {
            return Err(Error::Usage(
                "convert needs either --R --r --d or --a --b --a-prime --b-prime".into(),
            ))
        }
    };
    emit(&(to_json(&converted)? + "\n"), args.output.as_ref(), out)?;
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to stderr. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let tol = cli.tol;
    let result = match &cli.command {
        Sub::Solve { pair, output } => {
            let cfg = RunConfig {
                output_path: output.clone(),
                ..config_for(Command::Solve, tol, pair)
            };
            cmd_solve(&cfg, out)
        }
        Sub::Sweep {
            pair,
            family,
            measurements,
            samples,
            format,
            output,
        } => {
            let cfg = RunConfig {
                families: vec![*family],
                measurements: measurements.clone(),
                samples: *samples,
                format: *format,
                output_path: output.clone(),
                ..config_for(Command::Sweep, tol, pair)
            };
            cmd_sweep(&cfg, out)
        }
        Sub::Convert(args) => cmd_convert(args, out),
        Sub::Render {
            pair,
            u,
            families,
            output,
        } => {
            let cfg = RunConfig {
                u: *u,
                families: families.clone(),
                format: Format::Svg,
                output_path: output.clone(),
                ..config_for(Command::Render, tol, pair)
            };
            cmd_render(&cfg, out)
        }
        Sub::Verify { samples, n, rho } => {
            let cfg = RunConfig {
                samples: *samples,
                rho: *rho,
                tol,
                ..RunConfig::new(Command::Verify)
            };
            cmd_verify(&cfg, *n, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}
