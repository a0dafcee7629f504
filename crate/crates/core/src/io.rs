//! Run configuration and machine-readable output.
//!
//! JSON numbers are written with 17 significant digits so every `f64`
//! parses back to the same bits.

use std::io::Write;
use std::path::PathBuf;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::bicentric::BicentricPair;
use crate::error::{Error, Result};
use crate::geometry::Polygon;
use crate::invariants::{Family, Measurement, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Solve,
    Sweep,
    Convert,
    Render,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Svg,
}

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_SAMPLES: usize = 256;
pub const DEFAULT_RHO: f64 = 1.0;

/// Everything a command needs; built by the CLI front end.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub n: u32,
    pub tau: u32,
    #[serde(rename = "R")]
    pub outer_radius: f64,
    pub d: f64,
    pub rho: f64,
    pub samples: usize,
    pub tol: f64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    /// Family parameter for `render`.
    pub u: f64,
    pub families: Vec<Family>,
    pub measurements: Vec<Measurement>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            n: 3,
            tau: 1,
            outer_radius: 2.0,
            d: 1.0,
            rho: DEFAULT_RHO,
            samples: DEFAULT_SAMPLES,
            tol: DEFAULT_TOL,
            output_path: None,
            format: Format::Json,
            u: 0.0,
            families: Vec::new(),
            measurements: Vec::new(),
        }
    }
}

struct Sig17;

impl serde_json::ser::Formatter for Sig17 {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()> {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Compact JSON with 17 significant digits per number.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Io(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    #[serde(rename = "R")]
    pub outer_radius: f64,
    pub r: f64,
    pub d: f64,
    #[serde(rename = "N")]
    pub n: u32,
    pub tau: u32,
}

impl From<&BicentricPair> for PairRecord {
    fn from(pair: &BicentricPair) -> Self {
        Self {
            outer_radius: pair.outer_radius(),
            r: pair.inner_radius(),
            d: pair.offset(),
            n: pair.n(),
            tau: pair.tau(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonRecord {
    pub u: f64,
    pub vertices: Vec<[f64; 2]>,
}

impl PolygonRecord {
    pub fn new(u: f64, polygon: &Polygon) -> Self {
        Self {
            u,
            vertices: polygon.vertices().iter().map(|p| [p.x, p.y]).collect(),
        }
    }
}

/// Top-level JSON document of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunDocument {
    pub family: Family,
    pub pair: PairRecord,
    pub rho: f64,
    pub polygons: Vec<PolygonRecord>,
    pub reports: Vec<SweepReport>,
}

pub const CSV_HEADER: [&str; 4] = ["u", "measurement_id", "value", "excluded_flag"];

/// Per-sample rows in grid order, then one `#` summary line per report.
pub fn to_csv(reports: &[SweepReport]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    writer.write_record(CSV_HEADER).map_err(io)?;
    for report in reports {
        let id = report.measurement.id();
        let mut rows: Vec<(f64, Option<f64>)> = report
            .u_grid
            .iter()
            .zip(&report.values)
            .map(|(&u, &v)| (u, Some(v)))
            .chain(report.excluded.iter().map(|&u| (u, None)))
            .collect();
        rows.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (u, v) in rows {
            let value = v.map_or(String::new(), |v| format!("{v:.16e}"));
            let flag = if v.is_some() { "0" } else { "1" };
            writer
                .write_record([format!("{u:.16e}").as_str(), id, &value, flag])
                .map_err(io)?;
        }
    }
    let mut out = String::from_utf8(writer.into_inner().map_err(|e| Error::Io(e.to_string()))?)
        .map_err(|e| Error::Io(e.to_string()))?;
    for r in reports {
        out.push_str(&format!(
            "# {} family={} samples={} excluded={} min={:.16e} max={:.16e} mean={:.16e} spread_rel={:.16e}\n",
            r.measurement.id(),
            r.family.id(),
            r.samples,
            r.excluded.len(),
            r.min,
            r.max,
            r.mean,
            r.spread_rel
        ));
    }
    Ok(out)
}
