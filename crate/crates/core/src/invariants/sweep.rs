use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{gergonne_point, perimeter, signed_perimeter, sum_of_cosines};
use crate::bicentric::BicentricPair;
use crate::derived::{
    billiard_polygon, confocal_hyperbolas_from_bicentric, focus_inversive,
    hyperbolic_billiard_polygon, limiting_pedal, LimitingPoint,
};
use crate::error::{Error, Result};
use crate::geometry::{collinearity_residual, Conic, Polygon};

/// Guard for the relative spread denominator.
pub const SPREAD_FLOOR: f64 = 1e-30;

/// Below this `|mean|` invariance is judged on the absolute spread.
const NEAR_ZERO_MEAN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Family {
    Bicentric,
    Billiard,
    Hyperbolic,
    PedalL1,
    PedalL2,
    FocusInversive,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Bicentric,
        Family::Billiard,
        Family::Hyperbolic,
        Family::PedalL1,
        Family::PedalL2,
        Family::FocusInversive,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::Bicentric => "bicentric",
            Family::Billiard => "billiard",
            Family::Hyperbolic => "hyperbolic",
            Family::PedalL1 => "pedal_l1",
            Family::PedalL2 => "pedal_l2",
            Family::FocusInversive => "focus_inversive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Measurement {
    Perimeter,
    /// Hyperbolic family only.
    SignedPerimeter,
    SumOfCosines,
    Collinearity,
    /// Triangles only.
    GergonneX,
    /// Triangles only.
    GergonneY,
}

impl Measurement {
    pub fn id(self) -> &'static str {
        match self {
            Measurement::Perimeter => "perimeter",
            Measurement::SignedPerimeter => "signed_perimeter",
            Measurement::SumOfCosines => "sum_of_cosines",
            Measurement::Collinearity => "collinearity",
            Measurement::GergonneX => "gergonne_x",
            Measurement::GergonneY => "gergonne_y",
        }
    }

    fn eval(self, polygon: &Polygon, table: Option<&Conic>) -> Result<f64> {
        match self {
            Measurement::Perimeter => Ok(perimeter(polygon)),
            Measurement::SignedPerimeter => signed_perimeter(
                polygon,
                table.ok_or(Error::Usage(
                    "signed_perimeter needs the hyperbolic family".into(),
                ))?,
            ),
            Measurement::SumOfCosines => sum_of_cosines(polygon),
            Measurement::Collinearity => Ok(collinearity_residual(polygon)),
            Measurement::GergonneX => gergonne_point(polygon).map(|p| p.x),
            Measurement::GergonneY => gergonne_point(polygon).map(|p| p.y),
        }
    }
}

/// One polygon of `family` at parameter `u`.
pub fn family_polygon(family: Family, pair: &BicentricPair, u: f64, rho: f64) -> Result<Polygon> {
    match family {
        Family::Bicentric => pair.vertices(u),
        Family::Billiard => billiard_polygon(pair, u, rho),
        Family::Hyperbolic => hyperbolic_billiard_polygon(pair, u, rho),
        Family::PedalL1 => limiting_pedal(pair, u, LimitingPoint::L1),
        Family::PedalL2 => limiting_pedal(pair, u, LimitingPoint::L2),
        Family::FocusInversive => focus_inversive(&billiard_polygon(pair, u, rho)?, pair.l1(), rho),
    }
}

/// Statistics of one measurement over a uniform grid in `u`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub measurement: Measurement,
    pub family: Family,
    pub samples: usize,
    /// Parameters of the admissible samples, aligned with `values`.
    pub u_grid: Vec<f64>,
    pub values: Vec<f64>,
    /// Grid points at which the polygon or the measurement was undefined.
    pub excluded: Vec<f64>,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    /// `(max − min) / max(|mean|, SPREAD_FLOOR)`.
    pub spread_rel: f64,
}

impl SweepReport {
    fn from_samples(
        measurement: Measurement,
        family: Family,
        points: Vec<(f64, Option<f64>)>,
    ) -> Self {
        let (mut u_grid, mut values, mut excluded) = (Vec::new(), Vec::new(), Vec::new());
        for (u, v) in points {
            match v {
                Some(v) if v.is_finite() => {
                    u_grid.push(u);
                    values.push(v);
                }
                _ => excluded.push(u),
            }
        }
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let (mean, spread_rel) = if values.is_empty() {
            (f64::NAN, f64::NAN)
        } else {
            // offsets from the minimum keep the mean inside [min, max]
            let lift = values.iter().map(|v| v - min).sum::<f64>() / values.len() as f64;
            let mean = (min + lift).min(max);
            (mean, (max - min) / mean.abs().max(SPREAD_FLOOR))
        };
        Self {
            measurement,
            family,
            samples: values.len(),
            u_grid,
            values,
            excluded,
            min,
            max,
            mean,
            spread_rel,
        }
    }

    pub fn spread_abs(&self) -> f64 {
        self.max - self.min
    }

    /// The relative spread, or the absolute one when the mean is near zero.
    pub fn invariance_spread(&self) -> f64 {
        if self.mean.abs() < NEAR_ZERO_MEAN {
            self.spread_abs()
        } else {
            self.spread_rel
        }
    }
}

/// Evaluates each measurement on `samples` grid points spanning one period
/// `[0, 2K/N)` of the family. Output order follows `measurements`, and
/// values follow the grid regardless of how the work was scheduled.
pub fn sweep(
    family: Family,
    pair: &BicentricPair,
    rho: f64,
    measurements: &[Measurement],
    samples: usize,
) -> Result<Vec<SweepReport>> {
    if samples < 16 {
        return Err(Error::Usage(format!(
            "sweep needs at least 16 samples, got {samples}"
        )));
    }
    let table = match family {
        Family::Hyperbolic => Some(confocal_hyperbolas_from_bicentric(pair, rho)?.outer),
        _ => None,
    };
    if table.is_none() && measurements.contains(&Measurement::SignedPerimeter) {
        return Err(Error::Usage(format!(
            "signed_perimeter is defined for the hyperbolic family, not {}",
            family.id()
        )));
    }
    let period = pair.family_period();
    let rows: Vec<(f64, Vec<Option<f64>>)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let u = period * i as f64 / samples as f64;
            let values = match family_polygon(family, pair, u, rho) {
                Ok(poly) => measurements
                    .iter()
                    .map(|m| m.eval(&poly, table.as_ref()).ok())
                    .collect(),
                Err(_) => vec![None; measurements.len()],
            };
            (u, values)
        })
        .collect();
    Ok(measurements
        .iter()
        .enumerate()
        .map(|(k, &m)| {
            let points = rows.iter().map(|(u, vals)| (*u, vals[k])).collect();
            SweepReport::from_samples(m, family, points)
        })
        .collect())
}

/// Outcome of checking one claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantVerdict {
    pub claim: String,
    pub holds: bool,
    /// The observed spread or residual.
    pub spread_rel: f64,
    pub tolerance: f64,
    /// When set, the claim is a non-invariance witness and holds when the
    /// spread exceeds the tolerance.
    pub witness: bool,
}

impl InvariantVerdict {
    pub fn below(claim: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Self {
            claim: claim.into(),
            holds: value < tolerance,
            spread_rel: value,
            tolerance,
            witness: false,
        }
    }

    pub fn above(claim: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self {
            claim: claim.into(),
            holds: value > threshold,
            spread_rel: value,
            tolerance: threshold,
            witness: true,
        }
    }
}
