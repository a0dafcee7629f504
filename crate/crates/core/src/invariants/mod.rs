//! Measurements on polygons, closed-form values for the triangle and
//! quadrilateral families, and the sweep harness that certifies invariance.

mod suite;
mod sweep;

pub use suite::{
    conjecture1_harness, is_negative_control, suite_pairs, verify, VerifyConfig, OFFSETS,
    OUTER_RADIUS, PERIODS,
};
pub use sweep::{
    family_polygon, sweep, Family, InvariantVerdict, Measurement, SweepReport, SPREAD_FLOOR,
};

use serde::Serialize;

use crate::bicentric::BicentricPair;
use crate::derived::LimitingPoint;
use crate::error::{Error, Result};
use crate::geometry::{Conic, ConicKind, Point, Polygon};

/// Largest normalized conic residual accepted for a table vertex.
const TABLE_TOL: f64 = 1e-8;

pub fn perimeter(polygon: &Polygon) -> f64 {
    polygon.sides().map(|(p, q)| p.dist(q)).sum()
}

/// Perimeter in which a side joining the two branches of `table` counts
/// negatively.
pub fn signed_perimeter(polygon: &Polygon, table: &Conic) -> Result<f64> {
    if table.kind != ConicKind::Hyperbola {
        return Err(Error::Usage(
            "signed perimeter needs a hyperbolic table".into(),
        ));
    }
    for (index, &p) in polygon.vertices().iter().enumerate() {
        let residual = table.residual(p);
        if !(residual < TABLE_TOL) {
            return Err(Error::OffTable { index, residual });
        }
    }
    Ok(polygon
        .sides()
        .map(|(p, q)| table.branch(p) * table.branch(q) * p.dist(q))
        .sum())
}

/// `Σ cos θ_j` from the edge vectors at each vertex; valid for star polygons.
pub fn sum_of_cosines(polygon: &Polygon) -> Result<f64> {
    let mut total = 0.0;
    for j in 0..polygon.len() as isize {
        let p = polygon.vertex(j);
        let u = polygon.vertex(j - 1) - p;
        let v = polygon.vertex(j + 1) - p;
        let norms = u.norm() * v.norm();
        if !(norms > 0.0) {
            return Err(Error::DegenerateSide(
                j.rem_euclid(polygon.len() as isize) as usize
            ));
        }
        total += u.dot(v) / norms;
    }
    Ok(total)
}

/// `S(u) = −Σ (cn(u_{j+1}) cn(u_{j−1}) + sn(u_{j+1}) sn(u_{j−1}))`.
pub fn sum_of_cosines_jacobi(pair: &BicentricPair, u: f64) -> Result<f64> {
    let ell = pair.elliptic();
    let mut total = 0.0;
    for j in 0..pair.n() as isize {
        let next = ell.sn_cn_dn(pair.argument(u, j + 1))?;
        let prev = ell.sn_cn_dn(pair.argument(u, j - 1))?;
        total -= next.cn * prev.cn + next.sn * prev.sn;
    }
    Ok(total)
}

/// Side lengths of the pedal polygon with respect to a limiting point from
/// the Jacobi functions alone.
///
/// Vertex `j` of the bicentric polygon contributes
/// `s_j = |p_{j−1} p_{j+1}| · |p_j − ℓ| / (2R)`, with the chord equal to
/// `2R |sn(u_{j+1}) cn(u_{j−1}) − sn(u_{j−1}) cn(u_{j+1})|` and the distance
/// equal to `(2/k) √(−δR) dn(u_j)`, where `ℓ = (δ, 0)`. Entry `j` of the
/// result is the pedal side from foot `j` to foot `j + 1`, i.e. `s_{j+1}`.
pub fn pedal_sides_closed_form(
    pair: &BicentricPair,
    u: f64,
    which: LimitingPoint,
) -> Result<Vec<f64>> {
    let big_r = pair.outer_radius();
    let delta = which.of(pair).x;
    let radicand = -delta * big_r;
    if !(radicand >= 0.0) {
        return Err(Error::Domain {
            what: "-delta R",
            value: radicand,
            domain: "[0, inf)",
        });
    }
    let scale = 2.0 / pair.k() * radicand.sqrt();
    let ell = pair.elliptic();
    (1..=pair.n() as isize)
        .map(|j| {
            let prev = ell.sn_cn_dn(pair.argument(u, j - 1))?;
            let here = ell.sn_cn_dn(pair.argument(u, j))?;
            let next = ell.sn_cn_dn(pair.argument(u, j + 1))?;
            let chord = 2.0 * big_r * (next.sn * prev.cn - prev.sn * next.cn).abs();
            Ok(chord * scale * here.dn / (2.0 * big_r))
        })
        .collect()
}

/// Gergonne point: barycentrics `1/(s − a) : 1/(s − b) : 1/(s − c)`.
pub fn gergonne_point(triangle: &Polygon) -> Result<Point> {
    if triangle.len() != 3 {
        return Err(Error::Usage(format!(
            "Gergonne point needs a triangle, got {} vertices",
            triangle.len()
        )));
    }
    let [pa, pb, pc] = [triangle.vertex(0), triangle.vertex(1), triangle.vertex(2)];
    let (a, b, c) = (pb.dist(pc), pc.dist(pa), pa.dist(pb));
    let s = 0.5 * (a + b + c);
    let gaps = [s - a, s - b, s - c];
    let scale = a.max(b).max(c);
    if gaps.iter().any(|&g| !(g > 1e-12 * scale))
        || (pb - pa).cross(pc - pa).abs() <= 1e-12 * scale * scale
    {
        return Err(Error::DegenerateTriangle);
    }
    let w = gaps.map(f64::recip);
    let total = w[0] + w[1] + w[2];
    Ok((pa * w[0] + pb * w[1] + pc * w[2]) * (1.0 / total))
}

/// Closed-form values for the triangle family whose billiard table has
/// semi-axes `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct N3Closed {
    /// Perimeter of the focus-inversive triangle, equal to the ℓ₁-pedal perimeter.
    pub l_dagger: f64,
    /// Sum of cosines shared by the bicentric triangle and both pedals.
    pub sum_cos: f64,
    /// Distance of the ℓ₁-pedal Gergonne point from the table centre, on
    /// the side of the focus opposite to ℓ₁.
    pub x7_1: f64,
}

/// Closed-form values for the quadrilateral family with table `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct N4Closed {
    /// Perimeter of the billiard quadrilateral, `4√(a² + b²)`.
    pub billiard_perimeter: f64,
    /// Perimeter of the focus-inversive quadrilateral and of the ℓ₁-pedal,
    /// `ρ² · 4√(a² + b²)/b²`.
    pub l_dagger: f64,
    /// Perimeter of the ℓ₂-pedal, `ρ² · 4a²/(b² c)`.
    pub l_minus: f64,
    pub sum_cos_bicentric: f64,
    pub sum_cos_l2_pedal: f64,
}

fn table_axes(a: f64, b: f64) -> Result<(f64, f64)> {
    if !(b > 0.0 && a > b && a.is_finite()) {
        return Err(Error::Domain {
            what: "a - b (round tables have c = 0)",
            value: a - b,
            domain: "(0, inf) with b > 0",
        });
    }
    let c2 = a * a - b * b;
    Ok((c2.sqrt(), (a.powi(4) - a * a * b * b + b.powi(4)).sqrt()))
}

pub fn n3_closed_invariants(a: f64, b: f64, rho: f64) -> Result<N3Closed> {
    let (c, delta) = table_axes(a, b)?;
    let (a2, b2, c2, rho2) = (a * a, b * b, c * c, rho * rho);
    let radicand = (8.0 * a2 * a2 + 4.0 * a2 * b2 + 2.0 * b2 * b2) * delta
        + 8.0 * a2 * a2 * a2
        + 3.0 * a2 * b2 * b2
        + 2.0 * b2 * b2 * b2;
    Ok(N3Closed {
        l_dagger: rho2 * radicand.sqrt() / (a2 * b2),
        sum_cos: delta * (a2 + c2 - delta) / (a2 * c2),
        x7_1: c * (1.0 - rho2 / (delta + c2)),
    })
}

pub fn n4_closed_invariants(a: f64, b: f64, rho: f64) -> Result<N4Closed> {
    let (c, _) = table_axes(a, b)?;
    let rho2 = rho * rho;
    let diag = (a * a + b * b).sqrt();
    Ok(N4Closed {
        billiard_perimeter: 4.0 * diag,
        l_dagger: rho2 * 4.0 * diag / (b * b),
        l_minus: rho2 * 4.0 * a * a / (b * b * c),
        sum_cos_bicentric: 0.0,
        sum_cos_l2_pedal: 4.0,
    })
}

/// Sum of cosines of a bicentric triangle, `1 + r/R = (3R² − d²)/(2R²)`.
pub fn n3_sum_of_cosines(outer_radius: f64, offset: f64) -> f64 {
    (3.0 * outer_radius * outer_radius - offset * offset) / (2.0 * outer_radius * outer_radius)
}

/// Triangle-family pedal perimeters written in `(R, d)` as displayed, for
/// `ρ = 1`: `(focal, non-focal)`.
pub fn n3_pedal_perimeters_display(outer_radius: f64, offset: f64) -> (f64, f64) {
    let (r2, d2) = (outer_radius * outer_radius, offset * offset);
    let beta = r2 - d2;
    let root = beta.powf(1.5) * (9.0 * r2 - d2).sqrt();
    let tail = 3.0 * r2 * r2 + 6.0 * r2 * d2 - d2 * d2;
    let front = (9.0 * r2 - d2) * beta * std::f64::consts::SQRT_2 / (16.0 * r2 * r2 * offset);
    (front * (tail - root).sqrt(), front * (tail + root).sqrt())
}

/// The second displayed Gergonne abscissa, written in `(R, d)`.
pub fn n3_x7_display(outer_radius: f64, offset: f64) -> f64 {
    let (r2, d2) = (outer_radius * outer_radius, offset * offset);
    let beta = r2 - d2;
    beta * (beta.powf(1.5) * (9.0 * r2 - d2).sqrt() + 3.0 * r2 * r2 + 6.0 * r2 * d2 - d2 * d2)
        / (16.0 * r2 * r2 * offset)
}
