//! The four families derived from a bicentric family, and the conversions
//! between circle pairs and confocal conic pairs.
//!
//! Polar images are taken with respect to a circle of radius `ρ` centred at
//! a limiting point. The same `ρ` serves for polarity and inversion, which
//! makes the pedal polygon equal to the inverted polar polygon.

use serde::{Deserialize, Serialize};

use crate::bicentric::{BicentricPair, CirclePair};
use crate::error::{Error, Result};
use crate::frames::AxialMap;
use crate::geometry::{
    invert_point, pedal_polygon, polar_polygon, Circle, Conic, ConicKind, Point, Polygon,
};
use crate::roots::bisect;

/// Side-to-pole distance below which a hyperbolic billiard vertex is
/// treated as lying at infinity, relative to `R`.
pub const POLE_EXCLUSION_REL: f64 = 1e-4;

/// A table conic and its caustic, sharing foci.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfocalPair {
    pub outer: Conic,
    pub caustic: Conic,
    /// The focus at the polarity centre first.
    pub foci: (Point, Point),
    pub rho: f64,
}

impl ConfocalPair {
    /// `|c_outer² − c_caustic²|` relative to `c_outer²`.
    pub fn focal_mismatch(&self) -> f64 {
        let (c1, c2) = (self.outer.focal_sq(), self.caustic.focal_sq());
        (c1 - c2).abs() / c1.abs().max(f64::MIN_POSITIVE)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LimitingPoint {
    L1,
    L2,
}

impl LimitingPoint {
    pub fn of(self, pair: &BicentricPair) -> Point {
        match self {
            LimitingPoint::L1 => pair.l1(),
            LimitingPoint::L2 => pair.l2(),
        }
    }
}

/// Shared quantities of the inner-centred frame (inner circle at the
/// origin, outer at `(−d, 0)`).
struct InnerFrame {
    r: f64,
    big_r: f64,
    d: f64,
    delta: f64,
    /// `R² − d² − r²`
    kappa: f64,
    /// `R² + d² − r²`
    kappa_prime: f64,
}

impl InnerFrame {
    fn new(circles: &CirclePair) -> Result<Self> {
        let (big_r, r, d) = (
            circles.outer_radius(),
            circles.inner_radius(),
            circles.offset(),
        );
        let radicand = (d + big_r + r) * (big_r - d + r) * (big_r + d - r) * (big_r - d - r);
        if !(radicand > 0.0) {
            return Err(Error::IntersectingCircles(radicand));
        }
        Ok(Self {
            r,
            big_r,
            d,
            delta: radicand.sqrt(),
            kappa: big_r * big_r - d * d - r * r,
            kappa_prime: big_r * big_r + d * d - r * r,
        })
    }

    /// `κ − Δ`, from `(κ − Δ)(κ + Δ) = 4d²r²`.
    fn kappa_minus_delta(&self) -> f64 {
        4.0 * self.d * self.d * self.r * self.r / (self.kappa + self.delta)
    }

    /// `κ' − Δ`, from `(κ' − Δ)(κ' + Δ) = 4d²R²`.
    fn kappa_prime_minus_delta(&self) -> f64 {
        4.0 * self.d * self.d * self.big_r * self.big_r / (self.kappa_prime + self.delta)
    }

    /// External limiting point abscissa `(κ + Δ)/(2d)`.
    fn l2(&self) -> f64 {
        (self.kappa + self.delta) / (2.0 * self.d)
    }

    /// Internal limiting point abscissa; the two multiply to `r²`.
    fn l1(&self) -> f64 {
        self.r * self.r / self.l2()
    }

    fn to_canonical(&self) -> AxialMap {
        AxialMap::canonical_to_inner_centred(self.d).inverse()
    }
}

/// Polar images of the circles with respect to `circle(ℓ₁, ρ)`: the table
/// ellipse (from the inner circle) and its confocal caustic (from the outer
/// circle), in the canonical frame.
///
/// Concentric circles give two concentric circles, returned as ellipses
/// with `a = b`.
pub fn confocal_ellipses_from_bicentric(
    circles: impl AsRef<CirclePair>,
    rho: f64,
) -> Result<ConfocalPair> {
    let circles = circles.as_ref();
    check_rho(rho)?;
    let rho2 = rho * rho;
    if circles.offset() == 0.0 {
        let center = Point::ORIGIN;
        return Ok(ConfocalPair {
            outer: Conic::ellipse(
                center,
                rho2 / circles.inner_radius(),
                rho2 / circles.inner_radius(),
            )?,
            caustic: Conic::ellipse(
                center,
                rho2 / circles.outer_radius(),
                rho2 / circles.outer_radius(),
            )?,
            foci: (center, center),
            rho,
        });
    }
    let f = InnerFrame::new(circles)?;
    let (r, big_r, delta) = (f.r, f.big_r, f.delta);
    let c = rho2 * f.d / delta;
    let center_b = c + f.l1();
    let a = rho2 * (f.kappa + delta) / (2.0 * delta * r);
    let b = rho2 * ((f.kappa + delta) / (2.0 * delta)).sqrt() / r;
    let a_prime = rho2 * (f.kappa_prime + delta) / (2.0 * delta * big_r);
    let b_prime = rho2 * ((f.kappa_prime + delta) / (2.0 * delta)).sqrt() / big_r;
    let map = f.to_canonical();
    let center = Point::new(map.apply_x(center_b), 0.0);
    let focus = Point::new(map.apply_x(center_b - c), 0.0);
    Ok(ConfocalPair {
        outer: Conic::ellipse(center, a, b)?,
        caustic: Conic::ellipse(center, a_prime, b_prime)?,
        foci: (focus, center * 2.0 - focus),
        rho,
    })
}

/// Polar images of the circles with respect to `circle(ℓ₂, ρ)`: a pair of
/// confocal hyperbolas with transverse axis along x.
pub fn confocal_hyperbolas_from_bicentric(
    circles: impl AsRef<CirclePair>,
    rho: f64,
) -> Result<ConfocalPair> {
    let circles = circles.as_ref();
    check_rho(rho)?;
    if circles.offset() == 0.0 {
        return Err(Error::Concentric);
    }
    let rho2 = rho * rho;
    let f = InnerFrame::new(circles)?;
    let (r, big_r, delta) = (f.r, f.big_r, f.delta);
    let c = rho2 * f.d / delta;
    let center_b = f.l2() - c;
    let kmd = f.kappa_minus_delta();
    let kpmd = f.kappa_prime_minus_delta();
    let a = rho2 * kmd / (2.0 * delta * r);
    let b = rho2 * (kmd / (2.0 * delta)).sqrt() / r;
    let a_prime = rho2 * kpmd / (2.0 * delta * big_r);
    let b_prime = rho2 * (kpmd / (2.0 * delta)).sqrt() / big_r;
    let map = f.to_canonical();
    let center = Point::new(map.apply_x(center_b), 0.0);
    let focus = Point::new(map.apply_x(center_b + c), 0.0);
    Ok(ConfocalPair {
        outer: Conic::hyperbola(center, a, b)?,
        caustic: Conic::hyperbola(center, a_prime, b_prime)?,
        foci: (focus, center * 2.0 - focus),
        rho,
    })
}

fn check_rho(rho: f64) -> Result<()> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::Domain {
            what: "rho",
            value: rho,
            domain: "(0, inf)",
        });
    }
    Ok(())
}

/// Circle pair obtained as the polar image of an origin-centred confocal
/// ellipse pair with respect to `circle(f₁, ρ)`, `f₁ = (−c, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConfocalImage {
    /// The pair in the canonical frame.
    pub circles: CirclePair,
    /// Centre of the image of the table, in the confocal frame.
    pub inner_center: Point,
    /// Centre of the image of the caustic, in the confocal frame.
    pub outer_center: Point,
    /// Internal limiting point `(−c, 0)`, in the confocal frame.
    pub l1: Point,
    /// External limiting point `(−c + ρ²/c, 0)`, in the confocal frame.
    pub l2: Point,
    /// Confocal frame to canonical frame.
    pub to_canonical: AxialMap,
}

/// Inverse of [`confocal_ellipses_from_bicentric`] up to the frame: table
/// `(a, b)` and caustic `(a', b')` to the nested circle pair.
pub fn bicentric_from_confocal(
    a: f64,
    b: f64,
    a_prime: f64,
    b_prime: f64,
    rho: f64,
) -> Result<ConfocalImage> {
    check_rho(rho)?;
    for v in [a, b, a_prime, b_prime] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain {
                what: "semi-axis",
                value: v,
                domain: "(0, inf)",
            });
        }
    }
    let c2 = a * a - b * b;
    let c2_prime = a_prime * a_prime - b_prime * b_prime;
    if (c2 - c2_prime).abs() > 1e-10 * a * a {
        return Err(Error::NotConfocal {
            outer: c2,
            caustic: c2_prime,
        });
    }
    if c2 <= 0.0 {
        return Err(Error::Concentric);
    }
    let c = c2.sqrt();
    if !(a_prime > c && a_prime < a) {
        return Err(Error::NoNestedImage { a_prime, c });
    }
    let rho2 = rho * rho;
    let r = rho2 * a / (b * b);
    let big_r = rho2 * a_prime / (b_prime * b_prime);
    let inner_x = -c - rho2 * c / (b * b);
    let outer_x = -c - rho2 * c / (b_prime * b_prime);
    let circles = CirclePair::new(big_r, r, inner_x - outer_x)?;
    Ok(ConfocalImage {
        circles,
        inner_center: Point::new(inner_x, 0.0),
        outer_center: Point::new(outer_x, 0.0),
        l1: Point::new(-c, 0.0),
        l2: Point::new(-c + rho2 / c, 0.0),
        to_canonical: AxialMap {
            sign: -1.0,
            offset: outer_x,
        },
    })
}

/// The confocal ellipse pair `(a, b)`, `(a', b')` whose billiard
/// trajectories close after `n` bounces and `tau` turns, with its bicentric
/// image. The caustic is found by bisection on `λ = a² − a'² = b² − b'²`.
pub fn confocal_family(
    a: f64,
    b: f64,
    rho: f64,
    n: u32,
    tau: u32,
) -> Result<(ConfocalImage, BicentricPair)> {
    if !(a > b && b > 0.0) {
        return Err(Error::Domain {
            what: "a - b",
            value: a - b,
            domain: "(0, inf) with b > 0",
        });
    }
    let target = tau as f64 / n as f64;
    let image = |lambda: f64| {
        bicentric_from_confocal(a, b, (a * a - lambda).sqrt(), (b * b - lambda).sqrt(), rho)
    };
    let b2 = b * b;
    let residual = |lambda: f64| {
        image(lambda)
            .and_then(|img| img.circles.rotation_ratio())
            .map(|ratio| ratio - target)
            .unwrap_or(f64::NAN)
    };
    // Near λ = b² the image pair has k' below what the kernel resolves;
    // back off until the residual is finite.
    let hi = (2..=9)
        .rev()
        .map(|e| b2 * (1.0 - 10f64.powi(-e)))
        .find(|&hi| residual(hi).is_finite())
        .unwrap_or(0.99 * b2);
    let lambda = bisect(residual, 1e-9 * b2, hi)?;
    let img = image(lambda)?;
    let pair = BicentricPair::new(img.circles, n, tau)?;
    Ok((img, pair))
}

/// Elliptic billiard polygon: polar of the bicentric polygon with respect
/// to `circle(ℓ₁, ρ)`.
pub fn billiard_polygon(pair: &BicentricPair, u: f64, rho: f64) -> Result<Polygon> {
    check_rho(rho)?;
    let poly = pair.vertices(u)?;
    polar_polygon(&poly, &Circle::new(pair.l1(), rho)?)
}

/// Hyperbolic billiard polygon: polar with respect to `circle(ℓ₂, ρ)`.
///
/// Fails with [`Error::PoleAtInfinity`] when a bicentric side passes
/// within `POLE_EXCLUSION_REL·R` of `ℓ₂`.
pub fn hyperbolic_billiard_polygon(pair: &BicentricPair, u: f64, rho: f64) -> Result<Polygon> {
    check_rho(rho)?;
    let poly = pair.vertices(u)?;
    let l2 = pair.l2();
    for side in 0..poly.len() {
        let distance = poly.side_line(side)?.distance(l2);
        if distance < POLE_EXCLUSION_REL * pair.outer_radius() {
            return Err(Error::PoleAtInfinity { side, distance });
        }
    }
    polar_polygon(&poly, &Circle::new(l2, rho)?)
}

/// Pedal polygon of the bicentric polygon with respect to a limiting point.
pub fn limiting_pedal(pair: &BicentricPair, u: f64, which: LimitingPoint) -> Result<Polygon> {
    pedal_polygon(&pair.vertices(u)?, which.of(pair))
}

/// Vertex-wise inversion in `circle(focus, ρ)`.
pub fn focus_inversive(polygon: &Polygon, focus: Point, rho: f64) -> Result<Polygon> {
    let circle = Circle::new(focus, rho)?;
    polygon.try_map(|&p| invert_point(p, &circle))
}

/// Largest defect of the reflection law over the vertices of a polygon
/// inscribed in `table`: `|(u_in + u_out)·t|` for unit edge vectors leaving
/// the vertex and unit tangent `t`.
pub fn reflection_residual(polygon: &Polygon, table: &Conic) -> f64 {
    (0..polygon.len() as isize)
        .map(|j| {
            let p = polygon.vertex(j);
            let prev = polygon.vertex(j - 1) - p;
            let next = polygon.vertex(j + 1) - p;
            let normal = table.gradient(p);
            let tangent = normal.perp() * (1.0 / normal.norm());
            (prev * (1.0 / prev.norm()) + next * (1.0 / next.norm()))
                .dot(tangent)
                .abs()
        })
        .fold(0.0, f64::max)
}

/// Circle carrying the polar image of a conic taken at one of its foci.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarCircle {
    pub circle: Circle,
    /// The image of a hyperbola misses the two points corresponding to its
    /// asymptotic directions.
    pub punctured: bool,
}

/// Polar image of `conic` with respect to `circle(focus, ρ)`.
pub fn polar_conic_of_conic(conic: &Conic, focus: Point, rho: f64) -> Result<PolarCircle> {
    check_rho(rho)?;
    let (f1, f2) = conic.foci();
    let miss = focus.dist(f1).min(focus.dist(f2));
    if miss > 1e-9 * conic.a.max(conic.b) {
        return Err(Error::FocusMismatch(miss));
    }
    let rho2 = rho * rho;
    let e = conic.eccentricity();
    let radius = rho2 * conic.a / (conic.b * conic.b);
    let center = if e == 0.0 {
        focus
    } else {
        let v = (focus - conic.center) * (1.0 / (focus - conic.center).norm());
        let semi_latus = conic.a * (1.0 - e * e);
        focus + v * (rho2 * e / semi_latus)
    };
    Ok(PolarCircle {
        circle: Circle::new(center, radius)?,
        punctured: conic.kind == ConicKind::Hyperbola,
    })
}
