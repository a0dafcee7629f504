use serde::{Deserialize, Serialize};

use super::{Line, Point};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConicKind {
    Ellipse,
    Hyperbola,
}

/// Axis-aligned central conic.
///
/// `a` is the semi-axis along x and `b` along y. For a hyperbola the x-axis
/// is the transverse axis and `b` the imaginary semi-axis, so
/// `(x/a)² − (y/b)² = 1` in centred coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Conic {
    pub kind: ConicKind,
    pub center: Point,
    pub a: f64,
    pub b: f64,
}

impl Conic {
    pub fn new(kind: ConicKind, center: Point, a: f64, b: f64) -> Result<Self> {
        for (what, v) in [("semi-axis a", a), ("semi-axis b", b)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain {
                    what,
                    value: v,
                    domain: "(0, inf)",
                });
            }
        }
        Ok(Self { kind, center, a, b })
    }

    pub fn ellipse(center: Point, a: f64, b: f64) -> Result<Self> {
        Self::new(ConicKind::Ellipse, center, a, b)
    }

    pub fn hyperbola(center: Point, a: f64, b: f64) -> Result<Self> {
        Self::new(ConicKind::Hyperbola, center, a, b)
    }

    /// Squared focal distance: `a² − b²` (ellipse) or `a² + b²` (hyperbola).
    ///
    /// Negative for an ellipse whose major axis is vertical.
    pub fn focal_sq(&self) -> f64 {
        match self.kind {
            ConicKind::Ellipse => self.a * self.a - self.b * self.b,
            ConicKind::Hyperbola => self.a * self.a + self.b * self.b,
        }
    }

    pub fn focal_distance(&self) -> f64 {
        self.focal_sq().max(0.0).sqrt()
    }

    pub fn eccentricity(&self) -> f64 {
        self.focal_distance() / self.a
    }

    /// Foci on the x-axis, left one first.
    pub fn foci(&self) -> (Point, Point) {
        let c = self.focal_distance();
        (
            self.center - Point::new(c, 0.0),
            self.center + Point::new(c, 0.0),
        )
    }

    fn scaled(&self, p: Point) -> (f64, f64) {
        let q = p - self.center;
        (q.x / self.a, q.y / self.b)
    }

    /// Raw implicit value: zero on the curve.
    pub fn implicit(&self, p: Point) -> f64 {
        let (u, v) = self.scaled(p);
        match self.kind {
            ConicKind::Ellipse => u * u + v * v - 1.0,
            ConicKind::Hyperbola => u * u - v * v - 1.0,
        }
    }

    /// Implicit value relative to the magnitude of its terms.
    pub fn residual(&self, p: Point) -> f64 {
        let (u, v) = self.scaled(p);
        self.implicit(p).abs() / (u * u + v * v + 1.0)
    }

    /// Gradient of the implicit function (an outward normal for the ellipse).
    pub fn gradient(&self, p: Point) -> Point {
        let q = p - self.center;
        let gx = 2.0 * q.x / (self.a * self.a);
        let gy = 2.0 * q.y / (self.b * self.b);
        match self.kind {
            ConicKind::Ellipse => Point::new(gx, gy),
            ConicKind::Hyperbola => Point::new(gx, -gy),
        }
    }

    /// Relative defect of the tangency condition of `line` with the conic.
    pub fn tangency_residual(&self, line: &Line) -> f64 {
        let offset = line.c + line.a * self.center.x + line.b * self.center.y;
        let ta = (self.a * line.a).powi(2);
        let tb = (self.b * line.b).powi(2);
        let lhs = match self.kind {
            ConicKind::Ellipse => ta + tb,
            ConicKind::Hyperbola => ta - tb,
        };
        (lhs - offset * offset).abs() / (ta + tb + offset * offset)
    }

    /// `+1` or `-1` by the side of the conic centre `p` lies on (hyperbola branch).
    pub fn branch(&self, p: Point) -> f64 {
        if p.x >= self.center.x {
            1.0
        } else {
            -1.0
        }
    }

    pub fn point_at(&self, t: f64) -> Point {
        match self.kind {
            ConicKind::Ellipse => self.center + Point::new(self.a * t.cos(), self.b * t.sin()),
            ConicKind::Hyperbola => self.center + Point::new(self.a * t.cosh(), self.b * t.sinh()),
        }
    }
}
