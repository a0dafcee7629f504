//! Reflections and translations along the x-axis between coordinate frames.
//!
//! Every frame used by the crate keeps the circle centres on the x-axis,
//! so switching frames is `x ↦ sign·x + offset` with `y` unchanged.

use serde::{Deserialize, Serialize};

use crate::geometry::{Point, Polygon};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxialMap {
    pub sign: f64,
    pub offset: f64,
}

impl AxialMap {
    pub const IDENTITY: AxialMap = AxialMap {
        sign: 1.0,
        offset: 0.0,
    };

    /// Canonical frame (outer circle at the origin, inner at `(-d, 0)`) to
    /// the inner-centred frame (inner circle at the origin, outer at `(-d, 0)`).
    pub fn canonical_to_inner_centred(d: f64) -> Self {
        Self {
            sign: -1.0,
            offset: -d,
        }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(self.sign * p.x + self.offset, p.y)
    }

    pub fn apply_x(&self, x: f64) -> f64 {
        self.sign * x + self.offset
    }

    pub fn inverse(&self) -> Self {
        Self {
            sign: self.sign,
            offset: -self.sign * self.offset,
        }
    }

    pub fn apply_polygon(&self, polygon: &Polygon) -> Polygon {
        polygon
            .try_map(|&p| Ok(self.apply(p)))
            .expect("an isometry keeps a valid polygon valid")
    }
}
