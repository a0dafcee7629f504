use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the planar cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// Line `a·x + b·y + c = 0` with `a² + b² = 1`.
///
/// The normal `(a, b)` is the left normal of the direction the line was
/// built with, so [`Line::signed_distance`] is positive on the left.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Line {
    /// Normalizes `(a, b, c)`; fails if `(a, b)` vanishes.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let n = a.hypot(b);
        if !(n > 0.0) || !c.is_finite() || !n.is_finite() {
            return Err(Error::Domain {
                what: "line normal length",
                value: n,
                domain: "(0, inf)",
            });
        }
        Ok(Self {
            a: a / n,
            b: b / n,
            c: c / n,
        })
    }

    /// Oriented line through `p` towards `q`.
    pub fn through(p: Point, q: Point) -> Result<Self> {
        let dir = q - p;
        let normal = dir.perp();
        Line::new(normal.x, normal.y, -normal.dot(p))
    }

    /// Line through `p` with unit normal direction `normal`.
    pub fn with_normal(normal: Point, p: Point) -> Result<Self> {
        Line::new(normal.x, normal.y, -normal.dot(p))
    }

    pub fn normal(&self) -> Point {
        Point::new(self.a, self.b)
    }

    pub fn direction(&self) -> Point {
        Point::new(self.b, -self.a)
    }

    pub fn signed_distance(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.signed_distance(p).abs()
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn foot(&self, p: Point) -> Point {
        p - self.normal() * self.signed_distance(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() || !center.is_finite() {
            return Err(Error::Domain {
                what: "circle radius",
                value: radius,
                domain: "(0, inf)",
            });
        }
        Ok(Self { center, radius })
    }

    pub fn unit() -> Self {
        Self {
            center: Point::ORIGIN,
            radius: 1.0,
        }
    }

    /// Signed distance of `p` from the circle, negative inside.
    pub fn radial_offset(&self, p: Point) -> f64 {
        p.dist(self.center) - self.radius
    }

    pub fn point_at(&self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        self.center + Point::new(c, s) * self.radius
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_is_normalized_and_oriented() {
        let l = Line::through(Point::new(0.0, 0.0), Point::new(2.0, 0.0)).unwrap();
        assert!((l.a * l.a + l.b * l.b - 1.0).abs() < 1e-15);
        assert!(l.signed_distance(Point::new(0.0, 1.0)) > 0.0);
        assert_eq!(l.foot(Point::new(0.7, 3.0)), Point::new(0.7, 0.0));
    }

    #[test]
    fn degenerate_line_is_rejected() {
        assert!(Line::through(Point::new(1.0, 1.0), Point::new(1.0, 1.0)).is_err());
        assert!(Line::new(0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn circle_needs_positive_radius() {
        assert!(Circle::new(Point::ORIGIN, 0.0).is_err());
        assert!(Circle::new(Point::ORIGIN, -1.0).is_err());
    }
}
