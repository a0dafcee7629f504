use serde::{Deserialize, Serialize};

use super::{Line, Point};
use crate::error::{Error, Result};

/// Relative threshold below which two consecutive vertices count as one.
const COINCIDENT_REL: f64 = 1e-12;

/// Closed polygon with `N >= 3` vertices and a winding number.
///
/// Side `j` joins vertex `j` to vertex `j + 1` (indices mod `N`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    vertices: Vec<Point>,
    winding: u32,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>, winding: u32) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if let Some(bad) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(Error::NonFinite(if bad.x.is_finite() {
                bad.y
            } else {
                bad.x
            }));
        }
        let poly = Self { vertices, winding };
        let scale = poly.diameter();
        for j in 0..poly.len() as isize {
            if poly.vertex(j).dist(poly.vertex(j + 1)) <= COINCIDENT_REL * scale {
                return Err(Error::DegenerateSide(j as usize));
            }
        }
        Ok(poly)
    }

    /// Polygon with winding 1.
    pub fn simple(vertices: Vec<Point>) -> Result<Self> {
        Self::new(vertices, 1)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn winding(&self) -> u32 {
        self.winding
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex with cyclic indexing; negative indices wrap too.
    pub fn vertex(&self, j: isize) -> Point {
        let n = self.len() as isize;
        self.vertices[j.rem_euclid(n) as usize]
    }

    /// Endpoints of side `j`.
    pub fn side(&self, j: usize) -> (Point, Point) {
        (self.vertex(j as isize), self.vertex(j as isize + 1))
    }

    pub fn side_line(&self, j: usize) -> Result<Line> {
        let (p, q) = self.side(j);
        Line::through(p, q).map_err(|_| Error::DegenerateSide(j))
    }

    pub fn sides(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        (0..self.len()).map(|j| self.side(j))
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut best = 0.0_f64;
        for (i, p) in v.iter().enumerate() {
            for q in &v[i + 1..] {
                best = best.max(p.dist(*q));
            }
        }
        best
    }

    pub fn centroid(&self) -> Point {
        let sum = self.vertices.iter().fold(Point::ORIGIN, |acc, &p| acc + p);
        sum * (1.0 / self.len() as f64)
    }

    /// Applies `f` to every vertex, keeping order and winding.
    pub fn try_map(&self, f: impl FnMut(&Point) -> Result<Point>) -> Result<Polygon> {
        let vertices = self.vertices.iter().map(f).collect::<Result<Vec<_>>>()?;
        Polygon::new(vertices, self.winding)
    }

    /// Relabels so that vertex `j` of the result is vertex `j + shift` here.
    pub fn rotated(&self, shift: isize) -> Polygon {
        let vertices = (0..self.len() as isize)
            .map(|j| self.vertex(j + shift))
            .collect();
        Polygon {
            vertices,
            winding: self.winding,
        }
    }

    /// Same vertices in the opposite order.
    pub fn reversed(&self) -> Polygon {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Polygon {
            vertices,
            winding: self.winding,
        }
    }

    /// Largest vertex-to-vertex distance to `other` under the best cyclic
    /// relabeling, in either orientation. Both polygons must have the same
    /// number of vertices.
    pub fn aligned_deviation(&self, other: &Polygon) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        let mut best = f64::INFINITY;
        for candidate in [other.clone(), other.reversed()] {
            for shift in 0..self.len() as isize {
                let dev = (0..self.len() as isize)
                    .map(|j| self.vertex(j).dist(candidate.vertex(j + shift)))
                    .fold(0.0, f64::max);
                best = best.min(dev);
            }
        }
        best
    }
}
