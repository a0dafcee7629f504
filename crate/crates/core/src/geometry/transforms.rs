use super::{Circle, Line, Point, Polygon};
use crate::error::{Error, Result};

/// Relative distance (in units of the circle radius) under which a point is
/// taken to be the inversion centre, or a line to pass through it.
const CENTER_REL: f64 = 1e-14;
const LINE_CENTER_REL: f64 = 1e-12;
const SIDELINE_REL: f64 = 1e-12;

/// Inverse of `p` in `circle`: on the ray from the centre through `p`, at
/// distance `ρ² / |p − centre|`.
pub fn invert_point(p: Point, circle: &Circle) -> Result<Point> {
    let v = p - circle.center;
    let dist_sq = v.norm_sq();
    if dist_sq.sqrt() < CENTER_REL * circle.radius {
        return Err(Error::Singular);
    }
    Ok(circle.center + v * (circle.radius * circle.radius / dist_sq))
}

/// Polar of `p`: the line through its inverse, perpendicular to the ray
/// from the centre. The normal points away from the centre.
pub fn polar_line(p: Point, circle: &Circle) -> Result<Line> {
    let inverse = invert_point(p, circle)?;
    let normal = p - circle.center;
    Line::with_normal(normal, inverse)
}

/// Pole of `line`: the inverse of the foot of the perpendicular from the centre.
pub fn pole_of_line(line: &Line, circle: &Circle) -> Result<Point> {
    if line.distance(circle.center) <= LINE_CENTER_REL * circle.radius {
        return Err(Error::LineThroughCenter);
    }
    invert_point(line.foot(circle.center), circle)
}

/// Feet of the perpendiculars from `p` to the sidelines of `polygon`.
///
/// Vertex `j` of the pedal lies on side `j` (from vertex `j` to `j + 1`).
pub fn pedal_polygon(polygon: &Polygon, p: Point) -> Result<Polygon> {
    let scale = polygon.diameter();
    let feet = (0..polygon.len())
        .map(|j| {
            let line = polygon.side_line(j)?;
            if line.distance(p) <= SIDELINE_REL * scale {
                return Err(Error::PointOnSideline(j));
            }
            Ok(line.foot(p))
        })
        .collect::<Result<Vec<_>>>()?;
    Polygon::new(feet, polygon.winding())
}

/// Poles of the sides: vertex `j` is the pole of side `j`.
pub fn polar_polygon(polygon: &Polygon, circle: &Circle) -> Result<Polygon> {
    let poles = (0..polygon.len())
        .map(|j| pole_of_line(&polygon.side_line(j)?, circle))
        .collect::<Result<Vec<_>>>()?;
    Polygon::new(poles, polygon.winding())
}

/// Limiting points of the pencil spanned by two disjoint circles.
///
/// The first point returned lies inside the smaller circle (for a nested
/// pair, inside both); the second lies outside it. The result does not
/// depend on argument order.
pub fn limiting_points(c1: &Circle, c2: &Circle) -> Result<(Point, Point)> {
    let (big, small) = if c2.radius > c1.radius {
        (c2, c1)
    } else {
        (c1, c2)
    };
    let axis = small.center - big.center;
    let d = axis.norm();
    let scale = big.radius.max(small.radius);
    if d <= 1e-14 * scale {
        return Err(Error::Concentric);
    }
    // Frame: big circle at the origin, small one at (-d, 0).
    let (r_big, r_small) = (big.radius, small.radius);
    let disc = d.powi(4) - 2.0 * (r_big * r_big + r_small * r_small) * d * d
        + (r_big * r_big - r_small * r_small).powi(2);
    if !(disc > 0.0) {
        return Err(Error::IntersectingCircles(disc));
    }
    // Roots of d·x² + (d² − r² + R²)·x + R²·d = 0; product R².
    let b = d * d - r_small * r_small + r_big * r_big;
    let far = -(b + b.signum() * disc.sqrt()) / (2.0 * d);
    let near = r_big * r_big / far;
    let unit = axis * (-1.0 / d);
    let to_world = |x: f64| big.center + unit * x;
    let (p, q) = (to_world(near), to_world(far));
    if p.dist(small.center) < q.dist(small.center) {
        Ok((p, q))
    } else {
        Ok((q, p))
    }
}

/// Smallest singular value of the centred vertex matrix over the diameter;
/// zero exactly when the vertices are collinear.
pub fn collinearity_residual(polygon: &Polygon) -> f64 {
    let centroid = polygon.centroid();
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for &p in polygon.vertices() {
        let q = p - centroid;
        sxx += q.x * q.x;
        sxy += q.x * q.y;
        syy += q.y * q.y;
    }
    // Project on the minor principal direction rather than taking the
    // small eigenvalue, which would cancel catastrophically.
    let theta = 0.5 * (2.0 * sxy).atan2(sxx - syy);
    let minor = Point::new(-theta.sin(), theta.cos());
    let spread = polygon
        .vertices()
        .iter()
        .map(|&p| minor.dot(p - centroid).powi(2))
        .sum::<f64>()
        .sqrt();
    let diameter = polygon.diameter();
    if diameter > 0.0 {
        spread / diameter
    } else {
        0.0
    }
}
