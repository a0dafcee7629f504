//! Closed-form bicentric triangles and quadrilaterals.
//!
//! These use the inner-centred frame: inner circle `x² + y² = r²`, outer
//! circle `(x + d)² + y² = R²`. [`crate::frames::AxialMap::canonical_to_inner_centred`]
//! converts from the canonical frame. The tangency parameter `t` places the
//! contact point of one side at `r·(cos t, sin t)`.

use crate::error::{Error, Result};
use crate::geometry::{Point, Polygon};

/// Inner radius satisfying Euler's relation `d² = R(R − 2r)`.
pub fn euler_inner_radius(outer_radius: f64, offset: f64) -> Result<f64> {
    let r = (outer_radius * outer_radius - offset * offset) / (2.0 * outer_radius);
    if !(r > 0.0 && offset >= 0.0) {
        return Err(Error::Domain {
            what: "(R^2 - d^2)/(2R)",
            value: r,
            domain: "positive reals",
        });
    }
    Ok(r)
}

/// Inner radius satisfying Kerawala's condition
/// `1/(R − d)² + 1/(R + d)² = 1/r²`.
pub fn kerawala_inner_radius(outer_radius: f64, offset: f64) -> Result<f64> {
    if !(offset >= 0.0 && offset < outer_radius) {
        return Err(Error::Domain {
            what: "d",
            value: offset,
            domain: "[0, R)",
        });
    }
    let inv = (outer_radius - offset).powi(-2) + (outer_radius + offset).powi(-2);
    Ok(inv.sqrt().recip())
}

/// The bicentric triangle with the side `P1 P2` touching the inner circle
/// at `r·(cos t, sin t)`; `r` follows from Euler's relation.
pub fn vertices_n3_closed(outer_radius: f64, offset: f64, t: f64) -> Result<Polygon> {
    let (big_r, d) = (outer_radius, offset);
    euler_inner_radius(big_r, d)?;
    let (s, c) = t.sin_cos();
    let q = big_r * big_r + d * d - 2.0 * d * big_r * c;
    let radicand = q * (3.0 * big_r * big_r - d * d + 2.0 * d * big_r * c);
    if !(radicand >= 0.0) {
        return Err(Error::Domain {
            what: "Delta^2",
            value: radicand,
            domain: "non-negative reals",
        });
    }
    let delta = radicand.sqrt();
    let m = 2.0 * d * big_r * c + big_r * big_r - d * d;
    let two_r = 2.0 * big_r;
    let p1 = Point::new((c * m + delta * s) / two_r - d, (s * m - delta * c) / two_r);
    let p2 = Point::new((c * m - delta * s) / two_r - d, (s * m + delta * c) / two_r);
    let beta = big_r * big_r - d * d;
    let p3 = Point::new(-(big_r * c - d) * beta / q, -big_r * beta * s / q);
    Polygon::simple(vec![p1, p2, p3])
}

/// The bicentric quadrilateral whose side `P1 P2` touches the inner circle
/// at `r·(cos t, sin t)`; `r` follows from Kerawala's condition.
///
/// Built by chasing tangents: `P1, P2` are the outer-circle points on the
/// tangent at the contact point, and each further vertex is the second
/// intersection of the other tangent through the previous vertex.
pub fn vertices_n4_closed(outer_radius: f64, offset: f64, t: f64) -> Result<Polygon> {
    let r = kerawala_inner_radius(outer_radius, offset)?;
    let center = Point::new(-offset, 0.0);
    let contact = Point::new(r * t.cos(), r * t.sin());
    let w = contact.perp() * (1.0 / r);
    let rel = contact - center;
    let half_b = w.dot(rel);
    let disc = half_b * half_b - (rel.norm_sq() - outer_radius * outer_radius);
    let root = disc.sqrt();
    let p1 = contact + w * (-half_b - root);
    let p2 = contact + w * (-half_b + root);
    let mut pts = vec![p1, p2];
    while pts.len() < 4 {
        let (prev, cur) = (pts[pts.len() - 2], pts[pts.len() - 1]);
        let axis = (Point::ORIGIN - cur) * (1.0 / cur.norm());
        let v = cur - prev;
        let v_ref = axis * (2.0 * v.dot(axis)) - v;
        let lambda = -2.0 * v_ref.dot(cur - center) / v_ref.norm_sq();
        pts.push(cur + v_ref * lambda);
    }
    Polygon::simple(pts)
}

/// Angle of the contact point of side `j` with an inner circle centred at
/// the origin.
pub fn tangency_parameter(polygon: &Polygon, side: usize) -> Result<f64> {
    let foot = polygon.side_line(side)?.foot(Point::ORIGIN);
    Ok(foot.y.atan2(foot.x))
}

/// Limiting-point abscissas displayed for the Euler pair, in the order
/// printed: the first is the one outside both circles.
pub fn limiting_points_n3_display(outer_radius: f64, offset: f64) -> (f64, f64) {
    let (r2, d2) = (outer_radius * outer_radius, offset * offset);
    let beta = r2 - d2;
    let l1 = beta / (8.0 * offset * r2) * (((9.0 * r2 - d2) * beta).sqrt() + 3.0 * r2 + d2);
    let l2 = l1 - (9.0 * r2 - d2).sqrt() * beta.powf(1.5) / (4.0 * r2 * offset);
    (l1, l2)
}

/// Limiting-point abscissas displayed for the Kerawala pair, in the order
/// printed: the first is the one outside both circles.
pub fn limiting_points_n4_display(outer_radius: f64, offset: f64) -> (f64, f64) {
    let (r2, d2) = (outer_radius * outer_radius, offset * offset);
    let beta = r2 - d2;
    (beta / (2.0 * offset), offset * beta / (r2 + d2))
}
