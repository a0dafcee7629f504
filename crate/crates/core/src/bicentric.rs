//! Nested circle pairs and their bicentric Poncelet families.
//!
//! Frame: outer circle of radius `R` centred at the origin, inner circle of
//! radius `r` centred at `(-d, 0)`. Jacobi's parametrization places vertex
//! `j` at `R·(cos 2φ_j, sin 2φ_j)` with `φ_j = am(u + j·σ, k)` and
//! `k² = 4Rd / ((R + d)² − r²)`.
//!
//! Because the vertex angle is `2·am`, one full turn of the outer circle
//! corresponds to a `u`-advance of `2K`. A family closing after `N` sides
//! and `τ` turns therefore steps by `σ = 2τK/N`, and each chord satisfies
//! `cn(σ) = r/(R + d)`.

use serde::{Deserialize, Serialize};

use crate::elliptic::EllipticModulus;
use crate::error::{Error, Result};
use crate::geometry::{limiting_points, Circle, Point, Polygon};
use crate::roots::bisect;

/// Relative mismatch allowed between the tangent step and `2τK/N`.
const CLOSURE_REL: f64 = 1e-9;

/// `k` from the circle data.
pub fn modulus(outer_radius: f64, inner_radius: f64, offset: f64) -> Result<f64> {
    let m = 4.0 * outer_radius * offset
        / ((outer_radius + offset).powi(2) - inner_radius * inner_radius);
    if !(m > 0.0 && m < 1.0) {
        return Err(Error::Domain {
            what: "k^2 = 4Rd/((R+d)^2 - r^2)",
            value: m,
            domain: "(0, 1)",
        });
    }
    Ok(m.sqrt())
}

/// The step `σ ∈ (0, K)` for which the chord from `p(0) = (R, 0)` to `p(σ)`
/// touches the inner circle, with the inner circle to its left.
///
/// Found by bisection on the signed distance from the inner centre to the
/// chord; the residual at the returned step is at rounding level.
pub fn tangent_step(outer_radius: f64, inner_radius: f64, offset: f64) -> Result<f64> {
    CirclePair::new(outer_radius, inner_radius, offset)?.tangent_step()
}

/// Nested pair of circles, not yet tied to a period.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CirclePair {
    outer_radius: f64,
    inner_radius: f64,
    offset: f64,
}

impl CirclePair {
    pub fn new(outer_radius: f64, inner_radius: f64, offset: f64) -> Result<Self> {
        for (what, v) in [("R", outer_radius), ("r", inner_radius), ("d", offset)] {
            if !v.is_finite() {
                return Err(Error::NonFinite(v));
            }
            let ok = if what == "d" { v >= 0.0 } else { v > 0.0 };
            if !ok {
                return Err(Error::Domain {
                    what,
                    value: v,
                    domain: "positive reals",
                });
            }
        }
        if inner_radius + offset >= outer_radius {
            return Err(Error::NotNested {
                sum: inner_radius + offset,
                outer: outer_radius,
            });
        }
        Ok(Self {
            outer_radius,
            inner_radius,
            offset,
        })
    }

    pub fn outer_radius(&self) -> f64 {
        self.outer_radius
    }

    pub fn inner_radius(&self) -> f64 {
        self.inner_radius
    }

    /// Distance `d` between the centres.
    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn outer_circle(&self) -> Circle {
        Circle {
            center: Point::ORIGIN,
            radius: self.outer_radius,
        }
    }

    pub fn inner_circle(&self) -> Circle {
        Circle {
            center: Point::new(-self.offset, 0.0),
            radius: self.inner_radius,
        }
    }

    pub fn modulus(&self) -> Result<f64> {
        modulus(self.outer_radius, self.inner_radius, self.offset)
    }

    pub fn elliptic(&self) -> Result<EllipticModulus> {
        EllipticModulus::new(self.modulus()?)
    }

    /// `(ℓ₁, ℓ₂)`: the limiting point inside both circles, then the outer one.
    pub fn limiting_points(&self) -> Result<(Point, Point)> {
        limiting_points(&self.outer_circle(), &self.inner_circle())
    }

    pub fn tangent_step(&self) -> Result<f64> {
        let ell = self.elliptic()?;
        self.tangent_step_with(&ell)
    }

    fn tangent_step_with(&self, ell: &EllipticModulus) -> Result<f64> {
        let big_r = self.outer_radius;
        let center = self.inner_circle().center;
        let start = Point::new(big_r, 0.0);
        let residual = |sigma: f64| -> f64 {
            let Ok(j) = ell.sn_cn_dn(sigma) else {
                return f64::NAN;
            };
            let end = Point::new(
                big_r * (j.cn * j.cn - j.sn * j.sn),
                2.0 * big_r * j.sn * j.cn,
            );
            match crate::geometry::Line::through(start, end) {
                Ok(chord) => chord.signed_distance(center) - self.inner_radius,
                Err(_) => f64::NAN,
            }
        };
        let quarter = ell.quarter_period();
        bisect(residual, 1e-9 * quarter, quarter)
    }

    /// `σ / 2K`: the fraction of a turn advanced per side. A pair closes
    /// with period `(N, τ)` exactly when this equals `τ/N`.
    pub fn rotation_ratio(&self) -> Result<f64> {
        let ell = self.elliptic()?;
        Ok(self.tangent_step_with(&ell)? / (2.0 * ell.quarter_period()))
    }

    /// Smallest `(N, τ)` with `N <= max_n` matching the rotation ratio.
    pub fn detect_period(&self, max_n: u32) -> Option<(u32, u32)> {
        let ratio = self.rotation_ratio().ok()?;
        (3..=max_n).find_map(|n| {
            (1..n)
                .filter(|&tau| 2 * tau < n && gcd(tau, n) == 1)
                .find(|&tau| (ratio - tau as f64 / n as f64).abs() < CLOSURE_REL)
                .map(|tau| (n, tau))
        })
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_winding(n: u32, tau: u32) -> Result<()> {
    if n < 3 || tau < 1 || 2 * tau >= n || gcd(tau, n) != 1 {
        return Err(Error::InvalidWinding { n, tau });
    }
    Ok(())
}

/// A circle pair admitting a closed Poncelet family with `N` sides and
/// winding `τ`.
#[derive(Debug, Clone, PartialEq)]
pub struct BicentricPair {
    circles: CirclePair,
    n: u32,
    tau: u32,
    elliptic: EllipticModulus,
    sigma: f64,
    limiting: (Point, Point),
}

impl BicentricPair {
    /// Ties `circles` to the period `(n, tau)`; fails unless the pair's
    /// tangent step equals `2τK/N`.
    pub fn new(circles: CirclePair, n: u32, tau: u32) -> Result<Self> {
        check_winding(n, tau)?;
        if circles.offset == 0.0 {
            return Err(Error::Concentric);
        }
        let elliptic = circles.elliptic()?;
        let sigma = 2.0 * tau as f64 * elliptic.quarter_period() / n as f64;
        let step = circles.tangent_step_with(&elliptic)?;
        if (step - sigma).abs() > CLOSURE_REL * elliptic.quarter_period() {
            return Err(Error::NotClosing { step, sigma });
        }
        let limiting = circles.limiting_points()?;
        Ok(Self {
            circles,
            n,
            tau,
            elliptic,
            sigma,
            limiting,
        })
    }

    pub fn circles(&self) -> &CirclePair {
        &self.circles
    }

    pub fn outer_radius(&self) -> f64 {
        self.circles.outer_radius
    }

    pub fn inner_radius(&self) -> f64 {
        self.circles.inner_radius
    }

    pub fn offset(&self) -> f64 {
        self.circles.offset
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn tau(&self) -> u32 {
        self.tau
    }

    pub fn elliptic(&self) -> &EllipticModulus {
        &self.elliptic
    }

    pub fn k(&self) -> f64 {
        self.elliptic.k()
    }

    pub fn quarter_period(&self) -> f64 {
        self.elliptic.quarter_period()
    }

    /// Step `σ = 2τK/N` between consecutive vertices.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Limiting point inside both circles.
    pub fn l1(&self) -> Point {
        self.limiting.0
    }

    /// Limiting point outside both circles.
    pub fn l2(&self) -> Point {
        self.limiting.1
    }

    /// Shift in `u` after which the family repeats as a set of polygons.
    pub fn family_period(&self) -> f64 {
        2.0 * self.quarter_period() / self.n as f64
    }

    /// `u_j = u + j·σ`.
    pub fn argument(&self, u: f64, j: isize) -> f64 {
        u + j as f64 * self.sigma
    }

    /// Vertex `j` of the polygon at parameter `u`; any integer `j` is allowed.
    pub fn vertex(&self, u: f64, j: isize) -> Result<Point> {
        let jac = self.elliptic.sn_cn_dn(self.argument(u, j))?;
        let big_r = self.outer_radius();
        Ok(Point::new(
            big_r * (jac.cn * jac.cn - jac.sn * jac.sn),
            2.0 * big_r * jac.sn * jac.cn,
        ))
    }

    pub fn vertices(&self, u: f64) -> Result<Polygon> {
        let pts = (0..self.n as isize)
            .map(|j| self.vertex(u, j))
            .collect::<Result<Vec<_>>>()?;
        Polygon::new(pts, self.tau)
    }

    /// The `u ∈ (−K, K]` at which vertex 0 sits at the angular position of `p`.
    pub fn parameter_of(&self, p: Point) -> Result<f64> {
        let half_angle = 0.5 * p.y.atan2(p.x);
        let quarter = self.quarter_period();
        let ell = &self.elliptic;
        bisect(
            |u| ell.am(u).map(|a| a - half_angle).unwrap_or(f64::NAN),
            -quarter,
            quarter,
        )
    }
}

impl AsRef<CirclePair> for CirclePair {
    fn as_ref(&self) -> &CirclePair {
        self
    }
}

impl AsRef<CirclePair> for BicentricPair {
    fn as_ref(&self) -> &CirclePair {
        &self.circles
    }
}

/// Solves for the inner radius that closes a family with `N` sides and
/// winding `τ`, keeping `R` and `d` fixed.
pub fn poncelet_solve(outer_radius: f64, offset: f64, n: u32, tau: u32) -> Result<BicentricPair> {
    check_winding(n, tau)?;
    if !(offset > 0.0 && offset < outer_radius) {
        return Err(Error::Domain {
            what: "d",
            value: offset,
            domain: "(0, R)",
        });
    }
    let target = tau as f64 / n as f64;
    let gap = outer_radius - offset;
    let residual = |r: f64| -> f64 {
        CirclePair::new(outer_radius, r, offset)
            .and_then(|c| c.rotation_ratio())
            .map(|ratio| ratio - target)
            .unwrap_or(f64::NAN)
    };
    let (lo, hi) = (1e-9 * gap, gap * (1.0 - 1e-12));
    let r = bisect(residual, lo, hi).map_err(|e| match e {
        Error::NoBracket { f_lo, f_hi, .. } => Error::NoRoot {
            lo_residual: f_lo,
            hi_residual: f_hi,
        },
        other => other,
    })?;
    BicentricPair::new(CirclePair::new(outer_radius, r, offset)?, n, tau)
}

/// Free-function form of [`BicentricPair::vertices`].
pub fn vertices(pair: &BicentricPair, u: f64) -> Result<Polygon> {
    pair.vertices(u)
}

/// Largest `|dist(inner centre, sideline) − r|` over the sides, relative to `R`.
pub fn tangency_residual(pair: &CirclePair, polygon: &Polygon) -> f64 {
    let inner = pair.inner_circle();
    (0..polygon.len())
        .map(|j| match polygon.side_line(j) {
            Ok(line) => (line.distance(inner.center) - inner.radius).abs(),
            Err(_) => f64::INFINITY,
        })
        .fold(0.0, f64::max)
        / pair.outer_radius()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_examples() {
        let k = modulus(2.0, 0.75, 1.0).unwrap();
        assert!((k * k - 8.0 / 8.4375).abs() < 1e-15);
        let k = modulus(1.0, 0.9, 0.05).unwrap();
        assert!((k * k - 0.2 / 0.2925).abs() < 1e-15);
        assert!(modulus(2.0, 0.75, 1e-12).unwrap() < 1e-5);
        assert!(modulus(2.0, 0.75, 0.0).is_err());
    }

    #[test]
    fn pair_validation() {
        assert!(matches!(
            CirclePair::new(2.0, 1.5, 1.0),
            Err(Error::NotNested { .. })
        ));
        assert!(CirclePair::new(2.0, -0.1, 1.0).is_err());
        let circles = CirclePair::new(2.0, 0.75, 1.0).unwrap();
        assert_eq!(
            BicentricPair::new(circles, 4, 2),
            Err(Error::InvalidWinding { n: 4, tau: 2 })
        );
        assert!(matches!(
            BicentricPair::new(circles, 4, 1),
            Err(Error::NotClosing { .. })
        ));
    }

    #[test]
    fn vertex_zero_at_u_zero() {
        let pair = poncelet_solve(2.0, 1.0, 3, 1).unwrap();
        let p0 = pair.vertex(0.0, 0).unwrap();
        assert!(p0.dist(Point::new(2.0, 0.0)) < 1e-15);
    }

    #[test]
    fn parameter_of_inverts_vertex_zero() {
        let pair = poncelet_solve(2.0, 0.7, 5, 2).unwrap();
        for u in [-1.0, 0.0, 0.4, 1.9] {
            let p = pair.vertex(u, 0).unwrap();
            let back = pair.parameter_of(p).unwrap();
            let q = pair.vertex(back, 0).unwrap();
            assert!(p.dist(q) < 1e-12, "u = {u}");
        }
    }

    #[test]
    fn detects_period_of_solved_pair() {
        let pair = poncelet_solve(2.0, 0.5, 7, 3).unwrap();
        assert_eq!(pair.circles().detect_period(12), Some((7, 3)));
    }

    #[test]
    fn classical_radii() {
        let tri = poncelet_solve(2.0, 1.0, 3, 1).unwrap();
        assert!((tri.inner_radius() - 0.75).abs() < 1e-11);
        let quad = poncelet_solve(2.0, 1.0, 4, 1).unwrap();
        assert!((quad.inner_radius() - 3.0 / 10f64.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn tangent_step_satisfies_cn_relation() {
        for (big_r, r, d) in [(2.0, 0.75, 1.0), (1.0, 0.3, 0.2), (5.0, 0.1, 4.5)] {
            let step = tangent_step(big_r, r, d).unwrap();
            let ell = EllipticModulus::new(modulus(big_r, r, d).unwrap()).unwrap();
            let cn = ell.sn_cn_dn(step).unwrap().cn;
            assert!((cn - r / (big_r + d)).abs() < 1e-12);
        }
        let euler = CirclePair::new(2.0, 0.75, 1.0).unwrap();
        let k = euler.elliptic().unwrap().quarter_period();
        assert!((euler.tangent_step().unwrap() - 2.0 * k / 3.0).abs() < 1e-12);
    }

    #[test]
    fn solved_polygons_are_tangent() {
        for (n, tau) in [(3, 1), (5, 2), (8, 3), (12, 5)] {
            let pair = poncelet_solve(3.0, 0.8, n, tau).unwrap();
            for u in [0.0, 0.37, 2.2] {
                let poly = pair.vertices(u).unwrap();
                assert!(
                    tangency_residual(pair.circles(), &poly) < 1e-10,
                    "({n},{tau})"
                );
            }
        }
    }
}
