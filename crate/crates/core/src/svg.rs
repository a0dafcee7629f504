//! Static SVG figure of the five families at one parameter value.

use std::fmt::Write;

use crate::bicentric::BicentricPair;
use crate::derived::{confocal_ellipses_from_bicentric, confocal_hyperbolas_from_bicentric};
use crate::error::{Error, Result};
use crate::geometry::{Conic, ConicKind, Point};
use crate::invariants::{family_polygon, Family};

const MARGIN: f64 = 0.05;

const STYLE: &str = "\
path,circle,ellipse{fill:none;vector-effect:non-scaling-stroke;stroke-width:1.5}
.circle{stroke:#555}.conic{stroke:#999;stroke-dasharray:4 3}
.bicentric{stroke:#e67e22}.billiard{stroke:#2471a3}.hyperbolic{stroke:#229954}
.pedal_l1{stroke:#e84393}.pedal_l2{stroke:#8e44ad}.focus_inversive{stroke:#c0392b;stroke-dasharray:2 2}
.point{fill:#000;stroke:none}";

/// The families drawn when none are requested.
pub const DEFAULT_FAMILIES: [Family; 5] = [
    Family::Bicentric,
    Family::Billiard,
    Family::Hyperbolic,
    Family::PedalL1,
    Family::PedalL2,
];

struct Bounds {
    lo: Point,
    hi: Point,
}

impl Bounds {
    fn new() -> Self {
        Self {
            lo: Point::new(f64::INFINITY, f64::INFINITY),
            hi: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, p: Point) {
        self.lo = Point::new(self.lo.x.min(p.x), self.lo.y.min(p.y));
        self.hi = Point::new(self.hi.x.max(p.x), self.hi.y.max(p.y));
    }

    fn add_box(&mut self, center: Point, rx: f64, ry: f64) {
        self.add(center - Point::new(rx, ry));
        self.add(center + Point::new(rx, ry));
    }

    fn padded(&self) -> Self {
        let span = (self.hi.x - self.lo.x).max(self.hi.y - self.lo.y);
        let pad = Point::new(MARGIN * span, MARGIN * span);
        Self {
            lo: self.lo - pad,
            hi: self.hi + pad,
        }
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

/// `y` is flipped so the figure reads with the usual orientation.
fn path_data(points: &[Point], closed: bool) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{},{} ", fmt(p.x), fmt(-p.y));
    }
    if closed {
        d.push('Z');
    }
    d.trim_end().to_string()
}

/// Hyperbola branches clipped to the vertical extent of `view`.
fn hyperbola_paths(h: &Conic, view: &Bounds) -> Vec<String> {
    let reach = (view.lo.y - h.center.y)
        .abs()
        .max((view.hi.y - h.center.y).abs());
    let t_max = (reach / h.b).asinh();
    [1.0, -1.0]
        .iter()
        .map(|&side| {
            let pts: Vec<Point> = (0..=200)
                .map(|i| {
                    let t = -t_max + 2.0 * t_max * i as f64 / 200.0;
                    h.center + Point::new(side * h.a * t.cosh(), h.b * t.sinh())
                })
                .collect();
            path_data(&pts, false)
        })
        .collect()
}

/// Renders circles, conics, limiting points and one path per requested
/// family. A family undefined at `u` is emitted as an empty path marked
/// `data-excluded`.
pub fn render(pair: &BicentricPair, u: f64, rho: f64, families: &[Family]) -> Result<String> {
    if families.is_empty() {
        return Err(Error::Usage("no family to render".into()));
    }
    let ellipses = confocal_ellipses_from_bicentric(pair, rho)?;
    let hyperbolas = confocal_hyperbolas_from_bicentric(pair, rho)?;
    let polygons: Vec<(Family, Option<Vec<Point>>)> = families
        .iter()
        .map(|&f| {
            (
                f,
                family_polygon(f, pair, u, rho)
                    .ok()
                    .map(|p| p.vertices().to_vec()),
            )
        })
        .collect();

    let mut bounds = Bounds::new();
    let outer = pair.circles().outer_circle();
    bounds.add_box(outer.center, outer.radius, outer.radius);
    for c in [ellipses.outer, ellipses.caustic] {
        bounds.add_box(c.center, c.a, c.b);
    }
    for p in polygons.iter().filter_map(|(_, p)| p.as_ref()).flatten() {
        bounds.add(*p);
    }
    bounds.add(pair.l2());
    let view = bounds.padded();

    let mut svg = String::new();
    let (w, h) = (view.hi.x - view.lo.x, view.hi.y - view.lo.y);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        fmt(view.lo.x),
        fmt(-view.hi.y),
        fmt(w),
        fmt(h)
    );
    let _ = writeln!(svg, "<style>{STYLE}</style>");
    for c in [pair.circles().outer_circle(), pair.circles().inner_circle()] {
        let _ = writeln!(
            svg,
            r#"<circle class="circle" cx="{}" cy="{}" r="{}"/>"#,
            fmt(c.center.x),
            fmt(-c.center.y),
            fmt(c.radius)
        );
    }
    for c in [ellipses.outer, ellipses.caustic] {
        let _ = writeln!(
            svg,
            r#"<ellipse class="conic" cx="{}" cy="{}" rx="{}" ry="{}"/>"#,
            fmt(c.center.x),
            fmt(-c.center.y),
            fmt(c.a),
            fmt(c.b)
        );
    }
    for c in [hyperbolas.outer, hyperbolas.caustic] {
        debug_assert_eq!(c.kind, ConicKind::Hyperbola);
        for d in hyperbola_paths(&c, &view) {
            let _ = writeln!(svg, r#"<path class="conic" d="{d}"/>"#);
        }
    }
    for (family, pts) in &polygons {
        match pts {
            Some(pts) => {
                let _ = writeln!(
                    svg,
                    r#"<path class="{}" data-family="{}" d="{}"/>"#,
                    family.id(),
                    family.id(),
                    path_data(pts, true)
                );
            }
            None => {
                let _ = writeln!(
                    svg,
                    r#"<path class="{}" data-family="{}" data-excluded="true" d=""/>"#,
                    family.id(),
                    family.id()
                );
            }
        }
    }
    let dot = 0.006 * w.max(h);
    for p in [pair.l1(), pair.l2()] {
        let _ = writeln!(
            svg,
            r#"<circle class="point" cx="{}" cy="{}" r="{}"/>"#,
            fmt(p.x),
            fmt(-p.y),
            fmt(dot)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
