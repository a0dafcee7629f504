//! Planar primitives and the inversive, polar and pedal transforms.

mod conic;
mod polygon;
mod primitives;
mod transforms;

pub use conic::{Conic, ConicKind};
pub use polygon::Polygon;
pub use primitives::{Circle, Line, Point};
pub use transforms::{
    collinearity_residual, invert_point, limiting_points, pedal_polygon, polar_line, polar_polygon,
    pole_of_line,
};
