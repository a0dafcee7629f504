//! Poncelet bicentric polygon families and their invariants.
//!
//! The bicentric family between two nested circles is generated from
//! Jacobi's amplitude function. From that hub the crate derives four more
//! families: the elliptic and hyperbolic billiards (polar images with
//! respect to the limiting points), the two limiting-point pedals, and the
//! focus-inversive polygons. [`invariants`] measures them over the family
//! parameter and certifies which quantities stay fixed.
//!
//! All geometry is expressed in one canonical frame: the outer circle of
//! radius `R` at the origin and the inner circle of radius `r` centred at
//! `(-d, 0)`. Closed-form formulas written for other frames go through the
//! explicit maps in [`frames`].

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bicentric;
pub mod cli;
pub mod closed;
pub mod derived;
pub mod elliptic;
pub mod error;
pub mod frames;
pub mod geometry;
pub mod invariants;
pub mod io;
pub mod roots;
pub mod svg;

pub use bicentric::{BicentricPair, CirclePair};
pub use error::{Error, Result};
pub use geometry::{Circle, Conic, ConicKind, Line, Point, Polygon};
