use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("non-finite argument {0}")]
    NonFinite(f64),

    #[error("point coincides with the centre of the circle")]
    Singular,

    #[error("line passes through the centre of the circle")]
    LineThroughCenter,

    #[error("circles intersect (discriminant {0:e})")]
    IntersectingCircles(f64),

    #[error("circles are concentric")]
    Concentric,

    #[error("circles are not nested: r + d = {sum} >= R = {outer}")]
    NotNested { sum: f64, outer: f64 },

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("side {0} is degenerate (coincident endpoints)")]
    DegenerateSide(usize),

    #[error("point lies on sideline {0}")]
    PointOnSideline(usize),

    #[error("degenerate triangle")]
    DegenerateTriangle,

    #[error("invalid winding: tau = {tau} for N = {n} (need 1 <= tau < N/2, gcd(tau, N) = 1)")]
    InvalidWinding { n: u32, tau: u32 },

    #[error("no sign change on [{lo}, {hi}]: residuals {f_lo:e} and {f_hi:e}")]
    NoBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("closure step is not attained: residual {lo_residual:e} at r -> 0, {hi_residual:e} at r -> R - d")]
    NoRoot { lo_residual: f64, hi_residual: f64 },

    #[error("pair does not close: tangent step {step} but closure step {sigma}")]
    NotClosing { step: f64, sigma: f64 },

    #[error("conics are not confocal: c^2 = {outer} vs {caustic}")]
    NotConfocal { outer: f64, caustic: f64 },

    #[error("caustic semi-axis {a_prime} must lie between the focal distance {c} and the table semi-axis")]
    NoNestedImage { a_prime: f64, c: f64 },

    #[error("point is not a focus of the conic (distance {0:e})")]
    FocusMismatch(f64),

    #[error("vertex {index} is off the table (residual {residual:e})")]
    OffTable { index: usize, residual: f64 },

    #[error("side {side} passes too close to the polarity centre (distance {distance:e})")]
    PoleAtInfinity { side: usize, distance: f64 },

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
