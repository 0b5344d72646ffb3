use thiserror::Error;

/// Domain and solver errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("radius r = {0} outside [0, 1)")]
    InvalidRadius(f64),
    #[error("omega = {0} outside (-pi, pi]")]
    InvalidOmega(f64),
    #[error("series truncation order must be >= 1")]
    InvalidSeriesOrder,
    #[error("cycle period must be >= 1")]
    InvalidPeriod,
    #[error("grid density {0} below minimum 512")]
    GridTooCoarse(usize),
    #[error("no critical points: r = {0} <= 1/3 gives a homeomorphism")]
    NoCriticalPoints(f64),
    #[error("symmetric cycles require omega in {{0, pi}}, got {0}")]
    SymmetricOmegaRequired(f64),
    #[error("angle b_r undefined for r = {0} < 1/2")]
    AngleBUndefined(f64),
    #[error("period-doubling boundary undefined for r = {0} <= 1/2")]
    PeriodDoublingBoundaryUndefined(f64),
    #[error("no symmetric 2-cycle: omega = 0 requires r > 1/2, got r = {0}")]
    TwoCycleUndefined(f64),
    #[error("schwarzian derivative singular at critical point (r = {r}, x = {x})")]
    SchwarzianSingular { r: f64, x: f64 },
    #[error("solver failed: {0}")]
    SolveFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
