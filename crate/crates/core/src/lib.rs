//! Numerical dynamics of the off-center reflection circle map.
//!
//! The crate is organized as:
//!
//! * [`map`]    — exact map/derivative kernels and the rational-map form;
//! * [`orbit`]  — iteration, periodic-orbit search, attractor census;
//! * [`atlas`]  — bifurcation boundary curves, branch formulas, constants,
//!   and parameter-plane classification;
//! * [`verify`] — a self-checking harness that replays the catalog of
//!   dynamical facts about the family against independent oracles;
//! * [`solve`]  — the bracketing/bisection/Newton machinery underneath.

pub mod atlas;
pub mod error;
pub mod map;
pub mod orbit;
pub mod solve;
pub mod verify;

pub use atlas::{ConstantRow, ConstantsTable, QuarticCoefficients, RegionKind};
pub use error::{Error, Result};
pub use map::{
    blaschke_image, circular_distance, h_cubic, incident_angle, incident_angle_series,
    reduce_angle, DerivBundle, LiftParamPartials, MapParams,
};
pub use orbit::{
    AttractorScan, CriticalPair, CycleRecord, CycleSearch, Stability, SymmetryClass,
};
pub use verify::{VerifyReport, VerifyResult};
