//! Shared helpers for the benchmark targets.

use offcenter_core::MapParams;

/// Parameter pairs spanning the interesting dynamical regimes.
pub fn sample_params() -> Vec<MapParams> {
    [
        (0.2, 0.9),
        (0.45, std::f64::consts::PI),
        (0.6, 0.0),
        (0.9, 1.3),
    ]
    .into_iter()
    .map(|(r, omega)| MapParams::new(r, omega).unwrap())
    .collect()
}
