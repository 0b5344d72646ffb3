//! Exact kernels for the off-center reflection circle map.
//!
//! A ray leaves the interior point (r, 0), hits the unit circle at angle `x`,
//! and is sent on with a fixed deviation controlled by `omega`.  On the
//! universal cover the map has the lift
//!
//! ```text
//! R(x) = x + omega - 2 iota(x),    iota(x) = Arg(cos x - r + i sin x) - x,
//! ```
//!
//! normalized so that R(0) = omega.  Everything in this module is a pure
//! function of its arguments; angles are reduced to the half-open principal
//! range (-pi, pi] with `reduce_angle(pi) == pi`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Reduce an angle to the principal range (-pi, pi].
///
/// The reduction is half-open: both `pi` and `-pi` map to `pi`.
pub fn reduce_angle(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y > PI {
        y - TAU
    } else {
        y
    }
}

/// Distance between two angles on the circle, in [0, pi].
pub fn circular_distance(a: f64, b: f64) -> f64 {
    reduce_angle(a - b).abs()
}

fn validate_radius(r: f64) -> Result<()> {
    // r = 1 is rejected everywhere: the incident angle degenerates to a
    // discontinuous function there.
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::InvalidRadius(r))
    }
}

/// Incident angle at the circle point with angle `x`, source at (r, 0).
///
/// Branch-safe closed form: the raw value `atan2(sin x, cos x - r) - x` is
/// re-centered by a multiple of 2pi so the result lands in [-pi/2, pi/2].
/// Odd and 2pi-periodic in `x`; its maximum over a period is
/// `pi/2 - acos(r)`, attained at `x = acos(r)`.
pub fn incident_angle(r: f64, x: f64) -> Result<f64> {
    validate_radius(r)?;
    Ok(iota(r, x))
}

fn iota(r: f64, x: f64) -> f64 {
    let xr = reduce_angle(x);
    let mut v = xr.sin().atan2(xr.cos() - r) - xr;
    // v is within 2pi of the true value, which lies in [-pi/2, pi/2].
    if v > FRAC_PI_2 {
        v -= TAU;
    } else if v < -FRAC_PI_2 {
        v += TAU;
    }
    v
}

/// Partial sum through k = `terms` of the sine series
/// `sum_k r^k sin(k x) / k` for the incident angle.
///
/// With `terms = 1` this is the classical `r sin x` perturbation term.  The
/// truncation tail is bounded by `r^(K+1) / ((K+1)(1-r))`.
pub fn incident_angle_series(r: f64, x: f64, terms: u32) -> Result<f64> {
    validate_radius(r)?;
    if terms < 1 {
        return Err(Error::InvalidSeriesOrder);
    }
    let xr = reduce_angle(x);
    let mut acc = 0.0;
    let mut rk = 1.0;
    for k in 1..=terms {
        rk *= r;
        acc += rk * (k as f64 * xr).sin() / k as f64;
    }
    Ok(acc)
}

/// The lift `R` and its first three x-derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivBundle {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

/// First-order responses of the lift to the radius parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiftParamPartials {
    /// dR/dr, the shift of the image point.
    pub d_value: f64,
    /// dR'/dr, the shift of the derivative.
    pub d_deriv: f64,
}

/// Parameter pair (r, omega) naming one member of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapParams {
    r: f64,
    omega: f64,
}

impl MapParams {
    /// Validates 0 <= r < 1 and -pi < omega <= pi.
    pub fn new(r: f64, omega: f64) -> Result<Self> {
        validate_radius(r)?;
        if !(omega > -PI && omega <= PI) {
            return Err(Error::InvalidOmega(omega));
        }
        Ok(Self { r, omega })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Whether the reflection x -> -x commutes with the map.
    pub fn is_reflection_symmetric(&self) -> bool {
        self.omega == 0.0 || self.omega == PI
    }

    /// Unreduced lift, `R(x) = x + omega - 2 iota(x)`.
    ///
    /// `lift(0) == omega` exactly, and `lift(x + 2pi) == lift(x) + 2pi`.
    pub fn lift(&self, x: f64) -> f64 {
        x + self.omega - 2.0 * iota(self.r, x)
    }

    /// n-fold composition of the lift.
    pub fn lift_iter(&self, x: f64, n: usize) -> f64 {
        let mut v = x;
        for _ in 0..n {
            v = self.lift(v);
        }
        v
    }

    /// The circle map itself: lift reduced into (-pi, pi].
    pub fn circle_map(&self, x: f64) -> f64 {
        reduce_angle(self.lift(x))
    }

    /// Lift value together with its first three x-derivatives.
    ///
    /// The common denominator `1 - 2 r cos x + r^2 = (cos x - r)^2 + sin^2 x`
    /// is strictly positive for r < 1.
    pub fn lift_derivatives(&self, x: f64) -> DerivBundle {
        let xr = reduce_angle(x);
        let (s, c) = xr.sin_cos();
        let r = self.r;
        let den = 1.0 - 2.0 * r * c + r * r;
        let d1 = (1.0 - 4.0 * r * c + 3.0 * r * r) / den;
        let d2 = 2.0 * r * (1.0 - r * r) * s / (den * den);
        let d3 = 2.0 * r * (1.0 - r * r) * ((1.0 + r * r) * c - 2.0 * r * (1.0 + s * s))
            / (den * den * den);
        DerivBundle {
            value: self.lift(x),
            d1,
            d2,
            d3,
        }
    }

    /// Slope of the lift alone (cheaper than the full bundle).
    pub fn lift_d1(&self, x: f64) -> f64 {
        let xr = reduce_angle(x);
        let (s, c) = xr.sin_cos();
        let r = self.r;
        let den = (c - r) * (c - r) + s * s;
        (1.0 - 4.0 * r * c + 3.0 * r * r) / den
    }

    /// Partials of R and R' with respect to r (independent of omega).
    pub fn lift_param_partials(&self, x: f64) -> LiftParamPartials {
        let xr = reduce_angle(x);
        let (s, c) = xr.sin_cos();
        let r = self.r;
        let den = 1.0 - 2.0 * r * c + r * r;
        LiftParamPartials {
            d_value: -2.0 * s / den,
            d_deriv: (4.0 * r - 2.0 * (1.0 + r * r) * c) / (den * den),
        }
    }

    /// d/dr of the n-th iterate multiplier `(R^n)'(x)` at fixed `x`, by the
    /// chain rule over the orbit.
    ///
    /// With `u_i = d x_i / dr` propagated along the orbit
    /// (`u_0 = 0`, `u_{i+1} = dR/dr(x_i) + R'(x_i) u_i`), each factor of the
    /// multiplier product contributes `dR'/dr(x_i) + R''(x_i) u_i`.
    pub fn multiplier_param_partial(&self, x: f64, n: usize) -> f64 {
        let mut factors = Vec::with_capacity(n);
        let mut terms = Vec::with_capacity(n);
        let mut xi = x;
        let mut u = 0.0;
        for _ in 0..n {
            let b = self.lift_derivatives(xi);
            let p = self.lift_param_partials(xi);
            factors.push(b.d1);
            terms.push(p.d_deriv + b.d2 * u);
            u = p.d_value + b.d1 * u;
            xi = b.value;
        }
        // sum_i terms[i] * prod_{j != i} factors[j], without dividing so a
        // zero factor (critical point on the orbit) stays exact.
        let mut prefix = vec![1.0; n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i] * factors[i];
        }
        let mut suffix = vec![1.0; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] * factors[i];
        }
        (0..n).map(|i| terms[i] * prefix[i] * suffix[i + 1]).sum()
    }

    /// d/dr of the second-iterate multiplier `(R^2)'(x)`.
    pub fn second_iterate_multiplier_partial(&self, x: f64) -> f64 {
        self.multiplier_param_partial(x, 2)
    }

    /// Closed form of `second_iterate_multiplier_partial` valid when
    /// `R(x) = x mod 2pi`.
    pub fn second_iterate_partial_at_fixed(&self, x: f64) -> f64 {
        let b = self.lift_derivatives(x);
        let p = self.lift_param_partials(x);
        b.d1 * (2.0 * p.d_deriv + b.d2 * p.d_value)
    }

    /// Closed form of `second_iterate_multiplier_partial` valid when
    /// `R(x) = -x mod 2pi`, using that R' and dR'/dr are even while R'' and
    /// dR/dr are odd.
    pub fn second_iterate_partial_at_reflected(&self, x: f64) -> f64 {
        let b = self.lift_derivatives(x);
        let p = self.lift_param_partials(x);
        b.d1 * (2.0 * p.d_deriv - b.d2 * p.d_value)
    }

    /// The product `R'(x) * dR'/dr(x) * (1 + dR/dr(x))`.
    ///
    /// Its last factor vanishing is the degeneracy condition for
    /// period-doubling along the fixed-point boundary; see
    /// `atlas::degenerate_r`.  Note this product is not the derivative
    /// `second_iterate_multiplier_partial` — the two differ away from the
    /// degeneracy analysis it serves.
    pub fn multiplier_partial_product(&self, x: f64) -> f64 {
        let b = self.lift_derivatives(x);
        let p = self.lift_param_partials(x);
        b.d1 * p.d_deriv * (1.0 + p.d_value)
    }

    /// Schwarzian derivative `R'''/R' - (3/2)(R''/R')^2`.
    ///
    /// Reported as an explicit error at a critical point (R'(x) = 0) so a
    /// caller cannot silently average across the pole.
    pub fn schwarzian(&self, x: f64) -> Result<f64> {
        let b = self.lift_derivatives(x);
        if b.d1 == 0.0 {
            return Err(Error::SchwarzianSingular { r: self.r, x });
        }
        let ratio = b.d2 / b.d1;
        let s = b.d3 / b.d1 - 1.5 * ratio * ratio;
        if s.is_finite() {
            Ok(s)
        } else {
            Err(Error::SchwarzianSingular { r: self.r, x })
        }
    }

    /// Schwarzian derivative through the factored cubic `H`:
    /// `r (1 - r^2) H(r, cos x) / [(1 - 4 r cos x + 3 r^2)^2 (1 - 2 r cos x + r^2)^2]`.
    pub fn schwarzian_closed_form(&self, x: f64) -> Result<f64> {
        let xr = reduce_angle(x);
        let c = xr.cos();
        let r = self.r;
        let num = 1.0 - 4.0 * r * c + 3.0 * r * r;
        if num == 0.0 {
            return Err(Error::SchwarzianSingular { r, x });
        }
        let den = 1.0 - 2.0 * r * c + r * r;
        let s = r * (1.0 - r * r) * h_cubic(r, c) / (num * num * den * den);
        if s.is_finite() {
            Ok(s)
        } else {
            Err(Error::SchwarzianSingular { r, x })
        }
    }
}

/// The cubic `H(r, y)` whose sign controls the Schwarzian derivative:
///
/// ```text
/// H(r, y) = -(14r + 18r^3) + (2 + 40r^2 + 6r^4) y + 2r(1 - r^2) y^2 - 16 r^2 y^3
/// ```
///
/// `H(r, -1) = -2 (1+r)^3 (1+3r)` and `H(r, 1) = 2 (1-r)^3 (1-3r)`, both
/// negative for 1/3 < r < 1.  Defined for all real inputs.
pub fn h_cubic(r: f64, y: f64) -> f64 {
    -(14.0 * r + 18.0 * r * r * r)
        + (2.0 + 40.0 * r * r + 6.0 * r * r * r * r) * y
        + 2.0 * r * (1.0 - r * r) * y * y
        - 16.0 * r * r * y * y * y
}

/// Image angle of `e^{ix}` under the rational circle map
/// `z -> -z^2 (1 - r z) / (z - r)`.
///
/// This is the omega = pi member of the family in disguise: the returned
/// angle agrees with `circle_map` at omega = pi.  The pole z = r lies off the
/// unit circle for r < 1.
pub fn blaschke_image(r: f64, x: f64) -> Result<f64> {
    validate_radius(r)?;
    let xr = reduce_angle(x);
    let z = Complex64::from_polar(1.0, xr);
    let w = -z * z * (Complex64::new(1.0, 0.0) - z.scale(r)) / (z - r);
    Ok(reduce_angle(w.arg()))
}
