//! Iteration, periodic-orbit search, and attractor detection.
//!
//! Cycle searches work on the lift: an n-cycle is a root of
//! `R^n(x) - x - 2 pi k` for some winding index |k| <= n, and a symmetric
//! cycle of period 2m is a root of `R^m(x) + x - 2 pi k` that is not an
//! m-periodic point.  Roots are located by sign-change bracketing on a
//! uniform grid, then polished by bisection + Newton.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::map::{circular_distance, reduce_angle, MapParams};
use crate::solve::{refine_bracket, Bracket};

/// Half-width of the neutral band on |multiplier| - 1.
pub const NEUTRAL_BAND: f64 = 1e-8;
/// Per-step closure tolerance for a verified cycle.
pub const STEP_TOL: f64 = 1e-9;
/// Circular distance under which two orbit points are merged.
pub const DEDUP_TOL: f64 = 1e-8;
/// Minimum accepted grid density per unit period.
pub const MIN_GRID: usize = 512;
/// Default transient length before asymptotic sampling.
pub const DEFAULT_TRANSIENT: usize = 10_000;
/// Default number of recorded asymptotic samples.
pub const DEFAULT_SAMPLES: usize = 200;
/// Largest period the attractor detector resolves.
pub const PERIOD_CAP: usize = 64;
/// Block-comparison tolerance for declaring convergence.
pub const CONVERGENCE_TOL: f64 = 1e-9;

/// Stability class of a cycle, from its multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Attracting,
    Repelling,
    Neutral,
}

impl Stability {
    /// Attracting below 1 - 1e-8, repelling above 1 + 1e-8, neutral in the
    /// band between, so exact bifurcation parameters classify stably.
    pub fn from_multiplier(m: f64) -> Self {
        let a = m.abs();
        if a < 1.0 - NEUTRAL_BAND {
            Stability::Attracting
        } else if a > 1.0 + NEUTRAL_BAND {
            Stability::Repelling
        } else {
            Stability::Neutral
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Stability::Attracting => "attracting",
            Stability::Repelling => "repelling",
            Stability::Neutral => "neutral",
        }
    }
}

/// How a cycle sits relative to the reflection x -> -x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    /// Point set invariant with `R^(n/2)(x) = -x != x mod 2pi`.
    Symmetric,
    /// Not reflection-invariant; at omega in {0, pi} it has a twin.
    Asymmetric,
    /// Reflection-invariant as a set without being symmetric.
    SelfTwin,
}

impl SymmetryClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::Asymmetric => "asymmetric",
            SymmetryClass::SelfTwin => "self_twin",
        }
    }
}

/// A verified periodic orbit.
#[derive(Debug, Clone)]
pub struct CycleRecord {
    /// Prime period.
    pub period: usize,
    /// Orbit points in iteration order, rotated so the smallest reduced
    /// angle comes first; `circle_map` sends each to the next.
    pub points: Vec<f64>,
    /// Product of R' over the orbit.
    pub multiplier: f64,
    pub stability: Stability,
    pub symmetry: SymmetryClass,
    /// Reflected orbit for asymmetric cycles of a reflection-symmetric map.
    pub twin_points: Option<Vec<f64>>,
}

/// The two critical points of the map, present for r > 1/3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPair {
    pub x_plus: f64,
    pub x_minus: f64,
}

/// Result of a cycle search: verified cycles plus non-fatal diagnostics.
#[derive(Debug, Clone, Default)]
pub struct CycleSearch {
    pub cycles: Vec<CycleRecord>,
    /// Reports, e.g. distinct roots closer than one grid cell.
    pub warnings: Vec<String>,
}

/// Attractor census from the two critical orbits.
#[derive(Debug, Clone)]
pub struct AttractorScan {
    pub cycles: Vec<CycleRecord>,
    /// Index into `cycles` reached from x_plus and x_minus respectively.
    pub seed_cycle: [Option<usize>; 2],
    /// Set when a critical orbit shows no period <= PERIOD_CAP at the
    /// convergence tolerance.
    pub aperiodic_at_resolution: bool,
}

/// Iterate the circle map `n` steps; returns the n+1 visited angles.
pub fn iterate(p: &MapParams, x0: f64, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut x = reduce_angle(x0);
    out.push(x);
    for _ in 0..n {
        x = p.circle_map(x);
        out.push(x);
    }
    out
}

/// Iterate `transient` steps, then record the next `samples` iterates.
pub fn asymptotic_orbit(p: &MapParams, x0: f64, transient: usize, samples: usize) -> Vec<f64> {
    let mut x = reduce_angle(x0);
    for _ in 0..transient {
        x = p.circle_map(x);
    }
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        x = p.circle_map(x);
        out.push(x);
    }
    out
}

/// The critical pair, where R' vanishes: cos x = (1 + 3 r^2) / (4 r).
///
/// For r <= 1/3 that cosine is >= 1 and the map is a homeomorphism, so the
/// pair does not exist.
pub fn critical_points(r: f64) -> Result<CriticalPair> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::InvalidRadius(r));
    }
    if r <= 1.0 / 3.0 {
        return Err(Error::NoCriticalPoints(r));
    }
    let x_plus = ((1.0 + 3.0 * r * r) / (4.0 * r)).acos();
    Ok(CriticalPair {
        x_plus,
        x_minus: -x_plus,
    })
}

/// Multiplier of a verified cycle: product of R' over its points.
pub fn multiplier(p: &MapParams, points: &[f64]) -> f64 {
    points.iter().map(|&x| p.lift_d1(x)).product()
}

/// Match two point sets up to circular distance `tol` (order-free).
pub fn point_sets_match(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for &x in a {
        for (j, &y) in b.iter().enumerate() {
            if !used[j] && circular_distance(x, y) <= tol {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn reflected_orbit(points: &[f64]) -> Vec<f64> {
    let mirrored: Vec<f64> = points.iter().map(|&x| reduce_angle(-x)).collect();
    canonical_rotation(mirrored)
}

fn canonical_rotation(points: Vec<f64>) -> Vec<f64> {
    let start = points
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(std::cmp::Ordering::Equal))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut out = Vec::with_capacity(points.len());
    out.extend_from_slice(&points[start..]);
    out.extend_from_slice(&points[..start]);
    out
}

fn classify_point_set(p: &MapParams, points: &[f64]) -> (SymmetryClass, Option<Vec<f64>>) {
    let n = points.len();
    if n % 2 == 0 {
        let half = points[n / 2];
        if circular_distance(half, -points[0]) < DEDUP_TOL
            && circular_distance(half, points[0]) > DEDUP_TOL
        {
            return (SymmetryClass::Symmetric, None);
        }
    }
    let mirrored: Vec<f64> = points.iter().map(|&x| reduce_angle(-x)).collect();
    if point_sets_match(points, &mirrored, DEDUP_TOL) {
        (SymmetryClass::SelfTwin, None)
    } else if p.is_reflection_symmetric() {
        (SymmetryClass::Asymmetric, Some(reflected_orbit(points)))
    } else {
        (SymmetryClass::Asymmetric, None)
    }
}

/// Symmetry class of a verified cycle, with the twin orbit for asymmetric
/// ones.  Only meaningful where the reflection commutes with the map.
pub fn classify_symmetry(
    p: &MapParams,
    cycle: &CycleRecord,
) -> Result<(SymmetryClass, Option<Vec<f64>>)> {
    if !p.is_reflection_symmetric() {
        return Err(Error::SymmetricOmegaRequired(p.omega()));
    }
    Ok(classify_point_set(p, &cycle.points))
}

/// Assemble and verify a CycleRecord from one root of the period-n equation.
/// Returns None when the orbit fails closure or has a smaller prime period.
fn build_cycle(p: &MapParams, x_root: f64, n: usize) -> Option<CycleRecord> {
    let mut points = Vec::with_capacity(n);
    let mut x = reduce_angle(x_root);
    for _ in 0..n {
        points.push(x);
        x = p.circle_map(x);
    }
    if circular_distance(x, points[0]) > STEP_TOL {
        return None;
    }
    for d in 1..n {
        if n % d == 0 && circular_distance(points[d], points[0]) < STEP_TOL {
            return None; // closes at a proper divisor
        }
    }
    let points = canonical_rotation(points);
    let m = multiplier(p, &points);
    let (symmetry, twin_points) = classify_point_set(p, &points);
    Some(CycleRecord {
        period: n,
        points,
        multiplier: m,
        stability: Stability::from_multiplier(m),
        symmetry,
        twin_points,
    })
}

fn push_unique(cycles: &mut Vec<CycleRecord>, rec: CycleRecord) -> usize {
    for (i, c) in cycles.iter().enumerate() {
        if c.period == rec.period && point_sets_match(&c.points, &rec.points, DEDUP_TOL) {
            return i;
        }
    }
    cycles.push(rec);
    cycles.len() - 1
}

fn crowding_warnings(mut roots: Vec<f64>, cell: f64) -> Vec<String> {
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let mut out = Vec::new();
    for w in roots.windows(2) {
        let d = circular_distance(w[0], w[1]);
        if d > DEDUP_TOL && d < cell {
            out.push(format!(
                "roots at {:.12} and {:.12} are {:.3e} apart, inside one grid cell ({:.3e}); \
                 raise the grid density to separate them reliably",
                w[0], w[1], d, cell
            ));
        }
    }
    out
}

/// All prime period-n cycles, by sign-change bracketing of
/// `R^n(x) - x - 2 pi k` on a uniform grid of `grid * n` points over one
/// period of the circle, every winding index |k| <= n.
pub fn find_cycles(p: &MapParams, n: usize, grid: usize) -> Result<CycleSearch> {
    if n < 1 {
        return Err(Error::InvalidPeriod);
    }
    if grid < MIN_GRID {
        return Err(Error::GridTooCoarse(grid));
    }
    let total = grid * n;
    let step = TAU / total as f64;
    // grid over (-pi, pi], plus a wrap pair closing the circle
    let xs: Vec<f64> = (1..=total).map(|j| -PI + step * j as f64).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| p.lift_iter(x, n) - x).collect();

    let g = |x: f64, k: i64| p.lift_iter(x, n) - x - TAU * k as f64;
    let dg = |x: f64| {
        let mut m = 1.0;
        let mut xi = x;
        for _ in 0..n {
            m *= p.lift_d1(xi);
            xi = p.lift(xi);
        }
        m - 1.0
    };

    let mut roots: Vec<f64> = Vec::new();
    for j in 0..total {
        let (xa, fa) = (xs[j], fs[j]);
        let (xb, fb) = if j + 1 < total {
            (xs[j + 1], fs[j + 1])
        } else {
            (xs[0] + TAU, fs[0]) // F is 2pi-periodic
        };
        let kmin = (fa.min(fb) / TAU).floor() as i64;
        let kmax = (fa.max(fb) / TAU).ceil() as i64;
        for k in kmin.max(-(n as i64))..=kmax.min(n as i64) {
            let (ga, gb) = (fa - TAU * k as f64, fb - TAU * k as f64);
            if ga == 0.0 {
                roots.push(reduce_angle(xa));
            } else if ga * gb < 0.0 {
                let bracket = Bracket {
                    lo: xa,
                    hi: xb,
                    flo: ga,
                };
                let root = refine_bracket(|x| g(x, k), &dg, bracket, 1e-8, 1e-12);
                roots.push(reduce_angle(root));
            }
        }
    }

    let warnings = crowding_warnings(roots.clone(), step);
    let mut cycles = Vec::new();
    for root in roots {
        if let Some(rec) = build_cycle(p, root, n) {
            push_unique(&mut cycles, rec);
        }
    }
    sort_cycles(&mut cycles);
    Ok(CycleSearch { cycles, warnings })
}

/// Symmetric cycles of period 2m at omega in {0, pi}: roots of
/// `R^m(x) + x - 2 pi k` that are not m-periodic points.
pub fn find_symmetric_cycles(p: &MapParams, half_period: usize, grid: usize) -> Result<CycleSearch> {
    if !p.is_reflection_symmetric() {
        return Err(Error::SymmetricOmegaRequired(p.omega()));
    }
    let m = half_period;
    if m < 1 {
        return Err(Error::InvalidPeriod);
    }
    if grid < MIN_GRID {
        return Err(Error::GridTooCoarse(grid));
    }
    let total = grid * m;
    let step = TAU / total as f64;
    let xs: Vec<f64> = (0..=total).map(|j| -PI + step * j as f64).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| p.lift_iter(x, m) + x).collect();

    let g = |x: f64, k: i64| p.lift_iter(x, m) + x - TAU * k as f64;
    let dg = |x: f64| {
        let mut mul = 1.0;
        let mut xi = x;
        for _ in 0..m {
            mul *= p.lift_d1(xi);
            xi = p.lift(xi);
        }
        mul + 1.0
    };

    let kbound = m as i64 + 1;
    let mut roots = Vec::new();
    for j in 0..total {
        let (xa, fa) = (xs[j], fs[j]);
        let (xb, fb) = (xs[j + 1], fs[j + 1]);
        let kmin = (fa.min(fb) / TAU).floor() as i64;
        let kmax = (fa.max(fb) / TAU).ceil() as i64;
        for k in kmin.max(-kbound)..=kmax.min(kbound) {
            let (ga, gb) = (fa - TAU * k as f64, fb - TAU * k as f64);
            if ga == 0.0 {
                roots.push(reduce_angle(xa));
            } else if ga * gb < 0.0 {
                let bracket = Bracket {
                    lo: xa,
                    hi: xb,
                    flo: ga,
                };
                let root = refine_bracket(|x| g(x, k), &dg, bracket, 1e-8, 1e-12);
                roots.push(reduce_angle(root));
            }
        }
    }

    let warnings = crowding_warnings(roots.clone(), step);
    let mut cycles = Vec::new();
    for root in roots {
        // drop trivial solutions fixed by R^m
        if circular_distance(p.lift_iter(root, m), root) < DEDUP_TOL {
            continue;
        }
        if let Some(rec) = build_cycle(p, root, 2 * m) {
            if rec.symmetry == SymmetryClass::Symmetric {
                push_unique(&mut cycles, rec);
            }
        }
    }
    sort_cycles(&mut cycles);
    Ok(CycleSearch { cycles, warnings })
}

fn sort_cycles(cycles: &mut [CycleRecord]) {
    cycles.sort_by(|a, b| {
        (a.period, a.points[0])
            .partial_cmp(&(b.period, b.points[0]))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
}

/// Smallest block period q <= cap such that the last two q-blocks of the
/// sample tail agree within `tol`.
fn detect_period(samples: &[f64], cap: usize, tol: f64) -> Option<usize> {
    let len = samples.len();
    for q in 1..=cap.min(len / 2) {
        let mut ok = true;
        for i in 0..q {
            if circular_distance(samples[len - 1 - i], samples[len - 1 - q - i]) > tol {
                ok = false;
                break;
            }
        }
        if ok {
            return Some(q);
        }
    }
    None
}

/// Newton-polish a near-periodic point toward the exact cycle; falls back to
/// the input when Newton stalls (e.g. near-neutral multiplier).
fn polish_cycle_point(p: &MapParams, x0: f64, q: usize) -> f64 {
    let k = ((p.lift_iter(x0, q) - x0) / TAU).round();
    let g = |x: f64| p.lift_iter(x, q) - x - TAU * k;
    let mut x = x0;
    let mut gx = g(x);
    for _ in 0..50 {
        if gx.abs() < 1e-13 {
            break;
        }
        let mut d = 1.0;
        let mut xi = x;
        for _ in 0..q {
            d *= p.lift_d1(xi);
            xi = p.lift(xi);
        }
        let slope = d - 1.0;
        if slope == 0.0 {
            break;
        }
        let next = x - gx / slope;
        let gn = g(next);
        if !next.is_finite() || gn.abs() >= gx.abs() || (next - x0).abs() > 1e-3 {
            break;
        }
        x = next;
        gx = gn;
    }
    x
}

/// Census of attracting cycles from the two critical orbits.
///
/// Runs the default asymptotic sampling from both critical points, detects
/// periodicity up to PERIOD_CAP by block comparison, polishes, and returns
/// the distinct cycles (0, 1, or 2).  A seed with no resolved period sets
/// `aperiodic_at_resolution` instead of failing.
pub fn detect_attractors(p: &MapParams) -> Result<AttractorScan> {
    let crit = critical_points(p.r())?;
    let mut cycles = Vec::new();
    let mut seed_cycle = [None, None];
    let mut aperiodic = false;
    for (si, seed) in [crit.x_plus, crit.x_minus].into_iter().enumerate() {
        let samples = asymptotic_orbit(p, seed, DEFAULT_TRANSIENT, DEFAULT_SAMPLES);
        let Some(q) = detect_period(&samples, PERIOD_CAP, CONVERGENCE_TOL) else {
            aperiodic = true;
            continue;
        };
        let raw = samples[samples.len() - q];
        let polished = polish_cycle_point(p, raw, q);
        let rec = build_cycle(p, polished, q).or_else(|| build_cycle(p, raw, q));
        match rec {
            Some(rec) => {
                let idx = cycles
                    .iter()
                    .position(|c: &CycleRecord| point_sets_match(&c.points, &rec.points, 1e-6))
                    .unwrap_or_else(|| {
                        cycles.push(rec);
                        cycles.len() - 1
                    });
                seed_cycle[si] = Some(idx);
            }
            None => aperiodic = true,
        }
    }
    Ok(AttractorScan {
        cycles,
        seed_cycle,
        aperiodic_at_resolution: aperiodic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn params(r: f64, omega: f64) -> MapParams {
        MapParams::new(r, omega).unwrap()
    }

    #[test]
    fn iterate_rigid_rotation() {
        let p = params(0.0, FRAC_PI_2);
        let orbit = iterate(&p, 0.0, 4);
        let want = [0.0, FRAC_PI_2, PI, -FRAC_PI_2, 0.0];
        for (a, b) in orbit.iter().zip(want) {
            assert!(circular_distance(*a, b) < 1e-12);
        }
    }

    #[test]
    fn iterate_self_twin_two_cycle() {
        let p = params(0.3, PI);
        let orbit = iterate(&p, 0.0, 2);
        assert!(circular_distance(orbit[0], 0.0) < 1e-12);
        assert!(circular_distance(orbit[1], PI) < 1e-12);
        assert!(circular_distance(orbit[2], 0.0) < 1e-12);
    }

    #[test]
    fn iterate_converges_to_symmetric_two_cycle() {
        let p = params(0.6, 0.0);
        let orbit = iterate(&p, 0.1, 10_000);
        let c1 = (1.0f64 / 1.2).acos();
        let tail = &orbit[orbit.len() - 4..];
        for &x in tail {
            let d = circular_distance(x, c1).min(circular_distance(x, -c1));
            assert!(d < 1e-6, "tail point {x} not on +-c1");
        }
    }

    #[test]
    fn critical_points_match_closed_form() {
        assert_eq!(critical_points(0.2), Err(Error::NoCriticalPoints(0.2)));
        assert_eq!(
            critical_points(1.0 / 3.0),
            Err(Error::NoCriticalPoints(1.0 / 3.0))
        );
        assert!(critical_points(1.2).is_err());

        let pair = critical_points(0.5).unwrap();
        assert!((pair.x_plus - 0.875f64.acos()).abs() < 1e-15);
        assert!((pair.x_plus - 0.5053605102841573).abs() < 1e-12);
        assert_eq!(pair.x_minus, -pair.x_plus);
        let pair6 = critical_points(0.6).unwrap();
        assert!((pair6.x_plus - (13.0f64 / 15.0).acos()).abs() < 1e-15);

        // d1 vanishes there, and x_plus -> 0 as r -> 1/3+
        for &r in &[0.4, 0.5, 0.6, 0.9] {
            let p = params(r, 0.0);
            let pair = critical_points(r).unwrap();
            assert!(p.lift_derivatives(pair.x_plus).d1.abs() < 1e-10);
            assert!(p.lift_derivatives(pair.x_minus).d1.abs() < 1e-10);
        }
        assert!(critical_points(1.0 / 3.0 + 1e-9).unwrap().x_plus < 1e-3);
    }

    #[test]
    fn fixed_points_at_omega_zero() {
        let p = params(0.5, 0.0);
        let found = find_cycles(&p, 1, 512).unwrap();
        assert_eq!(found.cycles.len(), 2);
        assert!(circular_distance(found.cycles[0].points[0], 0.0) < 1e-12);
        assert!(circular_distance(found.cycles[1].points[0], PI) < 1e-12);
        // multiplier at x = 0 is (1-3r)/(1-r) = -1 here: exactly neutral
        assert_eq!(found.cycles[0].stability, Stability::Neutral);
        assert_eq!(found.cycles[1].stability, Stability::Repelling);
    }

    #[test]
    fn period_two_search_contains_self_twin_cycle() {
        for &r in &[0.2, 0.45, 0.7] {
            let p = params(r, PI);
            let found = find_cycles(&p, 2, 512).unwrap();
            let hit = found.cycles.iter().any(|c| {
                point_sets_match(&c.points, &[0.0, PI], 1e-10)
                    && c.symmetry == SymmetryClass::SelfTwin
            });
            assert!(hit, "self-twin 2-cycle missing at r={r}");
        }
    }

    #[test]
    fn symmetric_two_cycle_multiplier() {
        let p = params(0.6, 0.0);
        let found = find_cycles(&p, 2, 512).unwrap();
        let c1 = (1.0f64 / 1.2).acos();
        let cycle = found
            .cycles
            .iter()
            .find(|c| point_sets_match(&c.points, &[-c1, c1], 1e-9))
            .expect("symmetric 2-cycle");
        let expect = ((1.0 - 3.0 * 0.36) / 0.36f64).powi(2);
        assert!((cycle.multiplier - expect).abs() < 1e-9);
        assert!((cycle.multiplier - 0.04938271604938281).abs() < 1e-9);
        assert_eq!(cycle.symmetry, SymmetryClass::Symmetric);
        assert_eq!(cycle.stability, Stability::Attracting);
    }

    #[test]
    fn cycle_search_validates_inputs() {
        let p = params(0.5, 0.0);
        assert!(matches!(find_cycles(&p, 0, 512), Err(Error::InvalidPeriod)));
        assert!(matches!(find_cycles(&p, 1, 100), Err(Error::GridTooCoarse(100))));
        assert!(matches!(
            find_symmetric_cycles(&params(0.5, 0.4), 1, 512),
            Err(Error::SymmetricOmegaRequired(_))
        ));
    }

    #[test]
    fn symmetric_search_finds_c1_and_c2() {
        let p = params(0.6, 0.0);
        let found = find_symmetric_cycles(&p, 1, 512).unwrap();
        assert_eq!(found.cycles.len(), 1);
        let c1 = (1.0f64 / 1.2).acos();
        assert!(point_sets_match(&found.cycles[0].points, &[-c1, c1], 1e-10));

        let p = params(0.4, PI);
        let found = find_symmetric_cycles(&p, 1, 512).unwrap();
        assert_eq!(found.cycles.len(), 1);
        let c2 = ((1.0 - (1.0f64 + 8.0 * 0.16).sqrt()) / 1.6).acos();
        assert!((c2 - 1.8951848970962637).abs() < 1e-12);
        assert!(point_sets_match(&found.cycles[0].points, &[-c2, c2], 1e-10));
        assert_eq!(found.cycles[0].stability, Stability::Repelling);
    }

    #[test]
    fn symmetric_four_cycle_exists_above_threshold() {
        let p = params(0.5, PI);
        let found = find_symmetric_cycles(&p, 2, 512).unwrap();
        assert_eq!(found.cycles.len(), 1);
        let cyc = &found.cycles[0];
        assert_eq!(cyc.period, 4);
        // cosines of the cycle points, for cross-checks against the quartic
        let mut cosines: Vec<f64> = cyc.points.iter().map(|x| x.cos()).collect();
        cosines.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((cosines[0] - -0.953139800010316).abs() < 1e-9);
        assert!((cosines[3] - 0.872000969926126).abs() < 1e-9);

        // none below the birth radius
        let p = params(0.4, PI);
        assert!(find_symmetric_cycles(&p, 2, 512).unwrap().cycles.is_empty());
    }

    #[test]
    fn symmetric_cycles_also_found_by_general_search() {
        let p = params(0.5, PI);
        let sym = find_symmetric_cycles(&p, 2, 512).unwrap();
        let all = find_cycles(&p, 4, 512).unwrap();
        for s in &sym.cycles {
            assert!(
                all.cycles
                    .iter()
                    .any(|c| point_sets_match(&c.points, &s.points, 1e-8)),
                "symmetric cycle missing from the period-4 search"
            );
        }
    }

    #[test]
    fn multiplier_is_base_point_independent() {
        let p = params(0.5, PI);
        let found = find_symmetric_cycles(&p, 2, 512).unwrap();
        let cyc = &found.cycles[0];
        let reference = cyc.multiplier;
        for i in 0..cyc.points.len() {
            let orbit = iterate(&p, cyc.points[i], cyc.period - 1);
            let m = multiplier(&p, &orbit);
            assert!((m - reference).abs() <= 1e-9 * reference.abs().max(1.0));
        }
    }

    #[test]
    fn classify_requires_symmetric_omega() {
        let p = params(0.5, PI);
        let found = find_cycles(&p, 2, 512).unwrap();
        let rec = &found.cycles[0];
        assert!(classify_symmetry(&p, rec).is_ok());
        let q = params(0.5, 1.0);
        assert!(classify_symmetry(&q, rec).is_err());
    }

    #[test]
    fn twin_cycles_after_symmetry_breaking() {
        // past the 4-cycle pitchfork the two critical orbits land on
        // mutually reflected 4-cycles with equal multipliers
        let p = params(0.6, PI);
        let scan = detect_attractors(&p).unwrap();
        assert_eq!(scan.cycles.len(), 2);
        assert!(!scan.aperiodic_at_resolution);
        let (a, b) = (&scan.cycles[0], &scan.cycles[1]);
        assert_eq!(a.period, 4);
        assert_eq!(a.symmetry, SymmetryClass::Asymmetric);
        assert_eq!(b.symmetry, SymmetryClass::Asymmetric);
        let mirrored: Vec<f64> = a.points.iter().map(|&x| reduce_angle(-x)).collect();
        assert!(point_sets_match(&mirrored, &b.points, 1e-8));
        assert!((a.multiplier - b.multiplier).abs() <= 1e-9 * a.multiplier.abs().max(1.0));
        assert!(point_sets_match(
            a.twin_points.as_ref().unwrap(),
            &b.points,
            1e-8
        ));
    }

    #[test]
    fn attractor_census_examples() {
        // self-twin attractor below the period-doubling radius
        let scan = detect_attractors(&params(0.4, PI)).unwrap();
        assert_eq!(scan.cycles.len(), 1);
        assert_eq!(scan.cycles[0].symmetry, SymmetryClass::SelfTwin);
        assert!(point_sets_match(&scan.cycles[0].points, &[0.0, PI], 1e-8));

        // one symmetric 4-cycle attracting both critical orbits
        let scan = detect_attractors(&params(0.5, PI)).unwrap();
        assert_eq!(scan.cycles.len(), 1);
        assert_eq!(scan.cycles[0].period, 4);
        assert_eq!(scan.cycles[0].symmetry, SymmetryClass::Symmetric);
        assert_eq!(scan.seed_cycle, [Some(0), Some(0)]);

        assert!(detect_attractors(&params(0.2, PI)).is_err());
    }

    #[test]
    fn asymptotic_orbit_rigid_rotation_never_settles() {
        let p = params(0.0, 2.0);
        let samples = asymptotic_orbit(&p, 0.5, 100, 4);
        for (i, &x) in samples.iter().enumerate() {
            let want = reduce_angle(0.5 + 2.0 * (101 + i) as f64);
            assert!(circular_distance(x, want) < 1e-10);
        }
    }

    #[test]
    fn asymptotic_orbit_critical_seeds() {
        // below 1/sqrt(5) both critical orbits end on {0, pi}
        let p = params(0.4, PI);
        let crit = critical_points(0.4).unwrap();
        for seed in [crit.x_plus, crit.x_minus] {
            let samples = asymptotic_orbit(&p, seed, 10_000, 8);
            for &x in &samples {
                let d = circular_distance(x, 0.0).min(circular_distance(x, PI));
                assert!(d < 1e-8);
            }
        }
        // past the 2-cycle pitchfork the critical orbits land on mutually
        // reflected asymmetric 2-cycles
        let p = params(0.75, 0.0);
        let crit = critical_points(0.75).unwrap();
        let plus = asymptotic_orbit(&p, crit.x_plus, 10_000, 2);
        let minus = asymptotic_orbit(&p, crit.x_minus, 10_000, 2);
        let mirrored: Vec<f64> = plus.iter().map(|&x| reduce_angle(-x)).collect();
        assert!(point_sets_match(&mirrored, &minus, 1e-8));
        assert!(!point_sets_match(&plus, &minus, 1e-6));
    }

    #[test]
    fn detect_period_block_comparison() {
        let two_cycle: Vec<f64> = (0..40).map(|i| if i % 2 == 0 { 0.3 } else { -1.2 }).collect();
        assert_eq!(detect_period(&two_cycle, 64, 1e-9), Some(2));
        let drifting: Vec<f64> = (0..40).map(|i| 0.01 * i as f64).collect();
        assert_eq!(detect_period(&drifting, 8, 1e-9), None);
    }
}
