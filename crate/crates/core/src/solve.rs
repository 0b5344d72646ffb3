//! Bracketing, bisection+Newton hybrid refinement, and a small polynomial
//! root finder.  The cycle solvers are built on these.

use num_complex::Complex64;

/// A sign-change bracket [lo, hi] with f(lo) = flo.
#[derive(Debug, Clone, Copy)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub flo: f64,
}

/// Scan `f` over a uniform grid of `n` points on [lo, hi] and collect
/// sign-change brackets.  Exact zeros at a grid point are returned as
/// degenerate brackets with lo == hi.
pub fn bracket_on_grid<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    n: usize,
) -> Vec<Bracket> {
    assert!(n >= 2);
    let mut out = Vec::new();
    let step = (hi - lo) / (n - 1) as f64;
    let mut xa = lo;
    let mut fa = f(xa);
    for i in 1..n {
        let xb = lo + step * i as f64;
        let fb = f(xb);
        if fa == 0.0 {
            out.push(Bracket {
                lo: xa,
                hi: xa,
                flo: 0.0,
            });
        } else if fa * fb < 0.0 {
            out.push(Bracket {
                lo: xa,
                hi: xb,
                flo: fa,
            });
        }
        xa = xb;
        fa = fb;
    }
    if fa == 0.0 {
        out.push(Bracket {
            lo: xa,
            hi: xa,
            flo: 0.0,
        });
    }
    out
}

/// Bisection + Newton hybrid inside a sign-change bracket.
///
/// Bisects until the bracket is narrower than `newton_from`, then runs
/// Newton steps (capped at 100) that must stay inside the bracket; any
/// escape or stall falls back to plain bisection.  Stops when
/// |f| < `f_tol` or the bracket collapses to machine width.
pub fn refine_bracket<F, D>(mut f: F, mut df: D, bracket: Bracket, newton_from: f64, f_tol: f64) -> f64
where
    F: FnMut(f64) -> f64,
    D: FnMut(f64) -> f64,
{
    let Bracket {
        mut lo,
        mut hi,
        flo: mut fa,
    } = bracket;
    if lo == hi || fa == 0.0 {
        return lo;
    }
    while hi - lo > newton_from {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fa * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            fa = fm;
        }
    }

    let mut x = 0.5 * (lo + hi);
    let mut fx = f(x);
    for _ in 0..100 {
        if fx.abs() < f_tol {
            return x;
        }
        let d = df(x);
        let step = if d != 0.0 { fx / d } else { f64::INFINITY };
        let next = x - step;
        if next.is_finite() && next > lo && next < hi {
            // keep the bracket valid while Newton walks
            if fa * fx < 0.0 {
                hi = x;
            } else {
                lo = x;
                fa = fx;
            }
            x = next;
            fx = f(x);
        } else {
            // Newton left the bracket: one bisection step instead
            if fa * fx < 0.0 {
                hi = x;
            } else {
                lo = x;
                fa = fx;
            }
            let mid = 0.5 * (lo + hi);
            if mid == x || hi - lo < f64::EPSILON * x.abs().max(1.0) {
                return x;
            }
            x = mid;
            fx = f(x);
        }
    }
    x
}

/// Plain bisection for a monotone-ish scalar equation, to interval width `w_tol`.
/// Requires f(lo) and f(hi) of opposite (or zero) sign.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut lo: f64, mut hi: f64, w_tol: f64) -> f64 {
    let mut fa = f(lo);
    if fa == 0.0 {
        return lo;
    }
    while hi - lo > w_tol {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fa * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            fa = fm;
        }
    }
    0.5 * (lo + hi)
}

fn poly_eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        acc = acc * z + c;
    }
    acc
}

fn poly_eval_deriv(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let n = coeffs.len() - 1;
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, &c) in coeffs.iter().take(n).enumerate() {
        acc = acc * z + c * (n - i) as f64;
    }
    acc
}

/// All complex roots of a polynomial with real coefficients, highest degree
/// first, by Durand-Kerner iteration with a Newton polish.  Deterministic.
pub fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    assert!(coeffs.len() >= 2 && coeffs[0] != 0.0);
    let n = coeffs.len() - 1;
    let monic: Vec<Complex64> = coeffs
        .iter()
        .map(|&c| Complex64::new(c / coeffs[0], 0.0))
        .collect();

    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..200 {
        let mut shift = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm_sqr() == 0.0 {
                continue;
            }
            let delta = poly_eval(&monic, roots[i]) / den;
            roots[i] -= delta;
            shift = shift.max(delta.norm());
        }
        if shift < 1e-14 {
            break;
        }
    }
    for root in roots.iter_mut() {
        for _ in 0..4 {
            let d = poly_eval_deriv(&monic, *root);
            if d.norm_sqr() == 0.0 {
                break;
            }
            *root -= poly_eval(&monic, *root) / d;
        }
    }
    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    roots
}
