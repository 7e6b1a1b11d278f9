//! Adaptive composite quadrature for the radial integrals.
//!
//! The densities behave like ρ^(2δ−1/2) e^(−ρ) near the origin; half-integer
//! powers spoil the convergence order of any polynomial rule, so radial
//! integrals are evaluated in the substituted variable u = √ρ, where every
//! integrand in this crate is smooth. Refinement doubles the interval count
//! until two successive composite Simpson estimates agree to the requested
//! relative tolerance, and the Richardson-extrapolated value is returned.

use crate::error::{Error, Result};

const INITIAL_INTERVALS: usize = 64;

fn composite_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, intervals: usize) -> f64 {
    let h = (b - a) / intervals as f64;
    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..intervals {
        let x = a + i as f64 * h;
        if i % 2 == 1 {
            odd += f(x);
        } else {
            even += f(x);
        }
    }
    (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0
}

/// Adaptive-doubling composite Simpson on [a, b].
pub fn adaptive_simpson(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    max_refinements: u32,
) -> Result<f64> {
    let mut intervals = INITIAL_INTERVALS;
    let mut previous = composite_simpson(&f, a, b, intervals);
    for _ in 0..max_refinements {
        intervals *= 2;
        let current = composite_simpson(&f, a, b, intervals);
        let scale = current.abs().max(f64::MIN_POSITIVE);
        if (current - previous).abs() <= rel_tol * scale {
            return Ok(current + (current - previous) / 15.0);
        }
        previous = current;
    }
    Err(Error::QuadratureNonconvergence {
        last: composite_simpson(&f, a, b, intervals * 2),
        previous,
    })
}

/// ∫₀^rho_max g(ρ) dρ via the u = √ρ substitution. The substituted
/// integrand 2u·g(u²) must be smooth on [0, √rho_max]; every radial
/// integrand in this crate is, with a zero limit at u = 0.
pub fn integrate_radial(
    g: impl Fn(f64) -> f64,
    rho_max: f64,
    rel_tol: f64,
    max_refinements: u32,
) -> Result<f64> {
    adaptive_simpson(
        |u| if u == 0.0 { 0.0 } else { 2.0 * u * g(u * u) },
        0.0,
        rho_max.sqrt(),
        rel_tol,
        max_refinements,
    )
}
