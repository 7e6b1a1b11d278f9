//! Dipole moments of a Dirac electron in a constant magnetic field.
//!
//! The 2+1-dimensional Dirac equation in a uniform field has closed-form
//! Landau-level solutions; splitting the probability current into
//! polarization and magnetization parts and integrating those densities over
//! the plane yields closed-form magnetic and electric dipole moments. This
//! crate evaluates the analytic states and moment formulas and verifies every
//! closed form against an independent numerical route: adaptive quadrature
//! for the density integrals, explicit Runge–Kutta integration for the radial
//! equations, and golden-section search for the moment-maximizing field.
//!
//! Modules:
//! - [`constants`]: CODATA 2018 constants and the tesla/eV/e·cm conversions.
//! - [`special`]: log-gamma, gamma ratios, and the Kummer function ₁F₁.
//! - [`landau`]: eigenstates, spinors, normalization, radial verifiers.
//! - [`gordon`]: pointwise polarization/magnetization densities and their
//!   quadrature integrals.
//! - [`moments`]: closed-form moments, asymptotic regimes, maximizing field.
//! - [`sweep`], [`report`], [`verify`]: parameter sweeps with CSV/SVG output,
//!   literature comparison tables, and the self-verification suite behind
//!   the `dmoments` binary.
//!
//! The runnable examples under `examples/` walk through each capability; the
//! thin `dmoments` binary exposes the same operations as subcommands.

pub mod constants;
pub mod error;
pub mod gordon;
pub mod landau;
pub mod moments;
pub mod quad;
pub mod report;
pub mod special;
pub mod sweep;
pub mod verify;

pub mod cli;

pub use constants::{
    edm_natural_to_ecm, gauss_from_tesla, magnetic_energy_scale_ev, tesla_from_gauss,
    MagneticField, PhysicalConstants,
};
pub use error::{Error, Result};
pub use gordon::{
    densities, magnetization_quadrature, magnetization_ratio_closed, polarization_quadrature,
    AngularConvention, DensityPoint, QuadratureSettings,
};
pub use landau::{
    build_state, build_state_scaled, energy_ev, integrate_radial_ode, LandauState,
    QuantumNumbers, RadialTrajectory, Spinor2,
};
pub use moments::{
    b_max, b_max_numeric, classify_regime, edm_asymptotic_high, edm_asymptotic_low, edm_closed,
    mdm_closed, MomentMethod, MomentResult, Regime, RegimeThresholds, ValueUnit,
};
