//! Physical constants and unit conversions.
//!
//! Values from CODATA 2018 — Tiesinga et al., Rev. Mod. Phys. 93, 025010 (2021).
//! Every public interface in this crate works in (tesla, eV, e·cm); gauss is
//! accepted only at the CLI boundary and converted here.

use crate::error::{Error, Result};

/// Reduced Planck constant ħ (J·s)
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light c (m/s), exact
pub const C: f64 = 299_792_458.0;

/// Elementary charge e (C), exact
pub const E_CHARGE: f64 = 1.602_176_634e-19;

/// Electron mass m_e (kg)
pub const M_E: f64 = 9.109_383_7015e-31;

/// Electron rest energy m_e c² (eV)
pub const M_E_C2_EV: f64 = 510_998.950_00;

/// Reduced Compton wavelength ħ/(m_e c) (cm)
pub const LAMBDA_C_CM: f64 = 3.861_592_6796e-11;

/// Bohr magneton eħ/(2 m_e) (J/T)
pub const MU_B_J_PER_T: f64 = 9.274_010_0783e-24;

/// 2ħc²e — the square of the magnetic energy scale per tesla (J²/T).
/// Kept as a single constant so that `scale(4B) = 2·scale(B)` holds bitwise.
const SCALE_SQ_J2_PER_T: f64 = 2.0 * HBAR * C * C * E_CHARGE;

/// Magnetic energy scale at 1 T, √(2ħc²e)/e (eV); ≈ 10.8772 eV·√(B/T).
pub const SCALE_EV_AT_1T: f64 = 10.877_236_824_245_903;

/// The full CODATA 2018 constant set used by this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// ħ (J·s)
    pub hbar: f64,
    /// c (m/s)
    pub c: f64,
    /// e (C)
    pub e_charge: f64,
    /// m_e (kg)
    pub m_e: f64,
    /// m_e c² (eV)
    pub m_e_c2_ev: f64,
    /// ħ/(m_e c) (cm)
    pub lambda_c_cm: f64,
    /// eħ/(2 m_e) (J/T)
    pub mu_b_j_per_t: f64,
}

impl PhysicalConstants {
    /// CODATA 2018 values. The defaults everywhere in the crate.
    pub const fn codata2018() -> Self {
        PhysicalConstants {
            hbar: HBAR,
            c: C,
            e_charge: E_CHARGE,
            m_e: M_E,
            m_e_c2_ev: M_E_C2_EV,
            lambda_c_cm: LAMBDA_C_CM,
            mu_b_j_per_t: MU_B_J_PER_T,
        }
    }

    /// Natural-unit test hook: ħ = c = 1, m_e = 1, e = 1. Only meaningful
    /// together with [`crate::landau::build_state_scaled`], which takes the
    /// energy scale directly instead of a field in tesla.
    pub const fn natural() -> Self {
        PhysicalConstants {
            hbar: 1.0,
            c: 1.0,
            e_charge: 1.0,
            m_e: 1.0,
            m_e_c2_ev: 1.0,
            lambda_c_cm: 1.0,
            mu_b_j_per_t: 0.5, // eħ/2m
        }
    }
}

/// A constant magnetic field, validated non-negative and finite on
/// construction. State construction additionally requires a strictly
/// positive value; zero is permitted only in spectrum queries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagneticField {
    tesla: f64,
}

impl MagneticField {
    pub fn from_tesla(tesla: f64) -> Result<Self> {
        if !tesla.is_finite() || tesla < 0.0 {
            return Err(Error::InvalidInput(format!(
                "magnetic field must be finite and >= 0, got {tesla} T"
            )));
        }
        Ok(MagneticField { tesla })
    }

    pub fn from_gauss(gauss: f64) -> Result<Self> {
        MagneticField::from_tesla(tesla_from_gauss(gauss)?)
    }

    pub fn tesla(self) -> f64 {
        self.tesla
    }

    /// √(2ħc²eB) in eV for this field.
    pub fn scale_ev(self) -> f64 {
        magnetic_energy_scale_ev(self.tesla).expect("validated on construction")
    }
}

/// Gauss → tesla. 1 G = 1e-4 T.
pub fn tesla_from_gauss(gauss: f64) -> Result<f64> {
    if !gauss.is_finite() {
        return Err(Error::InvalidInput(format!("gauss value not finite: {gauss}")));
    }
    if gauss < 0.0 {
        return Err(Error::InvalidInput(format!("gauss value negative: {gauss}")));
    }
    Ok(gauss * 1e-4)
}

/// Tesla → gauss.
pub fn gauss_from_tesla(tesla: f64) -> f64 {
    tesla * 1e4
}

/// Relativistic Landau energy scale √(2ħc²eB) in eV.
///
/// Monotone in B, zero at B = 0, and exactly square-root homogeneous:
/// `magnetic_energy_scale_ev(4B) == 2 * magnetic_energy_scale_ev(B)`.
pub fn magnetic_energy_scale_ev(b_tesla: f64) -> Result<f64> {
    if !b_tesla.is_finite() || b_tesla < 0.0 {
        return Err(Error::InvalidInput(format!(
            "field must be finite and >= 0, got {b_tesla} T"
        )));
    }
    Ok((SCALE_SQ_J2_PER_T * b_tesla).sqrt() / E_CHARGE)
}

/// Dimensionless dipole moment (units of e·λ_C) → e·cm.
pub fn edm_natural_to_ecm(p_over_e_lambda: f64) -> Result<f64> {
    if !p_over_e_lambda.is_finite() {
        return Err(Error::InvalidInput(format!(
            "dimensionless moment not finite: {p_over_e_lambda}"
        )));
    }
    Ok(p_over_e_lambda * LAMBDA_C_CM)
}
