//! Self-verification suite behind `dmoments verify`: every closed form in
//! the crate is checked against its independent numerical route, and every
//! structural identity of the states is exercised on a fixed grid. Exit code
//! 0 means all groups passed.

use std::time::{Duration, Instant};

use crate::constants::{MagneticField, MU_B_J_PER_T, M_E_C2_EV};
use crate::error::Result;
use crate::gordon::{
    magnetization_quadrature, magnetization_ratio_closed, polarization_quadrature,
    AngularConvention, QuadratureSettings,
};
use crate::landau::{build_state, integrate_radial_ode, LandauState, QuantumNumbers};
use crate::moments::{self, edm_closed_scaled, RegimeThresholds};

/// Options for a verification run. `gamma_fault` multiplies the Γ-ratio in
/// the closed-form moment during the quadrature comparison; it exists so
/// tests can confirm the suite actually detects a broken closed form
/// (a perturbation of 1e-3 must fail the run). Zero disables it.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub gamma_fault: f64,
}

#[derive(Debug, Clone)]
pub struct GroupResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug)]
pub struct VerifyReport {
    pub groups: Vec<GroupResult>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.groups.iter().all(|g| g.passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for g in &self.groups {
            s.push_str(&format!(
                "{:<24} {}  ({})\n",
                g.name,
                if g.passed { "PASS" } else { "FAIL" },
                g.detail
            ));
        }
        let passed = self.groups.iter().filter(|g| g.passed).count();
        s.push_str(&format!(
            "{}/{} groups passed in {:.2} s\n",
            passed,
            self.groups.len(),
            self.elapsed.as_secs_f64()
        ));
        s
    }
}

const GRID_FIELDS: [f64; 3] = [1e-7, 1.0, 1e10];

fn field(b: f64) -> MagneticField {
    MagneticField::from_tesla(b).expect("verified positive")
}

fn grid_states() -> Result<Vec<LandauState>> {
    let mut states = Vec::new();
    for &b in &GRID_FIELDS {
        for n in 0..=20u32 {
            for k in 0..=(20 - n) {
                states.push(build_state(QuantumNumbers::new(n, k), field(b), M_E_C2_EV)?);
            }
        }
    }
    Ok(states)
}

/// Runs all verification groups and collects one pass/fail line per group.
pub fn run(options: VerifyOptions) -> Result<VerifyReport> {
    let start = Instant::now();
    let states = grid_states()?;
    let groups = vec![
        spectrum_identity(&states),
        normalization(&states)?,
        radial_residuals(&states)?,
        ode_cross_check()?,
        closed_vs_quadrature(options.gamma_fault)?,
        asymptotic_regimes()?,
        max_field_argmax()?,
        bohr_magneton_limit()?,
    ];
    Ok(VerifyReport {
        groups,
        elapsed: start.elapsed(),
    })
}

fn spectrum_identity(states: &[LandauState]) -> GroupResult {
    let mut worst: f64 = 0.0;
    for st in states {
        worst = worst.max(st.spectrum_identity_residual().abs());
        worst = worst.max(((st.delta_from_energy() - st.delta) / st.delta).abs());
    }
    GroupResult {
        name: "spectrum_identity",
        passed: worst < 1e-12,
        detail: format!("max residual {worst:.2e}, limit 1e-12, {} states", states.len()),
    }
}

fn normalization(states: &[LandauState]) -> Result<GroupResult> {
    let mut worst: f64 = 0.0;
    for st in states {
        worst = worst.max((st.norm_integral()? - 1.0).abs());
    }
    Ok(GroupResult {
        name: "normalization",
        passed: worst < 1e-10,
        detail: format!("max |norm - 1| = {worst:.2e}, limit 1e-10"),
    })
}

fn radial_residuals(states: &[LandauState]) -> Result<GroupResult> {
    let mut worst: f64 = 0.0;
    for st in states {
        for rho in [0.1, 1.0, 5.0, 20.0] {
            let (r1, r2) = st.radial_residual(rho)?;
            worst = worst.max(r1.abs()).max(r2.abs());
        }
    }
    Ok(GroupResult {
        name: "radial_residuals",
        passed: worst < 1e-9,
        detail: format!("max |residual| = {worst:.2e}, limit 1e-9"),
    })
}

fn ode_cross_check() -> Result<GroupResult> {
    let st = build_state(QuantumNumbers::new(0, 0), field(1.0), M_E_C2_EV)?;
    let traj = integrate_radial_ode(&st, None, 30.0, 1e-3)?;
    let err = traj.max_relative_error_vs(|rho| st.radial_profiles(rho));

    let strong = build_state(QuantumNumbers::new(0, 0), field(1e10), M_E_C2_EV)?;
    let detuned = integrate_radial_ode(&strong, Some(1.01 * strong.energy_ev), 50.0, 1e-3)?;
    let growth = detuned.normalized_magnitude_at(50.0) / detuned.normalized_magnitude_at(5.0);

    let passed = err < 1e-6 && growth > 1e3;
    Ok(GroupResult {
        name: "ode_cross_check",
        passed,
        detail: format!("trajectory error {err:.2e} (limit 1e-6), detuned growth {growth:.2e} (floor 1e3)"),
    })
}

fn closed_vs_quadrature(gamma_fault: f64) -> Result<GroupResult> {
    let mut worst: f64 = 0.0;
    for n in [0u32, 1, 3] {
        for k in [0u32, 1, 4] {
            for b in [1e-7, 1e-2, 1.0, 1e8] {
                let st = build_state(QuantumNumbers::new(n, k), field(b), M_E_C2_EV)?;
                let settings = QuadratureSettings::for_state(&st);
                let quad =
                    polarization_quadrature(&st, &settings, AngularConvention::Deficit)?;
                let closed = edm_closed_scaled(
                    st.qn,
                    st.scale_ev,
                    st.epsilon_ev,
                    1.0 + gamma_fault,
                )?;
                worst = worst.max(((quad - closed) / closed).abs());
            }
        }
    }
    // full-circle convention: the same integral vanishes
    let st = build_state(QuantumNumbers::new(0, 0), field(1.0), M_E_C2_EV)?;
    let settings = QuadratureSettings::for_state(&st);
    let deficit = polarization_quadrature(&st, &settings, AngularConvention::Deficit)?;
    let full = polarization_quadrature(&st, &settings, AngularConvention::FullCircle)?;
    let full_ok = full.abs() < 1e-14 * deficit.abs() * std::f64::consts::TAU;
    Ok(GroupResult {
        name: "closed_vs_quadrature",
        passed: worst < 1e-8 && full_ok,
        detail: format!(
            "max rel diff {worst:.2e} (limit 1e-8), full-circle residual {:.2e}",
            full.abs()
        ),
    })
}

fn asymptotic_regimes() -> Result<GroupResult> {
    let mut worst_law: f64 = 0.0;
    let mut worst_reduced: f64 = 0.0;
    let th = RegimeThresholds::default();
    for (n, k) in [(0u32, 0u32), (1, 2)] {
        let qn = QuantumNumbers::new(n, k);
        let b = 1.0;
        // deep high-kinetic: p(4B)/p(B) = 2 ± 0.5%
        let eps_hi = field(4.0 * b).scale_ev() * 1e3;
        let p1 = moments::edm_closed(qn, field(b), eps_hi)?.value;
        let p4 = moments::edm_closed(qn, field(4.0 * b), eps_hi)?.value;
        worst_law = worst_law.max((p4 / p1 / 2.0 - 1.0).abs());
        // deep low-kinetic: p(4B)/p(B) = 1/2 ± 0.5%
        let eps_lo = field(b).scale_ev() * 1e-3;
        let q1 = moments::edm_closed(qn, field(b), eps_lo)?.value;
        let q4 = moments::edm_closed(qn, field(4.0 * b), eps_lo)?.value;
        worst_law = worst_law.max((q4 / q1 / 0.5 - 1.0).abs());
        // reduced forms converge to the closed form inside their regimes (1%)
        let eps100 = field(b).scale_ev() * 100.0;
        let closed = moments::edm_closed(qn, field(b), eps100)?.value;
        let asym = moments::edm_asymptotic_high(qn, field(b), eps100, &th)?;
        worst_reduced = worst_reduced.max(((closed - asym) / closed).abs());
        let eps001 = field(b).scale_ev() * 0.01;
        let closed = moments::edm_closed(qn, field(b), eps001)?.value;
        let asym = moments::edm_asymptotic_low(qn, field(b), eps001, &th)?;
        worst_reduced = worst_reduced.max(((closed - asym) / closed).abs());
    }
    Ok(GroupResult {
        name: "asymptotic_regimes",
        passed: worst_law < 0.005 && worst_reduced < 0.01,
        detail: format!(
            "scaling-law deviation {worst_law:.2e} (limit 5e-3), reduced-form deviation {worst_reduced:.2e} (limit 1e-2)"
        ),
    })
}

fn max_field_argmax() -> Result<GroupResult> {
    let mut worst: f64 = 0.0;
    let mut curvature_ok = true;
    for (n, k) in [(0u32, 0u32), (1, 0), (0, 2), (3, 1)] {
        let qn = QuantumNumbers::new(n, k);
        let eps = 2.6e5;
        let analytic = moments::b_max(qn, eps)?;
        let numeric = moments::b_max_numeric(qn, eps)?;
        worst = worst.max(((numeric - analytic) / analytic).abs());
        curvature_ok &= moments::edm_curvature_at(qn, analytic, eps)? < 0.0;
    }
    Ok(GroupResult {
        name: "max_field_argmax",
        passed: worst < 1e-6 && curvature_ok,
        detail: format!("max argmax deviation {worst:.2e} (limit 1e-6), curvature negative: {curvature_ok}"),
    })
}

fn bohr_magneton_limit() -> Result<GroupResult> {
    // weak field: quadrature recovers mu_B
    let st = build_state(QuantumNumbers::new(0, 0), field(1e-10), M_E_C2_EV)?;
    let settings = QuadratureSettings::for_state(&st).with_rel_tol(1e-12);
    let m = magnetization_quadrature(&st, &settings)?;
    let weak_dev = (m / MU_B_J_PER_T - 1.0).abs();
    // finite field: quadrature matches the exact ratio
    let mut ratio_dev: f64 = 0.0;
    for (n, k, b) in [(0u32, 0u32, 1.0), (2, 1, 1e8)] {
        let st = build_state(QuantumNumbers::new(n, k), field(b), M_E_C2_EV)?;
        let settings = QuadratureSettings::for_state(&st).with_rel_tol(1e-12);
        let m = magnetization_quadrature(&st, &settings)?;
        let expected = MU_B_J_PER_T * magnetization_ratio_closed(&st);
        ratio_dev = ratio_dev.max((m / expected - 1.0).abs());
    }
    Ok(GroupResult {
        name: "bohr_magneton_limit",
        passed: weak_dev < 1e-6 && ratio_dev < 1e-10,
        detail: format!("weak-field deviation {weak_dev:.2e} (limit 1e-6), finite-B ratio deviation {ratio_dev:.2e} (limit 1e-10)"),
    })
}
