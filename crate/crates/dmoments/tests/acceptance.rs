//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured margin. Tolerances are pinned in the assertions.

use std::process::Command;
use std::time::Instant;

use dmoments::constants::{MagneticField, M_E_C2_EV, MU_B_J_PER_T};
use dmoments::gordon::{
    magnetization_quadrature, magnetization_ratio_closed, polarization_quadrature,
    AngularConvention, QuadratureSettings,
};
use dmoments::landau::{build_state, integrate_radial_ode, LandauState, QuantumNumbers};
use dmoments::moments;
use dmoments::special::{kummer_1f1, kummer_1f1_series, ln_gamma, KummerParams};

fn field(b: f64) -> MagneticField {
    MagneticField::from_tesla(b).unwrap()
}

fn grid_states() -> Vec<LandauState> {
    let mut states = Vec::new();
    for &b in &[1e-7, 1.0, 1e10] {
        for n in 0..=20u32 {
            for k in 0..=(20 - n) {
                states.push(build_state(QuantumNumbers::new(n, k), field(b), M_E_C2_EV).unwrap());
            }
        }
    }
    states
}

#[test]
fn criterion_01_spectrum_identity() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for st in grid_states() {
        worst = worst.max(st.spectrum_identity_residual().abs());
    }
    let elapsed = start.elapsed();
    assert!(worst < 1e-12, "spectrum identity residual {worst:e}");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, limit 1 s");
    println!(
        "criterion 01 spectrum identity: PASS (max rel residual {worst:.2e} < 1e-12, {:?})",
        elapsed
    );
}

#[test]
fn criterion_02_radial_equations() {
    let start = Instant::now();
    // (a) closed forms satisfy the radial system
    let mut worst: f64 = 0.0;
    for st in grid_states() {
        for rho in [0.1, 1.0, 5.0, 20.0] {
            let (r1, r2) = st.radial_residual(rho).unwrap();
            worst = worst.max(r1.abs()).max(r2.abs());
        }
    }
    assert!(worst < 1e-9, "radial residual {worst:e}");

    // (b) independent Runge–Kutta trajectory reproduces the closed form
    let st = build_state(QuantumNumbers::new(0, 0), field(1.0), M_E_C2_EV).unwrap();
    let traj = integrate_radial_ode(&st, None, 30.0, 1e-3).unwrap();
    assert!(!traj.diverged);
    let err = traj.max_relative_error_vs(|rho| st.radial_profiles(rho));
    assert!(err < 1e-6, "trajectory error {err:e}");

    // (c) a 1% energy detuning puts weight on the non-normalizable branch
    let strong = build_state(QuantumNumbers::new(0, 0), field(1e10), M_E_C2_EV).unwrap();
    let detuned =
        integrate_radial_ode(&strong, Some(1.01 * strong.energy_ev), 50.0, 1e-3).unwrap();
    let growth = detuned.normalized_magnitude_at(50.0) / detuned.normalized_magnitude_at(5.0);
    assert!(growth > 1e3, "detuned growth factor {growth:e}");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}, limit 30 s");
    println!(
        "criterion 02 radial equations: PASS (residuals {worst:.2e} < 1e-9, RK error {err:.2e} < 1e-6, detuned growth {growth:.2e} > 1e3, {:?})",
        elapsed
    );
}

#[test]
fn criterion_03_normalization() {
    let mut worst: f64 = 0.0;
    for st in grid_states() {
        worst = worst.max((st.norm_integral().unwrap() - 1.0).abs());
    }
    assert!(worst < 1e-10, "norm deviation {worst:e}");
    println!("criterion 03 normalization: PASS (max |norm - 1| = {worst:.2e} < 1e-10)");
}

#[test]
fn criterion_04_gordon_oracle() {
    let mut worst: f64 = 0.0;
    for n in [0u32, 1, 3] {
        for k in [0u32, 1, 4] {
            for b in [1e-7, 1e-2, 1.0, 1e8] {
                let st = build_state(QuantumNumbers::new(n, k), field(b), M_E_C2_EV).unwrap();
                let settings = QuadratureSettings::for_state(&st);
                let quad =
                    polarization_quadrature(&st, &settings, AngularConvention::Deficit).unwrap();
                let closed = moments::edm_closed(st.qn, field(b), st.epsilon_ev)
                    .unwrap()
                    .value;
                worst = worst.max(((quad - closed) / closed).abs());
            }
        }
    }
    assert!(worst < 1e-8, "oracle disagreement {worst:e}");

    // full-circle angular convention: the same integral is zero
    let st = build_state(QuantumNumbers::new(0, 0), field(1.0), M_E_C2_EV).unwrap();
    let settings = QuadratureSettings::for_state(&st);
    let deficit = polarization_quadrature(&st, &settings, AngularConvention::Deficit).unwrap();
    let full = polarization_quadrature(&st, &settings, AngularConvention::FullCircle).unwrap();
    let scale = deficit.abs() * std::f64::consts::TAU;
    assert!(full.abs() < 1e-14 * scale, "full-circle residual {full:e}");
    println!(
        "criterion 04 gordon oracle: PASS (quadrature vs closed {worst:.2e} < 1e-8, full-circle {:.2e} of own scale)",
        full.abs() / scale
    );
}

#[test]
fn criterion_05_bohr_magneton() {
    let st = build_state(QuantumNumbers::new(0, 0), field(1e-10), M_E_C2_EV).unwrap();
    let settings = QuadratureSettings::for_state(&st).with_rel_tol(1e-12);
    let m = magnetization_quadrature(&st, &settings).unwrap();
    let weak_dev = (m / MU_B_J_PER_T - 1.0).abs();
    assert!(weak_dev < 1e-6, "weak-field deviation {weak_dev:e}");

    let mut ratio_dev: f64 = 0.0;
    for (n, k, b) in [(0u32, 0u32, 1.0), (0, 0, 1e-10), (2, 1, 1e8)] {
        let st = build_state(QuantumNumbers::new(n, k), field(b), M_E_C2_EV).unwrap();
        let settings = QuadratureSettings::for_state(&st).with_rel_tol(1e-12);
        let m = magnetization_quadrature(&st, &settings).unwrap();
        let expected = MU_B_J_PER_T * magnetization_ratio_closed(&st);
        ratio_dev = ratio_dev.max((m / expected - 1.0).abs());
    }
    assert!(ratio_dev < 1e-10, "finite-B ratio deviation {ratio_dev:e}");
    println!(
        "criterion 05 bohr magneton: PASS (mu_B recovered to {weak_dev:.2e} < 1e-6, finite-B ratio to {ratio_dev:.2e} < 1e-10)"
    );
}

#[test]
fn criterion_06_regime_laws() {
    let mut worst_high: f64 = 0.0;
    let mut worst_low: f64 = 0.0;
    for (n, k) in [(0u32, 0u32), (1, 0), (0, 2), (3, 1)] {
        let qn = QuantumNumbers::new(n, k);
        let b = 1.0;
        let eps_hi = field(4.0 * b).scale_ev() * 1e3;
        let p1 = moments::edm_closed(qn, field(b), eps_hi).unwrap().value;
        let p4 = moments::edm_closed(qn, field(4.0 * b), eps_hi).unwrap().value;
        worst_high = worst_high.max((p4 / p1 / 2.0 - 1.0).abs());
        let eps_lo = field(b).scale_ev() * 1e-3;
        let q1 = moments::edm_closed(qn, field(b), eps_lo).unwrap().value;
        let q4 = moments::edm_closed(qn, field(4.0 * b), eps_lo).unwrap().value;
        worst_low = worst_low.max((q4 / q1 / 0.5 - 1.0).abs());
    }
    assert!(worst_high < 0.005, "sqrt-B law deviation {worst_high:e}");
    assert!(worst_low < 0.005, "1/sqrt-B law deviation {worst_low:e}");
    println!(
        "criterion 06 regime laws: PASS (p(4B)/p(B) = 2 to {worst_high:.2e}, = 1/2 to {worst_low:.2e}, limits 5e-3)"
    );
}

#[test]
fn criterion_07_maximum_field() {
    let mut worst: f64 = 0.0;
    for (n, k) in [(0u32, 0u32), (1, 0), (0, 2), (3, 1)] {
        let qn = QuantumNumbers::new(n, k);
        let eps = 2.6e5;
        let analytic = moments::b_max(qn, eps).unwrap();
        let numeric = moments::b_max_numeric(qn, eps).unwrap();
        worst = worst.max(((numeric - analytic) / analytic).abs());
        let curvature = moments::edm_curvature_at(qn, analytic, eps).unwrap();
        assert!(curvature < 0.0, "curvature {curvature:e} at n={n} k={k}");
    }
    assert!(worst < 1e-6, "argmax deviation {worst:e}");
    println!(
        "criterion 07 maximum field: PASS (argmax matches closed form to {worst:.2e} < 1e-6, curvature < 0)"
    );
}

#[test]
fn criterion_08_planck_scale_extrapolation() {
    let r = moments::edm_closed(QuantumNumbers::new(0, 0), field(1e53), 2.6e5).unwrap();
    assert!(
        r.value >= 1e-34 && r.value <= 1e-33,
        "Planck-scale edm {:e} outside [1e-34, 1e-33]",
        r.value
    );
    println!(
        "criterion 08 planck extrapolation: PASS (edm at 1e53 T = {:.3e} e.cm in [1e-34, 1e-33])",
        r.value
    );
}

#[test]
fn criterion_09_special_functions() {
    // polynomial vs series paths over the stated parameter box
    let mut worst: f64 = 0.0;
    for n in 0..=30u32 {
        for k in 0..=10u32 {
            for b in [k as f64 + 1.0, k as f64 + 2.0] {
                for &x in &[0.0, 1.0, 7.5, 20.0, 35.0, 50.0] {
                    let p = KummerParams::new(-(n as f64), b, x).unwrap();
                    let poly = kummer_1f1(p).unwrap();
                    let series = kummer_1f1_series(p).unwrap();
                    let denom = poly.abs().max(1e-300);
                    worst = worst.max(((poly - series) / denom).abs());
                }
            }
        }
    }
    assert!(worst < 1e-12, "path disagreement {worst:e}");

    // ln_gamma against factorial and half-integer references
    let mut worst_lg: f64 = 0.0;
    let mut log_factorial = 0.0; // lnΓ(m+1) = Σ ln j
    for m in 1..=20u64 {
        log_factorial += (m as f64).ln();
        let got = ln_gamma(m as f64 + 1.0).unwrap();
        worst_lg = worst_lg.max(((got - log_factorial) / log_factorial.max(1.0)).abs());
    }
    let sqrt_pi_ln = 0.5 * std::f64::consts::PI.ln(); // lnΓ(1/2)
    let mut half = sqrt_pi_ln;
    let mut arg = 0.5;
    for _ in 0..20 {
        let got = ln_gamma(arg).unwrap();
        worst_lg = worst_lg.max(((got - half) / half.abs().max(1.0)).abs());
        half += arg.ln(); // lnΓ(x+1) = lnΓ(x) + ln x
        arg += 1.0;
    }
    assert!(worst_lg < 1e-12, "ln_gamma reference deviation {worst_lg:e}");
    println!(
        "criterion 09 special functions: PASS (kummer paths {worst:.2e} < 1e-12, ln_gamma refs {worst_lg:.2e} < 1e-12)"
    );
}

#[test]
fn criterion_10_reporting() {
    let bin = env!("CARGO_BIN_EXE_dmoments");
    let dir = std::env::temp_dir().join(format!("dmoments-accept-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    // compare emits the published values verbatim
    let out = Command::new(bin)
        .args(["compare", "--table", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(
        text.contains("3.1e-24"),
        "table 2 row 1 value missing from:\n{text}"
    );

    // sweep CSV is byte-stable across two runs
    let config = dir.join("fig1.json");
    std::fs::write(
        &config,
        r#"{
  "quantity": "edm", "n": 0, "k": 0,
  "fixed_epsilon_eV": 2.6e5,
  "axis": "B_tesla",
  "grid": {"min": 1e-9, "max": 4e-7, "points": 100, "spacing": "linear"}
}"#,
    )
    .unwrap();
    let csv_a = dir.join("a.csv");
    let csv_b = dir.join("b.csv");
    for csv in [&csv_a, &csv_b] {
        let st = Command::new(bin)
            .args(["sweep"])
            .arg(&config)
            .arg("--out")
            .arg(csv)
            .status()
            .unwrap();
        assert!(st.success());
    }
    let a = std::fs::read(&csv_a).unwrap();
    let b = std::fs::read(&csv_b).unwrap();
    assert_eq!(a, b, "sweep CSV differs between runs");
    assert_eq!(a.iter().filter(|&&c| c == b'\n').count(), 101);

    // verify exits 0 on a pristine build within 60 s
    let start = Instant::now();
    let st = Command::new(bin).arg("verify").status().unwrap();
    let elapsed = start.elapsed();
    assert_eq!(st.code(), Some(0), "verify must exit 0");
    assert!(elapsed.as_secs_f64() < 60.0, "verify took {elapsed:?}");

    std::fs::remove_dir_all(&dir).ok();
    println!(
        "criterion 10 reporting: PASS (published values verbatim, CSV byte-stable, verify exit 0 in {:?})",
        elapsed
    );
}
