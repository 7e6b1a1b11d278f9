//! Declarative parameter sweeps with deterministic CSV output and a minimal
//! SVG chart. A sweep is described by a JSON document mirroring [`SweepSpec`]
//! field for field; unknown keys are rejected.
//!
//! CSV rows are byte-stable across runs: fixed column order, scientific
//! notation with 12 significant digits, `\n` line endings, ascending axis
//! order. Each row is re-validated against the underlying operation's
//! invariants before it is written.

use serde::{Deserialize, Serialize};
use std::io::Write;

use crate::constants::{MagneticField, M_E_C2_EV};
use crate::error::{Error, Result};
use crate::landau::QuantumNumbers;
use crate::moments::{self, Regime, RegimeThresholds, ValueUnit};

/// CSV column order, fixed.
pub const CSV_HEADER: &str =
    "axis_name,axis_value,B_tesla,epsilon_eV,n,k,scale_eV,regime,value,value_unit,method";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Edm,
    Mdm,
    Spectrum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    #[serde(rename = "B_tesla")]
    BTesla,
    #[serde(rename = "epsilon_eV")]
    EpsilonEv,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::BTesla => "B_tesla",
            Axis::EpsilonEv => "epsilon_eV",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: u32,
    pub spacing: Spacing,
}

/// Declarative description of a sweep: what to compute, which inputs are
/// fixed, which axis is swept and on what grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub quantity: Quantity,
    pub n: u32,
    pub k: u32,
    #[serde(rename = "fixed_epsilon_eV", default, skip_serializing_if = "Option::is_none")]
    pub fixed_epsilon_ev: Option<f64>,
    #[serde(rename = "fixed_B_tesla", default, skip_serializing_if = "Option::is_none")]
    pub fixed_b_tesla: Option<f64>,
    pub axis: Axis,
    pub grid: Grid,
}

impl SweepSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SweepSpec = serde_json::from_str(text)
            .map_err(|e| Error::schema("<document>", e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.grid;
        if !g.min.is_finite() || !g.max.is_finite() || g.min >= g.max {
            return Err(Error::schema("grid.min", "grid requires finite min < max"));
        }
        if g.points < 2 {
            return Err(Error::schema("grid.points", "at least 2 points required"));
        }
        if g.spacing == Spacing::Log && g.min <= 0.0 {
            return Err(Error::schema("grid.min", "log spacing requires min > 0"));
        }
        match self.axis {
            Axis::BTesla => {
                if self.fixed_b_tesla.is_some() {
                    return Err(Error::schema(
                        "fixed_B_tesla",
                        "cannot fix the swept axis",
                    ));
                }
                let b_floor = if self.quantity == Quantity::Spectrum {
                    0.0
                } else {
                    f64::MIN_POSITIVE
                };
                if g.min < b_floor {
                    return Err(Error::schema("grid.min", "field must be positive here"));
                }
            }
            Axis::EpsilonEv => {
                if self.fixed_epsilon_ev.is_some() {
                    return Err(Error::schema(
                        "fixed_epsilon_eV",
                        "cannot fix the swept axis",
                    ));
                }
                if g.min <= 0.0 {
                    return Err(Error::schema("grid.min", "kinetic energy must be positive"));
                }
            }
        }
        match self.quantity {
            Quantity::Edm => match self.axis {
                Axis::BTesla => {
                    if self.fixed_epsilon_ev.is_none() {
                        return Err(Error::schema(
                            "fixed_epsilon_eV",
                            "edm sweep over B needs a fixed kinetic energy",
                        ));
                    }
                }
                Axis::EpsilonEv => {
                    if self.fixed_b_tesla.is_none() {
                        return Err(Error::schema(
                            "fixed_B_tesla",
                            "edm sweep over epsilon needs a fixed field",
                        ));
                    }
                }
            },
            Quantity::Mdm | Quantity::Spectrum => {
                // epsilon is determined by (n, k, B); nothing else may be fixed
                if self.axis == Axis::EpsilonEv {
                    return Err(Error::schema(
                        "axis",
                        "mdm/spectrum sweeps take the field as the axis",
                    ));
                }
                if self.fixed_epsilon_ev.is_some() {
                    return Err(Error::schema(
                        "fixed_epsilon_eV",
                        "not applicable: epsilon is derived from (n, k, B)",
                    ));
                }
            }
        }
        if let Some(eps) = self.fixed_epsilon_ev {
            if !eps.is_finite() || eps <= 0.0 {
                return Err(Error::schema("fixed_epsilon_eV", "must be finite and > 0"));
            }
        }
        if let Some(b) = self.fixed_b_tesla {
            if !b.is_finite() || b <= 0.0 {
                return Err(Error::schema("fixed_B_tesla", "must be finite and > 0"));
            }
        }
        Ok(())
    }

    /// Grid values, ascending.
    pub fn axis_values(&self) -> Vec<f64> {
        let g = &self.grid;
        let p = g.points as usize;
        let mut values = Vec::with_capacity(p);
        for i in 0..p {
            let t = i as f64 / (p - 1) as f64;
            let v = match g.spacing {
                Spacing::Linear => g.min + t * (g.max - g.min),
                Spacing::Log => (g.min.ln() + t * (g.max.ln() - g.min.ln())).exp(),
            };
            values.push(v);
        }
        // land exactly on the endpoints
        values[0] = g.min;
        values[p - 1] = g.max;
        values
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub axis_name: &'static str,
    pub axis_value: f64,
    pub b_tesla: f64,
    pub epsilon_ev: f64,
    pub n: u32,
    pub k: u32,
    pub scale_ev: f64,
    pub regime: Regime,
    pub value: f64,
    pub value_unit: ValueUnit,
    pub method: &'static str,
}

impl SweepRow {
    /// Re-checks the operation invariants before the row is written.
    pub fn validate(&self) -> Result<()> {
        if !self.value.is_finite() {
            return Err(Error::InvalidInput(format!(
                "non-finite value at {} = {:e}",
                self.axis_name, self.axis_value
            )));
        }
        if self.value < 0.0 {
            return Err(Error::InvalidInput(format!(
                "negative moment at {} = {:e}",
                self.axis_name, self.axis_value
            )));
        }
        if self.b_tesla > 0.0 && self.epsilon_ev > 0.0 {
            let field = MagneticField::from_tesla(self.b_tesla)?;
            let expected =
                moments::classify_regime(self.epsilon_ev, field, &RegimeThresholds::default());
            if expected != self.regime {
                return Err(Error::InvalidInput(format!(
                    "regime tag inconsistent at {} = {:e}",
                    self.axis_name, self.axis_value
                )));
            }
        }
        Ok(())
    }
}

/// Evaluates the sweep, rows in ascending axis order.
pub fn run(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let qn = QuantumNumbers::new(spec.n, spec.k);
    let thresholds = RegimeThresholds::default();
    let mut rows = Vec::with_capacity(spec.grid.points as usize);
    for axis_value in spec.axis_values() {
        let row = match spec.quantity {
            Quantity::Edm => {
                let (b, eps) = match spec.axis {
                    Axis::BTesla => (axis_value, spec.fixed_epsilon_ev.unwrap()),
                    Axis::EpsilonEv => (spec.fixed_b_tesla.unwrap(), axis_value),
                };
                let field = MagneticField::from_tesla(b)?;
                let m = moments::edm_closed(qn, field, eps)?;
                SweepRow {
                    axis_name: spec.axis.name(),
                    axis_value,
                    b_tesla: b,
                    epsilon_ev: eps,
                    n: spec.n,
                    k: spec.k,
                    scale_ev: m.scale_ev,
                    regime: m.regime,
                    value: m.value,
                    value_unit: ValueUnit::ECm,
                    method: m.method.as_str(),
                }
            }
            Quantity::Mdm => {
                let field = MagneticField::from_tesla(axis_value)?;
                let state = crate::landau::build_state(qn, field, M_E_C2_EV)?;
                let value = crate::constants::MU_B_J_PER_T
                    * crate::gordon::magnetization_ratio_closed(&state);
                SweepRow {
                    axis_name: spec.axis.name(),
                    axis_value,
                    b_tesla: axis_value,
                    epsilon_ev: state.epsilon_ev,
                    n: spec.n,
                    k: spec.k,
                    scale_ev: state.scale_ev,
                    regime: moments::classify_regime(state.epsilon_ev, field, &thresholds),
                    value,
                    value_unit: ValueUnit::JoulePerTesla,
                    method: "closed_form",
                }
            }
            Quantity::Spectrum => {
                let field = MagneticField::from_tesla(axis_value)?;
                let scale = field.scale_ev();
                let energy = crate::landau::energy_ev(qn, field, M_E_C2_EV);
                let levels = (spec.n + spec.k + 1) as f64;
                let epsilon = scale * scale * levels / (energy + M_E_C2_EV);
                let regime = if axis_value > 0.0 {
                    moments::classify_regime(epsilon, field, &thresholds)
                } else {
                    Regime::HighKinetic
                };
                SweepRow {
                    axis_name: spec.axis.name(),
                    axis_value,
                    b_tesla: axis_value,
                    epsilon_ev: epsilon,
                    n: spec.n,
                    k: spec.k,
                    scale_ev: scale,
                    regime,
                    value: energy,
                    value_unit: ValueUnit::ElectronVolt,
                    method: "closed_form",
                }
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

fn fmt(v: f64) -> String {
    format!("{v:.11e}")
}

/// Writes the fixed-schema CSV; every row is validated first.
pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> Result<()> {
    out.write_all(CSV_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for row in rows {
        row.validate()?;
        let line = format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            row.axis_name,
            fmt(row.axis_value),
            fmt(row.b_tesla),
            fmt(row.epsilon_ev),
            row.n,
            row.k,
            fmt(row.scale_ev),
            row.regime.as_str(),
            fmt(row.value),
            row.value_unit.as_str(),
            row.method,
        );
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}

/// Minimal single-polyline SVG of value vs axis, axis labels included.
pub fn render_svg(rows: &[SweepRow], spec: &SweepSpec) -> String {
    const W: f64 = 800.0;
    const H: f64 = 500.0;
    const ML: f64 = 80.0;
    const MR: f64 = 25.0;
    const MT: f64 = 25.0;
    const MB: f64 = 60.0;

    let xs: Vec<f64> = rows
        .iter()
        .map(|r| match spec.grid.spacing {
            Spacing::Linear => r.axis_value,
            Spacing::Log => r.axis_value.log10(),
        })
        .collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.value).collect();
    let (xmin, xmax) = bounds(&xs);
    let (ymin, ymax) = bounds(&ys);
    let sx = |x: f64| ML + (x - xmin) / (xmax - xmin).max(f64::MIN_POSITIVE) * (W - ML - MR);
    let sy = |y: f64| H - MB - (y - ymin) / (ymax - ymin).max(f64::MIN_POSITIVE) * (H - MT - MB);

    let mut points = String::new();
    for (x, y) in xs.iter().zip(&ys) {
        points.push_str(&format!("{:.2},{:.2} ", sx(*x), sy(*y)));
    }
    let unit = rows.first().map(|r| r.value_unit.as_str()).unwrap_or("");
    let x_label = match spec.grid.spacing {
        Spacing::Linear => spec.axis.name().to_string(),
        Spacing::Log => format!("log10({})", spec.axis.name()),
    };
    let y_label = format!("{} ({unit})", quantity_label(spec.quantity));
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" ",
            "viewBox=\"0 0 {w} {h}\">\n",
            "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<line x1=\"{ml}\" y1=\"{yax}\" x2=\"{xr}\" y2=\"{yax}\" stroke=\"black\"/>\n",
            "<line x1=\"{ml}\" y1=\"{mt}\" x2=\"{ml}\" y2=\"{yax}\" stroke=\"black\"/>\n",
            "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"{pts}\"/>\n",
            "<text x=\"{xmid}\" y=\"{xlab_y}\" text-anchor=\"middle\" font-size=\"14\">{xlab}</text>\n",
            "<text x=\"18\" y=\"{ymid}\" text-anchor=\"middle\" font-size=\"14\" ",
            "transform=\"rotate(-90 18 {ymid})\">{ylab}</text>\n",
            "<text x=\"{ml}\" y=\"{tick_y}\" text-anchor=\"middle\" font-size=\"11\">{x0:.3e}</text>\n",
            "<text x=\"{xr}\" y=\"{tick_y}\" text-anchor=\"middle\" font-size=\"11\">{x1:.3e}</text>\n",
            "<text x=\"{ml_m}\" y=\"{yax}\" text-anchor=\"end\" font-size=\"11\">{y0:.3e}</text>\n",
            "<text x=\"{ml_m}\" y=\"{mt_t}\" text-anchor=\"end\" font-size=\"11\">{y1:.3e}</text>\n",
            "</svg>\n"
        ),
        w = W,
        h = H,
        ml = ML,
        mt = MT,
        xr = W - MR,
        yax = H - MB,
        pts = points.trim_end(),
        xmid = (ML + W - MR) / 2.0,
        xlab_y = H - 18.0,
        xlab = x_label,
        ymid = (MT + H - MB) / 2.0,
        ylab = y_label,
        tick_y = H - MB + 18.0,
        x0 = rows.first().map(|r| r.axis_value).unwrap_or(0.0),
        x1 = rows.last().map(|r| r.axis_value).unwrap_or(0.0),
        ml_m = ML - 6.0,
        mt_t = MT + 4.0,
        y0 = ymin,
        y1 = ymax,
    )
}

fn quantity_label(q: Quantity) -> &'static str {
    match q {
        Quantity::Edm => "electric dipole moment",
        Quantity::Mdm => "magnetic dipole moment",
        Quantity::Spectrum => "energy",
    }
}

fn bounds(v: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &x in v {
        lo = lo.min(x);
        hi = hi.max(x);
    }
    if lo == hi {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_spec() -> SweepSpec {
        SweepSpec {
            quantity: Quantity::Edm,
            n: 0,
            k: 0,
            fixed_epsilon_ev: Some(2.6e5),
            fixed_b_tesla: None,
            axis: Axis::BTesla,
            grid: Grid {
                min: 1e-9,
                max: 4e-7,
                points: 100,
                spacing: Spacing::Linear,
            },
        }
    }

    #[test]
    fn field_sweep_is_monotone_high_kinetic() {
        let rows = run(&fig1_spec()).unwrap();
        assert_eq!(rows.len(), 100);
        for pair in rows.windows(2) {
            assert!(pair[1].value > pair[0].value, "edm must grow below b_max");
        }
        assert!(rows.iter().all(|r| r.regime == Regime::HighKinetic));
    }

    #[test]
    fn kinetic_sweep_is_monotone_decreasing() {
        // Fig.-2-style: epsilon axis 1e-14 J .. 10^-12.5 J in eV, B = 1e-10 T
        let spec = SweepSpec {
            quantity: Quantity::Edm,
            n: 0,
            k: 0,
            fixed_epsilon_ev: None,
            fixed_b_tesla: Some(1e-10),
            axis: Axis::EpsilonEv,
            grid: Grid {
                min: 6.241509074460763e4,
                max: 1.9737384711905487e6,
                points: 60,
                spacing: Spacing::Log,
            },
        };
        let rows = run(&spec).unwrap();
        for pair in rows.windows(2) {
            assert!(pair[1].value < pair[0].value, "edm must fall as 1/epsilon");
        }
    }

    #[test]
    fn two_point_grid_gives_two_rows() {
        let mut spec = fig1_spec();
        spec.grid.points = 2;
        let rows = run(&spec).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].axis_value, 1e-9);
        assert_eq!(rows[1].axis_value, 4e-7);
    }

    #[test]
    fn csv_is_deterministic() {
        let rows = run(&fig1_spec()).unwrap();
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_csv(&rows, &mut a).unwrap();
        write_csv(&run(&fig1_spec()).unwrap(), &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with(CSV_HEADER));
        assert_eq!(text.lines().count(), 101);
        assert!(!text.contains('\r'));
    }

    #[test]
    fn json_round_trip_and_unknown_key_rejection() {
        let json = r#"{
            "quantity": "edm", "n": 0, "k": 0,
            "fixed_epsilon_eV": 2.6e5,
            "axis": "B_tesla",
            "grid": {"min": 1e-9, "max": 4e-7, "points": 100, "spacing": "linear"}
        }"#;
        let spec = SweepSpec::from_json(json).unwrap();
        assert_eq!(spec, fig1_spec());
        let bad = json.replace("\"n\": 0,", "\"n\": 0, \"mystery\": 1,");
        assert!(matches!(
            SweepSpec::from_json(&bad),
            Err(Error::Schema { .. })
        ));
    }

    #[test]
    fn schema_violations_name_the_field() {
        let mut spec = fig1_spec();
        spec.grid.points = 1;
        match spec.validate() {
            Err(Error::Schema { field, .. }) => assert_eq!(field, "grid.points"),
            other => panic!("expected schema error, got {other:?}"),
        }
        let mut spec = fig1_spec();
        spec.fixed_epsilon_ev = None;
        match spec.validate() {
            Err(Error::Schema { field, .. }) => assert_eq!(field, "fixed_epsilon_eV"),
            other => panic!("expected schema error, got {other:?}"),
        }
        let mut spec = fig1_spec();
        spec.grid.min = 1e-2;
        spec.grid.max = 1e-9;
        assert!(spec.validate().is_err());
    }

    #[test]
    fn mdm_sweep_tends_to_bohr_magneton() {
        let spec = SweepSpec {
            quantity: Quantity::Mdm,
            n: 0,
            k: 0,
            fixed_epsilon_ev: None,
            fixed_b_tesla: None,
            axis: Axis::BTesla,
            grid: Grid {
                min: 1e-10,
                max: 1e10,
                points: 21,
                spacing: Spacing::Log,
            },
        };
        let rows = run(&spec).unwrap();
        let mu_b = crate::constants::MU_B_J_PER_T;
        assert!((rows[0].value / mu_b - 1.0).abs() < 1e-6);
        assert!(rows.last().unwrap().value > rows[0].value);
    }

    #[test]
    fn svg_contains_polyline_and_labels() {
        let spec = fig1_spec();
        let rows = run(&spec).unwrap();
        let svg = render_svg(&rows, &spec);
        assert!(svg.contains("<polyline"));
        assert!(svg.contains("B_tesla"));
        assert!(svg.contains("e.cm"));
    }
}
