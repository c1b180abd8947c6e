//! Scenario files: versioned JSON, unknown keys rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::charges::{GaussianTerm, TimeZeroCharge};
use crate::entropy::Route;
use crate::error::{Error, Result};
use crate::momentum::MomentumGrid;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub schema: u32,
    pub dimension: usize,
    pub mass: f64,
    #[serde(default)]
    pub charge: ChargeSpec,
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default = "default_offsets")]
    pub offsets: Vec<f64>,
    #[serde(default = "default_routes")]
    pub routes: Vec<Route>,
    /// Relative tolerance for route agreement.
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub sweep: Option<SweepSpec>,
    #[serde(default)]
    pub output: OutputSpec,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChargeSpec {
    #[serde(default)]
    pub field: Vec<GaussianTerm>,
    #[serde(default)]
    pub momentum: Vec<GaussianTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub half_extent: f64,
    pub points_per_axis: usize,
    /// Grid scale factors for convergence checks, applied on top of
    /// `--grid-scale`.
    #[serde(default = "default_refinement")]
    pub refinement: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParameter {
    /// Moves every term so that its first center coordinate is the value.
    CenterX1,
    Mass,
}

impl SweepParameter {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepParameter::CenterX1 => "center_x1",
            SweepParameter::Mass => "mass",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub json: Option<String>,
    pub csv: Option<String>,
}

fn default_offsets() -> Vec<f64> {
    vec![0.0]
}

fn default_routes() -> Vec<Route> {
    vec![Route::ClosedForm, Route::Momentum]
}

fn default_tolerance() -> f64 {
    0.01
}

fn default_refinement() -> Vec<f64> {
    vec![1.0]
}

/// A config whose preconditions have all been checked.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub config: ScenarioConfig,
    pub charge: TimeZeroCharge,
    /// Momentum grid at the requested `--grid-scale`, if any.
    pub grid: Option<MomentumGrid>,
    pub grid_scale: f64,
}

impl Scenario {
    pub fn wants(&self, route: Route) -> bool {
        self.config.routes.contains(&route)
    }

    /// The grid for another mass, same extent and resolution.
    pub fn grid_for_mass(&self, mass: f64) -> Result<Option<MomentumGrid>> {
        self.grid
            .map(|g| MomentumGrid::new(g.dimension(), mass, g.half_extent(), g.points_per_axis()))
            .transpose()
    }

    /// Grids of the refinement ladder.
    pub fn ladder(&self) -> Result<Vec<(f64, MomentumGrid)>> {
        let (Some(grid), Some(grid_spec)) = (self.grid, self.config.grid.as_ref()) else {
            return Ok(Vec::new());
        };
        grid_spec.refinement.iter().map(|&s| Ok((s, grid.scaled(s)?))).collect()
    }
}

impl ScenarioConfig {
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Checks every module precondition before anything is computed.
    pub fn validate(self, grid_scale: f64) -> Result<Scenario> {
        let cfg = |m: String| Err(Error::Config(m));
        if self.schema != SCHEMA_VERSION {
            return cfg(format!("unsupported schema {}, expected {SCHEMA_VERSION}", self.schema));
        }
        if self.dimension == 0 {
            return cfg("dimension must be >= 1".into());
        }
        check_mass(self.dimension, self.mass)?;
        if !(grid_scale.is_finite() && grid_scale > 0.0) {
            return cfg(format!("grid scale must be > 0, got {grid_scale}"));
        }
        if self.routes.is_empty() {
            return cfg("at least one route is required".into());
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return cfg("tolerance must be > 0".into());
        }
        if self.offsets.iter().any(|a| !a.is_finite()) {
            return cfg("offsets must be finite".into());
        }
        let charge = TimeZeroCharge::new(self.dimension, self.charge.field.clone(), self.charge.momentum.clone())
            .map_err(|e| Error::Config(e.to_string()))?;

        let grid = match &self.grid {
            Some(grid_spec) => {
                if grid_spec.refinement.is_empty() || grid_spec.refinement.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
                    return cfg("refinement factors must be > 0 and non-empty".into());
                }
                let base = MomentumGrid::new(self.dimension, self.mass, grid_spec.half_extent, grid_spec.points_per_axis)
                    .map_err(|e| Error::Config(e.to_string()))?;
                let grid = base.scaled(grid_scale).map_err(|e| Error::Config(e.to_string()))?;
                for &s in &grid_spec.refinement {
                    grid.scaled(s).map_err(|e| Error::Config(e.to_string()))?;
                }
                Some(grid)
            }
            None if self.routes.contains(&Route::Momentum) => {
                return cfg("the momentum route needs a grid".into());
            }
            None => None,
        };

        if let Some(sweep) = &self.sweep {
            for &v in &sweep.values {
                match sweep.parameter {
                    SweepParameter::CenterX1 if !v.is_finite() => return cfg("sweep values must be finite".into()),
                    SweepParameter::Mass => check_mass(self.dimension, v)?,
                    _ => {}
                }
            }
        }
        Ok(Scenario { config: self, charge, grid, grid_scale })
    }
}

fn check_mass(dimension: usize, mass: f64) -> Result<()> {
    if !(mass.is_finite() && mass >= 0.0) {
        return Err(Error::Config(format!("mass must be finite and >= 0, got {mass}")));
    }
    if dimension == 1 && mass == 0.0 {
        return Err(Error::Config(Error::MasslessChiral.to_string()));
    }
    Ok(())
}

/// Sets the first center coordinate of every term.
pub fn recentered(charge: &TimeZeroCharge, x1: f64) -> TimeZeroCharge {
    let mv = |terms: &[GaussianTerm]| {
        terms
            .iter()
            .map(|t| {
                let mut t = t.clone();
                t.center[0] = x1;
                t
            })
            .collect()
    };
    TimeZeroCharge::new(charge.dimension(), mv(charge.field_terms()), mv(charge.momentum_terms()))
        .expect("recentering keeps terms valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{"schema": 1, "dimension": 1, "mass": 1.0,
        "charge": {"field": [{"amplitude": 1.0, "center": [2.0], "width": 1.0}]},
        "routes": ["closed_form"]}"#;

    #[test]
    fn minimal_config() {
        let s = ScenarioConfig::from_json(MINIMAL).unwrap().validate(1.0).unwrap();
        assert_eq!(s.config.offsets, vec![0.0]);
        assert!(s.grid.is_none());
        assert_eq!(s.charge.field_terms().len(), 1);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_schema() {
        let extra = MINIMAL.replace("\"schema\": 1,", "\"schema\": 1, \"colour\": 3,");
        assert!(ScenarioConfig::from_json(&extra).is_err());
        let v2 = MINIMAL.replace("\"schema\": 1", "\"schema\": 2");
        assert!(ScenarioConfig::from_json(&v2).unwrap().validate(1.0).is_err());
        let bad_term = MINIMAL.replace("\"width\": 1.0", "\"width\": 1.0, \"phase\": 0");
        assert!(ScenarioConfig::from_json(&bad_term).is_err());
    }

    #[test]
    fn rejects_massless_line() {
        let c = MINIMAL.replace("\"mass\": 1.0", "\"mass\": 0.0");
        assert!(ScenarioConfig::from_json(&c).unwrap().validate(1.0).is_err());
    }

    #[test]
    fn momentum_route_needs_grid() {
        let c = MINIMAL.replace("[\"closed_form\"]", "[\"closed_form\", \"momentum\"]");
        assert!(ScenarioConfig::from_json(&c).unwrap().validate(1.0).is_err());
    }

    #[test]
    fn grid_scale_applied() {
        let c = MINIMAL.replace(
            "\"routes\": [\"closed_form\"]",
            "\"grid\": {\"half_extent\": 16.0, \"points_per_axis\": 256, \"refinement\": [1, 2]}",
        );
        let s = ScenarioConfig::from_json(&c).unwrap().validate(2.0).unwrap();
        let g = s.grid.unwrap();
        assert_eq!(g.half_extent(), 32.0);
        assert_eq!(g.points_per_axis(), 1024);
        assert_eq!(s.ladder().unwrap().len(), 2);
        assert!(ScenarioConfig::from_json(&c).unwrap().validate(0.0).is_err());
    }

    #[test]
    fn dimension_mismatch_in_terms() {
        let c = MINIMAL.replace("\"center\": [2.0]", "\"center\": [2.0, 0.0]");
        assert!(ScenarioConfig::from_json(&c).unwrap().validate(1.0).is_err());
    }

    #[test]
    fn recentering() {
        let s = ScenarioConfig::from_json(MINIMAL).unwrap().validate(1.0).unwrap();
        let r = recentered(&s.charge, -1.5);
        assert_eq!(r.field_terms()[0].center, vec![-1.5]);
    }
}
