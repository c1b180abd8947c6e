//! Vacuum relative entropy of a coherent state on the (translated) wedge.

mod closed_form;
mod momentum_route;

use serde::{Deserialize, Serialize};

use crate::charges::TruncationMode;
use crate::momentum::MomentumGrid;

pub use closed_form::{
    boundary_decomposition, energy_integral, entropy_closed_form, mass_slope, relative_entropy_between,
    wedge_monotonicity_scan,
};
pub use momentum_route::{cross_term, entropy_momentum, entropy_momentum_in_mode, entropy_momentum_route};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    ClosedForm,
    Momentum,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::ClosedForm => "closed_form",
            Route::Momentum => "momentum",
        }
    }
}

/// Grid and cutoff metadata of a momentum-route evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridInfo {
    pub half_extent: f64,
    pub points_per_axis: usize,
    pub spacing: f64,
    pub mode: Option<TruncationMode>,
    /// `2|S(P) − S(P/2)|`.
    pub tail_estimate: f64,
    /// `2|S(Δp) − S(2Δp)|/3`.
    pub stencil_estimate: f64,
}

/// Entropy value with its decomposition.
///
/// Parts a route cannot resolve are `None`: the momentum route sees only
/// the on-shell data, so it has no bulk/edge split, and raw data carry no
/// field/momentum split either.
///
/// On the closed-form route `total = field_term + momentum_total` and
/// `momentum_total = momentum_bulk + boundary_term / 2`. On the momentum
/// route `total = field_term + momentum_total + cross_term`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub route: Route,
    pub offset: f64,
    /// `π∫_{x₁>w} (x₁−w) h²`.
    pub field_term: Option<f64>,
    /// `π∫_{x₁>w} (x₁−w) k(Δ+m²)k`; may be negative on its own.
    pub momentum_bulk: Option<f64>,
    /// `π∫_{x₁=w} k²`.
    pub boundary_term: Option<f64>,
    /// `π∫_{x₁>w} (x₁−w)(|∇k|² + m²k²)`.
    pub momentum_total: Option<f64>,
    /// h–k interference on the momentum route; zero in the continuum.
    pub cross_term: Option<f64>,
    pub total: f64,
    /// Absolute error estimate of `total`.
    pub error_estimate: f64,
    pub grid: Option<GridInfo>,
}

impl EntropyReport {
    pub(crate) fn zero(route: Route, offset: f64) -> Self {
        Self {
            route,
            offset,
            field_term: Some(0.0),
            momentum_bulk: (route == Route::ClosedForm).then_some(0.0),
            boundary_term: (route == Route::ClosedForm).then_some(0.0),
            momentum_total: Some(0.0),
            cross_term: Some(0.0),
            total: 0.0,
            error_estimate: 0.0,
            grid: None,
        }
    }

    pub(crate) fn with_grid(mut self, grid: &MomentumGrid, mode: Option<TruncationMode>) -> Self {
        self.grid = Some(GridInfo {
            half_extent: grid.half_extent(),
            points_per_axis: grid.points_per_axis(),
            spacing: grid.spacing(),
            mode,
            tail_estimate: 0.0,
            stencil_estimate: 0.0,
        });
        self
    }

    /// Violated consistency relations, each with its residual.
    pub fn invariant_violations(&self, tolerance: f64) -> Vec<(&'static str, f64)> {
        let mut out = Vec::new();
        let floor = -1e-12;
        for (name, v) in [
            ("field_term >= 0", self.field_term),
            ("momentum_total >= 0", self.momentum_total),
            ("boundary_term >= 0", self.boundary_term),
            ("total >= 0", Some(self.total)),
        ] {
            if let Some(v) = v {
                if v < floor {
                    out.push((name, v));
                }
            }
        }
        if let (Some(f), Some(m)) = (self.field_term, self.momentum_total) {
            let r = self.total - f - m - self.cross_term.unwrap_or(0.0);
            if r.abs() > 1e-12 * self.total.abs().max(1.0) {
                out.push(("total = field + momentum (+ cross)", r));
            }
        }
        if let (Some(b), Some(e), Some(m)) = (self.momentum_bulk, self.boundary_term, self.momentum_total) {
            let r = m - b - 0.5 * e;
            if r.abs() > tolerance * m.abs().max(1e-300) {
                out.push(("momentum_total = bulk + boundary/2", r));
            }
        }
        out
    }
}
