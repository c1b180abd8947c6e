//! Entropy from on-shell data: `S = π·Im Σ conj(F)·∂_{p₁}F·Δpᵈ`.
//!
//! Folding the measure `dp/2ω` against the tangential boost generator
//! `ω∂_{p₁}` cancels the energy, so no `1/ω` appears. Boundary-crossing
//! data decay only like `1/p₁²`, so every value comes with an estimate of
//! the cutoff tail (the change from halving `P`) and of the stencil error
//! (Richardson against a stencil of twice the spacing).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::charges::{TimeZeroCharge, TruncationMode};
use crate::error::{Error, Result};
use crate::momentum::{p1_derivative, MomentumGrid, OnShellData};

use super::closed_form::check_mass;
use super::{EntropyReport, Route};

struct Sums {
    value: f64,
    half_cutoff: f64,
    wide_stencil: f64,
}

impl Sums {
    // Both differences equal the leading error term only to first order,
    // so each is doubled to make the estimate a bound rather than a guess.
    fn tail(&self) -> f64 {
        2.0 * (self.value - self.half_cutoff).abs()
    }

    fn stencil(&self) -> f64 {
        2.0 * (self.value - self.wide_stencil).abs() / 3.0
    }
}

/// `π·Im Σ conj(a)·b·Δpᵈ`, plus the same sum restricted to `|p₁| < P/2`.
fn im_sum(grid: &MomentumGrid, a: &[Complex64], b: &[Complex64]) -> (f64, f64) {
    let stride = grid.p1_stride();
    let n = grid.points_per_axis();
    let (lo, hi) = (n / 4, n - n / 4);
    let mut full = 0.0;
    let mut half = 0.0;
    for (flat, (x, y)) in a.iter().zip(b).enumerate() {
        let t = (x.conj() * y).im;
        full += t;
        let i = flat / stride;
        if i >= lo && i < hi {
            half += t;
        }
    }
    let v = PI * grid.cell_volume();
    (full * v, half * v)
}

fn sums(grid: &MomentumGrid, samples: &[Complex64]) -> Sums {
    let d1 = p1_derivative(grid, samples, 1);
    let d2 = p1_derivative(grid, samples, 2);
    let (value, half_cutoff) = im_sum(grid, samples, &d1);
    let (wide_stencil, _) = im_sum(grid, samples, &d2);
    Sums { value, half_cutoff, wide_stencil }
}

/// Entropy of raw on-shell data. Only the total is resolved.
pub fn entropy_momentum_route(data: &OnShellData) -> EntropyReport {
    let grid = data.grid();
    if data.samples().iter().all(|s| *s == Complex64::new(0.0, 0.0)) {
        let mut r = EntropyReport::zero(Route::Momentum, 0.0).with_grid(grid, None);
        r.field_term = None;
        r.momentum_total = None;
        r.cross_term = None;
        return r;
    }
    let s = sums(grid, data.samples());
    let mut report = EntropyReport {
        route: Route::Momentum,
        offset: 0.0,
        field_term: None,
        momentum_bulk: None,
        boundary_term: None,
        momentum_total: None,
        cross_term: None,
        total: s.value,
        error_estimate: s.tail() + s.stencil(),
        grid: None,
    }
    .with_grid(grid, None);
    if let Some(g) = report.grid.as_mut() {
        g.tail_estimate = s.tail();
        g.stencil_estimate = s.stencil();
    }
    report
}

fn check_grid(charge: &TimeZeroCharge, grid: &MomentumGrid) -> Result<()> {
    if charge.dimension() != grid.dimension() {
        return Err(Error::DimensionMismatch { expected: charge.dimension(), got: grid.dimension() });
    }
    check_mass(grid.dimension(), grid.mass())
}

/// Momentum-route entropy of a charge on the wedge `x₁ > offset`, with the
/// truncation mode picked from the charge support.
pub fn entropy_momentum(charge: &TimeZeroCharge, grid: &MomentumGrid, offset: f64) -> Result<EntropyReport> {
    let mode = charge.natural_mode(offset);
    entropy_momentum_in_mode(charge, grid, offset, mode)
}

pub fn entropy_momentum_in_mode(
    charge: &TimeZeroCharge,
    grid: &MomentumGrid,
    offset: f64,
    mode: TruncationMode,
) -> Result<EntropyReport> {
    check_grid(charge, grid)?;
    if !offset.is_finite() {
        return Err(Error::InvalidArgument("wedge offset must be finite".into()));
    }
    if charge.is_zero() {
        let mut r = EntropyReport::zero(Route::Momentum, offset).with_grid(grid, Some(mode));
        r.momentum_bulk = None;
        r.boundary_term = None;
        return Ok(r);
    }
    let shifted = charge.shifted_along_x1(offset);
    let fh = shifted.field_part().to_onshell(grid, mode)?;
    let fk = shifted.momentum_part().to_onshell(grid, mode)?;
    let f = fh.add(&fk)?;

    let total = sums(grid, f.samples());
    let field = sums(grid, fh.samples()).value;
    let momentum = sums(grid, fk.samples()).value;
    let cross = total.value - field - momentum;

    let mut report = EntropyReport {
        route: Route::Momentum,
        offset,
        field_term: Some(field),
        momentum_bulk: None,
        boundary_term: None,
        momentum_total: Some(momentum),
        cross_term: Some(cross),
        total: total.value,
        error_estimate: total.tail() + total.stencil(),
        grid: None,
    }
    .with_grid(grid, Some(mode));
    if let Some(g) = report.grid.as_mut() {
        g.tail_estimate = total.tail();
        g.stencil_estimate = total.stencil();
    }
    Ok(report)
}

/// `π·Im Σ [conj(F_h)∂F_k + conj(F_k)∂F_h]·Δpᵈ`, the h–k interference of the
/// momentum route on the wedge `x₁ > 0`.
pub fn cross_term(charge: &TimeZeroCharge, grid: &MomentumGrid) -> Result<f64> {
    check_grid(charge, grid)?;
    let h = charge.field_part();
    let k = charge.momentum_part();
    if h.is_zero() || k.is_zero() {
        return Ok(0.0);
    }
    let mode = charge.natural_mode(0.0);
    let fh = h.to_onshell(grid, mode)?;
    let fk = k.to_onshell(grid, mode)?;
    let dh = p1_derivative(grid, fh.samples(), 1);
    let dk = p1_derivative(grid, fk.samples(), 1);
    let (a, _) = im_sum(grid, fh.samples(), &dk);
    let (b, _) = im_sum(grid, fk.samples(), &dh);
    Ok(a + b)
}
