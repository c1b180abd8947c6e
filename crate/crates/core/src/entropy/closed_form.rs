//! Analytic evaluation of the wedge entropy integral for Gaussian charges.
//!
//! Every integrand is a sum over term pairs of `(polynomial)·exp(−γ|x − c|²)`,
//! which factorizes over axes. Axis 0 is integrated over the half-line
//! `x₁ > w` (with or without the boost weight `x₁ − w`), the remaining axes
//! over the whole line, using closed-form Gaussian moments.

use std::f64::consts::PI;

use crate::charges::{GaussianTerm, TimeZeroCharge};
use crate::error::{Error, Result};
use crate::special::erfc;

use super::{EntropyReport, Route};

/// Polynomial in `u` with coefficients of `1, u, u², u³`.
type Poly = [f64; 4];

const ONE: Poly = [1.0, 0.0, 0.0, 0.0];

/// `q(u)·(u + s)`.
fn mul_linear(q: Poly, s: f64) -> Poly {
    debug_assert_eq!(q[3], 0.0);
    [s * q[0], q[0] + s * q[1], q[1] + s * q[2], q[2] + s * q[3]]
}

fn linear(s: f64) -> Poly {
    [s, 1.0, 0.0, 0.0]
}

/// `∫_{t0}^∞ uⁿ exp(−γu²) du` for n = 0..3.
fn half_line_moments(gamma: f64, t0: f64) -> Poly {
    let e = (-gamma * t0 * t0).exp();
    let m0 = 0.5 * (PI / gamma).sqrt() * erfc(gamma.sqrt() * t0);
    let m1 = e / (2.0 * gamma);
    let m2 = m0 / (2.0 * gamma) + t0 * e / (2.0 * gamma);
    let m3 = m1 / gamma + t0 * t0 * e / (2.0 * gamma);
    [m0, m1, m2, m3]
}

/// `∫_ℝ uⁿ exp(−γu²) du` for n = 0..3.
fn line_moments(gamma: f64) -> Poly {
    let m0 = (PI / gamma).sqrt();
    [m0, 0.0, m0 / (2.0 * gamma), 0.0]
}

fn dot(q: &Poly, m: &Poly) -> f64 {
    q.iter().zip(m).map(|(a, b)| a * b).sum()
}

/// Region of the `x₁` integration.
#[derive(Debug, Clone, Copy)]
enum Region {
    /// `x₁ > w`, weighted by `x₁ − w`.
    Wedge(f64),
    /// All of space, unweighted.
    Whole,
}

/// `g_i·g_j = pref·exp(−γ|x − c|²)`.
struct Pair<'a> {
    ti: &'a GaussianTerm,
    tj: &'a GaussianTerm,
    coeff: f64,
    gamma: f64,
    center: Vec<f64>,
}

impl<'a> Pair<'a> {
    fn new(ti: &'a GaussianTerm, tj: &'a GaussianTerm) -> Self {
        let (si2, sj2) = (ti.width * ti.width, tj.width * tj.width);
        let gamma = 1.0 / si2 + 1.0 / sj2;
        let center = ti
            .center
            .iter()
            .zip(&tj.center)
            .map(|(a, b)| (a / si2 + b / sj2) / gamma)
            .collect();
        let dist2: f64 = ti.center.iter().zip(&tj.center).map(|(a, b)| (a - b) * (a - b)).sum();
        let coeff = ti.amplitude * tj.amplitude * (-dist2 / (si2 + sj2)).exp();
        Self { ti, tj, coeff, gamma, center }
    }

    /// `∫ coeff·exp(−γ|x−c|²)·poly(x_axis − c_axis)` over the region, with
    /// the boost weight applied on axis 0 for `Region::Wedge`.
    fn integrate(&self, region: Region, axis: usize, poly: Poly) -> f64 {
        let mut value = self.coeff;
        for (l, &c) in self.center.iter().enumerate() {
            let q = if l == axis { poly } else { ONE };
            value *= match (l, region) {
                (0, Region::Wedge(w)) => dot(&mul_linear(q, c - w), &half_line_moments(self.gamma, w - c)),
                _ => dot(&q, &line_moments(self.gamma)),
            };
        }
        value
    }

    /// `(x_l − a_l)` for term `t`, as a polynomial in `u = x_l − c_l`.
    fn offset(&self, t: &GaussianTerm, l: usize) -> Poly {
        linear(self.center[l] - t.center[l])
    }

    fn product(&self, region: Region) -> f64 {
        self.integrate(region, 0, ONE)
    }

    fn gradient_dot(&self, region: Region) -> f64 {
        let s = 4.0 / (self.ti.width.powi(2) * self.tj.width.powi(2));
        (0..self.center.len())
            .map(|l| {
                let q = mul_linear(self.offset(self.ti, l), self.center[l] - self.tj.center[l]);
                self.integrate(region, l, q)
            })
            .sum::<f64>()
            * s
    }

    /// `g_i·(Δ g_j)` with the positive Laplacian.
    fn laplacian(&self, region: Region) -> f64 {
        let s2 = self.tj.width * self.tj.width;
        (0..self.center.len())
            .map(|l| {
                let sq = mul_linear(self.offset(self.tj, l), self.center[l] - self.tj.center[l]);
                let q = [2.0 / s2 - 4.0 * sq[0] / (s2 * s2), -4.0 * sq[1] / (s2 * s2), -4.0 * sq[2] / (s2 * s2), 0.0];
                self.integrate(region, l, q)
            })
            .sum()
    }

    /// `∫_{x₁=w} g_i g_j dx₂…dx_d`.
    fn on_edge(&self, w: f64) -> f64 {
        let c0 = self.center[0];
        let transverse: f64 = self.center[1..].iter().map(|_| (PI / self.gamma).sqrt()).product();
        self.coeff * (-self.gamma * (w - c0) * (w - c0)).exp() * transverse
    }
}

fn pair_sum(terms: &[GaussianTerm], f: impl Fn(&Pair) -> f64) -> f64 {
    let mut acc = 0.0;
    for ti in terms {
        for tj in terms {
            if ti.amplitude != 0.0 && tj.amplitude != 0.0 {
                acc += f(&Pair::new(ti, tj));
            }
        }
    }
    acc
}

pub(crate) fn check_mass(dimension: usize, mass: f64) -> Result<()> {
    if !(mass.is_finite() && mass >= 0.0) {
        return Err(Error::InvalidArgument(format!("mass must be finite and >= 0, got {mass}")));
    }
    if dimension == 1 && mass == 0.0 {
        return Err(Error::MasslessChiral);
    }
    Ok(())
}

/// Pieces of the closed form on the wedge `x₁ > w`, each including the
/// factor π.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Pieces {
    pub field: f64,
    pub k_squared: f64,
    pub gradient: f64,
    pub k_laplacian: f64,
    pub edge: f64,
}

pub(crate) fn pieces(charge: &TimeZeroCharge, offset: f64) -> Pieces {
    let region = Region::Wedge(offset);
    let h = charge.field_terms();
    let k = charge.momentum_terms();
    Pieces {
        field: PI * pair_sum(h, |p| p.product(region)),
        k_squared: PI * pair_sum(k, |p| p.product(region)),
        gradient: PI * pair_sum(k, |p| p.gradient_dot(region)),
        k_laplacian: PI * pair_sum(k, |p| p.laplacian(region)),
        edge: PI * pair_sum(k, |p| p.on_edge(offset)),
    }
}

/// `π∫_{x₁>w} (x₁ − w)(h² + m²k² + |∇k|²) dx`, with its decomposition.
pub fn entropy_closed_form(charge: &TimeZeroCharge, mass: f64, wedge_offset: f64) -> Result<EntropyReport> {
    check_mass(charge.dimension(), mass)?;
    if !wedge_offset.is_finite() {
        return Err(Error::InvalidArgument("wedge offset must be finite".into()));
    }
    if charge.is_zero() {
        return Ok(EntropyReport::zero(Route::ClosedForm, wedge_offset));
    }
    let p = pieces(charge, wedge_offset);
    let m2 = mass * mass;
    let momentum_total = m2 * p.k_squared + p.gradient;
    let total = p.field + momentum_total;
    let scale = p.field.abs() + m2 * p.k_squared.abs() + p.gradient.abs() + p.k_laplacian.abs();
    Ok(EntropyReport {
        route: Route::ClosedForm,
        offset: wedge_offset,
        field_term: Some(p.field),
        momentum_bulk: Some(p.k_laplacian + m2 * p.k_squared),
        boundary_term: Some(p.edge),
        momentum_total: Some(momentum_total),
        cross_term: Some(0.0),
        total,
        error_estimate: 64.0 * f64::EPSILON * scale,
        grid: None,
    })
}

/// Split of the momentum-charge entropy into the bulk integral
/// `π∫_{x₁>0} x₁ k(Δ+m²)k` and the edge integral `π∫_{x₁=0} k²`.
///
/// The two recombine as `bulk + edge/2`: integrating `x₁|∂₁k|²` by parts
/// leaves `½k²` on the edge.
pub fn boundary_decomposition(charge: &TimeZeroCharge, mass: f64) -> Result<(f64, f64)> {
    check_mass(charge.dimension(), mass)?;
    if charge.field_terms().iter().any(|t| t.amplitude != 0.0) {
        return Err(Error::InvalidCharge("boundary decomposition takes a momentum-only charge".into()));
    }
    let p = pieces(charge, 0.0);
    Ok((p.k_laplacian + mass * mass * p.k_squared, p.edge))
}

/// `S(φ_{charge1} ‖ φ_{charge2})` on the wedge, via the vacuum entropy of
/// `charge2 − charge1`.
pub fn relative_entropy_between(charge1: &TimeZeroCharge, charge2: &TimeZeroCharge, mass: f64) -> Result<f64> {
    Ok(entropy_closed_form(&charge2.difference(charge1)?, mass, 0.0)?.total)
}

/// Closed-form totals on the translated wedges `x₁ > a` for each offset `a`.
pub fn wedge_monotonicity_scan(charge: &TimeZeroCharge, mass: f64, offsets: &[f64]) -> Result<Vec<(f64, f64)>> {
    check_mass(charge.dimension(), mass)?;
    if offsets.iter().any(|a| !(a.is_finite() && *a >= 0.0)) {
        return Err(Error::InvalidArgument("offsets must be finite and >= 0".into()));
    }
    if offsets.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidArgument("offsets must be sorted ascending".into()));
    }
    use rayon::prelude::*;
    offsets
        .par_iter()
        .map(|&a| entropy_closed_form(charge, mass, a).map(|r| (a, r.total)))
        .collect()
}

/// `π∫_{ℝ^d} (h² + m²k² + |∇k|²) dx`, the rate at which the entropy of an
/// interior charge drops as the wedge edge moves forward.
pub fn energy_integral(charge: &TimeZeroCharge, mass: f64) -> Result<f64> {
    check_mass(charge.dimension(), mass)?;
    let h = charge.field_terms();
    let k = charge.momentum_terms();
    let r = Region::Whole;
    let v = pair_sum(h, |p| p.product(r)) + mass * mass * pair_sum(k, |p| p.product(r)) + pair_sum(k, |p| p.gradient_dot(r));
    Ok(PI * v)
}

/// `π∫_{x₁>w} (x₁ − w) k²`, the slope of the entropy in `m²`.
pub fn mass_slope(charge: &TimeZeroCharge, wedge_offset: f64) -> f64 {
    PI * pair_sum(charge.momentum_terms(), |p| p.product(Region::Wedge(wedge_offset)))
}
