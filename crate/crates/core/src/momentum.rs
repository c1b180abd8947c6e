//! One-particle vectors as functions on the mass hyperboloid, sampled on a
//! cell-centered momentum grid.
//!
//! The invariant measure `dΩₘ = d**p**/(2ω)` is discretized by the midpoint
//! rule. Axis 0 of the grid is the boost direction `p₁`; flat node indices run
//! with axis 0 slowest.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `ω(p) = sqrt(|p|² + m²)`.
pub fn omega(p: &[f64], mass: f64) -> f64 {
    (p.iter().map(|x| x * x).sum::<f64>() + mass * mass).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentumGrid {
    dimension: usize,
    mass: f64,
    half_extent: f64,
    points_per_axis: usize,
}

impl MomentumGrid {
    pub fn new(dimension: usize, mass: f64, half_extent: f64, points_per_axis: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidGrid("dimension must be at least 1".into()));
        }
        if !(mass.is_finite() && mass >= 0.0) {
            return Err(Error::InvalidGrid(format!("mass must be finite and >= 0, got {mass}")));
        }
        if dimension == 1 && mass == 0.0 {
            return Err(Error::MasslessChiral);
        }
        if !(half_extent.is_finite() && half_extent > 0.0) {
            return Err(Error::InvalidGrid(format!("half extent must be > 0, got {half_extent}")));
        }
        if points_per_axis < 8 {
            return Err(Error::InvalidGrid(format!(
                "need at least 8 points per axis, got {points_per_axis}"
            )));
        }
        if mass == 0.0 && points_per_axis % 2 == 1 {
            // an odd cell-centered grid has a node at p = 0 where ω vanishes
            return Err(Error::InvalidGrid("massless grids need an even number of points per axis".into()));
        }
        points_per_axis
            .checked_pow(dimension as u32)
            .ok_or_else(|| Error::InvalidGrid("node count overflows".into()))?;
        Ok(Self { dimension, mass, half_extent, points_per_axis })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn half_extent(&self) -> f64 {
        self.half_extent
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_extent / self.points_per_axis as f64
    }

    pub fn node_count(&self) -> usize {
        self.points_per_axis.pow(self.dimension as u32)
    }

    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.dimension as i32)
    }

    /// Cell-centered coordinates along one axis, ascending.
    pub fn axis_nodes(&self) -> Vec<f64> {
        let dp = self.spacing();
        (0..self.points_per_axis)
            .map(|i| -self.half_extent + (i as f64 + 0.5) * dp)
            .collect()
    }

    /// Per-axis indices of a flat node index.
    pub fn multi_index(&self, mut flat: usize, out: &mut [usize]) {
        let n = self.points_per_axis;
        for slot in out.iter_mut().rev() {
            *slot = flat % n;
            flat /= n;
        }
    }

    /// Distance in flat indices between neighbours along axis 0.
    pub fn p1_stride(&self) -> usize {
        self.points_per_axis.pow(self.dimension as u32 - 1)
    }

    /// ω at every node, in flat order.
    pub fn omegas(&self) -> Vec<f64> {
        let axis = self.axis_nodes();
        let mut idx = vec![0usize; self.dimension];
        let mut p = vec![0.0; self.dimension];
        (0..self.node_count())
            .map(|flat| {
                self.multi_index(flat, &mut idx);
                for (pl, &i) in p.iter_mut().zip(&idx) {
                    *pl = axis[i];
                }
                omega(&p, self.mass)
            })
            .collect()
    }

    /// Same mass and dimension, `P → s·P`, `N → round(s²·N)`.
    pub fn scaled(&self, scale: f64) -> Result<Self> {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::InvalidGrid(format!("grid scale must be > 0, got {scale}")));
        }
        let mut n = (self.points_per_axis as f64 * scale * scale).round() as usize;
        if self.mass == 0.0 && n % 2 == 1 {
            n += 1;
        }
        Self::new(self.dimension, self.mass, self.half_extent * scale, n)
    }
}

/// Complex samples `F(p)` of a one-particle vector at every grid node.
#[derive(Debug, Clone, PartialEq)]
pub struct OnShellData {
    grid: MomentumGrid,
    samples: Vec<Complex64>,
}

impl OnShellData {
    pub fn new(grid: MomentumGrid, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.node_count() {
            return Err(Error::InvalidGrid(format!(
                "expected {} samples, got {}",
                grid.node_count(),
                samples.len()
            )));
        }
        Ok(Self { grid, samples })
    }

    pub fn zeros(grid: MomentumGrid) -> Self {
        Self { samples: vec![Complex64::new(0.0, 0.0); grid.node_count()], grid }
    }

    /// Samples `f(p)` of a function of the momentum vector.
    pub fn from_fn(grid: MomentumGrid, f: impl Fn(&[f64]) -> Complex64) -> Self {
        let axis = grid.axis_nodes();
        let mut idx = vec![0usize; grid.dimension()];
        let mut p = vec![0.0; grid.dimension()];
        let samples = (0..grid.node_count())
            .map(|flat| {
                grid.multi_index(flat, &mut idx);
                for (pl, &i) in p.iter_mut().zip(&idx) {
                    *pl = axis[i];
                }
                f(&p)
            })
            .collect();
        Self { grid, samples }
    }

    pub fn grid(&self) -> &MomentumGrid {
        &self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    /// Index of the node at `-p` for the node at `flat`.
    pub fn mirror_index(&self, flat: usize) -> usize {
        let n = self.grid.points_per_axis();
        let mut idx = vec![0usize; self.grid.dimension()];
        self.grid.multi_index(flat, &mut idx);
        idx.iter().fold(0, |acc, &i| acc * n + (n - 1 - i))
    }

    /// `max |F(−p) − conj F(p)|`; zero for the data of a real field charge.
    pub fn conjugate_symmetry_defect(&self) -> f64 {
        (0..self.samples.len())
            .map(|i| (self.samples[self.mirror_index(i)] - self.samples[i].conj()).norm())
            .fold(0.0, f64::max)
    }

    /// `max |F(−p) + conj F(p)|`; zero for the data `iωk̂` of a real momentum
    /// charge.
    pub fn conjugate_antisymmetry_defect(&self) -> f64 {
        (0..self.samples.len())
            .map(|i| (self.samples[self.mirror_index(i)] + self.samples[i].conj()).norm())
            .fold(0.0, f64::max)
    }

    pub fn add(&self, other: &OnShellData) -> Result<OnShellData> {
        self.check_grid(other)?;
        let samples = self.samples.iter().zip(&other.samples).map(|(a, b)| a + b).collect();
        Ok(Self { grid: self.grid, samples })
    }

    pub fn scale(&self, factor: f64) -> OnShellData {
        Self { grid: self.grid, samples: self.samples.iter().map(|s| s * factor).collect() }
    }

    fn check_grid(&self, other: &OnShellData) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }
}

/// Midpoint discretization of `∫ conj(F) G dΩₘ`.
pub fn inner_product(f: &OnShellData, g: &OnShellData) -> Result<Complex64> {
    f.check_grid(g)?;
    let omegas = f.grid.omegas();
    let mut acc = Complex64::new(0.0, 0.0);
    for ((a, b), w) in f.samples.iter().zip(&g.samples).zip(&omegas) {
        acc += a.conj() * b / (2.0 * w);
    }
    Ok(acc * f.grid.cell_volume())
}

/// `Im (F, G)`.
pub fn symplectic_form(f: &OnShellData, g: &OnShellData) -> Result<f64> {
    Ok(inner_product(f, g)?.im)
}

/// `∂F/∂p₁` with a second-order stencil of half-width `reach` nodes
/// (`reach = 1`: spacing Δp, `reach = 2`: spacing 2Δp). Nodes closer than
/// `reach` to an edge use the one-sided three-point formula.
pub(crate) fn p1_derivative(grid: &MomentumGrid, samples: &[Complex64], reach: usize) -> Vec<Complex64> {
    let n = grid.points_per_axis();
    let stride = grid.p1_stride();
    let dp = grid.spacing();
    let mut out = vec![Complex64::new(0.0, 0.0); samples.len()];
    for (flat, slot) in out.iter_mut().enumerate() {
        let i = flat / stride;
        let at = |k: usize| samples[flat - i * stride + k * stride];
        *slot = if i == 0 {
            (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * dp)
        } else if i == n - 1 {
            (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2.0 * dp)
        } else if i >= reach && i + reach < n {
            (at(i + reach) - at(i - reach)) / (2.0 * reach as f64 * dp)
        } else {
            (at(i + 1) - at(i - 1)) / (2.0 * dp)
        };
    }
    out
}

/// Tangential boost generator on the hyperboloid: `ω(p)·∂F/∂p₁`.
pub fn boost_derivative(f: &OnShellData) -> OnShellData {
    let d = p1_derivative(&f.grid, &f.samples, 1);
    let samples = d.iter().zip(f.grid.omegas()).map(|(v, w)| v * w).collect();
    OnShellData { grid: f.grid, samples }
}
