//! Time-zero field and momentum charges built from isotropic Gaussians, with
//! their exact Fourier transforms and half-space truncation.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::momentum::{MomentumGrid, OnShellData};
use crate::special::erfcx;

/// `c·exp(−|x − a|²/σ²)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussianTerm {
    pub amplitude: f64,
    pub center: Vec<f64>,
    pub width: f64,
}

impl GaussianTerm {
    pub fn new(amplitude: f64, center: Vec<f64>, width: f64) -> Result<Self> {
        let term = Self { amplitude, center, width };
        term.validate()?;
        Ok(term)
    }

    fn validate(&self) -> Result<()> {
        if !(self.width.is_finite() && self.width > 0.0) {
            return Err(Error::InvalidCharge(format!("width must be > 0, got {}", self.width)));
        }
        if !self.amplitude.is_finite() || self.center.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidCharge("non-finite amplitude or center".into()));
        }
        Ok(())
    }

    fn gaussian(&self, x: &[f64]) -> f64 {
        let r2: f64 = x.iter().zip(&self.center).map(|(x, a)| (x - a) * (x - a)).sum();
        self.amplitude * (-r2 / (self.width * self.width)).exp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Field,
    Momentum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TruncationMode {
    Full,
    /// Multiply the time-zero data by the indicator of `x₁ > 0`.
    WedgeHalfSpace,
}

/// Cauchy data `(h, k)` on the time-zero hyperplane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeZeroCharge {
    dimension: usize,
    field_terms: Vec<GaussianTerm>,
    momentum_terms: Vec<GaussianTerm>,
}

impl TimeZeroCharge {
    pub fn new(
        dimension: usize,
        field_terms: Vec<GaussianTerm>,
        momentum_terms: Vec<GaussianTerm>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidCharge("dimension must be at least 1".into()));
        }
        for term in field_terms.iter().chain(&momentum_terms) {
            term.validate()?;
            if term.center.len() != dimension {
                return Err(Error::DimensionMismatch { expected: dimension, got: term.center.len() });
            }
        }
        Ok(Self { dimension, field_terms, momentum_terms })
    }

    pub fn zero(dimension: usize) -> Self {
        Self { dimension, field_terms: Vec::new(), momentum_terms: Vec::new() }
    }

    pub fn field(dimension: usize, terms: Vec<GaussianTerm>) -> Result<Self> {
        Self::new(dimension, terms, Vec::new())
    }

    pub fn momentum(dimension: usize, terms: Vec<GaussianTerm>) -> Result<Self> {
        Self::new(dimension, Vec::new(), terms)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn field_terms(&self) -> &[GaussianTerm] {
        &self.field_terms
    }

    pub fn momentum_terms(&self) -> &[GaussianTerm] {
        &self.momentum_terms
    }

    pub fn terms(&self, which: Component) -> &[GaussianTerm] {
        match which {
            Component::Field => &self.field_terms,
            Component::Momentum => &self.momentum_terms,
        }
    }

    /// True when every amplitude is zero (or there are no terms).
    pub fn is_zero(&self) -> bool {
        self.field_terms.iter().chain(&self.momentum_terms).all(|t| t.amplitude == 0.0)
    }

    pub fn field_part(&self) -> Self {
        Self { dimension: self.dimension, field_terms: self.field_terms.clone(), momentum_terms: Vec::new() }
    }

    pub fn momentum_part(&self) -> Self {
        Self { dimension: self.dimension, field_terms: Vec::new(), momentum_terms: self.momentum_terms.clone() }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let scale = |terms: &[GaussianTerm]| {
            terms
                .iter()
                .map(|t| GaussianTerm { amplitude: factor * t.amplitude, ..t.clone() })
                .collect()
        };
        Self {
            dimension: self.dimension,
            field_terms: scale(&self.field_terms),
            momentum_terms: scale(&self.momentum_terms),
        }
    }

    /// The charge in coordinates where the translated wedge `x₁ > offset`
    /// becomes `x₁ > 0`.
    pub fn shifted_along_x1(&self, offset: f64) -> Self {
        let shift = |terms: &[GaussianTerm]| {
            terms
                .iter()
                .map(|t| {
                    let mut t = t.clone();
                    t.center[0] -= offset;
                    t
                })
                .collect()
        };
        Self {
            dimension: self.dimension,
            field_terms: shift(&self.field_terms),
            momentum_terms: shift(&self.momentum_terms),
        }
    }

    /// `self − other` as a term list.
    pub fn difference(&self, other: &TimeZeroCharge) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, got: other.dimension });
        }
        let neg = other.scaled(-1.0);
        let mut field_terms = self.field_terms.clone();
        field_terms.extend(neg.field_terms);
        let mut momentum_terms = self.momentum_terms.clone();
        momentum_terms.extend(neg.momentum_terms);
        Ok(Self { dimension: self.dimension, field_terms, momentum_terms })
    }

    /// Full mode when every term sits at least 6σ inside `x₁ > offset`.
    pub fn natural_mode(&self, offset: f64) -> TruncationMode {
        let interior = self
            .field_terms
            .iter()
            .chain(&self.momentum_terms)
            .all(|t| t.amplitude == 0.0 || t.center[0] - offset >= 6.0 * t.width);
        if interior {
            TruncationMode::Full
        } else {
            TruncationMode::WedgeHalfSpace
        }
    }

    fn check_point(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, got: x.len() });
        }
        Ok(())
    }

    pub fn evaluate(&self, which: Component, x: &[f64]) -> Result<f64> {
        self.check_point(x)?;
        Ok(self.terms(which).iter().map(|t| t.gaussian(x)).sum())
    }

    pub fn gradient_k(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_point(x)?;
        let mut grad = vec![0.0; self.dimension];
        for t in &self.momentum_terms {
            let g = t.gaussian(x);
            let s2 = t.width * t.width;
            for (gl, (xl, al)) in grad.iter_mut().zip(x.iter().zip(&t.center)) {
                *gl += -2.0 * (xl - al) / s2 * g;
            }
        }
        Ok(grad)
    }

    /// `(Δk)(x)` with the positive Laplacian `Δ = −Σ ∂²/∂x_j²`.
    pub fn laplacian_k(&self, x: &[f64]) -> Result<f64> {
        self.check_point(x)?;
        let mut lap = 0.0;
        for t in &self.momentum_terms {
            let g = t.gaussian(x);
            let s2 = t.width * t.width;
            let r2: f64 = x.iter().zip(&t.center).map(|(x, a)| (x - a) * (x - a)).sum();
            lap += (2.0 * self.dimension as f64 / s2 - 4.0 * r2 / (s2 * s2)) * g;
        }
        Ok(lap)
    }

    /// Embed the charge as `F(p) = ĥ(p) + i·ω(p)·k̂(p)` on the grid, with
    /// `f̂(p) = (2π)^{−d/2} ∫ f(x) e^{ip·x} dx`.
    pub fn to_onshell(&self, grid: &MomentumGrid, mode: TruncationMode) -> Result<OnShellData> {
        if grid.dimension() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, got: grid.dimension() });
        }
        if grid.dimension() == 1 && grid.mass() == 0.0 {
            return Err(Error::MasslessChiral);
        }
        let axis = grid.axis_nodes();
        let factors = |terms: &[GaussianTerm]| -> Vec<(f64, Vec<Vec<Complex64>>)> {
            terms
                .iter()
                .filter(|t| t.amplitude != 0.0)
                .map(|t| {
                    let per_axis = (0..self.dimension)
                        .map(|l| {
                            let a = t.center[l];
                            axis.iter()
                                .map(|&p| match (l, mode) {
                                    (0, TruncationMode::WedgeHalfSpace) => half_line_transform(a, t.width, p),
                                    _ => line_transform(a, t.width, p),
                                })
                                .collect()
                        })
                        .collect();
                    (t.amplitude, per_axis)
                })
                .collect()
        };
        let field = factors(&self.field_terms);
        let momentum = factors(&self.momentum_terms);
        let d = self.dimension;
        let mass = grid.mass();
        let samples = (0..grid.node_count())
            .into_par_iter()
            .map_init(
                || vec![0usize; d],
                |idx, flat| {
                    grid.multi_index(flat, idx);
                    let product = |(c, per_axis): &(f64, Vec<Vec<Complex64>>)| {
                        idx.iter().zip(per_axis).fold(Complex64::new(*c, 0.0), |acc, (&i, f)| acc * f[i])
                    };
                    let h: Complex64 = field.iter().map(product).sum();
                    if momentum.is_empty() {
                        return h;
                    }
                    let k: Complex64 = momentum.iter().map(product).sum();
                    let w = (idx.iter().map(|&i| axis[i] * axis[i]).sum::<f64>() + mass * mass).sqrt();
                    h + Complex64::new(0.0, w) * k
                },
            )
            .collect();
        OnShellData::new(*grid, samples)
    }
}

/// `(2π)^{−1/2} ∫ exp(−(x−a)²/σ²) e^{ipx} dx`.
pub fn line_transform(a: f64, sigma: f64, p: f64) -> Complex64 {
    let mag = sigma / std::f64::consts::SQRT_2 * (-0.25 * sigma * sigma * p * p).exp();
    Complex64::from_polar(mag, p * a)
}

/// `(2π)^{−1/2} ∫₀^∞ exp(−(x−a)²/σ²) e^{ipx} dx`.
pub fn half_line_transform(a: f64, sigma: f64, p: f64) -> Complex64 {
    if a > 0.0 {
        // full line minus the mirrored half, keeping erfcx in Re z ≥ 0
        return line_transform(a, sigma, p) - half_line_transform(-a, sigma, -p);
    }
    let z = Complex64::new(-a / sigma, -0.5 * p * sigma);
    let pref = 0.5 * sigma / std::f64::consts::SQRT_2 * (-(a * a) / (sigma * sigma)).exp();
    erfcx(z) * pref
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(c: f64, a: &[f64], s: f64) -> GaussianTerm {
        GaussianTerm::new(c, a.to_vec(), s).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let zero = TimeZeroCharge::zero(2);
        assert_eq!(zero.evaluate(Component::Field, &[0.3, -1.0]).unwrap(), 0.0);
        let one = TimeZeroCharge::field(1, vec![term(1.0, &[0.0], 1.0)]).unwrap();
        assert_eq!(one.evaluate(Component::Field, &[0.0]).unwrap(), 1.0);
        let two = TimeZeroCharge::field(2, vec![term(2.0, &[1.0, 0.0], 1.0)]).unwrap();
        let v = two.evaluate(Component::Field, &[0.0, 0.0]).unwrap();
        assert!((v - 0.735_758_882_342_884_6).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch() {
        let c = TimeZeroCharge::field(2, vec![term(1.0, &[0.0, 0.0], 1.0)]).unwrap();
        assert!(matches!(
            c.evaluate(Component::Field, &[0.0]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
        assert!(c.gradient_k(&[0.0, 0.0, 0.0]).is_err());
        assert!(c.laplacian_k(&[1.0]).is_err());
        assert!(TimeZeroCharge::field(1, vec![term(1.0, &[0.0, 0.0], 1.0)]).is_err());
        let g = MomentumGrid::new(1, 1.0, 4.0, 16).unwrap();
        assert!(c.to_onshell(&g, TruncationMode::Full).is_err());
    }

    #[test]
    fn invalid_terms_rejected() {
        assert!(GaussianTerm::new(1.0, vec![0.0], 0.0).is_err());
        assert!(GaussianTerm::new(f64::NAN, vec![0.0], 1.0).is_err());
        assert!(GaussianTerm::new(1.0, vec![f64::INFINITY], 1.0).is_err());
    }

    #[test]
    fn derivative_examples() {
        let k = TimeZeroCharge::momentum(2, vec![term(1.5, &[0.4, -0.2], 0.8)]).unwrap();
        let g = k.gradient_k(&[0.4, -0.2]).unwrap();
        assert!(g.iter().all(|v| v.abs() < 1e-15));

        let k = TimeZeroCharge::momentum(1, vec![term(1.0, &[0.0], 1.0)]).unwrap();
        assert!((k.laplacian_k(&[0.0]).unwrap() - 2.0).abs() < 1e-15);

        let c = 0.7;
        let k = TimeZeroCharge::momentum(1, vec![term(c, &[0.0], 1.0)]).unwrap();
        let g = k.gradient_k(&[1.0]).unwrap();
        assert!((g[0] + 2.0 * c * (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let k = TimeZeroCharge::momentum(
            2,
            vec![term(1.0, &[0.3, 0.1], 0.9), term(-0.6, &[-0.5, 0.7], 1.4)],
        )
        .unwrap();
        let x = [0.2, -0.35];
        let f = |x: &[f64]| k.evaluate(Component::Momentum, x).unwrap();
        let h = 1e-4;
        let grad = k.gradient_k(&x).unwrap();
        let mut lap = 0.0;
        for l in 0..2 {
            let mut xp = x;
            let mut xm = x;
            xp[l] += h;
            xm[l] -= h;
            let fd = (f(&xp) - f(&xm)) / (2.0 * h);
            assert!((fd - grad[l]).abs() < 1e-7);
            lap -= (f(&xp) - 2.0 * f(&x) + f(&xm)) / (h * h);
        }
        assert!((lap - k.laplacian_k(&x).unwrap()).abs() < 1e-5);
    }

    #[test]
    fn zero_charge_embeds_to_zero() {
        let g = MomentumGrid::new(2, 1.0, 6.0, 16).unwrap();
        for mode in [TruncationMode::Full, TruncationMode::WedgeHalfSpace] {
            let f = TimeZeroCharge::zero(2).to_onshell(&g, mode).unwrap();
            assert!(f.samples().iter().all(|s| s.norm() == 0.0));
        }
    }

    #[test]
    fn unit_gaussian_transform_is_real_even() {
        let g = MomentumGrid::new(1, 1.0, 12.0, 128).unwrap();
        let h = TimeZeroCharge::field(1, vec![term(1.0, &[0.0], 1.0)]).unwrap();
        let f = h.to_onshell(&g, TruncationMode::Full).unwrap();
        for (s, p) in f.samples().iter().zip(g.axis_nodes()) {
            let want = (-p * p / 4.0).exp() / std::f64::consts::SQRT_2;
            assert!((s.re - want).abs() < 1e-15);
            assert_eq!(s.im, 0.0);
        }
    }

    #[test]
    fn line_transform_matches_quadrature() {
        // direct midpoint quadrature of the defining integrals
        let (a, s) = (0.7, 1.3);
        for &p in &[0.0, 0.9, -2.4, 5.0] {
            let mut full = Complex64::new(0.0, 0.0);
            let mut half = Complex64::new(0.0, 0.0);
            let dx = 1e-3;
            for i in 0..40_000 {
                let x = -20.0 + (i as f64 + 0.5) * dx;
                let v = Complex64::from_polar((-(x - a) * (x - a) / (s * s)).exp(), p * x) * dx;
                full += v;
                if x > 0.0 {
                    half += v;
                }
            }
            let norm = (2.0 * std::f64::consts::PI).sqrt();
            assert!((line_transform(a, s, p) - full / norm).norm() < 1e-12);
            // half-line integrand jumps at 0, midpoint error is O(dx²)
            assert!((half_line_transform(a, s, p) - half / norm).norm() < 1e-6);
        }
    }

    #[test]
    fn half_line_transform_pieces_add_up() {
        for &(a, s, p) in &[(0.0, 1.0, 0.3), (2.0, 0.5, -7.0), (-1.5, 2.0, 11.0), (4.0, 1.0, 0.0)] {
            let sum = half_line_transform(a, s, p) + half_line_transform(-a, s, -p);
            assert!((sum - line_transform(a, s, p)).norm() < 1e-14);
        }
    }

    #[test]
    fn deep_interior_truncation_is_invisible() {
        let g = MomentumGrid::new(1, 1.0, 12.0, 256).unwrap();
        let h = TimeZeroCharge::field(1, vec![term(1.0, &[4.0], 1.0)]).unwrap();
        let full = h.to_onshell(&g, TruncationMode::Full).unwrap();
        let cut = h.to_onshell(&g, TruncationMode::WedgeHalfSpace).unwrap();
        for ((a, b), p) in full.samples().iter().zip(cut.samples()).zip(g.axis_nodes()) {
            if p.abs() <= 4.0 {
                assert!((a - b).norm() <= 1e-5 * a.norm(), "p={p}");
            }
        }
    }

    #[test]
    fn conjugate_symmetry_of_real_charges() {
        let g = MomentumGrid::new(2, 0.5, 8.0, 32).unwrap();
        let c = TimeZeroCharge::new(
            2,
            vec![term(1.0, &[0.3, -0.4], 0.9)],
            vec![term(-0.8, &[-0.2, 0.6], 1.1), term(0.5, &[1.0, 0.0], 0.6)],
        )
        .unwrap();
        let h = c.field_part();
        let k = c.momentum_part();
        assert_eq!(h.to_onshell(&g, TruncationMode::Full).unwrap().conjugate_symmetry_defect(), 0.0);
        assert_eq!(k.to_onshell(&g, TruncationMode::Full).unwrap().conjugate_antisymmetry_defect(), 0.0);
        assert!(h.to_onshell(&g, TruncationMode::WedgeHalfSpace).unwrap().conjugate_symmetry_defect() < 1e-10);
        assert!(k.to_onshell(&g, TruncationMode::WedgeHalfSpace).unwrap().conjugate_antisymmetry_defect() < 1e-10);
        // the sum of both has neither symmetry
        assert!(c.to_onshell(&g, TruncationMode::Full).unwrap().conjugate_symmetry_defect() > 0.1);
    }

    #[test]
    fn symplectic_pairing_of_field_and_momentum_data() {
        // 2·Im(F_h, iωk̂) with k = h is ∫h²
        use crate::momentum::symplectic_form;
        let terms = vec![term(1.0, &[0.4, -0.2], 0.9), term(-0.6, &[-0.5, 0.3], 0.6)];
        let g = MomentumGrid::new(2, 1.0, 12.0, 256).unwrap();
        let fh = TimeZeroCharge::field(2, terms.clone()).unwrap().to_onshell(&g, TruncationMode::Full).unwrap();
        let fk = TimeZeroCharge::momentum(2, terms.clone()).unwrap().to_onshell(&g, TruncationMode::Full).unwrap();
        let mut exact = 0.0;
        for a in &terms {
            for b in &terms {
                let (sa, sb) = (a.width * a.width, b.width * b.width);
                let d2: f64 = a.center.iter().zip(&b.center).map(|(x, y)| (x - y) * (x - y)).sum();
                exact += a.amplitude * b.amplitude * (-d2 / (sa + sb)).exp() * std::f64::consts::PI * sa * sb / (sa + sb);
            }
        }
        let got = 2.0 * symplectic_form(&fh, &fk).unwrap();
        assert!((got - exact).abs() < 1e-6 * exact.abs(), "{got} vs {exact}");
    }

    #[test]
    fn natural_mode_uses_six_widths() {
        let c = TimeZeroCharge::field(1, vec![term(1.0, &[6.0], 1.0)]).unwrap();
        assert_eq!(c.natural_mode(0.0), TruncationMode::Full);
        assert_eq!(c.natural_mode(0.5), TruncationMode::WedgeHalfSpace);
    }

    #[test]
    fn difference_and_shift() {
        let a = TimeZeroCharge::field(1, vec![term(1.0, &[2.0], 1.0)]).unwrap();
        let b = TimeZeroCharge::field(1, vec![term(1.0, &[3.0], 1.0)]).unwrap();
        let d = b.difference(&a).unwrap();
        let x = [2.4];
        let want = b.evaluate(Component::Field, &x).unwrap() - a.evaluate(Component::Field, &x).unwrap();
        assert!((d.evaluate(Component::Field, &x).unwrap() - want).abs() < 1e-15);
        let s = a.shifted_along_x1(0.5);
        assert_eq!(s.field_terms()[0].center, vec![1.5]);
        assert!(a.difference(&a.scaled(1.0)).unwrap().evaluate(Component::Field, &x).unwrap() == 0.0);
    }
}
