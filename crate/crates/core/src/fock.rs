//! One bosonic mode in a truncated number basis: thermal states,
//! displacements, and brute-force Araki relative entropy.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_CUTOFF: usize = 30;
/// Largest admissible `μ^{N+1}` trace deficit of the truncated thermal state.
pub const TRACE_DEFICIT_LIMIT: f64 = 1e-4;
const EIGENVALUE_FLOOR: f64 = 1e-300;

type CMatrix = DMatrix<Complex64>;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Density matrix on `span{|0⟩, …, |N⟩}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedFockState {
    cutoff: usize,
    matrix: CMatrix,
    trace_deficit: f64,
}

impl TruncatedFockState {
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Weight lost by truncation before renormalizing.
    pub fn trace_deficit(&self) -> f64 {
        self.trace_deficit
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint()).norm()
    }

    pub fn eigenvalues(&self) -> DVector<f64> {
        SymmetricEigen::new(hermitian_part(&self.matrix)).eigenvalues
    }

    /// `Tr ρN`.
    pub fn mean_number(&self) -> f64 {
        (0..=self.cutoff).map(|n| n as f64 * self.matrix[(n, n)].re).sum()
    }

    /// `−Tr ρ log ρ`.
    pub fn von_neumann_entropy(&self) -> f64 {
        -self.eigenvalues().iter().filter(|&&l| l > 0.0).map(|&l| l * l.ln()).sum::<f64>()
    }
}

fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * c(0.5)
}

fn check_cutoff(cutoff: usize) -> Result<()> {
    if cutoff < 2 {
        return Err(Error::InvalidArgument(format!("Fock cutoff must be >= 2, got {cutoff}")));
    }
    Ok(())
}

/// `(1−μ)μⁿ` for `n ≤ N`, renormalized to unit trace.
pub fn thermal_state(mu: f64, cutoff: usize) -> Result<TruncatedFockState> {
    check_cutoff(cutoff)?;
    if !(0.0..1.0).contains(&mu) {
        return Err(Error::InvalidArgument(format!("thermal parameter must lie in [0, 1), got {mu}")));
    }
    let trace_deficit = mu.powi(cutoff as i32 + 1);
    let norm = 1.0 - trace_deficit;
    let diag = DVector::from_fn(cutoff + 1, |n, _| c((1.0 - mu) * mu.powi(n as i32) / norm));
    Ok(TruncatedFockState { cutoff, matrix: CMatrix::from_diagonal(&diag), trace_deficit })
}

/// `exp(αa† − ᾱa)` in the truncated basis, with `‖D†D − 1‖`.
pub fn displacement_matrix(alpha: Complex64, cutoff: usize) -> Result<(CMatrix, f64)> {
    check_cutoff(cutoff)?;
    let dim = cutoff + 1;
    // i(αa† − ᾱa) is Hermitian
    let mut h = CMatrix::zeros(dim, dim);
    for n in 0..cutoff {
        let s = ((n + 1) as f64).sqrt();
        h[(n + 1, n)] = Complex64::i() * alpha * s;
        h[(n, n + 1)] = -Complex64::i() * alpha.conj() * s;
    }
    let eig = SymmetricEigen::new(h);
    let phases = eig.eigenvalues.map(|e| Complex64::new(0.0, -e).exp());
    let d = &eig.eigenvectors * CMatrix::from_diagonal(&phases) * eig.eigenvectors.adjoint();
    let deficit = (d.adjoint() * &d - CMatrix::identity(dim, dim)).norm();
    Ok((d, deficit))
}

/// `S(DρD† ‖ ρ) = Tr ρ_α(log ρ_α − log ρ)` for the truncated thermal `ρ`.
pub fn displaced_thermal_relative_entropy(mu: f64, alpha: Complex64, cutoff: usize) -> Result<f64> {
    let rho = thermal_state(mu, cutoff)?;
    if rho.trace_deficit > TRACE_DEFICIT_LIMIT {
        return Err(Error::TruncationDeficit { deficit: rho.trace_deficit, limit: TRACE_DEFICIT_LIMIT });
    }
    if alpha == Complex64::new(0.0, 0.0) {
        return Ok(0.0);
    }
    let (d, _) = displacement_matrix(alpha, cutoff)?;
    let rho_alpha = hermitian_part(&(&d * rho.matrix() * d.adjoint()));
    let own: f64 = SymmetricEigen::new(rho_alpha.clone())
        .eigenvalues
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| l * l.max(EIGENVALUE_FLOOR).ln())
        .sum();
    let cross: f64 =
        (0..=cutoff).map(|n| rho_alpha[(n, n)].re * rho.matrix[(n, n)].re.max(EIGENVALUE_FLOOR).ln()).sum();
    Ok(own - cross)
}

/// Displacement of the thermal mode induced by `h = (z, √λ·z̄)`.
pub fn bogoliubov_displacement(lambda: f64, z: Complex64) -> Complex64 {
    z * (1.0 - lambda).sqrt()
}

/// Araki relative entropy between the coherent state of `h = (z, √λ·z̄)` and
/// the vacuum, on the algebra of the subspace with modular spectrum
/// `{λ, 1/λ}`, computed on the reduced thermal mode with `μ = λ`.
pub fn coherent_araki_entropy(lambda: f64, z: Complex64, cutoff: usize) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::InvalidArgument(format!("modular eigenvalue must lie in (0, 1), got {lambda}")));
    }
    displaced_thermal_relative_entropy(lambda, bogoliubov_displacement(lambda, z), cutoff)
}
