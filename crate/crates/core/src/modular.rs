//! Tomita–Takesaki theory of standard subspaces of `ℂⁿ`, in real coordinates.
//!
//! A vector of `ℂⁿ` is stored as `(Re, Im) ∈ ℝ²ⁿ` and multiplication by `i`
//! is the matrix `Jc(x, y) = (−y, x)`. Antilinear maps are real matrices
//! anticommuting with `Jc`; the complex adjoint of an antilinear map is its
//! real transpose.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};

/// Above this condition number `K + JcK` is treated as not spanning.
pub const STANDARDNESS_LIMIT: f64 = 1e8;
/// Tolerance on `h ∈ K` and on the imaginary part of the entropy.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-10;

/// `ℂⁿ` as `ℝ²ⁿ` with its complex structure.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexStructureSpace {
    n: usize,
    jc: DMatrix<f64>,
}

impl ComplexStructureSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("complex dimension must be >= 1".into()));
        }
        let mut jc = DMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            jc[(i, n + i)] = -1.0;
            jc[(n + i, i)] = 1.0;
        }
        Ok(Self { n, jc })
    }

    pub fn complex_dimension(&self) -> usize {
        self.n
    }

    pub fn real_dimension(&self) -> usize {
        2 * self.n
    }

    pub fn jc(&self) -> &DMatrix<f64> {
        &self.jc
    }

    /// `⟨x, y⟩ = x·y + i(Jc x)·y`, antilinear in `x`.
    pub fn inner(&self, x: &DVector<f64>, y: &DVector<f64>) -> Complex64 {
        Complex64::new(x.dot(y), (&self.jc * x).dot(y))
    }

    /// Real coordinates of a complex vector.
    pub fn embed(&self, z: &[Complex64]) -> Result<DVector<f64>> {
        if z.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: z.len() });
        }
        Ok(DVector::from_iterator(2 * self.n, z.iter().map(|c| c.re).chain(z.iter().map(|c| c.im))))
    }

    /// Real `2n×2n` form of a complex `n×n` matrix; commutes with `Jc`.
    pub fn realify(&self, u: &DMatrix<Complex64>) -> Result<DMatrix<f64>> {
        let n = self.n;
        if u.shape() != (n, n) {
            return Err(Error::DimensionMismatch { expected: n, got: u.nrows() });
        }
        let mut r = DMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let c = u[(i, j)];
                r[(i, j)] = c.re;
                r[(i, n + j)] = -c.im;
                r[(n + i, j)] = c.im;
                r[(n + i, n + j)] = c.re;
            }
        }
        Ok(r)
    }

    /// `‖Jc² + 1‖` and `‖JcᵀJc − 1‖`.
    pub fn structure_defect(&self) -> f64 {
        let id = DMatrix::<f64>::identity(2 * self.n, 2 * self.n);
        let a = (&self.jc * &self.jc + &id).norm();
        let b = (self.jc.transpose() * &self.jc - &id).norm();
        a.max(b)
    }
}

/// A real subspace `K ⊂ ℂⁿ` of real dimension `n` with `K ∩ iK = 0` and
/// `K + iK = ℂⁿ`.
#[derive(Debug, Clone)]
pub struct FiniteStandardSubspace {
    space: ComplexStructureSpace,
    basis: DMatrix<f64>,
    condition: f64,
}

impl FiniteStandardSubspace {
    /// Orthonormalizes the columns of `spanning` (a `2n×n` matrix) and checks
    /// standardness.
    pub fn new(space: ComplexStructureSpace, spanning: DMatrix<f64>) -> Result<Self> {
        let (rows, cols) = spanning.shape();
        if rows != space.real_dimension() {
            return Err(Error::DimensionMismatch { expected: space.real_dimension(), got: rows });
        }
        if cols != space.complex_dimension() {
            return Err(Error::DimensionMismatch { expected: space.complex_dimension(), got: cols });
        }
        let basis = spanning.qr().q();
        let condition = condition_number(&pair_matrix(&space, &basis));
        if condition.is_nan() || condition > STANDARDNESS_LIMIT {
            return Err(Error::NotStandard(condition));
        }
        Ok(Self { space, basis, condition })
    }

    pub fn space(&self) -> &ComplexStructureSpace {
        &self.space
    }

    /// Orthonormal columns spanning `K`.
    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    /// Condition number of `[B | Jc·B]`.
    pub fn condition_number(&self) -> f64 {
        self.condition
    }

    /// `‖h − P_K h‖`.
    pub fn projection_residual(&self, h: &DVector<f64>) -> f64 {
        let coeffs = self.basis.transpose() * h;
        (h - &self.basis * coeffs).norm()
    }

    /// `U·K` for a real matrix `U` commuting with `Jc`.
    pub fn transformed(&self, u: &DMatrix<f64>) -> Result<Self> {
        Self::new(self.space.clone(), u * &self.basis)
    }
}

fn pair_matrix(space: &ComplexStructureSpace, basis: &DMatrix<f64>) -> DMatrix<f64> {
    let jb = space.jc() * basis;
    let n = basis.ncols();
    let mut m = DMatrix::zeros(basis.nrows(), 2 * n);
    m.columns_mut(0, n).copy_from(basis);
    m.columns_mut(n, n).copy_from(&jb);
    m
}

fn condition_number(m: &DMatrix<f64>) -> f64 {
    let sv = m.singular_values();
    let max = sv.max();
    let min = sv.min();
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// `S(h + ik) = h − ik` on `K + iK`, as a real matrix.
pub fn tomita_operator(k: &FiniteStandardSubspace) -> Result<DMatrix<f64>> {
    let n = k.space.complex_dimension();
    let m = pair_matrix(&k.space, &k.basis);
    let inv = m.clone().try_inverse().ok_or(Error::NotStandard(f64::INFINITY))?;
    let mut sign = DMatrix::<f64>::identity(2 * n, 2 * n);
    for i in n..2 * n {
        sign[(i, i)] = -1.0;
    }
    Ok(m * sign * inv)
}

/// Tomita operator with its polar decomposition `S = JΔ^{1/2}`.
#[derive(Debug, Clone)]
pub struct ModularData {
    pub s: DMatrix<f64>,
    pub delta: DMatrix<f64>,
    pub j: DMatrix<f64>,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<f64>,
}

/// Residuals of the Tomita relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TomitaResiduals {
    /// `‖S² − 1‖`.
    pub involution: f64,
    /// `‖SJc + JcS‖`.
    pub antilinear: f64,
    /// `‖ΔJc − JcΔ‖`.
    pub delta_commutes: f64,
    /// `‖JΔJ − Δ⁻¹‖ / ‖Δ⁻¹‖`, relative because `‖Δ⁻¹‖` grows with the
    /// spread of the modular spectrum.
    pub conjugation: f64,
    /// `‖S − JΔ^{1/2}‖`.
    pub polar: f64,
    /// `‖J² − 1‖`.
    pub j_involution: f64,
}

impl TomitaResiduals {
    pub fn max(&self) -> f64 {
        [self.involution, self.antilinear, self.delta_commutes, self.conjugation, self.polar, self.j_involution]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

impl ModularData {
    /// Spectrum of `Δ` in ascending order (each complex eigenvalue appears
    /// twice).
    pub fn spectrum(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.eigenvalues.iter().copied().collect();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn condition_number(&self) -> f64 {
        self.eigenvalues.max() / self.eigenvalues.min()
    }

    fn spectral(&self, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
        let d = DMatrix::from_diagonal(&self.eigenvalues.map(f));
        &self.eigenvectors * d * self.eigenvectors.transpose()
    }

    pub fn log_delta(&self) -> DMatrix<f64> {
        self.spectral(f64::ln)
    }

    pub fn residuals(&self, space: &ComplexStructureSpace) -> TomitaResiduals {
        let dim = space.real_dimension();
        let id = DMatrix::<f64>::identity(dim, dim);
        let jc = space.jc();
        let delta_inv = self.spectral(|x| 1.0 / x);
        let sqrt_delta = self.spectral(f64::sqrt);
        TomitaResiduals {
            involution: (&self.s * &self.s - &id).norm(),
            antilinear: (&self.s * jc + jc * &self.s).norm(),
            delta_commutes: (&self.delta * jc - jc * &self.delta).norm(),
            conjugation: (&self.j * &self.delta * &self.j - &delta_inv).norm() / delta_inv.norm(),
            polar: (&self.s - &self.j * sqrt_delta).norm(),
            j_involution: (&self.j * &self.j - &id).norm(),
        }
    }
}

/// `Δ = SᵀS`, `J = SΔ^{-1/2}`.
pub fn modular_operator(k: &FiniteStandardSubspace) -> Result<ModularData> {
    let s = tomita_operator(k)?;
    modular_data_from_tomita(s)
}

pub fn modular_data_from_tomita(s: DMatrix<f64>) -> Result<ModularData> {
    let delta = s.transpose() * &s;
    let sym = (&delta + delta.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let (min, max) = (eig.eigenvalues.min(), eig.eigenvalues.max());
    if min.is_nan() || min <= 0.0 || max / min > 1e16 {
        return Err(Error::SingularModular(if min > 0.0 { max / min } else { f64::INFINITY }));
    }
    let inv_sqrt = &eig.eigenvectors * DMatrix::from_diagonal(&eig.eigenvalues.map(|x| 1.0 / x.sqrt())) * eig.eigenvectors.transpose();
    let j = &s * inv_sqrt;
    Ok(ModularData { s, delta, j, eigenvalues: eig.eigenvalues, eigenvectors: eig.eigenvectors })
}

/// `S_h = −⟨h, log Δ h⟩` for `h ∈ K`.
pub fn vector_entropy(k: &FiniteStandardSubspace, h: &DVector<f64>) -> Result<f64> {
    let data = modular_operator(k)?;
    vector_entropy_with(k, &data, h)
}

/// As [`vector_entropy`] with precomputed modular data of `k`.
pub fn vector_entropy_with(k: &FiniteStandardSubspace, data: &ModularData, h: &DVector<f64>) -> Result<f64> {
    let dim = k.space.real_dimension();
    if h.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: h.len() });
    }
    let scale = h.norm().max(1.0);
    let residual = k.projection_residual(h);
    if residual > MEMBERSHIP_TOLERANCE * scale {
        return Err(Error::NotInSubspace(residual));
    }
    let lh = data.log_delta() * h;
    let value = k.space.inner(h, &lh);
    let accuracy = MEMBERSHIP_TOLERANCE.max(64.0 * f64::EPSILON * data.condition_number());
    if value.im.abs() > accuracy * (h.norm() * lh.norm()).max(1.0) {
        return Err(Error::ComplexEntropy(value.im));
    }
    Ok(0.0 - value.re)
}

/// The subspace whose modular operator is `diag(λⱼ, 1/λⱼ)` on the pair
/// `(u_{2j}, u_{2j+1})`, with `J(u₁, u₂) = (ū₂, ū₁)`:
/// `K = span_ℝ{(z, √λ·z̄)}` per pair. `n = 2·len(lambdas)`.
pub fn subspace_from_modular_data(lambdas: &[f64]) -> Result<FiniteStandardSubspace> {
    if lambdas.is_empty() {
        return Err(Error::InvalidArgument("need at least one modular eigenvalue".into()));
    }
    if let Some(l) = lambdas.iter().find(|l| !(**l > 0.0 && **l < 1.0)) {
        return Err(Error::InvalidArgument(format!("modular eigenvalue must lie in (0, 1), got {l}")));
    }
    let n = 2 * lambdas.len();
    let space = ComplexStructureSpace::new(n)?;
    let mut b = DMatrix::zeros(2 * n, n);
    for (j, &l) in lambdas.iter().enumerate() {
        let r = l.sqrt();
        let norm = (1.0 + l).sqrt();
        b[(2 * j, 2 * j)] = 1.0 / norm;
        b[(2 * j + 1, 2 * j)] = r / norm;
        b[(n + 2 * j, 2 * j + 1)] = 1.0 / norm;
        b[(n + 2 * j + 1, 2 * j + 1)] = -r / norm;
    }
    FiniteStandardSubspace::new(space, b)
}

/// `(z_j, √λ_j·z̄_j)` on each pair, in real coordinates.
pub fn paired_vector(lambdas: &[f64], zs: &[Complex64]) -> Result<DVector<f64>> {
    if lambdas.len() != zs.len() {
        return Err(Error::DimensionMismatch { expected: lambdas.len(), got: zs.len() });
    }
    let mut u = Vec::with_capacity(2 * zs.len());
    for (&l, &z) in lambdas.iter().zip(zs) {
        u.push(z);
        u.push(l.sqrt() * z.conj());
    }
    ComplexStructureSpace::new(u.len())?.embed(&u)
}

/// `(1 − λ)(−log λ)|z|²`.
pub fn paired_entropy_closed_form(lambda: f64, z: Complex64) -> f64 {
    (1.0 - lambda) * (-lambda.ln()) * z.norm_sqr()
}

fn gaussian_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| StandardNormal.sample(rng))
}

/// A subspace spanned by `n` Gaussian random real vectors (standard with
/// probability one; redrawn until the condition number is below 1e6).
pub fn random_standard_subspace(n: usize, seed: u64) -> Result<FiniteStandardSubspace> {
    let space = ComplexStructureSpace::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let b = gaussian_matrix(&mut rng, 2 * n, n);
        match FiniteStandardSubspace::new(space.clone(), b) {
            Ok(k) if k.condition_number() < 1e6 => return Ok(k),
            Ok(_) | Err(Error::NotStandard(_)) => continue,
            Err(e) => return Err(e),
        }
    }
}

/// Random vector of `K` with standard normal coefficients in the basis.
pub fn random_vector_in(k: &FiniteStandardSubspace, seed: u64) -> DVector<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = gaussian_matrix(&mut rng, k.basis.ncols(), 1);
    &k.basis * c.column(0)
}

/// Haar-like random unitary of `ℂⁿ` in real form.
pub fn random_unitary(space: &ComplexStructureSpace, seed: u64) -> DMatrix<f64> {
    let n = space.complex_dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let re = gaussian_matrix(&mut rng, n, n);
    let im = gaussian_matrix(&mut rng, n, n);
    let z = DMatrix::from_fn(n, n, |i, j| Complex64::new(re[(i, j)], im[(i, j)]));
    let q = z.qr().q();
    space.realify(&q).expect("square matrix of matching size")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antilinear_2x2(a: f64, b: f64) -> DMatrix<f64> {
        // general real 2×2 anticommuting with [[0,-1],[1,0]]
        DMatrix::from_row_slice(2, 2, &[a, b, b, -a])
    }

    #[test]
    fn complex_structure() {
        let s = ComplexStructureSpace::new(3).unwrap();
        assert_eq!(s.structure_defect(), 0.0);
        let x = DVector::from_vec(vec![1.0, 0.5, -2.0, 0.3, 0.0, 1.0]);
        let y = DVector::from_vec(vec![0.2, -1.0, 0.7, 1.5, -0.4, 0.1]);
        let ix = s.jc() * &x;
        // antilinear in the first slot, linear in the second
        let lhs = s.inner(&ix, &y);
        assert!((lhs - Complex64::new(0.0, -1.0) * s.inner(&x, &y)).norm() < 1e-14);
        let rhs = s.inner(&x, &(s.jc() * &y));
        assert!((rhs - Complex64::new(0.0, 1.0) * s.inner(&x, &y)).norm() < 1e-14);
        assert!((s.inner(&x, &y) - s.inner(&y, &x).conj()).norm() < 1e-15);
        assert!(ComplexStructureSpace::new(0).is_err());
    }

    #[test]
    fn antilinear_adjoint_is_transpose() {
        let s = ComplexStructureSpace::new(1).unwrap();
        for &(a, b) in &[(1.0, 0.0), (0.3, -1.2), (2.0, 0.7)] {
            let t = antilinear_2x2(a, b);
            assert!((&t * s.jc() + s.jc() * &t).norm() < 1e-15);
            let tt = t.transpose();
            assert!((&tt * s.jc() + s.jc() * &tt).norm() < 1e-15);
            for &(x0, x1, y0, y1) in &[(1.0, 0.0, 0.0, 1.0), (0.4, -0.9, 1.3, 0.2)] {
                let x = DVector::from_vec(vec![x0, x1]);
                let y = DVector::from_vec(vec![y0, y1]);
                // ⟨x, Ty⟩ = ⟨y, Tᵀx⟩ for antilinear T
                let lhs = s.inner(&x, &(&t * &y));
                let rhs = s.inner(&y, &(&tt * &x));
                assert!((lhs - rhs).norm() < 1e-14);
            }
            // TᵀT is complex linear and positive
            let p = &tt * &t;
            assert!((&p * s.jc() - s.jc() * &p).norm() < 1e-14);
        }
    }

    #[test]
    fn canonical_real_subspace() {
        let space = ComplexStructureSpace::new(3).unwrap();
        let mut b = DMatrix::zeros(6, 3);
        for i in 0..3 {
            b[(i, i)] = 1.0;
        }
        let k = FiniteStandardSubspace::new(space, b).unwrap();
        let data = modular_operator(&k).unwrap();
        let conj = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 1.0, 1.0, -1.0, -1.0, -1.0]));
        assert!((&data.s - &conj).norm() < 1e-14);
        assert!((&data.delta - DMatrix::identity(6, 6)).norm() < 1e-14);
        assert!((&data.j - &conj).norm() < 1e-14);
        let h = DVector::from_vec(vec![1.0, 2.0, 3.0, 0.0, 0.0, 0.0]);
        assert!(vector_entropy(&k, &h).unwrap().abs() < 1e-14);
    }

    #[test]
    fn rejects_non_standard() {
        let space = ComplexStructureSpace::new(2).unwrap();
        // K = span{e0, Jc e0}: K ∩ iK ≠ 0
        let mut b = DMatrix::zeros(4, 2);
        b[(0, 0)] = 1.0;
        b[(2, 1)] = 1.0;
        assert!(matches!(FiniteStandardSubspace::new(space.clone(), b), Err(Error::NotStandard(_))));
        assert!(FiniteStandardSubspace::new(space, DMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn squeezed_pair_spectrum() {
        let k = subspace_from_modular_data(&[0.25]).unwrap();
        let data = modular_operator(&k).unwrap();
        let spectrum = data.spectrum();
        for (got, want) in spectrum.iter().zip([0.25, 0.25, 4.0, 4.0]) {
            assert!((got - want).abs() < 1e-12 * want);
        }
        let logs: Vec<f64> = spectrum.iter().map(|x| x.ln()).collect();
        assert!((logs[0] + 4f64.ln()).abs() < 1e-12 && (logs[3] - 4f64.ln()).abs() < 1e-12);

        let k = subspace_from_modular_data(&[0.5, 0.1]).unwrap();
        assert_eq!(k.space().complex_dimension(), 4);
        let spectrum = modular_operator(&k).unwrap().spectrum();
        let want = [0.1, 0.1, 0.5, 0.5, 2.0, 2.0, 10.0, 10.0];
        for (got, want) in spectrum.iter().zip(want) {
            assert!((got - want).abs() < 1e-10 * want);
        }
    }

    #[test]
    fn squeezed_pair_conjugation_swaps_and_conjugates() {
        let k = subspace_from_modular_data(&[0.3]).unwrap();
        let data = modular_operator(&k).unwrap();
        let space = ComplexStructureSpace::new(2).unwrap();
        let u = [Complex64::new(0.4, -1.1), Complex64::new(2.0, 0.5)];
        let ju = &data.j * space.embed(&u).unwrap();
        let want = space.embed(&[u[1].conj(), u[0].conj()]).unwrap();
        assert!((ju - want).norm() < 1e-12);
    }

    #[test]
    fn squeezed_entropy_example() {
        let k = subspace_from_modular_data(&[0.25]).unwrap();
        let h = paired_vector(&[0.25], &[Complex64::new(1.0, 0.0)]).unwrap();
        let s = vector_entropy(&k, &h).unwrap();
        assert!((s - 0.75 * 4f64.ln()).abs() < 1e-12);
        assert!((s - 1.039_720_770_839_917_9).abs() < 1e-12);
        let s2 = vector_entropy(&k, &(&h * 2.0)).unwrap();
        assert!((s2 - 4.0 * s).abs() < 1e-12);
        assert_eq!(vector_entropy(&k, &DVector::zeros(4)).unwrap(), 0.0);
    }

    #[test]
    fn entropy_requires_membership() {
        let k = subspace_from_modular_data(&[0.25]).unwrap();
        let h = DVector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(vector_entropy(&k, &h), Err(Error::NotInSubspace(_))));
        assert!(vector_entropy(&k, &DVector::zeros(3)).is_err());
    }

    #[test]
    fn lambda_range_checked() {
        assert!(subspace_from_modular_data(&[]).is_err());
        assert!(subspace_from_modular_data(&[0.0]).is_err());
        assert!(subspace_from_modular_data(&[1.0]).is_err());
        assert!(subspace_from_modular_data(&[0.5, 1.5]).is_err());
    }

    #[test]
    fn tomita_fixes_basis_and_negates_its_image() {
        let k = random_standard_subspace(3, 7).unwrap();
        let s = tomita_operator(&k).unwrap();
        let b = k.basis();
        assert!((&s * b - b).norm() < 1e-10);
        let jb = k.space().jc() * b;
        assert!((&s * &jb + &jb).norm() < 1e-10);
    }

    #[test]
    fn random_subspaces_satisfy_tomita_relations() {
        for seed in 0..20 {
            let n = 1 + (seed as usize % 4);
            let k = random_standard_subspace(n, seed).unwrap();
            let data = modular_operator(&k).unwrap();
            let r = data.residuals(k.space());
            assert!(r.max() < 1e-8, "seed {seed}: {r:?}");
        }
    }

    #[test]
    fn random_unitary_is_complex_linear_and_orthogonal() {
        let space = ComplexStructureSpace::new(3).unwrap();
        let u = random_unitary(&space, 11);
        assert!((&u * space.jc() - space.jc() * &u).norm() < 1e-12);
        assert!((u.transpose() * &u - DMatrix::identity(6, 6)).norm() < 1e-12);
    }

    #[test]
    fn unitary_covariance() {
        for seed in 0..5 {
            let k = random_standard_subspace(3, seed).unwrap();
            let h = random_vector_in(&k, 100 + seed);
            let u = random_unitary(k.space(), 200 + seed);
            let uk = k.transformed(&u).unwrap();
            let a = vector_entropy(&k, &h).unwrap();
            let b = vector_entropy(&uk, &(&u * &h)).unwrap();
            assert!((a - b).abs() < 1e-10 * a.max(1.0), "seed {seed}: {a} vs {b}");
        }
    }

    #[test]
    fn seeded_construction_is_deterministic() {
        let a = random_standard_subspace(2, 42).unwrap();
        let b = random_standard_subspace(2, 42).unwrap();
        assert_eq!(a.basis(), b.basis());
    }
}
