//! Brute-force verification path on truncated Fock spaces.
//!
//! Builds the full Hamiltonian on (system) x (product of truncated
//! oscillator spaces), diagonalizes it as a generic Hermitian matrix, and
//! evolves the complete density matrix before partial-tracing back down.
//! The block structure induced by the conserved coupling operator is
//! deliberately not exploited; independence from the analytic solution is
//! the whole point of this module.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use thiserror::Error;

use crate::model::{BathSpec, DensityMatrix2, InteractionSpec, ModelError};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("total Hilbert dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("cutoff dimension {0} is below the minimum of 2")]
    CutoffTooSmall(usize),
    #[error("{got} cutoffs supplied for {expected} bath modes")]
    CutoffCountMismatch { got: usize, expected: usize },
}

/// Default bound on the total Hilbert-space dimension.
pub const DEFAULT_DIM_CAP: usize = 4096;

/// Per-mode Fock truncation dimensions, with a cap on the total
/// Hilbert-space dimension (system dimension times the product of the
/// per-mode dimensions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockCutoffs {
    dims: Vec<usize>,
    cap: usize,
}

impl FockCutoffs {
    pub fn new(dims: Vec<usize>) -> Result<Self, OracleError> {
        Self::with_cap(dims, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(dims: Vec<usize>, cap: usize) -> Result<Self, OracleError> {
        for &d in &dims {
            if d < 2 {
                return Err(OracleError::CutoffTooSmall(d));
            }
        }
        let out = Self { dims, cap };
        let dim = 4 * out.env_dim();
        if dim > cap {
            return Err(OracleError::DimensionCap { dim, cap });
        }
        Ok(out)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn env_dim(&self) -> usize {
        self.dims.iter().product()
    }
}

/// Heuristic cutoff from the displaced-oscillator amplitude:
/// `d = 10 + 20 (g/w)^2 (1 + 2 nbar)`, clamped so the total dimension
/// stays within the cap.
pub fn default_cutoff(omega: f64, g: f64, nbar: f64) -> usize {
    (10.0 + 20.0 * (g / omega).powi(2) * (1.0 + 2.0 * nbar)).ceil() as usize
}

/// Initial environment state.
#[derive(Debug, Clone, PartialEq)]
pub enum BathState {
    Vacuum,
    /// Exact truncated Boltzmann diagonal mixture, one `nbar` per mode,
    /// renormalized after truncation.
    ThermalDiagonal(Vec<f64>),
}

fn annihilation(d: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(d, d, |r, c| {
        if c == r + 1 {
            Complex64::new((c as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

fn identity(d: usize) -> DMatrix<Complex64> {
    DMatrix::identity(d, d)
}

/// Embed a single-mode operator at position `index` in the product space.
fn embed(op: &DMatrix<Complex64>, dims: &[usize], index: usize) -> DMatrix<Complex64> {
    let mut out = DMatrix::identity(1, 1);
    for (k, &d) in dims.iter().enumerate() {
        let factor = if k == index { op.clone() } else { identity(d) };
        out = out.kronecker(&factor);
    }
    out
}

/// Bath Hamiltonian `sum_i omega_i (n_i + 1/2)` on the product space.
pub fn bath_hamiltonian(bath: &BathSpec, cutoffs: &FockCutoffs) -> DMatrix<Complex64> {
    let dims = cutoffs.dims();
    let mut h = DMatrix::zeros(cutoffs.env_dim(), cutoffs.env_dim());
    for (i, mode) in bath.modes().iter().enumerate() {
        let d = dims[i];
        let number = DMatrix::from_fn(d, d, |r, c| {
            if r == c {
                Complex64::new(mode.omega * (r as f64 + 0.5), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        h += embed(&number, dims, i);
    }
    h
}

/// Position-coupling operator `sum_i g_i (b_i + b_i^dag)`.
fn coupling_field(bath: &BathSpec, cutoffs: &FockCutoffs) -> DMatrix<Complex64> {
    let dims = cutoffs.dims();
    let mut x = DMatrix::zeros(cutoffs.env_dim(), cutoffs.env_dim());
    for (i, mode) in bath.modes().iter().enumerate() {
        let b = annihilation(dims[i]);
        let quad = (&b + b.adjoint()) * Complex64::new(mode.g, 0.0);
        x += embed(&quad, dims, i);
    }
    x
}

fn check_dims(bath: &BathSpec, cutoffs: &FockCutoffs) -> Result<(), OracleError> {
    if cutoffs.dims().len() != bath.modes().len() {
        return Err(OracleError::CutoffCountMismatch {
            got: cutoffs.dims().len(),
            expected: bath.modes().len(),
        });
    }
    Ok(())
}

/// Full Hamiltonian `I_4 (x) H_E + A_T (x) sum_i g_i (b_i + b_i^dag)`.
pub fn build_hamiltonian(
    interaction: &InteractionSpec,
    bath: &BathSpec,
    cutoffs: &FockCutoffs,
) -> Result<DMatrix<Complex64>, OracleError> {
    check_dims(bath, cutoffs)?;
    let v = interaction.eigenvectors();
    let alphas = interaction.alphas();
    let diag = nalgebra::Matrix4::from_diagonal(&nalgebra::Vector4::new(
        Complex64::from(alphas[0]),
        Complex64::from(alphas[1]),
        Complex64::from(alphas[2]),
        Complex64::from(alphas[3]),
    ));
    let a_t = v * diag * v.adjoint();
    let a_t = DMatrix::from_fn(4, 4, |r, c| a_t[(r, c)]);
    let he = bath_hamiltonian(bath, cutoffs);
    let x = coupling_field(bath, cutoffs);
    Ok(identity(4).kronecker(&he) + a_t.kronecker(&x))
}

/// Diagonal environment density matrix for the requested bath state.
pub fn environment_state(
    bath_state: &BathState,
    cutoffs: &FockCutoffs,
) -> DMatrix<Complex64> {
    let dims = cutoffs.dims();
    let mut rho = DMatrix::identity(1, 1);
    for (i, &d) in dims.iter().enumerate() {
        let mut weights = vec![0.0; d];
        match bath_state {
            BathState::Vacuum => weights[0] = 1.0,
            BathState::ThermalDiagonal(nbars) => {
                let nbar = nbars[i];
                if nbar == 0.0 {
                    weights[0] = 1.0;
                } else {
                    let x = nbar / (1.0 + nbar);
                    let mut w = 1.0;
                    for slot in weights.iter_mut() {
                        *slot = w;
                        w *= x;
                    }
                    let total: f64 = weights.iter().sum();
                    for slot in weights.iter_mut() {
                        *slot /= total;
                    }
                }
            }
        }
        let diag = DMatrix::from_fn(d, d, |r, c| {
            if r == c {
                Complex64::new(weights[r], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        rho = rho.kronecker(&diag);
    }
    rho
}

/// Trace out the trailing factor of dimension `env_dim`.
pub fn partial_trace_env(rho: &DMatrix<Complex64>, env_dim: usize) -> DMatrix<Complex64> {
    let sys = rho.nrows() / env_dim;
    DMatrix::from_fn(sys, sys, |a, b| {
        (0..env_dim).map(|e| rho[(a * env_dim + e, b * env_dim + e)]).sum()
    })
}

/// A Hermitian eigendecomposition of the full Hamiltonian, reusable
/// across evolution times and initial states.
pub struct FockOracle {
    sys_dim: usize,
    env_dim: usize,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl FockOracle {
    fn from_hamiltonian(h: DMatrix<Complex64>, sys_dim: usize, env_dim: usize) -> Self {
        let eig = SymmetricEigen::new(h);
        Self { sys_dim, env_dim, eigenvalues: eig.eigenvalues, eigenvectors: eig.eigenvectors }
    }

    /// Oracle for the full two-qubit system.
    pub fn new(
        interaction: &InteractionSpec,
        bath: &BathSpec,
        cutoffs: &FockCutoffs,
    ) -> Result<Self, OracleError> {
        let h = build_hamiltonian(interaction, bath, cutoffs)?;
        Ok(Self::from_hamiltonian(h, 4, cutoffs.env_dim()))
    }

    /// Oracle for a two-level test system with diagonal coupling
    /// `diag(alpha_i, alpha_j)`; used to extract decoherence factors.
    pub fn new_two_level(
        bath: &BathSpec,
        alpha_i: f64,
        alpha_j: f64,
        cutoffs: &FockCutoffs,
    ) -> Result<Self, OracleError> {
        check_dims(bath, cutoffs)?;
        let env_dim = cutoffs.env_dim();
        let he = bath_hamiltonian(bath, cutoffs);
        let x = coupling_field(bath, cutoffs);
        let a = DMatrix::from_fn(2, 2, |r, c| {
            if r == c {
                Complex64::from(if r == 0 { alpha_i } else { alpha_j })
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let h = identity(2).kronecker(&he) + a.kronecker(&x);
        Ok(Self::from_hamiltonian(h, 2, env_dim))
    }

    pub fn propagator(&self, t: f64) -> DMatrix<Complex64> {
        let phases = DVector::from_fn(self.eigenvalues.len(), |k, _| {
            Complex64::from_polar(1.0, -self.eigenvalues[k] * t)
        });
        let mut scaled = self.eigenvectors.clone();
        for (k, mut col) in scaled.column_iter_mut().enumerate() {
            col *= phases[k];
        }
        scaled * self.eigenvectors.adjoint()
    }

    /// Evolve `rho_sys (x) rho_E` and trace the environment back out.
    pub fn evolve_reduced(
        &self,
        rho_sys: &DMatrix<Complex64>,
        bath_state: &BathState,
        cutoffs: &FockCutoffs,
        t: f64,
    ) -> DMatrix<Complex64> {
        assert_eq!(rho_sys.nrows(), self.sys_dim);
        let rho_e = environment_state(bath_state, cutoffs);
        let rho = rho_sys.kronecker(&rho_e);
        let u = self.propagator(t);
        let rho_t = &u * rho * u.adjoint();
        partial_trace_env(&rho_t, self.env_dim)
    }
}

/// One-shot exact evolution of the reduced system state.
pub fn oracle_evolve(
    interaction: &InteractionSpec,
    bath: &BathSpec,
    rho_s: &DensityMatrix2,
    rho_p: &DensityMatrix2,
    bath_state: &BathState,
    cutoffs: &FockCutoffs,
    t: f64,
) -> Result<DensityMatrix2, OracleError> {
    let oracle = FockOracle::new(interaction, bath, cutoffs)?;
    oracle_evolve_with(&oracle, rho_s, rho_p, bath_state, cutoffs, t)
}

/// Same as [`oracle_evolve`] but reusing a prebuilt eigendecomposition.
pub fn oracle_evolve_with(
    oracle: &FockOracle,
    rho_s: &DensityMatrix2,
    rho_p: &DensityMatrix2,
    bath_state: &BathState,
    cutoffs: &FockCutoffs,
    t: f64,
) -> Result<DensityMatrix2, OracleError> {
    let rho_sp = crate::dynamics::kron2(rho_s.matrix(), rho_p.matrix());
    let rho_sp = DMatrix::from_fn(4, 4, |r, c| rho_sp[(r, c)]);
    let reduced = oracle.evolve_reduced(&rho_sp, bath_state, cutoffs, t);
    let rho_s_t = crate::dynamics::partial_trace_probe(&nalgebra::Matrix4::from_fn(|r, c| {
        reduced[(r, c)]
    }));
    Ok(DensityMatrix2::new(rho_s_t)?)
}

/// Extract the decoherence factor from a two-level test evolution: the
/// off-diagonal of an equal superposition decays by exactly `gamma_ij`.
pub fn oracle_gamma(
    bath: &BathSpec,
    alpha_i: f64,
    alpha_j: f64,
    bath_state: &BathState,
    cutoffs: &FockCutoffs,
    t: f64,
) -> Result<Complex64, OracleError> {
    let oracle = FockOracle::new_two_level(bath, alpha_i, alpha_j, cutoffs)?;
    let half = Complex64::new(0.5, 0.0);
    let rho_sys = DMatrix::from_element(2, 2, half);
    let reduced = oracle.evolve_reduced(&rho_sys, bath_state, cutoffs, t);
    Ok(reduced[(0, 1)] / half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{gamma, Eigenbasis, QubitState};
    use approx::assert_relative_eq;

    fn bath() -> BathSpec {
        BathSpec::single(1.0, 0.5, 0.0).unwrap()
    }

    fn cut(d: usize) -> FockCutoffs {
        FockCutoffs::new(vec![d]).unwrap()
    }

    #[test]
    fn cutoff_validation() {
        assert!(matches!(FockCutoffs::new(vec![1]), Err(OracleError::CutoffTooSmall(1))));
        assert!(matches!(
            FockCutoffs::new(vec![2048]),
            Err(OracleError::DimensionCap { dim: 8192, cap: DEFAULT_DIM_CAP })
        ));
        assert!(FockCutoffs::with_cap(vec![2048], 10_000).is_ok());
        assert_eq!(default_cutoff(1.0, 0.5, 0.0), 15);
    }

    #[test]
    fn ladder_algebra() {
        let d = 3;
        let b = annihilation(d);
        assert_relative_eq!(b[(0, 1)].re, 1.0f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(b[(1, 2)].re, 2.0f64.sqrt(), epsilon = 1e-15);
        // commutator is the identity on the lowest d-1 levels
        let comm = &b * b.adjoint() - b.adjoint() * &b;
        for r in 0..d - 1 {
            for c in 0..d - 1 {
                let expect = if r == c { 1.0 } else { 0.0 };
                assert!((comm[(r, c)] - Complex64::from(expect)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn decoupled_hamiltonian_is_pure_bath() {
        let silent = BathSpec::single(1.3, 0.0, 0.0).unwrap();
        let spec = InteractionSpec::new([0.5, -0.3, 0.9, 0.1], Eigenbasis::Bell).unwrap();
        let cutoffs = cut(5);
        let h = build_hamiltonian(&spec, &silent, &cutoffs).unwrap();
        let expected = identity(4).kronecker(&bath_hamiltonian(&silent, &cutoffs));
        assert!((h - expected).norm() < 1e-14);
    }

    #[test]
    fn coupling_operator_is_conserved() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let cutoffs = cut(8);
        for _ in 0..5 {
            let spec = InteractionSpec::new(
                [
                    rng.gen_range(-2.0..2.0),
                    rng.gen_range(-2.0..2.0),
                    rng.gen_range(-2.0..2.0),
                    rng.gen_range(-2.0..2.0),
                ],
                Eigenbasis::Bell,
            )
            .unwrap();
            let b = BathSpec::single(rng.gen_range(0.5..2.0), rng.gen_range(0.1..0.8), 0.0)
                .unwrap();
            let h = build_hamiltonian(&spec, &b, &cutoffs).unwrap();
            assert!((h.adjoint() - &h).norm() < 1e-12);
            let v = spec.eigenvectors();
            let alphas = spec.alphas();
            let diag = nalgebra::Matrix4::from_diagonal(&nalgebra::Vector4::new(
                Complex64::from(alphas[0]),
                Complex64::from(alphas[1]),
                Complex64::from(alphas[2]),
                Complex64::from(alphas[3]),
            ));
            let a_t = v * diag * v.adjoint();
            let a_full =
                DMatrix::from_fn(4, 4, |r, c| a_t[(r, c)]).kronecker(&identity(8));
            let comm = &a_full * &h - &h * a_full;
            assert!(comm.norm() <= 1e-10);
        }
    }

    #[test]
    fn propagator_unitary() {
        let spec = InteractionSpec::new([0.0, 0.0, 0.0, 1.0], Eigenbasis::Bell).unwrap();
        let oracle = FockOracle::new(&spec, &bath(), &cut(12)).unwrap();
        let u = oracle.propagator(2.7);
        let dim = u.nrows();
        assert!((u.adjoint() * &u - DMatrix::identity(dim, dim)).norm() <= 1e-10);
    }

    #[test]
    fn evolution_trivial_cases() {
        let spec = InteractionSpec::new([0.0, 0.0, 0.0, 1.0], Eigenbasis::Bell).unwrap();
        let rs = QubitState::new([0.3, -0.2, 0.4]).unwrap().density_matrix();
        let rp = QubitState::new([0.1, 0.6, -0.3]).unwrap().density_matrix();
        let cutoffs = cut(12);
        let out = oracle_evolve(&spec, &bath(), &rs, &rp, &BathState::Vacuum, &cutoffs, 0.0)
            .unwrap();
        assert!((out.matrix() - rs.matrix()).norm() < 1e-10);

        let silent = BathSpec::single(1.0, 0.0, 0.0).unwrap();
        let out = oracle_evolve(&spec, &silent, &rs, &rp, &BathState::Vacuum, &cutoffs, 5.0)
            .unwrap();
        assert!((out.matrix() - rs.matrix()).norm() < 1e-10);
    }

    #[test]
    fn total_purity_preserved_for_pure_inputs() {
        let spec = InteractionSpec::new([0.2, -0.5, 0.8, 1.1], Eigenbasis::Bell).unwrap();
        let cutoffs = cut(14);
        let oracle = FockOracle::new(&spec, &bath(), &cutoffs).unwrap();
        // pure |0>|0> system-probe state, vacuum environment
        let mut rho_sp = DMatrix::zeros(4, 4);
        rho_sp[(0, 0)] = Complex64::new(1.0, 0.0);
        let rho = rho_sp.kronecker(&environment_state(&BathState::Vacuum, &cutoffs));
        let u = oracle.propagator(1.9);
        let rho_t = &u * rho * u.adjoint();
        let purity = (&rho_t * &rho_t).trace().re;
        assert_relative_eq!(purity, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn gamma_extraction_matches_closed_form() {
        let cutoffs = cut(30);
        let t = std::f64::consts::PI;
        let num = oracle_gamma(&bath(), 1.0, 0.0, &BathState::Vacuum, &cutoffs, t).unwrap();
        let analytic = gamma(&bath(), 1.0, 0.0, t);
        assert!((num - analytic).norm() < 1e-6);

        let trivial =
            oracle_gamma(&bath(), 0.7, 0.7, &BathState::Vacuum, &cutoffs, 2.0).unwrap();
        assert!((trivial - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        let at_zero =
            oracle_gamma(&bath(), 1.0, 0.0, &BathState::Vacuum, &cutoffs, 0.0).unwrap();
        assert!((at_zero - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cutoff_convergence_is_monotone() {
        let t = 2.0;
        let analytic = gamma(&bath(), 1.0, 0.0, t);
        let mut prev = f64::INFINITY;
        for d in [4, 8, 16, 32] {
            let num =
                oracle_gamma(&bath(), 1.0, 0.0, &BathState::Vacuum, &cut(d), t).unwrap();
            let err = (num - analytic).norm();
            assert!(err <= prev.max(1e-12), "error grew from {prev} to {err} at d = {d}");
            prev = err;
        }
        assert!(prev < 1e-10);
    }
}
