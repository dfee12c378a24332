//! Domain types and the closed-form bath functions.
//!
//! A collection of harmonic modes dephases the four-level system through
//! the decoherence factor
//! `gamma_ij(t) = exp(-(a_i - a_j)^2 f(t) + i (a_i^2 - a_j^2) phi(t))`
//! with
//! `f(t) = sum_m (g/w)^2 (1 + 2 nbar) (1 - cos w t)` and
//! `phi(t) = sum_m (g/w)^2 (w t - sin w t)` (hbar = 1 throughout).

use nalgebra::{Matrix2, Matrix4, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Maximum supported truncation order for the Maclaurin series helpers.
pub const MAX_SERIES_ORDER: usize = 12;

/// Default truncation order; the determinant certificate needs order 6,
/// two extra orders of margin are kept.
pub const DEFAULT_SERIES_ORDER: usize = 8;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("bath must contain at least one mode")]
    EmptyBath,
    #[error("mode {index}: omega must be positive and finite, got {omega}")]
    BadOmega { index: usize, omega: f64 },
    #[error("mode {index}: nbar must be non-negative and finite, got {nbar}")]
    BadOccupation { index: usize, nbar: f64 },
    #[error("mode {index}: coupling must be finite, got {g}")]
    BadCoupling { index: usize, g: f64 },
    #[error("eigenvalues must be real and finite: {0:?}")]
    BadAlphas([f64; 4]),
    #[error("eigenvector matrix is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },
    #[error("Bloch vector has norm {norm} > 1")]
    OutsideBlochBall { norm: f64 },
    #[error("density matrix is not Hermitian (deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("density matrix trace is {0}, expected 1")]
    BadTrace(f64),
    #[error("density matrix has negative eigenvalue {0:.3e}")]
    NotPositive(f64),
    #[error("series order {0} exceeds supported maximum {MAX_SERIES_ORDER}")]
    OrderTooLarge(usize),
    #[error("bose_occupation requires omega > 0, got {0}")]
    NonPositiveFrequency(f64),
    #[error("bose_occupation requires temperature >= 0, got {0}")]
    NegativeTemperature(f64),
}

/// One harmonic mode of the bath.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    /// Angular frequency (rad per time unit), strictly positive.
    pub omega: f64,
    /// Coupling strength (energy units, hbar = 1); may be zero.
    pub g: f64,
    /// Mean thermal occupation, non-negative.
    pub nbar: f64,
}

/// A finite collection of decoupled harmonic bath modes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BathSpec {
    modes: Vec<Mode>,
}

impl BathSpec {
    pub fn new(modes: Vec<Mode>) -> Result<Self, ModelError> {
        if modes.is_empty() {
            return Err(ModelError::EmptyBath);
        }
        for (index, m) in modes.iter().enumerate() {
            if !(m.omega > 0.0 && m.omega.is_finite()) {
                return Err(ModelError::BadOmega { index, omega: m.omega });
            }
            if !(m.nbar >= 0.0 && m.nbar.is_finite()) {
                return Err(ModelError::BadOccupation { index, nbar: m.nbar });
            }
            if !m.g.is_finite() {
                return Err(ModelError::BadCoupling { index, g: m.g });
            }
        }
        Ok(Self { modes })
    }

    /// Single-mode convenience constructor.
    pub fn single(omega: f64, g: f64, nbar: f64) -> Result<Self, ModelError> {
        Self::new(vec![Mode { omega, g, nbar }])
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }
}

/// Eigenvector regime of the system-probe coupling operator.
// the inline 4x4 in `General` keeps the eigenvector access allocation-free
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq)]
pub enum Eigenbasis {
    /// Product states `|k>_S |l>_P` in the computational basis,
    /// eigenvector index `i = 2k + l` for `k, l = 0, 1`.
    Factorized,
    /// The four Bell states, ordered `(|00> + |11>)/sqrt2`,
    /// `(|00> - |11>)/sqrt2`, `(|01> + |10>)/sqrt2`, `(|01> - |10>)/sqrt2`.
    Bell,
    /// Arbitrary orthonormal eigenvectors as unitary columns.
    General(Matrix4<Complex64>),
}

/// The Hermitian coupling operator between the two-qubit system and the
/// bath, given by its four real eigenvalues and an eigenvector regime.
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionSpec {
    alphas: [f64; 4],
    eigenbasis: Eigenbasis,
}

const UNITARY_TOL: f64 = 1e-12;

impl InteractionSpec {
    pub fn new(alphas: [f64; 4], eigenbasis: Eigenbasis) -> Result<Self, ModelError> {
        if alphas.iter().any(|a| !a.is_finite()) {
            return Err(ModelError::BadAlphas(alphas));
        }
        if let Eigenbasis::General(u) = &eigenbasis {
            let dev = (u.adjoint() * u - Matrix4::identity()).norm();
            if dev > UNITARY_TOL {
                return Err(ModelError::NotUnitary { deviation: dev });
            }
        }
        Ok(Self { alphas, eigenbasis })
    }

    pub fn alphas(&self) -> &[f64; 4] {
        &self.alphas
    }

    pub fn eigenbasis(&self) -> &Eigenbasis {
        &self.eigenbasis
    }

    /// Eigenvectors as columns of a unitary 4x4 matrix, column `i` paired
    /// with `alphas[i]`.
    pub fn eigenvectors(&self) -> Matrix4<Complex64> {
        match &self.eigenbasis {
            Eigenbasis::Factorized => Matrix4::identity(),
            Eigenbasis::Bell => bell_basis(),
            Eigenbasis::General(u) => *u,
        }
    }
}

/// Columns are the four Bell states in the `|sp>` product basis
/// `|00>, |01>, |10>, |11>`.
pub fn bell_basis() -> Matrix4<Complex64> {
    let r = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let o = Complex64::new(0.0, 0.0);
    Matrix4::from_columns(&[
        nalgebra::Vector4::new(r, o, o, r),
        nalgebra::Vector4::new(r, o, o, -r),
        nalgebra::Vector4::new(o, r, r, o),
        nalgebra::Vector4::new(o, r, -r, o),
    ])
}

/// Bloch (coherence) vector of a qubit state, `|s| <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitState {
    bloch: [f64; 3],
}

const BALL_TOL: f64 = 1e-12;

impl QubitState {
    pub fn new(bloch: [f64; 3]) -> Result<Self, ModelError> {
        let norm = (bloch[0].powi(2) + bloch[1].powi(2) + bloch[2].powi(2)).sqrt();
        if norm.is_nan() || norm > 1.0 + BALL_TOL {
            return Err(ModelError::OutsideBlochBall { norm });
        }
        Ok(Self { bloch })
    }

    pub fn bloch(&self) -> [f64; 3] {
        self.bloch
    }

    pub fn vector(&self) -> Vector3<f64> {
        Vector3::from(self.bloch)
    }

    /// Density matrix `(I + s . sigma) / 2` with Pauli ordering (x, y, z).
    pub fn density_matrix(&self) -> DensityMatrix2 {
        let [x, y, z] = self.bloch;
        let m = Matrix2::new(
            Complex64::new(0.5 * (1.0 + z), 0.0),
            Complex64::new(0.5 * x, -0.5 * y),
            Complex64::new(0.5 * x, 0.5 * y),
            Complex64::new(0.5 * (1.0 - z), 0.0),
        );
        DensityMatrix2 { m }
    }
}

/// A validated single-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    m: Matrix2<Complex64>,
}

const DM_TOL: f64 = 1e-12;

impl DensityMatrix2 {
    pub fn new(m: Matrix2<Complex64>) -> Result<Self, ModelError> {
        let herm = (m - m.adjoint()).norm();
        if herm > DM_TOL {
            return Err(ModelError::NotHermitian(herm));
        }
        let tr = m[(0, 0)] + m[(1, 1)];
        if (tr.re - 1.0).abs() > DM_TOL || tr.im.abs() > DM_TOL {
            return Err(ModelError::BadTrace(tr.re));
        }
        // 2x2 Hermitian eigenvalues in closed form
        let half = 0.5 * (m[(0, 0)].re + m[(1, 1)].re);
        let det = (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re;
        let disc = (half * half - det).max(0.0).sqrt();
        let min_eig = half - disc;
        if min_eig < -DM_TOL {
            return Err(ModelError::NotPositive(min_eig));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.m
    }

    /// Bloch vector (x, y, z) of the state.
    pub fn bloch(&self) -> [f64; 3] {
        [
            2.0 * self.m[(1, 0)].re,
            2.0 * self.m[(1, 0)].im,
            self.m[(0, 0)].re - self.m[(1, 1)].re,
        ]
    }

    pub fn purity(&self) -> f64 {
        (self.m * self.m).trace().re
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let half = 0.5 * (self.m[(0, 0)].re + self.m[(1, 1)].re);
        let det = (self.m[(0, 0)] * self.m[(1, 1)] - self.m[(0, 1)] * self.m[(1, 0)]).re;
        half - (half * half - det).max(0.0).sqrt()
    }
}

/// Mean thermal occupation of a mode at the given temperature
/// (energy units, hbar = k_B = 1). Zero temperature gives the vacuum.
pub fn bose_occupation(omega: f64, temperature: f64) -> Result<f64, ModelError> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(ModelError::NonPositiveFrequency(omega));
    }
    if temperature.is_nan() || temperature < 0.0 {
        return Err(ModelError::NegativeTemperature(temperature));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (omega / temperature).exp_m1())
}

/// Dephasing amplitude `f(t) = sum (g/w)^2 (1 + 2 nbar)(1 - cos w t)`.
pub fn dephasing_f(bath: &BathSpec, t: f64) -> f64 {
    bath.modes()
        .iter()
        .map(|m| (m.g / m.omega).powi(2) * (1.0 + 2.0 * m.nbar) * (1.0 - (m.omega * t).cos()))
        .sum()
}

/// Accumulated phase `phi(t) = sum (g/w)^2 (w t - sin w t)`.
pub fn phase_phi(bath: &BathSpec, t: f64) -> f64 {
    bath.modes()
        .iter()
        .map(|m| (m.g / m.omega).powi(2) * (m.omega * t - (m.omega * t).sin()))
        .sum()
}

/// Decoherence factor
/// `gamma_ij(t) = exp(-(a_i - a_j)^2 f(t)) * exp(i (a_i^2 - a_j^2) phi(t))`.
///
/// The magnitude and phase are assembled from separately computed real
/// exponents, never through a complex exponential of an accumulated sum.
pub fn gamma(bath: &BathSpec, alpha_i: f64, alpha_j: f64, t: f64) -> Complex64 {
    let d = alpha_i - alpha_j;
    let magnitude = (-d * d * dephasing_f(bath, t)).exp();
    let theta = (alpha_i * alpha_i - alpha_j * alpha_j) * phase_phi(bath, t);
    Complex64::new(magnitude * theta.cos(), magnitude * theta.sin())
}

/// A real function of time truncated at a fixed Maclaurin order.
///
/// `coeffs[k]` is the coefficient of `t^k`; arithmetic truncates at the
/// order of the left operand.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<f64>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![0.0; order + 1] }
    }

    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c += other.coeff(k);
        }
        Self { coeffs }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Cauchy product truncated at this series' order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order();
        let mut coeffs = vec![0.0; order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Horner evaluation at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }
}

/// Maclaurin series of `f(t)`; only even powers >= 2 are populated.
pub fn taylor_f(bath: &BathSpec, order: usize) -> Result<TruncatedSeries, ModelError> {
    if order > MAX_SERIES_ORDER {
        return Err(ModelError::OrderTooLarge(order));
    }
    let mut coeffs = vec![0.0; order + 1];
    for m in bath.modes() {
        let weight = (m.g / m.omega).powi(2) * (1.0 + 2.0 * m.nbar);
        // 1 - cos(wt) = sum_{k>=1} (-1)^{k+1} (wt)^{2k} / (2k)!
        let mut k = 1usize;
        while 2 * k <= order {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            coeffs[2 * k] += weight * sign * m.omega.powi(2 * k as i32) / factorial(2 * k);
            k += 1;
        }
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

/// Maclaurin series of `phi(t)`; only odd powers >= 3 are populated.
pub fn taylor_phi(bath: &BathSpec, order: usize) -> Result<TruncatedSeries, ModelError> {
    if order > MAX_SERIES_ORDER {
        return Err(ModelError::OrderTooLarge(order));
    }
    let mut coeffs = vec![0.0; order + 1];
    for m in bath.modes() {
        let weight = (m.g / m.omega).powi(2);
        // wt - sin(wt) = sum_{k>=1} (-1)^{k+1} (wt)^{2k+1} / (2k+1)!
        let mut k = 1usize;
        while 2 * k < order {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            coeffs[2 * k + 1] +=
                weight * sign * m.omega.powi(2 * k as i32 + 1) / factorial(2 * k + 1);
            k += 1;
        }
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn single(omega: f64, g: f64, nbar: f64) -> BathSpec {
        BathSpec::single(omega, g, nbar).unwrap()
    }

    #[test]
    fn bath_validation() {
        assert_eq!(BathSpec::new(vec![]).unwrap_err(), ModelError::EmptyBath);
        assert!(matches!(
            BathSpec::single(-1.0, 0.1, 0.0).unwrap_err(),
            ModelError::BadOmega { .. }
        ));
        assert!(matches!(
            BathSpec::single(1.0, 0.1, -0.5).unwrap_err(),
            ModelError::BadOccupation { .. }
        ));
        assert!(BathSpec::single(1.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn bose_occupation_vacuum_limit() {
        assert_eq!(bose_occupation(1.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn bose_occupation_high_temperature() {
        // nbar ~ T/w - 1/2 for T >> w
        let t = 1.0e3;
        let nbar = bose_occupation(1.0, t).unwrap();
        let asymptote = t / 1.0 - 0.5;
        assert!((nbar - asymptote).abs() / asymptote < 0.01);
    }

    #[test]
    fn bose_occupation_direct_value() {
        // omega/T = 1: nbar = 1/(e - 1)
        let nbar = bose_occupation(2.0, 2.0).unwrap();
        assert_relative_eq!(nbar, 1.0 / (std::f64::consts::E - 1.0), epsilon = 1e-15);
        assert_relative_eq!(nbar, 0.5819767068693265, epsilon = 1e-12);
    }

    #[test]
    fn bose_occupation_errors() {
        assert!(bose_occupation(0.0, 1.0).is_err());
        assert!(bose_occupation(1.0, -1.0).is_err());
    }

    #[test]
    fn dephasing_f_at_zero_and_decoupled() {
        let bath = single(1.3, 0.7, 0.2);
        assert_eq!(dephasing_f(&bath, 0.0), 0.0);
        let decoupled = single(1.0, 0.0, 0.0);
        assert_eq!(dephasing_f(&decoupled, 17.3), 0.0);
    }

    #[test]
    fn dephasing_f_hand_value() {
        // (0.5/1)^2 * (1 - cos pi) = 0.25 * 2 = 0.5
        let bath = single(1.0, 0.5, 0.0);
        assert_relative_eq!(dephasing_f(&bath, std::f64::consts::PI), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn phase_phi_hand_value() {
        // (0.5)^2 * 2 pi, sin term vanishes
        let bath = single(1.0, 0.5, 0.0);
        let t = 2.0 * std::f64::consts::PI;
        assert_relative_eq!(phase_phi(&bath, t), 0.25 * t, epsilon = 1e-14);
        assert_eq!(phase_phi(&bath, 0.0), 0.0);
    }

    #[test]
    fn gamma_trivial_cases() {
        let bath = single(1.0, 0.5, 0.3);
        assert_eq!(gamma(&bath, 3.7, 3.7, 2.1), Complex64::new(1.0, 0.0));
        assert_eq!(gamma(&bath, 1.0, -2.0, 0.0), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn gamma_hand_value() {
        // f(pi) = 0.5, phi(pi) = 0.25 pi, alphas (1, 0):
        // gamma = e^{-0.5} (cos(pi/4) + i sin(pi/4))
        let bath = single(1.0, 0.5, 0.0);
        let g = gamma(&bath, 1.0, 0.0, std::f64::consts::PI);
        let mag = (-0.5f64).exp();
        let th = 0.25 * std::f64::consts::PI;
        assert_relative_eq!(g.re, mag * th.cos(), epsilon = 1e-14);
        assert_relative_eq!(g.im, mag * th.sin(), epsilon = 1e-14);
    }

    #[test]
    fn taylor_leading_coefficients() {
        let (omega, g, nbar) = (1.7, 0.4, 0.6);
        let bath = single(omega, g, nbar);
        let f = taylor_f(&bath, 8).unwrap();
        assert_relative_eq!(
            f.coeff(2),
            (g / omega).powi(2) * (1.0 + 2.0 * nbar) * omega * omega / 2.0,
            epsilon = 1e-15
        );
        for k in [0, 1, 3, 5, 7] {
            assert_eq!(f.coeff(k), 0.0);
        }
        let p = taylor_phi(&bath, 8).unwrap();
        assert_relative_eq!(p.coeff(3), (g / omega).powi(2) * omega.powi(3) / 6.0, epsilon = 1e-15);
        for k in [0, 1, 2, 4, 6, 8] {
            assert_eq!(p.coeff(k), 0.0);
        }
    }

    #[test]
    fn taylor_order_cap() {
        let bath = single(1.0, 0.5, 0.0);
        assert_eq!(taylor_f(&bath, 13).unwrap_err(), ModelError::OrderTooLarge(13));
        assert_eq!(taylor_phi(&bath, 13).unwrap_err(), ModelError::OrderTooLarge(13));
    }

    #[test]
    fn series_matches_closed_form_at_small_t() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let bath = single(
                rng.gen_range(0.2..3.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(0.0..2.0),
            );
            let t = 0.01;
            let fs = taylor_f(&bath, 8).unwrap();
            let ps = taylor_phi(&bath, 8).unwrap();
            assert!((fs.eval(t) - dephasing_f(&bath, t)).abs() < 1e-12);
            assert!((ps.eval(t) - phase_phi(&bath, t)).abs() < 1e-12);
        }
    }

    #[test]
    fn series_truncation_error_scales_with_order() {
        // |closed - series| / t^{order+1} stays bounded as t -> 0
        let bath = single(1.4, 0.8, 0.5);
        let order = 8;
        let fs = taylor_f(&bath, order).unwrap();
        let mut prev_ratio = f64::INFINITY;
        for &t in &[0.2, 0.1, 0.05, 0.025] {
            let ratio = (dephasing_f(&bath, t) - fs.eval(t)).abs() / t.powi(order as i32 + 1);
            // f is even, so the first dropped term is t^10; the normalized
            // ratio must not blow up as t shrinks
            assert!(ratio < prev_ratio.max(1.0));
            prev_ratio = ratio;
        }
    }

    #[test]
    fn series_arithmetic() {
        let a = TruncatedSeries::from_coeffs(vec![1.0, 2.0, 3.0]);
        let b = TruncatedSeries::from_coeffs(vec![0.0, 1.0, 0.0]);
        assert_eq!(a.add(&b).coeffs(), &[1.0, 3.0, 3.0]);
        assert_eq!(a.mul(&b).coeffs(), &[0.0, 1.0, 2.0]);
        assert_eq!(a.scale(2.0).coeffs(), &[2.0, 4.0, 6.0]);
        assert_relative_eq!(a.eval(0.5), 1.0 + 1.0 + 0.75, epsilon = 1e-15);
    }

    #[test]
    fn density_matrix_round_trip_and_validation() {
        let s = QubitState::new([0.3, -0.4, 0.5]).unwrap();
        let rho = s.density_matrix();
        let back = rho.bloch();
        for (got, expected) in back.iter().zip(s.bloch()) {
            assert_relative_eq!(*got, expected, epsilon = 1e-15);
        }
        assert!(QubitState::new([1.0, 1.0, 0.0]).is_err());
        // non-unit trace rejected
        let bad = Matrix2::new(
            Complex64::new(0.9, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        );
        assert!(DensityMatrix2::new(bad).is_err());
    }

    #[test]
    fn interaction_unitarity_check() {
        let mut u = Matrix4::identity();
        assert!(InteractionSpec::new([0.0, 0.0, 0.0, 1.0], Eigenbasis::General(u)).is_ok());
        u[(0, 0)] = Complex64::new(1.0 + 1e-6, 0.0);
        assert!(matches!(
            InteractionSpec::new([0.0, 0.0, 0.0, 1.0], Eigenbasis::General(u)),
            Err(ModelError::NotUnitary { .. })
        ));
        assert!(InteractionSpec::new([f64::NAN, 0.0, 0.0, 0.0], Eigenbasis::Bell).is_err());
    }

    proptest! {
        #[test]
        fn gamma_magnitude_bounded(
            omega in 0.1f64..5.0,
            g in -2.0f64..2.0,
            nbar in 0.0f64..3.0,
            ai in -3.0f64..3.0,
            aj in -3.0f64..3.0,
            t in -20.0f64..20.0,
        ) {
            let bath = single(omega, g, nbar);
            prop_assert!(dephasing_f(&bath, t) >= 0.0);
            let gm = gamma(&bath, ai, aj, t);
            prop_assert!(gm.norm() <= 1.0 + 1e-12);
        }

        #[test]
        fn gamma_index_swap_conjugates(
            omega in 0.1f64..5.0,
            g in -2.0f64..2.0,
            nbar in 0.0f64..3.0,
            ai in -3.0f64..3.0,
            aj in -3.0f64..3.0,
            t in 0.0f64..20.0,
        ) {
            let bath = single(omega, g, nbar);
            let gij = gamma(&bath, ai, aj, t);
            let gji = gamma(&bath, aj, ai, t);
            prop_assert!((gij - gji.conj()).norm() < 1e-14);
        }

        #[test]
        fn phi_monotone(
            omega in 0.1f64..5.0,
            g in -2.0f64..2.0,
            t1 in 0.0f64..20.0,
            dt in 0.0f64..20.0,
        ) {
            let bath = single(omega, g, 0.0);
            prop_assert!(phase_phi(&bath, t1) <= phase_phi(&bath, t1 + dt) + 1e-12);
        }
    }

    #[test]
    fn commensurate_bath_periodicity() {
        // omega_i multiples of omega0: f periodic, phi quasi-periodic
        let bath = BathSpec::new(vec![
            Mode { omega: 0.5, g: 0.3, nbar: 0.1 },
            Mode { omega: 1.0, g: 0.2, nbar: 0.0 },
            Mode { omega: 1.5, g: 0.4, nbar: 0.5 },
        ])
        .unwrap();
        let period = 2.0 * std::f64::consts::PI / 0.5;
        for &t in &[0.0, 0.37, 1.9, 4.4] {
            assert_relative_eq!(
                dephasing_f(&bath, t + period),
                dephasing_f(&bath, t),
                epsilon = 1e-12
            );
            assert_relative_eq!(
                phase_phi(&bath, t + period),
                phase_phi(&bath, t) + phase_phi(&bath, period),
                epsilon = 1e-12
            );
        }
    }
}
