//! Reachable-set geometry and control certificates.
//!
//! At fixed time the reachable set of Bloch vectors is the image of the
//! unit ball under the affine map, an ellipsoid centered at the offset
//! with semi-axes given by the singular values of the linear part. On top
//! of that sit the accessibility certificate (pairwise eigenvalue-gap
//! inequalities plus the leading Maclaurin coefficient of `det A`), the
//! exact-swap time enumeration for commensurate baths, and the inverse
//! design formula for the coupling eigenvalue.

use nalgebra::Vector3;
use num_complex::Complex64;
use thiserror::Error;

use crate::dynamics::AffineMap;
use crate::model::{
    phase_phi, taylor_f, taylor_phi, BathSpec, Eigenbasis, InteractionSpec, ModelError,
    QubitState, TruncatedSeries, DEFAULT_SERIES_ORDER,
};

#[derive(Debug, Error)]
pub enum ReachabilityError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("operation requires the Bell eigenbasis")]
    NotBell,
    #[error("bath frequencies are not commensurate: {0}")]
    Incommensurate(String),
    #[error("determinant series coefficient of t^{order} is {value:.3e}, expected zero")]
    LowOrderCoefficient { order: usize, value: f64 },
    #[error("k2 has {got} entries, bath has {expected} modes")]
    K2LengthMismatch { got: usize, expected: usize },
    #[error("k2 vector {0:?} is not a common multiple of the mode harmonics {1:?}")]
    InconsistentK2(Vec<i64>, Vec<u64>),
    #[error("design denominator is {0}; it must be positive")]
    NonPositiveDenominator(f64),
}

/// Relative tolerance for integer/commensurability checks.
pub const COMMENSURATE_TOL: f64 = 1e-9;

/// Reachable set at fixed time: center, semi-axes sorted descending, and
/// the corresponding orthonormal axis directions.
#[derive(Debug, Clone, PartialEq)]
pub struct Ellipsoid {
    pub center: Vector3<f64>,
    pub semi_axes: [f64; 3],
    pub axes: [Vector3<f64>; 3],
}

impl Ellipsoid {
    /// Squared Mahalanobis distance of a point; `<= 1` means inside.
    /// Components along degenerate (zero) axes count as infinite unless
    /// they vanish within `tol`.
    pub fn mahalanobis_sq(&self, point: &Vector3<f64>, tol: f64) -> f64 {
        let d = point - self.center;
        let mut acc = 0.0;
        for k in 0..3 {
            let c = d.dot(&self.axes[k]);
            if self.semi_axes[k] > tol {
                acc += (c / self.semi_axes[k]).powi(2);
            } else if c.abs() > tol {
                return f64::INFINITY;
            }
        }
        acc
    }
}

/// SVD of the linear part: semi-axes are the singular values, directions
/// the left singular vectors, center the affine offset. Rank-deficient
/// maps yield zero semi-axes and are reported, not rejected.
pub fn reachable_ellipsoid(map: &AffineMap) -> Ellipsoid {
    let svd = map.linear().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    Ellipsoid {
        center: *map.offset(),
        semi_axes: [svd.singular_values[0], svd.singular_values[1], svd.singular_values[2]],
        axes: [
            Vector3::from(u.column(0)),
            Vector3::from(u.column(1)),
            Vector3::from(u.column(2)),
        ],
    }
}

/// Accumulates sampled reachable-set points over a growing time horizon.
/// The union is monotone by construction: extending the horizon never
/// drops points.
#[derive(Debug, Default, Clone)]
pub struct ReachableUnion {
    times: Vec<f64>,
    points: Vec<Vec<Vector3<f64>>>,
}

impl ReachableUnion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Append the sample cloud for the next (strictly later) time step.
    pub fn push(&mut self, t: f64, cloud: Vec<Vector3<f64>>) {
        if let Some(last) = self.times.last() {
            assert!(t > *last, "time steps must be strictly increasing");
        }
        self.times.push(t);
        self.points.push(cloud);
    }

    pub fn horizon(&self) -> Option<f64> {
        self.times.last().copied()
    }

    pub fn total_points(&self) -> usize {
        self.points.iter().map(Vec::len).sum()
    }

    /// All points accumulated up to and including horizon `t`.
    pub fn points_until(&self, t: f64) -> impl Iterator<Item = &Vector3<f64>> {
        self.times
            .iter()
            .zip(&self.points)
            .filter(move |(time, _)| **time <= t)
            .flat_map(|(_, cloud)| cloud.iter())
    }
}

/// Deterministic quasi-uniform unit-sphere sample (Fibonacci lattice).
pub fn fibonacci_sphere(n: usize) -> Vec<Vector3<f64>> {
    let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
    (0..n)
        .map(|k| {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / n as f64;
            let r = (1.0 - z * z).sqrt();
            let theta = 2.0 * std::f64::consts::PI * (k as f64 / golden).fract();
            Vector3::new(r * theta.cos(), r * theta.sin(), z)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AccessStatus {
    /// All three gap inequalities hold strictly: accessibility follows.
    AccessibleSufficient,
    /// Some inequality degenerates; the criterion is only sufficient, so
    /// nothing is concluded.
    Inconclusive,
}

/// Outcome of the accessibility test on the coupling eigenvalues.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AccessVerdict {
    /// Each pairwise-gap inequality, in the order
    /// `(a2-a4)^2 != (a1-a3)^2`, `(a1-a4)^2 != (a2-a3)^2`,
    /// `(a3-a4)^2 != (a1-a2)^2`.
    pub holds: [bool; 3],
    /// Sixth time derivative of `det A` at zero, when computed.
    pub certificate: Option<f64>,
    pub status: AccessStatus,
}

/// Evaluate the three strict gap inequalities with relative tolerance;
/// near-equality counts as a violation since the condition is only
/// sufficient.
pub fn accessibility_check(alphas: &[f64; 4]) -> AccessVerdict {
    let [a1, a2, a3, a4] = *alphas;
    let pairs = [
        ((a2 - a4).powi(2), (a1 - a3).powi(2)),
        ((a1 - a4).powi(2), (a2 - a3).powi(2)),
        ((a3 - a4).powi(2), (a1 - a2).powi(2)),
    ];
    let mut holds = [false; 3];
    for (k, (lhs, rhs)) in pairs.iter().enumerate() {
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        holds[k] = (lhs - rhs).abs() > COMMENSURATE_TOL * scale;
    }
    let status = if holds.iter().all(|h| *h) {
        AccessStatus::AccessibleSufficient
    } else {
        AccessStatus::Inconclusive
    };
    AccessVerdict { holds, certificate: None, status }
}

// complex Maclaurin series helpers, truncated at a shared order

fn cseries_exp(h: &[Complex64]) -> Vec<Complex64> {
    debug_assert!(h[0].norm() == 0.0);
    let mut out = vec![Complex64::new(0.0, 0.0); h.len()];
    out[0] = Complex64::new(1.0, 0.0);
    for n in 1..h.len() {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=n {
            acc += h[k] * out[n - k] * Complex64::from(k as f64);
        }
        out[n] = acc / Complex64::from(n as f64);
    }
    out
}

fn cseries_re(c: &[Complex64]) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(c.iter().map(|z| z.re).collect())
}

fn cseries_im(c: &[Complex64]) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(c.iter().map(|z| z.im).collect())
}

/// Maclaurin series of the Bell-case affine matrix entries.
fn bell_matrix_series(
    interaction: &InteractionSpec,
    bath: &BathSpec,
    s0: &QubitState,
    order: usize,
) -> Result<[[TruncatedSeries; 3]; 3], ReachabilityError> {
    let f = taylor_f(bath, order)?;
    let phi = taylor_phi(bath, order)?;
    let al = interaction.alphas();
    let gser = |i: usize, j: usize| -> Vec<Complex64> {
        let (ai, aj) = (al[i - 1], al[j - 1]);
        let d2 = (ai - aj).powi(2);
        let delta = ai * ai - aj * aj;
        let h: Vec<Complex64> = (0..=order)
            .map(|k| Complex64::new(-d2 * f.coeff(k), delta * phi.coeff(k)))
            .collect();
        cseries_exp(&h)
    };
    let (g12, g13, g14, g23, g24, g34) =
        (gser(1, 2), gser(1, 3), gser(1, 4), gser(2, 3), gser(2, 4), gser(3, 4));
    let [sx, sy, sz] = s0.bloch();
    let diff = |a: &[Complex64], b: &[Complex64]| -> Vec<Complex64> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    };
    let sum = |a: &[Complex64], b: &[Complex64]| -> Vec<Complex64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    };
    Ok([
        [
            cseries_re(&diff(&g13, &g24)).scale(0.5),
            cseries_im(&diff(&g13, &g24)).scale(0.5 * sz),
            cseries_im(&sum(&g13, &g24)).scale(0.5 * sy),
        ],
        [
            cseries_im(&diff(&g14, &g23)).scale(0.5 * sz),
            cseries_re(&diff(&g23, &g14)).scale(0.5),
            cseries_im(&sum(&g14, &g23)).scale(-0.5 * sx),
        ],
        [
            cseries_im(&sum(&g12, &g34)).scale(-0.5 * sy),
            cseries_im(&diff(&g34, &g12)).scale(0.5 * sx),
            cseries_re(&diff(&g12, &g34)).scale(0.5),
        ],
    ])
}

const LOW_ORDER_TOL: f64 = 1e-12;

/// Sixth time derivative of `det A(t, s0)` at `t = 0`, computed through
/// truncated-series arithmetic. All lower-order Maclaurin coefficients of
/// the determinant are checked to vanish.
pub fn det_a_sixth_derivative(
    interaction: &InteractionSpec,
    bath: &BathSpec,
    s0: &QubitState,
) -> Result<f64, ReachabilityError> {
    if *interaction.eigenbasis() != Eigenbasis::Bell {
        return Err(ReachabilityError::NotBell);
    }
    let order = DEFAULT_SERIES_ORDER;
    let m = bell_matrix_series(interaction, bath, s0, order)?;
    // cofactor expansion along the first row
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| -> TruncatedSeries {
        m[r0][c0].mul(&m[r1][c1]).add(&m[r0][c1].mul(&m[r1][c0]).scale(-1.0))
    };
    let det = m[0][0]
        .mul(&minor(1, 2, 1, 2))
        .add(&m[0][1].mul(&minor(1, 2, 0, 2)).scale(-1.0))
        .add(&m[0][2].mul(&minor(1, 2, 0, 1)));
    for k in 0..6 {
        if det.coeff(k).abs() > LOW_ORDER_TOL {
            return Err(ReachabilityError::LowOrderCoefficient { order: k, value: det.coeff(k) });
        }
    }
    let six_factorial = 720.0;
    Ok(six_factorial * det.coeff(6))
}

/// A time at which the affine map becomes the exact swap of the probe
/// state into the system.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SwapSolution {
    /// The swap time, a multiple of the common bath period.
    pub t_hat: f64,
    /// Odd-multiple index in `alpha4^2 phi(t_hat) = (2 k1 + 1) pi`.
    pub k1: i64,
    /// Per-mode winding numbers `omega_i t_hat = 2 pi k2_i`.
    pub k2: Vec<i64>,
    pub alpha4: f64,
}

/// Best rational approximation `p/q` with `q <= max_den` (continued
/// fractions).
fn rationalize(x: f64, max_den: u64) -> (u64, u64) {
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
    let mut r = x;
    loop {
        let a = r.floor();
        if a < 0.0 || a > max_den as f64 {
            break;
        }
        let a = a as u64;
        let p2 = match a.checked_mul(p1).and_then(|v| v.checked_add(p0)) {
            Some(v) => v,
            None => break,
        };
        let q2 = match a.checked_mul(q1).and_then(|v| v.checked_add(q0)) {
            Some(v) => v,
            None => break,
        };
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = r - a as f64;
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    (p1, q1)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

const MAX_RATIO_DEN: u64 = 1_000_000;
const MAX_HARMONIC: u128 = 1_000_000_000_000;

/// Detect a common base frequency: returns `omega0` and the integer
/// harmonics `m_i` with `omega_i = m_i omega0` within relative tolerance.
pub fn find_base_frequency(bath: &BathSpec) -> Result<(f64, Vec<u64>), ReachabilityError> {
    let omegas: Vec<f64> = bath.modes().iter().map(|m| m.omega).collect();
    let omega_min = omegas.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut nums = Vec::with_capacity(omegas.len());
    let mut dens = Vec::with_capacity(omegas.len());
    for &w in &omegas {
        let ratio = w / omega_min;
        let (p, q) = rationalize(ratio, MAX_RATIO_DEN);
        if q == 0 || (ratio - p as f64 / q as f64).abs() > COMMENSURATE_TOL * ratio.max(1.0) {
            return Err(ReachabilityError::Incommensurate(format!(
                "no rational approximation of {w}/{omega_min} with denominator <= {MAX_RATIO_DEN}"
            )));
        }
        nums.push(p);
        dens.push(q);
    }
    let mut lcm: u128 = 1;
    for &q in &dens {
        let g = gcd(lcm as u64 % q.max(1), q).max(1);
        lcm = lcm.saturating_mul((q / g) as u128);
        if lcm > MAX_HARMONIC {
            return Err(ReachabilityError::Incommensurate(
                "common denominator of the frequency ratios is too large".into(),
            ));
        }
    }
    let mut harmonics = Vec::with_capacity(omegas.len());
    for (&p, &q) in nums.iter().zip(&dens) {
        let m = p as u128 * (lcm / q as u128);
        if m > MAX_HARMONIC {
            return Err(ReachabilityError::Incommensurate(
                "harmonic index overflow".into(),
            ));
        }
        harmonics.push(m as u64);
    }
    let omega0 = omega_min / lcm as f64;
    for (&w, &m) in omegas.iter().zip(&harmonics) {
        if (w - m as f64 * omega0).abs() > COMMENSURATE_TOL * w {
            return Err(ReachabilityError::Incommensurate(format!(
                "omega = {w} deviates from harmonic {m} of base {omega0}"
            )));
        }
    }
    Ok((omega0, harmonics))
}

/// Enumerate exact-swap times `t_hat = 2 pi j / omega0` for which
/// `alpha4^2 phi(t_hat)` is an odd multiple of `pi`, up to `k1 <= k1_max`.
/// Results are sorted by `t_hat`.
pub fn swap_times(
    bath: &BathSpec,
    alpha4: f64,
    k1_max: i64,
) -> Result<Vec<SwapSolution>, ReachabilityError> {
    let (omega0, harmonics) = find_base_frequency(bath)?;
    let mut solutions = Vec::new();
    if alpha4 == 0.0 || k1_max < 0 {
        return Ok(solutions);
    }
    let period = 2.0 * std::f64::consts::PI / omega0;
    // phi grows linearly across periods; zero slope means phi never
    // reaches pi
    let slope: f64 = bath.modes().iter().map(|m| (m.g / m.omega).powi(2) * m.omega).sum();
    if alpha4 * alpha4 * slope * period <= 0.0 {
        return Ok(solutions);
    }
    let limit = (2 * k1_max + 1) as f64 * std::f64::consts::PI;
    let mut j: i64 = 1;
    loop {
        let t_hat = period * j as f64;
        let x = alpha4 * alpha4 * phase_phi(bath, t_hat);
        if x > limit * (1.0 + COMMENSURATE_TOL) {
            break;
        }
        let k1 = ((x / std::f64::consts::PI - 1.0) / 2.0).round() as i64;
        if k1 >= 0 {
            let target = (2 * k1 + 1) as f64 * std::f64::consts::PI;
            if (x - target).abs() <= COMMENSURATE_TOL * target.max(1.0) {
                let k2 = harmonics.iter().map(|&m| m as i64 * j).collect();
                solutions.push(SwapSolution { t_hat, k1, k2, alpha4 });
            }
        }
        j += 1;
    }
    Ok(solutions)
}

/// Solve `1/alpha4^2 = 2/(2 k1 + 1) sum_i k2_i (g_i/omega_i)^2` for the
/// positive root, validating that the `k2_i` describe a single swap time.
pub fn design_alpha4(bath: &BathSpec, k1: i64, k2: &[i64]) -> Result<f64, ReachabilityError> {
    if k2.len() != bath.modes().len() {
        return Err(ReachabilityError::K2LengthMismatch {
            got: k2.len(),
            expected: bath.modes().len(),
        });
    }
    let (_, harmonics) = find_base_frequency(bath)?;
    // all k2_i must be the same multiple j of the mode harmonics
    let mut j: Option<i64> = None;
    for (&k, &m) in k2.iter().zip(&harmonics) {
        if k <= 0 || k % m as i64 != 0 {
            return Err(ReachabilityError::InconsistentK2(k2.to_vec(), harmonics));
        }
        let this = k / m as i64;
        if *j.get_or_insert(this) != this {
            return Err(ReachabilityError::InconsistentK2(k2.to_vec(), harmonics));
        }
    }
    let weighted: f64 = bath
        .modes()
        .iter()
        .zip(k2)
        .map(|(m, &k)| k as f64 * (m.g / m.omega).powi(2))
        .sum();
    let inv_sq = 2.0 / (2 * k1 + 1) as f64 * weighted;
    if inv_sq <= 0.0 {
        return Err(ReachabilityError::NonPositiveDenominator(inv_sq));
    }
    Ok(inv_sq.sqrt().recip())
}
