//! Configuration ingestion, subcommand orchestration, and table/report
//! output. Everything that touches the filesystem lives here.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use nalgebra::{Matrix4, Vector3};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::dynamics::{bell_affine_map, evolve_general, PHYSICALITY_TOL};
use crate::model::{
    gamma, BathSpec, DensityMatrix2, Eigenbasis, InteractionSpec, Mode, QubitState,
};
use crate::oracle::{
    default_cutoff, oracle_evolve_with, BathState, FockCutoffs, FockOracle, DEFAULT_DIM_CAP,
};
use crate::reachability::{
    accessibility_check, design_alpha4, det_a_sixth_derivative, reachable_ellipsoid, swap_times,
    AccessStatus,
};

/// Environment variable overriding the total-dimension cap of the
/// brute-force verifier.
pub const DIM_CAP_ENV: &str = "DEPHASIM_DIM_CAP";

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },
    #[error("physics invariant violated: {0}")]
    Physics(String),
    #[error("oracle mismatch: max |delta| = {max_delta:.3e} exceeds tolerance {tolerance:.3e}")]
    OracleMismatch { max_delta: f64, tolerance: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config { .. } => 2,
            CliError::Physics(_) => 3,
            CliError::OracleMismatch { .. } => 4,
            CliError::Io(_) => 1,
        }
    }

    fn config(field: &str, message: impl ToString) -> Self {
        CliError::Config { field: field.into(), message: message.to_string() }
    }
}

// ---------------------------------------------------------------------
// configuration schema

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunConfig {
    pub bath: BathSection,
    pub interaction: InteractionSection,
    pub initial: InitialSection,
    pub probe: ProbeSection,
    pub time_grid: TimeGridSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub design: Option<DesignSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BathSection {
    pub modes: Vec<ModeSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ModeSection {
    pub omega: f64,
    pub g: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nbar: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub temperature: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InteractionSection {
    pub alphas: [f64; 4],
    pub eigenbasis: String,
    /// Rows of the eigenvector unitary as `[re, im]` pairs; required for
    /// the `general` eigenbasis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unitary: Option<Vec<Vec<[f64; 2]>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InitialSection {
    pub s: [f64; 3],
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProbeSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TimeGridSection {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OracleSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoffs: Option<Vec<usize>>,
    #[serde(default = "default_bath_state")]
    pub bath_state: String,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
}

fn default_bath_state() -> String {
    "vacuum".into()
}

fn default_tolerance() -> f64 {
    1e-6
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SearchSection {
    pub k1_max: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DesignSection {
    pub k1: i64,
    pub k2: Vec<i64>,
}

/// A parsed config plus the hash of the bytes it came from.
pub struct LoadedConfig {
    pub config: RunConfig,
    pub sha256: String,
}

pub fn load_config(path: &Path) -> Result<LoadedConfig, CliError> {
    let bytes = std::fs::read(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|e| CliError::config("<file>", format!("config is not UTF-8: {e}")))?;
    let config: RunConfig =
        toml::from_str(&text).map_err(|e| CliError::config("<parse>", e))?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    let sha256 = hasher.finalize().iter().fold(String::new(), |mut acc, b| {
        let _ = write!(acc, "{b:02x}");
        acc
    });
    Ok(LoadedConfig { config, sha256 })
}

// ---------------------------------------------------------------------
// validation into domain types

#[derive(Debug)]
pub struct ValidatedConfig {
    pub bath: BathSpec,
    pub interaction: InteractionSpec,
    pub initial_s: QubitState,
    pub probes: Vec<(String, QubitState)>,
    pub times: Vec<f64>,
    pub oracle_cutoffs: Vec<usize>,
    pub oracle_bath_state: BathState,
    pub oracle_tolerance: f64,
    pub k1_max: i64,
    pub design: Option<(i64, Vec<i64>)>,
}

fn axis_states() -> Vec<(String, QubitState)> {
    [
        ("px+", [1.0, 0.0, 0.0]),
        ("px-", [-1.0, 0.0, 0.0]),
        ("py+", [0.0, 1.0, 0.0]),
        ("py-", [0.0, -1.0, 0.0]),
        ("pz+", [0.0, 0.0, 1.0]),
        ("pz-", [0.0, 0.0, -1.0]),
    ]
    .into_iter()
    .map(|(name, v)| (name.to_string(), QubitState::new(v).unwrap()))
    .collect()
}

pub fn validate(config: &RunConfig) -> Result<ValidatedConfig, CliError> {
    let mut modes = Vec::with_capacity(config.bath.modes.len());
    for (i, m) in config.bath.modes.iter().enumerate() {
        let nbar = match (m.nbar, m.temperature) {
            (Some(n), None) => n,
            (None, Some(t)) => crate::model::bose_occupation(m.omega, t)
                .map_err(|e| CliError::config(&format!("bath.modes[{i}].temperature"), e))?,
            (None, None) => {
                return Err(CliError::config(
                    &format!("bath.modes[{i}]"),
                    "one of `nbar` or `temperature` is required",
                ))
            }
            (Some(_), Some(_)) => {
                return Err(CliError::config(
                    &format!("bath.modes[{i}]"),
                    "`nbar` and `temperature` are mutually exclusive",
                ))
            }
        };
        modes.push(Mode { omega: m.omega, g: m.g, nbar });
    }
    let bath = BathSpec::new(modes).map_err(|e| CliError::config("bath.modes", e))?;

    let eigenbasis = match config.interaction.eigenbasis.as_str() {
        "factorized" => Eigenbasis::Factorized,
        "bell" => Eigenbasis::Bell,
        "general" => {
            let rows = config.interaction.unitary.as_ref().ok_or_else(|| {
                CliError::config(
                    "interaction.unitary",
                    "required for the `general` eigenbasis",
                )
            })?;
            if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
                return Err(CliError::config(
                    "interaction.unitary",
                    "must be a 4x4 matrix of [re, im] pairs",
                ));
            }
            let u = Matrix4::from_fn(|r, c| Complex64::new(rows[r][c][0], rows[r][c][1]));
            Eigenbasis::General(u)
        }
        other => {
            return Err(CliError::config(
                "interaction.eigenbasis",
                format!("unknown eigenbasis `{other}` (expected factorized | bell | general)"),
            ))
        }
    };
    let interaction = InteractionSpec::new(config.interaction.alphas, eigenbasis)
        .map_err(|e| CliError::config("interaction", e))?;

    let initial_s =
        QubitState::new(config.initial.s).map_err(|e| CliError::config("initial.s", e))?;

    let probes = match (&config.probe.p, config.probe.sweep.unwrap_or(false)) {
        (Some(_), true) => {
            return Err(CliError::config("probe", "`p` and `sweep` are mutually exclusive"))
        }
        (Some(p), false) => vec![(
            "p".to_string(),
            QubitState::new(*p).map_err(|e| CliError::config("probe.p", e))?,
        )],
        (None, true) => axis_states(),
        (None, false) => {
            return Err(CliError::config("probe", "one of `p` or `sweep = true` is required"))
        }
    };

    let grid = &config.time_grid;
    if grid.steps < 1 {
        return Err(CliError::config("time_grid.steps", "must be at least 1"));
    }
    if !grid.start.is_finite() || !grid.stop.is_finite() || grid.stop < grid.start {
        return Err(CliError::config("time_grid", "requires finite stop >= start"));
    }
    let times: Vec<f64> = if grid.steps == 1 {
        vec![grid.start]
    } else {
        (0..grid.steps)
            .map(|k| {
                grid.start + (grid.stop - grid.start) * k as f64 / (grid.steps - 1) as f64
            })
            .collect()
    };

    let oracle = config.oracle.clone().unwrap_or(OracleSection {
        cutoffs: None,
        bath_state: default_bath_state(),
        tolerance: default_tolerance(),
    });
    let oracle_cutoffs = oracle.cutoffs.unwrap_or_else(|| {
        bath.modes().iter().map(|m| default_cutoff(m.omega, m.g, m.nbar)).collect()
    });
    if oracle_cutoffs.len() != bath.modes().len() {
        return Err(CliError::config(
            "oracle.cutoffs",
            format!("expected {} entries, got {}", bath.modes().len(), oracle_cutoffs.len()),
        ));
    }
    let oracle_bath_state = match oracle.bath_state.as_str() {
        "vacuum" => BathState::Vacuum,
        "thermal" => {
            BathState::ThermalDiagonal(bath.modes().iter().map(|m| m.nbar).collect())
        }
        other => {
            return Err(CliError::config(
                "oracle.bath_state",
                format!("unknown bath state `{other}` (expected vacuum | thermal)"),
            ))
        }
    };
    if oracle.tolerance.is_nan() || oracle.tolerance <= 0.0 {
        return Err(CliError::config("oracle.tolerance", "must be positive"));
    }

    Ok(ValidatedConfig {
        bath,
        interaction,
        initial_s,
        probes,
        times,
        oracle_cutoffs,
        oracle_bath_state,
        oracle_tolerance: oracle.tolerance,
        k1_max: config.search.as_ref().map(|s| s.k1_max).unwrap_or(0),
        design: config.design.as_ref().map(|d| (d.k1, d.k2.clone())),
    })
}

fn dim_cap() -> usize {
    std::env::var(DIM_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

pub fn make_cutoffs(dims: Vec<usize>) -> Result<FockCutoffs, CliError> {
    FockCutoffs::with_cap(dims, dim_cap())
        .map_err(|e| CliError::config("oracle.cutoffs", e))
}

// ---------------------------------------------------------------------
// output helpers

/// Write atomically: dump to a sibling temp file, then rename over the
/// final path.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn table_header(sha256: &str, columns: &str) -> String {
    format!("# dephasim_version = {VERSION}\n# config_sha256 = {sha256}\n{columns}\n")
}

fn fmt(x: f64) -> String {
    format!("{x:.15e}")
}

// ---------------------------------------------------------------------
// subcommands

const GAMMA_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Trajectory tables: one file per probe state, a row per time step with
/// the Bloch vector of the system, the decoherence-factor magnitudes, and
/// the purity.
pub fn cmd_simulate(loaded: &LoadedConfig, out: &Path) -> Result<Vec<PathBuf>, CliError> {
    let v = validate(&loaded.config)?;
    let alphas = v.interaction.alphas();
    let mut written = Vec::new();
    for (label, probe) in &v.probes {
        let mut body = table_header(
            &loaded.sha256,
            "t,sx,sy,sz,abs_g12,abs_g13,abs_g14,abs_g23,abs_g24,abs_g34,purity",
        );
        for &t in &v.times {
            let rho = evolve_general(
                &v.interaction,
                &v.bath,
                &v.initial_s.density_matrix(),
                &probe.density_matrix(),
                t,
            )
            .map_err(|e| CliError::Physics(e.to_string()))?;
            let bloch = rho.bloch();
            let mut row = vec![fmt(t), fmt(bloch[0]), fmt(bloch[1]), fmt(bloch[2])];
            for (i, j) in GAMMA_PAIRS {
                row.push(fmt(gamma(&v.bath, alphas[i], alphas[j], t).norm()));
            }
            row.push(fmt(rho.purity()));
            body.push_str(&row.join(","));
            body.push('\n');
        }
        let path = out.join(format!("trajectory_{label}.csv"));
        write_atomic(&path, &body)?;
        written.push(path);
    }
    Ok(written)
}

/// Reachable-set table: per time step the ellipsoid center, semi-axes,
/// and axis directions. A seeded sample of probe states double-checks
/// containment of the mapped points.
pub fn cmd_reachable(
    loaded: &LoadedConfig,
    out: &Path,
    seed: u64,
) -> Result<PathBuf, CliError> {
    let v = validate(&loaded.config)?;
    if *v.interaction.eigenbasis() != Eigenbasis::Bell {
        return Err(CliError::config(
            "interaction.eigenbasis",
            "the reachable command requires the bell eigenbasis",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut body = table_header(
        &loaded.sha256,
        "t,cx,cy,cz,axis1,axis2,axis3,u1x,u1y,u1z,u2x,u2y,u2z,u3x,u3y,u3z",
    );
    for &t in &v.times {
        let map = bell_affine_map(&v.interaction, &v.bath, &v.initial_s, t)
            .map_err(|e| CliError::Physics(e.to_string()))?;
        let e = reachable_ellipsoid(&map);
        for _ in 0..32 {
            let dir = Vector3::new(
                rng.gen_range(-1.0..1.0f64),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            if dir.norm() < 1e-6 {
                continue;
            }
            let image = map.linear() * (dir / dir.norm()) + map.offset();
            if image.norm() > 1.0 + PHYSICALITY_TOL {
                return Err(CliError::Physics(format!(
                    "reachable point at t = {t} has Bloch norm {}",
                    image.norm()
                )));
            }
            if e.mahalanobis_sq(&image, 1e-9) > 1.0 + PHYSICALITY_TOL {
                return Err(CliError::Physics(format!(
                    "sampled image at t = {t} escapes its ellipsoid"
                )));
            }
        }
        let mut row = vec![fmt(t), fmt(e.center[0]), fmt(e.center[1]), fmt(e.center[2])];
        row.extend(e.semi_axes.iter().map(|s| fmt(*s)));
        for u in &e.axes {
            row.extend([fmt(u[0]), fmt(u[1]), fmt(u[2])]);
        }
        body.push_str(&row.join(","));
        body.push('\n');
    }
    let path = out.join("ellipsoids.csv");
    write_atomic(&path, &body)?;
    Ok(path)
}

#[derive(Serialize)]
struct AccessReport {
    dephasim_version: String,
    config_sha256: String,
    alphas: [f64; 4],
    holds: [bool; 3],
    status: AccessStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    det_a_sixth_derivative: Option<f64>,
}

/// Accessibility verdict report; the derivative certificate is attached
/// when the eigenbasis is Bell.
pub fn cmd_access(loaded: &LoadedConfig, out: &Path) -> Result<PathBuf, CliError> {
    let v = validate(&loaded.config)?;
    let verdict = accessibility_check(v.interaction.alphas());
    let certificate = if *v.interaction.eigenbasis() == Eigenbasis::Bell {
        Some(
            det_a_sixth_derivative(&v.interaction, &v.bath, &v.initial_s)
                .map_err(|e| CliError::Physics(e.to_string()))?,
        )
    } else {
        None
    };
    let report = AccessReport {
        dephasim_version: VERSION.into(),
        config_sha256: loaded.sha256.clone(),
        alphas: *v.interaction.alphas(),
        holds: verdict.holds,
        status: verdict.status,
        det_a_sixth_derivative: certificate,
    };
    let path = out.join("access.json");
    write_atomic(&path, &(serde_json::to_string_pretty(&report).expect("serialize") + "\n"))?;
    Ok(path)
}

/// Swap-time table for the configured `alpha4 = alphas[3]`.
pub fn cmd_control_search(loaded: &LoadedConfig, out: &Path) -> Result<PathBuf, CliError> {
    let v = validate(&loaded.config)?;
    let alpha4 = v.interaction.alphas()[3];
    let solutions = swap_times(&v.bath, alpha4, v.k1_max)
        .map_err(|e| CliError::config("bath.modes", e))?;
    let mut body = table_header(&loaded.sha256, "t_hat,k1,k2,alpha4");
    for sol in &solutions {
        let k2 = sol.k2.iter().map(i64::to_string).collect::<Vec<_>>().join(";");
        body.push_str(&format!("{},{},{},{}\n", fmt(sol.t_hat), sol.k1, k2, fmt(sol.alpha4)));
    }
    let path = out.join("swap_solutions.csv");
    write_atomic(&path, &body)?;
    Ok(path)
}

#[derive(Serialize)]
struct DesignReport {
    dephasim_version: String,
    config_sha256: String,
    k1: i64,
    k2: Vec<i64>,
    alpha4: f64,
    t_hat: f64,
}

/// Solve the coupling-eigenvalue design formula for the configured
/// `(k1, k2)` and report the implied swap time.
pub fn cmd_design(loaded: &LoadedConfig, out: &Path) -> Result<PathBuf, CliError> {
    let v = validate(&loaded.config)?;
    let (k1, k2) = v
        .design
        .clone()
        .ok_or_else(|| CliError::config("design", "a [design] section is required"))?;
    let alpha4 =
        design_alpha4(&v.bath, k1, &k2).map_err(|e| CliError::config("design", e))?;
    // implied swap time from the first mode's winding number
    let t_hat = 2.0 * std::f64::consts::PI * k2[0] as f64 / v.bath.modes()[0].omega;
    let report = DesignReport {
        dephasim_version: VERSION.into(),
        config_sha256: loaded.sha256.clone(),
        k1,
        k2,
        alpha4,
        t_hat,
    };
    let path = out.join("design.json");
    write_atomic(&path, &(serde_json::to_string_pretty(&report).expect("serialize") + "\n"))?;
    Ok(path)
}

#[derive(Serialize)]
struct VerifyReport {
    dephasim_version: String,
    config_sha256: String,
    cutoffs: Vec<usize>,
    doubled_cutoffs: Option<Vec<usize>>,
    tolerance: f64,
    max_delta: f64,
    max_delta_doubled: Option<f64>,
    passed: bool,
}

/// Compare the analytic reduced dynamics against the brute-force
/// propagator over the time grid, at the configured cutoffs and at
/// doubled cutoffs for a convergence column.
pub fn cmd_verify(loaded: &LoadedConfig, out: &Path) -> Result<Vec<PathBuf>, CliError> {
    let v = validate(&loaded.config)?;
    let cutoffs = make_cutoffs(v.oracle_cutoffs.clone())?;
    let doubled: Option<FockCutoffs> =
        FockCutoffs::with_cap(v.oracle_cutoffs.iter().map(|d| 2 * d).collect(), dim_cap()).ok();
    let oracle = FockOracle::new(&v.interaction, &v.bath, &cutoffs)
        .map_err(|e| CliError::Physics(e.to_string()))?;
    let oracle2 = doubled
        .as_ref()
        .map(|c| FockOracle::new(&v.interaction, &v.bath, c))
        .transpose()
        .map_err(|e| CliError::Physics(e.to_string()))?;

    let rho_s = v.initial_s.density_matrix();
    let probe = &v.probes[0].1;
    let rho_p = probe.density_matrix();

    let max_diff = |a: &DensityMatrix2, b: &DensityMatrix2| -> f64 {
        (a.matrix() - b.matrix()).iter().map(|c| c.norm()).fold(0.0, f64::max)
    };

    let mut body = table_header(&loaded.sha256, "t,max_delta,max_delta_doubled");
    let mut max_delta: f64 = 0.0;
    let mut max_delta_doubled: f64 = 0.0;
    for &t in &v.times {
        let analytic = evolve_general(&v.interaction, &v.bath, &rho_s, &rho_p, t)
            .map_err(|e| CliError::Physics(e.to_string()))?;
        let exact =
            oracle_evolve_with(&oracle, &rho_s, &rho_p, &v.oracle_bath_state, &cutoffs, t)
                .map_err(|e| CliError::Physics(e.to_string()))?;
        let delta = max_diff(&analytic, &exact);
        max_delta = max_delta.max(delta);
        let delta2 = match (&oracle2, &doubled) {
            (Some(o2), Some(c2)) => {
                let exact2 =
                    oracle_evolve_with(o2, &rho_s, &rho_p, &v.oracle_bath_state, c2, t)
                        .map_err(|e| CliError::Physics(e.to_string()))?;
                let d = max_diff(&analytic, &exact2);
                max_delta_doubled = max_delta_doubled.max(d);
                fmt(d)
            }
            _ => "nan".to_string(),
        };
        body.push_str(&format!("{},{},{}\n", fmt(t), fmt(delta), delta2));
    }
    let table_path = out.join("verify.csv");
    write_atomic(&table_path, &body)?;

    let passed = max_delta <= v.oracle_tolerance;
    let report = VerifyReport {
        dephasim_version: VERSION.into(),
        config_sha256: loaded.sha256.clone(),
        cutoffs: v.oracle_cutoffs.clone(),
        doubled_cutoffs: doubled.map(|c| c.dims().to_vec()),
        tolerance: v.oracle_tolerance,
        max_delta,
        max_delta_doubled: oracle2.is_some().then_some(max_delta_doubled),
        passed,
    };
    let report_path = out.join("verify.json");
    write_atomic(
        &report_path,
        &(serde_json::to_string_pretty(&report).expect("serialize") + "\n"),
    )?;
    if !passed {
        return Err(CliError::OracleMismatch { max_delta, tolerance: v.oracle_tolerance });
    }
    Ok(vec![table_path, report_path])
}

/// Dispatch used by the binary; `seed` only affects randomized sampling
/// utilities, never the physics.
pub fn run(
    command: &str,
    config_path: &Path,
    out: &Path,
    seed: u64,
) -> Result<Vec<PathBuf>, CliError> {
    let loaded = load_config(config_path)?;
    match command {
        "simulate" => cmd_simulate(&loaded, out),
        "reachable" => Ok(vec![cmd_reachable(&loaded, out, seed)?]),
        "access" => Ok(vec![cmd_access(&loaded, out)?]),
        "control-search" => Ok(vec![cmd_control_search(&loaded, out)?]),
        "design" => Ok(vec![cmd_design(&loaded, out)?]),
        "verify" => cmd_verify(&loaded, out),
        other => Err(CliError::config("<command>", format!("unknown subcommand `{other}`"))),
    }
}
