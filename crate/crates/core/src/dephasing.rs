//! Logical-qubit dynamics under Gaussian dephasing noise.
//!
//! A fluctuating Z-field with delta-correlated Gaussian statistics and
//! strength `γ` acts on all data qubits — either one shared field (global
//! model) or an independent field per qubit (local model). The Gaussian
//! average is exact per density-matrix element:
//!
//! * global: the coherence between basis states `b, b′` decays by
//!   `exp(−γt (Δm)²/8)` with `Δm` their magnetization difference;
//! * local: it decays by `exp(−γt·h/2)` with `h` their Hamming distance,
//!   i.e. by [`decoherence_factor`] once per differing qubit.
//!
//! Both rules share one normalization, fixed by the second moment
//! `⟨Φ²⟩ = γt` of the accumulated phase: a bare single-qubit coherence then
//! decays by `e^{−γt/2}`, the standard ensemble average. Diagonals never
//! decay, so populations — and hence the logical Z expectation — are exact
//! invariants.
//!
//! No trajectory sampling is involved anywhere; every number here is a
//! closed-form Gaussian integral, which is what makes this module usable as
//! an oracle against an independently stated closed form
//! ([`genus5_closed_form`], [`compare_closed_form`]).

use crate::code::{CodeError, LogicalPair, StabilizerCode};
use crate::pauli::{PauliError, PauliOperator};
use crate::state::{logical_state, StateError};
use num_complex::Complex64;
use thiserror::Error;

/// Which dephasing Hamiltonian drives the evolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DephasingModel {
    /// One shared fluctuating field: `H = B(t)/2 · Σ_i Z_i`.
    Global,
    /// Independent per-qubit fields: `H = Σ_i B_i(t)/2 · Z_i`.
    Local,
}

impl std::fmt::Display for DephasingModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DephasingModel::Global => "global",
            DephasingModel::Local => "local",
        })
    }
}

/// Full description of one dephasing experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingSpec {
    /// Noise model.
    pub model: DephasingModel,
    /// Noise strength `γ ≥ 0`.
    pub gamma: f64,
    /// Elapsed time `t ≥ 0`.
    pub t: f64,
    /// Bloch polar angle `θ ∈ [0, π]` of the initial logical state.
    pub theta: f64,
    /// Bloch azimuth `φ ∈ [0, 2π]` of the initial logical state.
    pub phi: f64,
    /// Which logical pair defines the encoded qubit.
    pub pair_index: usize,
}

/// Density matrix restricted to the support of the initial logical state.
///
/// The initial `|ψ⟩_L⟨ψ|_L` is nonzero only on the support basis states, and
/// elementwise decay preserves that support, so nothing outside it ever
/// becomes populated.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportDensityMatrix {
    n: usize,
    support: Vec<u64>,
    entries: Vec<Vec<Complex64>>,
}

impl SupportDensityMatrix {
    /// Qubit count of the underlying space.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Support basis indices, ascending.
    pub fn support(&self) -> &[u64] {
        &self.support
    }

    /// Support dimension.
    pub fn dim(&self) -> usize {
        self.support.len()
    }

    /// Matrix entry by support positions (row, column).
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    /// Trace (sum of diagonal entries).
    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.entries[i][i]).sum()
    }

    /// Expectation `Tr[ρ L]` of a Pauli operator.
    ///
    /// `L` maps `|b⟩` to `c(b)|b ⊕ x⟩`, so only support pairs related by the
    /// X-mask contribute.
    pub fn pauli_expectation(&self, l: &PauliOperator) -> Result<Complex64, StateError> {
        if l.n() != self.n {
            return Err(StateError::QubitCountMismatch {
                left: l.n(),
                right: self.n,
            });
        }
        let x_mask = l.x_bits().words()[0];
        let z_mask = l.z_bits().words()[0];
        let front = match l.phase_xz() {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        // Tr[ρL] = Σ_b ⟨b|ρ L|b⟩ = Σ_b c(b) ρ_{b, b⊕x} with L|b⟩ = c(b)|b⊕x⟩.
        let pos = |b: u64| self.support.binary_search(&b).ok();
        let mut acc = Complex64::new(0.0, 0.0);
        for (row, &b) in self.support.iter().enumerate() {
            if let Some(col) = pos(b ^ x_mask) {
                let sign = if (b & z_mask).count_ones() % 2 == 1 {
                    -1.0
                } else {
                    1.0
                };
                acc += self.entries[row][col] * front * sign;
            }
        }
        Ok(acc)
    }
}

/// Logical Bloch coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    /// `Tr[ρ′ X̄]`.
    pub r_x: f64,
    /// `Tr[ρ′ Ȳ]`.
    pub r_y: f64,
    /// `Tr[ρ′ Z̄]`.
    pub r_z: f64,
}

/// Failures of the dephasing analysis.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum DephasingError {
    /// A real parameter lies outside its documented range.
    #[error("parameter {name} = {value} out of range")]
    InvalidParameter {
        /// Parameter name.
        name: &'static str,
        /// Offending value.
        value: f64,
    },
    /// State preparation failed.
    #[error(transparent)]
    State(#[from] StateError),
    /// The required code failed to build.
    #[error(transparent)]
    Code(#[from] CodeError),
    /// Logical operator algebra failed.
    #[error(transparent)]
    Pauli(#[from] PauliError),
}

fn check_nonnegative(name: &'static str, value: f64) -> Result<(), DephasingError> {
    if !value.is_finite() || value < 0.0 {
        return Err(DephasingError::InvalidParameter { name, value });
    }
    Ok(())
}

/// Single-coherence ensemble average `⟨exp(±i∫B dt′)⟩ = e^{−γt/2}`.
pub fn decoherence_factor(gamma: f64, t: f64) -> Result<f64, DephasingError> {
    check_nonnegative("gamma", gamma)?;
    check_nonnegative("t", t)?;
    Ok((-gamma * t / 2.0).exp())
}

/// Magnetization `m′ = 2n′ − N` of a basis state, where `n′` counts qubits in
/// `|0⟩` (index bit 0).
pub fn magnetization(index: u64, n: usize) -> i64 {
    n as i64 - 2 * index.count_ones() as i64
}

/// Evolve `|ψ(θ,φ)⟩_L` under the requested noise model and return the exact
/// dephased density matrix on the state's support.
pub fn dephase(
    code: &StabilizerCode,
    spec: &DephasingSpec,
) -> Result<SupportDensityMatrix, DephasingError> {
    check_nonnegative("gamma", spec.gamma)?;
    check_nonnegative("t", spec.t)?;
    let psi = logical_state(code, spec.pair_index, spec.theta, spec.phi)?;
    let support = psi.support_indices(1e-12);
    let gt = spec.gamma * spec.t;
    let n = code.n();
    let entries = support
        .iter()
        .map(|&row| {
            support
                .iter()
                .map(|&col| {
                    let decay = match spec.model {
                        DephasingModel::Global => {
                            let dm = (magnetization(row, n) - magnetization(col, n)) as f64;
                            (-gt * dm * dm / 8.0).exp()
                        }
                        DephasingModel::Local => {
                            let h = (row ^ col).count_ones() as f64;
                            (-gt * h / 2.0).exp()
                        }
                    };
                    psi.amplitude(row) * psi.amplitude(col).conj() * decay
                })
                .collect()
        })
        .collect();
    Ok(SupportDensityMatrix {
        n,
        support,
        entries,
    })
}

/// The logical Y operator `Ȳ = i X̄ Z̄` of a pair.
///
/// For an anticommuting pair the product `X̄Z̄` squares to `−1`, so the extra
/// `i` makes `Ȳ` Hermitian; the sign convention is fixed by requiring the
/// noiseless Bloch vector to come out as `(sinθ cosφ, sinθ sinφ, cosθ)`.
pub fn logical_y(pair: &LogicalPair) -> Result<PauliOperator, PauliError> {
    let xz = pair.x_bar.multiply(&pair.z_bar)?;
    PauliOperator::from_parts(
        xz.x_bits().clone(),
        xz.z_bits().clone(),
        (xz.phase() + 1) & 3,
    )
}

/// Logical Bloch coordinates `(Tr[ρ′X̄], Tr[ρ′Ȳ], Tr[ρ′Z̄])` of the dephased
/// state.
pub fn bloch_coordinates(
    code: &StabilizerCode,
    spec: &DephasingSpec,
) -> Result<BlochVector, DephasingError> {
    let rho = dephase(code, spec)?;
    let pair = &code.logical_pairs()[spec.pair_index];
    let y_bar = logical_y(pair)?;
    let take_real = |v: Complex64| -> f64 {
        debug_assert!(
            v.im.abs() < 1e-10,
            "Bloch coordinate must be real, got {v}"
        );
        v.re
    };
    let r_x = take_real(rho.pauli_expectation(&pair.x_bar)?);
    let r_y = take_real(rho.pauli_expectation(&y_bar)?);
    let r_z = take_real(rho.pauli_expectation(&pair.z_bar)?);
    debug_assert!(
        r_x * r_x + r_y * r_y + r_z * r_z <= 1.0 + 1e-9,
        "Bloch vector must stay inside the sphere"
    );
    Ok(BlochVector { r_x, r_y, r_z })
}

/// The recorded closed-form Bloch coordinates for the 13-qubit genus-5 unit
/// under global dephasing, evaluated verbatim:
///
/// * `R_X = Re[(1/32) e^{−(2γt+iφ)} (1+e^{−γt})⁴ (1+e^{2iφ})] · sinθ`
/// * `R_Y = Re[(i/32) e^{−(2γt+iφ)} (1+e^{−γt})⁴ (−1+e^{2iφ})] · sinθ`
/// * `R_Z = cosθ`
///
/// The complex expressions are real-valued (the imaginary parts cancel
/// algebraically); equivalently `R_X = (1/16) e^{−2γt}(1+e^{−γt})⁴ cosφ sinθ`
/// and `R_Y = −(1/16) e^{−2γt}(1+e^{−γt})⁴ sinφ sinθ`. Note the sign of the
/// `R_Y` line: at `γ = 0` it yields `−sinθ sinφ`, the *opposite* of the ideal
/// Bloch vector's Y component. The comparison layer treats the ideal limit as
/// ground truth and aligns this sign; see [`compare_closed_form_with`].
pub fn genus5_closed_form(theta: f64, phi: f64, gamma: f64, t: f64) -> BlochVector {
    let gt = gamma * t;
    let envelope = (1.0 + (-gt).exp()).powi(4);
    // e^{−(2γt + iφ)}
    let carrier = Complex64::from_polar((-2.0 * gt).exp(), -phi);
    let e2ip = Complex64::from_polar(1.0, 2.0 * phi);
    let sin_theta = theta.sin();
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let rx = carrier * envelope * (one + e2ip) / 32.0 * sin_theta;
    let ry = i * carrier * envelope * (e2ip - one) / 32.0 * sin_theta;
    debug_assert!(rx.im.abs() < 1e-10 && ry.im.abs() < 1e-10);
    BlochVector {
        r_x: rx.re,
        r_y: ry.re,
        r_z: theta.cos(),
    }
}

/// One grid point of the closed-form comparison, with `t = 1` so that
/// `gamma_t` is the product `γt` directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    /// Accumulated noise `γt`.
    pub gamma_t: f64,
    /// Bloch polar angle.
    pub theta: f64,
    /// Bloch azimuth.
    pub phi: f64,
}

/// Oracle-versus-closed-form record at one grid point under one model.
#[derive(Debug, Clone, PartialEq)]
pub struct PointComparison {
    /// Grid parameters.
    pub point: GridPoint,
    /// Noise model used for the oracle side.
    pub model: DephasingModel,
    /// Sector-decay oracle result.
    pub oracle: BlochVector,
    /// Closed form evaluated verbatim (no sign alignment applied here).
    pub closed_form: BlochVector,
    /// Absolute deviations per component, Y compared *after* sign alignment.
    pub abs_dev: [f64; 3],
}

/// Componentwise maximum deviation for one model.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelMax {
    /// Noise model.
    pub model: DephasingModel,
    /// Max absolute deviation per component (x, y, z).
    pub max_dev: [f64; 3],
    /// Grid point attaining each maximum.
    pub argmax: [GridPoint; 3],
}

/// Full closed-form adjudication report.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationReport {
    /// The grid that was evaluated.
    pub grid: Vec<GridPoint>,
    /// Every (model, grid point) comparison, global model first.
    pub points: Vec<PointComparison>,
    /// Componentwise maxima per model.
    pub per_model_max: Vec<ModelMax>,
    /// True when the closed form's Y component was negated before comparison.
    pub y_sign_aligned: bool,
    /// Human-readable conventions note.
    pub note: String,
}

/// The documented default grid: `γt ∈ {0, 0.1, 0.5, 1.0} × θ ∈ {π/4, π/2} ×
/// φ ∈ {0, π/3, π/2}`, `γt`-major.
pub fn default_comparison_grid() -> Vec<GridPoint> {
    let mut grid = Vec::new();
    for &gamma_t in &[0.0, 0.1, 0.5, 1.0] {
        for &theta in &[std::f64::consts::FRAC_PI_4, std::f64::consts::FRAC_PI_2] {
            for &phi in &[0.0, std::f64::consts::FRAC_PI_3, std::f64::consts::FRAC_PI_2] {
                grid.push(GridPoint {
                    gamma_t,
                    theta,
                    phi,
                });
            }
        }
    }
    grid
}

/// Adjudicate the closed form against the sector-decay oracle for a given
/// code and logical pair, under **both** models (which averaging the closed
/// form assumes is not on record).
///
/// The closed form's `R_Y` is negated before differencing (`y_sign_aligned`),
/// fixing the `γ = 0` ideal limit as ground truth; the verbatim value is kept
/// in each [`PointComparison`]. Deviations are reported, never asserted away.
pub fn compare_closed_form_with(
    code: &StabilizerCode,
    pair_index: usize,
    grid: &[GridPoint],
) -> Result<DeviationReport, DephasingError> {
    let mut points = Vec::with_capacity(2 * grid.len());
    let mut per_model_max = Vec::new();
    for model in [DephasingModel::Global, DephasingModel::Local] {
        let mut max_dev = [0.0f64; 3];
        let mut argmax = [GridPoint {
            gamma_t: 0.0,
            theta: 0.0,
            phi: 0.0,
        }; 3];
        for &point in grid {
            let spec = DephasingSpec {
                model,
                gamma: point.gamma_t,
                t: 1.0,
                theta: point.theta,
                phi: point.phi,
                pair_index,
            };
            let oracle = bloch_coordinates(code, &spec)?;
            let closed_form =
                genus5_closed_form(point.theta, point.phi, point.gamma_t, 1.0);
            let abs_dev = [
                (oracle.r_x - closed_form.r_x).abs(),
                (oracle.r_y - (-closed_form.r_y)).abs(),
                (oracle.r_z - closed_form.r_z).abs(),
            ];
            for c in 0..3 {
                if abs_dev[c] > max_dev[c] {
                    max_dev[c] = abs_dev[c];
                    argmax[c] = point;
                }
            }
            points.push(PointComparison {
                point,
                model,
                oracle,
                closed_form,
                abs_dev,
            });
        }
        per_model_max.push(ModelMax {
            model,
            max_dev,
            argmax,
        });
    }
    Ok(DeviationReport {
        grid: grid.to_vec(),
        points,
        per_model_max,
        y_sign_aligned: true,
        note: "closed-form R_Y negated before differencing: the recorded expression yields \
               -sin(theta)sin(phi) at gamma=0, while the ideal Bloch vector (taken as ground \
               truth) has +sin(theta)sin(phi); the verbatim value is kept in closed_form"
            .to_string(),
    })
}

/// [`compare_closed_form_with`] on the 13-qubit genus-5 unit, the code the
/// closed form was stated for.
///
/// **As shipped this always fails**: the genus-5 unit's generator list does
/// not commute pairwise, so the code — and hence its oracle side — cannot be
/// constructed. The comparison machinery itself is exercised through
/// [`compare_closed_form_with`] on buildable codes.
pub fn compare_closed_form(grid: &[GridPoint]) -> Result<DeviationReport, DephasingError> {
    let code = crate::catalog::genus5_unit()?;
    compare_closed_form_with(&code, 0, grid)
}

/// Render a deviation report as an aligned text table.
pub fn render_deviation_table(report: &DeviationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", report.note));
    out.push_str(&format!(
        "{:<7} {:>6} {:>7} {:>7} | {:>10} {:>10} {:>10} | {:>10} {:>10} {:>10} | {:>9} {:>9} {:>9}\n",
        "model", "g*t", "theta", "phi", "orc_x", "orc_y", "orc_z", "cf_x", "cf_y", "cf_z",
        "dev_x", "dev_y", "dev_z"
    ));
    for p in &report.points {
        out.push_str(&format!(
            "{:<7} {:>6.3} {:>7.4} {:>7.4} | {:>10.6} {:>10.6} {:>10.6} | {:>10.6} {:>10.6} {:>10.6} | {:>9.2e} {:>9.2e} {:>9.2e}\n",
            p.model.to_string(),
            p.point.gamma_t,
            p.point.theta,
            p.point.phi,
            p.oracle.r_x,
            p.oracle.r_y,
            p.oracle.r_z,
            p.closed_form.r_x,
            p.closed_form.r_y,
            p.closed_form.r_z,
            p.abs_dev[0],
            p.abs_dev[1],
            p.abs_dev[2],
        ));
    }
    for m in &report.per_model_max {
        out.push_str(&format!(
            "max[{}]: dev_x {:.3e} at (g*t={}, theta={:.4}, phi={:.4}); dev_y {:.3e} at (g*t={}, theta={:.4}, phi={:.4}); dev_z {:.3e}\n",
            m.model,
            m.max_dev[0],
            m.argmax[0].gamma_t,
            m.argmax[0].theta,
            m.argmax[0].phi,
            m.max_dev[1],
            m.argmax[1].gamma_t,
            m.argmax[1].theta,
            m.argmax[1].phi,
            m.max_dev[2],
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::genus2_unit;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    fn spec(model: DephasingModel, gamma: f64, t: f64, theta: f64, phi: f64) -> DephasingSpec {
        DephasingSpec {
            model,
            gamma,
            t,
            theta,
            phi,
            pair_index: 0,
        }
    }

    #[test]
    fn decoherence_examples() {
        assert_eq!(decoherence_factor(0.0, 123.0).unwrap(), 1.0);
        assert!((decoherence_factor(1.0, 1.0).unwrap() - (-0.5f64).exp()).abs() < 1e-15);
        assert!((decoherence_factor(2.0, 3.0).unwrap() - (-3.0f64).exp()).abs() < 1e-15);
        assert!(matches!(
            decoherence_factor(-1.0, 1.0).unwrap_err(),
            DephasingError::InvalidParameter { name: "gamma", .. }
        ));
    }

    #[test]
    fn magnetization_examples() {
        assert_eq!(magnetization(0, 13), 13);
        // |001111⟩: qubits 3..6 set → index 0b111100.
        assert_eq!(magnetization(0b111100, 6), -2);
        // |111100⟩: qubits 1..4 set → index 0b001111.
        assert_eq!(magnetization(0b001111, 6), -2);
    }

    #[test]
    fn zero_noise_is_identity_channel() {
        let code = genus2_unit();
        for model in [DephasingModel::Global, DephasingModel::Local] {
            let rho = dephase(&code, &spec(model, 0.0, 5.0, FRAC_PI_3, 1.0)).unwrap();
            assert!((rho.trace() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            let psi = logical_state(&code, 0, FRAC_PI_3, 1.0).unwrap();
            for (r, &br) in rho.support().iter().enumerate() {
                for (c, &bc) in rho.support().iter().enumerate() {
                    let want = psi.amplitude(br) * psi.amplitude(bc).conj();
                    assert!((rho.entry(r, c) - want).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn global_model_preserves_equal_magnetization_coherences() {
        let code = genus2_unit();
        let noisy = dephase(
            &code,
            &spec(DephasingModel::Global, 2.0, 1.5, FRAC_PI_2, 0.3),
        )
        .unwrap();
        let clean = dephase(
            &code,
            &spec(DephasingModel::Global, 0.0, 0.0, FRAC_PI_2, 0.3),
        )
        .unwrap();
        assert_eq!(noisy.support(), clean.support());
        let n = code.n();
        let mut same_sector_pairs = 0;
        for r in 0..noisy.dim() {
            for c in 0..noisy.dim() {
                let dm = magnetization(noisy.support()[r], n) - magnetization(noisy.support()[c], n);
                if dm == 0 {
                    same_sector_pairs += 1;
                    assert!((noisy.entry(r, c) - clean.entry(r, c)).norm() < 1e-14);
                }
            }
        }
        assert!(same_sector_pairs > noisy.dim(), "off-diagonal cases covered");
    }

    #[test]
    fn local_decay_is_decoherence_factor_per_differing_qubit() {
        let code = genus2_unit();
        let gamma = 0.8;
        let t = 1.3;
        let noisy = dephase(&code, &spec(DephasingModel::Local, gamma, t, FRAC_PI_2, 0.7)).unwrap();
        let clean = dephase(&code, &spec(DephasingModel::Local, 0.0, 0.0, FRAC_PI_2, 0.7)).unwrap();
        let f = decoherence_factor(gamma, t).unwrap();
        for r in 0..noisy.dim() {
            for c in 0..noisy.dim() {
                let h = (noisy.support()[r] ^ noisy.support()[c]).count_ones();
                let want = clean.entry(r, c) * f.powi(h as i32);
                assert!((noisy.entry(r, c) - want).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn dephased_matrix_is_hermitian_with_unit_trace() {
        let code = genus2_unit();
        for model in [DephasingModel::Global, DephasingModel::Local] {
            let rho = dephase(&code, &spec(model, 1.7, 0.9, 2.1, 4.0)).unwrap();
            assert!((rho.trace() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            for r in 0..rho.dim() {
                for c in 0..rho.dim() {
                    assert!((rho.entry(r, c) - rho.entry(c, r).conj()).norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn noiseless_bloch_vector_is_ideal() {
        let code = genus2_unit();
        for &(theta, phi) in &[
            (FRAC_PI_4, 0.0),
            (FRAC_PI_2, FRAC_PI_3),
            (2.0, 5.5),
            (PI, 1.0),
            (0.0, 0.0),
        ] {
            for model in [DephasingModel::Global, DephasingModel::Local] {
                let b = bloch_coordinates(&code, &spec(model, 0.0, 1.0, theta, phi)).unwrap();
                assert!((b.r_x - theta.sin() * phi.cos()).abs() < 1e-12);
                assert!((b.r_y - theta.sin() * phi.sin()).abs() < 1e-12);
                assert!((b.r_z - theta.cos()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn second_pair_also_reproduces_ideal_limit() {
        let code = genus2_unit();
        let mut s = spec(DephasingModel::Global, 0.0, 1.0, FRAC_PI_2, FRAC_PI_3);
        s.pair_index = 1;
        let b = bloch_coordinates(&code, &s).unwrap();
        assert!((b.r_x - FRAC_PI_3.cos()).abs() < 1e-12);
        assert!((b.r_y - FRAC_PI_3.sin()).abs() < 1e-12);
        assert!(b.r_z.abs() < 1e-12);
    }

    #[test]
    fn r_z_is_exactly_cos_theta_under_noise() {
        let code = genus2_unit();
        for &gt in &[0.0, 0.1, 0.5, 1.0, 2.0] {
            for model in [DephasingModel::Global, DephasingModel::Local] {
                let b = bloch_coordinates(&code, &spec(model, gt, 1.0, FRAC_PI_3, 0.9)).unwrap();
                assert!((b.r_z - FRAC_PI_3.cos()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn transverse_components_decay_monotonically() {
        let code = genus2_unit();
        for model in [DephasingModel::Global, DephasingModel::Local] {
            let mut last = f64::INFINITY;
            for &t in &[0.0, 0.1, 0.5, 1.0, 2.0] {
                let b = bloch_coordinates(&code, &spec(model, 1.0, t, FRAC_PI_2, FRAC_PI_4)).unwrap();
                let transverse = b.r_x.hypot(b.r_y);
                assert!(transverse <= last + 1e-12, "|r_xy| nonincreasing in t");
                last = transverse;
            }
        }
    }

    #[test]
    fn closed_form_frozen_values() {
        // γt = ln 2, θ = π/2, φ = 0: (1/16)(1/4)(3/2)^4 = 81/1024.
        let b = genus5_closed_form(FRAC_PI_2, 0.0, 2.0f64.ln(), 1.0);
        assert!((b.r_x - 81.0 / 1024.0).abs() < 1e-15);
        assert!(b.r_y.abs() < 1e-15);
        assert_eq!(b.r_z, FRAC_PI_2.cos());

        // γ = 0, θ = π/2, φ = 0 → (1, 0, 0).
        let b = genus5_closed_form(FRAC_PI_2, 0.0, 0.0, 1.0);
        assert!((b.r_x - 1.0).abs() < 1e-15);
        assert!(b.r_y.abs() < 1e-15);
    }

    #[test]
    fn closed_form_matches_its_simplification() {
        for &gt in &[0.0, 0.3, 1.0, 2.5] {
            for &theta in &[0.4, FRAC_PI_2, 2.8] {
                for &phi in &[0.0, 1.0, FRAC_PI_2, 4.4] {
                    let b = genus5_closed_form(theta, phi, gt, 1.0);
                    let envelope =
                        (-2.0 * gt).exp() * (1.0 + (-gt).exp()).powi(4) / 16.0 * theta.sin();
                    assert!((b.r_x - envelope * phi.cos()).abs() < 1e-12);
                    assert!((b.r_y + envelope * phi.sin()).abs() < 1e-12, "R_Y = -env sinφ");
                }
            }
        }
    }

    #[test]
    fn comparison_report_structure() {
        let code = genus2_unit();
        let grid = default_comparison_grid();
        assert_eq!(grid.len(), 24);
        let report = compare_closed_form_with(&code, 0, &grid).unwrap();
        assert_eq!(report.points.len(), 48, "24 points × 2 models");
        assert!(report.y_sign_aligned);
        assert_eq!(report.per_model_max.len(), 2);
        for p in &report.points {
            assert!(p.abs_dev[2] < 1e-15, "R_Z agrees identically");
            if p.point.gamma_t == 0.0 {
                assert!(p.abs_dev[0] < 1e-12 && p.abs_dev[1] < 1e-12, "ideal limit");
            }
        }
        let table = render_deviation_table(&report);
        assert!(table.lines().count() >= 48 + 2);
    }

    #[test]
    fn comparison_on_its_own_code_fails_as_shipped() {
        let err = compare_closed_form(&default_comparison_grid()).unwrap_err();
        assert!(matches!(
            err,
            DephasingError::Code(CodeError::NonCommutingGenerators { .. })
        ));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let code = genus2_unit();
        assert!(matches!(
            dephase(&code, &spec(DephasingModel::Global, -0.5, 1.0, 1.0, 1.0)).unwrap_err(),
            DephasingError::InvalidParameter { name: "gamma", .. }
        ));
        assert!(matches!(
            dephase(&code, &spec(DephasingModel::Global, 0.5, -1.0, 1.0, 1.0)).unwrap_err(),
            DephasingError::InvalidParameter { name: "t", .. }
        ));
        assert!(matches!(
            dephase(&code, &spec(DephasingModel::Global, 0.5, 1.0, 9.0, 1.0)).unwrap_err(),
            DephasingError::State(StateError::ParameterOutOfRange { name: "theta", .. })
        ));
    }
}
