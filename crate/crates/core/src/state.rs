//! Dense state-vector engine: logical-state preparation and expectations.
//!
//! A [`StateVector`] stores all `2^n` complex amplitudes. Basis index `b`
//! encodes qubit `i` (1-based) in bit `i − 1`, so qubit 1 is the lowest bit.
//! The printable bitstring form lists qubit 1 first, which reverses the
//! binary digits of the index.
//!
//! Logical zero states are built by projector products: `|0⟩_L ∝
//! Π_i (I + P_i) |0…0⟩` over the generator list (running over generators
//! rather than the full group changes only the normalization, which is
//! divided out). Computational cost is one `O(2^n)` pass per generator.

use crate::code::StabilizerCode;
use crate::pauli::PauliOperator;
use num_complex::Complex64;
use thiserror::Error;

/// Default qubit budget for dense state construction (`2^16` amplitudes,
/// about 1 MiB). Callers with more memory can pass a larger budget to the
/// `*_with_budget` variants.
pub const DEFAULT_MAX_STATE_QUBITS: usize = 16;

/// Hard ceiling for dense vectors regardless of budget: above this the
/// amplitude array would not be addressable in practice.
const ABSOLUTE_MAX_STATE_QUBITS: usize = 30;

/// Failures of state construction and measurement.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateError {
    /// Operator and state act on different qubit counts.
    #[error("operator acts on {left} qubits, state has {right}")]
    QubitCountMismatch {
        /// Operator qubit count.
        left: usize,
        /// State qubit count.
        right: usize,
    },
    /// The dense vector would exceed the configured budget.
    #[error("a dense state on {n} qubits exceeds the budget of {budget} qubits")]
    MemoryBudgetExceeded {
        /// Requested qubit count.
        n: usize,
        /// Allowed qubit count.
        budget: usize,
    },
    /// A dense vector on this many qubits is not representable.
    #[error("a dense state on {n} qubits is not representable")]
    TooManyQubits {
        /// Requested qubit count.
        n: usize,
    },
    /// Projection annihilated the state (the seed lies outside the code space).
    #[error("projection produced the zero vector; the seed state lies outside the code space")]
    ZeroVector,
    /// The code does not carry one logical pair per logical qubit.
    #[error("code needs {expected} logical pairs for a logical basis, found {found}")]
    MissingLogicalPairs {
        /// Logical qubit count `k`.
        expected: usize,
        /// Pairs actually present.
        found: usize,
    },
    /// Requested pair index does not exist.
    #[error("logical pair index {index} out of range ({count} pairs)")]
    PairIndexOutOfRange {
        /// Requested index.
        index: usize,
        /// Available pair count.
        count: usize,
    },
    /// The generated logical basis is not orthonormal, signalling
    /// inconsistent logical pairs.
    #[error("generated logical basis is not orthonormal; logical pairs are inconsistent")]
    NonOrthogonal,
    /// A real parameter lies outside its documented range.
    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange {
        /// Parameter name.
        name: &'static str,
        /// Offending value.
        value: f64,
    },
}

fn check_qubits(n: usize, budget: usize) -> Result<(), StateError> {
    if n > ABSOLUTE_MAX_STATE_QUBITS {
        return Err(StateError::TooManyQubits { n });
    }
    if n > budget {
        return Err(StateError::MemoryBudgetExceeded { n, budget });
    }
    Ok(())
}

/// Dense `2^n`-amplitude state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state `|index⟩`.
    pub fn basis_state(n: usize, index: u64) -> Result<Self, StateError> {
        check_qubits(n, ABSOLUTE_MAX_STATE_QUBITS)?;
        assert!(n >= 1, "state needs at least one qubit");
        assert!(index < (1u64 << n), "basis index out of range");
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[index as usize] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Qubit count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All `2^n` amplitudes, basis-index order.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Amplitude of basis state `index`.
    pub fn amplitude(&self, index: u64) -> Complex64 {
        self.amps[index as usize]
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Normalize in place; [`StateError::ZeroVector`] if the norm vanishes.
    pub fn normalize(&mut self) -> Result<(), StateError> {
        let norm = self.norm();
        // Amplitudes entering here are sums of unit-modulus terms, so a
        // nonzero norm is at least of order one; the threshold only has to
        // separate that from exact cancellation.
        if norm < 1e-9 {
            return Err(StateError::ZeroVector);
        }
        for a in &mut self.amps {
            *a /= norm;
        }
        Ok(())
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.n, other.n, "qubit counts must match");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Largest absolute amplitude difference against `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "qubit counts must match");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Basis indices with `|amplitude| > tol`, ascending.
    pub fn support_indices(&self, tol: f64) -> Vec<u64> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > tol)
            .map(|(i, _)| i as u64)
            .collect()
    }

    /// Nonzero amplitudes as `<bitstring> <re> <im>` lines (qubit 1 printed
    /// first, 17 significant digits), sorted by bitstring.
    pub fn dump_lines(&self) -> Vec<String> {
        let mut lines: Vec<(String, String)> = self
            .support_indices(1e-12)
            .into_iter()
            .map(|idx| {
                let bits = bitstring(idx, self.n);
                let a = self.amplitude(idx);
                let line = format!(
                    "{bits} {} {}",
                    crate::util::format_sig17(a.re),
                    crate::util::format_sig17(a.im)
                );
                (bits, line)
            })
            .collect();
        lines.sort();
        lines.into_iter().map(|(_, line)| line).collect()
    }
}

/// Printable bitstring of a basis index, qubit 1 first.
pub fn bitstring(index: u64, n: usize) -> String {
    (0..n)
        .map(|i| if (index >> i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Apply a Pauli operator: `P|s⟩` with exact phases.
pub fn apply_pauli(p: &PauliOperator, s: &StateVector) -> Result<StateVector, StateError> {
    if p.n() != s.n {
        return Err(StateError::QubitCountMismatch {
            left: p.n(),
            right: s.n,
        });
    }
    // n ≤ 30 here, so the x/z supports fit into the first 64-bit word.
    let x_mask = p.x_bits().words()[0];
    let z_mask = p.z_bits().words()[0];
    let front = match p.phase_xz() {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut out = vec![Complex64::new(0.0, 0.0); s.amps.len()];
    for (b, amp) in s.amps.iter().enumerate() {
        let sign = if (b as u64 & z_mask).count_ones() % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        out[b ^ x_mask as usize] = front * sign * amp;
    }
    Ok(StateVector { n: s.n, amps: out })
}

/// Expectation value `⟨s|P|s⟩`.
///
/// For Hermitian `P` the result is real; an imaginary residue above `1e-12`
/// indicates a bug and trips a debug assertion.
pub fn expectation(p: &PauliOperator, s: &StateVector) -> Result<Complex64, StateError> {
    if p.n() != s.n {
        return Err(StateError::QubitCountMismatch {
            left: p.n(),
            right: s.n,
        });
    }
    let x_mask = p.x_bits().words()[0] as usize;
    let z_mask = p.z_bits().words()[0];
    let front = match p.phase_xz() {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut acc = Complex64::new(0.0, 0.0);
    for (b, amp) in s.amps.iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        let sign = if (b as u64 & z_mask).count_ones() % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        acc += s.amps[b ^ x_mask].conj() * front * sign * amp;
    }
    debug_assert!(
        !p.is_hermitian() || acc.im.abs() < 1e-12,
        "Hermitian expectation must be real, got {acc}"
    );
    Ok(acc)
}

/// Logical zero state `|0⟩_L ∝ Π_i (I + P_i)|0…0⟩` under the default budget.
pub fn encode_zero(code: &StabilizerCode) -> Result<StateVector, StateError> {
    encode_zero_with_budget(code, DEFAULT_MAX_STATE_QUBITS)
}

/// [`encode_zero`] with an explicit qubit budget.
pub fn encode_zero_with_budget(
    code: &StabilizerCode,
    budget: usize,
) -> Result<StateVector, StateError> {
    check_qubits(code.n(), budget)?;
    let mut s = StateVector::basis_state(code.n(), 0)?;
    for g in code.generators() {
        let moved = apply_pauli(g, &s)?;
        for (a, b) in s.amps.iter_mut().zip(&moved.amps) {
            *a += b;
        }
    }
    s.normalize()?;
    Ok(s)
}

/// All `2^k` logical basis states under the default budget; see
/// [`logical_basis_with_budget`].
pub fn logical_basis(code: &StabilizerCode) -> Result<Vec<StateVector>, StateError> {
    logical_basis_with_budget(code, DEFAULT_MAX_STATE_QUBITS)
}

/// Logical basis `X̄_1^{b_1} … X̄_k^{b_k} |0⟩_L` for all bit vectors
/// `(b_1…b_k)` in lexicographic order (`b_1` is the most significant bit).
///
/// Requires exactly one logical pair per logical qubit. The Gram matrix is
/// verified to be the identity (tolerance `1e-10`); failure signals
/// inconsistent pairs rather than a caller error.
pub fn logical_basis_with_budget(
    code: &StabilizerCode,
    budget: usize,
) -> Result<Vec<StateVector>, StateError> {
    let k = code.logical_count();
    if code.logical_pairs().len() != k {
        return Err(StateError::MissingLogicalPairs {
            expected: k,
            found: code.logical_pairs().len(),
        });
    }
    let zero = encode_zero_with_budget(code, budget)?;
    let mut basis = Vec::with_capacity(1 << k);
    for m in 0..(1u64 << k) {
        let mut s = zero.clone();
        for i in 0..k {
            if (m >> (k - 1 - i)) & 1 == 1 {
                s = apply_pauli(&code.logical_pairs()[i].x_bar, &s)?;
            }
        }
        basis.push(s);
    }
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let g = basis[i].inner(&basis[j]);
            let target = if i == j { 1.0 } else { 0.0 };
            if (g - target).norm() > 1e-10 {
                return Err(StateError::NonOrthogonal);
            }
        }
    }
    Ok(basis)
}

/// Bloch state `cos(θ/2)|0⟩_L + e^{iφ} sin(θ/2)|1⟩_L` where
/// `|1⟩_L = X̄_{pair_index}|0⟩_L`.
pub fn logical_state(
    code: &StabilizerCode,
    pair_index: usize,
    theta: f64,
    phi: f64,
) -> Result<StateVector, StateError> {
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(StateError::ParameterOutOfRange {
            name: "theta",
            value: theta,
        });
    }
    if !(0.0..=2.0 * std::f64::consts::PI).contains(&phi) {
        return Err(StateError::ParameterOutOfRange {
            name: "phi",
            value: phi,
        });
    }
    let count = code.logical_pairs().len();
    if pair_index >= count {
        return Err(StateError::PairIndexOutOfRange {
            index: pair_index,
            count,
        });
    }
    let zero = encode_zero(code)?;
    let one = apply_pauli(&code.logical_pairs()[pair_index].x_bar, &zero)?;
    let c0 = Complex64::new((theta / 2.0).cos(), 0.0);
    let c1 = Complex64::from_polar((theta / 2.0).sin(), phi);
    let amps = zero
        .amps
        .iter()
        .zip(&one.amps)
        .map(|(a, b)| c0 * a + c1 * b)
        .collect();
    let mut s = StateVector { n: zero.n, amps };
    s.normalize()?;
    Ok(s)
}
