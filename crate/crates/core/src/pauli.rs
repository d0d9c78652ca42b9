//! Exact n-qubit Pauli-group arithmetic in binary symplectic representation.
//!
//! # Representation
//!
//! An operator is stored as two length-`n` bit vectors plus a phase exponent:
//!
//! ```text
//! P = i^phase · ⊗_j σ_j,   σ_j ∈ {I, X, Y, Z}
//! ```
//!
//! where qubit `j` carries `X` iff `x[j]=1, z[j]=0`; `Z` iff `x=0, z=1`;
//! `Y` iff both are set; `I` iff neither. The phase is a power of `i`
//! (0 ↦ +1, 1 ↦ +i, 2 ↦ −1, 3 ↦ −i) attached to the *sigma form* above, so
//! Hermitian operators are exactly those with phase 0 or 2.
//!
//! # Phase arithmetic
//!
//! Multiplication works in the XZ normal form `i^e · X(x)Z(z)`. Converting
//! between the two forms costs `e = phase + |x ∧ z| (mod 4)` because
//! `Y = i·X·Z` on each qubit. Moving `Z(z₁)` past `X(x₂)` contributes
//! `(−1)^{|z₁ ∧ x₂|}`, so products are exact:
//!
//! ```text
//! e(PQ) = e(P) + e(Q) + 2·|z₁ ∧ x₂|  (mod 4)
//! ```
//!
//! The single-qubit convention this fixes is `XZ = −iY`, `ZX = +iY`.
//!
//! # Text grammar
//!
//! `pauli := sign? term+` with `sign ∈ {+, -, +i, -i}` and
//! `term := ("X"|"Y"|"Z") digit+`, indices 1-based, optional whitespace
//! between tokens. Repeated indices multiply in reading order. The empty
//! string parses as the identity; as an extension, a bare `I` (optionally
//! signed, optionally indexed) is also accepted so that the canonical form of
//! the identity round-trips.

use crate::bits::BitVec;
use thiserror::Error;

/// Errors from Pauli parsing and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    /// The qubit count must be at least 1.
    #[error("qubit count must be at least 1")]
    InvalidQubitCount,
    /// The text did not match the Pauli grammar.
    #[error("malformed Pauli token at byte {position}: expected {expected}, found {found:?}")]
    MalformedToken {
        /// Byte offset of the offending character.
        position: usize,
        /// What the grammar required at this point.
        expected: &'static str,
        /// What was actually found (empty at end of input).
        found: String,
    },
    /// A term used a qubit index outside `1..=n`.
    #[error("qubit index {index} out of range 1..={n}")]
    IndexOutOfRange {
        /// The 1-based index that was parsed.
        index: usize,
        /// The qubit count of the operator being built.
        n: usize,
    },
    /// Two operands act on different numbers of qubits.
    #[error("qubit counts differ: {left} vs {right}")]
    QubitCountMismatch {
        /// Qubit count of the left operand.
        left: usize,
        /// Qubit count of the right operand.
        right: usize,
    },
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliLetter {
    /// Identity factor.
    I,
    /// Bit flip.
    X,
    /// Bit and phase flip.
    Y,
    /// Phase flip.
    Z,
}

/// An n-qubit Pauli operator with exact phase.
///
/// Immutable after construction; cheap to clone and safe to share across
/// threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    x: BitVec,
    z: BitVec,
    /// Power of `i` in the sigma form (see module docs).
    phase: u8,
}

impl PauliOperator {
    /// Identity on `n` qubits (n ≥ 1).
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "qubit count must be at least 1");
        Self {
            n,
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase: 0,
        }
    }

    /// Build from raw bit vectors and a sigma-form phase exponent.
    ///
    /// Both vectors must have equal, nonzero width.
    pub fn from_parts(x: BitVec, z: BitVec, phase: u8) -> Result<Self, PauliError> {
        if x.is_empty() {
            return Err(PauliError::InvalidQubitCount);
        }
        if x.len() != z.len() {
            return Err(PauliError::QubitCountMismatch {
                left: x.len(),
                right: z.len(),
            });
        }
        Ok(Self {
            n: x.len(),
            x,
            z,
            phase: phase & 3,
        })
    }

    /// Parse a Pauli string over `n` qubits (grammar in the module docs).
    pub fn parse(text: &str, n: usize) -> Result<Self, PauliError> {
        if n == 0 {
            return Err(PauliError::InvalidQubitCount);
        }
        let bytes = text.as_bytes();
        let mut i = 0usize;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };

        skip_ws(&mut i);
        // Optional sign token: +, -, +i, -i. Accumulated as a power of i in
        // XZ form (the whole-operator scalar is form-independent).
        let mut phase_xz: u8 = 0;
        let mut saw_sign = false;
        if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            saw_sign = true;
            let neg = bytes[i] == b'-';
            i += 1;
            let imag = i < bytes.len() && bytes[i] == b'i';
            if imag {
                i += 1;
            }
            phase_xz = match (neg, imag) {
                (false, false) => 0,
                (false, true) => 1,
                (true, false) => 2,
                (true, true) => 3,
            };
        }

        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        let mut saw_term = false;
        loop {
            skip_ws(&mut i);
            if i >= bytes.len() {
                break;
            }
            let letter = match bytes[i] {
                b'X' => PauliLetter::X,
                b'Y' => PauliLetter::Y,
                b'Z' => PauliLetter::Z,
                b'I' => PauliLetter::I,
                other => {
                    return Err(PauliError::MalformedToken {
                        position: i,
                        expected: "one of X, Y, Z, I",
                        found: (other as char).to_string(),
                    });
                }
            };
            let letter_pos = i;
            i += 1;
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index: Option<usize> = if i > digits_start {
                let parsed = text[digits_start..i].parse::<usize>().map_err(|_| {
                    PauliError::MalformedToken {
                        position: digits_start,
                        expected: "a qubit index that fits in a machine word",
                        found: text[digits_start..i].to_string(),
                    }
                })?;
                Some(parsed)
            } else {
                None
            };

            match (letter, index) {
                // A bare identity token (with or without index) is a no-op,
                // accepted so "I" and "-I" round-trip.
                (PauliLetter::I, idx) => {
                    if let Some(q) = idx {
                        if q < 1 || q > n {
                            return Err(PauliError::IndexOutOfRange { index: q, n });
                        }
                    }
                    saw_term = true;
                }
                (_, None) => {
                    return Err(PauliError::MalformedToken {
                        position: letter_pos,
                        expected: "a 1-based qubit index after the letter",
                        found: text[letter_pos..(letter_pos + 1).min(text.len())].to_string(),
                    });
                }
                (letter, Some(q)) => {
                    if q < 1 || q > n {
                        return Err(PauliError::IndexOutOfRange { index: q, n });
                    }
                    let b = q - 1;
                    let (tx, tz, t_phase): (bool, bool, u8) = match letter {
                        PauliLetter::X => (true, false, 0),
                        PauliLetter::Z => (false, true, 0),
                        PauliLetter::Y => (true, true, 1), // Y = i·X·Z
                        PauliLetter::I => unreachable!(),
                    };
                    // Right-multiply the accumulated X(x)Z(z) by the new term:
                    // moving the term's X past the accumulated Z costs a sign
                    // when z[b] is set.
                    if tx && z.get(b) {
                        phase_xz = (phase_xz + 2) & 3;
                    }
                    phase_xz = (phase_xz + t_phase) & 3;
                    if tx {
                        x.flip(b);
                    }
                    if tz {
                        z.flip(b);
                    }
                    saw_term = true;
                }
            }
        }

        if saw_sign && !saw_term {
            return Err(PauliError::MalformedToken {
                position: bytes.len(),
                expected: "at least one term after the sign",
                found: String::new(),
            });
        }

        let y_count = (x.and_popcount(&z) % 4) as u8;
        let phase = (phase_xz + 4 - y_count) & 3;
        Ok(Self { n, x, z, phase })
    }

    /// Qubit count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// X bit vector (bit `j` set iff qubit `j+1` carries X or Y).
    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    /// Z bit vector (bit `j` set iff qubit `j+1` carries Z or Y).
    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    /// Phase exponent: the operator equals `i^phase` times a tensor product
    /// of `{I, X, Y, Z}` letters.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// Phase exponent in XZ normal form: `P = i^phase_xz · X(x) Z(z)`.
    pub(crate) fn phase_xz(&self) -> u8 {
        (self.phase + (self.x.and_popcount(&self.z) % 4) as u8) & 3
    }

    /// Letter on the given 1-based qubit.
    pub fn letter(&self, qubit: usize) -> PauliLetter {
        assert!(
            (1..=self.n).contains(&qubit),
            "qubit {qubit} out of range 1..={}",
            self.n
        );
        let b = qubit - 1;
        match (self.x.get(b), self.z.get(b)) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> usize {
        self.x.or_popcount(&self.z) as usize
    }

    /// True when every factor is the identity (any phase).
    pub fn is_identity_pattern(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// True when the operator is Hermitian (phase is ±1).
    pub fn is_hermitian(&self) -> bool {
        self.phase & 1 == 0
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self, PauliError> {
        if self.n != other.n {
            return Err(PauliError::QubitCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let cross = if self.z.and_parity(&other.x) { 2u8 } else { 0 };
        let e = (self.phase_xz() + other.phase_xz() + cross) & 3;
        let mut x = self.x.clone();
        x.xor_assign(&other.x);
        let mut z = self.z.clone();
        z.xor_assign(&other.z);
        let y_count = (x.and_popcount(&z) % 4) as u8;
        let phase = (e + 4 - y_count) & 3;
        Ok(Self {
            n: self.n,
            x,
            z,
            phase,
        })
    }

    /// Whether the two operators commute (phases are irrelevant).
    ///
    /// `P` and `Q` commute iff the symplectic product
    /// `|x_P ∧ z_Q| + |z_P ∧ x_Q|` is even.
    pub fn commutes_with(&self, other: &Self) -> Result<bool, PauliError> {
        if self.n != other.n {
            return Err(PauliError::QubitCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.x.and_parity(&other.z) == self.z.and_parity(&other.x))
    }

    /// Canonical text form: factors ordered by qubit index, `Y` printed as
    /// `Y`, a sign prefix only when the phase differs from +1, and `I` for
    /// the identity pattern.
    pub fn canonical_string(&self) -> String {
        let mut s = String::new();
        match self.phase {
            0 => {}
            1 => s.push_str("+i"),
            2 => s.push('-'),
            3 => s.push_str("-i"),
            _ => unreachable!(),
        }
        let mut any = false;
        for q in 1..=self.n {
            let c = match self.letter(q) {
                PauliLetter::I => continue,
                PauliLetter::X => 'X',
                PauliLetter::Y => 'Y',
                PauliLetter::Z => 'Z',
            };
            s.push(c);
            s.push_str(&q.to_string());
            any = true;
        }
        if !any {
            s.push('I');
        }
        s
    }
}

impl std::fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl std::fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Pauli({} on {} qubits)", self.canonical_string(), self.n)
    }
}
