//! Code distance by two independent routes, with cross-validation.
//!
//! * **Knill–Laflamme route** ([`kl_distance`]): for each candidate error `E`
//!   the matrix `M_ij = ⟨i_L|E|j_L⟩` over the logical basis is computed from
//!   dense state vectors; `E` is *violating* when `M` is not proportional to
//!   the identity (tolerance `1e-10`). The distance is the least weight with
//!   a violating error.
//! * **Symplectic route** ([`symplectic_distance`]): a candidate is violating
//!   when it commutes with every generator yet its `(x|z)` pattern lies
//!   outside the generator row space — the classic "normalizer minus
//!   stabilizer" criterion. Membership is *pattern-level* deliberately: an
//!   operator equal to ±(a stabilizer) acts as ±1 on the code space, so its
//!   sign never makes it logical.
//!
//! Both routes enumerate single Pauli errors, not error pairs `E_a†E_b`: any
//! such product of weight `w` is itself a Pauli of weight ≤ `w`, so the
//! single-Pauli sweep is exhaustive for the same bound.
//!
//! Enumeration order is deterministic and shared by both routes: weight-major,
//! then lexicographic over qubit subsets (1-based, ascending), then over
//! per-qubit letters in `X < Z < Y` order with the *first* subset qubit most
//! significant. Witnesses are therefore reproducible, and the two routes must
//! return identical witnesses and identical `errors_examined` counts — any
//! discrepancy is a hard [`DistanceError::MethodDisagreement`].
//!
//! The weight-`w` layer is scanned in parallel chunks; the reported hit is
//! the first in enumeration order regardless of worker count.

use crate::bits::BitVec;
use crate::code::{CodeDefinition, StabilizerCode};
use crate::pauli::PauliOperator;
use crate::state::{logical_basis, StateError, StateVector};
use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

/// Which route produced a [`DistanceResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMethod {
    /// Knill–Laflamme matrix test over the logical basis.
    Kl,
    /// Symplectic normalizer-minus-stabilizer search.
    Symplectic,
    /// Both routes, cross-validated.
    Both,
}

impl std::fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DistanceMethod::Kl => "kl",
            DistanceMethod::Symplectic => "symplectic",
            DistanceMethod::Both => "both",
        })
    }
}

/// Outcome of a distance search.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceResult {
    /// The code distance: least weight of a violating error.
    pub d: usize,
    /// Route that produced the result.
    pub method: DistanceMethod,
    /// First violating error in enumeration order; `witness.weight() == d`.
    pub witness: PauliOperator,
    /// Largest weight that was (perhaps partially) examined.
    pub checked_up_to: usize,
    /// Number of candidate errors tested, witness included.
    pub errors_examined: u64,
}

/// Knill–Laflamme test data for a single error.
#[derive(Debug, Clone, PartialEq)]
pub struct KlCheck {
    /// True when `M` is not proportional to the identity.
    pub violating: bool,
    /// The matrix `M_ij = ⟨i_L|E|j_L⟩`, dimension `2^k`.
    pub matrix: Vec<Vec<Complex64>>,
}

/// Failures of the distance searches.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum DistanceError {
    /// Every candidate up to the bound was examined without a violation.
    #[error("no violating error of weight ≤ {max_weight} exists ({errors_examined} candidates examined)")]
    NoViolationFound {
        /// The search bound.
        max_weight: usize,
        /// Candidates examined across all weights.
        errors_examined: u64,
    },
    /// The weight bound must satisfy `1 ≤ max_weight ≤ n`.
    #[error("max weight {max_weight} invalid for {n} qubits (need 1 ≤ w ≤ n)")]
    InvalidMaxWeight {
        /// Requested bound.
        max_weight: usize,
        /// Qubit count.
        n: usize,
    },
    /// The pattern search packs supports into 64-bit words.
    #[error("distance search supports at most 64 qubits, got {n}")]
    TooManyQubits {
        /// Qubit count.
        n: usize,
    },
    /// The definition handed to the raw normalizer search is malformed.
    #[error("invalid definition: {0}")]
    InvalidDefinition(String),
    /// The two routes disagreed — an implementation bug or inconsistent input.
    #[error("distance methods disagree: kl found d={} ({}), symplectic found d={} ({})",
        kl.d, kl.witness, symplectic.d, symplectic.witness)]
    MethodDisagreement {
        /// Knill–Laflamme result.
        kl: Box<DistanceResult>,
        /// Symplectic result.
        symplectic: Box<DistanceResult>,
    },
    /// State-engine failure in the Knill–Laflamme route.
    #[error(transparent)]
    State(#[from] StateError),
}

const SCALAR_TOL: f64 = 1e-10;
const CHUNK: u128 = 4096;

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn pow3(w: usize) -> u128 {
    3u128.pow(w as u32)
}

/// Enumeration cursor over weight-`w` Paulis on `n` qubits.
///
/// `subset` holds 0-based qubit positions ascending; `letters[pos]` is the
/// letter on `subset[pos]` (0 = X, 1 = Z, 2 = Y) with position 0 most
/// significant, so the letter block for a fixed subset counts in base 3.
struct Cursor {
    n: usize,
    subset: Vec<usize>,
    letters: Vec<u8>,
    x: u64,
    z: u64,
}

impl Cursor {
    fn unrank(n: usize, w: usize, rank: u128) -> Self {
        let letters_total = pow3(w);
        let mut subset_rank = rank / letters_total;
        let mut letter_rank = rank % letters_total;

        let mut subset = Vec::with_capacity(w);
        let mut start = 0;
        for pos in 0..w {
            for c in start..n {
                let here = binom(n - 1 - c, w - 1 - pos);
                if subset_rank < here {
                    subset.push(c);
                    start = c + 1;
                    break;
                }
                subset_rank -= here;
            }
        }
        debug_assert_eq!(subset.len(), w, "subset rank in range");

        let mut letters = vec![0u8; w];
        for pos in (0..w).rev() {
            letters[pos] = (letter_rank % 3) as u8;
            letter_rank /= 3;
        }

        let mut cur = Self {
            n,
            subset,
            letters,
            x: 0,
            z: 0,
        };
        cur.rebuild_masks();
        cur
    }

    fn rebuild_masks(&mut self) {
        self.x = 0;
        self.z = 0;
        for (pos, &q) in self.subset.iter().enumerate() {
            let bit = 1u64 << q;
            match self.letters[pos] {
                0 => self.x |= bit,
                1 => self.z |= bit,
                _ => {
                    self.x |= bit;
                    self.z |= bit;
                }
            }
        }
    }

    fn advance(&mut self) {
        let w = self.subset.len();
        let mut pos = w;
        loop {
            if pos == 0 {
                self.next_subset();
                break;
            }
            pos -= 1;
            if self.letters[pos] < 2 {
                self.letters[pos] += 1;
                break;
            }
            self.letters[pos] = 0;
        }
        self.rebuild_masks();
    }

    fn next_subset(&mut self) {
        let w = self.subset.len();
        let mut i = w;
        while i > 0 {
            i -= 1;
            if self.subset[i] != self.n - w + i {
                self.subset[i] += 1;
                for j in i + 1..w {
                    self.subset[j] = self.subset[j - 1] + 1;
                }
                return;
            }
        }
        // Past the final combination; the caller stops before using this.
    }
}

/// Scan one weight layer in parallel; first hit in enumeration order.
fn scan_weight<F>(n: usize, w: usize, total: u128, test: &F) -> Option<(u128, u64, u64)>
where
    F: Fn(u64, u64) -> bool + Sync,
{
    let chunks = total.div_ceil(CHUNK) as u64;
    (0..chunks).into_par_iter().find_map_first(|ci| {
        let start = ci as u128 * CHUNK;
        let end = (start + CHUNK).min(total);
        let mut cur = Cursor::unrank(n, w, start);
        let mut g = start;
        loop {
            if test(cur.x, cur.z) {
                return Some((g, cur.x, cur.z));
            }
            g += 1;
            if g == end {
                return None;
            }
            cur.advance();
        }
    })
}

fn pauli_from_masks(n: usize, x: u64, z: u64) -> PauliOperator {
    let xb = BitVec::from_indices(n, (0..n).filter(|&i| (x >> i) & 1 == 1));
    let zb = BitVec::from_indices(n, (0..n).filter(|&i| (z >> i) & 1 == 1));
    PauliOperator::from_parts(xb, zb, 0).expect("masks fit the qubit count")
}

/// Weight-major deterministic search shared by both routes.
fn min_weight_search<F>(
    n: usize,
    max_weight: usize,
    method: DistanceMethod,
    test: F,
) -> Result<DistanceResult, DistanceError>
where
    F: Fn(u64, u64) -> bool + Sync,
{
    if max_weight < 1 || max_weight > n {
        return Err(DistanceError::InvalidMaxWeight { max_weight, n });
    }
    let mut examined: u64 = 0;
    for w in 1..=max_weight {
        let total = binom(n, w) * pow3(w);
        if let Some((rank, x, z)) = scan_weight(n, w, total, &test) {
            return Ok(DistanceResult {
                d: w,
                method,
                witness: pauli_from_masks(n, x, z),
                checked_up_to: w,
                errors_examined: examined.saturating_add(rank as u64).saturating_add(1),
            });
        }
        examined = examined.saturating_add(total.min(u64::MAX as u128) as u64);
    }
    Err(DistanceError::NoViolationFound {
        max_weight,
        errors_examined: examined,
    })
}

/// Generator `(x, z)` masks plus a reduced row basis of combined
/// `x | z << n` patterns, for fast commutation and membership tests.
struct SymplecticTables {
    gens: Vec<(u64, u64)>,
    rows: Vec<(u32, u128)>,
}

impl SymplecticTables {
    fn new(n: usize, generators: &[PauliOperator]) -> Self {
        let mut tables = Self {
            gens: Vec::with_capacity(generators.len()),
            rows: Vec::new(),
        };
        for g in generators {
            let gx = g.x_bits().words()[0];
            let gz = g.z_bits().words()[0];
            tables.gens.push((gx, gz));
            tables.insert_row((gx as u128) | ((gz as u128) << n));
        }
        tables
    }

    fn insert_row(&mut self, mut v: u128) {
        for &(pivot, row) in &self.rows {
            if (v >> pivot) & 1 == 1 {
                v ^= row;
            }
        }
        if v != 0 {
            self.rows.push((127 - v.leading_zeros(), v));
        }
    }

    fn commutes_with_all(&self, x: u64, z: u64) -> bool {
        self.gens.iter().all(|&(gx, gz)| {
            ((x & gz).count_ones() ^ (z & gx).count_ones()) & 1 == 0
        })
    }

    fn pattern_in_row_space(&self, n: usize, x: u64, z: u64) -> bool {
        let mut v = (x as u128) | ((z as u128) << n);
        for &(pivot, row) in &self.rows {
            if (v >> pivot) & 1 == 1 {
                v ^= row;
            }
        }
        v == 0
    }
}

/// Dense logical basis with per-state support lists for sparse sums.
struct KlBasis {
    basis: Vec<StateVector>,
    supports: Vec<Vec<u64>>,
}

impl KlBasis {
    fn new(code: &StabilizerCode) -> Result<Self, DistanceError> {
        let basis = logical_basis(code)?;
        let supports = basis.iter().map(|s| s.support_indices(1e-14)).collect();
        Ok(Self { basis, supports })
    }

    /// `M_ij = ⟨i_L|E|j_L⟩` for `E` given by masks with `i^y` front phase.
    fn entry(&self, i: usize, j: usize, x: u64, z: u64, front: Complex64) -> Complex64 {
        self.supports[j]
            .iter()
            .map(|&b| {
                let sign = if (b & z).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                self.basis[i].amplitude(b ^ x).conj() * front * sign * self.basis[j].amplitude(b)
            })
            .sum()
    }

    /// True when `M` deviates from every scalar multiple of the identity.
    fn violates(&self, x: u64, z: u64) -> bool {
        let front = phase_front((x & z).count_ones());
        let dim = self.basis.len();
        let c = self.entry(0, 0, x, z, front);
        for i in 0..dim {
            for j in 0..dim {
                let target = if i == j { c } else { Complex64::new(0.0, 0.0) };
                if (self.entry(i, j, x, z, front) - target).norm() > SCALAR_TOL {
                    return true;
                }
            }
        }
        false
    }
}

fn phase_front(y_count: u32) -> Complex64 {
    match y_count % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn check_n(n: usize) -> Result<(), DistanceError> {
    if n > 64 {
        return Err(DistanceError::TooManyQubits { n });
    }
    Ok(())
}

/// Knill–Laflamme test for one explicit error operator, with the full matrix.
pub fn kl_violates(code: &StabilizerCode, e: &PauliOperator) -> Result<KlCheck, DistanceError> {
    check_n(code.n())?;
    if e.n() != code.n() {
        return Err(StateError::QubitCountMismatch {
            left: e.n(),
            right: code.n(),
        }
        .into());
    }
    let kl = KlBasis::new(code)?;
    let x = e.x_bits().words()[0];
    let z = e.z_bits().words()[0];
    // phase_xz already counts the i per Y letter plus the operator's own sign.
    let front = phase_exponent(e);
    let dim = kl.basis.len();
    let matrix: Vec<Vec<Complex64>> = (0..dim)
        .map(|i| (0..dim).map(|j| kl.entry(i, j, x, z, front)).collect())
        .collect();
    let c = matrix[0][0];
    let violating = (0..dim).any(|i| {
        (0..dim).any(|j| {
            let target = if i == j { c } else { Complex64::new(0.0, 0.0) };
            (matrix[i][j] - target).norm() > SCALAR_TOL
        })
    });
    Ok(KlCheck { violating, matrix })
}

fn phase_exponent(p: &PauliOperator) -> Complex64 {
    match p.phase_xz() {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Distance by brute-force Knill–Laflamme verification.
pub fn kl_distance(code: &StabilizerCode, max_weight: usize) -> Result<DistanceResult, DistanceError> {
    check_n(code.n())?;
    let kl = KlBasis::new(code)?;
    min_weight_search(code.n(), max_weight, DistanceMethod::Kl, |x, z| {
        kl.violates(x, z)
    })
}

/// Distance by min-weight search over the normalizer minus the stabilizer.
pub fn symplectic_distance(
    code: &StabilizerCode,
    max_weight: usize,
) -> Result<DistanceResult, DistanceError> {
    check_n(code.n())?;
    let tables = SymplecticTables::new(code.n(), code.generators());
    min_weight_search(code.n(), max_weight, DistanceMethod::Symplectic, |x, z| {
        tables.commutes_with_all(x, z) && !tables.pattern_in_row_space(code.n(), x, z)
    })
}

/// Run both routes and insist on identical results.
pub fn cross_validate_distance(
    code: &StabilizerCode,
    max_weight: usize,
) -> Result<DistanceResult, DistanceError> {
    let kl = kl_distance(code, max_weight)?;
    let sym = symplectic_distance(code, max_weight)?;
    if kl.d != sym.d || kl.witness != sym.witness || kl.errors_examined != sym.errors_examined {
        return Err(DistanceError::MethodDisagreement {
            kl: Box::new(kl),
            symplectic: Box::new(sym),
        });
    }
    Ok(DistanceResult {
        method: DistanceMethod::Both,
        ..sym
    })
}

/// Min-weight Pauli commuting with every *listed* generator of an
/// **unvalidated** definition, with pattern outside the listed row space.
///
/// This is the symplectic search running directly on raw generator lists —
/// including non-abelian ones a [`StabilizerCode`] would reject — so it can
/// characterize what a layout's commutant looks like even when the layout
/// fails validation. For a valid code it coincides with
/// [`symplectic_distance`].
pub fn normalizer_search(
    def: &CodeDefinition,
    max_weight: usize,
) -> Result<DistanceResult, DistanceError> {
    check_n(def.n)?;
    if def.n == 0 {
        return Err(DistanceError::InvalidDefinition(
            "qubit count must be at least 1".into(),
        ));
    }
    if let Some(bad) = def.generators.iter().find(|g| g.n() != def.n) {
        return Err(DistanceError::InvalidDefinition(format!(
            "generator {} acts on {} qubits, expected {}",
            bad.canonical_string(),
            bad.n(),
            def.n
        )));
    }
    let tables = SymplecticTables::new(def.n, &def.generators);
    min_weight_search(def.n, max_weight, DistanceMethod::Symplectic, |x, z| {
        tables.commutes_with_all(x, z) && !tables.pattern_in_row_space(def.n, x, z)
    })
}
