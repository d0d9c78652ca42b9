//! Stabilizer-code objects and structural validation.
//!
//! Two levels are deliberately distinguished:
//!
//! * [`CodeDefinition`] — a plain, always-constructible description: name,
//!   qubit count, generator list, optional logical pairs, optional expected
//!   parameters, optional path-operator metadata. Nothing is checked, so a
//!   definition can hold a generator set that is *not* a valid stabilizer
//!   group; [`validate_definition`] produces a full diagnostic report for
//!   exactly that situation.
//! * [`StabilizerCode`] — a definition that passed construction-time
//!   validation (uniform qubit counts, phase-+1 generators, pairwise
//!   commutation, path operators commuting with every generator). All
//!   downstream analysis (state preparation, distance, dephasing) requires a
//!   built code, which is what makes their preconditions sound.
//!
//! Membership queries use a cached GF(2) row-echelon form of the generators'
//! symplectic `(x|z)` rows, so each query costs one reduction rather than a
//! fresh elimination. Phase-sensitive membership additionally accounts for
//! sign-carrying dependencies among generators (a dependent generator product
//! can equal −identity even when every listed generator is phase-+1).

use crate::bits::{BitVec, Echelon};
use crate::pauli::{PauliError, PauliOperator};
use thiserror::Error;

/// Code parameters `[[n, k, d]]` plus optional layout metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParameters {
    /// Physical (data) qubit count.
    pub n: usize,
    /// Logical qubit count.
    pub k: usize,
    /// Code distance.
    pub d: usize,
    /// Ancilla count of the measurement layout, when known.
    pub m: Option<usize>,
    /// Family index (grid size `p` or chain length `q`), when applicable.
    pub family_index: Option<usize>,
}

impl CodeParameters {
    /// Encoding rate `k/n` as an exact reduced fraction `(numerator, denominator)`.
    pub fn encoding_rate(&self) -> (u64, u64) {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let (k, n) = (self.k as u64, self.n as u64);
        assert!(n > 0, "qubit count must be positive");
        let g = gcd(k, n).max(1);
        (k / g, n / g)
    }
}

/// A conjugate pair of logical operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalPair {
    /// Logical X: commutes with every generator, anticommutes with `z_bar`.
    pub x_bar: PauliOperator,
    /// Logical Z: commutes with every generator, anticommutes with `x_bar`.
    pub z_bar: PauliOperator,
}

/// Unvalidated description of a stabilizer code.
///
/// See the module docs for the definition/built-code split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeDefinition {
    /// Catalog or user-supplied identifier.
    pub name: String,
    /// Data qubit count.
    pub n: usize,
    /// Stabilizer generators in their defining order.
    pub generators: Vec<PauliOperator>,
    /// Logical pairs in their defining order (possibly empty).
    pub logical_pairs: Vec<LogicalPair>,
    /// Expected parameters, when the layout claims them.
    pub expected: Option<CodeParameters>,
    /// Genus label of the layout this code was read off from.
    pub genus: Option<usize>,
    /// Candidate logical-X path operators (layout metadata).
    pub x_paths: Vec<PauliOperator>,
    /// Candidate logical-Z path operators (layout metadata).
    pub z_paths: Vec<PauliOperator>,
}

impl CodeDefinition {
    /// Minimal definition with no pairs, expectations, or metadata.
    pub fn new(name: impl Into<String>, n: usize, generators: Vec<PauliOperator>) -> Self {
        Self {
            name: name.into(),
            n,
            generators,
            logical_pairs: Vec::new(),
            expected: None,
            genus: None,
            x_paths: Vec::new(),
            z_paths: Vec::new(),
        }
    }
}

/// Construction-time failures for [`StabilizerCode::build_from`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    /// The code's qubit count must be at least 1.
    #[error("qubit count must be at least 1")]
    InvalidQubitCount,
    /// An operator acts on the wrong number of qubits.
    #[error("{context} acts on {found} qubits, expected {expected}")]
    QubitCountMismatch {
        /// Which operator (e.g. "generator 3").
        context: String,
        /// Required qubit count.
        expected: usize,
        /// Actual qubit count.
        found: usize,
    },
    /// A generator carries a phase other than +1.
    #[error("generator {index} ({op}) carries a phase other than +1")]
    PhasefulGenerator {
        /// Zero-based position in the generator list.
        index: usize,
        /// Canonical string of the offending generator.
        op: String,
    },
    /// Two generators anticommute; a stabilizer group must be abelian.
    #[error("generators {i} ({gi}) and {j} ({gj}) anticommute")]
    NonCommutingGenerators {
        /// Zero-based index of the first offender.
        i: usize,
        /// Zero-based index of the second offender.
        j: usize,
        /// Canonical string of generator `i`.
        gi: String,
        /// Canonical string of generator `j`.
        gj: String,
    },
    /// A stored path operator anticommutes with a generator.
    #[error("{kind} path {path_index} ({path}) anticommutes with generator {gen_index} ({gen})")]
    PathDoesNotCommute {
        /// "X" or "Z".
        kind: &'static str,
        /// Zero-based index into the path list.
        path_index: usize,
        /// Canonical string of the path operator.
        path: String,
        /// Zero-based index of the generator it fails against.
        gen_index: usize,
        /// Canonical string of that generator.
        gen: String,
    },
    /// Requested group enumeration exceeds the caller's cap.
    #[error("stabilizer group too large: 2^{rank} elements exceed the cap of {cap}")]
    GroupTooLarge {
        /// GF(2) rank of the generator set.
        rank: usize,
        /// Maximum element count the caller allowed.
        cap: u64,
    },
}

/// Per-pair outcome of logical-pair validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    /// Zero-based index of the pair.
    pub index: usize,
    /// True when every check below passed.
    pub pass: bool,
    /// Human-readable descriptions of each failed check (empty on pass).
    pub failures: Vec<String>,
}

/// Result of validating a code's logical pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalPairReport {
    /// One entry per pair, in definition order.
    pub pairs: Vec<PairCheck>,
    /// True when every pair passed.
    pub pass: bool,
}

/// Full diagnostic report for a [`CodeDefinition`].
///
/// Unlike [`StabilizerCode::build_from`], this never fails: every check is a
/// report entry, which is what lets a command-line `verify` describe an
/// invalid generator set instead of merely refusing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionReport {
    /// Definition name.
    pub name: String,
    /// Data qubit count.
    pub n: usize,
    /// Number of listed generators.
    pub generator_count: usize,
    /// Qubit-count or phase problems that prevent further analysis of an
    /// operator (empty for any well-formed document).
    pub structural_errors: Vec<String>,
    /// True when all generator pairs commute.
    pub generators_commute: bool,
    /// Zero-based index pairs `(i, j)` of anticommuting generators.
    pub noncommuting_pairs: Vec<(usize, usize)>,
    /// GF(2) rank of the symplectic generator matrix.
    pub rank: usize,
    /// Logical qubit count `n − rank`.
    pub k: usize,
    /// Ground-space degeneracy `2^k`, when it fits in 128 bits.
    pub degeneracy: Option<u128>,
    /// Logical-pair validation outcome.
    pub pair_report: LogicalPairReport,
    /// Path operators that fail to commute with some generator.
    pub path_failures: Vec<String>,
    /// Whether computed `(n, k)` match the definition's expected parameters
    /// (`None` when the definition claims none).
    pub expected_match: Option<bool>,
    /// Overall verdict: no structural errors, generators commute, pairs and
    /// paths pass, and expectations (if any) match.
    pub pass: bool,
}

/// A validated stabilizer code with cached GF(2) structure.
#[derive(Debug, Clone)]
pub struct StabilizerCode {
    def: CodeDefinition,
    echelon: Echelon,
    /// For each kernel element of the generator matrix, the sigma-form phase
    /// of the corresponding generator product (0 ↦ +1, 2 ↦ −1).
    kernel_phases: Vec<(BitVec, u8)>,
}

/// Concatenated symplectic row `(x | z)` of an operator, width `2n`.
fn symplectic_row(p: &PauliOperator) -> BitVec {
    let n = p.n();
    let mut row = BitVec::zeros(2 * n);
    for i in p.x_bits().ones() {
        row.set(i, true);
    }
    for i in p.z_bits().ones() {
        row.set(n + i, true);
    }
    row
}

/// Product of `generators[i]` over the set bits of `combo`, in ascending
/// index order.
fn combo_product(n: usize, generators: &[PauliOperator], combo: &BitVec) -> PauliOperator {
    let mut acc = PauliOperator::identity(n);
    for i in combo.ones() {
        acc = acc
            .multiply(&generators[i])
            .expect("qubit counts validated at build");
    }
    acc
}

impl StabilizerCode {
    /// Validate a definition and build the code.
    ///
    /// Checks, in order: `n ≥ 1`; every generator, logical-pair member, and
    /// path operator acts on exactly `n` qubits; every generator has phase
    /// +1; all generator pairs commute (the first offending pair in scan
    /// order is reported); every stored path operator commutes with every
    /// generator. Logical-pair *quality* (anticommutation, group membership)
    /// is reported by [`StabilizerCode::validate_logical_pairs`] rather than
    /// gated here.
    pub fn build_from(def: CodeDefinition) -> Result<Self, CodeError> {
        if def.n == 0 {
            return Err(CodeError::InvalidQubitCount);
        }
        let check_count = |context: String, op: &PauliOperator| {
            if op.n() != def.n {
                Err(CodeError::QubitCountMismatch {
                    context,
                    expected: def.n,
                    found: op.n(),
                })
            } else {
                Ok(())
            }
        };
        for (i, g) in def.generators.iter().enumerate() {
            check_count(format!("generator {i}"), g)?;
            if g.phase() != 0 {
                return Err(CodeError::PhasefulGenerator {
                    index: i,
                    op: g.canonical_string(),
                });
            }
        }
        for (i, pair) in def.logical_pairs.iter().enumerate() {
            check_count(format!("logical pair {i} x"), &pair.x_bar)?;
            check_count(format!("logical pair {i} z"), &pair.z_bar)?;
        }
        for (i, p) in def.x_paths.iter().enumerate() {
            check_count(format!("x path {i}"), p)?;
        }
        for (i, p) in def.z_paths.iter().enumerate() {
            check_count(format!("z path {i}"), p)?;
        }

        for i in 0..def.generators.len() {
            for j in (i + 1)..def.generators.len() {
                let commute = def.generators[i]
                    .commutes_with(&def.generators[j])
                    .expect("qubit counts checked above");
                if !commute {
                    return Err(CodeError::NonCommutingGenerators {
                        i,
                        j,
                        gi: def.generators[i].canonical_string(),
                        gj: def.generators[j].canonical_string(),
                    });
                }
            }
        }

        for (kind, paths) in [("X", &def.x_paths), ("Z", &def.z_paths)] {
            for (pi, path) in paths.iter().enumerate() {
                for (gi, g) in def.generators.iter().enumerate() {
                    if !path.commutes_with(g).expect("counts checked") {
                        return Err(CodeError::PathDoesNotCommute {
                            kind,
                            path_index: pi,
                            path: path.canonical_string(),
                            gen_index: gi,
                            gen: g.canonical_string(),
                        });
                    }
                }
            }
        }

        let mut echelon = Echelon::new(2 * def.n);
        for g in &def.generators {
            echelon.insert(&symplectic_row(g));
        }
        let kernel_phases = echelon
            .kernel()
            .map(|combo| {
                let prod = combo_product(def.n, &def.generators, &combo);
                debug_assert!(prod.is_identity_pattern());
                debug_assert!(
                    prod.is_hermitian(),
                    "commuting phase-+1 generators can only produce ±identity"
                );
                let phase = prod.phase();
                (combo, phase)
            })
            .collect();

        Ok(Self {
            def,
            echelon,
            kernel_phases,
        })
    }

    /// Convenience constructor from parts.
    pub fn build(
        name: impl Into<String>,
        n: usize,
        generators: Vec<PauliOperator>,
        logical_pairs: Vec<LogicalPair>,
        expected: Option<CodeParameters>,
    ) -> Result<Self, CodeError> {
        let mut def = CodeDefinition::new(name, n, generators);
        def.logical_pairs = logical_pairs;
        def.expected = expected;
        Self::build_from(def)
    }

    /// The underlying definition.
    pub fn definition(&self) -> &CodeDefinition {
        &self.def
    }

    /// Code name.
    pub fn name(&self) -> &str {
        &self.def.name
    }

    /// Data qubit count.
    pub fn n(&self) -> usize {
        self.def.n
    }

    /// Stabilizer generators in definition order.
    pub fn generators(&self) -> &[PauliOperator] {
        &self.def.generators
    }

    /// Logical pairs in definition order.
    pub fn logical_pairs(&self) -> &[LogicalPair] {
        &self.def.logical_pairs
    }

    /// Expected parameters, when the definition claims them.
    pub fn expected(&self) -> Option<&CodeParameters> {
        self.def.expected.as_ref()
    }

    /// GF(2) rank of the symplectic generator matrix. Redundant generators
    /// are tolerated; they simply do not increase the rank.
    pub fn generator_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Number of logical qubits, `k = n − rank`.
    pub fn logical_count(&self) -> usize {
        self.def.n - self.echelon.rank()
    }

    /// Ground-space degeneracy of the generator Hamiltonian.
    ///
    /// The joint +1 eigenspace of commuting phase-+1 Paulis has dimension
    /// `Tr Π_i (I + P_i)/2 = 2^(n − rank)`: expanding the projector product
    /// gives the identity plus non-identity Paulis, and every non-identity
    /// Pauli is traceless. Equals `2^k` by definition of `k`.
    pub fn ground_state_degeneracy(&self) -> u128 {
        let k = self.logical_count();
        assert!(k < 128, "degeneracy exceeds 128-bit range");
        1u128 << k
    }

    /// Phase-insensitive membership: is the `(x|z)` pattern of `p` a GF(2)
    /// combination of the generators' patterns? On success returns the
    /// generator indices of one such combination.
    ///
    /// This is the relevant notion inside the distance search: an operator
    /// whose pattern lies in the group acts on the code space as ±1 and is
    /// therefore not a logical operator, whatever its sign.
    pub fn pattern_in_group(&self, p: &PauliOperator) -> Result<Option<Vec<usize>>, PauliError> {
        if p.n() != self.def.n {
            return Err(PauliError::QubitCountMismatch {
                left: p.n(),
                right: self.def.n,
            });
        }
        Ok(self
            .echelon
            .in_span(&symplectic_row(p))
            .map(|combo| combo.ones().collect()))
    }

    /// Phase-sensitive membership: does `p` equal an actual product of
    /// generators, sign included? On success returns the generator indices
    /// of a combination whose ascending-order product is exactly `p`.
    pub fn stabilizer_group_contains(
        &self,
        p: &PauliOperator,
    ) -> Result<Option<Vec<usize>>, PauliError> {
        if p.n() != self.def.n {
            return Err(PauliError::QubitCountMismatch {
                left: p.n(),
                right: self.def.n,
            });
        }
        let Some(combo) = self.echelon.in_span(&symplectic_row(p)) else {
            return Ok(None);
        };
        let prod = combo_product(self.def.n, &self.def.generators, &combo);
        if prod.phase() == p.phase() {
            return Ok(Some(combo.ones().collect()));
        }
        // The pattern matches but the sign differs. If some dependency among
        // the generators multiplies to −identity, XORing it in flips the sign
        // while preserving the pattern.
        for (kernel_combo, kphase) in &self.kernel_phases {
            if (prod.phase() + kphase) & 3 == p.phase() {
                let mut fixed = combo.clone();
                fixed.xor_assign(kernel_combo);
                debug_assert_eq!(
                    combo_product(self.def.n, &self.def.generators, &fixed).phase(),
                    p.phase()
                );
                return Ok(Some(fixed.ones().collect()));
            }
        }
        Ok(None)
    }

    /// Validate the code's logical pairs; see [`validate_pairs_against`].
    pub fn validate_logical_pairs(&self) -> LogicalPairReport {
        validate_pairs_against(
            &self.def.generators,
            &self.def.logical_pairs,
            &self.echelon,
            self.def.n,
        )
    }

    /// Enumerate all `2^rank` products of a maximal independent subset of the
    /// generators, each exactly once with exact phase, identity first.
    ///
    /// Successive elements differ by one generator multiplication (Gray-code
    /// order), so enumeration is O(1) products per element. `cap` bounds the
    /// element count; [`CodeError::GroupTooLarge`] is returned when
    /// `2^rank > cap`.
    pub fn enumerate_stabilizer_group(&self, cap: u64) -> Result<GroupIter<'_>, CodeError> {
        let rank = self.echelon.rank();
        if rank >= 64 || (1u64 << rank) > cap {
            return Err(CodeError::GroupTooLarge { rank, cap });
        }
        let independent: Vec<&PauliOperator> = self
            .echelon
            .sources()
            .iter()
            .map(|&i| &self.def.generators[i])
            .collect();
        Ok(GroupIter {
            independent,
            current: PauliOperator::identity(self.def.n),
            step: 0,
            total: 1u64 << rank,
        })
    }
}

/// Iterator over stabilizer-group elements in Gray-code order.
#[derive(Debug)]
pub struct GroupIter<'a> {
    independent: Vec<&'a PauliOperator>,
    current: PauliOperator,
    step: u64,
    total: u64,
}

impl Iterator for GroupIter<'_> {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<Self::Item> {
        if self.step == self.total {
            return None;
        }
        if self.step > 0 {
            // Gray code: element t differs from t−1 in bit trailing_zeros(t).
            let flip = self.step.trailing_zeros() as usize;
            self.current = self
                .current
                .multiply(self.independent[flip])
                .expect("uniform qubit counts");
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

/// Validate logical pairs against a generator list and its pattern echelon.
///
/// Checks per pair `i`: `x̄_i` and `z̄_i` each commute with every generator;
/// `x̄_i` anticommutes with `z̄_i`; both commute with every member of every
/// *other* pair; and neither pattern lies in the generator row space (an
/// operator equal to ±(a stabilizer) acts trivially on the code space and
/// cannot be logical). Failures are report entries, never faults. An empty
/// pair list yields an empty passing report.
fn validate_pairs_against(
    generators: &[PauliOperator],
    pairs: &[LogicalPair],
    echelon: &Echelon,
    n: usize,
) -> LogicalPairReport {
    let mut checks = Vec::with_capacity(pairs.len());
    for (i, pair) in pairs.iter().enumerate() {
        let mut failures = Vec::new();
        for (label, op) in [("x", &pair.x_bar), ("z", &pair.z_bar)] {
            for (gi, g) in generators.iter().enumerate() {
                match op.commutes_with(g) {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!(
                        "{label} ({}) anticommutes with generator {gi} ({})",
                        op.canonical_string(),
                        g.canonical_string()
                    )),
                    Err(e) => failures.push(format!("{label}: {e}")),
                }
            }
        }
        match pair.x_bar.commutes_with(&pair.z_bar) {
            Ok(false) => {}
            Ok(true) => failures.push(format!(
                "x ({}) and z ({}) commute; a conjugate pair must anticommute",
                pair.x_bar.canonical_string(),
                pair.z_bar.canonical_string()
            )),
            Err(e) => failures.push(format!("pair: {e}")),
        }
        for (j, other) in pairs.iter().enumerate() {
            if i == j {
                continue;
            }
            for (this_label, this) in [("x", &pair.x_bar), ("z", &pair.z_bar)] {
                for (other_label, op) in [("x", &other.x_bar), ("z", &other.z_bar)] {
                    match this.commutes_with(op) {
                        Ok(true) => {}
                        Ok(false) => failures.push(format!(
                            "{this_label} ({}) anticommutes with pair {j} {other_label} ({})",
                            this.canonical_string(),
                            op.canonical_string()
                        )),
                        Err(e) => failures.push(format!("{this_label} vs pair {j}: {e}")),
                    }
                }
            }
        }
        for (label, op) in [("x", &pair.x_bar), ("z", &pair.z_bar)] {
            if op.n() == n && echelon.in_span(&symplectic_row(op)).is_some() {
                failures.push(format!(
                    "{label} ({}) lies in the stabilizer group (up to phase)",
                    op.canonical_string()
                ));
            }
        }
        checks.push(PairCheck {
            index: i,
            pass: failures.is_empty(),
            failures,
        });
    }
    LogicalPairReport {
        pass: checks.iter().all(|c| c.pass),
        pairs: checks,
    }
}

/// Produce a full diagnostic report for a definition without requiring it to
/// be a valid stabilizer code. See [`DefinitionReport`].
pub fn validate_definition(def: &CodeDefinition) -> DefinitionReport {
    let mut structural = Vec::new();
    if def.n == 0 {
        structural.push("qubit count must be at least 1".to_string());
    }
    let mut well_formed = true;
    for (i, g) in def.generators.iter().enumerate() {
        if g.n() != def.n {
            structural.push(format!(
                "generator {i} acts on {} qubits, expected {}",
                g.n(),
                def.n
            ));
            well_formed = false;
        } else if g.phase() != 0 {
            structural.push(format!(
                "generator {i} ({}) carries a phase other than +1",
                g.canonical_string()
            ));
        }
    }
    for (i, pair) in def.logical_pairs.iter().enumerate() {
        for (label, op) in [("x", &pair.x_bar), ("z", &pair.z_bar)] {
            if op.n() != def.n {
                structural.push(format!(
                    "logical pair {i} {label} acts on {} qubits, expected {}",
                    op.n(),
                    def.n
                ));
                well_formed = false;
            }
        }
    }
    for (kind, paths) in [("x", &def.x_paths), ("z", &def.z_paths)] {
        for (i, p) in paths.iter().enumerate() {
            if p.n() != def.n {
                structural.push(format!(
                    "{kind} path {i} acts on {} qubits, expected {}",
                    p.n(),
                    def.n
                ));
                well_formed = false;
            }
        }
    }
    if !well_formed || def.n == 0 {
        // Mixed qubit counts make the remaining analysis meaningless.
        return DefinitionReport {
            name: def.name.clone(),
            n: def.n,
            generator_count: def.generators.len(),
            structural_errors: structural,
            generators_commute: false,
            noncommuting_pairs: Vec::new(),
            rank: 0,
            k: 0,
            degeneracy: None,
            pair_report: LogicalPairReport {
                pairs: Vec::new(),
                pass: false,
            },
            path_failures: Vec::new(),
            expected_match: def.expected.as_ref().map(|_| false),
            pass: false,
        };
    }

    let mut noncommuting = Vec::new();
    for i in 0..def.generators.len() {
        for j in (i + 1)..def.generators.len() {
            if !def.generators[i]
                .commutes_with(&def.generators[j])
                .expect("uniform counts")
            {
                noncommuting.push((i, j));
            }
        }
    }

    let mut echelon = Echelon::new(2 * def.n);
    for g in &def.generators {
        echelon.insert(&symplectic_row(g));
    }
    // A non-abelian list can have symplectic rank above n; clamp so the
    // report stays well-defined (k is only meaningful for abelian sets).
    let rank = echelon.rank();
    let k = def.n.saturating_sub(rank);
    let degeneracy = (k < 128).then(|| 1u128 << k);

    let pair_report = validate_pairs_against(&def.generators, &def.logical_pairs, &echelon, def.n);

    let mut path_failures = Vec::new();
    for (kind, paths) in [("x", &def.x_paths), ("z", &def.z_paths)] {
        for (pi, path) in paths.iter().enumerate() {
            for (gi, g) in def.generators.iter().enumerate() {
                if !path.commutes_with(g).expect("uniform counts") {
                    path_failures.push(format!(
                        "{kind} path {pi} ({}) anticommutes with generator {gi} ({})",
                        path.canonical_string(),
                        g.canonical_string()
                    ));
                }
            }
        }
    }

    let expected_match = def
        .expected
        .as_ref()
        .map(|exp| exp.n == def.n && exp.k == k);

    let pass = structural.is_empty()
        && noncommuting.is_empty()
        && pair_report.pass
        && path_failures.is_empty()
        && expected_match != Some(false);

    DefinitionReport {
        name: def.name.clone(),
        n: def.n,
        generator_count: def.generators.len(),
        structural_errors: structural,
        generators_commute: noncommuting.is_empty(),
        noncommuting_pairs: noncommuting,
        rank,
        k,
        degeneracy,
        pair_report,
        path_failures,
        expected_match,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> PauliOperator {
        PauliOperator::parse(text, n).expect("parse")
    }

    fn gens(texts: &[&str], n: usize) -> Vec<PauliOperator> {
        texts.iter().map(|t| p(t, n)).collect()
    }

    #[test]
    fn build_rejects_anticommuting_generators() {
        let err = StabilizerCode::build("bad", 1, gens(&["X1", "Z1"], 1), vec![], None)
            .expect_err("X1 and Z1 anticommute");
        assert_eq!(
            err,
            CodeError::NonCommutingGenerators {
                i: 0,
                j: 1,
                gi: "X1".into(),
                gj: "Z1".into()
            }
        );
    }

    #[test]
    fn build_rejects_phaseful_generator() {
        let err = StabilizerCode::build("bad", 2, gens(&["-X1X2"], 2), vec![], None)
            .expect_err("signed generator");
        assert!(matches!(err, CodeError::PhasefulGenerator { index: 0, .. }));
    }

    #[test]
    fn build_rejects_mismatched_counts() {
        let mut list = gens(&["X1X2"], 2);
        list.push(p("Z1", 1));
        let err = StabilizerCode::build("bad", 2, list, vec![], None).expect_err("mixed counts");
        assert!(matches!(err, CodeError::QubitCountMismatch { .. }));
    }

    #[test]
    fn empty_generator_list_is_a_valid_trivial_code() {
        let code = StabilizerCode::build("free", 1, vec![], vec![], None).expect("no constraints");
        assert_eq!(code.generator_rank(), 0);
        assert_eq!(code.logical_count(), 1);
        assert_eq!(code.ground_state_degeneracy(), 2);
    }

    #[test]
    fn rank_tolerates_duplicates() {
        let code = StabilizerCode::build("dup", 2, gens(&["Z1Z2", "Z1Z2"], 2), vec![], None)
            .expect("duplicates commute");
        assert_eq!(code.generator_rank(), 1);
        assert_eq!(code.logical_count(), 1);
    }

    #[test]
    fn membership_with_witness() {
        let code = StabilizerCode::build(
            "demo",
            6,
            gens(&["X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"], 6),
            vec![],
            None,
        )
        .expect("valid set");

        // A generator itself.
        let w = code
            .stabilizer_group_contains(&p("X1X2X3X4", 6))
            .unwrap()
            .expect("generator is a member");
        assert_eq!(w, vec![0]);

        // A two-generator product.
        let w = code
            .stabilizer_group_contains(&p("X1X2X5X6", 6))
            .unwrap()
            .expect("product of generators 0 and 1");
        assert_eq!(w, vec![0, 1]);

        // Not a member.
        assert!(code
            .stabilizer_group_contains(&p("X1X3", 6))
            .unwrap()
            .is_none());

        // Phase sensitivity: generators 0 and 2 multiply to a −1-signed
        // element, so only the signed string is a member.
        let signed = p("-Y1X2Y3X4Z5", 6);
        let unsigned = p("Y1X2Y3X4Z5", 6);
        let w = code
            .stabilizer_group_contains(&signed)
            .unwrap()
            .expect("signed product is a member");
        assert_eq!(w, vec![0, 2]);
        assert!(code.stabilizer_group_contains(&unsigned).unwrap().is_none());
        // Pattern-level membership accepts both.
        assert!(code.pattern_in_group(&unsigned).unwrap().is_some());
    }

    #[test]
    fn membership_handles_sign_carrying_dependencies() {
        // Y1Y2 · X1X2 = −Z1Z2: the three commute pairwise, all phase +1, yet
        // their product is −identity. Both signs of every pattern in the span
        // are then genuine members.
        let code = StabilizerCode::build(
            "pathological",
            2,
            gens(&["Y1Y2", "X1X2", "Z1Z2"], 2),
            vec![],
            None,
        )
        .expect("pairwise commuting");
        assert_eq!(code.generator_rank(), 2);
        for text in ["Z1Z2", "-Z1Z2", "X1X2", "-X1X2", "-I"] {
            assert!(
                code.stabilizer_group_contains(&p(text, 2)).unwrap().is_some(),
                "{text} should be a member"
            );
        }
        let witness = code
            .stabilizer_group_contains(&p("-Z1Z2", 2))
            .unwrap()
            .expect("signed member");
        let prod = witness
            .iter()
            .fold(PauliOperator::identity(2), |acc, &i| {
                acc.multiply(&code.generators()[i]).unwrap()
            });
        assert_eq!(prod, p("-Z1Z2", 2));
    }

    #[test]
    fn group_enumeration_is_exact() {
        let code = StabilizerCode::build(
            "demo",
            6,
            gens(&["X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"], 6),
            vec![],
            None,
        )
        .expect("valid set");
        let elements: Vec<PauliOperator> =
            code.enumerate_stabilizer_group(1 << 10).unwrap().collect();
        assert_eq!(elements.len(), 16);
        assert!(elements[0].is_identity_pattern());
        let unique: std::collections::HashSet<String> =
            elements.iter().map(|e| e.canonical_string()).collect();
        assert_eq!(unique.len(), 16, "all elements distinct");
        for e in &elements {
            assert!(code.stabilizer_group_contains(e).unwrap().is_some());
        }
    }

    #[test]
    fn group_enumeration_respects_cap() {
        let n = 21;
        let generators: Vec<PauliOperator> = (1..=n)
            .map(|q| p(&format!("Z{q}"), n))
            .collect();
        let code = StabilizerCode::build("fixed", n, generators, vec![], None).expect("diagonal");
        let err = code.enumerate_stabilizer_group(1 << 20).unwrap_err();
        assert_eq!(
            err,
            CodeError::GroupTooLarge {
                rank: 21,
                cap: 1 << 20
            }
        );
        assert_eq!(code.ground_state_degeneracy(), 1, "r = n leaves one state");
    }

    #[test]
    fn single_generator_group() {
        let code = StabilizerCode::build("z", 1, gens(&["Z1"], 1), vec![], None).unwrap();
        let elements: Vec<String> = code
            .enumerate_stabilizer_group(4)
            .unwrap()
            .map(|e| e.canonical_string())
            .collect();
        assert_eq!(elements, vec!["I", "Z1"]);
    }

    #[test]
    fn pair_validation_failures_are_reported() {
        let generators = gens(&["X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"], 6);
        let mut def = CodeDefinition::new("demo", 6, generators);
        def.logical_pairs = vec![LogicalPair {
            x_bar: p("X1", 6),
            z_bar: p("Z1", 6),
        }];
        let report = validate_definition(&def);
        assert!(report.generators_commute);
        assert!(!report.pair_report.pass);
        let failures = &report.pair_report.pairs[0].failures;
        assert!(
            failures.iter().any(|f| f.contains("anticommutes with generator")),
            "X1 anticommutes with Z1Z3Z5: {failures:?}"
        );
    }

    #[test]
    fn pair_in_group_is_rejected() {
        let generators = gens(&["Z1Z2"], 2);
        let mut def = CodeDefinition::new("demo", 2, generators);
        def.logical_pairs = vec![LogicalPair {
            x_bar: p("X1X2", 2),
            z_bar: p("Z1Z2", 2),
        }];
        let report = validate_definition(&def);
        let failures = &report.pair_report.pairs[0].failures;
        assert!(
            failures.iter().any(|f| f.contains("lies in the stabilizer group")),
            "{failures:?}"
        );
    }

    #[test]
    fn definition_report_on_noncommuting_set() {
        let def = CodeDefinition::new("bad", 1, gens(&["X1", "Z1"], 1));
        let report = validate_definition(&def);
        assert!(!report.generators_commute);
        assert_eq!(report.noncommuting_pairs, vec![(0, 1)]);
        assert_eq!(report.rank, 2);
        assert_eq!(report.k, 0);
        assert!(!report.pass);
    }

    #[test]
    fn encoding_rate_reduces() {
        let params = CodeParameters {
            n: 2_001_000 * 2,
            k: 2_000_000,
            d: 502,
            m: None,
            family_index: Some(1000),
        };
        assert_eq!(params.encoding_rate(), (1000, 2001));
    }
}
