//! Built-in code layouts.
//!
//! Every constructor here returns a transcription of a fixed published-style
//! layout: the generator strings are stored verbatim as constants and parsed,
//! never generated from geometry. Two families are included, plus one small
//! comparison code:
//!
//! * **Genus-2 family** — a 6-qubit unit cell ([`genus2_unit`]), its vertical
//!   chain extension ([`genus2_vertical_chain`]), and the closed-form
//!   parameter formulas for the square-grid extension
//!   ([`genus2_grid_parameters`]).
//! * **Genus-5 family** — a 13-qubit unit ([`genus5_unit`]) and a 24-qubit
//!   vertical stack ([`genus5_stacked`]). **As shipped, both generator lists
//!   contain anticommuting pairs**, so these constructors return
//!   [`CodeError::NonCommutingGenerators`]. The `*_definition` accessors
//!   expose the raw lists so [`validate_definition`](crate::code::validate_definition)
//!   can produce the full diagnosis; see the crate docs for the analysis.
//! * **surface-512** — a standard five-qubit planar layout used as a
//!   distance-measurement foil. Its generator set is the conventional one for
//!   that layout (the source material shows only the picture), chosen because
//!   it reproduces every stated property: one logical qubit, a valid weight-3
//!   logical pair, and distance 2.
//!
//! Canonical command-line names: `genus2-unit`, `genus2-chain-<q>`,
//! `genus5-unit`, `genus5-stacked`, `surface-512`.

use crate::code::{
    CodeDefinition, CodeError, CodeParameters, LogicalPair, StabilizerCode,
};
use crate::pauli::PauliOperator;
use thiserror::Error;

/// Failures of the parameterized catalog constructors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    /// Family indices start at 1.
    #[error("family index must be at least 1, got {0}")]
    InvalidFamilyIndex(usize),
    /// The parameter formulas overflow the native integer range.
    #[error("family index {0} too large: parameter formulas overflow")]
    FamilyIndexTooLarge(usize),
    /// The name is not in the catalog.
    #[error("unknown code name: {0}")]
    UnknownCode(String),
    /// The layout exists but fails stabilizer validation.
    #[error(transparent)]
    Build(#[from] CodeError),
}

fn op(text: &str, n: usize) -> PauliOperator {
    PauliOperator::parse(text, n).expect("catalog constant must parse")
}

fn pairs(texts: &[(&str, &str)], n: usize) -> Vec<LogicalPair> {
    texts
        .iter()
        .map(|(x, z)| LogicalPair {
            x_bar: op(x, n),
            z_bar: op(z, n),
        })
        .collect()
}

fn ops(texts: &[&str], n: usize) -> Vec<PauliOperator> {
    texts.iter().map(|t| op(t, n)).collect()
}

/// Definition of the 6-qubit genus-2 unit cell.
pub fn genus2_unit_definition() -> CodeDefinition {
    let n = 6;
    let mut def = CodeDefinition::new(
        "genus2-unit",
        n,
        ops(&["X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"], n),
    );
    def.logical_pairs = pairs(&[("X1X3", "Z1Z4Z6"), ("X4X6", "Z2Z4Z5")], n);
    def.expected = Some(CodeParameters {
        n,
        k: 2,
        d: 2,
        m: Some(4),
        family_index: None,
    });
    def.genus = Some(2);
    def
}

/// The 6-qubit genus-2 unit cell, a `[[6,2,2]]` code.
pub fn genus2_unit() -> StabilizerCode {
    StabilizerCode::build_from(genus2_unit_definition())
        .expect("genus-2 unit layout is a valid stabilizer code")
}

/// Definition of the genus-2 vertical chain of `q` units on `n = 4q+2`
/// qubits; see [`genus2_vertical_chain`].
pub fn genus2_chain_definition(q: usize) -> Result<CodeDefinition, CatalogError> {
    if q < 1 {
        return Err(CatalogError::InvalidFamilyIndex(q));
    }
    let n = q
        .checked_mul(4)
        .and_then(|v| v.checked_add(2))
        .filter(|&v| v <= 1 << 20)
        .ok_or(CatalogError::FamilyIndexTooLarge(q))?;

    let mut generators = Vec::with_capacity(3 * q + 1);
    // Terminal X check at the top of the chain.
    generators.push(op("X1X2X3X4", n));
    // Weight-6 X checks at the q−1 interior junctions.
    for i in 1..q {
        let text: String = (4 * i - 1..=4 * i + 4).map(|j| format!("X{j}")).collect();
        generators.push(op(&text, n));
    }
    // Terminal X check at the bottom.
    let text: String = (4 * q - 1..=4 * q + 2).map(|j| format!("X{j}")).collect();
    generators.push(op(&text, n));
    // Two Z triangles per unit.
    for i in 0..q {
        let b = 4 * i;
        generators.push(op(&format!("Z{}Z{}Z{}", b + 1, b + 3, b + 5), n));
        generators.push(op(&format!("Z{}Z{}Z{}", b + 2, b + 4, b + 6), n));
    }

    let mut def = CodeDefinition::new(format!("genus2-chain-{q}"), n, generators);
    def.genus = Some(2);
    match q {
        1 => {
            def.logical_pairs = pairs(&[("X1X3", "Z1Z4Z6"), ("X4X6", "Z2Z4Z5")], n);
            def.expected = Some(CodeParameters {
                n,
                k: 2,
                d: 2,
                m: Some(4),
                family_index: Some(1),
            });
        }
        2 => {
            def.logical_pairs = pairs(
                &[
                    ("X2X6X8", "Z1Z4Z8Z9"),
                    ("X2X6X10", "Z5Z7Z10"),
                    ("X4X6X8", "Z2Z3Z6"),
                ],
                n,
            );
            def.expected = Some(CodeParameters {
                n,
                k: 3,
                d: 3,
                m: Some(7),
                family_index: Some(2),
            });
        }
        // Longer chains follow the same index pattern, but no logical pairs
        // or distance claims are on record for them; k is computed from the
        // rank rather than asserted.
        _ => {}
    }
    Ok(def)
}

/// Vertical chain of `q` genus-2 units on `n = 4q+2` qubits.
///
/// Generators: terminal weight-4 X checks at both ends, a weight-6 X check at
/// each of the `q−1` interior junctions, and two weight-3 Z triangles per
/// unit — `3q+1` generators in total. `q = 1` reproduces [`genus2_unit`]'s
/// generator set exactly; `q = 2` is a `[[10,3,3]]` code with three recorded
/// logical pairs.
pub fn genus2_vertical_chain(q: usize) -> Result<StabilizerCode, CatalogError> {
    Ok(StabilizerCode::build_from(genus2_chain_definition(q)?)?)
}

/// Parameter formulas for the genus-2 `p × p` square grid:
/// `[[2p(2p+1), 2p², ⌊(p+2)/2⌋+1]]` with `m = 2p(p+1)` ancillas.
///
/// Pure arithmetic; no generator layout is on record for `p ≥ 2` grids, so no
/// code object can be constructed for them.
pub fn genus2_grid_parameters(p: usize) -> Result<CodeParameters, CatalogError> {
    if p < 1 {
        return Err(CatalogError::InvalidFamilyIndex(p));
    }
    let too_large = || CatalogError::FamilyIndexTooLarge(p);
    let two_p = p.checked_mul(2).ok_or_else(too_large)?;
    let n = two_p
        .checked_mul(two_p.checked_add(1).ok_or_else(too_large)?)
        .ok_or_else(too_large)?;
    let k = two_p.checked_mul(p).ok_or_else(too_large)?;
    let m = two_p
        .checked_mul(p.checked_add(1).ok_or_else(too_large)?)
        .ok_or_else(too_large)?;
    Ok(CodeParameters {
        n,
        k,
        d: (p + 2) / 2 + 1,
        m: Some(m),
        family_index: Some(p),
    })
}

/// Definition of the 13-qubit genus-5 unit; see [`genus5_unit`].
pub fn genus5_unit_definition() -> CodeDefinition {
    let n = 13;
    let mut def = CodeDefinition::new(
        "genus5-unit",
        n,
        ops(
            &[
                "X1X2X3X6X7",
                "X3X4X5X12X13",
                "X1X6X8",
                "X2X7X9",
                "X3X10X12",
                "X3X11X13",
                "Z1Z3Z4Z8Z10",
                "Z2Z3Z5Z9Z11",
                "Z3Z6Z8",
                "Z3Z7Z9",
                "Z4Z10Z12",
                "Z5Z11Z13",
            ],
            n,
        ),
    );
    def.logical_pairs = pairs(&[("X6X8X4X12", "Z8Z1Z7Z9")], n);
    def.x_paths = ops(&["X6X8X10X12", "X6X8X4X12", "X7X9X11X13", "X7X9X5X13"], n);
    def.z_paths = ops(
        &["Z8Z6Z7Z9", "Z8Z6Z2Z9", "Z8Z1Z7Z9", "Z8Z1Z2Z9", "Z10Z12Z13Z11"],
        n,
    );
    def.expected = Some(CodeParameters {
        n,
        k: 1,
        d: 3,
        m: Some(12),
        family_index: None,
    });
    def.genus = Some(5);
    def
}

/// The 13-qubit genus-5 unit, recorded as a `[[13,1,3]]` code.
///
/// **Always fails to build as shipped**: the transcribed generator list is
/// not abelian (the first offending pair is generators 1 and 8,
/// `X3X4X5X12X13` and `Z3Z6Z8`, overlapping on the single qubit 3). Use
/// [`genus5_unit_definition`] with
/// [`validate_definition`](crate::code::validate_definition) for the complete
/// diagnostic picture.
pub fn genus5_unit() -> Result<StabilizerCode, CodeError> {
    StabilizerCode::build_from(genus5_unit_definition())
}

/// Definition of the 24-qubit genus-5 stack; see [`genus5_stacked`].
pub fn genus5_stacked_definition() -> CodeDefinition {
    let n = 24;
    let mut def = CodeDefinition::new(
        "genus5-stacked",
        n,
        ops(
            &[
                "X1X2X3X4X7",
                "X1X3X5",
                "X2X4X6",
                "X7X8X10",
                "X7X9X11",
                "X7X10X11X12X13X14X15X18",
                "X12X14X16",
                "X13X15X17",
                "X18X19X21",
                "X18X20X22",
                "X18X21X22X23X24",
                "Z3Z5Z7",
                "Z4Z6Z7",
                "Z1Z5Z7Z8Z12",
                "Z2Z6Z7Z9Z13",
                "Z8Z10Z12",
                "Z9Z11Z13",
                "Z14Z16Z18",
                "Z15Z17Z18",
                "Z12Z16Z18Z19Z23",
                "Z13Z17Z18Z20Z24",
                "Z19Z21Z23",
                "Z20Z22Z24",
            ],
            n,
        ),
    );
    def.logical_pairs = pairs(&[("X8X12X16X14", "Z8Z10Z15Z17")], n);
    def.expected = Some(CodeParameters {
        n,
        k: 1,
        d: 4,
        m: Some(23),
        family_index: None,
    });
    def.genus = Some(5);
    def
}

/// The 24-qubit genus-5 vertical stack, recorded as a `[[24,1,4]]` code.
///
/// **Always fails to build as shipped**: the transcribed generator list is
/// not abelian (the first offending pair is generators 3 and 11, `X7X8X10`
/// and `Z3Z5Z7`, overlapping on the single qubit 7). Use
/// [`genus5_stacked_definition`] with
/// [`validate_definition`](crate::code::validate_definition) for the complete
/// diagnostic picture.
pub fn genus5_stacked() -> Result<StabilizerCode, CodeError> {
    StabilizerCode::build_from(genus5_stacked_definition())
}

/// Definition of the five-qubit planar comparison code; see [`surface_512`].
pub fn surface_512_definition() -> CodeDefinition {
    let n = 5;
    let mut def = CodeDefinition::new(
        "surface-512",
        n,
        ops(&["X1X2X3", "X3X4X5", "Z1Z3Z4", "Z2Z3Z5"], n),
    );
    def.logical_pairs = pairs(&[("X2X3X4", "Z1Z3Z5")], n);
    def.expected = Some(CodeParameters {
        n,
        k: 1,
        d: 2,
        m: Some(4),
        family_index: None,
    });
    def.genus = Some(1);
    def
}

/// A `[[5,1,2]]` planar code used as a distance foil: its recorded logical
/// pair has weight 3, yet the true distance is 2.
pub fn surface_512() -> StabilizerCode {
    StabilizerCode::build_from(surface_512_definition())
        .expect("five-qubit planar layout is a valid stabilizer code")
}

/// All built-in codes with their recorded parameters, in catalog order.
///
/// The parameters are the *recorded claims*; for the genus-5 entries the
/// constructors fail validation, so the claims are not certified by a built
/// code.
pub fn catalog_list() -> Vec<(&'static str, CodeParameters)> {
    let params = |n, k, d, m, family_index| CodeParameters {
        n,
        k,
        d,
        m: Some(m),
        family_index,
    };
    vec![
        ("genus2-unit", params(6, 2, 2, 4, None)),
        ("genus2-chain-2", params(10, 3, 3, 7, Some(2))),
        ("genus5-unit", params(13, 1, 3, 12, None)),
        ("genus5-stacked", params(24, 1, 4, 23, None)),
        ("surface-512", params(5, 1, 2, 4, None)),
    ]
}

/// Look up a definition by its canonical name (`genus2-unit`,
/// `genus2-chain-<q>`, `genus5-unit`, `genus5-stacked`, `surface-512`).
pub fn definition_by_name(name: &str) -> Result<CodeDefinition, CatalogError> {
    match name {
        "genus2-unit" => Ok(genus2_unit_definition()),
        "genus5-unit" => Ok(genus5_unit_definition()),
        "genus5-stacked" => Ok(genus5_stacked_definition()),
        "surface-512" => Ok(surface_512_definition()),
        _ => {
            if let Some(suffix) = name.strip_prefix("genus2-chain-") {
                let q: usize = suffix
                    .parse()
                    .map_err(|_| CatalogError::UnknownCode(name.to_string()))?;
                genus2_chain_definition(q)
            } else {
                Err(CatalogError::UnknownCode(name.to_string()))
            }
        }
    }
}

/// Look up and build a catalog code by its canonical name.
pub fn build_by_name(name: &str) -> Result<StabilizerCode, CatalogError> {
    Ok(StabilizerCode::build_from(definition_by_name(name)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::validate_definition;

    #[test]
    fn genus2_unit_builds_with_two_logical_qubits() {
        let code = genus2_unit();
        assert_eq!(code.n(), 6);
        assert_eq!(code.generator_rank(), 4);
        assert_eq!(code.logical_count(), 2);
        assert!(code.validate_logical_pairs().pass);
        assert_eq!(code.expected().unwrap().encoding_rate(), (1, 3));
    }

    #[test]
    fn chain_one_equals_unit() {
        let chain = genus2_vertical_chain(1).expect("q=1 builds");
        assert_eq!(
            chain.generators(),
            genus2_unit().generators(),
            "degenerate chain reproduces the unit cell"
        );
    }

    #[test]
    fn chain_two_matches_recorded_layout() {
        let code = genus2_vertical_chain(2).expect("q=2 builds");
        let printed: Vec<String> = code
            .generators()
            .iter()
            .map(|g| g.canonical_string())
            .collect();
        assert_eq!(
            printed,
            vec![
                "X1X2X3X4",
                "X3X4X5X6X7X8",
                "X7X8X9X10",
                "Z1Z3Z5",
                "Z2Z4Z6",
                "Z5Z7Z9",
                "Z6Z8Z10"
            ]
        );
        assert_eq!(code.logical_count(), 3);
        assert!(code.validate_logical_pairs().pass);
    }

    #[test]
    fn chain_three_structure() {
        let code = genus2_vertical_chain(3).expect("q=3 builds");
        assert_eq!(code.n(), 14);
        assert_eq!(code.generators().len(), 10);
        assert_eq!(code.generator_rank(), 10);
        assert_eq!(code.logical_count(), 4);
        assert!(code.expected().is_none(), "no recorded claims beyond q=2");
    }

    #[test]
    fn chain_rejects_zero() {
        assert_eq!(
            genus2_vertical_chain(0).unwrap_err(),
            CatalogError::InvalidFamilyIndex(0)
        );
    }

    #[test]
    fn grid_parameters_match_formulas() {
        let p1 = genus2_grid_parameters(1).unwrap();
        assert_eq!((p1.n, p1.k, p1.d, p1.m), (6, 2, 2, Some(4)));
        let p2 = genus2_grid_parameters(2).unwrap();
        assert_eq!((p2.n, p2.k, p2.d, p2.m), (20, 8, 3, Some(12)));
        let big = genus2_grid_parameters(1000).unwrap();
        assert_eq!(big.encoding_rate(), (1000, 2001));
        assert_eq!(
            genus2_grid_parameters(0).unwrap_err(),
            CatalogError::InvalidFamilyIndex(0)
        );
    }

    #[test]
    fn grid_rate_increases_toward_half() {
        let mut last = 0.0;
        for p in 1..=50 {
            let params = genus2_grid_parameters(p).unwrap();
            let rate = params.k as f64 / params.n as f64;
            assert!(rate > last, "rate strictly increasing");
            assert!(rate < 0.5, "rate bounded by 1/2");
            last = rate;
        }
    }

    #[test]
    fn genus5_unit_fails_validation_as_shipped() {
        let err = genus5_unit().expect_err("transcribed list is not abelian");
        assert_eq!(
            err,
            CodeError::NonCommutingGenerators {
                i: 1,
                j: 8,
                gi: "X3X4X5X12X13".into(),
                gj: "Z3Z6Z8".into(),
            }
        );
        let report = validate_definition(&genus5_unit_definition());
        assert!(!report.generators_commute);
        assert_eq!(report.rank, 12);
        assert_eq!(report.k, 1);
    }

    #[test]
    fn genus5_stacked_fails_validation_as_shipped() {
        let err = genus5_stacked().expect_err("transcribed list is not abelian");
        assert_eq!(
            err,
            CodeError::NonCommutingGenerators {
                i: 3,
                j: 11,
                gi: "X7X8X10".into(),
                gj: "Z3Z5Z7".into(),
            }
        );
        let report = validate_definition(&genus5_stacked_definition());
        assert!(!report.generators_commute);
        assert_eq!(report.rank, 23);
        assert_eq!(report.k, 1);
    }

    #[test]
    fn surface_512_builds_and_pair_validates() {
        let code = surface_512();
        assert_eq!(code.n(), 5);
        assert_eq!(code.generator_rank(), 4);
        assert_eq!(code.logical_count(), 1);
        assert!(code.validate_logical_pairs().pass);
    }

    #[test]
    fn catalog_names_are_unique_and_resolvable() {
        let list = catalog_list();
        assert_eq!(list.len(), 5);
        let names: std::collections::HashSet<&str> = list.iter().map(|(n, _)| *n).collect();
        assert_eq!(names.len(), list.len());
        assert!(list
            .iter()
            .any(|(n, p)| *n == "genus2-unit" && (p.n, p.k, p.d) == (6, 2, 2)));
        assert!(list
            .iter()
            .any(|(n, p)| *n == "genus5-stacked" && (p.n, p.k, p.d) == (24, 1, 4)));
        for (name, params) in &list {
            let def = definition_by_name(name).expect("listed name resolves");
            assert_eq!(def.n, params.n);
            assert_eq!(def.expected.as_ref().map(|e| e.k), Some(params.k));
        }
    }

    #[test]
    fn name_lookup_errors() {
        assert!(matches!(
            definition_by_name("genus3-unit").unwrap_err(),
            CatalogError::UnknownCode(_)
        ));
        assert!(matches!(
            definition_by_name("genus2-chain-x").unwrap_err(),
            CatalogError::UnknownCode(_)
        ));
        assert_eq!(
            definition_by_name("genus2-chain-0").unwrap_err(),
            CatalogError::InvalidFamilyIndex(0)
        );
        assert!(matches!(
            build_by_name("genus5-unit").unwrap_err(),
            CatalogError::Build(CodeError::NonCommutingGenerators { .. })
        ));
        assert!(build_by_name("genus2-chain-4").is_ok());
    }
}
