//! Machine-readable reports and their deterministic JSON rendering.
//!
//! All floating-point values are printed with 17 significant digits and no
//! timestamps appear anywhere, so identical inputs produce byte-identical
//! output. Field order is fixed by the struct declarations.

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use stabkit::code::{CodeParameters, DefinitionReport};
use stabkit::dephasing::BlochVector;
use stabkit::distance::DistanceResult;
use stabkit::state::{bitstring, StateVector};
use stabkit::StabilizerCode;
use std::io;

/// Tool version embedded in every report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Pretty JSON formatter that prints every `f64` with 17 significant digits.
pub struct Sig17Pretty {
    inner: PrettyFormatter<'static>,
}

impl Sig17Pretty {
    fn new() -> Self {
        Self {
            inner: PrettyFormatter::new(),
        }
    }
}

impl Formatter for Sig17Pretty {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(stabkit::util::format_sig17(value).as_bytes())
    }

    fn begin_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_array(writer)
    }

    fn end_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_object(writer)
    }

    fn end_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_object_key(writer, first)
    }

    fn begin_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.end_object_value(writer)
    }
}

/// Serialize any report as deterministic pretty JSON (no trailing newline).
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig17Pretty::new());
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(out).expect("serialized JSON is UTF-8")
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

/// One catalog row.
#[derive(Debug, Serialize)]
pub struct CatalogEntry {
    /// Canonical name.
    pub name: String,
    /// Data qubit count.
    pub n: usize,
    /// Claimed logical qubit count.
    pub k: usize,
    /// Claimed distance.
    pub d: usize,
    /// Claimed ancilla count.
    pub m: Option<usize>,
}

/// `catalog` report.
#[derive(Debug, Serialize)]
pub struct CatalogReport {
    /// Tool version.
    pub version: &'static str,
    /// All built-in codes.
    pub codes: Vec<CatalogEntry>,
}

impl CatalogReport {
    /// Build from the catalog listing.
    pub fn collect() -> Self {
        CatalogReport {
            version: TOOL_VERSION,
            codes: stabkit::catalog::catalog_list()
                .into_iter()
                .map(|(name, p)| CatalogEntry {
                    name: name.to_string(),
                    n: p.n,
                    k: p.k,
                    d: p.d,
                    m: p.m,
                })
                .collect(),
        }
    }

    /// Human-readable table.
    pub fn render_text(&self) -> String {
        let mut lines = vec![format!(
            "{:<16} {:>4} {:>3} {:>3} {:>4}",
            "name", "n", "k", "d", "m"
        )];
        for c in &self.codes {
            lines.push(format!(
                "{:<16} {:>4} {:>3} {:>3} {:>4}",
                c.name,
                c.n,
                c.k,
                c.d,
                c.m.map_or_else(|| "-".to_string(), |m| m.to_string())
            ));
        }
        lines.join("\n")
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

/// Claimed parameters, embedded alongside computed values.
#[derive(Debug, Serialize)]
pub struct ExpectedReport {
    /// Claimed logical qubit count.
    pub k: usize,
    /// Claimed distance.
    pub d: usize,
    /// Claimed ancilla count.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl ExpectedReport {
    fn from_parameters(p: &CodeParameters) -> Self {
        ExpectedReport {
            k: p.k,
            d: p.d,
            m: p.m,
        }
    }
}

/// Per-pair verification entry.
#[derive(Debug, Serialize)]
pub struct PairEntry {
    /// Zero-based pair index.
    pub index: usize,
    /// Whether every pair check passed.
    pub pass: bool,
    /// Failed checks, human-readable.
    pub failures: Vec<String>,
}

/// `verify` report.
#[derive(Debug, Serialize)]
pub struct VerifyReport {
    /// Tool version.
    pub version: &'static str,
    /// Code name.
    pub code: String,
    /// Data qubit count.
    pub n: usize,
    /// GF(2) rank of the generator matrix.
    pub rank: usize,
    /// Logical qubit count `n − rank`.
    pub k: usize,
    /// Whether all generator pairs commute.
    pub generators_commute: bool,
    /// Per-pair validation outcomes.
    pub logical_pairs: Vec<PairEntry>,
    /// Ground-space degeneracy `2^k`.
    pub degeneracy: Option<u128>,
    /// Claimed parameters, when stated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedReport>,
    /// Whether computed `(n, k)` match the claimed parameters (true when
    /// nothing is claimed).
    pub expected_match: bool,
    #[serde(skip)]
    diagnostics: Diagnostics,
    #[serde(skip)]
    pass: bool,
}

#[derive(Debug, Default)]
struct Diagnostics {
    structural_errors: Vec<String>,
    noncommuting_pairs: Vec<(usize, usize)>,
    path_failures: Vec<String>,
}

impl VerifyReport {
    /// Build from a definition diagnostic plus the claimed parameters.
    pub fn from_definition_report(
        report: &DefinitionReport,
        expected: Option<&CodeParameters>,
    ) -> Self {
        VerifyReport {
            version: TOOL_VERSION,
            code: report.name.clone(),
            n: report.n,
            rank: report.rank,
            k: report.k,
            generators_commute: report.generators_commute,
            logical_pairs: report
                .pair_report
                .pairs
                .iter()
                .map(|p| PairEntry {
                    index: p.index,
                    pass: p.pass,
                    failures: p.failures.clone(),
                })
                .collect(),
            degeneracy: report.degeneracy,
            expected: expected.map(ExpectedReport::from_parameters),
            expected_match: report.expected_match.unwrap_or(true),
            diagnostics: Diagnostics {
                structural_errors: report.structural_errors.clone(),
                noncommuting_pairs: report.noncommuting_pairs.clone(),
                path_failures: report.path_failures.clone(),
            },
            pass: report.pass,
        }
    }

    /// Overall verdict (drives the exit code).
    pub fn pass(&self) -> bool {
        self.pass
    }

    /// Human-readable rendering, including failure diagnostics omitted from
    /// the JSON schema.
    pub fn render_text(&self) -> String {
        let mut lines = Vec::new();
        lines.push(format!("code: {}", self.code));
        lines.push(format!(
            "n: {}  rank: {}  k: {}  degeneracy: {}",
            self.n,
            self.rank,
            self.k,
            self.degeneracy
                .map_or_else(|| "-".to_string(), |d| d.to_string())
        ));
        lines.push(format!(
            "generators commute: {}",
            if self.generators_commute { "yes" } else { "no" }
        ));
        for (i, j) in &self.diagnostics.noncommuting_pairs {
            lines.push(format!("  anticommuting generators: {i} and {j}"));
        }
        for e in &self.diagnostics.structural_errors {
            lines.push(format!("  structural error: {e}"));
        }
        if self.logical_pairs.is_empty() {
            lines.push("logical pairs: none listed".to_string());
        }
        for pair in &self.logical_pairs {
            if pair.pass {
                lines.push(format!("pair {}: pass", pair.index));
            } else {
                lines.push(format!("pair {}: FAIL", pair.index));
                for f in &pair.failures {
                    lines.push(format!("  {f}"));
                }
            }
        }
        for f in &self.diagnostics.path_failures {
            lines.push(format!("path failure: {f}"));
        }
        match &self.expected {
            Some(e) => {
                lines.push(format!(
                    "expected [[{},{},{}]]: {}",
                    self.n,
                    e.k,
                    e.d,
                    if self.expected_match {
                        "n, k match"
                    } else {
                        "MISMATCH"
                    }
                ));
            }
            None => lines.push("expected parameters: none claimed".to_string()),
        }
        lines.push(format!(
            "verdict: {}",
            if self.pass { "PASS" } else { "FAIL" }
        ));
        lines.join("\n")
    }
}

// ---------------------------------------------------------------------------
// distance
// ---------------------------------------------------------------------------

/// `distance` report.
#[derive(Debug, Serialize)]
pub struct DistanceReport {
    /// Tool version.
    pub version: &'static str,
    /// Code name.
    pub code: String,
    /// Search route (`kl`, `symplectic`, or `both`).
    pub method: String,
    /// Minimum violating weight found.
    pub d: usize,
    /// First violating operator in enumeration order.
    pub witness: String,
    /// Highest weight the search was allowed to examine.
    pub checked_up_to: usize,
    /// Candidates examined up to and including the witness.
    pub errors_examined: u64,
    /// Claimed parameters, when stated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedReport>,
    /// Whether `d` equals the claimed distance (true when nothing is claimed).
    pub agrees_with_expected: bool,
}

impl DistanceReport {
    /// Build from a search result plus the claimed parameters.
    pub fn from_result(
        code: &StabilizerCode,
        result: &DistanceResult,
    ) -> Self {
        let expected = code.expected();
        DistanceReport {
            version: TOOL_VERSION,
            code: code.name().to_string(),
            method: result.method.to_string(),
            d: result.d,
            witness: result.witness.canonical_string(),
            checked_up_to: result.checked_up_to,
            errors_examined: result.errors_examined,
            expected: expected.map(ExpectedReport::from_parameters),
            agrees_with_expected: expected.is_none_or(|e| e.d == result.d),
        }
    }

    /// Human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut lines = Vec::new();
        lines.push(format!("code: {}", self.code));
        lines.push(format!("method: {}", self.method));
        lines.push(format!("d: {}", self.d));
        lines.push(format!("witness: {}", self.witness));
        lines.push(format!("checked up to weight: {}", self.checked_up_to));
        lines.push(format!("errors examined: {}", self.errors_examined));
        match &self.expected {
            Some(e) => lines.push(format!(
                "claimed d: {} — {}",
                e.d,
                if self.agrees_with_expected {
                    "agrees"
                } else {
                    "DISAGREES"
                }
            )),
            None => lines.push("claimed d: none".to_string()),
        }
        lines.join("\n")
    }
}

// ---------------------------------------------------------------------------
// encode
// ---------------------------------------------------------------------------

/// One support amplitude.
#[derive(Debug, Serialize)]
pub struct AmplitudeEntry {
    /// Basis bitstring, qubit 1 first.
    pub basis: String,
    /// Real part.
    pub re: f64,
    /// Imaginary part.
    pub im: f64,
}

/// `encode` report.
#[derive(Debug, Serialize)]
pub struct EncodeReport {
    /// Tool version.
    pub version: &'static str,
    /// Code name.
    pub code: String,
    /// Data qubit count.
    pub n: usize,
    /// Logical qubit count.
    pub k: usize,
    /// Nonzero amplitudes of `|0…0⟩_L`, sorted by bitstring.
    pub amplitudes: Vec<AmplitudeEntry>,
}

impl EncodeReport {
    /// Build from an encoded state.
    pub fn from_state(code: &StabilizerCode, state: &StateVector) -> Self {
        let mut entries: Vec<AmplitudeEntry> = state
            .support_indices(1e-12)
            .into_iter()
            .map(|idx| {
                let a = state.amplitude(idx);
                AmplitudeEntry {
                    basis: bitstring(idx, state.n()),
                    re: a.re,
                    im: a.im,
                }
            })
            .collect();
        entries.sort_by(|a, b| a.basis.cmp(&b.basis));
        EncodeReport {
            version: TOOL_VERSION,
            code: code.name().to_string(),
            n: state.n(),
            k: code.logical_count(),
            amplitudes: entries,
        }
    }
}

// ---------------------------------------------------------------------------
// bloch
// ---------------------------------------------------------------------------

/// Closed-form values at the same parameter point, for side-by-side view.
#[derive(Debug, Serialize)]
pub struct ClosedFormEntry {
    /// Closed-form X component, verbatim.
    pub r_x: f64,
    /// Closed-form Y component, verbatim.
    pub r_y: f64,
    /// Closed-form Z component.
    pub r_z: f64,
    /// Whether the Y component was negated before computing `abs_dev`.
    pub y_sign_aligned: bool,
    /// |oracle − closed form| per component, Y sign-aligned.
    pub abs_dev: [f64; 3],
}

/// `bloch` report.
#[derive(Debug, Serialize)]
pub struct BlochReport {
    /// Tool version.
    pub version: &'static str,
    /// Code name.
    pub code: String,
    /// Noise model.
    pub model: String,
    /// Noise strength γ.
    pub gamma: f64,
    /// Elapsed time t.
    pub time: f64,
    /// Initial polar angle θ.
    pub theta: f64,
    /// Initial azimuth φ.
    pub phi: f64,
    /// Logical pair index.
    pub pair_index: usize,
    /// Logical X expectation.
    pub r_x: f64,
    /// Logical Y expectation.
    pub r_y: f64,
    /// Logical Z expectation.
    pub r_z: f64,
    /// Closed-form comparison, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedFormEntry>,
}

impl BlochReport {
    /// Attach the closed-form comparison.
    pub fn with_closed_form(mut self, cf: BlochVector) -> Self {
        self.closed_form = Some(ClosedFormEntry {
            r_x: cf.r_x,
            r_y: cf.r_y,
            r_z: cf.r_z,
            y_sign_aligned: true,
            abs_dev: [
                (self.r_x - cf.r_x).abs(),
                (self.r_y - (-cf.r_y)).abs(),
                (self.r_z - cf.r_z).abs(),
            ],
        });
        self
    }

    /// Human-readable rendering.
    pub fn render_text(&self) -> String {
        let f = stabkit::util::format_sig17;
        let mut lines = Vec::new();
        lines.push(format!("code: {}", self.code));
        lines.push(format!(
            "model: {}  gamma: {}  time: {}  theta: {}  phi: {}  pair: {}",
            self.model,
            f(self.gamma),
            f(self.time),
            f(self.theta),
            f(self.phi),
            self.pair_index
        ));
        lines.push(format!("r_x: {}", f(self.r_x)));
        lines.push(format!("r_y: {}", f(self.r_y)));
        lines.push(format!("r_z: {}", f(self.r_z)));
        if let Some(cf) = &self.closed_form {
            lines.push(format!(
                "closed form (verbatim): r_x: {}  r_y: {}  r_z: {}",
                f(cf.r_x),
                f(cf.r_y),
                f(cf.r_z)
            ));
            lines.push(format!(
                "abs deviation (Y sign-aligned): [{}, {}, {}]",
                f(cf.abs_dev[0]),
                f(cf.abs_dev[1]),
                f(cf.abs_dev[2])
            ));
        }
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Probe {
        value: f64,
        list: Vec<f64>,
        flag: bool,
    }

    #[test]
    fn floats_are_printed_with_seventeen_significant_digits() {
        let probe = Probe {
            value: 0.5,
            list: vec![0.0, -0.0, 81.0 / 1024.0],
            flag: true,
        };
        let text = to_json(&probe);
        assert!(text.contains("5.0000000000000000e-1"), "{text}");
        assert!(text.contains("7.9101562500000000e-2"), "{text}");
        // Negative zero is normalized.
        assert!(!text.contains("-0."), "{text}");
    }

    #[test]
    fn json_output_is_stable_across_calls() {
        let a = to_json(&CatalogReport::collect());
        let b = to_json(&CatalogReport::collect());
        assert_eq!(a, b);
        assert!(a.ends_with('}'));
    }

    #[test]
    fn degeneracy_serializes_as_integer() {
        let code = stabkit::catalog::genus2_unit();
        let report = VerifyReport::from_definition_report(
            &stabkit::code::validate_definition(code.definition()),
            code.expected(),
        );
        let text = to_json(&report);
        assert!(text.contains("\"degeneracy\": 4"), "{text}");
        assert!(report.pass());
    }
}
