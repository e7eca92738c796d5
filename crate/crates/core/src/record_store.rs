//! Protocol-record schema, dataset loading, and the lint rules that keep
//! bundled data honest: every value stays in its source-native unit, every
//! present number carries a provenance tag, and absent fields stay absent
//! instead of being estimated.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Relative tolerance for the yield identity `v_expected = v_single / p_succ`
/// when all three fields are present. Dataset values are literals, so only
/// float round-off is tolerated.
pub const EQ1_RTOL: f64 = 1e-6;

/// Protocol family a record belongs to.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Distillation,
    Cultivation,
    CodeSwitching,
}

pub const FAMILIES: [Family; 3] = [
    Family::Distillation,
    Family::Cultivation,
    Family::CodeSwitching,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Distillation => "distillation",
            Family::Cultivation => "cultivation",
            Family::CodeSwitching => "code_switching",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Origin of one numeric field. Recorded per field, not per record, because
/// a single row may mix tabulated, digitized, and reconstructed values.
///
/// The variant order encodes how derived a value is; `Ord` lets report code
/// take the most-derived tag across a row's inputs.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Table,
    FigureDigitized,
    Reconstructed,
    Missing,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Table => "table",
            Provenance::FigureDigitized => "figure_digitized",
            Provenance::Reconstructed => "reconstructed",
            Provenance::Missing => "missing",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The numeric record fields a provenance tag can attach to.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum NumericField {
    EpsilonOut,
    VSingle,
    VExpected,
    PSucc,
    QPeak,
    Latency,
}

pub const NUMERIC_FIELDS: [NumericField; 6] = [
    NumericField::EpsilonOut,
    NumericField::VSingle,
    NumericField::VExpected,
    NumericField::PSucc,
    NumericField::QPeak,
    NumericField::Latency,
];

impl NumericField {
    pub fn name(self) -> &'static str {
        match self {
            NumericField::EpsilonOut => "epsilon_out",
            NumericField::VSingle => "v_single",
            NumericField::VExpected => "v_expected",
            NumericField::PSucc => "p_succ",
            NumericField::QPeak => "q_peak",
            NumericField::Latency => "latency",
        }
    }
}

impl fmt::Display for NumericField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reporting-completeness checklist. Each item is a single boolean; a
/// partially satisfied item counts as false. All eight keys are required in
/// dataset files so that "not reported" is always an explicit statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Completeness {
    pub error_model: bool,
    pub code_family: bool,
    pub decoder_convention: bool,
    pub postselection_rule: bool,
    pub footprint: bool,
    pub latency: bool,
    pub cost_interpretability: bool,
    pub error_definition: bool,
}

impl Completeness {
    pub const fn uniform(value: bool) -> Self {
        Completeness {
            error_model: value,
            code_family: value,
            decoder_convention: value,
            postselection_rule: value,
            footprint: value,
            latency: value,
            cost_interpretability: value,
            error_definition: value,
        }
    }

    /// Fraction of checklist items reported, in [0, 1].
    pub fn score(&self) -> f64 {
        let set = [
            self.error_model,
            self.code_family,
            self.decoder_convention,
            self.postselection_rule,
            self.footprint,
            self.latency,
            self.cost_interpretability,
            self.error_definition,
        ];
        set.iter().filter(|&&b| b).count() as f64 / set.len() as f64
    }
}

/// One reported protocol configuration, in source-native units.
///
/// Absent optional fields are omitted on disk (never `null`), and the
/// `provenance` map only needs entries for present fields; `provenance_of`
/// reports `Missing` for everything else.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProtocolRecord {
    pub id: String,
    pub family: Family,
    /// Citation key of the originating report.
    pub source: String,
    /// Reported output error of one accepted state (dimensionless).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_out: Option<f64>,
    /// Free-text note on how the source defines its output error.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_def: Option<String>,
    /// Single-attempt cost V, in `cost_unit`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_single: Option<f64>,
    /// Expected cost per accepted output V_exp, in `cost_unit`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_expected: Option<f64>,
    /// Acceptance probability of one attempt, in (0, 1].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_succ: Option<f64>,
    /// Peak simultaneous qubit footprint, in `footprint_unit`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_peak: Option<f64>,
    /// Duration of one attempt, in `time_unit`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub latency: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cost_unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub footprint_unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_unit: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub provenance: BTreeMap<NumericField, Provenance>,
    pub completeness: Completeness,
}

impl ProtocolRecord {
    /// A record with every optional field absent, useful as a test and
    /// construction base.
    pub fn new(id: impl Into<String>, family: Family, source: impl Into<String>) -> Self {
        ProtocolRecord {
            id: id.into(),
            family,
            source: source.into(),
            epsilon_out: None,
            epsilon_def: None,
            v_single: None,
            v_expected: None,
            p_succ: None,
            q_peak: None,
            latency: None,
            cost_unit: None,
            footprint_unit: None,
            time_unit: None,
            provenance: BTreeMap::new(),
            completeness: Completeness::uniform(false),
        }
    }

    pub fn value(&self, field: NumericField) -> Option<f64> {
        match field {
            NumericField::EpsilonOut => self.epsilon_out,
            NumericField::VSingle => self.v_single,
            NumericField::VExpected => self.v_expected,
            NumericField::PSucc => self.p_succ,
            NumericField::QPeak => self.q_peak,
            NumericField::Latency => self.latency,
        }
    }

    /// Provenance of a numeric field; `Missing` when no entry exists.
    pub fn provenance_of(&self, field: NumericField) -> Provenance {
        self.provenance
            .get(&field)
            .copied()
            .unwrap_or(Provenance::Missing)
    }

    pub fn completeness_score(&self) -> f64 {
        self.completeness.score()
    }
}

/// Comparison dimensions for [`compatible`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonField {
    Cost,
    Footprint,
    Time,
    Error,
}

impl FromStr for ComparisonField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "cost" => Ok(ComparisonField::Cost),
            "footprint" => Ok(ComparisonField::Footprint),
            "time" => Ok(ComparisonField::Time),
            "error" => Ok(ComparisonField::Error),
            other => Err(Error::invalid(format!(
                "unknown comparison field `{other}` (expected cost, footprint, time, or error)"
            ))),
        }
    }
}

/// Whether two records may be numerically compared on a dimension.
///
/// True iff both records carry the dimension and the unit labels are
/// byte-identical; for `Error` the epsilon definitions must be identical or
/// both absent. There is deliberately no unit-conversion table: values in
/// different native units are never comparable.
pub fn compatible(a: &ProtocolRecord, b: &ProtocolRecord, field: ComparisonField) -> bool {
    let carries_cost = |r: &ProtocolRecord| r.v_single.is_some() || r.v_expected.is_some();
    match field {
        ComparisonField::Cost => {
            carries_cost(a) && carries_cost(b) && a.cost_unit == b.cost_unit
        }
        ComparisonField::Footprint => {
            a.q_peak.is_some() && b.q_peak.is_some() && a.footprint_unit == b.footprint_unit
        }
        ComparisonField::Time => {
            a.latency.is_some() && b.latency.is_some() && a.time_unit == b.time_unit
        }
        ComparisonField::Error => {
            a.epsilon_out.is_some() && b.epsilon_out.is_some() && a.epsilon_def == b.epsilon_def
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

/// One lint finding. Error-severity findings fail a strict-mode load.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub record_id: String,
    pub field: String,
    pub rule: String,
    pub message: String,
}

impl Diagnostic {
    fn error(record_id: &str, field: &str, rule: &str, message: String) -> Self {
        Diagnostic {
            severity: Severity::Error,
            record_id: record_id.to_string(),
            field: field.to_string(),
            rule: rule.to_string(),
            message,
        }
    }

    fn warning(record_id: &str, field: &str, rule: &str, message: String) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            record_id: record_id.to_string(),
            field: field.to_string(),
            rule: rule.to_string(),
            message,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}.{}: {}: {}",
            self.severity, self.record_id, self.field, self.rule, self.message
        )
    }
}

/// The fixed rule-id set. Every schema invariant has at least one rule that
/// fires on a violation; tests cover each rule individually.
pub mod rules {
    /// A present numeric field is not strictly positive and finite.
    pub const POSITIVE_REQUIRED: &str = "positive-required";
    /// p_succ lies outside (0, 1].
    pub const PSUCC_RANGE: &str = "psucc-range";
    /// v_single, v_expected, and p_succ are all present but violate
    /// `v_expected = v_single / p_succ` beyond [`super::EQ1_RTOL`].
    pub const EQ1_INCONSISTENT: &str = "eq1-inconsistent";
    /// A value is present but its unit label is absent.
    pub const UNIT_REQUIRED: &str = "unit-required";
    /// A unit label is present but its value field is absent.
    pub const UNIT_ORPHAN: &str = "unit-orphan";
    /// A present numeric field has no provenance entry (or is tagged missing).
    pub const PROVENANCE_REQUIRED: &str = "provenance-required";
    /// An absent numeric field carries a provenance entry other than missing.
    pub const PROVENANCE_ORPHAN: &str = "provenance-orphan";
    /// Record id is empty.
    pub const EMPTY_ID: &str = "empty-id";
    /// Source citation key is empty.
    pub const EMPTY_SOURCE: &str = "empty-source";
    /// Record id occurs more than once in a dataset.
    pub const DUPLICATE_ID: &str = "duplicate-id";
    /// Warning: epsilon_def present without epsilon_out.
    pub const EPSILON_DEF_ORPHAN: &str = "epsilon-def-orphan";
    /// Warning: a record was skipped by the regime map for lack of a field.
    pub const MAP_SKIPPED: &str = "map-skipped";

    pub const ALL: [&str; 12] = [
        POSITIVE_REQUIRED,
        PSUCC_RANGE,
        EQ1_INCONSISTENT,
        UNIT_REQUIRED,
        UNIT_ORPHAN,
        PROVENANCE_REQUIRED,
        PROVENANCE_ORPHAN,
        EMPTY_ID,
        EMPTY_SOURCE,
        DUPLICATE_ID,
        EPSILON_DEF_ORPHAN,
        MAP_SKIPPED,
    ];
}

/// Lint a single record against the schema invariants.
pub fn lint_record(r: &ProtocolRecord) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let id = r.id.as_str();

    if r.id.is_empty() {
        out.push(Diagnostic::error(
            id,
            "id",
            rules::EMPTY_ID,
            "record id must be non-empty".to_string(),
        ));
    }
    if r.source.is_empty() {
        out.push(Diagnostic::error(
            id,
            "source",
            rules::EMPTY_SOURCE,
            "source citation key must be non-empty".to_string(),
        ));
    }

    for field in NUMERIC_FIELDS {
        let Some(v) = r.value(field) else { continue };
        if field == NumericField::PSucc {
            if !(v.is_finite() && v > 0.0 && v <= 1.0) {
                out.push(Diagnostic::error(
                    id,
                    field.name(),
                    rules::PSUCC_RANGE,
                    format!("p_succ must lie in (0, 1], got {v}"),
                ));
            }
        } else if !(v.is_finite() && v > 0.0) {
            out.push(Diagnostic::error(
                id,
                field.name(),
                rules::POSITIVE_REQUIRED,
                format!("{} must be strictly positive and finite, got {v}", field),
            ));
        }
    }

    // Unit label present iff its value field is present.
    let unit_pairs: [(&str, bool, &Option<String>); 3] = [
        (
            "cost_unit",
            r.v_single.is_some() || r.v_expected.is_some(),
            &r.cost_unit,
        ),
        ("footprint_unit", r.q_peak.is_some(), &r.footprint_unit),
        ("time_unit", r.latency.is_some(), &r.time_unit),
    ];
    for (label, value_present, unit) in unit_pairs {
        match (value_present, unit.is_some()) {
            (true, false) => out.push(Diagnostic::error(
                id,
                label,
                rules::UNIT_REQUIRED,
                format!("{label} is required while its value field is present"),
            )),
            (false, true) => out.push(Diagnostic::error(
                id,
                label,
                rules::UNIT_ORPHAN,
                format!("{label} is present but its value field is absent"),
            )),
            _ => {}
        }
    }

    if let (Some(v), Some(ve), Some(p)) = (r.v_single, r.v_expected, r.p_succ) {
        // Only check the identity on values the positivity rules accept;
        // otherwise the quotient is meaningless and would double-report.
        if v > 0.0 && ve > 0.0 && p > 0.0 && p <= 1.0 && v.is_finite() && ve.is_finite() {
            let implied = v / p;
            if (ve - implied).abs() > EQ1_RTOL * ve {
                out.push(Diagnostic::error(
                    id,
                    "v_expected",
                    rules::EQ1_INCONSISTENT,
                    format!("v_expected={ve} but v_single/p_succ={implied}"),
                ));
            }
        }
    }

    for field in NUMERIC_FIELDS {
        let tag = r.provenance.get(&field).copied();
        if r.value(field).is_some() {
            if tag.is_none() || tag == Some(Provenance::Missing) {
                out.push(Diagnostic::error(
                    id,
                    field.name(),
                    rules::PROVENANCE_REQUIRED,
                    format!("present field {field} needs a non-missing provenance tag"),
                ));
            }
        } else if let Some(tag) = tag {
            if tag != Provenance::Missing {
                out.push(Diagnostic::error(
                    id,
                    field.name(),
                    rules::PROVENANCE_ORPHAN,
                    format!("absent field {field} is tagged {tag}"),
                ));
            }
        }
    }

    if r.epsilon_def.is_some() && r.epsilon_out.is_none() {
        out.push(Diagnostic::warning(
            id,
            "epsilon_def",
            rules::EPSILON_DEF_ORPHAN,
            "epsilon_def present without epsilon_out".to_string(),
        ));
    }

    out
}

/// Lint a whole dataset: per-record rules plus id uniqueness.
pub fn lint_records(records: &[ProtocolRecord]) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for r in records {
        out.extend(lint_record(r));
        let count = seen.entry(r.id.as_str()).or_insert(0);
        *count += 1;
        if *count == 2 {
            out.push(Diagnostic::error(
                &r.id,
                "id",
                rules::DUPLICATE_ID,
                format!("record id `{}` occurs more than once", r.id),
            ));
        }
    }
    out
}

/// A parsed dataset together with its lint findings.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub records: Vec<ProtocolRecord>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Parse one dataset file without linting it.
pub fn parse_records(path: &Path) -> Result<Vec<ProtocolRecord>, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Load and lint one dataset file. In strict mode any error-severity
/// diagnostic fails the load; values are never invented for absent fields.
pub fn load_dataset(path: &Path, strict: bool) -> Result<Dataset, Error> {
    let records = parse_records(path)?;
    let diagnostics = lint_records(&records);
    if strict && diagnostics.iter().any(|d| d.severity == Severity::Error) {
        return Err(Error::Validation(diagnostics));
    }
    Ok(Dataset {
        records,
        diagnostics,
    })
}

/// Serialize records in the dataset file format (pretty JSON array).
pub fn serialize_records(records: &[ProtocolRecord]) -> String {
    let mut text = serde_json::to_string_pretty(records).expect("records serialize");
    text.push('\n');
    text
}
