//! Report assembly: every subcommand's output is a Table of typed cells
//! written as CSV (with a sibling metadata file echoing the config) or as a
//! single JSON document. All writers are byte-deterministic for a fixed
//! (dataset, config, seed) triple.

use std::path::{Path, PathBuf};

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::family_summary::SpokeScore;
use crate::frontier::FrontierPoint;
use crate::reconstruct::RestartStats;
use crate::record_store::{NumericField, ProtocolRecord, Provenance};
use crate::workload::{self, WorkloadModel};

/// Record ids anchoring the per-family workload tables: one representative
/// per family, in presentation order.
pub const REPRESENTATIVE_IDS: [&str; 3] = [
    "daguerre2025-t7-r2",
    "chen2026-rp2-msc5",
    "litinski2019-t1-r5",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// The resolved global configuration, echoed into every output so a file is
/// reproducible from its own metadata.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub dataset_paths: Vec<String>,
    pub supplementary_paths: Vec<String>,
    pub strict: bool,
    pub s_min: f64,
    pub eta_t: f64,
    pub c_t_list: Vec<f64>,
    pub output_format: String,
    pub output_dir: String,
    pub seed: u64,
}

/// One table cell. Empty renders as an empty CSV field and JSON null; it
/// means "not applicable or not reported", never zero.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Empty,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
}

impl Cell {
    pub fn opt_float(v: Option<f64>) -> Cell {
        v.map_or(Cell::Empty, Cell::Float)
    }

    pub fn opt_str(v: Option<&str>) -> Cell {
        v.map_or(Cell::Empty, |s| Cell::Str(s.to_string()))
    }

    /// CSV field text. Floats use the shortest round-trip form, matching the
    /// JSON rendering of the same value.
    fn csv_field(&self) -> String {
        match self {
            Cell::Empty => String::new(),
            Cell::Bool(b) => b.to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Float(f) => serde_json::to_string(f).expect("finite float"),
            Cell::Str(s) => s.clone(),
        }
    }

    fn json_value(&self) -> Value {
        serde_json::to_value(self).expect("cell serializes")
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Empty => s.serialize_unit(),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::Int(i) => s.serialize_i64(*i),
            Cell::Float(f) => s.serialize_f64(*f),
            Cell::Str(t) => s.serialize_str(t),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Cell {
        Cell::Str(s.to_string())
    }
}

impl From<f64> for Cell {
    fn from(f: f64) -> Cell {
        Cell::Float(f)
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(command: &'static str, columns: &[&str]) -> Table {
        Table {
            command,
            params: Map::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn meta_document(command: &str, params: &Map<String, Value>, cfg: &RunConfig) -> Value {
    let mut root = Map::new();
    root.insert("command".into(), json!(command));
    root.insert("params".into(), Value::Object(params.clone()));
    root.insert(
        "config".into(),
        serde_json::to_value(cfg).expect("config serializes"),
    );
    Value::Object(root)
}

/// Write the sibling metadata file for a non-JSON output.
pub fn write_meta(
    command: &str,
    params: &Map<String, Value>,
    cfg: &RunConfig,
    out_dir: &Path,
    stem: &str,
) -> Result<PathBuf, Error> {
    let path = out_dir.join(format!("{stem}.meta.json"));
    let mut text = serde_json::to_string_pretty(&meta_document(command, params, cfg))
        .expect("meta serializes");
    text.push('\n');
    write_text(&path, &text)?;
    Ok(path)
}

/// Write a table in the requested format and return the data file path.
pub fn write_table(
    table: &Table,
    cfg: &RunConfig,
    format: OutputFormat,
    out_dir: &Path,
    stem: &str,
) -> Result<PathBuf, Error> {
    match format {
        OutputFormat::Csv => {
            let path = out_dir.join(format!("{stem}.csv"));
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(&table.columns)
                .map_err(|e| Error::invalid(format!("csv assembly: {e}")))?;
            for row in &table.rows {
                wtr.write_record(row.iter().map(Cell::csv_field))
                    .map_err(|e| Error::invalid(format!("csv assembly: {e}")))?;
            }
            let bytes = wtr
                .into_inner()
                .map_err(|e| Error::invalid(format!("csv assembly: {e}")))?;
            write_text(&path, &String::from_utf8(bytes).expect("csv is utf-8"))?;
            write_meta(table.command, &table.params, cfg, out_dir, stem)?;
            Ok(path)
        }
        OutputFormat::Json => {
            let path = out_dir.join(format!("{stem}.json"));
            let mut root = match meta_document(table.command, &table.params, cfg) {
                Value::Object(m) => m,
                _ => unreachable!(),
            };
            root.insert("columns".into(), json!(table.columns));
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|row| {
                    let mut m = Map::new();
                    for (col, cell) in table.columns.iter().zip(row) {
                        m.insert(col.clone(), cell.json_value());
                    }
                    Value::Object(m)
                })
                .collect();
            root.insert("rows".into(), Value::Array(rows));
            let mut text =
                serde_json::to_string_pretty(&Value::Object(root)).expect("table serializes");
            text.push('\n');
            write_text(&path, &text)?;
            Ok(path)
        }
    }
}

/// Most-derived provenance among a record's present fields, for the
/// provenance column of derived outputs.
fn most_derived(r: &ProtocolRecord, fields: &[NumericField]) -> Option<Provenance> {
    fields
        .iter()
        .filter(|f| r.value(**f).is_some())
        .map(|f| r.provenance_of(*f))
        .max()
}

fn provenance_cell(p: Option<Provenance>) -> Cell {
    p.map_or(Cell::Empty, |p| Cell::Str(p.name().to_string()))
}

/// Regime-map export rows; frontier rows first, then any anchor rows.
pub fn frontier_table(points: &[FrontierPoint], anchors: &[FrontierPoint]) -> Table {
    let mut t = Table::new(
        "map",
        &[
            "record_id",
            "family",
            "epsilon_out",
            "v_expected",
            "cost_unit",
            "on_frontier",
        ],
    );
    for p in points.iter().chain(anchors) {
        t.rows.push(vec![
            Cell::from(p.record_id.as_str()),
            Cell::from(p.family.name()),
            Cell::Float(p.epsilon_out),
            Cell::Float(p.v_expected),
            Cell::from(p.cost_unit.as_str()),
            Cell::Bool(p.on_frontier),
        ]);
    }
    t.params.insert("n_anchor_rows".into(), json!(anchors.len()));
    t
}

pub fn radar_table(scores: &[SpokeScore], s_min: f64) -> Table {
    let mut t = Table::new("radar", &["family", "field", "score", "n_rows"]);
    for s in scores {
        t.rows.push(vec![
            Cell::from(s.family.name()),
            Cell::from(s.field.name()),
            Cell::Float(s.score),
            Cell::Int(s.n_rows as i64),
        ]);
    }
    t.params.insert("s_min".into(), json!(s_min));
    t
}

/// Workload demand quantities and per-T targets at one modulus size.
pub fn table1(n: u64, eta_t: f64, c_t_list: &[f64]) -> Result<Table, Error> {
    let mut t = Table::new("tables", &["quantity", "c_t", "value", "unit"]);
    t.params.insert("n".into(), json!(n));
    t.params.insert("eta_t".into(), json!(eta_t));
    t.params.insert("c_t_list".into(), json!(c_t_list));

    t.rows.push(vec![
        Cell::from("q_data"),
        Cell::Empty,
        Cell::Float(workload::q_data(n)?),
        Cell::from("logical qubits"),
    ]);
    t.rows.push(vec![
        Cell::from("n_tof"),
        Cell::Empty,
        Cell::Float(workload::n_tof(n)?),
        Cell::from("Toffoli gates"),
    ]);
    t.rows.push(vec![
        Cell::from("l_meas"),
        Cell::Empty,
        Cell::Float(workload::l_meas(n)?),
        Cell::from("measurement layers"),
    ]);
    for &c_t in c_t_list {
        t.rows.push(vec![
            Cell::from("n_t"),
            Cell::Float(c_t),
            Cell::Float(workload::n_t(n, c_t)?),
            Cell::from("T states"),
        ]);
    }
    for &c_t in c_t_list {
        let target = eta_t / workload::n_t(n, c_t)?;
        t.rows.push(vec![
            Cell::from("per_t_target"),
            Cell::Float(c_t),
            Cell::Float(target),
            Cell::from("error per T state"),
        ]);
    }
    Ok(t)
}

/// Per-family representative summary: native figures plus the reach n_max
/// at each configured c_t.
pub fn table2(
    records: &[ProtocolRecord],
    eta_t: f64,
    c_t_list: &[f64],
) -> Result<Table, Error> {
    let missing: Vec<&str> = REPRESENTATIVE_IDS
        .iter()
        .copied()
        .filter(|id| !records.iter().any(|r| r.id == *id))
        .collect();
    if !missing.is_empty() {
        return Err(Error::Dataset(format!(
            "missing representative record(s): {}",
            missing.join(", ")
        )));
    }

    let mut columns = vec![
        "record_id".to_string(),
        "family".to_string(),
        "epsilon_out".to_string(),
        "q_peak".to_string(),
        "footprint_unit".to_string(),
        "latency".to_string(),
        "time_unit".to_string(),
        "provenance".to_string(),
    ];
    for &c_t in c_t_list {
        columns.push(format!("n_max_ct{c_t}"));
    }

    let mut t = Table::new("tables", &[]);
    t.columns = columns;
    t.params.insert("eta_t".into(), json!(eta_t));
    t.params.insert("c_t_list".into(), json!(c_t_list));
    t.params
        .insert("representatives".into(), json!(REPRESENTATIVE_IDS));

    for id in REPRESENTATIVE_IDS {
        let r = records.iter().find(|r| r.id == id).expect("checked above");
        let Some(eps) = r.epsilon_out else {
            return Err(Error::Dataset(format!(
                "representative record {id} lacks epsilon_out"
            )));
        };
        let mut row = vec![
            Cell::from(r.id.as_str()),
            Cell::from(r.family.name()),
            Cell::Float(eps),
            Cell::opt_float(r.q_peak),
            Cell::opt_str(r.footprint_unit.as_deref()),
            Cell::opt_float(r.latency),
            Cell::opt_str(r.time_unit.as_deref()),
            provenance_cell(most_derived(
                r,
                &[
                    NumericField::EpsilonOut,
                    NumericField::QPeak,
                    NumericField::Latency,
                ],
            )),
        ];
        for &c_t in c_t_list {
            let reach = workload::n_max(eps, c_t, eta_t)?;
            row.push(reach.map_or(Cell::Empty, |v| Cell::Int(v as i64)));
        }
        t.rows.push(row);
    }
    Ok(t)
}

/// One budget-table input: either a dataset record (carrying id, error
/// definition, expected cost, and provenance) or a bare epsilon value.
#[derive(Debug, Clone)]
pub struct BudgetEntry {
    pub record_id: Option<String>,
    pub epsilon_out: f64,
    pub epsilon_def: Option<String>,
    pub v_expected: Option<f64>,
    pub cost_unit: Option<String>,
    pub provenance: Option<Provenance>,
}

impl BudgetEntry {
    pub fn bare(epsilon_out: f64) -> BudgetEntry {
        BudgetEntry {
            record_id: None,
            epsilon_out,
            epsilon_def: None,
            v_expected: None,
            cost_unit: None,
            provenance: None,
        }
    }

    /// Build from a record, reconstructing v_expected where possible.
    /// The record must carry epsilon_out.
    pub fn from_record(r: &ProtocolRecord) -> Result<BudgetEntry, Error> {
        let filled = crate::reconstruct::fill_record(r);
        let Some(eps) = filled.epsilon_out else {
            return Err(Error::Dataset(format!(
                "record {} lacks epsilon_out, cannot budget it",
                filled.id
            )));
        };
        Ok(BudgetEntry {
            record_id: Some(filled.id.clone()),
            epsilon_out: eps,
            epsilon_def: filled.epsilon_def.clone(),
            v_expected: filled.v_expected,
            cost_unit: filled.cost_unit.clone(),
            provenance: most_derived(
                &filled,
                &[
                    NumericField::EpsilonOut,
                    NumericField::VExpected,
                    NumericField::VSingle,
                    NumericField::PSucc,
                ],
            ),
        })
    }
}

/// Budget filter, reach, and serial cost for each entry at each c_t.
pub fn budget_table(
    entries: &[BudgetEntry],
    n: u64,
    eta_t: f64,
    c_t_list: &[f64],
) -> Result<Table, Error> {
    let mut t = Table::new(
        "budget",
        &[
            "record_id",
            "epsilon_out",
            "epsilon_def",
            "c_t",
            "n",
            "n_t",
            "per_t_target",
            "ratio",
            "feasible",
            "n_max",
            "serial_cost",
            "cost_unit",
            "provenance",
        ],
    );
    t.params.insert("n".into(), json!(n));
    t.params.insert("eta_t".into(), json!(eta_t));
    t.params.insert("c_t_list".into(), json!(c_t_list));

    for e in entries {
        for &c_t in c_t_list {
            let w = WorkloadModel::new(n, c_t, eta_t)?;
            let report = workload::budget_check(e.epsilon_out, &w)?;
            let reach = workload::n_max(e.epsilon_out, c_t, eta_t)?;
            let serial = e
                .v_expected
                .map(|ve| workload::serial_cost(n, c_t, ve))
                .transpose()?;
            t.rows.push(vec![
                Cell::opt_str(e.record_id.as_deref()),
                Cell::Float(e.epsilon_out),
                Cell::opt_str(e.epsilon_def.as_deref()),
                Cell::Float(c_t),
                Cell::Int(n as i64),
                Cell::Float(report.n_t),
                Cell::Float(report.per_t_target),
                Cell::Float(report.ratio),
                Cell::Bool(report.feasible),
                reach.map_or(Cell::Empty, |v| Cell::Int(v as i64)),
                Cell::opt_float(serial),
                Cell::opt_str(e.cost_unit.as_deref()),
                provenance_cell(e.provenance),
            ]);
        }
    }
    Ok(t)
}

/// Single-row summary of one restart-process simulation, with the analytic
/// expectation alongside for comparison.
pub fn simcheck_table(
    stats: &RestartStats,
    v_single: f64,
    p_succ: f64,
    seed: u64,
    record_id: Option<&str>,
    cost_unit: Option<&str>,
) -> Table {
    let mut t = Table::new(
        "simcheck",
        &[
            "record_id",
            "v_single",
            "p_succ",
            "trials",
            "seed",
            "mean_cost",
            "std_error",
            "mean_attempts",
            "expected_cost",
            "cost_unit",
        ],
    );
    t.params.insert("v_single".into(), json!(v_single));
    t.params.insert("p_succ".into(), json!(p_succ));
    t.params.insert("trials".into(), json!(stats.trials));
    t.params.insert("seed".into(), json!(seed));
    t.rows.push(vec![
        Cell::opt_str(record_id),
        Cell::Float(v_single),
        Cell::Float(p_succ),
        Cell::Int(stats.trials as i64),
        Cell::Int(seed as i64),
        Cell::Float(stats.mean_cost),
        Cell::Float(stats.std_error),
        Cell::Float(stats.mean_attempts),
        Cell::Float(v_single / p_succ),
        Cell::Str(cost_unit.unwrap_or("arbitrary units").to_string()),
    ]);
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record_store::{Completeness, Family};
    use approx::assert_relative_eq;

    fn cfg(dir: &Path) -> RunConfig {
        RunConfig {
            dataset_paths: vec!["data/core.json".into()],
            supplementary_paths: vec![],
            strict: false,
            s_min: 0.05,
            eta_t: 1e-2,
            c_t_list: vec![4.0, 7.0],
            output_format: "csv".into(),
            output_dir: dir.display().to_string(),
            seed: 0,
        }
    }

    fn point(id: &str, on: bool) -> FrontierPoint {
        FrontierPoint {
            record_id: id.to_string(),
            family: Family::Cultivation,
            epsilon_out: 1e-9,
            v_expected: 6.3e3,
            cost_unit: "qubit-rounds".to_string(),
            on_frontier: on,
        }
    }

    #[test]
    fn csv_output_has_the_pinned_header_and_a_meta_sibling() {
        let dir = tempfile::tempdir().unwrap();
        let t = frontier_table(&[point("a", true)], &[point("s", false)]);
        let path = write_table(&t, &cfg(dir.path()), OutputFormat::Csv, dir.path(), "map").unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "record_id,family,epsilon_out,v_expected,cost_unit,on_frontier"
        );
        assert_eq!(
            lines.next().unwrap(),
            "a,cultivation,1e-9,6300.0,qubit-rounds,true"
        );
        assert_eq!(
            lines.next().unwrap(),
            "s,cultivation,1e-9,6300.0,qubit-rounds,false"
        );
        let meta: Value = serde_json::from_str(
            &std::fs::read_to_string(dir.path().join("map.meta.json")).unwrap(),
        )
        .unwrap();
        assert_eq!(meta["command"], "map");
        assert_eq!(meta["config"]["s_min"], 0.05);
    }

    #[test]
    fn json_output_embeds_config_and_typed_rows() {
        let dir = tempfile::tempdir().unwrap();
        let t = frontier_table(&[point("a", true)], &[]);
        let path =
            write_table(&t, &cfg(dir.path()), OutputFormat::Json, dir.path(), "map").unwrap();
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(doc["command"], "map");
        assert_eq!(doc["rows"][0]["record_id"], "a");
        assert_eq!(doc["rows"][0]["on_frontier"], true);
        assert_eq!(doc["rows"][0]["v_expected"], 6300.0);
        assert_eq!(doc["config"]["eta_t"], 1e-2);
    }

    #[test]
    fn writes_are_byte_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let t = table1(2048, 1e-2, &[4.0, 7.0]).unwrap();
        let c = cfg(dir.path());
        let p1 = write_table(&t, &c, OutputFormat::Csv, dir.path(), "one").unwrap();
        let a = std::fs::read(&p1).unwrap();
        let p2 = write_table(&t, &c, OutputFormat::Csv, dir.path(), "one").unwrap();
        assert_eq!(a, std::fs::read(&p2).unwrap());
    }

    #[test]
    fn empty_cells_render_as_empty_csv_fields_and_json_null() {
        assert_eq!(Cell::Empty.csv_field(), "");
        assert_eq!(Cell::Empty.json_value(), Value::Null);
        assert_eq!(Cell::Float(9.526622080763897e-13).csv_field(), "9.526622080763897e-13");
        assert_eq!(Cell::Bool(false).csv_field(), "false");
    }

    #[test]
    fn table1_carries_units_for_every_quantity() {
        let t = table1(2048, 1e-2, &[4.0, 7.0]).unwrap();
        assert_eq!(t.rows.len(), 7);
        for row in &t.rows {
            assert!(matches!(&row[3], Cell::Str(u) if !u.is_empty()));
        }
        // Per-T target rows close the table, one per c_t.
        let last = t.rows.last().unwrap();
        assert_eq!(last[0], Cell::from("per_t_target"));
        assert_eq!(last[1], Cell::Float(7.0));
        let Cell::Float(target7) = last[2] else { panic!() };
        assert_relative_eq!(target7, 5.44e-13, max_relative = 0.005);
    }

    fn rep(id: &str, family: Family, eps: f64) -> ProtocolRecord {
        let mut r = ProtocolRecord::new(id, family, "s");
        r.epsilon_out = Some(eps);
        r.provenance
            .insert(NumericField::EpsilonOut, Provenance::Table);
        r.completeness = Completeness::uniform(true);
        r
    }

    #[test]
    fn table2_requires_all_representatives() {
        let records = vec![rep("daguerre2025-t7-r2", Family::CodeSwitching, 5.1e-7)];
        let err = table2(&records, 1e-2, &[4.0]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("chen2026-rp2-msc5"), "{msg}");
        assert!(msg.contains("litinski2019-t1-r5"), "{msg}");
    }

    #[test]
    fn table2_emits_one_reach_column_per_ct() {
        let records = vec![
            rep("daguerre2025-t7-r2", Family::CodeSwitching, 5.1e-7),
            rep("chen2026-rp2-msc5", Family::Cultivation, 1.0e-9),
            rep("litinski2019-t1-r5", Family::Distillation, 3.3e-14),
        ];
        let t = table2(&records, 1e-2, &[4.0]).unwrap();
        assert_eq!(t.columns.last().unwrap(), "n_max_ct4");
        assert_eq!(t.columns.iter().filter(|c| c.starts_with("n_max")).count(), 1);
        assert_eq!(t.rows[0].last(), Some(&Cell::Int(25)));
        assert_eq!(t.rows[1].last(), Some(&Cell::Int(201)));
        assert_eq!(t.rows[2].last(), Some(&Cell::Int(6277)));

        let t = table2(&records, 1e-2, &[4.0, 7.0]).unwrap();
        assert_eq!(t.columns.iter().filter(|c| c.starts_with("n_max")).count(), 2);
    }

    #[test]
    fn budget_entries_from_records_reconstruct_and_tag() {
        let mut r = rep("x", Family::CodeSwitching, 5.1e-7);
        r.v_single = Some(1420.0);
        r.p_succ = Some(0.9);
        r.cost_unit = Some("qubit-rounds".into());
        r.provenance.insert(NumericField::VSingle, Provenance::Table);
        r.provenance.insert(NumericField::PSucc, Provenance::Table);
        let e = BudgetEntry::from_record(&r).unwrap();
        assert_relative_eq!(e.v_expected.unwrap(), 1577.78, max_relative = 1e-4);
        // The reconstructed input dominates the provenance column.
        assert_eq!(e.provenance, Some(Provenance::Reconstructed));

        let mut no_eps = rep("y", Family::Cultivation, 1.0);
        no_eps.epsilon_out = None;
        no_eps.provenance.clear();
        let err = BudgetEntry::from_record(&no_eps).unwrap_err();
        assert!(err.to_string().contains('y'));
    }

    #[test]
    fn budget_table_reports_reach_and_serial_cost() {
        let e = BudgetEntry {
            record_id: Some("x".into()),
            epsilon_out: 5.1e-7,
            epsilon_def: Some("logical error per accepted state".into()),
            v_expected: Some(1577.7777777777778),
            cost_unit: Some("qubit-rounds".into()),
            provenance: Some(Provenance::Reconstructed),
        };
        let t = budget_table(&[e, BudgetEntry::bare(1.5e-6)], 25, 1e-2, &[4.0]).unwrap();
        assert_eq!(t.rows.len(), 2);
        let row = &t.rows[0];
        assert_eq!(row[9], Cell::Int(25));
        let Cell::Float(serial) = row[10] else { panic!() };
        assert_relative_eq!(serial, 2.98e7, max_relative = 0.02);
        assert_eq!(row[8], Cell::Bool(true));
        // The bare-epsilon row has no record-derived columns.
        let bare = &t.rows[1];
        assert_eq!(bare[0], Cell::Empty);
        assert_eq!(bare[9], Cell::Int(17));
        assert_eq!(bare[10], Cell::Empty);
        assert_eq!(bare[12], Cell::Empty);
    }

    #[test]
    fn simcheck_row_carries_units_and_expectation() {
        let stats = crate::reconstruct::simulate_restarts(100.0, 0.5, 1000, 0).unwrap();
        let t = simcheck_table(&stats, 100.0, 0.5, 0, None, None);
        let row = &t.rows[0];
        assert_eq!(row[8], Cell::Float(200.0));
        assert_eq!(row[9], Cell::Str("arbitrary units".into()));
    }
}
