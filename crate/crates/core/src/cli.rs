//! Command-line driver. Subcommands are thin wrappers over the library
//! modules; all file outputs go through the report writers so identical
//! (dataset, config, seed) inputs produce byte-identical files.
//!
//! Exit codes: 0 success, 1 validation or dataset failure, 2 I/O failure,
//! 3 configuration error (bad flags or out-of-domain parameters).

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::record_store::{self, Diagnostic, ProtocolRecord, Severity};
use crate::report::{
    self, BudgetEntry, OutputFormat, RunConfig, Table, REPRESENTATIVE_IDS,
};
use crate::{family_summary, frontier, reconstruct};

const DEFAULT_DATA: &str = "data/core.json";
const DEFAULT_CT: [f64; 2] = [4.0, 7.0];

#[derive(Debug, Parser)]
#[command(
    name = "tcost",
    version,
    about = "Compare logical T-state preparation protocols and size Shor workloads against them"
)]
pub struct Cli {
    /// Dataset file (repeatable); defaults to data/core.json
    #[arg(long, global = true, value_name = "PATH")]
    data: Vec<PathBuf>,
    /// Supplementary anchor dataset (repeatable): plotted but excluded from
    /// frontier flags and radar scores
    #[arg(long, global = true, value_name = "PATH")]
    supplementary: Vec<PathBuf>,
    /// Fail on any error-severity lint finding before running
    #[arg(long, global = true)]
    strict: bool,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Output directory (created if absent)
    #[arg(long, global = true, default_value = ".", value_name = "DIR")]
    out: PathBuf,
    /// Monte Carlo seed
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Radar floor score, in [0, 1)
    #[arg(long, global = true, default_value_t = family_summary::DEFAULT_S_MIN)]
    smin: f64,
    /// T-state share of the algorithm failure budget, in (0, 1)
    #[arg(long, global = true, default_value_t = 1e-2)]
    eta: f64,
    /// Toffoli-to-T compilation coefficient (repeatable); defaults to 4 and 7
    #[arg(long, global = true, value_name = "C")]
    ct: Vec<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lint the datasets and print every finding
    Validate,
    /// Fill reconstructable cost fields and write the result as a dataset
    Reconstruct,
    /// Export the cost-error regime map with per-family frontier flags
    Map,
    /// Export the family radar scores
    Radar,
    /// Write the workload demand table and the representative reach table
    Tables {
        /// RSA modulus bits
        #[arg(long, default_value_t = 2048)]
        n: u64,
    },
    /// Run the error-budget filter, reach, and serial-cost calculations
    Budget {
        /// RSA modulus bits
        #[arg(long, default_value_t = 2048)]
        n: u64,
        /// Budget a dataset record by id (repeatable)
        #[arg(long, value_name = "ID")]
        record: Vec<String>,
        /// Budget a bare output-error value (repeatable)
        #[arg(long, value_name = "EPS")]
        epsilon: Vec<f64>,
    },
    /// Validate the yield relation with a restart-process Monte Carlo
    Simcheck {
        /// Single-attempt cost
        #[arg(long, default_value_t = 100.0)]
        v: f64,
        /// Acceptance probability
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Number of simulated restart processes
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        /// Take v and p from this dataset record instead
        #[arg(long, value_name = "ID")]
        record: Option<String>,
    },
}

impl Cli {
    fn data_paths(&self) -> Vec<PathBuf> {
        if self.data.is_empty() {
            vec![PathBuf::from(DEFAULT_DATA)]
        } else {
            self.data.clone()
        }
    }

    fn ct_list(&self) -> Vec<f64> {
        if self.ct.is_empty() {
            DEFAULT_CT.to_vec()
        } else {
            self.ct.clone()
        }
    }

    fn run_config(&self) -> RunConfig {
        let show = |p: &PathBuf| p.display().to_string();
        RunConfig {
            dataset_paths: self.data_paths().iter().map(show).collect(),
            supplementary_paths: self.supplementary.iter().map(show).collect(),
            strict: self.strict,
            s_min: self.smin,
            eta_t: self.eta,
            c_t_list: self.ct_list(),
            output_format: self.format.name().to_string(),
            output_dir: self.out.display().to_string(),
            seed: self.seed,
        }
    }
}

/// Parse and execute, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io { .. } => 2,
        Error::Parse { .. } | Error::Validation(_) | Error::Dataset(_) => 1,
        Error::InvalidInput(_) | Error::ReachOverflow => 3,
    }
}

fn load_records(paths: &[PathBuf]) -> Result<Vec<ProtocolRecord>, Error> {
    let mut all = Vec::new();
    for path in paths {
        all.extend(record_store::parse_records(path)?);
    }
    Ok(all)
}

/// Load core and supplementary records, linting them together so duplicate
/// ids across files are caught. Strict mode turns error findings into a
/// failure; otherwise findings go to stderr and the run continues.
fn load_inputs(cli: &Cli) -> Result<(Vec<ProtocolRecord>, Vec<ProtocolRecord>), Error> {
    let core = load_records(&cli.data_paths())?;
    let suppl = load_records(&cli.supplementary)?;
    let mut combined = core.clone();
    combined.extend(suppl.iter().cloned());
    let diagnostics = record_store::lint_records(&combined);
    if cli.strict
        && diagnostics.iter().any(|d| d.severity == Severity::Error)
    {
        return Err(Error::Validation(diagnostics));
    }
    print_diagnostics_to_stderr(&diagnostics);
    Ok((core, suppl))
}

fn print_diagnostics_to_stderr(diagnostics: &[Diagnostic]) {
    for d in diagnostics {
        eprintln!("{d}");
    }
}

fn ensure_out_dir(dir: &Path) -> Result<(), Error> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })
}

fn find_record<'a>(records: &'a [ProtocolRecord], id: &str) -> Result<&'a ProtocolRecord, Error> {
    records
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::Dataset(format!("no record with id {id}")))
}

fn emit(cli: &Cli, table: &Table, stem: &str) -> Result<(), Error> {
    ensure_out_dir(&cli.out)?;
    let path = report::write_table(table, &cli.run_config(), cli.format, &cli.out, stem)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Validate => cmd_validate(cli),
        Command::Reconstruct => cmd_reconstruct(cli),
        Command::Map => cmd_map(cli),
        Command::Radar => cmd_radar(cli),
        Command::Tables { n } => cmd_tables(cli, *n),
        Command::Budget { n, record, epsilon } => cmd_budget(cli, *n, record, epsilon),
        Command::Simcheck {
            v,
            p,
            trials,
            record,
        } => cmd_simcheck(cli, *v, *p, *trials, record.as_deref()),
    }
}

fn cmd_validate(cli: &Cli) -> Result<(), Error> {
    let core = load_records(&cli.data_paths())?;
    let suppl = load_records(&cli.supplementary)?;
    let mut combined = core;
    combined.extend(suppl);
    let diagnostics = record_store::lint_records(&combined);
    for d in &diagnostics {
        println!("{d}");
    }
    let errors = diagnostics
        .iter()
        .filter(|d| d.severity == Severity::Error)
        .count();
    let warnings = diagnostics.len() - errors;
    println!(
        "{} record(s), {} error(s), {} warning(s)",
        combined.len(),
        errors,
        warnings
    );
    if errors > 0 {
        Err(Error::Validation(diagnostics))
    } else {
        Ok(())
    }
}

fn cmd_reconstruct(cli: &Cli) -> Result<(), Error> {
    let (core, suppl) = load_inputs(cli)?;
    let mut filled_count = 0usize;
    let filled: Vec<ProtocolRecord> = core
        .iter()
        .chain(suppl.iter())
        .map(|r| {
            let f = reconstruct::fill_record(r);
            if f != *r {
                filled_count += 1;
            }
            f
        })
        .collect();
    ensure_out_dir(&cli.out)?;
    let path = cli.out.join("reconstructed.json");
    let text = record_store::serialize_records(&filled);
    std::fs::write(&path, text).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })?;
    let mut params = serde_json::Map::new();
    params.insert("n_records".into(), filled.len().into());
    params.insert("n_filled".into(), filled_count.into());
    report::write_meta("reconstruct", &params, &cli.run_config(), &cli.out, "reconstructed")?;
    println!("wrote {} ({} field(s) filled)", path.display(), filled_count);
    Ok(())
}

fn cmd_map(cli: &Cli) -> Result<(), Error> {
    let (core, suppl) = load_inputs(cli)?;
    let (points, warnings) = frontier::regime_map(&core);
    let (anchors, anchor_warnings) = frontier::anchor_points(&suppl);
    print_diagnostics_to_stderr(&warnings);
    print_diagnostics_to_stderr(&anchor_warnings);
    emit(cli, &report::frontier_table(&points, &anchors), "map")
}

fn cmd_radar(cli: &Cli) -> Result<(), Error> {
    let (core, _suppl) = load_inputs(cli)?;
    let scores = family_summary::family_radar(&core, cli.smin)?;
    emit(cli, &report::radar_table(&scores, cli.smin), "radar")
}

fn cmd_tables(cli: &Cli, n: u64) -> Result<(), Error> {
    let (core, _suppl) = load_inputs(cli)?;
    let cts = cli.ct_list();
    emit(cli, &report::table1(n, cli.eta, &cts)?, "table1")?;
    emit(cli, &report::table2(&core, cli.eta, &cts)?, "table2")
}

fn cmd_budget(cli: &Cli, n: u64, record_ids: &[String], epsilons: &[f64]) -> Result<(), Error> {
    let mut entries = Vec::new();
    if record_ids.is_empty() && epsilons.is_empty() {
        // Default run: the per-family representatives.
        let (core, suppl) = load_inputs(cli)?;
        let mut combined = core;
        combined.extend(suppl);
        for id in REPRESENTATIVE_IDS {
            entries.push(BudgetEntry::from_record(find_record(&combined, id)?)?);
        }
    } else {
        if !record_ids.is_empty() {
            let (core, suppl) = load_inputs(cli)?;
            let mut combined = core;
            combined.extend(suppl);
            for id in record_ids {
                entries.push(BudgetEntry::from_record(find_record(&combined, id)?)?);
            }
        }
        // Bare epsilon values need no dataset at all.
        entries.extend(epsilons.iter().copied().map(BudgetEntry::bare));
    }
    emit(
        cli,
        &report::budget_table(&entries, n, cli.eta, &cli.ct_list())?,
        "budget",
    )
}

fn cmd_simcheck(
    cli: &Cli,
    v: f64,
    p: f64,
    trials: u64,
    record_id: Option<&str>,
) -> Result<(), Error> {
    let (v, p, cost_unit, record_id) = match record_id {
        Some(id) => {
            let (core, suppl) = load_inputs(cli)?;
            let mut combined = core;
            combined.extend(suppl);
            let r = find_record(&combined, id)?;
            let v = r.v_single.ok_or_else(|| {
                Error::Dataset(format!("record {id} lacks v_single, cannot simulate it"))
            })?;
            let p = r.p_succ.ok_or_else(|| {
                Error::Dataset(format!("record {id} lacks p_succ, cannot simulate it"))
            })?;
            (v, p, r.cost_unit.clone(), Some(id.to_string()))
        }
        None => (v, p, None, None),
    };
    let stats = reconstruct::simulate_restarts(v, p, trials, cli.seed)?;
    let table = report::simcheck_table(
        &stats,
        v,
        p,
        cli.seed,
        record_id.as_deref(),
        cost_unit.as_deref(),
    );
    emit(cli, &table, "simcheck")
}
