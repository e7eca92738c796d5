//! Resource comparison and Shor-workload budgeting for logical T-state
//! preparation protocols.
//!
//! The library keeps every reported figure in its source-native unit and
//! never converts between them: records are only compared where family,
//! unit label, and error definition agree. The modules split as follows:
//!
//! - [`record_store`]: the protocol-record schema, dataset files, and the
//!   lint rules enforcing positivity, unit labels, provenance tags, and the
//!   yield relation.
//! - [`reconstruct`]: the yield relation `v_expected = v_single / p_succ`,
//!   the single place a missing cost field may be filled, plus a seeded
//!   Monte Carlo restart process that validates it.
//! - [`frontier`]: within-family Pareto frontiers over (epsilon_out,
//!   v_expected) and the plottable regime map.
//! - [`family_summary`]: dataset-normalized radar scores per family with an
//!   explicit floor for unreported quantities.
//! - [`workload`]: polynomial Shor-demand formulas, the per-T error-budget
//!   filter, algorithmic reach, and serial/parallel supply estimates.
//! - [`report`]: deterministic CSV/JSON table writers with config echo.
//! - [`cli`]: the `tcost` binary surface.

pub mod cli;
pub mod error;
pub mod family_summary;
pub mod frontier;
pub mod reconstruct;
pub mod record_store;
pub mod report;
pub mod workload;

pub use error::Error;
