//! Library half of the `partid` binary: the sweep driver and the report
//! renderers, kept separate so integration tests and benchmarks can drive
//! them directly.

pub mod report;
pub mod sweep;

pub use report::{render_json, render_json_value, render_report, render_text, JsonReport};
pub use sweep::{run_sweep, CheckKind, Format, Jobs, RunReport, SweepConfig};
