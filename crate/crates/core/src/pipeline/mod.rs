//! End-to-end orchestration: parsing, configuration, the run itself and
//! report emission.

mod config;
mod parse;
mod report;
mod run;
mod singular;

pub use config::{CurveSource, PipelineConfig, ReportFormat};
pub use parse::{format_curve, parse_curve};
pub use report::*;
pub use run::{check_generic, exit_code, parse_rational, prepare_curve, run_pipeline};
pub use singular::{singular_values, DiscriminantData};
