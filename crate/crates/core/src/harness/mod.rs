//! Reports, fuzzing and the command line.

pub mod cli;
pub mod fuzz;
pub mod report;

pub use fuzz::{run_fuzz, FuzzConfig, FuzzReport, Mode};
pub use report::{check_graph, run_check, ClassificationReport};
