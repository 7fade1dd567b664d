//! orbicover: runs the cover classification end to end, checks it against
//! reference values, and renders the results as text, CSV or JSON.

pub mod fixtures;
pub mod json;
pub mod render;
pub mod report;
pub mod verify;

pub use report::{run_pipeline, Discrepancy, PipelineOptions, PipelineReport};
pub use verify::{verify, Check, Outcome, VerifyReport};
