//! Command-line front end for `unrep-core`: JSON input, dispatch, and reports.

pub mod input;
pub mod render;
pub mod report;
pub mod run;

pub use input::{parse_input, InputDocument, Source};
pub use report::{ErrorDoc, Report};
pub use run::{exit_code, run, Command, Options};

/// Machine-readable output: compact JSON followed by a newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}
