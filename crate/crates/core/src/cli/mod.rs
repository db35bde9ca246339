//! Command-line plumbing: form parsing, input files and the analysis report.

pub mod analyze;
pub mod form;
pub mod input;

pub use analyze::{analyze, AnalysisReport, Verdict};
pub use form::{parse_quadratic_form, parse_quadratic_form_in, render_form, ParseError, ParsedForm};
pub use input::{pencil_from_forms, pencil_from_json, pencil_to_json};
