//! Text format and JSON reports.

pub mod text;

pub use text::{parse, parse_sources, print, print_bfss, Document, ParseError, ParseErrorKind, Section};
