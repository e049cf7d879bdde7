//! Text front end for `fuzzlat`: set and grade expression parsers, a
//! document format for fuzzy sets, SVG figures and the `fuzzlat` command.

mod cli;
pub mod document;
pub mod parse;
pub mod svg;

pub use cli::{run, Format};
pub use document::{parse_document, Document, DocumentError};
pub use parse::{parse_grade_expr, parse_set_ast, parse_set_expr, ParseError, SetExpr};
