//! Text syntax for elements: a small expression language evaluated in a named context,
//! and a declarative file format for presentations.

mod ast;
mod eval;
mod format;
mod parser;

pub use ast::Expr;
pub use eval::{Context, ContextKind, Value, CONTEXT_NAMES, MAX_EXPONENT};
pub use format::{parse_presentation, presentation_to_text, same_rules};
pub use parser::parse;
