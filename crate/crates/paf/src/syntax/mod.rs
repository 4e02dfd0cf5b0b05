//! Terms, formulas, the canonical rendering, parsing, substitution,
//! and the expansion templates for the missing connectives.

mod ast;
mod parse;
mod print;
mod sugar;
mod symbol;

pub use ast::{numeral, substitute, Formula, SubstError, Term, VarIndex};
pub use parse::{lex, parse_formula, parse_symbols, ParseError};
pub use print::{flatten, print_formula, print_term};
pub use sugar::{mk_and, mk_exists, mk_gt, mk_neq, TemplateError, TemplateStyle};
pub use symbol::{Symbol, SymbolString};
