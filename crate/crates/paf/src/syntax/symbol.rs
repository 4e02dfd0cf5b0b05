use std::fmt;

use super::ast::VarIndex;

/// One symbol of the language. Twelve fixed symbols plus the variable
/// family `x_k`. The comma is carried in the table but no term or
/// formula rule produces it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    LParen,
    RParen,
    Comma,
    Zero,
    Succ,
    Plus,
    Times,
    Fact,
    Eq,
    Not,
    Imp,
    Forall,
    Var(VarIndex),
}

impl Symbol {
    /// The fixed symbols in table order, codes 3, 5, ..., 25.
    pub const FIXED: [Symbol; 12] = [
        Symbol::LParen,
        Symbol::RParen,
        Symbol::Comma,
        Symbol::Zero,
        Symbol::Succ,
        Symbol::Plus,
        Symbol::Times,
        Symbol::Fact,
        Symbol::Eq,
        Symbol::Not,
        Symbol::Imp,
        Symbol::Forall,
    ];

    /// Human name, as used in error messages.
    pub fn name(&self) -> &'static str {
        match self {
            Symbol::LParen => "left bracket",
            Symbol::RParen => "right bracket",
            Symbol::Comma => "comma",
            Symbol::Zero => "zero",
            Symbol::Succ => "successor",
            Symbol::Plus => "addition",
            Symbol::Times => "multiplication",
            Symbol::Fact => "factorial",
            Symbol::Eq => "equality",
            Symbol::Not => "negation",
            Symbol::Imp => "implication",
            Symbol::Forall => "universal quantifier",
            Symbol::Var(_) => "variable",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::LParen => write!(f, "("),
            Symbol::RParen => write!(f, ")"),
            Symbol::Comma => write!(f, ","),
            Symbol::Zero => write!(f, "0"),
            Symbol::Succ => write!(f, "'"),
            Symbol::Plus => write!(f, "+"),
            Symbol::Times => write!(f, "*"),
            Symbol::Fact => write!(f, "!"),
            Symbol::Eq => write!(f, "="),
            Symbol::Not => write!(f, "~"),
            Symbol::Imp => write!(f, "->"),
            Symbol::Forall => write!(f, "A"),
            Symbol::Var(k) => write!(f, "x{k}"),
        }
    }
}

/// An ordered sequence of symbols: the flattened form of a formula.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolString(pub Vec<Symbol>);

impl SymbolString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    /// The ASCII rendering. A `.` terminates each quantifier's
    /// variable; it is surface syntax only, never a symbol.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        let mut after_forall = false;
        for sym in &self.0 {
            out.push_str(&sym.to_string());
            if after_forall {
                out.push('.');
                after_forall = false;
            }
            if matches!(sym, Symbol::Forall) {
                after_forall = true;
            }
        }
        out
    }
}

impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascii())
    }
}
