use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::syntax::{flatten, parse_symbols, Formula, ParseError, Symbol, SymbolString};

use super::primes::nth_prime;

/// An arbitrary-precision natural number holding a code of a symbol
/// string or of a proof. Serialized as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code(pub BigUint);

impl Code {
    pub fn bits(&self) -> u64 {
        self.0.bits()
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a decimal numeral")]
pub struct CodeParseError;

impl FromStr for Code {
    type Err = CodeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CodeParseError);
        }
        Ok(Code(BigUint::parse_bytes(s.as_bytes(), 10).ok_or(CodeParseError)?))
    }
}

/// The code of one symbol: fixed symbols carry the odd codes 3..25 in
/// table order, the variable `x_k` carries `2k+27`.
pub fn symbol_code(s: &Symbol) -> u64 {
    match s {
        Symbol::LParen => 3,
        Symbol::RParen => 5,
        Symbol::Comma => 7,
        Symbol::Zero => 9,
        Symbol::Succ => 11,
        Symbol::Plus => 13,
        Symbol::Times => 15,
        Symbol::Fact => 17,
        Symbol::Eq => 19,
        Symbol::Not => 21,
        Symbol::Imp => 23,
        Symbol::Forall => 25,
        Symbol::Var(k) => k
            .checked_mul(2)
            .and_then(|v| v.checked_add(27))
            .expect("variable index too large for a symbol code"),
    }
}

/// Inverse of [`symbol_code`]; `None` when `c` codes no symbol.
pub fn symbol_from_code(c: u64) -> Option<Symbol> {
    match c {
        3 => Some(Symbol::LParen),
        5 => Some(Symbol::RParen),
        7 => Some(Symbol::Comma),
        9 => Some(Symbol::Zero),
        11 => Some(Symbol::Succ),
        13 => Some(Symbol::Plus),
        15 => Some(Symbol::Times),
        17 => Some(Symbol::Fact),
        19 => Some(Symbol::Eq),
        21 => Some(Symbol::Not),
        23 => Some(Symbol::Imp),
        25 => Some(Symbol::Forall),
        c if c >= 27 && c % 2 == 1 => Some(Symbol::Var((c - 27) / 2)),
        _ => None,
    }
}

/// Resource caps for code materialization and factorization. The caps
/// turn the otherwise unbounded decoding arithmetic into a total
/// procedure with a distinguished "exceeds budget" outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest accepted code size, in bits.
    pub max_code_bits: u64,
    /// Largest prime index used in trial division.
    pub max_primes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_code_bits: 1_000_000,
            max_primes: 2000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("a symbol-string code is at least 2")]
    TooSmall,
    #[error("code has {bits} bits, budget allows {max}")]
    BudgetBits { bits: u64, max: u64 },
    #[error("factorization needs more than the budgeted {max} primes")]
    BudgetPrimes { max: usize },
    #[error("prime support is not contiguous: p_{index} has exponent 0 but the code is not exhausted")]
    NonContiguousSupport { index: usize },
    #[error("exponent {exponent} of p_{index} is not a symbol code")]
    ExponentNotSymbolCode { index: usize, exponent: u64 },
    #[error("symbol string is not grammatical: {0}")]
    NotGrammatical(ParseError),
    #[error("symbol string is grammatical but not in canonical form")]
    NotCanonical,
}

impl DecodeError {
    /// Budget exhaustion is reported distinctly from rejection.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            DecodeError::BudgetBits { .. } | DecodeError::BudgetPrimes { .. }
        )
    }
}

/// The code of a symbol string: the product over positions `i` of
/// `p_i ^ code(symbol_i)`.
pub fn encode_symbols(s: &SymbolString) -> Code {
    let mut acc = BigUint::one();
    for (i, sym) in s.iter().enumerate() {
        let exp = u32::try_from(symbol_code(sym)).expect("symbol code exceeds u32 range");
        acc *= BigUint::from(nth_prime(i)).pow(exp);
    }
    Code(acc)
}

/// The code of a formula's canonical symbol string.
pub fn encode_formula(f: &Formula) -> Code {
    encode_symbols(&flatten(f))
}

/// Factorizes the code into its symbol string: trial division over the
/// prime sequence, contiguous support required, every exponent a legal
/// symbol code.
pub fn decode_symbols(c: &Code, budget: &Budget) -> Result<SymbolString, DecodeError> {
    if c.0 < BigUint::from(2u32) {
        return Err(DecodeError::TooSmall);
    }
    if c.bits() > budget.max_code_bits {
        return Err(DecodeError::BudgetBits {
            bits: c.bits(),
            max: budget.max_code_bits,
        });
    }
    let mut rest = c.0.clone();
    let mut symbols = Vec::new();
    let mut index = 0usize;
    while !rest.is_one() {
        if index >= budget.max_primes {
            return Err(DecodeError::BudgetPrimes {
                max: budget.max_primes,
            });
        }
        let exponent = extract_exponent(&mut rest, nth_prime(index));
        if exponent == 0 {
            return Err(DecodeError::NonContiguousSupport { index });
        }
        let sym = symbol_from_code(exponent)
            .ok_or(DecodeError::ExponentNotSymbolCode { index, exponent })?;
        symbols.push(sym);
        index += 1;
    }
    Ok(SymbolString(symbols))
}

/// Divides out the full power of `p`, returning its exponent. Powers
/// of two go through the bit count; a huge power of 2 is the one case
/// where one division per exponent step would crawl inside the budget.
pub(crate) fn extract_exponent(rest: &mut BigUint, p: u64) -> u64 {
    if p == 2 {
        let exponent = rest.trailing_zeros().unwrap_or(0);
        *rest >>= exponent;
        return exponent;
    }
    let p = BigUint::from(p);
    let mut exponent = 0u64;
    while (&*rest % &p).is_zero() {
        *rest /= &p;
        exponent += 1;
    }
    exponent
}

/// Inverse of [`encode_formula`] on its image: factorizes, maps
/// exponents to symbols, parses under the official grammar, and
/// insists on the canonical rendering so that encode and decode are
/// mutually inverse.
pub fn decode_formula(c: &Code, budget: &Budget) -> Result<Formula, DecodeError> {
    let symbols = decode_symbols(c, budget)?;
    let f = parse_symbols(&symbols).map_err(DecodeError::NotGrammatical)?;
    if flatten(&f) != symbols {
        return Err(DecodeError::NotCanonical);
    }
    Ok(f)
}
