//! Prime generation and the coding of symbols, formulas and proofs as
//! arbitrary-precision naturals.

mod bits;
mod code;
mod primes;

pub use bits::{log2_fixed, prime_power_bits_ceil, prime_power_product, PrecisionCap};
pub use code::{
    decode_formula, decode_symbols, encode_formula, encode_symbols, symbol_code,
    symbol_from_code, Budget, Code, CodeParseError, DecodeError,
};
pub use primes::{check_lemma2, nth_prime, Primes};

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::proof::Proof;
use crate::syntax::Formula;

/// `ceil(sum #F_k * log2 p_k)` for the proof's line codes: the exact
/// bit length of the proof code (one less for the degenerate
/// single-line case, where the code is a pure power of two). Always
/// available; the code itself normally is not.
pub fn proof_code_bitlength(proof: &Proof) -> BigUint {
    let exponents: Vec<BigUint> = proof
        .lines()
        .iter()
        .map(|l| encode_formula(&l.formula).0)
        .collect();
    prime_power_bits_ceil(&exponents)
        .expect("log2 enclosures refine until the ceiling is certified")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofCodeError {
    #[error("exact proof code needs about {estimated_bits} bits, budget allows {max}")]
    Budget { estimated_bits: BigUint, max: u64 },
}

/// The exact proof code `p_0^(#F_0) p_1^(#F_1) ...`, materialized only
/// when the certified size estimate fits the budget. Any genuine proof
/// exceeds any realistic budget (its first line code alone is around
/// 10^18, hence 10^18 bits); the estimate is the practical interface.
pub fn encode_proof(proof: &Proof, budget: &Budget) -> Result<Code, ProofCodeError> {
    let bits = proof_code_bitlength(proof);
    if bits > BigUint::from(budget.max_code_bits) {
        return Err(ProofCodeError::Budget {
            estimated_bits: bits,
            max: budget.max_code_bits,
        });
    }
    let exponents: Vec<u64> = proof
        .lines()
        .iter()
        .map(|l| {
            u64::try_from(&encode_formula(&l.formula).0)
                .expect("line codes under a binary budget fit u64")
        })
        .collect();
    Ok(Code(prime_power_product(&exponents)))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofDecodeError {
    #[error("a proof code is at least 2")]
    TooSmall,
    #[error("code has {bits} bits, budget allows {max}")]
    BudgetBits { bits: u64, max: u64 },
    #[error("factorization needs more than the budgeted {max} primes")]
    BudgetPrimes { max: usize },
    #[error("prime support is not contiguous at p_{index}")]
    NonContiguousSupport { index: usize },
    #[error("line {index}: exponent is not a formula code: {source}")]
    Line { index: usize, source: DecodeError },
}

impl ProofDecodeError {
    pub fn is_budget(&self) -> bool {
        match self {
            ProofDecodeError::BudgetBits { .. } | ProofDecodeError::BudgetPrimes { .. } => true,
            ProofDecodeError::Line { source, .. } => source.is_budget(),
            _ => false,
        }
    }
}

/// Factorizes a proof code into its sequence of line formulas. Only
/// degenerate codes fit any realistic budget, but the procedure is
/// total: oversized input is a distinct budget outcome, not an error.
pub fn decode_proof_code(c: &Code, budget: &Budget) -> Result<Vec<Formula>, ProofDecodeError> {
    if c.0 < BigUint::from(2u32) {
        return Err(ProofDecodeError::TooSmall);
    }
    if c.bits() > budget.max_code_bits {
        return Err(ProofDecodeError::BudgetBits {
            bits: c.bits(),
            max: budget.max_code_bits,
        });
    }
    let mut rest = c.0.clone();
    let mut formulas = Vec::new();
    let mut index = 0usize;
    while !rest.is_one() {
        if index >= budget.max_primes {
            return Err(ProofDecodeError::BudgetPrimes {
                max: budget.max_primes,
            });
        }
        let exponent = code::extract_exponent(&mut rest, nth_prime(index));
        if exponent == 0 {
            return Err(ProofDecodeError::NonContiguousSupport { index });
        }
        let f = decode_formula(&Code(BigUint::from(exponent)), budget)
            .map_err(|source| ProofDecodeError::Line { index, source })?;
        formulas.push(f);
        index += 1;
    }
    Ok(formulas)
}
