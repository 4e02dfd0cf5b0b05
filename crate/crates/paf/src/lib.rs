//! First-order Peano arithmetic with factorial as a primitive
//! operation: terms and formulas with one canonical rendering, prime
//! coding of symbol strings and proofs, a Hilbert-style proof checker,
//! the standard least-witness template, and the mechanical
//! construction of a self-referential sentence whose own code is
//! certified smaller than the factorial-tower constant it talks about.
//!
//! ```
//! use paf::syntax::parse_formula;
//! use paf::godel::encode_formula;
//!
//! let f = parse_formula("0=0")?;
//! assert_eq!(encode_formula(&f).to_string(), "1162261467000000000");
//! # Ok::<(), paf::syntax::ParseError>(())
//! ```
//!
//! The guide under `book/` walks through each layer; its code blocks
//! compile and run as the doc-tests of this crate.

pub mod bform;
pub mod berry;
pub mod godel;
pub mod proof;
pub mod syntax;

// Keep the book's examples honest: every fenced Rust block in the
// chapters runs under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(terms_and_formulas, "../../../book/src/terms-and-formulas.md");
    chapter!(godel_codes, "../../../book/src/godel-codes.md");
    chapter!(proof_checking, "../../../book/src/proof-checking.md");
    chapter!(least_witness, "../../../book/src/least-witness.md");
    chapter!(berry_sentence, "../../../book/src/berry-sentence.md");
    chapter!(cli, "../../../book/src/cli.md");
}
