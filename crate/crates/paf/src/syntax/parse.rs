//! ASCII surface syntax and the symbol-level grammar.
//!
//! The parser accepts a lenient superset of the canonical form (extra
//! whitespace, redundant brackets, unbracketed quantifier bodies) and
//! is the exact inverse of [`super::print::print_formula`] on its
//! image. Precedence for input only: `'` and `!` bind tightest, then
//! `*`, then `+`; `~` and `Axk.` bind tighter than `->`; `->`
//! associates right.

use thiserror::Error;

use super::ast::{Formula, Term, VarIndex};
use super::symbol::{Symbol, SymbolString};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown symbol {ch:?} at position {pos}")]
    UnknownSymbol { ch: char, pos: usize },
    #[error("expected {expected} at position {pos}")]
    Expected { expected: &'static str, pos: usize },
    #[error("comma has no role in the term or formula grammar (position {pos})")]
    Comma { pos: usize },
    #[error("unbalanced bracket: expected ')' at position {pos}")]
    Unbalanced { pos: usize },
    #[error("variable index out of range at position {pos}")]
    IndexOverflow { pos: usize },
    #[error("unexpected end of input (position {pos})")]
    UnexpectedEnd { pos: usize },
    #[error("unexpected trailing input at position {pos}")]
    Trailing { pos: usize },
}

impl ParseError {
    /// Position of the offending input, in bytes for text input and in
    /// symbol indices for symbol-string input.
    pub fn position(&self) -> usize {
        match self {
            ParseError::UnknownSymbol { pos, .. }
            | ParseError::Expected { pos, .. }
            | ParseError::Comma { pos }
            | ParseError::Unbalanced { pos }
            | ParseError::IndexOverflow { pos }
            | ParseError::UnexpectedEnd { pos }
            | ParseError::Trailing { pos } => *pos,
        }
    }
}

/// Tokenizes ASCII text. Whitespace separates tokens; `Axk.` lexes to
/// the quantifier symbol followed by its variable, with the dot
/// consumed as surface syntax.
pub fn lex(text: &str) -> Result<Vec<(Symbol, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        match bytes[i] {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'(' => {
                toks.push((Symbol::LParen, start));
                i += 1;
            }
            b')' => {
                toks.push((Symbol::RParen, start));
                i += 1;
            }
            b',' => {
                toks.push((Symbol::Comma, start));
                i += 1;
            }
            b'0' => {
                toks.push((Symbol::Zero, start));
                i += 1;
            }
            b'\'' => {
                toks.push((Symbol::Succ, start));
                i += 1;
            }
            b'+' => {
                toks.push((Symbol::Plus, start));
                i += 1;
            }
            b'*' => {
                toks.push((Symbol::Times, start));
                i += 1;
            }
            b'!' => {
                toks.push((Symbol::Fact, start));
                i += 1;
            }
            b'=' => {
                toks.push((Symbol::Eq, start));
                i += 1;
            }
            b'~' => {
                toks.push((Symbol::Not, start));
                i += 1;
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Symbol::Imp, start));
                    i += 2;
                } else {
                    return Err(ParseError::Expected {
                        expected: "'>' after '-'",
                        pos: i + 1,
                    });
                }
            }
            b'x' => {
                i += 1;
                let (k, next) = lex_index(bytes, i)?;
                toks.push((Symbol::Var(k), start));
                i = next;
            }
            b'A' => {
                toks.push((Symbol::Forall, start));
                i += 1;
                i = skip_ws(bytes, i);
                if bytes.get(i) != Some(&b'x') {
                    return Err(ParseError::Expected {
                        expected: "variable after quantifier",
                        pos: i,
                    });
                }
                let var_start = i;
                i += 1;
                let (k, next) = lex_index(bytes, i)?;
                toks.push((Symbol::Var(k), var_start));
                i = skip_ws(bytes, next);
                if bytes.get(i) != Some(&b'.') {
                    return Err(ParseError::Expected {
                        expected: "'.' after quantified variable",
                        pos: i,
                    });
                }
                i += 1;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::UnknownSymbol { ch, pos: i });
            }
        }
    }
    Ok(toks)
}

fn skip_ws(bytes: &[u8], mut i: usize) -> usize {
    while matches!(bytes.get(i), Some(b' ' | b'\t' | b'\r' | b'\n')) {
        i += 1;
    }
    i
}

fn lex_index(bytes: &[u8], mut i: usize) -> Result<(VarIndex, usize), ParseError> {
    let start = i;
    let mut value: VarIndex = 0;
    let mut any = false;
    while let Some(d) = bytes.get(i).filter(|b| b.is_ascii_digit()) {
        any = true;
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(VarIndex::from(d - b'0')))
            .ok_or(ParseError::IndexOverflow { pos: start })?;
        i += 1;
    }
    if !any {
        return Err(ParseError::Expected {
            expected: "variable index digits",
            pos: start,
        });
    }
    Ok((value, i))
}

/// Parses one formula from ASCII text. Total inverse of the canonical
/// printer on its image.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

/// Parses a raw symbol sequence (as produced by decoding a code) under
/// the same grammar. Error positions are symbol indices.
pub fn parse_symbols(s: &SymbolString) -> Result<Formula, ParseError> {
    let toks: Vec<(Symbol, usize)> = s.iter().copied().zip(0..).collect();
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: s.len(),
    };
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

struct Parser<'a> {
    toks: &'a [(Symbol, usize)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Symbol> {
        self.toks.get(self.pos).map(|(s, _)| *s)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Symbol> {
        let s = self.peek();
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    fn eat(&mut self, sym: Symbol) -> bool {
        if self.peek() == Some(sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(ParseError::Trailing { pos: self.here() })
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let a = self.unary()?;
        if self.eat(Symbol::Imp) {
            let b = self.formula()?;
            Ok(Formula::imp(a, b))
        } else {
            Ok(a)
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Symbol::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Symbol::Forall) => {
                self.pos += 1;
                let k = match self.bump() {
                    Some(Symbol::Var(k)) => k,
                    _ => {
                        return Err(ParseError::Expected {
                            expected: "variable after quantifier",
                            pos: self.here(),
                        })
                    }
                };
                Ok(Formula::forall(k, self.unary()?))
            }
            Some(Symbol::Comma) => Err(ParseError::Comma { pos: self.here() }),
            Some(_) => self.atom(),
            None => Err(ParseError::UnexpectedEnd { pos: self.end }),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        // `(` may open a bracketed formula or a bracketed term; commit
        // to whichever completes.
        let save = self.pos;
        let eq_err = match self.equality() {
            Ok(f) => return Ok(f),
            Err(e) => e,
        };
        self.pos = save;
        if self.peek() == Some(Symbol::LParen) {
            self.pos += 1;
            let f = self.formula()?;
            if !self.eat(Symbol::RParen) {
                return Err(ParseError::Unbalanced { pos: self.here() });
            }
            Ok(f)
        } else {
            Err(eq_err)
        }
    }

    fn equality(&mut self) -> Result<Formula, ParseError> {
        let s = self.term()?;
        if !self.eat(Symbol::Eq) {
            return Err(ParseError::Expected {
                expected: "'='",
                pos: self.here(),
            });
        }
        let t = self.term()?;
        Ok(Formula::Eq(s, t))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.mul()?;
        while self.eat(Symbol::Plus) {
            t = Term::add(t, self.mul()?);
        }
        Ok(t)
    }

    fn mul(&mut self) -> Result<Term, ParseError> {
        let mut t = self.postfix()?;
        while self.eat(Symbol::Times) {
            t = Term::mul(t, self.postfix()?);
        }
        Ok(t)
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.primary()?;
        loop {
            if self.eat(Symbol::Succ) {
                t = Term::succ(t);
            } else if self.eat(Symbol::Fact) {
                t = Term::fact(t);
            } else {
                return Ok(t);
            }
        }
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(Symbol::Zero) => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(Symbol::Var(k)) => {
                self.pos += 1;
                Ok(Term::Var(k))
            }
            Some(Symbol::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                if !self.eat(Symbol::RParen) {
                    return Err(ParseError::Unbalanced { pos: self.here() });
                }
                Ok(t)
            }
            Some(Symbol::Comma) => Err(ParseError::Comma { pos: self.here() }),
            Some(_) => Err(ParseError::Expected {
                expected: "term",
                pos: self.here(),
            }),
            None => Err(ParseError::UnexpectedEnd { pos: self.end }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::ast::numeral;
    use super::super::print::print_formula;
    use super::*;

    #[test]
    fn smallest_formula() {
        assert_eq!(
            parse_formula("0=0").unwrap(),
            Formula::Eq(Term::Zero, Term::Zero)
        );
    }

    #[test]
    fn negated_quantifier() {
        let f = parse_formula("~Ax0.~(x0=x0)").unwrap();
        assert_eq!(
            f,
            Formula::not(Formula::forall(
                0,
                Formula::not(Formula::Eq(Term::Var(0), Term::Var(0)))
            ))
        );
    }

    #[test]
    fn factorial_sum_example() {
        let f = parse_formula("(0''')! = x2+x3+0").unwrap();
        assert_eq!(
            f,
            Formula::Eq(
                Term::fact(numeral(3)),
                Term::add(Term::add(Term::Var(2), Term::Var(3)), Term::Zero)
            )
        );
    }

    #[test]
    fn precedence() {
        // ! over *, * over +, ' tightest
        let f = parse_formula("x0*x1'=x0*x1+x0").unwrap();
        assert_eq!(
            f,
            Formula::Eq(
                Term::mul(Term::Var(0), Term::succ(Term::Var(1))),
                Term::add(Term::mul(Term::Var(0), Term::Var(1)), Term::Var(0))
            )
        );
    }

    #[test]
    fn lenient_brackets_accepted() {
        let canonical = parse_formula("0=0").unwrap();
        assert_eq!(parse_formula("((0=0))").unwrap(), canonical);
        assert_eq!(parse_formula(" 0 = 0 ").unwrap(), canonical);
    }

    #[test]
    fn error_positions() {
        match parse_formula("0=q").unwrap_err() {
            ParseError::UnknownSymbol { ch: 'q', pos: 2 } => {}
            e => panic!("unexpected {e:?}"),
        }
        match parse_formula("(0=0").unwrap_err() {
            ParseError::Unbalanced { pos: 4 } => {}
            e => panic!("unexpected {e:?}"),
        }
        match parse_formula("0,0").unwrap_err() {
            ParseError::Expected {
                expected: "'='",
                pos: 1,
            } => {}
            e => panic!("unexpected {e:?}"),
        }
        assert!(parse_formula("").is_err());
    }

    #[test]
    fn comma_never_grammatical() {
        assert!(matches!(
            parse_formula(",=0").unwrap_err(),
            ParseError::Comma { .. }
        ));
    }

    #[test]
    fn parse_inverts_print() {
        for text in [
            "0=0",
            "(0=0)->(0=0)",
            "~Ax0.~(x0=x0)",
            "(x0')!=x0'*x0!",
            "x0+x1'=(x0+x1)'",
            "Ax0.(0=0)",
            "~((0=0)->(~(0=0)))",
        ] {
            let f = parse_formula(text).unwrap();
            assert_eq!(parse_formula(&print_formula(&f)).unwrap(), f);
        }
    }
}
