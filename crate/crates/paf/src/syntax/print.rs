//! Canonical rendering. The grammar itself fixes no bracket
//! discipline, so one canonical form is imposed here and used
//! everywhere symbols are counted or coded:
//!
//! * both children of `->` are always bracketed;
//! * the body of `~` or of a quantifier is bracketed exactly when it
//!   is an equality or an implication (prefix chains like `~Ax0.~(...)`
//!   stay flat);
//! * a factorial argument is bracketed unless it is `0` or a variable,
//!   a successor argument unless it is `0`, a variable or another
//!   successor (so numerals print `0'''`);
//! * `+` and `*` chains associate left and bracket only where
//!   precedence demands it.

use super::ast::{Formula, Term};
use super::symbol::{Symbol, SymbolString};

/// The exact symbol sequence of the canonical rendering, brackets
/// included. Its length is the symbol count used by the code-size
/// accounting.
pub fn flatten(f: &Formula) -> SymbolString {
    let mut out = Vec::new();
    flatten_formula(f, &mut out);
    SymbolString(out)
}

/// Canonical fully-determined text; `parse_formula` inverts it.
pub fn print_formula(f: &Formula) -> String {
    flatten(f).to_ascii()
}

pub fn print_term(t: &Term) -> String {
    let mut out = Vec::new();
    flatten_term(t, &mut out);
    SymbolString(out).to_ascii()
}

fn flatten_formula(f: &Formula, out: &mut Vec<Symbol>) {
    match f {
        Formula::Eq(s, t) => {
            flatten_term(s, out);
            out.push(Symbol::Eq);
            flatten_term(t, out);
        }
        Formula::Not(a) => {
            out.push(Symbol::Not);
            flatten_prefix_body(a, out);
        }
        Formula::Imp(a, b) => {
            out.push(Symbol::LParen);
            flatten_formula(a, out);
            out.push(Symbol::RParen);
            out.push(Symbol::Imp);
            out.push(Symbol::LParen);
            flatten_formula(b, out);
            out.push(Symbol::RParen);
        }
        Formula::Forall(k, a) => {
            out.push(Symbol::Forall);
            out.push(Symbol::Var(*k));
            flatten_prefix_body(a, out);
        }
    }
}

fn flatten_prefix_body(a: &Formula, out: &mut Vec<Symbol>) {
    match a {
        Formula::Not(_) | Formula::Forall(_, _) => flatten_formula(a, out),
        Formula::Eq(_, _) | Formula::Imp(_, _) => {
            out.push(Symbol::LParen);
            flatten_formula(a, out);
            out.push(Symbol::RParen);
        }
    }
}

fn flatten_term(t: &Term, out: &mut Vec<Symbol>) {
    match t {
        Term::Zero => out.push(Symbol::Zero),
        Term::Var(k) => out.push(Symbol::Var(*k)),
        Term::Succ(s) => {
            let plain = matches!(**s, Term::Zero | Term::Var(_) | Term::Succ(_));
            flatten_bracketed(s, !plain, out);
            out.push(Symbol::Succ);
        }
        Term::Fact(s) => {
            let plain = matches!(**s, Term::Zero | Term::Var(_));
            flatten_bracketed(s, !plain, out);
            out.push(Symbol::Fact);
        }
        Term::Add(s, u) => {
            flatten_term(s, out);
            out.push(Symbol::Plus);
            flatten_bracketed(u, matches!(**u, Term::Add(_, _)), out);
        }
        Term::Mul(s, u) => {
            flatten_bracketed(s, matches!(**s, Term::Add(_, _)), out);
            out.push(Symbol::Times);
            flatten_bracketed(u, matches!(**u, Term::Add(_, _) | Term::Mul(_, _)), out);
        }
    }
}

fn flatten_bracketed(t: &Term, bracket: bool, out: &mut Vec<Symbol>) {
    if bracket {
        out.push(Symbol::LParen);
        flatten_term(t, out);
        out.push(Symbol::RParen);
    } else {
        flatten_term(t, out);
    }
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", print_formula(self))
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", print_term(self))
    }
}

#[cfg(test)]
mod tests {
    use super::super::ast::numeral;
    use super::*;

    fn eq00() -> Formula {
        Formula::Eq(Term::Zero, Term::Zero)
    }

    #[test]
    fn smallest_formula() {
        assert_eq!(print_formula(&eq00()), "0=0");
        assert_eq!(
            flatten(&eq00()).0,
            vec![Symbol::Zero, Symbol::Eq, Symbol::Zero]
        );
    }

    #[test]
    fn factorial_axiom_strings() {
        // 0!=0'
        let f = Formula::Eq(Term::fact(Term::Zero), Term::succ(Term::Zero));
        assert_eq!(print_formula(&f), "0!=0'");
        assert_eq!(flatten(&f).len(), 5);
        // (x0')!=x0'*x0!
        let g = Formula::Eq(
            Term::fact(Term::succ(Term::Var(0))),
            Term::mul(Term::succ(Term::Var(0)), Term::fact(Term::Var(0))),
        );
        assert_eq!(print_formula(&g), "(x0')!=x0'*x0!");
    }

    #[test]
    fn factorial_of_successor_is_bracketed() {
        assert_eq!(print_term(&Term::fact(Term::succ(Term::Zero))), "(0')!");
    }

    #[test]
    fn numerals_stay_flat() {
        assert_eq!(print_term(&numeral(3)), "0'''");
        assert_eq!(print_term(&Term::fact(numeral(3))), "(0''')!");
    }

    #[test]
    fn implication_brackets_both_sides() {
        let f = Formula::imp(eq00(), eq00());
        assert_eq!(print_formula(&f), "(0=0)->(0=0)");
    }

    #[test]
    fn successor_of_sum() {
        // x0+x1'=(x0+x1)'
        let f = Formula::Eq(
            Term::add(Term::Var(0), Term::succ(Term::Var(1))),
            Term::succ(Term::add(Term::Var(0), Term::Var(1))),
        );
        assert_eq!(print_formula(&f), "x0+x1'=(x0+x1)'");
    }

    #[test]
    fn left_nested_sums_flat() {
        let t = Term::add(Term::add(Term::Var(2), Term::Var(3)), Term::Zero);
        assert_eq!(print_term(&t), "x2+x3+0");
    }

    #[test]
    fn quantifier_bodies() {
        let f = Formula::not(Formula::forall(
            0,
            Formula::not(Formula::Eq(Term::Var(0), Term::Var(0))),
        ));
        assert_eq!(print_formula(&f), "~Ax0.~(x0=x0)");
        let g = Formula::forall(0, eq00());
        assert_eq!(print_formula(&g), "Ax0.(0=0)");
    }

    #[test]
    fn imp_flatten_overhead_is_constant() {
        let small = Formula::imp(eq00(), eq00());
        let big = Formula::imp(
            Formula::forall(0, Formula::Eq(Term::Var(0), Term::Var(0))),
            Formula::not(eq00()),
        );
        for f in [small, big] {
            if let Formula::Imp(a, b) = &f {
                assert_eq!(
                    flatten(&f).len(),
                    flatten(a).len() + flatten(b).len() + 5
                );
            }
        }
    }
}
