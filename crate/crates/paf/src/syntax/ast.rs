use std::collections::BTreeSet;

use thiserror::Error;

/// Index `k` of a variable symbol `x_k`.
pub type VarIndex = u64;

/// A term of the language, built from `0`, variables, successor,
/// addition, multiplication and factorial. No other shapes exist.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    Var(VarIndex),
    Succ(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Fact(Box<Term>),
}

/// A formula: equality of terms, negation, implication and universal
/// quantification. Conjunction, existentials and order relations are
/// not constructors; they exist only as expansion templates (see
/// [`crate::syntax::sugar`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(VarIndex, Box<Formula>),
}

// constructor names follow the symbol table, not the operator traits
#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    pub fn add(s: Term, t: Term) -> Term {
        Term::Add(Box::new(s), Box::new(t))
    }

    pub fn mul(s: Term, t: Term) -> Term {
        Term::Mul(Box::new(s), Box::new(t))
    }

    pub fn fact(t: Term) -> Term {
        Term::Fact(Box::new(t))
    }

    /// Variables occurring in the term.
    pub fn vars(&self) -> BTreeSet<VarIndex> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<VarIndex>) {
        match self {
            Term::Zero => {}
            Term::Var(k) => {
                out.insert(*k);
            }
            Term::Succ(t) | Term::Fact(t) => t.collect_vars(out),
            Term::Add(s, t) | Term::Mul(s, t) => {
                s.collect_vars(out);
                t.collect_vars(out);
            }
        }
    }

    fn contains_var(&self, k: VarIndex) -> bool {
        match self {
            Term::Zero => false,
            Term::Var(j) => *j == k,
            Term::Succ(t) | Term::Fact(t) => t.contains_var(k),
            Term::Add(s, t) | Term::Mul(s, t) => s.contains_var(k) || t.contains_var(k),
        }
    }

    fn replace_var(&self, k: VarIndex, t: &Term) -> Term {
        match self {
            Term::Zero => Term::Zero,
            Term::Var(j) => {
                if *j == k {
                    t.clone()
                } else {
                    Term::Var(*j)
                }
            }
            Term::Succ(s) => Term::succ(s.replace_var(k, t)),
            Term::Fact(s) => Term::fact(s.replace_var(k, t)),
            Term::Add(a, b) => Term::add(a.replace_var(k, t), b.replace_var(k, t)),
            Term::Mul(a, b) => Term::mul(a.replace_var(k, t), b.replace_var(k, t)),
        }
    }
}

/// The numeral for `n`: the constant `0` under `n` successor strokes.
pub fn numeral(n: u64) -> Term {
    let mut t = Term::Zero;
    for _ in 0..n {
        t = Term::succ(t);
    }
    t
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    /// Substituting `t` for `x_k` would place a free variable of `t`
    /// under a quantifier binding it; the result would not be a legal
    /// instance.
    #[error("substituting for x{var} captures x{captured} under a quantifier")]
    Capture { var: VarIndex, captured: VarIndex },
}

#[allow(clippy::should_implement_trait)]
impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn forall(k: VarIndex, f: Formula) -> Formula {
        Formula::Forall(k, Box::new(f))
    }

    /// Variable indices occurring free.
    pub fn free_vars(&self) -> BTreeSet<VarIndex> {
        match self {
            Formula::Eq(s, t) => {
                let mut out = s.vars();
                out.extend(t.vars());
                out
            }
            Formula::Not(a) => a.free_vars(),
            Formula::Imp(a, b) => {
                let mut out = a.free_vars();
                out.extend(b.free_vars());
                out
            }
            Formula::Forall(k, a) => {
                let mut out = a.free_vars();
                out.remove(k);
                out
            }
        }
    }

    /// Every variable index occurring anywhere: free, bound, or as a
    /// quantifier binder.
    pub fn all_vars(&self) -> BTreeSet<VarIndex> {
        match self {
            Formula::Eq(s, t) => {
                let mut out = s.vars();
                out.extend(t.vars());
                out
            }
            Formula::Not(a) => a.all_vars(),
            Formula::Imp(a, b) => {
                let mut out = a.all_vars();
                out.extend(b.all_vars());
                out
            }
            Formula::Forall(k, a) => {
                let mut out = a.all_vars();
                out.insert(*k);
                out
            }
        }
    }

    pub fn is_free(&self, k: VarIndex) -> bool {
        match self {
            Formula::Eq(s, t) => s.contains_var(k) || t.contains_var(k),
            Formula::Not(a) => a.is_free(k),
            Formula::Imp(a, b) => a.is_free(k) || b.is_free(k),
            Formula::Forall(j, a) => *j != k && a.is_free(k),
        }
    }
}

/// Replaces every free occurrence of `x_k` in `f` by the term `t`.
/// Bound occurrences are untouched. Fails if `t` is not free for `x_k`
/// in `f`, i.e. if some free variable of `t` would be captured.
pub fn substitute(f: &Formula, k: VarIndex, t: &Term) -> Result<Formula, SubstError> {
    let t_vars = t.vars();
    subst_inner(f, k, t, &t_vars)
}

fn subst_inner(
    f: &Formula,
    k: VarIndex,
    t: &Term,
    t_vars: &BTreeSet<VarIndex>,
) -> Result<Formula, SubstError> {
    Ok(match f {
        Formula::Eq(s, u) => Formula::Eq(s.replace_var(k, t), u.replace_var(k, t)),
        Formula::Not(a) => Formula::not(subst_inner(a, k, t, t_vars)?),
        Formula::Imp(a, b) => Formula::imp(
            subst_inner(a, k, t, t_vars)?,
            subst_inner(b, k, t, t_vars)?,
        ),
        Formula::Forall(j, a) => {
            if *j == k {
                // x_k is bound here; nothing to substitute below.
                f.clone()
            } else {
                if a.is_free(k) && t_vars.contains(j) {
                    return Err(SubstError::Capture {
                        var: k,
                        captured: *j,
                    });
                }
                Formula::forall(*j, subst_inner(a, k, t, t_vars)?)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeral_shapes() {
        assert_eq!(numeral(0), Term::Zero);
        assert_eq!(
            numeral(3),
            Term::succ(Term::succ(Term::succ(Term::Zero)))
        );
    }

    #[test]
    fn free_vars_scope() {
        let f = Formula::Eq(Term::Var(0), Term::Zero);
        assert_eq!(f.free_vars(), BTreeSet::from([0]));
        let closed = Formula::forall(0, f.clone());
        assert!(closed.free_vars().is_empty());
        // x0 free on the right even though the antecedent binds it.
        let g = Formula::imp(
            Formula::forall(0, Formula::Eq(Term::Var(0), Term::Var(1))),
            Formula::Eq(Term::Var(0), Term::Zero),
        );
        assert_eq!(g.free_vars(), BTreeSet::from([0, 1]));
    }

    #[test]
    fn substitute_free_occurrences() {
        let f = Formula::Eq(Term::Var(0), Term::Var(0));
        let got = substitute(&f, 0, &numeral(2)).unwrap();
        assert_eq!(got, Formula::Eq(numeral(2), numeral(2)));
    }

    #[test]
    fn substitute_skips_bound() {
        let f = Formula::forall(0, Formula::Eq(Term::Var(0), Term::Var(0)));
        let got = substitute(&f, 0, &numeral(1)).unwrap();
        assert_eq!(got, f);
    }

    #[test]
    fn substitute_detects_capture() {
        // x1 is quantified; substituting x1 for the free x0 would bind it.
        let f = Formula::forall(1, Formula::Eq(Term::Var(0), Term::Var(1)));
        let err = substitute(&f, 0, &Term::Var(1)).unwrap_err();
        assert_eq!(
            err,
            SubstError::Capture {
                var: 0,
                captured: 1
            }
        );
    }

    #[test]
    fn substitute_identity() {
        let f = Formula::imp(
            Formula::forall(1, Formula::Eq(Term::Var(0), Term::Var(1))),
            Formula::Eq(Term::Var(0), Term::Zero),
        );
        assert_eq!(substitute(&f, 0, &Term::Var(0)).unwrap(), f);
    }
}
