//! Axiom-schema recognition. Each schema is matched structurally;
//! 13, 14, 15 and 28 carry free-occurrence or free-for side
//! conditions. The induction schema is matched against its official
//! connective-free form
//! `(~((A[0]) -> (~Ax_k.((A[x_k]) -> (A[x_k']))))) -> (A[x_k])`.

use std::collections::BTreeSet;

use crate::syntax::{substitute, Formula, Term, VarIndex};

/// All schema serial numbers (10..=28) that `f` instantiates. Empty
/// set means `f` is not an axiom.
type SchemaCheck = fn(&Formula) -> bool;

pub fn match_axiom(f: &Formula) -> BTreeSet<u8> {
    let mut out = BTreeSet::new();
    let checks: [(u8, SchemaCheck); 19] = [
        (10, ax10),
        (11, ax11),
        (12, ax12),
        (13, ax13),
        (14, ax14),
        (15, ax15),
        (16, ax16),
        (17, ax17),
        (18, ax18),
        (19, ax19),
        (20, ax20),
        (21, ax21),
        (22, ax22),
        (23, ax23),
        (24, ax24),
        (25, ax25),
        (26, ax26),
        (27, ax27),
        (28, ax28),
    ];
    for (id, check) in checks {
        if check(f) {
            out.insert(id);
        }
    }
    out
}

/// A -> (B -> A)
fn ax10(f: &Formula) -> bool {
    matches!(f, Formula::Imp(a, bc)
        if matches!(&**bc, Formula::Imp(_, a2) if a == a2))
}

/// (A -> (B -> C)) -> ((A -> B) -> (A -> C))
fn ax11(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    let Formula::Imp(a, bc) = &**l else { return false };
    let Formula::Imp(b, c) = &**bc else { return false };
    let Formula::Imp(ab, ac) = &**r else { return false };
    let Formula::Imp(a2, b2) = &**ab else { return false };
    let Formula::Imp(a3, c2) = &**ac else { return false };
    a == a2 && a == a3 && b == b2 && c == c2
}

/// (~A -> ~B) -> (B -> A)
fn ax12(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    let Formula::Imp(na, nb) = &**l else { return false };
    let (Formula::Not(a), Formula::Not(b)) = (&**na, &**nb) else {
        return false;
    };
    let Formula::Imp(b2, a2) = &**r else { return false };
    a == a2 && b == b2
}

/// Ax_k.A -> A, with x_k not free in A
fn ax13(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    let Formula::Forall(k, a) = &**l else { return false };
    **a == **r && !a.is_free(*k)
}

/// Ax_k.A[x_k] -> A[t], with x_k free in A and t free for x_k
fn ax14(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    let Formula::Forall(k, a) = &**l else { return false };
    if !a.is_free(*k) {
        return false;
    }
    let mut candidate = None;
    if !unify_formula(a, r, *k, false, &mut candidate) {
        return false;
    }
    let Some(t) = candidate else { return false };
    // the real substitution enforces the free-for side condition
    matches!(substitute(a, *k, &t), Ok(inst) if inst == **r)
}

/// Ax_k.(A -> B) -> (A -> Ax_k.B), with x_k not free in A
fn ax15(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    let Formula::Forall(k, ab) = &**l else { return false };
    let Formula::Imp(a, b) = &**ab else { return false };
    let Formula::Imp(a2, all_b) = &**r else { return false };
    let Formula::Forall(k2, b2) = &**all_b else { return false };
    k == k2 && a == a2 && b == b2 && !a.is_free(*k)
}

/// x_k = x_k
fn ax16(f: &Formula) -> bool {
    matches!(f, Formula::Eq(Term::Var(i), Term::Var(j)) if i == j)
}

fn as_var_eq(f: &Formula) -> Option<(VarIndex, VarIndex)> {
    match f {
        Formula::Eq(Term::Var(i), Term::Var(j)) => Some((*i, *j)),
        _ => None,
    }
}

/// (x_i = x_j) -> (x_j = x_i)
fn ax17(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    match (as_var_eq(l), as_var_eq(r)) {
        (Some((i, j)), Some((j2, i2))) => i == i2 && j == j2,
        _ => false,
    }
}

/// (x_i = x_j) -> ((x_i = x_k) -> (x_j = x_k))
fn ax18(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    let Some((i, j)) = as_var_eq(l) else { return false };
    let Formula::Imp(m, n) = &**r else { return false };
    let (Some((i2, k)), Some((j2, k2))) = (as_var_eq(m), as_var_eq(n)) else {
        return false;
    };
    i == i2 && j == j2 && k == k2
}

/// (x_i = x_j) -> (x_i' = x_j')
fn ax19(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    let Some((i, j)) = as_var_eq(l) else { return false };
    let Formula::Eq(Term::Succ(si), Term::Succ(sj)) = &**r else {
        return false;
    };
    **si == Term::Var(i) && **sj == Term::Var(j)
}

/// ~(x_k' = 0)
fn ax20(f: &Formula) -> bool {
    let Formula::Not(inner) = f else { return false };
    let Formula::Eq(Term::Succ(s), Term::Zero) = &**inner else {
        return false;
    };
    matches!(**s, Term::Var(_))
}

/// (x_i' = x_j') -> (x_i = x_j)
fn ax21(f: &Formula) -> bool {
    let Formula::Imp(l, r) = f else { return false };
    let Formula::Eq(Term::Succ(si), Term::Succ(sj)) = &**l else {
        return false;
    };
    let Some((i, j)) = as_var_eq(r) else { return false };
    **si == Term::Var(i) && **sj == Term::Var(j)
}

/// x_k + 0 = x_k
fn ax22(f: &Formula) -> bool {
    let Formula::Eq(Term::Add(a, z), Term::Var(k)) = f else {
        return false;
    };
    **a == Term::Var(*k) && **z == Term::Zero
}

/// x_i + x_j' = (x_i + x_j)'
fn ax23(f: &Formula) -> bool {
    let Formula::Eq(l, Term::Succ(r)) = f else { return false };
    let Term::Add(xi, sj) = l else { return false };
    let Term::Succ(xj) = &**sj else { return false };
    let (Term::Var(i), Term::Var(j)) = (&**xi, &**xj) else {
        return false;
    };
    **r == Term::add(Term::Var(*i), Term::Var(*j))
}

/// x_k * 0 = 0
fn ax24(f: &Formula) -> bool {
    let Formula::Eq(Term::Mul(a, z), Term::Zero) = f else {
        return false;
    };
    matches!(**a, Term::Var(_)) && **z == Term::Zero
}

/// x_i * x_j' = x_i * x_j + x_i
fn ax25(f: &Formula) -> bool {
    let Formula::Eq(l, r) = f else { return false };
    let Term::Mul(xi, sj) = l else { return false };
    let Term::Succ(xj) = &**sj else { return false };
    let (Term::Var(i), Term::Var(j)) = (&**xi, &**xj) else {
        return false;
    };
    *r == Term::add(
        Term::mul(Term::Var(*i), Term::Var(*j)),
        Term::Var(*i),
    )
}

/// 0! = 0'
fn ax26(f: &Formula) -> bool {
    let Formula::Eq(Term::Fact(z), Term::Succ(z2)) = f else {
        return false;
    };
    **z == Term::Zero && **z2 == Term::Zero
}

/// (x_k')! = x_k' * x_k!
fn ax27(f: &Formula) -> bool {
    let Formula::Eq(l, r) = f else { return false };
    let Term::Fact(sk) = l else { return false };
    let Term::Succ(xk) = &**sk else { return false };
    let Term::Var(k) = &**xk else { return false };
    *r == Term::mul(
        Term::succ(Term::Var(*k)),
        Term::fact(Term::Var(*k)),
    )
}

/// Induction, connective-free: the conjunction of the base case and
/// the closed step implies A[x_k], with x_k free in A.
fn ax28(f: &Formula) -> bool {
    let Formula::Imp(l, a_end) = f else { return false };
    let Formula::Not(inner) = &**l else { return false };
    let Formula::Imp(base, not_step) = &**inner else { return false };
    let Formula::Not(all_step) = &**not_step else { return false };
    let Formula::Forall(k, step) = &**all_step else { return false };
    let Formula::Imp(a, a_succ) = &**step else { return false };
    if **a != **a_end || !a.is_free(*k) {
        return false;
    }
    let base_expected = match substitute(a, *k, &Term::Zero) {
        Ok(g) => g,
        Err(_) => return false,
    };
    let succ_expected = match substitute(a, *k, &Term::succ(Term::Var(*k))) {
        Ok(g) => g,
        Err(_) => return false,
    };
    **base == base_expected && **a_succ == succ_expected
}

/// Matches `instance` against `pattern` where every free occurrence of
/// `x_k` in `pattern` may stand for one common term; records that term
/// in `candidate`. Occurrences under a binder for `x_k` must match
/// exactly.
fn unify_formula(
    pattern: &Formula,
    instance: &Formula,
    k: VarIndex,
    k_bound: bool,
    candidate: &mut Option<Term>,
) -> bool {
    match (pattern, instance) {
        (Formula::Eq(s1, t1), Formula::Eq(s2, t2)) => {
            unify_term(s1, s2, k, k_bound, candidate)
                && unify_term(t1, t2, k, k_bound, candidate)
        }
        (Formula::Not(a), Formula::Not(b)) => unify_formula(a, b, k, k_bound, candidate),
        (Formula::Imp(a1, b1), Formula::Imp(a2, b2)) => {
            unify_formula(a1, a2, k, k_bound, candidate)
                && unify_formula(b1, b2, k, k_bound, candidate)
        }
        (Formula::Forall(j1, a1), Formula::Forall(j2, a2)) => {
            j1 == j2 && unify_formula(a1, a2, k, k_bound || *j1 == k, candidate)
        }
        _ => false,
    }
}

fn unify_term(
    pattern: &Term,
    instance: &Term,
    k: VarIndex,
    k_bound: bool,
    candidate: &mut Option<Term>,
) -> bool {
    if !k_bound {
        if let Term::Var(j) = pattern {
            if *j == k {
                return match candidate {
                    Some(t) => t == instance,
                    None => {
                        *candidate = Some(instance.clone());
                        true
                    }
                };
            }
        }
    }
    match (pattern, instance) {
        (Term::Zero, Term::Zero) => true,
        (Term::Var(a), Term::Var(b)) => a == b,
        (Term::Succ(a), Term::Succ(b)) | (Term::Fact(a), Term::Fact(b)) => {
            unify_term(a, b, k, k_bound, candidate)
        }
        (Term::Add(a1, b1), Term::Add(a2, b2)) | (Term::Mul(a1, b1), Term::Mul(a2, b2)) => {
            unify_term(a1, a2, k, k_bound, candidate)
                && unify_term(b1, b2, k, k_bound, candidate)
        }
        _ => false,
    }
}
