//! Derived propositional proofs, assembled from schemas 10-12 and
//! modus ponens only. The builder deduplicates lines, so shared
//! lemmas are proved once per proof.

use std::collections::HashMap;

use thiserror::Error;

use crate::syntax::Formula;

use super::{check_proof, match_axiom, CheckFailure, Justification, Proof, ProofLine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacroError {
    #[error("input proof is not valid: {0}")]
    InvalidInput(CheckFailure),
    #[error("conclusion is not a negation")]
    NotANegation,
}

struct Builder {
    lines: Vec<ProofLine>,
    seen: HashMap<Formula, usize>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            lines: Vec::new(),
            seen: HashMap::new(),
        }
    }

    fn formula(&self, i: usize) -> &Formula {
        &self.lines[i].formula
    }

    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        if let Some(&i) = self.seen.get(&formula) {
            return i;
        }
        let i = self.lines.len();
        self.seen.insert(formula.clone(), i);
        self.lines.push(ProofLine {
            formula,
            justification,
        });
        i
    }

    fn axiom(&mut self, schema: u8, formula: Formula) -> usize {
        debug_assert!(
            match_axiom(&formula).contains(&schema),
            "not a schema-{schema} instance: {formula}"
        );
        self.push(formula, Justification::Axiom(schema))
    }

    /// ax 10: a -> (b -> a)
    fn k(&mut self, a: &Formula, b: &Formula) -> usize {
        let f = Formula::imp(a.clone(), Formula::imp(b.clone(), a.clone()));
        self.axiom(10, f)
    }

    /// ax 11: (a -> (b -> c)) -> ((a -> b) -> (a -> c))
    fn s(&mut self, a: &Formula, b: &Formula, c: &Formula) -> usize {
        let f = Formula::imp(
            Formula::imp(a.clone(), Formula::imp(b.clone(), c.clone())),
            Formula::imp(
                Formula::imp(a.clone(), b.clone()),
                Formula::imp(a.clone(), c.clone()),
            ),
        );
        self.axiom(11, f)
    }

    /// ax 12: (~a -> ~b) -> (b -> a)
    fn contrap(&mut self, a: &Formula, b: &Formula) -> usize {
        let f = Formula::imp(
            Formula::imp(Formula::not(a.clone()), Formula::not(b.clone())),
            Formula::imp(b.clone(), a.clone()),
        );
        self.axiom(12, f)
    }

    fn mp(&mut self, antecedent: usize, implication: usize) -> usize {
        let Formula::Imp(a, b) = self.formula(implication).clone() else {
            panic!("mp on a non-implication line");
        };
        assert_eq!(&*a, self.formula(antecedent), "mp antecedent mismatch");
        self.push(
            (*b).clone(),
            Justification::ModusPonens {
                antecedent,
                implication,
            },
        )
    }

    /// From lines `a -> b` and `b -> c`, derives `a -> c`.
    fn syl(&mut self, i: usize, j: usize) -> usize {
        let Formula::Imp(a, b) = self.formula(i).clone() else {
            panic!("syl on a non-implication line");
        };
        let Formula::Imp(b2, c) = self.formula(j).clone() else {
            panic!("syl on a non-implication line");
        };
        assert_eq!(b, b2, "syl middle mismatch");
        let bc = self.formula(j).clone();
        let l1 = self.k(&bc, &a);
        let l2 = self.mp(j, l1); // a -> (b -> c)
        let l3 = self.s(&a, &b, &c);
        let l4 = self.mp(l2, l3); // (a -> b) -> (a -> c)
        self.mp(i, l4)
    }

    /// a -> a, the standard five lines from 10 and 11.
    fn id(&mut self, a: &Formula) -> usize {
        let aa = Formula::imp(a.clone(), a.clone());
        let l0 = self.k(a, &aa);
        let l1 = self.s(a, &aa, a);
        let l2 = self.mp(l0, l1); // (a -> (a -> a)) -> (a -> a)
        let l3 = self.k(a, a); // a -> (a -> a)
        self.mp(l3, l2)
    }

    /// ~a -> (a -> b)
    fn pm2_21(&mut self, a: &Formula, b: &Formula) -> usize {
        let na = Formula::not(a.clone());
        let l1 = self.k(&na, &Formula::not(b.clone())); // ~a -> (~b -> ~a)
        let l2 = self.contrap(b, a); // (~b -> ~a) -> (a -> b)
        self.syl(l1, l2)
    }

    /// From `x -> (x -> y)`, derives `x -> y`.
    fn contract(&mut self, i: usize) -> usize {
        let Formula::Imp(x, xy) = self.formula(i).clone() else {
            panic!("contract on a non-implication line");
        };
        let Formula::Imp(_, y) = (*xy).clone() else {
            panic!("contract needs x -> (x -> y)");
        };
        let l1 = self.s(&x, &x, &y);
        let l2 = self.mp(i, l1); // (x -> x) -> (x -> y)
        let l3 = self.id(&x);
        self.mp(l3, l2)
    }

    /// (~a -> a) -> a
    fn pm2_18(&mut self, a: &Formula) -> usize {
        let na = Formula::not(a.clone());
        let na_a = Formula::imp(na.clone(), a.clone());
        let not_na_a = Formula::not(na_a.clone());
        let l1 = self.pm2_21(a, &not_na_a); // ~a -> (a -> ~(~a -> a))
        let l2 = self.s(&na, a, &not_na_a);
        let l3 = self.mp(l1, l2); // (~a -> a) -> (~a -> ~(~a -> a))
        let l4 = self.contrap(a, &na_a); // (~a -> ~(~a -> a)) -> ((~a -> a) -> a)
        let l5 = self.syl(l3, l4); // (~a -> a) -> ((~a -> a) -> a)
        self.contract(l5)
    }

    /// ~~a -> a
    fn notnotr(&mut self, a: &Formula) -> usize {
        let na = Formula::not(a.clone());
        let l1 = self.pm2_21(&na, a); // ~~a -> (~a -> a)
        let l2 = self.pm2_18(a); // (~a -> a) -> a
        self.syl(l1, l2)
    }

    /// a -> ~~a
    fn notnot(&mut self, a: &Formula) -> usize {
        let nna = Formula::not(Formula::not(a.clone()));
        let l1 = self.notnotr(&Formula::not(a.clone())); // ~~~a -> ~a
        let l2 = self.contrap(&nna, a); // (~~~a -> ~a) -> (a -> ~~a)
        self.mp(l1, l2)
    }

    /// Imports every line of an existing proof, remapping its rule
    /// references; returns the index of its conclusion.
    fn import(&mut self, proof: &Proof) -> usize {
        let mut map = Vec::with_capacity(proof.lines().len());
        for line in proof.lines() {
            let justification = match line.justification {
                Justification::Axiom(s) => Justification::Axiom(s),
                Justification::ModusPonens {
                    antecedent,
                    implication,
                } => Justification::ModusPonens {
                    antecedent: map[antecedent],
                    implication: map[implication],
                },
                Justification::Generalization { premise, var } => {
                    Justification::Generalization {
                        premise: map[premise],
                        var,
                    }
                }
            };
            map.push(self.push(line.formula.clone(), justification));
        }
        *map.last().expect("proofs are non-empty")
    }

    fn into_proof(mut self, conclusion: usize) -> Proof {
        // rule references only point backwards, so dropping everything
        // after the conclusion keeps the proof self-contained
        self.lines.truncate(conclusion + 1);
        let target = self.lines[conclusion].formula.clone();
        Proof::new(self.lines, target).expect("builder proofs are non-empty")
    }
}

/// The five-line proof of `a -> a` from schemas 10 and 11.
pub fn tautology_identity(a: &Formula) -> Proof {
    let mut b = Builder::new();
    let last = b.id(a);
    b.into_proof(last)
}

/// Extends a valid proof of `A` to a proof of `~~A`.
pub fn double_neg_intro(proof: &Proof) -> Result<Proof, MacroError> {
    check_proof(proof).map_err(MacroError::InvalidInput)?;
    let mut b = Builder::new();
    let concl = b.import(proof);
    let a = b.formula(concl).clone();
    let intro = b.notnot(&a); // a -> ~~a
    let last = b.mp(concl, intro);
    Ok(b.into_proof(last))
}

/// From a valid proof of `~A`, derives `A -> C` for any formula `C`.
pub fn ex_falso(proof: &Proof, c: &Formula) -> Result<Proof, MacroError> {
    check_proof(proof).map_err(MacroError::InvalidInput)?;
    let Formula::Not(a) = proof.conclusion().clone() else {
        return Err(MacroError::NotANegation);
    };
    let mut b = Builder::new();
    let concl = b.import(proof);
    let na = b.formula(concl).clone();
    let l1 = b.k(&na, &Formula::not(c.clone())); // ~a -> (~c -> ~a)
    let l2 = b.mp(concl, l1); // ~c -> ~a
    let l3 = b.contrap(c, &a); // (~c -> ~a) -> (a -> c)
    let last = b.mp(l2, l3);
    Ok(b.into_proof(last))
}
