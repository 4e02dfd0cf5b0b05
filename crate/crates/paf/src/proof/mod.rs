//! Hilbert-style proofs and their checker: a line is an axiom-schema
//! instance, follows by modus ponens from two earlier lines, or by
//! generalization from one earlier line; the last line is the target.

mod axioms;
mod builder;
mod format;

pub use axioms::match_axiom;
pub use builder::{double_neg_intro, ex_falso, tautology_identity, MacroError};
pub use format::{format_proof, parse_proof, ProofFileError};

use thiserror::Error;

use crate::syntax::{Formula, VarIndex};

/// Why a proof line holds. Rule references point at strictly earlier
/// lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// Instance of the axiom schema with this serial number (10..=28).
    Axiom(u8),
    /// From `antecedent: A` and `implication: A -> B`, conclude `B`.
    ModusPonens { antecedent: usize, implication: usize },
    /// From `premise: A`, conclude `forall x_var A`.
    Generalization { premise: usize, var: VarIndex },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: Formula,
    pub justification: Justification,
}

/// A non-empty sequence of justified lines together with the formula
/// the proof claims; validity additionally requires the last line to
/// equal the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    lines: Vec<ProofLine>,
    target: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("a proof has at least one line")]
pub struct EmptyProof;

impl Proof {
    pub fn new(lines: Vec<ProofLine>, target: Formula) -> Result<Proof, EmptyProof> {
        if lines.is_empty() {
            return Err(EmptyProof);
        }
        Ok(Proof { lines, target })
    }

    pub fn lines(&self) -> &[ProofLine] {
        &self.lines
    }

    pub fn target(&self) -> &Formula {
        &self.target
    }

    pub fn conclusion(&self) -> &Formula {
        &self.lines.last().expect("proofs are non-empty").formula
    }

    /// Reconstructs justifications for a bare formula sequence, as
    /// when a proof has been recovered from its code (the code records
    /// only the line formulas). Each line is searched for in order:
    /// first as an axiom instance, then as modus ponens or
    /// generalization over earlier lines.
    pub fn from_formulas(formulas: Vec<Formula>) -> Result<Proof, InferenceError> {
        if formulas.is_empty() {
            return Err(InferenceError::Empty);
        }
        let mut lines: Vec<ProofLine> = Vec::with_capacity(formulas.len());
        for (k, f) in formulas.iter().enumerate() {
            let justification = infer_line(&formulas[..k], f)
                .ok_or(InferenceError::NoJustification { line: k })?;
            lines.push(ProofLine {
                formula: f.clone(),
                justification,
            });
        }
        let target = formulas.last().unwrap().clone();
        Ok(Proof { lines, target })
    }
}

fn infer_line(earlier: &[Formula], f: &Formula) -> Option<Justification> {
    if let Some(&schema) = match_axiom(f).iter().next() {
        return Some(Justification::Axiom(schema));
    }
    for (j, imp) in earlier.iter().enumerate() {
        if let Formula::Imp(a, b) = imp {
            if **b == *f {
                if let Some(i) = earlier.iter().position(|g| g == &**a) {
                    if i < earlier.len() && j < earlier.len() {
                        return Some(Justification::ModusPonens {
                            antecedent: i,
                            implication: j,
                        });
                    }
                }
            }
        }
    }
    if let Formula::Forall(var, body) = f {
        if let Some(j) = earlier.iter().position(|g| g == &**body) {
            return Some(Justification::Generalization { premise: j, var: *var });
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InferenceError {
    #[error("a proof has at least one line")]
    Empty,
    #[error("line {line}: no justification found (not an axiom, no modus ponens or generalization premises)")]
    NoJustification { line: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MpError {
    #[error("second premise is not an implication")]
    NotAnImplication,
    #[error("antecedent does not match the first premise")]
    AntecedentMismatch,
}

/// Modus ponens as an operation: from `a` and `imp = a -> b`,
/// returns `b`.
pub fn apply_mp(a: &Formula, imp: &Formula) -> Result<Formula, MpError> {
    match imp {
        Formula::Imp(x, y) => {
            if **x == *a {
                Ok((**y).clone())
            } else {
                Err(MpError::AntecedentMismatch)
            }
        }
        _ => Err(MpError::NotAnImplication),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckReason {
    #[error("schema {schema} is not an axiom serial number")]
    UnknownSchema { schema: u8 },
    #[error("formula is not an instance of schema {schema}")]
    NotAnAxiomInstance { schema: u8 },
    #[error("justification references line {referenced}, which is not earlier")]
    ForwardReference { referenced: usize },
    #[error("modus ponens: {0}")]
    Mp(MpError),
    #[error("modus ponens result does not match the line formula")]
    MpResultMismatch,
    #[error("generalization of line {premise} over x{var} does not match the line formula")]
    GeneralizationMismatch { premise: usize, var: VarIndex },
    #[error("conclusion mismatch: last line differs from the target")]
    ConclusionMismatch,
}

/// First invalid line and why it fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct CheckFailure {
    pub line: usize,
    pub reason: CheckReason,
}

/// Validity per the deduction rules: every line an axiom instance or
/// derived by modus ponens or generalization from earlier lines, and
/// the last line equal to the target. Returns the first failing line;
/// never panics on malformed input.
pub fn check_proof(proof: &Proof) -> Result<(), CheckFailure> {
    let lines = proof.lines();
    for (k, line) in lines.iter().enumerate() {
        check_line(lines, k, line).map_err(|reason| CheckFailure { line: k, reason })?;
    }
    if proof.conclusion() != proof.target() {
        return Err(CheckFailure {
            line: lines.len() - 1,
            reason: CheckReason::ConclusionMismatch,
        });
    }
    Ok(())
}

fn check_line(lines: &[ProofLine], k: usize, line: &ProofLine) -> Result<(), CheckReason> {
    match &line.justification {
        Justification::Axiom(schema) => {
            if !(10..=28).contains(schema) {
                return Err(CheckReason::UnknownSchema { schema: *schema });
            }
            if !match_axiom(&line.formula).contains(schema) {
                return Err(CheckReason::NotAnAxiomInstance { schema: *schema });
            }
            Ok(())
        }
        Justification::ModusPonens {
            antecedent,
            implication,
        } => {
            for &r in [antecedent, implication] {
                if r >= k {
                    return Err(CheckReason::ForwardReference { referenced: r });
                }
            }
            let result = apply_mp(
                &lines[*antecedent].formula,
                &lines[*implication].formula,
            )
            .map_err(CheckReason::Mp)?;
            if result != line.formula {
                return Err(CheckReason::MpResultMismatch);
            }
            Ok(())
        }
        Justification::Generalization { premise, var } => {
            if *premise >= k {
                return Err(CheckReason::ForwardReference { referenced: *premise });
            }
            let expected = Formula::forall(*var, lines[*premise].formula.clone());
            if expected != line.formula {
                return Err(CheckReason::GeneralizationMismatch {
                    premise: *premise,
                    var: *var,
                });
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{numeral, parse_formula, substitute};

    fn pf(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    /// The four-line derivation of 0''=0'' from x0=x0 by Gen + schema
    /// 14 + MP.
    pub(crate) fn succ2_proof() -> Proof {
        let x_eq = pf("x0=x0");
        let all = Formula::forall(0, x_eq.clone());
        let inst = substitute(&x_eq, 0, &numeral(2)).unwrap();
        let lines = vec![
            ProofLine {
                formula: x_eq,
                justification: Justification::Axiom(16),
            },
            ProofLine {
                formula: all.clone(),
                justification: Justification::Generalization { premise: 0, var: 0 },
            },
            ProofLine {
                formula: Formula::imp(all, inst.clone()),
                justification: Justification::Axiom(14),
            },
            ProofLine {
                formula: inst.clone(),
                justification: Justification::ModusPonens {
                    antecedent: 1,
                    implication: 2,
                },
            },
        ];
        Proof::new(lines, inst).unwrap()
    }

    #[test]
    fn succ2_is_valid() {
        assert_eq!(check_proof(&succ2_proof()), Ok(()));
        assert_eq!(succ2_proof().conclusion(), &pf("0''=0''"));
    }

    #[test]
    fn swapped_lines_fail_with_forward_reference() {
        let good = succ2_proof();
        let mut lines = good.lines().to_vec();
        lines.swap(2, 3);
        // the MP line now sits at index 2 and references line 2
        let bad = Proof::new(lines, good.target().clone()).unwrap();
        let failure = check_proof(&bad).unwrap_err();
        assert_eq!(failure.line, 2);
        assert_eq!(failure.reason, CheckReason::ForwardReference { referenced: 2 });
    }

    #[test]
    fn conclusion_mismatch_reported() {
        let good = succ2_proof();
        let bad = Proof::new(good.lines().to_vec(), pf("0=0")).unwrap();
        let failure = check_proof(&bad).unwrap_err();
        assert_eq!(failure.reason, CheckReason::ConclusionMismatch);
    }

    #[test]
    fn apply_mp_cases() {
        let a = pf("0=0");
        let imp = pf("(0=0)->(0'=0')");
        assert_eq!(apply_mp(&a, &imp).unwrap(), pf("0'=0'"));
        assert_eq!(
            apply_mp(&a, &a).unwrap_err(),
            MpError::NotAnImplication
        );
        let wrong = pf("(0'=0')->(0=0)");
        assert_eq!(
            apply_mp(&a, &wrong).unwrap_err(),
            MpError::AntecedentMismatch
        );
    }

    #[test]
    fn empty_proof_invalid() {
        assert_eq!(
            Proof::new(Vec::new(), pf("0=0")).unwrap_err(),
            EmptyProof
        );
        assert_eq!(
            Proof::from_formulas(Vec::new()).unwrap_err(),
            InferenceError::Empty
        );
    }

    #[test]
    fn justification_inference_recovers_succ2() {
        let formulas: Vec<Formula> = succ2_proof()
            .lines()
            .iter()
            .map(|l| l.formula.clone())
            .collect();
        let inferred = Proof::from_formulas(formulas).unwrap();
        assert_eq!(check_proof(&inferred), Ok(()));
        assert_eq!(inferred.conclusion(), &pf("0''=0''"));
    }

    #[test]
    fn inference_reports_unjustifiable_line() {
        let err = Proof::from_formulas(vec![pf("0=0'")]).unwrap_err();
        assert_eq!(err, InferenceError::NoJustification { line: 0 });
    }

    #[test]
    fn prefix_of_valid_proof_is_valid() {
        let doubled = crate::proof::double_neg_intro(&succ2_proof()).unwrap();
        for good in [succ2_proof(), doubled] {
            for n in 1..=good.lines().len() {
                let lines = good.lines()[..n].to_vec();
                let target = lines.last().unwrap().formula.clone();
                let prefix = Proof::new(lines, target).unwrap();
                assert_eq!(check_proof(&prefix), Ok(()));
            }
        }
    }
}
