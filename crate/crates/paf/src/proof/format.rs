//! Plain-text proof files: one line per step,
//!
//! ```text
//! <index> | <formula text> | ax<N>
//! <index> | <formula text> | mp <i> <j>
//! <index> | <formula text> | gen <j> x<k>
//! ```
//!
//! Indices count from 0 in file order; blank lines and `#` comments
//! are skipped. The final line carries the target formula.

use thiserror::Error;

use crate::syntax::{parse_formula, ParseError, VarIndex};

use super::{Justification, Proof, ProofLine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofFileError {
    #[error("proof file has no steps")]
    Empty,
    #[error("line {line}: expected three '|'-separated fields")]
    Fields { line: usize },
    #[error("line {line}: step index {found} out of order (expected {expected})")]
    Index {
        line: usize,
        found: String,
        expected: usize,
    },
    #[error("line {line}: {source}")]
    Formula { line: usize, source: ParseError },
    #[error("line {line}: malformed justification {text:?}")]
    Justification { line: usize, text: String },
}

pub fn parse_proof(text: &str) -> Result<Proof, ProofFileError> {
    let mut lines = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = line_no + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.splitn(3, '|').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(ProofFileError::Fields { line });
        }
        let expected = lines.len();
        if fields[0].parse::<usize>() != Ok(expected) {
            return Err(ProofFileError::Index {
                line,
                found: fields[0].to_string(),
                expected,
            });
        }
        let formula =
            parse_formula(fields[1]).map_err(|source| ProofFileError::Formula { line, source })?;
        let justification = parse_justification(fields[2]).ok_or_else(|| {
            ProofFileError::Justification {
                line,
                text: fields[2].to_string(),
            }
        })?;
        lines.push(ProofLine {
            formula,
            justification,
        });
    }
    let target = lines
        .last()
        .map(|l| l.formula.clone())
        .ok_or(ProofFileError::Empty)?;
    Ok(Proof::new(lines, target).expect("non-empty by construction"))
}

fn parse_justification(text: &str) -> Option<Justification> {
    let mut words = text.split_whitespace();
    let head = words.next()?;
    let just = if let Some(schema) = head.strip_prefix("ax") {
        Justification::Axiom(schema.parse().ok()?)
    } else if head == "mp" {
        Justification::ModusPonens {
            antecedent: words.next()?.parse().ok()?,
            implication: words.next()?.parse().ok()?,
        }
    } else if head == "gen" {
        let premise = words.next()?.parse().ok()?;
        let var: VarIndex = words.next()?.strip_prefix('x')?.parse().ok()?;
        Justification::Generalization { premise, var }
    } else {
        return None;
    };
    if words.next().is_some() {
        return None;
    }
    Some(just)
}

pub fn format_proof(proof: &Proof) -> String {
    let mut out = String::new();
    for (i, line) in proof.lines().iter().enumerate() {
        let just = match &line.justification {
            Justification::Axiom(s) => format!("ax{s}"),
            Justification::ModusPonens {
                antecedent,
                implication,
            } => format!("mp {antecedent} {implication}"),
            Justification::Generalization { premise, var } => format!("gen {premise} x{var}"),
        };
        out.push_str(&format!("{i} | {} | {just}\n", line.formula));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::check_proof;

    const SUCC2: &str = "\
# 0''=0'' from reflexivity
0 | x0=x0 | ax16
1 | Ax0.(x0=x0) | gen 0 x0
2 | (Ax0.(x0=x0))->(0''=0'') | ax14
3 | 0''=0'' | mp 1 2
";

    #[test]
    fn parse_and_check() {
        let proof = parse_proof(SUCC2).unwrap();
        assert_eq!(proof.lines().len(), 4);
        assert_eq!(check_proof(&proof), Ok(()));
    }

    #[test]
    fn round_trips_through_format() {
        let proof = parse_proof(SUCC2).unwrap();
        let text = format_proof(&proof);
        assert_eq!(parse_proof(&text).unwrap(), proof);
    }

    #[test]
    fn bad_index_rejected() {
        let err = parse_proof("1 | 0=0 | ax16").unwrap_err();
        assert!(matches!(err, ProofFileError::Index { line: 1, .. }));
    }

    #[test]
    fn bad_justification_rejected() {
        let err = parse_proof("0 | x0=x0 | because").unwrap_err();
        assert!(matches!(err, ProofFileError::Justification { .. }));
        let err = parse_proof("0 | x0=x0 | mp 1").unwrap_err();
        assert!(matches!(err, ProofFileError::Justification { .. }));
        let err = parse_proof("0 | x0=x0 | ax16 extra").unwrap_err();
        assert!(matches!(err, ProofFileError::Justification { .. }));
    }

    #[test]
    fn formula_errors_carry_line_numbers() {
        let err = parse_proof("0 | x0=* | ax16").unwrap_err();
        assert!(matches!(err, ProofFileError::Formula { line: 1, .. }));
        assert!(matches!(parse_proof(""), Err(ProofFileError::Empty)));
    }
}
