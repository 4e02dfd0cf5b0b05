//! The standard least-witness form. For a body `A(x)` it is built,
//! recognized and instantiated in exactly one syntactic shape:
//!
//! ```text
//! ~Ax.((A(x)) -> (~Ay.((A(y)) -> ((y != x) -> (y > x)))))
//! ```
//!
//! that is, "some x satisfies A and every other witness exceeds it" —
//! with the order relations expanded per [`crate::syntax::mk_neq`] and
//! [`crate::syntax::mk_gt`]. Equivalent reshufflings are deliberately
//! not recognized; the whole construction depends on one fixed shape.

use thiserror::Error;

use crate::godel::{decode_formula, decode_proof_code, Budget, Code};
use crate::proof::{check_proof, Proof};
use crate::syntax::{
    mk_gt, mk_neq, numeral, substitute, Formula, SubstError, Term, TemplateStyle, VarIndex,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BformError {
    #[error("witness indices must be pairwise distinct and different from x{x}")]
    AuxCollision { x: VarIndex },
    #[error("witness index x{index} already occurs in the body")]
    AuxOccursInBody { index: VarIndex },
    #[error("substituting the witness variable fails: {0}")]
    Subst(#[from] SubstError),
}

/// The decomposition recovered from a formula in the standard form:
/// the body `A(x)` and the five variable roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BRecognition {
    pub body: Formula,
    pub var_x: VarIndex,
    pub var_y: VarIndex,
    pub var_u: VarIndex,
    pub var_v: VarIndex,
    pub var_w: VarIndex,
    pub style: TemplateStyle,
}

impl BRecognition {
    /// Reassembles the recognized formula; always reproduces it
    /// symbol for symbol.
    pub fn rebuild(&self) -> Formula {
        build_b(
            &self.body,
            self.var_x,
            [self.var_y, self.var_u, self.var_v, self.var_w],
            self.style,
        )
        .expect("a recognition is a valid template assignment")
    }
}

fn validate(a: &Formula, x: VarIndex, aux: [VarIndex; 4]) -> Result<(), BformError> {
    for (i, &p) in aux.iter().enumerate() {
        if p == x || aux[i + 1..].contains(&p) {
            return Err(BformError::AuxCollision { x });
        }
    }
    let used = a.all_vars();
    for &p in &aux {
        if used.contains(&p) {
            return Err(BformError::AuxOccursInBody { index: p });
        }
    }
    Ok(())
}

/// `Ay.((A(y)) -> ((y != x) -> (y > x)))` — the minimality spine
/// shared by the closed form, the inner form and the instance form.
fn spine(
    a: &Formula,
    x: VarIndex,
    [y, u, v, w]: [VarIndex; 4],
    style: TemplateStyle,
) -> Result<Formula, BformError> {
    let a_y = substitute(a, x, &Term::Var(y))?;
    let neq = mk_neq(y, x, u, v, style).map_err(|_| BformError::AuxCollision { x })?;
    let gt = mk_gt(y, x, w, style).map_err(|_| BformError::AuxCollision { x })?;
    Ok(Formula::forall(
        y,
        Formula::imp(a_y, Formula::imp(neq, gt)),
    ))
}

/// The closed least-witness formula `~Ax.((A(x)) -> ~(spine))`, i.e.
/// the existential closure with the doubled negation over the body
/// already collapsed. `aux` supplies `[y, u, v, w]`, which must be
/// fresh for the body and pairwise distinct from each other and from
/// `x`.
pub fn build_b(
    a: &Formula,
    x: VarIndex,
    aux: [VarIndex; 4],
    style: TemplateStyle,
) -> Result<Formula, BformError> {
    validate(a, x, aux)?;
    let spine = spine(a, x, aux, style)?;
    Ok(Formula::not(Formula::forall(
        x,
        Formula::imp(a.clone(), Formula::not(spine)),
    )))
}

/// The inner witness formula `B_A(x)` itself, without the existential
/// closure: the conjunction of the body and the minimality spine,
/// rendered `~((A(x)) -> (~(spine)))`.
pub fn build_b_inner(
    a: &Formula,
    x: VarIndex,
    aux: [VarIndex; 4],
    style: TemplateStyle,
) -> Result<Formula, BformError> {
    validate(a, x, aux)?;
    let spine = spine(a, x, aux, style)?;
    Ok(crate::syntax::mk_and(a.clone(), spine))
}

/// Recognizes a formula in the standard form and recovers the body and
/// variable roles. Succeeds exactly on [`build_b`] outputs;
/// equivalent-but-reshaped formulas are rejected.
pub fn recognize_b(f: &Formula, style: TemplateStyle) -> Option<BRecognition> {
    let Formula::Not(all_x) = f else { return None };
    let Formula::Forall(x, outer_imp) = &**all_x else {
        return None;
    };
    let Formula::Imp(body, not_spine) = &**outer_imp else {
        return None;
    };
    let Formula::Not(spine_f) = &**not_spine else { return None };
    let Formula::Forall(y, inner_imp) = &**spine_f else {
        return None;
    };
    let Formula::Imp(body_y, orders) = &**inner_imp else {
        return None;
    };
    let Formula::Imp(neq, gt) = &**orders else { return None };

    // witness indices are read off the shape, then the exact template
    // comparison confirms every detail
    let Formula::Imp(neq_l, _) = &**neq else { return None };
    let Formula::Forall(u, _) = &**neq_l else { return None };
    let Formula::Imp(_, neq_r) = &**neq else { return None };
    let Formula::Not(neq_r_all) = &**neq_r else { return None };
    let Formula::Forall(v, _) = &**neq_r_all else { return None };
    let Formula::Not(gt_all) = &**gt else { return None };
    let Formula::Forall(w, _) = &**gt_all else { return None };

    let rec = BRecognition {
        body: (**body).clone(),
        var_x: *x,
        var_y: *y,
        var_u: *u,
        var_v: *v,
        var_w: *w,
        style,
    };
    if validate(&rec.body, rec.var_x, [rec.var_y, rec.var_u, rec.var_v, rec.var_w]).is_err() {
        return None;
    }
    let expected_body_y = substitute(&rec.body, rec.var_x, &Term::Var(rec.var_y)).ok()?;
    if **body_y != expected_body_y {
        return None;
    }
    if **neq != mk_neq(rec.var_y, rec.var_x, rec.var_u, rec.var_v, style).ok()? {
        return None;
    }
    if **gt != mk_gt(rec.var_y, rec.var_x, rec.var_w, style).ok()? {
        return None;
    }
    Some(rec)
}

/// The instance stating that the numeral `n` is not the least witness:
/// the quantified body of the closed form with `0^(n)` substituted for
/// `x` — structurally the official rendering of `~B_A(0^(n))` with its
/// double negation collapsed:
///
/// ```text
/// (A(0^(n))) -> (~Ay.((A(y)) -> ((y != 0^(n)) -> (y > 0^(n)))))
/// ```
pub fn build_negb_instance(rec: &BRecognition, n: u64) -> Formula {
    let spine = spine(
        &rec.body,
        rec.var_x,
        [rec.var_y, rec.var_u, rec.var_v, rec.var_w],
        rec.style,
    )
    .expect("a recognition is a valid template assignment");
    let quantified_body = Formula::imp(rec.body.clone(), Formula::not(spine));
    substitute(&quantified_body, rec.var_x, &numeral(n))
        .expect("numerals are closed, so no capture is possible")
}

/// First argument of the decision procedure: a formula, given either
/// directly or as a code to decode.
#[derive(Debug, Clone)]
pub enum FormulaInput {
    Code(Code),
    Formula(Formula),
}

/// Second argument: a proof, given either as a structured object or as
/// a code (realistic proof codes cannot be materialized, so the
/// structured form is the primary path).
#[derive(Debug, Clone)]
pub enum ProofInput {
    Code(Code),
    Proof(Proof),
}

/// One step of the decision trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    pub ok: bool,
    pub detail: String,
}

/// Machine-readable record of how far the decision got.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RTrace {
    pub formula_step: Option<StepOutcome>,
    pub shape_step: Option<StepOutcome>,
    pub proof_step: Option<StepOutcome>,
}

impl RTrace {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, step) in [
            ("step 1 formula", &self.formula_step),
            ("step 2 shape", &self.shape_step),
            ("step 3 proof", &self.proof_step),
        ] {
            if let Some(s) = step {
                out.push_str(&format!(
                    "{name}: {} {}\n",
                    if s.ok { "ok" } else { "reject" },
                    s.detail
                ));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RDecision {
    pub verdict: bool,
    pub trace: RTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("budget exceeded while deciding: {0}")]
pub struct RBudget(pub String);

/// The three-step relation test: `l` codes a formula in the standard
/// least-witness shape, and `m` proves that the numeral `n` does not
/// satisfy its body minimally. Rejection at any step yields a `false`
/// verdict with the step recorded; exhausting the decoding budget is
/// reported separately, not as `false`.
pub fn decide_r(
    l: &FormulaInput,
    m: &ProofInput,
    n: u64,
    style: TemplateStyle,
    budget: &Budget,
) -> Result<RDecision, RBudget> {
    let mut trace = RTrace::default();

    let formula = match l {
        FormulaInput::Formula(f) => {
            trace.formula_step = Some(StepOutcome {
                ok: true,
                detail: "formula given directly".into(),
            });
            f.clone()
        }
        FormulaInput::Code(c) => match decode_formula(c, budget) {
            Ok(f) => {
                trace.formula_step = Some(StepOutcome {
                    ok: true,
                    detail: format!("decoded a formula of {} symbols", crate::syntax::flatten(&f).len()),
                });
                f
            }
            Err(e) if e.is_budget() => return Err(RBudget(e.to_string())),
            Err(e) => {
                trace.formula_step = Some(StepOutcome {
                    ok: false,
                    detail: e.to_string(),
                });
                return Ok(RDecision {
                    verdict: false,
                    trace,
                });
            }
        },
    };

    let rec = match recognize_b(&formula, style) {
        Some(rec) => {
            trace.shape_step = Some(StepOutcome {
                ok: true,
                detail: format!(
                    "standard form with x=x{}, y=x{}, u=x{}, v=x{}, w=x{}",
                    rec.var_x, rec.var_y, rec.var_u, rec.var_v, rec.var_w
                ),
            });
            rec
        }
        None => {
            trace.shape_step = Some(StepOutcome {
                ok: false,
                detail: "not in the standard least-witness shape".into(),
            });
            return Ok(RDecision {
                verdict: false,
                trace,
            });
        }
    };

    let instance = build_negb_instance(&rec, n);
    let proof = match m {
        ProofInput::Proof(p) => p.clone(),
        ProofInput::Code(c) => match decode_proof_code(c, budget) {
            Ok(formulas) => match Proof::from_formulas(formulas) {
                Ok(p) => p,
                Err(e) => {
                    trace.proof_step = Some(StepOutcome {
                        ok: false,
                        detail: e.to_string(),
                    });
                    return Ok(RDecision {
                        verdict: false,
                        trace,
                    });
                }
            },
            Err(e) if e.is_budget() => return Err(RBudget(e.to_string())),
            Err(e) => {
                trace.proof_step = Some(StepOutcome {
                    ok: false,
                    detail: e.to_string(),
                });
                return Ok(RDecision {
                    verdict: false,
                    trace,
                });
            }
        },
    };

    if proof.conclusion() != &instance || proof.target() != &instance {
        trace.proof_step = Some(StepOutcome {
            ok: false,
            detail: "proof conclusion is not the required instance".into(),
        });
        return Ok(RDecision {
            verdict: false,
            trace,
        });
    }
    match check_proof(&proof) {
        Ok(()) => {
            trace.proof_step = Some(StepOutcome {
                ok: true,
                detail: format!("valid {}-line proof of the instance", proof.lines().len()),
            });
            Ok(RDecision {
                verdict: true,
                trace,
            })
        }
        Err(failure) => {
            trace.proof_step = Some(StepOutcome {
                ok: false,
                detail: failure.to_string(),
            });
            Ok(RDecision {
                verdict: false,
                trace,
            })
        }
    }
}
