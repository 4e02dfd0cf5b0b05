//! Acceptance suite: one test per criterion, each printing a pass line
//! (run with `--nocapture` to see them; a failed assertion marks the
//! criterion failed).

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use paf::berry::{
    build_berry, build_berry_with_l2, certify, condition3_holds, condition3_min_l2, demo_r,
    lemma4_check, stirling_ln_factorial, theorem2_min_l2, tower_exact, tower_lnln_floor,
    BerryInput, TowerFloor,
};
use paf::bform::{build_b, build_negb_instance, decide_r, recognize_b, FormulaInput, ProofInput};
use paf::godel::{
    check_lemma2, decode_formula, encode_formula, symbol_code, Budget, Code,
};
use paf::proof::{
    check_proof, double_neg_intro, ex_falso, match_axiom, tautology_identity, CheckReason,
    Justification, MpError, Proof, ProofLine,
};
use paf::syntax::{
    numeral, parse_formula, substitute, Formula, Symbol, TemplateStyle, Term,
};

fn pf(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just(Term::Zero), (0u64..6).prop_map(Term::Var)];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::succ),
            inner.clone().prop_map(Term::fact),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::mul(a, b)),
        ]
    })
}

fn arb_formula(depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = (arb_term(), arb_term()).prop_map(|(s, t)| Formula::Eq(s, t));
    leaf.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            ((0u64..6), inner).prop_map(|(k, a)| Formula::forall(k, a)),
        ]
    })
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

#[test]
fn criterion_01_symbol_table() {
    let expected: [(Symbol, u64); 12] = [
        (Symbol::LParen, 3),
        (Symbol::RParen, 5),
        (Symbol::Comma, 7),
        (Symbol::Zero, 9),
        (Symbol::Succ, 11),
        (Symbol::Plus, 13),
        (Symbol::Times, 15),
        (Symbol::Fact, 17),
        (Symbol::Eq, 19),
        (Symbol::Not, 21),
        (Symbol::Imp, 23),
        (Symbol::Forall, 25),
    ];
    for (sym, code) in expected {
        assert_eq!(symbol_code(&sym), code, "{sym:?}");
    }
    for k in 0..=100u64 {
        assert_eq!(symbol_code(&Symbol::Var(k)), 2 * k + 27);
    }
    println!("criterion 1 (symbol table fidelity): pass");
}

#[test]
fn criterion_02_coding_round_trip() {
    let budget = Budget::default();
    runner(500)
        .run(&arb_formula(6), |f| {
            let code = encode_formula(&f);
            prop_assert_eq!(decode_formula(&code, &budget).unwrap(), f);
            Ok(())
        })
        .unwrap();
    println!("criterion 2 (coding round trip, 500 formulas): pass");
}

/// The corpus proofs plus one deletion and one permutation mutant
/// each, failing at the documented line.
#[test]
fn criterion_03_proof_checker() {
    let succ2 = succ2_proof();
    let identity = tautology_identity(&pf("0=0"));
    let double_neg = double_neg_intro(&succ2).unwrap();
    let ax20 = Proof::new(
        vec![ProofLine {
            formula: pf("~(x0'=0)"),
            justification: Justification::Axiom(20),
        }],
        pf("~(x0'=0)"),
    )
    .unwrap();
    let exfalso = ex_falso(&ax20, &pf("0=0")).unwrap();

    for (name, proof) in [
        ("succ2", &succ2),
        ("identity", &identity),
        ("double-neg", &double_neg),
        ("ex-falso", &exfalso),
    ] {
        assert_eq!(check_proof(proof), Ok(()), "{name} must validate");
    }

    // deletions
    let deleted = |p: &Proof, i: usize| {
        let mut lines = p.lines().to_vec();
        lines.remove(i);
        Proof::new(lines, p.target().clone()).unwrap()
    };
    // succ2 without line 0: the generalization at new line 0 points at itself
    let f = check_proof(&deleted(&succ2, 0)).unwrap_err();
    assert_eq!((f.line, f.reason), (0, CheckReason::ForwardReference { referenced: 0 }));
    // identity without line 0: the detachment at new line 1 points at itself
    let f = check_proof(&deleted(&identity, 0)).unwrap_err();
    assert_eq!((f.line, f.reason), (1, CheckReason::ForwardReference { referenced: 1 }));
    // double-neg without its last line: conclusion no longer matches
    let n = double_neg.lines().len();
    let f = check_proof(&deleted(&double_neg, n - 1)).unwrap_err();
    assert_eq!((f.line, f.reason), (n - 2, CheckReason::ConclusionMismatch));
    // ex-falso without the schema-10 line: the detachment points at itself
    let f = check_proof(&deleted(&exfalso, 1)).unwrap_err();
    assert_eq!((f.line, f.reason), (1, CheckReason::ForwardReference { referenced: 1 }));

    // permutations
    let swapped = |p: &Proof, i: usize, j: usize| {
        let mut lines = p.lines().to_vec();
        lines.swap(i, j);
        Proof::new(lines, p.target().clone()).unwrap()
    };
    // succ2 with lines 2 and 3 swapped: detachment before its premise
    let f = check_proof(&swapped(&succ2, 2, 3)).unwrap_err();
    assert_eq!((f.line, f.reason), (2, CheckReason::ForwardReference { referenced: 2 }));
    // identity with its two axioms swapped: detachment applies to the
    // wrong implication
    let f = check_proof(&swapped(&identity, 0, 1)).unwrap_err();
    assert_eq!(
        (f.line, f.reason),
        (2, CheckReason::Mp(MpError::AntecedentMismatch))
    );
    // double-neg with the first two lines swapped: the generalization
    // at line 0 points at itself
    let f = check_proof(&swapped(&double_neg, 0, 1)).unwrap_err();
    assert_eq!((f.line, f.reason), (0, CheckReason::ForwardReference { referenced: 0 }));
    // ex-falso with the last two lines swapped
    let f = check_proof(&swapped(&exfalso, 3, 4)).unwrap_err();
    assert_eq!((f.line, f.reason), (3, CheckReason::ForwardReference { referenced: 3 }));

    println!("criterion 3 (proof corpus and mutants): pass");
}

#[test]
fn criterion_04_axiom_coverage() {
    let induction_pos =
        "(~((0+0=0)->(~Ax0.((x0+0=x0)->(x0'+0=x0')))))->(x0+0=x0)";
    let induction_near =
        "(~((0'+0=0')->(~Ax0.((x0+0=x0)->(x0'+0=x0')))))->(x0+0=x0)";
    let cases: [(u8, &str, &str); 19] = [
        (10, "(0=0)->((0'=0')->(0=0))", "(0=0)->((0'=0')->(0=0'))"),
        (
            11,
            "((0=0)->((0'=0')->(0''=0'')))->(((0=0)->(0'=0'))->((0=0)->(0''=0'')))",
            "((0=0)->((0'=0')->(0''=0'')))->(((0=0)->(0'=0'))->((0=0)->(0''=0')))",
        ),
        (
            12,
            "((~(0=0))->(~(0'=0')))->((0'=0')->(0=0))",
            "((~(0=0))->(~(0'=0')))->((0'=0')->(0=0'))",
        ),
        (13, "(Ax1.(0=0))->(0=0)", "(Ax1.(0=0))->(0=0')"),
        (14, "(Ax0.(x0=x0))->(0''=0'')", "(Ax0.(x0=x0))->(0''=0')"),
        (
            15,
            "(Ax0.((0=0)->(x0=x0)))->((0=0)->(Ax0.(x0=x0)))",
            "(Ax0.((0=0)->(x0=x0)))->((0=0)->(Ax1.(x0=x0)))",
        ),
        (16, "x3=x3", "x3=x4"),
        (17, "(x1=x2)->(x2=x1)", "(x1=x2)->(x2=x2)"),
        (
            18,
            "(x0=x1)->((x0=x2)->(x1=x2))",
            "(x0=x1)->((x0=x2)->(x1=x0))",
        ),
        (19, "(x0=x1)->(x0'=x1')", "(x0=x1)->(x0'=x1)"),
        (20, "~(x4'=0)", "~(x4=0)"),
        (21, "(x0'=x1')->(x0=x1)", "(x0'=x1)->(x0=x1)"),
        (22, "x5+0=x5", "x5+0'=x5"),
        (23, "x0+x1'=(x0+x1)'", "x0+x1'=(x0+x0)'"),
        (24, "x2*0=0", "x2*0=0'"),
        (25, "x0*x1'=x0*x1+x0", "x0*x1'=x0*x1+x1"),
        (26, "0!=0'", "0!=0''"),
        (27, "(x0')!=x0'*x0!", "(x0')!=x0'*x1!"),
        (28, induction_pos, induction_near),
    ];
    for (schema, positive, near_miss) in cases {
        assert!(
            match_axiom(&pf(positive)).contains(&schema),
            "schema {schema}: positive instance rejected"
        );
        assert!(
            !match_axiom(&pf(near_miss)).contains(&schema),
            "schema {schema}: near miss accepted"
        );
    }
    println!("criterion 4 (axiom schema coverage, 19 schemas): pass");
}

#[test]
fn criterion_05_template_fixed_point() {
    let style = TemplateStyle::Strict;
    runner(200)
        .run(&arb_formula(4), |body| {
            let built = build_b(&body, 0, [10, 11, 12, 13], style).unwrap();
            let rec = recognize_b(&built, style).unwrap();
            prop_assert_eq!(&rec.body, &body);
            prop_assert_eq!(
                (rec.var_x, rec.var_y, rec.var_u, rec.var_v, rec.var_w),
                (0, 10, 11, 12, 13)
            );
            prop_assert_eq!(rec.rebuild(), built);
            Ok(())
        })
        .unwrap();

    // the constructed sentence is itself in the template, with the
    // bounded-code formula as its body
    let artifact = build_berry(&BerryInput::new(demo_r(2), 2).unwrap()).unwrap();
    let rec = recognize_b(&artifact.exists_b_d, style).unwrap();
    assert_eq!(rec.body, artifact.d);
    assert_eq!(rec.var_x, 2);
    println!("criterion 5 (template fixed point, 200 bodies + the sentence): pass");
}

fn succ2_proof() -> Proof {
    let refl = pf("x0=x0");
    let all = Formula::forall(0, refl.clone());
    let inst = pf("0''=0''");
    Proof::new(
        vec![
            ProofLine {
                formula: refl,
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
        ],
        inst,
    )
    .unwrap()
}

/// Proof that the numeral is not the least witness of `~(x0=x0)`:
/// derive `0^n = 0^n`, double-negate, ex falso to the instance.
fn instance_proof(n: u64) -> (Formula, Proof) {
    let style = TemplateStyle::Strict;
    let body = pf("~(x0=x0)");
    let sentence = build_b(&body, 0, [1, 2, 3, 4], style).unwrap();
    let rec = recognize_b(&sentence, style).unwrap();
    let instance = build_negb_instance(&rec, n);

    let refl = pf("x0=x0");
    let all = Formula::forall(0, refl.clone());
    let eq_inst = substitute(&refl, 0, &numeral(n)).unwrap();
    let eq_proof = Proof::new(
        vec![
            ProofLine {
                formula: refl,
                justification: Justification::Axiom(16),
            },
            ProofLine {
                formula: all.clone(),
                justification: Justification::Generalization { premise: 0, var: 0 },
            },
            ProofLine {
                formula: Formula::imp(all, eq_inst.clone()),
                justification: Justification::Axiom(14),
            },
            ProofLine {
                formula: eq_inst.clone(),
                justification: Justification::ModusPonens {
                    antecedent: 1,
                    implication: 2,
                },
            },
        ],
        eq_inst,
    )
    .unwrap();
    let doubled = double_neg_intro(&eq_proof).unwrap();
    let Formula::Imp(_, consequent) = &instance else {
        panic!("instances are implications");
    };
    let proof = ex_falso(&doubled, consequent).unwrap();
    assert_eq!(proof.conclusion(), &instance);
    (sentence, proof)
}

#[test]
fn criterion_06_decide_r_end_to_end() {
    let budget = Budget::default();
    let style = TemplateStyle::Strict;
    let (sentence, proof) = instance_proof(3);

    let decision = decide_r(
        &FormulaInput::Code(encode_formula(&sentence)),
        &ProofInput::Proof(proof.clone()),
        3,
        style,
        &budget,
    )
    .unwrap();
    assert!(decision.verdict, "{}", decision.trace.render());

    // cross-check the true verdict by re-running each component
    let decoded = decode_formula(&encode_formula(&sentence), &budget).unwrap();
    let rec = recognize_b(&decoded, style).unwrap();
    let instance = build_negb_instance(&rec, 3);
    assert_eq!(proof.conclusion(), &instance);
    assert_eq!(check_proof(&proof), Ok(()));

    // rejection at step 1: 10 codes no formula
    let d = decide_r(
        &FormulaInput::Code("10".parse::<Code>().unwrap()),
        &ProofInput::Proof(proof.clone()),
        3,
        style,
        &budget,
    )
    .unwrap();
    assert!(!d.verdict && !d.trace.formula_step.unwrap().ok && d.trace.shape_step.is_none());

    // rejection at step 2: a formula outside the template
    let d = decide_r(
        &FormulaInput::Code(encode_formula(&pf("0=0"))),
        &ProofInput::Proof(proof.clone()),
        3,
        style,
        &budget,
    )
    .unwrap();
    assert!(!d.verdict && d.trace.formula_step.unwrap().ok && !d.trace.shape_step.unwrap().ok);

    // rejection at step 3: a valid proof of a different formula
    let d = decide_r(
        &FormulaInput::Formula(sentence),
        &ProofInput::Proof(tautology_identity(&pf("0=0"))),
        3,
        style,
        &budget,
    )
    .unwrap();
    assert!(!d.verdict && !d.trace.proof_step.unwrap().ok);

    println!("criterion 6 (three-step decision, true case + rejections): pass");
}

#[test]
fn criterion_07_theorem2_arithmetic() {
    // headline values: c = 125, l1 = 0, k = 2
    assert_eq!(theorem2_min_l2(0, 125, 2), 127);
    assert!((1u128 << 127) > (7 * 127 * 47) as u128);
    // the growth condition alone, k = 2: minimal height 12
    assert_eq!(condition3_min_l2(2), 12);
    for l2 in 1..12 {
        assert!(!condition3_holds(l2, 2), "2^{l2} should not clear 329*{l2}");
    }
    // 2^12 = 4096 clears the right side 7*12*47 = 3948
    assert!(condition3_holds(12, 2));
    assert_eq!(7 * 12 * 47, 3948);
    // heights of four or below are never returned
    assert!(theorem2_min_l2(0, 0, 2) > 4);
    println!("criterion 7 (size-condition arithmetic at headline values): pass");
}

#[test]
fn criterion_08_prime_bound() {
    for n in 0..=1000 {
        assert!(check_lemma2(n), "p_{n} exceeds the doubly exponential bound");
    }
    println!("criterion 8 (prime bound through p_1000): pass");
}

#[test]
fn criterion_09_stirling_enclosure() {
    // compensated summation of ln i, the independent oracle
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for z in 1..=10_000u64 {
        if z > 1 {
            let term = (z as f64).ln();
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        let enclosure = stirling_ln_factorial(z);
        assert!(
            enclosure.lo <= sum + 1e-10 && sum <= enclosure.hi + 1e-10,
            "z = {z}: [{}, {}] misses {sum}",
            enclosure.lo,
            enclosure.hi
        );
        let slack = 1e-9 * sum.abs().max(1.0);
        assert!(
            enclosure.width() <= 1.0 / (12.0 * z as f64) + slack,
            "z = {z}: width {}",
            enclosure.width()
        );
    }
    println!("criterion 9 (Stirling enclosure, z through 10^4): pass");
}

#[test]
fn criterion_10_tower_bounds() {
    assert_eq!(tower_exact(2).unwrap().to_string(), "720");
    for n in 4..=64u64 {
        let floor = tower_lnln_floor(n).unwrap();
        assert!(floor.at_least(8 * n), "floor at n = {n}");
        lemma4_check(n).unwrap();
    }
    assert_eq!(
        tower_lnln_floor(4).unwrap(),
        TowerFloor::Exceeds(720u32.into())
    );
    assert!(lemma4_check(3).is_err(), "the 8N bound needs N >= 4");
    assert!(tower_lnln_floor(1).is_err());
    println!("criterion 10 (factorial tower bounds, N = 4..64): pass");
}

#[test]
fn criterion_11_full_pipeline() {
    let input = BerryInput::new(demo_r(2), 2).unwrap();
    let artifact = build_berry(&input).unwrap();

    // accounting identity with a height-independent constant
    let mut constants = Vec::new();
    for l2 in [5u64, 6, 7] {
        let probe = build_berry_with_l2(&input, l2).unwrap();
        assert_eq!(probe.len, 2 * probe.l1 + 6 * probe.l2 + probe.c);
        constants.push(probe.c);
    }
    assert!(constants.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(artifact.c, constants[0]);
    assert_eq!(artifact.len, 2 * artifact.l1 + 6 * artifact.l2 + artifact.c);

    // the variable ceiling is met and attained
    assert_eq!(artifact.max_symbol_code(), 4 * artifact.k + 39);

    // certification: the three conditions, the direct code-size route,
    // and the tower floor all hold on the exact code
    let cert = certify(&artifact);
    assert!(cert.cond_height && cert.cond_length && cert.cond_growth);
    assert!(cert.direct_bits_ok);
    assert!(cert.lnln_ok, "ln ln G = {} vs {}", cert.lnln_g_upper, cert.lnln_target);
    assert!(cert.tower_ok);
    assert!(cert.verdict);

    println!(
        "criterion 11 (full pipeline on the stand-in R): pass \
         (L1 = {}, L2 = {}, c = {}, L = {}, bits(G) = {})",
        artifact.l1, artifact.l2, artifact.c, artifact.len, cert.g_bits
    );
}
