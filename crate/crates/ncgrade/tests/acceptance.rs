//! Acceptance gate: one test per core guarantee of the workbench.
//! Every expected value here was computed or checked by hand (or by an
//! independent oracle) before being frozen into the assertions, so a
//! regression in any engine component turns exactly one line red.

use std::collections::BTreeSet;
use std::process::Command;

use ncgrade::algebra::{
    builtin_f, builtin_h, down_up, left_subword_check, linearly_independent, normal_basis,
    oracle_dims, pattern_basis_f, relation_image, standard_presentations, Presentation,
};
use ncgrade::checks::{run_check, CheckConfig};
use ncgrade::config::poly_to_json;
use ncgrade::error::Error;
use ncgrade::grading::{
    dihedral, g_degree, graded_decompose, quaternion8, Grading,
};
use ncgrade::hilbert::{down_up_closed_form, hilbert_matches_closed_form};
use ncgrade::order::MonomialOrder;
use ncgrade::poly::NcPoly;
use ncgrade::rewrite::ReductionSystem;
use ncgrade::scalar::Scalar;
use ncgrade::word::{Alphabet, Word};

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

/// Deterministic xorshift64 generator for the random-case suites.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
    fn word(&mut self, letters: usize, max_len: usize) -> Word {
        let len = self.below((max_len + 1) as u64) as usize;
        Word::from_letters((0..len).map(|_| self.below(letters as u64) as u8).collect())
    }
    fn poly(&mut self, letters: usize, max_len: usize, max_terms: usize) -> NcPoly {
        let terms = 1 + self.below(max_terms as u64) as usize;
        let mut p = NcPoly::zero();
        for _ in 0..terms {
            let c = Scalar::from_int(self.int(-3, 3));
            p.add_term(self.word(letters, max_len), c);
        }
        p
    }
}

fn word_of(a: &Alphabet, s: &str) -> Word {
    let names: Vec<String> = s.chars().map(|c| c.to_string()).collect();
    a.word_from_names(&names).expect("valid word")
}

fn sorted_row(order: &MonomialOrder, row: &[Word]) -> Vec<Word> {
    let mut v = row.to_vec();
    order.sort(&mut v);
    v
}

fn check_named(name: &str) -> CheckConfig {
    CheckConfig::named(name)
}

const DOWN_UP_DIMS_10: [usize; 11] = [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36];

// ---------------------------------------------------------------------------
// 1. completion of the cube-relations algebra
// ---------------------------------------------------------------------------

#[test]
fn c01_completion_yields_five_frozen_rules_deterministically() {
    let p = builtin_f();
    let order = p.default_order();
    let sys = p.complete(&order, 8).expect("completion succeeds");
    assert_eq!(sys.rules().len(), 5, "exactly five rules at bound 8");
    assert!(sys.is_confluent_up_to(8), "all ambiguities resolve");

    let a = p.alphabet();
    let expected: Vec<(Word, NcPoly)> = vec![
        (word_of(a, "yxy"), NcPoly::from_word(word_of(a, "xxx"))),
        (word_of(a, "yyy"), NcPoly::from_word(word_of(a, "xyx"))),
        (word_of(a, "yxxxx"), NcPoly::from_word(word_of(a, "xxxxy"))),
        (word_of(a, "yxxyx"), NcPoly::from_word(word_of(a, "xxxyy"))),
        (word_of(a, "yyxxx"), NcPoly::from_word(word_of(a, "xyxxy"))),
    ];
    let got: Vec<(Word, NcPoly)> = sys
        .rules()
        .iter()
        .map(|r| (r.lhs.clone(), r.rhs.clone()))
        .collect();
    assert_eq!(got, expected, "the five rules match the frozen system");

    // Byte determinism: two independent completions serialize
    // identically.
    let render = |sys: &ncgrade::rewrite::ReductionSystem| -> String {
        let rows: Vec<_> = sys
            .rules()
            .iter()
            .map(|r| {
                serde_json::json!({
                    "lhs": ncgrade::config::word_to_json(a, &r.lhs),
                    "rhs": poly_to_json(&order, &r.rhs),
                })
            })
            .collect();
        serde_json::to_string(&rows).expect("serializes")
    };
    let again = p.complete(&order, 8).expect("completion succeeds");
    assert_eq!(render(&sys), render(&again), "byte-identical rule lists");
}

// ---------------------------------------------------------------------------
// 2. Hilbert series on both routes
// ---------------------------------------------------------------------------

#[test]
fn c02_graded_dimensions_match_the_closed_form_for_all_samples() {
    let (num, den) = down_up_closed_form();
    for p in standard_presentations() {
        let order = p.default_order();
        let (_sys, table) = normal_basis(&p, &order, 10).expect("completes");
        let dims = table.dims();
        assert_eq!(
            dims,
            DOWN_UP_DIMS_10.to_vec(),
            "normal-word dimensions of {} through degree 10",
            p.label()
        );
        assert!(
            hilbert_matches_closed_form(&dims, &num, &den).expect("series expands"),
            "series expansion agrees for {}",
            p.label()
        );
    }
}

// ---------------------------------------------------------------------------
// 3. rewriting dims vs the row-reduction oracle
// ---------------------------------------------------------------------------

#[test]
fn c03_rewriting_and_oracle_dimensions_agree_everywhere() {
    for p in standard_presentations() {
        let order = p.default_order();
        let (_sys, table) = normal_basis(&p, &order, 8).expect("completes");
        assert_eq!(
            table.dims(),
            oracle_dims(&p, 8),
            "independent routes agree for {}",
            p.label()
        );
    }
}

// ---------------------------------------------------------------------------
// 4. pattern basis equals the normal words
// ---------------------------------------------------------------------------

#[test]
fn c04_pattern_words_equal_normal_words_through_degree_ten() {
    let p = builtin_f();
    let order = p.default_order();
    let (_sys, table) = normal_basis(&p, &order, 10).expect("completes");
    let patterns = pattern_basis_f(10);
    assert_eq!(table.dims(), patterns.dims(), "same count per degree");
    for t in 0..=10 {
        assert_eq!(
            sorted_row(&order, table.row(t)),
            sorted_row(&order, patterns.row(t)),
            "same word set in degree {t}"
        );
    }
}

// ---------------------------------------------------------------------------
// 5. left-subword property
// ---------------------------------------------------------------------------

#[test]
fn c05_left_subword_property_has_no_counterexamples() {
    for s in [1usize, 2] {
        let report = left_subword_check(s, 8).expect("check runs");
        assert!(
            report.violations.is_empty(),
            "no violations for power {s}: {:?}",
            report.violations
        );
        assert!(report.factorizations > 0, "the search space is nonempty");
        assert!(report.passed());
    }
    assert_eq!(
        left_subword_check(1, 8).unwrap().subword_count,
        8,
        "the base pattern has eight distinct nonempty subwords"
    );
}

// ---------------------------------------------------------------------------
// 6. alternating word pairs stay independent
// ---------------------------------------------------------------------------

#[test]
fn c06_alternating_word_pairs_are_linearly_independent() {
    let p = builtin_h();
    let order = p.default_order();
    let a = p.alphabet();
    let x = Word::letter(a.index_of("x").unwrap());
    let y = Word::letter(a.index_of("y").unwrap());
    let xy = x.concat(&y);
    let yx = y.concat(&x);
    for n in 1..=4usize {
        let pair = [
            NcPoly::from_word(xy.pow(n)),
            NcPoly::from_word(yx.pow(n)),
        ];
        assert!(
            linearly_independent(&pair, &p, &order, 9).unwrap(),
            "(xy)^{n} and (yx)^{n} are independent"
        );
    }
    for n in 0..=4usize {
        let pair = [
            NcPoly::from_word(y.concat(&xy.pow(n))),
            NcPoly::from_word(x.concat(&yx.pow(n))),
        ];
        assert!(
            linearly_independent(&pair, &p, &order, 9).unwrap(),
            "y(xy)^{n} and x(yx)^{n} are independent"
        );
    }
}

// ---------------------------------------------------------------------------
// 7. the worked dihedral example
// ---------------------------------------------------------------------------

#[test]
fn c07_worked_example_reproduces_the_reference_data() {
    let report = run_check(&check_named("example-2.1")).expect("check runs");
    assert!(report.pass, "details: {}", report.details);
    let d = &report.details;
    assert_eq!(d["swapped_generator_degrees"], serde_json::json!([2, 4, 4, 4]));
    assert_eq!(d["obstruction_flag"], true);
    assert_eq!(d["hilbert_matches_hypersurface"], true);
    assert_eq!(d["codeterminant_nontrivial"], true);
    assert_eq!(d["swapped"]["codeterminant"], "rho^2");
    assert_eq!(d["certificates_verified_to"], 9);
    let certs = d["certificates"].as_array().expect("certificate list");
    assert_eq!(certs.len(), 8, "one certificate per group element");
    for cert in certs {
        assert_eq!(cert["span_ok"], true, "certificate: {cert}");
    }
    for fro in ["e", "rho", "rho^2"] {
        let cert = certs
            .iter()
            .find(|c| c["element"] == fro)
            .expect("present");
        assert_eq!(cert["free_rank_one"], true, "{fro} is free of rank one");
    }
    // The documented discrepancy: the stated assignment fixes d^2 in
    // degree 2 and does not reproduce the reference generator list.
    assert_eq!(d["stated_degree_2_fixed"], serde_json::json!(["d^2"]));
    assert_eq!(d["discrepancy_confirmed"], true);
    assert_eq!(d["stated_reproduces_reference"], false);
    assert_eq!(d["swapped_reproduces_reference"], true);
}

// ---------------------------------------------------------------------------
// 8. the dihedral contradiction witness
// ---------------------------------------------------------------------------

#[test]
fn c08_longest_element_component_is_not_free_of_rank_one() {
    let report = run_check(&check_named("prop-1.10")).expect("check runs");
    assert!(report.pass, "details: {}", report.details);
    let d = &report.details;
    assert_eq!(d["longest_element"], "rho^2 r");
    assert_eq!(d["minimal_occupied_degree"], 3);
    assert_eq!(d["dimension_there"], 2);
    assert_eq!(d["witnesses"], serde_json::json!(["xyx", "yxy"]));
    assert_eq!(d["witnesses_independent"], true);
    let certs = d["single_generator_certificates"]
        .as_array()
        .expect("certificates");
    assert_eq!(certs.len(), 2);
    for cert in certs {
        assert_eq!(
            cert["span_ok"], false,
            "a single witness cannot span: {cert}"
        );
    }
    assert_eq!(d["contradiction"], true);
}

// ---------------------------------------------------------------------------
// 9. parameter-case expansions
// ---------------------------------------------------------------------------

#[test]
fn c09_parameter_cases_match_their_frozen_expansions() {
    let wanted = [
        ("prop-1.12-case-2a", "E1.12.3"),
        ("prop-1.12-case-2b", "specialization-cube-relations-1"),
        ("prop-1.12-case-3a", "specialization-abelian-case-1"),
        ("prop-1.12-case-3b", "specialization-symmetric-relations-1"),
    ];
    for (name, label) in wanted {
        let report = run_check(&check_named(name)).expect("check runs");
        assert!(report.pass, "{name} details: {}", report.details);
        let samples = report.details["samples"].as_array().expect("samples");
        assert!(samples.len() >= 5, "{name} runs at least five samples");
        let mut seen = false;
        for sample in samples {
            for id in sample["identities"].as_array().expect("identities") {
                assert_eq!(
                    id["match"], true,
                    "{name} identity {} matches",
                    id["label"]
                );
                seen = seen || id["label"] == label;
            }
        }
        assert!(seen, "{name} exercises the identity labeled {label}");
    }
}

// ---------------------------------------------------------------------------
// 10. the quaternion generator obstruction
// ---------------------------------------------------------------------------

#[test]
fn c10_quaternion_scenario_needs_more_than_three_generators() {
    let report = run_check(&check_named("prop-1.4-q8")).expect("check runs");
    assert!(report.pass, "details: {}", report.details);
    let d = &report.details;
    assert_eq!(d["max_degree"], 16);
    assert!(d["generator_count"].as_u64().unwrap() >= 4);
    assert_eq!(d["obstruction_flag"], true);
    assert_eq!(d["inner_faithful"], true);
    assert_eq!(d["abelian"], false);
}

// ---------------------------------------------------------------------------
// 11. randomized property suites (100 deterministic cases each)
// ---------------------------------------------------------------------------

#[test]
fn c11_word_order_is_total_and_multiplicative() {
    let p = builtin_f();
    let order = p.default_order();
    let mut rng = Rng::new(0x5eed_0001);
    for case in 0..100 {
        let a = rng.word(2, 8);
        let b = rng.word(2, 8);
        let c = rng.word(2, 4);
        let ab = order.compare(&a, &b);
        let ba = order.compare(&b, &a);
        assert_eq!(ab, ba.reverse(), "antisymmetry, case {case}");
        assert_eq!(ab == std::cmp::Ordering::Equal, a == b, "equality, case {case}");
        assert_eq!(
            order.compare(&c.concat(&a), &c.concat(&b)),
            ab,
            "left multiplication preserves order, case {case}"
        );
        assert_eq!(
            order.compare(&a.concat(&c), &b.concat(&c)),
            ab,
            "right multiplication preserves order, case {case}"
        );
    }
}

#[test]
fn c11_reduction_is_idempotent_and_linear() {
    let p = builtin_f();
    let order = p.default_order();
    let sys = p.complete(&order, 8).expect("completes");
    let mut rng = Rng::new(0x5eed_0002);
    for case in 0..100 {
        let f = rng.poly(2, 7, 4);
        let g = rng.poly(2, 7, 4);
        let rf = sys.reduce(&f);
        assert_eq!(sys.reduce(&rf), rf, "idempotence, case {case}");
        assert_eq!(
            sys.reduce(&f.add(&g)),
            rf.add(&sys.reduce(&g)),
            "additivity, case {case}"
        );
        let c = Scalar::from_int(rng.int(-3, 3));
        assert_eq!(
            sys.reduce(&f.scale(&c)),
            rf.scale(&c),
            "homogeneity, case {case}"
        );
    }
}

#[test]
fn c11_group_degree_is_multiplicative() {
    let p = down_up(&Scalar::zero(), &Scalar::one()).unwrap();
    let group = quaternion8();
    let grading = Grading::new(
        group,
        p.alphabet(),
        &[
            ("u".to_string(), "i".to_string()),
            ("d".to_string(), "j".to_string()),
        ],
    )
    .unwrap();
    let mut rng = Rng::new(0x5eed_0003);
    for case in 0..100 {
        let a = rng.word(2, 6);
        let b = rng.word(2, 6);
        assert_eq!(
            g_degree(&grading, &a.concat(&b)),
            grading
                .group()
                .mul(g_degree(&grading, &a), g_degree(&grading, &b)),
            "multiplicativity, case {case}"
        );
    }
}

/// One partition scenario: presentation, letter images, group builder, bound.
type PartitionScenario = (
    Presentation,
    Vec<(&'static str, &'static str)>,
    Box<dyn Fn() -> ncgrade::grading::FiniteGroup>,
    usize,
);

#[test]
fn c11_graded_components_partition_each_degree() {
    // Two scenarios x (degree, element) pairs comfortably exceed 100
    // cases: the dihedral grading to degree 8 and the quaternion
    // grading to degree 10.
    let scenarios: Vec<PartitionScenario> = vec![
        (
            down_up(&Scalar::zero(), &Scalar::one()).unwrap(),
            vec![("u", "r"), ("d", "rho")],
            Box::new(|| dihedral(8).unwrap()),
            8,
        ),
        (
            down_up(&Scalar::zero(), &Scalar::one()).unwrap(),
            vec![("u", "i"), ("d", "j")],
            Box::new(quaternion8),
            10,
        ),
    ];
    let mut cases = 0usize;
    for (p, pairs, group_fn, n) in scenarios {
        let order = p.default_order();
        let (_sys, table) = normal_basis(&p, &order, n).unwrap();
        let pairs: Vec<(String, String)> = pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let grading = Grading::new(group_fn(), p.alphabet(), &pairs).unwrap();
        let gb = graded_decompose(&table, &grading).unwrap();
        for t in 0..=n {
            let mut union: BTreeSet<Word> = BTreeSet::new();
            let mut total = 0usize;
            for g in grading.group().elements() {
                let comp = gb.component(t, g);
                total += comp.len();
                union.extend(comp.iter().cloned());
                cases += 1;
            }
            assert_eq!(total, table.row(t).len(), "no overlap in degree {t}");
            let full: BTreeSet<Word> = table.row(t).iter().cloned().collect();
            assert_eq!(union, full, "components cover degree {t}");
        }
    }
    assert!(cases >= 100, "ran {cases} (degree, element) cases");
}

#[test]
fn c11_dimensions_survive_linear_substitution() {
    let target_alphabet = Alphabet::weight_one(&["x", "y"]);
    let expected = [1usize, 2, 4, 6, 9, 12, 16];
    let mut rng = Rng::new(0x5eed_0004);
    let mut cases = 0;
    while cases < 100 {
        let alpha = Scalar::from_int(rng.int(-4, 4));
        let beta = Scalar::from_int(rng.int(-4, 4));
        let a_param = Scalar::from_int(rng.int(-4, 4));
        if beta.is_zero() || a_param.is_zero() || a_param.is_one() {
            continue;
        }
        let source = down_up(&alpha, &beta).unwrap();
        let target = Presentation::new(target_alphabet.clone(), Vec::new(), "free").unwrap();
        let order = target.default_order();
        let x = NcPoly::from_word(Word::letter(0));
        let y = NcPoly::from_word(Word::letter(1));
        // u -> x - y, d -> x - a y is invertible for a != 1.
        let mut images = std::collections::BTreeMap::new();
        images.insert("u".to_string(), x.sub(&y));
        images.insert("d".to_string(), x.sub(&y.scale(&a_param)));
        let rels = relation_image(&source, &images, &target, &order, 3).unwrap();
        let transformed =
            Presentation::new(target_alphabet.clone(), rels, "transformed").unwrap();
        let (_sys, table) = normal_basis(&transformed, &order, 6).unwrap();
        assert_eq!(
            table.dims(),
            expected.to_vec(),
            "dims survive the substitution (alpha={alpha}, beta={beta}, a={a_param})"
        );
        cases += 1;
    }
}

// ---------------------------------------------------------------------------
// 12. negative controls
// ---------------------------------------------------------------------------

#[test]
fn c12_degenerate_parameters_are_rejected() {
    match down_up(&Scalar::one(), &Scalar::zero()) {
        Err(Error::BetaZero) => {}
        other => panic!("beta = 0 must be rejected, got {other:?}"),
    }
}

#[test]
fn c12_wrong_closed_form_fails_the_hilbert_check() {
    let cfg = CheckConfig {
        numerator: Some(vec![1]),
        denominator: Some(vec![1, -2]),
        max_degree: Some(6),
        ..CheckConfig::named("hilbert")
    };
    let report = run_check(&cfg).expect("check runs");
    assert!(!report.pass, "the free-algebra series must not match");
}

#[test]
fn c12_dropping_a_rule_breaks_confluence() {
    let p = builtin_f();
    let order = p.default_order();
    let sys = p.complete(&order, 8).expect("completes");
    assert_eq!(sys.rules().len(), 5);
    let four = sys.rules()[..4].to_vec();
    let crippled = ReductionSystem::from_rules(order, four).expect("builds");
    assert!(
        !crippled.is_confluent_up_to(8),
        "an unresolved ambiguity must appear without the fifth rule"
    );
}

#[test]
fn c12_cli_exit_codes_separate_failure_from_config_errors() {
    let bin = env!("CARGO_BIN_EXE_ncgrade");

    // A check that runs but fails: exit code 1.
    let out = Command::new(bin)
        .args(["check", "lemma-1.6-completion", "--max-degree", "3"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1), "failing check exits 1");

    // An unknown check name: exit code 2.
    let out = Command::new(bin)
        .args(["check", "no-such-check"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2), "unknown check exits 2");

    // A malformed config file: exit code 2.
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ not json").expect("writes");
    let out = Command::new(bin)
        .args(["check", "hilbert", "--config"])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2), "malformed config exits 2");

    // A passing check: exit code 0.
    let out = Command::new(bin)
        .args(["check", "lemma-1.6-completion"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "passing check exits 0");
}
