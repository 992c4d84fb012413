//! Named verification checks. Each check runs a concrete, degree-
//! bounded computation against a frozen expected outcome and returns a
//! deterministic report; nothing here certifies an unbounded claim.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{
    builtin_f, builtin_h, down_up, left_subword_check, linearly_independent, normal_basis,
    oracle_dims, pattern_basis_f, relation_image, standard_presentations, Presentation,
};
use crate::config::{
    group_from_json, poly_to_json, presentation_from_json, GroupJson, PresentationJson,
};
use crate::error::{Error, Result};
use crate::grading::{
    dihedral, g_homogeneous_degree, graded_decompose, is_admissible_grading, is_inner_faithful,
    quaternion8, FiniteGroup, GradedBasis, Grading,
};
use crate::hilbert::{down_up_closed_form, hilbert_matches_closed_form, hypersurface_closed_form, IntPoly};
use crate::invariants::{
    hdet_codeterminant, longest_element, minimal_generators, verify_component,
    ComponentCertificate, OBSTRUCTION_THRESHOLD,
};
use crate::order::MonomialOrder;
use crate::poly::NcPoly;
use crate::rewrite::ReductionSystem;
use crate::scalar::Scalar;
use crate::word::{Alphabet, Word};

/// Every check name `run_check` accepts, in report order.
pub const CHECK_NAMES: &[&str] = &[
    "example-2.1",
    "hilbert",
    "lemma-1.6-basis",
    "lemma-1.6-completion",
    "lemma-1.7",
    "lemma-1.9-independence",
    "lemma-2.2",
    "oracle-equivalence",
    "prop-1.10",
    "prop-1.12-case-2a",
    "prop-1.12-case-2b",
    "prop-1.12-case-3a",
    "prop-1.12-case-3b",
    "prop-1.4-q8",
];

/// Configuration for one named check. Only the fields a given check
/// uses may be set; the rest must stay absent.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckConfig {
    /// Check name; may be filled in from the command line.
    #[serde(default)]
    pub check: String,
    #[serde(default)]
    pub max_degree: Option<usize>,
    #[serde(default)]
    pub presentation: Option<PresentationJson>,
    #[serde(default)]
    pub group: Option<GroupJson>,
    #[serde(default)]
    pub grading: Option<std::collections::BTreeMap<String, String>>,
    /// Check-specific parameter samples (see each check's docs).
    #[serde(default)]
    pub samples: Option<Value>,
    /// Closed-form numerator coefficients (`hilbert` only).
    #[serde(default)]
    pub numerator: Option<Vec<i64>>,
    /// Closed-form denominator coefficients (`hilbert` only).
    #[serde(default)]
    pub denominator: Option<Vec<i64>>,
}

impl CheckConfig {
    /// Default configuration for a named check.
    pub fn named(name: &str) -> Self {
        CheckConfig {
            check: name.to_string(),
            ..CheckConfig::default()
        }
    }
}

/// A suite config: either a bare list of check configs or an object
/// with a `checks` field.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum SuiteConfig {
    List(Vec<CheckConfig>),
    Wrapped { checks: Vec<CheckConfig> },
}

impl SuiteConfig {
    pub fn into_checks(self) -> Vec<CheckConfig> {
        match self {
            SuiteConfig::List(c) | SuiteConfig::Wrapped { checks: c } => c,
        }
    }
}

/// Outcome of one check. JSON output is byte-deterministic for a
/// fixed config, except for `wall_time_ms`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub details: Value,
    pub assumptions: Vec<String>,
    pub wall_time_ms: u64,
}

/// Aggregate over a list of checks, ordered by check name.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
    pub all_pass: bool,
}

/// Runs one named check. `Err` means the config itself is unusable
/// (unknown name, malformed input, bound below the relation degree);
/// a report with `pass: false` means the verification genuinely failed.
pub fn run_check(cfg: &CheckConfig) -> Result<CheckReport> {
    let start = Instant::now();
    let name = cfg.check.as_str();
    let (pass, details, assumptions) = match name {
        "lemma-1.6-completion" => check_completion(cfg)?,
        "lemma-1.6-basis" => check_classification_basis(cfg)?,
        "lemma-1.7" => check_left_subword(cfg)?,
        "lemma-1.9-independence" => check_pair_independence(cfg)?,
        "lemma-2.2" => check_component_certificates(cfg)?,
        "example-2.1" => check_worked_example(cfg)?,
        "prop-1.4-q8" => check_quaternion_scenario(cfg)?,
        "prop-1.10" => check_dihedral_contradiction(cfg)?,
        "prop-1.12-case-2a" => check_parameter_case(cfg, ParameterCase::TriangularAlphaZero)?,
        "prop-1.12-case-2b" => check_parameter_case(cfg, ParameterCase::GeneralAlphaZero)?,
        "prop-1.12-case-3a" => check_parameter_case(cfg, ParameterCase::TriangularGeneral)?,
        "prop-1.12-case-3b" => check_parameter_case(cfg, ParameterCase::GeneralGeneral)?,
        "oracle-equivalence" => check_oracle_equivalence(cfg)?,
        "hilbert" => check_hilbert(cfg)?,
        "" => {
            return Err(Error::Config(
                "missing check name; pass one of the known check names".into(),
            ))
        }
        other => {
            return Err(Error::Config(format!(
                "unknown check '{other}'; known checks: {}",
                CHECK_NAMES.join(", ")
            )))
        }
    };
    Ok(CheckReport {
        name: name.to_string(),
        pass,
        details,
        assumptions,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs a list of checks and aggregates, ordering reports by name.
pub fn run_suite(cfgs: &[CheckConfig]) -> Result<SuiteReport> {
    let mut reports = Vec::with_capacity(cfgs.len());
    for cfg in cfgs {
        reports.push(run_check(cfg)?);
    }
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    let all_pass = reports.iter().all(|r| r.pass);
    Ok(SuiteReport { reports, all_pass })
}

/// The full default suite: every named check at its default bounds.
pub fn default_suite() -> Vec<CheckConfig> {
    CHECK_NAMES.iter().map(|n| CheckConfig::named(n)).collect()
}

// ---------------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------------

type CheckBody = (bool, Value, Vec<String>);

/// Which optional config fields a check consumes; the rest are
/// rejected so that a mutated config cannot be silently ignored.
struct Uses {
    presentation: bool,
    group: bool,
    grading: bool,
    samples: bool,
    series: bool,
}

impl Uses {
    const NONE: Uses = Uses {
        presentation: false,
        group: false,
        grading: false,
        samples: false,
        series: false,
    };
    const PRESENTATION: Uses = Uses {
        presentation: true,
        group: false,
        grading: false,
        samples: false,
        series: false,
    };
    const GRADED: Uses = Uses {
        presentation: true,
        group: true,
        grading: true,
        samples: false,
        series: false,
    };
    const SAMPLES: Uses = Uses {
        presentation: false,
        group: false,
        grading: false,
        samples: true,
        series: false,
    };
}

fn validate_uses(cfg: &CheckConfig, uses: &Uses) -> Result<()> {
    let check = &cfg.check;
    if !uses.presentation && cfg.presentation.is_some() {
        return Err(Error::Config(format!(
            "check '{check}' does not take a presentation override"
        )));
    }
    if !uses.group && cfg.group.is_some() {
        return Err(Error::Config(format!(
            "check '{check}' does not take a group override"
        )));
    }
    if !uses.grading && cfg.grading.is_some() {
        return Err(Error::Config(format!(
            "check '{check}' does not take a grading override"
        )));
    }
    if !uses.samples && cfg.samples.is_some() {
        return Err(Error::Config(format!(
            "check '{check}' does not take parameter samples"
        )));
    }
    if !uses.series && (cfg.numerator.is_some() || cfg.denominator.is_some()) {
        return Err(Error::Config(format!(
            "check '{check}' does not take closed-form coefficients"
        )));
    }
    Ok(())
}

/// Resolves the working degree bound: the requested bound clamped by
/// the `NCGRADE_MAX_DEGREE` environment variable, then validated
/// against the smallest bound the computation is defined for.
pub fn effective_degree(
    requested: usize,
    min_needed: usize,
    assumptions: &mut Vec<String>,
) -> Result<usize> {
    let env = std::env::var("NCGRADE_MAX_DEGREE").ok();
    apply_cap(requested, min_needed, env.as_deref(), assumptions)
}

fn apply_cap(
    requested: usize,
    min_needed: usize,
    cap: Option<&str>,
    assumptions: &mut Vec<String>,
) -> Result<usize> {
    let bound = match cap {
        Some(raw) => {
            let cap: usize = raw.trim().parse().map_err(|_| {
                Error::Config(format!(
                    "NCGRADE_MAX_DEGREE must be a nonnegative integer, got '{raw}'"
                ))
            })?;
            if cap < requested {
                assumptions.push(format!(
                    "degree bound capped at {cap} by NCGRADE_MAX_DEGREE (requested {requested})"
                ));
                cap
            } else {
                requested
            }
        }
        None => requested,
    };
    if bound < min_needed {
        return Err(Error::BoundTooSmall {
            bound,
            needed: min_needed,
        });
    }
    assumptions.push(format!(
        "verified up to degree {bound}; no unbounded statement is certified"
    ));
    Ok(bound)
}

fn presentation_or(
    cfg: &CheckConfig,
    default: impl FnOnce() -> Result<Presentation>,
) -> Result<Presentation> {
    match &cfg.presentation {
        Some(pj) => presentation_from_json(pj),
        None => default(),
    }
}

fn group_or(cfg: &CheckConfig, default: impl FnOnce() -> Result<FiniteGroup>) -> Result<FiniteGroup> {
    match &cfg.group {
        Some(gj) => group_from_json(gj),
        None => default(),
    }
}

fn grading_or(
    cfg: &CheckConfig,
    group: FiniteGroup,
    alphabet: &Alphabet,
    default_pairs: &[(&str, &str)],
) -> Result<Grading> {
    let pairs: Vec<(String, String)> = match &cfg.grading {
        Some(map) => map.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
        None => default_pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
    };
    Grading::new(group, alphabet, &pairs)
}

/// Exchanges the images of the two generators of a two-letter
/// alphabet.
fn swapped_grading(grading: &Grading, alphabet: &Alphabet) -> Result<Grading> {
    if alphabet.len() != 2 {
        return Err(Error::Config(
            "assignment swap needs exactly two generators".into(),
        ));
    }
    let group = grading.group().clone();
    let pairs = vec![
        (
            alphabet.symbol(0).name.clone(),
            group.name(grading.letter_degree(1)).to_string(),
        ),
        (
            alphabet.symbol(1).name.clone(),
            group.name(grading.letter_degree(0)).to_string(),
        ),
    ];
    Grading::new(group, alphabet, &pairs)
}

/// Builds a word from a compact letter string like `"dud"` over an
/// alphabet of single-character generator names.
fn word_str(a: &Alphabet, s: &str) -> Result<Word> {
    let names: Vec<String> = s.chars().map(|c| c.to_string()).collect();
    a.word_from_names(&names)
}

fn combination(a: &Alphabet, terms: &[(Scalar, &str)]) -> Result<NcPoly> {
    let mut p = NcPoly::zero();
    for (c, w) in terms {
        p.add_term(word_str(a, w)?, c.clone());
    }
    Ok(p)
}

fn words_value(a: &Alphabet, ws: &[Word]) -> Value {
    Value::Array(ws.iter().map(|w| Value::String(a.display_word(w))).collect())
}

fn poly_value(order: &MonomialOrder, p: &NcPoly) -> Value {
    serde_json::to_value(poly_to_json(order, p)).expect("terms serialize")
}

fn dims_value(dims: &[usize]) -> Value {
    Value::Array(dims.iter().map(|&d| Value::from(d as u64)).collect())
}

fn rules_value(sys: &ReductionSystem) -> Value {
    let a = sys.order().alphabet();
    Value::Array(
        sys.rules()
            .iter()
            .map(|r| {
                json!({
                    "lhs": crate::config::word_to_json(a, &r.lhs),
                    "rhs": poly_to_json(sys.order(), &r.rhs),
                })
            })
            .collect(),
    )
}

fn certificate_value(a: &Alphabet, group: &FiniteGroup, c: &ComponentCertificate) -> Value {
    json!({
        "element": group.name(c.element),
        "module_generators": c.module_generators.iter().map(|w| a.display_word(w)).collect::<Vec<_>>(),
        "verified_to": c.verified_to,
        "span_ok": c.span_ok,
        "failed_degrees": c.failed_degrees,
        "free_rank_one": c.free_rank_one,
    })
}

fn scalar_of(v: &Value, what: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::from_int)
            .ok_or_else(|| Error::Config(format!("{what}: integer out of range"))),
        _ => Err(Error::Config(format!(
            "{what}: expected a rational string like \"2\" or \"-1/3\""
        ))),
    }
}

/// Parses parameter samples: a JSON array whose entries are tuples of
/// `arity` rationals (bare values allowed when `arity` is 1).
fn sample_tuples(cfg: &CheckConfig, arity: usize, default: &[&[&str]]) -> Result<Vec<Vec<Scalar>>> {
    match &cfg.samples {
        None => default
            .iter()
            .map(|tuple| tuple.iter().map(|s| s.parse()).collect())
            .collect(),
        Some(Value::Array(items)) if !items.is_empty() => items
            .iter()
            .map(|item| match item {
                Value::Array(parts) if parts.len() == arity => parts
                    .iter()
                    .map(|p| scalar_of(p, "sample entry"))
                    .collect(),
                _ if arity == 1 => Ok(vec![scalar_of(item, "sample entry")?]),
                _ => Err(Error::Config(format!(
                    "each sample must be a tuple of {arity} rationals"
                ))),
            })
            .collect(),
        Some(_) => Err(Error::Config(
            "samples must be a nonempty JSON array".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// completion and basis checks
// ---------------------------------------------------------------------------

/// The frozen complete rewriting system of the cube-relations algebra:
/// five rules, listed by (degree, ascending left-hand side).
const COMPLETION_RULES: &[(&str, &[(i64, &str)])] = &[
    ("yxy", &[(1, "xxx")]),
    ("yyy", &[(1, "xyx")]),
    ("yxxxx", &[(1, "xxxxy")]),
    ("yxxyx", &[(1, "xxxyy")]),
    ("yyxxx", &[(1, "xyxxy")]),
];

fn check_completion(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::PRESENTATION)?;
    let mut assumptions = Vec::new();
    let p = presentation_or(cfg, || Ok(builtin_f()))?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let n = effective_degree(cfg.max_degree.unwrap_or(8), min_needed, &mut assumptions)?;
    let order = p.default_order();
    let sys = p.complete(&order, n)?;

    let a = p.alphabet();
    let mut expected = Vec::new();
    for (lhs, rhs) in COMPLETION_RULES {
        let lhs_word = word_str(a, lhs)?;
        let rhs_poly = combination(
            a,
            &rhs.iter()
                .map(|(c, w)| (Scalar::from_int(*c), *w))
                .collect::<Vec<_>>(),
        )?;
        expected.push((lhs_word, rhs_poly));
    }

    let got: Vec<(Word, NcPoly)> = sys
        .rules()
        .iter()
        .map(|r| (r.lhs.clone(), r.rhs.clone()))
        .collect();
    let rules_match = got == expected;
    let confluent = sys.is_confluent_up_to(n);
    let pass = rules_match && confluent;

    let details = json!({
        "max_degree": n,
        "rule_count": sys.rules().len(),
        "rules": rules_value(&sys),
        "expected_lhs": COMPLETION_RULES
            .iter()
            .map(|(lhs, _)| word_str(a, lhs).map(|w| crate::config::word_to_json(a, &w)))
            .collect::<Result<Vec<_>>>()?,
        "rules_match": rules_match,
        "confluent": confluent,
    });
    Ok((pass, details, assumptions))
}

fn check_classification_basis(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::PRESENTATION)?;
    let mut assumptions = Vec::new();
    let p = presentation_or(cfg, || Ok(builtin_f()))?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let n = effective_degree(cfg.max_degree.unwrap_or(10), min_needed, &mut assumptions)?;
    let order = p.default_order();
    let (_sys, table) = normal_basis(&p, &order, n)?;
    let patterns = pattern_basis_f(n);

    let dims = table.dims();
    let (num, den) = down_up_closed_form();
    let dims_ok = hilbert_matches_closed_form(&dims, &num, &den)?;

    let mut words_ok = true;
    let mut mismatch = Value::Null;
    for t in 0..=n {
        let mut normal: Vec<Word> = table.row(t).to_vec();
        let mut pattern: Vec<Word> = patterns.row(t).to_vec();
        order.sort(&mut normal);
        order.sort(&mut pattern);
        if normal != pattern {
            words_ok = false;
            let normal_set: BTreeSet<Word> = normal.iter().cloned().collect();
            let pattern_set: BTreeSet<Word> = pattern.iter().cloned().collect();
            let only_normal: Vec<Word> =
                normal_set.difference(&pattern_set).take(6).cloned().collect();
            let only_pattern: Vec<Word> =
                pattern_set.difference(&normal_set).take(6).cloned().collect();
            mismatch = json!({
                "degree": t,
                "only_in_normal_basis": words_value(p.alphabet(), &only_normal),
                "only_in_pattern_basis": words_value(p.alphabet(), &only_pattern),
            });
            break;
        }
    }
    let pass = dims_ok && words_ok;
    let details = json!({
        "max_degree": n,
        "dimensions": dims_value(&dims),
        "dimensions_match_closed_form": dims_ok,
        "pattern_dimensions": dims_value(&patterns.dims()),
        "word_sets_match": words_ok,
        "first_mismatch": mismatch,
    });
    Ok((pass, details, assumptions))
}

fn check_left_subword(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::SAMPLES)?;
    let mut assumptions = Vec::new();
    let n = effective_degree(cfg.max_degree.unwrap_or(8), 4, &mut assumptions)?;
    let s_values: Vec<usize> = sample_tuples(cfg, 1, &[&["1"], &["2"]])?
        .iter()
        .map(|t| {
            let s = &t[0];
            if !s.is_integer() || crate::scalar::signum(s) <= 0 {
                return Err(Error::Config(
                    "pattern powers must be positive integers".into(),
                ));
            }
            s.to_string()
                .parse::<usize>()
                .map_err(|_| Error::Config("pattern power out of range".into()))
        })
        .collect::<Result<_>>()?;

    let f = builtin_f();
    let a = f.alphabet();
    let mut cases = Vec::new();
    let mut pass = true;
    for s in &s_values {
        let report = left_subword_check(*s, n)?;
        pass = pass && report.passed();
        cases.push(json!({
            "s": s,
            "subword_count": report.subword_count,
            "candidate_pairs": report.candidates,
            "factorizations": report.factorizations,
            "violations": report.violations.iter().map(|v| json!({
                "subword": a.display_word(&v.subword),
                "left": a.display_word(&v.left),
                "right": a.display_word(&v.right),
            })).collect::<Vec<_>>(),
        }));
    }
    let details = json!({
        "max_degree": n,
        "cases": cases,
    });
    Ok((pass, details, assumptions))
}

fn check_pair_independence(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::PRESENTATION)?;
    let mut assumptions = Vec::new();
    let p = presentation_or(cfg, || Ok(builtin_h()))?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0).max(2);
    let n = effective_degree(cfg.max_degree.unwrap_or(9), min_needed, &mut assumptions)?;
    let order = p.default_order();
    let x = Word::letter(p.alphabet().index_of("x")?);
    let y = Word::letter(p.alphabet().index_of("y")?);
    let xy = x.concat(&y);
    let yx = y.concat(&x);

    let mut families = Vec::new();
    let mut pass = true;
    {
        let mut results = Vec::new();
        for k in 1..=(n / 2) {
            let pair = [
                NcPoly::from_word(xy.pow(k)),
                NcPoly::from_word(yx.pow(k)),
            ];
            let independent = linearly_independent(&pair, &p, &order, n)?;
            pass = pass && independent;
            results.push(json!({"n": k, "independent": independent}));
        }
        families.push(json!({"family": "(xy)^n, (yx)^n", "results": results}));
    }
    {
        let mut results = Vec::new();
        for k in 0..=(n.saturating_sub(1) / 2) {
            let pair = [
                NcPoly::from_word(y.concat(&xy.pow(k))),
                NcPoly::from_word(x.concat(&yx.pow(k))),
            ];
            let independent = linearly_independent(&pair, &p, &order, n)?;
            pass = pass && independent;
            results.push(json!({"n": k, "independent": independent}));
        }
        families.push(json!({"family": "y(xy)^n, x(yx)^n", "results": results}));
    }
    let details = json!({
        "max_degree": n,
        "families": families,
    });
    Ok((pass, details, assumptions))
}

// ---------------------------------------------------------------------------
// graded checks
// ---------------------------------------------------------------------------

/// Module generators of each group-degree component of the order-8
/// dihedral scenario, under the assignment u -> r, d -> rho (the one
/// reproducing the published generator list).
const D8_CERTIFICATES: &[(&str, &[&str])] = &[
    ("e", &[""]),
    ("rho", &["d"]),
    ("rho^2", &["dd"]),
    ("rho^3", &["ddd", "udu"]),
    ("r", &["u", "dud"]),
    ("rho r", &["du", "uddd"]),
    ("rho^2 r", &["udd", "duddd"]),
    ("rho^3 r", &["dudd", "ud"]),
];

/// Components expected to be free of rank one over the fixed ring.
const D8_FREE_RANK_ONE: &[&str] = &["e", "rho", "rho^2"];

/// The published degree-2 and degree-4 generators of the fixed ring,
/// as plain letter strings.
const D8_REFERENCE_GENERATORS: &[&str] = &["uu", "udud", "dudu", "dddd"];

fn run_d8_certificates(
    gb: &GradedBasis,
    grading: &Grading,
    sys: &ReductionSystem,
    alphabet: &Alphabet,
    to: usize,
) -> Result<(bool, Value)> {
    let group = grading.group();
    let mut rows = Vec::new();
    let mut ok = true;
    for (gname, gen_strs) in D8_CERTIFICATES {
        let g = group.element_by_name(gname)?;
        let gens: Vec<Word> = gen_strs
            .iter()
            .map(|s| word_str(alphabet, s))
            .collect::<Result<_>>()?;
        let cert = verify_component(gb, grading, sys, g, &gens, to)?;
        let needs_free = D8_FREE_RANK_ONE.contains(gname);
        ok = ok && cert.span_ok && (!needs_free || cert.free_rank_one);
        rows.push(certificate_value(alphabet, group, &cert));
    }
    Ok((ok, Value::Array(rows)))
}

fn check_component_certificates(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::GRADED)?;
    let mut assumptions = Vec::new();
    let p = presentation_or(cfg, || down_up(&Scalar::zero(), &Scalar::one()))?;
    let group = group_or(cfg, || dihedral(8))?;
    let grading = grading_or(cfg, group, p.alphabet(), &[("u", "r"), ("d", "rho")])?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let n = effective_degree(cfg.max_degree.unwrap_or(9), min_needed, &mut assumptions)?;

    let admissible = is_admissible_grading(&p, &grading);
    if !admissible {
        let details = json!({
            "max_degree": n,
            "admissible": false,
            "counterexample": "a defining relation is not group-homogeneous under this grading",
        });
        return Ok((false, details, assumptions));
    }
    let order = p.default_order();
    let (sys, table) = normal_basis(&p, &order, n)?;
    let gb = graded_decompose(&table, &grading)?;
    let (ok, certs) = run_d8_certificates(&gb, &grading, &sys, p.alphabet(), n)?;
    let details = json!({
        "max_degree": n,
        "admissible": true,
        "certificates": certs,
        "free_rank_one_expected": D8_FREE_RANK_ONE,
    });
    Ok((ok, details, assumptions))
}

fn reference_generator_set(a: &Alphabet) -> Result<BTreeSet<Word>> {
    D8_REFERENCE_GENERATORS
        .iter()
        .map(|s| word_str(a, s))
        .collect()
}

fn generator_words(gens: &[(usize, NcPoly)]) -> Option<Vec<Word>> {
    gens.iter()
        .map(|(_, p)| {
            if p.term_count() == 1 {
                p.terms().next().map(|(w, _)| w.clone())
            } else {
                None
            }
        })
        .collect()
}

fn assignment_value(p: &Presentation, grading: &Grading) -> Result<Value> {
    let group = grading.group();
    let hdet = hdet_codeterminant(grading)?;
    let map: Vec<Value> = (0..p.alphabet().len())
        .map(|i| {
            json!({
                "generator": p.alphabet().symbol(i).name,
                "degree": group.name(grading.letter_degree(i)),
            })
        })
        .collect();
    Ok(json!({
        "assignment": map,
        "admissible": is_admissible_grading(p, grading),
        "inner_faithful": is_inner_faithful(grading),
        "codeterminant": group.name(hdet.element),
        "codeterminant_trivial": hdet.trivial,
    }))
}

fn check_worked_example(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::GRADED)?;
    let mut assumptions = Vec::new();
    let p = presentation_or(cfg, || down_up(&Scalar::zero(), &Scalar::one()))?;
    let group = group_or(cfg, || dihedral(8))?;
    let stated = grading_or(cfg, group.clone(), p.alphabet(), &[("u", "rho"), ("d", "r")])?;
    let swapped = swapped_grading(&stated, p.alphabet())?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let n = effective_degree(cfg.max_degree.unwrap_or(12), min_needed, &mut assumptions)?;
    let cert_to = n.min(9);
    assumptions.push(format!(
        "generator-count obstruction uses the hard-coded threshold {OBSTRUCTION_THRESHOLD} \
         (regularity would force at most {OBSTRUCTION_THRESHOLD} generators)"
    ));

    let stated_summary = assignment_value(&p, &stated)?;
    let swapped_summary = assignment_value(&p, &swapped)?;
    let both_graded = is_admissible_grading(&p, &stated)
        && is_admissible_grading(&p, &swapped)
        && is_inner_faithful(&stated)
        && is_inner_faithful(&swapped);
    if !both_graded {
        let details = json!({
            "max_degree": n,
            "stated": stated_summary,
            "swapped": swapped_summary,
            "counterexample": "an assignment fails admissibility or inner faithfulness",
        });
        return Ok((false, details, assumptions));
    }

    let hdet_st = hdet_codeterminant(&stated)?;
    let hdet_sw = hdet_codeterminant(&swapped)?;
    let hdet_ok = !hdet_st.trivial && !hdet_sw.trivial && hdet_st.element == hdet_sw.element;

    let order = p.default_order();
    let (sys, table) = normal_basis(&p, &order, n)?;

    // Swapped assignment: generators, Hilbert series, certificates.
    let gb_sw = graded_decompose(&table, &swapped)?;
    let fixed_sw = gb_sw.fixed_table(n);
    let gens_sw = minimal_generators(&fixed_sw, &sys, n)?;
    let reference = reference_generator_set(p.alphabet())?;
    let reference_display: Vec<String> = reference
        .iter()
        .map(|w| p.alphabet().display_word(w))
        .collect();
    let swapped_matches = generator_words(&gens_sw.generators)
        .map(|ws| ws.into_iter().collect::<BTreeSet<Word>>() == reference)
        .unwrap_or(false);
    let degrees_ok = gens_sw.degrees() == vec![2, 4, 4, 4];

    let (num, den) = hypersurface_closed_form(&[2, 4, 4, 4], 8);
    let hilbert_ok = hilbert_matches_closed_form(&fixed_sw.dims(), &num, &den)?;
    let (certs_ok, certs) = run_d8_certificates(&gb_sw, &swapped, &sys, p.alphabet(), cert_to)?;

    // Stated assignment: the documented discrepancy.
    let gb_st = graded_decompose(&table, &stated)?;
    let fixed_st = gb_st.fixed_table(n);
    let stated_deg2: Vec<String> = fixed_st
        .row(2)
        .iter()
        .map(|w| p.alphabet().display_word(w))
        .collect();
    let discrepancy_confirmed = stated_deg2 == vec!["d^2".to_string()];
    let gens_st = minimal_generators(&fixed_st, &sys, n)?;
    let stated_matches = generator_words(&gens_st.generators)
        .map(|ws| ws.into_iter().collect::<BTreeSet<Word>>() == reference)
        .unwrap_or(false);

    let pass = hdet_ok
        && swapped_matches
        && degrees_ok
        && gens_sw.obstruction_flag
        && hilbert_ok
        && certs_ok
        && discrepancy_confirmed
        && !stated_matches;

    let gen_list = |gens: &[(usize, NcPoly)]| -> Value {
        Value::Array(
            gens.iter()
                .map(|(d, q)| json!({"degree": d, "generator": q.display(&order)}))
                .collect(),
        )
    };

    let details = json!({
        "max_degree": n,
        "stated": stated_summary,
        "swapped": swapped_summary,
        "codeterminant_nontrivial": hdet_ok,
        "reference_generators": reference_display,
        "swapped_generators": gen_list(&gens_sw.generators),
        "swapped_generator_degrees": gens_sw.degrees(),
        "swapped_reproduces_reference": swapped_matches,
        "obstruction_flag": gens_sw.obstruction_flag,
        "fixed_dimensions": dims_value(&fixed_sw.dims()),
        "hilbert_matches_hypersurface": hilbert_ok,
        "certificates_verified_to": cert_to,
        "certificates": certs,
        "stated_generators": gen_list(&gens_st.generators),
        "stated_reproduces_reference": stated_matches,
        "stated_degree_2_fixed": stated_deg2,
        "discrepancy": "the stated assignment fixes d^2 in degree 2 (not u^2); the published \
                        generator list is reproduced by the swapped assignment",
        "discrepancy_confirmed": discrepancy_confirmed,
    });
    Ok((pass, details, assumptions))
}

fn check_quaternion_scenario(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::GRADED)?;
    let mut assumptions = Vec::new();
    let p = presentation_or(cfg, || down_up(&Scalar::zero(), &Scalar::one()))?;
    let group = group_or(cfg, || Ok(quaternion8()))?;
    let grading = grading_or(cfg, group.clone(), p.alphabet(), &[("u", "i"), ("d", "j")])?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let n = effective_degree(cfg.max_degree.unwrap_or(16), min_needed, &mut assumptions)?;
    assumptions.push(format!(
        "generator-count obstruction uses the hard-coded threshold {OBSTRUCTION_THRESHOLD} \
         (regularity would force at most {OBSTRUCTION_THRESHOLD} generators)"
    ));

    let admissible = is_admissible_grading(&p, &grading);
    let faithful = is_inner_faithful(&grading);
    let nonabelian = !group.is_abelian();
    if !admissible {
        let details = json!({
            "max_degree": n,
            "admissible": false,
            "counterexample": "a defining relation is not group-homogeneous under this grading",
        });
        return Ok((false, details, assumptions));
    }
    let order = p.default_order();
    let (sys, table) = normal_basis(&p, &order, n)?;
    let gb = graded_decompose(&table, &grading)?;
    let fixed = gb.fixed_table(n);
    let gens = minimal_generators(&fixed, &sys, n)?;
    let count = gens.generators.len();
    let pass = faithful && nonabelian && count >= 4 && gens.obstruction_flag;

    let details = json!({
        "max_degree": n,
        "admissible": admissible,
        "inner_faithful": faithful,
        "abelian": !nonabelian,
        "fixed_dimensions": dims_value(&fixed.dims()),
        "generator_count": count,
        "generator_degrees": gens.degrees(),
        "generators": Value::Array(gens.generators.iter()
            .map(|(d, q)| json!({"degree": d, "generator": q.display(&order)}))
            .collect()),
        "obstruction_flag": gens.obstruction_flag,
    });
    Ok((pass, details, assumptions))
}

fn check_dihedral_contradiction(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::GRADED)?;
    let mut assumptions = Vec::new();
    let p = presentation_or(cfg, || Ok(builtin_h()))?;
    let group = group_or(cfg, || dihedral(6))?;
    let grading = grading_or(cfg, group.clone(), p.alphabet(), &[("x", "r"), ("y", "rho r")])?;

    let admissible = is_admissible_grading(&p, &grading);
    let faithful = is_inner_faithful(&grading);
    if p.alphabet().len() != 2 {
        return Err(Error::Config(
            "this check needs a two-generator presentation".into(),
        ));
    }
    let g1 = grading.letter_degree(0);
    let g2 = grading.letter_degree(1);
    let m = longest_element(&group, g1, g2)?;
    let rot_order = group.element_order(group.mul(g1, g2));

    let min_needed = p
        .relation_degrees()
        .into_iter()
        .max()
        .unwrap_or(0)
        .max(rot_order);
    let n = effective_degree(cfg.max_degree.unwrap_or(6), min_needed, &mut assumptions)?;
    assumptions.push(
        "a component free of rank one over the fixed ring has dimension 1 at its minimal \
         occupied degree"
            .to_string(),
    );

    if !admissible {
        let details = json!({
            "max_degree": n,
            "admissible": false,
            "counterexample": "a defining relation is not group-homogeneous under this grading",
        });
        return Ok((false, details, assumptions));
    }

    let order = p.default_order();
    let (sys, table) = normal_basis(&p, &order, n)?;
    let gb = graded_decompose(&table, &grading)?;
    let m_dims: Vec<usize> = (0..=n).map(|t| gb.component(t, m).len()).collect();
    let t0 = m_dims.iter().position(|&d| d > 0);
    let dim_t0 = t0.map(|t| m_dims[t]).unwrap_or(0);

    let x = Word::letter(p.alphabet().index_of("x")?);
    let y = Word::letter(p.alphabet().index_of("y")?);
    let xy = x.concat(&y);
    let yx = y.concat(&x);
    let (w1, w2) = if rot_order % 2 == 1 {
        (
            xy.pow((rot_order - 1) / 2).concat(&x),
            yx.pow((rot_order - 1) / 2).concat(&y),
        )
    } else {
        (xy.pow(rot_order / 2), yx.pow(rot_order / 2))
    };
    let q1 = sys.reduce(&NcPoly::from_word(w1.clone()));
    let q2 = sys.reduce(&NcPoly::from_word(w2.clone()));
    let in_component = g_homogeneous_degree(&grading, &q1)? == Some(m)
        && g_homogeneous_degree(&grading, &q2)? == Some(m);
    let independent = linearly_independent(&[q1.clone(), q2.clone()], &p, &order, n)?;

    // Any single generator would have to sit at the minimal occupied
    // degree and span it alone; certify the failure for each witness.
    let mut witness_certs = Vec::new();
    let mut all_single_fail = true;
    for w in [&w1, &w2] {
        if sys.is_normal_word(w) {
            let cert = verify_component(&gb, &grading, &sys, m, std::slice::from_ref(w), n)?;
            all_single_fail = all_single_fail && !cert.span_ok;
            witness_certs.push(certificate_value(p.alphabet(), &group, &cert));
        }
    }

    let contradiction = t0 == Some(rot_order) && dim_t0 >= 2 && all_single_fail;
    let pass = faithful && in_component && independent && contradiction;

    let details = json!({
        "max_degree": n,
        "admissible": admissible,
        "inner_faithful": faithful,
        "longest_element": group.name(m),
        "rotation_order": rot_order,
        "component_dimensions": dims_value(&m_dims),
        "minimal_occupied_degree": t0,
        "dimension_there": dim_t0,
        "witnesses": [p.alphabet().display_word(&w1), p.alphabet().display_word(&w2)],
        "witnesses_in_component": in_component,
        "witnesses_independent": independent,
        "single_generator_certificates": witness_certs,
        "contradiction": contradiction,
    });
    Ok((pass, details, assumptions))
}

// ---------------------------------------------------------------------------
// parameter-case identities
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ParameterCase {
    /// alpha = 0, images u -> x, d -> y - x; one parameter beta.
    TriangularAlphaZero,
    /// alpha = 0, images u -> x - y, d -> x - a y; parameters beta, a.
    GeneralAlphaZero,
    /// general alpha, images u -> x, d -> y - x; parameters alpha, beta.
    TriangularGeneral,
    /// general alpha, images u -> x - y, d -> x - a y; parameters
    /// alpha, beta, a.
    GeneralGeneral,
}

struct CaseSample {
    alpha: Scalar,
    beta: Scalar,
    a: Option<Scalar>,
}

fn case_samples(cfg: &CheckConfig, case: ParameterCase) -> Result<Vec<CaseSample>> {
    let tuples = match case {
        ParameterCase::TriangularAlphaZero => {
            sample_tuples(cfg, 1, &[&["2"], &["3"], &["5"], &["7"], &["-1"]])?
        }
        ParameterCase::GeneralAlphaZero => sample_tuples(
            cfg,
            2,
            &[
                &["-1", "-1"],
                &["2", "3"],
                &["3", "-2"],
                &["5", "2"],
                &["7", "-3"],
            ],
        )?,
        ParameterCase::TriangularGeneral => sample_tuples(
            cfg,
            2,
            &[
                &["2", "-1"],
                &["1", "1"],
                &["3", "2"],
                &["-1", "-2"],
                &["2", "3"],
            ],
        )?,
        ParameterCase::GeneralGeneral => sample_tuples(
            cfg,
            3,
            &[
                &["-2", "-1", "-1"],
                &["1", "1", "2"],
                &["2", "1", "-2"],
                &["3", "2", "2"],
                &["-1", "3", "3"],
            ],
        )?,
    };
    let mut out = Vec::new();
    for t in tuples {
        let sample = match case {
            ParameterCase::TriangularAlphaZero => CaseSample {
                alpha: Scalar::zero(),
                beta: t[0].clone(),
                a: None,
            },
            ParameterCase::GeneralAlphaZero => CaseSample {
                alpha: Scalar::zero(),
                beta: t[0].clone(),
                a: Some(t[1].clone()),
            },
            ParameterCase::TriangularGeneral => CaseSample {
                alpha: t[0].clone(),
                beta: t[1].clone(),
                a: None,
            },
            ParameterCase::GeneralGeneral => CaseSample {
                alpha: t[0].clone(),
                beta: t[1].clone(),
                a: Some(t[2].clone()),
            },
        };
        validate_sample(case, &sample)?;
        out.push(sample);
    }
    Ok(out)
}

fn validate_sample(case: ParameterCase, s: &CaseSample) -> Result<()> {
    if s.beta.is_zero() {
        return Err(Error::BetaZero);
    }
    let one = Scalar::one();
    match case {
        ParameterCase::TriangularAlphaZero | ParameterCase::GeneralAlphaZero => {
            if s.beta == one {
                return Err(Error::Config(
                    "this case requires beta != 1 (sample rejected)".into(),
                ));
            }
        }
        ParameterCase::TriangularGeneral | ParameterCase::GeneralGeneral => {
            if s.alpha.is_zero() {
                return Err(Error::Config(
                    "this case requires alpha != 0 (sample rejected)".into(),
                ));
            }
        }
    }
    if let Some(a) = &s.a {
        if a.is_zero() || *a == one {
            return Err(Error::Config(
                "this case requires a outside {0, 1} (sample rejected)".into(),
            ));
        }
    }
    Ok(())
}

/// One verified identity: a label, the frozen expected polynomial,
/// and the polynomial actually computed.
struct Identity {
    label: &'static str,
    expected: NcPoly,
    computed: NcPoly,
}

fn case_identities(
    case: ParameterCase,
    s: &CaseSample,
    a2: &Alphabet,
    r1: &NcPoly,
    r2: &NcPoly,
) -> Result<Vec<Identity>> {
    let al = &s.alpha;
    let be = &s.beta;
    let one = Scalar::one();
    let mut ids = Vec::new();
    match case {
        ParameterCase::TriangularAlphaZero => {
            ids.push(Identity {
                label: "E1.12.1",
                expected: combination(
                    a2,
                    &[
                        (one.clone(), "xxy"),
                        (-be, "yxx"),
                        (be - &one, "xxx"),
                    ],
                )?,
                computed: r1.clone(),
            });
            ids.push(Identity {
                label: "E1.12.2",
                expected: combination(
                    a2,
                    &[
                        (one.clone(), "xyy"),
                        (-be, "yyx"),
                        (&one - be, "xxx"),
                        (-&one, "xxy"),
                        (be - &one, "xyx"),
                        (be.clone(), "yxx"),
                    ],
                )?,
                computed: r2.clone(),
            });
            ids.push(Identity {
                label: "E1.12.3",
                expected: combination(
                    a2,
                    &[
                        (one.clone(), "xyy"),
                        (-be, "yyx"),
                        (be - &one, "xyx"),
                    ],
                )?,
                computed: r1.add(r2),
            });
        }
        ParameterCase::GeneralAlphaZero => {
            let a = s.a.as_ref().expect("case has parameter a");
            ids.push(Identity {
                label: "relation-1-expansion",
                expected: combination(
                    a2,
                    &[
                        (&one - be, "xxx"),
                        (be - a, "xxy"),
                        (be - &one, "xyx"),
                        (&(a * be) - &one, "yxx"),
                        (a - be, "xyy"),
                        (a - &(a * be), "yxy"),
                        (&one - &(a * be), "yyx"),
                        (&(a * be) - a, "yyy"),
                    ],
                )?,
                computed: r1.clone(),
            });
            ids.push(Identity {
                label: "relation-2-expansion",
                expected: combination(
                    a2,
                    &[
                        (&one - be, "xxx"),
                        (be - a, "xxy"),
                        (&(a * be) - a, "xyx"),
                        (&(a * be) - &one, "yxx"),
                        (&(a * a) - &(a * be), "xyy"),
                        (a - &(a * be), "yxy"),
                        (a - &(a * &(a * be)), "yyx"),
                        (&(a * &(a * be)) - &(a * a), "yyy"),
                    ],
                )?,
                computed: r2.clone(),
            });
            // (a r1 - r2)/(a - 1) and (r2 - r1)/(1 - a) isolate the
            // two group-homogeneous halves.
            let denom1 = (a - &one).inverse()?;
            let c1 = r1.scale(a).sub(r2).scale(&denom1);
            let denom2 = (&one - a).inverse()?;
            let c2 = r2.sub(r1).scale(&denom2);
            ids.push(Identity {
                label: "combination-1",
                expected: combination(
                    a2,
                    &[
                        (&one - be, "xxx"),
                        (be - a, "xxy"),
                        (&(a * be) - &one, "yxx"),
                        (a - &(a * be), "yxy"),
                    ],
                )?,
                computed: c1.clone(),
            });
            ids.push(Identity {
                label: "combination-2",
                expected: combination(
                    a2,
                    &[
                        (&one - be, "xyx"),
                        (be - a, "xyy"),
                        (&(a * be) - &one, "yyx"),
                        (a - &(a * be), "yyy"),
                    ],
                )?,
                computed: c2.clone(),
            });
            let minus_one = -&one;
            if *be == minus_one && *a == minus_one {
                let two = Scalar::from_int(2);
                let f = builtin_f();
                ids.push(Identity {
                    label: "specialization-cube-relations-1",
                    expected: f.relations()[0].scale(&two),
                    computed: c1,
                });
                ids.push(Identity {
                    label: "specialization-cube-relations-2",
                    expected: f.relations()[1].scale(&-&two),
                    computed: c2,
                });
            }
        }
        ParameterCase::TriangularGeneral => {
            ids.push(Identity {
                label: "relation-1-expansion",
                expected: combination(
                    a2,
                    &[
                        (one.clone(), "xxy"),
                        (-al, "xyx"),
                        (-be, "yxx"),
                        (&(al + be) - &one, "xxx"),
                    ],
                )?,
                computed: r1.clone(),
            });
            ids.push(Identity {
                label: "relation-2-expansion",
                expected: combination(
                    a2,
                    &[
                        (&one - &(al + be), "xxx"),
                        (al - &one, "xxy"),
                        (be - &one, "xyx"),
                        (al + be, "yxx"),
                        (one.clone(), "xyy"),
                        (-al, "yxy"),
                        (-be, "yyx"),
                    ],
                )?,
                computed: r2.clone(),
            });
            ids.push(Identity {
                label: "combination",
                expected: combination(
                    a2,
                    &[
                        (al.clone(), "xxy"),
                        (be - &(al + &one), "xyx"),
                        (al.clone(), "yxx"),
                        (one.clone(), "xyy"),
                        (-al, "yxy"),
                        (-be, "yyx"),
                    ],
                )?,
                computed: r1.add(r2),
            });
            if *al == Scalar::from_int(2) && *be == Scalar::from_int(-1) {
                let (p1, p2) = abelian_case_relations(a2, al)?;
                let two = Scalar::from_int(2);
                ids.push(Identity {
                    label: "specialization-abelian-case-1",
                    expected: p1,
                    computed: r1.scale(&two),
                });
                ids.push(Identity {
                    label: "specialization-abelian-case-2",
                    expected: p2,
                    computed: r2.sub(r1).scale(&two),
                });
            }
        }
        ParameterCase::GeneralGeneral => {
            let a = s.a.as_ref().expect("case has parameter a");
            let ab = &(al + be);
            ids.push(Identity {
                label: "relation-1-expansion",
                expected: combination(
                    a2,
                    &[
                        (&one - ab, "xxx"),
                        (ab - a, "xxy"),
                        (&(&(a * al) + be) - &one, "xyx"),
                        (&(al + &(a * be)) - &one, "yxx"),
                        (a - &(&(a * al) + be), "xyy"),
                        (a - &(al + &(a * be)), "yxy"),
                        (&one - &(a * ab), "yyx"),
                        (a * &(ab - &one), "yyy"),
                    ],
                )?,
                computed: r1.clone(),
            });
            ids.push(Identity {
                label: "relation-2-expansion",
                expected: combination(
                    a2,
                    &[
                        (&one - ab, "xxx"),
                        (&(&(a * al) + be) - a, "xxy"),
                        (&(al + &(a * be)) - a, "xyx"),
                        (&(a * ab) - &one, "yxx"),
                        (a * &(a - ab), "xyy"),
                        (a * &(&one - &(&(a * al) + be)), "yxy"),
                        (a * &(&one - &(al + &(a * be))), "yyx"),
                        (&(a * a) * &(ab - &one), "yyy"),
                    ],
                )?,
                computed: r2.clone(),
            });
            let one_m_ab = &one - ab;
            if !one_m_ab.is_zero() {
                let denom = (&one - a).inverse()?;
                let c1 = r1.sub(r2).scale(&denom);
                let c2 = r1.sub(&c1);
                ids.push(Identity {
                    label: "combination-1",
                    expected: combination(
                        a2,
                        &[
                            (al.clone(), "xxy"),
                            (-&(&(&one + al) - be), "xyx"),
                            (al.clone(), "yxx"),
                            (a - be, "xyy"),
                            (-&(al * &(a + &one)), "yxy"),
                            (&one - &(a * be), "yyx"),
                            (a * &(ab - &one), "yyy"),
                        ],
                    )?,
                    computed: c1.clone(),
                });
                ids.push(Identity {
                    label: "combination-2",
                    expected: combination(
                        a2,
                        &[
                            (&one - ab, "xxx"),
                            (be - a, "xxy"),
                            (al * &(&one + a), "xyx"),
                            (&(a * be) - &one, "yxx"),
                            (-&(a * al), "xyy"),
                            (a * &(&(&one + al) - be), "yxy"),
                            (-&(a * al), "yyx"),
                        ],
                    )?,
                    computed: c2.clone(),
                });
                let minus_one = -&one;
                if *a == minus_one && *be == minus_one {
                    let (p1, p2) = abelian_case_relations(a2, al)?;
                    ids.push(Identity {
                        label: "specialization-abelian-case-1",
                        expected: p1,
                        computed: c1.clone(),
                    });
                    ids.push(Identity {
                        label: "specialization-abelian-case-2",
                        expected: p2,
                        computed: c2.clone(),
                    });
                    if *al == Scalar::from_int(-2) {
                        let h = builtin_h();
                        let minus_two = Scalar::from_int(-2);
                        ids.push(Identity {
                            label: "specialization-symmetric-relations-1",
                            expected: h.relations()[0].scale(&minus_two),
                            computed: c1,
                        });
                        ids.push(Identity {
                            label: "specialization-symmetric-relations-2",
                            expected: h.relations()[1].scale(&minus_two),
                            computed: c2,
                        });
                    }
                }
            } else {
                // With alpha + beta = 1 the expansions divide by
                // (1 - a); the halves then combine as n1 + n2 and
                // a n1 + n2.
                let denom = (&one - a).inverse()?;
                let n1 = r1.scale(&denom);
                let n2 = r2.scale(&denom);
                ids.push(Identity {
                    label: "divided-relation-1",
                    expected: combination(
                        a2,
                        &[
                            (one.clone(), "xxy"),
                            (-al, "xyx"),
                            (-be, "yxx"),
                            (-be, "xyy"),
                            (-al, "yxy"),
                            (one.clone(), "yyx"),
                        ],
                    )?,
                    computed: n1.clone(),
                });
                ids.push(Identity {
                    label: "divided-relation-2",
                    expected: combination(
                        a2,
                        &[
                            (be.clone(), "xxy"),
                            (al.clone(), "xyx"),
                            (-&one, "yxx"),
                            (-a, "xyy"),
                            (a * al, "yxy"),
                            (a * be, "yyx"),
                        ],
                    )?,
                    computed: n2.clone(),
                });
                let m1 = n1.add(&n2);
                let m2 = n1.scale(a).add(&n2);
                ids.push(Identity {
                    label: "combination-1",
                    expected: combination(
                        a2,
                        &[
                            (&one + be, "xxy"),
                            (-&(&one + be), "yxx"),
                            (-&(be + a), "xyy"),
                            (al * &(a - &one), "yxy"),
                            (&one + &(a * be), "yyx"),
                        ],
                    )?,
                    computed: m1.clone(),
                });
                ids.push(Identity {
                    label: "combination-2",
                    expected: combination(
                        a2,
                        &[
                            (a + be, "xxy"),
                            (al * &(&one - a), "xyx"),
                            (-&(&(a * be) + &one), "yxx"),
                            (-&(&(a * be) + a), "xyy"),
                            (a + &(a * be), "yyx"),
                        ],
                    )?,
                    computed: m2.clone(),
                });
                if *be == -&one {
                    let scale1 = &one - a;
                    let scale2 = a - &one;
                    ids.push(Identity {
                        label: "specialization-beta-minus-one-1",
                        expected: combination(
                            a2,
                            &[
                                (scale1.clone(), "xyy"),
                                (&scale1 * &Scalar::from_int(-2), "yxy"),
                                (scale1.clone(), "yyx"),
                            ],
                        )?,
                        computed: m1,
                    });
                    ids.push(Identity {
                        label: "specialization-beta-minus-one-2",
                        expected: combination(
                            a2,
                            &[
                                (scale2.clone(), "xxy"),
                                (&scale2 * &Scalar::from_int(-2), "xyx"),
                                (scale2.clone(), "yxx"),
                            ],
                        )?,
                        computed: m2,
                    });
                }
            }
        }
    }
    Ok(ids)
}

/// The abelian-case relation pair
/// `alpha x^2y + (-2-alpha) xyx + alpha yx^2 + (2-alpha) y^3` and
/// `(2-alpha) x^3 + alpha xy^2 + (-2-alpha) yxy + alpha y^2x`.
fn abelian_case_relations(a2: &Alphabet, al: &Scalar) -> Result<(NcPoly, NcPoly)> {
    let two = Scalar::from_int(2);
    let p1 = combination(
        a2,
        &[
            (al.clone(), "xxy"),
            (-&(&two + al), "xyx"),
            (al.clone(), "yxx"),
            (&two - al, "yyy"),
        ],
    )?;
    let p2 = combination(
        a2,
        &[
            (&two - al, "xxx"),
            (al.clone(), "xyy"),
            (-&(&two + al), "yxy"),
            (al.clone(), "yyx"),
        ],
    )?;
    Ok((p1, p2))
}

fn check_parameter_case(cfg: &CheckConfig, case: ParameterCase) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::SAMPLES)?;
    let mut assumptions = Vec::new();
    let _ = effective_degree(cfg.max_degree.unwrap_or(3), 3, &mut assumptions)?;
    let samples = case_samples(cfg, case)?;

    let target_alphabet = Alphabet::weight_one(&["x", "y"]);
    let target = Presentation::new(target_alphabet, Vec::new(), "free(x,y)")?;
    let order = target.default_order();
    let a2 = target.alphabet();

    let mut sample_rows = Vec::new();
    let mut pass = true;
    for s in &samples {
        let source = down_up(&s.alpha, &s.beta)?;
        let mut images = std::collections::BTreeMap::new();
        let x = NcPoly::from_word(word_str(a2, "x")?);
        let y = NcPoly::from_word(word_str(a2, "y")?);
        match case {
            ParameterCase::TriangularAlphaZero | ParameterCase::TriangularGeneral => {
                images.insert("u".to_string(), x.clone());
                images.insert("d".to_string(), y.sub(&x));
            }
            ParameterCase::GeneralAlphaZero | ParameterCase::GeneralGeneral => {
                let a = s.a.as_ref().expect("case has parameter a");
                images.insert("u".to_string(), x.sub(&y));
                images.insert("d".to_string(), x.sub(&y.scale(a)));
            }
        }
        let imgs = relation_image(&source, &images, &target, &order, 3)?;
        let ids = case_identities(case, s, a2, &imgs[0], &imgs[1])?;

        let mut id_rows = Vec::new();
        for id in &ids {
            let ok = id.expected == id.computed;
            pass = pass && ok;
            id_rows.push(json!({
                "label": id.label,
                "expected": poly_value(&order, &id.expected),
                "computed": poly_value(&order, &id.computed),
                "match": ok,
            }));
        }
        let mut params = serde_json::Map::new();
        if !s.alpha.is_zero() || matches!(case, ParameterCase::TriangularGeneral | ParameterCase::GeneralGeneral) {
            params.insert("alpha".into(), Value::String(s.alpha.to_string()));
        }
        params.insert("beta".into(), Value::String(s.beta.to_string()));
        if let Some(a) = &s.a {
            params.insert("a".into(), Value::String(a.to_string()));
        }
        sample_rows.push(json!({
            "parameters": Value::Object(params),
            "identities": id_rows,
        }));
    }
    let details = json!({
        "sample_count": samples.len(),
        "samples": sample_rows,
    });
    Ok((pass, details, assumptions))
}

// ---------------------------------------------------------------------------
// dimension cross-checks
// ---------------------------------------------------------------------------

fn check_presentations(cfg: &CheckConfig) -> Result<Vec<Presentation>> {
    match &cfg.presentation {
        Some(pj) => Ok(vec![presentation_from_json(pj)?]),
        None => Ok(standard_presentations()),
    }
}

fn check_oracle_equivalence(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(cfg, &Uses::PRESENTATION)?;
    let mut assumptions = Vec::new();
    let presentations = check_presentations(cfg)?;
    let min_needed = presentations
        .iter()
        .flat_map(|p| p.relation_degrees())
        .max()
        .unwrap_or(0);
    let n = effective_degree(cfg.max_degree.unwrap_or(8), min_needed, &mut assumptions)?;
    assumptions.push(
        "the oracle computes quotient dimensions by exact row reduction of the truncated \
         relation ideal, independently of any rewriting"
            .to_string(),
    );

    let mut rows = Vec::new();
    let mut pass = true;
    for p in &presentations {
        let order = p.default_order();
        let (_sys, table) = normal_basis(p, &order, n)?;
        let rewrite_dims = table.dims();
        let oracle = oracle_dims(p, n);
        let ok = rewrite_dims == oracle;
        pass = pass && ok;
        rows.push(json!({
            "label": p.label(),
            "rewrite_dims": dims_value(&rewrite_dims),
            "oracle_dims": dims_value(&oracle),
            "match": ok,
        }));
    }
    let details = json!({
        "max_degree": n,
        "presentations": rows,
    });
    Ok((pass, details, assumptions))
}

fn check_hilbert(cfg: &CheckConfig) -> Result<CheckBody> {
    validate_uses(
        cfg,
        &Uses {
            presentation: true,
            series: true,
            ..Uses::NONE
        },
    )?;
    let mut assumptions = Vec::new();
    let presentations = check_presentations(cfg)?;
    let min_needed = presentations
        .iter()
        .flat_map(|p| p.relation_degrees())
        .max()
        .unwrap_or(0);
    let n = effective_degree(cfg.max_degree.unwrap_or(10), min_needed, &mut assumptions)?;

    let (num, den) = match (&cfg.numerator, &cfg.denominator) {
        (None, None) => down_up_closed_form(),
        (Some(nc), Some(dc)) => (IntPoly::new(nc.clone()), IntPoly::new(dc.clone())),
        _ => {
            return Err(Error::Config(
                "closed form needs both 'numerator' and 'denominator'".into(),
            ))
        }
    };

    let expected = crate::hilbert::expand_series(&num, &den, n)?;
    let mut rows = Vec::new();
    let mut pass = true;
    for p in &presentations {
        let order = p.default_order();
        let (_sys, table) = normal_basis(p, &order, n)?;
        let dims = table.dims();
        let ok = hilbert_matches_closed_form(&dims, &num, &den)?;
        pass = pass && ok;
        rows.push(json!({
            "label": p.label(),
            "dims": dims_value(&dims),
            "match": ok,
        }));
    }
    let details = json!({
        "max_degree": n,
        "closed_form": {
            "numerator": num.coeffs(),
            "denominator": den.coeffs(),
        },
        "expected": expected.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "presentations": rows,
    });
    Ok((pass, details, assumptions))
}
