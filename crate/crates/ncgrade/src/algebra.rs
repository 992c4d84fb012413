//! Finitely presented graded algebras: the down-up family and the two
//! symmetrized presentations used throughout, plus degree-by-degree
//! bases computed two independent ways.
//!
//! `normal_basis` goes through the rewriting engine; `oracle_dims`
//! never touches rewriting and instead row-reduces the degree-`n`
//! slice of the two-sided ideal inside the free algebra. Agreement of
//! the two routes is itself one of the checks this crate exists to run,
//! so the routes must stay independent.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{self, row_from_entries, RowSpace, SparseRow};
use crate::order::MonomialOrder;
use crate::poly::{poly_from_names, NcPoly};
use crate::rewrite::{complete, ReductionSystem};
use crate::scalar::Scalar;
use crate::word::{Alphabet, Word};

/// A finitely presented algebra: an alphabet of weighted generators
/// and a list of homogeneous defining relations (each read as "= 0").
#[derive(Debug, Clone)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<NcPoly>,
    label: String,
}

impl Presentation {
    /// Validates that every relation is nonzero, lives over the
    /// alphabet, and is homogeneous for the generator weights.
    pub fn new(alphabet: Alphabet, relations: Vec<NcPoly>, label: impl Into<String>) -> Result<Self> {
        for r in &relations {
            if r.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            for (w, _) in r.terms() {
                alphabet.check_word(w)?;
            }
            r.homogeneous_degree(&alphabet)?;
        }
        Ok(Presentation {
            alphabet,
            relations,
            label: label.into(),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Degrees of the defining relations.
    pub fn relation_degrees(&self) -> Vec<usize> {
        self.relations
            .iter()
            .map(|r| r.homogeneous_degree(&self.alphabet).unwrap().unwrap())
            .collect()
    }

    /// Degree-lexicographic order with generator precedence given by
    /// listing order (first listed = smallest).
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::deglex(&self.alphabet)
    }

    /// Completes the defining relations up to `bound`.
    pub fn complete(&self, order: &MonomialOrder, bound: usize) -> Result<ReductionSystem> {
        complete(&self.relations, order, bound)
    }
}

/// The down-up algebra on `u, d` with parameters `(alpha, beta)`:
/// `u^2 d = alpha u d u + beta d u^2` and
/// `u d^2 = alpha d u d + beta d^2 u`. Requires `beta != 0` (the
/// noetherian range, where the family is a domain with cubic growth).
pub fn down_up(alpha: &Scalar, beta: &Scalar) -> Result<Presentation> {
    if beta.is_zero() {
        return Err(Error::BetaZero);
    }
    let alphabet = Alphabet::weight_one(&["u", "d"]);
    let u = Word::letter(0);
    let d = Word::letter(1);
    let uud = u.pow(2).concat(&d);
    let udu = u.concat(&d).concat(&u);
    let duu = d.concat(&u.pow(2));
    let udd = u.concat(&d.pow(2));
    let dud = d.concat(&u).concat(&d);
    let ddu = d.pow(2).concat(&u);
    let r1 = NcPoly::from_terms([
        (uud, Scalar::one()),
        (udu, -alpha),
        (duu, -beta),
    ]);
    let r2 = NcPoly::from_terms([
        (udd, Scalar::one()),
        (dud, -alpha),
        (ddu, -beta),
    ]);
    let label = format!("D({alpha},{beta})");
    Presentation::new(alphabet, vec![r1, r2], label)
}

/// The cube-relations algebra on `x, y`: `x^3 = yxy`, `y^3 = xyx`.
/// Isomorphic to the down-up algebra at `(0,-1)` via `x = u + d`,
/// `y = u - d`; all of its completed rules are monomial-to-monomial.
pub fn builtin_f() -> Presentation {
    let alphabet = Alphabet::weight_one(&["x", "y"]);
    let r1 = poly_from_names(&alphabet, &[("1", &["x", "x", "x"]), ("-1", &["y", "x", "y"])]).unwrap();
    let r2 = poly_from_names(&alphabet, &[("1", &["y", "y", "y"]), ("-1", &["x", "y", "x"])]).unwrap();
    Presentation::new(alphabet, vec![r1, r2], "F").unwrap()
}

/// The mixed-cube algebra on `x, y`: `x^2 y + y x^2 = 2 y^3` and
/// `x y^2 + y^2 x = 2 x^3`. Isomorphic to the down-up algebra at
/// `(-2,-1)` via `u = x - y`, `d = x + y`.
pub fn builtin_h() -> Presentation {
    let alphabet = Alphabet::weight_one(&["x", "y"]);
    let r1 = poly_from_names(
        &alphabet,
        &[
            ("1", &["x", "x", "y"]),
            ("1", &["y", "x", "x"]),
            ("-2", &["y", "y", "y"]),
        ],
    )
    .unwrap();
    let r2 = poly_from_names(
        &alphabet,
        &[
            ("-2", &["x", "x", "x"]),
            ("1", &["x", "y", "y"]),
            ("1", &["y", "y", "x"]),
        ],
    )
    .unwrap();
    Presentation::new(alphabet, vec![r1, r2], "H").unwrap()
}

/// The fixed sample family used by the cross-check suites: six down-up
/// parameter points plus the two symmetrized presentations.
pub fn standard_presentations() -> Vec<Presentation> {
    let s = Scalar::from_int;
    vec![
        down_up(&s(0), &s(1)).unwrap(),
        down_up(&s(0), &s(-1)).unwrap(),
        down_up(&s(2), &s(-1)).unwrap(),
        down_up(&s(-2), &s(-1)).unwrap(),
        down_up(&s(1), &s(1)).unwrap(),
        down_up(&s(0), &s(5)).unwrap(),
        builtin_f(),
        builtin_h(),
    ]
}

/// All words over the alphabet of the given total degree, ordered
/// lexicographically by letter index.
pub fn free_words(alphabet: &Alphabet, degree: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::new();
    fn rec(alphabet: &Alphabet, remaining: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word::from_letters(cur.clone()));
            return;
        }
        for l in 0..alphabet.len() {
            let w = alphabet.weight(l);
            if w <= remaining {
                cur.push(l as u8);
                rec(alphabet, remaining - w, cur, out);
                cur.pop();
            }
        }
    }
    rec(alphabet, degree, &mut cur, &mut out);
    out
}

/// A basis listed degree by degree: `rows()[n]` is the degree-`n`
/// slice, each row sorted ascending in the word order that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisTable {
    rows: Vec<Vec<Word>>,
}

impl BasisTable {
    pub fn new(rows: Vec<Vec<Word>>) -> Self {
        BasisTable { rows }
    }

    pub fn rows(&self) -> &[Vec<Word>] {
        &self.rows
    }

    /// The degree-`n` row (empty slice past the table).
    pub fn row(&self, n: usize) -> &[Word] {
        self.rows.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Graded dimensions `h_0..h_N`.
    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }
}

/// Completes the presentation up to degree `n` and lists the normal
/// words degree by degree; these are a basis through degree `n`.
pub fn normal_basis(
    p: &Presentation,
    order: &MonomialOrder,
    n: usize,
) -> Result<(ReductionSystem, BasisTable)> {
    let sys = p.complete(order, n)?;
    let rows = sys.normal_words(n);
    Ok((sys, BasisTable::new(rows)))
}

/// Graded dimensions computed without any rewriting: for each degree,
/// the span of `w1 * r * w2` over all relations `r` and word pairs is
/// row-reduced inside the full free-algebra slice, and the dimension
/// is the number of free words minus the rank. Serves as the
/// independent oracle against `normal_basis`.
pub fn oracle_dims(p: &Presentation, n: usize) -> Vec<usize> {
    let alphabet = &p.alphabet;
    let order = MonomialOrder::deglex(alphabet);
    let words: Vec<Vec<Word>> = (0..=n).map(|k| free_words(alphabet, k)).collect();
    let rel_degrees = p.relation_degrees();
    let mut dims = Vec::with_capacity(n + 1);
    for deg in 0..=n {
        // Columns indexed by descending word order, so a row's leading
        // column is its largest word; this keeps elimination fill low.
        let mut cols = words[deg].clone();
        cols.sort_by(|a, b| order.compare(b, a));
        let index: HashMap<&Word, usize> = cols.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut space = RowSpace::new();
        for (r, &rd) in p.relations.iter().zip(&rel_degrees) {
            if rd > deg {
                continue;
            }
            for left_deg in 0..=(deg - rd) {
                let right_deg = deg - rd - left_deg;
                for w1 in &words[left_deg] {
                    for w2 in &words[right_deg] {
                        let sandwich = r.sandwich(w1, w2);
                        let row = row_from_entries(
                            sandwich.terms().map(|(w, c)| (index[w], c.clone())),
                        );
                        space.insert(row);
                    }
                }
            }
        }
        dims.push(words[deg].len() - space.rank());
    }
    dims
}

/// Whether the polynomials are linearly independent in the quotient
/// algebra, decided by reducing to normal form and row-reducing the
/// coefficient vectors. Requires `bound` at least the maximum degree
/// involved so the normal forms are trustworthy.
pub fn linearly_independent(
    polys: &[NcPoly],
    p: &Presentation,
    order: &MonomialOrder,
    bound: usize,
) -> Result<bool> {
    let sys = p.complete(order, bound)?;
    let mut reduced = Vec::with_capacity(polys.len());
    for q in polys {
        for (w, _) in q.terms() {
            p.alphabet.check_word(w)?;
        }
        if let Some(d) = q.degree(&p.alphabet) {
            if d > bound {
                return Err(Error::BoundTooSmall { bound, needed: d });
            }
        }
        reduced.push(sys.reduce(q));
    }
    let mut cols: BTreeMap<Word, usize> = BTreeMap::new();
    for q in &reduced {
        for (w, _) in q.terms() {
            let next = cols.len();
            cols.entry(w.clone()).or_insert(next);
        }
    }
    let rows: Vec<SparseRow> = reduced
        .iter()
        .map(|q| row_from_entries(q.terms().map(|(w, c)| (cols[w], c.clone()))))
        .collect();
    Ok(linalg::rank(rows) == polys.len())
}

/// Applies a generator substitution to every defining relation of
/// `source` and reduces the results in the completed `target`. The
/// substitution must send each generator to a homogeneous degree-1
/// combination of target generators and be linearly invertible, so
/// that it induces a well-defined comparison of presentations.
pub fn relation_image(
    source: &Presentation,
    images: &BTreeMap<String, NcPoly>,
    target: &Presentation,
    order: &MonomialOrder,
    bound: usize,
) -> Result<Vec<NcPoly>> {
    let n_src = source.alphabet.len();
    if n_src != target.alphabet.len() {
        return Err(Error::NonInvertibleSubstitution);
    }
    let mut image_vec = Vec::with_capacity(n_src);
    for i in 0..n_src {
        let name = &source.alphabet.symbol(i).name;
        let img = images
            .get(name)
            .ok_or_else(|| Error::BadSubstitutionImage(format!("no image for generator '{name}'")))?;
        for (w, _) in img.terms() {
            target.alphabet.check_word(w)?;
        }
        match img.homogeneous_degree(&target.alphabet)? {
            Some(d) if d == source.alphabet.weight(i) => {}
            Some(d) => {
                return Err(Error::BadSubstitutionImage(format!(
                    "image of '{name}' has degree {d}, expected {}",
                    source.alphabet.weight(i)
                )))
            }
            None => {
                return Err(Error::BadSubstitutionImage(format!(
                    "image of '{name}' is zero"
                )))
            }
        }
        image_vec.push(img.clone());
    }
    let mut matrix_rows = Vec::with_capacity(n_src);
    for img in &image_vec {
        let mut entries = Vec::new();
        for (w, c) in img.terms() {
            if w.len() != 1 {
                return Err(Error::NonInvertibleSubstitution);
            }
            entries.push((w.letters()[0] as usize, c.clone()));
        }
        matrix_rows.push(row_from_entries(entries));
    }
    if linalg::rank(matrix_rows) != n_src {
        return Err(Error::NonInvertibleSubstitution);
    }
    let sys = target.complete(order, bound)?;
    let mut out = Vec::with_capacity(source.relations.len());
    for r in &source.relations {
        let q = r.substitute(&image_vec)?;
        if let Some(d) = q.degree(&target.alphabet) {
            if d > bound {
                return Err(Error::BoundTooSmall { bound, needed: d });
            }
        }
        out.push(sys.reduce(&q));
    }
    Ok(out)
}

const PATTERN_TAILS_FREE: &[(usize, usize)] = &[
    (0, 0),
    (1, 0),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 0),
    (2, 1),
    (2, 2),
];
const PATTERN_TAILS_MIDDLE: &[(usize, usize)] =
    &[(1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2)];
const PATTERN_TAILS_TIGHT: &[(usize, usize)] = &[(1, 0), (2, 0), (2, 1), (2, 2)];

/// The structured word family for the cube-relations algebra:
/// `x^i (yx^3)^j (yx^2)^e (y^2x^2)^k y^a x^b` with `e` in `{0,1}` and
/// the tail `(a,b)` drawn from one of three sets depending on which of
/// `j, e, k` vanish. Listed degree by degree through `max_degree`,
/// each row sorted ascending in deglex with `x < y`.
pub fn pattern_basis_f(max_degree: usize) -> BasisTable {
    let alphabet = Alphabet::weight_one(&["x", "y"]);
    let order = MonomialOrder::deglex(&alphabet);
    let x = Word::letter(0);
    let y = Word::letter(1);
    let yx3 = y.concat(&x.pow(3));
    let yx2 = y.concat(&x.pow(2));
    let y2x2 = y.pow(2).concat(&x.pow(2));
    let mut rows: Vec<Vec<Word>> = vec![Vec::new(); max_degree + 1];
    for j in 0..=(max_degree / 4) {
        for e in 0..=1usize {
            for k in 0..=(max_degree / 4) {
                let core = 4 * j + 3 * e + 4 * k;
                if core > max_degree {
                    continue;
                }
                let tails: &[(usize, usize)] = if j + e + k == 0 {
                    PATTERN_TAILS_FREE
                } else if e + k == 0 {
                    PATTERN_TAILS_MIDDLE
                } else {
                    PATTERN_TAILS_TIGHT
                };
                for &(a, b) in tails {
                    if core + a + b > max_degree {
                        continue;
                    }
                    for i in 0..=(max_degree - core - a - b) {
                        let deg = i + core + a + b;
                        let word = x
                            .pow(i)
                            .concat(&yx3.pow(j))
                            .concat(&yx2.pow(e))
                            .concat(&y2x2.pow(k))
                            .concat(&y.pow(a))
                            .concat(&x.pow(b));
                        rows[deg].push(word);
                    }
                }
            }
        }
    }
    for row in &mut rows {
        order.sort(row);
    }
    BasisTable::new(rows)
}

/// One failed factorization: `reduce(left * right)` equals the
/// subword, but `reduce(left)` is not a prefix of it.
#[derive(Debug, Clone)]
pub struct LeftSubwordViolation {
    pub subword: Word,
    pub left: Word,
    pub right: Word,
}

/// Outcome of `left_subword_check`.
#[derive(Debug, Clone)]
pub struct LeftSubwordReport {
    /// Number of nonempty subwords of `(y^2x^2)^s` examined.
    pub subword_count: usize,
    /// All `(left, right)` pairs enumerated.
    pub candidates: usize,
    /// Pairs whose product reduced to one of the subwords.
    pub factorizations: usize,
    pub violations: Vec<LeftSubwordViolation>,
}

impl LeftSubwordReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, in the cube-relations algebra, that whenever a product of
/// two words reduces to a subword `f` of `(y^2 x^2)^s`, the normal
/// form of the left factor is a prefix of `f`. All word pairs of total
/// degree at most `max_degree` are enumerated.
pub fn left_subword_check(s: usize, max_degree: usize) -> Result<LeftSubwordReport> {
    if s == 0 {
        return Err(Error::Config("subword power s must be at least 1".into()));
    }
    if max_degree < 4 {
        return Err(Error::Config(
            "left-subword check needs max degree at least 4".into(),
        ));
    }
    let p = builtin_f();
    let order = p.default_order();
    let sys = p.complete(&order, max_degree)?;
    let alphabet = p.alphabet();

    let y2x2 = Word::letter(1).pow(2).concat(&Word::letter(0).pow(2));
    let base = y2x2.pow(s);
    let mut subwords: BTreeSet<Word> = BTreeSet::new();
    for i in 0..base.len() {
        for j in (i + 1)..=base.len() {
            let sub = base.slice(i, j);
            if alphabet.word_degree(&sub) <= max_degree {
                subwords.insert(sub);
            }
        }
    }

    let words: Vec<Vec<Word>> = (0..=max_degree).map(|k| free_words(alphabet, k)).collect();
    let mut report = LeftSubwordReport {
        subword_count: subwords.len(),
        candidates: 0,
        factorizations: 0,
        violations: Vec::new(),
    };
    for total in 1..=max_degree {
        for left_deg in 0..=total {
            for left in &words[left_deg] {
                let left_nf = sys.reduce(&NcPoly::from_word(left.clone()));
                for right in &words[total - left_deg] {
                    report.candidates += 1;
                    let product = sys.reduce(&NcPoly::from_word(left.concat(right)));
                    let mut terms = product.terms();
                    let single = match (terms.next(), terms.next()) {
                        (Some((w, c)), None) if c.is_one() => w,
                        _ => continue,
                    };
                    if !subwords.contains(single) {
                        continue;
                    }
                    report.factorizations += 1;
                    let prefix_ok = match left_nf.terms().next() {
                        Some((nw, nc)) if left_nf.term_count() == 1 && nc.is_one() => {
                            single.starts_with(nw)
                        }
                        _ => false,
                    };
                    if !prefix_ok {
                        report.violations.push(LeftSubwordViolation {
                            subword: single.clone(),
                            left: left.clone(),
                            right: right.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn down_up_rejects_beta_zero() {
        assert!(matches!(
            down_up(&Scalar::from_int(3), &Scalar::zero()),
            Err(Error::BetaZero)
        ));
    }

    #[test]
    fn down_up_relations_have_frozen_shape() {
        let p = down_up(&Scalar::from_int(2), &Scalar::from_int(-1)).unwrap();
        let order = p.default_order();
        assert_eq!(p.label(), "D(2,-1)");
        assert_eq!(p.relations().len(), 2);
        assert_eq!(p.relations()[0].display(&order), "du^2 - 2·udu + u^2d");
        assert_eq!(p.relations()[1].display(&order), "d^2u - 2·dud + ud^2");
        assert_eq!(p.relation_degrees(), vec![3, 3]);
    }

    #[test]
    fn down_up_basis_matches_quadratic_table() {
        let p = down_up(&Scalar::zero(), &Scalar::one()).unwrap();
        let order = p.default_order();
        let (sys, basis) = normal_basis(&p, &order, 8).unwrap();
        assert_eq!(sys.rules().len(), 2, "two rules complete the family");
        assert!(sys.is_confluent_up_to(8));
        assert_eq!(basis.dims(), vec![1, 2, 4, 6, 9, 12, 16, 20, 25]);
        // Normal words avoid du^2 and d^2u, hence have the staircase
        // shape u^i (du)^j d^k.
        for row in basis.rows() {
            for w in row {
                assert!(!w.contains(&p.alphabet().word_from_names(&["d", "u", "u"]).unwrap()));
                assert!(!w.contains(&p.alphabet().word_from_names(&["d", "d", "u"]).unwrap()));
            }
        }
    }

    #[test]
    fn oracle_agrees_with_normal_basis_for_samples() {
        for p in standard_presentations() {
            let order = p.default_order();
            let (_, basis) = normal_basis(&p, &order, 6).unwrap();
            assert_eq!(
                oracle_dims(&p, 6),
                basis.dims(),
                "oracle disagrees for {}",
                p.label()
            );
        }
    }

    #[test]
    fn free_words_counts_are_powers_of_two() {
        let a = Alphabet::weight_one(&["x", "y"]);
        for n in 0..=6 {
            assert_eq!(free_words(&a, n).len(), 1 << n);
        }
    }

    #[test]
    fn pattern_rows_equal_normal_rows() {
        let p = builtin_f();
        let order = p.default_order();
        let (_, basis) = normal_basis(&p, &order, 7).unwrap();
        let pattern = pattern_basis_f(7);
        assert_eq!(pattern.rows(), basis.rows());
    }

    #[test]
    fn left_subword_check_clean_at_degree_six() {
        let report = left_subword_check(1, 6).unwrap();
        assert!(report.passed());
        assert!(report.factorizations > 0);
        // Distinct nonempty subwords of y^2x^2: x, y, xx, yx, yy, yxx,
        // yyx, yyxx.
        assert_eq!(report.subword_count, 8);
    }

    #[test]
    fn left_subword_check_rejects_degenerate_inputs() {
        assert!(left_subword_check(0, 8).is_err());
        assert!(left_subword_check(1, 3).is_err());
    }

    #[test]
    fn independence_detects_duplicates_and_free_pairs() {
        let p = builtin_h();
        let order = p.default_order();
        let x = NcPoly::from_word(Word::letter(0));
        let y = NcPoly::from_word(Word::letter(1));
        assert!(linearly_independent(&[x.clone(), y.clone()], &p, &order, 4).unwrap());
        assert!(!linearly_independent(&[x.clone(), x.scale(&Scalar::from_int(3))], &p, &order, 4).unwrap());
        // y^3 and its defining combination are dependent in the quotient.
        let y3 = NcPoly::from_word(Word::letter(1).pow(3));
        let mix = poly_from_names(
            p.alphabet(),
            &[("1/2", &["x", "x", "y"]), ("1/2", &["y", "x", "x"])],
        )
        .unwrap();
        assert!(!linearly_independent(&[y3, mix], &p, &order, 4).unwrap());
    }

    #[test]
    fn relation_image_lands_in_ideal_for_matching_parameters() {
        // u = (x+y)/2, d = (x-y)/2 carries the (0,-1) down-up relations
        // into the ideal of the cube-relations algebra.
        let src = down_up(&Scalar::zero(), &Scalar::from_int(-1)).unwrap();
        let tgt = builtin_f();
        let order = tgt.default_order();
        let half = Scalar::new(1, 2).unwrap();
        let mut images = BTreeMap::new();
        images.insert(
            "u".to_string(),
            NcPoly::from_terms([
                (Word::letter(0), half.clone()),
                (Word::letter(1), half.clone()),
            ]),
        );
        images.insert(
            "d".to_string(),
            NcPoly::from_terms([
                (Word::letter(0), half.clone()),
                (Word::letter(1), -&half),
            ]),
        );
        let out = relation_image(&src, &images, &tgt, &order, 5).unwrap();
        assert!(out.iter().all(NcPoly::is_zero), "images must reduce to zero");
    }

    #[test]
    fn relation_image_rejects_singular_substitution() {
        let src = down_up(&Scalar::zero(), &Scalar::one()).unwrap();
        let tgt = builtin_f();
        let order = tgt.default_order();
        let x = NcPoly::from_word(Word::letter(0));
        let mut images = BTreeMap::new();
        images.insert("u".to_string(), x.clone());
        images.insert("d".to_string(), x.scale(&Scalar::from_int(2)));
        assert!(matches!(
            relation_image(&src, &images, &tgt, &order, 4),
            Err(Error::NonInvertibleSubstitution)
        ));
    }

    #[test]
    fn relation_image_rejects_inhomogeneous_image() {
        let src = down_up(&Scalar::zero(), &Scalar::one()).unwrap();
        let tgt = builtin_f();
        let order = tgt.default_order();
        let mut images = BTreeMap::new();
        images.insert(
            "u".to_string(),
            NcPoly::from_word(Word::letter(0).pow(2)),
        );
        images.insert("d".to_string(), NcPoly::from_word(Word::letter(1)));
        assert!(matches!(
            relation_image(&src, &images, &tgt, &order, 4),
            Err(Error::BadSubstitutionImage(_))
        ));
    }

    #[test]
    fn presentation_rejects_inhomogeneous_relation() {
        let a = Alphabet::weight_one(&["x", "y"]);
        let bad = poly_from_names(&a, &[("1", &["x", "x"]), ("-1", &["y"])]).unwrap();
        assert!(Presentation::new(a, vec![bad], "bad").is_err());
    }
}
