//! Oriented rewrite rules, normal forms, and degree-bounded completion.
//!
//! A rule replaces its order-maximal left-hand word by a combination
//! of strictly smaller words of the same weight-degree. Completion
//! resolves overlap ambiguities up to a degree bound; once every
//! ambiguity at or below the bound joins, normal forms are unique in
//! those degrees and counting irreducible words computes graded
//! dimensions of the quotient algebra.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::NcPoly;
use crate::word::Word;

/// One oriented rewrite rule `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    /// The word being rewritten; order-maximal in `lhs - rhs`.
    pub lhs: Word,
    /// Replacement combination; every word is strictly smaller than
    /// `lhs` and of the same weight-degree.
    pub rhs: NcPoly,
}

impl RewriteRule {
    /// The relation `lhs - rhs` this rule orients.
    pub fn as_poly(&self) -> NcPoly {
        NcPoly::from_word(self.lhs.clone()).sub(&self.rhs)
    }
}

/// Orients a nonzero homogeneous polynomial into a rule by solving for
/// its order-maximal word.
pub fn make_rule(p: &NcPoly, order: &MonomialOrder) -> Result<RewriteRule> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for (w, _) in p.terms() {
        order.alphabet().check_word(w)?;
    }
    p.homogeneous_degree(order.alphabet())?;
    let (lhs, lead) = {
        let (w, c) = p.leading_term(order).expect("nonzero");
        (w.clone(), c.clone())
    };
    // p = lead·lhs + rest, so lhs -> -rest/lead.
    let inv = lead.inverse().expect("leading coefficient nonzero");
    let rhs = p
        .scale(&(-inv))
        .add(&NcPoly::from_word(lhs.clone()));
    Ok(RewriteRule { lhs, rhs })
}

/// How two rules interfere on a shared word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbiguityKind {
    /// A proper suffix of the left rule's lhs is a proper prefix of
    /// the right rule's lhs.
    Overlap,
    /// The right rule's lhs sits strictly inside the left rule's lhs.
    Inclusion,
}

/// A word two rules both rewrite, with the positions they apply at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    /// The shared word. The left rule applies at offset 0, the right
    /// rule at `offset`.
    pub word: Word,
    /// Index of the rule applying at the start of `word`.
    pub left_rule: usize,
    /// Index of the rule applying at `offset`.
    pub right_rule: usize,
    /// Start position of the right rule's lhs inside `word`.
    pub offset: usize,
    /// Overlap or inclusion.
    pub kind: AmbiguityKind,
}

/// A set of rewrite rules sharing one monomial order.
#[derive(Debug, Clone)]
pub struct ReductionSystem {
    order: MonomialOrder,
    rules: Vec<RewriteRule>,
    /// Largest degree through which every ambiguity is known to join
    /// (set by [`complete`]; 0 for hand-assembled systems).
    confluence_bound: usize,
}

impl ReductionSystem {
    /// Assembles a system from finished rules, checking the rule shape
    /// and that no lhs contains another lhs (inter-reducedness).
    pub fn from_rules(order: MonomialOrder, rules: Vec<RewriteRule>) -> Result<Self> {
        for r in &rules {
            order.alphabet().check_word(&r.lhs)?;
            let p = r.as_poly();
            p.homogeneous_degree(order.alphabet())?;
            for (w, _) in r.rhs.terms() {
                if order.compare(w, &r.lhs) != Ordering::Less {
                    return Err(Error::Config(format!(
                        "rule rhs word {} not smaller than lhs {}",
                        order.alphabet().display_word(w),
                        order.alphabet().display_word(&r.lhs)
                    )));
                }
            }
        }
        for (i, a) in rules.iter().enumerate() {
            for (j, b) in rules.iter().enumerate() {
                if i != j && a.lhs.contains(&b.lhs) {
                    return Err(Error::Config(format!(
                        "rule lhs {} contains rule lhs {}",
                        order.alphabet().display_word(&a.lhs),
                        order.alphabet().display_word(&b.lhs)
                    )));
                }
            }
        }
        Ok(ReductionSystem { order, rules, confluence_bound: 0 })
    }

    /// The monomial order in force.
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The rules, sorted by (degree, lhs) after completion.
    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Degree through which ambiguities are known to join.
    pub fn confluence_bound(&self) -> usize {
        self.confluence_bound
    }

    /// First applicable (rule, position) for a word, scanning rules in
    /// index order and positions left to right. Deterministic.
    fn first_match(&self, w: &Word) -> Option<(usize, usize)> {
        for (i, r) in self.rules.iter().enumerate() {
            if let Some(pos) = w.find(&r.lhs) {
                return Some((i, pos));
            }
        }
        None
    }

    /// True iff no rule applies anywhere in `w`.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.first_match(w).is_none()
    }

    /// Rewrites to normal form: repeatedly replaces the order-largest
    /// reducible word. Terminates because every step replaces a word
    /// by strictly smaller words of the same degree. Normal forms are
    /// unique (strategy-independent) in degrees within the confluence
    /// bound.
    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        let mut work = p.clone();
        loop {
            let mut target: Option<(Word, usize, usize)> = None;
            for (w, _) in work.terms() {
                if let Some((rule, pos)) = self.first_match(w) {
                    let better = match &target {
                        None => true,
                        Some((tw, _, _)) => self.order.compare(w, tw) == Ordering::Greater,
                    };
                    if better {
                        target = Some((w.clone(), rule, pos));
                    }
                }
            }
            let Some((w, rule, pos)) = target else {
                return work;
            };
            let coeff = work.coeff(&w);
            let r = &self.rules[rule];
            let prefix = w.slice(0, pos);
            let suffix = w.slice(pos + r.lhs.len(), w.len());
            work.add_term(w, -&coeff);
            let replacement = r.rhs.sandwich(&prefix, &suffix).scale(&coeff);
            work = work.add(&replacement);
        }
    }

    /// All overlap and inclusion ambiguities whose shared word has
    /// degree at most `bound`, in a fixed order: by degree, then word,
    /// then rule indices and offset.
    pub fn find_ambiguities(&self, bound: usize) -> Vec<Ambiguity> {
        let alph = self.order.alphabet();
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            for (j, rj) in self.rules.iter().enumerate() {
                let (li, lj) = (&ri.lhs, &rj.lhs);
                // Proper overlaps: suffix of li = prefix of lj.
                let max_o = li.len().min(lj.len());
                for o in 1..max_o {
                    if li.letters()[li.len() - o..] == lj.letters()[..o] {
                        let word = li.concat(&lj.slice(o, lj.len()));
                        if alph.word_degree(&word) <= bound {
                            out.push(Ambiguity {
                                word,
                                left_rule: i,
                                right_rule: j,
                                offset: li.len() - o,
                                kind: AmbiguityKind::Overlap,
                            });
                        }
                    }
                }
                // Inclusions: lj strictly inside li.
                if i != j && lj.len() < li.len() && alph.word_degree(li) <= bound {
                    for pos in 0..=li.len() - lj.len() {
                        if li.letters()[pos..pos + lj.len()] == lj.letters()[..] {
                            out.push(Ambiguity {
                                word: li.clone(),
                                left_rule: i,
                                right_rule: j,
                                offset: pos,
                                kind: AmbiguityKind::Inclusion,
                            });
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| {
            alph.word_degree(&a.word)
                .cmp(&alph.word_degree(&b.word))
                .then_with(|| self.order.compare(&a.word, &b.word))
                .then_with(|| (a.left_rule, a.right_rule, a.offset).cmp(&(b.left_rule, b.right_rule, b.offset)))
        });
        out
    }

    /// Fully reduces both one-step rewrites of an ambiguity's word.
    pub fn resolve(&self, amb: &Ambiguity) -> (NcPoly, NcPoly) {
        let rl = &self.rules[amb.left_rule];
        let rr = &self.rules[amb.right_rule];
        let tail = amb.word.slice(rl.lhs.len(), amb.word.len());
        let left = rl.rhs.sandwich(&Word::empty(), &tail);
        let prefix = amb.word.slice(0, amb.offset);
        let suffix = amb.word.slice(amb.offset + rr.lhs.len(), amb.word.len());
        let right = rr.rhs.sandwich(&prefix, &suffix);
        (self.reduce(&left), self.reduce(&right))
    }

    /// True iff every ambiguity with shared word of degree at most `n`
    /// joins to a common normal form.
    pub fn is_confluent_up_to(&self, n: usize) -> bool {
        self.find_ambiguities(n)
            .iter()
            .all(|amb| {
                let (l, r) = self.resolve(amb);
                l == r
            })
    }

    /// Irreducible words of each degree `0..=max_degree`, rows sorted
    /// ascending under the order. Counting these rows gives the graded
    /// dimensions of the quotient in degrees within the confluence
    /// bound.
    pub fn normal_words(&self, max_degree: usize) -> Vec<Vec<Word>> {
        let alph = self.order.alphabet();
        let mut rows: Vec<Vec<Word>> = vec![Vec::new(); max_degree + 1];
        if self.rules.iter().any(|r| r.lhs.is_empty()) {
            // A unit relation collapses the algebra: nothing is normal.
            return rows;
        }
        // Grow normal words letter by letter; an extension is normal
        // iff no lhs ends at its last letter.
        let mut frontier = vec![Word::empty()];
        rows[0].push(Word::empty());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for l in 0..alph.len() {
                    let w2 = w.concat(&Word::letter(l));
                    let deg = alph.word_degree(&w2);
                    if deg > max_degree {
                        continue;
                    }
                    let reducible = self.rules.iter().any(|r| {
                        r.lhs.len() <= w2.len()
                            && w2.letters()[w2.len() - r.lhs.len()..] == r.lhs.letters()[..]
                    });
                    if !reducible {
                        rows[deg].push(w2.clone());
                        next.push(w2);
                    }
                }
            }
            frontier = next;
        }
        for row in &mut rows {
            self.order.sort(row);
        }
        rows
    }

    /// Reduces `p` after absorbing it as a relation candidate: used by
    /// completion. Removes any rule whose lhs becomes reducible and
    /// requeues it.
    fn absorb(&mut self, p: NcPoly) -> Result<()> {
        let mut stack = vec![p];
        while let Some(q) = stack.pop() {
            let q = self.reduce(&q);
            if q.is_zero() {
                continue;
            }
            let rule = make_rule(&q, &self.order)?;
            let new_lhs = rule.lhs.clone();
            let mut kept = Vec::with_capacity(self.rules.len() + 1);
            for r in self.rules.drain(..) {
                if r.lhs.contains(&new_lhs) {
                    stack.push(r.as_poly());
                } else {
                    kept.push(r);
                }
            }
            self.rules = kept;
            self.rules.push(rule);
            // Re-reduce every rhs; reducibility of an lhs is untouched.
            for i in 0..self.rules.len() {
                let rhs = self.rules[i].rhs.clone();
                let red = self.reduce(&rhs);
                self.rules[i].rhs = red;
            }
        }
        Ok(())
    }

    /// Sorts rules by (lhs degree, lhs under the order) for canonical
    /// presentation.
    fn sort_rules(&mut self) {
        let alph = self.order.alphabet().clone();
        let order = self.order.clone();
        self.rules.sort_by(|a, b| {
            alph.word_degree(&a.lhs)
                .cmp(&alph.word_degree(&b.lhs))
                .then_with(|| order.compare(&a.lhs, &b.lhs))
        });
    }
}

/// Degree-bounded completion: orients the relations and resolves
/// ambiguities of degree at most `bound` until all join, keeping the
/// rule set inter-reduced throughout. The result is deterministic for
/// a given input.
pub fn complete(
    relations: &[NcPoly],
    order: &MonomialOrder,
    bound: usize,
) -> Result<ReductionSystem> {
    let alph = order.alphabet();
    let mut sys = ReductionSystem {
        order: order.clone(),
        rules: Vec::new(),
        confluence_bound: bound,
    };
    for r in relations {
        if r.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        for (w, _) in r.terms() {
            alph.check_word(w)?;
        }
        let deg = r.homogeneous_degree(alph)?.expect("nonzero");
        if deg > bound {
            return Err(Error::BoundTooSmall { bound, needed: deg });
        }
    }
    for r in relations {
        sys.absorb(r.clone())?;
    }
    loop {
        let ambs = sys.find_ambiguities(bound);
        let mut progress = false;
        for amb in &ambs {
            let (l, r) = sys.resolve(amb);
            if l != r {
                sys.absorb(l.sub(&r))?;
                progress = true;
                break;
            }
        }
        if !progress {
            break;
        }
    }
    sys.sort_rules();
    Ok(sys)
}
