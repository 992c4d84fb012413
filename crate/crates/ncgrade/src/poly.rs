//! Noncommutative polynomials: finite rational combinations of words.
//!
//! Terms are stored in a canonical map keyed by word, with the
//! invariant that no stored coefficient is zero. All arithmetic is
//! exact. A polynomial does not know its alphabet; operations that
//! need weights or names take an [`Alphabet`] or
//! [`MonomialOrder`](crate::order::MonomialOrder) argument.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::scalar::{signum, Scalar};
use crate::word::{Alphabet, Word};

/// A finite linear combination of words with nonzero rational
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    /// The polynomial `1` (empty word with coefficient one).
    pub fn one() -> Self {
        NcPoly::monomial(Word::empty(), Scalar::one())
    }

    /// A single term `coeff · word`; zero coefficient gives zero.
    pub fn monomial(word: Word, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { terms }
    }

    /// The word `w` with coefficient one.
    pub fn from_word(w: Word) -> Self {
        NcPoly::monomial(w, Scalar::one())
    }

    /// Builds a polynomial from raw terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in canonical storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of a word (zero if absent).
    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `coeff · word` in place, keeping the no-zero invariant.
    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Difference `self - other`.
    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    /// Scalar multiple `c · self`.
    pub fn scale(&self, c: &Scalar) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), -k)).collect(),
        }
    }

    /// Product `self · other` (concatenation on words, bilinear).
    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Left and right multiplication by words: `l · self · r`.
    pub fn sandwich(&self, l: &Word, r: &Word) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (l.concat(w).concat(r), c.clone()))
                .collect(),
        }
    }

    /// Maximal weight-degree over the terms; `None` for zero.
    pub fn degree(&self, alphabet: &Alphabet) -> Option<usize> {
        self.terms.keys().map(|w| alphabet.word_degree(w)).max()
    }

    /// Checks all terms share one weight-degree; returns it (the zero
    /// polynomial is homogeneous of every degree, reported as `None`).
    pub fn homogeneous_degree(&self, alphabet: &Alphabet) -> Result<Option<usize>> {
        let mut deg = None;
        for w in self.terms.keys() {
            let d = alphabet.word_degree(w);
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Err(Error::Inhomogeneous(d0, d)),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// The order-maximal word and its coefficient; `None` for zero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Word, &Scalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    /// Substitutes `images[i]` for letter `i`. Empty words map to the
    /// unit of the target. The caller chooses the target alphabet the
    /// images live over; this routine is pure term rewriting.
    pub fn substitute(&self, images: &[NcPoly]) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (w, c) in self.terms() {
            let mut acc = NcPoly::one();
            for &l in w.letters() {
                let img = images
                    .get(l as usize)
                    .ok_or(Error::LetterOutOfRange { index: l as usize, size: images.len() })?;
                acc = acc.mul(img);
            }
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }

    /// Renders with terms sorted descending under `order`, e.g.
    /// `-1·u^2d + 2·udu`. Zero renders as `0`.
    pub fn display(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Word, &Scalar)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| order.compare(b, a));
        let mut out = String::new();
        for (i, (w, c)) in ts.iter().enumerate() {
            let neg = signum(c) < 0;
            let mag = if neg { -*c } else { (*c).clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = order.alphabet().display_word(w);
            if mag.is_one() && !w.is_empty() {
                out.push_str(&word);
            } else if w.is_empty() {
                let _ = write!(out, "{mag}");
            } else {
                let _ = write!(out, "{mag}·{word}");
            }
        }
        out
    }
}

/// Convenience: builds `Σ coeff·word` from name lists over an alphabet.
pub fn poly_from_names(alphabet: &Alphabet, terms: &[(&str, &[&str])]) -> Result<NcPoly> {
    let mut p = NcPoly::zero();
    for (coeff, names) in terms {
        let w = alphabet.word_from_names(names)?;
        p.add_term(w, coeff.parse()?);
    }
    Ok(p)
}
