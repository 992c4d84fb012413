//! The degree-lexicographic monomial order.
//!
//! Words are compared by weight-degree first; ties are broken left to
//! right by a chosen precedence of the generators. Within a fixed
//! degree no word is a proper prefix of another (weights are
//! positive), so the tie-break always terminates at a differing
//! letter. The order is total, multiplicative, and well-founded
//! degree by degree.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// Degree-lexicographic order on words over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    alphabet: Alphabet,
    /// `rank[letter]` = position in the precedence; smaller rank means
    /// smaller letter.
    rank: Vec<usize>,
}

impl MonomialOrder {
    /// Deglex with the alphabet's own listing as the precedence
    /// (earlier generators are smaller).
    pub fn deglex(alphabet: &Alphabet) -> Self {
        MonomialOrder {
            alphabet: alphabet.clone(),
            rank: (0..alphabet.len()).collect(),
        }
    }

    /// Deglex with an explicit precedence given as generator names from
    /// smallest to largest. Every generator must appear exactly once.
    pub fn deglex_with_precedence(alphabet: &Alphabet, ascending: &[impl AsRef<str>]) -> Result<Self> {
        if ascending.len() != alphabet.len() {
            return Err(Error::Config(format!(
                "precedence lists {} names for an alphabet of {} generators",
                ascending.len(),
                alphabet.len()
            )));
        }
        let mut rank = vec![usize::MAX; alphabet.len()];
        for (pos, name) in ascending.iter().enumerate() {
            let i = alphabet.index_of(name.as_ref())?;
            if rank[i] != usize::MAX {
                return Err(Error::Config(format!("duplicate name {:?} in precedence", name.as_ref())));
            }
            rank[i] = pos;
        }
        Ok(MonomialOrder { alphabet: alphabet.clone(), rank })
    }

    /// The alphabet this order compares words over.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Precedence rank of a letter (smaller = earlier in the order).
    pub fn letter_rank(&self, letter: usize) -> usize {
        self.rank[letter]
    }

    /// Compares two words: weight-degree first, then left-to-right by
    /// letter precedence.
    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        let da = self.alphabet.word_degree(a);
        let db = self.alphabet.word_degree(b);
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (&la, &lb) in a.letters().iter().zip(b.letters().iter()) {
            match self.rank[la as usize].cmp(&self.rank[lb as usize]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        // Equal degree and one a prefix of the other forces equality
        // because weights are positive.
        a.len().cmp(&b.len())
    }

    /// Sorts words ascending under this order (deterministic).
    pub fn sort(&self, words: &mut [Word]) {
        words.sort_by(|a, b| self.compare(a, b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::weight_one(&["x", "y"])
    }

    #[test]
    fn compares_by_degree_then_lex() {
        let a = xy();
        let ord = MonomialOrder::deglex(&a);
        let y3 = a.word_from_names(&["y", "y", "y"]).unwrap();
        let xyx = a.word_from_names(&["x", "y", "x"]).unwrap();
        assert_eq!(ord.compare(&y3, &xyx), Ordering::Greater);
        assert_eq!(ord.compare(&y3, &y3), Ordering::Equal);
        let x = a.word_from_names(&["x"]).unwrap();
        assert_eq!(ord.compare(&x, &xyx), Ordering::Less);
    }

    #[test]
    fn down_up_leading_words() {
        let a = Alphabet::weight_one(&["u", "d"]);
        let ord = MonomialOrder::deglex(&a);
        let du2 = a.word_from_names(&["d", "u", "u"]).unwrap();
        let u2d = a.word_from_names(&["u", "u", "d"]).unwrap();
        let udu = a.word_from_names(&["u", "d", "u"]).unwrap();
        assert_eq!(ord.compare(&du2, &u2d), Ordering::Greater);
        assert_eq!(ord.compare(&du2, &udu), Ordering::Greater);
        assert_eq!(ord.compare(&udu, &u2d), Ordering::Greater);
    }

    #[test]
    fn explicit_precedence_reverses() {
        let a = xy();
        let ord = MonomialOrder::deglex_with_precedence(&a, &["y", "x"]).unwrap();
        let xw = a.word_from_names(&["x"]).unwrap();
        let yw = a.word_from_names(&["y"]).unwrap();
        assert_eq!(ord.compare(&xw, &yw), Ordering::Greater);
        assert!(MonomialOrder::deglex_with_precedence(&a, &["x", "x"]).is_err());
        assert!(MonomialOrder::deglex_with_precedence(&a, &["x"]).is_err());
    }

    #[test]
    fn multiplicative_on_samples() {
        let a = xy();
        let ord = MonomialOrder::deglex(&a);
        let u = a.word_from_names(&["x", "y"]).unwrap();
        let v = a.word_from_names(&["y", "x"]).unwrap();
        assert_eq!(ord.compare(&u, &v), Ordering::Less);
        let l = a.word_from_names(&["y"]).unwrap();
        let r = a.word_from_names(&["x", "x"]).unwrap();
        let lu_r = l.concat(&u).concat(&r);
        let lv_r = l.concat(&v).concat(&r);
        assert_eq!(ord.compare(&lu_r, &lv_r), Ordering::Less);
    }
}
