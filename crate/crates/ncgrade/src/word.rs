//! Interned alphabets and words of the free monoid.
//!
//! A word is a sequence of letter indices into an [`Alphabet`]. Each
//! generator carries a positive weight; the weight-degree of a word is
//! the sum of its letters' weights. Words never interpret algebra
//! relations — they are pure free-monoid data.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A named generator together with its positive weight in the
/// connected grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSymbol {
    /// Display / config name, e.g. `"u"` or `"x"`.
    pub name: String,
    /// Weight in the connected grading; at least 1.
    pub weight: usize,
}

impl GeneratorSymbol {
    /// A weight-1 generator with the given name.
    pub fn weight_one(name: &str) -> Self {
        GeneratorSymbol { name: name.to_string(), weight: 1 }
    }
}

/// An ordered, interned list of generators. Letter `i` of every word
/// over this alphabet refers to `symbols[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<GeneratorSymbol>,
}

impl Alphabet {
    /// Builds an alphabet; names must be distinct and nonempty and all
    /// weights at least 1.
    pub fn new(symbols: Vec<GeneratorSymbol>) -> Result<Self> {
        for (i, s) in symbols.iter().enumerate() {
            if s.name.is_empty() {
                return Err(Error::UnknownGenerator(String::new()));
            }
            if s.weight == 0 {
                return Err(Error::Config(format!("generator {:?} has weight 0", s.name)));
            }
            if symbols[..i].iter().any(|t| t.name == s.name) {
                return Err(Error::Config(format!("duplicate generator name {:?}", s.name)));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Weight-1 generators with the given names, in order.
    pub fn weight_one(names: &[&str]) -> Self {
        Alphabet::new(names.iter().map(|n| GeneratorSymbol::weight_one(n)).collect())
            .expect("distinct nonempty names")
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// True for the empty alphabet.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The symbol behind letter index `i`.
    pub fn symbol(&self, i: usize) -> &GeneratorSymbol {
        &self.symbols[i]
    }

    /// All symbols in interning order.
    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.symbols
    }

    /// Letter index of the generator with the given name.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Weight of letter `i`.
    pub fn weight(&self, i: usize) -> usize {
        self.symbols[i].weight
    }

    /// Checks every letter of `w` is a valid index into this alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &l in w.letters() {
            if l as usize >= self.len() {
                return Err(Error::LetterOutOfRange { index: l as usize, size: self.len() });
            }
        }
        Ok(())
    }

    /// Parses a word given as a list of generator names.
    pub fn word_from_names(&self, names: &[impl AsRef<str>]) -> Result<Word> {
        let mut letters = Vec::with_capacity(names.len());
        for n in names {
            letters.push(self.index_of(n.as_ref())? as u8);
        }
        Ok(Word::from_letters(letters))
    }

    /// Weight-degree of a word over this alphabet.
    pub fn word_degree(&self, w: &Word) -> usize {
        w.letters().iter().map(|&l| self.weight(l as usize)).sum()
    }

    /// Renders a word with exponent-compressed notation, e.g.
    /// `u^2(du)^3d`. The empty word renders as `1`.
    pub fn display_word(&self, w: &Word) -> String {
        let ls = w.letters();
        if ls.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut pos = 0;
        while pos < ls.len() {
            // Pick the block length whose immediate repetition consumes the
            // most letters; ties prefer shorter blocks.
            let rest = ls.len() - pos;
            let (mut best_len, mut best_reps) = (1usize, 1usize);
            for blk in 1..=rest / 2 {
                let mut reps = 1;
                while pos + (reps + 1) * blk <= ls.len()
                    && ls[pos..pos + blk] == ls[pos + reps * blk..pos + (reps + 1) * blk]
                {
                    reps += 1;
                }
                if reps >= 2 && reps * blk > best_reps * best_len {
                    best_len = blk;
                    best_reps = reps;
                }
            }
            if best_reps == 1 {
                out.push_str(&self.symbol(ls[pos] as usize).name);
                pos += 1;
            } else {
                if best_len == 1 {
                    out.push_str(&self.symbol(ls[pos] as usize).name);
                } else {
                    out.push('(');
                    for &l in &ls[pos..pos + best_len] {
                        out.push_str(&self.symbol(l as usize).name);
                    }
                    out.push(')');
                }
                let _ = write!(out, "^{best_reps}");
                pos += best_len * best_reps;
            }
        }
        out
    }
}

/// A word of the free monoid: a (possibly empty) sequence of letter
/// indices. The derived `Ord` is the structural order used for
/// canonical term storage; the mathematically meaningful order lives
/// in [`crate::order::MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// A word from raw letter indices.
    pub fn from_letters(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    /// The one-letter word `i`.
    pub fn letter(i: usize) -> Self {
        Word { letters: vec![i as u8] }
    }

    /// Raw letter indices.
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Number of letters (not the weight-degree).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `self` repeated `n` times.
    pub fn pow(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    /// The contiguous subword `self[i..j]`.
    pub fn slice(&self, i: usize, j: usize) -> Word {
        Word { letters: self.letters[i..j].to_vec() }
    }

    /// First position at which `pattern` occurs as a contiguous
    /// subword, if any.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return None;
        }
        (0..=self.len() - pattern.len())
            .find(|&i| self.letters[i..i + pattern.len()] == pattern.letters[..])
    }

    /// True iff `pattern` occurs as a contiguous subword.
    pub fn contains(&self, pattern: &Word) -> bool {
        self.find(pattern).is_some()
    }

    /// True iff `prefix` is a (not necessarily proper) prefix.
    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.letters.starts_with(&prefix.letters)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Word { letters: iter.into_iter().map(|i| i as u8).collect() }
    }
}
