//! Free-group words over named generator alphabets.
//!
//! A [`Word`] is a flat sequence of signed generator indices. Words do not
//! carry their alphabet; the [`Alphabet`] is needed only to parse or render
//! them. Text syntax: whitespace-separated tokens `name`, `name^-1` or
//! `name^K`, with `1` standing for the empty word.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown generator {name:?} at byte {offset}")]
    UnknownGenerator { name: String, offset: usize },
    #[error("malformed token {token:?} at byte {offset}")]
    BadToken { token: String, offset: usize },
    #[error("generator index {index} outside an alphabet of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
}

/// A generator: its name and its position in the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gen {
    pub name: String,
    pub index: usize,
}

/// An ordered list of distinct generator names.
#[derive(Debug, Clone, Default)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}
impl Eq for Alphabet {}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet::default();
        for name in names {
            alphabet.push(name.into())?;
        }
        Ok(alphabet)
    }

    /// Names `prefix1, prefix2, ...` (or starting at `start`).
    pub fn numbered(prefix: &str, start: usize, count: usize) -> Self {
        Self::new((start..start + count).map(|i| format!("{prefix}{i}")))
            .expect("numbered names are distinct and valid")
    }

    pub fn push(&mut self, name: String) -> Result<usize, WordError> {
        if !is_valid_name(&name) {
            return Err(WordError::InvalidName(name));
        }
        if self.lookup.contains_key(&name) {
            return Err(WordError::DuplicateName(name));
        }
        let index = self.names.len();
        self.lookup.insert(name.clone(), index);
        self.names.push(name);
        Ok(index)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn gen(&self, index: usize) -> Gen {
        Gen {
            name: self.names[index].clone(),
            index,
        }
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.len()).map(|i| self.gen(i))
    }

    /// The one-letter word for the generator called `name`.
    pub fn letter(&self, name: &str) -> Result<Word, WordError> {
        self.index_of(name)
            .map(|g| Word::from(vec![Letter::new(g, false)]))
            .ok_or_else(|| WordError::UnknownGenerator {
                name: name.to_string(),
                offset: 0,
            })
    }

    /// Parses a word in the shared text syntax. The result is freely reduced.
    pub fn parse(&self, text: &str) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for (offset, token) in tokens(text) {
            if token == "1" {
                continue;
            }
            let (name, exponent) = match token.split_once('^') {
                Some((name, exp)) => {
                    let exp: i64 = exp.parse().map_err(|_| WordError::BadToken {
                        token: token.to_string(),
                        offset,
                    })?;
                    if exp == 0 {
                        return Err(WordError::BadToken {
                            token: token.to_string(),
                            offset,
                        });
                    }
                    (name, exp)
                }
                None => (token, 1),
            };
            if !is_valid_name(name) {
                return Err(WordError::BadToken {
                    token: token.to_string(),
                    offset,
                });
            }
            let g = self.index_of(name).ok_or_else(|| WordError::UnknownGenerator {
                name: name.to_string(),
                offset,
            })?;
            let letter = Letter::new(g, exponent < 0);
            letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
        }
        Ok(Word::from(letters).free_reduce())
    }

    pub fn render(&self, word: &Word) -> String {
        word.display(self).to_string()
    }
}

/// Whitespace-separated tokens with their byte offsets.
pub(crate) fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut consumed = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        consumed += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let start = consumed;
        consumed += end;
        rest = &trimmed[end..];
        Some((start, &trimmed[..end]))
    })
}

/// A generator or its inverse, packed as `±(index + 1)`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        let v = gen as i32 + 1;
        Letter(if inverse { -v } else { v })
    }

    pub fn gen(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// Coset-table column: `2g` for `g`, `2g + 1` for `g^-1`.
    pub fn column(self) -> usize {
        2 * self.gen() + self.is_inverse() as usize
    }

    pub fn from_column(col: usize) -> Self {
        Letter::new(col / 2, col % 2 == 1)
    }

    pub fn sign(self) -> i64 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "g{}^-1", self.gen())
        } else {
            write!(f, "g{}", self.gen())
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    /// `g^e` as a word, `e` may be negative.
    pub fn gen_pow(g: usize, e: i64) -> Self {
        let letter = Letter::new(g, e < 0);
        Word(vec![letter; e.unsigned_abs() as usize])
    }

    /// Product of the given generators, each to the first power.
    pub fn product_of(gens: impl IntoIterator<Item = usize>) -> Self {
        gens.into_iter().map(|g| Letter::new(g, false)).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1].inverse())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Freely and cyclically reduced form (a cyclic conjugate of `self`).
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce().0;
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(w[lo..hi].to_vec())
    }

    pub fn inverse(&self) -> Word {
        self.0.iter().rev().map(|l| l.inverse()).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self^e`, freely reduced; negative exponents invert.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v).free_reduce()
    }

    /// `u^-1 · self · u`, freely reduced.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.inverse().concat(self).concat(u).free_reduce()
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.gen() == g).map(|l| l.sign()).sum()
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen()).max()
    }

    pub fn occurrences(&self, g: usize) -> usize {
        self.0.iter().filter(|l| l.gen() == g).count()
    }

    /// Cyclic permutation starting at position `k`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Canonical representative of the cyclic word up to inversion: the least
    /// rotation of the cyclically reduced word or of its inverse.
    pub fn cyclic_canonical(&self) -> Word {
        let w = self.cyclic_reduce();
        let inv = w.inverse();
        (0..w.len().max(1))
            .flat_map(|k| [w.rotate(k), inv.rotate(k)])
            .min_by(|a, b| a.0.cmp(&b.0))
            .unwrap_or_default()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay { word: self, alphabet }
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs).free_reduce()
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

/// Renders runs of a repeated letter as `name^k`, the empty word as `1`.
pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let name = self.alphabet.names.get(l.gen()).map(String::as_str).unwrap_or("?");
            let exp = run as i64 * l.sign();
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// A map from the generators of `source` to words over `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenMap {
    pub source: Alphabet,
    pub target: Alphabet,
    images: Vec<Word>,
}

impl GenMap {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self, WordError> {
        if images.len() != source.len() {
            return Err(WordError::IndexOutOfRange {
                index: images.len(),
                size: source.len(),
            });
        }
        for w in &images {
            if let Some(g) = w.max_gen() {
                if g >= target.len() {
                    return Err(WordError::IndexOutOfRange {
                        index: g,
                        size: target.len(),
                    });
                }
            }
        }
        let images = images.into_iter().map(|w| w.free_reduce()).collect();
        Ok(GenMap { source, target, images })
    }

    /// Builds a map from textual images, one per source generator.
    pub fn from_texts(source: Alphabet, target: Alphabet, texts: &[&str]) -> Result<Self, WordError> {
        let images = texts.iter().map(|t| target.parse(t)).collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = (0..alphabet.len()).map(Word::gen).collect();
        GenMap {
            source: alphabet.clone(),
            target: alphabet,
            images,
        }
    }

    pub fn image(&self, g: usize) -> &Word {
        &self.images[g]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Letter-wise substitution followed by free reduction.
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        let mut out = Vec::new();
        for &l in w.letters() {
            let img = self.images.get(l.gen()).ok_or(WordError::IndexOutOfRange {
                index: l.gen(),
                size: self.images.len(),
            })?;
            if l.is_inverse() {
                out.extend(img.letters().iter().rev().map(|x| x.inverse()));
            } else {
                out.extend_from_slice(img.letters());
            }
        }
        Ok(Word(out).free_reduce())
    }

    /// `next ∘ self`: apply `self`, then `next`.
    pub fn then(&self, next: &GenMap) -> Result<GenMap, WordError> {
        let images = self
            .images
            .iter()
            .map(|w| next.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        GenMap::new(self.source.clone(), next.target.clone(), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new(["x1", "x2", "x3"]).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let a = abc();
        assert_eq!(a.parse("x1 x1^-1 x2").unwrap(), a.parse("x2").unwrap());
        assert!(a.parse("1").unwrap().is_empty());
        let nested = a.parse("x2 x1").unwrap().concat(&a.parse("x1^-1 x2^-1").unwrap());
        assert_eq!(nested.len(), 4);
        assert!(nested.free_reduce().is_empty());
    }

    #[test]
    fn inversion_examples() {
        let a = abc();
        let w = a.parse("x1 x2").unwrap();
        assert_eq!(a.render(&w.inverse()), "x2^-1 x1^-1");
        assert!(Word::identity().inverse().is_empty());
        let w = a.parse("x1 x2^-1 x3").unwrap();
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn parse_exponents_and_render_runs() {
        let a = abc();
        let w = a.parse("x1^3 x2^-2").unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(a.render(&w), "x1^3 x2^-2");
        assert_eq!(a.render(&Word::identity()), "1");
    }

    #[test]
    fn parse_errors() {
        let a = abc();
        assert!(matches!(a.parse("x4"), Err(WordError::UnknownGenerator { .. })));
        assert!(matches!(a.parse("x1^0"), Err(WordError::BadToken { .. })));
        assert!(matches!(a.parse("x1^a"), Err(WordError::BadToken { .. })));
        assert!(matches!(
            a.parse("x1 x9"),
            Err(WordError::UnknownGenerator { offset: 3, .. })
        ));
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["1a"]).is_err());
    }

    #[test]
    fn cyclic_reduce_and_canonical() {
        let a = abc();
        let w = a.parse("x1 x2 x3 x1^-1").unwrap();
        assert_eq!(a.render(&w.cyclic_reduce()), "x2 x3");
        let u = a.parse("x2 x3").unwrap();
        let v = a.parse("x3^-1 x2^-1").unwrap();
        assert_eq!(u.cyclic_canonical(), v.cyclic_canonical());
    }

    #[test]
    fn sigma_for_two_three() {
        // x -> x1 x2 x1 with indices mod 2
        let src = Alphabet::new(["x", "y"]).unwrap();
        let tgt = Alphabet::new(["x1", "x2"]).unwrap();
        let f = GenMap::from_texts(src.clone(), tgt.clone(), &["x1 x2 x1", "x1 x2"]).unwrap();
        assert_eq!(tgt.render(&f.apply(&src.parse("x").unwrap()).unwrap()), "x1 x2 x1");
        assert_eq!(tgt.render(&f.apply(&src.parse("x^-1 y").unwrap()).unwrap()), "x1^-1");
    }

    #[test]
    fn identity_map_fixes_words() {
        let a = abc();
        let id = GenMap::identity(a.clone());
        let w = a.parse("x1 x3^-2 x2").unwrap();
        assert_eq!(id.apply(&w).unwrap(), w);
    }

    #[test]
    fn apply_rejects_foreign_generators() {
        let src = Alphabet::new(["a"]).unwrap();
        let f = GenMap::identity(src);
        assert!(f.apply(&Word::gen(3)).is_err());
    }
}
