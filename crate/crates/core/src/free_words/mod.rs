//! Free-group words over named alphabets.
//!
//! Words are freely reduced at construction, so structural equality of two
//! [`Word`]s is equality in the free group. The commutator convention used
//! throughout the crate is `[u, v] = u⁻¹ v⁻¹ u v`.

mod enumerate;
mod hom;
mod schreier;

pub use enumerate::{enumerate_reduced_words, reduced_word_count, ReducedWords};
pub use hom::FreeHom;
pub use schreier::cyclic_kernel_basis;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::syntax;

struct AlphabetInner {
    symbols: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered set of generator names.
///
/// Cloning is cheap. The order of the symbols fixes the letter order used by
/// shortlex comparisons and enumeration.
#[derive(Clone)]
pub struct Alphabet(Arc<AlphabetInner>);

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::invalid("symbol", "empty generator name"));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet(Arc::new(AlphabetInner { symbols, index })))
    }

    pub fn len(&self) -> usize {
        self.0.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.0.symbols
    }

    pub fn symbol(&self, generator: usize) -> &str {
        &self.0.symbols[generator]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.0.index.get(symbol).copied()
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.0.index.contains_key(symbol)
    }

    pub fn letter(&self, symbol: &str, inverse: bool) -> Result<Letter> {
        self.index_of(symbol)
            .map(|g| Letter::new(g, inverse))
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    /// The symbols of `self` that appear in `keep`, in `self`'s order.
    pub fn restrict(&self, keep: &[&str]) -> Result<Alphabet> {
        for s in keep {
            if !self.contains(s) {
                return Err(Error::UnknownSymbol(s.to_string()));
            }
        }
        Alphabet::new(
            self.symbols()
                .iter()
                .filter(|s| keep.contains(&s.as_str()))
                .cloned(),
        )
    }

    fn same(&self, other: &Alphabet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.symbols == other.0.symbols
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Alphabet {}

impl Hash for Alphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.symbols.hash(state);
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.symbols()).finish()
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.symbols().serialize(serializer)
    }
}

/// A generator or its inverse. Ordered by generator, positive before inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    generator: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter {
            generator: generator as u32,
            inverse,
        }
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Dense code `2·generator + inverse`, handy as a table column.
    pub fn code(self) -> usize {
        2 * self.generator as usize + self.inverse as usize
    }

    pub fn from_code(code: usize) -> Letter {
        Letter::new(code / 2, code % 2 == 1)
    }
}

/// Appends `letter` to a reduced letter stack, cancelling if possible.
#[inline]
pub(crate) fn push_reduced(stack: &mut Vec<Letter>, letter: Letter) {
    if stack.last() == Some(&letter.inverse()) {
        stack.pop();
    } else {
        stack.push(letter);
    }
}

/// A freely reduced word over an [`Alphabet`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: &Alphabet) -> Word {
        Word {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    pub fn generator(alphabet: &Alphabet, symbol: &str) -> Result<Word> {
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: vec![alphabet.letter(symbol, false)?],
        })
    }

    /// Freely reduces a raw letter sequence.
    pub fn from_letters<I>(alphabet: &Alphabet, letters: I) -> Result<Word>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut stack = Vec::new();
        for l in letters {
            if l.generator() >= alphabet.len() {
                return Err(Error::UnknownSymbol(format!("#{}", l.generator())));
            }
            push_reduced(&mut stack, l);
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: stack,
        })
    }

    /// Reduces a sequence of `(symbol, sign)` pairs, `sign` being `±1`.
    pub fn reduce<'a, I>(alphabet: &Alphabet, raw: I) -> Result<Word>
    where
        I: IntoIterator<Item = (&'a str, i32)>,
    {
        let mut stack = Vec::new();
        for (symbol, sign) in raw {
            if sign != 1 && sign != -1 {
                return Err(Error::invalid("sign", format!("{sign} is not ±1")));
            }
            push_reduced(&mut stack, alphabet.letter(symbol, sign < 0)?);
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: stack,
        })
    }

    /// Parses the word syntax (`w^4 * [A23, w]`, `x'`, `(x y)^-2`).
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Word> {
        let mut stack = Vec::new();
        for occ in syntax::parse_occurrences(text)? {
            let letter = alphabet.letter(&occ.name, occ.inverse).map_err(|_| Error::Parse {
                column: occ.column,
                message: format!("unknown generator {:?}", occ.name),
            })?;
            push_reduced(&mut stack, letter);
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: stack,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    fn check(&self, other: &Word) -> Result<()> {
        if self.alphabet.same(&other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn mul(&self, other: &Word) -> Result<Word> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Word {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(&self.alphabet);
        for _ in 0..k.unsigned_abs() {
            out = out.mul_unchecked(&base);
        }
        out
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &Word) -> Result<Word> {
        self.check(c)?;
        Ok(c.mul_unchecked(self).mul_unchecked(&c.inverse()))
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator() == generator)
            .map(|l| l.sign())
            .sum()
    }

    /// Generators that occur in the word, in alphabet order.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.alphabet.len()];
        for l in &self.letters {
            seen[l.generator()] = true;
        }
        (0..seen.len()).filter(|&g| seen[g]).collect()
    }

    /// Shortlex comparison: length first, then letters in alphabet order.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }

    /// Re-expresses the word over another alphabet with the same symbols.
    pub fn over(&self, alphabet: &Alphabet) -> Result<Word> {
        let letters = self
            .letters
            .iter()
            .map(|l| alphabet.letter(self.alphabet.symbol(l.generator()), l.is_inverse()))
            .collect::<Result<Vec<_>>>()?;
        Word::from_letters(alphabet, letters)
    }
}

/// `[u, v] = u⁻¹ v⁻¹ u v`, reduced.
pub fn commutator(u: &Word, v: &Word) -> Result<Word> {
    u.check(v)?;
    Ok(u.inverse()
        .mul_unchecked(&v.inverse())
        .mul_unchecked(u)
        .mul_unchecked(v))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = syntax::format_letters(
            self.letters
                .iter()
                .map(|l| (self.alphabet.symbol(l.generator()), l.is_inverse())),
        );
        f.write_str(&text)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        Word::parse(a, s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let a = xy();
        assert_eq!(Word::reduce(&a, [("x", 1), ("x", -1), ("y", 1)]).unwrap(), w(&a, "y"));
        assert!(Word::reduce(&a, []).unwrap().is_identity());
        assert_eq!(
            Word::reduce(&a, [("x", 1), ("y", 1), ("y", -1), ("x", 1)]).unwrap(),
            w(&a, "x x")
        );
        assert_eq!(
            Word::reduce(&a, [("z", 1)]),
            Err(Error::UnknownSymbol("z".into()))
        );
    }

    #[test]
    fn commutator_examples() {
        let a = xy();
        let (x, y) = (w(&a, "x"), w(&a, "y"));
        assert_eq!(commutator(&y, &x).unwrap(), w(&a, "y^-1 x^-1 y x"));
        assert!(commutator(&y, &Word::identity(&a)).unwrap().is_identity());
        assert!(commutator(&x, &x).unwrap().is_identity());
        // the sugar agrees with the function
        assert_eq!(w(&a, "[y, x^2]"), commutator(&y, &x.pow(2)).unwrap());
    }

    #[test]
    fn alphabet_mismatch() {
        let a = xy();
        let b = Alphabet::new(["x", "z"]).unwrap();
        assert_eq!(
            commutator(&w(&a, "x"), &w(&b, "x")),
            Err(Error::AlphabetMismatch)
        );
        // structurally equal alphabets are compatible
        let c = Alphabet::new(["x", "y"]).unwrap();
        assert!(w(&a, "x").mul(&w(&c, "y")).is_ok());
    }

    #[test]
    fn duplicate_symbols_rejected() {
        assert!(matches!(
            Alphabet::new(["x", "x"]),
            Err(Error::DuplicateSymbol(_))
        ));
    }

    #[test]
    fn display_round_trip() {
        let a = Alphabet::new(["w", "A23"]).unwrap();
        let word = w(&a, "w^4 * [A23, w]");
        assert_eq!(word.to_string(), "w^4 A23^-1 w^-1 A23 w");
        assert_eq!(w(&a, &word.to_string()), word);
        assert_eq!(Word::identity(&a).to_string(), "1");
        assert_eq!(w(&a, "A23'"), w(&a, "A23^-1"));
    }

    #[test]
    fn pow_and_exponent_sum() {
        let a = xy();
        let u = w(&a, "x y^-1");
        assert_eq!(u.pow(-2), w(&a, "y x^-1 y x^-1"));
        assert_eq!(u.pow(3).exponent_sum(0), 3);
        assert_eq!(u.pow(3).exponent_sum(1), -3);
    }
}
