//! Finitely presented groups: the catalog, coset enumeration, finite-group
//! fingerprints and abelianization.
//!
//! Text format:
//!
//! ```text
//! # comment
//! name: P2_RP2          (optional)
//! gens: rho u
//! rel: rho u rho = u    (stored as rho u rho u^-1)
//! rel: rho^2 u^-2
//! alt: ...              (equivalent alternative relation, kept separately)
//! note: ...             (free-form remark)
//! ```

mod catalog;
mod coset;
mod smith;

pub use catalog::{builtin, builtin_names, parse_key};
pub use coset::{
    normal_closure_size, order_profile, todd_coxeter, CosetTable, Enumeration, DEFAULT_COSET_CAP,
};
pub use smith::{abelianization, smith_diagonal};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free_words::{Alphabet, Word};

/// Generators plus relator words; a relation `r = s` is stored as `r·s⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub name: String,
    pub generators: Alphabet,
    pub relators: Vec<Word>,
    /// Equivalent alternative relations, kept for consistency checks.
    pub alternates: Vec<Word>,
    pub notes: Vec<String>,
}

fn relation(alphabet: &Alphabet, text: &str) -> Result<Word> {
    let mut sides = text.split('=');
    let lhs = sides.next().unwrap_or("");
    let rhs = sides.next();
    if sides.next().is_some() {
        return Err(Error::invalid("relation", "more than one '='"));
    }
    let l = Word::parse(alphabet, lhs)?;
    match rhs {
        Some(r) => Ok(l.mul_unchecked(&Word::parse(alphabet, r)?.inverse())),
        None => Ok(l),
    }
}

impl Presentation {
    pub fn new(name: impl Into<String>, generators: Alphabet, relators: Vec<Word>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::invalid("presentation", "no generators"));
        }
        if relators.iter().any(|r| r.alphabet() != &generators) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Presentation {
            name: name.into(),
            generators,
            relators,
            alternates: Vec::new(),
            notes: Vec::new(),
        })
    }

    /// Builds a presentation from relation strings (`"w"` or `"u = v"`).
    pub fn from_relations(name: &str, generators: &[&str], relations: &[String]) -> Result<Self> {
        let alphabet = Alphabet::new(generators.iter().copied())?;
        let relators = relations
            .iter()
            .map(|r| relation(&alphabet, r))
            .collect::<Result<_>>()?;
        Presentation::new(name, alphabet, relators)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut name = String::new();
        let mut alphabet: Option<Alphabet> = None;
        let mut relators = Vec::new();
        let mut alternates = Vec::new();
        let mut notes = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::ParseLine {
                line: line_no,
                message,
            };
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| err(format!("expected 'key: value', found {line:?}")))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = value.to_string(),
                "note" => notes.push(value.to_string()),
                "gens" => {
                    if alphabet.is_some() {
                        return Err(err("generators declared twice".into()));
                    }
                    let a = Alphabet::new(value.split_whitespace()).map_err(|e| err(e.to_string()))?;
                    if a.is_empty() {
                        return Err(err("empty generator list".into()));
                    }
                    alphabet = Some(a);
                }
                k @ ("rel" | "alt") => {
                    let a = alphabet
                        .as_ref()
                        .ok_or_else(|| err("relation before 'gens:' line".into()))?;
                    let w = relation(a, value).map_err(|e| err(e.to_string()))?;
                    if k == "rel" {
                        relators.push(w);
                    } else {
                        alternates.push(w);
                    }
                }
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        let generators = alphabet.ok_or(Error::ParseLine {
            line: text.lines().count().max(1),
            message: "missing 'gens:' line".into(),
        })?;
        Ok(Presentation {
            name,
            generators,
            relators,
            alternates,
            notes,
        })
    }

    /// The same presentation with extra relators appended.
    pub fn with_relators(&self, extra: &[Word]) -> Result<Presentation> {
        if extra.iter().any(|r| r.alphabet() != &self.generators) {
            return Err(Error::AlphabetMismatch);
        }
        let mut p = self.clone();
        p.relators.extend_from_slice(extra);
        Ok(p)
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        Word::parse(&self.generators, text)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.name.is_empty() {
            writeln!(f, "name: {}", self.name)?;
        }
        writeln!(f, "gens: {}", self.generators.symbols().join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        for r in &self.alternates {
            writeln!(f, "alt: {r}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_format() {
        let p = Presentation::parse("# test\ngens: a b\nrel: a^2 = b\nrel: [a,b]\n").unwrap();
        assert_eq!(p.generators.symbols(), &["a", "b"]);
        assert_eq!(p.relators[0], p.word("a^2 b^-1").unwrap());
        assert_eq!(p.relators[1], p.word("a^-1 b^-1 a b").unwrap());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match Presentation::parse("gens: a\n\nrel: a^2 c") {
            Err(Error::ParseLine { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match Presentation::parse("rel: a") {
            Err(Error::ParseLine { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Presentation::parse("# nothing").is_err());
        assert!(Presentation::parse("gens: a\nrel: a = a = a").is_err());
        assert!(Presentation::parse("gens: a\nfoo: a").is_err());
    }

    #[test]
    fn display_round_trip() {
        let p = builtin("P3_RP2_rho").unwrap();
        let q = Presentation::parse(&p.to_string()).unwrap();
        assert_eq!(p, q);
    }
}
