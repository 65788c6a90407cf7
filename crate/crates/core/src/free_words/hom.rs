use std::collections::HashMap;

use super::{push_reduced, Alphabet, Word};
use crate::error::{Error, Result};

/// A homomorphism between free groups given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeHom {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl FreeHom {
    /// `images` must name every source symbol exactly once.
    pub fn new(source: &Alphabet, target: &Alphabet, images: &HashMap<String, Word>) -> Result<Self> {
        for name in images.keys() {
            if !source.contains(name) {
                return Err(Error::UnknownSymbol(name.clone()));
            }
        }
        let mut out = Vec::with_capacity(source.len());
        for s in source.symbols() {
            let img = images
                .get(s)
                .ok_or_else(|| Error::invalid("homomorphism", format!("no image for {s:?}")))?;
            if img.alphabet() != target {
                return Err(Error::AlphabetMismatch);
            }
            out.push(img.clone());
        }
        Ok(FreeHom {
            source: source.clone(),
            target: target.clone(),
            images: out,
        })
    }

    /// Images listed in source-alphabet order.
    pub fn from_images(source: &Alphabet, target: &Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::invalid(
                "homomorphism",
                format!("{} images for {} generators", images.len(), source.len()),
            ));
        }
        if images.iter().any(|w| w.alphabet() != target) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(FreeHom {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = (0..alphabet.len())
            .map(|g| Word::generator(alphabet, alphabet.symbol(g)).expect("own symbol"))
            .collect();
        FreeHom {
            source: alphabet.clone(),
            target: alphabet.clone(),
            images,
        }
    }

    /// The projection onto the sub-alphabet `keep`, killing every other generator.
    pub fn projection(source: &Alphabet, keep: &[&str]) -> Result<Self> {
        let target = source.restrict(keep)?;
        let images = source
            .symbols()
            .iter()
            .map(|s| {
                if target.contains(s) {
                    Word::generator(&target, s)
                } else {
                    Ok(Word::identity(&target))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeHom {
            source: source.clone(),
            target,
            images,
        })
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, generator: usize) -> &Word {
        &self.images[generator]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet() != &self.source {
            return Err(Error::AlphabetMismatch);
        }
        let mut stack = Vec::new();
        for l in w.letters() {
            let img = &self.images[l.generator()];
            if l.is_inverse() {
                for m in img.letters().iter().rev() {
                    push_reduced(&mut stack, m.inverse());
                }
            } else {
                for &m in img.letters() {
                    push_reduced(&mut stack, m);
                }
            }
        }
        Word::from_letters(&self.target, stack)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FreeHom) -> Result<FreeHom> {
        if other.source != self.target {
            return Err(Error::AlphabetMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|w| other.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeHom {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
        })
    }
}
