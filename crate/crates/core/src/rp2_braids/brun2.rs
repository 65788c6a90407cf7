use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free_words::{enumerate_reduced_words, Word};
use crate::presentations::{builtin, normal_closure_size, todd_coxeter, Enumeration};

/// Every reduced word up to this length is pushed through the strand-removal
/// maps to check that the images only depend on the group element.
const REPRESENTATIVE_LEN: usize = 8;

/// The Brunnian elements of the 16-element group `B₂(ℝP²)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Brun2Report {
    pub group_order: usize,
    /// Shortlex representatives of the Brunnian elements.
    pub members: Vec<String>,
    pub contains_sigma1: bool,
    pub contains_rho2: bool,
    /// Pure Brunnian elements.
    pub pure_members: Vec<String>,
    /// Size of the normal closure of `s1^2`.
    pub closure_size: usize,
    pub pure_part_is_closure: bool,
    /// Order of `B₂(ℝP²)` with `s1^2 = 1` added.
    pub quotient_order: Option<usize>,
    pub words_checked: usize,
    /// Elements whose representatives disagree on `(d₁, d₂)`.
    pub inconsistent: Vec<String>,
}

/// `(d₁β, d₂β)` in `π₁(ℝP²) = Z/2` for a word over `s1, rho`. `rho` moves
/// the strand at position 1, so it contributes to `d_i` exactly when strand
/// `i` is at position 2.
pub fn b2_removal_images(w: &Word) -> Result<[u8; 2]> {
    let symbols = w.alphabet().symbols();
    if symbols.len() != 2 || !w.alphabet().contains("s1") || !w.alphabet().contains("rho") {
        return Err(Error::AlphabetMismatch);
    }
    let rho = w.alphabet().index_of("rho").expect("checked");
    Ok([1usize, 2].map(|i| {
        let mut p = i;
        let mut c = 0u8;
        for l in w.letters() {
            if l.generator() == rho {
                if p == 2 {
                    c ^= 1;
                }
            } else {
                p = 3 - p;
            }
        }
        c
    }))
}

fn is_pure(w: &Word) -> bool {
    let s1 = w.alphabet().index_of("s1").expect("s1 generator");
    w.exponent_sum(s1) % 2 == 0
}

pub fn brun2_enumerate() -> Result<Brun2Report> {
    let p = builtin("Bn_RP2(2)")?;
    let table = match todd_coxeter(&p, &[], 10_000)? {
        Enumeration::Closed(t) => t,
        Enumeration::DidNotClose { cap, .. } => return Err(Error::NotClosed(cap)),
    };
    let mut images: Vec<Option<[u8; 2]>> = vec![None; table.len()];
    let mut bad = BTreeSet::new();
    let mut checked = 0;
    for w in enumerate_reduced_words(&p.generators, REPRESENTATIVE_LEN) {
        let e = table.evaluate(&w)?;
        let d = b2_removal_images(&w)?;
        checked += 1;
        match images[e] {
            None => images[e] = Some(d),
            Some(prev) if prev != d => {
                bad.insert(e);
            }
            _ => {}
        }
    }
    let rep = |e: usize| table.representative(e).to_string();
    let mut members = Vec::new();
    let mut pure = Vec::new();
    for e in 0..table.len() {
        let d = images[e].ok_or_else(|| Error::Verification(format!("element {e} has no representative")))?;
        if d == [0, 0] {
            members.push(e);
            if is_pure(table.representative(e)) {
                pure.push(e);
            }
        }
    }
    let sigma1 = table.evaluate(&p.word("s1")?)?;
    let rho2 = table.evaluate(&p.word("rho^2")?)?;
    let (closure_size, closure) = normal_closure_size(&table, &[p.word("s1^2")?])?;
    let quotient = todd_coxeter(&p.with_relators(&[p.word("s1^2")?])?, &[], 10_000)?;
    Ok(Brun2Report {
        group_order: table.len(),
        contains_sigma1: members.contains(&sigma1),
        contains_rho2: members.contains(&rho2),
        members: members.iter().map(|&e| rep(e)).collect(),
        pure_part_is_closure: pure == closure,
        pure_members: pure.iter().map(|&e| rep(e)).collect(),
        closure_size,
        quotient_order: quotient.index(),
        words_checked: checked,
        inconsistent: bad.into_iter().map(rep).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brunnian_elements_of_b2() {
        let r = brun2_enumerate().unwrap();
        assert_eq!(r.group_order, 16);
        assert_eq!(r.members.len(), 4);
        assert!(r.contains_sigma1 && r.contains_rho2);
        assert_eq!(r.closure_size, 2);
        assert!(r.pure_part_is_closure);
        assert_eq!(r.quotient_order, Some(8));
        assert!(r.inconsistent.is_empty());
        assert!(r.words_checked > 10_000);
    }
}
