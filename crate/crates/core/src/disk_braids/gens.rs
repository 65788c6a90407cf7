use std::collections::HashSet;

use super::{sigma_alphabet, BraidWord, NormalForm};
use crate::error::{Error, Result};
use crate::free_words::{enumerate_reduced_words, Word};
use crate::kernel_basis::symmetric_commutator_gens;

/// Pure σ-words of free length at most `max_len`, one per braid (first in
/// shortlex order kept).
pub fn pure_conjugators(n: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet = sigma_alphabet(n);
    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut out = Vec::new();
    for w in enumerate_reduced_words(&alphabet, max_len) {
        let b = BraidWord::from_free_word(n, &w).expect("sigma alphabet");
        if b.is_pure() && seen.insert(b.normal_form()) {
            out.push(b);
        }
    }
    out
}

/// Bounded generating sample of the symmetric commutator subgroup of the
/// normal closures of `A_{1,n}, …, A_{n−1,n}` in `P_n`, with conjugators the
/// pure σ-words of length at most `conj_len`. Conjugators are restricted to
/// pure braids so that every conjugate stays in the kernel of the matching
/// strand removal. Every output is checked to be Brunnian.
pub fn brunnian_gens_disk(n: usize, conj_len: usize) -> Result<Vec<BraidWord>> {
    if n < 3 {
        return Err(Error::invalid("strand count", "needs n ≥ 3"));
    }
    let alphabet = sigma_alphabet(n);
    let families: Vec<Word> = (1..n)
        .map(|k| super::a_generator(k, n, n)?.to_free_word(&alphabet))
        .collect::<Result<_>>()?;
    let pool: Vec<Word> = pure_conjugators(n, conj_len)
        .iter()
        .map(|b| b.to_free_word(&alphabet))
        .collect::<Result<_>>()?;
    let words = symmetric_commutator_gens(&families, &pool)?;
    let mut out = Vec::with_capacity(words.len());
    for w in &words {
        let b = BraidWord::from_free_word(n, w)?;
        if !super::is_brunnian(&b) {
            return Err(Error::Verification(format!("generator {b} is not Brunnian")));
        }
        out.push(b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk_braids::{equal, is_trivial};

    #[test]
    fn three_strands_no_conjugation() {
        let gens = brunnian_gens_disk(3, 0).unwrap();
        let c = BraidWord::parse(3, "[A[1,3], A[2,3]]").unwrap();
        assert!(gens.iter().any(|g| equal(g, &c).unwrap()));
        assert!(!is_trivial(&c));
        assert_eq!(gens.len(), 2);
    }

    #[test]
    fn pure_conjugator_pool() {
        let pool = pure_conjugators(3, 2);
        // identity, s1^2, s1^-2, s2^2, s2^-2
        assert_eq!(pool.len(), 5);
        assert!(pool.iter().all(BraidWord::is_pure));
    }

    #[test]
    fn conjugated_generators_are_brunnian() {
        let gens = brunnian_gens_disk(3, 2).unwrap();
        assert!(gens.len() > 2);
        assert!(brunnian_gens_disk(2, 0).is_err());
    }
}
