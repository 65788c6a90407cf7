use super::{Alphabet, Letter, Word};

/// Shortlex stream of all reduced words of length at most `max_len`.
pub struct ReducedWords {
    alphabet: Alphabet,
    max_len: usize,
    codes: Vec<usize>,
    done: bool,
}

/// Emits every reduced word over `alphabet` of length `≤ max_len` exactly once,
/// in shortlex order (letters ordered `x, x⁻¹, y, y⁻¹, …`).
pub fn enumerate_reduced_words(alphabet: &Alphabet, max_len: usize) -> ReducedWords {
    ReducedWords {
        alphabet: alphabet.clone(),
        max_len,
        codes: Vec::new(),
        done: false,
    }
}

/// Number of reduced words of length exactly `len` over `rank` generators.
pub fn reduced_word_count(rank: usize, len: usize) -> u128 {
    if len == 0 {
        return 1;
    }
    if rank == 0 {
        return 0;
    }
    let r = rank as u128;
    2 * r * (2 * r - 1).pow(len as u32 - 1)
}

fn smallest_after(prev: Option<usize>) -> usize {
    match prev {
        Some(p) if p ^ 1 == 0 => 1,
        _ => 0,
    }
}

impl ReducedWords {
    fn advance(&mut self) {
        let k = 2 * self.alphabet.len();
        let len = self.codes.len();
        for p in (0..len).rev() {
            let prev = if p == 0 { None } else { Some(self.codes[p - 1]) };
            let mut v = self.codes[p] + 1;
            if prev.map(|q| q ^ 1) == Some(v) {
                v += 1;
            }
            if v < k {
                self.codes[p] = v;
                for i in p + 1..len {
                    self.codes[i] = smallest_after(Some(self.codes[i - 1]));
                }
                return;
            }
        }
        if len >= self.max_len || k == 0 {
            self.done = true;
        } else {
            self.codes = vec![0; len + 1];
        }
    }
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let word = Word::from_letters(
            &self.alphabet,
            self.codes.iter().map(|&c| Letter::from_code(c)),
        )
        .expect("codes are in range");
        debug_assert_eq!(word.len(), self.codes.len());
        self.advance();
        Some(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn rank_one_length_two() {
        let s = Alphabet::new(["x"]).unwrap();
        let words: Vec<String> = enumerate_reduced_words(&s, 2).map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["1", "x", "x^-1", "x^2", "x^-2"]);
    }

    #[test]
    fn rank_two_length_one() {
        let s = Alphabet::new(["x", "y"]).unwrap();
        assert_eq!(enumerate_reduced_words(&s, 1).count(), 5);
    }

    #[test]
    fn counts_match_formula_and_are_distinct() {
        for rank in 1..=2 {
            let names: Vec<String> = (0..rank).map(|i| format!("g{i}")).collect();
            let s = Alphabet::new(names).unwrap();
            let words: Vec<Word> = enumerate_reduced_words(&s, 6).collect();
            let distinct: HashSet<&Word> = words.iter().collect();
            assert_eq!(distinct.len(), words.len());
            for len in 0..=6 {
                let n = words.iter().filter(|w| w.len() == len).count() as u128;
                assert_eq!(n, reduced_word_count(rank, len), "rank {rank} len {len}");
            }
            // shortlex order
            for pair in words.windows(2) {
                assert_eq!(pair[0].shortlex_cmp(&pair[1]), std::cmp::Ordering::Less);
            }
        }
    }

    #[test]
    fn zero_bound_and_empty_alphabet() {
        let s = Alphabet::new(["x"]).unwrap();
        assert_eq!(enumerate_reduced_words(&s, 0).count(), 1);
        let e = Alphabet::new(Vec::<String>::new()).unwrap();
        assert_eq!(enumerate_reduced_words(&e, 3).count(), 1);
    }
}
