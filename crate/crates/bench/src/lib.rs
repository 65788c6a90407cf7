//! Fixed inputs shared by the benchmarks.

use brunnian_core::disk_braids::BraidWord;
use brunnian_core::{Alphabet, Word};

/// A deterministic σ-word on `n` strands of length `len`.
pub fn braid_word(n: usize, len: usize) -> BraidWord {
    let mut text = Vec::with_capacity(len);
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..len {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let i = 1 + (state % (n as u64 - 1)) as usize;
        let exp = if state & 0x100 == 0 { "" } else { "^-1" };
        text.push(format!("s{i}{exp}"));
    }
    BraidWord::parse(n, &text.join(" ")).expect("generated word parses")
}

/// The commutator family `[x1^a, x2^b]` on two letters, used as fold input.
pub fn commutator_gens(count: usize) -> (Alphabet, Vec<Word>) {
    let alphabet = Alphabet::new(["x1", "x2"]).expect("alphabet");
    let gens = (1..=count)
        .map(|k| {
            let text = format!("[x1^{}, x2^{}]", 1 + k % 3, 1 + k / 3);
            Word::parse(&alphabet, &text).expect("word parses")
        })
        .collect();
    (alphabet, gens)
}
