//! Artin braids on the disk: words in `σ₁, …, σ_{n-1}`, the permutation
//! quotient, strand removal, the word problem via Garside normal form,
//! pure braids in the generators `A_{i,j}`, and the James–Hopf operation.

mod garside;
mod gens;
mod hopf;
mod pure;

pub use garside::NormalForm;
pub use gens::{brunnian_gens_disk, pure_conjugators};
pub use hopf::{james_hopf, HopfOrder};
pub use pure::{ALetter, PureBraidWord};

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::free_words::{Alphabet, Word};
use crate::syntax;

/// `σ_index^{±1}` with `index` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn new(index: usize, inverse: bool) -> Self {
        BraidLetter { index, inverse }
    }

    pub fn inverse(self) -> Self {
        BraidLetter {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

/// An unreduced word in the Artin generators on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

/// A permutation of strand positions: `images()[k]` is the end position of
/// the strand starting at `k` (0-based), the right action `k·β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `i·β` with 1-based positions.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&k| other.0[k]).collect())
    }

    /// Cycle notation with 1-based points, e.g. `(1 3)`; `()` for the identity.
    pub fn cycles(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cyc.push((k + 1).to_string());
                k = self.0[k];
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

fn strand_name(i: usize) -> String {
    format!("s{i}")
}

/// Parses `s<k>` into `k`.
fn sigma_index(name: &str) -> Option<usize> {
    name.strip_prefix('s').and_then(|d| d.parse().ok())
}

/// Parses `A[i,j]` into `(i, j)`.
fn a_indices(name: &str) -> Option<(usize, usize)> {
    let inner = name.strip_prefix("A[")?.strip_suffix(']')?;
    let (i, j) = inner.split_once(',')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index >= n {
                return Err(Error::StrandOutOfRange {
                    index: l.index,
                    strands: n,
                });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Builds from `(i, ±1)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, i32)]) -> Result<Self> {
        let mut letters = Vec::with_capacity(pairs.len());
        for &(i, s) in pairs {
            if s != 1 && s != -1 {
                return Err(Error::invalid("sign", format!("{s} is not ±1")));
            }
            letters.push(BraidLetter::new(i, s < 0));
        }
        BraidWord::new(n, letters)
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<BraidLetter>) -> Self {
        BraidWord { n, letters }
    }

    /// Parses `s1 s2^-1 (s1 s2)^3`; `A[i,j]` atoms expand to their σ-words.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for occ in syntax::parse_occurrences(text)? {
            let bad = |message: String| Error::Parse {
                column: occ.column,
                message,
            };
            if let Some(i) = sigma_index(&occ.name) {
                if i == 0 || i >= n {
                    return Err(bad(format!("{} needs 1 ≤ k ≤ {}", occ.name, n.saturating_sub(1))));
                }
                letters.push(BraidLetter::new(i, occ.inverse));
            } else if let Some((i, j)) = a_indices(&occ.name) {
                let a = a_generator(i, j, n).map_err(|e| bad(e.to_string()))?;
                if occ.inverse {
                    letters.extend(a.inverse().letters);
                } else {
                    letters.extend(a.letters);
                }
            } else {
                return Err(bad(format!("unknown braid generator {:?}", occ.name)));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// Sum of the exponents; invariant of the braid.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| if l.inverse { -1 } else { 1 }).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (0..self.n).collect();
        // pos[k] = current position of the strand that started at k
        let mut at: Vec<usize> = (0..self.n).collect();
        // at[p] = strand currently at position p
        for l in &self.letters {
            let j = l.index - 1;
            let (x, y) = (at[j], at[j + 1]);
            at.swap(j, j + 1);
            pos[x] = j + 1;
            pos[y] = j;
        }
        Permutation(pos)
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// `d_i`: forget the strand starting at position `i` (1-based).
    pub fn remove_strand(&self, i: usize) -> Result<BraidWord> {
        if i == 0 || i > self.n {
            return Err(Error::StrandOutOfRange {
                index: i,
                strands: self.n,
            });
        }
        let mut p = i;
        let mut letters = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let j = l.index;
            if p == j {
                p = j + 1;
            } else if p == j + 1 {
                p = j;
            } else if p < j {
                letters.push(BraidLetter::new(j - 1, l.inverse));
            } else {
                letters.push(*l);
            }
        }
        Ok(BraidWord {
            n: self.n - 1,
            letters,
        })
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of(self)
    }

    /// The word as a free-group word over `s1, …, s_{n-1}`.
    pub fn to_free_word(&self, alphabet: &Alphabet) -> Result<Word> {
        let letters = self
            .letters
            .iter()
            .map(|l| alphabet.letter(&strand_name(l.index), l.inverse))
            .collect::<Result<Vec<_>>>()?;
        Word::from_letters(alphabet, letters)
    }

    /// Reads a free word over `s1, …, s_{n-1}` as a braid word.
    pub fn from_free_word(n: usize, w: &Word) -> Result<BraidWord> {
        let letters = w
            .letters()
            .iter()
            .map(|l| {
                let name = w.alphabet().symbol(l.generator());
                sigma_index(name)
                    .map(|i| BraidLetter::new(i, l.is_inverse()))
                    .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }
}

/// Alphabet `s1, …, s_{n-1}`.
pub fn sigma_alphabet(n: usize) -> Alphabet {
    Alphabet::new((1..n).map(strand_name)).expect("distinct names")
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<(String, bool)> = self
            .letters
            .iter()
            .map(|l| (strand_name(l.index), l.inverse))
            .collect();
        f.write_str(&syntax::format_letters(names.iter().map(|(s, i)| (s.as_str(), *i))))
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Equality in `B_n` by comparing normal forms.
pub fn equal(b1: &BraidWord, b2: &BraidWord) -> Result<bool> {
    if b1.n != b2.n {
        return Err(Error::StrandMismatch(b1.n, b2.n));
    }
    Ok(b1.normal_form() == b2.normal_form())
}

pub fn is_trivial(b: &BraidWord) -> bool {
    b.normal_form().is_identity()
}

/// `d_i(b)` is trivial for every strand `i`.
pub fn is_brunnian(b: &BraidWord) -> bool {
    (1..=b.n).all(|i| is_trivial(&b.remove_strand(i).expect("in range")))
}

/// `dⁱ(b)` for a pure braid: rewritten in the `A_{i,j}`, given a trivial
/// strand at position `i`, and expanded back into σ-letters.
pub fn insert_strand(b: &BraidWord, i: usize) -> Result<BraidWord> {
    Ok(PureBraidWord::from_braid(b)?.coface(i)?.to_braid())
}

/// `A_{i,j} = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹`.
pub fn a_generator(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::invalid(
            "A-generator",
            format!("A[{i},{j}] needs 1 ≤ i < j ≤ {n}"),
        ));
    }
    let mut letters = Vec::with_capacity(2 * (j - i) + 2);
    for k in (i + 1..j).rev() {
        letters.push(BraidLetter::new(k, false));
    }
    letters.push(BraidLetter::new(i, false));
    letters.push(BraidLetter::new(i, false));
    for k in i + 1..j {
        letters.push(BraidLetter::new(k, true));
    }
    Ok(BraidWord { n, letters })
}

/// `Δ_n = (σ₁ ⋯ σ_{n-1})(σ₁ ⋯ σ_{n-2}) ⋯ (σ₁σ₂)σ₁`.
pub fn half_twist(n: usize) -> Result<BraidWord> {
    if n == 0 {
        return Err(Error::invalid("strand count", "must be at least 1"));
    }
    let mut letters = Vec::new();
    for top in (1..n).rev() {
        for k in 1..=top {
            letters.push(BraidLetter::new(k, false));
        }
    }
    Ok(BraidWord { n, letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, t: &str) -> BraidWord {
        BraidWord::parse(n, t).unwrap()
    }

    #[test]
    fn permutations() {
        assert_eq!(bw(3, "s1").permutation().cycles(), "(1 2)");
        assert!(bw(3, "(s1^-1 s2)^3").permutation().is_identity());
        assert_eq!(bw(3, "s1 s2 s1").permutation().cycles(), "(1 3)");
        let p = bw(3, "s1 s2").permutation();
        assert_eq!(p.apply(1), 3);
        assert_eq!(bw(3, "s1").permutation().then(&bw(3, "s2").permutation()), p);
    }

    #[test]
    fn strand_removal() {
        assert!(bw(2, "s1").remove_strand(2).unwrap().is_empty());
        assert_eq!(bw(2, "s1").remove_strand(2).unwrap().strands(), 1);
        assert_eq!(bw(3, "s1").remove_strand(3).unwrap(), bw(2, "s1"));
        for (i, j) in [(1, 2), (1, 3), (2, 3), (2, 4)] {
            let a = a_generator(i, j, 4).unwrap();
            assert!(is_trivial(&a.remove_strand(i).unwrap()));
            assert!(is_trivial(&a.remove_strand(j).unwrap()));
        }
        assert!(bw(3, "s1").remove_strand(4).is_err());
        assert!(bw(3, "s1").remove_strand(0).is_err());
    }

    #[test]
    fn face_of_a_generator_shifts_indices() {
        for n in 3..=5 {
            for i in 1..n {
                for j in i + 1..=n {
                    let a = a_generator(i, j, n).unwrap();
                    for k in (1..=n).filter(|&k| k != i && k != j) {
                        let (ii, jj) = (i - (k < i) as usize, j - (k < j) as usize);
                        let expect = a_generator(ii, jj, n - 1).unwrap();
                        assert!(equal(&a.remove_strand(k).unwrap(), &expect).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn a_generator_words() {
        assert_eq!(a_generator(1, 2, 2).unwrap(), bw(2, "s1^2"));
        assert_eq!(a_generator(2, 3, 3).unwrap(), bw(3, "s2^2"));
        assert_eq!(a_generator(1, 3, 3).unwrap(), bw(3, "s2 s1^2 s2^-1"));
        assert!(a_generator(2, 2, 3).is_err());
        assert!(a_generator(1, 4, 3).is_err());
        assert_eq!(bw(3, "A[1,3]"), bw(3, "s2 s1^2 s2^-1"));
    }

    #[test]
    fn equality_examples() {
        assert!(equal(&bw(3, "s1 s2 s1"), &bw(3, "s2 s1 s2")).unwrap());
        assert!(equal(&bw(4, "s1 s3"), &bw(4, "s3 s1")).unwrap());
        assert!(equal(&bw(3, "s1 s1^-1"), &BraidWord::identity(3)).unwrap());
        assert!(!equal(&bw(3, "s1"), &bw(3, "s2")).unwrap());
        assert_eq!(equal(&bw(3, "s1"), &bw(4, "s1")), Err(Error::StrandMismatch(3, 4)));
    }

    #[test]
    fn brunnian_examples() {
        assert!(is_brunnian(&bw(3, "(s1^-1 s2)^3")));
        assert!(is_brunnian(&bw(2, "s1^2")));
        assert!(!is_brunnian(&bw(3, "s1^2")));
        assert!(!is_brunnian(&bw(3, "s1^-1 s2")));
        assert!(!is_brunnian(&bw(3, "(s1^-1 s2)^2")));
    }

    #[test]
    fn half_twists() {
        assert_eq!(half_twist(2).unwrap(), bw(2, "s1"));
        assert_eq!(half_twist(3).unwrap(), bw(3, "s1 s2 s1"));
        let d4 = half_twist(4).unwrap();
        for i in 1..=4 {
            assert!(equal(&d4.remove_strand(i).unwrap(), &half_twist(3).unwrap()).unwrap());
        }
        assert!(half_twist(1).unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(BraidWord::parse(3, "s3").is_err());
        assert!(BraidWord::parse(3, "t1").is_err());
        assert!(BraidWord::parse(3, "A[2,1]").is_err());
        assert_eq!(bw(4, "s1 s2^-1 s1^3").to_string(), "s1 s2^-1 s1^3");
    }
}
