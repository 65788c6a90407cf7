//! Pure braids as words in the generators `A_{i,j}`, with strand removal
//! (faces), strand insertion (cofaces) and conversion from σ-words.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde::{Serialize, Serializer};

use super::garside::permutation_word;
use super::{a_generator, a_indices, BraidWord, NormalForm};
use crate::error::{Error, Result};
use crate::syntax;

/// `A_{i,j}^{±1}` with `1 ≤ i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ALetter {
    pub i: usize,
    pub j: usize,
    pub inverse: bool,
}

impl ALetter {
    pub fn new(i: usize, j: usize, inverse: bool) -> Self {
        ALetter { i, j, inverse }
    }

    pub fn inverse(self) -> Self {
        ALetter {
            inverse: !self.inverse,
            ..self
        }
    }
}

/// A freely reduced word in the `A_{i,j}` on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PureBraidWord {
    n: usize,
    letters: Vec<ALetter>,
}

fn push(letters: &mut Vec<ALetter>, l: ALetter) {
    if letters.last() == Some(&l.inverse()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

impl PureBraidWord {
    pub fn identity(n: usize) -> Self {
        PureBraidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: impl IntoIterator<Item = ALetter>) -> Result<Self> {
        let mut out = Vec::new();
        for l in letters {
            if !(1 <= l.i && l.i < l.j && l.j <= n) {
                return Err(Error::invalid(
                    "A-generator",
                    format!("A[{},{}] needs 1 ≤ i < j ≤ {n}", l.i, l.j),
                ));
            }
            push(&mut out, l);
        }
        Ok(PureBraidWord { n, letters: out })
    }

    pub fn generator(i: usize, j: usize, n: usize) -> Result<Self> {
        PureBraidWord::new(n, [ALetter::new(i, j, false)])
    }

    /// Parses words such as `A[1,3] A[2,3]^-1` or `[A[1,3], A[2,3]]`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for occ in syntax::parse_occurrences(text)? {
            let (i, j) = a_indices(&occ.name).ok_or_else(|| Error::Parse {
                column: occ.column,
                message: format!("expected A[i,j], found {:?}", occ.name),
            })?;
            letters.push(ALetter::new(i, j, occ.inverse));
        }
        PureBraidWord::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[ALetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        PureBraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn mul(&self, other: &PureBraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push(&mut letters, l);
        }
        Ok(PureBraidWord { n: self.n, letters })
    }

    /// Expands every `A_{i,j}` into its σ-word.
    pub fn to_braid(&self) -> BraidWord {
        let mut letters = Vec::new();
        for l in &self.letters {
            let a = a_generator(l.i, l.j, self.n).expect("validated indices");
            if l.inverse {
                letters.extend_from_slice(a.inverse().letters());
            } else {
                letters.extend_from_slice(a.letters());
            }
        }
        BraidWord::from_letters_unchecked(self.n, letters)
    }

    /// `d_k`: generators involving strand `k` vanish, higher indices shift down.
    pub fn face(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.n {
            return Err(Error::StrandOutOfRange {
                index: k,
                strands: self.n,
            });
        }
        let letters = self
            .letters
            .iter()
            .filter(|l| l.i != k && l.j != k)
            .map(|l| ALetter::new(l.i - (l.i > k) as usize, l.j - (l.j > k) as usize, l.inverse));
        PureBraidWord::new(self.n - 1, letters)
    }

    /// `dⁱ`: insert a trivial strand at position `i` (`1 ≤ i ≤ n+1`).
    pub fn coface(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n + 1 {
            return Err(Error::StrandOutOfRange {
                index: i,
                strands: self.n + 1,
            });
        }
        let letters = self
            .letters
            .iter()
            .map(|l| ALetter::new(l.i + (l.i >= i) as usize, l.j + (l.j >= i) as usize, l.inverse));
        PureBraidWord::new(self.n + 1, letters)
    }

    /// Rewrites a pure σ-word in the generators `A_{i,j}`, using the positive
    /// permutation braids as a transversal of `P_n` in `B_n`. The result is
    /// checked against `b` with the Garside normal form.
    pub fn from_braid(b: &BraidWord) -> Result<Self> {
        let n = b.strands();
        if !b.is_pure() {
            return Err(Error::NotPure);
        }
        let table = conjugation_table(n)?;
        let mut out = PureBraidWord::identity(n);
        let mut pi: Vec<u8> = (0..n as u8).collect();
        for l in b.letters() {
            let j = l.index - 1;
            let mut inv = vec![0u8; n];
            for (k, &v) in pi.iter().enumerate() {
                inv[v as usize] = k as u8;
            }
            let crossed = inv[j] > inv[j + 1];
            let mut next = pi.clone();
            for v in next.iter_mut() {
                if *v as usize == j {
                    *v = (j + 1) as u8;
                } else if *v as usize == j + 1 {
                    *v = j as u8;
                }
            }
            let factor = match (crossed, l.inverse) {
                (false, false) | (true, true) => None,
                (false, true) => Some((table.conjugate_square(&pi, j), true)),
                (true, false) => Some((table.conjugate_square(&next, j), false)),
            };
            if let Some((f, invert)) = factor {
                let f = if invert { f.inverse() } else { f };
                out = out.mul(&f)?;
            }
            pi = next;
        }
        if NormalForm::of(&out.to_braid()) != NormalForm::of(b) {
            return Err(Error::Verification(format!("combing of {b} does not reproduce it")));
        }
        Ok(out)
    }
}

/// `σ_k A_{i,j} σ_k⁻¹` as A-words, per strand count.
struct ConjTable {
    n: usize,
    entries: HashMap<(usize, usize, usize), PureBraidWord>,
}

static TABLES: Lazy<Mutex<HashMap<usize, Arc<ConjTable>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn conjugation_table(n: usize) -> Result<Arc<ConjTable>> {
    if let Some(t) = TABLES.lock().expect("table cache").get(&n) {
        return Ok(t.clone());
    }
    let t = Arc::new(ConjTable::build(n)?);
    TABLES.lock().expect("table cache").insert(n, t.clone());
    Ok(t)
}

impl ConjTable {
    fn build(n: usize) -> Result<Self> {
        let gens: Vec<ALetter> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .flat_map(|(i, j)| [ALetter::new(i, j, false), ALetter::new(i, j, true)])
            .collect();
        // conjugators: reduced A-words of length ≤ 2
        let mut conjugators = vec![PureBraidWord::identity(n)];
        for &g in &gens {
            conjugators.push(PureBraidWord::new(n, [g])?);
        }
        for &g in &gens {
            for &h in &gens {
                if h != g.inverse() {
                    conjugators.push(PureBraidWord::new(n, [g, h])?);
                }
            }
        }
        let mut entries = HashMap::new();
        for k in 1..n {
            let s = BraidWord::new(n, vec![super::BraidLetter::new(k, false)])?;
            for &a in gens.iter().filter(|l| !l.inverse) {
                let target = s
                    .mul(&a_generator(a.i, a.j, n)?)?
                    .mul(&s.inverse())?
                    .normal_form();
                // the strand pair is moved by the transposition (k k+1)
                let swap = |x: usize| if x == k { k + 1 } else if x == k + 1 { k } else { x };
                let (p, q) = (swap(a.i).min(swap(a.j)), swap(a.i).max(swap(a.j)));
                let mut found = None;
                'search: for c in &conjugators {
                    let cand = c.mul(&PureBraidWord::generator(p, q, n)?)?.mul(&c.inverse())?;
                    if cand.to_braid().normal_form() == target {
                        found = Some(cand);
                        break 'search;
                    }
                }
                let w = found.ok_or_else(|| {
                    Error::Verification(format!("no short A-word for s{k} A[{},{}] s{k}^-1", a.i, a.j))
                })?;
                entries.insert((k, a.i, a.j), w);
            }
        }
        Ok(ConjTable { n, entries })
    }

    fn conjugate(&self, k: usize, w: &PureBraidWord) -> PureBraidWord {
        let mut out = PureBraidWord::identity(self.n);
        for l in w.letters() {
            let e = &self.entries[&(k, l.i, l.j)];
            let e = if l.inverse { e.inverse() } else { e.clone() };
            out = out.mul(&e).expect("same strand count");
        }
        out
    }

    /// `t_π σ_j² t_π⁻¹` for the positive permutation braid `t_π`.
    fn conjugate_square(&self, pi: &[u8], j: usize) -> PureBraidWord {
        let mut w = PureBraidWord::generator(j + 1, j + 2, self.n).expect("in range");
        for l in permutation_word(pi).iter().rev() {
            w = self.conjugate(l.index, &w);
        }
        w
    }
}

impl fmt::Display for PureBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<(String, bool)> = self
            .letters
            .iter()
            .map(|l| (format!("A[{},{}]", l.i, l.j), l.inverse))
            .collect();
        f.write_str(&syntax::format_letters(names.iter().map(|(s, i)| (s.as_str(), *i))))
    }
}

impl Serialize for PureBraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
