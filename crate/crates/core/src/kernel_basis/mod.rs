//! Free bases for intersections of kernels of projection homomorphisms,
//! built from iterated commutators `μ(x, y)`, together with generating sets
//! for commutators of normally generated subgroups.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free_words::{commutator, enumerate_reduced_words, Alphabet, FreeHom, Word};

/// How a basis word was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivation {
    /// A word taken as given (a generator of `S`, or an input to [`a_set`]).
    Atom(Word),
    /// `μ(x, z₁^ε₁ ⋯ z_m^ε_m)` with each `zᵢ` itself derived.
    Mu {
        x: Box<Derivation>,
        y: Vec<(Derivation, i32)>,
    },
}

impl Derivation {
    /// Re-expands the derivation into a reduced word.
    pub fn expand(&self) -> Word {
        match self {
            Derivation::Atom(w) => w.clone(),
            Derivation::Mu { x, y } => {
                let mut acc = x.expand();
                for (z, e) in y {
                    let zw = z.expand().pow(*e as i64);
                    acc = commutator(&acc, &zw).expect("derivation words share an alphabet");
                }
                acc
            }
        }
    }

    /// Generators of `S` occurring in the leaves of the derivation tree.
    pub fn leaves(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut BTreeSet<String>) {
        match self {
            Derivation::Atom(w) => {
                for g in w.support() {
                    out.insert(w.alphabet().symbol(g).to_string());
                }
            }
            Derivation::Mu { x, y } => {
                x.collect_leaves(out);
                for (z, _) in y {
                    z.collect_leaves(out);
                }
            }
        }
    }

    /// Compact textual form, e.g. `mu(x1; x2 x2^-1)`.
    pub fn describe(&self) -> String {
        match self {
            Derivation::Atom(w) => w.to_string(),
            Derivation::Mu { x, y } => {
                let ys: Vec<String> = y
                    .iter()
                    .map(|(z, e)| {
                        let inner = z.describe();
                        let inner = if matches!(z, Derivation::Mu { .. }) || inner.contains(' ') {
                            format!("({inner})")
                        } else {
                            inner
                        };
                        if *e == 1 {
                            inner
                        } else {
                            format!("{inner}^{e}")
                        }
                    })
                    .collect();
                format!("mu({}; {})", x.describe(), ys.join(" "))
            }
        }
    }
}

/// A basis word with the derivation that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub word: Word,
    pub derivation: Derivation,
}

impl BasisElement {
    pub fn atom(word: Word) -> Self {
        BasisElement {
            derivation: Derivation::Atom(word.clone()),
            word,
        }
    }

    /// True when re-expanding the derivation gives back `word`.
    pub fn verify(&self) -> bool {
        self.derivation.expand() == self.word
    }
}

/// `μ(x, ε) = x`, `μ(x, y′z^ε) = [μ(x, y′), z^ε]`.
///
/// `y` may be over any alphabet whose symbols all belong to `x`'s alphabet.
pub fn mu(x: &Word, y: &Word) -> Result<Word> {
    let s = x.alphabet();
    let mut acc = x.clone();
    for l in y.letters() {
        let name = y.alphabet().symbol(l.generator());
        let z = Word::from_letters(s, [s.letter(name, l.is_inverse())?])?;
        acc = commutator(&acc, &z)?;
    }
    Ok(acc)
}

/// `μ` where the letters of `y` stand for the words `zs`.
fn mu_over(x: &BasisElement, y: &Word, zs: &[BasisElement]) -> BasisElement {
    let mut acc = x.word.clone();
    let mut factors = Vec::with_capacity(y.len());
    for l in y.letters() {
        let z = &zs[l.generator()];
        let zw = if l.is_inverse() { z.word.inverse() } else { z.word.clone() };
        acc = commutator(&acc, &zw).expect("shared alphabet");
        factors.push((z.derivation.clone(), l.sign() as i32));
    }
    let derivation = if factors.is_empty() {
        x.derivation.clone()
    } else {
        Derivation::Mu {
            x: Box::new(x.derivation.clone()),
            y: factors,
        }
    };
    BasisElement {
        word: acc,
        derivation,
    }
}

fn push_unique(out: &mut Vec<BasisElement>, seen: &mut HashSet<Word>, e: BasisElement) {
    if !e.word.is_identity() && seen.insert(e.word.clone()) {
        out.push(e);
    }
}

/// `𝒜(V)_W = {μ(x, y) : x ∈ V, y ∈ W}` in the order `x` then `y`,
/// deduplicated by reduced word (first derivation kept). Trivial words are
/// dropped since they cannot belong to a basis.
pub fn a_set(v: &[Word], w: &[Word]) -> Result<Vec<BasisElement>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for x in v {
        for y in w {
            let word = mu(x, y)?;
            let derivation = if y.is_empty() {
                Derivation::Atom(x.clone())
            } else {
                let s = x.alphabet();
                Derivation::Mu {
                    x: Box::new(Derivation::Atom(x.clone())),
                    y: y
                        .letters()
                        .iter()
                        .map(|l| {
                            let g = Word::generator(s, y.alphabet().symbol(l.generator()))?;
                            Ok((Derivation::Atom(g), l.sign() as i32))
                        })
                        .collect::<Result<_>>()?,
                }
            };
            push_unique(&mut out, &mut seen, BasisElement { word, derivation });
        }
    }
    Ok(out)
}

/// An alphabet `S` with subsets `T₁, …, Tₙ` and the projections
/// `d_i| : F(S) → F(T_i)` killing `S ∖ T_i`.
#[derive(Clone, Debug)]
pub struct ProjectionFamily {
    alphabet: Alphabet,
    subsets: Vec<Vec<String>>,
    projections: Vec<FreeHom>,
}

impl ProjectionFamily {
    pub fn new<S: AsRef<str>>(alphabet: &Alphabet, subsets: &[Vec<S>]) -> Result<Self> {
        let mut subs = Vec::new();
        let mut projections = Vec::new();
        for t in subsets {
            let names: Vec<&str> = t.iter().map(|s| s.as_ref()).collect();
            let target = alphabet.restrict(&names)?;
            if target.len() == alphabet.len() {
                return Err(Error::invalid("subset", "each T_i must be a proper subset of S"));
            }
            projections.push(FreeHom::projection(alphabet, &names)?);
            subs.push(target.symbols().to_vec());
        }
        Ok(ProjectionFamily {
            alphabet: alphabet.clone(),
            subsets: subs,
            projections,
        })
    }

    /// `S = {x₁,…,xₙ}` with `T_i = S ∖ {x_i}`.
    pub fn complements(alphabet: &Alphabet) -> Result<Self> {
        let subsets: Vec<Vec<String>> = alphabet
            .symbols()
            .iter()
            .map(|x| alphabet.symbols().iter().filter(|s| *s != x).cloned().collect())
            .collect();
        ProjectionFamily::new(alphabet, &subsets)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subset(&self, i: usize) -> &[String] {
        &self.subsets[i]
    }

    pub fn projection(&self, i: usize) -> &FreeHom {
        &self.projections[i]
    }
}

/// True iff every chosen projection sends `w` to the identity.
pub fn in_projection_kernels(w: &Word, fam: &ProjectionFamily, indices: &[usize]) -> Result<bool> {
    for &i in indices {
        if i >= fam.len() {
            return Err(Error::invalid("projection index", format!("{i} ≥ {}", fam.len())));
        }
        if !fam.projections[i].apply(w)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Truncation of `𝒜(T₁, …, T_k)`: y-words from each `F(T_j^{(j)})` have
/// length at most `y_bound`.
///
/// `T_j^{(j)}` is read off the stored derivations: the previous elements whose
/// derivation leaves all lie in `T_j`.
pub fn basis_chain(fam: &ProjectionFamily, k: usize, y_bound: usize) -> Result<Vec<BasisElement>> {
    if k == 0 || k > fam.len() {
        return Err(Error::invalid("k", format!("must be in 1..={}", fam.len())));
    }
    let s = &fam.alphabet;
    let mut current: Vec<BasisElement> = s
        .symbols()
        .iter()
        .map(|x| Word::generator(s, x).map(BasisElement::atom))
        .collect::<Result<_>>()?;
    for j in 0..k {
        let t: BTreeSet<&str> = fam.subsets[j].iter().map(String::as_str).collect();
        let (inside, outside): (Vec<BasisElement>, Vec<BasisElement>) = current
            .into_iter()
            .partition(|e| e.derivation.leaves().iter().all(|l| t.contains(l.as_str())));
        let z_alphabet = Alphabet::new((1..=inside.len()).map(|i| format!("z{i}")))?;
        let ys: Vec<Word> = enumerate_reduced_words(&z_alphabet, y_bound).collect();
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for x in &outside {
            for y in &ys {
                push_unique(&mut next, &mut seen, mu_over(x, y, &inside));
            }
        }
        current = next;
    }
    Ok(current)
}

/// `{[a_i, b_j]}`, which normally generates `[R₁, R₂]` when the `a_i`
/// normally generate `R₁` and the `b_j` normally generate `R₂`.
pub fn commutator_normal_gens(a: &[Word], b: &[Word]) -> Result<Vec<Word>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(commutator(x, y)?);
        }
    }
    Ok(out)
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Bounded generating set for the symmetric commutator subgroup of the
/// normal closures of `families`: for every permutation `σ` (lexicographic)
/// and every choice of conjugators `c₁, …, cₙ` from `pool`, the left-normed
/// commutator `[[c₁g_{σ1}c₁⁻¹, c₂g_{σ2}c₂⁻¹], …, cₙg_{σn}cₙ⁻¹]`.
/// Results are reduced and deduplicated in order of first appearance;
/// trivial words are omitted.
pub fn symmetric_commutator_gens(families: &[Word], pool: &[Word]) -> Result<Vec<Word>> {
    let n = families.len();
    if n == 0 || pool.is_empty() {
        return Ok(Vec::new());
    }
    let conj: Vec<Vec<Word>> = families
        .iter()
        .map(|g| pool.iter().map(|c| g.conjugate_by(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut choice = vec![0usize; n];
        loop {
            let mut acc = conj[perm[0]][choice[0]].clone();
            for i in 1..n {
                acc = commutator(&acc, &conj[perm[i]][choice[i]])?;
            }
            if !acc.is_identity() && seen.insert(acc.clone()) {
                out.push(acc);
            }
            // odometer, last position fastest
            let mut p = n;
            loop {
                if p == 0 {
                    break;
                }
                p -= 1;
                choice[p] += 1;
                if choice[p] < pool.len() {
                    break;
                }
                choice[p] = 0;
                if p == 0 {
                    p = usize::MAX;
                    break;
                }
            }
            if p == usize::MAX {
                break;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}
