//! Pure braids on three strands of the projective plane, computed in the
//! semidirect normal form `P₃(ℝP²) = U₃ ⋊ ⟨a, b⟩` with `U₃` free on `w, A23`
//! and `⟨a, b⟩ ≅ P₂(ℝP²) ≅ Q₈`.

mod brun2;
mod q8;

use std::fmt;

use once_cell::sync::Lazy;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::free_words::{Alphabet, FreeHom, Word};
use crate::syntax;

pub use brun2::{b2_removal_images, brun2_enumerate, Brun2Report};
pub use q8::Q8Elt;

/// Generators accepted in mixed words. `A13` is rewritten as `w^2 A23^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen3 {
    Rho,
    U,
    W,
    A23,
    A13,
    A,
    B,
}

impl Gen3 {
    pub fn name(self) -> &'static str {
        match self {
            Gen3::Rho => "rho",
            Gen3::U => "u",
            Gen3::W => "w",
            Gen3::A23 => "A23",
            Gen3::A13 => "A13",
            Gen3::A => "a",
            Gen3::B => "b",
        }
    }

    fn from_name(name: &str) -> Option<Gen3> {
        Some(match name {
            "rho" => Gen3::Rho,
            "u" => Gen3::U,
            "w" => Gen3::W,
            "A23" | "A[2,3]" => Gen3::A23,
            "A13" | "A[1,3]" => Gen3::A13,
            "a" => Gen3::A,
            "b" => Gen3::B,
            _ => return None,
        })
    }

    /// Spelling in `w, A23, a, b`.
    fn translation(self) -> &'static [(Gen3, bool)] {
        match self {
            Gen3::Rho => &[(Gen3::A, false), (Gen3::W, true)],
            Gen3::U => &[(Gen3::W, true), (Gen3::B, false)],
            Gen3::A13 => &[(Gen3::W, false), (Gen3::W, false), (Gen3::A23, true)],
            Gen3::W => &[(Gen3::W, false)],
            Gen3::A23 => &[(Gen3::A23, false)],
            Gen3::A => &[(Gen3::A, false)],
            Gen3::B => &[(Gen3::B, false)],
        }
    }
}

/// A word over `rho, u, w, A23, A13, a, b`, kept as written.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenWord3 {
    letters: Vec<(Gen3, bool)>,
}

impl GenWord3 {
    pub fn identity() -> Self {
        GenWord3 { letters: Vec::new() }
    }

    pub fn new(letters: Vec<(Gen3, bool)>) -> Self {
        GenWord3 { letters }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for occ in syntax::parse_occurrences(text)? {
            let g = Gen3::from_name(&occ.name).ok_or_else(|| Error::Parse {
                column: occ.column,
                message: format!("unknown generator {:?} (expected rho, u, w, A23, A13, a, b)", occ.name),
            })?;
            letters.push((g, occ.inverse));
        }
        Ok(GenWord3 { letters })
    }

    /// Lifts a word over `{w, A23}`.
    pub fn from_upart(w: &Word) -> Result<Self> {
        let w = w.over(u_alphabet())?;
        let letters = w
            .letters()
            .iter()
            .map(|l| (if l.generator() == 0 { Gen3::W } else { Gen3::A23 }, l.is_inverse()))
            .collect();
        Ok(GenWord3 { letters })
    }

    pub fn letters(&self) -> &[(Gen3, bool)] {
        &self.letters
    }

    pub fn mul(&self, other: &GenWord3) -> GenWord3 {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GenWord3 { letters }
    }

    pub fn inverse(&self) -> GenWord3 {
        GenWord3 {
            letters: self.letters.iter().rev().map(|&(g, i)| (g, !i)).collect(),
        }
    }

    /// The word spelled in `w, A23, a, b` only.
    pub fn translated(&self) -> Vec<(Gen3, bool)> {
        let mut out = Vec::new();
        for &(g, inv) in &self.letters {
            let t = g.translation();
            if inv {
                out.extend(t.iter().rev().map(|&(h, i)| (h, !i)));
            } else {
                out.extend_from_slice(t);
            }
        }
        out
    }
}

impl fmt::Display for GenWord3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&syntax::format_letters(self.letters.iter().map(|&(g, i)| (g.name(), i))))
    }
}

impl Serialize for GenWord3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

static U_ALPHABET: Lazy<Alphabet> = Lazy::new(|| Alphabet::new(["w", "A23"]).expect("distinct symbols"));

/// The free generators `w, A23` of `U₃(ℝP²)`.
pub fn u_alphabet() -> &'static Alphabet {
    &U_ALPHABET
}

struct Action {
    /// `x ↦ a x a⁻¹`
    a: FreeHom,
    /// `x ↦ b x b⁻¹`
    b: FreeHom,
    a_inv: FreeHom,
    b_inv: FreeHom,
}

fn hom(images: [&str; 2]) -> FreeHom {
    let u = u_alphabet();
    let words = images
        .iter()
        .map(|t| Word::parse(u, t).expect("fixed word"))
        .collect();
    FreeHom::from_images(u, u, words).expect("two images")
}

static ACTION: Lazy<Action> = Lazy::new(|| Action {
    a: hom(["w^-1 A23", "w^-1 A23 w"]),
    b: hom(["A23^-1 w", "A23^-1"]),
    a_inv: hom(["w^-1 A23", "w^-1 A23 w"]),
    b_inv: hom(["A23^-1 w", "A23^-1"]),
});

/// Conjugation `x ↦ g x g⁻¹` of `U₃` by a single letter `a^{±1}` or `b^{±1}`.
pub fn conjugation(g: Gen3, inverse: bool) -> Result<&'static FreeHom> {
    let act = &*ACTION;
    match (g, inverse) {
        (Gen3::A, false) => Ok(&act.a),
        (Gen3::A, true) => Ok(&act.a_inv),
        (Gen3::B, false) => Ok(&act.b),
        (Gen3::B, true) => Ok(&act.b_inv),
        _ => Err(Error::invalid("conjugating letter", format!("{} is not a or b", g.name()))),
    }
}

/// Applies conjugation by `q = a^s b^t`.
fn act(q: Q8Elt, w: &Word) -> Word {
    let act = &*ACTION;
    let mut w = w.clone();
    for _ in 0..q.t() {
        w = act.b.apply(&w).expect("U alphabet");
    }
    for _ in 0..q.s() {
        w = act.a.apply(&w).expect("U alphabet");
    }
    w
}

/// `upart · qpart` with `upart ∈ U₃` and `qpart ∈ ⟨a, b⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rp2Element {
    #[serde(serialize_with = "as_string")]
    pub upart: Word,
    #[serde(serialize_with = "as_string")]
    pub qpart: Q8Elt,
}

fn as_string<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl Rp2Element {
    pub fn identity() -> Self {
        Rp2Element {
            upart: Word::identity(u_alphabet()),
            qpart: Q8Elt::identity(),
        }
    }

    /// `(g₁, s₁)(g₂, s₂) = (g₁ · s₁g₂s₁⁻¹, s₁s₂)`.
    pub fn mul(&self, other: &Rp2Element) -> Rp2Element {
        Rp2Element {
            upart: self.upart.mul_unchecked(&act(self.qpart, &other.upart)),
            qpart: self.qpart.mul(other.qpart),
        }
    }

    pub fn inverse(&self) -> Rp2Element {
        let q = self.qpart.inverse();
        Rp2Element {
            upart: act(q, &self.upart.inverse()),
            qpart: q,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.upart.is_identity() && self.qpart.is_identity()
    }

    /// Spells the element as `upart` followed by `a^s b^t`.
    pub fn to_word(&self) -> GenWord3 {
        let mut letters: Vec<(Gen3, bool)> = GenWord3::from_upart(&self.upart).expect("U word").letters;
        letters.extend(std::iter::repeat_n((Gen3::A, false), self.qpart.s() as usize));
        letters.extend(std::iter::repeat_n((Gen3::B, false), self.qpart.t() as usize));
        GenWord3 { letters }
    }
}

impl fmt::Display for Rp2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.upart, self.qpart)
    }
}

/// Pushes every `a, b` letter to the right through `w, A23` letters.
pub fn normal_form(g: &GenWord3) -> Rp2Element {
    let u = u_alphabet();
    let mut upart = Word::identity(u);
    let mut qpart = Q8Elt::identity();
    for (h, inv) in g.translated() {
        match h {
            Gen3::W | Gen3::A23 => {
                let x = Word::from_letters(u, [u.letter(h.name(), inv).expect("U letter")]).expect("U letter");
                upart = upart.mul_unchecked(&act(qpart, &x));
            }
            Gen3::A => qpart = qpart.mul(if inv { Q8Elt::a().inverse() } else { Q8Elt::a() }),
            Gen3::B => qpart = qpart.mul(if inv { Q8Elt::b().inverse() } else { Q8Elt::b() }),
            _ => unreachable!("translated words use w, A23, a, b"),
        }
    }
    Rp2Element { upart, qpart }
}

pub fn equal3(g1: &GenWord3, g2: &GenWord3) -> bool {
    normal_form(g1) == normal_form(g2)
}

/// `d_i : P₃(ℝP²) → P₂(ℝP²)` on a generator, as a word in `rho, u`.
fn d_image(i: usize, g: Gen3) -> &'static str {
    match (i, g) {
        (1, Gen3::A) => "u",
        (1, Gen3::B) => "u rho",
        // A12 = rho^2
        (1, Gen3::A23) => "rho^2",
        (1, Gen3::W) => "u",
        (2, Gen3::A) => "rho u",
        (2, Gen3::B) => "u",
        (2, Gen3::A23) => "1",
        (2, Gen3::W) => "u",
        (3, Gen3::A) => "rho",
        (3, Gen3::B) => "u",
        (3, Gen3::A23) => "1",
        (3, Gen3::W) => "1",
        _ => unreachable!("translated generator"),
    }
}

static D_IMAGES: Lazy<[[Q8Elt; 4]; 3]> = Lazy::new(|| {
    let gens = [Gen3::A, Gen3::B, Gen3::A23, Gen3::W];
    let mut out = [[Q8Elt::identity(); 4]; 3];
    for i in 1..=3 {
        for (k, &g) in gens.iter().enumerate() {
            out[i - 1][k] = Q8Elt::from_p2_word(d_image(i, g)).expect("fixed P2 word");
        }
    }
    out
});

/// Image of `g` under the strand-removal map `d_i`, `i ∈ {1, 2, 3}`,
/// computed letter by letter on the spelled word.
pub fn d_map(g: &GenWord3, i: usize) -> Result<Q8Elt> {
    if !(1..=3).contains(&i) {
        return Err(Error::StrandOutOfRange { index: i, strands: 3 });
    }
    let images = &D_IMAGES[i - 1];
    let mut out = Q8Elt::identity();
    for (h, inv) in g.translated() {
        let k = match h {
            Gen3::A => 0,
            Gen3::B => 1,
            Gen3::A23 => 2,
            Gen3::W => 3,
            _ => unreachable!("translated words use w, A23, a, b"),
        };
        let x = images[k];
        out = out.mul(if inv { x.inverse() } else { x });
    }
    Ok(out)
}

/// Evidence for a Brunnian verdict in `P₃(ℝP²)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rp2Verdict {
    pub word: GenWord3,
    pub normal_form: Rp2Element,
    pub brunnian: bool,
    /// `d₁, d₂, d₃` as words in `rho, u`.
    pub d: [String; 3],
}

pub fn brunnian_verdict(g: &GenWord3) -> Rp2Verdict {
    let nf = normal_form(g);
    let d = [1, 2, 3].map(|i| d_map(g, i).expect("i in range"));
    Rp2Verdict {
        word: g.clone(),
        brunnian: nf.qpart.is_identity() && d.iter().all(|q| q.is_identity()),
        normal_form: nf,
        d: d.map(|q| q.p2_word()),
    }
}

/// Whether `g` lies in `Brun₃(ℝP²)`: its `⟨a, b⟩` part is trivial and every
/// `d_i(g)` is trivial.
pub fn is_brunnian3(g: &GenWord3) -> bool {
    brunnian_verdict(g).brunnian
}

/// The nine-element free basis of `Brun₃(ℝP²)` with `x₁ = w`, `x₂ = A23`.
pub fn brun3_basis() -> Vec<Word> {
    const BASIS: [&str; 9] = [
        "x2^2",
        "x1^4",
        "[x1^4, x2]",
        "[x2, x1]",
        "[[x2, x1], x2]",
        "[x2, x1^2]",
        "[[x2, x1^2], x2]",
        "[x2, x1^3]",
        "[[x2, x1^3], x2]",
    ];
    BASIS
        .iter()
        .map(|t| {
            Word::parse(u_alphabet(), &t.replace("x1", "w").replace("x2", "A23")).expect("fixed basis word")
        })
        .collect()
}

/// The generator changes `a = rho w, b = w u` (from the `a, b, w, A23`
/// presentation to the `rho, u, w, A23` one) and `rho = a w^-1, u = w^-1 b`
/// (back), between the alphabets of the catalog presentations.
pub fn change_of_generators() -> Result<(FreeHom, FreeHom)> {
    let ab = crate::presentations::builtin("P3_RP2_ab")?.generators;
    let rho = crate::presentations::builtin("P3_RP2_rho")?.generators;
    let images = |target: &Alphabet, pairs: &[(&str, &str)]| -> Result<_> {
        pairs
            .iter()
            .map(|(k, v)| Ok((k.to_string(), Word::parse(target, v)?)))
            .collect::<Result<std::collections::HashMap<_, _>>>()
    };
    let to_rho = FreeHom::new(
        &ab,
        &rho,
        &images(&rho, &[("a", "rho w"), ("b", "w u"), ("w", "w"), ("A23", "A23")])?,
    )?;
    let to_ab = FreeHom::new(
        &rho,
        &ab,
        &images(&ab, &[("rho", "a w^-1"), ("u", "w^-1 b"), ("w", "w"), ("A23", "A23")])?,
    )?;
    Ok((to_rho, to_ab))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::builtin;
    use crate::stallings::fold;

    fn g(t: &str) -> GenWord3 {
        GenWord3::parse(t).unwrap()
    }

    fn uw(t: &str) -> Word {
        Word::parse(u_alphabet(), t).unwrap()
    }

    #[test]
    fn normal_forms() {
        assert_eq!(normal_form(&g("w")), Rp2Element { upart: uw("w"), qpart: Q8Elt::identity() });
        assert_eq!(normal_form(&g("a")), Rp2Element { upart: uw("1"), qpart: Q8Elt::a() });
        assert_eq!(normal_form(&g("rho")), Rp2Element { upart: uw("A23^-1 w"), qpart: Q8Elt::a() });
        assert_eq!(normal_form(&g("A13")).upart, uw("w^2 A23^-1"));
    }

    #[test]
    fn relation_examples() {
        assert!(equal3(&g("rho w rho^-1"), &g("w^-1 A23")));
        assert!(equal3(&g("b a b^-1"), &g("a^-1")));
        assert!(equal3(&g("a^2"), &g("b^2")));
        assert!(!equal3(&g("a"), &g("b")));
    }

    #[test]
    fn every_relator_is_trivial() {
        for key in ["P3_RP2_rho", "P3_RP2_ab"] {
            let p = builtin(key).unwrap();
            for r in p.relators.iter().chain(&p.alternates) {
                let w = g(&r.to_string());
                assert!(normal_form(&w).is_identity(), "{key}: {r}");
                for i in 1..=3 {
                    assert!(d_map(&w, i).unwrap().is_identity(), "{key}: d{i} {r}");
                }
            }
        }
    }

    #[test]
    fn relators_survive_generator_change() {
        let (to_rho, to_ab) = change_of_generators().unwrap();
        let ab = builtin("P3_RP2_ab").unwrap();
        let rho = builtin("P3_RP2_rho").unwrap();
        for r in &ab.relators {
            let image = to_rho.apply(r).unwrap();
            assert!(normal_form(&g(&image.to_string())).is_identity(), "{r}");
        }
        for r in &rho.relators {
            let image = to_ab.apply(r).unwrap();
            assert!(normal_form(&g(&image.to_string())).is_identity(), "{r}");
        }
    }

    #[test]
    fn basis_spans_every_short_brunnian_word() {
        let graph = fold(u_alphabet(), &brun3_basis()).unwrap();
        let mut members = 0;
        for w in crate::free_words::enumerate_reduced_words(u_alphabet(), 8) {
            let brunnian = is_brunnian3(&GenWord3::from_upart(&w).unwrap());
            assert_eq!(graph.contains(&w).unwrap(), brunnian, "{w}");
            members += brunnian as usize;
        }
        assert!(members > 1);
    }

    #[test]
    fn action_is_well_defined() {
        for rel in ["a^4", "a^2 b^-2", "b^-1 a b a"] {
            for x in ["w", "A23"] {
                let conj = g(rel).mul(&g(x)).mul(&g(rel).inverse());
                assert_eq!(normal_form(&conj).upart, uw(x), "{rel} on {x}");
            }
        }
    }

    #[test]
    fn d_map_table() {
        assert!(d_map(&g("w"), 3).unwrap().is_identity());
        assert_eq!(d_map(&g("w"), 1).unwrap(), Q8Elt::from_p2_word("u").unwrap());
        assert!(d_map(&g("A23"), 2).unwrap().is_identity());
        assert!(d_map(&g("w"), 4).is_err());
    }

    #[test]
    fn brunnian_examples() {
        assert!(is_brunnian3(&g("w^4")));
        assert!(is_brunnian3(&g("A23^2")));
        assert!(is_brunnian3(&g("[w, A23]")));
        assert!(!is_brunnian3(&g("w")));
        assert!(!is_brunnian3(&g("a^2")));
        let v = brunnian_verdict(&g("w"));
        assert_eq!(v.d[0], "u");
    }

    #[test]
    fn basis_is_brunnian_and_free() {
        let basis = brun3_basis();
        assert_eq!(basis.len(), 9);
        for w in &basis {
            assert!(is_brunnian3(&GenWord3::from_upart(w).unwrap()), "{w}");
        }
        let graph = fold(u_alphabet(), &basis).unwrap();
        assert_eq!(graph.rank(), 9);
        assert_eq!(graph.index(), Some(8));
    }

    #[test]
    fn display_round_trip() {
        let w = g("rho u^-2 [w, A13]");
        assert_eq!(g(&w.to_string()), w);
        let e = normal_form(&w);
        assert!(equal3(&e.to_word(), &w));
    }
}
