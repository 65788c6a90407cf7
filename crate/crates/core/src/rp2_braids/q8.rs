use std::fmt;

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::presentations::{builtin, todd_coxeter, CosetTable};
use crate::syntax;

/// `aˢbᵗ` in `⟨a, b | bab⁻¹ = a⁻¹, a² = b²⟩ ≅ P₂(ℝP²)`, with `a ↦ rho`, `b ↦ u`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q8Elt {
    s: u8,
    t: u8,
}

/// Multiplication read off the coset table of `⟨rho, u | rho u rho = u, rho² = u²⟩`.
struct Model {
    mul: [[Q8Elt; 8]; 8],
    table: CosetTable,
}

fn code(x: Q8Elt) -> usize {
    (2 * x.s + x.t) as usize
}

fn from_code(c: usize) -> Q8Elt {
    Q8Elt {
        s: (c / 2) as u8,
        t: (c % 2) as u8,
    }
}

static MODEL: Lazy<Model> = Lazy::new(|| {
    let p = builtin("P2_RP2").expect("catalog");
    let table = todd_coxeter(&p, &[], 1000)
        .and_then(|e| e.into_table())
        .expect("P2_RP2 closes");
    assert_eq!(table.len(), 8, "P2_RP2 has order 8");
    let mut coset_of = [0usize; 8];
    let mut elt_of = [usize::MAX; 8];
    for c in 0..8 {
        let x = from_code(c);
        let w = p.word(&format!("rho^{} u^{}", x.s, x.t)).expect("fixed word");
        let e = table.evaluate(&w).expect("same alphabet");
        assert_eq!(elt_of[e], usize::MAX, "rho^s u^t are distinct");
        elt_of[e] = c;
        coset_of[c] = e;
    }
    let mut mul = [[Q8Elt::default(); 8]; 8];
    for x in 0..8 {
        for y in 0..8 {
            let e = table.multiply(coset_of[x], coset_of[y]).expect("regular table");
            mul[x][y] = from_code(elt_of[e]);
        }
    }
    Model { mul, table }
});

impl Q8Elt {
    pub fn new(s: i64, t: i64) -> Self {
        // b² = a²
        let t2 = t.rem_euclid(4);
        let s = (s + 2 * (t2 / 2)).rem_euclid(4);
        Q8Elt {
            s: s as u8,
            t: (t2 % 2) as u8,
        }
    }

    pub fn identity() -> Self {
        Q8Elt { s: 0, t: 0 }
    }

    pub fn a() -> Self {
        Q8Elt { s: 1, t: 0 }
    }

    pub fn b() -> Self {
        Q8Elt { s: 0, t: 1 }
    }

    pub fn s(self) -> u8 {
        self.s
    }

    pub fn t(self) -> u8 {
        self.t
    }

    pub fn is_identity(self) -> bool {
        self.s == 0 && self.t == 0
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Q8Elt) -> Q8Elt {
        MODEL.mul[code(self)][code(other)]
    }

    pub fn inverse(self) -> Q8Elt {
        (0..8)
            .map(from_code)
            .find(|&y| self.mul(y).is_identity())
            .expect("group element")
    }

    pub fn pow(self, k: i64) -> Q8Elt {
        let base = if k < 0 { self.inverse() } else { self };
        (0..k.unsigned_abs() % 4).fold(Q8Elt::identity(), |acc, _| acc.mul(base))
    }

    pub fn order(self) -> usize {
        (1..=8).find(|&k| self.pow(k as i64).is_identity()).expect("divides 8")
    }

    pub fn all() -> impl Iterator<Item = Q8Elt> {
        (0..8).map(from_code)
    }

    /// Evaluates a word in `rho, u`.
    pub fn from_p2_word(text: &str) -> Result<Q8Elt> {
        let mut out = Q8Elt::identity();
        for occ in syntax::parse_occurrences(text)? {
            let x = match occ.name.as_str() {
                "rho" => Q8Elt::a(),
                "u" => Q8Elt::b(),
                other => {
                    return Err(Error::Parse {
                        column: occ.column,
                        message: format!("expected rho or u, found {other:?}"),
                    })
                }
            };
            out = out.mul(if occ.inverse { x.inverse() } else { x });
        }
        Ok(out)
    }

    /// `rho^s u^t`.
    pub fn p2_word(self) -> String {
        let letters = std::iter::repeat_n(("rho", false), self.s as usize)
            .chain(std::iter::repeat_n(("u", false), self.t as usize));
        syntax::format_letters(letters)
    }

    /// The closed coset table the multiplication is read from.
    pub fn coset_table() -> &'static CosetTable {
        &MODEL.table
    }
}

impl fmt::Display for Q8Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = std::iter::repeat_n(("a", false), self.s as usize)
            .chain(std::iter::repeat_n(("b", false), self.t as usize));
        f.write_str(&syntax::format_letters(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent multiplication from `ba = a⁻¹b`, `b² = a²`.
    fn by_hand(x: Q8Elt, y: Q8Elt) -> Q8Elt {
        let sign = if x.t == 1 { -1 } else { 1 };
        Q8Elt::new(x.s as i64 + sign * y.s as i64, x.t as i64 + y.t as i64)
    }

    #[test]
    fn matches_quaternion_rules() {
        for x in Q8Elt::all() {
            for y in Q8Elt::all() {
                assert_eq!(x.mul(y), by_hand(x, y), "{x} * {y}");
            }
            assert!(x.mul(x.inverse()).is_identity());
        }
    }

    #[test]
    fn examples() {
        let a2 = Q8Elt::a().pow(2);
        assert!(a2.mul(a2).is_identity());
        assert!(Q8Elt::from_p2_word("rho u rho u^-1").unwrap().is_identity());
        assert!(Q8Elt::from_p2_word("rho^2 u^-2").unwrap().is_identity());
        let mut orders = [0usize; 9];
        for x in Q8Elt::all() {
            orders[x.order()] += 1;
        }
        assert_eq!((orders[1], orders[2], orders[4]), (1, 1, 6));
        assert_eq!(Q8Elt::new(3, 1).to_string(), "a^3 b");
        assert_eq!(Q8Elt::new(0, 2), Q8Elt::new(2, 0));
        assert_eq!(Q8Elt::new(1, 1).p2_word(), "rho u");
    }
}
