use super::{commutator, Alphabet, Word};
use crate::error::{Error, Result};

/// Free basis `{x^q} ∪ {y} ∪ {[y, x^j] : 1 ≤ j < q}` of the kernel of
/// `F(S) → Z/q` sending `x` to a generator and every other symbol to zero.
///
/// Ordered as `x^q` first, then for each `y ≠ x` in alphabet order: `y`,
/// `[y,x]`, …, `[y,x^{q-1}]`.
pub fn cyclic_kernel_basis(s: &Alphabet, x: &str, q: u32) -> Result<Vec<Word>> {
    if q == 0 {
        return Err(Error::invalid("q", "must be at least 1"));
    }
    let xw = Word::generator(s, x)?;
    let mut out = vec![xw.pow(q as i64)];
    for y in s.symbols().iter().filter(|y| y.as_str() != x) {
        let yw = Word::generator(s, y)?;
        out.push(yw.clone());
        for j in 1..q {
            out.push(commutator(&yw, &xw.pow(j as i64))?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn q2_two_generators() {
        let s = Alphabet::new(["x", "y"]).unwrap();
        let b = cyclic_kernel_basis(&s, "x", 2).unwrap();
        let expect: Vec<Word> = ["x^2", "y", "[y,x]"]
            .iter()
            .map(|t| Word::parse(&s, t).unwrap())
            .collect();
        assert_eq!(b, expect);
    }

    #[test]
    fn q4_matches_listing() {
        let s = Alphabet::new(["x1", "x2"]).unwrap();
        let b = cyclic_kernel_basis(&s, "x1", 4).unwrap();
        let expect: Vec<Word> = ["x1^4", "x2", "[x2,x1]", "[x2,x1^2]", "[x2,x1^3]"]
            .iter()
            .map(|t| Word::parse(&s, t).unwrap())
            .collect();
        assert_eq!(strings(&b), strings(&expect));
    }

    #[test]
    fn rank_one() {
        let s = Alphabet::new(["x"]).unwrap();
        assert_eq!(strings(&cyclic_kernel_basis(&s, "x", 3).unwrap()), vec!["x^3"]);
    }

    #[test]
    fn errors() {
        let s = Alphabet::new(["x"]).unwrap();
        assert!(matches!(cyclic_kernel_basis(&s, "z", 2), Err(Error::UnknownSymbol(_))));
        assert!(cyclic_kernel_basis(&s, "x", 0).is_err());
    }
}
