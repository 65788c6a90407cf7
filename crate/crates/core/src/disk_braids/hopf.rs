use std::fmt;

use serde::Serialize;

use super::{is_brunnian, PureBraidWord};
use crate::error::{Error, Result};

/// Order of the factors `d^I(β)` in the James–Hopf product, by the
/// insertion set `I = {i₁ < ⋯ < i_{n−k}}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HopfOrder {
    /// Lexicographic on `(i₁, …, i_{n−k})`.
    Lex,
    /// Lexicographic read from the right, on `(i_{n−k}, …, i₁)`.
    #[default]
    Colex,
}

impl fmt::Display for HopfOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HopfOrder::Lex => "lex",
            HopfOrder::Colex => "colex",
        })
    }
}

impl std::str::FromStr for HopfOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(HopfOrder::Lex),
            "colex" => Ok(HopfOrder::Colex),
            other => Err(Error::invalid("product order", format!("{other:?} (expected lex or colex)"))),
        }
    }
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, size, &mut Vec::new(), &mut out);
    out
}

/// `H_{k,n}(β) = ∏_I d^{i_{n−k}} ⋯ d^{i₁}(β)` over `I ⊆ {1,…,n}` with
/// `|I| = n − k`, for a Brunnian `β` on `k` strands; `H_{k,k}(β) = β`.
pub fn james_hopf(b: &PureBraidWord, n: usize, order: HopfOrder) -> Result<PureBraidWord> {
    let k = b.strands();
    if n < k {
        return Err(Error::invalid("target strand count", format!("{n} < {k}")));
    }
    if !is_brunnian(&b.to_braid()) {
        return Err(Error::NotBrunnian);
    }
    let mut sets = subsets(n, n - k);
    if order == HopfOrder::Colex {
        sets.sort_by(|x, y| x.iter().rev().cmp(y.iter().rev()));
    }
    let mut out = PureBraidWord::identity(n);
    for set in sets {
        let mut w = b.clone();
        for &i in &set {
            w = w.coface(i)?;
        }
        out = out.mul(&w)?;
    }
    Ok(out)
}
