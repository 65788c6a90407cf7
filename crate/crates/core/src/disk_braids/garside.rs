//! Left-greedy Garside normal form `Δ^p · s₁ ⋯ s_r` with permutation-braid
//! factors. A simple braid is stored as the permutation `π` with `π[k]` the
//! end position of the strand starting at `k` (0-based).

use serde::Serialize;

use super::{BraidLetter, BraidWord};

type Perm = Vec<u8>;

fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

fn delta(n: usize) -> Perm {
    (0..n as u8).rev().collect()
}

fn is_identity(p: &[u8]) -> bool {
    p.iter().enumerate().all(|(k, &v)| v as usize == k)
}

fn is_delta(p: &[u8]) -> bool {
    let n = p.len();
    p.iter().enumerate().all(|(k, &v)| v as usize == n - 1 - k)
}

fn inverse(p: &[u8]) -> Perm {
    let mut out = vec![0u8; p.len()];
    for (k, &v) in p.iter().enumerate() {
        out[v as usize] = k as u8;
    }
    out
}

/// `Δ x Δ⁻¹` on simples: `σ_i ↦ σ_{n-i}`.
fn flip(p: &mut [u8]) {
    let n = p.len();
    let old = p.to_vec();
    for k in 0..n {
        p[k] = (n - 1 - old[n - 1 - k] as usize) as u8;
    }
}

/// Strands ending at positions `j, j+1` have crossed: `A = A′σ_j`.
fn in_finishing(a_inv: &[u8], j: usize) -> bool {
    a_inv[j] > a_inv[j + 1]
}

/// Strands starting at positions `j, j+1` cross: `B = σ_j B′`.
fn in_starting(b: &[u8], j: usize) -> bool {
    b[j] > b[j + 1]
}

/// Makes the pair `(a, b)` left-weighted. Returns true if anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let a_inv = inverse(a);
        let j = (0..n - 1).find(|&j| in_starting(b, j) && !in_finishing(&a_inv, j));
        let Some(j) = j else { return changed };
        // a := a σ_j
        for v in a.iter_mut() {
            if *v as usize == j {
                *v = (j + 1) as u8;
            } else if *v as usize == j + 1 {
                *v = j as u8;
            }
        }
        // b := σ_j⁻¹ b
        b.swap(j, j + 1);
        changed = true;
    }
}

/// Canonical form of a braid: `Δ^inf` times left-weighted proper simples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    pub strands: usize,
    pub inf: i64,
    /// Each factor as a 0-based permutation.
    pub factors: Vec<Vec<u8>>,
}

impl NormalForm {
    pub fn of(b: &BraidWord) -> NormalForm {
        let n = b.strands();
        if n < 2 {
            return NormalForm {
                strands: n,
                inf: 0,
                factors: Vec::new(),
            };
        }
        let mut inf = 0i64;
        let mut factors: Vec<Perm> = Vec::with_capacity(b.len());
        for l in b.letters() {
            let j = l.index - 1;
            let mut s = identity(n);
            s.swap(j, j + 1);
            if l.inverse {
                // σ_j⁻¹ = Δ⁻¹ (Δ σ_j⁻¹), and X Δ⁻¹ = Δ⁻¹ τ(X)
                for f in factors.iter_mut() {
                    flip(f);
                }
                inf -= 1;
                let d = delta(n);
                let mut t = d.clone();
                for k in 0..n {
                    t[k] = s[d[k] as usize];
                }
                factors.push(t);
            } else {
                factors.push(s);
            }
            // restore left-weightedness from the right end
            let mut i = factors.len() - 1;
            while i > 0 {
                let (left, right) = factors.split_at_mut(i);
                if !left_weight(&mut left[i - 1], &mut right[0]) {
                    break;
                }
                i -= 1;
            }
        }
        // left-weighting already pushes Δs left and identities right
        let mut start = 0;
        while start < factors.len() && is_delta(&factors[start]) {
            inf += 1;
            start += 1;
        }
        let mut end = factors.len();
        while end > start && is_identity(&factors[end - 1]) {
            end -= 1;
        }
        NormalForm {
            strands: n,
            inf,
            factors: factors[start..end].to_vec(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical length: number of non-Δ factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// A braid word spelling this normal form.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        let d = permutation_word(&delta(n));
        for _ in 0..self.inf.unsigned_abs() {
            if self.inf > 0 {
                letters.extend(d.iter().copied());
            } else {
                letters.extend(d.iter().rev().map(|l| l.inverse()));
            }
        }
        for f in &self.factors {
            letters.extend(permutation_word(f));
        }
        BraidWord::from_letters_unchecked(n, letters)
    }
}

/// Positive word for the permutation braid of `p` (bubble sort).
pub(crate) fn permutation_word(p: &[u8]) -> Vec<BraidLetter> {
    // the braid moves the strand at k to p[k]; sort the target list
    let mut cur: Vec<u8> = p.to_vec();
    let mut out = Vec::new();
    let n = cur.len();
    loop {
        let j = (0..n.saturating_sub(1)).find(|&j| cur[j] > cur[j + 1]);
        let Some(j) = j else { break };
        cur.swap(j, j + 1);
        out.push(BraidLetter::new(j + 1, false));
    }
    out
}
