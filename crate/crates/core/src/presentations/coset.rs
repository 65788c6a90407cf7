use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::Presentation;
use crate::error::{Error, Result};
use crate::free_words::{Alphabet, Letter, Word};

/// Default ceiling on simultaneously allocated cosets.
pub const DEFAULT_COSET_CAP: usize = 1_000_000;

const NONE: u32 = u32::MAX;

/// Outcome of a coset enumeration. Running out of room is an ordinary result
/// since several catalog groups are infinite.
#[derive(Clone, Debug)]
pub enum Enumeration {
    Closed(CosetTable),
    DidNotClose {
        cap: usize,
        live: usize,
        defined: usize,
    },
}

impl Enumeration {
    pub fn closed(&self) -> Option<&CosetTable> {
        match self {
            Enumeration::Closed(t) => Some(t),
            Enumeration::DidNotClose { .. } => None,
        }
    }

    pub fn into_table(self) -> Result<CosetTable> {
        match self {
            Enumeration::Closed(t) => Ok(t),
            Enumeration::DidNotClose { cap, .. } => Err(Error::NotClosed(cap)),
        }
    }

    /// Index of the subgroup (the group order for the trivial subgroup).
    pub fn index(&self) -> Option<usize> {
        self.closed().map(CosetTable::len)
    }
}

struct Full;

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    rows: usize,
    live: usize,
    cap: usize,
    defined: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(cols: usize, cap: usize) -> Self {
        Enumerator {
            cols,
            table: vec![NONE; cols],
            parent: vec![0],
            rows: 1,
            live: 1,
            cap,
            defined: 1,
            queue: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, v: u32) {
        self.table[c * self.cols + x] = v;
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn find(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) -> std::result::Result<u32, Full> {
        if self.rows >= self.cap {
            return Err(Full);
        }
        let d = self.rows as u32;
        self.rows += 1;
        self.live += 1;
        self.defined += 1;
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.parent.push(d);
        self.set(c, x, d);
        self.set(d as usize, x ^ 1, c as u32);
        Ok(d)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return;
        }
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        self.parent[gone as usize] = keep;
        self.live -= 1;
        self.queue.push(gone);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let q = self.queue[i] as usize;
            i += 1;
            for x in 0..self.cols {
                let e = self.get(q, x);
                if e == NONE {
                    continue;
                }
                self.set(e as usize, x ^ 1, NONE);
                let e1 = self.find(q as u32) as usize;
                let f1 = self.find(e);
                let t = self.get(e1, x);
                if t != NONE {
                    self.merge(f1, t);
                } else {
                    let back = self.get(f1 as usize, x ^ 1);
                    if back != NONE {
                        self.merge(e1 as u32, back);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1 as usize, x ^ 1, e1 as u32);
                    }
                }
            }
        }
    }

    /// Scans `w` at coset `c`, defining new cosets when `fill` is set.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> std::result::Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c as u32, c as u32);
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j && self.get(f as usize, w[i as usize]) != NONE {
                f = self.get(f as usize, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b as usize, w[j as usize] ^ 1) != NONE {
                b = self.get(b as usize, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f as usize, x, b);
                self.set(b as usize, x ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f as usize, w[i as usize])?;
        }
    }

    fn process(&mut self, c: usize, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> std::result::Result<(), Full> {
        if c == 0 {
            for h in subgroup {
                self.scan(0, h, true)?;
            }
        }
        for r in relators {
            if !self.alive(c) {
                return Ok(());
            }
            self.scan(c, r, true)?;
        }
        for x in 0..self.cols {
            if !self.alive(c) {
                return Ok(());
            }
            if self.get(c, x) == NONE {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        let mut c = 0;
        while c < self.rows {
            for r in relators {
                if !self.alive(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
            c += 1;
        }
    }

    /// Renumbers live cosets contiguously, preserving order. Returns the
    /// number of live cosets below `c` (the new position of the scan).
    fn compact(&mut self, c: usize) -> usize {
        let mut new_id = vec![NONE; self.rows];
        let mut next = 0u32;
        let mut below = 0;
        for old in 0..self.rows {
            if self.alive(old) {
                new_id[old] = next;
                next += 1;
                if old < c {
                    below += 1;
                }
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for old in 0..self.rows {
            if !self.alive(old) {
                continue;
            }
            for x in 0..self.cols {
                let e = self.get(old, x);
                table.push(if e == NONE {
                    NONE
                } else {
                    let r = self.find(e);
                    new_id[r as usize]
                });
            }
        }
        self.table = table;
        self.rows = next as usize;
        self.live = self.rows;
        self.parent = (0..next).collect();
        below
    }
}

fn codes(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|l| l.code()).collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `p` (HLT scanning with lookahead when the table fills).
/// The closed table is standardized: cosets are numbered in breadth-first
/// order from the subgroup coset, which is numbered 0.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], cap: usize) -> Result<Enumeration> {
    if cap == 0 {
        return Err(Error::invalid("coset cap", "must be at least 1"));
    }
    if subgroup.iter().any(|w| w.alphabet() != &p.generators) {
        return Err(Error::AlphabetMismatch);
    }
    let cols = 2 * p.generators.len();
    let relators: Vec<Vec<usize>> = p.relators.iter().map(codes).collect();
    let subgroup_codes: Vec<Vec<usize>> = subgroup.iter().map(codes).collect();
    let mut e = Enumerator::new(cols, cap.min(u32::MAX as usize - 1));
    let mut c = 0;
    while c < e.rows {
        if e.alive(c)
            && e.process(c, &relators, &subgroup_codes).is_err() {
                e.lookahead(&relators);
                c = e.compact(c);
                if e.rows >= e.cap {
                    return Ok(Enumeration::DidNotClose {
                        cap,
                        live: e.live,
                        defined: e.defined,
                    });
                }
                continue;
            }
        c += 1;
    }
    e.compact(0);
    let table = CosetTable::standardize(p.generators.clone(), cols, &e.table, e.rows, subgroup);
    table.validate(p, subgroup)?;
    Ok(Enumeration::Closed(table))
}

/// A complete coset table with breadth-first numbering and shortlex-least
/// representative words.
#[derive(Clone, Debug, Serialize)]
pub struct CosetTable {
    generators: Alphabet,
    #[serde(skip)]
    cols: usize,
    #[serde(skip)]
    table: Vec<u32>,
    representatives: Vec<Word>,
    subgroup: Vec<Word>,
    #[serde(skip)]
    regular: bool,
}

impl CosetTable {
    fn standardize(generators: Alphabet, cols: usize, raw: &[u32], rows: usize, subgroup: &[Word]) -> Self {
        let mut new_id = vec![NONE; rows];
        let mut order = vec![0usize];
        let mut reps = vec![Word::identity(&generators)];
        new_id[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let old = order[head];
            for x in 0..cols {
                let t = raw[old * cols + x] as usize;
                if new_id[t] == NONE {
                    new_id[t] = order.len() as u32;
                    order.push(t);
                    let rep = reps[head].mul_unchecked(
                        &Word::from_letters(&generators, [Letter::from_code(x)]).expect("in range"),
                    );
                    reps.push(rep);
                }
            }
            head += 1;
        }
        let n = order.len();
        let mut table = vec![NONE; n * cols];
        for (new, &old) in order.iter().enumerate() {
            for x in 0..cols {
                table[new * cols + x] = new_id[raw[old * cols + x] as usize];
            }
        }
        let mut t = CosetTable {
            generators,
            cols,
            table,
            representatives: reps,
            subgroup: subgroup.to_vec(),
            regular: false,
        };
        t.regular = (0..n).all(|c| {
            t.subgroup
                .iter()
                .all(|h| t.act_word(c, h).map(|d| d == c).unwrap_or(false))
        });
        t
    }

    fn validate(&self, p: &Presentation, subgroup: &[Word]) -> Result<()> {
        for c in 0..self.len() {
            for x in 0..self.cols {
                let t = self.table[c * self.cols + x] as usize;
                if t >= self.len() || self.table[t * self.cols + (x ^ 1)] as usize != c {
                    return Err(Error::Verification("coset table is not a permutation action".into()));
                }
            }
            for r in &p.relators {
                if self.act_word(c, r)? != c {
                    return Err(Error::Verification(format!("relator {r} moves coset {c}")));
                }
            }
        }
        for h in subgroup {
            if self.evaluate(h)? != 0 {
                return Err(Error::Verification(format!("subgroup generator {h} moves coset 0")));
            }
        }
        for (c, rep) in self.representatives.iter().enumerate() {
            if self.evaluate(rep)? != c {
                return Err(Error::Verification(format!("representative of {c} does not reach it")));
            }
        }
        Ok(())
    }

    /// Number of cosets (the group order when the subgroup is trivial).
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn generators(&self) -> &Alphabet {
        &self.generators
    }

    /// True when the subgroup is normal, so cosets form a group and the
    /// table is its regular action.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.table[coset * self.cols + letter.code()] as usize
    }

    pub fn act_word(&self, coset: usize, w: &Word) -> Result<usize> {
        if w.alphabet() != &self.generators {
            return Err(Error::AlphabetMismatch);
        }
        let mut c = coset;
        for &l in w.letters() {
            c = self.act(c, l);
        }
        Ok(c)
    }

    /// The coset reached from coset 0 by `w`.
    pub fn evaluate(&self, w: &Word) -> Result<usize> {
        self.act_word(0, w)
    }

    pub fn representative(&self, coset: usize) -> &Word {
        &self.representatives[coset]
    }

    pub fn representatives(&self) -> &[Word] {
        &self.representatives
    }

    /// Image of each coset under the generator with the given index.
    pub fn permutation(&self, generator: usize) -> Vec<usize> {
        (0..self.len())
            .map(|c| self.act(c, Letter::new(generator, false)))
            .collect()
    }

    fn require_regular(&self) -> Result<()> {
        if self.regular {
            Ok(())
        } else {
            Err(Error::invalid("coset table", "subgroup is not normal; cosets do not form a group"))
        }
    }

    /// Product of group elements `x·y`.
    pub fn multiply(&self, x: usize, y: usize) -> Result<usize> {
        self.require_regular()?;
        self.act_word(x, &self.representatives[y])
    }

    pub fn inverse(&self, x: usize) -> Result<usize> {
        self.require_regular()?;
        self.evaluate(&self.representatives[x].inverse())
    }

    pub fn element_order(&self, x: usize) -> Result<usize> {
        self.require_regular()?;
        let rep = &self.representatives[x];
        let mut c = x;
        let mut k = 1;
        while c != 0 {
            c = self.act_word(c, rep)?;
            k += 1;
        }
        Ok(k)
    }
}

/// Number of elements of each order.
pub fn order_profile(t: &CosetTable) -> Result<BTreeMap<usize, usize>> {
    let mut out = BTreeMap::new();
    for x in 0..t.len() {
        *out.entry(t.element_order(x)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// The normal closure of the images of `gens`: its size and sorted element ids.
pub fn normal_closure_size(t: &CosetTable, gens: &[Word]) -> Result<(usize, Vec<usize>)> {
    t.require_regular()?;
    let k = t.generators.len();
    let mut conj = vec![false; t.len()];
    let mut conj_list = Vec::new();
    let mut queue = VecDeque::new();
    for g in gens {
        let e = t.evaluate(g)?;
        if !conj[e] {
            conj[e] = true;
            queue.push_back(e);
        }
    }
    // conjugacy closure under every generator and its inverse
    while let Some(e) = queue.pop_front() {
        conj_list.push(e);
        for g in 0..k {
            for inv in [false, true] {
                let l = Word::from_letters(&t.generators, [Letter::new(g, inv)])?;
                let c = t.evaluate(&l.inverse().mul_unchecked(&t.representatives[e]).mul_unchecked(&l))?;
                if !conj[c] {
                    conj[c] = true;
                    queue.push_back(c);
                }
            }
        }
    }
    let mut member = vec![false; t.len()];
    member[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &c in &conj_list {
            let y = t.multiply(x, c)?;
            if !member[y] {
                member[y] = true;
                queue.push_back(y);
            }
        }
    }
    let elems: Vec<usize> = (0..t.len()).filter(|&x| member[x]).collect();
    Ok((elems.len(), elems))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::builtin;

    fn order(p: &Presentation) -> Option<usize> {
        todd_coxeter(p, &[], DEFAULT_COSET_CAP).unwrap().index()
    }

    #[test]
    fn cyclic_group() {
        let p = Presentation::parse("gens: a\nrel: a^5").unwrap();
        let t = todd_coxeter(&p, &[], 100).unwrap().into_table().unwrap();
        assert_eq!(t.len(), 5);
        let prof = order_profile(&t).unwrap();
        assert_eq!(prof, BTreeMap::from([(1, 1), (5, 4)]));
    }

    #[test]
    fn small_catalog_orders() {
        assert_eq!(order(&builtin("P2_RP2").unwrap()), Some(8));
        assert_eq!(order(&builtin("Q8").unwrap()), Some(8));
        assert_eq!(order(&builtin("U3_mod_Brun3").unwrap()), Some(8));
        assert_eq!(order(&builtin("Bn_RP2(2)").unwrap()), Some(16));
        assert_eq!(order(&builtin("Bn_S2(3)").unwrap()), Some(12));
    }

    #[test]
    fn infinite_group_does_not_close() {
        let p = builtin("Artin_Bn(3)").unwrap();
        let e = todd_coxeter(&p, &[], 5000).unwrap();
        assert!(matches!(e, Enumeration::DidNotClose { .. }));
        let free = builtin("Artin_Bn(2)").unwrap();
        assert!(todd_coxeter(&free, &[], 100).unwrap().closed().is_none());
    }

    #[test]
    fn subgroup_index() {
        let p = builtin("Q8").unwrap();
        let a = p.word("a").unwrap();
        let t = todd_coxeter(&p, &[a], 100).unwrap().into_table().unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.is_regular());
        let s3 = Presentation::parse("gens: x y\nrel: x^2\nrel: y^2\nrel: (x y)^3").unwrap();
        let x = s3.word("x").unwrap();
        let t = todd_coxeter(&s3, &[x], 100).unwrap().into_table().unwrap();
        assert_eq!(t.len(), 3);
        assert!(!t.is_regular());
        assert!(order_profile(&t).is_err());
    }

    #[test]
    fn evaluate_and_representatives() {
        let p = builtin("P2_RP2").unwrap();
        let t = todd_coxeter(&p, &[], 100).unwrap().into_table().unwrap();
        assert_eq!(t.evaluate(&p.word("rho^2 u^-2").unwrap()).unwrap(), 0);
        assert_eq!(t.evaluate(&p.word("rho^4").unwrap()).unwrap(), 0);
        assert_eq!(t.evaluate(&Word::identity(&p.generators)).unwrap(), 0);
        assert!(t.representative(0).is_identity());
        for (i, r) in t.representatives().iter().enumerate() {
            assert_eq!(t.evaluate(r).unwrap(), i);
        }
        let q = Alphabet::new(["z"]).unwrap();
        assert!(t.evaluate(&Word::generator(&q, "z").unwrap()).is_err());
    }

    #[test]
    fn lookahead_recovers_space() {
        // needs more than 20 live cosets during the run only transiently
        let p = builtin("Q8").unwrap();
        let tight = todd_coxeter(&p, &[], 12).unwrap();
        let roomy = todd_coxeter(&p, &[], 10_000).unwrap();
        assert_eq!(roomy.index(), Some(8));
        if let Some(t) = tight.closed() {
            assert_eq!(t.len(), 8);
        }
    }

    #[test]
    fn closure_of_identity() {
        let p = builtin("P2_RP2").unwrap();
        let t = todd_coxeter(&p, &[], 100).unwrap().into_table().unwrap();
        let (n, elems) = normal_closure_size(&t, &[Word::identity(&p.generators)]).unwrap();
        assert_eq!((n, elems), (1, vec![0]));
        let (n, _) = normal_closure_size(&t, &[p.word("rho").unwrap()]).unwrap();
        assert_eq!(n, 4);
    }
}
