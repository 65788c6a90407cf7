//! Stallings folding for finitely generated subgroups of free groups.
//!
//! Every edge carries a provenance word `γ` over the input generators. With a
//! potential `p(v)` on vertices (`p(base) = 1`), each half-edge `u --s--> v`
//! satisfies `φ(γ) = p(u)·s·p(v)⁻¹`, where `φ` evaluates a generator word.
//! Folding updates `γ` so the invariant survives, which lets [`SubgroupGraph::express`]
//! read off an expression for any member without search.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free_words::{Alphabet, Letter, Word};

#[derive(Clone, Debug)]
struct Edge {
    from: usize,
    to: usize,
    label: usize,
    gamma: Word,
}

/// Folded core graph of a subgroup, with the base vertex numbered 0.
#[derive(Clone, Debug)]
pub struct SubgroupGraph {
    alphabet: Alphabet,
    generators: Vec<Word>,
    provenance: Alphabet,
    num_vertices: usize,
    edges: Vec<Edge>,
    /// `trans[v * 2r + code]` = (target vertex, edge index)
    trans: Vec<Option<(u32, u32)>>,
}

struct Folder {
    edges: Vec<Option<Edge>>,
    incident: Vec<Vec<usize>>,
    alive: Vec<bool>,
}

impl Folder {
    fn add_vertex(&mut self) -> usize {
        self.incident.push(Vec::new());
        self.alive.push(true);
        self.incident.len() - 1
    }

    fn add_edge(&mut self, from: usize, to: usize, label: usize, gamma: Word) {
        let id = self.edges.len();
        self.edges.push(Some(Edge {
            from,
            to,
            label,
            gamma,
        }));
        self.incident[from].push(id);
        if to != from {
            self.incident[to].push(id);
        }
    }

    fn remove_edge(&mut self, id: usize) {
        let e = self.edges[id].take().expect("live edge");
        self.incident[e.from].retain(|&x| x != id);
        if e.to != e.from {
            self.incident[e.to].retain(|&x| x != id);
        }
    }

    /// Half-edges at `v` as `(letter read, edge id, other end)`.
    fn half_edges(&self, v: usize) -> Vec<(Letter, usize, usize)> {
        let mut out = Vec::new();
        for &id in &self.incident[v] {
            let e = self.edges[id].as_ref().expect("live edge");
            if e.from == v {
                out.push((Letter::new(e.label, false), id, e.to));
            }
            if e.to == v {
                out.push((Letter::new(e.label, true), id, e.from));
            }
        }
        out
    }

    fn half_gamma(&self, id: usize, inverse: bool) -> Word {
        let g = &self.edges[id].as_ref().expect("live edge").gamma;
        if inverse {
            g.inverse()
        } else {
            g.clone()
        }
    }

    /// Looks for two half-edges at `v` reading the same letter and folds them.
    /// Returns the vertices whose neighbourhoods changed.
    fn fold_at(&mut self, v: usize) -> Option<Vec<usize>> {
        let mut hs = self.half_edges(v);
        hs.sort_by_key(|&(l, id, _)| (l, id));
        let pair = hs
            .windows(2)
            .find(|w| w[0].0 == w[1].0)
            .map(|w| (w[0], w[1]))?;
        let ((letter, e1, v1), (_, e2, v2)) = pair;
        if v1 == v2 {
            self.remove_edge(e2);
            return Some(vec![v, v1]);
        }
        let (keep, gone, e_keep, e_gone) = if v1 < v2 {
            (v1, v2, e1, e2)
        } else {
            (v2, v1, e2, e1)
        };
        let delta = self
            .half_gamma(e_keep, letter.is_inverse())
            .inverse()
            .mul_unchecked(&self.half_gamma(e_gone, letter.is_inverse()));
        self.remove_edge(e_gone);
        let delta_inv = delta.inverse();
        let moved = std::mem::take(&mut self.incident[gone]);
        let mut touched = vec![keep, v];
        for id in moved {
            let e = self.edges[id].as_mut().expect("live edge");
            if e.from == gone {
                e.gamma = delta.mul_unchecked(&e.gamma);
                e.from = keep;
            }
            if e.to == gone {
                e.gamma = e.gamma.mul_unchecked(&delta_inv);
                e.to = keep;
            }
            let other = if e.from == keep { e.to } else { e.from };
            touched.push(other);
            if !self.incident[keep].contains(&id) {
                self.incident[keep].push(id);
            }
        }
        self.alive[gone] = false;
        Some(touched)
    }

    fn degree(&self, v: usize) -> usize {
        self.incident[v]
            .iter()
            .map(|&id| {
                let e = self.edges[id].as_ref().expect("live edge");
                if e.from == e.to {
                    2
                } else {
                    1
                }
            })
            .sum()
    }
}

/// Folds the subgroup generated by `generators` (all over `alphabet`).
///
/// Provenance indices in [`SubgroupGraph::express`] refer to positions in
/// `generators`; empty generators are accepted and simply never used.
pub fn fold(alphabet: &Alphabet, generators: &[Word]) -> Result<SubgroupGraph> {
    for g in generators {
        if g.alphabet() != alphabet {
            return Err(Error::AlphabetMismatch);
        }
    }
    let provenance = Alphabet::new((1..=generators.len()).map(|i| format!("g{i}")))?;
    let mut f = Folder {
        edges: Vec::new(),
        incident: Vec::new(),
        alive: Vec::new(),
    };
    let base = f.add_vertex();
    for (i, g) in generators.iter().enumerate() {
        let letters = g.letters();
        if letters.is_empty() {
            continue;
        }
        let mut prev = base;
        for (pos, l) in letters.iter().enumerate() {
            let last = pos + 1 == letters.len();
            let next = if last { base } else { f.add_vertex() };
            let gamma = if last {
                let y = Word::from_letters(&provenance, [Letter::new(i, false)])?;
                if l.is_inverse() {
                    y.inverse()
                } else {
                    y
                }
            } else {
                Word::identity(&provenance)
            };
            if l.is_inverse() {
                f.add_edge(next, prev, l.generator(), gamma);
            } else {
                f.add_edge(prev, next, l.generator(), gamma);
            }
            prev = next;
        }
    }

    let mut queue: VecDeque<usize> = (0..f.alive.len()).collect();
    let mut queued = vec![true; f.alive.len()];
    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        if !f.alive[v] {
            continue;
        }
        if let Some(touched) = f.fold_at(v) {
            for t in touched {
                if f.alive[t] && !queued[t] {
                    queued[t] = true;
                    queue.push_back(t);
                }
            }
        }
    }

    // trim hairs
    let mut stack: Vec<usize> = (1..f.alive.len()).filter(|&v| f.alive[v]).collect();
    while let Some(v) = stack.pop() {
        if v == base || !f.alive[v] || f.degree(v) > 1 {
            continue;
        }
        for id in f.incident[v].clone() {
            let e = f.edges[id].as_ref().expect("live edge");
            let other = if e.from == v { e.to } else { e.from };
            f.remove_edge(id);
            stack.push(other);
        }
        f.alive[v] = false;
    }

    Ok(SubgroupGraph::finish(alphabet, generators, provenance, f))
}

impl SubgroupGraph {
    fn finish(alphabet: &Alphabet, generators: &[Word], provenance: Alphabet, f: Folder) -> Self {
        let k = 2 * alphabet.len();
        // renumber by breadth-first search from the base in letter order
        let mut id = vec![usize::MAX; f.alive.len()];
        let mut order = vec![0usize];
        id[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut hs = f.half_edges(v);
            hs.sort_by_key(|&(l, e, _)| (l, e));
            for (_, _, w) in hs {
                if id[w] == usize::MAX {
                    id[w] = order.len();
                    order.push(w);
                }
            }
        }
        let n = order.len();
        let mut edges = Vec::new();
        let mut trans = vec![None; n * k];
        for e in f.edges.into_iter().flatten() {
            edges.push(Edge {
                from: id[e.from],
                to: id[e.to],
                label: e.label,
                gamma: e.gamma,
            });
        }
        edges.sort_by_key(|e| (e.from, e.label, e.to));
        for (i, e) in edges.iter().enumerate() {
            trans[e.from * k + Letter::new(e.label, false).code()] = Some((e.to as u32, i as u32));
            trans[e.to * k + Letter::new(e.label, true).code()] = Some((e.from as u32, i as u32));
        }
        SubgroupGraph {
            alphabet: alphabet.clone(),
            generators: generators.to_vec(),
            provenance,
            num_vertices: n,
            edges,
            trans,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Rank of the subgroup: `E − V + 1` of the core graph.
    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.num_vertices
    }

    fn step(&self, v: usize, l: Letter) -> Option<(usize, usize)> {
        self.trans[v * 2 * self.alphabet.len() + l.code()].map(|(t, e)| (t as usize, e as usize))
    }

    /// `Some(index)` when the graph is a finite cover (every vertex has every
    /// letter), i.e. the subgroup has finite index.
    pub fn index(&self) -> Option<usize> {
        if self.trans.iter().all(Option::is_some) {
            Some(self.num_vertices)
        } else {
            None
        }
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        if w.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut v = 0;
        for &l in w.letters() {
            match self.step(v, l) {
                Some((t, _)) => v = t,
                None => return Ok(false),
            }
        }
        Ok(v == 0)
    }

    /// Writes a member as a product of the input generators, as
    /// `(generator index, ±1)` pairs with 0-based indices. The result is
    /// re-multiplied and compared against `w` before being returned.
    pub fn express(&self, w: &Word) -> Result<Vec<(usize, i32)>> {
        if w.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut v = 0;
        let mut acc = Word::identity(&self.provenance);
        for &l in w.letters() {
            let (t, e) = self.step(v, l).ok_or(Error::NotAMember)?;
            let g = &self.edges[e].gamma;
            acc = if l.is_inverse() {
                acc.mul_unchecked(&g.inverse())
            } else {
                acc.mul_unchecked(g)
            };
            v = t;
        }
        if v != 0 {
            return Err(Error::NotAMember);
        }
        let expr: Vec<(usize, i32)> = acc
            .letters()
            .iter()
            .map(|l| (l.generator(), if l.is_inverse() { -1 } else { 1 }))
            .collect();
        let mut check = Word::identity(&self.alphabet);
        for &(i, s) in &expr {
            let g = &self.generators[i];
            check = if s < 0 {
                check.mul_unchecked(&g.inverse())
            } else {
                check.mul_unchecked(g)
            };
        }
        if &check != w {
            return Err(Error::Verification(format!(
                "expression for {w} multiplies out to {check}"
            )));
        }
        Ok(expr)
    }

    /// Adjacency form for debugging output.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct JsonEdge<'a> {
            from: usize,
            to: usize,
            label: &'a str,
            provenance: String,
        }
        #[derive(Serialize)]
        struct JsonGraph<'a> {
            alphabet: &'a Alphabet,
            base: usize,
            vertices: usize,
            rank: usize,
            edges: Vec<JsonEdge<'a>>,
        }
        let g = JsonGraph {
            alphabet: &self.alphabet,
            base: 0,
            vertices: self.num_vertices,
            rank: self.rank(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    from: e.from,
                    to: e.to,
                    label: self.alphabet.symbol(e.label),
                    provenance: e.gamma.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(g).expect("graph serializes")
    }
}
