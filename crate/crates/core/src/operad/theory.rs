//! The theory generated by a truncated operad: `Th(O)(n)` is the set of
//! pairs `(o ∈ O(k), w: k → n)` for `k ≤ K`, modulo
//! `(o·s, w) ~ (o, w∘s)`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::clone::{CloneError, CloneOps, CloneTruncation, Elem};
use crate::term::FinMap;

use super::{OpElem, SymOperadTruncation};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // the smaller index stays root so roots are orbit minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// One arity of `Th(O)`.
struct Level {
    n: usize,
    /// Start of the `(o, w)` block for each `k`.
    offsets: Vec<usize>,
    class_of: Vec<usize>,
    reps: Vec<(OpElem, FinMap)>,
}

impl Level {
    fn index(&self, o: OpElem, w: &FinMap) -> usize {
        let code = w.values().iter().fold(0, |acc, &v| acc * self.n + v);
        self.offsets[o.arity] + o.id * self.n.pow(o.arity as u32) + code
    }

    fn class(&self, o: OpElem, w: &FinMap) -> usize {
        self.class_of[self.index(o, w)]
    }
}

pub struct OperadTheory {
    operad: Arc<SymOperadTruncation>,
    levels: Vec<Level>,
}

fn build_level(o: &SymOperadTruncation, n: usize) -> Level {
    let bound = o.bound();
    let mut offsets = Vec::with_capacity(bound + 1);
    let mut total = 0;
    for k in 0..=bound {
        offsets.push(total);
        total += o.size(k) * n.pow(k as u32);
    }
    let mut level = Level { n, offsets, class_of: vec![0; total], reps: Vec::new() };
    let mut uf = UnionFind::new(total);
    for k in 0..=bound {
        let swaps = FinMap::adjacent_transpositions(k);
        for f in o.elements(k) {
            for w in FinMap::all(k, n) {
                for s in &swaps {
                    if let Ok(g) = o.act(f, s) {
                        uf.union(level.index(g, &w), level.index(f, &s.then(&w)));
                    }
                }
            }
        }
    }
    // Within one k the block index is lexicographic in (o id, w), so the
    // root of each orbit is its lexicographic minimum and orbits come out
    // ordered by (k, representative).
    let mut ids = HashMap::new();
    for k in 0..=bound {
        for f in o.elements(k) {
            for w in FinMap::all(k, n) {
                let i = level.index(f, &w);
                let root = uf.find(i);
                let next = ids.len();
                let id = *ids.entry(root).or_insert(next);
                if id == level.reps.len() {
                    level.reps.push((f, w));
                }
                level.class_of[i] = id;
            }
        }
    }
    level
}

impl OperadTheory {
    pub fn operad(&self) -> &SymOperadTruncation {
        &self.operad
    }

    /// The orbit of `(o, w)`.
    pub fn class_of(&self, o: OpElem, w: &FinMap) -> Option<usize> {
        let level = self.levels.get(w.cod())?;
        (o.arity == w.dom() && o.arity <= self.operad.bound() && o.id < self.operad.size(o.arity))
            .then(|| level.class(o, w))
    }

    pub fn representative(&self, n: usize, id: usize) -> &(OpElem, FinMap) {
        &self.levels[n].reps[id]
    }
}

impl CloneOps for OperadTheory {
    fn bound(&self) -> usize {
        self.levels.len() - 1
    }

    fn size(&self, n: usize) -> usize {
        self.levels[n].reps.len()
    }

    fn act(&self, u: &FinMap, f: usize) -> Result<usize, CloneError> {
        let m = u.cod();
        let level = self.levels.get(m).ok_or(CloneError::ArityOutOfBound { arity: m, bound: self.bound() })?;
        let (o, w) = &self.levels[u.dom()].reps[f];
        Ok(level.class(*o, &w.then(u)))
    }

    fn unit(&self, n: usize, i: usize) -> usize {
        self.levels[n].class(self.operad.unit(), &FinMap::new(n, vec![i]))
    }

    fn subst(&self, n: usize, f: usize, m: usize, gs: &[usize]) -> Result<usize, CloneError> {
        if gs.len() != n {
            return Err(CloneError::ArgumentCount { expected: n, found: gs.len() });
        }
        let (o, w) = &self.levels[n].reps[f];
        let mut heads = Vec::with_capacity(o.arity);
        let mut values = Vec::new();
        for &a in w.values() {
            let (g, v) = &self.levels[m].reps[gs[a]];
            heads.push(*g);
            values.extend_from_slice(v.values());
        }
        let top = self.operad.compose(*o, &heads)?;
        Ok(self.levels[m].class(top, &FinMap::new(m, values)))
    }

    fn describe(&self, n: usize, f: usize) -> String {
        let (o, w) = &self.levels[n].reps[f];
        let args: Vec<String> = w.values().iter().map(|v| format!("x{}", v + 1)).collect();
        format!("{}({})", self.operad.name_of(*o), args.join(","))
    }
}

/// `Th(O)` truncated to arities `≤ bound`, with operad arities `≤ K`.
pub fn theory_of_operad(operad: &SymOperadTruncation, bound: usize) -> (CloneTruncation, Arc<OperadTheory>) {
    let levels = (0..=bound).map(|n| build_level(operad, n)).collect();
    let th = Arc::new(OperadTheory { operad: Arc::new(operad.clone()), levels });
    let clone = CloneTruncation::new(format!("Th({})", operad.name), th.clone());
    (clone, th)
}

/// The orbit of `(o, identity)`, as an element of `Th(O)(arity of o)`.
pub fn theory_image(th: &OperadTheory, o: OpElem) -> Option<Elem> {
    th.class_of(o, &FinMap::identity(o.arity)).map(|id| Elem::new(o.arity, id))
}
