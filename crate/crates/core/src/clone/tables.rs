//! Explicitly tabulated clone truncations with opaque element ids.

use std::collections::HashMap;

use crate::term::FinMap;

use super::{CloneError, CloneOps, CloneTruncation, Elem};

/// Every action and substitution is stored as a table entry; missing
/// entries are reported as undefined.
#[derive(Debug, Clone, Default)]
pub struct TableClone {
    bound: usize,
    names: Vec<Vec<String>>,
    units: Vec<Vec<usize>>,
    actions: HashMap<(Vec<usize>, usize, usize), usize>,
    substs: HashMap<(usize, usize, usize, Vec<usize>), usize>,
}

impl TableClone {
    /// Tabulates every action and substitution of `c` (small clones only).
    pub fn tabulate(c: &CloneTruncation) -> Result<Self, CloneError> {
        let bound = c.bound();
        let mut t = TableClone { bound, ..Default::default() };
        for n in 0..=bound {
            t.names.push(c.elements(n).map(|e| c.describe(e)).collect());
            t.units.push((0..n).map(|i| c.unit(n, i).id).collect());
        }
        for n in 0..=bound {
            for m in 0..=bound {
                for u in FinMap::all(n, m) {
                    for f in c.elements(n) {
                        let image = c.act(&u, f)?;
                        t.actions.insert((u.values().to_vec(), m, f.id), image.id);
                    }
                }
                for f in c.elements(n) {
                    let mut gs = vec![0; n];
                    if c.size(m) == 0 && n > 0 {
                        continue;
                    }
                    loop {
                        let args: Vec<Elem> = gs.iter().map(|&g| Elem::new(m, g)).collect();
                        let r = c.substitute(f, m, &args)?;
                        t.substs.insert((n, f.id, m, gs.clone()), r.id);
                        if !crate::term::next_tuple(&mut gs, c.size(m)) {
                            break;
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn set_subst(&mut self, f: Elem, m: usize, gs: &[usize], result: usize) {
        self.substs.insert((f.arity, f.id, m, gs.to_vec()), result);
    }

    pub fn set_action(&mut self, u: &FinMap, f: usize, result: usize) {
        self.actions.insert((u.values().to_vec(), u.cod(), f), result);
    }

    pub fn into_clone(self, name: impl Into<String>) -> CloneTruncation {
        CloneTruncation::new(name, std::sync::Arc::new(self))
    }
}

impl CloneOps for TableClone {
    fn bound(&self) -> usize {
        self.bound
    }

    fn size(&self, n: usize) -> usize {
        self.names[n].len()
    }

    fn act(&self, u: &FinMap, f: usize) -> Result<usize, CloneError> {
        self.actions
            .get(&(u.values().to_vec(), u.cod(), f))
            .copied()
            .ok_or_else(|| CloneError::Undefined(format!("action of {u} on {f}")))
    }

    fn unit(&self, n: usize, i: usize) -> usize {
        self.units[n][i]
    }

    fn subst(&self, n: usize, f: usize, m: usize, gs: &[usize]) -> Result<usize, CloneError> {
        self.substs
            .get(&(n, f, m, gs.to_vec()))
            .copied()
            .ok_or_else(|| CloneError::Undefined(format!("substitution into {n}#{f}")))
    }

    fn describe(&self, n: usize, f: usize) -> String {
        self.names[n][f].clone()
    }
}
