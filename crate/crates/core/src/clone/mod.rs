//! Tabulated algebraic theories truncated at a maximum arity: elements of
//! each arity, renaming actions, projections, and substitution.

mod algebra;
mod commute;
pub(crate) mod laws;
mod tables;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::term::FinMap;

pub use algebra::{
    centralizer_clone, clone_of_algebra, clone_of_algebra_with, commutation_witness, parse_algebra, render_algebra,
    FiniteAlgebra, FunctionClone,
};
pub use commute::{
    admissible_pairs, duoid_structure, interchange_sides, is_commutative_clone, naturality_failures, op_commutes,
    op_commutes_duoidal, sigma_tau_families, ClassifiedFamily, CloneVerdict, Composite, DuoidData, DuoidOutcome,
};
pub use laws::{validate_clone, CloneReport, LawCheck, LawConfig};
pub use tables::TableClone;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CloneError {
    #[error("arity {arity} exceeds the truncation bound {bound}")]
    ArityOutOfBound { arity: usize, bound: usize },
    #[error("pair needs arity {required} but the truncation bound is {bound}")]
    PairOutOfBound { required: usize, bound: usize },
    #[error("element {id} does not exist in arity {arity}")]
    NoSuchElement { arity: usize, id: usize },
    #[error("substitution expects {expected} arguments, got {found}")]
    ArgumentCount { expected: usize, found: usize },
    #[error("result of substitution is not an element of the truncation (arity {arity})")]
    NotClosed { arity: usize },
    #[error("undefined entry: {0}")]
    Undefined(String),
    #[error("closure exceeded the ceiling of {ceiling} elements at arity {arity} (reached {reached})")]
    ClosureCeiling { arity: usize, reached: usize, ceiling: usize },
    #[error("algebra must have a nonempty carrier")]
    EmptyCarrier,
    #[error("table for `{symbol}` has {found} entries, expected {expected}")]
    TableSize { symbol: String, expected: usize, found: usize },
    #[error("value {value} outside carrier of size {carrier}")]
    ValueOutOfRange { value: usize, carrier: usize },
    #[error("unknown operation `{0}`")]
    UnknownSymbol(String),
}

/// The primitive data of a clone truncation. Element ids of arity `n` are
/// `0..size(n)`.
pub trait CloneOps: Send + Sync {
    fn bound(&self) -> usize;
    fn size(&self, n: usize) -> usize;
    /// `T(u)(f)` for `u: n → m` and `f ∈ T(n)`.
    fn act(&self, u: &FinMap, f: usize) -> Result<usize, CloneError>;
    /// The projection `π_i ∈ T(n)`, `i` counted from 0.
    fn unit(&self, n: usize, i: usize) -> usize;
    /// `μ(f; gs)` for `f ∈ T(n)` and `gs ∈ T(m)^n`.
    fn subst(&self, n: usize, f: usize, m: usize, gs: &[usize]) -> Result<usize, CloneError>;
    fn describe(&self, n: usize, f: usize) -> String;
}

/// An element together with its arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    pub arity: usize,
    pub id: usize,
}

impl Elem {
    pub fn new(arity: usize, id: usize) -> Self {
        Elem { arity, id }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.arity, self.id)
    }
}

#[derive(Clone)]
pub struct CloneTruncation {
    pub name: String,
    ops: Arc<dyn CloneOps>,
}

impl fmt::Debug for CloneTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<usize> = (0..=self.bound()).map(|n| self.size(n)).collect();
        f.debug_struct("CloneTruncation").field("name", &self.name).field("sizes", &sizes).finish()
    }
}

impl CloneTruncation {
    pub fn new(name: impl Into<String>, ops: Arc<dyn CloneOps>) -> Self {
        CloneTruncation { name: name.into(), ops }
    }

    pub fn bound(&self) -> usize {
        self.ops.bound()
    }

    pub fn size(&self, n: usize) -> usize {
        if n > self.bound() {
            0
        } else {
            self.ops.size(n)
        }
    }

    pub fn elements(&self, n: usize) -> impl Iterator<Item = Elem> {
        (0..self.size(n)).map(move |id| Elem::new(n, id))
    }

    fn check_arity(&self, n: usize) -> Result<(), CloneError> {
        if n > self.bound() {
            Err(CloneError::ArityOutOfBound { arity: n, bound: self.bound() })
        } else {
            Ok(())
        }
    }

    fn check(&self, e: Elem) -> Result<(), CloneError> {
        self.check_arity(e.arity)?;
        if e.id >= self.size(e.arity) {
            return Err(CloneError::NoSuchElement { arity: e.arity, id: e.id });
        }
        Ok(())
    }

    pub fn unit(&self, n: usize, i: usize) -> Elem {
        Elem::new(n, self.ops.unit(n, i))
    }

    pub fn act(&self, u: &FinMap, f: Elem) -> Result<Elem, CloneError> {
        self.check(f)?;
        self.check_arity(u.cod())?;
        if u.dom() != f.arity {
            return Err(CloneError::ArgumentCount { expected: f.arity, found: u.dom() });
        }
        Ok(Elem::new(u.cod(), self.ops.act(u, f.id)?))
    }

    /// `μ(f; gs)`; all of `gs` must share one arity `m`.
    pub fn substitute(&self, f: Elem, m: usize, gs: &[Elem]) -> Result<Elem, CloneError> {
        self.check(f)?;
        self.check_arity(m)?;
        if gs.len() != f.arity {
            return Err(CloneError::ArgumentCount { expected: f.arity, found: gs.len() });
        }
        for &g in gs {
            self.check(g)?;
            if g.arity != m {
                return Err(CloneError::ArgumentCount { expected: m, found: g.arity });
            }
        }
        let ids: Vec<usize> = gs.iter().map(|g| g.id).collect();
        Ok(Elem::new(m, self.ops.subst(f.arity, f.id, m, &ids)?))
    }

    pub fn describe(&self, e: Elem) -> String {
        self.ops.describe(e.arity, e.id)
    }

    pub fn ops(&self) -> &Arc<dyn CloneOps> {
        &self.ops
    }

    /// Text table: one line per element with its arity, id and description.
    pub fn dump(&self) -> String {
        let mut out = format!("clone {} bound {}\n", self.name, self.bound());
        for n in 0..=self.bound() {
            out.push_str(&format!("arity {n} size {}\n", self.size(n)));
            for e in self.elements(n) {
                out.push_str(&format!("  {} {}\n", e.id, self.describe(e)));
            }
        }
        out
    }
}

/// `clone_substitute`: `μ(f; gs)` with the arity of `gs` inferred (or `m`
/// when `gs` is empty).
pub fn clone_substitute(c: &CloneTruncation, f: Elem, gs: &[Elem], m: usize) -> Result<Elem, CloneError> {
    c.substitute(f, gs.first().map_or(m, |g| g.arity), gs)
}
