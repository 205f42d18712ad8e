//! Syntax layer: signatures, terms, equations and presentations.
//!
//! Variables are 1-based (`x1`, `x2`, ...). When an equation ranges over the
//! product of an `n`-ary and an `m`-ary operation, the double-indexed
//! variable `x_{ij}` (1 ≤ i ≤ n, 1 ≤ j ≤ m) is flattened row-major to
//! `x_{(i-1)m + j}`. The same flattening is used by every module in the
//! crate (see [`FinMap::row_injection`] and [`FinMap::column_injection`]).

mod decide;
mod finmap;
mod parse;
mod random;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use thiserror::Error;

pub(crate) use decide::next_tuple;
pub use decide::{decide_equal, Certificate, DecideConfig, DecideError, RewriteStep, Verdict};
pub use finmap::FinMap;
pub use parse::{parse_presentation, parse_term, render_presentation};
pub use random::{random_case, random_term, soundness_probe, Case, GenConfig, Probe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("undeclared symbol `{0}`")]
    UndeclaredSymbol(String),
    #[error("symbol `{symbol}` has arity {expected} but was applied to {found} arguments")]
    ArityMismatch { symbol: String, expected: usize, found: usize },
    #[error("duplicate operation symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("variable x{index} out of range (equation has {var_count} variables)")]
    VariableOutOfRange { index: usize, var_count: usize },
    #[error("variable indices are 1-based; found x0")]
    ZeroVariable,
    #[error("substitution needs {needed} arguments, got {found}")]
    ArgumentCount { needed: usize, found: usize },
}

/// A finitary signature: operation symbols with arities, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Signature {
    pub name: String,
    ops: IndexMap<String, usize>,
}

impl Signature {
    pub fn new(name: impl Into<String>) -> Self {
        Signature { name: name.into(), ops: IndexMap::new() }
    }

    pub fn with_ops<'a>(
        name: impl Into<String>,
        ops: impl IntoIterator<Item = (&'a str, usize)>,
    ) -> Result<Self, TermError> {
        let mut sig = Signature::new(name);
        for (sym, arity) in ops {
            sig.add_op(sym, arity)?;
        }
        Ok(sig)
    }

    pub fn add_op(&mut self, symbol: impl Into<String>, arity: usize) -> Result<(), TermError> {
        let symbol = symbol.into();
        if self.ops.contains_key(&symbol) {
            return Err(TermError::DuplicateSymbol(symbol));
        }
        self.ops.insert(symbol, arity);
        Ok(())
    }

    pub fn arity(&self, symbol: &str) -> Option<usize> {
        self.ops.get(symbol).copied()
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.ops.get_index_of(symbol)
    }

    /// Operations in declaration order.
    pub fn ops(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.ops.iter().map(|(s, a)| (s.as_str(), *a))
    }

    pub fn op(&self, index: usize) -> (&str, usize) {
        let (s, a) = self.ops.get_index(index).expect("operation index in range");
        (s.as_str(), *a)
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn max_arity(&self) -> usize {
        self.ops.values().copied().max().unwrap_or(0)
    }

    pub fn has_constants(&self) -> bool {
        self.ops.values().any(|&a| a == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    /// 1-based variable index.
    Var(usize),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(index: usize) -> Term {
        Term::Var(index)
    }

    pub fn app(symbol: impl Into<String>, args: Vec<Term>) -> Term {
        Term::App(symbol.into(), args)
    }

    pub fn constant(symbol: impl Into<String>) -> Term {
        Term::App(symbol.into(), Vec::new())
    }

    /// Number of `App` nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn max_var(&self) -> usize {
        match self {
            Term::Var(i) => *i,
            Term::App(_, args) => args.iter().map(Term::max_var).max().unwrap_or(0),
        }
    }

    pub fn vars(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<usize>) {
        match self {
            Term::Var(i) => {
                out.insert(*i);
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn symbols(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            if let Term::App(s, args) = t {
                out.insert(s.as_str());
                stack.extend(args);
            }
        }
        out
    }

    /// Checks symbol declarations and arities against `sig`.
    pub fn check(&self, sig: &Signature) -> Result<(), TermError> {
        match self {
            Term::Var(0) => Err(TermError::ZeroVariable),
            Term::Var(_) => Ok(()),
            Term::App(s, args) => {
                let expected = sig.arity(s).ok_or_else(|| TermError::UndeclaredSymbol(s.clone()))?;
                if expected != args.len() {
                    return Err(TermError::ArityMismatch { symbol: s.clone(), expected, found: args.len() });
                }
                args.iter().try_for_each(|a| a.check(sig))
            }
        }
    }

    /// Simultaneous replacement of `x_i` by `args[i-1]`.
    pub fn substitute(&self, args: &[Term]) -> Result<Term, TermError> {
        let needed = self.max_var();
        if args.len() < needed {
            return Err(TermError::ArgumentCount { needed, found: args.len() });
        }
        Ok(self.subst_unchecked(args))
    }

    fn subst_unchecked(&self, args: &[Term]) -> Term {
        match self {
            Term::Var(i) => args[i - 1].clone(),
            Term::App(s, ts) => Term::App(s.clone(), ts.iter().map(|t| t.subst_unchecked(args)).collect()),
        }
    }

    /// Renames every symbol through `f`.
    pub fn rename(&self, f: &impl Fn(&str) -> String) -> Term {
        match self {
            Term::Var(i) => Term::Var(*i),
            Term::App(s, args) => Term::App(f(s), args.iter().map(|a| a.rename(f)).collect()),
        }
    }

    /// Renames variables `x_i ↦ x_{u(i)}` along a finite map (0-based internally).
    pub fn reindex(&self, u: &FinMap) -> Term {
        match self {
            Term::Var(i) => Term::Var(u.apply(i - 1) + 1),
            Term::App(s, args) => Term::App(s.clone(), args.iter().map(|a| a.reindex(u)).collect()),
        }
    }

    pub fn subterm(&self, position: &[usize]) -> Option<&Term> {
        match position.split_first() {
            None => Some(self),
            Some((&i, rest)) => match self {
                Term::App(_, args) => args.get(i)?.subterm(rest),
                Term::Var(_) => None,
            },
        }
    }

    pub fn replace_at(&self, position: &[usize], with: Term) -> Option<Term> {
        match position.split_first() {
            None => Some(with),
            Some((&i, rest)) => match self {
                Term::App(s, args) => {
                    let mut args = args.clone();
                    let child = args.get(i)?.replace_at(rest, with)?;
                    args[i] = child;
                    Some(Term::App(s.clone(), args))
                }
                Term::Var(_) => None,
            },
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::App(s, args) => {
                write!(f, "{s}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
    pub var_count: usize,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term, var_count: usize) -> Result<Self, TermError> {
        for t in [&lhs, &rhs] {
            if t.vars().contains(&0) {
                return Err(TermError::ZeroVariable);
            }
            let index = t.max_var();
            if index > var_count {
                return Err(TermError::VariableOutOfRange { index, var_count });
            }
        }
        Ok(Equation { lhs, rhs, var_count })
    }

    /// Equation whose variable count is the largest index used.
    pub fn inferred(lhs: Term, rhs: Term) -> Result<Self, TermError> {
        let var_count = lhs.max_var().max(rhs.max_var());
        Equation::new(lhs, rhs, var_count)
    }

    pub fn reversed(&self) -> Equation {
        Equation { lhs: self.rhs.clone(), rhs: self.lhs.clone(), var_count: self.var_count }
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn rename(&self, f: &impl Fn(&str) -> String) -> Equation {
        Equation { lhs: self.lhs.rename(f), rhs: self.rhs.rename(f), var_count: self.var_count }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub signature: Signature,
    pub equations: Vec<Equation>,
}

impl Presentation {
    pub fn new(signature: Signature, equations: Vec<Equation>) -> Result<Self, TermError> {
        for eq in &equations {
            eq.lhs.check(&signature)?;
            eq.rhs.check(&signature)?;
        }
        Ok(Presentation { signature, equations })
    }

    pub fn name(&self) -> &str {
        &self.signature.name
    }

    pub fn into_arc(self) -> Arc<Presentation> {
        Arc::new(self)
    }
}

/// The interchange equation between an `n`-ary `f` and an `m`-ary `g`,
/// over `n·m` variables:
///
/// `f(g(x11..x1m), ..., g(xn1..xnm)) = g(f(x11..xn1), ..., f(x1m..xnm))`
///
/// with `x_{ij}` flattened to index `(i-1)m + j`. For `n = 0` or `m = 0` the
/// equation is still produced and degenerates to a statement about
/// constants.
pub fn commutation_equation(f: &Term, n: usize, g: &Term, m: usize) -> Result<Equation, TermError> {
    let x = |i: usize, j: usize| Term::Var(i * m + j + 1);
    let rows: Vec<Term> =
        (0..n).map(|i| g.substitute(&(0..m).map(|j| x(i, j)).collect::<Vec<_>>())).collect::<Result<_, _>>()?;
    let cols: Vec<Term> =
        (0..m).map(|j| f.substitute(&(0..n).map(|i| x(i, j)).collect::<Vec<_>>())).collect::<Result<_, _>>()?;
    let lhs = f.substitute(&rows)?;
    let rhs = g.substitute(&cols)?;
    Equation::new(lhs, rhs, n * m)
}

/// All terms over `sig` in variables `x1..=vars` with exactly `size`
/// application nodes.
pub fn terms_of_size(sig: &Signature, vars: usize, size: usize) -> Vec<Term> {
    if size == 0 {
        return (1..=vars).map(Term::Var).collect();
    }
    let mut out = Vec::new();
    for (s, arity) in sig.ops() {
        if arity == 0 {
            if size == 1 {
                out.push(Term::constant(s));
            }
            continue;
        }
        let mut parts = vec![0; arity];
        loop {
            if parts.iter().sum::<usize>() == size - 1 {
                let mut args: Vec<Vec<Term>> = vec![vec![]];
                for &p in &parts {
                    let choices = terms_of_size(sig, vars, p);
                    args = args
                        .into_iter()
                        .flat_map(|prefix| {
                            choices.iter().map(move |c| {
                                let mut v = prefix.clone();
                                v.push(c.clone());
                                v
                            })
                        })
                        .collect();
                }
                out.extend(args.into_iter().map(|a| Term::app(s, a)));
            }
            if !next_tuple(&mut parts, size) {
                break;
            }
        }
    }
    out
}

/// All terms with at most `size` application nodes, smallest first.
pub fn terms_up_to(sig: &Signature, vars: usize, size: usize) -> Vec<Term> {
    (0..=size).flat_map(|s| terms_of_size(sig, vars, s)).collect()
}

/// The generic `n`-ary application `sym(x1, ..., xn)`.
pub fn generic_application(symbol: &str, arity: usize) -> Term {
    Term::app(symbol, (1..=arity).map(Term::Var).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn join(a: Term, b: Term) -> Term {
        Term::app("join", vec![a, b])
    }

    fn x(i: usize) -> Term {
        Term::Var(i)
    }

    #[test]
    fn substitute_examples() {
        let mul = Term::app("mul", vec![x(1), x(2)]);
        let e = Term::constant("e");
        assert_eq!(mul.substitute(&[e.clone(), x(1)]).unwrap(), Term::app("mul", vec![e, x(1)]));
        let t = join(x(1), x(3));
        assert_eq!(x(1).substitute(std::slice::from_ref(&t)).unwrap(), t);
        assert_eq!(join(x(1), x(2)).substitute(&[join(x(1), x(2)), x(3)]).unwrap(), join(join(x(1), x(2)), x(3)));
    }

    #[test]
    fn substitute_length_mismatch() {
        let err = join(x(1), x(2)).substitute(&[x(1)]).unwrap_err();
        assert_eq!(err, TermError::ArgumentCount { needed: 2, found: 1 });
    }

    #[test]
    fn commutation_of_join_with_itself() {
        let j = generic_application("join", 2);
        let eq = commutation_equation(&j, 2, &j, 2).unwrap();
        // x11=x1, x12=x2, x21=x3, x22=x4
        assert_eq!(eq.lhs, join(join(x(1), x(2)), join(x(3), x(4))));
        assert_eq!(eq.rhs, join(join(x(1), x(3)), join(x(2), x(4))));
        assert_eq!(eq.var_count, 4);
    }

    #[test]
    fn commutation_with_projection_is_trivial() {
        let g = Term::app("h", vec![x(1), Term::app("h", vec![x(2), x(3)])]);
        let eq = commutation_equation(&x(1), 1, &g, 3).unwrap();
        assert!(eq.is_trivial());
        let eq = commutation_equation(&g, 3, &x(1), 1).unwrap();
        assert!(eq.is_trivial());
    }

    #[test]
    fn commutation_of_constants() {
        let eq = commutation_equation(&Term::constant("c"), 0, &Term::constant("d"), 0).unwrap();
        assert_eq!(eq.lhs, Term::constant("c"));
        assert_eq!(eq.rhs, Term::constant("d"));
        assert_eq!(eq.var_count, 0);
    }

    #[test]
    fn commutation_constant_against_binary() {
        let eq = commutation_equation(&Term::constant("c"), 0, &generic_application("m", 2), 2).unwrap();
        assert_eq!(eq.lhs, Term::constant("c"));
        assert_eq!(eq.rhs, Term::app("m", vec![Term::constant("c"), Term::constant("c")]));
    }

    #[test]
    fn presentation_rejects_undeclared() {
        let sig = Signature::with_ops("t", [("g", 1)]).unwrap();
        let eq = Equation::inferred(Term::app("f", vec![x(1)]), x(1)).unwrap();
        assert_eq!(Presentation::new(sig, vec![eq]).unwrap_err(), TermError::UndeclaredSymbol("f".into()));
    }

    #[test]
    fn replace_and_subterm() {
        let t = join(join(x(1), x(2)), x(3));
        assert_eq!(t.subterm(&[0, 1]), Some(&x(2)));
        assert_eq!(t.replace_at(&[0, 1], x(4)).unwrap(), join(join(x(1), x(4)), x(3)));
        assert_eq!(t.size(), 2);
    }

    #[test]
    fn term_enumeration_counts() {
        let sig = Signature::with_ops("j", [("join", 2)]).unwrap();
        assert_eq!(terms_up_to(&sig, 2, 3).len(), 102);
        let sig = Signature::with_ops("m", [("mul", 2), ("e", 0)]).unwrap();
        // sizes 0,1: x1, mul(x1,x1), e()
        assert_eq!(terms_up_to(&sig, 1, 1).len(), 3);
        assert!(terms_of_size(&sig, 1, 2).iter().all(|t| t.size() == 2));
    }
}
