//! Operads by generators and relations, and their algebras.
//!
//! Relations are between linear trees: leaves are numbered `1..=n` and each
//! label occurs exactly once on each side. `t . perm(p)` relabels leaf `ℓ`
//! of `t` as `p(ℓ)`, which is the right action `t·p`.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::model::{for_each_model, is_commuting_pair, EnumConfig, FiniteModel, ModelError};
use crate::syntax::{Cursor, ParseError};
use crate::term::{commutation_equation, generic_application, Equation, Presentation, Signature, Term};

pub type OperadTerm = Term;

/// An algebra of a presented operad: a model of the associated theory.
pub type OperadAlgebra = FiniteModel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: OperadTerm,
    pub rhs: OperadTerm,
    pub arity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperadPresentation {
    pub name: String,
    pub generators: Vec<(String, usize)>,
    pub relations: Vec<Relation>,
}

fn leaves(t: &Term, out: &mut Vec<usize>) {
    match t {
        Term::Var(i) => out.push(*i),
        Term::App(_, args) => args.iter().for_each(|a| leaves(a, out)),
    }
}

/// `Some(n)` when the leaves of `t` are exactly `1..=n`, each once.
fn linear_arity(t: &Term) -> Option<usize> {
    let mut ls = Vec::new();
    leaves(t, &mut ls);
    ls.sort_unstable();
    ls.iter().enumerate().all(|(i, &l)| l == i + 1).then_some(ls.len())
}

fn relabel(t: &Term, p: &[usize]) -> Term {
    match t {
        Term::Var(i) => Term::Var(p[*i - 1]),
        Term::App(s, args) => Term::App(s.clone(), args.iter().map(|a| relabel(a, p)).collect()),
    }
}

fn render_tree(t: &Term) -> String {
    match t {
        Term::Var(i) => i.to_string(),
        Term::App(s, args) if args.is_empty() => s.clone(),
        Term::App(s, args) => {
            let inner: Vec<String> = args.iter().map(render_tree).collect();
            format!("{s}({})", inner.join(","))
        }
    }
}

impl Relation {
    /// Fails unless both sides are linear in the same leaves.
    pub fn new(lhs: OperadTerm, rhs: OperadTerm) -> Result<Relation, String> {
        let a = linear_arity(&lhs).ok_or_else(|| format!("`{}` is not linear", render_tree(&lhs)))?;
        let b = linear_arity(&rhs).ok_or_else(|| format!("`{}` is not linear", render_tree(&rhs)))?;
        if a != b {
            return Err(format!("sides have {a} and {b} leaves"));
        }
        Ok(Relation { lhs, rhs, arity: a })
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {}", render_tree(&self.lhs), render_tree(&self.rhs))
    }
}

impl OperadPresentation {
    pub fn new(name: impl Into<String>, generators: &[(&str, usize)], relations: &[(&str, &str)]) -> Self {
        let generators: Vec<(String, usize)> = generators.iter().map(|(s, a)| (s.to_string(), *a)).collect();
        let mut text = format!("operad_presentation {} {{\n", name.into());
        for (s, a) in &generators {
            text.push_str(&format!("gen {s}:{a};\n"));
        }
        for (l, r) in relations {
            text.push_str(&format!("rel {l} = {r};\n"));
        }
        text.push('}');
        parse_operad_presentation(&text).expect("built-in presentation is well-formed")
    }

    /// One binary generator, associativity.
    pub fn ass() -> Self {
        OperadPresentation::new("ass", &[("m", 2)], &[("m(m(1,2),3)", "m(1,m(2,3))")])
    }

    /// Monoids.
    pub fn ass_unital() -> Self {
        OperadPresentation::new(
            "ass_unital",
            &[("m", 2), ("e", 0)],
            &[("m(m(1,2),3)", "m(1,m(2,3))"), ("m(e,1)", "1"), ("m(1,e)", "1")],
        )
    }

    /// Commutative monoids.
    pub fn com() -> Self {
        OperadPresentation::new(
            "com",
            &[("m", 2), ("e", 0)],
            &[("m(m(1,2),3)", "m(1,m(2,3))"), ("m(e,1)", "1"), ("m(1,2)", "m(2,1)")],
        )
    }

    /// No generators: the operad with only the identity.
    pub fn trivial() -> Self {
        OperadPresentation::new("trivial", &[], &[])
    }

    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new(self.name.clone());
        for (s, a) in &self.generators {
            sig.add_op(s.clone(), *a).expect("generators are distinct");
        }
        sig
    }

    /// The equational presentation with the same algebras: leaf `ℓ` becomes
    /// the variable `xℓ`.
    pub fn to_presentation(&self) -> Presentation {
        let equations = self
            .relations
            .iter()
            .map(|r| Equation::new(r.lhs.clone(), r.rhs.clone(), r.arity).expect("linear relation"))
            .collect();
        Presentation::new(self.signature(), equations).expect("relations use declared generators")
    }
}

/// ```text
/// operad_presentation NAME {
///   gen m:2;
///   gen e:0;
///   rel m(m(1,2),3) = m(1,m(2,3));
///   rel m(e,1) = 1;
///   rel m(1,2) = m(1,2) . perm(2,1);
/// }
/// ```
/// Constants may be written `e` or `e()`.
pub fn parse_operad_presentation(text: &str) -> Result<OperadPresentation, ParseError> {
    let mut cur = Cursor::new(text)?;
    let name = cur.header("operad_presentation")?;
    let mut generators: Vec<(String, usize)> = Vec::new();
    let mut relations = Vec::new();
    while !cur.eat_punct("}") {
        if cur.is_keyword("gen") {
            cur.expect_keyword("gen")?;
            let (sym, pos) = cur.ident()?;
            cur.expect_punct(":")?;
            let arity = cur.usize()?;
            if generators.iter().any(|(s, _)| *s == sym) {
                return Err(ParseError::new(pos, format!("generator `{sym}` declared twice")));
            }
            generators.push((sym, arity));
        } else if cur.is_keyword("rel") {
            cur.expect_keyword("rel")?;
            let pos = cur.pos();
            let lhs = side(&mut cur, &generators)?;
            cur.expect_punct("=")?;
            let rhs = side(&mut cur, &generators)?;
            relations.push(Relation::new(lhs, rhs).map_err(|m| ParseError::new(pos, m))?);
        } else {
            return Err(cur.error("expected `gen`, `rel` or `}`"));
        }
        cur.expect_punct(";")?;
    }
    cur.finish()?;
    Ok(OperadPresentation { name, generators, relations })
}

fn side(cur: &mut Cursor, gens: &[(String, usize)]) -> Result<Term, ParseError> {
    let t = tree(cur, gens)?;
    if !cur.eat_punct(".") {
        return Ok(t);
    }
    cur.expect_keyword("perm")?;
    let pos = cur.pos();
    cur.expect_punct("(")?;
    let mut p = Vec::new();
    loop {
        p.push(cur.usize()?);
        if cur.eat_punct(")") {
            break;
        }
        cur.expect_punct(",")?;
    }
    let mut sorted = p.clone();
    sorted.sort_unstable();
    if sorted.iter().enumerate().any(|(i, &v)| v != i + 1) {
        return Err(ParseError::new(pos, "not a permutation"));
    }
    let mut ls = Vec::new();
    leaves(&t, &mut ls);
    if ls.iter().any(|&l| l == 0 || l > p.len()) || ls.len() != p.len() {
        return Err(ParseError::new(pos, format!("permutation of {} does not match the {} leaves", p.len(), ls.len())));
    }
    Ok(relabel(&t, &p))
}

fn tree(cur: &mut Cursor, gens: &[(String, usize)]) -> Result<Term, ParseError> {
    let pos = cur.pos();
    if let Some(crate::syntax::Tok::Nat(_)) = cur.peek() {
        let n = cur.usize()?;
        if n == 0 {
            return Err(ParseError::new(pos, "leaves are numbered from 1"));
        }
        return Ok(Term::Var(n));
    }
    let (sym, pos) = cur.ident()?;
    let arity = gens
        .iter()
        .find(|(s, _)| *s == sym)
        .map(|g| g.1)
        .ok_or_else(|| ParseError::new(pos, format!("undeclared generator `{sym}`")))?;
    let mut args = Vec::new();
    if cur.eat_punct("(") && !cur.eat_punct(")") {
        loop {
            args.push(tree(cur, gens)?);
            if cur.eat_punct(")") {
                break;
            }
            cur.expect_punct(",")?;
        }
    }
    if args.len() != arity {
        return Err(ParseError::new(pos, format!("`{sym}` has arity {arity} but was given {} arguments", args.len())));
    }
    Ok(Term::App(sym, args))
}

pub fn render_operad_presentation(p: &OperadPresentation) -> String {
    let mut out = format!("operad_presentation {} {{\n", p.name);
    for (s, a) in &p.generators {
        out.push_str(&format!("  gen {s}:{a};\n"));
    }
    for r in &p.relations {
        out.push_str(&format!("  rel {r};\n"));
    }
    out.push_str("}\n");
    out
}

/// The coproduct of the two presentations plus, for every generator `ψ`
/// of arity `n` on the left and `φ` of arity `m` on the right,
/// `ψ(φ, …, φ) = φ(ψ, …, ψ)·σ` with `σ` the transpose. Generators declared
/// on both sides get the suffixes `_1` and `_2`.
pub fn bv_tensor_presentation(p1: &OperadPresentation, p2: &OperadPresentation) -> OperadPresentation {
    let clash = |s: &str, other: &OperadPresentation| other.generators.iter().any(|(t, _)| t == s);
    let mut generators: Vec<(String, usize)> = Vec::new();
    let fresh = |base: String, generators: &Vec<(String, usize)>| {
        let mut name = base;
        while generators.iter().any(|(t, _)| *t == name) || clash(&name, p1) || clash(&name, p2) {
            name.push('_');
        }
        name
    };
    let mut left = Vec::new();
    for (s, a) in &p1.generators {
        let new = if clash(s, p2) { fresh(format!("{s}_1"), &generators) } else { s.clone() };
        generators.push((new.clone(), *a));
        left.push((s.clone(), new));
    }
    let mut right = Vec::new();
    for (s, a) in &p2.generators {
        let new = if clash(s, p1) { fresh(format!("{s}_2"), &generators) } else { s.clone() };
        generators.push((new.clone(), *a));
        right.push((s.clone(), new));
    }
    let rename = |pairs: &[(String, String)], r: &Relation| {
        let f = |s: &str| pairs.iter().find(|(o, _)| o == s).map(|(_, n)| n.clone()).unwrap_or_else(|| s.to_string());
        Relation { lhs: r.lhs.rename(&f), rhs: r.rhs.rename(&f), arity: r.arity }
    };
    let mut relations: Vec<Relation> = p1.relations.iter().map(|r| rename(&left, r)).collect();
    relations.extend(p2.relations.iter().map(|r| rename(&right, r)));
    for ((_, psi), (_, n)) in left.iter().zip(&p1.generators) {
        for ((_, phi), (_, m)) in right.iter().zip(&p2.generators) {
            let eq = commutation_equation(&generic_application(psi, *n), *n, &generic_application(phi, *m), *m)
                .expect("generic applications substitute");
            relations.push(Relation { lhs: eq.lhs, rhs: eq.rhs, arity: n * m });
        }
    }
    OperadPresentation { name: format!("{}_bv_{}", p1.name, p2.name), generators, relations }
}

/// All algebras of `p` on `{0..k}`, in lexicographic table order.
pub fn enumerate_operad_algebras(
    p: &OperadPresentation,
    k: usize,
    config: &EnumConfig,
) -> Result<Vec<OperadAlgebra>, ModelError> {
    let pres = Arc::new(p.to_presentation());
    let mut out = Vec::new();
    for_each_model(&pres, k, config, |m| {
        out.push(m);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Pairs of a `p1`-algebra and a `p2`-algebra on `{0..k}` whose operations
/// interchange pointwise.
pub fn interchanging_pairs(
    p1: &OperadPresentation,
    p2: &OperadPresentation,
    k: usize,
    config: &EnumConfig,
) -> Result<Vec<(OperadAlgebra, OperadAlgebra)>, ModelError> {
    let left = enumerate_operad_algebras(p1, k, config)?;
    let right = enumerate_operad_algebras(p2, k, config)?;
    let mut out = Vec::new();
    for a in &left {
        for b in &right {
            if is_commuting_pair(a, b)? {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}
