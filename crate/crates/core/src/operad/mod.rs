//! Truncated symmetric operads, their theories, presentations by
//! generators and relations, and the Boardman–Vogt tensor.
//!
//! Conventions: the symmetric group acts by precomposition,
//! `(o·σ)(y_1, …, y_n) = o(y_{σ(1)}, …, y_{σ(n)})`, so that
//! `(o·σ)·τ = o·(τ∘σ)`; composition `γ(o; g_1, …, g_k)` feeds consecutive
//! blocks of variables to the `g_i`.

mod presentation;
mod theory;

use std::collections::HashMap;

use thiserror::Error;

use crate::clone::laws::Law;
use crate::clone::{CloneError, LawCheck, LawConfig};
use crate::syntax::{Cursor, ParseError};
use crate::term::FinMap;

pub use presentation::{
    bv_tensor_presentation, enumerate_operad_algebras, interchanging_pairs, parse_operad_presentation,
    render_operad_presentation, OperadAlgebra, OperadPresentation, OperadTerm, Relation,
};
pub use theory::{theory_image, theory_of_operad, OperadTheory};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("arity {arity} exceeds the truncation bound {bound}")]
    BoundExceeded { arity: usize, bound: usize },
    #[error("element {id} does not exist in arity {arity}")]
    NoSuchElement { arity: usize, id: usize },
    #[error("composition expects {expected} arguments, got {found}")]
    ArgumentCount { expected: usize, found: usize },
    #[error("no composition entry for {0}")]
    MissingComposition(String),
    #[error("no unit element in arity 1")]
    NoUnit,
}

impl From<OperadError> for CloneError {
    fn from(e: OperadError) -> Self {
        match e {
            OperadError::BoundExceeded { arity, bound } => CloneError::ArityOutOfBound { arity, bound },
            other => CloneError::Undefined(other.to_string()),
        }
    }
}

/// An element of `O(arity)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpElem {
    pub arity: usize,
    pub id: usize,
}

impl OpElem {
    pub fn new(arity: usize, id: usize) -> Self {
        OpElem { arity, id }
    }
}

type GammaKey = (usize, usize, Vec<(usize, usize)>);

/// Finite data of a symmetric operad in arities `0..=bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymOperadTruncation {
    pub name: String,
    bound: usize,
    names: Vec<Vec<String>>,
    perms: Vec<Vec<FinMap>>,
    perm_index: Vec<PermIndex>,
    /// `action[n][s][o]` is `o·σ_s`.
    action: Vec<Vec<Vec<usize>>>,
    unit: usize,
    gamma: HashMap<GammaKey, usize>,
}

/// Position of each permutation of one arity, keyed by its value list.
type PermIndex = HashMap<Vec<usize>, usize>;

fn perm_tables(bound: usize) -> (Vec<Vec<FinMap>>, Vec<PermIndex>) {
    let perms: Vec<Vec<FinMap>> = (0..=bound).map(FinMap::permutations).collect();
    let index = perms.iter().map(|ps| ps.iter().enumerate().map(|(i, p)| (p.values().to_vec(), i)).collect()).collect();
    (perms, index)
}

/// Compositions `(m_1, …, m_k)` with every part and the sum at most `bound`.
fn arity_tuples(k: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut t = vec![0; k];
    loop {
        if t.iter().sum::<usize>() <= bound {
            out.push(t.clone());
        }
        if !crate::term::next_tuple(&mut t, bound + 1) {
            return out;
        }
    }
}

/// `B(off'_a + t) = off_{σ(a)} + t` where `off` are the block offsets of
/// `sizes` and `off'` those of the sizes reordered by `σ`.
fn block_permutation(sigma: &FinMap, sizes: &[usize]) -> FinMap {
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let total = sizes.iter().sum();
    let mut values = Vec::with_capacity(total);
    for a in 0..sigma.dom() {
        let b = sigma.apply(a);
        values.extend((0..sizes[b]).map(|t| offsets[b] + t));
    }
    FinMap::new(total, values)
}

impl SymOperadTruncation {
    /// An operad with the given element names per arity, unit, actions
    /// (identity permutations may be omitted) and composition entries.
    /// Missing actions default to the trivial action.
    pub fn from_parts(
        name: impl Into<String>,
        names: Vec<Vec<String>>,
        unit: usize,
        actions: Vec<(usize, FinMap, usize, usize)>,
        gamma: Vec<(OpElem, Vec<OpElem>, OpElem)>,
    ) -> Self {
        let bound = names.len().saturating_sub(1);
        let (perms, perm_index) = perm_tables(bound);
        let mut action: Vec<Vec<Vec<usize>>> =
            (0..=bound).map(|n| (0..perms[n].len()).map(|_| (0..names[n].len()).collect()).collect()).collect();
        for (n, sigma, o, r) in actions {
            let s = perm_index[n][sigma.values()];
            action[n][s][o] = r;
        }
        let gamma = gamma
            .into_iter()
            .map(|(f, gs, r)| ((f.arity, f.id, gs.iter().map(|g| (g.arity, g.id)).collect()), r.id))
            .collect();
        SymOperadTruncation { name: name.into(), bound, names, perms, perm_index, action, unit, gamma }
    }

    /// The commutative operad: one element in each arity.
    pub fn com(bound: usize) -> Self {
        let names = (0..=bound).map(|n| vec![format!("c{n}")]).collect();
        let mut gamma = Vec::new();
        for k in 0..=bound {
            for ms in arity_tuples(k, bound) {
                let total = ms.iter().sum();
                gamma.push((OpElem::new(k, 0), ms.iter().map(|&m| OpElem::new(m, 0)).collect(), OpElem::new(total, 0)));
            }
        }
        SymOperadTruncation::from_parts("com", names, 0, vec![], gamma)
    }

    /// The associative operad: `O(n) = S_n`, where `π` stands for the word
    /// `x_{π(1)} ⋯ x_{π(n)}`; element ids follow lexicographic order of
    /// permutations, so id 0 is the identity word.
    pub fn ass(bound: usize) -> Self {
        let (perms, perm_index) = perm_tables(bound);
        let names: Vec<Vec<String>> = perms
            .iter()
            .map(|ps| {
                ps.iter()
                    .map(|p| format!("a{}", p.values().iter().map(|v| (v + 1).to_string()).collect::<String>()))
                    .collect()
            })
            .collect();
        let mut actions = Vec::new();
        for n in 0..=bound {
            for sigma in &perms[n] {
                for (o, pi) in perms[n].iter().enumerate() {
                    // (π·σ) is the word σ∘π
                    let r = perm_index[n][pi.then(sigma).values()];
                    actions.push((n, sigma.clone(), o, r));
                }
            }
        }
        let mut gamma = Vec::new();
        for k in 0..=bound {
            for ms in arity_tuples(k, bound) {
                let offsets: Vec<usize> = ms
                    .iter()
                    .scan(0, |acc, &s| {
                        let o = *acc;
                        *acc += s;
                        Some(o)
                    })
                    .collect();
                let total: usize = ms.iter().sum();
                let mut choice = vec![0; k];
                let radices: Vec<usize> = ms.iter().map(|&m| perms[m].len()).collect();
                for (pid, pi) in perms[k].iter().enumerate() {
                    loop {
                        let mut word = Vec::with_capacity(total);
                        for a in 0..k {
                            let b = pi.apply(a);
                            let tau = &perms[ms[b]][choice[b]];
                            word.extend(tau.values().iter().map(|t| offsets[b] + t));
                        }
                        let r = perm_index[total][&word];
                        gamma.push((
                            OpElem::new(k, pid),
                            (0..k).map(|i| OpElem::new(ms[i], choice[i])).collect(),
                            OpElem::new(total, r),
                        ));
                        if !advance(&mut choice, &radices) {
                            break;
                        }
                    }
                }
            }
        }
        SymOperadTruncation::from_parts("ass", names, 0, actions, gamma)
    }

    /// Only the unit, in arity 1.
    pub fn trivial(bound: usize) -> Self {
        let names = (0..=bound).map(|n| if n == 1 { vec!["id".to_string()] } else { vec![] }).collect();
        SymOperadTruncation::from_parts(
            "trivial",
            names,
            0,
            vec![],
            vec![(OpElem::new(1, 0), vec![OpElem::new(1, 0)], OpElem::new(1, 0))],
        )
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn size(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, Vec::len)
    }

    pub fn elements(&self, n: usize) -> impl Iterator<Item = OpElem> {
        (0..self.size(n)).map(move |id| OpElem::new(n, id))
    }

    pub fn name_of(&self, e: OpElem) -> &str {
        &self.names[e.arity][e.id]
    }

    pub fn find(&self, name: &str) -> Option<OpElem> {
        self.names.iter().enumerate().find_map(|(n, ns)| ns.iter().position(|s| s == name).map(|i| OpElem::new(n, i)))
    }

    pub fn unit(&self) -> OpElem {
        OpElem::new(1, self.unit)
    }

    pub fn permutations(&self, n: usize) -> &[FinMap] {
        &self.perms[n]
    }

    fn check(&self, e: OpElem) -> Result<(), OperadError> {
        if e.arity > self.bound {
            return Err(OperadError::BoundExceeded { arity: e.arity, bound: self.bound });
        }
        if e.id >= self.size(e.arity) {
            return Err(OperadError::NoSuchElement { arity: e.arity, id: e.id });
        }
        Ok(())
    }

    /// `o·σ`.
    pub fn act(&self, o: OpElem, sigma: &FinMap) -> Result<OpElem, OperadError> {
        self.check(o)?;
        let s = self.perm_index[o.arity]
            .get(sigma.values())
            .ok_or(OperadError::ArgumentCount { expected: o.arity, found: sigma.dom() })?;
        Ok(OpElem::new(o.arity, self.action[o.arity][*s][o.id]))
    }

    /// `γ(f; gs)`.
    pub fn compose(&self, f: OpElem, gs: &[OpElem]) -> Result<OpElem, OperadError> {
        self.check(f)?;
        if gs.len() != f.arity {
            return Err(OperadError::ArgumentCount { expected: f.arity, found: gs.len() });
        }
        for &g in gs {
            self.check(g)?;
        }
        let total: usize = gs.iter().map(|g| g.arity).sum();
        if total > self.bound {
            return Err(OperadError::BoundExceeded { arity: total, bound: self.bound });
        }
        let key = (f.arity, f.id, gs.iter().map(|g| (g.arity, g.id)).collect::<Vec<_>>());
        self.gamma.get(&key).map(|&r| OpElem::new(total, r)).ok_or_else(|| {
            let args: Vec<&str> = gs.iter().map(|&g| self.name_of(g)).collect();
            OperadError::MissingComposition(format!("{}({})", self.name_of(f), args.join(",")))
        })
    }

    pub fn set_action(&mut self, o: OpElem, sigma: &FinMap, result: usize) {
        let s = self.perm_index[o.arity][sigma.values()];
        self.action[o.arity][s][o.id] = result;
    }

    pub fn set_gamma(&mut self, f: OpElem, gs: &[OpElem], result: usize) {
        self.gamma.insert((f.arity, f.id, gs.iter().map(|g| (g.arity, g.id)).collect()), result);
    }
}

fn advance(t: &mut [usize], radices: &[usize]) -> bool {
    for (slot, &r) in t.iter_mut().zip(radices).rev() {
        *slot += 1;
        if *slot < r {
            return true;
        }
        *slot = 0;
    }
    false
}

/// `operad_compose`.
pub fn operad_compose(o: &SymOperadTruncation, f: OpElem, gs: &[OpElem]) -> Result<OpElem, OperadError> {
    o.compose(f, gs)
}

/// The two sides `γ(ψ; φ, …, φ)` and `γ(φ; ψ, …, ψ)·σ` of the interchange,
/// with `σ` the transpose `nm → mn`.
pub fn operad_interchange_sides(
    o: &SymOperadTruncation,
    psi: OpElem,
    phi: OpElem,
) -> Result<(OpElem, OpElem), OperadError> {
    let (n, m) = (psi.arity, phi.arity);
    if n * m > o.bound {
        return Err(OperadError::BoundExceeded { arity: n * m, bound: o.bound });
    }
    let lhs = o.compose(psi, &vec![phi; n])?;
    let rhs = o.compose(phi, &vec![psi; m])?;
    Ok((lhs, o.act(rhs, &FinMap::transpose(n, m))?))
}

pub fn operad_pair_commutes(o: &SymOperadTruncation, psi: OpElem, phi: OpElem) -> Result<bool, OperadError> {
    let (lhs, rhs) = operad_interchange_sides(o, psi, phi)?;
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperadReport {
    pub laws: Vec<LawCheck>,
}

impl OperadReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &str)> {
        self.laws.iter().filter_map(|l| l.failure.as_deref().map(|f| (l.law, f)))
    }
}

/// Checks the action laws, unit laws, associativity and both equivariance
/// axioms on every instance within the bound.
pub fn validate_operad(o: &SymOperadTruncation, config: &LawConfig) -> OperadReport {
    let bound = o.bound;
    let e = o.unit();
    let mut laws = Vec::new();
    let name = |x: OpElem| o.name_of(x).to_string();
    let err = CloneError::from;

    let mut law = Law::new("action identity", config);
    for n in 0..=bound {
        law.run(&[o.size(n)], |t| {
            let f = OpElem::new(n, t[0]);
            let r = o.act(f, &FinMap::identity(n)).map_err(err)?;
            Ok((r != f).then(|| format!("{} moved by the identity", name(f))))
        });
    }
    laws.push(law.check);

    let mut law = Law::new("action composition", config);
    for n in 0..=bound {
        let ps = &o.perms[n];
        law.run(&[o.size(n), ps.len(), ps.len()], |t| {
            let (f, s, u) = (OpElem::new(n, t[0]), &ps[t[1]], &ps[t[2]]);
            let stepwise = o.act(o.act(f, s).map_err(err)?, u).map_err(err)?;
            let direct = o.act(f, &s.then(u)).map_err(err)?;
            Ok((stepwise != direct).then(|| format!("{} with σ={s} τ={u}", name(f))))
        });
    }
    laws.push(law.check);

    let mut law = Law::new("unit", config);
    if o.size(1) == 0 {
        law.check.failure = Some(OperadError::NoUnit.to_string());
    }
    for n in 0..=bound {
        if o.size(1) == 0 {
            break;
        }
        law.run(&[o.size(n)], |t| {
            let f = OpElem::new(n, t[0]);
            let left = o.compose(e, &[f]).map_err(err)?;
            let right = o.compose(f, &vec![e; n]).map_err(err)?;
            Ok((left != f || right != f).then(|| name(f).to_string()))
        });
    }
    laws.push(law.check);

    let mut law = Law::new("associativity", config);
    for k in 0..=bound {
        for ms in arity_tuples(k, bound) {
            let total: usize = ms.iter().sum();
            for ls in arity_tuples(total, bound) {
                let mut radices = vec![o.size(k)];
                radices.extend(ms.iter().map(|&m| o.size(m)));
                radices.extend(ls.iter().map(|&l| o.size(l)));
                law.run(&radices, |t| {
                    let f = OpElem::new(k, t[0]);
                    let gs: Vec<OpElem> = (0..k).map(|i| OpElem::new(ms[i], t[1 + i])).collect();
                    let hs: Vec<OpElem> = (0..total).map(|j| OpElem::new(ls[j], t[1 + k + j])).collect();
                    let outer = o.compose(o.compose(f, &gs).map_err(err)?, &hs).map_err(err)?;
                    let mut inner = Vec::with_capacity(k);
                    let mut at = 0;
                    for g in &gs {
                        inner.push(o.compose(*g, &hs[at..at + g.arity]).map_err(err)?);
                        at += g.arity;
                    }
                    let direct = o.compose(f, &inner).map_err(err)?;
                    Ok((outer != direct).then(|| {
                        let gn: Vec<String> = gs.iter().map(|&g| name(g)).collect();
                        format!("{}({}) with {:?}", name(f), gn.join(","), &t[1 + k..])
                    }))
                });
            }
        }
    }
    laws.push(law.check);

    // γ(f·σ; g_1..g_k) = γ(f; g_σ(1)..g_σ(k))·B_σ
    let mut law = Law::new("equivariance in the head", config);
    for k in 0..=bound {
        let ps = &o.perms[k];
        for ms in arity_tuples(k, bound) {
            let mut radices = vec![o.size(k), ps.len()];
            radices.extend(ms.iter().map(|&m| o.size(m)));
            law.run(&radices, |t| {
                let (f, s) = (OpElem::new(k, t[0]), &ps[t[1]]);
                let gs: Vec<OpElem> = (0..k).map(|i| OpElem::new(ms[i], t[2 + i])).collect();
                let lhs = o.compose(o.act(f, s).map_err(err)?, &gs).map_err(err)?;
                let moved: Vec<OpElem> = (0..k).map(|a| gs[s.apply(a)]).collect();
                let rhs = o.act(o.compose(f, &moved).map_err(err)?, &block_permutation(s, &ms)).map_err(err)?;
                Ok((lhs != rhs).then(|| format!("{} with σ={s} args {:?}", name(f), &t[2..])))
            });
        }
    }
    laws.push(law.check);

    // γ(f; g_1·τ_1..g_k·τ_k) = γ(f; g_1..g_k)·(τ_1 ⊕ … ⊕ τ_k)
    let mut law = Law::new("equivariance in the arguments", config);
    for k in 0..=bound {
        for ms in arity_tuples(k, bound) {
            let mut radices = vec![o.size(k)];
            radices.extend(ms.iter().map(|&m| o.size(m)));
            radices.extend(ms.iter().map(|&m| o.perms[m].len()));
            law.run(&radices, |t| {
                let f = OpElem::new(k, t[0]);
                let gs: Vec<OpElem> = (0..k).map(|i| OpElem::new(ms[i], t[1 + i])).collect();
                let taus: Vec<FinMap> = (0..k).map(|i| o.perms[ms[i]][t[1 + k + i]].clone()).collect();
                let acted: Vec<OpElem> =
                    gs.iter().zip(&taus).map(|(&g, tau)| o.act(g, tau)).collect::<Result<_, _>>().map_err(err)?;
                let lhs = o.compose(f, &acted).map_err(err)?;
                let rhs = o.act(o.compose(f, &gs).map_err(err)?, &FinMap::block_sum(&taus)).map_err(err)?;
                Ok((lhs != rhs).then(|| format!("{} with args {:?}", name(f), &t[1..])))
            });
        }
    }
    laws.push(law.check);

    OperadReport { laws }
}

/// ```text
/// operad NAME {
///   arity 0 = [e];
///   arity 1 = [id];
///   arity 2 = [m, mop];
///   unit id;
///   act m . [2,1] = mop;
///   gamma m(id, id) = m;
/// }
/// ```
/// Arities must be listed in order; the bound is the last listed arity.
/// Permutations are 1-based; identity actions and unlisted actions are
/// trivial.
pub fn parse_operad(text: &str) -> Result<SymOperadTruncation, ParseError> {
    let mut cur = Cursor::new(text)?;
    let name = cur.header("operad")?;
    let mut names: Vec<Vec<String>> = Vec::new();
    let mut unit = None;
    let mut acts = Vec::new();
    let mut gammas = Vec::new();
    let lookup = |names: &[Vec<String>], s: &str, pos| {
        names
            .iter()
            .enumerate()
            .find_map(|(n, ns)| ns.iter().position(|x| x == s).map(|i| OpElem::new(n, i)))
            .ok_or_else(|| ParseError::new(pos, format!("unknown element `{s}`")))
    };
    while !cur.eat_punct("}") {
        let (key, pos) = cur.ident()?;
        match key.as_str() {
            "arity" => {
                let n = cur.usize()?;
                if n != names.len() {
                    return Err(ParseError::new(pos, format!("expected arity {}", names.len())));
                }
                cur.expect_punct("=")?;
                cur.expect_punct("[")?;
                let mut list = Vec::new();
                if !cur.eat_punct("]") {
                    loop {
                        list.push(cur.ident()?.0);
                        if cur.eat_punct("]") {
                            break;
                        }
                        cur.expect_punct(",")?;
                    }
                }
                names.push(list);
            }
            "unit" => {
                let (u, upos) = cur.ident()?;
                let e = lookup(&names, &u, upos)?;
                if e.arity != 1 {
                    return Err(ParseError::new(upos, "unit must have arity 1"));
                }
                unit = Some(e.id);
            }
            "act" => {
                let (f, fpos) = cur.ident()?;
                let f = lookup(&names, &f, fpos)?;
                cur.expect_punct(".")?;
                let ppos = cur.pos();
                let p = cur.nat_list()?;
                let values: Vec<usize> = p.iter().map(|v| v.wrapping_sub(1)).collect();
                let sigma = FinMap::try_new(f.arity, values)
                    .filter(|s| s.is_bijective())
                    .ok_or_else(|| ParseError::new(ppos, format!("not a permutation of {}", f.arity)))?;
                cur.expect_punct("=")?;
                let (r, rpos) = cur.ident()?;
                let r = lookup(&names, &r, rpos)?;
                if r.arity != f.arity {
                    return Err(ParseError::new(rpos, "action must preserve arity"));
                }
                acts.push((f.arity, sigma, f.id, r.id));
            }
            "gamma" => {
                let (f, fpos) = cur.ident()?;
                let f = lookup(&names, &f, fpos)?;
                cur.expect_punct("(")?;
                let mut gs = Vec::new();
                if !cur.eat_punct(")") {
                    loop {
                        let (g, gpos) = cur.ident()?;
                        gs.push(lookup(&names, &g, gpos)?);
                        if cur.eat_punct(")") {
                            break;
                        }
                        cur.expect_punct(",")?;
                    }
                }
                if gs.len() != f.arity {
                    return Err(ParseError::new(fpos, format!("expected {} arguments", f.arity)));
                }
                cur.expect_punct("=")?;
                let (r, rpos) = cur.ident()?;
                let r = lookup(&names, &r, rpos)?;
                if r.arity != gs.iter().map(|g| g.arity).sum::<usize>() {
                    return Err(ParseError::new(rpos, "result arity must be the sum of argument arities"));
                }
                gammas.push((f, gs, r));
            }
            other => return Err(ParseError::new(pos, format!("unknown item `{other}`"))),
        }
        cur.expect_punct(";")?;
    }
    let end = cur.pos();
    cur.finish()?;
    let unit = unit.ok_or_else(|| ParseError::new(end, "missing `unit`"))?;
    Ok(SymOperadTruncation::from_parts(name, names, unit, acts, gammas))
}

pub fn render_operad(o: &SymOperadTruncation) -> String {
    let mut out = format!("operad {} {{\n", o.name);
    for (n, ns) in o.names.iter().enumerate() {
        out.push_str(&format!("  arity {n} = [{}];\n", ns.join(", ")));
    }
    out.push_str(&format!("  unit {};\n", o.names[1][o.unit]));
    for n in 0..=o.bound {
        for (s, sigma) in o.perms[n].iter().enumerate() {
            for f in 0..o.size(n) {
                let r = o.action[n][s][f];
                if r != f {
                    let p: Vec<usize> = sigma.values().iter().map(|v| v + 1).collect();
                    out.push_str(&format!(
                        "  act {} . {} = {};\n",
                        o.names[n][f],
                        crate::syntax::render_list(&p),
                        o.names[n][r]
                    ));
                }
            }
        }
    }
    let mut entries: Vec<(&GammaKey, &usize)> = o.gamma.iter().collect();
    entries.sort();
    for ((k, f, gs), r) in entries {
        let args: Vec<&str> = gs.iter().map(|&(m, g)| o.names[m][g].as_str()).collect();
        let total: usize = gs.iter().map(|g| g.0).sum();
        out.push_str(&format!("  gamma {}({}) = {};\n", o.names[*k][*f], args.join(", "), o.names[total][*r]));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests;
