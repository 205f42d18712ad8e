//! Sound, incomplete equality check for finitely presented theories.
//!
//! Proof side: every term of size ≤ `depth_bound` over the equation's
//! variables is interned into a universe `U`; a union-find over `U` is
//! closed under all axiom instances with both sides in `U` and under
//! congruence for application nodes in `U`. Each merge is recorded in a
//! proof forest so a successful proof comes with a rewrite-chain
//! certificate that can be re-checked step by step.
//!
//! Refutation side: models of size `1..=model_bound` are enumerated in
//! order and the first (model, assignment) separating the two sides is
//! returned.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use thiserror::Error;

use crate::model::{for_each_model, EnumConfig, FiniteModel, ModelError};

use super::{Equation, Presentation, Term, TermError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideConfig {
    pub depth_bound: usize,
    pub model_bound: usize,
    /// Maximum number of interned terms.
    pub max_universe: usize,
    /// Maximum number of axiom instances considered.
    pub max_instances: usize,
    pub max_certificate_steps: usize,
    pub model_search: EnumConfig,
}

impl DecideConfig {
    pub fn new(depth_bound: usize, model_bound: usize) -> Self {
        DecideConfig {
            depth_bound,
            model_bound,
            max_universe: 2_000_000,
            max_instances: 20_000_000,
            max_certificate_steps: 100_000,
            model_search: EnumConfig::default(),
        }
    }
}

#[derive(Debug, Error)]
pub enum DecideError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("resource ceiling exceeded: {what} (limit {limit})")]
    ResourceCeiling { what: &'static str, limit: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("invalid bound: {0}")]
    InvalidBound(&'static str),
}

/// One rewrite: at `position`, an instance of `equation` (read right-to-left
/// when `reversed`) replaces the subterm by `replacement`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub position: Vec<usize>,
    pub equation: usize,
    pub reversed: bool,
    pub replacement: Term,
}

/// A chain of single-axiom rewrites from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub start: Term,
    pub end: Term,
    pub steps: Vec<RewriteStep>,
    pub universe_size: usize,
}

impl Certificate {
    /// Replays every step, checking that it is a genuine axiom instance.
    pub fn verify(&self, pres: &Presentation) -> bool {
        let mut current = self.start.clone();
        for step in &self.steps {
            let Some(eq) = pres.equations.get(step.equation) else {
                return false;
            };
            let (pattern, result) = if step.reversed { (&eq.rhs, &eq.lhs) } else { (&eq.lhs, &eq.rhs) };
            let Some(old) = current.subterm(&step.position) else {
                return false;
            };
            let mut binding = HashMap::new();
            if !match_term(pattern, old, &mut binding) || !match_term(result, &step.replacement, &mut binding) {
                return false;
            }
            current = current.replace_at(&step.position, step.replacement.clone()).expect("position checked above");
        }
        current == self.end
    }
}

fn match_term(pattern: &Term, t: &Term, binding: &mut HashMap<usize, Term>) -> bool {
    match (pattern, t) {
        (Term::Var(i), _) => match binding.get(i) {
            Some(bound) => bound == t,
            None => {
                binding.insert(*i, t.clone());
                true
            }
        },
        (Term::App(f, ps), Term::App(g, ts)) => {
            f == g && ps.len() == ts.len() && ps.iter().zip(ts).all(|(p, t)| match_term(p, t, binding))
        }
        _ => false,
    }
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Proved(Certificate),
    Refuted { model: FiniteModel, assignment: Vec<usize> },
    Unknown { depth_bound: usize, model_bound: usize },
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }
}

/// Tries a bounded proof, then a bounded refutation.
pub fn decide_equal(pres: &Presentation, eq: &Equation, config: &DecideConfig) -> Result<Verdict, DecideError> {
    if config.depth_bound < 1 {
        return Err(DecideError::InvalidBound("depth_bound must be at least 1"));
    }
    if config.model_bound < 1 {
        return Err(DecideError::InvalidBound("model_bound must be at least 1"));
    }
    eq.lhs.check(&pres.signature)?;
    eq.rhs.check(&pres.signature)?;
    if let Some(cert) = try_prove(pres, eq, config)? {
        return Ok(Verdict::Proved(cert));
    }
    if let Some((model, assignment)) = try_refute(pres, eq, config)? {
        return Ok(Verdict::Refuted { model, assignment });
    }
    Ok(Verdict::Unknown { depth_bound: config.depth_bound, model_bound: config.model_bound })
}

/// Searches models of size `1..=model_bound` for a separating assignment.
pub fn try_refute(
    pres: &Presentation,
    eq: &Equation,
    config: &DecideConfig,
) -> Result<Option<(FiniteModel, Vec<usize>)>, DecideError> {
    let pres = Arc::new(pres.clone());
    for k in 1..=config.model_bound {
        let mut found = None;
        for_each_model(&pres, k, &config.model_search, |model| {
            let mut assignment = vec![0; eq.var_count];
            loop {
                let l = model.eval(&eq.lhs, &assignment).expect("assignment covers variables");
                let r = model.eval(&eq.rhs, &assignment).expect("assignment covers variables");
                if l != r {
                    found = Some((model, assignment));
                    return ControlFlow::Break(());
                }
                if !next_tuple(&mut assignment, k) {
                    return ControlFlow::Continue(());
                }
            }
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Advances `t` to the next tuple in lexicographic order over `0..k`.
pub(crate) fn next_tuple(t: &mut [usize], k: usize) -> bool {
    for slot in t.iter_mut().rev() {
        *slot += 1;
        if *slot < k {
            return true;
        }
        *slot = 0;
    }
    false
}

type Id = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Node {
    Var(usize),
    App(u32, Box<[Id]>),
}

#[derive(Debug, Clone, Copy)]
enum Reason {
    /// Edge goes from an instance of the left side to the right side when
    /// `forward`.
    Axiom {
        equation: usize,
        forward: bool,
    },
    Congruence,
}

struct Closure<'p> {
    pres: &'p Presentation,
    nodes: Vec<Node>,
    index: HashMap<Node, Id>,
    uf: Vec<Id>,
    class_size: Vec<u32>,
    parents: Vec<Vec<Id>>,
    members: Vec<Vec<Id>>,
    /// Parents of classes merged since the last drain.
    pending: Vec<Id>,
    proof: Vec<Option<(Id, Reason)>>,
    max_universe: usize,
}

/// Attempts a bounded congruence-closure proof of `eq`.
pub fn try_prove(
    pres: &Presentation,
    eq: &Equation,
    config: &DecideConfig,
) -> Result<Option<Certificate>, DecideError> {
    let mut cc = Closure {
        pres,
        nodes: Vec::new(),
        index: HashMap::new(),
        uf: Vec::new(),
        class_size: Vec::new(),
        parents: Vec::new(),
        members: Vec::new(),
        pending: Vec::new(),
        proof: Vec::new(),
        max_universe: config.max_universe,
    };
    cc.enumerate_universe(eq.var_count, config.depth_bound)?;
    let lhs = cc.intern(&eq.lhs)?;
    let rhs = cc.intern(&eq.rhs)?;
    cc.add_axiom_instances(config.max_instances)?;
    cc.close_congruence();
    if cc.find(lhs) != cc.find(rhs) {
        return Ok(None);
    }
    let mut raw = Vec::new();
    cc.explain(lhs, rhs, &mut Vec::new(), &mut raw, config.max_certificate_steps)?;
    let mut steps = Vec::with_capacity(raw.len());
    for (position, equation, forward, to) in raw {
        steps.push(RewriteStep { position, equation, reversed: !forward, replacement: cc.to_term(to) });
    }
    Ok(Some(Certificate { start: eq.lhs.clone(), end: eq.rhs.clone(), steps, universe_size: cc.nodes.len() }))
}

impl<'p> Closure<'p> {
    fn add_node(&mut self, node: Node) -> Result<Id, DecideError> {
        if let Some(&id) = self.index.get(&node) {
            return Ok(id);
        }
        if self.nodes.len() >= self.max_universe {
            return Err(DecideError::ResourceCeiling { what: "term universe size", limit: self.max_universe });
        }
        let id = self.nodes.len() as Id;
        if let Node::App(_, args) = &node {
            for &a in args.iter() {
                self.parents[a as usize].push(id);
            }
        }
        self.nodes.push(node.clone());
        self.index.insert(node, id);
        self.uf.push(id);
        self.class_size.push(1);
        self.parents.push(Vec::new());
        self.members.push(vec![id]);
        self.proof.push(None);
        Ok(id)
    }

    fn intern(&mut self, t: &Term) -> Result<Id, DecideError> {
        let node = match t {
            Term::Var(i) => Node::Var(*i),
            Term::App(s, args) => {
                let op = self.pres.signature.index_of(s).expect("checked against signature");
                let ids = args.iter().map(|a| self.intern(a)).collect::<Result<Vec<_>, _>>()?;
                Node::App(op as u32, ids.into_boxed_slice())
            }
        };
        self.add_node(node)
    }

    fn to_term(&self, id: Id) -> Term {
        match &self.nodes[id as usize] {
            Node::Var(i) => Term::Var(*i),
            Node::App(op, args) => Term::App(
                self.pres.signature.op(*op as usize).0.to_string(),
                args.iter().map(|&a| self.to_term(a)).collect(),
            ),
        }
    }

    fn enumerate_universe(&mut self, vars: usize, max_size: usize) -> Result<(), DecideError> {
        let mut by_size: Vec<Vec<Id>> = vec![Vec::new(); max_size + 1];
        for i in 1..=vars {
            by_size[0].push(self.add_node(Node::Var(i))?);
        }
        let ops: Vec<(usize, usize)> = self.pres.signature.ops().enumerate().map(|(k, (_, a))| (k, a)).collect();
        for size in 1..=max_size {
            let mut layer = Vec::new();
            for &(op, arity) in &ops {
                if arity == 0 {
                    if size == 1 {
                        layer.push(self.add_node(Node::App(op as u32, Box::new([])))?);
                    }
                    continue;
                }
                let mut split = vec![0usize; arity];
                split[arity - 1] = size - 1;
                loop {
                    // cartesian product of the layers named by `split`
                    let pools: Vec<&Vec<Id>> = split.iter().map(|&s| &by_size[s]).collect();
                    if pools.iter().all(|p| !p.is_empty()) {
                        let mut pick = vec![0usize; arity];
                        let mut batch = Vec::new();
                        loop {
                            let args: Box<[Id]> = pick.iter().zip(&pools).map(|(&i, p)| p[i]).collect();
                            batch.push(Node::App(op as u32, args));
                            let mut pos = arity;
                            let mut advanced = false;
                            while pos > 0 {
                                pos -= 1;
                                pick[pos] += 1;
                                if pick[pos] < pools[pos].len() {
                                    advanced = true;
                                    break;
                                }
                                pick[pos] = 0;
                            }
                            if !advanced {
                                break;
                            }
                        }
                        for node in batch {
                            layer.push(self.add_node(node)?);
                        }
                    }
                    if !next_composition(&mut split) {
                        break;
                    }
                }
            }
            by_size[size] = layer;
        }
        Ok(())
    }

    fn matches(&self, pattern: &Term, id: Id, binding: &mut Vec<Option<Id>>) -> bool {
        match pattern {
            Term::Var(i) => match binding[*i] {
                Some(b) => b == id,
                None => {
                    binding[*i] = Some(id);
                    true
                }
            },
            Term::App(s, ps) => match &self.nodes[id as usize] {
                Node::App(op, args) => {
                    self.pres.signature.op(*op as usize).0 == s
                        && args.len() == ps.len()
                        && ps.iter().zip(args.iter()).all(|(p, &a)| self.matches(p, a, binding))
                }
                Node::Var(_) => false,
            },
        }
    }

    fn all_matches(&self, pattern: &Term, width: usize) -> Vec<(Id, Vec<Option<Id>>)> {
        let original = self.nodes.len() as Id;
        let mut out = Vec::new();
        for id in 0..original {
            let mut binding = vec![None; width + 1];
            if self.matches(pattern, id, &mut binding) {
                out.push((id, binding));
            }
        }
        out
    }

    fn add_axiom_instances(&mut self, max_instances: usize) -> Result<(), DecideError> {
        let mut merges = Vec::new();
        let mut count = 0usize;
        for (k, eq) in self.pres.equations.iter().enumerate() {
            let width = eq.var_count.max(eq.lhs.max_var()).max(eq.rhs.max_var());
            let lvars = eq.lhs.vars();
            let rvars = eq.rhs.vars();
            let shared: Vec<usize> = lvars.intersection(&rvars).copied().collect();
            let left = self.all_matches(&eq.lhs, width);
            let right = self.all_matches(&eq.rhs, width);
            let mut by_key: HashMap<Vec<Id>, Vec<Id>> = HashMap::new();
            for (id, b) in &right {
                let key = shared.iter().map(|&v| b[v].expect("bound by match")).collect();
                by_key.entry(key).or_default().push(*id);
            }
            for (id, b) in &left {
                let key: Vec<Id> = shared.iter().map(|&v| b[v].expect("bound by match")).collect();
                if let Some(targets) = by_key.get(&key) {
                    count += targets.len();
                    if count > max_instances {
                        return Err(DecideError::ResourceCeiling { what: "axiom instances", limit: max_instances });
                    }
                    for &t in targets {
                        merges.push((*id, t, k));
                    }
                }
            }
        }
        for (a, b, k) in merges {
            self.union(a, b, Reason::Axiom { equation: k, forward: true });
        }
        Ok(())
    }

    fn find(&mut self, mut x: Id) -> Id {
        let mut root = x;
        while self.uf[root as usize] != root {
            root = self.uf[root as usize];
        }
        while self.uf[x as usize] != root {
            let next = self.uf[x as usize];
            self.uf[x as usize] = root;
            x = next;
        }
        root
    }

    /// Returns the merged-away root, if a merge happened.
    fn union(&mut self, a: Id, b: Id, reason: Reason) -> Option<Id> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (small, large, a, b, reason) = if self.class_size[ra as usize] <= self.class_size[rb as usize] {
            (ra, rb, a, b, reason)
        } else {
            (rb, ra, b, a, flip(reason))
        };
        // proof forest: hang the smaller tree under the larger one
        self.reroot(a);
        self.proof[a as usize] = Some((b, reason));
        self.uf[small as usize] = large;
        self.class_size[large as usize] += self.class_size[small as usize];
        let moved = std::mem::take(&mut self.members[small as usize]);
        for &m in &moved {
            self.pending.extend(self.parents[m as usize].iter().copied());
        }
        self.members[large as usize].extend(moved);
        Some(small)
    }

    fn reroot(&mut self, node: Id) {
        let mut prev: Option<(Id, Reason)> = None;
        let mut cur = node;
        loop {
            let next = self.proof[cur as usize].take();
            self.proof[cur as usize] = prev;
            match next {
                Some((parent, reason)) => {
                    prev = Some((cur, flip(reason)));
                    cur = parent;
                }
                None => break,
            }
        }
    }

    fn signature(&mut self, id: Id) -> Option<(u32, Vec<Id>)> {
        let Node::App(op, args) = self.nodes[id as usize].clone() else {
            return None;
        };
        Some((op, args.iter().map(|&a| self.find(a)).collect()))
    }

    fn close_congruence(&mut self) {
        let mut table: HashMap<(u32, Vec<Id>), Id> = HashMap::new();
        self.pending.clear();
        let mut work: Vec<Id> = (0..self.nodes.len() as Id).collect();
        work.reverse();
        while let Some(id) = work.pop() {
            let Some(sig) = self.signature(id) else { continue };
            match table.get(&sig) {
                Some(&other) if self.find(other) != self.find(id) => {
                    self.union(id, other, Reason::Congruence);
                    work.append(&mut self.pending);
                }
                Some(_) => {}
                None => {
                    table.insert(sig, id);
                }
            }
        }
    }

    fn ancestors(&self, mut x: Id) -> Vec<(Id, Option<Reason>)> {
        let mut out = vec![(x, None)];
        while let Some((p, r)) = self.proof[x as usize] {
            out.last_mut().unwrap().1 = Some(r);
            out.push((p, None));
            x = p;
        }
        out
    }

    #[allow(clippy::type_complexity)]
    fn explain(
        &self,
        a: Id,
        b: Id,
        position: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, usize, bool, Id)>,
        limit: usize,
    ) -> Result<(), DecideError> {
        if a == b {
            return Ok(());
        }
        let up_a = self.ancestors(a);
        let up_b = self.ancestors(b);
        let on_a: HashMap<Id, usize> = up_a.iter().enumerate().map(|(i, (n, _))| (*n, i)).collect();
        let meet_b = up_b.iter().position(|(n, _)| on_a.contains_key(n)).expect("same class");
        let meet_a = on_a[&up_b[meet_b].0];
        let mut edges = Vec::new();
        for w in up_a[..=meet_a].windows(2) {
            edges.push((w[0].0, w[1].0, w[0].1.expect("edge to parent")));
        }
        for w in up_b[..=meet_b].windows(2).rev() {
            edges.push((w[1].0, w[0].0, flip(w[0].1.expect("edge to parent"))));
        }
        for (from, to, reason) in edges {
            match reason {
                Reason::Axiom { equation, forward } => {
                    if out.len() >= limit {
                        return Err(DecideError::ResourceCeiling { what: "certificate length", limit });
                    }
                    out.push((position.clone(), equation, forward, to));
                }
                Reason::Congruence => {
                    let (Node::App(_, xs), Node::App(_, ys)) = (&self.nodes[from as usize], &self.nodes[to as usize])
                    else {
                        unreachable!("congruence edges join applications")
                    };
                    for (i, (&x, &y)) in xs.iter().zip(ys.iter()).enumerate() {
                        position.push(i);
                        self.explain(x, y, position, out, limit)?;
                        position.pop();
                    }
                }
            }
        }
        Ok(())
    }
}

fn flip(r: Reason) -> Reason {
    match r {
        Reason::Axiom { equation, forward } => Reason::Axiom { equation, forward: !forward },
        Reason::Congruence => Reason::Congruence,
    }
}

/// Next weak composition of the same total, in colex order; false when done.
fn next_composition(parts: &mut [usize]) -> bool {
    let n = parts.len();
    if n <= 1 {
        return false;
    }
    // find the last nonzero part that is not the first slot it could move to
    let Some(k) = (1..n).rev().find(|&k| parts[k] > 0) else { return false };
    parts[k] -= 1;
    parts[k - 1] += 1;
    // move the tail mass back to the end
    let tail: usize = parts[k..].iter().sum();
    for p in parts[k..].iter_mut() {
        *p = 0;
    }
    parts[n - 1] = tail;
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{commutation_equation, generic_application, parse_presentation};

    fn monoid() -> Presentation {
        parse_presentation(
            "theory m { op mul:2; op e:0; eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3); \
             eq mul(e(),x1) = x1; eq mul(x1,e()) = x1; }",
        )
        .unwrap()
    }

    fn semilattice() -> Presentation {
        parse_presentation(
            "theory sl { op join:2; eq join(x1,x1)=x1; eq join(x1,x2)=join(x2,x1); \
             eq join(join(x1,x2),x3)=join(x1,join(x2,x3)); }",
        )
        .unwrap()
    }

    #[test]
    fn compositions_enumerate_all() {
        let mut parts = vec![0, 0, 3];
        let mut seen = vec![parts.clone()];
        while next_composition(&mut parts) {
            seen.push(parts.clone());
        }
        assert_eq!(seen.len(), 10); // C(5,2)
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 10);
    }

    #[test]
    fn universe_counts_binary_trees() {
        let p = semilattice();
        let eq = Equation::new(Term::Var(1), Term::Var(1), 2).unwrap();
        let mut cc = Closure {
            pres: &p,
            nodes: Vec::new(),
            index: HashMap::new(),
            uf: Vec::new(),
            class_size: Vec::new(),
            parents: Vec::new(),
            members: Vec::new(),
            pending: Vec::new(),
            proof: Vec::new(),
            max_universe: 1 << 20,
        };
        cc.enumerate_universe(eq.var_count, 3).unwrap();
        // sizes 0..=3 over 2 variables: 2 + 4 + 2*8 + 5*16
        assert_eq!(cc.nodes.len(), 2 + 4 + 16 + 80);
    }

    #[test]
    fn axiom_instance_is_proved() {
        let p = monoid();
        let eq = p.equations[0].clone();
        let v = decide_equal(&p, &eq, &DecideConfig::new(2, 2)).unwrap();
        let Verdict::Proved(cert) = v else { panic!("expected proof, got {v:?}") };
        assert!(cert.verify(&p));
    }

    #[test]
    fn noncommutative_monoid_refutes_commutativity() {
        let p = monoid();
        let eq = Equation::inferred(
            Term::app("mul", vec![Term::Var(1), Term::Var(2)]),
            Term::app("mul", vec![Term::Var(2), Term::Var(1)]),
        )
        .unwrap();
        let v = decide_equal(&p, &eq, &DecideConfig::new(2, 6)).unwrap();
        let Verdict::Refuted { model, assignment } = v else { panic!("expected refutation") };
        // the smallest noncommutative monoid has three elements
        assert_eq!(model.carrier(), 3);
        assert_ne!(model.eval(&eq.lhs, &assignment), model.eval(&eq.rhs, &assignment));
    }

    #[test]
    fn semilattice_interchange_is_proved() {
        let p = semilattice();
        let j = generic_application("join", 2);
        let eq = commutation_equation(&j, 2, &j, 2).unwrap();
        let v = decide_equal(&p, &eq, &DecideConfig::new(5, 2)).unwrap();
        let Verdict::Proved(cert) = v else { panic!("expected proof") };
        assert!(cert.verify(&p));
        assert!(!cert.steps.is_empty());
    }

    #[test]
    fn tampered_certificate_fails() {
        let p = semilattice();
        let j = generic_application("join", 2);
        let eq = commutation_equation(&j, 2, &j, 2).unwrap();
        let Verdict::Proved(mut cert) = decide_equal(&p, &eq, &DecideConfig::new(3, 1)).unwrap() else { panic!() };
        cert.steps[0].equation = (cert.steps[0].equation + 1) % 3;
        assert!(!cert.verify(&p));
    }

    #[test]
    fn unknown_when_bounds_too_small() {
        // groups: mul-mul interchange is false in general, but not in groups of order ≤ 2
        let p = parse_presentation(
            "theory grp { op mul:2; op e:0; op inv:1; \
             eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3); eq mul(e(),x1) = x1; \
             eq mul(x1,e()) = x1; eq mul(inv(x1),x1) = e(); eq mul(x1,inv(x1)) = e(); }",
        )
        .unwrap();
        let m = generic_application("mul", 2);
        let eq = commutation_equation(&m, 2, &m, 2).unwrap();
        let v = decide_equal(&p, &eq, &DecideConfig::new(3, 2)).unwrap();
        assert!(matches!(v, Verdict::Unknown { depth_bound: 3, model_bound: 2 }), "{v:?}");
    }

    #[test]
    fn zero_bounds_rejected() {
        let p = monoid();
        let eq = p.equations[0].clone();
        assert!(matches!(decide_equal(&p, &eq, &DecideConfig::new(0, 1)), Err(DecideError::InvalidBound(_))));
    }

    #[test]
    fn universe_ceiling_reported() {
        let p = semilattice();
        let eq = Equation::new(Term::Var(1), Term::Var(2), 4).unwrap();
        let mut cfg = DecideConfig::new(6, 1);
        cfg.max_universe = 1000;
        assert!(matches!(
            try_prove(&p, &eq, &cfg),
            Err(DecideError::ResourceCeiling { what: "term universe size", .. })
        ));
    }
}
