//! Commutation of clone elements, computed along two independent routes.
//!
//! Elementary route: the two sides of the interchange equation are built
//! from substitution and projections alone.
//!
//! Duoidal route: `σ(f, g)` is the formal composite of `f` with the copies
//! of `g` renamed into each row of the `n × m` grid, `τ(f, g)` the formal
//! composite of `g` with the copies of `f` renamed into each column; the
//! two legs are their images under substitution.

use crate::term::FinMap;

use super::laws::Law;
use super::{CloneError, CloneTruncation, Elem, LawCheck, LawConfig};

/// An element of `(T∘T)(p)`: a head of arity `k` with `k` arguments of
/// arity `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composite {
    pub head: Elem,
    pub args: Vec<Elem>,
}

impl Composite {
    pub fn evaluate(&self, c: &CloneTruncation, arity: usize) -> Result<Elem, CloneError> {
        c.substitute(self.head, arity, &self.args)
    }

    /// Renames every argument along `w`.
    pub fn rename(&self, c: &CloneTruncation, w: &FinMap) -> Result<Composite, CloneError> {
        let args = self.args.iter().map(|&a| c.act(w, a)).collect::<Result<_, _>>()?;
        Ok(Composite { head: self.head, args })
    }
}

/// Values of a family `T(n) × T(m) → (T∘T)(nm)` on every pair with
/// `n·m ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedFamily {
    pub name: &'static str,
    pub entries: Vec<(Elem, Elem, Composite)>,
}

impl ClassifiedFamily {
    pub fn get(&self, f: Elem, g: Elem) -> Option<&Composite> {
        self.entries.iter().find(|(a, b, _)| *a == f && *b == g).map(|(_, _, c)| c)
    }
}

fn check_pair(c: &CloneTruncation, f: Elem, g: Elem) -> Result<usize, CloneError> {
    let nm = f.arity * g.arity;
    if nm > c.bound() {
        return Err(CloneError::PairOutOfBound { required: nm, bound: c.bound() });
    }
    Ok(nm)
}

/// Both sides of the interchange equation for `f ∈ T(n)`, `g ∈ T(m)` as
/// elements of `T(nm)`, using only substitution and projections.
pub fn interchange_sides(c: &CloneTruncation, f: Elem, g: Elem) -> Result<(Elem, Elem), CloneError> {
    let nm = check_pair(c, f, g)?;
    let (n, m) = (f.arity, g.arity);
    let pi = |i: usize, j: usize| c.unit(nm, i * m + j);
    let rows: Vec<Elem> =
        (0..n).map(|i| c.substitute(g, nm, &(0..m).map(|j| pi(i, j)).collect::<Vec<_>>())).collect::<Result<_, _>>()?;
    let cols: Vec<Elem> =
        (0..m).map(|j| c.substitute(f, nm, &(0..n).map(|i| pi(i, j)).collect::<Vec<_>>())).collect::<Result<_, _>>()?;
    Ok((c.substitute(f, nm, &rows)?, c.substitute(g, nm, &cols)?))
}

pub fn op_commutes(c: &CloneTruncation, f: Elem, g: Elem) -> Result<bool, CloneError> {
    let (l, r) = interchange_sides(c, f, g)?;
    Ok(l == r)
}

fn sigma(c: &CloneTruncation, f: Elem, g: Elem) -> Result<Composite, CloneError> {
    let (n, m) = (f.arity, g.arity);
    let args = (0..n).map(|i| c.act(&FinMap::row_injection(n, m, i), g)).collect::<Result<_, _>>()?;
    Ok(Composite { head: f, args })
}

fn tau(c: &CloneTruncation, f: Elem, g: Elem) -> Result<Composite, CloneError> {
    let (n, m) = (f.arity, g.arity);
    let args = (0..m).map(|j| c.act(&FinMap::column_injection(n, m, j), f)).collect::<Result<_, _>>()?;
    Ok(Composite { head: g, args })
}

/// The families `σ` and `τ` on every pair within the bound.
pub fn sigma_tau_families(c: &CloneTruncation) -> Result<(ClassifiedFamily, ClassifiedFamily), CloneError> {
    let mut s = ClassifiedFamily { name: "sigma", entries: Vec::new() };
    let mut t = ClassifiedFamily { name: "tau", entries: Vec::new() };
    for (f, g) in admissible_pairs(c) {
        s.entries.push((f, g, sigma(c, f, g)?));
        t.entries.push((f, g, tau(c, f, g)?));
    }
    Ok((s, t))
}

pub fn op_commutes_duoidal(c: &CloneTruncation, f: Elem, g: Elem) -> Result<bool, CloneError> {
    let nm = check_pair(c, f, g)?;
    let left = sigma(c, f, g)?.evaluate(c, nm)?;
    let right = tau(c, f, g)?.evaluate(c, nm)?;
    Ok(left == right)
}

/// Pairs `(f, g)` with `arity(f)·arity(g) ≤ bound`, ordered by
/// `(arity f, arity g, id f, id g)`.
pub fn admissible_pairs(c: &CloneTruncation) -> Vec<(Elem, Elem)> {
    let bound = c.bound();
    let mut out = Vec::new();
    for n in 0..=bound {
        for m in 0..=bound {
            if n * m > bound {
                continue;
            }
            for f in c.elements(n) {
                for g in c.elements(m) {
                    out.push((f, g));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CloneVerdict {
    CommutativeUpTo(usize),
    NotCommutative(Elem, Elem),
}

pub fn is_commutative_clone(c: &CloneTruncation) -> Result<CloneVerdict, CloneError> {
    for (f, g) in admissible_pairs(c) {
        if !op_commutes(c, f, g)? {
            return Ok(CloneVerdict::NotCommutative(f, g));
        }
    }
    Ok(CloneVerdict::CommutativeUpTo(c.bound()))
}

/// The second multiplication `ν = μ∘σ` of a commutative clone with the
/// checks of its duoid laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuoidData {
    pub nu: Vec<(Elem, Elem, Elem)>,
    pub checks: Vec<LawCheck>,
}

impl DuoidData {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn nu(&self, f: Elem, g: Elem) -> Option<Elem> {
        self.nu.iter().find(|(a, b, _)| *a == f && *b == g).map(|e| e.2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DuoidOutcome {
    Present(DuoidData),
    Absent { witness: (Elem, Elem) },
}

fn nu(c: &CloneTruncation, f: Elem, g: Elem) -> Result<Elem, CloneError> {
    let nm = check_pair(c, f, g)?;
    sigma(c, f, g)?.evaluate(c, nm)
}

pub fn duoid_structure(c: &CloneTruncation, config: &LawConfig) -> Result<DuoidOutcome, CloneError> {
    if let CloneVerdict::NotCommutative(f, g) = is_commutative_clone(c)? {
        return Ok(DuoidOutcome::Absent { witness: (f, g) });
    }
    let bound = c.bound();
    let pairs = admissible_pairs(c);
    let mut table = Vec::with_capacity(pairs.len());
    let mut agree = Law::new("nu agrees with tau", config);
    for &(f, g) in &pairs {
        let v = nu(c, f, g)?;
        table.push((f, g, v));
        agree.run(&[1], |_| {
            let t = tau(c, f, g)?.evaluate(c, f.arity * g.arity)?;
            Ok((t != v).then(|| format!("({f}, {g})")))
        });
    }

    let mut unit = Law::new("nu unit", config);
    let e = c.unit(1, 0);
    if bound >= 1 {
        for n in 0..=bound {
            unit.run(&[c.size(n)], |t| {
                let f = Elem::new(n, t[0]);
                let (l, r) = (nu(c, e, f)?, nu(c, f, e)?);
                Ok((l != f || r != f).then(|| format!("{f}")))
            });
        }
    }

    let mut assoc = Law::new("nu associativity", config);
    for n in 0..=bound {
        for m in 0..=bound {
            for l in 0..=bound {
                if n * m * l > bound {
                    continue;
                }
                assoc.run(&[c.size(n), c.size(m), c.size(l)], |t| {
                    let (f, g, h) = (Elem::new(n, t[0]), Elem::new(m, t[1]), Elem::new(l, t[2]));
                    let left = nu(c, nu(c, f, g)?, h)?;
                    let right = nu(c, f, nu(c, g, h)?)?;
                    Ok((left != right).then(|| format!("({f}, {g}, {h})")))
                });
            }
        }
    }

    // ν(μ(f; gs), μ(h; ks)) = μ(ν(f, h); ν(g_i, k_j) over the grid)
    let mut interchange = Law::new("duoid interchange", config);
    for n in 0..=bound {
        for m in 0..=bound {
            if n * m > bound {
                continue;
            }
            for p in 0..=bound {
                for q in 0..=bound {
                    if p * q > bound {
                        continue;
                    }
                    let mut radices = vec![c.size(n), c.size(m)];
                    radices.extend(std::iter::repeat_n(c.size(p), n));
                    radices.extend(std::iter::repeat_n(c.size(q), m));
                    interchange.run(&radices, |t| {
                        let (f, h) = (Elem::new(n, t[0]), Elem::new(m, t[1]));
                        let gs: Vec<Elem> = t[2..2 + n].iter().map(|&i| Elem::new(p, i)).collect();
                        let ks: Vec<Elem> = t[2 + n..].iter().map(|&i| Elem::new(q, i)).collect();
                        let left = nu(c, c.substitute(f, p, &gs)?, c.substitute(h, q, &ks)?)?;
                        let mut grid = Vec::with_capacity(n * m);
                        for g in &gs {
                            for k in &ks {
                                grid.push(nu(c, *g, *k)?);
                            }
                        }
                        let right = c.substitute(nu(c, f, h)?, p * q, &grid)?;
                        Ok((left != right).then(|| format!("f={f} h={h} gs={:?} ks={:?}", &t[2..2 + n], &t[2 + n..])))
                    });
                }
            }
        }
    }

    Ok(DuoidOutcome::Present(DuoidData {
        nu: table,
        checks: vec![agree.check, unit.check, assoc.check, interchange.check],
    }))
}

/// Failures of naturality of a family: for `u: n → n'`, `v: m → m'`
/// within the bound, renaming the value at `(f, g)` along `u × v` must
/// agree with the value at `(T(u) f, T(v) g)` once its arguments are
/// pulled back along `u`. Exhaustive up to arity `max_arity`.
pub fn naturality_failures(
    c: &CloneTruncation,
    family: &ClassifiedFamily,
    max_arity: usize,
) -> Result<Vec<String>, CloneError> {
    let bound = c.bound().min(max_arity);
    let mut failures = Vec::new();
    for (f, g, value) in &family.entries {
        let (n, m) = (f.arity, g.arity);
        for n2 in 0..=bound {
            for m2 in 0..=bound {
                if n2 * m2 > c.bound() || n > bound || m > bound {
                    continue;
                }
                for u in FinMap::all(n, n2) {
                    for v in FinMap::all(m, m2) {
                        let moved = value.rename(c, &FinMap::product(&u, &v))?;
                        let (fu, gv) = (c.act(&u, *f)?, c.act(&v, *g)?);
                        let other = match family.name {
                            "sigma" => sigma(c, fu, gv)?,
                            _ => tau(c, fu, gv)?,
                        };
                        // identify heads: pull back arguments along the head renaming
                        let (head_map, same_head) = match family.name {
                            "sigma" => (&u, moved.head == *f && other.head == fu),
                            _ => (&v, moved.head == *g && other.head == gv),
                        };
                        let pulled: Vec<Elem> = (0..head_map.dom()).map(|i| other.args[head_map.apply(i)]).collect();
                        let nm2 = n2 * m2;
                        let agree =
                            same_head && pulled == moved.args && moved.evaluate(c, nm2)? == other.evaluate(c, nm2)?;
                        if !agree {
                            failures.push(format!("{} at ({f}, {g}) with u={u} v={v}", family.name));
                        }
                    }
                }
            }
        }
    }
    Ok(failures)
}
