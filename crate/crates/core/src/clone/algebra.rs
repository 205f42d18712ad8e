//! Finite algebras and the clones of functions they determine.

use std::collections::HashMap;
use std::sync::Arc;

use crate::syntax::{render_list, Cursor, ParseError};
use crate::term::{next_tuple, FinMap, Signature};

use super::{CloneError, CloneOps, CloneTruncation};

/// A carrier `{0..k}` with one row-major table per operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub signature: Signature,
    carrier: usize,
    tables: Vec<Vec<usize>>,
}

impl FiniteAlgebra {
    pub fn new(signature: Signature, carrier: usize, tables: Vec<Vec<usize>>) -> Result<Self, CloneError> {
        if tables.len() != signature.len() {
            return Err(CloneError::TableSize {
                symbol: "<signature>".into(),
                expected: signature.len(),
                found: tables.len(),
            });
        }
        for ((symbol, arity), t) in signature.ops().zip(&tables) {
            let expected = carrier.pow(arity as u32);
            if t.len() != expected {
                return Err(CloneError::TableSize { symbol: symbol.into(), expected, found: t.len() });
            }
            if let Some(&value) = t.iter().find(|&&v| v >= carrier) {
                return Err(CloneError::ValueOutOfRange { value, carrier });
            }
        }
        Ok(FiniteAlgebra { signature, carrier, tables })
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn tables(&self) -> &[Vec<usize>] {
        &self.tables
    }

    pub fn table(&self, symbol: &str) -> Option<&[usize]> {
        self.signature.index_of(symbol).map(|i| self.tables[i].as_slice())
    }

    /// `(arity, table)` of a named operation.
    pub fn operation(&self, symbol: &str) -> Result<(usize, &[usize]), CloneError> {
        let i = self.signature.index_of(symbol).ok_or_else(|| CloneError::UnknownSymbol(symbol.into()))?;
        Ok((self.signature.op(i).1, &self.tables[i]))
    }
}

/// `algebra NAME { carrier k; op f/n = [...]; ... }`
pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, ParseError> {
    let mut cur = Cursor::new(text)?;
    let name = cur.header("algebra")?;
    let mut carrier = None;
    let mut sig = Signature::new(name);
    let mut tables = Vec::new();
    while !cur.eat_punct("}") {
        let (key, pos) = cur.ident()?;
        match key.as_str() {
            "carrier" => carrier = Some(cur.usize()?),
            "op" => {
                let (sym, spos) = cur.ident()?;
                cur.expect_punct("/")?;
                let arity = cur.usize()?;
                cur.expect_punct("=")?;
                let tpos = cur.pos();
                let table = cur.nat_list()?;
                let k = carrier.ok_or_else(|| ParseError::new(spos, "`carrier` must precede operations"))?;
                let expected = k.pow(arity as u32);
                if table.len() != expected {
                    return Err(ParseError::new(
                        tpos,
                        format!("table for `{sym}` has {} entries, expected {expected}", table.len()),
                    ));
                }
                if let Some(v) = table.iter().find(|&&v| v >= k) {
                    return Err(ParseError::new(tpos, format!("value {v} outside carrier of size {k}")));
                }
                sig.add_op(sym.clone(), arity)
                    .map_err(|_| ParseError::new(spos, format!("duplicate operation `{sym}`")))?;
                tables.push(table);
            }
            other => return Err(ParseError::new(pos, format!("unknown item `{other}`"))),
        }
        cur.expect_punct(";")?;
    }
    let end = cur.pos();
    cur.finish()?;
    let carrier = carrier.ok_or_else(|| ParseError::new(end, "missing `carrier`"))?;
    FiniteAlgebra::new(sig, carrier, tables).map_err(|e| ParseError::new(end, e.to_string()))
}

pub fn render_algebra(alg: &FiniteAlgebra) -> String {
    let mut out = format!("algebra {} {{\n  carrier {};\n", alg.signature.name, alg.carrier);
    for ((sym, arity), t) in alg.signature.ops().zip(&alg.tables) {
        out.push_str(&format!("  op {sym}/{arity} = {};\n", render_list(t)));
    }
    out.push_str("}\n");
    out
}

/// A clone whose elements of arity `n` are function tables `k^n → k`.
#[derive(Debug, Clone)]
pub struct FunctionClone {
    carrier: usize,
    elems: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    units: Vec<Vec<usize>>,
}

fn projection(k: usize, n: usize, i: usize) -> Vec<usize> {
    let len = k.pow(n as u32);
    (0..len).map(|x| (x / k.pow((n - 1 - i) as u32)) % k).collect()
}

fn decode(mut x: usize, k: usize, n: usize, out: &mut [usize]) {
    for slot in out[..n].iter_mut().rev() {
        *slot = x % k;
        x /= k;
    }
}

impl FunctionClone {
    /// Builds from per-arity lists of tables, which must contain the
    /// projections. Repeated tables keep their first position.
    pub fn from_tables(carrier: usize, lists: Vec<Vec<Vec<usize>>>) -> Self {
        let mut elems = Vec::new();
        let mut index = Vec::new();
        let mut units = Vec::new();
        for (n, list) in lists.into_iter().enumerate() {
            let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut unique = Vec::new();
            for t in list {
                if !seen.contains_key(&t) {
                    seen.insert(t.clone(), unique.len());
                    unique.push(t);
                }
            }
            units.push((0..n).map(|i| seen[&projection(carrier, n, i)]).collect());
            elems.push(unique);
            index.push(seen);
        }
        FunctionClone { carrier, elems, index, units }
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn table(&self, n: usize, id: usize) -> &[usize] {
        &self.elems[n][id]
    }

    pub fn find(&self, n: usize, table: &[usize]) -> Option<usize> {
        self.index.get(n)?.get(table).copied()
    }

    fn compose(&self, f: &[usize], gs: &[&[usize]], m: usize) -> Vec<usize> {
        let k = self.carrier;
        (0..k.pow(m as u32)).map(|x| f[gs.iter().fold(0, |acc, g| acc * k + g[x])]).collect()
    }
}

impl CloneOps for FunctionClone {
    fn bound(&self) -> usize {
        self.elems.len() - 1
    }

    fn size(&self, n: usize) -> usize {
        self.elems[n].len()
    }

    fn act(&self, u: &FinMap, f: usize) -> Result<usize, CloneError> {
        let (n, m, k) = (u.dom(), u.cod(), self.carrier);
        let table = &self.elems[n][f];
        let mut args = vec![0; m.max(1)];
        let out: Vec<usize> = (0..k.pow(m as u32))
            .map(|x| {
                decode(x, k, m, &mut args);
                let idx = (0..n).fold(0, |acc, i| acc * k + args[u.apply(i)]);
                table[idx]
            })
            .collect();
        self.find(m, &out).ok_or(CloneError::NotClosed { arity: m })
    }

    fn unit(&self, n: usize, i: usize) -> usize {
        self.units[n][i]
    }

    fn subst(&self, n: usize, f: usize, m: usize, gs: &[usize]) -> Result<usize, CloneError> {
        let gt: Vec<&[usize]> = gs.iter().map(|&g| self.elems[m][g].as_slice()).collect();
        let out = self.compose(&self.elems[n][f], &gt, m);
        self.find(m, &out).ok_or(CloneError::NotClosed { arity: m })
    }

    fn describe(&self, n: usize, f: usize) -> String {
        render_list(&self.elems[n][f])
    }
}

/// Default cap on the number of elements of one arity.
pub const CLOSURE_CEILING: usize = 100_000;

pub fn clone_of_algebra(alg: &FiniteAlgebra, bound: usize) -> Result<CloneTruncation, CloneError> {
    clone_of_algebra_with(alg, bound, CLOSURE_CEILING)
}

/// The term operations of `alg` of arity `≤ bound`. Each arity starts
/// with the projections, then adds new functions round by round: in each
/// round the operations are tried in declaration order on argument tuples
/// in lexicographic order that involve at least one element from the
/// previous round.
///
/// Every function on a finite set is a composite of binary ones, so once
/// the binary part holds all binary functions, each higher arity is listed
/// directly: projections, then all other tables in lexicographic order.
pub fn clone_of_algebra_with(alg: &FiniteAlgebra, bound: usize, ceiling: usize) -> Result<CloneTruncation, CloneError> {
    let k = alg.carrier;
    if k == 0 {
        return Err(CloneError::EmptyCarrier);
    }
    let all_of = |n: usize| u32::try_from(k.pow(n as u32)).ok().and_then(|l| k.checked_pow(l));
    let mut elems: Vec<Vec<Vec<usize>>> = Vec::new();
    for n in 0..=bound {
        let len = k.pow(n as u32);
        // every function of this arity: nothing further can be added
        let full = all_of(n);
        let mut list: Vec<Vec<usize>> = Vec::new();
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for i in 0..n {
            let t = projection(k, n, i);
            if !seen.contains_key(&t) {
                seen.insert(t.clone(), list.len());
                list.push(t);
            }
        }
        if n > 2 && elems.get(2).map(Vec::len) == all_of(2) {
            if full.is_none_or(|f| f > ceiling) {
                return Err(CloneError::ClosureCeiling { arity: n, reached: ceiling, ceiling });
            }
            let mut t = vec![0; len];
            loop {
                if !seen.contains_key(&t) {
                    list.push(t.clone());
                }
                if !next_tuple(&mut t, k) {
                    break;
                }
            }
            elems.push(list);
            continue;
        }
        // elements at index >= fresh were added in the previous round
        let mut fresh = 0;
        let mut round = 0;
        loop {
            let snapshot = list.len();
            for ((_, arity), table) in alg.signature.ops().zip(&alg.tables) {
                if Some(list.len()) == full {
                    break;
                }
                if arity == 0 {
                    let t = vec![table[0]; len];
                    if round == 0 && !seen.contains_key(&t) {
                        seen.insert(t.clone(), list.len());
                        list.push(t);
                    }
                    continue;
                }
                if snapshot == 0 {
                    continue;
                }
                let mut args = vec![0; arity];
                let mut out = vec![0; len];
                loop {
                    // jump past tuples built only from older elements; the
                    // remaining tuples are still visited in lexicographic order
                    if args.iter().all(|&a| a < fresh) {
                        args[arity - 1] = fresh;
                    }
                    for (x, slot) in out.iter_mut().enumerate() {
                        *slot = table[args.iter().fold(0, |acc, &a| acc * k + list[a][x])];
                    }
                    if !seen.contains_key(&out) {
                        if list.len() >= ceiling {
                            return Err(CloneError::ClosureCeiling { arity: n, reached: list.len(), ceiling });
                        }
                        seen.insert(out.clone(), list.len());
                        list.push(out.clone());
                        if Some(list.len()) == full {
                            break;
                        }
                    }
                    if !next_tuple(&mut args, snapshot) {
                        break;
                    }
                }
            }
            if list.len() == snapshot || Some(list.len()) == full {
                break;
            }
            fresh = snapshot;
            round += 1;
        }
        elems.push(list);
    }
    Ok(CloneTruncation::new(format!("clone_{}", alg.signature.name), Arc::new(FunctionClone::from_tables(k, elems))))
}

/// First `n × m` matrix (row-major) on which `f(g(rows)) ≠ g(f(columns))`,
/// for concrete function tables.
pub fn commutation_witness(k: usize, f: &[usize], n: usize, g: &[usize], m: usize) -> Option<Vec<usize>> {
    if k == 0 && n * m > 0 {
        return None;
    }
    let mut x = vec![0; n * m];
    loop {
        let rows: Vec<usize> = (0..n).map(|i| g[(0..m).fold(0, |acc, j| acc * k + x[i * m + j])]).collect();
        let cols: Vec<usize> = (0..m).map(|j| f[(0..n).fold(0, |acc, i| acc * k + x[i * m + j])]).collect();
        let lhs = f[rows.iter().fold(0, |acc, &r| acc * k + r)];
        let rhs = g[cols.iter().fold(0, |acc, &c| acc * k + c)];
        if lhs != rhs {
            return Some(x);
        }
        if !next_tuple(&mut x, k) {
            return None;
        }
    }
}

/// All functions `k^n → k` (for `n ≤ bound`) commuting with every
/// operation of `base`, in lexicographic order of their tables.
pub fn centralizer_clone(base: &FiniteAlgebra, bound: usize) -> Result<CloneTruncation, CloneError> {
    let k = base.carrier;
    if k == 0 {
        return Err(CloneError::EmptyCarrier);
    }
    let mut elems = Vec::new();
    for n in 0..=bound {
        let len = k.pow(n as u32);
        let total = (k as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
        if total > CLOSURE_CEILING as u128 * 10 {
            return Err(CloneError::ClosureCeiling { arity: n, reached: 0, ceiling: CLOSURE_CEILING * 10 });
        }
        let mut list: Vec<Vec<usize>> = (0..n).map(|i| projection(k, n, i)).collect();
        let mut t = vec![0; len];
        loop {
            let commutes =
                base.signature.ops().zip(&base.tables).all(|((_, m), g)| commutation_witness(k, &t, n, g, m).is_none());
            if commutes {
                list.push(t.clone());
            }
            if !next_tuple(&mut t, k) {
                break;
            }
        }
        elems.push(list);
    }
    Ok(CloneTruncation::new(
        format!("centralizer_{}", base.signature.name),
        Arc::new(FunctionClone::from_tables(k, elems)),
    ))
}
