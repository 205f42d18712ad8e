//! Finite monoids, commuting cospans, centralizers, and the universal
//! property of the product as the commuting tensor.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::syntax::{render_list, Cursor, ParseError};
use crate::term::FinMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("value {0} outside the carrier")]
    OutOfRange(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("{0} is not a two-sided unit")]
    NotUnit(usize),
    #[error("map is not a monoid homomorphism at {0:?}")]
    NotHom(Vec<usize>),
    #[error("map has {found} entries, source has {expected} elements")]
    MapSize { expected: usize, found: usize },
    #[error("codomains differ")]
    CodomainMismatch,
    #[error("no monoid catalogue above order {0}")]
    Ceiling(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    pub name: String,
    order: usize,
    unit: usize,
    table: Vec<usize>,
}

impl FiniteMonoid {
    pub fn new(name: impl Into<String>, order: usize, unit: usize, table: Vec<usize>) -> Result<Self, MonoidError> {
        if table.len() != order * order {
            return Err(MonoidError::TableSize { expected: order * order, found: table.len() });
        }
        if let Some(&v) = table.iter().find(|&&v| v >= order) {
            return Err(MonoidError::OutOfRange(v));
        }
        if unit >= order {
            return Err(MonoidError::OutOfRange(unit));
        }
        let m = FiniteMonoid { name: name.into(), order, unit, table };
        for x in 0..order {
            if m.mul(unit, x) != x || m.mul(x, unit) != x {
                return Err(MonoidError::NotUnit(unit));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if m.mul(a, m.mul(b, c)) != m.mul(m.mul(a, b), c) {
                        return Err(MonoidError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn trivial() -> Self {
        FiniteMonoid { name: "trivial".into(), order: 1, unit: 0, table: vec![0] }
    }

    /// `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        FiniteMonoid { name: format!("z{n}"), order: n, unit: 0, table }
    }

    /// The symmetric group on `n` letters, elements in lexicographic order
    /// of their value lists, product `(a·b)(i) = a(b(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = FinMap::permutations(n);
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.values().to_vec(), i)).collect();
        let k = perms.len();
        let mut table = vec![0; k * k];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                table[a * k + b] = index[pb.then(pa).values()];
            }
        }
        FiniteMonoid { name: format!("s{n}"), order: k, unit: 0, table }
    }

    /// Cartesian product with unit `(e, e)`; `(a, b)` has index `a·|B| + b`.
    pub fn product(a: &FiniteMonoid, b: &FiniteMonoid) -> Self {
        let (ka, kb) = (a.order, b.order);
        let k = ka * kb;
        let mut table = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                table[x * k + y] = a.mul(x / kb, y / kb) * kb + b.mul(x % kb, y % kb);
            }
        }
        FiniteMonoid { name: format!("{}_x_{}", a.name, b.name), order: k, unit: a.unit * kb + b.unit, table }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Relabels elements along the bijection `perm` (old `i` becomes `perm[i]`).
    pub fn relabel(&self, perm: &[usize]) -> FiniteMonoid {
        let k = self.order;
        let mut table = vec![0; k * k];
        for a in 0..k {
            for b in 0..k {
                table[perm[a] * k + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteMonoid { name: self.name.clone(), order: k, unit: perm[self.unit], table }
    }
}

/// A monoid homomorphism `source → target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidMap<'a> {
    pub source: &'a FiniteMonoid,
    pub target: &'a FiniteMonoid,
    pub map: Vec<usize>,
}

impl<'a> MonoidMap<'a> {
    pub fn new(source: &'a FiniteMonoid, target: &'a FiniteMonoid, map: Vec<usize>) -> Result<Self, MonoidError> {
        if map.len() != source.order {
            return Err(MonoidError::MapSize { expected: source.order, found: map.len() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.order) {
            return Err(MonoidError::OutOfRange(v));
        }
        if map[source.unit] != target.unit {
            return Err(MonoidError::NotHom(vec![source.unit]));
        }
        for a in 0..source.order {
            for b in 0..source.order {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(MonoidError::NotHom(vec![a, b]));
                }
            }
        }
        Ok(MonoidMap { source, target, map })
    }

    pub fn identity(m: &'a FiniteMonoid) -> Self {
        MonoidMap { source: m, target: m, map: (0..m.order).collect() }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// First `(a, b)` with `f(a)·g(b) ≠ g(b)·f(a)`.
pub fn cospan_witness(f: &MonoidMap, g: &MonoidMap) -> Result<Option<(usize, usize)>, MonoidError> {
    if f.target != g.target {
        return Err(MonoidError::CodomainMismatch);
    }
    let c = f.target;
    for a in 0..f.source.order {
        for b in 0..g.source.order {
            let (x, y) = (f.apply(a), g.apply(b));
            if c.mul(x, y) != c.mul(y, x) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

pub fn monoid_cospan_commutes(f: &MonoidMap, g: &MonoidMap) -> Result<bool, MonoidError> {
    Ok(cospan_witness(f, g)?.is_none())
}

/// A submonoid given by its elements (ascending) and the induced monoid on
/// `0..elements.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submonoid {
    pub elements: Vec<usize>,
    pub monoid: FiniteMonoid,
}

impl Submonoid {
    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// `{m : m·f(n) = f(n)·m for all n}` with the induced multiplication.
pub fn monoid_centralizer(f: &MonoidMap) -> Submonoid {
    let m = f.target;
    let image = f.image();
    let elements: Vec<usize> = (0..m.order).filter(|&x| image.iter().all(|&y| m.mul(x, y) == m.mul(y, x))).collect();
    let pos: HashMap<usize, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let k = elements.len();
    let mut table = vec![0; k * k];
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            table[i * k + j] = pos[&m.mul(a, b)];
        }
    }
    let monoid = FiniteMonoid::new(format!("{}_centralizer", m.name), k, pos[&m.unit], table)
        .expect("centralizers are submonoids");
    Submonoid { elements, monoid }
}

/// All homomorphisms `a → b`, in lexicographic order of their tables.
pub fn monoid_homs(a: &FiniteMonoid, b: &FiniteMonoid) -> Vec<Vec<usize>> {
    fn consistent(a: &FiniteMonoid, b: &FiniteMonoid, map: &[Option<usize>]) -> bool {
        (0..a.order).all(|x| {
            (0..a.order).all(|y| match (map[x], map[y], map[a.mul(x, y)]) {
                (Some(fx), Some(fy), Some(fxy)) => b.mul(fx, fy) == fxy,
                _ => true,
            })
        })
    }
    fn go(a: &FiniteMonoid, b: &FiniteMonoid, map: &mut Vec<Option<usize>>, next: usize, out: &mut Vec<Vec<usize>>) {
        if next == a.order {
            out.push(map.iter().map(|v| v.expect("filled")).collect());
            return;
        }
        if next == a.unit {
            return go(a, b, map, next + 1, out);
        }
        for v in 0..b.order {
            map[next] = Some(v);
            if consistent(a, b, map) {
                go(a, b, map, next + 1, out);
            }
        }
        map[next] = None;
    }
    let mut out = Vec::new();
    let mut map = vec![None; a.order];
    map[a.unit] = Some(b.unit);
    if consistent(a, b, &map) {
        go(a, b, &mut map, 0, &mut out);
    }
    out
}

fn canonical(m: &FiniteMonoid) -> Vec<usize> {
    // relabel so the unit is 0, then take the lexicographically least table
    let k = m.order;
    let others: Vec<usize> = (0..k).filter(|&x| x != m.unit).collect();
    let mut best: Option<Vec<usize>> = None;
    for p in FinMap::permutations(others.len()) {
        let mut perm = vec![0; k];
        perm[m.unit] = 0;
        for (i, &x) in others.iter().enumerate() {
            perm[x] = p.apply(i) + 1;
        }
        let t = m.relabel(&perm).table;
        if best.as_ref().is_none_or(|b| t < *b) {
            best = Some(t);
        }
    }
    best.unwrap_or_default()
}

/// One representative per isomorphism class of monoids of the given
/// order, each with unit 0 and its lexicographically least table.
pub fn monoids_up_to_iso(order: usize) -> Result<Vec<FiniteMonoid>, MonoidError> {
    if order > 5 {
        return Err(MonoidError::Ceiling(5));
    }
    if order == 0 {
        return Ok(vec![]);
    }
    let k = order;
    let mut table = vec![usize::MAX; k * k];
    for x in 0..k {
        table[x] = x;
        table[x * k] = x;
    }
    let cells: Vec<usize> = (1..k).flat_map(|a| (1..k).map(move |b| a * k + b)).collect();
    let mut classes: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    fn assoc_ok(t: &[usize], k: usize) -> bool {
        for a in 0..k {
            for b in 0..k {
                let ab = t[a * k + b];
                if ab == usize::MAX {
                    continue;
                }
                for c in 0..k {
                    let bc = t[b * k + c];
                    if bc == usize::MAX {
                        continue;
                    }
                    let (l, r) = (t[ab * k + c], t[a * k + bc]);
                    if l != usize::MAX && r != usize::MAX && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(t: &mut Vec<usize>, k: usize, cells: &[usize], at: usize, out: &mut BTreeMap<Vec<usize>, ()>) {
        if at == cells.len() {
            let m = FiniteMonoid { name: String::new(), order: k, unit: 0, table: t.clone() };
            out.insert(canonical(&m), ());
            return;
        }
        for v in 0..k {
            t[cells[at]] = v;
            if assoc_ok(t, k) {
                go(t, k, cells, at + 1, out);
            }
        }
        t[cells[at]] = usize::MAX;
    }
    go(&mut table, k, &cells, 0, &mut classes);
    Ok(classes
        .into_keys()
        .enumerate()
        .map(|(i, table)| FiniteMonoid { name: format!("m{order}_{i}"), order, unit: 0, table })
        .collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UniversalReport {
    pub probes: usize,
    pub cospans_tested: usize,
    /// Homomorphisms out of the product checked while counting factorizations.
    pub factorizations: usize,
    pub failures: Vec<String>,
}

impl UniversalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `A × B` with `a ↦ (a, e)` and `b ↦ (e, b)` is universal among
/// commuting cospans into every monoid of order `≤ probe_bound` (one per
/// isomorphism class).
pub fn monoid_tensor_universal_check(
    a: &FiniteMonoid,
    b: &FiniteMonoid,
    probe_bound: usize,
) -> Result<UniversalReport, MonoidError> {
    let mut probes = Vec::new();
    for order in 1..=probe_bound {
        probes.extend(monoids_up_to_iso(order)?);
    }
    Ok(monoid_tensor_universal_check_with(a, b, &probes))
}

/// As [`monoid_tensor_universal_check`] against an explicit probe list.
pub fn monoid_tensor_universal_check_with(
    a: &FiniteMonoid,
    b: &FiniteMonoid,
    probes: &[FiniteMonoid],
) -> UniversalReport {
    let ab = FiniteMonoid::product(a, b);
    let kb = b.order;
    let in_a: Vec<usize> = (0..a.order).map(|x| x * kb + b.unit).collect();
    let in_b: Vec<usize> = (0..kb).map(|y| a.unit * kb + y).collect();
    let partial = crate::parallel::par_map(probes, |c| {
        let mut report = UniversalReport::default();
        // every hom out of the product, keyed by its two restrictions
        let mut factor_count: HashMap<(Vec<usize>, Vec<usize>), usize> = HashMap::new();
        for h in monoid_homs(&ab, c) {
            report.factorizations += 1;
            let f: Vec<usize> = in_a.iter().map(|&x| h[x]).collect();
            let g: Vec<usize> = in_b.iter().map(|&y| h[y]).collect();
            *factor_count.entry((f, g)).or_default() += 1;
        }
        let fs = monoid_homs(a, c);
        let gs = monoid_homs(b, c);
        for f in &fs {
            let fm = MonoidMap { source: a, target: c, map: f.clone() };
            for g in &gs {
                let gm = MonoidMap { source: b, target: c, map: g.clone() };
                let commutes = monoid_cospan_commutes(&fm, &gm).expect("same codomain");
                let count = factor_count.get(&(f.clone(), g.clone())).copied().unwrap_or(0);
                if commutes {
                    report.cospans_tested += 1;
                    // the candidate (a, b) ↦ f(a)·g(b) must be a hom and the only one
                    let candidate: Vec<usize> = (0..ab.order).map(|x| c.mul(f[x / kb], g[x % kb])).collect();
                    if MonoidMap::new(&ab, c, candidate).is_err() {
                        report.failures.push(format!("{}: f(a)g(b) is not a homomorphism for f={f:?} g={g:?}", c.name));
                    }
                    if count != 1 {
                        report.failures.push(format!("{}: cospan f={f:?} g={g:?} has {count} factorizations", c.name));
                    }
                } else if count != 0 {
                    report
                        .failures
                        .push(format!("{}: non-commuting cospan f={f:?} g={g:?} factors through the product", c.name));
                }
            }
        }
        report
    });
    let mut report = UniversalReport { probes: probes.len(), ..Default::default() };
    for part in partial {
        report.cospans_tested += part.cospans_tested;
        report.factorizations += part.factorizations;
        report.failures.extend(part.failures);
    }
    report
}

/// `monoid NAME { carrier k; unit e; table = [...]; }`
pub fn parse_monoid(text: &str) -> Result<FiniteMonoid, ParseError> {
    let mut cur = Cursor::new(text)?;
    let name = cur.header("monoid")?;
    let (mut carrier, mut unit, mut table) = (None, None, None);
    while !cur.eat_punct("}") {
        let (key, pos) = cur.ident()?;
        match key.as_str() {
            "carrier" => carrier = Some(cur.usize()?),
            "unit" => unit = Some(cur.usize()?),
            "table" => {
                cur.expect_punct("=")?;
                table = Some((cur.nat_list()?, cur.pos()));
            }
            other => return Err(ParseError::new(pos, format!("unknown item `{other}`"))),
        }
        cur.expect_punct(";")?;
    }
    let end = cur.pos();
    cur.finish()?;
    let carrier = carrier.ok_or_else(|| ParseError::new(end, "missing `carrier`"))?;
    let unit = unit.ok_or_else(|| ParseError::new(end, "missing `unit`"))?;
    let (table, tpos) = table.ok_or_else(|| ParseError::new(end, "missing `table`"))?;
    FiniteMonoid::new(name, carrier, unit, table).map_err(|e| ParseError::new(tpos, e.to_string()))
}

pub fn render_monoid(m: &FiniteMonoid) -> String {
    format!(
        "monoid {} {{\n  carrier {};\n  unit {};\n  table = {};\n}}\n",
        m.name,
        m.order,
        m.unit,
        render_list(&m.table)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotation_subgroup(s3: &FiniteMonoid) -> (FiniteMonoid, Vec<usize>) {
        // rotations of {0,1,2}: identity, [1,2,0], [2,0,1]
        let perms = FinMap::permutations(3);
        let idx = |v: [usize; 3]| perms.iter().position(|p| p.values() == v).unwrap();
        let incl = vec![idx([0, 1, 2]), idx([1, 2, 0]), idx([2, 0, 1])];
        assert_eq!(s3.mul(incl[1], incl[1]), incl[2]);
        (FiniteMonoid::cyclic(3), incl)
    }

    #[test]
    fn s3_cospans() {
        let s3 = FiniteMonoid::symmetric(3);
        assert_eq!(s3.order(), 6);
        let id = MonoidMap::identity(&s3);
        assert!(!monoid_cospan_commutes(&id, &id).unwrap());
        assert!(cospan_witness(&id, &id).unwrap().is_some());
        let (z3, incl) = rotation_subgroup(&s3);
        let f = MonoidMap::new(&z3, &s3, incl.clone()).unwrap();
        assert!(monoid_cospan_commutes(&f, &f).unwrap());
        let cent = monoid_centralizer(&f);
        assert_eq!(cent.elements.len(), 3);
        let mut sorted = incl;
        sorted.sort();
        assert_eq!(cent.elements, sorted);
        let centre = monoid_centralizer(&id);
        assert_eq!(centre.elements, vec![s3.unit()]);
    }

    #[test]
    fn centre_of_commutative_is_everything() {
        let z4 = FiniteMonoid::cyclic(4);
        assert_eq!(monoid_centralizer(&MonoidMap::identity(&z4)).elements, vec![0, 1, 2, 3]);
        assert!(z4.is_commutative());
    }

    #[test]
    fn iso_class_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| monoids_up_to_iso(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 35]);
    }

    #[test]
    fn homs_match_brute_force() {
        let ms: Vec<FiniteMonoid> = (1..=3).flat_map(|n| monoids_up_to_iso(n).unwrap()).collect();
        for a in &ms {
            for b in &ms {
                let brute: Vec<Vec<usize>> = FinMap::all(a.order(), b.order())
                    .map(|u| u.values().to_vec())
                    .filter(|m| MonoidMap::new(a, b, m.clone()).is_ok())
                    .collect();
                assert_eq!(monoid_homs(a, b), brute);
            }
        }
    }

    #[test]
    fn universal_property_small() {
        let z2 = FiniteMonoid::cyclic(2);
        let r = monoid_tensor_universal_check(&z2, &z2, 4).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.cospans_tested > 0);
        let t = FiniteMonoid::trivial();
        assert!(monoid_tensor_universal_check(&t, &t, 3).unwrap().passed());
    }

    #[test]
    fn z2_z3_factor_through_z6() {
        let (z2, z3, z6) = (FiniteMonoid::cyclic(2), FiniteMonoid::cyclic(3), FiniteMonoid::cyclic(6));
        let r = monoid_tensor_universal_check_with(&z2, &z3, std::slice::from_ref(&z6));
        assert!(r.passed());
        // inclusions a ↦ 3a, b ↦ 2b; the factorization is a bijection onto Z/6
        let h: Vec<usize> = (0..6).map(|x| z6.mul(3 * (x / 3), 2 * (x % 3))).collect();
        let mut image = h.clone();
        image.sort();
        assert_eq!(image, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn parse_and_render() {
        let text = "monoid z2 { carrier 2; unit 0; table = [0,1,1,0]; }";
        let m = parse_monoid(text).unwrap();
        assert_eq!(m, FiniteMonoid::cyclic(2));
        assert_eq!(parse_monoid(&render_monoid(&m)).unwrap(), m);
        let err = parse_monoid("monoid bad { carrier 2; unit 0; table = [0,0,0,0]; }").unwrap_err();
        assert!(err.message.contains("unit"), "{err}");
    }
}
