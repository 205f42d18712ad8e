//! Sesquicategories: 2-cells with whiskering and vertical composition
//! but no interchange law.

use std::collections::BTreeMap;

use crate::clone::LawCheck;
use crate::tensor::FiniteMonoid;

use super::category::{arrow, FiniteCategory};
use super::CatError;

/// A 2-cell `src ⇒ tgt` between parallel arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SesquiData {
    pub name: String,
    base: FiniteCategory,
    cells: Vec<Cell>,
    identity_cells: Vec<Option<usize>>,
    /// `(h, α) ↦ h·α`
    left: BTreeMap<(usize, usize), usize>,
    /// `(α, k) ↦ α·k`
    right: BTreeMap<(usize, usize), usize>,
    /// `(β, α) ↦ β∘α`
    vertical: BTreeMap<(usize, usize), usize>,
}

pub(crate) struct Checker {
    pub(crate) check: LawCheck,
}

impl Checker {
    pub(crate) fn new(law: &'static str) -> Self {
        Checker { check: LawCheck { law, instances: 0, skipped: 0, exhaustive: true, failure: None } }
    }

    /// Records one instance; returns false once a failure is recorded.
    pub(crate) fn instance(&mut self, outcome: Result<Option<String>, CatError>) -> bool {
        if self.check.failure.is_some() {
            return false;
        }
        self.check.instances += 1;
        match outcome {
            Ok(None) => true,
            Ok(Some(w)) => {
                self.check.failure = Some(w);
                false
            }
            Err(e) => {
                self.check.failure = Some(e.to_string());
                false
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub laws: Vec<LawCheck>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &str)> {
        self.laws.iter().filter_map(|l| l.failure.as_deref().map(|f| (l.law, f)))
    }

    pub fn law(&self, name: &str) -> Option<&LawCheck> {
        self.laws.iter().find(|l| l.law == name)
    }
}

impl SesquiData {
    /// No 2-cells yet.
    pub fn new(name: impl Into<String>, base: FiniteCategory) -> Self {
        let n = base.arrow_count();
        SesquiData {
            name: name.into(),
            base,
            cells: Vec::new(),
            identity_cells: vec![None; n],
            left: BTreeMap::new(),
            right: BTreeMap::new(),
            vertical: BTreeMap::new(),
        }
    }

    pub fn base(&self) -> &FiniteCategory {
        &self.base
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_name(&self, c: usize) -> &str {
        &self.cells[c].name
    }

    pub fn find_cell(&self, name: &str) -> Option<usize> {
        self.cells.iter().position(|c| c.name == name)
    }

    pub fn add_cell(&mut self, name: &str, src: usize, tgt: usize) -> Result<usize, CatError> {
        let (b, s, t) = (&self.base, src, tgt);
        if b.src(s) != b.src(t) || b.tgt(s) != b.tgt(t) {
            return Err(CatError::Malformed(format!(
                "`{}` and `{}` are not parallel",
                b.arrow_name(s),
                b.arrow_name(t)
            )));
        }
        if self.find_cell(name).is_some() {
            return Err(CatError::Malformed(format!("cell `{name}` declared twice")));
        }
        self.cells.push(Cell { name: name.to_string(), src, tgt });
        Ok(self.cells.len() - 1)
    }

    pub fn set_identity_cell(&mut self, f: usize, c: usize) -> Result<(), CatError> {
        if self.cells[c].src != f || self.cells[c].tgt != f {
            return Err(CatError::Malformed(format!(
                "`{}` is not a 2-cell `{f} => {f}`",
                self.cells[c].name,
                f = self.base.arrow_name(f)
            )));
        }
        self.identity_cells[f] = Some(c);
        Ok(())
    }

    /// Creates `id2_f` for every arrow without an identity 2-cell.
    pub fn complete_identity_cells(&mut self) {
        for f in 0..self.base.arrow_count() {
            if self.identity_cells[f].is_none() {
                let mut name = format!("id2_{}", self.base.arrow_name(f));
                while self.find_cell(&name).is_some() {
                    name.push('_');
                }
                self.cells.push(Cell { name, src: f, tgt: f });
                self.identity_cells[f] = Some(self.cells.len() - 1);
            }
        }
    }

    pub fn identity_cell(&self, f: usize) -> usize {
        self.identity_cells[f].expect("identity 2-cells are completed on construction")
    }

    fn cell_type_error(&self, what: String) -> CatError {
        CatError::Malformed(what)
    }

    pub fn set_whisker_left(&mut self, h: usize, a: usize, r: usize) -> Result<(), CatError> {
        let b = &self.base;
        let (f, g) = (self.cells[a].src, self.cells[a].tgt);
        let (Some(hf), Some(hg)) = (b.compose(h, f), b.compose(h, g)) else {
            return Err(CatError::NotComposable(b.arrow_name(h).into(), self.cells[a].name.clone()));
        };
        if self.cells[r].src != hf || self.cells[r].tgt != hg {
            return Err(self.cell_type_error(format!(
                "`{}.{} = {}` has the wrong type",
                b.arrow_name(h),
                self.cells[a].name,
                self.cells[r].name
            )));
        }
        self.left.insert((h, a), r);
        Ok(())
    }

    pub fn set_whisker_right(&mut self, a: usize, k: usize, r: usize) -> Result<(), CatError> {
        let b = &self.base;
        let (f, g) = (self.cells[a].src, self.cells[a].tgt);
        let (Some(fk), Some(gk)) = (b.compose(f, k), b.compose(g, k)) else {
            return Err(CatError::NotComposable(self.cells[a].name.clone(), b.arrow_name(k).into()));
        };
        if self.cells[r].src != fk || self.cells[r].tgt != gk {
            return Err(self.cell_type_error(format!(
                "`{}.{} = {}` has the wrong type",
                self.cells[a].name,
                b.arrow_name(k),
                self.cells[r].name
            )));
        }
        self.right.insert((a, k), r);
        Ok(())
    }

    pub fn set_vertical(&mut self, beta: usize, alpha: usize, r: usize) -> Result<(), CatError> {
        let (a, b) = (&self.cells[alpha], &self.cells[beta]);
        if a.tgt != b.src {
            return Err(CatError::NotComposable(b.name.clone(), a.name.clone()));
        }
        if self.cells[r].src != a.src || self.cells[r].tgt != b.tgt {
            return Err(
                self.cell_type_error(format!("`{}.{} = {}` has the wrong type", b.name, a.name, self.cells[r].name))
            );
        }
        self.vertical.insert((beta, alpha), r);
        Ok(())
    }

    /// Fills every missing entry that a unit law determines.
    pub fn complete_units(&mut self) {
        let b = self.base.clone();
        for a in 0..self.cells.len() {
            let (f, g) = (self.cells[a].src, self.cells[a].tgt);
            self.left.entry((b.identity(b.tgt(f)), a)).or_insert(a);
            self.right.entry((a, b.identity(b.src(f)))).or_insert(a);
            self.vertical.entry((a, self.identity_cell(f))).or_insert(a);
            self.vertical.entry((self.identity_cell(g), a)).or_insert(a);
        }
        for f in 0..b.arrow_count() {
            let i = self.identity_cell(f);
            for h in 0..b.arrow_count() {
                if let Some(hf) = b.compose(h, f) {
                    let r = self.identity_cell(hf);
                    self.left.entry((h, i)).or_insert(r);
                }
                if let Some(fh) = b.compose(f, h) {
                    let r = self.identity_cell(fh);
                    self.right.entry((i, h)).or_insert(r);
                }
            }
        }
    }

    pub fn whisker_left(&self, h: usize, a: usize) -> Result<usize, CatError> {
        self.left
            .get(&(h, a))
            .copied()
            .ok_or_else(|| CatError::Undefined(format!("whiskL {}.{}", self.base.arrow_name(h), self.cells[a].name)))
    }

    pub fn whisker_right(&self, a: usize, k: usize) -> Result<usize, CatError> {
        self.right
            .get(&(a, k))
            .copied()
            .ok_or_else(|| CatError::Undefined(format!("whiskR {}.{}", self.cells[a].name, self.base.arrow_name(k))))
    }

    pub fn vertical(&self, beta: usize, alpha: usize) -> Result<usize, CatError> {
        self.vertical
            .get(&(beta, alpha))
            .copied()
            .ok_or_else(|| CatError::Undefined(format!("vcomp {}.{}", self.cells[beta].name, self.cells[alpha].name)))
    }

    pub fn whisker_left_entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.left.iter().map(|(k, v)| (*k, *v))
    }

    pub fn whisker_right_entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.right.iter().map(|(k, v)| (*k, *v))
    }

    pub fn vertical_entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.vertical.iter().map(|(k, v)| (*k, *v))
    }

    fn composable_after(&self, f: usize) -> impl Iterator<Item = usize> + '_ {
        let t = self.base.tgt(f);
        (0..self.base.arrow_count()).filter(move |&h| self.base.src(h) == t)
    }

    fn composable_before(&self, f: usize) -> impl Iterator<Item = usize> + '_ {
        let s = self.base.src(f);
        (0..self.base.arrow_count()).filter(move |&k| self.base.tgt(k) == s)
    }

    /// Only identity 2-cells.
    pub fn locally_discrete(base: FiniteCategory) -> Self {
        let mut s = SesquiData::new(format!("{}_discrete", base.name), base);
        s.complete_identity_cells();
        s.complete_units();
        s
    }

    /// One object, one arrow, and the elements of `m` as 2-cells under
    /// vertical composition `β∘α = β·α`.
    pub fn from_monoid_cells(m: &FiniteMonoid) -> Self {
        let base = FiniteCategory::from_fn("point", vec!["o".into()], vec![arrow("id_o", 0, 0)], vec![0], |_, _| 0)
            .expect("one-arrow category");
        let mut s = SesquiData::new(format!("{}_cells", m.name), base);
        for x in 0..m.order() {
            s.add_cell(&format!("c{x}"), 0, 0).expect("parallel");
        }
        s.set_identity_cell(0, m.unit()).expect("endo-cell");
        for x in 0..m.order() {
            for y in 0..m.order() {
                s.set_vertical(x, y, m.mul(x, y)).expect("typed");
            }
        }
        s.complete_units();
        s
    }

    /// The free sesquicategory on `alpha : f => g` with `f, g : a -> b` and
    /// `beta : h => k` with `h, k : b -> c`. The two composites
    /// `beta_g.h_alpha` and `k_alpha.beta_f` are distinct cells unless
    /// `identify` is set.
    pub fn free_on_two_cells(identify: bool) -> Self {
        let objects = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let names = [
            ("id_a", 0, 0),
            ("id_b", 1, 1),
            ("id_c", 2, 2),
            ("f", 0, 1),
            ("g", 0, 1),
            ("h", 1, 2),
            ("k", 1, 2),
            ("hf", 0, 2),
            ("hg", 0, 2),
            ("kf", 0, 2),
            ("kg", 0, 2),
        ];
        let arrows = names.iter().map(|&(n, s, t)| arrow(n, s, t)).collect();
        let base = FiniteCategory::from_fn("two_cells", objects, arrows, vec![0, 1, 2], |g, f| match (g, f) {
            (x, y) if x <= 2 => y,
            (x, y) if y <= 2 => x,
            (5, 3) => 7,
            (5, 4) => 8,
            (6, 3) => 9,
            (6, 4) => 10,
            _ => unreachable!("no other composable pairs"),
        })
        .expect("free category on two composable parallel pairs");
        let name = if identify { "two_cells_2cat" } else { "two_cells_free" };
        let mut s = SesquiData::new(name, base);
        let cell = |s: &mut SesquiData, n: &str, a: usize, b: usize| s.add_cell(n, a, b).expect("parallel arrows");
        let alpha = cell(&mut s, "alpha", 3, 4);
        let beta = cell(&mut s, "beta", 5, 6);
        let h_alpha = cell(&mut s, "h_alpha", 7, 8);
        let k_alpha = cell(&mut s, "k_alpha", 9, 10);
        let beta_f = cell(&mut s, "beta_f", 7, 9);
        let beta_g = cell(&mut s, "beta_g", 8, 10);
        let (first, second) = if identify {
            let c = cell(&mut s, "beta_alpha", 7, 10);
            (c, c)
        } else {
            (cell(&mut s, "beta_g_h_alpha", 7, 10), cell(&mut s, "k_alpha_beta_f", 7, 10))
        };
        s.complete_identity_cells();
        s.set_whisker_left(5, alpha, h_alpha).expect("typed");
        s.set_whisker_left(6, alpha, k_alpha).expect("typed");
        s.set_whisker_right(beta, 3, beta_f).expect("typed");
        s.set_whisker_right(beta, 4, beta_g).expect("typed");
        s.set_vertical(beta_g, h_alpha, first).expect("typed");
        s.set_vertical(k_alpha, beta_f, second).expect("typed");
        s.complete_units();
        s
    }
}

/// Checks totality of the tables, the unit and associativity laws of
/// whiskering and vertical composition, and their compatibility.
pub fn sesqui_validate(s: &SesquiData) -> StructureReport {
    let b = &s.base;
    let n = b.arrow_count();
    let cells = 0..s.cells.len();
    let mut laws = Vec::new();
    let name = |c: usize| s.cells[c].name.as_str();
    let arr = |f: usize| b.arrow_name(f);

    let mut ch = Checker::new("tables are total");
    'total: for a in cells.clone() {
        let (f, g) = (s.cells[a].src, s.cells[a].tgt);
        for h in s.composable_after(f) {
            if !ch.instance(s.whisker_left(h, a).map(|_| None)) {
                break 'total;
            }
        }
        for k in s.composable_before(f) {
            if !ch.instance(s.whisker_right(a, k).map(|_| None)) {
                break 'total;
            }
        }
        for c in cells.clone().filter(|&c| s.cells[c].src == g) {
            if !ch.instance(s.vertical(c, a).map(|_| None)) {
                break 'total;
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("vertical unit");
    for a in cells.clone() {
        let (f, g) = (s.cells[a].src, s.cells[a].tgt);
        let r = (|| {
            let l = s.vertical(s.identity_cell(g), a)?;
            let r = s.vertical(a, s.identity_cell(f))?;
            Ok((l != a || r != a).then(|| format!("identity 2-cells do not fix `{}`", name(a))))
        })();
        if !ch.instance(r) {
            break;
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("vertical associativity");
    'va: for a in cells.clone() {
        for bb in cells.clone().filter(|&x| s.cells[x].src == s.cells[a].tgt) {
            for c in cells.clone().filter(|&x| s.cells[x].src == s.cells[bb].tgt) {
                let r = (|| {
                    let l = s.vertical(s.vertical(c, bb)?, a)?;
                    let r = s.vertical(c, s.vertical(bb, a)?)?;
                    Ok((l != r).then(|| {
                        format!("({}.{}).{} != {}.({}.{})", name(c), name(bb), name(a), name(c), name(bb), name(a))
                    }))
                })();
                if !ch.instance(r) {
                    break 'va;
                }
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("whiskering unit");
    for a in cells.clone() {
        let f = s.cells[a].src;
        let r = (|| {
            let l = s.whisker_left(b.identity(b.tgt(f)), a)?;
            let r = s.whisker_right(a, b.identity(b.src(f)))?;
            Ok((l != a).then(|| format!("whiskL {}.{} = {}", arr(b.identity(b.tgt(f))), name(a), name(l))).or_else(
                || (r != a).then(|| format!("whiskR {}.{} = {}", name(a), arr(b.identity(b.src(f))), name(r))),
            ))
        })();
        if !ch.instance(r) {
            break;
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("whiskering associativity");
    'wa: for a in cells.clone() {
        let f = s.cells[a].src;
        for h in s.composable_after(f).collect::<Vec<_>>() {
            for h2 in (0..n).filter(|&x| b.src(x) == b.tgt(h)) {
                let r = (|| {
                    let l = s.whisker_left(h2, s.whisker_left(h, a)?)?;
                    let r = s.whisker_left(b.compose(h2, h).unwrap(), a)?;
                    Ok((l != r).then(|| {
                        format!("{}.({}.{}) != ({}{}).{}", arr(h2), arr(h), name(a), arr(h2), arr(h), name(a))
                    }))
                })();
                if !ch.instance(r) {
                    break 'wa;
                }
            }
            for k in s.composable_before(f).collect::<Vec<_>>() {
                let r = (|| {
                    let l = s.whisker_right(s.whisker_left(h, a)?, k)?;
                    let r = s.whisker_left(h, s.whisker_right(a, k)?)?;
                    Ok((l != r)
                        .then(|| format!("({}.{}).{} != {}.({}.{})", arr(h), name(a), arr(k), arr(h), name(a), arr(k))))
                })();
                if !ch.instance(r) {
                    break 'wa;
                }
            }
        }
        for k in s.composable_before(f).collect::<Vec<_>>() {
            for k2 in (0..n).filter(|&x| b.tgt(x) == b.src(k)) {
                let r = (|| {
                    let l = s.whisker_right(s.whisker_right(a, k)?, k2)?;
                    let r = s.whisker_right(a, b.compose(k, k2).unwrap())?;
                    Ok((l != r).then(|| {
                        format!("({}.{}).{} != {}.({}{})", name(a), arr(k), arr(k2), name(a), arr(k), arr(k2))
                    }))
                })();
                if !ch.instance(r) {
                    break 'wa;
                }
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("whiskering preserves identities");
    'wi: for f in 0..n {
        let i = s.identity_cell(f);
        for h in s.composable_after(f).collect::<Vec<_>>() {
            let r = s.whisker_left(h, i).map(|x| {
                (x != s.identity_cell(b.compose(h, f).unwrap()))
                    .then(|| format!("whiskL {}.{} = {}", arr(h), name(i), name(x)))
            });
            if !ch.instance(r) {
                break 'wi;
            }
        }
        for k in s.composable_before(f).collect::<Vec<_>>() {
            let r = s.whisker_right(i, k).map(|x| {
                (x != s.identity_cell(b.compose(f, k).unwrap()))
                    .then(|| format!("whiskR {}.{} = {}", name(i), arr(k), name(x)))
            });
            if !ch.instance(r) {
                break 'wi;
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("whiskering preserves vertical composition");
    'wv: for a in cells.clone() {
        for bb in cells.clone().filter(|&x| s.cells[x].src == s.cells[a].tgt) {
            let f = s.cells[a].src;
            for h in s.composable_after(f).collect::<Vec<_>>() {
                let r = (|| {
                    let l = s.whisker_left(h, s.vertical(bb, a)?)?;
                    let r = s.vertical(s.whisker_left(h, bb)?, s.whisker_left(h, a)?)?;
                    Ok((l != r).then(|| {
                        format!(
                            "{}.({}.{}) != ({}.{}).({}.{})",
                            arr(h),
                            name(bb),
                            name(a),
                            arr(h),
                            name(bb),
                            arr(h),
                            name(a)
                        )
                    }))
                })();
                if !ch.instance(r) {
                    break 'wv;
                }
            }
            for k in s.composable_before(f).collect::<Vec<_>>() {
                let r = (|| {
                    let l = s.whisker_right(s.vertical(bb, a)?, k)?;
                    let r = s.vertical(s.whisker_right(bb, k)?, s.whisker_right(a, k)?)?;
                    Ok((l != r).then(|| {
                        format!(
                            "({}.{}).{} != ({}.{}).({}.{})",
                            name(bb),
                            name(a),
                            arr(k),
                            name(bb),
                            arr(k),
                            name(a),
                            arr(k)
                        )
                    }))
                })();
                if !ch.instance(r) {
                    break 'wv;
                }
            }
        }
    }
    laws.push(ch.check);

    StructureReport { laws }
}

/// Both sides of the interchange square for `alpha : f => g` (on `a -> b`)
/// and `beta : h => k` (on `b -> c`): `beta_g ∘ h_alpha` and
/// `k_alpha ∘ beta_f`.
pub fn interchange_sides(s: &SesquiData, alpha: usize, beta: usize) -> Result<(usize, usize), CatError> {
    let b = &s.base;
    let (f, g) = (s.cells[alpha].src, s.cells[alpha].tgt);
    let (h, k) = (s.cells[beta].src, s.cells[beta].tgt);
    if b.src(h) != b.tgt(f) {
        return Err(CatError::NotComposable(s.cells[beta].name.clone(), s.cells[alpha].name.clone()));
    }
    let lhs = s.vertical(s.whisker_right(beta, g)?, s.whisker_left(h, alpha)?)?;
    let rhs = s.vertical(s.whisker_left(k, alpha)?, s.whisker_right(beta, f)?)?;
    Ok((lhs, rhs))
}

pub fn sesqui_interchange(s: &SesquiData, alpha: usize, beta: usize) -> Result<bool, CatError> {
    let (l, r) = interchange_sides(s, alpha, beta)?;
    Ok(l == r)
}

/// All horizontally composable `(alpha, beta)` whose interchange square
/// fails, in cell order.
pub fn interchange_failures(s: &SesquiData) -> Result<Vec<(usize, usize)>, CatError> {
    let mut out = Vec::new();
    for alpha in 0..s.cells.len() {
        for beta in 0..s.cells.len() {
            if s.base.src(s.cells[beta].src) == s.base.tgt(s.cells[alpha].src) && !sesqui_interchange(s, alpha, beta)? {
                out.push((alpha, beta));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCategoryReport {
    pub interchange_failures: Vec<(usize, usize)>,
    /// Laws of the horizontal composition `beta * alpha = beta_g ∘ h_alpha`.
    pub horizontal: StructureReport,
}

impl TwoCategoryReport {
    pub fn holds(&self) -> bool {
        self.interchange_failures.is_empty() && self.horizontal.passed()
    }
}

/// Decides whether the data is a 2-category: interchange holds for every
/// pair, and the horizontal composition it induces is associative, unital,
/// satisfies the middle-four law and restricts to whiskering.
pub fn is_2_category(s: &SesquiData) -> Result<TwoCategoryReport, CatError> {
    let failures = interchange_failures(s)?;
    let b = &s.base;
    let cells: Vec<usize> = (0..s.cells.len()).collect();
    let name = |c: usize| s.cells[c].name.as_str();
    let hcomp = |beta: usize, alpha: usize| interchange_sides(s, alpha, beta).map(|p| p.0);
    let after = |a: usize| -> Vec<usize> {
        cells.iter().copied().filter(|&x| b.src(s.cells[x].src) == b.tgt(s.cells[a].src)).collect()
    };
    let mut laws = Vec::new();

    let mut ch = Checker::new("horizontal associativity");
    'ha: for &a in &cells {
        for bb in after(a) {
            for c in after(bb) {
                let r = (|| {
                    let l = hcomp(hcomp(c, bb)?, a)?;
                    let r = hcomp(c, hcomp(bb, a)?)?;
                    Ok((l != r).then(|| {
                        format!("({}*{})*{} != {}*({}*{})", name(c), name(bb), name(a), name(c), name(bb), name(a))
                    }))
                })();
                if !ch.instance(r) {
                    break 'ha;
                }
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("horizontal unit");
    for &a in &cells {
        let f = s.cells[a].src;
        let r = (|| {
            let l = hcomp(s.identity_cell(b.identity(b.tgt(f))), a)?;
            let r = hcomp(a, s.identity_cell(b.identity(b.src(f))))?;
            Ok((l != a || r != a).then(|| format!("identity 2-cells of identities do not fix `{}`", name(a))))
        })();
        if !ch.instance(r) {
            break;
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("middle four interchange");
    'mf: for &a in &cells {
        for bb in cells.iter().copied().filter(|&x| s.cells[x].src == s.cells[a].tgt) {
            for c in after(a) {
                for d in cells.iter().copied().filter(|&x| s.cells[x].src == s.cells[c].tgt) {
                    let r = (|| {
                        let l = hcomp(s.vertical(d, c)?, s.vertical(bb, a)?)?;
                        let r = s.vertical(hcomp(d, bb)?, hcomp(c, a)?)?;
                        Ok((l != r).then(|| {
                            format!(
                                "({}.{})*({}.{}) != ({}*{}).({}*{})",
                                name(d),
                                name(c),
                                name(bb),
                                name(a),
                                name(d),
                                name(bb),
                                name(c),
                                name(a)
                            )
                        }))
                    })();
                    if !ch.instance(r) {
                        break 'mf;
                    }
                }
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("whiskering is horizontal composition with identities");
    'wh: for &a in &cells {
        let f = s.cells[a].src;
        for h in s.composable_after(f).collect::<Vec<_>>() {
            let r = (|| {
                let l = s.whisker_left(h, a)?;
                let r = hcomp(s.identity_cell(h), a)?;
                Ok((l != r)
                    .then(|| format!("whiskL {}.{} differs from the horizontal composite", b.arrow_name(h), name(a))))
            })();
            if !ch.instance(r) {
                break 'wh;
            }
        }
        for k in s.composable_before(f).collect::<Vec<_>>() {
            let r = (|| {
                let l = s.whisker_right(a, k)?;
                let r = hcomp(a, s.identity_cell(k))?;
                Ok((l != r)
                    .then(|| format!("whiskR {}.{} differs from the horizontal composite", name(a), b.arrow_name(k))))
            })();
            if !ch.instance(r) {
                break 'wh;
            }
        }
    }
    laws.push(ch.check);

    Ok(TwoCategoryReport { interchange_failures: failures, horizontal: StructureReport { laws } })
}
