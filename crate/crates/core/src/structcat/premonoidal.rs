//! Premonoidal categories on finite data: separately functorial tensors,
//! central coherence constraints, centres and Freyd-categories.

use crate::tensor::FiniteMonoid;

use super::category::{arrow, FiniteCategory, Functor};
use super::sesqui::{Checker, StructureReport};
use super::CatError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PremonoidalData {
    pub name: String,
    base: FiniteCategory,
    unit: usize,
    tensor: Vec<usize>,
    /// `left[a][f] = a ⊗ f`
    left: Vec<Vec<Option<usize>>>,
    /// `right[b][f] = f ⊗ b`
    right: Vec<Vec<Option<usize>>>,
    lambda: Vec<Option<usize>>,
    rho: Vec<Option<usize>>,
    assoc: Vec<Option<usize>>,
}

/// Which of the two centrality squares fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `(a' ⊗ g) ∘ (f ⊗ b) = (f ⊗ b') ∘ (a ⊗ g)`
    Left,
    /// `(g ⊗ a') ∘ (b ⊗ f) = (b' ⊗ f) ∘ (g ⊗ a)`
    Right,
}

impl PremonoidalData {
    /// Tensor tables start with only the identity entries filled in.
    pub fn new(
        name: impl Into<String>,
        base: FiniteCategory,
        unit: usize,
        tensor: Vec<usize>,
    ) -> Result<Self, CatError> {
        let k = base.object_count();
        if unit >= k || tensor.len() != k * k || tensor.iter().any(|&t| t >= k) {
            return Err(CatError::Malformed("object tensor table does not match the objects".into()));
        }
        let n = base.arrow_count();
        let mut left = vec![vec![None; n]; k];
        let mut right = vec![vec![None; n]; k];
        for a in 0..k {
            for b in 0..k {
                left[a][base.identity(b)] = Some(base.identity(tensor[a * k + b]));
                right[b][base.identity(a)] = Some(base.identity(tensor[a * k + b]));
            }
        }
        Ok(PremonoidalData {
            name: name.into(),
            base,
            unit,
            tensor,
            left,
            right,
            lambda: vec![None; k],
            rho: vec![None; k],
            assoc: vec![None; k * k * k],
        })
    }

    fn expect_type(&self, f: usize, src: usize, tgt: usize, what: String) -> Result<(), CatError> {
        let b = &self.base;
        if b.src(f) != src || b.tgt(f) != tgt {
            return Err(CatError::Malformed(format!(
                "{what} must be an arrow {} -> {}, `{}` is not",
                b.objects()[src],
                b.objects()[tgt],
                b.arrow_name(f)
            )));
        }
        Ok(())
    }

    pub fn set_left(&mut self, a: usize, f: usize, g: usize) -> Result<(), CatError> {
        let (s, t) = (self.tensor_objects(a, self.base.src(f)), self.tensor_objects(a, self.base.tgt(f)));
        let what = format!("{} * {}", self.base.objects()[a], self.base.arrow_name(f));
        self.expect_type(g, s, t, what)?;
        self.left[a][f] = Some(g);
        Ok(())
    }

    pub fn set_right(&mut self, b: usize, f: usize, g: usize) -> Result<(), CatError> {
        let (s, t) = (self.tensor_objects(self.base.src(f), b), self.tensor_objects(self.base.tgt(f), b));
        let what = format!("{} * {}", self.base.arrow_name(f), self.base.objects()[b]);
        self.expect_type(g, s, t, what)?;
        self.right[b][f] = Some(g);
        Ok(())
    }

    pub fn set_lambda(&mut self, a: usize, f: usize) -> Result<(), CatError> {
        self.expect_type(f, self.tensor_objects(self.unit, a), a, format!("lambda {}", self.base.objects()[a]))?;
        self.lambda[a] = Some(f);
        Ok(())
    }

    pub fn set_rho(&mut self, a: usize, f: usize) -> Result<(), CatError> {
        self.expect_type(f, self.tensor_objects(a, self.unit), a, format!("rho {}", self.base.objects()[a]))?;
        self.rho[a] = Some(f);
        Ok(())
    }

    pub fn set_assoc(&mut self, a: usize, b: usize, c: usize, f: usize) -> Result<(), CatError> {
        let s = self.tensor_objects(self.tensor_objects(a, b), c);
        let t = self.tensor_objects(a, self.tensor_objects(b, c));
        let o = self.base.objects();
        self.expect_type(f, s, t, format!("assoc [{}, {}, {}]", o[a], o[b], o[c]))?;
        let k = self.base.object_count();
        self.assoc[(a * k + b) * k + c] = Some(f);
        Ok(())
    }

    /// Fills missing constraints with identities and rejects missing
    /// tensor entries.
    pub fn complete(&mut self) -> Result<(), CatError> {
        let k = self.base.object_count();
        let b = self.base.clone();
        let obj = |a: usize| b.objects()[a].clone();
        for a in 0..k {
            for f in 0..b.arrow_count() {
                if self.left[a][f].is_none() {
                    return Err(CatError::Undefined(format!("left {} * {}", obj(a), b.arrow_name(f))));
                }
                if self.right[a][f].is_none() {
                    return Err(CatError::Undefined(format!("right {} * {}", b.arrow_name(f), obj(a))));
                }
            }
        }
        let id = |x: usize, y: usize, what: String| {
            if x == y {
                Ok(b.identity(x))
            } else {
                Err(CatError::Undefined(what))
            }
        };
        for a in 0..k {
            if self.lambda[a].is_none() {
                self.lambda[a] = Some(id(self.tensor_objects(self.unit, a), a, format!("lambda {}", obj(a)))?);
            }
            if self.rho[a].is_none() {
                self.rho[a] = Some(id(self.tensor_objects(a, self.unit), a, format!("rho {}", obj(a)))?);
            }
            for bb in 0..k {
                for c in 0..k {
                    let i = (a * k + bb) * k + c;
                    if self.assoc[i].is_none() {
                        let s = self.tensor_objects(self.tensor_objects(a, bb), c);
                        let t = self.tensor_objects(a, self.tensor_objects(bb, c));
                        self.assoc[i] = Some(id(s, t, format!("assoc [{}, {}, {}]", obj(a), obj(bb), obj(c)))?);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &FiniteCategory {
        &self.base
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn tensor_objects(&self, a: usize, b: usize) -> usize {
        self.tensor[a * self.base.object_count() + b]
    }

    /// `a ⊗ f`
    pub fn left(&self, a: usize, f: usize) -> usize {
        self.left[a][f].expect("complete tensor table")
    }

    /// `f ⊗ b`
    pub fn right(&self, f: usize, b: usize) -> usize {
        self.right[b][f].expect("complete tensor table")
    }

    pub fn lambda(&self, a: usize) -> usize {
        self.lambda[a].expect("complete constraints")
    }

    pub fn rho(&self, a: usize) -> usize {
        self.rho[a].expect("complete constraints")
    }

    pub fn assoc(&self, a: usize, b: usize, c: usize) -> usize {
        let k = self.base.object_count();
        self.assoc[(a * k + b) * k + c].expect("complete constraints")
    }

    fn comp(&self, g: usize, f: usize) -> usize {
        self.base.compose(g, f).expect("typed composite")
    }

    /// A monoid as a one-object strict premonoidal category whose partial
    /// tensors are identities; it is monoidal exactly when the monoid is
    /// commutative.
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        let base = FiniteCategory::from_monoid(m);
        let mut p = PremonoidalData::new(m.name.clone(), base, 0, vec![0]).expect("one object");
        for f in 0..m.order() {
            p.set_left(0, f, f).expect("typed");
            p.set_right(0, f, f).expect("typed");
        }
        p.complete().expect("identity constraints");
        p
    }

    /// Objects `i` (the unit, with only its identity) and `x = x ⊗ x`
    /// whose endomorphisms are the elements of `m`; both partial tensors
    /// act as the identity on `End(x)`.
    pub fn pointed_monoid(m: &FiniteMonoid) -> Self {
        let mut arrows = vec![arrow("id_i", 0, 0)];
        let mut of_elem = vec![0; m.order()];
        for x in 0..m.order() {
            of_elem[x] = arrows.len();
            let name = if x == m.unit() { "id_x".to_string() } else { format!("m{x}") };
            arrows.push(arrow(&name, 1, 1));
        }
        let mut elem_of = vec![usize::MAX; arrows.len()];
        for (x, &a) in of_elem.iter().enumerate() {
            elem_of[a] = x;
        }
        let name = format!("{}_pointed", m.name);
        let base = FiniteCategory::from_fn(
            name.clone(),
            vec!["i".into(), "x".into()],
            arrows,
            vec![0, of_elem[m.unit()]],
            |g, f| if g == 0 { f } else { of_elem[m.mul(elem_of[g], elem_of[f])] },
        )
        .expect("a monoid with an adjoined unit object");
        let mut p = PremonoidalData::new(name, base, 0, vec![0, 1, 1, 1]).expect("objects");
        for &f in &of_elem {
            for a in 0..2 {
                p.set_left(a, f, f).expect("typed");
                p.set_right(a, f, f).expect("typed");
            }
        }
        p.complete().expect("identity constraints");
        p
    }
}

/// The first arrow `g` that `f` fails to commute with, and which square
/// fails.
pub fn centrality_witness(p: &PremonoidalData, f: usize) -> Option<(usize, Side)> {
    let b = &p.base;
    let (a, a2) = (b.src(f), b.tgt(f));
    for g in 0..b.arrow_count() {
        let (x, x2) = (b.src(g), b.tgt(g));
        if p.comp(p.left(a2, g), p.right(f, x)) != p.comp(p.right(f, x2), p.left(a, g)) {
            return Some((g, Side::Left));
        }
        if p.comp(p.right(g, a2), p.left(x, f)) != p.comp(p.left(x2, f), p.right(g, a)) {
            return Some((g, Side::Right));
        }
    }
    None
}

pub fn is_central(p: &PremonoidalData, f: usize) -> bool {
    centrality_witness(p, f).is_none()
}

pub fn central_arrows(p: &PremonoidalData) -> Vec<usize> {
    (0..p.base.arrow_count()).filter(|&f| is_central(p, f)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PremonoidalReport {
    pub report: StructureReport,
    pub non_central: Vec<usize>,
    /// Every arrow is central for the trivial reason that the category is
    /// a preorder.
    pub posetal: bool,
}

impl PremonoidalReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

pub fn premonoidal_validate(p: &PremonoidalData) -> PremonoidalReport {
    let b = &p.base;
    let k = b.object_count();
    let n = b.arrow_count();
    let o = |a: usize| b.objects()[a].as_str();
    let arr = |f: usize| b.arrow_name(f);
    let t = |a: usize, c: usize| p.tensor_objects(a, c);
    let mut laws = Vec::new();

    for (law, is_left) in [("left tensors are functors", true), ("right tensors are functors", false)] {
        let mut ch = Checker::new(law);
        'fun: for a in 0..k {
            let apply = |f: usize| if is_left { p.left(a, f) } else { p.right(f, a) };
            for x in 0..k {
                let r = (apply(b.identity(x)) != b.identity(if is_left { t(a, x) } else { t(x, a) }))
                    .then(|| format!("identity of `{}` is not preserved by `{}`", o(x), o(a)));
                if !ch.instance(Ok(r)) {
                    break 'fun;
                }
            }
            for g in 0..n {
                for f in 0..n {
                    if let Some(h) = b.compose(g, f) {
                        let r = (p.comp(apply(g), apply(f)) != apply(h))
                            .then(|| format!("`{}` does not preserve `{}.{}`", o(a), arr(g), arr(f)));
                        if !ch.instance(Ok(r)) {
                            break 'fun;
                        }
                    }
                }
            }
        }
        laws.push(ch.check);
    }

    let mut ch = Checker::new("unitors natural");
    for f in 0..n {
        let (a, a2) = (b.src(f), b.tgt(f));
        let l = (p.comp(p.lambda(a2), p.left(p.unit, f)) != p.comp(f, p.lambda(a)))
            .then(|| format!("lambda at `{}`", arr(f)));
        let r = (p.comp(p.rho(a2), p.right(f, p.unit)) != p.comp(f, p.rho(a))).then(|| format!("rho at `{}`", arr(f)));
        if !ch.instance(Ok(l.or(r))) {
            break;
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("associator natural");
    'an: for f in 0..n {
        let (x, x2) = (b.src(f), b.tgt(f));
        for y in 0..k {
            for z in 0..k {
                // in the first variable
                let first = p.comp(p.assoc(x2, y, z), p.right(p.right(f, y), z))
                    != p.comp(p.right(f, t(y, z)), p.assoc(x, y, z));
                // in the second
                let second = p.comp(p.assoc(y, x2, z), p.right(p.left(y, f), z))
                    != p.comp(p.left(y, p.right(f, z)), p.assoc(y, x, z));
                // in the third
                let third =
                    p.comp(p.assoc(y, z, x2), p.left(t(y, z), f)) != p.comp(p.left(y, p.left(z, f)), p.assoc(y, z, x));
                let r = if first {
                    Some(format!("first variable at `{}` with {}, {}", arr(f), o(y), o(z)))
                } else if second {
                    Some(format!("second variable at `{}` with {}, {}", arr(f), o(y), o(z)))
                } else if third {
                    Some(format!("third variable at `{}` with {}, {}", arr(f), o(y), o(z)))
                } else {
                    None
                };
                if !ch.instance(Ok(r)) {
                    break 'an;
                }
            }
        }
    }
    laws.push(ch.check);

    let constraints: Vec<(String, usize)> = (0..k)
        .flat_map(|a| [(format!("lambda {}", o(a)), p.lambda(a)), (format!("rho {}", o(a)), p.rho(a))])
        .chain((0..k * k * k).map(|i| {
            let (a, bb, c) = (i / (k * k), (i / k) % k, i % k);
            (format!("assoc [{}, {}, {}]", o(a), o(bb), o(c)), p.assoc(a, bb, c))
        }))
        .collect();

    let mut ch = Checker::new("constraints invertible");
    for (what, f) in &constraints {
        if !ch.instance(Ok(b.inverse(*f).is_none().then(|| format!("`{what}` = `{}` has no inverse", arr(*f))))) {
            break;
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("triangle");
    'tr: for a in 0..k {
        for c in 0..k {
            let l = p.comp(p.left(a, p.lambda(c)), p.assoc(a, p.unit, c));
            let r = p.right(p.rho(a), c);
            if !ch.instance(Ok((l != r).then(|| format!("at {}, {}", o(a), o(c))))) {
                break 'tr;
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("pentagon");
    'pe: for a in 0..k {
        for bb in 0..k {
            for c in 0..k {
                for d in 0..k {
                    let l = p.comp(
                        p.left(a, p.assoc(bb, c, d)),
                        p.comp(p.assoc(a, t(bb, c), d), p.right(p.assoc(a, bb, c), d)),
                    );
                    let r = p.comp(p.assoc(a, bb, t(c, d)), p.assoc(t(a, bb), c, d));
                    if !ch.instance(Ok((l != r).then(|| format!("at {}, {}, {}, {}", o(a), o(bb), o(c), o(d))))) {
                        break 'pe;
                    }
                }
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("constraints central");
    for (what, f) in &constraints {
        let r = centrality_witness(p, *f).map(|(g, _)| format!("`{what}` does not commute with `{}`", arr(g)));
        if !ch.instance(Ok(r)) {
            break;
        }
    }
    laws.push(ch.check);

    let non_central = (0..n).filter(|&f| !is_central(p, f)).collect();
    PremonoidalReport { report: StructureReport { laws }, non_central, posetal: b.is_posetal() }
}

/// The first `(x, y)` with `x ∈ xs`, `y ∈ ys` whose square
/// `(b ⊗ y) ∘ (x ⊗ c) = (x ⊗ d) ∘ (a ⊗ y)` fails, for `x : a -> b` and
/// `y : c -> d`.
pub fn freyd_cospan_witness(p: &PremonoidalData, xs: &[usize], ys: &[usize]) -> Option<(usize, usize)> {
    let b = &p.base;
    for &x in xs {
        for &y in ys {
            let (a, bb, c, d) = (b.src(x), b.tgt(x), b.src(y), b.tgt(y));
            if p.comp(p.left(bb, y), p.right(x, c)) != p.comp(p.right(x, d), p.left(a, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn freyd_cospan_commutes(p: &PremonoidalData, xs: &[usize], ys: &[usize]) -> bool {
    freyd_cospan_witness(p, xs, ys).is_none()
}

/// The wide subcategory of central arrows with the restricted structure.
#[derive(Debug, Clone)]
pub struct Centre {
    pub data: PremonoidalData,
    /// Arrows of the centre, as arrows of the original category.
    pub arrows: Vec<usize>,
    pub inclusion: Functor,
    pub monoidal: bool,
}

pub fn premonoidal_centre(p: &PremonoidalData) -> Result<Centre, CatError> {
    let report = premonoidal_validate(p);
    if let Some((law, why)) = report.report.failures().next() {
        return Err(CatError::Invalid(format!("{law}: {why}")));
    }
    let b = &p.base;
    let arrows = central_arrows(p);
    let mut index = vec![None; b.arrow_count()];
    for (i, &f) in arrows.iter().enumerate() {
        index[f] = Some(i);
    }
    let inside = |f: usize, what: &str| {
        index[f].ok_or_else(|| CatError::Invalid(format!("centre is not closed under {what}: `{}`", b.arrow_name(f))))
    };
    let mut composites = Vec::new();
    for (i, &g) in arrows.iter().enumerate() {
        for (j, &f) in arrows.iter().enumerate() {
            if let Some(h) = b.compose(g, f) {
                composites.push((i, j, inside(h, "composition")?));
            }
        }
    }
    let identities = (0..b.object_count()).map(|a| inside(b.identity(a), "identities")).collect::<Result<_, _>>()?;
    let sub = FiniteCategory::new(
        format!("{}_centre", b.name),
        b.objects().to_vec(),
        arrows.iter().map(|&f| b.arrow(f).clone()).collect(),
        identities,
        &composites,
    )?;
    let k = b.object_count();
    let tensor = (0..k * k).map(|i| p.tensor_objects(i / k, i % k)).collect();
    let mut data = PremonoidalData::new(format!("{}_centre", p.name), sub, p.unit, tensor)?;
    for (i, &f) in arrows.iter().enumerate() {
        for a in 0..k {
            data.set_left(a, i, inside(p.left(a, f), "tensoring")?)?;
            data.set_right(a, i, inside(p.right(f, a), "tensoring")?)?;
        }
    }
    for a in 0..k {
        data.set_lambda(a, inside(p.lambda(a), "constraints")?)?;
        data.set_rho(a, inside(p.rho(a), "constraints")?)?;
        for bb in 0..k {
            for c in 0..k {
                data.set_assoc(a, bb, c, inside(p.assoc(a, bb, c), "constraints")?)?;
            }
        }
    }
    data.complete()?;
    let all: Vec<usize> = (0..data.base.arrow_count()).collect();
    let monoidal = freyd_cospan_commutes(&data, &all, &all) && premonoidal_validate(&data).non_central.is_empty();
    let inclusion = Functor { objects: (0..k).collect(), arrows: arrows.clone() };
    Ok(Centre { data, arrows, inclusion, monoidal })
}

/// Checks that `f : A -> M` is a bijective-on-objects strict premonoidal
/// functor from a monoidal `A` whose image is central.
pub fn freyd_validate(a: &PremonoidalData, m: &PremonoidalData, f: &Functor) -> Result<StructureReport, CatError> {
    let (ab, mb) = (&a.base, &m.base);
    let mut seen = vec![false; mb.object_count()];
    let bijective = f.objects.len() == ab.object_count()
        && ab.object_count() == mb.object_count()
        && f.objects.iter().all(|&o| o < seen.len() && !std::mem::replace(&mut seen[o], true));
    if !bijective {
        return Err(CatError::NotBijectiveOnObjects);
    }
    let mut laws = Vec::new();

    let mut ch = Checker::new("source is monoidal");
    let all: Vec<usize> = (0..ab.arrow_count()).collect();
    ch.instance(Ok(freyd_cospan_witness(a, &all, &all)
        .map(|(x, y)| format!("`{}` and `{}` do not interchange", ab.arrow_name(x), ab.arrow_name(y)))));
    laws.push(ch.check);

    let mut ch = Checker::new("functor");
    ch.instance(Ok(f.check(ab, mb).err()));
    let is_functor = ch.check.failure.is_none();
    laws.push(ch.check);

    let mut ch = Checker::new("preserves unit");
    ch.instance(Ok((f.objects[a.unit] != m.unit).then(|| "unit object is not preserved".to_string())));
    laws.push(ch.check);

    let mut ch = Checker::new("preserves tensor");
    if is_functor {
        'pt: for x in 0..ab.object_count() {
            for y in 0..ab.object_count() {
                let r = (f.objects[a.tensor_objects(x, y)] != m.tensor_objects(f.objects[x], f.objects[y]))
                    .then(|| format!("objects {} * {}", ab.objects()[x], ab.objects()[y]));
                if !ch.instance(Ok(r)) {
                    break 'pt;
                }
            }
            for g in 0..ab.arrow_count() {
                let l = (f.arrows[a.left(x, g)] != m.left(f.objects[x], f.arrows[g]))
                    .then(|| format!("left {} * {}", ab.objects()[x], ab.arrow_name(g)));
                let r = (f.arrows[a.right(g, x)] != m.right(f.arrows[g], f.objects[x]))
                    .then(|| format!("right {} * {}", ab.arrow_name(g), ab.objects()[x]));
                if !ch.instance(Ok(l.or(r))) {
                    break 'pt;
                }
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("preserves constraints");
    if is_functor {
        let k = ab.object_count();
        'pc: for x in 0..k {
            let (fx, o) = (f.objects[x], &ab.objects()[x]);
            let r = (f.arrows[a.lambda(x)] != m.lambda(fx))
                .then(|| format!("lambda {o}"))
                .or_else(|| (f.arrows[a.rho(x)] != m.rho(fx)).then(|| format!("rho {o}")));
            if !ch.instance(Ok(r)) {
                break 'pc;
            }
            for y in 0..k {
                for z in 0..k {
                    let r = (f.arrows[a.assoc(x, y, z)] != m.assoc(fx, f.objects[y], f.objects[z]))
                        .then(|| format!("assoc [{o}, {}, {}]", ab.objects()[y], ab.objects()[z]));
                    if !ch.instance(Ok(r)) {
                        break 'pc;
                    }
                }
            }
        }
    }
    laws.push(ch.check);

    let mut ch = Checker::new("image is central");
    if is_functor {
        for g in 0..ab.arrow_count() {
            let r = centrality_witness(m, f.arrows[g]).map(|(h, _)| {
                format!(
                    "`{}` is sent to `{}`, which does not commute with `{}`",
                    ab.arrow_name(g),
                    mb.arrow_name(f.arrows[g]),
                    mb.arrow_name(h)
                )
            });
            if !ch.instance(Ok(r)) {
                break;
            }
        }
    }
    laws.push(ch.check);

    Ok(StructureReport { laws })
}
