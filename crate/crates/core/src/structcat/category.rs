//! Finite categories given by composition tables, and functors between
//! them.

use std::collections::HashMap;

use crate::tensor::FiniteMonoid;

use super::CatError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Objects and arrows are numbered; `compose(g, f)` is `g ∘ f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub name: String,
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    /// `comp[g * arrows + f]`.
    comp: Vec<Option<usize>>,
}

impl FiniteCategory {
    /// Identity composites may be omitted; every other composable pair
    /// must be listed. Checks typing, the identity laws and associativity.
    pub fn new(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        composites: &[(usize, usize, usize)],
    ) -> Result<Self, CatError> {
        let n = arrows.len();
        let mut cat = FiniteCategory { name: name.into(), objects, arrows, identities, comp: vec![None; n * n] };
        if cat.identities.len() != cat.objects.len() {
            return Err(CatError::Malformed("one identity per object is required".into()));
        }
        for (a, &i) in cat.identities.iter().enumerate() {
            let arr = cat.arrows.get(i).ok_or_else(|| CatError::Malformed(format!("identity {i} out of range")))?;
            if arr.src != a || arr.tgt != a {
                return Err(CatError::Malformed(format!(
                    "`{}` cannot be the identity of `{}`",
                    arr.name, cat.objects[a]
                )));
            }
        }
        for arr in &cat.arrows {
            if arr.src >= cat.objects.len() || arr.tgt >= cat.objects.len() {
                return Err(CatError::Malformed(format!("`{}` has an unknown endpoint", arr.name)));
            }
        }
        for &(g, f, h) in composites {
            if g >= n || f >= n || h >= n {
                return Err(CatError::Malformed("composite refers to an unknown arrow".into()));
            }
            if cat.arrows[g].src != cat.arrows[f].tgt {
                return Err(CatError::NotComposable(cat.arrows[g].name.clone(), cat.arrows[f].name.clone()));
            }
            if cat.arrows[h].src != cat.arrows[f].src || cat.arrows[h].tgt != cat.arrows[g].tgt {
                return Err(CatError::Malformed(format!(
                    "`{}.{} = {}` has the wrong type",
                    cat.arrows[g].name, cat.arrows[f].name, cat.arrows[h].name
                )));
            }
            if let Some(old) = cat.comp[g * n + f].replace(h) {
                if old != h {
                    return Err(CatError::Malformed(format!(
                        "`{}.{}` is given two values",
                        cat.arrows[g].name, cat.arrows[f].name
                    )));
                }
            }
        }
        for f in 0..n {
            let (s, t) = (cat.arrows[f].src, cat.arrows[f].tgt);
            for slot in [cat.identities[t] * n + f, f * n + cat.identities[s]] {
                match cat.comp[slot] {
                    None => cat.comp[slot] = Some(f),
                    Some(x) if x == f => {}
                    Some(_) => return Err(CatError::IdentityLaw(cat.arrows[f].name.clone())),
                }
            }
        }
        for g in 0..n {
            for f in 0..n {
                if cat.arrows[g].src == cat.arrows[f].tgt && cat.comp[g * n + f].is_none() {
                    return Err(CatError::MissingComposite(cat.arrows[g].name.clone(), cat.arrows[f].name.clone()));
                }
            }
        }
        if let Some((h, g, f)) = cat.associativity_failure() {
            let name = |x: usize| cat.arrows[x].name.clone();
            return Err(CatError::Associativity(name(h), name(g), name(f)));
        }
        Ok(cat)
    }

    /// Builds a category from a total composition function on composable
    /// pairs.
    pub fn from_fn(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, CatError> {
        let mut composites = Vec::new();
        for g in 0..arrows.len() {
            for f in 0..arrows.len() {
                if arrows[g].src == arrows[f].tgt {
                    composites.push((g, f, compose(g, f)));
                }
            }
        }
        FiniteCategory::new(name, objects, arrows, identities, &composites)
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.arrows.len();
        for h in 0..n {
            for g in 0..n {
                let Some(hg) = self.compose(h, g) else { continue };
                for f in 0..n {
                    let Some(gf) = self.compose(g, f) else { continue };
                    if self.compose(hg, f) != self.compose(h, gf) {
                        return Some((h, g, f));
                    }
                }
            }
        }
        None
    }

    /// The category with one object and one arrow.
    pub fn terminal() -> Self {
        FiniteCategory::from_fn("terminal", vec!["o".into()], vec![arrow("id_o", 0, 0)], vec![0], |_, _| 0)
            .expect("terminal category")
    }

    /// Objects `0`, `1` and one arrow `u : 0 -> 1`.
    pub fn walking_arrow() -> Self {
        let arrows = vec![arrow("id_0", 0, 0), arrow("id_1", 1, 1), arrow("u", 0, 1)];
        FiniteCategory::from_fn(
            "arrow",
            vec!["0".into(), "1".into()],
            arrows,
            vec![0, 1],
            |g, f| {
                if g <= 1 {
                    f
                } else {
                    g
                }
            },
        )
        .expect("walking arrow")
    }

    /// Only identities.
    pub fn discrete(objects: &[&str]) -> Self {
        let arrows = objects.iter().enumerate().map(|(i, o)| arrow(&format!("id_{o}"), i, i)).collect();
        FiniteCategory::from_fn(
            "discrete",
            objects.iter().map(|o| o.to_string()).collect(),
            arrows,
            (0..objects.len()).collect(),
            |g, _| g,
        )
        .expect("discrete category")
    }

    /// One object `o`; arrow `m{i}` is element `i`, and `g ∘ f = g·f`.
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        let arrows = (0..m.order())
            .map(|i| arrow(&if i == m.unit() { "id_o".to_string() } else { format!("m{i}") }, 0, 0))
            .collect();
        FiniteCategory::from_fn(m.name.clone(), vec!["o".into()], arrows, vec![m.unit()], |g, f| m.mul(g, f))
            .expect("monoids are one-object categories")
    }

    /// Objects `(a,b)`, arrows `(f,g)`, componentwise composition.
    pub fn product(a: &FiniteCategory, b: &FiniteCategory) -> Self {
        let nb_obj = b.object_count();
        let nb = b.arrow_count();
        let objects = a.objects.iter().flat_map(|x| b.objects.iter().map(move |y| format!("({x},{y})"))).collect();
        let arrows = a
            .arrows
            .iter()
            .flat_map(|f| {
                b.arrows.iter().map(move |g| Arrow {
                    name: format!("({},{})", f.name, g.name),
                    src: f.src * nb_obj + g.src,
                    tgt: f.tgt * nb_obj + g.tgt,
                })
            })
            .collect();
        let identities = (0..a.object_count())
            .flat_map(|x| (0..nb_obj).map(move |y| (x, y)))
            .map(|(x, y)| a.identity(x) * nb + b.identity(y))
            .collect();
        FiniteCategory::from_fn(format!("{}_x_{}", a.name, b.name), objects, arrows, identities, |g, f| {
            let (g1, g2) = (g / nb, g % nb);
            let (f1, f2) = (f / nb, f % nb);
            a.compose(g1, f1).unwrap() * nb + b.compose(g2, f2).unwrap()
        })
        .expect("products of categories are categories")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, f: usize) -> &Arrow {
        &self.arrows[f]
    }

    pub fn arrow_name(&self, f: usize) -> &str {
        &self.arrows[f].name
    }

    pub fn src(&self, f: usize) -> usize {
        self.arrows[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.arrows[f].tgt
    }

    pub fn identity(&self, a: usize) -> usize {
        self.identities[a]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.arrows[f].src] == f
    }

    /// `g ∘ f`, when composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.arrows.len() + f]
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&f| self.arrows[f].src == a && self.arrows[f].tgt == b).collect()
    }

    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// At most one arrow between any two objects.
    pub fn is_posetal(&self) -> bool {
        let k = self.objects.len();
        let mut seen = vec![false; k * k];
        self.arrows.iter().all(|a| !std::mem::replace(&mut seen[a.src * k + a.tgt], true))
    }

    /// `g` with `g ∘ f = id` and `f ∘ g = id`.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (s, t) = (self.src(f), self.tgt(f));
        self.hom(t, s)
            .into_iter()
            .find(|&g| self.compose(g, f) == Some(self.identity(s)) && self.compose(f, g) == Some(self.identity(t)))
    }
}

pub(crate) fn arrow(name: &str, src: usize, tgt: usize) -> Arrow {
    Arrow { name: name.to_string(), src, tgt }
}

/// A functor given by its object and arrow maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functor {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Self {
        Functor { objects: (0..c.object_count()).collect(), arrows: (0..c.arrow_count()).collect() }
    }

    /// The first violated functor law, described by arrow names.
    pub fn check(&self, src: &FiniteCategory, tgt: &FiniteCategory) -> Result<(), String> {
        if self.objects.len() != src.object_count() || self.arrows.len() != src.arrow_count() {
            return Err("table sizes do not match the source category".into());
        }
        if self.objects.iter().any(|&o| o >= tgt.object_count()) || self.arrows.iter().any(|&f| f >= tgt.arrow_count())
        {
            return Err("image outside the target category".into());
        }
        for f in 0..src.arrow_count() {
            let image = self.arrows[f];
            if tgt.src(image) != self.objects[src.src(f)] || tgt.tgt(image) != self.objects[src.tgt(f)] {
                return Err(format!("`{}` is sent to an arrow of the wrong type", src.arrow_name(f)));
            }
        }
        for a in 0..src.object_count() {
            if self.arrows[src.identity(a)] != tgt.identity(self.objects[a]) {
                return Err(format!("identity of `{}` is not preserved", src.objects()[a]));
            }
        }
        for g in 0..src.arrow_count() {
            for f in 0..src.arrow_count() {
                if let Some(h) = src.compose(g, f) {
                    if tgt.compose(self.arrows[g], self.arrows[f]) != Some(self.arrows[h]) {
                        return Err(format!(
                            "composite `{}.{}` is not preserved",
                            src.arrow_name(g),
                            src.arrow_name(f)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_functor(&self, src: &FiniteCategory, tgt: &FiniteCategory) -> bool {
        self.check(src, tgt).is_ok()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Functor) -> Functor {
        Functor {
            objects: self.objects.iter().map(|&o| other.objects[o]).collect(),
            arrows: self.arrows.iter().map(|&f| other.arrows[f]).collect(),
        }
    }
}

/// Every functor `src → tgt`, in lexicographic order of (object map,
/// arrow map).
pub fn all_functors(src: &FiniteCategory, tgt: &FiniteCategory) -> Vec<Functor> {
    let mut out = Vec::new();
    let mut objects = vec![0; src.object_count()];
    if tgt.object_count() == 0 && src.object_count() > 0 {
        return out;
    }
    loop {
        let mut arrows = vec![usize::MAX; src.arrow_count()];
        extend_functor(src, tgt, &objects, &mut arrows, 0, &mut out);
        if !crate::term::next_tuple(&mut objects, tgt.object_count()) {
            return out;
        }
    }
}

fn extend_functor(
    src: &FiniteCategory,
    tgt: &FiniteCategory,
    objects: &[usize],
    arrows: &mut Vec<usize>,
    at: usize,
    out: &mut Vec<Functor>,
) {
    if at == arrows.len() {
        let f = Functor { objects: objects.to_vec(), arrows: arrows.clone() };
        if f.is_functor(src, tgt) {
            out.push(f);
        }
        return;
    }
    let candidates = if src.is_identity(at) {
        vec![tgt.identity(objects[src.src(at)])]
    } else {
        tgt.hom(objects[src.src(at)], objects[src.tgt(at)])
    };
    'next: for c in candidates {
        arrows[at] = c;
        // prune on composites already fully assigned
        for g in 0..=at {
            for f in 0..=at {
                if let Some(h) = src.compose(g, f) {
                    if h <= at && tgt.compose(arrows[g], arrows[f]) != Some(arrows[h]) {
                        continue 'next;
                    }
                }
            }
        }
        extend_functor(src, tgt, objects, arrows, at + 1, out);
    }
    arrows[at] = usize::MAX;
}

/// The category of functors `B → C` with all object-indexed families of
/// arrows as morphisms, or only the natural ones.
#[derive(Debug, Clone)]
pub struct FunctorCategory {
    pub category: FiniteCategory,
    pub functors: Vec<Functor>,
    /// Components of each arrow, indexed by the objects of `B`.
    pub components: Vec<Vec<usize>>,
}

pub fn is_natural(b: &FiniteCategory, c: &FiniteCategory, f: &Functor, g: &Functor, components: &[usize]) -> bool {
    (0..b.arrow_count()).all(|h| {
        let (x, y) = (b.src(h), b.tgt(h));
        c.compose(components[y], f.arrows[h]) == c.compose(g.arrows[h], components[x])
    })
}

pub fn functor_hom(b: &FiniteCategory, c: &FiniteCategory, natural: bool) -> FunctorCategory {
    let functors = all_functors(b, c);
    let mut arrows = Vec::new();
    let mut components = Vec::new();
    let mut index = HashMap::new();
    let mut identities = vec![0; functors.len()];
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            let homs: Vec<Vec<usize>> = (0..b.object_count()).map(|x| c.hom(f.objects[x], g.objects[x])).collect();
            let radices: Vec<usize> = homs.iter().map(Vec::len).collect();
            if radices.contains(&0) {
                continue;
            }
            let mut choice = vec![0; radices.len()];
            loop {
                let comp: Vec<usize> = choice.iter().zip(&homs).map(|(&k, h)| h[k]).collect();
                if !natural || is_natural(b, c, f, g, &comp) {
                    if i == j && comp.iter().enumerate().all(|(x, &a)| a == c.identity(f.objects[x])) {
                        identities[i] = arrows.len();
                    }
                    let names: Vec<&str> = comp.iter().map(|&a| c.arrow_name(a)).collect();
                    index.insert((i, j, comp.clone()), arrows.len());
                    arrows.push(Arrow { name: format!("F{i}=>F{j}[{}]", names.join(",")), src: i, tgt: j });
                    components.push(comp);
                }
                if !advance(&mut choice, &radices) {
                    break;
                }
            }
        }
    }
    let objects = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let kind = if natural { "nat" } else { "fam" };
    let ends: Vec<(usize, usize)> = arrows.iter().map(|a: &Arrow| (a.src, a.tgt)).collect();
    let category =
        FiniteCategory::from_fn(format!("{kind}_{}_{}", b.name, c.name), objects, arrows, identities, |s, t| {
            let comp: Vec<usize> =
                (0..b.object_count()).map(|x| c.compose(components[s][x], components[t][x]).unwrap()).collect();
            index[&(ends[t].0, ends[s].1, comp)]
        })
        .expect("componentwise composition is a category");
    FunctorCategory { category, functors, components }
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
