//! Sesquifunctors `A □ B → C` and the bifunctor condition.

use super::category::{FiniteCategory, Functor};
use super::CatError;

/// Families of functors `T(a, −) : B → C` and `T(−, b) : A → C` that
/// agree on objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sesquifunctor {
    /// `objects[a][b] = T(a, b)`
    pub objects: Vec<Vec<usize>>,
    pub fix_left: Vec<Functor>,
    pub fix_right: Vec<Functor>,
}

/// `f : a → a'` in `A` and `g : b → b'` in `B` whose square
/// `T(a', g) ∘ T(f, b) = T(f, b') ∘ T(a, g)` fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareWitness {
    pub left_arrow: usize,
    pub right_arrow: usize,
    /// `T(a', g) ∘ T(f, b)`
    pub first_left: usize,
    /// `T(f, b') ∘ T(a, g)`
    pub first_right: usize,
}

impl Sesquifunctor {
    /// The restriction of a functor `A × B → C` along the two inclusions.
    pub fn from_product_functor(a: &FiniteCategory, b: &FiniteCategory, h: &Functor) -> Self {
        let (nbo, nba) = (b.object_count(), b.arrow_count());
        let objects = (0..a.object_count()).map(|x| (0..nbo).map(|y| h.objects[x * nbo + y]).collect()).collect();
        let fix_left = (0..a.object_count())
            .map(|x| Functor {
                objects: (0..nbo).map(|y| h.objects[x * nbo + y]).collect(),
                arrows: (0..nba).map(|g| h.arrows[a.identity(x) * nba + g]).collect(),
            })
            .collect();
        let fix_right = (0..nbo)
            .map(|y| Functor {
                objects: (0..a.object_count()).map(|x| h.objects[x * nbo + y]).collect(),
                arrows: (0..a.arrow_count()).map(|f| h.arrows[f * nba + b.identity(y)]).collect(),
            })
            .collect();
        Sesquifunctor { objects, fix_left, fix_right }
    }

    /// Checks that every member of each family is a functor and that the
    /// families agree on objects.
    pub fn validate(&self, a: &FiniteCategory, b: &FiniteCategory, c: &FiniteCategory) -> Result<(), CatError> {
        if self.objects.len() != a.object_count()
            || self.objects.iter().any(|row| row.len() != b.object_count())
            || self.fix_left.len() != a.object_count()
            || self.fix_right.len() != b.object_count()
        {
            return Err(CatError::Malformed("sesquifunctor tables do not match the categories".into()));
        }
        for (x, t) in self.fix_left.iter().enumerate() {
            t.check(b, c).map_err(|e| CatError::Malformed(format!("T({}, -): {e}", a.objects()[x])))?;
            for y in 0..b.object_count() {
                if t.objects[y] != self.objects[x][y] {
                    return Err(CatError::ObjectDisagreement(a.objects()[x].clone(), b.objects()[y].clone()));
                }
            }
        }
        for (y, t) in self.fix_right.iter().enumerate() {
            t.check(a, c).map_err(|e| CatError::Malformed(format!("T(-, {}): {e}", b.objects()[y])))?;
            for x in 0..a.object_count() {
                if t.objects[x] != self.objects[x][y] {
                    return Err(CatError::ObjectDisagreement(a.objects()[x].clone(), b.objects()[y].clone()));
                }
            }
        }
        Ok(())
    }

    /// `T(f, b)`
    pub fn left_part(&self, f: usize, b: usize) -> usize {
        self.fix_right[b].arrows[f]
    }

    /// `T(a, g)`
    pub fn right_part(&self, a: usize, g: usize) -> usize {
        self.fix_left[a].arrows[g]
    }
}

/// `None` when every square commutes, otherwise the first failing square
/// in arrow order.
pub fn bifunctor_check(
    a: &FiniteCategory,
    b: &FiniteCategory,
    c: &FiniteCategory,
    t: &Sesquifunctor,
) -> Result<Option<SquareWitness>, CatError> {
    t.validate(a, b, c)?;
    for f in 0..a.arrow_count() {
        for g in 0..b.arrow_count() {
            let (x, x2, y, y2) = (a.src(f), a.tgt(f), b.src(g), b.tgt(g));
            let first_left = c.compose(t.right_part(x2, g), t.left_part(f, y)).expect("typed");
            let first_right = c.compose(t.left_part(f, y2), t.right_part(x, g)).expect("typed");
            if first_left != first_right {
                return Ok(Some(SquareWitness { left_arrow: f, right_arrow: g, first_left, first_right }));
            }
        }
    }
    Ok(None)
}

/// The functor `A × B → C` sending `(f, g)` to `T(a', g) ∘ T(f, b)`, when
/// it is a functor restricting to `T`.
pub fn factor_through_product(
    a: &FiniteCategory,
    b: &FiniteCategory,
    c: &FiniteCategory,
    t: &Sesquifunctor,
) -> Result<Option<Functor>, CatError> {
    t.validate(a, b, c)?;
    let product = FiniteCategory::product(a, b);
    let nbo = b.object_count();
    let objects = (0..product.object_count()).map(|i| t.objects[i / nbo][i % nbo]).collect();
    let nba = b.arrow_count();
    let arrows = (0..product.arrow_count())
        .map(|i| {
            let (f, g) = (i / nba, i % nba);
            c.compose(t.right_part(a.tgt(f), g), t.left_part(f, b.src(g))).expect("typed")
        })
        .collect();
    let h = Functor { objects, arrows };
    if !h.is_functor(&product, c) || Sesquifunctor::from_product_functor(a, b, &h) != *t {
        return Ok(None);
    }
    Ok(Some(h))
}
