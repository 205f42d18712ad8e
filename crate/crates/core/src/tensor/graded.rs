//! Positively graded algebras over a prime field, truncated above a grade
//! bound, and the two q-twisted commutation checks.

use thiserror::Error;

use crate::syntax::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("scalar q must be a nonzero field element")]
    ZeroScalar,
    #[error("no basis element of grade 0 to serve as unit")]
    NoUnit,
    #[error("product {0}*{1} has a component of the wrong grade")]
    Grading(String, String),
    #[error("associativity fails on ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("grades {0} + {1} exceed the bound {2}")]
    AboveBound(usize, usize, usize),
    #[error("vector has length {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },
}

/// Structure constants on a graded basis; products above the grade bound
/// are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub name: String,
    p: u64,
    q: u64,
    bound: usize,
    basis: Vec<(String, usize)>,
    /// `products[i * dim + j]` is the vector `b_i · b_j`.
    products: Vec<Vec<u64>>,
    unit: usize,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl GradedAlgebra {
    pub fn new(
        name: impl Into<String>,
        p: u64,
        q: u64,
        bound: usize,
        basis: Vec<(String, usize)>,
        products: Vec<Vec<u64>>,
    ) -> Result<Self, GradedError> {
        if !is_prime(p) {
            return Err(GradedError::NotPrime(p));
        }
        if q.is_multiple_of(p) {
            return Err(GradedError::ZeroScalar);
        }
        let unit = basis.iter().position(|(_, g)| *g == 0).ok_or(GradedError::NoUnit)?;
        let dim = basis.len();
        let products = products.into_iter().map(|v| v.into_iter().map(|c| c % p).collect()).collect();
        let alg = GradedAlgebra { name: name.into(), p, q: q % p, bound, basis, products, unit };
        for i in 0..dim {
            for j in 0..dim {
                let (gi, gj) = (alg.basis[i].1, alg.basis[j].1);
                let v = &alg.products[i * dim + j];
                let ok = v.iter().enumerate().all(|(k, &c)| c == 0 || (gi + gj <= bound && alg.basis[k].1 == gi + gj));
                if !ok {
                    return Err(GradedError::Grading(alg.basis[i].0.clone(), alg.basis[j].0.clone()));
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let (bi, bj, bk) = (alg.basis_vector(i), alg.basis_vector(j), alg.basis_vector(k));
                    if alg.mul(&alg.mul(&bi, &bj), &bk) != alg.mul(&bi, &alg.mul(&bj, &bk)) {
                        let n = |x: usize| alg.basis[x].0.clone();
                        return Err(GradedError::NotAssociative(n(i), n(j), n(k)));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// `k⟨x, y⟩/(yx − q·xy)` truncated at total degree `bound`, with basis
    /// `x^a y^b` and `x^a y^b · x^c y^d = q^{bc} x^{a+c} y^{b+d}`.
    pub fn quantum_plane(p: u64, q: u64, bound: usize) -> Result<Self, GradedError> {
        let mut basis = Vec::new();
        let mut exps = Vec::new();
        for deg in 0..=bound {
            for a in (0..=deg).rev() {
                let b = deg - a;
                exps.push((a, b));
                basis.push((monomial_name(a, b), deg));
            }
        }
        let dim = basis.len();
        let mut products = vec![vec![0; dim]; dim * dim];
        for (i, &(a, b)) in exps.iter().enumerate() {
            for (j, &(c, d)) in exps.iter().enumerate() {
                if a + b + c + d <= bound {
                    let k = exps.iter().position(|&e| e == (a + c, b + d)).expect("in range");
                    products[i * dim + j][k] = pow_mod(q, (b * c) as u64, p);
                }
            }
        }
        GradedAlgebra::new(format!("qplane_{p}_{q}"), p, q, bound, basis, products)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(String, usize)] {
        &self.basis
    }

    pub fn unit(&self) -> Vec<u64> {
        self.basis_vector(self.unit)
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|(n, _)| n == name)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn element(&self, name: &str) -> Result<Vec<u64>, GradedError> {
        self.basis_index(name).map(|i| self.basis_vector(i)).ok_or_else(|| GradedError::UnknownBasis(name.into()))
    }

    pub fn mul(&self, u: &[u64], v: &[u64]) -> Vec<u64> {
        let dim = self.dim();
        let mut out = vec![0; dim];
        for (i, &a) in u.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in v.iter().enumerate().filter(|(_, &b)| b != 0) {
                let c = a * b % self.p;
                for (k, &s) in self.products[i * dim + j].iter().enumerate() {
                    out[k] = (out[k] + c * s) % self.p;
                }
            }
        }
        out
    }

    pub fn scale(&self, c: u64, v: &[u64]) -> Vec<u64> {
        v.iter().map(|&x| x * (c % self.p) % self.p).collect()
    }

    /// Grade of a homogeneous element; the zero vector has grade 0.
    pub fn grade_of(&self, v: &[u64]) -> Result<usize, GradedError> {
        if v.len() != self.dim() {
            return Err(GradedError::Dimension { expected: self.dim(), found: v.len() });
        }
        let mut grades = v.iter().zip(&self.basis).filter(|(&c, _)| c != 0).map(|(_, (_, g))| *g);
        let first = grades.next().unwrap_or(0);
        if grades.all(|g| g == first) {
            Ok(first)
        } else {
            Err(GradedError::NotHomogeneous)
        }
    }

    /// Every element of the given grade, coordinates in lexicographic order.
    pub fn homogeneous_elements(&self, grade: usize) -> Vec<Vec<u64>> {
        let slots: Vec<usize> = (0..self.dim()).filter(|&i| self.basis[i].1 == grade).collect();
        let p = self.p as usize;
        let count = p.pow(slots.len() as u32);
        (0..count)
            .map(|mut code| {
                let mut v = vec![0; self.dim()];
                for &s in slots.iter().rev() {
                    v[s] = (code % p) as u64;
                    code /= p;
                }
                v
            })
            .collect()
    }

    pub fn render_element(&self, v: &[u64]) -> String {
        let terms: Vec<String> =
            v.iter().zip(&self.basis).filter(|(&c, _)| c != 0).map(|(c, (n, _))| format!("{c}*{n}")).collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn monomial_name(a: usize, b: usize) -> String {
    let part = |s: &str, e: usize| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}{e}"),
    };
    if a == 0 && b == 0 {
        "one".into()
    } else {
        format!("{}{}", part("x", a), part("y", b))
    }
}

fn pow_mod(base: u64, exp: u64, p: u64) -> u64 {
    (0..exp).fold(1 % p, |acc, _| acc * (base % p) % p)
}

/// `(left, right)` with `left = (f·g == q^{rs} g·f)` and
/// `right = (g·f == q^{rs} f·g)` for `f` of grade `r` and `g` of grade `s`.
pub fn graded_q_cospan_commutes(alg: &GradedAlgebra, f: &[u64], g: &[u64]) -> Result<(bool, bool), GradedError> {
    let r = alg.grade_of(f)?;
    let s = alg.grade_of(g)?;
    if r + s > alg.bound {
        return Err(GradedError::AboveBound(r, s, alg.bound));
    }
    let twist = pow_mod(alg.q, (r * s) as u64, alg.p);
    let fg = alg.mul(f, g);
    let gf = alg.mul(g, f);
    Ok((fg == alg.scale(twist, &gf), gf == alg.scale(twist, &fg)))
}

/// `graded NAME { p P; q Q; D D; basis id:grade, ...; mul a*b = c*id + ...; }`
///
/// The first grade-0 basis element is the unit; its products are implicit.
/// Products not listed are zero.
pub fn parse_graded(text: &str) -> Result<GradedAlgebra, ParseError> {
    let mut cur = Cursor::new(text)?;
    let name = cur.header("graded")?;
    let (mut p, mut q, mut bound) = (None, None, None);
    let mut basis: Vec<(String, usize)> = Vec::new();
    let mut muls = Vec::new();
    while !cur.eat_punct("}") {
        let (key, pos) = cur.ident()?;
        match key.as_str() {
            "p" => p = Some(cur.nat()?),
            "q" => q = Some(cur.nat()?),
            "D" => bound = Some(cur.usize()?),
            "basis" => loop {
                let (id, _) = cur.ident()?;
                cur.expect_punct(":")?;
                basis.push((id, cur.usize()?));
                if !cur.eat_punct(",") {
                    break;
                }
            },
            "mul" => {
                let (a, apos) = cur.ident()?;
                cur.expect_punct("*")?;
                let (b, bpos) = cur.ident()?;
                cur.expect_punct("=")?;
                let mut terms = Vec::new();
                loop {
                    let c = cur.nat()?;
                    cur.expect_punct("*")?;
                    let (id, ipos) = cur.ident()?;
                    terms.push((c, id, ipos));
                    if !cur.eat_punct("+") {
                        break;
                    }
                }
                muls.push(((a, apos), (b, bpos), terms));
            }
            other => return Err(ParseError::new(pos, format!("unknown item `{other}`"))),
        }
        cur.expect_punct(";")?;
    }
    let end = cur.pos();
    cur.finish()?;
    let p = p.ok_or_else(|| ParseError::new(end, "missing `p`"))?;
    let q = q.ok_or_else(|| ParseError::new(end, "missing `q`"))?;
    let bound = bound.ok_or_else(|| ParseError::new(end, "missing `D`"))?;
    let dim = basis.len();
    let unit = basis.iter().position(|(_, g)| *g == 0).ok_or_else(|| ParseError::new(end, "no grade-0 unit"))?;
    let index = |(n, pos): &(String, crate::syntax::Pos)| {
        basis
            .iter()
            .position(|(b, _)| b == n)
            .ok_or_else(|| ParseError::new(*pos, format!("unknown basis element `{n}`")))
    };
    let mut products = vec![vec![0; dim]; dim * dim];
    for i in 0..dim {
        products[unit * dim + i][i] = 1;
        products[i * dim + unit][i] = 1;
    }
    for (a, b, terms) in &muls {
        let (i, j) = (index(a)?, index(b)?);
        let mut v = vec![0; dim];
        for (c, id, pos) in terms {
            let k = index(&(id.clone(), *pos))?;
            v[k] = (v[k] + c) % p.max(1);
        }
        products[i * dim + j] = v;
    }
    GradedAlgebra::new(name, p, q, bound, basis, products).map_err(|e| ParseError::new(end, e.to_string()))
}

pub fn render_graded(alg: &GradedAlgebra) -> String {
    let dim = alg.dim();
    let mut out = format!("graded {} {{\n  p {};\n  q {};\n  D {};\n", alg.name, alg.p, alg.q, alg.bound);
    let basis: Vec<String> = alg.basis.iter().map(|(n, g)| format!("{n}:{g}")).collect();
    out.push_str(&format!("  basis {};\n", basis.join(", ")));
    for i in 0..dim {
        for j in 0..dim {
            if i == alg.unit || j == alg.unit {
                continue;
            }
            let v = &alg.products[i * dim + j];
            if v.iter().any(|&c| c != 0) {
                out.push_str(&format!("  mul {}*{} = {};\n", alg.basis[i].0, alg.basis[j].0, alg.render_element(v)));
            }
        }
    }
    out.push_str("}\n");
    out
}
