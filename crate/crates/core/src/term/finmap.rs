use std::fmt;

/// A function `{0..dom} → {0..cod}` between finite cardinals.
///
/// Arrows of the category of finite cardinals; bijective ones are
/// permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinMap {
    cod: usize,
    values: Vec<usize>,
}

impl FinMap {
    /// Panics if an entry is out of range.
    pub fn new(cod: usize, values: Vec<usize>) -> Self {
        assert!(values.iter().all(|&v| v < cod), "FinMap entry out of range");
        FinMap { cod, values }
    }

    pub fn try_new(cod: usize, values: Vec<usize>) -> Option<Self> {
        values.iter().all(|&v| v < cod).then_some(FinMap { cod, values })
    }

    pub fn identity(n: usize) -> Self {
        FinMap { cod: n, values: (0..n).collect() }
    }

    pub fn dom(&self) -> usize {
        self.values.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `v ∘ self`.
    pub fn then(&self, v: &FinMap) -> FinMap {
        assert_eq!(self.cod, v.dom(), "FinMap composition type mismatch");
        FinMap { cod: v.cod, values: self.values.iter().map(|&i| v.values[i]).collect() }
    }

    pub fn is_bijective(&self) -> bool {
        if self.dom() != self.cod {
            return false;
        }
        let mut seen = vec![false; self.cod];
        for &v in &self.values {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        true
    }

    pub fn inverse(&self) -> Option<FinMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut values = vec![0; self.cod];
        for (i, &v) in self.values.iter().enumerate() {
            values[v] = i;
        }
        Some(FinMap { cod: self.dom(), values })
    }

    /// `m → nm`, `j ↦ (i, j)`: places the variables of an `m`-ary operation
    /// in row `i` of an `n × m` grid.
    pub fn row_injection(n: usize, m: usize, i: usize) -> FinMap {
        assert!(i < n);
        FinMap { cod: n * m, values: (0..m).map(|j| i * m + j).collect() }
    }

    /// `n → nm`, `i ↦ (i, j)`: places the variables of an `n`-ary operation
    /// in column `j` of an `n × m` grid.
    pub fn column_injection(n: usize, m: usize, j: usize) -> FinMap {
        assert!(j < m);
        FinMap { cod: n * m, values: (0..n).map(|i| i * m + j).collect() }
    }

    /// `u × v : n·m → n'·m'`, `(i, j) ↦ (u(i), v(j))` in row-major order.
    pub fn product(u: &FinMap, v: &FinMap) -> FinMap {
        let (n, m) = (u.dom(), v.dom());
        let m2 = v.cod;
        let mut values = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                values.push(u.values[i] * m2 + v.values[j]);
            }
        }
        FinMap { cod: u.cod * v.cod, values }
    }

    /// The transpose `nm → mn`: position `(j, i)` of an `m × n` grid is sent
    /// to position `(i, j)` of the `n × m` grid.
    pub fn transpose(n: usize, m: usize) -> FinMap {
        let mut values = vec![0; n * m];
        for j in 0..m {
            for i in 0..n {
                values[j * n + i] = i * m + j;
            }
        }
        FinMap { cod: n * m, values }
    }

    /// Block sum of maps `u_k : a_k → b_k`.
    pub fn block_sum(parts: &[FinMap]) -> FinMap {
        let mut values = Vec::new();
        let mut offset = 0;
        for p in parts {
            values.extend(p.values.iter().map(|v| v + offset));
            offset += p.cod;
        }
        FinMap { cod: offset, values }
    }

    /// All maps `n → m` in lexicographic order of their value lists.
    pub fn all(n: usize, m: usize) -> impl Iterator<Item = FinMap> {
        let total = if n == 0 {
            1
        } else if m == 0 {
            0
        } else {
            m.pow(n as u32)
        };
        (0..total).map(move |mut code| {
            let mut values = vec![0; n];
            for slot in values.iter_mut().rev() {
                *slot = code % m.max(1);
                code /= m.max(1);
            }
            FinMap { cod: m, values }
        })
    }

    /// All permutations of `n` in lexicographic order.
    pub fn permutations(n: usize) -> Vec<FinMap> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(FinMap { cod: n, values: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
    }

    /// Adjacent transpositions `(k k+1)` generating the symmetric group.
    pub fn adjacent_transpositions(n: usize) -> Vec<FinMap> {
        (0..n.saturating_sub(1))
            .map(|k| {
                let mut values: Vec<usize> = (0..n).collect();
                values.swap(k, k + 1);
                FinMap { cod: n, values }
            })
            .collect()
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]→{}", vals.join(","), self.cod)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(FinMap::all(2, 3).count(), 9);
        assert_eq!(FinMap::all(0, 3).count(), 1);
        assert_eq!(FinMap::all(2, 0).count(), 0);
        assert_eq!(FinMap::all(0, 0).count(), 1);
        assert_eq!(FinMap::permutations(4).len(), 24);
        assert_eq!(FinMap::permutations(0).len(), 1);
    }

    #[test]
    fn injections_cover_grid() {
        let (n, m) = (2, 3);
        let mut hit = vec![0; n * m];
        for i in 0..n {
            for v in FinMap::row_injection(n, m, i).values() {
                hit[*v] += 1;
            }
        }
        assert!(hit.iter().all(|&h| h == 1));
        assert_eq!(FinMap::column_injection(2, 3, 1).values(), &[1, 4]);
        assert_eq!(FinMap::row_injection(2, 3, 1).values(), &[3, 4, 5]);
    }

    #[test]
    fn transpose_is_a_permutation_and_self_inverse_up_to_shape() {
        let t = FinMap::transpose(2, 3);
        assert!(t.is_bijective());
        assert_eq!(t.then(&FinMap::transpose(3, 2)), FinMap::identity(6));
        assert_eq!(FinMap::transpose(2, 2).values(), &[0, 2, 1, 3]);
    }

    #[test]
    fn product_matches_components() {
        let u = FinMap::new(3, vec![2, 0]);
        let v = FinMap::new(2, vec![1, 1, 0]);
        let p = FinMap::product(&u, &v);
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(p.apply(i * 3 + j), u.apply(i) * 2 + v.apply(j));
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        for p in FinMap::permutations(4) {
            assert_eq!(p.then(&p.inverse().unwrap()), FinMap::identity(4));
        }
    }
}
