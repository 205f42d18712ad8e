//! Exhaustive (or, above a per-configuration cap, sampled) checks of the
//! clone laws within the truncation bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::term::FinMap;

use super::{CloneError, CloneTruncation, Elem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawConfig {
    /// Instances checked per arity configuration before switching to
    /// sampling.
    pub max_instances: u64,
    pub seed: u64,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig { max_instances: 5_000, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    pub instances: u64,
    /// Instances whose terms fall outside the truncation.
    pub skipped: u64,
    pub exhaustive: bool,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloneReport {
    pub laws: Vec<LawCheck>,
}

impl CloneReport {
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

enum Outcome {
    Holds,
    Fails(String),
    Skip,
}

fn outcome(r: Result<Option<String>, CloneError>) -> Outcome {
    match r {
        Ok(None) => Outcome::Holds,
        Ok(Some(w)) => Outcome::Fails(w),
        Err(CloneError::PairOutOfBound { .. }) | Err(CloneError::ArityOutOfBound { .. }) => Outcome::Skip,
        Err(e) => Outcome::Fails(e.to_string()),
    }
}

pub(crate) struct Law<'a> {
    pub(crate) check: LawCheck,
    config: &'a LawConfig,
    rng: ChaCha8Rng,
}

impl<'a> Law<'a> {
    pub(crate) fn new(law: &'static str, config: &'a LawConfig) -> Self {
        Law {
            check: LawCheck { law, instances: 0, skipped: 0, exhaustive: true, failure: None },
            config,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
        }
    }

    /// Runs `f` over the mixed-radix tuples of one configuration.
    pub(crate) fn run(&mut self, radices: &[usize], mut f: impl FnMut(&[usize]) -> Result<Option<String>, CloneError>) {
        if self.check.failure.is_some() || radices.contains(&0) {
            return;
        }
        let total = radices.iter().try_fold(1u64, |acc, &r| acc.checked_mul(r as u64));
        let mut record = |law: &mut LawCheck, t: &[usize]| match outcome(f(t)) {
            Outcome::Holds => {
                law.instances += 1;
                true
            }
            Outcome::Skip => {
                law.skipped += 1;
                true
            }
            Outcome::Fails(w) => {
                law.instances += 1;
                law.failure = Some(w);
                false
            }
        };
        match total {
            Some(t) if t <= self.config.max_instances => {
                let mut tuple = vec![0; radices.len()];
                loop {
                    if !record(&mut self.check, &tuple) {
                        return;
                    }
                    if !advance(&mut tuple, radices) {
                        return;
                    }
                }
            }
            _ => {
                self.check.exhaustive = false;
                for _ in 0..self.config.max_instances {
                    let tuple: Vec<usize> = radices.iter().map(|&r| self.rng.gen_range(0..r)).collect();
                    if !record(&mut self.check, &tuple) {
                        return;
                    }
                }
            }
        }
    }
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

fn elems(m: usize, ids: &[usize]) -> Vec<Elem> {
    ids.iter().map(|&i| Elem::new(m, i)).collect()
}

fn show(c: &CloneTruncation, e: Elem) -> String {
    format!("{} {}", e, c.describe(e))
}

pub fn validate_clone(c: &CloneTruncation, config: &LawConfig) -> CloneReport {
    let bound = c.bound();
    let maps: Vec<Vec<Vec<FinMap>>> =
        (0..=bound).map(|n| (0..=bound).map(|m| FinMap::all(n, m).collect()).collect()).collect();
    let mut laws = Vec::new();

    let mut law = Law::new("action identity", config);
    for n in 0..=bound {
        law.run(&[c.size(n)], |t| {
            let f = Elem::new(n, t[0]);
            let g = c.act(&FinMap::identity(n), f)?;
            Ok((g != f).then(|| format!("T(id_{n}) moves {}", show(c, f))))
        });
    }
    laws.push(law.check);

    let mut law = Law::new("action composition", config);
    for n in 0..=bound {
        for m in 0..=bound {
            for p in 0..=bound {
                let (us, vs) = (&maps[n][m], &maps[m][p]);
                law.run(&[us.len(), vs.len(), c.size(n)], |t| {
                    let (u, v, f) = (&us[t[0]], &vs[t[1]], Elem::new(n, t[2]));
                    let direct = c.act(&u.then(v), f)?;
                    let stepwise = c.act(v, c.act(u, f)?)?;
                    Ok((direct != stepwise).then(|| format!("u={u} v={v} f={}", show(c, f))))
                });
            }
        }
    }
    laws.push(law.check);

    let mut law = Law::new("action on units", config);
    for n in 1..=bound {
        for m in 0..=bound {
            let us = &maps[n][m];
            law.run(&[us.len(), n], |t| {
                let u = &us[t[0]];
                let got = c.act(u, c.unit(n, t[1]))?;
                let want = c.unit(m, u.apply(t[1]));
                Ok((got != want).then(|| format!("u={u} sends π{} to {}", t[1] + 1, show(c, got))))
            });
        }
    }
    laws.push(law.check);

    let mut law = Law::new("left unit", config);
    for n in 1..=bound {
        for m in 0..=bound {
            let mut radices = vec![n];
            radices.extend(std::iter::repeat_n(c.size(m), n));
            law.run(&radices, |t| {
                let gs = elems(m, &t[1..]);
                let r = c.substitute(c.unit(n, t[0]), m, &gs)?;
                Ok((r != gs[t[0]]).then(|| format!("π{}^{n} applied to {:?}", t[0] + 1, &t[1..])))
            });
        }
    }
    laws.push(law.check);

    let mut law = Law::new("right unit", config);
    for n in 0..=bound {
        law.run(&[c.size(n)], |t| {
            let f = Elem::new(n, t[0]);
            let units: Vec<Elem> = (0..n).map(|i| c.unit(n, i)).collect();
            let r = c.substitute(f, n, &units)?;
            Ok((r != f).then(|| format!("f={} gives {}", show(c, f), show(c, r))))
        });
    }
    laws.push(law.check);

    let mut law = Law::new("associativity", config);
    for n in 0..=bound {
        for m in 0..=bound {
            for p in 0..=bound {
                let mut radices = vec![c.size(n)];
                radices.extend(std::iter::repeat_n(c.size(m), n));
                radices.extend(std::iter::repeat_n(c.size(p), m));
                law.run(&radices, |t| {
                    let f = Elem::new(n, t[0]);
                    let gs = elems(m, &t[1..1 + n]);
                    let hs = elems(p, &t[1 + n..]);
                    let outer = c.substitute(c.substitute(f, m, &gs)?, p, &hs)?;
                    let inner: Vec<Elem> = gs.iter().map(|&g| c.substitute(g, p, &hs)).collect::<Result<_, _>>()?;
                    let direct = c.substitute(f, p, &inner)?;
                    Ok((outer != direct)
                        .then(|| format!("f={} gs={:?} hs={:?}", show(c, f), &t[1..1 + n], &t[1 + n..])))
                });
            }
        }
    }
    laws.push(law.check);

    let mut law = Law::new("naturality of substitution in the output", config);
    for n in 0..=bound {
        for m in 0..=bound {
            for q in 0..=bound {
                let us = &maps[m][q];
                let mut radices = vec![us.len(), c.size(n)];
                radices.extend(std::iter::repeat_n(c.size(m), n));
                law.run(&radices, |t| {
                    let u = &us[t[0]];
                    let f = Elem::new(n, t[1]);
                    let gs = elems(m, &t[2..]);
                    let lhs = c.act(u, c.substitute(f, m, &gs)?)?;
                    let moved: Vec<Elem> = gs.iter().map(|&g| c.act(u, g)).collect::<Result<_, _>>()?;
                    let rhs = c.substitute(f, q, &moved)?;
                    Ok((lhs != rhs).then(|| format!("FinMap u={u} f={} gs={:?}", show(c, f), &t[2..])))
                });
            }
        }
    }
    laws.push(law.check);

    let mut law = Law::new("naturality of substitution in the input", config);
    for n in 0..=bound {
        for n2 in 0..=bound {
            for m in 0..=bound {
                let ws = &maps[n][n2];
                let mut radices = vec![ws.len(), c.size(n)];
                radices.extend(std::iter::repeat_n(c.size(m), n2));
                law.run(&radices, |t| {
                    let w = &ws[t[0]];
                    let f = Elem::new(n, t[1]);
                    let gs = elems(m, &t[2..]);
                    let lhs = c.substitute(c.act(w, f)?, m, &gs)?;
                    let pulled: Vec<Elem> = (0..n).map(|i| gs[w.apply(i)]).collect();
                    let rhs = c.substitute(f, m, &pulled)?;
                    Ok((lhs != rhs).then(|| format!("FinMap w={w} f={} gs={:?}", show(c, f), &t[2..])))
                });
            }
        }
    }
    laws.push(law.check);

    CloneReport { laws }
}
