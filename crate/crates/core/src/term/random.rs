//! Seeded random presentations and goal equations, and the soundness
//! probe run on them by `catcom gen`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::ModelError;

use super::{decide_equal, DecideConfig, DecideError, Equation, Presentation, Signature, Term, Verdict};

/// Shape limits for generated cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub max_ops: usize,
    pub max_arity: usize,
    pub max_axioms: usize,
    /// Application nodes per side of an equation.
    pub max_term_size: usize,
    pub max_vars: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { max_ops: 2, max_arity: 2, max_axioms: 2, max_term_size: 3, max_vars: 3 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub presentation: Presentation,
    pub goal: Equation,
}

const SYMBOLS: [&str; 4] = ["f", "g", "h", "k"];

/// A random term with at most `size` application nodes over `x1..=vars`.
pub fn random_term(rng: &mut impl Rng, sig: &Signature, vars: usize, size: usize) -> Term {
    let ops: Vec<(&str, usize)> = sig.ops().collect();
    if size == 0 || ops.is_empty() || rng.gen_bool(0.25) {
        return Term::Var(rng.gen_range(1..=vars.max(1)));
    }
    let &(sym, arity) = ops.choose(rng).expect("nonempty");
    let mut budget = size - 1;
    let mut args = Vec::with_capacity(arity);
    for i in 0..arity {
        let share = if i + 1 == arity { budget } else { rng.gen_range(0..=budget) };
        budget -= share;
        args.push(random_term(rng, sig, vars, share));
    }
    Term::app(sym, args)
}

fn random_equation(rng: &mut impl Rng, sig: &Signature, config: &GenConfig) -> Equation {
    let vars = rng.gen_range(1..=config.max_vars);
    let (l, r) = (rng.gen_range(0..=config.max_term_size), rng.gen_range(0..=config.max_term_size));
    let lhs = random_term(rng, sig, vars, l);
    let rhs = random_term(rng, sig, vars, r);
    Equation::inferred(lhs, rhs).expect("variables in range")
}

/// The `index`-th case of the corpus for `seed`.
pub fn random_case(seed: u64, index: u64, config: &GenConfig) -> Case {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut sig = Signature::new(format!("gen{index}"));
    let ops = rng.gen_range(1..=config.max_ops.min(SYMBOLS.len()));
    for sym in &SYMBOLS[..ops] {
        sig.add_op(*sym, rng.gen_range(0..=config.max_arity)).expect("distinct symbols");
    }
    let axioms = rng.gen_range(0..=config.max_axioms);
    let equations = (0..axioms).map(|_| random_equation(&mut rng, &sig, config)).collect();
    let goal = random_equation(&mut rng, &sig, config);
    let presentation = Presentation::new(sig, equations).expect("terms over the signature");
    Case { presentation, goal }
}

/// Verdicts for one case under several bound settings, with every
/// certificate replayed.
#[derive(Debug, Clone)]
pub struct Probe {
    pub verdicts: Vec<Verdict>,
    /// One setting proved the goal and another refuted it.
    pub contradictory: bool,
    /// Certificates or refuting models that failed to re-verify.
    pub bad_certificates: Vec<String>,
    /// Settings that stopped at a resource ceiling.
    pub ceilings: usize,
}

impl Probe {
    pub fn sound(&self) -> bool {
        !self.contradictory && self.bad_certificates.is_empty()
    }
}

/// Runs `decide_equal` under each setting and cross-checks the verdicts.
/// A setting that hits a resource ceiling contributes no verdict.
pub fn soundness_probe(case: &Case, settings: &[DecideConfig]) -> Result<Probe, DecideError> {
    let mut verdicts = Vec::new();
    let mut bad_certificates = Vec::new();
    let mut ceilings = 0;
    for config in settings {
        let verdict = match decide_equal(&case.presentation, &case.goal, config) {
            Err(DecideError::ResourceCeiling { .. })
            | Err(DecideError::Model(ModelError::EnumerationCeiling { .. })) => {
                ceilings += 1;
                continue;
            }
            other => other?,
        };
        match &verdict {
            Verdict::Proved(cert) => {
                let ends = cert.start == case.goal.lhs && cert.end == case.goal.rhs;
                if !ends || !cert.verify(&case.presentation) {
                    bad_certificates.push(format!("proof at depth {}", config.depth_bound));
                }
            }
            Verdict::Refuted { model, assignment } => {
                let separated = model.first_violation().is_none()
                    && model.eval(&case.goal.lhs, assignment)? != model.eval(&case.goal.rhs, assignment)?;
                if !separated {
                    bad_certificates.push(format!("refutation at model bound {}", config.model_bound));
                }
            }
            Verdict::Unknown { .. } => {}
        }
        verdicts.push(verdict);
    }
    let contradictory = verdicts.iter().any(Verdict::is_proved) && verdicts.iter().any(Verdict::is_refuted);
    Ok(Probe { verdicts, contradictory, bad_certificates, ceilings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_are_reproducible_and_well_formed() {
        let config = GenConfig::default();
        for i in 0..50 {
            let a = random_case(7, i, &config);
            assert_eq!(a, random_case(7, i, &config));
            for t in [&a.goal.lhs, &a.goal.rhs] {
                t.check(&a.presentation.signature).unwrap();
                assert!(t.size() <= config.max_term_size);
            }
        }
        assert_ne!(random_case(7, 0, &config), random_case(8, 0, &config));
    }

    #[test]
    fn probe_small_corpus() {
        let settings = [DecideConfig::new(3, 2), DecideConfig::new(2, 3)];
        for i in 0..40 {
            let case = random_case(1, i, &GenConfig::default());
            let probe = soundness_probe(&case, &settings).unwrap();
            assert!(probe.sound(), "case {i}: {probe:?}");
        }
    }
}
