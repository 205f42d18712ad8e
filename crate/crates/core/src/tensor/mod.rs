//! Constructions that make two structures commute: the coproduct and
//! commuting tensor of presentations, commuting cospans of finite monoids
//! with their centralizers and universal property, and the graded
//! q-commutativity check.

mod graded;
mod monoid;

use std::sync::Arc;

use crate::term::{commutation_equation, generic_application, Equation, Presentation, Signature};

pub use graded::{graded_q_cospan_commutes, parse_graded, render_graded, GradedAlgebra, GradedError};
pub use monoid::{
    cospan_witness, monoid_centralizer, monoid_cospan_commutes, monoid_homs, monoid_tensor_universal_check,
    monoid_tensor_universal_check_with, monoids_up_to_iso, parse_monoid, render_monoid, FiniteMonoid, MonoidError,
    MonoidMap, Submonoid, UniversalReport,
};

/// A presentation built from two others, with the symbol renaming used
/// for each side as `(original, new)` pairs in signature order.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinedPresentation {
    pub presentation: Presentation,
    pub left: Vec<(String, String)>,
    pub right: Vec<(String, String)>,
}

fn fresh(base: String, taken: &Signature, other: &Signature) -> String {
    let mut name = base;
    while taken.arity(&name).is_some() || other.arity(&name).is_some() {
        name.push('_');
    }
    name
}

/// Disjoint union of signatures and equations. Symbols declared on both
/// sides get the suffixes `_1` and `_2`.
pub fn coproduct_presentation(s: &Presentation, t: &Presentation) -> CombinedPresentation {
    let (ss, ts) = (&s.signature, &t.signature);
    let mut sig = Signature::new(format!("{}_plus_{}", ss.name, ts.name));
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (sym, arity) in ss.ops() {
        let new = if ts.arity(sym).is_some() { fresh(format!("{sym}_1"), ss, ts) } else { sym.to_string() };
        sig.add_op(new.clone(), arity).expect("fresh symbol");
        left.push((sym.to_string(), new));
    }
    for (sym, arity) in ts.ops() {
        let new = if ss.arity(sym).is_some() { fresh(format!("{sym}_2"), ss, ts) } else { sym.to_string() };
        let new = if sig.arity(&new).is_some() { fresh(new, &sig, ts) } else { new };
        sig.add_op(new.clone(), arity).expect("fresh symbol");
        right.push((sym.to_string(), new));
    }
    let lookup = |pairs: &[(String, String)]| {
        let pairs = pairs.to_vec();
        move |sym: &str| pairs.iter().find(|(o, _)| o == sym).map(|(_, n)| n.clone()).unwrap()
    };
    let mut equations: Vec<Equation> = s.equations.iter().map(|e| e.rename(&lookup(&left))).collect();
    equations.extend(t.equations.iter().map(|e| e.rename(&lookup(&right))));
    let presentation = Presentation::new(sig, equations).expect("renamed equations are well-formed");
    CombinedPresentation { presentation, left, right }
}

/// The coproduct with one interchange equation for every pair of
/// generating symbols, constants included.
pub fn commuting_tensor_presentation(s: &Arc<Presentation>, t: &Arc<Presentation>) -> CombinedPresentation {
    let mut combined = coproduct_presentation(s, t);
    let mut sig = combined.presentation.signature.clone();
    sig.name = format!("{}_tensor_{}", s.signature.name, t.signature.name);
    let mut equations = combined.presentation.equations.clone();
    for (_, phi) in &combined.left {
        let n = sig.arity(phi).expect("declared");
        for (_, psi) in &combined.right {
            let m = sig.arity(psi).expect("declared");
            let eq = commutation_equation(&generic_application(phi, n), n, &generic_application(psi, m), m)
                .expect("generic applications have matching arity");
            equations.push(eq);
        }
    }
    combined.presentation = Presentation::new(sig, equations).expect("well-formed");
    combined
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{enumerate_models, EnumConfig};
    use crate::term::parse_presentation;

    fn p(text: &str) -> Arc<Presentation> {
        Arc::new(parse_presentation(text).unwrap())
    }

    fn monoid() -> Arc<Presentation> {
        p("theory m { op mul:2; op e:0; eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3); \
           eq mul(e(),x1) = x1; eq mul(x1,e()) = x1; }")
    }

    #[test]
    fn coproduct_renames_clashes() {
        let c = coproduct_presentation(&monoid(), &monoid());
        let names: Vec<&str> = c.presentation.signature.ops().map(|(s, _)| s).collect();
        assert_eq!(names, ["mul_1", "e_1", "mul_2", "e_2"]);
        assert_eq!(c.presentation.equations.len(), 6);
        let empty = p("theory z { }");
        let c = coproduct_presentation(&monoid(), &empty);
        assert_eq!(c.presentation.signature.len(), 2);
        assert_eq!(c.presentation.equations, monoid().equations);
        let pointed = p("theory pt { op c:0; }");
        let c = coproduct_presentation(&pointed, &pointed);
        assert_eq!(c.presentation.signature.len(), 2);
        assert!(c.presentation.equations.is_empty());
    }

    #[test]
    fn renaming_avoids_existing_symbols() {
        let a = p("theory a { op f:1; op f_2:1; }");
        let b = p("theory b { op f:1; }");
        let c = coproduct_presentation(&a, &b);
        assert_eq!(c.presentation.signature.len(), 3);
    }

    #[test]
    fn tensor_model_counts() {
        let cfg = EnumConfig::default();
        let pointed = p("theory pt { op c:0; }");
        let u = Arc::new(commuting_tensor_presentation(&pointed, &pointed).presentation);
        for k in 1..=3 {
            assert_eq!(enumerate_models(&u, k, &cfg).unwrap().len(), k);
        }
        let u = Arc::new(commuting_tensor_presentation(&monoid(), &monoid()).presentation);
        let models = enumerate_models(&u, 2, &cfg).unwrap();
        assert_eq!(models.len(), 4);
        for m in &models {
            let t = &m.tables()[0];
            assert_eq!(t[1], t[2], "Eckmann-Hilton forces commutativity");
            assert_eq!(m.tables()[0], m.tables()[2]);
        }
    }

    #[test]
    fn tensor_with_empty_is_identity() {
        let empty = p("theory z { }");
        let u = commuting_tensor_presentation(&monoid(), &empty).presentation;
        assert_eq!(u.equations, monoid().equations);
        assert_eq!(u.signature.len(), 2);
    }
}
