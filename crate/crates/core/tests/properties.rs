use std::sync::Arc;

use proptest::prelude::*;

use catcom::clone::{
    admissible_pairs, clone_of_algebra, op_commutes, op_commutes_duoidal, parse_algebra, render_algebra,
    validate_clone, FiniteAlgebra, LawConfig,
};
use catcom::model::{enumerate_models, is_commuting_pair, EnumConfig, FiniteModel};
use catcom::tensor::{
    graded_q_cospan_commutes, monoid_centralizer, monoid_cospan_commutes, monoid_homs, monoids_up_to_iso, parse_monoid,
    render_monoid, FiniteMonoid, GradedAlgebra, MonoidMap,
};
use catcom::term::{
    decide_equal, parse_presentation, random_case, render_presentation, DecideConfig, DecideError, FinMap, GenConfig,
    Presentation, Signature, Term, Verdict,
};

fn finmap(dom: usize, cod: usize) -> impl Strategy<Value = FinMap> {
    prop::collection::vec(0..cod, dom).prop_map(move |v| FinMap::new(cod, v))
}

/// Three composable maps `a → b → c → d` with sizes in `1..=4`.
fn chain() -> impl Strategy<Value = (FinMap, FinMap, FinMap)> {
    (1..=4usize, 1..=4usize, 1..=4usize, 1..=4usize)
        .prop_flat_map(|(a, b, c, d)| (finmap(a, b), finmap(b, c), finmap(c, d)))
}

fn sig() -> Signature {
    Signature::with_ops("s", [("f", 2), ("g", 1), ("c", 0)]).unwrap()
}

/// Terms over `f/2, g/1, c/0` in `x1..=vars`.
fn term(vars: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![(1..=vars).prop_map(Term::Var), Just(Term::constant("c"))];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::app("f", vec![a, b])),
            inner.prop_map(|a| Term::app("g", vec![a])),
        ]
    })
}

fn tables(k: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    (prop::collection::vec(0..k, k * k), prop::collection::vec(0..k, k), 0..k).prop_map(|(f, g, c)| vec![f, g, vec![c]])
}

fn free_model(k: usize, tables: Vec<Vec<usize>>) -> FiniteModel {
    let p = Presentation::new(sig(), vec![]).unwrap().into_arc();
    FiniteModel::new(p, k, tables).unwrap()
}

fn binary_algebra(k: usize, f: &[usize], g: &[usize]) -> FiniteAlgebra {
    let list = |t: &[usize]| t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    parse_algebra(&format!("algebra r {{ carrier {k}; op f/2 = [{}]; op g/1 = [{}]; }}", list(f), list(g))).unwrap()
}

fn small_monoids() -> Vec<FiniteMonoid> {
    (1..=3).flat_map(|n| monoids_up_to_iso(n).unwrap()).collect()
}

proptest! {
    #[test]
    fn finmap_composition_is_associative((u, v, w) in chain()) {
        prop_assert_eq!(u.then(&v).then(&w), u.then(&v.then(&w)));
        prop_assert_eq!(FinMap::identity(u.dom()).then(&u), u.clone());
        prop_assert_eq!(u.then(&FinMap::identity(u.cod())), u);
    }

    #[test]
    fn finmap_product_is_functorial((u, u2, _) in chain(), (v, v2, _) in chain()) {
        let together = FinMap::product(&u.then(&u2), &v.then(&v2));
        prop_assert_eq!(together, FinMap::product(&u, &v).then(&FinMap::product(&u2, &v2)));
    }

    #[test]
    fn transpose_is_inverted_by_its_transpose(n in 0..5usize, m in 0..5usize) {
        let t = FinMap::transpose(n, m);
        prop_assert!(t.is_bijective());
        prop_assert_eq!(t.then(&FinMap::transpose(m, n)), FinMap::identity(n * m));
    }

    #[test]
    fn substitution_is_associative(
        t in term(3),
        a in prop::collection::vec(term(2), 3),
        b in prop::collection::vec(term(2), 2),
    ) {
        let stepwise = t.substitute(&a).unwrap().substitute(&b).unwrap();
        let composed: Vec<Term> = a.iter().map(|s| s.substitute(&b).unwrap()).collect();
        prop_assert_eq!(stepwise, t.substitute(&composed).unwrap());
    }

    #[test]
    fn reindex_is_substitution_by_variables(t in term(3), u in finmap(3, 4)) {
        let vars: Vec<Term> = u.values().iter().map(|&j| Term::Var(j + 1)).collect();
        prop_assert_eq!(t.reindex(&u), t.substitute(&vars).unwrap());
    }

    #[test]
    fn evaluation_respects_substitution(
        t in term(3),
        a in prop::collection::vec(term(2), 3),
        tabs in tables(3),
        env in prop::collection::vec(0..3usize, 2),
    ) {
        let m = free_model(3, tabs);
        let inner: Vec<usize> = a.iter().map(|s| m.eval(s, &env).unwrap()).collect();
        prop_assert_eq!(m.eval(&t.substitute(&a).unwrap(), &env).unwrap(), m.eval(&t, &inner).unwrap());
    }

    #[test]
    fn commuting_pairs_are_symmetric(s in tables(2), t in tables(2)) {
        let (a, b) = (free_model(2, s), free_model(2, t));
        prop_assert_eq!(is_commuting_pair(&a, &b).unwrap(), is_commuting_pair(&b, &a).unwrap());
    }

    #[test]
    fn monoid_is_commutative_iff_identity_cospan_commutes(i in 0..45usize) {
        let all = small_monoids().into_iter().chain(monoids_up_to_iso(4).unwrap()).collect::<Vec<_>>();
        let m = &all[i % all.len()];
        let id = MonoidMap::identity(m);
        prop_assert_eq!(monoid_cospan_commutes(&id, &id).unwrap(), m.is_commutative());
    }

    #[test]
    fn images_commute_with_their_centralizer(a in 0..10usize, c in 0..10usize, pick in any::<prop::sample::Index>()) {
        let monoids = small_monoids();
        let (a, c) = (&monoids[a % monoids.len()], &monoids[c % monoids.len()]);
        let homs = monoid_homs(a, c);
        let f = MonoidMap::new(a, c, pick.get(&homs).clone()).unwrap();
        let z = monoid_centralizer(&f);
        for x in 0..c.order() {
            let central = f.image().iter().all(|&y| c.mul(x, y) == c.mul(y, x));
            prop_assert_eq!(z.contains(x), central);
        }
    }

    #[test]
    fn monoid_text_round_trips(i in 0..45usize) {
        let all = small_monoids().into_iter().chain(monoids_up_to_iso(4).unwrap()).collect::<Vec<_>>();
        let m = &all[i % all.len()];
        let back = parse_monoid(&render_monoid(m)).unwrap();
        prop_assert_eq!((back.order(), back.unit(), back.table()), (m.order(), m.unit(), m.table()));
    }

    #[test]
    fn graded_sides_swap(q in 2..5u64, r in 0..=2usize, s in 0..=2usize, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let plane = GradedAlgebra::quantum_plane(5, q, 2).unwrap();
        let s = s.min(2 - r);
        let f = i.get(&plane.homogeneous_elements(r)).clone();
        let g = j.get(&plane.homogeneous_elements(s)).clone();
        let (left, _) = graded_q_cospan_commutes(&plane, &f, &g).unwrap();
        let (_, right) = graded_q_cospan_commutes(&plane, &g, &f).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn clone_routes_agree_on_three_element_algebras(f in prop::collection::vec(0..3usize, 9), g in prop::collection::vec(0..3usize, 3)) {
        let c = clone_of_algebra(&binary_algebra(3, &f, &g), 2).unwrap();
        for (a, b) in admissible_pairs(&c) {
            prop_assert_eq!(op_commutes(&c, a, b).unwrap(), op_commutes_duoidal(&c, a, b).unwrap(), "{} {}", a, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn clone_routes_agree_on_two_element_algebras(f in prop::collection::vec(0..2usize, 4), g in prop::collection::vec(0..2usize, 2)) {
        let c = clone_of_algebra(&binary_algebra(2, &f, &g), 3).unwrap();
        for (a, b) in admissible_pairs(&c) {
            prop_assert_eq!(op_commutes(&c, a, b).unwrap(), op_commutes_duoidal(&c, a, b).unwrap(), "{} {}", a, b);
        }
        prop_assert!(validate_clone(&c, &LawConfig::default()).passed());
    }

    #[test]
    fn algebra_text_round_trips(k in 1..=3usize, seed in prop::collection::vec(0..3usize, 12)) {
        let f: Vec<usize> = seed[..k * k].iter().map(|v| v % k).collect();
        let g: Vec<usize> = seed[9..9 + k].iter().map(|v| v % k).collect();
        let alg = binary_algebra(k, &f, &g);
        prop_assert_eq!(parse_algebra(&render_algebra(&alg)).unwrap(), alg);
    }

    #[test]
    fn generated_presentations_round_trip(seed in any::<u64>(), index in 0..1000u64) {
        let case = random_case(seed, index, &GenConfig::default());
        let back = parse_presentation(&render_presentation(&case.presentation)).unwrap();
        prop_assert_eq!(&back.signature, &case.presentation.signature);
        let sorted = |p: &Presentation| {
            let mut eqs: Vec<String> = p.equations.iter().map(|e| format!("{e} / {}", e.var_count)).collect();
            eqs.sort();
            eqs
        };
        prop_assert_eq!(sorted(&back), sorted(&case.presentation));
    }

    #[test]
    fn enumerated_models_satisfy_their_axioms(seed in any::<u64>(), index in 0..1000u64, k in 1..=2usize) {
        let case = random_case(seed, index, &GenConfig::default());
        let p = Arc::new(case.presentation);
        let models = match enumerate_models(&p, k, &EnumConfig::default()) {
            Ok(m) => m,
            Err(_) => return Ok(()),
        };
        for m in &models {
            prop_assert!(m.first_violation().is_none());
        }
        let distinct: std::collections::BTreeSet<Vec<Vec<usize>>> = models.iter().map(|m| m.tables().to_vec()).collect();
        prop_assert_eq!(distinct.len(), models.len());
    }

    #[test]
    fn verdicts_are_sound(seed in any::<u64>(), index in 0..1000u64) {
        let case = random_case(seed, index, &GenConfig::default());
        let config = DecideConfig { max_universe: 50_000, ..DecideConfig::new(3, 2) };
        match decide_equal(&case.presentation, &case.goal, &config) {
            Ok(Verdict::Proved(cert)) => {
                prop_assert!(cert.verify(&case.presentation));
                prop_assert_eq!((&cert.start, &cert.end), (&case.goal.lhs, &case.goal.rhs));
            }
            Ok(Verdict::Refuted { model, assignment }) => {
                prop_assert!(model.first_violation().is_none());
                prop_assert_ne!(model.eval(&case.goal.lhs, &assignment).unwrap(), model.eval(&case.goal.rhs, &assignment).unwrap());
            }
            Ok(Verdict::Unknown { .. }) | Err(DecideError::ResourceCeiling { .. }) | Err(DecideError::Model(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
