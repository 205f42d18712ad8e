use std::collections::BTreeSet;

use super::*;
use crate::clone::{op_commutes, validate_clone};
use crate::model::EnumConfig;

fn perm(values: &[usize]) -> FinMap {
    FinMap::new(values.len(), values.iter().map(|v| v - 1).collect())
}

fn ass_elem(o: &SymOperadTruncation, word: &[usize]) -> OpElem {
    let name: String = word.iter().map(|v| v.to_string()).collect();
    o.find(&format!("a{name}")).unwrap()
}

#[test]
fn builtins_validate() {
    let cfg = LawConfig::default();
    for o in [SymOperadTruncation::com(4), SymOperadTruncation::ass(4), SymOperadTruncation::trivial(4)] {
        let report = validate_operad(&o, &cfg);
        assert!(report.passed(), "{}: {:?}", o.name, report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn ass_is_exhaustive_at_bound_three() {
    let report = validate_operad(&SymOperadTruncation::ass(3), &LawConfig::default());
    assert!(report.passed());
    assert!(report.laws.iter().all(|l| l.exhaustive && l.instances > 0));
}

#[test]
fn seeded_equivariance_defect_is_named() {
    let mut o = SymOperadTruncation::ass(3);
    let (e1, e2) = (ass_elem(&o, &[1]), ass_elem(&o, &[1, 2]));
    let wrong = ass_elem(&o, &[3, 2, 1]);
    o.set_gamma(e2, &[e2, e1], wrong.id);
    let report = validate_operad(&o, &LawConfig::default());
    let failed: Vec<&str> = report.failures().map(|f| f.0).collect();
    assert!(failed.contains(&"equivariance in the arguments"), "{failed:?}");
}

#[test]
fn ass_composition_examples() {
    let o = SymOperadTruncation::ass(4);
    let (e1, e2, e3) = (ass_elem(&o, &[1]), ass_elem(&o, &[1, 2]), ass_elem(&o, &[1, 2, 3]));
    let swap = ass_elem(&o, &[2, 1]);
    assert_eq!(operad_compose(&o, e2, &[e2, e1]).unwrap(), e3);
    assert_eq!(operad_compose(&o, swap, &[e1, e1]).unwrap(), swap);
    assert_eq!(operad_compose(&o, o.unit(), &[swap]).unwrap(), swap);
    // x2 x1 with x1 := x1 x2: x3 x1 x2
    assert_eq!(operad_compose(&o, swap, &[e2, e1]).unwrap(), ass_elem(&o, &[3, 1, 2]));
    assert_eq!(o.act(e2, &perm(&[2, 1])).unwrap(), swap);
    assert!(matches!(operad_compose(&o, e3, &[e2, e2, e1]), Err(OperadError::BoundExceeded { arity: 5, bound: 4 })));
}

#[test]
fn pair_commutation_examples() {
    let ass = SymOperadTruncation::ass(4);
    let e2 = ass_elem(&ass, &[1, 2]);
    assert!(!operad_pair_commutes(&ass, e2, e2).unwrap());
    for n in 0..=4 {
        for f in ass.elements(n) {
            assert!(operad_pair_commutes(&ass, ass.unit(), f).unwrap());
            assert!(operad_pair_commutes(&ass, f, ass.unit()).unwrap());
        }
    }
    let com = SymOperadTruncation::com(4);
    for (n, m) in [(1, 4), (2, 2), (0, 3), (2, 1)] {
        assert!(operad_pair_commutes(&com, OpElem::new(n, 0), OpElem::new(m, 0)).unwrap());
    }
    assert!(operad_pair_commutes(&com, OpElem::new(2, 0), OpElem::new(3, 0)).is_err());
}

#[test]
fn commutation_does_not_depend_on_flattening() {
    for o in [SymOperadTruncation::ass(4), SymOperadTruncation::com(4)] {
        for n in 0..=4 {
            for m in 0..=4 {
                if n * m > 4 {
                    continue;
                }
                for psi in o.elements(n) {
                    for phi in o.elements(m) {
                        let lhs = o.compose(psi, &vec![phi; n]).unwrap();
                        let rhs = o.compose(phi, &vec![psi; m]).unwrap();
                        let column_major = o.act(lhs, &FinMap::transpose(m, n)).unwrap() == rhs;
                        assert_eq!(operad_pair_commutes(&o, psi, phi).unwrap(), column_major);
                    }
                }
            }
        }
    }
}

#[test]
fn theory_sizes() {
    let (th, _) = theory_of_operad(&SymOperadTruncation::com(2), 2);
    assert_eq!(th.size(2), 6);
    // multisets of size at most K over n variables
    let (th, _) = theory_of_operad(&SymOperadTruncation::com(4), 3);
    let binom = |a: usize, b: usize| (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1));
    for n in 0..=3 {
        let expected: usize = (0..=4).map(|k| if n == 0 { usize::from(k == 0) } else { binom(n + k - 1, k) }).sum();
        assert_eq!(th.size(n), expected, "n={n}");
    }
    let (th, _) = theory_of_operad(&SymOperadTruncation::trivial(3), 3);
    for n in 0..=3 {
        assert_eq!(th.size(n), n);
    }
}

/// Orbits of `O(k)` under `S_k`, found by closing each element under the
/// whole group.
fn orbit_count(o: &SymOperadTruncation, k: usize) -> usize {
    let orbits: BTreeSet<BTreeSet<usize>> =
        o.elements(k).map(|f| o.permutations(k).iter().map(|s| o.act(f, s).unwrap().id).collect()).collect();
    orbits.len()
}

#[test]
fn unary_theory_counts_orbits() {
    for o in [SymOperadTruncation::ass(4), SymOperadTruncation::com(4), SymOperadTruncation::trivial(4)] {
        let (th, _) = theory_of_operad(&o, 1);
        let expected: usize = (0..=4).map(|k| orbit_count(&o, k)).sum();
        assert_eq!(th.size(1), expected, "{}", o.name);
    }
}

#[test]
fn theories_are_clones() {
    let cfg = LawConfig::default();
    for o in [SymOperadTruncation::com(4), SymOperadTruncation::ass(4), SymOperadTruncation::trivial(4)] {
        let (th, _) = theory_of_operad(&o, 3);
        let report = validate_clone(&th, &cfg);
        assert!(report.passed(), "{}: {:?}", o.name, report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn theory_commutation_matches_operad_commutation() {
    for o in [SymOperadTruncation::ass(4), SymOperadTruncation::com(4)] {
        let (th, data) = theory_of_operad(&o, 4);
        let mut checked = 0;
        for n in 0..=4 {
            for m in 0..=4 {
                if n * m > 4 {
                    continue;
                }
                for psi in o.elements(n) {
                    for phi in o.elements(m) {
                        let (a, b) = (theory_image(&data, psi).unwrap(), theory_image(&data, phi).unwrap());
                        assert_eq!(
                            operad_pair_commutes(&o, psi, phi).unwrap(),
                            op_commutes(&th, a, b).unwrap(),
                            "{}: {} {}",
                            o.name,
                            o.name_of(psi),
                            o.name_of(phi)
                        );
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn operad_file_round_trip() {
    let o = SymOperadTruncation::ass(3);
    let text = render_operad(&o);
    let back = parse_operad(&text).unwrap();
    assert_eq!(render_operad(&back), text);
    assert!(validate_operad(&back, &LawConfig::default()).passed());
    let err = parse_operad("operad x {\n  arity 0 = [];\n  arity 1 = [id];\n  unit idd;\n}").unwrap_err();
    assert_eq!((err.line, err.column), (4, 8));
}

#[test]
fn presentation_parsing() {
    let text = "operad_presentation bv {
        gen psi:2; gen phi:2;
        rel psi(phi(1,2),phi(3,4)) = phi(psi(1,2),psi(3,4)) . perm(1,3,2,4);
    }";
    let p = parse_operad_presentation(text).unwrap();
    assert_eq!(p.relations[0].to_string(), "psi(phi(1,2),phi(3,4)) = phi(psi(1,3),psi(2,4))");
    let back = parse_operad_presentation(&render_operad_presentation(&p)).unwrap();
    assert_eq!(back, p);
    let err = parse_operad_presentation("operad_presentation x { gen m:2;\n rel m(1,1) = m(1,2); }").unwrap_err();
    assert_eq!(err.line, 2);
    assert!(parse_operad_presentation("operad_presentation x { gen m:2; rel m(1) = 1; }").is_err());
}

#[test]
fn bv_relation_is_the_interchange() {
    let bv = bv_tensor_presentation(&OperadPresentation::ass(), &OperadPresentation::ass());
    assert_eq!(bv.generators, vec![("m_1".to_string(), 2), ("m_2".to_string(), 2)]);
    assert_eq!(bv.relations.len(), 3);
    assert_eq!(bv.relations[2].to_string(), "m_1(m_2(1,2),m_2(3,4)) = m_2(m_1(1,3),m_1(2,4))");
    let p = OperadPresentation::ass_unital();
    let with_trivial = bv_tensor_presentation(&p, &OperadPresentation::trivial());
    assert_eq!(with_trivial.generators, p.generators);
    assert_eq!(with_trivial.relations, p.relations);
}

#[test]
fn algebra_counts() {
    let cfg = EnumConfig::default();
    let count = |p: &OperadPresentation, k| enumerate_operad_algebras(p, k, &cfg).unwrap().len();
    assert_eq!(count(&OperadPresentation::ass(), 2), 8);
    assert_eq!(count(&OperadPresentation::ass_unital(), 2), 4);
    for k in 0..=3 {
        assert_eq!(count(&OperadPresentation::trivial(), k), 1);
    }
    let unital = OperadPresentation::ass_unital();
    let bv = bv_tensor_presentation(&unital, &unital);
    assert_eq!(count(&bv, 2), 4);
    assert_eq!(count(&OperadPresentation::com(), 2), 4);
    let com = OperadPresentation::com();
    let cc = bv_tensor_presentation(&com, &com);
    for k in 0..=3 {
        assert_eq!(count(&cc, k), count(&com, k), "k={k}");
    }
}

#[test]
fn bv_algebras_are_interchanging_pairs() {
    let cfg = EnumConfig::default();
    let corpus = [
        OperadPresentation::ass(),
        OperadPresentation::ass_unital(),
        OperadPresentation::com(),
        OperadPresentation::trivial(),
    ];
    for p1 in &corpus {
        for p2 in &corpus {
            for k in 0..=3 {
                let bv = bv_tensor_presentation(p1, p2);
                let tensor = enumerate_operad_algebras(&bv, k, &cfg).unwrap().len();
                let pairs = interchanging_pairs(p1, p2, k, &cfg).unwrap().len();
                assert_eq!(tensor, pairs, "{} {} k={k}", p1.name, p2.name);
            }
        }
    }
}
