use super::*;
use crate::tensor::FiniteMonoid;

fn left_zero() -> FiniteMonoid {
    FiniteMonoid::new("lz", 3, 0, vec![0, 1, 2, 1, 1, 1, 2, 2, 2]).unwrap()
}

#[test]
fn category_file_round_trip_and_errors() {
    let text = "category tri {\n  object a, b, c;\n  arrow f : a -> b;\n  arrow g : b -> c;\n  arrow h : a -> c;\n  comp g.f = h;\n}\n";
    let c = parse_category(text).unwrap();
    assert_eq!(c.arrow_count(), 6);
    assert_eq!(render_category(&c), text);
    let arrow = FiniteCategory::walking_arrow();
    let again = parse_category(&render_category(&arrow)).unwrap();
    assert_eq!(render_category(&again), render_category(&arrow));
    let missing = parse_category("category x { object a, b, c; arrow f : a -> b; arrow g : b -> c; }").unwrap_err();
    assert!(missing.message.contains("missing composite `g.f`"), "{missing}");
    let bad = parse_category("category x { object a;\n arrow f : a -> q; }").unwrap_err();
    assert_eq!((bad.line, bad.column), (2, 17));
    // e.e = f, f.e = e, e.f = e, f.f = f: (e.e).f = f.f = f but e.(e.f) = e.e = f; f.(e.e)...
    let nonassoc = parse_category(
        "category x { object o; arrow e : o -> o; arrow f : o -> o;
         comp e.e = f; comp e.f = e; comp f.e = f; comp f.f = e; }",
    )
    .unwrap_err();
    assert!(nonassoc.message.contains("associative"), "{nonassoc}");
}

#[test]
fn functor_categories() {
    let arrow = FiniteCategory::walking_arrow();
    let fam = functor_hom(&arrow, &arrow, false);
    assert_eq!(fam.functors.len(), 3);
    let nat = functor_hom(&arrow, &arrow, true);
    assert_eq!(nat.category.object_count(), fam.category.object_count());
    for (i, f) in fam.functors.iter().enumerate() {
        for (j, g) in fam.functors.iter().enumerate() {
            let expected: usize =
                (0..arrow.object_count()).map(|x| arrow.hom(f.objects[x], g.objects[x]).len()).product();
            assert_eq!(fam.category.hom(i, j).len(), expected);
            // every natural transformation is a family
            for t in nat.category.hom(i, j) {
                assert!(fam.components.contains(&nat.components[t]));
            }
        }
    }
    assert!(nat.category.arrow_count() <= fam.category.arrow_count());
    let terminal = FiniteCategory::terminal();
    let into_terminal = functor_hom(&arrow, &terminal, true);
    assert_eq!((into_terminal.category.object_count(), into_terminal.category.arrow_count()), (1, 1));
}

#[test]
fn funny_tensor_of_walking_arrows() {
    let arrow = FiniteCategory::walking_arrow();
    let box_ = funny_tensor(&arrow, &arrow);
    let cmp = box_.compare_with_product((0, 0), (1, 1), 8);
    assert_eq!((cmp.funny, cmp.product), (2, 1));
    assert!(!cmp.truncated && cmp.surjective);
    assert_eq!(cmp.merged.len(), 1);
    assert!(box_.local_confluence(4).failure.is_none());
    let (cat, _) = box_.to_category().unwrap();
    assert_eq!(cat.object_count(), 4);
    assert_eq!(cat.hom(0, 3).len(), 2);
}

#[test]
fn funny_tensor_unit_and_infinite_homs() {
    let arrow = FiniteCategory::walking_arrow();
    let unit = funny_tensor(&FiniteCategory::terminal(), &arrow);
    let (cat, _) = unit.to_category().unwrap();
    assert_eq!((cat.object_count(), cat.arrow_count()), (arrow.object_count(), arrow.arrow_count()));
    let z2 = FiniteCategory::from_monoid(&FiniteMonoid::cyclic(2));
    let t = funny_tensor(&z2, &z2);
    let hom = t.hom((0, 0), (0, 0), 4);
    assert!(hom.truncated);
    assert_eq!(hom.words.len(), 1 + 2 + 2 + 2 + 2);
    assert!(t.to_category().is_none());
}

#[test]
fn local_confluence_on_small_categories() {
    let small = [
        FiniteCategory::terminal(),
        FiniteCategory::walking_arrow(),
        FiniteCategory::from_monoid(&FiniteMonoid::cyclic(2)),
        FiniteCategory::from_monoid(&FiniteMonoid::cyclic(3)),
        FiniteCategory::from_monoid(&left_zero()),
        FiniteCategory::discrete(&["p", "q"]),
    ];
    for a in &small {
        for b in &small {
            let report = funny_tensor(a, b).local_confluence(4);
            assert!(report.failure.is_none(), "{} {}", a.name, b.name);
            assert!(report.words_checked > 0);
        }
    }
}

#[test]
fn product_comparison_is_exact_iff_a_side_is_discrete() {
    let cats = [
        FiniteCategory::terminal(),
        FiniteCategory::walking_arrow(),
        FiniteCategory::discrete(&["p", "q"]),
        FiniteCategory::from_monoid(&FiniteMonoid::cyclic(2)),
    ];
    for a in &cats {
        for b in &cats {
            let t = funny_tensor(a, b);
            let squares =
                (0..a.arrow_count()).any(|f| !a.is_identity(f)) && (0..b.arrow_count()).any(|g| !b.is_identity(g));
            let mut all_equal = true;
            for x in 0..a.object_count() {
                for y in 0..b.object_count() {
                    for x2 in 0..a.object_count() {
                        for y2 in 0..b.object_count() {
                            let cmp = t.compare_with_product((x, y), (x2, y2), 6);
                            assert!(cmp.surjective);
                            assert!(cmp.funny >= cmp.product);
                            all_equal &= cmp.funny == cmp.product && !cmp.truncated;
                        }
                    }
                }
            }
            assert_eq!(all_equal, !squares, "{} {}", a.name, b.name);
        }
    }
}

#[test]
fn bifunctor_checks() {
    let arrow = FiniteCategory::walking_arrow();
    let product = FiniteCategory::product(&arrow, &arrow);
    let t = Sesquifunctor::from_product_functor(&arrow, &arrow, &Functor::identity(&product));
    assert_eq!(bifunctor_check(&arrow, &arrow, &product, &t).unwrap(), None);
    assert!(factor_through_product(&arrow, &arrow, &product, &t).unwrap().is_some());

    let (cat, v) = funny_tensor(&arrow, &arrow).universal_sesquifunctor().unwrap();
    let w = bifunctor_check(&arrow, &arrow, &cat, &v).unwrap().unwrap();
    assert_eq!((arrow.arrow_name(w.left_arrow), arrow.arrow_name(w.right_arrow)), ("u", "u"));
    assert_ne!(w.first_left, w.first_right);
    assert!(factor_through_product(&arrow, &arrow, &cat, &v).unwrap().is_none());

    let terminal = FiniteCategory::terminal();
    let (cat, v) = funny_tensor(&arrow, &terminal).universal_sesquifunctor().unwrap();
    assert_eq!(bifunctor_check(&arrow, &terminal, &cat, &v).unwrap(), None);

    let mut broken = t.clone();
    broken.objects[0][0] = 3;
    assert!(matches!(bifunctor_check(&arrow, &arrow, &product, &broken), Err(CatError::ObjectDisagreement(..))));
}

/// Every sesquifunctor from two walking arrows into the funny tensor of
/// two walking arrows: the square condition holds exactly when the
/// factorization through the product exists.
#[test]
fn bifunctors_are_product_functors() {
    let arrow = FiniteCategory::walking_arrow();
    let (c, _) = funny_tensor(&arrow, &arrow).to_category().unwrap();
    let fs = all_functors(&arrow, &c);
    let mut checked = 0;
    for l0 in &fs {
        for l1 in &fs {
            for r0 in &fs {
                for r1 in &fs {
                    let objects = vec![vec![l0.objects[0], l0.objects[1]], vec![l1.objects[0], l1.objects[1]]];
                    let t = Sesquifunctor {
                        objects,
                        fix_left: vec![l0.clone(), l1.clone()],
                        fix_right: vec![r0.clone(), r1.clone()],
                    };
                    if t.validate(&arrow, &arrow, &c).is_err() {
                        continue;
                    }
                    let square = bifunctor_check(&arrow, &arrow, &c, &t).unwrap().is_none();
                    assert_eq!(square, factor_through_product(&arrow, &arrow, &c, &t).unwrap().is_some());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10);
}

#[test]
fn free_sesquicategory_is_not_a_2_category() {
    let s = SesquiData::free_on_two_cells(false);
    assert!(sesqui_validate(&s).passed(), "{:?}", sesqui_validate(&s).failures().collect::<Vec<_>>());
    let failures = interchange_failures(&s).unwrap();
    let (alpha, beta) = (s.find_cell("alpha").unwrap(), s.find_cell("beta").unwrap());
    assert_eq!(failures, vec![(alpha, beta)]);
    let (l, r) = interchange_sides(&s, alpha, beta).unwrap();
    assert_eq!((s.cell_name(l), s.cell_name(r)), ("beta_g_h_alpha", "k_alpha_beta_f"));
    assert!(!is_2_category(&s).unwrap().holds());
    // identity 2-cells always interchange
    let id_f = s.identity_cell(s.base().find_arrow("f").unwrap());
    assert!(sesqui_interchange(&s, id_f, beta).unwrap());
    assert!(sesqui_interchange(&s, beta, alpha).is_err());
}

#[test]
fn two_categories_pass() {
    let corpus = [
        SesquiData::free_on_two_cells(true),
        SesquiData::locally_discrete(FiniteCategory::walking_arrow()),
        SesquiData::locally_discrete(FiniteCategory::from_monoid(&left_zero())),
        SesquiData::from_monoid_cells(&FiniteMonoid::cyclic(3)),
    ];
    for s in &corpus {
        assert!(sesqui_validate(s).passed(), "{}", s.name);
        let r = is_2_category(s).unwrap();
        assert!(r.holds(), "{}: {:?}", s.name, r);
    }
    let s3 = SesquiData::from_monoid_cells(&FiniteMonoid::symmetric(3));
    assert!(sesqui_validate(&s3).passed());
    assert!(!is_2_category(&s3).unwrap().interchange_failures.is_empty());
}

#[test]
fn seeded_whiskering_unit_defect() {
    let mut s = SesquiData::from_monoid_cells(&FiniteMonoid::cyclic(3));
    s.set_whisker_left(0, 1, 2).unwrap();
    let report = sesqui_validate(&s);
    assert!(report.law("whiskering unit").unwrap().failure.is_some());
}

#[test]
fn sesqui_file_round_trip() {
    let s = SesquiData::free_on_two_cells(false);
    let text = render_sesqui(&s);
    let back = parse_sesqui(&text).unwrap();
    assert_eq!(render_sesqui(&back), text);
    assert_eq!(interchange_failures(&back).unwrap().len(), 1);
}

#[test]
fn monoidal_example_has_full_centre() {
    let p = PremonoidalData::pointed_monoid(&FiniteMonoid::cyclic(2));
    let report = premonoidal_validate(&p);
    assert!(report.passed() && report.non_central.is_empty());
    let centre = premonoidal_centre(&p).unwrap();
    assert_eq!(centre.arrows.len(), p.base().arrow_count());
    assert!(centre.monoidal);
}

#[test]
fn seeded_premonoidal_example() {
    let p = PremonoidalData::pointed_monoid(&left_zero());
    let report = premonoidal_validate(&p);
    assert!(report.passed(), "{:?}", report.report.failures().collect::<Vec<_>>());
    let names: Vec<&str> = report.non_central.iter().map(|&f| p.base().arrow_name(f)).collect();
    assert_eq!(names, ["m1", "m2"]);
    let centre = premonoidal_centre(&p).unwrap();
    assert_eq!(centre.arrows.len(), 2);
    assert!(centre.monoidal);
    assert!(freyd_validate(&centre.data, &p, &centre.inclusion).unwrap().passed());
    let all: Vec<usize> = (0..p.base().arrow_count()).collect();
    let (x, y) = freyd_cospan_witness(&p, &all, &all).unwrap();
    assert_eq!((p.base().arrow_name(x), p.base().arrow_name(y)), ("m1", "m2"));
    assert!(freyd_cospan_commutes(&p, &centre.arrows, &centre.arrows));
    assert!(freyd_cospan_commutes(&p, &[], &all));
    // each non-central arrow breaks a square against some arrow
    for &f in &report.non_central {
        let (g, _) = centrality_witness(&p, f).unwrap();
        assert!(freyd_cospan_witness(&p, &[f], &[g]).is_some() || freyd_cospan_witness(&p, &[g], &[f]).is_some());
    }
}

#[test]
fn seeded_pentagon_defect() {
    let mut p = PremonoidalData::pointed_monoid(&FiniteMonoid::cyclic(2));
    let t = p.base().find_arrow("m1").unwrap();
    p.set_assoc(1, 1, 1, t).unwrap();
    let report = premonoidal_validate(&p);
    let failed: Vec<&str> = report.report.failures().map(|f| f.0).collect();
    assert_eq!(failed, ["pentagon"]);
}

#[test]
fn freyd_with_non_central_image() {
    let m = PremonoidalData::pointed_monoid(&left_zero());
    let idem = FiniteMonoid::new("idem", 2, 0, vec![0, 1, 1, 1]).unwrap();
    let a = PremonoidalData::pointed_monoid(&idem);
    let f = Functor { objects: vec![0, 1], arrows: vec![0, 1, 2] };
    let report = freyd_validate(&a, &m, &f).unwrap();
    let failed: Vec<&str> = report.failures().map(|f| f.0).collect();
    assert_eq!(failed, ["image is central"]);
    let bad = Functor { objects: vec![1, 1], arrows: vec![1, 1, 2] };
    assert_eq!(freyd_validate(&a, &m, &bad), Err(CatError::NotBijectiveOnObjects));
    let trivial = PremonoidalData::from_monoid(&FiniteMonoid::trivial());
    let id = Functor::identity(trivial.base());
    assert!(freyd_validate(&trivial, &trivial, &id).unwrap().passed());
    assert!(premonoidal_validate(&trivial).posetal);
}

#[test]
fn premonoidal_file_round_trip() {
    let p = PremonoidalData::pointed_monoid(&left_zero());
    let text = render_premonoidal(&p);
    let back = parse_premonoidal(&text).unwrap();
    assert_eq!(back, p);
    let short = parse_premonoidal(
        "premonoidal m { object i, x; arrow a : x -> x; comp a.a = a;
         unit i; tensor i * i = i; tensor i * x = x; tensor x * i = x; tensor x * x = x;
         left i * a = a; left x * a = a; right a * i = a; right a * x = a; }",
    )
    .unwrap();
    assert!(premonoidal_validate(&short).passed());
}
