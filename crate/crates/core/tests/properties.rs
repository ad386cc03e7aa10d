mod common;

use bifrac::conditions::*;
use bifrac::fractions::*;
use bifrac::gtilde::induce_g_tilde;
use bifrac::wclass::{internal_equivalences_class, quasi_units};
use bifrac::*;
use common::*;
use proptest::prelude::*;

/// Expression skeletons; cell indices are reduced modulo the instance size.
#[derive(Debug, Clone)]
enum Shape {
    Atom(usize),
    Id(usize),
    Assoc(usize, usize, usize, bool),
    Unit(usize, u8),
    V(Box<Shape>, Box<Shape>),
    H(Box<Shape>, Box<Shape>),
    L(usize, Box<Shape>),
    R(Box<Shape>, usize),
    Inv(Box<Shape>),
}

fn shape() -> impl Strategy<Value = Shape> {
    let leaf = prop_oneof![
        any::<usize>().prop_map(Shape::Atom),
        any::<usize>().prop_map(Shape::Id),
        (any::<usize>(), any::<usize>(), any::<usize>(), any::<bool>()).prop_map(|(a, b, c, i)| Shape::Assoc(a, b, c, i)),
        (any::<usize>(), 0u8..4).prop_map(|(f, k)| Shape::Unit(f, k)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Shape::V(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Shape::H(Box::new(a), Box::new(b))),
            (any::<usize>(), inner.clone()).prop_map(|(g, a)| Shape::L(g, Box::new(a))),
            (inner.clone(), any::<usize>()).prop_map(|(a, f)| Shape::R(Box::new(a), f)),
            inner.prop_map(|a| Shape::Inv(Box::new(a))),
        ]
    })
}

fn build(b: &FinBicat, s: &Shape) -> PastingExpr {
    let one = |i: usize| OneId(i % b.num_one_cells());
    match s {
        Shape::Atom(i) => PastingExpr::atom(TwoId(i % b.num_two_cells())),
        Shape::Id(i) => PastingExpr::IdOn(one(*i)),
        Shape::Assoc(h, g, f, false) => PastingExpr::Assoc(one(*h), one(*g), one(*f)),
        Shape::Assoc(h, g, f, true) => PastingExpr::AssocInv(one(*h), one(*g), one(*f)),
        Shape::Unit(f, k) => match k {
            0 => PastingExpr::RUnit(one(*f)),
            1 => PastingExpr::RUnitInv(one(*f)),
            2 => PastingExpr::LUnit(one(*f)),
            _ => PastingExpr::LUnitInv(one(*f)),
        },
        Shape::V(a, c) => PastingExpr::vcomp(build(b, a), build(b, c)),
        Shape::H(a, c) => PastingExpr::hcomp(build(b, a), build(b, c)),
        Shape::L(g, a) => PastingExpr::wl(one(*g), build(b, a)),
        Shape::R(a, f) => PastingExpr::wr(build(b, a), one(*f)),
        Shape::Inv(a) => PastingExpr::inv(build(b, a)),
    }
}

/// Only coherence cells and identities.
fn structural(s: &Shape) -> bool {
    match s {
        Shape::Atom(_) => false,
        Shape::Id(_) | Shape::Assoc(..) | Shape::Unit(..) => true,
        Shape::V(a, c) | Shape::H(a, c) => structural(a) && structural(c),
        Shape::L(_, a) | Shape::R(a, _) | Shape::Inv(a) => structural(a),
    }
}

fn preorder_case() -> impl Strategy<Value = (Vec<Vec<bool>>, Vec<bool>, Vec<bool>)> {
    (1usize..=3).prop_flat_map(|n| {
        (prop::collection::vec(any::<bool>(), n * n), prop::collection::vec(any::<bool>(), 6), prop::collection::vec(any::<bool>(), 6))
            .prop_map(move |(rel, wa, extra)| (preorder(n, &rel), wa, extra))
    })
}

fn union(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| *x || *y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn evaluation_respects_inferred_boundaries(fx in 0usize..FIXTURES.len(), s in shape()) {
        let d = doc(FIXTURES[fx]);
        let b = &d.bicat;
        let e = build(b, &s);
        if let Ok(bd) = infer_boundary(b, &e) {
            match eval_pasting(b, &e) {
                Ok(a) => prop_assert_eq!((b.src1(a), b.tgt1(a)), (bd.src, bd.tgt)),
                Err(PastingError::NotInvertible { .. }) => {}
                Err(err) => prop_assert!(false, "typable expression failed: {}", err),
            }
        } else {
            prop_assert!(eval_pasting(b, &e).is_err());
        }
    }

    #[test]
    fn coherence_cells_are_identities_in_strict_instances(fx in 0usize..FIXTURES.len(), s in shape()) {
        prop_assume!(structural(&s));
        let d = doc(FIXTURES[fx]);
        let b = &d.bicat;
        if let Ok(a) = eval_pasting(b, &build(b, &s)) {
            prop_assert!(b.is_identity2(a));
        }
    }

    #[test]
    fn fast_path_does_not_change_values(fx in 0usize..FIXTURES.len(), s in shape()) {
        let d = doc(FIXTURES[fx]);
        let fast = d.clone().with_fast_path(true);
        let e = build(&d.bicat, &s);
        prop_assert_eq!(eval_pasting(&d.bicat, &e), eval_pasting(&fast.bicat, &e));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn preorders_are_lawful((r, wa, _) in preorder_case()) {
        let d = preorder_doc(&r, &wa);
        prop_assert!(validate_bicat(&d.bicat).pass);
        for x in d.bicat.objects() {
            prop_assert!(internal_equivalence_witness(&d.bicat, d.bicat.id1(x)).is_some());
        }
    }

    #[test]
    fn saturation_laws((r, wa, _) in preorder_case()) {
        let d = preorder_doc(&r, &wa);
        let b = &d.bicat;
        let w = d.class("W").unwrap();
        let qu = quasi_units(b);
        prop_assert!(qu.bf_report().passes());
        prop_assert!(qu.saturated().same_members(&internal_equivalences_class(b)));
        if w.bf_report().passes() {
            let sat = w.saturated();
            prop_assert!(w.is_subset_of(sat));
            prop_assert!(sat.saturated().same_members(sat));
            for u in b.one_cells() {
                for x in b.one_cells().filter(|&x| b.src(x) == b.tgt(u) && sat.contains(x)) {
                    if sat.contains(b.comp1(x, u).unwrap()) {
                        prop_assert!(sat.contains(u));
                    }
                }
            }
        }
    }

    #[test]
    fn localizations_are_lawful((r, wa, _) in preorder_case()) {
        let d = preorder_doc(&r, &wa);
        let w = d.class("W").unwrap();
        prop_assume!(w.bf_report().passes());
        let loc = materialize_fractions(&d.bicat, &w).unwrap();
        prop_assert!(loc.validation().pass);
        for f in loc.bicat().one_cells() {
            prop_assert_eq!(span_is_equivalence(&w, loc.span(f)), loc.bicat().is_equivalence(f));
        }
        let u = universal_pseudofunctor(&loc).unwrap();
        prop_assert!(validate_psfun(&u).pass);
        prop_assert!(maps_to_equivalences(&u, &w).is_ok());
    }

    #[test]
    fn criteria_agree_on_preorders((r, wa, extra) in preorder_case()) {
        let d = preorder_doc(&r, &wa);
        let b = &d.bicat;
        let w_a = d.class("W").unwrap();
        let wb_doc = preorder_doc(&r, &union(&wa, &extra));
        let w_b = WClass::new(b.clone(), "W_B", wb_doc.class("W").unwrap().members()).unwrap();
        let id = PsFun::identity(b);
        let cx = CheckContext::new(&id, Some(&w_a), Some(&w_b));
        prop_assume!(precondition(Family::A, &cx).is_ok());

        let reg = ConditionRegistry::standard();
        let a: Vec<bool> = reg.family(Family::A).map(|c| decide(c, &cx).verdict).collect();
        prop_assert!(a[3], "A4 holds on locally discrete instances");
        let g = induce_g_tilde(&id, &w_a, &w_b).unwrap();
        prop_assert_eq!(is_weak_equivalence(&g.psfun).verdict, a.iter().all(|v| *v));

        let rep = cross_validate_theorems(&id, &w_a, &w_b);
        prop_assert!(rep.findings.is_empty(), "{:?}", rep.findings);
        let cb = CheckContext::new(&id, Some(&w_a), None);
        if precondition(Family::B, &cb).is_ok() {
            prop_assert!(decide(reg.get(ConditionTag::B4).unwrap(), &cb).verdict);
        }
    }
}

#[test]
fn interchange_orders_agree() {
    for name in FIXTURES {
        let d = doc(name);
        let b = &d.bicat;
        for beta in b.two_cells() {
            for alpha in b.two_cells() {
                if b.tgt(b.src1(alpha)) == b.src(b.src1(beta)) {
                    assert_eq!(b.hcomp2(beta, alpha).unwrap(), b.hcomp2_alt(beta, alpha).unwrap(), "{name}");
                }
            }
        }
    }
}

#[test]
fn inverses_are_involutive() {
    for name in FIXTURES {
        let d = doc(name);
        let b = &d.bicat;
        for a in b.two_cells() {
            if let Some(i) = two_cell_inverse(b, a) {
                assert_eq!(two_cell_inverse(b, i), Some(a), "{name}");
            }
        }
        for x in b.objects() {
            assert!(internal_equivalence_witness(b, b.id1(x)).is_some());
        }
    }
}

fn frames(b: &FinBicat, w: &WClass) -> Vec<(Span, Span, Vec<TwoCellRep>)> {
    let spans = all_spans(b, w);
    let mut out = Vec::new();
    for s1 in &spans {
        for s2 in spans.iter().filter(|s| s.src(b) == s1.src(b) && s.tgt(b) == s1.tgt(b)) {
            out.push((*s1, *s2, enumerate_reps(b, w, s1, s2)));
        }
    }
    out
}

#[test]
fn refinement_is_an_equivalence_relation() {
    for name in FIXTURES {
        let d = doc(name);
        let b = &d.bicat;
        for w in d.classes.iter().filter(|w| w.bf_report().passes()) {
            for (s1, s2, reps) in frames(b, w) {
                let eq = |x: &TwoCellRep, y: &TwoCellRep| reps_equivalent(b, w, x, y, &s1, &s2).0;
                for x in &reps {
                    assert!(eq(x, x));
                    for y in &reps {
                        assert_eq!(eq(x, y), eq(y, x), "{name}");
                        for z in &reps {
                            if eq(x, y) && eq(y, z) {
                                assert!(eq(x, z), "{name}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn fast_path_agrees_with_refinement_search() {
    let mut applicable = 0;
    for name in FIXTURES {
        let d = doc(name);
        let b = &d.bicat;
        for w in d.classes.iter().filter(|w| w.bf_report().passes()) {
            for (s1, s2, reps) in frames(b, w) {
                for x in &reps {
                    for y in &reps {
                        if let Some(z) = fast_path_equivalent(b, w, x, y, &s1) {
                            applicable += 1;
                            assert_eq!(z.is_some(), find_refinement(b, w, x, y, &s1, &s2).is_some(), "{name}");
                        }
                    }
                }
            }
        }
    }
    assert!(applicable > 0);
}
