mod common;

use bifrac::fixtures::{builtin_loader, SUITE};
use bifrac::fractions::{Span, TwoCellRep};
use bifrac::gtilde::{g_tilde_on_rep, g_tilde_on_two_cell, induce_g_tilde, GTildeError};
use bifrac::wclass::{internal_equivalences_class, quasi_units};
use bifrac::*;
use common::*;

#[test]
fn identity_and_fixture_functors_validate() {
    for name in FIXTURES {
        let d = doc(name);
        assert!(validate_psfun(&PsFun::identity(&d.bicat)).pass, "{name}");
        for (f, _) in &d.psfuns {
            let r = d.resolve_psfun(f, &builtin_loader).unwrap();
            let v = validate_psfun(&r.psfun);
            assert!(v.pass, "{name}/{f}: {:?}", v.violations.first());
        }
    }
}

#[test]
fn perturbed_psi_is_incoherent() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let id = PsFun::identity(b);
    let mut psi = id.psi_table().clone();
    let idb = one(b, "id_B");
    psi.insert((idb, idb), two(b, "gamma"));
    let f0 = b.objects().collect();
    let f1 = b.one_cells().collect();
    let f2 = b.two_cells().collect();
    let sigma = b.objects().map(|x| b.id2(b.id1(x))).collect();
    let bad = PsFun::new("bad", b.clone(), b.clone(), f0, f1, f2, psi, sigma).unwrap();
    let r = validate_psfun(&bad);
    assert!(!r.pass);
    // γ commutes with every 2-cell of its hom, so naturality survives; the unit law does not.
    assert!(!r.violates(Law::Naturality));
    assert!(r.violates(Law::UnitCoherence));
    assert!(r.violations.iter().any(|v| v.cells.iter().any(|c| c == "id_B")));
}

#[test]
fn maps_into_examples() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let id = PsFun::identity(b);
    let w = d.class("W").unwrap();
    assert!(maps_into(&id, &w, w.saturated()).is_ok());
    assert_eq!(maps_into(&id, &w, quasi_units(b).saturated()), Err(one(b, "v")));

    let u = d.resolve_psfun("UW", &builtin_loader).unwrap();
    let eq = internal_equivalences_class(u.psfun.target());
    assert!(maps_into(&u.psfun, &w, &eq).is_ok());
    assert!(maps_to_equivalences(&u.psfun, &w).is_ok());
    assert_eq!(maps_to_equivalences(&id, &w), Err(one(b, "v")));
}

#[test]
fn g_tilde_for_the_identity() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let w = d.class("W").unwrap();
    let id = PsFun::identity(b);
    let g = induce_g_tilde(&id, &w, &w).unwrap();
    let avv = Span { apex: obj(b, "A"), back: one(b, "v"), forward: one(b, "v") };
    let s = g.source.span_id(&avv).unwrap();
    assert_eq!(g.target.span(g.psfun.f1(s)), &avv);
    for f in g.source.bicat().one_cells() {
        assert_eq!(g.target.span(g.psfun.f1(f)), g.source.span(f));
    }

    let bid = g.source.span_id(&Span { apex: obj(b, "B"), back: one(b, "id_B"), forward: one(b, "id_B") }).unwrap();
    let rep = |beta| TwoCellRep { apex: obj(b, "B"), leg1: one(b, "id_B"), leg2: one(b, "id_B"), alpha: two(b, "i_id_B"), beta };
    let cg = g.source.class_of(&rep(two(b, "gamma")), bid, bid).unwrap();
    let ci = g.source.class_of(&rep(two(b, "i_id_B")), bid, bid).unwrap();
    assert_eq!(g_tilde_on_two_cell(&g, cg), g_tilde_on_two_cell(&g, ci));
    assert!(g.target.bicat().is_identity2(g_tilde_on_two_cell(&g, cg)));
}

#[test]
fn g_tilde_rejects_classes_not_mapped_into_the_saturation() {
    let d = doc("appx-toy");
    let id = PsFun::identity(&d.bicat);
    let e = induce_g_tilde(&id, &d.class("W").unwrap(), &quasi_units(&d.bicat)).unwrap_err();
    assert!(matches!(&e, GTildeError::MapsInto { cell, .. } if cell == "v"), "{e}");
}

#[test]
fn g_tilde_is_well_defined_on_classes() {
    for e in SUITE {
        let c = e.load().unwrap();
        let g = induce_g_tilde(&c.psfun, &c.w_a, &c.w_b).unwrap();
        let sb = g.source.bicat();
        for cls in sb.two_cells() {
            let k = g.source.class(cls);
            let (s1, s2) = (g.source.span(k.src), g.source.span(k.tgt));
            let want = g_tilde_on_two_cell(&g, cls);
            for m in &k.members {
                assert_eq!(g_tilde_on_rep(&c.psfun, &g.target, s1, s2, m), Some(want), "{e}");
            }
        }
        assert!(validate_psfun(&g.psfun).pass, "{e}");
    }
}
