mod common;

use bifrac::fractions::*;
use bifrac::presentation::Document;
use bifrac::wclass::quasi_units;
use bifrac::{validate_bicat, validate_psfun, FinBicat, WClass};
use common::*;

fn span(b: &FinBicat, apex: &str, back: &str, forward: &str) -> Span {
    Span { apex: obj(b, apex), back: one(b, back), forward: one(b, forward) }
}

fn rep(b: &FinBicat, apex: &str, l1: &str, l2: &str, alpha: &str, beta: &str) -> TwoCellRep {
    TwoCellRep { apex: obj(b, apex), leg1: one(b, l1), leg2: one(b, l2), alpha: two(b, alpha), beta: two(b, beta) }
}

fn spans_oracle(b: &FinBicat, w: &WClass) -> Vec<Span> {
    let mut out = Vec::new();
    for apex in b.objects() {
        for back in b.one_cells().filter(|&f| b.src(f) == apex && w.contains(f)) {
            for forward in b.one_cells().filter(|&f| b.src(f) == apex) {
                out.push(Span { apex, back, forward });
            }
        }
    }
    out.sort();
    out
}

fn reps_oracle(b: &FinBicat, w: &WClass, s1: &Span, s2: &Span) -> Vec<TwoCellRep> {
    let mut out = Vec::new();
    for apex in b.objects() {
        for leg1 in b.hom(apex, s1.apex).iter().copied() {
            for leg2 in b.hom(apex, s2.apex).iter().copied() {
                let wv1 = b.comp1(s1.back, leg1).unwrap();
                if !w.contains(wv1) {
                    continue;
                }
                let wv2 = b.comp1(s2.back, leg2).unwrap();
                let (fv1, fv2) = (b.comp1(s1.forward, leg1).unwrap(), b.comp1(s2.forward, leg2).unwrap());
                for &alpha in b.frame(wv1, wv2).iter().filter(|&&a| b.is_invertible(a)) {
                    for &beta in b.frame(fv1, fv2) {
                        out.push(TwoCellRep { apex, leg1, leg2, alpha, beta });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Number of refinement classes over all parallel span pairs, by brute-force partitioning.
fn class_count_oracle(b: &FinBicat, w: &WClass) -> usize {
    let spans = spans_oracle(b, w);
    let mut total = 0;
    for s1 in &spans {
        for s2 in spans.iter().filter(|s2| s2.src(b) == s1.src(b) && s2.tgt(b) == s1.tgt(b)) {
            let reps = reps_oracle(b, w, s1, s2);
            let mut reps_of_classes: Vec<&TwoCellRep> = Vec::new();
            for r in &reps {
                if !reps_of_classes.iter().any(|c| reps_equivalent(b, w, c, r, s1, s2).0) {
                    reps_of_classes.push(r);
                }
            }
            total += reps_of_classes.len();
        }
    }
    total
}

fn toy() -> (Document, WClass, WClass) {
    let d = doc("appx-toy");
    let (w, wm) = (d.class("W").unwrap(), d.class("Wmin").unwrap());
    (d, w, wm)
}

#[test]
fn span_enumeration() {
    let (d, w, _) = toy();
    let b = &d.bicat;
    let (a, bb) = (obj(b, "A"), obj(b, "B"));
    assert_eq!(enumerate_spans(b, &w, bb, bb), [span(b, "A", "v", "v"), span(b, "B", "id_B", "id_B")]);
    assert_eq!(enumerate_spans(b, &w, a, bb), [span(b, "A", "id_A", "v")]);
    let ar = doc("arrow2");
    let b2 = &ar.bicat;
    let w2 = ar.class("W").unwrap();
    assert_eq!(
        enumerate_spans(b2, &w2, obj(b2, "X"), obj(b2, "Y")),
        [span(b2, "X", "id_X", "a"), span(b2, "X", "id_X", "b")]
    );
}

#[test]
fn spans_match_the_oracle() {
    for name in FIXTURES {
        let d = doc(name);
        for w in &d.classes {
            let mut got = all_spans(&d.bicat, w);
            got.sort();
            assert_eq!(got, spans_oracle(&d.bicat, w), "{name}/{}", w.name());
        }
    }
}

#[test]
fn representative_validity() {
    let (d, w, _) = toy();
    let b = &d.bicat;
    let s = span(b, "B", "id_B", "id_B");
    assert!(validate_rep(b, &w, &rep(b, "B", "id_B", "id_B", "i_id_B", "gamma"), &s, &s).is_ok());
    assert!(validate_rep(b, &w, &rep(b, "A", "v", "v", "i_v", "i_v"), &s, &s).is_ok());
    assert!(validate_rep(b, &w, &rep(b, "A", "v", "v", "i_id_B", "i_v"), &s, &s).is_err());
}

#[test]
fn enumerated_reps_match_the_oracle() {
    for name in FIXTURES {
        let d = doc(name);
        for w in d.classes.iter().filter(|w| w.bf_report().passes()) {
            let spans = spans_oracle(&d.bicat, w);
            for s1 in &spans {
                for s2 in spans.iter().filter(|s2| s2.src(&d.bicat) == s1.src(&d.bicat) && s2.tgt(&d.bicat) == s1.tgt(&d.bicat)) {
                    let mut got = enumerate_reps(&d.bicat, w, s1, s2);
                    got.sort();
                    assert_eq!(got, reps_oracle(&d.bicat, w, s1, s2), "{name}");
                    for r in &got {
                        assert!(validate_rep(&d.bicat, w, r, s1, s2).is_ok());
                    }
                }
            }
        }
    }
}

#[test]
fn gamma_and_identity_are_identified_only_with_v() {
    let (d, w, wm) = toy();
    let b = &d.bicat;
    let s = span(b, "B", "id_B", "id_B");
    let (rg, ri) = (rep(b, "B", "id_B", "id_B", "i_id_B", "gamma"), rep(b, "B", "id_B", "id_B", "i_id_B", "i_id_B"));
    let (eq, rf) = reps_equivalent(b, &w, &rg, &ri, &s, &s);
    assert!(eq);
    let rf = rf.unwrap();
    assert_eq!((rf.u1, rf.u2), (one(b, "v"), one(b, "v")));
    assert!(is_refinement(b, &w, &rg, &ri, &s, &s, &rf));
    assert!(!reps_equivalent(b, &wm, &rg, &ri, &s, &s).0);
    assert!(reps_equivalent(b, &wm, &rg, &rg, &s, &s).0);
}

#[test]
fn span_composition_examples() {
    let (d, w, _) = toy();
    let b = &d.bicat;
    let ida = span(b, "A", "id_A", "id_A");
    assert_eq!(compose_spans(b, &w, &ida, &ida).unwrap().span, ida);

    let c = compose_spans(b, &w, &span(b, "B", "id_B", "id_B"), &span(b, "A", "v", "v")).unwrap();
    assert_eq!(c.span, span(b, "A", "v", "v"));
    assert_eq!((c.filler.apex, c.filler.v, c.filler.g, c.filler.rho), (obj(b, "A"), one(b, "id_A"), one(b, "v"), two(b, "i_v")));

    let c = compose_spans(b, &w, &span(b, "A", "v", "id_A"), &span(b, "A", "id_A", "v")).unwrap();
    assert_eq!((c.span.src(b), c.span.tgt(b)), (obj(b, "A"), obj(b, "A")));
    assert_eq!(c.span, ida);

    assert!(compose_spans(b, &w, &span(b, "A", "id_A", "v"), &span(b, "A", "id_A", "v")).is_err());
}

#[test]
fn materialized_toy() {
    let (d, w, wm) = toy();
    let b = &d.bicat;
    let loc = materialize_fractions(b, &w).unwrap();
    let names: Vec<String> = loc.spans().iter().map(|s| s.display(b).to_string()).collect();
    assert_eq!(names, ["(A, id_A, id_A)", "(A, id_A, v)", "(A, v, id_A)", "(A, v, v)", "(B, id_B, id_B)"]);
    assert_eq!(loc.bicat().num_objects(), 2);
    assert_eq!(loc.classes().len(), class_count_oracle(b, &w));
    assert_eq!(loc.classes().len(), 7);
    let s = loc.span_id(&span(b, "B", "id_B", "id_B")).unwrap();
    let rg = rep(b, "B", "id_B", "id_B", "i_id_B", "gamma");
    let ri = rep(b, "B", "id_B", "id_B", "i_id_B", "i_id_B");
    assert_eq!(loc.class_of(&rg, s, s), loc.class_of(&ri, s, s));
    assert!(loc.class_of(&rg, s, s).is_some());

    let lm = materialize_fractions(b, &wm).unwrap();
    assert_eq!(lm.spans().len(), 3);
    assert_eq!(lm.classes().len(), class_count_oracle(b, &wm));
    assert_eq!(lm.classes().len(), 4);
    let sm = lm.span_id(&span(b, "B", "id_B", "id_B")).unwrap();
    assert_ne!(lm.class_of(&rg, sm, sm), lm.class_of(&ri, sm, sm));
}

#[test]
fn class_counts_match_the_oracle() {
    for name in FIXTURES {
        let d = doc(name);
        for w in d.classes.iter().filter(|w| w.bf_report().passes()) {
            let loc = materialize_fractions(&d.bicat, w).unwrap();
            assert_eq!(loc.classes().len(), class_count_oracle(&d.bicat, w), "{name}/{}", w.name());
        }
    }
}

#[test]
fn localizations_are_coherent() {
    for name in ["appx-toy", "appx-toy-idem", "iso2", "arrow2", "pt", "discrete2", "toy-flat"] {
        let d = doc(name);
        let mut classes = d.classes.clone();
        classes.push(quasi_units(&d.bicat));
        for w in classes.iter().filter(|w| w.bf_report().passes()) {
            let loc = materialize_fractions(&d.bicat, w).unwrap();
            let r = validate_bicat(loc.bicat());
            assert!(r.pass, "{name}/{}: {:?}", w.name(), r.violations.first());
            assert_eq!(loc.validation(), &r);
        }
    }
}

#[test]
fn universal_pseudofunctor_on_the_toy() {
    let (d, w, _) = toy();
    let b = &d.bicat;
    let loc = materialize_fractions(b, &w).unwrap();
    let u = universal_pseudofunctor(&loc).unwrap();
    let fb = loc.bicat();
    assert_eq!(fb.one_name(u.f1(one(b, "v"))), "(A, id_A, v)");
    assert_eq!(fb.one_name(u.f1(one(b, "id_B"))), "(B, id_B, id_B)");
    assert_eq!(u.f2(two(b, "gamma")), u.f2(two(b, "i_id_B")));
    assert!(validate_psfun(&u).pass);
    for f in w.members() {
        assert!(span_is_equivalence(&w, loc.span(u.f1(f))));
        assert!(fb.is_equivalence(u.f1(f)));
    }
}

#[test]
fn span_equivalence_examples() {
    let (d, w, _) = toy();
    let b = &d.bicat;
    assert!(span_is_equivalence(&w, &span(b, "A", "v", "v")));
    assert!(span_is_equivalence(&w, &span(b, "A", "id_A", "id_A")));
    let ar = doc("arrow2");
    assert!(!span_is_equivalence(&ar.class("W").unwrap(), &span(&ar.bicat, "X", "id_X", "a")));
}

#[test]
fn span_equivalence_matches_internal_equivalences() {
    for name in FIXTURES {
        let d = doc(name);
        for w in d.classes.iter().filter(|w| w.bf_report().passes()) {
            let loc = materialize_fractions(&d.bicat, w).unwrap();
            for f in loc.bicat().one_cells() {
                assert_eq!(span_is_equivalence(w, loc.span(f)), loc.bicat().is_equivalence(f), "{name}/{}", w.name());
            }
        }
    }
}
