mod common;

use bifrac::conditions::*;
use bifrac::fixtures::{builtin_loader, SUITE};
use bifrac::wclass::quasi_units;
use bifrac::*;
use common::*;

fn names(t: &Tuple) -> Vec<&str> {
    t.0.iter().map(|c| c.name.as_str()).collect()
}

fn counterexample(r: &ConditionReport) -> (Vec<&str>, Vec<&str>) {
    let c = r.counterexample.as_ref().unwrap_or_else(|| panic!("{} has no counterexample", r.tag));
    (names(&c.input), names(&c.extra))
}

fn resolve(file: &str, name: &str) -> PsFun {
    doc(file).resolve_psfun(name, &builtin_loader).unwrap().psfun
}

#[test]
fn identity_satisfies_a_with_w_on_both_sides() {
    let d = doc("appx-toy");
    let w = d.class("W").unwrap();
    let id = PsFun::identity(&d.bicat);
    for i in 1..=5 {
        assert!(check_a(&id, &w, &w, i).unwrap().verdict, "A{i}");
    }
}

#[test]
fn a4_fails_for_the_identity_from_quasi_units() {
    let d = doc("appx-toy");
    let (w, wm) = (d.class("W").unwrap(), d.class("Wmin").unwrap());
    let id = PsFun::identity(&d.bicat);
    let r = check_a(&id, &wm, &w, 4).unwrap();
    assert!(!r.verdict);
    assert_eq!(counterexample(&r).0, ["id_B", "id_B", "gamma", "i_id_B", "v"]);
    // v lies in W but not in the saturation of W_min, so A2 fails as well.
    let r2 = check_a(&id, &wm, &w, 2).unwrap();
    assert!(!r2.verdict);
    assert_eq!(counterexample(&r2).0, ["A", "B", "A", "id_A", "v"]);
    for i in [1, 3, 5] {
        assert!(check_a(&id, &wm, &w, i).unwrap().verdict, "A{i}");
    }
}

#[test]
fn squashing_gamma_fails_exactly_a4() {
    for file in ["appx-toy", "appx-toy-idem"] {
        let d = doc(file);
        let r = d.resolve_psfun("squash", &builtin_loader).unwrap();
        let wm = d.class("Wmin").unwrap();
        let wt = r.target_doc.as_ref().unwrap().class("Wmin").unwrap();
        let failing: Vec<usize> = (1..=5).filter(|&i| !check_a(&r.psfun, &wm, &wt, i).unwrap().verdict).collect();
        assert_eq!(failing, [4], "{file}");
        let r4 = check_a(&r.psfun, &wm, &wt, 4).unwrap();
        assert_eq!(counterexample(&r4).0, ["id_B", "id_B", "gamma", "i_id_B", "id_B"]);
    }
}

#[test]
fn trivial_instance_passes_everything() {
    let d = doc("pt");
    let w = d.class("W").unwrap();
    let id = PsFun::identity(&d.bicat);
    for i in 1..=5 {
        assert!(check_a(&id, &w, &w, i).unwrap().verdict);
        assert!(check_b(&id, &w, i).unwrap().verdict);
    }
    for i in 1..=3 {
        assert!(check_ef(&id, &w, i).verdict);
    }
    assert!(is_weak_equivalence(&id).verdict);
}

#[test]
fn composite_examples() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let id = PsFun::identity(b);
    let idb = one(b, "id_B");
    let data = |alpha_a| A5Data {
        f1: idb,
        f2: idb,
        v_a: idb,
        v_b: idb,
        z_b: idb,
        z_prime: idb,
        sigma_b: two(b, "i_id_B"),
        alpha_a,
    };
    let e = build_a5_composite(&id, &data(two(b, "i_id_B"))).unwrap();
    assert!(b.is_identity2(eval_pasting(b, &e).unwrap()));
    let e = build_a5_composite(&id, &data(two(b, "gamma"))).unwrap();
    assert_eq!(eval_pasting(b, &e).unwrap(), two(b, "gamma"));

    let f = e.factors();
    assert_eq!(f.len(), 7);
    assert!(matches!(f[0], PastingExpr::AssocInv(..)));
    assert!(matches!(f[1], PastingExpr::WhiskL(_, x) if matches!(**x, PastingExpr::Inv(_))));
    assert!(matches!(f[2], PastingExpr::Assoc(..)));
    assert!(matches!(f[3], PastingExpr::WhiskR(..)));
    assert!(matches!(f[4], PastingExpr::AssocInv(..)));
    assert!(matches!(f[5], PastingExpr::WhiskL(_, x) if matches!(**x, PastingExpr::Atom(_))));
    assert!(matches!(f[6], PastingExpr::Assoc(..)));
}

#[test]
fn composite_rejects_ill_typed_data() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let id = PsFun::identity(b);
    let data = A5Data {
        f1: one(b, "v"),
        f2: one(b, "v"),
        v_a: one(b, "id_A"),
        v_b: one(b, "id_A"),
        z_b: one(b, "id_A"),
        z_prime: one(b, "id_A"),
        sigma_b: two(b, "i_id_B"),
        alpha_a: two(b, "i_v"),
    };
    assert!(build_a5_composite(&id, &data).is_err());
}

#[test]
fn universal_functor_satisfies_b_but_not_ef3() {
    let d = doc("appx-toy");
    let w = d.class("W").unwrap();
    let u = resolve("appx-toy", "UW");
    for i in 1..=5 {
        assert!(check_b(&u, &w, i).unwrap().verdict, "B{i}");
    }
    let r = check_ef(&u, &w, 3);
    assert!(!r.verdict);
    assert_eq!(counterexample(&r).1, ["gamma", "i_id_B"]);
    assert!(check_ef(&u, &w, 2).verdict);
}

#[test]
fn identity_from_quasi_units_satisfies_b_and_ef() {
    let d = doc("appx-toy");
    let wm = d.class("Wmin").unwrap();
    let id = PsFun::identity(&d.bicat);
    for i in 1..=5 {
        assert!(check_b(&id, &wm, i).unwrap().verdict, "B{i}");
    }
    for i in 1..=3 {
        assert!(check_ef(&id, &wm, i).verdict, "EF{i}");
    }
}

#[test]
fn b_precondition_requires_equivalence_images() {
    let d = doc("appx-toy");
    let id = PsFun::identity(&d.bicat);
    let e = check_b(&id, &d.class("W").unwrap(), 1).unwrap_err();
    assert!(matches!(e, ConditionError::Precondition { family: Family::B, .. }));
}

#[test]
fn collapse_misses_an_object() {
    let d = doc("appx-toy");
    let w = d.class("W").unwrap();
    let c = resolve("appx-toy", "collapse");
    let b1 = check_b(&c, &w, 1).unwrap();
    assert!(!b1.verdict);
    assert_eq!(counterexample(&b1).0, ["Y"]);
    let ef1 = check_ef(&c, &w, 1);
    assert_eq!(counterexample(&ef1).0, ["Y"]);
    let x1 = check_x(&c, ConditionTag::X1);
    assert_eq!(counterexample(&x1).0, ["Y"]);
}

#[test]
fn weak_equivalence_examples() {
    for name in FIXTURES {
        assert!(is_weak_equivalence(&PsFun::identity(&doc(name).bicat)).verdict, "{name}");
    }
    assert!(is_weak_equivalence(&resolve("appx-toy", "Umin")).verdict);
    assert!(is_weak_equivalence(&resolve("iso2", "UW")).verdict);
    let u = resolve("appx-toy", "UW");
    let r = is_weak_equivalence(&u);
    assert!(!r.verdict);
    let failing: Vec<ConditionTag> = r.reports.iter().filter(|x| !x.verdict).map(|x| x.tag).collect();
    assert!(failing.contains(&ConditionTag::X2b));
    let x2b = check_x(&u, ConditionTag::X2b);
    assert_eq!(counterexample(&x2b).0[2..], ["gamma", "i_id_B"]);
}

#[test]
fn cross_validation_examples() {
    let d = doc("appx-toy");
    let (w, wm) = (d.class("W").unwrap(), d.class("Wmin").unwrap());
    let id = PsFun::identity(&d.bicat);
    let r = cross_validate_theorems(&id, &w, &w);
    assert!(r.findings.is_empty());
    assert!(matches!(r.status(SubCheck::GTildeBiconditional), Some(SubCheckStatus::Agree(_))));

    let r = cross_validate_theorems(&id, &wm, &quasi_units(&d.bicat));
    assert!(r.findings.is_empty());
    assert!(matches!(r.status(SubCheck::QuasiUnitCorrespondence), Some(SubCheckStatus::Agree(_))));

    let u = resolve("appx-toy", "UW");
    let r = cross_validate_theorems(&u, &w, &quasi_units(u.target()));
    assert_eq!(r.verdict(ConditionTag::EF3), Some(false));
    assert!((1..=5).all(|i| r.verdict(ConditionTag::numbered(Family::B, i).unwrap()) == Some(true)));
    assert!(matches!(r.status(SubCheck::EfImpliesB), Some(SubCheckStatus::Agree(_))));
}

#[test]
fn suite_verdicts() {
    let expected: &[(&str, &str, &str, &[ConditionTag])] = {
        use ConditionTag::*;
        &[
            ("appx-toy", "id", "W", &[]),
            ("appx-toy", "squash", "Wmin", &[A4]),
            ("appx-toy", "id", "Wmin", &[A2, A4]),
            ("appx-toy", "collapse", "W", &[A1]),
            ("iso2", "collapse", "W", &[]),
        ]
    };
    for &(file, fun, src, fails) in expected {
        let e = SUITE.iter().find(|e| e.file == file && e.psfun == fun && e.class_src == src).unwrap();
        let c = e.load().unwrap();
        let got: Vec<ConditionTag> =
            (1..=5).filter_map(|i| (!check_a(&c.psfun, &c.w_a, &c.w_b, i).unwrap().verdict).then(|| ConditionTag::numbered(Family::A, i).unwrap())).collect();
        assert_eq!(got, fails, "{e}");
    }
}

#[test]
fn every_report_rechecks() {
    let reg = ConditionRegistry::standard();
    for e in SUITE {
        let c = e.load().unwrap();
        for fam in [Family::A, Family::B, Family::EF, Family::X] {
            let cx = match fam {
                Family::A => CheckContext::new(&c.psfun, Some(&c.w_a), Some(&c.w_b)),
                _ => CheckContext::new(&c.psfun, Some(&c.w_a), None),
            };
            if precondition(fam, &cx).is_err() {
                continue;
            }
            for cond in reg.family(fam) {
                let r = decide(cond, &cx);
                assert!(recheck(cond, &cx, &r), "{e}: {}", r.tag);
            }
        }
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let c = SUITE[2].load().unwrap();
    let reg = ConditionRegistry::standard();
    let run = |n| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
        pool.install(|| {
            let cx = CheckContext::new(&c.psfun, Some(&c.w_a), Some(&c.w_b));
            reg.family(Family::A).map(|k| decide(k, &cx)).collect::<Vec<_>>()
        })
    };
    assert_eq!(run(1), run(4));
}

struct AlwaysFails;

impl Condition for AlwaysFails {
    fn tag(&self) -> ConditionTag {
        ConditionTag::X1
    }
    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        cx.tgt().objects().map(|y| Tuple(vec![cx.obj("A_D", Side::Target, y)])).collect()
    }
    fn search(&self, _: &CheckContext<'_>, _: &Tuple, n: &mut u64) -> Option<Tuple> {
        *n += 1;
        None
    }
    fn verify(&self, _: &CheckContext<'_>, _: &Tuple, _: &Tuple) -> bool {
        false
    }
}

#[test]
fn registry_accepts_replacement_checkers() {
    let mut reg = ConditionRegistry::standard();
    assert_eq!(reg.tags().count(), ConditionTag::ALL.len());
    reg.register(Box::new(AlwaysFails));
    assert_eq!(reg.tags().count(), ConditionTag::ALL.len());
    let d = doc("pt");
    let id = PsFun::identity(&d.bicat);
    let cx = CheckContext::new(&id, None, None);
    let r = decide(reg.get(ConditionTag::X1).unwrap(), &cx);
    assert!(!r.verdict);
    assert_eq!(r.stats, SearchStats { inputs: 1, candidates: 1 });
    assert!(ConditionRegistry::empty().get(ConditionTag::A1).is_none());
}

#[test]
fn tags_parse_and_print() {
    for t in ConditionTag::ALL {
        assert_eq!(t.to_string().parse::<ConditionTag>().unwrap(), t);
    }
    assert_eq!(ConditionTag::numbered(Family::EF, 3), Some(ConditionTag::EF3));
    assert_eq!(ConditionTag::numbered(Family::X, 2), Some(ConditionTag::X2a));
    assert_eq!(ConditionTag::numbered(Family::A, 6), None);
    assert_eq!("EF".parse::<Family>().ok(), Some(Family::EF));
}
