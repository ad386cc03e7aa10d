mod common;

use bifrac::*;
use common::*;

#[test]
fn one_cell_composition_in_the_toy() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let (v, id_a, id_b) = (one(b, "v"), one(b, "id_A"), one(b, "id_B"));
    assert_eq!(hcompose1(b, id_b, v).unwrap(), v);
    assert_eq!(hcompose1(b, v, id_a).unwrap(), v);
    assert!(matches!(hcompose1(b, v, id_b), Err(BicatError::NotComposable { .. })));
}

#[test]
fn vertical_composition_in_the_toy() {
    let (d, di) = (doc("appx-toy"), doc("appx-toy-idem"));
    let b = &d.bicat;
    let (g, i) = (two(b, "gamma"), two(b, "i_id_B"));
    assert_eq!(vcompose(b, g, i).unwrap(), g);
    assert_eq!(vcompose(b, g, g).unwrap(), i);
    assert!(vcompose(b, g, two(b, "i_v")).is_err());
    let bi = &di.bicat;
    assert_eq!(vcompose(bi, two(bi, "gamma"), two(bi, "gamma")).unwrap(), two(bi, "gamma"));
}

#[test]
fn horizontal_composition_in_the_toy() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let (g, i_v, i_b) = (two(b, "gamma"), two(b, "i_v"), two(b, "i_id_B"));
    assert_eq!(hcompose2(b, g, i_v).unwrap(), i_v);
    assert_eq!(hcompose2(b, i_b, i_v).unwrap(), i_v);
    assert_eq!(b.wr(g, one(b, "id_B")).unwrap(), g);
}

#[test]
fn pasting_examples() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let g = two(b, "gamma");
    assert_eq!(eval_pasting(b, &PastingExpr::atom(g)).unwrap(), g);
    let gg = PastingExpr::vcomp(PastingExpr::atom(g), PastingExpr::atom(g));
    assert_eq!(eval_pasting(b, &gg).unwrap(), two(b, "i_id_B"));
    assert_eq!(eval_pasting(b, &PastingExpr::RUnit(one(b, "v"))).unwrap(), two(b, "i_v"));
    let bad = PastingExpr::vcomp(PastingExpr::atom(g), PastingExpr::atom(two(b, "i_v")));
    assert!(matches!(infer_boundary(b, &bad), Err(PastingError::Typing { .. })));
}

#[test]
fn inverses() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    assert_eq!(two_cell_inverse(b, two(b, "i_v")), Some(two(b, "i_v")));
    assert_eq!(two_cell_inverse(b, two(b, "gamma")), Some(two(b, "gamma")));
    let a = doc("arrow2");
    assert_eq!(two_cell_inverse(&a.bicat, two(&a.bicat, "nu")), None);
    let di = doc("appx-toy-idem");
    assert_eq!(two_cell_inverse(&di.bicat, two(&di.bicat, "gamma")), None);
}

#[test]
fn equivalence_witnesses() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let w = internal_equivalence_witness(b, one(b, "id_A")).unwrap();
    assert_eq!(w.reverse, one(b, "id_A"));
    assert!(internal_equivalence_witness(b, one(b, "v")).is_none());

    let iso = doc("iso2");
    let b = &iso.bicat;
    let w = internal_equivalence_witness(b, one(b, "e")).unwrap();
    assert_eq!(w.reverse, one(b, "e_inv"));
    assert_eq!((w.unit, w.counit), (two(b, "i_id_X"), two(b, "i_id_Y")));
}

#[test]
fn fixtures_validate() {
    for name in FIXTURES {
        let d = doc(name);
        let r = validate_bicat(&d.bicat);
        assert!(r.pass, "{name}: {:?}", r.violations);
        assert!(r.strict, "{name}");
    }
}

#[test]
fn corrupted_whiskering_is_rejected() {
    let mut v = raw("appx-toy");
    for row in v["whisk_right"].as_array_mut().unwrap() {
        if row[0] == "gamma" && row[1] == "v" {
            row[2] = "gamma".into();
        }
    }
    match bifrac::presentation::parse_presentation(&v.to_string()) {
        Err(e) => assert!(e.to_string().contains("whisk_right"), "{e}"),
        Ok(d) => {
            let r = validate_bicat(&d.bicat);
            assert!(!r.pass);
            assert!(r.violates(Law::Typing) || r.violates(Law::Interchange), "{:?}", r.violations);
        }
    }
}

#[test]
fn composition_errors_carry_names() {
    let d = doc("appx-toy");
    let b = &d.bicat;
    let e = hcompose1(b, one(b, "v"), one(b, "v")).unwrap_err().to_string();
    assert!(e.contains('v'), "{e}");
}
