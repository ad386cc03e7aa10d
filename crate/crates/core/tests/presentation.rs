mod common;

use bifrac::fixtures::builtin_loader;
use bifrac::fractions::materialize_fractions;
use bifrac::presentation::{explicit_spec, export_with, parse_presentation, PsFunSpec};
use bifrac::validate_bicat;
use common::*;
use serde_json::Value;

#[test]
fn toy_shape() {
    let d = doc("appx-toy");
    assert_eq!((d.bicat.num_objects(), d.bicat.num_one_cells(), d.bicat.num_two_cells()), (2, 3, 4));
    assert!(d.bicat.strict_flag());
    assert_eq!(d.class("W").unwrap().member_names(), ["id_A", "id_B", "v"]);
    assert_eq!(d.class("Wmin").unwrap().member_names(), ["id_A", "id_B"]);
}

#[test]
fn missing_table_entry_is_named() {
    let mut v = raw("appx-toy");
    v["vcomp"].as_array_mut().unwrap().retain(|r| !(r[0] == "gamma" && r[1] == "gamma"));
    let e = parse_presentation(&v.to_string()).unwrap_err();
    assert_eq!(e.path, "vcomp");
    assert!(e.message.contains("gamma, gamma"), "{e}");
}

#[test]
fn duplicate_one_cell_is_rejected() {
    let mut v = raw("appx-toy");
    let dup = v["one_cells"][2].clone();
    v["one_cells"].as_array_mut().unwrap().push(dup);
    let e = parse_presentation(&v.to_string()).unwrap_err();
    assert!(e.to_string().contains("one_cell"), "{e}");
    assert!(e.message.contains('v'), "{e}");
}

#[test]
fn undeclared_reference_has_a_path() {
    let mut v = raw("appx-toy");
    v["hcomp1"][3][2] = "nope".into();
    let e = parse_presentation(&v.to_string()).unwrap_err();
    assert_eq!(e.path, "hcomp1[3][2]");
}

#[test]
fn unknown_field_is_rejected() {
    let mut v = raw("pt");
    v.as_object_mut().unwrap().insert("extra".into(), Value::Null);
    assert!(parse_presentation(&v.to_string()).is_err());
}

#[test]
fn export_round_trips_every_fixture() {
    for name in FIXTURES {
        let d = doc(name);
        let once = d.export();
        let again = parse_presentation(&once.to_string()).unwrap();
        assert_eq!(again.export(), once, "{name}");
        assert_eq!(again.bicat.to_data(), d.bicat.to_data(), "{name}");
        assert_eq!(again.psfuns, d.psfuns, "{name}");
    }
}

#[test]
fn materialized_localizations_round_trip() {
    for (name, class) in [("appx-toy", "W"), ("appx-toy", "Wmin"), ("appx-toy-idem", "W"), ("iso2", "W"), ("arrow2", "W")] {
        let d = doc(name);
        let loc = materialize_fractions(&d.bicat, &d.class(class).unwrap()).unwrap();
        let once = export_with(loc.bicat(), &[], &[]);
        let back = parse_presentation(&once.to_string()).unwrap();
        assert_eq!(back.bicat.to_data(), loc.bicat().to_data(), "{name}/{class}");
        assert!(validate_bicat(&back.bicat).pass, "{name}/{class}");
    }
}

#[test]
fn explicit_specs_round_trip() {
    let d = doc("appx-toy");
    let r = d.resolve_psfun("UW", &builtin_loader).unwrap();
    let loc = r.localization.unwrap();
    let spec = explicit_spec(&r.psfun, "self");
    let PsFunSpec::Explicit { f1, .. } = &spec else { panic!("explicit") };
    assert_eq!(f1[2], ["v".to_string(), "(A, id_A, v)".to_string()]);

    // Re-resolve the exported functor against the exported target.
    let mut target = parse_presentation(&export_with(loc.bicat(), &[], &[]).to_string()).unwrap();
    target.psfuns.clear();
    let mut src = d.clone();
    src.psfuns = vec![("U".into(), spec)];
    let loader = |_: &bifrac::presentation::Document, _: &str| Ok(target.clone());
    let PsFunSpec::Explicit { target: t, .. } = &mut src.psfuns[0].1 else { unreachable!() };
    *t = "loc.json".into();
    let again = src.resolve_psfun("U", &loader).unwrap().psfun;
    for f in d.bicat.one_cells() {
        assert_eq!(again.f1(f), r.psfun.f1(f));
    }
    for a in d.bicat.two_cells() {
        assert_eq!(again.f2(a), r.psfun.f2(a));
    }
}

#[test]
fn named_classes() {
    let d = doc("iso2");
    assert_eq!(d.class("@min").unwrap().member_names(), ["id_X", "id_Y"]);
    assert_eq!(d.class("@equiv").unwrap().member_names(), ["id_X", "id_Y", "e", "e_inv"]);
    assert_eq!(d.class("@sat:W").unwrap().member_names(), ["id_X", "id_Y", "e", "e_inv"]);
    assert!(d.class("nope").is_none());
}

#[test]
fn unknown_psfun_and_bad_shorthand() {
    let d = doc("appx-toy");
    assert!(d.resolve_psfun("nope", &builtin_loader).is_err());
    let mut v = raw("appx-toy");
    v["psfuns"]["killgamma"]["psi"] = "bogus".into();
    let d = parse_presentation(&v.to_string()).unwrap();
    let e = d.resolve_psfun("killgamma", &builtin_loader).unwrap_err();
    assert!(e.to_string().contains("psfuns.killgamma.psi"), "{e}");
}

#[test]
fn fast_path_keeps_classes() {
    let d = doc("appx-toy").with_fast_path(true);
    assert!(d.bicat.fast_path());
    let w = d.class("W").unwrap();
    assert!(std::sync::Arc::ptr_eq(w.base(), &d.bicat));
    assert!(w.bf_report().passes());
}
