mod common;

use bifrac::wclass::{check_bf, internal_equivalences_class, quasi_units, saturate};
use bifrac::{BfAxiom, FinBicat, OneId, WClass};
use common::*;

/// `f` is in the saturation iff some `g`, `h` have `f∘g ∈ W` and `g∘h ∈ W`.
fn sat_oracle(b: &FinBicat, w: &WClass) -> Vec<String> {
    let cells: Vec<OneId> = b.one_cells().collect();
    let composite_in = |x: OneId, y: OneId| b.tgt(y) == b.src(x) && w.contains(b.comp1(x, y).unwrap());
    cells
        .iter()
        .filter(|&&f| cells.iter().any(|&g| composite_in(f, g) && cells.iter().any(|&h| composite_in(g, h))))
        .map(|&f| b.one_name(f).to_string())
        .collect()
}

fn class(d: &bifrac::presentation::Document, names: &[&str]) -> WClass {
    WClass::new(d.bicat.clone(), "W", names.iter().map(|n| one(&d.bicat, n))).unwrap()
}

#[test]
fn bf_examples() {
    let d = doc("appx-toy");
    assert!(check_bf(&d.bicat, &class(&d, &["id_A", "id_B", "v"])).passes());
    assert!(check_bf(&d.bicat, &class(&d, &["id_A", "id_B"])).passes());
    let r = check_bf(&d.bicat, &class(&d, &["id_B", "v"]));
    assert_eq!(r.first_failure().unwrap().axiom, BfAxiom::BF1);
    assert_eq!(r.verdict(BfAxiom::BF1).counterexample.as_deref(), Some(&["id_A".to_string()][..]));
}

#[test]
fn bf_is_cached_and_stable() {
    let d = doc("appx-toy");
    let w = d.class("W").unwrap();
    assert_eq!(w.bf_report(), &check_bf(&d.bicat, &w));
}

#[test]
fn saturation_examples() {
    let d = doc("appx-toy");
    assert_eq!(d.class("W").unwrap().saturated().member_names(), ["id_A", "id_B", "v"]);
    assert_eq!(d.class("Wmin").unwrap().saturated().member_names(), ["id_A", "id_B"]);
    let i = doc("iso2");
    let s = saturate(&i.bicat, &i.class("W").unwrap());
    assert_eq!(s.class.member_names(), ["id_X", "id_Y", "e", "e_inv"]);
    let e = one(&i.bicat, "e");
    assert!(s.witnesses.iter().any(|&(f, g, h)| f == e && i.bicat.comp1(f, g).is_ok() && i.bicat.comp1(g, h).is_ok()));
}

#[test]
fn saturation_matches_the_oracle() {
    for name in FIXTURES {
        let d = doc(name);
        for w in &d.classes {
            assert_eq!(w.saturated().member_names(), sat_oracle(&d.bicat, w), "{name}/{}", w.name());
        }
    }
}

#[test]
fn quasi_units_and_equivalences() {
    let t = doc("appx-toy");
    assert_eq!(quasi_units(&t.bicat).member_names(), ["id_A", "id_B"]);
    assert_eq!(internal_equivalences_class(&t.bicat).member_names(), ["id_A", "id_B"]);
    let i = doc("iso2");
    assert_eq!(quasi_units(&i.bicat).member_names(), ["id_X", "id_Y"]);
    assert_eq!(internal_equivalences_class(&i.bicat).member_names(), ["id_X", "id_Y", "e", "e_inv"]);
    let p = doc("pt");
    assert_eq!(quasi_units(&p.bicat).member_names(), ["id_P"]);
    assert_eq!(internal_equivalences_class(&p.bicat).member_names(), ["id_P"]);
}

#[test]
fn saturation_laws_on_fixtures() {
    for name in FIXTURES {
        let d = doc(name);
        let mut classes = d.classes.clone();
        classes.push(quasi_units(&d.bicat));
        for w in classes.iter().filter(|w| w.bf_report().passes()) {
            let sat = w.saturated();
            assert!(w.is_subset_of(sat), "{name}/{}", w.name());
            assert!(sat.saturated().same_members(sat), "{name}/{}", w.name());
            for u in d.bicat.one_cells() {
                for x in d.bicat.one_cells().filter(|&x| sat.contains(x) && d.bicat.src(x) == d.bicat.tgt(u)) {
                    if sat.contains(d.bicat.comp1(x, u).unwrap()) {
                        assert!(sat.contains(u), "{name}/{}: {}", w.name(), d.bicat.one_name(u));
                    }
                }
            }
        }
        let qu = quasi_units(&d.bicat);
        assert!(qu.bf_report().passes(), "{name}");
        assert!(qu.saturated().same_members(&internal_equivalences_class(&d.bicat)), "{name}");
    }
}

#[test]
fn bf4_weak_form_reported() {
    for name in FIXTURES {
        let d = doc(name);
        for w in &d.classes {
            let r = w.bf_report();
            if r.passes() {
                assert!(r.bf4_weak, "{name}/{}", w.name());
            }
        }
    }
}
