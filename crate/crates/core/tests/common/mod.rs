#![allow(dead_code)]

use bifrac::fixtures::builtin;
use bifrac::presentation::{parse_presentation, Document};
use bifrac::{FinBicat, ObjId, OneId, TwoId};
use serde_json::{json, Value};

pub const FIXTURES: [&str; 7] = ["appx-toy", "appx-toy-idem", "iso2", "arrow2", "pt", "discrete2", "toy-flat"];

pub fn doc(name: &str) -> Document {
    builtin(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn raw(name: &str) -> Value {
    let text = bifrac::fixtures::BUILTIN.iter().find(|(n, _)| n.starts_with(name) && n.len() == name.len() + 5).unwrap().1;
    serde_json::from_str(text).unwrap()
}

pub fn obj(b: &FinBicat, n: &str) -> ObjId {
    b.find_obj(n).unwrap_or_else(|| panic!("no object {n}"))
}
pub fn one(b: &FinBicat, n: &str) -> OneId {
    b.find_one(n).unwrap_or_else(|| panic!("no 1-cell {n}"))
}
pub fn two(b: &FinBicat, n: &str) -> TwoId {
    b.find_two(n).unwrap_or_else(|| panic!("no 2-cell {n}"))
}

/// Reflexive-transitive closure of `rel` on `n` points.
pub fn preorder(n: usize, rel: &[bool]) -> Vec<Vec<bool>> {
    let mut r: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || rel[i * n + j]).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

fn cell_name(i: usize, j: usize) -> String {
    if i == j {
        format!("id_{i}")
    } else {
        format!("f_{i}_{j}")
    }
}

/// The preorder as a locally discrete strict bicategory, with a class `W`
/// made of the identities plus the non-identity cells selected by `w_mask`.
pub fn preorder_doc(r: &[Vec<bool>], w_mask: &[bool]) -> Document {
    let n = r.len();
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let mut cells = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if r[i][j] {
                cells.push((i, j));
            }
        }
    }
    let name = |&(i, j): &(usize, usize)| cell_name(i, j);
    let mut v = json!({
        "objects": objects,
        "one_cells": cells.iter().map(|c| json!({"id": name(c), "src": format!("o{}", c.0), "tgt": format!("o{}", c.1)})).collect::<Vec<_>>(),
        "two_cells": cells.iter().map(|c| json!({"id": format!("i_{}", name(c)), "src": name(c), "tgt": name(c)})).collect::<Vec<_>>(),
        "id1": (0..n).map(|i| json!([format!("o{i}"), cell_name(i, i)])).collect::<Vec<_>>(),
        "id2": cells.iter().map(|c| json!([name(c), format!("i_{}", name(c))])).collect::<Vec<_>>(),
        "strict": true,
    });
    let (mut hc, mut vc, mut wl, mut wr, mut assoc) = (vec![], vec![], vec![], vec![], vec![]);
    for f in &cells {
        vc.push(json!([format!("i_{}", name(f)), format!("i_{}", name(f)), format!("i_{}", name(f))]));
        for g in cells.iter().filter(|g| g.0 == f.1) {
            let gf = (f.0, g.1);
            hc.push(json!([name(g), name(f), name(&gf)]));
            wl.push(json!([name(g), format!("i_{}", name(f)), format!("i_{}", name(&gf))]));
            wr.push(json!([format!("i_{}", name(g)), name(f), format!("i_{}", name(&gf))]));
            for h in cells.iter().filter(|h| h.0 == g.1) {
                assoc.push(json!([name(h), name(g), name(f), format!("i_{}", cell_name(f.0, h.1))]));
            }
        }
    }
    let units: Vec<Value> = cells.iter().map(|c| json!([name(c), format!("i_{}", name(c))])).collect();
    let mut w: Vec<String> = (0..n).map(|i| cell_name(i, i)).collect();
    let non_id: Vec<_> = cells.iter().filter(|c| c.0 != c.1).collect();
    for (k, c) in non_id.iter().enumerate() {
        if w_mask.get(k).copied().unwrap_or(false) {
            w.push(name(c));
        }
    }
    let m = v.as_object_mut().unwrap();
    m.insert("hcomp1".into(), hc.into());
    m.insert("vcomp".into(), vc.into());
    m.insert("whisk_left".into(), wl.into());
    m.insert("whisk_right".into(), wr.into());
    m.insert("assoc".into(), assoc.into());
    m.insert("runit".into(), units.clone().into());
    m.insert("lunit".into(), units.into());
    m.insert("classes".into(), json!({ "W": w }));
    m.insert("psfuns".into(), json!({ "id": {"kind": "identity"} }));
    parse_presentation(&v.to_string()).expect("preorder presentations parse")
}
