//! JSON presentations of finite bicategories, W classes and pseudofunctors.
//!
//! Tables are arrays of `[key.., value]` rows keyed by declared ids. Errors carry
//! the document path of the offending field.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::bicat::{BicatData, FinBicat, ObjId, OneCell, OneId, TwoCell, TwoId};
use crate::error::StructureError;
use crate::fractions::{materialize_fractions, universal_pseudofunctor, FractionError, Localization};
use crate::psfun::{PsFun, PsFunError};
use crate::validate::composable_pairs;
use crate::wclass::{internal_equivalences_class, quasi_units, WClass};

#[derive(Debug, Clone, Error)]
#[error("{path}: {message}")]
pub struct PresentationError {
    pub path: String,
    pub message: String,
}

impl PresentationError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        PresentationError { path: path.into(), message: message.into() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCell {
    id: String,
    src: String,
    tgt: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    objects: Vec<String>,
    one_cells: Vec<RawCell>,
    two_cells: Vec<RawCell>,
    id1: Vec<[String; 2]>,
    id2: Vec<[String; 2]>,
    hcomp1: Vec<[String; 3]>,
    vcomp: Vec<[String; 3]>,
    whisk_left: Vec<[String; 3]>,
    whisk_right: Vec<[String; 3]>,
    assoc: Vec<[String; 4]>,
    runit: Vec<[String; 2]>,
    lunit: Vec<[String; 2]>,
    #[serde(default)]
    strict: bool,
    #[serde(default)]
    classes: Map<String, Value>,
    #[serde(default)]
    psfuns: Map<String, Value>,
}

/// Components given either as the literal `"identity"` or as explicit rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Components<R> {
    Named(String),
    Rows(Vec<R>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PsFunSpec {
    Identity,
    Universal {
        class: String,
    },
    Explicit {
        /// `"self"` or a path relative to the declaring document.
        target: String,
        #[serde(rename = "F0")]
        f0: Vec<[String; 2]>,
        #[serde(rename = "F1")]
        f1: Vec<[String; 2]>,
        #[serde(rename = "F2")]
        f2: Vec<[String; 2]>,
        psi: Components<[String; 3]>,
        sigma: Components<[String; 2]>,
    },
}

/// A parsed document.
#[derive(Debug, Clone)]
pub struct Document {
    pub bicat: Arc<FinBicat>,
    pub classes: Vec<WClass>,
    pub psfuns: Vec<(String, PsFunSpec)>,
    /// Directory that relative `target` references resolve against.
    pub base_dir: Option<PathBuf>,
}

/// A pseudofunctor together with the context it was resolved in.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub psfun: PsFun,
    /// The class a universal pseudofunctor localizes at.
    pub class: Option<WClass>,
    /// The target document when the target is a plain presentation.
    pub target_doc: Option<Box<Document>>,
    pub localization: Option<Arc<Localization>>,
}

#[derive(Debug, Clone, Error)]
pub enum ResolveError {
    #[error("unknown pseudofunctor `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("{0}")]
    Fraction(#[from] FractionError),
}

/// Resolves a target reference to a document.
pub type Loader<'a> = dyn Fn(&Document, &str) -> Result<Document, PresentationError> + 'a;

pub fn parse_presentation(text: &str) -> Result<Document, PresentationError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawDoc = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        PresentationError::new(if path == "." { "$".to_string() } else { path }, e.into_inner().to_string())
    })?;
    build(raw)
}

pub fn load_presentation(path: &Path) -> Result<Document, PresentationError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| PresentationError::new(path.display().to_string(), e.to_string()))?;
    let mut doc = parse_presentation(&text)
        .map_err(|e| PresentationError::new(format!("{}:{}", path.display(), e.path), e.message))?;
    doc.base_dir = path.parent().map(Path::to_path_buf);
    Ok(doc)
}

/// Loader for references on disk, relative to the declaring document.
pub fn file_loader(doc: &Document, target: &str) -> Result<Document, PresentationError> {
    let p = match &doc.base_dir {
        Some(d) => d.join(target),
        None => PathBuf::from(target),
    };
    load_presentation(&p)
}

struct Names<'a> {
    table: HashMap<&'a str, usize>,
    kind: &'static str,
}

impl<'a> Names<'a> {
    fn new(kind: &'static str, ids: impl Iterator<Item = &'a str>, path: &str) -> Result<Self, PresentationError> {
        let mut table = HashMap::new();
        for (i, id) in ids.enumerate() {
            if table.insert(id, i).is_some() {
                return Err(PresentationError::new(format!("{path}[{i}]"), format!("duplicate {kind} id `{id}`")));
            }
        }
        Ok(Names { table, kind })
    }

    fn get(&self, name: &str, path: impl FnOnce() -> String) -> Result<usize, PresentationError> {
        self.table
            .get(name)
            .copied()
            .ok_or_else(|| PresentationError::new(path(), format!("undeclared {} `{name}`", self.kind)))
    }
}

fn build(raw: RawDoc) -> Result<Document, PresentationError> {
    let objs = Names::new("object", raw.objects.iter().map(String::as_str), "objects")?;
    let ones = Names::new("one-cell", raw.one_cells.iter().map(|c| c.id.as_str()), "one_cells")?;
    let twos = Names::new("two-cell", raw.two_cells.iter().map(|c| c.id.as_str()), "two_cells")?;
    let o = |n: &str, p: &dyn Fn() -> String| objs.get(n, p).map(ObjId);
    let f = |n: &str, p: &dyn Fn() -> String| ones.get(n, p).map(OneId);
    let t = |n: &str, p: &dyn Fn() -> String| twos.get(n, p).map(TwoId);

    let mut data = BicatData { objects: raw.objects.clone(), strict: raw.strict, ..Default::default() };
    for (i, c) in raw.one_cells.iter().enumerate() {
        data.one_cells.push(OneCell {
            name: c.id.clone(),
            src: o(&c.src, &|| format!("one_cells[{i}].src"))?,
            tgt: o(&c.tgt, &|| format!("one_cells[{i}].tgt"))?,
        });
    }
    for (i, c) in raw.two_cells.iter().enumerate() {
        data.two_cells.push(TwoCell {
            name: c.id.clone(),
            src: f(&c.src, &|| format!("two_cells[{i}].src"))?,
            tgt: f(&c.tgt, &|| format!("two_cells[{i}].tgt"))?,
        });
    }

    let mut id1 = vec![None; raw.objects.len()];
    for (i, [x, c]) in raw.id1.iter().enumerate() {
        let x = o(x, &|| format!("id1[{i}][0]"))?;
        let c = f(c, &|| format!("id1[{i}][1]"))?;
        if id1[x.0].replace(c).is_some() {
            return Err(PresentationError::new(format!("id1[{i}]"), "duplicate entry"));
        }
    }
    data.id1 = collect_total(id1, "id1", |k| raw.objects[k].clone())?;
    let mut id2 = vec![None; raw.one_cells.len()];
    for (i, [c, a]) in raw.id2.iter().enumerate() {
        let c = f(c, &|| format!("id2[{i}][0]"))?;
        let a = t(a, &|| format!("id2[{i}][1]"))?;
        if id2[c.0].replace(a).is_some() {
            return Err(PresentationError::new(format!("id2[{i}]"), "duplicate entry"));
        }
    }
    data.id2 = collect_total(id2, "id2", |k| raw.one_cells[k].id.clone())?;

    for (i, [g, h, r]) in raw.hcomp1.iter().enumerate() {
        let p = |j: usize| move || format!("hcomp1[{i}][{j}]");
        data.hcomp1.push((f(g, &p(0))?, f(h, &p(1))?, f(r, &p(2))?));
    }
    for (i, [b, a, r]) in raw.vcomp.iter().enumerate() {
        let p = |j: usize| move || format!("vcomp[{i}][{j}]");
        data.vcomp.push((t(b, &p(0))?, t(a, &p(1))?, t(r, &p(2))?));
    }
    for (i, [g, a, r]) in raw.whisk_left.iter().enumerate() {
        let p = |j: usize| move || format!("whisk_left[{i}][{j}]");
        data.whisk_left.push((f(g, &p(0))?, t(a, &p(1))?, t(r, &p(2))?));
    }
    for (i, [b, g, r]) in raw.whisk_right.iter().enumerate() {
        let p = |j: usize| move || format!("whisk_right[{i}][{j}]");
        data.whisk_right.push((t(b, &p(0))?, f(g, &p(1))?, t(r, &p(2))?));
    }
    for (i, [h, g, k, r]) in raw.assoc.iter().enumerate() {
        let p = |j: usize| move || format!("assoc[{i}][{j}]");
        data.assoc.push((f(h, &p(0))?, f(g, &p(1))?, f(k, &p(2))?, t(r, &p(3))?));
    }
    for (i, [c, a]) in raw.runit.iter().enumerate() {
        let p = |j: usize| move || format!("runit[{i}][{j}]");
        data.runit.push((f(c, &p(0))?, t(a, &p(1))?));
    }
    for (i, [c, a]) in raw.lunit.iter().enumerate() {
        let p = |j: usize| move || format!("lunit[{i}][{j}]");
        data.lunit.push((f(c, &p(0))?, t(a, &p(1))?));
    }

    let bicat = Arc::new(FinBicat::new(data).map_err(structure_error)?);

    let mut classes = Vec::new();
    for (name, v) in &raw.classes {
        let path = format!("classes.{name}");
        let members: Vec<String> = serde_json::from_value(v.clone())
            .map_err(|e| PresentationError::new(&path, e.to_string()))?;
        let mut ids = Vec::new();
        for (i, m) in members.iter().enumerate() {
            ids.push(f(m, &|| format!("{path}[{i}]"))?);
        }
        classes.push(WClass::new(bicat.clone(), name.clone(), ids).expect("ids come from the same document"));
    }
    let mut psfuns = Vec::new();
    for (name, v) in &raw.psfuns {
        let spec: PsFunSpec = serde_path_to_error::deserialize(v.clone()).map_err(|e| {
            PresentationError::new(format!("psfuns.{name}.{}", e.path()), e.into_inner().to_string())
        })?;
        psfuns.push((name.clone(), spec));
    }
    Ok(Document { bicat, classes, psfuns, base_dir: None })
}

fn collect_total<T>(v: Vec<Option<T>>, table: &str, key: impl Fn(usize) -> String) -> Result<Vec<T>, PresentationError> {
    v.into_iter()
        .enumerate()
        .map(|(k, x)| x.ok_or_else(|| PresentationError::new(table, format!("{table}[{}]: missing entry", key(k)))))
        .collect()
}

fn structure_error(e: StructureError) -> PresentationError {
    let path = match &e {
        StructureError::Duplicate { kind, .. } => format!("{kind}s"),
        StructureError::OutOfRange { kind, .. } => format!("{kind}s"),
        StructureError::Missing { table, .. }
        | StructureError::Extraneous { table, .. }
        | StructureError::DuplicateEntry { table, .. } => table.to_string(),
    };
    PresentationError::new(path, e.to_string())
}

impl Document {
    /// Looks up a class by name. `@min`, `@equiv` and `@sat:<name>` denote the
    /// quasi-units, the internal equivalences and the saturation of `<name>`.
    pub fn class(&self, name: &str) -> Option<WClass> {
        match name {
            "@min" => Some(quasi_units(&self.bicat)),
            "@equiv" => Some(internal_equivalences_class(&self.bicat)),
            _ => match name.strip_prefix("@sat:") {
                Some(inner) => self.class(inner).map(|w| w.saturated().clone()),
                None => self.classes.iter().find(|w| w.name() == name).cloned(),
            },
        }
    }

    pub fn psfun_spec(&self, name: &str) -> Option<&PsFunSpec> {
        self.psfuns.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    /// Builds the named pseudofunctor; universal ones materialize their target.
    pub fn resolve_psfun(&self, name: &str, loader: &Loader<'_>) -> Result<Resolved, ResolveError> {
        let spec = self.psfun_spec(name).ok_or_else(|| ResolveError::Unknown(name.to_string()))?;
        let path = format!("psfuns.{name}");
        match spec {
            PsFunSpec::Identity => Ok(Resolved {
                psfun: PsFun::identity(&self.bicat).with_name(name),
                class: None,
                target_doc: Some(Box::new(self.clone())),
                localization: None,
            }),
            PsFunSpec::Universal { class } => {
                let w = self
                    .class(class)
                    .ok_or_else(|| PresentationError::new(format!("{path}.class"), format!("unknown class `{class}`")))?;
                let loc = Arc::new(materialize_fractions(&self.bicat, &w)?);
                let psfun = universal_pseudofunctor(&loc)?.with_name(name);
                Ok(Resolved { psfun, class: Some(w), target_doc: None, localization: Some(loc) })
            }
            PsFunSpec::Explicit { target, f0, f1, f2, psi, sigma } => {
                let tdoc = if target == "self" { self.clone() } else { loader(self, target)? };
                let psfun = explicit(&path, name, &self.bicat, &tdoc.bicat, f0, f1, f2, psi, sigma)?;
                Ok(Resolved { psfun, class: None, target_doc: Some(Box::new(tdoc)), localization: None })
            }
        }
    }

    /// Same document, with the strict fast path of pasting evaluation switched `on` or off.
    pub fn with_fast_path(self, on: bool) -> Document {
        let bicat = Arc::new((*self.bicat).clone().with_fast_path(on));
        let classes = self
            .classes
            .iter()
            .map(|w| WClass::new(bicat.clone(), w.name(), w.members()).expect("same cells"))
            .collect();
        Document { bicat, classes, psfuns: self.psfuns, base_dir: self.base_dir }
    }

    /// Serializes back to the presentation format.
    pub fn export(&self) -> Value {
        export_with(&self.bicat, &self.classes, &self.psfuns)
    }
}

#[allow(clippy::too_many_arguments)]
fn explicit(
    path: &str,
    name: &str,
    s: &Arc<FinBicat>,
    t: &Arc<FinBicat>,
    f0: &[[String; 2]],
    f1: &[[String; 2]],
    f2: &[[String; 2]],
    psi: &Components<[String; 3]>,
    sigma: &Components<[String; 2]>,
) -> Result<PsFun, PresentationError> {
    fn table<K: Copy, V: Copy>(
        path: &str,
        rows: &[[String; 2]],
        n: usize,
        key: impl Fn(&str) -> Option<K>,
        val: impl Fn(&str) -> Option<V>,
        idx: impl Fn(K) -> usize,
        missing: impl Fn(usize) -> String,
    ) -> Result<Vec<V>, PresentationError> {
        let mut out = vec![None; n];
        for (i, [k, v]) in rows.iter().enumerate() {
            let k = key(k).ok_or_else(|| PresentationError::new(format!("{path}[{i}][0]"), format!("undeclared source id `{k}`")))?;
            let v = val(v).ok_or_else(|| PresentationError::new(format!("{path}[{i}][1]"), format!("undeclared target id `{v}`")))?;
            if out[idx(k)].replace(v).is_some() {
                return Err(PresentationError::new(format!("{path}[{i}]"), "duplicate entry"));
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(k, v)| v.ok_or_else(|| PresentationError::new(path, format!("missing entry for `{}`", missing(k)))))
            .collect()
    }
    let (sb, tb) = (s.as_ref(), t.as_ref());
    let f0 = table(&format!("{path}.F0"), f0, sb.num_objects(), |x| sb.find_obj(x), |x| tb.find_obj(x), |x| x.0, |k| sb.obj_name(ObjId(k)).into())?;
    let f1v = table(&format!("{path}.F1"), f1, sb.num_one_cells(), |x| sb.find_one(x), |x| tb.find_one(x), |x| x.0, |k| sb.one_name(OneId(k)).into())?;
    let f2 = table(&format!("{path}.F2"), f2, sb.num_two_cells(), |x| sb.find_two(x), |x| tb.find_two(x), |x| x.0, |k| sb.two_name(TwoId(k)).into())?;

    let mut psi_map = HashMap::new();
    match psi {
        Components::Named(n) if n == "identity" => {
            for (g, f) in composable_pairs(sb) {
                let img = f1v[sb.comp1(g, f).expect("composable").0];
                let tgt = tb.comp1(f1v[g.0], f1v[f.0]).ok();
                if tgt != Some(img) {
                    return Err(PresentationError::new(
                        format!("{path}.psi"),
                        format!("identity components need F1({}∘{}) = F1({})∘F1({})", sb.one_name(g), sb.one_name(f), sb.one_name(g), sb.one_name(f)),
                    ));
                }
                psi_map.insert((g, f), tb.id2(img));
            }
        }
        Components::Named(n) => return Err(PresentationError::new(format!("{path}.psi"), format!("unknown component shorthand `{n}`"))),
        Components::Rows(rows) => {
            for (i, [g, f, c]) in rows.iter().enumerate() {
                let p = |j: usize| format!("{path}.psi[{i}][{j}]");
                let g = sb.find_one(g).ok_or_else(|| PresentationError::new(p(0), format!("undeclared source id `{g}`")))?;
                let f = sb.find_one(f).ok_or_else(|| PresentationError::new(p(1), format!("undeclared source id `{f}`")))?;
                let c = tb.find_two(c).ok_or_else(|| PresentationError::new(p(2), format!("undeclared target id `{c}`")))?;
                if psi_map.insert((g, f), c).is_some() {
                    return Err(PresentationError::new(format!("{path}.psi[{i}]"), "duplicate entry"));
                }
            }
        }
    }
    let sigma_v = match sigma {
        Components::Named(n) if n == "identity" => {
            let mut v = Vec::new();
            for x in sb.objects() {
                let img = f1v[sb.id1(x).0];
                if img != tb.id1(f0[x.0]) {
                    return Err(PresentationError::new(
                        format!("{path}.sigma"),
                        format!("identity components need F1(id_{0}) = id_F0({0})", sb.obj_name(x)),
                    ));
                }
                v.push(tb.id2(img));
            }
            v
        }
        Components::Named(n) => return Err(PresentationError::new(format!("{path}.sigma"), format!("unknown component shorthand `{n}`"))),
        Components::Rows(rows) => table(&format!("{path}.sigma"), rows, sb.num_objects(), |x| sb.find_obj(x), |x| tb.find_two(x), |x| x.0, |k| sb.obj_name(ObjId(k)).into())?,
    };
    PsFun::new(name, s.clone(), t.clone(), f0, f1v, f2, psi_map, sigma_v)
        .map_err(|e: PsFunError| PresentationError::new(path, e.to_string()))
}

/// Serializes a bicategory, classes and pseudofunctor blocks.
pub fn export_with(b: &FinBicat, classes: &[WClass], psfuns: &[(String, PsFunSpec)]) -> Value {
    let d = b.to_data();
    let on = |f: OneId| d.one_cells[f.0].name.clone();
    let tn = |a: TwoId| d.two_cells[a.0].name.clone();
    let raw = RawDoc {
        objects: d.objects.clone(),
        one_cells: d
            .one_cells
            .iter()
            .map(|c| RawCell { id: c.name.clone(), src: d.objects[c.src.0].clone(), tgt: d.objects[c.tgt.0].clone() })
            .collect(),
        two_cells: d.two_cells.iter().map(|c| RawCell { id: c.name.clone(), src: on(c.src), tgt: on(c.tgt) }).collect(),
        id1: d.id1.iter().enumerate().map(|(x, &c)| [d.objects[x].clone(), on(c)]).collect(),
        id2: d.id2.iter().enumerate().map(|(f, &a)| [on(OneId(f)), tn(a)]).collect(),
        hcomp1: d.hcomp1.iter().map(|&(g, f, r)| [on(g), on(f), on(r)]).collect(),
        vcomp: d.vcomp.iter().map(|&(x, y, r)| [tn(x), tn(y), tn(r)]).collect(),
        whisk_left: d.whisk_left.iter().map(|&(g, a, r)| [on(g), tn(a), tn(r)]).collect(),
        whisk_right: d.whisk_right.iter().map(|&(a, f, r)| [tn(a), on(f), tn(r)]).collect(),
        assoc: d.assoc.iter().map(|&(h, g, f, r)| [on(h), on(g), on(f), tn(r)]).collect(),
        runit: d.runit.iter().map(|&(f, a)| [on(f), tn(a)]).collect(),
        lunit: d.lunit.iter().map(|&(f, a)| [on(f), tn(a)]).collect(),
        strict: d.strict,
        classes: classes
            .iter()
            .map(|w| (w.name().to_string(), Value::from(w.member_names())))
            .collect(),
        psfuns: psfuns
            .iter()
            .map(|(n, s)| (n.clone(), serde_json::to_value(s).expect("specs serialize")))
            .collect(),
    };
    serde_json::to_value(raw).expect("documents serialize")
}

/// Explicit presentation block for a pseudofunctor whose target is `target`.
pub fn explicit_spec(fun: &PsFun, target: &str) -> PsFunSpec {
    let (s, t) = (fun.source().as_ref(), fun.target().as_ref());
    let mut pairs: Vec<_> = fun.psi_table().iter().map(|(&k, &v)| (k, v)).collect();
    pairs.sort();
    PsFunSpec::Explicit {
        target: target.to_string(),
        f0: s.objects().map(|x| [s.obj_name(x).into(), t.obj_name(fun.f0(x)).into()]).collect(),
        f1: s.one_cells().map(|f| [s.one_name(f).into(), t.one_name(fun.f1(f)).into()]).collect(),
        f2: s.two_cells().map(|a| [s.two_name(a).into(), t.two_name(fun.f2(a)).into()]).collect(),
        psi: Components::Rows(
            pairs
                .into_iter()
                .map(|((g, f), c)| [s.one_name(g).into(), s.one_name(f).into(), t.two_name(c).into()])
                .collect(),
        ),
        sigma: Components::Rows(s.objects().map(|x| [s.obj_name(x).into(), t.two_name(fun.sigma(x)).into()]).collect()),
    }
}
