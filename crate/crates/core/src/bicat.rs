//! Finite bicategories given by exhaustive cell tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{BicatError, StructureError};

macro_rules! index_type {
    ($name:ident) => {
        #[derive(
            Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
        )]
        pub struct $name(pub usize);

        impl $name {
            pub fn index(self) -> usize {
                self.0
            }
        }
    };
}

index_type!(ObjId);
index_type!(OneId);
index_type!(TwoId);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneCell {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCell {
    pub name: String,
    pub src: OneId,
    pub tgt: OneId,
}

/// Raw table data, keyed by indices. Table rows are `(key.., value)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BicatData {
    pub objects: Vec<String>,
    pub one_cells: Vec<OneCell>,
    pub two_cells: Vec<TwoCell>,
    pub id1: Vec<OneId>,
    pub id2: Vec<TwoId>,
    pub hcomp1: Vec<(OneId, OneId, OneId)>,
    pub vcomp: Vec<(TwoId, TwoId, TwoId)>,
    pub whisk_left: Vec<(OneId, TwoId, TwoId)>,
    pub whisk_right: Vec<(TwoId, OneId, TwoId)>,
    pub assoc: Vec<(OneId, OneId, OneId, TwoId)>,
    pub runit: Vec<(OneId, TwoId)>,
    pub lunit: Vec<(OneId, TwoId)>,
    pub strict: bool,
}

/// Reverse 1-cell with invertible unit `id ⇒ g∘f` and counit `f∘g ⇒ id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceWitness {
    pub reverse: OneId,
    pub unit: TwoId,
    pub counit: TwoId,
}

#[derive(Debug, Clone)]
pub struct FinBicat {
    objects: Vec<String>,
    one_cells: Vec<OneCell>,
    two_cells: Vec<TwoCell>,
    id1: Vec<OneId>,
    id2: Vec<TwoId>,
    hcomp1: Vec<Option<OneId>>,
    vcomp: Vec<Option<TwoId>>,
    whisk_left: Vec<Option<TwoId>>,
    whisk_right: Vec<Option<TwoId>>,
    assoc: Vec<Option<TwoId>>,
    runit: Vec<TwoId>,
    lunit: Vec<TwoId>,
    strict: bool,
    fast_path: bool,
    obj_names: HashMap<String, ObjId>,
    one_names: HashMap<String, OneId>,
    two_names: HashMap<String, TwoId>,
    homs: HashMap<(ObjId, ObjId), Vec<OneId>>,
    frames: HashMap<(OneId, OneId), Vec<TwoId>>,
    inverses: OnceLock<Vec<Option<TwoId>>>,
    equivalences: OnceLock<Vec<Option<EquivalenceWitness>>>,
}

fn check_unique(kind: &'static str, names: &[&str]) -> Result<(), StructureError> {
    let mut seen = HashMap::new();
    for n in names {
        if seen.insert(*n, ()).is_some() {
            return Err(StructureError::Duplicate { kind, name: n.to_string() });
        }
    }
    Ok(())
}

impl FinBicat {
    /// Builds an instance, checking that every table is total on its domain and
    /// has no entries outside it. Boundary typing of the values is left to the validator.
    pub fn new(data: BicatData) -> Result<Self, StructureError> {
        let n0 = data.objects.len();
        let n1 = data.one_cells.len();
        let n2 = data.two_cells.len();
        check_unique("object", &data.objects.iter().map(String::as_str).collect::<Vec<_>>())?;
        check_unique(
            "one-cell",
            &data.one_cells.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(),
        )?;
        check_unique(
            "two-cell",
            &data.two_cells.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(),
        )?;
        let range = |kind: &'static str, i: usize, n: usize| {
            if i < n {
                Ok(())
            } else {
                Err(StructureError::OutOfRange { kind, index: i })
            }
        };
        for c in &data.one_cells {
            range("object", c.src.0, n0)?;
            range("object", c.tgt.0, n0)?;
        }
        for c in &data.two_cells {
            range("one-cell", c.src.0, n1)?;
            range("one-cell", c.tgt.0, n1)?;
        }
        let one = |i: OneId| &data.one_cells[i.0];
        let two = |i: TwoId| &data.two_cells[i.0];
        let on = |i: OneId| data.one_cells[i.0].name.clone();
        let tn = |i: TwoId| data.two_cells[i.0].name.clone();

        let ids_len = |table: &'static str, len: usize, n: usize| {
            if len == n {
                Ok(())
            } else {
                Err(StructureError::Missing { table, key: format!("{} of {} rows", len, n) })
            }
        };
        ids_len("id1", data.id1.len(), n0)?;
        ids_len("id2", data.id2.len(), n1)?;
        for x in &data.id1 {
            range("one-cell", x.0, n1)?;
        }
        for x in &data.id2 {
            range("two-cell", x.0, n2)?;
        }

        let mut hcomp1 = vec![None; n1 * n1];
        for &(g, f, r) in &data.hcomp1 {
            range("one-cell", g.0, n1)?;
            range("one-cell", f.0, n1)?;
            range("one-cell", r.0, n1)?;
            let key = format!("{}, {}", on(g), on(f));
            if one(g).src != one(f).tgt {
                return Err(StructureError::Extraneous { table: "hcomp1", key });
            }
            let slot = &mut hcomp1[g.0 * n1 + f.0];
            if slot.is_some() {
                return Err(StructureError::DuplicateEntry { table: "hcomp1", key });
            }
            *slot = Some(r);
        }
        for g in 0..n1 {
            for f in 0..n1 {
                if data.one_cells[g].src == data.one_cells[f].tgt && hcomp1[g * n1 + f].is_none() {
                    return Err(StructureError::Missing {
                        table: "hcomp1",
                        key: format!("{}, {}", on(OneId(g)), on(OneId(f))),
                    });
                }
            }
        }

        let mut vcomp = vec![None; n2 * n2];
        for &(b, a, r) in &data.vcomp {
            range("two-cell", b.0, n2)?;
            range("two-cell", a.0, n2)?;
            range("two-cell", r.0, n2)?;
            let key = format!("{}, {}", tn(b), tn(a));
            if two(a).tgt != two(b).src {
                return Err(StructureError::Extraneous { table: "vcomp", key });
            }
            let slot = &mut vcomp[b.0 * n2 + a.0];
            if slot.is_some() {
                return Err(StructureError::DuplicateEntry { table: "vcomp", key });
            }
            *slot = Some(r);
        }
        for b in 0..n2 {
            for a in 0..n2 {
                if data.two_cells[a].tgt == data.two_cells[b].src && vcomp[b * n2 + a].is_none() {
                    return Err(StructureError::Missing {
                        table: "vcomp",
                        key: format!("{}, {}", tn(TwoId(b)), tn(TwoId(a))),
                    });
                }
            }
        }

        let wl_dom = |g: OneId, a: TwoId| one(two(a).src).tgt == one(g).src;
        let mut whisk_left = vec![None; n1 * n2];
        for &(g, a, r) in &data.whisk_left {
            range("one-cell", g.0, n1)?;
            range("two-cell", a.0, n2)?;
            range("two-cell", r.0, n2)?;
            let key = format!("{}, {}", on(g), tn(a));
            if !wl_dom(g, a) {
                return Err(StructureError::Extraneous { table: "whisk_left", key });
            }
            let slot = &mut whisk_left[g.0 * n2 + a.0];
            if slot.is_some() {
                return Err(StructureError::DuplicateEntry { table: "whisk_left", key });
            }
            *slot = Some(r);
        }
        for g in 0..n1 {
            for a in 0..n2 {
                if wl_dom(OneId(g), TwoId(a)) && whisk_left[g * n2 + a].is_none() {
                    return Err(StructureError::Missing {
                        table: "whisk_left",
                        key: format!("{}, {}", on(OneId(g)), tn(TwoId(a))),
                    });
                }
            }
        }

        let wr_dom = |b: TwoId, f: OneId| one(f).tgt == one(two(b).src).src;
        let mut whisk_right = vec![None; n2 * n1];
        for &(b, f, r) in &data.whisk_right {
            range("two-cell", b.0, n2)?;
            range("one-cell", f.0, n1)?;
            range("two-cell", r.0, n2)?;
            let key = format!("{}, {}", tn(b), on(f));
            if !wr_dom(b, f) {
                return Err(StructureError::Extraneous { table: "whisk_right", key });
            }
            let slot = &mut whisk_right[b.0 * n1 + f.0];
            if slot.is_some() {
                return Err(StructureError::DuplicateEntry { table: "whisk_right", key });
            }
            *slot = Some(r);
        }
        for b in 0..n2 {
            for f in 0..n1 {
                if wr_dom(TwoId(b), OneId(f)) && whisk_right[b * n1 + f].is_none() {
                    return Err(StructureError::Missing {
                        table: "whisk_right",
                        key: format!("{}, {}", tn(TwoId(b)), on(OneId(f))),
                    });
                }
            }
        }

        let as_dom = |h: OneId, g: OneId, f: OneId| one(h).src == one(g).tgt && one(g).src == one(f).tgt;
        let mut assoc = vec![None; n1 * n1 * n1];
        for &(h, g, f, r) in &data.assoc {
            range("one-cell", h.0, n1)?;
            range("one-cell", g.0, n1)?;
            range("one-cell", f.0, n1)?;
            range("two-cell", r.0, n2)?;
            let key = format!("{}, {}, {}", on(h), on(g), on(f));
            if !as_dom(h, g, f) {
                return Err(StructureError::Extraneous { table: "assoc", key });
            }
            let slot = &mut assoc[(h.0 * n1 + g.0) * n1 + f.0];
            if slot.is_some() {
                return Err(StructureError::DuplicateEntry { table: "assoc", key });
            }
            *slot = Some(r);
        }
        for h in 0..n1 {
            for g in 0..n1 {
                for f in 0..n1 {
                    if as_dom(OneId(h), OneId(g), OneId(f)) && assoc[(h * n1 + g) * n1 + f].is_none() {
                        return Err(StructureError::Missing {
                            table: "assoc",
                            key: format!("{}, {}, {}", on(OneId(h)), on(OneId(g)), on(OneId(f))),
                        });
                    }
                }
            }
        }

        let unit_table = |table: &'static str, rows: &[(OneId, TwoId)]| {
            let mut out = vec![None; n1];
            for &(f, r) in rows {
                range("one-cell", f.0, n1)?;
                range("two-cell", r.0, n2)?;
                if out[f.0].is_some() {
                    return Err(StructureError::DuplicateEntry { table, key: on(f) });
                }
                out[f.0] = Some(r);
            }
            out.into_iter()
                .enumerate()
                .map(|(i, x)| x.ok_or_else(|| StructureError::Missing { table, key: on(OneId(i)) }))
                .collect::<Result<Vec<_>, _>>()
        };
        let runit = unit_table("runit", &data.runit)?;
        let lunit = unit_table("lunit", &data.lunit)?;

        let mut homs: HashMap<(ObjId, ObjId), Vec<OneId>> = HashMap::new();
        for (i, c) in data.one_cells.iter().enumerate() {
            homs.entry((c.src, c.tgt)).or_default().push(OneId(i));
        }
        let mut frames: HashMap<(OneId, OneId), Vec<TwoId>> = HashMap::new();
        for (i, c) in data.two_cells.iter().enumerate() {
            frames.entry((c.src, c.tgt)).or_default().push(TwoId(i));
        }
        let obj_names = data.objects.iter().enumerate().map(|(i, n)| (n.clone(), ObjId(i))).collect();
        let one_names =
            data.one_cells.iter().enumerate().map(|(i, c)| (c.name.clone(), OneId(i))).collect();
        let two_names =
            data.two_cells.iter().enumerate().map(|(i, c)| (c.name.clone(), TwoId(i))).collect();

        Ok(FinBicat {
            objects: data.objects,
            one_cells: data.one_cells,
            two_cells: data.two_cells,
            id1: data.id1,
            id2: data.id2,
            hcomp1,
            vcomp,
            whisk_left,
            whisk_right,
            assoc,
            runit,
            lunit,
            strict: data.strict,
            fast_path: false,
            obj_names,
            one_names,
            two_names,
            homs,
            frames,
            inverses: OnceLock::new(),
            equivalences: OnceLock::new(),
        })
    }

    /// Reconstructs the raw tables (rows in canonical key order).
    pub fn to_data(&self) -> BicatData {
        let n1 = self.one_cells.len();
        let n2 = self.two_cells.len();
        let mut d = BicatData {
            objects: self.objects.clone(),
            one_cells: self.one_cells.clone(),
            two_cells: self.two_cells.clone(),
            id1: self.id1.clone(),
            id2: self.id2.clone(),
            strict: self.strict,
            ..Default::default()
        };
        for g in 0..n1 {
            for f in 0..n1 {
                if let Some(r) = self.hcomp1[g * n1 + f] {
                    d.hcomp1.push((OneId(g), OneId(f), r));
                }
            }
        }
        for b in 0..n2 {
            for a in 0..n2 {
                if let Some(r) = self.vcomp[b * n2 + a] {
                    d.vcomp.push((TwoId(b), TwoId(a), r));
                }
            }
        }
        for g in 0..n1 {
            for a in 0..n2 {
                if let Some(r) = self.whisk_left[g * n2 + a] {
                    d.whisk_left.push((OneId(g), TwoId(a), r));
                }
            }
        }
        for b in 0..n2 {
            for f in 0..n1 {
                if let Some(r) = self.whisk_right[b * n1 + f] {
                    d.whisk_right.push((TwoId(b), OneId(f), r));
                }
            }
        }
        for h in 0..n1 {
            for g in 0..n1 {
                for f in 0..n1 {
                    if let Some(r) = self.assoc[(h * n1 + g) * n1 + f] {
                        d.assoc.push((OneId(h), OneId(g), OneId(f), r));
                    }
                }
            }
        }
        d.runit = self.runit.iter().enumerate().map(|(i, &r)| (OneId(i), r)).collect();
        d.lunit = self.lunit.iter().enumerate().map(|(i, &r)| (OneId(i), r)).collect();
        d
    }

    pub fn with_fast_path(mut self, on: bool) -> Self {
        self.fast_path = on;
        self
    }

    /// True when the strict flag is set and evaluation may skip associator/unitor lookups.
    pub fn fast_path(&self) -> bool {
        self.fast_path && self.strict
    }

    pub fn strict_flag(&self) -> bool {
        self.strict
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn num_one_cells(&self) -> usize {
        self.one_cells.len()
    }
    pub fn num_two_cells(&self) -> usize {
        self.two_cells.len()
    }

    pub fn objects(&self) -> impl DoubleEndedIterator<Item = ObjId> + ExactSizeIterator + Clone {
        (0..self.objects.len()).map(ObjId)
    }
    pub fn one_cells(&self) -> impl DoubleEndedIterator<Item = OneId> + ExactSizeIterator + Clone {
        (0..self.one_cells.len()).map(OneId)
    }
    pub fn two_cells(&self) -> impl DoubleEndedIterator<Item = TwoId> + ExactSizeIterator + Clone {
        (0..self.two_cells.len()).map(TwoId)
    }

    pub fn obj_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }
    pub fn one_name(&self, f: OneId) -> &str {
        &self.one_cells[f.0].name
    }
    pub fn two_name(&self, a: TwoId) -> &str {
        &self.two_cells[a.0].name
    }
    pub fn find_obj(&self, name: &str) -> Option<ObjId> {
        self.obj_names.get(name).copied()
    }
    pub fn find_one(&self, name: &str) -> Option<OneId> {
        self.one_names.get(name).copied()
    }
    pub fn find_two(&self, name: &str) -> Option<TwoId> {
        self.two_names.get(name).copied()
    }

    pub fn src(&self, f: OneId) -> ObjId {
        self.one_cells[f.0].src
    }
    pub fn tgt(&self, f: OneId) -> ObjId {
        self.one_cells[f.0].tgt
    }
    pub fn src1(&self, a: TwoId) -> OneId {
        self.two_cells[a.0].src
    }
    pub fn tgt1(&self, a: TwoId) -> OneId {
        self.two_cells[a.0].tgt
    }

    /// 1-cells `a → b` in declaration order.
    pub fn hom(&self, a: ObjId, b: ObjId) -> &[OneId] {
        self.homs.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// 2-cells `f ⇒ g` in declaration order.
    pub fn frame(&self, f: OneId, g: OneId) -> &[TwoId] {
        self.frames.get(&(f, g)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn id1(&self, x: ObjId) -> OneId {
        self.id1[x.0]
    }
    pub fn id2(&self, f: OneId) -> TwoId {
        self.id2[f.0]
    }

    pub fn is_identity2(&self, a: TwoId) -> bool {
        self.id2[self.src1(a).0] == a
    }

    pub fn comp1(&self, g: OneId, f: OneId) -> Result<OneId, BicatError> {
        self.hcomp1[g.0 * self.one_cells.len() + f.0].ok_or_else(|| BicatError::NotComposable {
            g: self.one_name(g).to_string(),
            f: self.one_name(f).to_string(),
        })
    }

    /// `β ⊙ α`.
    pub fn vcomp(&self, beta: TwoId, alpha: TwoId) -> Result<TwoId, BicatError> {
        self.vcomp[beta.0 * self.two_cells.len() + alpha.0].ok_or_else(|| BicatError::FrameMismatch {
            beta: self.two_name(beta).to_string(),
            alpha: self.two_name(alpha).to_string(),
        })
    }

    /// `i_g ∗ α`.
    pub fn wl(&self, g: OneId, alpha: TwoId) -> Result<TwoId, BicatError> {
        self.whisk_left[g.0 * self.two_cells.len() + alpha.0].ok_or_else(|| {
            BicatError::WhiskerMismatch {
                one: self.one_name(g).to_string(),
                two: self.two_name(alpha).to_string(),
            }
        })
    }

    /// `β ∗ i_f`.
    pub fn wr(&self, beta: TwoId, f: OneId) -> Result<TwoId, BicatError> {
        self.whisk_right[beta.0 * self.one_cells.len() + f.0].ok_or_else(|| {
            BicatError::WhiskerMismatch {
                one: self.one_name(f).to_string(),
                two: self.two_name(beta).to_string(),
            }
        })
    }

    /// `β ∗ α = (β ∗ i_{f′}) ⊙ (i_g ∗ α)` for `α: f ⇒ f′`, `β: g ⇒ g′`.
    pub fn hcomp2(&self, beta: TwoId, alpha: TwoId) -> Result<TwoId, BicatError> {
        let left = self.wl(self.src1(beta), alpha)?;
        let right = self.wr(beta, self.tgt1(alpha))?;
        self.vcomp(right, left)
    }

    /// The other interchange order `(i_{g′} ∗ α) ⊙ (β ∗ i_f)`.
    pub fn hcomp2_alt(&self, beta: TwoId, alpha: TwoId) -> Result<TwoId, BicatError> {
        let right = self.wr(beta, self.src1(alpha))?;
        let left = self.wl(self.tgt1(beta), alpha)?;
        self.vcomp(left, right)
    }

    /// `θ_{h,g,f}: h∘(g∘f) ⇒ (h∘g)∘f`.
    pub fn assoc(&self, h: OneId, g: OneId, f: OneId) -> Result<TwoId, BicatError> {
        let n = self.one_cells.len();
        self.assoc[(h.0 * n + g.0) * n + f.0].ok_or_else(|| BicatError::NotComposable {
            g: format!("{}, {}", self.one_name(h), self.one_name(g)),
            f: self.one_name(f).to_string(),
        })
    }

    /// `π_f: f∘id ⇒ f`.
    pub fn runit(&self, f: OneId) -> TwoId {
        self.runit[f.0]
    }

    /// `υ_f: id∘f ⇒ f`.
    pub fn lunit(&self, f: OneId) -> TwoId {
        self.lunit[f.0]
    }

    /// Inverse of a 2-cell by exhaustive search over the opposite frame.
    pub fn inverse(&self, alpha: TwoId) -> Option<TwoId> {
        self.inverses.get_or_init(|| self.two_cells().map(|a| self.search_inverse(a)).collect())[alpha.0]
    }

    pub fn inv(&self, alpha: TwoId) -> Result<TwoId, BicatError> {
        self.inverse(alpha).ok_or_else(|| BicatError::NotInvertible { cell: self.two_name(alpha).to_string() })
    }

    /// `θ⁻¹_{h,g,f}: (h∘g)∘f ⇒ h∘(g∘f)`.
    pub fn assoc_inv(&self, h: OneId, g: OneId, f: OneId) -> Result<TwoId, BicatError> {
        self.inv(self.assoc(h, g, f)?)
    }

    /// Vertical composite of `cells` in application order.
    pub fn seq(&self, cells: &[TwoId]) -> Result<TwoId, BicatError> {
        let (first, rest) = cells.split_first().expect("seq needs at least one cell");
        rest.iter().try_fold(*first, |acc, &next| self.vcomp(next, acc))
    }

    pub fn is_invertible(&self, alpha: TwoId) -> bool {
        self.inverse(alpha).is_some()
    }

    fn search_inverse(&self, alpha: TwoId) -> Option<TwoId> {
        let (f, g) = (self.src1(alpha), self.tgt1(alpha));
        self.frame(g, f).iter().copied().find(|&b| {
            self.vcomp(b, alpha).ok() == Some(self.id2(f)) && self.vcomp(alpha, b).ok() == Some(self.id2(g))
        })
    }

    /// Invertible 2-cells `f ⇒ g` in canonical order.
    pub fn invertible_frame(&self, f: OneId, g: OneId) -> impl Iterator<Item = TwoId> + '_ {
        self.frame(f, g).iter().copied().filter(move |&a| self.is_invertible(a))
    }

    pub fn has_invertible(&self, f: OneId, g: OneId) -> bool {
        self.invertible_frame(f, g).next().is_some()
    }

    /// First internal-equivalence witness for `f` under the canonical ordering.
    pub fn equivalence(&self, f: OneId) -> Option<EquivalenceWitness> {
        self.equivalences.get_or_init(|| self.one_cells().map(|f| self.search_equivalence(f)).collect())[f.0]
    }

    pub fn is_equivalence(&self, f: OneId) -> bool {
        self.equivalence(f).is_some()
    }

    fn search_equivalence(&self, f: OneId) -> Option<EquivalenceWitness> {
        let (a, b) = (self.src(f), self.tgt(f));
        for &g in self.hom(b, a) {
            let (Ok(gf), Ok(fg)) = (self.comp1(g, f), self.comp1(f, g)) else { continue };
            let Some(unit) = self.invertible_frame(self.id1(a), gf).next() else { continue };
            if let Some(counit) = self.invertible_frame(fg, self.id1(b)).next() {
                return Some(EquivalenceWitness { reverse: g, unit, counit });
            }
        }
        None
    }

    pub fn describe_one(&self, f: OneId) -> String {
        format!("{}: {} → {}", self.one_name(f), self.obj_name(self.src(f)), self.obj_name(self.tgt(f)))
    }

    pub fn describe_two(&self, a: TwoId) -> String {
        format!("{}: {} ⇒ {}", self.two_name(a), self.one_name(self.src1(a)), self.one_name(self.tgt1(a)))
    }
}

impl fmt::Display for FinBicat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bicategory with {} objects, {} 1-cells, {} 2-cells{}",
            self.objects.len(),
            self.one_cells.len(),
            self.two_cells.len(),
            if self.strict { " (strict)" } else { "" }
        )
    }
}

pub fn hcompose1(b: &FinBicat, g: OneId, f: OneId) -> Result<OneId, BicatError> {
    b.comp1(g, f)
}

pub fn vcompose(b: &FinBicat, beta: TwoId, alpha: TwoId) -> Result<TwoId, BicatError> {
    b.vcomp(beta, alpha)
}

pub fn hcompose2(b: &FinBicat, beta: TwoId, alpha: TwoId) -> Result<TwoId, BicatError> {
    b.hcomp2(beta, alpha)
}

pub fn two_cell_inverse(b: &FinBicat, alpha: TwoId) -> Option<TwoId> {
    b.inverse(alpha)
}

pub fn internal_equivalence_witness(b: &FinBicat, f: OneId) -> Option<EquivalenceWitness> {
    b.equivalence(f)
}
