//! Classes of 1-cells: the (BF) axioms, right saturation, quasi-units and
//! internal equivalences.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::bicat::{FinBicat, ObjId, OneId, TwoId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WClassError {
    #[error("1-cell index {0} is not part of the base bicategory")]
    UnknownCell(usize),
}

#[derive(Debug, Clone)]
pub struct WClass {
    base: Arc<FinBicat>,
    name: String,
    members: Vec<bool>,
    bf: OnceLock<BfReport>,
    sat: OnceLock<Box<Saturation>>,
}

impl PartialEq for WClass {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.base, &other.base) && self.members == other.members
    }
}

impl WClass {
    pub fn new(
        base: Arc<FinBicat>,
        name: impl Into<String>,
        members: impl IntoIterator<Item = OneId>,
    ) -> Result<Self, WClassError> {
        let mut mask = vec![false; base.num_one_cells()];
        for f in members {
            *mask.get_mut(f.0).ok_or(WClassError::UnknownCell(f.0))? = true;
        }
        Ok(Self::from_mask(base, name, mask))
    }

    fn from_mask(base: Arc<FinBicat>, name: impl Into<String>, members: Vec<bool>) -> Self {
        WClass { base, name: name.into(), members, bf: OnceLock::new(), sat: OnceLock::new() }
    }

    pub fn base(&self) -> &Arc<FinBicat> {
        &self.base
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contains(&self, f: OneId) -> bool {
        self.members[f.0]
    }

    pub fn members(&self) -> impl Iterator<Item = OneId> + '_ {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| OneId(i))
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Members `D → a` for some `D`, in canonical order.
    pub fn into_object(&self, a: ObjId) -> impl Iterator<Item = OneId> + '_ {
        self.members().filter(move |&w| self.base.tgt(w) == a)
    }

    pub fn same_members(&self, other: &WClass) -> bool {
        self.members == other.members
    }

    pub fn is_subset_of(&self, other: &WClass) -> bool {
        self.members().all(|f| other.contains(f))
    }

    pub fn member_names(&self) -> Vec<String> {
        self.members().map(|f| self.base.one_name(f).to_string()).collect()
    }

    pub fn bf_report(&self) -> &BfReport {
        self.bf.get_or_init(|| check_bf(&self.base, self))
    }

    pub fn saturation(&self) -> &Saturation {
        self.sat.get_or_init(|| Box::new(saturate(&self.base, self)))
    }

    /// The saturated class `W_sat`.
    pub fn saturated(&self) -> &WClass {
        &self.saturation().class
    }
}

impl fmt::Display for WClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {{{}}}", self.name, self.member_names().join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BfAxiom {
    BF1,
    BF2,
    BF3,
    BF4a,
    BF4b,
    BF4c,
    BF5,
}

impl fmt::Display for BfAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BfAxiom::BF1 => "BF1",
            BfAxiom::BF2 => "BF2",
            BfAxiom::BF3 => "BF3",
            BfAxiom::BF4a => "BF4a",
            BfAxiom::BF4b => "BF4b",
            BfAxiom::BF4c => "BF4c",
            BfAxiom::BF5 => "BF5",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: BfAxiom,
    pub holds: bool,
    pub instances: usize,
    /// Cell names of the first failing tuple.
    pub counterexample: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BfReport {
    pub axioms: Vec<AxiomVerdict>,
    /// BF4 with only its existence and invertibility clauses.
    pub bf4_weak: bool,
    /// Informational: every internal equivalence belongs to W.
    pub contains_all_equivalences: bool,
}

impl BfReport {
    pub fn passes(&self) -> bool {
        self.axioms.iter().all(|a| a.holds)
    }

    pub fn verdict(&self, axiom: BfAxiom) -> &AxiomVerdict {
        self.axioms.iter().find(|a| a.axiom == axiom).expect("every axiom is reported")
    }

    pub fn first_failure(&self) -> Option<&AxiomVerdict> {
        self.axioms.iter().find(|a| !a.holds)
    }
}

struct Tally {
    axiom: BfAxiom,
    instances: usize,
    counterexample: Option<Vec<String>>,
}

impl Tally {
    fn new(axiom: BfAxiom) -> Self {
        Tally { axiom, instances: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, cells: impl FnOnce() -> Vec<String>) {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(cells());
        }
    }

    fn finish(self) -> AxiomVerdict {
        AxiomVerdict {
            axiom: self.axiom,
            holds: self.counterexample.is_none(),
            instances: self.instances,
            counterexample: self.counterexample,
        }
    }
}

/// A BF3 square: `v ∈ W`, `g`, and invertible `ρ: f∘v ⇒ w∘g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bf3Filler {
    pub apex: ObjId,
    pub v: OneId,
    pub g: OneId,
    pub rho: TwoId,
}

/// All BF3 fillers for the cospan `f → B ← w`, in canonical order.
pub fn bf3_fillers(b: &FinBicat, w_class: &WClass, w: OneId, f: OneId) -> Vec<Bf3Filler> {
    let mut out = Vec::new();
    let (a, c) = (b.src(w), b.src(f));
    for d in b.objects() {
        for v in w_class.members().filter(|&v| b.src(v) == d && b.tgt(v) == c) {
            let Ok(fv) = b.comp1(f, v) else { continue };
            for &g in b.hom(d, a) {
                let Ok(wg) = b.comp1(w, g) else { continue };
                for rho in b.invertible_frame(fv, wg) {
                    out.push(Bf3Filler { apex: d, v, g, rho });
                }
            }
        }
    }
    out
}

/// Canonical (first) BF3 filler.
pub fn bf3_filler(b: &FinBicat, w_class: &WClass, w: OneId, f: OneId) -> Option<Bf3Filler> {
    let (a, c) = (b.src(w), b.src(f));
    for d in b.objects() {
        for v in w_class.members().filter(|&v| b.src(v) == d && b.tgt(v) == c) {
            let Ok(fv) = b.comp1(f, v) else { continue };
            for &g in b.hom(d, a) {
                let Ok(wg) = b.comp1(w, g) else { continue };
                if let Some(rho) = b.invertible_frame(fv, wg).next() {
                    return Some(Bf3Filler { apex: d, v, g, rho });
                }
            }
        }
    }
    None
}

/// Does `(α ∗ i_v) ⊙ θ_{w,f,v} = θ_{w,g,v} ⊙ (i_w ∗ β)` hold?
pub fn bf4_equation(b: &FinBicat, w: OneId, f: OneId, g: OneId, alpha: TwoId, v: OneId, beta: TwoId) -> bool {
    let lhs = b.assoc(w, f, v).and_then(|t| b.wr(alpha, v).and_then(|x| b.vcomp(x, t)));
    let rhs = b.wl(w, beta).and_then(|x| b.assoc(w, g, v).and_then(|t| b.vcomp(t, x)));
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

/// A common refinement of two BF4 solutions `(v, β)` and `(v′, β′)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bf4Refinement {
    pub apex: ObjId,
    pub s: OneId,
    pub s2: OneId,
    pub eps: TwoId,
}

/// Searches `s, s′` and invertible `ε: v∘s ⇒ v′∘s′` with `v∘s ∈ W` equalizing `β` and `β′`.
pub fn bf4_refinement(
    b: &FinBicat,
    w_class: &WClass,
    f: OneId,
    g: OneId,
    (v, beta): (OneId, TwoId),
    (v2, beta2): (OneId, TwoId),
) -> Option<Bf4Refinement> {
    for e in b.objects() {
        for &s in b.hom(e, b.src(v)) {
            let Ok(vs) = b.comp1(v, s) else { continue };
            if !w_class.contains(vs) {
                continue;
            }
            for &s2 in b.hom(e, b.src(v2)) {
                let Ok(v2s2) = b.comp1(v2, s2) else { continue };
                for eps in b.invertible_frame(vs, v2s2) {
                    let lhs = (|| {
                        b.seq(&[
                            b.wr(beta, s)?,
                            b.assoc_inv(g, v, s)?,
                            b.wl(g, eps)?,
                            b.assoc(g, v2, s2)?,
                        ])
                    })();
                    let rhs = (|| {
                        b.seq(&[
                            b.assoc_inv(f, v, s)?,
                            b.wl(f, eps)?,
                            b.assoc(f, v2, s2)?,
                            b.wr(beta2, s2)?,
                        ])
                    })();
                    if matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r) {
                        return Some(Bf4Refinement { apex: e, s, s2, eps });
                    }
                }
            }
        }
    }
    None
}

/// Decides each (BF) axiom by exhaustive quantification over the instance.
pub fn check_bf(b: &FinBicat, w: &WClass) -> BfReport {
    let on = |f: OneId| b.one_name(f).to_string();
    let tn = |a: TwoId| b.two_name(a).to_string();

    let mut bf1 = Tally::new(BfAxiom::BF1);
    for x in b.objects() {
        bf1.record(w.contains(b.id1(x)), || vec![on(b.id1(x))]);
    }

    let mut bf2 = Tally::new(BfAxiom::BF2);
    for v in w.members() {
        for u in w.members().filter(|&u| b.src(v) == b.tgt(u)) {
            let ok = b.comp1(v, u).is_ok_and(|vu| w.contains(vu));
            bf2.record(ok, || vec![on(v), on(u)]);
        }
    }

    let mut bf3 = Tally::new(BfAxiom::BF3);
    for wm in w.members() {
        for f in b.one_cells().filter(|&f| b.tgt(f) == b.tgt(wm)) {
            bf3.record(bf3_filler(b, w, wm, f).is_some(), || vec![on(wm), on(f)]);
        }
    }

    let mut bf4a = Tally::new(BfAxiom::BF4a);
    let mut bf4b = Tally::new(BfAxiom::BF4b);
    let mut bf4c = Tally::new(BfAxiom::BF4c);
    for wm in w.members() {
        let a = b.src(wm);
        for x in b.objects() {
            for &f in b.hom(x, a) {
                for &g in b.hom(x, a) {
                    let (Ok(wf), Ok(wg)) = (b.comp1(wm, f), b.comp1(wm, g)) else { continue };
                    for &alpha in b.frame(wf, wg) {
                        let mut solutions = Vec::new();
                        for v in w.into_object(x) {
                            let (Ok(fv), Ok(gv)) = (b.comp1(f, v), b.comp1(g, v)) else { continue };
                            for &beta in b.frame(fv, gv) {
                                if bf4_equation(b, wm, f, g, alpha, v, beta) {
                                    solutions.push((v, beta));
                                }
                            }
                        }
                        let cells = || vec![on(wm), on(f), on(g), tn(alpha)];
                        bf4a.record(!solutions.is_empty(), cells);
                        if b.is_invertible(alpha) {
                            bf4b.record(solutions.iter().any(|&(_, beta)| b.is_invertible(beta)), cells);
                        }
                        for (i, &p) in solutions.iter().enumerate() {
                            for &q in &solutions[i + 1..] {
                                let ok = bf4_refinement(b, w, f, g, p, q).is_some();
                                bf4c.record(ok, || {
                                    let mut c = cells();
                                    c.extend([on(p.0), tn(p.1), on(q.0), tn(q.1)]);
                                    c
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    let mut bf5 = Tally::new(BfAxiom::BF5);
    for wm in w.members() {
        for &v in b.hom(b.src(wm), b.tgt(wm)) {
            if b.has_invertible(wm, v) {
                bf5.record(w.contains(v), || vec![on(wm), on(v)]);
            }
        }
    }

    let axioms = vec![bf1.finish(), bf2.finish(), bf3.finish(), bf4a.finish(), bf4b.finish(), bf4c.finish(), bf5.finish()];
    let bf4_weak = axioms[3].holds && axioms[4].holds;
    let contains_all_equivalences = b.one_cells().filter(|&f| b.is_equivalence(f)).all(|f| w.contains(f));
    BfReport { axioms, bf4_weak, contains_all_equivalences }
}

/// `W_sat` together with the `(g, h)` witnesses for each member.
#[derive(Debug, Clone)]
pub struct Saturation {
    pub class: WClass,
    pub witnesses: Vec<(OneId, OneId, OneId)>,
}

/// Saturation witness for `f`: `g, h` with `f∘g ∈ W` and `g∘h ∈ W`.
pub fn saturation_witness(b: &FinBicat, w: &WClass, f: OneId) -> Option<(OneId, OneId)> {
    for c in b.objects() {
        for &g in b.hom(c, b.src(f)) {
            if !b.comp1(f, g).is_ok_and(|fg| w.contains(fg)) {
                continue;
            }
            for d in b.objects() {
                for &h in b.hom(d, c) {
                    if b.comp1(g, h).is_ok_and(|gh| w.contains(gh)) {
                        return Some((g, h));
                    }
                }
            }
        }
    }
    None
}

pub fn saturate(b: &FinBicat, w: &WClass) -> Saturation {
    let mut witnesses = Vec::new();
    let mut mask = vec![false; b.num_one_cells()];
    for f in b.one_cells() {
        if let Some((g, h)) = saturation_witness(b, w, f) {
            mask[f.0] = true;
            witnesses.push((f, g, h));
        }
    }
    let class = WClass::from_mask(w.base.clone(), format!("{}_sat", w.name), mask);
    Saturation { class, witnesses }
}

/// Endo-1-cells with an invertible 2-cell to the identity.
pub fn quasi_units(base: &Arc<FinBicat>) -> WClass {
    let b = base.as_ref();
    let mask = b
        .one_cells()
        .map(|f| b.src(f) == b.tgt(f) && b.has_invertible(f, b.id1(b.src(f))))
        .collect();
    WClass::from_mask(base.clone(), "W_min", mask)
}

/// 1-cells admitting an internal-equivalence witness.
pub fn internal_equivalences_class(base: &Arc<FinBicat>) -> WClass {
    let mask = base.one_cells().map(|f| base.is_equivalence(f)).collect();
    WClass::from_mask(base.clone(), "W_equiv", mask)
}
