//! Pseudofunctors between finite bicategories and their coherence laws.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::bicat::{FinBicat, ObjId, OneId, TwoId};
use crate::validate::{composable_pairs, composable_triples, Collector, Law, ValidationReport};
use crate::wclass::WClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PsFunError {
    #[error("{map} table has {got} rows, expected {expected}")]
    Arity { map: &'static str, got: usize, expected: usize },
    #[error("{map}({cell}) violates boundaries: {detail}")]
    Boundary { map: &'static str, cell: String, detail: String },
    #[error("psi({g}, {f}) is missing")]
    MissingPsi { g: String, f: String },
}

/// Pseudofunctor data `(F₀, F₁, F₂, ψ, σ)` with `ψ_{g,f}: F₁(g∘f) ⇒ F₁g∘F₁f`
/// and `σ_A: F₁(id_A) ⇒ id_{F₀A}`.
#[derive(Debug, Clone)]
pub struct PsFun {
    pub name: String,
    source: Arc<FinBicat>,
    target: Arc<FinBicat>,
    f0: Vec<ObjId>,
    f1: Vec<OneId>,
    f2: Vec<TwoId>,
    psi: HashMap<(OneId, OneId), TwoId>,
    sigma: Vec<TwoId>,
}

impl PsFun {
    /// Assembles pseudofunctor data, rejecting maps that do not respect boundaries.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        source: Arc<FinBicat>,
        target: Arc<FinBicat>,
        f0: Vec<ObjId>,
        f1: Vec<OneId>,
        f2: Vec<TwoId>,
        psi: HashMap<(OneId, OneId), TwoId>,
        sigma: Vec<TwoId>,
    ) -> Result<Self, PsFunError> {
        let (s, t) = (source.as_ref(), target.as_ref());
        let arity = |map, got, expected| if got == expected { Ok(()) } else { Err(PsFunError::Arity { map, got, expected }) };
        arity("F0", f0.len(), s.num_objects())?;
        arity("F1", f1.len(), s.num_one_cells())?;
        arity("F2", f2.len(), s.num_two_cells())?;
        arity("sigma", sigma.len(), s.num_objects())?;
        let bad = |map, cell: String, detail: String| Err(PsFunError::Boundary { map, cell, detail });
        for &x in &f0 {
            if x.0 >= t.num_objects() {
                return bad("F0", format!("#{}", x.0), "target object out of range".into());
            }
        }
        for f in s.one_cells() {
            let img = f1[f.0];
            if img.0 >= t.num_one_cells() {
                return bad("F1", s.one_name(f).into(), "target 1-cell out of range".into());
            }
            if t.src(img) != f0[s.src(f).0] || t.tgt(img) != f0[s.tgt(f).0] {
                return bad("F1", s.one_name(f).into(), format!("image {} has the wrong endpoints", t.one_name(img)));
            }
        }
        for a in s.two_cells() {
            let img = f2[a.0];
            if img.0 >= t.num_two_cells() {
                return bad("F2", s.two_name(a).into(), "target 2-cell out of range".into());
            }
            if t.src1(img) != f1[s.src1(a).0] || t.tgt1(img) != f1[s.tgt1(a).0] {
                return bad("F2", s.two_name(a).into(), format!("image {} has the wrong frame", t.two_name(img)));
            }
        }
        for (g, f) in composable_pairs(s) {
            let p = *psi
                .get(&(g, f))
                .ok_or_else(|| PsFunError::MissingPsi { g: s.one_name(g).into(), f: s.one_name(f).into() })?;
            let gf = s.comp1(g, f).map_err(|e| PsFunError::Boundary { map: "psi", cell: s.one_name(g).into(), detail: e.to_string() })?;
            let want_tgt = t.comp1(f1[g.0], f1[f.0]).ok();
            if p.0 >= t.num_two_cells() || t.src1(p) != f1[gf.0] || Some(t.tgt1(p)) != want_tgt {
                return bad("psi", format!("{}, {}", s.one_name(g), s.one_name(f)), "component has the wrong frame".into());
            }
        }
        for x in s.objects() {
            let c = sigma[x.0];
            if c.0 >= t.num_two_cells() || t.src1(c) != f1[s.id1(x).0] || t.tgt1(c) != t.id1(f0[x.0]) {
                return bad("sigma", s.obj_name(x).into(), "component has the wrong frame".into());
            }
        }
        Ok(PsFun { name: name.into(), source, target, f0, f1, f2, psi, sigma })
    }

    /// The identity pseudofunctor.
    pub fn identity(b: &Arc<FinBicat>) -> Self {
        let s = b.as_ref();
        let psi = composable_pairs(s).into_iter().map(|(g, f)| ((g, f), s.id2(s.comp1(g, f).expect("composable")))).collect();
        PsFun::new(
            "id",
            b.clone(),
            b.clone(),
            s.objects().collect(),
            s.one_cells().collect(),
            s.two_cells().collect(),
            psi,
            s.objects().map(|x| s.id2(s.id1(x))).collect(),
        )
        .expect("identity data is well-typed")
    }

    pub fn source(&self) -> &Arc<FinBicat> {
        &self.source
    }
    pub fn target(&self) -> &Arc<FinBicat> {
        &self.target
    }
    pub fn f0(&self, x: ObjId) -> ObjId {
        self.f0[x.0]
    }
    pub fn f1(&self, f: OneId) -> OneId {
        self.f1[f.0]
    }
    pub fn f2(&self, a: TwoId) -> TwoId {
        self.f2[a.0]
    }
    pub fn psi(&self, g: OneId, f: OneId) -> TwoId {
        self.psi[&(g, f)]
    }
    pub fn sigma(&self, x: ObjId) -> TwoId {
        self.sigma[x.0]
    }
    pub fn psi_table(&self) -> &HashMap<(OneId, OneId), TwoId> {
        &self.psi
    }

    /// `ψ_{f²,v} ⊙ F₂(α) ⊙ ψ_{f¹,v}⁻¹ : F₁f¹∘F₁v ⇒ F₁f²∘F₁v` for `α: f¹∘v ⇒ f²∘v`.
    pub fn conjugate(&self, f1: OneId, f2: OneId, v: OneId, alpha: TwoId) -> Option<TwoId> {
        let t = self.target.as_ref();
        let pinv = t.inverse(self.psi(f1, v))?;
        t.seq(&[pinv, self.f2(alpha), self.psi(f2, v)]).ok()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Checks every pseudofunctor law exhaustively.
pub fn validate_psfun(fun: &PsFun) -> ValidationReport {
    let (s, t) = (fun.source.as_ref(), fun.target.as_ref());
    let mut c = Collector::new();
    let sn = |f: OneId| s.one_name(f).to_string();
    let stn = |a: TwoId| s.two_name(a).to_string();

    for f in s.one_cells() {
        c.check(fun.f2(s.id2(f)) == t.id2(fun.f1(f)), Law::Functoriality, || vec![sn(f)], "F₂ does not preserve the identity 2-cell");
    }
    for a in s.two_cells() {
        for bb in s.two_cells().filter(|&bb| s.src1(bb) == s.tgt1(a)) {
            let lhs = s.vcomp(bb, a).ok().map(|x| fun.f2(x));
            let rhs = t.vcomp(fun.f2(bb), fun.f2(a)).ok();
            c.equal(lhs, rhs, Law::Functoriality, || vec![stn(bb), stn(a)], "F₂ does not preserve vertical composition");
        }
    }
    for (&(g, f), &p) in sorted(&fun.psi) {
        c.check(t.is_invertible(p), Law::Invertibility, || vec![sn(g), sn(f)], "ψ component not invertible");
    }
    for x in s.objects() {
        c.check(t.is_invertible(fun.sigma(x)), Law::Invertibility, || vec![s.obj_name(x).into()], "σ component not invertible");
    }

    for (g, f) in composable_pairs(s) {
        // naturality in f
        for f2 in s.hom(s.src(f), s.tgt(f)).to_vec() {
            for &alpha in s.frame(f, f2) {
                let lhs = s.wl(g, alpha).ok().and_then(|x| t.vcomp(fun.psi(g, f2), fun.f2(x)).ok());
                let rhs = t.wl(fun.f1(g), fun.f2(alpha)).and_then(|x| t.vcomp(x, fun.psi(g, f))).ok();
                c.equal(lhs, rhs, Law::Naturality, || vec![sn(g), stn(alpha)], "ψ not natural in its second argument");
            }
        }
        // naturality in g
        for g2 in s.hom(s.src(g), s.tgt(g)).to_vec() {
            for &beta in s.frame(g, g2) {
                let lhs = s.wr(beta, f).ok().and_then(|x| t.vcomp(fun.psi(g2, f), fun.f2(x)).ok());
                let rhs = t.wr(fun.f2(beta), fun.f1(f)).and_then(|x| t.vcomp(x, fun.psi(g, f))).ok();
                c.equal(lhs, rhs, Law::Naturality, || vec![stn(beta), sn(f)], "ψ not natural in its first argument");
            }
        }
    }

    for (h, g, f) in composable_triples(s) {
        let (fh, fg, ff) = (fun.f1(h), fun.f1(g), fun.f1(f));
        let lhs = (|| {
            let gf = s.comp1(g, f)?;
            t.seq(&[fun.psi(h, gf), t.wl(fh, fun.psi(g, f))?, t.assoc(fh, fg, ff)?])
        })()
        .ok();
        let rhs = (|| {
            let hg = s.comp1(h, g)?;
            t.seq(&[fun.f2(s.assoc(h, g, f)?), fun.psi(hg, f), t.wr(fun.psi(h, g), ff)?])
        })()
        .ok();
        c.equal(lhs, rhs, Law::AssociativityCoherence, || vec![sn(h), sn(g), sn(f)], "ψ-routes differ modulo associators");
    }

    for f in s.one_cells() {
        let (a, bo) = (s.src(f), s.tgt(f));
        let ff = fun.f1(f);
        let lhs = t.wl(ff, fun.sigma(a)).and_then(|w| t.seq(&[fun.psi(f, s.id1(a)), w, t.runit(ff)])).ok();
        let rhs = Some(fun.f2(s.runit(f)));
        c.equal(lhs, rhs, Law::UnitCoherence, || vec![sn(f)], "right unit coherence fails");
        let lhs = t.wr(fun.sigma(bo), ff).ok().and_then(|w| t.seq(&[fun.psi(s.id1(bo), f), w, t.lunit(ff)]).ok());
        let rhs = Some(fun.f2(s.lunit(f)));
        c.equal(lhs, rhs, Law::UnitCoherence, || vec![sn(f)], "left unit coherence fails");
    }
    c.finish(false)
}

fn sorted<K: Ord + Copy, V>(m: &HashMap<K, V>) -> Vec<(&K, &V)> {
    let mut v: Vec<_> = m.iter().collect();
    v.sort_by_key(|(k, _)| **k);
    v
}

/// Membership check `F₁(w) ∈ W_tgt` for every `w ∈ W_src`; returns the first offender.
pub fn maps_into(fun: &PsFun, w_src: &WClass, w_tgt: &WClass) -> Result<(), OneId> {
    match w_src.members().find(|&w| !w_tgt.contains(fun.f1(w))) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// First `w ∈ W_src` whose image is not an internal equivalence.
pub fn maps_to_equivalences(fun: &PsFun, w_src: &WClass) -> Result<(), OneId> {
    match w_src.members().find(|&w| !fun.target.is_equivalence(fun.f1(w))) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}
