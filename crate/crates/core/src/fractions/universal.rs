use std::collections::HashMap;

use crate::bicat::{OneId, TwoId};
use crate::fractions::rep::TwoCellRep;
use crate::fractions::span::Span;
use crate::fractions::{FractionError, Localization};
use crate::psfun::{PsFun, PsFunError};
use crate::validate::composable_pairs;

/// Canonical invertible class `s ⇒ t`: the identity when `s = t`, else the first invertible one.
pub(crate) fn connecting_class(loc: &Localization, s: OneId, t: OneId) -> Option<TwoId> {
    let fb = loc.bicat();
    if s == t {
        return Some(fb.id2(s));
    }
    fb.invertible_frame(s, t).next()
}

/// The pseudofunctor `U_W: C → C[W⁻¹]`.
pub fn universal_pseudofunctor(loc: &Localization) -> Result<PsFun, FractionError> {
    let b = loc.base().as_ref();
    let fb = loc.bicat().as_ref();
    let u1 = |f: OneId| {
        loc.span_id(&Span { apex: b.src(f), back: b.id1(b.src(f)), forward: f })
            .expect("U₁(f) is a span because identities lie in W")
    };
    let f1: Vec<OneId> = b.one_cells().map(u1).collect();
    let mut f2 = Vec::with_capacity(b.num_two_cells());
    for a in b.two_cells() {
        let x = b.src(b.src1(a));
        let id = b.id1(x);
        let rep = TwoCellRep {
            apex: x,
            leg1: id,
            leg2: id,
            alpha: b.id2(b.comp1(id, id)?),
            beta: b.wr(a, id)?,
        };
        let cls = loc.class_of(&rep, f1[b.src1(a).0], f1[b.tgt1(a).0]).ok_or_else(|| FractionError::SearchFailed {
            operation: "U₂",
            at: b.two_name(a).to_string(),
        })?;
        f2.push(cls);
    }
    let mut psi = HashMap::new();
    for (g, f) in composable_pairs(b) {
        let s = f1[b.comp1(g, f)?.0];
        let t = fb.comp1(f1[g.0], f1[f.0])?;
        let c = connecting_class(loc, s, t).ok_or_else(|| FractionError::NoConnectingClass {
            component: "ψ",
            at: format!("({}, {})", b.one_name(g), b.one_name(f)),
        })?;
        psi.insert((g, f), c);
    }
    let mut sigma = Vec::new();
    for x in b.objects() {
        let s = f1[b.id1(x).0];
        let t = fb.id1(x);
        sigma.push(connecting_class(loc, s, t).ok_or_else(|| FractionError::NoConnectingClass {
            component: "σ",
            at: b.obj_name(x).to_string(),
        })?);
    }
    PsFun::new(
        format!("U_{}", loc.w().name()),
        loc.base().clone(),
        loc.bicat().clone(),
        b.objects().collect(),
        f1,
        f2,
        psi,
        sigma,
    )
    .map_err(|e: PsFunError| FractionError::SearchFailed { operation: "U_W assembly", at: e.to_string() })
}
