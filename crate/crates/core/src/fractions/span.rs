use std::fmt;

use serde::Serialize;

use crate::bicat::{FinBicat, ObjId, OneId};
use crate::fractions::FractionError;
use crate::wclass::{bf3_filler, Bf3Filler, WClass};

/// A fraction 1-cell `(A′, w, f)` with `w: A′ → A` in W and `f: A′ → B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Span {
    pub apex: ObjId,
    pub back: OneId,
    pub forward: OneId,
}

impl Span {
    pub fn src(&self, b: &FinBicat) -> ObjId {
        b.tgt(self.back)
    }

    pub fn tgt(&self, b: &FinBicat) -> ObjId {
        b.tgt(self.forward)
    }

    pub fn identity(b: &FinBicat, x: ObjId) -> Span {
        Span { apex: x, back: b.id1(x), forward: b.id1(x) }
    }

    pub fn display<'a>(&'a self, b: &'a FinBicat) -> SpanDisplay<'a> {
        SpanDisplay { span: self, base: b }
    }
}

pub struct SpanDisplay<'a> {
    span: &'a Span,
    base: &'a FinBicat,
}

impl fmt::Display for SpanDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.base;
        write!(
            f,
            "({}, {}, {})",
            b.obj_name(self.span.apex),
            b.one_name(self.span.back),
            b.one_name(self.span.forward)
        )
    }
}

/// All spans `src → tgt` in canonical order.
pub fn enumerate_spans(b: &FinBicat, w: &WClass, src: ObjId, tgt: ObjId) -> Vec<Span> {
    let mut out = Vec::new();
    for apex in b.objects() {
        for back in w.members().filter(|&v| b.src(v) == apex && b.tgt(v) == src) {
            for &forward in b.hom(apex, tgt) {
                out.push(Span { apex, back, forward });
            }
        }
    }
    out
}

/// Every span of the instance in canonical order.
pub fn all_spans(b: &FinBicat, w: &WClass) -> Vec<Span> {
    let mut out = Vec::new();
    for apex in b.objects() {
        for back in w.members().filter(|&v| b.src(v) == apex) {
            for forward in b.one_cells().filter(|&f| b.src(f) == apex) {
                out.push(Span { apex, back, forward });
            }
        }
    }
    out
}

/// A composite span together with the BF3 square that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpanComposite {
    pub span: Span,
    pub filler: Bf3Filler,
}

/// `outer ∘ inner` via the canonical BF3 filler for `(inner.forward, outer.back)`.
pub fn compose_spans(b: &FinBicat, w: &WClass, outer: &Span, inner: &Span) -> Result<SpanComposite, FractionError> {
    if inner.tgt(b) != outer.src(b) {
        return Err(FractionError::NotComposable {
            outer: outer.display(b).to_string(),
            inner: inner.display(b).to_string(),
        });
    }
    let filler = bf3_filler(b, w, outer.back, inner.forward).ok_or_else(|| FractionError::NoFiller {
        w: b.one_name(outer.back).to_string(),
        f: b.one_name(inner.forward).to_string(),
    })?;
    let back = b.comp1(inner.back, filler.v)?;
    let forward = b.comp1(outer.forward, filler.g)?;
    Ok(SpanComposite { span: Span { apex: filler.apex, back, forward }, filler })
}

/// A span is an internal equivalence iff its forward leg lies in the saturation.
pub fn span_is_equivalence(w: &WClass, s: &Span) -> bool {
    w.contains(s.back) && w.saturated().contains(s.forward)
}
