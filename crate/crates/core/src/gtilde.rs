//! The pseudofunctor `G̃: A[W_A⁻¹] → B[W_{B,sat}⁻¹]` induced by `F: A → B`.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::bicat::{OneId, TwoId};
use crate::fractions::{materialize_fractions, FractionError, Localization, Span, TwoCellRep};
use crate::psfun::{maps_into, validate_psfun, PsFun, PsFunError};
use crate::validate::{composable_pairs, ValidationReport};
use crate::wclass::WClass;

#[derive(Debug, Clone, Error)]
pub enum GTildeError {
    #[error("{class} does not satisfy the fraction axioms: {axiom} fails")]
    Bf { class: String, axiom: String },
    #[error("F₁ does not map {w_src} into {w_tgt}: counterexample {cell}")]
    MapsInto { w_src: String, w_tgt: String, cell: String },
    #[error("localization failed: {0}")]
    Fraction(#[from] FractionError),
    #[error("image of {0} is not a valid representative")]
    Image(String),
    #[error("no invertible connecting class for {0}")]
    NoConnectingClass(String),
    #[error("induced data is not a pseudofunctor: {0}")]
    Structure(#[from] PsFunError),
    #[error("induced pseudofunctor violates {} law(s)", .0.violations.len())]
    Incoherent(Box<ValidationReport>),
}

/// `G̃` together with the two materialized localizations it connects.
#[derive(Debug, Clone)]
pub struct GTilde {
    pub psfun: PsFun,
    pub source: Arc<Localization>,
    pub target: Arc<Localization>,
}

/// The image `[F₀A³, F₁v¹, F₁v², ψ⊙F₂α⊙ψ⁻¹, ψ⊙F₂β⊙ψ⁻¹]` of a representative.
pub fn image_rep(fun: &PsFun, s1: &Span, s2: &Span, rep: &TwoCellRep) -> Option<TwoCellRep> {
    let alpha = conj(fun, s1.back, s2.back, rep.leg1, rep.leg2, rep.alpha)?;
    let beta = conj(fun, s1.forward, s2.forward, rep.leg1, rep.leg2, rep.beta)?;
    Some(TwoCellRep {
        apex: fun.f0(rep.apex),
        leg1: fun.f1(rep.leg1),
        leg2: fun.f1(rep.leg2),
        alpha,
        beta,
    })
}

fn conj(fun: &PsFun, x1: OneId, x2: OneId, v1: OneId, v2: OneId, a: TwoId) -> Option<TwoId> {
    let t = fun.target().as_ref();
    t.seq(&[t.inverse(fun.psi(x1, v1))?, fun.f2(a), fun.psi(x2, v2)]).ok()
}

fn image_span(fun: &PsFun, s: &Span) -> Span {
    Span { apex: fun.f0(s.apex), back: fun.f1(s.back), forward: fun.f1(s.forward) }
}

/// Image under `G̃` of an arbitrary representative of the frame `s1 ⇒ s2` of the source localization.
pub fn g_tilde_on_rep(fun: &PsFun, target: &Localization, s1: &Span, s2: &Span, rep: &TwoCellRep) -> Option<TwoId> {
    let (t1, t2) = (image_span(fun, s1), image_span(fun, s2));
    let img = image_rep(fun, s1, s2, rep)?;
    target.class_of(&img, target.span_id(&t1)?, target.span_id(&t2)?)
}

/// Image of a class of the source localization (via its canonical representative).
pub fn g_tilde_on_two_cell(g: &GTilde, cls: TwoId) -> TwoId {
    g.psfun.f2(cls)
}

pub fn induce_g_tilde(fun: &PsFun, w_a: &WClass, w_b: &WClass) -> Result<GTilde, GTildeError> {
    for w in [w_a, w_b] {
        if let Some(fail) = w.bf_report().first_failure() {
            return Err(GTildeError::Bf { class: w.name().to_string(), axiom: fail.axiom.to_string() });
        }
    }
    let w_b_sat = w_b.saturated();
    if let Err(cell) = maps_into(fun, w_a, w_b_sat) {
        return Err(GTildeError::MapsInto {
            w_src: w_a.name().to_string(),
            w_tgt: w_b_sat.name().to_string(),
            cell: fun.source().one_name(cell).to_string(),
        });
    }
    let source = Arc::new(materialize_fractions(fun.source(), w_a)?);
    let target = Arc::new(materialize_fractions(fun.target(), w_b_sat)?);
    let (sb, tb) = (source.bicat().as_ref(), target.bicat().as_ref());

    let f1: Vec<OneId> = source
        .spans()
        .iter()
        .map(|s| target.span_id(&image_span(fun, s)).expect("F₁ maps W_A into the saturation"))
        .collect();
    let mut f2 = Vec::with_capacity(source.classes().len());
    for (i, c) in source.classes().iter().enumerate() {
        let (s1, s2) = (source.span(c.src), source.span(c.tgt));
        let img = g_tilde_on_rep(fun, &target, s1, s2, &c.canonical)
            .ok_or_else(|| GTildeError::Image(source.render_class(TwoId(i))))?;
        f2.push(img);
    }
    let connect = |s: OneId, t: OneId, at: String| {
        if s == t {
            return Ok(tb.id2(s));
        }
        tb.invertible_frame(s, t).next().ok_or(GTildeError::NoConnectingClass(at))
    };
    let mut psi = HashMap::new();
    for (g, f) in composable_pairs(sb) {
        let s = f1[sb.comp1(g, f).expect("composable").0];
        let t = tb.comp1(f1[g.0], f1[f.0]).expect("images composable");
        psi.insert((g, f), connect(s, t, format!("ψ({}, {})", sb.one_name(g), sb.one_name(f)))?);
    }
    let sigma = sb
        .objects()
        .map(|x| connect(f1[sb.id1(x).0], tb.id1(fun.f0(x)), format!("σ({})", sb.obj_name(x))))
        .collect::<Result<Vec<_>, _>>()?;
    let f0 = sb.objects().map(|x| fun.f0(x)).collect();
    let psfun = PsFun::new(
        format!("G̃[{}]", fun.name),
        source.bicat().clone(),
        target.bicat().clone(),
        f0,
        f1,
        f2,
        psi,
        sigma,
    )?;
    let report = validate_psfun(&psfun);
    if !report.pass {
        return Err(GTildeError::Incoherent(Box::new(report)));
    }
    Ok(GTilde { psfun, source, target })
}
