use serde::Serialize;

use crate::bicat::{FinBicat, ObjId, OneId, TwoId};
use crate::error::BicatError;
use crate::fractions::span::{Span, SpanComposite};
use crate::fractions::RepError;
use crate::wclass::WClass;

/// A 2-cell diagram `(A³, v¹, v², α, β)` between spans `(A¹, w¹, f¹) ⇒ (A², w², f²)`:
/// `α: w¹∘v¹ ⇒ w²∘v²` invertible and `β: f¹∘v¹ ⇒ f²∘v²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TwoCellRep {
    pub apex: ObjId,
    pub leg1: OneId,
    pub leg2: OneId,
    pub alpha: TwoId,
    pub beta: TwoId,
}

impl TwoCellRep {
    pub fn render(&self, b: &FinBicat) -> String {
        format!(
            "[{}, {}, {}, {}, {}]",
            b.obj_name(self.apex),
            b.one_name(self.leg1),
            b.one_name(self.leg2),
            b.two_name(self.alpha),
            b.two_name(self.beta)
        )
    }
}

/// Checks boundaries, invertibility of `α` and `w¹∘v¹ ∈ W`.
pub fn validate_rep(b: &FinBicat, w: &WClass, rep: &TwoCellRep, s1: &Span, s2: &Span) -> Result<(), RepError> {
    let boundary = |component: &'static str, detail: String| RepError::Boundary { component, detail };
    if s1.src(b) != s2.src(b) || s1.tgt(b) != s2.tgt(b) {
        return Err(boundary("frame", "spans are not parallel".into()));
    }
    if b.src(rep.leg1) != rep.apex || b.tgt(rep.leg1) != s1.apex {
        return Err(boundary("leg1", format!("{} is not {} → {}", b.one_name(rep.leg1), b.obj_name(rep.apex), b.obj_name(s1.apex))));
    }
    if b.src(rep.leg2) != rep.apex || b.tgt(rep.leg2) != s2.apex {
        return Err(boundary("leg2", format!("{} is not {} → {}", b.one_name(rep.leg2), b.obj_name(rep.apex), b.obj_name(s2.apex))));
    }
    let wv1 = b.comp1(s1.back, rep.leg1)?;
    let wv2 = b.comp1(s2.back, rep.leg2)?;
    if b.src1(rep.alpha) != wv1 || b.tgt1(rep.alpha) != wv2 {
        return Err(boundary("alpha", format!("{} is not {} ⇒ {}", b.two_name(rep.alpha), b.one_name(wv1), b.one_name(wv2))));
    }
    let fv1 = b.comp1(s1.forward, rep.leg1)?;
    let fv2 = b.comp1(s2.forward, rep.leg2)?;
    if b.src1(rep.beta) != fv1 || b.tgt1(rep.beta) != fv2 {
        return Err(boundary("beta", format!("{} is not {} ⇒ {}", b.two_name(rep.beta), b.one_name(fv1), b.one_name(fv2))));
    }
    if !b.is_invertible(rep.alpha) {
        return Err(RepError::AlphaNotInvertible(b.two_name(rep.alpha).to_string()));
    }
    if !w.contains(wv1) {
        return Err(RepError::NotInW(b.one_name(wv1).to_string()));
    }
    Ok(())
}

/// All valid representatives of the frame `s1 ⇒ s2`, in canonical order.
pub fn enumerate_reps(b: &FinBicat, w: &WClass, s1: &Span, s2: &Span) -> Vec<TwoCellRep> {
    let mut out = Vec::new();
    if s1.src(b) != s2.src(b) || s1.tgt(b) != s2.tgt(b) {
        return out;
    }
    for apex in b.objects() {
        for &leg1 in b.hom(apex, s1.apex) {
            let Ok(wv1) = b.comp1(s1.back, leg1) else { continue };
            if !w.contains(wv1) {
                continue;
            }
            let Ok(fv1) = b.comp1(s1.forward, leg1) else { continue };
            for &leg2 in b.hom(apex, s2.apex) {
                let (Ok(wv2), Ok(fv2)) = (b.comp1(s2.back, leg2), b.comp1(s2.forward, leg2)) else { continue };
                for alpha in b.invertible_frame(wv1, wv2) {
                    for &beta in b.frame(fv1, fv2) {
                        out.push(TwoCellRep { apex, leg1, leg2, alpha, beta });
                    }
                }
            }
        }
    }
    out
}

/// Refinement data `(E, u, u′, ε¹, ε²)` relating two representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Refinement {
    pub apex: ObjId,
    pub u1: OneId,
    pub u2: OneId,
    pub eps1: TwoId,
    pub eps2: TwoId,
}

/// `(γ′ ∗ u′) ⊙ θ ⊙ (x ∗ ε¹) ⊙ θ⁻¹ = θ ⊙ (y ∗ ε²) ⊙ θ⁻¹ ⊙ (γ ∗ u)` for the α- or β-components.
#[allow(clippy::too_many_arguments)]
fn refinement_square(
    b: &FinBicat,
    x: OneId,
    y: OneId,
    r: &TwoCellRep,
    r2: &TwoCellRep,
    gamma: TwoId,
    gamma2: TwoId,
    rf: &Refinement,
) -> Result<bool, BicatError> {
    let lhs = b.seq(&[
        b.assoc_inv(x, r.leg1, rf.u1)?,
        b.wl(x, rf.eps1)?,
        b.assoc(x, r2.leg1, rf.u2)?,
        b.wr(gamma2, rf.u2)?,
    ])?;
    let rhs = b.seq(&[
        b.wr(gamma, rf.u1)?,
        b.assoc_inv(y, r.leg2, rf.u1)?,
        b.wl(y, rf.eps2)?,
        b.assoc(y, r2.leg2, rf.u2)?,
    ])?;
    Ok(lhs == rhs)
}

pub fn is_refinement(b: &FinBicat, w: &WClass, r1: &TwoCellRep, r2: &TwoCellRep, s1: &Span, s2: &Span, rf: &Refinement) -> bool {
    let check = || -> Result<bool, BicatError> {
        let w1v1 = b.comp1(s1.back, r1.leg1)?;
        if !w.contains(b.comp1(w1v1, rf.u1)?) || !b.is_invertible(rf.eps1) || !b.is_invertible(rf.eps2) {
            return Ok(false);
        }
        if b.src1(rf.eps1) != b.comp1(r1.leg1, rf.u1)? || b.tgt1(rf.eps1) != b.comp1(r2.leg1, rf.u2)? {
            return Ok(false);
        }
        if b.src1(rf.eps2) != b.comp1(r1.leg2, rf.u1)? || b.tgt1(rf.eps2) != b.comp1(r2.leg2, rf.u2)? {
            return Ok(false);
        }
        Ok(refinement_square(b, s1.back, s2.back, r1, r2, r1.alpha, r2.alpha, rf)?
            && refinement_square(b, s1.forward, s2.forward, r1, r2, r1.beta, r2.beta, rf)?)
    };
    check().unwrap_or(false)
}

/// First refinement relating `r1` to `r2`, by exhaustive search.
pub fn find_refinement(b: &FinBicat, w: &WClass, r1: &TwoCellRep, r2: &TwoCellRep, s1: &Span, s2: &Span) -> Option<Refinement> {
    let w1v1 = b.comp1(s1.back, r1.leg1).ok()?;
    for apex in b.objects() {
        for &u1 in b.hom(apex, r1.apex) {
            if !b.comp1(w1v1, u1).is_ok_and(|x| w.contains(x)) {
                continue;
            }
            let (Ok(l1), Ok(l2)) = (b.comp1(r1.leg1, u1), b.comp1(r1.leg2, u1)) else { continue };
            for &u2 in b.hom(apex, r2.apex) {
                let (Ok(m1), Ok(m2)) = (b.comp1(r2.leg1, u2), b.comp1(r2.leg2, u2)) else { continue };
                for eps1 in b.invertible_frame(l1, m1) {
                    for eps2 in b.invertible_frame(l2, m2) {
                        let rf = Refinement { apex, u1, u2, eps1, eps2 };
                        let ok = refinement_square(b, s1.back, s2.back, r1, r2, r1.alpha, r2.alpha, &rf).unwrap_or(false)
                            && refinement_square(b, s1.forward, s2.forward, r1, r2, r1.beta, r2.beta, &rf).unwrap_or(false);
                        if ok {
                            return Some(rf);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Decides equivalence of two valid representatives of the same frame.
pub fn reps_equivalent(
    b: &FinBicat,
    w: &WClass,
    r1: &TwoCellRep,
    r2: &TwoCellRep,
    s1: &Span,
    s2: &Span,
) -> (bool, Option<Refinement>) {
    let rf = find_refinement(b, w, r1, r2, s1, s2);
    (rf.is_some(), rf)
}

/// For representatives sharing `(A³, v¹, v², α)`: equivalent iff some `z` with
/// `(w¹∘v¹)∘z ∈ W` has `β ∗ z = β′ ∗ z`. Returns `None` when not applicable.
pub fn fast_path_equivalent(b: &FinBicat, w: &WClass, r1: &TwoCellRep, r2: &TwoCellRep, s1: &Span) -> Option<Option<OneId>> {
    if (r1.apex, r1.leg1, r1.leg2, r1.alpha) != (r2.apex, r2.leg1, r2.leg2, r2.alpha) {
        return None;
    }
    let w1v1 = b.comp1(s1.back, r1.leg1).ok()?;
    for x in b.objects() {
        for &z in b.hom(x, r1.apex) {
            if !b.comp1(w1v1, z).is_ok_and(|c| w.contains(c)) {
                continue;
            }
            if let (Ok(a), Ok(c)) = (b.wr(r1.beta, z), b.wr(r2.beta, z)) {
                if a == c {
                    return Some(Some(z));
                }
            }
        }
    }
    Some(None)
}

/// Identity representative `(A′, id, id, i, i)` on `s`.
pub fn identity_rep(b: &FinBicat, s: &Span) -> Result<TwoCellRep, BicatError> {
    let id = b.id1(s.apex);
    Ok(TwoCellRep {
        apex: s.apex,
        leg1: id,
        leg2: id,
        alpha: b.id2(b.comp1(s.back, id)?),
        beta: b.id2(b.comp1(s.forward, id)?),
    })
}

/// Vertical composite `r2 ⊙ r1` of representatives `s1 ⇒ s2 ⇒ s3`.
pub fn vcompose_reps(
    b: &FinBicat,
    w: &WClass,
    spans: (&Span, &Span, &Span),
    r1: &TwoCellRep,
    r2: &TwoCellRep,
) -> Option<TwoCellRep> {
    let (s1, s2, s3) = spans;
    let (w1, w2, w3) = (s1.back, s2.back, s3.back);
    let (f1, f2, f3) = (s1.forward, s2.forward, s3.forward);
    for c in b.objects() {
        for &t in b.hom(c, r1.apex) {
            let Ok(leg1) = b.comp1(r1.leg1, t) else { continue };
            if !b.comp1(w1, leg1).is_ok_and(|x| w.contains(x)) {
                continue;
            }
            let Ok(v2t) = b.comp1(r1.leg2, t) else { continue };
            for &t2 in b.hom(c, r2.apex) {
                let (Ok(u2t2), Ok(leg2)) = (b.comp1(r2.leg1, t2), b.comp1(r2.leg2, t2)) else { continue };
                for rho in b.invertible_frame(v2t, u2t2) {
                    let build = |x1: OneId, x2: OneId, x3: OneId, g1: TwoId, g2: TwoId| -> Result<TwoId, BicatError> {
                        b.seq(&[
                            b.assoc(x1, r1.leg1, t)?,
                            b.wr(g1, t)?,
                            b.assoc_inv(x2, r1.leg2, t)?,
                            b.wl(x2, rho)?,
                            b.assoc(x2, r2.leg1, t2)?,
                            b.wr(g2, t2)?,
                            b.assoc_inv(x3, r2.leg2, t2)?,
                        ])
                    };
                    let (Ok(alpha), Ok(beta)) = (
                        build(w1, w2, w3, r1.alpha, r2.alpha),
                        build(f1, f2, f3, r1.beta, r2.beta),
                    ) else {
                        continue;
                    };
                    return Some(TwoCellRep { apex: c, leg1, leg2, alpha, beta });
                }
            }
        }
    }
    None
}

/// `g ∗ Γ` for `g = (B′, u, g′)` and `Γ: s1 ⇒ s2`, given the composites `g∘s1`, `g∘s2`.
pub fn whisker_left_rep(
    b: &FinBicat,
    w: &WClass,
    g: &Span,
    (s1, s2): (&Span, &Span),
    (c1, c2): (&SpanComposite, &SpanComposite),
    rep: &TwoCellRep,
) -> Option<TwoCellRep> {
    let (w1, w2, f1, f2) = (s1.back, s2.back, s1.forward, s2.forward);
    let (u, g2) = (g.back, g.forward);
    let (p1, q1, rho1) = (c1.filler.v, c1.filler.g, c1.filler.rho);
    let (p2, q2, rho2) = (c2.filler.v, c2.filler.g, c2.filler.rho);
    let rho1_inv = b.inverse(rho1)?;
    let w1p1 = b.comp1(w1, p1).ok()?;
    for e in b.objects() {
        for &r1 in b.hom(e, c1.filler.apex) {
            if !b.comp1(w1p1, r1).is_ok_and(|x| w.contains(x)) {
                continue;
            }
            let Ok(p1r1) = b.comp1(p1, r1) else { continue };
            let Ok(q1r1) = b.comp1(q1, r1) else { continue };
            for &r2 in b.hom(e, c2.filler.apex) {
                let (Ok(p2r2), Ok(q2r2)) = (b.comp1(p2, r2), b.comp1(q2, r2)) else { continue };
                let zetas = b.frame(q1r1, q2r2);
                if zetas.is_empty() {
                    continue;
                }
                for &t in b.hom(e, rep.apex) {
                    let (Ok(v1t), Ok(v2t)) = (b.comp1(rep.leg1, t), b.comp1(rep.leg2, t)) else { continue };
                    for d1 in b.invertible_frame(p1r1, v1t) {
                        for d2 in b.invertible_frame(p2r2, v2t) {
                            let Some(d2_inv) = b.inverse(d2) else { continue };
                            let conj = |x1: OneId, x2: OneId, gamma: TwoId| -> Result<Vec<TwoId>, BicatError> {
                                Ok(vec![
                                    b.assoc_inv(x1, p1, r1)?,
                                    b.wl(x1, d1)?,
                                    b.assoc(x1, rep.leg1, t)?,
                                    b.wr(gamma, t)?,
                                    b.assoc_inv(x2, rep.leg2, t)?,
                                    b.wl(x2, d2_inv)?,
                                    b.assoc(x2, p2, r2)?,
                                ])
                            };
                            let target = (|| -> Result<TwoId, BicatError> {
                                let mut cells = vec![b.assoc(u, q1, r1)?, b.wr(rho1_inv, r1)?];
                                cells.extend(conj(f1, f2, rep.beta)?);
                                cells.extend([b.wr(rho2, r2)?, b.assoc_inv(u, q2, r2)?]);
                                b.seq(&cells)
                            })();
                            let Ok(target) = target else { continue };
                            let Ok(alpha) = conj(w1, w2, rep.alpha).and_then(|c| b.seq(&c)) else { continue };
                            for &zeta in zetas {
                                if b.wl(u, zeta).ok() != Some(target) {
                                    continue;
                                }
                                let beta = (|| b.seq(&[b.assoc_inv(g2, q1, r1)?, b.wl(g2, zeta)?, b.assoc(g2, q2, r2)?]))();
                                if let Ok(beta) = beta {
                                    return Some(TwoCellRep { apex: e, leg1: r1, leg2: r2, alpha, beta });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// `Γ ∗ h` for `h = (C′, x, h′)` and `Γ: s1 ⇒ s2`, given the composites `s1∘h`, `s2∘h`.
pub fn whisker_right_rep(
    b: &FinBicat,
    w: &WClass,
    h: &Span,
    (s1, s2): (&Span, &Span),
    (c1, c2): (&SpanComposite, &SpanComposite),
    rep: &TwoCellRep,
) -> Option<TwoCellRep> {
    let (w1, w2, f1, f2) = (s1.back, s2.back, s1.forward, s2.forward);
    let (x, h2) = (h.back, h.forward);
    let (p1, q1, rho1) = (c1.filler.v, c1.filler.g, c1.filler.rho);
    let (p2, q2, rho2) = (c2.filler.v, c2.filler.g, c2.filler.rho);
    let rho2_inv = b.inverse(rho2)?;
    let xp1 = b.comp1(x, p1).ok()?;
    for e in b.objects() {
        for &r1 in b.hom(e, c1.filler.apex) {
            if !b.comp1(xp1, r1).is_ok_and(|c| w.contains(c)) {
                continue;
            }
            let (Ok(p1r1), Ok(q1r1)) = (b.comp1(p1, r1), b.comp1(q1, r1)) else { continue };
            for &r2 in b.hom(e, c2.filler.apex) {
                let (Ok(p2r2), Ok(q2r2)) = (b.comp1(p2, r2), b.comp1(q2, r2)) else { continue };
                let epss: Vec<TwoId> = b.invertible_frame(p1r1, p2r2).collect();
                if epss.is_empty() {
                    continue;
                }
                for &t in b.hom(e, rep.apex) {
                    let (Ok(v1t), Ok(v2t)) = (b.comp1(rep.leg1, t), b.comp1(rep.leg2, t)) else { continue };
                    for d1 in b.invertible_frame(q1r1, v1t) {
                        for d2 in b.invertible_frame(q2r2, v2t) {
                            let Some(d2_inv) = b.inverse(d2) else { continue };
                            let conj = |y1: OneId, y2: OneId, gamma: TwoId| -> Result<Vec<TwoId>, BicatError> {
                                Ok(vec![
                                    b.assoc_inv(y1, q1, r1)?,
                                    b.wl(y1, d1)?,
                                    b.assoc(y1, rep.leg1, t)?,
                                    b.wr(gamma, t)?,
                                    b.assoc_inv(y2, rep.leg2, t)?,
                                    b.wl(y2, d2_inv)?,
                                    b.assoc(y2, q2, r2)?,
                                ])
                            };
                            let target = (|| -> Result<TwoId, BicatError> {
                                let mut cells = vec![b.assoc(h2, p1, r1)?, b.wr(rho1, r1)?];
                                cells.extend(conj(w1, w2, rep.alpha)?);
                                cells.extend([b.wr(rho2_inv, r2)?, b.assoc_inv(h2, p2, r2)?]);
                                b.seq(&cells)
                            })();
                            let Ok(target) = target else { continue };
                            let Ok(beta) = conj(f1, f2, rep.beta).and_then(|c| b.seq(&c)) else { continue };
                            for &eps in &epss {
                                if b.wl(h2, eps).ok() != Some(target) {
                                    continue;
                                }
                                let alpha = (|| b.seq(&[b.assoc_inv(x, p1, r1)?, b.wl(x, eps)?, b.assoc(x, p2, r2)?]))();
                                if let Ok(alpha) = alpha {
                                    return Some(TwoCellRep { apex: e, leg1: r1, leg2: r2, alpha, beta });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
