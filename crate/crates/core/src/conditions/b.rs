use super::a::{distinct_pairs, equalizing_member, whiskered_equal};
use super::Side::{Source as S, Target as T};
use super::*;
use crate::pasting::{eval_pasting, PastingExpr};

pub(super) fn register(r: &mut ConditionRegistry) {
    r.register(Box::new(B1));
    r.register(Box::new(B2));
    r.register(Box::new(B3));
    r.register(Box::new(B4));
    r.register(Box::new(B5));
}

struct B1;
struct B2;
struct B3;
struct B4;
struct B5;

/// First object `A` and internal equivalence `F₀A → y`.
pub(super) fn equivalence_onto(cx: &CheckContext<'_>, y: ObjId, n: &mut u64) -> Option<(ObjId, OneId)> {
    let t = cx.tgt();
    for x in cx.src().objects() {
        for &e in t.hom(cx.fun.f0(x), y) {
            *n += 1;
            if t.is_equivalence(e) {
                return Some((x, e));
            }
        }
    }
    None
}

impl Condition for B1 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::B1
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        cx.tgt().objects().map(|y| Tuple(vec![cx.obj("A_B", T, y)])).collect()
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let (x, e) = equivalence_onto(cx, input.obj(0), n)?;
        Some(Tuple(vec![cx.obj("A_A", S, x), cx.one("e_B", T, e)]))
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let t = cx.tgt();
        let e = w.one(1);
        t.src(e) == cx.fun.f0(w.obj(0)) && t.tgt(e) == input.obj(0) && t.is_equivalence(e)
    }

    fn explain_failure(&self, _: &CheckContext<'_>, input: &Tuple) -> (Tuple, String) {
        (Tuple::default(), format!("no internal equivalence from an image object to {}", input.0[0].name))
    }
}

impl Condition for B2 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::B2
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let mut out = Vec::new();
        for a1 in s.objects() {
            for a2 in s.objects() {
                for &e in t.hom(cx.fun.f0(a1), cx.fun.f0(a2)) {
                    if t.is_equivalence(e) {
                        out.push(Tuple(vec![cx.obj("A1_A", S, a1), cx.obj("A2_A", S, a2), cx.one("e_B", T, e)]));
                    }
                }
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let (a1, a2, e) = (input.obj(0), input.obj(1), input.one(2));
        let id = t.id1(cx.fun.f0(a1));
        for a3 in s.objects() {
            for w1 in members_between(s, cx.wa(), a3, a1) {
                for w2 in members_between(s, cx.wa().saturated(), a3, a2) {
                    for &ep in t.hom(cx.fun.f0(a1), cx.fun.f0(a3)) {
                        *n += 1;
                        if !t.is_equivalence(ep) {
                            continue;
                        }
                        let (Ok(r2), Ok(r1)) = (t.comp1(cx.fun.f1(w2), ep), t.comp1(cx.fun.f1(w1), ep)) else { continue };
                        if let (Some(d2), Some(d1)) = (t.invertible_frame(e, r2).next(), t.invertible_frame(id, r1).next()) {
                            return Some(Tuple(vec![
                                cx.obj("A3_A", S, a3),
                                cx.one("w1_A", S, w1),
                                cx.one("w2_A", S, w2),
                                cx.one("e'_B", T, ep),
                                cx.two("delta1_B", T, d1),
                                cx.two("delta2_B", T, d2),
                            ]));
                        }
                    }
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let t = cx.tgt();
        let (w1, w2, ep, d1, d2) = (w.one(1), w.one(2), w.one(3), w.two(4), w.two(5));
        let id = t.id1(cx.fun.f0(input.obj(0)));
        let frames = || -> Result<bool, crate::error::BicatError> {
            Ok(invertible_in(t, d1, id, t.comp1(cx.fun.f1(w1), ep)?)
                && invertible_in(t, d2, input.one(2), t.comp1(cx.fun.f1(w2), ep)?))
        };
        cx.wa().contains(w1) && cx.wa().saturated().contains(w2) && t.is_equivalence(ep) && frames().unwrap_or(false)
    }
}

impl Condition for B3 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::B3
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let t = cx.tgt();
        let mut out = Vec::new();
        for ba in cx.src().objects() {
            for y in t.objects() {
                for &fb in t.hom(y, cx.fun.f0(ba)) {
                    out.push(Tuple(vec![cx.obj("B_A", S, ba), cx.obj("A_B", T, y), cx.one("f_B", T, fb)]));
                }
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let (ba, y, fb) = (input.obj(0), input.obj(1), input.one(2));
        for x in s.objects() {
            for &fa in s.hom(x, ba) {
                for &e in t.hom(y, cx.fun.f0(x)) {
                    *n += 1;
                    if !t.is_equivalence(e) {
                        continue;
                    }
                    let Ok(r) = t.comp1(cx.fun.f1(fa), e) else { continue };
                    if let Some(al) = t.invertible_frame(fb, r).next() {
                        return Some(Tuple(vec![
                            cx.obj("A_A", S, x),
                            cx.one("f_A", S, fa),
                            cx.one("e_B", T, e),
                            cx.two("alpha_B", T, al),
                        ]));
                    }
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let t = cx.tgt();
        let (fa, e, al) = (w.one(1), w.one(2), w.two(3));
        t.is_equivalence(e)
            && cx.src().tgt(fa) == input.obj(0)
            && t.comp1(cx.fun.f1(fa), e).is_ok_and(|r| invertible_in(t, al, input.one(2), r))
    }
}

impl Condition for B4 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::B4
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let s = cx.src();
        let mut out = Vec::new();
        for (f1, f2) in parallel_pairs(s) {
            for (g1, g2) in distinct_pairs(s, f1, f2) {
                if cx.fun.f2(g1) == cx.fun.f2(g2) {
                    out.push(Tuple(vec![
                        cx.one("f1_A", S, f1),
                        cx.one("f2_A", S, f2),
                        cx.two("gamma1_A", S, g1),
                        cx.two("gamma2_A", S, g2),
                    ]));
                }
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let s = cx.src();
        let z = equalizing_member(s, cx.wa(), input.two(2), input.two(3), n)?;
        Some(Tuple(vec![cx.obj("A'_A", S, s.src(z)), cx.one("z_A", S, z)]))
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let s = cx.src();
        let z = w.one(1);
        cx.wa().contains(z)
            && s.tgt(z) == s.src(input.one(0))
            && cx.fun.f2(input.two(2)) == cx.fun.f2(input.two(3))
            && whiskered_equal(s, input.two(2), input.two(3), z)
    }

    fn explain_failure(&self, _: &CheckContext<'_>, _: &Tuple) -> (Tuple, String) {
        (Tuple::default(), "equal images, but no z_A in W_A equalizes the source 2-cells".into())
    }
}

impl B5 {
    /// `α_B ∗ i_{F₁v} = ψ_{f²,v} ⊙ F₂(α_A) ⊙ ψ_{f¹,v}⁻¹`, as pasting expressions.
    fn holds(cx: &CheckContext<'_>, f1: OneId, f2: OneId, v: OneId, alpha_b: TwoId, alpha_a: TwoId) -> bool {
        let t = cx.tgt();
        let lhs = PastingExpr::wr(PastingExpr::atom(alpha_b), cx.fun.f1(v));
        let rhs = PastingExpr::seq([
            PastingExpr::inv(PastingExpr::atom(cx.fun.psi(f1, v))),
            PastingExpr::atom(cx.fun.f2(alpha_a)),
            PastingExpr::atom(cx.fun.psi(f2, v)),
        ]);
        matches!((eval_pasting(t, &lhs), eval_pasting(t, &rhs)), (Ok(x), Ok(y)) if x == y)
    }
}

impl Condition for B5 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::B5
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let t = cx.tgt();
        let mut out = Vec::new();
        for (f1, f2) in parallel_pairs(cx.src()) {
            for &al in t.frame(cx.fun.f1(f1), cx.fun.f1(f2)) {
                out.push(Tuple(vec![cx.one("f1_A", S, f1), cx.one("f2_A", S, f2), cx.two("alpha_B", T, al)]));
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let s = cx.src();
        let (f1, f2, alpha_b) = (input.one(0), input.one(1), input.two(2));
        for v in members_into(s, cx.wa(), s.src(f1)) {
            let (Ok(l), Ok(r)) = (s.comp1(f1, v), s.comp1(f2, v)) else { continue };
            for &alpha_a in s.frame(l, r) {
                *n += 1;
                if Self::holds(cx, f1, f2, v, alpha_b, alpha_a) {
                    return Some(Tuple(vec![cx.obj("A'_A", S, s.src(v)), cx.one("v_A", S, v), cx.two("alpha_A", S, alpha_a)]));
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let s = cx.src();
        let (f1, f2, v, alpha_a) = (input.one(0), input.one(1), w.one(1), w.two(2));
        let frame_ok = matches!((s.comp1(f1, v), s.comp1(f2, v)), (Ok(l), Ok(r)) if s.src1(alpha_a) == l && s.tgt1(alpha_a) == r);
        cx.wa().contains(v) && frame_ok && Self::holds(cx, f1, f2, v, input.two(2), alpha_a)
    }
}
