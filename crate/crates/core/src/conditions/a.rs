use std::collections::HashMap;

use super::Side::{Source as S, Target as T};
use super::*;
use crate::pasting::{eval_pasting, PastingExpr};

pub(super) fn register(r: &mut ConditionRegistry) {
    r.register(Box::new(A1));
    r.register(Box::new(A2));
    r.register(Box::new(A3));
    r.register(Box::new(A4));
    r.register(Box::new(A5));
}

/// Every target object is reached by a span `F₀A ← A′ → A_B` with legs in `W_B` and `W_{B,sat}`.
struct A1;
/// Spans between images lift, up to invertible 2-cells, to spans in the source.
struct A2;
/// Every `f_B` into an image is, up to a `W_B`-span, the image of a source 1-cell.
struct A3;
/// 2-cells identified after whiskering by some `z_B ∈ W_B` are identified after whiskering by some `z_A ∈ W_A`.
struct A4;
/// Every `α_B` over `v_B ∈ W_B` comes from some `α_A` through the comparison composite.
struct A5;

impl Condition for A1 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::A1
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        cx.tgt().objects().map(|y| Tuple(vec![cx.obj("A_B", T, y)])).collect()
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let (t, y) = (cx.tgt(), input.obj(0));
        let (wb, wbs) = (cx.wb(), cx.wb().saturated());
        for x in cx.src().objects() {
            for a in t.objects() {
                for w1 in members_between(t, wb, a, cx.fun.f0(x)) {
                    for w2 in members_between(t, wbs, a, y) {
                        *n += 1;
                        return Some(Tuple(vec![
                            cx.obj("A_A", S, x),
                            cx.obj("A'_B", T, a),
                            cx.one("w1_B", T, w1),
                            cx.one("w2_B", T, w2),
                        ]));
                    }
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let t = cx.tgt();
        let (w1, w2) = (w.one(2), w.one(3));
        cx.wb().contains(w1)
            && cx.wb().saturated().contains(w2)
            && t.src(w1) == w.obj(1)
            && t.src(w2) == w.obj(1)
            && t.tgt(w1) == cx.fun.f0(w.obj(0))
            && t.tgt(w2) == input.obj(0)
    }
}

type A2Inner = Option<(ObjId, OneId, OneId, TwoId, TwoId)>;

impl A2 {
    /// `(A′, z¹, z², γ¹, γ²)` with `γⁱ: wⁱ_B∘z¹ ⇒ u_i∘z²` invertible, `z¹ ∈ W_B`.
    fn fraction_side(cx: &CheckContext<'_>, y: ObjId, w1: OneId, w2: OneId, u1: OneId, u2: OneId, n: &mut u64) -> A2Inner {
        let t = cx.tgt();
        let a3 = t.src(u1);
        for a in t.objects() {
            for z1 in members_between(t, cx.wb(), a, y) {
                for &z2 in t.hom(a, a3) {
                    *n += 1;
                    let (Ok(l1), Ok(r1), Ok(l2), Ok(r2)) = (t.comp1(w1, z1), t.comp1(u1, z2), t.comp1(w2, z1), t.comp1(u2, z2)) else {
                        continue;
                    };
                    if let (Some(g1), Some(g2)) = (t.invertible_frame(l1, r1).next(), t.invertible_frame(l2, r2).next()) {
                        return Some((a, z1, z2, g1, g2));
                    }
                }
            }
        }
        None
    }
}

impl Condition for A2 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::A2
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let mut out = Vec::new();
        for a1 in s.objects() {
            for a2 in s.objects() {
                for y in t.objects() {
                    for w1 in members_between(t, cx.wb(), y, cx.fun.f0(a1)) {
                        for w2 in members_between(t, cx.wb().saturated(), y, cx.fun.f0(a2)) {
                            out.push(Tuple(vec![
                                cx.obj("A1_A", S, a1),
                                cx.obj("A2_A", S, a2),
                                cx.obj("A_B", T, y),
                                cx.one("w1_B", T, w1),
                                cx.one("w2_B", T, w2),
                            ]));
                        }
                    }
                }
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let s = cx.src();
        let (a1, a2, y, w1, w2) = (input.obj(0), input.obj(1), input.obj(2), input.one(3), input.one(4));
        let mut memo: HashMap<(OneId, OneId), A2Inner> = HashMap::new();
        for a3 in s.objects() {
            for w1a in members_between(s, cx.wa(), a3, a1) {
                for w2a in members_between(s, cx.wa().saturated(), a3, a2) {
                    let key = (cx.fun.f1(w1a), cx.fun.f1(w2a));
                    let found = *memo
                        .entry(key)
                        .or_insert_with(|| Self::fraction_side(cx, y, w1, w2, key.0, key.1, n));
                    if let Some((a, z1, z2, g1, g2)) = found {
                        return Some(Tuple(vec![
                            cx.obj("A3_A", S, a3),
                            cx.one("w1_A", S, w1a),
                            cx.one("w2_A", S, w2a),
                            cx.obj("A'_B", T, a),
                            cx.one("z1_B", T, z1),
                            cx.one("z2_B", T, z2),
                            cx.two("gamma1_B", T, g1),
                            cx.two("gamma2_B", T, g2),
                        ]));
                    }
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let (s, t) = (cx.src(), cx.tgt());
        let (w1, w2) = (input.one(3), input.one(4));
        let (a3, w1a, w2a, z1, z2, g1, g2) = (w.obj(0), w.one(1), w.one(2), w.one(4), w.one(5), w.two(6), w.two(7));
        let ok_a = cx.wa().contains(w1a)
            && cx.wa().saturated().contains(w2a)
            && s.src(w1a) == a3
            && s.src(w2a) == a3
            && s.tgt(w1a) == input.obj(0)
            && s.tgt(w2a) == input.obj(1);
        let ok_b = cx.wb().contains(z1) && t.tgt(z1) == input.obj(2) && t.src(z1) == w.obj(3);
        let frames = || -> Result<bool, crate::error::BicatError> {
            Ok(invertible_in(t, g1, t.comp1(w1, z1)?, t.comp1(cx.fun.f1(w1a), z2)?)
                && invertible_in(t, g2, t.comp1(w2, z1)?, t.comp1(cx.fun.f1(w2a), z2)?))
        };
        ok_a && ok_b && frames().unwrap_or(false)
    }
}

impl Condition for A3 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::A3
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
                for a in t.objects() {
                    for v1 in members_between(t, cx.wb(), a, y) {
                        for v2 in members_between(t, cx.wb().saturated(), a, cx.fun.f0(x)) {
                            *n += 1;
                            let (Ok(l), Ok(r)) = (t.comp1(fb, v1), t.comp1(cx.fun.f1(fa), v2)) else { continue };
                            if let Some(al) = t.invertible_frame(l, r).next() {
                                return Some(Tuple(vec![
                                    cx.obj("A_A", S, x),
                                    cx.one("f_A", S, fa),
                                    cx.obj("A'_B", T, a),
                                    cx.one("v1_B", T, v1),
                                    cx.one("v2_B", T, v2),
                                    cx.two("alpha_B", T, al),
                                ]));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let (s, t) = (cx.src(), cx.tgt());
        let (fa, v1, v2, al) = (w.one(1), w.one(3), w.one(4), w.two(5));
        let frame = || -> Result<bool, crate::error::BicatError> {
            Ok(invertible_in(t, al, t.comp1(input.one(2), v1)?, t.comp1(cx.fun.f1(fa), v2)?))
        };
        s.tgt(fa) == input.obj(0)
            && s.src(fa) == w.obj(0)
            && cx.wb().contains(v1)
            && cx.wb().saturated().contains(v2)
            && frame().unwrap_or(false)
    }
}

/// Whether `γ¹ ∗ i_z = γ² ∗ i_z`, evaluated as pasting expressions.
pub(super) fn whiskered_equal(b: &FinBicat, g1: TwoId, g2: TwoId, z: OneId) -> bool {
    let e = |g| eval_pasting(b, &PastingExpr::wr(PastingExpr::atom(g), z));
    matches!((e(g1), e(g2)), (Ok(x), Ok(y)) if x == y)
}

/// Pairs of distinct parallel 2-cells `(γ¹, γ²)` with `γ¹` after `γ²` in canonical order.
pub(super) fn distinct_pairs(b: &FinBicat, f1: OneId, f2: OneId) -> Vec<(TwoId, TwoId)> {
    let fr = b.frame(f1, f2);
    let mut out = Vec::new();
    for &g1 in fr {
        for &g2 in fr.iter().filter(|&&g2| g2 < g1) {
            out.push((g1, g2));
        }
    }
    out
}

/// First `z ∈ W` into `src(γ)` with `γ¹ ∗ i_z = γ² ∗ i_z`.
pub(super) fn equalizing_member(b: &FinBicat, w: &WClass, g1: TwoId, g2: TwoId, n: &mut u64) -> Option<OneId> {
    members_into(b, w, b.src(b.src1(g1))).into_iter().find(|&z| {
        *n += 1;
        matches!((b.wr(g1, z), b.wr(g2, z)), (Ok(x), Ok(y)) if x == y)
    })
}

impl Condition for A4 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::A4
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let mut out = Vec::new();
        for (f1, f2) in parallel_pairs(s) {
            for (g1, g2) in distinct_pairs(s, f1, f2) {
                let (h1, h2) = (cx.fun.f2(g1), cx.fun.f2(g2));
                for z in members_into(t, cx.wb(), cx.fun.f0(s.src(f1))) {
                    if matches!((t.wr(h1, z), t.wr(h2, z)), (Ok(x), Ok(y)) if x == y) {
                        out.push(Tuple(vec![
                            cx.one("f1_A", S, f1),
                            cx.one("f2_A", S, f2),
                            cx.two("gamma1_A", S, g1),
                            cx.two("gamma2_A", S, g2),
                            cx.one("z_B", T, z),
                        ]));
                    }
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
            && whiskered_equal(s, input.two(2), input.two(3), z)
            && whiskered_equal(cx.tgt(), cx.fun.f2(input.two(2)), cx.fun.f2(input.two(3)), input.one(4))
    }

    fn explain_failure(&self, _: &CheckContext<'_>, _: &Tuple) -> (Tuple, String) {
        (Tuple::default(), "whiskering by z_B equalizes the images, but no z_A in W_A equalizes the source 2-cells".into())
    }
}

impl A5 {
    fn data(input: &Tuple, w: &Tuple) -> A5Data {
        A5Data {
            f1: input.one(0),
            f2: input.one(1),
            v_a: w.one(1),
            v_b: input.one(3),
            z_b: w.one(4),
            z_prime: w.one(5),
            sigma_b: w.two(6),
            alpha_a: w.two(2),
        }
    }

    fn holds(cx: &CheckContext<'_>, alpha_b: TwoId, d: &A5Data) -> bool {
        let t = cx.tgt();
        let Ok(lhs) = eval_pasting(t, &PastingExpr::wr(PastingExpr::atom(alpha_b), d.z_prime)) else { return false };
        let Ok(e) = build_a5_composite(cx.fun, d) else { return false };
        eval_pasting(t, &e).is_ok_and(|rhs| rhs == lhs)
    }
}

impl Condition for A5 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::A5
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let mut out = Vec::new();
        for (f1, f2) in parallel_pairs(s) {
            let a = cx.fun.f0(s.src(f1));
            for y in t.objects() {
                for vb in members_between(t, cx.wb(), y, a) {
                    let (Ok(l), Ok(r)) = (t.comp1(cx.fun.f1(f1), vb), t.comp1(cx.fun.f1(f2), vb)) else { continue };
                    for &al in t.frame(l, r) {
                        out.push(Tuple(vec![
                            cx.one("f1_A", S, f1),
                            cx.one("f2_A", S, f2),
                            cx.obj("A_B", T, y),
                            cx.one("v_B", T, vb),
                            cx.two("alpha_B", T, al),
                        ]));
                    }
                }
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let (f1, f2, y, vb, alpha_b) = (input.one(0), input.one(1), input.obj(2), input.one(3), input.two(4));
        for va in members_into(s, cx.wa(), s.src(f1)) {
            let (Ok(l), Ok(r)) = (s.comp1(f1, va), s.comp1(f2, va)) else { continue };
            let a_prime = s.src(va);
            for &alpha_a in s.frame(l, r) {
                for ab in t.objects() {
                    for zb in members_between(t, cx.wb(), ab, cx.fun.f0(a_prime)) {
                        for &zp in t.hom(ab, y) {
                            let (Ok(sl), Ok(sr)) = (t.comp1(cx.fun.f1(va), zb), t.comp1(vb, zp)) else { continue };
                            for sigma in t.invertible_frame(sl, sr) {
                                *n += 1;
                                let d = A5Data { f1, f2, v_a: va, v_b: vb, z_b: zb, z_prime: zp, sigma_b: sigma, alpha_a };
                                if Self::holds(cx, alpha_b, &d) {
                                    return Some(Tuple(vec![
                                        cx.obj("A'_A", S, a_prime),
                                        cx.one("v_A", S, va),
                                        cx.two("alpha_A", S, alpha_a),
                                        cx.obj("A'_B", T, ab),
                                        cx.one("z_B", T, zb),
                                        cx.one("z'_B", T, zp),
                                        cx.two("sigma_B", T, sigma),
                                    ]));
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let d = Self::data(input, w);
        let t = cx.tgt();
        let sigma_ok = match (t.comp1(cx.fun.f1(d.v_a), d.z_b), t.comp1(d.v_b, d.z_prime)) {
            (Ok(l), Ok(r)) => invertible_in(t, d.sigma_b, l, r),
            _ => false,
        };
        cx.wa().contains(d.v_a) && cx.wb().contains(d.z_b) && sigma_ok && Self::holds(cx, input.two(4), &d)
    }
}
