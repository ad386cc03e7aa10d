use super::a::distinct_pairs;
use super::b::equivalence_onto;
use super::Side::{Source as S, Target as T};
use super::*;

pub(super) fn register(r: &mut ConditionRegistry) {
    r.register(Box::new(X1));
    r.register(Box::new(X2a));
    r.register(Box::new(X2b));
    r.register(Box::new(X2c));
}

/// Surjective on objects up to internal equivalence.
struct X1;
/// Essentially surjective on every hom-category.
#[allow(non_camel_case_types)]
struct X2a;
/// Faithful on every hom-category.
#[allow(non_camel_case_types)]
struct X2b;
/// Full on every hom-category.
#[allow(non_camel_case_types)]
struct X2c;

impl Condition for X1 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::X1
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        cx.tgt().objects().map(|y| Tuple(vec![cx.obj("A_D", T, y)])).collect()
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let (x, e) = equivalence_onto(cx, input.obj(0), n)?;
        Some(Tuple(vec![cx.obj("A_C", S, x), cx.one("e_D", T, e)]))
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

impl Condition for X2a {
    fn tag(&self) -> ConditionTag {
        ConditionTag::X2a
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let mut out = Vec::new();
        for a in s.objects() {
            for b in s.objects() {
                for &fd in t.hom(cx.fun.f0(a), cx.fun.f0(b)) {
                    out.push(Tuple(vec![cx.obj("A_C", S, a), cx.obj("B_C", S, b), cx.one("f_D", T, fd)]));
                }
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        for &fc in s.hom(input.obj(0), input.obj(1)) {
            *n += 1;
            if let Some(al) = t.invertible_frame(cx.fun.f1(fc), input.one(2)).next() {
                return Some(Tuple(vec![cx.one("f_C", S, fc), cx.two("alpha_D", T, al)]));
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let (s, t) = (cx.src(), cx.tgt());
        let fc = w.one(0);
        s.src(fc) == input.obj(0) && s.tgt(fc) == input.obj(1) && invertible_in(t, w.two(1), cx.fun.f1(fc), input.one(2))
    }
}

impl Condition for X2b {
    fn tag(&self) -> ConditionTag {
        ConditionTag::X2b
    }

    /// Pairs of distinct parallel 2-cells with equal images.
    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let s = cx.src();
        let mut out = Vec::new();
        for (f1, f2) in parallel_pairs(s) {
            for (a1, a2) in distinct_pairs(s, f1, f2) {
                if cx.fun.f2(a1) == cx.fun.f2(a2) {
                    out.push(Tuple(vec![
                        cx.one("f1_C", S, f1),
                        cx.one("f2_C", S, f2),
                        cx.two("alpha1_C", S, a1),
                        cx.two("alpha2_C", S, a2),
                    ]));
                }
            }
        }
        out
    }

    fn search(&self, _: &CheckContext<'_>, _: &Tuple, _: &mut u64) -> Option<Tuple> {
        None
    }

    fn verify(&self, _: &CheckContext<'_>, _: &Tuple, _: &Tuple) -> bool {
        false
    }

    fn explain_failure(&self, _: &CheckContext<'_>, _: &Tuple) -> (Tuple, String) {
        (Tuple::default(), "distinct 2-cells with equal images".into())
    }
}

impl Condition for X2c {
    fn tag(&self) -> ConditionTag {
        ConditionTag::X2c
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let t = cx.tgt();
        let mut out = Vec::new();
        for (f1, f2) in parallel_pairs(cx.src()) {
            for &ad in t.frame(cx.fun.f1(f1), cx.fun.f1(f2)) {
                out.push(Tuple(vec![cx.one("f1_C", S, f1), cx.one("f2_C", S, f2), cx.two("alpha_D", T, ad)]));
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        cx.src().frame(input.one(0), input.one(1)).iter().copied().find(|&a| {
            *n += 1;
            cx.fun.f2(a) == input.two(2)
        })
        .map(|a| Tuple(vec![cx.two("alpha_C", S, a)]))
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let a = w.two(0);
        let s = cx.src();
        s.src1(a) == input.one(0) && s.tgt1(a) == input.one(1) && cx.fun.f2(a) == input.two(2)
    }
}
