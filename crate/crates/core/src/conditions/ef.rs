use super::Side::{Source as S, Target as T};
use super::*;

pub(super) fn register(r: &mut ConditionRegistry) {
    r.register(Box::new(EF1));
    r.register(Box::new(EF2));
    r.register(Box::new(EF3));
}

/// Essential surjectivity up to isomorphism.
struct EF1;
/// Every `f_B` between images is, up to `W_A`, an image.
struct EF2;
/// Unique preimages of 2-cells between images.
struct EF3;

/// Whether `t` has a strict two-sided inverse `s` (`s∘t = id`, `t∘s = id`).
pub(crate) fn is_isomorphism(b: &FinBicat, t: OneId) -> bool {
    b.hom(b.tgt(t), b.src(t)).iter().any(|&s| {
        b.comp1(s, t).is_ok_and(|x| x == b.id1(b.src(t))) && b.comp1(t, s).is_ok_and(|x| x == b.id1(b.tgt(t)))
    })
}

impl Condition for EF1 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::EF1
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        cx.tgt().objects().map(|y| Tuple(vec![cx.obj("A_B", T, y)])).collect()
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let t = cx.tgt();
        for x in cx.src().objects() {
            for &iso in t.hom(cx.fun.f0(x), input.obj(0)) {
                *n += 1;
                if is_isomorphism(t, iso) {
                    return Some(Tuple(vec![cx.obj("A_A", S, x), cx.one("t_B", T, iso)]));
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let t = cx.tgt();
        let iso = w.one(1);
        t.src(iso) == cx.fun.f0(w.obj(0)) && t.tgt(iso) == input.obj(0) && is_isomorphism(t, iso)
    }

    fn explain_failure(&self, _: &CheckContext<'_>, input: &Tuple) -> (Tuple, String) {
        (Tuple::default(), format!("no isomorphism from an image object to {}", input.0[0].name))
    }
}

impl Condition for EF2 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::EF2
    }

    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let mut out = Vec::new();
        for a in s.objects() {
            for b in s.objects() {
                for &fb in t.hom(cx.fun.f0(a), cx.fun.f0(b)) {
                    out.push(Tuple(vec![cx.obj("A_A", S, a), cx.obj("B_A", S, b), cx.one("f_B", T, fb)]));
                }
            }
        }
        out
    }

    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, n: &mut u64) -> Option<Tuple> {
        let (s, t) = (cx.src(), cx.tgt());
        let (a, b, fb) = (input.obj(0), input.obj(1), input.one(2));
        for ap in s.objects() {
            for &fa in s.hom(ap, b) {
                for wa in members_between(s, cx.wa(), ap, a) {
                    *n += 1;
                    let Ok(r) = t.comp1(fb, cx.fun.f1(wa)) else { continue };
                    if let Some(al) = t.invertible_frame(cx.fun.f1(fa), r).next() {
                        return Some(Tuple(vec![
                            cx.obj("A'_A", S, ap),
                            cx.one("f_A", S, fa),
                            cx.one("w_A", S, wa),
                            cx.two("alpha_B", T, al),
                        ]));
                    }
                }
            }
        }
        None
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        let (s, t) = (cx.src(), cx.tgt());
        let (fa, wa, al) = (w.one(1), w.one(2), w.two(3));
        cx.wa().contains(wa)
            && s.tgt(fa) == input.obj(1)
            && s.tgt(wa) == input.obj(0)
            && t.comp1(input.one(2), cx.fun.f1(wa)).is_ok_and(|r| invertible_in(t, al, cx.fun.f1(fa), r))
    }
}

impl EF3 {
    fn preimages(cx: &CheckContext<'_>, f1: OneId, f2: OneId, alpha_b: TwoId, n: &mut u64) -> Vec<TwoId> {
        cx.src()
            .frame(f1, f2)
            .iter()
            .copied()
            .filter(|&a| {
                *n += 1;
                cx.fun.f2(a) == alpha_b
            })
            .collect()
    }
}

impl Condition for EF3 {
    fn tag(&self) -> ConditionTag {
        ConditionTag::EF3
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
        match Self::preimages(cx, input.one(0), input.one(1), input.two(2), n)[..] {
            [a] => Some(Tuple(vec![cx.two("alpha_A", S, a)])),
            _ => None,
        }
    }

    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, w: &Tuple) -> bool {
        Self::preimages(cx, input.one(0), input.one(1), input.two(2), &mut 0) == [w.two(0)]
    }

    /// Lists the preimages latest first, so a failed uniqueness shows the non-identity cell first.
    fn explain_failure(&self, cx: &CheckContext<'_>, input: &Tuple) -> (Tuple, String) {
        let mut pre = Self::preimages(cx, input.one(0), input.one(1), input.two(2), &mut 0);
        pre.reverse();
        if pre.is_empty() {
            return (Tuple::default(), "no preimage".into());
        }
        let labels = ["alpha1_A", "alpha2_A"];
        let extra = Tuple(pre.iter().take(2).zip(labels).map(|(&a, l)| cx.two(l, S, a)).collect());
        (extra, format!("{} distinct preimages: uniqueness fails", pre.len()))
    }
}
