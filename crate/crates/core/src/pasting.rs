//! Formal pasting expressions and their evaluation.

use thiserror::Error;

use crate::bicat::{FinBicat, OneId, TwoId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PastingExpr {
    Atom(TwoId),
    IdOn(OneId),
    /// `upper ⊙ lower`: `lower` is applied first.
    VComp(Box<PastingExpr>, Box<PastingExpr>),
    HComp(Box<PastingExpr>, Box<PastingExpr>),
    WhiskL(OneId, Box<PastingExpr>),
    WhiskR(Box<PastingExpr>, OneId),
    Assoc(OneId, OneId, OneId),
    AssocInv(OneId, OneId, OneId),
    RUnit(OneId),
    RUnitInv(OneId),
    LUnit(OneId),
    LUnitInv(OneId),
    Inv(Box<PastingExpr>),
}

/// Source and target 1-cells of an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Boundary {
    pub src: OneId,
    pub tgt: OneId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PastingError {
    #[error("ill-typed subterm `{subterm}`: {reason}")]
    Typing { subterm: String, reason: String },
    #[error("subterm `{subterm}` does not evaluate to an invertible 2-cell")]
    NotInvertible { subterm: String },
}

impl PastingExpr {
    pub fn atom(a: TwoId) -> Self {
        PastingExpr::Atom(a)
    }

    pub fn vcomp(upper: PastingExpr, lower: PastingExpr) -> Self {
        PastingExpr::VComp(Box::new(upper), Box::new(lower))
    }

    pub fn hcomp(left: PastingExpr, right: PastingExpr) -> Self {
        PastingExpr::HComp(Box::new(left), Box::new(right))
    }

    pub fn wl(g: OneId, e: PastingExpr) -> Self {
        PastingExpr::WhiskL(g, Box::new(e))
    }

    pub fn wr(e: PastingExpr, f: OneId) -> Self {
        PastingExpr::WhiskR(Box::new(e), f)
    }

    pub fn inv(e: PastingExpr) -> Self {
        PastingExpr::Inv(Box::new(e))
    }

    /// Vertical composite of `steps` in application order (first element applied first).
    pub fn seq(steps: impl IntoIterator<Item = PastingExpr>) -> Self {
        let mut it = steps.into_iter();
        let first = it.next().expect("seq needs at least one step");
        it.fold(first, |acc, next| PastingExpr::vcomp(next, acc))
    }

    /// Flattens nested vertical composites into application order.
    pub fn factors(&self) -> Vec<&PastingExpr> {
        match self {
            PastingExpr::VComp(upper, lower) => {
                let mut out = lower.factors();
                out.extend(upper.factors());
                out
            }
            other => vec![other],
        }
    }

    pub fn render(&self, b: &FinBicat) -> String {
        use PastingExpr::*;
        let o = |f: &OneId| b.one_name(*f).to_string();
        match self {
            Atom(a) => b.two_name(*a).to_string(),
            IdOn(f) => format!("i_{}", o(f)),
            VComp(u, l) => format!("({} ⊙ {})", u.render(b), l.render(b)),
            HComp(l, r) => format!("({} ∗ {})", l.render(b), r.render(b)),
            WhiskL(g, e) => format!("({} ∗ {})", o(g), e.render(b)),
            WhiskR(e, f) => format!("({} ∗ {})", e.render(b), o(f)),
            Assoc(h, g, f) => format!("θ[{},{},{}]", o(h), o(g), o(f)),
            AssocInv(h, g, f) => format!("θ⁻¹[{},{},{}]", o(h), o(g), o(f)),
            RUnit(f) => format!("π[{}]", o(f)),
            RUnitInv(f) => format!("π⁻¹[{}]", o(f)),
            LUnit(f) => format!("υ[{}]", o(f)),
            LUnitInv(f) => format!("υ⁻¹[{}]", o(f)),
            Inv(e) => format!("{}⁻¹", e.render(b)),
        }
    }
}

fn typing(b: &FinBicat, e: &PastingExpr, reason: impl Into<String>) -> PastingError {
    PastingError::Typing { subterm: e.render(b), reason: reason.into() }
}

fn comp1(b: &FinBicat, e: &PastingExpr, g: OneId, f: OneId) -> Result<OneId, PastingError> {
    b.comp1(g, f).map_err(|err| typing(b, e, err.to_string()))
}

/// Infers the boundary of `e` from the 1-cell tables alone.
pub fn infer_boundary(b: &FinBicat, e: &PastingExpr) -> Result<Boundary, PastingError> {
    use PastingExpr::*;
    let bd = |src, tgt| Ok(Boundary { src, tgt });
    match e {
        Atom(a) => {
            if a.0 >= b.num_two_cells() {
                return Err(typing(b, e, "unknown 2-cell"));
            }
            bd(b.src1(*a), b.tgt1(*a))
        }
        IdOn(f) => bd(*f, *f),
        VComp(upper, lower) => {
            let u = infer_boundary(b, upper)?;
            let l = infer_boundary(b, lower)?;
            if l.tgt != u.src {
                return Err(typing(
                    b,
                    e,
                    format!("lower target {} differs from upper source {}", b.one_name(l.tgt), b.one_name(u.src)),
                ));
            }
            bd(l.src, u.tgt)
        }
        HComp(left, right) => {
            let l = infer_boundary(b, left)?;
            let r = infer_boundary(b, right)?;
            bd(comp1(b, e, l.src, r.src)?, comp1(b, e, l.tgt, r.tgt)?)
        }
        WhiskL(g, inner) => {
            let i = infer_boundary(b, inner)?;
            bd(comp1(b, e, *g, i.src)?, comp1(b, e, *g, i.tgt)?)
        }
        WhiskR(inner, f) => {
            let i = infer_boundary(b, inner)?;
            bd(comp1(b, e, i.src, *f)?, comp1(b, e, i.tgt, *f)?)
        }
        Assoc(h, g, f) | AssocInv(h, g, f) => {
            let gf = comp1(b, e, *g, *f)?;
            let hg = comp1(b, e, *h, *g)?;
            let left = comp1(b, e, *h, gf)?;
            let right = comp1(b, e, hg, *f)?;
            if matches!(e, Assoc(..)) {
                bd(left, right)
            } else {
                bd(right, left)
            }
        }
        RUnit(f) | RUnitInv(f) => {
            let fi = comp1(b, e, *f, b.id1(b.src(*f)))?;
            if matches!(e, RUnit(_)) {
                bd(fi, *f)
            } else {
                bd(*f, fi)
            }
        }
        LUnit(f) | LUnitInv(f) => {
            let if_ = comp1(b, e, b.id1(b.tgt(*f)), *f)?;
            if matches!(e, LUnit(_)) {
                bd(if_, *f)
            } else {
                bd(*f, if_)
            }
        }
        Inv(inner) => {
            let i = infer_boundary(b, inner)?;
            bd(i.tgt, i.src)
        }
    }
}

fn invert(b: &FinBicat, e: &PastingExpr, a: TwoId) -> Result<TwoId, PastingError> {
    b.inverse(a).ok_or_else(|| PastingError::NotInvertible { subterm: e.render(b) })
}

/// Evaluates `e` to a single 2-cell by structural recursion over the tables.
pub fn eval_pasting(b: &FinBicat, e: &PastingExpr) -> Result<TwoId, PastingError> {
    use PastingExpr::*;
    let lift = |r: Result<TwoId, crate::error::BicatError>| r.map_err(|err| typing(b, e, err.to_string()));
    match e {
        Atom(a) => {
            if a.0 >= b.num_two_cells() {
                return Err(typing(b, e, "unknown 2-cell"));
            }
            Ok(*a)
        }
        IdOn(f) => Ok(b.id2(*f)),
        VComp(upper, lower) => {
            let u = eval_pasting(b, upper)?;
            let l = eval_pasting(b, lower)?;
            lift(b.vcomp(u, l))
        }
        HComp(left, right) => {
            let l = eval_pasting(b, left)?;
            let r = eval_pasting(b, right)?;
            lift(b.hcomp2(l, r))
        }
        WhiskL(g, inner) => {
            let i = eval_pasting(b, inner)?;
            lift(b.wl(*g, i))
        }
        WhiskR(inner, f) => {
            let i = eval_pasting(b, inner)?;
            lift(b.wr(i, *f))
        }
        Assoc(h, g, f) | AssocInv(h, g, f) => {
            let bd = infer_boundary(b, e)?;
            if b.fast_path() {
                return Ok(b.id2(bd.src));
            }
            let theta = lift(b.assoc(*h, *g, *f))?;
            if matches!(e, Assoc(..)) {
                Ok(theta)
            } else {
                invert(b, e, theta)
            }
        }
        RUnit(f) | RUnitInv(f) => {
            let bd = infer_boundary(b, e)?;
            if b.fast_path() {
                return Ok(b.id2(bd.src));
            }
            let pi = b.runit(*f);
            if matches!(e, RUnit(_)) {
                Ok(pi)
            } else {
                invert(b, e, pi)
            }
        }
        LUnit(f) | LUnitInv(f) => {
            let bd = infer_boundary(b, e)?;
            if b.fast_path() {
                return Ok(b.id2(bd.src));
            }
            let up = b.lunit(*f);
            if matches!(e, LUnit(_)) {
                Ok(up)
            } else {
                invert(b, e, up)
            }
        }
        Inv(inner) => {
            let i = eval_pasting(b, inner)?;
            invert(b, e, i)
        }
    }
}
