use crate::bicat::{OneId, TwoId};
use crate::pasting::{infer_boundary, PastingError, PastingExpr};
use crate::psfun::PsFun;

/// Data of the A5 comparison. `sigma_b: F₁(v_A)∘z_B ⇒ v_B∘z′_B` is invertible and
/// `alpha_a: f¹∘v_A ⇒ f²∘v_A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct A5Data {
    pub f1: OneId,
    pub f2: OneId,
    pub v_a: OneId,
    pub v_b: OneId,
    pub z_b: OneId,
    pub z_prime: OneId,
    pub sigma_b: TwoId,
    pub alpha_a: TwoId,
}

/// The composite `(F₁f¹∘v_B)∘z′_B ⇒ (F₁f²∘v_B)∘z′_B` that `α_B ∗ i_{z′_B}` is compared with.
/// Factors in application order: θ⁻¹, σ⁻¹, θ, the ψ-conjugate of `F₂(α_A)`, θ⁻¹, σ, θ.
pub fn build_a5_composite(fun: &PsFun, d: &A5Data) -> Result<PastingExpr, PastingError> {
    use PastingExpr::*;
    let t = fun.target().as_ref();
    let (ff1, ff2, fv) = (fun.f1(d.f1), fun.f1(d.f2), fun.f1(d.v_a));
    let conj = PastingExpr::seq([
        PastingExpr::inv(Atom(fun.psi(d.f1, d.v_a))),
        Atom(fun.f2(d.alpha_a)),
        Atom(fun.psi(d.f2, d.v_a)),
    ]);
    let e = PastingExpr::seq([
        AssocInv(ff1, d.v_b, d.z_prime),
        PastingExpr::wl(ff1, PastingExpr::inv(Atom(d.sigma_b))),
        Assoc(ff1, fv, d.z_b),
        PastingExpr::wr(conj, d.z_b),
        AssocInv(ff2, fv, d.z_b),
        PastingExpr::wl(ff2, Atom(d.sigma_b)),
        Assoc(ff2, d.v_b, d.z_prime),
    ]);
    infer_boundary(t, &e)?;
    Ok(e)
}
