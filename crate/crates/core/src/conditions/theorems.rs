use serde::Serialize;

use super::*;
use crate::gtilde::induce_g_tilde;
use crate::wclass::quasi_units;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubCheck {
    /// `G̃` is a weak equivalence iff `A1 ∧ … ∧ A5`.
    GTildeBiconditional,
    /// With `W_B` the quasi-units, `Ai ⇔ Bi` for each `i`.
    QuasiUnitCorrespondence,
    /// `EF1 ∧ EF2 ∧ EF3 ⇒ B1 ∧ … ∧ B5`.
    EfImpliesB,
    /// Under `EF2 ∧ EF3`, every `f` with `F₁f` an equivalence has `g` with `f∘g ∈ W_A`, `F₁g` an equivalence.
    EquivalenceLifting,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum SubCheckStatus {
    Agree(String),
    Disagree(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub check: SubCheck,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub checks: Vec<(SubCheck, SubCheckStatus)>,
    pub findings: Vec<Finding>,
    /// Condition verdicts gathered along the way, in tag order.
    pub verdicts: Vec<(ConditionTag, bool)>,
    /// Verdict of `is_weak_equivalence(G̃)` when `G̃` could be built.
    pub g_tilde_weak_equivalence: Option<bool>,
}

impl TheoremReport {
    pub fn status(&self, c: SubCheck) -> Option<&SubCheckStatus> {
        self.checks.iter().find(|(k, _)| *k == c).map(|(_, s)| s)
    }

    pub fn verdict(&self, tag: ConditionTag) -> Option<bool> {
        self.verdicts.iter().find(|(t, _)| *t == tag).map(|(_, v)| *v)
    }

    fn record(&mut self, c: SubCheck, s: SubCheckStatus) {
        if let SubCheckStatus::Disagree(d) = &s {
            self.findings.push(Finding { check: c, detail: d.clone() });
        }
        self.checks.push((c, s));
    }
}

fn family_verdicts(family: Family, cx: &CheckContext<'_>) -> Result<Vec<(ConditionTag, bool)>, ConditionError> {
    precondition(family, cx)?;
    let reg = ConditionRegistry::standard();
    Ok(reg.family(family).map(|c| (c.tag(), decide(c, cx).verdict)).collect())
}

fn render(vs: &[(ConditionTag, bool)]) -> String {
    vs.iter().map(|(t, v)| format!("{t}={}", if *v { "T" } else { "F" })).collect::<Vec<_>>().join(" ")
}

/// Evaluates both sides of each equivalence criterion and records disagreements as findings.
pub fn cross_validate_theorems(fun: &PsFun, w_a: &WClass, w_b: &WClass) -> TheoremReport {
    let mut rep = TheoremReport { checks: Vec::new(), findings: Vec::new(), verdicts: Vec::new(), g_tilde_weak_equivalence: None };
    let cx_a = CheckContext::new(fun, Some(w_a), Some(w_b));
    let cx_b = CheckContext::new(fun, Some(w_a), None);

    let a = family_verdicts(Family::A, &cx_a);
    let b = family_verdicts(Family::B, &cx_b);
    let ef = family_verdicts(Family::EF, &cx_b);
    for vs in [&a, &b, &ef].into_iter().flatten() {
        rep.verdicts.extend(vs.iter().copied());
    }

    match &a {
        Err(e) => rep.record(SubCheck::GTildeBiconditional, SubCheckStatus::Skipped(e.to_string())),
        Ok(av) => {
            let all_a = av.iter().all(|v| v.1);
            match induce_g_tilde(fun, w_a, w_b) {
                Ok(g) => {
                    let we = is_weak_equivalence(&g.psfun);
                    rep.g_tilde_weak_equivalence = Some(we.verdict);
                    let failing: Vec<String> =
                        we.reports.iter().filter(|r| !r.verdict).map(|r| r.tag.to_string()).collect();
                    let detail = format!(
                        "weak equivalence = {} (failing: [{}]); {}",
                        we.verdict,
                        failing.join(", "),
                        render(av)
                    );
                    rep.record(
                        SubCheck::GTildeBiconditional,
                        if we.verdict == all_a { SubCheckStatus::Agree(detail) } else { SubCheckStatus::Disagree(detail) },
                    );
                }
                Err(e) => rep.record(
                    SubCheck::GTildeBiconditional,
                    SubCheckStatus::Disagree(format!("preconditions hold but the induced pseudofunctor could not be built: {e}")),
                ),
            }
        }
    }

    let is_min = w_b.same_members(&quasi_units(fun.target()));
    match (&a, &b) {
        _ if !is_min => rep.record(
            SubCheck::QuasiUnitCorrespondence,
            SubCheckStatus::Skipped(format!("{} is not the class of quasi-units", w_b.name())),
        ),
        (Err(e), _) | (_, Err(e)) => rep.record(SubCheck::QuasiUnitCorrespondence, SubCheckStatus::Skipped(e.to_string())),
        (Ok(av), Ok(bv)) => {
            let diff: Vec<String> = av
                .iter()
                .zip(bv)
                .filter(|(x, y)| x.1 != y.1)
                .map(|(x, y)| format!("{}={} but {}={}", x.0, x.1, y.0, y.1))
                .collect();
            let detail = format!("{}; {}", render(av), render(bv));
            rep.record(
                SubCheck::QuasiUnitCorrespondence,
                if diff.is_empty() { SubCheckStatus::Agree(detail) } else { SubCheckStatus::Disagree(diff.join("; ")) },
            );
        }
    }

    match (&ef, &b) {
        (Err(e), _) | (_, Err(e)) => rep.record(SubCheck::EfImpliesB, SubCheckStatus::Skipped(e.to_string())),
        (Ok(ev), Ok(bv)) => {
            let all_ef = ev.iter().all(|v| v.1);
            let all_b = bv.iter().all(|v| v.1);
            let detail = format!("{}; {}", render(ev), render(bv));
            rep.record(
                SubCheck::EfImpliesB,
                if !all_ef || all_b { SubCheckStatus::Agree(detail) } else { SubCheckStatus::Disagree(detail) },
            );
        }
    }

    let lifting_applies = b.is_ok()
        && ef.as_ref().is_ok_and(|ev| ev.iter().filter(|v| v.0 != ConditionTag::EF1).all(|v| v.1));
    if lifting_applies {
        rep.record(SubCheck::EquivalenceLifting, equivalence_lifting(fun, w_a));
    } else {
        rep.record(
            SubCheck::EquivalenceLifting,
            SubCheckStatus::Skipped("hypotheses (EF2, EF3, W_A sent to equivalences) not all satisfied".into()),
        );
    }
    rep
}

fn equivalence_lifting(fun: &PsFun, w_a: &WClass) -> SubCheckStatus {
    let (s, t) = (fun.source().as_ref(), fun.target().as_ref());
    let mut checked = 0;
    for f in s.one_cells().filter(|&f| t.is_equivalence(fun.f1(f))) {
        checked += 1;
        let lifted = s.one_cells().filter(|&g| s.tgt(g) == s.src(f)).any(|g| {
            s.comp1(f, g).is_ok_and(|fg| w_a.contains(fg)) && t.is_equivalence(fun.f1(g))
        });
        if !lifted {
            return SubCheckStatus::Disagree(format!("no g for f = {}", s.one_name(f)));
        }
    }
    SubCheckStatus::Agree(format!("{checked} 1-cells with equivalence images all lift"))
}
