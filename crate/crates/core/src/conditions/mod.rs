//! Decision procedures for the equivalence criteria.
//!
//! Every condition has the shape "for every input tuple there is a witness
//! tuple". A [`Condition`] enumerates the universally quantified inputs in
//! canonical order and searches the existential side exhaustively; the driver
//! evaluates inputs in parallel and reduces deterministically, so the first
//! failing input in canonical order is the reported counterexample.

mod a;
mod b;
mod composite;
mod ef;
mod theorems;
mod x;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bicat::{FinBicat, ObjId, OneId, TwoId};
use crate::psfun::{maps_into, maps_to_equivalences, PsFun};
use crate::wclass::WClass;

pub use composite::{build_a5_composite, A5Data};
pub use theorems::{cross_validate_theorems, Finding, SubCheck, SubCheckStatus, TheoremReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConditionTag {
    A1,
    A2,
    A3,
    A4,
    A5,
    B1,
    B2,
    B3,
    B4,
    B5,
    EF1,
    EF2,
    EF3,
    X1,
    X2a,
    X2b,
    X2c,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    EF,
    X,
}

impl ConditionTag {
    pub const ALL: [ConditionTag; 17] = {
        use ConditionTag::*;
        [A1, A2, A3, A4, A5, B1, B2, B3, B4, B5, EF1, EF2, EF3, X1, X2a, X2b, X2c]
    };

    pub fn family(self) -> Family {
        use ConditionTag::*;
        match self {
            A1 | A2 | A3 | A4 | A5 => Family::A,
            B1 | B2 | B3 | B4 | B5 => Family::B,
            EF1 | EF2 | EF3 => Family::EF,
            X1 | X2a | X2b | X2c => Family::X,
        }
    }

    /// `family(i)` for 1-based `i`, e.g. `numbered(Family::A, 4) = A4`.
    pub fn numbered(family: Family, i: usize) -> Option<ConditionTag> {
        ConditionTag::ALL.iter().copied().filter(|t| t.family() == family).nth(i.checked_sub(1)?)
    }
}

impl fmt::Display for ConditionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ConditionTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        ConditionTag::ALL
            .iter()
            .copied()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown condition `{s}`"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "EF" => Ok(Family::EF),
            "X" => Ok(Family::X),
            _ => Err(format!("unknown condition family `{s}`")),
        }
    }
}

/// Which bicategory a cell lives in: the pseudofunctor's source or target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Source,
    Target,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "dim", content = "index", rename_all = "lowercase")]
pub enum Cell {
    Obj(ObjId),
    One(OneId),
    Two(TwoId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellRef {
    pub label: &'static str,
    pub side: Side,
    pub cell: Cell,
    pub name: String,
}

/// An ordered tuple of labelled cells.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Tuple(pub Vec<CellRef>);

impl Tuple {
    pub fn obj(&self, i: usize) -> ObjId {
        match self.0[i].cell {
            Cell::Obj(x) => x,
            c => panic!("tuple slot {i} holds {c:?}, expected an object"),
        }
    }
    pub fn one(&self, i: usize) -> OneId {
        match self.0[i].cell {
            Cell::One(x) => x,
            c => panic!("tuple slot {i} holds {c:?}, expected a 1-cell"),
        }
    }
    pub fn two(&self, i: usize) -> TwoId {
        match self.0[i].cell {
            Cell::Two(x) => x,
            c => panic!("tuple slot {i} holds {c:?}, expected a 2-cell"),
        }
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| format!("{} = {}", c.label, c.name)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Inputs and classes a condition is evaluated against.
#[derive(Debug, Clone, Copy)]
pub struct CheckContext<'a> {
    pub fun: &'a PsFun,
    pub w_a: Option<&'a WClass>,
    pub w_b: Option<&'a WClass>,
}

impl<'a> CheckContext<'a> {
    pub fn new(fun: &'a PsFun, w_a: Option<&'a WClass>, w_b: Option<&'a WClass>) -> Self {
        CheckContext { fun, w_a, w_b }
    }

    pub fn src(&self) -> &'a FinBicat {
        self.fun.source().as_ref()
    }
    pub fn tgt(&self) -> &'a FinBicat {
        self.fun.target().as_ref()
    }
    fn bicat(&self, side: Side) -> &'a FinBicat {
        match side {
            Side::Source => self.src(),
            Side::Target => self.tgt(),
        }
    }
    pub fn wa(&self) -> &'a WClass {
        self.w_a.expect("source class checked by the precondition")
    }
    pub fn wb(&self) -> &'a WClass {
        self.w_b.expect("target class checked by the precondition")
    }

    pub fn obj(&self, label: &'static str, side: Side, x: ObjId) -> CellRef {
        CellRef { label, side, cell: Cell::Obj(x), name: self.bicat(side).obj_name(x).to_string() }
    }
    pub fn one(&self, label: &'static str, side: Side, f: OneId) -> CellRef {
        CellRef { label, side, cell: Cell::One(f), name: self.bicat(side).one_name(f).to_string() }
    }
    pub fn two(&self, label: &'static str, side: Side, a: TwoId) -> CellRef {
        CellRef { label, side, cell: Cell::Two(a), name: self.bicat(side).two_name(a).to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("precondition for {family} conditions violated: {detail}")]
    Precondition { family: Family, detail: String },
}

/// A decision procedure for one condition.
pub trait Condition: Send + Sync {
    fn tag(&self) -> ConditionTag;

    /// Universally quantified inputs, in canonical order.
    fn inputs(&self, cx: &CheckContext<'_>) -> Vec<Tuple>;

    /// First witness for `input` in canonical order, counting examined candidates.
    fn search(&self, cx: &CheckContext<'_>, input: &Tuple, examined: &mut u64) -> Option<Tuple>;

    /// Independent re-check of a witness.
    fn verify(&self, cx: &CheckContext<'_>, input: &Tuple, witness: &Tuple) -> bool;

    /// Extra cells and a sentence describing why `input` has no witness.
    fn explain_failure(&self, _cx: &CheckContext<'_>, _input: &Tuple) -> (Tuple, String) {
        (Tuple::default(), "existential search space exhausted".into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub input: Tuple,
    pub witness: Tuple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: Tuple,
    pub extra: Tuple,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub inputs: usize,
    pub candidates: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub tag: ConditionTag,
    pub verdict: bool,
    /// One witness per input, in input order (only when the verdict holds).
    pub witnesses: Vec<Instance>,
    pub counterexample: Option<Counterexample>,
    pub stats: SearchStats,
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.verdict { "pass" } else { "FAIL" };
        write!(f, "{}: {verdict} [{} inputs, {} candidates]", self.tag, self.stats.inputs, self.stats.candidates)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n    counterexample {}", c.input)?;
            if !c.extra.is_empty() {
                write!(f, " with {}", c.extra)?;
            }
            write!(f, ": {}", c.detail)?;
        }
        Ok(())
    }
}

/// Registered condition checkers, keyed by tag.
pub struct ConditionRegistry {
    checkers: Vec<Box<dyn Condition>>,
}

impl ConditionRegistry {
    pub fn empty() -> Self {
        ConditionRegistry { checkers: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut r = Self::empty();
        a::register(&mut r);
        b::register(&mut r);
        ef::register(&mut r);
        x::register(&mut r);
        r
    }

    /// Adds a checker, replacing any existing one with the same tag.
    pub fn register(&mut self, c: Box<dyn Condition>) {
        self.checkers.retain(|k| k.tag() != c.tag());
        self.checkers.push(c);
        self.checkers.sort_by_key(|k| k.tag());
    }

    pub fn get(&self, tag: ConditionTag) -> Option<&dyn Condition> {
        self.checkers.iter().find(|c| c.tag() == tag).map(|c| c.as_ref())
    }

    pub fn family(&self, family: Family) -> impl Iterator<Item = &dyn Condition> {
        self.checkers.iter().filter(move |c| c.tag().family() == family).map(|c| c.as_ref())
    }

    pub fn tags(&self) -> impl Iterator<Item = ConditionTag> + '_ {
        self.checkers.iter().map(|c| c.tag())
    }
}

/// Checks the standing hypotheses of a condition family.
pub fn precondition(family: Family, cx: &CheckContext<'_>) -> Result<(), ConditionError> {
    let fail = |detail: String| Err(ConditionError::Precondition { family, detail });
    let bf = |w: &WClass| match w.bf_report().first_failure() {
        Some(v) => Err(format!("{} fails {}", w.name(), v.axiom)),
        None => Ok(()),
    };
    match family {
        Family::A => {
            let (Some(wa), Some(wb)) = (cx.w_a, cx.w_b) else {
                return fail("both a source and a target class are required".into());
            };
            if let Err(e) = bf(wa).and_then(|_| bf(wb)) {
                return fail(e);
            }
            if let Err(w) = maps_into(cx.fun, wa, wb.saturated()) {
                return fail(format!("F₁({}) is not in {}", cx.src().one_name(w), wb.saturated().name()));
            }
        }
        Family::B => {
            let Some(wa) = cx.w_a else { return fail("a source class is required".into()) };
            if let Err(e) = bf(wa) {
                return fail(e);
            }
            if let Err(w) = maps_to_equivalences(cx.fun, wa) {
                return fail(format!("F₁({}) is not an internal equivalence", cx.src().one_name(w)));
            }
        }
        Family::EF => {
            if cx.w_a.is_none() {
                return fail("a source class is required".into());
            }
        }
        Family::X => {}
    }
    Ok(())
}

/// Runs one checker after its family's precondition.
pub fn run_condition(cond: &dyn Condition, cx: &CheckContext<'_>) -> Result<ConditionReport, ConditionError> {
    precondition(cond.tag().family(), cx)?;
    Ok(decide(cond, cx))
}

/// Runs one checker without re-checking preconditions.
pub fn decide(cond: &dyn Condition, cx: &CheckContext<'_>) -> ConditionReport {
    let inputs = cond.inputs(cx);
    let results: Vec<(Option<Tuple>, u64)> = inputs
        .par_iter()
        .map(|inp| {
            let mut n = 0;
            let w = cond.search(cx, inp, &mut n);
            (w, n)
        })
        .collect();
    let stats = SearchStats { inputs: inputs.len(), candidates: results.iter().map(|r| r.1).sum() };
    let first_fail = results.iter().position(|r| r.0.is_none());
    match first_fail {
        Some(i) => {
            let (extra, detail) = cond.explain_failure(cx, &inputs[i]);
            ConditionReport {
                tag: cond.tag(),
                verdict: false,
                witnesses: Vec::new(),
                counterexample: Some(Counterexample { input: inputs[i].clone(), extra, detail }),
                stats,
            }
        }
        None => ConditionReport {
            tag: cond.tag(),
            verdict: true,
            witnesses: inputs
                .into_iter()
                .zip(results)
                .map(|(input, (w, _))| Instance { input, witness: w.expect("all inputs have witnesses") })
                .collect(),
            counterexample: None,
            stats,
        },
    }
}

/// Re-validates a report: every stored witness re-checks, and a counterexample
/// is a genuine input whose search space is still exhausted.
pub fn recheck(cond: &dyn Condition, cx: &CheckContext<'_>, report: &ConditionReport) -> bool {
    if report.verdict {
        report.witnesses.iter().all(|i| cond.verify(cx, &i.input, &i.witness))
            && report.witnesses.len() == cond.inputs(cx).len()
    } else {
        match &report.counterexample {
            Some(c) => cond.inputs(cx).contains(&c.input) && cond.search(cx, &c.input, &mut 0).is_none(),
            None => false,
        }
    }
}

fn run_tag(tag: ConditionTag, cx: &CheckContext<'_>) -> Result<ConditionReport, ConditionError> {
    let reg = ConditionRegistry::standard();
    run_condition(reg.get(tag).expect("standard registry covers every tag"), cx)
}

fn numbered(family: Family, i: usize) -> ConditionTag {
    ConditionTag::numbered(family, i).unwrap_or_else(|| panic!("{family} has no condition number {i}"))
}

pub fn check_a(fun: &PsFun, w_a: &WClass, w_b: &WClass, which: usize) -> Result<ConditionReport, ConditionError> {
    run_tag(numbered(Family::A, which), &CheckContext::new(fun, Some(w_a), Some(w_b)))
}

pub fn check_b(fun: &PsFun, w_a: &WClass, which: usize) -> Result<ConditionReport, ConditionError> {
    run_tag(numbered(Family::B, which), &CheckContext::new(fun, Some(w_a), None))
}

pub fn check_ef(fun: &PsFun, w_a: &WClass, which: usize) -> ConditionReport {
    decide(
        ConditionRegistry::standard().get(numbered(Family::EF, which)).expect("registered"),
        &CheckContext::new(fun, Some(w_a), None),
    )
}

pub fn check_x(fun: &PsFun, which: ConditionTag) -> ConditionReport {
    assert_eq!(which.family(), Family::X, "{which} is not a weak-equivalence condition");
    decide(ConditionRegistry::standard().get(which).expect("registered"), &CheckContext::new(fun, None, None))
}

#[derive(Debug, Clone, Serialize)]
pub struct WeakEquivalenceReport {
    pub verdict: bool,
    pub reports: Vec<ConditionReport>,
}

/// `X1 ∧ X2a ∧ X2b ∧ X2c`.
pub fn is_weak_equivalence(fun: &PsFun) -> WeakEquivalenceReport {
    let reg = ConditionRegistry::standard();
    let cx = CheckContext::new(fun, None, None);
    let reports: Vec<_> = reg.family(Family::X).map(|c| decide(c, &cx)).collect();
    WeakEquivalenceReport { verdict: reports.iter().all(|r| r.verdict), reports }
}

// Enumeration helpers shared by the checkers.

/// Parallel pairs `(f¹, f²)` of 1-cells, in canonical order.
pub(crate) fn parallel_pairs(b: &FinBicat) -> Vec<(OneId, OneId)> {
    let mut out = Vec::new();
    for f1 in b.one_cells() {
        for &f2 in b.hom(b.src(f1), b.tgt(f1)) {
            out.push((f1, f2));
        }
    }
    out
}

/// Members of `w` with the given target, in canonical order.
pub(crate) fn members_into(b: &FinBicat, w: &WClass, tgt: ObjId) -> Vec<OneId> {
    b.one_cells().filter(|&f| b.tgt(f) == tgt && w.contains(f)).collect()
}

/// Members of `w` in `hom(src, tgt)`.
pub(crate) fn members_between<'b>(b: &'b FinBicat, w: &'b WClass, src: ObjId, tgt: ObjId) -> impl Iterator<Item = OneId> + 'b {
    b.hom(src, tgt).iter().copied().filter(move |&f| w.contains(f))
}

/// Whether `a` is an invertible 2-cell with boundary `src ⇒ tgt`.
pub(crate) fn invertible_in(b: &FinBicat, a: TwoId, src: OneId, tgt: OneId) -> bool {
    a.0 < b.num_two_cells() && b.src1(a) == src && b.tgt1(a) == tgt && b.is_invertible(a)
}
