//! Exhaustive law checking for finite bicategories.

use std::fmt;

use serde::Serialize;

use crate::bicat::{FinBicat, OneId, TwoId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Typing,
    HomAssociativity,
    HomUnit,
    WhiskerFunctoriality,
    Interchange,
    Invertibility,
    Naturality,
    Pentagon,
    Triangle,
    StrictFlag,
    // pseudofunctor laws
    Boundary,
    Functoriality,
    AssociativityCoherence,
    UnitCoherence,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Typing => "typing",
            Law::HomAssociativity => "hom-associativity",
            Law::HomUnit => "hom-unit",
            Law::WhiskerFunctoriality => "whisker-functoriality",
            Law::Interchange => "interchange",
            Law::Invertibility => "invertibility",
            Law::Naturality => "naturality",
            Law::Pentagon => "pentagon",
            Law::Triangle => "triangle",
            Law::StrictFlag => "strict-flag",
            Law::Boundary => "boundary",
            Law::Functoriality => "functoriality",
            Law::AssociativityCoherence => "associativity-coherence",
            Law::UnitCoherence => "unit-coherence",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub cells: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({}): {}", self.law, self.cells.join(", "), self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub pass: bool,
    /// Whether every associator and unitor component is an identity 2-cell.
    pub strict: bool,
    pub violations: Vec<Violation>,
    pub checks: usize,
}

impl ValidationReport {
    pub fn violates(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }
}

pub(crate) struct Collector {
    pub violations: Vec<Violation>,
    pub checks: usize,
}

impl Collector {
    pub fn new() -> Self {
        Collector { violations: Vec::new(), checks: 0 }
    }

    pub fn check(&mut self, ok: bool, law: Law, cells: impl FnOnce() -> Vec<String>, detail: &str) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation { law, cells: cells(), detail: detail.to_string() });
        }
    }

    /// Compares two optional composites; a missing side counts as a violation of `law`.
    pub fn equal(
        &mut self,
        lhs: Option<TwoId>,
        rhs: Option<TwoId>,
        law: Law,
        cells: impl FnOnce() -> Vec<String>,
        detail: &str,
    ) {
        match (lhs, rhs) {
            (Some(l), Some(r)) => self.check(l == r, law, cells, detail),
            _ => self.check(false, law, cells, &format!("{detail} (composite undefined)")),
        }
    }

    pub fn finish(self, strict: bool) -> ValidationReport {
        ValidationReport { pass: self.violations.is_empty(), strict, violations: self.violations, checks: self.checks }
    }
}

/// Composable triples `(h, g, f)` in canonical order.
pub(crate) fn composable_triples(b: &FinBicat) -> Vec<(OneId, OneId, OneId)> {
    let mut out = Vec::new();
    for f in b.one_cells() {
        for g in b.one_cells().filter(|&g| b.src(g) == b.tgt(f)) {
            for h in b.one_cells().filter(|&h| b.src(h) == b.tgt(g)) {
                out.push((h, g, f));
            }
        }
    }
    out.sort();
    out
}

pub(crate) fn composable_pairs(b: &FinBicat) -> Vec<(OneId, OneId)> {
    let mut out = Vec::new();
    for g in b.one_cells() {
        for f in b.one_cells() {
            if b.src(g) == b.tgt(f) {
                out.push((g, f));
            }
        }
    }
    out
}

fn check_typing(b: &FinBicat, c: &mut Collector) {
    let on = |f: OneId| b.one_name(f).to_string();
    let tn = |a: TwoId| b.two_name(a).to_string();
    for x in b.objects() {
        let i = b.id1(x);
        c.check(b.src(i) == x && b.tgt(i) == x, Law::Typing, || vec![b.obj_name(x).into()], "id1 is not an endo-cell on its object");
    }
    for f in b.one_cells() {
        let i = b.id2(f);
        c.check(b.src1(i) == f && b.tgt1(i) == f, Law::Typing, || vec![on(f)], "id2 has the wrong frame");
        let pi = b.runit(f);
        let fi = b.comp1(f, b.id1(b.src(f))).ok();
        c.check(fi == Some(b.src1(pi)) && b.tgt1(pi) == f, Law::Typing, || vec![on(f)], "runit frame is not f∘id ⇒ f");
        let up = b.lunit(f);
        let if_ = b.comp1(b.id1(b.tgt(f)), f).ok();
        c.check(if_ == Some(b.src1(up)) && b.tgt1(up) == f, Law::Typing, || vec![on(f)], "lunit frame is not id∘f ⇒ f");
    }
    for a in b.two_cells() {
        let (s, t) = (b.src1(a), b.tgt1(a));
        c.check(b.src(s) == b.src(t) && b.tgt(s) == b.tgt(t), Law::Typing, || vec![tn(a)], "2-cell between non-parallel 1-cells");
    }
    for (g, f) in composable_pairs(b) {
        let r = b.comp1(g, f).ok();
        c.check(
            r.is_some_and(|r| b.src(r) == b.src(f) && b.tgt(r) == b.tgt(g)),
            Law::Typing,
            || vec![on(g), on(f)],
            "hcomp1 result has the wrong boundary",
        );
    }
    for alpha in b.two_cells() {
        for beta in b.two_cells() {
            if b.tgt1(alpha) == b.src1(beta) {
                let r = b.vcomp(beta, alpha).ok();
                c.check(
                    r.is_some_and(|r| b.src1(r) == b.src1(alpha) && b.tgt1(r) == b.tgt1(beta)),
                    Law::Typing,
                    || vec![tn(beta), tn(alpha)],
                    "vcomp result has the wrong frame",
                );
            }
        }
        let (s, t) = (b.src1(alpha), b.tgt1(alpha));
        for g in b.one_cells().filter(|&g| b.src(g) == b.tgt(s)) {
            let r = b.wl(g, alpha).ok();
            let want = (b.comp1(g, s).ok(), b.comp1(g, t).ok());
            c.check(
                r.is_some_and(|r| (Some(b.src1(r)), Some(b.tgt1(r))) == want),
                Law::Typing,
                || vec![on(g), tn(alpha)],
                "whisk_left result has the wrong frame",
            );
        }
        for f in b.one_cells().filter(|&f| b.tgt(f) == b.src(s)) {
            let r = b.wr(alpha, f).ok();
            let want = (b.comp1(s, f).ok(), b.comp1(t, f).ok());
            c.check(
                r.is_some_and(|r| (Some(b.src1(r)), Some(b.tgt1(r))) == want),
                Law::Typing,
                || vec![tn(alpha), on(f)],
                "whisk_right result has the wrong frame",
            );
        }
    }
    for (h, g, f) in composable_triples(b) {
        let theta = b.assoc(h, g, f).ok();
        let src = b.comp1(g, f).and_then(|gf| b.comp1(h, gf)).ok();
        let tgt = b.comp1(h, g).and_then(|hg| b.comp1(hg, f)).ok();
        c.check(
            theta.is_some_and(|t| Some(b.src1(t)) == src && Some(b.tgt1(t)) == tgt),
            Law::Typing,
            || vec![on(h), on(g), on(f)],
            "assoc component has the wrong frame",
        );
    }
}

fn check_hom_categories(b: &FinBicat, c: &mut Collector) {
    let tn = |a: TwoId| b.two_name(a).to_string();
    for a in b.two_cells() {
        let (s, t) = (b.src1(a), b.tgt1(a));
        c.equal(b.vcomp(a, b.id2(s)).ok(), Some(a), Law::HomUnit, || vec![tn(a)], "α ⊙ i ≠ α");
        c.equal(b.vcomp(b.id2(t), a).ok(), Some(a), Law::HomUnit, || vec![tn(a)], "i ⊙ α ≠ α");
    }
    for f in b.one_cells() {
        for g in b.hom(b.src(f), b.tgt(f)).to_vec() {
            for &alpha in b.frame(f, g) {
                for h in b.hom(b.src(f), b.tgt(f)).to_vec() {
                    for &beta in b.frame(g, h) {
                        let ba = b.vcomp(beta, alpha).ok();
                        for k in b.hom(b.src(f), b.tgt(f)).to_vec() {
                            for &gamma in b.frame(h, k) {
                                let lhs = ba.and_then(|ba| b.vcomp(gamma, ba).ok());
                                let rhs = b.vcomp(gamma, beta).and_then(|gb| b.vcomp(gb, alpha)).ok();
                                c.equal(lhs, rhs, Law::HomAssociativity, || vec![tn(gamma), tn(beta), tn(alpha)], "γ⊙(β⊙α) ≠ (γ⊙β)⊙α");
                            }
                        }
                    }
                }
            }
        }
    }
}

fn check_whiskering(b: &FinBicat, c: &mut Collector) {
    let on = |f: OneId| b.one_name(f).to_string();
    let tn = |a: TwoId| b.two_name(a).to_string();
    for f in b.one_cells() {
        for g in b.one_cells().filter(|&g| b.src(g) == b.tgt(f)) {
            let gf = b.comp1(g, f).ok();
            c.equal(b.wl(g, b.id2(f)).ok(), gf.map(|x| b.id2(x)), Law::WhiskerFunctoriality, || vec![on(g), on(f)], "g ∗ i_f ≠ i_{g∘f}");
            c.equal(b.wr(b.id2(g), f).ok(), gf.map(|x| b.id2(x)), Law::WhiskerFunctoriality, || vec![on(g), on(f)], "i_g ∗ f ≠ i_{g∘f}");
        }
    }
    for alpha in b.two_cells() {
        let s = b.src1(alpha);
        for beta in b.two_cells() {
            if b.src1(beta) != b.tgt1(alpha) {
                continue;
            }
            let ba = b.vcomp(beta, alpha).ok();
            for g in b.one_cells().filter(|&g| b.src(g) == b.tgt(s)) {
                let lhs = ba.and_then(|x| b.wl(g, x).ok());
                let rhs = b.wl(g, beta).and_then(|wb| b.wl(g, alpha).and_then(|wa| b.vcomp(wb, wa))).ok();
                c.equal(lhs, rhs, Law::WhiskerFunctoriality, || vec![on(g), tn(beta), tn(alpha)], "g ∗ (β⊙α) ≠ (g∗β)⊙(g∗α)");
            }
            for f in b.one_cells().filter(|&f| b.tgt(f) == b.src(s)) {
                let lhs = ba.and_then(|x| b.wr(x, f).ok());
                let rhs = b.wr(beta, f).and_then(|wb| b.wr(alpha, f).and_then(|wa| b.vcomp(wb, wa))).ok();
                c.equal(lhs, rhs, Law::WhiskerFunctoriality, || vec![tn(beta), tn(alpha), on(f)], "(β⊙α) ∗ f ≠ (β∗f)⊙(α∗f)");
            }
        }
    }
    for alpha in b.two_cells() {
        for beta in b.two_cells() {
            if b.src(b.src1(beta)) != b.tgt(b.src1(alpha)) {
                continue;
            }
            c.equal(
                b.hcomp2(beta, alpha).ok(),
                b.hcomp2_alt(beta, alpha).ok(),
                Law::Interchange,
                || vec![tn(beta), tn(alpha)],
                "(β∗i_{f′})⊙(i_g∗α) ≠ (i_{g′}∗α)⊙(β∗i_f)",
            );
        }
    }
}

fn check_structure_cells(b: &FinBicat, c: &mut Collector) -> bool {
    let on = |f: OneId| b.one_name(f).to_string();
    let tn = |a: TwoId| b.two_name(a).to_string();
    let mut strict = true;
    let triples = composable_triples(b);
    for &(h, g, f) in &triples {
        let Ok(theta) = b.assoc(h, g, f) else { continue };
        strict &= b.is_identity2(theta);
        c.check(b.is_invertible(theta), Law::Invertibility, || vec![tn(theta), on(h), on(g), on(f)], "associator not invertible");
        // natural in f
        let hg = b.comp1(h, g).ok();
        for f2 in b.hom(b.src(f), b.tgt(f)).to_vec() {
            for &alpha in b.frame(f, f2) {
                let lhs = b.wl(g, alpha).and_then(|x| b.wl(h, x)).and_then(|x| b.assoc(h, g, f2).and_then(|t| b.vcomp(t, x))).ok();
                let rhs = hg.and_then(|hg| b.wl(hg, alpha).and_then(|x| b.vcomp(x, theta)).ok());
                c.equal(lhs, rhs, Law::Naturality, || vec![on(h), on(g), tn(alpha)], "associator not natural in its third argument");
            }
        }
        for g2 in b.hom(b.src(g), b.tgt(g)).to_vec() {
            for &beta in b.frame(g, g2) {
                let lhs = b.wr(beta, f).and_then(|x| b.wl(h, x)).and_then(|x| b.assoc(h, g2, f).and_then(|t| b.vcomp(t, x))).ok();
                let rhs = b.wl(h, beta).and_then(|x| b.wr(x, f)).and_then(|x| b.vcomp(x, theta)).ok();
                c.equal(lhs, rhs, Law::Naturality, || vec![on(h), tn(beta), on(f)], "associator not natural in its second argument");
            }
        }
        let gf = b.comp1(g, f).ok();
        for h2 in b.hom(b.src(h), b.tgt(h)).to_vec() {
            for &gamma in b.frame(h, h2) {
                let lhs = gf.and_then(|gf| b.wr(gamma, gf).and_then(|x| b.assoc(h2, g, f).and_then(|t| b.vcomp(t, x))).ok());
                let rhs = b.wr(gamma, g).and_then(|x| b.wr(x, f)).and_then(|x| b.vcomp(x, theta)).ok();
                c.equal(lhs, rhs, Law::Naturality, || vec![tn(gamma), on(g), on(f)], "associator not natural in its first argument");
            }
        }
    }
    for f in b.one_cells() {
        let (pi, up) = (b.runit(f), b.lunit(f));
        strict &= b.is_identity2(pi) && b.is_identity2(up);
        c.check(b.is_invertible(pi), Law::Invertibility, || vec![tn(pi), on(f)], "right unitor not invertible");
        c.check(b.is_invertible(up), Law::Invertibility, || vec![tn(up), on(f)], "left unitor not invertible");
        let (ida, idb) = (b.id1(b.src(f)), b.id1(b.tgt(f)));
        for f2 in b.hom(b.src(f), b.tgt(f)).to_vec() {
            for &alpha in b.frame(f, f2) {
                let lhs = b.wr(alpha, ida).and_then(|x| b.vcomp(b.runit(f2), x)).ok();
                let rhs = b.vcomp(alpha, pi).ok();
                c.equal(lhs, rhs, Law::Naturality, || vec![tn(alpha)], "right unitor not natural");
                let lhs = b.wl(idb, alpha).and_then(|x| b.vcomp(b.lunit(f2), x)).ok();
                let rhs = b.vcomp(alpha, up).ok();
                c.equal(lhs, rhs, Law::Naturality, || vec![tn(alpha)], "left unitor not natural");
            }
        }
    }
    // pentagon
    for &(h, g, f) in &triples {
        for k in b.one_cells().filter(|&k| b.src(k) == b.tgt(h)) {
            let lhs = (|| {
                let kh = b.comp1(k, h)?;
                let gf = b.comp1(g, f)?;
                b.vcomp(b.assoc(kh, g, f)?, b.assoc(k, h, gf)?)
            })()
            .ok();
            let rhs = (|| {
                let hg = b.comp1(h, g)?;
                let first = b.wl(k, b.assoc(h, g, f)?)?;
                let second = b.assoc(k, hg, f)?;
                let third = b.wr(b.assoc(k, h, g)?, f)?;
                b.seq(&[first, second, third])
            })()
            .ok();
            c.equal(lhs, rhs, Law::Pentagon, || vec![on(k), on(h), on(g), on(f)], "associator routes differ");
        }
    }
    // triangle
    for (g, f) in composable_pairs(b) {
        let id = b.id1(b.tgt(f));
        let lhs = b.assoc(g, id, f).and_then(|t| b.wr(b.runit(g), f).and_then(|w| b.vcomp(w, t))).ok();
        let rhs = b.wl(g, b.lunit(f)).ok();
        c.equal(lhs, rhs, Law::Triangle, || vec![on(g), on(f)], "(π_g ∗ f) ⊙ θ_{g,id,f} ≠ g ∗ υ_f");
    }
    strict
}

/// Checks every bicategory law exhaustively.
pub fn validate_bicat(b: &FinBicat) -> ValidationReport {
    let mut c = Collector::new();
    check_typing(b, &mut c);
    if !c.violations.is_empty() {
        return c.finish(false);
    }
    check_hom_categories(b, &mut c);
    check_whiskering(b, &mut c);
    let strict = check_structure_cells(b, &mut c);
    if b.strict_flag() && !strict {
        c.check(false, Law::StrictFlag, Vec::new, "strict flag set but some associator or unitor is not an identity");
    }
    c.finish(strict)
}
