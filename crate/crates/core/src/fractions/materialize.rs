use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::bicat::{BicatData, FinBicat, OneCell, OneId, TwoCell, TwoId};
use crate::fractions::rep::{
    enumerate_reps, find_refinement, identity_rep, vcompose_reps, whisker_left_rep, whisker_right_rep, TwoCellRep,
};
use crate::fractions::span::{all_spans, compose_spans, Span, SpanComposite};
use crate::fractions::FractionError;
use crate::validate::{validate_bicat, ValidationReport};
use crate::wclass::WClass;

/// An equivalence class of representatives for the frame `src ⇒ tgt`.
#[derive(Debug, Clone, Serialize)]
pub struct TwoCellClass {
    pub src: OneId,
    pub tgt: OneId,
    pub canonical: TwoCellRep,
    pub members: Vec<TwoCellRep>,
}

/// A materialized bicategory of fractions with its span and class index.
#[derive(Debug, Clone)]
pub struct Localization {
    base: Arc<FinBicat>,
    w: WClass,
    spans: Vec<Span>,
    span_index: HashMap<Span, OneId>,
    classes: Vec<TwoCellClass>,
    rep_index: HashMap<(OneId, OneId, TwoCellRep), TwoId>,
    composites: HashMap<(OneId, OneId), SpanComposite>,
    bicat: Arc<FinBicat>,
    report: ValidationReport,
}

impl Localization {
    pub fn base(&self) -> &Arc<FinBicat> {
        &self.base
    }

    pub fn w(&self) -> &WClass {
        &self.w
    }

    /// The fraction bicategory as a finite bicategory; 1-cell `i` is `spans()[i]`.
    pub fn bicat(&self) -> &Arc<FinBicat> {
        &self.bicat
    }

    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    pub fn span(&self, f: OneId) -> &Span {
        &self.spans[f.0]
    }

    pub fn span_id(&self, s: &Span) -> Option<OneId> {
        self.span_index.get(s).copied()
    }

    pub fn classes(&self) -> &[TwoCellClass] {
        &self.classes
    }

    pub fn class(&self, a: TwoId) -> &TwoCellClass {
        &self.classes[a.0]
    }

    /// Class of a valid representative of the frame `s1 ⇒ s2`.
    pub fn class_of(&self, rep: &TwoCellRep, s1: OneId, s2: OneId) -> Option<TwoId> {
        self.rep_index.get(&(s1, s2, *rep)).copied()
    }

    /// The composite `g ∘ f` with its BF3 square.
    pub fn composite(&self, g: OneId, f: OneId) -> Option<&SpanComposite> {
        self.composites.get(&(g, f))
    }

    pub fn validation(&self) -> &ValidationReport {
        &self.report
    }

    pub fn render_class(&self, a: TwoId) -> String {
        let c = self.class(a);
        format!(
            "{} : {} ⇒ {}",
            c.canonical.render(&self.base),
            self.span(c.src).display(&self.base),
            self.span(c.tgt).display(&self.base)
        )
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        let p = self.0[i];
        if p == i {
            return i;
        }
        let r = self.find(p);
        self.0[i] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

fn frame_classes(b: &FinBicat, w: &WClass, s1: &Span, s2: &Span) -> Vec<Vec<TwoCellRep>> {
    let reps = enumerate_reps(b, w, s1, s2);
    let mut uf = UnionFind((0..reps.len()).collect());
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if uf.find(i) != uf.find(j) && find_refinement(b, w, &reps[i], &reps[j], s1, s2).is_some() {
                uf.union(i, j);
            }
        }
    }
    let mut groups: Vec<Vec<TwoCellRep>> = Vec::new();
    let mut root_slot: HashMap<usize, usize> = HashMap::new();
    for (i, rep) in reps.iter().enumerate() {
        let r = uf.find(i);
        let slot = *root_slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[slot].push(*rep);
    }
    groups
}

/// Inverses computed from a vertical composition table alone.
fn class_inverses(classes: &[TwoCellClass], vcomp: &HashMap<(TwoId, TwoId), TwoId>, id2: &[TwoId]) -> Vec<Option<TwoId>> {
    let mut by_frame: HashMap<(OneId, OneId), Vec<TwoId>> = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        by_frame.entry((c.src, c.tgt)).or_default().push(TwoId(i));
    }
    classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let a = TwoId(i);
            by_frame.get(&(c.tgt, c.src))?.iter().copied().find(|&inv| {
                vcomp.get(&(inv, a)) == Some(&id2[c.src.0]) && vcomp.get(&(a, inv)) == Some(&id2[c.tgt.0])
            })
        })
        .collect()
}

/// Builds `C[W⁻¹]` as a finite bicategory and validates it.
pub fn materialize_fractions(base: &Arc<FinBicat>, w: &WClass) -> Result<Localization, FractionError> {
    let b = base.as_ref();
    if let Some(fail) = w.bf_report().first_failure() {
        return Err(FractionError::Precondition {
            axiom: fail.axiom.to_string(),
            cells: fail.counterexample.clone().unwrap_or_default().join(", "),
        });
    }
    let spans = all_spans(b, w);
    let span_index: HashMap<Span, OneId> = spans.iter().enumerate().map(|(i, s)| (*s, OneId(i))).collect();
    let n1 = spans.len();

    // 2-cell classes, frame by frame
    let frames: Vec<(usize, usize)> = (0..n1)
        .flat_map(|i| (0..n1).map(move |j| (i, j)))
        .filter(|&(i, j)| spans[i].src(b) == spans[j].src(b) && spans[i].tgt(b) == spans[j].tgt(b))
        .collect();
    let grouped: Vec<Vec<Vec<TwoCellRep>>> =
        frames.par_iter().map(|&(i, j)| frame_classes(b, w, &spans[i], &spans[j])).collect();
    let mut classes = Vec::new();
    let mut rep_index = HashMap::new();
    for (&(i, j), groups) in frames.iter().zip(grouped) {
        for members in groups {
            let id = TwoId(classes.len());
            for m in &members {
                rep_index.insert((OneId(i), OneId(j), *m), id);
            }
            let canonical = *members.iter().min().expect("classes are non-empty");
            classes.push(TwoCellClass { src: OneId(i), tgt: OneId(j), canonical, members });
        }
    }
    let lookup = |rep: &TwoCellRep, s1: OneId, s2: OneId, op: &'static str| {
        rep_index.get(&(s1, s2, *rep)).copied().ok_or_else(|| FractionError::SearchFailed {
            operation: op,
            at: format!("{} in {} ⇒ {}", rep.render(b), spans[s1.0].display(b), spans[s2.0].display(b)),
        })
    };

    let id1: Vec<OneId> = b.objects().map(|x| span_index[&Span::identity(b, x)]).collect();
    let id2 = (0..n1)
        .map(|i| lookup(&identity_rep(b, &spans[i])?, OneId(i), OneId(i), "identity"))
        .collect::<Result<Vec<_>, _>>()?;

    let mut composites = HashMap::new();
    let mut hcomp1 = Vec::new();
    for g in 0..n1 {
        for f in 0..n1 {
            if spans[g].src(b) == spans[f].tgt(b) {
                let c = compose_spans(b, w, &spans[g], &spans[f])?;
                let r = span_index[&c.span];
                composites.insert((OneId(g), OneId(f)), c);
                hcomp1.push((OneId(g), OneId(f), r));
            }
        }
    }
    let comp = |g: OneId, f: OneId| span_index[&composites[&(g, f)].span];

    let pairs: Vec<(usize, usize)> = (0..classes.len())
        .flat_map(|i| (0..classes.len()).map(move |j| (i, j)))
        .filter(|&(beta, alpha)| classes[alpha].tgt == classes[beta].src)
        .collect();
    let vcomp: Vec<(TwoId, TwoId, TwoId)> = pairs
        .par_iter()
        .map(|&(beta, alpha)| {
            let (ca, cb) = (&classes[alpha], &classes[beta]);
            let spans3 = (&spans[ca.src.0], &spans[ca.tgt.0], &spans[cb.tgt.0]);
            let rep = vcompose_reps(b, w, spans3, &ca.canonical, &cb.canonical).ok_or_else(|| {
                FractionError::SearchFailed { operation: "vertical composition", at: format!("{} ⊙ {}", cb.canonical.render(b), ca.canonical.render(b)) }
            })?;
            Ok((TwoId(beta), TwoId(alpha), lookup(&rep, ca.src, cb.tgt, "vertical composition")?))
        })
        .collect::<Result<_, FractionError>>()?;

    let wl_keys: Vec<(usize, usize)> = (0..n1)
        .flat_map(|g| (0..classes.len()).map(move |a| (g, a)))
        .filter(|&(g, a)| spans[g].src(b) == spans[classes[a].src.0].tgt(b))
        .collect();
    let whisk_left: Vec<(OneId, TwoId, TwoId)> = wl_keys
        .par_iter()
        .map(|&(g, a)| {
            let c = &classes[a];
            let (g1, s1, s2) = (OneId(g), c.src, c.tgt);
            let (c1, c2) = (&composites[&(g1, s1)], &composites[&(g1, s2)]);
            let rep = whisker_left_rep(b, w, &spans[g], (&spans[s1.0], &spans[s2.0]), (c1, c2), &c.canonical)
                .ok_or_else(|| FractionError::SearchFailed {
                    operation: "left whiskering",
                    at: format!("{} ∗ {}", spans[g].display(b), c.canonical.render(b)),
                })?;
            Ok((g1, TwoId(a), lookup(&rep, comp(g1, s1), comp(g1, s2), "left whiskering")?))
        })
        .collect::<Result<_, FractionError>>()?;

    let wr_keys: Vec<(usize, usize)> = (0..classes.len())
        .flat_map(|a| (0..n1).map(move |f| (a, f)))
        .filter(|&(a, f)| spans[f].tgt(b) == spans[classes[a].src.0].src(b))
        .collect();
    let whisk_right: Vec<(TwoId, OneId, TwoId)> = wr_keys
        .par_iter()
        .map(|&(a, f)| {
            let c = &classes[a];
            let (h, s1, s2) = (OneId(f), c.src, c.tgt);
            let (c1, c2) = (&composites[&(s1, h)], &composites[&(s2, h)]);
            let rep = whisker_right_rep(b, w, &spans[f], (&spans[s1.0], &spans[s2.0]), (c1, c2), &c.canonical)
                .ok_or_else(|| FractionError::SearchFailed {
                    operation: "right whiskering",
                    at: format!("{} ∗ {}", c.canonical.render(b), spans[f].display(b)),
                })?;
            Ok((TwoId(a), h, lookup(&rep, comp(s1, h), comp(s2, h), "right whiskering")?))
        })
        .collect::<Result<_, FractionError>>()?;

    let vmap: HashMap<(TwoId, TwoId), TwoId> = vcomp.iter().map(|&(x, y, r)| ((x, y), r)).collect();
    let inverses = class_inverses(&classes, &vmap, &id2);
    let mut frame_index: HashMap<(OneId, OneId), Vec<TwoId>> = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        frame_index.entry((c.src, c.tgt)).or_default().push(TwoId(i));
    }
    let connect = |s: OneId, t: OneId, component: &'static str, at: String| {
        if s == t {
            return Ok(id2[s.0]);
        }
        frame_index
            .get(&(s, t))
            .and_then(|cands| cands.iter().copied().find(|c| inverses[c.0].is_some()))
            .ok_or(FractionError::NoConnectingClass { component, at })
    };
    let span_name = |i: OneId| spans[i.0].display(b).to_string();

    let one_cells: Vec<OneCell> =
        spans.iter().map(|s| OneCell { name: s.display(b).to_string(), src: s.src(b), tgt: s.tgt(b) }).collect();
    let mut data = BicatData {
        objects: b.objects().map(|x| b.obj_name(x).to_string()).collect(),
        one_cells,
        two_cells: classes
            .iter()
            .map(|c| TwoCell {
                name: format!("{}:{}⇒{}", c.canonical.render(b), span_name(c.src), span_name(c.tgt)),
                src: c.src,
                tgt: c.tgt,
            })
            .collect(),
        id1,
        id2: id2.clone(),
        hcomp1,
        vcomp,
        whisk_left,
        whisk_right,
        strict: false,
        ..Default::default()
    };
    let triples = (0..n1).flat_map(|h| (0..n1).flat_map(move |g| (0..n1).map(move |f| (OneId(h), OneId(g), OneId(f)))));
    for (h, g, f) in triples.filter(|&(h, g, f)| {
        spans[h.0].src(b) == spans[g.0].tgt(b) && spans[g.0].src(b) == spans[f.0].tgt(b)
    }) {
        let s = comp(h, comp(g, f));
        let t = comp(comp(h, g), f);
        let theta = connect(s, t, "associator", format!("({}, {}, {})", span_name(h), span_name(g), span_name(f)))?;
        data.assoc.push((h, g, f, theta));
    }
    for i in 0..n1 {
        let f = OneId(i);
        let src = data.id1[spans[i].src(b).0];
        let tgt = data.id1[spans[i].tgt(b).0];
        data.runit.push((f, connect(comp(f, src), f, "right unitor", span_name(f))?));
        data.lunit.push((f, connect(comp(tgt, f), f, "left unitor", span_name(f))?));
    }

    let bicat = FinBicat::new(data)?;
    let report = validate_bicat(&bicat);
    if !report.pass {
        return Err(FractionError::Incoherent(Box::new(report)));
    }
    Ok(Localization {
        base: base.clone(),
        w: w.clone(),
        spans,
        span_index,
        classes,
        rep_index,
        composites,
        bicat: Arc::new(bicat),
        report,
    })
}
