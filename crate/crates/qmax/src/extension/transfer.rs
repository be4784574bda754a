//! Ideal-transfer statements for an extension R ⊆ S, each evaluated as an
//! implication on every eligible instance. Finite extensions are integral,
//! so lying-over and incomparability hold and are not re-checked.

use super::checks::{classify_lying_over_quotient, find_qmax_lying_over, max_upper, LyingOverShape};
use super::{Extension, MinimalTag};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::qmax::{classify_qmax, is_submaximal, QMaxClass, QMaxTag};
use crate::ring::TableRing;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisNotMet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferRecord {
    pub prop: &'static str,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

type Check = fn(&Ctx, &mut Sink) -> Result<()>;

/// Statement ids in report order, with their checks.
const CHECKS: &[(&str, Check)] = &[
    ("contraction-cases", contraction_cases),
    ("covering-transfer", covering_transfer),
    ("decomposed-lift-criterion", decomposed_lift_criterion),
    ("decomposed-outside-homotypic", decomposed_outside_homotypic),
    ("inert-ramified-no-lift", inert_ramified_no_lift),
    ("inert-ramified-outside", inert_ramified_outside),
    ("local-factor-criterion", local_factor_criterion),
    ("lying-over-lift", lying_over_lift),
    ("max-upper", max_upper_cases),
    ("max-upper-preimage", max_upper_preimage),
    ("maximal-extension-transfer", maximal_extension_transfer),
    ("minimal-decomposed-below-conductor", minimal_decomposed_below_conductor),
    ("minimal-outside-conductor", minimal_outside_conductor),
    ("radical-contraction", radical_contraction),
    ("radical-extension-identity", radical_extension_identity),
    ("ramified-lift-dichotomy", ramified_lift_dichotomy),
    ("ramified-maximal-extension", ramified_maximal_extension),
    ("ramified-outside-homotypic", ramified_outside_homotypic),
    ("ramified-radical-contraction", ramified_radical_contraction),
    ("ramified-submaximal-not-qmax", ramified_submaximal_not_qmax),
    ("shared-radical-identities", shared_radical_identities),
    ("shared-submaximal", shared_submaximal),
    ("submaximal-inside-conductor", submaximal_inside_conductor),
    ("unsupported-maximal-lift", unsupported_maximal_lift),
    ("unsupported-qmax-transfer", unsupported_qmax_transfer),
];

pub fn proposition_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|(id, _)| *id).collect()
}

/// Runs the selected statements (all when `only` is `None`). Records are
/// sorted by statement id, then instance.
pub fn transfer_suite(ext: &Extension, only: Option<&[String]>) -> Result<Vec<TransferRecord>> {
    let ctx = Ctx::new(ext)?;
    let selected: Vec<&(&str, Check)> =
        CHECKS.iter().filter(|(id, _)| only.is_none_or(|o| o.iter().any(|x| x == id))).collect();
    let parts = selected
        .par_iter()
        .map(|(id, check)| {
            let mut sink = Sink { prop: id, key: ctx.key.clone(), out: Vec::new() };
            check(&ctx, &mut sink)?;
            Ok(sink.out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<TransferRecord> = parts.into_iter().flatten().collect();
    out.sort_by(|a, b| a.prop.cmp(b.prop).then_with(|| a.instance.cmp(&b.instance)));
    Ok(out)
}

struct Sink {
    prop: &'static str,
    key: String,
    out: Vec<TransferRecord>,
}

impl Sink {
    fn push(&mut self, instance: String, status: Status, witness: Option<String>) {
        let instance = format!("{} | {instance}", self.key);
        self.out.push(TransferRecord { prop: self.prop, instance, status, witness });
    }

    fn check(&mut self, instance: String, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.push(instance, Status::Pass, None);
        } else {
            let w = witness();
            self.push(instance, Status::Fail, Some(w));
        }
    }

    fn not_met(&mut self, instance: String, why: &str) {
        self.push(instance, Status::HypothesisNotMet, Some(why.to_string()));
    }
}

fn show(i: &Ideal) -> String {
    format!("{:?}", i.to_vec())
}

/// Data shared by all statements: lattices, types and the support.
struct Ctx<'a> {
    ext: &'a Extension,
    key: String,
    r_ideals: Vec<Ideal>,
    s_ideals: Vec<Ideal>,
    r_class: Vec<Option<QMaxClass>>,
    s_class: Vec<Option<QMaxClass>>,
    r_max: Vec<Ideal>,
    s_max: Vec<Ideal>,
    supp: Vec<Ideal>,
    minimal: MinimalTag,
}

impl<'a> Ctx<'a> {
    fn new(ext: &'a Extension) -> Result<Ctx<'a>> {
        let (r, s) = (ext.sub(), ext.ambient());
        let (rl, sl) = (r.lattice()?, s.lattice()?);
        let classes = |x: &TableRing, l: &crate::ideal::IdealLattice| -> Result<Vec<Option<QMaxClass>>> {
            (0..l.len())
                .map(|k| if k == l.unit() { Ok(None) } else { classify_qmax(x, l.get(k)).map(Some) })
                .collect()
        };
        let minimal = if ext.is_proper() { ext.classify_minimal()?.tag() } else { MinimalTag::NotMinimal };
        Ok(Ctx {
            ext,
            key: format!("{} ⊆ {}", r.label(), s.label()),
            r_class: classes(r, &rl)?,
            s_class: classes(s, &sl)?,
            r_max: rl.maximal_ideals().iter().map(|&k| rl.get(k).clone()).collect(),
            s_max: sl.maximal_ideals().iter().map(|&k| sl.get(k).clone()).collect(),
            r_ideals: rl.ideals().to_vec(),
            s_ideals: sl.ideals().to_vec(),
            supp: ext.support().to_vec(),
            minimal,
        })
    }

    fn r(&self) -> &TableRing {
        self.ext.sub()
    }

    fn s(&self) -> &TableRing {
        self.ext.ambient()
    }

    fn r_tag(&self, i: &Ideal) -> QMaxTag {
        let k = self.r_ideals.binary_search(i).expect("ideal of R");
        self.r_class[k].as_ref().map_or(QMaxTag::NotQuasiMaximal, |c| c.tag())
    }

    fn s_tag(&self, j: &Ideal) -> QMaxTag {
        let k = self.s_ideals.binary_search(j).expect("ideal of S");
        self.s_class[k].as_ref().map_or(QMaxTag::NotQuasiMaximal, |c| c.tag())
    }

    fn r_proper(&self) -> impl Iterator<Item = &Ideal> {
        self.r_ideals[..self.r_ideals.len() - 1].iter()
    }

    fn s_proper(&self) -> impl Iterator<Item = &Ideal> {
        self.s_ideals[..self.s_ideals.len() - 1].iter()
    }

    fn r_qmax(&self) -> impl Iterator<Item = (&Ideal, QMaxTag)> {
        self.r_proper().map(|i| (i, self.r_tag(i))).filter(|(_, t)| t.is_qmax())
    }

    fn s_qmax(&self) -> impl Iterator<Item = (&Ideal, QMaxTag)> {
        self.s_proper().map(|j| (j, self.s_tag(j))).filter(|(_, t)| t.is_qmax())
    }

    fn r_is_max(&self, i: &Ideal) -> bool {
        self.r_max.contains(i)
    }

    fn s_is_max(&self, j: &Ideal) -> bool {
        self.s_max.contains(j)
    }

    fn v_r(&self, i: &Ideal) -> Vec<&Ideal> {
        self.r_max.iter().filter(|m| i.is_subset(m)).collect()
    }

    fn meets_support(&self, i: &Ideal) -> bool {
        self.supp.iter().any(|m| i.is_subset(m))
    }

    fn extend(&self, i: &Ideal) -> Ideal {
        self.ext.extend(i)
    }

    fn contract(&self, j: &Ideal) -> Ideal {
        self.ext.contract(j)
    }

    /// IS ∩ R = I and IS has the same members as I.
    fn shared(&self, i: &Ideal) -> bool {
        self.ext.is_extended_equal(i)
    }

    fn covers_r(&self, lo: &Ideal, hi: &Ideal) -> bool {
        covers_in(&self.r_ideals, lo, hi)
    }

    fn covers_s(&self, lo: &Ideal, hi: &Ideal) -> bool {
        covers_in(&self.s_ideals, lo, hi)
    }

    fn conductor(&self) -> &Ideal {
        self.ext.conductor()
    }

    fn conductor_r(&self) -> Ideal {
        self.ext.conductor_in_sub()
    }
}

fn covers_in(ideals: &[Ideal], lo: &Ideal, hi: &Ideal) -> bool {
    lo.is_proper_subset(hi) && !ideals.iter().any(|k| lo.is_proper_subset(k) && k.is_proper_subset(hi))
}

fn radical_contraction(c: &Ctx, out: &mut Sink) -> Result<()> {
    for i in c.r_proper() {
        let lhs = c.r().radical(i);
        let rhs = c.contract(&c.s().radical(&c.extend(i)));
        out.check(show(i), lhs == rhs, || format!("rad I = {} but rad(IS) ∩ R = {}", show(&lhs), show(&rhs)));
    }
    Ok(())
}

fn radical_extension_identity(c: &Ctx, out: &mut Sink) -> Result<()> {
    for i in c.r_proper() {
        let rad = c.r().radical(i);
        if rad != c.contract(&c.s().radical(&c.extend(i))) {
            out.not_met(show(i), "rad I differs from rad(IS) ∩ R");
            continue;
        }
        let again = c.contract(&c.s().radical(&c.extend(&rad)));
        out.check(show(i), rad == again, || format!("rad((rad I)S) ∩ R = {}", show(&again)));
    }
    Ok(())
}

fn shared_radical_identities(c: &Ctx, out: &mut Sink) -> Result<()> {
    for i in c.r_proper() {
        if &c.contract(&c.extend(i)) != i {
            out.not_met(show(i), "IS ∩ R differs from I");
            continue;
        }
        let rad = c.r().radical(i);
        let a = c.contract(&c.s().radical(&c.extend(i)));
        let b = c.contract(&c.s().radical(&c.extend(&rad)));
        out.check(show(i), rad == a && a == b, || format!("{} / {} / {}", show(&rad), show(&a), show(&b)));
    }
    Ok(())
}

fn maximal_extension_transfer(c: &Ctx, out: &mut Sink) -> Result<()> {
    for (i, t) in c.r_qmax() {
        if !c.v_r(i).iter().all(|m| c.s_is_max(&c.extend(m))) {
            out.not_met(show(i), "some MS over I is not maximal");
            continue;
        }
        let is = c.extend(i);
        let ts = if is.is_unit() { QMaxTag::NotQuasiMaximal } else { c.s_tag(&is) };
        let rad_ok = c.r().radical(i) == c.contract(&c.s().radical(&is));
        // Ramified I with IS radical: IS is maximal and contracts to √I.
        let exempt = t == QMaxTag::Ramified && c.s().radical(&is) == is;
        let (want, back) = if exempt { (QMaxTag::Inert, c.r().radical(i)) } else { (t, i.clone()) };
        let contract_ok = c.contract(&is) == back;
        out.check(show(i), ts == want && rad_ok && contract_ok, || {
            format!("I {}, IS {} {}, radicals {rad_ok}, contraction {contract_ok}", t.name(), show(&is), ts.name())
        });
    }
    Ok(())
}

fn ramified_maximal_extension(c: &Ctx, out: &mut Sink) -> Result<()> {
    for (i, t) in c.r_qmax() {
        if t != QMaxTag::Ramified {
            continue;
        }
        let rs = c.extend(&c.r().radical(i));
        if !c.s_is_max(&rs) {
            out.not_met(show(i), "(rad I)S is not maximal");
            continue;
        }
        let is = c.extend(i);
        let lhs = &c.contract(&is) == i;
        let rhs = !is.is_unit() && c.s_tag(&is) == QMaxTag::Ramified;
        out.check(show(i), lhs == rhs, || format!("IS ∩ R = I is {lhs}, IS ramified is {rhs}"));
    }
    Ok(())
}

fn unsupported_maximal_lift(c: &Ctx, out: &mut Sink) -> Result<()> {
    let sl = c.s().lattice()?;
    for m in &c.r_max {
        if c.supp.contains(m) {
            out.not_met(show(m), "M is in the support");
            continue;
        }
        let ms = c.extend(m);
        let over: Vec<&Ideal> =
            sl.prime_ideals().iter().map(|&k| sl.get(k)).filter(|p| &c.contract(p) == m).collect();
        let ok = over.len() == 1 && over[0] == &ms && c.s_is_max(&ms);
        out.check(show(m), ok, || format!("MS = {}, primes over M: {}", show(&ms), over.len()));
    }
    Ok(())
}

fn covering_transfer(c: &Ctx, out: &mut Sink) -> Result<()> {
    for i in c.r_proper() {
        for j in c.r_ideals.iter().filter(|j| c.covers_r(i, j)) {
            let key = format!("R: {} < {}", show(i), show(j));
            if c.meets_support(i) {
                out.not_met(key, "V(I) meets the support");
                continue;
            }
            let (is, js) = (c.extend(i), c.extend(j));
            let ok = c.covers_s(&is, &js) && &c.contract(&is) == i && &c.contract(&js) == j;
            out.check(key, ok, || format!("IS = {}, JS = {}", show(&is), show(&js)));
        }
    }
    for i in c.s_proper() {
        for j in c.s_ideals.iter().filter(|j| c.covers_s(i, j)) {
            let key = format!("S: {} < {}", show(i), show(j));
            let (ir, jr) = (c.contract(i), c.contract(j));
            if c.meets_support(&ir) {
                out.not_met(key, "V(I' ∩ R) meets the support");
                continue;
            }
            let ok = c.covers_r(&ir, &jr) && &c.extend(&ir) == i && &c.extend(&jr) == j;
            out.check(key, ok, || format!("I' ∩ R = {}, J' ∩ R = {}", show(&ir), show(&jr)));
        }
    }
    Ok(())
}

fn unsupported_qmax_transfer(c: &Ctx, out: &mut Sink) -> Result<()> {
    for (i, t) in c.r_qmax() {
        if c.meets_support(i) {
            out.not_met(show(i), "V(I) meets the support");
            continue;
        }
        let is = c.extend(i);
        let mut ok = &c.contract(&is) == i && !is.is_unit() && c.s_tag(&is) == t;
        if t != QMaxTag::Inert {
            for m in c.v_r(i) {
                let ms = c.extend(m);
                ok &= c.s_is_max(&ms) && c.covers_s(&is, &ms);
            }
        }
        out.check(show(i), ok, || format!("IS = {}", show(&is)));
    }
    Ok(())
}

fn lying_over_lift(c: &Ctx, out: &mut Sink) -> Result<()> {
    for (i, t) in c.r_qmax() {
        if t == QMaxTag::Ramified {
            continue;
        }
        let found = c.s_qmax().any(|(j, tj)| tj == t && &c.contract(j) == i);
        out.check(show(i), found, || format!("no {} ideal of S lies over I", t.name()));
    }
    Ok(())
}

fn max_upper_preimage(c: &Ctx, out: &mut Sink) -> Result<()> {
    for j in c.s_proper() {
        let i = c.contract(j);
        let back = c.contract(&c.extend(&i));
        out.check(show(j), back == i, || format!("f⁻¹(IS) = {}", show(&back)));
    }
    Ok(())
}

fn max_upper_cases(c: &Ctx, out: &mut Sink) -> Result<()> {
    for j in c.s_proper() {
        let i = c.contract(j);
        for m in c.r_max.iter().filter(|m| c.covers_r(&i, m)) {
            let key = format!("J={} M={}", show(j), show(m));
            let n = c.extend(m);
            if !c.s_is_max(&n) || !j.is_subset(&n) {
                out.not_met(key, "MS is not a maximal ideal containing J");
                continue;
            }
            let mu = max_upper(c.ext.inclusion(), j, Some(&n))?;
            let is = c.extend(&i);
            let is_tag = c.s_tag(&is);
            let mut ok = mu.candidates.iter().all(|k| c.s_tag(k).is_qmax());
            match classify_qmax(c.r(), &i)? {
                QMaxClass::Ramified { .. } => {
                    ok &= is_tag == QMaxTag::Ramified && mu.candidates.iter().all(|k| k == &is);
                }
                QMaxClass::Decomposed { m1, m2 } => {
                    let other = if &m1 == m { m2 } else { m1 };
                    let n2 = c.extend(&other);
                    ok &= !n2.is_unit();
                    if c.s_is_max(&n2) {
                        ok &= is_tag == QMaxTag::Decomposed && mu.candidates.iter().all(|k| k == &is);
                    } else {
                        ok &= !is_tag.is_qmax() && mu.candidates.iter().all(|k| is.is_proper_subset(k));
                    }
                }
                _ => {}
            }
            out.check(key, ok, || {
                let ks: Vec<String> = mu.candidates.iter().map(show).collect();
                format!("IS = {} ({}), Max-uppers {}", show(&is), is_tag.name(), ks.join(" "))
            });
        }
    }
    Ok(())
}

/// Localization at M is the local factor whose idempotent lies outside M.
fn local_factor_criterion(c: &Ctx, out: &mut Sink) -> Result<()> {
    for (side, ring) in [("R", c.ext.sub()), ("S", c.ext.ambient())] {
        let l = ring.lattice()?;
        let lf = ring.local_factors();
        for k in l.proper() {
            let i = l.get(k);
            let tag = classify_qmax(ring, i)?.tag();
            let v = l.maximal_over(k);
            let mut rhs = v.len() <= 2;
            let mut homotypic = true;
            for &m in &v {
                let f = lf.factor_for(l.get(m)).expect("maximal ideal has a local factor");
                let factor = &lf.factors[f].0;
                let local = lf.project(f, i);
                let lt = classify_qmax(factor, &local)?.tag();
                rhs &= lt.is_qmax() && (v.len() < 2 || lt == QMaxTag::Inert);
                homotypic &= match tag {
                    QMaxTag::Decomposed => lt == QMaxTag::Inert,
                    QMaxTag::NotQuasiMaximal => true,
                    t => lt == t,
                };
            }
            let lhs = tag.is_qmax();
            out.check(format!("{side}: {}", show(i)), lhs == rhs && (!lhs || homotypic), || {
                format!("{} globally, local criterion {rhs}, types match {homotypic}", tag.name())
            });
        }
    }
    Ok(())
}

fn contraction_cases(c: &Ctx, out: &mut Sink) -> Result<()> {
    for (j, t) in c.s_qmax() {
        let i = c.contract(j);
        let ti = c.r_tag(&i);
        let key = show(j);
        match classify_qmax(c.s(), j)? {
            QMaxClass::Inert => out.check(key, ti == QMaxTag::Inert, || format!("I = {} is {}", show(&i), ti.name())),
            QMaxClass::Decomposed { m1, m2 } => {
                let (a, b) = (c.contract(&m1), c.contract(&m2));
                let ok = if a == b {
                    ti == QMaxTag::Inert || c.supp.contains(&i)
                } else {
                    ti == QMaxTag::Decomposed
                };
                out.check(key, ok, || format!("I = {} is {}", show(&i), ti.name()));
            }
            QMaxClass::Ramified { m: n } => {
                let nr = c.contract(&n);
                let local = c.v_r(&i) == vec![&nr];
                let principal = (0..c.r().size())
                    .any(|x| c.r().ideal_sum(&i, &c.r().principal_ideal(x)) == nr);
                if !local {
                    out.check(key, false, || format!("R/I is not local with maximal ideal {}", show(&nr)));
                } else if nr == i {
                    out.not_met(key, "(N ∩ R)/I is zero");
                } else if !principal {
                    out.not_met(key, "(N ∩ R)/I is not principal");
                } else {
                    out.check(key, ti == QMaxTag::Ramified, || format!("I = {} is {}", show(&i), ti.name()));
                }
            }
            QMaxClass::NotQuasiMaximal { .. } => unreachable!("{} filtered to quasi-maximal", t.name()),
        }
    }
    Ok(())
}

fn minimal_only(c: &Ctx, want: Option<MinimalTag>) -> bool {
    match want {
        None => c.minimal != MinimalTag::NotMinimal,
        Some(t) => c.minimal == t,
    }
}

fn minimal_outside_conductor(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !minimal_only(c, None) {
        return Ok(());
    }
    let m = c.conductor_r();
    for (j, t) in c.s_qmax() {
        let i = c.contract(j);
        if i.is_subset(&m) {
            out.not_met(show(j), "J ∩ R lies in the conductor");
            continue;
        }
        let ok = &c.extend(&i) == j && c.r_tag(&i) == t;
        out.check(show(j), ok, || format!("I = {} is {}", show(&i), c.r_tag(&i).name()));
    }
    Ok(())
}

fn shared_submaximal(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !c.ext.is_proper() {
        return Ok(());
    }
    let m = c.conductor_r();
    if !c.r_is_max(&m) {
        return Ok(());
    }
    for i in c.r_proper() {
        if c.r_is_max(i) || !is_submaximal(c.r(), i)? {
            continue;
        }
        let lhs = c.shared(i);
        let lies_under = c.s_ideals.iter().any(|j| &c.contract(j) == i);
        let rhs = i.is_proper_subset(&m) && lies_under;
        out.check(show(i), lhs == rhs, || format!("I = IS is {lhs}, I ⊂ (R:S) with an ideal above is {rhs}"));
    }
    Ok(())
}

fn minimal_decomposed_below_conductor(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !minimal_only(c, None) {
        return Ok(());
    }
    let m = c.conductor_r();
    let m_s = c.conductor();
    for (i, t) in c.r_qmax() {
        if t != QMaxTag::Decomposed || !i.is_proper_subset(&m) {
            continue;
        }
        let other: Vec<&Ideal> = c.r_max.iter().filter(|p| *p != &m && i == &p.intersection(&m)).collect();
        let lifts: Vec<&Ideal> = c
            .s_qmax()
            .filter(|(j, tj)| *tj == QMaxTag::Decomposed && &c.contract(j) == i)
            .map(|(j, _)| j)
            .collect();
        let shaped = lifts.iter().any(|j| {
            let over: Vec<Ideal> = c.s_max.iter().filter(|n| j.is_subset(n)).map(|n| c.contract(n)).collect();
            over.len() == 2 && over.contains(&m) && other.iter().any(|p| over.contains(p))
        });
        let shared = c.shared(i);
        let is = c.extend(i);
        let in_s = c.s_tag(&is) == QMaxTag::Decomposed;
        let mut ok = other.len() == 1 && shaped && shared && in_s == (c.minimal == MinimalTag::Inert);
        if c.minimal == MinimalTag::Inert {
            let mine: Vec<&Ideal> =
                c.s_qmax().filter(|(j, _)| j.is_subset(m_s) && &c.contract(j) == i).map(|(j, _)| j).collect();
            ok &= mine == vec![&is];
        }
        if !c.s_is_max(m_s) {
            ok &= lifts.iter().all(|j| j.len() != i.len());
        }
        out.check(show(i), ok, || {
            format!("M' count {}, lifts {}, I = IS {shared}, I decomposed in S {in_s}", other.len(), lifts.len())
        });
    }
    Ok(())
}

fn submaximal_inside_conductor(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !minimal_only(c, None) {
        return Ok(());
    }
    let m = c.conductor();
    for j in c.s_proper() {
        if !j.is_proper_subset(m) || c.s_is_max(j) || !is_submaximal(c.s(), j)? {
            continue;
        }
        let jr = c.contract(j);
        let (tr, ts) = (c.r_tag(&jr), c.s_tag(j));
        let ok = c.minimal == MinimalTag::Inert
            && ((tr == QMaxTag::Decomposed && ts == QMaxTag::Decomposed)
                || (ts == QMaxTag::Ramified && !tr.is_qmax()));
        out.check(show(j), ok, || format!("{:?} extension, J {} in R and {} in S", c.minimal, tr.name(), ts.name()));
    }
    Ok(())
}

fn inert_ramified_no_lift(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !minimal_only(c, Some(MinimalTag::Inert)) {
        return Ok(());
    }
    let m = c.conductor();
    let mr = c.conductor_r();
    for (i, t) in c.r_qmax() {
        if t != QMaxTag::Ramified || !i.is_proper_subset(&mr) {
            continue;
        }
        let bad = c.s_qmax().find(|(j, _)| j.is_proper_subset(m) && &c.contract(j) == i);
        out.check(show(i), bad.is_none(), || format!("J = {} lies over I", show(bad.unwrap().0)));
    }
    Ok(())
}

fn inert_ramified_outside(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !minimal_only(c, Some(MinimalTag::Inert)) {
        return Ok(());
    }
    let m = c.conductor();
    for (j, t) in c.s_qmax() {
        if t != QMaxTag::Ramified {
            continue;
        }
        if j.is_subset(m) {
            out.not_met(show(j), "J lies in the conductor");
            continue;
        }
        let i = c.contract(j);
        let ok = c.r_tag(&i) == QMaxTag::Ramified && &c.extend(&i) == j;
        out.check(show(j), ok, || format!("I = {} is {}", show(&i), c.r_tag(&i).name()));
    }
    Ok(())
}

fn decomposed_lift_criterion(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !minimal_only(c, Some(MinimalTag::Decomposed)) {
        return Ok(());
    }
    let m = c.conductor();
    let mr = c.conductor_r();
    for (i, t) in c.r_qmax() {
        if !i.is_proper_subset(&mr) {
            continue;
        }
        let lifts: Vec<(&Ideal, QMaxTag)> = c.s_qmax().filter(|(j, _)| !j.is_subset(m) && &c.contract(j) == i).collect();
        let lhs = !lifts.is_empty();
        let decomposed =
            t == QMaxTag::Decomposed && c.r_max.iter().any(|n| n != &mr && &n.intersection(&mr) == i);
        let ramified = t == QMaxTag::Ramified && c.r().radical(i) == mr;
        let rhs = c.shared(i) && (decomposed || ramified);
        let homotypic = lifts.iter().all(|(_, tj)| *tj == t);
        out.check(show(i), lhs == rhs && homotypic, || {
            format!("{} lifts outside M, criterion {rhs}, homotypic {homotypic}", lifts.len())
        });
    }
    Ok(())
}

fn outside_homotypic(c: &Ctx, out: &mut Sink, within_radical: bool) {
    let m = c.conductor();
    let n = c.s().radical(m);
    for (j, t) in c.s_qmax() {
        if j.is_subset(m) {
            out.not_met(show(j), "J lies in the conductor");
            continue;
        }
        if within_radical && !j.is_subset(&n) {
            out.not_met(show(j), "J is not inside the radical of the conductor");
            continue;
        }
        let i = c.contract(j);
        let ok = c.r_tag(&i) == t && (!within_radical || c.shared(&i));
        out.check(show(j), ok, || format!("I = {} is {}", show(&i), c.r_tag(&i).name()));
    }
}

fn decomposed_outside_homotypic(c: &Ctx, out: &mut Sink) -> Result<()> {
    if minimal_only(c, Some(MinimalTag::Decomposed)) {
        outside_homotypic(c, out, false);
    }
    Ok(())
}

fn ramified_outside_homotypic(c: &Ctx, out: &mut Sink) -> Result<()> {
    if minimal_only(c, Some(MinimalTag::Ramified)) {
        outside_homotypic(c, out, false);
    }
    Ok(())
}

fn ramified_radical_contraction(c: &Ctx, out: &mut Sink) -> Result<()> {
    if minimal_only(c, Some(MinimalTag::Ramified)) {
        outside_homotypic(c, out, true);
    }
    Ok(())
}

fn ramified_submaximal_not_qmax(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !minimal_only(c, Some(MinimalTag::Ramified)) {
        return Ok(());
    }
    for i in c.r_proper() {
        if c.r_is_max(i) || !is_submaximal(c.r(), i)? {
            continue;
        }
        if !c.shared(i) {
            out.not_met(show(i), "IS differs from I");
            continue;
        }
        let is = c.extend(i);
        out.check(show(i), !c.s_tag(&is).is_qmax(), || format!("I is {} in S", c.s_tag(&is).name()));
    }
    Ok(())
}

fn ramified_lift_dichotomy(c: &Ctx, out: &mut Sink) -> Result<()> {
    if !minimal_only(c, Some(MinimalTag::Ramified)) {
        return Ok(());
    }
    for (i, t) in c.r_qmax() {
        if t != QMaxTag::Ramified {
            continue;
        }
        if !c.shared(i) {
            out.not_met(show(i), "IS differs from I");
            continue;
        }
        let lifts = find_qmax_lying_over(c.ext, i)?;
        let shape = classify_lying_over_quotient(c.ext, i)?;
        let ok = shape != LyingOverShape::Neither
            && lifts.is_empty() != (shape == LyingOverShape::Idealization)
            && lifts.iter().all(|j| c.s_tag(j) == QMaxTag::Ramified);
        out.check(show(i), ok, || format!("{} lifts, S/I is {shape:?}", lifts.len()));
    }
    Ok(())
}
