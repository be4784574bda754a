use super::{Extension, MinimalTag};
use crate::error::{inconsistent, invalid, Error, Result};
use crate::ideal::Ideal;
use crate::qmax::{qmax_tag, QMaxTag};
use crate::ring::{
    find_isomorphism_fixing, make_idealization, make_idealization_quotient, make_poly_quotient, quotient_ring, Ring,
    RingMap, Shape, TableRing,
};
use fixedbitset::FixedBitSet;
use serde::Serialize;

pub(crate) fn same_type(m: MinimalTag, q: QMaxTag) -> bool {
    matches!(
        (m, q),
        (MinimalTag::Inert, QMaxTag::Inert)
            | (MinimalTag::Decomposed, QMaxTag::Decomposed)
            | (MinimalTag::Ramified, QMaxTag::Ramified)
    )
}

/// Type of an ideal, with the unit ideal reported as not quasi-maximal.
pub(crate) fn tag_or_none(r: &TableRing, i: &Ideal) -> Result<QMaxTag> {
    if i.is_unit() {
        return Ok(QMaxTag::NotQuasiMaximal);
    }
    qmax_tag(r, i)
}

/// log_base(n) when n is an exact power of base.
pub(crate) fn exact_log(base: usize, n: usize) -> Option<usize> {
    if base < 2 {
        return None;
    }
    let (mut k, mut v) = (0, 1usize);
    while v < n {
        v *= base;
        k += 1;
    }
    (v == n).then_some(k)
}

/// For a minimal extension: the conductor is quasi-maximal in S of the same
/// type. `None` when the extension is not minimal.
pub fn conductor_type_check(ext: &Extension) -> Result<Option<bool>> {
    if !ext.is_proper() {
        return Ok(None);
    }
    let t = ext.classify_minimal()?.tag();
    if t == MinimalTag::NotMinimal {
        return Ok(None);
    }
    Ok(Some(same_type(t, qmax_tag(ext.ambient(), ext.conductor())?)))
}

/// Infra-integral with quasi-maximal conductor in S: then minimal of the
/// conductor's type, and the conductor is maximal in R.
pub fn infra_integral_qmax_conductor_check(ext: &Extension) -> Result<Option<bool>> {
    if !ext.is_proper() || !ext.is_infra_integral()? {
        return Ok(None);
    }
    let q = qmax_tag(ext.ambient(), ext.conductor())?;
    if !q.is_qmax() {
        return Ok(None);
    }
    let rl = ext.sub().lattice()?;
    let maximal = rl.is_maximal(rl.position(&ext.conductor_in_sub())?);
    Ok(Some(same_type(ext.classify_minimal()?.tag(), q) && maximal))
}

/// Conductor maximal in R: it is maximal in S exactly when R is its own
/// t-closure in S.
pub fn maximal_conductor_check(ext: &Extension) -> Result<Option<bool>> {
    if !ext.is_proper() {
        return Ok(None);
    }
    let rl = ext.sub().lattice()?;
    if !rl.is_maximal(rl.position(&ext.conductor_in_sub())?) {
        return Ok(None);
    }
    let sl = ext.ambient().lattice()?;
    let in_s = sl.is_maximal(sl.position(ext.conductor())?);
    let t_closed = !ext.t_closure()?.is_proper();
    Ok(Some(in_s == t_closed))
}

/// L_R(N/C) for R-submodules C ⊆ N of S. Walks a composition series by
/// always taking the smallest C' + Ry, then recounts through the local
/// factors of R, where each composition factor of the k-th part has the
/// size of its residue field.
pub fn module_length(ext: &Extension, n: &FixedBitSet, c: &FixedBitSet) -> Result<usize> {
    let (r, s) = (ext.sub(), ext.ambient());
    if !c.is_subset(n) {
        return invalid("module length needs C ⊆ N");
    }
    let mut x = c.clone();
    let mut steps = 0;
    while x != *n {
        let mut best: Option<FixedBitSet> = None;
        for y in n.ones().filter(|&y| !x.contains(y)) {
            let gens = x.ones().chain((0..r.size()).map(|a| s.mul(ext.inclusion().apply(a), y)));
            let next = s.additive_span(gens.collect::<Vec<_>>());
            if best.as_ref().is_none_or(|b| next.count_ones(..) < b.count_ones(..)) {
                best = Some(next);
            }
        }
        x = best.expect("N strictly contains the current submodule");
        steps += 1;
    }
    let lf = r.local_factors();
    let mut total = 0;
    for (k, (factor, _)) in lf.factors.iter().enumerate() {
        let fl = factor.lattice()?;
        let q = factor.size() / fl.get(fl.maximal_ideals()[0]).len();
        let e = ext.inclusion().apply(lf.idempotents[k]);
        let part = |set: &FixedBitSet| {
            let mut out = FixedBitSet::with_capacity(s.size());
            for y in set.ones() {
                out.insert(s.mul(e, y));
            }
            out.count_ones(..)
        };
        let (top, bottom) = (part(n), part(c));
        match exact_log(q, top / bottom) {
            Some(d) if top % bottom == 0 => total += d,
            _ => return inconsistent(format!("local part of N/C has size {top}/{bottom}, not a power of {q}")),
        }
    }
    if total != steps {
        return inconsistent(format!("module length {steps} by chain but {total} by local factor sizes"));
    }
    Ok(steps)
}

/// Both sides of the two conductor criteria (decomposed, ramified) for an
/// extension with T its t-closure, plus the inert branch and the length
/// identity when their hypotheses hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthFormulaReport {
    pub decomposed_lhs: bool,
    pub decomposed_rhs: bool,
    pub ramified_lhs: bool,
    pub ramified_rhs: bool,
    pub inert_branch: Option<bool>,
    pub length_identity: Option<bool>,
}

impl LengthFormulaReport {
    pub fn agree(&self) -> bool {
        self.decomposed_lhs == self.decomposed_rhs
            && self.ramified_lhs == self.ramified_rhs
            && self.inert_branch != Some(false)
            && self.length_identity != Some(false)
    }
}

pub fn length_formula_check(ext: &Extension) -> Result<LengthFormulaReport> {
    if !ext.is_proper() {
        return invalid("R = S has conductor R");
    }
    let (r, s) = (ext.sub(), ext.ambient());
    let c = ext.conductor();
    let tag = qmax_tag(s, c)?;
    let rl = r.lattice()?;
    let v = rl.maximal_over(rl.position(&ext.conductor_in_sub())?).len();
    let t = ext.t_closure()?;
    let decomposed_rhs = if t.is_proper() {
        v == 1 && t.classify_minimal()?.tag() == MinimalTag::Decomposed
    } else {
        v == 2
    };
    let supp = ext.support();
    let ramified_rhs = if ext.is_i_extension()? && supp.len() == 1 {
        let n = s.radical(&ext.extend(&supp[0]));
        let sl = s.lattice()?;
        let degree = if sl.is_maximal(sl.position(&n)?) {
            exact_log(r.size() / supp[0].len(), s.size() / n.len())
        } else {
            None
        };
        c.is_subset(&n) && degree == Some(module_length(ext, n.bits(), c.bits())?)
    } else {
        false
    };
    Ok(LengthFormulaReport {
        decomposed_lhs: tag == QMaxTag::Decomposed,
        decomposed_rhs,
        ramified_lhs: tag == QMaxTag::Ramified,
        ramified_rhs,
        inert_branch: maximal_conductor_check(ext)?,
        length_identity: lemma_length_formula(ext)?,
    })
}

/// For an i-extension over a local R (so S is local with maximal ideal N),
/// L_R(M/C) = L_S(N/C)·[S/N:R/M] − ℓ[R,T], where T is the t-closure and also
/// the seminormalization.
pub fn lemma_length_formula(ext: &Extension) -> Result<Option<bool>> {
    let (r, s) = (ext.sub(), ext.ambient());
    let rl = r.lattice()?;
    if !ext.is_proper() || rl.maximal_ideals().len() != 1 || !ext.is_i_extension()? {
        return Ok(None);
    }
    let sl = s.lattice()?;
    if sl.maximal_ideals().len() != 1 {
        return inconsistent(format!("{ext:?}: i-extension of a local ring with a non-local top"));
    }
    let (m, n) = (rl.maximal_ideals()[0], sl.maximal_ideals()[0]);
    let c = ext.conductor();
    let lhs = rl.chain_length(rl.position(&ext.conductor_in_sub())?, m)?;
    let ls = sl.chain_length(sl.position(c)?, n)?;
    let Some(degree) = exact_log(r.size() / rl.get(m).len(), s.size() / sl.get(n).len()) else {
        return inconsistent(format!("{ext:?}: residue field sizes are not compatible"));
    };
    let t = ext.t_closure()?;
    if t.ambient().size() != ext.seminormalization()?.ambient().size() {
        return Ok(Some(false));
    }
    let ell = t.intermediate_rings()?.length;
    Ok(Some(lhs as i64 == (ls * degree) as i64 - ell as i64))
}

/// All J ∈ QMax(S) with J ∩ R = I, canonically ordered.
pub fn find_qmax_lying_over(ext: &Extension, i: &Ideal) -> Result<Vec<Ideal>> {
    let s = ext.ambient();
    let sl = s.lattice()?;
    let mut out = Vec::new();
    for k in sl.proper() {
        let j = sl.get(k);
        if &ext.contract(j) == i && qmax_tag(s, j)?.is_qmax() {
            out.push(j.clone());
        }
    }
    Ok(out)
}

/// How S/I sits over R/I, for I ramified in R with I = IS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LyingOverShape {
    /// R'(+)(R'/M').
    Idealization,
    /// R'[X]/(tX, X² − tu) for the unit u (index in R/I).
    Twisted { u: usize },
    Neither,
}

/// R'[X]/(tX, X² − tu) for a SPIR R' with maximal ideal M' = R't, t² = 0.
/// Elements are a + by with a ∈ R' and b read modulo M'.
fn make_twisted(rq: &Ring, mq: &Ideal, t: usize, u: usize) -> Result<(Ring, Vec<usize>)> {
    let mut coset = vec![usize::MAX; rq.size()];
    let mut reps = Vec::new();
    for x in 0..rq.size() {
        if coset[x] != usize::MAX {
            continue;
        }
        for y in mq.iter() {
            coset[rq.add(x, y)] = reps.len();
        }
        reps.push(x);
    }
    let m = reps.len();
    let n = rq.size() * m;
    let tu = rq.mul(t, u);
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, b) = (x / m, reps[x % m]);
        for y in 0..n {
            let (c, d) = (y / m, reps[y % m]);
            add.push((rq.add(a, c) * m + coset[rq.add(b, d)]) as u32);
            let first = rq.add(rq.mul(a, c), rq.mul(rq.mul(b, d), tu));
            let second = rq.add(rq.mul(a, d), rq.mul(b, c));
            mul.push((first * m + coset[second]) as u32);
        }
    }
    let z = coset[rq.zero()];
    let label = format!("{}[X]/(tX, X^2 - tu)", rq.label());
    let ring = TableRing::build(n, add, mul, rq.zero() * m + z, rq.one() * m + z, label, Vec::new(), Shape::Plain)?;
    ring.check_axioms()?;
    Ok((ring, (0..rq.size()).map(|a| a * m + z).collect()))
}

/// Classifies S/I as an R/I-algebra by isomorphism search against the
/// idealization R'(+)(R'/M') and each twisted ring R'[X]/(tX, X² − tu).
pub fn classify_lying_over_quotient(ext: &Extension, i: &Ideal) -> Result<LyingOverShape> {
    let (r, s) = (ext.sub(), ext.ambient());
    if qmax_tag(r, i)? != QMaxTag::Ramified || !ext.is_extended_equal(i) {
        return Err(Error::PreconditionViolation(format!("{i:?} is not a ramified ideal shared by R and S")));
    }
    let (rq, pr) = quotient_ring(r, i)?;
    let (sq, ps) = quotient_ring(s, &ext.extend(i))?;
    let mut emb = vec![0; rq.size()];
    for x in 0..r.size() {
        emb[pr.apply(x)] = ps.apply(ext.inclusion().apply(x));
    }
    let mq = Ideal::from_bits(&rq, pr.image_of(&ext.conductor_in_sub()));
    let (ideal, incl, _) = make_idealization_quotient(&rq, &Ideal::unit(&rq), &mq, None)?;
    let fixed: Vec<(usize, usize)> = (0..rq.size()).map(|x| (incl.apply(x), emb[x])).collect();
    if find_isomorphism_fixing(&ideal, &sq, &fixed).is_some() {
        return Ok(LyingOverShape::Idealization);
    }
    let t = (0..rq.size()).find(|&a| rq.principal_ideal(a) == mq && rq.mul(a, a) == rq.zero());
    let Some(t) = t else {
        return inconsistent("R/I is not a SPIR of index two");
    };
    for u in rq.units() {
        let (tw, incl) = make_twisted(&rq, &mq, t, u)?;
        let fixed: Vec<(usize, usize)> = (0..rq.size()).map(|x| (incl[x], emb[x])).collect();
        if find_isomorphism_fixing(&tw, &sq, &fixed).is_some() {
            return Ok(LyingOverShape::Twisted { u });
        }
    }
    Ok(LyingOverShape::Neither)
}

/// Maximal members of {K ⊇ J : f⁻¹(K) = f⁻¹(J)}, optionally with K ⊆ bound.
#[derive(Debug, Clone)]
pub struct MaxUpper {
    pub preimage: Ideal,
    pub candidates: Vec<Ideal>,
    /// The greatest candidate in the canonical ideal order.
    pub canonical: Ideal,
}

pub fn max_upper(f: &RingMap, j: &Ideal, bound: Option<&Ideal>) -> Result<MaxUpper> {
    let i = f.preimage(j);
    if i.is_unit() {
        return invalid("Max-upper needs a proper preimage");
    }
    let tl = f.target().lattice()?;
    let family: Vec<&Ideal> = tl
        .ideals()
        .iter()
        .filter(|k| j.is_subset(k) && bound.is_none_or(|n| k.is_subset(n)) && f.preimage(k) == i)
        .collect();
    let candidates: Vec<Ideal> = family
        .iter()
        .filter(|k| !family.iter().any(|o| k.is_proper_subset(o)))
        .map(|k| (*k).clone())
        .collect();
    let Some(canonical) = candidates.last().cloned() else {
        return invalid("J lies outside the bound");
    };
    Ok(MaxUpper { preimage: i, candidates, canonical })
}

/// Instances checked, instances whose hypothesis failed, and failures.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TransferTally {
    pub checked: usize,
    pub not_met: usize,
    pub failures: Vec<String>,
}

impl TransferTally {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// On R ⊆ R(+)E with retraction f(r, e) = r: quasi-maximal ideals pull back
/// along f and push forward from above Ker f, with J = I + Ker f and
/// I = J ∩ R each way.
pub fn retract_transfer_check(r: &Ring, e: &Ideal) -> Result<TransferTally> {
    let (s, incl, retr) = make_idealization(r, e)?;
    let ext = Extension::new(incl)?;
    let ker = retr.kernel();
    let mut tally = TransferTally::default();
    let rl = r.lattice()?;
    for k in rl.proper() {
        let i = rl.get(k);
        if !qmax_tag(r, i)?.is_qmax() {
            continue;
        }
        let j = retr.preimage(i);
        let ok = qmax_tag(&s, &j)?.is_qmax() && &ext.contract(&j) == i && s.ideal_sum(&ext.extend(i), &ker) == j;
        tally.record(ok, || format!("pullback of {i:?} from {}", r.label()));
    }
    let sl = s.lattice()?;
    for k in sl.proper() {
        let j = sl.get(k);
        if !ker.is_subset(j) || !qmax_tag(&s, j)?.is_qmax() {
            continue;
        }
        let i = Ideal::from_set(r, retr.image_of(j))?;
        let ok = qmax_tag(r, &i)?.is_qmax() && s.ideal_sum(&ext.extend(&i), &ker) == *j && ext.contract(j) == i;
        tally.record(ok, || format!("image of {j:?} in {}", r.label()));
    }
    Ok(tally)
}

/// R local, S = R[X]/(f): I ∈ QMax(R) iff IS ∈ QMax(S), with the same type.
/// Evaluated only when MS is maximal in S; otherwise every ideal counts as
/// hypothesis not met.
pub fn monic_quotient_transfer_check(r: &Ring, f: &[usize]) -> Result<TransferTally> {
    let rl = r.lattice()?;
    if rl.maximal_ideals().len() != 1 {
        return invalid(format!("{} is not local", r.label()));
    }
    let (s, incl) = make_poly_quotient(r, f)?;
    let ext = Extension::new(incl)?;
    let sl = s.lattice()?;
    let mut tally = TransferTally::default();
    let ms = ext.extend(rl.get(rl.maximal_ideals()[0]));
    if !sl.is_maximal(sl.position(&ms)?) {
        tally.not_met = rl.proper().len();
        return Ok(tally);
    }
    for k in rl.proper() {
        let i = rl.get(k);
        let a = qmax_tag(r, i)?;
        let b = tag_or_none(&s, &ext.extend(i))?;
        tally.record(a == b, || format!("{i:?} is {} in {} but its extension is {}", a.name(), r.label(), b.name()));
    }
    Ok(tally)
}
