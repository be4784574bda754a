//! 2-absorbing ideals, the two structure cases for them, and the regular
//! set Λ(I) = {x : (I:x) = I} with the primal tests built on it.

use crate::error::{inconsistent, invalid, Error, Result};
use crate::extension::max_upper;
use crate::ideal::Ideal;
use crate::qmax::{classify_qmax, is_submaximal, QMaxClass};
use crate::ring::{quotient_ring, Ring, RingMap, TableRing};
use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoAbsorbing {
    pub two_absorbing: bool,
    /// Lexicographically least sorted triple with abc ∈ I and ab, bc, ac ∉ I.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_triple: Option<[usize; 3]>,
    /// The predicate was evaluated on (0), which the usual definition excludes.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub nonstandard_zero_ideal: bool,
}

/// Smallest member of each class x ~ ux + i (u a unit, i ∈ I), ascending.
fn class_minima(r: &TableRing, i: &Ideal) -> Vec<usize> {
    let units = r.units();
    let mut seen = FixedBitSet::with_capacity(r.size());
    let mut reps = Vec::new();
    for x in 0..r.size() {
        if seen.contains(x) {
            continue;
        }
        reps.push(x);
        for &u in &units {
            let ux = r.mul(u, x);
            if seen.contains(ux) {
                continue;
            }
            for y in i.iter() {
                seen.insert(r.add(ux, y));
            }
        }
    }
    reps
}

/// Exhaustive over sorted triples. Membership conditions are unchanged by
/// adding elements of I and by unit multiples, and replacing an entry by a
/// smaller equivalent one lowers the sorted triple, so the least violating
/// triple is made of class minima and only those are scanned.
pub fn is_two_absorbing(r: &TableRing, i: &Ideal) -> Result<TwoAbsorbing> {
    if i.is_unit() {
        return invalid("2-absorbing is defined for proper ideals");
    }
    let reps = class_minima(r, i);
    let inside = |x: usize| i.contains(x);
    let triple = (0..reps.len()).into_par_iter().find_map_first(|ia| {
        let a = reps[ia];
        for (ib, &b) in reps.iter().enumerate().skip(ia) {
            let ab = r.mul(a, b);
            if inside(ab) {
                continue;
            }
            for &c in &reps[ib..] {
                if inside(r.mul(ab, c)) && !inside(r.mul(b, c)) && !inside(r.mul(a, c)) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    });
    Ok(TwoAbsorbing { two_absorbing: triple.is_none(), violating_triple: triple, nonstandard_zero_ideal: i.len() == 1 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbsorbStructure {
    /// √I = P prime with P² ⊆ I.
    A { p: Ideal },
    /// √I = P₁ ∩ P₂ with P₁P₂ ⊆ I.
    B { p1: Ideal, p2: Ideal },
}

impl AbsorbStructure {
    pub fn case(&self) -> &'static str {
        match self {
            AbsorbStructure::A { .. } => "a",
            AbsorbStructure::B { .. } => "b",
        }
    }
}

/// Minimal primes over I, in lattice order.
pub fn minimal_primes_over(r: &TableRing, i: &Ideal) -> Result<Vec<Ideal>> {
    let l = r.lattice()?;
    let over: Vec<&Ideal> = l.prime_ideals().iter().map(|&k| l.get(k)).filter(|p| i.is_subset(p)).collect();
    Ok(over.iter().filter(|p| !over.iter().any(|q| q.is_proper_subset(p))).map(|p| (*p).clone()).collect())
}

pub fn badawi_structure(r: &TableRing, i: &Ideal) -> Result<AbsorbStructure> {
    if !is_two_absorbing(r, i)?.two_absorbing {
        return Err(Error::PreconditionViolation(format!("{i:?} is not 2-absorbing in {}", r.label())));
    }
    let rad = r.radical(i);
    match minimal_primes_over(r, i)?.as_slice() {
        [p] if p == &rad && r.ideal_product(p, p).is_subset(i) => Ok(AbsorbStructure::A { p: p.clone() }),
        [p1, p2] if p1.intersection(p2) == rad && r.ideal_product(p1, p2).is_subset(i) => {
            Ok(AbsorbStructure::B { p1: p1.clone(), p2: p2.clone() })
        }
        ps => inconsistent(format!("2-absorbing {i:?} in {} has {} minimal primes without a structure case", r.label(), ps.len())),
    }
}

/// M/I is principal in R/I, i.e. M = I + Rx for some x.
pub fn is_principal_over(r: &TableRing, i: &Ideal, m: &Ideal) -> bool {
    m.iter().any(|x| &r.ideal_sum(i, &r.principal_ideal(x)) == m)
}

/// Quasi-maximality against 2-absorbing plus V(I) ⊆ Max plus M/I principal
/// for every maximal M over I, each decided separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsorbingCharacterization {
    pub qmax: bool,
    pub two_absorbing: bool,
    pub primes_maximal: bool,
    pub principal_over: bool,
}

impl AbsorbingCharacterization {
    pub fn rhs(&self) -> bool {
        self.two_absorbing && self.primes_maximal && self.principal_over
    }

    pub fn agree(&self) -> bool {
        self.qmax == self.rhs()
    }
}

pub fn absorbing_characterization(r: &TableRing, i: &Ideal) -> Result<AbsorbingCharacterization> {
    let l = r.lattice()?;
    let k = l.position(i)?;
    if k == l.unit() {
        return invalid("the unit ideal has no quasi-maximal characterization");
    }
    let primes = l.primes_over(k);
    Ok(AbsorbingCharacterization {
        qmax: classify_qmax(r, i)?.tag().is_qmax(),
        two_absorbing: is_two_absorbing(r, i)?.two_absorbing,
        primes_maximal: primes.iter().all(|&p| l.is_maximal(p)),
        principal_over: l.maximal_over(k).iter().all(|&m| is_principal_over(r, i, l.get(m))),
    })
}

/// For maximal M with M² ≠ M: M² quasi-maximal, M/M² principal and
/// L(M/M²) = 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareOfMaximal {
    pub square_qmax: bool,
    pub principal: bool,
    pub length_one: bool,
}

impl SquareOfMaximal {
    pub fn agree(&self) -> bool {
        self.square_qmax == self.principal && self.principal == self.length_one
    }
}

pub fn square_of_maximal_check(r: &TableRing, m: &Ideal) -> Result<SquareOfMaximal> {
    let l = r.lattice()?;
    let mk = l.position(m)?;
    if !l.is_maximal(mk) {
        return invalid(format!("{m:?} is not maximal in {}", r.label()));
    }
    let sq = r.ideal_product(m, m);
    if &sq == m {
        return Err(Error::PreconditionViolation(format!("{m:?} is idempotent in {}", r.label())));
    }
    // Submodules of M/M² are the ideals between M² and M.
    let length = l.chain_length(l.position(&sq)?, mk)?;
    Ok(SquareOfMaximal {
        square_qmax: classify_qmax(r, &sq)?.tag().is_qmax(),
        principal: is_principal_over(r, &sq, m),
        length_one: length == 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSet {
    pub ring: u64,
    pub members: FixedBitSet,
}

impl LambdaSet {
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    /// Contains 1, closed under products, saturated and disjoint from I.
    pub fn invariants_hold(&self, r: &TableRing, i: &Ideal) -> bool {
        let n = r.size();
        self.contains(r.one())
            && i.iter().all(|x| !self.contains(x))
            && (0..n).all(|x| {
                (0..n).all(|y| self.contains(r.mul(x, y)) == (self.contains(x) && self.contains(y)))
            })
    }
}

/// Computed through (I:x) = I and cross-checked against the elements whose
/// image in R/I is regular.
pub fn lambda_set(r: &Ring, i: &Ideal) -> Result<LambdaSet> {
    if i.is_unit() {
        return invalid("Λ is defined for proper ideals");
    }
    let (q, pi) = quotient_ring(r, i)?;
    let mut members = FixedBitSet::with_capacity(r.size());
    for x in 0..r.size() {
        let by_colon = &r.colon_by_element(i, x) == i;
        if by_colon != !q.is_zero_divisor(pi.apply(x)) {
            return inconsistent(format!("Λ({i:?}) in {}: colon and regularity disagree at {x}", r.label()));
        }
        if by_colon {
            members.insert(x);
        }
    }
    Ok(LambdaSet { ring: r.id(), members })
}

fn complement(r: &TableRing, lambda: &LambdaSet) -> FixedBitSet {
    let mut c = r.all_elements();
    c.difference_with(&lambda.members);
    c
}

/// R∖Λ(I) is a prime ideal.
pub fn is_primal(r: &Ring, i: &Ideal) -> Result<bool> {
    let c = complement(r, &lambda_set(r, i)?);
    let l = r.lattice()?;
    Ok(l.prime_ideals().iter().any(|&p| l.get(p).bits() == &c))
}

/// R∖Λ(I) is a union of prime ideals.
pub fn is_semi_primal(r: &Ring, i: &Ideal) -> Result<bool> {
    let c = complement(r, &lambda_set(r, i)?);
    let l = r.lattice()?;
    let mut union = FixedBitSet::with_capacity(r.size());
    for &p in l.prime_ideals() {
        if l.get(p).bits().is_subset(&c) {
            union.union_with(l.get(p).bits());
        }
    }
    Ok(union == c)
}

/// The colon ideals (I:x) for a submaximal quasi-maximal I: decomposed
/// I = M ∩ M' gives M for x ∈ M'∖M and I off M ∪ M'; ramified I gives M on
/// M∖I and I off M.
pub fn colon_behavior_check(r: &TableRing, i: &Ideal) -> Result<bool> {
    let class = classify_qmax(r, i)?;
    let l = r.lattice()?;
    if !class.tag().is_qmax() || !is_submaximal(r, i)? || l.is_maximal(l.position(i)?) {
        return Err(Error::PreconditionViolation(format!("{i:?} is not a submaximal quasi-maximal ideal of {}", r.label())));
    }
    let unit = Ideal::unit(r);
    let ok = (0..r.size()).all(|x| {
        let got = r.colon_by_element(i, x);
        let want = if i.contains(x) {
            &unit
        } else {
            match &class {
                QMaxClass::Decomposed { m1, m2 } => match (m1.contains(x), m2.contains(x)) {
                    (false, true) => m1,
                    (true, false) => m2,
                    _ => i,
                },
                QMaxClass::Ramified { m } if m.contains(x) => m,
                _ => i,
            }
        };
        &got == want
    });
    Ok(ok)
}

/// Λ under a ring map f with I = f⁻¹(J).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaMorphismReport {
    /// f⁻¹Λ(J) ⊆ Λ(I).
    pub containment: bool,
    /// Equality, checked when f is onto.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    /// f⁻¹(J : f(x)) = I for every x ∈ Λ(I).
    pub colon_preimage: bool,
    /// f⁻¹Λ(K) = Λ(f⁻¹K) for every Max-upper K of J.
    pub max_upper: bool,
}

impl LambdaMorphismReport {
    pub fn agree(&self) -> bool {
        self.containment && self.equality != Some(false) && self.colon_preimage && self.max_upper
    }
}

fn preimage_set(f: &RingMap, set: &FixedBitSet) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(f.source().size());
    for x in (0..f.source().size()).filter(|&x| set.contains(f.apply(x))) {
        out.insert(x);
    }
    out
}

pub fn lambda_morphism_check(f: &RingMap, j: &Ideal) -> Result<LambdaMorphismReport> {
    if j.is_unit() {
        return invalid("J must be proper");
    }
    let (r, s) = (f.source(), f.target());
    let i = f.preimage(j);
    let lam_i = lambda_set(r, &i)?;
    let pulled = preimage_set(f, &lambda_set(s, j)?.members);
    let colon_preimage = lam_i.members.ones().all(|x| f.preimage(&s.colon_by_element(j, f.apply(x))) == i);
    let mut max_ok = true;
    for k in max_upper(f, j, None)?.candidates {
        let lhs = preimage_set(f, &lambda_set(s, &k)?.members);
        max_ok &= lhs == lambda_set(r, &f.preimage(&k))?.members;
    }
    Ok(LambdaMorphismReport {
        containment: pulled.is_subset(&lam_i.members),
        equality: f.is_surjective().then(|| pulled == lam_i.members),
        colon_preimage,
        max_upper: max_ok,
    })
}

/// For M-primary I, compares 2-absorbing in R with 2-absorbing of the image
/// in the local factor at M. `None` when I is not primary to a maximal ideal.
pub fn local_factor_absorbing_check(r: &Ring, i: &Ideal) -> Result<Option<bool>> {
    let l = r.lattice()?;
    let rad = r.radical(i);
    if i.is_unit() || !l.is_maximal(l.position(&rad)?) {
        return Ok(None);
    }
    let lf = r.local_factors();
    let k = lf.factor_for(&rad).ok_or_else(|| Error::InternalInconsistency("maximal ideal without local factor".into()))?;
    let local = lf.project(k, i);
    Ok(Some(is_two_absorbing(r, i)?.two_absorbing == is_two_absorbing(&lf.factors[k].0, &local)?.two_absorbing))
}

/// JSON view for one ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsorbingReport {
    pub two_absorbing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_triple: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub nonstandard_zero_ideal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<&'static str>,
    pub primal: bool,
    pub semi_primal: bool,
    pub lambda: Vec<usize>,
}

pub fn absorbing_report(r: &Ring, i: &Ideal) -> Result<AbsorbingReport> {
    let t = is_two_absorbing(r, i)?;
    let structure = if t.two_absorbing { Some(badawi_structure(r, i)?.case()) } else { None };
    Ok(AbsorbingReport {
        two_absorbing: t.two_absorbing,
        violating_triple: t.violating_triple,
        nonstandard_zero_ideal: t.nonstandard_zero_ideal,
        structure,
        primal: is_primal(r, i)?,
        semi_primal: is_semi_primal(r, i)?,
        lambda: lambda_set(r, i)?.to_vec(),
    })
}
