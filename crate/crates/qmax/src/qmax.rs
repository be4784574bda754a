//! Quasi-maximal ideals: I proper such that for every a ∉ I the ideal I + Ra
//! is R or maximal.

use crate::error::{inconsistent, invalid, Result};
use crate::ideal::Ideal;
use crate::ring::{make_product, quotient_ring, Ring, TableRing};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QMaxTag {
    #[serde(rename = "inert")]
    Inert,
    #[serde(rename = "decomposed")]
    Decomposed,
    #[serde(rename = "ramified")]
    Ramified,
    #[serde(rename = "none")]
    NotQuasiMaximal,
}

impl QMaxTag {
    pub fn name(self) -> &'static str {
        match self {
            QMaxTag::Inert => "inert",
            QMaxTag::Decomposed => "decomposed",
            QMaxTag::Ramified => "ramified",
            QMaxTag::NotQuasiMaximal => "none",
        }
    }

    pub fn is_qmax(self) -> bool {
        self != QMaxTag::NotQuasiMaximal
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QMaxClass {
    Inert,
    /// I = m1 ∩ m2 with m1 ≠ m2 maximal.
    Decomposed { m1: Ideal, m2: Ideal },
    /// m² ⊆ I ⊂ m, I is m-primary and m covers I.
    Ramified { m: Ideal },
    /// I + R·element is neither R nor maximal; `above` is that ideal.
    NotQuasiMaximal { element: usize, above: Ideal },
}

impl QMaxClass {
    pub fn tag(&self) -> QMaxTag {
        match self {
            QMaxClass::Inert => QMaxTag::Inert,
            QMaxClass::Decomposed { .. } => QMaxTag::Decomposed,
            QMaxClass::Ramified { .. } => QMaxTag::Ramified,
            QMaxClass::NotQuasiMaximal { .. } => QMaxTag::NotQuasiMaximal,
        }
    }

    /// Re-checks the witness against the ring.
    pub fn verify(&self, r: &TableRing, i: &Ideal) -> Result<bool> {
        let l = r.lattice()?;
        let k = l.position(i)?;
        Ok(match self {
            QMaxClass::Inert => l.is_maximal(k),
            QMaxClass::Decomposed { m1, m2 } => {
                m1 != m2
                    && l.is_maximal(l.position(m1)?)
                    && l.is_maximal(l.position(m2)?)
                    && &m1.intersection(m2) == i
            }
            QMaxClass::Ramified { m } => {
                let mk = l.position(m)?;
                l.is_maximal(mk)
                    && r.ideal_product(m, m).is_subset(i)
                    && i.is_proper_subset(m)
                    && r.is_primary(i)?
                    && &r.radical(i) == m
            }
            QMaxClass::NotQuasiMaximal { element, above } => {
                !i.contains(*element)
                    && &r.ideal_sum(i, &r.principal_ideal(*element)) == above
                    && !above.is_unit()
                    && !l.is_maximal(l.position(above)?)
            }
        })
    }
}

fn proper_index(r: &TableRing, i: &Ideal) -> Result<usize> {
    let l = r.lattice()?;
    let k = l.position(i)?;
    if k == l.unit() {
        return invalid("the unit ideal is not proper");
    }
    Ok(k)
}

/// First a ∉ I (by index) with I + Ra neither R nor maximal.
pub fn qmax_violation(r: &TableRing, i: &Ideal) -> Result<Option<usize>> {
    proper_index(r, i)?;
    let l = r.lattice()?;
    for a in 0..r.size() {
        if i.contains(a) {
            continue;
        }
        let s = l.position(&r.ideal_sum(i, l.get(l.principal(a))))?;
        if s != l.unit() && !l.is_maximal(s) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

pub fn is_qmax_definition(r: &TableRing, i: &Ideal) -> Result<bool> {
    Ok(qmax_violation(r, i)?.is_none())
}

/// Type tests in the order inert, decomposed, ramified.
pub fn classify_qmax(r: &TableRing, i: &Ideal) -> Result<QMaxClass> {
    let k = proper_index(r, i)?;
    let l = r.lattice()?;
    if l.is_maximal(k) {
        return Ok(QMaxClass::Inert);
    }
    let over = l.maximal_over(k);
    for (a, &m1) in over.iter().enumerate() {
        for &m2 in &over[a + 1..] {
            if &l.get(m1).intersection(l.get(m2)) == i {
                return Ok(QMaxClass::Decomposed { m1: l.get(m1).clone(), m2: l.get(m2).clone() });
            }
        }
    }
    for &m in &over {
        let mi = l.get(m);
        if l.covers(k, m) && r.ideal_product(mi, mi).is_subset(i) && r.is_primary(i)? && &r.radical(i) == mi {
            return Ok(QMaxClass::Ramified { m: mi.clone() });
        }
    }
    match qmax_violation(r, i)? {
        Some(a) => Ok(QMaxClass::NotQuasiMaximal { element: a, above: r.ideal_sum(i, &r.principal_ideal(a)) }),
        None => inconsistent(format!("{i:?} satisfies the definition but has no type")),
    }
}

pub fn qmax_tag(r: &TableRing, i: &Ideal) -> Result<QMaxTag> {
    Ok(classify_qmax(r, i)?.tag())
}

/// Both ideals quasi-maximal and of the same type.
pub fn homotypic(a: QMaxTag, b: QMaxTag) -> bool {
    a.is_qmax() && a == b
}

/// Some maximal ideal covers I.
pub fn is_submaximal(r: &TableRing, i: &Ideal) -> Result<bool> {
    let k = proper_index(r, i)?;
    let l = r.lattice()?;
    Ok(l.upper_covers(k).iter().any(|&m| l.is_maximal(m)))
}

/// Every proper ideal strictly above I is maximal.
pub fn only_maximal_above(r: &TableRing, i: &Ideal) -> Result<bool> {
    let k = proper_index(r, i)?;
    let l = r.lattice()?;
    Ok(l.supersets(k).into_iter().filter(|&j| j != k && j != l.unit()).all(|j| l.is_maximal(j)))
}

/// The seven equivalent characterizations of quasi-maximality, each decided
/// on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QMaxEquivalenceReport {
    pub ideal: Vec<usize>,
    /// 1 definition; 2 every proper ideal of R/I; 3 zero ideal of R/I;
    /// 4 length and primes of R/I; 5 ideal count of R/I; 6 o(I); 7 type.
    pub conditions: [bool; 7],
    pub primes_over_are_maximal: bool,
    pub length: usize,
    pub o: usize,
    pub quotient_ideal_count: usize,
    pub maximal_over: usize,
}

impl QMaxEquivalenceReport {
    pub fn agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0]) && (!self.conditions[0] || self.primes_over_are_maximal)
    }
}

pub fn qmax_equivalence_report(r: &Ring, i: &Ideal) -> Result<QMaxEquivalenceReport> {
    let k = proper_index(r, i)?;
    let l = r.lattice()?;
    let (q, _) = quotient_ring(r, i)?;
    let ql = q.lattice()?;
    let c1 = is_qmax_definition(r, i)?;
    let mut c2 = true;
    for j in ql.proper() {
        if !is_qmax_definition(&q, ql.get(j))? {
            c2 = false;
            break;
        }
    }
    let c3 = is_qmax_definition(&q, ql.get(ql.zero()))?;
    let length = ql.length_of_quotient(ql.zero())?;
    let c4 = (1..=2).contains(&length) && ql.prime_ideals().len() <= 2;
    let big_o = ql.count_big_o();
    let c5 = big_o <= 3 && ((big_o == 3) == (ql.maximal_ideals().len() == 2));
    let o = l.count_o(k)?;
    let maximal_over = l.maximal_over(k).len();
    let c6 = o <= 3 && ((o == 3) == (maximal_over == 2));
    let c7 = classify_qmax(r, i)?.tag().is_qmax();
    let primes_over_are_maximal = l.primes_over(k).iter().all(|&p| l.is_maximal(p));
    Ok(QMaxEquivalenceReport {
        ideal: i.to_vec(),
        conditions: [c1, c2, c3, c4, c5, c6, c7],
        primes_over_are_maximal,
        length,
        o,
        quotient_ideal_count: ql.len(),
        maximal_over,
    })
}

/// When R is a SPIR (local, non-field, principal, nilpotent maximal ideal),
/// the least generator t of its maximal ideal and the nilpotency index.
pub fn is_spir(r: &TableRing) -> Result<Option<(usize, u32)>> {
    let l = r.lattice()?;
    if l.maximal_ideals().len() != 1 {
        return Ok(None);
    }
    let m = l.maximal_ideals()[0];
    if m == l.zero() || !(0..l.len()).all(|k| l.is_principal(k)) {
        return Ok(None);
    }
    let Some(index) = r.nilpotency_index(l.get(m)) else {
        return Ok(None);
    };
    let t = (0..r.size()).find(|&a| l.principal(a) == m).expect("maximal ideal is principal");
    Ok(Some((t, index)))
}

/// (ramified, quotient is a SPIR of index 2), decided separately.
pub fn ramified_vs_spir_index_two(r: &Ring, i: &Ideal) -> Result<(bool, bool)> {
    let ramified = classify_qmax(r, i)?.tag() == QMaxTag::Ramified;
    let (q, _) = quotient_ring(r, i)?;
    let spir = matches!(is_spir(&q)?, Some((_, 2)));
    Ok((ramified, spir))
}

/// Every maximal ideal is an annihilator (0:x).
pub fn is_kasch(r: &TableRing) -> Result<bool> {
    let l = r.lattice()?;
    let zero = Ideal::zero(r);
    let anns: BTreeSet<Vec<usize>> = (0..r.size()).map(|x| r.colon_by_element(&zero, x).to_vec()).collect();
    Ok(l.maximal_ideals().iter().all(|&m| anns.contains(&l.get(m).to_vec())))
}

/// Classification of every proper ideal, in canonical order.
pub fn qmax_all(r: &TableRing) -> Result<Vec<(Ideal, QMaxClass)>> {
    let l = r.lattice()?;
    l.proper().map(|k| Ok((l.get(k).clone(), classify_qmax(r, l.get(k))?))).collect()
}

/// K = ∩QMax(R) and whether J² ⊆ ∩M² ⊆ K ⊆ J.
pub fn k_intersection_and_sandwich(r: &TableRing) -> Result<(Ideal, bool)> {
    let l = r.lattice()?;
    let mut k = Ideal::unit(r);
    for (i, c) in qmax_all(r)? {
        if c.tag().is_qmax() {
            k = k.intersection(&i);
        }
    }
    let j = l.jacobson();
    let mut squares = Ideal::unit(r);
    for &m in l.maximal_ideals() {
        squares = squares.intersection(&r.ideal_product(l.get(m), l.get(m)));
    }
    let ok = r.ideal_product(j, j).is_subset(&squares) && squares.is_subset(&k) && k.is_subset(j);
    Ok((k, ok))
}

fn below(r: &TableRing, m: &Ideal, want: impl Fn(QMaxTag) -> bool) -> Result<Option<Ideal>> {
    let l = r.lattice()?;
    let mk = l.position(m)?;
    if !l.is_maximal(mk) {
        return invalid(format!("{m:?} is not maximal"));
    }
    for k in 0..mk {
        let i = l.get(k);
        if i.is_proper_subset(m) && want(classify_qmax(r, i)?.tag()) {
            return Ok(Some(i.clone()));
        }
    }
    Ok(None)
}

/// Canonically least quasi-maximal ideal strictly inside the maximal ideal M.
pub fn find_qmax_below(r: &TableRing, m: &Ideal) -> Result<Option<Ideal>> {
    below(r, m, |t| t.is_qmax())
}

/// Same, restricted to ramified ideals; empty iff M² = M.
pub fn find_ramified_below(r: &TableRing, m: &Ideal) -> Result<Option<Ideal>> {
    below(r, m, |t| t == QMaxTag::Ramified)
}

/// QMax of a product, computed by definition, against the shapes
/// M_i × M_j × rest and I_i × rest.
pub fn product_qmax_check(factors: &[Ring]) -> Result<bool> {
    if factors.len() < 2 {
        return invalid("product check needs at least two factors");
    }
    let (p, proj) = make_product(factors)?;
    let pl = p.lattice()?;
    let mut actual = BTreeSet::new();
    for k in pl.proper() {
        if is_qmax_definition(&p, pl.get(k))? {
            actual.insert(pl.get(k).to_vec());
        }
    }
    let pull = |parts: &[(usize, &Ideal)]| -> Vec<usize> {
        (0..p.size()).filter(|&x| parts.iter().all(|&(f, i)| i.contains(proj[f].apply(x)))).collect()
    };
    let mut predicted = BTreeSet::new();
    for (a, fa) in factors.iter().enumerate() {
        let la = fa.lattice()?;
        for (i, c) in qmax_all(fa)? {
            if c.tag().is_qmax() {
                predicted.insert(pull(&[(a, &i)]));
            }
        }
        for (b, fb) in factors.iter().enumerate().skip(a + 1) {
            let lb = fb.lattice()?;
            for &ma in la.maximal_ideals() {
                for &mb in lb.maximal_ideals() {
                    predicted.insert(pull(&[(a, la.get(ma)), (b, lb.get(mb))]));
                }
            }
        }
    }
    Ok(actual == predicted)
}
