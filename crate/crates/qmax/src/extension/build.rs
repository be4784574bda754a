use super::{Extension, MinimalTag};
use crate::error::{inconsistent, Error, Result};
use crate::ideal::Ideal;
use crate::qmax::{classify_qmax, QMaxClass};
use crate::ring::{find_isomorphism, make_idealization, quotient_ring, subring_closure, Ring, Shape};
use fixedbitset::FixedBitSet;
use serde::Serialize;
use std::fmt;

/// Why no subring R with (R:S) = I and R ⊂ S minimal exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuildFailure {
    /// Ramified I whose residue field S/M has characteristic different from S/I.
    CharacteristicMismatch,
    /// Decomposed I = M₁ ∩ M₂ with |S/M₁| ≠ |S/M₂|.
    ResidueFieldMismatch,
    /// Inert I with S/I a prime field.
    NoMaximalSubfield,
}

impl fmt::Display for BuildFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BuildFailure::CharacteristicMismatch => "characteristic mismatch",
            BuildFailure::ResidueFieldMismatch => "residue-field mismatch",
            BuildFailure::NoMaximalSubfield => "no maximal subfield",
        })
    }
}

#[derive(Debug)]
pub enum BuildOutcome {
    Built { ext: Extension, tag: MinimalTag },
    Failed(BuildFailure),
}

impl BuildOutcome {
    pub fn extension(&self) -> Option<&Extension> {
        match self {
            BuildOutcome::Built { ext, .. } => Some(ext),
            BuildOutcome::Failed(_) => None,
        }
    }
}

fn smallest_prime_factor(k: u32) -> u32 {
    (2..=k).find(|d| k.is_multiple_of(*d)).unwrap_or(k)
}

/// {s ∈ S : s^e − s ∈ I}, the preimage of the fixed points of x ↦ x^e on S/I.
fn frobenius_preimage(s: &Ring, i: &Ideal, e: u64) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(s.size());
    for x in 0..s.size() {
        if i.contains(s.sub(s.pow(x, e), x)) {
            set.insert(x);
        }
    }
    set
}

/// Given I ∈ QMax(S), finds a subring R with (R:S) = I and R ⊂ S minimal of
/// the same type as I, or names the condition that rules one out.
pub fn build_minimal_from_qmax(s: &Ring, i: &Ideal) -> Result<BuildOutcome> {
    let class = classify_qmax(s, i)?;
    let (set, tag) = match &class {
        QMaxClass::NotQuasiMaximal { .. } => {
            return Err(Error::PreconditionViolation(format!("ideal {i:?} is not quasi-maximal in {}", s.label())))
        }
        QMaxClass::Inert => {
            let (f, _) = quotient_ring(s, i)?;
            let p = f.characteristic() as u64;
            let k = super::field_degree(&f).ok_or_else(|| Error::InternalInconsistency("S/I is not a field".into()))?;
            if k == 1 {
                return Ok(BuildOutcome::Failed(BuildFailure::NoMaximalSubfield));
            }
            let d = k / smallest_prime_factor(k);
            (frobenius_preimage(s, i, p.pow(d)), MinimalTag::Inert)
        }
        QMaxClass::Decomposed { m1, m2 } => {
            if m1.len() != m2.len() {
                return Ok(BuildOutcome::Failed(BuildFailure::ResidueFieldMismatch));
            }
            let (f1, p1) = quotient_ring(s, m1)?;
            let (f2, p2) = quotient_ring(s, m2)?;
            let phi = find_isomorphism(&f1, &f2)
                .ok_or_else(|| Error::InternalInconsistency("finite fields of equal order are not isomorphic".into()))?;
            let mut set = FixedBitSet::with_capacity(s.size());
            for x in 0..s.size() {
                if phi.apply(p1.apply(x)) == p2.apply(x) {
                    set.insert(x);
                }
            }
            (set, MinimalTag::Decomposed)
        }
        QMaxClass::Ramified { m } => {
            let (fm, _) = quotient_ring(s, m)?;
            let (fi, _) = quotient_ring(s, i)?;
            if fm.characteristic() != fi.characteristic() {
                return Ok(BuildOutcome::Failed(BuildFailure::CharacteristicMismatch));
            }
            (frobenius_preimage(s, i, fm.size() as u64), MinimalTag::Ramified)
        }
    };
    let seeds: Vec<usize> = set.ones().collect();
    if subring_closure(s, &seeds) != set {
        return inconsistent(format!("{tag:?} candidate for {i:?} in {} is not a subring", s.label()));
    }
    let ext = Extension::from_subset(s, &set, format!("{}-subring of {}", tag_name(tag), s.label()))?;
    if ext.conductor() != i {
        return inconsistent(format!("built subring of {} has conductor {:?} instead of {i:?}", s.label(), ext.conductor()));
    }
    let got = ext.classify_minimal()?.tag();
    if got != tag {
        return inconsistent(format!("built subring of {} is {got:?}, expected {tag:?}", s.label()));
    }
    Ok(BuildOutcome::Built { ext, tag })
}

fn tag_name(t: MinimalTag) -> &'static str {
    match t {
        MinimalTag::Inert => "inert",
        MinimalTag::Decomposed => "decomposed",
        MinimalTag::Ramified => "ramified",
        MinimalTag::NotMinimal => "non-minimal",
    }
}

/// R(+)I ⊂ R(+)J for ideals I ≺ J of R. Checks that the extension is minimal
/// ramified with conductor (I:J)(+)I.
pub fn idealization_minimal(r: &Ring, i: &Ideal, j: &Ideal) -> Result<Extension> {
    let l = r.lattice()?;
    if !l.covers(l.position(i)?, l.position(j)?) {
        return Err(Error::PreconditionViolation(format!("{i:?} is not covered by {j:?} in {}", r.label())));
    }
    let (s, _, retr) = make_idealization(r, j)?;
    let Shape::Idealization { module, .. } = s.shape() else {
        return inconsistent("idealization lost its shape");
    };
    let m = module.len();
    let second = |x: usize| module[x % m];
    let mut sub = FixedBitSet::with_capacity(s.size());
    for x in 0..s.size() {
        if i.contains(second(x)) {
            sub.insert(x);
        }
    }
    let label = format!("{}(+){:?}", r.label(), i.to_vec());
    let ext = Extension::from_subset(&s, &sub, label)?;
    let colon = r.colon(i, j);
    let mut expected = FixedBitSet::with_capacity(s.size());
    for x in (0..s.size()).filter(|&x| colon.contains(retr.apply(x)) && i.contains(second(x))) {
        expected.insert(x);
    }
    if ext.conductor().bits() != &expected {
        return inconsistent(format!("conductor of {ext:?} differs from (I:J)(+)I"));
    }
    if ext.classify_minimal()?.tag() != MinimalTag::Ramified {
        return inconsistent(format!("{ext:?} is not minimal ramified"));
    }
    Ok(ext)
}
