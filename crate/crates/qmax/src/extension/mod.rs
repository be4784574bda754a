//! Ring extensions R ⊆ S given by an injective homomorphism.

mod build;
mod checks;
mod intermediate;
mod minimal;
pub mod transfer;

pub use build::{build_minimal_from_qmax, idealization_minimal, BuildFailure, BuildOutcome};
pub use checks::{
    module_length,
    classify_lying_over_quotient, conductor_type_check, find_qmax_lying_over, infra_integral_qmax_conductor_check,
    length_formula_check, lemma_length_formula, max_upper, maximal_conductor_check, monic_quotient_transfer_check,
    retract_transfer_check, LengthFormulaReport, LyingOverShape, MaxUpper, TransferTally,
};
pub use intermediate::{IntermediateRings, ResidualData, ResidualEntry};
pub use minimal::{MinimalTag, MinimalType};

use crate::error::{invalid, Result};
use crate::ideal::Ideal;
use crate::ring::{materialize_subset, subring_closure, Ring, RingMap, TableRing};
use fixedbitset::FixedBitSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

pub struct Extension {
    map: RingMap,
    image: FixedBitSet,
    back: Vec<usize>,
    conductor: OnceLock<Ideal>,
    support: OnceLock<Vec<Ideal>>,
    intermediate: OnceLock<Result<Arc<IntermediateRings>>>,
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Extension({} ⊆ {})", self.sub().label(), self.ambient().label())
    }
}

impl Clone for Extension {
    fn clone(&self) -> Self {
        Extension::new(self.map.clone()).expect("already validated")
    }
}

impl Extension {
    /// `map` must be an injective unital homomorphism.
    pub fn new(map: RingMap) -> Result<Extension> {
        if !map.is_injective() {
            return invalid("extension map is not injective");
        }
        let image = map.image_set();
        let mut back = vec![usize::MAX; map.target().size()];
        for x in 0..map.source().size() {
            back[map.apply(x)] = x;
        }
        Ok(Extension {
            map,
            image,
            back,
            conductor: OnceLock::new(),
            support: OnceLock::new(),
            intermediate: OnceLock::new(),
        })
    }

    /// The subring of S generated by `seeds`, as an extension into S.
    pub fn subring_generated(s: &Ring, seeds: &[usize]) -> Result<Extension> {
        let set = subring_closure(s, seeds);
        let label = format!("sub({}, {:?})", s.label(), seeds);
        Self::from_subset(s, &set, label)
    }

    /// Materializes a subring given as a closed subset of S.
    pub fn from_subset(s: &Ring, set: &FixedBitSet, label: String) -> Result<Extension> {
        let (r, elems) = materialize_subset(s, set, s.one(), label)?;
        let map = RingMap::new_unchecked(r, s.clone(), elems)?;
        Self::new(map)
    }

    pub fn sub(&self) -> &Ring {
        self.map.source()
    }

    pub fn ambient(&self) -> &Ring {
        self.map.target()
    }

    pub fn inclusion(&self) -> &RingMap {
        &self.map
    }

    /// R as a subset of S.
    pub fn image(&self) -> &FixedBitSet {
        &self.image
    }

    pub fn is_proper(&self) -> bool {
        self.sub().size() < self.ambient().size()
    }

    /// The element of R mapping to s, if any.
    pub fn to_sub(&self, s: usize) -> Option<usize> {
        let x = self.back[s];
        (x != usize::MAX).then_some(x)
    }

    /// Finite extensions are integral.
    pub fn is_integral(&self) -> bool {
        true
    }

    /// (R:S) = {x ∈ S : xS ⊆ R}, an ideal of S.
    pub fn conductor(&self) -> &Ideal {
        self.conductor.get_or_init(|| {
            let s = self.ambient();
            let mut c = FixedBitSet::with_capacity(s.size());
            for x in self.image.ones() {
                if (0..s.size()).all(|y| self.image.contains(s.mul(x, y))) {
                    c.insert(x);
                }
            }
            Ideal::from_bits(s, c)
        })
    }

    /// The conductor viewed as an ideal of R.
    pub fn conductor_in_sub(&self) -> Ideal {
        self.contract(self.conductor())
    }

    /// IS: the ideal of S generated by the image of I.
    pub fn extend(&self, i: &Ideal) -> Ideal {
        let gens: Vec<usize> = i.iter().map(|x| self.map.apply(x)).collect();
        self.ambient().ideal_generated(&gens)
    }

    /// J ∩ R.
    pub fn contract(&self, j: &Ideal) -> Ideal {
        self.map.preimage(j)
    }

    /// Whether an ideal of S, as a set, lies inside R.
    pub fn ideal_inside_sub(&self, j: &Ideal) -> bool {
        j.bits().is_subset(&self.image)
    }

    /// An ideal of S contained in R, read as an ideal of R.
    pub fn pull_inside(&self, j: &Ideal) -> Result<Ideal> {
        if !self.ideal_inside_sub(j) {
            return invalid("ideal is not contained in the subring");
        }
        Ok(self.contract(j))
    }

    /// Whether IS equals I as a subset of S.
    pub fn is_extended_equal(&self, i: &Ideal) -> bool {
        let e = self.extend(i);
        e.len() == i.len()
    }

    /// Maximal ideals M of R whose local factor e_M·R differs from e_M·S.
    pub fn support(&self) -> &[Ideal] {
        self.support.get_or_init(|| {
            let r = self.sub();
            let s = self.ambient();
            let l = r.lattice().expect("lattice of the subring");
            let lf = r.local_factors();
            let mut out = Vec::new();
            for &m in l.maximal_ideals() {
                let k = lf.factor_for(l.get(m)).expect("each maximal ideal misses one idempotent");
                let e = self.map.apply(lf.idempotents[k]);
                let mut es = FixedBitSet::with_capacity(s.size());
                for y in 0..s.size() {
                    es.insert(s.mul(e, y));
                }
                if es.count_ones(..) != lf.factors[k].0.size() {
                    out.push(l.get(m).clone());
                }
            }
            out
        })
    }

    pub fn in_support(&self, m: &Ideal) -> bool {
        self.support().contains(m)
    }

    /// Lattice [R, S] of intermediate rings (|S| under the enumeration cap).
    pub fn intermediate_rings(&self) -> Result<Arc<IntermediateRings>> {
        self.intermediate.get_or_init(|| IntermediateRings::compute(self).map(Arc::new)).clone()
    }

    /// Minimality: every element outside R generates S together with R.
    pub fn is_minimal(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let s = self.ambient();
        let base: Vec<usize> = self.image.ones().collect();
        (0..s.size()).filter(|&x| !self.image.contains(x)).all(|x| {
            let mut seeds = base.clone();
            seeds.push(x);
            subring_closure(s, &seeds).count_ones(..) == s.size()
        })
    }

    /// The extension T ⊆ S for an intermediate ring T given as a subset.
    pub fn upper_part(&self, t: &FixedBitSet) -> Result<Extension> {
        Extension::from_subset(self.ambient(), t, format!("{}[{} elems]", self.ambient().label(), t.count_ones(..)))
    }

    /// The extension R ⊆ T for an intermediate ring T given as a subset.
    pub fn lower_part(&self, t: &FixedBitSet) -> Result<Extension> {
        let upper = self.upper_part(t)?;
        let image = (0..self.sub().size())
            .map(|x| upper.to_sub(self.map.apply(x)).expect("R lies inside T"))
            .collect();
        Extension::new(RingMap::new_unchecked(self.sub().clone(), upper.sub().clone(), image)?)
    }
}

/// `S/I` as a finite field's degree over its prime field, when it is one.
pub(crate) fn field_degree(f: &TableRing) -> Option<u32> {
    if !f.is_field() {
        return None;
    }
    let p = f.characteristic();
    let mut k = 0;
    let mut n = f.size();
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        k += 1;
    }
    Some(k)
}
