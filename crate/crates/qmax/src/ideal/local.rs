use super::Ideal;
use crate::ring::{materialize_subset, Ring, RingMap};
use fixedbitset::FixedBitSet;

/// R ≅ ∏ eR over the primitive idempotents e.
pub struct LocalFactorization {
    pub ring: u64,
    pub idempotents: Vec<usize>,
    pub factors: Vec<(Ring, RingMap)>,
}

impl LocalFactorization {
    pub(crate) fn compute(r: &Ring) -> LocalFactorization {
        let idem = r.idempotents();
        let primitive: Vec<usize> = idem
            .iter()
            .copied()
            .filter(|&e| e != r.zero())
            .filter(|&e| !idem.iter().any(|&f| f != r.zero() && f != e && r.mul(e, f) == f))
            .collect();
        let factors = primitive
            .iter()
            .map(|&e| {
                let mut set = FixedBitSet::with_capacity(r.size());
                for x in 0..r.size() {
                    set.insert(r.mul(e, x));
                }
                let label = format!("{}·{}", r.label(), e);
                let (factor, elems) = materialize_subset(r, &set, e, label).expect("eR is a ring with unit e");
                let mut pos = vec![usize::MAX; r.size()];
                for (y, &x) in elems.iter().enumerate() {
                    pos[x] = y;
                }
                let image = (0..r.size()).map(|x| pos[r.mul(e, x)]).collect();
                let proj = RingMap::new_unchecked(r.clone(), factor.clone(), image).expect("projection in range");
                (factor, proj)
            })
            .collect();
        LocalFactorization { ring: r.id(), idempotents: primitive, factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factor whose idempotent lies outside the maximal ideal `m`.
    pub fn factor_for(&self, m: &Ideal) -> Option<usize> {
        let hits: Vec<usize> = (0..self.len()).filter(|&k| !m.contains(self.idempotents[k])).collect();
        (hits.len() == 1).then(|| hits[0])
    }

    /// Image eI of an ideal in factor k, as an ideal of that factor.
    pub fn project(&self, k: usize, i: &Ideal) -> Ideal {
        let (f, p) = &self.factors[k];
        let mut s = FixedBitSet::with_capacity(f.size());
        for x in i.iter() {
            s.insert(p.apply(x));
        }
        Ideal::from_bits(f, s)
    }
}
