use super::Extension;
use crate::error::{inconsistent, Error, Result};
use crate::ideal::Ideal;
use crate::limits;
use crate::ring::{quotient_ring, subring_closure, RingMap};
use fixedbitset::FixedBitSet;
use std::collections::HashSet;

/// All rings T with R ⊆ T ⊆ S, as subsets of S ordered by size then
/// members; index 0 is R and the last is S.
pub struct IntermediateRings {
    pub rings: Vec<FixedBitSet>,
    /// ℓ[R,S], the longest chain length.
    pub length: usize,
    /// Indices of one chain realizing the length.
    pub chain: Vec<usize>,
}

impl IntermediateRings {
    pub(crate) fn compute(ext: &Extension) -> Result<IntermediateRings> {
        let s = ext.ambient();
        if s.size() > limits::max_intermediate() {
            return Err(Error::ResourceLimit(format!(
                "intermediate-ring enumeration capped at |S| <= {}, got {}",
                limits::max_intermediate(),
                s.size()
            )));
        }
        let start = ext.image().clone();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        seen.insert(start.clone());
        let mut rings = vec![start];
        let mut i = 0;
        while i < rings.len() {
            let t = rings[i].clone();
            let members: Vec<usize> = t.ones().collect();
            for x in (0..s.size()).filter(|&x| !t.contains(x)) {
                let mut seeds = members.clone();
                seeds.push(x);
                let next = subring_closure(s, &seeds);
                if seen.insert(next.clone()) {
                    rings.push(next);
                }
            }
            i += 1;
        }
        rings.sort_by(|a, b| a.count_ones(..).cmp(&b.count_ones(..)).then_with(|| a.ones().cmp(b.ones())));
        let k = rings.len();
        let mut best = vec![0usize; k];
        let mut prev = vec![usize::MAX; k];
        for j in 1..k {
            for i in 0..j {
                if rings[i].count_ones(..) < rings[j].count_ones(..)
                    && rings[i].is_subset(&rings[j])
                    && (prev[j] == usize::MAX || best[i] + 1 > best[j])
                {
                    best[j] = best[i] + 1;
                    prev[j] = i;
                }
            }
        }
        let mut chain = vec![k - 1];
        while let Some(&last) = chain.last() {
            if last == 0 {
                break;
            }
            chain.push(prev[last]);
        }
        chain.reverse();
        Ok(IntermediateRings { length: best[k - 1], rings, chain })
    }

    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }
}

/// One prime Q of S with P = Q ∩ R and the residue map R/P → S/Q.
pub struct ResidualEntry {
    pub q: Ideal,
    pub p: Ideal,
    pub map: RingMap,
    pub is_isomorphism: bool,
}

pub struct ResidualData {
    pub entries: Vec<ResidualEntry>,
}

impl ResidualData {
    /// Spec(S) → Spec(R) injective.
    pub fn is_i_extension(&self) -> bool {
        let mut seen = HashSet::new();
        self.entries.iter().all(|e| seen.insert(e.p.to_vec()))
    }

    /// Every residual extension is an isomorphism.
    pub fn is_infra_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_isomorphism)
    }

    pub fn is_subintegral(&self) -> bool {
        self.is_infra_integral() && self.is_i_extension()
    }
}

impl Extension {
    pub fn residual_data(&self) -> Result<ResidualData> {
        let (r, s) = (self.sub(), self.ambient());
        let sl = s.lattice()?;
        let mut entries = Vec::new();
        for &qk in sl.prime_ideals() {
            let q = sl.get(qk).clone();
            let p = self.contract(&q);
            let (rp, pr) = quotient_ring(r, &p)?;
            let (sq, ps) = quotient_ring(s, &q)?;
            let mut image = vec![usize::MAX; rp.size()];
            for x in 0..r.size() {
                image[pr.apply(x)] = ps.apply(self.inclusion().apply(x));
            }
            let map = RingMap::new(rp.clone(), sq.clone(), image)?;
            if !map.is_injective() {
                return inconsistent("residue map between fields is not injective");
            }
            entries.push(ResidualEntry { is_isomorphism: rp.size() == sq.size(), q, p, map });
        }
        Ok(ResidualData { entries })
    }

    pub fn is_i_extension(&self) -> Result<bool> {
        Ok(self.residual_data()?.is_i_extension())
    }

    pub fn is_infra_integral(&self) -> Result<bool> {
        Ok(self.residual_data()?.is_infra_integral())
    }

    pub fn is_subintegral(&self) -> Result<bool> {
        Ok(self.residual_data()?.is_subintegral())
    }

    fn greatest_with(&self, want: impl Fn(&ResidualData) -> bool) -> Result<Extension> {
        let inter = self.intermediate_rings()?;
        let mut good = Vec::new();
        for t in &inter.rings {
            if want(&self.lower_part(t)?.residual_data()?) {
                good.push(t);
            }
        }
        let top = good
            .iter()
            .find(|t| good.iter().all(|u| u.is_subset(t)))
            .ok_or_else(|| Error::InternalInconsistency("no greatest intermediate ring with the property".into()))?;
        self.lower_part(top)
    }

    /// Greatest T ∈ [R,S] with R ⊆ T subintegral.
    pub fn seminormalization(&self) -> Result<Extension> {
        self.greatest_with(|d| d.is_subintegral())
    }

    /// Greatest T ∈ [R,S] with R ⊆ T infra-integral.
    pub fn t_closure(&self) -> Result<Extension> {
        self.greatest_with(|d| d.is_infra_integral())
    }
}
