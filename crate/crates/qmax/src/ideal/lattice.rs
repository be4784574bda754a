use super::Ideal;
use crate::error::{inconsistent, invalid, Error, Result};
use crate::limits;
use crate::ring::TableRing;
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

/// All ideals of a ring in canonical order, with covering data.
pub struct IdealLattice {
    ring: u64,
    ideals: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    principal: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    maximal: Vec<usize>,
    prime: Vec<usize>,
    jacobson: Ideal,
    nilradical: Ideal,
}

impl IdealLattice {
    /// Sum-closure of the principal ideals, then canonical sort.
    pub(crate) fn compute(r: &TableRing) -> Result<IdealLattice> {
        let cap = limits::max_ideals();
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut all: Vec<Ideal> = Vec::new();
        let mut principal_raw = Vec::with_capacity(r.size());
        for a in 0..r.size() {
            let p = r.principal_ideal(a);
            let k = *index.entry(p.bits().clone()).or_insert_with(|| {
                all.push(p.clone());
                all.len() - 1
            });
            principal_raw.push(k);
        }
        let generators = all.len();
        let mut i = 0;
        while i < all.len() {
            for g in 0..generators {
                if all[g].is_subset(&all[i]) {
                    continue;
                }
                let s = r.ideal_sum(&all[i], &all[g]);
                if !index.contains_key(s.bits()) {
                    if all.len() >= cap {
                        return Err(Error::ResourceLimit(format!(
                            "{} has more than {cap} ideals",
                            r.label()
                        )));
                    }
                    index.insert(s.bits().clone(), all.len());
                    all.push(s);
                }
            }
            i += 1;
        }

        let mut order: Vec<usize> = (0..all.len()).collect();
        order.sort_by(|&a, &b| all[a].cmp(&all[b]));
        let mut rank = vec![0; all.len()];
        for (pos, &old) in order.iter().enumerate() {
            rank[old] = pos;
        }
        let ideals: Vec<Ideal> = order.iter().map(|&old| all[old].clone()).collect();
        let index: HashMap<FixedBitSet, usize> =
            ideals.iter().enumerate().map(|(k, id)| (id.bits().clone(), k)).collect();
        let principal = principal_raw.iter().map(|&k| rank[k]).collect();

        let m = ideals.len();
        let mut up = vec![Vec::new(); m];
        let mut down = vec![Vec::new(); m];
        for lo in 0..m {
            let mut covers: Vec<usize> = Vec::new();
            for hi in lo + 1..m {
                if ideals[hi].len() > ideals[lo].len()
                    && ideals[lo].is_subset(&ideals[hi])
                    && !covers.iter().any(|&c| ideals[c].is_subset(&ideals[hi]))
                {
                    covers.push(hi);
                }
            }
            for &hi in &covers {
                down[hi].push(lo);
            }
            up[lo] = covers;
        }

        let unit = m - 1;
        let maximal: Vec<usize> = (0..unit).filter(|&k| up[k] == [unit]).collect();
        let mut prime = Vec::new();
        for k in 0..unit {
            if r.is_prime(&ideals[k])? {
                prime.push(k);
            }
        }
        let mut jacobson = ideals[unit].clone();
        for &k in &maximal {
            jacobson = jacobson.intersection(&ideals[k]);
        }
        let mut nil = FixedBitSet::with_capacity(r.size());
        for x in r.nilpotents() {
            nil.insert(x);
        }
        let nilradical = Ideal::from_bits(r, nil);

        Ok(IdealLattice { ring: r.id(), ideals, index, principal, up, down, maximal, prime, jacobson, nilradical })
    }

    pub fn ring(&self) -> u64 {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn get(&self, k: usize) -> &Ideal {
        &self.ideals[k]
    }

    /// Index of the unit ideal (always last).
    pub fn unit(&self) -> usize {
        self.ideals.len() - 1
    }

    /// Index of the zero ideal (always first).
    pub fn zero(&self) -> usize {
        0
    }

    pub fn proper(&self) -> std::ops::Range<usize> {
        0..self.unit()
    }

    pub fn index_of(&self, i: &Ideal) -> Option<usize> {
        if i.ring() != self.ring {
            return None;
        }
        self.index.get(i.bits()).copied()
    }

    pub fn position(&self, i: &Ideal) -> Result<usize> {
        self.index_of(i).ok_or_else(|| Error::InvalidParameter(format!("{i:?} is not in the lattice")))
    }

    /// Index of Ra.
    pub fn principal(&self, a: usize) -> usize {
        self.principal[a]
    }

    pub fn is_principal(&self, k: usize) -> bool {
        self.principal.contains(&k)
    }

    pub fn upper_covers(&self, k: usize) -> &[usize] {
        &self.up[k]
    }

    pub fn lower_covers(&self, k: usize) -> &[usize] {
        &self.down[k]
    }

    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|lo| self.up[lo].iter().map(move |&hi| (lo, hi))).collect()
    }

    /// I ≺ J: proper inclusion with nothing strictly between.
    pub fn covers(&self, lower: usize, upper: usize) -> bool {
        self.up[lower].contains(&upper)
    }

    pub fn maximal_ideals(&self) -> &[usize] {
        &self.maximal
    }

    pub fn prime_ideals(&self) -> &[usize] {
        &self.prime
    }

    pub fn is_maximal(&self, k: usize) -> bool {
        self.maximal.binary_search(&k).is_ok()
    }

    pub fn is_prime_index(&self, k: usize) -> bool {
        self.prime.binary_search(&k).is_ok()
    }

    pub fn jacobson(&self) -> &Ideal {
        &self.jacobson
    }

    pub fn nilradical(&self) -> &Ideal {
        &self.nilradical
    }

    /// All ideals containing ideal `k`, including itself.
    pub fn supersets(&self, k: usize) -> Vec<usize> {
        (k..self.len()).filter(|&j| self.ideals[k].is_subset(&self.ideals[j])).collect()
    }

    /// All ideals contained in ideal `k`, including itself.
    pub fn subsets(&self, k: usize) -> Vec<usize> {
        (0..=k).filter(|&j| self.ideals[j].is_subset(&self.ideals[k])).collect()
    }

    /// V(I) ∩ Max(R).
    pub fn maximal_over(&self, k: usize) -> Vec<usize> {
        self.maximal.iter().copied().filter(|&m| self.ideals[k].is_subset(&self.ideals[m])).collect()
    }

    /// V(I): primes containing I.
    pub fn primes_over(&self, k: usize) -> Vec<usize> {
        self.prime.iter().copied().filter(|&p| self.ideals[k].is_subset(&self.ideals[p])).collect()
    }

    /// o(I): proper ideals containing I, I included.
    pub fn count_o(&self, k: usize) -> Result<usize> {
        if k == self.unit() {
            return invalid("o(R) is undefined");
        }
        Ok(self.supersets(k).len() - 1)
    }

    /// 𝒪(R) = o(0).
    pub fn count_big_o(&self) -> usize {
        self.supersets(0).len() - 1
    }

    /// Number of covering steps from `lo` up to `hi`. Follows the canonically
    /// first cover at each step and cross-checks against the last.
    pub fn chain_length(&self, lo: usize, hi: usize) -> Result<usize> {
        if !self.ideals[lo].is_subset(&self.ideals[hi]) {
            return invalid("chain endpoints are not nested");
        }
        let walk = |pick_last: bool| {
            let mut cur = lo;
            let mut steps = 0;
            while cur != hi {
                let mut next = self.up[cur].iter().copied().filter(|&c| self.ideals[c].is_subset(&self.ideals[hi]));
                cur = if pick_last { next.next_back() } else { next.min() }.expect("a cover below hi exists");
                steps += 1;
            }
            steps
        };
        let a = walk(false);
        let b = walk(true);
        if a != b {
            return inconsistent(format!("maximal chains of different lengths {a} and {b}"));
        }
        Ok(a)
    }

    /// L_R(R/I).
    pub fn length_of_quotient(&self, k: usize) -> Result<usize> {
        if k == self.unit() {
            return invalid("length of R/R requested for the unit ideal");
        }
        self.chain_length(k, self.unit())
    }
}

impl TableRing {
    /// Convenience: lattice index of an ideal of this ring.
    pub fn ideal_index(&self, i: &Ideal) -> Result<usize> {
        self.lattice()?.position(i)
    }
}
