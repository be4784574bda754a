//! Ideals as bit-vectors, their arithmetic, and the lattice of all ideals.

mod lattice;
mod local;
mod oracle;

pub use lattice::IdealLattice;
pub use local::LocalFactorization;
pub use oracle::brute_force_ideals;

use crate::error::{invalid, Result};
use crate::ring::TableRing;
use fixedbitset::FixedBitSet;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: u64,
    members: FixedBitSet,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.to_vec())
    }
}

impl Ord for Ideal {
    /// Cardinality first, then lexicographic on sorted member lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ideal {
    /// Wraps a member set without checking closure.
    pub fn from_bits(r: &TableRing, members: FixedBitSet) -> Ideal {
        debug_assert_eq!(members.len(), r.size());
        Ideal { ring: r.id(), members }
    }

    /// Wraps a member set after checking it is an ideal.
    pub fn from_set(r: &TableRing, members: FixedBitSet) -> Result<Ideal> {
        if members.len() != r.size() || !r.is_ideal(&members) {
            return invalid("member set is not an ideal");
        }
        Ok(Ideal { ring: r.id(), members })
    }

    pub fn zero(r: &TableRing) -> Ideal {
        let mut s = FixedBitSet::with_capacity(r.size());
        s.insert(r.zero());
        Ideal { ring: r.id(), members: s }
    }

    pub fn unit(r: &TableRing) -> Ideal {
        Ideal { ring: r.id(), members: r.all_elements() }
    }

    pub fn ring(&self) -> u64 {
        self.ring
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subset(&self, other: &Ideal) -> bool {
        self.is_subset(other) && self.len() < other.len()
    }

    pub fn is_unit(&self) -> bool {
        self.len() == self.members.len()
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        self.same_ring(other);
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Ideal { ring: self.ring, members: m }
    }

    fn same_ring(&self, other: &Ideal) {
        assert_eq!(self.ring, other.ring, "ideals of different rings");
    }
}

impl TableRing {
    pub fn is_ideal(&self, s: &FixedBitSet) -> bool {
        if !s.contains(self.zero()) {
            return false;
        }
        let members: Vec<usize> = s.ones().collect();
        for &a in &members {
            for &b in &members {
                if !s.contains(self.add(a, b)) {
                    return false;
                }
            }
            for r in 0..self.size() {
                if !s.contains(self.mul(r, a)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn principal_ideal(&self, a: usize) -> Ideal {
        let mut s = FixedBitSet::with_capacity(self.size());
        for r in 0..self.size() {
            s.insert(self.mul(r, a));
        }
        Ideal::from_bits(self, s)
    }

    /// Additive subgroup generated by `gens`.
    pub fn additive_span(&self, gens: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut span = FixedBitSet::with_capacity(self.size());
        span.insert(self.zero());
        for g in gens {
            if span.contains(g) {
                continue;
            }
            let base: Vec<usize> = span.ones().collect();
            let mut c = g;
            while c != self.zero() {
                if !span.contains(c) {
                    for &s in &base {
                        span.insert(self.add(s, c));
                    }
                }
                c = self.add(c, g);
            }
        }
        span
    }

    pub fn ideal_generated(&self, gens: &[usize]) -> Ideal {
        let mut acc = Ideal::zero(self);
        for &g in gens {
            if !acc.contains(g) {
                acc = self.ideal_sum(&acc, &self.principal_ideal(g));
            }
        }
        acc
    }

    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Ideal {
        i.same_ring(j);
        let mut u = i.members.clone();
        let base: Vec<usize> = i.iter().collect();
        for b in j.iter() {
            if !u.contains(b) {
                for &a in &base {
                    u.insert(self.add(a, b));
                }
            }
        }
        Ideal::from_bits(self, u)
    }

    /// Ideal generated by all products ab with a ∈ I, b ∈ J.
    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Ideal {
        i.same_ring(j);
        let mut prods = FixedBitSet::with_capacity(self.size());
        for a in i.iter() {
            for b in j.iter() {
                prods.insert(self.mul(a, b));
            }
        }
        Ideal::from_bits(self, self.additive_span(prods.ones()))
    }

    pub fn ideal_intersection(&self, i: &Ideal, j: &Ideal) -> Ideal {
        i.intersection(j)
    }

    pub fn ideal_power(&self, i: &Ideal, k: u32) -> Ideal {
        let mut acc = Ideal::unit(self);
        for _ in 0..k {
            acc = self.ideal_product(&acc, i);
        }
        acc
    }

    /// (I:x) = {r : rx ∈ I}.
    pub fn colon_by_element(&self, i: &Ideal, x: usize) -> Ideal {
        let mut s = FixedBitSet::with_capacity(self.size());
        for r in 0..self.size() {
            if i.contains(self.mul(r, x)) {
                s.insert(r);
            }
        }
        Ideal::from_bits(self, s)
    }

    /// (I:J) = {r : rJ ⊆ I}.
    pub fn colon(&self, i: &Ideal, j: &Ideal) -> Ideal {
        i.same_ring(j);
        let js: Vec<usize> = j.iter().collect();
        let mut s = FixedBitSet::with_capacity(self.size());
        for r in 0..self.size() {
            if js.iter().all(|&b| i.contains(self.mul(r, b))) {
                s.insert(r);
            }
        }
        Ideal::from_bits(self, s)
    }

    pub fn radical(&self, i: &Ideal) -> Ideal {
        let mut s = FixedBitSet::with_capacity(self.size());
        for x in 0..self.size() {
            if i.contains(self.stable_power(x)) {
                s.insert(x);
            }
        }
        Ideal::from_bits(self, s)
    }

    pub fn is_prime(&self, i: &Ideal) -> Result<bool> {
        if i.is_unit() {
            return invalid("primality of the unit ideal");
        }
        let outside: Vec<usize> = (0..self.size()).filter(|&x| !i.contains(x)).collect();
        for (k, &a) in outside.iter().enumerate() {
            for &b in &outside[k..] {
                if i.contains(self.mul(a, b)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// ab ∈ I ⇒ a ∈ I or b ∈ √I.
    pub fn is_primary(&self, i: &Ideal) -> Result<bool> {
        if i.is_unit() {
            return invalid("primary test on the unit ideal");
        }
        let rad = self.radical(i);
        for a in (0..self.size()).filter(|&a| !i.contains(a)) {
            for b in (0..self.size()).filter(|&b| !rad.contains(b)) {
                if i.contains(self.mul(a, b)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether some power of I vanishes.
    pub fn nilpotency_index(&self, i: &Ideal) -> Option<u32> {
        let mut acc = i.clone();
        for k in 1..=self.size() as u32 {
            if acc.len() == 1 {
                return Some(k);
            }
            let next = self.ideal_product(&acc, i);
            if next == acc {
                return None;
            }
            acc = next;
        }
        None
    }
}
