use super::Ideal;
use crate::ring::TableRing;
use fixedbitset::FixedBitSet;
use std::collections::HashSet;

/// Independent enumeration: every additive subgroup, kept when it absorbs
/// ring multiplication. Only meant for small rings.
pub fn brute_force_ideals(r: &TableRing) -> Vec<Ideal> {
    let mut zero = FixedBitSet::with_capacity(r.size());
    zero.insert(r.zero());
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(zero.clone());
    let mut stack = vec![zero];
    let mut out = Vec::new();
    while let Some(h) = stack.pop() {
        for g in 0..r.size() {
            if h.contains(g) {
                continue;
            }
            let next = r.additive_span(h.ones().chain(std::iter::once(g)));
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
        if absorbs(r, &h) {
            out.push(Ideal::from_bits(r, h));
        }
    }
    out.sort();
    out
}

fn absorbs(r: &TableRing, h: &FixedBitSet) -> bool {
    h.ones().all(|a| (0..r.size()).all(|x| h.contains(r.mul(x, a))))
}
