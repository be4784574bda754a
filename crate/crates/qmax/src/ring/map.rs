use super::Ring;
use crate::error::{invalid, Result};
use crate::ideal::Ideal;
use fixedbitset::FixedBitSet;
use std::fmt;
use std::sync::Arc;

/// A unital ring homomorphism stored element-wise.
#[derive(Clone)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    image: Vec<u32>,
}

impl fmt::Debug for RingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMap({} -> {})", self.source.label(), self.target.label())
    }
}

impl RingMap {
    /// Certifies the homomorphism property exhaustively.
    pub fn new(source: Ring, target: Ring, image: Vec<usize>) -> Result<Self> {
        let m = Self::new_unchecked(source, target, image)?;
        m.certify()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Ring, target: Ring, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.size() {
            return invalid("image length differs from source size");
        }
        if image.iter().any(|&y| y >= target.size()) {
            return invalid("image entry out of range");
        }
        Ok(RingMap { source, target, image: image.into_iter().map(|y| y as u32).collect() })
    }

    pub fn certify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.apply(s.one()) != t.one() || self.apply(s.zero()) != t.zero() {
            return invalid(format!("map {} -> {} is not unital", s.label(), t.label()));
        }
        for a in 0..s.size() {
            let fa = self.apply(a);
            for b in a..s.size() {
                let fb = self.apply(b);
                if self.apply(s.add(a, b)) != t.add(fa, fb) || self.apply(s.mul(a, b)) != t.mul(fa, fb) {
                    return invalid(format!(
                        "map {} -> {} is not a homomorphism at ({a},{b})",
                        s.label(),
                        t.label()
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn identity(r: &Ring) -> Self {
        RingMap { source: r.clone(), target: r.clone(), image: (0..r.size() as u32).collect() }
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&y| y as usize).collect()
    }

    pub fn image_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.target.size());
        for &y in &self.image {
            s.insert(y as usize);
        }
        s
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().count_ones(..) == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().count_ones(..) == self.target.size()
    }

    /// `f⁻¹(J)` for an ideal J of the target.
    pub fn preimage(&self, j: &Ideal) -> Ideal {
        assert_eq!(j.ring(), self.target.id(), "ideal of a different ring");
        let mut s = FixedBitSet::with_capacity(self.source.size());
        for x in 0..self.source.size() {
            if j.contains(self.apply(x)) {
                s.insert(x);
            }
        }
        Ideal::from_bits(&self.source, s)
    }

    /// `f(I)` as a set; an ideal when f is surjective.
    pub fn image_of(&self, i: &Ideal) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.target.size());
        for x in i.iter() {
            s.insert(self.apply(x));
        }
        s
    }

    /// Kernel of the map.
    pub fn kernel(&self) -> Ideal {
        self.preimage(&Ideal::zero(&self.target))
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &RingMap) -> Result<RingMap> {
        if !Arc::ptr_eq(&self.target, &g.source) && self.target.id() != g.source.id() {
            return invalid("maps are not composable");
        }
        Ok(RingMap {
            source: self.source.clone(),
            target: g.target.clone(),
            image: self.image.iter().map(|&y| g.image[y as usize]).collect(),
        })
    }
}
