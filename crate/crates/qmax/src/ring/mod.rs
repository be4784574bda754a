//! Finite commutative unital rings given by explicit operation tables.

mod construct;
pub mod expr;
mod iso;
mod map;
pub mod spec;

pub use construct::{
    make_gf, make_idealization, make_idealization_quotient, make_multivariate_quotient,
    make_poly_quotient, make_poly_quotient_named, make_product, make_zmod, materialize_subset,
    quotient_ring, subring_closure,
};
pub use iso::{find_embedding, find_isomorphism, find_isomorphism_fixing, is_isomorphic};
pub use map::RingMap;
pub use spec::{parse_ideal, ExtSpec, RingSpec};

use crate::error::{invalid, Error, Result};
use crate::ideal::{IdealLattice, LocalFactorization};
use crate::limits;
use fixedbitset::FixedBitSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

pub type Ring = Arc<TableRing>;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Extra structure remembered from the construction, used to read tuple
/// element syntax back into indices.
#[derive(Clone)]
pub enum Shape {
    Plain,
    /// Index is mixed radix over the factors, first factor most significant.
    Product(Vec<Ring>),
    /// Index is `r * module.len() + k` where `module[k]` is the base element
    /// representing the k-th module element.
    Idealization { base: Ring, module: Vec<usize>, module_pos: Vec<Option<usize>> },
}

pub struct TableRing {
    id: u64,
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    label: String,
    names: Vec<(String, usize)>,
    shape: Shape,
    lattice: OnceLock<Result<Arc<IdealLattice>>>,
    local: OnceLock<Arc<LocalFactorization>>,
    stable: OnceLock<Vec<u32>>,
}

/// An element tagged with the ring it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub ring: u64,
    pub index: usize,
}

impl fmt::Debug for TableRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TableRing({}, size {})", self.label, self.n)
    }
}

impl TableRing {
    /// Builds a ring from caller-supplied tables and checks every axiom.
    pub fn from_tables(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        label: impl Into<String>,
    ) -> Result<Ring> {
        if size == 0 || add.len() != size * size || mul.len() != size * size {
            return invalid("table dimensions do not match size");
        }
        if zero >= size || one >= size || add.iter().chain(mul.iter()).any(|&v| v as usize >= size) {
            return invalid("table entry out of range");
        }
        let r = Self::build(size, add, mul, zero, one, label.into(), Vec::new(), Shape::Plain)?;
        r.check_axioms()?;
        Ok(r)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn build(
        n: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        label: String,
        names: Vec<(String, usize)>,
        shape: Shape,
    ) -> Result<Ring> {
        if n > limits::max_size() {
            return Err(Error::ResourceLimit(format!(
                "ring {label} has {n} elements, cap is {}",
                limits::max_size()
            )));
        }
        if zero == one {
            return invalid(format!("{label} is the zero ring"));
        }
        let mut neg = vec![u32::MAX; n];
        for x in 0..n {
            if let Some(y) = (0..n).find(|&y| add[x * n + y] as usize == zero) {
                neg[x] = y as u32;
            } else {
                return invalid(format!("element {x} of {label} has no additive inverse"));
            }
        }
        Ok(Arc::new(TableRing {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            n,
            add,
            mul,
            neg,
            zero,
            one,
            label,
            names,
            shape,
            lattice: OnceLock::new(),
            local: OnceLock::new(),
            stable: OnceLock::new(),
        }))
    }

    /// Exhaustive check of the commutative ring axioms.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.n;
        let fail = |what: &str, a: usize, b: usize, c: usize| {
            Err(Error::InvalidParameter(format!("{}: {what} fails at ({a},{b},{c})", self.label)))
        };
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", a, 0, 0);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative identity", a, 0, 0);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", a, b, 0);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", a, b, 0);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.add(a, b);
                let pab = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", a, b, c);
                    }
                    if self.mul(pab, c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", a, b, c);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(pab, self.mul(a, c)) {
                        return fail("distributivity", a, b, c);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Named generators, e.g. `x` for a polynomial quotient.
    pub fn names(&self) -> &[(String, usize)] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().find(|(s, _)| s == name).map(|&(_, i)| i)
    }

    pub fn element(&self, index: usize) -> Result<RingElement> {
        if index >= self.n {
            return invalid(format!("index {index} out of range for {}", self.label));
        }
        Ok(RingElement { ring: self.id, index })
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut acc = self.one;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `k · 1`, reducing `k` modulo the characteristic.
    pub fn from_int(&self, k: i64) -> usize {
        let c = self.characteristic() as i64;
        let k = k.rem_euclid(c) as usize;
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, self.one);
        }
        acc
    }

    /// Smallest k > 0 with k·a = 0.
    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut acc = a;
        while acc != self.zero {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.n).any(|b| self.mul(a, b) == self.one)
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_unit(a)).collect()
    }

    /// `a^n` with n the ring size; lies in the periodic part of the power
    /// sequence, so `a^k ∈ I` for some k iff `a^n ∈ I`.
    pub fn stable_power(&self, a: usize) -> usize {
        self.stable.get_or_init(|| (0..self.n).map(|x| self.pow(x, self.n as u64) as u32).collect())
            [a] as usize
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.stable_power(a) == self.zero
    }

    pub fn nilpotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_nilpotent(a)).collect()
    }

    pub fn is_zero_divisor(&self, a: usize) -> bool {
        (0..self.n).any(|b| b != self.zero && self.mul(a, b) == self.zero)
    }

    pub fn zero_divisors(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_zero_divisor(a)).collect()
    }

    pub fn is_field(&self) -> bool {
        (0..self.n).all(|a| a == self.zero || self.is_unit(a))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.mul(a, a) == a).collect()
    }

    /// Memoized ideal lattice.
    pub fn lattice(&self) -> Result<Arc<IdealLattice>> {
        self.lattice.get_or_init(|| IdealLattice::compute(self).map(Arc::new)).clone()
    }

    /// Memoized decomposition into local factors.
    pub fn local_factors(self: &Arc<Self>) -> Arc<LocalFactorization> {
        self.local.get_or_init(|| Arc::new(LocalFactorization::compute(self))).clone()
    }

    pub fn all_elements(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        s.insert_range(..);
        s
    }

    pub(crate) fn with_label(&self, label: String, names: Vec<(String, usize)>, shape: Shape) -> Result<Ring> {
        Self::build(self.n, self.add.clone(), self.mul.clone(), self.zero, self.one, label, names, shape)
    }
}
