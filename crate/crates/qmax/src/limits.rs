//! Process-wide caps. The CLI sets them from flags; library callers may
//! adjust them before building rings.

use serde::Serialize;
use std::sync::atomic::{AtomicUsize, Ordering};

static MAX_SIZE: AtomicUsize = AtomicUsize::new(4096);
static MAX_IDEALS: AtomicUsize = AtomicUsize::new(20_000);
static MAX_INTERMEDIATE: AtomicUsize = AtomicUsize::new(64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest ring any constructor may produce.
    pub max_size: usize,
    /// Largest ideal lattice `all_ideals` will enumerate.
    pub max_ideals: usize,
    /// Largest ambient ring for intermediate-ring enumeration.
    pub max_intermediate: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_size: 4096, max_ideals: 20_000, max_intermediate: 64 }
    }
}

impl Limits {
    pub fn current() -> Limits {
        Limits {
            max_size: MAX_SIZE.load(Ordering::Relaxed),
            max_ideals: MAX_IDEALS.load(Ordering::Relaxed),
            max_intermediate: MAX_INTERMEDIATE.load(Ordering::Relaxed),
        }
    }

    pub fn install(self) {
        MAX_SIZE.store(self.max_size, Ordering::Relaxed);
        MAX_IDEALS.store(self.max_ideals, Ordering::Relaxed);
        MAX_INTERMEDIATE.store(self.max_intermediate, Ordering::Relaxed);
    }
}

pub fn max_size() -> usize {
    MAX_SIZE.load(Ordering::Relaxed)
}

pub fn max_ideals() -> usize {
    MAX_IDEALS.load(Ordering::Relaxed)
}

pub fn max_intermediate() -> usize {
    MAX_INTERMEDIATE.load(Ordering::Relaxed)
}
