//! Exact computation over finite commutative unital rings: ideal lattices,
//! quasi-maximal ideals and their inert/decomposed/ramified types, minimal
//! ring extensions and their conductors, 2-absorbing and primal ideals.
//!
//! Rings are explicit operation tables ([`ring::TableRing`]); ideals are
//! bit-vectors over element indices ([`ideal::Ideal`]). Every predicate is
//! decided by exhaustive search, so results are exact for the rings that fit
//! under the caps in [`limits`].

pub mod absorbing;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod extension;
pub mod ideal;
pub mod limits;
pub mod qmax;
pub mod report;
pub mod ring;
pub mod suites;
pub mod zdedekind;

pub use error::{Error, Result};
pub use ideal::{Ideal, IdealLattice};
pub use qmax::{classify_qmax, QMaxClass, QMaxTag};
pub use ring::{Ring, RingMap, TableRing};
