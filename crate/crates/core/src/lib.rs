//! Exhaustive, pruned exploration of the tree of numerical semigroups.
//!
//! The crate is organised bottom-up:
//!
//! * [`semigroup`] holds the canonical [`Semigroup`] value, its invariants
//!   (Wilf and Eliahou numbers among them) and child generation in the
//!   classical tree.
//! * [`closure`] decides bounded conductor/genus questions about semigroups
//!   given by generators without computing them in full.
//! * [`properties`] implements the parameterized properties `G(g)`, `H(l)`
//!   and `D(k)`, their cutting-semigroup tests and skilled primitives.
//! * [`explorer`] walks truncated, trimmed subtrees in parallel.
//! * [`counting`] assembles `N(m, g)` tables and extends them with the multiplicity
//!   recurrence.
//! * [`oracle`] contains slow, independent reference implementations.

pub mod closure;
pub mod counting;
pub mod explorer;
pub mod oracle;
pub mod properties;
pub mod semigroup;

mod error;

pub use closure::ClosureWindow;
pub use counting::{CountMatrix, Provenance};
pub use error::Error;
pub use explorer::{ExplorationResult, ExplorationTask, Hit, Target};
pub use properties::{PropertySpec, Ratio};
pub use semigroup::{InvariantRecord, Semigroup};

pub type Result<T, E = Error> = std::result::Result<T, E>;
