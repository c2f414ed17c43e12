//! Exact computations with edge ideals: stability invariants of graphs, monomial ideal
//! operations, multigraded Betti numbers, and executable checks of the bound
//! `reg I(G)^s <= 2s + c` together with the identities its proof relies on.

pub mod betti;
pub mod error;
pub mod graph;
pub mod harness;
pub mod ideal;

/// Exponent type of monomials.
pub type Exponent = u32;
/// Exact rationals for closed-form bounds.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision integers, the last resort of the rank computation.
pub type BigInteger = num_bigint::BigInt;

pub use betti::table::BettiTable;
pub use betti::{betti_gpw_oracle, betti_multigraded, regularity, Engine, EngineConfig, Field};
pub use error::{EngineError, GraphError, HarnessError, IdealError};
pub use graph::{Family, Graph, StableSetReport};
pub use ideal::{MonomialIdeal, Multidegree, RestrictionVector, Ring};
