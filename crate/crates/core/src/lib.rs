//! Exact-arithmetic eigencone computations for simple Lie algebras of rank <= 4.
//!
//! The crate computes the saturated tensor cone (eigencone) of a simple Lie
//! algebra from Schubert calculus data: Weyl group combinatorics, cup and
//! deformed (Belkale-Kumar) products on `H*(G/P)`, Horn recursion for type A,
//! and character-theoretic tensor multiplicities. Everything is exact: weights
//! and Cartan elements are arbitrary-precision rationals, structure constants
//! are integers, and the facet checks run an exact rational simplex.
//!
//! Module map:
//! - [`rootsys`]: immutable root-system data (Cartan matrix, positive roots,
//!   rho, Bourbaki coordinate charts, Cartan embeddings).
//! - [`weyl`]: Weyl group enumeration, minimal coset representatives, Bruhat
//!   order, inversion sets and the characters controlling the deformed product.
//! - [`schubert`]: Schubert structure constants via equivariant localization
//!   and an exact triangular solve.
//! - [`bkprod`]: the deformed products, Levi-movability, the inversion-set
//!   product on `G/B` and the Levi factorization of top intersection numbers.
//! - [`eigencone`]: inequality generation, membership, irredundancy by exact
//!   LP, golden-data comparison and diagram-automorphism cone tests.
//! - [`typea`]: partitions, Littlewood-Richardson coefficients, Horn sets and
//!   `SL(n)` saturation scans.
//! - [`tensor`]: Freudenthal multiplicities, Klimyk tensor decomposition,
//!   saturation-factor probes and rigidity scans.
//! - [`acceptance`]: the runnable acceptance checks used by the CLI `suite`
//!   subcommand and the integration tests.

pub mod acceptance;
pub mod bkprod;
pub mod eigencone;
pub mod error;
pub mod golden;
pub mod lp;
pub mod poly;
pub mod rootsys;
pub mod schubert;
pub mod tensor;
pub mod typea;
pub mod weyl;

pub use error::{Error, Result};

/// Arbitrary-precision rational, the scalar type of the crate.
pub type Q = num::BigRational;

/// Arbitrary-precision integer.
pub type Z = num::BigInt;

pub(crate) fn q_from(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

pub(crate) fn q_ratio(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}
