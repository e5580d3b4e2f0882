//! Exact-arithmetic toolkit for separable partition classes and
//! overpartition identities of Rogers-Ramanujan type.
//!
//! The crate is organized around a small number of independent layers:
//!
//! - [`qseries`]: truncated formal power series in `q` with exact integer
//!   coefficients and an optional marker variable, q-Pochhammer products,
//!   and Gaussian binomial polynomials;
//! - [`partitions`]: exhaustive enumeration of ordinary partitions and of
//!   the six parity-separated families, used as ground truth;
//! - [`sip`]: separable integer partition classes with a modulus -- basis
//!   extraction, decomposition, and machine verification of separability;
//! - [`overpartitions`]: overpartitions under the order `1 < 1~ < 2 < 2~ < ...`,
//!   the basis families `O(m)`, `G(m)`, `G1(m)`, `G2(m)`, and their
//!   generating polynomials;
//! - [`identities`]: a registry pairing independently constructed series
//!   for every supported identity, with exact comparison and reporting.

pub mod identities;
pub mod overpartitions;
pub mod partitions;
pub mod qseries;
pub mod sip;

pub use identities::{IdentityId, IdentityReport};
pub use overpartitions::{OverPart, Overpartition};
pub use partitions::{ParityFamilySpec, Partition};
pub use qseries::{MarkedSeries, QPolynomial, QSeriesError, QTrunc};
