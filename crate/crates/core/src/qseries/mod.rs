//! Truncated formal power series in `q` over the integers, with an optional
//! marker variable grading the series by a combinatorial statistic.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers and
//! every operation truncates consistently at a fixed q-order `N` (series are
//! known modulo `q^{N+1}`) and marker order `M`.

mod marked;
mod poch;
mod poly;
mod qbinom;
mod trunc;

pub use marked::MarkedSeries;
pub use poch::{poch_expand_jsum, poch_finite, poch_infinite};
pub use poly::QPolynomial;
pub use qbinom::{gaussian_binomial, gaussian_binomial_by_division, qbin_trunc};
pub use trunc::QTrunc;

use std::fmt;

/// Errors for shape-checked series operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QSeriesError {
    /// Two operands do not share the same truncation orders.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Inversion requires the marker^0 q^0 coefficient to be +1 or -1.
    NonUnitConstant,
    /// An infinite product would contain the factor (1 - 1).
    ZeroFactor,
}

impl fmt::Display for QSeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSeriesError::ShapeMismatch { left, right } => write!(
                f,
                "series shape mismatch: (marker, q) orders {:?} vs {:?}",
                left, right
            ),
            QSeriesError::NonUnitConstant => {
                write!(f, "constant term must be +1 or -1 for inversion")
            }
            QSeriesError::ZeroFactor => {
                write!(f, "product contains a zero factor (marker^0 q^0)")
            }
        }
    }
}

impl std::error::Error for QSeriesError {}

/// `n(n-1)/2`, the exponent weight of a staircase with `n` steps.
pub fn binom2(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}
