use num_bigint::BigInt;

use super::{binom2, gaussian_binomial, MarkedSeries, QSeriesError};

/// Finite q-Pochhammer-style product
/// `prod_{i=0}^{n-1} (1 - a_coeff * marker^{marker_power} * q^{q_offset + i*q_step})`,
/// truncated to the given grid. `n = 0` gives 1.
///
/// `a_coeff = 1, marker_power = 1, q_offset = 0, q_step = 1` is `(a;q)_n`;
/// `a_coeff = -1` variants give the `(-a;q)_n` / `(-q;q)_n` products, e.g.
/// `(-1;q)_n` via `a_coeff = -1, marker_power = 0, q_offset = 0`.
pub fn poch_finite(
    a_coeff: i64,
    marker_power: usize,
    q_offset: usize,
    q_step: usize,
    n: usize,
    q_order: usize,
    marker_order: usize,
) -> MarkedSeries {
    assert!(q_step >= 1, "q_step must be positive");
    let mut s = MarkedSeries::one(q_order, marker_order);
    let c = BigInt::from(-a_coeff);
    for i in 0..n {
        let e = q_offset + i * q_step;
        if e > q_order {
            // the factor is 1 on every retained grid cell
            if marker_power == 0 {
                break; // exponents only grow
            }
            continue;
        }
        s.mul_one_plus_term(&c, marker_power, e);
    }
    s
}

/// Infinite product `prod_{i=0}^{inf} (1 - a_coeff * marker^{mp} * q^{off + i*step})`
/// truncated at the first factor whose q-exponent exceeds the order; such
/// factors cannot affect retained grid cells.
///
/// Rejects `marker_power = 0 && q_offset = 0`, where the product has a
/// constant factor.
pub fn poch_infinite(
    a_coeff: i64,
    marker_power: usize,
    q_offset: usize,
    q_step: usize,
    q_order: usize,
    marker_order: usize,
) -> Result<MarkedSeries, QSeriesError> {
    assert!(q_step >= 1, "q_step must be positive");
    if marker_power == 0 && q_offset == 0 {
        return Err(QSeriesError::ZeroFactor);
    }
    let mut s = MarkedSeries::one(q_order, marker_order);
    let c = BigInt::from(-a_coeff);
    let mut e = q_offset;
    while e <= q_order {
        s.mul_one_plus_term(&c, marker_power, e);
        e += q_step;
    }
    Ok(s)
}

/// The expansion `(z;q)_N = sum_{j>=0} [N over j] (-z)^j q^{binom(j,2)}` built
/// from the sum side, with `z` as the marker.
pub fn poch_expand_jsum(n: usize, q_order: usize, marker_order: usize) -> MarkedSeries {
    let mut s = MarkedSeries::zero(q_order, marker_order);
    for j in 0..=n.min(marker_order) {
        let e = binom2(j);
        if e > q_order {
            break;
        }
        let binom = gaussian_binomial(n, j);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let row = s.row_mut(j);
        for (d, c) in binom.coeffs().iter().enumerate() {
            if e + d > q_order {
                break;
            }
            *row.coeff_mut(e + d) += c * sign;
        }
    }
    s
}
