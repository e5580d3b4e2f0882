use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{QSeriesError, QTrunc};

/// A truncated series graded by one marker variable: the cell `(m, n)` holds
/// the exact integer coefficient of `marker^m * q^n` for `0 <= m <= marker_order`
/// and `0 <= n <= q_order`.
///
/// Marker degrees above `marker_order` are discarded by every operation; for
/// the series built here that loses nothing as long as the marker order is at
/// least the q-order, because each tracked statistic is bounded by the weight.
/// With `marker_order == 0` the grid is coefficient-wise a [`QTrunc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSeries {
    q_order: usize,
    rows: Vec<QTrunc>,
}

impl MarkedSeries {
    pub fn zero(q_order: usize, marker_order: usize) -> Self {
        MarkedSeries {
            q_order,
            rows: vec![QTrunc::zero(q_order); marker_order + 1],
        }
    }

    pub fn one(q_order: usize, marker_order: usize) -> Self {
        let mut s = Self::zero(q_order, marker_order);
        *s.rows[0].coeff_mut(0) = BigInt::one();
        s
    }

    /// `c * marker^m * q^n` (zero if the exponents exceed the grid).
    pub fn monomial(
        q_order: usize,
        marker_order: usize,
        c: impl Into<BigInt>,
        m: usize,
        n: usize,
    ) -> Self {
        let mut s = Self::zero(q_order, marker_order);
        if m <= marker_order && n <= q_order {
            *s.rows[m].coeff_mut(n) = c.into();
        }
        s
    }

    pub fn from_qtrunc(row0: QTrunc, marker_order: usize) -> Self {
        let q_order = row0.order();
        let mut s = Self::zero(q_order, marker_order);
        s.rows[0] = row0;
        s
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn marker_order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn coeff(&self, m: usize, n: usize) -> &BigInt {
        self.rows[m].coeff(n)
    }

    pub fn coeff_mut(&mut self, m: usize, n: usize) -> &mut BigInt {
        self.rows[m].coeff_mut(n)
    }

    pub fn row(&self, m: usize) -> &QTrunc {
        &self.rows[m]
    }

    pub fn row_mut(&mut self, m: usize) -> &mut QTrunc {
        &mut self.rows[m]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(QTrunc::is_zero)
    }

    fn shape(&self) -> (usize, usize) {
        (self.marker_order(), self.q_order)
    }

    fn check_shape(&self, other: &MarkedSeries) -> Result<(), QSeriesError> {
        if self.shape() != other.shape() {
            return Err(QSeriesError::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// Coefficient-wise `c1 * s1 + c2 * s2`.
    pub fn linear_combine(
        s1: &MarkedSeries,
        c1: impl Into<BigInt>,
        s2: &MarkedSeries,
        c2: impl Into<BigInt>,
    ) -> Result<MarkedSeries, QSeriesError> {
        s1.check_shape(s2)?;
        let c1 = c1.into();
        let c2 = c2.into();
        let rows = s1
            .rows
            .iter()
            .zip(&s2.rows)
            .map(|(a, b)| a.linear_combine(&c1, b, &c2))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MarkedSeries {
            q_order: s1.q_order,
            rows,
        })
    }

    /// Cauchy product truncated to the shared q-order and marker order.
    pub fn mul(&self, other: &MarkedSeries) -> Result<MarkedSeries, QSeriesError> {
        self.check_shape(other)?;
        let mo = self.marker_order();
        let mut out = MarkedSeries::zero(self.q_order, mo);
        for (m1, r1) in self.rows.iter().enumerate() {
            if r1.is_zero() {
                continue;
            }
            for (m2, r2) in other.rows.iter().take(mo - m1 + 1).enumerate() {
                if r2.is_zero() {
                    continue;
                }
                let prod = r1.mul(r2)?;
                out.rows[m1 + m2].add_assign(&prod);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse modulo `(marker^{M+1}, q^{N+1})`; requires the
    /// `marker^0 q^0` coefficient to be +1 or -1.
    ///
    /// Working marker degree by marker degree: with `s = sum_m marker^m R_m(q)`,
    /// the inverse rows satisfy `T_0 = R_0^{-1}` and
    /// `T_m = -T_0 * sum_{k=1}^{m} R_k T_{m-k}`.
    pub fn invert(&self) -> Result<MarkedSeries, QSeriesError> {
        if !self.rows[0].coeff(0).abs().is_one() {
            return Err(QSeriesError::NonUnitConstant);
        }
        let t0 = self.rows[0].invert()?;
        let mo = self.marker_order();
        let mut inv = MarkedSeries::zero(self.q_order, mo);
        inv.rows[0] = t0.clone();
        for m in 1..=mo {
            let mut acc = QTrunc::zero(self.q_order);
            for k in 1..=m {
                if self.rows[k].is_zero() || inv.rows[m - k].is_zero() {
                    continue;
                }
                acc.add_assign(&self.rows[k].mul(&inv.rows[m - k])?);
            }
            if !acc.is_zero() {
                let mut t = t0.mul(&acc)?;
                t.scale(&BigInt::from(-1));
                inv.rows[m] = t;
            }
        }
        Ok(inv)
    }

    /// In-place multiplication by the binomial `(1 + c * marker^p * q^e)`.
    pub fn mul_one_plus_term(&mut self, c: &BigInt, p: usize, e: usize) {
        if c.is_zero() {
            return;
        }
        let mo = self.marker_order();
        if p > mo || e > self.q_order {
            return; // the non-constant term falls off the grid entirely
        }
        if p == 0 {
            if e == 0 {
                let factor = BigInt::one() + c;
                for row in self.rows.iter_mut() {
                    row.scale(&factor);
                }
            } else {
                for row in self.rows.iter_mut() {
                    row.mul_one_plus_term(c, e);
                }
            }
            return;
        }
        for m in (p..=mo).rev() {
            let (lower, upper) = self.rows.split_at_mut(m);
            upper[0].add_assign_scaled_shifted(&lower[m - p], c, e);
        }
    }

    /// In-place exact division by `(1 - q^d)`.
    pub fn div_one_minus_qpow(&mut self, d: usize) {
        for row in self.rows.iter_mut() {
            row.div_one_minus_qpow(d);
        }
    }

    /// `self += c * marker^dm * q^dn * other`, truncating overflow.
    pub fn add_assign_scaled_shifted(
        &mut self,
        other: &MarkedSeries,
        c: &BigInt,
        dm: usize,
        dn: usize,
    ) {
        let mo = self.marker_order();
        for (m, row) in other.rows.iter().enumerate() {
            if m + dm > mo {
                break;
            }
            if !row.is_zero() {
                self.rows[m + dm].add_assign_scaled_shifted(row, c, dn);
            }
        }
    }

    /// Substitute `marker -> c * q^e`, collapsing the grid to marker order 0.
    pub fn specialize_marker(&self, c: i64, e: usize) -> MarkedSeries {
        let mut out = MarkedSeries::zero(self.q_order, 0);
        let c = BigInt::from(c);
        let mut cm = BigInt::one();
        for (m, row) in self.rows.iter().enumerate() {
            if m > 0 {
                cm *= &c;
            }
            let shift = m * e;
            if shift > self.q_order {
                break;
            }
            out.rows[0].add_assign_scaled_shifted(row, &cm, shift);
        }
        out
    }

    /// First cell where the two series differ, scanning in graded-lexicographic
    /// order (total degree `m + n` ascending, then q-exponent ascending).
    pub fn first_mismatch(&self, other: &MarkedSeries) -> Option<(usize, usize)> {
        debug_assert_eq!(self.shape(), other.shape());
        let mo = self.marker_order();
        for total in 0..=(mo + self.q_order) {
            for n in 0..=total.min(self.q_order) {
                let m = total - n;
                if m > mo {
                    continue;
                }
                if self.coeff(m, n) != other.coeff(m, n) {
                    return Some((m, n));
                }
            }
        }
        None
    }

    /// Text rendering `c0 + c1*q + c2*q^2 + ...` with marker terms as e.g.
    /// `3*a^2*q^4`; zero cells are omitted and the zero series prints `0`.
    pub fn format_with_marker(&self, marker: char) -> String {
        let mut terms: Vec<String> = Vec::new();
        for total in 0..=(self.marker_order() + self.q_order) {
            for n in 0..=total.min(self.q_order) {
                let m = total - n;
                if m > self.marker_order() {
                    continue;
                }
                let c = self.coeff(m, n);
                if c.is_zero() {
                    continue;
                }
                let mut parts: Vec<String> = Vec::new();
                if !c.abs().is_one() || (m == 0 && n == 0) {
                    parts.push(c.abs().to_string());
                }
                match m {
                    0 => {}
                    1 => parts.push(marker.to_string()),
                    _ => parts.push(format!("{marker}^{m}")),
                }
                match n {
                    0 => {}
                    1 => parts.push("q".to_string()),
                    _ => parts.push(format!("q^{n}")),
                }
                let body = parts.join("*");
                if terms.is_empty() {
                    terms.push(if c.is_negative() {
                        format!("-{body}")
                    } else {
                        body
                    });
                } else if c.is_negative() {
                    terms.push(format!("- {body}"));
                } else {
                    terms.push(format!("+ {body}"));
                }
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn linear_combine_identity_and_inverse() {
        let mut s = MarkedSeries::one(5, 2);
        *s.coeff_mut(1, 3) = bi(7);
        let z = MarkedSeries::zero(5, 2);
        assert_eq!(MarkedSeries::linear_combine(&s, 1, &z, 0).unwrap(), s);
        assert!(MarkedSeries::linear_combine(&s, 1, &s, -1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn linear_combine_cancellation() {
        // (1+q) + (1-q) = 2
        let mut a = MarkedSeries::one(5, 0);
        a.mul_one_plus_term(&bi(1), 0, 1);
        let mut b = MarkedSeries::one(5, 0);
        b.mul_one_plus_term(&bi(-1), 0, 1);
        let sum = MarkedSeries::linear_combine(&a, 1, &b, 1).unwrap();
        assert_eq!(sum, MarkedSeries::monomial(5, 0, 2, 0, 0));
    }

    #[test]
    fn mul_difference_of_squares() {
        let mut a = MarkedSeries::one(5, 0);
        a.mul_one_plus_term(&bi(1), 0, 1);
        let mut b = MarkedSeries::one(5, 0);
        b.mul_one_plus_term(&bi(-1), 0, 1);
        let prod = a.mul(&b).unwrap();
        let mut expect = MarkedSeries::one(5, 0);
        *expect.coeff_mut(0, 2) = bi(-1);
        assert_eq!(prod, expect);
    }

    #[test]
    fn mul_marked_binomials() {
        // (1 - z)(1 - z q) = 1 - (1+q) z + q z^2 at N=3, M=2
        let mut s = MarkedSeries::one(3, 2);
        s.mul_one_plus_term(&bi(-1), 1, 0);
        s.mul_one_plus_term(&bi(-1), 1, 1);
        let mut expect = MarkedSeries::one(3, 2);
        *expect.coeff_mut(1, 0) = bi(-1);
        *expect.coeff_mut(1, 1) = bi(-1);
        *expect.coeff_mut(2, 1) = bi(1);
        assert_eq!(s, expect);
        // and the identity element leaves it unchanged
        let one = MarkedSeries::one(3, 2);
        assert_eq!(s.mul(&one).unwrap(), s);
    }

    #[test]
    fn invert_marked_series_roundtrip() {
        // (t; q)_3-like series with a dense marker structure
        let mut s = MarkedSeries::one(8, 4);
        s.mul_one_plus_term(&bi(-1), 1, 0);
        s.mul_one_plus_term(&bi(-1), 1, 1);
        s.mul_one_plus_term(&bi(-1), 1, 2);
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv).unwrap(), MarkedSeries::one(8, 4));
    }

    #[test]
    fn specialize_marker_substitutes() {
        // 1 + a q at a = -q  ->  1 - q^2
        let mut s = MarkedSeries::one(4, 2);
        *s.coeff_mut(1, 1) = bi(1);
        let spec = s.specialize_marker(-1, 1);
        let mut expect = MarkedSeries::one(4, 0);
        *expect.coeff_mut(0, 2) = bi(-1);
        assert_eq!(spec, expect);
    }

    #[test]
    fn first_mismatch_graded_lex() {
        let a = MarkedSeries::zero(4, 4);
        let mut b = MarkedSeries::zero(4, 4);
        *b.coeff_mut(2, 1) = bi(1); // total degree 3
        *b.coeff_mut(0, 2) = bi(5); // total degree 2 -> found first
        assert_eq!(a.first_mismatch(&b), Some((0, 2)));
        let mut c = MarkedSeries::zero(4, 4);
        *c.coeff_mut(1, 1) = bi(1); // total 2, q-exp 1 beats (0,2)
        *c.coeff_mut(0, 2) = bi(5);
        assert_eq!(a.first_mismatch(&c), Some((1, 1)));
    }

    #[test]
    fn shape_mismatch_and_non_unit_constant_are_errors() {
        let a = MarkedSeries::one(4, 2);
        let b = MarkedSeries::one(4, 3);
        assert!(matches!(
            a.mul(&b),
            Err(QSeriesError::ShapeMismatch { .. })
        ));
        assert!(matches!(
            MarkedSeries::linear_combine(&a, 1, &b, 1),
            Err(QSeriesError::ShapeMismatch { .. })
        ));
        let two = MarkedSeries::monomial(4, 2, 2, 0, 0);
        assert_eq!(two.invert(), Err(QSeriesError::NonUnitConstant));
    }

    #[test]
    fn render_text() {
        let mut s = MarkedSeries::one(4, 2);
        *s.coeff_mut(1, 1) = bi(-2);
        *s.coeff_mut(2, 3) = bi(1);
        assert_eq!(s.format_with_marker('a'), "1 - 2*a*q + a^2*q^3");
        assert_eq!(MarkedSeries::zero(2, 0).format_with_marker('a'), "0");
    }
}
