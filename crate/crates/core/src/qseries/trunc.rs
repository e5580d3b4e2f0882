use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::QSeriesError;

/// A truncated formal power series in `q` with exact integer coefficients,
/// known modulo `q^{order+1}`.
///
/// The coefficient vector always holds exactly `order + 1` entries; the zero
/// series keeps its declared shape rather than shrinking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QTrunc {
    coeffs: Vec<BigInt>,
}

impl QTrunc {
    pub fn zero(order: usize) -> Self {
        QTrunc {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `c * q^exp`, or the zero series when `exp` exceeds the order.
    pub fn monomial(order: usize, c: impl Into<BigInt>, exp: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        QTrunc { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut BigInt {
        &mut self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_shape(&self, other: &QTrunc) -> Result<(), QSeriesError> {
        if self.order() != other.order() {
            return Err(QSeriesError::ShapeMismatch {
                left: (0, self.order()),
                right: (0, other.order()),
            });
        }
        Ok(())
    }

    /// Coefficient-wise `c1 * self + c2 * other`.
    pub fn linear_combine(
        &self,
        c1: &BigInt,
        other: &QTrunc,
        c2: &BigInt,
    ) -> Result<QTrunc, QSeriesError> {
        self.check_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * c1 + b * c2)
            .collect();
        Ok(QTrunc { coeffs })
    }

    pub fn add_assign(&mut self, other: &QTrunc) {
        debug_assert_eq!(self.order(), other.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    /// `self += c * q^shift * other`, dropping terms beyond the order.
    pub fn add_assign_scaled_shifted(&mut self, other: &QTrunc, c: &BigInt, shift: usize) {
        if c.is_zero() {
            return;
        }
        let order = self.order();
        for (n, b) in other.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let target = n + shift;
            if target > order {
                break;
            }
            self.coeffs[target] += c * b;
        }
    }

    /// Cauchy product truncated to the shared order; zero coefficients of the
    /// sparser operand are skipped.
    pub fn mul(&self, other: &QTrunc) -> Result<QTrunc, QSeriesError> {
        self.check_shape(other)?;
        let order = self.order();
        let (outer, inner) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = QTrunc::zero(order);
        for (i, a) in outer.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in inner.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplicative inverse modulo `q^{order+1}`; requires constant term ±1.
    pub fn invert(&self) -> Result<QTrunc, QSeriesError> {
        if !self.coeffs[0].abs().is_one() {
            return Err(QSeriesError::NonUnitConstant);
        }
        let order = self.order();
        let eps = self.coeffs[0].clone(); // its own inverse
        let mut inv = QTrunc::zero(order);
        inv.coeffs[0] = eps.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || inv.coeffs[n - k].is_zero() {
                    continue;
                }
                acc += &self.coeffs[k] * &inv.coeffs[n - k];
            }
            if !acc.is_zero() {
                inv.coeffs[n] = -(&eps * acc);
            }
        }
        Ok(inv)
    }

    /// In-place multiplication by `(1 + c * q^exp)` with `exp >= 1`.
    pub fn mul_one_plus_term(&mut self, c: &BigInt, exp: usize) {
        assert!(exp >= 1, "use scalar scaling for exp = 0");
        if c.is_zero() {
            return;
        }
        let order = self.order();
        if exp > order {
            return;
        }
        for n in (exp..=order).rev() {
            if self.coeffs[n - exp].is_zero() {
                continue;
            }
            let add = c * &self.coeffs[n - exp];
            self.coeffs[n] += add;
        }
    }

    /// In-place exact division by `(1 - q^d)`, i.e. multiplication by the
    /// geometric series `1 + q^d + q^{2d} + ...`.
    pub fn div_one_minus_qpow(&mut self, d: usize) {
        assert!(d >= 1);
        let order = self.order();
        for n in d..=order {
            if self.coeffs[n - d].is_zero() {
                continue;
            }
            let add = self.coeffs[n - d].clone();
            self.coeffs[n] += add;
        }
    }

    pub fn scale(&mut self, c: &BigInt) {
        for a in self.coeffs.iter_mut() {
            if !a.is_zero() {
                *a *= c;
            }
        }
    }

    /// The series shifted up by `q^e`, truncating overflow.
    pub fn shifted(&self, e: usize) -> QTrunc {
        let order = self.order();
        let mut out = QTrunc::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + e > order {
                break;
            }
            if !c.is_zero() {
                out.coeffs[n + e] = c.clone();
            }
        }
        out
    }
}
