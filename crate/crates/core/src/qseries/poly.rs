use num_bigint::BigInt;
use num_traits::Zero;

use super::QTrunc;

/// An exact polynomial in `q` (no truncation), normalized so the leading
/// coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial {
            coeffs: vec![BigInt::from(1)],
        }
    }

    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Lowest exponent with nonzero coefficient; `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }

    pub fn add_monomial(&mut self, c: impl Into<BigInt>, exp: usize) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= exp {
            self.coeffs.resize(exp + 1, BigInt::zero());
        }
        self.coeffs[exp] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> QPolynomial {
        let c = c.into();
        QPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * &c).collect())
    }

    pub fn shift(&self, exp: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Exact division; returns `None` when the remainder is nonzero or the
    /// divisor is zero.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Option<QPolynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QPolynomial::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.coeffs.last().unwrap();
        let dlen = divisor.coeffs.len();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % dlead) != BigInt::zero() {
                return None;
            }
            let qc = top / dlead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &qc * d;
                }
            }
            quot[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPolynomial::from_coeffs(quot))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Truncate to a series of the given order.
    pub fn to_qtrunc(&self, order: usize) -> QTrunc {
        let mut s = QTrunc::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > order {
                break;
            }
            *s.coeff_mut(n) = c.clone();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_keeps_leading_nonzero() {
        let p = QPolynomial::from_coeffs(vec![
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(0),
        ]);
        assert_eq!(p.degree(), Some(0));
        assert!(QPolynomial::from_coeffs(vec![BigInt::zero()]).is_zero());
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = QPolynomial::from_coeffs(vec![1.into(), 2.into(), 1.into()]);
        let b = QPolynomial::from_coeffs(vec![1.into(), 1.into()]);
        assert_eq!(a.div_exact(&b), Some(b.clone()));
        let c = QPolynomial::from_coeffs(vec![1.into(), 1.into(), 1.into()]);
        assert_eq!(c.div_exact(&b), None);
    }
}
