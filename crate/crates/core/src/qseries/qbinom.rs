use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::{QPolynomial, QTrunc};

/// The Gaussian polynomial `[m over n]_q`, zero when `n > m`, computed through
/// the Pascal-type recurrence `[M,N] = [M-1,N-1] + q^N [M-1,N]` with a shared
/// memo table.
pub fn gaussian_binomial(m: usize, n: usize) -> QPolynomial {
    if n > m {
        return QPolynomial::zero();
    }
    if n == 0 || n == m {
        return QPolynomial::one();
    }
    (*memoized(m, n)).clone()
}

type BinomialCache = Mutex<HashMap<(usize, usize), Arc<QPolynomial>>>;

static CACHE: OnceLock<BinomialCache> = OnceLock::new();

fn memoized(m: usize, n: usize) -> Arc<QPolynomial> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(m, n)) {
        return hit.clone();
    }
    let value = {
        let a = gaussian_binomial(m - 1, n - 1);
        let b = gaussian_binomial(m - 1, n).shift(n);
        Arc::new(a.add(&b))
    };
    cache
        .lock()
        .unwrap()
        .entry((m, n))
        .or_insert(value)
        .clone()
}

/// Cross-check oracle: `(q;q)_m / ((q;q)_n (q;q)_{m-n})` by exact polynomial
/// division. Kept independent of the recurrence path.
pub fn gaussian_binomial_by_division(m: usize, n: usize) -> QPolynomial {
    if n > m {
        return QPolynomial::zero();
    }
    let num = qq_factorial(m);
    let den = qq_factorial(n).mul(&qq_factorial(m - n));
    num.div_exact(&den)
        .expect("(q;q)_n (q;q)_{m-n} always divides (q;q)_m")
}

fn qq_factorial(n: usize) -> QPolynomial {
    let mut p = QPolynomial::one();
    for i in 1..=n {
        let factor = QPolynomial::one().add(&QPolynomial::monomial(-1, i));
        p = p.mul(&factor);
    }
    p
}

/// `[m over n]_q` truncated to a series of the given order, via the product
/// formula `prod_{i=1}^{n} (1 - q^{m-n+i})/(1 - q^i)`. Used by the series
/// builders where `m` is large but only coefficients up to the truncation
/// order matter.
pub fn qbin_trunc(m: usize, n: usize, order: usize) -> QTrunc {
    if n > m {
        return QTrunc::zero(order);
    }
    let mut s = QTrunc::one(order);
    let minus_one = BigInt::from(-1);
    for i in 1..=n {
        let e = m - n + i;
        if e <= order {
            s.mul_one_plus_term(&minus_one, e);
        }
        s.div_one_minus_qpow(i);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_cases() {
        assert_eq!(gaussian_binomial(5, 0), QPolynomial::one());
        assert_eq!(gaussian_binomial(2, 3), QPolynomial::zero());
        assert_eq!(gaussian_binomial(7, 7), QPolynomial::one());
    }

    #[test]
    fn four_choose_two() {
        // (1 + q + q^2)(1 + q^2) = 1 + q + 2q^2 + q^3 + q^4
        let expect = QPolynomial::from_coeffs(vec![
            1.into(),
            1.into(),
            2.into(),
            1.into(),
            1.into(),
        ]);
        assert_eq!(gaussian_binomial(4, 2), expect);
        assert_eq!(gaussian_binomial_by_division(4, 2), expect);
    }

    #[test]
    fn recurrence_matches_division_oracle() {
        for m in 0..=12 {
            for n in 0..=m {
                assert_eq!(
                    gaussian_binomial(m, n),
                    gaussian_binomial_by_division(m, n),
                    "mismatch at [{m} over {n}]"
                );
            }
        }
    }

    #[test]
    fn truncated_matches_full() {
        for m in 0..=10 {
            for n in 0..=m + 1 {
                let full = gaussian_binomial(m, n).to_qtrunc(15);
                assert_eq!(qbin_trunc(m, n, 15), full, "[{m} over {n}] truncated");
            }
        }
    }

    #[test]
    fn memo_table_is_thread_safe_and_deterministic() {
        let handles: Vec<_> = (0..4)
            .map(|_| {
                std::thread::spawn(|| {
                    (0..=15)
                        .flat_map(|m| (0..=m).map(move |n| gaussian_binomial(m, n)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for w in results.windows(2) {
            assert_eq!(w[0], w[1]);
        }
    }
}
