//! Series-side constructors for the identity registry. Every function takes
//! `(order, marker_bound)` and returns an exact truncated series; infinite
//! sums are cut off at the first index whose summand has no cell left inside
//! the grid (minimal q-exponent beyond the order, or marker degree beyond
//! the bound), which loses nothing of the truncated object.

use num_bigint::BigInt;
use num_traits::One;

use crate::overpartitions::{in_c_parts, visit_overpartitions};
use crate::partitions::FamilyId;
use crate::qseries::{
    binom2, poch_expand_jsum, poch_finite, poch_infinite, qbin_trunc, MarkedSeries, QTrunc,
};
use crate::sip::assemble_family_series;

pub const JSUM_DEFAULT_N: usize = 8;

/// `sum_{n>=0} (c a; q)_n q^{e(n)} / (q;q)_n` with the Pochhammer factors at
/// exponents `offset, offset+1, ...`; `marker_power = 0` gives the pure-q
/// variants such as `(-1;q)_n` and `(-q;q)_n`.
fn sum_poch_over_qq(
    a_coeff: i64,
    marker_power: usize,
    factor_offset: usize,
    exponent: impl Fn(usize) -> usize,
    order: usize,
    marker: usize,
) -> MarkedSeries {
    let one = BigInt::one();
    let mut acc = MarkedSeries::zero(order, marker);
    let mut term = MarkedSeries::one(order, marker);
    let mut n = 0;
    loop {
        if n > 0 {
            term.mul_one_plus_term(&BigInt::from(-a_coeff), marker_power, factor_offset + n - 1);
            term.div_one_minus_qpow(n);
        }
        let e = exponent(n);
        if e > order {
            break;
        }
        acc.add_assign_scaled_shifted(&term, &one, 0, e);
        n += 1;
    }
    acc
}

/// `sum_{n>=0} marker^n q^{e(n)} / (q;q)_n` (Euler-type sums).
fn sum_marker_power_over_qq(
    exponent: impl Fn(usize) -> usize,
    order: usize,
    marker: usize,
) -> MarkedSeries {
    let one = BigInt::one();
    let mut acc = MarkedSeries::zero(order, marker);
    let mut term = QTrunc::one(order);
    for n in 0..=marker {
        if n > 0 {
            term.div_one_minus_qpow(n);
        }
        let e = exponent(n);
        if e > order {
            break;
        }
        acc.row_mut(n).add_assign_scaled_shifted(&term, &one, e);
    }
    acc
}

// ---- main-1 / over-main -------------------------------------------------

/// `sum (-a;q)_n q^n / (q;q)_n`
pub fn main1_sum(order: usize, marker: usize) -> MarkedSeries {
    sum_poch_over_qq(-1, 1, 0, |n| n, order, marker)
}

/// `(-aq;q)_inf / (q;q)_inf`
pub fn main1_product(order: usize, marker: usize) -> MarkedSeries {
    let num = poch_infinite(-1, 1, 1, 1, order, marker).expect("offset 1");
    let den_inv = poch_infinite(1, 0, 1, 1, order, marker)
        .expect("offset 1")
        .invert()
        .expect("unit constant");
    num.mul(&den_inv).expect("shared shape")
}

/// `sum over all overpartitions of a^{l_o(pi)} q^{|pi|}` by enumeration.
pub fn overpartition_enumeration(order: usize, marker: usize) -> MarkedSeries {
    let mut acc = MarkedSeries::zero(order, marker);
    for n in 0..=order {
        visit_overpartitions(n, |parts| {
            let lo = parts.iter().filter(|p| p.overlined).count();
            if lo <= marker {
                *acc.coeff_mut(lo, n) += 1;
            }
        });
    }
    acc
}

/// `sum_m q^m/(q;q)_m sum_j a^j q^{binom(j,2)} [m over j]`
pub fn over_main_double_sum(order: usize, marker: usize) -> MarkedSeries {
    let one = BigInt::one();
    let mut acc = MarkedSeries::zero(order, marker);
    let mut denom_inv = QTrunc::one(order); // 1/(q;q)_m
    for m in 0..=order {
        if m > 0 {
            denom_inv.div_one_minus_qpow(m);
        }
        for j in 0..=m.min(marker) {
            let e = m + binom2(j);
            if e > order {
                break;
            }
            let prod = denom_inv
                .mul(&qbin_trunc(m, j, order))
                .expect("orders agree");
            acc.row_mut(j).add_assign_scaled_shifted(&prod, &one, e);
        }
    }
    acc
}

// ---- main-2 / rr1 chain -------------------------------------------------

/// `sum (-1;q)_n q^{binom(n+1,2)} / (q;q)_n`
pub fn main2_sum(order: usize, marker: usize) -> MarkedSeries {
    sum_poch_over_qq(-1, 0, 0, |n| binom2(n + 1), order, marker)
}

/// `(-q;q^2)_inf / (q;q^2)_inf`
pub fn main2_product(order: usize, marker: usize) -> MarkedSeries {
    let num = poch_infinite(-1, 0, 1, 2, order, marker).expect("offset 1");
    let den_inv = poch_infinite(1, 0, 1, 2, order, marker)
        .expect("offset 1")
        .invert()
        .expect("unit constant");
    num.mul(&den_inv).expect("shared shape")
}

/// Enumerated generating function of `C_2`.
pub fn c2_enumeration(order: usize, marker: usize) -> MarkedSeries {
    c_enumeration(2, order, marker)
}

/// Enumerated generating function of `C_1`.
pub fn c1_enumeration(order: usize, marker: usize) -> MarkedSeries {
    c_enumeration(1, order, marker)
}

fn c_enumeration(r: u8, order: usize, marker: usize) -> MarkedSeries {
    let mut acc = MarkedSeries::zero(order, marker);
    for n in 0..=order {
        visit_overpartitions(n, |parts| {
            if in_c_parts(parts, r) {
                *acc.coeff_mut(0, n) += 1;
            }
        });
    }
    acc
}

/// `1 + sum_{m>=1} (1/(q;q)_m) sum_j 2 q^{binom(m+1,2) + j(j+3)/2} [m-2 over j]`,
/// the generating function of `C_2` assembled from the basis polynomials of
/// `G2(m)` (the two smallest-part choices contribute equally).
pub fn rr1_basis_form(order: usize, marker: usize) -> MarkedSeries {
    let two = BigInt::from(2);
    let mut acc = MarkedSeries::one(order, marker);
    let mut denom_inv = QTrunc::one(order);
    for m in 1.. {
        denom_inv.div_one_minus_qpow(m);
        let stair = binom2(m + 1);
        if stair > order {
            break;
        }
        for j in 0..=m - 1 {
            let e = stair + binom2(j + 1);
            if e > order {
                break;
            }
            let prod = denom_inv
                .mul(&qbin_trunc(m - 1, j, order))
                .expect("orders agree");
            acc.row_mut(0).add_assign_scaled_shifted(&prod, &two, e);
        }
    }
    acc
}

/// `sum_m q^{binom(m+1,2)}/(q;q)_m sum_j q^{binom(j,2)} [m over j]`
pub fn rr1_double_sum(order: usize, marker: usize) -> MarkedSeries {
    rr_double_sum(order, marker, binom2)
}

/// `sum_m q^{binom(m+1,2)}/(q;q)_m sum_j q^{binom(j+1,2)} [m over j]`
pub fn rr2_double_sum(order: usize, marker: usize) -> MarkedSeries {
    rr_double_sum(order, marker, |j| binom2(j + 1))
}

fn rr_double_sum(
    order: usize,
    marker: usize,
    inner_exponent: impl Fn(usize) -> usize,
) -> MarkedSeries {
    let one = BigInt::one();
    let mut acc = MarkedSeries::zero(order, marker);
    let mut denom_inv = QTrunc::one(order);
    for m in 0.. {
        if m > 0 {
            denom_inv.div_one_minus_qpow(m);
        }
        let stair = binom2(m + 1);
        if stair > order {
            break;
        }
        for j in 0..=m {
            let e = stair + inner_exponent(j);
            if e > order {
                break;
            }
            let prod = denom_inv
                .mul(&qbin_trunc(m, j, order))
                .expect("orders agree");
            acc.row_mut(0).add_assign_scaled_shifted(&prod, &one, e);
        }
    }
    acc
}

/// `sum (-1;q)_m q^{binom(m+1,2)} / (q;q)_m` (same as the main-2 sum).
pub fn rr1_poch_sum(order: usize, marker: usize) -> MarkedSeries {
    main2_sum(order, marker)
}

// ---- main-3 / rr2 chain -------------------------------------------------

/// `sum (-q;q)_n q^{binom(n+1,2)} / (q;q)_n`
pub fn main3_sum(order: usize, marker: usize) -> MarkedSeries {
    sum_poch_over_qq(-1, 0, 1, |n| binom2(n + 1), order, marker)
}

/// `(-q;q)_inf / (q^2;q^4)_inf`
pub fn main3_product(order: usize, marker: usize) -> MarkedSeries {
    let num = poch_infinite(-1, 0, 1, 1, order, marker).expect("offset 1");
    let den_inv = poch_infinite(1, 0, 2, 4, order, marker)
        .expect("offset 2")
        .invert()
        .expect("unit constant");
    num.mul(&den_inv).expect("shared shape")
}

/// `1 + sum_{m>=1} (1/(q;q)_m) sum_j [q^{binom(m+1,2)+binom(j+1,2)} [m-1 over j]
///  + q^{m+binom(m+1,2)+binom(j,2)} [m-1 over j-1]]`, the generating function
/// of `C_1` assembled from the basis polynomials of `G1(m)`.
pub fn rr2_basis_form(order: usize, marker: usize) -> MarkedSeries {
    let one = BigInt::one();
    let mut acc = MarkedSeries::one(order, marker);
    let mut denom_inv = QTrunc::one(order);
    for m in 1.. {
        denom_inv.div_one_minus_qpow(m);
        let stair = binom2(m + 1);
        if stair > order {
            break;
        }
        // smallest part 1~: q^{binom(m+1,2)+binom(j+1,2)} [m-1 over j]
        for j in 0..=m.saturating_sub(1) {
            let e = stair + binom2(j + 1);
            if e > order {
                break;
            }
            let prod = denom_inv
                .mul(&qbin_trunc(m - 1, j, order))
                .expect("orders agree");
            acc.row_mut(0).add_assign_scaled_shifted(&prod, &one, e);
        }
        // smallest part 2: q^{m+binom(m+1,2)+binom(j,2)} [m-1 over j-1]
        for j in 1..=m {
            let e = m + stair + binom2(j);
            if e > order {
                break;
            }
            let prod = denom_inv
                .mul(&qbin_trunc(m - 1, j - 1, order))
                .expect("orders agree");
            acc.row_mut(0).add_assign_scaled_shifted(&prod, &one, e);
        }
    }
    acc
}

/// `sum (-q;q)_m q^{binom(m+1,2)} / (q;q)_m` (same as the main-3 sum).
pub fn rr2_poch_sum(order: usize, marker: usize) -> MarkedSeries {
    main3_sum(order, marker)
}

// ---- section-2 identities -----------------------------------------------

/// `sum_n (a;q)_n q^{sn} / (q;q)_n` for the q-binomial theorem at `t = q^s`.
pub fn qbinom_sum(s: usize, order: usize, marker: usize) -> MarkedSeries {
    sum_poch_over_qq(1, 1, 0, move |n| s * n, order, marker)
}

/// `(a q^s; q)_inf / (q^s; q)_inf`
pub fn qbinom_product(s: usize, order: usize, marker: usize) -> MarkedSeries {
    let num = poch_infinite(1, 1, s, 1, order, marker).expect("marker factor");
    let den_inv = poch_infinite(1, 0, s, 1, order, marker)
        .expect("positive offset")
        .invert()
        .expect("unit constant");
    num.mul(&den_inv).expect("shared shape")
}

pub fn qbinom_sum_t1(order: usize, marker: usize) -> MarkedSeries {
    qbinom_sum(1, order, marker)
}

pub fn qbinom_sum_t2(order: usize, marker: usize) -> MarkedSeries {
    qbinom_sum(2, order, marker)
}

pub fn qbinom_sum_t3(order: usize, marker: usize) -> MarkedSeries {
    qbinom_sum(3, order, marker)
}

pub fn qbinom_product_t1(order: usize, marker: usize) -> MarkedSeries {
    qbinom_product(1, order, marker)
}

pub fn qbinom_product_t2(order: usize, marker: usize) -> MarkedSeries {
    qbinom_product(2, order, marker)
}

pub fn qbinom_product_t3(order: usize, marker: usize) -> MarkedSeries {
    qbinom_product(3, order, marker)
}

/// `sum_n t^n / (q;q)_n`
pub fn euler1_sum(order: usize, marker: usize) -> MarkedSeries {
    sum_marker_power_over_qq(|_| 0, order, marker)
}

/// `1 / (t;q)_inf`
pub fn euler1_product(order: usize, marker: usize) -> MarkedSeries {
    poch_infinite(1, 1, 0, 1, order, marker)
        .expect("marker factor")
        .invert()
        .expect("unit constant")
}

/// `sum_n t^n q^{binom(n,2)} / (q;q)_n`
pub fn euler2_sum(order: usize, marker: usize) -> MarkedSeries {
    sum_marker_power_over_qq(binom2, order, marker)
}

/// `(-t;q)_inf`
pub fn euler2_product(order: usize, marker: usize) -> MarkedSeries {
    poch_infinite(-1, 1, 0, 1, order, marker).expect("marker factor")
}

/// `sum_n (a;q)_n q^{binom(n+1,2)} / (q;q)_n`
pub fn lebesgue_sum(order: usize, marker: usize) -> MarkedSeries {
    sum_poch_over_qq(1, 1, 0, |n| binom2(n + 1), order, marker)
}

/// `(aq;q^2)_inf (-q;q)_inf`
pub fn lebesgue_product(order: usize, marker: usize) -> MarkedSeries {
    let a_side = poch_infinite(1, 1, 1, 2, order, marker).expect("offset 1");
    let q_side = poch_infinite(-1, 0, 1, 1, order, marker).expect("offset 1");
    a_side.mul(&q_side).expect("shared shape")
}

/// `(z;q)_N` as a finite product, `N` fixed at the registry default.
pub fn jsum_product(order: usize, marker: usize) -> MarkedSeries {
    poch_finite(1, 1, 0, 1, JSUM_DEFAULT_N, order, marker)
}

/// The `[N over j]` expansion of `(z;q)_N` at the registry default `N`.
pub fn jsum_expansion(order: usize, marker: usize) -> MarkedSeries {
    poch_expand_jsum(JSUM_DEFAULT_N, order, marker)
}

// ---- section-3 family identities ----------------------------------------

fn one_minus_q_times(mut s: MarkedSeries) -> MarkedSeries {
    s.mul_one_plus_term(&BigInt::from(-1), 0, 1);
    s
}

/// `(1-q) * F_od_ed(x; q)` from the closed-form assembly.
pub fn family_od_ed_lhs(order: usize, marker: usize) -> MarkedSeries {
    one_minus_q_times(assemble_family_series(FamilyId::OdEd, order, marker))
}

/// `(-xq;q^2)_inf - q (-xq^2;q^2)_inf`
pub fn family_od_ed_rhs(order: usize, marker: usize) -> MarkedSeries {
    let mut a = poch_infinite(-1, 1, 1, 2, order, marker).expect("offset 1");
    let b = poch_infinite(-1, 1, 2, 2, order, marker).expect("offset 2");
    a.add_assign_scaled_shifted(&b, &BigInt::from(-1), 0, 1);
    a
}

/// `(1-q) * F_ed_od(x; q)` from the closed-form assembly.
pub fn family_ed_od_lhs(order: usize, marker: usize) -> MarkedSeries {
    one_minus_q_times(assemble_family_series(FamilyId::EdOd, order, marker))
}

/// `q [(-x;q^2)_inf - (-xq;q^2)_inf]`
pub fn family_ed_od_rhs(order: usize, marker: usize) -> MarkedSeries {
    let a = poch_infinite(-1, 1, 0, 2, order, marker).expect("marker factor");
    let b = poch_infinite(-1, 1, 1, 2, order, marker).expect("offset 1");
    let mut out = MarkedSeries::zero(order, marker);
    out.add_assign_scaled_shifted(&a, &BigInt::one(), 0, 1);
    out.add_assign_scaled_shifted(&b, &BigInt::from(-1), 0, 1);
    out
}

/// `F_od_eu(x; q)` from the closed-form assembly.
pub fn family_od_eu_lhs(order: usize, marker: usize) -> MarkedSeries {
    assemble_family_series(FamilyId::OdEu, order, marker)
}

/// `sum_{m>=1} sum_{j=1}^m x^m q^{(m-j)^2+2m}/(q^2;q^2)_m + (-xq;q^2)_inf`
pub fn family_od_eu_rhs(order: usize, marker: usize) -> MarkedSeries {
    let mut acc = poch_infinite(-1, 1, 1, 2, order, marker).expect("offset 1");
    family_double_sum(&mut acc, order, marker, |m, j| (m - j) * (m - j) + 2 * m);
    acc
}

/// `F_ou_ed(x; q)` from the closed-form assembly.
pub fn family_ou_ed_lhs(order: usize, marker: usize) -> MarkedSeries {
    assemble_family_series(FamilyId::OuEd, order, marker)
}

/// `sum_{m>=1} sum_{j=1}^m x^m q^{j(2m-j)+m}/(q^2;q^2)_m + 1/(xq;q^2)_inf`
pub fn family_ou_ed_rhs(order: usize, marker: usize) -> MarkedSeries {
    let mut acc = poch_infinite(1, 1, 1, 2, order, marker)
        .expect("offset 1")
        .invert()
        .expect("unit constant");
    family_double_sum(&mut acc, order, marker, |m, j| j * (2 * m - j) + m);
    acc
}

/// Adds `sum_{m>=1} sum_{j=1}^m x^m q^{e(m,j)}/(q^2;q^2)_m` into `acc`; the
/// outer loop stops once even the smallest exponent at part count `m`
/// overflows the order.
fn family_double_sum(
    acc: &mut MarkedSeries,
    order: usize,
    marker: usize,
    exponent: impl Fn(usize, usize) -> usize,
) {
    let one = BigInt::one();
    let mut denom_inv = QTrunc::one(order);
    for m in 1..=marker {
        denom_inv.div_one_minus_qpow(2 * m);
        let min_e = (1..=m).map(|j| exponent(m, j)).min().unwrap();
        if min_e > order {
            break;
        }
        for j in 1..=m {
            let e = exponent(m, j);
            if e > order {
                continue;
            }
            acc.row_mut(m).add_assign_scaled_shifted(&denom_inv, &one, e);
        }
    }
}
