use super::{visit_m_part_overpartitions, OverPart, Overpartition};
use crate::partitions::visit_partitions;
use crate::qseries::{binom2, gaussian_binomial, QPolynomial};
use crate::sip::{SeparabilityReport, Violation, ViolationKind};

/// Whether a generating polynomial is computed by direct enumeration of the
/// basis family or from its closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolynomialMode {
    Enumerated,
    Closed,
}

/// The basis family `O(m)`: the smallest part is `1` or `1~`; above a
/// non-overlined part of size `t` the next part has size `t`, above an
/// overlined one it has size `t + 1`, with free decoration either way.
/// Exactly `2^m` members, indexed by decoration mask.
pub fn enumerate_o(m: usize) -> impl Iterator<Item = Overpartition> {
    assert!(m >= 1);
    (0u64..(1u64 << m)).map(move |mask| {
        let mut parts: Vec<OverPart> = Vec::with_capacity(m);
        let mut size = 1u32;
        for bit in 0..m {
            if bit > 0 && parts[bit - 1].overlined {
                size += 1;
            }
            parts.push(OverPart {
                size,
                overlined: mask & (1 << bit) != 0,
            });
        }
        parts.reverse();
        Overpartition::from_slice(&parts)
    })
}

/// Membership predicate for `O(m)` (any `m >= 1`): smallest part of size 1
/// and the decoded successor rule at every step.
pub fn in_o(op: &Overpartition) -> bool {
    let parts = op.parts();
    if parts.is_empty() {
        return false;
    }
    if parts[parts.len() - 1].size != 1 {
        return false;
    }
    parts.windows(2).all(|w| {
        let (upper, lower) = (w[0], w[1]);
        if lower.overlined {
            upper.size == lower.size + 1
        } else {
            upper.size == lower.size
        }
    })
}

/// The chain family `G(m)` with a fixed smallest part: above a part of size
/// `t` the next part is `t+1` overlined or `t+2` non-overlined. Exactly
/// `2^{m-1}` members per smallest part, indexed by decoration mask.
pub fn enumerate_g(m: usize, smallest: OverPart) -> impl Iterator<Item = Overpartition> {
    assert!(m >= 1);
    assert!(smallest.size >= 1);
    (0u64..(1u64 << (m - 1))).map(move |mask| {
        let mut parts: Vec<OverPart> = Vec::with_capacity(m);
        parts.push(smallest);
        for bit in 0..m - 1 {
            let prev = parts[bit].size;
            let overlined = mask & (1 << bit) != 0;
            parts.push(OverPart {
                size: if overlined { prev + 1 } else { prev + 2 },
                overlined,
            });
        }
        parts.reverse();
        Overpartition::from_slice(&parts)
    })
}

/// `G1(m)`: members of `G(m)` with smallest part `1~` or `2`.
pub fn enumerate_g1(m: usize) -> impl Iterator<Item = Overpartition> {
    enumerate_g(m, OverPart::overlined(1)).chain(enumerate_g(m, OverPart::plain(2)))
}

/// `G2(m)`: members of `G(m)` with smallest part `1` or `1~`.
pub fn enumerate_g2(m: usize) -> impl Iterator<Item = Overpartition> {
    enumerate_g(m, OverPart::plain(1)).chain(enumerate_g(m, OverPart::overlined(1)))
}

/// Membership predicate for `G(m)` chains (ignoring the smallest part).
pub fn in_g(op: &Overpartition) -> bool {
    op.parts().windows(2).all(|w| {
        let (upper, lower) = (w[0], w[1]);
        upper.size == lower.size + if upper.overlined { 1 } else { 2 }
    })
}

/// Membership in `C_r` (`r` = 1 or 2): successive sizes drop by at least 1
/// under an overlined upper part and at least 2 under a non-overlined one,
/// and at most `r - 1` non-overlined parts equal 1 (an overlined `1~` does
/// not count).
pub fn in_c(op: &Overpartition, r: u8) -> bool {
    in_c_parts(op.parts(), r)
}

pub(crate) fn in_c_parts(parts: &[OverPart], r: u8) -> bool {
    assert!(r == 1 || r == 2);
    let gaps_ok = parts.windows(2).all(|w| {
        let (upper, lower) = (w[0], w[1]);
        let min_gap = if upper.overlined { 1 } else { 2 };
        upper.size >= lower.size + min_gap
    });
    let plain_ones = parts.iter().filter(|p| p.size == 1 && !p.overlined).count();
    gaps_ok && plain_ones <= (r - 1) as usize
}

/// `b_O(m, j)` / `b_O(m, j~)`: the generating polynomial for members of
/// `O(m)` with the given largest part. The closed form is
/// `q^{m + binom(j,2)} [m-1 over j-1]`, the same for both decorations.
pub fn b_o(m: usize, largest: OverPart, mode: PolynomialMode) -> QPolynomial {
    assert!(m >= 1 && largest.size >= 1);
    match mode {
        PolynomialMode::Enumerated => {
            let mut p = QPolynomial::zero();
            for op in enumerate_o(m) {
                if op.largest() == Some(largest) {
                    p.add_monomial(1, op.weight() as usize);
                }
            }
            p
        }
        PolynomialMode::Closed => {
            let j = largest.size as usize;
            gaussian_binomial(m - 1, j - 1).shift(m + binom2(j))
        }
    }
}

/// Which smallest part a `b_G(m, j, .)` generating polynomial fixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallestPart {
    One,
    OneBar,
    Two,
}

impl SmallestPart {
    pub fn part(self) -> OverPart {
        match self {
            SmallestPart::One => OverPart::plain(1),
            SmallestPart::OneBar => OverPart::overlined(1),
            SmallestPart::Two => OverPart::plain(2),
        }
    }
}

/// `b_G(m, j)` / `b_G(m, j~)`: generating polynomial for members of `G2(m)`
/// with the given exact largest part.
///
/// Closed forms: `b_G(m, (m+j)~) = 2 q^{binom(m+1,2) + j(j+3)/2} [m-2 over j]`
/// for `m >= 2`, and `b_G(m, j) = q b_G(m, (j-1)~)` for `j >= 2`; for `m = 1`
/// the two members `(1)` and `(1~)` are handled directly.
pub fn b_g2_largest(m: usize, largest: OverPart, mode: PolynomialMode) -> QPolynomial {
    assert!(m >= 1 && largest.size >= 1);
    match mode {
        PolynomialMode::Enumerated => {
            let mut p = QPolynomial::zero();
            for op in enumerate_g2(m) {
                if op.largest() == Some(largest) {
                    p.add_monomial(1, op.weight() as usize);
                }
            }
            p
        }
        PolynomialMode::Closed => {
            if m == 1 {
                return if largest.size == 1 {
                    QPolynomial::monomial(1, 1)
                } else {
                    QPolynomial::zero()
                };
            }
            let j = largest.size as usize;
            if largest.overlined {
                if j < m {
                    return QPolynomial::zero();
                }
                let jj = j - m;
                gaussian_binomial(m - 2, jj)
                    .scale(2)
                    .shift(binom2(m + 1) + jj * (jj + 3) / 2)
            } else {
                if j < 2 {
                    return QPolynomial::zero(); // largest size m >= 2 is forced
                }
                b_g2_largest(m, OverPart::overlined((j - 1) as u32), PolynomialMode::Closed)
                    .shift(1)
            }
        }
    }
}

/// `b_G(m, j, 1)`, `b_G(m, j, 1~)`, `b_G(m, j, 2)`: generating polynomial for
/// members of `G(m)` with the given smallest part and largest part of size
/// `j` (either decoration).
///
/// Closed forms with `j = m + jj`:
/// smallest 1 or 1~: `q^{binom(m+1,2) + binom(jj+1,2)} [m-1 over jj]`;
/// smallest 2: `q^{m + binom(m+1,2) + binom(jj,2)} [m-1 over jj-1]`
/// (zero at `jj = 0`).
pub fn b_g_size_smallest(
    m: usize,
    largest_size: u32,
    smallest: SmallestPart,
    mode: PolynomialMode,
) -> QPolynomial {
    assert!(m >= 1 && largest_size >= 1);
    match mode {
        PolynomialMode::Enumerated => {
            let mut p = QPolynomial::zero();
            for op in enumerate_g(m, smallest.part()) {
                if op.largest().map(|l| l.size) == Some(largest_size) {
                    p.add_monomial(1, op.weight() as usize);
                }
            }
            p
        }
        PolynomialMode::Closed => {
            let j = largest_size as usize;
            if j < m {
                return QPolynomial::zero();
            }
            let jj = j - m;
            match smallest {
                SmallestPart::One | SmallestPart::OneBar => {
                    gaussian_binomial(m - 1, jj).shift(binom2(m + 1) + binom2(jj + 1))
                }
                SmallestPart::Two => {
                    if jj == 0 {
                        return QPolynomial::zero();
                    }
                    gaussian_binomial(m - 1, jj - 1).shift(m + binom2(m + 1) + binom2(jj))
                }
            }
        }
    }
}

/// A recurrence or equality that failed to hold at the given parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceFailure {
    pub rule: &'static str,
    pub m: usize,
    pub j: usize,
}

/// Verifies, on enumerated polynomials, the recurrences tying the basis
/// generating polynomials together:
///
/// - `b_O(m, j) = q^j [b_O(m-1, j) + b_O(m-1, j-1)]` (m, j >= 2)
/// - `b_G(m, j) = q b_G(m, (j-1)~)` (m, j >= 2)
/// - `b_G(m, j~) = q^j [q b_G(m-1, (j-2)~) + b_G(m-1, (j-1)~)]` (m, j >= 3)
/// - `b_G(m, j, 1) = b_G(m, j, 1~)` (m, j >= 1)
/// - `b_G(m, m+j, 2) = q^m b_G(m, m+j-1, 1)` (m, j >= 1)
///
/// The returned failure list is expected to be empty.
pub fn check_recurrences(bound_m: usize, bound_j: usize) -> Vec<RecurrenceFailure> {
    let mut failures = Vec::new();
    let enumerated = PolynomialMode::Enumerated;

    for m in 2..=bound_m {
        for j in 2..=bound_j {
            let lhs = b_o(m, OverPart::plain(j as u32), enumerated);
            let rhs = b_o(m - 1, OverPart::plain(j as u32), enumerated)
                .add(&b_o(m - 1, OverPart::plain(j as u32 - 1), enumerated))
                .shift(j);
            if lhs != rhs {
                failures.push(RecurrenceFailure {
                    rule: "b_O(m,j) = q^j [b_O(m-1,j) + b_O(m-1,j-1)]",
                    m,
                    j,
                });
            }
        }
    }

    for m in 2..=bound_m {
        for j in 2..=bound_j {
            let lhs = b_g2_largest(m, OverPart::plain(j as u32), enumerated);
            let rhs = b_g2_largest(m, OverPart::overlined(j as u32 - 1), enumerated).shift(1);
            if lhs != rhs {
                failures.push(RecurrenceFailure {
                    rule: "b_G(m,j) = q b_G(m,(j-1)~)",
                    m,
                    j,
                });
            }
        }
    }

    for m in 3..=bound_m {
        for j in 3..=bound_j {
            let lhs = b_g2_largest(m, OverPart::overlined(j as u32), enumerated);
            let rhs = b_g2_largest(m - 1, OverPart::overlined(j as u32 - 2), enumerated)
                .shift(1)
                .add(&b_g2_largest(m - 1, OverPart::overlined(j as u32 - 1), enumerated))
                .shift(j);
            if lhs != rhs {
                failures.push(RecurrenceFailure {
                    rule: "b_G(m,j~) = q^j [q b_G(m-1,(j-2)~) + b_G(m-1,(j-1)~)]",
                    m,
                    j,
                });
            }
        }
    }

    for m in 1..=bound_m {
        for j in 1..=bound_j {
            let one = b_g_size_smallest(m, j as u32, SmallestPart::One, enumerated);
            let one_bar = b_g_size_smallest(m, j as u32, SmallestPart::OneBar, enumerated);
            if one != one_bar {
                failures.push(RecurrenceFailure {
                    rule: "b_G(m,j,1) = b_G(m,j,1~)",
                    m,
                    j,
                });
            }
        }
    }

    for m in 1..=bound_m {
        for j in 1..=bound_j {
            let lhs = b_g_size_smallest(m, (m + j) as u32, SmallestPart::Two, enumerated);
            let rhs = b_g_size_smallest(m, (m + j - 1) as u32, SmallestPart::One, enumerated)
                .shift(m);
            if lhs != rhs {
                failures.push(RecurrenceFailure {
                    rule: "b_G(m,m+j,2) = q^m b_G(m,m+j-1,1)",
                    m,
                    j,
                });
            }
        }
    }

    failures
}

/// One decomposition of an overpartition over a basis: the residual is added
/// to the part sizes while the decorations ride with the positions, so the
/// decomposed overpartition carries the decoration pattern of its base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverDecomposition {
    pub base: Overpartition,
    pub residual: Vec<u32>,
}

/// All ways to write `lam` as a basis member plus a weakly decreasing
/// nonnegative residual (modulus 1) with matching decoration pattern.
pub fn decompose_over(lam: &Overpartition, bases: &[Overpartition]) -> Vec<OverDecomposition> {
    let mut out = Vec::new();
    'bases: for b in bases {
        if b.len() != lam.len() {
            continue;
        }
        let mut residual = Vec::with_capacity(lam.len());
        let mut prev: Option<u32> = None;
        for (l, bp) in lam.parts().iter().zip(b.parts()) {
            if l.overlined != bp.overlined || l.size < bp.size {
                continue 'bases;
            }
            let r = l.size - bp.size;
            if let Some(prev) = prev {
                if r > prev {
                    continue 'bases;
                }
            }
            prev = Some(r);
            residual.push(r);
        }
        out.push(OverDecomposition {
            base: b.clone(),
            residual,
        });
    }
    out
}

/// Separability check for an overpartition class against per-part-count
/// bases: every member within bounds must decompose uniquely, and every
/// `b + pi` within the weight bound must lie in the class.
pub fn verify_separability_over(
    family_name: &str,
    contains: &dyn Fn(&Overpartition) -> bool,
    basis_by_m: &[Vec<Overpartition>],
    max_parts: usize,
    max_weight: usize,
) -> SeparabilityReport {
    let mut violations = Vec::new();

    for m in 1..=max_parts {
        let bases: &[Overpartition] = basis_by_m.get(m).map_or(&[], Vec::as_slice);
        for n in m..=max_weight {
            visit_m_part_overpartitions(n, m, |parts| {
                let op = Overpartition::from_slice(parts);
                if !contains(&op) {
                    return;
                }
                match decompose_over(&op, bases).len() {
                    0 => violations.push(Violation {
                        kind: ViolationKind::Existence,
                        partition: op.to_string(),
                        detail: "no basis overpartition covers this member".into(),
                    }),
                    1 => {}
                    more => violations.push(Violation {
                        kind: ViolationKind::Uniqueness,
                        partition: op.to_string(),
                        detail: format!("{more} distinct decompositions"),
                    }),
                }
            });
        }
    }

    for m in 1..=max_parts {
        let bases: &[Overpartition] = basis_by_m.get(m).map_or(&[], Vec::as_slice);
        for b in bases {
            let wb = b.weight() as usize;
            if wb > max_weight {
                continue;
            }
            for s in 0..=(max_weight - wb) {
                visit_partitions(s, |res_parts| {
                    if res_parts.len() > m {
                        return;
                    }
                    let mut parts: Vec<OverPart> = b.parts().to_vec();
                    for (i, &r) in res_parts.iter().enumerate() {
                        parts[i].size += r;
                    }
                    let candidate = Overpartition::new(parts);
                    let ok = candidate.as_ref().is_some_and(contains);
                    if !ok {
                        violations.push(Violation {
                            kind: ViolationKind::Closure,
                            partition: candidate
                                .map_or_else(|| "<invalid>".into(), |c| c.to_string()),
                            detail: format!("basis element {b} plus residual leaves the family"),
                        });
                    }
                });
            }
        }
    }

    SeparabilityReport {
        family: family_name.to_string(),
        k: 1,
        max_parts,
        max_weight,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(parts: &[(u32, bool)]) -> Overpartition {
        Overpartition::new(
            parts
                .iter()
                .map(|&(size, overlined)| OverPart { size, overlined })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn o_of_one_and_counts() {
        let members: Vec<String> = enumerate_o(1).map(|p| p.to_string()).collect();
        assert_eq!(members, vec!["1", "1~"]);
        for m in 1..=10 {
            assert_eq!(enumerate_o(m).count() as u64, 1 << m, "m = {m}");
        }
    }

    #[test]
    fn o_members_satisfy_definition_and_are_exhaustive() {
        for m in 1..=5usize {
            let listed: std::collections::HashSet<String> =
                enumerate_o(m).map(|p| p.to_string()).collect();
            assert_eq!(listed.len(), 1 << m);
            for member in enumerate_o(m) {
                assert!(in_o(&member), "{member}");
                assert_eq!(member.len(), m);
            }
            // conversely, filtering all overpartitions reproduces the family
            let max_weight = 2 * m * m;
            let mut filtered = std::collections::HashSet::new();
            for n in m..=max_weight {
                visit_m_part_overpartitions(n, m, |parts| {
                    let cand = Overpartition::from_slice(parts);
                    if in_o(&cand) {
                        filtered.insert(cand.to_string());
                    }
                });
            }
            assert_eq!(filtered, listed, "m = {m}");
        }
    }

    #[test]
    fn b_o_base_cases() {
        assert_eq!(
            b_o(1, OverPart::plain(1), PolynomialMode::Enumerated),
            QPolynomial::monomial(1, 1)
        );
        for j in 2..=4 {
            assert!(b_o(1, OverPart::plain(j), PolynomialMode::Enumerated).is_zero());
            assert!(b_o(1, OverPart::overlined(j), PolynomialMode::Closed).is_zero());
        }
        for m in 1..=8 {
            // only (1^m) has largest part 1
            assert_eq!(
                b_o(m, OverPart::plain(1), PolynomialMode::Enumerated),
                QPolynomial::monomial(1, m)
            );
        }
    }

    #[test]
    fn b_o_closed_matches_enumerated() {
        for m in 1..=8 {
            for j in 1..=m as u32 + 1 {
                for overlined in [false, true] {
                    let largest = OverPart { size: j, overlined };
                    assert_eq!(
                        b_o(m, largest, PolynomialMode::Enumerated),
                        b_o(m, largest, PolynomialMode::Closed),
                        "m = {m}, largest = {largest}"
                    );
                }
            }
        }
    }

    #[test]
    fn b_o_overline_toggle_equality() {
        // b_O(3, 2~) = b_O(3, 2) = q^4 (1 + q)
        let expect = QPolynomial::from_coeffs(vec![0.into(), 0.into(), 0.into(), 0.into(), 1.into(), 1.into()]);
        assert_eq!(b_o(3, OverPart::plain(2), PolynomialMode::Enumerated), expect);
        assert_eq!(
            b_o(3, OverPart::overlined(2), PolynomialMode::Enumerated),
            expect
        );
    }

    #[test]
    fn g_chain_cardinalities() {
        assert_eq!(
            enumerate_g(1, OverPart::plain(1)).map(|p| p.to_string()).collect::<Vec<_>>(),
            vec!["1"]
        );
        for m in 1..=10 {
            assert_eq!(
                enumerate_g(m, OverPart::plain(1)).count() as u64,
                1 << (m - 1)
            );
            assert_eq!(enumerate_g1(m).count() as u64, 1 << m);
            assert_eq!(enumerate_g2(m).count() as u64, 1 << m);
        }
    }

    #[test]
    fn g_members_satisfy_chain_rule() {
        for m in 1..=6 {
            for member in enumerate_g1(m).chain(enumerate_g2(m)) {
                assert!(in_g(&member), "{member}");
            }
        }
    }

    #[test]
    fn c_membership_examples() {
        assert!(in_c(&op(&[(5, false), (3, true), (2, true), (1, false)]), 2));
        assert!(!in_c(&op(&[(3, false), (2, false), (1, false)]), 2));
        assert!(!in_c(&op(&[(2, true), (1, false)]), 1));
        assert!(in_c(&op(&[(2, true), (1, true)]), 1));
        assert!(in_c(&Overpartition::empty(), 1));
    }

    #[test]
    fn b_g2_examples() {
        // two members with overlined largest at m=2: (2~,1) and (2~,1~)
        let expect = QPolynomial::monomial(2, 3);
        assert_eq!(
            b_g2_largest(2, OverPart::overlined(2), PolynomialMode::Enumerated),
            expect
        );
        assert_eq!(
            b_g2_largest(2, OverPart::overlined(2), PolynomialMode::Closed),
            expect
        );
    }

    #[test]
    fn b_g_closed_matches_enumerated() {
        for m in 1..=8usize {
            for size in 1..=(2 * m + 2) as u32 {
                for overlined in [false, true] {
                    let largest = OverPart { size, overlined };
                    assert_eq!(
                        b_g2_largest(m, largest, PolynomialMode::Enumerated),
                        b_g2_largest(m, largest, PolynomialMode::Closed),
                        "g2: m = {m}, largest = {largest}"
                    );
                }
                for smallest in [SmallestPart::One, SmallestPart::OneBar, SmallestPart::Two] {
                    assert_eq!(
                        b_g_size_smallest(m, size, smallest, PolynomialMode::Enumerated),
                        b_g_size_smallest(m, size, smallest, PolynomialMode::Closed),
                        "g: m = {m}, size = {size}, smallest = {smallest:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn b_g_smallest_one_base_case() {
        for j in 0..=3usize {
            let expect = if j == 0 {
                QPolynomial::monomial(1, 1)
            } else {
                QPolynomial::zero()
            };
            assert_eq!(
                b_g_size_smallest(1, (1 + j) as u32, SmallestPart::One, PolynomialMode::Closed),
                expect
            );
        }
    }

    #[test]
    fn b_g_two_at_minimal_size_vanishes() {
        for m in 1..=8 {
            assert!(b_g_size_smallest(m, m as u32, SmallestPart::Two, PolynomialMode::Closed)
                .is_zero());
            assert!(
                b_g_size_smallest(m, m as u32, SmallestPart::Two, PolynomialMode::Enumerated)
                    .is_zero()
            );
        }
    }

    #[test]
    fn recurrences_hold() {
        assert_eq!(check_recurrences(8, 8), Vec::new());
    }

    #[test]
    fn o_partition_of_family_by_largest_part() {
        // sum over O(m) of q^{|pi|} equals sum_j [b_O(m,j) + b_O(m,j~)]
        for m in 1..=8usize {
            let mut total = QPolynomial::zero();
            for member in enumerate_o(m) {
                total.add_monomial(1, member.weight() as usize);
            }
            let mut by_largest = QPolynomial::zero();
            for j in 1..=m as u32 {
                by_largest =
                    by_largest.add(&b_o(m, OverPart::plain(j), PolynomialMode::Enumerated));
                by_largest =
                    by_largest.add(&b_o(m, OverPart::overlined(j), PolynomialMode::Enumerated));
            }
            assert_eq!(total, by_largest, "m = {m}");
        }
    }

    #[test]
    fn decompose_over_examples() {
        let bases: Vec<Overpartition> = enumerate_o(4).collect();
        // (3,3,2~,1) has decoration pattern (F,F,T,F) -> base (2,2,1~,1)
        let lam = op(&[(3, false), (3, false), (2, true), (1, false)]);
        let decs = decompose_over(&lam, &bases);
        assert_eq!(decs.len(), 1);
        assert_eq!(decs[0].base, op(&[(2, false), (2, false), (1, true), (1, false)]));
        assert_eq!(decs[0].residual, vec![1, 1, 1, 0]);
        // base members decompose trivially
        for b in &bases {
            let decs = decompose_over(b, &bases);
            assert_eq!(decs.len(), 1);
            assert!(decs[0].residual.iter().all(|&r| r == 0));
        }
    }

    #[test]
    fn separability_small_bounds() {
        let o_bases: Vec<Vec<Overpartition>> = (0..=4)
            .map(|m| if m == 0 { Vec::new() } else { enumerate_o(m).collect() })
            .collect();
        let report = verify_separability_over("overpartitions", &|_| true, &o_bases, 4, 16);
        assert!(report.is_clean(), "{:?}", report.violations.first());

        let g2_bases: Vec<Vec<Overpartition>> = (0..=4)
            .map(|m| if m == 0 { Vec::new() } else { enumerate_g2(m).collect() })
            .collect();
        let report =
            verify_separability_over("C2", &|p| in_c(p, 2), &g2_bases, 4, 16);
        assert!(report.is_clean(), "{:?}", report.violations.first());

        let g1_bases: Vec<Vec<Overpartition>> = (0..=4)
            .map(|m| if m == 0 { Vec::new() } else { enumerate_g1(m).collect() })
            .collect();
        let report =
            verify_separability_over("C1", &|p| in_c(p, 1), &g1_bases, 4, 16);
        assert!(report.is_clean(), "{:?}", report.violations.first());
    }

    #[test]
    fn broken_basis_reports_violations() {
        // dropping one O(3) base breaks existence
        let mut bases: Vec<Vec<Overpartition>> = (0..=3)
            .map(|m| if m == 0 { Vec::new() } else { enumerate_o(m).collect() })
            .collect();
        bases[3].pop();
        let report = verify_separability_over("overpartitions", &|_| true, &bases, 3, 10);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Existence));
    }
}
