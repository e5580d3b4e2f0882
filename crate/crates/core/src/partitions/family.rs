use super::{CountTable, Partition};
use crate::qseries::MarkedSeries;

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn matches(self, p: u32) -> bool {
        match self {
            Parity::Odd => p % 2 == 1,
            Parity::Even => p.is_multiple_of(2),
        }
    }

    pub fn opposite(self) -> Parity {
        match self {
            Parity::Odd => Parity::Even,
            Parity::Even => Parity::Odd,
        }
    }
}

/// One of the six parity-separated families treated here, named by the
/// couplets of `p^{zw}_{xy}`: superscript (first) constrains the larger
/// parts, subscript (second) the smaller parts; `d` = distinct, `u` =
/// unlimited multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    OdEd,
    EdOd,
    EdOu,
    EuOd,
    OdEu,
    OuEd,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::OdEd,
        FamilyId::EdOd,
        FamilyId::EdOu,
        FamilyId::EuOd,
        FamilyId::OdEu,
        FamilyId::OuEd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::OdEd => "od_ed",
            FamilyId::EdOd => "ed_od",
            FamilyId::EdOu => "ed_ou",
            FamilyId::EuOd => "eu_od",
            FamilyId::OdEu => "od_eu",
            FamilyId::OuEd => "ou_ed",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyId> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    /// The membership predicate data for this family.
    pub fn spec(self) -> ParityFamilySpec {
        match self {
            // large odd distinct over small even distinct
            FamilyId::OdEd => ParityFamilySpec::new(Parity::Even, true, true),
            // large even distinct over small odd distinct
            FamilyId::EdOd => ParityFamilySpec::new(Parity::Odd, true, true),
            // large even distinct over small odd unlimited
            FamilyId::EdOu => ParityFamilySpec::new(Parity::Odd, false, true),
            // large even unlimited over small odd distinct
            FamilyId::EuOd => ParityFamilySpec::new(Parity::Odd, true, false),
            // large odd distinct over small even unlimited
            FamilyId::OdEu => ParityFamilySpec::new(Parity::Even, false, true),
            // large odd unlimited over small even distinct
            FamilyId::OuEd => ParityFamilySpec::new(Parity::Even, true, false),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Partitions whose parts of the small parity all lie strictly below the
/// parts of the other parity. When the small parity is odd, odd parts must
/// appear; families with an even small parity contain the empty partition.
///
/// The generic spec accepts all eight couplets (both modes unlimited
/// included), though closed forms are registered only for six.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityFamilySpec {
    pub small_parity: Parity,
    pub small_distinct: bool,
    pub large_distinct: bool,
    pub small_required: bool,
}

impl ParityFamilySpec {
    pub fn new(small_parity: Parity, small_distinct: bool, large_distinct: bool) -> Self {
        ParityFamilySpec {
            small_parity,
            small_distinct,
            large_distinct,
            // odd smaller parity forces odd parts to appear
            small_required: small_parity == Parity::Odd,
        }
    }

    pub fn large_parity(&self) -> Parity {
        self.small_parity.opposite()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        parity_family_contains(p, self)
    }
}

/// Membership test: the partition must split as a (large-parity) block above
/// a (small-parity) block with every large part strictly greater than every
/// small part, distinctness per block mode, and a nonempty small block when
/// required. Blocks of a single parity are allowed subject to that
/// requirement.
pub fn parity_family_contains(p: &Partition, spec: &ParityFamilySpec) -> bool {
    let parts = p.parts();
    if parts.is_empty() {
        return !spec.small_required;
    }
    let small = spec.small_parity;
    // locate the boundary: all large-parity parts must precede all
    // small-parity parts in the descending listing
    let boundary = parts
        .iter()
        .position(|&x| small.matches(x))
        .unwrap_or(parts.len());
    let (large_block, small_block) = parts.split_at(boundary);
    if small_block.iter().any(|&x| !small.matches(x)) {
        return false; // large-parity part below a small-parity part
    }
    if spec.small_required && small_block.is_empty() {
        return false;
    }
    // strict separation across the boundary is automatic: the listing is
    // weakly decreasing and the parities differ, so no equality can occur
    if spec.large_distinct && large_block.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    if spec.small_distinct && small_block.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    true
}

/// Calls `f` with every family member of weight `n` having exactly `m`
/// parts, in reverse-lexicographic order. Generation prunes on the family
/// structure, visiting only prefixes that can extend to members.
pub fn visit_family_members(
    spec: &ParityFamilySpec,
    m: usize,
    n: usize,
    mut f: impl FnMut(&[u32]),
) {
    if m == 0 {
        if n == 0 && !spec.small_required {
            f(&[]);
        }
        return;
    }
    let mut buf: Vec<u32> = Vec::with_capacity(m);
    family_rec(spec, n, m, n, false, &mut buf, &mut f);
}

fn family_rec(
    spec: &ParityFamilySpec,
    remaining: usize,
    slots: usize,
    max_part: usize,
    in_small_block: bool,
    buf: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if slots == 0 {
        if remaining == 0 && (!spec.small_required || in_small_block) {
            f(buf);
        }
        return;
    }
    if remaining < slots {
        return;
    }
    let hi = max_part.min(remaining - (slots - 1));
    // parts are bounded by p from here down, so p * slots must cover the rest
    let lo = remaining.div_ceil(slots);
    if lo > hi {
        return;
    }
    for p in (lo as u32..=hi as u32).rev() {
        let small = spec.small_parity.matches(p);
        if in_small_block && !small {
            continue; // once in the small block, stay there
        }
        // equal adjacent parts share a parity, hence a block
        if buf.last() == Some(&p) {
            let distinct = if small {
                spec.small_distinct
            } else {
                spec.large_distinct
            };
            if distinct {
                continue;
            }
        }
        buf.push(p);
        family_rec(
            spec,
            remaining - p as usize,
            slots - 1,
            p as usize,
            in_small_block || small,
            buf,
            f,
        );
        buf.pop();
    }
}

/// `p^{zw}_{xy}(m, n)` by exhaustive enumeration.
pub fn count_parity_family(spec: &ParityFamilySpec, m: usize, n: usize) -> u64 {
    let mut count = 0;
    visit_family_members(spec, m, n, |_| count += 1);
    count
}

/// Table of family counts for all `m <= n <= max_n`; the `(0, 0)` entry is 1
/// exactly when the family contains the empty partition.
pub fn family_count_table(spec: &ParityFamilySpec, max_n: usize) -> CountTable {
    let mut table = CountTable::new(max_n, max_n);
    for n in 0..=max_n {
        for m in 0..=n {
            visit_family_members(spec, m, n, |_| table.increment(m, n));
        }
    }
    table
}

/// The x-marked generating series of the family by direct enumeration:
/// cell `(m, n)` counts members of weight `n` with exactly `m` parts.
pub fn family_series_enumerated(spec: &ParityFamilySpec, order: usize) -> MarkedSeries {
    let mut series = MarkedSeries::zero(order, order);
    for n in 0..=order {
        for m in 0..=n {
            let c = count_parity_family(spec, m, n);
            if c != 0 {
                *series.coeff_mut(m, n) += num_bigint::BigInt::from(c);
            }
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::PartitionIter;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn membership_examples() {
        // (5,4,2) in P^od_ed: 5 odd above distinct evens 4, 2
        assert!(parity_family_contains(&part(&[5, 4, 2]), &FamilyId::OdEd.spec()));
        // (4,4,1) fails P^ed_od: large even parts must be distinct
        assert!(!parity_family_contains(&part(&[4, 4, 1]), &FamilyId::EdOd.spec()));
        // (2,2) fails P^ed_od: odd parts must appear
        assert!(!parity_family_contains(&part(&[2, 2]), &FamilyId::EdOd.spec()));
        // all-large-parity block is fine when the small block is optional
        assert!(parity_family_contains(&part(&[5, 1]), &FamilyId::OdEd.spec()));
        assert!(parity_family_contains(&part(&[4, 2]), &FamilyId::OdEd.spec()));
        // empty partition membership tracks small_required
        assert!(parity_family_contains(&Partition::empty(), &FamilyId::OdEd.spec()));
        assert!(!parity_family_contains(&Partition::empty(), &FamilyId::EdOd.spec()));
        // parity interleaving is rejected
        assert!(!parity_family_contains(&part(&[5, 2, 1]), &FamilyId::OdEd.spec()));
    }

    #[test]
    fn pruned_generation_matches_filter() {
        for family in FamilyId::ALL {
            let spec = family.spec();
            for n in 0..=18 {
                let mut generated: Vec<Vec<u32>> = Vec::new();
                for m in 0..=n.max(1) {
                    visit_family_members(&spec, m, n, |parts| generated.push(parts.to_vec()));
                }
                let mut filtered: Vec<Vec<u32>> = PartitionIter::new(n)
                    .filter(|p| parity_family_contains(p, &spec))
                    .map(|p| p.parts().to_vec())
                    .collect();
                generated.sort();
                filtered.sort();
                assert_eq!(generated, filtered, "family {family}, n = {n}");
            }
        }
    }

    #[test]
    fn count_examples() {
        let od_ed = FamilyId::OdEd.spec();
        assert_eq!(count_parity_family(&od_ed, 2, 6), 2); // (4,2), (5,1)
        for n in 1..=12 {
            assert_eq!(count_parity_family(&od_ed, 1, n), 1);
        }
        let ed_od = FamilyId::EdOd.spec();
        for m in 1..=4 {
            assert_eq!(count_parity_family(&ed_od, m, 0), 0);
        }
    }

    #[test]
    fn enumerated_series_small_cases() {
        // P^od_ed at N=2 -> 1 + x q + x q^2
        let s = family_series_enumerated(&FamilyId::OdEd.spec(), 2);
        let mut expect = MarkedSeries::one(2, 2);
        *expect.coeff_mut(1, 1) = 1.into();
        *expect.coeff_mut(1, 2) = 1.into();
        assert_eq!(s, expect);
        // P^ed_od at N=1 -> x q
        let s = family_series_enumerated(&FamilyId::EdOd.spec(), 1);
        let expect = MarkedSeries::monomial(1, 1, 1, 1, 1);
        assert_eq!(s, expect);
        // constant-term-only truncation for a family with the empty partition
        let s = family_series_enumerated(&FamilyId::OuEd.spec(), 0);
        assert_eq!(s, MarkedSeries::one(0, 0));
    }

    #[test]
    fn x_grading_sums_to_unrefined_count() {
        let spec = FamilyId::OdEd.spec();
        for n in 0..=20usize {
            let direct = PartitionIter::new(n)
                .filter(|p| parity_family_contains(p, &spec))
                .count() as u64;
            let graded: u64 = (0..=n).map(|m| count_parity_family(&spec, m, n)).sum();
            assert_eq!(graded, direct, "n = {n}");
        }
    }
}
