//! Separable integer partition classes with modulus `k`: every m-part member
//! of the class is uniquely a basis partition plus a weakly decreasing,
//! entrywise k-divisible, nonnegative residual. This module provides the
//! decomposition, algorithmic basis extraction, machine verification of
//! existence/uniqueness/closure, and the explicit bases of the six
//! parity-separated families together with their generating polynomials.

use serde::Serialize;

use crate::partitions::{
    visit_m_part_partitions, visit_partitions, FamilyId, Partition,
};
use crate::qseries::{MarkedSeries, QPolynomial, QTrunc};

/// A partition class whose members can be enumerated by part count and
/// weight. The default enumeration filters all m-part partitions; classes
/// with exploitable structure override it.
pub trait PartitionClass {
    fn contains(&self, p: &Partition) -> bool;

    /// Visit every member with exactly `m` parts and weight `n`, as
    /// descending slices in reverse-lexicographic order.
    fn visit_members(&self, m: usize, n: usize, f: &mut dyn FnMut(&[u32])) {
        visit_m_part_partitions(n, m, |parts| {
            if self.contains(&Partition::from_slice(parts)) {
                f(parts);
            }
        });
    }
}

impl PartitionClass for crate::partitions::ParityFamilySpec {
    fn contains(&self, p: &Partition) -> bool {
        crate::partitions::parity_family_contains(p, self)
    }

    fn visit_members(&self, m: usize, n: usize, f: &mut dyn FnMut(&[u32])) {
        crate::partitions::visit_family_members(self, m, n, f);
    }
}

/// The class of all partitions (separable with modulus 1 and basis `(1^m)`).
pub struct AllPartitions;

impl PartitionClass for AllPartitions {
    fn contains(&self, _p: &Partition) -> bool {
        true
    }

    fn visit_members(&self, m: usize, n: usize, f: &mut dyn FnMut(&[u32])) {
        visit_m_part_partitions(n, m, f);
    }
}

/// Basis of a separable class: for each part count `m`, a finite ordered set
/// of partitions with exactly `m` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparableBasis {
    modulus: u32,
    per_m: Vec<Vec<Partition>>, // index m, entry 0 unused
}

impl SeparableBasis {
    pub fn new(modulus: u32, max_parts: usize) -> Self {
        assert!(modulus >= 1);
        SeparableBasis {
            modulus,
            per_m: vec![Vec::new(); max_parts + 1],
        }
    }

    pub fn from_parts(modulus: u32, per_m: Vec<Vec<Partition>>) -> Self {
        for (m, bases) in per_m.iter().enumerate() {
            for b in bases {
                assert_eq!(b.len(), m, "basis({m}) element with wrong part count");
            }
        }
        SeparableBasis { modulus, per_m }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn max_parts(&self) -> usize {
        self.per_m.len() - 1
    }

    pub fn basis(&self, m: usize) -> &[Partition] {
        self.per_m.get(m).map_or(&[], Vec::as_slice)
    }

    pub fn push(&mut self, p: Partition) {
        let m = p.len();
        if self.per_m.len() <= m {
            self.per_m.resize(m + 1, Vec::new());
        }
        self.per_m[m].push(p);
    }
}

/// One decomposition `lambda = b + pi` with `pi` weakly decreasing,
/// nonnegative and entrywise divisible by the modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub base: Partition,
    pub residual: Vec<u32>,
}

impl Decomposition {
    /// Componentwise reconstruction of the decomposed partition.
    pub fn reconstruct(&self) -> Partition {
        let parts: Vec<u32> = self
            .base
            .parts()
            .iter()
            .zip(&self.residual)
            .map(|(&b, &r)| b + r)
            .collect();
        Partition::from_slice(&parts)
    }
}

/// All ways to write `lam` as basis element plus valid residual, in basis
/// order. Separability at `lam` means the result has length exactly 1; the
/// empty answer means "not covered".
pub fn decompose(lam: &Partition, basis: &SeparableBasis) -> Vec<Decomposition> {
    decompose_against(lam, basis.basis(lam.len()), basis.modulus)
}

fn decompose_against(lam: &Partition, bases: &[Partition], k: u32) -> Vec<Decomposition> {
    bases
        .iter()
        .filter(|b| covers(lam.parts(), b, k))
        .map(|b| Decomposition {
            base: b.clone(),
            residual: lam
                .parts()
                .iter()
                .zip(b.parts())
                .map(|(&l, &bp)| l - bp)
                .collect(),
        })
        .collect()
}

/// Whether `base + pi = parts` for some valid residual; allocation-free.
fn covers(parts: &[u32], base: &Partition, k: u32) -> bool {
    debug_assert_eq!(base.len(), parts.len());
    let mut prev = u32::MAX;
    for (&l, &bp) in parts.iter().zip(base.parts()) {
        if l < bp {
            return false;
        }
        let r = l - bp;
        if r % k != 0 || r > prev {
            return false;
        }
        prev = r;
    }
    true
}

fn cover_count(parts: &[u32], bases: &[Partition], k: u32) -> usize {
    bases.iter().filter(|b| covers(parts, b, k)).count()
}

/// Greedy minimal-basis extraction: family members with `m` parts are
/// processed in increasing weight (ties reverse-lexicographic) and a
/// partition joins `basis(m)` exactly when no previously admitted base
/// covers it.
pub fn extract_basis(
    class: &dyn PartitionClass,
    k: u32,
    max_parts: usize,
    max_weight: usize,
) -> SeparableBasis {
    let mut result = SeparableBasis::new(k, max_parts);
    for m in 1..=max_parts {
        let mut admitted: Vec<Partition> = Vec::new();
        for n in m..=max_weight {
            class.visit_members(m, n, &mut |parts| {
                if cover_count(parts, &admitted, k) == 0 {
                    admitted.push(Partition::from_slice(parts));
                }
            });
        }
        result.per_m[m] = admitted;
    }
    result
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    Existence,
    Uniqueness,
    Closure,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub partition: String,
    pub detail: String,
}

/// Verification outcome; a non-empty violation list is data, not an error.
#[derive(Debug, Clone, Serialize)]
pub struct SeparabilityReport {
    pub family: String,
    pub k: u32,
    pub max_parts: usize,
    pub max_weight: usize,
    pub violations: Vec<Violation>,
}

impl SeparabilityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every family member within the bounds, that [`decompose`]
/// yields exactly one result (existence and uniqueness), and conversely that
/// every `b + pi` formed from the basis within the weight bound lies in the
/// family (closure).
pub fn verify_separability(
    family_name: &str,
    class: &dyn PartitionClass,
    basis: &SeparableBasis,
    max_parts: usize,
    max_weight: usize,
) -> SeparabilityReport {
    let k = basis.modulus();
    let mut violations = Vec::new();

    for m in 1..=max_parts {
        let bases = basis.basis(m);
        for n in m..=max_weight {
            class.visit_members(m, n, &mut |parts| {
                match cover_count(parts, bases, k) {
                    1 => {}
                    0 => violations.push(Violation {
                        kind: ViolationKind::Existence,
                        partition: Partition::from_slice(parts).to_string(),
                        detail: "no basis element covers this member".into(),
                    }),
                    more => violations.push(Violation {
                        kind: ViolationKind::Uniqueness,
                        partition: Partition::from_slice(parts).to_string(),
                        detail: format!("{more} distinct decompositions"),
                    }),
                }
            });
        }
    }

    for m in 1..=max_parts.min(basis.max_parts()) {
        for b in basis.basis(m) {
            let wb = b.weight() as usize;
            if wb > max_weight {
                continue;
            }
            let budget = (max_weight - wb) / k as usize;
            for s in 0..=budget {
                visit_partitions(s, |res_parts| {
                    if res_parts.len() > m {
                        return;
                    }
                    let mut sum_parts: Vec<u32> = b.parts().to_vec();
                    for (i, &r) in res_parts.iter().enumerate() {
                        sum_parts[i] += r * k;
                    }
                    let candidate = Partition::from_slice(&sum_parts);
                    if !class.contains(&candidate) {
                        violations.push(Violation {
                            kind: ViolationKind::Closure,
                            partition: candidate.to_string(),
                            detail: format!("basis element {b} plus residual leaves the family"),
                        });
                    }
                });
            }
        }
    }

    SeparabilityReport {
        family: family_name.to_string(),
        k,
        max_parts,
        max_weight,
        violations,
    }
}

/// The closed-form basis set `B^{zw}_{xy}(m)` of the family, as
/// descending partitions in canonical (weight, reverse-lexicographic) order,
/// duplicates removed.
pub fn paper_basis(family: FamilyId, m: usize) -> Vec<Partition> {
    assert!(m >= 1);
    let mut out: Vec<Partition> = Vec::new();
    let push = |out: &mut Vec<Partition>, parts: Vec<u32>| {
        let p = Partition::new(parts).expect("basis formula yields valid partitions");
        debug_assert_eq!(p.len(), m);
        if !out.contains(&p) {
            out.push(p);
        }
    };
    let mu = m as u32;
    match family {
        FamilyId::OdEd => {
            // (2m-1, ..., 2j+1, 2j, ..., 2) for 0 <= j <= m
            for j in 0..=mu {
                let mut parts: Vec<u32> = Vec::with_capacity(m);
                parts.extend((j + 1..=mu).rev().map(|i| 2 * i - 1));
                parts.extend((1..=j).rev().map(|i| 2 * i));
                push(&mut out, parts);
            }
        }
        FamilyId::EdOd => {
            // (2m-2, ..., 2j, 2j-1, ..., 1) for 1 <= j <= m
            for j in 1..=mu {
                let mut parts: Vec<u32> = Vec::with_capacity(m);
                parts.extend((j..=mu - 1).rev().map(|i| 2 * i));
                parts.extend((1..=j).rev().map(|i| 2 * i - 1));
                push(&mut out, parts);
            }
        }
        FamilyId::EdOu => {
            // (1^j, 2, 4, ..., 2m-2j) for 1 <= j <= m
            for j in 1..=mu {
                let mut parts: Vec<u32> = Vec::with_capacity(m);
                parts.extend((1..=mu - j).rev().map(|i| 2 * i));
                parts.extend(std::iter::repeat_n(1, j as usize));
                push(&mut out, parts);
            }
        }
        FamilyId::EuOd => {
            // (1, 3, ..., 2j-1, (2j)^{m-j}) for 1 <= j <= m
            for j in 1..=mu {
                let mut parts: Vec<u32> = Vec::with_capacity(m);
                parts.extend(std::iter::repeat_n(2 * j, (mu - j) as usize));
                parts.extend((1..=j).rev().map(|i| 2 * i - 1));
                push(&mut out, parts);
            }
        }
        FamilyId::OdEu => {
            // (2^j, 3, 5, ..., 2m-2j+1) for 1 <= j <= m, plus (1, 3, ..., 2m-1)
            for j in 1..=mu {
                let mut parts: Vec<u32> = Vec::with_capacity(m);
                parts.extend((2..=mu - j + 1).rev().map(|i| 2 * i - 1));
                parts.extend(std::iter::repeat_n(2, j as usize));
                push(&mut out, parts);
            }
            push(&mut out, (1..=mu).rev().map(|i| 2 * i - 1).collect());
        }
        FamilyId::OuEd => {
            // (2, 4, ..., 2j, (2j+1)^{m-j}) for 1 <= j <= m, plus (1^m)
            for j in 1..=mu {
                let mut parts: Vec<u32> = Vec::with_capacity(m);
                parts.extend(std::iter::repeat_n(2 * j + 1, (mu - j) as usize));
                parts.extend((1..=j).rev().map(|i| 2 * i));
                push(&mut out, parts);
            }
            push(&mut out, vec![1; m]);
        }
    }
    canonical_sort(&mut out);
    out
}

/// (weight ascending, then reverse-lexicographic) -- the order in which
/// extraction admits elements.
fn canonical_sort(bases: &mut [Partition]) {
    bases.sort_by(|a, b| {
        a.weight()
            .cmp(&b.weight())
            .then_with(|| b.parts().cmp(a.parts()))
    });
}

/// The paper basis for every `m <= max_parts`, as a [`SeparableBasis`] with
/// modulus 2.
pub fn paper_basis_full(family: FamilyId, max_parts: usize) -> SeparableBasis {
    let mut per_m = vec![Vec::new()];
    for m in 1..=max_parts {
        per_m.push(paper_basis(family, m));
    }
    SeparableBasis::from_parts(2, per_m)
}

/// `sum over basis(m) of q^{|b|}`, computed from the closed exponent
/// formulas rather than the explicit part lists.
pub fn basis_generating_polynomial(family: FamilyId, m: usize) -> QPolynomial {
    assert!(m >= 1);
    let mut p = QPolynomial::zero();
    match family {
        FamilyId::OdEd => {
            for j in 0..=m {
                p.add_monomial(1, m * m + j);
            }
        }
        FamilyId::EdOd => {
            for j in 1..=m {
                p.add_monomial(1, m * m - m + j);
            }
        }
        FamilyId::EdOu => {
            // m^2 - 2mj + j^2 + m = (m-j)^2 + m
            for j in 1..=m {
                p.add_monomial(1, (m - j) * (m - j) + m);
            }
        }
        FamilyId::EuOd => {
            // 2mj - j^2 = j(2m - j)
            for j in 1..=m {
                p.add_monomial(1, j * (2 * m - j));
            }
        }
        FamilyId::OdEu => {
            // m^2 - 2mj + j^2 + 2m = (m-j)^2 + 2m
            for j in 1..=m {
                p.add_monomial(1, (m - j) * (m - j) + 2 * m);
            }
            p.add_monomial(1, m * m);
        }
        FamilyId::OuEd => {
            // 2mj - j^2 + m = j(2m - j) + m
            for j in 1..=m {
                p.add_monomial(1, j * (2 * m - j) + m);
            }
            p.add_monomial(1, m);
        }
    }
    p
}

/// The closed-form x-marked series
/// `[1 +] sum_{m>=1} x^m b(m) / (q^2;q^2)_m` truncated to the given grid;
/// the constant 1 is present exactly for the families containing the empty
/// partition (od_ed, od_eu, ou_ed).
pub fn assemble_family_series(family: FamilyId, order: usize, marker_order: usize) -> MarkedSeries {
    let mut series = MarkedSeries::zero(order, marker_order);
    if !family.spec().small_required {
        *series.coeff_mut(0, 0) += 1;
    }
    // running 1/(q^2;q^2)_m
    let mut denom_inv = QTrunc::one(order);
    for m in 1..=marker_order {
        denom_inv.div_one_minus_qpow(2 * m);
        let bgp = basis_generating_polynomial(family, m);
        let min_deg = bgp.min_degree().expect("basis polynomials are nonzero");
        if min_deg > order {
            break; // minimal basis weight grows with m for all six families
        }
        let term = denom_inv
            .mul(&bgp.to_qtrunc(order))
            .expect("orders agree by construction");
        series.row_mut(m).add_assign(&term);
    }
    series
}
