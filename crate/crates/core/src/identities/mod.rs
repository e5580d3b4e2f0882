//! Registry of the supported identities, each stored as independently
//! constructed series (or count-relation) sides, with an exact comparison
//! engine producing [`IdentityReport`]s.
//!
//! Chain identities compare all consecutive side pairs, so a failure
//! localizes to the specific derivation step. Mismatches report the first
//! differing cell in graded-lexicographic order (total degree, then
//! q-exponent).

pub mod builders;
mod counts;

pub use counts::{
    check_relation, count_relation_check, CountFailure, CountRelation, RelationTables,
};

use serde::Serialize;
use std::fmt;
use std::time::Instant;

use crate::qseries::MarkedSeries;

/// Default truncation order used by the command-line front end.
pub const DEFAULT_ORDER: usize = 100;

/// Count-relation identities enumerate partitions of every weight up to the
/// requested order; beyond this cap the oracle enumeration dominates the
/// runtime, so the order is clamped.
pub const COUNT_RELATION_CAP: usize = 60;

/// Weight bound for enumeration-backed sides inside series identities.
const ENUMERATION_CAP: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    QbinomTheorem,
    Euler1,
    Euler2,
    Lebesgue,
    Jsum,
    Main1,
    Main2,
    Main3,
    OverMain,
    Rr1Main,
    Rr2Main,
    ThmOdEd,
    CorOdEdEven,
    CorOdEdOddM,
    ThmEdOd,
    CorEdOdUnrefined,
    CorEdOdMod2,
    CorEdOdEven,
    CorEdOdEvenM,
    FamilyOdEdProduct,
    FamilyEdOdProduct,
    FamilyOdEuForm,
    FamilyOuEdForm,
}

impl IdentityId {
    pub const ALL: [IdentityId; 23] = [
        IdentityId::QbinomTheorem,
        IdentityId::Euler1,
        IdentityId::Euler2,
        IdentityId::Lebesgue,
        IdentityId::Jsum,
        IdentityId::Main1,
        IdentityId::Main2,
        IdentityId::Main3,
        IdentityId::OverMain,
        IdentityId::Rr1Main,
        IdentityId::Rr2Main,
        IdentityId::ThmOdEd,
        IdentityId::CorOdEdEven,
        IdentityId::CorOdEdOddM,
        IdentityId::ThmEdOd,
        IdentityId::CorEdOdUnrefined,
        IdentityId::CorEdOdMod2,
        IdentityId::CorEdOdEven,
        IdentityId::CorEdOdEvenM,
        IdentityId::FamilyOdEdProduct,
        IdentityId::FamilyEdOdProduct,
        IdentityId::FamilyOdEuForm,
        IdentityId::FamilyOuEdForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::QbinomTheorem => "qbinom-theorem",
            IdentityId::Euler1 => "euler-1",
            IdentityId::Euler2 => "euler-2",
            IdentityId::Lebesgue => "lebesgue",
            IdentityId::Jsum => "jsum",
            IdentityId::Main1 => "main-1",
            IdentityId::Main2 => "main-2",
            IdentityId::Main3 => "main-3",
            IdentityId::OverMain => "over-main",
            IdentityId::Rr1Main => "rr1-main",
            IdentityId::Rr2Main => "rr2-main",
            IdentityId::ThmOdEd => "thm-od-ed",
            IdentityId::CorOdEdEven => "cor-od-ed-even",
            IdentityId::CorOdEdOddM => "cor-od-ed-oddm",
            IdentityId::ThmEdOd => "thm-ed-od",
            IdentityId::CorEdOdUnrefined => "cor-ed-od-unrefined",
            IdentityId::CorEdOdMod2 => "cor-ed-od-mod2",
            IdentityId::CorEdOdEven => "cor-ed-od-even",
            IdentityId::CorEdOdEvenM => "cor-ed-od-evenm",
            IdentityId::FamilyOdEdProduct => "family-od-ed-product",
            IdentityId::FamilyEdOdProduct => "family-ed-od-product",
            IdentityId::FamilyOdEuForm => "family-od-eu-form",
            IdentityId::FamilyOuEdForm => "family-ou-ed-form",
        }
    }

    pub fn parse(s: &str) -> Option<IdentityId> {
        Self::ALL.into_iter().find(|id| id.name() == s)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Mismatch,
}

/// First differing cell of a failed comparison. For count relations the
/// coordinates are the part count `m` and weight `n` of the failing pair,
/// matching the `x^m q^n` grading the relations come from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub marker_deg: usize,
    pub q_exp: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub order: usize,
    pub marker_bound: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl IdentityReport {
    pub fn is_equal(&self) -> bool {
        self.status == Status::Equal
    }
}

/// Addresses one registered series builder for fault injection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub comparison: usize,
    pub side: usize,
}

type Builder = fn(usize, usize) -> MarkedSeries;

struct Comparison {
    /// Enumeration-backed comparisons cap the order they run at.
    order_cap: Option<usize>,
    sides: Vec<Builder>,
}

enum IdentityKind {
    Series {
        uses_marker: bool,
        comparisons: Vec<Comparison>,
    },
    Counts(CountRelation),
}

fn registry(id: IdentityId) -> IdentityKind {
    use builders as b;
    let series = |uses_marker, comparisons| IdentityKind::Series {
        uses_marker,
        comparisons,
    };
    let full = |sides: Vec<Builder>| Comparison {
        order_cap: None,
        sides,
    };
    let capped = |sides: Vec<Builder>| Comparison {
        order_cap: Some(ENUMERATION_CAP),
        sides,
    };
    match id {
        IdentityId::QbinomTheorem => series(
            true,
            vec![
                full(vec![b::qbinom_sum_t1, b::qbinom_product_t1]),
                full(vec![b::qbinom_sum_t2, b::qbinom_product_t2]),
                full(vec![b::qbinom_sum_t3, b::qbinom_product_t3]),
            ],
        ),
        IdentityId::Euler1 => series(true, vec![full(vec![b::euler1_sum, b::euler1_product])]),
        IdentityId::Euler2 => series(true, vec![full(vec![b::euler2_sum, b::euler2_product])]),
        IdentityId::Lebesgue => {
            series(true, vec![full(vec![b::lebesgue_sum, b::lebesgue_product])])
        }
        IdentityId::Jsum => series(true, vec![full(vec![b::jsum_product, b::jsum_expansion])]),
        IdentityId::Main1 => series(
            true,
            vec![
                capped(vec![b::overpartition_enumeration, b::main1_sum]),
                full(vec![b::main1_sum, b::main1_product]),
            ],
        ),
        IdentityId::Main2 => series(
            false,
            vec![
                full(vec![b::main2_sum, b::main2_product]),
                capped(vec![b::c2_enumeration, b::main2_product]),
            ],
        ),
        IdentityId::Main3 => series(
            false,
            vec![
                full(vec![b::main3_sum, b::main3_product]),
                capped(vec![b::c1_enumeration, b::main3_product]),
            ],
        ),
        IdentityId::OverMain => series(
            true,
            vec![
                capped(vec![b::overpartition_enumeration, b::over_main_double_sum]),
                full(vec![b::over_main_double_sum, b::main1_sum]),
                full(vec![b::main1_sum, b::main1_product]),
            ],
        ),
        IdentityId::Rr1Main => series(
            false,
            vec![
                capped(vec![b::c2_enumeration, b::rr1_basis_form]),
                full(vec![b::rr1_basis_form, b::rr1_double_sum]),
                full(vec![b::rr1_double_sum, b::rr1_poch_sum]),
                full(vec![b::rr1_poch_sum, b::main2_product]),
            ],
        ),
        IdentityId::Rr2Main => series(
            false,
            vec![
                capped(vec![b::c1_enumeration, b::rr2_basis_form]),
                full(vec![b::rr2_basis_form, b::rr2_double_sum]),
                full(vec![b::rr2_double_sum, b::rr2_poch_sum]),
                full(vec![b::rr2_poch_sum, b::main3_product]),
            ],
        ),
        IdentityId::ThmOdEd => IdentityKind::Counts(CountRelation::ThmOdEd),
        IdentityId::CorOdEdEven => IdentityKind::Counts(CountRelation::CorOdEdEven),
        IdentityId::CorOdEdOddM => IdentityKind::Counts(CountRelation::CorOdEdOddM),
        IdentityId::ThmEdOd => IdentityKind::Counts(CountRelation::ThmEdOd),
        IdentityId::CorEdOdUnrefined => IdentityKind::Counts(CountRelation::CorEdOdUnrefined),
        IdentityId::CorEdOdMod2 => IdentityKind::Counts(CountRelation::CorEdOdMod2),
        IdentityId::CorEdOdEven => IdentityKind::Counts(CountRelation::CorEdOdEven),
        IdentityId::CorEdOdEvenM => IdentityKind::Counts(CountRelation::CorEdOdEvenM),
        IdentityId::FamilyOdEdProduct => series(
            true,
            vec![full(vec![b::family_od_ed_lhs, b::family_od_ed_rhs])],
        ),
        IdentityId::FamilyEdOdProduct => series(
            true,
            vec![full(vec![b::family_ed_od_lhs, b::family_ed_od_rhs])],
        ),
        IdentityId::FamilyOdEuForm => series(
            true,
            vec![full(vec![b::family_od_eu_lhs, b::family_od_eu_rhs])],
        ),
        IdentityId::FamilyOuEdForm => series(
            true,
            vec![full(vec![b::family_ou_ed_lhs, b::family_ou_ed_rhs])],
        ),
    }
}

/// All fault-injection addresses for the identity (empty for count
/// relations).
pub fn builder_handles(id: IdentityId) -> Vec<Fault> {
    match registry(id) {
        IdentityKind::Series { comparisons, .. } => comparisons
            .iter()
            .enumerate()
            .flat_map(|(ci, comp)| {
                (0..comp.sides.len()).map(move |si| Fault {
                    comparison: ci,
                    side: si,
                })
            })
            .collect(),
        IdentityKind::Counts(_) => Vec::new(),
    }
}

/// Builds every side of the identity and compares consecutive pairs exactly.
pub fn verify(id: IdentityId, order: usize, marker_bound: usize) -> IdentityReport {
    verify_with_fault(id, order, marker_bound, None)
}

/// As [`verify`], optionally perturbing one registered builder's output by
/// +1 in its constant cell (the self-test hook).
pub fn verify_with_fault(
    id: IdentityId,
    order: usize,
    marker_bound: usize,
    fault: Option<Fault>,
) -> IdentityReport {
    let started = Instant::now();
    match registry(id) {
        IdentityKind::Series {
            uses_marker,
            comparisons,
        } => {
            let mb = if uses_marker { marker_bound } else { 0 };
            let mut first_mismatch = None;
            'comparisons: for (ci, comp) in comparisons.iter().enumerate() {
                let eff_order = comp.order_cap.map_or(order, |cap| order.min(cap));
                let eff_mb = if comp.order_cap.is_some() {
                    mb.min(eff_order)
                } else {
                    mb
                };
                let built: Vec<MarkedSeries> = comp
                    .sides
                    .iter()
                    .enumerate()
                    .map(|(si, build)| {
                        let mut s = build(eff_order, eff_mb);
                        if fault
                            == Some(Fault {
                                comparison: ci,
                                side: si,
                            })
                        {
                            *s.coeff_mut(0, 0) += 1;
                        }
                        s
                    })
                    .collect();
                for pair in built.windows(2) {
                    if let Some((m, n)) = pair[0].first_mismatch(&pair[1]) {
                        first_mismatch = Some(Mismatch {
                            marker_deg: m,
                            q_exp: n,
                            lhs: pair[0].coeff(m, n).to_string(),
                            rhs: pair[1].coeff(m, n).to_string(),
                        });
                        break 'comparisons;
                    }
                }
            }
            IdentityReport {
                identity: id.name().to_string(),
                order,
                marker_bound: mb,
                status: if first_mismatch.is_none() {
                    Status::Equal
                } else {
                    Status::Mismatch
                },
                first_mismatch,
                millis: Some(started.elapsed().as_millis()),
            }
        }
        IdentityKind::Counts(relation) => {
            let max_n = order.min(COUNT_RELATION_CAP);
            let failures = count_relation_check(relation, max_n);
            let first_mismatch = failures.first().map(|f| Mismatch {
                marker_deg: f.m,
                q_exp: f.n,
                lhs: f.lhs.to_string(),
                rhs: f.rhs.to_string(),
            });
            IdentityReport {
                identity: id.name().to_string(),
                order: max_n,
                marker_bound: 0,
                status: if first_mismatch.is_none() {
                    Status::Equal
                } else {
                    Status::Mismatch
                },
                first_mismatch,
                millis: Some(started.elapsed().as_millis()),
            }
        }
    }
}

/// Runs every registered identity at the given parameters (count relations
/// clamped to [`COUNT_RELATION_CAP`]); reports are ordered by id.
pub fn verify_all(order: usize, marker_bound: usize) -> Vec<IdentityReport> {
    IdentityId::ALL
        .into_iter()
        .map(|id| verify(id, order, marker_bound))
        .collect()
}

/// As [`verify_all`] with one builder perturbed; the self-test harness
/// checks that exactly the owning identity reports a mismatch.
pub fn verify_all_with_fault(
    order: usize,
    marker_bound: usize,
    target: Option<(IdentityId, Fault)>,
) -> Vec<IdentityReport> {
    IdentityId::ALL
        .into_iter()
        .map(|id| match target {
            Some((tid, fault)) if tid == id => verify_with_fault(id, order, marker_bound, Some(fault)),
            _ => verify(id, order, marker_bound),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn all_ids_roundtrip_names() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::parse(id.name()), Some(id));
        }
        assert_eq!(IdentityId::parse("nope"), None);
    }

    #[test]
    fn every_identity_verifies_at_modest_order() {
        for id in IdentityId::ALL {
            let report = verify(id, 30, 30);
            assert!(
                report.is_equal(),
                "{id}: {:?}",
                report.first_mismatch
            );
        }
    }

    #[test]
    fn verify_all_at_order_zero_checks_constants() {
        for report in verify_all(0, 0) {
            assert!(report.is_equal(), "{}", report.identity);
        }
    }

    #[test]
    fn injected_fault_is_localized() {
        let fault = Fault {
            comparison: 1,
            side: 1,
        };
        let reports = verify_all_with_fault(12, 12, Some((IdentityId::Main1, fault)));
        for report in reports {
            if report.identity == "main-1" {
                assert_eq!(report.status, Status::Mismatch);
                let mm = report.first_mismatch.unwrap();
                assert_eq!((mm.marker_deg, mm.q_exp), (0, 0));
            } else {
                assert!(report.is_equal(), "{}", report.identity);
            }
        }
    }

    #[test]
    fn over_main_enumeration_matches_hand_count() {
        // 1 + (1+a) q + (2+2a) q^2
        let s = builders::overpartition_enumeration(2, 2);
        assert_eq!(s.coeff(0, 0), &BigInt::from(1));
        assert_eq!(s.coeff(0, 1), &BigInt::from(1));
        assert_eq!(s.coeff(1, 1), &BigInt::from(1));
        assert_eq!(s.coeff(0, 2), &BigInt::from(2));
        assert_eq!(s.coeff(1, 2), &BigInt::from(2));
        assert_eq!(s.coeff(2, 2), &BigInt::from(0));
    }

    #[test]
    fn main2_sum_small_expansion() {
        // 1 + 2q + 2q^2 + 4q^3, cross-checked against the C_2 enumeration
        let sum = builders::main2_sum(3, 0);
        let expected = [1i64, 2, 2, 4];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(sum.coeff(0, n), &BigInt::from(*e), "q^{n}");
        }
        assert_eq!(builders::c2_enumeration(3, 0), sum);
    }

    #[test]
    fn euler2_truncation_by_both_bounds() {
        // terms n = 0,1,2 of sum t^n q^{binom(n,2)}/(q;q)_n at N=2, M=2
        let s = builders::euler2_sum(2, 2);
        let mut expect = MarkedSeries::one(2, 2);
        *expect.coeff_mut(1, 0) = BigInt::from(1);
        *expect.coeff_mut(1, 1) = BigInt::from(1);
        *expect.coeff_mut(1, 2) = BigInt::from(1);
        *expect.coeff_mut(2, 1) = BigInt::from(1);
        *expect.coeff_mut(2, 2) = BigInt::from(1);
        assert_eq!(s, expect);
    }

    #[test]
    fn lebesgue_specializations_reproduce_main_sums() {
        let order = 40;
        let lhs = builders::lebesgue_sum(order, order);
        assert_eq!(lhs.specialize_marker(-1, 0), builders::main2_sum(order, 0));
        assert_eq!(lhs.specialize_marker(-1, 1), builders::main3_sum(order, 0));
    }

    #[test]
    fn report_json_schema() {
        let mut report = verify(IdentityId::Jsum, 20, 20);
        report.millis = Some(5);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["identity"], "jsum");
        assert_eq!(json["status"], "equal");
        assert_eq!(json["first_mismatch"], serde_json::Value::Null);
        assert_eq!(json["millis"], 5);
        report.millis = None;
        let json = serde_json::to_value(&report).unwrap();
        assert!(json.get("millis").is_none());
    }
}
