//! The count relations comparing parity-family counts `p^{zw}_{xy}(m, n)`
//! against distinct-parity counts `D_o` / `D_e`, each checked exhaustively
//! from enumeration-backed tables.

use crate::partitions::{
    distinct_parity_table, family_count_table, CountTable, FamilyId, Parity,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountRelation {
    /// `p_od_ed(m,n) - p_od_ed(m,n-1) = D_o(m,n) - D_e(m,n-1)`
    ThmOdEd,
    /// `p_od_ed(m,2n) - p_od_ed(m,2n-1) = D_o(m,2n)`
    CorOdEdEven,
    /// `p_od_ed(2m-1,2n) = p_od_ed(2m-1,2n-1)`
    CorOdEdOddM,
    /// `p_ed_od(m,n) - p_ed_od(m,n-1) = D_e(m,n-1) + D_e(m-1,n-1) - D_o(m,n-1)`
    ThmEdOd,
    /// `p_ed_od(n) - p_ed_od(n-1) = 2 D_e(n-1) - D_o(n-1)`
    CorEdOdUnrefined,
    /// `p_ed_od(n) - p_ed_od(n-1) = D_o(n-1)  (mod 2)`
    CorEdOdMod2,
    /// `p_ed_od(m,2n) - p_ed_od(m,2n-1) = -D_o(m,2n-1)`
    CorEdOdEven,
    /// `p_ed_od(2m,2n) = p_ed_od(2m,2n-1)`
    CorEdOdEvenM,
}

/// A single `(m, n)` pair where the relation's two sides differ. For the
/// unrefined relations `m` is reported as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountFailure {
    pub m: usize,
    pub n: usize,
    pub lhs: i128,
    pub rhs: i128,
}

/// The enumeration tables a relation reads from.
pub struct RelationTables {
    pub p_od_ed: CountTable,
    pub p_ed_od: CountTable,
    pub d_o: CountTable,
    pub d_e: CountTable,
}

impl RelationTables {
    pub fn build(max_n: usize) -> Self {
        RelationTables {
            p_od_ed: family_count_table(&FamilyId::OdEd.spec(), max_n),
            p_ed_od: family_count_table(&FamilyId::EdOd.spec(), max_n),
            d_o: distinct_parity_table(Parity::Odd, max_n),
            d_e: distinct_parity_table(Parity::Even, max_n),
        }
    }
}

/// Evaluates both sides of the relation for every valid `(m, n)` with
/// `n <= max_n` and returns the failures (expected none).
pub fn check_relation(
    relation: CountRelation,
    tables: &RelationTables,
    max_n: usize,
) -> Vec<CountFailure> {
    let mut failures = Vec::new();
    let mut check = |m: usize, n: usize, lhs: i128, rhs: i128| {
        if lhs != rhs {
            failures.push(CountFailure { m, n, lhs, rhs });
        }
    };
    let p1 = &tables.p_od_ed;
    let p2 = &tables.p_ed_od;
    let d_o = &tables.d_o;
    let d_e = &tables.d_e;
    let g = |t: &CountTable, m: usize, n: usize| t.get(m, n) as i128;

    match relation {
        CountRelation::ThmOdEd => {
            for n in 1..=max_n {
                for m in 1..=n + 1 {
                    let lhs = g(p1, m, n) - g(p1, m, n - 1);
                    let rhs = g(d_o, m, n) - g(d_e, m, n - 1);
                    check(m, n, lhs, rhs);
                }
            }
        }
        CountRelation::CorOdEdEven => {
            for n in 1..=max_n / 2 {
                for m in 1..=2 * n {
                    let lhs = g(p1, m, 2 * n) - g(p1, m, 2 * n - 1);
                    check(m, 2 * n, lhs, g(d_o, m, 2 * n));
                }
            }
        }
        CountRelation::CorOdEdOddM => {
            for n in 1..=max_n / 2 {
                for m in 1..=n + 1 {
                    let lhs = g(p1, 2 * m - 1, 2 * n);
                    check(2 * m - 1, 2 * n, lhs, g(p1, 2 * m - 1, 2 * n - 1));
                }
            }
        }
        CountRelation::ThmEdOd => {
            for n in 1..=max_n {
                for m in 1..=n + 1 {
                    let lhs = g(p2, m, n) - g(p2, m, n - 1);
                    let rhs = g(d_e, m, n - 1) + g(d_e, m - 1, n - 1) - g(d_o, m, n - 1);
                    check(m, n, lhs, rhs);
                }
            }
        }
        CountRelation::CorEdOdUnrefined => {
            for n in 1..=max_n {
                let lhs = p2.weight_total(n) as i128 - p2.weight_total(n - 1) as i128;
                let rhs =
                    2 * d_e.weight_total(n - 1) as i128 - d_o.weight_total(n - 1) as i128;
                check(0, n, lhs, rhs);
            }
        }
        CountRelation::CorEdOdMod2 => {
            for n in 1..=max_n {
                let lhs = p2.weight_total(n) as i128 - p2.weight_total(n - 1) as i128;
                let rhs = d_o.weight_total(n - 1) as i128;
                check(0, n, lhs.rem_euclid(2), rhs.rem_euclid(2));
            }
        }
        CountRelation::CorEdOdEven => {
            for n in 1..=max_n / 2 {
                for m in 1..=2 * n {
                    let lhs = g(p2, m, 2 * n) - g(p2, m, 2 * n - 1);
                    check(m, 2 * n, lhs, -g(d_o, m, 2 * n - 1));
                }
            }
        }
        CountRelation::CorEdOdEvenM => {
            for n in 1..=max_n / 2 {
                for m in 1..=n {
                    let lhs = g(p2, 2 * m, 2 * n);
                    check(2 * m, 2 * n, lhs, g(p2, 2 * m, 2 * n - 1));
                }
            }
        }
    }
    failures
}

/// Builds the tables and checks one relation up to `max_n`.
pub fn count_relation_check(relation: CountRelation, max_n: usize) -> Vec<CountFailure> {
    let tables = RelationTables::build(max_n);
    check_relation(relation, &tables, max_n)
}
