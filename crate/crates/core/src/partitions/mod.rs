//! Ordinary integer partitions: exhaustive enumeration in a deterministic
//! order, parity-separated families, and count tables used as independent
//! ground truth for every closed form in the crate.

mod count_table;
mod family;
mod iter;

pub use count_table::CountTable;
pub use family::{
    count_parity_family, family_count_table, family_series_enumerated,
    parity_family_contains, visit_family_members, FamilyId, Parity, ParityFamilySpec,
};
pub use iter::{
    visit_m_part_partitions, visit_partitions, MPartPartitionIter, PartitionIter,
};

use std::fmt;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition, the unique partition of zero.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from a part list, validating that it is weakly decreasing with
    /// all parts positive.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        let ok = parts.iter().all(|&p| p >= 1)
            && parts.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(Partition { parts })
    }

    /// Build from an arbitrary list of positive parts, sorting descending.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition { parts })
    }

    pub(crate) fn from_slice(parts: &[u32]) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Partition {
            parts: parts.to_vec(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Weight `|pi|`: the sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Length `l(pi)`: the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `f_t`: the number of parts equal to `t`.
    pub fn multiplicity(&self, t: u32) -> usize {
        self.parts.iter().filter(|&&p| p == t).count()
    }
}

impl fmt::Display for Partition {
    /// Parts joined by `+` descending; the empty partition renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", rendered.join("+"))
    }
}

/// `D_o(m, n)` / `D_e(m, n)`: partitions of `n` into exactly `m` distinct
/// parts, all odd (resp. even). `m = 0` counts only the empty partition of 0.
pub fn count_distinct_parity(m: usize, n: u64, parity: Parity) -> u64 {
    let mut count = 0;
    visit_partitions(n as usize, |parts| {
        if parts.len() == m
            && parts.windows(2).all(|w| w[0] > w[1])
            && parts.iter().all(|&p| parity.matches(p))
        {
            count += 1;
        }
    });
    count
}

/// Table of `D_o` or `D_e` values for all `m <= n <= max_n`, built by one
/// enumeration pass per weight.
pub fn distinct_parity_table(parity: Parity, max_n: usize) -> CountTable {
    let mut table = CountTable::new(max_n, max_n);
    for n in 0..=max_n {
        visit_partitions(n, |parts| {
            if parts.windows(2).all(|w| w[0] > w[1])
                && parts.iter().all(|&p| parity.matches(p))
            {
                table.increment(parts.len(), n);
            }
        });
    }
    table
}
