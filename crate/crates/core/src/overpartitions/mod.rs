//! Overpartitions under the total order `1 < 1~ < 2 < 2~ < ...`: the first
//! occurrence of a part size may be overlined. This module enumerates
//! overpartitions by weight, builds the basis families `O(m)` (all
//! overpartitions), `G(m)`/`G1(m)`/`G2(m)` (Rogers-Ramanujan type), evaluates
//! their generating polynomials both by enumeration and by the closed forms,
//! and machine-checks the recurrences relating them.

mod basis;
mod enumerate;

pub use basis::{
    b_g_size_smallest, b_g2_largest, b_o, check_recurrences, decompose_over,
    enumerate_g, enumerate_g1, enumerate_g2, enumerate_o, in_c, in_g, in_o,
    verify_separability_over, OverDecomposition, PolynomialMode, RecurrenceFailure,
    SmallestPart,
};
pub(crate) use basis::in_c_parts;
pub use enumerate::{
    visit_m_part_overpartitions, visit_overpartitions, OverpartitionIter,
};

use std::fmt;

/// A single overpartition part: a positive size, optionally overlined.
/// The derived order is the part order `t < t~ < t+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OverPart {
    pub size: u32,
    pub overlined: bool,
}

impl OverPart {
    pub fn plain(size: u32) -> Self {
        OverPart {
            size,
            overlined: false,
        }
    }

    pub fn overlined(size: u32) -> Self {
        OverPart {
            size,
            overlined: true,
        }
    }
}

impl fmt::Display for OverPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overlined {
            write!(f, "{}~", self.size)
        } else {
            write!(f, "{}", self.size)
        }
    }
}

/// Parts listed in strictly decreasing part order, except that equal
/// non-overlined parts may repeat; at most one overlined part per size, and
/// the overlined copy precedes the non-overlined copies of the same size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    pub fn empty() -> Self {
        Overpartition { parts: Vec::new() }
    }

    pub fn new(parts: Vec<OverPart>) -> Option<Self> {
        let ok = parts.iter().all(|p| p.size >= 1)
            && parts.windows(2).all(|w| {
                w[0] > w[1] || (w[0] == w[1] && !w[0].overlined)
            });
        ok.then_some(Overpartition { parts })
    }

    pub(crate) fn from_slice(parts: &[OverPart]) -> Self {
        debug_assert!(Overpartition::new(parts.to_vec()).is_some());
        Overpartition {
            parts: parts.to_vec(),
        }
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.size as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `l_o(pi)`: the number of overlined parts.
    pub fn overline_count(&self) -> usize {
        self.parts.iter().filter(|p| p.overlined).count()
    }

    pub fn largest(&self) -> Option<OverPart> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<OverPart> {
        self.parts.last().copied()
    }
}

impl fmt::Display for Overpartition {
    /// Comma-joined descending parts with `~` marking overlines, e.g.
    /// `2,2,1~,1`; the empty overpartition renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self.parts.iter().map(OverPart::to_string).collect();
        write!(f, "{}", rendered.join(","))
    }
}
