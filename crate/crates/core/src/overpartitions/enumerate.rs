use super::{OverPart, Overpartition};
use crate::partitions::{visit_m_part_partitions, visit_partitions, PartitionIter};

/// Calls `f` with every overpartition of `n` as a descending slice.
///
/// Order: underlying partitions in reverse-lexicographic order; within a
/// partition, decoration masks ascending, where bit `i` overlines the `i`-th
/// distinct size counted from the largest.
pub fn visit_overpartitions(n: usize, mut f: impl FnMut(&[OverPart])) {
    visit_partitions(n, |parts| decorate_all(parts, &mut f));
}

/// As [`visit_overpartitions`], restricted to exactly `m` parts.
pub fn visit_m_part_overpartitions(n: usize, m: usize, mut f: impl FnMut(&[OverPart])) {
    visit_m_part_partitions(n, m, |parts| decorate_all(parts, &mut f));
}

fn decorate_all(parts: &[u32], f: &mut impl FnMut(&[OverPart])) {
    // positions of first occurrences, one per distinct size, largest first
    let mut first_occurrence: Vec<usize> = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        if i == 0 || parts[i - 1] != p {
            first_occurrence.push(i);
        }
    }
    let d = first_occurrence.len();
    let mut buf: Vec<OverPart> = parts.iter().map(|&p| OverPart::plain(p)).collect();
    for mask in 0u64..(1u64 << d) {
        for (bit, &pos) in first_occurrence.iter().enumerate() {
            buf[pos].overlined = mask & (1 << bit) != 0;
        }
        f(&buf);
    }
}

/// Streaming iterator over all overpartitions of `n`, in the same order as
/// [`visit_overpartitions`].
pub struct OverpartitionIter {
    partitions: PartitionIter,
    current: Option<CurrentDecorations>,
}

struct CurrentDecorations {
    parts: Vec<u32>,
    first_occurrence: Vec<usize>,
    mask: u64,
}

impl OverpartitionIter {
    pub fn new(n: usize) -> Self {
        OverpartitionIter {
            partitions: PartitionIter::new(n),
            current: None,
        }
    }
}

impl Iterator for OverpartitionIter {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        loop {
            if let Some(cur) = &mut self.current {
                if cur.mask < (1u64 << cur.first_occurrence.len()) {
                    let mut parts: Vec<OverPart> =
                        cur.parts.iter().map(|&p| OverPart::plain(p)).collect();
                    for (bit, &pos) in cur.first_occurrence.iter().enumerate() {
                        parts[pos].overlined = cur.mask & (1 << bit) != 0;
                    }
                    cur.mask += 1;
                    return Some(Overpartition::from_slice(&parts));
                }
                self.current = None;
            }
            let partition = self.partitions.next()?;
            let parts = partition.parts().to_vec();
            let mut first_occurrence = Vec::new();
            for (i, &p) in parts.iter().enumerate() {
                if i == 0 || parts[i - 1] != p {
                    first_occurrence.push(i);
                }
            }
            self.current = Some(CurrentDecorations {
                parts,
                first_occurrence,
                mask: 0,
            });
        }
    }
}
