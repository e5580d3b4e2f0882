use super::Partition;

/// Streaming enumeration of all partitions of `n` in reverse-lexicographic
/// order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub struct PartitionIter {
    current: Option<Vec<u32>>,
}

impl PartitionIter {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 {
            Some(Vec::new())
        } else {
            Some(vec![n as u32])
        };
        PartitionIter { current: first }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let item = Partition::from_slice(&parts);
        self.current = next_partition(parts);
        Some(item)
    }
}

/// Successor in reverse-lexicographic order, or `None` after `(1^n)`.
fn next_partition(mut parts: Vec<u32>) -> Option<Vec<u32>> {
    // find the rightmost part > 1; everything after it is a run of 1s
    let k = parts.iter().rposition(|&p| p > 1)?;
    let ones = parts.len() - k - 1;
    let mut budget = parts[k] as usize + ones;
    let new_part = parts[k] as usize - 1;
    parts.truncate(k);
    // refill the tail greedily: copies of new_part, then one remainder part
    while budget > 0 {
        let p = new_part.min(budget);
        parts.push(p as u32);
        budget -= p;
    }
    Some(parts)
}

/// Calls `f` with each partition of `n` (as a descending slice) in
/// reverse-lexicographic order, reusing one buffer.
pub fn visit_partitions(n: usize, mut f: impl FnMut(&[u32])) {
    let mut buf: Vec<u32> = Vec::new();
    visit_rec(n, n, &mut buf, &mut f);
}

fn visit_rec(remaining: usize, max_part: usize, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        f(buf);
        return;
    }
    let top = remaining.min(max_part);
    for p in (1..=top).rev() {
        buf.push(p as u32);
        visit_rec(remaining - p, p, buf, f);
        buf.pop();
    }
}

/// Calls `f` with each partition of `n` into exactly `m` parts, descending
/// slices in reverse-lexicographic order.
pub fn visit_m_part_partitions(n: usize, m: usize, mut f: impl FnMut(&[u32])) {
    if m == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    if n < m {
        return;
    }
    let mut buf: Vec<u32> = Vec::with_capacity(m);
    visit_m_rec(n, m, n, &mut buf, &mut f);
}

fn visit_m_rec(
    remaining: usize,
    slots: usize,
    max_part: usize,
    buf: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if slots == 1 {
        if remaining >= 1 && remaining <= max_part {
            buf.push(remaining as u32);
            f(buf);
            buf.pop();
        }
        return;
    }
    // each of the remaining slots needs at least 1
    let hi = max_part.min(remaining - (slots - 1));
    let lo = remaining.div_ceil(slots);
    for p in (lo..=hi).rev() {
        buf.push(p as u32);
        visit_m_rec(remaining - p, slots - 1, p, buf, f);
        buf.pop();
    }
}

/// Iterator form of [`visit_m_part_partitions`] for streaming consumers.
pub struct MPartPartitionIter {
    items: std::vec::IntoIter<Partition>,
}

impl MPartPartitionIter {
    pub fn new(n: usize, m: usize) -> Self {
        let mut items = Vec::new();
        visit_m_part_partitions(n, m, |parts| items.push(Partition::from_slice(parts)));
        MPartPartitionIter {
            items: items.into_iter(),
        }
    }
}

impl Iterator for MPartPartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.items.next()
    }
}
