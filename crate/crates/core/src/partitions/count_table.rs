/// Exact counts indexed by `(m, n)` = (part count, weight). Entries outside
/// the stored window read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    max_m: usize,
    max_n: usize,
    counts: Vec<u64>,
}

impl CountTable {
    pub fn new(max_m: usize, max_n: usize) -> Self {
        CountTable {
            max_m,
            max_n,
            counts: vec![0; (max_m + 1) * (max_n + 1)],
        }
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn get(&self, m: usize, n: usize) -> u64 {
        if m > self.max_m || n > self.max_n {
            return 0;
        }
        self.counts[m * (self.max_n + 1) + n]
    }

    pub fn increment(&mut self, m: usize, n: usize) {
        debug_assert!(m <= self.max_m && n <= self.max_n);
        self.counts[m * (self.max_n + 1) + n] += 1;
    }

    pub fn set(&mut self, m: usize, n: usize, value: u64) {
        self.counts[m * (self.max_n + 1) + n] = value;
    }

    /// Sum over all part counts: the one-argument count of weight `n`.
    pub fn weight_total(&self, n: usize) -> u64 {
        (0..=self.max_m).map(|m| self.get(m, n)).sum()
    }

    /// CSV rendering with header `m,n,count`, rows ordered by weight then
    /// part count, covering all `m <= n <= max_n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,n,count\n");
        for n in 0..=self.max_n {
            for m in 0..=n.min(self.max_m) {
                out.push_str(&format!("{m},{n},{}\n", self.get(m, n)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn out_of_range_reads_zero() {
        let mut t = CountTable::new(2, 3);
        t.set(1, 2, 7);
        assert_eq!(t.get(1, 2), 7);
        assert_eq!(t.get(5, 1), 0);
        assert_eq!(t.get(1, 9), 0);
    }

    #[test]
    fn csv_layout() {
        let mut t = CountTable::new(2, 2);
        t.set(1, 1, 3);
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "m,n,count");
        assert_eq!(lines[1], "0,0,0");
        assert!(lines.contains(&"1,1,3"));
    }
}
