use std::cmp::Ordering;
use std::fmt;

/// Fixed-width set of element indices.
///
/// Ordering compares cardinality first, then the sorted element lists
/// lexicographically, so the minimum of a family is its "smallest sorted"
/// member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::new(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Universe size (not the cardinality).
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Lowercase hex, least significant word last, no separators.
    pub fn to_hex(&self) -> String {
        self.words.iter().rev().map(|w| format!("{w:016x}")).collect()
    }

    pub fn from_hex(len: usize, hex: &str) -> Option<BitSet> {
        let hex = hex.trim();
        let nwords = len.div_ceil(64);
        if hex.len() != nwords * 16 {
            return None;
        }
        let mut words = Vec::with_capacity(nwords);
        for chunk in hex.as_bytes().rchunks(16) {
            let s = std::str::from_utf8(chunk).ok()?;
            words.push(u64::from_str_radix(s, 16).ok()?);
        }
        let set = BitSet { len, words };
        if set.iter().any(|i| i >= len) {
            return None;
        }
        Some(set)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + b);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.count().cmp(&other.count()).then_with(|| {
            // Equal cardinality: the set owning the smallest element of the
            // symmetric difference sorts first.
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            self.len.cmp(&other.len)
        })
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_by_size_then_sorted_elements() {
        let a = BitSet::from_indices(10, [0, 2]);
        let b = BitSet::from_indices(10, [0, 1]);
        let c = BitSet::from_indices(10, [5]);
        assert!(b < a);
        assert!(c < b);
        let mut v = vec![a.clone(), b.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, b, a]);
    }

    #[test]
    fn hex_round_trip_wide() {
        let s = BitSet::from_indices(200, [0, 63, 64, 130, 199]);
        let h = s.to_hex();
        assert_eq!(BitSet::from_hex(200, &h), Some(s));
        assert_eq!(BitSet::from_hex(200, "zz"), None);
    }

    #[test]
    fn iteration_crosses_words() {
        let s = BitSet::from_indices(130, [1, 64, 129]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 64, 129]);
        assert_eq!(s.count(), 3);
        assert!(s.is_subset(&BitSet::full(130)));
    }
}
