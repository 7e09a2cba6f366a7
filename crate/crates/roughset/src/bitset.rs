//! A fixed-width bitset over dense element indices.
//!
//! Universe elements are dense indices `0..n`, so subsets and partition
//! blocks are bitsets; the subset/intersection tests that dominate
//! approximation and verification workloads become word-parallel operations.
//!
//! All binary operations require both operands to have the same width.
//! Widths are an internal invariant (both sides always come from the same
//! universe, which is checked at the public API boundary), so a mismatch is
//! a bug and panics rather than returning an error.

/// A set of indices drawn from `0..nbits`, stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

const WORD_BITS: usize = 64;

fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS)
}

impl BitSet {
    /// The empty set over `0..nbits`.
    pub fn new(nbits: usize) -> Self {
        BitSet {
            nbits,
            words: vec![0; word_count(nbits)],
        }
    }

    /// The full set `{0, 1, …, nbits−1}`.
    pub fn full(nbits: usize) -> Self {
        let mut set = BitSet::new(nbits);
        for (i, word) in set.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            let in_word = (nbits - lo).min(WORD_BITS);
            *word = if in_word == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << in_word) - 1
            };
        }
        set
    }

    /// Builds a set from the given indices.
    ///
    /// # Panics
    ///
    /// Panics if any index is out of range.
    pub fn from_indices<I>(nbits: usize, indices: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = BitSet::new(nbits);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Width of the set, i.e. the size of the ambient index range.
    pub fn nbits(&self) -> usize {
        self.nbits
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether the set has no members.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Membership test.
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of range.
    pub fn contains(&self, i: usize) -> bool {
        assert!(i < self.nbits, "index {i} out of range for width {}", self.nbits);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Adds an index to the set.
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of range.
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.nbits, "index {i} out of range for width {}", self.nbits);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    fn assert_same_width(&self, other: &BitSet) {
        assert_eq!(
            self.nbits, other.nbits,
            "bitset width mismatch: {} vs {}",
            self.nbits, other.nbits
        );
    }

    /// Set union.
    pub fn union(&self, other: &BitSet) -> BitSet {
        self.assert_same_width(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        BitSet { nbits: self.nbits, words }
    }

    /// Set intersection.
    pub fn intersection(&self, other: &BitSet) -> BitSet {
        self.assert_same_width(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        BitSet { nbits: self.nbits, words }
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &BitSet) -> BitSet {
        self.assert_same_width(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        BitSet { nbits: self.nbits, words }
    }

    /// Complement within `0..nbits`.
    pub fn complement(&self) -> BitSet {
        BitSet::full(self.nbits).difference(self)
    }

    /// Whether every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.assert_same_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Whether the two sets share no member.
    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.assert_same_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(i * WORD_BITS + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates over members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

/// Ascending iterator over the members of a [`BitSet`].
pub struct Iter<'a> {
    set: &'a BitSet,
    word_index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * WORD_BITS + bit)
    }
}

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
