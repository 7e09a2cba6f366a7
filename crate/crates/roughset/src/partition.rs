//! Partitions of a universe, the refinement order, and exhaustive
//! enumeration.
//!
//! A partition π of a universe U is a set of nonempty, pairwise disjoint
//! blocks whose union is U; blocks play the role of equivalence classes of
//! an indiscernibility relation, and are also called elementary sets.
//!
//! # Canonical form
//!
//! Blocks are stored sorted by their smallest member, and members within a
//! block are ordered by element index. Structural equality of canonical
//! forms therefore coincides with mathematical equality of partitions, and
//! rendering is deterministic.
//!
//! # Refinement order
//!
//! π ≤ σ ("π refines σ", π is finer) when every block of π is contained in
//! some block of σ. The discrete partition (all singletons) is the minimum
//! and the trivial partition (one block) the maximum of this order:
//! discrete ≤ π ≤ trivial for every π.
//!
//! # Enumeration
//!
//! [`enumerate_partitions`] emits every partition of the universe exactly
//! once by generating restricted growth strings in lexicographic order. A
//! restricted growth string assigns to each element the index of its block,
//! subject to `a[0] = 0` and `a[i] ≤ 1 + max(a[0..i])`; block indices are
//! first-occurrence ranks, so the decoded blocks are already in canonical
//! order. The number of partitions of an n-element set is the n-th Bell
//! number, which reaches 4 213 597 at n = 12 — hence the enumeration bound
//! [`MAX_ENUMERATION`].

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::universe::{Universe, MAX_ENUMERATION};

/// A partition of a universe into nonempty, disjoint, covering blocks,
/// held in canonical form.
#[derive(Clone, Debug)]
pub struct Partition {
    universe: Arc<Universe>,
    blocks: Vec<BitSet>,
    /// For each element index, the index of its block in `blocks`.
    block_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from raw blocks, validating and canonicalizing.
    ///
    /// # Errors
    ///
    /// [`Error::EmptyBlock`] for an empty block,
    /// [`Error::OverlappingBlocks`] if two blocks share an element,
    /// [`Error::IncompleteCover`] if some element is in no block.
    pub fn from_blocks(universe: &Arc<Universe>, mut blocks: Vec<BitSet>) -> Result<Partition> {
        let n = universe.len();
        let mut seen = BitSet::new(n);
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            if !seen.is_disjoint(block) {
                let clash = seen.intersection(block).min().expect("nonempty intersection");
                return Err(Error::OverlappingBlocks {
                    label: universe.label(clash).to_string(),
                });
            }
            seen = seen.union(block);
        }
        if seen.len() != n {
            let missing = seen.complement().min().expect("some element uncovered");
            return Err(Error::IncompleteCover {
                label: universe.label(missing).to_string(),
            });
        }
        blocks.sort_by_key(|b| b.min().expect("blocks are nonempty"));
        Ok(Partition::from_canonical(Arc::clone(universe), blocks))
    }

    /// Internal constructor for blocks already known to be a valid cover in
    /// canonical order.
    fn from_canonical(universe: Arc<Universe>, blocks: Vec<BitSet>) -> Partition {
        let mut block_of = vec![0; universe.len()];
        for (b, block) in blocks.iter().enumerate() {
            for i in block {
                block_of[i] = b;
            }
        }
        Partition {
            universe,
            blocks,
            block_of,
        }
    }

    /// The one-block partition {U} — the coarsest partition, the maximum of
    /// the refinement order.
    pub fn trivial(universe: &Arc<Universe>) -> Partition {
        Partition::from_canonical(
            Arc::clone(universe),
            vec![BitSet::full(universe.len())],
        )
    }

    /// The all-singletons partition — the finest partition, the minimum of
    /// the refinement order.
    pub fn discrete(universe: &Arc<Universe>) -> Partition {
        let n = universe.len();
        let blocks = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        Partition::from_canonical(Arc::clone(universe), blocks)
    }

    /// Groups elements by a labeling function: blocks are the preimages of
    /// the label values.
    ///
    /// A constant labeling yields the trivial partition, an injective one
    /// the discrete partition.
    ///
    /// # Examples
    ///
    /// ```
    /// use roughset::{Partition, Universe};
    ///
    /// let u = Universe::numbered(5).unwrap();
    /// let labels = ["A", "B", "B", "C", "C"];
    /// let p = Partition::from_labeling(&u, |i| labels[i]);
    /// assert_eq!(p.render(), "a1|a2,a3|a4,a5");
    /// ```
    pub fn from_labeling<K, F>(universe: &Arc<Universe>, label: F) -> Partition
    where
        K: Eq + Hash,
        F: Fn(usize) -> K,
    {
        let n = universe.len();
        let mut block_index: HashMap<K, usize> = HashMap::new();
        let mut blocks: Vec<BitSet> = Vec::new();
        for i in 0..n {
            let key = label(i);
            let &mut b = block_index
                .entry(key)
                .or_insert_with(|| {
                    blocks.push(BitSet::new(n));
                    blocks.len() - 1
                });
            blocks[b].insert(i);
        }
        // First-occurrence order equals order by smallest member, so the
        // blocks are already canonical.
        Partition::from_canonical(Arc::clone(universe), blocks)
    }

    /// Parses a partition literal, building the universe from the order of
    /// appearance of the labels.
    ///
    /// The literal separates blocks with `|` and members with `,`, e.g.
    /// `a1|a2,a3|a4,a5`. Because the universe adopts appearance order and
    /// blocks are canonicalized by smallest member, `parse` followed by
    /// [`render`](Partition::render) reproduces the input literal exactly
    /// (up to whitespace around tokens).
    ///
    /// # Errors
    ///
    /// [`Error::Parse`] for structural problems (empty literal, empty block
    /// or member), [`Error::DuplicateLabel`] for repeated members.
    ///
    /// # Examples
    ///
    /// ```
    /// use roughset::Partition;
    ///
    /// let p = Partition::parse("a1|a2,a3|a4,a5").unwrap();
    /// assert_eq!(p.num_blocks(), 3);
    /// assert_eq!(p.render(), "a1|a2,a3|a4,a5");
    /// ```
    pub fn parse(literal: &str) -> Result<Partition> {
        let label_blocks = split_literal(literal)?;
        let universe = Universe::new(label_blocks.iter().flatten().cloned())?;
        Partition::assemble(&universe, &label_blocks)
    }

    /// Parses a partition literal whose labels must exactly cover an
    /// existing universe.
    ///
    /// # Errors
    ///
    /// As [`Partition::parse`], plus [`Error::UnknownLabel`] for members
    /// outside the universe and [`Error::IncompleteCover`] if some element
    /// of the universe does not appear.
    pub fn parse_over(universe: &Arc<Universe>, literal: &str) -> Result<Partition> {
        let label_blocks = split_literal(literal)?;
        Partition::assemble(universe, &label_blocks)
    }

    fn assemble(universe: &Arc<Universe>, label_blocks: &[Vec<String>]) -> Result<Partition> {
        let n = universe.len();
        let mut blocks = Vec::with_capacity(label_blocks.len());
        for labels in label_blocks {
            let mut bits = BitSet::new(n);
            for label in labels {
                let i = universe.position(label)?;
                if bits.contains(i) {
                    return Err(Error::DuplicateLabel(label.clone()));
                }
                bits.insert(i);
            }
            blocks.push(bits);
        }
        Partition::from_blocks(universe, blocks)
    }

    /// Renders the canonical literal: blocks sorted by smallest member and
    /// joined with `|`, members in index order joined with `,`.
    pub fn render(&self) -> String {
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|block| {
                let labels: Vec<&str> =
                    block.iter().map(|i| self.universe.label(i)).collect();
                labels.join(",")
            })
            .collect();
        rendered.join("|")
    }

    /// The universe this partition divides.
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// The blocks in canonical order.
    pub fn blocks(&self) -> &[BitSet] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The block containing the element with the given index.
    ///
    /// # Panics
    ///
    /// Panics if `index` is out of range.
    pub fn block_containing(&self, index: usize) -> &BitSet {
        &self.blocks[self.block_of[index]]
    }

    /// Block cardinalities in descending order.
    ///
    /// Two partitions (of equal-sized universes) are isomorphic — related by
    /// a bijection that is a homomorphism in both directions — exactly when
    /// their size multisets coincide; see
    /// [`exists_isomorphism`](crate::morphism::exists_isomorphism).
    pub fn block_size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(BitSet::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Whether this is the one-block partition.
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Whether this is the all-singletons partition.
    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.universe.len()
    }

    /// Whether `self ≤ other` in the refinement order: every block of
    /// `self` is contained in some block of `other`.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if the partitions divide different
    /// universes.
    ///
    /// # Examples
    ///
    /// ```
    /// use roughset::{Partition, Universe};
    ///
    /// let u = Universe::numbered(5).unwrap();
    /// let p = Partition::parse_over(&u, "a1|a2,a3|a4,a5").unwrap();
    /// let s = Partition::parse_over(&u, "a1,a2,a3|a4,a5").unwrap();
    /// assert!(p.refines(&s).unwrap());
    /// assert!(!s.refines(&p).unwrap());
    /// ```
    pub fn refines(&self, other: &Partition) -> Result<bool> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        // A block C fits inside a block of `other` iff it fits inside the
        // `other`-block of any one of its members.
        Ok(self.blocks.iter().all(|block| {
            let witness = block.min().expect("blocks are nonempty");
            block.is_subset(other.block_containing(witness))
        }))
    }

    /// Whether `self < other`: refinement together with inequality.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if the partitions divide different
    /// universes.
    pub fn strictly_refines(&self, other: &Partition) -> Result<bool> {
        Ok(self.refines(other)? && self != other)
    }
}

/// Partitions are equal when universe and canonical block lists coincide.
impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.blocks == other.blocks
    }
}

impl Eq for Partition {}

/// Splits a literal into blocks of member labels, validating shape only.
fn split_literal(literal: &str) -> Result<Vec<Vec<String>>> {
    if literal.trim().is_empty() {
        return Err(Error::Parse("empty partition literal".to_string()));
    }
    let mut blocks = Vec::new();
    for block in literal.split('|') {
        let mut labels = Vec::new();
        for token in block.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::Parse(format!(
                    "empty member in partition literal `{literal}`"
                )));
            }
            labels.push(token.to_string());
        }
        blocks.push(labels);
    }
    Ok(blocks)
}

/// Streaming enumeration of every partition of the universe, in restricted
/// growth string lexicographic order.
///
/// The first partition emitted is the trivial one (all-zeros string) and
/// the last is the discrete one (string `0,1,…,n−1`).
///
/// # Errors
///
/// [`Error::UniverseTooLarge`] beyond [`MAX_ENUMERATION`] elements.
///
/// # Examples
///
/// ```
/// use roughset::{enumerate_partitions, Universe};
///
/// let u = Universe::numbered(4).unwrap();
/// let all: Vec<_> = enumerate_partitions(&u).unwrap().collect();
/// assert_eq!(all.len(), 15);
/// assert!(all[0].is_trivial());
/// assert!(all[14].is_discrete());
/// ```
pub fn enumerate_partitions(universe: &Arc<Universe>) -> Result<Partitions> {
    let n = universe.len();
    if n > MAX_ENUMERATION {
        return Err(Error::UniverseTooLarge {
            size: n,
            max: MAX_ENUMERATION,
        });
    }
    Ok(Partitions {
        universe: Arc::clone(universe),
        rgs: RgsStrings::new(n),
    })
}

/// Counts the partitions of the universe by running the same enumeration
/// as [`enumerate_partitions`] without materializing the partitions.
///
/// The count of an n-element universe is the n-th Bell number.
///
/// # Errors
///
/// [`Error::UniverseTooLarge`] beyond [`MAX_ENUMERATION`] elements.
pub fn count_partitions(universe: &Arc<Universe>) -> Result<u64> {
    let n = universe.len();
    if n > MAX_ENUMERATION {
        return Err(Error::UniverseTooLarge {
            size: n,
            max: MAX_ENUMERATION,
        });
    }
    let mut rgs = RgsStrings::new(n);
    let mut count = 0;
    while rgs.current().is_some() {
        count += 1;
        rgs.advance();
    }
    Ok(count)
}

/// Iterator over restricted growth strings in lexicographic order.
struct RgsStrings {
    /// `a[i]` is the block index of element `i`.
    a: Vec<usize>,
    /// `m[i]` is `max(a[0..=i])`, maintained incrementally.
    m: Vec<usize>,
    done: bool,
}

impl RgsStrings {
    fn new(n: usize) -> RgsStrings {
        RgsStrings {
            a: vec![0; n],
            m: vec![0; n],
            done: n == 0,
        }
    }

    fn current(&self) -> Option<&[usize]> {
        if self.done {
            None
        } else {
            Some(&self.a)
        }
    }

    fn advance(&mut self) {
        let n = self.a.len();
        // The rightmost position that can still grow is the lexicographic
        // successor point: a[i] may rise to at most 1 + max(a[0..i]).
        for i in (1..n).rev() {
            if self.a[i] <= self.m[i - 1] {
                self.a[i] += 1;
                self.m[i] = self.m[i - 1].max(self.a[i]);
                for j in i + 1..n {
                    self.a[j] = 0;
                    self.m[j] = self.m[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

/// Iterator returned by [`enumerate_partitions`].
pub struct Partitions {
    universe: Arc<Universe>,
    rgs: RgsStrings,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let a = self.rgs.current()?;
        let n = a.len();
        let num_blocks = a.iter().copied().max().expect("n ≥ 1") + 1;
        let mut blocks = vec![BitSet::new(n); num_blocks];
        for (i, &b) in a.iter().enumerate() {
            blocks[b].insert(i);
        }
        // Block indices are first-occurrence ranks, so `blocks` is already
        // sorted by smallest member.
        let partition = Partition::from_canonical(Arc::clone(&self.universe), blocks);
        self.rgs.advance();
        Some(partition)
    }
}
