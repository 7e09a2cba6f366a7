//! Finite universes of labeled elements and their subsets.
//!
//! A [`Universe`] is a finite, nonempty, ordered set of distinctly labeled
//! elements — the ground set over which partitions, approximations, and
//! measures are defined. Elements are addressed by dense index `0..n`, and
//! the label table translates between indices and names at the API boundary.
//!
//! Universes are shared behind [`Arc`]: a [`Subset`] or a
//! [`Partition`](crate::partition::Partition) carries a handle to its
//! universe, so values are self-contained and cheap to clone. Equality of
//! universes is equality of label sequences, which makes values parsed from
//! identical literals interoperable.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Hard cap on universe sizes accepted by exhaustive enumeration
/// (partitions or subsets). Partition counts grow super-exponentially — at
/// this bound there are already 4 213 597 partitions — so larger universes
/// are only usable with the non-enumerating operations.
pub const MAX_ENUMERATION: usize = 12;

/// A finite, nonempty, ordered set of distinctly labeled elements.
#[derive(Debug)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    /// Builds a universe from an ordered sequence of labels.
    ///
    /// # Errors
    ///
    /// [`Error::EmptyUniverse`] if no label is given;
    /// [`Error::DuplicateLabel`] if two labels coincide.
    ///
    /// # Examples
    ///
    /// ```
    /// use roughset::Universe;
    ///
    /// let u = Universe::new(["a1", "a2", "a3"]).unwrap();
    /// assert_eq!(u.len(), 3);
    /// assert_eq!(u.label(1), "a2");
    /// ```
    pub fn new<I, S>(labels: I) -> Result<Arc<Universe>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Arc::new(Universe { labels, index }))
    }

    /// A universe of `n` elements labeled `a1`, `a2`, …, `an`.
    ///
    /// # Errors
    ///
    /// [`Error::EmptyUniverse`] if `n` is zero.
    pub fn numbered(n: usize) -> Result<Arc<Universe>> {
        Universe::new((1..=n).map(|i| format!("a{i}")))
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: universes are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The labels in element-index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of the element at `index`.
    ///
    /// # Panics
    ///
    /// Panics if `index` is out of range.
    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    /// Index of the element with the given label, if present.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Index of the element with the given label.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownLabel`] if no element carries the label.
    pub fn position(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The empty subset of this universe.
    pub fn empty_subset(self: &Arc<Self>) -> Subset {
        Subset {
            universe: Arc::clone(self),
            bits: BitSet::new(self.len()),
        }
    }

    /// The subset containing every element.
    pub fn full_subset(self: &Arc<Self>) -> Subset {
        Subset {
            universe: Arc::clone(self),
            bits: BitSet::full(self.len()),
        }
    }

    /// Builds a subset from element labels.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownLabel`] for labels outside the universe;
    /// [`Error::DuplicateLabel`] if a label repeats.
    pub fn subset<I, S>(self: &Arc<Self>, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = BitSet::new(self.len());
        for label in labels {
            let i = self.position(label.as_ref())?;
            if bits.contains(i) {
                return Err(Error::DuplicateLabel(label.as_ref().to_string()));
            }
            bits.insert(i);
        }
        Ok(Subset {
            universe: Arc::clone(self),
            bits,
        })
    }

    /// All `2^n` subsets, ordered by increasing bitmask (element `i`
    /// corresponds to bit `i`; the empty set comes first, the full universe
    /// last).
    ///
    /// # Errors
    ///
    /// [`Error::UniverseTooLarge`] beyond [`MAX_ENUMERATION`] elements.
    pub fn all_subsets(self: &Arc<Self>) -> Result<Vec<Subset>> {
        let n = self.len();
        if n > MAX_ENUMERATION {
            return Err(Error::UniverseTooLarge {
                size: n,
                max: MAX_ENUMERATION,
            });
        }
        let mut subsets = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            subsets.push(Subset {
                universe: Arc::clone(self),
                bits: BitSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)),
            });
        }
        Ok(subsets)
    }
}

/// Universes are equal when their label sequences are equal.
impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Universe {}

/// A subset of a universe.
///
/// Carries a handle to its universe; binary operations check that both
/// operands live over the same universe.
#[derive(Clone, Debug)]
pub struct Subset {
    universe: Arc<Universe>,
    bits: BitSet,
}

impl Subset {
    /// Builds a subset from element indices.
    ///
    /// # Panics
    ///
    /// Panics if an index is out of range (indices are an internal
    /// addressing scheme; out-of-range values are bugs, not input errors).
    pub fn from_indices<I>(universe: &Arc<Universe>, indices: I) -> Subset
    where
        I: IntoIterator<Item = usize>,
    {
        Subset {
            universe: Arc::clone(universe),
            bits: BitSet::from_indices(universe.len(), indices),
        }
    }

    pub(crate) fn from_bits(universe: Arc<Universe>, bits: BitSet) -> Subset {
        debug_assert_eq!(bits.nbits(), universe.len());
        Subset { universe, bits }
    }

    /// Parses a comma-separated member list against an existing universe.
    ///
    /// The empty (or all-whitespace) literal denotes the empty subset.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownLabel`] / [`Error::DuplicateLabel`] for bad members;
    /// [`Error::Parse`] for stray commas.
    ///
    /// # Examples
    ///
    /// ```
    /// use roughset::{Subset, Universe};
    ///
    /// let u = Universe::new(["a1", "a2", "a3"]).unwrap();
    /// let a = Subset::parse(&u, "a3,a1").unwrap();
    /// assert_eq!(a.render(), "a1,a3");
    /// assert!(Subset::parse(&u, "").unwrap().is_empty());
    /// ```
    pub fn parse(universe: &Arc<Universe>, literal: &str) -> Result<Subset> {
        if literal.trim().is_empty() {
            return Ok(universe.empty_subset());
        }
        let mut labels = Vec::new();
        for token in literal.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::Parse(format!(
                    "empty member in subset literal `{literal}`"
                )));
            }
            labels.push(token);
        }
        universe.subset(labels)
    }

    /// Renders the member labels in element-index order, comma-separated.
    /// The empty subset renders as the empty string.
    pub fn render(&self) -> String {
        let labels: Vec<&str> = self.labels().collect();
        labels.join(",")
    }

    /// The universe this subset belongs to.
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// The underlying index set.
    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Whether the subset is empty.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Whether the subset is the whole universe.
    pub fn is_full(&self) -> bool {
        self.bits.len() == self.universe.len()
    }

    /// Membership by element index.
    pub fn contains_index(&self, index: usize) -> bool {
        self.bits.contains(index)
    }

    /// Membership by label; false for labels outside the universe.
    pub fn contains_label(&self, label: &str) -> bool {
        self.universe
            .index_of(label)
            .is_some_and(|i| self.bits.contains(i))
    }

    /// Member labels in element-index order.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.bits.iter().map(|i| self.universe.label(i))
    }

    fn check_same_universe(&self, other: &Subset) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Set union.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if the operands disagree on the universe.
    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.check_same_universe(other)?;
        Ok(Subset {
            universe: Arc::clone(&self.universe),
            bits: self.bits.union(&other.bits),
        })
    }

    /// Set intersection.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if the operands disagree on the universe.
    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.check_same_universe(other)?;
        Ok(Subset {
            universe: Arc::clone(&self.universe),
            bits: self.bits.intersection(&other.bits),
        })
    }

    /// Set difference `self \ other`.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if the operands disagree on the universe.
    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.check_same_universe(other)?;
        Ok(Subset {
            universe: Arc::clone(&self.universe),
            bits: self.bits.difference(&other.bits),
        })
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Subset {
        Subset {
            universe: Arc::clone(&self.universe),
            bits: self.bits.complement(),
        }
    }

    /// Whether `self ⊆ other`.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if the operands disagree on the universe.
    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        self.check_same_universe(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }
}

/// Subsets are equal when universe and members coincide.
impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.bits == other.bits
    }
}

impl Eq for Subset {}
