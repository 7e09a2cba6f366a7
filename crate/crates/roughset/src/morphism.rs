//! Structure-preserving maps between partitioned universes.
//!
//! An [`ElementMap`] f from ⟨U, π⟩ to ⟨V, σ⟩ is a total assignment of
//! target elements to source elements. Four increasingly rigid notions of
//! structure preservation are defined on top of it:
//!
//! - **homomorphism** — every block image lands inside a block:
//!   ∀C ∈ π ∃D ∈ σ: f(C) ⊆ D;
//! - **monomorphism** — an injective homomorphism;
//! - **strict monomorphism** — a monomorphism with at least one block image
//!   properly contained in its target block: ∃C, D with f(C) ⊊ D;
//! - **isomorphism** — a bijection such that both f and f⁻¹ are
//!   homomorphisms.
//!
//! # Deciding isomorphism by signature
//!
//! Two partitions of equal-sized universes admit an isomorphism exactly
//! when their block-size multisets coincide. Forward direction: if f and
//! f⁻¹ are homomorphisms, each block C ∈ π satisfies f(C) ⊆ D for some
//! D ∈ σ and f⁻¹(D) ⊆ C′ for some C′ ∈ π; then C ⊆ f⁻¹(D) ⊆ C′, and blocks
//! are disjoint or equal, so C = f⁻¹(D), i.e. f maps blocks **onto** blocks
//! bijectively and preserves their sizes. Converse: match up equal-sized
//! blocks and map members in order; both directions are then
//! homomorphisms. [`exists_isomorphism`] implements the signature test, and
//! [`matching_bijection`] constructs the witness used by the axiom
//! verifiers; the equivalence itself is cross-checked against a brute-force
//! bijection search in the integration tests.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::universe::{Subset, Universe};

/// A total map between two universes, stored as target indices per source
/// index.
#[derive(Clone, Debug)]
pub struct ElementMap {
    source: Arc<Universe>,
    target: Arc<Universe>,
    map: Vec<usize>,
}

impl ElementMap {
    /// Builds a map from (source label, target label) pairs; every source
    /// element must appear exactly once.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownLabel`] for labels outside the respective universe,
    /// [`Error::DuplicateLabel`] if a source element is assigned twice,
    /// [`Error::MapNotTotal`] if one is never assigned.
    ///
    /// # Examples
    ///
    /// ```
    /// use roughset::{ElementMap, Universe};
    ///
    /// let u = Universe::new(["1", "2", "3", "4"]).unwrap();
    /// let f = ElementMap::from_pairs(&u, &u, [("1", "1"), ("2", "3"), ("3", "2"), ("4", "4")])
    ///     .unwrap();
    /// assert!(f.is_bijective());
    /// ```
    pub fn from_pairs<'a, I>(
        source: &Arc<Universe>,
        target: &Arc<Universe>,
        pairs: I,
    ) -> Result<ElementMap>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut map = vec![usize::MAX; source.len()];
        for (from, to) in pairs {
            let i = source.position(from)?;
            let j = target.position(to)?;
            if map[i] != usize::MAX {
                return Err(Error::DuplicateLabel(from.to_string()));
            }
            map[i] = j;
        }
        if let Some(missing) = map.iter().position(|&j| j == usize::MAX) {
            return Err(Error::MapNotTotal {
                missing: source.label(missing).to_string(),
            });
        }
        Ok(ElementMap {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
        })
    }

    /// Builds a map from an index function.
    ///
    /// # Errors
    ///
    /// [`Error::MapNotTotal`] if the function sends an index outside the
    /// target universe (the assignment is unusable, hence not total).
    pub fn from_fn<F>(source: &Arc<Universe>, target: &Arc<Universe>, f: F) -> Result<ElementMap>
    where
        F: Fn(usize) -> usize,
    {
        let mut map = Vec::with_capacity(source.len());
        for i in 0..source.len() {
            let j = f(i);
            if j >= target.len() {
                return Err(Error::MapNotTotal {
                    missing: source.label(i).to_string(),
                });
            }
            map.push(j);
        }
        Ok(ElementMap {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
        })
    }

    /// The identity map on a universe.
    pub fn identity(universe: &Arc<Universe>) -> ElementMap {
        ElementMap {
            source: Arc::clone(universe),
            target: Arc::clone(universe),
            map: (0..universe.len()).collect(),
        }
    }

    /// Source universe.
    pub fn source(&self) -> &Arc<Universe> {
        &self.source
    }

    /// Target universe.
    pub fn target(&self) -> &Arc<Universe> {
        &self.target
    }

    /// Image of a source element index.
    ///
    /// # Panics
    ///
    /// Panics if `index` is out of range.
    pub fn apply(&self, index: usize) -> usize {
        self.map[index]
    }

    /// Whether distinct elements have distinct images.
    pub fn is_injective(&self) -> bool {
        let mut seen = BitSet::new(self.target.len());
        for &j in &self.map {
            if seen.contains(j) {
                return false;
            }
            seen.insert(j);
        }
        true
    }

    /// Whether the map is a bijection between the universes.
    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }

    /// The inverse of a bijective map.
    ///
    /// # Errors
    ///
    /// [`Error::MapNotBijective`] if the map is not a bijection.
    pub fn inverse(&self) -> Result<ElementMap> {
        if !self.is_bijective() {
            return Err(Error::MapNotBijective);
        }
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Ok(ElementMap {
            source: Arc::clone(&self.target),
            target: Arc::clone(&self.source),
            map: inv,
        })
    }

    /// Image f(A) of a subset of the source universe.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if `a` is not over the source universe.
    pub fn image_subset(&self, a: &Subset) -> Result<Subset> {
        if **a.universe() != *self.source {
            return Err(Error::UniverseMismatch);
        }
        let bits = BitSet::from_indices(self.target.len(), a.bits().iter().map(|i| self.map[i]));
        Ok(Subset::from_bits(Arc::clone(&self.target), bits))
    }

    /// Image partition f(π) = {f(C) | C ∈ π} of a bijective map.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if `p` is not over the source universe,
    /// [`Error::MapNotBijective`] if the map is not a bijection (images of
    /// blocks under a non-bijection need not form a partition).
    pub fn image_partition(&self, p: &Partition) -> Result<Partition> {
        if **p.universe() != *self.source {
            return Err(Error::UniverseMismatch);
        }
        if !self.is_bijective() {
            return Err(Error::MapNotBijective);
        }
        let blocks = p.blocks().iter().map(|b| self.image_bits(b)).collect();
        Partition::from_blocks(&self.target, blocks)
    }

    fn image_bits(&self, block: &BitSet) -> BitSet {
        BitSet::from_indices(self.target.len(), block.iter().map(|i| self.map[i]))
    }

    fn check_spaces(&self, p: &Partition, s: &Partition) -> Result<()> {
        if **p.universe() != *self.source || **s.universe() != *self.target {
            return Err(Error::UniverseMismatch);
        }
        Ok(())
    }

    /// Whether the map sends every block of `p` into some block of `s`.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if `p` or `s` does not live over the
    /// map's source (resp. target) universe.
    pub fn is_homomorphism(&self, p: &Partition, s: &Partition) -> Result<bool> {
        self.check_spaces(p, s)?;
        Ok(p.blocks().iter().all(|block| {
            let image = self.image_bits(block);
            let witness = image.min().expect("blocks are nonempty");
            image.is_subset(s.block_containing(witness))
        }))
    }

    /// An injective homomorphism.
    ///
    /// # Errors
    ///
    /// As [`ElementMap::is_homomorphism`].
    pub fn is_monomorphism(&self, p: &Partition, s: &Partition) -> Result<bool> {
        Ok(self.is_injective() && self.is_homomorphism(p, s)?)
    }

    /// A monomorphism whose image is somewhere properly inside a target
    /// block: ∃C ∈ p, D ∈ s with f(C) ⊊ D.
    ///
    /// # Errors
    ///
    /// As [`ElementMap::is_homomorphism`].
    pub fn is_strict_monomorphism(&self, p: &Partition, s: &Partition) -> Result<bool> {
        if !self.is_monomorphism(p, s)? {
            return Ok(false);
        }
        // For a homomorphism each image lies in exactly one block, so
        // strictness is an inequality against that block.
        Ok(p.blocks().iter().any(|block| {
            let image = self.image_bits(block);
            let witness = image.min().expect("blocks are nonempty");
            image != *s.block_containing(witness)
        }))
    }

    /// A bijection that is a homomorphism in both directions.
    ///
    /// # Errors
    ///
    /// As [`ElementMap::is_homomorphism`].
    pub fn is_isomorphism(&self, p: &Partition, s: &Partition) -> Result<bool> {
        self.check_spaces(p, s)?;
        if !self.is_bijective() {
            return Ok(false);
        }
        Ok(self.is_homomorphism(p, s)? && self.inverse()?.is_homomorphism(s, p)?)
    }
}

/// Whether some isomorphism exists between ⟨U, p⟩ and ⟨V, s⟩, decided by
/// the block-size signature (see the module docs for why this is
/// equivalent to the existence of an explicit bijection).
///
/// # Examples
///
/// ```
/// use roughset::{exists_isomorphism, Partition};
///
/// let p = Partition::parse("1,2|3,4").unwrap();
/// let s = Partition::parse("1,3|2,4").unwrap();
/// assert!(exists_isomorphism(&p, &s));
/// ```
pub fn exists_isomorphism(p: &Partition, s: &Partition) -> bool {
    p.universe().len() == s.universe().len()
        && p.block_size_multiset() == s.block_size_multiset()
}

/// Constructs the canonical witness isomorphism between two partitions
/// with equal block-size signatures: blocks are matched in ascending
/// (size, smallest member) order and members are paired in ascending index
/// order.
///
/// The axiom verifiers evaluate invariance under this single witness per
/// partition pair; since one isomorphism relates the pair exactly when the
/// signatures match, a counterexample under the witness refutes invariance
/// and a pass certifies it for measures that cannot distinguish
/// equal-signature partitions.
///
/// # Errors
///
/// [`Error::SignatureMismatch`] if the signatures (or universe sizes)
/// differ.
pub fn matching_bijection(p: &Partition, s: &Partition) -> Result<ElementMap> {
    if !exists_isomorphism(p, s) {
        return Err(Error::SignatureMismatch);
    }
    let order = |partition: &Partition| {
        let mut idx: Vec<usize> = (0..partition.num_blocks()).collect();
        idx.sort_by_key(|&b| {
            let block = &partition.blocks()[b];
            (block.len(), block.min().expect("blocks are nonempty"))
        });
        idx
    };
    let mut map = vec![0; p.universe().len()];
    for (&bp, &bs) in order(p).iter().zip(order(s).iter()) {
        for (i, j) in p.blocks()[bp].iter().zip(s.blocks()[bs].iter()) {
            map[i] = j;
        }
    }
    ElementMap::from_fn(p.universe(), s.universe(), |i| map[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    #[test]
    fn construction_and_validation() {
        let u = Universe::new(["x", "y"]).unwrap();
        let v = Universe::new(["p", "q", "r"]).unwrap();
        let f = ElementMap::from_pairs(&u, &v, [("x", "q"), ("y", "q")]).unwrap();
        assert_eq!(f.apply(0), 1);
        assert!(!f.is_injective());

        assert!(matches!(
            ElementMap::from_pairs(&u, &v, [("x", "q")]),
            Err(Error::MapNotTotal { missing }) if missing == "y"
        ));
        assert!(matches!(
            ElementMap::from_pairs(&u, &v, [("x", "q"), ("x", "r"), ("y", "p")]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            ElementMap::from_pairs(&u, &v, [("z", "q")]),
            Err(Error::UnknownLabel(_))
        ));
        assert!(ElementMap::from_fn(&u, &v, |_| 9).is_err());
    }

    #[test]
    fn identity_is_isomorphism_on_same_partition() {
        let p = Partition::parse("a1|a2,a3|a4,a5").unwrap();
        let id = ElementMap::identity(p.universe());
        assert!(id.is_isomorphism(&p, &p).unwrap());
        assert!(id.is_homomorphism(&p, &p).unwrap());
        assert!(!id.is_strict_monomorphism(&p, &p).unwrap());
    }

    #[test]
    fn identity_into_coarser_is_strict_monomorphism() {
        // The identity embeds the finer partition into the coarser one;
        // the image of {a2,a3} is properly inside {a1,a2,a3}.
        let p = Partition::parse("a1|a2,a3|a4,a5").unwrap();
        let s = Partition::parse_over(p.universe(), "a1,a2,a3|a4,a5").unwrap();
        let id = ElementMap::identity(p.universe());
        assert!(id.is_homomorphism(&p, &s).unwrap());
        assert!(id.is_monomorphism(&p, &s).unwrap());
        assert!(id.is_strict_monomorphism(&p, &s).unwrap());
        assert!(!id.is_isomorphism(&p, &s).unwrap());
        // Not a homomorphism in the reverse direction.
        assert!(!id.is_homomorphism(&s, &p).unwrap());
    }

    #[test]
    fn crossing_bijection_is_isomorphism() {
        let u = Universe::new(["1", "2", "3", "4"]).unwrap();
        let p = Partition::parse_over(&u, "1,2|3,4").unwrap();
        let s = Partition::parse_over(&u, "1,3|2,4").unwrap();
        let f =
            ElementMap::from_pairs(&u, &u, [("1", "1"), ("2", "3"), ("3", "2"), ("4", "4")])
                .unwrap();
        assert!(f.is_isomorphism(&p, &s).unwrap());
        assert_eq!(f.image_partition(&p).unwrap(), s);
    }

    #[test]
    fn strict_monomorphism_image_refines_strictly() {
        let p = Partition::parse("a1|a2,a3|a4,a5").unwrap();
        let s = Partition::parse_over(p.universe(), "a1,a2,a3|a4,a5").unwrap();
        let id = ElementMap::identity(p.universe());
        assert!(id.is_strict_monomorphism(&p, &s).unwrap());
        let image = id.image_partition(&p).unwrap();
        assert!(image.strictly_refines(&s).unwrap());
    }

    #[test]
    fn image_subset_remaps_members() {
        let u = Universe::new(["x", "y", "z"]).unwrap();
        let v = Universe::new(["p", "q", "r"]).unwrap();
        let f =
            ElementMap::from_pairs(&u, &v, [("x", "r"), ("y", "p"), ("z", "q")]).unwrap();
        let a = u.subset(["x", "y"]).unwrap();
        assert_eq!(f.image_subset(&a).unwrap().render(), "p,r");
    }

    #[test]
    fn signature_test() {
        let p = Partition::parse("1,2|3,4").unwrap();
        let s = Partition::parse("1,3|2,4").unwrap();
        assert!(exists_isomorphism(&p, &s));

        // Signatures [2,2,1] vs [3,2] do not match.
        let a = Partition::parse("a1|a2,a3|a4,a5").unwrap();
        let b = Partition::parse("a1,a2,a3|a4,a5").unwrap();
        assert!(!exists_isomorphism(&a, &b));
        assert!(matches!(
            matching_bijection(&a, &b),
            Err(Error::SignatureMismatch)
        ));
    }

    #[test]
    fn matching_bijection_is_isomorphism() {
        let u = Universe::numbered(5).unwrap();
        let p = Partition::parse_over(&u, "a1|a2,a3|a4,a5").unwrap();
        let s = Partition::parse_over(&u, "a2|a1,a3|a4,a5").unwrap();
        let f = matching_bijection(&p, &s).unwrap();
        assert!(f.is_isomorphism(&p, &s).unwrap());
        assert_eq!(f.image_partition(&p).unwrap(), s);
    }

    #[test]
    fn isomorphism_classes_at_n4() {
        // The 15 partitions of a 4-element universe fall into 5 signature
        // classes: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
        let u = Universe::numbered(4).unwrap();
        let all: Vec<Partition> = crate::partition::enumerate_partitions(&u)
            .unwrap()
            .collect();
        let mut signatures: Vec<Vec<usize>> =
            all.iter().map(Partition::block_size_multiset).collect();
        signatures.sort();
        signatures.dedup();
        assert_eq!(signatures.len(), 5);
    }
}
