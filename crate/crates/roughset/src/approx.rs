//! Lower/upper approximation of subsets and the classical
//! accuracy/roughness measures.
//!
//! Given a partition π of U and a subset A ⊆ U, the **lower approximation**
//! π⁎(A) is the union of the blocks contained in A — the greatest definable
//! set inside A — and the **upper approximation** π*(A) is the union of the
//! blocks meeting A — the least definable set containing A. Their
//! difference is the **boundary region**; A is **exact** (definable) when
//! the boundary is empty, i.e. when A is a union of blocks. The empty set
//! is exact: it is the empty union of blocks.
//!
//! **Accuracy** is α(π, A) = |π⁎(A)| / |π*(A)|, with α(π, ∅) = 1 by
//! convention (both approximations are empty), and **roughness** is its
//! complement β(π, A) = 1 − α(π, A). Both are ratios of small integers, so
//! alongside the floating-point values this module exposes them as exact
//! integer pairs, making equality tests on them exact.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::universe::Subset;

/// Lower and upper approximations of a subset, with the derived boundary
/// and exactness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationResult {
    /// Union of the blocks contained in A: the greatest definable subset
    /// of A.
    pub lower: Subset,
    /// Union of the blocks meeting A: the least definable superset of A.
    pub upper: Subset,
    /// `upper \ lower`; empty exactly when A is definable.
    pub boundary: Subset,
    /// Whether A is a (possibly empty) union of blocks.
    pub exact: bool,
}

/// Computes lower and upper approximations of `a` under `p`.
///
/// The result satisfies `lower ⊆ a ⊆ upper`.
///
/// # Errors
///
/// [`Error::UniverseMismatch`] if `p` and `a` are over different universes.
///
/// # Examples
///
/// ```
/// use roughset::{approximate, Partition, Subset};
///
/// let p = Partition::parse("a1|a2,a3|a4,a5").unwrap();
/// let a = Subset::parse(p.universe(), "a1,a2,a3,a4").unwrap();
/// let r = approximate(&p, &a).unwrap();
/// assert_eq!(r.lower.render(), "a1,a2,a3");
/// assert_eq!(r.upper.render(), "a1,a2,a3,a4,a5");
/// assert!(!r.exact);
/// ```
pub fn approximate(p: &Partition, a: &Subset) -> Result<ApproximationResult> {
    if p.universe() != a.universe() {
        return Err(Error::UniverseMismatch);
    }
    let mut lower = p.universe().empty_subset();
    let mut upper = p.universe().empty_subset();
    for block in p.blocks() {
        if block.is_subset(a.bits()) {
            lower = Subset::from_bits(
                p.universe().clone(),
                lower.bits().union(block),
            );
        }
        if !block.is_disjoint(a.bits()) {
            upper = Subset::from_bits(
                p.universe().clone(),
                upper.bits().union(block),
            );
        }
    }
    let boundary = upper.difference(&lower)?;
    let exact = boundary.is_empty();
    Ok(ApproximationResult {
        lower,
        upper,
        boundary,
        exact,
    })
}

/// Whether `a` is exact under `p`: a (possibly empty) union of blocks.
///
/// # Errors
///
/// [`Error::UniverseMismatch`] if `p` and `a` are over different universes.
pub fn is_exact(p: &Partition, a: &Subset) -> Result<bool> {
    if p.universe() != a.universe() {
        return Err(Error::UniverseMismatch);
    }
    // A is a union of blocks iff every block meeting A is inside A.
    Ok(p.blocks()
        .iter()
        .all(|block| block.is_disjoint(a.bits()) || block.is_subset(a.bits())))
}

/// Accuracy as the exact integer pair (|lower|, |upper|).
///
/// For A = ∅ both cardinalities are zero and the conventional value is 1,
/// rendered as the pair (1, 1).
///
/// # Errors
///
/// [`Error::UniverseMismatch`] if `p` and `a` are over different universes.
pub fn accuracy_ratio(p: &Partition, a: &Subset) -> Result<(u64, u64)> {
    let r = approximate(p, a)?;
    if r.upper.is_empty() {
        return Ok((1, 1));
    }
    Ok((r.lower.len() as u64, r.upper.len() as u64))
}

/// Roughness as the exact integer pair (|upper| − |lower|, |upper|).
///
/// For A = ∅ the conventional value is 0, rendered as the pair (0, 1).
///
/// # Errors
///
/// [`Error::UniverseMismatch`] if `p` and `a` are over different universes.
pub fn roughness_ratio(p: &Partition, a: &Subset) -> Result<(u64, u64)> {
    let r = approximate(p, a)?;
    if r.upper.is_empty() {
        return Ok((0, 1));
    }
    Ok((
        (r.upper.len() - r.lower.len()) as u64,
        r.upper.len() as u64,
    ))
}

/// Accuracy α(π, A) = |π⁎(A)| / |π*(A)| ∈ [0, 1], with α(π, ∅) = 1.
///
/// # Errors
///
/// [`Error::UniverseMismatch`] if `p` and `a` are over different universes.
///
/// # Examples
///
/// ```
/// use roughset::{pawlak_accuracy, pawlak_roughness, Partition, Subset};
///
/// let p = Partition::parse("a1|a2,a3|a4,a5").unwrap();
/// let a = Subset::parse(p.universe(), "a1,a2,a3,a4").unwrap();
/// assert_eq!(pawlak_accuracy(&p, &a).unwrap(), 0.6);
/// assert_eq!(pawlak_roughness(&p, &a).unwrap(), 0.4);
/// ```
pub fn pawlak_accuracy(p: &Partition, a: &Subset) -> Result<f64> {
    let (num, den) = accuracy_ratio(p, a)?;
    Ok(num as f64 / den as f64)
}

/// Roughness β(π, A) = 1 − α(π, A) ∈ [0, 1].
///
/// Zero exactly on exact sets; one exactly when the lower approximation is
/// empty while the upper is not.
///
/// # Errors
///
/// [`Error::UniverseMismatch`] if `p` and `a` are over different universes.
pub fn pawlak_roughness(p: &Partition, a: &Subset) -> Result<f64> {
    let (num, den) = roughness_ratio(p, a)?;
    Ok(num as f64 / den as f64)
}
