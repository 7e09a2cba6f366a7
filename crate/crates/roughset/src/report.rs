//! Verification report types and the fixed numeric rendering used in all
//! machine-readable output.
//!
//! Reports serialize to JSON with every real number rendered by
//! [`format_significant`] to six significant digits. Fixed-width strings
//! rather than raw floats keep golden-file tests byte-stable across
//! platforms and serializer versions.
//!
//! Counterexample and violation lists are truncated at
//! [`MAX_COUNTEREXAMPLES`] entries per axiom (or per violation kind) to
//! keep reports readable; pass flags are always computed over the full
//! search space before truncation.

use std::collections::BTreeMap;

use serde::Serialize;

/// Cap on recorded counterexamples per axiom and violations per kind.
pub const MAX_COUNTEREXAMPLES: usize = 32;

/// Formats `v` with the given number of significant digits in plain
/// decimal notation (no exponent).
///
/// The number of decimal places is `digits − 1 − floor(log10 |v|)`,
/// clamped to be nonnegative, so magnitudes ≥ 10^digits print with no
/// fractional part. Zero prints as `0.00000` (for six digits);
/// non-finite values print via the standard formatter.
///
/// # Examples
///
/// ```
/// use roughset::report::format_significant;
///
/// assert_eq!(format_significant(0.6, 6), "0.600000");
/// assert_eq!(format_significant(46.43856189774724, 6), "46.4386");
/// assert_eq!(format_significant(25.0, 6), "25.0000");
/// ```
pub fn format_significant(v: f64, digits: u32) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return format!("{:.*}", digits as usize - 1, 0.0);
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

/// Renders an exact nonnegative rational as `num/den`.
pub fn format_ratio((num, den): (u64, u64)) -> String {
    format!("{num}/{den}")
}

/// Outcome of checking a partition measure against its two defining
/// conditions (strict monotonicity under strict coarsening, invariance
/// under isomorphism) plus the derived endpoint bounds.
#[derive(Clone, Debug, Serialize)]
pub struct MeasureReport {
    /// Name of the measure under test.
    pub measure: String,
    /// Universe size the check ran at.
    pub n: usize,
    /// Whether every condition held over the whole space.
    pub pass: bool,
    /// Recorded violations, truncated per kind.
    pub violations: Vec<Violation>,
}

/// One violation found by the partition-measure verifier.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    /// Which condition was violated.
    pub kind: String,
    /// The (finer) partition involved.
    pub partition_a: String,
    /// The second partition, for pairwise conditions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition_b: Option<String>,
    /// Named values documenting the violation, rendered to six significant
    /// digits.
    pub values: BTreeMap<String, String>,
}

/// Outcome of checking a roughness measure against an axiom system or a
/// derived-property suite.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    /// Name of the measure under test.
    pub measure: String,
    /// Universe size the check ran at.
    pub n: usize,
    /// Per-axiom outcomes, in the order the axioms are defined.
    pub axioms: Vec<AxiomCheck>,
    /// Wall-clock duration of the whole verification run.
    pub elapsed_ms: u64,
}

impl AxiomReport {
    /// Whether every axiom passed.
    pub fn pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }
}

/// Outcome for a single axiom.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    /// Stable identifier of the axiom, e.g. `zero-iff-exact`.
    pub id: String,
    /// Whether the axiom held over the whole space.
    pub pass: bool,
    /// Recorded counterexamples, truncated.
    pub counterexamples: Vec<Counterexample>,
}

/// One counterexample to an axiom: the partition(s) and subset(s) it
/// occurred at, with the relevant values.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    /// The partition involved (the finer one, for pairwise axioms).
    pub partition: String,
    /// The second partition, for pairwise axioms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition_b: Option<String>,
    /// The subset involved, if the axiom quantifies over subsets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<String>,
    /// The second subset, for axioms relating two subsets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset_b: Option<String>,
    /// Named values documenting the counterexample, rendered to six
    /// significant digits.
    pub values: BTreeMap<String, String>,
}

impl Counterexample {
    /// A counterexample mentioning one partition only.
    pub fn at_partition(partition: &crate::partition::Partition) -> Counterexample {
        Counterexample {
            partition: partition.render(),
            partition_b: None,
            subset: None,
            subset_b: None,
            values: BTreeMap::new(),
        }
    }

    /// Adds the second partition.
    pub fn with_partition_b(mut self, p: &crate::partition::Partition) -> Counterexample {
        self.partition_b = Some(p.render());
        self
    }

    /// Adds the subset.
    pub fn with_subset(mut self, a: &crate::universe::Subset) -> Counterexample {
        self.subset = Some(a.render());
        self
    }

    /// Adds the second subset.
    pub fn with_subset_b(mut self, a: &crate::universe::Subset) -> Counterexample {
        self.subset_b = Some(a.render());
        self
    }

    /// Adds a named value, rendered to six significant digits.
    pub fn with_value(mut self, key: &str, v: f64) -> Counterexample {
        self.values.insert(key.to_string(), format_significant(v, 6));
        self
    }
}
