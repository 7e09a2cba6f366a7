//! Rough-set approximation over finite universes, with axiomatically
//! verified roughness and partition measures.
//!
//! # The model
//!
//! Knowledge about a finite universe U is a partition π of U: elements in
//! the same block are indistinguishable. A subset A ⊆ U is **definable**
//! if it is a union of blocks; every other subset is only bracketed by its
//! **lower approximation** (the largest definable set inside A) and its
//! **upper approximation** (the smallest definable set containing A). The
//! classical Pawlak roughness β_P(π, A) = 1 − |π⁎(A)|/|π*(A)| measures the
//! gap.
//!
//! Partitions are ordered by refinement, and β_P respects that order —
//! but it cannot *separate* partitions: wildly different π share identical
//! β_P profiles. This crate implements the repair: scale β_P by a
//! **partition measure** h — any valuation that grows strictly under
//! coarsening and ignores element names — normalized by its value on the
//! one-block partition:
//!
//! ```text
//! β[h](π, A) = β_P(π, A) · h(π) / h(π̌).
//! ```
//!
//! Five such measures are built in (granulation, co-entropy, pseudo
//! co-entropy, combination granulation, graph connectivity), giving five
//! roughness measures beyond β_P and the 0/1 exactness indicator.
//!
//! None of this is taken on faith. The defining conditions of both
//! families are encoded as executable axiom systems, checked
//! *exhaustively* over every partition and every subset of a small
//! universe: [`verify_partition_measure`] for the measure conditions,
//! [`verify_roughness_axioms`] / [`verify_weak_roughness_axioms`] for the
//! roughness axioms, and [`check_propositions`] for eight derived
//! properties of the compositions. Verifiers return structured,
//! JSON-serializable reports with concrete counterexamples on failure —
//! they are equally useful for validating a new measure and for
//! demonstrating why a broken one is broken.
//!
//! # Quick tour
//!
//! ```
//! use roughset::{approximate, roughness_by_name, Partition, Subset};
//!
//! // Five elements, partitioned by knowledge into three blocks.
//! let p = Partition::parse("a1|a2,a3|a4,a5").unwrap();
//! let a = Subset::parse(p.universe(), "a1,a2,a3,a4").unwrap();
//!
//! // A is not definable: it is bracketed by its approximations.
//! let r = approximate(&p, &a).unwrap();
//! assert_eq!(r.lower.render(), "a1,a2,a3");
//! assert_eq!(r.upper.render(), "a1,a2,a3,a4,a5");
//! assert_eq!(r.boundary.render(), "a4,a5");
//!
//! // Classical roughness 1 − 3/5, and a granulation-scaled refinement.
//! let beta_p = roughness_by_name("beta_P").unwrap();
//! assert!((beta_p.eval(&p, &a).unwrap() - 0.4).abs() < 1e-12);
//! let beta_l = roughness_by_name("beta_L").unwrap();
//! assert!((beta_l.eval(&p, &a).unwrap() - 0.144).abs() < 1e-12);
//! ```
//!
//! Partitions can also be induced from CSV data via [`InformationTable`],
//! and enumerated exhaustively (up to [`MAX_ENUMERATION`] elements) via
//! [`enumerate_partitions`].
//!
//! # Numeric conventions
//!
//! All logarithms are base 2 and 0·log 0 = 0. Accuracy and roughness are
//! exact small-integer ratios and are exposed as such; everything else is
//! f64. Verifiers compare with a caller-supplied tolerance, for which
//! [`DEFAULT_EPSILON`] is the intended value: x and y are "equal" when
//! |x − y| ≤ ε and "strictly less" when y − x > ε.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod approx;
pub mod bitset;
pub mod error;
pub mod measure;
pub mod morphism;
pub mod partition;
pub mod report;
pub mod roughness;
pub mod table;
pub mod universe;

/// Comparison tolerance used by the verifiers unless the caller overrides
/// it: values within `1e-9` of each other count as equal.
pub const DEFAULT_EPSILON: f64 = 1e-9;

pub use approx::{
    accuracy_ratio, approximate, is_exact, pawlak_accuracy, pawlak_roughness, roughness_ratio,
    ApproximationResult,
};
pub use error::{Error, Result};
pub use measure::{
    catalog, co_entropy, combination_granulation, entropy, granulation, graph_connectivity,
    measure_by_name, pseudo_co_entropy, verify_partition_measure, CoEntropy,
    CombinationGranulation, Entropy, Granulation, GraphConnectivity, PartitionMeasure,
    PseudoCoEntropy,
};
pub use morphism::{exists_isomorphism, matching_bijection, ElementMap};
pub use partition::{count_partitions, enumerate_partitions, Partition, Partitions};
pub use report::{
    format_ratio, format_significant, AxiomCheck, AxiomReport, Counterexample, MeasureReport,
    Violation, MAX_COUNTEREXAMPLES,
};
pub use roughness::{
    check_propositions, named_measures, roughness_by_name, strong_instance_by_name, strong_pawlak,
    verify_roughness_axioms, verify_weak_roughness_axioms, ExactnessIndicator, PawlakRoughness,
    RoughnessMeasure, StrongPawlak, StrongPawlakParts,
};
pub use table::InformationTable;
pub use universe::{Subset, Universe, MAX_ENUMERATION};
