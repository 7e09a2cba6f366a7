//! Roughness measures, the axiom systems they are checked against, and the
//! strong Pawlak composition that manufactures them from partition
//! measures.
//!
//! A **roughness measure** assigns every (partition, subset) pair a
//! nonnegative real quantifying how inexactly the subset is captured by
//! the partition's blocks. Two axiom systems are implemented, each
//! checkable exhaustively over a small universe:
//!
//! **Strong axioms** ([`verify_roughness_axioms`]):
//!
//! 1. `zero-iff-exact` — β(π, A) = 0 exactly when A is definable in π;
//! 2. `strict-order-monotonicity` — whenever π strictly refines σ, the
//!    profile β(π, ·) is pointwise ≤ β(σ, ·) and strictly below it on at
//!    least one subset (refining a partition never worsens, and somewhere
//!    strictly improves, the description of a set);
//! 3. `relabeling-invariance` — β(π, A) = β(σ, f(A)) whenever f is a
//!    partition isomorphism from π to σ (the value depends only on
//!    structure, never on element names).
//!
//! **Weak axioms** ([`verify_weak_roughness_axioms`]) replace condition 2
//! by plain pointwise monotonicity along refinement (`order-monotonicity`)
//! and add `vanishes-only-on-discrete`: the profile β(π, ·) is identically
//! zero exactly when π is the all-singletons partition. Every measure
//! satisfying the strong axioms satisfies the weak ones.
//!
//! The classical Pawlak roughness β_P = 1 − |π⁎(A)|/|π*(A)| satisfies both
//! systems, but it is insensitive to *where* between the extremes a
//! partition sits: many partitions share the same β_P profile. The
//! **strong Pawlak composition** [`StrongPawlak`] repairs this by scaling
//! with any partition measure h (see [`crate::measure`]):
//!
//! ```text
//! β[h](π, A) = β_P(π, A) · h(π) / h(π̌),
//! ```
//!
//! where π̌ is the one-block partition, so h(π̌) = `max_on` normalizes the
//! scale factor into (0, 1]. Every such composition satisfies both axiom
//! systems, and [`check_propositions`] verifies a suite of eight derived
//! properties (range bounds, extreme-value characterizations,
//! intersection/union bounds, strict behavior under coarsening and under
//! structure-preserving embeddings) exhaustively.
//!
//! Seven measures are registered by name ([`named_measures`],
//! [`roughness_by_name`]): `beta_P`, the exactness `indicator`, and the
//! five compositions `beta_X` (graph-connectivity), `beta_L`
//! (granulation), `beta_E` (co-entropy), `beta_Eprime` (pseudo
//! co-entropy), and `beta_CG` (combination granulation).

use std::sync::Arc;
use std::time::Instant;

use crate::approx::{approximate, is_exact, pawlak_roughness};
use crate::error::{Error, Result};
use crate::measure::{measure_by_name, PartitionMeasure};
use crate::morphism::matching_bijection;
use crate::partition::{enumerate_partitions, Partition};
use crate::report::{AxiomCheck, AxiomReport, Counterexample, MAX_COUNTEREXAMPLES};
use crate::universe::{Subset, Universe};

/// A valuation of (partition, subset) pairs, intended to satisfy one of
/// the module-level axiom systems.
///
/// The contract is *intended*, not assumed: the verifiers in this module
/// check it exhaustively and report violations.
pub trait RoughnessMeasure: Send + Sync {
    /// Registry name of the measure.
    fn name(&self) -> &str;

    /// Value of the measure on a subset under a partition.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if `p` and `a` disagree, or any error of
    /// an underlying partition measure.
    fn eval(&self, p: &Partition, a: &Subset) -> Result<f64>;
}

/// Classical Pawlak roughness β_P(π, A) = 1 − |π⁎(A)|/|π*(A)|, with
/// β_P(π, ∅) = 0 by convention.
///
/// Satisfies both axiom systems, but collapses structurally different
/// partitions: every partition in which A is definable gets β_P = 0, no
/// matter how coarse.
#[derive(Clone, Copy, Debug, Default)]
pub struct PawlakRoughness;

impl RoughnessMeasure for PawlakRoughness {
    fn name(&self) -> &str {
        "beta_P"
    }

    fn eval(&self, p: &Partition, a: &Subset) -> Result<f64> {
        pawlak_roughness(p, a)
    }
}

/// The 0/1 exactness indicator: 0 if A is definable in π, 1 otherwise.
///
/// The coarsest-possible roughness measure. It satisfies both axiom
/// systems (the strict witness for condition 2 is any block of the finer
/// partition sitting strictly inside a block of the coarser one), which
/// makes it a useful sanity check: the axioms admit genuinely crude
/// measures, and the strong Pawlak compositions are strictly more
/// informative.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactnessIndicator;

impl RoughnessMeasure for ExactnessIndicator {
    fn name(&self) -> &str {
        "indicator"
    }

    fn eval(&self, p: &Partition, a: &Subset) -> Result<f64> {
        Ok(if is_exact(p, a)? { 0.0 } else { 1.0 })
    }
}

/// The strong Pawlak composition β[h](π, A) = β_P(π, A) · h(π) / h(π̌)
/// of classical roughness with a partition measure h.
///
/// The scale factor h(π)/h(π̌) lies in (0, 1] and strictly increases under
/// coarsening, so the composition separates partitions that β_P conflates
/// while keeping β_P's zeros (and hence the `zero-iff-exact` axiom).
pub struct StrongPawlak {
    name: String,
    h: Box<dyn PartitionMeasure>,
}

/// The factors of one strong-Pawlak evaluation, exposed because the
/// decomposition `value = beta_p · h_partition / h_trivial` is often more
/// informative than the value alone.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StrongPawlakParts {
    /// The composed roughness value.
    pub value: f64,
    /// Classical Pawlak roughness β_P(π, A).
    pub beta_p: f64,
    /// The partition measure's value h(π).
    pub h_partition: f64,
    /// The normalizer h(π̌): the measure's value on the one-block
    /// partition.
    pub h_trivial: f64,
}

impl StrongPawlak {
    /// Composes classical roughness with `h` under the given registry
    /// name.
    pub fn new(name: impl Into<String>, h: Box<dyn PartitionMeasure>) -> StrongPawlak {
        StrongPawlak {
            name: name.into(),
            h,
        }
    }

    /// The underlying partition measure.
    pub fn measure(&self) -> &dyn PartitionMeasure {
        self.h.as_ref()
    }

    /// Evaluates the composition and returns all three factors.
    ///
    /// # Errors
    ///
    /// [`Error::UniverseMismatch`] if `p` and `a` disagree;
    /// [`Error::DegenerateNormalizer`] if h vanishes on the one-block
    /// partition (e.g. co-entropy on a one-element universe); any
    /// evaluation error of h itself.
    pub fn decompose(&self, p: &Partition, a: &Subset) -> Result<StrongPawlakParts> {
        let beta_p = pawlak_roughness(p, a)?;
        let h_trivial = self.h.max_on(p.universe())?;
        if h_trivial <= 0.0 {
            return Err(Error::DegenerateNormalizer {
                measure: self.h.name().to_string(),
            });
        }
        let h_partition = self.h.eval(p)?;
        Ok(StrongPawlakParts {
            value: beta_p * h_partition / h_trivial,
            beta_p,
            h_partition,
            h_trivial,
        })
    }
}

impl RoughnessMeasure for StrongPawlak {
    fn name(&self) -> &str {
        &self.name
    }

    fn eval(&self, p: &Partition, a: &Subset) -> Result<f64> {
        Ok(self.decompose(p, a)?.value)
    }
}

/// Composes classical roughness with an arbitrary partition measure,
/// naming the result `beta[<measure name>]`.
///
/// The five canonical compositions have fixed short names; use
/// [`strong_instance_by_name`] or [`roughness_by_name`] for those.
pub fn strong_pawlak(h: Box<dyn PartitionMeasure>) -> StrongPawlak {
    let name = format!("beta[{}]", h.name());
    StrongPawlak::new(name, h)
}

/// Looks up one of the five canonical strong compositions by its registry
/// name, with access to the decomposition.
///
/// # Errors
///
/// [`Error::UnknownMeasure`] for any other name (including `beta_P` and
/// `indicator`, which are not compositions).
pub fn strong_instance_by_name(name: &str) -> Result<StrongPawlak> {
    let h = match name {
        "beta_X" => measure_by_name("graph-connectivity")?,
        "beta_L" => measure_by_name("granulation")?,
        "beta_E" => measure_by_name("co-entropy")?,
        "beta_Eprime" => measure_by_name("pseudo-co-entropy")?,
        "beta_CG" => measure_by_name("combination-granulation")?,
        other => return Err(Error::UnknownMeasure(other.to_string())),
    };
    Ok(StrongPawlak::new(name, h))
}

/// The seven registered roughness measures: classical `beta_P`, the
/// exactness `indicator`, and the five canonical strong compositions.
pub fn named_measures() -> Vec<Box<dyn RoughnessMeasure>> {
    vec![
        Box::new(PawlakRoughness),
        Box::new(ExactnessIndicator),
        Box::new(strong_instance_by_name("beta_X").expect("registered")),
        Box::new(strong_instance_by_name("beta_L").expect("registered")),
        Box::new(strong_instance_by_name("beta_E").expect("registered")),
        Box::new(strong_instance_by_name("beta_Eprime").expect("registered")),
        Box::new(strong_instance_by_name("beta_CG").expect("registered")),
    ]
}

/// Looks up any registered roughness measure by name.
///
/// # Errors
///
/// [`Error::UnknownMeasure`] for unregistered names.
pub fn roughness_by_name(name: &str) -> Result<Box<dyn RoughnessMeasure>> {
    match name {
        "beta_P" => Ok(Box::new(PawlakRoughness)),
        "indicator" => Ok(Box::new(ExactnessIndicator)),
        other => Ok(Box::new(strong_instance_by_name(other)?)),
    }
}

/// Every partition of the universe crossed with every subset, with the
/// measure evaluated on the full grid. Subset index equals the subset's
/// bitmask (element i ↔ bit i), so unions and intersections of subsets
/// are index operations.
struct EvalSpace {
    partitions: Vec<Partition>,
    subsets: Vec<Subset>,
    /// values[p][s]: measure value on (partitions[p], subsets[s]).
    values: Vec<Vec<f64>>,
    /// exact[p][s]: whether subsets[s] is definable in partitions[p].
    exact: Vec<Vec<bool>>,
}

fn subset_mask(a: &Subset) -> usize {
    a.bits().iter().fold(0usize, |m, i| m | (1 << i))
}

impl EvalSpace {
    fn build(beta: &dyn RoughnessMeasure, u: &Arc<Universe>) -> Result<EvalSpace> {
        let partitions: Vec<Partition> = enumerate_partitions(u)?.collect();
        let subsets = u.all_subsets()?;
        let mut values = Vec::with_capacity(partitions.len());
        let mut exact = Vec::with_capacity(partitions.len());
        for p in &partitions {
            let mut row_v = Vec::with_capacity(subsets.len());
            let mut row_e = Vec::with_capacity(subsets.len());
            for a in &subsets {
                row_v.push(beta.eval(p, a)?);
                row_e.push(is_exact(p, a)?);
            }
            values.push(row_v);
            exact.push(row_e);
        }
        Ok(EvalSpace {
            partitions,
            subsets,
            values,
            exact,
        })
    }

    /// Indices of all ordered pairs (i, k) with partitions[i] strictly
    /// finer than partitions[k].
    fn strict_pairs(&self) -> Result<Vec<(usize, usize)>> {
        let mut pairs = Vec::new();
        for (i, p) in self.partitions.iter().enumerate() {
            for (k, s) in self.partitions.iter().enumerate() {
                if i != k && p.strictly_refines(s)? {
                    pairs.push((i, k));
                }
            }
        }
        Ok(pairs)
    }
}

/// Accumulates one axiom's verdict: the pass flag covers the full space,
/// the recorded counterexamples are truncated.
struct Recorder {
    id: &'static str,
    pass: bool,
    kept: Vec<Counterexample>,
}

impl Recorder {
    fn new(id: &'static str) -> Recorder {
        Recorder {
            id,
            pass: true,
            kept: Vec::new(),
        }
    }

    fn note(&mut self, ce: Counterexample) {
        self.pass = false;
        if self.kept.len() < MAX_COUNTEREXAMPLES {
            self.kept.push(ce);
        }
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck {
            id: self.id.to_string(),
            pass: self.pass,
            counterexamples: self.kept,
        }
    }
}

fn check_zero_iff_exact(space: &EvalSpace, epsilon: f64) -> AxiomCheck {
    let mut rec = Recorder::new("zero-iff-exact");
    for (i, p) in space.partitions.iter().enumerate() {
        for (j, a) in space.subsets.iter().enumerate() {
            let v = space.values[i][j];
            if (v.abs() <= epsilon) != space.exact[i][j] {
                let mut ce = Counterexample::at_partition(p)
                    .with_subset(a)
                    .with_value("beta", v);
                ce.values
                    .insert("exact".to_string(), space.exact[i][j].to_string());
                rec.note(ce);
            }
        }
    }
    rec.finish()
}

/// Checks β(π, ·) ≤ β(σ, ·) pointwise over every strictly comparable pair,
/// and — when `require_strict` — that the inequality is strict on at least
/// one subset of each pair.
fn check_order_monotonicity(
    space: &EvalSpace,
    epsilon: f64,
    id: &'static str,
    require_strict: bool,
) -> Result<AxiomCheck> {
    let mut rec = Recorder::new(id);
    for (i, k) in space.strict_pairs()? {
        let (fine, coarse) = (&space.partitions[i], &space.partitions[k]);
        let mut max_gap = f64::NEG_INFINITY;
        for (j, a) in space.subsets.iter().enumerate() {
            let gap = space.values[k][j] - space.values[i][j];
            max_gap = max_gap.max(gap);
            if gap < -epsilon {
                rec.note(
                    Counterexample::at_partition(fine)
                        .with_partition_b(coarse)
                        .with_subset(a)
                        .with_value("beta_fine", space.values[i][j])
                        .with_value("beta_coarse", space.values[k][j]),
                );
            }
        }
        if require_strict && max_gap <= epsilon {
            rec.note(
                Counterexample::at_partition(fine)
                    .with_partition_b(coarse)
                    .with_value("max_gap", max_gap),
            );
        }
    }
    Ok(rec.finish())
}

fn check_relabeling_invariance(space: &EvalSpace, epsilon: f64) -> Result<AxiomCheck> {
    let mut rec = Recorder::new("relabeling-invariance");
    let signatures: Vec<Vec<usize>> = space
        .partitions
        .iter()
        .map(Partition::block_size_multiset)
        .collect();
    for i in 0..space.partitions.len() {
        for k in i + 1..space.partitions.len() {
            if signatures[i] != signatures[k] {
                continue;
            }
            let f = matching_bijection(&space.partitions[i], &space.partitions[k])?;
            for (j, a) in space.subsets.iter().enumerate() {
                let image = f.image_subset(a)?;
                let m = subset_mask(&image);
                if (space.values[i][j] - space.values[k][m]).abs() > epsilon {
                    rec.note(
                        Counterexample::at_partition(&space.partitions[i])
                            .with_partition_b(&space.partitions[k])
                            .with_subset(a)
                            .with_subset_b(&image)
                            .with_value("beta_a", space.values[i][j])
                            .with_value("beta_b", space.values[k][m]),
                    );
                }
            }
        }
    }
    Ok(rec.finish())
}

fn check_vanishing_profile(space: &EvalSpace, epsilon: f64, id: &'static str) -> AxiomCheck {
    let mut rec = Recorder::new(id);
    for (i, p) in space.partitions.iter().enumerate() {
        let worst = space.values[i]
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .expect("at least one subset");
        let all_zero = worst.1.abs() <= epsilon;
        if all_zero != p.is_discrete() {
            rec.note(
                Counterexample::at_partition(p)
                    .with_subset(&space.subsets[worst.0])
                    .with_value("max_abs_beta", worst.1.abs()),
            );
        }
    }
    rec.finish()
}

/// Exhaustively checks the strong axiom system for `beta` over every
/// partition and every subset of `u`.
///
/// The report carries one [`AxiomCheck`] per axiom, in the order
/// `zero-iff-exact`, `strict-order-monotonicity`, `relabeling-invariance`
/// (isomorphism invariance is exercised through the canonical
/// block-matching bijection of each same-signature pair). Pass flags are
/// computed over the full space; counterexamples are truncated per axiom
/// at [`MAX_COUNTEREXAMPLES`].
///
/// # Errors
///
/// [`Error::UniverseTooLarge`] beyond the enumeration bound, or any
/// evaluation error of `beta` itself.
pub fn verify_roughness_axioms(
    beta: &dyn RoughnessMeasure,
    u: &Arc<Universe>,
    epsilon: f64,
) -> Result<AxiomReport> {
    let start = Instant::now();
    let space = EvalSpace::build(beta, u)?;
    let axioms = vec![
        check_zero_iff_exact(&space, epsilon),
        check_order_monotonicity(&space, epsilon, "strict-order-monotonicity", true)?,
        check_relabeling_invariance(&space, epsilon)?,
    ];
    Ok(AxiomReport {
        measure: beta.name().to_string(),
        n: u.len(),
        axioms,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Exhaustively checks the weak axiom system for `beta` over every
/// partition and every subset of `u`.
///
/// The report carries one [`AxiomCheck`] per axiom, in the order
/// `zero-iff-exact`, `order-monotonicity` (pointwise only — no strict
/// witness required), `relabeling-invariance`,
/// `vanishes-only-on-discrete`.
///
/// # Errors
///
/// As for [`verify_roughness_axioms`].
pub fn verify_weak_roughness_axioms(
    beta: &dyn RoughnessMeasure,
    u: &Arc<Universe>,
    epsilon: f64,
) -> Result<AxiomReport> {
    let start = Instant::now();
    let space = EvalSpace::build(beta, u)?;
    let axioms = vec![
        check_zero_iff_exact(&space, epsilon),
        check_order_monotonicity(&space, epsilon, "order-monotonicity", false)?,
        check_relabeling_invariance(&space, epsilon)?,
        check_vanishing_profile(&space, epsilon, "vanishes-only-on-discrete"),
    ];
    Ok(AxiomReport {
        measure: beta.name().to_string(),
        n: u.len(),
        axioms,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Exhaustively checks eight derived properties of a strong Pawlak
/// composition over every partition and subset of `u`:
///
/// - `unit-interval-bounds` — 0 ≤ β[h](π, A) ≤ 1 everywhere;
/// - `identically-zero-only-on-discrete` — the profile vanishes exactly on
///   the all-singletons partition;
/// - `unit-value-only-on-trivial` — a value of 1 occurs only under the
///   one-block partition;
/// - `trivial-partition-profile` — under the one-block partition the value
///   is 0 on U and 1 on every nonempty proper subset (the empty set is
///   excluded: the β_P(π, ∅) = 0 convention pins its value to 0);
/// - `intersection-bound` — if π⁎(A) = π⁎(B) then
///   β[h](π, A∩B) ≤ min(β[h](π, A), β[h](π, B));
/// - `union-bound` — if π*(A) = π*(B) then
///   β[h](π, A∪B) ≤ min(β[h](π, A), β[h](π, B));
/// - `strict-under-coarsening` — strictly coarsening the partition never
///   lowers any value and strictly raises at least one;
/// - `embedding-monotonicity` — for every strict monomorphism f from π
///   into σ (built as the block-matching bijection from π onto a partition
///   strictly finer than σ), β[h](π, A) ≤ β[h](σ, f(A)) for every A, with
///   a strict gap somewhere.
///
/// # Errors
///
/// As for [`verify_roughness_axioms`].
pub fn check_propositions(
    beta: &StrongPawlak,
    u: &Arc<Universe>,
    epsilon: f64,
) -> Result<AxiomReport> {
    let start = Instant::now();
    let space = EvalSpace::build(beta, u)?;
    let npart = space.partitions.len();
    let nsub = space.subsets.len();

    // Lower/upper approximations as subset masks, for the bound checks.
    let mut lower = vec![vec![0usize; nsub]; npart];
    let mut upper = vec![vec![0usize; nsub]; npart];
    for (i, p) in space.partitions.iter().enumerate() {
        for (j, a) in space.subsets.iter().enumerate() {
            let r = approximate(p, a)?;
            lower[i][j] = subset_mask(&r.lower);
            upper[i][j] = subset_mask(&r.upper);
        }
    }

    let mut bounds = Recorder::new("unit-interval-bounds");
    for (i, p) in space.partitions.iter().enumerate() {
        for (j, a) in space.subsets.iter().enumerate() {
            let v = space.values[i][j];
            if !(-epsilon..=1.0 + epsilon).contains(&v) {
                bounds.note(
                    Counterexample::at_partition(p)
                        .with_subset(a)
                        .with_value("beta", v),
                );
            }
        }
    }

    let zero_profile = check_vanishing_profile(&space, epsilon, "identically-zero-only-on-discrete");

    let mut unit_only_trivial = Recorder::new("unit-value-only-on-trivial");
    for (i, p) in space.partitions.iter().enumerate() {
        if p.is_trivial() {
            continue;
        }
        for (j, a) in space.subsets.iter().enumerate() {
            if space.values[i][j] >= 1.0 - epsilon {
                unit_only_trivial.note(
                    Counterexample::at_partition(p)
                        .with_subset(a)
                        .with_value("beta", space.values[i][j]),
                );
            }
        }
    }

    let mut trivial_profile = Recorder::new("trivial-partition-profile");
    let trivial_idx = space
        .partitions
        .iter()
        .position(Partition::is_trivial)
        .expect("enumeration contains the one-block partition");
    for (j, a) in space.subsets.iter().enumerate() {
        if a.is_empty() {
            continue;
        }
        let v = space.values[trivial_idx][j];
        let expected = if a.is_full() { 0.0 } else { 1.0 };
        if (v - expected).abs() > epsilon {
            trivial_profile.note(
                Counterexample::at_partition(&space.partitions[trivial_idx])
                    .with_subset(a)
                    .with_value("beta", v)
                    .with_value("expected", expected),
            );
        }
    }

    let mut intersection_bound = Recorder::new("intersection-bound");
    let mut union_bound = Recorder::new("union-bound");
    for (i, p) in space.partitions.iter().enumerate() {
        for j in 0..nsub {
            for k in j + 1..nsub {
                let min = space.values[i][j].min(space.values[i][k]);
                if lower[i][j] == lower[i][k] && space.values[i][j & k] > min + epsilon {
                    intersection_bound.note(
                        Counterexample::at_partition(p)
                            .with_subset(&space.subsets[j])
                            .with_subset_b(&space.subsets[k])
                            .with_value("beta_a", space.values[i][j])
                            .with_value("beta_b", space.values[i][k])
                            .with_value("beta_intersection", space.values[i][j & k]),
                    );
                }
                if upper[i][j] == upper[i][k] && space.values[i][j | k] > min + epsilon {
                    union_bound.note(
                        Counterexample::at_partition(p)
                            .with_subset(&space.subsets[j])
                            .with_subset_b(&space.subsets[k])
                            .with_value("beta_a", space.values[i][j])
                            .with_value("beta_b", space.values[i][k])
                            .with_value("beta_union", space.values[i][j | k]),
                    );
                }
            }
        }
    }

    let coarsening =
        check_order_monotonicity(&space, epsilon, "strict-under-coarsening", true)?;

    // Every strict monomorphism built as: a bijection f matching π's blocks
    // onto those of a same-signature partition ρ, followed by strictly
    // coarsening ρ's partition structure to σ. Then f maps each block of π
    // into a block of σ, strictly into at least one.
    let mut embedding = Recorder::new("embedding-monotonicity");
    let signatures: Vec<Vec<usize>> = space
        .partitions
        .iter()
        .map(Partition::block_size_multiset)
        .collect();
    let strict = space.strict_pairs()?;
    for i in 0..npart {
        for r in 0..npart {
            if signatures[i] != signatures[r] {
                continue;
            }
            let f = matching_bijection(&space.partitions[i], &space.partitions[r])?;
            let image_index: Vec<usize> = space
                .subsets
                .iter()
                .map(|a| f.image_subset(a).map(|im| subset_mask(&im)))
                .collect::<Result<_>>()?;
            for &(rr, k) in &strict {
                if rr != r {
                    continue;
                }
                let mut max_gap = f64::NEG_INFINITY;
                for (j, a) in space.subsets.iter().enumerate() {
                    let m = image_index[j];
                    let gap = space.values[k][m] - space.values[i][j];
                    max_gap = max_gap.max(gap);
                    if gap < -epsilon {
                        embedding.note(
                            Counterexample::at_partition(&space.partitions[i])
                                .with_partition_b(&space.partitions[k])
                                .with_subset(a)
                                .with_subset_b(&space.subsets[m])
                                .with_value("beta_source", space.values[i][j])
                                .with_value("beta_target", space.values[k][m]),
                        );
                    }
                }
                if max_gap <= epsilon {
                    embedding.note(
                        Counterexample::at_partition(&space.partitions[i])
                            .with_partition_b(&space.partitions[k])
                            .with_value("max_gap", max_gap),
                    );
                }
            }
        }
    }

    let axioms = vec![
        bounds.finish(),
        zero_profile,
        unit_only_trivial.finish(),
        trivial_profile.finish(),
        intersection_bound.finish(),
        union_bound.finish(),
        coarsening,
        embedding.finish(),
    ];
    Ok(AxiomReport {
        measure: beta.name().to_string(),
        n: u.len(),
        axioms,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
