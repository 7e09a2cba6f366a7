//! Partition measures: nonnegative valuations of partitions that grow
//! strictly under coarsening and do not distinguish isomorphic partitions.
//!
//! A **partition measure** h on a universe U assigns a nonnegative real to
//! every partition of U such that
//!
//! 1. π < σ implies h(π) < h(σ) (strict monotonicity along the refinement
//!    order), and
//! 2. isomorphic partitions receive equal values.
//!
//! Together these force h(π̂) ≤ h(π) ≤ h(π̌): the all-singletons partition
//! minimizes and the one-block partition maximizes every measure. The
//! one-block value normalizes the strong Pawlak composition (see
//! [`crate::roughness`]), which is why the contract exposes it as
//! [`PartitionMeasure::max_on`].
//!
//! Five concrete measures are provided behind the [`PartitionMeasure`]
//! trait and registered in the [`catalog`]: knowledge [`granulation`],
//! [`co_entropy`], [`pseudo_co_entropy`], [`combination_granulation`], and
//! the graph-connectivity quantity [`graph_connectivity`]. Partition
//! [`entropy`] is exposed alongside them because of the identity
//! H(π) + E(π) = log₂|U|, but it is deliberately **not** in the catalog:
//! entropy strictly *decreases* under coarsening, so it fails condition 1
//! (the verifier demonstrates this).
//!
//! [`verify_partition_measure`] checks conditions 1 and 2 — plus the
//! derived endpoint bounds — exhaustively over every partition of a
//! universe, reporting concrete violations.
//!
//! All logarithms are base 2, and 0·log 0 is taken as 0 throughout.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::report::{format_significant, MeasureReport, Violation, MAX_COUNTEREXAMPLES};
use crate::universe::Universe;

/// A nonnegative valuation of partitions, intended to satisfy the two
/// partition-measure conditions (strict monotonicity under strict
/// coarsening, isomorphism invariance).
///
/// Implementations must depend only on the block-size multiset of the
/// partition — that is what makes isomorphism invariance automatic — and
/// must keep `max_on(u)` exactly equal to `eval` on the one-block
/// partition of `u`, since that value is used as a normalizer.
///
/// The contract is *intended*, not assumed: [`verify_partition_measure`]
/// checks it exhaustively, and implementations that break it (such as
/// [`Entropy`]) are reported rather than rejected up front.
pub trait PartitionMeasure: Send + Sync {
    /// Registry name of the measure.
    fn name(&self) -> &str;

    /// Value of the measure on a partition.
    ///
    /// # Errors
    ///
    /// [`Error::MeasureUndefined`] if the defining formula is undefined at
    /// this universe size.
    fn eval(&self, p: &Partition) -> Result<f64>;

    /// Value on the one-block partition of `u` — the maximum of the
    /// measure, used as the normalizer of the strong Pawlak composition.
    ///
    /// # Errors
    ///
    /// [`Error::MeasureUndefined`] if the measure is undefined at this
    /// universe size.
    fn max_on(&self, u: &Universe) -> Result<f64>;
}

fn block_sizes(p: &Partition) -> impl Iterator<Item = usize> + '_ {
    p.blocks().iter().map(|b| b.len())
}

/// Knowledge granulation: Σᵢ |Cᵢ|², the number of indiscernible ordered
/// pairs. Ranges from n on the all-singletons partition to n² on the
/// one-block partition.
///
/// # Examples
///
/// ```
/// use roughset::{granulation, Partition};
///
/// let p = Partition::parse("a1|a2,a3|a4,a5").unwrap();
/// assert_eq!(granulation(&p), 9.0);
/// ```
pub fn granulation(p: &Partition) -> f64 {
    block_sizes(p).map(|k| (k * k) as f64).sum()
}

/// Co-entropy: E(π) = (1/|U|) Σᵢ |Cᵢ| log₂|Cᵢ|.
///
/// Zero on the all-singletons partition, log₂|U| on the one-block
/// partition, and complementary to [`entropy`]:
/// H(π) + E(π) = log₂|U| for every π.
///
/// Each term is evaluated as (|Cᵢ|/|U|) log₂|Cᵢ|, so on the one-block
/// partition the ratio is exactly 1 and the value is bit-for-bit the
/// normalizer log₂|U|.
pub fn co_entropy(p: &Partition) -> f64 {
    let n = p.universe().len() as f64;
    block_sizes(p)
        .map(|k| k as f64 / n * (k as f64).log2())
        .sum()
}

/// Partition entropy: H(π) = −Σᵢ (|Cᵢ|/|U|) log₂(|Cᵢ|/|U|).
///
/// Log₂|U| on the all-singletons partition, zero on the one-block
/// partition. Entropy strictly decreases under coarsening, so — unlike
/// [`co_entropy`] — it is **not** a partition measure and is excluded from
/// the [`catalog`].
pub fn entropy(p: &Partition) -> f64 {
    let n = p.universe().len() as f64;
    -block_sizes(p)
        .map(|k| {
            let q = k as f64 / n;
            q * q.log2()
        })
        .sum::<f64>()
}

/// Pseudo co-entropy: E′(π) = (1/|U|) Σᵢ |Cᵢ|² log₂|Cᵢ|.
///
/// Zero on the all-singletons partition, |U| log₂|U| on the one-block
/// partition.
///
/// Each term is evaluated as |Cᵢ| (|Cᵢ|/|U|) log₂|Cᵢ|, so on the
/// one-block partition the ratio is exactly 1 and the value is
/// bit-for-bit the normalizer |U| log₂|U|.
pub fn pseudo_co_entropy(p: &Partition) -> f64 {
    let n = p.universe().len() as f64;
    block_sizes(p)
        .map(|k| k as f64 * (k as f64 / n) * (k as f64).log2())
        .sum()
}

/// Combination granulation:
/// CG(π) = Σᵢ (|Cᵢ|²/|U|²) · ((|Cᵢ|−1)/(|U|−1)) — the probability that a
/// uniformly random ordered pair of distinct elements is indiscernible,
/// weighted by block membership. Zero on the all-singletons partition, one
/// on the one-block partition.
///
/// # Errors
///
/// [`Error::MeasureUndefined`] on a one-element universe (the |U|−1
/// divisor vanishes).
pub fn combination_granulation(p: &Partition) -> Result<f64> {
    let n = p.universe().len();
    if n < 2 {
        return Err(Error::MeasureUndefined {
            measure: CombinationGranulation.name().to_string(),
            size: n,
        });
    }
    let nf = n as f64;
    Ok(block_sizes(p)
        .map(|k| {
            let kf = k as f64;
            (kf * kf) / (nf * nf) * ((kf - 1.0) / (nf - 1.0))
        })
        .sum())
}

/// Connectivity of the indiscernibility graph, con(G(π)).
///
/// G(π) is the directed graph on U whose edges are exactly the
/// indiscernible ordered pairs (loops included). The description length of
/// a graph over a fixed vertex set is I(G) = −Σ_v log₂ p_v, where p_v is
/// the fraction of vertices whose row in the binary vertex×edge incidence
/// matrix (entry 1 iff the vertex is an endpoint of the edge) equals v's
/// row. With G^(v) the subgraph keeping all vertices but only the edges
/// leaving v,
///
/// ```text
/// con(G(π)) = Σ_v I(G^(v)) − I(G(π)).
/// ```
///
/// For block sizes nᵢ this reduces in closed form: in G(π) all incidence
/// rows are distinct, so I(G(π)) = n log₂ n; in G^(v) with v in a block of
/// size nᵢ, v's row and the single-edge rows of its nᵢ−1 block-mates are
/// pairwise distinct while the n−nᵢ outside vertices share the all-zero
/// row, so I(G^(v)) = n log₂ n − (n−nᵢ) log₂(n−nᵢ). Summing,
///
/// ```text
/// con(G(π)) = n(n−1) log₂ n − Σᵢ nᵢ (n−nᵢ) log₂(n−nᵢ),
/// ```
///
/// which this function evaluates (the grouping keeps the one-block value —
/// where the sum vanishes — bit-exactly equal to n(n−1) log₂ n). The
/// closed form is validated against a literal brute-force incidence-matrix
/// implementation in the integration tests.
///
/// Other graph encodings (undirected or loop-free edges, adjacency rather
/// than incidence rows) produce different values for the same partition;
/// this crate pins the construction above and relies on its two
/// contract-relevant properties: the one-block endpoint n(n−1) log₂ n and
/// strict monotonicity under block merges for n ≥ 3. At n = 2 the quantity
/// degenerates to the constant 2 on both partitions, so there — and only
/// there — it fails the strict-monotonicity condition; the verifier
/// reports this honestly.
///
/// # Errors
///
/// [`Error::MeasureUndefined`] on a one-element universe (the value and
/// its normalizer collapse to zero).
pub fn graph_connectivity(p: &Partition) -> Result<f64> {
    let n = p.universe().len();
    if n < 2 {
        return Err(Error::MeasureUndefined {
            measure: GraphConnectivity.name().to_string(),
            size: n,
        });
    }
    let base = (n * (n - 1)) as f64 * (n as f64).log2();
    let correction: f64 = block_sizes(p)
        .map(|k| {
            let rest = n - k;
            if rest == 0 {
                0.0
            } else {
                (k * rest) as f64 * (rest as f64).log2()
            }
        })
        .sum();
    Ok(base - correction)
}

macro_rules! measure_struct {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, Default)]
        pub struct $name;
    };
}

measure_struct! {
    /// [`granulation`] as a [`PartitionMeasure`]; `max_on` is |U|².
    Granulation
}

measure_struct! {
    /// [`co_entropy`] as a [`PartitionMeasure`]; `max_on` is log₂|U|.
    CoEntropy
}

measure_struct! {
    /// [`pseudo_co_entropy`] as a [`PartitionMeasure`]; `max_on` is
    /// |U| log₂|U|.
    PseudoCoEntropy
}

measure_struct! {
    /// [`combination_granulation`] as a [`PartitionMeasure`]; `max_on` is 1.
    CombinationGranulation
}

measure_struct! {
    /// [`graph_connectivity`] as a [`PartitionMeasure`]; `max_on` is
    /// n(n−1) log₂ n.
    GraphConnectivity
}

measure_struct! {
    /// [`entropy`] behind the [`PartitionMeasure`] interface, for feeding
    /// it to the verifier. Entropy is anti-monotone under coarsening, so
    /// [`verify_partition_measure`] rejects it — which is the point: it
    /// demonstrates a negative verdict on a natural-looking valuation. Its
    /// `max_on` honors the trait contract (value on the one-block
    /// partition), which for entropy is 0.
    Entropy
}

impl PartitionMeasure for Granulation {
    fn name(&self) -> &str {
        "granulation"
    }

    fn eval(&self, p: &Partition) -> Result<f64> {
        Ok(granulation(p))
    }

    fn max_on(&self, u: &Universe) -> Result<f64> {
        Ok((u.len() * u.len()) as f64)
    }
}

impl PartitionMeasure for CoEntropy {
    fn name(&self) -> &str {
        "co-entropy"
    }

    fn eval(&self, p: &Partition) -> Result<f64> {
        Ok(co_entropy(p))
    }

    fn max_on(&self, u: &Universe) -> Result<f64> {
        Ok((u.len() as f64).log2())
    }
}

impl PartitionMeasure for PseudoCoEntropy {
    fn name(&self) -> &str {
        "pseudo-co-entropy"
    }

    fn eval(&self, p: &Partition) -> Result<f64> {
        Ok(pseudo_co_entropy(p))
    }

    fn max_on(&self, u: &Universe) -> Result<f64> {
        Ok(u.len() as f64 * (u.len() as f64).log2())
    }
}

impl PartitionMeasure for CombinationGranulation {
    fn name(&self) -> &str {
        "combination-granulation"
    }

    fn eval(&self, p: &Partition) -> Result<f64> {
        combination_granulation(p)
    }

    fn max_on(&self, u: &Universe) -> Result<f64> {
        if u.len() < 2 {
            return Err(Error::MeasureUndefined {
                measure: self.name().to_string(),
                size: u.len(),
            });
        }
        Ok(1.0)
    }
}

impl PartitionMeasure for GraphConnectivity {
    fn name(&self) -> &str {
        "graph-connectivity"
    }

    fn eval(&self, p: &Partition) -> Result<f64> {
        graph_connectivity(p)
    }

    fn max_on(&self, u: &Universe) -> Result<f64> {
        let n = u.len();
        if n < 2 {
            return Err(Error::MeasureUndefined {
                measure: self.name().to_string(),
                size: n,
            });
        }
        Ok((n * (n - 1)) as f64 * (n as f64).log2())
    }
}

impl PartitionMeasure for Entropy {
    fn name(&self) -> &str {
        "entropy"
    }

    fn eval(&self, p: &Partition) -> Result<f64> {
        Ok(entropy(p))
    }

    fn max_on(&self, _u: &Universe) -> Result<f64> {
        Ok(0.0)
    }
}

/// The five registered partition measures, in registry-name order.
pub fn catalog() -> Vec<Box<dyn PartitionMeasure>> {
    vec![
        Box::new(CombinationGranulation),
        Box::new(CoEntropy),
        Box::new(Granulation),
        Box::new(GraphConnectivity),
        Box::new(PseudoCoEntropy),
    ]
}

/// Looks up a catalog measure by its registry name.
///
/// # Errors
///
/// [`Error::UnknownMeasure`] for names outside the catalog (including
/// `entropy`, which is exposed as a type but deliberately not registered).
pub fn measure_by_name(name: &str) -> Result<Box<dyn PartitionMeasure>> {
    match name {
        "granulation" => Ok(Box::new(Granulation)),
        "co-entropy" => Ok(Box::new(CoEntropy)),
        "pseudo-co-entropy" => Ok(Box::new(PseudoCoEntropy)),
        "combination-granulation" => Ok(Box::new(CombinationGranulation)),
        "graph-connectivity" => Ok(Box::new(GraphConnectivity)),
        other => Err(Error::UnknownMeasure(other.to_string())),
    }
}

/// Exhaustively checks the partition-measure contract for `h` over every
/// partition of `u`.
///
/// Three kinds of violation are searched for and reported:
///
/// - `strict-monotonicity` — a strictly comparable pair π < σ with
///   h(σ) − h(π) ≤ ε (the coarser partition must measure strictly larger);
/// - `isomorphism-invariance` — a pair with equal block-size signatures
///   (hence related by a block-matching bijection) but |h(π) − h(σ)| > ε;
/// - `endpoint-bounds` — a partition π with h(π) outside
///   [h(π̂) − ε, h(π̌) + ε], the bounds implied by the two conditions.
///
/// The pass flag is computed over the full space; recorded violations are
/// truncated per kind at [`MAX_COUNTEREXAMPLES`].
///
/// # Errors
///
/// [`Error::UniverseTooLarge`] beyond the enumeration bound, or any
/// evaluation error of `h` itself.
pub fn verify_partition_measure(
    h: &dyn PartitionMeasure,
    u: &Arc<Universe>,
    epsilon: f64,
) -> Result<MeasureReport> {
    let partitions: Vec<Partition> = enumerate_partitions(u)?.collect();
    let values: Vec<f64> = partitions
        .iter()
        .map(|p| h.eval(p))
        .collect::<Result<_>>()?;
    let min_value = h.eval(&Partition::discrete(u))?;
    let max_value = h.eval(&Partition::trivial(u))?;

    let mut violations: Vec<Violation> = Vec::new();
    let mut counts: HashMap<&'static str, usize> = HashMap::new();
    let record =
        |violations: &mut Vec<Violation>, counts: &mut HashMap<&'static str, usize>, v: Violation| {
            let kind: &'static str = match v.kind.as_str() {
                "strict-monotonicity" => "strict-monotonicity",
                "isomorphism-invariance" => "isomorphism-invariance",
                _ => "endpoint-bounds",
            };
            let seen = counts.entry(kind).or_insert(0);
            *seen += 1;
            if *seen <= MAX_COUNTEREXAMPLES {
                violations.push(v);
            }
        };

    let mut pass = true;
    for (i, p) in partitions.iter().enumerate() {
        for (j, s) in partitions.iter().enumerate() {
            if i == j {
                continue;
            }
            if p.strictly_refines(s)? && values[j] - values[i] <= epsilon {
                pass = false;
                let mut values_map = std::collections::BTreeMap::new();
                values_map.insert("h_fine".to_string(), format_significant(values[i], 6));
                values_map.insert("h_coarse".to_string(), format_significant(values[j], 6));
                record(
                    &mut violations,
                    &mut counts,
                    Violation {
                        kind: "strict-monotonicity".to_string(),
                        partition_a: p.render(),
                        partition_b: Some(s.render()),
                        values: values_map,
                    },
                );
            }
        }
    }

    let signatures: Vec<Vec<usize>> = partitions
        .iter()
        .map(Partition::block_size_multiset)
        .collect();
    for i in 0..partitions.len() {
        for j in i + 1..partitions.len() {
            if signatures[i] == signatures[j] && (values[i] - values[j]).abs() > epsilon {
                pass = false;
                let mut values_map = std::collections::BTreeMap::new();
                values_map.insert("h_a".to_string(), format_significant(values[i], 6));
                values_map.insert("h_b".to_string(), format_significant(values[j], 6));
                record(
                    &mut violations,
                    &mut counts,
                    Violation {
                        kind: "isomorphism-invariance".to_string(),
                        partition_a: partitions[i].render(),
                        partition_b: Some(partitions[j].render()),
                        values: values_map,
                    },
                );
            }
        }
    }

    for (i, p) in partitions.iter().enumerate() {
        if values[i] < min_value - epsilon || values[i] > max_value + epsilon {
            pass = false;
            let mut values_map = std::collections::BTreeMap::new();
            values_map.insert("h".to_string(), format_significant(values[i], 6));
            values_map.insert("h_min".to_string(), format_significant(min_value, 6));
            values_map.insert("h_max".to_string(), format_significant(max_value, 6));
            record(
                &mut violations,
                &mut counts,
                Violation {
                    kind: "endpoint-bounds".to_string(),
                    partition_a: p.render(),
                    partition_b: None,
                    values: values_map,
                },
            );
        }
    }

    Ok(MeasureReport {
        measure: h.name().to_string(),
        n: u.len(),
        pass,
        violations,
    })
}
