//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when constructing or combining the types of
/// this crate.
///
/// Operations on two values built over different universes report
/// [`Error::UniverseMismatch`] rather than silently comparing indices; all
/// label lookups report the offending label.
#[derive(Debug, Error)]
pub enum Error {
    /// A universe must contain at least one element.
    #[error("universe must be nonempty")]
    EmptyUniverse,

    /// The same label appeared twice where distinct labels are required.
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    /// A label was not found in the universe it was resolved against.
    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    /// The operands were built over different universes.
    #[error("operands belong to different universes")]
    UniverseMismatch,

    /// An element map must assign a target to every source element.
    #[error("element map is not total: `{missing}` has no image")]
    MapNotTotal {
        /// Source element without an image.
        missing: String,
    },

    /// The requested operation is only defined for bijective element maps.
    #[error("element map is not bijective")]
    MapNotBijective,

    /// The two partitions have different block-size multisets, so no
    /// block-matching bijection exists.
    #[error("partitions have different block-size signatures")]
    SignatureMismatch,

    /// Partition blocks must be nonempty.
    #[error("partition block is empty")]
    EmptyBlock,

    /// Partition blocks must be pairwise disjoint.
    #[error("element `{label}` appears in more than one block")]
    OverlappingBlocks {
        /// Element found in at least two blocks.
        label: String,
    },

    /// Partition blocks must cover the whole universe.
    #[error("element `{label}` is not covered by any block")]
    IncompleteCover {
        /// Element missing from every block.
        label: String,
    },

    /// Exhaustive enumeration is capped to keep run times sane.
    #[error("universe of size {size} exceeds the enumeration bound of {max}")]
    UniverseTooLarge {
        /// Size of the offending universe.
        size: usize,
        /// The documented bound.
        max: usize,
    },

    /// A partition or subset literal could not be parsed.
    #[error("cannot parse literal: {0}")]
    Parse(String),

    /// The measure's defining formula divides by a quantity that is zero at
    /// this universe size.
    #[error("measure `{measure}` is undefined on a universe of size {size}")]
    MeasureUndefined {
        /// Name of the measure.
        measure: String,
        /// Universe size at which it is undefined.
        size: usize,
    },

    /// The strong Pawlak composition divides by the measure's value on the
    /// one-block partition, which is zero here.
    #[error("measure `{measure}` vanishes on the one-block partition; it cannot normalize a roughness measure")]
    DegenerateNormalizer {
        /// Name of the measure.
        measure: String,
    },

    /// No measure is registered under this name.
    #[error("unknown measure `{0}`")]
    UnknownMeasure(String),

    /// Low-level CSV error that does not fit a more specific variant.
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    /// I/O failure while reading a table.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// The CSV header row is unusable.
    #[error("bad table header: {0}")]
    BadHeader(String),

    /// Two rows share the same object id.
    #[error("duplicate object id `{0}`")]
    DuplicateId(String),

    /// A row has a different number of fields than the header.
    #[error("row at line {row} has the wrong number of fields")]
    RaggedRow {
        /// 1-based line number within the file.
        row: u64,
    },

    /// A cell is empty; tables must be total.
    #[error("missing value at line {row}, column `{column}`")]
    MissingValue {
        /// 1-based line number within the file.
        row: u64,
        /// Column name of the empty cell.
        column: String,
    },

    /// The table has a header but no data rows, or is empty altogether.
    #[error("table contains no objects")]
    EmptyTable,

    /// A named attribute does not exist in the table.
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),

    /// An attribute selection must name at least one attribute.
    #[error("attribute selection is empty")]
    NoAttributes,
}
