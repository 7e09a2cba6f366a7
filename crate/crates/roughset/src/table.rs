//! Information tables: CSV-backed object/attribute data and the
//! indiscernibility partitions they induce.
//!
//! An information table assigns each object (row) a value for each
//! attribute (column). A set of attributes P induces the
//! **indiscernibility partition** of the objects: two objects fall in the
//! same block exactly when they agree on every attribute in P. Rough-set
//! approximation under "knowledge P" is approximation under this
//! partition, so the table is the bridge from raw data to everything else
//! in this crate.
//!
//! The on-disk format is RFC 4180 CSV with a mandatory header whose first
//! column is literally `id`; the remaining header fields name the
//! attributes. Object ids become the universe labels in file order. Values
//! are compared byte-for-byte — no trimming, no case folding — and every
//! cell must be nonempty. Errors carry 1-based line numbers within the
//! file (the header is line 1).

use std::collections::HashSet;
use std::fs::File;
use std::io;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::universe::Universe;

/// An object/attribute table with total, string-valued columns.
#[derive(Clone, Debug)]
pub struct InformationTable {
    universe: Arc<Universe>,
    attributes: Vec<String>,
    /// Column-major values: `columns[a][i]` is the value of attribute `a`
    /// on object `i`.
    columns: Vec<Vec<String>>,
}

impl InformationTable {
    /// Loads a table from a CSV file.
    ///
    /// # Errors
    ///
    /// [`Error::Io`] if the file cannot be opened, otherwise as
    /// [`InformationTable::from_reader`].
    pub fn load_csv(path: impl AsRef<Path>) -> Result<InformationTable> {
        InformationTable::from_reader(File::open(path)?)
    }

    /// Reads a table in CSV form.
    ///
    /// # Errors
    ///
    /// - [`Error::EmptyTable`] if the input is empty or has no data rows;
    /// - [`Error::BadHeader`] if the first header field is not literally
    ///   `id`, or two columns share a name;
    /// - [`Error::RaggedRow`] if a row's field count differs from the
    ///   header's;
    /// - [`Error::MissingValue`] for an empty cell;
    /// - [`Error::DuplicateId`] if two rows share an id;
    /// - [`Error::Csv`] for lower-level CSV syntax errors.
    pub fn from_reader(reader: impl io::Read) -> Result<InformationTable> {
        let mut csv_reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .flexible(false)
            .from_reader(reader);
        let headers = csv_reader.headers()?.clone();
        if headers.is_empty() {
            return Err(Error::EmptyTable);
        }
        if &headers[0] != "id" {
            return Err(Error::BadHeader(format!(
                "first column must be `id`, found `{}`",
                &headers[0]
            )));
        }
        let mut seen = HashSet::new();
        for name in headers.iter() {
            if !seen.insert(name) {
                return Err(Error::BadHeader(format!("duplicate column `{name}`")));
            }
        }
        let attributes: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();

        let mut ids: Vec<String> = Vec::new();
        let mut id_seen: HashSet<String> = HashSet::new();
        let mut columns: Vec<Vec<String>> = vec![Vec::new(); attributes.len()];
        for record in csv_reader.records() {
            let record = record.map_err(|e| match e.kind() {
                csv::ErrorKind::UnequalLengths { pos, .. } => Error::RaggedRow {
                    row: pos.as_ref().map(|p| p.line()).unwrap_or(0),
                },
                _ => Error::Csv(e),
            })?;
            let line = record.position().map(|p| p.line()).unwrap_or(0);
            let id = &record[0];
            if id.is_empty() {
                return Err(Error::MissingValue {
                    row: line,
                    column: "id".to_string(),
                });
            }
            if !id_seen.insert(id.to_string()) {
                return Err(Error::DuplicateId(id.to_string()));
            }
            ids.push(id.to_string());
            for (c, attribute) in attributes.iter().enumerate() {
                let value = &record[c + 1];
                if value.is_empty() {
                    return Err(Error::MissingValue {
                        row: line,
                        column: attribute.clone(),
                    });
                }
                columns[c].push(value.to_string());
            }
        }
        if ids.is_empty() {
            return Err(Error::EmptyTable);
        }
        Ok(InformationTable {
            universe: Universe::new(ids)?,
            attributes,
            columns,
        })
    }

    /// The universe of objects, labeled by id in file order.
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Attribute names, in header order.
    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    /// Number of objects.
    pub fn num_objects(&self) -> usize {
        self.universe.len()
    }

    /// The value of `attribute` on the object at `index`.
    ///
    /// # Errors
    ///
    /// [`Error::UnknownAttribute`] if no column has that name.
    ///
    /// # Panics
    ///
    /// If `index` is out of range.
    pub fn value(&self, index: usize, attribute: &str) -> Result<&str> {
        let column = self.attribute_index(attribute)?;
        Ok(&self.columns[column][index])
    }

    fn attribute_index(&self, attribute: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a == attribute)
            .ok_or_else(|| Error::UnknownAttribute(attribute.to_string()))
    }

    /// The partition of the objects into classes agreeing on every named
    /// attribute.
    ///
    /// Using more attributes never merges classes: the partition for
    /// P ∪ Q refines the partition for P.
    ///
    /// # Errors
    ///
    /// [`Error::NoAttributes`] if the selection is empty,
    /// [`Error::UnknownAttribute`] if a name is not a column.
    ///
    /// # Examples
    ///
    /// ```
    /// use roughset::InformationTable;
    ///
    /// let csv = "id,shade\na1,x\na2,y\na3,y\na4,z\na5,z\n";
    /// let table = InformationTable::from_reader(csv.as_bytes()).unwrap();
    /// let p = table.indiscernibility_partition(&["shade"]).unwrap();
    /// assert_eq!(p.render(), "a1|a2,a3|a4,a5");
    /// ```
    pub fn indiscernibility_partition<S: AsRef<str>>(&self, attrs: &[S]) -> Result<Partition> {
        if attrs.is_empty() {
            return Err(Error::NoAttributes);
        }
        let selected: Vec<usize> = attrs
            .iter()
            .map(|a| self.attribute_index(a.as_ref()))
            .collect::<Result<_>>()?;
        Ok(Partition::from_labeling(&self.universe, |i| {
            selected
                .iter()
                .map(|&c| self.columns[c][i].as_str())
                .collect::<Vec<&str>>()
        }))
    }
}
