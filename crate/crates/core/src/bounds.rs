//! Best-known minimum distance bounds for binary `[length, dimension]` codes.
//!
//! Tables are CSV with the header `length,dimension,lower,upper`. Lines
//! starting with `#` are comments. A default table ships with the crate.

use std::collections::BTreeMap;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../data/bounds.csv");
const HEADER: [&str; 4] = ["length", "dimension", "lower", "upper"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsEntry {
    pub length: usize,
    pub dimension: usize,
    pub lower: usize,
    pub upper: usize,
}

impl BoundsEntry {
    fn validate(&self) -> std::result::Result<(), String> {
        if self.lower == 0 || self.lower > self.upper || self.upper > self.length {
            return Err(format!(
                "bounds must satisfy 1 <= lower <= upper <= length, got lower={} upper={} length={}",
                self.lower, self.upper, self.length
            ));
        }
        if self.dimension == 0 || self.dimension > self.length {
            return Err(format!(
                "dimension {} out of range for length {}",
                self.dimension, self.length
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundsTable {
    entries: BTreeMap<(usize, usize), BoundsEntry>,
}

impl BoundsTable {
    /// The table shipped with the crate.
    pub fn bundled() -> Self {
        load_bounds(BUNDLED.as_bytes()).expect("bundled bounds file is valid")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BoundsEntry> {
        self.entries.values()
    }

    pub fn insert(&mut self, entry: BoundsEntry) -> Result<()> {
        entry
            .validate()
            .map_err(|message| Error::Bounds { line: 0, message })?;
        let key = (entry.length, entry.dimension);
        if self.entries.contains_key(&key) {
            return Err(Error::Bounds {
                line: 0,
                message: format!("duplicate entry for [{},{}]", key.0, key.1),
            });
        }
        self.entries.insert(key, entry);
        Ok(())
    }

    pub fn lookup(&self, length: usize, dimension: usize) -> Result<&BoundsEntry> {
        lookup(self, length, dimension)
    }

    /// CSV with header, rows sorted by `(length, dimension)`.
    pub fn to_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        for entry in self.entries.values() {
            wtr.serialize(entry).expect("writing to memory");
        }
        let bytes = wtr.into_inner().expect("writing to memory");
        let mut out = String::from_utf8(bytes).expect("csv output is utf-8");
        if self.entries.is_empty() {
            out = format!("{}\n", HEADER.join(","));
        }
        out
    }
}

/// Parses a bounds table. Errors carry the 1-based line number.
pub fn load_bounds<R: Read>(source: R) -> Result<BoundsTable> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(source);
    let csv_error = |e: csv::Error| Error::Bounds {
        line: e.position().map_or(0, |p| p.line()),
        message: e.to_string(),
    };
    let headers = reader.headers().map_err(csv_error)?.clone();
    if headers.iter().collect::<Vec<_>>() != HEADER {
        return Err(Error::Bounds {
            line: headers.position().map_or(1, |p| p.line()),
            message: format!("expected header `{}`", HEADER.join(",")),
        });
    }
    let mut table = BoundsTable::default();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line());
        let entry: BoundsEntry = record
            .deserialize(Some(&headers))
            .map_err(|e| Error::Bounds {
                line,
                message: e.to_string(),
            })?;
        table.insert(entry).map_err(|e| match e {
            Error::Bounds { message, .. } => Error::Bounds { line, message },
            other => other,
        })?;
    }
    Ok(table)
}

/// The entry for `[length, dimension]`, or [`Error::BoundsNotFound`].
pub fn lookup(table: &BoundsTable, length: usize, dimension: usize) -> Result<&BoundsEntry> {
    table
        .entries
        .get(&(length, dimension))
        .ok_or(Error::BoundsNotFound { length, dimension })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(s: &str) -> Result<BoundsTable> {
        load_bounds(s.as_bytes())
    }

    #[test]
    fn parses_rows() {
        let t = load("length,dimension,lower,upper\n38,19,8,9\n50,25,10,12\n30,15,8,8\n").unwrap();
        assert_eq!(t.len(), 3);
        let e = t.lookup(38, 19).unwrap();
        assert_eq!((e.lower, e.upper), (8, 9));
        assert_eq!(t.lookup(50, 25).unwrap().lower, 10);
        assert_eq!(t.lookup(30, 15).unwrap().upper, 8);
    }

    #[test]
    fn not_found_is_distinct() {
        let empty = BoundsTable::default();
        assert_eq!(
            lookup(&empty, 10, 5),
            Err(Error::BoundsNotFound {
                length: 10,
                dimension: 5
            })
        );
    }

    #[test]
    fn reports_line_numbers() {
        let dup = load("length,dimension,lower,upper\n38,19,8,9\n38,19,8,8\n");
        assert!(
            matches!(dup, Err(Error::Bounds { line: 3, ref message }) if message.contains("duplicate"))
        );
        let inverted = load("length,dimension,lower,upper\n30,15,8,8\n38,19,9,8\n");
        assert!(matches!(inverted, Err(Error::Bounds { line: 3, .. })));
        let garbage = load("length,dimension,lower,upper\n30,x,8,8\n");
        assert!(matches!(garbage, Err(Error::Bounds { line: 2, .. })));
        let short = load("length,dimension,lower,upper\n30,15,8\n");
        assert!(matches!(short, Err(Error::Bounds { line: 2, .. })));
        let header = load("n,k,lo,hi\n30,15,8,8\n");
        assert!(matches!(header, Err(Error::Bounds { line: 1, .. })));
        let zero = load("length,dimension,lower,upper\n30,15,0,8\n");
        assert!(zero.is_err());
    }

    #[test]
    fn comments_and_whitespace() {
        let t =
            load("# note\nlength,dimension,lower,upper\n# more\n 60 , 30 , 12 , 14 \n").unwrap();
        assert_eq!(t.lookup(60, 30).unwrap().lower, 12);
    }

    #[test]
    fn bundled_covers_reference_lengths() {
        let t = BoundsTable::bundled();
        for (len, dim) in [(30, 15), (34, 17), (38, 19), (50, 25), (60, 30)] {
            assert!(t.lookup(len, dim).is_ok(), "[{len},{dim}] missing");
        }
        assert_eq!(t.lookup(60, 30).unwrap().lower, 12);
    }
}
