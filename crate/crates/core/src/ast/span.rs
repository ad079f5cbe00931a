use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

/// A region of a source file. Lines and columns are 1-based; the end position
/// is inclusive (it names the last character of the region).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub file: Arc<str>,
    pub start_line: u32,
    pub start_col: u32,
    pub end_line: u32,
    pub end_col: u32,
}

impl SourceSpan {
    pub fn new(file: Arc<str>, start: (u32, u32), end: (u32, u32)) -> Self {
        debug_assert!(start.0 <= end.0);
        debug_assert!(start.0 != end.0 || start.1 <= end.1);
        SourceSpan {
            file,
            start_line: start.0,
            start_col: start.1,
            end_line: end.0,
            end_col: end.1,
        }
    }

    /// Smallest span covering both `self` and `other`.
    pub fn cover(&self, other: &SourceSpan) -> SourceSpan {
        let start = (self.start_line, self.start_col).min((other.start_line, other.start_col));
        let end = (self.end_line, self.end_col).max((other.end_line, other.end_col));
        SourceSpan::new(self.file.clone(), start, end)
    }

    pub fn lines(&self) -> std::ops::RangeInclusive<u32> {
        self.start_line..=self.end_line
    }

    pub fn is_single_line(&self) -> bool {
        self.start_line == self.end_line
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}-{}:{}",
            self.start_line, self.start_col, self.end_line, self.end_col
        )
    }
}

impl Serialize for SourceSpan {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("SourceSpan", 5)?;
        s.serialize_field("file", &*self.file)?;
        s.serialize_field("startLine", &self.start_line)?;
        s.serialize_field("startCol", &self.start_col)?;
        s.serialize_field("endLine", &self.end_line)?;
        s.serialize_field("endCol", &self.end_col)?;
        s.end()
    }
}
