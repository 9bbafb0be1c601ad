//! Cayley tables and their text format.
//!
//! ```text
//! # comment
//! elements: e a
//! e a
//! a e
//! ```
//!
//! Row `i`, column `j` names the composition `x_i * x_j`. Ring files hold an
//! `add:` section followed by a `mul:` section, each a full table over the same
//! element list.

use std::collections::HashMap;
use std::fmt;

use crate::error::{AlgebraError, Result};

/// The composition table of a finite magma.
///
/// Entries are indices into `elements`, so closure holds by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CayleyTable {
    elements: Vec<String>,
    cells: Vec<usize>,
}

impl CayleyTable {
    /// Validates names and rows; `rows[i][j]` is the index of `x_i * x_j`.
    pub fn new(elements: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(AlgebraError::Structure("a table needs at least one element".into()));
        }
        check_unique(&elements)?;
        if rows.len() != n {
            return Err(AlgebraError::Structure(format!("expected {n} rows, got {}", rows.len())));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::Structure(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&k| k >= n) {
                return Err(AlgebraError::Structure(format!("entry {bad} out of range in row {i}")));
            }
            cells.extend(row);
        }
        Ok(Self { elements, cells })
    }

    /// Builds a table by evaluating `op` on every index pair.
    pub fn from_fn(elements: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = elements.len();
        let rows = (0..n).map(|i| (0..n).map(|j| op(i, j)).collect()).collect();
        Self::new(elements, rows)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn index_of_or_err(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| AlgebraError::UnknownElement(name.to_string()))
    }

    /// `x_i * x_j` as an index.
    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.len() + j]
    }

    /// `x * y` by element name.
    pub fn op_named(&self, x: &str, y: &str) -> Result<&str> {
        let (i, j) = (self.index_of_or_err(x)?, self.index_of_or_err(y)?);
        Ok(self.name(self.op(i, j)))
    }

    pub fn row(&self, i: usize) -> &[usize] {
        let n = self.len();
        &self.cells[i * n..(i + 1) * n]
    }

    /// Same composition, elements renamed.
    pub fn rename(&self, elements: Vec<String>) -> Result<Self> {
        if elements.len() != self.len() {
            return Err(AlgebraError::ElementMismatch);
        }
        check_unique(&elements)?;
        Ok(Self {
            elements,
            cells: self.cells.clone(),
        })
    }

    /// The table of the same magma with its elements listed in `order`
    /// (`order[k]` is the old index placed at position `k`).
    pub fn reorder(&self, order: &[usize]) -> Result<Self> {
        let n = self.len();
        let mut pos = vec![usize::MAX; n];
        for (k, &old) in order.iter().enumerate() {
            if old >= n || pos[old] != usize::MAX {
                return Err(AlgebraError::Structure("reorder is not a permutation".into()));
            }
            pos[old] = k;
        }
        if order.len() != n {
            return Err(AlgebraError::Structure("reorder is not a permutation".into()));
        }
        let elements = order.iter().map(|&o| self.elements[o].clone()).collect();
        Self::from_fn(elements, |a, b| pos[self.op(order[a], order[b])])
    }
}

fn check_unique(elements: &[String]) -> Result<()> {
    let mut seen = HashMap::new();
    for (i, e) in elements.iter().enumerate() {
        if e.is_empty() || e.chars().any(char::is_whitespace) || e.contains('#') {
            return Err(AlgebraError::Structure(format!("invalid element name `{e}`")));
        }
        if let Some(prev) = seen.insert(e.as_str(), i) {
            return Err(AlgebraError::Structure(format!(
                "duplicate element `{e}` at positions {prev} and {i}"
            )));
        }
    }
    Ok(())
}

impl fmt::Display for CayleyTable {
    /// Renders the table in its file format, columns padded to a common width.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.elements.iter().map(|e| e.chars().count()).max().unwrap_or(1);
        let pad = |s: &str| format!("{s}{}", " ".repeat(width - s.chars().count()));
        writeln!(f, "elements: {}", self.elements.join(" "))?;
        for i in 0..self.len() {
            let cells: Vec<String> = self.row(i).iter().map(|&k| pad(self.name(k))).collect();
            writeln!(f, "{}", cells.join(" ").trim_end())?;
        }
        Ok(())
    }
}

/// What went wrong while reading a table file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    DuplicateElement(String),
    UnknownSymbol(String),
    RowLength { expected: usize, got: usize },
    RowCount { expected: usize, got: usize },
    MissingSection(&'static str),
    UnexpectedSection(String),
    ElementMismatch,
}

/// A parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct TableParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingHeader => write!(f, "expected `elements:` header"),
            Self::DuplicateElement(e) => write!(f, "duplicate element name `{e}`"),
            Self::UnknownSymbol(s) => write!(f, "unknown symbol `{s}`"),
            Self::RowLength { expected, got } => {
                write!(f, "row has {got} entries, expected {expected}")
            }
            Self::RowCount { expected, got } => write!(f, "table has {got} rows, expected {expected}"),
            Self::MissingSection(s) => write!(f, "missing `{s}` section"),
            Self::UnexpectedSection(s) => write!(f, "unexpected section `{s}`"),
            Self::ElementMismatch => {
                write!(f, "`add:` and `mul:` sections list different elements")
            }
        }
    }
}

impl From<TableParseError> for AlgebraError {
    fn from(e: TableParseError) -> Self {
        AlgebraError::Parse(e.to_string())
    }
}

/// A content line: 1-based line number plus the text with comments removed.
#[derive(Clone, Copy)]
struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn content_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| Line {
            number: i + 1,
            text: raw.split('#').next().unwrap_or(""),
        })
        .filter(|l| !l.text.trim().is_empty())
        .collect()
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in text.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                out.push((c, &text[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &text[b..]));
    }
    out
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> TableParseError {
    TableParseError { line, column, kind }
}

fn parse_lines(lines: &[Line<'_>], end_line: usize) -> Result<CayleyTable, TableParseError> {
    let Some(header) = lines.first() else {
        return Err(err(end_line, 1, ParseErrorKind::MissingHeader));
    };
    let Some(offset) = header.text.find("elements:") else {
        return Err(err(header.number, 1, ParseErrorKind::MissingHeader));
    };
    if !header.text[..offset].trim().is_empty() {
        return Err(err(header.number, 1, ParseErrorKind::MissingHeader));
    }
    let rest_start = offset + "elements:".len();
    let col_shift = header.text[..rest_start].chars().count();
    let names: Vec<(usize, &str)> = tokens(&header.text[rest_start..])
        .into_iter()
        .map(|(c, t)| (c + col_shift, t))
        .collect();
    if names.is_empty() {
        return Err(err(header.number, col_shift + 1, ParseErrorKind::MissingHeader));
    }
    let mut index = HashMap::new();
    for (k, &(col, name)) in names.iter().enumerate() {
        if index.insert(name, k).is_some() {
            return Err(err(header.number, col, ParseErrorKind::DuplicateElement(name.into())));
        }
    }
    let n = names.len();
    let body = &lines[1..];
    let mut rows = Vec::with_capacity(n);
    for line in body {
        if rows.len() == n {
            return Err(err(line.number, 1, ParseErrorKind::RowCount { expected: n, got: body.len() }));
        }
        let toks = tokens(line.text);
        if toks.len() != n {
            let column = toks.get(n).map_or(line.text.chars().count() + 1, |t| t.0);
            return Err(err(line.number, column, ParseErrorKind::RowLength { expected: n, got: toks.len() }));
        }
        let mut row = Vec::with_capacity(n);
        for (col, sym) in toks {
            match index.get(sym) {
                Some(&k) => row.push(k),
                None => return Err(err(line.number, col, ParseErrorKind::UnknownSymbol(sym.into()))),
            }
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(err(end_line, 1, ParseErrorKind::RowCount { expected: n, got: rows.len() }));
    }
    let elements = names.into_iter().map(|(_, s)| s.to_string()).collect();
    CayleyTable::new(elements, rows).map_err(|_| err(header.number, 1, ParseErrorKind::MissingHeader))
}

/// Parses a single Cayley table.
pub fn parse_table(text: &str) -> Result<CayleyTable, TableParseError> {
    let lines = content_lines(text);
    parse_lines(&lines, text.lines().count().max(1))
}

/// Parses a ring file: an `add:` section then a `mul:` section.
pub fn parse_ring(text: &str) -> Result<(CayleyTable, CayleyTable), TableParseError> {
    let lines = content_lines(text);
    let end = text.lines().count().max(1);
    let is_marker = |l: &Line<'_>| l.text.trim().ends_with(':') && !l.text.contains("elements:");
    let markers: Vec<usize> = (0..lines.len()).filter(|&k| is_marker(&lines[k])).collect();
    let section = |name: &'static str, pos: usize| -> Result<usize, TableParseError> {
        match markers.get(pos) {
            Some(&k) if lines[k].text.trim() == name => Ok(k),
            Some(&k) => Err(err(
                lines[k].number,
                1,
                ParseErrorKind::UnexpectedSection(lines[k].text.trim().into()),
            )),
            None => Err(err(end, 1, ParseErrorKind::MissingSection(name))),
        }
    };
    let add_at = section("add:", 0)?;
    let mul_at = section("mul:", 1)?;
    if let Some(&extra) = markers.get(2) {
        let l = lines[extra];
        return Err(err(l.number, 1, ParseErrorKind::UnexpectedSection(l.text.trim().into())));
    }
    if add_at != 0 {
        let l = lines[0];
        return Err(err(l.number, 1, ParseErrorKind::MissingSection("add:")));
    }
    let add = parse_lines(&lines[add_at + 1..mul_at], lines[mul_at].number)?;
    let mul = parse_lines(&lines[mul_at + 1..], end)?;
    if add.elements() != mul.elements() {
        let at = lines.get(mul_at + 1).map_or(lines[mul_at].number, |l| l.number);
        return Err(err(at, 1, ParseErrorKind::ElementMismatch));
    }
    Ok((add, mul))
}

/// Renders a ring in the `add:`/`mul:` file format.
pub fn render_ring(add: &CayleyTable, mul: &CayleyTable) -> String {
    format!("add:\n{add}mul:\n{mul}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_group() {
        let t = parse_table("elements: e a\ne a\na e\n").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.op_named("a", "a").unwrap(), "e");
        assert_eq!(t.op_named("e", "a").unwrap(), "a");
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = parse_table("# Z2\n\nelements: 0 1 # names\n0 1\n\n1 0 # last\n").unwrap();
        assert_eq!(t.elements(), ["0", "1"]);
        assert_eq!(t.op(1, 1), 0);
    }

    #[test]
    fn unknown_symbol_location() {
        let e = parse_table("elements: e a\ne a\na q\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.column, 3);
        assert_eq!(e.kind, ParseErrorKind::UnknownSymbol("q".into()));
    }

    #[test]
    fn duplicate_names() {
        let e = parse_table("elements: e a e\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert_eq!(e.column, 15);
        assert_eq!(e.kind, ParseErrorKind::DuplicateElement("e".into()));
    }

    #[test]
    fn shape_errors() {
        let e = parse_table("elements: e a\ne a\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::RowCount { expected: 2, got: 1 });
        let e = parse_table("elements: e a\ne a a\na e\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        assert_eq!(e.kind, ParseErrorKind::RowLength { expected: 2, got: 3 });
        let e = parse_table("elements: e a\ne a\na e\ne e\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(matches!(e.kind, ParseErrorKind::RowCount { .. }));
        let e = parse_table("e a\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingHeader);
        assert!(parse_table("").is_err());
    }

    #[test]
    fn display_round_trips() {
        let t = parse_table("elements: e α1\ne α1\nα1 e\n").unwrap();
        let text = t.to_string();
        assert_eq!(text, "elements: e α1\ne  α1\nα1 e\n");
        assert_eq!(parse_table(&text).unwrap(), t);
    }

    #[test]
    fn ring_files() {
        let text = "add:\nelements: 0 1\n0 1\n1 0\nmul:\nelements: 0 1\n0 0\n0 1\n";
        let (add, mul) = parse_ring(text).unwrap();
        assert_eq!(add.op(1, 1), 0);
        assert_eq!(mul.op(1, 1), 1);
        assert_eq!(parse_ring(&render_ring(&add, &mul)).unwrap(), (add, mul));

        let mismatch = "add:\nelements: 0 1\n0 1\n1 0\nmul:\nelements: 1 0\n0 0\n0 1\n";
        assert_eq!(parse_ring(mismatch).unwrap_err().kind, ParseErrorKind::ElementMismatch);
        let missing = "add:\nelements: 0\n0\n";
        assert_eq!(parse_ring(missing).unwrap_err().kind, ParseErrorKind::MissingSection("mul:"));
    }

    #[test]
    fn reorder_preserves_structure() {
        let t = parse_table("elements: a b c\na b c\nb c a\nc a b\n").unwrap();
        let r = t.reorder(&[2, 0, 1]).unwrap();
        assert_eq!(r.elements(), ["c", "a", "b"]);
        for x in ["a", "b", "c"] {
            for y in ["a", "b", "c"] {
                assert_eq!(t.op_named(x, y).unwrap(), r.op_named(x, y).unwrap());
            }
        }
    }
}
