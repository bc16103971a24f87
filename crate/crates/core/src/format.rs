//! Text formats: `.bck` Cayley tables, catalog lines and element sets.
//!
//! A `.bck` file holds the order `n` on its first non-comment line followed
//! by `n` rows of `n` whitespace-separated tokens. Lines starting with `#`
//! and blank lines are ignored. If every token is an integer in `0..n` the
//! table is taken literally; otherwise tokens are labels, the zero is the
//! label on the diagonal, and elements are renumbered so that zero is `0`
//! and the others keep their row order.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::FiniteBck;
use crate::enumerate::{CanonicalForm, SweepRecord};
use crate::set::ElementSet;
use crate::Element;

/// Refuse orders above this when reading files.
pub const MAX_FILE_ORDER: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; 0 when the error is not tied to a line.
    pub line: usize,
    /// 1-based column or field number; 0 when not applicable.
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.col) {
            (0, _) => write!(f, "{}", self.message),
            (l, 0) => write!(f, "line {l}: {}", self.message),
            (l, c) => write!(f, "line {l}, column {c}: {}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// A parsed table, not yet checked against the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    /// Original label of each element after renumbering.
    pub labels: Vec<String>,
    pub rows: Vec<Vec<Element>>,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn tokens(line: &str, line_no: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    line: line_no,
                    col: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

pub fn parse_bck(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (order_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, 0, "empty input"))?;
    let header_tokens = tokens(header, order_line);
    if header_tokens.len() != 1 {
        return Err(ParseError::new(order_line, 1, "expected the order alone on this line"));
    }
    let n: usize = header_tokens[0]
        .text
        .parse()
        .map_err(|_| ParseError::new(order_line, header_tokens[0].col, "order is not a number"))?;
    if n == 0 || n > MAX_FILE_ORDER {
        return Err(ParseError::new(
            order_line,
            header_tokens[0].col,
            format!("order must be in 1..={MAX_FILE_ORDER}"),
        ));
    }

    let mut grid: Vec<Vec<Token>> = Vec::new();
    let mut last_line = order_line;
    for (line_no, line) in lines {
        if grid.len() == n {
            return Err(ParseError::new(line_no, 1, format!("more than {n} rows")));
        }
        let row = tokens(line, line_no);
        if row.len() != n {
            return Err(ParseError::new(
                line_no,
                0,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        grid.push(row);
        last_line = line_no;
    }
    if grid.len() != n {
        return Err(ParseError::new(
            last_line,
            0,
            format!("expected {n} rows, found {}", grid.len()),
        ));
    }

    let literal: Option<Vec<Vec<Element>>> = grid
        .iter()
        .map(|row| {
            row.iter()
                .map(|t| t.text.parse::<Element>().ok().filter(|&v| v < n))
                .collect()
        })
        .collect();
    if let Some(rows) = literal {
        return Ok(AlgebraFile {
            labels: (0..n).map(|i| i.to_string()).collect(),
            rows,
        });
    }
    relabel_symbolic(&grid, n)
}

fn relabel_symbolic(grid: &[Vec<Token>], n: usize) -> Result<AlgebraFile, ParseError> {
    let zero = grid[0][0].text;
    for (i, row) in grid.iter().enumerate() {
        let t = &row[i];
        if t.text != zero {
            return Err(ParseError::new(
                t.line,
                t.col,
                format!("diagonal entry {:?} differs from {zero:?}", t.text),
            ));
        }
    }
    let zero_row = grid
        .iter()
        .position(|row| row.iter().all(|t| t.text == zero))
        .ok_or_else(|| ParseError::new(grid[0][0].line, 0, format!("no row is all {zero:?}")))?;

    // column `zero_row` holds x*0 = x, which names every row
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, row) in grid.iter().enumerate() {
        let t = &row[zero_row];
        if index.insert(t.text, i).is_some() {
            return Err(ParseError::new(
                t.line,
                t.col,
                format!("label {:?} names two rows", t.text),
            ));
        }
    }
    if index.get(zero) != Some(&zero_row) {
        return Err(ParseError::new(
            grid[zero_row][zero_row].line,
            0,
            "zero row does not act as identity on the right",
        ));
    }

    let order: Vec<usize> = std::iter::once(zero_row)
        .chain((0..n).filter(|&i| i != zero_row))
        .collect();
    let mut new_index = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let mut rows = vec![vec![0; n]; n];
    for (i, row) in grid.iter().enumerate() {
        for (j, t) in row.iter().enumerate() {
            let v = *index
                .get(t.text)
                .ok_or_else(|| ParseError::new(t.line, t.col, format!("unknown label {:?}", t.text)))?;
            rows[new_index[i]][new_index[j]] = new_index[v];
        }
    }
    Ok(AlgebraFile {
        labels: order.iter().map(|&i| grid[i][zero_row].text.to_string()).collect(),
        rows,
    })
}

/// Writes a table with integer labels, readable by [`parse_bck`].
pub fn write_bck(a: &FiniteBck) -> String {
    let n = a.order();
    let width = (n.saturating_sub(1)).to_string().len();
    let mut out = format!("{n}\n");
    for x in a.elements() {
        let row: Vec<String> = a.row(x).iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses `{0,1,2}`, `0,1,2` or `0 1 2` into a set over `universe`.
pub fn parse_element_set(s: &str, universe: usize) -> Result<ElementSet, ParseError> {
    let inner = s.trim();
    let inner = inner
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(inner);
    let mut set = ElementSet::empty(universe);
    for (i, part) in inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .enumerate()
    {
        let e: Element = part
            .parse()
            .map_err(|_| ParseError::new(0, i + 1, format!("{part:?} is not an element")))?;
        if e >= universe {
            return Err(ParseError::new(
                0,
                i + 1,
                format!("element {e} is outside 0..{universe}"),
            ));
        }
        set.insert(e);
    }
    Ok(set)
}

/// One line of a catalog file:
/// `order<TAB>table<TAB>nilclass<TAB>solvclass<TAB>commutative`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRecord {
    pub canonical: CanonicalForm,
    pub nilpotence_class: usize,
    pub solvability_class: usize,
    pub commutative: bool,
}

impl From<&SweepRecord> for CatalogRecord {
    fn from(r: &SweepRecord) -> Self {
        CatalogRecord {
            canonical: r.canonical.clone(),
            nilpotence_class: r.nilpotence_class,
            solvability_class: r.solvability_class,
            commutative: r.commutative,
        }
    }
}

impl CatalogRecord {
    pub fn order(&self) -> usize {
        self.canonical.order()
    }

    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.order(),
            self.canonical,
            self.nilpotence_class,
            self.solvability_class,
            u8::from(self.commutative)
        )
    }

    /// Parses a line, checking that the table is canonical. The class fields
    /// are taken as given.
    pub fn parse_line(line: &str) -> Result<Self, ParseError> {
        let line = line.strip_suffix('\n').unwrap_or(line);
        let line = line.strip_suffix('\r').unwrap_or(line);
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(ParseError::new(
                0,
                0,
                format!("expected 5 tab-separated fields, found {}", fields.len()),
            ));
        }
        let num = |i: usize| -> Result<usize, ParseError> {
            fields[i]
                .parse()
                .map_err(|_| ParseError::new(0, i + 1, format!("{:?} is not a number", fields[i])))
        };
        let order = num(0)?;
        let canonical = CanonicalForm::from_base36(order, fields[1])
            .map_err(|e| ParseError::new(0, 2, e.to_string()))?;
        let commutative = match fields[4] {
            "0" => false,
            "1" => true,
            other => {
                return Err(ParseError::new(0, 5, format!("expected 0 or 1, found {other:?}")))
            }
        };
        Ok(CatalogRecord {
            canonical,
            nilpotence_class: num(2)?,
            solvability_class: num(3)?,
            commutative,
        })
    }
}
