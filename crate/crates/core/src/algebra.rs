//! Finite BCK-algebras as Cayley tables and their elementary term operations.

use std::fmt;

use crate::error::{BckError, Result};
use crate::set::ElementSet;
use crate::Element;

/// One of the five defining axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `((x*y)*(x*z))*(z*y) = 0`
    Bck1,
    /// `(x*(x*y))*y = 0`
    Bck2,
    /// `x*x = 0`
    Bck3,
    /// `0*x = 0`
    Bck4,
    /// `x*y = 0` and `y*x = 0` imply `x = y`
    Bck5,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::Bck1, Axiom::Bck2, Axiom::Bck3, Axiom::Bck4, Axiom::Bck5];

    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Bck1 => "BCK1",
            Axiom::Bck2 => "BCK2",
            Axiom::Bck3 => "BCK3",
            Axiom::Bck4 => "BCK4",
            Axiom::Bck5 => "BCK5",
        }
    }

    /// Names of the variables in a witness tuple.
    fn variables(self) -> &'static [&'static str] {
        match self {
            Axiom::Bck1 => &["x", "y", "z"],
            Axiom::Bck2 | Axiom::Bck5 => &["x", "y"],
            Axiom::Bck3 | Axiom::Bck4 => &["x"],
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// Lexicographically first offending assignment of the axiom's variables.
    pub witness: Vec<Element>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at ", self.axiom)?;
        for (i, (name, value)) in self.axiom.variables().iter().zip(&self.witness).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

/// Outcome of checking a table against the axioms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("PASS");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks that `rows` is a square table of in-range indices.
fn check_shape(rows: &[Vec<Element>]) -> Result<usize> {
    let n = rows.len();
    if n == 0 {
        return Err(BckError::Malformed("empty table".into()));
    }
    for (x, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(BckError::Malformed(format!(
                "row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(BckError::Malformed(format!(
                "entry ({x},{y}) = {v} is outside 0..{n}"
            )));
        }
    }
    Ok(n)
}

/// Checks every axiom by brute force over all pairs and triples.
///
/// Each violated axiom is reported once with its lexicographically first
/// witness. Structural problems are an `Err`, not a violation.
pub fn validate(rows: &[Vec<Element>]) -> Result<ValidationReport> {
    let n = check_shape(rows)?;
    let t = |x: Element, y: Element| rows[x][y];
    let mut first: [Option<Vec<Element>>; 5] = Default::default();
    let mut note = |axiom: Axiom, w: &[Element]| {
        let slot = &mut first[axiom as usize];
        if slot.is_none() {
            *slot = Some(w.to_vec());
        }
    };

    for x in 0..n {
        if t(x, x) != 0 {
            note(Axiom::Bck3, &[x]);
        }
        if t(0, x) != 0 {
            note(Axiom::Bck4, &[x]);
        }
        for y in 0..n {
            if t(t(x, t(x, y)), y) != 0 {
                note(Axiom::Bck2, &[x, y]);
            }
            if x != y && t(x, y) == 0 && t(y, x) == 0 {
                note(Axiom::Bck5, &[x.min(y), x.max(y)]);
            }
            for z in 0..n {
                if t(t(t(x, y), t(x, z)), t(z, y)) != 0 {
                    note(Axiom::Bck1, &[x, y, z]);
                }
            }
        }
    }

    let violations = Axiom::ALL
        .iter()
        .zip(first)
        .filter_map(|(&axiom, w)| w.map(|witness| Violation { axiom, witness }))
        .collect();
    Ok(ValidationReport { violations })
}

/// A finite BCK-algebra on the carrier `{0, .., n-1}` with constant `0`.
///
/// Instances always satisfy the axioms; construction from a table that does
/// not is refused.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteBck {
    order: usize,
    table: Vec<Element>,
}

impl FiniteBck {
    /// Builds an algebra from a row-major table where `rows[x][y] = x*y`.
    pub fn new(rows: &[Vec<Element>]) -> Result<Self> {
        let report = validate(rows)?;
        if !report.is_valid() {
            return Err(BckError::Axioms(report));
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Builds from a flat row-major table of length `order * order`.
    pub fn from_flat(order: usize, table: Vec<Element>) -> Result<Self> {
        if table.len() != order * order {
            return Err(BckError::Malformed(format!(
                "flat table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        let rows: Vec<Vec<Element>> = table.chunks(order.max(1)).map(<[_]>::to_vec).collect();
        Self::new(&rows)
    }

    pub(crate) fn from_rows_unchecked(rows: &[Vec<Element>]) -> Self {
        FiniteBck {
            order: rows.len(),
            table: rows.concat(),
        }
    }

    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<Element>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteBck { order, table }
    }

    /// The one-element algebra `{0}`.
    pub fn trivial() -> Self {
        FiniteBck {
            order: 1,
            table: vec![0],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::zero(self.order)
    }

    pub fn set<I: IntoIterator<Item = Element>>(&self, elements: I) -> ElementSet {
        ElementSet::from_elements(self.order, elements)
    }

    /// `x * y`.
    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y]
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn flat_table(&self) -> &[Element] {
        &self.table
    }

    pub fn check_element(&self, e: Element) -> Result<()> {
        if e < self.order {
            Ok(())
        } else {
            Err(BckError::OutOfRange {
                element: e,
                order: self.order,
            })
        }
    }

    pub fn check_set(&self, s: &ElementSet) -> Result<()> {
        if s.universe() == self.order {
            Ok(())
        } else {
            Err(BckError::UniverseMismatch {
                expected: self.order,
                found: s.universe(),
            })
        }
    }

    /// `x <= y` iff `x*y = 0`.
    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.op(x, y) == 0
    }

    /// Strict order.
    pub fn lt(&self, x: Element, y: Element) -> bool {
        x != y && self.leq(x, y)
    }

    /// `x ∧ y = y*(y*x)`, a lower bound of `x` and `y`.
    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.op(y, self.op(y, x))
    }

    pub fn meet_table(&self) -> Vec<Vec<Element>> {
        self.elements()
            .map(|x| self.elements().map(|y| self.meet(x, y)).collect())
            .collect()
    }

    /// Pseudo-commutator `[x,y] = (x∧y)*(y∧x)`.
    #[inline]
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        self.op(self.meet(x, y), self.meet(y, x))
    }

    /// Left-normed commutator `[x1, .., xc] = [[x1, .., x(c-1)], xc]`.
    pub fn weighted_commutator(&self, xs: &[Element]) -> Result<Element> {
        let (&first, rest) = xs.split_first().ok_or(BckError::EmptyCommutator)?;
        Ok(rest.iter().fold(first, |acc, &y| self.commutator(acc, y)))
    }

    /// Elements with nothing strictly above them.
    pub fn maximal_elements(&self) -> ElementSet {
        self.set(
            self.elements()
                .filter(|&x| !self.elements().any(|y| self.lt(x, y))),
        )
    }

    pub fn commutes(&self, x: Element, y: Element) -> bool {
        self.meet(x, y) == self.meet(y, x)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| (x + 1..self.order).all(|y| self.commutes(x, y)))
    }

    /// Elements commuting with every element.
    pub fn commuting_center(&self) -> ElementSet {
        self.set(
            self.elements()
                .filter(|&x| self.elements().all(|y| self.commutes(x, y))),
        )
    }

    /// Length of the longest strict chain from `0` up to `x`.
    pub fn level(&self, x: Element) -> usize {
        let mut level = vec![0usize; self.order];
        // Elements sorted by number of strict lower bounds give a linear extension.
        let mut by_height: Vec<Element> = self.elements().collect();
        by_height.sort_by_key(|&e| self.elements().filter(|&d| self.lt(d, e)).count());
        for &e in &by_height {
            level[e] = self
                .elements()
                .filter(|&d| self.lt(d, e))
                .map(|d| level[d] + 1)
                .max()
                .unwrap_or(0);
        }
        level[x]
    }
}

impl fmt::Debug for FiniteBck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteBck")
            .field("order", &self.order)
            .field("table", &self.rows())
            .finish()
    }
}
