//! Symbolic evaluation in an infinite BCK-algebra on `N ∪ {a_n} ∪ {b_n}`
//! that is nilpotent of class 2 yet has a congruence whose quotient is not a
//! BCK-algebra.

use std::fmt;
use std::str::FromStr;

use crate::error::{BckError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    N,
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WronskiElement {
    pub family: Family,
    pub index: u64,
}

impl WronskiElement {
    pub const ZERO: WronskiElement = WronskiElement::n(0);

    pub const fn n(index: u64) -> Self {
        WronskiElement {
            family: Family::N,
            index,
        }
    }

    pub const fn a(index: u64) -> Self {
        WronskiElement {
            family: Family::A,
            index,
        }
    }

    pub const fn b(index: u64) -> Self {
        WronskiElement {
            family: Family::B,
            index,
        }
    }
}

impl fmt::Display for WronskiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::N => write!(f, "{}", self.index),
            Family::A => write!(f, "a{}", self.index),
            Family::B => write!(f, "b{}", self.index),
        }
    }
}

/// Accepts `7`, `n7`, `a3`, `a_3`, `b12`, `B_12`.
impl FromStr for WronskiElement {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let (family, digits) = match s.chars().next() {
            Some('a' | 'A') => (Family::A, &s[1..]),
            Some('b' | 'B') => (Family::B, &s[1..]),
            Some('n' | 'N') => (Family::N, &s[1..]),
            Some(c) if c.is_ascii_digit() => (Family::N, s),
            _ => return Err(format!("unrecognized element {s:?}")),
        };
        let digits = digits.strip_prefix('_').unwrap_or(digits);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad index in {s:?}"));
        }
        let index = digits
            .parse()
            .map_err(|_| format!("index out of range in {s:?}"))?;
        Ok(WronskiElement { family, index })
    }
}

/// Evaluator restricted to elements with index at most `cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wronski {
    cap: u64,
}

impl Default for Wronski {
    fn default() -> Self {
        Wronski { cap: 64 }
    }
}

impl Wronski {
    pub fn new(cap: u64) -> Self {
        Wronski { cap }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn check(&self, x: WronskiElement) -> Result<()> {
        if x.index > self.cap {
            Err(BckError::IndexCap {
                index: x.index,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn op(&self, x: WronskiElement, y: WronskiElement) -> Result<WronskiElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(op(x, y))
    }

    pub fn meet(&self, x: WronskiElement, y: WronskiElement) -> Result<WronskiElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(meet(x, y))
    }

    /// `[x,y] = (x∧y)*(y∧x)`, evaluated through the operation.
    pub fn commutator(&self, x: WronskiElement, y: WronskiElement) -> Result<WronskiElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(op(meet(x, y), meet(y, x)))
    }
}

/// The defining clauses. Mixed `a`/`b` products are rewritten once into the
/// same-family clause: `a_n*b_m = a_n*a_(m+1)`, `b_n*a_m = b_n*b_(m+1)`.
fn op(x: WronskiElement, y: WronskiElement) -> WronskiElement {
    use Family::*;
    let (n, m) = (x.index, y.index);
    match (x.family, y.family) {
        (N, N) => WronskiElement::n(n.saturating_sub(m)),
        (N, A | B) => WronskiElement::ZERO,
        (A, N) => WronskiElement::a(n + m),
        (B, N) => WronskiElement::b(n + m),
        (A, A) | (B, B) => WronskiElement::n(m.saturating_sub(n)),
        (A, B) => op(x, WronskiElement::a(m + 1)),
        (B, A) => op(x, WronskiElement::b(m + 1)),
    }
}

fn meet(x: WronskiElement, y: WronskiElement) -> WronskiElement {
    op(y, op(y, x))
}

/// Closed form of the commutator: for mixed pairs `[a_n, b_m]` and
/// `[b_n, a_m]` it is `0`, `1` or `2` as `n > m`, `n = m` or `n < m`; every
/// other commutator is `0`.
pub fn commutator_formula(x: WronskiElement, y: WronskiElement) -> WronskiElement {
    use Family::*;
    match (x.family, y.family) {
        (A, B) | (B, A) => WronskiElement::n(match x.index.cmp(&y.index) {
            std::cmp::Ordering::Greater => 0,
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Less => 2,
        }),
        _ => WronskiElement::ZERO,
    }
}
