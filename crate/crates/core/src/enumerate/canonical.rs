use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::algebra::FiniteBck;
use crate::error::{BckError, Result};
use crate::Element;

/// Largest order for which canonical forms are computed; the search visits
/// `(n-1)!` relabelings.
pub const CANONICAL_MAX_ORDER: usize = 9;

/// Lexicographically least row-major Cayley table over all relabelings that
/// fix `0`. Two algebras are isomorphic iff their canonical forms agree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_algebra(&self) -> FiniteBck {
        FiniteBck::from_flat_unchecked(
            self.order,
            self.bytes.iter().map(|&b| b as Element).collect(),
        )
    }

    /// One base-36 digit per cell, row-major.
    pub fn to_base36(&self) -> String {
        self.bytes
            .iter()
            .map(|&b| char::from_digit(b as u32, 36).expect("order at most 36"))
            .collect()
    }

    /// Parses [`CanonicalForm::to_base36`] output, checking that the table is
    /// a BCK-algebra and already canonical.
    pub fn from_base36(order: usize, digits: &str) -> Result<Self> {
        if order == 0 || order > CANONICAL_MAX_ORDER {
            return Err(BckError::Malformed(format!(
                "order {order} outside 1..={CANONICAL_MAX_ORDER}"
            )));
        }
        if digits.chars().count() != order * order {
            return Err(BckError::Malformed(format!(
                "expected {} digits for order {order}, found {}",
                order * order,
                digits.chars().count()
            )));
        }
        let mut table = Vec::with_capacity(order * order);
        for c in digits.chars() {
            let d = c
                .to_digit(36)
                .filter(|&d| (d as usize) < order)
                .ok_or_else(|| BckError::Malformed(format!("bad table digit {c:?}")))?;
            table.push(d as Element);
        }
        let a = FiniteBck::from_flat(order, table)?;
        let form = canonical_form(&a);
        if form.bytes.iter().map(|&b| b as Element).ne(a.flat_table().iter().copied()) {
            return Err(BckError::Malformed("table is not in canonical form".into()));
        }
        Ok(form)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_base36())
    }
}

/// Compares `relabel(t, perm)` against `other` cell by cell without
/// building the relabeled table. `inv` is the inverse of `perm`.
fn compare_relabeled(
    t: &[Element],
    other: &[Element],
    n: usize,
    perm: &[Element],
    inv: &[Element],
) -> Ordering {
    for i in 0..n {
        for j in 0..n {
            let relabeled = perm[t[inv[i] * n + inv[j]]];
            match relabeled.cmp(&other[i * n + j]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
    }
    Ordering::Equal
}

fn relabeled(t: &[Element], n: usize, perm: &[Element]) -> Vec<Element> {
    let mut out = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x] * n + perm[y]] = perm[t[x * n + y]];
        }
    }
    out
}

fn permutations_fixing_zero(n: usize) -> impl Iterator<Item = (Vec<Element>, Vec<Element>)> {
    (1..n).permutations(n.saturating_sub(1)).map(move |tail| {
        let perm: Vec<Element> = std::iter::once(0).chain(tail).collect();
        let mut inv = vec![0; perm.len()];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        (perm, inv)
    })
}

/// Minimum over all `(n-1)!` relabelings fixing `0`.
pub fn canonical_form(a: &FiniteBck) -> CanonicalForm {
    let n = a.order();
    assert!(
        n <= CANONICAL_MAX_ORDER,
        "canonical forms are limited to order {CANONICAL_MAX_ORDER}"
    );
    let t = a.flat_table();
    let mut best: Vec<Element> = t.to_vec();
    for (perm, inv) in permutations_fixing_zero(n) {
        if compare_relabeled(t, &best, n, &perm, &inv) == Ordering::Less {
            best = relabeled(t, n, &perm);
        }
    }
    CanonicalForm {
        order: n,
        bytes: best.into_iter().map(|e| e as u8).collect(),
    }
}

/// True if no relabeling fixing `0` yields a smaller table.
pub fn is_canonical(a: &FiniteBck) -> bool {
    let n = a.order();
    let t = a.flat_table();
    permutations_fixing_zero(n).all(|(perm, inv)| compare_relabeled(t, t, n, &perm, &inv) != Ordering::Less)
}
