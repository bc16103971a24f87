//! Backtracking generation of Cayley tables satisfying the axioms.

use rayon::prelude::*;

use crate::algebra::{validate, FiniteBck};
use crate::Element;

use super::canonical::is_canonical;

const UNSET: Element = Element::MAX;

/// A partially filled table. Row 0, column 0 and the diagonal are forced
/// (`0*y = 0`, `x*0 = x`, `x*x = 0`); the remaining cells are filled row by
/// row.
#[derive(Clone)]
struct Partial {
    n: usize,
    t: Vec<Element>,
}

impl Partial {
    fn new(n: usize) -> Self {
        let mut t = vec![UNSET; n * n];
        for x in 0..n {
            t[x] = 0;
            t[x * n] = x;
            t[x * n + x] = 0;
        }
        Partial { n, t }
    }

    #[inline]
    fn get(&self, x: Element, y: Element) -> Element {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            self.t[x * self.n + y]
        }
    }

    /// Checks every constraint whose cells are all assigned.
    ///
    /// Besides the axioms this uses `(x*y)*x = 0`, which holds in every
    /// BCK-algebra.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                if a != b && ab == 0 && self.get(b, a) == 0 {
                    return false;
                }
                let v = self.get(ab, a);
                if v != UNSET && v != 0 {
                    return false;
                }
                let v = self.get(self.get(a, ab), b);
                if v != UNSET && v != 0 {
                    return false;
                }
                for c in 0..n {
                    let v = self.get(self.get(ab, self.get(a, c)), self.get(c, b));
                    if v != UNSET && v != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn free_cells(n: usize) -> Vec<(Element, Element)> {
    (1..n)
        .flat_map(|x| (1..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect()
}

fn fill(
    p: &mut Partial,
    cells: &[(Element, Element)],
    i: usize,
    emit: &mut dyn FnMut(&Partial),
) {
    let Some(&(x, y)) = cells.get(i) else {
        emit(p);
        return;
    };
    for v in 0..p.n {
        p.t[x * p.n + y] = v;
        if p.consistent() {
            fill(p, cells, i + 1, emit);
        }
    }
    p.t[x * p.n + y] = UNSET;
}

/// Every labeled BCK-algebra of order `n` whose table is its own canonical
/// form, i.e. one representative per isomorphism class, sorted by table.
///
/// Work is split by the contents of row 1 and run on the current rayon pool.
pub fn canonical_tables(n: usize) -> Vec<FiniteBck> {
    assert!(n >= 1);
    if n <= 2 {
        // nothing to choose: the table is forced
        let p = Partial::new(n);
        return vec![FiniteBck::from_flat_unchecked(n, p.t)];
    }
    let cells = free_cells(n);
    let row1 = n - 2;

    let mut prefixes = Vec::new();
    fill(&mut Partial::new(n), &cells[..row1], 0, &mut |p| prefixes.push(p.clone()));

    let mut found: Vec<FiniteBck> = prefixes
        .into_par_iter()
        .flat_map_iter(|mut p| {
            let mut local = Vec::new();
            fill(&mut p, &cells, row1, &mut |done| {
                let rows: Vec<Vec<Element>> = done.t.chunks(n).map(<[_]>::to_vec).collect();
                debug_assert!(validate(&rows).unwrap().is_valid());
                let a = FiniteBck::from_flat_unchecked(n, done.t.clone());
                if is_canonical(&a) {
                    local.push(a);
                }
            });
            local
        })
        .collect();
    found.sort_by(|a, b| a.flat_table().cmp(b.flat_table()));
    found
}

/// Every labeled BCK-algebra of order `n`, without isomorphism reduction.
pub fn labeled_tables(n: usize) -> Vec<FiniteBck> {
    assert!(n >= 1);
    let cells = free_cells(n);
    let mut out = Vec::new();
    fill(&mut Partial::new(n), &cells, 0, &mut |p| {
        out.push(FiniteBck::from_flat_unchecked(n, p.t.clone()))
    });
    out
}
