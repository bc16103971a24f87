//! Brute-force oracles shared by the integration tests. They use only table
//! lookups, never the library's closures, series or search.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use bck_core::enumerate::enumerate_bck;
use bck_core::{Element, FiniteBck};
use itertools::Itertools;

pub fn meet(a: &FiniteBck, x: Element, y: Element) -> Element {
    a.op(y, a.op(y, x))
}

pub fn comm(a: &FiniteBck, x: Element, y: Element) -> Element {
    a.op(meet(a, x, y), meet(a, y, x))
}

/// Left-normed `[x0, x1, .., xk]`.
pub fn comm_fold(a: &FiniteBck, xs: &[Element]) -> Element {
    xs[1..].iter().fold(xs[0], |acc, &y| comm(a, acc, y))
}

/// `x ∈ (S]` iff some left-associated product `x*s1*..*sk` with `si ∈ S` is
/// `0`. Searches the values reachable from `x` by right multiplication.
pub fn eq8_member(a: &FiniteBck, s: &BTreeSet<Element>, x: Element) -> bool {
    let mut seen = BTreeSet::from([x]);
    let mut frontier = vec![x];
    while let Some(v) = frontier.pop() {
        if v == 0 {
            return true;
        }
        for &g in s {
            let w = a.op(v, g);
            if seen.insert(w) {
                frontier.push(w);
            }
        }
    }
    false
}

pub fn eq8_ideal(a: &FiniteBck, s: &BTreeSet<Element>) -> BTreeSet<Element> {
    a.elements().filter(|&x| eq8_member(a, s, x)).collect()
}

/// Closure under the operation by repeated squaring of the set.
pub fn generated(a: &FiniteBck, s: &BTreeSet<Element>) -> BTreeSet<Element> {
    let mut cur = s.clone();
    cur.insert(0);
    loop {
        let next: BTreeSet<Element> = cur
            .iter()
            .flat_map(|&x| cur.iter().map(move |&y| (x, y)))
            .map(|(x, y)| a.op(x, y))
            .chain(cur.iter().copied())
            .collect();
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// `{x | [x, y1, .., yk] = 0 for all y}` by enumerating every k-tuple.
pub fn tuple_raw_set(a: &FiniteBck, k: usize) -> BTreeSet<Element> {
    a.elements()
        .filter(|&x| {
            (0..k)
                .map(|_| a.elements())
                .multi_cartesian_product()
                .all(|ys| {
                    let mut t = vec![x];
                    t.extend(ys);
                    comm_fold(a, &t) == 0
                })
        })
        .collect()
}

/// All five axioms, checked literally.
pub fn is_bck(t: &[Element], n: usize) -> bool {
    let op = |x: Element, y: Element| t[x * n + y];
    for x in 0..n {
        if op(x, x) != 0 || op(0, x) != 0 {
            return false;
        }
        for y in 0..n {
            if x != y && op(x, y) == 0 && op(y, x) == 0 {
                return false;
            }
            if op(op(x, op(x, y)), y) != 0 {
                return false;
            }
            for z in 0..n {
                if op(op(op(x, y), op(x, z)), op(z, y)) != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Least relabeled table fixing `0`, by trying every permutation.
pub fn brute_canonical(t: &[Element], n: usize) -> Vec<Element> {
    (1..n)
        .permutations(n.saturating_sub(1))
        .map(|tail| {
            let p: Vec<Element> = std::iter::once(0).chain(tail).collect();
            let mut r = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    r[p[x] * n + p[y]] = p[t[x * n + y]];
                }
            }
            r
        })
        .min()
        .expect("at least one permutation")
}

/// Generate-and-test over every assignment of the cells not forced by
/// `0*x = 0`, `x*0 = x`, `x*x = 0`; returns the set of canonical tables.
pub fn naive_canonical_set(n: usize) -> BTreeSet<Vec<Element>> {
    let free: Vec<(Element, Element)> = (1..n)
        .flat_map(|x| (1..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = BTreeSet::new();
    for vals in free.iter().map(|_| 0..n).multi_cartesian_product() {
        let mut t = vec![0; n * n];
        for x in 0..n {
            t[x * n] = x;
        }
        for (&(x, y), v) in free.iter().zip(vals) {
            t[x * n + y] = v;
        }
        if is_bck(&t, n) {
            out.insert(brute_canonical(&t, n));
        }
    }
    if n <= 2 {
        let mut t = vec![0; n * n];
        for x in 0..n {
            t[x * n] = x;
        }
        out.insert(t);
    }
    out
}

/// Every isomorphism class of order `1..=5`, computed once per test binary.
pub fn catalog() -> &'static [FiniteBck] {
    static CATALOG: OnceLock<Vec<FiniteBck>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        (1..=5)
            .flat_map(|n| enumerate_bck(n).expect("within ceiling"))
            .collect()
    })
}

pub fn to_set(s: &bck_core::ElementSet) -> BTreeSet<Element> {
    s.iter().collect()
}

/// All subsets of the carrier, as bit masks.
pub fn subsets(a: &FiniteBck) -> impl Iterator<Item = BTreeSet<Element>> + '_ {
    let n = a.order();
    (0u32..(1 << n)).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn is_ideal(a: &FiniteBck, s: &BTreeSet<Element>) -> bool {
    s.contains(&0)
        && a.elements().all(|x| {
            a.elements()
                .all(|y| !(s.contains(&a.op(x, y)) && s.contains(&y)) || s.contains(&x))
        })
}
